//! Shifting or reflecting the integrand: I(f(x+1)) = I(f(-x)) = -I(f) + 2f(0),
//! checked on seeded random polynomials at increasing precision.

use euler_identities::identities::lem1_poly;
use euler_identities::padic::{is_even_poly, lem1_defect, DEFAULT_BUDGET};
use euler_identities::poly::Poly;
use euler_identities::numeric::rat;

fn main() {
    for p in [3u64, 7] {
        for sample in 0..3 {
            let f = lem1_poly(p, sample, 2024);
            println!("p = {p}, f(x) = {}", f.to_human("x"));
            for precision in 1..=4 {
                let d = lem1_defect(&f, p, precision, DEFAULT_BUDGET).unwrap();
                println!("  N = {precision}: shift {}, reflect {}", d.shift, d.reflect);
            }
        }
    }

    let even = Poly::new(vec![rat(1, 2), rat(0, 1), rat(-3, 4), rat(0, 1), rat(5, 1)]);
    assert!(is_even_poly(&even));
    let d = lem1_defect(&even, 5, 3, DEFAULT_BUDGET).unwrap();
    println!("even f(x) = {}: I(f) - f(0) has valuation {}", even.to_human("x"), d.even.unwrap());
}
