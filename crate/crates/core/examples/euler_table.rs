//! Prints the first Euler polynomials, their values at 0 and 1/2, and the
//! Euler numbers, next to the Bernoulli polynomials of the same degree.
//!
//! cargo run --example euler_table -- 8

use euler_identities::euler::EulerCache;
use euler_identities::numeric::{format_rational, rat};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let cache = EulerCache::new();
    let half = rat(1, 2);

    println!("{:>3}  {:<44} {:>8} {:>8} {:>8}", "n", "E_n(x)", "E_n(0)", "E_n(1/2)", "E_n");
    for n in 0..=max {
        let e = cache.euler_poly(n);
        println!(
            "{n:>3}  {:<44} {:>8} {:>8} {:>8}",
            e.to_human("x"),
            format_rational(&e.coeff(0)),
            format_rational(&e.eval(&half)),
            format_rational(&cache.euler_number(n)),
        );
    }

    println!();
    for n in 0..=max.min(6) {
        println!("B_{n}(x) = {}", cache.bernoulli_poly(n).to_human("x"));
    }
}
