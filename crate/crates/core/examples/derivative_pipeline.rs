//! The symmetric kernel
//!
//! `P(x; a) = (x+a)^{m+1}(x+a-s-1)^{n+1} + (-1)^{m+n}(x-a)^{n+1}(x-a-s-1)^{m+1}`
//!
//! built as a polynomial in x whose coefficients are polynomials in a, then
//! differentiated k times and summed with alternating signs over x = 1..s.

use euler_identities::euler::EulerCache;
use euler_identities::identities::statement::{delta, thm2_kernel, thm2_rhs};
use euler_identities::identities::{check_thm2, Residual, Symbolic};

fn main() {
    let cache = EulerCache::new();
    let model = Symbolic { cache: &cache };
    let (m, n, s) = (2, 1, 2);

    let kernel = thm2_kernel(&model, m, n, s);
    println!("P(x; a) coefficients in x:");
    for (i, c) in kernel.coeffs().iter().enumerate() {
        println!("  x^{i}: {}", c.to_human("a"));
    }

    for k in 0..=4 {
        let rhs = thm2_rhs(&model, m, n, s, k);
        let report = check_thm2(m, n, s, k).unwrap();
        let Residual::Poly(residual) = &report.residual else { unreachable!() };
        println!(
            "k = {k}: delta = {:>2}, (2/k!) sum (-1)^l P^(k)(l; a) = {}, residual {}",
            delta(s, k),
            rhs.to_human("a"),
            residual.to_human("a"),
        );
    }
}
