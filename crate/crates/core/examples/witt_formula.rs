//! Truncations of the fermionic integral of (x+a)^n approach E_n(a)
//! p-adically: the error is divisible by p^N at precision N.

use num_bigint::BigInt;

use euler_identities::euler::EulerCache;
use euler_identities::numeric::{format_rational, rat};
use euler_identities::padic::{fermionic_sum_closed, fermionic_sum_naive, shifted_power, witt_defect, DEFAULT_BUDGET};

fn main() {
    let cache = EulerCache::new();
    let (p, n, a) = (5u64, 3usize, rat(-2, 3));
    println!("p = {p}, n = {n}, a = {}, E_n(a) = {}", format_rational(&a), format_rational(&cache.euler_at(n, &a)));
    for precision in 1..=6 {
        let q = BigInt::from(p).pow(precision);
        let closed = fermionic_sum_closed(&cache, n, &a, &q);
        let defect = witt_defect(&cache, n, &a, p, precision).unwrap();
        let naive = match fermionic_sum_naive(shifted_power(&a, n), p, precision, DEFAULT_BUDGET) {
            Ok(s) if s == closed => "naive sum agrees".to_string(),
            Ok(s) => format!("naive sum DIFFERS: {}", format_rational(&s)),
            Err(e) => e.to_string(),
        };
        println!("N = {precision}: S_N = {:>28}  v_p(S_N - E_n(a)) = {defect:<4} {naive}", format_rational(&closed));
    }

    // 1/3 is not a 3-adic integer
    println!("{}", witt_defect(&cache, n, &rat(1, 3), 3, 2).unwrap_err());
}
