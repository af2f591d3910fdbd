//! Alternating and plain power sums, summed directly and through their
//! Euler and Bernoulli closed forms.

use euler_identities::euler::{alt_power_sum, power_sum, EulerCache};
use euler_identities::numeric::format_rational;

fn main() {
    let cache = EulerCache::new();
    let m = 10;
    println!("sums over j = 1..{m}");
    println!("{:>3} {:>22} {:>22} {:>22} {:>22}", "n", "sum (-1)^j j^n", "Euler form", "sum j^n", "Bernoulli form");
    for n in 0..=8 {
        let alt = alt_power_sum(m, n);
        let alt_closed = cache.alt_power_sum_closed(m, n);
        let plain = power_sum(m, n);
        let plain_closed = cache.power_sum_closed(m, n);
        let mark = if alt == alt_closed && plain == plain_closed { "" } else { "  <- closed forms add the 0^0 term" };
        println!(
            "{n:>3} {:>22} {:>22} {:>22} {:>22}{mark}",
            format_rational(&alt),
            format_rational(&alt_closed),
            format_rational(&plain),
            format_rational(&plain_closed),
        );
    }
}
