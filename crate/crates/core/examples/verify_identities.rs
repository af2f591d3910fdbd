//! Runs the whole identity catalog over a small grid and prints one line
//! per checker.

use std::collections::BTreeMap;

use euler_identities::euler::EulerCache;
use euler_identities::identities::report::summary;
use euler_identities::identities::{run_suite, CheckerId, Grid, Span};

fn main() {
    let cache = EulerCache::new();
    let grid = Grid { m: Span::new(0, 5), n: Span::new(0, 5), ..Grid::default() };
    let reports = run_suite(CheckerId::ALL, &grid, &cache).expect("valid grid");

    let mut by_id: BTreeMap<CheckerId, (usize, usize, f64)> = BTreeMap::new();
    for r in &reports {
        let e = by_id.entry(r.id).or_default();
        e.0 += r.pass as usize;
        e.1 += 1;
        e.2 += r.elapsed_ms;
    }
    for (id, (passed, total, ms)) in by_id {
        println!("{:<20} {passed:>4}/{total:<4} {ms:>9.2} ms", id.as_str());
    }
    println!("{}", summary(&reports));
}
