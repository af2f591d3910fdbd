//! Writes a suite run as JSON, reads it back, and prints the CSV and
//! Markdown projections of the same reports.

use euler_identities::euler::EulerCache;
use euler_identities::identities::report::{from_json, summary, to_csv, to_json, to_markdown};
use euler_identities::identities::{run_suite, CheckerId, Grid, Span};

fn main() {
    let cache = EulerCache::new();
    let grid = Grid { m: Span::new(0, 2), n: Span::new(0, 2), ..Grid::default() };
    let reports = run_suite(&[CheckerId::Cro1, CheckerId::Thm3], &grid, &cache).unwrap();

    let json = to_json(&reports);
    let back = from_json(&json).unwrap();
    assert_eq!(back, reports);
    println!("{json}\n");
    print!("{}", to_csv(&reports));
    println!();
    print!("{}", to_markdown(&reports));
    println!("{}", summary(&reports));
}
