//! Compares every criterion with its table on all small identities.
//!
//!     cargo run --release --example fuzz_criteria -- 3 4

use std::time::Instant;

use indicator_burnside::criteria::Criterion;
use indicator_burnside::fuzz::fuzz;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("numeric argument"));
    let letters = args.next().unwrap_or(2);
    let max_len = args.next().unwrap_or(5);
    println!("identities over {letters} letters, sides up to length {max_len}");
    for c in Criterion::oracle_suite(4) {
        let start = Instant::now();
        let report = fuzz(&c, letters, max_len);
        println!("  {:<9} {report}  [{:.2?}]", c.to_string(), start.elapsed());
        for e in &report.examples {
            println!("      {e}");
        }
    }
}
