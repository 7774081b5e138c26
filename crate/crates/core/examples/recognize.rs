//! Recognizing Rees-Sushkevich varieties from finite identity systems.
//!
//!     cargo run --example recognize -- path/to/system.ids

use indicator_burnside::parser::parse_system;
use indicator_burnside::recognizer::{rs_recognize, rs_recognize_with, MembershipOracle, RecognizeOptions};

fn main() -> indicator_burnside::Result<()> {
    let systems: Vec<(String, String)> = match std::env::args().nth(1) {
        Some(path) => vec![(path.clone(), std::fs::read_to_string(&path).expect("readable file"))],
        None => [
            ("x^2=x^3", "x^2=x^3"),
            ("commutative", "xy=yx"),
            ("RS_1", "x^2=x^3\nxyx=(xy)^2x\nxhzxyz=xyzxhz"),
            ("period 2", "x^2=x^4\nxyx=(xy)^3x\nxhzxyz=xyzxhz"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect(),
    };
    for (label, text) in systems {
        let system = parse_system(&text)?;
        println!("== {label}");
        print!("{}", rs_recognize(&system));
        let checked = rs_recognize_with(&system, RecognizeOptions { oracle: MembershipOracle::BruteForce, k_bound: Some(4) });
        println!("brute-force verdict {:?}, K_n scan up to 4: {:?}\n", checked.verdict, checked.k_discrepancies);
    }
    Ok(())
}
