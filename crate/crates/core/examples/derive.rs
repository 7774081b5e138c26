//! Derivations from identity bases: a traced search and the bounded closure.
//!
//!     cargo run --release --example derive -- C_lambda 'abcd=abdc'

use indicator_burnside::bases::{basis_catalog, derive_bounded, BoundedClosure, Derivation};
use indicator_burnside::fuzz::desk_identities;
use indicator_burnside::parser::Identity;

fn main() -> indicator_burnside::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "C_lambda".to_string());
    let target: Identity = args.next().unwrap_or_else(|| "abcd=abdc".to_string()).parse()?;
    let n = args.next().map(|s| s.parse().expect("n is a number"));

    let basis = basis_catalog(&name, n)?;
    println!("basis {basis}");
    if let Some(note) = &basis.note {
        println!("note: {note}");
    }
    match derive_bounded(&basis, &target, 10, 1_000_000)? {
        Derivation::Found(trace) => {
            println!("\n{target} in {} steps:\n{trace}", trace.len());
            assert!(trace.verify());
        }
        Derivation::Exhausted { states } => println!("\n{target}: not derivable within length 10 ({states} words)"),
        Derivation::BudgetExceeded { states } => println!("\n{target}: gave up after {states} words"),
    }

    let closure = BoundedClosure::for_basis(&basis, 2, 10);
    let derivable = desk_identities(2, 4).into_iter().filter(|id| closure.derivable(id) == Some(true)).count();
    println!(
        "two-letter words up to length 10 fall into {} classes; {derivable} identities with sides up to 4 are derivable",
        closure.class_count()
    );
    Ok(())
}
