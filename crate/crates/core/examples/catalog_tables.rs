//! The semigroup catalog: sizes, a Cayley table, duals and JSON dumps.
//!
//!     cargo run --example catalog_tables -- K 2

use indicator_burnside::semigroups::{catalog, dual, CATALOG_NAMES};

fn main() -> indicator_burnside::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "C_lambda".to_string());
    let n: Option<u32> = args.next().map(|s| s.parse().expect("n is a number"));

    println!("catalog:");
    for &entry in CATALOG_NAMES {
        let size = match entry {
            "K" | "C" | "C2n" => catalog(entry, Some(2)).map(|s| format!("{} (n = 2)", s.size())),
            "Crd" => Ok("r + d - 1".to_string()),
            _ => catalog(entry, None).map(|s| s.size().to_string()),
        };
        println!("  {entry:<9} {}", size?);
    }

    let s = catalog(&name, n)?;
    s.check_associative()?;
    println!("\n{} ({} elements, zero {:?})", s.name(), s.size(), s.zero().map(|z| s.element_name(z)));
    let width = s.elements().iter().map(String::len).max().unwrap_or(1).max(1);
    print!("{:>width$} |", "");
    for e in s.elements() {
        print!(" {e:>width$}");
    }
    println!();
    for i in 0..s.size() {
        print!("{:>width$} |", s.element_name(i));
        for j in 0..s.size() {
            print!(" {:>width$}", s.element_name(s.mul(i, j)));
        }
        println!();
    }

    let d = dual(&s);
    println!("\n{} equals its double dual: {}", s.name(), dual(&d) == s);
    println!("\n{}", s.to_json());
    Ok(())
}
