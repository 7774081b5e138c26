//! Exhaustive evaluation of identities in a finite table, with counterexamples.

use indicator_burnside::parser::Identity;
use indicator_burnside::semigroups::{bruteforce_cost, catalog, evaluate, find_counterexample};

fn main() -> indicator_burnside::Result<()> {
    let b2 = catalog("B2", None)?;
    let k1 = catalog("K", Some(1))?;
    let cases = [
        (&b2, "xyx=xyxyx"),
        (&b2, "xy=yx"),
        (&b2, "x^2y^2=y^2x^2"),
        (&k1, "aba=ab^2a"),
        (&k1, "xyx=(xy)^2x"),
    ];
    for (s, text) in cases {
        let id: Identity = text.parse()?;
        let cost = bruteforce_cost(s, &id);
        let name = match s.param() {
            Some(n) => format!("{}_{n}", s.name()),
            None => s.name().to_string(),
        };
        match find_counterexample(s, &id) {
            None => println!("{name:<4} {text:<16} holds ({cost} assignments)"),
            Some(phi) => {
                let shown: Vec<String> =
                    phi.0.iter().map(|(x, e)| format!("{x} -> {}", s.element_name(*e))).collect();
                let (l, r) = (evaluate(s, &id.lhs, &phi)?, evaluate(s, &id.rhs, &phi)?);
                println!(
                    "{name:<4} {text:<16} fails at {{{}}}: {} vs {}",
                    shown.join(", "),
                    s.element_name(l),
                    s.element_name(r)
                );
            }
        }
    }
    Ok(())
}
