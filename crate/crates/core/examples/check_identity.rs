//! Decides one identity in every catalog semigroup with a criterion and
//! confirms each verdict by exhaustive evaluation.
//!
//!     cargo run --example check_identity -- 'xyx=(xy)^2x'

use indicator_burnside::criteria::{Criterion, Indicator};
use indicator_burnside::parser::Identity;
use indicator_burnside::semigroups::satisfies_bruteforce;

fn main() -> indicator_burnside::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "xyx=(xy)^2x".to_string());
    let id: Identity = text.parse()?;
    println!("{id}");
    let mut criteria = Criterion::oracle_suite(4);
    criteria.push(Criterion::Indicator(Indicator::K(6)));
    for c in criteria {
        let verdict = c.holds(&id);
        let oracle = satisfies_bruteforce(&c.semigroup(), &id);
        let mark = if verdict == oracle { "" } else { "  MISMATCH" };
        println!("  {:<9} {}{mark}", c.to_string(), if verdict { "holds" } else { "fails" });
    }
    Ok(())
}
