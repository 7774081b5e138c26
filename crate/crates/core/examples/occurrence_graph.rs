//! The bipartite occurrence graph of a word and the B2 comparison built on it.
//!
//!     cargo run --example occurrence_graph -- ab^2c^2 ac^2b^2

use indicator_burnside::criteria::sat_b2;
use indicator_burnside::occgraph::{build_graph, same_components};
use indicator_burnside::parser::Identity;
use indicator_burnside::words::Word;

fn main() -> indicator_burnside::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (u, v): (Word, Word) = match args.as_slice() {
        [u, v, ..] => (u.parse()?, v.parse()?),
        _ => ("ab^2c^2".parse()?, "ac^2b^2".parse()?),
    };
    for w in [&u, &v] {
        let g = build_graph(w);
        println!("Gr({w}): {} vertices", g.vertex_count());
        for (p, q) in g.edges() {
            println!("  {p} -- {q}");
        }
        let comps: Vec<String> = g
            .components()
            .iter()
            .map(|c| format!("{{{}}}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        println!("  components {}", comps.join(" "));
    }
    println!("same components: {}", same_components(&u, &v));
    println!("{u} = {v} in B2: {}", sat_b2(&Identity::new(u.clone(), v.clone())));
    Ok(())
}
