//! Statistics of a word: content, occurrences, heads and tails, cores.
//!
//!     cargo run --example word_profile -- 'x^2yzx(yz)^2'

use indicator_burnside::words::{analyze, is_pq_trivial, Word};

fn main() -> indicator_burnside::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x^2yzx(yz)^2".to_string());
    let u: Word = text.parse()?;
    let p = analyze(&u);
    println!("word        {u}  (plain {})", u.plain());
    println!("length      {}", p.length);
    for (x, n) in &p.occurrences {
        println!("occ({x})      {n}");
    }
    println!("head/tail   {} / {}", p.head, p.tail);
    for s in 1..=p.content.len() {
        let show = |x: Option<_>| x.map_or("-".to_string(), |x: indicator_burnside::words::Letter| x.to_string());
        println!("h_{s}, t_{s}    {}, {}", show(p.head_at(s)), show(p.tail_at(s)));
    }
    let simple: Vec<String> = p.simple_letters.iter().map(ToString::to_string).collect();
    println!("simple      {{{}}}", simple.join(", "));
    println!("cores       LC = {}, RC = {}", p.left_core, p.right_core);
    for (pp, q) in [(3, 2), (4, 3), (u.len() + 1, 2)] {
        println!("({pp},{q})-trivial  {}", is_pq_trivial(&u, pp, q)?);
    }
    Ok(())
}
