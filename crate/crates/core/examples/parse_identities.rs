//! Parsing identities and systems, canonical rendering, and error positions.

use indicator_burnside::parser::{parse_identity, parse_system, render};

fn main() {
    for text in ["xyx = (xy)^2x", "a^2 ≈ bcde", "x h z x y z = x y z x h z", "(ab)^3a=ab"] {
        let id = parse_identity(text).expect("valid identity");
        println!("{text:<28} -> {}   variables {}", render(&id), id.variables().len());
    }

    let system = parse_system("# RS_1\nx^2 = x^3\nxyx = (xy)^2x\n\nxhzxyz = xyzxhz\n").expect("valid system");
    println!("\nsystem of {} identities:\n{system}", system.len());

    for bad in ["x=", "xy=yx)", "x^0 = x", "x = (y"] {
        match parse_identity(bad) {
            Ok(id) => println!("{bad:<10} unexpectedly parsed as {id}"),
            Err(e) => println!("{bad:<10} error: {e}"),
        }
    }
    if let Err(e) = parse_system("x=x^2\nxy=\nyx") {
        println!("\nsystem error: {e}");
    }
}
