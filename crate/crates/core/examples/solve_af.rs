//! Enumerate extensions of a framework under every semantics.
//!
//! ```text
//! cargo run --example solve_af [-- path/to/framework.apx]
//! ```

use af2db::af::{extensions, parse_af, AfFormat, Semantics};
use af2db::samples::EXAMPLE_ONE_APX;
use anyhow::Context;

fn main() -> anyhow::Result<()> {
    let (text, format) = match std::env::args().nth(1) {
        Some(path) => (
            std::fs::read_to_string(&path).with_context(|| format!("reading {path}"))?,
            AfFormat::from_path(path.as_ref()),
        ),
        None => (EXAMPLE_ONE_APX.to_string(), AfFormat::Apx),
    };
    let af = parse_af(&text, format)?;
    println!("{} arguments, {} attacks", af.len(), af.attack_count());
    for sem in Semantics::ALL {
        let family = extensions(&af, sem)?;
        let sets: Vec<String> = family.iter().map(ToString::to_string).collect();
        println!("{:>13}: {}", sem, sets.join(" "));
    }
    Ok(())
}
