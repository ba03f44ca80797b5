//! Translate a 500-argument framework and time each builder.
//!
//! ```text
//! cargo run --release --example large_translation -- [attack-probability]
//! ```

use std::time::Instant;

use af2db::af::ArgumentationFramework;
use af2db::translate::{build, Target};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let p: f64 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(0.01);
    let names: Vec<String> = (0..500).map(|i| format!("a{i}")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut attacks = Vec::new();
    for a in &names {
        for b in &names {
            if a != b && rng.gen_bool(p) {
                attacks.push((a.as_str(), b.as_str()));
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let af = ArgumentationFramework::from_names(&refs, &attacks)?;
    println!("{} arguments, {} attacks, degree {}", af.len(), af.attack_count(), af.degree());
    for target in Target::ALL {
        let started = Instant::now();
        let t = build(&af, target, true)?;
        println!(
            "{target:>8}: {} x {}, {} dependencies in {:.2?}",
            t.instance.row_count(),
            t.instance.column_count(),
            t.instance.dependencies().len(),
            started.elapsed()
        );
    }
    Ok(())
}
