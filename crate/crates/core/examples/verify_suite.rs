//! Check every semantics/repair correspondence on random frameworks.
//!
//! ```text
//! cargo run --release --example verify_suite -- [instances] [max-args] [seed]
//! ```

use af2db::verify::{run_suite, SuiteConfig};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut next = |default: u64| -> anyhow::Result<u64> {
        Ok(args.next().map(|a| a.parse()).transpose()?.unwrap_or(default))
    };
    let config = SuiteConfig::new(next(200)? as usize, next(8)? as usize, next(42)?);
    let started = std::time::Instant::now();
    let summary = run_suite(&config)?;
    print!("{}", summary.to_text());
    println!("took {:.2?}", started.elapsed());
    if !summary.is_success() {
        std::process::exit(1);
    }
    Ok(())
}
