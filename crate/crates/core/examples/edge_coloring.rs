//! Compress conflict columns by edge coloring the conflict graph.

use af2db::af::ArgumentationFramework;
use af2db::samples::example_one;
use af2db::translate::{build_conflict_db, canonical_conflicts, edge_color};
use af2db::verify::{random_af, SuiteConfig};

fn report(label: &str, af: &ArgumentationFramework) -> anyhow::Result<()> {
    let conflicts = canonical_conflicts(&af.strip_self_attackers());
    let coloring = edge_color(&conflicts);
    let plain = build_conflict_db(af, false)?.instance;
    let packed = build_conflict_db(af, true)?.instance;
    println!(
        "{label}: {} arguments, degree {}, {} conflicts, {} colors (proper: {}); FDs {} -> {}",
        af.len(),
        af.degree(),
        conflicts.len(),
        coloring.color_count(),
        coloring.is_proper(&conflicts),
        plain.functional_dependencies().count(),
        packed.functional_dependencies().count(),
    );
    Ok(())
}

fn main() -> anyhow::Result<()> {
    let af = example_one();
    report("example", &af)?;
    let conflicts = canonical_conflicts(&af);
    let coloring = edge_color(&conflicts);
    for c in &conflicts {
        println!("  {} = ({},{}) color {}", c.id, c.endpoints.0, c.endpoints.1, coloring.color_of(c).unwrap());
    }

    let mut config = SuiteConfig::new(1, 12, 3);
    config.attack_probability = 0.4;
    for i in 0..5 {
        report(&format!("random #{i}"), &random_af(&config, i))?;
    }
    Ok(())
}
