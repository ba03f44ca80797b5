//! Build the four databases for the running example and show how their
//! repairs line up with extensions.

use af2db::af::{extensions, Semantics};
use af2db::rdb::{covering_repairs, enumerate_repairs, export_table, format_tuple_set, CoveringMode, RepairMode, TableFormat};
use af2db::samples::example_one;
use af2db::translate::{build, range_attrs, Target};

fn main() -> anyhow::Result<()> {
    let af = example_one();
    for target in Target::ALL {
        let t = build(&af, target, true)?;
        println!("== {target} ({} dependencies)", t.instance.dependencies().len());
        print!("{}", export_table(&t.instance, TableFormat::Csv));
        for dep in t.instance.dependencies() {
            println!("  {dep}");
        }
    }

    let show = |sets: Vec<String>| sets.join(" ");
    let afdb = build(&af, Target::Afdb, true)?.instance;
    let maximal = enumerate_repairs(&afdb, RepairMode::Maximal)?;
    println!("\npreferred extensions: {}", show(extensions(&af, Semantics::Preferred)?.iter().map(ToString::to_string).collect()));
    println!("maximal repairs:      {}", show(maximal.iter().map(format_tuple_set).collect()));

    let range = build(&af, Target::Range, true)?.instance;
    let full = covering_repairs(&range, CoveringMode::Full, &range_attrs(&af).attrs)?;
    println!("stable extensions:    {}", show(extensions(&af, Semantics::Stable)?.iter().map(ToString::to_string).collect()));
    println!("full-covering:        {}", show(full.iter().map(format_tuple_set).collect()));
    Ok(())
}
