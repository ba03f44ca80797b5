//! Subset and covering repairs of the course-scheduling table.

use af2db::rdb::{covering_repairs, enumerate_repairs, export_table, format_tuple_set, AttributeId, CoveringMode, RepairMode, TableFormat};
use af2db::samples::scheduling;

fn main() -> anyhow::Result<()> {
    let table = scheduling();
    print!("{}", export_table(&table, TableFormat::Csv));
    for dep in table.dependencies() {
        println!("  {dep}");
    }

    let print = |label: &str, family: &af2db::rdb::RepairFamily| {
        let sets: Vec<String> = family.iter().map(format_tuple_set).collect();
        println!("{label:<34} {}", sets.join(" "));
    };
    print("maximal repairs:", &enumerate_repairs(&table, RepairMode::Maximal)?);
    let everything = table.schema().to_vec();
    print("max-covering (all attributes):", &covering_repairs(&table, CoveringMode::Max, &everything)?);
    print("full-covering (all attributes):", &covering_repairs(&table, CoveringMode::Full, &everything)?);
    let slot: Vec<AttributeId> = ["Tutor", "Time", "Room"].map(AttributeId::from).to_vec();
    print("full-covering (Tutor,Time,Room):", &covering_repairs(&table, CoveringMode::Full, &slot)?);
    Ok(())
}
