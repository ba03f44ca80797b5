//! The two running examples: a four-argument framework and a course-scheduling table.

use crate::af::ArgumentationFramework;
use crate::rdb::{AttributeId, Dependency, Instance, Tuple};

/// Arguments `a, b, c, d`; `a` and `b` attack each other and both attack `c`,
/// `c` and `d` attack each other, and `a` attacks `d`.
pub fn example_one() -> ArgumentationFramework {
    ArgumentationFramework::from_names(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "d"), ("d", "c"), ("a", "d")],
    )
    .expect("fixed framework is well formed")
}

/// `example_one` in APX.
pub const EXAMPLE_ONE_APX: &str = "\
arg(a).
arg(b).
arg(c).
arg(d).
att(a,b).
att(b,a).
att(a,c).
att(b,c).
att(c,d).
att(d,c).
att(a,d).
";

/// Tuples `s1..s6` over Tutor, Time, Room, Course, Advisor with the FD
/// Tutor,Time → Room and the ID Advisor ⊆ Tutor.
pub fn scheduling() -> Instance {
    let rows = [
        ("s1", ["Alice", "TS-1", "A10", "Logic-I", "Alice"]),
        ("s2", ["Alice", "TS-1", "B20", "Algorithms", "Carol"]),
        ("s3", ["Bob", "TS-2", "B20", "Statistics", "Alice"]),
        ("s4", ["Bob", "TS-2", "C30", "Calculus", "Bob"]),
        ("s5", ["Carol", "TS-3", "C30", "Calculus", "Bob"]),
        ("s6", ["Carol", "TS-3", "B20", "Algorithms", "Dave"]),
    ];
    Instance::new(
        ["Tutor", "Time", "Room", "Course", "Advisor"].map(AttributeId::from).to_vec(),
        rows.iter().map(|(id, v)| Tuple::new(*id, *v)).collect(),
        vec![
            Dependency::functional(["Tutor", "Time"], ["Room"]),
            Dependency::inclusion(["Advisor"], ["Tutor"]),
        ],
    )
    .expect("fixed table is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::{parse_af, AfFormat};

    #[test]
    fn apx_text_matches() {
        assert_eq!(parse_af(EXAMPLE_ONE_APX, AfFormat::Apx).unwrap(), example_one());
    }
}
