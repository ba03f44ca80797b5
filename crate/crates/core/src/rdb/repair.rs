use std::collections::{BTreeSet, HashMap, HashSet};

use super::{AttributeId, DbError, Dependency, DependencyKind, Instance, RepairClass, RepairFamily, TupleSet, Value};
use crate::subsets::{bits, full_mask};
use crate::EnumCap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepairMode {
    All,
    Maximal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoveringMode {
    /// Projected domain is ⊆-maximal among all repairs.
    Max,
    /// Projected domain equals that of the whole table.
    Full,
}

/// Does `subset` satisfy `dep`? Checked literally: all pairs for an FD, a
/// supporter inside `subset` for every member for an ID.
pub fn satisfies(inst: &Instance, subset: &TupleSet, dep: &Dependency) -> Result<bool, DbError> {
    let rows = inst.tuple_positions(subset)?;
    let lhs = inst.attribute_positions(&dep.lhs)?;
    let rhs = inst.attribute_positions(&dep.rhs)?;
    Ok(match dep.kind {
        DependencyKind::Functional => rows.iter().all(|&s| {
            rows.iter()
                .all(|&t| !inst.agree(s, &lhs, t, &lhs) || inst.agree(s, &rhs, t, &rhs))
        }),
        DependencyKind::Inclusion => rows
            .iter()
            .all(|&s| rows.iter().any(|&t| inst.agree(s, &lhs, t, &rhs))),
    })
}

/// Tuples of the whole table whose `rhs` values equal `t`'s `lhs` values.
pub fn support_set(inst: &Instance, dep: &Dependency, t: &str) -> Result<TupleSet, DbError> {
    if dep.kind != DependencyKind::Inclusion {
        return Err(DbError::NotInclusion(dep.to_string()));
    }
    let s = inst
        .tuple_index(t)
        .ok_or_else(|| DbError::UnknownTuple(t.to_string()))?;
    let lhs = inst.attribute_positions(&dep.lhs)?;
    let rhs = inst.attribute_positions(&dep.rhs)?;
    Ok((0..inst.row_count())
        .filter(|&u| inst.agree(s, &lhs, u, &rhs))
        .map(|u| inst.tuples[u].id.clone())
        .collect())
}

/// `subset` satisfies every dependency of the instance.
pub fn is_repair(inst: &Instance, subset: &TupleSet) -> Result<bool, DbError> {
    for dep in &inst.dependencies {
        if !satisfies(inst, subset, dep)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Set of values `subset` takes on `attrs`.
pub fn projection_domain(
    inst: &Instance,
    subset: &TupleSet,
    attrs: &[AttributeId],
) -> Result<BTreeSet<Value>, DbError> {
    let cols = inst.attribute_positions(attrs)?;
    let rows = inst.tuple_positions(subset)?;
    Ok(rows
        .iter()
        .flat_map(|&r| inst.project(r, &cols).cloned())
        .collect())
}

pub fn enumerate_repairs(inst: &Instance, mode: RepairMode) -> Result<RepairFamily, DbError> {
    enumerate_repairs_with_cap(inst, mode, EnumCap::default())
}

/// Scans all `2^n` subsets. Maximal repairs are then read off the full family.
pub fn enumerate_repairs_with_cap(inst: &Instance, mode: RepairMode, cap: EnumCap) -> Result<RepairFamily, DbError> {
    cap.check(inst.row_count())?;
    let compiled = Compiled::new(inst);
    let consistent: Vec<bool> = (0..=full_mask(compiled.n)).map(|m| compiled.consistent(m)).collect();
    let (class, masks) = match mode {
        RepairMode::All => (
            RepairClass::All,
            (0..consistent.len() as u64).filter(|&m| consistent[m as usize]).collect(),
        ),
        RepairMode::Maximal => (RepairClass::Maximal, maximal_masks(compiled.n, &consistent)),
    };
    Ok(RepairFamily {
        class,
        witness_attrs: None,
        repairs: masks.into_iter().map(|m| compiled.to_set(inst, m)).collect(),
    })
}

/// All repairs by depth-first search that stops descending as soon as the
/// chosen tuples violate an FD. FD violations survive adding tuples, so no
/// repair below such a node is lost; IDs are only checked at the leaves.
pub fn search_repairs(inst: &Instance, cap: EnumCap) -> Result<RepairFamily, DbError> {
    cap.check(inst.row_count())?;
    let compiled = Compiled::new(inst);
    let mut found = Vec::new();
    compiled.search(0, 0, &mut found);
    Ok(RepairFamily {
        class: RepairClass::All,
        witness_attrs: None,
        repairs: found.into_iter().map(|m| compiled.to_set(inst, m)).collect(),
    })
}

pub fn covering_repairs(inst: &Instance, mode: CoveringMode, attrs: &[AttributeId]) -> Result<RepairFamily, DbError> {
    covering_repairs_with_cap(inst, mode, attrs, EnumCap::default())
}

/// Repairs ranked by the values they keep on `attrs`. Maximality is by set
/// inclusion of projected domains, never by their size.
pub fn covering_repairs_with_cap(
    inst: &Instance,
    mode: CoveringMode,
    attrs: &[AttributeId],
    cap: EnumCap,
) -> Result<RepairFamily, DbError> {
    cap.check(inst.row_count())?;
    let cols = inst.attribute_positions(attrs)?;
    let compiled = Compiled::new(inst);
    let repairs: Vec<u64> = (0..=full_mask(compiled.n)).filter(|&m| compiled.consistent(m)).collect();

    // Index the values of T[X] and give every tuple its value bitset.
    let mut value_index: HashMap<&Value, usize> = HashMap::new();
    for row in 0..inst.row_count() {
        for v in inst.project(row, &cols) {
            let next = value_index.len();
            value_index.entry(v).or_insert(next);
        }
    }
    let words = value_index.len().div_ceil(64).max(1);
    let row_values: Vec<Vec<u64>> = (0..inst.row_count())
        .map(|row| {
            let mut set = vec![0u64; words];
            for v in inst.project(row, &cols) {
                let i = value_index[v];
                set[i / 64] |= 1 << (i % 64);
            }
            set
        })
        .collect();
    let domain_of = |mask: u64| {
        let mut set = vec![0u64; words];
        for row in bits(mask) {
            for (w, r) in set.iter_mut().zip(&row_values[row]) {
                *w |= r;
            }
        }
        set
    };
    let domains: Vec<Vec<u64>> = repairs.iter().map(|&m| domain_of(m)).collect();

    let (class, keep): (RepairClass, Box<dyn Fn(&[u64]) -> bool>) = match mode {
        CoveringMode::Full => {
            let whole = domain_of(full_mask(compiled.n));
            (RepairClass::FullCovering, Box::new(move |d: &[u64]| d == whole.as_slice()))
        }
        CoveringMode::Max => {
            let distinct: Vec<&Vec<u64>> = domains.iter().collect::<HashSet<_>>().into_iter().collect();
            let maximal: HashSet<Vec<u64>> = distinct
                .iter()
                .filter(|d| !distinct.iter().any(|other| strictly_contains(other, d)))
                .map(|d| (*d).clone())
                .collect();
            (RepairClass::MaxCovering, Box::new(move |d: &[u64]| maximal.contains(d)))
        }
    };
    Ok(RepairFamily {
        class,
        witness_attrs: Some(attrs.to_vec()),
        repairs: repairs
            .iter()
            .zip(&domains)
            .filter(|(_, d)| keep(d))
            .map(|(&m, _)| compiled.to_set(inst, m))
            .collect(),
    })
}

fn strictly_contains(big: &[u64], small: &[u64]) -> bool {
    big != small && big.iter().zip(small).all(|(b, s)| s & !b == 0)
}

/// Consistent masks with no consistent strict superset, via one sweep from the
/// full set downwards that tracks whether any superset is consistent.
fn maximal_masks(n: usize, consistent: &[bool]) -> Vec<u64> {
    let full = full_mask(n);
    let mut reaches = vec![false; consistent.len()];
    let mut out = Vec::new();
    for m in (0..=full).rev() {
        let above = (0..n)
            .filter(|&i| m & (1 << i) == 0)
            .any(|i| reaches[(m | (1 << i)) as usize]);
        let here = consistent[m as usize];
        if here && !above {
            out.push(m);
        }
        reaches[m as usize] = here || above;
    }
    out
}

/// Dependencies lowered to bit masks over tuple positions.
struct Compiled {
    n: usize,
    /// Tuples each tuple violates some FD with.
    fd_conflicts: Vec<u64>,
    /// For every ID, the supporters of each tuple.
    supporters: Vec<Vec<u64>>,
}

impl Compiled {
    fn new(inst: &Instance) -> Self {
        let n = inst.row_count();
        let mut fd_conflicts = vec![0u64; n];
        let mut supporters = Vec::new();
        for dep in &inst.dependencies {
            let lhs = inst.attribute_positions(&dep.lhs).expect("validated at construction");
            let rhs = inst.attribute_positions(&dep.rhs).expect("validated at construction");
            match dep.kind {
                DependencyKind::Functional => {
                    for s in 0..n {
                        for t in s + 1..n {
                            if inst.agree(s, &lhs, t, &lhs) && !inst.agree(s, &rhs, t, &rhs) {
                                fd_conflicts[s] |= 1 << t;
                                fd_conflicts[t] |= 1 << s;
                            }
                        }
                    }
                }
                DependencyKind::Inclusion => {
                    supporters.push(
                        (0..n)
                            .map(|s| {
                                (0..n)
                                    .filter(|&t| inst.agree(s, &lhs, t, &rhs))
                                    .fold(0u64, |m, t| m | (1 << t))
                            })
                            .collect(),
                    );
                }
            }
        }
        Compiled {
            n,
            fd_conflicts,
            supporters,
        }
    }

    fn supported(&self, m: u64) -> bool {
        self.supporters
            .iter()
            .all(|sup| bits(m).all(|s| sup[s] & m != 0))
    }

    fn consistent(&self, m: u64) -> bool {
        bits(m).all(|s| self.fd_conflicts[s] & m == 0) && self.supported(m)
    }

    fn search(&self, next: usize, chosen: u64, found: &mut Vec<u64>) {
        if next == self.n {
            if self.supported(chosen) {
                found.push(chosen);
            }
            return;
        }
        self.search(next + 1, chosen, found);
        if self.fd_conflicts[next] & chosen == 0 {
            self.search(next + 1, chosen | (1 << next), found);
        }
    }

    fn to_set(&self, inst: &Instance, mask: u64) -> TupleSet {
        bits(mask).map(|i| inst.tuples[i].id.clone()).collect()
    }
}
