//! Extension enumeration by brute force.
//!
//! Every subset of the arguments is generated, filtered by the defining
//! property, and the maximality conditions are then applied by pairwise
//! comparison inside the filtered family. Nothing clever happens here: this
//! module is the referee the database side is checked against.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{AfError, ArgumentationFramework, Extension};
use crate::subsets::{bits, full_mask};
use crate::EnumCap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    ConflictFree,
    Naive,
    Admissible,
    Complete,
    Preferred,
    Stable,
    SemiStable,
    Stage,
}

impl Semantics {
    pub const ALL: [Semantics; 8] = [
        Semantics::ConflictFree,
        Semantics::Naive,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::SemiStable,
        Semantics::Stage,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "conflict-free",
            Semantics::Naive => "naive",
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
            Semantics::SemiStable => "semi-stable",
            Semantics::Stage => "stage",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown semantics `{0}`")]
pub struct UnknownSemantics(pub String);

impl FromStr for Semantics {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.tag() == s)
            .ok_or_else(|| UnknownSemantics(s.to_string()))
    }
}

/// All `sem`-extensions of `af`, with the default enumeration cap.
pub fn extensions(af: &ArgumentationFramework, sem: Semantics) -> Result<BTreeSet<Extension>, AfError> {
    extensions_with_cap(af, sem, EnumCap::default())
}

pub fn extensions_with_cap(
    af: &ArgumentationFramework,
    sem: Semantics,
    cap: EnumCap,
) -> Result<BTreeSet<Extension>, AfError> {
    cap.check(af.len())?;
    let graph = MaskGraph::new(af);
    let family = graph.solve(sem);
    Ok(family
        .into_iter()
        .map(|mask| bits(mask).map(|i| af.arguments()[i].clone()).collect())
        .collect())
}

struct MaskGraph {
    n: usize,
    attackers: Vec<u64>,
    targets: Vec<u64>,
}

impl MaskGraph {
    fn new(af: &ArgumentationFramework) -> Self {
        let n = af.len();
        let to_mask = |list: &[usize]| list.iter().fold(0u64, |m, &j| m | (1 << j));
        MaskGraph {
            n,
            attackers: (0..n).map(|i| to_mask(af.attackers_of(i))).collect(),
            targets: (0..n).map(|i| to_mask(af.targets_of(i))).collect(),
        }
    }

    fn conflict_free(&self, s: u64) -> bool {
        bits(s).all(|i| self.targets[i] & s == 0)
    }

    fn defended(&self, s: u64) -> u64 {
        (0..self.n)
            .filter(|&a| bits(self.attackers[a]).all(|b| self.attackers[b] & s != 0))
            .fold(0, |m, a| m | (1 << a))
    }

    fn range(&self, s: u64) -> u64 {
        bits(s).fold(s, |m, i| m | self.targets[i])
    }

    fn admissible(&self, s: u64) -> bool {
        self.conflict_free(s) && s & !self.defended(s) == 0
    }

    fn filter(&self, keep: impl Fn(u64) -> bool) -> Vec<u64> {
        (0..=full_mask(self.n)).filter(|&s| keep(s)).collect()
    }

    fn solve(&self, sem: Semantics) -> Vec<u64> {
        let all = full_mask(self.n);
        match sem {
            Semantics::ConflictFree => self.filter(|s| self.conflict_free(s)),
            Semantics::Naive => subset_maximal(&self.filter(|s| self.conflict_free(s))),
            Semantics::Admissible => self.filter(|s| self.admissible(s)),
            Semantics::Complete => self.filter(|s| self.admissible(s) && self.defended(s) == s),
            Semantics::Preferred => subset_maximal(&self.filter(|s| self.admissible(s))),
            Semantics::Stable => self.filter(|s| self.conflict_free(s) && self.range(s) == all),
            Semantics::SemiStable => {
                range_maximal(&self.filter(|s| self.admissible(s)), |s| self.range(s))
            }
            Semantics::Stage => {
                range_maximal(&self.filter(|s| self.conflict_free(s)), |s| self.range(s))
            }
        }
    }
}

fn strict_subset(a: u64, b: u64) -> bool {
    a != b && a & !b == 0
}

fn subset_maximal(family: &[u64]) -> Vec<u64> {
    family
        .iter()
        .copied()
        .filter(|&s| !family.iter().any(|&t| strict_subset(s, t)))
        .collect()
}

fn range_maximal(family: &[u64], range: impl Fn(u64) -> u64) -> Vec<u64> {
    let ranges: Vec<u64> = family.iter().map(|&s| range(s)).collect();
    family
        .iter()
        .zip(&ranges)
        .filter(|&(_, &r)| !ranges.iter().any(|&other| strict_subset(r, other)))
        .map(|(&s, _)| s)
        .collect()
}
