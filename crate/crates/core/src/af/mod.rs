//! Dung argumentation frameworks.
//!
//! A framework is a directed graph of arguments and attacks. Arguments are kept
//! in lexicographic order of their names; that order is the canonical one used
//! for row order, column order and printing everywhere else in the crate.

use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::CapExceeded;

mod format;
mod semantics;

pub use format::{parse_af, write_af, AfFormat, ParseError};
pub use semantics::{extensions, extensions_with_cap, Semantics, UnknownSemantics};

/// Reserved value marking "no interaction" in the generated tables. No argument
/// may carry this name.
pub const SENTINEL: &str = "0";

const FORBIDDEN_NAME_CHARS: &[char] = &['(', ')', ',', '.', '#'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AfError {
    #[error("invalid argument name {0:?}")]
    InvalidName(String),
    #[error("argument name `0` is reserved")]
    ReservedName,
    #[error("attack ({attacker},{target}) references undeclared argument `{missing}`")]
    UndeclaredArgument {
        attacker: String,
        target: String,
        missing: String,
    },
    #[error("`{0}` is not an argument of the framework")]
    UnknownArgument(String),
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
}

/// Name of an argument. Non-empty, free of whitespace and of the characters
/// `( ) , . #` so that it survives APX and TGF serialization, and never `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self, AfError> {
        let name = name.into();
        if name == SENTINEL {
            return Err(AfError::ReservedName);
        }
        let bad_char = |c: char| c.is_whitespace() || c.is_control() || FORBIDDEN_NAME_CHARS.contains(&c);
        if name.is_empty() || name.chars().any(bad_char) {
            return Err(AfError::InvalidName(name));
        }
        Ok(ArgumentId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for ArgumentId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for ArgumentId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A set of arguments. Ordered by the lexicographic order on sorted member
/// lists, which is the order families of extensions are printed in.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Extension(BTreeSet<ArgumentId>);

impl Extension {
    pub fn new() -> Self {
        Extension(BTreeSet::new())
    }

    /// Builds an extension from raw names, validating each.
    pub fn from_names<I, S>(names: I) -> Result<Self, AfError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        names
            .into_iter()
            .map(ArgumentId::new)
            .collect::<Result<BTreeSet<_>, _>>()
            .map(Extension)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }

    pub fn insert(&mut self, arg: ArgumentId) -> bool {
        self.0.insert(arg)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn names(&self) -> BTreeSet<String> {
        self.0.iter().map(|a| a.0.clone()).collect()
    }
}

impl FromIterator<ArgumentId> for Extension {
    fn from_iter<T: IntoIterator<Item = ArgumentId>>(iter: T) -> Self {
        Extension(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Extension {
    type Item = &'a ArgumentId;
    type IntoIter = std::collections::btree_set::Iter<'a, ArgumentId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Prints as `{a,b}`; the empty set prints as `{}`.
impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(a.as_str())?;
        }
        f.write_str("}")
    }
}

/// Directed attack graph over a finite set of arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    arguments: Vec<ArgumentId>,
    /// Sorted, deduplicated `(attacker, target)` index pairs.
    attacks: Vec<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl ArgumentationFramework {
    /// Duplicate arguments and attacks are merged. Every attack endpoint must be
    /// a declared argument.
    pub fn new<A, R>(arguments: A, attacks: R) -> Result<Self, AfError>
    where
        A: IntoIterator<Item = ArgumentId>,
        R: IntoIterator<Item = (ArgumentId, ArgumentId)>,
    {
        let arguments: Vec<ArgumentId> = arguments
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut pairs = Vec::new();
        for (attacker, target) in attacks {
            let lookup = |name: &ArgumentId| {
                arguments
                    .binary_search(name)
                    .map_err(|_| AfError::UndeclaredArgument {
                        attacker: attacker.0.clone(),
                        target: target.0.clone(),
                        missing: name.0.clone(),
                    })
            };
            pairs.push((lookup(&attacker)?, lookup(&target)?));
        }
        Ok(Self::from_indices(arguments, pairs))
    }

    /// Convenience constructor from plain names.
    pub fn from_names(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self, AfError> {
        let args = arguments
            .iter()
            .map(|a| ArgumentId::new(*a))
            .collect::<Result<Vec<_>, _>>()?;
        let atts = attacks
            .iter()
            .map(|(a, b)| Ok((ArgumentId::new(*a)?, ArgumentId::new(*b)?)))
            .collect::<Result<Vec<_>, AfError>>()?;
        Self::new(args, atts)
    }

    /// `arguments` must already be sorted and unique.
    fn from_indices(arguments: Vec<ArgumentId>, mut attacks: Vec<(usize, usize)>) -> Self {
        attacks.sort_unstable();
        attacks.dedup();
        let n = arguments.len();
        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        for &(a, b) in &attacks {
            targets[a].push(b);
            attackers[b].push(a);
        }
        for list in &mut attackers {
            list.sort_unstable();
        }
        ArgumentationFramework {
            arguments,
            attacks,
            attackers,
            targets,
        }
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.arguments
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    /// Attacks in canonical order, as `(attacker, target)`.
    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.attacks
            .iter()
            .map(move |&(a, b)| (&self.arguments[a], &self.arguments[b]))
    }

    /// Attacks as index pairs into [`Self::arguments`].
    pub fn attack_indices(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.arguments.binary_search_by(|a| a.as_str().cmp(name)).ok()
    }

    pub fn attacks_between(&self, attacker: usize, target: usize) -> bool {
        self.attacks.binary_search(&(attacker, target)).is_ok()
    }

    pub fn attackers_of(&self, index: usize) -> &[usize] {
        &self.attackers[index]
    }

    pub fn targets_of(&self, index: usize) -> &[usize] {
        &self.targets[index]
    }

    pub fn is_self_attacking(&self, index: usize) -> bool {
        self.attacks_between(index, index)
    }

    /// Largest number of distinct other arguments any argument attacks or is
    /// attacked by. Self-loops do not count, and a mutual attack counts once.
    pub fn degree(&self) -> usize {
        (0..self.len())
            .map(|i| {
                let mut neighbours: Vec<usize> = self.attackers[i]
                    .iter()
                    .chain(&self.targets[i])
                    .copied()
                    .filter(|&j| j != i)
                    .collect();
                neighbours.sort_unstable();
                neighbours.dedup();
                neighbours.len()
            })
            .max()
            .unwrap_or(0)
    }

    /// Removes every self-attacking argument together with all incident attacks.
    pub fn strip_self_attackers(&self) -> ArgumentationFramework {
        let keep: Vec<bool> = (0..self.len()).map(|i| !self.is_self_attacking(i)).collect();
        self.restrict(&keep)
    }

    /// Drops the attacks `(a,a)` but keeps every argument.
    pub fn without_self_loops(&self) -> ArgumentationFramework {
        let attacks = self.attacks.iter().copied().filter(|(a, b)| a != b).collect();
        Self::from_indices(self.arguments.clone(), attacks)
    }

    /// Adds `(b,a)` for every attack `(a,b)` and drops self-loops.
    pub fn symmetrized(&self) -> ArgumentationFramework {
        let attacks = self
            .attacks
            .iter()
            .filter(|(a, b)| a != b)
            .flat_map(|&(a, b)| [(a, b), (b, a)])
            .collect();
        Self::from_indices(self.arguments.clone(), attacks)
    }

    pub fn is_symmetric(&self) -> bool {
        self.attacks.iter().all(|&(a, b)| self.attacks_between(b, a))
    }

    fn restrict(&self, keep: &[bool]) -> ArgumentationFramework {
        let mut remap = vec![usize::MAX; self.len()];
        let mut arguments = Vec::new();
        for (i, arg) in self.arguments.iter().enumerate() {
            if keep[i] {
                remap[i] = arguments.len();
                arguments.push(arg.clone());
            }
        }
        let attacks = self
            .attacks
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (remap[a], remap[b]))
            .collect();
        Self::from_indices(arguments, attacks)
    }

    fn indices_of(&self, s: &Extension) -> Result<Vec<usize>, AfError> {
        s.iter()
            .map(|a| {
                self.index_of(a.as_str())
                    .ok_or_else(|| AfError::UnknownArgument(a.to_string()))
            })
            .collect()
    }

    fn extension_of(&self, members: impl IntoIterator<Item = usize>) -> Extension {
        members.into_iter().map(|i| self.arguments[i].clone()).collect()
    }

    /// No attack has both endpoints in `s`.
    pub fn is_conflict_free(&self, s: &Extension) -> Result<bool, AfError> {
        let members = self.indices_of(s)?;
        let mut inside = vec![false; self.len()];
        for &i in &members {
            inside[i] = true;
        }
        Ok(members
            .iter()
            .all(|&i| self.targets[i].iter().all(|&j| !inside[j])))
    }

    /// The characteristic function: every argument all of whose attackers are
    /// attacked by some member of `s`.
    pub fn defended_set(&self, s: &Extension) -> Result<Extension, AfError> {
        let members = self.indices_of(s)?;
        let mut inside = vec![false; self.len()];
        for &i in &members {
            inside[i] = true;
        }
        let countered = |b: usize| self.attackers[b].iter().any(|&c| inside[c]);
        Ok(self.extension_of(
            (0..self.len()).filter(|&a| self.attackers[a].iter().all(|&b| countered(b))),
        ))
    }

    /// `s` together with everything `s` attacks.
    pub fn range_of(&self, s: &Extension) -> Result<Extension, AfError> {
        let members = self.indices_of(s)?;
        let mut inside = vec![false; self.len()];
        for &i in &members {
            inside[i] = true;
            for &j in &self.targets[i] {
                inside[j] = true;
            }
        }
        Ok(self.extension_of((0..self.len()).filter(|&i| inside[i])))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) use crate::samples::example_one;

    fn ext(names: &[&str]) -> Extension {
        Extension::from_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_sentinel_and_bad_names() {
        assert_eq!(ArgumentId::new("0"), Err(AfError::ReservedName));
        assert!(ArgumentId::new("").is_err());
        assert!(ArgumentId::new("a b").is_err());
        assert!(ArgumentId::new("a,b").is_err());
        assert!(ArgumentId::new("00").is_ok());
    }

    #[test]
    fn undeclared_endpoint_is_an_error() {
        let err = ArgumentationFramework::from_names(&["a"], &[("a", "b")]).unwrap_err();
        assert!(matches!(err, AfError::UndeclaredArgument { missing, .. } if missing == "b"));
    }

    #[test]
    fn arguments_are_sorted_and_attacks_deduplicated() {
        let af = ArgumentationFramework::from_names(&["c", "a", "b", "a"], &[("c", "a"), ("c", "a")]).unwrap();
        let names: Vec<_> = af.arguments().iter().map(|a| a.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
        assert_eq!(af.attack_count(), 1);
    }

    #[test]
    fn degree_counts_distinct_neighbours() {
        assert_eq!(example_one().degree(), 3);
        assert_eq!(ArgumentationFramework::from_names(&["a", "b"], &[]).unwrap().degree(), 0);
        assert_eq!(ArgumentationFramework::from_names(&["a"], &[("a", "a")]).unwrap().degree(), 0);
        let empty = ArgumentationFramework::from_names(&[], &[]).unwrap();
        assert_eq!(empty.degree(), 0);
    }

    #[test]
    fn conflict_freeness() {
        let af = example_one();
        assert!(af.is_conflict_free(&ext(&["b", "d"])).unwrap());
        assert!(!af.is_conflict_free(&ext(&["a", "b"])).unwrap());
        assert!(af.is_conflict_free(&ext(&[])).unwrap());
        assert_eq!(
            af.is_conflict_free(&ext(&["z"])),
            Err(AfError::UnknownArgument("z".into()))
        );
    }

    #[test]
    fn characteristic_function() {
        let af = example_one();
        let defended = af.defended_set(&ext(&["b", "d"])).unwrap();
        assert!(defended.contains("b") && defended.contains("d"));
        assert_eq!(af.defended_set(&ext(&[])).unwrap(), ext(&[]));

        let lone = ArgumentationFramework::from_names(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(lone.defended_set(&ext(&[])).unwrap(), ext(&["a"]));
    }

    #[test]
    fn range() {
        let af = example_one();
        assert_eq!(af.range_of(&ext(&["a"])).unwrap(), ext(&["a", "b", "c", "d"]));
        assert_eq!(af.range_of(&ext(&["b", "d"])).unwrap(), ext(&["a", "b", "c", "d"]));
        assert_eq!(af.range_of(&ext(&[])).unwrap(), ext(&[]));
    }

    #[test]
    fn stripping_self_attackers() {
        let af = ArgumentationFramework::from_names(&["a", "b"], &[("a", "a"), ("a", "b")]).unwrap();
        assert_eq!(
            af.strip_self_attackers(),
            ArgumentationFramework::from_names(&["b"], &[]).unwrap()
        );
        assert_eq!(example_one().strip_self_attackers(), example_one());
        let lone = ArgumentationFramework::from_names(&["a"], &[("a", "a")]).unwrap();
        assert!(lone.strip_self_attackers().is_empty());
    }

    #[test]
    fn symmetrize_drops_loops() {
        let af = ArgumentationFramework::from_names(&["a", "b"], &[("a", "a"), ("a", "b")]).unwrap();
        let sym = af.symmetrized();
        assert!(sym.is_symmetric());
        assert_eq!(sym.attack_count(), 2);
        assert!(!example_one().is_symmetric());
    }

    #[test]
    fn extension_display() {
        assert_eq!(ext(&["d", "b"]).to_string(), "{b,d}");
        assert_eq!(ext(&[]).to_string(), "{}");
    }
}
