//! Reference implementations written straight from the definitions, sharing
//! no code with the library's solvers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use af2db::af::ArgumentationFramework;

pub type Family = BTreeSet<BTreeSet<String>>;

pub fn family(sets: &[&[&str]]) -> Family {
    sets.iter().map(|s| s.iter().map(|x| x.to_string()).collect()).collect()
}

/// Adjacency-matrix view of a framework.
pub struct Reference {
    pub names: Vec<String>,
    attacks: Vec<Vec<bool>>,
}

impl Reference {
    pub fn new(af: &ArgumentationFramework) -> Self {
        let names: Vec<String> = af.arguments().iter().map(|a| a.to_string()).collect();
        let pos = |x: &str| names.iter().position(|n| n == x).unwrap();
        let mut attacks = vec![vec![false; names.len()]; names.len()];
        for (a, b) in af.attacks() {
            attacks[pos(a.as_str())][pos(b.as_str())] = true;
        }
        Reference { names, attacks }
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    pub fn attacks(&self, a: usize, b: usize) -> bool {
        self.attacks[a][b]
    }

    fn subsets(&self) -> Vec<Vec<bool>> {
        let mut out = vec![vec![]];
        for _ in 0..self.n() {
            out = out
                .into_iter()
                .flat_map(|s| {
                    let mut with = s.clone();
                    with.push(true);
                    let mut without = s;
                    without.push(false);
                    [without, with]
                })
                .collect();
        }
        out
    }

    fn conflict_free(&self, s: &[bool]) -> bool {
        (0..self.n()).all(|a| (0..self.n()).all(|b| !(s[a] && s[b] && self.attacks(a, b))))
    }

    fn defends(&self, s: &[bool], a: usize) -> bool {
        (0..self.n())
            .filter(|&b| self.attacks(b, a))
            .all(|b| (0..self.n()).any(|c| s[c] && self.attacks(c, b)))
    }

    fn admissible(&self, s: &[bool]) -> bool {
        self.conflict_free(s) && (0..self.n()).all(|a| !s[a] || self.defends(s, a))
    }

    pub fn range(&self, s: &[bool]) -> Vec<bool> {
        (0..self.n())
            .map(|a| s[a] || (0..self.n()).any(|b| s[b] && self.attacks(b, a)))
            .collect()
    }

    fn names_of(&self, s: &[bool]) -> BTreeSet<String> {
        (0..self.n()).filter(|&i| s[i]).map(|i| self.names[i].clone()).collect()
    }

    fn strictly_below(small: &[bool], large: &[bool]) -> bool {
        small != large && small.iter().zip(large).all(|(&x, &y)| !x || y)
    }

    fn maximal_by(&self, family: &[Vec<bool>], key: impl Fn(&[bool]) -> Vec<bool>) -> Family {
        family
            .iter()
            .filter(|s| !family.iter().any(|t| Self::strictly_below(&key(s), &key(t))))
            .map(|s| self.names_of(s))
            .collect()
    }

    /// Extensions under the semantics named by `tag`.
    pub fn extensions(&self, tag: &str) -> Family {
        let all = self.subsets();
        let cf: Vec<Vec<bool>> = all.iter().filter(|s| self.conflict_free(s)).cloned().collect();
        let adm: Vec<Vec<bool>> = all.iter().filter(|s| self.admissible(s)).cloned().collect();
        let to_family = |v: &[Vec<bool>]| v.iter().map(|s| self.names_of(s)).collect::<Family>();
        match tag {
            "conflict-free" => to_family(&cf),
            "naive" => self.maximal_by(&cf, |s| s.to_vec()),
            "admissible" => to_family(&adm),
            "complete" => to_family(
                &adm.iter()
                    .filter(|s| (0..self.n()).all(|a| s[a] == self.defends(s, a)))
                    .cloned()
                    .collect::<Vec<_>>(),
            ),
            "preferred" => self.maximal_by(&adm, |s| s.to_vec()),
            "stable" => to_family(
                &cf.iter()
                    .filter(|s| self.range(s).iter().all(|&x| x))
                    .cloned()
                    .collect::<Vec<_>>(),
            ),
            "semi-stable" => self.maximal_by(&adm, |s| self.range(s)),
            "stage" => self.maximal_by(&cf, |s| self.range(s)),
            other => panic!("no reference for {other}"),
        }
    }
}

/// Arguments with a self-loop removed, attacks among the rest kept.
pub fn strip(af: &ArgumentationFramework) -> ArgumentationFramework {
    let looped: BTreeSet<String> = af.attacks().filter(|(a, b)| a == b).map(|(a, _)| a.to_string()).collect();
    let keep: Vec<&str> = af.arguments().iter().map(|a| a.as_str()).filter(|a| !looped.contains(*a)).collect();
    let attacks: Vec<(&str, &str)> = af
        .attacks()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .filter(|(a, b)| !looped.contains(*a) && !looped.contains(*b))
        .collect();
    ArgumentationFramework::from_names(&keep, &attacks).unwrap()
}

/// Every attack in both directions, loops dropped.
pub fn symmetrize(af: &ArgumentationFramework) -> ArgumentationFramework {
    let names: Vec<&str> = af.arguments().iter().map(|a| a.as_str()).collect();
    let attacks: Vec<(&str, &str)> = af
        .attacks()
        .filter(|(a, b)| a != b)
        .flat_map(|(a, b)| [(a.as_str(), b.as_str()), (b.as_str(), a.as_str())])
        .collect();
    ArgumentationFramework::from_names(&names, &attacks).unwrap()
}

/// Maximum number of distinct other arguments an argument interacts with.
pub fn degree(af: &ArgumentationFramework) -> usize {
    let r = Reference::new(af);
    (0..r.names.len())
        .map(|a| (0..r.names.len()).filter(|&b| a != b && (r.attacks(a, b) || r.attacks(b, a))).count())
        .max()
        .unwrap_or(0)
}
