//! Proper edge coloring of the conflict graph.
//!
//! Conflicts that share no argument may share a column and its FD, so a proper
//! edge coloring with `k` colors yields a conflict table with `k` conflict
//! columns. Misra–Gries colors any simple graph of maximum degree `Δ` with at
//! most `Δ + 1` colors; a greedy pass then tries to empty whole color classes,
//! which never adds a color and often reaches `Δ` on small graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::af::ArgumentId;

use super::Conflict;

/// Color per conflict, keyed by the conflict's (sorted) endpoint pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<(ArgumentId, ArgumentId), usize>,
}

impl EdgeColoring {
    /// Endpoint order within a pair does not matter.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = ((ArgumentId, ArgumentId), usize)>,
    {
        EdgeColoring {
            colors: pairs
                .into_iter()
                .map(|((a, b), c)| (if a <= b { (a, b) } else { (b, a) }, c))
                .collect(),
        }
    }

    pub fn color_of(&self, conflict: &Conflict) -> Option<usize> {
        self.colors.get(&conflict.endpoints).copied()
    }

    /// Number of distinct colors in use.
    pub fn color_count(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    /// Distinct colors in ascending order.
    pub fn palette(&self) -> Vec<usize> {
        self.colors.values().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(ArgumentId, ArgumentId), usize)> {
        self.colors.iter().map(|(k, &c)| (k, c))
    }

    /// Every conflict is colored, nothing else is, and conflicts sharing an
    /// argument get different colors.
    pub fn is_proper(&self, conflicts: &[Conflict]) -> bool {
        if self.colors.len() != conflicts.len() {
            return false;
        }
        let mut seen: HashMap<(&ArgumentId, usize), ()> = HashMap::new();
        for conflict in conflicts {
            let Some(color) = self.color_of(conflict) else {
                return false;
            };
            let (a, b) = &conflict.endpoints;
            if seen.insert((a, color), ()).is_some() || seen.insert((b, color), ()).is_some() {
                return false;
            }
        }
        true
    }
}

/// Misra–Gries coloring of the conflict graph.
pub fn edge_color(conflicts: &[Conflict]) -> EdgeColoring {
    let mut vertex_of: BTreeMap<&ArgumentId, usize> = BTreeMap::new();
    for c in conflicts {
        for v in [&c.endpoints.0, &c.endpoints.1] {
            let next = vertex_of.len();
            vertex_of.entry(v).or_insert(next);
        }
    }
    let edges: Vec<(usize, usize)> = conflicts
        .iter()
        .map(|c| (vertex_of[&c.endpoints.0], vertex_of[&c.endpoints.1]))
        .collect();
    let mut colors = misra_gries(vertex_of.len(), &edges);
    merge_classes(vertex_of.len(), &edges, &mut colors);
    EdgeColoring::from_pairs(
        conflicts
            .iter()
            .zip(colors)
            .map(|(c, color)| (c.endpoints.clone(), color)),
    )
}

const NONE: u32 = u32::MAX;

/// Per-vertex color slots: `at[v][c]` is the neighbour reached from `v` over
/// the edge colored `c`, and `used[v]` the same information as a bitset.
struct Palette {
    k: usize,
    at: Vec<Vec<u32>>,
    used: Vec<Vec<u64>>,
}

impl Palette {
    fn new(n: usize, k: usize) -> Self {
        let words = k.div_ceil(64).max(1);
        Palette {
            k,
            at: vec![vec![NONE; k]; n],
            used: vec![vec![0; words]; n],
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn first_free(&self, v: usize) -> usize {
        (0..self.k)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree at most Δ always has one of Δ+1 colors free")
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c), "color {c} clash on ({u},{v})");
        self.at[u][c] = v as u32;
        self.at[v][c] = u as u32;
        self.used[u][c / 64] |= 1 << (c % 64);
        self.used[v][c / 64] |= 1 << (c % 64);
    }

    fn unset(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = NONE;
        self.at[v][c] = NONE;
        self.used[u][c / 64] &= !(1 << (c % 64));
        self.used[v][c / 64] &= !(1 << (c % 64));
    }

    /// Maximal fan of `u` starting at `v`: distinct neighbours `F[0] = v, F[1], ..`
    /// where the color of `(u, F[i+1])` is free on `F[i]`. Returns the fan and
    /// the color of each fan edge (`None` for the uncolored first one).
    fn fan(&self, u: usize, v: usize) -> (Vec<usize>, Vec<usize>) {
        let mut fan = vec![v];
        let mut fan_colors = vec![usize::MAX];
        let mut candidates = self.used[u].clone();
        loop {
            let last = *fan.last().expect("fan starts non-empty");
            let next = candidates
                .iter()
                .zip(&self.used[last])
                .enumerate()
                .find_map(|(w, (&cand, &busy))| {
                    let open = cand & !busy;
                    (open != 0).then(|| w * 64 + open.trailing_zeros() as usize)
                });
            match next {
                Some(c) => {
                    candidates[c / 64] &= !(1 << (c % 64));
                    fan.push(self.at[u][c] as usize);
                    fan_colors.push(c);
                }
                None => return (fan, fan_colors),
            }
        }
    }

    /// Swaps colors `c` and `d` along the maximal path leaving `u` on color `d`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut cur, mut color) = (u, d);
        while !self.is_free(cur, color) {
            let next = self.at[cur][color] as usize;
            path.push((cur, next, color));
            cur = next;
            color = if color == d { c } else { d };
        }
        for &(a, b, col) in &path {
            self.unset(a, b, col);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == d { c } else { d });
        }
    }
}

/// Colors the edges of a simple loop-free graph on `n` vertices with at most
/// `Δ + 1` colors. Returns one color per input edge.
pub(crate) fn misra_gries(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        debug_assert_ne!(u, v, "loops cannot be edge colored");
        degree[u] += 1;
        degree[v] += 1;
    }
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut palette = Palette::new(n, max_degree + 1);

    for &(u, v) in edges {
        let (fan, mut fan_colors) = palette.fan(u, v);
        let c = palette.first_free(u);
        let d = palette.first_free(*fan.last().expect("fan starts non-empty"));
        if c != d {
            palette.invert_path(u, c, d);
            // Only u's d-edge can have changed color, and it is now c.
            for (i, color) in fan_colors.iter_mut().enumerate().skip(1) {
                if palette.at[u][*color] != fan[i] as u32 {
                    *color = if *color == d { c } else { d };
                }
            }
        }
        let w = fan
            .iter()
            .position(|&x| palette.is_free(x, d))
            .expect("some fan vertex has d free after the inversion");
        for i in 1..=w {
            palette.unset(u, fan[i], fan_colors[i]);
        }
        for i in 1..=w {
            palette.set(u, fan[i - 1], fan_colors[i]);
        }
        palette.set(u, fan[w], d);
    }

    edges
        .iter()
        .map(|&(u, v)| {
            (0..palette.k)
                .find(|&c| palette.at[u][c] == v as u32)
                .expect("every edge was colored")
        })
        .collect()
}

/// Repeatedly tries to move every edge of one color class (smallest first)
/// into other existing colors; keeps the move when the whole class empties.
/// Colors are renumbered densely afterwards, preserving their order.
pub(crate) fn merge_classes(n: usize, edges: &[(usize, usize)], colors: &mut [usize]) {
    if edges.is_empty() {
        return;
    }
    let k = colors.iter().copied().max().unwrap_or(0) + 1;
    // count[v][c]: edges at v colored c
    let mut count = vec![vec![0u32; k]; n];
    for (&(u, v), &c) in edges.iter().zip(colors.iter()) {
        count[u][c] += 1;
        count[v][c] += 1;
    }
    let mut alive: Vec<bool> = (0..k).map(|c| colors.contains(&c)).collect();
    loop {
        let mut classes: Vec<(usize, usize)> = (0..k)
            .filter(|&c| alive[c])
            .map(|c| (colors.iter().filter(|&&x| x == c).count(), c))
            .collect();
        classes.sort_unstable();
        let mut merged = false;
        for &(_, victim) in &classes {
            let members: Vec<usize> = (0..edges.len()).filter(|&e| colors[e] == victim).collect();
            let mut moved: Vec<(usize, usize)> = Vec::new();
            for &e in &members {
                let (u, v) = edges[e];
                let target = (0..k).find(|&c| c != victim && alive[c] && count[u][c] == 0 && count[v][c] == 0);
                match target {
                    Some(c) => {
                        count[u][c] += 1;
                        count[v][c] += 1;
                        moved.push((e, c));
                    }
                    None => break,
                }
            }
            if moved.len() == members.len() {
                for &(e, c) in &moved {
                    let (u, v) = edges[e];
                    count[u][victim] -= 1;
                    count[v][victim] -= 1;
                    colors[e] = c;
                }
                alive[victim] = false;
                merged = true;
                break;
            }
            for &(e, c) in &moved {
                let (u, v) = edges[e];
                count[u][c] -= 1;
                count[v][c] -= 1;
            }
        }
        if !merged {
            break;
        }
    }
    let dense: Vec<usize> = alive
        .iter()
        .scan(0, |next, &a| {
            let id = *next;
            *next += usize::from(a);
            Some(id)
        })
        .collect();
    for c in colors.iter_mut() {
        *c = dense[*c];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::ArgumentationFramework;
    use crate::translate::canonical_conflicts;

    fn proper(n: usize, edges: &[(usize, usize)], colors: &[usize]) -> bool {
        let mut seen = BTreeSet::new();
        edges
            .iter()
            .zip(colors)
            .all(|(&(u, v), &c)| seen.insert((u, c)) && seen.insert((v, c)))
            && edges.iter().all(|&(u, v)| u < n && v < n)
    }

    fn max_degree(n: usize, edges: &[(usize, usize)]) -> usize {
        let mut degree = vec![0; n];
        for &(u, v) in edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        degree.into_iter().max().unwrap_or(0)
    }

    #[test]
    fn star_needs_one_color_per_edge() {
        for k in 1..8 {
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            let colors = misra_gries(k + 1, &edges);
            assert!(proper(k + 1, &edges, &colors));
            assert_eq!(colors.iter().collect::<BTreeSet<_>>().len(), k);
        }
    }

    #[test]
    fn complete_graphs_stay_within_vizing() {
        for n in 2..12 {
            let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let colors = misra_gries(n, &edges);
            assert!(proper(n, &edges, &colors), "K{n}");
            assert!(colors.iter().all(|&c| c <= n - 1), "K{n}");
        }
    }

    #[test]
    fn pseudo_random_graphs() {
        // xorshift keeps this test free of the generator used elsewhere
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..300 {
            let n = 2 + (round % 25);
            let density = 1 + next() % 9;
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|_| next() % 10 < density)
                .collect();
            let colors = misra_gries(n, &edges);
            assert!(proper(n, &edges, &colors), "round {round}");
            let used = colors.iter().collect::<BTreeSet<_>>().len();
            assert!(used <= max_degree(n, &edges) + 1, "round {round}");
        }
    }

    #[test]
    fn example_one_coloring() {
        let af = crate::af::tests::example_one();
        let conflicts = canonical_conflicts(&af);
        let coloring = edge_color(&conflicts);
        assert!(coloring.is_proper(&conflicts));
        // Three colors is optimal here and forces {ac}, {ab,cd}, {ad,bc}.
        assert_eq!(coloring.color_count(), 3);
        let class = |a: &str, b: &str| coloring.color_of(&conflicts.iter().find(|c| c.endpoints.0.as_str() == a && c.endpoints.1.as_str() == b).unwrap().clone());
        assert_eq!(class("a", "b"), class("c", "d"));
        assert_eq!(class("a", "d"), class("b", "c"));
    }

    #[test]
    fn merging_keeps_colorings_proper() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..300 {
            let n = 2 + (round % 20);
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|_| next() % 3 == 0)
                .collect();
            let mut colors = misra_gries(n, &edges);
            let before = colors.iter().collect::<BTreeSet<_>>().len();
            merge_classes(n, &edges, &mut colors);
            let after: BTreeSet<_> = colors.iter().copied().collect();
            assert!(proper(n, &edges, &colors), "round {round}");
            assert!(after.len() <= before, "round {round}");
            assert_eq!(after, (0..after.len()).collect(), "round {round}: colors are dense");
        }
    }

    #[test]
    fn single_conflict_single_color() {
        let af = ArgumentationFramework::from_names(&["a", "b"], &[("a", "b")]).unwrap();
        let conflicts = canonical_conflicts(&af);
        assert_eq!(edge_color(&conflicts).color_count(), 1);
        assert_eq!(edge_color(&[]).color_count(), 0);
    }

    #[test]
    fn improper_colorings_are_detected() {
        let af = crate::af::tests::example_one();
        let conflicts = canonical_conflicts(&af);
        let all_same = EdgeColoring::from_pairs(conflicts.iter().map(|c| (c.endpoints.clone(), 0)));
        assert!(!all_same.is_proper(&conflicts));
        let partial = EdgeColoring::from_pairs(conflicts.iter().take(2).map(|c| (c.endpoints.clone(), 0)));
        assert!(!partial.is_proper(&conflicts));
    }
}
