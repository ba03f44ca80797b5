//! From argumentation frameworks to databases.
//!
//! Every builder produces one tuple per argument, identified by the argument's
//! name, so a set of arguments and the corresponding set of tuples carry the
//! same names. The tables differ in their columns:
//!
//! | target     | columns                                          | dependencies              |
//! |------------|--------------------------------------------------|---------------------------|
//! | `conflict` | conflict columns, `n`                            | `x → n` per conflict column |
//! | `defense`  | `u_a`, `v_a` per argument                        | `u_a ⊆ v_a` per argument  |
//! | `afdb`     | conflict columns, `n`, `u_a`/`v_a`, `u_s`/`v_s`  | all of the above plus `u_s ⊆ v_s` |
//! | `range`    | conflict columns, `n`, `v_a`, `u_s`/`v_s`        | FDs plus `u_s ⊆ v_s`      |
//!
//! Self-attacking arguments never produce conflict or defense cells. The
//! conflict table drops them entirely; the combined and range tables keep
//! their rows and exclude them from every repair through `u_s ⊆ v_s`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::af::{ArgumentId, ArgumentationFramework, SENTINEL};
use crate::rdb::{AttributeId, Dependency, Instance, Tuple};

mod coloring;

pub use coloring::{edge_color, EdgeColoring};

/// The name column.
pub const NAME_ATTR: &str = "n";

/// An unordered pair of distinct arguments attacking each other in at least
/// one direction, with its identifier `r<k>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Conflict {
    pub id: String,
    /// Sorted by name.
    pub endpoints: (ArgumentId, ArgumentId),
}

/// One conflict per attacked pair of distinct arguments, numbered `r1, r2, ..`
/// in lexicographic order of the sorted endpoint pairs.
pub fn canonical_conflicts(af: &ArgumentationFramework) -> Vec<Conflict> {
    let pairs: BTreeSet<(usize, usize)> = af
        .attack_indices()
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    pairs
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| Conflict {
            id: format!("r{}", k + 1),
            endpoints: (af.arguments()[a].clone(), af.arguments()[b].clone()),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("argument `{0}` collides with a generated conflict identifier")]
    NameClash(String),
    #[error("edge coloring does not properly color the conflicts: {0}")]
    InvalidColoring(String),
}

/// How conflicts are laid out over columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConflictLayout {
    /// One column and FD per conflict.
    PerConflict,
    /// One column and FD per color of the given coloring.
    Colored(EdgeColoring),
    /// One column and FD per color of a Misra–Gries coloring.
    MisraGries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Conflict,
    Defense,
    Afdb,
    Range,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Conflict, Target::Defense, Target::Afdb, Target::Range];

    pub fn tag(self) -> &'static str {
        match self {
            Target::Conflict => "conflict",
            Target::Defense => "defense",
            Target::Afdb => "afdb",
            Target::Range => "range",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| format!("unknown target `{s}` (expected conflict, defense, afdb or range)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColumnRole {
    Conflict,
    Name,
    DefenseU,
    DefenseV,
    SelfAttackU,
    SelfAttackV,
}

/// Where a column came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnRecord {
    pub name: String,
    pub role: ColumnRole,
    /// The argument `a` of a `u_a` / `v_a` column.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub argument: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<usize>,
    /// Conflicts encoded in a conflict column.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conflicts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictRecord {
    pub id: String,
    pub endpoints: [String; 2],
    /// The attacks (one or both directions) this conflict stands for.
    pub attacks: Vec<[String; 2]>,
    pub column: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<usize>,
}

/// Audit trail of a translation: conflicts, coloring and column provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub target: Target,
    pub compressed: bool,
    /// Tuple ids in row order.
    pub rows: Vec<String>,
    /// Fresh symbol `s` naming the self-attack columns `u_s` / `v_s`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_attack_symbol: Option<String>,
    pub self_attackers: Vec<String>,
    pub conflicts: Vec<ConflictRecord>,
    pub columns: Vec<ColumnRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub range_attributes: Vec<String>,
}

impl Manifest {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializing plain data");
        text.push('\n');
        text
    }

    pub fn column(&self, name: &str) -> Option<&ColumnRecord> {
        self.columns.iter().find(|c| c.name == name)
    }
}

/// A generated instance and its manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub instance: Instance,
    pub manifest: Manifest,
}

impl Translation {
    pub fn into_instance(self) -> Instance {
        self.instance
    }
}

/// The range attributes: `v_x` for every argument `x`, then `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeAttrs {
    pub attrs: Vec<AttributeId>,
}

pub fn range_attrs(af: &ArgumentationFramework) -> RangeAttrs {
    let mut attrs: Vec<AttributeId> = af.arguments().iter().map(|a| v_attr(a.as_str())).collect();
    attrs.push(AttributeId::from(NAME_ATTR));
    RangeAttrs { attrs }
}

fn u_attr(name: &str) -> AttributeId {
    AttributeId::new(format!("u_{name}"))
}

fn v_attr(name: &str) -> AttributeId {
    AttributeId::new(format!("v_{name}"))
}

/// `compress` selects a Misra–Gries layout; otherwise one column per conflict.
pub fn build_conflict_db(af: &ArgumentationFramework, compress: bool) -> Result<Translation, TranslateError> {
    build_conflict_db_with(af, &layout_for(compress))
}

pub fn build_conflict_db_with(af: &ArgumentationFramework, layout: &ConflictLayout) -> Result<Translation, TranslateError> {
    Builder::new(af, Target::Conflict, Some(layout))?.finish()
}

pub fn build_defense_db(af: &ArgumentationFramework) -> Translation {
    Builder::new(af, Target::Defense, None)
        .and_then(Builder::finish)
        .expect("the defense table has no conflict columns to clash with")
}

/// Conflict columns (Misra–Gries), defense columns and the self-attack ID.
pub fn build_af_db(af: &ArgumentationFramework) -> Result<Translation, TranslateError> {
    build_af_db_with(af, &ConflictLayout::MisraGries)
}

pub fn build_af_db_with(af: &ArgumentationFramework, layout: &ConflictLayout) -> Result<Translation, TranslateError> {
    Builder::new(af, Target::Afdb, Some(layout))?.finish()
}

/// The combined table without `u_a` columns or defense IDs.
pub fn build_range_db(af: &ArgumentationFramework) -> Result<Translation, TranslateError> {
    build_range_db_with(af, &ConflictLayout::MisraGries)
}

pub fn build_range_db_with(af: &ArgumentationFramework, layout: &ConflictLayout) -> Result<Translation, TranslateError> {
    Builder::new(af, Target::Range, Some(layout))?.finish()
}

/// Builds any of the four targets with the default layout.
pub fn build(af: &ArgumentationFramework, target: Target, compress: bool) -> Result<Translation, TranslateError> {
    let layout = layout_for(compress);
    match target {
        Target::Conflict => build_conflict_db_with(af, &layout),
        Target::Defense => Ok(build_defense_db(af)),
        Target::Afdb => build_af_db_with(af, &layout),
        Target::Range => build_range_db_with(af, &layout),
    }
}

fn layout_for(compress: bool) -> ConflictLayout {
    if compress {
        ConflictLayout::MisraGries
    } else {
        ConflictLayout::PerConflict
    }
}

struct ConflictColumn {
    name: String,
    color: Option<usize>,
}

struct Builder<'a> {
    af: &'a ArgumentationFramework,
    target: Target,
    compressed: bool,
    conflicts: Vec<Conflict>,
    /// Column index of each conflict.
    placement: Vec<usize>,
    columns: Vec<ConflictColumn>,
}

impl<'a> Builder<'a> {
    fn new(af: &'a ArgumentationFramework, target: Target, layout: Option<&ConflictLayout>) -> Result<Self, TranslateError> {
        let mut builder = Builder {
            af,
            target,
            compressed: false,
            conflicts: Vec::new(),
            placement: Vec::new(),
            columns: Vec::new(),
        };
        let Some(layout) = layout else {
            return Ok(builder);
        };
        let conflicts = canonical_conflicts(&af.strip_self_attackers());
        let ids: BTreeSet<&str> = conflicts.iter().map(|c| c.id.as_str()).collect();
        if let Some(clash) = af.arguments().iter().find(|a| ids.contains(a.as_str())) {
            return Err(TranslateError::NameClash(clash.to_string()));
        }
        let coloring = match layout {
            ConflictLayout::PerConflict => None,
            ConflictLayout::MisraGries => Some(edge_color(&conflicts)),
            ConflictLayout::Colored(coloring) => {
                if !coloring.is_proper(&conflicts) {
                    return Err(TranslateError::InvalidColoring(format!(
                        "{} colored pairs for {} conflicts, or adjacent conflicts share a color",
                        coloring.len(),
                        conflicts.len()
                    )));
                }
                Some(coloring.clone())
            }
        };
        match coloring {
            None => {
                builder.columns = (1..=conflicts.len())
                    .map(|k| ConflictColumn {
                        name: format!("x{k}"),
                        color: None,
                    })
                    .collect();
                builder.placement = (0..conflicts.len()).collect();
            }
            Some(coloring) => {
                let palette = coloring.palette();
                builder.compressed = true;
                builder.columns = palette
                    .iter()
                    .enumerate()
                    .map(|(j, &color)| ConflictColumn {
                        name: format!("x{}", j + 1),
                        color: Some(color),
                    })
                    .collect();
                builder.placement = conflicts
                    .iter()
                    .map(|c| {
                        let color = coloring.color_of(c).expect("proper colorings cover every conflict");
                        palette.binary_search(&color).expect("palette lists every color")
                    })
                    .collect();
            }
        }
        builder.conflicts = conflicts;
        Ok(builder)
    }

    fn has_conflicts(&self) -> bool {
        self.target != Target::Defense
    }

    fn has_u(&self) -> bool {
        matches!(self.target, Target::Defense | Target::Afdb)
    }

    fn has_v(&self) -> bool {
        self.target != Target::Conflict
    }

    fn has_self_attack(&self) -> bool {
        matches!(self.target, Target::Afdb | Target::Range)
    }

    fn fresh_symbol(&self) -> String {
        let mut s = String::from("s");
        while self.af.index_of(&s).is_some() {
            s.push('\'');
        }
        s
    }

    fn finish(self) -> Result<Translation, TranslateError> {
        let af = self.af;
        let names: Vec<&str> = af.arguments().iter().map(ArgumentId::as_str).collect();
        let rows: Vec<usize> = (0..af.len())
            .filter(|&i| self.target != Target::Conflict || !af.is_self_attacking(i))
            .collect();
        let self_symbol = self.has_self_attack().then(|| self.fresh_symbol());

        let mut columns: Vec<ColumnRecord> = Vec::new();
        let mut dependencies = Vec::new();

        if self.has_conflicts() {
            let mut by_column: Vec<Vec<String>> = vec![Vec::new(); self.columns.len()];
            for (c, &p) in self.conflicts.iter().zip(&self.placement) {
                by_column[p].push(c.id.clone());
            }
            for (j, col) in self.columns.iter().enumerate() {
                columns.push(ColumnRecord {
                    name: col.name.clone(),
                    role: ColumnRole::Conflict,
                    argument: None,
                    color: col.color,
                    conflicts: std::mem::take(&mut by_column[j]),
                });
                dependencies.push(Dependency::functional([col.name.as_str()], [NAME_ATTR]));
            }
            columns.push(ColumnRecord {
                name: NAME_ATTR.to_string(),
                role: ColumnRole::Name,
                argument: None,
                color: None,
                conflicts: Vec::new(),
            });
        }
        for name in &names {
            for (present, role, attr) in [
                (self.has_u(), ColumnRole::DefenseU, u_attr(name)),
                (self.has_v(), ColumnRole::DefenseV, v_attr(name)),
            ] {
                if present {
                    columns.push(ColumnRecord {
                        name: attr.to_string(),
                        role,
                        argument: Some(name.to_string()),
                        color: None,
                        conflicts: Vec::new(),
                    });
                }
            }
            if self.has_u() {
                dependencies.push(Dependency::inclusion([u_attr(name)], [v_attr(name)]));
            }
        }
        if let Some(s) = &self_symbol {
            for (role, attr) in [(ColumnRole::SelfAttackU, u_attr(s)), (ColumnRole::SelfAttackV, v_attr(s))] {
                columns.push(ColumnRecord {
                    name: attr.to_string(),
                    role,
                    argument: None,
                    color: None,
                    conflicts: Vec::new(),
                });
            }
            dependencies.push(Dependency::inclusion([u_attr(s)], [v_attr(s)]));
        }

        // Conflict cell lookup: (argument, column) -> conflict id.
        let mut conflict_cell: HashMap<(usize, usize), &str> = HashMap::new();
        for (c, &col) in self.conflicts.iter().zip(&self.placement) {
            for endpoint in [&c.endpoints.0, &c.endpoints.1] {
                let a = af.index_of(endpoint.as_str()).expect("conflict endpoints are arguments");
                let previous = conflict_cell.insert((a, col), c.id.as_str());
                debug_assert!(previous.is_none(), "two conflicts of one argument share a column");
            }
        }

        let tuples = rows
            .iter()
            .map(|&i| {
                let mut values: Vec<String> = Vec::with_capacity(columns.len());
                if self.has_conflicts() {
                    for col in 0..self.columns.len() {
                        values.push(conflict_cell.get(&(i, col)).unwrap_or(&names[i]).to_string());
                    }
                    values.push(names[i].to_string());
                }
                if self.has_u() || self.has_v() {
                    // u_b = b when i and b interact, v_b = b when i attacks b.
                    let mut u = vec![SENTINEL; names.len()];
                    let mut v = vec![SENTINEL; names.len()];
                    for &b in af.targets_of(i).iter().filter(|&&b| b != i) {
                        u[b] = names[b];
                        v[b] = names[b];
                    }
                    for &b in af.attackers_of(i).iter().filter(|&&b| b != i) {
                        u[b] = names[b];
                    }
                    for b in 0..names.len() {
                        if self.has_u() {
                            values.push(u[b].to_string());
                        }
                        if self.has_v() {
                            values.push(v[b].to_string());
                        }
                    }
                }
                if self.has_self_attack() {
                    let marker = if af.is_self_attacking(i) { names[i] } else { SENTINEL };
                    values.push(marker.to_string());
                    values.push(SENTINEL.to_string());
                }
                Tuple::new(names[i], values)
            })
            .collect();

        let schema = columns.iter().map(|c| AttributeId::new(c.name.clone())).collect();
        let instance = Instance::new(schema, tuples, dependencies).expect("generated tables are well formed");

        let manifest = Manifest {
            target: self.target,
            compressed: self.compressed,
            rows: rows.iter().map(|&i| names[i].to_string()).collect(),
            self_attack_symbol: self_symbol,
            self_attackers: (0..af.len())
                .filter(|&i| af.is_self_attacking(i))
                .map(|i| names[i].to_string())
                .collect(),
            conflicts: self
                .conflicts
                .iter()
                .zip(&self.placement)
                .map(|(c, &col)| {
                    let (a, b) = (&c.endpoints.0, &c.endpoints.1);
                    let (ia, ib) = (af.index_of(a.as_str()).unwrap(), af.index_of(b.as_str()).unwrap());
                    let attacks = [(a, b, ia, ib), (b, a, ib, ia)]
                        .into_iter()
                        .filter(|&(_, _, x, y)| af.attacks_between(x, y))
                        .map(|(x, y, _, _)| [x.to_string(), y.to_string()])
                        .collect();
                    ConflictRecord {
                        id: c.id.clone(),
                        endpoints: [a.to_string(), b.to_string()],
                        attacks,
                        column: self.columns[col].name.clone(),
                        color: self.columns[col].color,
                    }
                })
                .collect(),
            columns,
            range_attributes: if self.has_v() && self.has_conflicts() {
                range_attrs(af).attrs.iter().map(|a| a.to_string()).collect()
            } else {
                Vec::new()
            },
        };
        Ok(Translation { instance, manifest })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::tests::example_one;
    use crate::rdb::{enumerate_repairs, is_repair, tuple_set, RepairMode, TupleSet};

    fn row(t: &Translation, id: &str) -> Vec<String> {
        t.instance.tuple(id).unwrap().values.iter().map(|v| v.to_string()).collect()
    }

    fn schema(t: &Translation) -> Vec<String> {
        t.instance.schema().iter().map(|a| a.to_string()).collect()
    }

    #[test]
    fn conflicts_of_example_one() {
        let conflicts = canonical_conflicts(&example_one());
        let pairs: Vec<(String, String, String)> = conflicts
            .iter()
            .map(|c| (c.id.clone(), c.endpoints.0.to_string(), c.endpoints.1.to_string()))
            .collect();
        let expected = [("r1", "a", "b"), ("r2", "a", "c"), ("r3", "a", "d"), ("r4", "b", "c"), ("r5", "c", "d")];
        assert_eq!(
            pairs,
            expected
                .iter()
                .map(|(r, a, b)| (r.to_string(), a.to_string(), b.to_string()))
                .collect::<Vec<_>>()
        );
        let mutual = ArgumentationFramework::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(canonical_conflicts(&mutual).len(), 1);
        let lone = ArgumentationFramework::from_names(&["a"], &[("a", "a")]).unwrap();
        assert!(canonical_conflicts(&lone).is_empty());
    }

    #[test]
    fn uncompressed_conflict_table() {
        let t = build_conflict_db(&example_one(), false).unwrap();
        assert_eq!(schema(&t), ["x1", "x2", "x3", "x4", "x5", "n"]);
        // r1=ab r2=ac r3=ad r4=bc r5=cd
        assert_eq!(row(&t, "a"), ["r1", "r2", "r3", "a", "a", "a"]);
        assert_eq!(row(&t, "d"), ["d", "d", "r3", "d", "r5", "d"]);
        assert_eq!(t.instance.dependencies().len(), 5);
        assert!(t.instance.dependencies().iter().all(|d| d.is_functional()));
    }

    #[test]
    fn attack_free_conflict_table_has_only_names() {
        let af = ArgumentationFramework::from_names(&["a", "b"], &[]).unwrap();
        let t = build_conflict_db(&af, true).unwrap();
        assert_eq!(schema(&t), ["n"]);
        assert!(t.instance.dependencies().is_empty());
        assert_eq!(row(&t, "b"), ["b"]);
    }

    #[test]
    fn defense_table_of_example_one() {
        let t = build_defense_db(&example_one());
        assert_eq!(schema(&t), ["u_a", "v_a", "u_b", "v_b", "u_c", "v_c", "u_d", "v_d"]);
        assert_eq!(row(&t, "a"), ["0", "0", "b", "b", "c", "c", "d", "d"]);
        assert_eq!(row(&t, "b"), ["a", "a", "0", "0", "c", "c", "0", "0"]);
        assert_eq!(row(&t, "c"), ["a", "0", "b", "0", "0", "0", "d", "d"]);
        assert_eq!(row(&t, "d"), ["a", "0", "0", "0", "c", "c", "0", "0"]);
        let inst = &t.instance;
        for good in [&["a"][..], &["b"], &["a", "b", "c"]] {
            assert!(is_repair(inst, &tuple_set(good.iter().copied())).unwrap(), "{good:?}");
        }
        for bad in [["c"], ["d"]] {
            assert!(!is_repair(inst, &tuple_set(bad)).unwrap(), "{bad:?}");
        }
    }

    #[test]
    fn attack_free_defense_row_is_all_zero() {
        let af = ArgumentationFramework::from_names(&["a"], &[]).unwrap();
        let t = build_defense_db(&af);
        assert_eq!(row(&t, "a"), ["0", "0"]);
        assert!(is_repair(&t.instance, &tuple_set(["a"])).unwrap());
    }

    #[test]
    fn lone_self_attacker_is_never_repaired() {
        let af = ArgumentationFramework::from_names(&["a"], &[("a", "a")]).unwrap();
        let t = build_af_db(&af).unwrap();
        assert_eq!(schema(&t), ["n", "u_a", "v_a", "u_s", "v_s"]);
        assert_eq!(row(&t, "a"), ["a", "0", "0", "a", "0"]);
        let maximal = enumerate_repairs(&t.instance, RepairMode::All).unwrap();
        assert_eq!(maximal.repairs, BTreeSet::from([TupleSet::new()]));
    }

    #[test]
    fn af_db_maximal_repairs_are_preferred() {
        let t = build_af_db(&example_one()).unwrap();
        let maximal = enumerate_repairs(&t.instance, RepairMode::Maximal).unwrap();
        assert_eq!(maximal.repairs, BTreeSet::from([tuple_set(["b", "d"]), tuple_set(["a"])]));
    }

    #[test]
    fn range_table_layout() {
        let af = example_one();
        let t = build_range_db(&af).unwrap();
        let cols = schema(&t);
        let colors = t.manifest.columns.iter().filter(|c| c.role == ColumnRole::Conflict).count();
        assert_eq!(cols.len(), colors + 1 + 4 + 2);
        assert!(cols.len() <= 2 * af.len() + 3);
        assert_eq!(&cols[colors..], ["n", "v_a", "v_b", "v_c", "v_d", "u_s", "v_s"]);
        assert_eq!(t.instance.inclusion_dependencies().count(), 1);
        assert_eq!(t.instance.functional_dependencies().count(), colors);
    }

    #[test]
    fn range_attributes() {
        let names = |r: RangeAttrs| r.attrs.iter().map(|a| a.to_string()).collect::<Vec<_>>();
        assert_eq!(names(range_attrs(&example_one())), ["v_a", "v_b", "v_c", "v_d", "n"]);
        assert_eq!(names(range_attrs(&ArgumentationFramework::from_names(&[], &[]).unwrap())), ["n"]);
        let looped = ArgumentationFramework::from_names(&["a", "b"], &[("a", "a")]).unwrap();
        assert_eq!(names(range_attrs(&looped)), ["v_a", "v_b", "n"]);
    }

    #[test]
    fn self_attack_columns_get_a_fresh_name() {
        let af = ArgumentationFramework::from_names(&["s", "s'", "t"], &[("s", "s")]).unwrap();
        let t = build_af_db(&af).unwrap();
        assert_eq!(t.manifest.self_attack_symbol.as_deref(), Some("s''"));
        assert!(schema(&t).contains(&"u_s''".to_string()));
        assert_eq!(t.instance.value("s", "u_s''").unwrap().as_str(), "s");
    }

    #[test]
    fn conflict_id_clash_is_rejected() {
        let af = ArgumentationFramework::from_names(&["a", "r1"], &[("a", "r1")]).unwrap();
        assert_eq!(build_conflict_db(&af, true), Err(TranslateError::NameClash("r1".into())));
        // no conflicts, so no identifiers to collide with
        let quiet = ArgumentationFramework::from_names(&["r1"], &[]).unwrap();
        assert!(build_af_db(&quiet).is_ok());
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let af = example_one();
        let flat = EdgeColoring::from_pairs(canonical_conflicts(&af).into_iter().map(|c| (c.endpoints, 0)));
        assert!(matches!(
            build_conflict_db_with(&af, &ConflictLayout::Colored(flat)),
            Err(TranslateError::InvalidColoring(_))
        ));
    }

    #[test]
    fn manifest_records_provenance() {
        let t = build_af_db(&example_one()).unwrap();
        let m = &t.manifest;
        assert_eq!(m.target, Target::Afdb);
        assert!(m.compressed);
        assert_eq!(m.rows, ["a", "b", "c", "d"]);
        let r1 = &m.conflicts[0];
        assert_eq!(r1.endpoints, ["a".to_string(), "b".to_string()]);
        assert_eq!(r1.attacks.len(), 2);
        let col = m.column(&r1.column).unwrap();
        assert!(col.conflicts.contains(&"r1".to_string()));
        assert_eq!(m.column("v_c").unwrap().argument.as_deref(), Some("c"));
        let back: Manifest = serde_json::from_str(&m.to_json()).unwrap();
        assert_eq!(&back, m);
    }
}
