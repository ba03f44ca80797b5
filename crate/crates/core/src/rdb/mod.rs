//! A single relational table with functional and inclusion dependencies.
//!
//! Values are opaque symbols compared by exact string equality. Tuples carry an
//! identifier and one value per schema attribute; subsets of a table are
//! addressed by tuple identifiers.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::CapExceeded;

mod io;
mod repair;

pub use io::{export_dependencies, export_table, import_table, import_table_with_dependencies, TableFormat};
pub use repair::{
    covering_repairs, covering_repairs_with_cap, enumerate_repairs, enumerate_repairs_with_cap, is_repair,
    projection_domain, satisfies, search_repairs, support_set, CoveringMode, RepairMode,
};

macro_rules! symbol {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            pub fn new(s: impl Into<String>) -> Self {
                $name(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name(s.to_string())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(s)
            }
        }
    };
}

symbol!(
    /// Column name.
    AttributeId
);
symbol!(
    /// Tuple identifier.
    TupleId
);
symbol!(
    /// Cell value.
    Value
);

/// A set of tuple identifiers.
pub type TupleSet = BTreeSet<TupleId>;

/// Builds a [`TupleSet`] from string literals.
pub fn tuple_set<I, S>(ids: I) -> TupleSet
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    ids.into_iter().map(|s| TupleId(s.into())).collect()
}

/// Formats a tuple set as `{s1,s2}`.
pub fn format_tuple_set(set: &TupleSet) -> String {
    let members: Vec<&str> = set.iter().map(TupleId::as_str).collect();
    format!("{{{}}}", members.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DependencyKind {
    #[serde(rename = "fd")]
    Functional,
    #[serde(rename = "id")]
    Inclusion,
}

/// `lhs → rhs` for an FD, `lhs ⊆ rhs` for an ID.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dependency {
    pub kind: DependencyKind,
    pub lhs: Vec<AttributeId>,
    pub rhs: Vec<AttributeId>,
}

impl Dependency {
    pub fn functional<L, R>(lhs: L, rhs: R) -> Self
    where
        L: IntoIterator,
        L::Item: Into<AttributeId>,
        R: IntoIterator,
        R::Item: Into<AttributeId>,
    {
        Dependency {
            kind: DependencyKind::Functional,
            lhs: lhs.into_iter().map(Into::into).collect(),
            rhs: rhs.into_iter().map(Into::into).collect(),
        }
    }

    pub fn inclusion<L, R>(lhs: L, rhs: R) -> Self
    where
        L: IntoIterator,
        L::Item: Into<AttributeId>,
        R: IntoIterator,
        R::Item: Into<AttributeId>,
    {
        Dependency {
            kind: DependencyKind::Inclusion,
            lhs: lhs.into_iter().map(Into::into).collect(),
            rhs: rhs.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_functional(&self) -> bool {
        self.kind == DependencyKind::Functional
    }

    pub fn is_inclusion(&self) -> bool {
        self.kind == DependencyKind::Inclusion
    }
}

impl fmt::Display for Dependency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |attrs: &[AttributeId]| attrs.iter().map(AttributeId::as_str).collect::<Vec<_>>().join(",");
        let op = match self.kind {
            DependencyKind::Functional => "->",
            DependencyKind::Inclusion => "<=",
        };
        write!(f, "{} {op} {}", join(&self.lhs), join(&self.rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tuple {
    pub id: TupleId,
    /// One value per schema attribute, in schema order.
    pub values: Vec<Value>,
}

impl Tuple {
    pub fn new<I>(id: impl Into<TupleId>, values: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<Value>,
    {
        Tuple {
            id: id.into(),
            values: values.into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DbError {
    #[error("duplicate attribute `{0}`")]
    DuplicateAttribute(String),
    #[error("duplicate tuple id `{0}`")]
    DuplicateTupleId(String),
    #[error("tuple `{tuple}` has {found} values but the schema has {expected} attributes")]
    Arity {
        tuple: String,
        expected: usize,
        found: usize,
    },
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("unknown tuple id `{0}`")]
    UnknownTuple(String),
    #[error("inclusion dependency {0} has sides of different length")]
    InclusionArity(String),
    #[error("{0} is not an inclusion dependency")]
    NotInclusion(String),
    #[error("covering repairs need a witness attribute set")]
    MissingWitness,
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
    #[error("{0}")]
    Format(String),
}

/// A table plus the dependencies it is checked against.
#[derive(Debug, Clone)]
pub struct Instance {
    schema: Vec<AttributeId>,
    tuples: Vec<Tuple>,
    dependencies: Vec<Dependency>,
    attr_index: HashMap<AttributeId, usize>,
    tuple_index: HashMap<TupleId, usize>,
}

impl PartialEq for Instance {
    fn eq(&self, other: &Self) -> bool {
        self.schema == other.schema && self.tuples == other.tuples && self.dependencies == other.dependencies
    }
}

impl Eq for Instance {}

impl Instance {
    pub fn new(
        schema: Vec<AttributeId>,
        tuples: Vec<Tuple>,
        dependencies: Vec<Dependency>,
    ) -> Result<Self, DbError> {
        let mut attr_index = HashMap::with_capacity(schema.len());
        for (i, attr) in schema.iter().enumerate() {
            if attr_index.insert(attr.clone(), i).is_some() {
                return Err(DbError::DuplicateAttribute(attr.to_string()));
            }
        }
        let mut tuple_index = HashMap::with_capacity(tuples.len());
        for (i, t) in tuples.iter().enumerate() {
            if t.values.len() != schema.len() {
                return Err(DbError::Arity {
                    tuple: t.id.to_string(),
                    expected: schema.len(),
                    found: t.values.len(),
                });
            }
            if tuple_index.insert(t.id.clone(), i).is_some() {
                return Err(DbError::DuplicateTupleId(t.id.to_string()));
            }
        }
        let instance = Instance {
            schema,
            tuples,
            dependencies: Vec::new(),
            attr_index,
            tuple_index,
        };
        instance.with_dependencies(dependencies)
    }

    /// Same table, different dependency set.
    pub fn with_dependencies(mut self, dependencies: Vec<Dependency>) -> Result<Self, DbError> {
        for dep in &dependencies {
            for attr in dep.lhs.iter().chain(&dep.rhs) {
                if !self.attr_index.contains_key(attr) {
                    return Err(DbError::UnknownAttribute(attr.to_string()));
                }
            }
            if dep.is_inclusion() && dep.lhs.len() != dep.rhs.len() {
                return Err(DbError::InclusionArity(dep.to_string()));
            }
        }
        self.dependencies = dependencies;
        Ok(self)
    }

    pub fn schema(&self) -> &[AttributeId] {
        &self.schema
    }

    pub fn tuples(&self) -> &[Tuple] {
        &self.tuples
    }

    pub fn dependencies(&self) -> &[Dependency] {
        &self.dependencies
    }

    pub fn functional_dependencies(&self) -> impl Iterator<Item = &Dependency> {
        self.dependencies.iter().filter(|d| d.is_functional())
    }

    pub fn inclusion_dependencies(&self) -> impl Iterator<Item = &Dependency> {
        self.dependencies.iter().filter(|d| d.is_inclusion())
    }

    pub fn row_count(&self) -> usize {
        self.tuples.len()
    }

    pub fn column_count(&self) -> usize {
        self.schema.len()
    }

    pub fn tuple_ids(&self) -> TupleSet {
        self.tuples.iter().map(|t| t.id.clone()).collect()
    }

    pub fn attribute_index(&self, attr: &str) -> Option<usize> {
        self.attr_index.get(attr).copied()
    }

    pub fn tuple_index(&self, id: &str) -> Option<usize> {
        self.tuple_index.get(id).copied()
    }

    pub fn tuple(&self, id: &str) -> Option<&Tuple> {
        self.tuple_index(id).map(|i| &self.tuples[i])
    }

    /// Value of tuple `id` in column `attr`.
    pub fn value(&self, id: &str, attr: &str) -> Option<&Value> {
        let t = self.tuple_index(id)?;
        let a = self.attribute_index(attr)?;
        Some(&self.tuples[t].values[a])
    }

    fn attribute_positions(&self, attrs: &[AttributeId]) -> Result<Vec<usize>, DbError> {
        attrs
            .iter()
            .map(|a| {
                self.attribute_index(a.as_str())
                    .ok_or_else(|| DbError::UnknownAttribute(a.to_string()))
            })
            .collect()
    }

    fn tuple_positions(&self, subset: &TupleSet) -> Result<Vec<usize>, DbError> {
        subset
            .iter()
            .map(|id| {
                self.tuple_index(id.as_str())
                    .ok_or_else(|| DbError::UnknownTuple(id.to_string()))
            })
            .collect()
    }

    fn project<'a>(&'a self, row: usize, positions: &'a [usize]) -> impl Iterator<Item = &'a Value> + 'a {
        positions.iter().map(move |&p| &self.tuples[row].values[p])
    }

    fn agree(&self, s: usize, s_cols: &[usize], t: usize, t_cols: &[usize]) -> bool {
        self.project(s, s_cols).eq(self.project(t, t_cols))
    }
}

/// Which repairs a [`RepairFamily`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepairClass {
    All,
    Maximal,
    MaxCovering,
    FullCovering,
}

impl RepairClass {
    pub fn tag(self) -> &'static str {
        match self {
            RepairClass::All => "all",
            RepairClass::Maximal => "maximal",
            RepairClass::MaxCovering => "max-covering",
            RepairClass::FullCovering => "full-covering",
        }
    }
}

impl fmt::Display for RepairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for RepairClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [RepairClass::All, RepairClass::Maximal, RepairClass::MaxCovering, RepairClass::FullCovering]
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| format!("unknown repair class `{s}`"))
    }
}

/// A family of repairs together with the class that produced it. Covering
/// classes also record the attributes whose values are covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairFamily {
    pub class: RepairClass,
    pub witness_attrs: Option<Vec<AttributeId>>,
    pub repairs: BTreeSet<TupleSet>,
}

impl RepairFamily {
    pub fn len(&self) -> usize {
        self.repairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.repairs.is_empty()
    }

    pub fn contains(&self, set: &TupleSet) -> bool {
        self.repairs.contains(set)
    }

    pub fn iter(&self) -> impl Iterator<Item = &TupleSet> {
        self.repairs.iter()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) use crate::samples::scheduling;

    #[test]
    fn construction_errors() {
        let schema = vec![AttributeId::from("A")];
        assert!(matches!(
            Instance::new(vec!["A".into(), "A".into()], vec![], vec![]),
            Err(DbError::DuplicateAttribute(_))
        ));
        assert!(matches!(
            Instance::new(schema.clone(), vec![Tuple::new("t", ["x", "y"])], vec![]),
            Err(DbError::Arity { expected: 1, found: 2, .. })
        ));
        assert!(matches!(
            Instance::new(schema.clone(), vec![Tuple::new("t", ["x"]), Tuple::new("t", ["y"])], vec![]),
            Err(DbError::DuplicateTupleId(_))
        ));
        assert!(matches!(
            Instance::new(schema.clone(), vec![], vec![Dependency::functional(["A"], ["B"])]),
            Err(DbError::UnknownAttribute(_))
        ));
        assert!(matches!(
            Instance::new(schema, vec![], vec![Dependency::inclusion(["A", "A"], ["A"])]),
            Err(DbError::InclusionArity(_))
        ));
    }

    #[test]
    fn lookups() {
        let inst = scheduling();
        assert_eq!(inst.value("s6", "Advisor").unwrap().as_str(), "Dave");
        assert_eq!(inst.row_count(), 6);
        assert_eq!(inst.column_count(), 5);
        assert!(inst.value("s7", "Advisor").is_none());
        assert_eq!(Dependency::functional(["Tutor", "Time"], ["Room"]).to_string(), "Tutor,Time -> Room");
    }

    #[test]
    fn repair_class_tags() {
        for c in [RepairClass::All, RepairClass::Maximal, RepairClass::MaxCovering, RepairClass::FullCovering] {
            assert_eq!(c.tag().parse::<RepairClass>(), Ok(c));
        }
    }
}
