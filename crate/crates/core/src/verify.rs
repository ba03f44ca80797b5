//! Machine checks of the AF ↔ database correspondences and size bounds.
//!
//! Each of the seven semantics with a database counterpart is checked by
//! computing the extensions with the brute-force oracle, the repairs of the
//! translated instance, and comparing the two families under the
//! argument-name ↔ tuple-id bijection.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::af::{extensions_with_cap, AfError, ArgumentId, ArgumentationFramework, Extension, Semantics};
use crate::rdb::{
    covering_repairs_with_cap, enumerate_repairs_with_cap, projection_domain, support_set, CoveringMode, DbError,
    Dependency, Instance, RepairClass, RepairMode, TupleSet,
};
use crate::translate::{
    build_af_db, build_conflict_db, build_defense_db, build_range_db, canonical_conflicts, edge_color, range_attrs,
    Target, TranslateError,
};
use crate::EnumCap;

/// A set of names, the common currency of both sides.
pub type NameSet = BTreeSet<String>;
pub type Family = BTreeSet<NameSet>;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("`{0}` has no database counterpart")]
    NoCounterpart(Semantics),
    #[error(transparent)]
    Af(#[from] AfError),
    #[error(transparent)]
    Db(#[from] DbError),
    #[error(transparent)]
    Translate(#[from] TranslateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    Conflict,
    AfDb,
    RangeDb,
}

impl InstanceKind {
    pub fn tag(self) -> &'static str {
        match self {
            InstanceKind::Conflict => "conflict",
            InstanceKind::AfDb => "af_db",
            InstanceKind::RangeDb => "range_db",
        }
    }
}

/// One row of the semantics ↔ repair-class table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Correspondence {
    pub semantics: Semantics,
    pub repair_class: RepairClass,
    pub instance_kind: InstanceKind,
}

pub const CORRESPONDENCES: [Correspondence; 7] = [
    Correspondence {
        semantics: Semantics::ConflictFree,
        repair_class: RepairClass::All,
        instance_kind: InstanceKind::Conflict,
    },
    Correspondence {
        semantics: Semantics::Naive,
        repair_class: RepairClass::Maximal,
        instance_kind: InstanceKind::Conflict,
    },
    Correspondence {
        semantics: Semantics::Admissible,
        repair_class: RepairClass::All,
        instance_kind: InstanceKind::AfDb,
    },
    Correspondence {
        semantics: Semantics::Preferred,
        repair_class: RepairClass::Maximal,
        instance_kind: InstanceKind::AfDb,
    },
    Correspondence {
        semantics: Semantics::Stable,
        repair_class: RepairClass::FullCovering,
        instance_kind: InstanceKind::RangeDb,
    },
    Correspondence {
        semantics: Semantics::Stage,
        repair_class: RepairClass::MaxCovering,
        instance_kind: InstanceKind::RangeDb,
    },
    Correspondence {
        semantics: Semantics::SemiStable,
        repair_class: RepairClass::MaxCovering,
        instance_kind: InstanceKind::AfDb,
    },
];

/// `None` for complete semantics.
pub fn correspondence(sem: Semantics) -> Option<Correspondence> {
    CORRESPONDENCES.into_iter().find(|c| c.semantics == sem)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub semantics: String,
    pub repair_class: RepairClass,
    pub instance_kind: InstanceKind,
    pub extensions: Family,
    pub repairs: Family,
    pub verdict: bool,
    /// Smallest set (by size, then lexicographically) found in one family only.
    pub counterexample: Option<NameSet>,
}

impl CorrespondenceReport {
    fn new(c: Correspondence, extensions: Family, repairs: Family) -> Self {
        let counterexample = extensions
            .symmetric_difference(&repairs)
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .cloned();
        CorrespondenceReport {
            semantics: c.semantics.tag().to_string(),
            repair_class: c.repair_class,
            instance_kind: c.instance_kind,
            verdict: counterexample.is_none(),
            extensions,
            repairs,
            counterexample,
        }
    }
}

/// Deliberate corruption of translated instances, for testing the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    DropFirstFd,
    DropAllIds,
}

impl Fault {
    fn apply(self, inst: Instance) -> Instance {
        let deps = inst.dependencies().to_vec();
        let kept: Vec<Dependency> = match self {
            Fault::DropFirstFd => {
                let first = deps.iter().position(Dependency::is_functional);
                deps.into_iter()
                    .enumerate()
                    .filter(|(i, _)| Some(*i) != first)
                    .map(|(_, d)| d)
                    .collect()
            }
            Fault::DropAllIds => deps.into_iter().filter(Dependency::is_functional).collect(),
        };
        inst.with_dependencies(kept).expect("a subset of valid dependencies stays valid")
    }
}

pub fn check_correspondence(af: &ArgumentationFramework, sem: Semantics) -> Result<CorrespondenceReport, VerifyError> {
    check_correspondence_with(af, sem, EnumCap::default(), None)
}

pub fn check_correspondence_with_cap(
    af: &ArgumentationFramework,
    sem: Semantics,
    cap: EnumCap,
) -> Result<CorrespondenceReport, VerifyError> {
    check_correspondence_with(af, sem, cap, None)
}

/// All seven correspondences in table order.
pub fn check_all(af: &ArgumentationFramework, cap: EnumCap) -> Result<Vec<CorrespondenceReport>, VerifyError> {
    CORRESPONDENCES
        .iter()
        .map(|c| check_correspondence_with(af, c.semantics, cap, None))
        .collect()
}

fn check_correspondence_with(
    af: &ArgumentationFramework,
    sem: Semantics,
    cap: EnumCap,
    fault: Option<Fault>,
) -> Result<CorrespondenceReport, VerifyError> {
    let c = correspondence(sem).ok_or(VerifyError::NoCounterpart(sem))?;
    cap.check(af.len()).map_err(AfError::from)?;
    let oracle_af = match c.instance_kind {
        InstanceKind::Conflict => af.strip_self_attackers(),
        _ => af.clone(),
    };
    let extensions = extension_family(&oracle_af, sem, cap)?;
    let inst = match c.instance_kind {
        InstanceKind::Conflict => build_conflict_db(af, true)?.instance,
        InstanceKind::AfDb => build_af_db(af)?.instance,
        InstanceKind::RangeDb => build_range_db(af)?.instance,
    };
    let inst = match fault {
        Some(f) => f.apply(inst),
        None => inst,
    };
    let repairs = repair_family(&inst, c.repair_class, af, cap)?;
    Ok(CorrespondenceReport::new(c, extensions, repairs))
}

fn extension_family(af: &ArgumentationFramework, sem: Semantics, cap: EnumCap) -> Result<Family, AfError> {
    Ok(extensions_with_cap(af, sem, cap)?.iter().map(Extension::names).collect())
}

/// Covering classes use the range attributes of `af`.
fn repair_family(
    inst: &Instance,
    class: RepairClass,
    af: &ArgumentationFramework,
    cap: EnumCap,
) -> Result<Family, DbError> {
    let family = match class {
        RepairClass::All => enumerate_repairs_with_cap(inst, RepairMode::All, cap)?,
        RepairClass::Maximal => enumerate_repairs_with_cap(inst, RepairMode::Maximal, cap)?,
        RepairClass::MaxCovering => covering_repairs_with_cap(inst, CoveringMode::Max, &range_attrs(af).attrs, cap)?,
        RepairClass::FullCovering => covering_repairs_with_cap(inst, CoveringMode::Full, &range_attrs(af).attrs, cap)?,
    };
    Ok(family.repairs.iter().map(names).collect())
}

fn names(set: &TupleSet) -> NameSet {
    set.iter().map(|t| t.to_string()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    AtMost,
    Exactly,
}

/// One counted quantity against its bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub table: Target,
    pub quantity: String,
    pub actual: usize,
    pub relation: Relation,
    pub bound: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeReport {
    pub arguments: usize,
    pub degree: usize,
    pub checks: Vec<BoundCheck>,
}

impl SizeReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    fn push(&mut self, table: Target, quantity: &str, actual: usize, relation: Relation, bound: usize) {
        let holds = match relation {
            Relation::AtMost => actual <= bound,
            Relation::Exactly => actual == bound,
        };
        self.checks.push(BoundCheck {
            table,
            quantity: quantity.to_string(),
            actual,
            relation,
            bound,
            holds,
        });
    }
}

/// Builds all four instances (compressed where applicable) and counts rows,
/// columns and dependencies.
pub fn check_size_bounds(af: &ArgumentationFramework) -> Result<SizeReport, TranslateError> {
    use Relation::{AtMost, Exactly};
    let n = af.len();
    let degree = af.degree();
    let mut report = SizeReport {
        arguments: n,
        degree,
        checks: Vec::new(),
    };
    let fds = |i: &Instance| i.functional_dependencies().count();
    let ids = |i: &Instance| i.inclusion_dependencies().count();

    let conflict = build_conflict_db(af, true)?.instance;
    report.push(Target::Conflict, "rows", conflict.row_count(), AtMost, n);
    report.push(Target::Conflict, "columns", conflict.column_count(), AtMost, n + 1);
    report.push(Target::Conflict, "fds", fds(&conflict), AtMost, n);
    report.push(Target::Conflict, "fds vs degree+1", fds(&conflict), AtMost, degree + 1);
    if n > 0 {
        report.push(Target::Conflict, "degree+1", degree + 1, AtMost, n);
    }
    report.push(Target::Conflict, "ids", ids(&conflict), Exactly, 0);
    let conflicts = canonical_conflicts(&af.strip_self_attackers());
    let coloring = edge_color(&conflicts);
    report.push(Target::Conflict, "proper coloring", usize::from(coloring.is_proper(&conflicts)), Exactly, 1);

    let defense = build_defense_db(af).instance;
    report.push(Target::Defense, "rows", defense.row_count(), Exactly, n);
    report.push(Target::Defense, "columns", defense.column_count(), Exactly, 2 * n);
    report.push(Target::Defense, "fds", fds(&defense), Exactly, 0);
    report.push(Target::Defense, "ids", ids(&defense), Exactly, n);

    let afdb = build_af_db(af)?.instance;
    report.push(Target::Afdb, "rows", afdb.row_count(), Exactly, n);
    report.push(Target::Afdb, "columns", afdb.column_count(), AtMost, 3 * (n + 1));
    report.push(Target::Afdb, "fds", fds(&afdb), AtMost, n);
    report.push(Target::Afdb, "ids", ids(&afdb), Exactly, n + 1);

    let range = build_range_db(af)?.instance;
    report.push(Target::Range, "rows", range.row_count(), Exactly, n);
    report.push(Target::Range, "columns", range.column_count(), AtMost, 2 * n + 3);
    report.push(Target::Range, "fds", fds(&range), AtMost, n);
    report.push(Target::Range, "ids", ids(&range), Exactly, 1);
    Ok(report)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid suite configuration: {0}")]
pub struct ConfigError(String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub instance_count: usize,
    pub max_args: usize,
    pub attack_probability: f64,
    pub self_loop_probability: f64,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

/// Above this size the lemma on ranges is not checked for every subset.
pub const RANGE_LEMMA_MAX_ARGS: usize = 6;
pub const SUITE_MAX_ARGS: usize = 12;

impl SuiteConfig {
    pub fn new(instance_count: usize, max_args: usize, seed: u64) -> Self {
        SuiteConfig {
            instance_count,
            max_args,
            attack_probability: 0.25,
            self_loop_probability: 0.05,
            seed,
            fault: None,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_args > SUITE_MAX_ARGS {
            return Err(ConfigError(format!("max_args {} exceeds {SUITE_MAX_ARGS}", self.max_args)));
        }
        for (name, p) in [
            ("attack_probability", self.attack_probability),
            ("self_loop_probability", self.self_loop_probability),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(ConfigError(format!("{name} {p} is not in [0, 1]")));
            }
        }
        Ok(())
    }
}

/// Deterministic in `(config.seed, index)`: the index selects the generator
/// stream, so instances do not depend on each other.
pub fn random_af(config: &SuiteConfig, index: usize) -> ArgumentationFramework {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let n = if config.max_args == 0 {
        0
    } else {
        rng.gen_range(1..=config.max_args)
    };
    let names: Vec<ArgumentId> = (0..n)
        .map(|i| ArgumentId::new(format!("a{i}")).expect("generated names are valid"))
        .collect();
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let p = if a == b {
                config.self_loop_probability
            } else {
                config.attack_probability
            };
            if rng.gen_bool(p) {
                attacks.push((names[a].clone(), names[b].clone()));
            }
        }
    }
    ArgumentationFramework::new(names, attacks).expect("attacks range over declared arguments")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: usize,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<NameSet>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

impl CheckTally {
    fn merge(&mut self, other: CheckTally) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.first_failure = match (self.first_failure.take(), other.first_failure) {
            (Some(a), Some(b)) => Some(if b.instance < a.instance { b } else { a }),
            (a, b) => a.or(b),
        };
    }
}

/// Pass/fail counts per named check. Merging is associative and commutative.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub checks: BTreeMap<String, CheckTally>,
}

impl Summary {
    pub fn merge(mut self, other: Summary) -> Summary {
        self.instances += other.instances;
        for (name, tally) in other.checks {
            self.checks.entry(name).or_default().merge(tally);
        }
        self
    }

    pub fn failures(&self) -> usize {
        self.checks.values().map(|t| t.failed).sum()
    }

    pub fn passes(&self) -> usize {
        self.checks.values().map(|t| t.passed).sum()
    }

    pub fn is_success(&self) -> bool {
        self.failures() == 0
    }

    pub fn tally(&self, check: &str) -> Option<&CheckTally> {
        self.checks.get(check)
    }

    fn record(&mut self, check: &str, instance: usize, outcome: Result<(), (String, Option<NameSet>)>) {
        let tally = self.checks.entry(check.to_string()).or_default();
        match outcome {
            Ok(()) => tally.passed += 1,
            Err((detail, counterexample)) => {
                tally.failed += 1;
                if tally.first_failure.as_ref().map_or(true, |f| instance < f.instance) {
                    tally.first_failure = Some(Failure {
                        instance,
                        detail,
                        counterexample,
                    });
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializing plain data");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, t) in &self.checks {
            let status = if t.failed == 0 { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{status} {name}: {} passed, {} failed", t.passed, t.failed);
            if let Some(f) = &t.first_failure {
                let _ = write!(out, "  first failure: instance {}: {}", f.instance, f.detail);
                if let Some(cx) = &f.counterexample {
                    let _ = write!(out, " (counterexample {})", format_set(cx));
                }
                out.push('\n');
            }
        }
        let _ = writeln!(
            out,
            "{} instances, {} checks passed, {} failed",
            self.instances,
            self.passes(),
            self.failures()
        );
        out
    }
}

/// `{x,y}` with members sorted; `{}` when empty.
pub fn format_set<'a>(set: impl IntoIterator<Item = &'a String>) -> String {
    let members: Vec<&str> = set.into_iter().map(String::as_str).collect();
    format!("{{{}}}", members.join(","))
}

/// Runs every check on `instance_count` random frameworks, spread over the
/// available cores.
pub fn run_suite(config: &SuiteConfig) -> Result<Summary, ConfigError> {
    config.validate()?;
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(config.instance_count.max(1));
    let summary = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..config.instance_count)
                        .step_by(workers)
                        .fold(Summary::default(), |acc, i| acc.merge(check_instance(config, i)))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .fold(Summary::default(), Summary::merge)
    });
    Ok(summary)
}

type Outcome = Result<(), (String, Option<NameSet>)>;

/// Returns a failed outcome from a `Result<Outcome, _>` closure.
macro_rules! check {
    ($outcome:expr) => {
        if let Err(failure) = $outcome {
            return Ok(Err(failure));
        }
    };
}

fn families_agree(what: &str, left: &Family, right: &Family) -> Outcome {
    match left
        .symmetric_difference(right)
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
    {
        None => Ok(()),
        Some(cx) => Err((format!("{what}: families differ"), Some(cx.clone()))),
    }
}

fn error_outcome(e: impl std::fmt::Display) -> Outcome {
    Err((e.to_string(), None))
}

/// All checks for the `index`-th random framework.
pub fn check_instance(config: &SuiteConfig, index: usize) -> Summary {
    let af = random_af(config, index);
    let cap = EnumCap::default();
    let mut summary = Summary {
        instances: 1,
        checks: BTreeMap::new(),
    };

    for c in CORRESPONDENCES {
        let outcome = match check_correspondence_with(&af, c.semantics, cap, config.fault) {
            Ok(r) if r.verdict => Ok(()),
            Ok(r) => Err((
                format!("{} vs {} repairs of {}", r.semantics, r.repair_class, r.instance_kind.tag()),
                r.counterexample,
            )),
            Err(e) => error_outcome(e),
        };
        summary.record(&format!("{} = {} ({})", c.semantics, c.repair_class, c.instance_kind.tag()), index, outcome);
    }

    let sizes = match check_size_bounds(&af) {
        Ok(report) => match report.violations().next() {
            None => Ok(()),
            Some(v) => Err((
                format!("{} {}: {} vs bound {}", v.table, v.quantity, v.actual, v.bound),
                None,
            )),
        },
        Err(e) => error_outcome(e),
    };
    summary.record("size bounds", index, sizes);

    let checks: [(&str, fn(&ArgumentationFramework, EnumCap) -> Option<Outcome>); 7] = [
        ("compressed = uncompressed conflict repairs", compression_outcome),
        ("support set = defenders", support_outcome),
        ("range = projected domain", range_outcome),
        ("symmetric: maximal = naive = stable = preferred", symmetric_outcome),
        ("covering classes nest", nesting_outcome),
        ("stable collapse", collapse_outcome),
        ("naive of stripped = naive", stripped_naive_outcome),
    ];
    for (name, check) in checks {
        if let Some(outcome) = check(&af, cap) {
            summary.record(name, index, outcome);
        }
    }
    summary
}

fn conflict_repairs(af: &ArgumentationFramework, compress: bool, mode: RepairMode, cap: EnumCap) -> Result<Family, VerifyError> {
    let inst = build_conflict_db(af, compress)?.instance;
    let family = enumerate_repairs_with_cap(&inst, mode, cap)?;
    Ok(family.repairs.iter().map(names).collect())
}

fn compression_outcome(af: &ArgumentationFramework, cap: EnumCap) -> Option<Outcome> {
    let run = || -> Result<Outcome, VerifyError> {
        for mode in [RepairMode::All, RepairMode::Maximal] {
            let packed = conflict_repairs(af, true, mode, cap)?;
            let plain = conflict_repairs(af, false, mode, cap)?;
            check!(families_agree(&format!("{mode:?}"), &packed, &plain));
        }
        Ok(Ok(()))
    };
    Some(run().unwrap_or_else(error_outcome))
}

/// For every attack `(a, b)` of the loop-free framework, the support of tuple
/// `b` under `u_a ⊆ v_a` is the set of attackers of `a`.
fn support_outcome(af: &ArgumentationFramework, _cap: EnumCap) -> Option<Outcome> {
    let af = af.without_self_loops();
    let inst = build_defense_db(&af).instance;
    for (a, b) in af.attacks() {
        let dep = Dependency::inclusion([format!("u_{a}")], [format!("v_{a}")]);
        let support = match support_set(&inst, &dep, b.as_str()) {
            Ok(s) => names(&s),
            Err(e) => return Some(error_outcome(e)),
        };
        let ia = af.index_of(a.as_str()).expect("attack endpoints are arguments");
        let defenders: NameSet = af.attackers_of(ia).iter().map(|&c| af.arguments()[c].to_string()).collect();
        if support != defenders {
            return Some(Err((
                format!("attack ({a},{b}): support {} but defenders {}", format_set(&support), format_set(&defenders)),
                Some(support),
            )));
        }
    }
    Some(Ok(()))
}

/// `S⁺` equals the values of `S_T` on the range attributes, minus the
/// sentinel, for every `S ⊆ A`. Checked on the combined and range tables.
fn range_outcome(af: &ArgumentationFramework, _cap: EnumCap) -> Option<Outcome> {
    if af.len() > RANGE_LEMMA_MAX_ARGS {
        return None;
    }
    let run = || -> Result<Outcome, VerifyError> {
        let attrs = range_attrs(af).attrs;
        let tables = [build_af_db(af)?.instance, build_range_db(af)?.instance];
        for mask in 0u64..(1 << af.len()) {
            let s: Extension = (0..af.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| af.arguments()[i].clone())
                .collect();
            let expected = af.range_of(&s)?.names();
            let rows: TupleSet = s.iter().map(|a| a.as_str().into()).collect();
            for inst in &tables {
                let mut domain: NameSet = projection_domain(inst, &rows, &attrs)?
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
                domain.remove(crate::af::SENTINEL);
                if domain != expected {
                    return Ok(Err((
                        format!("range of {} is {} but the table gives {}", s, format_set(&expected), format_set(&domain)),
                        Some(s.names()),
                    )));
                }
            }
        }
        Ok(Ok(()))
    };
    Some(run().unwrap_or_else(error_outcome))
}

fn symmetric_outcome(af: &ArgumentationFramework, cap: EnumCap) -> Option<Outcome> {
    let sym = af.symmetrized();
    let run = || -> Result<Outcome, VerifyError> {
        let maximal = conflict_repairs(&sym, true, RepairMode::Maximal, cap)?;
        for sem in [Semantics::Naive, Semantics::Stable, Semantics::Preferred] {
            check!(families_agree(sem.tag(), &maximal, &extension_family(&sym, sem, cap)?));
        }
        Ok(Ok(()))
    };
    Some(run().unwrap_or_else(error_outcome))
}

fn not_subset(what: &str, small: &Family, large: &Family) -> Outcome {
    match small.difference(large).next() {
        None => Ok(()),
        Some(cx) => Err((format!("{what}: not contained"), Some(cx.clone()))),
    }
}

/// Max-covering ⊆ maximal on the combined table, full ⊆ max on the range
/// table, and full-covering on the combined table agrees with the range table.
fn nesting_outcome(af: &ArgumentationFramework, cap: EnumCap) -> Option<Outcome> {
    let run = || -> Result<Outcome, VerifyError> {
        let afdb = build_af_db(af)?.instance;
        let range = build_range_db(af)?.instance;
        let afdb_max_cov = repair_family(&afdb, RepairClass::MaxCovering, af, cap)?;
        let afdb_maximal = repair_family(&afdb, RepairClass::Maximal, af, cap)?;
        check!(not_subset("af_db max-covering in maximal", &afdb_max_cov, &afdb_maximal));
        let range_full = repair_family(&range, RepairClass::FullCovering, af, cap)?;
        let range_max = repair_family(&range, RepairClass::MaxCovering, af, cap)?;
        check!(not_subset("range_db full-covering in max-covering", &range_full, &range_max));
        let afdb_full = repair_family(&afdb, RepairClass::FullCovering, af, cap)?;
        check!(families_agree("full-covering af_db vs range_db", &afdb_full, &range_full));
        Ok(Ok(()))
    };
    Some(run().unwrap_or_else(error_outcome))
}

/// When stable extensions exist, full- and max-covering coincide on the range table.
fn collapse_outcome(af: &ArgumentationFramework, cap: EnumCap) -> Option<Outcome> {
    let run = || -> Result<Option<Outcome>, VerifyError> {
        if extensions_with_cap(af, Semantics::Stable, cap)?.is_empty() {
            return Ok(None);
        }
        let range = build_range_db(af)?.instance;
        let full = repair_family(&range, RepairClass::FullCovering, af, cap)?;
        let max = repair_family(&range, RepairClass::MaxCovering, af, cap)?;
        Ok(Some(families_agree("full vs max covering", &full, &max)))
    };
    run().unwrap_or_else(|e| Some(error_outcome(e)))
}

fn stripped_naive_outcome(af: &ArgumentationFramework, cap: EnumCap) -> Option<Outcome> {
    let run = || -> Result<Outcome, VerifyError> {
        let stripped = extension_family(&af.strip_self_attackers(), Semantics::Naive, cap)?;
        let original = extension_family(af, Semantics::Naive, cap)?;
        Ok(families_agree("naive", &stripped, &original))
    };
    Some(run().unwrap_or_else(error_outcome))
}
