//! Property suites that cross-check the library's independent algorithms
//! against each other on exhaustive and seeded random instance families.
//!
//! Each suite yields one or more [`CheckResult`]s. A check fails when some
//! instance violates the property; its witness is greedily minimized and
//! serialized in the matching input format. Instances that hit a resource
//! cap are counted as unresolved, and an unresolved check does not pass.

pub mod families;
mod minimize;
mod suites;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::homological::FieldChoice;
use crate::limits::Limits;
use crate::SimplicialComplex;

pub use minimize::{minimize_complex, minimize_graph, minimize_ideal};

/// Suite names accepted by [`run_suite`], besides `all`.
pub const SUITES: &[&str] = &[
    "lemma-1.1",
    "lemma-1.2",
    "prop-1.3",
    "thm-1.4a",
    "thm-1.4b",
    "thm-1.4c",
    "cor-1.5",
    "lemma-1.6",
    "lemma-2.1",
    "cor-2.2",
    "lemma-3.2",
    "thm-3.3",
    "cor-3.5",
    "thm-3.6",
    "thm-4.1",
    "lemma-4.2",
    "lemma-4.3",
    "thm-4.4",
];

/// Overrides for a suite run. `None` selects the suite's own default.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub max_n: Option<usize>,
    pub max_facets: Option<usize>,
    pub max_power: Option<u32>,
    pub samples: Option<usize>,
    /// Replaces the random family where a suite takes a single complex.
    pub complex: Option<SimplicialComplex>,
    pub field: FieldChoice,
    pub limits: Limits,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            max_n: None,
            max_facets: None,
            max_power: None,
            samples: None,
            complex: None,
            field: FieldChoice::Rationals,
            limits: suite_limits(),
        }
    }
}

/// Caps used by the suites: generator counts are not limited separately
/// because the lcm lattice cap already bounds the Betti computation.
pub fn suite_limits() -> Limits {
    Limits { max_generators: 4096, max_facets: 128, degree_cap: 16, ..Limits::default() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Instances on which the property was evaluated (vacuous ones excluded).
    pub instances: usize,
    /// Outcome tallies, such as how many instances fell on each side of an equivalence.
    pub stats: BTreeMap<String, usize>,
    /// Minimized failing (or unresolved) instance, in input format.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn stat(&self, key: &str) -> usize {
        self.stats.get(key).copied().unwrap_or(0)
    }
}

/// Runs the named suite, or every suite for `all`.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    if name == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run_suite(s, opts)?);
        }
        return Ok(out);
    }
    let checks = match name {
        "lemma-1.1" => suites::lemma_1_1(opts),
        "lemma-1.2" => suites::lemma_1_2(opts),
        "prop-1.3" => suites::prop_1_3(opts),
        "thm-1.4a" => suites::thm_1_4a(opts),
        "thm-1.4b" => suites::thm_1_4b(opts),
        "thm-1.4c" => suites::thm_1_4c(opts),
        "cor-1.5" => suites::cor_1_5(opts),
        "lemma-1.6" => suites::lemma_1_6(opts),
        "lemma-2.1" => suites::lemma_2_1(opts),
        "cor-2.2" => suites::cor_2_2(opts),
        "lemma-3.2" => suites::lemma_3_2(opts),
        "thm-3.3" => suites::thm_3_3(opts),
        "cor-3.5" => suites::cor_3_5(opts),
        "thm-3.6" => suites::thm_3_6(opts),
        "thm-4.1" => suites::thm_4_1(opts),
        "lemma-4.2" => suites::lemma_4_2(opts),
        "lemma-4.3" => suites::lemma_4_3(opts),
        "thm-4.4" => suites::thm_4_4(opts),
        other => return Err(Error::Domain(format!("unknown suite '{other}'"))),
    };
    Ok(checks)
}

/// What a single instance says about a property.
pub(crate) enum Verdict {
    /// The property holds; the tag is tallied.
    Holds(&'static str),
    /// The premise does not apply; the tag is tallied but the instance is not counted.
    Vacuous(&'static str),
    Fails(String),
}

/// Greedy minimizer: given an instance and a failure predicate, returns a smaller failing instance.
pub(crate) type Shrinker<X> = dyn Fn(&X, &dyn Fn(&X) -> bool) -> X;

/// Accumulates verdicts for one check, keeping the first failure.
pub(crate) struct Tally {
    name: String,
    instances: usize,
    stats: BTreeMap<String, usize>,
    failure: Option<(Value, String)>,
    unresolved: Option<(Value, String)>,
}

impl Tally {
    pub(crate) fn new(name: &str) -> Self {
        Tally { name: name.to_string(), instances: 0, stats: BTreeMap::new(), failure: None, unresolved: None }
    }

    pub(crate) fn bump(&mut self, key: &str) {
        *self.stats.entry(key.to_string()).or_default() += 1;
    }

    /// Evaluates `check` on `x`. On the first failure the instance is
    /// shrunk with `shrink` (given a predicate that reproduces the failure)
    /// and serialized with `to_json`.
    pub(crate) fn run<X>(
        &mut self,
        x: &X,
        check: &dyn Fn(&X) -> Result<Verdict>,
        shrink: &Shrinker<X>,
        to_json: &dyn Fn(&X) -> Value,
    ) {
        match check(x) {
            Ok(Verdict::Holds(tag)) => {
                self.instances += 1;
                self.bump(tag);
            }
            Ok(Verdict::Vacuous(tag)) => self.bump(tag),
            Ok(Verdict::Fails(msg)) => {
                self.instances += 1;
                self.bump("failed");
                if self.failure.is_none() {
                    let fails = |y: &X| matches!(check(y), Ok(Verdict::Fails(_)));
                    let small = shrink(x, &fails);
                    let msg = match check(&small) {
                        Ok(Verdict::Fails(m)) => m,
                        _ => msg,
                    };
                    self.failure = Some((to_json(&small), msg));
                }
            }
            Err(e) => {
                self.bump("unresolved");
                if self.unresolved.is_none() {
                    self.unresolved = Some((to_json(x), e.to_string()));
                }
            }
        }
    }

    pub(crate) fn finish(self) -> CheckResult {
        let passed = self.failure.is_none() && self.unresolved.is_none();
        let (witness, detail) = match (self.failure, self.unresolved) {
            (Some((w, m)), _) => (Some(w), Some(m)),
            (None, Some((w, m))) => (Some(w), Some(format!("unresolved: {m}"))),
            (None, None) => (None, None),
        };
        CheckResult { name: self.name, passed, instances: self.instances, stats: self.stats, witness, detail }
    }
}

/// Deterministic per-check seed derived from the run seed and a label.
pub(crate) fn stream_seed(seed: u64, label: &str) -> u64 {
    label.bytes().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}
