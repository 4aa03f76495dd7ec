//! Verifiers for the frameproof (FPC), separable (SC) and strongly
//! separable (SSC) properties.
//!
//! Each property has a definitional verifier that enumerates coalitions
//! directly, and the length-3 cases additionally have fast verifiers built
//! on A-set intersections and forbidden-configuration detection. Negative
//! verdicts always carry a witness that can be re-checked against the
//! definitions with [`check_witness`].

mod definitional;
mod fast;
mod forbidden;

pub use definitional::{is_fpc, is_sc, is_ssc, is_ssc_with_cap, ssc_intersection};
pub use fast::{is_fpc2_fast, is_sc3_fast, is_ssc3_fast};
pub use forbidden::{config_matches, find_forbidden_config};

use crate::code::{descendant, descendant_members, hamming_distance, Coalition, Code, Symbol};
use serde_json::{json, Value};
use std::fmt;
use thiserror::Error;

/// Default cap on |desc(C0) ∩ C| before definitional SSC subset
/// enumeration refuses to run.
pub const DEFAULT_CANDIDATE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(
        "definitional check infeasible: coalition {coalition:?} has {candidates} candidate \
         codewords, above the cap of {cap}"
    )]
    CandidateCapExceeded { coalition: Vec<usize>, candidates: usize, cap: usize },
    #[error("fast verifier requires code length 3, got {0}")]
    RequiresLength3(usize),
    #[error(
        "the fast SSC verifier requires alphabet size >= 3 (got q = {0}); \
         use the definitional verifier for binary codes"
    )]
    RequiresTernaryAlphabet(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Fpc,
    Sc,
    Ssc,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Fpc => "fpc",
            Property::Sc => "sc",
            Property::Ssc => "ssc",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Definitional,
    Fast,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Definitional => "definitional",
            Method::Fast => "fast",
        }
    }
}

/// The four forbidden 4- and 6-column patterns for length-3 codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfigKind {
    Delta1,
    Delta2,
    Delta3,
    Nabla,
}

impl ConfigKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConfigKind::Delta1 => "delta1",
            ConfigKind::Delta2 => "delta2",
            ConfigKind::Delta3 => "delta3",
            ConfigKind::Nabla => "nabla",
        }
    }

    pub fn columns(self) -> usize {
        match self {
            ConfigKind::Nabla => 6,
            _ => 4,
        }
    }
}

/// A concrete forbidden-configuration occurrence: the matched columns in
/// the pattern's order and the symbols bound to the pattern letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenConfigWitness {
    pub kind: ConfigKind,
    /// 0-based column indices in pattern order (w1..w4 or u1..u6).
    pub columns: Vec<usize>,
    /// Letter -> symbol bindings (a,b,c,d,e,f,g for deltas; a1..c3 for nabla).
    pub bindings: Vec<(String, Symbol)>,
}

/// Violation evidence attached to a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The coalition's descendant set captures an outside codeword.
    Framing { coalition: Coalition, framed: usize },
    /// Two distinct coalitions with identical descendant sets.
    DescendantCollision { first: Coalition, second: Coalition },
    /// The intersection over all subsets explaining desc(C0) is not C0.
    IntersectionGap { coalition: Coalition, intersection: Coalition },
    ForbiddenConfig(ForbiddenConfigWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub property: Property,
    pub t: usize,
    pub method: Method,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    /// JSON record with 1-based column indices.
    pub fn to_json(&self) -> Value {
        json!({
            "property": self.property.as_str(),
            "t": self.t,
            "method": self.method.as_str(),
            "verdict": self.verdict,
            "witness": self.witness.as_ref().map(witness_json),
        })
    }
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|&i| i + 1).collect()
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Framing { coalition, framed } => json!({
            "kind": "framing",
            "coalition": coalition.one_based(),
            "framed": framed + 1,
        }),
        Witness::DescendantCollision { first, second } => json!({
            "kind": "descendant_collision",
            "first": first.one_based(),
            "second": second.one_based(),
        }),
        Witness::IntersectionGap { coalition, intersection } => json!({
            "kind": "intersection_gap",
            "coalition": coalition.one_based(),
            "intersection": intersection.one_based(),
        }),
        Witness::ForbiddenConfig(cfg) => json!({
            "kind": "forbidden_config",
            "pattern": cfg.kind.as_str(),
            "columns": one_based(&cfg.columns),
            "bindings": cfg.bindings.iter().map(|(l, s)| json!([l, s])).collect::<Vec<_>>(),
        }),
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-{}(t={}): {}",
            self.method.as_str(),
            self.property.as_str(),
            self.t,
            if self.verdict { "true" } else { "false" }
        )?;
        match &self.witness {
            None => Ok(()),
            Some(Witness::Framing { coalition, framed }) => write!(
                f,
                " [coalition {:?} frames codeword {}]",
                coalition.one_based(),
                framed + 1
            ),
            Some(Witness::DescendantCollision { first, second }) => write!(
                f,
                " [coalitions {:?} and {:?} have equal descendant sets]",
                first.one_based(),
                second.one_based()
            ),
            Some(Witness::IntersectionGap { coalition, intersection }) => write!(
                f,
                " [coalition {:?} is traced to {:?}]",
                coalition.one_based(),
                intersection.one_based()
            ),
            Some(Witness::ForbiddenConfig(cfg)) => write!(
                f,
                " [{} on columns {:?}]",
                cfg.kind.as_str(),
                one_based(&cfg.columns)
            ),
        }
    }
}

/// Re-evaluates a report's witness against the definitions. Returns true
/// when the witness independently reproduces the claimed violation.
/// Reports with a positive verdict (no witness) are vacuously fine.
pub fn check_witness(code: &Code, report: &VerificationReport) -> bool {
    let Some(witness) = &report.witness else {
        return report.verdict;
    };
    if report.verdict {
        return false; // a positive verdict must not carry a witness
    }
    match witness {
        Witness::Framing { coalition, framed } => {
            if coalition.validate(code).is_err()
                || coalition.len() > report.t
                || *framed >= code.size()
                || coalition.contains(*framed)
            {
                return false;
            }
            let desc = descendant(code, coalition).expect("validated");
            desc.contains_word(&code.column(*framed))
        }
        Witness::DescendantCollision { first, second } => {
            if first.validate(code).is_err()
                || second.validate(code).is_err()
                || first == second
                || first.len() > report.t
                || second.len() > report.t
            {
                return false;
            }
            descendant(code, first).unwrap() == descendant(code, second).unwrap()
        }
        Witness::IntersectionGap { coalition, intersection } => {
            if coalition.validate(code).is_err() || coalition.len() > report.t {
                return false;
            }
            match ssc_intersection(code, coalition, usize::MAX) {
                Ok(actual) => actual == *intersection && actual != *coalition,
                Err(_) => false,
            }
        }
        Witness::ForbiddenConfig(cfg) => match config_matches(code, cfg.kind, &cfg.columns) {
            Some(bindings) => bindings == cfg.bindings,
            None => false,
        },
    }
}

/// Minimum-distance consequence of 3-separability at length 3: every
/// codeword captured by a small coalition's descendant set but outside the
/// coalition is at Hamming distance >= 2 from each coalition member.
/// Used by property tests; returns the first violating triple if any.
pub fn distance_gap_violation(code: &Code, t: usize) -> Option<(Coalition, usize, usize)> {
    let mut violation = None;
    crate::code::for_each_coalition(code.size(), t, |idx| {
        let coal = Coalition::new(idx.to_vec());
        let desc = descendant(code, &coal).unwrap();
        let members = descendant_members(code, &desc).unwrap();
        for &outside in members.indices() {
            if coal.contains(outside) {
                continue;
            }
            for &inside in coal.indices() {
                let d = hamming_distance(&code.column(inside), &code.column(outside)).unwrap();
                if d < 2 {
                    violation = Some((coal.clone(), inside, outside));
                    return false;
                }
            }
        }
        true
    });
    violation
}
