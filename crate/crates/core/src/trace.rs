//! Coalition tracing from an observed descendant set: one linear scan
//! filters the candidate codewords, then the guilty set is the
//! intersection of every candidate subset that explains the observation.

use crate::code::{descendant, descendant_members_counted, Code, CodeError, Coalition, DescendantSet, Symbol};
use crate::verify::DEFAULT_CANDIDATE_CAP;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("observation is inconsistent with the code: no codeword fits it")]
    InconsistentObservation,
    #[error("{candidates} candidate codewords exceed the enumeration cap of {cap}")]
    CapExceeded { candidates: usize, cap: usize },
    #[error("observation file malformed: {0}")]
    MalformedObservation(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone)]
pub struct TraceResult {
    /// Codewords provably held by every coalition explaining the
    /// observation.
    pub guilty: Coalition,
    /// All codewords inside the observed descendant set.
    pub candidates: Coalition,
    /// True when desc(guilty) reproduces the observation exactly, i.e.
    /// the coalition was identified in full.
    pub certified: bool,
    /// Codewords visited by the candidate filter pass (always M).
    pub codewords_scanned: usize,
}

impl TraceResult {
    pub fn to_json(&self) -> Value {
        json!({
            "guilty": self.guilty.one_based(),
            "candidates": self.candidates.one_based(),
            "certified": self.certified,
            "codewords_scanned": self.codewords_scanned,
        })
    }
}

/// Traces an observation with the default candidate cap.
pub fn trace(code: &Code, observation: &DescendantSet) -> Result<TraceResult, TraceError> {
    trace_with_cap(code, observation, DEFAULT_CANDIDATE_CAP)
}

/// Identifies the coalition behind an observed descendant set. The filter
/// pass costs one visit per codeword; the residual subset enumeration is
/// exponential only in the candidate count, which `cap` bounds.
///
/// When the observation arose as desc(C0) on a strongly separable code,
/// `guilty` equals C0 and the result is certified. Observations outside
/// the model degrade to partial information with `certified` false.
pub fn trace_with_cap(
    code: &Code,
    observation: &DescendantSet,
    cap: usize,
) -> Result<TraceResult, TraceError> {
    let (candidates, scanned) = descendant_members_counted(code, observation)?;
    let k = candidates.len();
    if k == 0 {
        return Err(TraceError::InconsistentObservation);
    }
    if k > cap || k >= 63 {
        return Err(TraceError::CapExceeded { candidates: k, cap: cap.min(62) });
    }
    let cols = candidates.indices();
    let mut guilty: Option<Coalition> = None;
    for mask in 1u64..(1u64 << k) {
        let subset: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| cols[i])
            .collect();
        let sub = Coalition::new(subset);
        if descendant(code, &sub).unwrap() == *observation {
            guilty = Some(match guilty {
                None => sub,
                Some(acc) => acc.intersect(&sub),
            });
            if guilty.as_ref().is_some_and(Coalition::is_empty) {
                break;
            }
        }
    }
    let guilty = guilty.unwrap_or_else(|| Coalition::new(Vec::new()));
    let certified = !guilty.is_empty() && descendant(code, &guilty).unwrap() == *observation;
    Ok(TraceResult { guilty, candidates, certified, codewords_scanned: scanned })
}

/// Observation file: line 1 is "n q", then n lines of space-separated
/// symbols, one per coordinate value set.
pub fn parse_observation(text: &str) -> Result<DescendantSet, TraceError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| TraceError::MalformedObservation("missing header".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let bad = || TraceError::MalformedObservation(header.to_string());
    if parts.len() != 2 {
        return Err(bad());
    }
    let n: usize = parts[0].parse().map_err(|_| bad())?;
    let q: u32 = parts[1].parse().map_err(|_| bad())?;
    let mut sets = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| TraceError::MalformedObservation("missing value-set line".into()))?;
        let values: Vec<Symbol> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| TraceError::MalformedObservation(line.to_string()))?;
        sets.push(values);
    }
    Ok(DescendantSet::from_sets(q, sets)?)
}

pub fn serialize_observation(obs: &DescendantSet) -> String {
    let mut out = format!("{} {}\n", obs.length(), obs.alphabet());
    for i in 0..obs.length() {
        let values: Vec<String> = obs.set(i).iter().map(|s| s.to_string()).collect();
        out.push_str(&values.join(" "));
        out.push('\n');
    }
    out
}
