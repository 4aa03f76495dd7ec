//! Definitional verifiers: direct enumeration of all coalitions of size
//! up to t. These serve as the oracles for the fast verifiers and are the
//! only routes available outside the length-3 special cases.

use super::{Method, Property, VerificationReport, VerifyError, Witness, DEFAULT_CANDIDATE_CAP};
use crate::code::{
    descendant, descendant_members, for_each_coalition, Coalition, Code, DescendantSet,
};
use std::collections::HashMap;

/// Frameproof check: no coalition of size <= t may capture an outside
/// codeword in its descendant set. Witness: the framing coalition and the
/// first framed codeword, in enumeration order.
pub fn is_fpc(code: &Code, t: usize) -> VerificationReport {
    assert!(t >= 1, "frameproof requires t >= 1");
    let mut witness = None;
    for_each_coalition(code.size(), t, |idx| {
        let coal = Coalition::new(idx.to_vec());
        let desc = descendant(code, &coal).unwrap();
        let members = descendant_members(code, &desc).unwrap();
        if members.len() > coal.len() {
            let framed = members
                .indices()
                .iter()
                .copied()
                .find(|&c| !coal.contains(c))
                .expect("strictly more members than coalition columns");
            witness = Some(Witness::Framing { coalition: coal, framed });
            return false;
        }
        true
    });
    VerificationReport {
        property: Property::Fpc,
        t,
        method: Method::Definitional,
        verdict: witness.is_none(),
        witness,
    }
}

/// Separability check: all distinct coalitions of size <= t must have
/// distinct descendant sets. Implemented by hashing canonical descendant
/// encodings over every coalition, so the expected cost is linear in the
/// number of coalitions rather than quadratic.
pub fn is_sc(code: &Code, t: usize) -> VerificationReport {
    assert!(t >= 2, "separability requires t >= 2");
    let mut seen: HashMap<DescendantSet, Coalition> = HashMap::new();
    let mut witness = None;
    for_each_coalition(code.size(), t, |idx| {
        let coal = Coalition::new(idx.to_vec());
        let desc = descendant(code, &coal).unwrap();
        if let Some(first) = seen.get(&desc) {
            witness = Some(Witness::DescendantCollision {
                first: first.clone(),
                second: coal,
            });
            return false;
        }
        seen.insert(desc, coal);
        true
    });
    VerificationReport {
        property: Property::Sc,
        t,
        method: Method::Definitional,
        verdict: witness.is_none(),
        witness,
    }
}

/// Intersection of every subset of the code that explains the coalition's
/// descendant set. Any explaining subset is contained in
/// desc(C0) ∩ C, so only subsets of that candidate set are enumerated;
/// `cap` bounds the candidate count before the 2^k enumeration.
pub fn ssc_intersection(
    code: &Code,
    coalition: &Coalition,
    cap: usize,
) -> Result<Coalition, VerifyError> {
    let desc = descendant(code, coalition).expect("valid coalition");
    let members = descendant_members(code, &desc).expect("dimensions match");
    let k = members.len();
    if k > cap || k >= 63 {
        return Err(VerifyError::CandidateCapExceeded {
            coalition: coalition.one_based(),
            candidates: k,
            cap: cap.min(62),
        });
    }
    // The coalition itself always explains its own descendant set, so the
    // intersection starts from it and can only shrink.
    let mut acc = coalition.clone();
    let cols = members.indices();
    for mask in 1u64..(1u64 << k) {
        let subset: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| cols[i])
            .collect();
        let sub = Coalition::new(subset);
        if sub == *coalition {
            continue;
        }
        if descendant(code, &sub).unwrap() == desc {
            acc = acc.intersect(&sub);
            if acc.is_empty() {
                break;
            }
        }
    }
    Ok(acc)
}

/// Strong separability with the default candidate cap.
pub fn is_ssc(code: &Code, t: usize) -> Result<VerificationReport, VerifyError> {
    is_ssc_with_cap(code, t, DEFAULT_CANDIDATE_CAP)
}

/// Strong separability check: for every coalition C0 of size <= t the
/// intersection over all explaining subsets must recover C0 exactly.
pub fn is_ssc_with_cap(
    code: &Code,
    t: usize,
    cap: usize,
) -> Result<VerificationReport, VerifyError> {
    assert!(t >= 2, "strong separability requires t >= 2");
    let mut witness = None;
    let mut error = None;
    for_each_coalition(code.size(), t, |idx| {
        let coal = Coalition::new(idx.to_vec());
        if coal.len() == 1 {
            // A singleton's descendant set pins down the codeword itself.
            return true;
        }
        match ssc_intersection(code, &coal, cap) {
            Ok(acc) => {
                if acc != coal {
                    witness = Some(Witness::IntersectionGap {
                        coalition: coal,
                        intersection: acc,
                    });
                    false
                } else {
                    true
                }
            }
            Err(e) => {
                error = Some(e);
                false
            }
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(VerificationReport {
        property: Property::Ssc,
        t,
        method: Method::Definitional,
        verdict: witness.is_none(),
        witness,
    })
}
