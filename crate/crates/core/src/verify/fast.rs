//! Fast characterizations for length-3 codes: 2-frameproofness via A-set
//! intersections, 3-separability via 2-frameproofness plus absence of
//! forbidden configurations, and strong 3-separability via the equivalence
//! with 3-separability (valid for q >= 3).

use super::forbidden::find_forbidden_config;
use super::{Method, Property, VerificationReport, VerifyError, Witness};
use crate::code::{a_sets, Coalition, Code};

/// 2-frameproof check through the A-set criterion: for every coordinate j
/// and distinct symbols i, i', the classes A_i and A_i' intersect in at
/// most one projection, and an intersection of size one forces both
/// classes to be singletons. Violations are converted into definitional
/// framing witnesses.
pub fn is_fpc2_fast(code: &Code) -> Result<VerificationReport, VerifyError> {
    if code.length() != 3 {
        return Err(VerifyError::RequiresLength3(code.length()));
    }
    let mut witness = None;
    'outer: for coord in 0..3 {
        let family = a_sets(code, coord).expect("coordinate in range");
        let classes = family.classes();
        for ai in 0..classes.len() {
            for bi in ai + 1..classes.len() {
                let (small, large) = if classes[ai].1.len() <= classes[bi].1.len() {
                    (&classes[ai].1, &classes[bi].1)
                } else {
                    (&classes[bi].1, &classes[ai].1)
                };
                let mut shared: Vec<&Vec<_>> =
                    small.keys().filter(|p| large.contains_key(*p)).collect();
                if shared.is_empty() {
                    continue;
                }
                shared.sort();
                if shared.len() == 1 && classes[ai].1.len() == 1 && classes[bi].1.len() == 1 {
                    continue;
                }
                // Build a framing witness from the overlap.
                let (class_a, class_b) = (&classes[ai].1, &classes[bi].1);
                witness = Some(if shared.len() >= 2 {
                    // u1 = (i, pi1), v2 = (i', pi2) capture v1 = (i', pi1).
                    let (pi1, pi2) = (shared[0], shared[1]);
                    let u1 = class_a[pi1];
                    let v2 = class_b[pi2];
                    let v1 = class_b[pi1];
                    Witness::Framing { coalition: Coalition::new(vec![u1, v2]), framed: v1 }
                } else {
                    // Exactly one shared projection but some class has a
                    // second member: {u2, v} captures u1 = (i, pi).
                    let pi = shared[0];
                    let (big, other) = if class_a.len() > 1 {
                        (class_a, class_b)
                    } else {
                        (class_b, class_a)
                    };
                    let mut rest: Vec<&Vec<_>> = big.keys().filter(|p| *p != pi).collect();
                    rest.sort();
                    let u2 = big[rest[0]];
                    let v = other[pi];
                    let u1 = big[pi];
                    Witness::Framing { coalition: Coalition::new(vec![u2, v]), framed: u1 }
                });
                break 'outer;
            }
        }
    }
    Ok(VerificationReport {
        property: Property::Fpc,
        t: 2,
        method: Method::Fast,
        verdict: witness.is_none(),
        witness,
    })
}

/// 3-separability check for length-3 codes: 2-frameproof and free of
/// forbidden configurations. A frameproofness violation is reported as the
/// descendant-set collision it induces (the coalition with and without the
/// framed codeword), so every witness is checkable against the SC
/// definition or the configuration patterns.
pub fn is_sc3_fast(code: &Code) -> Result<VerificationReport, VerifyError> {
    if code.length() != 3 {
        return Err(VerifyError::RequiresLength3(code.length()));
    }
    let fpc = is_fpc2_fast(code)?;
    let witness = if let Some(Witness::Framing { coalition, framed }) = fpc.witness {
        let mut with = coalition.indices().to_vec();
        with.push(framed);
        Some(Witness::DescendantCollision {
            first: coalition,
            second: Coalition::new(with),
        })
    } else {
        find_forbidden_config(code)?.map(Witness::ForbiddenConfig)
    };
    Ok(VerificationReport {
        property: Property::Sc,
        t: 3,
        method: Method::Fast,
        verdict: witness.is_none(),
        witness,
    })
}

/// Strong 3-separability for length-3 codes over alphabets of size at
/// least 3, where it coincides with 3-separability. Binary codes are
/// refused: the equivalence is not claimed there, so callers must use the
/// definitional verifier.
pub fn is_ssc3_fast(code: &Code) -> Result<VerificationReport, VerifyError> {
    if code.length() != 3 {
        return Err(VerifyError::RequiresLength3(code.length()));
    }
    if code.alphabet() < 3 {
        return Err(VerifyError::RequiresTernaryAlphabet(code.alphabet()));
    }
    let sc = is_sc3_fast(code)?;
    Ok(VerificationReport {
        property: Property::Ssc,
        t: 3,
        method: Method::Fast,
        verdict: sc.verdict,
        witness: sc.witness,
    })
}
