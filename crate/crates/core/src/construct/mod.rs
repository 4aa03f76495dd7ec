//! Difference-matrix construction, column restriction, code generation by
//! translation, algebraic admissibility of column subsets, and the
//! end-to-end strongly-separable-code pipeline.

mod capset;

pub use capset::{capset_exact, capset_greedy, collinear, CapSet, ExactCapSearch, PointOrder};

use crate::code::{Code, CodeError, Symbol};
use crate::field::{FieldElement, FieldError, FieldSpec, VectorView};
use serde_json::{json, Value};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("a difference matrix needs a field of order >= 3, got {0}")]
    FieldTooSmall(u64),
    #[error("alpha must avoid 0 and 1")]
    DegenerateAlpha,
    #[error("expected a 3 x q array over the field")]
    BadDimensions,
    #[error("subset S must be nonempty")]
    EmptySubset,
    #[error("subset element does not belong to the field")]
    SubsetOutsideField,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("the pipeline requires q1 = 1 (mod 6), got q1 = {0}")]
    CongruenceViolation(u64),
    #[error("cap set invalid: points {0:?}, {1:?}, {2:?} are collinear")]
    CollinearTriple(Vec<u64>, Vec<u64>, Vec<u64>),
    #[error("points must be distinct")]
    DegeneratePoints,
    #[error("cap set does not live in F_{expected}^{dim}")]
    CapMismatch { expected: u64, dim: usize },
    #[error("cap file malformed: {0}")]
    MalformedCapFile(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// A 3 x q array over F_q whose row-pair differences each enumerate the
/// whole field: row 1 is all zeros, row 2 enumerates F_q in canonical
/// order, row 3 is alpha times row 2 for some alpha outside {0, 1}.
#[derive(Clone, Debug)]
pub struct DifferenceMatrix {
    spec: FieldSpec,
    alpha: FieldElement,
    rows: [Vec<FieldElement>; 3],
}

impl DifferenceMatrix {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn rows(&self) -> &[Vec<FieldElement>; 3] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> &FieldElement {
        &self.rows[row][col]
    }
}

pub fn difference_matrix(
    spec: &FieldSpec,
    alpha: &FieldElement,
) -> Result<DifferenceMatrix, ConstructError> {
    if spec.order() < 3 {
        return Err(ConstructError::FieldTooSmall(spec.order()));
    }
    if alpha.spec() != spec {
        return Err(ConstructError::SubsetOutsideField);
    }
    if alpha.is_zero() || alpha.is_one() {
        return Err(ConstructError::DegenerateAlpha);
    }
    let row2: Vec<FieldElement> = spec.elements().collect();
    let row3: Vec<FieldElement> = row2
        .iter()
        .map(|x| x.mul(alpha))
        .collect::<Result<_, _>>()?;
    let row1 = vec![spec.zero(); row2.len()];
    Ok(DifferenceMatrix {
        spec: spec.clone(),
        alpha: alpha.clone(),
        rows: [row1, row2, row3],
    })
}

/// Outcome of a difference-matrix validity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DmCheck {
    Valid,
    /// Some ordered row pair whose differences miss part of the field.
    Failing { row_a: usize, row_b: usize },
}

/// Checks Definition-style validity of an arbitrary 3 x q array: for every
/// ordered row pair, the per-column differences must cover F_q exactly.
pub fn dm_validate(rows: &[Vec<FieldElement>], spec: &FieldSpec) -> Result<DmCheck, ConstructError> {
    let q = spec.order() as usize;
    if rows.len() != 3 || rows.iter().any(|r| r.len() != q) {
        return Err(ConstructError::BadDimensions);
    }
    for row in rows {
        for x in row {
            if x.spec() != spec {
                return Err(ConstructError::SubsetOutsideField);
            }
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            if a == b {
                continue;
            }
            let mut seen = HashSet::with_capacity(q);
            for (x, y) in rows[a].iter().zip(&rows[b]) {
                seen.insert(x.sub(y)?.encode());
            }
            if seen.len() != q {
                return Ok(DmCheck::Failing { row_a: a, row_b: b });
            }
        }
    }
    Ok(DmCheck::Valid)
}

/// The base N = D restricted to the columns whose enumeration-row entry
/// lies in S; columns stay in canonical element order.
#[derive(Clone, Debug)]
pub struct BaseMatrix {
    spec: FieldSpec,
    columns: Vec<[FieldElement; 3]>,
}

impl BaseMatrix {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn columns(&self) -> &[[FieldElement; 3]] {
        &self.columns
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }
}

pub fn restrict(dm: &DifferenceMatrix, subset: &[FieldElement]) -> Result<BaseMatrix, ConstructError> {
    if subset.is_empty() {
        return Err(ConstructError::EmptySubset);
    }
    for s in subset {
        if s.spec() != &dm.spec {
            return Err(ConstructError::SubsetOutsideField);
        }
    }
    let keep: HashSet<u64> = subset.iter().map(FieldElement::encode).collect();
    let columns: Vec<[FieldElement; 3]> = (0..dm.rows[1].len())
        .filter(|&i| keep.contains(&dm.rows[1][i].encode()))
        .map(|i| [dm.rows[0][i].clone(), dm.rows[1][i].clone(), dm.rows[2][i].clone()])
        .collect();
    Ok(BaseMatrix { spec: dm.spec.clone(), columns })
}

/// Translates every base column by every field element: M = q * s
/// codewords ordered translate-major, base-column-minor. Symbols are the
/// integer encodings of field elements.
pub fn generate(base: &BaseMatrix) -> Result<Code, ConstructError> {
    let spec = &base.spec;
    let mut columns: Vec<Vec<Symbol>> = Vec::with_capacity(spec.order() as usize * base.width());
    for g in spec.elements() {
        for col in &base.columns {
            let word = col
                .iter()
                .map(|c| Ok(c.add(&g)?.encode() as Symbol))
                .collect::<Result<Vec<_>, FieldError>>()?;
            columns.push(word);
        }
    }
    Ok(Code::from_columns(3, spec.order() as u32, &columns)?)
}

/// The three-variable affine relations whose solvability inside S blocks
/// 3-separability of the generated code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// x + (alpha - 1) w = alpha y
    First,
    /// y + (alpha - 1) w = alpha x
    Second,
    /// x + (alpha - 1) y = alpha w
    Third,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibilityWitness {
    /// A distinct triple (x, y, w) satisfying one of the triangle relations.
    Triangle { kind: TriangleKind, x: u64, y: u64, w: u64 },
    /// A tuple (x, y, z, u, v, w) solving the coupled two-equation system
    /// under an allowed distinctness pattern.
    System { x: u64, y: u64, z: u64, u: u64, v: u64, w: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    pub witness: Option<AdmissibilityWitness>,
}

/// Decides whether the column subset S admits no triangle solution and no
/// solution of the coupled system under the allowed distinctness patterns
/// (all six values distinct, or one side a single repeated value with the
/// other side three distinct values).
///
/// When alpha is a root of x^2 - x + 1 the coupled system decouples into
/// the single relation x + (alpha - 1) z = alpha y, so the system check
/// reduces to the triangle scan; otherwise the system is solved by
/// enumerating (z, u) pairs and back-substituting with membership hashing.
pub fn admissible(
    subset: &[FieldElement],
    alpha: &FieldElement,
) -> Result<Admissibility, ConstructError> {
    if alpha.is_zero() || alpha.is_one() {
        return Err(ConstructError::DegenerateAlpha);
    }
    let spec = alpha.spec().clone();
    for s in subset {
        if s.spec() != &spec {
            return Err(ConstructError::SubsetOutsideField);
        }
    }
    let mut elems: Vec<FieldElement> = subset.to_vec();
    elems.sort_by_key(FieldElement::encode);
    elems.dedup_by_key(|e| e.encode());
    let members: HashSet<u64> = elems.iter().map(FieldElement::encode).collect();

    if let Some(w) = triangle_witness(&elems, &members, alpha, &spec)? {
        return Ok(Admissibility { admissible: false, witness: Some(w) });
    }

    let one = spec.one();
    let alpha_sq = alpha.mul(alpha)?;
    let char_poly = alpha_sq.sub(alpha)?.add(&one)?; // alpha^2 - alpha + 1
    if char_poly.is_zero() {
        // Decoupled case: the system has a patterned solution exactly when
        // a triangle does, and none was found above.
        return Ok(Admissibility { admissible: true, witness: None });
    }

    let w = system_witness(&elems, &members, alpha, &char_poly, &spec)?;
    Ok(Admissibility { admissible: w.is_none(), witness: w })
}

fn triangle_witness(
    elems: &[FieldElement],
    members: &HashSet<u64>,
    alpha: &FieldElement,
    spec: &FieldSpec,
) -> Result<Option<AdmissibilityWitness>, ConstructError> {
    let am1 = alpha.sub(&spec.one())?;
    // Each relation determines its third variable from the other two, so
    // scan ordered pairs and hash-test membership.
    for a in elems {
        for b in elems {
            if a == b {
                continue;
            }
            // First: x = alpha*y - (alpha-1)*w with (y, w) = (a, b)
            let x = alpha.mul(a)?.sub(&am1.mul(b)?)?;
            if x != *a && x != *b && members.contains(&x.encode()) {
                return Ok(Some(AdmissibilityWitness::Triangle {
                    kind: TriangleKind::First,
                    x: x.encode(),
                    y: a.encode(),
                    w: b.encode(),
                }));
            }
            // Second: y = alpha*x - (alpha-1)*w with (x, w) = (a, b)
            let y = alpha.mul(a)?.sub(&am1.mul(b)?)?;
            if y != *a && y != *b && members.contains(&y.encode()) {
                return Ok(Some(AdmissibilityWitness::Triangle {
                    kind: TriangleKind::Second,
                    x: a.encode(),
                    y: y.encode(),
                    w: b.encode(),
                }));
            }
            // Third: w = (x + (alpha-1)*y) / alpha with (x, y) = (a, b)
            let w = a.add(&am1.mul(b)?)?.div(alpha)?;
            if w != *a && w != *b && members.contains(&w.encode()) {
                return Ok(Some(AdmissibilityWitness::Triangle {
                    kind: TriangleKind::Third,
                    x: a.encode(),
                    y: b.encode(),
                    w: w.encode(),
                }));
            }
        }
    }
    Ok(None)
}

fn system_witness(
    elems: &[FieldElement],
    members: &HashSet<u64>,
    alpha: &FieldElement,
    char_poly: &FieldElement,
    spec: &FieldSpec,
) -> Result<Option<AdmissibilityWitness>, ConstructError> {
    let am1 = alpha.sub(&spec.one())?;
    let am1_inv = am1.inv()?;
    let a_am1 = alpha.mul(&am1)?;
    for z in elems {
        for u in elems {
            // E1: alpha x + alpha (alpha-1) z = (alpha-1) y + (alpha^2 - alpha + 1) u
            let k1 = char_poly.mul(u)?.sub(&a_am1.mul(z)?)?;
            // E2: alpha w + alpha (alpha-1) u = (alpha-1) v + (alpha^2 - alpha + 1) z
            let k2 = char_poly.mul(z)?.sub(&a_am1.mul(u)?)?;
            let solve1 = |x: &FieldElement| -> Result<FieldElement, FieldError> {
                alpha.mul(x)?.sub(&k1)?.mul(&am1_inv)
            };
            let solve2 = |w: &FieldElement| -> Result<FieldElement, FieldError> {
                alpha.mul(w)?.sub(&k2)?.mul(&am1_inv)
            };
            let zi = z.encode();
            let ui = u.encode();

            // one-side-constant patterns
            let y_for_zzz = solve1(z)?;
            let xyz_constant = y_for_zzz == *z;
            let v_for_uuu = solve2(u)?;
            let uvw_constant = v_for_uuu == *u;

            let mut sol1 = Vec::new();
            for x in elems {
                let y = solve1(x)?;
                if members.contains(&y.encode()) {
                    sol1.push((x.encode(), y.encode()));
                }
            }
            let mut sol2 = Vec::new();
            for w in elems {
                let v = solve2(w)?;
                if members.contains(&v.encode()) {
                    sol2.push((w.encode(), v.encode()));
                }
            }

            if xyz_constant {
                // x = y = z; need u, v, w three distinct values
                if let Some(&(w, v)) = sol2
                    .iter()
                    .find(|&&(w, v)| w != v && w != ui && v != ui)
                {
                    return Ok(Some(AdmissibilityWitness::System {
                        x: zi, y: zi, z: zi, u: ui, v, w,
                    }));
                }
            }
            if uvw_constant {
                // u = v = w; need x, y, z three distinct values
                if let Some(&(x, y)) = sol1
                    .iter()
                    .find(|&&(x, y)| x != y && x != zi && y != zi)
                {
                    return Ok(Some(AdmissibilityWitness::System {
                        x, y, z: zi, u: ui, v: ui, w: ui,
                    }));
                }
            }

            // all-six-distinct pattern
            if zi == ui {
                continue;
            }
            let good1: Vec<(u64, u64)> = sol1
                .iter()
                .copied()
                .filter(|&(x, y)| x != y && x != zi && x != ui && y != zi && y != ui)
                .collect();
            if good1.is_empty() {
                continue;
            }
            let good2: Vec<(u64, u64)> = sol2
                .iter()
                .copied()
                .filter(|&(w, v)| w != v && w != zi && w != ui && v != zi && v != ui)
                .collect();
            if good2.len() >= 5 {
                // The w values of good2 are pairwise distinct and so are
                // the v values (both injective in w), so a fixed (x, y)
                // conflicts with at most four pairs: five candidates
                // always contain a compatible one.
                let (x, y) = good1[0];
                for &(w, v) in good2.iter().take(5) {
                    if w != x && w != y && v != x && v != y {
                        return Ok(Some(AdmissibilityWitness::System {
                            x, y, z: zi, u: ui, v, w,
                        }));
                    }
                }
                unreachable!("five distinct-component pairs contain a compatible one");
            }
            for &(x, y) in &good1 {
                for &(w, v) in &good2 {
                    if w != x && w != y && v != x && v != y {
                        return Ok(Some(AdmissibilityWitness::System {
                            x, y, z: zi, u: ui, v, w,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Where the subset S of a pipeline run came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapSource {
    Greedy,
    Supplied,
}

impl CapSource {
    pub fn as_str(self) -> &'static str {
        match self {
            CapSource::Greedy => "greedy",
            CapSource::Supplied => "supplied",
        }
    }
}

/// Record of one pipeline run: enough to reproduce the emitted code.
#[derive(Debug, Clone)]
pub struct SscProvenance {
    pub q1: u64,
    pub dim: usize,
    pub q: u64,
    /// Sixth root of unity used, as a base-field encoding.
    pub alpha: u64,
    pub cap_source: CapSource,
    pub cap_points: Vec<Vec<u64>>,
    /// S as big-field encodings in canonical order.
    pub subset: Vec<u64>,
}

impl SscProvenance {
    pub fn to_json(&self) -> Value {
        json!({
            "q1": self.q1,
            "n": self.dim,
            "q": self.q,
            "alpha": self.alpha,
            "cap_source": self.cap_source.as_str(),
            "cap_size": self.cap_points.len(),
            "cap_points": self.cap_points,
            "subset": self.subset,
        })
    }
}

pub struct SscConstruction {
    pub code: Code,
    pub provenance: SscProvenance,
}

/// End-to-end pipeline: over q = q1^n with q1 = 1 (mod 6), build the
/// difference matrix with alpha a sixth root of unity of the base field,
/// restrict its columns to a cap set S (supplied or greedy) viewed inside
/// F_q, and emit the translated (3, q|S|, q) code.
pub fn build_ssc(
    q1: u64,
    dim: usize,
    cap: Option<&CapSet>,
) -> Result<SscConstruction, ConstructError> {
    let (p1, m1) = crate::field::prime_power_parts(q1).ok_or(ConstructError::NotPrimePower(q1))?;
    if q1 % 6 != 1 {
        return Err(ConstructError::CongruenceViolation(q1));
    }
    if dim == 0 {
        return Err(ConstructError::BadDimensions);
    }
    let base = FieldSpec::create(p1, m1, None)?;
    let big = if dim == 1 {
        base.clone()
    } else {
        FieldSpec::create(p1, m1 * dim, None)?
    };
    let view = VectorView::new(&big, &base)?;

    let cap_owned;
    let (cap, cap_source) = match cap {
        Some(c) => {
            if c.base() != &base || c.dim() != dim {
                return Err(ConstructError::CapMismatch { expected: q1, dim });
            }
            c.validate()?;
            (c, CapSource::Supplied)
        }
        None => {
            cap_owned = capset_greedy(&base, dim, &PointOrder::Canonical)?;
            (&cap_owned, CapSource::Greedy)
        }
    };

    let alpha_base = base.sixth_root_of_unity()?;
    let alpha_big = view.embed(&alpha_base)?;

    let mut subset: Vec<FieldElement> = cap
        .points()
        .iter()
        .map(|p| view.from_vector(p))
        .collect::<Result<_, _>>()?;
    subset.sort_by_key(FieldElement::encode);

    let dm = difference_matrix(&big, &alpha_big)?;
    let base_matrix = restrict(&dm, &subset)?;
    let code = generate(&base_matrix)?;

    let provenance = SscProvenance {
        q1,
        dim,
        q: big.order(),
        alpha: alpha_base.encode(),
        cap_source,
        cap_points: cap.points().iter().map(|p| p.encodings()).collect(),
        subset: subset.iter().map(FieldElement::encode).collect(),
    };
    Ok(SscConstruction { code, provenance })
}

/// Convenience: build the subset S of F_q directly from big-field
/// encodings (used by tests exercising arbitrary subsets).
pub fn subset_from_encodings(spec: &FieldSpec, encodings: &[u64]) -> Result<Vec<FieldElement>, ConstructError> {
    let mut out = Vec::with_capacity(encodings.len());
    for &e in encodings {
        out.push(spec.element(e)?);
    }
    Ok(out)
}
