//! Exact arithmetic over GF(p^m) in polynomial-coefficient representation,
//! plus the vector-space view of an extension field over a subfield.

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the supported range (2^32)")]
    OrderTooLarge { p: u64, m: usize },
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: usize },
    #[error("supplied modulus is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("coefficient {value} is out of range for characteristic {p}")]
    CoefficientOutOfRange { value: u64, p: u64 },
    #[error("encoding {value} is out of range for a field of order {order}")]
    EncodingOutOfRange { value: u64, order: u64 },
    #[error("elements belong to different fields")]
    SpecMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("field order {order} is too small for this operation")]
    OrderTooSmall { order: u64 },
    #[error("no primitive 6th root of unity: field order {order} is not 1 mod 6")]
    NoSixthRoot { order: u64 },
    #[error("field of order {big} is not an extension of the base field of order {base}")]
    IncompatibleOrders { big: u64, base: u64 },
    #[error("vector has {got} components, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

/// Arithmetic context for GF(p^m).
///
/// Cheap to clone (shared internally). Elements are stored as length-`m`
/// coefficient vectors over F_p, constant term first, and serialize to the
/// integer encoding `sum coeffs[i] * p^i`.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<SpecData>,
}

struct SpecData {
    p: u64,
    m: usize,
    /// Monic irreducible of degree `m`, constant term first, length `m + 1`.
    modulus: Vec<u64>,
    order: u64,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.inner.p)
            .field("m", &self.inner.m)
            .field("modulus", &self.inner.modulus)
            .field("order", &self.inner.order)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}
impl Eq for FieldSpec {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits a prime power into (p, m); `None` if `n` is not a prime power >= 2.
pub fn prime_power_parts(n: u64) -> Option<(u64, usize)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p <= n / p {
        if n.is_multiple_of(p) {
            let mut rest = n;
            let mut m = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

// --- dense polynomial helpers over F_p, constant term first ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` by a monic divisor `b`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*b.last().unwrap(), 1);
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + (p - lead % p) * bi) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

/// Trial division by every monic polynomial of degree 1..=m/2.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    // constant term zero means x divides f
    if f[0] == 0 {
        return false;
    }
    for d in 1..=(m / 2) {
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut v = enc;
            for c in g.iter_mut().take(d) {
                *c = v % p;
                v /= p;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^m). When `modulus` is `None` the monic irreducible of
    /// degree `m` with the smallest canonical encoding (constant-first
    /// positional order) is selected, so the representation is
    /// reproducible.
    pub fn create(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let mut order: u64 = 1;
        for _ in 0..m {
            order = order
                .checked_mul(p)
                .filter(|&o| o <= u32::MAX as u64)
                .ok_or(FieldError::OrderTooLarge { p, m })?;
        }
        let modulus = match modulus {
            Some(given) => {
                let mut f = given.to_vec();
                poly_trim(&mut f);
                if f.len() != m + 1 || *f.last().unwrap() != 1 {
                    return Err(FieldError::BadModulus { expected: m });
                }
                for &c in &f {
                    if c >= p {
                        return Err(FieldError::CoefficientOutOfRange { value: c, p });
                    }
                }
                if !poly_is_irreducible(&f, p) {
                    return Err(FieldError::ReducibleModulus { p });
                }
                f
            }
            None => Self::smallest_irreducible(p, m),
        };
        Ok(FieldSpec {
            inner: Arc::new(SpecData { p, m, modulus, order }),
        })
    }

    /// Builds GF(q) for a prime power q with the canonical modulus.
    pub fn of_order(q: u64) -> Result<FieldSpec, FieldError> {
        let (p, m) = prime_power_parts(q).ok_or(FieldError::NonPrime(q))?;
        FieldSpec::create(p, m, None)
    }

    fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
        if m == 1 {
            return vec![0, 1]; // x
        }
        let count = p.pow(m as u32);
        for enc in 0..count {
            let mut f = vec![0u64; m + 1];
            let mut v = enc;
            for c in f.iter_mut().take(m) {
                *c = v % p;
                v /= p;
            }
            f[m] = 1;
            if poly_is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("an irreducible of every degree exists over F_p")
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.m
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// Modulus coefficients, constant term first (length `degree() + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: vec![0; self.inner.m],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.inner.m];
        coeffs[0] = 1;
        FieldElement { spec: self.clone(), coeffs }
    }

    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.inner.m {
            return Err(FieldError::DimensionMismatch {
                got: coeffs.len(),
                expected: self.inner.m,
            });
        }
        let mut full = vec![0u64; self.inner.m];
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.inner.p {
                return Err(FieldError::CoefficientOutOfRange { value: c, p: self.inner.p });
            }
            full[i] = c;
        }
        Ok(FieldElement { spec: self.clone(), coeffs: full })
    }

    /// Decodes the positional integer encoding `sum coeffs[i] * p^i`.
    pub fn element(&self, encoding: u64) -> Result<FieldElement, FieldError> {
        if encoding >= self.inner.order {
            return Err(FieldError::EncodingOutOfRange {
                value: encoding,
                order: self.inner.order,
            });
        }
        let mut coeffs = vec![0u64; self.inner.m];
        let mut v = encoding;
        for c in coeffs.iter_mut() {
            *c = v % self.inner.p;
            v /= self.inner.p;
        }
        Ok(FieldElement { spec: self.clone(), coeffs })
    }

    /// All field elements in canonical (encoding) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.order).map(|e| self.element(e).expect("encoding in range"))
    }

    /// Smallest element (in canonical encoding order) of multiplicative
    /// order q - 1.
    pub fn primitive_element(&self) -> Result<FieldElement, FieldError> {
        let q = self.inner.order;
        if q < 3 {
            return Err(FieldError::OrderTooSmall { order: q });
        }
        self.elements()
            .skip(2) // 0 and 1 can never generate a group of size >= 2
            .find(|e| e.multiplicative_order() == Some(q - 1))
            .ok_or(FieldError::OrderTooSmall { order: q })
    }

    /// Smallest root of x^2 - x + 1 of multiplicative order exactly 6.
    /// Exists precisely when q = 1 (mod 6).
    pub fn sixth_root_of_unity(&self) -> Result<FieldElement, FieldError> {
        let q = self.inner.order;
        if q % 6 != 1 {
            return Err(FieldError::NoSixthRoot { order: q });
        }
        let one = self.one();
        self.elements()
            .find(|a| {
                let a2 = a.mul(a).unwrap();
                a2.sub(a).unwrap().add(&one).unwrap().is_zero()
                    && a.multiplicative_order() == Some(6)
            })
            .ok_or(FieldError::NoSixthRoot { order: q })
    }
}

/// An element of GF(p^m), bundled with its field.
#[derive(Clone)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({} in GF({}))", self.encode(), self.spec.order())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.spec.inner.p.hash(state);
        self.coeffs.hash(state);
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Coefficient vector over F_p, constant term first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Positional integer encoding `sum coeffs[i] * p^i`.
    pub fn encode(&self) -> u64 {
        let p = self.spec.inner.p;
        self.coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_spec(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_spec(rhs)?;
        let p = self.spec.inner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement { spec: self.spec.clone(), coeffs })
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_spec(rhs)?;
        let p = self.spec.inner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement { spec: self.spec.clone(), coeffs })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.spec.inner.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement { spec: self.spec.clone(), coeffs }
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_spec(rhs)?;
        let p = self.spec.inner.p;
        let prod = poly_mul(&self.coeffs, &rhs.coeffs, p);
        let mut rem = poly_rem(&prod, &self.spec.inner.modulus, p);
        rem.resize(self.spec.inner.m, 0);
        Ok(FieldElement { spec: self.spec.clone(), coeffs: rem })
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via a^(q-2).
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(self.spec.inner.order - 2))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.mul(&rhs.inv()?)
    }

    /// Order in the multiplicative group; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut ord = self.spec.inner.order - 1;
        let mut n = ord;
        let mut f = 2;
        while f * f <= n {
            if n.is_multiple_of(f) {
                while n.is_multiple_of(f) {
                    n /= f;
                }
                while ord.is_multiple_of(f) && self.pow(ord / f).is_one() {
                    ord /= f;
                }
            }
            f += 1;
        }
        if n > 1 {
            while ord.is_multiple_of(n) && self.pow(ord / n).is_one() {
                ord /= n;
            }
        }
        Some(ord)
    }
}

/// A point of the vector space F_{q1}^n; components are base-field elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorElement {
    components: Vec<FieldElement>,
}

impl fmt::Debug for VectorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c.encode())?;
        }
        write!(f, ")")
    }
}

impl VectorElement {
    pub fn new(components: Vec<FieldElement>) -> VectorElement {
        assert!(!components.is_empty());
        debug_assert!(components.windows(2).all(|w| w[0].spec() == w[1].spec()));
        VectorElement { components }
    }

    pub fn components(&self) -> &[FieldElement] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn base(&self) -> &FieldSpec {
        self.components[0].spec()
    }

    pub fn encodings(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.encode()).collect()
    }

    pub fn add(&self, rhs: &VectorElement) -> Result<VectorElement, FieldError> {
        self.zip_with(rhs, FieldElement::add)
    }

    pub fn sub(&self, rhs: &VectorElement) -> Result<VectorElement, FieldError> {
        self.zip_with(rhs, FieldElement::sub)
    }

    /// Componentwise scalar multiplication by a base-field element.
    pub fn scale(&self, s: &FieldElement) -> Result<VectorElement, FieldError> {
        let components = self
            .components
            .iter()
            .map(|c| c.mul(s))
            .collect::<Result<_, _>>()?;
        Ok(VectorElement { components })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    fn zip_with(
        &self,
        rhs: &VectorElement,
        f: impl Fn(&FieldElement, &FieldElement) -> Result<FieldElement, FieldError>,
    ) -> Result<VectorElement, FieldError> {
        if self.dim() != rhs.dim() {
            return Err(FieldError::DimensionMismatch {
                got: rhs.dim(),
                expected: self.dim(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&rhs.components)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_, _>>()?;
        Ok(VectorElement { components })
    }
}

// --- dense matrices over F_p for the change of basis ---

fn mat_vec(mat: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a * b) % p))
        .collect()
}

fn mat_invert(mat: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<u64>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let inv_mod = |a: u64| -> u64 {
        // Fermat inverse mod prime p
        let mut e = p - 2;
        let mut base = a % p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    for col in 0..n {
        let pivot = (col..n).find(|&r| aug[r][col] != 0)?;
        aug.swap(col, pivot);
        let s = inv_mod(aug[col][col]);
        for x in aug[col].iter_mut() {
            *x = *x * s % p;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && row[col] != 0 {
                let f = row[col];
                for (x, &pcell) in row.iter_mut().zip(&pivot_row) {
                    let sub = f * pcell % p;
                    *x = (*x + p - sub) % p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Additive bijection between F_q and F_{q1}^n (q = q1^n) that commutes
/// with scalar multiplication by base-field elements.
///
/// The big field is viewed as a vector space over the embedded copy of the
/// base field with respect to the basis {1, x, ..., x^(n-1)}, where x is
/// the big field's defining generator. For a prime base field this is
/// exactly the coefficient vector.
pub struct VectorView {
    big: FieldSpec,
    base: FieldSpec,
    dim: usize,
    theta_pows: Vec<FieldElement>,
    to_coords: Vec<Vec<u64>>,
    from_coords: Vec<Vec<u64>>,
}

impl VectorView {
    pub fn new(big: &FieldSpec, base: &FieldSpec) -> Result<VectorView, FieldError> {
        let incompatible = FieldError::IncompatibleOrders {
            big: big.order(),
            base: base.order(),
        };
        if big.characteristic() != base.characteristic() || !big.degree().is_multiple_of(base.degree()) {
            return Err(incompatible);
        }
        let dim = big.degree() / base.degree();
        let p = big.characteristic();
        let m = big.degree();
        let m1 = base.degree();

        // Embed the base field: theta is the smallest root of the base
        // modulus inside the big field, found by direct scan.
        let theta = big
            .elements()
            .find(|cand| {
                // Horner evaluation of the base modulus at cand
                let mut acc = big.zero();
                for &c in base.modulus().iter().rev() {
                    acc = acc.mul(cand).unwrap();
                    let cc = big.element(c % p).unwrap();
                    acc = acc.add(&cc).unwrap();
                }
                acc.is_zero()
            })
            .ok_or(incompatible.clone())?;
        let mut theta_pows = Vec::with_capacity(m1);
        let mut acc = big.one();
        for _ in 0..m1 {
            theta_pows.push(acc.clone());
            acc = acc.mul(&theta).unwrap();
        }

        // Column (j, k): coefficients of theta^k * x^j. Stacked coordinate
        // index is j * m1 + k.
        let x = if m == 1 { big.zero() } else { big.element(p).unwrap() };
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(m);
        let mut xj = big.one();
        for _ in 0..dim {
            for tk in &theta_pows {
                cols.push(tk.mul(&xj).unwrap().coeffs().to_vec());
            }
            xj = xj.mul(&x).unwrap();
        }
        let from_coords: Vec<Vec<u64>> = (0..m)
            .map(|row| (0..m).map(|col| cols[col][row]).collect())
            .collect();
        let to_coords = mat_invert(&from_coords, p).ok_or(incompatible)?;
        Ok(VectorView {
            big: big.clone(),
            base: base.clone(),
            dim,
            theta_pows,
            to_coords,
            from_coords,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn big(&self) -> &FieldSpec {
        &self.big
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    /// Ring embedding of the base field into the big field.
    pub fn embed(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.spec() != &self.base {
            return Err(FieldError::SpecMismatch);
        }
        let mut acc = self.big.zero();
        for (c, tk) in a.coeffs().iter().zip(&self.theta_pows) {
            if *c != 0 {
                let cc = self.big.element(*c).unwrap();
                acc = acc.add(&cc.mul(tk).unwrap()).unwrap();
            }
        }
        Ok(acc)
    }

    pub fn to_vector(&self, x: &FieldElement) -> Result<VectorElement, FieldError> {
        if x.spec() != &self.big {
            return Err(FieldError::SpecMismatch);
        }
        let p = self.big.characteristic();
        let stacked = mat_vec(&self.to_coords, x.coeffs(), p);
        let m1 = self.base.degree();
        let components = stacked
            .chunks(m1)
            .map(|chunk| self.base.element_from_coeffs(chunk).unwrap())
            .collect();
        Ok(VectorElement { components })
    }

    pub fn from_vector(&self, v: &VectorElement) -> Result<FieldElement, FieldError> {
        if v.dim() != self.dim {
            return Err(FieldError::DimensionMismatch { got: v.dim(), expected: self.dim });
        }
        if v.base() != &self.base {
            return Err(FieldError::SpecMismatch);
        }
        let p = self.big.characteristic();
        let mut stacked = Vec::with_capacity(self.big.degree());
        for c in v.components() {
            stacked.extend_from_slice(c.coeffs());
        }
        let coeffs = mat_vec(&self.from_coords, &stacked, p);
        self.big.element_from_coeffs(&coeffs)
    }
}
