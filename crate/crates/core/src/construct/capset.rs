//! Cap sets: subsets of F_q^n with no three collinear points, with a
//! greedy maximal builder and an exact maximum search by backtracking.

use super::ConstructError;
use crate::field::{FieldSpec, VectorElement};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Three distinct points of the same space are collinear when the two
/// difference vectors are linearly dependent over the base field.
pub fn collinear(
    x: &VectorElement,
    y: &VectorElement,
    z: &VectorElement,
) -> Result<bool, ConstructError> {
    if x == y || x == z || y == z {
        return Err(ConstructError::DegeneratePoints);
    }
    let u = y.sub(x)?;
    let v = z.sub(x)?;
    let pivot = u
        .components()
        .iter()
        .position(|c| !c.is_zero())
        .expect("distinct points have a nonzero difference");
    let lambda = v.components()[pivot].div(&u.components()[pivot])?;
    Ok(u.scale(&lambda)? == v)
}

/// A set of points in F_q^n with no three collinear. Points are kept in
/// canonical (encoding) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapSet {
    base: FieldSpec,
    dim: usize,
    points: Vec<VectorElement>,
}

/// Canonical position of a point in the enumeration of F_q^n
/// (component 0 least significant).
fn point_rank(p: &VectorElement) -> u64 {
    let q = p.base().order();
    p.components().iter().rev().fold(0u64, |acc, c| acc * q + c.encode())
}

impl CapSet {
    pub fn new(
        base: &FieldSpec,
        dim: usize,
        mut points: Vec<VectorElement>,
    ) -> Result<CapSet, ConstructError> {
        if dim == 0 {
            return Err(ConstructError::BadDimensions);
        }
        for p in &points {
            if p.dim() != dim || p.base() != base {
                return Err(ConstructError::CapMismatch { expected: base.order(), dim });
            }
        }
        points.sort_by_key(point_rank);
        let cap = CapSet { base: base.clone(), dim, points };
        cap.validate()?;
        Ok(cap)
    }

    /// Checks distinctness and the no-three-collinear invariant.
    pub fn validate(&self) -> Result<(), ConstructError> {
        let mut seen = HashSet::new();
        for p in &self.points {
            if !seen.insert(point_rank(p)) {
                return Err(ConstructError::DegeneratePoints);
            }
        }
        let k = self.points.len();
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    if collinear(&self.points[i], &self.points[j], &self.points[l])? {
                        return Err(ConstructError::CollinearTriple(
                            self.points[i].encodings(),
                            self.points[j].encodings(),
                            self.points[l].encodings(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[VectorElement] {
        &self.points
    }

    /// Cap file format: "q n k" then k lines of n integers.
    pub fn parse(text: &str) -> Result<CapSet, ConstructError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| ConstructError::MalformedCapFile("missing header".into()))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| ConstructError::MalformedCapFile(header.into()))?;
        let [q, dim, k] = nums[..] else {
            return Err(ConstructError::MalformedCapFile(header.into()));
        };
        let base = FieldSpec::of_order(q).map_err(|_| ConstructError::NotPrimePower(q))?;
        let mut points = Vec::with_capacity(k as usize);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| ConstructError::MalformedCapFile("missing point line".into()))?;
            let coords: Vec<u64> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| ConstructError::MalformedCapFile(line.into()))?;
            if coords.len() != dim as usize {
                return Err(ConstructError::MalformedCapFile(line.into()));
            }
            let comps = coords
                .iter()
                .map(|&c| base.element(c))
                .collect::<Result<Vec<_>, _>>()?;
            points.push(VectorElement::new(comps));
        }
        CapSet::new(&base, dim as usize, points)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {} {}\n", self.base.order(), self.dim, self.points.len());
        for p in &self.points {
            let coords: Vec<String> = p.encodings().iter().map(u64::to_string).collect();
            out.push_str(&coords.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Point orderings for the greedy scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointOrder {
    /// Canonical enumeration of F_q^n.
    Canonical,
    /// The parabola {(i, i^2)} first, then the rest canonically (dim 2).
    Parabola,
    /// Canonical enumeration shuffled by a seeded generator.
    Seeded(u64),
}

fn all_points(base: &FieldSpec, dim: usize) -> Vec<VectorElement> {
    let q = base.order();
    let total = q.pow(dim as u32);
    (0..total)
        .map(|mut idx| {
            let comps = (0..dim)
                .map(|_| {
                    let c = base.element(idx % q).unwrap();
                    idx /= q;
                    c
                })
                .collect();
            VectorElement::new(comps)
        })
        .collect()
}

fn ordered_points(
    base: &FieldSpec,
    dim: usize,
    order: &PointOrder,
) -> Result<Vec<VectorElement>, ConstructError> {
    let mut points = all_points(base, dim);
    match order {
        PointOrder::Canonical => {}
        PointOrder::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            points.shuffle(&mut rng);
        }
        PointOrder::Parabola => {
            if dim != 2 {
                return Err(ConstructError::BadDimensions);
            }
            let mut head = Vec::new();
            for i in base.elements() {
                let sq = i.mul(&i).unwrap();
                head.push(VectorElement::new(vec![i, sq]));
            }
            let on_parabola: HashSet<u64> = head.iter().map(point_rank).collect();
            points.retain(|p| !on_parabola.contains(&point_rank(p)));
            head.extend(points);
            points = head;
        }
    }
    Ok(points)
}

fn extends_cap(cap: &[VectorElement], candidate: &VectorElement) -> bool {
    for i in 0..cap.len() {
        if &cap[i] == candidate {
            return false;
        }
        for j in i + 1..cap.len() {
            if collinear(&cap[i], &cap[j], candidate).unwrap() {
                return false;
            }
        }
    }
    true
}

/// Scans points in the given order, keeping each point that creates no
/// collinear triple. The result is maximal under inclusion.
pub fn capset_greedy(
    base: &FieldSpec,
    dim: usize,
    order: &PointOrder,
) -> Result<CapSet, ConstructError> {
    if dim == 0 {
        return Err(ConstructError::BadDimensions);
    }
    let mut cap: Vec<VectorElement> = Vec::new();
    for p in ordered_points(base, dim, order)? {
        if extends_cap(&cap, &p) {
            cap.push(p);
        }
    }
    CapSet::new(base, dim, cap)
}

/// Result of the exact search; `exhaustive` is false when the node budget
/// ran out, in which case `cap` is the best cap found so far.
#[derive(Debug)]
pub struct ExactCapSearch {
    pub cap: CapSet,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

/// Maximum cap by depth-first search. Every cap of size >= 2 is affinely
/// equivalent to one containing the origin and the first unit vector
/// (translate one point to zero, then map a second point to e1), so the
/// search roots there and extends with larger points only.
pub fn capset_exact(
    base: &FieldSpec,
    dim: usize,
    budget: u64,
) -> Result<ExactCapSearch, ConstructError> {
    if dim == 0 {
        return Err(ConstructError::BadDimensions);
    }
    let points = all_points(base, dim);
    let zero = points[0].clone();
    let e1 = points[1].clone();
    let candidates: Vec<VectorElement> = points.into_iter().skip(2).collect();

    struct Dfs<'a> {
        candidates: &'a [VectorElement],
        best: Vec<VectorElement>,
        stack: Vec<VectorElement>,
        nodes: u64,
        budget: u64,
        exhausted_budget: bool,
    }

    impl Dfs<'_> {
        fn run(&mut self, start: usize) {
            if self.stack.len() > self.best.len() {
                self.best = self.stack.clone();
            }
            for i in start..self.candidates.len() {
                if self.stack.len() + (self.candidates.len() - i) <= self.best.len() {
                    return; // cannot beat the best from here
                }
                if self.nodes >= self.budget {
                    self.exhausted_budget = true;
                    return;
                }
                if extends_cap(&self.stack, &self.candidates[i]) {
                    self.nodes += 1;
                    self.stack.push(self.candidates[i].clone());
                    self.run(i + 1);
                    self.stack.pop();
                    if self.exhausted_budget {
                        return;
                    }
                }
            }
        }
    }

    let mut dfs = Dfs {
        candidates: &candidates,
        best: Vec::new(),
        stack: vec![zero, e1],
        nodes: 0,
        budget,
        exhausted_budget: false,
    };
    dfs.run(0);
    Ok(ExactCapSearch {
        cap: CapSet::new(base, dim, dfs.best)?,
        nodes_explored: dfs.nodes,
        exhaustive: !dfs.exhausted_budget,
    })
}
