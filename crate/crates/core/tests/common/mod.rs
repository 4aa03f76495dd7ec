//! Shared fixtures and independent oracles for the integration suites.
//! The oracles here are deliberately written as direct transliterations of
//! the definitions (plain nested loops), independent of the library's fast
//! paths.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sepcodes::code::{Code, Symbol};
use sepcodes::field::{FieldElement, FieldSpec, VectorElement};
use std::collections::HashSet;

pub const EXAMPLE_1: &str = "3 4 2\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
pub const EXAMPLE_2: &str = "3 5 2\n0 1 0 0 1\n0 0 1 0 1\n0 0 0 1 1\n";
pub const EXAMPLE_3: &str = "3 3 2\n0 1 1\n0 1 0\n0 0 1\n";
pub const DM_EXAMPLE: &str = "3 9 3\n0 0 0 1 1 1 2 2 2\n0 1 2 1 2 0 2 0 1\n0 2 1 1 0 2 2 1 0\n";

pub fn example1() -> Code {
    Code::parse(EXAMPLE_1).unwrap()
}

pub fn example2() -> Code {
    Code::parse(EXAMPLE_2).unwrap()
}

pub fn example3() -> Code {
    Code::parse(EXAMPLE_3).unwrap()
}

pub fn dm_example() -> Code {
    Code::parse(DM_EXAMPLE).unwrap()
}

/// A random (3, M, q) code with 1 <= M <= max_m distinct codewords.
pub fn random_code(rng: &mut ChaCha8Rng, q: u32, max_m: usize) -> Code {
    let m = rng.random_range(1..=max_m);
    let mut cols: Vec<Vec<Symbol>> = Vec::new();
    let mut seen = HashSet::new();
    while cols.len() < m {
        let col: Vec<Symbol> = (0..3).map(|_| rng.random_range(0..q)).collect();
        if seen.insert(col.clone()) {
            cols.push(col);
        }
    }
    Code::from_columns(3, q, &cols).unwrap()
}

/// Every (3, M, q) code with M <= max_m, as subsets of the q^3 words.
pub fn for_each_small_code(q: u32, max_m: usize, mut f: impl FnMut(&Code)) {
    let words: Vec<Vec<Symbol>> = (0..q.pow(3))
        .map(|idx| vec![idx / (q * q), (idx / q) % q, idx % q])
        .collect();
    sepcodes::code::for_each_coalition(words.len(), max_m, |idx| {
        let cols: Vec<Vec<Symbol>> = idx.iter().map(|&i| words[i].clone()).collect();
        f(&Code::from_columns(3, q, &cols).unwrap());
        true
    });
}

/// Reference forbidden-configuration scan: plain nested loops over ordered
/// column tuples, one branch per pattern, no indexing tricks.
pub fn naive_forbidden_exists(code: &Code) -> bool {
    let m = code.size();
    let sym = |r: usize, c: usize| code.symbol(r, c);
    for (e_row, a_row, c_row) in [(1usize, 0usize, 2usize), (2, 0, 1), (0, 1, 2)] {
        for w1 in 0..m {
            for w2 in 0..m {
                if w2 == w1 || sym(a_row, w2) != sym(a_row, w1) {
                    continue;
                }
                for w3 in 0..m {
                    if w3 == w1 || w3 == w2 || sym(a_row, w3) == sym(a_row, w1) {
                        continue;
                    }
                    if sym(c_row, w3) != sym(c_row, w1) {
                        continue;
                    }
                    for w4 in 0..m {
                        if w4 == w1 || w4 == w2 || w4 == w3 {
                            continue;
                        }
                        let ok = sym(a_row, w4) == sym(a_row, w3)
                            && sym(c_row, w4) == sym(c_row, w2)
                            && sym(c_row, w2) != sym(c_row, w1)
                            && sym(e_row, w4) == sym(e_row, w1)
                            && sym(e_row, w2) != sym(e_row, w1)
                            && sym(e_row, w3) != sym(e_row, w1);
                        if ok {
                            return true;
                        }
                    }
                }
            }
        }
    }
    // nabla: u4 = (a1, b2, c3), u5 = (b1, c2, a3), u6 = (c1, a2, b3) with
    // all three symbols distinct in every coordinate
    let distinct3 = |r: usize, x: usize, y: usize, z: usize| {
        sym(r, x) != sym(r, y) && sym(r, x) != sym(r, z) && sym(r, y) != sym(r, z)
    };
    for u1 in 0..m {
        for u2 in 0..m {
            if u2 == u1 {
                continue;
            }
            for u3 in 0..m {
                if u3 == u1 || u3 == u2 {
                    continue;
                }
                if !(0..3).all(|r| distinct3(r, u1, u2, u3)) {
                    continue;
                }
                for u4 in 0..m {
                    if sym(0, u4) != sym(0, u1)
                        || sym(1, u4) != sym(1, u2)
                        || sym(2, u4) != sym(2, u3)
                    {
                        continue;
                    }
                    for u5 in 0..m {
                        if sym(0, u5) != sym(0, u2)
                            || sym(1, u5) != sym(1, u3)
                            || sym(2, u5) != sym(2, u1)
                        {
                            continue;
                        }
                        for u6 in 0..m {
                            if sym(0, u6) == sym(0, u3)
                                && sym(1, u6) == sym(1, u1)
                                && sym(2, u6) == sym(2, u2)
                            {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// Reference admissibility: direct enumeration of all triangle triples and
/// all 6-tuples of the coupled system with its distinctness patterns.
/// Intended for |S| of at most 8.
pub fn naive_admissible(subset: &[FieldElement], alpha: &FieldElement) -> bool {
    let spec = alpha.spec().clone();
    let one = spec.one();
    let am1 = alpha.sub(&one).unwrap();
    let add = |a: &FieldElement, b: &FieldElement| a.add(b).unwrap();
    let mul = |a: &FieldElement, b: &FieldElement| a.mul(b).unwrap();
    // triangles
    for x in subset {
        for y in subset {
            for w in subset {
                if x == y || x == w || y == w {
                    continue;
                }
                let eq1 = add(x, &mul(&am1, w)) == mul(alpha, y);
                let eq2 = add(y, &mul(&am1, w)) == mul(alpha, x);
                let eq3 = add(x, &mul(&am1, y)) == mul(alpha, w);
                if eq1 || eq2 || eq3 {
                    return false;
                }
            }
        }
    }
    // coupled system under the allowed patterns
    let a_am1 = mul(alpha, &am1);
    let char_poly = add(&mul(alpha, alpha).sub(alpha).unwrap(), &one);
    let count_distinct = |vals: [&FieldElement; 3]| {
        let mut set = HashSet::new();
        for v in vals {
            set.insert(v.encode());
        }
        set.len()
    };
    for x in subset {
        for y in subset {
            for z in subset {
                for u in subset {
                    for v in subset {
                        for w in subset {
                            let left = count_distinct([x, y, z]);
                            let right = count_distinct([u, v, w]);
                            let mut all = HashSet::new();
                            for e in [x, y, z, u, v, w] {
                                all.insert(e.encode());
                            }
                            let pattern_ok = all.len() == 6
                                || (left == 3 && right == 1)
                                || (left == 1 && right == 3);
                            if !pattern_ok {
                                continue;
                            }
                            let e1 = add(&mul(alpha, x), &mul(&a_am1, z))
                                == add(&mul(&am1, y), &mul(&char_poly, u));
                            let e2 = add(&mul(alpha, w), &mul(&a_am1, u))
                                == add(&mul(&am1, v), &mul(&char_poly, z));
                            if e1 && e2 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Unpruned maximum-cap search: plain extension DFS over all points, no
/// symmetry normalization, no branch-and-bound.
pub fn brute_force_max_cap(base: &FieldSpec, dim: usize) -> usize {
    let q = base.order();
    let total = q.pow(dim as u32);
    let points: Vec<VectorElement> = (0..total)
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
        .collect();
    fn extend(points: &[VectorElement], cap: &mut Vec<VectorElement>, start: usize, best: &mut usize) {
        *best = (*best).max(cap.len());
        for i in start..points.len() {
            let mut ok = true;
            'pairs: for a in 0..cap.len() {
                for b in a + 1..cap.len() {
                    if sepcodes::construct::collinear(&cap[a], &cap[b], &points[i]).unwrap() {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                cap.push(points[i].clone());
                extend(points, cap, i + 1, best);
                cap.pop();
            }
        }
    }
    let mut best = 0;
    extend(&points, &mut Vec::new(), 0, &mut best);
    best
}

/// Largest property-satisfying code size found by enumerating every
/// subset of the q^n words, with no symmetry reduction at all.
pub fn brute_force_optimum(n: usize, q: u32, check: impl Fn(&Code) -> bool) -> usize {
    let total = (q as u64).pow(n as u32) as usize;
    let words: Vec<Vec<Symbol>> = (0..total)
        .map(|idx| {
            let mut w = vec![0; n];
            let mut v = idx;
            for i in (0..n).rev() {
                w[i] = (v % q as usize) as Symbol;
                v /= q as usize;
            }
            w
        })
        .collect();
    let mut best = 0;
    sepcodes::code::for_each_coalition(total, total, |idx| {
        if idx.len() > best {
            let cols: Vec<Vec<Symbol>> = idx.iter().map(|&i| words[i].clone()).collect();
            let code = Code::from_columns(n, q, &cols).unwrap();
            if check(&code) {
                best = idx.len();
            }
        }
        true
    });
    best
}

/// Integer square root by bisection, independent of the library's
/// Newton-style helper.
pub fn isqrt_bisect(n: u128) -> u128 {
    let (mut lo, mut hi) = (0u128, 1u128 << 64);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if mid.checked_mul(mid).map(|s| s <= n).unwrap_or(false) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}
