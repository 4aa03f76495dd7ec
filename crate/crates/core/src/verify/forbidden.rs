//! Forbidden-configuration detection for length-3 codes.
//!
//! The four patterns (three 4-column deltas, one 6-column nabla) are found
//! by hash joins over column pairs grouped by their coordinate-agreement
//! signature, so delta detection costs O(M^2 + collisions) and nabla
//! detection composes two delta-like half patterns sharing bindings. Each
//! pattern search returns its first match under a fixed deterministic
//! enumeration; the overall result is the match whose sorted column tuple
//! is lexicographically least.

use super::{ConfigKind, ForbiddenConfigWitness, VerifyError};
use crate::code::{Code, Symbol};
use std::collections::HashMap;

/// Row roles of a delta pattern: the (e,f,g,e) row and, of the remaining
/// two rows, the (a,a,b,b) row and the (c,d,c,d) row.
fn delta_rows(kind: ConfigKind) -> (usize, usize, usize) {
    match kind {
        ConfigKind::Delta1 => (1, 0, 2), // (e_row, a_row, c_row)
        ConfigKind::Delta2 => (2, 0, 1),
        ConfigKind::Delta3 => (0, 1, 2),
        ConfigKind::Nabla => unreachable!("nabla has no delta row roles"),
    }
}

/// Checks whether the given ordered columns realize the pattern, returning
/// the letter bindings if so. This is the letter-level definition and is
/// what makes configuration witnesses independently checkable.
pub fn config_matches(
    code: &Code,
    kind: ConfigKind,
    columns: &[usize],
) -> Option<Vec<(String, Symbol)>> {
    if code.length() != 3 || columns.len() != kind.columns() {
        return None;
    }
    if columns.iter().any(|&c| c >= code.size()) {
        return None;
    }
    let mut sorted = columns.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != columns.len() {
        return None;
    }
    let sym = |row: usize, pos: usize| code.symbol(row, columns[pos]);
    match kind {
        ConfigKind::Nabla => {
            // u4 = (a1, b2, c3), u5 = (b1, c2, a3), u6 = (c1, a2, b3)
            let mut bindings = Vec::with_capacity(9);
            for row in 0..3 {
                let (a, b, c) = (sym(row, 0), sym(row, 1), sym(row, 2));
                if a == b || a == c || b == c {
                    return None;
                }
                let expect = |pos: usize| match (pos, row) {
                    (3, 0) => a,
                    (3, 1) => b,
                    (3, 2) => c,
                    (4, 0) => b,
                    (4, 1) => c,
                    (4, 2) => a,
                    (5, 0) => c,
                    (5, 1) => a,
                    (5, 2) => b,
                    _ => unreachable!(),
                };
                for pos in 3..6 {
                    if sym(row, pos) != expect(pos) {
                        return None;
                    }
                }
                let r = row + 1;
                bindings.push((format!("a{r}"), a));
                bindings.push((format!("b{r}"), b));
                bindings.push((format!("c{r}"), c));
            }
            Some(bindings)
        }
        _ => {
            let (e_row, a_row, c_row) = delta_rows(kind);
            let a = sym(a_row, 0);
            let b = sym(a_row, 2);
            if sym(a_row, 1) != a || sym(a_row, 3) != b || a == b {
                return None;
            }
            let c = sym(c_row, 0);
            let d = sym(c_row, 1);
            if sym(c_row, 2) != c || sym(c_row, 3) != d || c == d {
                return None;
            }
            let e = sym(e_row, 0);
            let f = sym(e_row, 1);
            let g = sym(e_row, 2);
            if sym(e_row, 3) != e || f == e || g == e {
                return None;
            }
            Some(vec![
                ("a".into(), a),
                ("b".into(), b),
                ("c".into(), c),
                ("d".into(), d),
                ("e".into(), e),
                ("f".into(), f),
                ("g".into(), g),
            ])
        }
    }
}

/// Columns grouped by their symbol at `row`, symbols ascending and column
/// indices ascending within a class.
fn classes_by_row(code: &Code, row: usize) -> Vec<(Symbol, Vec<usize>)> {
    let mut map: HashMap<Symbol, Vec<usize>> = HashMap::new();
    for col in 0..code.size() {
        map.entry(code.symbol(row, col)).or_default().push(col);
    }
    let mut classes: Vec<_> = map.into_iter().collect();
    classes.sort_by_key(|(s, _)| *s);
    classes
}

fn find_delta(code: &Code, kind: ConfigKind) -> Option<ForbiddenConfigWitness> {
    let (e_row, a_row, c_row) = delta_rows(kind);
    // Ordered pairs agreeing at a_row and differing at both other rows.
    // As (w1, w2) the pair contributes key (c, d, e) = (u[cR], v[cR], u[eR]);
    // as (w3, w4) it contributes key (u[cR], v[cR], v[eR]).
    let mut head: HashMap<(Symbol, Symbol, Symbol), Vec<(usize, usize)>> = HashMap::new();
    let mut tail: HashMap<(Symbol, Symbol, Symbol), Vec<(usize, usize)>> = HashMap::new();
    let mut keys: Vec<(Symbol, Symbol, Symbol)> = Vec::new();
    for (_, cols) in classes_by_row(code, a_row) {
        for &u in &cols {
            for &v in &cols {
                if u == v
                    || code.symbol(c_row, u) == code.symbol(c_row, v)
                    || code.symbol(e_row, u) == code.symbol(e_row, v)
                {
                    continue;
                }
                let cd = (code.symbol(c_row, u), code.symbol(c_row, v));
                let k1 = (cd.0, cd.1, code.symbol(e_row, u));
                let k2 = (cd.0, cd.1, code.symbol(e_row, v));
                head.entry(k1).or_insert_with(|| {
                    keys.push(k1);
                    Vec::new()
                });
                head.get_mut(&k1).unwrap().push((u, v));
                tail.entry(k2).or_default().push((u, v));
            }
        }
    }
    keys.sort_unstable();
    keys.dedup();
    for key in keys {
        let Some(tails) = tail.get(&key) else { continue };
        for &(w1, w2) in &head[&key] {
            for &(w3, w4) in tails {
                if code.symbol(a_row, w3) == code.symbol(a_row, w1) {
                    continue; // a must differ from b
                }
                let columns = vec![w1, w2, w3, w4];
                let bindings =
                    config_matches(code, kind, &columns).expect("join constraints imply a match");
                return Some(ForbiddenConfigWitness { kind, columns, bindings });
            }
        }
    }
    None
}

fn find_nabla(code: &Code) -> Option<ForbiddenConfigWitness> {
    // Ordered pairs (p, r) with p[0] = r[0] and both other coordinates
    // differing. A nabla consists of three such pairs (p_i, r_i) with
    //   r1 = (a1, b2, c3), r2 = (b1, c2, a3), r3 = (c1, a2, b3)
    // for p1 = (a1, a2, a3), p2 = (b1, b2, b3), p3 = (c1, c2, c3).
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (_, cols) in classes_by_row(code, 0) {
        for &p in &cols {
            for &r in &cols {
                if p != r
                    && code.symbol(1, p) != code.symbol(1, r)
                    && code.symbol(2, p) != code.symbol(2, r)
                {
                    pairs.push((p, r));
                }
            }
        }
    }
    pairs.sort_unstable();
    // Join index: pair (p, r) keyed by (p[1], r[2]); pair2 must match
    // (r1[1], p1[2]).
    let mut by_head: HashMap<(Symbol, Symbol), Vec<(usize, usize)>> = HashMap::new();
    for &(p, r) in &pairs {
        by_head
            .entry((code.symbol(1, p), code.symbol(2, r)))
            .or_default()
            .push((p, r));
    }
    // Candidate third columns by (coordinate-1, coordinate-2) value.
    let mut by_mid: HashMap<(Symbol, Symbol), Vec<usize>> = HashMap::new();
    let mut by_word: HashMap<[Symbol; 3], usize> = HashMap::new();
    for col in 0..code.size() {
        by_mid
            .entry((code.symbol(1, col), code.symbol(2, col)))
            .or_default()
            .push(col);
        by_word.insert([code.symbol(0, col), code.symbol(1, col), code.symbol(2, col)], col);
    }
    for &(p1, r1) in &pairs {
        let key = (code.symbol(1, r1), code.symbol(2, p1));
        let Some(pair2s) = by_head.get(&key) else { continue };
        for &(p2, r2) in pair2s {
            if code.symbol(0, p2) == code.symbol(0, p1) {
                continue; // b1 must differ from a1
            }
            let mid = (code.symbol(1, r2), code.symbol(2, r1));
            let Some(p3s) = by_mid.get(&mid) else { continue };
            for &p3 in p3s {
                let c1 = code.symbol(0, p3);
                if c1 == code.symbol(0, p1) || c1 == code.symbol(0, p2) {
                    continue;
                }
                if code.symbol(1, p3) == code.symbol(1, p1)
                    || code.symbol(1, p3) == code.symbol(1, p2)
                    || code.symbol(2, p3) == code.symbol(2, p1)
                    || code.symbol(2, p3) == code.symbol(2, p2)
                {
                    continue;
                }
                let r3_word = [c1, code.symbol(1, p1), code.symbol(2, p2)];
                let Some(&r3) = by_word.get(&r3_word) else { continue };
                let columns = vec![p1, p2, p3, r1, r2, r3];
                let bindings = config_matches(code, ConfigKind::Nabla, &columns)
                    .expect("join constraints imply a match");
                return Some(ForbiddenConfigWitness { kind: ConfigKind::Nabla, columns, bindings });
            }
        }
    }
    None
}

/// Searches for any forbidden configuration in a length-3 code. Among the
/// four patterns' first matches, the one whose sorted column set is
/// lexicographically least is returned, which makes the result independent
/// of the per-pattern search internals.
pub fn find_forbidden_config(code: &Code) -> Result<Option<ForbiddenConfigWitness>, VerifyError> {
    if code.length() != 3 {
        return Err(VerifyError::RequiresLength3(code.length()));
    }
    let mut found: Vec<ForbiddenConfigWitness> = Vec::new();
    for kind in [ConfigKind::Delta1, ConfigKind::Delta2, ConfigKind::Delta3] {
        if let Some(w) = find_delta(code, kind) {
            found.push(w);
        }
    }
    if let Some(w) = find_nabla(code) {
        found.push(w);
    }
    Ok(found.into_iter().min_by_key(|w| {
        let mut cols = w.columns.clone();
        cols.sort_unstable();
        cols
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE_3: &str = "3 3 2\n0 1 1\n0 1 0\n0 0 1\n";
    const DM_EXAMPLE: &str = "3 9 3\n0 0 0 1 1 1 2 2 2\n0 1 2 1 2 0 2 0 1\n0 2 1 1 0 2 2 1 0\n";

    #[test]
    fn dm_example_yields_the_nabla() {
        let code = Code::parse(DM_EXAMPLE).unwrap();
        let w = find_forbidden_config(&code).unwrap().unwrap();
        assert_eq!(w.kind, ConfigKind::Nabla);
        // pattern order c1, c4, c7, c2, c5, c8 (1-based)
        assert_eq!(w.columns, vec![0, 3, 6, 1, 4, 7]);
        assert!(config_matches(&code, w.kind, &w.columns).is_some());
    }

    #[test]
    fn separable_code_has_no_config() {
        let code = Code::parse(EXAMPLE_3).unwrap();
        assert!(find_forbidden_config(&code).unwrap().is_none());
    }

    #[test]
    fn tiny_codes_cannot_contain_nabla() {
        let code = Code::parse("3 3 3\n0 1 2\n0 1 2\n0 1 2\n").unwrap();
        assert!(find_nabla(&code).is_none());
    }

    #[test]
    fn rejects_wrong_length() {
        let code = Code::parse("2 2 2\n0 1\n0 1\n").unwrap();
        assert!(matches!(
            find_forbidden_config(&code),
            Err(VerifyError::RequiresLength3(2))
        ));
    }

    #[test]
    fn config_matches_validates_letters() {
        let code = Code::parse(DM_EXAMPLE).unwrap();
        let cols = vec![0, 3, 6, 1, 4, 7];
        let bindings = config_matches(&code, ConfigKind::Nabla, &cols).unwrap();
        let lookup: std::collections::HashMap<_, _> = bindings.into_iter().collect();
        assert_eq!(lookup["a1"], 0);
        assert_eq!(lookup["b1"], 1);
        assert_eq!(lookup["c1"], 2);
        // permuting two pattern positions breaks the match
        assert!(config_matches(&code, ConfigKind::Nabla, &[3, 0, 6, 1, 4, 7]).is_none());
    }

    #[test]
    fn delta_found_in_dm_example() {
        // {c1, c2, c5, c6} realizes a delta1: rows (0,0,1,1),(0,1,2,0),(0,2,0,2)
        let code = Code::parse(DM_EXAMPLE).unwrap();
        assert!(config_matches(&code, ConfigKind::Delta1, &[0, 1, 4, 5]).is_some());
        assert!(find_delta(&code, ConfigKind::Delta1).is_some());
    }
}
