//! Exhaustive determination of optimal code sizes at tiny parameters by
//! depth-first extension with symmetry reduction, plus canonicalization of
//! codes under coordinate and per-coordinate symbol permutations.

use crate::code::{Code, DescendantSet, Symbol};
use crate::verify::{is_ssc_with_cap, Property, VerifyError};
use serde_json::{json, Value};
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub t: usize,
    pub n: usize,
    pub q: u32,
    pub property: Property,
    /// Largest M found; certified maximal only when `exhaustive` holds.
    pub optimum: usize,
    pub witness: Code,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

impl SearchResult {
    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t,
            "n": self.n,
            "q": self.q,
            "property": self.property.as_str(),
            "optimum": self.optimum,
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
        })
    }
}

/// All q^n words in lexicographic order (first coordinate most
/// significant).
fn all_words(n: usize, q: u32) -> Vec<Vec<Symbol>> {
    let total = (q as u64).pow(n as u32);
    (0..total)
        .map(|idx| {
            let mut w = vec![0; n];
            let mut v = idx;
            for i in (0..n).rev() {
                w[i] = (v % q as u64) as Symbol;
                v /= q as u64;
            }
            w
        })
        .collect()
}

struct Searcher {
    t: usize,
    property: Property,
    q: u32,
    words: Vec<Vec<Symbol>>,
    /// word indices allowed at depth 2 (orbit representatives)
    second_reps: Vec<usize>,
    columns: Vec<usize>,
    coalitions: Vec<(Vec<usize>, DescendantSet)>,
    desc_index: HashMap<DescendantSet, usize>,
    frame_marks: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    budget_exhausted: bool,
}

impl Searcher {
    fn word_desc(&self, cols: &[usize]) -> DescendantSet {
        let n = self.words[0].len();
        let sets: Vec<Vec<Symbol>> = (0..n)
            .map(|i| cols.iter().map(|&c| self.words[c][i]).collect())
            .collect();
        DescendantSet::from_sets(self.q, sets).expect("nonempty coalition")
    }

    fn code_from(&self, cols: &[usize]) -> Code {
        let columns: Vec<Vec<Symbol>> = cols.iter().map(|&c| self.words[c].clone()).collect();
        Code::from_columns(self.words[0].len(), self.q, &columns).expect("distinct valid words")
    }

    /// Subsets of the current columns of size <= t-1 (including empty),
    /// each extended by the new column; returns false on the first
    /// property violation. Inserted state is recorded for undo.
    fn try_push(&mut self, word_idx: usize) -> Result<bool, VerifyError> {
        let new_pos = self.columns.len();
        self.columns.push(word_idx);
        self.frame_marks.push(self.coalitions.len());
        let mut ok = true;

        let mut subsets: Vec<Vec<usize>> = vec![Vec::new()];
        crate::code::for_each_coalition(new_pos, self.t - 1, |idx| {
            subsets.push(idx.to_vec());
            true
        });
        'check: for subset in &subsets {
            let mut coalition: Vec<usize> = subset.clone();
            coalition.push(new_pos);
            let member_words: Vec<usize> = coalition.iter().map(|&p| self.columns[p]).collect();
            let desc = self.word_desc(&member_words);
            match self.property {
                Property::Sc | Property::Ssc => {
                    if self.desc_index.contains_key(&desc) {
                        ok = false;
                        break 'check;
                    }
                    self.desc_index.insert(desc.clone(), self.coalitions.len());
                    self.coalitions.push((coalition, desc));
                }
                Property::Fpc => {
                    // the new coalition must not capture an outside column
                    for (pos, &col) in self.columns.iter().enumerate() {
                        if !coalition.contains(&pos) && desc.contains_word(&self.words[col]) {
                            ok = false;
                            break 'check;
                        }
                    }
                    self.coalitions.push((coalition, desc));
                }
            }
        }
        if ok && self.property == Property::Fpc {
            // no existing coalition may capture the new word
            let mark = self.frame_marks[self.frame_marks.len() - 1];
            let new_word = &self.words[word_idx];
            for (_, desc) in &self.coalitions[..mark] {
                if desc.contains_word(new_word) {
                    ok = false;
                    break;
                }
            }
        }
        if ok && self.property == Property::Ssc {
            // strong separability needs the subset-intersection check on
            // top of plain separability
            let code = self.code_from(&self.columns);
            if !is_ssc_with_cap(&code, self.t, 62)?.verdict {
                ok = false;
            }
        }
        if !ok {
            self.pop();
            return Ok(false);
        }
        Ok(true)
    }

    fn pop(&mut self) {
        let mark = self.frame_marks.pop().expect("matched push");
        while self.coalitions.len() > mark {
            let (_, desc) = self.coalitions.pop().unwrap();
            if matches!(self.property, Property::Sc | Property::Ssc) {
                self.desc_index.remove(&desc);
            }
        }
        self.columns.pop();
    }

    fn dfs(&mut self, last: usize) -> Result<(), VerifyError> {
        if self.columns.len() > self.best.len() {
            self.best = self.columns.clone();
        }
        for idx in last + 1..self.words.len() {
            if self.columns.len() == 1 && !self.second_reps.contains(&idx) {
                continue;
            }
            if self.nodes >= self.budget {
                self.budget_exhausted = true;
                return Ok(());
            }
            self.nodes += 1;
            if self.try_push(idx)? {
                self.dfs(idx)?;
                self.pop();
                if self.budget_exhausted {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

/// Exhaustive search for the largest code with the given property.
///
/// Extension is depth-first in lexicographic word order. All three
/// properties are hereditary under codeword deletion, so a partial code
/// that fails can never extend to a passing one and the subtree is cut.
/// Symmetry is reduced by fixing the first codeword to all-zeros and the
/// second to a representative of its orbit under coordinate permutations
/// and per-coordinate symbol permutations (the words 0..01..1).
pub fn search_optimal(
    t: usize,
    n: usize,
    q: u32,
    property: Property,
    budget: u64,
) -> Result<SearchResult, VerifyError> {
    assert!(n >= 1 && q >= 2, "search needs n >= 1 and q >= 2");
    assert!(
        t >= 2 || property == Property::Fpc,
        "separability searches need t >= 2"
    );
    let words = all_words(n, q);
    // canonical second words: zeros then b >= 1 trailing ones
    let second_reps: Vec<usize> = (1..=n)
        .map(|b| {
            let mut w = vec![0; n];
            for c in w.iter_mut().skip(n - b) {
                *c = 1;
            }
            words.binary_search(&w).expect("word enumerated")
        })
        .collect();
    let mut searcher = Searcher {
        t,
        property,
        q,
        words,
        second_reps,
        columns: Vec::new(),
        coalitions: Vec::new(),
        desc_index: HashMap::new(),
        frame_marks: Vec::new(),
        best: Vec::new(),
        nodes: 1,
        budget: budget.max(1),
        budget_exhausted: false,
    };
    let pushed = searcher.try_push(0)?;
    debug_assert!(pushed, "a single codeword satisfies every property");
    searcher.dfs(0)?;
    let witness = searcher.code_from(&searcher.best);
    Ok(SearchResult {
        t,
        n,
        q,
        property,
        optimum: searcher.best.len(),
        witness,
        nodes_explored: searcher.nodes,
        exhaustive: !searcher.budget_exhausted,
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    heap_permute(&mut items, k, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Canonical representative of a code under the group of coordinate
/// permutations and per-coordinate symbol permutations: the
/// lexicographically least sorted column list over the whole orbit. Two
/// codes are equivalent exactly when their canonical forms are equal.
/// Exact orbit minimization; intended for tiny codes only.
pub fn isomorph_canonical(code: &Code) -> Code {
    let n = code.length();
    let m = code.size();
    let q = code.alphabet();
    let mut best: Option<Vec<Vec<Symbol>>> = None;
    for sigma in permutations(n) {
        // occurring symbols per (permuted) coordinate
        let mut occurring: Vec<Vec<Symbol>> = Vec::with_capacity(n);
        for &row in &sigma {
            let mut syms: Vec<Symbol> = (0..m).map(|j| code.symbol(row, j)).collect();
            syms.sort_unstable();
            syms.dedup();
            occurring.push(syms);
        }
        // all per-coordinate relabelings onto initial segments
        let relabelings: Vec<Vec<HashMap<Symbol, Symbol>>> = occurring
            .iter()
            .map(|syms| {
                permutations(syms.len())
                    .into_iter()
                    .map(|perm| {
                        syms.iter()
                            .enumerate()
                            .map(|(pos, &s)| (s, perm[pos] as Symbol))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; n];
        loop {
            let mut cols: Vec<Vec<Symbol>> = (0..m)
                .map(|j| {
                    sigma
                        .iter()
                        .enumerate()
                        .map(|(i, &row)| relabelings[i][choice[i]][&code.symbol(row, j)])
                        .collect()
                })
                .collect();
            cols.sort();
            if best.as_ref().is_none_or(|b| &cols < b) {
                best = Some(cols);
            }
            // advance the mixed-radix choice vector
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < relabelings[pos].len() {
                    break;
                }
                choice[pos] = 0;
                if pos == 0 {
                    break;
                }
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Code::from_columns(n, q, &best.expect("at least one labeling"))
        .expect("relabeling preserves validity")
}
