//! The (n, M, q) code data structure: codewords are columns of an n x M
//! matrix over {0, ..., q-1}. Coordinate projections, descendant sets,
//! A-set families and the text file format live here.

use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

pub type Symbol = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("malformed header: expected \"n M q\", got {0:?}")]
    MalformedHeader(String),
    #[error("line {line}: expected {expected} symbols, found {found}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("expected {expected} coordinate rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("symbol {symbol} out of range for alphabet size {q}")]
    SymbolOutOfRange { symbol: u64, q: u32 },
    #[error("duplicate codeword at columns {first} and {second} (1-based)")]
    DuplicateCodeword { first: usize, second: usize },
    #[error("code must have at least one coordinate and one codeword")]
    Empty,
    #[error("coalition may not be empty")]
    EmptyCoalition,
    #[error("column index {index} out of range for {m} codewords")]
    ColumnOutOfRange { index: usize, m: usize },
    #[error("coordinate index {index} out of range for length {n}")]
    CoordinateOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: code has (n, q) = ({n}, {q}), value has ({other_n}, {other_q})")]
    DimensionMismatch { n: usize, q: u32, other_n: usize, other_q: u32 },
    #[error("codewords have different lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("value set for coordinate {coord} is empty")]
    EmptyValueSet { coord: usize },
}

/// An (n, M, q) code. Immutable after construction; symbols are stored
/// row-major (rows = coordinates) to match the file format.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    m: usize,
    q: u32,
    data: Vec<Symbol>,
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({}, {}, {})", self.n, self.m, self.q)
    }
}

impl Code {
    /// Builds a code from codeword columns, validating symbol range and
    /// pairwise distinctness.
    pub fn from_columns(n: usize, q: u32, columns: &[Vec<Symbol>]) -> Result<Code, CodeError> {
        if n == 0 || columns.is_empty() {
            return Err(CodeError::Empty);
        }
        let m = columns.len();
        let mut data = vec![0; n * m];
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(CodeError::LengthMismatch(n, col.len()));
            }
            for (i, &s) in col.iter().enumerate() {
                if s >= q {
                    return Err(CodeError::SymbolOutOfRange { symbol: s as u64, q });
                }
                data[i * m + j] = s;
            }
        }
        let code = Code { n, m, q, data };
        code.check_distinct()?;
        Ok(code)
    }

    fn check_distinct(&self) -> Result<(), CodeError> {
        let mut seen: HashMap<Vec<Symbol>, usize> = HashMap::with_capacity(self.m);
        for j in 0..self.m {
            if let Some(&first) = seen.get(&self.column(j)) {
                return Err(CodeError::DuplicateCodeword { first: first + 1, second: j + 1 });
            }
            seen.insert(self.column(j), j);
        }
        Ok(())
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// Number of codewords M.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn alphabet(&self) -> u32 {
        self.q
    }

    pub fn symbol(&self, coord: usize, col: usize) -> Symbol {
        self.data[coord * self.m + col]
    }

    /// The codeword at column `col` as a coordinate vector.
    pub fn column(&self, col: usize) -> Vec<Symbol> {
        (0..self.n).map(|i| self.symbol(i, col)).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<Symbol>> + '_ {
        (0..self.m).map(|j| self.column(j))
    }

    /// Parses the text format: line 1 is "n M q", then n rows of M symbols.
    /// Lines starting with '#' are comments.
    pub fn parse(text: &str) -> Result<Code, CodeError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| CodeError::MalformedHeader(String::new()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let bad_header = || CodeError::MalformedHeader(header.to_string());
        if parts.len() != 3 {
            return Err(bad_header());
        }
        let n: usize = parts[0].parse().map_err(|_| bad_header())?;
        let m: usize = parts[1].parse().map_err(|_| bad_header())?;
        let q: u32 = parts[2].parse().map_err(|_| bad_header())?;
        if n == 0 || m == 0 || q == 0 {
            return Err(bad_header());
        }
        let mut data = Vec::with_capacity(n * m);
        let mut rows = 0;
        for (lineno, line) in lines.enumerate() {
            if rows == n {
                return Err(CodeError::RowCount { expected: n, found: rows + 1 });
            }
            let mut count = 0;
            for tok in line.split_whitespace() {
                let v: u64 = tok
                    .parse()
                    .map_err(|_| CodeError::MalformedHeader(tok.to_string()))?;
                if v >= q as u64 {
                    return Err(CodeError::SymbolOutOfRange { symbol: v, q });
                }
                data.push(v as Symbol);
                count += 1;
            }
            if count != m {
                return Err(CodeError::RowLength { line: lineno + 2, expected: m, found: count });
            }
            rows += 1;
        }
        if rows != n {
            return Err(CodeError::RowCount { expected: n, found: rows });
        }
        let code = Code { n, m, q, data };
        code.check_distinct()?;
        Ok(code)
    }

    /// Serializes to the exact parse format (bit-exact round trip).
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.m, self.q);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.m).map(|j| self.symbol(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A sorted set of column indices into a code (0-based internally;
/// reports use the 1-based numbering).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition {
    indices: Vec<usize>,
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coalition{:?}", self.indices)
    }
}

impl Coalition {
    pub fn new(mut indices: Vec<usize>) -> Coalition {
        indices.sort_unstable();
        indices.dedup();
        Coalition { indices }
    }

    pub fn validate(&self, code: &Code) -> Result<(), CodeError> {
        if self.indices.is_empty() {
            return Err(CodeError::EmptyCoalition);
        }
        for &i in &self.indices {
            if i >= code.size() {
                return Err(CodeError::ColumnOutOfRange { index: i, m: code.size() });
            }
        }
        Ok(())
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, col: usize) -> bool {
        self.indices.binary_search(&col).is_ok()
    }

    pub fn is_subset_of(&self, other: &Coalition) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    /// 1-based indices, matching the c_i numbering used in reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|&i| i + 1).collect()
    }

    pub fn intersect(&self, other: &Coalition) -> Coalition {
        Coalition {
            indices: self
                .indices
                .iter()
                .copied()
                .filter(|&i| other.contains(i))
                .collect(),
        }
    }
}

/// A set of symbols from a q-ary alphabet. Bitmask-backed for q <= 64,
/// sorted list otherwise; the inner verification loops are set-membership
/// bound so the mask form matters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ValueSet {
    Mask(u64),
    Sorted(Vec<Symbol>),
}

impl ValueSet {
    pub fn empty(q: u32) -> ValueSet {
        if q <= 64 {
            ValueSet::Mask(0)
        } else {
            ValueSet::Sorted(Vec::new())
        }
    }

    pub fn insert(&mut self, s: Symbol) {
        match self {
            ValueSet::Mask(bits) => *bits |= 1u64 << s,
            ValueSet::Sorted(v) => {
                if let Err(pos) = v.binary_search(&s) {
                    v.insert(pos, s);
                }
            }
        }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        match self {
            ValueSet::Mask(bits) => s < 64 && bits & (1u64 << s) != 0,
            ValueSet::Sorted(v) => v.binary_search(&s).is_ok(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ValueSet::Mask(bits) => bits.count_ones() as usize,
            ValueSet::Sorted(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset_of(&self, other: &ValueSet) -> bool {
        match (self, other) {
            (ValueSet::Mask(a), ValueSet::Mask(b)) => a & !b == 0,
            _ => self.iter().all(|s| other.contains(s)),
        }
    }

    /// Symbols in ascending order.
    pub fn iter(&self) -> Box<dyn Iterator<Item = Symbol> + '_> {
        match self {
            ValueSet::Mask(bits) => {
                let bits = *bits;
                Box::new((0..64).filter(move |s| bits & (1u64 << s) != 0))
            }
            ValueSet::Sorted(v) => Box::new(v.iter().copied()),
        }
    }

    pub fn to_vec(&self) -> Vec<Symbol> {
        self.iter().collect()
    }
}

/// The descendant code of a coalition in compact form: one value set per
/// coordinate. The expanded product is never materialized.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DescendantSet {
    q: u32,
    sets: Vec<ValueSet>,
}

impl DescendantSet {
    /// Builds from explicit per-coordinate sets (e.g. an observation file).
    /// Every set must be nonempty and within the alphabet.
    pub fn from_sets(q: u32, sets: Vec<Vec<Symbol>>) -> Result<DescendantSet, CodeError> {
        let mut out = Vec::with_capacity(sets.len());
        for (coord, values) in sets.iter().enumerate() {
            if values.is_empty() {
                return Err(CodeError::EmptyValueSet { coord });
            }
            let mut vs = ValueSet::empty(q);
            for &s in values {
                if s >= q {
                    return Err(CodeError::SymbolOutOfRange { symbol: s as u64, q });
                }
                vs.insert(s);
            }
            out.push(vs);
        }
        if out.is_empty() {
            return Err(CodeError::Empty);
        }
        Ok(DescendantSet { q, sets: out })
    }

    pub fn length(&self) -> usize {
        self.sets.len()
    }

    pub fn alphabet(&self) -> u32 {
        self.q
    }

    pub fn set(&self, coord: usize) -> &ValueSet {
        &self.sets[coord]
    }

    pub fn sets(&self) -> &[ValueSet] {
        &self.sets
    }

    /// True when a word lies in the product set.
    pub fn contains_word(&self, word: &[Symbol]) -> bool {
        word.len() == self.sets.len()
            && word.iter().zip(&self.sets).all(|(&s, vs)| vs.contains(s))
    }

    /// Coordinatewise subset relation.
    pub fn is_subset_of(&self, other: &DescendantSet) -> bool {
        self.sets.len() == other.sets.len()
            && self.sets.iter().zip(&other.sets).all(|(a, b)| a.is_subset_of(b))
    }
}

/// The set of i-th coordinates of a coalition's codewords.
pub fn coordinate_set(code: &Code, coalition: &Coalition, coord: usize) -> Result<ValueSet, CodeError> {
    coalition.validate(code)?;
    if coord >= code.length() {
        return Err(CodeError::CoordinateOutOfRange { index: coord, n: code.length() });
    }
    let mut vs = ValueSet::empty(code.alphabet());
    for &col in coalition.indices() {
        vs.insert(code.symbol(coord, col));
    }
    Ok(vs)
}

/// The descendant code desc(C0) as per-coordinate value sets.
pub fn descendant(code: &Code, coalition: &Coalition) -> Result<DescendantSet, CodeError> {
    coalition.validate(code)?;
    let mut sets = Vec::with_capacity(code.length());
    for coord in 0..code.length() {
        let mut vs = ValueSet::empty(code.alphabet());
        for &col in coalition.indices() {
            vs.insert(code.symbol(coord, col));
        }
        sets.push(vs);
    }
    Ok(DescendantSet { q: code.alphabet(), sets })
}

/// All codewords lying inside the descendant set: desc intersected with the
/// code, as a coalition. Single O(Mn) scan; also reports the number of
/// codewords visited for the tracing instrumentation.
pub fn descendant_members_counted(
    code: &Code,
    desc: &DescendantSet,
) -> Result<(Coalition, usize), CodeError> {
    if desc.length() != code.length() || desc.alphabet() != code.alphabet() {
        return Err(CodeError::DimensionMismatch {
            n: code.length(),
            q: code.alphabet(),
            other_n: desc.length(),
            other_q: desc.alphabet(),
        });
    }
    let mut indices = Vec::new();
    let mut visited = 0;
    for col in 0..code.size() {
        visited += 1;
        if (0..code.length()).all(|i| desc.set(i).contains(code.symbol(i, col))) {
            indices.push(col);
        }
    }
    Ok((Coalition { indices }, visited))
}

pub fn descendant_members(code: &Code, desc: &DescendantSet) -> Result<Coalition, CodeError> {
    descendant_members_counted(code, desc).map(|(c, _)| c)
}

/// The family of column-vector sets A_i^(j): codeword projections grouped
/// by the symbol at coordinate j. Projections map back to their source
/// column (distinct codewords in the same class have distinct projections).
pub struct ASetFamily {
    coord: usize,
    classes: Vec<(Symbol, HashMap<Vec<Symbol>, usize>)>,
}

impl ASetFamily {
    pub fn coord(&self) -> usize {
        self.coord
    }

    /// Classes with at least one member, in ascending symbol order.
    pub fn classes(&self) -> &[(Symbol, HashMap<Vec<Symbol>, usize>)] {
        &self.classes
    }

    pub fn class(&self, symbol: Symbol) -> Option<&HashMap<Vec<Symbol>, usize>> {
        self.classes
            .binary_search_by_key(&symbol, |(s, _)| *s)
            .ok()
            .map(|i| &self.classes[i].1)
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(|(_, c)| c.len()).sum()
    }
}

/// Builds the A-set family for coordinate `j`.
pub fn a_sets(code: &Code, coord: usize) -> Result<ASetFamily, CodeError> {
    if coord >= code.length() {
        return Err(CodeError::CoordinateOutOfRange { index: coord, n: code.length() });
    }
    let mut map: HashMap<Symbol, HashMap<Vec<Symbol>, usize>> = HashMap::new();
    for col in 0..code.size() {
        let sym = code.symbol(coord, col);
        let proj: Vec<Symbol> = (0..code.length())
            .filter(|&i| i != coord)
            .map(|i| code.symbol(i, col))
            .collect();
        map.entry(sym).or_default().insert(proj, col);
    }
    let mut classes: Vec<_> = map.into_iter().collect();
    classes.sort_by_key(|(s, _)| *s);
    Ok(ASetFamily { coord, classes })
}

/// Number of coordinates where two equal-length words disagree.
pub fn hamming_distance(a: &[Symbol], b: &[Symbol]) -> Result<usize, CodeError> {
    if a.len() != b.len() {
        return Err(CodeError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// Calls `f` with every coalition of size 1..=t (sizes ascending,
/// lexicographic within a size) until `f` returns `false`.
pub fn for_each_coalition(m: usize, t: usize, mut f: impl FnMut(&[usize]) -> bool) {
    for k in 1..=t.min(m) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if !f(&idx) {
                return;
            }
            let mut advanced = false;
            let mut i = k;
            while i > 0 {
                i -= 1;
                if idx[i] < m - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // (3,4,2) code: first codeword all zeros, then the three unit vectors.
    pub(crate) const EXAMPLE_1: &str = "3 4 2\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
    // (3,5,2) code: the previous four plus the all-ones codeword.
    pub(crate) const EXAMPLE_2: &str = "3 5 2\n0 1 0 0 1\n0 0 1 0 1\n0 0 0 1 1\n";
    // (3,9,3) code generated by translating the full 3x3 difference matrix.
    pub(crate) const DM_EXAMPLE: &str =
        "3 9 3\n0 0 0 1 1 1 2 2 2\n0 1 2 1 2 0 2 0 1\n0 2 1 1 0 2 2 1 0\n";

    fn example1() -> Code {
        Code::parse(EXAMPLE_1).unwrap()
    }

    fn example2() -> Code {
        Code::parse(EXAMPLE_2).unwrap()
    }

    fn dm_example() -> Code {
        Code::parse(DM_EXAMPLE).unwrap()
    }

    #[test]
    fn coordinate_sets() {
        let c1 = example1();
        let vs = coordinate_set(&c1, &Coalition::new(vec![1, 2]), 0).unwrap();
        assert_eq!(vs.to_vec(), vec![0, 1]);
        let c2 = example2();
        let vs = coordinate_set(&c2, &Coalition::new(vec![1, 2, 3]), 1).unwrap();
        assert_eq!(vs.to_vec(), vec![0, 1]);
        // singleton coalition
        let vs = coordinate_set(&c1, &Coalition::new(vec![3]), 2).unwrap();
        assert_eq!(vs.to_vec(), vec![1]);
    }

    #[test]
    fn coordinate_set_rejects_bad_indices() {
        let c1 = example1();
        assert!(coordinate_set(&c1, &Coalition::new(vec![9]), 0).is_err());
        assert!(coordinate_set(&c1, &Coalition::new(vec![0]), 5).is_err());
    }

    #[test]
    fn descendants_of_example2() {
        let c2 = example2();
        let d15 = descendant(&c2, &Coalition::new(vec![0, 4])).unwrap();
        let d234 = descendant(&c2, &Coalition::new(vec![1, 2, 3])).unwrap();
        assert_eq!(d15, d234);
        for i in 0..3 {
            assert_eq!(d15.set(i).to_vec(), vec![0, 1]);
        }
        let single = descendant(&c2, &Coalition::new(vec![4])).unwrap();
        assert_eq!(single.sets().iter().map(ValueSet::to_vec).collect::<Vec<_>>(), vec![vec![1]; 3]);
    }

    #[test]
    fn descendant_rejects_empty_coalition() {
        assert!(matches!(
            descendant(&example1(), &Coalition::new(vec![])),
            Err(CodeError::EmptyCoalition)
        ));
    }

    #[test]
    fn members_of_descendants() {
        let c2 = example2();
        let all = DescendantSet::from_sets(2, vec![vec![0, 1]; 3]).unwrap();
        assert_eq!(descendant_members(&c2, &all).unwrap().indices(), &[0, 1, 2, 3, 4]);

        let c1 = example1();
        let zero = DescendantSet::from_sets(2, vec![vec![0]; 3]).unwrap();
        assert_eq!(descendant_members(&c1, &zero).unwrap().indices(), &[0]);

        let dm = dm_example();
        let d = descendant(&dm, &Coalition::new(vec![0, 3, 6])).unwrap();
        assert_eq!(descendant_members(&dm, &d).unwrap().len(), 9);
    }

    #[test]
    fn members_dimension_mismatch() {
        let c1 = example1();
        let wrong = DescendantSet::from_sets(2, vec![vec![0], vec![0]]).unwrap();
        assert!(descendant_members(&c1, &wrong).is_err());
    }

    #[test]
    fn a_set_families() {
        let c1 = example1();
        let fam = a_sets(&c1, 0).unwrap();
        let a0 = fam.class(0).unwrap();
        let a1 = fam.class(1).unwrap();
        assert_eq!(a0.len(), 3);
        assert!(a0.contains_key(&vec![0, 0][..].to_vec()));
        assert!(a0.contains_key(&vec![1, 0][..].to_vec()));
        assert!(a0.contains_key(&vec![0, 1][..].to_vec()));
        assert_eq!(a1.len(), 1);
        assert!(a1.contains_key(&vec![0, 0][..].to_vec()));

        let dm = dm_example();
        let fam = a_sets(&dm, 0).unwrap();
        assert_eq!(fam.classes().len(), 3);
        for (_, class) in fam.classes() {
            assert_eq!(class.len(), 3);
        }
        assert_eq!(fam.total(), 9);
        // the difference property makes the classes pairwise disjoint
        for (i, (_, a)) in fam.classes().iter().enumerate() {
            for (_, b) in &fam.classes()[i + 1..] {
                assert!(a.keys().all(|p| !b.contains_key(p)));
            }
        }
    }

    #[test]
    fn a_sets_singleton_classes() {
        // distinct first row: q singletons
        let code = Code::parse("1 3 3\n0 1 2\n").unwrap();
        let fam = a_sets(&code, 0).unwrap();
        assert_eq!(fam.classes().len(), 3);
        assert!(fam.classes().iter().all(|(_, c)| c.len() == 1));
    }

    #[test]
    fn hamming_distances() {
        assert_eq!(hamming_distance(&[0, 0, 0], &[0, 0, 0]).unwrap(), 0);
        assert_eq!(hamming_distance(&[0, 0, 0], &[1, 1, 1]).unwrap(), 3);
        // two codewords of the optimal (3,3,2) code
        assert_eq!(hamming_distance(&[1, 1, 0], &[1, 0, 1]).unwrap(), 2);
        assert!(hamming_distance(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn parse_and_serialize_round_trip() {
        for text in [EXAMPLE_1, EXAMPLE_2, DM_EXAMPLE] {
            let code = Code::parse(text).unwrap();
            assert_eq!(code.serialize(), text);
            assert_eq!(Code::parse(&code.serialize()).unwrap(), code);
        }
    }

    #[test]
    fn parse_skips_comments() {
        let code = Code::parse("# fixture\n3 4 2\n0 1 0 0\n# middle\n0 0 1 0\n0 0 0 1\n").unwrap();
        assert_eq!(code, example1());
    }

    #[test]
    fn parse_rejects_duplicates() {
        assert!(matches!(
            Code::parse("3 2 2\n0 0\n1 1\n0 0\n"),
            Err(CodeError::DuplicateCodeword { first: 1, second: 2 })
        ));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(matches!(
            Code::parse("1 2 2\n0 2\n"),
            Err(CodeError::SymbolOutOfRange { symbol: 2, q: 2 })
        ));
    }

    #[test]
    fn parse_rejects_malformed_header() {
        assert!(Code::parse("3 4\n").is_err());
        assert!(Code::parse("a b c\n").is_err());
        assert!(Code::parse("").is_err());
    }

    #[test]
    fn descendant_monotone_and_reflexive() {
        let dm = dm_example();
        for_each_coalition(dm.size(), 3, |idx| {
            let coal = Coalition::new(idx.to_vec());
            let d = descendant(&dm, &coal).unwrap();
            // coalition is always among the members of its own descendant
            let members = descendant_members(&dm, &d).unwrap();
            assert!(coal.is_subset_of(&members));
            // monotone under adding one more column
            for extra in 0..dm.size() {
                if coal.contains(extra) {
                    continue;
                }
                let mut bigger = idx.to_vec();
                bigger.push(extra);
                let d2 = descendant(&dm, &Coalition::new(bigger)).unwrap();
                assert!(d.is_subset_of(&d2));
            }
            true
        });
    }

    #[test]
    fn coalition_enumeration_order() {
        let mut seen = Vec::new();
        for_each_coalition(4, 2, |idx| {
            seen.push(idx.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![3],
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
            ]
        );
    }
}
