//! Semistandard tableaux and skew tableaux, row words, signs and the
//! Yamanouchi condition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::{BoxCountSpec, Cell, Direction, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::sign::Sign;

/// A finite word over the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter is a single digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |x: &str| Error::Parse(format!("bad letter {x:?} in word {s:?}"));
        let letters = if s.contains(',') {
            s.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad(x))).collect::<Result<Vec<_>>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string()))).collect::<Result<Vec<_>>>()?
        };
        if letters.contains(&0) {
            return Err(bad("0"));
        }
        Ok(Word(letters))
    }
}

/// A semistandard Young tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau from its rows (top row first), checking semistandardness.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if row.contains(&0) {
                return bad("entries must be positive".into());
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} decreases", r + 1));
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.len() > above.len() {
                    return bad("row lengths must weakly decrease".into());
                }
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return bad(format!("column strictness fails in row {}", r + 1));
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// `T_λ`: row `i` filled with `i`.
    pub fn superstandard(lambda: &Partition) -> Self {
        let rows = lambda.parts().iter().enumerate().map(|(i, &len)| vec![i as u32 + 1; len as usize]).collect();
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("tableau rows weakly decrease")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `ct(T)`, trailing zeros dropped.
    pub fn content(&self) -> Vec<u32> {
        let mut ct = vec![0u32; self.max_entry() as usize];
        for &e in self.rows.iter().flatten() {
            ct[e as usize - 1] += 1;
        }
        ct
    }

    /// `w_r(T)`: rows read left to right, bottom row first.
    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn entries(&self) -> Vec<(Cell, u32)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &e)| ((r + 1, c + 1), e)))
            .collect()
    }

    pub fn decorated_count(&self, spec: &BoxCountSpec) -> u64 {
        count_entries(&self.entries(), spec)
    }

    /// `(-1)^{N^<(T)}`.
    pub fn sign(&self) -> Sign {
        tableau_sign(self)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let skew: SkewTableau = s.parse()?;
        if !skew.shape().inner().is_empty() {
            return Err(Error::Parse(format!("{s:?} has inner boxes; expected a straight tableau")));
        }
        Ok(Tableau { rows: skew.rows })
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A semistandard skew tableau. The inner shape is part of its identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    /// Filled entries of each outer row, left to right.
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer_len = shape.outer().len();
        if rows.len() != outer_len {
            return Err(Error::InvalidTableau(format!("expected {outer_len} rows, got {}", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() as u32 != shape.row_len(r + 1) {
                return Err(Error::InvalidTableau(format!("row {} has the wrong length", r + 1)));
            }
        }
        let t = SkewTableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau(format!("{t} is not semistandard")));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at a filled cell.
    pub fn get(&self, (r, c): Cell) -> Option<u32> {
        let offset = self.shape.inner().part(r) as usize;
        if c <= offset {
            return None;
        }
        self.rows.get(r - 1)?.get(c - offset - 1).copied()
    }

    fn is_semistandard(&self) -> bool {
        self.entries().iter().all(|&((r, c), e)| {
            e >= 1
                && (c == 1 || self.get((r, c - 1)).is_none_or(|left| left <= e))
                && (r == 1 || self.get((r - 1, c)).is_none_or(|up| up < e))
        })
    }

    pub fn entries(&self) -> Vec<(Cell, u32)> {
        let inner = self.shape.inner();
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                let off = inner.part(r + 1) as usize;
                row.iter().enumerate().map(move |(c, &e)| ((r + 1, off + c + 1), e))
            })
            .collect()
    }

    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut ct = vec![0u32; max as usize];
        for &e in self.rows.iter().flatten() {
            ct[e as usize - 1] += 1;
        }
        ct
    }

    /// Row word of the filled boxes only.
    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// `Ŝ`: the inner shape filled with the letter 0, which sits below every entry.
    pub fn completion_entries(&self) -> Vec<(Cell, u32)> {
        let mut all: Vec<(Cell, u32)> = self.shape.inner().cells().into_iter().map(|c| (c, 0)).collect();
        all.extend(self.entries());
        all
    }

    /// Counts are evaluated on the completion `Ŝ`.
    pub fn decorated_count(&self, spec: &BoxCountSpec) -> u64 {
        count_entries(&self.completion_entries(), spec)
    }

    pub fn sign(&self) -> Sign {
        skew_sign(self)
    }

    /// Number of entries equal to `i` in row `j` (both 1-based).
    pub fn count_in_row(&self, i: u32, j: usize) -> u32 {
        self.rows.get(j - 1).map_or(0, |row| row.iter().filter(|&&e| e == i).count() as u32)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self.shape.inner();
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let dots = std::iter::repeat_n(".".to_string(), inner.part(r + 1) as usize);
                dots.chain(row.iter().map(u32::to_string)).collect::<Vec<_>>().join(",")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for SkewTableau {
    type Err = Error;

    /// Parses `".,.,1/.,2/1"`; `.` marks an inner-shape box.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return SkewTableau::new(SkewShape::straight(Partition::empty()), Vec::new());
        }
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row_text in s.split('/') {
            let mut dots = 0u32;
            let mut row = Vec::new();
            for tok in row_text.split(',') {
                let tok = tok.trim();
                if tok == "." {
                    if !row.is_empty() {
                        return Err(Error::Parse(format!("inner box after an entry in {row_text:?}")));
                    }
                    dots += 1;
                } else {
                    let e = tok.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {tok:?} in {s:?}")))?;
                    row.push(e);
                }
            }
            outer.push(dots + row.len() as u32);
            inner.push(dots);
            rows.push(row);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        SkewTableau::new(shape, rows)
    }
}

impl Serialize for SkewTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

fn count_entries(entries: &[(Cell, u32)], spec: &BoxCountSpec) -> u64 {
    entries
        .iter()
        .map(|&(b, eb)| {
            entries
                .iter()
                .filter(|&&(o, eo)| spec.direction.relates(b, o) && spec.comparator.is_none_or(|c| c.holds(eo, eb)))
                .count() as u64
        })
        .sum()
}

const N_LT: BoxCountSpec = BoxCountSpec::decorated(Direction::N, crate::diagrams::Comparator::Lt);

/// `sign(T) = (-1)^{N^<(T)}`.
pub fn tableau_sign(t: &Tableau) -> Sign {
    Sign::from_parity(t.decorated_count(&N_LT))
}

/// `sign(S) = (-1)^{N^<(Ŝ)}`.
pub fn skew_sign(s: &SkewTableau) -> Sign {
    Sign::from_parity(s.decorated_count(&N_LT))
}

/// `N^<(Ŝ)` for a skew tableau.
pub fn skew_n_lt(s: &SkewTableau) -> u64 {
    s.decorated_count(&N_LT)
}

pub fn n_lt(t: &Tableau) -> u64 {
    t.decorated_count(&N_LT)
}

pub fn row_word(t: &Tableau) -> Word {
    t.row_word()
}

/// Reconstructs the tableau whose row word is `w`: maximal weakly increasing
/// runs are the rows, bottom row first.
pub fn word_to_tableau_reading(w: &Word) -> Result<Tableau> {
    let mut runs: Vec<Vec<u32>> = Vec::new();
    for &l in w.letters() {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() <= l => run.push(l),
            _ => runs.push(vec![l]),
        }
    }
    runs.reverse();
    Tableau::new(runs).map_err(|_| Error::NotATableauWord(w.to_string()))
}

/// The Yamanouchi (reverse lattice) condition: reading `w` backwards, every
/// prefix has at least as many `a`s as `b`s whenever `a < b`.
pub fn is_yamanouchi(w: &Word) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &l in w.letters().iter().rev() {
        let i = l as usize;
        if counts.len() < i {
            counts.resize(i, 0);
        }
        counts[i - 1] += 1;
        if i >= 2 && counts[i - 1] > counts[i - 2] {
            return false;
        }
    }
    true
}

fn normalized_content(content: &[u32]) -> Vec<u32> {
    let mut c = content.to_vec();
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Backtracking filler over the cells of a skew shape, in reading order,
/// trying values in increasing order.
struct Filler<'a> {
    shape: &'a SkewShape,
    cells: Vec<Cell>,
    alphabet_max: u32,
    remaining: Option<Vec<u32>>,
    grid: Vec<Vec<u32>>, // 0 = inner or not yet filled
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, alphabet_max: u32, content: Option<&[u32]>) -> Self {
        let outer = shape.outer();
        Filler {
            shape,
            cells: shape.cells(),
            alphabet_max,
            remaining: content.map(|c| c.to_vec()),
            grid: outer.parts().iter().map(|&p| vec![0; p as usize]).collect(),
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<u32>])) {
        self.fill(0, visit);
    }

    fn fill(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if k == self.cells.len() {
            visit(&self.grid);
            return;
        }
        let (r, c) = self.cells[k];
        let inner = self.shape.inner();
        let mut lo = 1;
        if c > inner.part(r) as usize + 1 {
            lo = lo.max(self.grid[r - 1][c - 2]);
        }
        if r > 1 && c > inner.part(r - 1) as usize {
            lo = lo.max(self.grid[r - 2][c - 1] + 1);
        }
        let hi = match &self.remaining {
            Some(rem) => self.alphabet_max.min(rem.len() as u32),
            None => self.alphabet_max,
        };
        for v in lo..=hi {
            if let Some(rem) = &mut self.remaining {
                if rem[v as usize - 1] == 0 {
                    continue;
                }
                rem[v as usize - 1] -= 1;
            }
            self.grid[r - 1][c - 1] = v;
            self.fill(k + 1, visit);
            self.grid[r - 1][c - 1] = 0;
            if let Some(rem) = &mut self.remaining {
                rem[v as usize - 1] += 1;
            }
        }
    }
}

/// All SSYT of shape `λ` with entries at most `alphabet_max` (and the given
/// content, if any), in lexicographic order of their entries read row by row.
pub fn enumerate_ssyt(lambda: &Partition, content: Option<&[u32]>, alphabet_max: u32) -> Vec<Tableau> {
    let shape = SkewShape::straight(lambda.clone());
    let content = content.map(normalized_content);
    if let Some(ct) = &content {
        if ct.iter().sum::<u32>() != lambda.weight() || ct.len() > alphabet_max as usize {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    let mut filler = Filler::new(&shape, alphabet_max, content.as_deref());
    filler.run(&mut |grid| out.push(Tableau::from_rows_unchecked(grid.to_vec())));
    out
}

/// Calls `visit` on every SSYT of shape `λ` with entries at most `alphabet_max`
/// without collecting them.
pub fn for_each_ssyt(lambda: &Partition, alphabet_max: u32, visit: &mut dyn FnMut(&[Vec<u32>])) {
    let shape = SkewShape::straight(lambda.clone());
    Filler::new(&shape, alphabet_max, None).run(visit);
}

/// All semistandard fillings of the skew shape with the given content.
pub fn enumerate_skew_ssyt(shape: &SkewShape, content: &[u32]) -> Vec<SkewTableau> {
    let content = normalized_content(content);
    if content.iter().sum::<u32>() != shape.size() {
        return Vec::new();
    }
    let inner = shape.inner().clone();
    let mut out = Vec::new();
    let mut filler = Filler::new(shape, content.len() as u32, Some(&content));
    filler.run(&mut |grid| {
        let rows = grid.iter().enumerate().map(|(r, row)| row[inner.part(r + 1) as usize..].to_vec()).collect();
        out.push(SkewTableau { shape: shape.clone(), rows });
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{partitions_up_to, Comparator};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn inversion_sign(w: &Word) -> Sign {
        let l = w.letters();
        let mut inv = 0u64;
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                if l[i] > l[j] {
                    inv += 1;
                }
            }
        }
        Sign::from_parity(inv)
    }

    #[test]
    fn row_word_examples() {
        assert_eq!(t("1,1,2/2,3").row_word().to_string(), "23112");
        assert_eq!(t("5").row_word().to_string(), "5");
        assert_eq!(Tableau::superstandard(&p(&[2, 1])).row_word().to_string(), "211");
    }

    #[test]
    fn reading_examples() {
        let w: Word = "53422331112".parse().unwrap();
        assert_eq!(word_to_tableau_reading(&w).unwrap(), t("1,1,1,2/2,2,3,3/3,4/5"));
        assert_eq!(word_to_tableau_reading(&"1".parse().unwrap()).unwrap(), t("1"));
        assert_eq!(word_to_tableau_reading(&"211".parse().unwrap()).unwrap(), t("1,1/2"));
        let err = word_to_tableau_reading(&"1232".parse().unwrap());
        assert!(matches!(err, Err(Error::NotATableauWord(_))));
        assert!(word_to_tableau_reading(&"12".parse::<Word>().unwrap().concat(&Word(vec![1]))).is_err());
    }

    #[test]
    fn reading_inverts_row_word() {
        for lambda in partitions_up_to(8) {
            for tab in enumerate_ssyt(&lambda, None, 3) {
                assert_eq!(word_to_tableau_reading(&tab.row_word()).unwrap(), tab);
            }
        }
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), Some(&[1, 1, 1]), 3).len(), 2);
        assert_eq!(enumerate_ssyt(&p(&[4]), Some(&[4]), 4), vec![Tableau::superstandard(&p(&[4]))]);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), None, 2).is_empty());
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), Some(&[1, 0, 2]), 3), vec![t("1,3/3")]);
        // s_{21}(1,1,1) = 8
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), None, 3).len(), 8);
    }

    #[test]
    fn ssyt_order_is_lexicographic() {
        let all = enumerate_ssyt(&p(&[2, 2]), None, 3);
        let keys: Vec<Vec<u32>> = all.iter().map(|t| t.rows().concat()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    // Unsigned brute-force Kostka numbers: fill every cell with any letter and filter.
    fn brute_kostka(lambda: &Partition, mu: &[u32]) -> usize {
        let cells = lambda.cells();
        let n = mu.len() as u32;
        let mut count = 0;
        let total = (n as usize).pow(cells.len() as u32);
        for code in 0..total {
            let mut x = code;
            let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| vec![0; l as usize]).collect();
            for &(r, c) in &cells {
                rows[r - 1][c - 1] = (x % n as usize) as u32 + 1;
                x /= n as usize;
            }
            if let Ok(tab) = Tableau::new(rows) {
                let mut ct = tab.content();
                ct.resize(mu.len(), 0);
                if ct == mu {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn ssyt_counts_match_brute_force_kostka() {
        for k in 1..=6u32 {
            for lambda in crate::diagrams::enumerate_partitions(k, None, None) {
                for mu in crate::diagrams::enumerate_partitions(k, Some(4), None) {
                    if k == 6 && mu.len() > 3 {
                        continue;
                    }
                    let got = enumerate_ssyt(&lambda, Some(mu.parts()), k).len();
                    assert_eq!(got, brute_kostka(&lambda, mu.parts()), "{lambda} {mu}");
                }
            }
        }
    }

    #[test]
    fn decorated_count_example() {
        let tab = t("1,1,2,2/2,3,3,4/3,4,4/5,6");
        let count = |s: &str| tab.decorated_count(&s.parse().unwrap());
        assert_eq!(count("dN"), 16);
        assert_eq!(count("E^>"), 28);
        assert_eq!(count("sW"), 47);
        assert_eq!(t("1,1,2/2,3").decorated_count(&N_LT), 5);
        assert_eq!(Tableau::empty().decorated_count(&"sW^>=".parse().unwrap()), 0);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(t("1,1,2/2,3").sign(), Sign::Minus);
        assert_eq!(Tableau::superstandard(&p(&[2, 1])).sign(), Sign::Plus);
        assert_eq!(Tableau::superstandard(&p(&[3, 1, 1])).sign(), Sign::Minus);
        assert_eq!(t("1,2,2,7").sign(), Sign::Plus);
    }

    #[test]
    fn sign_matches_inversion_parity() {
        for lambda in partitions_up_to(6) {
            for tab in enumerate_ssyt(&lambda, None, 4) {
                assert_eq!(tab.sign(), inversion_sign(&tab.row_word()), "{tab}");
            }
        }
    }

    #[test]
    fn superstandard_sign_is_north_count() {
        for lambda in partitions_up_to(8) {
            assert_eq!(Tableau::superstandard(&lambda).sign(), Sign::from_parity(lambda.n()));
        }
    }

    #[test]
    fn skew_sign_examples() {
        let s: SkewTableau = ".,.,1/.,1,2/.,2/3".parse().unwrap();
        assert_eq!(skew_n_lt(&s), 18);
        assert_eq!(s.sign(), Sign::Plus);
        let straight: SkewTableau = "1,1,2/2,3".parse().unwrap();
        assert_eq!(straight.sign(), t("1,1,2/2,3").sign());
        let vertical: SkewTableau = "./1".parse().unwrap();
        let horizontal: SkewTableau = ".,1".parse().unwrap();
        assert_eq!(vertical.sign(), -horizontal.sign());
        assert_ne!(vertical, horizontal);
    }

    #[test]
    fn skew_enumeration_examples() {
        let shape = SkewShape::new(p(&[3, 2, 1]), p(&[2, 1])).unwrap();
        let all = enumerate_skew_ssyt(&shape, &[2, 1]);
        let yam: Vec<String> = all.iter().filter(|s| is_yamanouchi(&s.row_word())).map(|s| s.to_string()).collect();
        assert_eq!(yam, vec![".,.,1/.,1/2", ".,.,1/.,2/1"]);
        let empty = SkewShape::new(p(&[2, 1]), p(&[2, 1])).unwrap();
        assert_eq!(enumerate_skew_ssyt(&empty, &[]).len(), 1);
        let col = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        assert!(enumerate_skew_ssyt(&col, &[3]).is_empty());
    }

    #[test]
    fn yamanouchi_examples() {
        let y = |s: &str| is_yamanouchi(&s.parse().unwrap());
        assert!(y("312211"));
        assert!(!y("1221"));
        assert!(!y("112"));
        assert!(is_yamanouchi(&Word::default()));
    }

    #[test]
    fn text_forms_round_trip() {
        for s in ["", "1,1,2/2,3", ".,.,1/.,2/1", ".,./.", "12,13/14"] {
            let tab: SkewTableau = s.parse().unwrap();
            assert_eq!(tab.to_string(), s);
        }
        let w: Word = "10,2,3".parse().unwrap();
        assert_eq!(w.to_string(), "10,2,3");
        assert!("1,2/1,1".parse::<Tableau>().is_err());
        assert!(".,1".parse::<Tableau>().is_err());
        let _ = Comparator::Lt;
    }
}
