//! The odd plactic ring `ℤPl_n`.
//!
//! Words are rewritten with the signed elementary Knuth transformations
//!
//! ```text
//! (K')  y z x = -y x z   for x < y ≤ z
//! (K'') x z y = -z x y   for x ≤ y < z
//! ```
//!
//! until they are the row word of a tableau. The rewriting is scheduled by
//! row insertion: inserting `x` into a row of length `m` that bumps the
//! entry in position `j` takes `m - j` moves of type K' (walking `x` left)
//! followed by `j - 1` moves of type K'' (walking the bumped entry to the
//! front of the row), after which the bumped entry is adjacent to the next
//! row. Every move is checked against its pattern.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagrams::Partition;
use crate::error::{Error, Result};
use crate::opol::{monomial_of_word, SkewPolynomial};
use crate::sign::Sign;
use crate::tableaux::{for_each_ssyt, Tableau, Word};

/// How to drive a word to normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Insert letters one at a time from the left end of the word.
    LeftToRight,
    /// Normalize the tail first, then absorb its row word into the first letter.
    RightToLeft,
    /// Plain row insertion, charging `(-1)^{m-1}` for a bump out of a row of length `m`.
    BumpSign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    KPrime,
    KDoublePrime,
}

/// A word being rewritten, with a running sign and move count.
struct Rewriter {
    word: Vec<u32>,
    sign: Sign,
    moves: u64,
}

impl Rewriter {
    /// Applies one elementary transformation to the window starting at `pos`.
    fn apply(&mut self, pos: usize, kind: Move) {
        let w = &mut self.word[pos..pos + 3];
        match kind {
            Move::KPrime => {
                let (y, z, x) = (w[0], w[1], w[2]);
                assert!(x < y && y <= z, "K' does not apply to {y}{z}{x}");
                w[1] = x;
                w[2] = z;
            }
            Move::KDoublePrime => {
                let (x, z, y) = (w[0], w[1], w[2]);
                assert!(x <= y && y < z, "K'' does not apply to {x}{z}{y}");
                w[0] = z;
                w[1] = x;
            }
        }
        self.sign = -self.sign;
        self.moves += 1;
    }
}

/// Row insertion carried out as Knuth moves on the word.
///
/// The word is `w_r(P) · rest`; `rows[r]` holds the start offset and length
/// of row `r + 1` of `P` inside the word (bottom row first in the word).
fn insert_by_moves(rw: &mut Rewriter, rows: &mut Vec<(usize, usize)>, letter_pos: usize) {
    // Rows are stored top row first; row 0 ends right where the letter sits.
    let mut carry_pos = letter_pos;
    for slot in rows.iter_mut() {
        let (start, len) = *slot;
        debug_assert_eq!(start + len, carry_pos);
        let x = rw.word[carry_pos];
        let row = &rw.word[start..start + len];
        let Some(j) = row.iter().position(|&v| v > x) else {
            slot.1 += 1;
            return;
        };
        // Walk x left past entries j+1..m (0-based: positions len-1 down to j+1).
        for t in (j + 1..len).rev() {
            rw.apply(start + t - 1, Move::KPrime);
        }
        // Walk the bumped entry (now at start + j) to the front of the row.
        for t in (1..=j).rev() {
            rw.apply(start + t - 1, Move::KDoublePrime);
        }
        // The bumped entry is at `start`; the row now occupies start+1..start+len+1.
        *slot = (start + 1, len);
        carry_pos = start;
    }
    // The bumped entry starts a new bottom row.
    rows.push((carry_pos, 1));
}

/// Left-to-right normalization by moves; returns the sign, move count and tableau.
fn normalize_left_to_right(word: &[u32]) -> (Sign, u64, Tableau) {
    let mut rw = Rewriter { word: word.to_vec(), sign: Sign::Plus, moves: 0 };
    // rows[r] = (start, len), top row first; rows are laid out bottom row
    // first in the word, so offsets decrease with r.
    let mut rows: Vec<(usize, usize)> = Vec::new();
    for pos in 0..word.len() {
        if rows.is_empty() {
            rows.push((pos, 1));
            continue;
        }
        insert_by_moves(&mut rw, &mut rows, pos);
    }
    let tableau = Tableau::from_rows_unchecked(rows.iter().map(|&(s, l)| rw.word[s..s + l].to_vec()).collect());
    debug_assert_eq!(tableau.row_word().letters(), &rw.word[..]);
    (rw.sign, rw.moves, tableau)
}

fn normalize_right_to_left(word: &[u32]) -> (Sign, Tableau) {
    match word.split_first() {
        None => (Sign::Plus, Tableau::empty()),
        Some((&a, rest)) => {
            let (s1, p) = normalize_right_to_left(rest);
            let mut w = vec![a];
            w.extend_from_slice(p.row_word().letters());
            let (s2, _, t) = normalize_left_to_right(&w);
            (s1 * s2, t)
        }
    }
}

/// Row insertion with the bump sign `(-1)^{m-1}` for a row of length `m`.
fn normalize_bump_sign(word: &[u32]) -> (Sign, Tableau) {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut sign = Sign::Plus;
    for &letter in word {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            match row.iter().position(|&v| v > x) {
                None => {
                    row.push(x);
                    break;
                }
                Some(j) => {
                    sign *= Sign::from_parity(row.len() as u64 - 1);
                    x = std::mem::replace(&mut row[j], x);
                    r += 1;
                }
            }
        }
    }
    (sign, Tableau::from_rows_unchecked(rows))
}

/// `(sign, P)` with `w = sign · w_r(P)` in the odd plactic ring.
pub fn knuth_normalize(w: &Word) -> (Sign, Tableau) {
    knuth_normalize_with(w, Strategy::LeftToRight)
}

pub fn knuth_normalize_with(w: &Word, strategy: Strategy) -> (Sign, Tableau) {
    match strategy {
        Strategy::LeftToRight => {
            let (s, _, t) = normalize_left_to_right(w.letters());
            (s, t)
        }
        Strategy::RightToLeft => normalize_right_to_left(w.letters()),
        Strategy::BumpSign => normalize_bump_sign(w.letters()),
    }
}

/// Number of elementary moves used by the left-to-right strategy.
pub fn move_count(w: &Word) -> u64 {
    normalize_left_to_right(w.letters()).1
}

/// The applicable elementary transformations of a word, as
/// `(position, rewritten word)`; used to explore Knuth classes.
pub fn elementary_moves(w: &[u32]) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
        // K' forward: y z x -> y x z with x < y <= z
        if c < a && a <= b {
            let mut v = w.to_vec();
            v[p + 1] = c;
            v[p + 2] = b;
            out.push((p, v));
        }
        // K' backward: y x z -> y z x with x < y <= z
        if b < a && a <= c {
            let mut v = w.to_vec();
            v[p + 1] = c;
            v[p + 2] = b;
            out.push((p, v));
        }
        // K'' forward: x z y -> z x y with x <= y < z
        if a <= c && c < b {
            let mut v = w.to_vec();
            v[p] = b;
            v[p + 1] = a;
            out.push((p, v));
        }
        // K'' backward: z x y -> x z y with x <= y < z
        if b <= c && c < a {
            let mut v = w.to_vec();
            v[p] = b;
            v[p + 1] = a;
            out.push((p, v));
        }
    }
    out
}

/// An element of `ℤPl_n`: an integer combination of tableaux with entries `≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacticElement {
    n: u32,
    terms: BTreeMap<Tableau, BigInt>,
}

impl PlacticElement {
    pub fn zero(n: u32) -> Self {
        PlacticElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::tableau(n, Tableau::empty()).expect("empty tableau fits")
    }

    pub fn tableau(n: u32, t: Tableau) -> Result<Self> {
        let mut out = Self::zero(n);
        out.add_term(t, BigInt::one())?;
        Ok(out)
    }

    /// The class of a word.
    pub fn word(n: u32, w: &Word) -> Result<Self> {
        let (s, t) = knuth_normalize(w);
        let mut out = Self::zero(n);
        out.add_term(t, BigInt::from(s.to_i64()))?;
        Ok(out)
    }

    pub fn add_term(&mut self, t: Tableau, c: BigInt) -> Result<()> {
        if t.max_entry() > self.n {
            return Err(Error::LetterOutOfRange { letter: t.max_entry(), n: self.n as usize });
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(t).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Tableau, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &PlacticElement) -> Result<Self> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone())?;
        }
        Ok(out)
    }

    fn same_alphabet(&self, other: &PlacticElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: self.n as usize, right: other.n as usize });
        }
        Ok(())
    }

    /// Bilinear product: concatenate row words and normalize.
    pub fn multiply(&self, other: &PlacticElement) -> Result<Self> {
        self.same_alphabet(other)?;
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            for (u, d) in &other.terms {
                let (s, p) = knuth_normalize(&t.row_word().concat(&u.row_word()));
                out.add_term(p, c * d * BigInt::from(s.to_i64()))?;
            }
        }
        Ok(out)
    }

    /// Image under `i ↦ x̃_i`.
    pub fn to_opol(&self) -> SkewPolynomial {
        let n = self.n as usize;
        let mut out = SkewPolynomial::zero(n);
        for (t, c) in &self.terms {
            let m = monomial_of_word(&t.row_word(), n).expect("entries within alphabet");
            out = &out + &m.scale(c);
        }
        out
    }
}

impl fmt::Display for PlacticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "T({t})")?;
        }
        Ok(())
    }
}

/// `ŝ_λ = (-1)^{dN(λ)+N(λ)} Σ_{T ∈ SSYT(λ), entries ≤ n} T`.
pub fn plactic_schur(lambda: &Partition, n: u32) -> PlacticElement {
    let sign = BigInt::from(Sign::from_parity(lambda.dn() + lambda.n()).to_i64());
    let mut out = PlacticElement::zero(n);
    for_each_ssyt(lambda, n, &mut |rows| {
        out.add_term(Tableau::from_rows_unchecked(rows.to_vec()), sign.clone()).expect("entries ≤ n");
    });
    out
}

pub fn plactic_multiply(p: &PlacticElement, q: &PlacticElement) -> Result<PlacticElement> {
    p.multiply(q)
}

pub fn to_opol(p: &PlacticElement) -> SkewPolynomial {
    p.to_opol()
}
