//! The skew polynomial ring `OPol_n = Z<x_1..x_n> / (x_i x_j + x_j x_i, i ≠ j)`.
//!
//! Monomials are kept in ascend-sorted normal form, stored as exponent
//! vectors. Squares `x_i^2` are central, so reordering a word only picks up a
//! sign from transpositions of distinct letters.
//!
//! The symmetric-group action and the odd divided differences are defined on
//! the free algebra; [`free`] implements them there literally (Leibniz
//! recursion on words) and this module uses closed forms on sorted
//! monomials, which agree after reduction.

pub mod free;
mod text;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sign::Sign;
use crate::tableaux::Word;

pub use free::FreeWordPolynomial;

/// An ascend-sorted monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn from_exponents(exps: Vec<u8>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Length of the monomial as a word; the Z-degree is twice this.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&a| a as u32).sum()
    }

    /// The non-decreasing index sequence of the monomial.
    pub fn indices(&self) -> Vec<u32> {
        self.0.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat_n(i as u32 + 1, a as usize)).collect()
    }

    /// Product of two sorted monomials, with the sign from sorting the concatenation.
    pub fn mul(&self, other: &Monomial) -> (Sign, Monomial) {
        let mut parity = 0u64;
        let mut smaller_in_right = 0u64;
        for (a, b) in self.0.iter().zip(&other.0) {
            parity += *a as u64 * smaller_in_right;
            smaller_in_right += *b as u64;
        }
        let exps = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        (Sign::from_parity(parity), Monomial(exps))
    }
}

/// Sorts a word of variable indices; the sign counts inversions between
/// distinct letters.
pub fn normalize(word: &[u32]) -> (Sign, Vec<u32>) {
    let mut inversions = 0u64;
    for (i, &a) in word.iter().enumerate() {
        inversions += word[i + 1..].iter().filter(|&&b| b < a).count() as u64;
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    (Sign::from_parity(inversions), sorted)
}

/// Sign and sorted monomial of a word in `OPol_n`.
pub fn normalize_monomial(word: &[u32], n: usize) -> Result<(Sign, Monomial)> {
    let mut exps = vec![0u8; n];
    let mut inversions = 0u64;
    for &l in word {
        if l == 0 || l as usize > n {
            return Err(Error::LetterOutOfRange { letter: l, n });
        }
        // letters already placed and strictly larger than l are inversions
        inversions += exps[l as usize..].iter().map(|&a| a as u64).sum::<u64>();
        exps[l as usize - 1] += 1;
    }
    Ok((Sign::from_parity(inversions), Monomial(exps)))
}

/// An element of `OPol_n` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

fn signed(sign: Sign, c: &BigInt) -> BigInt {
    if sign.is_minus() {
        -c
    } else {
        c.clone()
    }
}

impl SkewPolynomial {
    pub fn zero(n: usize) -> Self {
        SkewPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigInt::one())
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    /// The generator `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Ok(Self::from_terms(n, [(Monomial(exps), BigInt::one())]))
    }

    /// Sums the given terms; zero coefficients are dropped.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.n(), n);
            *acc.entry(m).or_default() += c;
        }
        SkewPolynomial { n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Image of a word (as a product of `x`'s, not `x̃`'s).
    pub fn from_word(word: &[u32], n: usize) -> Result<Self> {
        let (sign, m) = normalize_monomial(word, n)?;
        Ok(Self::from_terms(n, [(m, Sign::to_i64(sign).into())]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    /// Number of non-zero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Common word length of all monomials, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SkewPolynomial { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    fn check_n(&self, other: &SkewPolynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SkewPolynomial) -> Result<Self> {
        self.check_n(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Ok(SkewPolynomial { n: self.n, terms })
    }

    /// Bilinear extension of concatenate-then-normalize.
    pub fn multiply(&self, other: &SkewPolynomial) -> Result<Self> {
        self.check_n(other)?;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * other.len() / 2 + 1);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (s, m) = a.mul(b);
                let prod = ca * cb;
                let e = acc.entry(m).or_default();
                if s.is_minus() {
                    *e -= prod;
                } else {
                    *e += prod;
                }
            }
        }
        Ok(SkewPolynomial { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    /// `s_i`: negates every letter and swaps `x_i ↔ x_{i+1}`.
    pub fn si_action(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let terms = self.terms.iter().map(|(m, c)| {
            let (a, b) = (m.0[i - 1], m.0[i]);
            let sign = Sign::from_parity(m.degree() as u64 + a as u64 * b as u64);
            let mut exps = m.0.clone();
            exps.swap(i - 1, i);
            (Monomial(exps), signed(sign, c))
        });
        Ok(SkewPolynomial { n: self.n, terms: terms.collect() })
    }

    /// Action of the longest element `w_0`, composed as `s_1 (s_2 s_1) ... (s_{n-1} ... s_1)`.
    pub fn w0_twist(&self) -> Self {
        let mut f = self.clone();
        for m in (1..self.n).rev() {
            for i in 1..=m {
                f = f.si_action(i).expect("index in range");
            }
        }
        f
    }

    /// Odd divided difference `∂_i`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in &self.terms {
            for (sign, out) in divided_difference_monomial(m, i) {
                let e = acc.entry(out).or_default();
                if sign.is_minus() {
                    *e -= c;
                } else {
                    *e += c;
                }
            }
        }
        Ok(SkewPolynomial { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// `∂_{w_0} = ∂_1 (∂_2 ∂_1) ... (∂_{n-1} ... ∂_1)`, read as operator
    /// composition: the rightmost factor acts first.
    pub fn longest_divided_difference(&self) -> Self {
        let mut f = self.clone();
        for m in (1..self.n).rev() {
            for i in 1..=m {
                f = f.divided_difference(i).expect("index in range");
                if f.is_zero() {
                    return f;
                }
            }
        }
        f
    }

    pub fn is_odd_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.divided_difference(i).expect("index in range").is_zero())
    }

    /// Parses the text form with a fixed variable count.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        text::parse(s, n)
    }
}

/// `∂_i` of one sorted monomial via the Leibniz rule, in closed form.
fn divided_difference_monomial(m: &Monomial, i: usize) -> Vec<(Sign, Monomial)> {
    let a = &m.0;
    let (ai, aj) = (a[i - 1] as u64, a[i] as u64);
    let before: u64 = a[..i - 1].iter().map(|&x| x as u64).sum();
    let mut out = Vec::with_capacity((ai + aj) as usize);
    // the differentiated letter is the (c+1)-th x_i
    for c in 0..ai {
        let parity = before + c + c * (ai - c - 1);
        let mut e = a.clone();
        e[i - 1] = (ai - c - 1) as u8;
        e[i] = (aj + c) as u8;
        out.push((Sign::from_parity(parity), Monomial(e)));
    }
    // the differentiated letter is the (c+1)-th x_{i+1}
    for c in 0..aj {
        let parity = before + ai + c + ai * c;
        let mut e = a.clone();
        e[i - 1] = c as u8;
        e[i] = (ai + aj - c - 1) as u8;
        out.push((Sign::from_parity(parity), Monomial(e)));
    }
    out
}

impl Add for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn add(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        self.try_add(rhs).expect("variable counts match")
    }
}

impl Sub for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn sub(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        self.try_add(&-rhs).expect("variable counts match")
    }
}

impl Neg for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn neg(self) -> SkewPolynomial {
        SkewPolynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write(self, f)
    }
}

/// `x̃_i = (-1)^{i-1} x_i` as a sign.
fn tilde_sign(i: u32) -> Sign {
    Sign::from_parity(i as u64 - 1)
}

/// `e_k = Σ_{i_1 < ... < i_k} x̃_{i_1} ... x̃_{i_k}`.
pub fn elementary(k: i64, n: usize) -> SkewPolynomial {
    if k < 0 || k as usize > n {
        return SkewPolynomial::zero(n);
    }
    let mut terms = Vec::new();
    let mut chosen = Vec::with_capacity(k as usize);
    fn go(start: u32, n: u32, k: usize, chosen: &mut Vec<u32>, terms: &mut Vec<(Monomial, BigInt)>) {
        if chosen.len() == k {
            let mut exps = vec![0u8; n as usize];
            let mut sign = Sign::Plus;
            for &i in chosen.iter() {
                exps[i as usize - 1] += 1;
                sign *= tilde_sign(i);
            }
            terms.push((Monomial(exps), sign.to_i64().into()));
            return;
        }
        for i in start..=n {
            chosen.push(i);
            go(i + 1, n, k, chosen, terms);
            chosen.pop();
        }
    }
    go(1, n as u32, k as usize, &mut chosen, &mut terms);
    SkewPolynomial::from_terms(n, terms)
}

/// `h_k = Σ_{i_1 ≤ ... ≤ i_k} x̃_{i_1} ... x̃_{i_k}`.
pub fn complete(k: i64, n: usize) -> SkewPolynomial {
    if k < 0 {
        return SkewPolynomial::zero(n);
    }
    let mut terms = Vec::new();
    fn go(var: usize, left: u32, exps: &mut Vec<u8>, terms: &mut Vec<(Monomial, BigInt)>) {
        let n = exps.len();
        if var == n - 1 {
            exps[var] = left as u8;
            let parity: u64 = exps.iter().enumerate().map(|(i, &a)| i as u64 * a as u64).sum();
            terms.push((Monomial(exps.clone()), Sign::from_parity(parity).to_i64().into()));
            exps[var] = 0;
            return;
        }
        for a in (0..=left).rev() {
            exps[var] = a as u8;
            go(var + 1, left - a, exps, terms);
        }
        exps[var] = 0;
    }
    if n == 0 {
        return if k == 0 { SkewPolynomial::one(0) } else { SkewPolynomial::zero(0) };
    }
    go(0, k as u32, &mut vec![0u8; n], &mut terms);
    SkewPolynomial::from_terms(n, terms)
}

/// `x̃^w`: the image of a word under `i ↦ x̃_i`.
pub fn monomial_of_word(w: &Word, n: usize) -> Result<SkewPolynomial> {
    let (sign, m) = normalize_monomial(w.letters(), n)?;
    let tilde = w.letters().iter().fold(Sign::Plus, |s, &l| s * tilde_sign(l));
    Ok(SkewPolynomial::from_terms(n, [(m, (sign * tilde).to_i64().into())]))
}

/// Sign and sorted monomial of `x̃^w`.
pub fn tilde_monomial(letters: &[u32], n: usize) -> Result<(Sign, Monomial)> {
    let (sign, m) = normalize_monomial(letters, n)?;
    let tilde = letters.iter().fold(Sign::Plus, |s, &l| s * tilde_sign(l));
    Ok((sign * tilde, m))
}

/// `sign(Y, Z)` for two monomials that agree up to sign; `None` when they are
/// not proportional or either is not a single monomial with coefficient ±1.
pub fn sign_between(y: &SkewPolynomial, z: &SkewPolynomial) -> Option<Sign> {
    let (my, cy) = y.terms.iter().next().filter(|_| y.len() == 1)?;
    let (mz, cz) = z.terms.iter().next().filter(|_| z.len() == 1)?;
    if my != mz || cy.abs() != BigInt::one() || cz.abs() != BigInt::one() {
        return None;
    }
    Some(if cy == cz { Sign::Plus } else { Sign::Minus })
}

pub fn multiply(f: &SkewPolynomial, g: &SkewPolynomial) -> Result<SkewPolynomial> {
    f.multiply(g)
}

pub fn si_action(i: usize, f: &SkewPolynomial) -> Result<SkewPolynomial> {
    f.si_action(i)
}

pub fn divided_difference(i: usize, f: &SkewPolynomial) -> Result<SkewPolynomial> {
    f.divided_difference(i)
}
