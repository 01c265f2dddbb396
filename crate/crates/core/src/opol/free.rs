//! The free algebra `Z<x_1..x_n>`, where `s_i` and `∂_i` are first defined.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{normalize_monomial, SkewPolynomial};
use crate::error::{Error, Result};

/// A polynomial in non-commuting variables, keyed by words of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeWordPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl FreeWordPolynomial {
    pub fn zero(n: usize) -> Self {
        FreeWordPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn word(n: usize, w: &[u32]) -> Self {
        let mut p = Self::zero(n);
        p.add_term(w.to_vec(), BigInt::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, w: Vec<u32>, c: BigInt) {
        let e = self.terms.entry(w).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &FreeWordPolynomial) -> FreeWordPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn multiply(&self, other: &FreeWordPolynomial) -> FreeWordPolynomial {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    /// `s_i(x_j) = -x_{s_i(j)}`, extended as a ring endomorphism.
    pub fn si_action(&self, i: usize) -> Result<Self> {
        self.check(i)?;
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let (img, neg) = si_word(w, i as u32);
            out.add_term(img, if neg { -c } else { c.clone() });
        }
        Ok(out)
    }

    /// `∂_i` by literal Leibniz recursion, peeling off the first letter:
    /// `∂(x_j u) = ∂(x_j) u + s_i(x_j) ∂(u)`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        self.check(i)?;
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            for (img, coeff) in leibniz(w, i as u32) {
                out.add_term(img, coeff * c);
            }
        }
        Ok(out)
    }

    /// Image in `OPol_n`.
    pub fn reduce(&self) -> SkewPolynomial {
        let terms = self.terms.iter().map(|(w, c)| {
            let (s, m) = normalize_monomial(w, self.n).expect("letters within range");
            (m, if s.is_minus() { -c } else { c.clone() })
        });
        SkewPolynomial::from_terms(self.n, terms)
    }
}

fn si_letter(l: u32, i: u32) -> u32 {
    if l == i {
        i + 1
    } else if l == i + 1 {
        i
    } else {
        l
    }
}

fn si_word(w: &[u32], i: u32) -> (Vec<u32>, bool) {
    (w.iter().map(|&l| si_letter(l, i)).collect(), w.len() % 2 == 1)
}

fn leibniz(w: &[u32], i: u32) -> Vec<(Vec<u32>, BigInt)> {
    let Some((&first, rest)) = w.split_first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if first == i || first == i + 1 {
        out.push((rest.to_vec(), BigInt::one()));
    }
    for (tail, c) in leibniz(rest, i) {
        let mut img = vec![si_letter(first, i)];
        img.extend(tail);
        out.push((img, -c));
    }
    out
}
