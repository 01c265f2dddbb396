//! The ring `OΛ` of odd symmetric functions.
//!
//! Elements are homogeneous integer combinations over one of three bases:
//! `e_λ`, `h_λ` or the combinatorial Schur functions `s_λ` (defined through
//! the odd Kostka matrix). Products of generators are put into normal form
//! with the odd defining relations, which are the same for `e` and `h`.
//!
//! `OΛ` is only ever realized degree by degree: [`to_polynomial`] maps into
//! `OPol_n`, which is faithful in degree `k` as soon as `n ≥ k`.

#[cfg(test)]
mod tests;
mod text;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{enumerate_partitions, sign_t_lambda, Partition};
use crate::error::{Error, Result};
use crate::linalg::{invert_unitriangular, Expander};
use crate::opol::{complete, elementary, SkewPolynomial};
use crate::sign::Sign;
use crate::tableaux::{enumerate_ssyt, tableau_sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    E,
    H,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::S => 's',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// One basis vector `e_λ`, `h_λ` or `s_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub basis: Basis,
    pub index: Partition,
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.basis, self.index)
    }
}

/// A homogeneous element of `OΛ` of degree `k` (ℤ-degree `2k`) written in a
/// single basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunction {
    basis: Basis,
    degree: u32,
    terms: BTreeMap<Partition, BigInt>,
}

/// Linear combination of sorted generator words, keyed by weakly decreasing
/// index sequences.
type Combo = BTreeMap<Vec<u32>, BigInt>;

fn add_into(acc: &mut Combo, key: Vec<u32>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key).or_default();
    *e += c;
    if e.is_zero() {
        acc.retain(|_, v| !v.is_zero());
    }
}

fn unit_combo() -> Combo {
    BTreeMap::from([(Vec::new(), BigInt::one())])
}

fn sign_int(s: Sign) -> BigInt {
    BigInt::from(s.to_i64())
}

/// `(-1)^{k(k+1)/2}`.
fn triangular_sign(k: u32) -> Sign {
    Sign::from_parity(u64::from(k) * (u64::from(k) + 1) / 2)
}

thread_local! {
    static APPEND_MEMO: RefCell<HashMap<(Vec<u32>, u32), Combo>> = RefCell::new(HashMap::new());
}

/// `g_λ · g_c` rewritten over sorted words, for a sorted word `λ`.
///
/// An out-of-order pair `g_a g_b` (`a < b`) is commuted when `a + b` is even;
/// otherwise the defining relation at `(a - 1, b + 1)` gives
/// `g_a g_b = (-1)^{a-1} g_{a-1} g_{b+1} + g_{b+1} g_{a-1} - (-1)^{a-1} g_b g_a`,
/// whose first term has a strictly smaller left index.
fn append_generator(lambda: &[u32], c: u32) -> Combo {
    if c == 0 {
        return BTreeMap::from([(lambda.to_vec(), BigInt::one())]);
    }
    match lambda.last() {
        None => return BTreeMap::from([(vec![c], BigInt::one())]),
        Some(&a) if a >= c => {
            let mut w = lambda.to_vec();
            w.push(c);
            return BTreeMap::from([(w, BigInt::one())]);
        }
        _ => {}
    }
    let key = (lambda.to_vec(), c);
    if let Some(hit) = APPEND_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let (a, b) = (*lambda.last().unwrap(), c);
    let rest = &lambda[..lambda.len() - 1];
    let mut out = Combo::new();
    if (a + b) % 2 == 0 {
        for (mu, d) in append_generator(rest, b) {
            for (nu, e) in append_generator(&mu, a) {
                add_into(&mut out, nu, &d * e);
            }
        }
    } else {
        let s = sign_int(Sign::from_parity(u64::from(a) - 1));
        let mut lowered = rest.to_vec();
        if a > 1 {
            lowered.push(a - 1);
        }
        for (mu, d) in append_generator(&lowered, b + 1) {
            add_into(&mut out, mu, &s * d);
        }
        for (mu, d) in append_generator(rest, b + 1) {
            for (nu, e) in append_generator(&mu, a - 1) {
                add_into(&mut out, nu, &d * e);
            }
        }
        for (mu, d) in append_generator(rest, b) {
            for (nu, e) in append_generator(&mu, a) {
                add_into(&mut out, nu, -(&s * &d * e));
            }
        }
    }
    APPEND_MEMO.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

fn times_generator(f: &Combo, c: u32) -> Combo {
    let mut out = Combo::new();
    for (w, coeff) in f {
        for (v, d) in append_generator(w, c) {
            add_into(&mut out, v, coeff * d);
        }
    }
    out
}

/// Normal form of an arbitrary word in the generators.
fn straighten_word(word: &[u32]) -> Combo {
    word.iter().fold(unit_combo(), |acc, &c| times_generator(&acc, c))
}

fn combo_mul(f: &Combo, g: &Combo) -> Combo {
    let mut out = Combo::new();
    for (w, c) in g {
        let prod = w.iter().fold(f.clone(), |acc, &part| times_generator(&acc, part));
        for (v, d) in prod {
            add_into(&mut out, v, d * c);
        }
    }
    out
}

fn scale_combo(f: &Combo, c: &BigInt) -> Combo {
    f.iter().map(|(w, d)| (w.clone(), d * c)).filter(|(_, d)| !d.is_zero()).collect()
}

fn add_combo(acc: &mut Combo, f: &Combo) {
    for (w, c) in f {
        add_into(acc, w.clone(), c.clone());
    }
}

thread_local! {
    static E_IN_H: RefCell<Vec<Combo>> = RefCell::new(vec![unit_combo()]);
    static H_IN_E: RefCell<Vec<Combo>> = RefCell::new(vec![unit_combo()]);
}

/// `e_ℓ` in the `h` basis, from `Σ_k (-1)^{k(k+1)/2} e_k h_{ℓ-k} = 0`.
fn e_generator_in_h(l: u32) -> Combo {
    if let Some(hit) = E_IN_H.with(|m| m.borrow().get(l as usize).cloned()) {
        return hit;
    }
    for k in 0..l {
        e_generator_in_h(k);
    }
    let mut acc = Combo::new();
    for k in 0..l {
        let ek = e_generator_in_h(k);
        add_combo(&mut acc, &scale_combo(&times_generator(&ek, l - k), &sign_int(triangular_sign(k))));
    }
    let out = scale_combo(&acc, &-sign_int(triangular_sign(l)));
    E_IN_H.with(|m| m.borrow_mut().push(out.clone()));
    out
}

/// `h_ℓ` in the `e` basis, from the same relation solved for the `k = 0` term.
fn h_generator_in_e(l: u32) -> Combo {
    if let Some(hit) = H_IN_E.with(|m| m.borrow().get(l as usize).cloned()) {
        return hit;
    }
    for k in 0..l {
        h_generator_in_e(k);
    }
    let mut acc = Combo::new();
    for k in 1..=l {
        let rest = h_generator_in_e(l - k);
        let prod = combo_mul(&BTreeMap::from([(vec![k], BigInt::one())]), &rest);
        add_combo(&mut acc, &scale_combo(&prod, &sign_int(triangular_sign(k))));
    }
    let out = scale_combo(&acc, &BigInt::from(-1));
    H_IN_E.with(|m| m.borrow_mut().push(out.clone()));
    out
}

/// Rewrites a combination of `e`-words as `h`-words (or vice versa when
/// `to_e` is set) by substituting each generator.
fn swap_generators(f: &Combo, to_e: bool) -> Combo {
    let mut out = Combo::new();
    for (w, c) in f {
        let image = w.iter().fold(unit_combo(), |acc, &part| {
            let g = if to_e { h_generator_in_e(part) } else { e_generator_in_h(part) };
            combo_mul(&acc, &g)
        });
        add_combo(&mut out, &scale_combo(&image, c));
    }
    out
}

/// Odd Kostka numbers `K_{λμ} = sign(T_λ) Σ_{T ∈ SSYT(λ,μ)} sign(T)` for all
/// `λ, μ ⊢ k`, indexed in ascending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaMatrix {
    k: u32,
    partitions: Vec<Partition>,
    entries: Vec<Vec<i64>>,
}

impl KostkaMatrix {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Row and column labels, ascending lexicographic order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.binary_search(p).ok()
    }

    /// `K_{λμ}`; zero if either index is not a partition of `k`.
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> i64 {
        match (self.index(lambda), self.index(mu)) {
            (Some(i), Some(j)) => self.entries[i][j],
            _ => 0,
        }
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &v)| match j.cmp(&i) {
                std::cmp::Ordering::Greater => v == 0,
                std::cmp::Ordering::Equal => v == 1 || v == -1,
                std::cmp::Ordering::Less => true,
            })
        })
    }
}

/// Partitions of `k` in ascending lexicographic order.
pub fn partitions_ascending(k: u32) -> Vec<Partition> {
    let mut ps = enumerate_partitions(k, None, None);
    ps.reverse();
    ps
}

pub fn kostka_number(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let sum: i64 =
        enumerate_ssyt(lambda, Some(mu.parts()), mu.len() as u32).iter().map(|t| tableau_sign(t).to_i64()).sum();
    sign_t_lambda(lambda).to_i64() * sum
}

pub fn kostka_matrix(k: u32) -> KostkaMatrix {
    kostka_data(k).matrix.clone()
}

struct KostkaData {
    matrix: KostkaMatrix,
    inverse: Vec<Vec<i64>>,
}

fn kostka_data(k: u32) -> Arc<KostkaData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<KostkaData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&k) {
        return hit.clone();
    }
    let partitions = partitions_ascending(k);
    let entries: Vec<Vec<i64>> =
        partitions.par_iter().map(|lambda| partitions.iter().map(|mu| kostka_number(lambda, mu)).collect()).collect();
    let inverse = invert_unitriangular(&entries);
    let data = Arc::new(KostkaData { matrix: KostkaMatrix { k, partitions, entries }, inverse });
    cache.lock().unwrap().entry(k).or_insert(data).clone()
}

impl SymFunction {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        SymFunction { basis, degree, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let degree = index.weight();
        SymFunction { basis, degree, terms: BTreeMap::from([(index, BigInt::one())]) }
    }

    /// Sums the given terms; all indices must be partitions of `degree`.
    pub fn from_terms(basis: Basis, degree: u32, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Result<Self> {
        let mut out = Self::zero(basis, degree);
        for (p, c) in terms {
            if p.weight() != degree {
                return Err(Error::Incompatible(format!("{basis}{p} is not of degree {degree}")));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn from_combo(basis: Basis, degree: u32, f: Combo) -> Self {
        let mut out = Self::zero(basis, degree);
        for (w, c) in f {
            out.add_term(Partition::from_sorted(w), c);
        }
        out
    }

    fn to_combo(&self) -> Combo {
        self.terms.iter().map(|(p, c)| (p.parts().to_vec(), c.clone())).collect()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (p, d) in &self.terms {
            out.add_term(p.clone(), d * c);
        }
        out
    }

    /// Sum of two elements; converts `other` into this basis first.
    pub fn try_add(&self, other: &SymFunction) -> Result<Self> {
        if self.is_zero() && self.degree != other.degree {
            return Ok(other.to_basis(self.basis));
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::Incompatible(format!("degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (p, c) in other.to_basis(self.basis).terms {
            out.add_term(p, c);
        }
        Ok(out)
    }

    /// The same element written in another basis.
    pub fn to_basis(&self, target: Basis) -> SymFunction {
        if target == self.basis {
            return self.clone();
        }
        let k = self.degree;
        match (self.basis, target) {
            (Basis::E, Basis::H) => Self::from_combo(Basis::H, k, swap_generators(&self.to_combo(), false)),
            (Basis::H, Basis::E) => Self::from_combo(Basis::E, k, swap_generators(&self.to_combo(), true)),
            (Basis::H, Basis::S) => {
                // h_μ = Σ_λ K_{λμ} s_λ
                let data = kostka_data(k);
                let m = &data.matrix;
                let mut out = Self::zero(Basis::S, k);
                for (mu, c) in &self.terms {
                    let j = m.index(mu).expect("index is a partition of k");
                    for (i, lambda) in m.partitions.iter().enumerate() {
                        let v = m.entries[i][j];
                        if v != 0 {
                            out.add_term(lambda.clone(), c * BigInt::from(v));
                        }
                    }
                }
                out
            }
            (Basis::S, Basis::H) => {
                // s_λ = Σ_μ (K^{-1})_{μλ} h_μ
                let data = kostka_data(k);
                let m = &data.matrix;
                let mut out = Self::zero(Basis::H, k);
                for (lambda, c) in &self.terms {
                    let j = m.index(lambda).expect("index is a partition of k");
                    for (i, mu) in m.partitions.iter().enumerate() {
                        let v = data.inverse[i][j];
                        if v != 0 {
                            out.add_term(mu.clone(), c * BigInt::from(v));
                        }
                    }
                }
                out
            }
            (Basis::E, Basis::S) => self.to_basis(Basis::H).to_basis(Basis::S),
            (Basis::S, Basis::E) => self.to_basis(Basis::H).to_basis(Basis::E),
            _ => unreachable!(),
        }
    }

    /// Product in `OΛ`, written in the basis of `self`.
    pub fn multiply(&self, other: &SymFunction) -> SymFunction {
        let work = if self.basis == Basis::S { Basis::H } else { self.basis };
        let f = self.to_basis(work).to_combo();
        let g = other.to_basis(work).to_combo();
        Self::from_combo(work, self.degree + other.degree, combo_mul(&f, &g)).to_basis(self.basis)
    }

    /// Text form such as `2*h[2,1] - h[1,1,1]`.
    pub fn parse(s: &str) -> Result<Self> {
        text::parse(s)
    }
}

impl fmt::Display for SymFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write(self, f)
    }
}

impl FromStr for SymFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        text::parse(s)
    }
}

/// Normal form of the product `g_{a_1} ⋯ g_{a_r}` of generators of one letter.
pub fn straighten_product(basis: Basis, factors: &[u32]) -> Result<SymFunction> {
    if basis == Basis::S {
        return Err(Error::Incompatible("straightening applies to e or h generators".into()));
    }
    let degree = factors.iter().sum();
    Ok(SymFunction::from_combo(basis, degree, straighten_word(factors)))
}

/// Image of `f` in `OPol_n`. Schur functions are evaluated through the `h` basis.
pub fn to_polynomial(f: &SymFunction, n: usize) -> SkewPolynomial {
    let (basis, f) = match f.basis {
        Basis::S => (Basis::H, f.to_basis(Basis::H)),
        b => (b, f.clone()),
    };
    let generator = |k: u32| match basis {
        Basis::E => elementary(i64::from(k), n),
        _ => complete(i64::from(k), n),
    };
    let mut cache: HashMap<u32, SkewPolynomial> = HashMap::new();
    let mut out = SkewPolynomial::zero(n);
    for (p, c) in &f.terms {
        let mut term = SkewPolynomial::one(n);
        for &part in p.parts() {
            let g = cache.entry(part).or_insert_with(|| generator(part));
            term = term.multiply(g).expect("same variable count");
            if term.is_zero() {
                break;
            }
        }
        out = &out + &term.scale(c);
    }
    out
}

/// Images of one basis of `OΛ` in degree `k` inside `OPol_n`, ready to solve
/// for coordinates.
#[derive(Debug, Clone)]
pub struct BasisImages {
    basis: Basis,
    k: u32,
    n: usize,
    partitions: Vec<Partition>,
    expander: Expander,
}

impl BasisImages {
    /// Requires `n ≥ k`, where the images are linearly independent.
    pub fn new(basis: Basis, k: u32, n: usize) -> Result<Self> {
        Self::from_images(basis, k, n, |p| to_polynomial(&SymFunction::basis_element(basis, p.clone()), n))
    }

    /// Uses caller-supplied images, e.g. a different construction of the
    /// Schur functions.
    pub fn from_images(
        basis: Basis,
        k: u32,
        n: usize,
        image: impl Fn(&Partition) -> SkewPolynomial + Sync + Send,
    ) -> Result<Self> {
        if (n as u32) < k {
            return Err(Error::Incompatible(format!("need at least {k} variables in degree {k}, got {n}")));
        }
        let partitions = partitions_ascending(k);
        let images: Vec<SkewPolynomial> = partitions.par_iter().map(image).collect();
        Ok(BasisImages { basis, k, n, partitions, expander: Expander::new(images)? })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn images(&self) -> &[SkewPolynomial] {
        self.expander.basis()
    }

    pub fn expand(&self, f: &SkewPolynomial) -> Result<SymFunction> {
        if f.n() != self.n {
            return Err(Error::VariableMismatch { left: f.n(), right: self.n });
        }
        if f.is_zero() {
            return Ok(SymFunction::zero(self.basis, self.k));
        }
        if f.degree() != Some(self.k) || f.terms().keys().any(|m| m.degree() != self.k) {
            return Err(Error::NotInSpan(format!("not homogeneous of degree {}", self.k)));
        }
        let coords = self.expander.solve(f)?;
        SymFunction::from_terms(self.basis, self.k, self.partitions.iter().cloned().zip(coords))
    }
}

/// Coordinates of an odd symmetric polynomial of degree `k` over a basis.
pub fn expand_in_basis(f: &SkewPolynomial, basis: Basis, k: u32) -> Result<SymFunction> {
    BasisImages::new(basis, k, f.n())?.expand(f)
}

/// The combinatorial odd Schur function `s_λ` in the `h` basis.
pub fn schur_k(lambda: &Partition) -> SymFunction {
    SymFunction::basis_element(Basis::S, lambda.clone()).to_basis(Basis::H)
}

/// The symmetries of `OΛ`, and the antipode `S = ψ1 ψ2 ψ3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Psi {
    /// `h_k ↦ e_k`, an algebra automorphism.
    Psi1,
    /// `h_k ↦ (-1)^{k(k+1)/2} h_k`, an algebra involution.
    Psi2,
    /// `h_k ↦ h_k`, an algebra anti-involution.
    Psi3,
    /// `ψ1 ∘ ψ2`.
    Psi12,
    Antipode,
}

impl FromStr for Psi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi1" => Ok(Psi::Psi1),
            "psi2" => Ok(Psi::Psi2),
            "psi3" => Ok(Psi::Psi3),
            "psi12" => Ok(Psi::Psi12),
            "antipode" => Ok(Psi::Antipode),
            _ => Err(Error::Parse(format!("unknown map {s:?}"))),
        }
    }
}

fn psi1(f: &Combo) -> Combo {
    // h_λ ↦ e_λ, then back to h
    swap_generators(f, false)
}

fn psi2(f: &Combo) -> Combo {
    f.iter()
        .map(|(w, c)| {
            let s = w.iter().fold(Sign::Plus, |s, &k| s * triangular_sign(k));
            (w.clone(), c * sign_int(s))
        })
        .collect()
}

fn psi3(f: &Combo) -> Combo {
    let mut out = Combo::new();
    for (w, c) in f {
        let rev: Vec<u32> = w.iter().rev().copied().collect();
        add_combo(&mut out, &scale_combo(&straighten_word(&rev), c));
    }
    out
}

/// Applies a symmetry; the result is written in the `h` basis.
pub fn psi(which: Psi, f: &SymFunction) -> SymFunction {
    let g = f.to_basis(Basis::H).to_combo();
    let out = match which {
        Psi::Psi1 => psi1(&g),
        Psi::Psi2 => psi2(&g),
        Psi::Psi3 => psi3(&g),
        Psi::Psi12 => psi1(&psi2(&g)),
        Psi::Antipode => psi1(&psi2(&psi3(&g))),
    };
    SymFunction::from_combo(Basis::H, f.degree, out)
}

/// An element of `OΛ ⊗ OΛ`, both factors in the `h` basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    terms: BTreeMap<(Partition, Partition), BigInt>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn one() -> Self {
        Self::pure(Partition::empty(), Partition::empty())
    }

    /// `h_α ⊗ h_β`.
    pub fn pure(alpha: Partition, beta: Partition) -> Self {
        Tensor { terms: BTreeMap::from([((alpha, beta), BigInt::one())]) }
    }

    /// `f ⊗ g`, both converted to the `h` basis.
    pub fn from_pair(f: &SymFunction, g: &SymFunction) -> Self {
        let mut out = Tensor::zero();
        for (a, c) in f.to_basis(Basis::H).terms {
            for (b, d) in g.to_basis(Basis::H).terms() {
                out.add_term((a.clone(), b.clone()), &c * d);
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (Partition, Partition), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// `(f ⊗ g)(f' ⊗ g') = (-1)^{deg_s(g) deg_s(f')} ff' ⊗ gg'`.
    pub fn multiply(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((a, b), c) in &self.terms {
            for ((a2, b2), d) in &other.terms {
                let koszul = Sign::from_parity(u64::from(b.weight()) * u64::from(a2.weight()));
                let left = straighten_word(&[a.parts(), a2.parts()].concat());
                let right = straighten_word(&[b.parts(), b2.parts()].concat());
                let coeff = c * d * sign_int(koszul);
                for (l, x) in &left {
                    for (r, y) in &right {
                        let key = (Partition::from_sorted(l.clone()), Partition::from_sorted(r.clone()));
                        out.add_term(key, &coeff * x * y);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_tensor(self, f)
    }
}

/// `Δ(h_k) = Σ_{i+j=k} h_i ⊗ h_j`, extended multiplicatively.
fn coproduct_generator(k: u32) -> Tensor {
    let mut out = Tensor::zero();
    for i in 0..=k {
        out.add_term((Partition::row(i), Partition::row(k - i)), BigInt::one());
    }
    out
}

pub fn coproduct(f: &SymFunction) -> Tensor {
    let mut out = Tensor::zero();
    for (p, c) in f.to_basis(Basis::H).terms {
        let mut term = Tensor::one();
        for &part in p.parts() {
            term = term.multiply(&coproduct_generator(part));
        }
        for (key, d) in term.terms {
            out.add_term(key, d * &c);
        }
    }
    out
}
