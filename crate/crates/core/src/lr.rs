//! Odd Littlewood-Richardson coefficients, computed several independent ways.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::diagrams::{enumerate_partitions, size_above_row, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::oddsym::{Basis, BasisImages, SymFunction};
use crate::opol::{monomial_of_word, sign_between};
use crate::polytopes::{lr_hive, lr_triangle};
use crate::schur::schur_plactic;
use crate::sign::Sign;
use crate::tableaux::{enumerate_skew_ssyt, enumerate_ssyt, is_yamanouchi, n_lt, skew_n_lt, SkewTableau, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LrMethod {
    /// Expand `s_μ s_ν` in `OPol_n` over the Schur basis.
    Direct,
    /// Signed count of Yamanouchi skew tableaux.
    Yamanouchi,
    /// Signed count of tableaux `U` with `U T_ν = T_λ` in the plactic monoid.
    Plactic,
    /// Signed lattice points of the LR triangle polytope.
    Triangle,
    /// Signed lattice points of the hive polytope.
    Hive,
    /// The classical (unsigned) coefficient.
    Even,
}

impl LrMethod {
    /// Every method that computes the odd coefficient.
    pub const ODD: [LrMethod; 5] =
        [LrMethod::Direct, LrMethod::Yamanouchi, LrMethod::Plactic, LrMethod::Triangle, LrMethod::Hive];

    pub fn name(self) -> &'static str {
        match self {
            LrMethod::Direct => "direct",
            LrMethod::Yamanouchi => "yamanouchi",
            LrMethod::Plactic => "plactic",
            LrMethod::Triangle => "triangle",
            LrMethod::Hive => "hive",
            LrMethod::Even => "even",
        }
    }
}

impl fmt::Display for LrMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LrMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LrMethod::ODD
            .into_iter()
            .chain([LrMethod::Even])
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown LR method {s:?}")))
    }
}

/// A triple `(μ, ν, λ)` asking for `c_{μν}^λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LrQuery {
    pub mu: Partition,
    pub nu: Partition,
    pub lambda: Partition,
}

impl LrQuery {
    pub fn new(mu: Partition, nu: Partition, lambda: Partition) -> Self {
        LrQuery { mu, nu, lambda }
    }

    fn degrees_match(&self) -> bool {
        self.lambda.weight() == self.mu.weight() + self.nu.weight()
    }

    fn contained(&self) -> bool {
        self.lambda.contains(&self.mu) && self.lambda.contains(&self.nu)
    }
}

impl fmt::Display for LrQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({}, {}; {})", self.mu, self.nu, self.lambda)
    }
}

pub fn lr(q: &LrQuery, method: LrMethod) -> Result<i64> {
    Ok(match method {
        LrMethod::Direct => lr_direct(q)?,
        LrMethod::Yamanouchi => lr_yamanouchi(q),
        LrMethod::Plactic => lr_plactic(q),
        LrMethod::Triangle => lr_triangle(&q.mu, &q.nu, &q.lambda),
        LrMethod::Hive => lr_hive(&q.mu, &q.nu, &q.lambda),
        LrMethod::Even => lr_even(q),
    })
}

fn schur_images(k: u32) -> Result<Arc<BasisImages>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<BasisImages>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(images) = cache.lock().expect("cache lock").get(&k) {
        return Ok(images.clone());
    }
    let n = (k as usize).max(1);
    let images = Arc::new(BasisImages::from_images(Basis::S, k, n, |p| schur_plactic(p, n))?);
    cache.lock().expect("cache lock").insert(k, images.clone());
    Ok(images)
}

/// `s_μ s_ν` in the Schur basis, by multiplying tableau sums in `OPol_n`
/// with `n = |μ| + |ν|` and solving against the Schur images.
pub fn schur_product(mu: &Partition, nu: &Partition) -> Result<SymFunction> {
    type Products = Mutex<HashMap<(Partition, Partition), SymFunction>>;
    static CACHE: OnceLock<Products> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (mu.clone(), nu.clone());
    if let Some(f) = cache.lock().expect("cache lock").get(&key) {
        return Ok(f.clone());
    }
    let k = mu.weight() + nu.weight();
    let images = schur_images(k)?;
    let n = (k as usize).max(1);
    let product = schur_plactic(mu, n).multiply(&schur_plactic(nu, n))?;
    let f = images.expand(&product)?;
    cache.lock().expect("cache lock").insert(key, f.clone());
    Ok(f)
}

pub fn lr_direct(q: &LrQuery) -> Result<i64> {
    if !q.degrees_match() {
        return Ok(0);
    }
    let c = schur_product(&q.mu, &q.nu)?.coeff(&q.lambda);
    c.to_i64().ok_or_else(|| Error::Incompatible(format!("coefficient {c} does not fit in i64")))
}

/// Skew tableaux of shape `λ/μ` and content `ν` whose row word is Yamanouchi.
pub fn lr_tableaux(q: &LrQuery) -> Vec<SkewTableau> {
    if !q.degrees_match() || !q.contained() {
        return Vec::new();
    }
    let Ok(shape) = SkewShape::new(q.lambda.clone(), q.mu.clone()) else {
        return Vec::new();
    };
    enumerate_skew_ssyt(&shape, q.nu.parts()).into_iter().filter(|s| is_yamanouchi(&s.row_word())).collect()
}

/// `(-1)^{N(μ)+N(λ)} Σ_S (-1)^{N^<(S)}` over Yamanouchi tableaux.
pub fn lr_yamanouchi(q: &LrQuery) -> i64 {
    let sum: i64 = lr_tableaux(q).iter().map(|s| Sign::from_parity(skew_n_lt(s)).to_i64()).sum();
    Sign::from_parity(q.mu.n() + q.lambda.n()).to_i64() * sum
}

pub fn lr_even(q: &LrQuery) -> i64 {
    lr_tableaux(q).len() as i64
}

/// Classical Schensted row insertion of a word.
pub fn even_insertion(w: &[u32]) -> Tableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &letter in w {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            match row.iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut row[j], x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    break;
                }
            }
        }
    }
    Tableau::from_rows_unchecked(rows)
}

/// Tableaux `U` of shape `μ` and content `λ - ν` with `U T_ν = T_λ` in the
/// classical plactic monoid.
pub fn plactic_factors(q: &LrQuery) -> Vec<Tableau> {
    if !q.degrees_match() || !q.contained() {
        return Vec::new();
    }
    let content: Vec<u32> = (1..=q.lambda.len()).map(|i| q.lambda.part(i) - q.nu.part(i)).collect();
    let target = Tableau::superstandard(&q.lambda);
    let t_nu = Tableau::superstandard(&q.nu).row_word();
    enumerate_ssyt(&q.mu, Some(&content), q.lambda.len() as u32)
        .into_iter()
        .filter(|u| even_insertion(u.row_word().concat(&t_nu).letters()) == target)
        .collect()
}

/// `(-1)^{dN(μ)+dN(ν)+dN(λ)+N(μ)+Σ_i (λ_i-ν_i)|ν/i|} Σ_U (-1)^{N^<(U)}`.
pub fn lr_plactic(q: &LrQuery) -> i64 {
    let factors = plactic_factors(q);
    if factors.is_empty() {
        return 0;
    }
    let merge: u64 = (1..=q.lambda.len())
        .map(|i| u64::from(q.lambda.part(i) - q.nu.part(i)) * u64::from(size_above_row(&q.nu, i)))
        .sum();
    let pre = q.mu.dn() + q.nu.dn() + q.lambda.dn() + q.mu.n() + merge;
    let sum: i64 = factors.iter().map(|u| Sign::from_parity(n_lt(u)).to_i64()).sum();
    Sign::from_parity(pre).to_i64() * sum
}

/// The same sum with each sign read off as `sign(x̃^{w_r(U)} x̃^{w_r(T_ν)}, x̃^{w_r(T_λ)})`
/// and prefactor `(-1)^{dN(μ)+dN(ν)+dN(λ)+N(μ)+N(ν)+N(λ)}`.
pub fn lr_plactic_monomial(q: &LrQuery) -> i64 {
    let factors = plactic_factors(q);
    if factors.is_empty() {
        return 0;
    }
    let n = q.lambda.len();
    let x = |t: &Tableau| monomial_of_word(&t.row_word(), n).expect("entries ≤ ℓ(λ)");
    let target = x(&Tableau::superstandard(&q.lambda));
    let t_nu = x(&Tableau::superstandard(&q.nu));
    let sum: i64 = factors
        .iter()
        .map(|u| {
            let y = x(u).multiply(&t_nu).expect("same n");
            sign_between(&y, &target).expect("proportional monomials").to_i64()
        })
        .sum();
    let (m, v, l) = (&q.mu, &q.nu, &q.lambda);
    Sign::from_parity(m.dn() + v.dn() + l.dn() + m.n() + v.n() + l.n()).to_i64() * sum
}

/// The value of every method on one query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrRow {
    pub query: LrQuery,
    pub values: BTreeMap<LrMethod, i64>,
}

impl LrRow {
    /// The common odd value, if all odd methods agree.
    pub fn odd(&self) -> Option<i64> {
        let mut odd = self.values.iter().filter(|(m, _)| **m != LrMethod::Even).map(|(_, v)| *v);
        let first = odd.next()?;
        odd.all(|v| v == first).then_some(first)
    }
}

pub fn lr_row(q: &LrQuery, methods: &[LrMethod]) -> Result<LrRow> {
    let values = methods.iter().map(|&m| lr(q, m).map(|v| (m, v))).collect::<Result<_>>()?;
    Ok(LrRow { query: q.clone(), values })
}

/// All odd methods plus the even count on every `λ ⊢ |μ|+|ν|`; any
/// disagreement among the odd methods is an error.
pub fn lr_table(mu: &Partition, nu: &Partition) -> Result<Vec<LrRow>> {
    let methods: Vec<LrMethod> = LrMethod::ODD.into_iter().chain([LrMethod::Even]).collect();
    let mut rows = Vec::new();
    for lambda in enumerate_partitions(mu.weight() + nu.weight(), None, None) {
        let row = lr_row(&LrQuery::new(mu.clone(), nu.clone(), lambda), &methods)?;
        if row.odd().is_none() {
            return Err(Error::Disagreement(format!("{}: {:?}", row.query, row.values)));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Every `λ` with a non-zero coefficient under one method.
pub fn lr_expansion(mu: &Partition, nu: &Partition, method: LrMethod) -> Result<BTreeMap<Partition, i64>> {
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(mu.weight() + nu.weight(), None, None) {
        let c = lr(&LrQuery::new(mu.clone(), nu.clone(), lambda.clone()), method)?;
        if c != 0 {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// The signed factor relating `c_{μν}^λ` to `c_{νμ}^λ`.
pub fn swap_sign(q: &LrQuery) -> Sign {
    let (m, n, l) = (&q.mu, &q.nu, &q.lambda);
    Sign::from_parity(m.dn() + n.dn() + l.dn() + m.n() + n.n() + l.n())
}

/// The signed factor relating `c_{μν}^λ` to `c_{μ^T ν^T}^{λ^T}`.
pub fn transpose_sign(q: &LrQuery) -> Sign {
    Sign::from_parity(q.mu.ne() + q.nu.ne() + q.lambda.ne())
}

/// `s_μ s_ν` as a Schur-basis element, built from one method.
pub fn product_from(mu: &Partition, nu: &Partition, method: LrMethod) -> Result<SymFunction> {
    let terms = lr_expansion(mu, nu, method)?.into_iter().map(|(l, c)| (l, BigInt::from(c)));
    SymFunction::from_terms(Basis::S, mu.weight() + nu.weight(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(m: &[u32], n: &[u32], l: &[u32]) -> LrQuery {
        LrQuery::new(p(m), p(n), p(l))
    }

    #[test]
    fn cancellation_example() {
        let query = q(&[2, 1], &[2, 1], &[3, 2, 1]);
        let tabs = lr_tableaux(&query);
        let mut nlt: Vec<u64> = tabs.iter().map(skew_n_lt).collect();
        nlt.sort();
        assert_eq!(nlt, [6, 7]);
        assert_eq!(lr_even(&query), 2);
        for m in LrMethod::ODD {
            assert_eq!(lr(&query, m).unwrap(), 0, "{m}");
        }
    }

    #[test]
    fn even_s21_squared() {
        // s21 s21 = s42 + s411 + s33 + 2 s321 + s3111 + s222 + s2211
        let expected: BTreeMap<Partition, i64> = [
            (p(&[4, 2]), 1),
            (p(&[4, 1, 1]), 1),
            (p(&[3, 3]), 1),
            (p(&[3, 2, 1]), 2),
            (p(&[3, 1, 1, 1]), 1),
            (p(&[2, 2, 2]), 1),
            (p(&[2, 2, 1, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(lr_expansion(&p(&[2, 1]), &p(&[2, 1]), LrMethod::Even).unwrap(), expected);
    }

    #[test]
    fn even_pieri() {
        for mu in partitions_up_to(4) {
            for k in 1..=3 {
                for lambda in enumerate_partitions(mu.weight() + k, None, None) {
                    let query = LrQuery::new(mu.clone(), Partition::row(k), lambda.clone());
                    let strip = lambda.contains(&mu)
                        && crate::diagrams::strip_type(&SkewShape::new(lambda.clone(), mu.clone()).unwrap())
                            .is_horizontal();
                    assert_eq!(lr_even(&query), i64::from(strip));
                }
            }
        }
    }

    #[test]
    fn insertion() {
        assert_eq!(even_insertion(&[2, 3, 1, 1, 2]).rows(), [vec![1, 1, 2], vec![2, 3]]);
        assert_eq!(even_insertion(&[]).rows().len(), 0);
        for lambda in partitions_up_to(5) {
            let t = Tableau::superstandard(&lambda);
            assert_eq!(even_insertion(t.row_word().letters()), t);
        }
    }

    #[test]
    fn methods_agree_small() {
        for mu in partitions_up_to(3) {
            for nu in partitions_up_to(3) {
                if mu.weight() + nu.weight() > 4 {
                    continue;
                }
                let table = lr_table(&mu, &nu).unwrap();
                for row in table {
                    let odd = row.odd().unwrap();
                    assert_eq!((odd - row.values[&LrMethod::Even]).rem_euclid(2), 0, "{}", row.query);
                    assert!(odd.abs() <= row.values[&LrMethod::Even]);
                }
            }
        }
    }

    #[test]
    fn symmetries_small() {
        for mu in partitions_up_to(3) {
            for nu in partitions_up_to(3) {
                for lambda in enumerate_partitions(mu.weight() + nu.weight(), None, None) {
                    let query = LrQuery::new(mu.clone(), nu.clone(), lambda.clone());
                    let c = lr_yamanouchi(&query);
                    let swapped = LrQuery::new(nu.clone(), mu.clone(), lambda.clone());
                    assert_eq!(c, swap_sign(&query).to_i64() * lr_yamanouchi(&swapped), "{query}");
                    let transposed = LrQuery::new(mu.transpose(), nu.transpose(), lambda.transpose());
                    assert_eq!(c, transpose_sign(&query).to_i64() * lr_yamanouchi(&transposed), "{query}");
                }
            }
        }
    }

    #[test]
    fn plactic_prefactor_matches_monomial_signs() {
        for mu in partitions_up_to(3) {
            for nu in partitions_up_to(3) {
                for lambda in enumerate_partitions(mu.weight() + nu.weight(), None, None) {
                    let query = LrQuery::new(mu.clone(), nu.clone(), lambda);
                    assert_eq!(lr_plactic(&query), lr_plactic_monomial(&query), "{query}");
                }
            }
        }
    }

    #[test]
    fn degree_mismatch_is_zero() {
        let query = q(&[1], &[1], &[3]);
        for m in LrMethod::ODD {
            assert_eq!(lr(&query, m).unwrap(), 0);
        }
        assert_eq!(lr_even(&query), 0);
    }

    #[test]
    fn method_names() {
        for m in LrMethod::ODD.into_iter().chain([LrMethod::Even]) {
            assert_eq!(m.name().parse::<LrMethod>().unwrap(), m);
        }
        assert!("bogus".parse::<LrMethod>().is_err());
    }
}
