//! The three constructions of odd Schur functions in `OPol_n`, and the odd
//! Pieri rules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::diagrams::{size_below_row, size_right_of_column, Partition};
use crate::error::{Error, Result};
use crate::oddsym::{schur_k, to_polynomial, Basis, SymFunction};
use crate::opol::{tilde_monomial, Monomial, SkewPolynomial};
use crate::sign::Sign;
use crate::tableaux::for_each_ssyt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchurMethod {
    /// Signed sum over semistandard tableaux.
    Plactic,
    /// Longest odd divided difference of a staircase monomial.
    Symmetrized,
    /// Inverse odd Kostka matrix applied to the `h` basis.
    Kostka,
}

impl SchurMethod {
    pub const ALL: [SchurMethod; 3] = [SchurMethod::Plactic, SchurMethod::Symmetrized, SchurMethod::Kostka];

    pub fn name(self) -> &'static str {
        match self {
            SchurMethod::Plactic => "plactic",
            SchurMethod::Symmetrized => "symmetrized",
            SchurMethod::Kostka => "kostka",
        }
    }
}

impl fmt::Display for SchurMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchurMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchurMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown Schur method {s:?}")))
    }
}

pub fn schur(lambda: &Partition, n: usize, method: SchurMethod) -> Result<SkewPolynomial> {
    match method {
        SchurMethod::Plactic => Ok(schur_plactic(lambda, n)),
        SchurMethod::Symmetrized => schur_symmetrized(lambda, n),
        SchurMethod::Kostka => Ok(schur_combinatorial(lambda, n)),
    }
}

/// `s^p_λ = (-1)^{dN(λ)+N(λ)} Σ_{T ∈ SSYT(λ), entries ≤ n} x̃^{w_r(T)}`.
pub fn schur_plactic(lambda: &Partition, n: usize) -> SkewPolynomial {
    let sign = Sign::from_parity(lambda.dn() + lambda.n());
    let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
    for_each_ssyt(lambda, n as u32, &mut |rows| {
        let word: Vec<u32> = rows.iter().rev().flatten().copied().collect();
        let (s, m) = tilde_monomial(&word, n).expect("entries ≤ n");
        terms.push((m, BigInt::from((s * sign).to_i64())));
    });
    SkewPolynomial::from_terms(n, terms)
}

/// `s^s_λ = (-1)^{C(n,3)} (∂_{w0}(x^λ x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}))^{w0}`.
pub fn schur_symmetrized(lambda: &Partition, n: usize) -> Result<SkewPolynomial> {
    let padded = lambda.padded(n).ok_or_else(|| Error::TooManyParts { partition: lambda.to_string(), n })?;
    let to_u8 = |v: u32| u8::try_from(v).map_err(|_| Error::InvalidPartition(format!("{lambda} is too large")));
    let x_lambda = Monomial::from_exponents(padded.iter().map(|&v| to_u8(v)).collect::<Result<_>>()?);
    let staircase = Monomial::from_exponents((0..n).map(|i| (n - 1 - i) as u8).collect());
    let (sign, m) = x_lambda.mul(&staircase);
    let f = SkewPolynomial::from_terms(n, [(m, BigInt::from(sign.to_i64()))]);
    let n3 = (n * n.saturating_sub(1) * n.saturating_sub(2) / 6) as u64;
    let g = f.longest_divided_difference().w0_twist();
    Ok(g.scale(&BigInt::from(Sign::from_parity(n3).to_i64())))
}

/// The image of `s^K_λ` in `OPol_n`.
pub fn schur_combinatorial(lambda: &Partition, n: usize) -> SkewPolynomial {
    to_polynomial(&schur_k(lambda), n)
}

/// All `μ ⊃ λ` with `μ/λ` a vertical strip of size `k`, each with the rows
/// (1-based) that received a box.
pub fn vertical_strips(lambda: &Partition, k: u32) -> Vec<(Partition, Vec<usize>)> {
    let len = lambda.len() + k as usize;
    let base: Vec<u32> = lambda.padded(len).expect("padding only grows");
    let mut out = Vec::new();
    let mut rows = Vec::new();
    fn go(base: &[u32], r: usize, left: u32, rows: &mut Vec<usize>, out: &mut Vec<(Partition, Vec<usize>)>) {
        if left == 0 {
            let mut mu = base.to_vec();
            for &row in rows.iter() {
                mu[row - 1] += 1;
            }
            if let Ok(p) = Partition::new(mu) {
                out.push((p, rows.clone()));
            }
            return;
        }
        if r > base.len() {
            return;
        }
        rows.push(r);
        go(base, r + 1, left - 1, rows, out);
        rows.pop();
        go(base, r + 1, left, rows, out);
    }
    go(&base, 1, k, &mut rows, &mut out);
    out
}

/// All `μ ⊃ λ` with `μ/λ` a horizontal strip of size `k`, each with the
/// columns (1-based) that received a box.
pub fn horizontal_strips(lambda: &Partition, k: u32) -> Vec<(Partition, Vec<usize>)> {
    vertical_strips(&lambda.transpose(), k).into_iter().map(|(mu, cols)| (mu.transpose(), cols)).collect()
}

/// Right-hand side of the `e`-right Pieri rule:
/// `s_λ s_{(1^k)} = Σ_μ (-1)^{|i_1/λ| + ⋯ + |i_k/λ|} s_μ` over vertical strips.
pub fn pieri_vertical(lambda: &Partition, k: u32) -> SymFunction {
    let terms = vertical_strips(lambda, k).into_iter().map(|(mu, rows)| {
        let e: u64 = rows.iter().map(|&i| u64::from(size_below_row(lambda, i))).sum();
        (mu, BigInt::from(Sign::from_parity(e).to_i64()))
    });
    SymFunction::from_terms(Basis::S, lambda.weight() + k, terms).expect("strips have the right size")
}

/// Right-hand side of the `h`-right Pieri rule, divided through by
/// `(-1)^{NE(λ)}`: `s_λ s_{(k)} = Σ_μ (-1)^{NE(λ)+NE(μ)+Σ|i_t|λ|} s_μ`.
pub fn pieri_horizontal(lambda: &Partition, k: u32) -> SymFunction {
    let terms = horizontal_strips(lambda, k).into_iter().map(|(mu, cols)| {
        let e: u64 = cols.iter().map(|&i| u64::from(size_right_of_column(lambda, i))).sum();
        (mu.clone(), BigInt::from(Sign::from_parity(lambda.ne() + mu.ne() + e).to_i64()))
    });
    SymFunction::from_terms(Basis::S, lambda.weight() + k, terms).expect("strips have the right size")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{enumerate_partitions, strip_type, SkewShape};
    use crate::opol::{complete, elementary};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn one_row_and_one_column() {
        for k in 1..=4u32 {
            let n = k as usize + 1;
            assert_eq!(schur_plactic(&Partition::row(k), n), complete(k.into(), n));
            assert_eq!(schur_combinatorial(&Partition::row(k), n), complete(k.into(), n));
            let sign = BigInt::from(Sign::from_parity(u64::from(k * (k - 1) / 2)).to_i64());
            let e = elementary(k.into(), n).scale(&sign);
            assert_eq!(schur_plactic(&Partition::column(k), n), e);
            assert_eq!(schur_symmetrized(&Partition::column(k), n).unwrap(), e);
            assert_eq!(schur_combinatorial(&Partition::column(k), n), e);
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(schur_symmetrized(&Partition::empty(), 1).unwrap(), SkewPolynomial::one(1));
        assert!(schur_plactic(&p(&[1, 1, 1]), 2).is_zero());
        assert!(schur_symmetrized(&p(&[1, 1, 1]), 2).is_err());
        assert_eq!(schur_combinatorial(&Partition::empty(), 3), SkewPolynomial::one(3));
        let a = schur_symmetrized(&p(&[2, 1]), 3).unwrap();
        assert_eq!(a, schur_plactic(&p(&[2, 1]), 3));
        assert_eq!(a, schur_combinatorial(&p(&[2, 1]), 3));
    }

    #[test]
    fn coincidence_through_degree_four() {
        for k in 1..=4 {
            for lambda in enumerate_partitions(k, None, None) {
                let n = k as usize;
                let sp = schur_plactic(&lambda, n);
                assert_eq!(sp, schur_symmetrized(&lambda, n).unwrap(), "{lambda}");
                assert_eq!(sp, schur_combinatorial(&lambda, n), "{lambda}");
                assert!(sp.is_odd_symmetric());
            }
        }
    }

    #[test]
    fn strips() {
        let lambda = p(&[2, 1]);
        let v = vertical_strips(&lambda, 2);
        let shapes: Vec<String> = v.iter().map(|(m, _)| m.to_string()).collect();
        assert_eq!(shapes, ["[3,2]", "[3,1,1]", "[2,2,1]", "[2,1,1,1]"]);
        for k in 0..=3 {
            for (mu, rows) in vertical_strips(&lambda, k) {
                assert!(strip_type(&SkewShape::new(mu.clone(), lambda.clone()).unwrap()).is_vertical());
                assert_eq!(rows.len(), k as usize);
            }
            for (mu, _) in horizontal_strips(&lambda, k) {
                assert!(strip_type(&SkewShape::new(mu, lambda.clone()).unwrap()).is_horizontal());
            }
        }
        assert_eq!(horizontal_strips(&lambda, 1).len(), 3);
    }

    #[test]
    fn pieri_rules_small() {
        for size in 0..=3 {
            for lambda in enumerate_partitions(size, None, None) {
                for k in 1..=2 {
                    let n = (size + k) as usize;
                    let images = crate::oddsym::BasisImages::new(Basis::S, size + k, n).unwrap();
                    let v = schur_plactic(&lambda, n).multiply(&schur_plactic(&Partition::column(k), n)).unwrap();
                    assert_eq!(images.expand(&v).unwrap(), pieri_vertical(&lambda, k), "{lambda} e{k}");
                    let h = schur_plactic(&lambda, n).multiply(&schur_plactic(&Partition::row(k), n)).unwrap();
                    assert_eq!(images.expand(&h).unwrap(), pieri_horizontal(&lambda, k), "{lambda} h{k}");
                }
            }
        }
    }
}
