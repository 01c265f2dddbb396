//! Exact coordinates of a polynomial over a fixed family of polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::opol::{Monomial, SkewPolynomial};

/// Solves `f = Σ c_i b_i` over a linearly independent family `b_i`.
///
/// Construction selects one pivot monomial per basis element and inverts the
/// resulting square submatrix over the rationals. Every solve checks the full
/// residual, so membership in the span is decided exactly.
#[derive(Debug, Clone)]
pub struct Expander {
    basis: Vec<SkewPolynomial>,
    pivots: Vec<Monomial>,
    inverse: Vec<Vec<BigRational>>,
}

impl Expander {
    /// Fails if the family is linearly dependent.
    pub fn new(basis: Vec<SkewPolynomial>) -> Result<Self> {
        let size = basis.len();
        // Row-reduce copies of the basis vectors to find pivot monomials.
        let mut rows: Vec<Vec<(Monomial, BigRational)>> = basis
            .iter()
            .map(|b| b.terms().iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))).collect())
            .collect();
        let mut pivots = Vec::with_capacity(size);
        for r in 0..size {
            let Some((pm, pc)) = rows[r].iter().find(|(_, c)| !c.is_zero()).cloned() else {
                return Err(Error::NotInSpan("basis images are linearly dependent".into()));
            };
            for s in r + 1..size {
                let factor = lookup(&rows[s], &pm) / &pc;
                if factor.is_zero() {
                    continue;
                }
                let pivot_row = rows[r].clone();
                axpy(&mut rows[s], &-factor, &pivot_row);
            }
            pivots.push(pm);
        }
        let square: Vec<Vec<BigRational>> =
            pivots.iter().map(|m| basis.iter().map(|b| BigRational::from_integer(b.coeff(m))).collect()).collect();
        let inverse = invert(square).ok_or_else(|| Error::NotInSpan("singular pivot matrix".into()))?;
        Ok(Expander { basis, pivots, inverse })
    }

    pub fn basis(&self) -> &[SkewPolynomial] {
        &self.basis
    }

    /// Integer coordinates of `f`, or an error if `f` is outside the integral span.
    pub fn solve(&self, f: &SkewPolynomial) -> Result<Vec<BigInt>> {
        let rhs: Vec<BigRational> = self.pivots.iter().map(|m| BigRational::from_integer(f.coeff(m))).collect();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.inverse {
            let v: BigRational = row.iter().zip(&rhs).map(|(a, b)| a * b).sum();
            if !v.is_integer() {
                return Err(Error::NotInSpan(format!("non-integral coordinate {v}")));
            }
            coords.push(v.to_integer());
        }
        let mut rebuilt = SkewPolynomial::zero(f.n());
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                rebuilt = &rebuilt + &b.scale(c);
            }
        }
        if &rebuilt != f {
            return Err(Error::NotInSpan(format!("residual {}", f - &rebuilt)));
        }
        Ok(coords)
    }
}

fn lookup(row: &[(Monomial, BigRational)], m: &Monomial) -> BigRational {
    row.iter().find(|(k, _)| k == m).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
}

fn axpy(row: &mut Vec<(Monomial, BigRational)>, a: &BigRational, x: &[(Monomial, BigRational)]) {
    for (m, c) in x {
        match row.iter_mut().find(|(k, _)| k == m) {
            Some(entry) => entry.1 += a * c,
            None => row.push((m.clone(), a * c)),
        }
    }
    row.retain(|(_, c)| !c.is_zero());
}

/// Gauss-Jordan inverse over the rationals; `None` if singular.
pub fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Inverse of an integer matrix that is lower triangular with `±1` on the diagonal.
pub fn invert_unitriangular(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        let d = a[i][i];
        assert!(d == 1 || d == -1, "diagonal entry {d} is not a unit");
        inv[i][i] = d;
        for j in (0..i).rev() {
            let s: i64 = (j..i).map(|k| a[i][k] * inv[k][j]).sum();
            inv[i][j] = -s * d;
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str, n: usize) -> SkewPolynomial {
        SkewPolynomial::parse(s, n).unwrap()
    }

    #[test]
    fn solves_and_rejects() {
        let basis = vec![poly("x1 + x2", 2), poly("x1 - x2", 2)];
        let ex = Expander::new(basis).unwrap();
        assert_eq!(ex.solve(&poly("2*x1", 2)).unwrap(), vec![BigInt::from(1), BigInt::from(1)]);
        assert!(ex.solve(&poly("x1", 2)).is_err());
        assert!(ex.solve(&poly("x1*x2", 2)).is_err());
        assert!(Expander::new(vec![poly("x1", 2), poly("2*x1", 2)]).is_err());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn unitriangular_inverse() {
        let a = vec![vec![1, 0, 0], vec![2, -1, 0], vec![-3, 4, 1]];
        let inv = invert_unitriangular(&a);
        for i in 0..3 {
            for j in 0..3 {
                let p: i64 = (0..3).map(|k| a[i][k] * inv[k][j]).sum();
                assert_eq!(p, i64::from(i == j));
            }
        }
    }
}
