//! Littlewood-Richardson triangles and Knutson-Tao hives.
//!
//! Both live in the space of triangular arrays `(x_{i,j})`, `0 ≤ i ≤ j ≤ n`,
//! drawn with row `j` listing `x_{0,j}, …, x_{j,j}` left to right. That row
//! layout is also the JSON form: `[[0],[2,1],[1,0,1],[0,1,0,0]]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::Partition;
use crate::error::{Error, Result};
use crate::sign::Sign;
use crate::tableaux::{is_yamanouchi, SkewTableau};

macro_rules! triangular_array {
    ($name:ident, $what:literal) => {
        impl $name {
            pub fn zero(n: usize) -> Self {
                $name { n, rows: (0..=n).map(|j| vec![0; j + 1]).collect() }
            }

            /// Builds from row lists; row `j` must have `j + 1` entries.
            pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
                if rows.is_empty() {
                    return Err(Error::Parse(concat!("a ", $what, " needs at least one row").into()));
                }
                for (j, row) in rows.iter().enumerate() {
                    if row.len() != j + 1 {
                        return Err(Error::Parse(format!("row {j} of a {} must have {} entries", $what, j + 1)));
                    }
                }
                Ok($name { n: rows.len() - 1, rows })
            }

            pub fn n(&self) -> usize {
                self.n
            }

            pub fn rows(&self) -> &[Vec<i64>] {
                &self.rows
            }

            /// Entry `(i, j)`; zero outside `0 ≤ i ≤ j ≤ n`.
            pub fn get(&self, i: i64, j: i64) -> i64 {
                if i < 0 || i > j || j > self.n as i64 {
                    return 0;
                }
                self.rows[j as usize][i as usize]
            }

            pub fn set(&mut self, i: usize, j: usize, v: i64) {
                self.rows[j][i] = v;
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let rows: Vec<String> =
                    self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")).collect();
                f.write_str(&rows.join(" / "))
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let rows = s
                    .split('/')
                    .map(|r| {
                        r.split(',')
                            .map(|v| v.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {v:?}"))))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::from_rows(rows)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                self.rows.serialize(serializer)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
                let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
                Self::from_rows(rows).map_err(serde::de::Error::custom)
            }
        }
    };
}

/// A point `(a_{i,j})` of the triangle space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    n: usize,
    rows: Vec<Vec<i64>>,
}

/// A point `(h_{i,j})` of the hive space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hive {
    n: usize,
    rows: Vec<Vec<i64>>,
}

triangular_array!(Triangle, "triangle");
triangular_array!(Hive, "hive");

fn partition_from(values: Vec<i64>, what: &str) -> Result<Partition> {
    if values.iter().any(|&v| v < 0) {
        return Err(Error::BadMarginals(format!("{what} has a negative part: {values:?}")));
    }
    Partition::new(values.iter().map(|&v| v as u32).collect())
        .map_err(|_| Error::BadMarginals(format!("{what} = {values:?} is not weakly decreasing")))
}

impl Triangle {
    /// `λ_j = Σ_{p ≤ j} a_{p,j}`, `μ_j = a_{0,j}`, `ν_i = Σ_{q ≥ i} a_{i,q}`.
    pub fn boundary_partitions(&self) -> Result<(Partition, Partition, Partition)> {
        let n = self.n as i64;
        let lambda = (1..=n).map(|j| (0..=j).map(|p| self.get(p, j)).sum()).collect();
        let mu = (1..=n).map(|j| self.get(0, j)).collect();
        let nu = (1..=n).map(|i| (i..=n).map(|q| self.get(i, q)).sum()).collect();
        Ok((partition_from(lambda, "λ")?, partition_from(mu, "μ")?, partition_from(nu, "ν")?))
    }

    /// The three defining inequality families of an LR triangle. The row
    /// family runs over `1 ≤ i ≤ j < n`; at `i = j` it reads
    /// `a_{i,i} ≥ a_{i+1,i+1}`, without which the polytope picks up points
    /// such as `0 / 2,-1 / 0,1,0` that have no tableau (or hive) partner.
    pub fn is_lr_triangle(&self) -> bool {
        let n = self.n as i64;
        let a = |i, j| self.get(i, j);
        let nonneg = (1..=n).all(|j| (1..j).all(|i| a(i, j) >= 0));
        let columns = (1..n).all(|j| {
            (1..=j).all(|i| (0..i).map(|p| a(p, j)).sum::<i64>() >= (0..=i).map(|p| a(p, j + 1)).sum::<i64>())
        });
        let rows = (1..n).all(|j| {
            (1..=j).all(|i| (i..=j).map(|q| a(i, q)).sum::<i64>() >= (i + 1..=j + 1).map(|q| a(i + 1, q)).sum::<i64>())
        });
        nonneg && columns && rows
    }

    pub fn lies_in(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
        self.is_lr_triangle()
            && self.a00_is_zero()
            && self.boundary_partitions().ok().as_ref() == Some(&(lambda.clone(), mu.clone(), nu.clone()))
    }

    fn a00_is_zero(&self) -> bool {
        self.get(0, 0) == 0
    }

    /// `Q_△(A) = Σ a_{i,j} Y_{i,j}` with `Y_{i,j} = Σ_{p<i} Σ_{p ≤ q < j} a_{p,q}`.
    pub fn q(&self) -> i64 {
        let n = self.n as i64;
        let mut total = 0;
        for j in 0..=n {
            for i in 0..=j {
                let y: i64 = (0..i).map(|p| (p..j).map(|q| self.get(p, q)).sum::<i64>()).sum();
                total += self.get(i, j) * y;
            }
        }
        total
    }

    /// `Φ(A)_{i,j} = Σ_{p ≤ i} Σ_{p ≤ q ≤ j} a_{p,q}`.
    pub fn phi(&self) -> Hive {
        let n = self.n as i64;
        let mut h = Hive::zero(self.n);
        for j in 0..=n {
            for i in 0..=j {
                let v = (0..=i).map(|p| (p..=j).map(|q| self.get(p, q)).sum::<i64>()).sum();
                h.set(i as usize, j as usize, v);
            }
        }
        h
    }
}

impl Hive {
    /// `λ_j = h_{j,j} - h_{j-1,j-1}`, `μ_j = h_{0,j} - h_{0,j-1}`, `ν_i = h_{i,n} - h_{i-1,n}`.
    pub fn boundary_partitions(&self) -> Result<(Partition, Partition, Partition)> {
        let n = self.n as i64;
        let h = |i, j| self.get(i, j);
        let lambda = (1..=n).map(|j| h(j, j) - h(j - 1, j - 1)).collect();
        let mu = (1..=n).map(|j| h(0, j) - h(0, j - 1)).collect();
        let nu = (1..=n).map(|i| h(i, n) - h(i - 1, n)).collect();
        Ok((partition_from(lambda, "λ")?, partition_from(mu, "μ")?, partition_from(nu, "ν")?))
    }

    /// `h_{0,0} = 0` and the rhombus inequalities (R), (V), (L).
    pub fn is_hive(&self) -> bool {
        let n = self.n as i64;
        let h = |i, j| self.get(i, j);
        let r = (1..=n).all(|j| (1..j).all(|i| h(i, j) - h(i, j - 1) >= h(i - 1, j) - h(i - 1, j - 1)));
        let v = (1..n).all(|j| (1..=j).all(|i| h(i - 1, j) - h(i - 1, j - 1) >= h(i, j + 1) - h(i, j)));
        let l = (1..n).all(|j| (1..=j).all(|i| h(i, j) - h(i - 1, j) >= h(i + 1, j + 1) - h(i, j + 1)));
        h(0, 0) == 0 && r && v && l
    }

    pub fn lies_in(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
        self.is_hive() && self.boundary_partitions().ok().as_ref() == Some(&(lambda.clone(), mu.clone(), nu.clone()))
    }

    /// The term `h_{i,j} - h_{i-1,j} - h_{i,j-1} + h_{i-1,j-1}`, i.e. `a_{i,j}` for `i < j`.
    pub fn rhombus_term(&self, i: i64, j: i64) -> i64 {
        self.get(i, j) - self.get(i - 1, j) - self.get(i, j - 1) + self.get(i - 1, j - 1)
    }

    /// `Q_ℌ(H) = Σ_{1 ≤ i ≤ j ≤ n} h_{i-1,j-1}(h_{i,j} - h_{i-1,j} - h_{i,j-1} + h_{i-1,j-1}) - Σ_{i<n} h_{i,i}²`.
    pub fn q(&self) -> i64 {
        let n = self.n as i64;
        let mut total = 0;
        for i in 1..=n {
            for j in i..=n {
                total += self.get(i - 1, j - 1) * self.rhombus_term(i, j);
            }
        }
        for i in 1..n {
            total -= self.get(i, i) * self.get(i, i);
        }
        total
    }

    /// Inverse of `Φ` by inclusion-exclusion.
    pub fn phi_inverse(&self) -> Triangle {
        let n = self.n as i64;
        let mut a = Triangle::zero(self.n);
        for j in 0..=n {
            for i in 0..=j {
                let v = if i < j { self.rhombus_term(i, j) } else { self.get(i, i) - self.get(i - 1, i) };
                a.set(i as usize, j as usize, v);
            }
        }
        a
    }
}

pub fn phi(a: &Triangle) -> Hive {
    a.phi()
}

pub fn phi_inverse(h: &Hive) -> Triangle {
    h.phi_inverse()
}

pub fn q_triangle(a: &Triangle) -> i64 {
    a.q()
}

pub fn q_hive(h: &Hive) -> i64 {
    h.q()
}

/// The smallest size that fits all three partitions.
pub fn polytope_size(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    lambda.len().max(mu.len()).max(nu.len()).max(1)
}

/// `A_S`: `a_{0,j} = μ_j` and `a_{i,j}` = number of entries `i` in row `j` of `S`.
pub fn triangle_from_skew_tableau(s: &SkewTableau) -> Result<Triangle> {
    if !is_yamanouchi(&s.row_word()) {
        return Err(Error::NotYamanouchi);
    }
    let lambda = s.shape().outer();
    let mu = s.shape().inner();
    let content = s.content();
    let nu = Partition::new(content).map_err(|_| Error::NotYamanouchi)?;
    let n = polytope_size(lambda, mu, &nu);
    let mut a = Triangle::zero(n);
    for j in 1..=n {
        a.set(0, j, i64::from(mu.part(j)));
        for i in 1..=j {
            a.set(i, j, i64::from(s.count_in_row(i as u32, j)));
        }
    }
    Ok(a)
}

/// Integer points of `△_LR(λ, μ, ν)` with `n = polytope_size(λ, μ, ν)`.
pub fn enumerate_triangles(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<Triangle> {
    enumerate_triangles_sized(lambda, mu, nu, polytope_size(lambda, mu, nu))
}

pub fn enumerate_triangles_sized(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Vec<Triangle> {
    if lambda.weight() != mu.weight() + nu.weight() || lambda.len().max(mu.len()).max(nu.len()) > n {
        return Vec::new();
    }
    let mut a = Triangle::zero(n);
    for j in 1..=n {
        a.set(0, j, i64::from(mu.part(j)));
    }
    let mut search = TriangleSearch { lambda, nu, n, out: Vec::new() };
    search.go(&mut a, 1, 1);
    search.out
}

struct TriangleSearch<'a> {
    lambda: &'a Partition,
    nu: &'a Partition,
    n: usize,
    out: Vec<Triangle>,
}

impl TriangleSearch<'_> {
    fn row_sum(a: &Triangle, i: usize, upto_j: usize) -> i64 {
        (i..=upto_j).map(|q| a.get(i as i64, q as i64)).sum()
    }

    /// Fixes the diagonal entry of column `j` and checks every constraint
    /// that column `j` completes.
    fn close_column(&self, a: &mut Triangle, j: usize) -> bool {
        let off: i64 = (0..j).map(|p| a.get(p as i64, j as i64)).sum();
        a.set(j, j, i64::from(self.lambda.part(j)) - off);
        let ji = j as i64;
        // (2) between columns j-1 and j
        for i in 1..ji {
            let left: i64 = (0..i).map(|p| a.get(p, ji - 1)).sum();
            let right: i64 = (0..=i).map(|p| a.get(p, ji)).sum();
            if left < right {
                return false;
            }
        }
        // (3) at (i, j-1), for 1 ≤ i ≤ j-1
        for i in 1..ji {
            let left: i64 = (i..ji).map(|q| a.get(i, q)).sum();
            let right: i64 = (i + 1..=ji).map(|q| a.get(i + 1, q)).sum();
            if left < right {
                return false;
            }
        }
        // later entries of each row are non-negative
        (1..=j).all(|i| Self::row_sum(a, i, j) <= i64::from(self.nu.part(i)))
    }

    /// Fills `a_{i,j}` for `1 ≤ i < j`, column by column.
    fn go(&mut self, a: &mut Triangle, i: usize, j: usize) {
        if j > self.n {
            if (1..=self.n).all(|i| Self::row_sum(a, i, self.n) == i64::from(self.nu.part(i))) {
                debug_assert!(a.is_lr_triangle());
                self.out.push(a.clone());
            }
            return;
        }
        if i == j {
            if self.close_column(a, j) {
                self.go(a, 1, j + 1);
            }
            a.set(j, j, 0);
            return;
        }
        let (ii, jj) = (i as i64, j as i64);
        // (2) at (i, j-1) bounds a_{i,j} from above
        let upper = (0..ii).map(|p| a.get(p, jj - 1)).sum::<i64>() - (0..ii).map(|p| a.get(p, jj)).sum::<i64>();
        let slack = i64::from(self.nu.part(i)) - Self::row_sum(a, i, j - 1);
        for v in 0..=upper.min(slack) {
            a.set(i, j, v);
            self.go(a, i + 1, j);
        }
        a.set(i, j, 0);
    }
}

/// Integer points of `ℌ(λ, μ, ν)` by direct search over the rhombus
/// inequalities, without going through triangles.
pub fn enumerate_hives(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<Hive> {
    enumerate_hives_sized(lambda, mu, nu, polytope_size(lambda, mu, nu))
}

pub fn enumerate_hives_sized(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Vec<Hive> {
    if lambda.weight() != mu.weight() + nu.weight() || lambda.len().max(mu.len()).max(nu.len()) > n {
        return Vec::new();
    }
    let mut h = Hive::zero(n);
    let prefix = |p: &Partition, k: usize| -> i64 { (1..=k).map(|t| i64::from(p.part(t))).sum() };
    for j in 0..=n {
        h.set(0, j, prefix(mu, j));
        h.set(j, j, prefix(lambda, j));
    }
    for i in 0..=n {
        h.set(i, n, i64::from(mu.weight()) + prefix(nu, i));
    }
    let interior: Vec<(usize, usize)> = (1..n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    let mut out = Vec::new();
    hive_search(&mut h, &interior, 0, &mut out);
    out.retain(|h| h.is_hive());
    out
}

fn hive_search(h: &mut Hive, cells: &[(usize, usize)], k: usize, out: &mut Vec<Hive>) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(h.clone());
        return;
    };
    let (i, j) = (i as i64, j as i64);
    let g = |h: &Hive, a: i64, b: i64| h.get(a, b);
    // (R) at (i, j): lower bound
    let lo = g(h, i, j - 1) + g(h, i - 1, j) - g(h, i - 1, j - 1);
    // (V) at (i, j-1): upper bound
    let mut hi = g(h, i, j - 1) + g(h, i - 1, j - 1) - g(h, i - 1, j - 2);
    // (L) at (i-1, j-1), when i ≥ 2
    if i >= 2 {
        hi = hi.min(g(h, i - 1, j - 1) - g(h, i - 2, j - 1) + g(h, i - 1, j));
    }
    for v in lo..=hi {
        h.set(i as usize, j as usize, v);
        hive_search(h, cells, k + 1, out);
    }
    h.set(i as usize, j as usize, 0);
}

/// `(-1)^{N(μ)+N(λ)}`, the common prefactor of the signed lattice sums.
fn prefactor(lambda: &Partition, mu: &Partition) -> i64 {
    Sign::from_parity(mu.n() + lambda.n()).to_i64()
}

/// `c_{μν}^λ = (-1)^{N(μ)+N(λ)} Σ_{A ∈ △_LR(λ,μ,ν) ∩ ℤ} (-1)^{Q_△(A)}`.
pub fn lr_triangle(mu: &Partition, nu: &Partition, lambda: &Partition) -> i64 {
    let sum: i64 = enumerate_triangles(lambda, mu, nu).iter().map(|a| Sign::from_parity(a.q() as u64).to_i64()).sum();
    prefactor(lambda, mu) * sum
}

/// `c_{μν}^λ = (-1)^{N(μ)+N(λ)} Σ_{H ∈ ℌ(λ,μ,ν) ∩ ℤ} (-1)^{Q_ℌ(H)}`.
pub fn lr_hive(mu: &Partition, nu: &Partition, lambda: &Partition) -> i64 {
    let sum: i64 =
        enumerate_hives(lambda, mu, nu).iter().map(|h| Sign::from_parity(h.q().rem_euclid(2) as u64).to_i64()).sum();
    prefactor(lambda, mu) * sum
}
