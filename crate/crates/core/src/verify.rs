//! Degree-by-degree verification sweeps with provenance-tagged cases.
//!
//! Every suite is a pure function of its parameters; cases are computed in
//! parallel but always reported in the same order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagrams::{enumerate_partitions, partitions_up_to, sign_t_lambda, Partition};
use crate::error::{Error, Result};
use crate::lr::{
    lr_even, lr_plactic_monomial, lr_table, lr_tableaux, lr_yamanouchi, swap_sign, transpose_sign, LrMethod, LrQuery,
};
use crate::oddsym::{psi, Basis, BasisImages, Psi, SymFunction};
use crate::opol::{complete, elementary, SkewPolynomial};
use crate::polytopes::{
    enumerate_hives, enumerate_triangles, lr_hive, lr_triangle, triangle_from_skew_tableau, Hive, Triangle,
};
use crate::schur::{pieri_horizontal, pieri_vertical, schur_combinatorial, schur_plactic, schur_symmetrized};
use crate::sign::Sign;
use crate::tableaux::skew_n_lt;

/// Where the expected value of a case comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A published worked example.
    Example,
    /// Follows from the definitions at a glance.
    Trivial,
    /// Checked against an independent computation.
    Derived,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Example => "example",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub check: String,
    pub inputs: String,
    pub source: Provenance,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Case {
    pub fn new(
        check: &str,
        inputs: impl Into<String>,
        source: Provenance,
        expected: impl ToString,
        got: impl ToString,
    ) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        let pass = expected == got;
        Case { check: check.into(), inputs: inputs.into(), source, expected, got, pass }
    }

    /// A boolean property; `expected` reads "holds".
    pub fn holds(check: &str, inputs: impl Into<String>, source: Provenance, ok: bool, detail: impl ToString) -> Self {
        let got = if ok { "holds".to_string() } else { detail.to_string() };
        Case::new(check, inputs, source, "holds", got)
    }

    fn error(check: &str, inputs: impl Into<String>, source: Provenance, err: &Error) -> Self {
        Case::new(check, inputs, source, "ok", format!("error: {err}"))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub wall_seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_degree: u32,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_cases(suite: &str, max_degree: u32, cases: Vec<Case>, started: Instant) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
            wall_seconds: started.elapsed().as_secs_f64(),
        };
        VerificationReport { suite: suite.into(), max_degree, cases, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            write!(f, "{tag}  {:<22} {:<36} [{}]", c.check, c.inputs, c.source)?;
            if !c.pass {
                write!(f, "  expected {}, got {}", c.expected, c.got)?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "suite {} (max degree {}): {}/{} passed, {} failed, {:.2}s",
            self.suite,
            self.max_degree,
            self.summary.passed,
            self.summary.total,
            self.summary.failed,
            self.summary.wall_seconds
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Coincidence,
    Pieri,
    Lr,
    Polytopes,
    Ring,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Ring, Suite::Coincidence, Suite::Pieri, Suite::Lr, Suite::Polytopes];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coincidence => "coincidence",
            Suite::Pieri => "pieri",
            Suite::Lr => "lr",
            Suite::Polytopes => "polytopes",
            Suite::Ring => "ring",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Size bound: `|λ|` for coincidence, Pieri (with `k ≤ 3` on top) and
    /// the polytopes; `|μ| + |ν|` for LR; degree and variable count for ring.
    pub max_degree: u32,
    /// Extends the coincidence sweep to degree 6 even when `max_degree` is lower.
    pub deep: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_degree: 5, deep: false }
    }
}

pub fn run(suite: Suite, opts: VerifyOptions) -> VerificationReport {
    let started = Instant::now();
    let d = opts.max_degree;
    let cases = match suite {
        Suite::Ring => ring_cases(d),
        Suite::Coincidence => coincidence_cases(if opts.deep { d.max(6) } else { d }),
        Suite::Pieri => pieri_cases(d, 3),
        Suite::Lr => lr_cases(d),
        Suite::Polytopes => polytope_cases(d),
        Suite::All => {
            return {
                let mut cases = Vec::new();
                for s in Suite::EACH {
                    cases.extend(run(s, opts).cases);
                }
                VerificationReport::from_cases("all", d, cases, started)
            }
        }
    };
    VerificationReport::from_cases(suite.name(), d, cases, started)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn generator_product(basis: Basis, a: u32, b: u32, n: usize) -> SkewPolynomial {
    let g = |k: u32| match basis {
        Basis::E => elementary(k.into(), n),
        _ => complete(k.into(), n),
    };
    g(a).multiply(&g(b)).expect("same n")
}

/// `Σ_k (-1)^{k(k+1)/2} e_k h_{ℓ-k} = 0` in `OPol_n` for `1 ≤ ℓ ≤ n`.
pub fn eh_relation_cases(n: u32) -> Vec<Case> {
    (1..=n)
        .into_par_iter()
        .map(|l| {
            let nn = n as usize;
            let mut sum = SkewPolynomial::zero(nn);
            for k in 0..=l {
                let s = int(Sign::from_parity(u64::from(k * (k + 1) / 2)).to_i64());
                let term = elementary(k.into(), nn).multiply(&complete((l - k).into(), nn)).expect("same n");
                sum = &sum + &term.scale(&s);
            }
            Case::new(
                "e-h relation",
                format!("l={l}, n={n}"),
                Provenance::Example,
                "0",
                if sum.is_zero() { "0".into() } else { sum.to_string() },
            )
        })
        .collect()
}

/// The odd defining relations among `e_a e_b` (and `h_a h_b`) for `a + b ≤ n`, in `OPol_n`.
pub fn defining_relation_cases(n: u32) -> Vec<Case> {
    let pairs: Vec<(Basis, u32, u32)> = [Basis::E, Basis::H]
        .into_iter()
        .flat_map(|b| (0..=n).flat_map(move |a| (0..=n - a).map(move |c| (b, a, c))))
        .filter(|&(_, a, b)| (a + b) % 2 == 0 || b >= 1)
        .collect();
    pairs
        .into_par_iter()
        .map(|(basis, a, b)| {
            let nn = n as usize;
            let g = |x, y| generator_product(basis, x, y, nn);
            let inputs = format!("{}: a={a}, b={b}", basis.letter());
            let ok = if (a + b) % 2 == 0 {
                g(a, b) == g(b, a)
            } else {
                let s = int(Sign::from_parity(a.into()).to_i64());
                &g(a, b) + &g(b, a).scale(&s) == &g(a + 1, b - 1).scale(&s) + &g(b - 1, a + 1)
            };
            Case::holds("defining relation", inputs, Provenance::Example, ok, "relation fails")
        })
        .collect()
}

/// The two small identities in two variables.
pub fn small_identity_cases() -> Vec<Case> {
    let x1 = SkewPolynomial::var(2, 1).expect("in range");
    let x2 = SkewPolynomial::var(2, 2).expect("in range");
    let mul = |a: &SkewPolynomial, b: &SkewPolynomial| a.multiply(b).expect("same n");
    let plus = &x1 + &x2;
    let minus = &x1 - &x2;
    vec![
        Case::new("skew identity", "(x1+x2)x1 = x1(x1-x2)", Provenance::Example, mul(&x1, &minus), mul(&plus, &x1)),
        Case::new("skew identity", "(x1-x2)^2 = (x1+x2)^2", Provenance::Example, mul(&plus, &plus), mul(&minus, &minus)),
    ]
}

/// `ψ1ψ2(e_λ) = (-1)^{|λ|} ε_{λ^T} h_λ` for `|λ| ≤ max`.
pub fn psi12_eh_cases(max: u32) -> Vec<Case> {
    partitions_up_to(max)
        .into_par_iter()
        .map(|lambda| {
            let e = SymFunction::basis_element(Basis::E, lambda.clone());
            let h = SymFunction::basis_element(Basis::H, lambda.clone());
            let s = int((Sign::from_parity(lambda.weight().into()) * lambda.transpose().eps()).to_i64());
            Case::new("psi12 e-h", format!("lambda={lambda}"), Provenance::Example, h.scale(&s), psi(Psi::Psi12, &e))
        })
        .collect()
}

/// `ψ1ψ2(s_λ) = (-1)^{NE(λ)+|λ|} s_{λ^T}` and `ψ3(s_λ) = ε_λ sign(T_λ) s_λ` for `|λ| ≤ max`.
pub fn psi_schur_cases(max: u32) -> Vec<Case> {
    partitions_up_to(max)
        .into_par_iter()
        .flat_map_iter(|lambda| {
            let s = SymFunction::basis_element(Basis::S, lambda.clone());
            let c12 = int(Sign::from_parity(lambda.ne() + u64::from(lambda.weight())).to_i64());
            let e12 = SymFunction::basis_element(Basis::S, lambda.transpose()).scale(&c12).to_basis(Basis::H);
            let c3 = int((lambda.eps() * sign_t_lambda(&lambda)).to_i64());
            let e3 = s.scale(&c3).to_basis(Basis::H);
            let inputs = format!("lambda={lambda}");
            [
                Case::new("psi12 schur", inputs.clone(), Provenance::Example, e12, psi(Psi::Psi12, &s)),
                Case::new("psi3 schur", inputs, Provenance::Example, e3, psi(Psi::Psi3, &s)),
            ]
        })
        .collect()
}

pub fn ring_cases(max_degree: u32) -> Vec<Case> {
    let mut cases = eh_relation_cases(max_degree);
    cases.extend(defining_relation_cases(max_degree));
    cases.extend(small_identity_cases());
    cases.extend(psi12_eh_cases(max_degree));
    cases.extend(psi_schur_cases(max_degree));
    cases
}

/// The three Schur constructions agree in `OPol_k` for every `λ ⊢ k`, `1 ≤ k ≤ max`.
pub fn coincidence_cases(max: u32) -> Vec<Case> {
    let lambdas: Vec<Partition> = (1..=max).flat_map(|k| enumerate_partitions(k, None, None)).collect();
    lambdas
        .into_par_iter()
        .map(|lambda| {
            let n = lambda.weight() as usize;
            let inputs = format!("lambda={lambda}, n={n}");
            let sp = schur_plactic(&lambda, n);
            let sk = schur_combinatorial(&lambda, n);
            let ss = match schur_symmetrized(&lambda, n) {
                Ok(s) => s,
                Err(e) => return Case::error("schur coincidence", inputs, Provenance::Derived, &e),
            };
            let got = match (sp == ss, sp == sk) {
                (true, true) => "plactic = symmetrized = kostka",
                (false, true) => "symmetrized differs",
                (true, false) => "kostka differs",
                (false, false) => "all differ",
            };
            Case::new("schur coincidence", inputs, Provenance::Derived, "plactic = symmetrized = kostka", got)
        })
        .collect()
}

/// Both Pieri rules for `|λ| ≤ max_lambda`, `1 ≤ k ≤ max_k`; products are
/// expanded over the combinatorial Schur images in `OPol_{|λ|+k}`, and the
/// Yamanouchi rule is checked against the horizontal rule.
pub fn pieri_cases(max_lambda: u32, max_k: u32) -> Vec<Case> {
    let max_deg = max_lambda + max_k;
    let images: Vec<Option<BasisImages>> = (0..=max_deg)
        .into_par_iter()
        .map(|d| if d == 0 { None } else { BasisImages::new(Basis::S, d, d as usize).ok() })
        .collect();
    let jobs: Vec<(Partition, u32)> =
        partitions_up_to(max_lambda).into_iter().flat_map(|l| (1..=max_k).map(move |k| (l.clone(), k))).collect();
    jobs.into_par_iter()
        .flat_map_iter(|(lambda, k)| {
            let deg = lambda.weight() + k;
            let n = deg as usize;
            let images = images[deg as usize].as_ref().expect("degree ≥ 1");
            let inputs = format!("lambda={lambda}, k={k}");
            let mut out = Vec::new();
            let vertical = schur_symmetrized(&lambda, n)
                .and_then(|a| Ok((a, schur_symmetrized(&Partition::column(k), n)?)))
                .and_then(|(a, b)| a.multiply(&b))
                .and_then(|p| images.expand(&p));
            out.push(match vertical {
                Ok(got) => {
                    Case::new("pieri e-right (s^s)", inputs.clone(), Provenance::Example, pieri_vertical(&lambda, k), got)
                }
                Err(e) => Case::error("pieri e-right (s^s)", inputs.clone(), Provenance::Example, &e),
            });
            let horizontal = schur_plactic(&lambda, n)
                .multiply(&schur_plactic(&Partition::row(k), n))
                .and_then(|p| images.expand(&p));
            out.push(match horizontal {
                Ok(got) => Case::new(
                    "pieri h-right (s^p)",
                    inputs.clone(),
                    Provenance::Example,
                    pieri_horizontal(&lambda, k),
                    got,
                ),
                Err(e) => Case::error("pieri h-right (s^p)", inputs.clone(), Provenance::Example, &e),
            });
            let expected = pieri_horizontal(&lambda, k);
            let ok = enumerate_partitions(deg, None, None).into_iter().all(|mu| {
                let c = lr_yamanouchi(&LrQuery::new(lambda.clone(), Partition::row(k), mu.clone()));
                BigInt::from(c) == expected.coeff(&mu)
            });
            out.push(Case::holds("pieri via yamanouchi", inputs, Provenance::Derived, ok, "coefficients differ"));
            out
        })
        .collect()
}

fn lr_pairs(max: u32) -> Vec<(Partition, Partition)> {
    let parts = partitions_up_to(max);
    let mut pairs = Vec::new();
    for mu in &parts {
        for nu in &parts {
            if mu.weight() + nu.weight() <= max {
                pairs.push((mu.clone(), nu.clone()));
            }
        }
    }
    pairs
}

/// The cancellation example and the even `s_{21}^2` expansion.
pub fn lr_example_cases() -> Vec<Case> {
    let p = |v: &[u32]| Partition::new(v.to_vec()).expect("partition");
    let q = LrQuery::new(p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]));
    let mut cases: Vec<Case> = LrMethod::ODD
        .into_iter()
        .map(|m| match crate::lr::lr(&q, m) {
            Ok(v) => Case::new("cancellation", format!("{q} by {m}"), Provenance::Example, 0, v),
            Err(e) => Case::error("cancellation", format!("{q} by {m}"), Provenance::Example, &e),
        })
        .collect();
    cases.push(Case::new(
        "cancellation",
        format!("{q} by plactic (monomial signs)"),
        Provenance::Example,
        0,
        lr_plactic_monomial(&q),
    ));
    let mut nlt: Vec<u64> = lr_tableaux(&q).iter().map(skew_n_lt).collect();
    nlt.sort_unstable_by(|a, b| b.cmp(a));
    cases.push(Case::new("cancellation N^<", q.to_string(), Provenance::Example, "[7, 6]", format!("{nlt:?}")));
    cases.push(Case::new("even cancellation", q.to_string(), Provenance::Example, 2, lr_even(&q)));
    let expansion: Vec<String> = enumerate_partitions(6, None, None)
        .into_iter()
        .filter_map(|l| {
            let c = lr_even(&LrQuery::new(p(&[2, 1]), p(&[2, 1]), l.clone()));
            (c != 0).then(|| format!("{c}*s{l}"))
        })
        .collect();
    cases.push(Case::new(
        "even s21*s21",
        "mu=[2,1], nu=[2,1]",
        Provenance::Example,
        "1*s[4,2] + 1*s[4,1,1] + 1*s[3,3] + 2*s[3,2,1] + 1*s[3,1,1,1] + 1*s[2,2,2] + 1*s[2,2,1,1]",
        expansion.join(" + "),
    ));
    cases
}

/// Method agreement (including the direct expansion), the mod-2 reduction,
/// and the symmetries of the coefficients, for each `(μ, ν)` with
/// `|μ| + |ν| ≤ max`.
pub fn lr_agreement_cases(max: u32) -> Vec<Case> {
    lr_pairs(max)
        .into_par_iter()
        .flat_map_iter(|(mu, nu)| {
            let inputs = format!("mu={mu}, nu={nu}");
            let table = match lr_table(&mu, &nu) {
                Ok(t) => t,
                Err(e) => return vec![Case::error("lr methods agree", inputs, Provenance::Derived, &e)],
            };
            let mut out = vec![Case::holds("lr methods agree", inputs.clone(), Provenance::Derived, true, "")];
            let mod2 = table.iter().all(|r| (r.odd().unwrap_or(0) - r.values[&LrMethod::Even]).rem_euclid(2) == 0);
            out.push(Case::holds("lr mod 2 = even", inputs.clone(), Provenance::Derived, mod2, "parity differs"));
            let monomial = table.iter().all(|r| Some(lr_plactic_monomial(&r.query)) == r.odd());
            out.push(Case::holds("lr monomial signs", inputs.clone(), Provenance::Derived, monomial, "differs"));
            out
        })
        .collect()
}

/// Both symmetries of the coefficients, and the corollary for `μ = ν`.
pub fn lr_symmetry_cases(max: u32) -> Vec<Case> {
    lr_pairs(max)
        .into_par_iter()
        .flat_map_iter(|(mu, nu)| {
            let inputs = format!("mu={mu}, nu={nu}");
            let mut swap_ok = true;
            let mut transpose_ok = true;
            let mut corollary_ok = true;
            for lambda in enumerate_partitions(mu.weight() + nu.weight(), None, None) {
                let q = LrQuery::new(mu.clone(), nu.clone(), lambda.clone());
                let c = lr_yamanouchi(&q);
                let swapped = LrQuery::new(nu.clone(), mu.clone(), lambda.clone());
                swap_ok &= c == swap_sign(&q).to_i64() * lr_yamanouchi(&swapped);
                let transposed = LrQuery::new(mu.transpose(), nu.transpose(), lambda.transpose());
                transpose_ok &= c == transpose_sign(&q).to_i64() * lr_yamanouchi(&transposed);
                if mu == nu && c != 0 {
                    corollary_ok &= (lambda.dn() + lambda.n()) % 2 == 0;
                }
            }
            let mut out = vec![
                Case::holds("lr swap symmetry", inputs.clone(), Provenance::Example, swap_ok, "sign mismatch"),
                Case::holds("lr transpose symmetry", inputs.clone(), Provenance::Example, transpose_ok, "sign mismatch"),
            ];
            if mu == nu {
                out.push(Case::holds(
                    "lr square corollary",
                    inputs,
                    Provenance::Derived,
                    corollary_ok,
                    "sign mismatch",
                ));
            }
            out
        })
        .collect()
}

pub fn lr_cases(max_degree: u32) -> Vec<Case> {
    let mut cases = lr_example_cases();
    cases.extend(lr_agreement_cases(max_degree));
    cases.extend(lr_symmetry_cases(max_degree));
    cases
}

/// The printed triangle and hive.
pub fn polytope_example_cases() -> Vec<Case> {
    let s = ".,.,1/.,2/1".parse().expect("skew tableau");
    let mut cases = Vec::new();
    match triangle_from_skew_tableau(&s) {
        Ok(a) => {
            let h = a.phi();
            cases.push(Case::new("A_S", s.to_string(), Provenance::Example, "0 / 2,1 / 1,0,1 / 0,1,0,0", &a));
            cases.push(Case::new("Q_triangle(A_S)", s.to_string(), Provenance::Example, 6, a.q()));
            cases.push(Case::new("Phi(A_S)", s.to_string(), Provenance::Example, "0 / 2,3 / 3,4,5 / 3,5,6,6", &h));
            cases.push(Case::new("Q_hive(Phi(A_S))", s.to_string(), Provenance::Example, 6, h.q()));
            cases.push(Case::new("N^<(S)", s.to_string(), Provenance::Example, 6, skew_n_lt(&s)));
        }
        Err(e) => cases.push(Case::error("A_S", s.to_string(), Provenance::Example, &e)),
    }
    cases
}

/// For each `(μ, ν)` with `|μ| + |ν| ≤ max`, over every `λ`: the tableau,
/// triangle and hive counts agree, `Φ` maps the triangles onto the directly
/// enumerated hives preserving `Q`, `Q_△(A_S) = N^<(S)`, the rhombus term of
/// `Q_ℌ` is non-negative, and both signed sums equal the Yamanouchi rule.
pub fn polytope_sweep_cases(max: u32) -> Vec<Case> {
    lr_pairs(max)
        .into_par_iter()
        .map(|(mu, nu)| {
            let inputs = format!("mu={mu}, nu={nu}");
            let mut problems = Vec::new();
            for lambda in enumerate_partitions(mu.weight() + nu.weight(), None, None) {
                let q = LrQuery::new(mu.clone(), nu.clone(), lambda.clone());
                let tabs = lr_tableaux(&q);
                let mut triangles: Vec<Triangle> = enumerate_triangles(&lambda, &mu, &nu);
                let mut hives: Vec<Hive> = enumerate_hives(&lambda, &mu, &nu);
                if tabs.len() != triangles.len() || tabs.len() != hives.len() {
                    problems.push(format!("{lambda}: counts {}/{}/{}", tabs.len(), triangles.len(), hives.len()));
                    continue;
                }
                triangles.sort();
                hives.sort();
                let mut mapped: Vec<Hive> = triangles.iter().map(Triangle::phi).collect();
                mapped.sort();
                if mapped != hives {
                    problems.push(format!("{lambda}: Phi image differs"));
                }
                if triangles.iter().any(|a| a.q() != a.phi().q()) {
                    problems.push(format!("{lambda}: Q not preserved"));
                }
                for s in &tabs {
                    match triangle_from_skew_tableau(s) {
                        Ok(a) if triangles.binary_search(&a).is_ok() && a.q() == skew_n_lt(s) as i64 => {}
                        _ => problems.push(format!("{lambda}: A_S wrong for {s}")),
                    }
                }
                let n = hives.first().map_or(0, |h| h.n() as i64);
                if hives.iter().any(|h| (1..=n).any(|i| (i..=n).any(|j| h.rhombus_term(i, j) < 0))) {
                    problems.push(format!("{lambda}: negative rhombus term"));
                }
                let c = lr_yamanouchi(&q);
                let (t, h) = (lr_triangle(&mu, &nu, &lambda), lr_hive(&mu, &nu, &lambda));
                if t != c || h != c {
                    problems.push(format!("{lambda}: signed sums {t}/{h} vs {c}"));
                }
            }
            Case::holds("polytope bijection", inputs, Provenance::Derived, problems.is_empty(), problems.join("; "))
        })
        .collect()
}

pub fn polytope_cases(max_degree: u32) -> Vec<Case> {
    let mut cases = polytope_example_cases();
    cases.extend(polytope_sweep_cases(max_degree));
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in Suite::EACH {
            let report = run(suite, VerifyOptions { max_degree: 3, deep: false });
            assert!(report.passed(), "{report}");
            assert!(report.summary.total > 0);
        }
    }

    #[test]
    fn all_is_the_concatenation() {
        let opts = VerifyOptions { max_degree: 2, deep: false };
        let all = run(Suite::All, opts);
        let each: Vec<Case> = Suite::EACH.into_iter().flat_map(|s| run(s, opts).cases).collect();
        assert_eq!(all.cases, each);
    }

    #[test]
    fn deterministic() {
        let opts = VerifyOptions { max_degree: 3, deep: false };
        assert_eq!(run(Suite::Lr, opts).cases, run(Suite::Lr, opts).cases);
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_case_is_reported() {
        let c = Case::new("x", "y", Provenance::Trivial, 1, 2);
        assert!(!c.pass);
        let r = VerificationReport::from_cases("t", 0, vec![c], Instant::now());
        assert!(!r.passed());
        assert!(r.to_string().contains("FAIL"));
    }
}
