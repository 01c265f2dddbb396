//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use oddschur::diagrams::partitions_up_to;
use oddschur::lr::{lr_even, lr_table, LrMethod, LrQuery};
use oddschur::plactic::{knuth_normalize_with, PlacticElement, Strategy};
use oddschur::tableaux::{enumerate_ssyt, skew_n_lt};
use oddschur::verify::{self, Case};
use oddschur::{Partition, Sign, SkewTableau, Tableau, Word};

struct Outcome {
    cases: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn from_cases(cases: Vec<Case>) -> Self {
        let failures = cases
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{} [{}]: expected {}, got {}", c.check, c.inputs, c.expected, c.got))
            .collect();
        Outcome { cases: cases.len(), failures }
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn criterion_1() -> Outcome {
    let cases: Vec<Case> =
        verify::lr_example_cases().into_iter().filter(|c| c.check.starts_with("cancellation")).collect();
    Outcome::from_cases(cases)
}

fn criterion_2() -> Outcome {
    let even: Vec<Case> = verify::lr_example_cases().into_iter().filter(|c| c.check.starts_with("even")).collect();
    let mut out = Outcome::from_cases(even);
    match lr_table(&p(&[2, 1]), &p(&[2, 1])) {
        Ok(rows) => {
            for row in rows {
                let odd = row.odd().unwrap_or(i64::MIN);
                let ev = lr_even(&row.query);
                out.cases += 1;
                if (odd - ev).rem_euclid(2) != 0 {
                    out.failures.push(format!("{}: odd {odd} vs even {ev} mod 2", row.query));
                }
            }
        }
        Err(e) => out.failures.push(e.to_string()),
    }
    out
}

fn criterion_3() -> Outcome {
    Outcome::from_cases(verify::coincidence_cases(6))
}

fn criterion_4() -> Outcome {
    let t: Tableau = "1,1,2,2/2,3,3,4/3,4,4/5,6".parse().unwrap();
    let count = |s: &str| t.decorated_count(&s.parse().unwrap());
    let sign_t: Tableau = "1,1,2/2,3".parse().unwrap();
    let s: SkewTableau = ".,.,1/.,1,2/.,2/3".parse().unwrap();
    let src = verify::Provenance::Example;
    Outcome::from_cases(vec![
        Case::new("dN(T)", t.to_string(), src, 16, count("dN")),
        Case::new("E^>(T)", t.to_string(), src, 28, count("E^>")),
        Case::new("sW(T)", t.to_string(), src, 47, count("sW")),
        Case::new("sign(T)", sign_t.to_string(), src, Sign::Minus, sign_t.sign()),
        Case::new("sign(T_(2,1))", "[2,1]", src, Sign::Plus, Tableau::superstandard(&p(&[2, 1])).sign()),
        Case::new("sign(T_(3,1,1))", "[3,1,1]", src, Sign::Minus, Tableau::superstandard(&p(&[3, 1, 1])).sign()),
        Case::new("N^<(S^)", s.to_string(), src, 18, skew_n_lt(&s)),
        Case::new("sign(S)", s.to_string(), src, Sign::Plus, s.sign()),
    ])
}

fn criterion_5() -> Outcome {
    let mut cases = verify::eh_relation_cases(8);
    cases.extend(verify::defining_relation_cases(8));
    cases.extend(verify::small_identity_cases());
    Outcome::from_cases(cases)
}

fn criterion_6() -> Outcome {
    Outcome::from_cases(verify::pieri_cases(5, 3))
}

fn criterion_7() -> Outcome {
    let mut cases = verify::psi12_eh_cases(6);
    cases.extend(verify::psi_schur_cases(5));
    cases.extend(verify::lr_symmetry_cases(6));
    Outcome::from_cases(cases)
}

fn criterion_8() -> Outcome {
    let mut cases = verify::polytope_example_cases();
    cases.extend(verify::polytope_sweep_cases(7));
    let mut out = Outcome::from_cases(cases);
    // signed lattice sums against the direct expansion
    for mu in partitions_up_to(7) {
        for nu in partitions_up_to(7 - mu.weight()) {
            for lambda in oddschur::diagrams::enumerate_partitions(mu.weight() + nu.weight(), None, None) {
                let q = LrQuery::new(mu.clone(), nu.clone(), lambda);
                out.cases += 1;
                let direct = oddschur::lr::lr(&q, LrMethod::Direct);
                let tri = oddschur::lr::lr(&q, LrMethod::Triangle);
                let hive = oddschur::lr::lr(&q, LrMethod::Hive);
                match (direct, tri, hive) {
                    (Ok(d), Ok(t), Ok(h)) if d == t && d == h => {}
                    other => out.failures.push(format!("{q}: {other:?}")),
                }
            }
        }
    }
    out
}

fn words(len: usize, alphabet: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (1..=alphabet).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn criterion_9() -> Outcome {
    let mut out = Outcome { cases: 0, failures: Vec::new() };
    for w in words(8, 4) {
        let word = Word::new(w);
        let a = knuth_normalize_with(&word, Strategy::LeftToRight);
        let b = knuth_normalize_with(&word, Strategy::RightToLeft);
        out.cases += 1;
        if a != b {
            out.failures.push(format!("{word}: {a:?} vs {b:?}"));
        }
    }
    let n = 3;
    let pool: Vec<Tableau> = partitions_up_to(4).iter().flat_map(|l| enumerate_ssyt(l, None, n)).collect();
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..256 {
        let t = &pool[rng.gen_range(0..pool.len())];
        let u = &pool[rng.gen_range(0..pool.len())];
        let pt = PlacticElement::tableau(n, t.clone()).unwrap();
        let pu = PlacticElement::tableau(n, u.clone()).unwrap();
        let lhs = pt.multiply(&pu).unwrap().to_opol();
        let rhs = pt.to_opol().multiply(&pu.to_opol()).unwrap();
        out.cases += 1;
        if lhs != rhs {
            out.failures.push(format!("to_opol not multiplicative on {t} * {u}"));
        }
    }
    out
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("cancellation example c_(21)(21)^(321) = 0 by all methods", criterion_1),
        ("even s21*s21 expansion and mod-2 agreement", criterion_2),
        ("Schur coincidence for |λ| ≤ 6", criterion_3),
        ("box-count and sign examples", criterion_4),
        ("ring identities in OPol_8", criterion_5),
        ("Pieri rules, |λ| ≤ 5, k ≤ 3", criterion_6),
        ("ψ symmetries and LR symmetries", criterion_7),
        ("polytope layer, |λ| ≤ 7", criterion_8),
        ("plactic well-definedness", criterion_9),
    ];
    let mut all_ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let ok = outcome.failures.is_empty();
        all_ok &= ok;
        println!(
            "criterion {}: {} - {name} ({} cases, {:.2}s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            outcome.cases,
            started.elapsed().as_secs_f64()
        );
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
