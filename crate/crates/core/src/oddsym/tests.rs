use super::*;
use crate::diagrams::partitions_up_to;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn generator_product(basis: Basis, factors: &[u32], n: usize) -> SkewPolynomial {
    factors.iter().fold(SkewPolynomial::one(n), |acc, &k| {
        let g = match basis {
            Basis::E => elementary(i64::from(k), n),
            _ => complete(i64::from(k), n),
        };
        acc.multiply(&g).unwrap()
    })
}

#[test]
fn straighten_examples() {
    let f = straighten_product(Basis::E, &[2, 1]).unwrap();
    assert_eq!(f, SymFunction::basis_element(Basis::E, p(&[2, 1])));
    let f = straighten_product(Basis::E, &[0, 3]).unwrap();
    assert_eq!(f, SymFunction::basis_element(Basis::E, p(&[3])));
    // e1 e2, checked against the image in OPol_3
    let f = straighten_product(Basis::E, &[1, 2]).unwrap();
    assert_eq!(to_polynomial(&f, 3), generator_product(Basis::E, &[1, 2], 3));
    assert!(f.terms().keys().all(|k| k == &p(&[2, 1]) || k == &p(&[3])));
    assert!(straighten_product(Basis::S, &[1]).is_err());
}

#[test]
fn straighten_pairs_and_triples_match_opol() {
    let n = 6;
    for basis in [Basis::E, Basis::H] {
        for a in 0..=6u32 {
            for b in 0..=6 - a {
                let f = straighten_product(basis, &[a, b]).unwrap();
                assert_eq!(to_polynomial(&f, n), generator_product(basis, &[a, b], n), "{basis} {a} {b}");
                for c in 0..=6 - a - b {
                    let f = straighten_product(basis, &[a, b, c]).unwrap();
                    assert_eq!(to_polynomial(&f, n), generator_product(basis, &[a, b, c], n));
                }
            }
        }
    }
}

#[test]
fn defining_relations_hold_in_opol() {
    let n = 6;
    for basis in [Basis::E, Basis::H] {
        let g = |a: u32, b: u32| generator_product(basis, &[a, b], n);
        for a in 0..=6u32 {
            for b in 0..=6 - a {
                if (a + b) % 2 == 0 {
                    assert_eq!(g(a, b), g(b, a));
                } else if b >= 1 {
                    let s = int(Sign::from_parity(a.into()).to_i64());
                    let lhs = &g(a, b) + &g(b, a).scale(&s);
                    let rhs = &g(a + 1, b - 1).scale(&s) + &g(b - 1, a + 1);
                    assert_eq!(lhs, rhs, "{basis} {a} {b}");
                }
            }
        }
    }
}

#[test]
fn basis_changes_round_trip_and_evaluate_consistently() {
    for k in 0..=5u32 {
        let n = k.max(1) as usize;
        for lambda in partitions_ascending(k) {
            for basis in [Basis::E, Basis::H, Basis::S] {
                let f = SymFunction::basis_element(basis, lambda.clone());
                let image = to_polynomial(&f, n);
                for target in [Basis::E, Basis::H, Basis::S] {
                    let g = f.to_basis(target);
                    assert_eq!(g.to_basis(basis), f);
                    assert_eq!(to_polynomial(&g, n), image);
                }
            }
        }
    }
}

#[test]
fn generator_conversions() {
    // e_1 = h_1, e_2 = h_1 h_1 - ... checked through OPol_4
    for k in 0..=4u32 {
        let e = SymFunction::basis_element(Basis::E, Partition::row(k));
        assert_eq!(to_polynomial(&e.to_basis(Basis::H), 4), elementary(k.into(), 4));
        let h = SymFunction::basis_element(Basis::H, Partition::row(k));
        assert_eq!(to_polynomial(&h.to_basis(Basis::E), 4), complete(k.into(), 4));
    }
    let e1 = SymFunction::basis_element(Basis::E, p(&[1]));
    assert_eq!(e1.to_basis(Basis::H), SymFunction::basis_element(Basis::H, p(&[1])));
}

#[test]
fn kostka_examples() {
    for k in 0..=6 {
        for lambda in partitions_ascending(k) {
            assert_eq!(kostka_number(&lambda, &lambda), 1);
        }
    }
    // (2,1) with content (1,1,1): rows 12/3 (word 312, two inversions) and
    // 13/2 (word 213, one inversion); sign(T_(2,1)) = +1.
    assert_eq!(kostka_number(&p(&[2, 1]), &p(&[1, 1, 1])), 0);
    assert_eq!(kostka_number(&p(&[1, 1]), &p(&[2])), 0);
    assert_eq!(kostka_number(&p(&[2]), &p(&[1, 1])), 1);
    assert_eq!(kostka_number(&p(&[3]), &p(&[1])), 0);
}

#[test]
fn kostka_is_lower_unitriangular() {
    for k in 0..=6 {
        let m = kostka_matrix(k);
        assert!(m.is_lower_unitriangular(), "k = {k}");
        assert!(m.partitions().windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn kostka_matches_brute_force_signed_count() {
    // Independent oracle: all fillings of the shape with the given content,
    // filtered for semistandardness, signed by inversions of the row word.
    fn brute(lambda: &Partition, mu: &Partition) -> i64 {
        let mut letters: Vec<u32> = Vec::new();
        for (i, &m) in mu.parts().iter().enumerate() {
            letters.extend(std::iter::repeat_n(i as u32 + 1, m as usize));
        }
        let shape = lambda.parts().to_vec();
        let mut total = 0i64;
        let mut perm = letters.clone();
        perm.sort();
        loop {
            let mut rows = Vec::new();
            let mut at = 0;
            for &len in &shape {
                rows.push(perm[at..at + len as usize].to_vec());
                at += len as usize;
            }
            let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
            let cols_ok = (1..rows.len()).all(|r| (0..rows[r].len()).all(|c| rows[r - 1][c] < rows[r][c]));
            if rows_ok && cols_ok {
                let word: Vec<u32> = rows.iter().rev().flatten().copied().collect();
                let inv = (0..word.len())
                    .flat_map(|i| (i + 1..word.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| word[i] > word[j])
                    .count();
                total += if inv % 2 == 0 { 1 } else { -1 };
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let t: Vec<u32> = lambda
            .parts()
            .iter()
            .enumerate()
            .rev()
            .flat_map(|(i, &l)| std::iter::repeat_n(i as u32 + 1, l as usize))
            .collect();
        let inv =
            (0..t.len()).flat_map(|i| (i + 1..t.len()).map(move |j| (i, j))).filter(|&(i, j)| t[i] > t[j]).count();
        if inv % 2 == 0 {
            total
        } else {
            -total
        }
    }
    fn next_permutation(v: &mut [u32]) -> bool {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
    for k in 1..=5 {
        for lambda in partitions_ascending(k) {
            for mu in partitions_ascending(k) {
                assert_eq!(kostka_number(&lambda, &mu), brute(&lambda, &mu), "{lambda} {mu}");
            }
        }
    }
}

#[test]
fn schur_k_examples() {
    assert_eq!(schur_k(&Partition::empty()), SymFunction::one(Basis::H));
    for k in 1..=6u32 {
        assert_eq!(schur_k(&Partition::row(k)), SymFunction::basis_element(Basis::H, Partition::row(k)));
        let sign = int(Sign::from_parity(u64::from(k * (k - 1) / 2)).to_i64());
        let e = SymFunction::basis_element(Basis::E, Partition::row(k)).to_basis(Basis::H).scale(&sign);
        assert_eq!(schur_k(&Partition::column(k)), e);
    }
}

#[test]
fn to_polynomial_examples() {
    assert_eq!(to_polynomial(&SymFunction::basis_element(Basis::H, p(&[3])), 3), complete(3, 3));
    let e11 = to_polynomial(&SymFunction::basis_element(Basis::E, p(&[1, 1])), 3);
    assert_eq!(e11, elementary(1, 3).multiply(&elementary(1, 3)).unwrap());
    assert!(to_polynomial(&SymFunction::basis_element(Basis::S, p(&[1, 1, 1])), 2).is_zero());
    assert!(!to_polynomial(&SymFunction::basis_element(Basis::S, p(&[2, 1])), 2).is_zero());
}

#[test]
fn expand_in_basis_examples() {
    let h21 = SymFunction::basis_element(Basis::H, p(&[2, 1]));
    assert_eq!(expand_in_basis(&to_polynomial(&h21, 3), Basis::H, 3).unwrap(), h21);
    // e_2 h_1 two ways
    let poly = elementary(2, 3).multiply(&complete(1, 3)).unwrap();
    let via_relations = SymFunction::basis_element(Basis::E, p(&[2]))
        .to_basis(Basis::H)
        .multiply(&SymFunction::basis_element(Basis::H, p(&[1])));
    assert_eq!(expand_in_basis(&poly, Basis::H, 3).unwrap(), via_relations);
    assert!(expand_in_basis(&SkewPolynomial::zero(3), Basis::S, 3).unwrap().is_zero());
    let x1 = SkewPolynomial::parse("x1", 3).unwrap();
    assert!(matches!(expand_in_basis(&x1, Basis::H, 1), Err(Error::NotInSpan(_))));
    assert!(expand_in_basis(&x1, Basis::H, 4).is_err());
}

#[test]
fn psi_examples() {
    let h1 = SymFunction::basis_element(Basis::H, p(&[1]));
    assert_eq!(psi(Psi::Psi2, &h1), h1.scale(&int(-1)));
    assert_eq!(psi(Psi::Psi1, &SymFunction::one(Basis::H)), SymFunction::one(Basis::H));
}

#[test]
fn psi_structure() {
    for k in 0..=5 {
        for lambda in partitions_ascending(k) {
            let h = SymFunction::basis_element(Basis::H, lambda.clone());
            let e = SymFunction::basis_element(Basis::E, lambda.clone());
            assert_eq!(psi(Psi::Psi12, &psi(Psi::Psi12, &h)), h);
            assert_eq!(psi(Psi::Psi3, &psi(Psi::Psi3, &h)), h);
            assert_eq!(psi(Psi::Psi12, &psi(Psi::Psi3, &h)), psi(Psi::Psi3, &psi(Psi::Psi12, &h)));
            assert_eq!(psi(Psi::Psi1, &psi(Psi::Psi3, &h)), psi(Psi::Psi3, &psi(Psi::Psi1, &h)));
            assert_eq!(psi(Psi::Psi2, &psi(Psi::Psi3, &h)), psi(Psi::Psi3, &psi(Psi::Psi2, &h)));
            // ψ1ψ2 exchanges e and h up to (-1)^{|λ|} ε_{λ^T}
            let s = int((Sign::from_parity(k.into()) * lambda.transpose().eps()).to_i64());
            assert_eq!(psi(Psi::Psi12, &h), e.scale(&s).to_basis(Basis::H));
            assert_eq!(psi(Psi::Psi12, &e), h.scale(&s));
            let sk = SymFunction::basis_element(Basis::S, lambda.clone());
            let s12 = int(Sign::from_parity(lambda.ne() + u64::from(k)).to_i64());
            let expected = SymFunction::basis_element(Basis::S, lambda.transpose()).scale(&s12);
            assert_eq!(psi(Psi::Psi12, &sk), expected.to_basis(Basis::H), "{lambda}");
            let s3 = int((lambda.eps() * sign_t_lambda(&lambda)).to_i64());
            assert_eq!(psi(Psi::Psi3, &sk), sk.scale(&s3).to_basis(Basis::H), "{lambda}");
        }
    }
}

#[test]
fn psi_maps_are_multiplicative() {
    let all: Vec<Partition> = partitions_up_to(3);
    for a in &all {
        for b in &all {
            let f = SymFunction::basis_element(Basis::H, a.clone());
            let g = SymFunction::basis_element(Basis::H, b.clone());
            let fg = f.multiply(&g);
            for which in [Psi::Psi1, Psi::Psi2, Psi::Psi12] {
                assert_eq!(psi(which, &fg), psi(which, &f).multiply(&psi(which, &g)));
            }
            assert_eq!(psi(Psi::Psi3, &fg), psi(Psi::Psi3, &g).multiply(&psi(Psi::Psi3, &f)));
        }
    }
}

#[test]
fn coproduct_examples() {
    let h1 = SymFunction::basis_element(Basis::H, p(&[1]));
    let expected = Tensor::pure(Partition::empty(), p(&[1])).add(&Tensor::pure(p(&[1]), Partition::empty()));
    assert_eq!(coproduct(&h1), expected);
    assert_eq!(coproduct(&SymFunction::one(Basis::H)), Tensor::one());
    // Δ(h_(1,1)) = Δ(h1)Δ(h1)
    let h11 = SymFunction::basis_element(Basis::H, p(&[1, 1]));
    assert_eq!(coproduct(&h11), coproduct(&h1).multiply(&coproduct(&h1)));
    // the two mixed terms cancel through the Koszul sign
    assert_eq!(coproduct(&h11).to_string(), "h[1,1] ⊗ h[] + h[] ⊗ h[1,1]");
}

#[test]
fn coproduct_is_multiplicative() {
    let all: Vec<Partition> = partitions_up_to(3);
    for a in &all {
        for b in &all {
            let f = SymFunction::basis_element(Basis::H, a.clone());
            let g = SymFunction::basis_element(Basis::H, b.clone());
            assert_eq!(coproduct(&f.multiply(&g)), coproduct(&f).multiply(&coproduct(&g)));
        }
    }
}

#[test]
fn coproduct_of_elementary_generators() {
    for k in 0..=5u32 {
        let ek = SymFunction::basis_element(Basis::E, Partition::row(k));
        let mut expected = Tensor::zero();
        for i in 0..=k {
            let left = SymFunction::basis_element(Basis::E, Partition::row(i));
            let right = SymFunction::basis_element(Basis::E, Partition::row(k - i));
            expected = expected.add(&Tensor::from_pair(&left, &right));
        }
        assert_eq!(coproduct(&ek), expected, "k = {k}");
    }
}

#[test]
fn text_and_json_round_trip() {
    for k in 0..=4 {
        for basis in [Basis::E, Basis::H, Basis::S] {
            for lambda in partitions_ascending(k) {
                let f = SymFunction::basis_element(basis, lambda).to_basis(Basis::H).to_basis(basis).scale(&int(3));
                let g = f.try_add(&SymFunction::basis_element(basis, Partition::row(k))).unwrap();
                assert_eq!(SymFunction::parse(&g.to_string()).unwrap(), g);
                let json = serde_json::to_string(&g).unwrap();
                assert_eq!(serde_json::from_str::<SymFunction>(&json).unwrap(), g);
            }
        }
    }
    let f = SymFunction::parse("2*h[2,1] - h[1,1,1]").unwrap();
    assert_eq!(f.to_string(), "2*h[2,1] - h[1,1,1]");
    assert_eq!(
        serde_json::to_string(&f).unwrap(),
        r#"[{"basis":"h","partition":[2,1],"coeff":2},{"basis":"h","partition":[1,1,1],"coeff":-1}]"#
    );
    assert_eq!(SymFunction::parse("0").unwrap(), SymFunction::zero(Basis::H, 0));
    assert_eq!(SymFunction::parse("3").unwrap(), SymFunction::one(Basis::H).scale(&int(3)));
    assert!(SymFunction::parse("h[2] + e[2]").is_err());
    assert!(SymFunction::parse("h[2] + h[1]").is_err());
    assert!(SymFunction::parse("h[2] +").is_err());
}
