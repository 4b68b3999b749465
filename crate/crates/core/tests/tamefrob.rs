use hopfscope::catalog::{example, ExampleName};
use hopfscope::coradical::coradical;
use hopfscope::linalg::Matrix;
use hopfscope::tamefrob::{
    build_tame_quotient, check_case_i_constraints, check_frobenius, check_h_identities, check_vanishing_criterion,
    combi_poly, solve_k, CaseIReport, CombiVariant, Family, PresentedAlgebra, Strategy as Rewrite, TameParams,
};
use hopfscope::tensorcore::{dualize, MatrixOverAlgebra};
use hopfscope::{HopfError, Scalar};
use proptest::prelude::*;

fn params(a: Option<Scalar>, m: Option<usize>, n: Option<usize>) -> TameParams {
    TameParams { a, m, n }
}

fn assert_frobenius(family: Family, p: TameParams, dim: usize) {
    let (h, pres) = build_tame_quotient(family, p.clone()).unwrap();
    assert_eq!(h.dim(), dim, "{family} {p:?}");
    let r = check_frobenius(&h, &pres).unwrap();
    assert_eq!(r.dim, dim);
    assert!(r.local, "{family} {p:?}");
    assert_eq!(r.socle_dim, 1, "{family} {p:?}");
    assert!(r.pairing_nondegenerate, "{family} {p:?}");
}

#[test]
fn quotient_dimensions() {
    for a in [Scalar::from_int(1, -1), Scalar::from_int(1, 2), Scalar::zeta(3, 1)] {
        assert_frobenius(Family::F1, params(Some(a.clone()), None, None), 4);
        for m in 1..=5 {
            assert_frobenius(Family::F2, params(Some(a.clone()), Some(m), None), 4 * m);
        }
    }
    for n in 2..=6 {
        assert_frobenius(Family::F3, params(None, None, Some(n)), 2 * n);
    }
    for m in 1..=5 {
        assert_frobenius(Family::F4, params(None, Some(m), None), 4 * m + 2);
    }
}

#[test]
fn dual_of_quotient_has_one_dimensional_coradical() {
    let (h, _) = build_tame_quotient(Family::F2, params(Some(Scalar::from_int(1, -1)), Some(3), None)).unwrap();
    assert_eq!(coradical(&dualize(&h)).unwrap().rank(), 1);
}

#[test]
fn f2_minus_one_basis() {
    let p = PresentedAlgebra::new(Family::F2, params(Some(Scalar::from_int(1, -1)), Some(1), None)).unwrap();
    assert_eq!(p.nf_basis, ["", "x", "y", "yx"]);
    assert_eq!(p.top_word(), "yx");
    assert_eq!(p.normal_form("xy"), [("yx".to_string(), Scalar::from_int(1, -1))].into_iter().collect());
}

fn word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['x', 'y']), 0..12).prop_map(|v| v.into_iter().collect())
}

fn family_params() -> impl Strategy<Value = (Family, TameParams)> {
    prop_oneof![
        Just((Family::F1, params(Some(Scalar::from_int(1, 3)), None, None))),
        (1usize..=4).prop_map(|m| (Family::F2, params(Some(Scalar::zeta(3, 1)), Some(m), None))),
        (2usize..=6).prop_map(|n| (Family::F3, params(None, None, Some(n)))),
        (1usize..=4).prop_map(|m| (Family::F4, params(None, Some(m), None))),
    ]
}

proptest! {
    #[test]
    fn rewriting_is_confluent((family, p) in family_params(), w in word()) {
        let pres = PresentedAlgebra::new(family, p).unwrap();
        prop_assert_eq!(pres.normal_form_with(&w, Rewrite::Leftmost), pres.normal_form_with(&w, Rewrite::Rightmost));
    }
}

#[test]
fn polynomials() {
    let coeffs = |v, m, l| combi_poly(v, m, l).unwrap().coeffs.into_iter().collect::<Vec<_>>();
    assert_eq!(coeffs(CombiVariant::H1, 2, 1), vec![(0, 1), (1, 1)]);
    assert_eq!(coeffs(CombiVariant::H1, 3, 2), vec![(0, 1), (1, 1), (2, 1)]);
    assert_eq!(coeffs(CombiVariant::H2, 3, 2), vec![(0, 1), (1, 1), (2, 1)]);
    assert_eq!(coeffs(CombiVariant::H3, 3, 2), vec![(0, 1), (1, 1), (2, 1)]);
    for m in 2..=8 {
        assert!(check_h_identities(m), "m={m}");
    }
}

#[test]
fn vanishing_criterion_matches_root_order() {
    for m in 2..=8usize {
        for n in [m as u32, 2 * m as u32] {
            for k in 0..n as i64 {
                let z = Scalar::zeta(n, k);
                let r = check_vanishing_criterion(m, &z).unwrap();
                assert!(r.agrees, "m={m} z=ζ_{n}^{k}");
                assert_eq!(r.all_vanish, z.primitive_root_order() == Some(m as u64));
            }
        }
        let r = check_vanishing_criterion(m, &Scalar::from_int(1, 2)).unwrap();
        assert!(r.agrees && !r.all_vanish && r.witness_l.is_some());
    }
}

fn diag(d: &[Scalar]) -> Matrix {
    let n = d.iter().map(|s| s.order()).max().unwrap();
    let mut k = Matrix::zeros(n, 4, 4);
    for (i, s) in d.iter().enumerate() {
        k.set(i, i, s.embed(n));
    }
    k
}

fn all_pass(r: &CaseIReport) -> bool {
    match r {
        CaseIReport::Evaluated { all_pass, .. } => *all_pass,
        CaseIReport::NotApplicable { .. } => false,
    }
}

#[test]
fn case_i_constraints() {
    let m1 = Scalar::from_int(1, -1);
    let i = Scalar::imag_unit(4);
    // m = 2: βγ = −1 and a = −β²
    let k = diag(&[m1.clone(), i.clone(), i.clone(), m1.clone()]);
    assert!(all_pass(&check_case_i_constraints(&k, Family::F2, 2, &Scalar::one(1))));
    // m = 3 with β = ζ₃, γ = 1, a = β³ = 1
    let z3 = Scalar::zeta(3, 1);
    let k3 = diag(&[m1.clone(), z3.clone(), Scalar::one(1), m1.clone()]);
    assert!(all_pass(&check_case_i_constraints(&k3, Family::F2, 3, &Scalar::one(1))));

    // each clause perturbed on its own
    assert!(!all_pass(&check_case_i_constraints(&k, Family::F3, 2, &Scalar::one(1))));
    assert!(!all_pass(&check_case_i_constraints(&diag(&[m1.clone(), i.clone(), i.clone(), Scalar::one(1)]), Family::F2, 2, &Scalar::one(1))));
    assert!(!all_pass(&check_case_i_constraints(&k, Family::F2, 2, &Scalar::from_int(1, 2))));
    let k_bad_root = diag(&[m1.clone(), i.clone(), -&i, m1.clone()]);
    match check_case_i_constraints(&k_bad_root, Family::F2, 2, &Scalar::one(1)) {
        CaseIReport::Evaluated { primitive_root, a_relation, all_pass, .. } => {
            assert!(!primitive_root && a_relation && !all_pass)
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn dependent_entries_are_reported() {
    let e = example(&ExampleName::D8Star).unwrap();
    let (c, x) = e.k_data.clone().unwrap();
    let u = x.get(0, 0).clone();
    let xx = MatrixOverAlgebra::new(2, 1, vec![u.clone(), u]).unwrap();
    assert!(matches!(solve_k(&e.h, &c, &xx), Err(HopfError::DependentEntries)));
}

#[test]
fn k_matrices_of_catalog_entries() {
    let m1 = Scalar::from_int(1, -1);
    for name in [ExampleName::D8Star, ExampleName::Q8Star] {
        let e = example(&name).unwrap();
        let (c, x) = e.k_data.clone().unwrap();
        let k = solve_k(&e.h, &c, &x).unwrap();
        assert_eq!(k, diag(&[m1.clone(), m1.clone(), m1.clone(), m1.clone()]), "{name}");
    }
    let e = example(&ExampleName::H8).unwrap();
    let (c, x) = e.k_data.clone().unwrap();
    let k = solve_k(&e.h, &c, &x).unwrap();
    let i = Scalar::imag_unit(4);
    let h = |p: i64, imag: bool| if imag { &Scalar::from_frac(1, p, 2) * &i } else { Scalar::from_frac(1, p, 2) };
    let want = [
        [h(-1, false), h(1, true), h(-1, true), h(1, false)],
        [h(-1, true), h(-1, false), h(-1, false), h(-1, true)],
        [h(1, true), h(-1, false), h(-1, false), h(1, true)],
        [h(1, false), h(1, true), h(-1, true), h(-1, false)],
    ];
    for (r, row) in want.iter().enumerate() {
        for (s, v) in row.iter().enumerate() {
            assert_eq!(k.get(r, s), v, "K[{r}][{s}]");
        }
    }
    assert!(matches!(check_case_i_constraints(&k, Family::F2, 1, &m1), CaseIReport::NotApplicable { .. }));
}
