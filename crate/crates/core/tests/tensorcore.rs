use hopfscope::catalog::{example, ExampleName};
use hopfscope::linalg::Matrix;
use hopfscope::tensorcore::{
    algebra_generators, convolve, dualize, matrix_odot, unit_counit_map, verify_axioms, verify_matrix_kind,
    CheckStatus, HopfData, Level, MatrixKind, MatrixOverAlgebra, OdotVariant,
};
use hopfscope::Scalar;

fn idx(h: &HopfData, label: &str) -> usize {
    h.labels().iter().position(|l| l == label).unwrap_or_else(|| panic!("no basis element {label}"))
}

#[test]
fn double_dual_of_h8_is_identical() {
    let h = example(&ExampleName::H8).unwrap().h;
    assert_eq!(dualize(&dualize(&h)), h);
    assert_eq!(HopfData::from_json(&h.to_json()).unwrap(), h);
}

#[test]
fn id_convolved_with_antipode_is_unit_counit() {
    for name in [ExampleName::CaseII { n: 2 }, ExampleName::D8Star] {
        let h = example(&name).unwrap().h;
        let id = Matrix::identity(h.n(), h.dim());
        let s = h.antipode_matrix().unwrap().clone();
        let ue = unit_counit_map(&h).unwrap();
        assert_eq!(convolve(&id, &s, &h).unwrap(), ue, "{name}");
        assert_eq!(convolve(&s, &id, &h).unwrap(), ue, "{name}");
    }
}

#[test]
fn perturbed_catalog_entry_fails_with_witness() {
    let h = example(&ExampleName::CaseII { n: 2 }).unwrap().h;
    let mut t = h.to_tables();
    let (u, v) = (idx(&h, "u"), idx(&h, "v"));
    t.mult.as_mut().unwrap().push((u, v, 0, Scalar::one(h.n())));
    let bad = HopfData::from_tables(h.n(), h.labels().to_vec(), Level::Hopf, t).unwrap();
    let quick = verify_axioms(&bad, Level::Hopf, false).unwrap();
    assert!(!quick.all_pass());
    assert!(quick.failed().contains(&"associativity"));
    let full = verify_axioms(&bad, Level::Hopf, true).unwrap();
    let assoc = full.checks.iter().find(|c| c.name == "associativity").unwrap();
    assert_eq!(assoc.status, CheckStatus::Fail);
    assert_eq!(assoc.witness.as_ref(), assoc.witnesses.first());
    assert!(assoc.witnesses.len() > 1);
    // quick mode reports the same first witness as exhaustive mode
    let q = quick.checks.iter().find(|c| c.name == "associativity").unwrap();
    assert_eq!(q.witness, assoc.witness);
}

#[test]
fn generators_are_small() {
    let h = example(&ExampleName::H8).unwrap().h;
    let g = algebra_generators(&h).unwrap();
    assert!(g.len() < 8, "{g:?}");
    let c = example(&ExampleName::CaseII { n: 2 }).unwrap().h;
    let gens: Vec<&str> = algebra_generators(&c).unwrap().into_iter().map(|i| c.labels()[i].as_str()).collect();
    assert_eq!(gens, vec!["g", "u", "v"]);
}

#[test]
fn u_is_skew_primitive_in_case_ii() {
    let h = example(&ExampleName::CaseII { n: 2 }).unwrap().h;
    let c = MatrixOverAlgebra::new(1, 1, vec![h.basis_vec(idx(&h, "g"))]).unwrap();
    let d = MatrixOverAlgebra::new(1, 1, vec![h.unit_elem().unwrap()]).unwrap();
    let x = MatrixOverAlgebra::new(1, 1, vec![h.basis_vec(idx(&h, "u"))]).unwrap();
    let h0 = hopfscope::coradical::coradical(&h).unwrap();
    let r = verify_matrix_kind(&h, &x, MatrixKind::Primitive(&c, &d), Some(&h0)).unwrap();
    assert!(r.holds);
    assert_eq!(r.nontrivial, Some(true));
    assert!(!verify_matrix_kind(&h, &x, MatrixKind::Primitive(&d, &d), None).unwrap().holds);
}

#[test]
fn c_odot_prime_x_is_minus_x_odot_c_on_d8star() {
    let e = example(&ExampleName::D8Star).unwrap();
    let (c, x) = e.k_data.clone().unwrap();
    let h = &e.h;
    let left = matrix_odot(&c, &x, OdotVariant::OdotPrime, h).unwrap();
    let right = matrix_odot(&x, &c, OdotVariant::Odot, h).unwrap();
    assert_eq!((left.rows, left.cols), (4, 2));
    for (l, r) in left.entries().iter().zip(right.entries()) {
        let neg: Vec<Scalar> = r.iter().map(|s| -s).collect();
        assert_eq!(l, &neg);
    }
}

#[test]
fn multiplicativity_survives_odot_prime() {
    let e = example(&ExampleName::D8Star).unwrap();
    let (c, _) = e.k_data.clone().unwrap();
    let h = &e.h;
    assert!(verify_matrix_kind(h, &c, MatrixKind::BasicMultiplicative, None).unwrap().holds);
    for variant in [OdotVariant::Odot, OdotVariant::OdotPrime] {
        let cc = matrix_odot(&c, &c, variant, h).unwrap();
        assert_eq!((cc.rows, cc.cols), (4, 4));
        assert!(verify_matrix_kind(h, &cc, MatrixKind::Multiplicative, None).unwrap().holds, "{variant:?}");
    }
}

#[test]
fn odot_with_one_is_identity_and_shapes_multiply() {
    let h = example(&ExampleName::CaseII { n: 2 }).unwrap().h;
    let one = MatrixOverAlgebra::new(1, 1, vec![h.unit_elem().unwrap()]).unwrap();
    let a = MatrixOverAlgebra::new(2, 2, (0..4).map(|i| h.basis_vec(i)).collect()).unwrap();
    assert_eq!(matrix_odot(&one, &a, OdotVariant::Odot, &h).unwrap(), a);
    assert_eq!(matrix_odot(&one, &a, OdotVariant::OdotPrime, &h).unwrap(), a);
    let col = MatrixOverAlgebra::new(2, 1, vec![h.basis_vec(2), h.basis_vec(4)]).unwrap();
    let p = matrix_odot(&col, &a, OdotVariant::Odot, &h).unwrap();
    assert_eq!((p.rows, p.cols), (4, 2));
}
