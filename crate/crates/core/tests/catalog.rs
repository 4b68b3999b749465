use hopfscope::bosonize::{
    bosonize, braided_coproduct, check_braided_coproduct, radford_projection, simple_tensor, verify_yd,
};
use hopfscope::catalog::{default_names, example, kac_paljutkin, ExampleName, DISCREPANCY};
use hopfscope::coradical::coradical;
use hopfscope::linalg::Subspace;
use hopfscope::tamefrob::{solve_k, Family};
use hopfscope::tensorcore::{tensor_add, verify_axioms, HopfData, Level, Tensor2};
use hopfscope::Scalar;

fn idx(h: &HopfData, label: &str) -> usize {
    h.labels().iter().position(|l| l == label).unwrap_or_else(|| panic!("no basis element {label}"))
}

fn sum(parts: &[(Scalar, Tensor2)]) -> Tensor2 {
    let mut out = Tensor2::new();
    for (c, t) in parts {
        for (k, v) in t {
            tensor_add(&mut out, *k, c * v);
        }
    }
    out
}

#[test]
fn catalog_dimensions_and_axioms() {
    let dims = [8, 16, 16, 32, 32, 64];
    for (name, d) in default_names().into_iter().zip(dims) {
        let e = example(&name).unwrap();
        assert_eq!(e.h.dim(), d, "{name}");
        assert_eq!(e.name, name.to_string());
        let r = verify_axioms(&e.h, Level::Hopf, false).unwrap();
        assert!(r.all_pass(), "{name}: {:?}", r.failed());
        assert!(verify_yd(&e.yd).all_pass(), "{name}");
        assert_eq!(bosonize(&e.yd).unwrap(), e.h, "{name}");
    }
}

#[test]
fn h8_is_kac_paljutkin_up_to_splitting() {
    let e = example(&ExampleName::H8).unwrap();
    let kp = kac_paljutkin().unwrap();
    assert!(verify_axioms(&kp, Level::Hopf, false).unwrap().all_pass());
    assert_eq!(e.splitting.small, kp.with_level(Level::Hopf).unwrap());
}

#[test]
fn identifications_and_notes() {
    let c = example(&ExampleName::CaseII { n: 2 }).unwrap();
    assert_eq!((c.identification.family, c.identification.m), (Family::F2, 1));
    assert!(c.notes.is_empty());
    for name in [ExampleName::D8Star, ExampleName::Q8Star] {
        let e = example(&name).unwrap();
        assert_eq!((e.identification.family, e.identification.m), (Family::F2, 1));
        assert_eq!(e.identification.a, Scalar::from_int(1, -1));
        assert!(e.notes.iter().any(|n| n == DISCREPANCY), "{name}");
    }
}

#[test]
fn radford_projection_properties() {
    for name in default_names() {
        let e = example(&name).unwrap();
        let (pi, rh) = radford_projection(&e.splitting).unwrap();
        assert_eq!(pi.compose(&pi).unwrap(), pi);
        assert_eq!(pi.rank(), rh.rank());
        assert_eq!(rh.rank() * e.splitting.small.dim(), e.h.dim(), "{name}");
        assert_eq!(pi.rank() * coradical(&e.h).unwrap().rank(), e.h.dim(), "{name}");
        assert!(check_braided_coproduct(&e.splitting, &pi, &rh).unwrap(), "{name}");
    }
}

#[test]
fn case_ii_2_braided_structure() {
    let e = example(&ExampleName::CaseII { n: 2 }).unwrap();
    let h = &e.h;
    let (pi, rh) = radford_projection(&e.splitting).unwrap();
    assert_eq!(pi.rank(), 4);
    let want = Subspace::coordinate(h.n(), 8, &["1", "u", "v", "uv"].map(|l| idx(h, l)));
    assert_eq!(rh, want);
    let one = h.unit_elem().unwrap();
    let u = h.basis_vec(idx(h, "u"));
    let got = braided_coproduct(&e.splitting, &pi, &rh, &u).unwrap();
    let one_s = Scalar::one(h.n());
    assert_eq!(got, sum(&[(one_s.clone(), simple_tensor(&one, &u)), (one_s, simple_tensor(&u, &one))]));
}

#[test]
fn braided_coproduct_of_uv() {
    for name in [ExampleName::D8Star, ExampleName::Q8Star] {
        let e = example(&name).unwrap();
        let h = &e.h;
        let (c, x) = e.k_data.clone().unwrap();
        let k = solve_k(h, &c, &x).unwrap();
        let alpha3 = k.get(2, 2).clone();
        assert_eq!(alpha3, Scalar::from_int(1, -1));
        let (pi, rh) = radford_projection(&e.splitting).unwrap();
        let (u, v) = (&e.generators[0], &e.generators[1]);
        let uv = h.mul(u, v);
        let one = h.unit_elem().unwrap();
        let o = Scalar::one(h.n());
        let want = sum(&[
            (o.clone(), simple_tensor(&one, &uv)),
            (o.clone(), simple_tensor(&uv, &one)),
            (alpha3, simple_tensor(v, u)),
            (o, simple_tensor(u, v)),
        ]);
        assert_eq!(braided_coproduct(&e.splitting, &pi, &rh, &uv).unwrap(), want, "{name}");
    }
}

#[test]
fn deterministic_across_thread_counts() {
    let build = |threads: usize| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| {
            default_names()
                .into_iter()
                .map(|name| {
                    let e = example(&name).unwrap();
                    let exhaustive = e.h.dim() <= 16;
                    let r = verify_axioms(&e.h, Level::Hopf, exhaustive).unwrap();
                    (e.h.to_json().to_string(), serde_json::to_string(&r).unwrap())
                })
                .collect::<Vec<_>>()
        })
    };
    assert_eq!(build(1), build(4));
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(example(&ExampleName::CaseII { n: 3 }).is_err());
    assert!(example(&ExampleName::CaseII { n: 0 }).is_err());
}
