mod common;

use common::synthetic_quiver;
use hopfscope::basedring::{
    arrow_divisibility, build_based_ring, build_based_ring_from_blocks, generation_connectivity, one_s_of, verify_arrow_consistency,
    verify_based_axioms, verify_fpequation, ArrowConsistency, BasedRingTable,
};
use hopfscope::catalog::{default_names, example, ExampleName};
use hopfscope::coradical::coradical;
use hopfscope::quiver::link_quiver;
use hopfscope::tensorcore::{cyclic_labels, cyclic_table, group_algebra};
use serde_json::json;

fn table_of(name: &ExampleName) -> (BasedRingTable, hopfscope::quiver::LinkQuiver) {
    let e = example(name).unwrap();
    let q = link_quiver(&e.h, e.simple_hints.as_deref()).unwrap();
    let t = build_based_ring_from_blocks(&e.h, &coradical(&e.h).unwrap(), &q.blocks).unwrap();
    (t, q)
}

/// The fusion rules of `(kD₈)*`: a Klein four-group of invertibles and one
/// 2-dimensional simple `C` absorbing them.
fn kd8_dual_oracle() -> BasedRingTable {
    let labels = ["1", "X", "Y", "XY", "C"];
    let mut alpha = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            alpha.push(json!([i, j, i ^ j, 1]));
        }
        alpha.push(json!([i, 4, 4, 1]));
        alpha.push(json!([4, i, 4, 1]));
    }
    for t in 0..4 {
        alpha.push(json!([4, 4, t, 1]));
    }
    let simples: Vec<_> = labels
        .iter()
        .map(|l| json!({"label": l, "comatrix_dim": if *l == "C" { 2 } else { 1 }}))
        .collect();
    BasedRingTable::from_json(&json!({"simples": simples, "alpha": alpha, "involution": [0, 1, 2, 3, 4], "unit": 0}))
        .unwrap()
}

#[test]
fn kd8_dual_table_matches_oracle() {
    let oracle = kd8_dual_oracle();
    assert!(verify_based_axioms(&oracle).all_pass());
    let (t, _) = table_of(&ExampleName::D8Star);
    assert!(verify_based_axioms(&t).all_pass(), "{:?}", verify_based_axioms(&t).failed());
    assert_eq!(t.len(), 5);
    let c = t.index_of("C").unwrap();
    let labels: Vec<&str> = t.product(c, c).into_iter().map(|(k, m)| {
        assert_eq!(m, 1);
        t.simples[k].label.as_str()
    }).collect();
    assert_eq!(labels, vec!["1", "X", "Y", "XY"]);
    assert_eq!(t, oracle);
}

#[test]
fn catalog_tables_satisfy_fpequation() {
    for name in default_names() {
        let (t, q) = table_of(&name);
        assert!(verify_based_axioms(&t).all_pass(), "{name}");
        for k in 0..t.len() {
            assert!(verify_fpequation(&t, k), "{name} k={k}");
        }
        let one_s = one_s_of(&q).unwrap();
        assert_eq!(generation_connectivity(&t, &one_s), q.is_connected(), "{name}");
    }
}

#[test]
fn arrow_consistency() {
    for name in [ExampleName::D8Star, ExampleName::Q8Star, ExampleName::H8] {
        let (t, q) = table_of(&name);
        match verify_arrow_consistency(&t, &q) {
            ArrowConsistency::Evaluated { all_pass, .. } => assert!(all_pass, "{name}"),
            other => panic!("{name}: {other:?}"),
        }
    }
    let (t, q) = table_of(&ExampleName::CaseII { n: 2 });
    assert!(matches!(verify_arrow_consistency(&t, &q), ArrowConsistency::NotApplicable { .. }));
}

#[test]
fn cyclic_groups_give_group_rings() {
    for n in 2..=6usize {
        let h = group_algebra(1, cyclic_labels(n, "g"), &cyclic_table(n)).unwrap();
        let t = build_based_ring(&h, None).unwrap();
        assert!(verify_based_axioms(&t).all_pass());
        for i in 0..n {
            for j in 0..n {
                let li = t.index_of(&h.labels()[i]).unwrap();
                let lj = t.index_of(&h.labels()[j]).unwrap();
                let lk = t.index_of(&h.labels()[(i + j) % n]).unwrap();
                assert_eq!(t.product(li, lj), vec![(lk, 1)]);
            }
        }
    }
}

#[test]
fn perturbed_tables_fail() {
    let mut t = kd8_dual_oracle();
    t.alpha[4][4][4] = 1;
    let r = verify_based_axioms(&t);
    assert!(!r.all_pass());
    assert!(r.failed().contains(&"dimension_count"));
    assert!(!(0..t.len()).all(|k| verify_fpequation(&t, k)));

    let mut t = kd8_dual_oracle();
    t.alpha[1][2][3] = 0;
    t.alpha[1][2][0] = 1;
    assert!(!verify_based_axioms(&t).all_pass());
}

#[test]
fn arrow_divisibility_on_catalog_and_synthetic_quivers() {
    for name in default_names() {
        let (_, q) = table_of(&name);
        let d = arrow_divisibility(&q).unwrap();
        assert!(d.all_divide, "{name}: {d:?}");
    }
    let (_, q) = table_of(&ExampleName::CaseII { n: 2 });
    assert_eq!(arrow_divisibility(&q).unwrap().into_counts, vec![(0, 2), (1, 2)]);

    // two arrows into the unit, one into vertex 1
    let q = synthetic_quiver(3, &[((1, 0), 1), ((2, 0), 1), ((0, 1), 1)]);
    let d = arrow_divisibility(&q).unwrap();
    assert_eq!(d.into_unit, 2);
    assert_eq!(d.failures, vec![1]);
    assert!(!d.all_divide);
}
