//! Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};

use common::{connected_multigraphs, dual_numbers_coalgebra, shape_oracle, synthetic_quiver};
use hopfscope::basedring::{
    build_based_ring_from_blocks, generation_connectivity, one_s_of, verify_arrow_consistency, verify_based_axioms,
    verify_fpequation, ArrowConsistency, BasedRingTable,
};
use hopfscope::bosonize::{braided_coproduct, check_braided_coproduct, radford_projection, simple_tensor};
use hopfscope::catalog::{default_names, example, ExampleName, DISCREPANCY};
use hopfscope::coradical::{coradical, coradical_filtration};
use hopfscope::linalg::{Matrix, Subspace};
use hopfscope::quiver::{
    classify_graph, corepresentation_type, link_quiver, verdict_for_quiver, RepKind, RepTypeOptions, TameCase,
};
use hopfscope::tamefrob::{
    build_tame_quotient, check_case_i_constraints, check_frobenius, check_h_identities, check_vanishing_criterion,
    solve_k, CaseIReport, Family, TameParams,
};
use hopfscope::tensorcore::{tensor_add, verify_axioms, Level, Tensor2};
use hopfscope::Scalar;
use serde_json::json;

fn ranks(f: &[Subspace]) -> Vec<usize> {
    f.iter().map(Subspace::rank).collect()
}

fn criterion_1() {
    let dims = [8, 16, 16, 32, 32, 64];
    for (name, d) in default_names().into_iter().zip(dims) {
        let e = example(&name).unwrap();
        assert_eq!(e.h.dim(), d, "{name}");
        let r = verify_axioms(&e.h, Level::Hopf, false).unwrap();
        assert!(r.all_pass(), "{name}: {:?}", r.failed());
    }
}

fn criterion_2() {
    let want = [
        (ExampleName::CaseII { n: 2 }, vec![2, 6, 8]),
        (ExampleName::H8, vec![8, 24, 40, 56, 64]),
    ];
    for (name, dims) in want {
        let e = example(&name).unwrap();
        let f = coradical_filtration(&e.h).unwrap();
        assert_eq!(ranks(&f), dims, "{name}");
        let mut acc = Subspace::zero(e.h.dim());
        for (k, piece) in e.grading.iter().enumerate() {
            acc = acc.sum(piece);
            assert_eq!(acc, f[k], "{name} degree {k}");
        }
        assert_eq!(e.grading.len(), f.len(), "{name}");
    }
}

fn criterion_3() {
    let want = [
        (ExampleName::CaseII { n: 2 }, TameCase::I),
        (ExampleName::CaseII { n: 4 }, TameCase::I),
        (ExampleName::case_iii_default(), TameCase::I),
        (ExampleName::D8Star, TameCase::II),
        (ExampleName::Q8Star, TameCase::II),
        (ExampleName::H8, TameCase::II),
    ];
    for (name, case) in want {
        let e = example(&name).unwrap();
        let opts = RepTypeOptions { dual_chevalley: false, hints: e.simple_hints.as_deref() };
        let (v, _) = corepresentation_type(&e.h, &opts).unwrap();
        assert_eq!(v.kind, RepKind::TameCandidate(case), "{name}");
        assert_eq!(v.evidence.separated_consistent, Some(true), "{name}");
    }
    let (v, _) = corepresentation_type(&dual_numbers_coalgebra(), &RepTypeOptions::default()).unwrap();
    assert_eq!(v.kind, RepKind::Finite, "dual numbers");
    let single_loop = verdict_for_quiver(&synthetic_quiver(1, &[((0, 0), 1)])).unwrap();
    assert_eq!(single_loop.kind, RepKind::Finite, "single loop");
    let three_in = verdict_for_quiver(&synthetic_quiver(4, &[((1, 0), 1), ((2, 0), 1), ((3, 0), 1)])).unwrap();
    assert_eq!(three_in.kind, RepKind::Wild, "three arrows into the unit");
}

fn criterion_4() {
    let graphs = connected_multigraphs(5, 6);
    assert!(!graphs.is_empty());
    for g in &graphs {
        assert_eq!(classify_graph(g), shape_oracle(g), "edges {:?} on {} vertices", g.edges, g.labels.len());
    }
}

fn criterion_5() {
    for m in 2..=8usize {
        assert!(check_h_identities(m), "H identities m={m}");
        for n in [m as u32, 2 * m as u32] {
            for k in 0..n as i64 {
                let z = Scalar::zeta(n, k);
                let r = check_vanishing_criterion(m, &z).unwrap();
                assert!(r.agrees, "m={m} ζ_{n}^{k}");
                assert_eq!(r.all_vanish, z.primitive_root_order() == Some(m as u64), "m={m} ζ_{n}^{k}");
            }
        }
    }
}

fn frobenius(family: Family, p: TameParams, dim: usize) {
    let (h, pres) = build_tame_quotient(family, p.clone()).unwrap();
    assert_eq!(h.dim(), dim, "{family} {p:?}");
    let r = check_frobenius(&h, &pres).unwrap();
    assert!(r.local && r.socle_dim == 1 && r.pairing_nondegenerate, "{family} {p:?}: {r:?}");
}

fn criterion_6() {
    let p = |a: Option<Scalar>, m, n| TameParams { a, m, n };
    for a in [Scalar::from_int(1, -1), Scalar::from_int(1, 2), Scalar::zeta(3, 1)] {
        frobenius(Family::F1, p(Some(a.clone()), None, None), 4);
        for m in 1..=5 {
            frobenius(Family::F2, p(Some(a.clone()), Some(m), None), 4 * m);
        }
    }
    for n in 2..=6 {
        frobenius(Family::F3, p(None, None, Some(n)), 2 * n);
    }
    for m in 1..=5 {
        frobenius(Family::F4, p(None, Some(m), None), 4 * m + 2);
    }
}

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
    let simples: Vec<_> =
        labels.iter().map(|l| json!({"label": l, "comatrix_dim": if *l == "C" { 2 } else { 1 }})).collect();
    BasedRingTable::from_json(&json!({"simples": simples, "alpha": alpha, "involution": [0, 1, 2, 3, 4], "unit": 0}))
        .unwrap()
}

fn criterion_7() {
    let oracle = kd8_dual_oracle();
    assert!(verify_based_axioms(&oracle).all_pass(), "oracle axioms");
    for name in default_names() {
        let e = example(&name).unwrap();
        let q = link_quiver(&e.h, e.simple_hints.as_deref()).unwrap();
        let t = build_based_ring_from_blocks(&e.h, &coradical(&e.h).unwrap(), &q.blocks).unwrap();
        assert!(verify_based_axioms(&t).all_pass(), "{name}");
        for k in 0..t.len() {
            assert!(verify_fpequation(&t, k), "{name} fpequation k={k}");
        }
        assert_eq!(generation_connectivity(&t, &one_s_of(&q).unwrap()), q.is_connected(), "{name}");
        if name == ExampleName::D8Star {
            assert_eq!(t, oracle);
            let c = t.index_of("C").unwrap();
            let cc: Vec<(&str, u64)> =
                t.product(c, c).into_iter().map(|(k, m)| (t.simples[k].label.as_str(), m)).collect();
            assert_eq!(cc, vec![("1", 1), ("X", 1), ("Y", 1), ("XY", 1)]);
        }
        if name == ExampleName::H8 {
            match verify_arrow_consistency(&t, &q) {
                ArrowConsistency::Evaluated { all_pass, .. } => assert!(all_pass, "h8 arrow consistency"),
                other => panic!("h8 arrow consistency: {other:?}"),
            }
        }
    }
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

fn criterion_8() {
    for name in default_names() {
        let e = example(&name).unwrap();
        let (pi, rh) = radford_projection(&e.splitting).unwrap();
        assert_eq!(pi.compose(&pi).unwrap(), pi, "{name} idempotent");
        assert_eq!(pi.rank() * coradical(&e.h).unwrap().rank(), e.h.dim(), "{name}");
        assert!(check_braided_coproduct(&e.splitting, &pi, &rh).unwrap(), "{name} coassociativity");
    }
    for name in [ExampleName::D8Star, ExampleName::Q8Star] {
        let e = example(&name).unwrap();
        let h = &e.h;
        let (c, x) = e.k_data.clone().unwrap();
        let alpha3 = solve_k(h, &c, &x).unwrap().get(2, 2).clone();
        assert_eq!(alpha3, Scalar::from_int(1, -1), "{name}");
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

fn diag(d: &[Scalar]) -> Matrix {
    let n = d.iter().map(|s| s.order()).max().unwrap();
    let mut k = Matrix::zeros(n, 4, 4);
    for (i, s) in d.iter().enumerate() {
        k.set(i, i, s.embed(n));
    }
    k
}

fn case_i_pass(r: &CaseIReport) -> bool {
    matches!(r, CaseIReport::Evaluated { all_pass: true, .. })
}

fn criterion_9() {
    let m1 = Scalar::from_int(1, -1);
    for name in [ExampleName::D8Star, ExampleName::Q8Star] {
        let e = example(&name).unwrap();
        let (c, x) = e.k_data.clone().unwrap();
        assert_eq!(solve_k(&e.h, &c, &x).unwrap(), diag(&[m1.clone(), m1.clone(), m1.clone(), m1.clone()]), "{name}");
        assert!(e.notes.iter().any(|n| n == DISCREPANCY), "{name} notes");
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
            assert_eq!(k.get(r, s), v, "h8 K[{r}][{s}]");
        }
    }

    let one = Scalar::one(1);
    let good = diag(&[m1.clone(), i.clone(), i.clone(), m1.clone()]);
    assert!(case_i_pass(&check_case_i_constraints(&good, Family::F2, 2, &one)), "unperturbed");
    assert!(!case_i_pass(&check_case_i_constraints(&good, Family::F3, 2, &one)), "family");
    let bad_corner = diag(&[m1.clone(), i.clone(), i.clone(), one.clone()]);
    assert!(!case_i_pass(&check_case_i_constraints(&bad_corner, Family::F2, 2, &one)), "corner");
    assert!(!case_i_pass(&check_case_i_constraints(&good, Family::F2, 2, &Scalar::from_int(1, 2))), "a relation");
    let bad_root = diag(&[m1.clone(), i.clone(), -&i, m1]);
    assert!(!case_i_pass(&check_case_i_constraints(&bad_root, Family::F2, 2, &one)), "primitive root");
}

fn hopfscope(dir: &Path, args: &[&str], threads: usize) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfscope"))
        .current_dir(dir)
        .args(args)
        .env("HOPFSCOPE_THREADS", threads.to_string())
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

/// Every report and emitted file, concatenated in a fixed order.
fn all_reports(threads: usize) -> Vec<u8> {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut bytes = Vec::new();
    let examples: [&[&str]; 6] = [
        &["--name", "case-ii", "--n", "2"],
        &["--name", "case-ii", "--n", "4"],
        &["--name", "case-iii"],
        &["--name", "d8star"],
        &["--name", "q8star"],
        &["--name", "h8"],
    ];
    for (i, ex) in examples.iter().enumerate() {
        let emit = format!("h{i}.json");
        let mut args = vec!["example"];
        args.extend_from_slice(ex);
        args.extend_from_slice(&["--emit", &emit]);
        bytes.extend(hopfscope(d, &args, threads));
        bytes.extend(std::fs::read(d.join(&emit)).unwrap());
        for cmd in ["verify", "coradical", "rep-type", "based-ring"] {
            bytes.extend(hopfscope(d, &[cmd, &emit], threads));
        }
    }
    for name in ["d8star", "q8star", "h8"] {
        let out = hopfscope(d, &["solve-k", "--name", name], threads);
        if name != "h8" {
            let r: serde_json::Value = serde_json::from_slice(&out).unwrap();
            assert_eq!(r["result"]["example"]["notes"], json!([DISCREPANCY]), "{name} solve-k note");
        }
        bytes.extend(out);
    }
    bytes.extend(hopfscope(d, &["tame-ideal", "--family", "F2", "--m", "3", "--a", "-1", "--emit", "a.json"], threads));
    bytes.extend(std::fs::read(d.join("a.json")).unwrap());
    bytes.extend(hopfscope(d, &["combi", "--m", "6", "--z", "z12^2"], threads));
    bytes
}

fn criterion_10() {
    let first = all_reports(1);
    assert!(first == all_reports(1), "repeated run differs");
    assert!(first == all_reports(4), "HOPFSCOPE_THREADS=4 differs");
    assert!(first == all_reports(2), "HOPFSCOPE_THREADS=2 differs");
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 10] = [
        ("axioms hold on every catalog entry", criterion_1),
        ("coradical filtration dimensions match the grading", criterion_2),
        ("corepresentation-type verdicts", criterion_3),
        ("Tits-form classifier agrees with the shape oracle", criterion_4),
        ("H1 = H2 = H3 and the vanishing criterion", criterion_5),
        ("tame local Frobenius quotients", criterion_6),
        ("based ring tables", criterion_7),
        ("Radford projection and braided coproduct", criterion_8),
        ("solve_k and the case-I constraints", criterion_9),
        ("reports are byte-identical across runs and thread counts", criterion_10),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(()) => println!("criterion {:>2}: PASS  {title}", i + 1),
            Err(e) => {
                failures += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL  {title}: {msg}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
