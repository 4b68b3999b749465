//! Worked biproducts `R × H′` with `R` a tame Frobenius quotient on two
//! braided-primitive generators: the group examples over `kℤₙ` and
//! `kℤₙ₁ ⊗ kℤₙ₂`, the duals `(kD₈)*`, `(kQ₈)*`, and the Kac–Paljutkin
//! algebra `H₈`. Every structure constant is generated from generator data.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bosonize::{biproduct_splitting, bosonize, verify_yd, RadfordSplitting, YDData};
use crate::error::{HopfError, Result};
use crate::exactfield::{primitive_root_order, Scalar};
use crate::linalg::{axpy, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::tamefrob::{Family, PresentedAlgebra, TameParams};
use crate::tensorcore::{
    cyclic_labels, cyclic_table, dual_group_algebra, group_algebra, tensor_add, HopfData, Level, MatrixOverAlgebra,
    Tables, Tensor2,
};

/// Which example to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleName {
    /// `kℤₙ` with `g` acting by `−1` on both generators (`n` even).
    CaseII { n: usize },
    /// `kℤₙ₁ ⊗ kℤₙ₂` with diagonal braiding; `αβ` a primitive `m`-th root.
    CaseIII { n1: usize, n2: usize, alpha: Scalar, beta: Scalar, m: usize },
    D8Star,
    Q8Star,
    H8,
}

impl ExampleName {
    pub fn case_iii_default() -> ExampleName {
        ExampleName::CaseIII { n1: 2, n2: 2, alpha: Scalar::from_int(1, -1), beta: Scalar::from_int(1, -1), m: 1 }
    }
}

impl fmt::Display for ExampleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExampleName::CaseII { n } => write!(f, "case-ii({n})"),
            ExampleName::CaseIII { n1, n2, alpha, beta, m } => write!(f, "case-iii({n1},{n2},{alpha},{beta},{m})"),
            ExampleName::D8Star => write!(f, "d8star"),
            ExampleName::Q8Star => write!(f, "q8star"),
            ExampleName::H8 => write!(f, "h8"),
        }
    }
}

/// The tame quotient `R` is isomorphic to (as an algebra).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub family: Family,
    pub m: usize,
    pub a: Scalar,
}

/// A fully built example with everything needed downstream.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub h: HopfData,
    pub yd: YDData,
    pub splitting: RadfordSplitting,
    /// `grading[k]` = span of `r # h` with `r` a word of length `k`.
    pub grading: Vec<Subspace>,
    /// Labelled simple subcoalgebras of the coradical, when known in closed form.
    pub simple_hints: Option<Vec<(Option<String>, Subspace)>>,
    /// A basic multiplicative `C` and a column `X` primitive w.r.t. `(C, 1)`.
    pub k_data: Option<(MatrixOverAlgebra, MatrixOverAlgebra)>,
    /// `u # 1`, `v # 1`: the degree-one generators.
    pub generators: Vec<Vector>,
    pub identification: Identification,
    pub notes: Vec<String>,
}

pub const DISCREPANCY: &str = "the commonly quoted identification uses F2(m=2,a=-1) (dim R = 8); \
the defining relations u^2=v^2=0, uv+vu=0 give F2(m=1,a=-1) (dim R = 4)";

/// Generator data for `R = k⟨x,y⟩/I` as an object of `^{H′}_{H′}YD`.
struct RSpec {
    hp: HopfData,
    algebra: PresentedAlgebra,
    /// Display names of the letters `x`, `y`.
    letters: [&'static str; 2],
    /// `act[h][j]` = coefficients of `b_h · letter_j` on `(x, y)`.
    act: Vec<[[Scalar; 2]; 2]>,
    /// `coact[j]` = `δ(letter_j)` as `(h, k, s)`: `Σ s · b_h ⊗ letter_k`.
    coact: [Vec<(usize, usize, Scalar)>; 2],
}

struct BuiltR {
    yd: YDData,
    /// Word (in `x`, `y`) of each basis element of `R`.
    words: Vec<String>,
}

fn letter_index(c: char) -> usize {
    if c == 'x' {
        0
    } else {
        1
    }
}

fn build_r(spec: RSpec) -> Result<BuiltR> {
    let hp = spec.hp;
    let n = hp.n();
    let alg = &spec.algebra;
    let rename = |w: &str| -> String {
        if w.is_empty() {
            "1".into()
        } else {
            w.chars().map(|c| spec.letters[letter_index(c)]).collect()
        }
    };
    let mut words: Vec<String> = alg.nf_basis.clone();
    words.sort_by_key(|w| (w.len(), rename(w)));
    let index: BTreeMap<&str, usize> = words.iter().enumerate().map(|(i, w)| (w.as_str(), i)).collect();
    let dr = words.len();
    let dh = hp.dim();
    let labels: Vec<String> = words.iter().map(|w| rename(w)).collect();
    let word_vec = |w: &str| -> Result<Vector> {
        let mut v = zero_vec(n, dr);
        for (nw, c) in alg.normal_form(w) {
            v[index[nw.as_str()]] += &crate::linalg::embed_into(&c, n)?;
        }
        Ok(v)
    };
    let mut mult = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            for (k, s) in crate::linalg::to_sparse(&word_vec(&format!("{u}{v}"))?) {
                mult.push((i, j, k, s));
            }
        }
    }
    let unit = unit_vec(n, dr, 0);
    let counit = unit_vec(n, dr, 0);
    let r_alg = HopfData::from_tables(
        n,
        labels.clone(),
        Level::Algebra,
        Tables { unit: Some(unit.clone()), mult: Some(mult.clone()), ..Default::default() },
    )?;
    let letter_vec = |j: usize| -> Vector { unit_vec(n, dr, index[if j == 0 { "x" } else { "y" }]) };

    // action on words: h·(l w) = Σ (h₁·l)(h₂·w)
    let mut memo: BTreeMap<(usize, String), Vector> = BTreeMap::new();
    fn act_word(
        h: usize,
        w: &str,
        hp: &HopfData,
        r: &HopfData,
        act: &[[[Scalar; 2]; 2]],
        letter_vec: &dyn Fn(usize) -> Vector,
        memo: &mut BTreeMap<(usize, String), Vector>,
    ) -> Vector {
        if let Some(v) = memo.get(&(h, w.to_string())) {
            return v.clone();
        }
        let out = if w.is_empty() {
            crate::linalg::scale_vec(&r.unit_elem().expect("unit"), &hp.counit_of(&hp.basis_vec(h)))
        } else {
            let l = letter_index(w.chars().next().expect("nonempty"));
            let rest = &w[1..];
            let mut out = r.zero();
            for (h1, h2, c) in hp.comul_basis(h).to_vec() {
                let mut hl = r.zero();
                for k in 0..2 {
                    axpy(&mut hl, &act[h1][l][k], &letter_vec(k));
                }
                let hw = act_word(h2, rest, hp, r, act, letter_vec, memo);
                axpy(&mut out, &c, &r.mul(&hl, &hw));
            }
            out
        };
        memo.insert((h, w.to_string()), out.clone());
        out
    }
    let mut action = Vec::new();
    for h in 0..dh {
        let cols: Vec<Vector> =
            words.iter().map(|w| act_word(h, w, &hp, &r_alg, &spec.act, &letter_vec, &mut memo)).collect();
        action.push(Matrix::from_columns(n, dr, &cols));
    }

    // coaction on words: δ(l w) = δ(l) δ(w), componentwise in H′ ⊗ R
    let mut coaction: Vec<Vec<(usize, usize, Scalar)>> = Vec::with_capacity(dr);
    let mut coact_of: BTreeMap<String, Tensor2> = BTreeMap::new();
    let hp_unit = hp.unit_elem()?;
    let unit_tensor: Tensor2 =
        crate::linalg::to_sparse(&hp_unit).into_iter().map(|(h, s)| ((h, 0usize), s)).collect();
    let mut by_len: Vec<&String> = words.iter().collect();
    by_len.sort_by_key(|w| w.len());
    for w in &by_len {
        if w.is_empty() {
            coact_of.insert(String::new(), unit_tensor.clone());
            continue;
        }
        let l = letter_index(w.chars().next().expect("nonempty"));
        let rest = coact_of[&w[1..]].clone();
        let mut t = Tensor2::new();
        for (h1, k, s) in &spec.coact[l] {
            for ((h2, r2), s2) in &rest {
                let hh = hp.mul(&hp.basis_vec(*h1), &hp.basis_vec(*h2));
                let rr = r_alg.mul(&letter_vec(*k), &r_alg.basis_vec(*r2));
                for (a, x) in hh.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in rr.iter().enumerate() {
                        if !y.is_zero() {
                            tensor_add(&mut t, (a, b), &(&(s * s2) * x) * y);
                        }
                    }
                }
            }
        }
        coact_of.insert((*w).clone(), t);
    }
    for w in &words {
        coaction.push(coact_of[w].iter().map(|((h, r), s)| (*h, *r, s.clone())).collect());
    }

    // braided coproduct: letters primitive, extended multiplicatively in R ⊗̲ R
    let partial = YDData { r: r_alg, hp: hp.clone(), action: action.clone(), coaction: coaction.clone() };
    let mut delta: BTreeMap<String, Tensor2> = BTreeMap::new();
    let mut comult = Vec::new();
    for w in &by_len {
        let t = if w.is_empty() {
            [((0usize, 0usize), Scalar::one(n))].into_iter().collect()
        } else {
            let li = index[&w[..1]];
            let dl: Tensor2 = [((0usize, li), Scalar::one(n)), ((li, 0usize), Scalar::one(n))].into_iter().collect();
            partial.braided_mul(&dl, &delta[&w[1..]])
        };
        delta.insert((*w).clone(), t);
    }
    for (i, w) in words.iter().enumerate() {
        for ((a, b), s) in &delta[w] {
            comult.push((i, *a, *b, s.clone()));
        }
    }
    let r = HopfData::from_tables(
        n,
        labels,
        Level::Bialgebra,
        Tables { unit: Some(unit), counit: Some(counit), mult: Some(mult), comult: Some(comult), antipode: None },
    )?;
    Ok(BuiltR { yd: YDData { r, hp, action, coaction }, words })
}

fn assemble(
    name: String,
    spec: RSpec,
    identification: Identification,
    simple_hints: &dyn Fn(&HopfData, &YDData) -> Option<Vec<(Option<String>, Subspace)>>,
    k_data: &dyn Fn(&HopfData, &YDData) -> Option<(MatrixOverAlgebra, MatrixOverAlgebra)>,
    notes: Vec<String>,
) -> Result<CatalogEntry> {
    let built = build_r(spec)?;
    let report = verify_yd(&built.yd);
    if !report.all_pass() {
        return Err(HopfError::YDViolation(format!("{name}: {}", report.failed().join(", "))));
    }
    let h = bosonize(&built.yd)?;
    let (n, dr, dh) = (h.n(), built.yd.r.dim(), built.yd.hp.dim());
    let max_len = built.words.iter().map(|w| w.len()).max().unwrap_or(0);
    let grading = (0..=max_len)
        .map(|k| {
            let rows = built
                .words
                .iter()
                .enumerate()
                .filter(|(_, w)| w.len() == k)
                .flat_map(|(i, _)| (0..dh).map(move |b| unit_vec(n, dr * dh, i * dh + b)))
                .collect();
            Subspace::new(dr * dh, rows)
        })
        .collect();
    let mut generators: Vec<Vector> = ["x", "y"]
        .iter()
        .map(|l| r_elem(&h, &built.yd, built.words.iter().position(|w| w == l).expect("letters are normal words")))
        .collect();
    // list `u` before `v` (letters are x ↦ v, y ↦ u for the two-letter names)
    if built.yd.r.labels()[1] == "u" {
        generators.reverse();
    }
    let hints = simple_hints(&h, &built.yd);
    let kd = k_data(&h, &built.yd);
    let splitting = biproduct_splitting(h.clone(), &built.yd)?;
    Ok(CatalogEntry {
        name,
        h,
        yd: built.yd,
        splitting,
        grading,
        simple_hints: hints,
        k_data: kd,
        generators,
        identification,
        notes,
    })
}

fn f2(m: usize, a: Scalar) -> Result<PresentedAlgebra> {
    PresentedAlgebra::new(Family::F2, TameParams { a: Some(a), m: Some(m), n: None })
}

fn diag(a: Scalar, b: Scalar, n: u32) -> [[Scalar; 2]; 2] {
    [[a, Scalar::zero(n)], [Scalar::zero(n), b]]
}

fn no_hints(_: &HopfData, _: &YDData) -> Option<Vec<(Option<String>, Subspace)>> {
    None
}

/// `r_i # 1` for a basis element of `R`.
fn r_elem(h: &HopfData, d: &YDData, i: usize) -> Vector {
    let (n, dr, dh) = (h.n(), d.r.dim(), d.hp.dim());
    let one = d.hp.unit_elem().expect("H' has a unit");
    crate::bosonize::smash_vec(n, dr, dh, &unit_vec(n, dr, i), &one)
}

/// `1 # h` for an element of `H′`.
fn embed_small(h: &HopfData, d: &YDData, v: &[Scalar]) -> Vector {
    let mut out = zero_vec(h.n(), h.dim());
    out[..d.hp.dim()].clone_from_slice(v);
    out
}

/// The `(C, X)` pair with `δ(x_i) = Σ_j c_ij ⊗ x_j`, when the coaction
/// matrix of the generators is read off directly.
fn coaction_k_data(h: &HopfData, d: &YDData, gens: &[Vector; 2], coact: &[Vec<(usize, usize, Scalar)>; 2]) -> (MatrixOverAlgebra, MatrixOverAlgebra) {
    let n = h.n();
    let dh = d.hp.dim();
    let mut c = vec![zero_vec(n, dh); 4];
    for (i, row) in coact.iter().enumerate() {
        for (hh, k, s) in row {
            c[2 * i + k][*hh] += s;
        }
    }
    let c: Vec<Vector> = c.iter().map(|v| embed_small(h, d, v)).collect();
    (
        MatrixOverAlgebra::new(2, 2, c).expect("2x2"),
        MatrixOverAlgebra::new(2, 1, gens.to_vec()).expect("2x1"),
    )
}

/// Build an example by name.
pub fn example(name: &ExampleName) -> Result<CatalogEntry> {
    match name {
        ExampleName::CaseII { n } => case_ii(*n),
        ExampleName::CaseIII { n1, n2, alpha, beta, m } => case_iii(*n1, *n2, alpha, beta, *m),
        ExampleName::D8Star => dihedral_like(false),
        ExampleName::Q8Star => dihedral_like(true),
        ExampleName::H8 => h8(),
    }
}

fn case_ii(n: usize) -> Result<CatalogEntry> {
    if n < 2 || n % 2 == 1 {
        return Err(HopfError::BadParams(format!("case-ii needs an even n ≥ 2, got {n}")));
    }
    let c = 1;
    let hp = group_algebra(c, cyclic_labels(n, "g"), &cyclic_table(n))?;
    let act = (0..n)
        .map(|k| {
            let s = Scalar::from_int(c, if k % 2 == 0 { 1 } else { -1 });
            diag(s.clone(), s, c)
        })
        .collect();
    let one = Scalar::one(c);
    let coact = [vec![(1, 0, one.clone())], vec![(1, 1, one)]];
    let spec = RSpec { hp, algebra: f2(1, Scalar::from_int(c, -1))?, letters: ["v", "u"], act, coact };
    assemble(
        format!("case-ii({n})"),
        spec,
        Identification { family: Family::F2, m: 1, a: Scalar::from_int(1, -1) },
        &no_hints,
        &|_, _| None,
        Vec::new(),
    )
}

fn scalar_order(s: &Scalar) -> Option<u64> {
    (1..=4096u64).find(|&k| s.pow(k as i64).is_one())
}

fn case_iii(n1: usize, n2: usize, alpha: &Scalar, beta: &Scalar, m: usize) -> Result<CatalogEntry> {
    let bad = |msg: String| Err(HopfError::BadParams(msg));
    if n1 < 2 || n2 < 2 || n1 % 2 == 1 || n2 % 2 == 1 {
        return bad(format!("case-iii needs even n1, n2 ≥ 2, got {n1}, {n2}"));
    }
    if !alpha.pow(n1 as i64).is_one() || !beta.pow(n2 as i64).is_one() {
        return bad("case-iii needs alpha^n1 = beta^n2 = 1".into());
    }
    if m == 0 || primitive_root_order(&(alpha * beta)) != Some(m as u64) {
        return bad(format!("alpha*beta is not a primitive {m}-th root of unity"));
    }
    if num_integer::lcm(n1, n2) % m != 0 {
        return bad(format!("m = {m} does not divide lcm({n1}, {n2})"));
    }
    let (oa, ob) = (scalar_order(alpha), scalar_order(beta));
    let (oa, ob) = match (oa, ob) {
        (Some(a), Some(b)) => (a, b),
        _ => return bad("alpha and beta must be roots of unity".into()),
    };
    let mut c = num_integer::lcm(oa, ob) as u32;
    if c % 4 == 2 {
        c /= 2;
    }
    let c = c.max(1);
    let ga = group_algebra(c, cyclic_labels(n1, "g"), &cyclic_table(n1))?;
    let gb = group_algebra(c, cyclic_labels(n2, "h"), &cyclic_table(n2))?;
    let hp = ga.tensor_product(&gb)?;
    let sign = |k: usize| Scalar::from_int(c, if k % 2 == 0 { 1 } else { -1 });
    let (alpha, beta) = (alpha.embed(c), beta.embed(c));
    // letters: x ↦ v, y ↦ u
    let act = (0..n1 * n2)
        .map(|x| {
            let (a, b) = (x / n2, x % n2);
            let on_v = &alpha.pow(a as i64) * &sign(b);
            let on_u = &sign(a) * &beta.pow(b as i64);
            diag(on_v, on_u, c)
        })
        .collect();
    let one = Scalar::one(c);
    let (g, h) = (n2, 1);
    let coact = [vec![(h, 0, one.clone())], vec![(g, 1, one)]];
    let sgn = if m % 2 == 1 { Scalar::one(c) } else { Scalar::from_int(c, -1) };
    let a = &sgn * &beta.pow(m as i64);
    let spec = RSpec { hp, algebra: f2(m, a.clone())?, letters: ["v", "u"], act, coact };
    assemble(
        format!("case-iii({n1},{n2},{alpha},{beta},{m})"),
        spec,
        Identification { family: Family::F2, m, a },
        &no_hints,
        &|_, _| None,
        Vec::new(),
    )
}

/// `D₈` (or `Q₈` when `quaternion`) on pairs `(p, q)`, `p ∈ ℤ₄`, `q ∈ ℤ₂`,
/// index `2p + q`.
fn order8_table(quaternion: bool) -> Vec<Vec<usize>> {
    (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (p1, q1, p2, q2) = (a / 2, a % 2, b / 2, b % 2);
                    let twist = if quaternion { 2 * q1 * (p2 + q2) } else { 2 * q1 * p2 };
                    2 * ((p1 + p2 + twist) % 4) + (q1 + q2) % 2
                })
                .collect()
        })
        .collect()
}

fn dihedral_like(quaternion: bool) -> Result<CatalogEntry> {
    let c = 4;
    let labels: Vec<String> = (0..8).map(|x| format!("{}{}", x / 2, x % 2)).collect();
    let hp = dual_group_algebra(c, &labels, &order8_table(quaternion))?;
    let e = |p: usize, q: usize| 2 * p + q;
    let one = Scalar::one(c);
    let i = Scalar::imag_unit(c);
    let mi = -&i;
    let m1 = Scalar::from_int(c, -1);
    // e_σ · w = δ_{σ, r²} w
    let act = (0..8)
        .map(|s| if s == e(2, 0) { diag(one.clone(), one.clone(), c) } else { diag(Scalar::zero(c), Scalar::zero(c), c) })
        .collect();
    let (c11, c12, c21, c22) = if quaternion {
        (
            vec![(e(0, 0), one.clone()), (e(0, 1), i.clone()), (e(2, 0), m1.clone()), (e(2, 1), mi.clone())],
            vec![(e(1, 0), i.clone()), (e(1, 1), one.clone()), (e(3, 0), mi.clone()), (e(3, 1), m1.clone())],
            vec![(e(1, 0), i.clone()), (e(1, 1), m1.clone()), (e(3, 0), mi.clone()), (e(3, 1), one.clone())],
            vec![(e(0, 0), one.clone()), (e(0, 1), mi.clone()), (e(2, 0), m1.clone()), (e(2, 1), i.clone())],
        )
    } else {
        (
            vec![(e(0, 0), one.clone()), (e(1, 0), mi.clone()), (e(2, 0), m1.clone()), (e(3, 0), i.clone())],
            vec![(e(0, 1), i.clone()), (e(1, 1), one.clone()), (e(2, 1), mi.clone()), (e(3, 1), m1.clone())],
            vec![(e(0, 1), mi.clone()), (e(1, 1), one.clone()), (e(2, 1), i.clone()), (e(3, 1), m1.clone())],
            vec![(e(0, 0), one.clone()), (e(1, 0), i.clone()), (e(2, 0), m1.clone()), (e(3, 0), mi.clone())],
        )
    };
    // letters: x ↦ v (index 1 of the pair), y ↦ u (index 0); δ(u) = c11⊗u + c12⊗v
    let with = |t: &[(usize, Scalar)], k: usize| t.iter().map(|(h, s)| (*h, k, s.clone())).collect::<Vec<_>>();
    let cu: Vec<_> = with(&c11, 1).into_iter().chain(with(&c12, 0)).collect();
    let cv: Vec<_> = with(&c21, 1).into_iter().chain(with(&c22, 0)).collect();
    let coact = [cv, cu];
    let spec = RSpec { hp, algebra: f2(1, m1.clone())?, letters: ["v", "u"], act, coact };
    let name = if quaternion { "q8star" } else { "d8star" };
    let cmat = [c11, c12, c21, c22];
    let hints = move |h: &HopfData, d: &YDData| -> Option<Vec<(Option<String>, Subspace)>> {
        let n = h.n();
        let vec_of = |t: &[(usize, Scalar)]| {
            let mut v = zero_vec(n, d.hp.dim());
            for (k, s) in t {
                v[*k] += s;
            }
            v
        };
        let cs: Vec<Vector> = cmat.iter().map(|t| vec_of(t)).collect();
        let hp = &d.hp;
        let sub = |a: &Vector, b: &Vector| -> Vector {
            let mut v = a.clone();
            axpy(&mut v, &Scalar::from_int(n, -1), b);
            v
        };
        let x = sub(&hp.mul(&cs[0], &cs[0]), &hp.mul(&cs[1], &cs[1]));
        let y = sub(&hp.mul(&cs[0], &cs[3]), &hp.mul(&cs[1], &cs[2]));
        let xy = hp.mul(&x, &y);
        let one = hp.unit_elem().ok()?;
        let line = |v: &Vector| Subspace::new(h.dim(), vec![embed_small(h, d, v)]);
        let cspace = Subspace::new(h.dim(), cs.iter().map(|v| embed_small(h, d, v)).collect());
        let hints = vec![
            (Some("1".to_string()), line(&one)),
            (Some("X".to_string()), line(&x)),
            (Some("Y".to_string()), line(&y)),
            (Some("XY".to_string()), line(&xy)),
            (Some("C".to_string()), cspace),
        ];
        // a hint is used only if every line is spanned by a group-like
        let grouplike = |v: &Vector| {
            let t = hp.comul(v);
            t == crate::bosonize::simple_tensor(v, v) && hp.counit_of(v).is_one()
        };
        let distinct = Subspace::new(hp.dim(), vec![one.clone(), x.clone(), y.clone(), xy.clone()]).rank() == 4;
        (distinct && [&one, &x, &y, &xy].iter().all(|v| grouplike(v))).then_some(hints)
    };
    let k_data = |h: &HopfData, d: &YDData| -> Option<(MatrixOverAlgebra, MatrixOverAlgebra)> {
        let u = r_elem(h, d, d.r.labels().iter().position(|l| l == "u")?);
        let v = r_elem(h, d, d.r.labels().iter().position(|l| l == "v")?);
        // coaction rows indexed by (u, v); R letters are x ↦ v, y ↦ u
        let ui = d.r.labels().iter().position(|l| l == "u")?;
        let vi = d.r.labels().iter().position(|l| l == "v")?;
        let to_pair = |row: &[(usize, usize, Scalar)]| -> Vec<(usize, usize, Scalar)> {
            row.iter().map(|(hh, k, s)| (*hh, if *k == ui { 0 } else if *k == vi { 1 } else { 2 }, s.clone())).collect()
        };
        let rows = [to_pair(&d.coaction[ui]), to_pair(&d.coaction[vi])];
        Some(coaction_k_data(h, d, &[u, v], &rows))
    };
    assemble(
        name.to_string(),
        spec,
        Identification { family: Family::F2, m: 1, a: Scalar::from_int(1, -1) },
        &hints,
        &k_data,
        vec![DISCREPANCY.to_string()],
    )
}

/// `H₈` on `{1, x, y, xy, z, xz, yz, xyz}`, index `g + 4e` for `g z^e`.
pub fn kac_paljutkin() -> Result<HopfData> {
    let c = 4;
    let labels: Vec<String> = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"].iter().map(|s| s.to_string()).collect();
    let half = Scalar::from_frac(c, 1, 2);
    let swap = |g: usize| ((g & 1) << 1) | ((g >> 1) & 1);
    let mult = |a: usize, b: usize| -> Vector {
        let (g1, e1, g2, e2) = (a % 4, a / 4, b % 4, b / 4);
        let g = g1 ^ if e1 == 1 { swap(g2) } else { g2 };
        let mut v = zero_vec(c, 8);
        match e1 + e2 {
            0 | 1 => v[g + 4 * (e1 + e2)] = Scalar::one(c),
            _ => {
                // z² = ½(1 + x + y − xy)
                for (k, s) in [(0, 1), (1, 1), (2, 1), (3, -1)] {
                    v[g ^ k] += &(&half * &Scalar::from_int(c, s));
                }
            }
        }
        v
    };
    let comult = |a: usize| -> Tensor2 {
        let (g, e) = (a % 4, a / 4);
        let mut t = Tensor2::new();
        if e == 0 {
            t.insert((g, g), Scalar::one(c));
        } else {
            // Δz = ½(z⊗z + z⊗xz + yz⊗z − yz⊗xz)
            for (l, r, s) in [(0, 0, 1), (0, 1, 1), (2, 0, 1), (2, 1, -1)] {
                tensor_add(&mut t, ((g ^ l) + 4, (g ^ r) + 4), &half * &Scalar::from_int(c, s));
            }
        }
        t
    };
    let antipode = |a: usize| -> Vector {
        let (g, e) = (a % 4, a / 4);
        unit_vec(c, 8, if e == 0 { g } else { swap(g) + 4 })
    };
    HopfData::from_fns(c, labels, Level::Hopf, Some(&mult), Some(unit_vec(c, 8, 0)), Some(&comult), Some(vec![Scalar::one(c); 8]), Some(&antipode))
}

fn h8() -> Result<CatalogEntry> {
    let c = 4;
    let hp = kac_paljutkin()?;
    let one = Scalar::one(c);
    let i = Scalar::imag_unit(c);
    let m1 = Scalar::from_int(c, -1);
    // x, y act by diag(1, −1), z by diag(−1, i) on (p1, p2)
    let rho_g = |g: usize| -> [Scalar; 2] {
        let s = if g == 1 || g == 2 { m1.clone() } else { one.clone() };
        [one.clone(), s]
    };
    let act = (0..8)
        .map(|a| {
            let (g, e) = (a % 4, a / 4);
            // x, y each contribute diag(1, −1); xy contributes the identity
            let mut d = rho_g(g);
            if e == 1 {
                d = [-&d[0], &d[1] * &i];
            }
            let [p, q] = d;
            diag(p, q, c)
        })
        .collect();
    // f_ij = ¼(1 + (−1)^i x)(1 + (−1)^j y), then multiply by z
    let quarter = Scalar::from_frac(c, 1, 4);
    let f = |ii: usize, jj: usize| -> Vector {
        let sx = if ii == 0 { 1 } else { -1 };
        let sy = if jj == 0 { 1 } else { -1 };
        let mut v = zero_vec(c, 8);
        v[0] += &quarter;
        v[1] += &(&quarter * &Scalar::from_int(c, sx));
        v[2] += &(&quarter * &Scalar::from_int(c, sy));
        v[3] += &(&quarter * &Scalar::from_int(c, sx * sy));
        v
    };
    let z = unit_vec(c, 8, 4);
    let lin = |a: &Vector, s: &Scalar, b: &Vector| -> Vector {
        let mut v = a.clone();
        axpy(&mut v, s, b);
        hp.mul(&v, &z)
    };
    let mi = -&i;
    let d11 = lin(&f(0, 0), &mi, &f(1, 1));
    let d12 = lin(&f(1, 0), &i, &f(0, 1));
    let d21 = lin(&f(1, 0), &mi, &f(0, 1));
    let d22 = lin(&f(0, 0), &i, &f(1, 1));
    let row = |v: &Vector, k: usize| -> Vec<(usize, usize, Scalar)> {
        crate::linalg::to_sparse(v).into_iter().map(|(h, s)| (h, k, s)).collect()
    };
    let coact = [row(&d11, 0).into_iter().chain(row(&d12, 1)).collect(), row(&d21, 0).into_iter().chain(row(&d22, 1)).collect()];
    let spec = RSpec { hp, algebra: f2(2, m1.clone())?, letters: ["p1", "p2"], act, coact };
    let hints = |h: &HopfData, d: &YDData| -> Option<Vec<(Option<String>, Subspace)>> {
        let n = h.n();
        let line = |k: usize| Subspace::new(h.dim(), vec![embed_small(h, d, &unit_vec(n, 8, k))]);
        let cspace = Subspace::new(h.dim(), (4..8).map(|k| embed_small(h, d, &unit_vec(n, 8, k))).collect());
        Some(vec![
            (Some("1".into()), line(0)),
            (Some("x".into()), line(1)),
            (Some("y".into()), line(2)),
            (Some("xy".into()), line(3)),
            (Some("C".into()), cspace),
        ])
    };
    let k_data = |h: &HopfData, d: &YDData| -> Option<(MatrixOverAlgebra, MatrixOverAlgebra)> {
        let n = h.n();
        let p1 = r_elem(h, d, d.r.labels().iter().position(|l| l == "p1")?);
        let p2 = r_elem(h, d, d.r.labels().iter().position(|l| l == "p2")?);
        let i = Scalar::imag_unit(n);
        let mut u = p1.clone();
        axpy(&mut u, &Scalar::one(n), &p2);
        let mut v = scale_by(&p1, &-&i);
        axpy(&mut v, &i, &p2);
        let half = Scalar::from_frac(n, 1, 2);
        let comb = |a: usize, b: usize, s: i64| -> Vector {
            let mut w = zero_vec(n, 8);
            w[a] += &half;
            w[b] += &(&half * &Scalar::from_int(n, s));
            embed_small(h, d, &w)
        };
        // z=4, xz=5, yz=6, xyz=7
        let cm = vec![comb(4, 6, 1), comb(4, 6, -1), comb(5, 7, -1), comb(5, 7, 1)];
        Some((MatrixOverAlgebra::new(2, 2, cm).ok()?, MatrixOverAlgebra::new(2, 1, vec![u, v]).ok()?))
    };
    assemble(
        "h8".into(),
        spec,
        Identification { family: Family::F2, m: 2, a: Scalar::from_int(1, -1) },
        &hints,
        &k_data,
        Vec::new(),
    )
}

fn scale_by(v: &[Scalar], s: &Scalar) -> Vector {
    crate::linalg::scale_vec(v, s)
}

/// All catalog names with default parameters, in a fixed order.
pub fn default_names() -> Vec<ExampleName> {
    vec![
        ExampleName::CaseII { n: 2 },
        ExampleName::CaseII { n: 4 },
        ExampleName::case_iii_default(),
        ExampleName::D8Star,
        ExampleName::Q8Star,
        ExampleName::H8,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorcore::verify_axioms;

    #[test]
    fn case_ii_2_builds() {
        let e = example(&ExampleName::CaseII { n: 2 }).unwrap();
        assert_eq!(e.h.dim(), 8);
        assert_eq!(e.yd.r.labels(), ["1", "u", "v", "uv"]);
        assert!(verify_axioms(&e.h, Level::Hopf, false).unwrap().all_pass());
    }

    #[test]
    fn kac_paljutkin_is_hopf() {
        let h = kac_paljutkin().unwrap();
        let rep = verify_axioms(&h, Level::Hopf, true).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failed());
    }

    #[test]
    fn bad_params() {
        assert!(example(&ExampleName::CaseII { n: 3 }).is_err());
        let e = ExampleName::CaseIII { n1: 2, n2: 2, alpha: Scalar::one(1), beta: Scalar::from_int(1, -1), m: 1 };
        assert!(example(&e).is_err());
    }
}
