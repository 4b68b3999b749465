//! The four tame local graded Frobenius quotients of `k⟨x, y⟩`, their normal
//! forms, the polynomials H₁, H₂, H₃, and the K-matrix relation between a
//! basic multiplicative 2×2 matrix and a primitive column.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{HopfError, Result};
use crate::exactfield::{primitive_root_order, Scalar};
use crate::linalg::{relations, solve, to_sparse, Matrix, Vector};
use crate::tensorcore::{matrix_odot, HopfData, Level, MatrixOverAlgebra, OdotVariant, Tables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for Family {
    type Err = HopfError;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Ok(Family::F1),
            "F2" => Ok(Family::F2),
            "F3" => Ok(Family::F3),
            "F4" => Ok(Family::F4),
            _ => Err(HopfError::BadParams(format!("unknown family `{s}`"))),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameters; unused ones are ignored by the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameParams {
    /// `a` for F1 and F2.
    pub a: Option<Scalar>,
    /// `m` for F2 and F4.
    pub m: Option<usize>,
    /// `n` for F3.
    pub n: Option<usize>,
}

/// One rewriting rule `lhs → coef · rhs` (or `lhs → 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: String,
    pub rhs: Option<(Scalar, String)>,
}

/// A tame quotient `k⟨x,y⟩/I` with a complete rewriting system for `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedAlgebra {
    pub family: Family,
    pub params: TameParams,
    pub rules: Vec<Rule>,
    /// Irreducible words, by length then lexicographically; `""` is the unit.
    pub nf_basis: Vec<String>,
    conductor: u32,
}

fn rep(w: &str, k: usize) -> String {
    w.repeat(k)
}

/// Linear combination of words.
pub type WordComb = BTreeMap<String, Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

impl PresentedAlgebra {
    pub fn new(family: Family, params: TameParams) -> Result<PresentedAlgebra> {
        let need_m = |p: &TameParams| p.m.filter(|&m| m >= 1).ok_or_else(|| HopfError::BadParams(format!("{family} needs m ≥ 1")));
        let need_a = |p: &TameParams| -> Result<Scalar> {
            match &p.a {
                Some(a) if !a.is_zero() => Ok(a.clone()),
                _ => Err(HopfError::BadParams(format!("{family} needs a ≠ 0"))),
            }
        };
        let conductor = params.a.as_ref().map(|a| a.order()).unwrap_or(1);
        let one = Scalar::one(conductor);
        let r = |l: String, rhs: Option<(Scalar, String)>| Rule { lhs: l, rhs };
        let rules = match family {
            Family::F1 => {
                let a = need_a(&params)?;
                vec![
                    r("yy".into(), Some((one.clone(), "xx".into()))),
                    r("yx".into(), Some((a, "xx".into()))),
                    r("xy".into(), None),
                    r("xxx".into(), None),
                ]
            }
            Family::F2 => {
                let a = need_a(&params)?;
                let m = need_m(&params)?;
                vec![r("xx".into(), None), r("yy".into(), None), r(rep("xy", m), Some((a, rep("yx", m))))]
            }
            Family::F3 => {
                let n = params.n.filter(|&n| n >= 2).ok_or_else(|| HopfError::BadParams("F3 needs n ≥ 2".into()))?;
                vec![
                    r("xy".into(), None),
                    r("yx".into(), None),
                    r("y".repeat(n), Some((one.clone(), "x".repeat(n)))),
                    r("x".repeat(n + 1), None),
                ]
            }
            Family::F4 => {
                let m = need_m(&params)?;
                vec![
                    r("xx".into(), None),
                    r("yy".into(), None),
                    r(format!("{}y", rep("yx", m)), Some((one.clone(), format!("{}x", rep("xy", m))))),
                    r(rep("xy", m + 1), None),
                    r(rep("yx", m + 1), None),
                ]
            }
        };
        let mut p = PresentedAlgebra { family, params, rules, nf_basis: Vec::new(), conductor };
        p.nf_basis = p.irreducible_words()?;
        Ok(p)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    fn is_irreducible(&self, w: &str) -> bool {
        self.rules.iter().all(|r| !w.contains(r.lhs.as_str()))
    }

    fn irreducible_words(&self) -> Result<Vec<String>> {
        let mut out = vec![String::new()];
        let mut layer = vec![String::new()];
        for _ in 0..64 {
            let next: Vec<String> = layer
                .iter()
                .flat_map(|w| ["x", "y"].into_iter().map(move |c| format!("{w}{c}")))
                .filter(|w| self.is_irreducible(w))
                .collect();
            if next.is_empty() {
                return Ok(out);
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        Err(HopfError::BadParams("quotient is not finite dimensional at desk scale".into()))
    }

    /// Reduce a single word with the given strategy.
    pub fn normal_form_with(&self, word: &str, strategy: Strategy) -> WordComb {
        let mut todo: WordComb = BTreeMap::new();
        todo.insert(word.to_string(), Scalar::one(self.conductor));
        let mut done: WordComb = BTreeMap::new();
        while let Some((w, c)) = todo.pop_first() {
            let hit = self
                .rules
                .iter()
                .filter_map(|r| {
                    let pos = match strategy {
                        Strategy::Leftmost => w.find(r.lhs.as_str()),
                        Strategy::Rightmost => w.rfind(r.lhs.as_str()),
                    };
                    pos.map(|p| (p, r))
                })
                .min_by_key(|(p, _)| match strategy {
                    Strategy::Leftmost => *p as isize,
                    Strategy::Rightmost => -(*p as isize),
                });
            match hit {
                None => crate::tensorcore::tensor_add(&mut done, w, c),
                Some((p, rule)) => {
                    if let Some((k, rhs)) = &rule.rhs {
                        let nw = format!("{}{}{}", &w[..p], rhs, &w[p + rule.lhs.len()..]);
                        crate::tensorcore::tensor_add(&mut todo, nw, &c * k);
                    }
                }
            }
        }
        done
    }

    pub fn normal_form(&self, word: &str) -> WordComb {
        self.normal_form_with(word, Strategy::Leftmost)
    }

    /// The unique longest normal word (spans the socle).
    pub fn top_word(&self) -> &str {
        self.nf_basis.last().expect("nonempty basis")
    }

    pub fn dim(&self) -> usize {
        self.nf_basis.len()
    }
}

fn word_label(w: &str) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.into()
    }
}

/// Structure constants of the quotient on its normal-form basis.
pub fn build_tame_quotient(family: Family, params: TameParams) -> Result<(HopfData, PresentedAlgebra)> {
    let p = PresentedAlgebra::new(family, params)?;
    let n = p.conductor;
    let index: BTreeMap<&str, usize> = p.nf_basis.iter().enumerate().map(|(i, w)| (w.as_str(), i)).collect();
    let d = p.dim();
    let mut mult = Vec::new();
    for (i, u) in p.nf_basis.iter().enumerate() {
        for (j, v) in p.nf_basis.iter().enumerate() {
            for (w, c) in p.normal_form(&format!("{u}{v}")) {
                mult.push((i, j, index[w.as_str()], c));
            }
        }
    }
    let unit = crate::linalg::unit_vec(n, d, 0);
    let labels = p.nf_basis.iter().map(|w| word_label(w)).collect();
    let h = HopfData::from_tables(n, labels, Level::Algebra, Tables { unit: Some(unit), mult: Some(mult), ..Default::default() })?;
    Ok((h, p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub dim: usize,
    /// The radical is spanned by the non-unit words.
    pub local: bool,
    pub socle_dim: usize,
    pub pairing_nondegenerate: bool,
    pub top_word: String,
}

/// Local + Frobenius checks on a built quotient.
pub fn check_frobenius(a: &HopfData, p: &PresentedAlgebra) -> Result<FrobeniusReport> {
    let (n, d) = (a.n(), a.dim());
    let j = crate::coradical::jacobson_radical(a)?;
    let rad = crate::linalg::Subspace::coordinate(n, d, &(1..d).collect::<Vec<_>>());
    let local = j == rad;
    // socle: {z : b_i z = z b_i = 0 for every non-unit word b_i}
    let mut rows = Vec::new();
    for i in 1..d {
        for side in [true, false] {
            let cols: Vec<Vector> = (0..d)
                .map(|k| {
                    let (x, y) = (a.basis_vec(i), a.basis_vec(k));
                    if side {
                        a.mul(&x, &y)
                    } else {
                        a.mul(&y, &x)
                    }
                })
                .collect();
            let m = Matrix::from_columns(n, d, &cols);
            for r in 0..d {
                rows.push(m.row(r));
            }
        }
    }
    let socle = crate::linalg::kernel(&rows, d, n);
    let top = d - 1;
    let gram: Vec<Vector> =
        (0..d).map(|i| (0..d).map(|k| a.mul(&a.basis_vec(i), &a.basis_vec(k))[top].clone()).collect()).collect();
    let rank = Matrix::from_rows(n, d, &gram).rank();
    Ok(FrobeniusReport {
        dim: d,
        local,
        socle_dim: socle.len(),
        pairing_nondegenerate: rank == d,
        top_word: word_label(p.top_word()),
    })
}

// ---------------------------------------------------------------- polynomials

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombiVariant {
    H1,
    H2,
    H3,
}

impl std::str::FromStr for CombiVariant {
    type Err = HopfError;
    fn from_str(s: &str) -> Result<CombiVariant> {
        match s.to_ascii_uppercase().as_str() {
            "H1" => Ok(CombiVariant::H1),
            "H2" => Ok(CombiVariant::H2),
            "H3" => Ok(CombiVariant::H3),
            _ => Err(HopfError::BadParams(format!("unknown polynomial `{s}`"))),
        }
    }
}

/// Integer polynomial in `t`: exponent → nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CombiPolynomial {
    pub coeffs: BTreeMap<u32, i64>,
}

impl CombiPolynomial {
    fn add_term(&mut self, e: u32, c: i64) {
        let v = self.coeffs.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&e);
        }
    }

    fn add(&mut self, other: &CombiPolynomial, shift: u32) {
        for (&e, &c) in &other.coeffs {
            self.add_term(e + shift, c);
        }
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(t.order());
        for (&e, &c) in &self.coeffs {
            acc += &(&Scalar::from_int(t.order(), c) * &t.pow(e as i64));
        }
        acc
    }
}

impl fmt::Display for CombiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(e, c)| format!("{c}*t^{e}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Serialize for CombiPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Σ_{0≤m₁≤…≤m_l≤top} t^{Σ mᵢ}`.
fn h1(l: usize, top: usize) -> CombiPolynomial {
    let mut p = CombiPolynomial::default();
    fn rec(p: &mut CombiPolynomial, left: usize, lo: usize, top: usize, sum: u32) {
        if left == 0 {
            p.add_term(sum, 1);
            return;
        }
        for v in lo..=top {
            rec(p, left - 1, v, top, sum + v as u32);
        }
    }
    rec(&mut p, l, 0, top, 0);
    p
}

/// `Σ_{n₁+…+n_l ≤ bound} t^{Σ (l+1−i) nᵢ}`.
fn h2(l: usize, bound: usize) -> CombiPolynomial {
    let mut p = CombiPolynomial::default();
    fn rec(p: &mut CombiPolynomial, i: usize, l: usize, left: usize, weight: u32) {
        if i > l {
            p.add_term(weight, 1);
            return;
        }
        for v in 0..=left {
            rec(p, i + 1, l, left - v, weight + ((l + 1 - i) * v) as u32);
        }
    }
    rec(&mut p, 1, l, bound, 0);
    p
}

pub fn combi_poly(variant: CombiVariant, m: usize, l: usize) -> Result<CombiPolynomial> {
    if !(0 < l && l < m) {
        return Err(HopfError::BadParams(format!("need 0 < l < m, got m={m}, l={l}")));
    }
    Ok(match variant {
        CombiVariant::H1 => h1(l, m - l),
        CombiVariant::H2 => h2(l, m - l),
        CombiVariant::H3 => {
            // t^{m−l}·H₂(m−1, l−1) + H₂(m−1, l)
            let mut out = CombiPolynomial::default();
            out.add(&h2(l - 1, m - l), (m - l) as u32);
            out.add(&h2(l, m - l - 1), 0);
            out
        }
    })
}

/// H₁ = H₂ = H₃ for every `0 < l < m`.
pub fn check_h_identities(m: usize) -> bool {
    (1..m).into_par_iter().all(|l| {
        let a = combi_poly(CombiVariant::H1, m, l).expect("valid");
        a == combi_poly(CombiVariant::H2, m, l).expect("valid") && a == combi_poly(CombiVariant::H3, m, l).expect("valid")
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    /// H₁(m, l, z) = 0 for every 0 < l < m.
    pub all_vanish: bool,
    /// First `l` with H₁(m, l, z) ≠ 0.
    pub witness_l: Option<usize>,
    pub primitive_order: Option<u64>,
    /// `all_vanish` ⇔ z is a primitive m-th root of unity.
    pub agrees: bool,
}

pub fn check_vanishing_criterion(m: usize, z: &Scalar) -> Result<VanishingReport> {
    if m < 2 {
        return Err(HopfError::BadParams("need m ≥ 2".into()));
    }
    let witness_l = (1..m).find(|&l| !combi_poly(CombiVariant::H1, m, l).expect("valid").eval(z).is_zero());
    let all_vanish = witness_l.is_none();
    let order = primitive_root_order(z);
    Ok(VanishingReport { all_vanish, witness_l, primitive_order: order, agrees: all_vanish == (order == Some(m as u64)) })
}

// ---------------------------------------------------------------- K-matrix

/// The unique `K` with `C ⊙′ X = K (X ⊙ C)` for a 2×2 `C` and a 2×1 `X`.
pub fn solve_k(h: &HopfData, c: &MatrixOverAlgebra, x: &MatrixOverAlgebra) -> Result<Matrix> {
    if (c.rows, c.cols) != (2, 2) || (x.rows, x.cols) != (2, 1) {
        return Err(HopfError::ShapeMismatch(format!("need C 2x2 and X 2x1, got {}x{} and {}x{}", c.rows, c.cols, x.rows, x.cols)));
    }
    let n = h.n();
    let left = matrix_odot(c, x, OdotVariant::OdotPrime, h)?;
    let right = matrix_odot(x, c, OdotVariant::Odot, h)?;
    let (rows, cols) = (left.rows, left.cols);
    // unknown index t*cols + s ↔ right[t][s]
    let basis: Vec<&Vector> = (0..rows).flat_map(|t| (0..cols).map(move |s| (t, s))).map(|(t, s)| right.get(t, s)).collect();
    let sparse: Vec<_> = basis.iter().map(|v| to_sparse(v)).collect();
    if !relations(&sparse, n).is_empty() {
        return Err(HopfError::DependentEntries);
    }
    // columns of the system: the 8 entries of X ⊙ C as vectors in H
    let d = h.dim();
    let sys: Vec<Vector> = (0..d).map(|k| basis.iter().map(|v| v[k].clone()).collect()).collect();
    let mut k = Matrix::zeros(n, rows, rows);
    for r in 0..rows {
        for s in 0..cols {
            let coeffs = solve(&sys, left.get(r, s), rows * cols, n)
                .ok_or_else(|| HopfError::NoSolution(format!("entry ({r},{s}) of C⊙′X is outside the span of X⊙C")))?;
            for t in 0..rows {
                for s2 in 0..cols {
                    let v = &coeffs[t * cols + s2];
                    if s2 != s {
                        if !v.is_zero() {
                            return Err(HopfError::NoSolution(format!("entry ({r},{s}) mixes columns")));
                        }
                    } else if s == 0 {
                        k.set(r, t, v.clone());
                    } else if k.get(r, t) != v {
                        return Err(HopfError::NoSolution(format!("row {r} needs different K in different columns")));
                    }
                }
            }
        }
    }
    if k.rank() != rows {
        return Err(HopfError::NoSolution("K is singular".into()));
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CaseIReport {
    /// The constraints only apply to diagonal K.
    NotApplicable { reason: String },
    Evaluated {
        family_is_f2: bool,
        /// α₁ = α₄ = −1
        alpha1_alpha4: bool,
        /// a = (−1)^{m−1}α₂^m or a = (−1)^{m−1}α₃^m
        a_relation: bool,
        /// Which branch of the disjunction held ("alpha2", "alpha3", or both).
        a_branches: Vec<String>,
        /// α₂α₃ is a primitive m-th root of unity
        primitive_root: bool,
        all_pass: bool,
    },
}

pub fn check_case_i_constraints(k: &Matrix, family: Family, m: usize, a: &Scalar) -> CaseIReport {
    if k.rows != 4 || k.cols != 4 || !k.is_diagonal() {
        return CaseIReport::NotApplicable { reason: "K is not a 4x4 diagonal matrix".into() };
    }
    let al: Vec<Scalar> = (0..4).map(|i| k.get(i, i).clone()).collect();
    let minus_one = Scalar::from_int(1, -1);
    let alpha1_alpha4 = al[0] == minus_one && al[3] == minus_one;
    let sign = if m % 2 == 1 { Scalar::one(1) } else { minus_one.clone() };
    let mut a_branches = Vec::new();
    for (name, x) in [("alpha2", &al[1]), ("alpha3", &al[2])] {
        if *a == &sign * &x.pow(m as i64) {
            a_branches.push(name.to_string());
        }
    }
    let primitive_root = primitive_root_order(&(&al[1] * &al[2])) == Some(m as u64);
    let family_is_f2 = family == Family::F2;
    let a_relation = !a_branches.is_empty();
    CaseIReport::Evaluated {
        family_is_f2,
        alpha1_alpha4,
        a_relation,
        a_branches,
        primitive_root,
        all_pass: family_is_f2 && alpha1_alpha4 && a_relation && primitive_root,
    }
}
