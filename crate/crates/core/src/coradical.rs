//! Radicals, coradicals, wedges, coradical filtrations, decomposition of a
//! cosemisimple coalgebra into simple subcoalgebras, and gradings.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{HopfError, Result};
use crate::exactfield::Scalar;
use crate::linalg::{axpy, is_zero_vec, kernel, relations, scale_vec, to_sparse, zero_vec, Matrix, SparseVec, Subspace, Vector};
use crate::modroots::roots_in_field;
use crate::tensorcore::{dualize, HopfData, Level, Tables, Tensor2};

/// Radical of an algebra: kernel of the trace form `(x, y) ↦ tr(L_{xy})`.
pub fn jacobson_radical(a: &HopfData) -> Result<Subspace> {
    if !a.level().has_algebra() {
        return Err(HopfError::MissingStructure("jacobson_radical needs an algebra".into()));
    }
    let (n, d) = (a.n(), a.dim());
    // t_k = tr(L_{b_k})
    let traces: Vec<Scalar> = (0..d)
        .map(|k| {
            let mut t = Scalar::zero(n);
            for j in 0..d {
                for (kk, s) in a.mul_basis(k, j) {
                    if *kk == j {
                        t += s;
                    }
                }
            }
            t
        })
        .collect();
    let gram: Vec<Vector> = (0..d)
        .into_par_iter()
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut g = Scalar::zero(n);
                    for (k, s) in a.mul_basis(i, j) {
                        if !traces[*k].is_zero() {
                            g += &(s * &traces[*k]);
                        }
                    }
                    g
                })
                .collect()
        })
        .collect();
    Ok(Subspace::new(d, kernel(&gram, d, n)))
}

/// Whether `j` is a two-sided ideal with `j^k = 0` for some `k ≤ dim`.
pub fn is_nilpotent_ideal(a: &HopfData, j: &Subspace) -> bool {
    let d = a.dim();
    for v in j.basis() {
        for i in 0..d {
            let b = a.basis_vec(i);
            if !j.contains(&a.mul(&b, v)) || !j.contains(&a.mul(v, &b)) {
                return false;
            }
        }
    }
    let mut power = j.clone();
    for _ in 0..=d {
        if power.rank() == 0 {
            return true;
        }
        let rows: Vec<Vector> =
            power.basis().iter().flat_map(|p| j.basis().iter().map(move |v| (p, v))).map(|(p, v)| a.mul(p, v)).collect();
        power = Subspace::new(d, rows);
    }
    false
}

/// `H₀`: annihilator of the radical of the dual algebra.
pub fn coradical(h: &HopfData) -> Result<Subspace> {
    if !h.level().has_coalgebra() {
        return Err(HopfError::MissingStructure("coradical needs a coalgebra".into()));
    }
    Ok(jacobson_radical(&dualize(h))?.annihilator(h.n()))
}

/// Quotient coordinates of every standard basis vector modulo `u`.
fn quotient_images(u: &Subspace, n: u32) -> (Vec<SparseVec>, usize) {
    let d = u.dim;
    let mut is_pivot = vec![false; d];
    for &p in u.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..d).filter(|&i| !is_pivot[i]).collect();
    let images = (0..d)
        .map(|i| {
            let r = u.reduce(&crate::linalg::unit_vec(n, d, i));
            free.iter().enumerate().filter(|(_, &c)| !r[c].is_zero()).map(|(k, &c)| (k, r[c].clone())).collect()
        })
        .collect();
    (images, free.len())
}

/// `U ∧ V = ker((π_U ⊗ π_V) ∘ Δ)`.
pub fn wedge(h: &HopfData, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    if !h.level().has_coalgebra() {
        return Err(HopfError::MissingStructure("wedge needs a coalgebra".into()));
    }
    let (n, d) = (h.n(), h.dim());
    if u.dim != d || v.dim != d {
        return Err(HopfError::DimensionMismatch(format!("subspaces of dim {}/{} in carrier {d}", u.dim, v.dim)));
    }
    let (qu, _) = quotient_images(u, n);
    let (qv, wv) = quotient_images(v, n);
    let images: Vec<SparseVec> = (0..d)
        .into_par_iter()
        .map(|i| {
            let mut t: std::collections::BTreeMap<usize, Scalar> = Default::default();
            for (j, k, c) in h.comul_basis(i) {
                for (a, x) in &qu[*j] {
                    let cx = c * x;
                    for (b, y) in &qv[*k] {
                        crate::tensorcore::tensor_add(&mut t, a * wv + b, &cx * y);
                    }
                }
            }
            t.into_iter().collect()
        })
        .collect();
    Ok(Subspace::new(d, relations(&images, n)))
}

/// `H₀ ⊂ H₁ ⊂ …` up to the whole space, by `Hₙ = Hₙ₋₁ ∧ H₀`.
pub fn coradical_filtration(h: &HopfData) -> Result<Vec<Subspace>> {
    let h0 = coradical(h)?;
    let d = h.dim();
    let mut chain = vec![h0.clone()];
    while chain.last().expect("nonempty").rank() < d {
        let next = wedge(h, chain.last().expect("nonempty"), &h0)?;
        let prev = chain.last().expect("nonempty").rank();
        if next.rank() <= prev {
            return Err(HopfError::NonTerminating(prev, d));
        }
        chain.push(next);
    }
    Ok(chain)
}

/// A simple subcoalgebra `D ≅ (M_r)^*` of the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleBlock {
    pub label: String,
    pub space: Subspace,
    /// `r` with `dim D = r²`.
    pub comatrix_dim: usize,
}

impl SimpleBlock {
    pub fn dim(&self) -> usize {
        self.space.rank()
    }
}

/// The coalgebra structure of a subcoalgebra `sub`, on its echelon basis.
pub fn restrict_coalgebra(h: &HopfData, sub: &Subspace) -> Result<HopfData> {
    let (n, r) = (h.n(), sub.rank());
    let piv = sub.pivots();
    let mut pos = vec![usize::MAX; h.dim()];
    for (a, &p) in piv.iter().enumerate() {
        pos[p] = a;
    }
    let mut comult = Vec::new();
    for (a, row) in sub.basis().iter().enumerate() {
        let t = h.comul(row);
        // every term must sit inside sub ⊗ sub; read coefficients at pivot pairs
        let mut check = Tensor2::new();
        for ((j, k), c) in &t {
            if pos[*j] != usize::MAX && pos[*k] != usize::MAX {
                comult.push((a, pos[*j], pos[*k], c.clone()));
                let (bj, bk) = (&sub.basis()[pos[*j]], &sub.basis()[pos[*k]]);
                for (x, s) in bj.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    for (y, u) in bk.iter().enumerate() {
                        if !u.is_zero() {
                            crate::tensorcore::tensor_add(&mut check, (x, y), &(c * s) * u);
                        }
                    }
                }
            }
        }
        if check != t {
            return Err(HopfError::BadHints(format!("subspace is not a subcoalgebra (row {a})")));
        }
    }
    let counit: Vector = sub.basis().iter().map(|row| h.counit_of(row)).collect();
    let labels = (0..r).map(|a| format!("w{a}")).collect();
    HopfData::from_tables(n, labels, Level::Coalgebra, Tables { counit: Some(counit), comult: Some(comult), ..Default::default() })
}

fn is_subcoalgebra(h: &HopfData, s: &Subspace) -> bool {
    restrict_coalgebra(h, s).is_ok()
}

/// Center of an algebra as a subspace.
fn center(a: &HopfData) -> Subspace {
    let (n, d) = (a.n(), a.dim());
    let mut rows = Vec::new();
    for j in 0..d {
        for k in 0..d {
            let mut row = zero_vec(n, d);
            let mut any = false;
            for i in 0..d {
                let mut c = Scalar::zero(n);
                for (kk, s) in a.mul_basis(i, j) {
                    if *kk == k {
                        c += s;
                    }
                }
                for (kk, s) in a.mul_basis(j, i) {
                    if *kk == k {
                        c -= s;
                    }
                }
                if !c.is_zero() {
                    any = true;
                }
                row[i] = c;
            }
            if any {
                rows.push(row);
            }
        }
    }
    Subspace::new(d, kernel(&rows, d, n))
}

/// Minimal polynomial (monic, low degree first) of `y` inside `f·A` where
/// `f` is an idempotent acting as unit.
fn min_poly(a: &HopfData, y: &Vector, f: &Vector) -> Vec<Scalar> {
    let n = a.n();
    let mut powers: Vec<Vector> = vec![f.clone()];
    loop {
        let next = a.mul(powers.last().expect("nonempty"), y);
        let mut all: Vec<SparseVec> = powers.iter().map(|p| to_sparse(p)).collect();
        all.push(to_sparse(&next));
        let rel = relations(&all, n);
        if let Some(r) = rel.first() {
            let lead = r[powers.len()].clone();
            let inv = lead.inverse().expect("relation involves the newest power");
            return r.iter().map(|c| c * &inv).collect();
        }
        powers.push(next);
    }
}

fn eval_in_algebra(a: &HopfData, poly: &[Scalar], y: &Vector, f: &Vector) -> Vector {
    let mut acc = zero_vec(a.n(), a.dim());
    for c in poly.iter().rev() {
        acc = a.mul(&acc, y);
        axpy(&mut acc, c, f);
    }
    acc
}

fn div_linear(poly: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    // synthetic division by (X - root)
    let deg = poly.len() - 1;
    let mut q = vec![Scalar::zero(root.order()); deg];
    let mut carry = Scalar::zero(root.order());
    for k in (1..=deg).rev() {
        carry = &poly[k] + &(&carry * root);
        q[k - 1] = carry.clone();
    }
    q
}

/// Split `f` by the eigenvalues in ℚ(ζ_n) of `y·f`; returns the pieces (or
/// `[f]` when nothing splits).
fn split_idempotent(a: &HopfData, y: &Vector, f: &Vector) -> Vec<Vector> {
    let yf = a.mul(y, f);
    let mp = min_poly(a, &yf, f);
    if mp.len() <= 2 {
        return vec![f.clone()];
    }
    let roots = roots_in_field(&mp, a.n());
    if roots.is_empty() {
        return vec![f.clone()];
    }
    let mut pieces = Vec::new();
    let mut rest = f.clone();
    for lam in &roots {
        let q = div_linear(&mp, lam);
        let qv = crate::modroots::eval_poly(&q, lam);
        let inv = qv.inverse().expect("squarefree minimal polynomial");
        let e = scale_vec(&eval_in_algebra(a, &q, &yf, f), &inv);
        axpy(&mut rest, &Scalar::from_int(a.n(), -1), &e);
        pieces.push(e);
    }
    if !is_zero_vec(&rest) {
        pieces.push(rest);
    }
    pieces
}

/// Deterministic probe elements of the center: basis vectors first, then
/// small integer combinations.
fn probes(z: &Subspace, n: u32) -> Vec<Vector> {
    let basis = z.basis();
    let s = basis.len();
    let mut out: Vec<Vector> = basis.to_vec();
    let combine = |coef: &dyn Fn(usize) -> i64| {
        let mut v = zero_vec(n, z.dim);
        for (k, b) in basis.iter().enumerate() {
            axpy(&mut v, &Scalar::from_int(n, coef(k)), b);
        }
        v
    };
    out.push(combine(&|k| k as i64 + 1));
    out.push(combine(&|k| ((k * k) % 7) as i64 + 1));
    for i in 0..s {
        for j in i + 1..s {
            out.push(combine(&|k| if k == i { 1 } else if k == j { 2 } else { 0 }));
        }
    }
    out
}

fn perfect_sqrt(d: usize) -> Option<usize> {
    let r = num_integer::Roots::sqrt(&d);
    (r * r == d).then_some(r)
}

/// Whether the coalgebra `s` (a subcoalgebra of `h`) is simple: its dual
/// algebra is semisimple with one-dimensional center.
fn is_simple(h: &HopfData, s: &Subspace) -> Result<bool> {
    let c = restrict_coalgebra(h, s)?;
    let a = dualize(&c);
    Ok(jacobson_radical(&a)?.rank() == 0 && center(&a).rank() == 1)
}

fn block_label(h: &HopfData, s: &Subspace, counters: &mut (usize, usize), single_big: bool) -> String {
    if h.has_unit() {
        if let Ok(one) = h.unit_elem() {
            if s.contains(&one) {
                return "1".into();
            }
        }
    }
    if s.rank() == 1 {
        let v = &s.basis()[0];
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        if nz.len() == 1 {
            return h.labels()[nz[0]].clone();
        }
        counters.0 += 1;
        return format!("g{}", counters.0);
    }
    if single_big {
        return "C".into();
    }
    counters.1 += 1;
    format!("C{}", counters.1)
}

/// Sort key: unit block first, then by dimension, then by echelon form.
fn block_order(h: &HopfData, s: &Subspace) -> (bool, usize, Vec<usize>, String) {
    let has_one = h.unit_elem().map(|one| s.contains(&one)).unwrap_or(false);
    (!has_one, s.rank(), s.pivots().to_vec(), serde_json::to_string(s).expect("serializable"))
}

/// Decompose the cosemisimple subcoalgebra `h0` of `h` into simple
/// subcoalgebras. With `hints`, each hint is verified and adopted instead.
pub fn simple_decomposition(h: &HopfData, h0: &Subspace, hints: Option<&[(Option<String>, Subspace)]>) -> Result<Vec<SimpleBlock>> {
    let n = h.n();
    if let Some(hints) = hints {
        let mut total = Subspace::zero(h.dim());
        let mut blocks = Vec::new();
        let mut counters = (0, 0);
        let big = hints.iter().filter(|(_, s)| s.rank() > 1).count() == 1;
        for (k, (label, s)) in hints.iter().enumerate() {
            if s.dim != h.dim() {
                return Err(HopfError::BadHints(format!("hint {k} has carrier {} not {}", s.dim, h.dim())));
            }
            if !h0.contains_space(s) {
                return Err(HopfError::BadHints(format!("hint {k} is not inside the coradical")));
            }
            if !is_subcoalgebra(h, s) {
                return Err(HopfError::BadHints(format!("hint {k} is not a subcoalgebra")));
            }
            let r = perfect_sqrt(s.rank()).ok_or_else(|| HopfError::BadHints(format!("hint {k} has non-square dimension {}", s.rank())))?;
            if !is_simple(h, s)? {
                return Err(HopfError::BadHints(format!("hint {k} is not simple")));
            }
            let before = total.rank();
            total = total.sum(s);
            if total.rank() != before + s.rank() {
                return Err(HopfError::BadHints(format!("hint {k} overlaps earlier hints")));
            }
            let label = label.clone().unwrap_or_else(|| block_label(h, s, &mut counters, big));
            blocks.push(SimpleBlock { label, space: s.clone(), comatrix_dim: r });
        }
        if total != *h0 {
            return Err(HopfError::BadHints(format!("hints span dim {} but the coradical has dim {}", total.rank(), h0.rank())));
        }
        return Ok(blocks);
    }

    let c = restrict_coalgebra(h, h0)?;
    let a = dualize(&c);
    let z = center(&a);
    let s = z.rank();
    let mut idem: Vec<Vector> = vec![a.unit_elem()?];
    for y in probes(&z, n) {
        if idem.len() == s {
            break;
        }
        let mut next = Vec::new();
        for f in &idem {
            next.extend(split_idempotent(&a, &y, f));
        }
        idem = next;
    }
    if idem.len() != s {
        return Err(HopfError::FieldTooSmall(format!(
            "found {} of {} central idempotents of the dual of the coradical over Q(zeta_{n}); \
             enlarge the conductor or pass --simples-hint",
            idem.len(),
            s
        )));
    }
    let cd = c.dim();
    let mut spaces = Vec::new();
    for e in &idem {
        // projection y ↦ Σ y₁ e(y₂) on the restricted coalgebra
        let cols: Vec<Vector> = (0..cd)
            .map(|i| {
                let mut v = zero_vec(n, cd);
                for (j, k, coef) in c.comul_basis(i) {
                    if !e[*k].is_zero() {
                        v[*j] += &(coef * &e[*k]);
                    }
                }
                v
            })
            .collect();
        let proj = Matrix::from_columns(n, cd, &cols);
        let image: Vec<Vector> = (0..cd)
            .map(|i| proj.column(i))
            .filter(|v| !is_zero_vec(v))
            .map(|v| {
                let mut out = zero_vec(n, h.dim());
                for (a_idx, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        axpy(&mut out, x, &h0.basis()[a_idx]);
                    }
                }
                out
            })
            .collect();
        let space = Subspace::new(h.dim(), image);
        perfect_sqrt(space.rank()).ok_or_else(|| {
            HopfError::FieldTooSmall(format!("block of non-square dimension {} (not split over Q(zeta_{n}))", space.rank()))
        })?;
        if !is_simple(h, &space)? {
            return Err(HopfError::FieldTooSmall("a block is not simple over the base field".into()));
        }
        spaces.push(space);
    }
    spaces.sort_by_cached_key(|s| block_order(h, s));
    let big = spaces.iter().filter(|s| s.rank() > 1).count() == 1;
    let mut counters = (0, 0);
    Ok(spaces
        .into_iter()
        .map(|space| {
            let label = block_label(h, &space, &mut counters, big);
            let r = perfect_sqrt(space.rank()).expect("checked");
            SimpleBlock { label, space, comatrix_dim: r }
        })
        .collect())
}

/// Whether `grading` (components `H(0), H(1), …`) is a coalgebra grading
/// (and algebra grading if `h` has one) whose partial sums are the coradical
/// filtration.
pub fn check_coradically_graded(h: &HopfData, grading: &[Subspace]) -> Result<bool> {
    let (n, d) = (h.n(), h.dim());
    if grading.iter().any(|g| g.dim != d) {
        return Err(HopfError::DimensionMismatch("grading component of wrong carrier".into()));
    }
    let mut vecs = Vec::new();
    let mut degree = Vec::new();
    for (k, g) in grading.iter().enumerate() {
        for v in g.basis() {
            vecs.push(v.clone());
            degree.push(k);
        }
    }
    if vecs.len() != d || Subspace::new(d, vecs.clone()).rank() != d {
        return Ok(false);
    }
    // inverse change of basis: column j of `inv` = coordinates of b_j
    let p = Matrix::from_columns(n, d, &vecs);
    let mut cols = Vec::with_capacity(d);
    for j in 0..d {
        let rows: Vec<Vector> = (0..d).map(|r| p.row(r)).collect();
        let x = crate::linalg::solve(&rows, &crate::linalg::unit_vec(n, d, j), d, n).expect("invertible");
        cols.push(to_sparse(&x));
    }
    let deg_of = |v: &[Scalar]| -> Option<Vec<usize>> {
        // coordinates in the graded basis, then the set of degrees present
        let mut coords = zero_vec(n, d);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &cols[j] {
                coords[*k] += &(x * c);
            }
        }
        let mut ds: Vec<usize> = (0..d).filter(|&k| !coords[k].is_zero()).map(|k| degree[k]).collect();
        ds.sort_unstable();
        ds.dedup();
        Some(ds)
    };
    let top = grading.len();
    if h.level().has_coalgebra() {
        let ok = (0..d).into_par_iter().all(|a| {
            let t = h.comul(&vecs[a]);
            // bucket by first factor, convert both factors to graded coordinates
            let mut acc: std::collections::BTreeMap<(usize, usize), Scalar> = Default::default();
            for ((j, k), c) in &t {
                for (x, s) in &cols[*j] {
                    let cs = c * s;
                    for (y, u) in &cols[*k] {
                        crate::tensorcore::tensor_add(&mut acc, (*x, *y), &cs * u);
                    }
                }
            }
            acc.keys().all(|(x, y)| degree[*x] + degree[*y] == degree[a])
        });
        if !ok {
            return Ok(false);
        }
    }
    if h.level().has_algebra() {
        for a in 0..d {
            for b in 0..d {
                let prod = h.mul(&vecs[a], &vecs[b]);
                if is_zero_vec(&prod) {
                    continue;
                }
                let want = degree[a] + degree[b];
                match deg_of(&prod) {
                    Some(ds) if want < top && ds == vec![want] => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    if h.level().has_coalgebra() {
        let filt = coradical_filtration(h)?;
        if filt.len() != grading.len() {
            return Ok(false);
        }
        let mut partial = Subspace::zero(d);
        for (g, f) in grading.iter().zip(&filt) {
            partial = partial.sum(g);
            if partial != *f {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorcore::{cyclic_labels, cyclic_table, group_algebra};

    fn dual_numbers() -> HopfData {
        // k[x]/(x²)
        let one = Scalar::one(1);
        let t = Tables {
            unit: Some(vec![one.clone(), Scalar::zero(1)]),
            mult: Some(vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one)]),
            ..Default::default()
        };
        HopfData::from_tables(1, vec!["1".into(), "x".into()], Level::Algebra, t).unwrap()
    }

    #[test]
    fn radical_of_dual_numbers() {
        let a = dual_numbers();
        let j = jacobson_radical(&a).unwrap();
        assert_eq!(j, Subspace::coordinate(1, 2, &[1]));
        assert!(is_nilpotent_ideal(&a, &j));
    }

    #[test]
    fn group_algebra_is_semisimple_and_cosemisimple() {
        let h = group_algebra(3, cyclic_labels(3, "g"), &cyclic_table(3)).unwrap();
        assert_eq!(jacobson_radical(&h).unwrap().rank(), 0);
        assert_eq!(coradical(&h).unwrap().rank(), 3);
        assert_eq!(coradical_filtration(&h).unwrap().len(), 1);
        let blocks = simple_decomposition(&h, &Subspace::full(3, 3), None).unwrap();
        let labels: Vec<_> = blocks.iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["1", "g", "g^2"]);
    }

    #[test]
    fn wedge_of_unit_in_group_algebra() {
        let h = group_algebra(1, cyclic_labels(2, "g"), &cyclic_table(2)).unwrap();
        let k1 = Subspace::coordinate(1, 2, &[0]);
        assert_eq!(wedge(&h, &k1, &k1).unwrap(), k1);
        let full = Subspace::full(1, 2);
        assert_eq!(wedge(&h, &full, &full).unwrap(), full);
    }

    #[test]
    fn comatrix_coalgebra_is_one_block() {
        let n = 1;
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut comult = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for t in 0..2 {
                    comult.push((idx(i, j), idx(i, t), idx(t, j), Scalar::one(n)));
                }
            }
        }
        let counit = vec![Scalar::one(n), Scalar::zero(n), Scalar::zero(n), Scalar::one(n)];
        let labels = ["e11", "e12", "e21", "e22"].iter().map(|s| s.to_string()).collect();
        let c = HopfData::from_tables(n, labels, Level::Coalgebra, Tables { counit: Some(counit), comult: Some(comult), ..Default::default() }).unwrap();
        let h0 = coradical(&c).unwrap();
        assert_eq!(h0.rank(), 4);
        let blocks = simple_decomposition(&c, &h0, None).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].comatrix_dim, 2);
        assert_eq!(blocks[0].label, "C");
    }

    #[test]
    fn dual_group_algebra_needs_roots_of_unity() {
        // (kℤ₃)* is cosemisimple with three group-likes Σ ω^{jk} e_k: over ℚ the
        // center of the dual algebra kℤ₃ does not split.
        let labels = cyclic_labels(3, "g");
        let dual = crate::tensorcore::dual_group_algebra(1, &labels, &cyclic_table(3)).unwrap();
        let h0 = Subspace::full(1, 3);
        assert!(matches!(simple_decomposition(&dual, &h0, None), Err(HopfError::FieldTooSmall(_))));
        let dual3 = crate::tensorcore::dual_group_algebra(3, &labels, &cyclic_table(3)).unwrap();
        let blocks = simple_decomposition(&dual3, &Subspace::full(3, 3), None).unwrap();
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks[0].label, "1");
    }
}
