//! Exact linear algebra over ℚ(ζ_n): echelon forms, kernels, subspaces.

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};
use crate::exactfield::Scalar;

/// A dense vector of scalars.
pub type Vector = Vec<Scalar>;
/// A sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn zero_vec(n: u32, d: usize) -> Vector {
    vec![Scalar::zero(n); d]
}

pub fn unit_vec(n: u32, d: usize, i: usize) -> Vector {
    let mut v = zero_vec(n, d);
    v[i] = Scalar::one(n);
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += c * x` on dense vectors.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

pub fn scale_vec(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// `y - c * x` on sparse vectors.
fn sparse_sub_scaled(y: &SparseVec, c: &Scalar, x: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        let ky = y.get(i).map(|t| t.0).unwrap_or(usize::MAX);
        let kx = x.get(j).map(|t| t.0).unwrap_or(usize::MAX);
        if ky < kx {
            out.push(y[i].clone());
            i += 1;
        } else if kx < ky {
            out.push((kx, -(c * &x[j].1)));
            j += 1;
        } else {
            let v = &y[i].1 - &(c * &x[j].1);
            if !v.is_zero() {
                out.push((ky, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row-echelon form (pivots normalized to 1). Returns the nonzero
/// rows and their pivot columns.
pub fn rref(mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Null space `{x : M x = 0}` of an `m × ncols` matrix given by rows.
pub fn kernel(rows: &[Vector], ncols: usize, n: u32) -> Vec<Vector> {
    let (red, pivots) = rref(rows.to_vec(), ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(r);
    }
    let mut out = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = zero_vec(n, ncols);
        v[free] = Scalar::one(n);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[r][free].clone();
        }
        out.push(v);
    }
    out
}

/// Solve `M x = b` (M given by rows, `ncols` unknowns); `None` if inconsistent.
pub fn solve(rows: &[Vector], b: &[Scalar], ncols: usize, n: u32) -> Option<Vector> {
    let aug: Vec<Vector> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut v = r.clone();
            v.push(bi.clone());
            v
        })
        .collect();
    let (red, pivots) = rref(aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = zero_vec(n, ncols);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = red[r][ncols].clone();
    }
    Some(x)
}

/// Linear relations among sparse vectors: all `x` with `Σ x_i v_i = 0`.
/// Incremental echelon elimination keeps the work proportional to the
/// number of nonzeros rather than the ambient dimension.
pub fn relations(vectors: &[SparseVec], n: u32) -> Vec<Vector> {
    let d = vectors.len();
    // pivot index -> (normalized row, combination that produced it)
    let mut basis: std::collections::BTreeMap<usize, (SparseVec, SparseVec)> = Default::default();
    let mut out = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut row = v.clone();
        let mut combo: SparseVec = vec![(i, Scalar::one(n))];
        loop {
            let Some((lead, c)) = row.first().cloned() else {
                let mut dense = zero_vec(n, d);
                for (k, x) in combo {
                    dense[k] = x;
                }
                out.push(dense);
                break;
            };
            match basis.get(&lead) {
                Some((brow, bcombo)) => {
                    row = sparse_sub_scaled(&row, &c, brow);
                    combo = sparse_sub_scaled(&combo, &c, bcombo);
                }
                None => {
                    let inv = c.inverse().expect("nonzero lead");
                    let row: SparseVec = row.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                    let combo: SparseVec = combo.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                    basis.insert(lead, (row, combo));
                    break;
                }
            }
        }
    }
    out
}

/// Dense matrix with `rows × cols` entries; column `j` is the image of basis
/// vector `j` when used as a linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(n: u32, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(n); rows * cols] }
    }

    pub fn identity(n: u32, d: usize) -> Self {
        let mut m = Self::zeros(n, d, d);
        for i in 0..d {
            m.data[i * d + i] = Scalar::one(n);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn from_columns(n: u32, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(n, rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn from_rows(n: u32, cols: usize, rows: &[Vector]) -> Self {
        let mut m = Self::zeros(n, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        let n = self.data.first().map(|x| x.order()).unwrap_or(1);
        let mut out = zero_vec(n, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let m = self.get(r, c);
                if !m.is_zero() {
                    out[r] += &(m * x);
                }
            }
        }
        out
    }

    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(HopfError::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let n = self.data.first().map(|x| x.order()).unwrap_or(1);
        let cols: Vec<Vector> = (0..other.cols).map(|c| self.apply(&other.column(c))).collect();
        Ok(Matrix::from_columns(n, self.rows, &cols))
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vector> = (0..self.rows).map(|r| self.row(r)).collect();
        rref(rows, self.cols).1.len()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }
}

/// JSON form of a matrix: sparse `[row, col, scalar]` entries.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut entries = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    entries.push((r, c, v.clone()));
                }
            }
        }
        MatrixRepr { rows: self.rows, cols: self.cols, entries }.serialize(s)
    }
}

impl Matrix {
    /// Parse the sparse JSON encoding, embedding scalars into ℚ(ζ_n).
    pub fn from_json(v: &serde_json::Value, n: u32) -> Result<Matrix> {
        let r: MatrixRepr =
            serde_json::from_value(v.clone()).map_err(|e| HopfError::Parse(e.to_string()))?;
        let mut m = Matrix::zeros(n, r.rows, r.cols);
        for (i, j, s) in r.entries {
            if i >= r.rows || j >= r.cols {
                return Err(HopfError::Parse(format!("matrix entry ({i},{j}) out of range")));
            }
            m.set(i, j, embed_into(&s, n)?);
        }
        Ok(m)
    }
}

/// Embed a scalar into ℚ(ζ_n), failing if its conductor does not divide n.
pub fn embed_into(s: &Scalar, n: u32) -> Result<Scalar> {
    if n % s.order() == 0 {
        return Ok(s.embed(n));
    }
    // A scalar whose stated conductor does not divide n may still lie in the
    // field (e.g. rationals written with n = 3); try the rational case.
    if let Some(q) = s.as_rational() {
        return Ok(Scalar::from_rational(n, q));
    }
    Err(HopfError::Parse(format!("scalar with conductor {} does not fit in Q(zeta_{n})", s.order())))
}

/// A subspace of a `dim`-dimensional carrier, stored in canonical reduced
/// row-echelon form so that equal subspaces compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(dim: usize, rows: Vec<Vector>) -> Self {
        let (rows, pivots) = rref(rows, dim);
        Subspace { dim, rows, pivots }
    }

    pub fn zero(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: u32, dim: usize) -> Self {
        Subspace { dim, rows: (0..dim).map(|i| unit_vec(n, dim, i)).collect(), pivots: (0..dim).collect() }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(n: u32, dim: usize, idx: &[usize]) -> Self {
        Self::new(dim, idx.iter().map(|&i| unit_vec(n, dim, i)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns; zero iff `v ∈ self`.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                axpy(&mut r, &f, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the echelon basis (valid only if `v ∈ self`).
    pub fn coords(&self, v: &[Scalar]) -> Vector {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::new(self.dim, rows)
    }

    /// `{f : f(u) = 0 ∀ u ∈ self}` in dual coordinates.
    pub fn annihilator(&self, n: u32) -> Subspace {
        Subspace::new(self.dim, kernel(&self.rows, self.dim, n))
    }

    pub fn intersection(&self, other: &Subspace, n: u32) -> Subspace {
        self.annihilator(n).sum(&other.annihilator(n)).annihilator(n)
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    dim: usize,
    rows: Vec<Vector>,
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr { dim: self.dim, rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SubspaceRepr::deserialize(d)?;
        if r.rows.iter().any(|row| row.len() != r.dim) {
            return Err(serde::de::Error::custom("subspace row length differs from dim"));
        }
        let n = r.rows.iter().flatten().map(|x| x.order()).fold(1u32, |a, b| {
            num_integer::Integer::lcm(&a, &b)
        });
        let rows = r.rows.into_iter().map(|row| row.into_iter().map(|x| x.embed(n)).collect()).collect();
        Ok(Subspace::new(r.dim, rows))
    }
}
