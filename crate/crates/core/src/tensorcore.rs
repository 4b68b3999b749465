//! Structure-constant containers for algebras, coalgebras, bialgebras and
//! Hopf algebras; axiom verification, dualization, convolution and the block
//! products ⊙ / ⊙′ of matrices over an algebra.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};
use crate::exactfield::Scalar;
use crate::linalg::{embed_into, is_zero_vec, relations, to_sparse, unit_vec, zero_vec, Matrix, SparseVec, Subspace, Vector};

/// Element of `H ⊗ H` keyed by basis index pairs; no zero values.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;
/// Element of `H ⊗ H ⊗ H`.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

pub fn tensor_add<K: Ord>(t: &mut BTreeMap<K, Scalar>, key: K, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match t.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &v;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Which tables a [`HopfData`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl Level {
    pub fn has_algebra(self) -> bool {
        self != Level::Coalgebra
    }
    pub fn has_coalgebra(self) -> bool {
        self != Level::Algebra
    }
    /// Level of the dual object.
    pub fn dual(self) -> Level {
        match self {
            Level::Algebra => Level::Coalgebra,
            Level::Coalgebra => Level::Algebra,
            l => l,
        }
    }
    /// Whether data at `self` carries everything `other` needs.
    pub fn covers(self, other: Level) -> bool {
        (!other.has_algebra() || self.has_algebra())
            && (!other.has_coalgebra() || self.has_coalgebra())
            && (other != Level::Hopf || self == Level::Hopf)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Level::Algebra => "algebra",
            Level::Coalgebra => "coalgebra",
            Level::Bialgebra => "bialgebra",
            Level::Hopf => "hopf",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Level {
    type Err = HopfError;
    fn from_str(s: &str) -> Result<Level> {
        match s {
            "algebra" => Ok(Level::Algebra),
            "coalgebra" => Ok(Level::Coalgebra),
            "bialgebra" => Ok(Level::Bialgebra),
            "hopf" => Ok(Level::Hopf),
            _ => Err(HopfError::Parse(format!("unknown level `{s}`"))),
        }
    }
}

/// A finite-dimensional (co/bi/Hopf) algebra on a fixed ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    n: u32,
    dim: usize,
    labels: Vec<String>,
    level: Level,
    unit: Option<Vector>,
    counit: Option<Vector>,
    /// `mult[i*d+j]` = `b_i b_j` as a sparse vector.
    mult: Option<Vec<SparseVec>>,
    /// `comult[i]` = `Δ(b_i)` as sorted `(j, k, c)` triples.
    comult: Option<Vec<Vec<(usize, usize, Scalar)>>>,
    /// Column `i` is `S(b_i)`.
    antipode: Option<Matrix>,
}

/// Raw tables used to assemble a [`HopfData`].
#[derive(Clone, Debug, Default)]
pub struct Tables {
    pub unit: Option<Vector>,
    pub counit: Option<Vector>,
    pub mult: Option<Vec<(usize, usize, usize, Scalar)>>,
    pub comult: Option<Vec<(usize, usize, usize, Scalar)>>,
    /// `(i, j, s)`: coefficient `s` of `b_j` in `S(b_i)`.
    pub antipode: Option<Vec<(usize, usize, Scalar)>>,
}

impl HopfData {
    /// Assemble and validate. Duplicated entries are summed and zeros dropped.
    /// A `hopf` level without an antipode is downgraded to `bialgebra`.
    pub fn from_tables(n: u32, labels: Vec<String>, mut level: Level, t: Tables) -> Result<HopfData> {
        let d = labels.len();
        if d == 0 {
            return Err(HopfError::DimensionMismatch("empty basis".into()));
        }
        let check_idx = |idx: &[usize], what: &str| -> Result<()> {
            if idx.iter().any(|&i| i >= d) {
                return Err(HopfError::DimensionMismatch(format!("{what} index out of range in {idx:?}")));
            }
            Ok(())
        };
        let vec_of = |v: Option<Vector>, what: &str| -> Result<Option<Vector>> {
            match v {
                None => Ok(None),
                Some(v) if v.len() != d => {
                    Err(HopfError::DimensionMismatch(format!("{what} has length {} not {d}", v.len())))
                }
                Some(v) => Ok(Some(v.iter().map(|x| embed_into(x, n)).collect::<Result<_>>()?)),
            }
        };
        let unit = vec_of(t.unit, "unit")?;
        let counit = vec_of(t.counit, "counit")?;
        let mult = match t.mult {
            None => None,
            Some(entries) => {
                let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
                for (i, j, k, s) in entries {
                    check_idx(&[i, j, k], "mult")?;
                    tensor_add(&mut acc, (i, j, k), embed_into(&s, n)?);
                }
                let mut m = vec![Vec::new(); d * d];
                for ((i, j, k), s) in acc {
                    m[i * d + j].push((k, s));
                }
                Some(m)
            }
        };
        let comult = match t.comult {
            None => None,
            Some(entries) => {
                let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
                for (i, j, k, s) in entries {
                    check_idx(&[i, j, k], "comult")?;
                    tensor_add(&mut acc, (i, j, k), embed_into(&s, n)?);
                }
                let mut c = vec![Vec::new(); d];
                for ((i, j, k), s) in acc {
                    c[i].push((j, k, s));
                }
                Some(c)
            }
        };
        let antipode = match t.antipode {
            None => None,
            Some(entries) => {
                let mut m = Matrix::zeros(n, d, d);
                for (i, j, s) in entries {
                    check_idx(&[i, j], "antipode")?;
                    let v = m.get(j, i) + &embed_into(&s, n)?;
                    m.set(j, i, v);
                }
                Some(m)
            }
        };
        if level == Level::Hopf && antipode.is_none() {
            level = Level::Bialgebra;
        }
        if level.has_algebra() && (mult.is_none() || unit.is_none()) {
            return Err(HopfError::MissingStructure(format!("{level} requires mult and unit")));
        }
        if level.has_coalgebra() && (comult.is_none() || counit.is_none()) {
            return Err(HopfError::MissingStructure(format!("{level} requires comult and counit")));
        }
        Ok(HopfData { n, dim: d, labels, level, unit, counit, mult, comult, antipode })
    }

    /// Build from closures on basis indices (used by the constructions).
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        n: u32,
        labels: Vec<String>,
        level: Level,
        mult: Option<&(dyn Fn(usize, usize) -> Vector + Sync)>,
        unit: Option<Vector>,
        comult: Option<&(dyn Fn(usize) -> Tensor2 + Sync)>,
        counit: Option<Vector>,
        antipode: Option<&(dyn Fn(usize) -> Vector + Sync)>,
    ) -> Result<HopfData> {
        let d = labels.len();
        let mt = mult.map(|f| {
            let rows: Vec<Vec<(usize, usize, usize, Scalar)>> = (0..d * d)
                .into_par_iter()
                .map(|ij| {
                    let (i, j) = (ij / d, ij % d);
                    to_sparse(&f(i, j)).into_iter().map(|(k, s)| (i, j, k, s)).collect()
                })
                .collect();
            rows.into_iter().flatten().collect()
        });
        let ct = comult.map(|f| {
            let rows: Vec<Vec<(usize, usize, usize, Scalar)>> = (0..d)
                .into_par_iter()
                .map(|i| f(i).into_iter().map(|((j, k), s)| (i, j, k, s)).collect())
                .collect();
            rows.into_iter().flatten().collect()
        });
        let st = antipode.map(|f| {
            (0..d).flat_map(|i| to_sparse(&f(i)).into_iter().map(move |(j, s)| (i, j, s))).collect()
        });
        HopfData::from_tables(n, labels, level, Tables { unit, counit, mult: mt, comult: ct, antipode: st })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn level(&self) -> Level {
        self.level
    }
    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }
    pub fn has_unit(&self) -> bool {
        self.unit.is_some()
    }

    fn need(&self, l: Level) -> Result<()> {
        if self.level.covers(l) {
            Ok(())
        } else {
            Err(HopfError::MissingStructure(format!("need {l} data, have {}", self.level)))
        }
    }

    pub fn zero(&self) -> Vector {
        zero_vec(self.n, self.dim)
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        unit_vec(self.n, self.dim, i)
    }

    pub fn unit_elem(&self) -> Result<Vector> {
        self.unit.clone().ok_or_else(|| HopfError::MissingStructure("unit".into()))
    }

    pub fn counit_vec(&self) -> Result<&Vector> {
        self.counit.as_ref().ok_or_else(|| HopfError::MissingStructure("counit".into()))
    }

    pub fn antipode_matrix(&self) -> Result<&Matrix> {
        self.antipode.as_ref().ok_or_else(|| HopfError::MissingStructure("antipode".into()))
    }

    /// `b_i b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult.as_ref().expect("algebra structure")[i * self.dim + j]
    }

    /// `Δ(b_i)`.
    pub fn comul_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult.as_ref().expect("coalgebra structure")[i]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, s) in self.mul_basis(i, j) {
                    out[*k] += &(&xy * s);
                }
            }
        }
        out
    }

    pub fn comul(&self, a: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, s) in self.comul_basis(i) {
                tensor_add(&mut t, (*j, *k), x * s);
            }
        }
        t
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        let e = self.counit.as_ref().expect("counit");
        let mut acc = Scalar::zero(self.n);
        for (x, y) in a.iter().zip(e) {
            if !x.is_zero() && !y.is_zero() {
                acc += &(x * y);
            }
        }
        acc
    }

    pub fn antipode_of(&self, a: &[Scalar]) -> Vector {
        self.antipode.as_ref().expect("antipode").apply(a)
    }

    /// Product in `H ⊗ H`: `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_mul(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((a, b), s) in x {
            for ((c, d), t) in y {
                let st = s * t;
                for (p, u) in self.mul_basis(*a, *c) {
                    let stu = &st * u;
                    for (q, v) in self.mul_basis(*b, *d) {
                        tensor_add(&mut out, (*p, *q), &stu * v);
                    }
                }
            }
        }
        out
    }

    /// Vector form of an element of `H ⊗ H` restricted to the first factor
    /// after applying a functional on the second.
    pub fn label_of(&self, v: &[Scalar]) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| if x.is_one() { self.labels[i].clone() } else { format!("({x})*{}", self.labels[i]) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Same structure on the reordered basis `b'_k = b_{perm[k]}`.
    pub fn permuted(&self, perm: &[usize]) -> Result<HopfData> {
        let d = self.dim;
        let mut inv = vec![usize::MAX; d];
        for (k, &p) in perm.iter().enumerate() {
            if p >= d || inv[p] != usize::MAX {
                return Err(HopfError::DimensionMismatch("not a permutation".into()));
            }
            inv[p] = k;
        }
        if perm.len() != d {
            return Err(HopfError::DimensionMismatch("not a permutation".into()));
        }
        let pv = |v: &Vector| -> Vector { (0..d).map(|k| v[perm[k]].clone()).collect() };
        let t = Tables {
            unit: self.unit.as_ref().map(pv),
            counit: self.counit.as_ref().map(pv),
            mult: self.mult.as_ref().map(|m| {
                let mut e = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        for (k, s) in &m[i * d + j] {
                            e.push((inv[i], inv[j], inv[*k], s.clone()));
                        }
                    }
                }
                e
            }),
            comult: self.comult.as_ref().map(|c| {
                let mut e = Vec::new();
                for (i, row) in c.iter().enumerate() {
                    for (j, k, s) in row {
                        e.push((inv[i], inv[*j], inv[*k], s.clone()));
                    }
                }
                e
            }),
            antipode: self.antipode.as_ref().map(|m| {
                let mut e = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        let s = m.get(j, i);
                        if !s.is_zero() {
                            e.push((inv[i], inv[j], s.clone()));
                        }
                    }
                }
                e
            }),
        };
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        HopfData::from_tables(self.n, labels, self.level, t)
    }

    /// Tensor product `A ⊗ B` with basis `a_i ⊗ b_j` at index `i*dim(B)+j`.
    pub fn tensor_product(&self, other: &HopfData) -> Result<HopfData> {
        let n = num_integer::Integer::lcm(&self.n, &other.n);
        let (d1, d2) = (self.dim, other.dim);
        let level = if self.level == other.level { self.level } else { self.level.min(other.level) };
        let labels: Vec<String> = (0..d1 * d2)
            .map(|x| {
                let (a, b) = (&self.labels[x / d2], &other.labels[x % d2]);
                match (a.as_str(), b.as_str()) {
                    ("1", _) => b.clone(),
                    (_, "1") => a.clone(),
                    _ => format!("{a}{b}"),
                }
            })
            .collect();
        let kron = |u: &Vector, v: &Vector| -> Vector {
            let mut out = zero_vec(n, d1 * d2);
            for (i, x) in u.iter().enumerate() {
                for (j, y) in v.iter().enumerate() {
                    out[i * d2 + j] = x * y;
                }
            }
            out
        };
        let mut t = Tables::default();
        if level.has_algebra() {
            t.unit = Some(kron(&self.unit_elem()?, &other.unit_elem()?));
            let mut e = Vec::new();
            for x in 0..d1 * d2 {
                for y in 0..d1 * d2 {
                    for (p, s) in self.mul_basis(x / d2, y / d2) {
                        for (q, u) in other.mul_basis(x % d2, y % d2) {
                            e.push((x, y, p * d2 + q, s * u));
                        }
                    }
                }
            }
            t.mult = Some(e);
        }
        if level.has_coalgebra() {
            t.counit = Some(kron(self.counit_vec()?, other.counit_vec()?));
            let mut e = Vec::new();
            for x in 0..d1 * d2 {
                for (a1, a2, s) in self.comul_basis(x / d2) {
                    for (b1, b2, u) in other.comul_basis(x % d2) {
                        e.push((x, a1 * d2 + b1, a2 * d2 + b2, s * u));
                    }
                }
            }
            t.comult = Some(e);
        }
        if level == Level::Hopf {
            let (s1, s2) = (self.antipode_matrix()?, other.antipode_matrix()?);
            let mut e = Vec::new();
            for x in 0..d1 * d2 {
                let img = kron(&s1.column(x / d2), &s2.column(x % d2));
                for (y, s) in to_sparse(&img) {
                    e.push((x, y, s));
                }
            }
            t.antipode = Some(e);
        }
        HopfData::from_tables(n, labels, level, t)
    }
}

// ---------------------------------------------------------------- JSON

#[derive(Serialize, Deserialize)]
struct HopfRepr {
    n: u32,
    dim: usize,
    labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counit: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<Vec<(usize, usize, usize, Scalar)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comult: Option<Vec<(usize, usize, usize, Scalar)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<(usize, usize, Scalar)>>,
    level: Level,
}

impl HopfData {
    pub fn to_json(&self) -> serde_json::Value {
        let t = self.to_tables();
        let repr = HopfRepr {
            n: self.n,
            dim: self.dim,
            labels: self.labels.clone(),
            unit: t.unit,
            counit: t.counit,
            mult: t.mult,
            comult: t.comult,
            antipode: t.antipode,
            level: self.level,
        };
        serde_json::to_value(repr).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<HopfData> {
        let r: HopfRepr = serde_json::from_value(v.clone()).map_err(|e| HopfError::Parse(e.to_string()))?;
        if r.labels.len() != r.dim {
            return Err(HopfError::Parse(format!("{} labels for dim {}", r.labels.len(), r.dim)));
        }
        if r.n == 0 || r.n as u64 > crate::exactfield::CONDUCTOR_BOUND {
            return Err(HopfError::Parse(format!("invalid conductor {}", r.n)));
        }
        let t = Tables { unit: r.unit, counit: r.counit, mult: r.mult, comult: r.comult, antipode: r.antipode };
        HopfData::from_tables(r.n, r.labels, r.level, t)
    }
}

// ---------------------------------------------------------------- axioms

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub status: CheckStatus,
    /// First failing basis indices (in index order).
    pub witness: Option<Vec<usize>>,
    /// All failing index tuples; populated in exhaustive mode only.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub level: Level,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).map(|c| c.name.as_str()).collect()
    }
}

/// Runs `per_index(i)` for every `i < count`; each returns the failing index
/// tuples for that outer index in increasing order.
fn run_check<F>(name: &str, count: usize, exhaustive: bool, per_index: F) -> AxiomCheck
where
    F: Fn(usize, bool) -> Vec<Vec<usize>> + Sync,
{
    let (witness, witnesses) = if exhaustive {
        let all: Vec<Vec<usize>> =
            (0..count).into_par_iter().map(|i| per_index(i, true)).collect::<Vec<_>>().into_iter().flatten().collect();
        (all.first().cloned(), all)
    } else {
        let first = (0..count).into_par_iter().find_map_first(|i| per_index(i, false).into_iter().next());
        (first, Vec::new())
    };
    AxiomCheck {
        name: name.into(),
        status: if witness.is_some() { CheckStatus::Fail } else { CheckStatus::Pass },
        witness,
        witnesses,
    }
}

fn skipped(name: &str) -> AxiomCheck {
    AxiomCheck { name: name.into(), status: CheckStatus::Skipped, witness: None, witnesses: Vec::new() }
}

fn sparse_to_dense(n: u32, d: usize, v: &[(usize, Scalar)]) -> Vector {
    let mut out = zero_vec(n, d);
    for (k, s) in v {
        out[*k] = s.clone();
    }
    out
}

/// A set of basis indices generating the algebra, chosen greedily in index
/// order.
pub fn algebra_generators(h: &HopfData) -> Result<Vec<usize>> {
    h.need(Level::Algebra)?;
    let d = h.dim;
    let one = h.unit_elem()?;
    let mut gens: Vec<usize> = Vec::new();
    let mut span = Subspace::new(d, vec![one.clone()]);
    for i in 0..d {
        if span.rank() == d {
            break;
        }
        if span.contains(&h.basis_vec(i)) {
            continue;
        }
        gens.push(i);
        // closure of span{1} under left multiplication by the generators
        let mut basis = vec![one.clone()];
        span = Subspace::new(d, basis.clone());
        let mut k = 0;
        while k < basis.len() {
            for &g in &gens {
                let w = h.mul(&h.basis_vec(g), &basis[k]);
                if !span.contains(&w) {
                    basis.push(w.clone());
                    span = span.sum(&Subspace::new(d, vec![w]));
                }
            }
            k += 1;
        }
    }
    Ok(gens)
}

/// Check every axiom up to `level`. Failures are report entries.
pub fn verify_axioms(h: &HopfData, level: Level, exhaustive: bool) -> Result<AxiomReport> {
    h.need(level)?;
    let d = h.dim;
    let n = h.n;
    let mut checks = Vec::new();
    let delta: Vec<Tensor2> = if level.has_coalgebra() {
        (0..d).into_par_iter().map(|i| h.comul(&h.basis_vec(i))).collect()
    } else {
        Vec::new()
    };

    if level.has_algebra() {
        checks.push(run_check("associativity", d, exhaustive, |i, all| {
            let mut out = Vec::new();
            for j in 0..d {
                let ij = sparse_to_dense(n, d, h.mul_basis(i, j));
                for k in 0..d {
                    let left = h.mul(&ij, &h.basis_vec(k));
                    let jk = sparse_to_dense(n, d, h.mul_basis(j, k));
                    let right = h.mul(&h.basis_vec(i), &jk);
                    if left != right {
                        out.push(vec![i, j, k]);
                        if !all {
                            return out;
                        }
                    }
                }
            }
            out
        }));
        let one = h.unit_elem()?;
        checks.push(run_check("unit", d, exhaustive, |i, _| {
            let b = h.basis_vec(i);
            if h.mul(&one, &b) != b || h.mul(&b, &one) != b {
                vec![vec![i]]
            } else {
                vec![]
            }
        }));
    } else {
        checks.push(skipped("associativity"));
        checks.push(skipped("unit"));
    }

    if level.has_coalgebra() {
        checks.push(run_check("coassociativity", d, exhaustive, |i, _| {
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            for ((a, b), s) in &delta[i] {
                for ((p, q), t) in &delta[*a] {
                    tensor_add(&mut left, (*p, *q, *b), s * t);
                }
                for ((p, q), t) in &delta[*b] {
                    tensor_add(&mut right, (*a, *p, *q), s * t);
                }
            }
            if left == right {
                return vec![];
            }
            let keys: std::collections::BTreeSet<_> = left.keys().chain(right.keys()).collect();
            let k = keys.into_iter().find(|k| left.get(k) != right.get(k)).expect("unequal tensors");
            vec![vec![i, k.0, k.1, k.2]]
        }));
        checks.push(run_check("counit", d, exhaustive, |i, _| {
            let mut l = h.zero();
            let mut r = h.zero();
            let e = h.counit.as_ref().expect("counit");
            for ((a, b), s) in &delta[i] {
                if !e[*a].is_zero() {
                    l[*b] += &(&e[*a] * s);
                }
                if !e[*b].is_zero() {
                    r[*a] += &(&e[*b] * s);
                }
            }
            let b = h.basis_vec(i);
            if l != b || r != b {
                vec![vec![i]]
            } else {
                vec![]
            }
        }));
    } else {
        checks.push(skipped("coassociativity"));
        checks.push(skipped("counit"));
    }

    if level.has_algebra() && level.has_coalgebra() {
        let one = h.unit_elem()?;
        // Once associativity holds, the x with Δ(xy) = Δ(x)Δ(y) for all y form
        // a subalgebra, so a generating set of basis elements suffices.
        let associative = checks.iter().all(|c: &AxiomCheck| c.name != "associativity" || c.status == CheckStatus::Pass);
        let rows: Vec<usize> = if exhaustive || !associative { (0..d).collect() } else { algebra_generators(h)? };
        let mut c = run_check("comult_multiplicative", rows.len(), exhaustive, |ii, all| {
            let i = rows[ii];
            let mut out = Vec::new();
            for j in 0..d {
                let prod = sparse_to_dense(n, d, h.mul_basis(i, j));
                if h.comul(&prod) != h.tensor_mul(&delta[i], &delta[j]) {
                    out.push(vec![i, j]);
                    if !all {
                        return out;
                    }
                }
            }
            out
        });
        let mut one_one = Tensor2::new();
        for (a, x) in one.iter().enumerate() {
            for (b, y) in one.iter().enumerate() {
                tensor_add(&mut one_one, (a, b), x * y);
            }
        }
        if h.comul(&one) != one_one {
            c.status = CheckStatus::Fail;
            c.witness.get_or_insert_with(Vec::new);
        }
        checks.push(c);
        let mut c = run_check("counit_multiplicative", d, exhaustive, |i, all| {
            let mut out = Vec::new();
            let ei = h.counit_of(&h.basis_vec(i));
            for j in 0..d {
                let prod = sparse_to_dense(n, d, h.mul_basis(i, j));
                if h.counit_of(&prod) != &ei * &h.counit_of(&h.basis_vec(j)) {
                    out.push(vec![i, j]);
                    if !all {
                        return out;
                    }
                }
            }
            out
        });
        if !h.counit_of(&one).is_one() {
            c.status = CheckStatus::Fail;
            c.witness.get_or_insert_with(Vec::new);
        }
        checks.push(c);
    } else {
        checks.push(skipped("comult_multiplicative"));
        checks.push(skipped("counit_multiplicative"));
    }

    if level == Level::Hopf {
        let s = h.antipode_matrix()?;
        let one = h.unit_elem()?;
        let sb: Vec<Vector> = (0..d).map(|j| s.column(j)).collect();
        for (name, left) in [("antipode_left", true), ("antipode_right", false)] {
            checks.push(run_check(name, d, exhaustive, |i, _| {
                let mut acc = h.zero();
                for ((a, b), c) in &delta[i] {
                    let p = if left {
                        h.mul(&sb[*a], &h.basis_vec(*b))
                    } else {
                        h.mul(&h.basis_vec(*a), &sb[*b])
                    };
                    crate::linalg::axpy(&mut acc, c, &p);
                }
                let e = h.counit_of(&h.basis_vec(i));
                if acc != crate::linalg::scale_vec(&one, &e) {
                    vec![vec![i]]
                } else {
                    vec![]
                }
            }));
        }
    } else {
        checks.push(skipped("antipode_left"));
        checks.push(skipped("antipode_right"));
    }
    Ok(AxiomReport { level, checks })
}

// ---------------------------------------------------------------- duality

fn dual_label(s: &str) -> String {
    match s.strip_suffix('*') {
        Some(t) => t.to_string(),
        None => format!("{s}*"),
    }
}

/// The dual on the dual basis: mult and comult transposed, unit and counit
/// exchanged, antipode transposed.
pub fn dualize(h: &HopfData) -> HopfData {
    let d = h.dim;
    let mut t = Tables { unit: h.counit.clone(), counit: h.unit.clone(), ..Tables::default() };
    if let Some(c) = &h.comult {
        // f_j f_k = Σ_i c[i][j][k] f_i
        t.mult = Some(
            c.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, k, s)| (*j, *k, i, s.clone()))).collect(),
        );
    }
    if let Some(m) = &h.mult {
        // Δ(f_k) = Σ m[i][j][k] f_i ⊗ f_j
        let mut e = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, s) in &m[i * d + j] {
                    e.push((*k, i, j, s.clone()));
                }
            }
        }
        t.comult = Some(e);
    }
    if let Some(s) = &h.antipode {
        // S*(f_j) = Σ_i S[i→j] f_i, i.e. entry (j, i) = coefficient of b_j in S(b_i)
        let mut e = Vec::new();
        for j in 0..d {
            for i in 0..d {
                let v = s.get(j, i);
                if !v.is_zero() {
                    e.push((j, i, v.clone()));
                }
            }
        }
        t.antipode = Some(e);
    }
    let labels = h.labels.iter().map(|l| dual_label(l)).collect();
    HopfData::from_tables(h.n, labels, h.level.dual(), t).expect("dual of valid data is valid")
}

/// Convolution `(f∗g)(x) = Σ f(x₁) g(x₂)` of linear maps `H → H`.
pub fn convolve(f: &Matrix, g: &Matrix, h: &HopfData) -> Result<Matrix> {
    h.need(Level::Bialgebra)?;
    let d = h.dim;
    for (m, nm) in [(f, "f"), (g, "g")] {
        if m.rows != d || m.cols != d {
            return Err(HopfError::DimensionMismatch(format!("{nm} is {}x{}, carrier has dim {d}", m.rows, m.cols)));
        }
    }
    let fc: Vec<Vector> = (0..d).map(|j| f.column(j)).collect();
    let gc: Vec<Vector> = (0..d).map(|j| g.column(j)).collect();
    let cols: Vec<Vector> = (0..d)
        .into_par_iter()
        .map(|i| {
            let mut acc = h.zero();
            for (j, k, c) in h.comul_basis(i) {
                if is_zero_vec(&fc[*j]) || is_zero_vec(&gc[*k]) {
                    continue;
                }
                crate::linalg::axpy(&mut acc, c, &h.mul(&fc[*j], &gc[*k]));
            }
            acc
        })
        .collect();
    Ok(Matrix::from_columns(h.n, d, &cols))
}

/// The map `x ↦ ε(x)·1`.
pub fn unit_counit_map(h: &HopfData) -> Result<Matrix> {
    let one = h.unit_elem()?;
    let e = h.counit_vec()?;
    let cols: Vec<Vector> = e.iter().map(|x| crate::linalg::scale_vec(&one, x)).collect();
    Ok(Matrix::from_columns(h.n, h.dim, &cols))
}

// ---------------------------------------------------------------- matrices over H

/// A rectangular matrix whose entries are elements of a carrier algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOverAlgebra {
    pub rows: usize,
    pub cols: usize,
    pub carrier: usize,
    entries: Vec<Vector>,
}

impl MatrixOverAlgebra {
    pub fn new(rows: usize, cols: usize, entries: Vec<Vector>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(HopfError::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        let carrier = entries[0].len();
        if entries.iter().any(|e| e.len() != carrier) {
            return Err(HopfError::ShapeMismatch("entries of different lengths".into()));
        }
        Ok(MatrixOverAlgebra { rows, cols, carrier, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Vector>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(HopfError::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Vector] {
        &self.entries
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<SparseVec>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| to_sparse(self.get(i, j))).collect()).collect();
        serde_json::json!({"rows": self.rows, "cols": self.cols, "carrier": self.carrier, "entries": rows})
    }

    pub fn from_json(v: &serde_json::Value, h: &HopfData) -> Result<Self> {
        #[derive(Deserialize)]
        struct Repr {
            entries: Vec<Vec<Vec<(usize, Scalar)>>>,
        }
        let r: Repr = serde_json::from_value(v.clone()).map_err(|e| HopfError::Parse(e.to_string()))?;
        let mut rows = Vec::new();
        for row in r.entries {
            let mut out = Vec::new();
            for e in row {
                let mut x = h.zero();
                for (k, s) in e {
                    if k >= h.dim() {
                        return Err(HopfError::Parse(format!("basis index {k} out of range")));
                    }
                    x[k] += &embed_into(&s, h.n())?;
                }
                out.push(x);
            }
            rows.push(out);
        }
        Self::from_rows(rows)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OdotVariant {
    /// `(i,j)` block is `a_ij · B`.
    Odot,
    /// `(u,v)` block is `A · b_uv`.
    OdotPrime,
}

pub fn matrix_odot(a: &MatrixOverAlgebra, b: &MatrixOverAlgebra, variant: OdotVariant, h: &HopfData) -> Result<MatrixOverAlgebra> {
    if a.carrier != b.carrier {
        return Err(HopfError::CarrierMismatch(a.carrier, b.carrier));
    }
    if a.carrier != h.dim() {
        return Err(HopfError::CarrierMismatch(a.carrier, h.dim()));
    }
    let (r, s, u, v) = (a.rows, a.cols, b.rows, b.cols);
    let mut entries = vec![Vec::new(); r * u * s * v];
    let cols = s * v;
    match variant {
        OdotVariant::Odot => {
            for i in 0..r {
                for j in 0..s {
                    for p in 0..u {
                        for q in 0..v {
                            entries[(i * u + p) * cols + j * v + q] = h.mul(a.get(i, j), b.get(p, q));
                        }
                    }
                }
            }
        }
        OdotVariant::OdotPrime => {
            for p in 0..u {
                for q in 0..v {
                    for i in 0..r {
                        for j in 0..s {
                            entries[(p * r + i) * cols + q * s + j] = h.mul(a.get(i, j), b.get(p, q));
                        }
                    }
                }
            }
        }
    }
    MatrixOverAlgebra::new(r * u, s * v, entries)
}

pub enum MatrixKind<'a> {
    Multiplicative,
    BasicMultiplicative,
    /// `(C, D)`-primitive.
    Primitive(&'a MatrixOverAlgebra, &'a MatrixOverAlgebra),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixKindReport {
    pub holds: bool,
    /// For primitive matrices with a coradical supplied: whether some entry
    /// lies outside it.
    pub nontrivial: Option<bool>,
}

fn elem_tensor(a: &[Scalar], b: &[Scalar]) -> Tensor2 {
    let mut t = Tensor2::new();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                tensor_add(&mut t, (i, j), x * y);
            }
        }
    }
    t
}

fn tensor_sum(mut a: Tensor2, b: Tensor2) -> Tensor2 {
    for (k, v) in b {
        tensor_add(&mut a, k, v);
    }
    a
}

pub fn verify_matrix_kind(h: &HopfData, m: &MatrixOverAlgebra, kind: MatrixKind, h0: Option<&Subspace>) -> Result<MatrixKindReport> {
    h.need(Level::Coalgebra)?;
    if m.carrier != h.dim() {
        return Err(HopfError::CarrierMismatch(m.carrier, h.dim()));
    }
    match kind {
        MatrixKind::Multiplicative | MatrixKind::BasicMultiplicative => {
            if m.rows != m.cols {
                return Err(HopfError::ShapeMismatch("multiplicative matrices are square".into()));
            }
            let r = m.rows;
            let mut holds = true;
            'outer: for i in 0..r {
                for j in 0..r {
                    let mut rhs = Tensor2::new();
                    for t in 0..r {
                        rhs = tensor_sum(rhs, elem_tensor(m.get(i, t), m.get(t, j)));
                    }
                    let eps = h.counit_of(m.get(i, j));
                    let want = if i == j { Scalar::one(h.n()) } else { Scalar::zero(h.n()) };
                    if h.comul(m.get(i, j)) != rhs || eps != want {
                        holds = false;
                        break 'outer;
                    }
                }
            }
            if holds && matches!(kind, MatrixKind::BasicMultiplicative) {
                let sparse: Vec<SparseVec> = m.entries.iter().map(|e| to_sparse(e)).collect();
                holds = relations(&sparse, h.n()).is_empty();
            }
            Ok(MatrixKindReport { holds, nontrivial: None })
        }
        MatrixKind::Primitive(c, dm) => {
            if c.rows != c.cols || dm.rows != dm.cols || c.cols != m.rows || m.cols != dm.rows {
                return Err(HopfError::ShapeMismatch(format!(
                    "C {}x{}, X {}x{}, D {}x{}",
                    c.rows, c.cols, m.rows, m.cols, dm.rows, dm.cols
                )));
            }
            let mut holds = true;
            'outer2: for i in 0..m.rows {
                for j in 0..m.cols {
                    let mut rhs = Tensor2::new();
                    for k in 0..c.cols {
                        rhs = tensor_sum(rhs, elem_tensor(c.get(i, k), m.get(k, j)));
                    }
                    for t in 0..m.cols {
                        rhs = tensor_sum(rhs, elem_tensor(m.get(i, t), dm.get(t, j)));
                    }
                    if h.comul(m.get(i, j)) != rhs {
                        holds = false;
                        break 'outer2;
                    }
                }
            }
            let nontrivial = h0.map(|s| m.entries.iter().any(|e| !s.contains(e)));
            Ok(MatrixKindReport { holds, nontrivial })
        }
    }
}

/// Group algebra `kG` of a finite group given by its multiplication table
/// (`table[a][b]` = index of `ab`, identity at index 0).
pub fn group_algebra(n: u32, labels: Vec<String>, table: &[Vec<usize>]) -> Result<HopfData> {
    let d = labels.len();
    let inv: Vec<usize> = (0..d).map(|a| (0..d).find(|&b| table[a][b] == 0).expect("group inverse")).collect();
    let one = Scalar::one(n);
    let mut t = Tables { unit: Some(unit_vec(n, d, 0)), counit: Some(vec![one.clone(); d]), ..Default::default() };
    t.mult = Some((0..d).flat_map(|a| (0..d).map(move |b| (a, b, table[a][b], Scalar::one(n)))).collect());
    t.comult = Some((0..d).map(|a| (a, a, a, one.clone())).collect());
    t.antipode = Some((0..d).map(|a| (a, inv[a], one.clone())).collect());
    HopfData::from_tables(n, labels, Level::Hopf, t)
}

/// The dual `k^G` of a group algebra, on the basis of point functions
/// `e_g`, labelled `e_<label>`.
pub fn dual_group_algebra(n: u32, labels: &[String], table: &[Vec<usize>]) -> Result<HopfData> {
    let kg = group_algebra(n, labels.to_vec(), table)?;
    let dual = dualize(&kg);
    let names = labels.iter().map(|l| format!("e_{l}")).collect::<Vec<_>>();
    dual.relabeled(names)
}

impl HopfData {
    /// Raw tables (inverse of [`HopfData::from_tables`]).
    pub fn to_tables(&self) -> Tables {
        let d = self.dim;
        Tables {
            unit: self.unit.clone(),
            counit: self.counit.clone(),
            mult: self.mult.as_ref().map(|m| {
                let mut e = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        for (k, s) in &m[i * d + j] {
                            e.push((i, j, *k, s.clone()));
                        }
                    }
                }
                e
            }),
            comult: self.comult.as_ref().map(|c| {
                c.iter()
                    .enumerate()
                    .flat_map(|(i, row)| row.iter().map(move |(j, k, s)| (i, *j, *k, s.clone())))
                    .collect()
            }),
            antipode: self.antipode.as_ref().map(|m| {
                let mut e = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        let s = m.get(j, i);
                        if !s.is_zero() {
                            e.push((i, j, s.clone()));
                        }
                    }
                }
                e
            }),
        }
    }

    /// Same tables, new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<HopfData> {
        if labels.len() != self.dim {
            return Err(HopfError::DimensionMismatch("label count".into()));
        }
        let mut h = self.clone();
        h.labels = labels;
        Ok(h)
    }

    /// Same data with a lower declared level (drops tables not needed).
    pub fn with_level(&self, level: Level) -> Result<HopfData> {
        self.need(level)?;
        let mut h = self.clone();
        h.level = level;
        if !level.has_algebra() {
            h.mult = None;
            h.unit = None;
        }
        if !level.has_coalgebra() {
            h.comult = None;
            h.counit = None;
        }
        if level != Level::Hopf {
            h.antipode = None;
        }
        Ok(h)
    }
}

/// Cyclic group ℤ_m multiplication table with generator label `g`.
pub fn cyclic_table(m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect()
}

pub fn cyclic_labels(m: usize, g: &str) -> Vec<String> {
    (0..m)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => g.to_string(),
            _ => format!("{g}^{k}"),
        })
        .collect()
}
