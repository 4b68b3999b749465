//! The based ring `ℤ𝒮` spanned by the simple subcoalgebras of a Hopf algebra
//! whose coradical is a subalgebra: structure constants, axioms, the
//! Frobenius–Perron dimension identity, arrow counts, and generation.
//!
//! Multiplicities come from characters: the cocommutative line of a simple
//! block `D ≅ M_r(k)*` is spanned by its character `χ_D` (normalised to
//! `ε(χ_D) = r`), and `χ_B χ_C = Σ_t α_t χ_t`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coradical::{coradical, simple_decomposition, SimpleBlock};
use crate::error::{HopfError, Result};
use crate::exactfield::Scalar;
use crate::linalg::{relations, scale_vec, solve, zero_vec, Subspace, Vector};
use crate::quiver::{one_sided_invariants, LinkQuiver};
use crate::tensorcore::{tensor_add, HopfData, Level, Tensor2};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simple {
    pub label: String,
    /// `r` with `dim = r²`.
    pub comatrix_dim: usize,
}

/// `C_i · C_j = Σ_t alpha[i][j][t] C_t`, with `i ↦ involution[i]` induced by
/// the antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRingTable {
    pub simples: Vec<Simple>,
    pub alpha: Vec<Vec<Vec<u64>>>,
    pub involution: Vec<usize>,
    pub unit: usize,
}

impl BasedRingTable {
    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.simples.iter().position(|s| s.label == label)
    }

    /// The product of two simples as `(index, multiplicity)` pairs.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u64)> {
        self.alpha[i][j].iter().enumerate().filter(|(_, &m)| m > 0).map(|(t, &m)| (t, m)).collect()
    }

    /// `{"simples": [...], "alpha": [[i,j,t,m],...], "involution": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut alpha = Vec::new();
        for (i, row) in self.alpha.iter().enumerate() {
            for (j, col) in row.iter().enumerate() {
                for (t, &m) in col.iter().enumerate() {
                    if m > 0 {
                        alpha.push([i as u64, j as u64, t as u64, m]);
                    }
                }
            }
        }
        serde_json::json!({
            "simples": self.simples,
            "alpha": alpha,
            "involution": self.involution,
            "unit": self.unit,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<BasedRingTable> {
        let perr = |e: serde_json::Error| HopfError::Parse(e.to_string());
        let simples: Vec<Simple> = serde_json::from_value(v["simples"].clone()).map_err(perr)?;
        let s = simples.len();
        let entries: Vec<[u64; 4]> = serde_json::from_value(v["alpha"].clone()).map_err(perr)?;
        let involution: Vec<usize> = serde_json::from_value(v["involution"].clone()).map_err(perr)?;
        let unit = match v.get("unit") {
            Some(u) => serde_json::from_value(u.clone()).map_err(perr)?,
            None => 0,
        };
        if involution.len() != s || involution.iter().any(|&i| i >= s) || unit >= s.max(1) {
            return Err(HopfError::Parse("involution or unit out of range".into()));
        }
        let mut alpha = vec![vec![vec![0u64; s]; s]; s];
        for [i, j, t, m] in entries {
            let (i, j, t) = (i as usize, j as usize, t as usize);
            if i >= s || j >= s || t >= s {
                return Err(HopfError::Parse(format!("alpha entry ({i},{j},{t}) out of range")));
            }
            alpha[i][j][t] += m;
        }
        Ok(BasedRingTable { simples, alpha, involution, unit })
    }
}

/// `χ_D`: the cocommutative element of `D` with `ε(χ_D) = r`.
pub fn character(h: &HopfData, block: &SimpleBlock) -> Result<Vector> {
    let n = h.n();
    let basis = block.space.basis();
    let skew: Vec<_> = basis
        .iter()
        .map(|b| {
            let mut t = Tensor2::new();
            for ((x, y), c) in h.comul(b) {
                tensor_add(&mut t, (x, y), c.clone());
                tensor_add(&mut t, (y, x), -&c);
            }
            let d = h.dim();
            t.into_iter().map(|((x, y), c)| (x * d + y, c)).collect::<Vec<_>>()
        })
        .collect();
    let coc = relations(&skew, n);
    if coc.len() != 1 {
        return Err(HopfError::FieldTooSmall(format!(
            "block `{}` has a {}-dimensional cocommutative part; it is not split over Q(zeta_{n})",
            block.label,
            coc.len()
        )));
    }
    let mut y = zero_vec(n, h.dim());
    for (a, c) in coc[0].iter().enumerate() {
        if !c.is_zero() {
            crate::linalg::axpy(&mut y, c, &basis[a]);
        }
    }
    let e = h.counit_of(&y);
    let inv = e.inverse().ok_or_else(|| HopfError::BadHints(format!("block `{}` has a character of counit zero", block.label)))?;
    Ok(scale_vec(&y, &(&inv * &Scalar::from_int(n, block.comatrix_dim as i64))))
}

fn nonneg_int(s: &Scalar) -> Option<u64> {
    let q = s.as_integer()?;
    u64::try_from(q).ok()
}

/// `B · C` as a multiset of simples, given all blocks and their characters.
fn product_from_characters(h: &HopfData, h0: &Subspace, blocks: &[SimpleBlock], chars: &[Vector], i: usize, j: usize) -> Result<Vec<u64>> {
    let (n, d) = (h.n(), h.dim());
    for x in blocks[i].space.basis() {
        for y in blocks[j].space.basis() {
            if !h0.contains(&h.mul(x, y)) {
                return Err(HopfError::ChevalleyViolation(format!("{}·{} leaves the coradical", blocks[i].label, blocks[j].label)));
            }
        }
    }
    let prod = h.mul(&chars[i], &chars[j]);
    let s = blocks.len();
    let rows: Vec<Vector> = (0..d).map(|k| (0..s).map(|t| chars[t][k].clone()).collect()).collect();
    let coeffs = solve(&rows, &prod, s, n).ok_or_else(|| {
        HopfError::ChevalleyViolation(format!("χ({})χ({}) is not a combination of characters", blocks[i].label, blocks[j].label))
    })?;
    coeffs
        .iter()
        .map(|c| {
            nonneg_int(c).ok_or_else(|| {
                HopfError::BadHints(format!(
                    "multiplicity {c} in {}·{} is not a nonnegative integer",
                    blocks[i].label, blocks[j].label
                ))
            })
        })
        .collect()
}

/// `B · C` for two blocks of `h` (all simples are decomposed first).
pub fn simple_product(h: &HopfData, b: &SimpleBlock, c: &SimpleBlock) -> Result<Vec<(SimpleBlock, u64)>> {
    let h0 = coradical(h)?;
    let blocks = simple_decomposition(h, &h0, None)?;
    let find = |x: &SimpleBlock| {
        blocks.iter().position(|y| y.space == x.space).ok_or_else(|| HopfError::BadHints(format!("`{}` is not a simple block", x.label)))
    };
    let (i, j) = (find(b)?, find(c)?);
    let chars = blocks.iter().map(|x| character(h, x)).collect::<Result<Vec<_>>>()?;
    let row = product_from_characters(h, &h0, &blocks, &chars, i, j)?;
    Ok(row.into_iter().enumerate().filter(|(_, m)| *m > 0).map(|(t, m)| (blocks[t].clone(), m)).collect())
}

pub fn build_based_ring(h: &HopfData, hints: Option<&[(Option<String>, Subspace)]>) -> Result<BasedRingTable> {
    let h0 = coradical(h)?;
    let blocks = simple_decomposition(h, &h0, hints)?;
    build_based_ring_from_blocks(h, &h0, &blocks)
}

/// The table on a given decomposition of the coradical `h0`.
pub fn build_based_ring_from_blocks(h: &HopfData, h0: &Subspace, blocks: &[SimpleBlock]) -> Result<BasedRingTable> {
    if h.level() != Level::Hopf {
        return Err(HopfError::MissingStructure("the based ring needs an antipode".into()));
    }
    let s = blocks.len();
    let chars = blocks.iter().map(|b| character(h, b)).collect::<Result<Vec<_>>>()?;
    let one = h.unit_elem()?;
    let unit = blocks.iter().position(|b| b.space.contains(&one)).ok_or(HopfError::MissingTrivialVertex)?;
    let rows: Vec<Result<Vec<Vec<u64>>>> = (0..s)
        .into_par_iter()
        .map(|i| (0..s).map(|j| product_from_characters(h, h0, blocks, &chars, i, j)).collect())
        .collect();
    let alpha = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let involution = chars
        .iter()
        .map(|c| {
            let sc = h.antipode_of(c);
            chars.iter().position(|x| *x == sc).ok_or_else(|| HopfError::BadHints("the antipode does not permute the characters".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let simples = blocks.iter().map(|b| Simple { label: b.label.clone(), comatrix_dim: b.comatrix_dim }).collect();
    Ok(BasedRingTable { simples, alpha, involution, unit })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasedCheck {
    pub name: String,
    pub pass: bool,
    /// First offending index tuple.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasedReport {
    pub checks: Vec<BasedCheck>,
}

impl BasedReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}

fn based_check(name: &str, witness: Option<Vec<usize>>) -> BasedCheck {
    BasedCheck { name: name.into(), pass: witness.is_none(), witness }
}

fn triples(s: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..s).flat_map(move |i| (0..s).flat_map(move |j| (0..s).map(move |k| (i, j, k))))
}

/// Associativity, unit, anti-involution, `τ`-duality and dimension count.
pub fn verify_based_axioms(t: &BasedRingTable) -> BasedReport {
    let s = t.len();
    let a = &t.alpha;
    let r: Vec<u64> = t.simples.iter().map(|x| x.comatrix_dim as u64).collect();
    let assoc = triples(s)
        .flat_map(|(i, j, k)| (0..s).map(move |u| (i, j, k, u)))
        .find(|&(i, j, k, u)| {
            let left: u64 = (0..s).map(|m| a[i][j][m] * a[m][k][u]).sum();
            let right: u64 = (0..s).map(|m| a[j][k][m] * a[i][m][u]).sum();
            left != right
        })
        .map(|(i, j, k, u)| vec![i, j, k, u]);
    let unit = (0..s)
        .flat_map(|j| (0..s).map(move |u| (j, u)))
        .find(|&(j, u)| {
            let want = u64::from(j == u);
            a[t.unit][j][u] != want || a[j][t.unit][u] != want
        })
        .map(|(j, u)| vec![j, u]);
    let inv = &t.involution;
    let involution = (0..s)
        .find(|&i| inv[inv[i]] != i)
        .map(|i| vec![i])
        .or_else(|| triples(s).find(|&(i, j, u)| a[i][j][u] != a[inv[j]][inv[i]][inv[u]]).map(|(i, j, u)| vec![i, j, u]));
    let tau = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .find(|&(i, j)| a[i][j][t.unit] != u64::from(j == inv[i]))
        .map(|(i, j)| vec![i, j]);
    let dims = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .find(|&(i, j)| (0..s).map(|u| a[i][j][u] * r[u]).sum::<u64>() != r[i] * r[j])
        .map(|(i, j)| vec![i, j]);
    BasedReport {
        checks: vec![
            based_check("associativity", assoc),
            based_check("unit", unit),
            based_check("anti_involution", involution),
            based_check("tau_duality", tau),
            based_check("dimension_count", dims),
        ],
    }
}

/// `r_k · Σ_i r_i = Σ_i r_i β_{ik}` with `β_{ik} = Σ_t α_{ik}^t`.
pub fn verify_fpequation(t: &BasedRingTable, k: usize) -> bool {
    let r: Vec<u64> = t.simples.iter().map(|x| x.comatrix_dim as u64).collect();
    let left = r[k] * r.iter().sum::<u64>();
    let right: u64 = (0..t.len()).map(|i| r[i] * t.alpha[i][k].iter().sum::<u64>()).sum();
    left == right
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ArrowConsistency {
    NotApplicable {
        reason: String,
    },
    Evaluated {
        /// The unique simple with an arrow into the unit.
        k: usize,
        /// `(t, i, arrows t → i, α_{ik}^t)` where they differ.
        arrow_mismatches: Vec<(usize, usize, usize, u64)>,
        /// `(i, t)` with `α_{ik}^t ≠ α_{tk*}^i`.
        symmetry_failures: Vec<(usize, usize)>,
        all_pass: bool,
    },
}

/// Arrow multiplicities against `α_{ik}^t`, when `|¹𝒫| = 1`. The quiver and
/// the table must list the same simples in the same order.
pub fn verify_arrow_consistency(t: &BasedRingTable, q: &LinkQuiver) -> ArrowConsistency {
    let na = |reason: &str| ArrowConsistency::NotApplicable { reason: reason.into() };
    let os = match one_sided_invariants(q) {
        Ok(os) => os,
        Err(_) => return na("the quiver has no unit vertex"),
    };
    if os.into_unit != 1 {
        return na(&format!("|1P| = {} (needs exactly one arrow into the unit)", os.into_unit));
    }
    let same = q.vertices.len() == t.len()
        && q.vertices.iter().zip(&t.simples).all(|(v, s)| v.label == s.label && v.comatrix_dim == s.comatrix_dim);
    if !same {
        return na("the quiver and the table list different simples");
    }
    let k = os.into_sources[0].0;
    let s = t.len();
    let a = &t.alpha;
    let kstar = t.involution[k];
    let mut arrow_mismatches = Vec::new();
    let mut symmetry_failures = Vec::new();
    for tt in 0..s {
        for i in 0..s {
            let arrows = q.arrows.get(&(tt, i)).copied().unwrap_or(0);
            if arrows as u64 != a[i][k][tt] {
                arrow_mismatches.push((tt, i, arrows, a[i][k][tt]));
            }
            if a[i][k][tt] != a[tt][kstar][i] {
                symmetry_failures.push((i, tt));
            }
        }
    }
    let all_pass = arrow_mismatches.is_empty() && symmetry_failures.is_empty();
    ArrowConsistency::Evaluated { k, arrow_mismatches, symmetry_failures, all_pass }
}

/// Whether the unit, multiplied on the left by members of `one_s` and their
/// duals, reaches every simple.
pub fn generation_connectivity(t: &BasedRingTable, one_s: &[usize]) -> bool {
    let gens: BTreeSet<usize> = one_s.iter().flat_map(|&c| [c, t.involution[c]]).collect();
    let mut reached: BTreeSet<usize> = [t.unit].into_iter().collect();
    let mut frontier = vec![t.unit];
    while let Some(x) = frontier.pop() {
        for &c in &gens {
            for (y, _) in t.product(c, x) {
                if reached.insert(y) {
                    frontier.push(y);
                }
            }
        }
    }
    reached.len() == t.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowDivisibility {
    /// `|¹𝒫|`, the number of arrows into the unit.
    pub into_unit: usize,
    /// `(vertex, |^𝒞𝒫|)`: arrows into each vertex.
    pub into_counts: Vec<(usize, usize)>,
    /// Vertices whose count is not a multiple of `|¹𝒫|`.
    pub failures: Vec<usize>,
    pub all_divide: bool,
}

/// Whether `|¹𝒫|` divides `|^𝒞𝒫|` for every vertex `C`. Known to hold for
/// finite and tame inputs only; callers decide how to treat wild ones.
pub fn arrow_divisibility(q: &LinkQuiver) -> Result<ArrowDivisibility> {
    let into_unit = one_sided_invariants(q)?.into_unit;
    let into_counts: Vec<(usize, usize)> = (0..q.vertices.len())
        .map(|c| (c, q.arrows.iter().filter(|((_, t), _)| *t == c).map(|(_, &m)| m).sum()))
        .collect();
    let failures: Vec<usize> = match into_unit {
        0 => Vec::new(),
        p => into_counts.iter().filter(|(_, n)| n % p != 0).map(|&(c, _)| c).collect(),
    };
    Ok(ArrowDivisibility { into_unit, all_divide: failures.is_empty(), into_counts, failures })
}

/// Sources of arrows into the unit vertex.
pub fn one_s_of(q: &LinkQuiver) -> Result<Vec<usize>> {
    Ok(one_sided_invariants(q)?.into_sources.into_iter().map(|(v, _)| v).collect())
}
