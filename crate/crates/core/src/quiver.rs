//! Link quivers, the one-sided invariants at the trivial vertex, separated
//! quivers, Tits-form classification and the corepresentation-type verdict.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::coradical::{coradical, simple_decomposition, wedge, SimpleBlock};
use crate::error::{HopfError, Result};
use crate::linalg::Subspace;
use crate::tensorcore::HopfData;

/// Vertices are simple subcoalgebras; `arrows[(from, to)]` is a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkQuiver {
    pub vertices: Vec<Vertex>,
    #[serde(serialize_with = "arrow_list")]
    pub arrows: BTreeMap<(usize, usize), usize>,
    /// Index of the vertex containing the unit, when there is one.
    pub trivial: Option<usize>,
    #[serde(skip)]
    pub blocks: Vec<SimpleBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub label: String,
    pub comatrix_dim: usize,
}

impl Vertex {
    pub fn dim(&self) -> usize {
        self.comatrix_dim * self.comatrix_dim
    }
}

fn arrow_list<S: Serializer>(a: &BTreeMap<(usize, usize), usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<[usize; 3]> = a.iter().map(|(&(f, t), &m)| [f, t, m]).collect();
    v.serialize(s)
}

/// Link quiver of a coalgebra from its simple blocks (computed, or the
/// verified `hints`).
pub fn link_quiver(h: &HopfData, hints: Option<&[(Option<String>, Subspace)]>) -> Result<LinkQuiver> {
    let h0 = coradical(h)?;
    let blocks = simple_decomposition(h, &h0, hints)?;
    link_quiver_from_blocks(h, blocks)
}

pub fn link_quiver_from_blocks(h: &HopfData, blocks: Vec<SimpleBlock>) -> Result<LinkQuiver> {
    let v = blocks.len();
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|d| (0..v).map(move |c| (d, c))).collect();
    let counts: Vec<Result<((usize, usize), usize)>> = pairs
        .par_iter()
        .map(|&(d, c)| {
            // arrows from D to C: (C ∧ D) / (C + D)
            let (cs, ds) = (&blocks[c].space, &blocks[d].space);
            let w = wedge(h, cs, ds)?;
            let base = cs.sum(ds).rank();
            let extra = w.rank() - base;
            let rs = blocks[c].comatrix_dim * blocks[d].comatrix_dim;
            if extra % rs != 0 {
                return Err(HopfError::DivisibilityViolation {
                    from: blocks[d].label.clone(),
                    to: blocks[c].label.clone(),
                    dim: extra,
                    rs,
                });
            }
            Ok(((d, c), extra / rs))
        })
        .collect();
    let mut arrows = BTreeMap::new();
    for r in counts {
        let (k, m) = r?;
        if m > 0 {
            arrows.insert(k, m);
        }
    }
    let trivial = match h.unit_elem() {
        Ok(one) => blocks.iter().position(|b| b.space.contains(&one)),
        Err(_) => None,
    };
    let vertices = blocks.iter().map(|b| Vertex { label: b.label.clone(), comatrix_dim: b.comatrix_dim }).collect();
    Ok(LinkQuiver { vertices, arrows, trivial, blocks })
}

/// `|¹𝒫|`, `¹𝒮`, `|𝒫¹|`, `𝒮¹` at the trivial vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneSided {
    pub into_unit: usize,
    /// Source vertices of arrows into the unit vertex, with multiplicity.
    pub into_sources: Vec<(usize, usize)>,
    pub out_of_unit: usize,
    pub out_targets: Vec<(usize, usize)>,
    pub balanced: bool,
}

pub fn one_sided_invariants(q: &LinkQuiver) -> Result<OneSided> {
    let one = q.trivial.ok_or(HopfError::MissingTrivialVertex)?;
    let into_sources: Vec<(usize, usize)> = q.arrows.iter().filter(|((_, t), _)| *t == one).map(|(&(f, _), &m)| (f, m)).collect();
    let out_targets: Vec<(usize, usize)> = q.arrows.iter().filter(|((f, _), _)| *f == one).map(|(&(_, t), &m)| (t, m)).collect();
    let into_unit = into_sources.iter().map(|x| x.1).sum();
    let out_of_unit = out_targets.iter().map(|x| x.1).sum();
    Ok(OneSided { into_unit, into_sources, out_of_unit, out_targets, balanced: into_unit == out_of_unit })
}

/// Undirected multigraph; `edges[(a, b)]` with `a ≤ b` (loops have `a == b`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    pub labels: Vec<String>,
    #[serde(serialize_with = "arrow_list")]
    pub edges: BTreeMap<(usize, usize), usize>,
}

impl Multigraph {
    pub fn new(labels: Vec<String>) -> Self {
        Multigraph { labels, edges: BTreeMap::new() }
    }

    pub fn add_edge(&mut self, a: usize, b: usize, m: usize) {
        if m > 0 {
            *self.edges.entry((a.min(b), a.max(b))).or_insert(0) += m;
        }
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in self.edges.keys() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..n {
            let r = find(&mut parent, x);
            comps.entry(r).or_default().push(x);
        }
        comps.into_values().collect()
    }

    /// The induced subgraph on `verts`, renumbered in order.
    pub fn induced(&self, verts: &[usize]) -> Multigraph {
        let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Multigraph::new(verts.iter().map(|&v| self.labels[v].clone()).collect());
        for (&(a, b), &m) in &self.edges {
            if let (Some(&x), Some(&y)) = (pos.get(&a), pos.get(&b)) {
                g.add_edge(x, y, m);
            }
        }
        g
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{}\"];\n", escape(l)));
        }
        for (&(a, b), &m) in &self.edges {
            s.push_str(&format!("  v{a} -- v{b} [multiplicity={m}, label=\"{m}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Vertices `0..n` (unprimed) and `n..2n` (primed); an edge `i — j′` per arrow.
pub fn separated_quiver(q: &LinkQuiver) -> Multigraph {
    let n = q.vertices.len();
    let mut labels: Vec<String> = q.vertices.iter().map(|v| v.label.clone()).collect();
    labels.extend(q.vertices.iter().map(|v| format!("{}'", v.label)));
    let mut g = Multigraph::new(labels);
    for (&(f, t), &m) in &q.arrows {
        g.add_edge(f, n + t, m);
    }
    g
}

impl LinkQuiver {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph link_quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{} ({})\"];\n", escape(&v.label), v.dim()));
        }
        for (&(f, t), &m) in &self.arrows {
            s.push_str(&format!("  v{f} -> v{t} [multiplicity={m}, label=\"{m}\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    /// Whether the underlying undirected graph is connected.
    pub fn is_connected(&self) -> bool {
        let mut g = Multigraph::new(self.vertices.iter().map(|v| v.label.clone()).collect());
        for (&(f, t), &m) in &self.arrows {
            g.add_edge(f, t, m);
        }
        g.components().len() <= 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphClass {
    Dynkin,
    Euclidean,
    Neither,
}

/// Classify a connected multigraph by its Tits form
/// `q(x) = Σ xᵢ² − Σ_edges xᵢxⱼ` (a loop contributes `−xᵢ²`).
pub fn classify_graph(g: &Multigraph) -> GraphClass {
    let n = g.labels.len();
    // matrix of 2q
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = BigRational::from_integer(BigInt::from(2));
    }
    for (&(x, y), &m) in &g.edges {
        let m = BigRational::from_integer(BigInt::from(m as i64));
        if x == y {
            a[x][x] -= &m + &m;
        } else {
            a[x][y] -= &m;
            a[y][x] -= &m;
        }
    }
    match psd_nullity(a) {
        None => GraphClass::Neither,
        Some(0) => GraphClass::Dynkin,
        Some(1) => GraphClass::Euclidean,
        Some(_) => GraphClass::Neither,
    }
}

/// Nullity of a symmetric rational matrix if it is positive semidefinite.
fn psd_nullity(mut a: Vec<Vec<BigRational>>) -> Option<usize> {
    let n = a.len();
    let mut nullity = 0;
    for k in 0..n {
        let p = a[k][k].clone();
        if p.is_negative() {
            return None;
        }
        if p.is_zero() {
            if (k + 1..n).any(|j| !a[k][j].is_zero()) {
                return None;
            }
            nullity += 1;
            continue;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Some(nullity)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TameCase {
    I,
    II,
    III,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Finite,
    TameCandidate(TameCase),
    Wild,
    Inconclusive,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::Finite => f.write_str("Finite"),
            RepKind::TameCandidate(TameCase::I) => f.write_str("TameCandidate(i)"),
            RepKind::TameCandidate(TameCase::II) => f.write_str("TameCandidate(ii)"),
            RepKind::TameCandidate(TameCase::III) => f.write_str("TameCandidate(iii)"),
            RepKind::Wild => f.write_str("Wild"),
            RepKind::Inconclusive => f.write_str("Inconclusive"),
        }
    }
}

impl Serialize for RepKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub vertices: Vec<String>,
    pub class: GraphClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    /// `|¹𝒫|`
    pub into_unit: usize,
    /// dims of `¹𝒮`, one entry per arrow
    pub into_dims: Vec<usize>,
    /// `|𝒫¹|`
    pub out_of_unit: usize,
    pub out_dims: Vec<usize>,
    pub components: Vec<ComponentClass>,
    /// Cross-check of the separated quiver against the verdict
    /// (advisory; `None` when no cross-check applies).
    pub separated_consistent: Option<bool>,
    /// `|¹𝒫| = |𝒫¹|`, checked only under the dual Chevalley property.
    pub balanced: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepTypeVerdict {
    pub kind: RepKind,
    pub evidence: Evidence,
}

/// Verdict from the one-sided invariants alone.
pub fn decide(into_dims: &[usize], total_arrows: usize) -> RepKind {
    match into_dims.len() {
        0 if total_arrows == 0 => RepKind::Finite,
        0 => RepKind::Inconclusive,
        1 => match into_dims[0] {
            1 => RepKind::Finite,
            4 => RepKind::TameCandidate(TameCase::II),
            d if d >= 9 => RepKind::Wild,
            _ => RepKind::Inconclusive,
        },
        2 => {
            if into_dims.iter().all(|&d| d == 1) {
                RepKind::TameCandidate(TameCase::I)
            } else if into_dims.iter().any(|&d| d >= 4) {
                RepKind::Wild
            } else {
                RepKind::Inconclusive
            }
        }
        _ => RepKind::Wild,
    }
}

#[derive(Clone, Debug, Default)]
pub struct RepTypeOptions<'a> {
    pub dual_chevalley: bool,
    pub hints: Option<&'a [(Option<String>, Subspace)]>,
}

/// Whether the coradical is closed under multiplication.
pub fn coradical_is_subalgebra(h: &HopfData, h0: &Subspace) -> bool {
    let b = h0.basis();
    b.par_iter().all(|x| b.iter().all(|y| h0.contains(&h.mul(x, y))))
}

pub fn corepresentation_type(h: &HopfData, opts: &RepTypeOptions) -> Result<(RepTypeVerdict, LinkQuiver)> {
    let q = link_quiver(h, opts.hints)?;
    let verdict = verdict_for_quiver(&q)?;
    let mut verdict = verdict;
    if opts.dual_chevalley {
        let h0 = coradical(h)?;
        if !coradical_is_subalgebra(h, &h0) {
            return Err(HopfError::ChevalleyViolation("the coradical is not closed under multiplication".into()));
        }
        verdict.evidence.balanced = Some(verdict.evidence.into_unit == verdict.evidence.out_of_unit);
    }
    Ok((verdict, q))
}

pub fn verdict_for_quiver(q: &LinkQuiver) -> Result<RepTypeVerdict> {
    let os = one_sided_invariants(q)?;
    let into_dims: Vec<usize> =
        os.into_sources.iter().flat_map(|&(v, m)| std::iter::repeat(q.vertices[v].dim()).take(m)).collect();
    let out_dims: Vec<usize> =
        os.out_targets.iter().flat_map(|&(v, m)| std::iter::repeat(q.vertices[v].dim()).take(m)).collect();
    let kind = decide(&into_dims, q.arrows.values().sum());
    let sep = separated_quiver(q);
    let components: Vec<ComponentClass> = sep
        .components()
        .into_iter()
        .map(|c| {
            let sub = sep.induced(&c);
            let class = classify_graph(&sub);
            ComponentClass { vertices: sub.labels, class }
        })
        .collect();
    let separated_consistent = match kind {
        RepKind::Finite => Some(components.iter().all(|c| c.class == GraphClass::Dynkin)),
        RepKind::TameCandidate(_) => Some(
            components.iter().all(|c| c.class != GraphClass::Neither)
                && components.iter().any(|c| c.class == GraphClass::Euclidean),
        ),
        RepKind::Wild => Some(components.iter().any(|c| c.class == GraphClass::Neither)),
        RepKind::Inconclusive => None,
    };
    Ok(RepTypeVerdict {
        kind,
        evidence: Evidence {
            into_unit: os.into_unit,
            into_dims,
            out_of_unit: os.out_of_unit,
            out_dims,
            components,
            separated_consistent,
            balanced: None,
        },
    })
}
