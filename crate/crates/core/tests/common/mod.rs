//! Shared oracles and synthetic inputs for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hopfscope::exactfield::Scalar;
use hopfscope::quiver::{GraphClass, LinkQuiver, Multigraph, Vertex};
use hopfscope::tensorcore::{HopfData, Level, Tables};

/// Classification of a connected multigraph by recognising ADE and
/// extended-ADE shapes directly.
pub fn shape_oracle(g: &Multigraph) -> GraphClass {
    let n = g.labels.len();
    if g.edges.keys().any(|&(a, b)| a == b) {
        let single_loop = n == 1 && g.edges.len() == 1 && g.edges[&(0, 0)] == 1;
        return if single_loop { GraphClass::Euclidean } else { GraphClass::Neither };
    }
    if g.edges.values().any(|&m| m >= 2) {
        let kronecker = n == 2 && g.edges.len() == 1 && g.edges.values().all(|&m| m == 2);
        return if kronecker { GraphClass::Euclidean } else { GraphClass::Neither };
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in g.edges.keys() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let deg: Vec<usize> = adj.iter().map(|v| v.len()).collect();
    let e = g.edges.len();
    if e == n {
        return if deg.iter().all(|&d| d == 2) { GraphClass::Euclidean } else { GraphClass::Neither };
    }
    if e != n - 1 {
        return GraphClass::Neither;
    }
    // trees
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => GraphClass::Dynkin,
        [c] if deg[*c] == 4 => {
            if n == 5 {
                GraphClass::Euclidean
            } else {
                GraphClass::Neither
            }
        }
        [c] if deg[*c] == 3 => {
            let mut legs: Vec<usize> = adj[*c].iter().map(|&s| leg_length(&adj, *c, s)).collect();
            legs.sort();
            match legs.as_slice() {
                [1, 1, _] | [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => GraphClass::Dynkin,
                [2, 2, 2] | [1, 3, 3] | [1, 2, 5] => GraphClass::Euclidean,
                _ => GraphClass::Neither,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |v: usize| adj[v].iter().filter(|&&w| deg[w] == 1).count();
            if leaves(*a) == 2 && leaves(*b) == 2 {
                GraphClass::Euclidean
            } else {
                GraphClass::Neither
            }
        }
        _ => GraphClass::Neither,
    }
}

/// Number of vertices on the branch starting at `start`, walking away from `from`.
fn leg_length(adj: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Every connected multigraph on `1..=max_v` vertices with total edge
/// multiplicity at most `max_mult` (loops included).
pub fn connected_multigraphs(max_v: usize, max_mult: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_v {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let mut mult = vec![0usize; pairs.len()];
        fill(&pairs, &mut mult, 0, max_mult, n, &mut out);
    }
    out
}

fn fill(pairs: &[(usize, usize)], mult: &mut [usize], k: usize, left: usize, n: usize, out: &mut Vec<Multigraph>) {
    if k == pairs.len() {
        let mut g = Multigraph::new((0..n).map(|i| format!("v{i}")).collect());
        for (p, &m) in pairs.iter().zip(mult.iter()) {
            g.add_edge(p.0, p.1, m);
        }
        if g.components().len() == 1 {
            out.push(g);
        }
        return;
    }
    for m in 0..=left {
        mult[k] = m;
        fill(pairs, mult, k + 1, left - m, n, out);
    }
    mult[k] = 0;
}

/// A quiver with the given 1-dimensional vertices (vertex 0 is the unit) and arrows.
pub fn synthetic_quiver(vertices: usize, arrows: &[((usize, usize), usize)]) -> LinkQuiver {
    LinkQuiver {
        vertices: (0..vertices)
            .map(|i| Vertex { label: if i == 0 { "1".into() } else { format!("g{i}") }, comatrix_dim: 1 })
            .collect(),
        arrows: arrows.iter().copied().collect::<BTreeMap<_, _>>(),
        trivial: Some(0),
        blocks: Vec::new(),
    }
}

/// The coalgebra dual to `k[x]/(x²)`: `1` group-like, `x` primitive; `1`
/// is recorded as the unit so the trivial vertex is known.
pub fn dual_numbers_coalgebra() -> HopfData {
    let one = || Scalar::one(1);
    HopfData::from_tables(
        1,
        vec!["1".into(), "x".into()],
        Level::Coalgebra,
        Tables {
            unit: Some(vec![one(), Scalar::zero(1)]),
            counit: Some(vec![one(), Scalar::zero(1)]),
            comult: Some(vec![(0, 0, 0, one()), (1, 0, 1, one()), (1, 1, 0, one())]),
            ..Tables::default()
        },
    )
    .expect("valid coalgebra")
}
