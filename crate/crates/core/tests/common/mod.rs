#![allow(dead_code)]

use std::collections::HashSet;

use acyclic_orient::{DcaopInstance, MultiGraph};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut mapped: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            mapped.sort_unstable();
            mapped
        })
        .min()
        .expect("at least one permutation")
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut components = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components <= 1
}

/// Every graph on `n` vertices whose edge multiset (pair indices non-decreasing) has at most
/// `max_edges` members and each pair at most `max_multiplicity` times, one per isomorphism class.
pub fn graphs_up_to_iso(n: usize, max_edges: usize, max_multiplicity: usize, require_connected: bool) -> Vec<MultiGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, Vec::new())];
    while let Some((start, edges)) = stack.pop() {
        if (!require_connected || connected(n, &edges)) && seen.insert(canonical(&edges, &perms)) {
            out.push(MultiGraph::new(n, edges.clone()).unwrap());
        }
        if edges.len() == max_edges {
            continue;
        }
        for (i, &pair) in pairs.iter().enumerate().skip(start) {
            if edges.iter().filter(|&&e| e == pair).count() < max_multiplicity {
                let mut next = edges.clone();
                next.push(pair);
                stack.push((i, next));
            }
        }
    }
    out
}

/// Connected multigraphs with `n <= 5`, `m <= 8`, one per isomorphism class.
pub fn small_multigraph_catalog() -> Vec<MultiGraph> {
    (1..=5).flat_map(|n| graphs_up_to_iso(n, 8, 8, true)).collect()
}

/// Simple graphs with `n` vertices, one per isomorphism class.
pub fn simple_graphs(n: usize, require_connected: bool) -> Vec<MultiGraph> {
    graphs_up_to_iso(n, n * (n.saturating_sub(1)) / 2, 1, require_connected)
}

/// Every vector `f` with `0 <= f[v] <= bound[v]`.
pub fn all_vectors_below(bound: &[usize]) -> Vec<Vec<usize>> {
    bound.iter().map(|&b| 0..=b).multi_cartesian_product().collect()
}

/// Try every permutation; independent of the library's subset search.
pub fn brute_force_feasible(graph: &MultiGraph, f: &[usize], g: &[usize]) -> bool {
    let n = graph.vertex_count();
    (0..n).permutations(n).any(|order| {
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        (0..n).all(|v| {
            let before = graph
                .incident(v)
                .iter()
                .filter(|&&(w, _)| position[w] < position[v])
                .count();
            before >= f[v] && graph.degree(v) - before >= g[v]
        })
    })
}

/// Random multigraph on `n` vertices with `m` edges; connected when `m >= n - 1`.
pub fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> MultiGraph {
    let mut edges = Vec::with_capacity(m);
    if n > 1 && m + 1 >= n {
        for v in 1..n {
            edges.push((rng.random_range(0..v), v));
        }
    }
    while n > 1 && edges.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    MultiGraph::new(n, edges).unwrap()
}

/// Bounds with `f(v) * g(v) = 0` and `f + g <= d`.
pub fn random_disjoint_bounds(rng: &mut ChaCha8Rng, graph: &MultiGraph) -> DcaopInstance {
    let (mut f, mut g) = (Vec::new(), Vec::new());
    for d in graph.degrees() {
        let value = rng.random_range(0..=d);
        match rng.random_range(0..3) {
            0 => {
                f.push(value);
                g.push(0)
            }
            1 => {
                f.push(0);
                g.push(value)
            }
            _ => {
                f.push(0);
                g.push(0)
            }
        }
    }
    DcaopInstance::new(graph.clone(), f, g).unwrap()
}

/// Arbitrary bounds with `f + g <= d`.
pub fn random_bounds(rng: &mut ChaCha8Rng, graph: &MultiGraph) -> DcaopInstance {
    let (mut f, mut g) = (Vec::new(), Vec::new());
    for d in graph.degrees() {
        let lower = rng.random_range(0..=d);
        f.push(lower);
        g.push(rng.random_range(0..=d - lower));
    }
    DcaopInstance::new(graph.clone(), f, g).unwrap()
}

/// Biconnected in the sense of having no cut vertex and being connected (`K2` counts).
pub fn is_biconnected(graph: &MultiGraph) -> bool {
    let n = graph.vertex_count();
    if !graph.is_connected() {
        return false;
    }
    (0..n).all(|removed| {
        let rest: Vec<usize> = (0..n).filter(|&v| v != removed).collect();
        match graph.induced(&rest) {
            Some(sub) => sub.is_connected(),
            None => true,
        }
    })
}

pub fn with_edge(graph: &MultiGraph, u: usize, v: usize) -> MultiGraph {
    let mut edges = graph.edges().to_vec();
    edges.push((u, v));
    MultiGraph::new(graph.vertex_count(), edges).unwrap()
}
