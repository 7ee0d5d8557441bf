//! Multigraphs, vertex orders, orientations and the instance types built on them.
//!
//! Vertices are `0..n`, edges `0..m`. Parallel edges are distinct by id; loops are rejected.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use crate::error::{OrientError, Result};

/// Undirected multigraph with dense vertex and edge ids.
#[derive(Debug, Clone)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
    // (neighbor, edge id), in edge-id order
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for MultiGraph {
    // labels are display-only
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(OrientError::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(OrientError::InvalidVertex {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(OrientError::LoopEdge { edge: id, vertex: u });
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        let labels = (1..=vertex_count).map(|i| i.to_string()).collect();
        Ok(Self {
            vertex_count,
            edges,
            labels,
            adjacency,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(OrientError::LengthMismatch {
                expected: self.vertex_count,
                actual: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Incident `(neighbor, edge id)` pairs of `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adjacency[u].iter().filter(|&&(w, _)| w == v).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = vec![usize::MAX; self.vertex_count];
        for v in 0..self.vertex_count {
            for &(w, _) in &self.adjacency[v] {
                if seen[w] == v {
                    return false;
                }
                seen[w] = v;
            }
        }
        true
    }

    /// Distinct neighbors of `v` in ascending order.
    pub fn simple_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adjacency[v].iter().map(|&(w, _)| w).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(OrientError::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Number of edges between `v` and vertices satisfying `in_set`.
    pub fn degree_into(&self, v: usize, in_set: impl Fn(usize) -> bool) -> usize {
        self.adjacency[v].iter().filter(|&&(w, _)| in_set(w)).count()
    }

    /// Lowest-id vertex not reachable from vertex 0, if any.
    pub fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    /// `None` when `vertices` is empty.
    pub fn induced(&self, vertices: &[usize]) -> Option<MultiGraph> {
        if vertices.is_empty() {
            return None;
        }
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let sub = MultiGraph::new(vertices.len(), edges)
            .and_then(|g| g.with_labels(labels))
            .expect("induced subgraph of a valid graph");
        Some(sub)
    }
}

/// `d(v, Y)`: edges joining `v` to members of `set`, counted with multiplicity.
pub fn cut_degree(graph: &MultiGraph, v: usize, set: &[usize]) -> Result<usize> {
    graph.check_vertex(v)?;
    let mut member = vec![false; graph.vertex_count()];
    for &y in set {
        graph.check_vertex(y)?;
        member[y] = true;
    }
    Ok(graph.degree_into(v, |w| member[w]))
}

/// A permutation of the vertex set together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(OrientError::NotAPermutation);
            }
            position[v] = i;
        }
        Ok(Self { order, position })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.position[u] < self.position[v]
    }

    pub fn reversed(&self) -> Self {
        let order: Vec<usize> = self.order.iter().rev().copied().collect();
        Self::new(order).expect("reversal of a permutation")
    }
}

/// Direction assigned to every edge, stored as `(tail, head)` per edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
    indegree: Vec<usize>,
    outdegree: Vec<usize>,
}

impl Orientation {
    pub fn new(graph: &MultiGraph, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if arcs.len() != graph.edge_count() {
            return Err(OrientError::LengthMismatch {
                expected: graph.edge_count(),
                actual: arcs.len(),
            });
        }
        let n = graph.vertex_count();
        let mut indegree = vec![0; n];
        let mut outdegree = vec![0; n];
        for (edge, &(tail, head)) in arcs.iter().enumerate() {
            let (u, v) = graph.endpoints(edge);
            if !((tail, head) == (u, v) || (tail, head) == (v, u)) {
                return Err(OrientError::ArcMismatch { edge });
            }
            outdegree[tail] += 1;
            indegree[head] += 1;
        }
        Ok(Self {
            arcs,
            indegree,
            outdegree,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.indegree.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, edge: usize) -> (usize, usize) {
        self.arcs[edge]
    }

    /// `ρ(v)`
    pub fn indegree(&self, v: usize) -> usize {
        self.indegree[v]
    }

    /// `δ(v)`
    pub fn outdegree(&self, v: usize) -> usize {
        self.outdegree[v]
    }
}

/// Orient every edge from its earlier endpoint to its later one.
pub fn orientation_from_order(graph: &MultiGraph, order: &VertexOrder) -> Result<Orientation> {
    if order.len() != graph.vertex_count() {
        return Err(OrientError::LengthMismatch {
            expected: graph.vertex_count(),
            actual: order.len(),
        });
    }
    let arcs = graph
        .edges()
        .iter()
        .map(|&(u, v)| if order.precedes(u, v) { (u, v) } else { (v, u) })
        .collect();
    Orientation::new(graph, arcs)
}

/// Kahn's algorithm, always taking the lowest-id current source.
///
/// Fails with [`OrientError::Cycle`] carrying a directed cycle `v0 -> v1 -> ... -> v0`.
pub fn topological_order(graph: &MultiGraph, orientation: &Orientation) -> Result<VertexOrder> {
    let n = graph.vertex_count();
    if orientation.vertex_count() != n || orientation.arcs().len() != graph.edge_count() {
        return Err(OrientError::LengthMismatch {
            expected: graph.edge_count(),
            actual: orientation.arcs().len(),
        });
    }
    let mut out_arcs = vec![Vec::new(); n];
    let mut remaining_in = vec![0usize; n];
    for &(tail, head) in orientation.arcs() {
        out_arcs[tail].push(head);
        remaining_in[head] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| remaining_in[v] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &w in &out_arcs[v] {
            remaining_in[w] -= 1;
            if remaining_in[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    if order.len() == n {
        return VertexOrder::new(order);
    }

    // Every unplaced vertex has an in-arc from another unplaced vertex; walk them backwards.
    let mut in_arcs = vec![Vec::new(); n];
    for &(tail, head) in orientation.arcs() {
        if remaining_in[head] > 0 && remaining_in[tail] > 0 {
            in_arcs[head].push(tail);
        }
    }
    let start = (0..n).find(|&v| remaining_in[v] > 0).expect("unplaced vertex");
    let mut visited_at = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut v = start;
    while visited_at[v] == usize::MAX {
        visited_at[v] = walk.len();
        walk.push(v);
        v = *in_arcs[v].iter().min().expect("unplaced vertex has unplaced predecessor");
    }
    let mut cycle: Vec<usize> = walk[visited_at[v]..].to_vec();
    cycle.reverse();
    Err(OrientError::Cycle { cycle })
}

/// Per-vertex indegree lower bound `f` and outdegree lower bound `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBounds {
    f: Vec<usize>,
    g: Vec<usize>,
}

impl DegreeBounds {
    pub fn new(graph: &MultiGraph, f: Vec<usize>, g: Vec<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        for len in [f.len(), g.len()] {
            if len != n {
                return Err(OrientError::LengthMismatch {
                    expected: n,
                    actual: len,
                });
            }
        }
        for v in 0..n {
            let degree = graph.degree(v);
            if f[v] + g[v] > degree {
                return Err(OrientError::BoundsExceedDegree {
                    vertex: v,
                    f: f[v],
                    g: g[v],
                    degree,
                });
            }
        }
        Ok(Self { f, g })
    }

    pub fn zero(graph: &MultiGraph) -> Self {
        let n = graph.vertex_count();
        Self {
            f: vec![0; n],
            g: vec![0; n],
        }
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    pub fn is_strict(&self, graph: &MultiGraph, v: usize) -> bool {
        self.f[v] + self.g[v] == graph.degree(v)
    }

    pub fn all_strict(&self, graph: &MultiGraph) -> bool {
        (0..self.f.len()).all(|v| self.is_strict(graph, v))
    }

    pub fn lower_only(&self) -> bool {
        self.g.iter().all(|&g| g == 0)
    }

    pub fn disjoint(&self) -> bool {
        self.f.iter().zip(&self.g).all(|(&f, &g)| f == 0 || g == 0)
    }
}

/// A graph with (f,g) bounds: the degree constrained acyclic orientation problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DcaopInstance {
    pub graph: MultiGraph,
    pub bounds: DegreeBounds,
}

impl DcaopInstance {
    pub fn new(graph: MultiGraph, f: Vec<usize>, g: Vec<usize>) -> Result<Self> {
        let bounds = DegreeBounds::new(&graph, f, g)?;
        Ok(Self { graph, bounds })
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}

/// Orientation problem with `k` arc-disjoint paths from `s` and `l` into `t` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pr1Instance {
    pub graph: MultiGraph,
    pub s: usize,
    pub t: usize,
    pub k: usize,
    pub l: usize,
}

impl Pr1Instance {
    pub fn new(graph: MultiGraph, s: usize, t: usize, k: usize, l: usize) -> Result<Self> {
        graph.check_vertex(s)?;
        graph.check_vertex(t)?;
        if s == t {
            return Err(OrientError::SameTerminals);
        }
        if k == 0 || l == 0 {
            return Err(OrientError::NonPositiveDemand);
        }
        Ok(Self { graph, s, t, k, l })
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        v == self.s || v == self.t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    /// No member `x` has `f(x) <= d(x, V \ X)`.
    Indegree,
    /// No member `x` has `g(x) <= d(x, V \ X)`.
    Outdegree,
}

/// A vertex set with no potential source (or, on the outdegree side, no potential sink).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationCertificate {
    pub violating_set: Vec<usize>,
    pub side: BoundSide,
}

impl ViolationCertificate {
    pub fn is_valid(&self, graph: &MultiGraph, bounds: &DegreeBounds) -> bool {
        if self.violating_set.is_empty() {
            return false;
        }
        let mut member = vec![false; graph.vertex_count()];
        for &x in &self.violating_set {
            if x >= member.len() {
                return false;
            }
            member[x] = true;
        }
        let need = match self.side {
            BoundSide::Indegree => bounds.f(),
            BoundSide::Outdegree => bounds.g(),
        };
        self.violating_set
            .iter()
            .all(|&x| need[x] > graph.degree_into(x, |w| !member[w]))
    }
}
