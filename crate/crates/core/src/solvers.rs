//! Polynomial-time constructions for the tractable bound classes.
//!
//! Every solver returns a vertex order on success; the orientation it induces
//! (edges from earlier to later vertex) is the witness.

use crate::error::{OrientError, Result};
use crate::graph::{BoundSide, DegreeBounds, MultiGraph, Pr1Instance, VertexOrder, ViolationCertificate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    /// A set with no potential source (or sink).
    Violation(ViolationCertificate),
    /// Strict bounds with `f(V) != |E|`.
    SumMismatch { f_total: usize, edge_count: usize },
    /// `G + st` has this cut vertex.
    CutVertex { vertex: usize },
    Disconnected { unreachable: usize },
    /// `f(v) + g(v) > d(v)` after deriving bounds.
    ImmediatelyInfeasible { vertex: usize },
    /// Exhaustive search found no order.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Feasible(VertexOrder),
    Infeasible(Infeasibility),
}

impl SolveResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveResult::Feasible(_))
    }

    pub fn order(&self) -> Option<&VertexOrder> {
        match self {
            SolveResult::Feasible(order) => Some(order),
            SolveResult::Infeasible(_) => None,
        }
    }
}

/// Repeatedly remove the lowest-id vertex whose residual indegree demand is zero.
///
/// Produces an order in which every vertex has at least `f(v)` earlier neighbors, or the
/// set of vertices left when no demand-free vertex remains.
pub fn greedy_min_indegree_orient(graph: &MultiGraph, f: &[usize]) -> Result<SolveResult> {
    let n = graph.vertex_count();
    if f.len() != n {
        return Err(OrientError::LengthMismatch {
            expected: n,
            actual: f.len(),
        });
    }
    if let Some(v) = (0..n).find(|&v| f[v] > graph.degree(v)) {
        return Err(OrientError::BoundsExceedDegree {
            vertex: v,
            f: f[v],
            g: 0,
            degree: graph.degree(v),
        });
    }
    let mut residual = f.to_vec();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let Some(v) = (0..n).find(|&v| !removed[v] && residual[v] == 0) else {
            let violating_set = (0..n).filter(|&v| !removed[v]).collect();
            return Ok(SolveResult::Infeasible(Infeasibility::Violation(
                ViolationCertificate {
                    violating_set,
                    side: BoundSide::Indegree,
                },
            )));
        };
        removed[v] = true;
        order.push(v);
        for &(w, _) in graph.incident(v) {
            residual[w] = residual[w].saturating_sub(1);
        }
    }
    Ok(SolveResult::Feasible(VertexOrder::new(order)?))
}

/// All vertices strict: feasible iff `f(V) = |E|` and the greedy succeeds on `f`.
pub fn solve_strict(graph: &MultiGraph, bounds: &DegreeBounds) -> Result<SolveResult> {
    if let Some(v) = (0..graph.vertex_count()).find(|&v| !bounds.is_strict(graph, v)) {
        return Err(OrientError::Precondition(format!(
            "vertex {v} is not strict"
        )));
    }
    let f_total: usize = bounds.f().iter().sum();
    if f_total != graph.edge_count() {
        return Ok(SolveResult::Infeasible(Infeasibility::SumMismatch {
            f_total,
            edge_count: graph.edge_count(),
        }));
    }
    greedy_min_indegree_orient(graph, bounds.f())
}

/// Bounds with `f(v) * g(v) = 0` everywhere.
///
/// Vertices with an outdegree demand go first (solved on `G[A]` by reversing a greedy
/// order), unconstrained vertices next, indegree-demand vertices last.
pub fn solve_disjoint_bounds(graph: &MultiGraph, bounds: &DegreeBounds) -> Result<SolveResult> {
    let n = graph.vertex_count();
    let (f, g) = (bounds.f(), bounds.g());
    if let Some(v) = (0..n).find(|&v| f[v] > 0 && g[v] > 0) {
        return Err(OrientError::Precondition(format!(
            "vertex {v} has both bounds positive"
        )));
    }
    let a: Vec<usize> = (0..n).filter(|&v| g[v] > 0).collect();
    let b: Vec<usize> = (0..n).filter(|&v| f[v] == 0 && g[v] == 0).collect();
    let c: Vec<usize> = (0..n).filter(|&v| f[v] > 0).collect();

    let mut order = Vec::with_capacity(n);
    if let Some(sub) = graph.induced(&a) {
        let demand = residual_demand(graph, &a, g);
        match greedy_min_indegree_orient(&sub, &demand)? {
            SolveResult::Feasible(local) => {
                order.extend(local.as_slice().iter().rev().map(|&i| a[i]));
            }
            SolveResult::Infeasible(reason) => {
                return Ok(SolveResult::Infeasible(lift(reason, &a, BoundSide::Outdegree)));
            }
        }
    }
    order.extend_from_slice(&b);
    if let Some(sub) = graph.induced(&c) {
        let demand = residual_demand(graph, &c, f);
        match greedy_min_indegree_orient(&sub, &demand)? {
            SolveResult::Feasible(local) => {
                order.extend(local.as_slice().iter().map(|&i| c[i]));
            }
            SolveResult::Infeasible(reason) => {
                return Ok(SolveResult::Infeasible(lift(reason, &c, BoundSide::Indegree)));
            }
        }
    }
    Ok(SolveResult::Feasible(VertexOrder::new(order)?))
}

// max(bound(v) - d(v, V \ part), 0) for v in part
fn residual_demand(graph: &MultiGraph, part: &[usize], bound: &[usize]) -> Vec<usize> {
    let mut member = vec![false; graph.vertex_count()];
    for &v in part {
        member[v] = true;
    }
    part.iter()
        .map(|&v| bound[v].saturating_sub(graph.degree_into(v, |w| !member[w])))
        .collect()
}

fn lift(reason: Infeasibility, part: &[usize], side: BoundSide) -> Infeasibility {
    match reason {
        Infeasibility::Violation(cert) => Infeasibility::Violation(ViolationCertificate {
            violating_set: cert.violating_set.iter().map(|&i| part[i]).collect(),
            side,
        }),
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StNumbering {
    Order(VertexOrder),
    NotBiconnected { cut_vertex: usize },
}

/// Depth-first data on the simple graph `G + st`, rooted at `s` with `t` as first child.
struct DfsTree {
    preorder: Vec<usize>,
    parent: Vec<usize>,
    // lowest preorder number reachable by tree descent plus one back edge
    low: Vec<usize>,
    number: Vec<usize>,
}

fn dfs_tree(adjacency: &[Vec<usize>], root: usize) -> DfsTree {
    let n = adjacency.len();
    let mut number = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut preorder = Vec::with_capacity(n);
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    number[root] = 0;
    low[root] = 0;
    preorder.push(root);
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if let Some(&w) = adjacency[v].get(top.1) {
            top.1 += 1;
            if number[w] == usize::MAX {
                number[w] = preorder.len();
                low[w] = number[w];
                parent[w] = v;
                preorder.push(w);
                stack.push((w, 0));
            } else if w != parent[v] {
                low[v] = low[v].min(number[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
            }
        }
    }
    DfsTree {
        preorder,
        parent,
        low,
        number,
    }
}

/// Order from `s` to `t` where every other vertex has an earlier and a later neighbor.
///
/// Exists iff `G + st` is biconnected; otherwise returns the lowest-id cut vertex of `G + st`.
/// Fails with [`OrientError::DisconnectedInput`] when `G + st` is disconnected.
pub fn st_numbering(graph: &MultiGraph, s: usize, t: usize) -> Result<StNumbering> {
    graph.check_vertex(s)?;
    graph.check_vertex(t)?;
    if s == t {
        return Err(OrientError::SameTerminals);
    }
    let n = graph.vertex_count();
    let mut adjacency: Vec<Vec<usize>> = (0..n).map(|v| graph.simple_neighbors(v)).collect();
    for (a, b) in [(s, t), (t, s)] {
        if !adjacency[a].contains(&b) {
            adjacency[a].push(b);
        }
    }
    // t is the first child of s
    adjacency[s].retain(|&w| w != t);
    adjacency[s].insert(0, t);

    let tree = dfs_tree(&adjacency, s);
    if let Some(unreachable) = (0..n).find(|&v| tree.number[v] == usize::MAX) {
        return Err(OrientError::DisconnectedInput { unreachable });
    }

    let mut root_children = 0;
    let mut is_cut = vec![false; n];
    for &v in &tree.preorder[1..] {
        let p = tree.parent[v];
        if p == s {
            root_children += 1;
        } else if tree.low[v] >= tree.number[p] {
            is_cut[p] = true;
        }
    }
    is_cut[s] = root_children > 1;
    if let Some(cut_vertex) = (0..n).find(|&v| is_cut[v]) {
        return Ok(StNumbering::NotBiconnected { cut_vertex });
    }

    // Signed-list construction over a doubly linked list initialised to s, t.
    const NONE: usize = usize::MAX;
    let mut prev = vec![NONE; n];
    let mut next = vec![NONE; n];
    next[s] = t;
    prev[t] = s;
    let mut minus = vec![true; n];
    for &v in &tree.preorder[2..] {
        let p = tree.parent[v];
        let low_vertex = tree.preorder[tree.low[v]];
        if minus[low_vertex] {
            let before = prev[p];
            prev[v] = before;
            next[v] = p;
            prev[p] = v;
            if before != NONE {
                next[before] = v;
            }
            minus[p] = false;
        } else {
            let after = next[p];
            next[v] = after;
            prev[v] = p;
            next[p] = v;
            if after != NONE {
                prev[after] = v;
            }
            minus[p] = true;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut v = s;
    while v != NONE {
        order.push(v);
        v = next[v];
    }
    Ok(StNumbering::Order(VertexOrder::new(order)?))
}

/// Path problem with `k = l = 1`, answered through an st-numbering.
pub fn solve_pr1_k1(instance: &Pr1Instance) -> Result<SolveResult> {
    if instance.k != 1 || instance.l != 1 {
        return Err(OrientError::Precondition("requires k = l = 1".into()));
    }
    match st_numbering(&instance.graph, instance.s, instance.t) {
        Ok(StNumbering::Order(order)) => Ok(SolveResult::Feasible(order)),
        Ok(StNumbering::NotBiconnected { cut_vertex }) => Ok(SolveResult::Infeasible(
            Infeasibility::CutVertex { vertex: cut_vertex },
        )),
        Err(OrientError::DisconnectedInput { unreachable }) => Ok(SolveResult::Infeasible(
            Infeasibility::Disconnected { unreachable },
        )),
        Err(e) => Err(e),
    }
}
