//! Not-all-equal 3-SAT to the path problem with `k = l = 2`.
//!
//! A rigid skeleton `a_0 = s, a_1, ..., a_{4n+2m+1} = t` of alternating double and single
//! edges. Each consecutive pair `a_{2p-1}, a_{2p}` has one "gate" vertex hanging between them:
//! `y_1..y_n`, then the clause vertices `C_1..C_m`, then `z_1..z_n`. A literal counts as true
//! when it is placed before `a_{2n}`.

use super::describe_path_failure;
use crate::error::{OrientError, Result};
use crate::graph::{orientation_from_order, MultiGraph, Pr1Instance, VertexOrder};
use crate::oracle::{Literal, NaeInstance};
use crate::verify::verify_pr1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetRole {
    Skeleton(usize),
    /// `y_i`
    VariableGate(usize),
    /// `z_i`
    ComplementGate(usize),
    Clause(usize),
    Literal(Literal),
}

/// Vertex ids of the gadget. Indices of gates, clauses and variables are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetLayout {
    pub variables: usize,
    pub clauses: usize,
}

impl GadgetLayout {
    /// Index of `t` on the skeleton, `4n + 2m + 1`.
    pub fn last_skeleton_index(&self) -> usize {
        4 * self.variables + 2 * self.clauses + 1
    }

    pub fn vertex_count(&self) -> usize {
        8 * self.variables + 3 * self.clauses + 2
    }

    pub fn skeleton(&self, i: usize) -> usize {
        i
    }

    pub fn y(&self, i: usize) -> usize {
        self.last_skeleton_index() + i
    }

    pub fn z(&self, i: usize) -> usize {
        self.last_skeleton_index() + self.variables + i
    }

    pub fn clause(&self, j: usize) -> usize {
        self.last_skeleton_index() + 2 * self.variables + j
    }

    pub fn literal(&self, lit: Literal) -> usize {
        let i = lit.unsigned_abs() as usize;
        let base = self.last_skeleton_index() + 2 * self.variables + self.clauses;
        if lit > 0 {
            base + 2 * i - 1
        } else {
            base + 2 * i
        }
    }

    pub fn pair_count(&self) -> usize {
        2 * self.variables + self.clauses
    }

    /// The gate between `a_{2p-1}` and `a_{2p}`.
    pub fn gate(&self, p: usize) -> usize {
        let (n, m) = (self.variables, self.clauses);
        if p <= n {
            self.y(p)
        } else if p <= n + m {
            self.clause(p - n)
        } else {
            self.z(p - n - m)
        }
    }

    pub fn roles(&self) -> Vec<GadgetRole> {
        let n = self.variables;
        let mut roles: Vec<GadgetRole> =
            (0..=self.last_skeleton_index()).map(GadgetRole::Skeleton).collect();
        roles.extend((1..=n).map(GadgetRole::VariableGate));
        roles.extend((1..=n).map(GadgetRole::ComplementGate));
        roles.extend((1..=self.clauses).map(GadgetRole::Clause));
        for i in 1..=n as Literal {
            roles.push(GadgetRole::Literal(i));
            roles.push(GadgetRole::Literal(-i));
        }
        roles
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeGadgetMap {
    pub layout: GadgetLayout,
    pub roles: Vec<GadgetRole>,
    pub source: NaeInstance,
    pub target: Pr1Instance,
}

fn label(role: GadgetRole) -> String {
    match role {
        GadgetRole::Skeleton(i) => format!("a{i}"),
        GadgetRole::VariableGate(i) => format!("y{i}"),
        GadgetRole::ComplementGate(i) => format!("z{i}"),
        GadgetRole::Clause(j) => format!("C{j}"),
        GadgetRole::Literal(lit) if lit > 0 => format!("x{lit}"),
        GadgetRole::Literal(lit) => format!("~x{}", -lit),
    }
}

pub fn nae_to_pr1(instance: &NaeInstance) -> Result<(Pr1Instance, NaeGadgetMap)> {
    let (n, m) = (instance.variable_count, instance.clauses.len());
    let map = GadgetLayout {
        variables: n,
        clauses: m,
    };
    let pairs = map.pair_count();
    let a = |i: usize| map.skeleton(i);

    let mut edges = Vec::with_capacity(22 * n + 8 * m + 2);
    for i in 0..=pairs {
        edges.push((a(2 * i), a(2 * i + 1)));
        edges.push((a(2 * i), a(2 * i + 1)));
    }
    for i in 1..=pairs {
        edges.push((a(2 * i - 1), a(2 * i)));
    }
    for p in 1..=pairs {
        edges.push((a(2 * p - 1), map.gate(p)));
        edges.push((map.gate(p), a(2 * p)));
    }
    for i in 1..=n {
        for lit in [i as Literal, -(i as Literal)] {
            edges.push((map.literal(lit), map.y(i)));
            edges.push((map.literal(lit), map.z(i)));
        }
    }
    for (j, clause) in instance.clauses.iter().enumerate() {
        for &lit in clause {
            edges.push((map.clause(j + 1), map.literal(lit)));
        }
    }
    let (s, t) = (a(0), a(map.last_skeleton_index()));
    for i in 1..=n {
        for lit in [i as Literal, -(i as Literal)] {
            let v = map.literal(lit);
            edges.extend([(s, v), (s, v), (v, t), (v, t)]);
        }
    }

    let roles = map.roles();
    let labels = roles.iter().map(|&r| label(r)).collect();
    let graph = MultiGraph::new(roles.len(), edges)?.with_labels(labels)?;
    let target = Pr1Instance::new(graph, s, t, 2, 2)?;
    let gadget = NaeGadgetMap {
        layout: map,
        roles,
        source: instance.clone(),
        target: target.clone(),
    };
    Ok((target, gadget))
}

/// Canonical skeleton order with true literals right after `a_1` and false literals right
/// before `a_{4n+2m}`.
pub fn assignment_to_order(gadget: &NaeGadgetMap, assignment: &[bool]) -> Result<VertexOrder> {
    let map = &gadget.layout;
    let n = map.variables;
    if assignment.len() != n {
        return Err(OrientError::LengthMismatch {
            expected: n,
            actual: assignment.len(),
        });
    }
    if let Some(j) = gadget.source.first_broken_clause(assignment) {
        let trues = gadget.source.clauses[j]
            .iter()
            .filter(|&&lit| NaeInstance::literal_value(lit, assignment))
            .count();
        return Err(OrientError::InvalidWitness(format!(
            "clause C{} would have indegree {}",
            j + 1,
            trues + 1
        )));
    }
    let (mut trues, mut falses) = (Vec::new(), Vec::new());
    for i in 1..=n {
        let (pos, neg) = (map.literal(i as Literal), map.literal(-(i as Literal)));
        if assignment[i - 1] {
            trues.push(pos);
            falses.push(neg);
        } else {
            trues.push(neg);
            falses.push(pos);
        }
    }
    trues.sort_unstable();
    falses.sort_unstable();

    let pairs = map.pair_count();
    let mut order = Vec::with_capacity(map.vertex_count());
    for i in 0..=map.last_skeleton_index() {
        order.push(map.skeleton(i));
        if i == 1 {
            order.extend_from_slice(&trues);
        }
        if i % 2 == 1 && i < 2 * pairs {
            let p = i.div_ceil(2);
            order.push(map.gate(p));
            if p == pairs {
                order.extend_from_slice(&falses);
            }
        }
    }
    VertexOrder::new(order)
}

/// `x_i` is true iff its literal vertex precedes `a_{2n}`.
pub fn order_to_assignment(gadget: &NaeGadgetMap, order: &VertexOrder) -> Result<Vec<bool>> {
    let map = &gadget.layout;
    let orientation = orientation_from_order(&gadget.target.graph, order)?;
    let verdict = verify_pr1(&gadget.target, &orientation)?;
    if !verdict.is_ok() {
        let labels = gadget.target.graph.labels();
        let reason = match first_out_of_place(map, order) {
            Some(v) => format!("{} is out of place", labels[v]),
            None => match verdict.failures.first() {
                Some(count) => describe_path_failure(labels, count),
                None => "orientation is cyclic".to_string(),
            },
        };
        return Err(OrientError::InvalidWitness(reason));
    }
    let pivot = order.position(map.skeleton(2 * map.variables));
    let assignment: Vec<bool> = (1..=map.variables)
        .map(|i| order.position(map.literal(i as Literal)) < pivot)
        .collect();
    if let Some(j) = gadget.source.first_broken_clause(&assignment) {
        return Err(OrientError::InvalidWitness(format!(
            "clause C{} is not split by the decoded assignment",
            j + 1
        )));
    }
    Ok(assignment)
}

/// First skeleton vertex preceded by its successor, then first gate not between its anchors.
fn first_out_of_place(map: &GadgetLayout, order: &VertexOrder) -> Option<usize> {
    let last = map.last_skeleton_index();
    let a = |i: usize| map.skeleton(i);
    (1..last - 1)
        .find(|&i| order.precedes(a(i + 1), a(i)))
        .map(a)
        .or_else(|| {
            (1..=map.pair_count()).map(|p| (p, map.gate(p))).find_map(|(p, w)| {
                let inside = order.precedes(a(2 * p - 1), w) && order.precedes(w, a(2 * p));
                (!inside).then_some(w)
            })
        })
}
