use std::collections::HashMap;

use crate::error::{OrientError, Result};
use crate::graph::{orientation_from_order, DcaopInstance, MultiGraph, Pr1Instance, VertexOrder};
use crate::verify::{verify_pr1, BoundFailure, DcaopVerdict};

/// Simple graph with four unconstrained terminals `[s1, s2, t1, t2]`; every other vertex needs
/// two neighbors before it and two after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem3Instance {
    pub graph: MultiGraph,
    pub terminals: [usize; 4],
}

impl Problem3Instance {
    pub fn new(graph: MultiGraph, terminals: [usize; 4]) -> Result<Self> {
        for (i, &a) in terminals.iter().enumerate() {
            graph.check_vertex(a)?;
            if terminals[..i].contains(&a) {
                return Err(OrientError::SameTerminals);
            }
        }
        if !graph.is_simple() {
            return Err(OrientError::Precondition("graph must be simple".into()));
        }
        Ok(Self { graph, terminals })
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        self.terminals.contains(&v)
    }

    /// `f = g = 2` off the terminals, zero on them.
    pub fn to_dcaop(&self) -> Result<DcaopInstance> {
        let n = self.graph.vertex_count();
        let demand: Vec<usize> = (0..n)
            .map(|v| if self.is_terminal(v) { 0 } else { 2 })
            .collect();
        if let Some(v) = (0..n).find(|&v| 2 * demand[v] > self.graph.degree(v)) {
            return Err(OrientError::ImmediatelyInfeasible {
                vertex: v,
                f: 2,
                g: 2,
                degree: self.graph.degree(v),
            });
        }
        DcaopInstance::new(self.graph.clone(), demand.clone(), demand)
    }

    pub fn verify(&self, order: &VertexOrder) -> Result<DcaopVerdict> {
        let orientation = orientation_from_order(&self.graph, order)?;
        let failures = (0..self.graph.vertex_count())
            .filter(|&v| !self.is_terminal(v))
            .filter(|&v| orientation.indegree(v) < 2 || orientation.outdegree(v) < 2)
            .map(|v| BoundFailure {
                vertex: v,
                indegree: orientation.indegree(v),
                lower: 2,
                upper: self.graph.degree(v).saturating_sub(2),
            })
            .collect();
        Ok(DcaopVerdict {
            cycle: None,
            failures,
        })
    }
}

/// Source vertices keep their ids (`s` becomes `s1`, `t` becomes `t1`); `s2 = n`, `t2 = n + 1`,
/// and the midpoint of split edge `e` is recorded in `midpoints[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem3Map {
    pub source: Pr1Instance,
    pub terminals: [usize; 4],
    pub midpoints: Vec<Option<usize>>,
}

impl Problem3Map {
    /// Terminal copies first and last, midpoints right after the earlier endpoint of their edge.
    pub fn forward_order(&self, order: &VertexOrder) -> Result<VertexOrder> {
        let n = self.source.graph.vertex_count();
        if order.len() != n {
            return Err(OrientError::LengthMismatch {
                expected: n,
                actual: order.len(),
            });
        }
        let [s1, s2, t1, t2] = self.terminals;
        let mut after: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.source.graph.edges().iter().enumerate() {
            if let Some(w) = self.midpoints[e] {
                after[if order.precedes(u, v) { u } else { v }].push(w);
            }
        }
        let mut out = vec![s1, s2];
        for &v in order.as_slice() {
            if !self.source.is_terminal(v) {
                out.push(v);
                out.extend_from_slice(&after[v]);
            }
        }
        out.extend([t1, t2]);
        VertexOrder::new(out)
    }

    /// Restrict to the source's inner vertices, put `s` first and `t` last, and flow-check.
    pub fn backward_order(&self, order: &VertexOrder) -> Result<VertexOrder> {
        let (s, t) = (self.source.s, self.source.t);
        let n = self.source.graph.vertex_count();
        let mut out = vec![s];
        out.extend(
            order
                .as_slice()
                .iter()
                .copied()
                .filter(|&v| v < n && v != s && v != t),
        );
        out.push(t);
        let back = VertexOrder::new(out)?;
        let orientation = orientation_from_order(&self.source.graph, &back)?;
        let verdict = verify_pr1(&self.source, &orientation)?;
        if let Some(failure) = verdict.failures.first() {
            return Err(OrientError::InvalidWitness(format!(
                "restricted order fails at vertex {}",
                self.source.graph.label(failure.vertex)
            )));
        }
        Ok(back)
    }
}

/// Route every inner edge `uv` through a new vertex adjacent to `s1, u, v, t1`, then share the
/// remaining terminal edges between the two copies of each terminal.
pub fn pr1_to_problem3(instance: &Pr1Instance) -> Result<(Problem3Instance, Problem3Map)> {
    if instance.k != 2 || instance.l != 2 {
        return Err(OrientError::Precondition("requires k = l = 2".into()));
    }
    let source = &instance.graph;
    let n = source.vertex_count();
    let (s1, t1) = (instance.s, instance.t);
    let (s2, t2) = (n, n + 1);
    let copy = |terminal: usize, occurrence: usize| match (terminal == s1, occurrence) {
        (true, 0) => s1,
        (true, _) => s2,
        (false, 0) => t1,
        (false, _) => t2,
    };

    let mut labels = source.labels().to_vec();
    labels[s1] = format!("{}_1", source.label(s1));
    labels[t1] = format!("{}_1", source.label(t1));
    labels.push(format!("{}_2", source.label(s1)));
    labels.push(format!("{}_2", source.label(t1)));

    let mut edges = Vec::new();
    let mut midpoints = vec![None; source.edge_count()];
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut next_vertex = n + 2;
    for (e, &(u, v)) in source.edges().iter().enumerate() {
        let (u_term, v_term) = (instance.is_terminal(u), instance.is_terminal(v));
        if !u_term && !v_term {
            let w = next_vertex;
            next_vertex += 1;
            midpoints[e] = Some(w);
            labels.push(format!("w{}", e + 1));
            edges.extend([(w, s1), (w, u), (w, v), (w, t1)]);
            continue;
        }
        let key = (u.min(v), u.max(v));
        let occurrence = seen.entry(key).or_insert(0);
        if *occurrence >= 2 {
            return Err(OrientError::MultiplicityTooHigh {
                u: key.0,
                v: key.1,
                multiplicity: source.multiplicity(u, v),
            });
        }
        let (a, b) = match (u_term, v_term) {
            (true, true) => (copy(u, *occurrence), copy(v, *occurrence)),
            (true, false) => (copy(u, *occurrence), v),
            _ => (u, copy(v, *occurrence)),
        };
        *occurrence += 1;
        edges.push((a, b));
    }
    let graph = MultiGraph::new(next_vertex, edges)?.with_labels(labels)?;
    let terminals = [s1, s2, t1, t2];
    let target = Problem3Instance::new(graph, terminals)?;
    let map = Problem3Map {
        source: instance.clone(),
        terminals,
        midpoints,
    };
    Ok((target, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::NaeInstance;
    use crate::reductions::{assignment_to_order, nae_to_pr1};

    #[test]
    fn gadget_becomes_simple() {
        let nae = NaeInstance::new(1, vec![[1, -1, 1]]).unwrap();
        let (pr1, gadget) = nae_to_pr1(&nae).unwrap();
        let (p3, map) = pr1_to_problem3(&pr1).unwrap();
        assert!(p3.graph.is_simple());
        for w in map.midpoints.iter().flatten() {
            assert_eq!(p3.graph.degree(*w), 4);
        }
        // x1 had two parallel edges to s: now one to each copy
        let x1 = gadget.layout.literal(1);
        assert_eq!(p3.graph.multiplicity(x1, map.terminals[0]), 1);
        assert_eq!(p3.graph.multiplicity(x1, map.terminals[1]), 1);

        let order = assignment_to_order(&gadget, &[true]).unwrap();
        let forward = map.forward_order(&order).unwrap();
        assert!(p3.verify(&forward).unwrap().is_ok());
        let back = map.backward_order(&forward).unwrap();
        assert_eq!(back, order);
    }

    #[test]
    fn rejects_triple_terminal_edges() {
        let g = MultiGraph::new(3, vec![(0, 1), (0, 1), (0, 1), (1, 2), (1, 2)]).unwrap();
        let inst = Pr1Instance::new(g, 0, 2, 2, 2).unwrap();
        assert_eq!(
            pr1_to_problem3(&inst).unwrap_err(),
            OrientError::MultiplicityTooHigh {
                u: 0,
                v: 1,
                multiplicity: 3
            }
        );
    }

    #[test]
    fn requires_k_two() {
        let g = MultiGraph::new(2, vec![(0, 1)]).unwrap();
        let inst = Pr1Instance::new(g, 0, 1, 1, 1).unwrap();
        assert!(pr1_to_problem3(&inst).is_err());
    }
}
