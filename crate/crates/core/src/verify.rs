//! Witness verification: degree bounds, acyclicity and path counts.

use crate::error::{OrientError, Result};
use crate::flow::count_arc_disjoint_paths;
use crate::graph::{topological_order, DcaopInstance, Orientation, Pr1Instance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundFailure {
    pub vertex: usize,
    pub indegree: usize,
    /// `f(v)`
    pub lower: usize,
    /// `d(v) - g(v)`
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DcaopVerdict {
    pub cycle: Option<Vec<usize>>,
    pub failures: Vec<BoundFailure>,
}

impl DcaopVerdict {
    pub fn is_ok(&self) -> bool {
        self.cycle.is_none() && self.failures.is_empty()
    }
}

pub fn verify_dcaop(instance: &DcaopInstance, orientation: &Orientation) -> Result<DcaopVerdict> {
    let graph = &instance.graph;
    let cycle = match topological_order(graph, orientation) {
        Ok(_) => None,
        Err(OrientError::Cycle { cycle }) => Some(cycle),
        Err(e) => return Err(e),
    };
    let (f, g) = (instance.bounds.f(), instance.bounds.g());
    let failures = (0..graph.vertex_count())
        .filter_map(|v| {
            let indegree = orientation.indegree(v);
            let upper = graph.degree(v) - g[v];
            (indegree < f[v] || indegree > upper).then_some(BoundFailure {
                vertex: v,
                indegree,
                lower: f[v],
                upper,
            })
        })
        .collect();
    Ok(DcaopVerdict { cycle, failures })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCount {
    pub vertex: usize,
    pub from_source: usize,
    pub to_sink: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pr1Verdict {
    pub cycle: Option<Vec<usize>>,
    /// One entry per non-terminal vertex.
    pub counts: Vec<PathCount>,
    pub failures: Vec<PathCount>,
}

impl Pr1Verdict {
    pub fn is_ok(&self) -> bool {
        self.cycle.is_none() && self.failures.is_empty()
    }
}

pub fn verify_pr1(instance: &Pr1Instance, orientation: &Orientation) -> Result<Pr1Verdict> {
    let graph = &instance.graph;
    let cycle = match topological_order(graph, orientation) {
        Ok(_) => None,
        Err(OrientError::Cycle { cycle }) => Some(cycle),
        Err(e) => return Err(e),
    };
    let mut counts = Vec::new();
    let mut failures = Vec::new();
    for v in (0..graph.vertex_count()).filter(|&v| !instance.is_terminal(v)) {
        let count = PathCount {
            vertex: v,
            from_source: count_arc_disjoint_paths(orientation, instance.s, v)?,
            to_sink: count_arc_disjoint_paths(orientation, v, instance.t)?,
        };
        if count.from_source < instance.k || count.to_sink < instance.l {
            failures.push(count);
        }
        counts.push(count);
    }
    Ok(Pr1Verdict {
        cycle,
        counts,
        failures,
    })
}

/// Degree bounds equivalent to the path problem: `k`/`l` inside, `s` a source, `t` a sink.
///
/// Fails with [`OrientError::ImmediatelyInfeasible`] at the first vertex with `k + l > d(v)`.
pub fn pr1_to_dcaop_bounds(instance: &Pr1Instance) -> Result<DcaopInstance> {
    let graph = &instance.graph;
    let n = graph.vertex_count();
    let mut f = vec![instance.k; n];
    let mut g = vec![instance.l; n];
    f[instance.s] = 0;
    g[instance.s] = graph.degree(instance.s);
    f[instance.t] = graph.degree(instance.t);
    g[instance.t] = 0;
    if let Some(v) = (0..n).find(|&v| f[v] + g[v] > graph.degree(v)) {
        return Err(OrientError::ImmediatelyInfeasible {
            vertex: v,
            f: f[v],
            g: g[v],
            degree: graph.degree(v),
        });
    }
    DcaopInstance::new(graph.clone(), f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{orientation_from_order, MultiGraph, VertexOrder};

    fn triangle() -> MultiGraph {
        MultiGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn dcaop_zero_bounds_accept_any_acyclic() {
        let inst = DcaopInstance::new(triangle(), vec![0; 3], vec![0; 3]).unwrap();
        let o = orientation_from_order(&inst.graph, &VertexOrder::new(vec![2, 0, 1]).unwrap()).unwrap();
        assert!(verify_dcaop(&inst, &o).unwrap().is_ok());
    }

    #[test]
    fn dcaop_source_fails_indegree_one() {
        let inst = DcaopInstance::new(triangle(), vec![1; 3], vec![0; 3]).unwrap();
        let o = orientation_from_order(&inst.graph, &VertexOrder::new(vec![1, 2, 0]).unwrap()).unwrap();
        let verdict = verify_dcaop(&inst, &o).unwrap();
        assert_eq!(
            verdict.failures,
            vec![BoundFailure {
                vertex: 1,
                indegree: 0,
                lower: 1,
                upper: 2
            }]
        );
    }

    #[test]
    fn dcaop_reports_cycle() {
        let g = triangle();
        let inst = DcaopInstance::new(g.clone(), vec![1; 3], vec![1; 3]).unwrap();
        let o = Orientation::new(&g, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let verdict = verify_dcaop(&inst, &o).unwrap();
        assert!(verdict.cycle.is_some());
        assert!(verdict.failures.is_empty());
        assert!(!verdict.is_ok());
    }

    #[test]
    fn dcaop_strict_path() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let inst = DcaopInstance::new(g.clone(), vec![0, 2, 0], vec![1, 0, 1]).unwrap();
        let o = Orientation::new(&g, vec![(0, 1), (2, 1)]).unwrap();
        assert!(verify_dcaop(&inst, &o).unwrap().is_ok());
    }

    #[test]
    fn pr1_triangle_ok() {
        let inst = Pr1Instance::new(triangle(), 0, 2, 1, 1).unwrap();
        let o = orientation_from_order(&inst.graph, &VertexOrder::identity(3)).unwrap();
        let verdict = verify_pr1(&inst, &o).unwrap();
        assert!(verdict.is_ok());
        assert_eq!(
            verdict.counts,
            vec![PathCount {
                vertex: 1,
                from_source: 1,
                to_sink: 1
            }]
        );
    }

    #[test]
    fn pr1_k2_fails_with_single_in_arc() {
        let inst = Pr1Instance::new(triangle(), 0, 2, 2, 1).unwrap();
        let o = orientation_from_order(&inst.graph, &VertexOrder::identity(3)).unwrap();
        let verdict = verify_pr1(&inst, &o).unwrap();
        assert_eq!(verdict.failures.len(), 1);
        assert_eq!(verdict.failures[0].vertex, 1);
        assert_eq!(verdict.failures[0].from_source, 1);
    }

    #[test]
    fn pr1_bounds_examples() {
        // s=0 with degree 4, internal v=1 with degree 5, t=2
        let mut edges = vec![(0, 1), (0, 1), (0, 3), (0, 3)];
        edges.extend([(1, 2), (1, 2), (1, 3)]);
        edges.extend([(3, 2), (3, 2)]);
        let g = MultiGraph::new(4, edges).unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 5);
        let inst = Pr1Instance::new(g, 0, 2, 2, 2).unwrap();
        let d = pr1_to_dcaop_bounds(&inst).unwrap();
        assert_eq!((d.bounds.f()[1], d.bounds.g()[1]), (2, 2));
        assert_eq!((d.bounds.f()[0], d.bounds.g()[0]), (0, 4));
        assert_eq!((d.bounds.f()[2], d.bounds.g()[2]), (4, 0));
    }

    #[test]
    fn pr1_bounds_immediately_infeasible() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (1, 2)]).unwrap();
        let inst = Pr1Instance::new(g, 0, 2, 2, 2).unwrap();
        assert!(matches!(
            pr1_to_dcaop_bounds(&inst),
            Err(OrientError::ImmediatelyInfeasible { vertex: 1, .. })
        ));
    }
}
