use crate::error::{OrientError, Result};
use crate::graph::{DcaopInstance, MultiGraph, Pr1Instance, VertexOrder};

/// Source vertices keep their ids; `s = n`, `t = n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TerminalMap {
    pub original_vertex_count: usize,
    pub s: usize,
    pub t: usize,
    pub k: usize,
}

impl TerminalMap {
    pub fn forward_order(&self, order: &VertexOrder) -> Result<VertexOrder> {
        if order.len() != self.original_vertex_count {
            return Err(OrientError::LengthMismatch {
                expected: self.original_vertex_count,
                actual: order.len(),
            });
        }
        let mut out = Vec::with_capacity(order.len() + 2);
        out.push(self.s);
        out.extend_from_slice(order.as_slice());
        out.push(self.t);
        VertexOrder::new(out)
    }

    pub fn backward_order(&self, order: &VertexOrder) -> Result<VertexOrder> {
        if order.len() != self.original_vertex_count + 2 {
            return Err(OrientError::LengthMismatch {
                expected: self.original_vertex_count + 2,
                actual: order.len(),
            });
        }
        VertexOrder::new(
            order
                .as_slice()
                .iter()
                .copied()
                .filter(|&v| v < self.original_vertex_count)
                .collect(),
        )
    }
}

/// Pad every vertex up to `k - f(v)` edges from `s` and `k - g(v)` edges to `t`, with `k = l`
/// the maximum degree (at least 1).
pub fn dcaop_to_pr1(instance: &DcaopInstance) -> Result<(Pr1Instance, TerminalMap)> {
    let source = &instance.graph;
    let n = source.vertex_count();
    let k = source.max_degree().max(1);
    let (s, t) = (n, n + 1);
    let mut edges = source.edges().to_vec();
    for v in 0..n {
        edges.extend(std::iter::repeat_n((s, v), k - instance.bounds.f()[v]));
        edges.extend(std::iter::repeat_n((v, t), k - instance.bounds.g()[v]));
    }
    let mut labels = source.labels().to_vec();
    labels.push("s".into());
    labels.push("t".into());
    let graph = MultiGraph::new(n + 2, edges)?.with_labels(labels)?;
    let target = Pr1Instance::new(graph, s, t, k, k)?;
    let map = TerminalMap {
        original_vertex_count: n,
        s,
        t,
        k,
    };
    Ok((target, map))
}
