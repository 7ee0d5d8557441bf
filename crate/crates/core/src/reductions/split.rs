use crate::error::{OrientError, Result};
use crate::graph::{DcaopInstance, MultiGraph, Orientation, VertexOrder};

/// Edge `e` of the source becomes the path `u - w_e - v`, with `w_e = n + e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMap {
    pub original_vertex_count: usize,
    pub source_edges: Vec<(usize, usize)>,
}

impl SplitMap {
    pub fn midpoint(&self, edge: usize) -> usize {
        self.original_vertex_count + edge
    }

    /// Insert each `w_e` right after the earlier endpoint of `e` (edge-id order within a vertex).
    pub fn forward_order(&self, order: &VertexOrder) -> Result<VertexOrder> {
        let n = self.original_vertex_count;
        if order.len() != n {
            return Err(OrientError::LengthMismatch {
                expected: n,
                actual: order.len(),
            });
        }
        let mut after: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.source_edges.iter().enumerate() {
            let earlier = if order.precedes(u, v) { u } else { v };
            after[earlier].push(self.midpoint(e));
        }
        let mut out = Vec::with_capacity(n + self.source_edges.len());
        for &v in order.as_slice() {
            out.push(v);
            out.extend_from_slice(&after[v]);
        }
        VertexOrder::new(out)
    }

    /// Restrict a target order to the source vertices.
    pub fn backward_order(&self, order: &VertexOrder) -> Result<VertexOrder> {
        let expected = self.original_vertex_count + self.source_edges.len();
        if order.len() != expected {
            return Err(OrientError::LengthMismatch {
                expected,
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

    /// Contract every `u -> w_e -> v` back to `u -> v`.
    pub fn contract(&self, source: &MultiGraph, target: &Orientation) -> Result<Orientation> {
        let arcs = (0..self.source_edges.len())
            .map(|e| {
                let (first, second) = (target.arc(2 * e), target.arc(2 * e + 1));
                let w = self.midpoint(e);
                match (first.1 == w, second.0 == w) {
                    (true, true) => Ok((first.0, second.1)),
                    (false, false) => Ok((second.0, first.1)),
                    _ => Err(OrientError::InvalidWitness(format!(
                        "midpoint of edge {e} is a source or a sink"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Orientation::new(source, arcs)
    }
}

/// Subdivide every edge once; midpoints get `f = g = 1`, so they carry the edge's direction.
pub fn split_to_simple(instance: &DcaopInstance) -> Result<(DcaopInstance, SplitMap)> {
    let source = &instance.graph;
    let (n, m) = (source.vertex_count(), source.edge_count());
    let mut edges = Vec::with_capacity(2 * m);
    for (e, &(u, v)) in source.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((n + e, v));
    }
    let mut labels = source.labels().to_vec();
    labels.extend((0..m).map(|e| format!("w{}", e + 1)));
    let graph = MultiGraph::new(n + m, edges)?.with_labels(labels)?;
    let mut f = instance.bounds.f().to_vec();
    let mut g = instance.bounds.g().to_vec();
    f.resize(n + m, 1);
    g.resize(n + m, 1);
    let target = DcaopInstance::new(graph, f, g)?;
    let map = SplitMap {
        original_vertex_count: n,
        source_edges: source.edges().to_vec(),
    };
    Ok((target, map))
}
