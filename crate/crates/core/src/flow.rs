//! Unit-capacity max-flow for counting arc-disjoint directed paths.

use crate::error::{OrientError, Result};
use crate::graph::Orientation;

struct Residual {
    // per vertex: indices into `arcs`
    adjacency: Vec<Vec<usize>>,
    // (head, residual capacity); arc i ^ 1 is its reverse
    arcs: Vec<(usize, u32)>,
}

impl Residual {
    fn new(orientation: &Orientation) -> Self {
        let n = orientation.vertex_count();
        let mut adjacency = vec![Vec::new(); n];
        let mut arcs = Vec::with_capacity(2 * orientation.arcs().len());
        for &(tail, head) in orientation.arcs() {
            adjacency[tail].push(arcs.len());
            arcs.push((head, 1));
            adjacency[head].push(arcs.len());
            arcs.push((tail, 0));
        }
        Self { adjacency, arcs }
    }

    /// One BFS augmentation; returns whether a path was found.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let n = self.adjacency.len();
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[source] = true;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            if v == sink {
                break;
            }
            for &a in &self.adjacency[v] {
                let (w, cap) = self.arcs[a];
                if cap > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = a;
                    queue.push_back(w);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut v = sink;
        while v != source {
            let a = via[v];
            self.arcs[a].1 -= 1;
            self.arcs[a ^ 1].1 += 1;
            v = self.arcs[a ^ 1].0;
        }
        true
    }
}

/// Maximum number of pairwise arc-disjoint directed `u -> v` paths.
pub fn count_arc_disjoint_paths(orientation: &Orientation, u: usize, v: usize) -> Result<usize> {
    let n = orientation.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(OrientError::InvalidVertex {
                vertex: w,
                vertex_count: n,
            });
        }
    }
    if u == v {
        return Err(OrientError::Precondition(
            "path endpoints must differ".into(),
        ));
    }
    let mut residual = Residual::new(orientation);
    let mut count = 0;
    while residual.augment(u, v) {
        count += 1;
    }
    Ok(count)
}
