use super::describe_bound_failure;
use crate::error::{OrientError, Result};
use crate::graph::{orientation_from_order, DcaopInstance, MultiGraph, VertexOrder};
use crate::oracle::{is_vertex_cover, VcInstance};
use crate::verify::verify_dcaop;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VcRole {
    Original(usize),
    Edge(usize),
    Hub,
}

/// Bookkeeping for the vertex-cover construction.
///
/// Layout: source vertex `v` keeps id `v`, source edge `e` becomes `n + e`, the hub is `n + m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcReductionMap {
    pub roles: Vec<VcRole>,
    pub source: MultiGraph,
    pub reduced: DcaopInstance,
    pub k: usize,
    /// Parallel hub edges per source vertex, `m + 1`.
    pub multiplicity: usize,
    pub hub: usize,
}

impl VcReductionMap {
    pub fn edge_vertex(&self, edge: usize) -> usize {
        self.source.vertex_count() + edge
    }
}

/// Hub `y` needs indegree exactly `m + kM`: every edge-vertex and exactly `k` source vertices
/// must precede it, and each edge-vertex needs one earlier endpoint.
pub fn vc_to_dcaop(instance: &VcInstance) -> Result<(DcaopInstance, VcReductionMap)> {
    let source = &instance.graph;
    let (n, m, k) = (source.vertex_count(), source.edge_count(), instance.k);
    let big_m = m + 1;
    let hub = n + m;

    let mut edges = Vec::with_capacity(3 * m + n * big_m);
    for (e, &(u, v)) in source.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    for e in 0..m {
        edges.push((hub, n + e));
    }
    for v in 0..n {
        edges.extend(std::iter::repeat_n((hub, v), big_m));
    }

    let mut roles: Vec<VcRole> = (0..n).map(VcRole::Original).collect();
    roles.extend((0..m).map(VcRole::Edge));
    roles.push(VcRole::Hub);
    let labels = roles
        .iter()
        .map(|role| match *role {
            VcRole::Original(v) => format!("v{}", v + 1),
            VcRole::Edge(e) => format!("e{}", e + 1),
            VcRole::Hub => "y".to_string(),
        })
        .collect();
    let graph = MultiGraph::new(n + m + 1, edges)?.with_labels(labels)?;

    let mut f = vec![0; n + m + 1];
    let mut g = vec![0; n + m + 1];
    f[n..n + m].fill(1);
    f[hub] = m + k * big_m;
    g[hub] = (n - k) * big_m;
    let reduced = DcaopInstance::new(graph, f, g)?;
    let map = VcReductionMap {
        roles,
        source: source.clone(),
        reduced: reduced.clone(),
        k,
        multiplicity: big_m,
        hub,
    };
    Ok((reduced, map))
}

/// Cover first, then the edges it covers once, then the hub, then the rest; each edge with
/// both endpoints in the cover sits directly before its later endpoint.
pub fn cover_to_order(map: &VcReductionMap, cover: &[usize]) -> Result<VertexOrder> {
    let n = map.source.vertex_count();
    let mut in_cover = vec![false; n];
    for &v in cover {
        map.source.check_vertex(v)?;
        if in_cover[v] {
            return Err(OrientError::InvalidWitness(format!("vertex {v} repeated in cover")));
        }
        in_cover[v] = true;
    }
    if cover.len() != map.k {
        return Err(OrientError::InvalidWitness(format!(
            "cover has {} vertices, expected {}",
            cover.len(),
            map.k
        )));
    }
    if !is_vertex_cover(&map.source, cover) {
        return Err(OrientError::InvalidWitness("not a vertex cover".into()));
    }

    let members: Vec<usize> = (0..n).filter(|&v| in_cover[v]).collect();
    let rank = {
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in members.iter().enumerate() {
            rank[v] = i;
        }
        rank
    };
    let edges = map.source.edges();
    let mut order = Vec::with_capacity(map.reduced.vertex_count());
    for &v in &members {
        // double-covered edges whose later endpoint is v
        for (e, &(a, b)) in edges.iter().enumerate() {
            if in_cover[a] && in_cover[b] && rank[a].max(rank[b]) == rank[v] {
                order.push(map.edge_vertex(e));
            }
        }
        order.push(v);
    }
    for (e, &(a, b)) in edges.iter().enumerate() {
        if in_cover[a] != in_cover[b] {
            order.push(map.edge_vertex(e));
        }
    }
    order.push(map.hub);
    order.extend((0..n).filter(|&v| !in_cover[v]));
    VertexOrder::new(order)
}

/// The source vertices placed before the hub in a valid witness order.
pub fn orientation_to_cover(map: &VcReductionMap, order: &VertexOrder) -> Result<Vec<usize>> {
    let orientation = orientation_from_order(&map.reduced.graph, order)?;
    let verdict = verify_dcaop(&map.reduced, &orientation)?;
    if let Some(failure) = verdict.failures.first() {
        return Err(OrientError::InvalidWitness(describe_bound_failure(
            map.reduced.graph.labels(),
            failure,
        )));
    }
    let hub_position = order.position(map.hub);
    let cover: Vec<usize> = (0..map.source.vertex_count())
        .filter(|&v| order.position(v) < hub_position)
        .collect();
    debug_assert!(cover.len() == map.k && is_vertex_cover(&map.source, &cover));
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::dcaop_oracle;

    fn vc(n: usize, edges: &[(usize, usize)], k: usize) -> VcInstance {
        VcInstance::new(MultiGraph::new(n, edges.to_vec()).unwrap(), k).unwrap()
    }

    #[test]
    fn path_parameters() {
        let (reduced, map) = vc_to_dcaop(&vc(3, &[(0, 1), (1, 2)], 1)).unwrap();
        assert_eq!(map.multiplicity, 3);
        assert_eq!(reduced.vertex_count(), 6);
        assert_eq!(reduced.bounds.f()[map.hub], 5);
        assert_eq!(reduced.bounds.g()[map.hub], 6);
        assert_eq!(reduced.graph.degree(map.hub), 11);
        assert!(reduced.bounds.is_strict(&reduced.graph, map.hub));
    }

    #[test]
    fn path_cover_order() {
        let (_, map) = vc_to_dcaop(&vc(3, &[(0, 1), (1, 2)], 1)).unwrap();
        let order = cover_to_order(&map, &[1]).unwrap();
        // b, e_ab, e_bc, y, a, c
        assert_eq!(order.as_slice(), &[1, 3, 4, 5, 0, 2]);
        let o = orientation_from_order(&map.reduced.graph, &order).unwrap();
        assert_eq!(o.indegree(map.hub), 5);
        assert_eq!(orientation_to_cover(&map, &order).unwrap(), vec![1]);
    }

    #[test]
    fn triangle_double_covered_edge() {
        let (_, map) = vc_to_dcaop(&vc(3, &[(0, 1), (1, 2), (0, 2)], 2)).unwrap();
        let order = cover_to_order(&map, &[0, 1]).unwrap();
        // a, e_ab, b, e_bc, e_ac, y, c
        assert_eq!(order.as_slice(), &[0, 3, 1, 4, 5, 6, 2]);
        let o = orientation_from_order(&map.reduced.graph, &order).unwrap();
        assert!(verify_dcaop(&map.reduced, &o).unwrap().is_ok());
    }

    #[test]
    fn edgeless_graph() {
        let (reduced, map) = vc_to_dcaop(&vc(2, &[], 0)).unwrap();
        let order = cover_to_order(&map, &[]).unwrap();
        assert_eq!(order.as_slice(), &[2, 0, 1]);
        assert_eq!(reduced.bounds.f()[map.hub], 0);
        assert_eq!(orientation_to_cover(&map, &order).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn oracle_witness_maps_to_cover() {
        let (reduced, map) = vc_to_dcaop(&vc(3, &[(0, 1), (1, 2)], 1)).unwrap();
        let witness = dcaop_oracle(&reduced).unwrap();
        let cover = orientation_to_cover(&map, witness.order().unwrap()).unwrap();
        assert_eq!(cover, vec![1]);
    }

    #[test]
    fn too_few_before_hub_is_rejected() {
        let (_, map) = vc_to_dcaop(&vc(3, &[(0, 1), (1, 2)], 1)).unwrap();
        // e_ab, e_bc, y, a, b, c: no source vertex before y
        let order = VertexOrder::new(vec![3, 4, 5, 0, 1, 2]).unwrap();
        let err = orientation_to_cover(&map, &order).unwrap_err();
        assert!(matches!(err, OrientError::InvalidWitness(ref msg) if msg.contains("vertex e1")));
        // e_ab, e_bc have no earlier neighbor; fix that and the hub is the one that fails
        let order = VertexOrder::new(vec![0, 3, 4, 5, 1, 2]).unwrap();
        let err = orientation_to_cover(&map, &order).unwrap_err();
        assert!(matches!(err, OrientError::InvalidWitness(ref msg) if msg.contains("vertex e2")));
    }

    #[test]
    fn hub_with_too_low_indegree() {
        let (_, map) = vc_to_dcaop(&vc(3, &[(0, 1), (1, 2)], 2)).unwrap();
        // only b precedes y: rho(y) = 2 + 3 = 5 < f(y) = 2 + 6 = 8
        let order = VertexOrder::new(vec![1, 3, 4, 5, 0, 2]).unwrap();
        let err = orientation_to_cover(&map, &order).unwrap_err();
        assert_eq!(
            err,
            OrientError::InvalidWitness("vertex y has indegree 5 outside [8, 8]".into())
        );
    }

    #[test]
    fn rejects_bad_covers() {
        let (_, map) = vc_to_dcaop(&vc(3, &[(0, 1), (1, 2)], 1)).unwrap();
        assert!(cover_to_order(&map, &[0]).is_err());
        assert!(cover_to_order(&map, &[0, 1]).is_err());
        assert!(cover_to_order(&map, &[5]).is_err());
    }
}
