mod common;

use acyclic_orient::reductions::{dcaop_to_pr1, nae_to_pr1, split_to_simple};
use acyclic_orient::{
    count_arc_disjoint_paths, dcaop_oracle, greedy_min_indegree_orient, nae_oracle,
    orientation_from_order, parse_instance, serialize_instance, solve_disjoint_bounds,
    topological_order, DcaopInstance, Infeasibility, Instance, MultiGraph, NaeInstance,
    OracleConfig, Orientation, OrientError, Pr1Instance, SolveResult, VcInstance, VertexOrder,
};
use acyclic_orient::dispatch::{oracle_instance, solve_instance};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 1..n), 0..=max_m).prop_map(move |pairs| {
            let edges = pairs.into_iter().map(|(u, step)| (u, (u + step) % n)).collect();
            MultiGraph::new(n, edges).unwrap()
        })
    })
}

fn order_strategy(n: usize) -> impl Strategy<Value = VertexOrder> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| VertexOrder::new(v).unwrap())
}

fn graph_with_order(max_n: usize, max_m: usize) -> impl Strategy<Value = (MultiGraph, VertexOrder)> {
    graph_strategy(max_n, max_m).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), order_strategy(n))
    })
}

/// Bounds drawn as fractions of the degree so every `(f, g)` with `f + g <= d` is reachable.
fn instance_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = DcaopInstance> {
    graph_strategy(max_n, max_m).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec((0.0..=1.0f64, 0.0..=1.0f64), n)).prop_map(|(g, fractions)| {
            let (mut f, mut up) = (Vec::new(), Vec::new());
            for (v, (a, b)) in fractions.into_iter().enumerate() {
                let d = g.degree(v);
                let lower = (a * d as f64).floor() as usize;
                f.push(lower);
                up.push((b * (d - lower) as f64).floor() as usize);
            }
            DcaopInstance::new(g, f, up).unwrap()
        })
    })
}

fn relabel(instance: &DcaopInstance, perm: &[usize]) -> DcaopInstance {
    let n = instance.vertex_count();
    let edges = instance
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u], perm[v]))
        .collect();
    let (mut f, mut g) = (vec![0; n], vec![0; n]);
    for v in 0..n {
        f[perm[v]] = instance.bounds.f()[v];
        g[perm[v]] = instance.bounds.g()[v];
    }
    DcaopInstance::new(MultiGraph::new(n, edges).unwrap(), f, g).unwrap()
}

fn nae_strategy() -> impl Strategy<Value = NaeInstance> {
    (1..=4usize).prop_flat_map(|n| {
        let literal = (1..=n as i32, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        prop::collection::vec([literal.clone(), literal.clone(), literal], 0..=5)
            .prop_map(move |clauses| NaeInstance::new(n, clauses).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn order_induced_orientation_is_acyclic((graph, order) in graph_with_order(7, 14)) {
        let o = orientation_from_order(&graph, &order).unwrap();
        let topo = topological_order(&graph, &o).unwrap();
        for &(tail, head) in o.arcs() {
            prop_assert!(topo.precedes(tail, head));
            prop_assert!(order.precedes(tail, head));
        }
    }

    #[test]
    fn indegree_plus_outdegree_is_degree((graph, order) in graph_with_order(7, 14)) {
        let o = orientation_from_order(&graph, &order).unwrap();
        for v in 0..graph.vertex_count() {
            prop_assert_eq!(o.indegree(v) + o.outdegree(v), graph.degree(v));
        }
    }

    #[test]
    fn random_orientation_cycle_or_topological_order(
        graph in graph_strategy(6, 10),
        flips in prop::collection::vec(any::<bool>(), 10),
    ) {
        let arcs: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .zip(&flips)
            .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
            .collect();
        let o = Orientation::new(&graph, arcs).unwrap();
        match topological_order(&graph, &o) {
            Ok(order) => {
                for &(tail, head) in o.arcs() {
                    prop_assert!(order.precedes(tail, head));
                }
            }
            Err(OrientError::Cycle { cycle }) => {
                prop_assert!(!cycle.is_empty());
                for i in 0..cycle.len() {
                    let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    prop_assert!(o.arcs().contains(&(a, b)), "{a}->{b} missing");
                }
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn flow_bounded_by_degrees((graph, order) in graph_with_order(6, 12)) {
        let o = orientation_from_order(&graph, &order).unwrap();
        let s = order.as_slice()[0];
        for v in (0..graph.vertex_count()).filter(|&v| v != s) {
            let paths = count_arc_disjoint_paths(&o, s, v).unwrap();
            prop_assert!(paths <= o.outdegree(s).min(o.indegree(v)));
        }
    }

    #[test]
    fn oracle_matches_permutation_search(instance in instance_strategy(6, 10)) {
        let expected = common::brute_force_feasible(&instance.graph, instance.bounds.f(), instance.bounds.g());
        let result = dcaop_oracle(&instance).unwrap();
        prop_assert_eq!(result.is_feasible(), expected);
        if let Some(order) = result.order() {
            let o = orientation_from_order(&instance.graph, order).unwrap();
            prop_assert!(acyclic_orient::verify_dcaop(&instance, &o).unwrap().is_ok());
        }
    }

    #[test]
    fn oracle_invariant_under_relabeling(
        instance in instance_strategy(6, 10),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..instance.vertex_count()).collect();
        perm.shuffle(&mut common::rng(seed));
        let relabeled = relabel(&instance, &perm);
        prop_assert_eq!(
            dcaop_oracle(&instance).unwrap().is_feasible(),
            dcaop_oracle(&relabeled).unwrap().is_feasible()
        );
    }

    #[test]
    fn greedy_certificates_are_valid(instance in instance_strategy(7, 12)) {
        match greedy_min_indegree_orient(&instance.graph, instance.bounds.f()).unwrap() {
            SolveResult::Feasible(order) => {
                let o = orientation_from_order(&instance.graph, &order).unwrap();
                for v in 0..instance.vertex_count() {
                    prop_assert!(o.indegree(v) >= instance.bounds.f()[v]);
                }
            }
            SolveResult::Infeasible(Infeasibility::Violation(cert)) => {
                let lower_only = DcaopInstance::new(
                    instance.graph.clone(),
                    instance.bounds.f().to_vec(),
                    vec![0; instance.vertex_count()],
                ).unwrap();
                prop_assert!(cert.is_valid(&instance.graph, &lower_only.bounds));
            }
            SolveResult::Infeasible(other) => prop_assert!(false, "unexpected {other:?}"),
        }
    }

    #[test]
    fn disjoint_bounds_reversal_symmetry(instance in instance_strategy(6, 10)) {
        // swapping f and g and reversing the order maps witnesses to witnesses
        let n = instance.vertex_count();
        let f: Vec<usize> = (0..n).map(|v| if instance.bounds.g()[v] > 0 { 0 } else { instance.bounds.f()[v] }).collect();
        let g = instance.bounds.g().to_vec();
        let forward = DcaopInstance::new(instance.graph.clone(), f.clone(), g.clone()).unwrap();
        let swapped = DcaopInstance::new(instance.graph.clone(), g, f).unwrap();
        let a = solve_disjoint_bounds(&forward.graph, &forward.bounds).unwrap();
        let b = solve_disjoint_bounds(&swapped.graph, &swapped.bounds).unwrap();
        prop_assert_eq!(a.is_feasible(), b.is_feasible());
        if let Some(order) = a.order() {
            let o = orientation_from_order(&swapped.graph, &order.reversed()).unwrap();
            prop_assert!(acyclic_orient::verify_dcaop(&swapped, &o).unwrap().is_ok());
        }
    }

    #[test]
    fn nae_negation_symmetry(formula in nae_strategy()) {
        let direct = nae_oracle(&formula).unwrap();
        let negated = formula.negated();
        prop_assert_eq!(direct.is_some(), nae_oracle(&negated).unwrap().is_some());
        if let Some(a) = direct {
            let flipped: Vec<bool> = a.iter().map(|x| !x).collect();
            prop_assert!(formula.is_satisfied_by(&flipped));
            prop_assert!(negated.is_satisfied_by(&a));
        }
    }

    #[test]
    fn nae_gadget_size_and_degrees(formula in nae_strategy()) {
        let (n, m) = (formula.variable_count, formula.clauses.len());
        let (target, map) = nae_to_pr1(&formula).unwrap();
        prop_assert_eq!(target.graph.vertex_count(), 8 * n + 3 * m + 2);
        prop_assert_eq!(target.graph.edge_count(), 22 * n + 8 * m + 2);
        let layout = map.layout;
        for i in 1..layout.last_skeleton_index() {
            prop_assert_eq!(target.graph.degree(layout.skeleton(i)), 4);
        }
        for i in 1..=n {
            prop_assert_eq!(target.graph.degree(layout.y(i)), 4);
            prop_assert_eq!(target.graph.degree(layout.z(i)), 4);
        }
        for j in 1..=m {
            prop_assert_eq!(target.graph.degree(layout.clause(j)), 5);
        }
    }

    #[test]
    fn split_sizes(instance in instance_strategy(6, 10)) {
        let (target, map) = split_to_simple(&instance).unwrap();
        let (n, m) = (instance.vertex_count(), instance.graph.edge_count());
        prop_assert_eq!(target.vertex_count(), n + m);
        prop_assert_eq!(target.graph.edge_count(), 2 * m);
        prop_assert!(target.graph.is_simple());
        for e in 0..m {
            let w = map.midpoint(e);
            prop_assert_eq!((target.bounds.f()[w], target.bounds.g()[w]), (1, 1));
        }
    }

    #[test]
    fn terminal_padding_indegree((graph, order) in graph_with_order(5, 8), seed in any::<u64>()) {
        let instance = common::random_bounds(&mut common::rng(seed), &graph);
        let (target, map) = dcaop_to_pr1(&instance).unwrap();
        let source_o = orientation_from_order(&graph, &order).unwrap();
        let target_o = orientation_from_order(&target.graph, &map.forward_order(&order).unwrap()).unwrap();
        for v in 0..graph.vertex_count() {
            prop_assert_eq!(target_o.indegree(v), source_o.indegree(v) + map.k - instance.bounds.f()[v]);
        }
    }

    #[test]
    fn dispatch_agrees_with_oracle(instance in instance_strategy(6, 10)) {
        let wrapped = Instance::Dcaop(instance);
        let config = OracleConfig::default();
        prop_assert_eq!(
            solve_instance(&wrapped, &config).unwrap().is_feasible(),
            oracle_instance(&wrapped, &config).unwrap().is_feasible()
        );
    }

    #[test]
    fn round_trip_dcaop(instance in instance_strategy(6, 10)) {
        let wrapped = Instance::Dcaop(instance);
        prop_assert_eq!(parse_instance(&serialize_instance(&wrapped)).unwrap(), wrapped);
    }

    #[test]
    fn round_trip_graph_kinds(graph in graph_strategy(6, 10), k in 1..3usize, l in 1..3usize, cover in 0..=6usize) {
        let n = graph.vertex_count();
        let pr1 = Instance::Pr1(Pr1Instance::new(graph.clone(), 0, n - 1, k, l).unwrap());
        prop_assert_eq!(parse_instance(&serialize_instance(&pr1)).unwrap(), pr1);
        let vc = Instance::Vc(VcInstance::new(graph, cover.min(n)).unwrap());
        prop_assert_eq!(parse_instance(&serialize_instance(&vc)).unwrap(), vc);
    }

    #[test]
    fn round_trip_nae(formula in nae_strategy()) {
        let wrapped = Instance::Nae(formula);
        prop_assert_eq!(parse_instance(&serialize_instance(&wrapped)).unwrap(), wrapped);
    }

    #[test]
    fn round_trip_problem3(n in 4..=7usize, picks in subsequence((0..21).collect::<Vec<usize>>(), 0..=10)) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges = picks.into_iter().filter(|&i| i < pairs.len()).map(|i| pairs[i]).collect();
        let graph = MultiGraph::new(n, edges).unwrap();
        let inst = acyclic_orient::reductions::Problem3Instance::new(graph, [0, 1, n - 2, n - 1]).unwrap();
        let wrapped = Instance::Problem3(inst);
        prop_assert_eq!(parse_instance(&serialize_instance(&wrapped)).unwrap(), wrapped);
    }
}
