//! Exponential-time ground truth: subset search for bounded orientations, plus brute-force
//! vertex cover and not-all-equal 3-SAT.
//!
//! Under an order-induced orientation the indegree of `v` is the number of neighbors already
//! placed, so whether a prefix can be extended depends only on the *set* of placed vertices.
//! The search walks prefix sets depth-first from the empty set, trying the lowest id first and
//! remembering sets that cannot be completed. That visits each of the `2^n` sets at most once.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{OrientError, Result};
use crate::graph::{orientation_from_order, DcaopInstance, MultiGraph, Pr1Instance, VertexOrder};
use crate::solvers::{Infeasibility, SolveResult};
use crate::verify::{pr1_to_dcaop_bounds, verify_pr1};

pub const DEFAULT_ORACLE_CAP: usize = 24;
pub const BRUTE_FORCE_CAP: usize = 20;
const HARD_CAP: usize = 64;
const DENSE_MEMO_LIMIT: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_ORACLE_CAP,
        }
    }
}

impl OracleConfig {
    /// Raise or lower the vertex cap. Values above 64 are clamped.
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self {
            max_vertices: max_vertices.min(HARD_CAP),
        }
    }
}

enum DeadSets {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl DeadSets {
    fn new(n: usize) -> Self {
        if n <= DENSE_MEMO_LIMIT {
            DeadSets::Dense(vec![0; ((1usize << n) / 64).max(1)])
        } else {
            DeadSets::Sparse(HashSet::new())
        }
    }

    fn contains(&self, set: u64) -> bool {
        match self {
            DeadSets::Dense(bits) => bits[(set >> 6) as usize] >> (set & 63) & 1 == 1,
            DeadSets::Sparse(sets) => sets.contains(&set),
        }
    }

    fn insert(&mut self, set: u64) {
        match self {
            DeadSets::Dense(bits) => bits[(set >> 6) as usize] |= 1 << (set & 63),
            DeadSets::Sparse(sets) => {
                sets.insert(set);
            }
        }
    }
}

pub fn dcaop_oracle(instance: &DcaopInstance) -> Result<SolveResult> {
    dcaop_oracle_with(instance, &OracleConfig::default())
}

pub fn dcaop_oracle_with(instance: &DcaopInstance, config: &OracleConfig) -> Result<SolveResult> {
    let graph = &instance.graph;
    let n = graph.vertex_count();
    if n > config.max_vertices.min(HARD_CAP) {
        return Err(OrientError::TooLarge {
            vertex_count: n,
            cap: config.max_vertices.min(HARD_CAP),
        });
    }
    let lower = instance.bounds.f();
    let upper: Vec<usize> = (0..n).map(|v| graph.degree(v) - instance.bounds.g()[v]).collect();
    let neighbors: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|v| {
            graph
                .simple_neighbors(v)
                .into_iter()
                .map(|w| (w, graph.multiplicity(v, w)))
                .collect()
        })
        .collect();

    // placed neighbors of each vertex, and how many unplaced vertices already exceed `upper`
    let mut before = vec![0usize; n];
    let mut overfull = 0usize;
    let place = |v: usize, placed: u64, before: &mut [usize], overfull: &mut usize, add: bool| {
        for &(w, mult) in &neighbors[v] {
            if placed >> w & 1 == 1 {
                if add {
                    before[w] += mult;
                } else {
                    before[w] -= mult;
                }
                continue;
            }
            let was = before[w] > upper[w];
            if add {
                before[w] += mult;
            } else {
                before[w] -= mult;
            }
            let is = before[w] > upper[w];
            match (was, is) {
                (false, true) => *overfull += 1,
                (true, false) => *overfull -= 1,
                _ => {}
            }
        }
    };

    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut dead = DeadSets::new(n);
    // (placed set, next candidate id)
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    let mut path: Vec<usize> = Vec::with_capacity(n);
    while let Some(top) = stack.last_mut() {
        let (placed, start) = *top;
        if placed == full {
            return Ok(SolveResult::Feasible(VertexOrder::new(path)?));
        }
        // an unplaced vertex with too many placed neighbors can never be placed
        let next = if overfull > 0 {
            None
        } else {
            (start..n).find(|&v| {
                placed >> v & 1 == 0
                    && lower[v] <= before[v]
                    && before[v] <= upper[v]
                    && !dead.contains(placed | 1 << v)
            })
        };
        match next {
            Some(v) => {
                top.1 = v + 1;
                stack.push((placed | 1 << v, 0));
                path.push(v);
                place(v, placed, &mut before, &mut overfull, true);
            }
            None => {
                dead.insert(placed);
                stack.pop();
                if let Some(v) = path.pop() {
                    place(v, placed & !(1 << v), &mut before, &mut overfull, false);
                }
            }
        }
    }
    Ok(SolveResult::Infeasible(Infeasibility::Exhausted))
}

pub fn pr1_oracle(instance: &Pr1Instance) -> Result<SolveResult> {
    pr1_oracle_with(instance, &OracleConfig::default())
}

/// Solves the path problem through its degree-bound form and flow-checks the witness.
pub fn pr1_oracle_with(instance: &Pr1Instance, config: &OracleConfig) -> Result<SolveResult> {
    let cap = config.max_vertices.min(HARD_CAP);
    if instance.graph.vertex_count() > cap {
        return Err(OrientError::TooLarge {
            vertex_count: instance.graph.vertex_count(),
            cap,
        });
    }
    let bounded = match pr1_to_dcaop_bounds(instance) {
        Ok(bounded) => bounded,
        Err(OrientError::ImmediatelyInfeasible { vertex, .. }) => {
            return Ok(SolveResult::Infeasible(
                Infeasibility::ImmediatelyInfeasible { vertex },
            ))
        }
        Err(e) => return Err(e),
    };
    let result = dcaop_oracle_with(&bounded, config)?;
    if let SolveResult::Feasible(order) = &result {
        let orientation = orientation_from_order(&instance.graph, order)?;
        let verdict = verify_pr1(instance, &orientation)?;
        if !verdict.is_ok() {
            return Err(OrientError::InvalidWitness(format!(
                "oracle witness fails path check at {:?}",
                verdict.failures
            )));
        }
    }
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    pub graph: MultiGraph,
    pub k: usize,
}

impl VcInstance {
    pub fn new(graph: MultiGraph, k: usize) -> Result<Self> {
        if k > graph.vertex_count() {
            return Err(OrientError::Precondition(format!(
                "cover size {k} exceeds vertex count {}",
                graph.vertex_count()
            )));
        }
        Ok(Self { graph, k })
    }
}

pub fn is_vertex_cover(graph: &MultiGraph, cover: &[usize]) -> bool {
    let mut member = vec![false; graph.vertex_count()];
    for &v in cover {
        if v >= member.len() {
            return false;
        }
        member[v] = true;
    }
    graph.edges().iter().all(|&(u, v)| member[u] || member[v])
}

/// Lexicographically first cover of size exactly `k`, if one exists.
pub fn vc_oracle(instance: &VcInstance) -> Result<Option<Vec<usize>>> {
    let n = instance.graph.vertex_count();
    if n > BRUTE_FORCE_CAP {
        return Err(OrientError::TooLarge {
            vertex_count: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    Ok((0..n)
        .combinations(instance.k)
        .find(|cover| is_vertex_cover(&instance.graph, cover)))
}

/// A literal is a signed 1-based variable index.
pub type Literal = i32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeInstance {
    pub variable_count: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl NaeInstance {
    pub fn new(variable_count: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if variable_count == 0 {
            return Err(OrientError::Precondition("need at least one variable".into()));
        }
        for clause in &clauses {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > variable_count {
                    return Err(OrientError::Precondition(format!(
                        "literal {lit} out of range"
                    )));
                }
            }
        }
        Ok(Self {
            variable_count,
            clauses,
        })
    }

    pub fn literal_value(lit: Literal, assignment: &[bool]) -> bool {
        let value = assignment[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            value
        } else {
            !value
        }
    }

    /// Index of the first clause whose literals all agree.
    pub fn first_broken_clause(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|clause| {
            let trues = clause
                .iter()
                .filter(|&&lit| Self::literal_value(lit, assignment))
                .count();
            trues == 0 || trues == 3
        })
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variable_count && self.first_broken_clause(assignment).is_none()
    }

    pub fn negated(&self) -> Self {
        Self {
            variable_count: self.variable_count,
            clauses: self.clauses.iter().map(|c| c.map(|lit| -lit)).collect(),
        }
    }
}

/// First NAE-satisfying assignment in binary counting order (`x1` is the low bit).
pub fn nae_oracle(instance: &NaeInstance) -> Result<Option<Vec<bool>>> {
    let n = instance.variable_count;
    if n > BRUTE_FORCE_CAP {
        return Err(OrientError::TooLarge {
            vertex_count: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    Ok((0u32..1 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .find(|assignment| instance.is_satisfied_by(assignment)))
}
