//! Pick the cheapest solver that is exact for an instance.

use crate::error::{OrientError, Result};
use crate::format::Instance;
use crate::graph::{DcaopInstance, VertexOrder};
use crate::oracle::{dcaop_oracle_with, nae_oracle, pr1_oracle_with, vc_oracle, OracleConfig};
use crate::reductions::Problem3Instance;
use crate::solvers::{
    greedy_min_indegree_orient, solve_disjoint_bounds, solve_pr1_k1, solve_strict, Infeasibility,
    SolveResult,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solver {
    Strict,
    Greedy,
    DisjointBounds,
    StNumbering,
    Oracle,
    CoverSearch,
    AssignmentSearch,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::Strict => "strict",
            Solver::Greedy => "greedy",
            Solver::DisjointBounds => "disjoint_bounds",
            Solver::StNumbering => "st_numbering",
            Solver::Oracle => "oracle",
            Solver::CoverSearch => "cover_search",
            Solver::AssignmentSearch => "assignment_search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Order(VertexOrder),
    Cover(Vec<usize>),
    Assignment(Vec<bool>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub solver: Solver,
    pub outcome: std::result::Result<Answer, Infeasibility>,
}

impl Decision {
    fn from_orders(solver: Solver, result: SolveResult) -> Self {
        let outcome = match result {
            SolveResult::Feasible(order) => Ok(Answer::Order(order)),
            SolveResult::Infeasible(why) => Err(why),
        };
        Self { solver, outcome }
    }

    pub fn is_feasible(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// Which polynomial solver applies to these bounds, if any.
pub fn polynomial_solver(instance: &DcaopInstance) -> Option<Solver> {
    let bounds = &instance.bounds;
    if bounds.all_strict(&instance.graph) {
        Some(Solver::Strict)
    } else if bounds.lower_only() {
        Some(Solver::Greedy)
    } else if bounds.disjoint() {
        Some(Solver::DisjointBounds)
    } else {
        None
    }
}

fn solve_dcaop(instance: &DcaopInstance, config: &OracleConfig) -> Result<Decision> {
    let (graph, bounds) = (&instance.graph, &instance.bounds);
    let (solver, result) = match polynomial_solver(instance) {
        Some(Solver::Strict) => (Solver::Strict, solve_strict(graph, bounds)?),
        Some(Solver::Greedy) => (Solver::Greedy, greedy_min_indegree_orient(graph, bounds.f())?),
        Some(_) => (Solver::DisjointBounds, solve_disjoint_bounds(graph, bounds)?),
        None => (Solver::Oracle, dcaop_oracle_with(instance, config)?),
    };
    Ok(Decision::from_orders(solver, result))
}

fn solve_problem3(instance: &Problem3Instance, config: &OracleConfig) -> Result<Decision> {
    let result = match instance.to_dcaop() {
        Ok(bounded) => dcaop_oracle_with(&bounded, config)?,
        Err(OrientError::ImmediatelyInfeasible { vertex, .. }) => {
            SolveResult::Infeasible(Infeasibility::ImmediatelyInfeasible { vertex })
        }
        Err(e) => return Err(e),
    };
    Ok(Decision::from_orders(Solver::Oracle, result))
}

fn search_other(instance: &Instance) -> Result<Decision> {
    match instance {
        Instance::Vc(inst) => Ok(Decision {
            solver: Solver::CoverSearch,
            outcome: vc_oracle(inst)?.map(Answer::Cover).ok_or(Infeasibility::Exhausted),
        }),
        Instance::Nae(inst) => Ok(Decision {
            solver: Solver::AssignmentSearch,
            outcome: nae_oracle(inst)?
                .map(Answer::Assignment)
                .ok_or(Infeasibility::Exhausted),
        }),
        _ => unreachable!("graph-orientation kinds handled by the caller"),
    }
}

/// Polynomial solver when one applies, otherwise the exact search (subject to `config`).
pub fn solve_instance(instance: &Instance, config: &OracleConfig) -> Result<Decision> {
    match instance {
        Instance::Dcaop(inst) => solve_dcaop(inst, config),
        Instance::Pr1(inst) if inst.k == 1 && inst.l == 1 => {
            Ok(Decision::from_orders(Solver::StNumbering, solve_pr1_k1(inst)?))
        }
        Instance::Pr1(inst) => Ok(Decision::from_orders(
            Solver::Oracle,
            pr1_oracle_with(inst, config)?,
        )),
        Instance::Problem3(inst) => solve_problem3(inst, config),
        Instance::Vc(_) | Instance::Nae(_) => search_other(instance),
    }
}

/// Always the exhaustive search.
pub fn oracle_instance(instance: &Instance, config: &OracleConfig) -> Result<Decision> {
    match instance {
        Instance::Dcaop(inst) => Ok(Decision::from_orders(
            Solver::Oracle,
            dcaop_oracle_with(inst, config)?,
        )),
        Instance::Pr1(inst) => Ok(Decision::from_orders(
            Solver::Oracle,
            pr1_oracle_with(inst, config)?,
        )),
        Instance::Problem3(inst) => solve_problem3(inst, config),
        Instance::Vc(_) | Instance::Nae(_) => search_other(instance),
    }
}
