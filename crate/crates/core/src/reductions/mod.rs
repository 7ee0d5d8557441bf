//! Executable hardness constructions with witness maps in both directions.

mod nae;
mod problem3;
mod split;
mod terminals;
mod vc;

pub use nae::{
    assignment_to_order, nae_to_pr1, order_to_assignment, GadgetLayout, GadgetRole, NaeGadgetMap,
};
pub use problem3::{pr1_to_problem3, Problem3Instance, Problem3Map};
pub use split::{split_to_simple, SplitMap};
pub use terminals::{dcaop_to_pr1, TerminalMap};
pub use vc::{cover_to_order, orientation_to_cover, vc_to_dcaop, VcReductionMap, VcRole};

use crate::verify::{BoundFailure, PathCount};

fn describe_bound_failure(labels: &[String], failure: &BoundFailure) -> String {
    format!(
        "vertex {} has indegree {} outside [{}, {}]",
        labels[failure.vertex], failure.indegree, failure.lower, failure.upper
    )
}

fn describe_path_failure(labels: &[String], count: &PathCount) -> String {
    format!(
        "vertex {} has {} paths from s and {} paths to t",
        labels[count.vertex], count.from_source, count.to_sink
    )
}
