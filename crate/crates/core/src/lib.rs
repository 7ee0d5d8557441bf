//! Degree-constrained acyclic orientations of multigraphs.
//!
//! Polynomial solvers for the tractable bound classes, an exact subset-search oracle for the
//! general case, and executable reductions (vertex cover, path problem, not-all-equal 3-SAT)
//! with witness maps in both directions.

pub mod cli;
pub mod dispatch;
pub mod error;
pub mod flow;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use error::{OrientError, Result};
pub use flow::count_arc_disjoint_paths;
pub use format::{parse_instance, serialize_instance, Instance};
pub use graph::{
    cut_degree, orientation_from_order, topological_order, BoundSide, DcaopInstance, DegreeBounds,
    MultiGraph, Orientation, Pr1Instance, VertexOrder, ViolationCertificate,
};
pub use oracle::{
    dcaop_oracle, dcaop_oracle_with, nae_oracle, pr1_oracle, pr1_oracle_with, vc_oracle,
    NaeInstance, OracleConfig, VcInstance,
};
pub use solvers::{
    greedy_min_indegree_orient, solve_disjoint_bounds, solve_pr1_k1, solve_strict, st_numbering,
    Infeasibility, SolveResult, StNumbering,
};
pub use verify::{pr1_to_dcaop_bounds, verify_dcaop, verify_pr1, DcaopVerdict, Pr1Verdict};
