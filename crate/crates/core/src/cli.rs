//! The `orient` command line. Every command prints one JSON document; vertex ids in JSON and
//! on the command line are 1-based like the instance files.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::dispatch::{oracle_instance, solve_instance, Answer, Decision};
use crate::error::{OrientError, Result};
use crate::format::{parse_instance, serialize_instance, Instance};
use crate::graph::{orientation_from_order, BoundSide, DcaopInstance, MultiGraph, Pr1Instance, VertexOrder};
use crate::oracle::{is_vertex_cover, Literal, NaeInstance, OracleConfig, VcInstance, DEFAULT_ORACLE_CAP};
use crate::reductions::{
    assignment_to_order, cover_to_order, dcaop_to_pr1, nae_to_pr1, order_to_assignment,
    orientation_to_cover, pr1_to_problem3, split_to_simple, vc_to_dcaop, Problem3Instance,
};
use crate::solvers::Infeasibility;
use crate::verify::{verify_dcaop, verify_pr1, BoundFailure, DcaopVerdict};

#[derive(Debug, Parser)]
#[command(name = "orient", about = "Degree-constrained acyclic orientations", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide an instance with the fastest exact method.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_vertices: usize,
    },
    /// Check a witness against an instance.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        witness: WitnessArgs,
    },
    /// Decide an instance by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_vertices: usize,
    },
    /// Write the reduced instance to `output`.
    Reduce {
        reduction: Reduction,
        input: PathBuf,
        output: PathBuf,
    },
    /// Translate a witness across a reduction of the instance in `file`.
    MapWitness {
        direction: Direction,
        reduction: Reduction,
        file: PathBuf,
        #[command(flatten)]
        witness: WitnessArgs,
    },
    /// Print a random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cover size (vc) or in-path demand (pr1); random when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// Out-path demand (pr1); random when omitted.
        #[arg(long)]
        l: Option<usize>,
    },
}

#[derive(Debug, clap::Args)]
struct WitnessArgs {
    /// Comma-separated vertex order, e.g. `1,3,2,4`.
    #[arg(long)]
    order: Option<String>,
    /// Comma-separated cover vertices.
    #[arg(long)]
    cover: Option<String>,
    /// Comma-separated signed literals, one per variable, e.g. `1,-2,3`.
    #[arg(long, allow_hyphen_values = true)]
    assignment: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reduction {
    Vc2dcaop,
    Dcaop2pr1,
    Nae2pr1,
    Simplify,
    #[value(name = "pr1toP3")]
    Pr1ToP3,
}

impl Reduction {
    pub const ALL: [Reduction; 5] = [
        Reduction::Vc2dcaop,
        Reduction::Dcaop2pr1,
        Reduction::Nae2pr1,
        Reduction::Simplify,
        Reduction::Pr1ToP3,
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Reduction::Vc2dcaop => "vc2dcaop",
            Reduction::Dcaop2pr1 => "dcaop2pr1",
            Reduction::Nae2pr1 => "nae2pr1",
            Reduction::Simplify => "simplify",
            Reduction::Pr1ToP3 => "pr1toP3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Dcaop,
    Pr1,
    Vc,
    Nae,
    Problem3,
}

/// Exit code and stdout of one invocation; `argv[0]` is the program name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub stdout: String,
}

pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CommandOutput {
                    exit_code: 0,
                    stdout: e.to_string(),
                };
            }
            return error_output(&e.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Gen {
            kind,
            n,
            m,
            seed,
            k,
            l,
        } => {
            return match generate_instance(kind, n, m, seed, k, l) {
                Ok(inst) => CommandOutput {
                    exit_code: 0,
                    stdout: serialize_instance(&inst),
                },
                Err(e) => error_output(&e.to_string()),
            }
        }
        Command::Solve { file, max_vertices } => load(&file).and_then(|inst| {
            let decision = solve_instance(&inst, &OracleConfig::with_max_vertices(max_vertices))?;
            Ok(decision_json(&inst, &decision))
        }),
        Command::Oracle { file, max_vertices } => load(&file).and_then(|inst| {
            let decision = oracle_instance(&inst, &OracleConfig::with_max_vertices(max_vertices))?;
            Ok(decision_json(&inst, &decision))
        }),
        Command::Verify { file, witness } => load(&file).and_then(|inst| verify_json(&inst, &witness)),
        Command::Reduce {
            reduction,
            input,
            output,
        } => load(&input).and_then(|inst| reduce_command(reduction, &inst, &output)),
        Command::MapWitness {
            direction,
            reduction,
            file,
            witness,
        } => load(&file).and_then(|inst| map_witness(direction, reduction, &inst, &witness)),
    };
    match result {
        Ok(value) => CommandOutput {
            exit_code: 0,
            stdout: format!("{value}\n"),
        },
        Err(e) => error_output(&e.to_string()),
    }
}

fn error_output(message: &str) -> CommandOutput {
    CommandOutput {
        exit_code: 1,
        stdout: format!("{}\n", json!({"status": "error", "message": message.trim_end()})),
    }
}

fn load(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path)
        .map_err(|e| OrientError::Precondition(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text)
}

fn ids(vertices: &[usize]) -> Value {
    json!(vertices.iter().map(|v| v + 1).collect::<Vec<_>>())
}

fn literals(assignment: &[bool]) -> Value {
    json!(assignment
        .iter()
        .enumerate()
        .map(|(i, &value)| if value { i as i64 + 1 } else { -(i as i64 + 1) })
        .collect::<Vec<_>>())
}

pub fn certificate_json(why: &Infeasibility) -> Value {
    match why {
        Infeasibility::Violation(cert) => json!({
            "kind": "violation",
            "side": match cert.side {
                BoundSide::Indegree => "indegree",
                BoundSide::Outdegree => "outdegree",
            },
            "violating_set": ids(&cert.violating_set),
        }),
        Infeasibility::SumMismatch {
            f_total,
            edge_count,
        } => json!({"kind": "sum_mismatch", "f_total": f_total, "edge_count": edge_count}),
        Infeasibility::CutVertex { vertex } => json!({"kind": "cut_vertex", "vertex": vertex + 1}),
        Infeasibility::Disconnected { unreachable } => {
            json!({"kind": "disconnected", "unreachable": unreachable + 1})
        }
        Infeasibility::ImmediatelyInfeasible { vertex } => {
            json!({"kind": "immediately_infeasible", "vertex": vertex + 1})
        }
        Infeasibility::Exhausted => json!({"kind": "exhausted"}),
    }
}

pub fn decision_json(instance: &Instance, decision: &Decision) -> Value {
    let mut out = json!({
        "kind": instance.kind(),
        "solver": decision.solver.name(),
    });
    match &decision.outcome {
        Ok(answer) => {
            out["status"] = json!("feasible");
            match answer {
                Answer::Order(order) => out["order"] = ids(order.as_slice()),
                Answer::Cover(cover) => out["cover"] = ids(cover),
                Answer::Assignment(assignment) => out["assignment"] = literals(assignment),
            }
        }
        Err(why) => {
            out["status"] = json!("infeasible");
            out["certificate"] = certificate_json(why);
        }
    }
    out
}

fn parse_list<T: std::str::FromStr>(flag: &str, text: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|item| {
            item.trim()
                .parse()
                .map_err(|_| OrientError::Precondition(format!("--{flag}: cannot parse '{item}'")))
        })
        .collect()
}

fn required<'a>(flag: &str, value: &'a Option<String>) -> Result<&'a str> {
    value
        .as_deref()
        .ok_or_else(|| OrientError::Precondition(format!("this witness needs --{flag}")))
}

fn parse_vertices(flag: &str, text: &str, vertex_count: usize) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    parse_list::<usize>(flag, text)?
        .into_iter()
        .map(|id| {
            if id == 0 || id > vertex_count {
                Err(OrientError::Precondition(format!(
                    "--{flag}: vertex {id} out of range 1..={vertex_count}"
                )))
            } else {
                Ok(id - 1)
            }
        })
        .collect()
}

fn parse_order(witness: &WitnessArgs, vertex_count: usize) -> Result<VertexOrder> {
    let order = parse_vertices("order", required("order", &witness.order)?, vertex_count)?;
    if order.len() != vertex_count {
        return Err(OrientError::LengthMismatch {
            expected: vertex_count,
            actual: order.len(),
        });
    }
    VertexOrder::new(order)
}

fn parse_assignment(witness: &WitnessArgs, variable_count: usize) -> Result<Vec<bool>> {
    let lits: Vec<Literal> = parse_list("assignment", required("assignment", &witness.assignment)?)?;
    let mut assignment = vec![None; variable_count];
    for lit in lits {
        let var = lit.unsigned_abs() as usize;
        if lit == 0 || var > variable_count {
            return Err(OrientError::Precondition(format!("--assignment: literal {lit} out of range")));
        }
        if assignment[var - 1].replace(lit > 0).is_some() {
            return Err(OrientError::Precondition(format!("--assignment: variable {var} given twice")));
        }
    }
    assignment
        .iter()
        .enumerate()
        .map(|(i, value)| {
            value.ok_or_else(|| OrientError::Precondition(format!("--assignment: variable {} missing", i + 1)))
        })
        .collect()
}

fn failures_json(failures: &[BoundFailure]) -> Value {
    json!(failures
        .iter()
        .map(|f| json!({"vertex": f.vertex + 1, "indegree": f.indegree, "lower": f.lower, "upper": f.upper}))
        .collect::<Vec<_>>())
}

fn dcaop_verdict_json(verdict: &DcaopVerdict) -> Value {
    json!({
        "acyclic": verdict.cycle.is_none(),
        "cycle": verdict.cycle.as_deref().map(ids),
        "failures": failures_json(&verdict.failures),
    })
}

fn verdict_status(ok: bool, verdict: Value, certificate: Value) -> Value {
    let mut out = json!({"status": if ok { "feasible" } else { "infeasible" }, "verdict": verdict});
    if !ok {
        out["certificate"] = certificate;
    }
    out
}

fn verify_json(instance: &Instance, witness: &WitnessArgs) -> Result<Value> {
    let mut out = match instance {
        Instance::Dcaop(inst) => {
            let order = parse_order(witness, inst.vertex_count())?;
            let verdict = verify_dcaop(inst, &orientation_from_order(&inst.graph, &order)?)?;
            let failing: Vec<usize> = verdict.failures.iter().map(|f| f.vertex).collect();
            verdict_status(
                verdict.is_ok(),
                dcaop_verdict_json(&verdict),
                json!({"kind": "bound_failures", "vertices": ids(&failing)}),
            )
        }
        Instance::Pr1(inst) => {
            let order = parse_order(witness, inst.graph.vertex_count())?;
            let verdict = verify_pr1(inst, &orientation_from_order(&inst.graph, &order)?)?;
            let counts: Vec<Value> = verdict
                .counts
                .iter()
                .map(|c| json!({"vertex": c.vertex + 1, "from_s": c.from_source, "to_t": c.to_sink}))
                .collect();
            let failing: Vec<usize> = verdict.failures.iter().map(|c| c.vertex).collect();
            verdict_status(
                verdict.is_ok(),
                json!({"acyclic": verdict.cycle.is_none(), "k": inst.k, "l": inst.l, "counts": counts}),
                json!({"kind": "path_failures", "vertices": ids(&failing)}),
            )
        }
        Instance::Problem3(inst) => {
            let order = parse_order(witness, inst.graph.vertex_count())?;
            let verdict = inst.verify(&order)?;
            let failing: Vec<usize> = verdict.failures.iter().map(|f| f.vertex).collect();
            verdict_status(
                verdict.is_ok(),
                dcaop_verdict_json(&verdict),
                json!({"kind": "bound_failures", "vertices": ids(&failing)}),
            )
        }
        Instance::Vc(inst) => {
            let cover = parse_vertices("cover", required("cover", &witness.cover)?, inst.graph.vertex_count())?;
            let mut member = vec![false; inst.graph.vertex_count()];
            cover.iter().for_each(|&v| member[v] = true);
            let uncovered = inst.graph.edges().iter().find(|&&(u, v)| !member[u] && !member[v]);
            let distinct = member.iter().filter(|&&b| b).count();
            let ok = is_vertex_cover(&inst.graph, &cover) && distinct == cover.len() && cover.len() == inst.k;
            let certificate = match uncovered {
                Some(&(u, v)) => json!({"kind": "uncovered_edge", "edge": [u + 1, v + 1]}),
                None => json!({"kind": "wrong_size", "size": distinct, "k": inst.k}),
            };
            verdict_status(
                ok,
                json!({"size": distinct, "k": inst.k, "uncovered_edge": uncovered.map(|&(u, v)| [u + 1, v + 1])}),
                certificate,
            )
        }
        Instance::Nae(inst) => {
            let assignment = parse_assignment(witness, inst.variable_count)?;
            let broken = inst.first_broken_clause(&assignment);
            verdict_status(
                broken.is_none(),
                json!({"failing_clause": broken.map(|j| j + 1)}),
                json!({"kind": "failing_clause", "clause": broken.map(|j| j + 1)}),
            )
        }
    };
    out["kind"] = json!(instance.kind());
    Ok(out)
}

fn wrong_kind(reduction: Reduction, instance: &Instance) -> OrientError {
    OrientError::Precondition(format!(
        "{} does not accept a {} instance",
        reduction.name(),
        instance.kind()
    ))
}

pub fn reduce_instance(reduction: Reduction, instance: &Instance) -> Result<Instance> {
    Ok(match (reduction, instance) {
        (Reduction::Vc2dcaop, Instance::Vc(inst)) => Instance::Dcaop(vc_to_dcaop(inst)?.0),
        (Reduction::Dcaop2pr1, Instance::Dcaop(inst)) => Instance::Pr1(dcaop_to_pr1(inst)?.0),
        (Reduction::Nae2pr1, Instance::Nae(inst)) => Instance::Pr1(nae_to_pr1(inst)?.0),
        (Reduction::Simplify, Instance::Dcaop(inst)) => Instance::Dcaop(split_to_simple(inst)?.0),
        (Reduction::Pr1ToP3, Instance::Pr1(inst)) => Instance::Problem3(pr1_to_problem3(inst)?.0),
        _ => return Err(wrong_kind(reduction, instance)),
    })
}

fn reduce_command(reduction: Reduction, instance: &Instance, output: &Path) -> Result<Value> {
    let reduced = reduce_instance(reduction, instance)?;
    fs::write(output, serialize_instance(&reduced))
        .map_err(|e| OrientError::Precondition(format!("cannot write {}: {e}", output.display())))?;
    let graph = reduced.graph().expect("reductions produce graphs");
    Ok(json!({
        "status": "done",
        "reduction": reduction.name(),
        "kind": reduced.kind(),
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "output": output.display().to_string(),
    }))
}

fn dcaop_ok(inst: &DcaopInstance, order: &VertexOrder) -> Result<bool> {
    Ok(verify_dcaop(inst, &orientation_from_order(&inst.graph, order)?)?.is_ok())
}

fn pr1_ok(inst: &Pr1Instance, order: &VertexOrder) -> Result<bool> {
    Ok(verify_pr1(inst, &orientation_from_order(&inst.graph, order)?)?.is_ok())
}

fn problem3_ok(inst: &Problem3Instance, order: &VertexOrder) -> Result<bool> {
    Ok(inst.verify(order)?.is_ok())
}

fn map_witness(direction: Direction, reduction: Reduction, instance: &Instance, witness: &WitnessArgs) -> Result<Value> {
    use Direction::{Backward, Forward};
    let (field, value, valid) = match (reduction, instance) {
        (Reduction::Vc2dcaop, Instance::Vc(inst)) => {
            let (reduced, map) = vc_to_dcaop(inst)?;
            match direction {
                Forward => {
                    let cover = parse_vertices("cover", required("cover", &witness.cover)?, inst.graph.vertex_count())?;
                    let order = cover_to_order(&map, &cover)?;
                    ("order", ids(order.as_slice()), dcaop_ok(&reduced, &order)?)
                }
                Backward => {
                    let order = parse_order(witness, reduced.vertex_count())?;
                    let cover = orientation_to_cover(&map, &order)?;
                    ("cover", ids(&cover), true)
                }
            }
        }
        (Reduction::Dcaop2pr1, Instance::Dcaop(inst)) => {
            let (target, map) = dcaop_to_pr1(inst)?;
            match direction {
                Forward => {
                    let order = map.forward_order(&parse_order(witness, inst.vertex_count())?)?;
                    ("order", ids(order.as_slice()), pr1_ok(&target, &order)?)
                }
                Backward => {
                    let order = map.backward_order(&parse_order(witness, target.graph.vertex_count())?)?;
                    ("order", ids(order.as_slice()), dcaop_ok(inst, &order)?)
                }
            }
        }
        (Reduction::Nae2pr1, Instance::Nae(inst)) => {
            let (target, map) = nae_to_pr1(inst)?;
            match direction {
                Forward => {
                    let order = assignment_to_order(&map, &parse_assignment(witness, inst.variable_count)?)?;
                    ("order", ids(order.as_slice()), pr1_ok(&target, &order)?)
                }
                Backward => {
                    let assignment = order_to_assignment(&map, &parse_order(witness, target.graph.vertex_count())?)?;
                    let valid = inst.is_satisfied_by(&assignment);
                    ("assignment", literals(&assignment), valid)
                }
            }
        }
        (Reduction::Simplify, Instance::Dcaop(inst)) => {
            let (target, map) = split_to_simple(inst)?;
            match direction {
                Forward => {
                    let order = map.forward_order(&parse_order(witness, inst.vertex_count())?)?;
                    ("order", ids(order.as_slice()), dcaop_ok(&target, &order)?)
                }
                Backward => {
                    let order = map.backward_order(&parse_order(witness, target.vertex_count())?)?;
                    ("order", ids(order.as_slice()), dcaop_ok(inst, &order)?)
                }
            }
        }
        (Reduction::Pr1ToP3, Instance::Pr1(inst)) => {
            let (target, map) = pr1_to_problem3(inst)?;
            match direction {
                Forward => {
                    let order = map.forward_order(&parse_order(witness, inst.graph.vertex_count())?)?;
                    ("order", ids(order.as_slice()), problem3_ok(&target, &order)?)
                }
                Backward => {
                    let order = map.backward_order(&parse_order(witness, target.graph.vertex_count())?)?;
                    ("order", ids(order.as_slice()), pr1_ok(inst, &order)?)
                }
            }
        }
        _ => return Err(wrong_kind(reduction, instance)),
    };
    let mut out = json!({
        "status": if valid { "feasible" } else { "infeasible" },
        "direction": match direction { Forward => "forward", Backward => "backward" },
        "reduction": reduction.name(),
        "valid": valid,
    });
    out[field] = value;
    Ok(out)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, m: usize, simple: bool) -> Result<MultiGraph> {
    if n == 0 {
        return Err(OrientError::EmptyGraph);
    }
    let pairs = n * (n - 1) / 2;
    if (n == 1 && m > 0) || (simple && m > pairs) {
        return Err(OrientError::Precondition(format!("cannot place {m} edges on {n} vertices")));
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    // spanning tree first when there are enough edges for one
    if m + 1 >= n {
        for v in 1..n {
            edges.push((rng.random_range(0..v), v));
        }
    }
    while edges.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n - 1);
        let v = if v >= u { v + 1 } else { v };
        if simple && edges.iter().any(|&(a, b)| key(a, b) == key(u, v)) {
            continue;
        }
        edges.push((u, v));
    }
    MultiGraph::new(n, edges)
}

/// Seeded instance generator; identical arguments give identical output.
pub fn generate_instance(kind: Kind, n: usize, m: usize, seed: u64, k: Option<usize>, l: Option<usize>) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match kind {
        Kind::Dcaop => {
            let graph = random_graph(&mut rng, n, m, false)?;
            let (mut f, mut g) = (Vec::with_capacity(n), Vec::with_capacity(n));
            for d in graph.degrees() {
                let lower = rng.random_range(0..=d);
                f.push(lower);
                g.push(rng.random_range(0..=d - lower));
            }
            Instance::Dcaop(DcaopInstance::new(graph, f, g)?)
        }
        Kind::Pr1 => {
            if n < 2 {
                return Err(OrientError::Precondition("pr1 needs at least two vertices".into()));
            }
            let graph = random_graph(&mut rng, n, m, false)?;
            let k = k.unwrap_or_else(|| rng.random_range(1..=2));
            let l = l.unwrap_or_else(|| rng.random_range(1..=2));
            Instance::Pr1(Pr1Instance::new(graph, 0, n - 1, k, l)?)
        }
        Kind::Vc => {
            let graph = random_graph(&mut rng, n, m, false)?;
            let k = k.unwrap_or_else(|| rng.random_range(0..=n));
            Instance::Vc(VcInstance::new(graph, k)?)
        }
        Kind::Nae => {
            let clauses = (0..m)
                .map(|_| {
                    [(); 3].map(|_| {
                        let var = rng.random_range(1..=n) as Literal;
                        if rng.random_bool(0.5) { var } else { -var }
                    })
                })
                .collect();
            Instance::Nae(NaeInstance::new(n, clauses)?)
        }
        Kind::Problem3 => {
            if n < 4 {
                return Err(OrientError::Precondition("problem3 needs at least four vertices".into()));
            }
            let graph = random_graph(&mut rng, n, m, true)?;
            Instance::Problem3(Problem3Instance::new(graph, [0, 1, n - 2, n - 1])?)
        }
    })
}
