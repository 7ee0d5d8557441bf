//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! p dcaop <n> <m>                         v <id> <f> <g>   e <u> <v>
//! p pr1 <n> <m> <s> <t> <k> <l>           e <u> <v>
//! p vc <n> <m> <k>                        e <u> <v>
//! p nae <nvars> <nclauses>                c <l1> <l2> <l3>
//! p problem3 <n> <m> <s1> <s2> <t1> <t2>  e <u> <v>
//! ```
//!
//! Vertex ids are 1-based in files. Omitted `v` lines mean `f = g = 0`.

use std::fmt::Write as _;

use crate::error::{OrientError, Result};
use crate::graph::{DcaopInstance, MultiGraph, Pr1Instance};
use crate::oracle::{Literal, NaeInstance, VcInstance};
use crate::reductions::Problem3Instance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Dcaop(DcaopInstance),
    Pr1(Pr1Instance),
    Vc(VcInstance),
    Nae(NaeInstance),
    Problem3(Problem3Instance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Dcaop(_) => "dcaop",
            Instance::Pr1(_) => "pr1",
            Instance::Vc(_) => "vc",
            Instance::Nae(_) => "nae",
            Instance::Problem3(_) => "problem3",
        }
    }

    /// The underlying graph; `None` for formulas.
    pub fn graph(&self) -> Option<&MultiGraph> {
        match self {
            Instance::Dcaop(i) => Some(&i.graph),
            Instance::Pr1(i) => Some(&i.graph),
            Instance::Vc(i) => Some(&i.graph),
            Instance::Problem3(i) => Some(&i.graph),
            Instance::Nae(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn parse_error(pos: Pos, message: impl Into<String>) -> OrientError {
    OrientError::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                tokens.push(Token {
                    text: &content[s..i],
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    tokens
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn pos(&self, index: usize) -> Pos {
        Pos {
            line: self.number,
            column: self.tokens.get(index).map_or(1, |t| t.column),
        }
    }

    fn expect_arity(&self, arity: usize) -> Result<()> {
        if self.tokens.len() == arity + 1 {
            return Ok(());
        }
        let pos = if self.tokens.len() > arity + 1 {
            self.pos(arity + 1)
        } else {
            Pos {
                line: self.number,
                column: self.tokens.last().map_or(1, |t| t.column + t.text.chars().count()),
            }
        };
        Err(parse_error(
            pos,
            format!(
                "'{}' line takes {arity} fields, found {}",
                self.tokens[0].text,
                self.tokens.len() - 1
            ),
        ))
    }

    fn number<T: std::str::FromStr>(&self, index: usize) -> Result<T> {
        let token = self.tokens[index];
        token
            .text
            .parse()
            .map_err(|_| parse_error(self.pos(index), format!("expected an integer, found '{}'", token.text)))
    }

    /// A 1-based vertex id, returned 0-based.
    fn vertex(&self, index: usize, vertex_count: usize) -> Result<usize> {
        let id: usize = self.number(index)?;
        if id == 0 || id > vertex_count {
            return Err(parse_error(
                self.pos(index),
                format!("vertex {id} out of range 1..={vertex_count}"),
            ));
        }
        Ok(id - 1)
    }
}

struct Header {
    kind: String,
    params: Vec<usize>,
    pos: Pos,
    line: usize,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| Line {
            number: i + 1,
            tokens: tokenize(raw),
        })
        .filter(|l| !l.tokens.is_empty());

    let first = lines
        .next()
        .ok_or_else(|| parse_error(Pos { line: 1, column: 1 }, "missing 'p' header"))?;
    if first.tokens[0].text != "p" {
        return Err(parse_error(first.pos(0), "first line must be a 'p' header"));
    }
    if first.tokens.len() < 2 {
        return Err(parse_error(first.pos(0), "header is missing the problem kind"));
    }
    let kind = first.tokens[1].text.to_string();
    let arity = match kind.as_str() {
        "dcaop" => 2,
        "pr1" => 6,
        "vc" => 3,
        "nae" => 2,
        "problem3" => 6,
        other => return Err(parse_error(first.pos(1), format!("unknown problem kind '{other}'"))),
    };
    if first.tokens.len() != arity + 2 {
        return Err(parse_error(
            first.pos(first.tokens.len().min(arity + 2)),
            format!("'p {kind}' takes {arity} parameters, found {}", first.tokens.len() - 2),
        ));
    }
    let params = (2..arity + 2)
        .map(|i| first.number(i))
        .collect::<Result<Vec<usize>>>()?;
    let header = Header {
        kind,
        params,
        pos: first.pos(0),
        line: first.number,
    };
    let body: Vec<Line<'_>> = lines.collect();
    if header.kind == "nae" {
        parse_nae(&header, &body)
    } else {
        parse_graph_instance(&header, &body)
    }
}

fn parse_nae(header: &Header, body: &[Line<'_>]) -> Result<Instance> {
    let (variables, clause_count) = (header.params[0], header.params[1]);
    if variables == 0 {
        return Err(parse_error(header.pos, "formula needs at least one variable"));
    }
    let mut clauses = Vec::with_capacity(clause_count);
    for line in body {
        if line.tokens[0].text != "c" {
            return Err(parse_error(
                line.pos(0),
                format!("unexpected '{}' line in nae file", line.tokens[0].text),
            ));
        }
        line.expect_arity(3)?;
        let mut clause: [Literal; 3] = [0; 3];
        for (slot, lit) in clause.iter_mut().enumerate() {
            let value: Literal = line.number(slot + 1)?;
            if value == 0 || value.unsigned_abs() as usize > variables {
                return Err(parse_error(
                    line.pos(slot + 1),
                    format!("literal {value} out of range for {variables} variables"),
                ));
            }
            *lit = value;
        }
        clauses.push(clause);
    }
    if clauses.len() != clause_count {
        return Err(count_mismatch(header, body, "clauses", clause_count, clauses.len()));
    }
    Ok(Instance::Nae(NaeInstance::new(variables, clauses)?))
}

fn count_mismatch(header: &Header, body: &[Line<'_>], what: &str, expected: usize, found: usize) -> OrientError {
    let line = body.last().map_or(header.line, |l| l.number);
    parse_error(
        Pos { line, column: 1 },
        format!("header declares {expected} {what}, found {found}"),
    )
}

fn parse_graph_instance(header: &Header, body: &[Line<'_>]) -> Result<Instance> {
    let (n, m) = (header.params[0], header.params[1]);
    if n == 0 {
        return Err(parse_error(header.pos, "graph needs at least one vertex"));
    }
    let dcaop = header.kind == "dcaop";
    let mut edges = Vec::with_capacity(m);
    let mut bounds: Vec<Option<(usize, usize, Pos)>> = vec![None; n];
    for line in body {
        match line.tokens[0].text {
            "e" => {
                line.expect_arity(2)?;
                let u = line.vertex(1, n)?;
                let v = line.vertex(2, n)?;
                if u == v {
                    return Err(parse_error(line.pos(2), format!("loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            "v" if dcaop => {
                line.expect_arity(3)?;
                let v = line.vertex(1, n)?;
                if bounds[v].is_some() {
                    return Err(parse_error(line.pos(1), format!("vertex {} given twice", v + 1)));
                }
                bounds[v] = Some((line.number(2)?, line.number(3)?, line.pos(0)));
            }
            other => {
                return Err(parse_error(
                    line.pos(0),
                    format!("unexpected '{other}' line in {} file", header.kind),
                ))
            }
        }
    }
    if edges.len() != m {
        return Err(count_mismatch(header, body, "edges", m, edges.len()));
    }
    let graph = MultiGraph::new(n, edges)?;
    let header_vertex = |index: usize| -> Result<usize> {
        let id = header.params[index];
        if id == 0 || id > n {
            return Err(parse_error(header.pos, format!("vertex {id} out of range 1..={n}")));
        }
        Ok(id - 1)
    };
    let at_header = |e: OrientError| parse_error(header.pos, e.to_string());

    let instance = match header.kind.as_str() {
        "dcaop" => {
            let degrees = graph.degrees();
            for (v, entry) in bounds.iter().enumerate() {
                if let Some((f, g, pos)) = *entry {
                    if f + g > degrees[v] {
                        return Err(parse_error(
                            pos,
                            format!("f + g = {} exceeds degree {} of vertex {}", f + g, degrees[v], v + 1),
                        ));
                    }
                }
            }
            let f = bounds.iter().map(|b| b.map_or(0, |(f, _, _)| f)).collect();
            let g = bounds.iter().map(|b| b.map_or(0, |(_, g, _)| g)).collect();
            Instance::Dcaop(DcaopInstance::new(graph, f, g)?)
        }
        "pr1" => {
            let (s, t) = (header_vertex(2)?, header_vertex(3)?);
            let (k, l) = (header.params[4], header.params[5]);
            Instance::Pr1(Pr1Instance::new(graph, s, t, k, l).map_err(at_header)?)
        }
        "vc" => Instance::Vc(VcInstance::new(graph, header.params[2]).map_err(at_header)?),
        "problem3" => {
            let terminals = [
                header_vertex(2)?,
                header_vertex(3)?,
                header_vertex(4)?,
                header_vertex(5)?,
            ];
            Instance::Problem3(Problem3Instance::new(graph, terminals).map_err(at_header)?)
        }
        _ => unreachable!("kind checked in header"),
    };
    Ok(instance)
}

fn write_edges(out: &mut String, graph: &MultiGraph) {
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
}

/// Canonical text form; `parse_instance` inverts it.
pub fn serialize_instance(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Dcaop(inst) => {
            let graph = &inst.graph;
            let _ = writeln!(out, "p dcaop {} {}", graph.vertex_count(), graph.edge_count());
            let (f, g) = (inst.bounds.f(), inst.bounds.g());
            for v in (0..graph.vertex_count()).filter(|&v| f[v] != 0 || g[v] != 0) {
                let _ = writeln!(out, "v {} {} {}", v + 1, f[v], g[v]);
            }
            write_edges(&mut out, graph);
        }
        Instance::Pr1(inst) => {
            let graph = &inst.graph;
            let _ = writeln!(
                out,
                "p pr1 {} {} {} {} {} {}",
                graph.vertex_count(),
                graph.edge_count(),
                inst.s + 1,
                inst.t + 1,
                inst.k,
                inst.l
            );
            write_edges(&mut out, graph);
        }
        Instance::Vc(inst) => {
            let graph = &inst.graph;
            let _ = writeln!(out, "p vc {} {} {}", graph.vertex_count(), graph.edge_count(), inst.k);
            write_edges(&mut out, graph);
        }
        Instance::Nae(inst) => {
            let _ = writeln!(out, "p nae {} {}", inst.variable_count, inst.clauses.len());
            for [a, b, c] in &inst.clauses {
                let _ = writeln!(out, "c {a} {b} {c}");
            }
        }
        Instance::Problem3(inst) => {
            let graph = &inst.graph;
            let [s1, s2, t1, t2] = inst.terminals;
            let _ = writeln!(
                out,
                "p problem3 {} {} {} {} {} {}",
                graph.vertex_count(),
                graph.edge_count(),
                s1 + 1,
                s2 + 1,
                t1 + 1,
                t2 + 1
            );
            write_edges(&mut out, graph);
        }
    }
    out
}
