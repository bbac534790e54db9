//! Plain-text periodic graphs: a basis header, node positions, and labelled edges.
//!
//! ```text
//! periodic_graph 3
//! basis 1 0 0
//! basis 0 1 0
//! basis 0 0 1
//! node 0 0 0 0
//! e 0 0 1 0 0
//! ```

use std::fmt::Write;

use skelforge_core::geometry::{parse_rational, Vec3};
use skelforge_core::nets::{PEdge, PeriodicGraph};

use crate::error::CliError;
use crate::json::triple;

pub fn to_pgr(g: &PeriodicGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "periodic_graph {}", g.basis().len());
    for b in g.basis() {
        let _ = writeln!(out, "basis {}", triple(b).join(" "));
    }
    for (i, p) in g.nodes().iter().enumerate() {
        let _ = writeln!(out, "node {i} {}", triple(p).join(" "));
    }
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {} {} {}", e.a, e.b, e.label[0], e.label[1], e.label[2]);
    }
    out
}

fn vec3(fields: &[&str], line: usize) -> Result<Vec3, CliError> {
    let bad = || CliError::parse(format!("line {line}: expected three rationals"));
    let [x, y, z] = fields else { return Err(bad()) };
    let r = |s: &str| parse_rational(s).map_err(|_| bad());
    Ok(Vec3::new(r(x)?, r(y)?, r(z)?))
}

pub fn parse_pgr(text: &str) -> Result<PeriodicGraph, CliError> {
    let mut basis = Vec::new();
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut header = false;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [c, ..] if c.starts_with('#') => {}
            ["periodic_graph", _] => header = true,
            ["basis", rest @ ..] => basis.push(vec3(rest, line)?),
            ["node", i, rest @ ..] => {
                if i.parse::<usize>().ok() != Some(nodes.len()) {
                    return Err(CliError::parse(format!("line {line}: nodes must be numbered in order")));
                }
                nodes.push(vec3(rest, line)?);
            }
            ["e", a, b, t1, t2, t3] => {
                let int = |s: &str| s.parse::<i64>().map_err(|_| CliError::parse(format!("line {line}: bad integer {s:?}")));
                let idx = |s: &str| s.parse::<usize>().map_err(|_| CliError::parse(format!("line {line}: bad node {s:?}")));
                edges.push(PEdge { a: idx(a)?, b: idx(b)?, label: [int(t1)?, int(t2)?, int(t3)?] });
            }
            _ => return Err(CliError::parse(format!("line {line}: unrecognized record {raw:?}"))),
        }
    }
    if !header {
        return Err(CliError::parse("missing periodic_graph header"));
    }
    Ok(PeriodicGraph::new(basis, nodes, edges)?)
}
