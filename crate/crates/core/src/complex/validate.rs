use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::geometry::Vec3;
use crate::nets::label_graph;

use super::{vertex_figure, SkeletalComplex};

/// Which incidence axioms to enforce on edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exactly two faces at every edge.
    Polyhedron,
    /// A constant number `r ≥ 2` of faces at every edge.
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub pass: bool,
    pub detail: String,
}

impl AxiomResult {
    fn ok(detail: impl Into<String>) -> Self {
        AxiomResult { pass: true, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        AxiomResult { pass: false, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub mode: Mode,
    pub connectivity: AxiomResult,
    pub vertex_figures: AxiomResult,
    pub faces_per_edge: AxiomResult,
    pub discreteness: AxiomResult,
    pub r: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.connectivity.pass && self.vertex_figures.pass && self.faces_per_edge.pass && self.discreteness.pass
    }
}

pub fn validate(complex: &SkeletalComplex, mode: Mode) -> ValidationReport {
    let (faces_per_edge, r) = check_faces_per_edge(complex, mode);
    ValidationReport {
        mode,
        connectivity: check_connectivity(complex),
        vertex_figures: check_vertex_figures(complex),
        faces_per_edge,
        discreteness: check_discreteness(complex),
        r,
    }
}

fn check_connectivity(complex: &SkeletalComplex) -> AxiomResult {
    if complex.vertices().is_empty() {
        return AxiomResult::fail("no vertices");
    }
    if complex.is_finite() {
        let n = complex.vertices().len();
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in complex.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let reached = seen.iter().filter(|&&s| s).count();
        return if reached == n {
            AxiomResult::ok("edge graph connected")
        } else {
            AxiomResult::fail(alloc::format!("edge graph reaches {reached} of {n} vertices"))
        };
    }
    match label_graph(complex, complex.periods()) {
        Ok(g) if g.is_connected() => AxiomResult::ok(alloc::format!(
            "quotient graph on {} nodes connected; cycle labels generate the translations",
            g.node_count()
        )),
        Ok(_) => AxiomResult::fail("quotient graph disconnected or cycle labels span a proper sublattice"),
        Err(e) => AxiomResult::fail(e.to_string()),
    }
}

fn check_vertex_figures(complex: &SkeletalComplex) -> AxiomResult {
    let interior = complex.interior_vertices();
    if interior.is_empty() {
        return AxiomResult::fail("no interior vertex");
    }
    for &v in &interior {
        match vertex_figure(complex, v) {
            Ok(g) if g.is_connected() => {}
            Ok(_) => return AxiomResult::fail(alloc::format!("vertex-figure at {} is disconnected", complex.vertices()[v])),
            Err(e) => return AxiomResult::fail(e.to_string()),
        }
    }
    AxiomResult::ok(alloc::format!("{} interior vertex-figures connected", interior.len()))
}

fn check_faces_per_edge(complex: &SkeletalComplex, mode: Mode) -> (AxiomResult, Option<usize>) {
    let mut counts = BTreeSet::new();
    let mut checked = 0;
    for (e, &[a, b]) in complex.edges().iter().enumerate() {
        if !complex.is_interior_edge(e) {
            continue;
        }
        counts.insert(complex.faces_at_edge(a, b).len());
        checked += 1;
    }
    if checked == 0 {
        return (AxiomResult::fail("no interior edge"), None);
    }
    let counts: Vec<usize> = counts.into_iter().collect();
    match (counts.as_slice(), mode) {
        ([2], Mode::Polyhedron) => (AxiomResult::ok("every interior edge lies in exactly 2 faces"), Some(2)),
        ([r], Mode::Complex) if *r >= 2 => {
            (AxiomResult::ok(alloc::format!("every interior edge lies in exactly {r} faces")), Some(*r))
        }
        ([r], _) => (AxiomResult::fail(alloc::format!("every interior edge lies in {r} faces")), None),
        (many, _) => (AxiomResult::fail(alloc::format!("face counts per edge vary: {many:?}")), None),
    }
}

fn check_discreteness(complex: &SkeletalComplex) -> AxiomResult {
    if complex.is_finite() {
        return AxiomResult::ok(alloc::format!("finite: {} vertices", complex.vertices().len()));
    }
    let verts = complex.vertices();
    let periods = complex.periods();
    if periods.rank() == 0 {
        return AxiomResult::fail("infinite patch without translations");
    }
    for b in periods.basis() {
        for (v, p) in verts.iter().enumerate() {
            let moved = p + b;
            if !complex.is_interior_vertex(v) || !complex.strictly_inside(&moved) {
                continue;
            }
            let Some(w) = complex.vertex_id(&moved) else {
                return AxiomResult::fail(alloc::format!("{p} + {b} is not a vertex"));
            };
            let shifted: BTreeSet<Vec3> = complex.neighbors(v).iter().map(|&x| &verts[x] + b).collect();
            let actual: BTreeSet<Vec3> = complex.neighbors(w).iter().map(|&x| verts[x].clone()).collect();
            if shifted != actual {
                return AxiomResult::fail(alloc::format!("edges at {p} do not translate by {b}"));
            }
        }
    }
    let layers = off_span_layers(complex);
    AxiomResult::ok(alloc::format!("periodic with translation lattice of rank {}; {layers} parallel layer(s)", periods.rank()))
}

/// Distinct translates of the lattice span met by the interior vertices.
fn off_span_layers(complex: &SkeletalComplex) -> usize {
    let basis = complex.periods().basis();
    let residues: BTreeSet<Vec3> = complex
        .vertices()
        .iter()
        .filter(|p| complex.in_region(p))
        .map(|p| match basis.len() {
            3 => Vec3::zero(),
            2 => {
                let n = basis[0].cross(&basis[1]);
                n.scale(&(p.dot(&n) / n.norm_sq()))
            }
            _ => {
                let b = &basis[0];
                p - &b.scale(&(p.dot(b) / b.norm_sq()))
            }
        })
        .collect();
    residues.len()
}
