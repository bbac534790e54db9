//! Periodic edge graphs, coordination sequences, and net/vertex-set identification.

mod reference;

pub use reference::{reference_net, reference_nets, NetId};

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::complex::SkeletalComplex;
use crate::geometry::{hermite_basis, Lattice, Vec3, VertexSetSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NetError {
    #[error("not 3-periodic (translation rank {0})")]
    NotThreePeriodic(usize),
    #[error("not uninodal")]
    NotUninodal,
    #[error("region too small: {0}")]
    RegionTooSmall(String),
    #[error("malformed periodic graph: {0}")]
    Malformed(String),
}

/// An edge `a → b + Σ label[i]·basis[i]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PEdge {
    pub a: usize,
    pub b: usize,
    pub label: [i64; 3],
}

/// Quotient graph with integer translation labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicGraph {
    basis: Vec<Vec3>,
    nodes: Vec<Vec3>,
    edges: Vec<PEdge>,
}

fn neg(l: [i64; 3]) -> [i64; 3] {
    [-l[0], -l[1], -l[2]]
}

fn add(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn canonical_edge(a: usize, b: usize, label: [i64; 3]) -> PEdge {
    let fwd = PEdge { a, b, label };
    let bwd = PEdge { a: b, b: a, label: neg(label) };
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

impl PeriodicGraph {
    /// Builds a graph, canonicalizing edge orientation and dropping repeats.
    pub fn new(basis: Vec<Vec3>, nodes: Vec<Vec3>, edges: impl IntoIterator<Item = PEdge>) -> Result<Self, NetError> {
        let mut set = BTreeSet::new();
        for e in edges {
            if e.a >= nodes.len() || e.b >= nodes.len() {
                return Err(NetError::Malformed(alloc::format!("edge {} - {} names a missing node", e.a, e.b)));
            }
            if e.a == e.b && e.label == [0, 0, 0] {
                return Err(NetError::Malformed("loop with zero label".into()));
            }
            set.insert(canonical_edge(e.a, e.b, e.label));
        }
        Ok(PeriodicGraph { basis, nodes, edges: set.into_iter().collect() })
    }

    pub fn basis(&self) -> &[Vec3] {
        &self.basis
    }

    pub fn nodes(&self) -> &[Vec3] {
        &self.nodes
    }

    pub fn edges(&self) -> &[PEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, [i64; 3])>> {
        let mut adj = alloc::vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.a].push((e.b, e.label));
            adj[e.b].push((e.a, neg(e.label)));
        }
        adj
    }

    /// Connected quotient whose cycle labels generate the whole lattice.
    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 {
            return false;
        }
        let adj = self.adjacency();
        let mut pot: Vec<Option<[i64; 3]>> = alloc::vec![None; n];
        pot[0] = Some([0; 3]);
        let mut queue = VecDeque::from([0usize]);
        let mut cycles = Vec::new();
        while let Some(x) = queue.pop_front() {
            let px = pot[x].expect("visited");
            for &(y, l) in &adj[x] {
                let reach = add(px, l);
                match pot[y] {
                    None => {
                        pot[y] = Some(reach);
                        queue.push_back(y);
                    }
                    Some(py) => {
                        let c = add(reach, neg(py));
                        if c != [0; 3] {
                            cycles.push(Vec3::from_ints(c[0], c[1], c[2]));
                        }
                    }
                }
            }
        }
        if pot.iter().any(Option::is_none) {
            return false;
        }
        let h = hermite_basis(&cycles);
        let r = self.rank();
        h.len() == r && (0..r).all(|i| h[i].0[i] == crate::geometry::q(1)) && h.iter().all(|v| v.is_integral())
    }

    /// BFS shell sizes `1..=depth` in the infinite cover, from one node.
    pub fn shells_from(&self, start: usize, depth: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut seen: BTreeSet<(usize, [i64; 3])> = BTreeSet::new();
        let origin = (start, [0i64; 3]);
        seen.insert(origin);
        let mut frontier = alloc::vec![origin];
        let mut out = Vec::with_capacity(depth);
        for _ in 0..depth {
            let mut next = Vec::new();
            for &(x, t) in &frontier {
                for &(y, l) in &adj[x] {
                    let s = (y, add(t, l));
                    if seen.insert(s) {
                        next.push(s);
                    }
                }
            }
            out.push(next.len());
            frontier = next;
        }
        out
    }

    /// Whether every node has the same shell sequence to `depth`.
    pub fn is_uninodal(&self, depth: usize) -> bool {
        let first = self.shells_from(0, depth);
        (1..self.nodes.len()).all(|v| self.shells_from(v, depth) == first)
    }

    /// Same graph over a different basis of the same lattice.
    pub fn rebased(&self, new_basis: Vec<Vec3>) -> Result<Self, NetError> {
        let old = Lattice::new(self.basis.clone()).map_err(|e| NetError::Malformed(alloc::format!("{e}")))?;
        let new = Lattice::new(new_basis.clone()).map_err(|e| NetError::Malformed(alloc::format!("{e}")))?;
        if !old.contains_lattice(&new) || !new.contains_lattice(&old) {
            return Err(NetError::Malformed("bases span different lattices".into()));
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            let v = old.combine(&e.label[..self.rank()]);
            let coords = new.integer_coordinates(&v).expect("same lattice");
            let mut label = [0i64; 3];
            for (i, c) in coords.iter().enumerate() {
                label[i] = c.to_i64().expect("small label");
            }
            edges.push(PEdge { a: e.a, b: e.b, label });
        }
        PeriodicGraph::new(new_basis, self.nodes.clone(), edges)
    }
}

/// Edge graph modulo a lattice of translations of the complex.
pub fn label_graph(complex: &SkeletalComplex, lattice: &Lattice) -> Result<PeriodicGraph, NetError> {
    let verts = complex.vertices();
    let mut class_of_cell: BTreeMap<Vec3, usize> = BTreeMap::new();
    let mut reps: Vec<usize> = Vec::new();
    for (vi, p) in verts.iter().enumerate() {
        if !complex.in_region(p) {
            continue;
        }
        let (cell, _) = lattice.reduce(p);
        class_of_cell.entry(cell).or_insert_with(|| {
            reps.push(vi);
            reps.len() - 1
        });
    }
    let mut edges = Vec::new();
    for (a, &vi) in reps.iter().enumerate() {
        let x = &verts[vi];
        for &w in complex.neighbors(vi) {
            let y = &verts[w];
            let (cell, _) = lattice.reduce(y);
            let b = *class_of_cell
                .get(&cell)
                .ok_or_else(|| NetError::RegionTooSmall(alloc::format!("no representative for the class of {y}")))?;
            let shift = &(y - &verts[reps[b]]) - &(x - &verts[vi]);
            let coords = lattice.integer_coordinates(&shift).expect("shift lies in the lattice");
            let mut label = [0i64; 3];
            for (i, c) in coords.iter().enumerate() {
                label[i] = c.to_i64().ok_or_else(|| NetError::Malformed("label overflow".into()))?;
            }
            edges.push(PEdge { a, b, label });
        }
    }
    let nodes = reps.iter().map(|&v| verts[v].clone()).collect();
    PeriodicGraph::new(lattice.basis().to_vec(), nodes, edges)
}

/// The edge graph modulo the full translation lattice.
pub fn extract_net(complex: &SkeletalComplex) -> Result<PeriodicGraph, NetError> {
    let rank = complex.periods().rank();
    if complex.is_finite() || rank < 3 {
        return Err(NetError::NotThreePeriodic(rank));
    }
    label_graph(complex, complex.periods())
}

pub fn coordination_sequence(g: &PeriodicGraph, depth: usize) -> Result<Vec<usize>, NetError> {
    if !g.is_uninodal(depth) {
        return Err(NetError::NotUninodal);
    }
    Ok(g.shells_from(0, depth))
}

/// Matches against the reference nets by coordination sequence.
pub fn identify_net(g: &PeriodicGraph) -> NetId {
    identify_net_with(g, &reference_nets())
}

pub fn identify_net_with(g: &PeriodicGraph, references: &[(NetId, PeriodicGraph)]) -> NetId {
    const DEPTH: usize = 10;
    const DEEP: usize = 14;
    if g.rank() != 3 || !g.is_uninodal(DEPTH) {
        return NetId::Unknown;
    }
    let seq = g.shells_from(0, DEPTH);
    let matches: Vec<&(NetId, PeriodicGraph)> = references.iter().filter(|(_, r)| r.shells_from(0, DEPTH) == seq).collect();
    let [(id, reference)] = matches.as_slice() else {
        return NetId::Unknown;
    };
    if g.shells_from(0, DEEP) == reference.shells_from(0, DEEP) {
        *id
    } else {
        NetId::Unknown
    }
}

/// Outcome of comparing a vertex set against the standard point sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexSetId {
    Exact(&'static str),
    SubsetOf(&'static str),
    Other,
}

/// Candidate sets, sparsest first.
pub fn standard_vertex_sets() -> Vec<(&'static str, VertexSetSpec)> {
    alloc::vec![
        ("W", VertexSetSpec::w_set()),
        ("Λ3", VertexSetSpec::lambda3()),
        ("Λ2", VertexSetSpec::lambda2()),
        ("V", VertexSetSpec::v_set()),
        ("Λ1", VertexSetSpec::lambda1()),
    ]
}

/// Two-sided comparison inside the region; one-sided containment as a fallback.
pub fn identify_vertex_set(complex: &SkeletalComplex) -> VertexSetId {
    let verts = complex.vertices();
    let inside: Vec<&Vec3> = verts.iter().filter(|p| complex.in_region(p)).collect();
    if inside.iter().any(|p| !p.is_integral()) {
        return VertexSetId::Other;
    }
    let (lo, hi) = match complex.region() {
        Some(r) => {
            let c = r.center();
            let rad = r.radius();
            let lo: Vec<i64> = (0..3).map(|i| (&c.0[i] - rad).ceil().to_integer().to_i64().unwrap_or(0)).collect();
            let hi: Vec<i64> = (0..3).map(|i| (&c.0[i] + rad).floor().to_integer().to_i64().unwrap_or(0)).collect();
            (lo, hi)
        }
        None => {
            let ints: Vec<[i64; 3]> = inside.iter().filter_map(|p| p.to_i64()).collect();
            let lo = (0..3).map(|i| ints.iter().map(|v| v[i]).min().unwrap_or(0)).collect();
            let hi = (0..3).map(|i| ints.iter().map(|v| v[i]).max().unwrap_or(0)).collect();
            (lo, hi)
        }
    };
    let candidates = standard_vertex_sets();
    for (name, spec) in &candidates {
        if !inside.iter().all(|p| spec.member(p)) {
            continue;
        }
        let mut exact = true;
        'scan: for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = Vec3::from_ints(x, y, z);
                    if complex.in_region(&p) && spec.member(&p) && complex.vertex_id(&p).is_none() {
                        exact = false;
                        break 'scan;
                    }
                }
            }
        }
        if exact {
            return VertexSetId::Exact(name);
        }
    }
    match candidates.iter().find(|(_, spec)| inside.iter().all(|p| spec.member(p))) {
        Some((name, _)) => VertexSetId::SubsetOf(name),
        None => VertexSetId::Other,
    }
}
