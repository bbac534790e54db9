use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::geometry::Vec3;

use super::{ComplexError, SkeletalComplex};

/// Neighbors of a vertex, joined once for each face through both edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFigureGraph {
    pub center: Vec3,
    pub nodes: Vec<Vec3>,
    /// `(i, j)` with `i < j` mapped to its multiplicity.
    pub edges: BTreeMap<(usize, usize), usize>,
}

impl VertexFigureGraph {
    pub fn from_parts(center: Vec3, nodes: Vec<Vec3>, edges: BTreeMap<(usize, usize), usize>) -> Self {
        VertexFigureGraph { center, nodes, edges }
    }

    /// Graph on points with the given weighted adjacencies, as used by the catalog.
    pub fn from_edges(nodes: Vec<Vec3>, pairs: impl IntoIterator<Item = (usize, usize)>, multiplicity: usize) -> Self {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| (if a < b { (a, b) } else { (b, a) }, multiplicity))
            .collect();
        VertexFigureGraph { center: Vec3::zero(), nodes, edges }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn weighted_edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 {
            return false;
        }
        let mut adj = alloc::vec![Vec::new(); n];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// A single simple cycle through every node.
    pub fn is_single_cycle(&self) -> bool {
        let mut degree = alloc::vec![0usize; self.nodes.len()];
        for (&(a, b), &m) in &self.edges {
            if m != 1 {
                return false;
            }
            degree[a] += 1;
            degree[b] += 1;
        }
        self.nodes.len() >= 3 && degree.iter().all(|&d| d == 2) && self.is_connected()
    }

    /// Nodes in cyclic order when the figure is a single cycle.
    pub fn cycle_order(&self) -> Option<Vec<Vec3>> {
        if !self.is_single_cycle() {
            return None;
        }
        let n = self.nodes.len();
        let mut adj = alloc::vec![Vec::new(); n];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut order = alloc::vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0;
        while order.len() < n {
            let next = *adj[cur].iter().find(|&&x| x != prev)?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order.into_iter().map(|i| self.nodes[i].clone()).collect())
    }

    fn weights(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut w = alloc::vec![alloc::vec![0usize; n]; n];
        for (&(a, b), &m) in &self.edges {
            w[a][b] = m;
            w[b][a] = m;
        }
        w
    }
}

/// Vertex-figure at `v`; `v` must be interior.
pub fn vertex_figure(complex: &SkeletalComplex, v: usize) -> Result<VertexFigureGraph, ComplexError> {
    let center = complex
        .vertices()
        .get(v)
        .ok_or_else(|| ComplexError::BoundaryVertex(alloc::format!("no vertex {v}")))?
        .clone();
    if !complex.is_interior_vertex(v) {
        return Err(ComplexError::BoundaryVertex(alloc::format!("{center}")));
    }
    let nodes: Vec<Vec3> = complex.neighbors(v).iter().map(|&w| complex.vertices()[w].clone()).collect();
    let pos: BTreeMap<&Vec3, usize> = nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in complex.corners(v) {
        let (Some(&a), Some(&b)) = (pos.get(&c.prev), pos.get(&c.next)) else {
            continue;
        };
        let key = if a < b { (a, b) } else { (b, a) };
        if seen.insert((key.0, key.1, c.face)) {
            *edges.entry(key).or_insert(0) += 1;
        }
    }
    Ok(VertexFigureGraph { center, nodes, edges })
}

/// Catalog names for vertex-figure graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphName {
    Tetrahedron,
    Cube,
    Octahedron,
    Cuboctahedron,
    DoubleTetrahedron,
    DoubleCube,
    DoubleOctahedron,
    DoubleSquare,
    Hexagon,
    Square,
    Unknown,
}

impl GraphName {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphName::Tetrahedron => "tetrahedron",
            GraphName::Cube => "cube",
            GraphName::Octahedron => "octahedron",
            GraphName::Cuboctahedron => "cuboctahedron",
            GraphName::DoubleTetrahedron => "double tetrahedron",
            GraphName::DoubleCube => "double cube",
            GraphName::DoubleOctahedron => "double octahedron",
            GraphName::DoubleSquare => "double square",
            GraphName::Hexagon => "hexagon",
            GraphName::Square => "square",
            GraphName::Unknown => "unknown",
        }
    }
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Edge graph of a point set: pairs at the given squared distance.
fn distance_graph(points: Vec<Vec3>, dist_sq: i64, multiplicity: usize) -> VertexFigureGraph {
    let d = crate::geometry::q(dist_sq);
    let mut pairs = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (&points[i] - &points[j]).norm_sq() == d {
                pairs.push((i, j));
            }
        }
    }
    VertexFigureGraph::from_edges(points, pairs, multiplicity)
}

fn signed_points(filter: impl Fn(i64, i64, i64) -> bool) -> Vec<Vec3> {
    let mut out = Vec::new();
    for x in -1..=1 {
        for y in -1..=1 {
            for z in -1..=1 {
                if filter(x, y, z) {
                    out.push(Vec3::from_ints(x, y, z));
                }
            }
        }
    }
    out
}

fn polygon(n: usize, multiplicity: usize) -> VertexFigureGraph {
    let nodes = (0..n).map(|i| Vec3::from_ints(i as i64, 0, 0)).collect();
    VertexFigureGraph::from_edges(nodes, (0..n).map(|i| (i, (i + 1) % n)), multiplicity)
}

/// The reference graphs, built from coordinates.
pub fn catalog() -> Vec<(GraphName, VertexFigureGraph)> {
    let tet = || distance_graph(signed_points(|x, y, z| x * y * z == 1), 8, 1);
    let cube = || distance_graph(signed_points(|x, y, z| x * y * z != 0), 4, 1);
    let oct = || distance_graph(signed_points(|x, y, z| x.abs() + y.abs() + z.abs() == 1), 2, 1);
    let cubo = distance_graph(signed_points(|x, y, z| x.abs() + y.abs() + z.abs() == 2), 2, 1);
    let double = |g: VertexFigureGraph| {
        let edges = g.edges.keys().map(|&k| (k, 2)).collect();
        VertexFigureGraph { edges, ..g }
    };
    alloc::vec![
        (GraphName::Tetrahedron, tet()),
        (GraphName::Cube, cube()),
        (GraphName::Octahedron, oct()),
        (GraphName::Cuboctahedron, cubo),
        (GraphName::DoubleTetrahedron, double(tet())),
        (GraphName::DoubleCube, double(cube())),
        (GraphName::DoubleOctahedron, double(oct())),
        (GraphName::DoubleSquare, polygon(4, 2)),
        (GraphName::Hexagon, polygon(6, 1)),
        (GraphName::Square, polygon(4, 1)),
    ]
}

/// Identifies a vertex-figure up to isomorphism respecting multiplicities.
pub fn graph_identify(g: &VertexFigureGraph) -> GraphName {
    catalog()
        .into_iter()
        .find(|(_, c)| isomorphic(g, c))
        .map_or(GraphName::Unknown, |(name, _)| name)
}

/// Weighted graph isomorphism by backtracking.
pub fn isomorphic(a: &VertexFigureGraph, b: &VertexFigureGraph) -> bool {
    let n = a.nodes.len();
    if n != b.nodes.len() || a.edges.len() != b.edges.len() || a.weighted_edge_count() != b.weighted_edge_count() {
        return false;
    }
    let wa = a.weights();
    let wb = b.weights();
    let profile = |w: &Vec<Vec<usize>>, i: usize| {
        let mut p: Vec<usize> = w[i].iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable();
        p
    };
    let pa: Vec<Vec<usize>> = (0..n).map(|i| profile(&wa, i)).collect();
    let pb: Vec<Vec<usize>> = (0..n).map(|i| profile(&wb, i)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    let mut map = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    fn extend(
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        wa: &[Vec<usize>],
        wb: &[Vec<usize>],
        pa: &[Vec<usize>],
        pb: &[Vec<usize>],
    ) -> bool {
        let n = map.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] || pa[i] != pb[j] {
                continue;
            }
            if (0..i).any(|k| wa[i][k] != wb[j][map[k]]) {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if extend(i + 1, map, used, wa, wb, pa, pb) {
                return true;
            }
            used[j] = false;
        }
        map[i] = usize::MAX;
        false
    }
    extend(0, &mut map, &mut used, &wa, &wb, &pa, &pb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        let cat = catalog();
        let get = |n: GraphName| cat.iter().find(|(x, _)| *x == n).unwrap().1.clone();
        assert_eq!(get(GraphName::Tetrahedron).edges.len(), 6);
        assert_eq!(get(GraphName::Cube).edges.len(), 12);
        assert_eq!(get(GraphName::Octahedron).edges.len(), 12);
        assert_eq!(get(GraphName::Cuboctahedron).node_count(), 12);
        assert_eq!(get(GraphName::Cuboctahedron).edges.len(), 24);
        for (name, g) in &cat {
            assert_eq!(graph_identify(g), *name);
        }
    }

    #[test]
    fn triangle_is_unknown() {
        assert_eq!(graph_identify(&polygon(3, 1)), GraphName::Unknown);
    }

    #[test]
    fn cycle_order_of_hexagon() {
        let h = polygon(6, 1);
        assert!(h.is_single_cycle());
        assert_eq!(h.cycle_order().unwrap().len(), 6);
    }
}
