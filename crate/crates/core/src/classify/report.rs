use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{graph_identify, FlagStructure, GraphName, Mode, VertexFigureGraph};
use crate::geometry::{Isometry, Vec3};
use crate::nets::{extract_net, identify_net, identify_vertex_set, NetId, VertexSetId};
use crate::orbit::{FaceDescriptor, GeneratorSet, QFace, QuotientComplex};

use super::{
    classify_polygon, mirror_vector, schlafli, verdict, ClassifyError, MirrorVector, PolygonKind,
    Schlafli, Study, SymmetryVerdict,
};

/// Everything the classifier can say about a studied structure.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub mode: Mode,
    /// Vertex, edge and face classes of the quotient.
    pub quotient_counts: (usize, usize, usize),
    pub faces: BTreeMap<PolygonKind, usize>,
    /// Polygon classes of the vertex-figures, one per vertex class; empty for complexes.
    pub vertex_figures: BTreeMap<PolygonKind, usize>,
    pub vertex_figure_graph: GraphName,
    pub schlafli: Option<Schlafli>,
    pub mirror_vector: Option<MirrorVector>,
    pub verdict: Option<SymmetryVerdict>,
    /// Flag symmetries found at the base flag, by name.
    pub witnesses: Vec<(String, Isometry)>,
    pub vertex_set: VertexSetId,
    pub net: Option<NetId>,
}

/// The face described by one lift of a quotient face.
pub fn face_descriptor(f: &QFace) -> FaceDescriptor {
    match &f.translation {
        None => FaceDescriptor::Finite(f.lift.clone()),
        Some(t) => {
            let period = (1..=f.lift.len())
                .find(|&m| f.lift.len() % m == 0 && f.lift.get(m).map_or(true, |p| *p == &f.lift[0] + t))
                .unwrap_or(f.lift.len());
            FaceDescriptor::Infinite { period: f.lift[..period].to_vec(), translation: t.clone() }
        }
    }
}

/// Vertex-figure at the representative of `class`, read from the quotient.
pub fn quotient_vertex_figure(quotient: &QuotientComplex, class: usize) -> VertexFigureGraph {
    let center = quotient.rep(class).clone();
    let mut nodes: BTreeMap<Vec3, usize> = BTreeMap::new();
    for e in quotient.edges() {
        if e.a == class {
            nodes.insert(&(quotient.rep(e.b) + &e.shift) - &center, 0);
        }
        if e.b == class {
            nodes.insert(&(quotient.rep(e.a) - &e.shift) - &center, 0);
        }
    }
    for (i, n) in nodes.values_mut().enumerate() {
        *n = i;
    }
    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in quotient.faces() {
        let n = f.lift.len();
        let at = |j: usize| -> Vec3 {
            match j {
                0 => &f.lift[n - 1] - &f.closing,
                j if j == n + 1 => &f.lift[0] + &f.closing,
                j => f.lift[j - 1].clone(),
            }
        };
        for i in (0..n).filter(|&i| f.cycle[i] == class) {
            let here = at(i + 1);
            let (Some(&a), Some(&b)) = (nodes.get(&(&at(i) - &here)), nodes.get(&(&at(i + 2) - &here))) else {
                continue;
            };
            *edges.entry(if a < b { (a, b) } else { (b, a) }).or_insert(0) += 1;
        }
    }
    let mut ordered: Vec<(Vec3, usize)> = nodes.into_iter().collect();
    ordered.sort_by_key(|(_, i)| *i);
    let points = ordered.into_iter().map(|(p, _)| &p + &center).collect();
    VertexFigureGraph::from_parts(center, points, edges)
}

/// Neighbours of a vertex class in the order met by alternating `ρ1` and `ρ2`.
pub fn flag_vertex_figure(flags: &FlagStructure, class: usize) -> Option<FaceDescriptor> {
    let start = (0..flags.len()).find(|&id| flags.vertex(flags.flag(id)) == class)?;
    let mut cur = (start, Vec3::zero());
    let mut cycle = Vec::new();
    loop {
        let (far, shift) = flags.lifted_word(cur.0, &cur.1, &[0])?;
        cycle.push(flags.lifted_vertex(far, &shift));
        cur = flags.lifted_word(cur.0, &cur.1, &[1, 2])?;
        if cur.0 == start || cycle.len() > flags.len() {
            break;
        }
    }
    Some(FaceDescriptor::Finite(cycle))
}

fn tally(kinds: impl IntoIterator<Item = PolygonKind>) -> BTreeMap<PolygonKind, usize> {
    let mut out = BTreeMap::new();
    for k in kinds {
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

pub fn classify_study(
    study: &Study,
    gens: Option<&GeneratorSet>,
    mode: Mode,
) -> Result<ClassificationReport, ClassifyError> {
    let quotient = study.flags.quotient();
    let complex = &study.complex;
    let faces = quotient
        .faces()
        .iter()
        .map(|f| classify_polygon(&face_descriptor(f)).map(|c| c.kind))
        .collect::<Result<Vec<_>, _>>()?;

    let vertex_figure_graph = if quotient.vertex_count() == 0 {
        GraphName::Unknown
    } else {
        graph_identify(&quotient_vertex_figure(quotient, 0))
    };

    let polyhedral = mode == Mode::Polyhedron && study.flags.is_polyhedral();
    let figures: Option<Vec<PolygonKind>> = if polyhedral {
        (0..quotient.vertex_count())
            .map(|v| flag_vertex_figure(&study.flags, v).and_then(|f| classify_polygon(&f).ok()).map(|c| c.kind))
            .collect()
    } else {
        None
    };
    let mut witnesses = Vec::new();
    let (verdict, mirror) = if polyhedral {
        let isos: Vec<Isometry> = gens.map(|g| g.generators().iter().map(|x| x.isometry.clone()).collect()).unwrap_or_default();
        let v = verdict(&study.flags, &isos)?;
        let mirror = match &v.symmetries.reflections {
            Some([r0, r1, r2]) => Some(mirror_vector(r0, r1, r2)?),
            None => None,
        };
        if let Some(rs) = &v.symmetries.reflections {
            witnesses.extend(rs.iter().enumerate().map(|(i, r)| (alloc::format!("R{i}"), r.clone())));
        }
        if let Some(ss) = &v.symmetries.rotations {
            witnesses.extend(ss.iter().enumerate().map(|(i, s)| (alloc::format!("S{}", i + 1), s.clone())));
        }
        (Some(v), mirror)
    } else {
        (None, None)
    };

    let net = if complex.periods().rank() == 3 { extract_net(complex).ok().map(|g| identify_net(&g)) } else { None };
    Ok(ClassificationReport {
        mode,
        quotient_counts: (quotient.vertex_count(), quotient.edges().len(), quotient.faces().len()),
        faces: tally(faces),
        vertex_figures: figures.map(tally).unwrap_or_default(),
        vertex_figure_graph,
        schlafli: schlafli(&study.flags).ok(),
        mirror_vector: mirror,
        verdict,
        witnesses,
        vertex_set: identify_vertex_set(complex),
        net,
    })
}
