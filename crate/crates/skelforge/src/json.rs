//! JSON forms of generator sets, complexes and analysis reports.
//!
//! Every scalar is an exact rational written as `"p/q"` (or `"p"` when integral).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use skelforge_core::classify::{ClassificationReport, PolygonKind};
use skelforge_core::complex::{Mode, SkeletalComplex, ValidationReport};
use skelforge_core::geometry::{parse_rational, Isometry, Mat3, Rational, Vec3};
use skelforge_core::nets::VertexSetId;
use skelforge_core::ops::WordTrace;
use skelforge_core::orbit::{FaceDescriptor, Generator, GeneratorSet};

use crate::error::CliError;

pub type Triple = [String; 3];

pub fn rational(r: &Rational) -> String {
    r.to_string()
}

pub fn triple(v: &Vec3) -> Triple {
    [rational(&v.0[0]), rational(&v.0[1]), rational(&v.0[2])]
}

fn parse_scalar(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| CliError::parse(format!("{s:?} is not a rational number")))
}

pub fn parse_triple(t: &Triple) -> Result<Vec3, CliError> {
    Ok(Vec3::new(parse_scalar(&t[0])?, parse_scalar(&t[1])?, parse_scalar(&t[2])?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryJson {
    pub matrix: [Triple; 3],
    pub translation: Triple,
}

impl From<&Isometry> for IsometryJson {
    fn from(g: &Isometry) -> Self {
        let m = &g.linear().0;
        IsometryJson {
            matrix: [0, 1, 2].map(|i| [rational(&m[i][0]), rational(&m[i][1]), rational(&m[i][2])]),
            translation: triple(g.translation()),
        }
    }
}

impl IsometryJson {
    fn to_isometry(&self, name: &str) -> Result<Isometry, CliError> {
        let mut m = Mat3::zero();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.0[i][j] = parse_scalar(x)?;
            }
        }
        Isometry::new(m, parse_triple(&self.translation)?).map_err(|_| CliError::NotAnIsometry(name.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    #[serde(flatten)]
    pub isometry: IsometryJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSetJson {
    pub generators: Vec<GeneratorJson>,
    pub base_vertex: Triple,
    pub base_edge_other: Triple,
    pub face_generator: String,
}

impl From<&GeneratorSet> for GeneratorSetJson {
    fn from(g: &GeneratorSet) -> Self {
        GeneratorSetJson {
            generators: g
                .generators()
                .iter()
                .map(|x| GeneratorJson { name: x.name.clone(), isometry: (&x.isometry).into() })
                .collect(),
            base_vertex: triple(g.base_vertex()),
            base_edge_other: triple(g.base_edge_other()),
            face_generator: g.face_generator().to_string(),
        }
    }
}

impl GeneratorSetJson {
    pub fn to_generator_set(&self) -> Result<GeneratorSet, CliError> {
        let generators = self
            .generators
            .iter()
            .map(|g| Ok(Generator { name: g.name.clone(), isometry: g.isometry.to_isometry(&g.name)? }))
            .collect::<Result<Vec<_>, CliError>>()?;
        let set = GeneratorSet::new(
            generators,
            parse_triple(&self.base_vertex)?,
            parse_triple(&self.base_edge_other)?,
            &self.face_generator,
        )?;
        Ok(set)
    }
}

pub fn parse_generators(text: &str) -> Result<GeneratorSet, CliError> {
    let raw: GeneratorSetJson = serde_json::from_str(text).map_err(|e| CliError::parse(e.to_string()))?;
    raw.to_generator_set()
}

/// Reads a generator file, verifying that every matrix is orthogonal.
pub fn ingest_generators(path: &Path) -> Result<GeneratorSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_generators(&text)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FaceJson {
    Finite { cycle: Vec<Triple>, truncated: bool },
    Infinite { period: Vec<Triple>, period_vector: Triple, truncated: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsJson {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// Vertex-edge-face incidences over the faces lying wholly in the patch.
    pub flags: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionJson {
    pub center: Triple,
    pub radius: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub region: Option<RegionJson>,
    pub periods: Vec<Triple>,
    pub vertices: Vec<Triple>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<FaceJson>,
    pub counts: CountsJson,
}

impl From<&SkeletalComplex> for ComplexJson {
    fn from(c: &SkeletalComplex) -> Self {
        let faces: Vec<FaceJson> = c
            .faces()
            .iter()
            .map(|f| match &f.descriptor {
                FaceDescriptor::Finite(v) => FaceJson::Finite {
                    cycle: v.iter().map(triple).collect(),
                    truncated: f.truncated,
                },
                FaceDescriptor::Infinite { period, translation } => FaceJson::Infinite {
                    period: period.iter().map(triple).collect(),
                    period_vector: triple(translation),
                    truncated: f.truncated,
                },
            })
            .collect();
        let flags = c
            .faces()
            .iter()
            .filter(|f| !f.truncated)
            .map(|f| 2 * f.descriptor.period_len())
            .sum();
        ComplexJson {
            region: c.region().map(|r| RegionJson { center: triple(r.center()), radius: rational(r.radius()) }),
            periods: c.periods().basis().iter().map(triple).collect(),
            vertices: c.vertices().iter().map(triple).collect(),
            edges: c.edges().to_vec(),
            counts: CountsJson { vertices: c.vertices().len(), edges: c.edges().len(), faces: faces.len(), flags },
            faces,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomJson {
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub mode: String,
    pub valid: bool,
    pub connectivity: AxiomJson,
    pub vertex_figures: AxiomJson,
    pub faces_per_edge: AxiomJson,
    pub discreteness: AxiomJson,
    pub r: Option<usize>,
}

pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Polyhedron => "polyhedron",
        Mode::Complex => "complex",
    }
}

impl From<&ValidationReport> for ValidationJson {
    fn from(v: &ValidationReport) -> Self {
        let ax = |a: &skelforge_core::complex::AxiomResult| AxiomJson { pass: a.pass, detail: a.detail.clone() };
        ValidationJson {
            mode: mode_name(v.mode).to_string(),
            valid: v.is_valid(),
            connectivity: ax(&v.connectivity),
            vertex_figures: ax(&v.vertex_figures),
            faces_per_edge: ax(&v.faces_per_edge),
            discreteness: ax(&v.discreteness),
            r: v.r,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub word: String,
    pub circuits: usize,
    /// Closed lengths, or `"periodic <steps> along (<translation>)"`, with multiplicities.
    pub lengths: BTreeMap<String, usize>,
}

pub fn trace_json(word: &str, traces: &[WordTrace]) -> TraceJson {
    let mut lengths = BTreeMap::new();
    for t in traces {
        *lengths.entry(t.length.to_string()).or_insert(0) += 1;
    }
    TraceJson { word: word.to_string(), circuits: traces.len(), lengths }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub kind: String,
    pub flags: usize,
    pub orbits: usize,
    pub adjacent_split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub mode: String,
    pub scale: i64,
    pub quotient: [usize; 3],
    pub faces: BTreeMap<String, usize>,
    pub vertex_figures: BTreeMap<String, usize>,
    pub vertex_figure_graph: String,
    pub schlafli: Option<String>,
    pub faces_per_edge: Option<usize>,
    pub mirror_vector: Option<[u8; 3]>,
    pub verdict: Option<VerdictJson>,
    pub witnesses: BTreeMap<String, IsometryJson>,
    pub vertex_set: String,
    pub net: Option<String>,
    pub traces: Vec<TraceJson>,
}

fn kinds(m: &BTreeMap<PolygonKind, usize>) -> BTreeMap<String, usize> {
    m.iter().map(|(k, n)| (k.symbol(), *n)).collect()
}

pub fn vertex_set_name(v: &VertexSetId) -> String {
    match v {
        VertexSetId::Exact(name) => name.to_string(),
        VertexSetId::SubsetOf(name) => format!("subset of {name}"),
        VertexSetId::Other => "other".to_string(),
    }
}

impl ClassificationJson {
    pub fn new(r: &ClassificationReport, scale: i64, traces: Vec<TraceJson>) -> Self {
        let (v, e, f) = r.quotient_counts;
        ClassificationJson {
            mode: mode_name(r.mode).to_string(),
            scale,
            quotient: [v, e, f],
            faces: kinds(&r.faces),
            vertex_figures: kinds(&r.vertex_figures),
            vertex_figure_graph: r.vertex_figure_graph.as_str().to_string(),
            schlafli: r.schlafli.map(|s| {
                let q = s.q;
                match s.p {
                    Some(p) => format!("{{{p},{q}}}"),
                    None => format!("{{∞,{q}}}"),
                }
            }),
            faces_per_edge: r.schlafli.map(|s| s.r),
            mirror_vector: r.mirror_vector.map(|m| m.0),
            verdict: r.verdict.as_ref().map(|v| VerdictJson {
                kind: v.kind.as_str().to_string(),
                flags: v.flag_count,
                orbits: v.orbits,
                adjacent_split: v.adjacent_split,
            }),
            witnesses: r.witnesses.iter().map(|(n, g)| (n.clone(), g.into())).collect(),
            vertex_set: vertex_set_name(&r.vertex_set),
            net: r.net.map(|n| n.as_str().to_string()),
            traces,
        }
    }
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
