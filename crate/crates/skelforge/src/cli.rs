//! Command-line configuration and command execution.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use skelforge_core::classify::{classify_study, Study};
use skelforge_core::complex::{validate, Mode, SkeletalComplex};
use skelforge_core::geometry::{parse_rational, q, Rational, Vec3};
use skelforge_core::nets::{coordination_sequence, extract_net, identify_net, identify_vertex_set};
use skelforge_core::ops::{petrie_dual, petrie_dual_with, trace_flags, TraceWord};
use skelforge_core::orbit::{wythoff_patch, GeneratorSet, OrbitError, Region};
use skelforge_core::presets::PresetId;

use crate::error::CliError;
use crate::json::{
    ingest_generators, mode_name, to_pretty, trace_json, vertex_set_name, ClassificationJson, ComplexJson,
    GeneratorSetJson, ValidationJson,
};
use crate::obj::{to_obj, DEFAULT_PERIODS};
use crate::pgr::to_pgr;

#[derive(Parser, Debug)]
#[command(name = "skelforge", version, about = "Build, classify and export skeletal polyhedra and polygonal complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Construct a structure and serialize it.
    Build(Options),
    /// Check the polyhedron or complex axioms.
    Validate(Options),
    /// Polygon classes, type, mirror vector, verdict and traces.
    Classify(Options),
    /// Replace the faces by the Petrie polygons.
    Petrie(Options),
    /// Edge graph as a periodic net, with its coordination sequence.
    Net(Options),
    /// OBJ wireframe or periodic-graph text.
    Export(Options),
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Catalog name such as `P:1,0`, `petrie(cube)` or `blend(sq44,apeiro:1)`.
    #[arg(long, conflicts_with = "input")]
    pub preset: Option<String>,
    /// Generator set in JSON.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Half-width of the cubical region around the origin.
    #[arg(long, default_value = "4")]
    pub radius: String,
    /// Quotient by this multiple of the translation lattice.
    #[arg(long, default_value_t = 4)]
    pub quotient: i64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Coordination sequence depth.
    #[arg(long, default_value_t = 10)]
    pub depth: usize,
    /// Periods drawn for each infinite face in OBJ output.
    #[arg(long, default_value_t = DEFAULT_PERIODS)]
    pub periods: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Obj,
    Pgr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Build,
    Validate,
    Classify,
    Petrie,
    Net,
    Export,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Preset(PresetId),
    Input(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub source: Source,
    pub radius: Rational,
    pub quotient: i64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub depth: usize,
    pub periods: usize,
}

impl RunConfig {
    pub fn from_command(cmd: Command) -> Result<Self, CliError> {
        let (command, o) = match cmd {
            Command::Build(o) => (CommandKind::Build, o),
            Command::Validate(o) => (CommandKind::Validate, o),
            Command::Classify(o) => (CommandKind::Classify, o),
            Command::Petrie(o) => (CommandKind::Petrie, o),
            Command::Net(o) => (CommandKind::Net, o),
            Command::Export(o) => (CommandKind::Export, o),
        };
        let source = match (o.preset, o.input) {
            (Some(name), None) => Source::Preset(name.parse()?),
            (None, Some(path)) => Source::Input(path),
            _ => return Err(CliError::config("exactly one of --preset and --input is required")),
        };
        let radius = parse_rational(&o.radius).map_err(|_| CliError::config(format!("radius {:?} is not a rational", o.radius)))?;
        if radius <= q(0) {
            return Err(CliError::config("radius must be positive"));
        }
        if o.quotient < 2 {
            return Err(CliError::config("quotient scale must be at least 2"));
        }
        let format = match (command, o.format) {
            (_, Some(f)) => f,
            (CommandKind::Export, None) => Format::Obj,
            (_, None) => Format::Json,
        };
        if command == CommandKind::Export && format == Format::Json {
            return Err(CliError::config("export writes obj or pgr"));
        }
        Ok(RunConfig { command, source, radius, quotient: o.quotient, format, out: o.out, depth: o.depth, periods: o.periods })
    }

    fn region(&self) -> Region {
        Region::new(Vec3::zero(), self.radius.clone()).expect("radius checked positive")
    }
}

/// What a command operates on: a catalog preset or a user generator set.
enum Target {
    Preset(PresetId),
    Generators(GeneratorSet),
}

impl Target {
    fn load(source: &Source) -> Result<Self, CliError> {
        match source {
            Source::Preset(id) => Ok(Target::Preset(id.clone())),
            Source::Input(path) => Ok(Target::Generators(ingest_generators(path)?)),
        }
    }

    fn mode(&self) -> Mode {
        match self {
            Target::Preset(id) => id.mode(),
            Target::Generators(_) => Mode::Polyhedron,
        }
    }

    fn generators(&self) -> Result<Option<GeneratorSet>, CliError> {
        match self {
            Target::Preset(id) => Ok(id.generators()?),
            Target::Generators(g) => Ok(Some(g.clone())),
        }
    }

    fn complex(&self, region: &Region) -> Result<SkeletalComplex, CliError> {
        match self {
            Target::Preset(id) => Ok(id.instantiate(region)?.complex),
            Target::Generators(g) => Ok(wythoff_patch(g, region)?),
        }
    }

    fn study(&self, scale: i64) -> Result<Study, CliError> {
        match self {
            Target::Preset(id) => Ok(id.study(scale)?),
            Target::Generators(g) => Ok(Study::from_generators(g, scale)?),
        }
    }

    fn smallest_study(&self) -> Result<Study, CliError> {
        let mut scale = 1;
        loop {
            match self.study(scale) {
                Err(CliError::Orbit(OrbitError::SelfIdentification(_))) if scale < 4 => scale += 1,
                other => return other,
            }
        }
    }

    fn petrie(&self, region: &Region) -> Result<SkeletalComplex, CliError> {
        match self {
            Target::Preset(id) => Ok(PresetId::Petrie(Box::new(id.clone())).instantiate(region)?.complex),
            Target::Generators(_) => {
                let patch = self.complex(region)?;
                if patch.is_finite() {
                    return Ok(petrie_dual(&patch)?);
                }
                Ok(petrie_dual_with(&patch, &self.smallest_study()?.flags)?)
            }
        }
    }
}

#[derive(Serialize)]
struct BuildJson {
    mode: String,
    generators: Option<GeneratorSetJson>,
    complex: ComplexJson,
}

#[derive(Serialize)]
struct NetJson {
    net: String,
    nodes: usize,
    edges: usize,
    coordination_sequence: Vec<usize>,
    vertex_set: String,
}

fn serialize_complex(
    config: &RunConfig,
    mode: Mode,
    generators: Option<&GeneratorSet>,
    complex: &SkeletalComplex,
) -> Result<String, CliError> {
    match config.format {
        Format::Json => Ok(to_pretty(&BuildJson {
            mode: mode_name(mode).to_string(),
            generators: generators.map(GeneratorSetJson::from),
            complex: complex.into(),
        })),
        Format::Obj => Ok(to_obj(complex, config.periods)),
        Format::Pgr => Ok(to_pgr(&extract_net(complex)?)),
    }
}

/// Executes one command and returns the text it produces.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let target = Target::load(&config.source)?;
    let region = config.region();
    match config.command {
        CommandKind::Build | CommandKind::Export => {
            let complex = target.complex(&region)?;
            serialize_complex(config, target.mode(), target.generators()?.as_ref(), &complex)
        }
        CommandKind::Petrie => {
            let complex = target.petrie(&region)?;
            serialize_complex(config, Mode::Polyhedron, None, &complex)
        }
        CommandKind::Validate => {
            let complex = target.complex(&region)?;
            Ok(to_pretty(&ValidationJson::from(&validate(&complex, target.mode()))))
        }
        CommandKind::Classify => {
            let study = target.study(config.quotient)?;
            let gens = target.generators()?;
            let report = classify_study(&study, gens.as_ref(), target.mode())?;
            let mut traces = Vec::new();
            if report.verdict.is_some() {
                for word in TraceWord::ALL {
                    traces.push(trace_json(word.name(), &trace_flags(&study.flags, word)?));
                }
            }
            Ok(to_pretty(&ClassificationJson::new(&report, study.scale, traces)))
        }
        CommandKind::Net => {
            let complex = target.complex(&region)?;
            let graph = extract_net(&complex)?;
            if config.format == Format::Pgr {
                return Ok(to_pgr(&graph));
            }
            Ok(to_pretty(&NetJson {
                net: identify_net(&graph).as_str().to_string(),
                nodes: graph.node_count(),
                edges: graph.edges().len(),
                coordination_sequence: coordination_sequence(&graph, config.depth)?,
                vertex_set: vertex_set_name(&identify_vertex_set(&complex)),
            }))
        }
    }
}

/// Writes through a sibling temporary file so readers never see partial output.
pub fn write_atomically(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, text).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)
}
