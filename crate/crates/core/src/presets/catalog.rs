use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_traits::Signed;

use crate::classify::Study;
use crate::complex::{Mode, SkeletalComplex};
use crate::geometry::{parse_rational, q, Lattice, Rational, Vec3};
use crate::ops::{blend, blend_generators, petrie_dual, petrie_dual_with, plane_normal, BlendComponent};
use crate::orbit::{wythoff_patch, GeneratorSet, OrbitError, Region};

use super::{build_k_complex, cubic_two_skeleton, p2_family, p_family, regular_generators, KComplex, PresetError, RegularPreset};

/// A named structure of the catalog, possibly transformed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresetId {
    P { a: i64, b: i64 },
    P2 { c: Rational, d: Rational },
    Regular(RegularPreset),
    Petrie(Box<PresetId>),
    Blend { base: Box<PresetId>, component: BlendComponent },
    CubicSkeleton,
    K(KComplex),
}

fn unknown(s: &str) -> PresetError {
    PresetError::UnknownPreset(s.to_string())
}

fn bad(detail: impl Into<String>) -> PresetError {
    PresetError::InvalidParameters(detail.into())
}

fn pair<'a>(s: &'a str, what: &str) -> Result<(&'a str, &'a str), PresetError> {
    s.split_once(',').map(|(x, y)| (x.trim(), y.trim())).ok_or_else(|| bad(format!("{what} needs two parameters")))
}

fn int(s: &str) -> Result<i64, PresetError> {
    s.parse().map_err(|_| bad(format!("{s:?} is not an integer")))
}

fn rational(s: &str) -> Result<Rational, PresetError> {
    parse_rational(s).map_err(|_| bad(format!("{s:?} is not a rational number")))
}

/// Splits `inner,last` at the last comma outside parentheses.
fn split_last_arg(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => split = Some(i),
            _ => {}
        }
    }
    split.map(|i| (s[..i].trim(), s[i + 1..].trim()))
}

impl FromStr for PresetId {
    type Err = PresetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("P2:") {
            let (c, d) = pair(rest, "P2")?;
            return Ok(PresetId::P2 { c: rational(c)?, d: rational(d)? });
        }
        if let Some(rest) = s.strip_prefix("P:") {
            let (a, b) = pair(rest, "P")?;
            return Ok(PresetId::P { a: int(a)?, b: int(b)? });
        }
        if let Some(inner) = s.strip_prefix("petrie(").and_then(|r| r.strip_suffix(')')) {
            return Ok(PresetId::Petrie(Box::new(inner.parse()?)));
        }
        if let Some(inner) = s.strip_prefix("blend(").and_then(|r| r.strip_suffix(')')) {
            let (base, comp) = split_last_arg(inner).ok_or_else(|| bad("blend needs a preset and a component"))?;
            let component = if let Some(len) = comp.strip_prefix("seg:") {
                BlendComponent::Segment(rational(len)?)
            } else if let Some(step) = comp.strip_prefix("apeiro:") {
                BlendComponent::Apeirogon(rational(step)?)
            } else {
                return Err(bad(format!("unknown blend component {comp:?}")));
            };
            return Ok(PresetId::Blend { base: Box::new(base.parse()?), component });
        }
        if let Some(r) = RegularPreset::ALL.into_iter().find(|r| r.name() == s) {
            return Ok(PresetId::Regular(r));
        }
        if let Some(k) = [KComplex::K1, KComplex::K4, KComplex::K5].into_iter().find(|k| k.name() == s) {
            return Ok(PresetId::K(k));
        }
        match s {
            "skel2cubic" => Ok(PresetId::CubicSkeleton),
            _ => Err(unknown(s)),
        }
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetId::P { a, b } => write!(f, "P:{a},{b}"),
            PresetId::P2 { c, d } => write!(f, "P2:{c},{d}"),
            PresetId::Regular(r) => f.write_str(r.name()),
            PresetId::Petrie(inner) => write!(f, "petrie({inner})"),
            PresetId::Blend { base, component: BlendComponent::Segment(h) } => write!(f, "blend({base},seg:{h})"),
            PresetId::Blend { base, component: BlendComponent::Apeirogon(s) } => write!(f, "blend({base},apeiro:{s})"),
            PresetId::CubicSkeleton => f.write_str("skel2cubic"),
            PresetId::K(k) => f.write_str(k.name()),
        }
    }
}

/// An instantiated preset.
#[derive(Clone, Debug)]
pub struct Structure {
    pub id: PresetId,
    /// Present for structures generated by a symmetry orbit.
    pub generators: Option<GeneratorSet>,
    pub complex: SkeletalComplex,
    pub mode: Mode,
}

impl PresetId {
    pub fn mode(&self) -> Mode {
        match self {
            PresetId::CubicSkeleton | PresetId::K(_) => Mode::Complex,
            _ => Mode::Polyhedron,
        }
    }

    /// Generators, for the presets built as symmetry orbits.
    pub fn generators(&self) -> Result<Option<GeneratorSet>, PresetError> {
        match self {
            PresetId::P { a, b } => p_family(*a, *b).map(Some),
            PresetId::P2 { c, d } => p2_family(c.clone(), d.clone()).map(Some),
            PresetId::Regular(r) => regular_generators(*r).map(Some),
            PresetId::Blend { base, component } => match base.as_ref() {
                PresetId::Regular(r) if r.is_planar() => {
                    let planar = regular_generators(*r)?;
                    let normal = plane_normal(&super::regular_structure(*r, &Region::centered(3))?)?;
                    Ok(Some(blend_generators(&planar, &normal, component)?))
                }
                _ => Ok(None),
            },
            _ => Ok(None),
        }
    }

    /// The structure restricted to `region`; finite structures ignore it.
    pub fn instantiate(&self, region: &Region) -> Result<Structure, PresetError> {
        let complex = self.build(region)?;
        Ok(Structure { id: self.clone(), generators: self.generators()?, complex, mode: self.mode() })
    }

    fn build(&self, region: &Region) -> Result<SkeletalComplex, PresetError> {
        match self {
            PresetId::Regular(r) => super::regular_structure(*r, region),
            PresetId::P { .. } | PresetId::P2 { .. } => {
                let gens = self.generators()?.expect("generator preset");
                Ok(wythoff_patch(&gens, region)?)
            }
            PresetId::Petrie(inner) => {
                let patch = inner.build(region)?;
                if patch.is_finite() {
                    return Ok(petrie_dual(&patch)?);
                }
                Ok(petrie_dual_with(&patch, &inner.smallest_study()?.flags)?)
            }
            PresetId::Blend { base, component: component @ BlendComponent::Segment(h) } => {
                let normal = plane_normal(&base.build(region)?)?;
                let planar = base.build(&region.expanded(&(h.abs() * normal.max_norm())))?;
                Ok(blend(&planar, component)?)
            }
            PresetId::Blend { base, component } => Ok(blend(&base.build(region)?, component)?),
            PresetId::CubicSkeleton => cubic_two_skeleton(region),
            PresetId::K(k) => build_k_complex(*k, region),
        }
    }

    /// Study at the smallest scale whose quotient does not identify a face with a translate.
    pub fn smallest_study(&self) -> Result<Study, PresetError> {
        let mut scale = 1;
        loop {
            match self.study(scale) {
                Err(PresetError::Orbit(OrbitError::SelfIdentification(_))) if scale < 4 => scale += 1,
                other => return other,
            }
        }
    }

    /// The structure with a patch just large enough for its quotient at `scale`.
    pub fn study(&self, scale: i64) -> Result<Study, PresetError> {
        if let Some(gens) = self.generators()? {
            return Ok(Study::from_generators(&gens, scale)?);
        }
        let probe = self.build(&Region::centered(2))?;
        if probe.is_finite() {
            return Ok(Study::of_complex(probe, 1)?);
        }
        let anchor = probe.vertices().first().cloned().ok_or(OrbitError::BadRegion)?;
        let periods: Lattice = probe.periods().clone();
        let thickness = off_span(&probe, &periods, &anchor) + q(1);
        Study::from_builder(&periods, &anchor, &thickness, scale, |r: &Region| self.build(r))
    }
}

/// How far the vertices stray from the affine span of `periods` through `anchor`.
fn off_span(complex: &SkeletalComplex, periods: &Lattice, anchor: &Vec3) -> Rational {
    let basis = periods.basis();
    let normal = match basis {
        [a, b] => a.cross(b),
        _ => return q(0),
    };
    let nn = normal.norm_sq();
    complex
        .vertices()
        .iter()
        .map(|v| normal.scale(&((v - anchor).dot(&normal) / &nn)).max_norm())
        .max()
        .unwrap_or_else(|| q(0))
}
