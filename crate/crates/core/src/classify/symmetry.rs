use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{orbit_count, orbit_labels, FlagStructure};
use crate::geometry::{rank, solve_isometry, solve_isometry_planar, FixedSpace, GeometryError, Isometry, Vec3};

use super::ClassifyError;

/// Dimensions of the fixed sets of three generating involutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MirrorVector(pub [u8; 3]);

impl MirrorVector {
    /// One of the four vectors possible for a pure regular apeirohedron.
    pub fn is_pure_apeirohedral(self) -> bool {
        matches!(self.0, [2, 1, 2] | [1, 1, 2] | [1, 2, 1] | [1, 1, 1])
    }
}

impl fmt::Display for MirrorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

pub fn mirror_vector(r0: &Isometry, r1: &Isometry, r2: &Isometry) -> Result<MirrorVector, ClassifyError> {
    let mut dims = [0u8; 3];
    for (i, r) in [r0, r1, r2].into_iter().enumerate() {
        if !r.is_involution() {
            return Err(ClassifyError::NotInvolution(i));
        }
        dims[i] = match r.fixed_space_dim() {
            FixedSpace::Dim(d) => d,
            FixedSpace::Empty => return Err(ClassifyError::NoFixedPoints(i)),
        };
    }
    Ok(MirrorVector(dims))
}

/// Flags whose vertices make up the geometric frame of a flag.
const FRAME_WORDS: [&[u8]; 6] = [&[], &[0], &[1, 0], &[0, 1, 0], &[2, 1, 0], &[0, 2, 1, 0]];

/// Targets reached from the base flag by the distinguished generators.
pub const REFLECTION_TARGETS: [&[u8]; 3] = [&[0], &[1], &[2]];
pub const ROTATION_TARGETS: [&[u8]; 2] = [&[1, 0], &[2, 1]];

/// Flag symmetries discovered from a base flag.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlagSymmetries {
    /// `R0, R1, R2` mapping the base flag to its 0-, 1- and 2-adjacent flags.
    pub reflections: Option<[Isometry; 3]>,
    /// `S1, S2` mapping the base flag to `Φ^{10}` and `Φ^{21}`.
    pub rotations: Option<[Isometry; 2]>,
}

impl FlagSymmetries {
    pub fn all(&self) -> Vec<Isometry> {
        let mut out = Vec::new();
        if let Some(r) = &self.reflections {
            out.extend(r.iter().cloned());
        }
        if let Some(s) = &self.rotations {
            out.extend(s.iter().cloned());
        }
        out
    }
}

fn frame(flags: &FlagStructure, id: usize, shift: &Vec3) -> Option<Vec<Vec3>> {
    FRAME_WORDS
        .iter()
        .map(|w| flags.lifted_word(id, shift, w).map(|(x, s)| flags.lifted_vertex(x, &s)))
        .collect()
}

fn frame_normal(points: &[Vec3]) -> Option<Vec3> {
    let d: Vec<Vec3> = points.iter().map(|p| p - &points[0]).collect();
    if rank(&d) != 2 {
        return None;
    }
    let a = d.iter().find(|x| !x.is_zero())?;
    d.iter().map(|b| a.cross(b)).find(|c| !c.is_zero())
}

/// The flag symmetry taking the base flag to `base·word`, if one exists.
///
/// For a planar structure both candidates are symmetries; the one fixing the normal is preferred.
pub fn flag_symmetry(flags: &FlagStructure, base: usize, word: &[u8]) -> Result<Option<Isometry>, ClassifyError> {
    if !flags.is_polyhedral() {
        return Err(ClassifyError::NotPolyhedron);
    }
    let zero = Vec3::zero();
    let src = frame(flags, base, &zero).ok_or(ClassifyError::NotPolyhedron)?;
    let (target, shift) = flags.lifted_word(base, &zero, word).ok_or(ClassifyError::NotPolyhedron)?;
    let dst = frame(flags, target, &shift).ok_or(ClassifyError::NotPolyhedron)?;
    let pairs: Vec<(Vec3, Vec3)> = src.into_iter().zip(dst).collect();
    let mut candidates = match solve_isometry(&pairs) {
        Ok(g) => g.into_iter().collect(),
        Err(GeometryError::Underdetermined) => solve_isometry_planar(&pairs),
        Err(e) => return Err(e.into()),
    };
    if let Some(n) = frame_normal(&pairs.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>()) {
        candidates.sort_by_key(|g| g.apply_linear(&n) != n);
    }
    Ok(candidates.into_iter().find(|g| flags.permutation(g).is_some()))
}

pub fn find_flag_symmetries(flags: &FlagStructure, base: usize) -> Result<FlagSymmetries, ClassifyError> {
    let mut reflections = Vec::new();
    for w in REFLECTION_TARGETS {
        match flag_symmetry(flags, base, w)? {
            Some(g) => reflections.push(g),
            None => break,
        }
    }
    let mut rotations = Vec::new();
    for w in ROTATION_TARGETS {
        match flag_symmetry(flags, base, w)? {
            Some(g) => rotations.push(g),
            None => break,
        }
    }
    Ok(FlagSymmetries {
        reflections: <[Isometry; 3]>::try_from(reflections).ok(),
        rotations: <[Isometry; 2]>::try_from(rotations).ok(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictKind {
    Regular,
    Chiral,
    Neither,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Regular => "regular",
            VerdictKind::Chiral => "chiral",
            VerdictKind::Neither => "neither",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub kind: VerdictKind,
    pub flag_count: usize,
    pub orbits: usize,
    /// Every pair of adjacent flags lies in distinct orbits.
    pub adjacent_split: bool,
    /// An adjacent pair `(flag, rank)` in one orbit, when not split.
    pub joined_pair: Option<(usize, u8)>,
    pub symmetries: FlagSymmetries,
}

/// Flag orbits of the group generated by `gens` and the flag symmetries found at flag 0.
pub fn verdict(flags: &FlagStructure, gens: &[Isometry]) -> Result<SymmetryVerdict, ClassifyError> {
    if !flags.is_polyhedral() {
        return Err(ClassifyError::NotPolyhedron);
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        perms.push(flags.permutation(g).ok_or(ClassifyError::GeneratorsDoNotDescend(i))?);
    }
    let symmetries = if flags.is_empty() { FlagSymmetries::default() } else { find_flag_symmetries(flags, 0)? };
    for g in symmetries.all() {
        perms.push(flags.permutation(&g).expect("verified during discovery"));
    }
    let refs: Vec<&[usize]> = perms.iter().map(|p| p.as_slice()).collect();
    let labels = orbit_labels(flags.len(), &refs);
    let orbits = orbit_count(&labels);
    let mut joined_pair = None;
    'scan: for id in 0..flags.len() {
        for r in 0..3u8 {
            let other = flags.apply_word(id, &[r]).expect("polyhedral");
            if labels[other] == labels[id] {
                joined_pair = Some((id, r));
                break 'scan;
            }
        }
    }
    let adjacent_split = joined_pair.is_none();
    let kind = match orbits {
        1 => VerdictKind::Regular,
        2 if adjacent_split => VerdictKind::Chiral,
        _ => VerdictKind::Neither,
    };
    Ok(SymmetryVerdict { kind, flag_count: flags.len(), orbits, adjacent_split, joined_pair, symmetries })
}

/// Basic type `{p, q}`; `p = None` for infinite faces; `r` faces per edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Schlafli {
    pub p: Option<usize>,
    pub q: usize,
    pub r: usize,
}

impl fmt::Display for Schlafli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            Some(p) => write!(f, "{{{p},{}}}", self.q)?,
            None => write!(f, "{{∞,{}}}", self.q)?,
        }
        if self.r != 2 {
            write!(f, " r={}", self.r)?;
        }
        Ok(())
    }
}

pub fn schlafli(flags: &FlagStructure) -> Result<Schlafli, ClassifyError> {
    let q = flags.quotient();
    let sizes: Vec<Option<usize>> = q.faces().iter().map(|f| (!f.is_infinite()).then(|| f.len())).collect();
    let p = *sizes.first().ok_or_else(|| not_equivelar("no faces"))?;
    if sizes.iter().any(|s| *s != p) {
        return Err(not_equivelar("faces of different sizes"));
    }
    let mut per_vertex = alloc::vec![0usize; q.vertex_count()];
    for id in 0..flags.len() {
        per_vertex[flags.vertex(flags.flag(id))] += 1;
    }
    let corners = per_vertex[0];
    if per_vertex.iter().any(|&c| c != corners) {
        return Err(not_equivelar("vertices in different numbers of faces"));
    }
    let r = flags.faces_per_edge().ok_or_else(|| not_equivelar("edges in different numbers of faces"))?;
    Ok(Schlafli { p, q: corners / 2, r })
}

fn not_equivelar(detail: &str) -> ClassifyError {
    ClassifyError::NotEquivelar(String::from(detail))
}
