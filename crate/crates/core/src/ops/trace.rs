use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::Study;
use crate::complex::{FlagStructure, SkeletalComplex};
use crate::geometry::Vec3;
use crate::orbit::FaceDescriptor;

use super::OpsError;

const MAX_SCALE: i64 = 4;

/// A word in `ρ₀, ρ₁, ρ₂` moving a flag one edge along a distinguished path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TraceWord {
    Petrie,
    Hole,
    TwoZigzag,
}

impl TraceWord {
    pub const ALL: [TraceWord; 3] = [TraceWord::Petrie, TraceWord::Hole, TraceWord::TwoZigzag];

    /// Ranks applied in order, leftmost first.
    pub fn ranks(self) -> &'static [u8] {
        match self {
            TraceWord::Petrie => &[0, 1, 2],
            TraceWord::Hole => &[0, 1, 2, 1],
            TraceWord::TwoZigzag => &[0, 1, 2, 1, 2],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TraceWord::Petrie => "petrie",
            TraceWord::Hole => "hole",
            TraceWord::TwoZigzag => "two_zigzag",
        }
    }

    pub fn parse(s: &str) -> Option<TraceWord> {
        TraceWord::ALL.into_iter().find(|w| w.name() == s)
    }
}

impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Edges per closed circuit, or the period of a circuit that never closes in space.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TraceLength {
    Closed(usize),
    Periodic { steps: usize, translation: Vec3 },
}

impl fmt::Display for TraceLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceLength::Closed(n) => write!(f, "{n}"),
            TraceLength::Periodic { steps, translation } => write!(f, "periodic {steps} along {translation}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordTrace {
    pub word: TraceWord,
    /// Quotient flags visited, starting flag first.
    pub cycle: Vec<usize>,
    /// Geometric vertex of each visited flag.
    pub path: Vec<Vec3>,
    /// Translation between the start and the flag reached after a full cycle.
    pub closing: Vec3,
    pub length: TraceLength,
}

impl WordTrace {
    /// The traced polygon as a face.
    pub fn descriptor(&self) -> FaceDescriptor {
        match &self.length {
            TraceLength::Closed(_) => FaceDescriptor::Finite(self.path.clone()),
            TraceLength::Periodic { steps, translation } => {
                FaceDescriptor::Infinite { period: self.path[..*steps].to_vec(), translation: translation.clone() }
            }
        }
    }
}

/// Flag structure of a polyhedron, using the smallest quotient scale that works.
pub(crate) fn polyhedral_flags(p: &SkeletalComplex) -> Result<FlagStructure, OpsError> {
    let study = Study::of_complex_auto(p.clone(), MAX_SCALE)?;
    if !study.flags.is_polyhedral() {
        return Err(OpsError::NotPolyhedron);
    }
    Ok(study.flags)
}

fn length_of(path: &[Vec3], closing: &Vec3) -> TraceLength {
    let m = path.len();
    if closing.is_zero() {
        return TraceLength::Closed(m);
    }
    let at = |i: usize| if i < m { path[i].clone() } else { &path[i - m] + closing };
    let steps = (1..=m)
        .filter(|j| m % j == 0)
        .find(|&j| {
            let tau = &at(j) - &path[0];
            (0..m).all(|i| &at(i + j) - &path[i] == tau)
        })
        .expect("the full cycle is a period");
    TraceLength::Periodic { steps, translation: &at(steps) - &path[0] }
}

/// Every distinct circuit of `word` on a polyhedral flag structure.
pub fn trace_flags(flags: &FlagStructure, word: TraceWord) -> Result<Vec<WordTrace>, OpsError> {
    if !flags.is_polyhedral() {
        return Err(OpsError::NotPolyhedron);
    }
    let ranks = word.ranks();
    let q = flags.quotient();
    let mut visited = alloc::vec![false; flags.len()];
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in 0..flags.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut path = Vec::new();
        let (mut id, mut shift) = (start, Vec3::zero());
        loop {
            visited[id] = true;
            cycle.push(id);
            path.push(flags.lifted_vertex(id, &shift));
            (id, shift) = flags.lifted_word(id, &shift, ranks).ok_or(OpsError::NotPolyhedron)?;
            if id == start {
                break;
            }
        }
        let key = q.walk_key(&path, &shift).ok_or(OpsError::NotPolyhedron)?;
        if !seen.insert(key) {
            continue;
        }
        let length = length_of(&path, &shift);
        out.push(WordTrace { word, cycle, path, closing: shift, length });
    }
    Ok(out)
}

/// Circuits of `word` on a polyhedron, computed on its quotient when infinite.
pub fn trace(p: &SkeletalComplex, word: TraceWord) -> Result<Vec<WordTrace>, OpsError> {
    trace_flags(&polyhedral_flags(p)?, word)
}

#[cfg(test)]
mod tests {
    use alloc::collections::BTreeMap;

    use super::*;
    use crate::classify::Study;
    use crate::presets::{p_family, regular_generators, RegularPreset};

    fn cube() -> SkeletalComplex {
        Study::from_generators(&regular_generators(RegularPreset::Cube).unwrap(), 1).unwrap().complex
    }

    #[test]
    fn cube_petrie_polygons_are_hexagons() {
        let t = trace(&cube(), TraceWord::Petrie).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.iter().all(|c| c.length == TraceLength::Closed(6)));
    }

    #[test]
    fn petrie_polygons_cover_each_edge_twice() {
        let c = cube();
        let mut uses: BTreeMap<(Vec3, Vec3), usize> = BTreeMap::new();
        for t in trace(&c, TraceWord::Petrie).unwrap() {
            for i in 0..t.path.len() {
                let (a, b) = (t.path[i].clone(), t.path[(i + 1) % t.path.len()].clone());
                *uses.entry(if a < b { (a, b) } else { (b, a) }).or_default() += 1;
            }
        }
        assert_eq!(uses.len(), 12);
        assert!(uses.values().all(|&n| n == 2));
    }

    #[test]
    fn word_returns_to_start_after_cycle() {
        let c = cube();
        let flags = polyhedral_flags(&c).unwrap();
        for w in TraceWord::ALL {
            for t in trace_flags(&flags, w).unwrap() {
                let mut id = t.cycle[0];
                for _ in 0..t.cycle.len() {
                    id = flags.apply_word(id, w.ranks()).unwrap();
                }
                assert_eq!(id, t.cycle[0]);
            }
        }
    }

    #[test]
    fn holes_of_p11_are_triangles() {
        let st = Study::from_generators(&p_family(1, 1).unwrap(), 2).unwrap();
        let holes = trace_flags(&st.flags, TraceWord::Hole).unwrap();
        assert!(!holes.is_empty());
        assert!(holes.iter().all(|h| h.length == TraceLength::Closed(3)));
    }

    #[test]
    fn periodic_length_finds_minimal_period() {
        let path = [Vec3::from_ints(0, 0, 0), Vec3::from_ints(1, 1, 0), Vec3::from_ints(2, 0, 0), Vec3::from_ints(3, 1, 0)];
        let len = length_of(&path, &Vec3::from_ints(4, 0, 0));
        assert_eq!(len, TraceLength::Periodic { steps: 2, translation: Vec3::from_ints(2, 0, 0) });
    }
}
