use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complex::{FlagStructure, SkeletalComplex};
use crate::geometry::Vec3;

use super::trace::{polyhedral_flags, trace_flags};
use super::{OpsError, TraceWord};

/// Same vertices and edges, with the Petrie polygons as faces.
pub fn petrie_dual(p: &SkeletalComplex) -> Result<SkeletalComplex, OpsError> {
    petrie_dual_with(p, &polyhedral_flags(p)?)
}

/// Petrie dual of the patch `p`, with the Petrie polygons read from the flags of a
/// quotient of the same structure.
pub fn petrie_dual_with(p: &SkeletalComplex, flags: &FlagStructure) -> Result<SkeletalComplex, OpsError> {
    let circuits = trace_flags(flags, TraceWord::Petrie)?;
    let q = flags.quotient();
    let mut by_class: BTreeMap<usize, Vec<&Vec3>> = BTreeMap::new();
    for v in p.vertices() {
        if let Some((c, _)) = q.locate(v) {
            by_class.entry(c).or_default().push(v);
        }
    }
    let mut faces = Vec::new();
    for c in &circuits {
        let face = c.descriptor();
        for x in &c.path {
            let (class, _) = q.locate(x).expect("path vertices lie in the quotient");
            for &y in by_class.get(&class).into_iter().flatten() {
                faces.push(face.translate(&(y - x)));
            }
        }
    }
    Ok(p.with_faces(faces)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_polygon, PolygonKind, Study};
    use crate::orbit::{wythoff_patch, Region};
    use crate::presets::{regular_generators, RegularPreset};

    fn finite(which: RegularPreset) -> SkeletalComplex {
        Study::from_generators(&regular_generators(which).unwrap(), 1).unwrap().complex
    }

    #[test]
    fn cube_petrial_has_four_skew_hexagons() {
        let pd = petrie_dual(&finite(RegularPreset::Cube)).unwrap();
        assert_eq!(pd.counts(), (8, 12, 4));
        for f in pd.faces() {
            assert_eq!(classify_polygon(&f.descriptor).unwrap().kind, PolygonKind::Skew { p: 6 });
        }
    }

    #[test]
    fn petrie_dual_is_an_involution() {
        for which in [RegularPreset::Tetrahedron, RegularPreset::Cube, RegularPreset::Octahedron] {
            let p = finite(which);
            let pd = petrie_dual(&p).unwrap();
            assert_eq!(pd.vertices(), p.vertices());
            assert_eq!(pd.edges(), p.edges());
            assert_eq!(petrie_dual(&pd).unwrap(), p);
        }
    }

    #[test]
    fn square_tessellation_petrial_has_zigzags() {
        let sq = wythoff_patch(&regular_generators(RegularPreset::Square44).unwrap(), &Region::centered(4)).unwrap();
        let pd = petrie_dual(&sq).unwrap();
        let origin = pd.vertex_id(&Vec3::zero()).unwrap();
        assert_eq!(pd.corners(origin).len(), 4);
        for f in pd.faces() {
            assert_eq!(classify_polygon(&f.descriptor).unwrap().kind, PolygonKind::Zigzag);
        }
    }
}
