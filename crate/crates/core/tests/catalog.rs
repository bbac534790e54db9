use proptest::prelude::*;

use skelforge_core::classify::{classify_polygon, PolygonKind};
use skelforge_core::complex::{validate, Mode};
use skelforge_core::geometry::{frac, Vec3};
use skelforge_core::orbit::{wythoff_patch, Region};
use skelforge_core::presets::{p_family, PresetId};

const CATALOG: &[&str] = &[
    "tet", "cube", "oct", "sq44", "tri36", "hex63",
    "P:1,0", "P:0,1", "P:1,1", "P:1,-1", "P:2,1", "P:1,2", "P:2,-1",
    "P2:0,1", "P2:1,0", "P2:1,1", "P2:1,3",
    "K1_12", "K4_12", "K5_12", "skel2cubic",
    "petrie(cube)", "petrie(sq44)", "petrie(tri36)", "petrie(hex63)",
    "blend(sq44,seg:1)", "blend(sq44,apeiro:1)",
];

#[test]
fn every_preset_builds_and_validates() {
    let region = Region::centered(4);
    for name in CATALOG {
        let id: PresetId = name.parse().unwrap();
        let s = id.instantiate(&region).unwrap();
        let (v, e, _) = s.complex.counts();
        assert!(v > 0 && e > 0, "{name} is empty");
        if id.mode() == Mode::Complex || s.complex.faces().is_empty() {
            continue;
        }
        let report = validate(&s.complex, id.mode());
        assert!(report.is_valid(), "{name}: {report:?}");
    }
}

#[test]
fn names_print_as_parsed() {
    for name in CATALOG {
        let id: PresetId = name.parse().unwrap();
        assert_eq!(id.to_string(), *name);
    }
}

#[test]
fn regular_finite_faces_are_convex() {
    for (name, p) in [("tet", 3), ("cube", 4), ("oct", 3)] {
        let c = name.parse::<PresetId>().unwrap().instantiate(&Region::centered(2)).unwrap().complex;
        for f in c.faces() {
            assert_eq!(classify_polygon(&f.descriptor).unwrap().kind, PolygonKind::Convex { p });
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn patches_grow_monotonically(i in 0usize..4, r in 1i64..3) {
        let (a, b) = [(1, 0), (0, 1), (1, 1), (1, -1)][i];
        let gens = p_family(a, b).unwrap();
        let small = wythoff_patch(&gens, &Region::centered(r)).unwrap();
        let large = wythoff_patch(&gens, &Region::centered(r + 1)).unwrap();
        for p in small.vertices() {
            prop_assert!(large.vertex_id(p).is_some());
        }
        prop_assert!(large.counts().0 >= small.counts().0);
    }

    #[test]
    fn translated_regions_see_translated_vertices(x in -2i64..=2, y in -2i64..=2, z in -2i64..=2) {
        let id: PresetId = "P:1,0".parse().unwrap();
        let shift = Vec3::from_ints(2 * x, 2 * y, 2 * z);
        let here = id.instantiate(&Region::centered(2)).unwrap().complex;
        let there = id.instantiate(&Region::new(shift.clone(), frac(2, 1)).unwrap()).unwrap().complex;
        for p in here.vertices() {
            let moved = p + &shift;
            prop_assert!(there.vertex_id(&moved).is_some(), "{} missing", moved);
        }
    }
}
