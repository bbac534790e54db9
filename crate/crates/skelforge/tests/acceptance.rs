//! End-to-end acceptance criteria. Each test writes one PASS/FAIL line to stderr.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::io::Write;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use skelforge::json::{to_pretty, ComplexJson};
use skelforge_core::classify::{
    classify_polygon, classify_study, dual_congruence_check, signed_permutations, vertex_figure_polygon,
    ClassificationReport, PolygonKind, Study, VerdictKind,
};
use skelforge_core::complex::{validate, FlagStructure, GraphName, Mode, SkeletalComplex};
use skelforge_core::geometry::{frac, q, Isometry, OrderOrTranslation, Vec3};
use skelforge_core::nets::{
    coordination_sequence, extract_net, identify_net, reference_net, NetId, VertexSetId,
};
use skelforge_core::ops::{covering_check, helix_translations, petrie_dual, trace, trace_flags, Projection, TraceLength, TraceWord};
use skelforge_core::orbit::{build_base_face, wythoff_patch, FaceDescriptor, GeneratorSet, Region};
use skelforge_core::presets::{build_k_complex, p2_family, p_family, KComplex, PresetId};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn report(n: usize, title: &str, check: fn() -> Check) {
    let start = Instant::now();
    let outcome = check();
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    let detail = outcome.as_ref().err().map(|e| format!(": {e}")).unwrap_or_default();
    let _ = writeln!(std::io::stderr(), "[{status}] criterion {n:>2} {title} ({:.2?}){detail}", start.elapsed());
    if let Err(e) = outcome {
        panic!("criterion {n} failed: {e}");
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn preset(name: &str) -> Result<PresetId, String> {
    name.parse().map_err(err)
}

fn patch(name: &str, radius: i64) -> Result<SkeletalComplex, String> {
    Ok(preset(name)?.instantiate(&Region::centered(radius)).map_err(err)?.complex)
}

fn analyse(name: &str, scale: i64) -> Result<(Study, ClassificationReport), String> {
    let id = preset(name)?;
    let study = id.study(scale).map_err(err)?;
    classified(&id, study)
}

fn analyse_smallest(name: &str) -> Result<(Study, ClassificationReport), String> {
    let id = preset(name)?;
    let study = id.smallest_study().map_err(err)?;
    classified(&id, study)
}

fn classified(id: &PresetId, study: Study) -> Result<(Study, ClassificationReport), String> {
    let gens = id.generators().map_err(err)?;
    let report = classify_study(&study, gens.as_ref(), id.mode()).map_err(err)?;
    Ok((study, report))
}

fn only_kind(kinds: &BTreeMap<PolygonKind, usize>, expected: PolygonKind) -> bool {
    kinds.len() == 1 && kinds.contains_key(&expected)
}

fn closed_lengths(flags: &FlagStructure, word: TraceWord) -> Result<BTreeSet<usize>, String> {
    let mut out = BTreeSet::new();
    for t in trace_flags(flags, word).map_err(err)? {
        match t.length {
            TraceLength::Closed(m) => {
                out.insert(m);
            }
            other => return Err(format!("{} circuit does not close: {other}", word.name())),
        }
    }
    Ok(out)
}

fn serialized(c: &SkeletalComplex) -> String {
    to_pretty(&ComplexJson::from(c))
}

fn v(x: i64, y: i64, z: i64) -> Vec3 {
    Vec3::from_ints(x, y, z)
}

fn criterion_1() -> Check {
    let cube = patch("cube", 2)?;
    let dual = petrie_dual(&cube).map_err(err)?;
    ensure!(dual.counts() == (8, 12, 4), "counts {:?}", dual.counts());
    for f in dual.faces() {
        let kind = classify_polygon(&f.descriptor).map_err(err)?.kind;
        ensure!(kind == PolygonKind::Skew { p: 6 }, "face is {kind}");
    }
    let lengths: BTreeSet<String> = trace(&dual, TraceWord::Petrie).map_err(err)?.iter().map(|t| t.length.to_string()).collect();
    ensure!(lengths == BTreeSet::from(["4".to_string()]), "Petrie lengths {lengths:?}");
    let back = petrie_dual(&dual).map_err(err)?;
    ensure!(serialized(&back) == serialized(&cube), "double Petrie dual differs from the cube");
    Ok(())
}

fn criterion_2() -> Check {
    let gens = p_family(1, 0).map_err(err)?;
    let base = build_base_face(&gens).map_err(err)?;
    let listed = vec![v(0, 0, 0), v(0, 0, -1), v(0, -1, -1), v(1, -1, -1), v(1, -1, 0), v(1, 0, 0)];
    ensure!(base == FaceDescriptor::Finite(listed), "base face {:?}", base.listed());

    let figure = vec![v(1, 0, 0), v(0, -1, 0), v(0, 0, 1), v(-1, 0, 0), v(0, 1, 0), v(0, 0, -1)];
    let s2 = gens.get("S2").ok_or("no S2")?;
    let orbit: Vec<Vec3> = (0..6).map(|k| s2.pow(k).apply(gens.base_edge_other())).collect();
    ensure!(orbit == figure, "S2-orbit of u is {orbit:?}");
    let p = wythoff_patch(&gens, &Region::centered(4)).map_err(err)?;
    let origin = p.vertex_id(&Vec3::zero()).ok_or("origin missing")?;
    let at_origin = vertex_figure_polygon(&p, origin).map_err(err)?;
    ensure!(at_origin.canonical() == FaceDescriptor::Finite(figure).canonical(), "vertex-figure {:?}", at_origin.listed());

    let (_, r) = analyse("P:1,0", 4)?;
    ensure!(only_kind(&r.faces, PolygonKind::Skew { p: 6 }), "faces {:?}", r.faces);
    ensure!(only_kind(&r.vertex_figures, PolygonKind::Skew { p: 6 }), "vertex-figures {:?}", r.vertex_figures);
    let s = r.schlafli.ok_or("no type")?;
    ensure!((s.p, s.q, s.r) == (Some(6), 6, 2), "type {s}");
    let verdict = r.verdict.ok_or("no verdict")?;
    ensure!(verdict.kind == VerdictKind::Chiral, "verdict {}", verdict.kind);
    ensure!(verdict.orbits == 2 && verdict.adjacent_split, "orbits {} split {}", verdict.orbits, verdict.adjacent_split);
    ensure!(verdict.symmetries.reflections.is_none(), "a flag symmetry reaches an adjacent flag");
    Ok(())
}

fn criterion_3() -> Check {
    let (study, r) = analyse("P:1,1", 4)?;
    ensure!(r.verdict.as_ref().map(|x| x.kind) == Some(VerdictKind::Regular), "P(1,1) not regular");
    ensure!(only_kind(&r.faces, PolygonKind::Convex { p: 6 }), "P(1,1) faces {:?}", r.faces);
    let holes = closed_lengths(&study.flags, TraceWord::Hole)?;
    ensure!(holes == BTreeSet::from([3]), "P(1,1) holes {holes:?}");

    let (study, r) = analyse("P:1,-1", 4)?;
    ensure!(r.verdict.as_ref().map(|x| x.kind) == Some(VerdictKind::Regular), "P(1,-1) not regular");
    ensure!(only_kind(&r.faces, PolygonKind::Skew { p: 6 }), "P(1,-1) faces {:?}", r.faces);
    ensure!(only_kind(&r.vertex_figures, PolygonKind::Convex { p: 6 }), "P(1,-1) vertex-figures {:?}", r.vertex_figures);
    let petrie = closed_lengths(&study.flags, TraceWord::Petrie)?;
    ensure!(petrie == BTreeSet::from([4]), "P(1,-1) Petrie polygons {petrie:?}");
    Ok(())
}

fn criterion_4() -> Check {
    let a = patch("P:1,0", 6)?;
    let b = patch("P:0,1", 6)?;
    let w = dual_congruence_check(&a, &b).map_err(err)?.ok_or("no congruence found")?;
    ensure!(w.checked > 0, "no face center checked");
    ensure!(signed_permutations().contains(w.isometry.linear()), "witness is not a signed permutation");
    let inner = Region::centered(2);
    let mut hits = 0;
    for f in a.faces().iter().filter(|f| !f.truncated) {
        let pts = f.descriptor.listed();
        let center = pts.iter().fold(Vec3::zero(), |acc, p| &acc + p).scale(&frac(1, pts.len() as i64));
        let image = w.isometry.apply(&center);
        if inner.contains(&image) {
            ensure!(b.vertex_id(&image).is_some(), "face center {center} maps to {image}, not a vertex");
            hits += 1;
        }
    }
    ensure!(hits > 0, "no face center lands in the inner region");
    Ok(())
}

fn criterion_5() -> Check {
    let cube = patch("P2:0,1", 2)?;
    ensure!(cube.counts() == (8, 12, 6), "P2(0,1) counts {:?}", cube.counts());
    ensure!(validate(&cube, Mode::Polyhedron).is_valid(), "P2(0,1) invalid");
    for f in cube.faces() {
        let kind = classify_polygon(&f.descriptor).map_err(err)?.kind;
        ensure!(kind == PolygonKind::Convex { p: 4 }, "P2(0,1) face {kind}");
    }
    let g01 = p2_family(q(0), q(1)).map_err(err)?;
    ensure!(g01.get("S1").ok_or("no S1")?.pow(4).is_identity(), "S1^4 is not the identity for P2(0,1)");

    let g10 = p2_family(q(1), q(0)).map_err(err)?;
    let s1_4 = g10.get("S1").ok_or("no S1")?.pow(4);
    ensure!(s1_4 == Isometry::translation_by(v(0, 4, 0)), "S1^4 = {s1_4:?}");
    let (_, r) = analyse("P2:1,0", 4)?;
    ensure!(r.verdict.as_ref().map(|x| x.kind) == Some(VerdictKind::Regular), "P2(1,0) not regular");
    ensure!(r.mirror_vector.map(|m| m.0) == Some([1, 1, 1]), "mirror vector {:?}", r.mirror_vector);
    ensure!(only_kind(&r.faces, PolygonKind::Helical { k: 4 }), "P2(1,0) faces {:?}", r.faces);

    let (_, r) = analyse("P2:1,1", 4)?;
    ensure!(r.verdict.as_ref().map(|x| x.kind) == Some(VerdictKind::Chiral), "P2(1,1) not chiral");
    let helix = patch("P2:1,1", 4)?;
    let target = patch("cube", 2)?;
    let covering = covering_check(&helix, &target, &Projection::Compression(helix_translations(&helix))).map_err(err)?;
    ensure!(covering.is_some(), "no covering of the cube");
    Ok(())
}

fn has_order(g: &Isometry, n: Option<usize>) -> bool {
    match n {
        Some(n) => g.pow(n as i64).is_identity() && (1..n).all(|k| !g.pow(k as i64).is_identity()),
        None => matches!(g.order_or_translation(24), OrderOrTranslation::Translation(..)),
    }
}

fn criterion_6() -> Check {
    for name in ["tet", "cube", "oct", "sq44", "tri36", "hex63", "P:1,1", "P:1,-1", "P2:1,0", "petrie(cube)", "petrie(sq44)"] {
        let (_, r) = analyse_smallest(name)?;
        let s = r.schlafli.ok_or_else(|| format!("{name}: no type"))?;
        let verdict = r.verdict.ok_or_else(|| format!("{name}: no verdict"))?;
        let [r0, r1, r2] = verdict.symmetries.reflections.ok_or_else(|| format!("{name}: no R-generators"))?;
        ensure!(has_order(&r0.compose(&r1), s.p), "{name}: (R0R1) order is not {:?}", s.p);
        ensure!(has_order(&r1.compose(&r2), Some(s.q)), "{name}: (R1R2) order is not {}", s.q);
        ensure!(r0.compose(&r2).pow(2).is_identity(), "{name}: (R0R2)^2 is not the identity");
    }
    let chiral: Vec<(String, GeneratorSet, Option<usize>, usize)> = vec![
        ("P(1,0)".into(), p_family(1, 0).map_err(err)?, Some(6), 6),
        ("P(2,1)".into(), p_family(2, 1).map_err(err)?, Some(6), 6),
        ("P(1,-2)".into(), p_family(1, -2).map_err(err)?, Some(6), 6),
        ("P2(1,1)".into(), p2_family(q(1), q(1)).map_err(err)?, None, 3),
        ("P2(1,3)".into(), p2_family(q(1), q(3)).map_err(err)?, None, 3),
        ("P2(1,0)".into(), p2_family(q(1), q(0)).map_err(err)?, None, 3),
    ];
    for (name, g, p, qq) in chiral {
        let s1 = g.get("S1").ok_or("no S1")?;
        let s2 = g.get("S2").ok_or("no S2")?;
        ensure!(has_order(s1, p), "{name}: S1 order is not {p:?}");
        ensure!(has_order(s2, Some(qq)), "{name}: S2 order is not {qq}");
        let t = g.word("S1S2").map_err(err)?;
        ensure!(t.pow(2).is_identity(), "{name}: (S1S2)^2 is not the identity");
        ensure!(Some(&t) == g.get("T"), "{name}: S1S2 differs from T");
        let (o, u) = (g.base_vertex(), g.base_edge_other());
        ensure!(t.apply(o) == *u && t.apply(u) == *o, "{name}: S1S2 does not swap the base edge");
    }
    Ok(())
}

fn criterion_7() -> Check {
    let rows = [
        ("K1_12", PolygonKind::Skew { p: 4 }, GraphName::Cuboctahedron, "Λ2", NetId::Fcu, None),
        ("K4_12", PolygonKind::Skew { p: 6 }, GraphName::Octahedron, "Λ1", NetId::Pcu, Some(12)),
        ("K5_12", PolygonKind::Skew { p: 6 }, GraphName::DoubleSquare, "V", NetId::Nbo, Some(8)),
        ("skel2cubic", PolygonKind::Convex { p: 4 }, GraphName::Octahedron, "Λ1", NetId::Pcu, None),
    ];
    for (name, face, figure, set, net, at_vertex) in rows {
        let (_, r) = analyse(name, 4)?;
        let s = r.schlafli.ok_or_else(|| format!("{name}: no type"))?;
        ensure!(s.r == 4, "{name}: r = {}", s.r);
        ensure!(only_kind(&r.faces, face), "{name}: faces {:?}", r.faces);
        ensure!(r.vertex_figure_graph == figure, "{name}: vertex-figure {}", r.vertex_figure_graph.as_str());
        ensure!(r.vertex_set == VertexSetId::Exact(set), "{name}: vertex set {:?}", r.vertex_set);
        ensure!(r.net == Some(net), "{name}: net {:?}", r.net);
        let p = patch(name, 3)?;
        ensure!(validate(&p, Mode::Complex).r == Some(4), "{name}: patch does not validate with r = 4");
        if let Some(n) = at_vertex {
            let origin = Vec3::zero();
            let count = p.faces().iter().filter(|f| f.descriptor.listed().contains(&origin)).count();
            ensure!(count == n, "{name}: {count} faces at the origin");
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let radius = 4;
    let seg = patch("blend(sq44,seg:1)", radius)?;
    let heights: BTreeSet<Vec3> = seg.vertices().iter().map(|p| Vec3::new(q(0), q(0), p.0[2].clone())).collect();
    ensure!(heights == BTreeSet::from([v(0, 0, -1), v(0, 0, 1)]), "axis projection {heights:?}");
    for f in seg.faces() {
        let kind = classify_polygon(&f.descriptor).map_err(err)?.kind;
        ensure!(kind == PolygonKind::Skew { p: 4 }, "blend face {kind}");
    }
    let flat = |p: &Vec3| Vec3::new(p.0[0].clone(), p.0[1].clone(), q(0));
    let planar = patch("sq44", radius)?;
    let region = Region::centered(radius);
    let inside = |c: &SkeletalComplex| -> BTreeSet<Vec3> { c.vertices().iter().map(flat).filter(|p| region.contains(p)).collect() };
    ensure!(inside(&seg) == inside(&planar), "plane projection misses {{4,4}} vertices");
    let edges = |c: &SkeletalComplex| -> BTreeSet<(Vec3, Vec3)> {
        c.edges()
            .iter()
            .map(|&[a, b]| (flat(&c.vertices()[a]), flat(&c.vertices()[b])))
            .filter(|(a, b)| region.contains(a) && region.contains(b))
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect()
    };
    ensure!(edges(&seg) == edges(&planar), "plane projection misses {{4,4}} edges");
    let squares: BTreeSet<FaceDescriptor> = planar.faces().iter().map(|f| f.descriptor.canonical()).collect();
    for f in seg.faces() {
        let shadow = FaceDescriptor::Finite(f.descriptor.listed().iter().map(flat).collect()).canonical();
        ensure!(squares.contains(&shadow), "a blend face does not project onto a square");
    }

    let helix = patch("blend(sq44,apeiro:1)", radius)?;
    let origin = helix.vertex_id(&Vec3::zero()).ok_or("origin missing")?;
    for corner in helix.corners(origin) {
        let face = &helix.faces()[corner.face];
        let kind = classify_polygon(&face.descriptor).map_err(err)?.kind;
        ensure!(kind == PolygonKind::Helical { k: 4 }, "apeirogon blend face {kind}");
        let start = face.descriptor.index_of(&Vec3::zero()).ok_or("origin not on face")?;
        let mut shared: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for j in start - 4..start + 4 {
            let x = helix.vertex_id(&face.descriptor.vertex_at(j)).ok_or("helix leaves the patch")?;
            let y = helix.vertex_id(&face.descriptor.vertex_at(j + 1)).ok_or("helix leaves the patch")?;
            for other in helix.faces_at_edge(x, y) {
                if other != corner.face {
                    shared.entry(other).or_default().push(j);
                }
            }
        }
        ensure!(!shared.is_empty(), "helix has no neighbours");
        for steps in shared.values() {
            ensure!(steps.len() == 2 && steps[1] - steps[0] == 4, "adjacent helices share edges at steps {steps:?}");
        }
    }
    Ok(())
}

/// Shell sizes by breadth-first search over explicit points.
fn oracle_shells(start: Vec3, depth: usize, neighbours: impl Fn(&Vec3) -> Vec<Vec3>) -> Vec<usize> {
    let mut dist: BTreeMap<Vec3, usize> = BTreeMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    let mut shells = vec![0; depth];
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        if d == depth {
            continue;
        }
        for n in neighbours(&p) {
            if !dist.contains_key(&n) {
                dist.insert(n.clone(), d + 1);
                shells[d] += 1;
                queue.push_back(n);
            }
        }
    }
    shells
}

fn offsets(vectors: &[[i64; 3]]) -> impl Fn(&Vec3) -> Vec<Vec3> + '_ {
    move |p| vectors.iter().map(|d| p + &v(d[0], d[1], d[2])).collect()
}

fn criterion_9() -> Check {
    const DEPTH: usize = 6;
    let pcu = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]];
    let mut fcu = Vec::new();
    let mut bcu = Vec::new();
    for x in -1..=1i64 {
        for y in -1..=1i64 {
            for z in -1..=1i64 {
                let nonzero = [x, y, z].iter().filter(|c| **c != 0).count();
                if nonzero == 2 {
                    fcu.push([x, y, z]);
                }
                if nonzero == 3 {
                    bcu.push([x, y, z]);
                }
            }
        }
    }
    let tetra = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]];
    let dia = |p: &Vec3| -> Vec<Vec3> {
        let sign = if p.0[0].to_integer() % 2 == 0.into() { 1 } else { -1 };
        tetra.iter().map(|d| p + &v(sign * d[0], sign * d[1], sign * d[2])).collect()
    };
    let k5 = build_k_complex(KComplex::K5, &Region::centered(DEPTH as i64 + 1)).map_err(err)?;
    let nbo = |p: &Vec3| -> Vec<Vec3> {
        let i = k5.vertex_id(p).expect("inside the patch");
        k5.neighbors(i).iter().map(|&j| k5.vertices()[j].clone()).collect()
    };
    let oracles: [(NetId, Vec<usize>, usize); 5] = [
        (NetId::Pcu, oracle_shells(Vec3::zero(), DEPTH, offsets(&pcu)), 6),
        (NetId::Fcu, oracle_shells(Vec3::zero(), DEPTH, offsets(&fcu)), 12),
        (NetId::Bcu, oracle_shells(Vec3::zero(), DEPTH, offsets(&bcu)), 8),
        (NetId::Dia, oracle_shells(Vec3::zero(), DEPTH, dia), 4),
        (NetId::Nbo, oracle_shells(Vec3::zero(), DEPTH, nbo), 4),
    ];
    for (id, oracle, shell1) in oracles {
        let g = reference_net(id).ok_or_else(|| format!("no reference {id}"))?;
        let seq = coordination_sequence(&g, DEPTH).map_err(err)?;
        ensure!(seq == oracle, "{id}: quotient {seq:?} vs oracle {oracle:?}");
        ensure!(seq[0] == shell1, "{id}: shell 1 is {}", seq[0]);
        ensure!(g.is_uninodal(DEPTH), "{id}: not vertex-transitive");
        ensure!(identify_net(&g) == id, "{id}: identified as {}", identify_net(&g));
    }
    for (name, id) in [("K4_12", NetId::Pcu), ("K1_12", NetId::Fcu), ("K5_12", NetId::Nbo)] {
        let g = extract_net(&patch(name, 4)?).map_err(err)?;
        ensure!(identify_net(&g) == id, "{name}: net {}", identify_net(&g));
    }
    Ok(())
}

fn criterion_10() -> Check {
    for (name, q_expected, petrie_len) in [("petrie(sq44)", 4, 4), ("petrie(tri36)", 6, 3), ("petrie(hex63)", 3, 6)] {
        let (study, r) = analyse(name, 4)?;
        ensure!(only_kind(&r.faces, PolygonKind::Zigzag), "{name}: faces {:?}", r.faces);
        let s = r.schlafli.ok_or_else(|| format!("{name}: no type"))?;
        ensure!(s.p.is_none() && s.q == q_expected, "{name}: type {s}");
        ensure!(r.verdict.as_ref().map(|x| x.kind) == Some(VerdictKind::Regular), "{name}: not regular");
        let lengths = closed_lengths(&study.flags, TraceWord::Petrie)?;
        ensure!(lengths == BTreeSet::from([petrie_len]), "{name}: Petrie polygons {lengths:?}");
    }
    Ok(())
}

fn runner(cases: u32) -> TestRunner {
    let seed: [u8; 32] = *b"skeletal polyhedra property seed";
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::from_seed(RngAlgorithm::ChaCha, &seed))
}

fn isometry_strategy() -> impl Strategy<Value = Isometry> {
    let perms = signed_permutations();
    (0..perms.len(), prop::array::uniform3((-6i64..=6, 1i64..=4)))
        .prop_map(move |(i, t)| Isometry::new(perms[i].clone(), Vec3::new(frac(t[0].0, t[0].1), frac(t[1].0, t[1].1), frac(t[2].0, t[2].1))).unwrap())
}

fn criterion_11() -> Check {
    let point = prop::array::uniform3(-9i64..=9).prop_map(|c| v(c[0], c[1], c[2]));
    runner(256)
        .run(&(isometry_strategy(), isometry_strategy(), isometry_strategy(), point), |(g, h, k, p)| {
            prop_assert_eq!(g.compose(&h).compose(&k), g.compose(&h.compose(&k)));
            prop_assert!(g.compose(&g.inverse()).is_identity());
            prop_assert_eq!(g.inverse().inverse(), g.clone());
            prop_assert_eq!(g.compose(&h).apply(&p), g.apply(&h.apply(&p)));
            prop_assert!(g.linear().is_orthogonal() && g.det().abs() == 1);
            prop_assert_eq!((&g.apply(&p) - &g.apply(&Vec3::zero())).norm_sq(), p.norm_sq());
            Ok(())
        })
        .map_err(|e| format!("isometry algebra: {e}"))?;

    let pairs = [(1i64, 0i64), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (2, -1)];
    runner(8)
        .run(&(0..pairs.len(), 1i64..=2), |(i, r)| {
            let (a, b) = pairs[i];
            let gens = p_family(a, b).unwrap();
            let first = wythoff_patch(&gens, &Region::centered(r)).unwrap();
            let second = wythoff_patch(&gens, &Region::centered(r)).unwrap();
            prop_assert_eq!(serialized(&first), serialized(&second));
            Ok(())
        })
        .map_err(|e| format!("orbit determinism: {e}"))?;

    let studied: Vec<(&str, Study)> = ["cube", "sq44", "P:1,0", "P2:1,1", "petrie(tri36)", "blend(sq44,apeiro:1)"]
        .into_iter()
        .map(|n| Ok((n, preset(n)?.smallest_study().map_err(err)?)))
        .collect::<Result<_, String>>()?;
    runner(512)
        .run(&(0..studied.len(), any::<prop::sample::Index>()), |(i, idx)| {
            let flags = &studied[i].1.flags;
            let f = idx.index(flags.len());
            for r in 0..3u8 {
                let once = flags.apply_word(f, &[r]).unwrap();
                prop_assert_ne!(once, f);
                prop_assert_eq!(flags.apply_word(f, &[r, r]), Some(f));
            }
            prop_assert_eq!(flags.apply_word(f, &[0, 2, 0, 2]), Some(f));
            prop_assert_eq!(flags.apply_word(f, &[0, 2]), flags.apply_word(f, &[2, 0]));
            Ok(())
        })
        .map_err(|e| format!("flag involutions: {e}"))?;

    for name in ["tet", "cube", "oct", "P2:0,1"] {
        let c = patch(name, 2)?;
        let twice = petrie_dual(&petrie_dual(&c).map_err(err)?).map_err(err)?;
        ensure!(serialized(&twice) == serialized(&c), "{name}: Petrie dual is not an involution");
    }
    for name in ["sq44", "tri36", "hex63", "P:1,0", "P:1,1", "P:1,-1"] {
        let twice = patch(&format!("petrie(petrie({name}))"), 2)?;
        let once = patch(name, 2)?;
        let faces = |c: &SkeletalComplex| -> BTreeSet<FaceDescriptor> {
            c.faces().iter().filter(|f| !f.truncated).map(|f| f.descriptor.canonical()).collect()
        };
        ensure!(faces(&twice) == faces(&once), "{name}: Petrie dual is not an involution");
    }

    for name in ["cube", "sq44", "tri36", "P:1,0", "P:1,1", "P2:1,1", "petrie(hex63)"] {
        let (study, first) = analyse_smallest(name)?;
        let (_, second) = analyse(name, study.scale + 1)?;
        let verdicts: Vec<(VerdictKind, usize)> = [first, second]
            .into_iter()
            .map(|r| r.verdict.map(|v| (v.kind, v.orbits)).ok_or_else(|| format!("{name}: no verdict")))
            .collect::<Result<_, String>>()?;
        ensure!(verdicts[0] == verdicts[1], "{name}: verdict changes with the scale: {verdicts:?}");
    }
    Ok(())
}

#[test]
fn criterion_01_petrie_dual_of_cube() {
    report(1, "Petrie dual of the cube", criterion_1);
}

#[test]
fn criterion_02_chiral_p10() {
    report(2, "P(1,0) faces, vertex-figure, type and chirality", criterion_2);
}

#[test]
fn criterion_03_degenerate_members() {
    report(3, "P(1,1) and P(1,-1) are regular", criterion_3);
}

#[test]
fn criterion_04_self_duality() {
    report(4, "P(1,0) and P(0,1) dual congruence", criterion_4);
}

#[test]
fn criterion_05_helix_family() {
    report(5, "P2 family: cube, regular helices, chiral covering", criterion_5);
}

#[test]
fn criterion_06_relations() {
    report(6, "generator relations", criterion_6);
}

#[test]
fn criterion_07_complex_rows() {
    report(7, "constructive polygonal complexes", criterion_7);
}

#[test]
fn criterion_08_blends() {
    report(8, "blends of {4,4}", criterion_8);
}

#[test]
fn criterion_09_net_oracle() {
    report(9, "net coordination sequences against BFS oracle", criterion_9);
}

#[test]
fn criterion_10_planar_petrie_duals() {
    report(10, "Petrie duals of the planar tessellations", criterion_10);
}

#[test]
fn criterion_11_property_suite() {
    report(11, "seeded property suite", criterion_11);
}
