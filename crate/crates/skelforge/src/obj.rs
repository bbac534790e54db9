//! Wavefront OBJ export of skeletal structures.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::ToPrimitive;

use skelforge_core::complex::SkeletalComplex;
use skelforge_core::geometry::{rank, Rational, Vec3};
use skelforge_core::orbit::FaceDescriptor;

pub const DEFAULT_PERIODS: usize = 3;

fn coord(r: &Rational) -> String {
    let x = r.to_f64().unwrap_or(f64::NAN);
    let s = format!("{x:.12}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

struct VertexTable {
    index: BTreeMap<Vec3, usize>,
    order: Vec<Vec3>,
}

impl VertexTable {
    fn id(&mut self, p: &Vec3) -> usize {
        if let Some(&i) = self.index.get(p) {
            return i;
        }
        self.order.push(p.clone());
        self.index.insert(p.clone(), self.order.len());
        self.order.len()
    }
}

fn is_planar(points: &[Vec3]) -> bool {
    let diffs: Vec<Vec3> = points.iter().map(|p| p - &points[0]).collect();
    rank(&diffs) <= 2
}

/// Finite planar faces become `f` records; skew faces and `periods` periods of
/// every infinite face become `l` polylines.
pub fn to_obj(complex: &SkeletalComplex, periods: usize) -> String {
    let mut table = VertexTable { index: BTreeMap::new(), order: Vec::new() };
    for v in complex.vertices() {
        table.id(v);
    }
    let mut records = Vec::new();
    for face in complex.faces() {
        match &face.descriptor {
            FaceDescriptor::Finite(v) => {
                let ids: Vec<usize> = v.iter().map(|p| table.id(p)).collect();
                let list = ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                if is_planar(v) {
                    records.push(format!("f {list}"));
                } else {
                    records.push(format!("l {list} {}", ids[0]));
                }
            }
            d @ FaceDescriptor::Infinite { .. } => {
                let start = complex.region().and_then(|r| d.index_range(r)).map_or(0, |(a, _)| a);
                let steps = (periods * d.period_len()) as i64;
                let ids: Vec<String> = (start..=start + steps).map(|j| table.id(&d.vertex_at(j)).to_string()).collect();
                records.push(format!("l {}", ids.join(" ")));
            }
        }
    }
    let mut out = String::new();
    let (v, e, f) = complex.counts();
    let _ = writeln!(out, "# skeletal structure: {v} vertices, {e} edges, {f} faces");
    for p in &table.order {
        let _ = writeln!(out, "v {} {} {}", coord(&p.0[0]), coord(&p.0[1]), coord(&p.0[2]));
    }
    for r in records {
        out.push_str(&r);
        out.push('\n');
    }
    out
}
