use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::geometry::{Lattice, Vec3, VertexSetSpec};
use crate::orbit::Region;
use crate::presets::{build_k_complex, KComplex};

use super::{extract_net, PEdge, PeriodicGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NetId {
    Pcu,
    Fcu,
    Bcu,
    Dia,
    Nbo,
    Unknown,
}

impl NetId {
    pub fn as_str(self) -> &'static str {
        match self {
            NetId::Pcu => "pcu",
            NetId::Fcu => "fcu",
            NetId::Bcu => "bcu",
            NetId::Dia => "dia",
            NetId::Nbo => "nbo",
            NetId::Unknown => "unknown",
        }
    }
}

impl fmt::Display for NetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Nearest-neighbor graph of a periodic point set with the given node representatives.
pub fn nearest_neighbor_net(spec: &VertexSetSpec, lattice: &Lattice, reps: &[Vec3]) -> PeriodicGraph {
    let node_of: BTreeMap<Vec3, usize> = reps.iter().enumerate().map(|(i, p)| (lattice.reduce(p).0, i)).collect();
    let mut edges = Vec::new();
    for (a, x) in reps.iter().enumerate() {
        let mut best: Option<crate::geometry::Rational> = None;
        let mut near = Vec::new();
        for dx in -2..=2 {
            for dy in -2..=2 {
                for dz in -2..=2 {
                    let d = Vec3::from_ints(dx, dy, dz);
                    if d.is_zero() || !spec.member(&(x + &d)) {
                        continue;
                    }
                    let n = d.norm_sq();
                    match &best {
                        Some(b) if n > *b => continue,
                        Some(b) if n == *b => near.push(d),
                        _ => {
                            best = Some(n);
                            near = alloc::vec![d];
                        }
                    }
                }
            }
        }
        for d in near {
            let y = x + &d;
            let (cell, _) = lattice.reduce(&y);
            let b = node_of[&cell];
            let coords = lattice.integer_coordinates(&(&y - &reps[b])).expect("lattice translate");
            let mut label = [0i64; 3];
            for (i, c) in coords.iter().enumerate() {
                label[i] = c.to_i64().expect("small label");
            }
            edges.push(PEdge { a, b, label });
        }
    }
    PeriodicGraph::new(lattice.basis().to_vec(), reps.to_vec(), edges).expect("well-formed reference")
}

pub fn reference_net(id: NetId) -> Option<PeriodicGraph> {
    let origin = Vec3::zero();
    Some(match id {
        NetId::Pcu => nearest_neighbor_net(&VertexSetSpec::lambda1(), &Lattice::cubic(), &[origin]),
        NetId::Fcu => nearest_neighbor_net(&VertexSetSpec::lambda2(), &Lattice::face_centered(), &[origin]),
        NetId::Bcu => nearest_neighbor_net(&VertexSetSpec::lambda3(), &Lattice::body_centered(), &[origin]),
        NetId::Dia => nearest_neighbor_net(
            &VertexSetSpec::w_set(),
            &Lattice::face_centered().scaled(2),
            &[origin, Vec3::from_ints(1, -1, 1)],
        ),
        NetId::Nbo => {
            let k5 = build_k_complex(KComplex::K5, &Region::centered(3)).ok()?;
            extract_net(&k5).ok()?
        }
        NetId::Unknown => return None,
    })
}

pub fn reference_nets() -> Vec<(NetId, PeriodicGraph)> {
    [NetId::Pcu, NetId::Fcu, NetId::Bcu, NetId::Dia, NetId::Nbo]
        .into_iter()
        .filter_map(|id| reference_net(id).map(|g| (id, g)))
        .collect()
}
