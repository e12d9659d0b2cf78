use super::Surface;
use crate::error::{Error, Result};
use crate::graph::{girth, Graph};
use crate::report::Report;
use serde::{Deserialize, Serialize};

/// Per-vertex cyclic orders of incident edges plus a sign per edge. A sign
/// of `-1` reverses the local orientation when a facial walk crosses the
/// edge; all-positive signs describe an orientable embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub host: Graph,
    /// `rotations[v]` lists edge indices of `host` in cyclic order.
    pub rotations: Vec<Vec<usize>>,
    pub signs: Vec<i8>,
}

impl RotationSystem {
    /// Builds a rotation from per-vertex neighbour orders. `sign(u, v)` is
    /// queried once per edge with `u < v`.
    pub fn from_neighbor_orders(
        host: Graph,
        orders: &[Vec<usize>],
        mut sign: impl FnMut(usize, usize) -> i8,
    ) -> Result<Self> {
        if orders.len() != host.order() {
            return Err(Error::Witness(format!(
                "{} vertex rotations for a graph of order {}",
                orders.len(),
                host.order()
            )));
        }
        let rotations = orders
            .iter()
            .enumerate()
            .map(|(v, order)| {
                order
                    .iter()
                    .map(|&w| {
                        host.edge_index(v, w).ok_or_else(|| {
                            Error::Witness(format!("rotation at {v} names non-edge {{{v},{w}}}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let signs = host.edges().iter().map(|&(u, v)| sign(u, v)).collect();
        let r = Self {
            host,
            rotations,
            signs,
        };
        r.validate()?;
        Ok(r)
    }

    /// All-positive rotation from neighbour orders.
    pub fn orientable(host: Graph, orders: &[Vec<usize>]) -> Result<Self> {
        Self::from_neighbor_orders(host, orders, |_, _| 1)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.host;
        if self.rotations.len() != g.order() {
            return Err(Error::Witness(format!(
                "{} vertex rotations for a graph of order {}",
                self.rotations.len(),
                g.order()
            )));
        }
        if self.signs.len() != g.size() {
            return Err(Error::Witness(format!(
                "{} signs for {} edges",
                self.signs.len(),
                g.size()
            )));
        }
        if let Some(e) = self.signs.iter().position(|&s| s != 1 && s != -1) {
            return Err(Error::Witness(format!("edge {e} has sign {}", self.signs[e])));
        }
        for (v, rot) in self.rotations.iter().enumerate() {
            let mut seen: Vec<usize> = rot.clone();
            seen.sort_unstable();
            let mut expected: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| g.edge_index(v, w).expect("adjacency is consistent"))
                .collect();
            expected.sort_unstable();
            if seen != expected {
                return Err(Error::Witness(format!(
                    "rotation at vertex {v} is {rot:?}, expected each of {expected:?} exactly once"
                )));
            }
        }
        Ok(())
    }

    fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.host.edges()[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbour vertices of `v` in rotation order.
    pub fn neighbor_order(&self, v: usize) -> Vec<usize> {
        self.rotations[v]
            .iter()
            .map(|&e| self.other_end(e, v))
            .collect()
    }

    pub fn to_record(&self) -> (Vec<Vec<usize>>, Vec<i8>) {
        (self.rotations.clone(), self.signs.clone())
    }
}

/// A rotation system with its traced faces and Euler genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub rotation: RotationSystem,
    /// Facial walks as vertex sequences; walk `[v0, .., vk]` uses the edges
    /// `v0v1, .., vkv0`.
    pub faces: Vec<Vec<usize>>,
    pub euler_genus: usize,
    /// Shortest facial walk, `None` for edgeless hosts.
    pub face_girth: Option<usize>,
}

/// Serialized form of a witness; the host graph travels separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub rotation: Vec<Vec<usize>>,
    pub signs: Vec<i8>,
    pub faces: Vec<Vec<usize>>,
    pub euler_genus: usize,
    pub face_girth: Option<usize>,
}

impl EmbeddingWitness {
    pub fn to_record(&self) -> WitnessRecord {
        WitnessRecord {
            rotation: self.rotation.rotations.clone(),
            signs: self.rotation.signs.clone(),
            faces: self.faces.clone(),
            euler_genus: self.euler_genus,
            face_girth: self.face_girth,
        }
    }

    /// Rebuilds a witness from its record without re-tracing; callers
    /// decide whether to trust or re-check the stored faces.
    pub fn from_record(host: Graph, record: &WitnessRecord) -> Result<Self> {
        let rotation = RotationSystem {
            host,
            rotations: record.rotation.clone(),
            signs: record.signs.clone(),
        };
        rotation.validate()?;
        Ok(Self {
            rotation,
            faces: record.faces.clone(),
            euler_genus: record.euler_genus,
            face_girth: record.face_girth,
        })
    }
}

/// Face tracing on a signed rotation system.
///
/// A walk state is (vertex, rotation slot, local orientation). Leaving `v`
/// along edge `e` multiplies the orientation by the sign of `e`; at the far
/// end the next edge is the rotation successor of `e` (orientation `+1`) or
/// its predecessor (orientation `-1`). Each face is found together with its
/// reverse walk, and only one of the two is reported.
pub fn trace_faces(r: &RotationSystem) -> Result<EmbeddingWitness> {
    r.validate()?;
    let g = &r.host;
    let n = g.order();

    // slot[e] = position of e in the rotations of its two endpoints
    let mut slot = vec![[usize::MAX; 2]; g.size()];
    for (v, rot) in r.rotations.iter().enumerate() {
        for (p, &e) in rot.iter().enumerate() {
            let side = usize::from(g.edges()[e].0 != v);
            slot[e][side] = p;
        }
    }
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + r.rotations[v].len();
    }
    let state = |v: usize, p: usize, ori: i8| 2 * (offset[v] + p) + usize::from(ori < 0);
    let mut used = vec![false; 2 * offset[n]];

    let mut faces = Vec::new();
    for start_ori in [1i8, -1] {
        for v0 in 0..n {
            for p0 in 0..r.rotations[v0].len() {
                if used[state(v0, p0, start_ori)] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut v, mut p, mut ori) = (v0, p0, start_ori);
                loop {
                    let s = state(v, p, ori);
                    if used[s] {
                        return Err(Error::Witness(format!(
                            "facial walk from vertex {v0} re-entered a used state at vertex {v}"
                        )));
                    }
                    used[s] = true;
                    walk.push(v);
                    let e = r.rotations[v][p];
                    let w = r.other_end(e, v);
                    ori *= r.signs[e];
                    let q = slot[e][usize::from(g.edges()[e].0 != w)];
                    let rev = state(w, q, -ori);
                    if used[rev] {
                        return Err(Error::Witness(format!(
                            "edge side {{{v},{w}}} is traversed twice"
                        )));
                    }
                    used[rev] = true;
                    let deg = r.rotations[w].len();
                    p = if ori > 0 { (q + 1) % deg } else { (q + deg - 1) % deg };
                    v = w;
                    if (v, p, ori) == (v0, p0, start_ori) {
                        break;
                    }
                }
                faces.push(walk);
            }
        }
    }

    let total: usize = faces.iter().map(Vec::len).sum();
    if total != 2 * g.size() {
        return Err(Error::Witness(format!(
            "facial walks have total length {total}, expected {}",
            2 * g.size()
        )));
    }
    let mut uses = vec![0usize; g.size()];
    for f in &faces {
        for (i, &a) in f.iter().enumerate() {
            let b = f[(i + 1) % f.len()];
            let e = g
                .edge_index(a, b)
                .ok_or_else(|| Error::Witness(format!("facial walk steps along non-edge {{{a},{b}}}")))?;
            uses[e] += 1;
        }
    }
    if let Some(e) = uses.iter().position(|&u| u != 2) {
        return Err(Error::Witness(format!(
            "edge {e} appears {} times across facial walks",
            uses[e]
        )));
    }

    let (_, components) = g.components();
    let isolated = (0..n).filter(|&v| g.degree(v) == 0).count();
    let face_count = faces.len() + isolated;
    let chi_total = 2 * components as i64 - n as i64 + g.size() as i64 - face_count as i64;
    if chi_total < 0 {
        return Err(Error::Witness(format!("negative Euler genus {chi_total}")));
    }
    let face_girth = faces.iter().map(Vec::len).min();
    Ok(EmbeddingWitness {
        rotation: r.clone(),
        faces,
        euler_genus: chi_total as usize,
        face_girth,
    })
}

/// Re-traces the witness and checks it against the surface and girth bound.
pub fn verify_witness(w: &EmbeddingWitness, surface: Surface, min_girth: usize) -> Report {
    let mut report = Report::new();
    match trace_faces(&w.rotation) {
        Err(e) => report.fail(format!("rotation does not trace: {e}")),
        Ok(traced) => {
            report.check(traced.faces == w.faces, || {
                format!(
                    "stored faces ({}) differ from re-traced faces ({})",
                    w.faces.len(),
                    traced.faces.len()
                )
            });
            report.check(traced.euler_genus == w.euler_genus, || {
                format!(
                    "stored Euler genus {} but re-traced {}",
                    w.euler_genus, traced.euler_genus
                )
            });
            report.check(traced.face_girth == w.face_girth, || {
                format!(
                    "stored face girth {:?} but re-traced {:?}",
                    w.face_girth, traced.face_girth
                )
            });
            report.check(traced.euler_genus <= surface.max_euler_genus(), || {
                format!(
                    "Euler genus {} exceeds {} allowed on the {surface} surface",
                    traced.euler_genus,
                    surface.max_euler_genus()
                )
            });
        }
    }
    let gi = girth(&w.rotation.host);
    report.check(gi.at_least(min_girth), || {
        format!("girth {gi} is below {min_girth}")
    });
    report
}
