//! Rotation systems, face tracing and Euler genus, a planarity test that
//! emits a rotation-system witness, and the explicit projective-plane
//! embedding of the 2-token graph of a cycle.

mod planarity;
mod projective;
mod rotation;
mod search;

pub use planarity::{biconnected_components, planarity_test, Planarity};
pub use projective::projective_embedding_f2_cycle;
pub use rotation::{trace_faces, verify_witness, EmbeddingWitness, RotationSystem, WitnessRecord};
pub use search::{rotation_space_size, search_embedding};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Target surface of an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Surface {
    Plane,
    #[serde(rename = "projective")]
    ProjectivePlane,
}

impl Surface {
    pub fn max_euler_genus(self) -> usize {
        match self {
            Surface::Plane => 0,
            Surface::ProjectivePlane => 1,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Surface::Plane => "plane",
            Surface::ProjectivePlane => "projective",
        })
    }
}

impl FromStr for Surface {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "plane" | "planar" => Ok(Surface::Plane),
            "projective" | "projective-plane" => Ok(Surface::ProjectivePlane),
            _ => Err(crate::Error::InvalidArgument(format!("unknown surface `{s}`"))),
        }
    }
}

/// Largest size of a girth-4 graph of the given order embeddable on the
/// surface.
pub fn max_edges_girth4(order: usize, surface: Surface) -> usize {
    match surface {
        Surface::Plane if order >= 4 => 2 * (order - 2),
        Surface::Plane => order.saturating_sub(1),
        Surface::ProjectivePlane => (2 * order).saturating_sub(2),
    }
}
