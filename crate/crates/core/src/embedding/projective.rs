//! Projective-plane embedding of `F_2(C_n)`.
//!
//! Token pairs `{i, j}` on the cycle `Z_n` are points `(i, j)` of the strip
//! `x < y < x + n` in the integer grid, modulo the glide reflection
//! `(x, y) -> (y, x + n)`. Token moves are the unit grid steps, so the
//! quotient is a grid on a Moebius band whose boundary runs along the
//! diagonal; capping that boundary with a disk gives the projective plane.
//! Each vertex is represented by `(i, j)` with `0 <= i < j < n`. Its
//! neighbours are listed counter-clockwise (east, north, west, south), and
//! the two steps that leave the representative triangle through the glide
//! carry sign `-1`.

use super::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::{named_family, Family};
use crate::token::{token_graph, TokenGraph};

/// The token graph `F_2(C_n)` together with a rotation system whose faces
/// are the grid squares plus one face of length `2n` along the boundary.
pub fn projective_embedding_f2_cycle(n: usize) -> Result<(TokenGraph, RotationSystem)> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "F_2(C_n) has girth at least 4 only for n >= 4, got {n}"
        )));
    }
    let tokens = token_graph(&named_family(Family::Cycle(n))?, 2)?;
    let idx = |a: usize, b: usize| tokens.index_of(&[a, b]).expect("distinct tokens");

    let mut orders = Vec::with_capacity(tokens.graph.order());
    let mut twisted = Vec::new();
    for label in &tokens.labels {
        let (i, j) = (label[0], label[1]);
        let me = idx(i, j);
        let mut order = Vec::with_capacity(4);
        // east: (i + 1, j)
        if i + 1 < j {
            order.push(idx(i + 1, j));
        }
        // north: (i, j + 1), wrapping to (0, i) through the glide
        if j + 1 < n {
            order.push(idx(i, j + 1));
        } else if i > 0 {
            order.push(idx(0, i));
            twisted.push(crate::graph::normalize(me, idx(0, i)));
        }
        // west: (i - 1, j), wrapping to (j, n - 1) through the glide
        if i > 0 {
            order.push(idx(i - 1, j));
        } else if j + 1 < n {
            order.push(idx(j, n - 1));
        }
        // south: (i, j - 1)
        if j - 1 > i {
            order.push(idx(i, j - 1));
        }
        orders.push(order);
    }
    let rotation = RotationSystem::from_neighbor_orders(tokens.graph.clone(), &orders, |u, v| {
        if twisted.contains(&(u, v)) {
            -1
        } else {
            1
        }
    })?;
    Ok((tokens, rotation))
}
