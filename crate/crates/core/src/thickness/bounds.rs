use crate::embedding::{max_edges_girth4, Surface};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn ceil_div(num: u128, den: u128) -> u128 {
    num.div_ceil(den)
}

/// `ceil(|E| / max_edges_girth4(order, surface))`; zero for edgeless graphs.
pub fn lower_bound_girth4(g: &Graph, surface: Surface) -> usize {
    if g.size() == 0 {
        return 0;
    }
    let cap = max_edges_girth4(g.order(), surface);
    g.size().div_ceil(cap)
}

/// The lower-bound ceiling for `F_2(G)` when `G` has order `n` and is
/// factored into `k` Hamiltonian paths (plane) or cycles (projective plane),
/// written as `k` minus a correction term:
///
/// * plane: `ceil(k - (2nk - 6k) / (n^2 - n - 4))`
/// * projective plane: `ceil(k - (nk - 2k) / (n^2 - n - 2))`
///
/// evaluated exactly over the common denominator.
pub fn theorem_bound_arithmetic(n: usize, k: usize, surface: Surface) -> Result<usize> {
    if n < 4 || k < 1 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 4 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    let (n, k) = (n as u128, k as u128);
    let (den, correction) = match surface {
        Surface::Plane => (n * n - n - 4, 2 * n * k - 6 * k),
        Surface::ProjectivePlane => (n * n - n - 2, n * k - 2 * k),
    };
    Ok(ceil_div(k * den - correction, den) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, Family};
    use crate::token::{binomial, token_graph};

    #[test]
    fn token_graph_bounds() {
        let f2k6 = token_graph(&named_family(Family::Complete(6)).unwrap(), 2).unwrap();
        assert_eq!((f2k6.graph.order(), f2k6.graph.size()), (15, 60));
        assert_eq!(lower_bound_girth4(&f2k6.graph, Surface::Plane), 3);
        let f2k5 = token_graph(&named_family(Family::Complete(5)).unwrap(), 2).unwrap();
        assert_eq!(lower_bound_girth4(&f2k5.graph, Surface::ProjectivePlane), 2);
        let k2 = named_family(Family::Complete(2)).unwrap();
        assert_eq!(lower_bound_girth4(&k2, Surface::Plane), 1);
        assert_eq!(lower_bound_girth4(&Graph::empty(5), Surface::Plane), 0);
    }

    #[test]
    fn ceiling_instances() {
        assert_eq!(theorem_bound_arithmetic(6, 3, Surface::Plane).unwrap(), 3);
        assert_eq!(theorem_bound_arithmetic(5, 2, Surface::ProjectivePlane).unwrap(), 2);
        assert_eq!(theorem_bound_arithmetic(50, 25, Surface::Plane).unwrap(), 25);
        assert!(theorem_bound_arithmetic(3, 1, Surface::Plane).is_err());
        assert!(theorem_bound_arithmetic(6, 0, Surface::Plane).is_err());
    }

    /// The correction form agrees with the direct size/bound ratio
    /// `ceil(C(n-2,1) * |E| / cap)` where `|E| = k(n-1)` or `kn`.
    #[test]
    fn correction_form_matches_direct_ratio() {
        for n in 4..=60usize {
            for k in 1..=n {
                let direct_plane =
                    ((n - 2) * (n - 1) * k).div_ceil(2 * (binomial(n, 2) - 2));
                assert_eq!(theorem_bound_arithmetic(n, k, Surface::Plane).unwrap(), direct_plane);
                let direct_proj = ((n - 2) * n * k).div_ceil(2 * binomial(n, 2) - 2);
                assert_eq!(
                    theorem_bound_arithmetic(n, k, Surface::ProjectivePlane).unwrap(),
                    direct_proj
                );
            }
        }
    }
}
