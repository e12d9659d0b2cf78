use super::Graph;
use std::collections::VecDeque;
use std::fmt;

/// Length of a shortest cycle. `Infinite` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        self >= Girth::Finite(g)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Shortest cycle length by a breadth-first search from every vertex.
///
/// A non-tree edge `uw` met during the search rooted at `r` closes a closed
/// walk of length `dist(u) + dist(w) + 1` through `r`; the minimum over all
/// roots is exactly the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, Family};

    #[test]
    fn small_families() {
        assert_eq!(girth(&named_family(Family::Complete(4)).unwrap()), Girth::Finite(3));
        assert_eq!(girth(&named_family(Family::Cycle(5)).unwrap()), Girth::Finite(5));
        assert_eq!(girth(&named_family(Family::Path(4)).unwrap()), Girth::Infinite);
        assert_eq!(
            girth(&named_family(Family::CompleteBipartite(3, 3)).unwrap()),
            Girth::Finite(4)
        );
    }

    #[test]
    fn cycle_girth_equals_order() {
        for n in 3..40 {
            assert_eq!(girth(&named_family(Family::Cycle(n)).unwrap()), Girth::Finite(n));
        }
    }

    #[test]
    fn disjoint_union_takes_minimum() {
        // C_5 on 0..5 and C_4 on 5..9
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..4).map(|i| (5 + i, 5 + (i + 1) % 4)));
        let g = Graph::from_edges(9, edges).unwrap();
        assert_eq!(girth(&g), Girth::Finite(4));
    }

    #[test]
    fn infinity_orders_last() {
        assert!(Girth::Infinite > Girth::Finite(usize::MAX));
        assert!(Girth::Infinite.at_least(4));
        assert!(!Girth::Finite(3).at_least(4));
    }
}
