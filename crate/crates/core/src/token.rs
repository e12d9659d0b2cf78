//! k-token graphs: vertices are the k-subsets of the base graph's vertices,
//! and two subsets are adjacent when their symmetric difference is an edge
//! of the base graph.

use crate::error::{Error, Result};
use crate::graph::{
    named_family, validate_partition, EdgePartition, Edge, Family, Graph,
};
use std::collections::BTreeSet;

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of a sorted subset in colexicographic order.
pub fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1))
        .sum()
}

/// All k-subsets of `0..n`, sorted, in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // colex successor: bump the first element that can move up
        let mut i = 0;
        while i < k && (i + 1 < k && current[i] + 1 == current[i + 1] || i + 1 == k && current[i] + 1 == n) {
            i += 1;
        }
        if i == k {
            break;
        }
        current[i] += 1;
        for (j, c) in current.iter_mut().enumerate().take(i) {
            *c = j;
        }
    }
    out
}

/// A token graph together with the k-subset carried by each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenGraph {
    pub graph: Graph,
    pub base_order: usize,
    pub k: usize,
    /// `labels[v]` is the sorted k-subset of vertex `v`; vertices follow
    /// colexicographic order of their subsets.
    pub labels: Vec<Vec<usize>>,
}

impl TokenGraph {
    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != self.k || s.iter().any(|&x| x >= self.base_order) {
            return None;
        }
        Some(colex_rank(&s))
    }

    /// Labels rendered as `{i,j,...}`.
    pub fn label_strings(&self) -> Vec<String> {
        self.labels.iter().map(|l| label_string(l)).collect()
    }
}

pub fn label_string(subset: &[usize]) -> String {
    let inner: Vec<String> = subset.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Parses a `{i,j,...}` label back into a sorted subset.
pub fn parse_label(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::MalformedInput(format!("token label `{text}` is not braced")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::MalformedInput(format!("bad token label `{text}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Builds `F_k(g)`.
///
/// Panics if the resulting size disagrees with `C(n-2, k-1) * |E(g)|`.
pub fn token_graph(g: &Graph, k: usize) -> Result<TokenGraph> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "token count k = {k} must lie in 1..={n}"
        )));
    }
    let labels = colex_subsets(n, k);
    let mut edges = Vec::new();
    let mut member = vec![false; n];
    for (idx, subset) in labels.iter().enumerate() {
        subset.iter().for_each(|&x| member[x] = true);
        for (pos, &x) in subset.iter().enumerate() {
            for &y in g.neighbors(x) {
                if member[y] {
                    continue;
                }
                let mut moved = subset.clone();
                moved[pos] = y;
                moved.sort_unstable();
                let other = colex_rank(&moved);
                if idx < other {
                    edges.push((idx, other));
                }
            }
        }
        subset.iter().for_each(|&x| member[x] = false);
    }
    let graph = Graph::from_edges(labels.len(), edges)?;

    assert_eq!(graph.order(), binomial(n, k));
    if n >= 2 {
        assert_eq!(
            graph.size(),
            binomial(n - 2, k - 1) * g.size(),
            "token graph size identity violated"
        );
    }
    Ok(TokenGraph {
        graph,
        base_order: n,
        k,
        labels,
    })
}

/// Transfers an edge partition of `g` to `F_k(g)`: part `i` becomes the edge
/// set of `F_k` of the spanning subgraph `(V(g), E_i)`.
pub fn induced_partition(g: &Graph, k: usize, p: &EdgePartition) -> Result<EdgePartition> {
    if g.order() <= k {
        return Err(Error::Precondition(format!(
            "order {} must exceed k = {k}, otherwise induced parts may be empty",
            g.order()
        )));
    }
    let report = validate_partition(g, p)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not an edge partition of the base graph: {}",
            report.failures().join("; ")
        )));
    }
    let parts = p
        .parts
        .iter()
        .map(|part| {
            let sub = g.spanning_subgraph(part)?;
            let tg = token_graph(&sub, k)?;
            Ok(tg.graph.edges().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EdgePartition::new(parts))
}

/// Line graph of `K_n` with vertex `{x,y}` placed at the colex rank of the
/// pair, so it is directly comparable with `F_2(K_n)`.
fn line_graph_of_complete(n: usize) -> Result<Graph> {
    let kn = named_family(Family::Complete(n))?;
    let base_edges = kn.edges();
    let mut edges: Vec<Edge> = Vec::new();
    for (i, &(a, b)) in base_edges.iter().enumerate() {
        for &(c, d) in &base_edges[i + 1..] {
            let shared = [a == c, a == d, b == c, b == d]
                .iter()
                .filter(|&&s| s)
                .count();
            if shared == 1 {
                edges.push((colex_rank(&[a, b]), colex_rank(&[c, d])));
            }
        }
    }
    Graph::from_edges(binomial(n, 2), edges)
}

/// Checks that `F_2(K_n)` and `L(K_n)` have identical edge sets under the
/// identification of token `{x,y}` with base edge `xy`.
pub fn verify_line_graph_correspondence(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
    }
    let token = token_graph(&named_family(Family::Complete(n))?, 2)?;
    let line = line_graph_of_complete(n)?;
    let a: BTreeSet<Edge> = token.graph.edges().iter().copied().collect();
    let b: BTreeSet<Edge> = line.edges().iter().copied().collect();
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pairwise symmetric-difference enumeration over all k-subsets.
    fn brute_force_token_edges(g: &Graph, k: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
        let subsets = colex_subsets(g.order(), k);
        let mut out = BTreeSet::new();
        for x in &subsets {
            for y in &subsets {
                if x >= y {
                    continue;
                }
                let only_x: Vec<_> = x.iter().filter(|v| !y.contains(v)).copied().collect();
                let only_y: Vec<_> = y.iter().filter(|v| !x.contains(v)).copied().collect();
                if only_x.len() == 1 && g.has_edge(only_x[0], only_y[0]) {
                    out.insert((x.clone(), y.clone()));
                }
            }
        }
        out
    }

    fn labelled_edges(t: &TokenGraph) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
        t.graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (t.labels[u].clone(), t.labels[v].clone());
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(50, 25), 126_410_606_437_752);
    }

    #[test]
    fn colex_order_and_rank_agree() {
        for n in 0..8 {
            for k in 0..=n {
                let subsets = colex_subsets(n, k);
                assert_eq!(subsets.len(), binomial(n, k));
                for (i, s) in subsets.iter().enumerate() {
                    assert_eq!(colex_rank(s), i);
                }
                let mut sorted = subsets.clone();
                sorted.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
                assert_eq!(sorted, subsets);
            }
        }
        assert_eq!(colex_subsets(4, 2)[..3], [vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn path_six_two_tokens() {
        let p6 = named_family(Family::Path(6)).unwrap();
        let t = token_graph(&p6, 2).unwrap();
        assert_eq!(t.graph.order(), 15);
        assert_eq!(t.graph.size(), 20);
    }

    #[test]
    fn cycle_six_two_tokens() {
        let c6 = named_family(Family::Cycle(6)).unwrap();
        let t = token_graph(&c6, 2).unwrap();
        assert_eq!(t.graph.order(), 15);
        assert_eq!(t.graph.size(), 24);
    }

    #[test]
    fn octahedron_matches_brute_force() {
        let k4 = named_family(Family::Complete(4)).unwrap();
        let t = token_graph(&k4, 2).unwrap();
        assert_eq!(t.graph.order(), 6);
        assert_eq!(t.graph.size(), 12);
        assert_eq!(labelled_edges(&t), brute_force_token_edges(&k4, 2));
        assert!((0..6).all(|v| t.graph.degree(v) == 4));
    }

    #[test]
    fn one_token_is_the_base_graph() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 4), (0, 4), (3, 4)]).unwrap();
        let t = token_graph(&g, 1).unwrap();
        assert_eq!(t.graph, g);
        assert_eq!(t.labels[3], vec![3]);
    }

    #[test]
    fn k_out_of_range() {
        let g = named_family(Family::Path(3)).unwrap();
        assert!(matches!(token_graph(&g, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(token_graph(&g, 4), Err(Error::InvalidArgument(_))));
        let full = token_graph(&g, 3).unwrap();
        assert_eq!((full.graph.order(), full.graph.size()), (1, 0));
    }

    #[test]
    fn induced_partition_of_path_four() {
        let p4 = named_family(Family::Path(4)).unwrap();
        let p = EdgePartition::new(vec![vec![(0, 1), (2, 3)], vec![(1, 2)]]);
        let induced = induced_partition(&p4, 2, &p).unwrap();
        assert_eq!(induced.part_sizes(), vec![4, 2]);

        let t = token_graph(&p4, 2).unwrap();
        let idx = |s: &[usize]| t.index_of(s).unwrap();
        let mut expected = vec![
            crate::graph::normalize(idx(&[0, 1]), idx(&[0, 2])),
            crate::graph::normalize(idx(&[1, 3]), idx(&[2, 3])),
        ];
        expected.sort_unstable();
        assert_eq!(induced.parts[1], expected);
        assert!(validate_partition(&t.graph, &induced).unwrap().passed());
    }

    #[test]
    fn induced_partition_trivial_part() {
        let k3 = named_family(Family::Complete(3)).unwrap();
        let p = EdgePartition::new(vec![k3.edges().to_vec()]);
        let induced = induced_partition(&k3, 2, &p).unwrap();
        let t = token_graph(&k3, 2).unwrap();
        assert_eq!(induced.parts[0], t.graph.edges());
        assert_eq!(t.graph.size(), 3);
    }

    #[test]
    fn induced_partition_rejects_small_order_and_bad_partitions() {
        let k2 = named_family(Family::Complete(2)).unwrap();
        let p = EdgePartition::new(vec![vec![(0, 1)]]);
        assert!(matches!(induced_partition(&k2, 2, &p), Err(Error::Precondition(_))));

        let p4 = named_family(Family::Path(4)).unwrap();
        let partial = EdgePartition::new(vec![vec![(0, 1)]]);
        assert!(matches!(induced_partition(&p4, 2, &partial), Err(Error::Precondition(_))));
    }

    #[test]
    fn line_graph_correspondence() {
        for n in 2..=9 {
            assert!(verify_line_graph_correspondence(n).unwrap(), "n = {n}");
        }
        assert!(verify_line_graph_correspondence(1).is_err());
    }

    #[test]
    fn labels_round_trip() {
        assert_eq!(label_string(&[0, 3, 7]), "{0,3,7}");
        assert_eq!(parse_label("{7,0,3}").unwrap(), vec![0, 3, 7]);
        assert!(parse_label("0,3").is_err());
    }
}
