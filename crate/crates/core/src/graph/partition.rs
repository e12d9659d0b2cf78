use super::{normalize, Edge, Graph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Ordered list of edge sets meant to partition a host graph's edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    pub parts: Vec<Vec<Edge>>,
}

impl EdgePartition {
    /// Normalizes every edge to `(min, max)` and sorts each part.
    pub fn new(parts: Vec<Vec<Edge>>) -> Self {
        let parts = parts
            .into_iter()
            .map(|p| {
                let mut p: Vec<_> = p.into_iter().map(|(u, v)| normalize(u, v)).collect();
                p.sort_unstable();
                p
            })
            .collect();
        Self { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

/// Result of checking an [`EdgePartition`] against its host.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartitionReport {
    /// Edges listed in more than one part, with the part indices.
    pub overlaps: Vec<(Edge, Vec<usize>)>,
    /// Host edges that no part covers.
    pub uncovered: Vec<Edge>,
    /// Listed pairs that are not edges of the host.
    pub foreign: Vec<(Edge, usize)>,
    pub empty_parts: Vec<usize>,
}

impl PartitionReport {
    pub fn disjoint(&self) -> bool {
        self.overlaps.is_empty()
    }

    pub fn covers(&self) -> bool {
        self.uncovered.is_empty() && self.foreign.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.disjoint() && self.covers() && self.empty_parts.is_empty()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for ((u, v), parts) in &self.overlaps {
            out.push(format!("edge {{{u},{v}}} appears in parts {parts:?}"));
        }
        for (u, v) in &self.uncovered {
            out.push(format!("edge {{{u},{v}}} is not covered"));
        }
        for ((u, v), p) in &self.foreign {
            out.push(format!("part {p} lists {{{u},{v}}}, which is not a host edge"));
        }
        for p in &self.empty_parts {
            out.push(format!("part {p} is empty"));
        }
        out
    }
}

/// Checks disjointness, coverage and per-part non-emptiness of `p` over `g`.
pub fn validate_partition(g: &Graph, p: &EdgePartition) -> Result<PartitionReport> {
    let mut seen: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    let mut report = PartitionReport::default();
    for (i, part) in p.parts.iter().enumerate() {
        if part.is_empty() {
            report.empty_parts.push(i);
        }
        for &(u, v) in part {
            if u >= g.order() || v >= g.order() {
                return Err(Error::MalformedInput(format!(
                    "part {i} references vertex {} but the host has order {}",
                    u.max(v),
                    g.order()
                )));
            }
            let e = normalize(u, v);
            if g.has_edge(e.0, e.1) {
                seen.entry(e).or_default().push(i);
            } else {
                report.foreign.push((e, i));
            }
        }
    }
    for &e in g.edges() {
        match seen.get(&e) {
            None => report.uncovered.push(e),
            Some(parts) if parts.len() > 1 => report.overlaps.push((e, parts.clone())),
            Some(_) => {}
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, Family};

    fn k3() -> Graph {
        named_family(Family::Complete(3)).unwrap()
    }

    #[test]
    fn exhaustive_two_part_split_passes() {
        let p = EdgePartition::new(vec![vec![(0, 1)], vec![(1, 2), (0, 2)]]);
        let r = validate_partition(&k3(), &p).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn overlap_is_reported() {
        let p = EdgePartition::new(vec![vec![(0, 1)], vec![(0, 1), (1, 2), (0, 2)]]);
        let r = validate_partition(&k3(), &p).unwrap();
        assert!(!r.passed());
        assert!(!r.disjoint());
        assert!(r.covers());
        assert_eq!(r.overlaps, vec![((0, 1), vec![0, 1])]);
    }

    #[test]
    fn missing_coverage_is_reported() {
        let p = EdgePartition::new(vec![vec![(0, 1)]]);
        let r = validate_partition(&k3(), &p).unwrap();
        assert!(!r.passed());
        assert!(r.disjoint());
        assert_eq!(r.uncovered, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn empty_part_fails() {
        let p = EdgePartition::new(vec![vec![(0, 1), (1, 2), (0, 2)], vec![]]);
        let r = validate_partition(&k3(), &p).unwrap();
        assert_eq!(r.empty_parts, vec![1]);
        assert!(!r.passed());
    }

    #[test]
    fn out_of_range_vertex_is_an_error() {
        let p = EdgePartition::new(vec![vec![(0, 7)]]);
        assert!(matches!(
            validate_partition(&k3(), &p),
            Err(Error::MalformedInput(_))
        ));
    }
}
