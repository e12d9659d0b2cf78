//! Hamiltonian path and cycle factorizations of complete and complete
//! bipartite graphs. Every construction is run through
//! [`verify_factorization`] before it is returned.

use crate::error::{Error, Result};
use crate::graph::{named_family, Edge, EdgePartition, Family, Graph, VertexSequence};
use crate::report::Report;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorizationKind {
    HamiltonianPaths,
    HamiltonianCycles,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub host: Graph,
    pub kind: FactorizationKind,
    pub members: Vec<VertexSequence>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member edge sets as an edge partition of the host.
    pub fn to_partition(&self) -> EdgePartition {
        EdgePartition::new(self.members.iter().map(VertexSequence::edges).collect())
    }

    fn verified(self) -> Result<Self> {
        let report = verify_factorization(&self);
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::Certification(format!(
                "constructed factorization failed verification: {}",
                report.failures.join("; ")
            )))
        }
    }
}

/// Zigzag ordering `0, 1, m-1, 2, m-2, ...` of `Z_m`.
fn zigzag(m: usize) -> Vec<usize> {
    (0..m)
        .map(|t| {
            if t == 0 {
                0
            } else if t % 2 == 1 {
                t.div_ceil(2)
            } else {
                m - t / 2
            }
        })
        .collect()
}

/// `n/2` Hamiltonian paths of `K_n`: the zigzag path and its translates by
/// `0..n/2`.
pub fn walecki_paths(n: usize) -> Result<Factorization> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "Hamiltonian path factorization of K_n needs even n >= 2, got {n}"
        )));
    }
    let base = zigzag(n);
    let members = (0..n / 2)
        .map(|i| VertexSequence::path(base.iter().map(|&v| (v + i) % n).collect()))
        .collect();
    Factorization {
        host: named_family(Family::Complete(n))?,
        kind: FactorizationKind::HamiltonianPaths,
        members,
    }
    .verified()
}

/// `(n-1)/2` Hamiltonian cycles of `K_n`: hub `n-1` followed by a translate
/// of the zigzag path on the ring `Z_{n-1}`.
pub fn walecki_cycles(n: usize) -> Result<Factorization> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "Hamiltonian cycle factorization of K_n needs odd n >= 3, got {n}"
        )));
    }
    let ring = n - 1;
    let hub = n - 1;
    let base = zigzag(ring);
    let members = (0..ring / 2)
        .map(|i| {
            let mut cycle = vec![hub];
            cycle.extend(base.iter().map(|&v| (v + i) % ring));
            VertexSequence::cycle(cycle)
        })
        .collect();
    Factorization {
        host: named_family(Family::Complete(n))?,
        kind: FactorizationKind::HamiltonianCycles,
        members,
    }
    .verified()
}

/// Cycle `j` walks `a_0, b_{2j}, a_{n-1}, b_{2j-1}, ...`, i.e. the union of
/// the matchings `a_i b_{i+2j}` and `a_i b_{i+2j+1}`.
fn bipartite_cycle_sequences(n: usize) -> Vec<Vec<usize>> {
    let b = |i: isize| n + i.rem_euclid(n as isize) as usize;
    (0..n / 2)
        .map(|j| {
            let mut seq = Vec::with_capacity(2 * n);
            for step in 0..n as isize {
                let a = (-step).rem_euclid(n as isize) as usize;
                seq.push(a);
                seq.push(b(a as isize + 2 * j as isize));
            }
            seq
        })
        .collect()
}

/// `n/2` Hamiltonian cycles of `K_{n,n}` (side A = `0..n`, side B = `n..2n`).
pub fn bipartite_cycles(n: usize) -> Result<Factorization> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "Hamiltonian cycle factorization of K_{{n,n}} needs even n >= 2, got {n}"
        )));
    }
    let members = bipartite_cycle_sequences(n)
        .into_iter()
        .map(VertexSequence::cycle)
        .collect();
    Factorization {
        host: named_family(Family::CompleteBipartite(n, n))?,
        kind: FactorizationKind::HamiltonianCycles,
        members,
    }
    .verified()
}

/// `n/2` Hamiltonian paths of `K_{n-1,n}`: the cycles of
/// [`bipartite_cycles`] with `a_0` removed, relabelled so that side A is
/// `0..n-1` and side B is `n-1..2n-1`.
pub fn bipartite_paths(n: usize) -> Result<Factorization> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "Hamiltonian path factorization of K_{{n-1,n}} needs even n >= 2, got {n}"
        )));
    }
    // every cycle starts at a_0, so dropping the head leaves a path
    let members = bipartite_cycle_sequences(n)
        .into_iter()
        .map(|seq| VertexSequence::path(seq[1..].iter().map(|&v| v - 1).collect()))
        .collect();
    Factorization {
        host: named_family(Family::CompleteBipartite(n - 1, n))?,
        kind: FactorizationKind::HamiltonianPaths,
        members,
    }
    .verified()
}

/// Checks Hamiltonicity, kind conformity, edge-disjointness and exact
/// coverage of the host's edges.
pub fn verify_factorization(f: &Factorization) -> Report {
    let mut report = Report::new();
    let host = &f.host;
    let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
    for (i, member) in f.members.iter().enumerate() {
        let want_closed = f.kind == FactorizationKind::HamiltonianCycles;
        report.check(member.closed == want_closed, || {
            format!("member {i} is {} but the factorization is {:?}", kind_word(member.closed), f.kind)
        });
        report.check(member.is_hamiltonian(host.order()), || {
            format!("member {i} does not visit each of the {} vertices exactly once", host.order())
        });
        if want_closed && member.vertices.len() < 3 {
            report.fail(format!("member {i} is too short to be a cycle"));
            continue;
        }
        for (u, v) in member.steps() {
            if u >= host.order() || v >= host.order() || !host.has_edge(u, v) {
                report.fail(format!("member {i} uses {{{u},{v}}}, which is not a host edge"));
                continue;
            }
            let e = crate::graph::normalize(u, v);
            if let Some(prev) = owner.insert(e, i) {
                report.fail(format!(
                    "edge {{{},{}}} is used by member {prev} and member {i}",
                    e.0, e.1
                ));
            }
        }
    }
    for &(u, v) in host.edges() {
        report.check(owner.contains_key(&(u, v)), || {
            format!("host edge {{{u},{v}}} is not covered")
        });
    }
    report
}

fn kind_word(closed: bool) -> &'static str {
    if closed {
        "closed"
    } else {
        "open"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member_vertices(f: &Factorization) -> Vec<Vec<usize>> {
        f.members.iter().map(|m| m.vertices.clone()).collect()
    }

    #[test]
    fn walecki_paths_small() {
        assert_eq!(member_vertices(&walecki_paths(2).unwrap()), vec![vec![0, 1]]);
        assert_eq!(
            member_vertices(&walecki_paths(4).unwrap()),
            vec![vec![0, 1, 3, 2], vec![1, 2, 0, 3]]
        );
        let f8 = walecki_paths(8).unwrap();
        assert_eq!(f8.len(), 4);
        assert!(f8.members.iter().all(|m| m.edges().len() == 7));
        assert!(verify_factorization(&walecki_paths(6).unwrap()).passed());
    }

    #[test]
    fn walecki_cycles_small() {
        assert_eq!(member_vertices(&walecki_cycles(3).unwrap()), vec![vec![2, 0, 1]]);
        assert_eq!(
            member_vertices(&walecki_cycles(5).unwrap()),
            vec![vec![4, 0, 1, 3, 2], vec![4, 1, 2, 0, 3]]
        );
        let f9 = walecki_cycles(9).unwrap();
        assert_eq!(f9.len(), 4);
        assert_eq!(f9.members.iter().map(|m| m.edges().len()).sum::<usize>(), 36);
    }

    #[test]
    fn bipartite_small() {
        assert_eq!(member_vertices(&bipartite_cycles(2).unwrap()), vec![vec![0, 2, 1, 3]]);
        let c4 = bipartite_cycles(4).unwrap();
        assert_eq!(c4.len(), 2);
        assert!(c4.members.iter().all(|m| m.edges().len() == 8));
        assert_eq!(bipartite_cycles(6).unwrap().len(), 3);

        let p2 = bipartite_paths(2).unwrap();
        assert_eq!(p2.host.order(), 3);
        assert_eq!(p2.members[0].edges().len(), 2);
        let p4 = bipartite_paths(4).unwrap();
        assert_eq!(p4.host, named_family(Family::CompleteBipartite(3, 4)).unwrap());
        assert!(p4.members.iter().all(|m| m.edges().len() == 6));
        let p6 = bipartite_paths(6).unwrap();
        assert_eq!(p6.members.iter().map(|m| m.edges().len()).sum::<usize>(), 30);
    }

    #[test]
    fn parity_errors() {
        assert!(matches!(walecki_paths(5), Err(Error::InvalidArgument(_))));
        assert!(matches!(walecki_paths(0), Err(Error::InvalidArgument(_))));
        assert!(matches!(walecki_cycles(6), Err(Error::InvalidArgument(_))));
        assert!(matches!(walecki_cycles(1), Err(Error::InvalidArgument(_))));
        assert!(matches!(bipartite_cycles(3), Err(Error::InvalidArgument(_))));
        assert!(matches!(bipartite_paths(5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn overlapping_members_are_reported() {
        let f = Factorization {
            host: named_family(Family::Complete(4)).unwrap(),
            kind: FactorizationKind::HamiltonianPaths,
            members: vec![
                VertexSequence::path(vec![0, 1, 2, 3]),
                VertexSequence::path(vec![0, 2, 1, 3]),
            ],
        };
        let r = verify_factorization(&f);
        assert!(!r.passed());
        assert!(r.failures.iter().any(|m| m.contains("{1,2}") && m.contains("member 0")));
        assert!(r.failures.iter().any(|m| m.contains("not covered")));
    }

    #[test]
    fn kind_and_hamiltonicity_checks() {
        let k3 = named_family(Family::Complete(3)).unwrap();
        let ok = Factorization {
            host: k3.clone(),
            kind: FactorizationKind::HamiltonianCycles,
            members: vec![VertexSequence::cycle(vec![0, 1, 2])],
        };
        assert!(verify_factorization(&ok).passed());

        let wrong_kind = Factorization {
            kind: FactorizationKind::HamiltonianPaths,
            ..ok.clone()
        };
        assert!(!verify_factorization(&wrong_kind).passed());

        let short = Factorization {
            members: vec![VertexSequence::cycle(vec![0, 1])],
            ..ok
        };
        assert!(!verify_factorization(&short).passed());
    }
}
