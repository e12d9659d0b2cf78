use super::lower_bound_girth4;
use crate::embedding::{verify_witness, EmbeddingWitness, Surface, WitnessRecord};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, to_dot, validate_partition, write_graph6, EdgePartition, Graph};
use crate::report::Report;
use crate::token::parse_label;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A self-contained claim that `host` splits into `claimed_value` parts,
/// each embeddable on `surface` with girth at least `min_girth`.
///
/// Witnesses are kept in serialized form; [`verify_certificate`] rebuilds
/// and re-traces them from the raw partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub host: Graph,
    pub token_labels: Option<Vec<String>>,
    pub surface: Surface,
    pub min_girth: usize,
    pub parts: EdgePartition,
    pub witnesses: Vec<WitnessRecord>,
    pub claimed_value: usize,
    pub lower_bound: usize,
}

/// JSON schema of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub host_graph6: String,
    pub token_labels: Option<Vec<String>>,
    pub surface: Surface,
    pub min_girth: usize,
    pub parts: Vec<Vec<[usize; 2]>>,
    pub witnesses: Vec<WitnessRecord>,
    pub claimed_value: usize,
    pub lower_bound: usize,
}

impl DecompositionCertificate {
    pub fn is_tight(&self) -> bool {
        self.lower_bound == self.claimed_value
    }

    /// Spanning subgraph of the host carried by part `i`. Edges outside the
    /// host are kept so that verification can report them.
    pub fn part_graph(&self, i: usize) -> Result<Graph> {
        Graph::from_edges(self.host.order(), self.parts.parts[i].iter().copied())
    }

    pub fn witness(&self, i: usize) -> Result<EmbeddingWitness> {
        let record = self
            .witnesses
            .get(i)
            .ok_or_else(|| Error::Witness(format!("no witness for part {i}")))?;
        EmbeddingWitness::from_record(self.part_graph(i)?, record)
    }

    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            host_graph6: write_graph6(&self.host),
            token_labels: self.token_labels.clone(),
            surface: self.surface,
            min_girth: self.min_girth,
            parts: self
                .parts
                .parts
                .iter()
                .map(|p| p.iter().map(|&(u, v)| [u, v]).collect())
                .collect(),
            witnesses: self.witnesses.clone(),
            claimed_value: self.claimed_value,
            lower_bound: self.lower_bound,
        }
    }

    pub fn from_record(record: &CertificateRecord) -> Result<Self> {
        Ok(Self {
            host: parse_graph6(&record.host_graph6)?,
            token_labels: record.token_labels.clone(),
            surface: record.surface,
            min_girth: record.min_girth,
            parts: EdgePartition {
                parts: record
                    .parts
                    .iter()
                    .map(|p| p.iter().map(|&[u, v]| (u, v)).collect())
                    .collect(),
            },
            witnesses: record.witnesses.clone(),
            claimed_value: record.claimed_value,
            lower_bound: record.lower_bound,
        })
    }

    /// Pretty-printed JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self.to_record()).expect("certificate serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let record: CertificateRecord = serde_json::from_str(text)
            .map_err(|e| Error::MalformedInput(format!("certificate JSON: {e}")))?;
        Self::from_record(&record)
    }

    /// One DOT graph per part, labelled with token labels when present.
    pub fn parts_to_dot(&self) -> String {
        let mut out = String::new();
        for i in 0..self.parts.len() {
            match self.part_graph(i) {
                Ok(g) => out.push_str(&to_dot(&g, &format!("part{i}"), self.token_labels.as_deref())),
                Err(e) => out.push_str(&format!("// part {i}: {e}\n")),
            }
        }
        out
    }
}

/// Re-derives every claim of a certificate from its raw data: the
/// partition, each part's re-traced embedding and girth, the lower bound and
/// the token labelling.
pub fn verify_certificate(c: &DecompositionCertificate) -> Report {
    let mut report = Report::new();
    let host = &c.host;

    report.check(c.claimed_value == c.parts.len(), || {
        format!(
            "claimed value {} but the partition has {} parts",
            c.claimed_value,
            c.parts.len()
        )
    });
    match validate_partition(host, &c.parts) {
        Ok(p) => {
            for f in p.failures() {
                report.fail(f);
            }
        }
        Err(e) => report.fail(format!("partition: {e}")),
    }
    report.check(c.witnesses.len() == c.parts.len(), || {
        format!("{} witnesses for {} parts", c.witnesses.len(), c.parts.len())
    });
    for i in 0..c.parts.len().min(c.witnesses.len()) {
        match c.witness(i) {
            Ok(w) => report.extend(&format!("part {i}"), verify_witness(&w, c.surface, c.min_girth)),
            Err(e) => report.fail(format!("part {i}: {e}")),
        }
    }

    let bound = lower_bound_girth4(host, c.surface);
    report.check(bound == c.lower_bound, || {
        format!("stored lower bound {} but recomputed {bound}", c.lower_bound)
    });
    report.check(c.lower_bound <= c.claimed_value, || {
        format!(
            "lower bound {} exceeds claimed value {}",
            c.lower_bound, c.claimed_value
        )
    });

    if let Some(labels) = &c.token_labels {
        check_token_labels(host, labels, &mut report);
    }
    report
}

/// Labels must be distinct equal-size subsets, and every host edge must join
/// two subsets whose symmetric difference has exactly two elements.
fn check_token_labels(host: &Graph, labels: &[String], report: &mut Report) {
    if labels.len() != host.order() {
        report.fail(format!(
            "{} token labels for {} vertices",
            labels.len(),
            host.order()
        ));
        return;
    }
    let parsed: Vec<Vec<usize>> = match labels.iter().map(|l| parse_label(l)).collect() {
        Ok(p) => p,
        Err(e) => {
            report.fail(format!("token labels: {e}"));
            return;
        }
    };
    let distinct: BTreeSet<&Vec<usize>> = parsed.iter().collect();
    report.check(distinct.len() == parsed.len(), || "token labels repeat".into());
    if let Some(first) = parsed.first() {
        report.check(parsed.iter().all(|p| p.len() == first.len()), || {
            "token labels differ in size".into()
        });
    }
    for &(u, v) in host.edges() {
        let a: BTreeSet<_> = parsed[u].iter().collect();
        let b: BTreeSet<_> = parsed[v].iter().collect();
        let diff = a.symmetric_difference(&b).count();
        report.check(diff == 2, || {
            format!(
                "host edge {{{u},{v}}} joins {} and {}, not a single token move",
                labels[u], labels[v]
            )
        });
    }
}

/// Builds a certificate from parts and their witnesses.
pub(crate) fn assemble(
    host: Graph,
    token_labels: Option<Vec<String>>,
    surface: Surface,
    min_girth: usize,
    parts: EdgePartition,
    witnesses: &[EmbeddingWitness],
) -> DecompositionCertificate {
    let lower_bound = lower_bound_girth4(&host, surface);
    DecompositionCertificate {
        claimed_value: parts.len(),
        witnesses: witnesses.iter().map(EmbeddingWitness::to_record).collect(),
        host,
        token_labels,
        surface,
        min_girth,
        parts,
        lower_bound,
    }
}

