//! Command-line front end. Exit status: 0 success, 1 verification failure,
//! 2 usage or input error.

use crate::embedding::{planarity_test, projective_embedding_f2_cycle, trace_faces, Surface};
use crate::error::Error;
use crate::factorization::{
    bipartite_cycles, bipartite_paths, walecki_cycles, walecki_paths, Factorization,
    FactorizationKind,
};
use crate::graph::{named_family, parse_graph6, to_dot, write_graph6, Family, Graph, VertexSequence};
use crate::thickness::{
    brute_force_theta4_with_limit, decompose_token, lower_bound_girth4, theorem_bound_arithmetic,
    theta4_line_complete, thetas_line_complete, verify_certificate, DecompositionCertificate,
    SearchOutcome, DEFAULT_EDGE_LIMIT,
};
use crate::token::token_graph;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "token-thickness", version, about = "Token graphs and certified girth-4 thickness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the k-token graph of a graph.
    Token {
        #[command(flatten)]
        source: Source,
        #[arg(short, long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hamiltonian factorization of complete:N or complete-bipartite:A,B.
    Factorize {
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certified decomposition of the 2-token graph of a family member.
    Decompose {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "plane")]
        surface: String,
        /// Write the certificate here (defaults to --out, then stdout).
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Girth-4 lower bound of a graph, or the closed-form ceiling for (N, K).
    Bound {
        #[command(flatten)]
        source: OptionalSource,
        #[arg(long, default_value = "plane")]
        surface: String,
        /// Evaluate the closed-form ceiling for `N,K` instead of a graph.
        #[arg(long, value_name = "N,K", conflicts_with_all = ["graph6", "file", "family"])]
        formula: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact girth-4 thickness by exhaustive search (small graphs only).
    Oracle {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "plane")]
        surface: String,
        #[arg(long, default_value_t = 4)]
        max_parts: usize,
        #[arg(long, default_value_t = DEFAULT_EDGE_LIMIT)]
        edge_limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Embedding witness: planarity witness of a graph, or the projective
    /// embedding of F_2(C_N).
    Embed {
        #[command(flatten)]
        source: OptionalSource,
        #[arg(long, value_name = "N", conflicts_with_all = ["graph6", "file", "family"])]
        f2_cycle: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph as a graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// File holding a graph6 string.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Named family: complete:N, path:N, cycle:N, complete-bipartite:A,B, line-complete:N.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalSource {
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Labelled {
    graph: Graph,
    labels: Option<Vec<String>>,
}

fn resolve(graph6: &Option<String>, file: &Option<PathBuf>, family: &Option<String>) -> Result<Labelled, Failure> {
    if let Some(text) = graph6 {
        return Ok(Labelled {
            graph: parse_graph6(text)?,
            labels: None,
        });
    }
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        return Ok(Labelled {
            graph: parse_graph6(text.trim())?,
            labels: None,
        });
    }
    let spec = family
        .as_deref()
        .ok_or_else(|| Failure::Usage("a graph source is required".into()))?;
    if let Some(n) = spec.strip_prefix("line-complete:") {
        let n: usize = n
            .parse()
            .map_err(|_| Failure::Usage(format!("bad family parameter in `{spec}`")))?;
        let t = token_graph(&named_family(Family::Complete(n))?, 2)?;
        return Ok(Labelled {
            labels: Some(t.label_strings()),
            graph: t.graph,
        });
    }
    Ok(Labelled {
        graph: named_family(spec.parse()?)?,
        labels: None,
    })
}

fn graph_json(g: &Graph, labels: Option<&[String]>) -> serde_json::Value {
    json!({
        "graph6": write_graph6(g),
        "order": g.order(),
        "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        "labels": labels,
    })
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
    }
}

fn factorization_for(family: Family) -> Result<Factorization, Failure> {
    Ok(match family {
        Family::Complete(n) if n % 2 == 0 => walecki_paths(n)?,
        Family::Complete(n) => walecki_cycles(n)?,
        Family::CompleteBipartite(a, b) if a == b => bipartite_cycles(a)?,
        Family::CompleteBipartite(a, b) if b == a + 1 => bipartite_paths(b)?,
        Family::Path(n) => Factorization {
            host: named_family(family)?,
            kind: FactorizationKind::HamiltonianPaths,
            members: vec![VertexSequence::path((0..n).collect())],
        },
        Family::Cycle(n) => Factorization {
            host: named_family(family)?,
            kind: FactorizationKind::HamiltonianCycles,
            members: vec![VertexSequence::cycle((0..n).collect())],
        },
        other => {
            return Err(Failure::Usage(format!(
                "no Hamiltonian factorization is available for {other}"
            )))
        }
    })
}

fn factorization_json(f: &Factorization) -> serde_json::Value {
    json!({
        "host_graph6": write_graph6(&f.host),
        "kind": f.kind,
        "members": f.members.iter().map(|m| &m.vertices).collect::<Vec<_>>(),
    })
}

fn decompose(family: &str, surface: Surface) -> Result<DecompositionCertificate, Failure> {
    let line_complete = family
        .strip_prefix("line-complete:")
        .map(|n| {
            n.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad family parameter in `{family}`")))
        })
        .transpose()?;
    let parsed = match line_complete {
        Some(n) => Family::Complete(n),
        None => family.parse()?,
    };
    if let Family::Complete(n) = parsed {
        return Ok(match surface {
            Surface::Plane => theta4_line_complete(n)?,
            Surface::ProjectivePlane => thetas_line_complete(n)?,
        });
    }
    let f = factorization_for(parsed)?;
    Ok(decompose_token(&f.host.clone(), &f, surface)?)
}

fn run_command(command: Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Token {
            source,
            k,
            format,
            out,
        } => {
            let base = resolve(&source.graph6, &source.file, &source.family)?;
            let t = token_graph(&base.graph, k)?;
            let labels = t.label_strings();
            let text = match format {
                Format::G6 => format!("{}\n", write_graph6(&t.graph)),
                Format::Dot => to_dot(&t.graph, "token", Some(&labels)),
                Format::Json => pretty(&graph_json(&t.graph, Some(&labels))),
            };
            emit(&out, &text, stdout)
        }
        Command::Factorize { family, out } => {
            let f = factorization_for(family.parse()?)?;
            emit(&out, &pretty(&factorization_json(&f)), stdout)
        }
        Command::Decompose {
            family,
            surface,
            cert,
            format,
            out,
        } => {
            let c = decompose(&family, surface.parse()?)?;
            let text = match format {
                Format::Json => c.to_json(),
                Format::Dot => c.parts_to_dot(),
                Format::G6 => format!("{}\n", write_graph6(&c.host)),
            };
            if let Some(path) = &cert {
                if format != Format::Json {
                    emit(&Some(path.clone()), &c.to_json(), stdout)?;
                    return emit(&out, &text, stdout);
                }
                return emit(&Some(path.clone()), &text, stdout);
            }
            emit(&out, &text, stdout)
        }
        Command::Bound {
            source,
            surface,
            formula,
            out,
        } => {
            let surface: Surface = surface.parse()?;
            let value = if let Some(spec) = formula {
                let (n, k) = spec
                    .split_once(',')
                    .and_then(|(n, k)| Some((n.trim().parse().ok()?, k.trim().parse().ok()?)))
                    .ok_or_else(|| Failure::Usage(format!("--formula expects N,K, got `{spec}`")))?;
                theorem_bound_arithmetic(n, k, surface)?
            } else {
                let g = resolve(&source.graph6, &source.file, &source.family)?;
                lower_bound_girth4(&g.graph, surface)
            };
            emit(&out, &format!("{value}\n"), stdout)
        }
        Command::Oracle {
            source,
            surface,
            max_parts,
            edge_limit,
            out,
        } => {
            let g = resolve(&source.graph6, &source.file, &source.family)?;
            let text = match brute_force_theta4_with_limit(&g.graph, surface.parse()?, max_parts, edge_limit)? {
                SearchOutcome::Exact(t) => format!("{t}\n"),
                SearchOutcome::ExceedsMaxParts => format!("exceeds max_parts ({max_parts})\n"),
            };
            emit(&out, &text, stdout)
        }
        Command::Verify { cert } => {
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", cert.display())))?;
            let c = DecompositionCertificate::from_json(&text)?;
            let report = verify_certificate(&c);
            if report.passed() {
                emit(&None, &format!("pass: {} parts on the {} surface\n", c.claimed_value, c.surface), stdout)
            } else {
                Err(Failure::Verification(report.to_string()))
            }
        }
        Command::Embed {
            source,
            f2_cycle,
            out,
        } => {
            let (host, labels, rotation, surface) = if let Some(n) = f2_cycle {
                let (t, r) = projective_embedding_f2_cycle(n)?;
                (t.graph.clone(), Some(t.label_strings()), r, Surface::ProjectivePlane)
            } else {
                let g = resolve(&source.graph6, &source.file, &source.family)?;
                match planarity_test(&g.graph).witness {
                    Some(r) => (g.graph, g.labels, r, Surface::Plane),
                    None => return Err(Failure::Verification("graph is not planar".into())),
                }
            };
            let w = trace_faces(&rotation)?;
            let value = json!({
                "host_graph6": write_graph6(&host),
                "token_labels": labels,
                "surface": surface,
                "witness": w.to_record(),
            });
            emit(&out, &pretty(&value), stdout)
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match run_command(cli.command, stdout) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            1
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("token-thickness").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn token_prints_graph6() {
        let (code, out, _) = call(&["token", "--family", "path:6", "-k", "2"]);
        assert_eq!(code, 0);
        let g = parse_graph6(out.trim()).unwrap();
        assert_eq!((g.order(), g.size()), (15, 20));
    }

    #[test]
    fn bound_line_complete_projective() {
        let (code, out, _) = call(&["bound", "--family", "line-complete:5", "--surface", "projective"]);
        assert_eq!((code, out.as_str()), (0, "2\n"));
        let (code, out, _) = call(&["bound", "--formula", "6,3"]);
        assert_eq!((code, out.as_str()), (0, "3\n"));
    }

    #[test]
    fn decompose_to_stdout() {
        let (code, out, _) = call(&["decompose", "--family", "line-complete:6", "--surface", "plane"]);
        assert_eq!(code, 0);
        let c = DecompositionCertificate::from_json(&out).unwrap();
        assert_eq!(c.claimed_value, 3);
        assert!(verify_certificate(&c).passed());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["token", "--family", "petersen:10"]).0, 2);
        assert_eq!(call(&["token", "--graph6", "D?"]).0, 2);
        assert_eq!(call(&["token", "--graph6", "C~", "--family", "path:3"]).0, 2);
        assert_eq!(call(&["decompose", "--family", "line-complete:6", "--surface", "projective-ish"]).0, 2);
        assert_eq!(call(&["decompose", "--family", "complete-bipartite:3,4", "--surface", "projective"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        let (code, _, err) = call(&["decompose", "--family", "line-complete:7", "--surface", "plane"]);
        assert_eq!(code, 2);
        assert!(err.contains("even"));
    }

    #[test]
    fn oracle_and_embed() {
        let (code, out, _) = call(&["oracle", "--family", "complete:4", "--max-parts", "3"]);
        assert_eq!((code, out.as_str()), (0, "2\n"));
        let (code, out, _) = call(&["oracle", "--family", "complete:6", "--max-parts", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("exceeds"));
        assert_eq!(call(&["oracle", "--family", "complete:7"]).0, 2);

        let (code, out, _) = call(&["embed", "--f2-cycle", "6"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["witness"]["euler_genus"], 1);
        assert_eq!(call(&["embed", "--family", "complete:5"]).0, 1);
        let (code, out, _) = call(&["embed", "--family", "complete:4"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"euler_genus\": 0"));
    }

    #[test]
    fn factorize_json() {
        let (code, out, _) = call(&["factorize", "--family", "complete:4"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["kind"], "hamiltonian_paths");
        assert_eq!(v["members"], json!([[0, 1, 3, 2], [1, 2, 0, 3]]));
        assert_eq!(call(&["factorize", "--family", "complete-bipartite:3,7"]).0, 2);
    }
}
