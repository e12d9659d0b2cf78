use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// Parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
}

pub fn named_family(family: Family) -> Result<Graph> {
    match family {
        Family::Complete(n) => {
            positive(n, "complete")?;
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, edges)
        }
        Family::Path(n) => {
            positive(n, "path")?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidArgument(format!(
                    "cycle needs at least 3 vertices, got {n}"
                )));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::CompleteBipartite(a, b) => {
            positive(a, "complete-bipartite")?;
            positive(b, "complete-bipartite")?;
            let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
            Graph::from_edges(a + b, edges)
        }
    }
}

fn positive(n: usize, name: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(format!("{name} needs a positive order")))
    } else {
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `name:params`, e.g. `cycle:6` or `complete-bipartite:3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("family `{s}` lacks `:params`")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad family parameter `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        match (name, nums.as_slice()) {
            ("complete", [n]) => Ok(Family::Complete(*n)),
            ("path", [n]) => Ok(Family::Path(*n)),
            ("cycle", [n]) => Ok(Family::Cycle(*n)),
            ("complete-bipartite", [a, b]) => Ok(Family::CompleteBipartite(*a, *b)),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Girth};

    #[test]
    fn family_sizes() {
        assert_eq!(named_family(Family::Complete(4)).unwrap().size(), 6);
        let c6 = named_family(Family::Cycle(6)).unwrap();
        assert_eq!(c6.size(), 6);
        assert_eq!(girth(&c6), Girth::Finite(6));
        let k34 = named_family(Family::CompleteBipartite(3, 4)).unwrap();
        assert_eq!(k34.size(), 12);
        assert!(k34.has_edge(0, 3) && k34.has_edge(2, 6));
        assert!(!k34.has_edge(0, 1) && !k34.has_edge(3, 4));
    }

    #[test]
    fn zero_parameters_are_rejected() {
        assert!(named_family(Family::Complete(0)).is_err());
        assert!(named_family(Family::Cycle(2)).is_err());
        assert!(named_family(Family::CompleteBipartite(0, 3)).is_err());
    }

    #[test]
    fn parse_family_syntax() {
        assert_eq!("path:6".parse::<Family>().unwrap(), Family::Path(6));
        assert_eq!(
            "complete-bipartite:3,4".parse::<Family>().unwrap(),
            Family::CompleteBipartite(3, 4)
        );
        assert!("petersen:10".parse::<Family>().is_err());
        assert!("cycle".parse::<Family>().is_err());
        assert!("cycle:x".parse::<Family>().is_err());
        let f = Family::CompleteBipartite(2, 5);
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }
}
