use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with fixed canonical labelings.
///
/// | family | labeling |
/// |---|---|
/// | `path:n` | `i ~ i+1` |
/// | `cycle:n` | `i ~ i+1 mod n` |
/// | `complete:n` | all pairs |
/// | `star:n` | center `0`, leaves `1..n` |
/// | `double_star:a,b` | centers `0` and `1`; leaves `2..=a` on `0`, `a+1..a+b` on `1` |
/// | `empty:n` | no edges |
/// | `complete_bipartite:a,b` | parts `0..a` and `a..a+b` |
/// | `hypercube:k` | bit strings, adjacent when differing in one bit |
/// | `petersen` | outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram |
/// | `frucht` | Hamiltonian cycle `0..12` plus LCF chords `[-5,-2,-4,2,5,-2,2,5,-2,-5,4,2]` |
/// | `hexagonal_prism` | cycles `0..6` and `6..12`, rungs `i ~ i+6` |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    DoubleStar(usize, usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    Hypercube(usize),
    Petersen,
    Frucht,
    HexagonalPrism,
}

const FRUCHT_LCF: [isize; 12] = [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2];

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => {
                if n < 2 {
                    return Err(invalid("path needs n >= 2"));
                }
                Ok(Graph::from_fn(n, |u, v| v == u + 1))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                Ok(Graph::from_fn(n, |u, v| {
                    v == u + 1 || (u == 0 && v == n - 1)
                }))
            }
            Family::Complete(n) => {
                if n < 1 {
                    return Err(invalid("complete graph needs n >= 1"));
                }
                Ok(Graph::from_fn(n, |_, _| true))
            }
            Family::Star(n) => {
                if n < 2 {
                    return Err(invalid("star needs n >= 2"));
                }
                Ok(Graph::from_fn(n, |u, _| u == 0))
            }
            Family::DoubleStar(a, b) => {
                if a < 2 || b < 2 {
                    return Err(invalid("double star needs n1, n2 >= 2"));
                }
                let n = a + b;
                Ok(Graph::from_fn(n, |u, v| match (u, v) {
                    (0, 1) => true,
                    (0, v) => v <= a,
                    (1, v) => v > a,
                    _ => false,
                }))
            }
            Family::Empty(n) => {
                if n < 1 {
                    return Err(invalid("empty graph needs n >= 1"));
                }
                Ok(Graph::empty(n))
            }
            Family::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return Err(invalid("complete bipartite needs both parts nonempty"));
                }
                Ok(Graph::from_fn(a + b, |u, v| u < a && v >= a))
            }
            Family::Hypercube(k) => {
                if !(1..=6).contains(&k) {
                    return Err(invalid("hypercube dimension must be in 1..=6"));
                }
                Ok(Graph::from_fn(1 << k, |u, v| (u ^ v).count_ones() == 1))
            }
            Family::Petersen => Ok(Graph::from_fn(10, |u, v| {
                if v < 5 {
                    v == u + 1 || (u == 0 && v == 4)
                } else if u < 5 {
                    v == u + 5
                } else {
                    let (a, b) = (u - 5, v - 5);
                    (a + 2) % 5 == b || (b + 2) % 5 == a
                }
            })),
            Family::Frucht => {
                let n = FRUCHT_LCF.len();
                let mut edges = Vec::new();
                for (i, &jump) in FRUCHT_LCF.iter().enumerate() {
                    edges.push((i, (i + 1) % n));
                    let j = (i as isize + jump).rem_euclid(n as isize) as usize;
                    if i < j {
                        edges.push((i, j));
                    }
                }
                Graph::from_edge_list(n, &edges)
            }
            Family::HexagonalPrism => Ok(Graph::from_fn(12, |u, v| {
                let ring = |a: usize, b: usize| (a + 1) % 6 == b || (b + 1) % 6 == a;
                match (u < 6, v < 6) {
                    (true, true) => ring(u, v),
                    (false, false) => ring(u - 6, v - 6),
                    _ => v == u + 6,
                }
            })),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::DoubleStar(a, b) => write!(f, "double_star:{a},{b}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Hypercube(k) => write!(f, "hypercube:{k}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Frucht => write!(f, "frucht"),
            Family::HexagonalPrism => write!(f, "hexagonal_prism"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name` or `name:p1[,p2]`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = match s.split_once(':') {
            Some((name, rest)) => (name.trim(), rest.trim()),
            None => (s.trim(), ""),
        };
        let nums = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| invalid(format!("`{p}` is not a nonnegative integer")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(invalid(format!(
                    "`{name}` takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let family = match name {
            "path" | "P" => {
                arity(1)?;
                Family::Path(nums[0])
            }
            "cycle" | "C" => {
                arity(1)?;
                Family::Cycle(nums[0])
            }
            "complete" | "K" => {
                arity(1)?;
                Family::Complete(nums[0])
            }
            "star" | "S" => {
                arity(1)?;
                Family::Star(nums[0])
            }
            "double_star" => {
                arity(2)?;
                Family::DoubleStar(nums[0], nums[1])
            }
            "empty" => {
                arity(1)?;
                Family::Empty(nums[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(nums[0], nums[1])
            }
            "hypercube" | "Q" => {
                arity(1)?;
                Family::Hypercube(nums[0])
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "frucht" => {
                arity(0)?;
                Family::Frucht
            }
            "hexagonal_prism" => {
                arity(0)?;
                Family::HexagonalPrism
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}
