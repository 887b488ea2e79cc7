//! Deterministic generators for the named graph families.
//!
//! Labelings are fixed so fixtures stay byte-stable:
//!
//! * `cycle:n=N` — edges `i ~ i+1 (mod N)`.
//! * `path:n=N` — edges `i ~ i+1`.
//! * `complete:n=N`.
//! * `complete_multipartite:parts=a,b,..` — parts are consecutive label ranges.
//! * `disjoint_cliques:r=R,p=P` — `R` copies of `K_P`, consecutive ranges.
//! * `petersen` — outer cycle `0..5`, inner pentagram on `5..10` with
//!   `5+i ~ 5+(i+2 mod 5)`, spokes `i ~ i+5`.
//! * `petersen-complement` — complement of the above.
//! * `c7_blowup:q=Q` — `C_7[K_Q]`; vertex `(i, j)` is `i*Q + j`, class `i`
//!   is cycle vertex `i` of `Z_7`.

use std::fmt;
use std::str::FromStr;

use crate::error::FamilyError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    DisjointCliques { r: usize, p: usize },
    Petersen,
    PetersenComplement,
    C7Blowup { q: usize },
}

/// Labeled structure carried along with a generated graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    /// Vertices in cycle or path order.
    Order(Vec<usize>),
    /// Blow-up classes, product classes or multipartite parts.
    Classes(Vec<VertexSet>),
    /// Outer and inner 5-cycles of the Petersen graph.
    Petersen { outer: VertexSet, inner: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub structure: Structure,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteMultipartite { .. } => "complete_multipartite",
            FamilySpec::DisjointCliques { .. } => "disjoint_cliques",
            FamilySpec::Petersen => "petersen",
            FamilySpec::PetersenComplement => "petersen-complement",
            FamilySpec::C7Blowup { .. } => "c7_blowup",
        }
    }

    fn invalid(&self, reason: &str) -> FamilyError {
        FamilyError::InvalidParameters {
            family: self.name().to_string(),
            reason: reason.to_string(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match self {
            FamilySpec::Cycle { n } if *n < 3 => Err(self.invalid("cycle needs n >= 3")),
            FamilySpec::Path { n } | FamilySpec::Complete { n } if *n < 1 => {
                Err(self.invalid("n must be at least 1"))
            }
            FamilySpec::CompleteMultipartite { parts } if parts.is_empty() => {
                Err(self.invalid("at least one part"))
            }
            FamilySpec::CompleteMultipartite { parts } if parts.contains(&0) => {
                Err(self.invalid("parts must be nonempty"))
            }
            FamilySpec::DisjointCliques { r, p } if *r < 1 || *p < 1 => {
                Err(self.invalid("r and p must be at least 1"))
            }
            FamilySpec::C7Blowup { q } if *q < 1 => Err(self.invalid("q must be at least 1")),
            _ => Ok(()),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Family, FamilyError> {
    spec.validate()?;
    let (graph, structure) = match spec {
        FamilySpec::Cycle { n } => (cycle(*n)?, Structure::Order((0..*n).collect())),
        FamilySpec::Path { n } => (
            Graph::new(*n, (1..*n).map(|i| (i - 1, i)))?,
            Structure::Order((0..*n).collect()),
        ),
        FamilySpec::Complete { n } => (Graph::complete(*n)?, Structure::Order((0..*n).collect())),
        FamilySpec::CompleteMultipartite { parts } => {
            let cliques = parts
                .iter()
                .map(|&p| Graph::complete(p))
                .collect::<Result<Vec<_>, _>>()?;
            let union = Graph::disjoint_union(&cliques)?;
            (union.graph.complement(), Structure::Classes(union.blocks))
        }
        FamilySpec::DisjointCliques { r, p } => {
            let union = Graph::disjoint_union(&vec![Graph::complete(*p)?; *r])?;
            (union.graph, Structure::Classes(union.blocks))
        }
        FamilySpec::Petersen | FamilySpec::PetersenComplement => {
            let p = petersen();
            let structure = Structure::Petersen {
                outer: VertexSet::from_vertices(10, 0..5),
                inner: VertexSet::from_vertices(10, 5..10),
            };
            let g = if *spec == FamilySpec::Petersen {
                p
            } else {
                p.complement()
            };
            (g, structure)
        }
        FamilySpec::C7Blowup { q } => {
            let prod = cycle(7)?.lexicographic_product(*q)?;
            (prod.graph, Structure::Classes(prod.blocks))
        }
    };
    Ok(Family {
        spec: spec.clone(),
        graph,
        structure,
    })
}

fn cycle(n: usize) -> Result<Graph, crate::error::GraphError> {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| {
        [
            (i, (i + 1) % 5),
            (5 + i, 5 + (i + 2) % 5),
            (i, i + 5),
        ]
    });
    Graph::new(10, edges).expect("petersen labeling is valid")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle { n } | FamilySpec::Path { n } | FamilySpec::Complete { n } => {
                write!(f, "{}:n={n}", self.name())
            }
            FamilySpec::CompleteMultipartite { parts } => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "{}:parts={}", self.name(), parts.join(","))
            }
            FamilySpec::DisjointCliques { r, p } => write!(f, "{}:r={r},p={p}", self.name()),
            FamilySpec::Petersen | FamilySpec::PetersenComplement => f.write_str(self.name()),
            FamilySpec::C7Blowup { q } => write!(f, "{}:q={q}", self.name()),
        }
    }
}

/// Parses `name` or `name:key=value,...`. A bare value continues the list
/// of the preceding key, so `parts=2,2,3` is one three-element list.
impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let text = text.trim();
        let (name, rest) = match text.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (text, None),
        };
        let mut params: Vec<(String, Vec<usize>)> = Vec::new();
        for token in rest.into_iter().flat_map(|r| r.split(',')) {
            let token = token.trim();
            let parse = |v: &str| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| FamilyError::MalformedParameter(token.to_string()))
            };
            match token.split_once('=') {
                Some((key, value)) => params.push((key.trim().to_string(), vec![parse(value)?])),
                None => match params.last_mut() {
                    Some((_, values)) => values.push(parse(token)?),
                    None => return Err(FamilyError::MalformedParameter(token.to_string())),
                },
            }
        }

        let mut take = |key: &str| -> Result<Vec<usize>, FamilyError> {
            let pos = params.iter().position(|(k, _)| k == key).ok_or_else(|| {
                FamilyError::MissingParameter {
                    family: name.to_string(),
                    param: key.to_string(),
                }
            })?;
            Ok(params.remove(pos).1)
        };
        let single = |values: Vec<usize>, key: &str| -> Result<usize, FamilyError> {
            match values.as_slice() {
                [v] => Ok(*v),
                _ => Err(FamilyError::MalformedParameter(key.to_string())),
            }
        };

        let spec = match name {
            "cycle" => FamilySpec::Cycle {
                n: single(take("n")?, "n")?,
            },
            "path" => FamilySpec::Path {
                n: single(take("n")?, "n")?,
            },
            "complete" => FamilySpec::Complete {
                n: single(take("n")?, "n")?,
            },
            "complete_multipartite" => FamilySpec::CompleteMultipartite {
                parts: take("parts")?,
            },
            "disjoint_cliques" => FamilySpec::DisjointCliques {
                r: single(take("r")?, "r")?,
                p: single(take("p")?, "p")?,
            },
            "petersen" => FamilySpec::Petersen,
            "petersen-complement" | "petersen_complement" => FamilySpec::PetersenComplement,
            "c7_blowup" => FamilySpec::C7Blowup {
                q: single(take("q")?, "q")?,
            },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        if let Some((key, _)) = params.first() {
            return Err(FamilyError::UnexpectedParameter {
                family: name.to_string(),
                param: key.clone(),
            });
        }
        spec.validate()?;
        Ok(spec)
    }
}
