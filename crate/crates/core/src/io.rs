//! Text and JSON formats for graphs, ideals and complexes.
//!
//! Vertices and variables are 1-based in every external format.
//!
//! Graph text format: a header line `n m`, then exactly `m` lines `u v` with
//! `1 <= u < v <= n`, each line terminated by LF. Canonical files list edges
//! in lexicographic order and round-trip byte for byte.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    if text.is_empty() {
        return Err(Error::parse(1, "empty input"));
    }
    if !text.ends_with('\n') {
        let last = text.split('\n').count();
        return Err(Error::parse(last, "missing final LF"));
    }
    let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();
    let (n, m) = parse_pair(lines[0], 1)?;
    let mut graph = Graph::edgeless(n).map_err(|e| Error::parse(1, e.to_string()))?;
    for (k, line) in lines.iter().enumerate().skip(1) {
        let lineno = k + 1;
        if k > m {
            return Err(Error::parse(lineno, format!("header announces {m} edges")));
        }
        let (u, v) = parse_pair(line, lineno)?;
        if !(1 <= u && u < v && v <= n) {
            return Err(Error::parse(lineno, format!("edge {u} {v} needs 1 <= u < v <= {n}")));
        }
        if graph.has_edge(u - 1, v - 1) {
            return Err(Error::parse(lineno, format!("duplicate edge {u} {v}")));
        }
        graph.insert_edge(u - 1, v - 1);
    }
    if lines.len() - 1 < m {
        return Err(Error::parse(
            lines.len() + 1,
            format!("header announces {m} edges, found {}", lines.len() - 1),
        ));
    }
    Ok(graph)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let bad = || Error::parse(lineno, format!("expected two integers separated by one space, got {line:?}"));
    let (a, b) = line.split_once(' ').ok_or_else(bad)?;
    let num = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    Ok((num(a)?, num(b)?))
}

pub fn write_graph_text(graph: &Graph) -> String {
    let edges = graph.edges();
    let mut out = format!("{} {}\n", graph.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// `{ "n": int, "edges": [[u, v], ...] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphRecord {
    pub fn from_graph(graph: &Graph) -> Self {
        GraphRecord {
            n: graph.n(),
            edges: graph.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[u, v] in &self.edges {
            if u == 0 || v == 0 {
                return Err(Error::domain("graph vertices are 1-based"));
            }
            edges.push((u.min(v) - 1, u.max(v) - 1));
        }
        Graph::from_edges(self.n, &edges)
    }
}

/// `{ "n": int, "gens": [[exponents], ...] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl IdealRecord {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealRecord {
            n: ideal.n(),
            gens: ideal.gens().iter().map(|g| g.entries().to_vec()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().cloned().map(ExponentVector::new).collect();
        MonomialIdeal::new(self.n, gens)
    }
}

/// `{ "n": int, "facets": [[v, ...], ...] }`; the void complex has no facets,
/// the empty complex has the single facet `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexRecord {
    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        ComplexRecord {
            n: complex.n(),
            facets: complex
                .facets()
                .iter()
                .map(|&f| bits::iter(f).map(|v| v + 1).collect())
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let mut facets = Vec::with_capacity(self.facets.len());
        for facet in &self.facets {
            if facet.iter().any(|&v| v == 0 || v > self.n) {
                return Err(Error::domain(format!("facet vertex outside 1..={}", self.n)));
            }
            facets.push(bits::from_indices(facet.iter().map(|v| v - 1)));
        }
        SimplicialComplex::from_facets(self.n, facets)
    }
}

/// Graph from either the text format or the JSON record.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let rec: GraphRecord = serde_json::from_str(text).map_err(json_error)?;
        rec.to_graph()
    } else {
        parse_graph_text(text)
    }
}

/// Ideal from the JSON record, or from text: a first line `n` followed by
/// monomials such as `x1^2*x3`, separated by commas or newlines.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        let rec: IdealRecord = serde_json::from_str(text).map_err(json_error)?;
        return rec.to_ideal();
    }
    let mut lines = text.lines();
    let n: usize = lines
        .next()
        .map(str::trim)
        .and_then(|l| l.parse().ok())
        .ok_or_else(|| Error::parse(1, "expected the variable count on the first line"))?;
    let mut gens = Vec::new();
    for (k, line) in lines.enumerate() {
        for token in line.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            gens.push(ExponentVector::parse(n, token).map_err(|e| Error::parse(k + 2, e.to_string()))?);
        }
    }
    MonomialIdeal::new(n, gens)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.to_string())
}
