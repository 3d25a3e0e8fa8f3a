//! Reading graphs and monoid bases from text.

use clap::ValueEnum;
use koszul_core::semigroup::{edge_ring_basis, MonoidBasis};
use koszul_core::Graph;

use crate::error::LabError;
use crate::graph6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `{` starts JSON, a line of two integers is an edge list, otherwise graph6.
    #[default]
    Auto,
    Graph6,
    EdgeList,
    Json,
}

/// Either a graph or a raw monoid basis (JSON `{"dim", "generators"}`).
#[derive(Clone, Debug)]
pub enum Input {
    Graph(Graph),
    Basis(MonoidBasis),
}

impl Input {
    pub fn basis(&self) -> Result<MonoidBasis, LabError> {
        match self {
            Input::Graph(g) => Ok(edge_ring_basis(g)?),
            Input::Basis(b) => Ok(b.clone()),
        }
    }

    pub fn into_graph(self) -> Result<Graph, LabError> {
        match self {
            Input::Graph(g) => Ok(g),
            Input::Basis(_) => Err(LabError::Parse("expected a graph, found a monoid basis".into())),
        }
    }
}

pub fn detect(text: &str) -> Format {
    let t = text.trim_start();
    if t.starts_with('{') {
        return Format::Json;
    }
    let first = t.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    let mut words = first.split_whitespace();
    let two_ints = matches!((words.next(), words.next(), words.next()), (Some(a), Some(b), None)
        if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
    if two_ints && !graph6::looks_like_graph6(first) {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

pub fn parse_input(text: &str, format: Format) -> Result<Input, LabError> {
    let format = if format == Format::Auto { detect(text) } else { format };
    match format {
        Format::Graph6 => Ok(Input::Graph(graph6::parse(text.trim())?)),
        Format::EdgeList => Ok(Input::Graph(parse_edge_list(text)?)),
        Format::Json => parse_json(text),
        Format::Auto => unreachable!(),
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, LabError> {
    parse_input(text, format)?.into_graph()
}

/// One `i j` pair per line, 1-based; blank lines and `#` comments are skipped.
/// The vertex count is the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph, LabError> {
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || LabError::Parse(format!("line {}: expected two vertex numbers, found {line:?}", k + 1));
        let mut words = line.split_whitespace();
        let (Some(a), Some(b), None) = (words.next(), words.next(), words.next()) else { return Err(bad()) };
        edges.push((a.parse::<usize>().map_err(|_| bad())?, b.parse::<usize>().map_err(|_| bad())?));
    }
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().ok_or(LabError::Parse("edge list is empty".into()))?;
    Ok(Graph::new(n, edges)?)
}

pub fn parse_json(text: &str) -> Result<Input, LabError> {
    let json = |e: serde_json::Error| LabError::Parse(format!("JSON: {e}"));
    let value: serde_json::Value = serde_json::from_str(text).map_err(json)?;
    if value.get("generators").is_some() {
        Ok(Input::Basis(serde_json::from_value(value).map_err(json)?))
    } else {
        Ok(Input::Graph(serde_json::from_value(value).map_err(json)?))
    }
}
