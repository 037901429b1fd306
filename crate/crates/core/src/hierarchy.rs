//! Reaching-centrality hierarchy measures.
//!
//! The local reaching centrality of a node is the fraction of the other nodes
//! it can reach along directed paths. The general reaching centrality (GRC) of
//! a graph sums how far each node falls short of the most central one,
//! normalized by `n - 1`. An out-star scores 1 and any graph in which all
//! nodes reach equally far scores 0.
//!
//! For a two-level structure (`x` top nodes, each with an edge to every one of
//! the `n - x` bottom nodes) the GRC has the closed form
//! `H_n(x) = ((n - x) / (n - 1))^2`, with `H_n(0) = 0` by convention.

use std::collections::{BTreeSet, VecDeque};

use crate::{Error, Result};

/// Unweighted directed graph without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    node_count: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl DirectedGraph {
    pub fn new<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if node_count == 0 {
            return Err(Error::invalid("graph must have at least one node"));
        }
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); node_count];
        for (from, to) in edges {
            for node in [from, to] {
                if node >= node_count {
                    return Err(Error::InvalidNode { node, node_count });
                }
            }
            if from == to {
                return Err(Error::SelfLoop(from));
            }
            if !seen.insert((from, to)) {
                return Err(Error::DuplicateEdge(from, to));
            }
            adjacency[from].push(to);
        }
        Ok(DirectedGraph {
            node_count,
            adjacency,
            edge_count: seen.len(),
        })
    }

    /// Parses the plain-text edge-list format: a first line `nodes <N>`
    /// followed by one `from to` pair (zero-based) per line. Blank lines and
    /// lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let node_count = match lines.next() {
            Some((lineno, line)) => {
                let mut fields = line.split_whitespace();
                match (fields.next(), fields.next(), fields.next()) {
                    (Some("nodes"), Some(count), None) => count.parse::<usize>().map_err(|_| {
                        Error::Parse(format!("line {lineno}: bad node count `{count}`"))
                    })?,
                    _ => {
                        return Err(Error::Parse(format!(
                            "line {lineno}: expected `nodes <N>` header"
                        )))
                    }
                }
            }
            None => return Err(Error::Parse("empty edge list".into())),
        };

        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                [from, to] => from.parse::<usize>().ok().zip(to.parse::<usize>().ok()),
                _ => None,
            };
            match parsed {
                Some(edge) => edges.push(edge),
                None => {
                    return Err(Error::Parse(format!(
                        "line {lineno}: expected `from to`, got `{line}`"
                    )))
                }
            }
        }
        DirectedGraph::new(node_count, edges)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(from, tos)| tos.iter().map(move |&to| (from, to)))
    }

    /// Number of nodes other than `start` reachable from it.
    fn reachable_count(&self, start: usize) -> usize {
        let mut visited = vec![false; self.node_count];
        let mut queue = VecDeque::new();
        visited[start] = true;
        queue.push_back(start);
        let mut count = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !visited[v] {
                    visited[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count
    }
}

/// A two-level structure: `top_count` leaders over `group_size - top_count`
/// followers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoLevelStructure {
    group_size: usize,
    top_count: usize,
}

impl TwoLevelStructure {
    pub fn new(group_size: usize, top_count: usize) -> Result<Self> {
        if group_size < 2 {
            return Err(Error::invalid(format!(
                "group size must be at least 2, got {group_size}"
            )));
        }
        if top_count > group_size {
            return Err(Error::invalid(format!(
                "top count {top_count} exceeds group size {group_size}"
            )));
        }
        Ok(TwoLevelStructure {
            group_size,
            top_count,
        })
    }

    pub fn group_size(&self) -> usize {
        self.group_size
    }

    pub fn top_count(&self) -> usize {
        self.top_count
    }
}

pub fn local_reaching_centrality(graph: &DirectedGraph, node: usize) -> Result<f64> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    if node >= n {
        return Err(Error::InvalidNode {
            node,
            node_count: n,
        });
    }
    Ok(graph.reachable_count(node) as f64 / (n - 1) as f64)
}

pub fn general_reaching_centrality(graph: &DirectedGraph) -> Result<f64> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    // Work in reachable counts so the sum is exact before the final division.
    let counts: Vec<usize> = (0..n).map(|v| graph.reachable_count(v)).collect();
    let max = counts.iter().copied().max().unwrap_or(0);
    let shortfall: usize = counts.iter().map(|&c| max - c).sum();
    let denom = (n - 1) as f64;
    Ok(shortfall as f64 / (denom * denom))
}

/// `H_n(x)` without constructing a [`TwoLevelStructure`]; callers guarantee
/// `n >= 2` and `x <= n`.
#[inline]
pub(crate) fn hierarchicalness(n: usize, x: usize) -> f64 {
    debug_assert!(n >= 2 && x <= n);
    if x == 0 {
        0.0
    } else {
        let r = (n - x) as f64 / (n - 1) as f64;
        r * r
    }
}

/// Two-level hierarchicalness `H_n(x)`; also the contribution probability of
/// each cooperator in a multi-leader group with `x` leaders.
pub fn h_nx(structure: TwoLevelStructure) -> f64 {
    hierarchicalness(structure.group_size, structure.top_count)
}

/// Nodes `0..x` are the top level; each has an out-edge to every bottom node.
pub fn build_two_level_graph(structure: TwoLevelStructure) -> Result<DirectedGraph> {
    let n = structure.group_size;
    let x = structure.top_count;
    if x == 0 {
        return Err(Error::invalid(
            "a structure without top nodes has no two-level graph",
        ));
    }
    let edges = (0..x).flat_map(|top| (x..n).map(move |bottom| (top, bottom)));
    DirectedGraph::new(n, edges)
}
