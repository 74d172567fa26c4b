// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Undirected simple graphs with text labels, edge-list ingestion and
//! connectivity helpers.
//!
//! Labels are mapped to dense indices in first-appearance order. Every
//! metric in this crate works on those indices.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: expected two node labels, found {tokens}")]
    MalformedLine { line: usize, tokens: usize },
    #[error("line {line}: self-loop on node `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("edge list contains no edges")]
    EmptyInput,
    #[error("a graph needs at least one node")]
    NoNodes,
    #[error("duplicate node label `{0}`")]
    DuplicateLabel(String),
    #[error("edge ({u}, {v}) refers to a node outside 0..{n}")]
    NodeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop on node index {0}")]
    SelfLoopIndex(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Immutable undirected simple graph.
///
/// Neighbor lists are sorted and symmetric; there are no self-loops or
/// parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from explicit labels and index pairs. Duplicate and
    /// reversed edges collapse into one.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if labels.is_empty() {
            return Err(GraphError::NoNodes);
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for label in &labels {
            if seen.insert(label.as_str(), ()).is_some() {
                return Err(GraphError::DuplicateLabel(label.clone()));
            }
        }
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::NodeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoopIndex(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(labels, adjacency))
    }

    /// Graph on `n` nodes labelled `0..n`.
    pub fn with_numeric_labels<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    fn from_raw_adjacency(labels: Vec<String>, mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Graph {
            labels,
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    /// Reads a whitespace-separated edge list. Lines starting with `#` and
    /// blank lines are skipped.
    pub fn from_edge_list<R: BufRead>(reader: R) -> Result<Self, GraphError> {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut edges = Vec::new();

        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(GraphError::MalformedLine {
                    line: lineno + 1,
                    tokens: tokens.len(),
                });
            }
            if tokens[0] == tokens[1] {
                return Err(GraphError::SelfLoop {
                    line: lineno + 1,
                    label: tokens[0].to_string(),
                });
            }
            let mut intern = |label: &str| -> usize {
                if let Some(&i) = index.get(label) {
                    return i;
                }
                let i = labels.len();
                labels.push(label.to_string());
                index.insert(label.to_string(), i);
                i
            };
            let u = intern(tokens[0]);
            let v = intern(tokens[1]);
            edges.push((u, v));
        }

        if edges.is_empty() {
            return Err(GraphError::EmptyInput);
        }
        Self::from_edges(labels, edges)
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        Self::from_edge_list(text.as_bytes())
    }

    /// Writes one `u v` line per edge with `u < v` by index. Isolated nodes
    /// cannot be expressed in this format and are dropped.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", self.labels[u], self.labels[v])?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("labels are valid UTF-8")
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted neighbor indices of `node`.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns a copy with the extra edge `(u, v)`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        Self::from_edges(self.labels.clone(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Connected components, largest first; equal sizes are ordered by their
    /// smallest node index. Nodes inside a part are sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut component = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut stack = Vec::new();

        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut members = vec![start];
            component[start] = id;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if component[v] == usize::MAX {
                        component[v] = id;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            parts.push(members);
        }

        // Parts were discovered in order of their smallest index, so a stable
        // sort by size keeps the tie-break.
        parts.sort_by_key(|p| std::cmp::Reverse(p.len()));
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Subgraph induced by `nodes`, which must be distinct valid indices.
    /// Node order follows `nodes` after sorting.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Self {
        let mut nodes = nodes.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let mut remap = vec![usize::MAX; self.node_count()];
        for (new, &old) in nodes.iter().enumerate() {
            remap[old] = new;
        }
        let labels = nodes.iter().map(|&i| self.labels[i].clone()).collect();
        let adjacency = nodes
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .iter()
                    .filter_map(|&v| (remap[v] != usize::MAX).then_some(remap[v]))
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(labels, adjacency)
    }

    /// Induced subgraph on the largest connected component.
    pub fn largest_component(&self) -> Self {
        let parts = self.connected_components();
        if parts.len() == 1 {
            return self.clone();
        }
        self.induced_subgraph(&parts[0])
    }
}
