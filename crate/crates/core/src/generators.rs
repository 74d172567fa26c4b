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

//! Synthetic graphs (complete, ring lattice, Watts–Strogatz) and the
//! nested cluster hierarchy of `L^eta` leaves.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("a graph needs at least one node")]
    NoNodes,
    #[error("degree {k} must be even, at least 2 and below the node count {n}")]
    InvalidDegree { n: usize, k: usize },
    #[error("rewiring probability must be in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("branching factor must be at least 2 and depth at least 1, got L = {branching}, eta = {depth}")]
    InvalidShape { branching: usize, depth: usize },
    #[error("{branching}^{depth} leaves do not fit in memory")]
    Overflow { branching: usize, depth: usize },
    #[error("malformed nested-array hierarchy: {0}")]
    Parse(String),
}

/// Largest leaf count `nested_hierarchy` will materialize.
pub const MAX_HIERARCHY_LEAVES: usize = 1 << 26;

pub fn complete_graph(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::NoNodes);
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::with_numeric_labels(n, edges).expect("complete graph edges are valid"))
}

fn check_lattice(n: usize, k: usize) -> Result<(), GeneratorError> {
    if k < 2 || !k.is_multiple_of(2) || k >= n {
        return Err(GeneratorError::InvalidDegree { n, k });
    }
    Ok(())
}

fn lattice_edges(n: usize, k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=k / 2).flat_map(move |offset| (0..n).map(move |u| (u, (u + offset) % n)))
}

/// Ring of `n` nodes, each joined to its `k / 2` nearest neighbors on
/// either side.
pub fn ring_lattice(n: usize, k: usize) -> Result<Graph, GeneratorError> {
    check_lattice(n, k)?;
    Ok(Graph::with_numeric_labels(n, lattice_edges(n, k)).expect("lattice edges are valid"))
}

/// Watts–Strogatz rewiring of `ring_lattice(n, k)`.
///
/// Lattice edges are visited offset by offset (all `(u, u+1)`, then all
/// `(u, u+2)`, ...). With probability `p` the far endpoint is replaced by a
/// uniformly drawn node that is neither `u` nor already adjacent to `u`;
/// candidates are redrawn until one qualifies. The edge count stays `n·k/2`.
pub fn watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    check_lattice(n, k)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::InvalidProbability(p));
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (u, v) in lattice_edges(n, k) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for offset in 1..=k / 2 {
        for u in 0..n {
            let v = (u + offset) % n;
            if !rng.gen_bool(p) || !adj[u].contains(&v) {
                continue;
            }
            // u is already adjacent to everything else.
            if adj[u].len() >= n - 1 {
                continue;
            }
            let w = loop {
                let w = rng.gen_range(0..n);
                if w != u && !adj[u].contains(&w) {
                    break w;
                }
            };
            adj[u].remove(&v);
            adj[v].remove(&u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }

    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, set)| set.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
    Ok(Graph::with_numeric_labels(n, edges).expect("rewired edges are valid"))
}

/// Nested partitions of `branching^depth` leaves. `generations[k]` holds the
/// `branching^k` clusters of generation `k`, each a sorted list of leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterHierarchy {
    pub branching: usize,
    pub depth: usize,
    pub generations: Vec<Vec<Vec<usize>>>,
}

impl ClusterHierarchy {
    pub fn leaf_count(&self) -> usize {
        self.generations.first().map_or(0, |g| g.iter().map(Vec::len).sum())
    }

    /// Nested-array text form: the root cluster as a JSON array of its
    /// children, down to bare leaf indices.
    pub fn to_nested_text(&self) -> String {
        fn emit(h: &ClusterHierarchy, generation: usize, cluster: usize, out: &mut String) {
            if generation == h.depth {
                write!(out, "{}", h.generations[generation][cluster][0]).unwrap();
                return;
            }
            out.push('[');
            for child in 0..h.branching {
                if child > 0 {
                    out.push(',');
                }
                emit(h, generation + 1, cluster * h.branching + child, out);
            }
            out.push(']');
        }
        let mut out = String::new();
        emit(self, 0, 0, &mut out);
        out
    }

    /// Parses the nested-array form. The result is not validated; pass it to
    /// [`verify_hierarchy`].
    pub fn from_nested_text(text: &str) -> Result<Self, GeneratorError> {
        let root: Value = serde_json::from_str(text).map_err(|e| GeneratorError::Parse(e.to_string()))?;
        let branching = match &root {
            Value::Array(children) => children.len(),
            _ => return Err(GeneratorError::Parse("root must be an array".into())),
        };
        let mut depth = 0;
        let mut probe = &root;
        while let Value::Array(children) = probe {
            depth += 1;
            probe = children
                .first()
                .ok_or_else(|| GeneratorError::Parse("empty cluster".into()))?;
        }

        let mut generations: Vec<Vec<Vec<usize>>> = vec![Vec::new(); depth + 1];
        fn collect(
            node: &Value,
            level: usize,
            depth: usize,
            generations: &mut Vec<Vec<Vec<usize>>>,
        ) -> Result<Vec<usize>, GeneratorError> {
            let leaves = match node {
                Value::Number(num) if level == depth => {
                    let leaf = num
                        .as_u64()
                        .ok_or_else(|| GeneratorError::Parse(format!("bad leaf {num}")))?;
                    vec![leaf as usize]
                }
                Value::Array(children) if level < depth => {
                    let mut leaves = Vec::new();
                    for child in children {
                        leaves.extend(collect(child, level + 1, depth, generations)?);
                    }
                    leaves.sort_unstable();
                    leaves
                }
                _ => return Err(GeneratorError::Parse(format!("unbalanced nesting at level {level}"))),
            };
            generations[level].push(leaves.clone());
            Ok(leaves)
        }
        collect(&root, 0, depth, &mut generations)?;
        Ok(ClusterHierarchy { branching, depth, generations })
    }
}

/// Hierarchy whose generation-`k` cluster `j` holds the contiguous leaf
/// block `[j·L^(eta−k), (j+1)·L^(eta−k))`.
pub fn nested_hierarchy(branching: usize, depth: usize) -> Result<ClusterHierarchy, GeneratorError> {
    if branching < 2 || depth < 1 {
        return Err(GeneratorError::InvalidShape { branching, depth });
    }
    let overflow = GeneratorError::Overflow { branching, depth };
    let leaves = u32::try_from(depth)
        .ok()
        .and_then(|d| branching.checked_pow(d))
        .filter(|&n| n <= MAX_HIERARCHY_LEAVES)
        .ok_or(overflow)?;

    let generations = (0..=depth)
        .map(|k| {
            let size = leaves / branching.pow(k as u32);
            (0..leaves / size)
                .map(|j| (j * size..(j + 1) * size).collect())
                .collect()
        })
        .collect();
    Ok(ClusterHierarchy { branching, depth, generations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationKind {
    /// Generation has the wrong number of clusters.
    ClusterCount { expected: usize, found: usize },
    ClusterSize { expected: usize, found: usize },
    /// Clusters of the generation do not partition the leaves.
    NotAPartition,
    /// Cluster is not contained in exactly one parent-generation cluster.
    NotNested,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub generation: usize,
    /// `None` when the violation concerns the generation as a whole.
    pub cluster: Option<usize>,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyCheck {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks cluster counts and sizes per generation, that every generation
/// partitions the leaves, and that each cluster sits inside exactly one
/// cluster of the previous generation. Violations are ordered by
/// generation, then cluster.
pub fn verify_hierarchy(h: &ClusterHierarchy) -> HierarchyCheck {
    let mut violations = Vec::new();
    let leaves = h.leaf_count();

    if h.generations.len() != h.depth + 1 {
        violations.push(Violation {
            generation: h.generations.len().min(h.depth + 1),
            cluster: None,
            kind: ViolationKind::ClusterCount {
                expected: h.depth + 1,
                found: h.generations.len(),
            },
        });
    }

    let mut parent_of_leaf: Vec<usize> = Vec::new();
    for (k, clusters) in h.generations.iter().enumerate() {
        let expected_count = u32::try_from(k).ok().and_then(|k| h.branching.checked_pow(k));
        let expected_size = expected_count.and_then(|c| (c > 0 && leaves.is_multiple_of(c)).then(|| leaves / c));
        if let Some(expected) = expected_count {
            if clusters.len() != expected {
                violations.push(Violation {
                    generation: k,
                    cluster: None,
                    kind: ViolationKind::ClusterCount { expected, found: clusters.len() },
                });
            }
        }
        if let Some(expected) = expected_size {
            for (j, c) in clusters.iter().enumerate() {
                if c.len() != expected {
                    violations.push(Violation {
                        generation: k,
                        cluster: Some(j),
                        kind: ViolationKind::ClusterSize { expected, found: c.len() },
                    });
                }
            }
        }

        let mut owner = vec![usize::MAX; leaves];
        let mut partition_ok = true;
        for (j, c) in clusters.iter().enumerate() {
            for &leaf in c {
                if leaf >= leaves || owner[leaf] != usize::MAX {
                    partition_ok = false;
                } else {
                    owner[leaf] = j;
                }
            }
        }
        if !partition_ok || owner.contains(&usize::MAX) {
            violations.push(Violation {
                generation: k,
                cluster: None,
                kind: ViolationKind::NotAPartition,
            });
        }

        if k > 0 && !parent_of_leaf.is_empty() {
            for (j, c) in clusters.iter().enumerate() {
                let mut parents = c.iter().filter(|&&l| l < leaves).map(|&l| parent_of_leaf[l]);
                let first = parents.next();
                if first.is_none() || parents.any(|p| Some(p) != first) || first == Some(usize::MAX) {
                    violations.push(Violation {
                        generation: k,
                        cluster: Some(j),
                        kind: ViolationKind::NotNested,
                    });
                }
            }
        }
        parent_of_leaf = owner;
    }

    violations.sort_by_key(|v| (v.generation, v.cluster.map_or(0, |c| c + 1)));
    HierarchyCheck {
        valid: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{average_path_length_exact, clustering_coefficient};

    #[test]
    fn complete() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(average_path_length_exact(&k4).unwrap(), 1.0);
        assert_eq!(clustering_coefficient(&k4), 1.0);
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(clustering_coefficient(&complete_graph(5).unwrap()), 1.0);
        assert_eq!(complete_graph(0), Err(GeneratorError::NoNodes));
    }

    #[test]
    fn lattice() {
        let c6 = ring_lattice(6, 2).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert_eq!(clustering_coefficient(&c6), 0.0);
        let r = ring_lattice(20, 4).unwrap();
        assert!((clustering_coefficient(&r) - 0.5).abs() < 1e-15);
        let r = ring_lattice(10, 4).unwrap();
        assert!((0..10).all(|u| r.degree(u) == 4));
        for (n, k) in [(4, 4), (10, 3), (10, 0), (5, 6)] {
            assert_eq!(ring_lattice(n, k), Err(GeneratorError::InvalidDegree { n, k }));
        }
    }

    #[test]
    fn ws_degenerate_cases() {
        assert_eq!(watts_strogatz(30, 4, 0.0, 9).unwrap(), ring_lattice(30, 4).unwrap());
        let a = watts_strogatz(200, 6, 0.2, 42).unwrap();
        let b = watts_strogatz(200, 6, 0.2, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, watts_strogatz(200, 6, 0.2, 43).unwrap());
        assert_eq!(a.edge_count(), 600);
        assert_eq!(watts_strogatz(200, 6, 1.5, 0), Err(GeneratorError::InvalidProbability(1.5)));
    }

    #[test]
    fn ws_on_nearly_complete_graph_terminates() {
        let g = watts_strogatz(5, 4, 1.0, 1).unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn hierarchy_3_3() {
        let h = nested_hierarchy(3, 3).unwrap();
        assert_eq!(h.leaf_count(), 27);
        let counts: Vec<_> = h.generations.iter().map(Vec::len).collect();
        let sizes: Vec<_> = h.generations.iter().map(|g| g[0].len()).collect();
        assert_eq!(counts, [1, 3, 9, 27]);
        assert_eq!(sizes, [27, 9, 3, 1]);
        assert!(verify_hierarchy(&h).valid);
    }

    #[test]
    fn hierarchy_single_generation() {
        let h = nested_hierarchy(5, 1).unwrap();
        assert_eq!(h.generations[0], vec![(0..5).collect::<Vec<_>>()]);
        assert_eq!(h.generations[1].len(), 5);
        assert!(verify_hierarchy(&h).valid);
    }

    #[test]
    fn hierarchy_errors() {
        assert!(matches!(nested_hierarchy(1, 3), Err(GeneratorError::InvalidShape { .. })));
        assert!(matches!(nested_hierarchy(3, 0), Err(GeneratorError::InvalidShape { .. })));
        assert!(matches!(nested_hierarchy(10, 40), Err(GeneratorError::Overflow { .. })));
        assert!(matches!(nested_hierarchy(2, 200), Err(GeneratorError::Overflow { .. })));
    }

    #[test]
    fn moved_leaf_is_reported_at_generation_one() {
        let mut h = nested_hierarchy(3, 3).unwrap();
        // Leaf 8 leaves generation-1 cluster 0 for cluster 1.
        h.generations[1][0].retain(|&l| l != 8);
        h.generations[1][1].push(8);
        h.generations[1][1].sort_unstable();
        let check = verify_hierarchy(&h);
        assert!(!check.valid);
        assert_eq!(check.violations[0].generation, 1);
        assert!(check
            .violations
            .iter()
            .any(|v| v.generation == 2 && v.kind == ViolationKind::NotNested));
    }

    #[test]
    fn nested_text_round_trip() {
        let h = nested_hierarchy(2, 3).unwrap();
        let text = h.to_nested_text();
        assert_eq!(text, "[[[0,1],[2,3]],[[4,5],[6,7]]]");
        assert_eq!(ClusterHierarchy::from_nested_text(&text).unwrap(), h);
        assert!(ClusterHierarchy::from_nested_text("[[0,1],2]").is_err());
        assert!(ClusterHierarchy::from_nested_text("7").is_err());
    }
}
