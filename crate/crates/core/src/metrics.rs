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

//! Average shortest path length `L` and clustering coefficient `C`.
//!
//! `L` is the mean BFS distance over unordered pairs of distinct nodes, so
//! a complete graph has `L = 1`. `C` is the mean over all nodes of the local
//! fraction of connected neighbor pairs; nodes of degree below two count as
//! zero rather than being skipped.
//!
//! Distance totals are accumulated as integers, so parallel BFS sweeps give
//! bit-identical results regardless of scheduling.

use std::collections::VecDeque;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricsError {
    #[error("graph is disconnected ({components} components); path length is undefined")]
    DisconnectedGraph { components: usize },
    #[error("path length needs at least two nodes, graph has {0}")]
    TooFewNodes(usize),
    #[error("sample size {requested} must be between 1 and the node count {nodes}")]
    InvalidSampleSize { requested: usize, nodes: usize },
}

/// Default node count above which `Sampling::Auto` switches to sampling.
pub const AUTO_EXACT_LIMIT: usize = 10_000;
/// Default number of BFS sources when sampling.
pub const DEFAULT_SAMPLE_SOURCES: usize = 1_000;

const UNREACHED: u32 = u32::MAX;

/// BFS from `source`; returns the distance total and the number of nodes
/// reached (including the source).
fn bfs_total(g: &Graph, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) -> (u64, usize) {
    dist.fill(UNREACHED);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    let mut total = 0u64;
    let mut reached = 1usize;
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHED {
                dist[v] = next;
                total += u64::from(next);
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    (total, reached)
}

/// Shortest-path distances from `source`; `None` for unreachable nodes.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![UNREACHED; g.node_count()];
    let mut queue = VecDeque::new();
    bfs_total(g, source, &mut dist, &mut queue);
    dist.into_iter().map(|d| (d != UNREACHED).then_some(d)).collect()
}

fn total_distance_from(g: &Graph, sources: &[usize]) -> Result<u64, MetricsError> {
    let n = g.node_count();
    let totals: Vec<(u64, usize)> = sources
        .par_iter()
        .map_init(
            || (vec![UNREACHED; n], VecDeque::with_capacity(n)),
            |(dist, queue), &s| bfs_total(g, s, dist, queue),
        )
        .collect();
    let mut sum = 0u64;
    for (total, reached) in totals {
        if reached != n {
            return Err(MetricsError::DisconnectedGraph {
                components: g.connected_components().len(),
            });
        }
        sum += total;
    }
    Ok(sum)
}

fn check_path_length_input(g: &Graph) -> Result<(), MetricsError> {
    if g.node_count() < 2 {
        return Err(MetricsError::TooFewNodes(g.node_count()));
    }
    Ok(())
}

/// Exact `L`: one BFS per node.
pub fn average_path_length_exact(g: &Graph) -> Result<f64, MetricsError> {
    check_path_length_input(g)?;
    let n = g.node_count();
    let sources: Vec<usize> = (0..n).collect();
    let total = total_distance_from(g, &sources)?;
    Ok(total as f64 / (n as f64 * (n - 1) as f64))
}

/// Estimate of `L` from `sources` distinct BFS roots drawn with a seeded
/// ChaCha8 stream. With `sources == n` the result equals the exact value.
pub fn average_path_length_sampled(g: &Graph, sources: usize, seed: u64) -> Result<f64, MetricsError> {
    check_path_length_input(g)?;
    let n = g.node_count();
    if sources == 0 || sources > n {
        return Err(MetricsError::InvalidSampleSize { requested: sources, nodes: n });
    }
    let mut roots = if sources == n {
        (0..n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        index::sample(&mut rng, n, sources).into_vec()
    };
    roots.sort_unstable();
    let total = total_distance_from(g, &roots)?;
    Ok(total as f64 / (sources as f64 * (n - 1) as f64))
}

/// Number of edges among the neighbors of `node`.
fn neighbor_links(g: &Graph, node: usize) -> usize {
    let nbrs = g.neighbors(node);
    let mut links = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        // Count b > a among nbrs that are adjacent to a, by merging the two
        // sorted lists.
        let rest = &nbrs[i + 1..];
        let adj = g.neighbors(a);
        let (mut x, mut y) = (0, 0);
        while x < rest.len() && y < adj.len() {
            match rest[x].cmp(&adj[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    links += 1;
                    x += 1;
                    y += 1;
                }
            }
        }
    }
    links
}

/// Local clustering coefficient of every node.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    (0..g.node_count())
        .into_par_iter()
        .map(|u| {
            let k = g.degree(u);
            if k < 2 {
                0.0
            } else {
                let possible = (k * (k - 1) / 2) as f64;
                neighbor_links(g, u) as f64 / possible
            }
        })
        .collect()
}

/// Mean local clustering coefficient.
///
/// Local values are summed in sorted order, so relabeling the nodes gives a
/// bit-identical result.
pub fn clustering_coefficient(g: &Graph) -> f64 {
    let mut locals = local_clustering(g);
    locals.sort_unstable_by(f64::total_cmp);
    locals.iter().sum::<f64>() / locals.len() as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentPolicy {
    /// Measure the largest connected component and flag the restriction.
    Largest,
    /// Fail on disconnected input.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    Exact,
    Sampled { sources: usize, seed: u64 },
    /// Exact up to `exact_limit` nodes, sampled beyond.
    Auto { exact_limit: usize, sources: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsConfig {
    pub component_policy: ComponentPolicy,
    pub sampling: Sampling,
}

impl Default for StatsConfig {
    fn default() -> Self {
        StatsConfig {
            component_policy: ComponentPolicy::Largest,
            sampling: Sampling::Auto {
                exact_limit: AUTO_EXACT_LIMIT,
                sources: DEFAULT_SAMPLE_SOURCES,
                seed: 0,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PathLengthMethod {
    Exact,
    Sampled { sources: usize, seed: u64 },
}

/// Set when the statistics describe only the largest component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRestriction {
    pub original_nodes: usize,
    pub components: usize,
}

/// The measured macrostate `(n, L, C)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkStats {
    pub n: usize,
    pub path_length: f64,
    pub clustering: f64,
    pub method: PathLengthMethod,
    pub restricted_to_largest_component: Option<ComponentRestriction>,
}

pub fn network_stats(g: &Graph, config: &StatsConfig) -> Result<NetworkStats, MetricsError> {
    let components = g.connected_components().len();
    let (measured, restriction) = if components > 1 {
        match config.component_policy {
            ComponentPolicy::Strict => return Err(MetricsError::DisconnectedGraph { components }),
            ComponentPolicy::Largest => (
                g.largest_component(),
                Some(ComponentRestriction {
                    original_nodes: g.node_count(),
                    components,
                }),
            ),
        }
    } else {
        (g.clone(), None)
    };

    let n = measured.node_count();
    let method = match config.sampling {
        Sampling::Exact => PathLengthMethod::Exact,
        Sampling::Sampled { sources, seed } => PathLengthMethod::Sampled { sources, seed },
        Sampling::Auto { exact_limit, sources, seed } => {
            if n <= exact_limit {
                PathLengthMethod::Exact
            } else {
                PathLengthMethod::Sampled { sources: sources.min(n), seed }
            }
        }
    };
    let path_length = match method {
        PathLengthMethod::Exact => average_path_length_exact(&measured)?,
        PathLengthMethod::Sampled { sources, seed } => average_path_length_sampled(&measured, sources, seed)?,
    };

    Ok(NetworkStats {
        n,
        path_length,
        clustering: clustering_coefficient(&measured),
        method,
        restricted_to_largest_component: restriction,
    })
}
