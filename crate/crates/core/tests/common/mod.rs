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

//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the metric code it is used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use netentropy::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense adjacency matrix read straight from the edge iterator.
pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Floyd–Warshall mean over unordered distinct pairs; `None` if some pair
/// is unreachable.
pub fn floyd_warshall_mean(g: &Graph) -> Option<f64> {
    let n = g.node_count();
    let adj = adjacency_matrix(g);
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let mut total = 0u64;
    let mut pairs = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if d[i][j] >= inf {
                return None;
            }
            total += d[i][j];
            pairs += 1;
        }
    }
    Some(total as f64 / pairs as f64)
}

/// Mean local clustering by enumerating every neighbor pair.
pub fn triangle_clustering(g: &Graph) -> f64 {
    let n = g.node_count();
    let adj = adjacency_matrix(g);
    let mut sum = 0.0;
    for v in 0..n {
        let nbrs: Vec<usize> = (0..n).filter(|&u| adj[v][u]).collect();
        let k = nbrs.len();
        if k < 2 {
            continue;
        }
        let mut closed = 0usize;
        for a in 0..k {
            for b in a + 1..k {
                if adj[nbrs[a]][nbrs[b]] {
                    closed += 1;
                }
            }
        }
        sum += closed as f64 / (k * (k - 1) / 2) as f64;
    }
    sum / n as f64
}

/// Components by repeated reachability closure over the adjacency matrix.
pub fn brute_force_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let adj = adjacency_matrix(g);
    let mut reach = adj.clone();
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if parts.iter().any(|p| p.contains(&i)) {
            continue;
        }
        parts.push((0..n).filter(|&j| reach[i][j]).collect());
    }
    parts.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    parts
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(seed: u64, max_nodes: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_nodes);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let density: f64 = rng.gen_range(0.0..0.3);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::with_numeric_labels(n, edges).unwrap()
}

pub fn relative_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(f64::MIN_POSITIVE)
}
