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

// Measure n, L and C of an edge list and turn them into a network entropy.
//
// ```bash
// cargo run -p netentropy --example measure_graph
// ```

use netentropy::metrics::{network_stats, StatsConfig};
use netentropy::{network_entropy, Graph};

/// Two five-node communities joined by a bridge, plus a detached pair that
/// the default policy drops.
const EDGES: &str = "\
# community one
ann bob
ann cat
bob cat
cat dan
dan eve
eve ann
# bridge
eve fay
# community two
fay gus
gus hal
hal fay
hal ivy
ivy jon
jon fay
# satellite
kim lee
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graph = Graph::parse_edge_list(EDGES)?;
    println!("parsed {} nodes, {} edges", graph.node_count(), graph.edge_count());
    for (i, part) in graph.connected_components().iter().enumerate() {
        let names: Vec<_> = part.iter().map(|&u| graph.label(u)).collect();
        println!("  component {i}: {}", names.join(" "));
    }

    let stats = network_stats(&graph, &StatsConfig::default())?;
    if let Some(r) = stats.restricted_to_largest_component {
        println!("measured the largest of {} components ({} of {} nodes)", r.components, stats.n, r.original_nodes);
    }
    println!("n = {}, L = {:.4}, C = {:.4}", stats.n, stats.path_length, stats.clustering);

    let report = network_entropy(stats.n as f64, stats.path_length, stats.clustering)?;
    println!("eta = log_L(n) = {:.4}", report.eta);
    println!("H = C * eta = {:.4}", report.entropy);
    println!("ideal ln(n) = {:.4}", report.ideal_entropy);
    assert!(report.entropy <= report.eta);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
