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

//! Every example under `examples/` runs as part of the test suite.

mod measure_graph {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/measure_graph.rs"));
}

#[test]
fn measure_graph_runs() {
    measure_graph::run_example().expect("measure_graph example should run");
}

mod entropy_calculator {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/entropy_calculator.rs"));
}

#[test]
fn entropy_calculator_runs() {
    entropy_calculator::run_example().expect("entropy_calculator example should run");
}

mod small_world_sweep {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/small_world_sweep.rs"));
}

#[test]
fn small_world_sweep_runs() {
    small_world_sweep::run_example().expect("small_world_sweep example should run");
}

mod sampled_path_length {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sampled_path_length.rs"));
}

#[test]
fn sampled_path_length_runs() {
    sampled_path_length::run_example().expect("sampled_path_length example should run");
}

mod entropy_dating {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/entropy_dating.rs"));
}

#[test]
fn entropy_dating_runs() {
    entropy_dating::run_example().expect("entropy_dating example should run");
}

mod lexical_growth {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lexical_growth.rs"));
}

#[test]
fn lexical_growth_runs() {
    lexical_growth::run_example().expect("lexical_growth example should run");
}

mod network_value {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/network_value.rs"));
}

#[test]
fn network_value_runs() {
    network_value::run_example().expect("network_value example should run");
}

mod cluster_hierarchy {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cluster_hierarchy.rs"));
}

#[test]
fn cluster_hierarchy_runs() {
    cluster_hierarchy::run_example().expect("cluster_hierarchy example should run");
}

mod replicate {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/replicate.rs"));
}

#[test]
fn replicate_runs() {
    replicate::run_example().expect("replicate example should run");
}
