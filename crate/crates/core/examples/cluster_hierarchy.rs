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

// Nested cluster generations: 27 nodes in a row hide three generations of
// clusters of three.
//
// ```bash
// cargo run -p netentropy --example cluster_hierarchy
// ```

use netentropy::entropy::eta;
use netentropy::generators::{nested_hierarchy, verify_hierarchy, ClusterHierarchy};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = nested_hierarchy(3, 3)?;
    for (k, generation) in h.generations.iter().enumerate() {
        println!("generation {k}: {} clusters of {}", generation.len(), generation[0].len());
    }
    println!("eta(27, 3) = {}", eta(h.leaf_count() as f64, 3.0)?);

    let text = h.to_nested_text();
    println!("nested form: {text}");
    let parsed = ClusterHierarchy::from_nested_text(&text)?;
    println!("re-parsed hierarchy valid: {}", verify_hierarchy(&parsed).valid);

    // Move leaf 8 into the second first-generation cluster.
    let mut broken = h.clone();
    broken.generations[1][0].retain(|&leaf| leaf != 8);
    broken.generations[1][1].insert(0, 8);
    let check = verify_hierarchy(&broken);
    println!("after moving leaf 8: valid = {}", check.valid);
    for v in check.violations.iter().take(4) {
        println!("  generation {} cluster {:?}: {:?}", v.generation, v.cluster, v.kind);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
