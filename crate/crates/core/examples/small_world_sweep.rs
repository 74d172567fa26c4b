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

// Watts–Strogatz sweep: a little rewiring collapses path length while
// clustering barely moves.
//
// ```bash
// cargo run --release -p netentropy --example small_world_sweep
// ```

use netentropy::generators::{ring_lattice, watts_strogatz};
use netentropy::metrics::{average_path_length_exact, clustering_coefficient};
use netentropy::network_entropy;

const N: usize = 1000;
const K: usize = 10;
const SEEDS: [u64; 3] = [1, 2, 3];

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lattice = ring_lattice(N, K)?;
    let l0 = average_path_length_exact(&lattice)?;
    let c0 = clustering_coefficient(&lattice);
    println!("ring lattice n = {N}, k = {K}: L(0) = {l0:.3}, C(0) = {c0:.4}");
    println!("{:>8} {:>9} {:>9} {:>9}", "p", "L/L(0)", "C/C(0)", "H");

    for p in [0.0, 0.001, 0.003, 0.01, 0.03, 0.1, 0.3, 1.0] {
        let (mut l, mut c) = (0.0, 0.0);
        for seed in SEEDS {
            let g = watts_strogatz(N, K, p, seed)?;
            l += average_path_length_exact(&g)?;
            c += clustering_coefficient(&g);
        }
        l /= SEEDS.len() as f64;
        c /= SEEDS.len() as f64;
        let h = network_entropy(N as f64, l, c)?.entropy;
        println!("{p:>8} {:>9.4} {:>9.4} {h:>9.4}", l / l0, c / c0);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
