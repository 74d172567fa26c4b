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

// Sampled versus exact average path length on a rewired lattice.
//
// ```bash
// cargo run --release -p netentropy --example sampled_path_length
// ```

use netentropy::generators::watts_strogatz;
use netentropy::metrics::{average_path_length_exact, average_path_length_sampled};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = watts_strogatz(2000, 10, 0.05, 11)?;
    let exact = average_path_length_exact(&g)?;
    println!("exact L = {exact:.5}");
    for sources in [10, 50, 200, 1000, 2000] {
        let sampled = average_path_length_sampled(&g, sources, 42)?;
        let gap = (sampled - exact).abs() / exact * 100.0;
        println!("{sources:>5} sources: L = {sampled:.5} ({gap:.3}% off)");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
