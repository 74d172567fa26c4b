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

// Network entropy for published (n, L, C) triples, the ideal network, and
// the Shannon-entropy form of the same number.
//
// ```bash
// cargo run -p netentropy --example entropy_calculator
// ```

use std::f64::consts::E;

use netentropy::entropy::{eta, network_entropy, shannon_entropy, Distribution};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let networks = [
        ("human brain", 1e11, 2.49, 0.53),
        ("English speakers, 1989", 350e6, 3.65, 0.79),
        ("English speakers, 1657", 5_281_347.0, 3.65, 0.79),
        ("English lexicon, 1989", 616_000.0, 2.67, 0.437),
        ("English lexicon, 1657", 200_000.0, 2.67, 0.437),
    ];
    println!("{:<24} {:>14} {:>6} {:>6} {:>9} {:>9} {:>9}", "network", "n", "L", "C", "eta", "H", "ln n");
    for (name, n, l, c) in networks {
        let r = network_entropy(n, l, c)?;
        println!(
            "{name:<24} {n:>14.0} {l:>6.2} {c:>6.3} {:>9.4} {:>9.4} {:>9.4}",
            r.eta, r.entropy, r.ideal_entropy
        );
    }

    // 27 leaves in clusters of three: three generations.
    println!("\neta(27, 3) = {}", eta(27.0, 3.0)?);

    let ideal = network_entropy(1e6, E, 1.0)?;
    println!("ideal network, n = 1e6: H = {:.6} = ln(1e6) = {:.6}", ideal.entropy, 1e6f64.ln());

    // A uniform source over n symbols with log base L and constant C has the
    // same entropy as the network.
    let n = 50_000;
    let shannon = shannon_entropy(&Distribution::uniform(n)?, 2.67, 0.437)?;
    let network = network_entropy(n as f64, 2.67, 0.437)?.entropy;
    println!("uniform source over {n} symbols: {shannon:.10} vs network {network:.10}");

    match network_entropy(4.0, 1.0, 1.0) {
        Err(e) => println!("complete graph: {e}"),
        Ok(_) => unreachable!("L = 1 has no logarithm"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
