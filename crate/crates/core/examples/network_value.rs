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

// Value of adding members to a network: entropy grows with log(1 + A/n1)
// rather than with n^2.
//
// ```bash
// cargo run -p netentropy --example network_value
// ```

use netentropy::entropy::value_delta;
use netentropy::network_entropy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (l, c) = (3.65, 0.79);
    let n1 = 1_000_000.0;
    println!("network of {n1} members, L = {l}, C = {c}");
    println!("{:>12} {:>12} {:>14}", "added", "entropy gain", "n^2 ratio");
    for added in [0.0, 1e4, 1e5, 1e6, 1e7, 1e8] {
        let gain = value_delta(1.0, c, l, n1, added)?;
        let metcalfe = ((n1 + added) / n1).powi(2);
        println!("{added:>12.0} {gain:>12.5} {metcalfe:>14.1}");
    }

    let gained = value_delta(1.0, c, l, 5_281_347.0, 350e6 - 5_281_347.0)?;
    let before = network_entropy(5_281_347.0, l, c)?.entropy;
    let after = network_entropy(350e6, l, c)?.entropy;
    println!("English speakers 1657 -> 1989: +{gained:.4} (= {after:.4} - {before:.4})");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
