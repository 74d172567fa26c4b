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

// Entropy dating: how long a network process must have run, given its
// growth rate.
//
// ```bash
// cargo run -p netentropy --example entropy_dating
// ```

use netentropy::dynamics::{date_duration, exponential_rate, linear_duration, Rate, TimeUnit};
use netentropy::network_entropy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Brain entropy now and 3 Myr ago, with a third as many neurons.
    let modern = network_entropy(1e11, 2.49, 0.53)?.entropy;
    let early = network_entropy(1e11 / 3.0, 2.49, 0.53)?.entropy;
    let rate = exponential_rate(early, modern, 3.0, TimeUnit::MillionYears)?.rate;
    println!("H(early brain) = {early:.4}, H(modern brain) = {modern:.4}");
    println!("entropy growth: {:.5} per Myr", rate.value);

    let quoted = Rate::new(0.01478, TimeUnit::MillionYears);
    let exponential = date_duration(quoted, 1.0, modern)?;
    let linear = linear_duration(quoted, modern)?;
    println!("from entropy 1 to {modern:.2}:");
    println!("  exponential growth: {:.1} Myr", exponential.duration);
    println!("  linear reading H/m: {:.1} Myr", linear.duration);

    // A 100-signal proto-lexicon growing at 5.66% per thousand years.
    let basal = Rate::new(0.0566, TimeUnit::Millennium).to_unit(TimeUnit::Year);
    let origin = date_duration(basal, 100.0, 616_500.0)?;
    println!("100 signals -> 616,500 words: {:.0} years", origin.duration);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
