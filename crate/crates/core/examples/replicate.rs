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

// Recompute every published figure and print the pass/fail table.
//
// ```bash
// cargo run --release -p netentropy --example replicate
// ```

use netentropy::replication::run_all;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = run_all();
    print!("{}", report.to_text());
    if !report.all_pass {
        return Err("some scenarios failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
