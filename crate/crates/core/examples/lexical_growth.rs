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

// Lexical growth as a network process: the observed growth of the English
// lexicon, the multiplier contributed by the speaking population and the
// word network, and an independent check via glottochronology.
//
// ```bash
// cargo run -p netentropy --example lexical_growth
// ```

use netentropy::dynamics::{
    basal_rate, exponential_rate_between, glotto_adjust, mean_entropy, per_daughter_rate, process_rate, TimeUnit,
};
use netentropy::entropy::conceptual_multiplier;
use netentropy::network_entropy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let observed = exponential_rate_between(200_000.0, 616_000.0, 1657.0, 1989.0, TimeUnit::Year)?;
    println!(
        "dictionary growth {}-{}: {:.3}% per decade",
        observed.window.0,
        observed.window.1,
        observed.rate.percent_per(TimeUnit::Decade)
    );

    let speakers = |n| network_entropy(n, 3.65, 0.79).map(|r| r.entropy);
    let words = |n| network_entropy(n, 2.67, 0.437).map(|r| r.entropy);
    let social = mean_entropy(speakers(5_281_347.0)?, speakers(350e6)?);
    let conceptual = mean_entropy(words(200_000.0)?, words(616_000.0)?);
    let multiplier = conceptual_multiplier(social, conceptual)?;
    println!("mean entropies: speakers {social:.3}, words {conceptual:.3}; multiplier {multiplier:.2}");

    let basal = basal_rate(observed.rate, multiplier)?;
    println!("basal lexical growth: {:.3}% per thousand years", basal.percent_per(TimeUnit::Millennium));
    let back = process_rate(basal, multiplier);
    assert!((back.value - observed.rate.value).abs() < 1e-15);

    let adjusted = glotto_adjust(0.14, 7037.0, 8700.0)?;
    let daughter = per_daughter_rate(adjusted);
    println!(
        "glottochronology: {:.2}% pairwise divergence per kyr, {:.2}% per daughter",
        adjusted * 100.0,
        daughter * 100.0
    );
    let gap = (basal.to_unit(TimeUnit::Millennium).value - daughter).abs() / daughter;
    println!("relative gap between the two estimates: {:.2}%", gap * 100.0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
