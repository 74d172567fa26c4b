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

//! Published numeric results, encoded as scenarios and recomputed through
//! the library.
//!
//! Each scenario names its inputs, the chain of operations it runs and the
//! expected value with a tolerance. Informational rows are computed and
//! reported but do not affect the overall verdict.

use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::dynamics::{
    basal_rate, date_duration, exponential_rate, glotto_adjust, mean_entropy, linear_duration,
    per_daughter_rate, Rate, TimeUnit,
};
use crate::format::sig6;
use crate::entropy::{conceptual_multiplier, eta, network_entropy, value_delta};
use crate::generators::{nested_hierarchy, verify_hierarchy, watts_strogatz};
use crate::metrics::{average_path_length_exact, clustering_coefficient};

/// Human brain: neurons, path length and clustering.
pub const BRAIN_NEURONS: f64 = 1e11;
pub const BRAIN_PATH_LENGTH: f64 = 2.49;
pub const BRAIN_CLUSTERING: f64 = 0.53;
/// Elapsed time for the early-brain comparison, in Myr.
pub const BRAIN_WINDOW_MYR: f64 = 3.0;

/// Actor network constants used for English-speaking populations.
pub const SOCIAL_PATH_LENGTH: f64 = 3.65;
pub const SOCIAL_CLUSTERING: f64 = 0.79;
pub const SPEAKERS_1657: f64 = 5_281_347.0;
pub const SPEAKERS_1989: f64 = 350e6;

/// English word network constants.
pub const LEXICON_PATH_LENGTH: f64 = 2.67;
pub const LEXICON_CLUSTERING: f64 = 0.437;
pub const WORDS_1657: f64 = 200_000.0;
pub const WORDS_1989: f64 = 616_000.0;
pub const WORDS_1989_ORIGIN: f64 = 616_500.0;
pub const LEXICAL_WINDOW_YEARS: f64 = 1989.0 - 1657.0;

/// Alternative word network measurement.
pub const ALT_LEXICON_PATH_LENGTH: f64 = 3.16;
pub const ALT_LEXICON_CLUSTERING: f64 = 0.53;

pub const SWADESH_DIVERGENCE_PER_KYR: f64 = 0.14;
pub const SWADESH_AGE_YEARS: f64 = 7037.0;
pub const GRAY_ATKINSON_AGE_YEARS: f64 = 8700.0;
pub const PROTO_LEXICON_SIGNALS: f64 = 100.0;

/// Rounded intermediate values as quoted in the text.
pub const QUOTED_NEURO_RATE_PER_MYR: f64 = 0.01478;
pub const QUOTED_MULTIPLIER: f64 = 60.94;
pub const QUOTED_BASAL_RATE_PER_KYR: f64 = 0.0566;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Tolerance {
    Absolute(f64),
    Relative(f64),
    /// Inclusive interval check; `expected` is informational.
    Range(f64, f64),
    /// Inclusive lower bound; `expected` is informational.
    AtLeast(f64),
}

impl Tolerance {
    pub fn accepts(self, computed: f64, expected: f64) -> bool {
        if !computed.is_finite() {
            return false;
        }
        match self {
            Tolerance::Absolute(t) => (computed - expected).abs() <= t,
            Tolerance::Relative(t) => (computed - expected).abs() <= t * expected.abs(),
            Tolerance::Range(lo, hi) => (lo..=hi).contains(&computed),
            Tolerance::AtLeast(lo) => computed >= lo,
        }
    }

    fn describe(self) -> String {
        match self {
            Tolerance::Absolute(t) => format!("±{}", sig6(t)),
            Tolerance::Relative(t) => format!("±{}%", t * 100.0),
            Tolerance::Range(lo, hi) => format!("[{lo}, {hi}]"),
            Tolerance::AtLeast(lo) => format!(">= {lo}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    Check,
    Informational,
}

pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    /// Where each input constant comes from.
    pub provenance: &'static str,
    pub pipeline: &'static str,
    pub expected: f64,
    pub tolerance: Tolerance,
    pub kind: RowKind,
    compute: fn() -> Result<f64, String>,
}

impl Scenario {
    pub fn run(&self) -> ScenarioOutcome {
        let (computed, error) = match (self.compute)() {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(e)),
        };
        let pass = match computed {
            Some(v) => self.tolerance.accepts(v, self.expected),
            None => false,
        };
        ScenarioOutcome {
            id: self.id.to_string(),
            description: self.description.to_string(),
            pipeline: self.pipeline.to_string(),
            computed,
            expected: self.expected,
            delta: computed.map(|v| v - self.expected),
            tolerance: self.tolerance,
            kind: self.kind,
            pass,
            error,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioOutcome {
    pub id: String,
    pub description: String,
    pub pipeline: String,
    pub computed: Option<f64>,
    pub expected: f64,
    pub delta: Option<f64>,
    pub tolerance: Tolerance,
    pub kind: RowKind,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub all_pass: bool,
    pub scenarios: Vec<ScenarioOutcome>,
}

impl Report {
    pub fn get(&self, id: &str) -> Option<&ScenarioOutcome> {
        self.scenarios.iter().find(|s| s.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let width = self.scenarios.iter().map(|s| s.id.len()).max().unwrap_or(2).max(2);
        let mut out = String::new();
        writeln!(
            out,
            "{:<width$}  {:>16}  {:>14}  {:>12}  {:<14}  result",
            "id", "computed", "expected", "delta", "tolerance"
        )
        .unwrap();
        for s in &self.scenarios {
            let verdict = match (s.kind, s.pass) {
                (RowKind::Informational, _) => "info",
                (RowKind::Check, true) => "PASS",
                (RowKind::Check, false) => "FAIL",
            };
            let computed = s.computed.map_or_else(|| "error".to_string(), sig6);
            let delta = s.delta.map_or_else(|| "-".to_string(), |d| format!("{d:+.3e}"));
            writeln!(
                out,
                "{:<width$}  {:>16}  {:>14}  {:>12}  {:<14}  {}",
                s.id,
                computed,
                sig6(s.expected),
                delta,
                s.tolerance.describe(),
                verdict
            )
            .unwrap();
            if let Some(e) = &s.error {
                writeln!(out, "{:<width$}    error: {e}", "").unwrap();
            }
        }
        writeln!(out, "overall: {}", if self.all_pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

fn h(n: f64, l: f64, c: f64) -> Result<f64, String> {
    network_entropy(n, l, c).map(|r| r.entropy).map_err(|e| e.to_string())
}

fn brain_entropy() -> Result<f64, String> {
    h(BRAIN_NEURONS, BRAIN_PATH_LENGTH, BRAIN_CLUSTERING)
}

fn early_brain_entropy() -> Result<f64, String> {
    h(BRAIN_NEURONS / 3.0, BRAIN_PATH_LENGTH, BRAIN_CLUSTERING)
}

/// Neuronal entropy growth rate per Myr, from the unrounded entropies.
fn neuro_rate() -> Result<f64, String> {
    let r = exponential_rate(early_brain_entropy()?, brain_entropy()?, BRAIN_WINDOW_MYR, TimeUnit::MillionYears)
        .map_err(|e| e.to_string())?;
    Ok(r.rate.value)
}

fn neuro_rate_rounded_inputs() -> Result<f64, String> {
    let r = exponential_rate(14.077, 14.71, BRAIN_WINDOW_MYR, TimeUnit::MillionYears).map_err(|e| e.to_string())?;
    Ok(r.rate.value)
}

fn population_entropies() -> Result<(f64, f64), String> {
    Ok((
        h(SPEAKERS_1657, SOCIAL_PATH_LENGTH, SOCIAL_CLUSTERING)?,
        h(SPEAKERS_1989, SOCIAL_PATH_LENGTH, SOCIAL_CLUSTERING)?,
    ))
}

fn lexicon_entropies() -> Result<(f64, f64), String> {
    Ok((
        h(WORDS_1657, LEXICON_PATH_LENGTH, LEXICON_CLUSTERING)?,
        h(WORDS_1989, LEXICON_PATH_LENGTH, LEXICON_CLUSTERING)?,
    ))
}

/// Product of the mean population entropy and the mean lexicon entropy.
pub fn lexical_multiplier() -> Result<f64, String> {
    let (p0, p1) = population_entropies()?;
    let (l0, l1) = lexicon_entropies()?;
    conceptual_multiplier(mean_entropy(p0, p1), mean_entropy(l0, l1)).map_err(|e| e.to_string())
}

/// Observed English lexical growth rate, per year.
pub fn lexical_rate() -> Result<Rate, String> {
    exponential_rate(WORDS_1657, WORDS_1989, LEXICAL_WINDOW_YEARS, TimeUnit::Year)
        .map(|r| r.rate)
        .map_err(|e| e.to_string())
}

/// Basal lexical growth rate per year, using the quoted multiplier.
pub fn lexical_basal_rate() -> Result<Rate, String> {
    basal_rate(lexical_rate()?, QUOTED_MULTIPLIER).map_err(|e| e.to_string())
}

/// Per-daughter divergence per kyr after rescaling to the newer age.
pub fn glotto_per_daughter() -> Result<f64, String> {
    glotto_adjust(SWADESH_DIVERGENCE_PER_KYR, SWADESH_AGE_YEARS, GRAY_ATKINSON_AGE_YEARS)
        .map(per_daughter_rate)
        .map_err(|e| e.to_string())
}

fn small_world_ratios() -> Result<(f64, f64), String> {
    static RATIOS: OnceLock<Result<(f64, f64), String>> = OnceLock::new();
    RATIOS.get_or_init(measure_small_world_ratios).clone()
}

fn measure_small_world_ratios() -> Result<(f64, f64), String> {
    let lattice = watts_strogatz(1000, 10, 0.0, 0).map_err(|e| e.to_string())?;
    let l0 = average_path_length_exact(&lattice).map_err(|e| e.to_string())?;
    let c0 = clustering_coefficient(&lattice);
    let (mut l_sum, mut c_sum) = (0.0, 0.0);
    for seed in SMALL_WORLD_SEEDS {
        let g = watts_strogatz(1000, 10, 0.01, seed).map_err(|e| e.to_string())?;
        l_sum += average_path_length_exact(&g).map_err(|e| e.to_string())?;
        c_sum += clustering_coefficient(&g);
    }
    let k = SMALL_WORLD_SEEDS.len() as f64;
    Ok((c_sum / k / c0, l_sum / k / l0))
}

/// Seeds averaged for the small-world check.
pub const SMALL_WORLD_SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

/// All scenarios, ordered by id.
pub fn scenarios() -> Vec<Scenario> {
    use RowKind::*;
    use Tolerance::*;
    let mut all = vec![
        Scenario {
            id: "brain-1989",
            description: "entropy of the modern human brain",
            provenance: "n = 1e11 neurons; L = 2.49, C = 0.53 from human brain functional network measurements",
            pipeline: "network_entropy(1e11, 2.49, 0.53).H",
            expected: 14.71,
            tolerance: Absolute(0.01),
            kind: Check,
            compute: brain_entropy,
        },
        Scenario {
            id: "brain-early",
            description: "entropy of a brain with one third the neurons",
            provenance: "n = 1e11 / 3 (hypothetical ancestor 3 Myr ago); brain L and C",
            pipeline: "network_entropy(1e11/3, 2.49, 0.53).H",
            expected: 14.077,
            tolerance: Absolute(0.005),
            kind: Check,
            compute: early_brain_entropy,
        },
        Scenario {
            id: "identity",
            description: "a single node has zero entropy",
            provenance: "n = 1; brain L and C",
            pipeline: "network_entropy(1, 2.49, 0.53).H",
            expected: 0.0,
            tolerance: Absolute(0.0),
            kind: Check,
            compute: || h(1.0, BRAIN_PATH_LENGTH, BRAIN_CLUSTERING),
        },
        Scenario {
            id: "neuro-rate",
            description: "neuronal entropy growth rate per Myr",
            provenance: "brain-early and brain-1989 entropies over 3 Myr",
            pipeline: "exponential_rate(H(early brain), H(modern brain), 3 Myr).m",
            expected: QUOTED_NEURO_RATE_PER_MYR,
            tolerance: Absolute(1e-4),
            kind: Check,
            compute: neuro_rate,
        },
        Scenario {
            id: "neuro-rate-rounded-inputs",
            description: "neuronal rate from the entropies rounded as quoted (14.077, 14.71)",
            provenance: "quoted entropies 14.077 and 14.71",
            pipeline: "exponential_rate(14.077, 14.71, 3 Myr).m",
            expected: QUOTED_NEURO_RATE_PER_MYR,
            tolerance: Absolute(1e-4),
            kind: Informational,
            compute: neuro_rate_rounded_inputs,
        },
        Scenario {
            id: "neuro-dating-linear",
            description: "Myr for neuronal entropy to reach 14.71 (linear interpretation)",
            provenance: "quoted rate 0.01478 per Myr; modern brain entropy 14.71",
            pipeline: "linear_duration(0.01478/Myr, 14.71)",
            expected: 995.0,
            tolerance: Absolute(1.0),
            kind: Check,
            compute: || {
                linear_duration(Rate::new(QUOTED_NEURO_RATE_PER_MYR, TimeUnit::MillionYears), 14.71)
                    .map(|d| d.duration)
                    .map_err(|e| e.to_string())
            },
        },
        Scenario {
            id: "neuro-dating-exponential",
            description: "Myr for neuronal entropy to grow from 1 to 14.71 (exponential interpretation)",
            provenance: "quoted rate 0.01478 per Myr; ln(14.71)/0.01478",
            pipeline: "date_duration(0.01478/Myr, 1, 14.71)",
            expected: 181.9,
            tolerance: Absolute(0.1),
            kind: Informational,
            compute: || {
                date_duration(Rate::new(QUOTED_NEURO_RATE_PER_MYR, TimeUnit::MillionYears), 1.0, 14.71)
                    .map(|d| d.duration)
                    .map_err(|e| e.to_string())
            },
        },
        Scenario {
            id: "speakers-1989",
            description: "entropy of 350 million English speakers",
            provenance: "n = 350e6 speakers in 1989; actor network L = 3.65, C = 0.79",
            pipeline: "network_entropy(350e6, 3.65, 0.79).H",
            expected: 12.00,
            tolerance: Absolute(0.01),
            kind: Check,
            compute: || h(SPEAKERS_1989, SOCIAL_PATH_LENGTH, SOCIAL_CLUSTERING),
        },
        Scenario {
            id: "speakers-1657",
            description: "entropy of the 1657 English-speaking population",
            provenance: "n = 5,281,347 (population of England, 1656); actor network L and C",
            pipeline: "network_entropy(5281347, 3.65, 0.79).H",
            expected: 9.445,
            tolerance: Absolute(0.005),
            kind: Check,
            compute: || h(SPEAKERS_1657, SOCIAL_PATH_LENGTH, SOCIAL_CLUSTERING),
        },
        Scenario {
            id: "lexicon-1989",
            description: "entropy of the 1989 English lexicon",
            provenance: "n = 616,000 OED entries; word network L = 2.67, C = 0.437",
            pipeline: "network_entropy(616000, 2.67, 0.437).H",
            expected: 5.93,
            tolerance: Absolute(0.01),
            kind: Check,
            compute: || h(WORDS_1989, LEXICON_PATH_LENGTH, LEXICON_CLUSTERING),
        },
        Scenario {
            id: "lexicon-1657",
            description: "entropy of the 1657 English lexicon",
            provenance: "n = 200,000 early modern dictionary entries; word network L and C",
            pipeline: "network_entropy(200000, 2.67, 0.437).H",
            expected: 5.431,
            tolerance: Absolute(0.005),
            kind: Check,
            compute: || h(WORDS_1657, LEXICON_PATH_LENGTH, LEXICON_CLUSTERING),
        },
        Scenario {
            id: "lexical-multiplier",
            description: "mean population entropy times mean lexicon entropy, 1657-1989",
            provenance: "speakers-1657, speakers-1989, lexicon-1657, lexicon-1989",
            pipeline: "conceptual_multiplier(mean(H_pop), mean(H_lex))",
            expected: 60.94,
            tolerance: Absolute(0.05),
            kind: Check,
            compute: lexical_multiplier,
        },
        Scenario {
            id: "lexical-rate",
            description: "observed lexical growth, percent per decade",
            provenance: "200,000 entries in 1657, 616,000 in 1989; 332 years",
            pipeline: "exponential_rate(200000, 616000, 332 yr) as %/decade",
            expected: 3.4,
            tolerance: Range(3.3, 3.5),
            kind: Check,
            compute: || lexical_rate().map(|r| r.percent_per(TimeUnit::Decade)),
        },
        Scenario {
            id: "lexical-basal-rate",
            description: "basal lexical growth rate per year",
            provenance: "lexical-rate divided by the quoted multiplier 60.94",
            pipeline: "basal_rate(lexical-rate, 60.94)",
            expected: 5.56e-5,
            tolerance: Absolute(0.1e-5),
            kind: Check,
            compute: || lexical_basal_rate().map(|r| r.value),
        },
        Scenario {
            id: "glotto-adjusted",
            description: "Swadesh divergence rescaled to the newer Indo-European age",
            provenance: "14% per kyr, age 7037 years rescaled to 8700 years",
            pipeline: "glotto_adjust(0.14, 7037, 8700)",
            expected: 0.1132,
            tolerance: Absolute(0.0002),
            kind: Check,
            compute: || {
                glotto_adjust(SWADESH_DIVERGENCE_PER_KYR, SWADESH_AGE_YEARS, GRAY_ATKINSON_AGE_YEARS)
                    .map_err(|e| e.to_string())
            },
        },
        Scenario {
            id: "glotto-per-daughter",
            description: "divergence per daughter language, per kyr",
            provenance: "glotto-adjusted halved",
            pipeline: "per_daughter_rate(glotto_adjust(0.14, 7037, 8700))",
            expected: 0.0566,
            tolerance: Absolute(0.0001),
            kind: Check,
            compute: glotto_per_daughter,
        },
        Scenario {
            id: "glotto-cross-check",
            description: "relative gap between the entropy-derived basal rate and the glottochronology rate",
            provenance: "lexical-basal-rate against 5.66% per kyr",
            pipeline: "|basal (per kyr) - 0.0566| / 0.0566",
            expected: 0.0,
            tolerance: Range(0.0, 0.02),
            kind: Check,
            compute: || {
                let basal = lexical_basal_rate()?.to_unit(TimeUnit::Millennium).value;
                Ok((basal - QUOTED_BASAL_RATE_PER_KYR).abs() / QUOTED_BASAL_RATE_PER_KYR)
            },
        },
        Scenario {
            id: "language-origin",
            description: "years for a lexicon to grow from 100 signals to 616,500 words",
            provenance: "100 call signals; 616,500 OED words; 5.66% per kyr",
            pipeline: "date_duration(5.66e-5/yr, 100, 616500)",
            expected: 154_000.0,
            tolerance: Absolute(2_000.0),
            kind: Check,
            compute: || {
                date_duration(
                    Rate::new(QUOTED_BASAL_RATE_PER_KYR, TimeUnit::Millennium).to_unit(TimeUnit::Year),
                    PROTO_LEXICON_SIGNALS,
                    WORDS_1989_ORIGIN,
                )
                .map(|d| d.duration)
                .map_err(|e| e.to_string())
            },
        },
        Scenario {
            id: "lexicon-alt-measurement",
            description: "lexicon entropy with the alternative word network measurement",
            provenance: "n = 616,000; L = 3.16, C = 0.53",
            pipeline: "network_entropy(616000, 3.16, 0.53).H",
            expected: 6.14,
            tolerance: Absolute(0.01),
            kind: Check,
            compute: || h(WORDS_1989, ALT_LEXICON_PATH_LENGTH, ALT_LEXICON_CLUSTERING),
        },
        Scenario {
            id: "population-value-delta",
            description: "entropy gained by the English-speaking population, 1657-1989",
            provenance: "n1 = 5,281,347; A = 344,718,653; actor network L and C; m = 1",
            pipeline: "value_delta(1, 0.79, 3.65, 5281347, 344718653)",
            expected: 2.559,
            tolerance: Absolute(0.005),
            kind: Check,
            compute: || {
                value_delta(1.0, SOCIAL_CLUSTERING, SOCIAL_PATH_LENGTH, SPEAKERS_1657, SPEAKERS_1989 - SPEAKERS_1657)
                    .map_err(|e| e.to_string())
            },
        },
        Scenario {
            id: "hierarchy-27",
            description: "three nested generations of 27 leaves with branching 3",
            provenance: "27 nodes in one row, clusters of 3 and 9",
            pipeline: "verify_hierarchy(nested_hierarchy(3, 3)) and eta(27, 3)",
            expected: 3.0,
            tolerance: Absolute(1e-12),
            kind: Check,
            compute: || {
                let hierarchy = nested_hierarchy(3, 3).map_err(|e| e.to_string())?;
                let counts: Vec<_> = hierarchy.generations.iter().map(Vec::len).collect();
                let sizes: Vec<_> = hierarchy.generations.iter().map(|g| g[0].len()).collect();
                if !verify_hierarchy(&hierarchy).valid || counts != [1, 3, 9, 27] || sizes != [27, 9, 3, 1] {
                    return Err("hierarchy does not have the expected shape".into());
                }
                eta(hierarchy.leaf_count() as f64, 3.0).map_err(|e| e.to_string())
            },
        },
        Scenario {
            id: "small-world-clustering",
            description: "C(p = 0.01) / C(p = 0) for WS(1000, 10), mean of 5 seeds",
            provenance: "generated graphs; small-world regime keeps clustering",
            pipeline: "mean C(WS(1000, 10, 0.01, seed)) / C(ring_lattice(1000, 10))",
            expected: 1.0,
            tolerance: AtLeast(0.9),
            kind: Check,
            compute: || small_world_ratios().map(|(c, _)| c),
        },
        Scenario {
            id: "small-world-path-length",
            description: "L(p = 0.01) / L(p = 0) for WS(1000, 10), mean of 5 seeds",
            provenance: "generated graphs; small-world regime collapses path length",
            pipeline: "mean L(WS(1000, 10, 0.01, seed)) / L(ring_lattice(1000, 10))",
            expected: 0.0,
            tolerance: Range(0.0, 0.5),
            kind: Check,
            compute: || small_world_ratios().map(|(_, l)| l),
        },
    ];
    all.sort_by_key(|s| s.id);
    all
}

/// Runs every scenario. Deterministic: no scenario draws unseeded
/// randomness.
pub fn run_all() -> Report {
    let scenarios: Vec<ScenarioOutcome> = scenarios().iter().map(Scenario::run).collect();
    let all_pass = scenarios.iter().filter(|s| s.kind == RowKind::Check).all(|s| s.pass);
    Report { all_pass, scenarios }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let all = scenarios();
        let ids: Vec<_> = all.iter().map(|s| s.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn every_scenario_documents_itself() {
        for s in scenarios() {
            assert!(!s.provenance.is_empty() && !s.pipeline.is_empty(), "{}", s.id);
            assert!(!s.description.is_empty());
        }
    }

    #[test]
    fn tolerance_checks() {
        assert!(Tolerance::Absolute(0.1).accepts(1.05, 1.0));
        assert!(!Tolerance::Absolute(0.1).accepts(1.2, 1.0));
        assert!(Tolerance::Relative(0.01).accepts(101.0, 100.0));
        assert!(!Tolerance::Relative(0.01).accepts(102.0, 100.0));
        assert!(Tolerance::Range(3.3, 3.5).accepts(3.39, 3.4));
        assert!(!Tolerance::Range(3.3, 3.5).accepts(f64::NAN, 3.4));
    }

    #[test]
    fn failing_computation_is_a_row() {
        let s = Scenario {
            id: "broken",
            description: "d",
            provenance: "p",
            pipeline: "x",
            expected: 1.0,
            tolerance: Tolerance::Absolute(1.0),
            kind: RowKind::Check,
            compute: || Err("boom".into()),
        };
        let out = s.run();
        assert!(!out.pass);
        assert_eq!(out.error.as_deref(), Some("boom"));
        assert_eq!(out.computed, None);
    }
}
