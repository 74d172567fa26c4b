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

//! Network entropy `H = C · log_L(n)`, Shannon entropy of a distribution,
//! the product of social and conceptual entropies, and the change in
//! entropy (network value) from adding members.
//!
//! Counts are `f64` because the scenarios of interest use populations such
//! as `1e11 / 3` that are not integers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntropyError {
    #[error("log base (path length) must be greater than 1, got {0}; for a complete graph use the ideal entropy ln(n) instead")]
    InvalidLogBase(f64),
    #[error("node count must be at least 1, got {0}")]
    InvalidCount(f64),
    #[error("clustering coefficient must lie in [0, 1], got {0}")]
    InvalidCoefficient(f64),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("entropy must be non-negative, got {0}")]
    NegativeEntropy(f64),
    #[error("scale constant must be positive, got {0}")]
    InvalidScale(f64),
    #[error("rate must be non-negative, got {0}")]
    InvalidRate(f64),
}

fn check_base(base: f64) -> Result<(), EntropyError> {
    if base.is_finite() && base > 1.0 {
        Ok(())
    } else {
        Err(EntropyError::InvalidLogBase(base))
    }
}

fn check_count(n: f64) -> Result<(), EntropyError> {
    if n.is_finite() && n >= 1.0 {
        Ok(())
    } else {
        Err(EntropyError::InvalidCount(n))
    }
}

fn check_coefficient(c: f64) -> Result<(), EntropyError> {
    if (0.0..=1.0).contains(&c) {
        Ok(())
    } else {
        Err(EntropyError::InvalidCoefficient(c))
    }
}

/// Number of nested cluster generations, `log_L(n)`.
pub fn eta(n: f64, path_length: f64) -> Result<f64, EntropyError> {
    check_count(n)?;
    check_base(path_length)?;
    Ok(n.ln() / path_length.ln())
}

/// Everything derived from one `(n, L, C)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub n: f64,
    pub path_length: f64,
    pub clustering: f64,
    /// `log_L(n)`.
    pub eta: f64,
    /// `C · eta`.
    pub entropy: f64,
    /// `ln(n)`, the entropy of an ideal network with `L = e`, `C = 1`.
    pub ideal_entropy: f64,
}

pub fn network_entropy(n: f64, path_length: f64, clustering: f64) -> Result<EntropyReport, EntropyError> {
    check_count(n)?;
    check_base(path_length)?;
    check_coefficient(clustering)?;
    let eta = n.ln() / path_length.ln();
    Ok(EntropyReport {
        n,
        path_length,
        clustering,
        eta,
        entropy: clustering * eta,
        ideal_entropy: n.ln(),
    })
}

/// Entropy of the ideal network on `n` nodes.
pub fn ideal_entropy(n: f64) -> Result<f64, EntropyError> {
    check_count(n)?;
    Ok(n.ln())
}

/// Neumaier-compensated sum.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

/// A finite probability distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution(Vec<f64>);

impl Distribution {
    pub const SUM_TOLERANCE: f64 = 1e-9;

    pub fn new(probabilities: Vec<f64>) -> Result<Self, EntropyError> {
        if probabilities.is_empty() {
            return Err(EntropyError::InvalidDistribution("no outcomes".into()));
        }
        if let Some(p) = probabilities.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
            return Err(EntropyError::InvalidDistribution(format!("probability {p} is negative or not finite")));
        }
        let total = compensated_sum(probabilities.iter().copied());
        if (total - 1.0).abs() > Self::SUM_TOLERANCE {
            return Err(EntropyError::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        Ok(Distribution(probabilities))
    }

    pub fn uniform(outcomes: usize) -> Result<Self, EntropyError> {
        if outcomes == 0 {
            return Err(EntropyError::InvalidDistribution("no outcomes".into()));
        }
        Ok(Distribution(vec![1.0 / outcomes as f64; outcomes]))
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `K · Σ −p_i log_r p_i`, with `0 · log 0 = 0`.
///
/// The sum is negated so the uniform distribution over `n` outcomes gives
/// `K · log_r(n)`; with `r = L` and `K = C` that is the network entropy.
pub fn shannon_entropy(d: &Distribution, base: f64, scale: f64) -> Result<f64, EntropyError> {
    check_base(base)?;
    if !(scale.is_finite() && scale > 0.0) {
        return Err(EntropyError::InvalidScale(scale));
    }
    let ln_base = base.ln();
    let nats = compensated_sum(
        d.probabilities()
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * p.ln()),
    );
    Ok(scale * nats / ln_base)
}

/// Entropy multiplier of a process running on a conceptual network carried
/// by a social network: the product of the two entropies.
pub fn conceptual_multiplier(social: f64, conceptual: f64) -> Result<f64, EntropyError> {
    for h in [social, conceptual] {
        if h.is_nan() || h < 0.0 {
            return Err(EntropyError::NegativeEntropy(h));
        }
    }
    Ok(social * conceptual)
}

/// Gain in value rate from growing a network of `n1` members by `added`:
/// `m · C · log_L(1 + added / n1)`.
///
/// Equal to `m · (H(n1 + added) − H(n1))` at fixed `L` and `C`, but computed
/// without the cancellation of the difference.
pub fn value_delta(rate: f64, clustering: f64, path_length: f64, n1: f64, added: f64) -> Result<f64, EntropyError> {
    if !(rate.is_finite() && rate >= 0.0) {
        return Err(EntropyError::InvalidRate(rate));
    }
    check_coefficient(clustering)?;
    check_base(path_length)?;
    check_count(n1)?;
    if !(added.is_finite() && added >= 0.0) {
        return Err(EntropyError::InvalidCount(added));
    }
    Ok(rate * clustering * (added / n1).ln_1p() / path_length.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(27.0, 3.0).unwrap().round(), 3.0);
        assert!(close(eta(27.0, 3.0).unwrap(), 3.0, 1e-15));
        assert_eq!(eta(1.0, 2.5).unwrap(), 0.0);
        let e = eta(616_000.0, 3.16).unwrap();
        assert!(close(e, 11.586, 1e-3), "{e}");
        assert!(close(0.53 * e, 6.14, 0.01));
    }

    #[test]
    fn eta_errors() {
        assert_eq!(eta(10.0, 1.0), Err(EntropyError::InvalidLogBase(1.0)));
        assert_eq!(eta(10.0, 0.5), Err(EntropyError::InvalidLogBase(0.5)));
        assert_eq!(eta(0.5, 2.0), Err(EntropyError::InvalidCount(0.5)));
        assert!(eta(f64::NAN, 2.0).is_err());
    }

    #[test]
    fn published_entropies() {
        assert!(close(network_entropy(1e11, 2.49, 0.53).unwrap().entropy, 14.71, 0.01));
        assert!(close(network_entropy(616_000.0, 2.67, 0.437).unwrap().entropy, 5.93, 0.01));
        assert!(close(network_entropy(350e6, 3.65, 0.79).unwrap().entropy, 12.00, 0.01));
        assert_eq!(network_entropy(1.0, 2.5, 0.7).unwrap().entropy, 0.0);
    }

    #[test]
    fn entropy_errors() {
        assert_eq!(
            network_entropy(4.0, 1.0, 1.0),
            Err(EntropyError::InvalidLogBase(1.0))
        );
        assert_eq!(
            network_entropy(4.0, 2.0, 1.5),
            Err(EntropyError::InvalidCoefficient(1.5))
        );
        assert_eq!(
            network_entropy(0.0, 2.0, 0.5),
            Err(EntropyError::InvalidCount(0.0))
        );
    }

    #[test]
    fn report_fields_are_consistent() {
        let r = network_entropy(5e5, 3.3, 0.4).unwrap();
        assert_eq!(r.entropy, r.clustering * r.eta);
        assert!(r.entropy <= r.eta);
        assert!(close(r.ideal_entropy, r.eta * r.path_length.ln(), 1e-12 * r.ideal_entropy));
    }

    #[test]
    fn ideal_network() {
        let r = network_entropy(1e6, E, 1.0).unwrap();
        assert!(close(r.entropy, 1e6f64.ln(), 1e-12 * r.entropy));
        assert_eq!(ideal_entropy(1e6).unwrap(), 1e6f64.ln());
    }

    #[test]
    fn shannon_examples() {
        let u8 = Distribution::uniform(8).unwrap();
        assert!(close(shannon_entropy(&u8, 2.0, 1.0).unwrap(), 3.0, 1e-15));
        let point = Distribution::new(vec![1.0, 0.0, 0.0]).unwrap();
        assert_eq!(shannon_entropy(&point, 7.0, 3.0).unwrap(), 0.0);
        let u = Distribution::uniform(1000).unwrap();
        let h = shannon_entropy(&u, 2.67, 0.437).unwrap();
        let net = network_entropy(1000.0, 2.67, 0.437).unwrap().entropy;
        assert!(close(h, net, 1e-12 * net));
    }

    #[test]
    fn distribution_validation() {
        assert!(Distribution::new(vec![]).is_err());
        assert!(Distribution::new(vec![0.5, 0.6]).is_err());
        assert!(Distribution::new(vec![1.5, -0.5]).is_err());
        assert!(Distribution::new(vec![0.5, 0.5 + 1e-10]).is_ok());
        assert!(Distribution::uniform(0).is_err());
        let d = Distribution::uniform(2).unwrap();
        assert_eq!(shannon_entropy(&d, 1.0, 1.0), Err(EntropyError::InvalidLogBase(1.0)));
        assert_eq!(shannon_entropy(&d, 2.0, 0.0), Err(EntropyError::InvalidScale(0.0)));
    }

    #[test]
    fn multiplier() {
        // The quoted 60.94 comes from the unrounded means; 10.72 × 5.68 itself is 60.8896.
        assert!(close(conceptual_multiplier(10.72, 5.68).unwrap(), 60.8896, 1e-9));
        assert!(close(conceptual_multiplier(10.72465, 5.681675).unwrap(), 60.94, 0.01));
        assert_eq!(conceptual_multiplier(0.0, 123.0).unwrap(), 0.0);
        assert!(close(conceptual_multiplier(12.004, 5.932).unwrap(), 71.21, 0.005));
        assert_eq!(conceptual_multiplier(-1.0, 2.0), Err(EntropyError::NegativeEntropy(-1.0)));
    }

    #[test]
    fn value_delta_examples() {
        assert_eq!(value_delta(1.0, 0.5, 3.0, 100.0, 0.0).unwrap(), 0.0);
        let n = 1234.0;
        assert!(close(value_delta(1.0, 1.0, E, n, (E - 1.0) * n).unwrap(), 1.0, 1e-12));
        let d = value_delta(1.0, 0.79, 3.65, 5_281_347.0, 344_718_653.0).unwrap();
        let h1 = network_entropy(5_281_347.0, 3.65, 0.79).unwrap().entropy;
        let h2 = network_entropy(350e6, 3.65, 0.79).unwrap().entropy;
        assert!(close(d, h2 - h1, 1e-12));
        assert!(close(d, 2.559, 0.001), "{d}");
        assert!(value_delta(-1.0, 0.5, 3.0, 1.0, 1.0).is_err());
        assert!(value_delta(1.0, 0.5, 3.0, 0.0, 1.0).is_err());
        assert!(value_delta(1.0, 0.5, 3.0, 1.0, -1.0).is_err());
    }
}
