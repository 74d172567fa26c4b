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

//! Exponential growth rates, entropy-weighted process rates, entropy
//! dating and the glottochronology adjustments used to cross-check the
//! basal lexical growth rate.
//!
//! Rates are continuous (`q(t) = q(0) e^{mt}`), so converting between time
//! units is a plain rescaling.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("quantity must be positive and finite, got {0}")]
    InvalidQuantity(f64),
    #[error("elapsed time must be positive, got {0}")]
    InvalidInterval(f64),
    #[error("rate must be positive and finite, got {0}")]
    InvalidRate(f64),
    #[error("multiplier must be positive, got {0}")]
    InvalidMultiplier(f64),
    #[error("age must be positive, got {0}")]
    InvalidAge(f64),
    #[error("end quantity {end} is smaller than start quantity {start}")]
    Shrinking { start: f64, end: f64 },
    #[error("unknown time unit `{0}` (expected year, decade, millennium or myr)")]
    UnknownUnit(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimeUnit {
    Year,
    Decade,
    Millennium,
    #[serde(rename = "myr")]
    MillionYears,
}

impl TimeUnit {
    pub fn years(self) -> f64 {
        match self {
            TimeUnit::Year => 1.0,
            TimeUnit::Decade => 10.0,
            TimeUnit::Millennium => 1_000.0,
            TimeUnit::MillionYears => 1_000_000.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TimeUnit::Year => "year",
            TimeUnit::Decade => "decade",
            TimeUnit::Millennium => "millennium",
            TimeUnit::MillionYears => "Myr",
        }
    }
}

impl fmt::Display for TimeUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TimeUnit {
    type Err = DynamicsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "year" | "years" | "yr" | "y" => Ok(TimeUnit::Year),
            "decade" | "decades" => Ok(TimeUnit::Decade),
            "millennium" | "millennia" | "kyr" => Ok(TimeUnit::Millennium),
            "myr" | "ma" => Ok(TimeUnit::MillionYears),
            _ => Err(DynamicsError::UnknownUnit(s.to_string())),
        }
    }
}

/// A continuous rate per `unit`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rate {
    pub value: f64,
    pub unit: TimeUnit,
}

impl Rate {
    pub fn new(value: f64, unit: TimeUnit) -> Self {
        Rate { value, unit }
    }

    pub fn per_year(value: f64) -> Self {
        Rate::new(value, TimeUnit::Year)
    }

    /// Same rate expressed per `unit`.
    pub fn to_unit(self, unit: TimeUnit) -> Rate {
        Rate::new(self.value * unit.years() / self.unit.years(), unit)
    }

    /// Rate per `unit` as a percentage.
    pub fn percent_per(self, unit: TimeUnit) -> f64 {
        self.to_unit(unit).value * 100.0
    }

    fn scaled(self, factor: f64) -> Rate {
        Rate::new(self.value * factor, self.unit)
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} per {}", self.value, self.unit)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateResult {
    pub rate: Rate,
    /// `(t1, t2)` in `rate.unit`.
    pub window: (f64, f64),
}

fn check_quantity(q: f64) -> Result<(), DynamicsError> {
    if q.is_finite() && q > 0.0 {
        Ok(())
    } else {
        Err(DynamicsError::InvalidQuantity(q))
    }
}

fn check_rate(m: f64) -> Result<(), DynamicsError> {
    if m.is_finite() && m > 0.0 {
        Ok(())
    } else {
        Err(DynamicsError::InvalidRate(m))
    }
}

/// Rate `m` with `q2 = q1 · e^{m·elapsed}`. Computed as a difference of
/// logarithms so swapping `q1` and `q2` negates `m` exactly.
pub fn exponential_rate(q1: f64, q2: f64, elapsed: f64, unit: TimeUnit) -> Result<RateResult, DynamicsError> {
    check_quantity(q1)?;
    check_quantity(q2)?;
    if !(elapsed.is_finite() && elapsed > 0.0) {
        return Err(DynamicsError::InvalidInterval(elapsed));
    }
    Ok(RateResult {
        rate: Rate::new((q2.ln() - q1.ln()) / elapsed, unit),
        window: (0.0, elapsed),
    })
}

/// Same as [`exponential_rate`] over the window `t1..t2`.
pub fn exponential_rate_between(q1: f64, q2: f64, t1: f64, t2: f64, unit: TimeUnit) -> Result<RateResult, DynamicsError> {
    let mut r = exponential_rate(q1, q2, t2 - t1, unit)?;
    r.window = (t1, t2);
    Ok(r)
}

/// Entropy-weighted process rate `H' = m · H`.
pub fn process_rate(basal: Rate, entropy: f64) -> Rate {
    basal.scaled(entropy)
}

/// Observed rate with the entropy multiplier divided out.
pub fn basal_rate(observed: Rate, multiplier: f64) -> Result<Rate, DynamicsError> {
    if !(multiplier.is_finite() && multiplier > 0.0) {
        return Err(DynamicsError::InvalidMultiplier(multiplier));
    }
    Ok(observed.scaled(1.0 / multiplier))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    /// `t = ln(q_end / q_start) / m`.
    Exponential,
    /// `t = H_end / m`, the linear reading that reproduces the published
    /// 995 Myr neuronal figure.
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DatingInputs {
    pub rate: Rate,
    pub start: Option<f64>,
    pub end: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DatingResult {
    /// In `inputs.rate.unit`.
    pub duration: f64,
    pub interpretation: Interpretation,
    pub inputs: DatingInputs,
}

impl DatingResult {
    pub fn unit(&self) -> TimeUnit {
        self.inputs.rate.unit
    }

    pub fn duration_in(&self, unit: TimeUnit) -> f64 {
        self.duration * self.unit().years() / unit.years()
    }
}

/// Time for a quantity to grow from `start` to `end` at rate `m`.
pub fn date_duration(rate: Rate, start: f64, end: f64) -> Result<DatingResult, DynamicsError> {
    check_rate(rate.value)?;
    check_quantity(start)?;
    check_quantity(end)?;
    if end < start {
        return Err(DynamicsError::Shrinking { start, end });
    }
    Ok(DatingResult {
        duration: (end / start).ln() / rate.value,
        interpretation: Interpretation::Exponential,
        inputs: DatingInputs { rate, start: Some(start), end },
    })
}

/// `H_end / m`, tagged as the linear interpretation.
pub fn linear_duration(rate: Rate, entropy_end: f64) -> Result<DatingResult, DynamicsError> {
    check_rate(rate.value)?;
    check_quantity(entropy_end)?;
    Ok(DatingResult {
        duration: entropy_end / rate.value,
        interpretation: Interpretation::Linear,
        inputs: DatingInputs { rate, start: None, end: entropy_end },
    })
}

/// Rescales a divergence rate calibrated against an old age estimate to a
/// newer one: `divergence · old_age / new_age`.
pub fn glotto_adjust(divergence: f64, old_age: f64, new_age: f64) -> Result<f64, DynamicsError> {
    if !(divergence.is_finite() && divergence > 0.0) {
        return Err(DynamicsError::InvalidRate(divergence));
    }
    for age in [old_age, new_age] {
        if !(age.is_finite() && age > 0.0) {
            return Err(DynamicsError::InvalidAge(age));
        }
    }
    Ok(divergence * old_age / new_age)
}

/// Pairwise divergence shared equally by two daughter languages.
pub fn per_daughter_rate(divergence: f64) -> f64 {
    divergence / 2.0
}

/// Arithmetic mean of two endpoint entropies.
pub fn mean_entropy(a: f64, b: f64) -> f64 {
    (a + b) / 2.0
}
