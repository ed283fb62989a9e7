//! Outcome records of oracle comparisons.

use serde::Serialize;

use super::mc::McEstimate;
use crate::domain::DomainSpec;

/// The result of comparing an oracle value against a reference.
///
/// Deterministic reports pass iff `deviation <= tolerance`; stochastic ones iff
/// `deviation <= max(tolerance, 3 σ / |reference|)`. `deviation` is relative
/// unless the reference is zero, in which case it is absolute.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub quantity: String,
    pub domain: String,
    pub estimate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub std_error: Option<f64>,
    pub reference: f64,
    pub deviation: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub pass: bool,
}

fn deviation(estimate: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        (estimate - reference).abs()
    } else {
        ((estimate - reference) / reference).abs()
    }
}

impl VerifyReport {
    pub fn deterministic(quantity: impl Into<String>, spec: &DomainSpec, estimate: f64, reference: f64, tolerance: f64) -> Self {
        let dev = deviation(estimate, reference);
        Self {
            quantity: quantity.into(),
            domain: spec.to_string(),
            estimate,
            std_error: None,
            reference,
            deviation: dev,
            tolerance,
            samples: None,
            seed: None,
            pass: dev <= tolerance,
        }
    }

    pub fn stochastic(quantity: impl Into<String>, spec: &DomainSpec, est: McEstimate, reference: f64, tolerance: f64) -> Self {
        let dev = deviation(est.value, reference);
        let sigma_allowance = if reference == 0.0 {
            3.0 * est.std_error
        } else {
            3.0 * est.std_error / reference.abs()
        };
        Self {
            quantity: quantity.into(),
            domain: spec.to_string(),
            estimate: est.value,
            std_error: Some(est.std_error),
            reference,
            deviation: dev,
            tolerance,
            samples: Some(est.samples),
            seed: Some(est.seed),
            pass: dev <= tolerance.max(sigma_allowance),
        }
    }

    /// `|estimate − reference| ≤ 3σ`, ignoring the tolerance.
    pub fn within_three_sigma(&self) -> bool {
        match self.std_error {
            Some(s) => (self.estimate - self.reference).abs() <= 3.0 * s,
            None => self.pass,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}
