//! Sharded, deterministic Monte-Carlo sampling over box-bounded domains.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{chi_poly, factorial, rat_to_f64, Rational};
use crate::domain::{generic_norm_diag, membership, sample_box, DomainSpec};
use crate::error::{Error, Result};

use super::report::VerifyReport;

/// Proposals per shard; each shard owns the ChaCha stream numbered by its index.
pub const SHARD_SIZE: u64 = 1 << 16;
/// Acceptance ratios below this are reported as `LowAcceptance`.
pub const MIN_ACCEPTANCE: f64 = 1e-4;
const SHARDS_PER_BATCH: u64 = 32;

/// A Monte-Carlo estimate with its standard error.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub acceptance_ratio: f64,
    pub seed: u64,
}

/// Per-shard running sums. `sums[i]` holds whatever statistic slot `i` the
/// caller accumulates.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub proposals: u64,
    pub accepted: u64,
    pub sums: Vec<f64>,
}

impl Tally {
    fn new(slots: usize) -> Self {
        Self {
            proposals: 0,
            accepted: 0,
            sums: vec![0.0; slots],
        }
    }

    fn merge(mut self, other: &Tally) -> Tally {
        self.proposals += other.proposals;
        self.accepted += other.accepted;
        for (a, b) in self.sums.iter_mut().zip(&other.sums) {
            *a += b;
        }
        self
    }

    pub fn acceptance(&self) -> f64 {
        self.accepted as f64 / self.proposals as f64
    }
}

/// Fixed-order pairwise reduction, so results do not depend on thread count.
fn pairwise(tallies: &[Tally], slots: usize) -> Tally {
    match tallies.len() {
        0 => Tally::new(slots),
        1 => tallies[0].clone(),
        n => pairwise(&tallies[..n / 2], slots).merge(&pairwise(&tallies[n / 2..], slots)),
    }
}

/// How many proposals to draw.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Budget {
    /// Exactly this many box proposals.
    Proposals(u64),
    /// Whole shards until at least this many proposals were accepted.
    Accepted(u64),
}

/// Runs `step` once per proposal on per-shard RNG streams and reduces the
/// tallies deterministically. `step` returns whether the proposal was accepted.
pub(crate) fn run_sharded<F>(seed: u64, budget: Budget, slots: usize, step: F) -> Result<Tally>
where
    F: Fn(&mut ChaCha8Rng, &mut [f64]) -> bool + Sync,
{
    let shard = |index: u64, count: u64| -> Tally {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let mut t = Tally::new(slots);
        for _ in 0..count {
            t.proposals += 1;
            if step(&mut rng, &mut t.sums) {
                t.accepted += 1;
            }
        }
        t
    };
    let check = |t: &Tally| -> Result<()> {
        let ratio = t.acceptance();
        if ratio < MIN_ACCEPTANCE {
            return Err(Error::LowAcceptance {
                ratio,
                accepted: t.accepted,
                samples: t.proposals,
            });
        }
        Ok(())
    };
    match budget {
        Budget::Proposals(n) => {
            let shards = n.div_ceil(SHARD_SIZE);
            let tallies: Vec<Tally> = (0..shards)
                .into_par_iter()
                .map(|i| shard(i, SHARD_SIZE.min(n - i * SHARD_SIZE)))
                .collect();
            let total = pairwise(&tallies, slots);
            check(&total)?;
            Ok(total)
        }
        Budget::Accepted(target) => {
            let mut tallies: Vec<Tally> = Vec::new();
            let mut accepted = 0;
            let mut next = 0;
            while accepted < target {
                let batch: Vec<Tally> = (next..next + SHARDS_PER_BATCH)
                    .into_par_iter()
                    .map(|i| shard(i, SHARD_SIZE))
                    .collect();
                next += SHARDS_PER_BATCH;
                accepted += batch.iter().map(|t| t.accepted).sum::<u64>();
                tallies.extend(batch);
                check(&pairwise(&tallies, slots))?;
            }
            Ok(pairwise(&tallies, slots))
        }
    }
}

/// Density of `α^n` against Lebesgue measure in element coordinates:
/// `n! ∏ G_i / π^n`.
pub fn alpha_density(spec: &DomainSpec) -> f64 {
    let n = spec.dim() as u32;
    let gram: f64 = spec.m1_weights().iter().product();
    rat_to_f64(&factorial(n)) * gram / std::f64::consts::PI.powi(n as i32)
}

fn check_samples(samples: u64) -> Result<()> {
    if samples < 1000 {
        return Err(Error::InvalidParams(format!(
            "at least 1000 samples are required, got {samples}"
        )));
    }
    Ok(())
}

/// `vol Ω = ∫_Ω α^n` by rejection from the coordinate box.
pub fn mc_volume(spec: &DomainSpec, samples: u64, seed: u64) -> Result<McEstimate> {
    check_samples(samples)?;
    let tally = run_sharded(seed, Budget::Proposals(samples), 0, |rng, _| {
        membership(spec, &sample_box(spec, rng)).unwrap_or(false)
    })?;
    let p = tally.acceptance();
    let scale = 4f64.powi(spec.dim() as i32) * alpha_density(spec);
    Ok(McEstimate {
        value: scale * p,
        std_error: scale * (p * (1.0 - p) / tally.proposals as f64).sqrt(),
        samples: tally.proposals,
        acceptance_ratio: p,
        seed,
    })
}

/// Conditional mean of `N(x,x)^s` over `Ω` (volume cancels), compared with
/// `χ(0)/χ(s)`. `samples` counts accepted points.
pub fn mc_norm_moment(spec: &DomainSpec, s: &Rational, samples: u64, seed: u64, tol: f64) -> Result<VerifyReport> {
    check_samples(samples)?;
    if *s <= Rational::from_integer((-1).into()) {
        return Err(Error::DomainError(format!("moment order must exceed -1, got {s}")));
    }
    let sf = rat_to_f64(s);
    let tally = run_sharded(seed, Budget::Accepted(samples), 2, |rng, sums| {
        let x = sample_box(spec, rng);
        if !membership(spec, &x).unwrap_or(false) {
            return false;
        }
        let v = generic_norm_diag(spec, &x).unwrap_or(f64::NAN).powf(sf);
        sums[0] += v;
        sums[1] += v * v;
        true
    })?;
    let n = tally.accepted as f64;
    let mean = tally.sums[0] / n;
    let var = (tally.sums[1] / n - mean * mean).max(0.0);
    let chi = chi_poly(&spec.invariants());
    let reference = rat_to_f64(&(chi.eval(&Rational::from_integer(0.into())) / chi.eval(s)));
    Ok(VerifyReport::stochastic(
        format!("norm moment s={s}"),
        spec,
        McEstimate {
            value: mean,
            std_error: (var / n).sqrt(),
            samples: tally.accepted,
            acceptance_ratio: tally.acceptance(),
            seed,
        },
        reference,
        tol,
    ))
}
