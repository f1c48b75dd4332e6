use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::analytic::{analytic_pud, check_epsilon};
use crate::code::{Distance, LinearCode};
use crate::decoder::{iterative_decode, optimal_decode, DecodeOutcome, ReceivedWord};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::stopsets::{self, Subset};

/// Two-sided 99% standard normal quantile.
pub const Z_99: f64 = 2.575_829_303_548_901;

/// How per-trial randomness is derived.
pub const RNG_DESCRIPTION: &str =
    "ChaCha8Rng::seed_from_u64(seed) with stream = trial index; bit j erased iff gen::<f64>() < epsilon";

const TRIALS_PER_TASK: u64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChannelConfig {
    pub epsilon: f64,
    pub trials: u64,
    pub seed: u64,
}

impl ChannelConfig {
    pub fn new(epsilon: f64, trials: u64, seed: u64) -> Result<Self> {
        check_epsilon(epsilon)?;
        if trials == 0 {
            return Err(Error::InvalidChannel("at least one trial is required".into()));
        }
        Ok(Self {
            epsilon,
            trials,
            seed,
        })
    }

    /// Erasure pattern of one trial; depends only on `(seed, trial)`.
    pub fn erasures(&self, n: usize, trial: u64) -> u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        (0..n).fold(0u64, |m, j| {
            if rng.gen::<f64>() < self.epsilon {
                m | 1 << j
            } else {
                m
            }
        })
    }
}

/// Failure frequency with a normal-approximation 99% half-width.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub failures: u64,
    pub trials: u64,
    pub rate: f64,
    pub half_width_99: f64,
}

impl Estimate {
    fn new(failures: u64, trials: u64) -> Self {
        let rate = failures as f64 / trials as f64;
        Self {
            failures,
            trials,
            rate,
            half_width_99: Z_99 * (rate * (1.0 - rate) / trials as f64).sqrt(),
        }
    }

    /// Binomial standard deviation of the rate if the true probability is `p`.
    pub fn sigma(&self, p: f64) -> f64 {
        (p * (1.0 - p) / self.trials as f64).sqrt()
    }

    /// `|rate - p| ≤ k σ(p)`.
    pub fn within_sigmas(&self, p: f64, k: f64) -> bool {
        (self.rate - p).abs() <= k * self.sigma(p)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerformanceReport {
    pub config: ChannelConfig,
    pub analytic_opt: f64,
    pub analytic_it: f64,
    pub empirical_opt: Estimate,
    pub empirical_it: Estimate,
    /// `A_d ε^d`, absent for the zero code.
    pub dominant_opt: Option<f64>,
    /// `S_s ε^s`, absent when the matrix has no nonempty stopping set.
    pub dominant_it: Option<f64>,
    /// Trials where exactly one of the two decoders failed.
    pub event_mismatches: u64,
    /// Trials where peeling succeeded but the exhaustive decoder did not; always 0.
    pub iterative_beat_optimal: u64,
    /// Trials where a decoder returned something other than the sent word; always 0.
    pub wrong_decodes: u64,
    /// Erased bits still recovered in trials where peeling stalled.
    pub stalled_recovered_bits: u64,
    pub rng: &'static str,
    pub protocol: &'static str,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    opt_fail: u64,
    it_fail: u64,
    mismatch: u64,
    it_beats_opt: u64,
    wrong: u64,
    recovered: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            opt_fail: self.opt_fail + o.opt_fail,
            it_fail: self.it_fail + o.it_fail,
            mismatch: self.mismatch + o.mismatch,
            it_beats_opt: self.it_beats_opt + o.it_beats_opt,
            wrong: self.wrong + o.wrong,
            recovered: self.recovered + o.recovered,
        }
    }
}

/// Sends the all-zero codeword through the erasure channel `cfg.trials`
/// times and runs both decoders on each received word. By linearity, the
/// failure events do not depend on which codeword is sent.
pub fn monte_carlo(code: &LinearCode, h: &BitMatrix, cfg: &ChannelConfig) -> Result<PerformanceReport> {
    code.check_parity_check_matrix(h)?;
    let n = code.n();
    let eps = cfg.epsilon;

    let incorrigible = stopsets::incorrigible_enumerator(code)?;
    let profile = stopsets::stopping_profile(h)?;
    let analytic_opt = analytic_pud(&incorrigible, eps)?;
    let analytic_it = analytic_pud(&profile.dead_end, eps)?;
    let dominant_opt = match code.minimum_distance()? {
        Distance::Finite(d) => Some(incorrigible.coefficient(d) as f64 * eps.powi(d as i32)),
        Distance::Infinite => None,
    };
    let dominant_it = profile
        .stopping_distance
        .finite()
        .map(|s| profile.stopping.coefficient(s) as f64 * eps.powi(s as i32));

    let sent = BitVector::zeros(n)?;
    let tasks = cfg.trials.div_ceil(TRIALS_PER_TASK);
    let tally = (0..tasks)
        .into_par_iter()
        .map(|task| -> Result<Tally> {
            let mut t = Tally::default();
            let end = ((task + 1) * TRIALS_PER_TASK).min(cfg.trials);
            for trial in task * TRIALS_PER_TASK..end {
                let erased = Subset::new(n, cfg.erasures(n, trial))?;
                let received = ReceivedWord::erase(&sent, &erased)?;
                let it = iterative_decode(h, &received)?;
                let opt = optimal_decode(code, &received)?;
                let it_ok = it.is_decoded();
                let opt_ok = opt.is_decoded();
                for out in [&it, &opt] {
                    if out.codeword().is_some_and(|c| *c != sent) {
                        t.wrong += 1;
                    }
                }
                if let DecodeOutcome::Stalled { recovered, .. } = it {
                    t.recovered += recovered as u64;
                }
                t.it_fail += u64::from(!it_ok);
                t.opt_fail += u64::from(!opt_ok);
                t.mismatch += u64::from(it_ok != opt_ok);
                t.it_beats_opt += u64::from(it_ok && !opt_ok);
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;

    Ok(PerformanceReport {
        config: *cfg,
        analytic_opt,
        analytic_it,
        empirical_opt: Estimate::new(tally.opt_fail, cfg.trials),
        empirical_it: Estimate::new(tally.it_fail, cfg.trials),
        dominant_opt,
        dominant_it,
        event_mismatches: tally.mismatch,
        iterative_beat_optimal: tally.it_beats_opt,
        wrong_decodes: tally.wrong,
        stalled_recovered_bits: tally.recovered,
        rng: RNG_DESCRIPTION,
        protocol: "zero codeword, i.i.d. erasures, normal-approximation 99% intervals (tool-defined protocol)",
    })
}
