//! Random-successor experiments: a seeded pseudorandom *function* (always
//! eventually cyclic, like any operator on a finite set) versus a
//! *fresh-randomness* walk where each successor is drawn independently, so a
//! repeated value says nothing about what follows it.
//!
//! Everything here is deterministic given its seed so reports reproduce
//! bit-for-bit across runs and platforms.

use serde::{Deserialize, Serialize};

use crate::digitspace::{pow10, DigitString};
use crate::dynamics::{self, Outcome};
use crate::error::{Error, Result};
use crate::operators::{OperatorKind, OperatorSpec};

/// The splitmix64 increment.
pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The splitmix64 avalanche finalizer applied to `x + GOLDEN_GAMMA`; all
/// arithmetic wraps mod 2^64. `mix64(0)` equals the generator's published
/// first output, 0xE220A8397B1DCDAF.
#[inline]
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The splitmix64 sequential generator: output n is `mix64(seed + n*gamma)`.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        let out = mix64(self.state);
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        out
    }

    /// Uniform-ish draw in `[0, bound)` by modulo reduction; the bias is
    /// below 2^-40 for bound <= 10^9.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Deterministic pseudorandom successor: for a fixed seed this is a genuine
/// operator on the width-k space, so the pigeonhole argument applies to it.
pub fn fixed_random_step(seed: u64, ds: DigitString) -> DigitString {
    let n = mix64(seed ^ ds.to_integer()) % pow10(ds.width());
    DigitString::from_integer(n, ds.width()).expect("mod keeps value in range")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkMode {
    Fixed,
    Fresh,
}

impl std::fmt::Display for WalkMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WalkMode::Fixed => write!(f, "fixed"),
            WalkMode::Fresh => write!(f, "fresh"),
        }
    }
}

/// Preperiod/period digest of a fixed-mode walk's trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrajectorySummary {
    pub preperiod: usize,
    pub period: usize,
    pub outcome: Outcome,
}

/// Outcome record of one random-walk experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkReport {
    pub mode: WalkMode,
    pub seed: u64,
    pub width: u8,
    /// Total values produced (operator applications in fixed mode, draws in
    /// fresh mode, including the post-repeat probe).
    pub steps_taken: u64,
    /// Index of the second occurrence of the first repeated value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_repeat_index: Option<u64>,
    /// Fresh mode only: did the draw after the repeat match the draw after
    /// its earlier occurrence?
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repeat_consistent: Option<bool>,
    /// Fixed mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trajectory_summary: Option<TrajectorySummary>,
}

/// Iterates the seeded pseudorandom operator from a seed-derived start state
/// until its trajectory repeats.
pub fn fixed_random_walk(seed: u64, width: u8, max_steps: Option<u64>) -> Result<WalkReport> {
    let spec = OperatorSpec::new(OperatorKind::FixedRandom { seed }, width)?;
    let start = DigitString::from_integer(mix64(seed) % pow10(width), width)?;
    let traj = dynamics::iterate(&spec, start, max_steps)?;
    let rho = (traj.preperiod + traj.period) as u64;
    Ok(WalkReport {
        mode: WalkMode::Fixed,
        seed,
        width,
        steps_taken: rho,
        first_repeat_index: Some(rho),
        repeat_consistent: None,
        trajectory_summary: Some(TrajectorySummary {
            preperiod: traj.preperiod,
            period: traj.period,
            outcome: traj.outcome,
        }),
    })
}

/// Draws an independent uniform value per step (no functional relation to
/// the previous value), walks until the first repeated value, then draws one
/// more to record whether the repeat "continued the cycle".
pub fn fresh_random_walk(seed: u64, width: u8, max_steps: u64) -> Result<WalkReport> {
    if max_steps == 0 {
        return Err(Error::Validation("max_steps must be >= 1".into()));
    }
    if width == 0 || width > crate::digitspace::MAX_WIDTH {
        return Err(Error::InvalidWidth(width));
    }
    let bound = pow10(width);
    let mut gen = SplitMix64::new(seed);
    let mut values: Vec<u64> = Vec::new();
    let mut first_seen = std::collections::HashMap::new();
    for i in 0..max_steps {
        let v = gen.next_below(bound);
        values.push(v);
        if let Some(&earlier) = first_seen.get(&v) {
            let probe = gen.next_below(bound);
            let historical = values[earlier as usize + 1];
            return Ok(WalkReport {
                mode: WalkMode::Fresh,
                seed,
                width,
                steps_taken: i + 2,
                first_repeat_index: Some(i),
                repeat_consistent: Some(probe == historical),
                trajectory_summary: None,
            });
        }
        first_seen.insert(v, i);
    }
    Ok(WalkReport {
        mode: WalkMode::Fresh,
        seed,
        width,
        steps_taken: max_steps,
        first_repeat_index: None,
        repeat_consistent: None,
        trajectory_summary: None,
    })
}

/// Aggregate numbers over one sweep of walks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub walks: u64,
    /// Walks that observed a repeated value within budget.
    pub repeats_observed: u64,
    /// Fresh mode: walks whose post-repeat draw matched history.
    pub consistent_repeats: u64,
    /// Fixed mode: the largest preperiod + period seen.
    pub max_rho: u64,
    /// Fixed mode: every rho stayed within 10^width.
    pub all_within_pigeonhole: bool,
}

/// A batch of walks with consecutive seeds plus their summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSweep {
    pub mode: WalkMode,
    pub width: u8,
    pub base_seed: u64,
    pub walks: Vec<WalkReport>,
    pub summary: SweepSummary,
}

/// Runs `count` walks with seeds `base_seed..base_seed+count`.
///
/// Fresh mode defaults `max_steps` to `10^width + 1`, which the pigeonhole
/// argument makes sufficient for a repeat.
pub fn run_sweep(
    mode: WalkMode,
    base_seed: u64,
    width: u8,
    count: u64,
    max_steps: Option<u64>,
) -> Result<WalkSweep> {
    if count == 0 {
        return Err(Error::Validation("walk count must be >= 1".into()));
    }
    let mut walks = Vec::with_capacity(count as usize);
    let mut repeats_observed = 0;
    let mut consistent_repeats = 0;
    let mut max_rho = 0;
    let mut all_within = true;
    for i in 0..count {
        let seed = base_seed.wrapping_add(i);
        let report = match mode {
            WalkMode::Fixed => fixed_random_walk(seed, width, max_steps)?,
            WalkMode::Fresh => {
                fresh_random_walk(seed, width, max_steps.unwrap_or(pow10(width) + 1))?
            }
        };
        if report.first_repeat_index.is_some() {
            repeats_observed += 1;
        }
        if report.repeat_consistent == Some(true) {
            consistent_repeats += 1;
        }
        if let Some(summary) = &report.trajectory_summary {
            let rho = (summary.preperiod + summary.period) as u64;
            max_rho = max_rho.max(rho);
            all_within &= rho <= pow10(width);
        }
        walks.push(report);
    }
    Ok(WalkSweep {
        mode,
        width,
        base_seed,
        walks,
        summary: SweepSummary {
            walks: count,
            repeats_observed,
            consistent_repeats,
            max_rho,
            all_within_pigeonhole: all_within,
        },
    })
}
