//! Iterates one operator from one seed and decomposes the resulting chain
//! into its transient (preperiod) and cycle (period).
//!
//! On a finite state space every chain is rho-shaped: a tail of distinct
//! states feeding a cycle. [`iterate`] finds the exact first-repeat indices
//! with a first-seen map over visited states.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digitspace::{pow10, DigitString};
use crate::error::{Error, Result};
use crate::operators::{OperatorSpec, ZeroPolicy};

/// How a chain ends: a cycle of length one is a constant, the all-zeros
/// constant is singled out, everything else is a proper cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    ReachedZeroConstant,
    ReachedConstant,
    ReachedCycle,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::ReachedZeroConstant => write!(f, "reached_zero_constant"),
            Outcome::ReachedConstant => write!(f, "reached_constant"),
            Outcome::ReachedCycle => write!(f, "reached_cycle"),
        }
    }
}

/// One chain `a, f(a), f(f(a)), ...` cut at its first repeat.
///
/// `states` holds exactly the `preperiod + period` pairwise-distinct values
/// of the rho: `states[0]` is the seed and the operator maps the last state
/// back to `states[preperiod]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    pub spec: OperatorSpec,
    pub seed: DigitString,
    pub states: Vec<DigitString>,
    pub preperiod: usize,
    pub period: usize,
    pub outcome: Outcome,
}

impl Trajectory {
    /// The states on the cycle, in visit order.
    pub fn cycle_states(&self) -> &[DigitString] {
        &self.states[self.preperiod..]
    }
}

/// Iterates `spec` from `seed` until a state repeats, returning the exact
/// rho decomposition.
///
/// `max_steps` bounds the number of operator applications and defaults to
/// `10^width + 1`, which the pigeonhole argument makes sufficient; a smaller
/// caller-imposed budget can end the walk early with `StepBudgetExceeded`.
///
/// States are keyed by integer value. Under the shrink policy the state
/// space is the integers at their natural widths, so the seed is shrunk on
/// entry ("09" and "9" are the same state).
pub fn iterate(spec: &OperatorSpec, seed: DigitString, max_steps: Option<u64>) -> Result<Trajectory> {
    let budget = max_steps.unwrap_or(pow10(spec.width()) + 1);
    if budget == 0 {
        return Err(Error::Validation("max_steps must be >= 1".into()));
    }
    let seed = match spec.zero_policy() {
        ZeroPolicy::Pad => seed,
        ZeroPolicy::Shrink => seed.shrink(),
    };
    let mut states = vec![seed];
    let mut first_seen: HashMap<u64, usize> = HashMap::new();
    first_seen.insert(seed.to_integer(), 0);
    let mut cur = seed;
    let mut steps = 0u64;
    loop {
        if steps == budget {
            return Err(Error::StepBudgetExceeded(budget));
        }
        let next = spec.apply(cur)?;
        steps += 1;
        if let Some(&idx) = first_seen.get(&next.to_integer()) {
            let preperiod = idx;
            let period = states.len() - idx;
            let outcome = outcome_of(&states, preperiod, period);
            return Ok(Trajectory {
                spec: *spec,
                seed,
                states,
                preperiod,
                period,
                outcome,
            });
        }
        first_seen.insert(next.to_integer(), states.len());
        states.push(next);
        cur = next;
    }
}

fn outcome_of(states: &[DigitString], preperiod: usize, period: usize) -> Outcome {
    if period == 1 {
        if states[preperiod].to_integer() == 0 {
            Outcome::ReachedZeroConstant
        } else {
            Outcome::ReachedConstant
        }
    } else {
        Outcome::ReachedCycle
    }
}

/// Re-validates every trajectory invariant and returns the outcome label.
///
/// This replays the operator along `states`, so a tampered or truncated
/// trajectory is reported as `MalformedTrajectory` rather than trusted.
pub fn classify(traj: &Trajectory) -> Result<Outcome> {
    if traj.states.is_empty() {
        return Err(Error::MalformedTrajectory("states must be non-empty".into()));
    }
    if traj.states[0] != traj.seed {
        return Err(Error::MalformedTrajectory("states[0] must equal the seed".into()));
    }
    if traj.period == 0 {
        return Err(Error::MalformedTrajectory("period must be >= 1".into()));
    }
    if traj.preperiod + traj.period != traj.states.len() {
        return Err(Error::MalformedTrajectory(format!(
            "states holds {} entries, expected preperiod + period = {}",
            traj.states.len(),
            traj.preperiod + traj.period
        )));
    }
    let space = pow10(traj.spec.width());
    if (traj.states.len() as u64) > space {
        return Err(Error::MalformedTrajectory(format!(
            "preperiod + period = {} exceeds the pigeonhole bound {space}",
            traj.states.len()
        )));
    }
    let mut seen = HashMap::new();
    for (i, s) in traj.states.iter().enumerate() {
        if let Some(j) = seen.insert(s.to_integer(), i) {
            return Err(Error::MalformedTrajectory(format!(
                "states {j} and {i} are equal; rho states must be pairwise distinct"
            )));
        }
    }
    for (i, pair) in traj.states.windows(2).enumerate() {
        if traj.spec.apply(pair[0])? != pair[1] {
            return Err(Error::MalformedTrajectory(format!(
                "states[{}] does not follow from states[{}] under the operator",
                i + 1,
                i
            )));
        }
    }
    let wrap = traj.spec.apply(*traj.states.last().expect("non-empty"))?;
    if wrap.to_integer() != traj.states[traj.preperiod].to_integer() {
        return Err(Error::MalformedTrajectory(
            "applying the operator to the last state must yield states[preperiod]".into(),
        ));
    }
    let expected = outcome_of(&traj.states, traj.preperiod, traj.period);
    if expected != traj.outcome {
        return Err(Error::MalformedTrajectory(format!(
            "outcome {} does not match the period-{} cycle",
            traj.outcome, traj.period
        )));
    }
    Ok(traj.outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{OperatorKind, parse_operator_spec};

    fn ds(s: &str) -> DigitString {
        s.parse().unwrap()
    }

    fn ints(traj: &Trajectory) -> Vec<u64> {
        traj.states.iter().map(|s| s.to_integer()).collect()
    }

    #[test]
    fn perm_diff_chain_reaches_the_two_cycle() {
        let spec =
            parse_operator_spec(r#"{"kind":"perm_diff","width":3,"p1":"2,3,1","p2":"1,3,2"}"#)
                .unwrap();
        let traj = iterate(&spec, ds("125"), None).unwrap();
        assert_eq!(ints(&traj), vec![125, 99, 891]);
        assert_eq!(traj.preperiod, 1);
        assert_eq!(traj.period, 2);
        assert_eq!(traj.outcome, Outcome::ReachedCycle);
        let cycle: Vec<u64> = traj.cycle_states().iter().map(|s| s.to_integer()).collect();
        assert_eq!(cycle, vec![99, 891]);
    }

    #[test]
    fn reverse_diff_chain_has_the_listed_states() {
        let spec = parse_operator_spec(r#"{"kind":"reverse_diff","width":3}"#).unwrap();
        let traj = iterate(&spec, ds("125"), None).unwrap();
        assert_eq!(ints(&traj), vec![125, 396, 297, 495, 99, 891, 693]);
        assert_eq!((traj.preperiod, traj.period), (2, 5));
    }

    #[test]
    fn fixed_point_seed_gives_trivial_rho() {
        let spec = parse_operator_spec(r#"{"kind":"kaprekar","width":4}"#).unwrap();
        let traj = iterate(&spec, ds("6174"), None).unwrap();
        assert_eq!(ints(&traj), vec![6174]);
        assert_eq!((traj.preperiod, traj.period), (0, 1));
        assert_eq!(traj.outcome, Outcome::ReachedConstant);
    }

    #[test]
    fn degenerate_kaprekar_reaches_the_zero_constant() {
        let spec = parse_operator_spec(r#"{"kind":"kaprekar","width":3}"#).unwrap();
        let traj = iterate(&spec, ds("333"), None).unwrap();
        assert_eq!(traj.outcome, Outcome::ReachedZeroConstant);
        assert_eq!(classify(&traj).unwrap(), Outcome::ReachedZeroConstant);
    }

    #[test]
    fn digit_shift_sub_reaches_a_constant() {
        let spec = parse_operator_spec(
            r#"{"kind":"digit_shift_sub","width":3,"inc_amount":1,"inc_if_less_than":9,"dec_amount":1,"dec_if_greater_than":0}"#,
        )
        .unwrap();
        let traj = iterate(&spec, ds("495"), None).unwrap();
        assert_eq!(ints(&traj), vec![495, 212, 222]);
        assert_eq!(traj.outcome, Outcome::ReachedConstant);
        assert_eq!(traj.states[traj.preperiod], ds("222"));
    }

    #[test]
    fn step_budget_cuts_the_walk_early() {
        let spec = parse_operator_spec(r#"{"kind":"reverse_diff","width":3}"#).unwrap();
        assert!(matches!(
            iterate(&spec, ds("125"), Some(3)),
            Err(Error::StepBudgetExceeded(3))
        ));
        // the natural bound never trips
        assert!(iterate(&spec, ds("125"), Some(1001)).is_ok());
    }

    #[test]
    fn iterating_from_the_cycle_entry_drops_the_tail() {
        let spec = parse_operator_spec(r#"{"kind":"reverse_diff","width":3}"#).unwrap();
        let traj = iterate(&spec, ds("125"), None).unwrap();
        let entry = traj.states[traj.preperiod];
        let tail = iterate(&spec, entry, None).unwrap();
        assert_eq!(tail.preperiod, 0);
        assert_eq!(tail.period, traj.period);
        let mut a: Vec<u64> = tail.states.iter().map(|s| s.to_integer()).collect();
        let mut b: Vec<u64> = traj.cycle_states().iter().map(|s| s.to_integer()).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn shrink_mode_escapes_the_two_digit_cycle() {
        let spec = parse_operator_spec(r#"{"kind":"kaprekar","width":2,"zero_policy":"shrink"}"#)
            .unwrap();
        let traj = iterate(&spec, ds("10"), None).unwrap();
        assert_eq!(traj.outcome, Outcome::ReachedZeroConstant);
        // the walk passes through 09 -> 9 -> 0
        let values = ints(&traj);
        assert!(values.contains(&9));
        assert_eq!(*values.last().unwrap(), 0);
        assert_eq!(classify(&traj).unwrap(), Outcome::ReachedZeroConstant);
    }

    #[test]
    fn classify_rejects_tampered_trajectories() {
        let spec = parse_operator_spec(r#"{"kind":"reverse_diff","width":3}"#).unwrap();
        let good = iterate(&spec, ds("125"), None).unwrap();
        assert_eq!(classify(&good).unwrap(), Outcome::ReachedCycle);

        let mut wrong_states = good.clone();
        wrong_states.states[3] = ds("123");
        assert!(matches!(classify(&wrong_states), Err(Error::MalformedTrajectory(_))));

        let mut wrong_period = good.clone();
        wrong_period.period = 4;
        assert!(matches!(classify(&wrong_period), Err(Error::MalformedTrajectory(_))));

        let mut wrong_outcome = good.clone();
        wrong_outcome.outcome = Outcome::ReachedConstant;
        assert!(matches!(classify(&wrong_outcome), Err(Error::MalformedTrajectory(_))));

        let mut truncated = good;
        truncated.states.truncate(2);
        assert!(matches!(classify(&truncated), Err(Error::MalformedTrajectory(_))));
    }

    #[test]
    fn self_perm_diff_reproduces_the_printed_chain() {
        let spec = OperatorSpec::new(
            OperatorKind::SelfPermDiff { p: "3,1,2".parse().unwrap() },
            3,
        )
        .unwrap();
        let traj = iterate(&spec, ds("125"), None).unwrap();
        assert_eq!(
            ints(&traj),
            vec![125, 387, 351, 216, 405, 135, 378, 459, 486, 162, 54]
        );
        assert_eq!((traj.preperiod, traj.period), (2, 9));
    }
}
