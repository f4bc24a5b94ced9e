//! Exhaustive functional-graph analysis of one operator over all 10^k
//! states: every cycle, every fixed point, every transient length, every
//! basin, from a single linear pass over a materialized successor table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digitspace::{pow10, DigitString, MAX_WIDTH};
use crate::dynamics;
use crate::error::{Error, Result};
use crate::operators::{OperatorSpec, ZeroPolicy};

/// Default width ceiling for table construction: 10^7 entries is the desk
/// budget. Callers can raise it to [`HARD_WIDTH_CAP`] explicitly.
pub const DEFAULT_WIDTH_CEILING: u8 = 7;

/// Absolute cap so every state index fits the table's u32 entries.
pub const HARD_WIDTH_CAP: u8 = MAX_WIDTH;

/// The operator materialized over the whole width-k space:
/// `succ[n] = f(n)` for every `n` in `0..10^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorTable {
    width: u8,
    succ: Vec<u32>,
}

impl SuccessorTable {
    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn successor(&self, state: u64) -> u64 {
        u64::from(self.succ[state as usize])
    }

    pub fn entries(&self) -> &[u32] {
        &self.succ
    }
}

/// Fills a successor table by applying the operator to every state. Entries
/// are independent, so the fill is partitioned across the current rayon
/// pool; the result does not depend on the thread count.
pub fn build_successors(spec: &OperatorSpec) -> Result<SuccessorTable> {
    build_successors_with_ceiling(spec, DEFAULT_WIDTH_CEILING)
}

/// As [`build_successors`] with an explicit width ceiling (hard cap 9).
pub fn build_successors_with_ceiling(spec: &OperatorSpec, ceiling: u8) -> Result<SuccessorTable> {
    if spec.zero_policy() != ZeroPolicy::Pad {
        return Err(Error::ShrinkPolicyUnsupported);
    }
    let ceiling = ceiling.min(HARD_WIDTH_CAP);
    let width = spec.width();
    if width > ceiling {
        return Err(Error::WidthTooLarge { width, ceiling });
    }
    let total = pow10(width) as usize;
    let mut succ = vec![0u32; total];
    succ.par_chunks_mut(1 << 12).enumerate().try_for_each(|(chunk, slots)| {
        let base = chunk << 12;
        for (off, slot) in slots.iter_mut().enumerate() {
            let state = DigitString::from_integer((base + off) as u64, width)?;
            *slot = spec.apply(state)?.to_integer() as u32;
        }
        Ok::<(), Error>(())
    })?;
    Ok(SuccessorTable { width, succ })
}

/// One cycle of the functional graph, rotated so its minimum state comes
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleInfo {
    pub id: u32,
    pub length: usize,
    pub min_state: u64,
    pub basin_size: u64,
    pub states: Vec<u64>,
}

/// Full functional-graph summary of one operator over all 10^k states.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasReport {
    pub spec: OperatorSpec,
    pub total_states: u64,
    pub cycles: Vec<CycleInfo>,
    pub fixed_points: Vec<u64>,
    pub max_transient: u32,
    pub max_transient_witness: u64,
    pub transient_histogram: BTreeMap<u32, u64>,
    pub zero_basin_count: u64,
}

impl AtlasReport {
    /// Basin size per cycle id.
    pub fn basin_sizes(&self) -> BTreeMap<u32, u64> {
        self.cycles.iter().map(|c| (c.id, c.basin_size)).collect()
    }

    /// States that reach a period-1 cycle (the "reaches a constant" side of
    /// the constant-vs-cycle partition).
    pub fn constant_reaching_states(&self) -> u64 {
        self.cycles.iter().filter(|c| c.length == 1).map(|c| c.basin_size).sum()
    }

    /// States that reach a cycle of length two or more.
    pub fn cycle_reaching_states(&self) -> u64 {
        self.total_states - self.constant_reaching_states()
    }

    pub fn cycle_containing(&self, state: u64) -> Option<&CycleInfo> {
        self.cycles.iter().find(|c| c.states.contains(&state))
    }
}

/// Per-state classification produced alongside the report.
struct Resolution {
    transient: Vec<u32>,
    cycle_id: Vec<u32>,
    cycles: Vec<Vec<u32>>,
}

fn resolve(table: &SuccessorTable) -> Resolution {
    let n = table.len();
    const UNVISITED: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let mut mark = vec![UNVISITED; n];
    let mut path_pos = vec![0u32; n];
    let mut transient = vec![0u32; n];
    let mut cycle_id = vec![0u32; n];
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut path: Vec<u32> = Vec::new();

    for start in 0..n {
        if mark[start] == DONE {
            continue;
        }
        path.clear();
        let mut cur = start;
        loop {
            match mark[cur] {
                DONE => {
                    // Attach the walked tail behind an already-resolved state.
                    let cid = cycle_id[cur];
                    let base = transient[cur];
                    for (back, &s) in path.iter().rev().enumerate() {
                        let s = s as usize;
                        transient[s] = base + back as u32 + 1;
                        cycle_id[s] = cid;
                        mark[s] = DONE;
                    }
                    break;
                }
                ON_PATH => {
                    // Closed a new cycle: everything from cur's path position on.
                    let entry = path_pos[cur] as usize;
                    let cid = cycles.len() as u32;
                    for &s in &path[entry..] {
                        transient[s as usize] = 0;
                        cycle_id[s as usize] = cid;
                        mark[s as usize] = DONE;
                    }
                    cycles.push(path[entry..].to_vec());
                    for (back, &s) in path[..entry].iter().rev().enumerate() {
                        let s = s as usize;
                        transient[s] = back as u32 + 1;
                        cycle_id[s] = cid;
                        mark[s] = DONE;
                    }
                    break;
                }
                _ => {
                    mark[cur] = ON_PATH;
                    path_pos[cur] = path.len() as u32;
                    path.push(cur as u32);
                    cur = table.succ[cur] as usize;
                }
            }
        }
    }
    Resolution { transient, cycle_id, cycles }
}

/// Identifies all cycles, transients and basins of the table in linear time
/// and assembles the report. Cycle ids are canonical: each cycle is rotated
/// so its minimum state leads, and cycles are sorted by that minimum.
pub fn analyze(table: &SuccessorTable, spec: &OperatorSpec) -> AtlasReport {
    let Resolution { transient, cycle_id, mut cycles } = resolve(table);

    // Canonical rotation and ordering.
    for cycle in &mut cycles {
        let min_at = cycle
            .iter()
            .enumerate()
            .min_by_key(|(_, &s)| s)
            .map(|(i, _)| i)
            .expect("cycles are non-empty");
        cycle.rotate_left(min_at);
    }
    let mut order: Vec<usize> = (0..cycles.len()).collect();
    order.sort_unstable_by_key(|&i| cycles[i][0]);
    let mut renumber = vec![0u32; cycles.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        renumber[old_id] = new_id as u32;
    }

    let mut basin = vec![0u64; cycles.len()];
    for &cid in &cycle_id {
        basin[renumber[cid as usize] as usize] += 1;
    }

    let infos: Vec<CycleInfo> = order
        .iter()
        .enumerate()
        .map(|(new_id, &old_id)| CycleInfo {
            id: new_id as u32,
            length: cycles[old_id].len(),
            min_state: u64::from(cycles[old_id][0]),
            basin_size: basin[new_id],
            states: cycles[old_id].iter().map(|&s| u64::from(s)).collect(),
        })
        .collect();

    let fixed_points: Vec<u64> =
        infos.iter().filter(|c| c.length == 1).map(|c| c.min_state).collect();

    let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
    let mut max_transient = 0u32;
    let mut witness = 0u64;
    for (state, &t) in transient.iter().enumerate() {
        *histogram.entry(t).or_insert(0) += 1;
        if t > max_transient {
            max_transient = t;
            witness = state as u64;
        }
    }

    // States that eventually visit the all-zeros state: the basin of zero's
    // cycle when zero lies on one, otherwise zero by definition.
    let zero_basin_count = if transient[0] == 0 {
        basin[renumber[cycle_id[0] as usize] as usize]
    } else {
        0
    };

    AtlasReport {
        spec: *spec,
        total_states: table.len() as u64,
        cycles: infos,
        fixed_points,
        max_transient,
        max_transient_witness: witness,
        transient_histogram: histogram,
        zero_basin_count,
    }
}

/// Convenience: build the table and analyze it in one call.
pub fn build_atlas(spec: &OperatorSpec) -> Result<AtlasReport> {
    let table = build_successors(spec)?;
    Ok(analyze(&table, spec))
}

/// Outcome of the atlas-vs-trajectory equivalence gate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub states_checked: u64,
    /// Lowest disagreeing state, when any.
    pub counterexample: Option<u64>,
}

/// Replays every state through [`dynamics::iterate`] and checks that the
/// per-seed rho decomposition agrees with the atlas on transient length,
/// period, and owning cycle. Exhaustive, so capped at width 4.
pub fn verify_against_trajectories(spec: &OperatorSpec) -> Result<VerificationReport> {
    if spec.width() > 4 {
        return Err(Error::Validation(format!(
            "exhaustive verification is capped at width 4, got {}",
            spec.width()
        )));
    }
    let table = build_successors(spec)?;
    let Resolution { transient, cycle_id, cycles } = resolve(&table);
    let cycle_min: Vec<u64> = cycles
        .iter()
        .map(|c| u64::from(*c.iter().min().expect("cycles are non-empty")))
        .collect();

    let total = table.len() as u64;
    for n in 0..total {
        let seed = DigitString::from_integer(n, spec.width())?;
        let traj = dynamics::iterate(spec, seed, None)?;
        let cid = cycle_id[n as usize] as usize;
        let traj_cycle_min =
            traj.cycle_states().iter().map(|s| s.to_integer()).min().expect("cycle non-empty");
        let agree = traj.preperiod == transient[n as usize] as usize
            && traj.period == cycles[cid].len()
            && traj_cycle_min == cycle_min[cid];
        if !agree {
            return Ok(VerificationReport {
                passed: false,
                states_checked: n + 1,
                counterexample: Some(n),
            });
        }
    }
    Ok(VerificationReport { passed: true, states_checked: total, counterexample: None })
}

fn pad(state: u64, width: u8) -> String {
    format!("{:0>width$}", state, width = width as usize)
}

/// DOT digraph of the condensed cycle structure: one node per cycle labeled
/// with its length and basin size.
pub fn to_dot_condensed(report: &AtlasReport) -> String {
    let width = report.spec.width();
    let mut out = String::new();
    out.push_str("digraph atlas {\n");
    let _ = writeln!(out, "  label=\"{} condensed\";", report.spec.to_json().replace('"', "\\\""));
    out.push_str("  node [shape=ellipse];\n");
    for c in &report.cycles {
        let _ = writeln!(
            out,
            "  c{} [label=\"cycle {}\\nlen={} basin={}\\nmin={}\"];",
            c.id,
            c.id,
            c.length,
            c.basin_size,
            pad(c.min_state, width)
        );
        let _ = writeln!(out, "  c{} -> c{};", c.id, c.id);
    }
    out.push_str("}\n");
    out
}

/// DOT digraph of the full state graph (every edge `n -> f(n)`); limited to
/// width 3 to keep the emission readable.
pub fn to_dot_full(table: &SuccessorTable) -> Result<String> {
    if table.width() > 3 {
        return Err(Error::Validation(format!(
            "full state-graph emission is capped at width 3, got {}",
            table.width()
        )));
    }
    let width = table.width();
    let mut out = String::new();
    out.push_str("digraph states {\n");
    out.push_str("  node [shape=box];\n");
    for n in 0..table.len() as u64 {
        let _ = writeln!(
            out,
            "  s{} [label=\"{}\"]; s{} -> s{};",
            n,
            pad(n, width),
            n,
            table.successor(n)
        );
    }
    out.push_str("}\n");
    Ok(out)
}
