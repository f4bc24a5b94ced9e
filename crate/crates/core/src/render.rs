//! Report rendering: text for humans, JSON for machines, CSV for diffable
//! fixtures. Identical inputs render byte-identically; timestamps only
//! appear when explicitly requested.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::atlas::AtlasReport;
use crate::dynamics::Trajectory;
use crate::operators::ZeroPolicy;
use crate::randomops::{WalkMode, WalkSweep};

/// Every CSV emission starts with this versioned header line.
pub const CSV_SCHEMA_LINE: &str = "schema=1";

fn pad(state: u64, width: u8) -> String {
    format!("{:0>width$}", state, width = width as usize)
}

/// JSON rendering goes through a `Value` so optional extras (timestamps,
/// the shrink-mode state-key marker) slot in without changing the layout of
/// the rest.
fn json_with<T: Serialize>(value: &T, extras: &[(&str, Value)]) -> String {
    let mut v = serde_json::to_value(value).expect("report types serialize");
    if let Value::Object(map) = &mut v {
        for (key, val) in extras {
            map.insert((*key).to_string(), val.clone());
        }
    }
    let mut out = serde_json::to_string_pretty(&v).expect("json renders");
    out.push('\n');
    out
}

fn shrink_marker(traj: &Trajectory) -> bool {
    traj.spec.zero_policy() == ZeroPolicy::Shrink
}

pub fn trajectory_text(traj: &Trajectory) -> String {
    let mut out = String::new();
    for s in &traj.states {
        let _ = writeln!(out, "{s}");
    }
    let _ = writeln!(out, "cycle re-enters at {}", traj.states[traj.preperiod]);
    let _ = write!(
        out,
        "preperiod={} period={} outcome={}",
        traj.preperiod, traj.period, traj.outcome
    );
    if shrink_marker(traj) {
        out.push_str(" state_key=integer");
    }
    out.push('\n');
    out
}

pub fn trajectory_json(traj: &Trajectory, timestamp: Option<&str>) -> String {
    let mut extras: Vec<(&str, Value)> = Vec::new();
    if shrink_marker(traj) {
        extras.push(("state_key", Value::String("integer".into())));
    }
    if let Some(ts) = timestamp {
        extras.push(("generated_at", Value::String(ts.into())));
    }
    json_with(traj, &extras)
}

pub fn trajectory_csv(traj: &Trajectory, timestamp: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_SCHEMA_LINE}");
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "generated_at,{ts}");
    }
    out.push_str("step,state\n");
    for (i, s) in traj.states.iter().enumerate() {
        let _ = writeln!(out, "{i},{s}");
    }
    out.push('\n');
    if shrink_marker(traj) {
        out.push_str("preperiod,period,outcome,state_key\n");
        let _ = writeln!(out, "{},{},{},integer", traj.preperiod, traj.period, traj.outcome);
    } else {
        out.push_str("preperiod,period,outcome\n");
        let _ = writeln!(out, "{},{},{}", traj.preperiod, traj.period, traj.outcome);
    }
    out
}

pub fn atlas_text(report: &AtlasReport) -> String {
    let width = report.spec.width();
    let mut out = String::new();
    let _ = writeln!(out, "operator: {}", report.spec.to_json());
    let _ = writeln!(out, "states: {}", report.total_states);
    let _ = writeln!(out, "cycles ({}):", report.cycles.len());
    for c in &report.cycles {
        let _ = writeln!(
            out,
            "  cycle {}: length={} min={} basin={}",
            c.id,
            c.length,
            pad(c.min_state, width),
            c.basin_size
        );
    }
    let fixed: Vec<String> = report.fixed_points.iter().map(|&s| pad(s, width)).collect();
    let _ = writeln!(out, "fixed points ({}): {}", fixed.len(), fixed.join(" "));
    let _ = writeln!(
        out,
        "max transient: {} (witness {})",
        report.max_transient,
        pad(report.max_transient_witness, width)
    );
    let _ = writeln!(out, "zero basin: {}", report.zero_basin_count);
    let _ = writeln!(
        out,
        "constant-reaching states: {} / cycle-reaching states: {}",
        report.constant_reaching_states(),
        report.cycle_reaching_states()
    );
    out.push_str("transient histogram:\n");
    for (len, count) in &report.transient_histogram {
        let _ = writeln!(out, "  {len}: {count}");
    }
    out
}

pub fn atlas_json(report: &AtlasReport, timestamp: Option<&str>) -> String {
    let mut extras: Vec<(&str, Value)> = Vec::new();
    if let Some(ts) = timestamp {
        extras.push(("generated_at", Value::String(ts.into())));
    }
    json_with(report, &extras)
}

pub fn atlas_csv(report: &AtlasReport, timestamp: Option<&str>) -> String {
    let width = report.spec.width();
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_SCHEMA_LINE}");
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "generated_at,{ts}");
    }
    out.push_str("cycle_id,length,min_state,basin_size\n");
    for c in &report.cycles {
        let _ = writeln!(out, "{},{},{},{}", c.id, c.length, pad(c.min_state, width), c.basin_size);
    }
    out.push('\n');
    out.push_str("transient_len,count\n");
    for (len, count) in &report.transient_histogram {
        let _ = writeln!(out, "{len},{count}");
    }
    out
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "none".to_string(),
    }
}

pub fn walks_text(sweep: &WalkSweep) -> String {
    let mut out = String::new();
    for (i, w) in sweep.walks.iter().enumerate() {
        match w.mode {
            WalkMode::Fixed => {
                let summary = w.trajectory_summary.expect("fixed walks carry a summary");
                let _ = writeln!(
                    out,
                    "walk {i}: mode=fixed seed={} width={} steps={} first_repeat={} preperiod={} period={} outcome={}",
                    w.seed,
                    w.width,
                    w.steps_taken,
                    opt(&w.first_repeat_index),
                    summary.preperiod,
                    summary.period,
                    summary.outcome
                );
            }
            WalkMode::Fresh => {
                let _ = writeln!(
                    out,
                    "walk {i}: mode=fresh seed={} width={} steps={} first_repeat={} repeat_consistent={}",
                    w.seed,
                    w.width,
                    w.steps_taken,
                    opt(&w.first_repeat_index),
                    opt(&w.repeat_consistent)
                );
            }
        }
    }
    let s = &sweep.summary;
    match sweep.mode {
        WalkMode::Fixed => {
            let _ = writeln!(
                out,
                "summary: walks={} max_rho={} within_pigeonhole={}",
                s.walks, s.max_rho, s.all_within_pigeonhole
            );
        }
        WalkMode::Fresh => {
            let frequency = s.consistent_repeats as f64 / s.walks as f64;
            let _ = writeln!(
                out,
                "summary: walks={} repeats={} consistent={} frequency={}",
                s.walks, s.repeats_observed, s.consistent_repeats, frequency
            );
        }
    }
    out
}

pub fn walks_json(sweep: &WalkSweep, timestamp: Option<&str>) -> String {
    let mut extras: Vec<(&str, Value)> = Vec::new();
    if let Some(ts) = timestamp {
        extras.push(("generated_at", Value::String(ts.into())));
    }
    json_with(sweep, &extras)
}

pub fn walks_csv(sweep: &WalkSweep, timestamp: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_SCHEMA_LINE}");
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "generated_at,{ts}");
    }
    out.push_str(
        "walk,mode,seed,width,steps_taken,first_repeat_index,repeat_consistent,preperiod,period,outcome\n",
    );
    for (i, w) in sweep.walks.iter().enumerate() {
        let blank = |s: String| if s == "none" { String::new() } else { s };
        let (pre, per, outcome) = match &w.trajectory_summary {
            Some(t) => (t.preperiod.to_string(), t.period.to_string(), t.outcome.to_string()),
            None => (String::new(), String::new(), String::new()),
        };
        let _ = writeln!(
            out,
            "{i},{},{},{},{},{},{},{pre},{per},{outcome}",
            w.mode,
            w.seed,
            w.width,
            w.steps_taken,
            blank(opt(&w.first_repeat_index)),
            blank(opt(&w.repeat_consistent)),
        );
    }
    out
}

/// Static parameter schema of the operator catalog, for the `ops` listing.
pub const OPERATOR_SCHEMAS: [(&str, &str, bool); 9] = [
    ("kaprekar", "", true),
    ("perm_diff", "p1 p2", false),
    ("self_perm_diff", "p", false),
    ("reverse_diff", "", true),
    ("sf_swap_add", "grouping", false),
    ("digit_shift_sub", "inc_amount inc_if_less_than dec_amount dec_if_greater_than", true),
    ("affine_mod", "m c", false),
    ("digit_power_sum", "exponent", false),
    ("fixed_random", "seed", false),
];

pub fn ops_text() -> String {
    let mut out = String::new();
    out.push_str("kind             parameters                                                  shrink\n");
    for (kind, params, shrink) in OPERATOR_SCHEMAS {
        let shown = if params.is_empty() { "(none)" } else { params };
        let _ = writeln!(out, "{kind:<16} {shown:<59} {}", if shrink { "yes" } else { "no" });
    }
    out.push_str("\ncommon fields: width (1..=9, required), zero_policy (\"pad\" default | \"shrink\")\n");
    out.push_str("permutations are comma-separated 1-based source positions, e.g. \"2,3,1\"\n");
    out.push_str("groupings are comma-separated part sizes summing to width, e.g. \"1,2\"\n");
    out
}

pub fn ops_json(timestamp: Option<&str>) -> String {
    let kinds: Vec<Value> = OPERATOR_SCHEMAS
        .iter()
        .map(|(kind, params, shrink)| {
            let params: Vec<Value> = params
                .split_whitespace()
                .map(|p| Value::String(p.to_string()))
                .collect();
            serde_json::json!({
                "kind": kind,
                "params": params,
                "shrink_allowed": shrink,
            })
        })
        .collect();
    let mut top = serde_json::Map::new();
    top.insert("kinds".into(), Value::Array(kinds));
    if let Some(ts) = timestamp {
        top.insert("generated_at".into(), Value::String(ts.into()));
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(top)).expect("json renders");
    out.push('\n');
    out
}

pub fn ops_csv(timestamp: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_SCHEMA_LINE}");
    if let Some(ts) = timestamp {
        let _ = writeln!(out, "generated_at,{ts}");
    }
    out.push_str("kind,params,shrink_allowed\n");
    for (kind, params, shrink) in OPERATOR_SCHEMAS {
        let _ = writeln!(out, "{kind},{params},{shrink}");
    }
    out
}
