use greatcircle::volume::{berger_report, BergerMetricReport};
use serde::Serialize;

use super::{CommandError, CommandResult, Context, Report, SCHEMA_VERSION};
use crate::args::{BergerArgs, Format};
use crate::output::{cell, to_csv, to_json};

pub const COLUMNS: [&str; 9] = [
    "s",
    "kMin",
    "kMax",
    "fiberLength",
    "delta",
    "injBound",
    "injLessThanBound",
    "deltaBelowNinth",
    "boundary",
];

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RowJson {
    s: f64,
    k_min: f64,
    k_max: f64,
    fiber_length: f64,
    delta: f64,
    inj_bound: f64,
    inj_less_than_bound: bool,
    delta_below_ninth: bool,
    /// The crossover `s² = 1/3`.
    boundary: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SweepJson {
    schema_version: u32,
    command: &'static str,
    rows: Vec<RowJson>,
}

/// Grid values are rounded to 12 decimals so that `0.1 1.0 10` yields
/// `0.3` rather than `0.30000000000000004`.
const GRID_SCALE: f64 = 1e12;

/// Grid `s_min, …, s_max` of `steps` evenly spaced values, plus the
/// crossover `1/√3` when it falls inside.
pub fn sweep(s_min: f64, s_max: f64, steps: usize) -> Result<Vec<(BergerMetricReport, bool)>, CommandError> {
    if steps == 0 {
        return Err(CommandError::Usage("steps must be at least 1".into()));
    }
    if !(s_min > 0.0 && s_min <= s_max && s_max <= 1.0) {
        return Err(greatcircle::Error::OutOfRange.into());
    }
    let mut values: Vec<(f64, bool)> = (0..steps)
        .map(|i| {
            if steps == 1 {
                s_min
            } else {
                let s = s_min + (s_max - s_min) * i as f64 / (steps - 1) as f64;
                ((s * GRID_SCALE).round() / GRID_SCALE).clamp(s_min, s_max)
            }
        })
        .map(|s| (s, false))
        .collect();
    let crossover = 1.0 / 3.0f64.sqrt();
    if s_min <= crossover && crossover <= s_max {
        values.push((crossover, true));
        values.sort_by(|x, y| x.0.total_cmp(&y.0));
    }
    values.into_iter().map(|(s, boundary)| Ok((berger_report(s)?, boundary))).collect()
}

pub fn run(args: &BergerArgs, ctx: &Context) -> CommandResult {
    let rows = sweep(args.s_min, args.s_max, args.steps)?;
    let body = match ctx.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(r, boundary)| {
                    vec![
                        cell(r.s),
                        cell(r.k_min),
                        cell(r.k_max),
                        cell(r.fiber_length),
                        cell(r.delta),
                        cell(r.inj_bound),
                        r.inj_less_than_bound.to_string(),
                        r.delta_below_ninth().to_string(),
                        boundary.to_string(),
                    ]
                })
                .collect();
            to_csv(&COLUMNS, &cells)
        }
        Format::Json => to_json(&SweepJson {
            schema_version: SCHEMA_VERSION,
            command: "berger",
            rows: rows
                .iter()
                .map(|(r, boundary)| RowJson {
                    s: r.s,
                    k_min: r.k_min,
                    k_max: r.k_max,
                    fiber_length: r.fiber_length,
                    delta: r.delta,
                    inj_bound: r.inj_bound,
                    inj_less_than_bound: r.inj_less_than_bound,
                    delta_below_ninth: r.delta_below_ninth(),
                    boundary: *boundary,
                })
                .collect(),
        }),
    };
    Ok(Report { body, verified: true })
}
