use greatcircle::fibration::{
    orthogonal_fiber_pair, phi_to_structure, structure_to_phi, verify_fibration, FibrationReport,
};
use greatcircle::linalg::{Mat2, Mat4};
use serde::Serialize;

use super::{fibration_from, json_only, rows, CommandResult, Context, PlaneJson, Report, SCHEMA_VERSION};
use crate::args::{CheckArgs, MapArgs};
use crate::output::to_json;

pub const DEFAULT_PAIR_SAMPLES: usize = 1000;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BuildJson {
    schema_version: u32,
    command: &'static str,
    #[serde(rename = "F")]
    f: [[f64; 2]; 2],
    #[serde(rename = "D")]
    d: f64,
    #[serde(rename = "J")]
    j: [[f64; 4]; 4],
    j_squared_error: f64,
    round_trip_error: f64,
}

pub fn build(args: &MapArgs, ctx: &Context) -> CommandResult {
    json_only(ctx, "fibration build")?;
    let [a, b, c, d] = args.entries();
    let phi = greatcircle::fibration::PhiMap::new(Mat2::new(a, b, c, d))?;
    let j = phi_to_structure(&phi)?;
    let back = structure_to_phi(&j)?;
    let report = BuildJson {
        schema_version: SCHEMA_VERSION,
        command: "fibration build",
        f: rows(phi.matrix()),
        d: phi.discriminant(),
        j: j.matrix().0,
        j_squared_error: (*j.matrix() * *j.matrix()).max_abs_diff(&-Mat4::identity()),
        round_trip_error: back.matrix().max_abs_diff(phi.matrix()),
    };
    let verified = report.round_trip_error <= ctx.tol.exact && report.j_squared_error <= ctx.tol.pipeline;
    Ok(Report { body: to_json(&report), verified })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FibrationReportJson {
    clean: bool,
    pairs: usize,
    #[serde(rename = "minSeparationSV")]
    min_separation_sv: Option<f64>,
    witness: Option<[[f64; 4]; 2]>,
}

impl From<&FibrationReport> for FibrationReportJson {
    fn from(r: &FibrationReport) -> Self {
        Self {
            clean: r.clean,
            pairs: r.pairs,
            min_separation_sv: r.min_separation_sv.is_finite().then_some(r.min_separation_sv),
            witness: r.witness.map(|(x, y)| [x.0, y.0]),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OrthogonalPairJson {
    residual: f64,
    first: PlaneJson,
    second: PlaneJson,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckJson {
    schema_version: u32,
    command: &'static str,
    #[serde(rename = "F")]
    f: Option<[[f64; 2]; 2]>,
    #[serde(rename = "D")]
    d: Option<f64>,
    seed: u64,
    report: FibrationReportJson,
    orthogonal_pair: Option<OrthogonalPairJson>,
    orthogonal_pair_error: Option<String>,
}

pub fn check(args: &CheckArgs, ctx: &Context) -> CommandResult {
    json_only(ctx, "fibration check")?;
    let (fibration, phi) = fibration_from(&args.map, args.force)?;
    let samples = ctx.samples.unwrap_or(DEFAULT_PAIR_SAMPLES);
    let report = verify_fibration(&fibration, samples, ctx.seed, &ctx.tol);
    let valid = phi.map_or(true, |p| p.is_valid());
    let (pair, pair_error) = if valid {
        match orthogonal_fiber_pair(&fibration, args.grid) {
            Ok(p) => (
                Some(OrthogonalPairJson { residual: p.residual, first: (&p.first).into(), second: (&p.second).into() }),
                None,
            ),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, Some("F has a real eigenvalue; no fibration to search".into()))
    };
    let json = CheckJson {
        schema_version: SCHEMA_VERSION,
        command: "fibration check",
        f: phi.map(|p| rows(p.matrix())),
        d: phi.map(|p| p.discriminant()),
        seed: ctx.seed,
        report: (&report).into(),
        orthogonal_pair: pair,
        orthogonal_pair_error: pair_error,
    };
    Ok(Report { body: to_json(&json), verified: report.clean })
}
