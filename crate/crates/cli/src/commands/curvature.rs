use greatcircle::curvature::{build_tensor, recover_fibration, verify_r2_r3, CurvatureTensor4, PropertyReport};
use greatcircle::fibration::PhiMap;
use greatcircle::linalg::Mat2;
use serde::Serialize;

use super::{json_only, rows, CommandResult, Context, Report, SCHEMA_VERSION};
use crate::args::CurvatureArgs;
use crate::output::to_json;

pub const DEFAULT_PLANE_SAMPLES: usize = 20;

#[derive(Serialize)]
struct ComponentJson {
    label: String,
    value: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TensorJson {
    components: Vec<ComponentJson>,
    bianchi_defect: f64,
    kappa_max: f64,
}

impl From<&CurvatureTensor4> for TensorJson {
    fn from(r: &CurvatureTensor4) -> Self {
        let components = r
            .independent_components()
            .into_iter()
            .map(|(idx, value)| ComponentJson { label: format!("R{}{}{}{}", idx[0], idx[1], idx[2], idx[3]), value })
            .collect();
        Self { components, bianchi_defect: r.bianchi_defect(), kappa_max: r.kappa_max() }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct R1Json {
    pass: bool,
    bianchi_defect: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct R2Json {
    pass: bool,
    samples: usize,
    worst_plane_angle: f64,
    min_eigengap: f64,
    max_sectional: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct R3Json {
    pass: bool,
    samples: usize,
    worst_deviation: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PropertyJson {
    r1: R1Json,
    r2: R2Json,
    r3: R3Json,
    worst_residual: f64,
}

impl From<&PropertyReport> for PropertyJson {
    fn from(r: &PropertyReport) -> Self {
        Self {
            r1: R1Json { pass: r.r1.pass, bianchi_defect: r.r1.bianchi_defect },
            r2: R2Json {
                pass: r.r2.pass,
                samples: r.r2.samples,
                worst_plane_angle: r.r2.worst_plane_angle,
                min_eigengap: r.r2.min_eigengap,
                max_sectional: r.r2.max_sectional,
            },
            r3: R3Json { pass: r.r3.pass, samples: r.r3.samples, worst_deviation: r.r3.worst_deviation },
            worst_residual: r.worst_residual,
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CurvatureJson {
    schema_version: u32,
    command: &'static str,
    #[serde(rename = "F")]
    f: [[f64; 2]; 2],
    gamma: f64,
    beta: f64,
    seed: u64,
    tensor: TensorJson,
    report: PropertyJson,
    #[serde(rename = "recoveredF")]
    recovered_f: Option<[[f64; 2]; 2]>,
    recovery_error: Option<String>,
    round_trip_error: Option<f64>,
}

pub fn run(args: &CurvatureArgs, ctx: &Context) -> CommandResult {
    json_only(ctx, "curvature")?;
    let [a, b, c, d] = args.map.entries();
    let phi = PhiMap::new(Mat2::new(a, b, c, d))?;
    let tensor = build_tensor(&phi, args.gamma, args.beta)?;
    let samples = ctx.samples.unwrap_or(DEFAULT_PLANE_SAMPLES);
    let report = verify_r2_r3(&tensor, &phi, samples, ctx.seed, &ctx.tol);
    let recovered = recover_fibration(&tensor);
    let round_trip_error = recovered.as_ref().ok().map(|g| g.matrix().max_abs_diff(phi.matrix()));
    let verified = report.pass() && round_trip_error.is_some_and(|e| e <= ctx.tol.pipeline);
    let json = CurvatureJson {
        schema_version: SCHEMA_VERSION,
        command: "curvature",
        f: rows(phi.matrix()),
        gamma: args.gamma,
        beta: args.beta,
        seed: ctx.seed,
        tensor: (&tensor).into(),
        report: (&report).into(),
        recovered_f: recovered.as_ref().ok().map(|g| rows(g.matrix())),
        recovery_error: recovered.as_ref().err().map(|e| e.to_string()),
        round_trip_error,
    };
    Ok(Report { body: to_json(&json), verified })
}
