use greatcircle::grassmann::{base_surface, gage_decompose, graph_domain, lipschitz_check, BaseSurfaceSample};
use serde::Serialize;

use super::{fibration_from, rows, CommandResult, Context, Report, SCHEMA_VERSION};
use crate::args::{Format, GrassmannArgs};
use crate::output::{cell, to_csv, to_json};

pub const DEFAULT_SURFACE_POINTS: usize = 500;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct LipschitzJson {
    max_ratio: f64,
    witness: Option<[usize; 2]>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct DecompositionJson {
    plane_normal: [f64; 3],
    image_normal: [f64; 3],
    #[serde(rename = "L")]
    l: [[f64; 2]; 2],
    singular_values: [f64; 2],
    rank: u8,
    residual: f64,
    domain_factor: &'static str,
    degenerate_plane: bool,
    images_in_open_hemisphere: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GrassmannJson {
    schema_version: u32,
    command: &'static str,
    #[serde(rename = "F")]
    f: Option<[[f64; 2]; 2]>,
    seed: u64,
    sample_points: usize,
    domain_factor: &'static str,
    lipschitz: LipschitzJson,
    decomposition: DecompositionJson,
}

pub const SURFACE_COLUMNS: [&str; 8] = ["lambda3", "lambda4", "xm1", "xm2", "xm3", "xp1", "xp2", "xp3"];

fn surface_csv(s: &BaseSurfaceSample) -> String {
    let rows: Vec<Vec<String>> = s
        .points
        .iter()
        .map(|p| {
            let (l3, l4) = p.lambda.map_or((String::new(), String::new()), |l| (cell(l[0]), cell(l[1])));
            let mut row = vec![l3, l4];
            row.extend(p.xi_minus.iter().chain(&p.xi_plus).map(|&x| cell(x)));
            row
        })
        .collect();
    to_csv(&SURFACE_COLUMNS, &rows)
}

pub fn run(args: &GrassmannArgs, ctx: &Context) -> CommandResult {
    let (fibration, phi) = fibration_from(&args.map, false)?;
    let samples = ctx.samples.unwrap_or(DEFAULT_SURFACE_POINTS);
    let surface = base_surface(&fibration, samples, ctx.seed)?;
    let domain = graph_domain(&surface)?;
    let lipschitz = lipschitz_check(&surface, domain)?;
    let g = gage_decompose(&surface, &ctx.tol)?;
    let verified = lipschitz.max_ratio <= 1.0 + ctx.tol.lipschitz && g.fit_residual < ctx.tol.fit;
    let body = match ctx.format.unwrap_or(Format::Json) {
        Format::Csv => surface_csv(&surface),
        Format::Json => to_json(&GrassmannJson {
            schema_version: SCHEMA_VERSION,
            command: "grassmann",
            f: phi.map(|p| rows(p.matrix())),
            seed: ctx.seed,
            sample_points: surface.points.len(),
            domain_factor: domain.name(),
            lipschitz: LipschitzJson { max_ratio: lipschitz.max_ratio, witness: lipschitz.witness.map(|(i, j)| [i, j]) },
            decomposition: DecompositionJson {
                plane_normal: g.plane_normal,
                image_normal: g.image_normal,
                l: rows(&g.linear_map),
                singular_values: [g.singular_values.0, g.singular_values.1],
                rank: g.rank,
                residual: g.fit_residual,
                domain_factor: g.domain.name(),
                degenerate_plane: g.degenerate_plane,
                images_in_open_hemisphere: g.images_in_open_hemisphere(&surface),
            },
        }),
    };
    Ok(Report { body, verified })
}
