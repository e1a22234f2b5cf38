use greatcircle::volume::{
    beta_closed_form, beta_quadrature, cross_volume, holder_equality_residual, lemma27_residual, sphere_volume,
    ModelSpaceParams, QuadratureConfig,
};
use serde::Serialize;

use super::{CommandResult, Context, Report, SCHEMA_VERSION};
use crate::args::{Format, VolumeArgs};
use crate::output::{cell, to_csv, to_json};

/// Agreement required between quadrature and the Beta closed form.
pub const BETA_AGREEMENT: f64 = 1e-8;
pub const LEMMA27_TOL: f64 = 1e-8;
pub const HOLDER_TOL: f64 = 1e-6;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VolumeJson {
    schema_version: u32,
    command: &'static str,
    a: u32,
    n: u32,
    beta_quadrature: f64,
    beta_closed_form: f64,
    beta_relative_error: f64,
    cross_volume: f64,
    sphere_volume: f64,
    lemma27_residual: f64,
    /// `null` when the Hölder order `an − a` is below 2.
    holder_residual: Option<f64>,
}

const COLUMNS: [&str; 9] = [
    "a",
    "n",
    "betaQuadrature",
    "betaClosedForm",
    "betaRelativeError",
    "crossVolume",
    "sphereVolume",
    "lemma27Residual",
    "holderResidual",
];

pub fn run(args: &VolumeArgs, ctx: &Context) -> CommandResult {
    let p = ModelSpaceParams::new(args.a, args.n)?;
    let cfg = QuadratureConfig::new(args.panels, args.nodes, ctx.tol.quadrature)?;
    let quadrature = beta_quadrature(&p, &cfg)?;
    let closed = beta_closed_form(&p);
    let lemma27 = lemma27_residual(&p, &cfg)?;
    let holder = if p.holder_order() >= 2 { Some(holder_equality_residual(&p, &cfg)?) } else { None };
    let json = VolumeJson {
        schema_version: SCHEMA_VERSION,
        command: "volume",
        a: p.a(),
        n: p.n(),
        beta_quadrature: quadrature,
        beta_closed_form: closed,
        beta_relative_error: (quadrature - closed).abs() / closed,
        cross_volume: cross_volume(&p),
        sphere_volume: sphere_volume(p.dimension() - 1),
        lemma27_residual: lemma27,
        holder_residual: holder,
    };
    let verified = json.beta_relative_error < BETA_AGREEMENT
        && lemma27 < LEMMA27_TOL
        && holder.map_or(true, |h| h < HOLDER_TOL);
    let body = match ctx.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&json),
        Format::Csv => {
            let row = vec![
                json.a.to_string(),
                json.n.to_string(),
                cell(json.beta_quadrature),
                cell(json.beta_closed_form),
                cell(json.beta_relative_error),
                cell(json.cross_volume),
                cell(json.sphere_volume),
                cell(json.lemma27_residual),
                json.holder_residual.map_or(String::new(), cell),
            ];
            to_csv(&COLUMNS, &[row])
        }
    };
    Ok(Report { body, verified })
}
