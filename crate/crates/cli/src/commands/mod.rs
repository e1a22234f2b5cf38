//! Subcommand implementations. Each returns the rendered report and whether
//! its verification passed.

pub mod berger;
pub mod curvature;
pub mod fibration;
pub mod grassmann;
pub mod volume;

use greatcircle::fibration::{GreatCircleFibration, PhiMap};
use greatcircle::linalg::{Mat2, OrientedPlane2};
use greatcircle::Tolerances;
use serde::Serialize;

use crate::args::{Format, OptionalMapArgs};

pub const SCHEMA_VERSION: u32 = 1;

/// Settings shared by all subcommands.
#[derive(Clone, Debug)]
pub struct Context {
    pub seed: u64,
    pub samples: Option<usize>,
    pub format: Option<Format>,
    pub tol: Tolerances,
}

/// A rendered report and whether its checks passed.
#[derive(Debug)]
pub struct Report {
    pub body: String,
    pub verified: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] greatcircle::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Usage(_) | CommandError::Io(_) => 1,
            CommandError::Domain(_) => 2,
        }
    }
}

pub type CommandResult = Result<Report, CommandError>;

fn json_only(ctx: &Context, command: &str) -> Result<(), CommandError> {
    match ctx.format {
        Some(Format::Csv) => Err(CommandError::Usage(format!("`{command}` has no CSV output"))),
        _ => Ok(()),
    }
}

fn rows(m: &Mat2) -> [[f64; 2]; 2] {
    m.rows()
}

#[derive(Serialize)]
struct PlaneJson {
    u: [f64; 4],
    v: [f64; 4],
}

impl From<&OrientedPlane2> for PlaneJson {
    fn from(p: &OrientedPlane2) -> Self {
        Self { u: p.u().0, v: p.v().0 }
    }
}

/// The fibration named by `entries` or `--hopf`, and the map when given.
fn fibration_from(map: &OptionalMapArgs, force: bool) -> Result<(GreatCircleFibration, Option<PhiMap>), CommandError> {
    if map.hopf {
        return Ok((GreatCircleFibration::canonical_hopf(), None));
    }
    let Some(e) = map.entries.as_deref() else {
        return Err(CommandError::Usage("expected the entries a b c d of F, or --hopf".into()));
    };
    let m = Mat2::new(e[0], e[1], e[2], e[3]);
    let phi = if force { PhiMap::unchecked(m) } else { PhiMap::new(m)? };
    Ok((GreatCircleFibration::special_basis(phi), Some(phi)))
}
