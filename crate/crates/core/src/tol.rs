/// Named numerical tolerances.
///
/// Defaults: `1e-12` for exact algebraic identities, `1e-10` for composed
/// floating-point pipelines, and the per-check thresholds listed on each
/// field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Exact algebraic identities (round trips, Bianchi sums).
    pub exact: f64,
    /// Composed floating-point pipelines (unit norms, J² = −I).
    pub pipeline: f64,
    /// Smallest singular value of a stacked pair of fiber bases that still
    /// counts as disjoint; also the principal-angle cutoff for "same fiber".
    pub separation: f64,
    /// Slack on the distance-decreasing ratio.
    pub lipschitz: f64,
    /// Root-mean-square spherical residual accepted from the decomposition fit.
    pub fit: f64,
    /// Singular-value threshold for the rank of the fitted linear map.
    pub rank: f64,
    /// Principal-angle agreement between an extremal plane and a fiber.
    pub extremal_plane: f64,
    /// Relative tolerance of adaptive quadrature.
    pub quadrature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            exact: 1e-12,
            pipeline: 1e-10,
            separation: 1e-8,
            lipschitz: 1e-6,
            fit: 1e-6,
            rank: 1e-8,
            extremal_plane: 1e-6,
            quadrature: 1e-10,
        }
    }
}

impl Tolerances {
    /// Field names accepted by [`Tolerances::set`].
    pub const NAMES: [&'static str; 8] = [
        "exact",
        "pipeline",
        "separation",
        "lipschitz",
        "fit",
        "rank",
        "extremal_plane",
        "quadrature",
    ];

    /// Overrides a tolerance by name. Returns `false` for an unknown name or a
    /// non-positive value.
    pub fn set(&mut self, name: &str, value: f64) -> bool {
        if !(value > 0.0 && value.is_finite()) {
            return false;
        }
        let slot = match name {
            "exact" => &mut self.exact,
            "pipeline" => &mut self.pipeline,
            "separation" => &mut self.separation,
            "lipschitz" => &mut self.lipschitz,
            "fit" => &mut self.fit,
            "rank" => &mut self.rank,
            "extremal_plane" | "extremal-plane" => &mut self.extremal_plane,
            "quadrature" => &mut self.quadrature,
            _ => return false,
        };
        *slot = value;
        true
    }
}
