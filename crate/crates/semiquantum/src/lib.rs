//! Semi-quantum two-band models: a Hermitian 2×2 matrix field `H = d·σ`
//! over a classical parameter manifold (plane or sphere), its eigenvector
//! bundles, and the topological bookkeeping attached to them — winding
//! numbers around exceptional points, the delta-Chern across a critical
//! parameter value, and lattice Chern numbers on the sphere.
//!
//! Conventions: with the Pauli matrices σ₁, σ₂, σ₃ the matrix represented by
//! `d = (d1, d2, d3)` is
//!
//! ```text
//!   [[ d3,        d1 - i d2 ],
//!    [ d1 + i d2, -d3       ]]
//! ```
//!
//! so its eigenvalues are E± = ±|d|. Two eigenvector normalizations
//! ("gauges") are carried side by side:
//!
//! * `up`:   (d1 - i d2, E - d3) / N_up,   N_up² = d1² + d2² + (E - d3)²
//! * `down`: (E + d3, d1 + i d2) / N_down, N_down² = d1² + d2² + (E + d3)²
//!
//! Each gauge has one parameter point where its normalization vanishes (its
//! *exceptional point*); winding numbers of the surviving phase around that
//! point jump as the control parameter `t` crosses the critical value, and
//! the negated jump is the local delta-Chern of the band.

use num_complex::Complex64;
use thiserror::Error;

mod chern;
mod winding;

pub use chern::{chern_sphere, solid_angle_degree, ChernResult};
pub use winding::{delta_chern, winding_number, Orientation, WindingResult};

// ============================================================================
// errors
// ============================================================================

/// Errors reported by the semi-quantum operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SemiQuantumError {
    /// The chosen gauge's normalization vanishes at this point (its
    /// exceptional point).
    #[error("{gauge:?} gauge is singular here: normalization {norm:e} < 1e-14")]
    GaugeSingular { gauge: Gauge, norm: f64 },
    /// A sampled circle point sits on (or numerically at) a band degeneracy.
    #[error("sample at ({p1}, {p2}) is within 1e-12 of a band degeneracy")]
    SingularSample { p1: f64, p2: f64 },
    /// The accumulated phase failed to close onto an integer multiple of 2π.
    #[error("accumulated phase {total} deviates from 2π·n by {deviation:e} (> 1e-4)")]
    NonIntegerWinding { total: f64, deviation: f64 },
    /// Fewer than the minimum 64 circle samples were requested.
    #[error("winding needs at least 64 samples, got {0}")]
    TooFewSamples(usize),
    /// The operation is only defined on the other manifold kind.
    #[error("operation requires the {required} manifold")]
    WrongManifold { required: &'static str },
    /// delta-Chern endpoints must straddle the critical value 0.
    #[error("need t_minus < 0 < t_plus, got t_minus = {t_minus}, t_plus = {t_plus}")]
    BadStraddle { t_minus: f64, t_plus: f64 },
    /// The sphere grid is below the minimum resolution.
    #[error("grid {0}×{1} too coarse: both dimensions must be ≥ 24")]
    GridTooCoarse(usize, usize),
    /// The eigenvector bundle degenerates somewhere on the grid.
    #[error("band degeneracy on the grid: min |d| = {0:e} < 1e-10")]
    Degeneracy(f64),
    /// A single plaquette carries more than π/2 of Berry flux.
    #[error("unreliable grid: largest plaquette flux {0} exceeds π/2")]
    UnreliableGrid(f64),
    /// The solid-angle sum failed to land on an integer degree.
    #[error("solid-angle sum / 4π = {0} is not close to an integer")]
    NonIntegerDegree(f64),
}

// ============================================================================
// the d-vector field
// ============================================================================

/// A parametrized traceless Hermitian 2×2 field `(t, x) ↦ d(t, x)·σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DVectorField {
    /// Local model over the (p1, p2) plane: `d = (p1, p2, t)`, i.e.
    /// `H = p1 σ1 + p2 σ2 + t σ3` with off-diagonal element p1 − i p2.
    /// The third point coordinate is ignored.
    Plane,
    /// Global model over the sphere |x| = radius:
    /// `d = (Jx, −Jy, t + Jz − radius)` at the point x = (Jx, Jy, Jz).
    /// Band degeneracies sit at the poles, at t = 0 (north) and
    /// t = 2·radius (south).
    Sphere { radius: f64 },
}

impl DVectorField {
    /// Evaluate the d-vector at control parameter `t` and point `x`.
    pub fn evaluate(&self, t: f64, x: &[f64; 3]) -> [f64; 3] {
        match *self {
            DVectorField::Plane => [x[0], x[1], t],
            DVectorField::Sphere { radius } => [x[0], -x[1], t + x[2] - radius],
        }
    }

    /// Human-readable manifold tag.
    pub fn manifold(&self) -> &'static str {
        match self {
            DVectorField::Plane => "plane",
            DVectorField::Sphere { .. } => "sphere",
        }
    }
}

/// Eigenvalue branch of the two-band field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The upper band, E+ = +|d|.
    EPlus,
    /// The lower band, E− = −|d|.
    EMinus,
}

impl Branch {
    fn energy(self, d_norm: f64) -> f64 {
        match self {
            Branch::EPlus => d_norm,
            Branch::EMinus => -d_norm,
        }
    }
}

/// Eigenvector normalization choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gauge {
    Up,
    Down,
}

/// A normalized two-component eigenvector in a declared gauge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigVec2 {
    pub components: [Complex64; 2],
    pub gauge: Gauge,
    pub branch: Branch,
    /// | ‖v‖ − 1 | after normalization.
    pub norm_residual: f64,
}

// ============================================================================
// eigen-decomposition
// ============================================================================

/// Band energies `(E−, E+) = (−|d|, +|d|)` at `(t, x)`.
pub fn eigenvalues(field: &DVectorField, t: f64, x: &[f64; 3]) -> (f64, f64) {
    let d = field.evaluate(t, x);
    let n = d_norm(&d);
    (-n, n)
}

fn d_norm(d: &[f64; 3]) -> f64 {
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
}

/// Unnormalized eigenvector in the given gauge, plus its normalization.
fn raw_eigenvector(d: &[f64; 3], energy: f64, gauge: Gauge) -> ([Complex64; 2], f64) {
    let v = match gauge {
        Gauge::Up => [
            Complex64::new(d[0], -d[1]),
            Complex64::new(energy - d[2], 0.0),
        ],
        Gauge::Down => [
            Complex64::new(energy + d[2], 0.0),
            Complex64::new(d[0], d[1]),
        ],
    };
    let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    (v, norm)
}

/// Normalized eigenvector of `d·σ` at `(t, x)` for the chosen branch and gauge.
///
/// Fails with [`SemiQuantumError::GaugeSingular`] when the gauge's
/// normalization is below 1e-14 — at that gauge's exceptional point (which
/// includes every band degeneracy, where both gauges vanish).
pub fn eigenvector(
    field: &DVectorField,
    t: f64,
    x: &[f64; 3],
    branch: Branch,
    gauge: Gauge,
) -> Result<EigVec2, SemiQuantumError> {
    let d = field.evaluate(t, x);
    let energy = branch.energy(d_norm(&d));
    let (raw, norm) = raw_eigenvector(&d, energy, gauge);
    if norm < 1e-14 {
        return Err(SemiQuantumError::GaugeSingular { gauge, norm });
    }
    let components = [raw[0] / norm, raw[1] / norm];
    let norm_residual =
        ((components[0].norm_sqr() + components[1].norm_sqr()).sqrt() - 1.0).abs();
    Ok(EigVec2 {
        components,
        gauge,
        branch,
        norm_residual,
    })
}

// ============================================================================
// tests
// ============================================================================
