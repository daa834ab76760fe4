//! Lattice Chern numbers over the sphere via U(1) link variables, in the
//! discrete-geometry formulation of Fukui, Hatsugai & Suzuki, plus a
//! signed-solid-angle degree oracle for the unit d-vector map.

use crate::{raw_eigenvector, Branch, DVectorField, Gauge, SemiQuantumError};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Lattice Chern number of one band over the sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernResult {
    pub band: Branch,
    pub chern: i32,
    /// Largest single-plaquette Berry flux — a convergence diagnostic; the
    /// integer is reliable only while this stays below π/2.
    pub plaquette_flux_max: f64,
}

// ============================================================================
// polar grid
// ============================================================================

/// Vertices of a polar grid on the sphere of the given radius: a single
/// vertex at each pole and `n_theta − 1` latitude rings of `n_phi` vertices.
/// Order: north pole, then rings from north to south, then south pole.
fn grid_points(radius: f64, n_theta: usize, n_phi: usize) -> Vec<[f64; 3]> {
    let mut pts = Vec::with_capacity(2 + (n_theta - 1) * n_phi);
    pts.push([0.0, 0.0, radius]);
    for i in 1..n_theta {
        let theta = PI * i as f64 / n_theta as f64;
        let (sin_t, cos_t) = theta.sin_cos();
        for j in 0..n_phi {
            let phi = 2.0 * PI * j as f64 / n_phi as f64;
            let (sin_p, cos_p) = phi.sin_cos();
            pts.push([
                radius * sin_t * cos_p,
                radius * sin_t * sin_p,
                radius * cos_t,
            ]);
        }
    }
    pts.push([0.0, 0.0, -radius]);
    pts
}

/// Plaquettes of the polar grid as vertex-index loops, each traversed
/// counterclockwise as seen from outside the sphere (the pair (+θ, +φ) is
/// right-handed with the outward normal). Cap triangles at both poles, quads
/// in between; each entry is (vertex indices, loop length ∈ {3, 4}).
fn plaquettes(n_theta: usize, n_phi: usize) -> Vec<([usize; 4], usize)> {
    let ring = |i: usize, j: usize| 1 + (i - 1) * n_phi + j % n_phi;
    let north = 0;
    let south = 1 + (n_theta - 1) * n_phi;
    let mut cells = Vec::with_capacity(n_theta * n_phi);
    for j in 0..n_phi {
        cells.push(([north, ring(1, j), ring(1, j + 1), 0], 3));
    }
    for i in 1..n_theta - 1 {
        for j in 0..n_phi {
            cells.push((
                [ring(i, j), ring(i + 1, j), ring(i + 1, j + 1), ring(i, j + 1)],
                4,
            ));
        }
    }
    for j in 0..n_phi {
        cells.push(([ring(n_theta - 1, j), south, ring(n_theta - 1, j + 1), 0], 3));
    }
    cells
}

fn require_sphere(field: &DVectorField) -> Result<f64, SemiQuantumError> {
    match *field {
        DVectorField::Sphere { radius } => Ok(radius),
        DVectorField::Plane => Err(SemiQuantumError::WrongManifold { required: "sphere" }),
    }
}

fn require_grid(n_theta: usize, n_phi: usize) -> Result<(), SemiQuantumError> {
    if n_theta < 24 || n_phi < 24 {
        return Err(SemiQuantumError::GridTooCoarse(n_theta, n_phi));
    }
    Ok(())
}

// ============================================================================
// lattice Chern number
// ============================================================================

/// Chern number of the chosen band's eigen-line bundle over the sphere, from
/// U(1) link variables between neighboring grid eigenvectors.
///
/// Each plaquette contributes the principal argument of the product of its
/// link overlaps — a gauge-invariant Berry flux in (−π, π]. The fluxes sum
/// to 2π times an exact integer because every interior link is traversed
/// once in each direction. The result is grid-independent once the largest
/// single plaquette flux is below π/2 (the lattice field strength is then
/// well inside its principal branch).
///
/// Per-vertex gauge: whichever of the up/down eigenvector forms has the
/// larger normalization there. The two satisfy N_up² + N_down² = 4E², so the
/// better one is bounded below by √2·|d| and the state is well conditioned
/// wherever the bands do not touch.
pub fn chern_sphere(
    field: &DVectorField,
    t: f64,
    band: Branch,
    grid: (usize, usize),
) -> Result<ChernResult, SemiQuantumError> {
    let radius = require_sphere(field)?;
    let (n_theta, n_phi) = grid;
    require_grid(n_theta, n_phi)?;

    let points = grid_points(radius, n_theta, n_phi);
    let mut states = Vec::with_capacity(points.len());
    let mut min_gap = f64::INFINITY;
    for p in &points {
        let d = field.evaluate(t, p);
        let gap = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        min_gap = min_gap.min(gap);
        let energy = band.energy(gap);
        let (up, n_up) = raw_eigenvector(&d, energy, Gauge::Up);
        let (down, n_down) = raw_eigenvector(&d, energy, Gauge::Down);
        let (v, n) = if n_up >= n_down { (up, n_up) } else { (down, n_down) };
        states.push([v[0] / n, v[1] / n]);
    }
    if min_gap < 1e-10 {
        return Err(SemiQuantumError::Degeneracy(min_gap));
    }

    let mut total = 0.0;
    let mut flux_max: f64 = 0.0;
    for (verts, len) in plaquettes(n_theta, n_phi) {
        let mut prod = Complex64::new(1.0, 0.0);
        for m in 0..len {
            let a = &states[verts[m]];
            let b = &states[verts[(m + 1) % len]];
            prod *= a[0].conj() * b[0] + a[1].conj() * b[1];
        }
        if prod.norm() < 1e-12 {
            // A near-orthogonal link makes the flux argument ill defined —
            // maximal unreliability.
            return Err(SemiQuantumError::UnreliableGrid(PI));
        }
        let flux = prod.arg();
        flux_max = flux_max.max(flux.abs());
        total += flux;
    }
    if flux_max > FRAC_PI_2 {
        return Err(SemiQuantumError::UnreliableGrid(flux_max));
    }

    Ok(ChernResult {
        band,
        chern: (total / (2.0 * PI)).round() as i32,
        plaquette_flux_max: flux_max,
    })
}

// ============================================================================
// degree oracle
// ============================================================================

/// Degree of the map x ↦ d̂(t, x) from the sphere to the unit sphere, by
/// summing the signed solid angles subtended at the origin by the image
/// triangles (Van Oosterom & Strackee's tangent formula). Quads split into
/// (a, b, c) + (a, c, d); the traversal orientation matches [`chern_sphere`].
///
/// This is a brute-force topological oracle: it knows nothing about
/// eigenvectors or Berry fluxes, yet must agree with the lattice Chern
/// number of the upper band up to the fixed sign convention of the model.
pub fn solid_angle_degree(
    field: &DVectorField,
    t: f64,
    grid: (usize, usize),
) -> Result<i32, SemiQuantumError> {
    let radius = require_sphere(field)?;
    let (n_theta, n_phi) = grid;
    require_grid(n_theta, n_phi)?;

    let points = grid_points(radius, n_theta, n_phi);
    let mut hats = Vec::with_capacity(points.len());
    let mut min_gap = f64::INFINITY;
    for p in &points {
        let d = field.evaluate(t, p);
        let n = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        min_gap = min_gap.min(n);
        hats.push([d[0] / n, d[1] / n, d[2] / n]);
    }
    if min_gap < 1e-10 {
        return Err(SemiQuantumError::Degeneracy(min_gap));
    }

    let mut total = 0.0;
    for (verts, len) in plaquettes(n_theta, n_phi) {
        let a = &hats[verts[0]];
        let b = &hats[verts[1]];
        let c = &hats[verts[2]];
        total += solid_angle(a, b, c);
        if len == 4 {
            total += solid_angle(a, c, &hats[verts[3]]);
        }
    }

    let turns = total / (4.0 * PI);
    let degree = turns.round();
    if (turns - degree).abs() > 1e-6 {
        return Err(SemiQuantumError::NonIntegerDegree(turns));
    }
    Ok(degree as i32)
}

/// Signed solid angle of the spherical triangle (a, b, c) of unit vectors,
/// positive when the triple winds counterclockwise seen from outside:
/// Ω = 2·atan2(a·(b × c), 1 + a·b + b·c + c·a).
fn solid_angle(a: &[f64; 3], b: &[f64; 3], c: &[f64; 3]) -> f64 {
    let triple = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0]);
    let dot = |u: &[f64; 3], v: &[f64; 3]| u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let denom = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    2.0 * triple.atan2(denom)
}

// ============================================================================
// tests
// ============================================================================
