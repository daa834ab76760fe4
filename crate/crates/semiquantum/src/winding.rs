//! Winding numbers of eigenvector phases around exceptional points, and the
//! delta-Chern extracted from their jump across the critical parameter value.

use crate::{eigenvector, Branch, DVectorField, Gauge, SemiQuantumError};

/// Traversal direction of the sampling circle in the (p1, p2) plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// The polar angle decreases along the traversal (the convention used
    /// for every winding in this crate).
    Clockwise,
    Counterclockwise,
}

/// Result of a phase-winding measurement along a circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingResult {
    /// Net phase turns of the distinguished eigenvector component.
    pub winding: i32,
    pub circle_radius: f64,
    pub orientation: Orientation,
    pub samples: usize,
}

/// Winding number of the phase of the gauge's distinguished component along
/// a clockwise circle.
///
/// The distinguished component is the *dominant* one: of the two normalized
/// components, the one whose minimum modulus along the circle is larger.
/// (The subordinate component vanishes at the circle's center where the
/// band's point spectrum concentrates — e.g. the up gauge's first component
/// p1 − i p2 — and carries a spurious geometric turn; the dominant one
/// carries exactly the phase that cannot be removed by normalization, which
/// is the winding attached to the gauge's exceptional point.)
///
/// Requirements: a plane-manifold field, `samples ≥ 64`, and no band
/// degeneracy within 1e-12 of any sampled point.
pub fn winding_number(
    field: &DVectorField,
    t: f64,
    center: &[f64; 3],
    radius: f64,
    branch: Branch,
    gauge: Gauge,
    samples: usize,
) -> Result<WindingResult, SemiQuantumError> {
    if !matches!(field, DVectorField::Plane) {
        return Err(SemiQuantumError::WrongManifold { required: "plane" });
    }
    if samples < 64 {
        return Err(SemiQuantumError::TooFewSamples(samples));
    }

    // Sample the circle clockwise: polar angle decreasing from 0 to -2π.
    let mut vecs = Vec::with_capacity(samples);
    for k in 0..samples {
        let phi = -2.0 * std::f64::consts::PI * k as f64 / samples as f64;
        let x = [
            center[0] + radius * phi.cos(),
            center[1] + radius * phi.sin(),
            0.0,
        ];
        let d = field.evaluate(t, &x);
        let gap = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        if gap < 1e-12 {
            return Err(SemiQuantumError::SingularSample { p1: x[0], p2: x[1] });
        }
        vecs.push(eigenvector(field, t, &x, branch, gauge)?.components);
    }

    // Dominant component: larger minimum modulus along the circle.
    let min_mod = |idx: usize| {
        vecs.iter()
            .map(|v| v[idx].norm())
            .fold(f64::INFINITY, f64::min)
    };
    let dominant = if min_mod(0) >= min_mod(1) { 0 } else { 1 };

    // Accumulate principal-branch phase increments around the closed loop.
    let mut total = 0.0;
    for k in 0..samples {
        let a = vecs[k][dominant];
        let b = vecs[(k + 1) % samples][dominant];
        // arg(b/a) in (-π, π], stable even for widely different magnitudes.
        total += (b * a.conj()).arg();
    }

    let turns = total / (2.0 * std::f64::consts::PI);
    let winding = turns.round();
    let deviation = (total - winding * 2.0 * std::f64::consts::PI).abs();
    if deviation > 1e-4 {
        return Err(SemiQuantumError::NonIntegerWinding { total, deviation });
    }
    Ok(WindingResult {
        winding: winding as i32,
        circle_radius: radius,
        orientation: Orientation::Clockwise,
        samples,
    })
}

/// The circle radius and sample count used by [`delta_chern`]. Any radius
/// works for the plane model (the only exceptional point is at the origin);
/// these values match the acceptance configuration.
const DELTA_CHERN_RADIUS: f64 = 0.1;
const DELTA_CHERN_SAMPLES: usize = 256;

/// Local delta-Chern of a band across the critical value t = 0:
/// `Δc = −(W(t_plus) − W(t_minus))`, measured with the given gauge.
///
/// The result is gauge-independent; both gauges are accepted so tests can
/// assert that directly.
pub fn delta_chern(
    field: &DVectorField,
    branch: Branch,
    gauge: Gauge,
    t_minus: f64,
    t_plus: f64,
) -> Result<i32, SemiQuantumError> {
    if !(t_minus < 0.0 && t_plus > 0.0) {
        return Err(SemiQuantumError::BadStraddle { t_minus, t_plus });
    }
    let origin = [0.0, 0.0, 0.0];
    let w_minus = winding_number(
        field,
        t_minus,
        &origin,
        DELTA_CHERN_RADIUS,
        branch,
        gauge,
        DELTA_CHERN_SAMPLES,
    )?;
    let w_plus = winding_number(
        field,
        t_plus,
        &origin,
        DELTA_CHERN_RADIUS,
        branch,
        gauge,
        DELTA_CHERN_SAMPLES,
    )?;
    Ok(-(w_plus.winding - w_minus.winding))
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    const ORIGIN: [f64; 3] = [0.0, 0.0, 0.0];

    fn w(t: f64, branch: Branch, gauge: Gauge) -> i32 {
        winding_number(&DVectorField::Plane, t, &ORIGIN, 0.1, branch, gauge, 256)
            .unwrap()
            .winding
    }

    #[test]
    fn winding_table_all_eight_entries() {
        // Rows (W over t < 0, t > 0): E+ up (0,1); E+ down (−1,0);
        // E− up (1,0); E− down (0,−1).
        assert_eq!((w(-0.5, Branch::EPlus, Gauge::Up), w(0.5, Branch::EPlus, Gauge::Up)), (0, 1));
        assert_eq!(
            (w(-0.5, Branch::EPlus, Gauge::Down), w(0.5, Branch::EPlus, Gauge::Down)),
            (-1, 0)
        );
        assert_eq!((w(-0.5, Branch::EMinus, Gauge::Up), w(0.5, Branch::EMinus, Gauge::Up)), (1, 0));
        assert_eq!(
            (w(-0.5, Branch::EMinus, Gauge::Down), w(0.5, Branch::EMinus, Gauge::Down)),
            (0, -1)
        );
    }

    #[test]
    fn winding_radius_invariant() {
        for radius in [0.02, 0.1, 1.0, 7.5] {
            let r = winding_number(
                &DVectorField::Plane,
                0.5,
                &ORIGIN,
                radius,
                Branch::EPlus,
                Gauge::Up,
                128,
            )
            .unwrap();
            assert_eq!(r.winding, 1, "radius {radius}");
            assert_eq!(r.orientation, Orientation::Clockwise);
        }
    }

    #[test]
    fn delta_chern_values_and_gauge_independence() {
        let f = DVectorField::Plane;
        for gauge in [Gauge::Up, Gauge::Down] {
            assert_eq!(delta_chern(&f, Branch::EPlus, gauge, -0.5, 0.5).unwrap(), -1);
            assert_eq!(delta_chern(&f, Branch::EMinus, gauge, -0.5, 0.5).unwrap(), 1);
        }
    }

    #[test]
    fn delta_chern_rejects_bad_straddle() {
        let f = DVectorField::Plane;
        assert!(matches!(
            delta_chern(&f, Branch::EPlus, Gauge::Up, 0.2, 0.5),
            Err(SemiQuantumError::BadStraddle { .. })
        ));
    }

    #[test]
    fn too_few_samples_rejected() {
        assert!(matches!(
            winding_number(&DVectorField::Plane, 0.5, &ORIGIN, 0.1, Branch::EPlus, Gauge::Up, 63),
            Err(SemiQuantumError::TooFewSamples(63))
        ));
    }

    #[test]
    fn sphere_field_rejected() {
        let f = DVectorField::Sphere { radius: 1.0 };
        assert!(matches!(
            winding_number(&f, 0.5, &ORIGIN, 0.1, Branch::EPlus, Gauge::Up, 128),
            Err(SemiQuantumError::WrongManifold { .. })
        ));
    }
}
