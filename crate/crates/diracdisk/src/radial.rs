//! Radial profiles of the disk eigenstates and their normalization.
//!
//! Every eigenstate of one angular channel has a closed-form radial profile:
//!
//! * regular states (|E| > |t|): oscillatory Bessel J of argument βr with
//!   β = √(E² - t²);
//! * edge states (|E| < |t|): modified Bessel I of argument εr with
//!   ε = √(t² - E²), exponentially peaked at the rim;
//! * zero modes (E = 0 at t = 0): a single power-law component r^a.
//!
//! In all cases the spinor in the channel (j) reads
//!
//! ```text
//! Φ(r, θ) = N · ( u(r) e^{i(j-1/2)θ} ,  i w(r) e^{i(j+1/2)θ} )
//! ```
//!
//! with real u, w for the Bessel classes, while a zero mode occupies exactly
//! one component with a real amplitude. The normalization N makes
//! ∫ |Φ|² dA = 1 over the disk; it is computed by 200-point Gauss–Legendre
//! quadrature of the radial density (the nodes follow Newton's method on the
//! Legendre recurrence, cf. Abramowitz & Stegun §25.4), except for zero modes
//! where the integral is elementary.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use specfun::BesselKind;

use crate::{split_sqrt, Channel, DiracDiskError, EigenState, StateClass};

// ============================================================================
// Gauss–Legendre quadrature
// ============================================================================

const GL_POINTS: usize = 200;

/// Legendre polynomial P_n and its derivative at x, by the three-term
/// recurrence and the standard derivative identity.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for m in 2..=n {
        let next = ((2 * m - 1) as f64 * x * p - (m - 1) as f64 * p_prev) / m as f64;
        p_prev = p;
        p = next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Nodes and weights of 200-point Gauss–Legendre quadrature on [-1, 1],
/// computed once. Newton iteration from the Tricomi cosine initial guess
/// converges to machine precision in a handful of steps for every node.
pub(crate) fn gauss_legendre() -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    CACHE.get_or_init(|| {
        let n = GL_POINTS;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for k in 0..n {
            let mut x = (PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[k] = x;
            weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

// ============================================================================
// Closed-form radial profiles
// ============================================================================

/// The un-normalized radial profile of an eigenstate.
pub(crate) enum RadialForm {
    /// u(r) = c⁻ Z_{n⁻}(s r), w(r) = c⁺ Z_{n⁺}(s r) with Z = J or I.
    Bessel {
        kind: BesselKind,
        scale: f64,
        order_minus: i32,
        order_plus: i32,
        coef_minus: f64,
        coef_plus: f64,
    },
    /// A single power-law component r^a (a ≥ 0); `upper` selects which one.
    Power { exponent: i32, upper: bool },
}

/// Closed-form profile for a state of the given class in this channel.
///
/// The coefficient signs implement the boundary-compatible branch in each
/// regime; they flip with the sign of E (regular) or of t (edge) so that one
/// formula per class covers both sides of the spectrum:
///
/// ```text
/// regular: (u, w) = ( √|E+t| J_{n⁻}(βr) ,  sgn(E) √|E-t| J_{n⁺}(βr) )
/// edge:    (u, w) = ( √|t+E| I_{n⁻}(εr) , -sgn(t) √|t-E| I_{n⁺}(εr) )
/// ```
///
/// Zero modes occupy one component: the upper with exponent n⁻ = j - 1/2 for
/// j > 0, the lower with exponent -n⁺ = -(j + 1/2) for j < 0; both exponents
/// are non-negative, so the profile is regular at the origin.
pub(crate) fn radial_form(channel: &Channel, energy: f64, class: StateClass) -> RadialForm {
    let t = channel.t();
    match class {
        StateClass::Regular => {
            let beta = split_sqrt(energy, t);
            let coef_minus = (energy + t).abs().sqrt();
            let coef_plus = (energy - t).abs().sqrt() * energy.signum();
            RadialForm::Bessel {
                kind: BesselKind::J,
                scale: beta,
                order_minus: channel.order_minus(),
                order_plus: channel.order_plus(),
                coef_minus,
                coef_plus,
            }
        }
        StateClass::Edge => {
            let eps = split_sqrt(t, energy);
            let coef_minus = (t + energy).abs().sqrt();
            let coef_plus = -(t - energy).abs().sqrt() * t.signum();
            RadialForm::Bessel {
                kind: BesselKind::I,
                scale: eps,
                order_minus: channel.order_minus(),
                order_plus: channel.order_plus(),
                coef_minus,
                coef_plus,
            }
        }
        StateClass::ZeroMode => {
            if channel.two_j() > 0 {
                RadialForm::Power {
                    exponent: channel.order_minus(),
                    upper: true,
                }
            } else {
                RadialForm::Power {
                    exponent: -channel.order_plus(),
                    upper: false,
                }
            }
        }
    }
}

fn eval_bessel(kind: BesselKind, order: i32, x: f64) -> Result<f64, specfun::SpecFunError> {
    match kind {
        BesselKind::J => specfun::bessel_j(order, x),
        BesselKind::I => specfun::bessel_i(order, x),
    }
}

/// Un-normalized (u, w) at radius r for a Bessel-class profile.
fn bessel_pair(
    kind: BesselKind,
    scale: f64,
    order_minus: i32,
    order_plus: i32,
    coef_minus: f64,
    coef_plus: f64,
    r: f64,
) -> Result<(f64, f64), specfun::SpecFunError> {
    let u = coef_minus * eval_bessel(kind, order_minus, scale * r)?;
    let w = coef_plus * eval_bessel(kind, order_plus, scale * r)?;
    Ok((u, w))
}

// ============================================================================
// Normalization
// ============================================================================

/// Squared disk norm 2π ∫₀^R (u² + w²) r dr of an un-normalized profile.
fn disk_norm_sq(radius: f64, form: &RadialForm) -> Result<f64, DiracDiskError> {
    match *form {
        RadialForm::Bessel {
            kind,
            scale,
            order_minus,
            order_plus,
            coef_minus,
            coef_plus,
        } => {
            let (nodes, weights) = gauss_legendre();
            let half = 0.5 * radius;
            let mut sum = 0.0;
            for (&x, &w) in nodes.iter().zip(weights.iter()) {
                let r = half * (x + 1.0);
                let (u, v) =
                    bessel_pair(kind, scale, order_minus, order_plus, coef_minus, coef_plus, r)?;
                sum += w * (u * u + v * v) * r;
            }
            Ok(2.0 * PI * half * sum)
        }
        RadialForm::Power { exponent, .. } => {
            // 2π ∫ r^{2a} r dr = π R^{2a+2} / (a + 1), elementary.
            let a = exponent;
            Ok(PI * radius.powi(2 * a + 2) / f64::from(a + 1))
        }
    }
}

/// Normalization constant for a state of the given class and energy: the N
/// with ∫ |N Φ|² dA = 1.
pub(crate) fn normalization(
    channel: &Channel,
    energy: f64,
    class: StateClass,
) -> Result<f64, DiracDiskError> {
    let form = radial_form(channel, energy, class);
    Ok(1.0 / disk_norm_sq(channel.radius(), &form)?.sqrt())
}

// ============================================================================
// Pointwise spinor evaluation
// ============================================================================

/// The normalized spinor Φ(r, θ) of a solved eigenstate.
///
/// Expects a state produced by one of this crate's solvers (their
/// classification and normalization are what make the closed form valid).
/// The components are returned in the (φ⁻, φ⁺) order matching the angular
/// factors e^{i(j∓1/2)θ}; at θ = 0 the upper component is real and the lower
/// purely imaginary for the Bessel classes, while a zero mode is real in its
/// single occupied component.
pub fn wavefunction(
    state: &EigenState,
    r: f64,
    theta: f64,
) -> Result<[Complex64; 2], DiracDiskError> {
    let radius = state.channel.radius();
    if !r.is_finite() || !(0.0..=radius).contains(&r) {
        return Err(DiracDiskError::RadiusDomain { r, radius });
    }
    let j = state.channel.j();
    let phase_minus = Complex64::from_polar(1.0, (j - 0.5) * theta);
    let phase_plus = Complex64::from_polar(1.0, (j + 0.5) * theta);
    let n = state.normalization;
    match radial_form(&state.channel, state.energy, state.class) {
        RadialForm::Bessel {
            kind,
            scale,
            order_minus,
            order_plus,
            coef_minus,
            coef_plus,
        } => {
            let (u, w) =
                bessel_pair(kind, scale, order_minus, order_plus, coef_minus, coef_plus, r)?;
            Ok([
                Complex64::new(n * u, 0.0) * phase_minus,
                Complex64::new(0.0, n * w) * phase_plus,
            ])
        }
        RadialForm::Power { exponent, upper } => {
            let amp = n * r.powi(exponent);
            let zero = Complex64::new(0.0, 0.0);
            Ok(if upper {
                [Complex64::new(amp, 0.0) * phase_minus, zero]
            } else {
                [zero, Complex64::new(amp, 0.0) * phase_plus]
            })
        }
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RadialKind, StateSector};

    #[test]
    fn quadrature_integrates_polynomials_exactly() {
        let (nodes, weights) = gauss_legendre();
        assert_eq!(nodes.len(), GL_POINTS);
        // Weights sum to the interval length.
        let total: f64 = weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-13);
        // ∫_{-1}^{1} x^38 dx = 2/39; odd powers vanish.
        let even: f64 = nodes
            .iter()
            .zip(weights.iter())
            .map(|(&x, &w)| w * x.powi(38))
            .sum();
        assert!((even - 2.0 / 39.0).abs() < 1e-14);
        let odd: f64 = nodes
            .iter()
            .zip(weights.iter())
            .map(|(&x, &w)| w * x.powi(11))
            .sum();
        assert!(odd.abs() < 1e-15);
    }

    #[test]
    fn quadrature_matches_bessel_norm_identity() {
        // ∫₀^R Z_n(kr)² r dr = R²/2 · (Z_n(kR)² - Z_{n-1}(kR) Z_{n+1}(kR))
        // holds for both J and I (Lommel's integral and its modified
        // counterpart). This pins the quadrature against an independent
        // closed form at the accuracy the normalizations rely on.
        let (nodes, weights) = gauss_legendre();
        let cases = [
            (BesselKind::J, 3, 2.7, 1.5),
            (BesselKind::J, 0, 11.0, 1.0),
            (BesselKind::I, 5, 1.0, 1.0),
            (BesselKind::I, 1, 0.35, 2.0),
        ];
        for (kind, n, k, radius) in cases {
            let half = 0.5 * radius;
            let mut quad = 0.0;
            for (&x, &w) in nodes.iter().zip(weights.iter()) {
                let r = half * (x + 1.0);
                let z = eval_bessel(kind, n, k * r).unwrap();
                quad += w * z * z * r;
            }
            quad *= half;
            let zn = eval_bessel(kind, n, k * radius).unwrap();
            let zm = eval_bessel(kind, n - 1, k * radius).unwrap();
            let zp = eval_bessel(kind, n + 1, k * radius).unwrap();
            let closed = 0.5 * radius * radius * (zn * zn - zm * zp);
            assert!(
                (quad - closed).abs() < 1e-12 * closed.abs().max(1.0),
                "kind {kind:?} n {n}: quadrature {quad} vs closed {closed}"
            );
        }
    }

    #[test]
    fn zero_mode_normalization_closed_form() {
        // j = 3/2 zero mode: upper component ∝ r, so N = √(2/π)/R².
        let channel = Channel::new(3, 0.0, 2.0).unwrap();
        let n = normalization(&channel, 0.0, StateClass::ZeroMode).unwrap();
        assert!((n - (2.0 / PI).sqrt() / 4.0).abs() < 1e-15);
        // And the j = -1/2 mode is constant in the lower component:
        // N = 1/√(π R²).
        let channel = Channel::new(-1, 0.0, 2.0).unwrap();
        let n = normalization(&channel, 0.0, StateClass::ZeroMode).unwrap();
        assert!((n - 0.5 / PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn high_channel_wavefunction_vanishes_at_origin() {
        // Orders n⁻ = 5, n⁺ = 6 for two_j = 11: both components are
        // suppressed like r^5 near r = 0.
        let channel = Channel::new(11, 1.0, 1.0).unwrap();
        let state = EigenState {
            channel,
            energy: -0.08,
            class: StateClass::Edge,
            sector: StateSector::HMinus,
            radial_kind: RadialKind::BesselI,
            normalization: 1.0,
        };
        let phi = wavefunction(&state, 0.0, 1.3).unwrap();
        assert_eq!(phi[0].norm(), 0.0);
        assert_eq!(phi[1].norm(), 0.0);
        // Outside the disk the evaluation is rejected.
        assert!(matches!(
            wavefunction(&state, 1.5, 0.0),
            Err(DiracDiskError::RadiusDomain { .. })
        ));
        assert!(matches!(
            wavefunction(&state, -0.1, 0.0),
            Err(DiracDiskError::RadiusDomain { .. })
        ));
    }

    #[test]
    fn zero_mode_profile_occupies_one_real_component() {
        // j = 3/2: upper component c·r with phase e^{iθ}; lower exactly zero.
        let channel = Channel::new(3, 0.0, 2.0).unwrap();
        let n = normalization(&channel, 0.0, StateClass::ZeroMode).unwrap();
        let state = EigenState {
            channel,
            energy: 0.0,
            class: StateClass::ZeroMode,
            sector: StateSector::H0Minus,
            radial_kind: RadialKind::Power,
            normalization: n,
        };
        let phi = wavefunction(&state, 0.5, 0.0).unwrap();
        assert!((phi[0].re - n * 0.5).abs() < 1e-15);
        assert_eq!(phi[0].im, 0.0);
        assert_eq!(phi[1], Complex64::new(0.0, 0.0));
        // j = -3/2: lower component carries the mode, real at θ = 0.
        let channel = Channel::new(-3, 0.0, 2.0).unwrap();
        let n = normalization(&channel, 0.0, StateClass::ZeroMode).unwrap();
        let state = EigenState {
            channel,
            energy: 0.0,
            class: StateClass::ZeroMode,
            sector: StateSector::H0Plus,
            radial_kind: RadialKind::Power,
            normalization: n,
        };
        let phi = wavefunction(&state, 0.5, 0.0).unwrap();
        assert_eq!(phi[0], Complex64::new(0.0, 0.0));
        assert!((phi[1].re - n * 0.5).abs() < 1e-15);
        assert_eq!(phi[1].im, 0.0);
    }
}
