//! Dirac operator on a finite disk with a mass term and a self-adjoint
//! boundary condition.
//!
//! The operator acting on two-component spinors over the disk of radius `R` is
//!
//! ```text
//! H_t = -i σ_r ∂_r - (i/r) σ_θ ∂_θ + t σ_3 ,
//! ```
//!
//! where `σ_r = σ_1 cos θ + σ_2 sin θ` and `σ_θ = -σ_1 sin θ + σ_2 cos θ` are
//! the polar Pauli matrices and `t` is a mass that the host model sweeps
//! through zero. Rotation symmetry splits the problem into angular channels
//! labelled by a half-integer `j`; within a channel an eigenspinor takes the
//! separated form
//!
//! ```text
//! Φ(r, θ) = ( φ⁻(r) e^{i (j - 1/2) θ} ,  φ⁺(r) e^{i (j + 1/2) θ} ) .
//! ```
//!
//! On the boundary circle the admissible self-adjoint conditions are encoded
//! by the first-order operator `K_t` acting on the boundary restriction; the
//! spectral (Atiyah–Patodi–Singer type) condition projects onto one of the two
//! eigenvectors of
//!
//! ```text
//! M = K_t - 1/(2R) = [ -j/R   -i t ]
//!                    [  i t    j/R ] ,
//! ```
//!
//! whose eigenvalues are `λ± = ±√(j²/R² + t²)`. Selecting the `λ−`
//! (respectively `λ₊`) eigenvector defines the sector `H−` (respectively
//! `H₊`) of the disk Hamiltonian. The `H−` sector hosts a single in-gap edge
//! state per channel whose energy crosses zero as `t` does — the spectral
//! flow computed by [`spectral_flow`] — while `H₊` hosts none.
//!
//! The crate provides:
//!
//! * [`k_spectrum`] — the boundary eigenpairs `(κ−, κ₊)` with their
//!   projector directions;
//! * [`edge_solve`], [`regular_solve`], [`zero_mode`] — the in-gap
//!   (exponentially localized), bulk-oscillatory, and massless threshold
//!   eigenstates of a channel;
//! * [`wavefunction`] and [`observables`] — pointwise spinor values and the
//!   boundary expectation values `⟨σ_r⟩`, `⟨σ_θ⟩`, `⟨-i ∂_θ⟩`;
//! * [`spectrum_sweep`] and [`spectral_flow`] — branch-tracked spectra over a
//!   mass grid and the signed count of zero crossings.

use num_complex::Complex64;
use thiserror::Error;

mod radial;
mod solver;
mod sweep;

pub use radial::wavefunction;
pub use solver::{
    edge_residual, edge_solve, observables, regular_residual, regular_solve, zero_mode,
};
pub use sweep::{spectral_flow, spectrum_sweep, SpectrumBranch, SweepResult};

// ============================================================================
// Errors
// ============================================================================

/// Error type for every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiracDiskError {
    /// `two_j` must be odd: channels are labelled by half-integer j.
    #[error("two_j = {0} is even; angular channels carry half-integer j, so two_j must be odd")]
    InvalidTwoJ(i32),
    /// The disk radius must be positive and finite.
    #[error("disk radius {0} is not a positive finite number")]
    InvalidRadius(f64),
    /// The mass parameter must be finite.
    #[error("mass parameter {0} is not finite")]
    NonFiniteMass(f64),
    /// Edge quantities need a spectral gap to sit inside: t ≠ 0.
    #[error("edge states live strictly inside the gap (-|t|, |t|); t = 0 has no gap — use zero_mode")]
    MassRequired,
    /// Edge residual evaluated outside the open gap.
    #[error("edge residual needs |E| < |t|; got E = {e}, t = {t}")]
    EdgeDomain { e: f64, t: f64 },
    /// Regular residual evaluated inside the closed gap.
    #[error("regular residual needs |E| > |t|; got E = {e}, t = {t}")]
    RegularDomain { e: f64, t: f64 },
    /// The in-gap scan found more than one sign change; the transcendental
    /// edge condition should have at most one root per channel and sector.
    #[error("edge condition has {count} roots in the gap; expected at most one")]
    MultipleEdgeRoots { count: usize },
    /// Zero modes exist only at exactly zero mass.
    #[error("zero modes require t = 0; got t = {0}")]
    NotMassless(f64),
    /// An energy window must be a finite, non-empty open interval.
    #[error("energy window ({min}, {max}) is empty or not finite")]
    InvalidWindow { min: f64, max: f64 },
    /// Root brackets stayed closer than two scan steps after repeated
    /// refinement; the window cannot be resolved reliably.
    #[error("two roots in ({min}, {max}) remain unresolved after four scan refinements")]
    ScanResolution { min: f64, max: f64 },
    /// A wavefunction was requested outside the disk.
    #[error("radius r = {r} lies outside the disk [0, {radius}]")]
    RadiusDomain { r: f64, radius: f64 },
    /// Mass grids must be strictly increasing.
    #[error("t grid is not strictly increasing at index {0}")]
    GridNotIncreasing(usize),
    /// A branch touched E = 0 (within 1e-9) without changing sign; the
    /// crossing count is ill-defined on this grid.
    #[error("branch touches E = 0 near t = {t} (|E| = {e:e}) without crossing; flow is ambiguous")]
    AmbiguousCrossing { t: f64, e: f64 },
    /// A Bessel evaluation failed (domain or overflow guard).
    #[error("special function evaluation failed: {0}")]
    SpecFun(#[from] specfun::SpecFunError),
}

// ============================================================================
// Channel and classification types
// ============================================================================

/// One angular channel of the disk problem: half-integer j (stored as
/// `two_j = 2j`, an odd integer), mass `t`, and disk radius.
///
/// Validated on construction; accessors expose the fields read-only so a
/// `Channel` can never hold an even `two_j` or a non-positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Channel {
    two_j: i32,
    t: f64,
    radius: f64,
}

impl Channel {
    /// Build a validated channel. `two_j` must be odd, `radius` positive and
    /// finite, `t` finite.
    pub fn new(two_j: i32, t: f64, radius: f64) -> Result<Self, DiracDiskError> {
        if two_j % 2 == 0 {
            return Err(DiracDiskError::InvalidTwoJ(two_j));
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(DiracDiskError::InvalidRadius(radius));
        }
        if !t.is_finite() {
            return Err(DiracDiskError::NonFiniteMass(t));
        }
        Ok(Channel { two_j, t, radius })
    }

    /// Twice the angular quantum number (odd).
    pub fn two_j(&self) -> i32 {
        self.two_j
    }

    /// The half-integer j as a float (exact: odd integer divided by two).
    pub fn j(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    /// Mass parameter t.
    pub fn t(&self) -> f64 {
        self.t
    }

    /// Disk radius R.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Same channel at a different (finite) mass.
    pub fn with_t(&self, t: f64) -> Result<Self, DiracDiskError> {
        if !t.is_finite() {
            return Err(DiracDiskError::NonFiniteMass(t));
        }
        Ok(Channel { t, ..*self })
    }

    /// Order of the upper radial component: n⁻ = j - 1/2 (exact integer).
    pub(crate) fn order_minus(&self) -> i32 {
        (self.two_j - 1) / 2
    }

    /// Order of the lower radial component: n⁺ = j + 1/2 (exact integer).
    pub(crate) fn order_plus(&self) -> i32 {
        (self.two_j + 1) / 2
    }
}

/// Which boundary eigenvector the self-adjoint condition projects onto.
///
/// `Minus` selects the λ− eigenvector of the boundary operator (the sector
/// carrying the edge state and the spectral flow); `Plus` selects λ₊.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    Minus,
    Plus,
}

/// Which of the two massless threshold solutions to look for.
///
/// At t = 0 the boundary conditions with j > 0 admit one zero mode in the
/// `H0−` family (upper component only, regular power law) and those with
/// j < 0 one in the `H0₊` family (lower component only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroModeChoice {
    H0Minus,
    H0Plus,
}

/// Full sector tag carried by an eigenstate, including the two massless
/// threshold families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateSector {
    HMinus,
    HPlus,
    H0Minus,
    H0Plus,
}

impl Sector {
    /// The state tag for an eigenstate found in this sector at t ≠ 0.
    pub(crate) fn state_sector(self) -> StateSector {
        match self {
            Sector::Minus => StateSector::HMinus,
            Sector::Plus => StateSector::HPlus,
        }
    }
}

/// Spectral class of an eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateClass {
    /// In-gap state, exponentially localized at the rim (|E| < |t|).
    Edge,
    /// Bulk-oscillatory state above the gap (|E| > |t|).
    Regular,
    /// Massless threshold state (E = 0 at t = 0).
    ZeroMode,
}

/// Radial profile family of an eigenstate's closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialKind {
    /// Oscillatory Bessel J profile (regular states).
    BesselJ,
    /// Exponentially growing modified Bessel I profile (edge states).
    BesselI,
    /// Pure power law r^a (zero modes).
    Power,
}

/// A solved eigenstate of one channel: energy, classification, and the
/// normalization constant that makes the closed-form spinor unit-norm on the
/// disk.
///
/// Produced by [`edge_solve`], [`regular_solve`], [`zero_mode`], or
/// [`spectrum_sweep`]; [`wavefunction`] and [`observables`] expect states
/// obtained from those solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    pub channel: Channel,
    pub energy: f64,
    pub class: StateClass,
    pub sector: StateSector,
    pub radial_kind: RadialKind,
    /// Multiplies the un-normalized closed-form profile so that
    /// ∫ |Φ|² dA = 1 over the disk.
    pub normalization: f64,
}

// ============================================================================
// Boundary operator spectrum
// ============================================================================

/// One eigenpair of the boundary operator `K_t` restricted to a channel.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryEigenpair {
    /// Eigenvalue of K_t itself: κ = λ + 1/(2R).
    pub kappa: f64,
    /// Eigenvalue of the shifted operator M = K_t - 1/(2R): λ = ±√(j²/R²+t²).
    pub lambda: f64,
    /// Unit-norm eigenvector in the (φ⁻, φ⁺) boundary frame.
    pub vec: [Complex64; 2],
    /// Which projector sector this eigenvector defines.
    pub sector: Sector,
}

/// Eigenvalues and eigenvectors of the boundary operator for one channel,
/// returned as `(minus, plus)` for the λ− and λ₊ branches.
///
/// The shifted matrix `M = [[-j/R, -it], [it, j/R]]` is traceless Hermitian,
/// so λ± = ±√(j²/R² + t²) exactly; at t = 0 the square root is bypassed and
/// λ₊ = |j|/R is exact, which makes κ− = (1/2 - |j|)/R vanish identically for
/// the |j| = 1/2 channels. The two eigenvectors are orthonormal, and both κ's
/// are even in j: the channel pair ±j shares the same boundary spectrum.
pub fn k_spectrum(channel: &Channel) -> (BoundaryEigenpair, BoundaryEigenpair) {
    let r = channel.radius();
    let t = channel.t();
    let j_over_r = channel.j() / r;
    let lambda_plus = if t == 0.0 {
        j_over_r.abs()
    } else {
        j_over_r.hypot(t)
    };
    let half_shift = 0.5 / r;
    let minus = BoundaryEigenpair {
        kappa: half_shift - lambda_plus,
        lambda: -lambda_plus,
        vec: boundary_vector(j_over_r, t, lambda_plus, Sector::Minus),
        sector: Sector::Minus,
    };
    let plus = BoundaryEigenpair {
        kappa: half_shift + lambda_plus,
        lambda: lambda_plus,
        vec: boundary_vector(j_over_r, t, lambda_plus, Sector::Plus),
        sector: Sector::Plus,
    };
    (minus, plus)
}

/// Unit eigenvector of M for the requested branch, written as
/// (-it, j/R + λ) and normalized. The second component is rationalized when
/// j/R and λ nearly cancel (λ− with j > 0, λ₊ with j < 0) so the direction
/// stays accurate down to t → 0:
///
/// ```text
/// j/R - λ₊ = -t² / (j/R + λ₊) ,   j/R + λ₊ = t² / (λ₊ - j/R) .
/// ```
///
/// At t = 0 the matrix is diagonal and the eigenvectors are the coordinate
/// axes, picked by the sign of j.
fn boundary_vector(j_over_r: f64, t: f64, lambda_plus: f64, sector: Sector) -> [Complex64; 2] {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    if t == 0.0 {
        let first = match sector {
            Sector::Minus => j_over_r > 0.0,
            Sector::Plus => j_over_r < 0.0,
        };
        return if first { [one, zero] } else { [zero, one] };
    }
    let second = match sector {
        Sector::Minus => {
            if j_over_r > 0.0 {
                -(t * t) / (j_over_r + lambda_plus)
            } else {
                j_over_r - lambda_plus
            }
        }
        Sector::Plus => {
            if j_over_r < 0.0 {
                (t * t) / (lambda_plus - j_over_r)
            } else {
                j_over_r + lambda_plus
            }
        }
    };
    let norm = t.hypot(second);
    [
        Complex64::new(0.0, -t / norm),
        Complex64::new(second / norm, 0.0),
    ]
}

/// √((|a| - |b|) (|a| + |b|)) — the cancellation-safe form of √(a² - b²)
/// for |a| ≥ |b|.
pub(crate) fn split_sqrt(a: f64, b: f64) -> f64 {
    ((a.abs() - b.abs()) * (a.abs() + b.abs())).sqrt()
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(two_j: i32, t: f64, radius: f64) -> Channel {
        Channel::new(two_j, t, radius).unwrap()
    }

    #[test]
    fn channel_validation() {
        assert_eq!(
            Channel::new(2, 0.5, 1.0),
            Err(DiracDiskError::InvalidTwoJ(2))
        );
        assert_eq!(
            Channel::new(0, 0.5, 1.0),
            Err(DiracDiskError::InvalidTwoJ(0))
        );
        assert_eq!(
            Channel::new(1, 0.5, 0.0),
            Err(DiracDiskError::InvalidRadius(0.0))
        );
        assert_eq!(
            Channel::new(1, 0.5, -2.0),
            Err(DiracDiskError::InvalidRadius(-2.0))
        );
        assert!(matches!(
            Channel::new(1, f64::NAN, 1.0),
            Err(DiracDiskError::NonFiniteMass(_))
        ));
        let c = ch(-11, 0.25, 2.0);
        assert_eq!(c.two_j(), -11);
        assert_eq!(c.j(), -5.5);
        assert_eq!(c.order_minus(), -6);
        assert_eq!(c.order_plus(), -5);
        let c2 = c.with_t(-0.25).unwrap();
        assert_eq!(c2.t(), -0.25);
        assert_eq!(c2.radius(), 2.0);
    }

    #[test]
    fn boundary_spectrum_frozen_values() {
        // j = 11/2, t = 1, R = 1: λ₊ = √(5.5² + 1) and κ± = 1/2 ± λ₊.
        let (minus, plus) = k_spectrum(&ch(11, 1.0, 1.0));
        assert!((plus.lambda - 5.5901699437494742).abs() < 1e-15);
        assert!((plus.kappa - 6.0901699437494742).abs() < 1e-15);
        assert!((minus.kappa - (-5.0901699437494742)).abs() < 1e-15);
        assert_eq!(minus.lambda, -plus.lambda);
        assert_eq!(minus.sector, Sector::Minus);
        assert_eq!(plus.sector, Sector::Plus);
    }

    #[test]
    fn boundary_kappa_minus_vanishes_at_zero_mass() {
        // κ− = (1/2 - |j|)/R must be exactly zero for |j| = 1/2 at t = 0,
        // for any radius: this is the threshold that admits the zero mode.
        for r in [0.5, 1.0, 2.0, 7.25] {
            for two_j in [1, -1] {
                let (minus, plus) = k_spectrum(&ch(two_j, 0.0, r));
                assert_eq!(minus.kappa, 0.0, "R = {r}, two_j = {two_j}");
                assert_eq!(plus.kappa, 1.0 / r);
            }
        }
    }

    #[test]
    fn boundary_vectors_are_orthonormal_eigenvectors() {
        for &(two_j, t, r) in &[
            (1, 1.0, 1.0),
            (-1, 0.5, 2.0),
            (11, -0.3, 0.5),
            (-11, 0.01, 1.0),
            (5, 1e-6, 1.0),
            (3, 0.0, 1.0),
            (-3, 0.0, 1.0),
        ] {
            let c = ch(two_j, t, r);
            let (minus, plus) = k_spectrum(&c);
            for pair in [&minus, &plus] {
                // Unit norm.
                let n = pair.vec[0].norm_sqr() + pair.vec[1].norm_sqr();
                assert!((n - 1.0).abs() < 1e-14);
                // M v = λ v with M = [[-j/R, -it], [it, j/R]].
                let jr = c.j() / r;
                let m00 = Complex64::new(-jr, 0.0);
                let m01 = Complex64::new(0.0, -t);
                let m10 = Complex64::new(0.0, t);
                let m11 = Complex64::new(jr, 0.0);
                let mv = [
                    m00 * pair.vec[0] + m01 * pair.vec[1],
                    m10 * pair.vec[0] + m11 * pair.vec[1],
                ];
                for (k, (m, v)) in mv.iter().zip(&pair.vec).enumerate() {
                    let resid = m - v * pair.lambda;
                    assert!(
                        resid.norm() < 1e-12,
                        "eigen residual two_j={two_j} t={t} k={k}: {resid}"
                    );
                }
            }
            // Orthogonality of the two branches.
            let dot = minus.vec[0].conj() * plus.vec[0] + minus.vec[1].conj() * plus.vec[1];
            assert!(dot.norm() < 1e-14);
        }
    }

    #[test]
    fn boundary_kappas_are_even_in_j() {
        for &(two_j, t) in &[(1, 0.7), (5, -0.2), (11, 0.0), (9, 1.5)] {
            let (m_pos, p_pos) = k_spectrum(&ch(two_j, t, 1.3));
            let (m_neg, p_neg) = k_spectrum(&ch(-two_j, t, 1.3));
            assert_eq!(m_pos.kappa, m_neg.kappa);
            assert_eq!(p_pos.kappa, p_neg.kappa);
        }
    }

    #[test]
    fn sector_swap_mirrors_spectrum() {
        // Swapping the spinor components maps the λ branch of M to -λ:
        // S M S = -M with S = σ_1. So swap(v₋) must be the λ₊ eigenvector up
        // to phase, i.e. the boundary spectra of the two sectors mirror.
        let c = ch(7, 0.4, 1.0);
        let (minus, plus) = k_spectrum(&c);
        let swapped = [minus.vec[1], minus.vec[0]];
        // Compare |⟨swap(v₋), v₊⟩| = 1 (parallel up to phase).
        let dot = swapped[0].conj() * plus.vec[0] + swapped[1].conj() * plus.vec[1];
        assert!((dot.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn boundary_vector_accurate_at_tiny_mass() {
        // At t = 0.01, j = 11/2 the naive second component j/R - λ₊ loses
        // ~7 digits to cancellation; the rationalized form keeps the
        // direction. Cross-check against the exact rational expression.
        let c = ch(11, 0.01, 1.0);
        let (minus, _) = k_spectrum(&c);
        let lam = 5.5f64.hypot(0.01);
        let expected_second = -(0.01 * 0.01) / (5.5 + lam);
        let ratio = minus.vec[1].re / minus.vec[0].im;
        // vec = (-it, s)/n so s / (-t) = expected_second / (-t).
        assert!((ratio - expected_second / (-0.01)).abs() < 1e-13);
    }

    #[test]
    fn split_sqrt_matches_naive_form_away_from_cancellation() {
        assert!((split_sqrt(5.0, 3.0) - 4.0).abs() < 1e-15);
        assert_eq!(split_sqrt(2.0, 2.0), 0.0);
        assert!((split_sqrt(-5.0, 3.0) - 4.0).abs() < 1e-15);
    }
}
