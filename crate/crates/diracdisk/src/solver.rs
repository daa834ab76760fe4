//! Transcendental eigenvalue conditions of one angular channel and their
//! root solvers, plus boundary observables of the solved states.
//!
//! Inserting the closed-form radial profiles into the boundary projection
//! turns each spectral problem into a scalar residual in the energy:
//!
//! * the edge condition (|E| < |t|) couples two modified Bessel values and
//!   has at most one root per channel in the λ− sector and none in λ₊;
//! * the regular condition (|E| > |t|) couples two Bessel J values and has an
//!   unbounded ladder of roots on either side of the gap;
//! * at t = 0 the channels with κ− = 0 admit one explicit power-law zero
//!   mode.
//!
//! Roots are isolated by a uniform sign scan and polished by plain bisection
//! (the bracket-shrinking safeguard of Dekker-style solvers, without the
//! secant acceleration — the residuals are cheap and the brackets tight).

use crate::radial::{normalization, wavefunction};
use crate::{
    split_sqrt, Channel, DiracDiskError, EigenState, RadialKind, Sector, StateClass, StateSector,
    ZeroModeChoice,
};

// ============================================================================
// Residuals
// ============================================================================

/// Distance kept between scan windows and the gap boundaries |E| = |t|,
/// where the edge and regular closed forms both degenerate.
fn gap_guard(t: f64) -> f64 {
    1e-9 * t.abs().max(1.0)
}

/// Sector coefficient C entering both residuals: the second component of the
/// boundary eigenvector over its first, times -it — concretely
/// C− = j/R + λ₊ and C₊ = j/R - λ₊ with λ₊ = √(j²/R² + t²).
///
/// The difference of nearly equal magnitudes (λ− branch with j < 0, λ₊
/// branch with j > 0) is rationalized through C = ±t²/(λ₊ ± j/R) so no
/// cancellation occurs as t → 0; at t = 0 those coefficients are exactly
/// zero, which switches the regular condition to its degenerate form.
fn sector_coefficient(channel: &Channel, sector: Sector) -> f64 {
    let j_over_r = channel.j() / channel.radius();
    let t = channel.t();
    let lambda_plus = j_over_r.hypot(t);
    match sector {
        Sector::Minus => {
            if j_over_r > 0.0 {
                j_over_r + lambda_plus
            } else {
                (t * t) / (lambda_plus - j_over_r)
            }
        }
        Sector::Plus => {
            if j_over_r < 0.0 {
                j_over_r - lambda_plus
            } else {
                -(t * t) / (j_over_r + lambda_plus)
            }
        }
    }
}

/// Boundary-condition residual of the in-gap (edge) problem at energy E.
///
/// With ε = √(t² - E²) and the channel orders n∓ = j ∓ 1/2,
///
/// ```text
/// g(E) = |t| √|t + E| I_{n⁻}(εR)  -  C √|t - E| I_{n⁺}(εR) ,
/// ```
///
/// whose zero (if any) is the edge energy. Requires t ≠ 0 and |E| < |t|.
pub fn edge_residual(e: f64, channel: &Channel, sector: Sector) -> Result<f64, DiracDiskError> {
    let t = channel.t();
    if t == 0.0 {
        return Err(DiracDiskError::MassRequired);
    }
    if !e.is_finite() || e.abs() >= t.abs() {
        return Err(DiracDiskError::EdgeDomain { e, t });
    }
    let eps = split_sqrt(t, e);
    let r = channel.radius();
    let c = sector_coefficient(channel, sector);
    let i_minus = specfun::bessel_i(channel.order_minus(), eps * r)?;
    let i_plus = specfun::bessel_i(channel.order_plus(), eps * r)?;
    Ok(t.abs() * (t + e).abs().sqrt() * i_minus - c * (t - e).abs().sqrt() * i_plus)
}

/// Boundary-condition residual of the bulk (regular) problem at energy E.
///
/// With β = √(E² - t²) and X = √|E+t| J_{n⁻}(βR), Y = √|E-t| J_{n⁺}(βR),
///
/// ```text
/// g(E) = ∓ t X - C Y        (upper sign for E > 0) .
/// ```
///
/// When t = 0 and the sector coefficient vanishes (λ− with j < 0, λ₊ with
/// j > 0) this expression degenerates to 0 ≡ 0; the boundary condition then
/// reduces to a vanishing first radial component, and the residual ∓X is
/// used instead. Requires |E| > |t|.
pub fn regular_residual(e: f64, channel: &Channel, sector: Sector) -> Result<f64, DiracDiskError> {
    let t = channel.t();
    if !e.is_finite() || e.abs() <= t.abs() {
        return Err(DiracDiskError::RegularDomain { e, t });
    }
    let beta = split_sqrt(e, t);
    let r = channel.radius();
    let c = sector_coefficient(channel, sector);
    let x = (e + t).abs().sqrt() * specfun::bessel_j(channel.order_minus(), beta * r)?;
    if t == 0.0 && c == 0.0 {
        return Ok(if e > 0.0 { -x } else { x });
    }
    let y = (e - t).abs().sqrt() * specfun::bessel_j(channel.order_plus(), beta * r)?;
    Ok(if e > 0.0 { -t * x - c * y } else { t * x - c * y })
}

// ============================================================================
// Scan and bisection
// ============================================================================

/// Sign-change brackets of `f` on a uniform grid of `steps` cells over
/// [lo, hi]. Each bracket is (cell index, left, right); an exact zero at a
/// node yields the degenerate bracket (x, x) and is not double-counted by
/// the neighbouring cells.
fn scan_brackets<F>(
    lo: f64,
    hi: f64,
    steps: usize,
    mut f: F,
) -> Result<Vec<(usize, f64, f64)>, DiracDiskError>
where
    F: FnMut(f64) -> Result<f64, DiracDiskError>,
{
    let mut brackets = Vec::new();
    let mut prev_x = lo;
    let mut prev_g = f(lo)?;
    if prev_g == 0.0 {
        brackets.push((0, lo, lo));
    }
    for k in 1..=steps {
        let x = lo + (hi - lo) * (k as f64) / (steps as f64);
        let g = f(x)?;
        if g == 0.0 {
            brackets.push((k, x, x));
        } else if prev_g != 0.0 && (prev_g < 0.0) != (g < 0.0) {
            brackets.push((k, prev_x, x));
        }
        prev_x = x;
        prev_g = g;
    }
    Ok(brackets)
}

/// Plain bisection on a sign-changing bracket, run until the bracket width
/// drops below `tol(lo, hi)` or the midpoint is no longer representable
/// strictly inside.
fn bisect<F, T>(mut lo: f64, mut hi: f64, mut f: F, tol: T) -> Result<f64, DiracDiskError>
where
    F: FnMut(f64) -> Result<f64, DiracDiskError>,
    T: Fn(f64, f64) -> f64,
{
    if lo == hi {
        return Ok(lo);
    }
    let mut g_lo = f(lo)?;
    if g_lo == 0.0 {
        return Ok(lo);
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol(lo, hi) || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let g_mid = f(mid)?;
        if g_mid == 0.0 {
            return Ok(mid);
        }
        if (g_mid < 0.0) == (g_lo < 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
}

/// Assemble a solved state: classification plus the normalization constant.
fn build_state(
    channel: &Channel,
    energy: f64,
    class: StateClass,
    sector: StateSector,
) -> Result<EigenState, DiracDiskError> {
    let radial_kind = match class {
        StateClass::Edge => RadialKind::BesselI,
        StateClass::Regular => RadialKind::BesselJ,
        StateClass::ZeroMode => RadialKind::Power,
    };
    Ok(EigenState {
        channel: *channel,
        energy,
        class,
        sector,
        radial_kind,
        normalization: normalization(channel, energy, class)?,
    })
}

// ============================================================================
// Solvers
// ============================================================================

/// The in-gap edge state of one channel and sector, if any.
///
/// Scans the open gap (-|t| + δ, |t| - δ) with 2048 uniform steps, then
/// bisects the (unique) bracket to |ΔE| < 1e-12. Returns `Ok(None)` when the
/// residual has no sign change — in particular always for the λ₊ sector —
/// and an error if the scan finds more than one root, which would contradict
/// the structure of the edge condition. Requires t ≠ 0; gaps narrower than
/// the numerical guard (|t| ≲ 2e-9) are treated as unresolvable, yielding
/// `None`.
pub fn edge_solve(
    channel: &Channel,
    sector: Sector,
) -> Result<Option<EigenState>, DiracDiskError> {
    let t = channel.t();
    if t == 0.0 {
        return Err(DiracDiskError::MassRequired);
    }
    let guard = gap_guard(t);
    let lo = -t.abs() + guard;
    let hi = t.abs() - guard;
    if lo >= hi {
        return Ok(None);
    }
    let brackets = scan_brackets(lo, hi, 2048, |e| edge_residual(e, channel, sector))?;
    match brackets.len() {
        0 => Ok(None),
        1 => {
            let (_, a, b) = brackets[0];
            let energy = bisect(a, b, |e| edge_residual(e, channel, sector), |_, _| 1e-12)?;
            Ok(Some(build_state(
                channel,
                energy,
                StateClass::Edge,
                sector.state_sector(),
            )?))
        }
        count => Err(DiracDiskError::MultipleEdgeRoots { count }),
    }
}

/// All regular (bulk) eigenstates of one channel and sector with energies in
/// the open `window`, sorted ascending.
///
/// The window is intersected with the two components of |E| > |t| (each kept
/// a guard δ away from the gap boundary). Every component is scanned with
/// 2048 uniform steps; if two brackets fall within two steps of each other
/// the scan is repeated with the step halved, up to four times, before
/// giving up with a resolution error. Brackets are bisected to a width of
/// 1e-13 · max(1, |E|).
pub fn regular_solve(
    channel: &Channel,
    sector: Sector,
    window: (f64, f64),
) -> Result<Vec<EigenState>, DiracDiskError> {
    let (min, max) = window;
    if !min.is_finite() || !max.is_finite() || min >= max {
        return Err(DiracDiskError::InvalidWindow { min, max });
    }
    let t = channel.t();
    let guard = gap_guard(t);
    let gap_lo = -t.abs() - guard;
    let gap_hi = t.abs() + guard;
    let mut segments = Vec::new();
    if min < gap_lo {
        segments.push((min, max.min(gap_lo)));
    }
    if max > gap_hi {
        segments.push((min.max(gap_hi), max));
    }
    let mut states = Vec::new();
    for (lo, hi) in segments {
        for root in scan_segment(channel, sector, lo, hi)? {
            states.push(build_state(
                channel,
                root,
                StateClass::Regular,
                sector.state_sector(),
            )?);
        }
    }
    states.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    Ok(states)
}

/// Isolate and polish every root of the regular residual in [lo, hi].
fn scan_segment(
    channel: &Channel,
    sector: Sector,
    lo: f64,
    hi: f64,
) -> Result<Vec<f64>, DiracDiskError> {
    let mut steps: usize = 2048;
    for _ in 0..=4 {
        let brackets = scan_brackets(lo, hi, steps, |e| regular_residual(e, channel, sector))?;
        let adjacent = brackets.windows(2).any(|w| w[1].0 - w[0].0 <= 1);
        if !adjacent {
            let mut roots = Vec::with_capacity(brackets.len());
            for (_, a, b) in brackets {
                roots.push(bisect(
                    a,
                    b,
                    |e| regular_residual(e, channel, sector),
                    |a, b| 1e-13 * (0.5 * (a + b)).abs().max(1.0),
                )?);
            }
            return Ok(roots);
        }
        steps *= 2;
    }
    Err(DiracDiskError::ScanResolution { min: lo, max: hi })
}

/// The explicit zero mode of a massless channel, if the choice matches the
/// channel's sign of j.
///
/// At t = 0 the κ− boundary eigenvalue vanishes for |j| = 1/2 and the
/// boundary condition admits one square-integrable threshold solution per
/// channel: the `H0−` family (upper component ∝ r^{j-1/2}) exists for j > 0
/// and the `H0₊` family (lower component ∝ r^{-(j+1/2)}) for j < 0. The
/// normalization is elementary. Requires t = 0.
pub fn zero_mode(
    channel: &Channel,
    choice: ZeroModeChoice,
) -> Result<Option<EigenState>, DiracDiskError> {
    let t = channel.t();
    if t != 0.0 {
        return Err(DiracDiskError::NotMassless(t));
    }
    let matched = match choice {
        ZeroModeChoice::H0Minus => channel.two_j() > 0,
        ZeroModeChoice::H0Plus => channel.two_j() < 0,
    };
    if !matched {
        return Ok(None);
    }
    let sector = match choice {
        ZeroModeChoice::H0Minus => StateSector::H0Minus,
        ZeroModeChoice::H0Plus => StateSector::H0Plus,
    };
    Ok(Some(build_state(
        channel,
        0.0,
        StateClass::ZeroMode,
        sector,
    )?))
}

// ============================================================================
// Boundary observables
// ============================================================================

/// Boundary expectation values (⟨σ_r⟩, ⟨σ_θ⟩, ⟨-i ∂_θ⟩) of a solved state,
/// evaluated on the rim spinor (A, B) = Φ(R, 0):
///
/// ```text
/// ⟨σ_r⟩ = 2 Re(Ā B) / (|A|² + |B|²)       (identically zero: A ⊥ B in phase)
/// ⟨σ_θ⟩ = 2 Im(Ā B) / (|A|² + |B|²)
/// ⟨-i∂_θ⟩ = ((j-1/2)|A|² + (j+1/2)|B|²) / (|A|² + |B|²)
/// ```
///
/// For λ− edge states the boundary spinor is proportional to the λ−
/// eigenvector, which collapses ⟨σ_θ⟩ to the closed form -t/λ₊.
pub fn observables(state: &EigenState) -> Result<(f64, f64, f64), DiracDiskError> {
    let phi = wavefunction(state, state.channel.radius(), 0.0)?;
    let (a, b) = (phi[0], phi[1]);
    let na = a.norm_sqr();
    let nb = b.norm_sqr();
    let denom = na + nb;
    let cross = a.conj() * b;
    let j = state.channel.j();
    Ok((
        2.0 * cross.re / denom,
        2.0 * cross.im / denom,
        ((j - 0.5) * na + (j + 0.5) * nb) / denom,
    ))
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    // Frozen reference energies keep every digit of the independent
    // computation they came from, beyond f64 resolution.
    #![allow(clippy::excessive_precision)]

    use super::*;

    fn ch(two_j: i32, t: f64, radius: f64) -> Channel {
        Channel::new(two_j, t, radius).unwrap()
    }

    #[test]
    fn edge_residual_frozen_value() {
        // two_j = 1, t = 1, R = 1 at E = 0:
        // g = I_0(1) - (1/2 + √(5)/2) · I_1(1).
        let g = edge_residual(0.0, &ch(1, 1.0, 1.0), Sector::Minus).unwrap();
        assert!((g - 0.35161923844073116).abs() < 1e-14);
    }

    #[test]
    fn edge_residual_domain_errors() {
        assert_eq!(
            edge_residual(0.0, &ch(1, 0.0, 1.0), Sector::Minus),
            Err(DiracDiskError::MassRequired)
        );
        assert!(matches!(
            edge_residual(2.0, &ch(1, 1.0, 1.0), Sector::Minus),
            Err(DiracDiskError::EdgeDomain { .. })
        ));
        assert!(matches!(
            edge_residual(-1.0, &ch(1, 1.0, 1.0), Sector::Minus),
            Err(DiracDiskError::EdgeDomain { .. })
        ));
    }

    #[test]
    fn edge_energies_frozen_values() {
        let cases = [
            (11, 1.0, -0.088401617465911472),
            (1, 1.0, -0.36536464726290189),
            (-11, 1.0, 0.088401617465911472),
            (5, -1.0, 0.17852353427421441),
            (1, 0.5, -0.34211935556562541),
            (11, 0.1, -0.0090883338575456087),
        ];
        for (two_j, t, expected) in cases {
            let state = edge_solve(&ch(two_j, t, 1.0), Sector::Minus)
                .unwrap()
                .unwrap_or_else(|| panic!("missing edge state two_j={two_j} t={t}"));
            assert!(
                (state.energy - expected).abs() < 1e-11,
                "two_j={two_j} t={t}: {} vs {expected}",
                state.energy
            );
            assert_eq!(state.class, StateClass::Edge);
            assert_eq!(state.sector, StateSector::HMinus);
            assert_eq!(state.radial_kind, RadialKind::BesselI);
        }
    }

    #[test]
    fn edge_energy_signs_follow_the_quadrant_rule() {
        // sign(E) = -sign(t) · sign(j) in the λ− sector.
        for two_j in [1, 5, 11, -1, -5, -11] {
            for t in [1.0, 0.1, -1.0, -0.1] {
                let state = edge_solve(&ch(two_j, t, 1.0), Sector::Minus)
                    .unwrap()
                    .unwrap();
                let expected = -(t.signum()) * f64::from(two_j.signum());
                assert_eq!(
                    state.energy.signum(),
                    expected,
                    "two_j={two_j} t={t} E={}",
                    state.energy
                );
                assert!(state.energy.abs() < t.abs());
            }
        }
    }

    #[test]
    fn plus_sector_has_no_edge_states() {
        for two_j in [1, -1, 5, -11] {
            for t in [1.0, -0.5, 0.2] {
                assert!(edge_solve(&ch(two_j, t, 1.0), Sector::Plus)
                    .unwrap()
                    .is_none());
            }
        }
    }

    #[test]
    fn edge_mass_reflection_flips_energy() {
        // E(j, -t) = -E(j, t).
        for two_j in [1, 7, -3] {
            let e_pos = edge_solve(&ch(two_j, 0.8, 1.0), Sector::Minus)
                .unwrap()
                .unwrap()
                .energy;
            let e_neg = edge_solve(&ch(two_j, -0.8, 1.0), Sector::Minus)
                .unwrap()
                .unwrap()
                .energy;
            assert!((e_pos + e_neg).abs() < 1e-11);
        }
    }

    #[test]
    fn unresolvably_narrow_gap_yields_none() {
        assert!(edge_solve(&ch(1, 1e-10, 1.0), Sector::Minus)
            .unwrap()
            .is_none());
        assert_eq!(
            edge_solve(&ch(1, 0.0, 1.0), Sector::Minus),
            Err(DiracDiskError::MassRequired)
        );
    }

    #[test]
    fn regular_spectrum_frozen_values() {
        // two_j = 1, t = 0.5, R = 1, λ− sector, window (-8, 8): two roots on
        // each side of the gap.
        let states = regular_solve(&ch(1, 0.5, 1.0), Sector::Minus, (-8.0, 8.0)).unwrap();
        let expected = [
            -7.4111193436723258,
            -4.2293039255517598,
            3.4455993837482814,
            6.6262153236313014,
        ];
        assert_eq!(states.len(), expected.len());
        for (state, e) in states.iter().zip(expected) {
            assert!(
                (state.energy - e).abs() < 1e-11,
                "{} vs {e}",
                state.energy
            );
            assert_eq!(state.class, StateClass::Regular);
            assert_eq!(state.radial_kind, RadialKind::BesselJ);
        }
        // Channel reflection: two_j → -1 mirrors the spectrum.
        let mirrored = regular_solve(&ch(-1, 0.5, 1.0), Sector::Minus, (-8.0, 8.0)).unwrap();
        assert_eq!(mirrored.len(), 4);
        for (m, e) in mirrored.iter().rev().zip(expected) {
            assert!((m.energy + e).abs() < 1e-11);
        }
    }

    #[test]
    fn plus_sector_regular_spectrum_frozen_values() {
        let states = regular_solve(&ch(1, 0.5, 1.0), Sector::Plus, (0.0, 9.0)).unwrap();
        let expected = [2.1251014325434676, 5.1724413030662706, 8.2889410636625065];
        assert_eq!(states.len(), expected.len());
        for (state, e) in states.iter().zip(expected) {
            assert!((state.energy - e).abs() < 1e-11);
            assert_eq!(state.sector, StateSector::HPlus);
        }
    }

    #[test]
    fn massless_degenerate_condition_hits_bessel_zeros() {
        // At t = 0 the sector coefficient vanishes for λ− with j < 0 and for
        // λ₊ with j > 0; the condition degenerates to a vanishing first
        // component, whose roots are Bessel zeros divided by R.
        let j1_zeros = [3.8317059702075123, 7.0155866698156188, 10.173468135062722];
        // two_j = 1, λ−, t = 0: generic path, C = 1, roots at J_1 zeros too
        // (the Y term carries J_1).
        let states = regular_solve(&ch(1, 0.0, 1.0), Sector::Minus, (0.0, 11.0)).unwrap();
        assert_eq!(states.len(), 3);
        for (s, z) in states.iter().zip(j1_zeros) {
            assert!((s.energy - z).abs() < 1e-11);
        }
        // two_j = -1, λ−, t = 0: degenerate path (C = 0), first component is
        // J_{-1}, same zeros.
        let states = regular_solve(&ch(-1, 0.0, 1.0), Sector::Minus, (0.0, 11.0)).unwrap();
        assert_eq!(states.len(), 3);
        for (s, z) in states.iter().zip(j1_zeros) {
            assert!((s.energy - z).abs() < 1e-11);
        }
        // two_j = 1, λ₊, t = 0: degenerate path with first component J_0.
        let j0_zeros = [2.4048255576957728, 5.5200781102863106, 8.6537279129110122];
        let states = regular_solve(&ch(1, 0.0, 1.0), Sector::Plus, (0.0, 9.0)).unwrap();
        assert_eq!(states.len(), 3);
        for (s, z) in states.iter().zip(j0_zeros) {
            assert!((s.energy - z).abs() < 1e-11);
        }
    }

    #[test]
    fn regular_residual_frozen_value_and_domain() {
        // two_j = 1, t = 0.5, R = 1, λ−, E = 2.
        let g = regular_residual(2.0, &ch(1, 0.5, 1.0), Sector::Minus).unwrap();
        assert!((g - (-1.0635297420752989)).abs() < 1e-13);
        assert!(matches!(
            regular_residual(0.3, &ch(1, 0.5, 1.0), Sector::Minus),
            Err(DiracDiskError::RegularDomain { .. })
        ));
    }

    #[test]
    fn regular_solve_rejects_bad_windows() {
        let c = ch(1, 0.5, 1.0);
        assert!(matches!(
            regular_solve(&c, Sector::Minus, (2.0, 2.0)),
            Err(DiracDiskError::InvalidWindow { .. })
        ));
        assert!(matches!(
            regular_solve(&c, Sector::Minus, (f64::NEG_INFINITY, 2.0)),
            Err(DiracDiskError::InvalidWindow { .. })
        ));
        // A window entirely inside the gap is valid and empty.
        assert!(regular_solve(&c, Sector::Minus, (-0.4, 0.4))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn normalizations_match_independent_quadrature_oracles() {
        // Edge state two_j = 11, t = 1, R = 1: the r^5/r^6 suppression and
        // the I-profile growth make this the stiffest normalization in the
        // standard sweeps.
        let state = edge_solve(&ch(11, 1.0, 1.0), Sector::Minus)
            .unwrap()
            .unwrap();
        assert!((state.normalization - 5452.239083946718).abs() < 1e-5);
        // Regular states two_j = 1, t = 0.5.
        let states = regular_solve(&ch(1, 0.5, 1.0), Sector::Minus, (-8.0, 8.0)).unwrap();
        let norms = [
            0.50177366872795730,
            0.50573640127927329,
            0.50550541892900391,
            0.50173798241948701,
        ];
        for (s, n) in states.iter().zip(norms) {
            assert!(
                (s.normalization - n).abs() < 1e-10,
                "{} vs {n}",
                s.normalization
            );
        }
    }

    #[test]
    fn zero_mode_selection_and_shape() {
        // Matching choices produce the mode; mismatched ones produce None.
        let state = zero_mode(&ch(3, 0.0, 2.0), ZeroModeChoice::H0Minus)
            .unwrap()
            .unwrap();
        assert_eq!(state.energy, 0.0);
        assert_eq!(state.class, StateClass::ZeroMode);
        assert_eq!(state.sector, StateSector::H0Minus);
        assert!(zero_mode(&ch(3, 0.0, 2.0), ZeroModeChoice::H0Plus)
            .unwrap()
            .is_none());
        let state = zero_mode(&ch(-3, 0.0, 2.0), ZeroModeChoice::H0Plus)
            .unwrap()
            .unwrap();
        assert_eq!(state.sector, StateSector::H0Plus);
        assert!(zero_mode(&ch(-3, 0.0, 2.0), ZeroModeChoice::H0Minus)
            .unwrap()
            .is_none());
        assert_eq!(
            zero_mode(&ch(3, 0.5, 2.0), ZeroModeChoice::H0Minus),
            Err(DiracDiskError::NotMassless(0.5))
        );
    }

    #[test]
    fn observables_frozen_and_closed_form() {
        // Edge state two_j = 11, t = 1: ⟨σ_θ⟩ = -t/λ₊ = -1/√(5.5² + 1).
        let state = edge_solve(&ch(11, 1.0, 1.0), Sector::Minus)
            .unwrap()
            .unwrap();
        let (sr, st, orbital) = observables(&state).unwrap();
        assert_eq!(sr, 0.0);
        assert!((st - (-0.17888543819998318)).abs() < 1e-12);
        assert!((orbital - 5.0080650449500463).abs() < 1e-9);
        // The closed form holds for every λ− edge state, both mass signs.
        for (two_j, t) in [(1, 1.0), (5, -1.0), (11, 0.1), (-3, 0.7)] {
            let c = ch(two_j, t, 1.0);
            let state = edge_solve(&c, Sector::Minus).unwrap().unwrap();
            let (sr, st, _) = observables(&state).unwrap();
            let lambda_plus = (c.j() / c.radius()).hypot(t);
            assert_eq!(sr, 0.0);
            assert!(
                (st - (-t / lambda_plus)).abs() < 1e-9,
                "two_j={two_j} t={t}: {st} vs {}",
                -t / lambda_plus
            );
        }
    }

    #[test]
    fn zero_mode_observables_are_exact() {
        // Single-component states: ⟨σ_θ⟩ = 0 and the orbital number is
        // j ∓ 1/2 exactly.
        let state = zero_mode(&ch(3, 0.0, 1.0), ZeroModeChoice::H0Minus)
            .unwrap()
            .unwrap();
        let (sr, st, orbital) = observables(&state).unwrap();
        assert_eq!((sr, st, orbital), (0.0, 0.0, 1.0));
        let state = zero_mode(&ch(-3, 0.0, 1.0), ZeroModeChoice::H0Plus)
            .unwrap()
            .unwrap();
        let (sr, st, orbital) = observables(&state).unwrap();
        assert_eq!((sr, st, orbital), (0.0, 0.0, -1.0));
    }

    #[test]
    fn boundary_spinor_is_parallel_to_the_sector_eigenvector() {
        // For every solved state the rim spinor (A, B) must lie along the
        // boundary eigenvector of its sector: A v₂ - B v₁ = 0 up to solver
        // tolerance. This ties the radial solutions to k_spectrum directly.
        let mut checked = 0;
        for (two_j, t) in [(1, 1.0), (-1, 0.5), (11, 0.1), (5, -1.0)] {
            let c = ch(two_j, t, 1.0);
            let (minus, _) = crate::k_spectrum(&c);
            let mut states = vec![edge_solve(&c, Sector::Minus).unwrap().unwrap()];
            states.extend(regular_solve(&c, Sector::Minus, (-9.5, 9.5)).unwrap());
            for state in states {
                let phi = wavefunction(&state, 1.0, 0.0).unwrap();
                let cross = phi[0] * minus.vec[1] - phi[1] * minus.vec[0];
                let scale = (phi[0].norm_sqr() + phi[1].norm_sqr()).sqrt();
                assert!(
                    cross.norm() / scale < 1e-8,
                    "two_j={two_j} t={t} E={}: {}",
                    state.energy,
                    cross.norm() / scale
                );
                checked += 1;
            }
        }
        assert!(checked >= 10);
    }
}
