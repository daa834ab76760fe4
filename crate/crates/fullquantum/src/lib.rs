//! Full-quantum molecular model: a spin 1/2 coupled to a rotor,
//! `H = S_z ⊗ 1 + α S·N`, solved exactly per conserved-m_j block.
//!
//! # Block structure
//!
//! The total projection J_z = S_z + N_z commutes with H, so the
//! 2(2N + 1)-dimensional product space splits into blocks labeled by the
//! half-integer m_j ∈ {−N − 1/2, …, N + 1/2}. In the product basis
//! {|m_s = +1/2, m_N = m_j − 1/2⟩, |m_s = −1/2, m_N = m_j + 1/2⟩}
//! (dropping basis vectors with |m_N| > N), standard raising/lowering
//! algebra gives the real symmetric block
//!
//! ```text
//! [ 1/2 + (α/2)(m_j − 1/2)            (α/2)·√((N − m_j + 1/2)(N + m_j + 1/2)) ]
//! [ (α/2)·√(…)                        −1/2 − (α/2)(m_j + 1/2)                 ]
//! ```
//!
//! with 1×1 blocks at the extremes m_j = ±(N + 1/2), where only one basis
//! vector survives. The extremal eigenvalue at m_j = −(N + 1/2) is
//! −1/2 + αN/2: it crosses zero exactly at N = 1/α, carrying one level from
//! the lower energy band to the upper one — the full-quantum realization of
//! the band rearrangement this workspace tracks across models.

use thiserror::Error;

/// Errors for model construction and block/band queries.
#[derive(Debug, Error, PartialEq)]
pub enum FullQuantumError {
    /// The rotor quantum number must be a positive integer.
    #[error("N must be ≥ 1, got {0}")]
    InvalidN(u32),
    /// m_j labels are half-integers: two_m_j must be odd.
    #[error("two_m_j = {0} is even; m_j must be a half-integer")]
    EvenTwoMj(i32),
    /// |m_j| may not exceed N + 1/2.
    #[error("|two_m_j| = {two_m_j} exceeds 2N + 1 = {max}")]
    MjOutOfRange { two_m_j: i32, max: i32 },
    /// An eigenvalue sits on the requested band split, so band membership
    /// is undefined there.
    #[error("eigenvalue {eigenvalue} is within 1e-9 of the split energy {split}")]
    OnGap { split: f64, eigenvalue: f64 },
}

/// Dominant spin projection of an eigenstate (the larger-|component| basis
/// vector of its block).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

// ============================================================================
// model specification
// ============================================================================

/// A validated model configuration: rotor quantum number N ≥ 1 and spin–rotor
/// coupling α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSpec {
    n: u32,
    alpha: f64,
}

impl ModelSpec {
    pub fn new(n: u32, alpha: f64) -> Result<Self, FullQuantumError> {
        if n == 0 {
            return Err(FullQuantumError::InvalidN(n));
        }
        Ok(ModelSpec { n, alpha })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Dimension of the full spin ⊗ rotor space, 2(2N + 1).
    pub fn dimension(&self) -> usize {
        2 * (2 * self.n as usize + 1)
    }
}

// ============================================================================
// per-block matrices and spectra
// ============================================================================

/// One conserved-m_j block of the Hamiltonian: a real symmetric matrix of
/// size 1 (at m_j = ±(N + 1/2)) or 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BlockMatrix {
    /// Single surviving basis vector; the value is the eigenvalue itself.
    One { value: f64, spin: Spin },
    /// Full 2×2 block `[[h11, off], [off, h22]]` in the basis (spin-up,
    /// spin-down) described in the crate docs.
    Two { h11: f64, h22: f64, off: f64 },
}

impl BlockMatrix {
    pub fn size(&self) -> usize {
        match self {
            BlockMatrix::One { .. } => 1,
            BlockMatrix::Two { .. } => 2,
        }
    }

    pub fn trace(&self) -> f64 {
        match *self {
            BlockMatrix::One { value, .. } => value,
            BlockMatrix::Two { h11, h22, .. } => h11 + h22,
        }
    }

    /// Eigenvalues in ascending order with the dominant spin of each
    /// eigenstate. For a 2×2 block the closed form mean ± √(Δ² + off²) is
    /// used, Δ = (h11 − h22)/2; the dominant spin follows the sign of Δ
    /// (ties broken toward the diagonal limit α → 0, i.e. up for the upper
    /// eigenvalue).
    pub fn eigen(&self) -> (Vec<f64>, Vec<Spin>) {
        match *self {
            BlockMatrix::One { value, spin } => (vec![value], vec![spin]),
            BlockMatrix::Two { h11, h22, off } => {
                let mean = 0.5 * (h11 + h22);
                let delta = 0.5 * (h11 - h22);
                let s = delta.hypot(off);
                let (low_spin, high_spin) = if delta >= 0.0 {
                    (Spin::Down, Spin::Up)
                } else {
                    (Spin::Up, Spin::Down)
                };
                (vec![mean - s, mean + s], vec![low_spin, high_spin])
            }
        }
    }
}

/// Exact spectrum of one m_j block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockSpectrum {
    /// 2·m_j, an odd integer.
    pub two_m_j: i32,
    /// Block dimension, 1 or 2.
    pub size: usize,
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Dominant spin per eigenvalue, aligned with `eigenvalues`.
    pub dominant_spin: Vec<Spin>,
}

/// The Hamiltonian block for one half-integer m_j = two_m_j / 2.
pub fn block_matrix(spec: &ModelSpec, two_m_j: i32) -> Result<BlockMatrix, FullQuantumError> {
    if two_m_j.rem_euclid(2) == 0 {
        return Err(FullQuantumError::EvenTwoMj(two_m_j));
    }
    let max = 2 * spec.n as i32 + 1;
    if two_m_j.abs() > max {
        return Err(FullQuantumError::MjOutOfRange { two_m_j, max });
    }

    let n = spec.n as f64;
    let alpha = spec.alpha;
    let m_j = two_m_j as f64 / 2.0;
    // h11 pairs spin up with m_N = m_j − 1/2, h22 spin down with m_j + 1/2;
    // each exists only while |m_N| ≤ N.
    let h11 = 0.5 + 0.5 * alpha * (m_j - 0.5);
    let h22 = -0.5 - 0.5 * alpha * (m_j + 0.5);
    if two_m_j == max {
        return Ok(BlockMatrix::One { value: h11, spin: Spin::Up });
    }
    if two_m_j == -max {
        return Ok(BlockMatrix::One { value: h22, spin: Spin::Down });
    }
    let off = 0.5 * alpha * ((n - m_j + 0.5) * (n + m_j + 0.5)).sqrt();
    Ok(BlockMatrix::Two { h11, h22, off })
}

/// All 2(2N + 1) eigenvalues, grouped by block, m_j ascending.
pub fn spectrum(spec: &ModelSpec) -> Vec<BlockSpectrum> {
    let max = 2 * spec.n as i32 + 1;
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut two_m_j = -max;
    while two_m_j <= max {
        let block = block_matrix(spec, two_m_j)
            .expect("in-range odd two_m_j by construction");
        let (eigenvalues, dominant_spin) = block.eigen();
        out.push(BlockSpectrum {
            two_m_j,
            size: block.size(),
            eigenvalues,
            dominant_spin,
        });
        two_m_j += 2;
    }
    out
}

/// Count eigenvalues strictly below and strictly above `split_energy`.
///
/// Errors with [`FullQuantumError::OnGap`] when any eigenvalue lies within
/// 1e-9 of the split — band membership is undefined at a crossing (the
/// canonical example being α = 1/15, N = 15, split 0, where the extremal
/// block eigenvalue −1/2 + αN/2 vanishes identically).
pub fn band_count(spec: &ModelSpec, split_energy: f64) -> Result<(usize, usize), FullQuantumError> {
    let mut below = 0;
    let mut above = 0;
    for block in spectrum(spec) {
        for &e in &block.eigenvalues {
            if (e - split_energy).abs() < 1e-9 {
                return Err(FullQuantumError::OnGap { split: split_energy, eigenvalue: e });
            }
            if e < split_energy {
                below += 1;
            } else {
                above += 1;
            }
        }
    }
    Ok((below, above))
}

// ============================================================================
// tests
// ============================================================================
