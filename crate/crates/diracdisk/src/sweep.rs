//! Branch-tracked spectra over a mass grid and the spectral flow through
//! the gap closing.
//!
//! [`spectrum_sweep`] solves one angular channel at every mass of a strictly
//! increasing grid and threads the resulting energies into continuous
//! branches by nearest-energy matching with a slope-aware threshold. The
//! massless column contributes the explicit zero mode (λ− sector only),
//! which is how the edge branch is followed straight through t = 0.
//!
//! [`spectral_flow`] counts the signed zero crossings of the branches: +1
//! when a branch crosses E = 0 upward as t increases, -1 downward. A branch
//! that touches zero (within 1e-9) and retreats has no well-defined
//! crossing, and the flow computation reports it as ambiguous rather than
//! guessing.

use crate::solver::{edge_solve, regular_solve, zero_mode};
use crate::{Channel, DiracDiskError, Sector, StateClass, ZeroModeChoice};

/// Energies below this magnitude count as "on the zero line" when crossings
/// are classified.
const ZERO_TOL: f64 = 1e-9;

/// One continuous spectral branch of a channel over the swept mass grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumBranch {
    /// The angular channel (2j) this branch belongs to.
    pub two_j: i32,
    /// (t, E) samples, one per grid column the branch was tracked through.
    pub points: Vec<(f64, f64)>,
    /// Class of the state at each sample (edge ↔ zero mode ↔ edge is the
    /// expected sequence across the massless column; regular elsewhere).
    pub classes: Vec<StateClass>,
    /// Zero crossings of this branch: (t*, direction) with direction +1 for
    /// E increasing through zero, -1 for decreasing.
    pub crossing_record: Vec<(f64, i32)>,
}

/// A swept spectrum: the tracked branches plus any tracking warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub branches: Vec<SpectrumBranch>,
    /// Human-readable notes about branches that lost track before the final
    /// grid column (states drifting out of the energy window, matching
    /// failures). Empty in a clean sweep.
    pub warnings: Vec<String>,
}

struct OpenBranch {
    points: Vec<(f64, f64)>,
    classes: Vec<StateClass>,
}

/// Solve one channel over `t_grid` and thread the spectra into branches.
///
/// At every mass the edge state (if inside `e_window`) and all regular
/// states in the window are collected; at an exact t = 0 column the λ−
/// sector instead contributes the explicit zero mode of the massless
/// channel. Matching to the previous column is greedy by energy distance,
/// accepted within `max(5 |slope| Δt, 1e-3)` where the slope is estimated
/// from the branch's last two points (1 before that). Branches that lose
/// track before the final column are closed with a warning; states with no
/// antecedent open new branches.
pub fn spectrum_sweep(
    two_j: i32,
    radius: f64,
    t_grid: &[f64],
    e_window: (f64, f64),
    sector: Sector,
) -> Result<SweepResult, DiracDiskError> {
    let (e_min, e_max) = e_window;
    if !e_min.is_finite() || !e_max.is_finite() || e_min >= e_max {
        return Err(DiracDiskError::InvalidWindow {
            min: e_min,
            max: e_max,
        });
    }
    for i in 1..t_grid.len() {
        if t_grid[i] <= t_grid[i - 1] {
            return Err(DiracDiskError::GridNotIncreasing(i));
        }
    }
    let in_window = |e: f64| e > e_min && e < e_max;

    let mut open: Vec<OpenBranch> = Vec::new();
    let mut done: Vec<OpenBranch> = Vec::new();
    let mut warnings: Vec<String> = Vec::new();

    for &t in t_grid {
        let channel = Channel::new(two_j, t, radius)?;
        // ------------------------------------------------------------------
        // Solve this column.
        // ------------------------------------------------------------------
        let mut found: Vec<(f64, StateClass)> = Vec::new();
        if t == 0.0 {
            if sector == Sector::Minus && in_window(0.0) {
                let choice = if two_j > 0 {
                    ZeroModeChoice::H0Minus
                } else {
                    ZeroModeChoice::H0Plus
                };
                if zero_mode(&channel, choice)?.is_some() {
                    found.push((0.0, StateClass::ZeroMode));
                }
            }
        } else if let Some(state) = edge_solve(&channel, sector)? {
            if in_window(state.energy) {
                found.push((state.energy, StateClass::Edge));
            }
        }
        for state in regular_solve(&channel, sector, e_window)? {
            found.push((state.energy, StateClass::Regular));
        }
        found.sort_by(|a, b| a.0.total_cmp(&b.0));

        // ------------------------------------------------------------------
        // Match to open branches: greedy nearest-energy within threshold.
        // ------------------------------------------------------------------
        let mut candidates: Vec<(f64, usize, usize)> = Vec::new();
        for (bi, branch) in open.iter().enumerate() {
            let n = branch.points.len();
            let (t_last, e_last) = branch.points[n - 1];
            let slope = if n >= 2 {
                let (t_prev, e_prev) = branch.points[n - 2];
                ((e_last - e_prev) / (t_last - t_prev)).abs()
            } else {
                1.0
            };
            let threshold = (5.0 * slope * (t - t_last)).max(1e-3);
            for (fi, &(e, _)) in found.iter().enumerate() {
                let dist = (e - e_last).abs();
                if dist <= threshold {
                    candidates.push((dist, bi, fi));
                }
            }
        }
        candidates.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut branch_match: Vec<Option<usize>> = vec![None; open.len()];
        let mut found_taken = vec![false; found.len()];
        for (_, bi, fi) in candidates {
            if branch_match[bi].is_none() && !found_taken[fi] {
                branch_match[bi] = Some(fi);
                found_taken[fi] = true;
            }
        }

        let mut still_open = Vec::with_capacity(open.len());
        for (bi, mut branch) in open.into_iter().enumerate() {
            match branch_match[bi] {
                Some(fi) => {
                    branch.points.push((t, found[fi].0));
                    branch.classes.push(found[fi].1);
                    still_open.push(branch);
                }
                None => {
                    let (t_end, e_end) = *branch.points.last().unwrap();
                    warnings.push(format!(
                        "branch at E = {e_end:.6} lost track after t = {t_end}: no matching state at t = {t}"
                    ));
                    done.push(branch);
                }
            }
        }
        for (fi, &(e, class)) in found.iter().enumerate() {
            if !found_taken[fi] {
                still_open.push(OpenBranch {
                    points: vec![(t, e)],
                    classes: vec![class],
                });
            }
        }
        still_open.sort_by(|a, b| {
            let ea = a.points.last().unwrap().1;
            let eb = b.points.last().unwrap().1;
            ea.total_cmp(&eb)
        });
        open = still_open;
    }
    done.extend(open);
    done.sort_by(|a, b| {
        let pa = a.points[0];
        let pb = b.points[0];
        pa.0.total_cmp(&pb.0).then(pa.1.total_cmp(&pb.1))
    });

    let branches = done
        .into_iter()
        .map(|b| {
            let crossing_record = crossings(&b.points);
            SpectrumBranch {
                two_j,
                points: b.points,
                classes: b.classes,
                crossing_record,
            }
        })
        .collect();
    Ok(SweepResult { branches, warnings })
}

/// Ternary sign of an energy sample with the zero-line tolerance.
fn energy_sign(e: f64) -> i32 {
    if e.abs() <= ZERO_TOL {
        0
    } else if e > 0.0 {
        1
    } else {
        -1
    }
}

/// Zero crossings of one branch: consecutive non-zero signs that differ.
///
/// The crossing mass t* is interpolated linearly between adjacent samples;
/// if the branch passes through samples on the zero line, t* is the middle
/// of that zero run (exactly the massless column for the edge branch of a
/// symmetric grid). Touches — zero runs flanked by equal signs — are not
/// crossings and are left out of the record.
fn crossings(points: &[(f64, f64)]) -> Vec<(f64, i32)> {
    let mut record = Vec::new();
    let mut last_nonzero: Option<(usize, i32)> = None;
    for (k, &(_, e)) in points.iter().enumerate() {
        let s = energy_sign(e);
        if s == 0 {
            continue;
        }
        if let Some((pi, ps)) = last_nonzero {
            if ps != s {
                let t_star = if k == pi + 1 {
                    let (t0, e0) = points[pi];
                    let (t1, e1) = points[k];
                    t0 - e0 * (t1 - t0) / (e1 - e0)
                } else {
                    0.5 * (points[pi + 1].0 + points[k - 1].0)
                };
                record.push((t_star, s));
            }
        }
        last_nonzero = Some((k, s));
    }
    record
}

/// Net spectral flow of a swept spectrum: the sum of signed zero crossings
/// over all branches.
///
/// Errors with [`DiracDiskError::AmbiguousCrossing`] if any branch touches
/// the zero line (|E| ≤ 1e-9) and withdraws to the side it came from — on
/// such a grid the crossing count is not well defined and the sweep should
/// be refined instead of trusted.
pub fn spectral_flow(branches: &[SpectrumBranch]) -> Result<i32, DiracDiskError> {
    let mut flow = 0;
    for branch in branches {
        let mut last_nonzero: Option<(usize, i32)> = None;
        for (k, &(_, e)) in branch.points.iter().enumerate() {
            let s = energy_sign(e);
            if s == 0 {
                continue;
            }
            if let Some((pi, ps)) = last_nonzero {
                if ps == s && k > pi + 1 {
                    let (t_touch, e_touch) = branch.points[pi + 1];
                    return Err(DiracDiskError::AmbiguousCrossing {
                        t: t_touch,
                        e: e_touch,
                    });
                }
            }
            last_nonzero = Some((k, s));
        }
        flow += branch.crossing_record.iter().map(|&(_, d)| d).sum::<i32>();
    }
    Ok(flow)
}

// ============================================================================
// Tests
// ============================================================================
