//! Command-line interface: argument grammar and the small parsers for range
//! and window syntax shared by several subcommands.
//!
//! Ranges use the inclusive `START:STEP:STOP` form (a bare number is a
//! one-element range).  Grid values that land within absolute 1e-12·STEP of
//! zero are snapped to exactly 0.0 so that a symmetric mass sweep contains the
//! massless column exactly, where the zero modes live.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

// ============================================================================
// Top level
// ============================================================================

#[derive(Debug, Parser)]
#[command(
    name = "flowlab",
    version,
    about = "Disk Dirac spectra, band-inversion invariants, and cross-model consistency checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary-condition eigenvalues kappa-/kappa+ per channel and mass
    Kspec(KspecArgs),
    /// In-gap edge level per channel and mass, with rim observables
    Edge(EdgeArgs),
    /// Gapped (regular) levels per channel inside an energy window
    Regular(RegularArgs),
    /// Massless zero modes per channel
    Zeromode(ZeromodeArgs),
    /// Branch-tracked spectrum over a mass range
    Sweep(SweepArgs),
    /// Net spectral flow through E = 0 per channel over a mass range
    Flow(FlowArgs),
    /// Winding number of a planar d-vector eigenframe around a circle
    Winding(WindingArgs),
    /// Lattice Chern number of a band of the sphere model
    Chern(ChernArgs),
    /// Level counts below/above the gap of the molecular rotor model
    Bands(BandsArgs),
    /// Cross-model consistency report with verdict
    Report(ReportArgs),
}

// ============================================================================
// Shared argument groups
// ============================================================================

/// Output destination and format, shared by the tabular subcommands.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format for the table
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the table to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SectorArg {
    /// Lower boundary-condition sector H- (hosts the edge branch)
    Minus,
    /// Upper boundary-condition sector H+
    Plus,
}

impl From<SectorArg> for diracdisk::Sector {
    fn from(value: SectorArg) -> Self {
        match value {
            SectorArg::Minus => diracdisk::Sector::Minus,
            SectorArg::Plus => diracdisk::Sector::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    /// Upper band E+
    Eplus,
    /// Lower band E-
    Eminus,
}

impl From<BranchArg> for semiquantum::Branch {
    fn from(value: BranchArg) -> Self {
        match value {
            BranchArg::Eplus => semiquantum::Branch::EPlus,
            BranchArg::Eminus => semiquantum::Branch::EMinus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GaugeArg {
    /// Phase fixed on the upper spinor component
    Up,
    /// Phase fixed on the lower spinor component
    Down,
}

impl From<GaugeArg> for semiquantum::Gauge {
    fn from(value: GaugeArg) -> Self {
        match value {
            GaugeArg::Up => semiquantum::Gauge::Up,
            GaugeArg::Down => semiquantum::Gauge::Down,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Pick the family that exists for the channel's angular momentum sign
    Auto,
    /// Lower-sector zero mode (exists for j > 0)
    Minus,
    /// Upper-sector zero mode (exists for j < 0)
    Plus,
}

// ============================================================================
// Range and window syntax
// ============================================================================

/// Inclusive numeric grid `START:STEP:STOP`, or a single bare value.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatRange {
    pub values: Vec<f64>,
}

/// Half-open validation is done by the consumers; the window itself is just
/// an ordered pair `LO:HI`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
}

/// Inclusive integer range `LO:HI`, or a single bare value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntRange {
    pub values: Vec<u32>,
}

pub fn parse_float_range(text: &str) -> Result<FloatRange, String> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => {
            let value = parse_f64(single)?;
            Ok(FloatRange { values: vec![value] })
        }
        [start, step, stop] => {
            let start = parse_f64(start)?;
            let step = parse_f64(step)?;
            let stop = parse_f64(stop)?;
            build_grid(start, step, stop).map(|values| FloatRange { values })
        }
        _ => Err(format!(
            "expected VALUE or START:STEP:STOP, got {text:?}"
        )),
    }
}

pub fn parse_window(text: &str) -> Result<Window, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, hi] = parts.as_slice() else {
        return Err(format!("expected LO:HI, got {text:?}"));
    };
    let lo = parse_f64(lo)?;
    let hi = parse_f64(hi)?;
    if lo >= hi {
        return Err(format!("window is empty: {lo} >= {hi}"));
    }
    Ok(Window { lo, hi })
}

pub fn parse_int_range(text: &str) -> Result<IntRange, String> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => {
            let value = parse_u32(single)?;
            Ok(IntRange { values: vec![value] })
        }
        [lo, hi] => {
            let lo = parse_u32(lo)?;
            let hi = parse_u32(hi)?;
            if lo > hi {
                return Err(format!("range is empty: {lo} > {hi}"));
            }
            Ok(IntRange {
                values: (lo..=hi).collect(),
            })
        }
        _ => Err(format!("expected VALUE or LO:HI, got {text:?}")),
    }
}

pub fn parse_point(text: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = text.split(',').collect();
    let [x, y] = parts.as_slice() else {
        return Err(format!("expected X,Y, got {text:?}"));
    };
    Ok((parse_f64(x)?, parse_f64(y)?))
}

fn parse_f64(text: &str) -> Result<f64, String> {
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {text:?}"))?;
    if !value.is_finite() {
        return Err(format!("not finite: {text:?}"));
    }
    Ok(value)
}

fn parse_u32(text: &str) -> Result<u32, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("not a non-negative integer: {text:?}"))
}

/// Build the inclusive grid start, start+step, ..., stop.  The point count is
/// rounded from (stop-start)/step, so stop is included whenever it sits within
/// half a step of the final grid point; values within 1e-12·step of zero are
/// snapped to exactly 0.0.
fn build_grid(start: f64, step: f64, stop: f64) -> Result<Vec<f64>, String> {
    if step <= 0.0 {
        return Err(format!("step must be positive, got {step}"));
    }
    if stop < start {
        return Err(format!("stop {stop} lies below start {start}"));
    }
    let count = ((stop - start) / step + 0.5).floor() as i64;
    let mut values = Vec::with_capacity(count as usize + 1);
    for k in 0..=count {
        let v = start + (k as f64) * step;
        values.push(if v.abs() < 1e-12 * step { 0.0 } else { v });
    }
    Ok(values)
}

// ============================================================================
// Subcommand arguments
// ============================================================================

#[derive(Debug, Args)]
pub struct KspecArgs {
    /// Doubled angular momenta 2j (odd integers), comma separated
    #[arg(long = "two-j", value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub two_j: Vec<i32>,
    /// Disk radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Mass value or range START:STEP:STOP
    #[arg(long, allow_hyphen_values = true, value_parser = parse_float_range)]
    pub t: FloatRange,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EdgeArgs {
    /// Doubled angular momenta 2j (odd integers), comma separated
    #[arg(long = "two-j", value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub two_j: Vec<i32>,
    /// Disk radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Mass value or range START:STEP:STOP (massless points are skipped)
    #[arg(long, allow_hyphen_values = true, value_parser = parse_float_range)]
    pub t: FloatRange,
    /// Boundary-condition sector
    #[arg(long, value_enum, default_value_t = SectorArg::Minus)]
    pub sector: SectorArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RegularArgs {
    /// Doubled angular momenta 2j (odd integers), comma separated
    #[arg(long = "two-j", value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub two_j: Vec<i32>,
    /// Disk radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Mass value or range START:STEP:STOP
    #[arg(long, allow_hyphen_values = true, value_parser = parse_float_range)]
    pub t: FloatRange,
    /// Energy window LO:HI to search for levels
    #[arg(long = "e-window", allow_hyphen_values = true, value_parser = parse_window)]
    pub e_window: Window,
    /// Boundary-condition sector
    #[arg(long, value_enum, default_value_t = SectorArg::Minus)]
    pub sector: SectorArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ZeromodeArgs {
    /// Doubled angular momenta 2j (odd integers), comma separated
    #[arg(long = "two-j", value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub two_j: Vec<i32>,
    /// Disk radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Which zero-mode family to report
    #[arg(long, value_enum, default_value_t = FamilyArg::Auto)]
    pub family: FamilyArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Doubled angular momenta 2j (odd integers), comma separated
    #[arg(long = "two-j", value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub two_j: Vec<i32>,
    /// Disk radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Mass range START:STEP:STOP
    #[arg(long, allow_hyphen_values = true, value_parser = parse_float_range)]
    pub t: FloatRange,
    /// Energy window LO:HI tracked by the sweep
    #[arg(long = "e-window", allow_hyphen_values = true, value_parser = parse_window)]
    pub e_window: Window,
    /// Boundary-condition sector
    #[arg(long, value_enum, default_value_t = SectorArg::Minus)]
    pub sector: SectorArg,
    /// Also render the sweep to this SVG file
    #[arg(long)]
    pub plot: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    /// Doubled angular momenta 2j (odd integers), comma separated
    #[arg(long = "two-j", value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub two_j: Vec<i32>,
    /// Disk radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Mass range START:STEP:STOP
    #[arg(long, allow_hyphen_values = true, value_parser = parse_float_range, default_value = "-1:0.02:1")]
    pub t: FloatRange,
    /// Energy window LO:HI tracked by the sweep
    #[arg(long = "e-window", allow_hyphen_values = true, value_parser = parse_window, default_value = "-2:2")]
    pub e_window: Window,
    /// Boundary-condition sector
    #[arg(long, value_enum, default_value_t = SectorArg::Minus)]
    pub sector: SectorArg,
}

#[derive(Debug, Args)]
pub struct WindingArgs {
    /// Mass parameter of the planar model
    #[arg(long, allow_hyphen_values = true)]
    pub t: f64,
    /// Band whose eigenvector is transported
    #[arg(long, value_enum, default_value_t = BranchArg::Eplus)]
    pub branch: BranchArg,
    /// Gauge used to fix the eigenvector phase
    #[arg(long, value_enum, default_value_t = GaugeArg::Up)]
    pub gauge: GaugeArg,
    /// Circle center X,Y in the parameter plane
    #[arg(long, allow_hyphen_values = true, value_parser = parse_point, default_value = "0,0")]
    pub center: (f64, f64),
    /// Circle radius
    #[arg(long, default_value_t = 0.1)]
    pub radius: f64,
    /// Number of discretization samples on the circle
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct ChernArgs {
    /// Mass value or range START:STEP:STOP
    #[arg(long, allow_hyphen_values = true, value_parser = parse_float_range)]
    pub t: FloatRange,
    /// Band whose Chern number is computed
    #[arg(long, value_enum, default_value_t = BranchArg::Eplus)]
    pub band: BranchArg,
    /// Lattice subdivisions per angle (grid x grid plaquettes)
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    /// Rotor angular momentum J (sphere radius of the d-vector field)
    #[arg(long = "J", default_value_t = 1.0)]
    pub rotor_j: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BandsArgs {
    /// Coupling constant alpha of the rotor model
    #[arg(long)]
    pub alpha: f64,
    /// Rotor angular momentum N value or range LO:HI
    #[arg(long = "N", value_parser = parse_int_range)]
    pub n: IntRange,
    /// Energy at which the spectrum is split into the two bands
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub split: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Doubled angular momenta 2j for the spectral-flow channels
    #[arg(
        long = "two-j",
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "1,-1,3,-3,5,-5,7,-7,9,-9,11,-11"
    )]
    pub two_j: Vec<i32>,
    /// Disk radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Mass range swept by the disk model
    #[arg(long, allow_hyphen_values = true, value_parser = parse_float_range, default_value = "-1:0.02:1")]
    pub t: FloatRange,
    /// Energy window LO:HI tracked by the sweeps
    #[arg(long = "e-window", allow_hyphen_values = true, value_parser = parse_window, default_value = "-2:2")]
    pub e_window: Window,
    /// Mass on the inverted side for the invariant jumps
    #[arg(long = "t-minus", allow_hyphen_values = true, default_value_t = -0.5)]
    pub t_minus: f64,
    /// Mass on the normal side for the invariant jumps
    #[arg(long = "t-plus", allow_hyphen_values = true, default_value_t = 0.5)]
    pub t_plus: f64,
    /// Coupling constant alpha of the rotor model
    #[arg(long, default_value_t = 1.0 / 15.0)]
    pub alpha: f64,
    /// Rotor angular momentum N range LO:HI straddling 1/alpha
    #[arg(long = "N", value_parser = parse_int_range, default_value = "13:17")]
    pub n: IntRange,
    /// Rotor angular momentum J of the sphere model
    #[arg(long = "J", default_value_t = 1.0)]
    pub rotor_j: f64,
    /// Lattice subdivisions for the sphere Chern numbers
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    #[test]
    fn range_grid_is_inclusive_and_snaps_zero() {
        let range = parse_float_range("-1:0.02:1").unwrap();
        assert_eq!(range.values.len(), 101);
        assert_eq!(range.values[0], -1.0);
        assert_eq!(*range.values.last().unwrap(), 1.0);
        // -1 + 50*0.02 is not exactly zero in floating point; the grid must
        // snap it so the sweep contains a genuinely massless column.
        assert_eq!(range.values[50], 0.0);
        assert!(range.values[50].is_sign_positive());

        let odd = parse_float_range("-0.3:0.1:0.3").unwrap();
        assert_eq!(odd.values.len(), 7);
        assert_eq!(odd.values[3], 0.0);
    }

    #[test]
    fn range_accepts_single_values_and_rejects_bad_grids() {
        assert_eq!(parse_float_range("0.5").unwrap().values, vec![0.5]);
        assert!(parse_float_range("1:0:2").is_err());
        assert!(parse_float_range("1:-0.5:2").is_err());
        assert!(parse_float_range("2:0.5:1").is_err());
        assert!(parse_float_range("1:2").is_err());
        assert!(parse_float_range("nan").is_err());
        // Stop short of a full extra step: the grid must not overshoot.
        assert_eq!(
            parse_float_range("0:0.1:0.35").unwrap().values.len(),
            4
        );
    }

    #[test]
    fn window_and_int_range_parse() {
        let w = parse_window("-2:2").unwrap();
        assert_eq!((w.lo, w.hi), (-2.0, 2.0));
        assert!(parse_window("2:-2").is_err());
        assert!(parse_window("1").is_err());

        assert_eq!(parse_int_range("13:17").unwrap().values, vec![13, 14, 15, 16, 17]);
        assert_eq!(parse_int_range("15").unwrap().values, vec![15]);
        assert!(parse_int_range("17:13").is_err());
        assert!(parse_int_range("-3").is_err());
    }

    #[test]
    fn cli_parses_the_documented_invocations() {
        let cli = Cli::try_parse_from([
            "flowlab", "sweep", "--two-j", "11", "--R", "1", "--t", "-1:0.02:1",
            "--e-window", "-12:12",
        ])
        .unwrap();
        match cli.command {
            Command::Sweep(args) => {
                assert_eq!(args.two_j, vec![11]);
                assert_eq!(args.t.values.len(), 101);
                assert_eq!((args.e_window.lo, args.e_window.hi), (-12.0, 12.0));
            }
            other => panic!("parsed the wrong subcommand: {other:?}"),
        }

        let cli = Cli::try_parse_from([
            "flowlab", "report", "--alpha", "0.066666667", "--N", "13:17",
        ])
        .unwrap();
        match cli.command {
            Command::Report(args) => {
                assert_eq!(args.n.values, vec![13, 14, 15, 16, 17]);
                assert_eq!(args.two_j.len(), 12);
                assert_eq!(args.t_minus, -0.5);
            }
            other => panic!("parsed the wrong subcommand: {other:?}"),
        }

        let err = Cli::try_parse_from(["flowlab", "kspec"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn negative_channel_lists_parse() {
        let cli = Cli::try_parse_from([
            "flowlab", "flow", "--two-j", "-11,11", "--R", "2",
        ])
        .unwrap();
        match cli.command {
            Command::Flow(args) => {
                assert_eq!(args.two_j, vec![-11, 11]);
                assert_eq!(args.radius, 2.0);
                assert_eq!(args.t.values.len(), 101);
            }
            other => panic!("parsed the wrong subcommand: {other:?}"),
        }
    }
}
