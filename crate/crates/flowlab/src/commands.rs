//! Execution of the subcommands: drive the model crates, assemble tables,
//! print scalar results, render plots.

use std::fs;

use anyhow::{bail, Context};
use rayon::prelude::*;

use diracdisk::{
    edge_solve, k_spectrum, observables, regular_solve, spectral_flow, spectrum_sweep, zero_mode,
    Channel, Sector, SpectrumBranch, StateClass, StateSector, ZeroModeChoice,
};
use fullquantum::{band_count, FullQuantumError, ModelSpec};
use semiquantum::{chern_sphere, winding_number, Branch, DVectorField};

use crate::cli::{
    BandsArgs, ChernArgs, Command, EdgeArgs, FamilyArg, FlowArgs, KspecArgs, RegularArgs,
    ReportArgs, SweepArgs, WindingArgs, ZeromodeArgs,
};
use crate::report;
use crate::svg;
use crate::table::{Table, Value};

pub fn dispatch(command: &Command) -> anyhow::Result<()> {
    match command {
        Command::Kspec(args) => kspec(args),
        Command::Edge(args) => edge(args),
        Command::Regular(args) => regular(args),
        Command::Zeromode(args) => zeromode(args),
        Command::Sweep(args) => sweep(args),
        Command::Flow(args) => flow(args),
        Command::Winding(args) => winding(args),
        Command::Chern(args) => chern(args),
        Command::Bands(args) => bands(args),
        Command::Report(args) => report_command(args),
    }
}

// ============================================================================
// Naming helpers
// ============================================================================

fn class_name(class: StateClass) -> &'static str {
    match class {
        StateClass::Edge => "edge",
        StateClass::Regular => "regular",
        StateClass::ZeroMode => "zero_mode",
    }
}

fn sector_name(sector: StateSector) -> &'static str {
    match sector {
        StateSector::HMinus => "H-",
        StateSector::HPlus => "H+",
        StateSector::H0Minus => "H0-",
        StateSector::H0Plus => "H0+",
    }
}

fn band_name(band: Branch) -> &'static str {
    match band {
        Branch::EPlus => "E+",
        Branch::EMinus => "E-",
    }
}

/// Sector label for one sweep sample: the massless column's zero mode lives
/// in its own family (fixed by the sign of j); every other sample inherits
/// the swept boundary-condition sector.
fn point_sector(class: StateClass, two_j: i32, sector: Sector) -> &'static str {
    match class {
        StateClass::ZeroMode => {
            if two_j > 0 {
                "H0-"
            } else {
                "H0+"
            }
        }
        _ => match sector {
            Sector::Minus => "H-",
            Sector::Plus => "H+",
        },
    }
}

// ============================================================================
// Tabular subcommands
// ============================================================================

fn kspec(args: &KspecArgs) -> anyhow::Result<()> {
    let mut table = Table::new(&["two_j", "t", "R", "kappa_minus", "kappa_plus"]);
    for &two_j in &args.two_j {
        for &t in &args.t.values {
            let channel = Channel::new(two_j, t, args.radius)?;
            let (minus, plus) = k_spectrum(&channel);
            table.push(vec![
                Value::Int(two_j.into()),
                Value::Float(t),
                Value::Float(args.radius),
                Value::Float(minus.kappa),
                Value::Float(plus.kappa),
            ]);
        }
    }
    table.emit(args.output.out.as_deref(), args.output.format)
}

fn edge(args: &EdgeArgs) -> anyhow::Result<()> {
    let sector = Sector::from(args.sector);
    let mut table = Table::new(&[
        "two_j",
        "t",
        "R",
        "sector",
        "E",
        "sigma_r",
        "sigma_theta",
        "orbital",
    ]);
    if args.t.values.contains(&0.0) {
        eprintln!(
            "flowlab: note: t = 0 carries no edge level (the gap is closed); \
             the massless column is skipped — see the zeromode subcommand"
        );
    }
    for &two_j in &args.two_j {
        for &t in &args.t.values {
            if t == 0.0 {
                continue;
            }
            let channel = Channel::new(two_j, t, args.radius)?;
            let Some(state) = edge_solve(&channel, sector)? else {
                continue;
            };
            let (sigma_r, sigma_theta, orbital) = observables(&state)?;
            table.push(vec![
                Value::Int(two_j.into()),
                Value::Float(t),
                Value::Float(args.radius),
                Value::Text(sector_name(state.sector).into()),
                Value::Float(state.energy),
                Value::Float(sigma_r),
                Value::Float(sigma_theta),
                Value::Float(orbital),
            ]);
        }
    }
    table.emit(args.output.out.as_deref(), args.output.format)
}

fn regular(args: &RegularArgs) -> anyhow::Result<()> {
    let sector = Sector::from(args.sector);
    let window = (args.e_window.lo, args.e_window.hi);
    let mut table = Table::new(&["two_j", "t", "R", "sector", "index", "E", "normalization"]);
    for &two_j in &args.two_j {
        for &t in &args.t.values {
            let channel = Channel::new(two_j, t, args.radius)?;
            for (index, state) in regular_solve(&channel, sector, window)?.iter().enumerate() {
                table.push(vec![
                    Value::Int(two_j.into()),
                    Value::Float(t),
                    Value::Float(args.radius),
                    Value::Text(sector_name(state.sector).into()),
                    Value::Int(index as i64),
                    Value::Float(state.energy),
                    Value::Float(state.normalization),
                ]);
            }
        }
    }
    table.emit(args.output.out.as_deref(), args.output.format)
}

fn zeromode(args: &ZeromodeArgs) -> anyhow::Result<()> {
    let mut table = Table::new(&["two_j", "R", "family", "E", "normalization"]);
    for &two_j in &args.two_j {
        let channel = Channel::new(two_j, 0.0, args.radius)?;
        let choices: &[ZeroModeChoice] = match args.family {
            FamilyArg::Auto => &[ZeroModeChoice::H0Minus, ZeroModeChoice::H0Plus],
            FamilyArg::Minus => &[ZeroModeChoice::H0Minus],
            FamilyArg::Plus => &[ZeroModeChoice::H0Plus],
        };
        for &choice in choices {
            let Some(state) = zero_mode(&channel, choice)? else {
                continue;
            };
            table.push(vec![
                Value::Int(two_j.into()),
                Value::Float(args.radius),
                Value::Text(sector_name(state.sector).into()),
                Value::Float(state.energy),
                Value::Float(state.normalization),
            ]);
        }
    }
    table.emit(args.output.out.as_deref(), args.output.format)
}

fn sweep(args: &SweepArgs) -> anyhow::Result<()> {
    let sector = Sector::from(args.sector);
    let window = (args.e_window.lo, args.e_window.hi);
    let sweeps: Vec<(i32, diracdisk::SweepResult)> = args
        .two_j
        .par_iter()
        .map(|&two_j| {
            spectrum_sweep(two_j, args.radius, &args.t.values, window, sector)
                .map(|result| (two_j, result))
        })
        .collect::<Result<_, _>>()?;

    let mut table = Table::new(&["two_j", "t", "branch_id", "E", "class", "sector"]);
    let mut branch_id: i64 = 0;
    for (two_j, result) in &sweeps {
        for warning in &result.warnings {
            eprintln!("flowlab: sweep 2j={two_j}: {warning}");
        }
        for branch in &result.branches {
            for (k, &(t, e)) in branch.points.iter().enumerate() {
                let class = branch.classes[k];
                table.push(vec![
                    Value::Int((*two_j).into()),
                    Value::Float(t),
                    Value::Int(branch_id),
                    Value::Float(e),
                    Value::Text(class_name(class).into()),
                    Value::Text(point_sector(class, *two_j, sector).into()),
                ]);
            }
            branch_id += 1;
        }
    }

    if let Some(path) = &args.plot {
        let branches: Vec<&SpectrumBranch> = sweeps
            .iter()
            .flat_map(|(_, result)| result.branches.iter())
            .collect();
        if branches.is_empty() {
            bail!("nothing to plot: the sweep tracked no branches inside the energy window");
        }
        fs::write(path, svg::render_sweep(&branches))
            .with_context(|| format!("writing the plot to {}", path.display()))?;
    }
    table.emit(args.output.out.as_deref(), args.output.format)
}

fn chern(args: &ChernArgs) -> anyhow::Result<()> {
    let field = DVectorField::Sphere {
        radius: args.rotor_j,
    };
    let band = Branch::from(args.band);
    let mut table = Table::new(&["t", "band", "chern", "flux_max"]);
    for &t in &args.t.values {
        let result = chern_sphere(&field, t, band, (args.grid, args.grid))?;
        table.push(vec![
            Value::Float(t),
            Value::Text(band_name(band).into()),
            Value::Int(result.chern.into()),
            Value::Float(result.plaquette_flux_max),
        ]);
    }
    table.emit(args.output.out.as_deref(), args.output.format)
}

fn bands(args: &BandsArgs) -> anyhow::Result<()> {
    let mut table = Table::new(&["N", "alpha", "below", "above"]);
    for &n in &args.n.values {
        let spec = ModelSpec::new(n, args.alpha)?;
        match band_count(&spec, args.split) {
            Ok((below, above)) => table.push(vec![
                Value::Int(n.into()),
                Value::Float(args.alpha),
                Value::Int(below as i64),
                Value::Int(above as i64),
            ]),
            Err(FullQuantumError::OnGap { split, eigenvalue }) => {
                eprintln!(
                    "flowlab: bands N={n}: eigenvalue {eigenvalue:e} lies on the split \
                     energy {split}; row skipped"
                );
            }
            Err(other) => return Err(other.into()),
        }
    }
    table.emit(args.output.out.as_deref(), args.output.format)
}

// ============================================================================
// Scalar subcommands
// ============================================================================

fn flow(args: &FlowArgs) -> anyhow::Result<()> {
    let flows = channel_flows(
        &args.two_j,
        args.radius,
        &args.t.values,
        (args.e_window.lo, args.e_window.hi),
        Sector::from(args.sector),
    )?;
    if let [(_, only)] = flows.as_slice() {
        println!("{only}");
    } else {
        for (two_j, value) in &flows {
            println!("{two_j} {value}");
        }
    }
    Ok(())
}

/// Net spectral flow of every requested channel, solved in parallel.  Sweep
/// warnings are replayed to standard error in channel order.
pub(crate) fn channel_flows(
    two_j: &[i32],
    radius: f64,
    t_grid: &[f64],
    e_window: (f64, f64),
    sector: Sector,
) -> anyhow::Result<Vec<(i32, i32)>> {
    let solved: Vec<(i32, i32, Vec<String>)> = two_j
        .par_iter()
        .map(|&channel| {
            let result = spectrum_sweep(channel, radius, t_grid, e_window, sector)?;
            let net = spectral_flow(&result.branches)?;
            Ok::<_, diracdisk::DiracDiskError>((channel, net, result.warnings))
        })
        .collect::<Result<_, _>>()?;
    let mut flows = Vec::with_capacity(solved.len());
    for (channel, net, warnings) in solved {
        for warning in warnings {
            eprintln!("flowlab: sweep 2j={channel}: {warning}");
        }
        flows.push((channel, net));
    }
    Ok(flows)
}

fn winding(args: &WindingArgs) -> anyhow::Result<()> {
    let (cx, cy) = args.center;
    let result = winding_number(
        &DVectorField::Plane,
        args.t,
        &[cx, cy, 0.0],
        args.radius,
        Branch::from(args.branch),
        args.gauge.into(),
        args.samples,
    )?;
    println!("{}", result.winding);
    Ok(())
}

fn report_command(args: &ReportArgs) -> anyhow::Result<()> {
    let table = report::build(args)?;
    table.emit(args.output.out.as_deref(), args.output.format)
}
