//! Cross-model consistency report.
//!
//! Three independent descriptions of the same band inversion are evaluated
//! side by side and reduced to one verdict:
//!
//! * the boundary model on the disk — net spectral flow of every angular
//!   channel as the mass is swept through zero;
//! * the planar/spherical two-band model — the change of the band Chern
//!   number across the inversion, both as the winding-number jump of the
//!   eigenframe (ΔChern) and as a lattice Chern number on the sphere;
//! * the molecular rotor model — the count of levels below the gap on
//!   either side of the critical angular momentum, whose difference is the
//!   number of levels handed from one band to the other.
//!
//! The verdict is `consistent` exactly when every channel carries unit flow
//! with odd symmetry, the upper/lower band Chern numbers change by -1/+1,
//! the sphere Chern number jumps by one unit, and the rotor model transfers
//! exactly one level.

use anyhow::bail;

use diracdisk::Sector;
use fullquantum::{band_count, FullQuantumError, ModelSpec};
use semiquantum::{chern_sphere, delta_chern, Branch, DVectorField, Gauge};

use crate::cli::ReportArgs;
use crate::commands::channel_flows;
use crate::table::{Table, Value};

fn kv(key: impl Into<String>, value: Value) -> Vec<Value> {
    vec![Value::Text(key.into()), value]
}

pub fn build(args: &ReportArgs) -> anyhow::Result<Table> {
    let mut table = Table::new(&["key", "value"]);

    // ------------------------------------------------------------------
    // Disk model: spectral flow per channel (λ− sector hosts the edge
    // branch that carries the flow).
    // ------------------------------------------------------------------
    let flows = channel_flows(
        &args.two_j,
        args.radius,
        &args.t.values,
        (args.e_window.lo, args.e_window.hi),
        Sector::Minus,
    )?;
    for (two_j, net) in &flows {
        table.push(kv(format!("flow[2j={two_j}]"), Value::Int((*net).into())));
    }
    let flow_magnitude = flows.iter().all(|(_, net)| net.abs() == 1);
    let flow_antisymmetry = flows
        .iter()
        .all(|(two_j, net)| flows.iter().any(|(other, mirror)| *other == -two_j && *mirror == -net));

    // ------------------------------------------------------------------
    // Planar model: Chern-number change of both bands across the
    // inversion, from the winding-number jump of the eigenframe.
    // ------------------------------------------------------------------
    let dc_plus = delta_chern(
        &DVectorField::Plane,
        Branch::EPlus,
        Gauge::Up,
        args.t_minus,
        args.t_plus,
    )?;
    let dc_minus = delta_chern(
        &DVectorField::Plane,
        Branch::EMinus,
        Gauge::Up,
        args.t_minus,
        args.t_plus,
    )?;
    table.push(kv("delta_chern[E+]", Value::Int(dc_plus.into())));
    table.push(kv("delta_chern[E-]", Value::Int(dc_minus.into())));

    // ------------------------------------------------------------------
    // Sphere model: lattice Chern number of the upper band on both sides.
    // ------------------------------------------------------------------
    let field = DVectorField::Sphere {
        radius: args.rotor_j,
    };
    let grid = (args.grid, args.grid);
    let before = chern_sphere(&field, args.t_minus, Branch::EPlus, grid)?;
    let after = chern_sphere(&field, args.t_plus, Branch::EPlus, grid)?;
    table.push(kv(
        format!("sphere_chern[E+;t={}]", args.t_minus),
        Value::Int(before.chern.into()),
    ));
    table.push(kv(
        format!("sphere_chern[E+;t={}]", args.t_plus),
        Value::Int(after.chern.into()),
    ));
    table.push(kv(
        "sphere_flux_max",
        Value::Float(before.plaquette_flux_max.max(after.plaquette_flux_max)),
    ));
    let sphere_jump = after.chern - before.chern;

    // ------------------------------------------------------------------
    // Rotor model: band counts across the critical angular momentum and
    // the implied level transfer.
    // ------------------------------------------------------------------
    let mut resolved: Vec<(u32, i64)> = Vec::new();
    for &n in &args.n.values {
        let spec = ModelSpec::new(n, args.alpha)?;
        match band_count(&spec, 0.0) {
            Ok((below, above)) => {
                table.push(kv(
                    format!("bands[N={n}]"),
                    Value::Text(format!("{below}/{above}")),
                ));
                resolved.push((n, below as i64));
            }
            Err(FullQuantumError::OnGap { .. }) => {
                table.push(kv(format!("bands[N={n}]"), Value::Text("on-gap".into())));
            }
            Err(other) => return Err(other.into()),
        }
    }
    let inv_alpha = 1.0 / args.alpha;
    let low_side = resolved
        .iter()
        .filter(|(n, _)| f64::from(*n) < inv_alpha)
        .max_by_key(|(n, _)| *n);
    let high_side = resolved
        .iter()
        .filter(|(n, _)| f64::from(*n) > inv_alpha)
        .min_by_key(|(n, _)| *n);
    let (Some(&(n_lo, below_lo)), Some(&(n_hi, below_hi))) = (low_side, high_side) else {
        bail!(
            "the N range must contain resolvable band counts on both sides of \
             1/alpha = {inv_alpha}"
        );
    };
    // Number of lower-band states missing from a full set of 2N+1: the gap
    // swallows one level on the high-N side of the inversion.
    let deficit = |n: u32, below: i64| i64::from(2 * n + 1) - below;
    let transfer = deficit(n_hi, below_hi) - deficit(n_lo, below_lo);
    table.push(kv(
        format!("transfer[N={n_lo}->N={n_hi}]"),
        Value::Int(transfer),
    ));

    // ------------------------------------------------------------------
    // Checks and verdict.
    // ------------------------------------------------------------------
    let checks: [(&str, bool); 6] = [
        ("flow magnitude", flow_magnitude),
        ("flow antisymmetry", flow_antisymmetry),
        ("delta-Chern upper band", dc_plus == -1),
        ("delta-Chern lower band", dc_minus == 1),
        ("sphere Chern jump", sphere_jump.abs() == 1),
        ("level transfer", transfer.abs() == 1),
    ];
    let mut consistent = true;
    for (name, ok) in checks {
        consistent &= ok;
        table.push(kv(
            format!("check[{name}]"),
            Value::Text(if ok { "pass" } else { "fail" }.into()),
        ));
    }
    table.push(kv(
        "verdict",
        Value::Text(if consistent { "consistent" } else { "inconsistent" }.into()),
    ));
    Ok(table)
}

// ============================================================================
// Tests
// ============================================================================
