//! End-to-end checks of the topological bookkeeping: the eight-entry winding
//! table, gauge-independent delta-Chern, and the lattice Chern number on the
//! sphere against the solid-angle degree oracle.

use semiquantum::{
    chern_sphere, delta_chern, eigenvalues, eigenvector, solid_angle_degree, winding_number,
    Branch, DVectorField, Gauge, Orientation,
};

const ORIGIN: [f64; 3] = [0.0, 0.0, 0.0];

fn table_winding(t: f64, branch: Branch, gauge: Gauge) -> i32 {
    let r = winding_number(&DVectorField::Plane, t, &ORIGIN, 0.1, branch, gauge, 256)
        .expect("winding must be computable away from t = 0");
    assert_eq!(r.orientation, Orientation::Clockwise);
    assert_eq!(r.samples, 256);
    assert_eq!(r.circle_radius, 0.1);
    r.winding
}

/// The full winding-number table at t = ±0.5, radius 0.1, 256 samples.
/// Rows are (W at t < 0, W at t > 0).
#[test]
fn winding_table_matches_all_eight_entries() {
    let rows = [
        (Branch::EPlus, Gauge::Up, (0, 1)),
        (Branch::EPlus, Gauge::Down, (-1, 0)),
        (Branch::EMinus, Gauge::Up, (1, 0)),
        (Branch::EMinus, Gauge::Down, (0, -1)),
    ];
    for (branch, gauge, expected) in rows {
        let got = (
            table_winding(-0.5, branch, gauge),
            table_winding(0.5, branch, gauge),
        );
        assert_eq!(got, expected, "{branch:?} {gauge:?}");
    }
}

#[test]
fn delta_chern_is_gauge_independent_and_band_antisymmetric() {
    let field = DVectorField::Plane;
    let up_plus = delta_chern(&field, Branch::EPlus, Gauge::Up, -0.5, 0.5).unwrap();
    let down_plus = delta_chern(&field, Branch::EPlus, Gauge::Down, -0.5, 0.5).unwrap();
    let up_minus = delta_chern(&field, Branch::EMinus, Gauge::Up, -0.5, 0.5).unwrap();
    let down_minus = delta_chern(&field, Branch::EMinus, Gauge::Down, -0.5, 0.5).unwrap();

    assert_eq!(up_plus, -1);
    assert_eq!(down_plus, -1);
    assert_eq!(up_minus, 1);
    assert_eq!(down_minus, 1);
    assert_eq!(up_plus, -up_minus);
}

/// Winding endpoints need not be at |t| = 0.5; the delta-Chern is a
/// difference of integers, stable across the straddle choice.
#[test]
fn delta_chern_is_straddle_independent() {
    let field = DVectorField::Plane;
    for (tm, tp) in [(-0.5, 0.5), (-0.05, 0.9), (-1.5, 0.01)] {
        assert_eq!(delta_chern(&field, Branch::EPlus, Gauge::Up, tm, tp).unwrap(), -1);
        assert_eq!(delta_chern(&field, Branch::EMinus, Gauge::Down, tm, tp).unwrap(), 1);
    }
}

/// The 64×64 configuration: Chern jump −1 for the upper band across t = 0,
/// admissible plaquette fluxes, and agreement with the brute-force degree
/// of the d-hat map at both endpoints.
#[test]
fn sphere_chern_jump_matches_degree_oracle() {
    let field = DVectorField::Sphere { radius: 1.0 };
    let grid = (64, 64);

    let before = chern_sphere(&field, -0.5, Branch::EPlus, grid).unwrap();
    let after = chern_sphere(&field, 0.5, Branch::EPlus, grid).unwrap();

    assert!(before.plaquette_flux_max < std::f64::consts::FRAC_PI_2);
    assert!(after.plaquette_flux_max < std::f64::consts::FRAC_PI_2);
    assert_eq!(after.chern - before.chern, -1);

    assert_eq!(solid_angle_degree(&field, -0.5, grid).unwrap(), before.chern);
    assert_eq!(solid_angle_degree(&field, 0.5, grid).unwrap(), after.chern);
}

/// The sphere-model jump for each band equals the plane-model delta-Chern:
/// the local and global bookkeeping agree.
#[test]
fn sphere_jump_equals_local_delta_chern() {
    let sphere = DVectorField::Sphere { radius: 1.0 };
    let plane = DVectorField::Plane;
    for band in [Branch::EPlus, Branch::EMinus] {
        let jump = chern_sphere(&sphere, 0.5, band, (32, 32)).unwrap().chern
            - chern_sphere(&sphere, -0.5, band, (32, 32)).unwrap().chern;
        let local = delta_chern(&plane, band, Gauge::Up, -0.5, 0.5).unwrap();
        assert_eq!(jump, local, "{band:?}");
    }
}

/// Spot-check the eigen-decomposition the topology is built on: residuals
/// and the advertised normalization identities.
#[test]
fn eigenvector_normalizations_follow_the_declared_gauges() {
    let field = DVectorField::Plane;
    let (e_minus, e_plus) = eigenvalues(&field, 3.0, &[0.0, 4.0, 0.0]);
    assert_eq!((e_minus, e_plus), (-5.0, 5.0));

    // up: (p1 − i p2, E − t)/N_up at p = (0, 4), t = 3, E = 5.
    let v = eigenvector(&field, 3.0, &[0.0, 4.0, 0.0], Branch::EPlus, Gauge::Up).unwrap();
    let n_up = (16.0_f64 + 4.0).sqrt(); // √(|p|² + (E−t)²) = √20
    assert!((v.components[0].re - 0.0).abs() < 1e-15);
    assert!((v.components[0].im - (-4.0 / n_up)).abs() < 1e-15);
    assert!((v.components[1].re - 2.0 / n_up).abs() < 1e-15);
    assert!(v.norm_residual < 1e-12);
}
