//! Every production quadrature cross-checked against the independent
//! oracle integrators (plain adaptive Simpson, with clipped-interval
//! extrapolation where the integrand has endpoint singularities).

use ctw_core::actions::{action_integrals, build_torus, find_turning_points};
use ctw_core::expr::parse;
use ctw_core::model::{load_model, CausticCase, DepthModel, ModelInput};
use ctw_core::oracle::{adaptive_simpson, clipped_extrapolated};
use ctw_core::torus::build_chart;

const TAU: f64 = 2.0 * std::f64::consts::PI;

fn example1() -> DepthModel {
    load_model(ModelInput {
        u_left: -0.5,
        u_right: 3.2,
        f1: parse("exp(u*(2.7-u)) - 1.03").unwrap(),
        f2: parse("1").unwrap(),
        g: parse("4/5 + (1/3)*cos(3*v)*sin(v)^2").unwrap(),
        d1: parse("exp(sin(3*u))*cos(2*v)^2").unwrap(),
        mu: 1,
        case: CausticCase::A,
    })
    .unwrap()
}

fn example3() -> DepthModel {
    load_model(ModelInput {
        u_left: 0.0,
        u_right: 1.0,
        f1: parse("1").unwrap(),
        f2: parse("2*u*(1-u)").unwrap(),
        g: parse("3 + sin(v)/2").unwrap(),
        d1: parse("39*(1-u)^4*(exp(u)-1)^4*exp(sin(3*v))").unwrap(),
        mu: 1,
        case: CausticCase::B,
    })
    .unwrap()
}

/// `I1` and `I2` against the oracle for both caustic types.
#[test]
fn action_integrals_match_oracle() {
    for (model, energy, kappa) in
        [(example1(), 1.0, -0.03), (example3(), 1.0, -2.132799706586304)]
    {
        let (i1, i2) = action_integrals(&model, energy, kappa).unwrap();
        let (left, right) = find_turning_points(&model, energy, kappa).unwrap();
        // I1: sqrt-type endpoint behavior on both sides; clip + extrapolate
        let mut p = |u: f64| {
            let f1 = model.f1_at(u).unwrap();
            let f2 = model.f2_at(u).unwrap();
            ((energy * f1 - kappa * f2) / f2).max(0.0).sqrt()
        };
        let oracle_i1 = clipped_extrapolated(
            &mut p,
            left.location,
            right.location,
            3e-7 * (right.location - left.location),
            1e-13,
        ) / std::f64::consts::PI;
        let rel = ((i1 - oracle_i1) / oracle_i1).abs();
        assert!(rel < 1e-9, "I1 oracle mismatch {rel} ({i1} vs {oracle_i1})");
        // I2 is smooth
        let mut q = |v: f64| (energy * model.g_at(v).unwrap() + kappa).sqrt();
        let oracle_i2 = adaptive_simpson(&mut q, 0.0, TAU, 1e-13) / TAU;
        let rel = ((i2 - oracle_i2) / oracle_i2).abs();
        assert!(rel < 1e-9, "I2 oracle mismatch {rel}");
    }
}

/// The alpha1 chart of Example 3 computed two ways: substituted panel
/// quadrature (production tables) vs raw clipped-extrapolated Simpson.
#[test]
fn alpha1_two_ways_example3() {
    let model = example3();
    let (energy, kappa) = (1.0, -2.132799706586304);
    let torus = build_torus(&model, energy, kappa).unwrap();
    let mut w = |u: f64| {
        let f1 = model.f1_at(u).unwrap();
        let f2 = model.f2_at(u).unwrap();
        1.0 / ((energy * f1 - kappa * f2) * f2).sqrt()
    };
    let t1_oracle = clipped_extrapolated(&mut w, 0.0, 1.0, 1e-7, 1e-13);
    assert!(
        ((torus.t1 - t1_oracle) / t1_oracle).abs() < 1e-8,
        "T1: {} vs {}",
        torus.t1,
        t1_oracle
    );
    // alpha1(0.5) = (pi/T1) int_0^0.5 W du; only the left end is singular,
    // so clip and extrapolate on that side alone
    let eps = 1e-7;
    let coarse = adaptive_simpson(&mut w, eps, 0.5, 1e-13);
    let fine = adaptive_simpson(&mut w, 0.25 * eps, 0.5, 1e-13);
    let partial = 2.0 * fine - coarse;
    let oracle = std::f64::consts::PI * partial / t1_oracle;
    let got = torus.alpha1_of_u(0.5);
    assert!((got - oracle).abs() < 1e-8, "alpha1(0.5): {got} vs {oracle}");
}

/// eta and S2 tables against the oracle.
#[test]
fn v_tables_match_oracle() {
    let model = example3();
    let torus = build_torus(&model, 1.0, -2.132799706586304).unwrap();
    for frac in [0.25, 0.5, 0.9] {
        let v = TAU * frac;
        let mut ds2 = |vv: f64| (model.g_at(vv).unwrap() + torus.kappa).sqrt();
        let want = adaptive_simpson(&mut ds2, 0.0, v, 1e-13);
        assert!(((torus.s2(v) - want) / want).abs() < 1e-9);
        let mut deta = |vv: f64| 1.0 / (model.g_at(vv).unwrap() + torus.kappa).sqrt();
        let want = adaptive_simpson(&mut deta, 0.0, v, 1e-13);
        assert!(((torus.eta(v) - want) / want).abs() < 1e-9);
    }
}

/// The correction table of the chart against direct Simpson integration of
/// its defining integrand.
#[test]
fn chart_correction_matches_direct_integration() {
    let model = example3();
    let torus = build_torus(&model, 1.0, -2.132799706586304).unwrap();
    let chart = build_chart(&model, torus).unwrap();
    let scale = 2.0 * chart.torus.t1 / chart.torus.eta_full;
    for frac in [0.2, 0.45, 0.8] {
        let a = TAU * frac;
        let mut p = |alpha: f64| {
            chart.mean_f2 - model.f2_at(chart.torus.u_of_alpha1(alpha)).unwrap()
        };
        let want = scale * adaptive_simpson(&mut p, 0.0, a, 1e-12);
        let got = chart.correction(a);
        assert!((got - want).abs() < 1e-8, "corr({a}): {got} vs {want}");
    }
}
