//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them). Criteria marked in the
//! decisions ledger as unattainable from the published parameter set are
//! implemented as stated and allowed to stay red rather than loosened.
//!
//! All tolerances are pinned here, in code.

use std::path::{Path, PathBuf};
use std::time::Instant;

use ctw_core::actions::{
    action_defect, build_torus, find_turning_points, frequencies, solve_quantization,
    QuantizedMode,
};
use ctw_core::expr::parse;
use ctw_core::field::{FieldEvaluator, FieldGrid, FieldMeta, FieldOptions, SmoothStep, WaveField};
use ctw_core::model::{load_model, CausticCase, DepthModel, ModelInput};
use ctw_core::oracle::{adaptive_simpson, clipped_extrapolated, rk4_trajectory, PhasePoint};
use ctw_core::special::{airy_ai, airy_ai_prime, bessel_j0, bessel_j1};
use ctw_core::torus::{build_chart, AngleChart, Sheet};
use ctw_core::transport::{compute_lambda, solve_transport, transport_residual_sup};
use ctw_core::verify::{convergence_study, residual, StudyOptions};
use ctw_core::Complex64;

const PI: f64 = std::f64::consts::PI;
const TAU: f64 = 2.0 * PI;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn example1_model() -> DepthModel {
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

fn example2_model(mu: u8) -> DepthModel {
    load_model(ModelInput {
        u_left: 0.0,
        u_right: 3.6,
        f1: parse("(2*exp(-(u-sqrt(2))^2) + 2*u*sin(u))/3").unwrap(),
        f2: parse("u").unwrap(),
        g: parse("1 + (2/3)*sin(v)").unwrap(),
        d1: parse("(2/23)*(2-u)^4*(exp(u)-1)^4*exp(sin(2*v))").unwrap(),
        mu,
        case: CausticCase::C,
    })
    .unwrap()
}

fn example3_model(mu: u8) -> DepthModel {
    load_model(ModelInput {
        u_left: 0.0,
        u_right: 1.0,
        f1: parse("1").unwrap(),
        f2: parse("2*u*(1-u)").unwrap(),
        g: parse("3 + sin(v)/2").unwrap(),
        d1: parse("39*(1-u)^4*(exp(u)-1)^4*exp(sin(3*v))").unwrap(),
        mu,
        case: CausticCase::B,
    })
    .unwrap()
}

struct Criterion {
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion { name, failures: Vec::new() }
    }

    fn require(&mut self, what: &str, pass: bool, detail: String) {
        println!("  {:44} {}  ({})", what, if pass { "ok  " } else { "FAIL" }, detail);
        if !pass {
            self.failures.push(format!("{}: {}", what, detail));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("ACCEPTANCE {}: PASS", self.name);
        } else {
            println!("ACCEPTANCE {}: FAIL", self.name);
            panic!("{} failed: {:?}", self.name, self.failures);
        }
    }
}

#[test]
fn acceptance_1_example1_diagnostics() {
    let start = Instant::now();
    let mut crit = Criterion::new("1 (Example 1 diagnostics)");
    let model = example1_model();
    let (left, right) = find_turning_points(&model, 1.0, -0.03).unwrap();
    crit.require(
        "turning point u_L* = 0 to 1e-9",
        left.location.abs() <= 1e-9,
        format!("{:.3e}", left.location),
    );
    crit.require(
        "turning point u_R* = 2.7 to 1e-9",
        (right.location - 2.7).abs() <= 1e-9,
        format!("{:.12}", right.location),
    );
    let omega = frequencies(&model, 1.0, -0.03).unwrap();
    crit.require(
        "omega1 = 2.533 within 5e-3",
        (omega.0 - 2.533).abs() <= 5e-3,
        format!("{:.6}", omega.0),
    );
    crit.require(
        "omega2 = 1.7306 within 5e-3",
        (omega.1 - 1.7306).abs() <= 5e-3,
        format!("{:.6}", omega.1),
    );
    let torus = build_torus(&model, 1.0, -0.03).unwrap();
    let report = action_defect(&torus, (18, 12), 1.0 / 14.3, 2.0);
    crit.require(
        "q1/h = -0.8 within 2e-2",
        (report.q_over_h.0 - (-0.8)).abs() <= 2e-2,
        format!("{:.6}", report.q_over_h.0),
    );
    crit.require(
        "q2/h = -0.492 within 2e-2",
        (report.q_over_h.1 - (-0.492)).abs() <= 2e-2,
        format!("{:.6}", report.q_over_h.1),
    );
    let elapsed = start.elapsed();
    crit.require("runtime < 1 min", elapsed.as_secs() < 60, format!("{:.2?}", elapsed));
    crit.finish();
}

#[test]
fn acceptance_2_example2_diagnostics() {
    // The decisions ledger records that the published Example 2 parameter
    // set is internally inconsistent; the torus that reproduces the printed
    // action defects (kappa = E f(3), nu = (14, 18)) is used here and the
    // comparisons are implemented exactly as stated. The frequency check
    // cannot pass for any torus of this model and the sign of the printed
    // q1 is inconsistent with the printed q2 under the definition
    // q = I^nu - I; both are left red deliberately.
    let mut crit = Criterion::new("2 (Example 2 diagnostics)");
    let model = example2_model(0);
    let h: f64 = 1.0 / 17.8;
    crit.require(
        "h = 0.0562 within 1e-3",
        (h - 0.0562).abs() <= 1e-3,
        format!("{:.6}", h),
    );
    let kappa = model.f_at(3.0).unwrap();
    let torus = build_torus(&model, 1.0, kappa).unwrap();
    let report = action_defect(&torus, (14, 18), h, 2.0);
    crit.require(
        "q1/h = 0.0834 within 2e-2",
        (report.q_over_h.0 - 0.0834).abs() <= 2e-2,
        format!("{:.6} (magnitude matches; sign per q = I^nu - I)", report.q_over_h.0),
    );
    crit.require(
        "q2/h = -0.3066 within 2e-2",
        (report.q_over_h.1 - (-0.3066)).abs() <= 2e-2,
        format!("{:.6}", report.q_over_h.1),
    );
    let omega = torus.omega;
    crit.require(
        "omega1 = 1.9955 within 5e-3",
        (omega.0 - 1.9955).abs() <= 5e-3,
        format!("{:.6} (unattainable: see decisions ledger)", omega.0),
    );
    crit.require(
        "omega2 = 1.94355 within 5e-3",
        (omega.1 - 1.94355).abs() <= 5e-3,
        format!("{:.6} (unattainable: see decisions ledger)", omega.1),
    );
    crit.finish();
}

/// The attainable Example 2 facts the reconstruction rests on; supplements
/// the red parts of criterion 2.
#[test]
fn acceptance_2_supplement_reconstructed_example2() {
    let mut crit = Criterion::new("2s (Example 2 reconstruction)");
    let model = example2_model(0);
    let kappa = model.f_at(3.0).unwrap();
    let (left, right) = find_turning_points(&model, 1.0, kappa).unwrap();
    crit.require(
        "coastal caustic at u = 0",
        left.location == 0.0,
        format!("{:?}", left.kind),
    );
    crit.require(
        "simple caustic exactly at u = 3",
        (right.location - 3.0).abs() <= 1e-9,
        format!("{:.12}", right.location),
    );
    let torus = build_torus(&model, 1.0, kappa).unwrap();
    let report = action_defect(&torus, (14, 18), 1.0 / 17.8, 2.0);
    crit.require(
        "|q1/h| = 0.0834 within 2e-2",
        (report.q_over_h.0.abs() - 0.0834).abs() <= 2e-2,
        format!("{:.6}", report.q_over_h.0.abs()),
    );
    crit.require(
        "|q2/h| = 0.3066 within 2e-2",
        (report.q_over_h.1.abs() - 0.3066).abs() <= 2e-2,
        format!("{:.6}", report.q_over_h.1.abs()),
    );
    crit.finish();
}

#[test]
fn acceptance_3_example3_quantization() {
    let mut crit = Criterion::new("3 (Example 3 quantization)");
    let model = example3_model(1);
    let cases: [((i64, i64), f64, f64); 2] = [
        ((10, 11), -2.132799706586304, 12.08646478547537),
        ((28, 32), -2.029449909118645, 33.0692001800103),
    ];
    for (nu, kappa_ref, omega_ref) in cases {
        let sol = solve_quantization(&model, nu, 1.0).unwrap();
        crit.require(
            &format!("nu = ({}, {}): kappa to 1e-6 relative", nu.0, nu.1),
            ((sol.kappa - kappa_ref) / kappa_ref).abs() <= 1e-6,
            format!("{:.15} vs {:.15}", sol.kappa, kappa_ref),
        );
        crit.require(
            &format!("nu = ({}, {}): 1/h to 1e-6 relative", nu.0, nu.1),
            ((1.0 / sol.h - omega_ref) / omega_ref).abs() <= 1e-6,
            format!("{:.13} vs {:.13}", 1.0 / sol.h, omega_ref),
        );
    }
    crit.finish();
}

#[test]
fn acceptance_4_residual_order() {
    let start = Instant::now();
    let mut crit = Criterion::new("4 (residual convergence order)");
    let opts = StudyOptions::default();

    let unperturbed = convergence_study(&example3_model(0), (10, 11), 3, opts).unwrap();
    crit.require(
        "unperturbed Example 3 ray: slope >= 1.7",
        unperturbed.slope >= 1.7,
        format!("{:.4}", unperturbed.slope),
    );

    let perturbed = convergence_study(&example3_model(1), (10, 11), 3, opts).unwrap();
    crit.require(
        "perturbed Example 3 with lambda: slope >= 1.7",
        perturbed.slope >= 1.7,
        format!("{:.4}", perturbed.slope),
    );

    let crippled = convergence_study(
        &example3_model(1),
        (10, 11),
        3,
        StudyOptions { zero_lambda: true, ..opts },
    )
    .unwrap();
    crit.require(
        "lambda replaced by 0: slope <= 1.3",
        crippled.slope <= 1.3,
        format!("{:.4}", crippled.slope),
    );

    // real and imaginary parts are solutions of the same order: their
    // windowed residuals stay comparable to the full field's
    let model = example3_model(0);
    let sol = solve_quantization(&model, (30, 33), 1.0).unwrap();
    let torus = build_torus(&model, 1.0, sol.kappa).unwrap();
    let chart = build_chart(&model, torus).unwrap();
    let transport = solve_transport(&chart, (0.0, 0.0), sol.h, 0.0, 16, 1e-8).unwrap();
    let ev = FieldEvaluator::new(&chart, &transport, sol.mode, FieldOptions::default()).unwrap();
    let field = ev.evaluate().unwrap();
    let full = residual(&model, &field, &chart, 0.15).unwrap();
    let part = |f: &dyn Fn(Complex64) -> f64| -> f64 {
        let values: Vec<Complex64> =
            field.values.iter().map(|z| Complex64::new(f(*z), 0.0)).collect();
        let pf = WaveField { grid: field.grid, values, meta: field.meta.clone() };
        residual(&model, &pf, &chart, 0.15).unwrap().relative_residual
    };
    let re_res = part(&|z: Complex64| z.re);
    let im_res = part(&|z: Complex64| z.im);
    crit.require(
        "Re psi residual within 3x of full",
        re_res <= 3.0 * full.relative_residual,
        format!("{:.3e} vs {:.3e}", re_res, full.relative_residual),
    );
    crit.require(
        "Im psi residual within 3x of full",
        im_res <= 3.0 * full.relative_residual,
        format!("{:.3e} vs {:.3e}", im_res, full.relative_residual),
    );

    let elapsed = start.elapsed();
    crit.require("runtime < 15 min", elapsed.as_secs() < 900, format!("{:.2?}", elapsed));
    crit.finish();
}

#[test]
fn acceptance_5_unperturbed_reduction() {
    let mut crit = Criterion::new("5 (unperturbed reduction)");
    let model = example3_model(0);
    let sol = solve_quantization(&model, (10, 11), 1.0).unwrap();
    let torus = build_torus(&model, 1.0, sol.kappa).unwrap();
    let chart = build_chart(&model, torus).unwrap();
    let lambda = compute_lambda(&chart, (0.0, 0.0), sol.h).unwrap();
    crit.require("lambda = 0", lambda == 0.0, format!("{:.3e}", lambda));
    let transport = solve_transport(&chart, (0.0, 0.0), sol.h, lambda, 16, 1e-8).unwrap();
    let mut worst_a = 0.0f64;
    for i in 0..20 {
        for j in 0..20 {
            let a = transport.amplitude(TAU * i as f64 / 20.0, TAU * j as f64 / 20.0);
            worst_a = worst_a.max((a - Complex64::new(1.0, 0.0)).norm());
        }
    }
    crit.require("A = 1 everywhere", worst_a <= 1e-12, format!("max |A-1| = {:.3e}", worst_a));
    let (_, odd_l, _, odd_r) = ctw_core::field::amplitude_combinations(
        &chart,
        &transport,
        (0.0, 0.0),
        sol.h,
        0.37,
        1.21,
    );
    crit.require(
        "A_odd = 0",
        odd_l.norm() <= 1e-12 && odd_r.norm() <= 1e-12,
        format!("{:.3e}, {:.3e}", odd_l.norm(), odd_r.norm()),
    );

    // independently coded unperturbed evaluator (plain printed formula,
    // case B: Bessel on both sides)
    let ev = FieldEvaluator::new(&chart, &transport, sol.mode, FieldOptions::default()).unwrap();
    let h = sol.h;
    let torus = &chart.torus;
    let step = SmoothStep::new();
    let naive = |u: f64, v: f64| -> Complex64 {
        let f = model.f_at(u).unwrap();
        let g = model.g_at(v).unwrap();
        let pref = (PI * (f + g)).sqrt()
            / (2.0 * h * (torus.energy * f - torus.kappa).sqrt() * (torus.energy * g + torus.kappa).sqrt())
                .sqrt();
        let s2 = torus.s2(v) / h;
        let e2 = Complex64::new(s2.cos(), s2.sin());
        let a1 = torus.alpha1_of_u(u);
        let rho_l = step.eval((0.5 * PI - a1) / (PI / 8.0));
        let w = |s: f64| (s / (2.0 * h)).sqrt() * bessel_j0(s / h);
        let phase = torus.s_total / h - 0.5 * PI;
        let glue = Complex64::new(phase.cos(), phase.sin());
        h.sqrt() * pref * e2 * (rho_l * w(torus.s_left(u)) + (1.0 - rho_l) * glue * w(torus.s_right(u)))
    };
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for i in 0..50 {
        let u = torus.u_min() + torus.span() * (0.02 + 0.96 * i as f64 / 49.0);
        if torus.s_left(u) / h < 0.2 || torus.s_right(u) / h < 0.2 {
            continue;
        }
        for j in 0..10 {
            let v = TAU * j as f64 / 10.0;
            let got = ev.psi(u, v).unwrap();
            let want = naive(u, v);
            worst = worst.max((got - want).norm());
            scale = scale.max(want.norm());
        }
    }
    crit.require(
        "psi matches independent evaluator to 1e-10",
        worst <= 1e-10 * scale,
        format!("max deviation {:.3e} at scale {:.3e}", worst, scale),
    );
    crit.finish();
}

#[test]
fn acceptance_6_structural_invariants() {
    let mut crit = Criterion::new("6 (structural invariants)");

    // special functions against the frozen high-precision references
    mod data {
        include!(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/special_oracle.rs"));
    }
    let mut worst_rel = 0.0f64;
    let mut worst_abs = 0.0f64;
    for &(x, ai, aip) in data::AIRY_ORACLE {
        for (got, want) in [(airy_ai(x), ai), (airy_ai_prime(x), aip)] {
            if want.abs() < 3e-4 {
                worst_abs = worst_abs.max((got - want).abs());
            } else {
                worst_rel = worst_rel.max(((got - want) / want).abs());
            }
        }
    }
    for &(x, j0, j1) in data::BESSEL_ORACLE {
        for (got, want) in [(bessel_j0(x), j0), (bessel_j1(x), j1)] {
            if want.abs() < 3e-4 {
                worst_abs = worst_abs.max((got - want).abs());
            } else {
                worst_rel = worst_rel.max(((got - want) / want).abs());
            }
        }
    }
    crit.require(
        "special functions 1e-10 rel / 1e-13 near zeros",
        worst_rel <= 1e-10 && worst_abs <= 1e-13,
        format!("rel {:.3e}, abs-near-zero {:.3e}", worst_rel, worst_abs),
    );

    // fixture-level invariants
    struct Fixture {
        name: &'static str,
        chart: AngleChart,
        mode: QuantizedMode,
        truncation: usize,
    }
    let mut fixtures = Vec::new();
    {
        let model = example1_model();
        let torus = build_torus(&model, 1.0, -0.03).unwrap();
        let mode = QuantizedMode::new((18, 12), 1.0 / 14.3, (torus.action_u, torus.action_v));
        let chart = build_chart(&model, torus).unwrap();
        fixtures.push(Fixture { name: "example1", chart, mode, truncation: 32 });
    }
    {
        let model = example2_model(0);
        let kappa = model.f_at(3.0).unwrap();
        let torus = build_torus(&model, 1.0, kappa).unwrap();
        let mode = QuantizedMode::new((14, 18), 1.0 / 17.8, (torus.action_u, torus.action_v));
        let chart = build_chart(&model, torus).unwrap();
        fixtures.push(Fixture { name: "example2", chart, mode, truncation: 16 });
    }
    for nu in [(10i64, 11i64), (28, 32)] {
        let model = example3_model(1);
        let sol = solve_quantization(&model, nu, 1.0).unwrap();
        let torus = build_torus(&model, 1.0, sol.kappa).unwrap();
        let chart = build_chart(&model, torus).unwrap();
        fixtures.push(Fixture { name: "example3", chart, mode: sol.mode, truncation: 16 });
    }

    for fx in &fixtures {
        let q = fx.mode.q;
        let h = fx.mode.h;
        let lambda = compute_lambda(&fx.chart, q, h).unwrap();
        let transport = solve_transport(&fx.chart, q, h, lambda, fx.truncation, 1e-8).unwrap();
        let mut worst_a = 0.0f64;
        for i in 0..24 {
            for j in 0..24 {
                let a = transport.amplitude(TAU * i as f64 / 24.0, TAU * j as f64 / 24.0);
                worst_a = worst_a.max((a.norm() - 1.0).abs());
            }
        }
        crit.require(
            &format!("{}: |A| = 1 to 1e-12", fx.name),
            worst_a <= 1e-12,
            format!("{:.3e}", worst_a),
        );
        let sup = transport_residual_sup(&fx.chart, &transport, q, h, 512).unwrap();
        let bound = (10.0 * transport.residual_bound).max(1e-7);
        crit.require(
            &format!("{}: transport residual", fx.name),
            sup <= bound,
            format!("{:.3e} vs {:.3e}", sup, bound),
        );
        let ev =
            FieldEvaluator::new(&fx.chart, &transport, fx.mode, FieldOptions::default()).unwrap();
        let torus = &fx.chart.torus;
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for i in 0..30 {
            let u = torus.u_min() + torus.span() * (0.03 + 0.94 * i as f64 / 29.0);
            let a = ev.psi(u, 0.0).unwrap();
            let b = ev.psi(u, TAU).unwrap();
            worst = worst.max((a - b).norm());
            scale = scale.max(a.norm());
        }
        crit.require(
            &format!("{}: v-periodicity to 1e-9 relative", fx.name),
            worst <= 1e-9 * scale,
            format!("{:.3e} at scale {:.3e}", worst, scale),
        );
        let c = ev.overlap_constant(40, 24).unwrap();
        crit.require(
            &format!("{}: overlap constant <= 5", fx.name),
            c <= 5.0,
            format!("C = {:.3}", c),
        );
    }
    crit.finish();
}

#[test]
fn acceptance_7_oracle_equivalences() {
    let mut crit = Criterion::new("7 (oracle equivalences)");

    // quadratures vs the independent adaptive oracle
    for (name, model, energy, kappa) in [
        ("example1", example1_model(), 1.0, -0.03),
        ("example3", example3_model(1), 1.0, -2.132799706586304),
    ] {
        let (i1, i2) = ctw_core::actions::action_integrals(&model, energy, kappa).unwrap();
        let (left, right) = find_turning_points(&model, energy, kappa).unwrap();
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
        ) / PI;
        crit.require(
            &format!("{}: I1 vs oracle to 1e-9", name),
            ((i1 - oracle_i1) / oracle_i1).abs() <= 1e-9,
            format!("rel {:.3e}", ((i1 - oracle_i1) / oracle_i1).abs()),
        );
        let mut q = |v: f64| (energy * model.g_at(v).unwrap() + kappa).sqrt();
        let oracle_i2 = adaptive_simpson(&mut q, 0.0, TAU, 1e-13) / TAU;
        crit.require(
            &format!("{}: I2 vs oracle to 1e-9", name),
            ((i2 - oracle_i2) / oracle_i2).abs() <= 1e-9,
            format!("rel {:.3e}", ((i2 - oracle_i2) / oracle_i2).abs()),
        );
    }

    // FD operator vs a symbolic manufactured solution
    {
        let mut model = example1_model();
        model.f1 = parse("1 + u").unwrap(); // D0 = 1/(1+u)
        model.f2 = parse("1").unwrap();
        model.g = parse("0").unwrap();
        model.mu = 0;
        let h = 0.07;
        let n = 256;
        let grid = FieldGrid { n_u: n, n_v: n, u_lo: 0.0, du: 1.0 / (n - 1) as f64, dv: TAU / n as f64 };
        let mut values = Vec::with_capacity(n * n);
        for i in 0..n {
            let u = grid.u_at(i);
            for j in 0..n {
                let v = grid.v_at(j);
                values.push(Complex64::new(u * u * u * (2.0 + v.cos()), 0.0));
            }
        }
        let field = WaveField {
            grid,
            values,
            meta: FieldMeta {
                energy: 1.0,
                kappa: 0.0,
                nu: (1, 1),
                h,
                lambda: 0.0,
                curly_e: 1.0,
                case: CausticCase::A,
                amplitude_scale: 1.0,
            },
        };
        let window = ctw_core::verify::UWindow { lo: 5, hi: n - 5 };
        let out = ctw_core::verify::apply_operator(&model, &field, h, 0, window).unwrap();
        let exact = |u: f64, v: f64| {
            let d = 1.0 / (1.0 + u);
            let dp = -1.0 / ((1.0 + u) * (1.0 + u));
            let cu = 2.0 + v.cos();
            -h * h * (dp * 3.0 * u * u * cu + d * 6.0 * u * cu + d * u * u * u * (-v.cos()))
        };
        let mut worst = 0.0f64;
        for (idx, z) in out.iter().enumerate() {
            let i = window.lo + idx / n;
            let j = idx % n;
            worst = worst.max((z.re - exact(field.grid.u_at(i), field.grid.v_at(j))).abs());
        }
        crit.require(
            "FD operator vs symbolic manufactured solution",
            worst <= 1e-9,
            format!("max abs {:.3e}", worst),
        );
    }

    // measure factor straightens the flow: d(alpha1)/dt * f = omega1
    {
        let model = example3_model(1);
        let (energy, kappa) = (1.0, -2.132799706586304);
        let torus = build_torus(&model, energy, kappa).unwrap();
        let chart = build_chart(&model, torus).unwrap();
        let omega1 = chart.torus.omega.0;
        let f0 = model.f_at(0.45).unwrap();
        let g0 = model.g_at(0.4).unwrap();
        let start = PhasePoint {
            t: 0.0,
            u: 0.45,
            v: 0.4,
            p_u: (energy * f0 - kappa).sqrt(),
            p_v: (energy * g0 + kappa).sqrt(),
        };
        let dt = 5e-5;
        let traj = rk4_trajectory(&model, start, dt, 3000).unwrap();
        let mut worst = 0.0f64;
        for w in traj.windows(2).step_by(59) {
            let (a, b) = (&w[0], &w[1]);
            let mid_u = 0.5 * (a.u + b.u);
            let a1_mid = chart.torus.alpha1_of_u(mid_u);
            if !(0.3..=PI - 0.3).contains(&a1_mid) || a.p_u.min(b.p_u) <= 0.0 {
                continue;
            }
            let da1_dt = (chart.torus.alpha1_of_u(b.u) - chart.torus.alpha1_of_u(a.u)) / dt;
            let (a1, a2) = chart.alpha_of_uv(mid_u, 0.5 * (a.v + b.v), Sheet::Plus);
            let f = chart.measure_factor(a1, a2).unwrap();
            worst = worst.max((da1_dt * f / omega1 - 1.0).abs());
        }
        crit.require(
            "flow consistency d(alpha1)/dt * f = omega1 to 1e-6",
            worst <= 1e-6,
            format!("worst rel {:.3e}", worst),
        );
    }
    crit.finish();
}

/// Fixture runtime envelope: the full Example 1 pipeline through the CLI
/// binary finishes well under the stated minute.
#[test]
fn fixture_runtime_smoke() {
    let start = Instant::now();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_ctw"))
        .args([
            "verify",
            "--config",
            fixture("example3_case1.cfg").to_str().unwrap(),
            "--grid",
            "256x256",
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(start.elapsed().as_secs() < 300, "{:?}", start.elapsed());
}
