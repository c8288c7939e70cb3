//! Pipeline orchestration: load -> quantize -> chart -> transport -> field
//! -> verify, with the field grid evaluated across threads.

use std::fmt;
use std::time::Instant;

use ctw_core::actions::{
    action_defect, build_torus, solve_quantization, DefectReport, QuantizedMode, TorusData,
};
use ctw_core::field::{FieldEvaluator, FieldGrid, FieldOptions, WaveField};
use ctw_core::model::{load_model, DepthModel};
use ctw_core::torus::{build_chart, AngleChart};
use ctw_core::transport::{
    compute_lambda, resonance_report, solve_transport, transport_residual_sup, ResonanceReport,
    TransportSolution,
};
use ctw_core::verify::{residual, ResidualReport};
use ctw_core::Complex64;

use crate::config::{HChoice, KappaChoice, ReferencePolicy, RunConfig};

/// Errors split by exit code: configuration (2) vs numerics (3).
#[derive(Debug)]
pub enum PipelineError {
    Config(String),
    Numerical(String),
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::Config(m) => write!(f, "configuration error: {}", m),
            PipelineError::Numerical(m) => write!(f, "numerical failure: {}", m),
        }
    }
}

impl std::error::Error for PipelineError {}

macro_rules! numerical_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for PipelineError {
            fn from(e: $ty) -> Self {
                PipelineError::Numerical(format!("{}", e))
            }
        }
    )*};
}

numerical_from!(
    ctw_core::actions::ActionsError,
    ctw_core::torus::TorusError,
    ctw_core::transport::TransportError,
    ctw_core::field::FieldError,
    ctw_core::verify::VerifyError
);

impl From<ctw_core::model::ModelError> for PipelineError {
    fn from(e: ctw_core::model::ModelError) -> Self {
        PipelineError::Config(format!("{}", e))
    }
}

/// How far to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Quantize,
    Field,
    Verify,
}

/// Wall-clock stage timings (reported separately from the deterministic
/// run report).
#[derive(Debug, Clone, Default)]
pub struct Timings {
    pub quantize_ms: u128,
    pub chart_ms: u128,
    pub transport_ms: u128,
    pub field_ms: u128,
    pub verify_ms: u128,
}

/// Everything a run produces, by stage.
pub struct RunArtifacts {
    pub model: DepthModel,
    pub torus_actions: (f64, f64),
    pub omega: (f64, f64),
    pub kappa: f64,
    pub mode: QuantizedMode,
    pub defect: DefectReport,
    pub chart: AngleChart,
    pub lambda: f64,
    pub transport: TransportSolution,
    pub transport_residual: f64,
    pub resonances: ResonanceReport,
    pub field: Option<WaveField>,
    pub residual: Option<ResidualReport>,
    pub timings: Timings,
}

/// Resolves the torus and the quantized mode per the configured
/// kappa/h/reference policies.
fn resolve_mode(
    config: &RunConfig,
    model: &DepthModel,
) -> Result<(TorusData, QuantizedMode), PipelineError> {
    let energy = config.energy;
    match (config.kappa, config.h) {
        (KappaChoice::FromNu, HChoice::FromQuantization) => {
            let sol = solve_quantization(model, config.nu, energy)?;
            let torus = build_torus(model, energy, sol.kappa)?;
            Ok((torus, sol.mode))
        }
        (KappaChoice::Given(kappa), HChoice::Given(h)) => {
            let torus = build_torus(model, energy, kappa)?;
            let mode = match config.reference {
                ReferencePolicy::Torus => {
                    QuantizedMode::new(config.nu, h, (torus.action_u, torus.action_v))
                }
                ReferencePolicy::SelfTorus => {
                    let i_nu = (h * (config.nu.0 as f64 + 0.5), h * config.nu.1 as f64);
                    QuantizedMode { nu: config.nu, h, i_nu, q: (0.0, 0.0) }
                }
            };
            Ok((torus, mode))
        }
        (KappaChoice::Given(kappa), HChoice::FromQuantization) => {
            // h from the v-cycle: I2 = h nu2 exactly, defect left on q1
            let torus = build_torus(model, energy, kappa)?;
            let h = torus.action_v / config.nu.1 as f64;
            let mode = QuantizedMode::new(config.nu, h, (torus.action_u, torus.action_v));
            Ok((torus, mode))
        }
        (KappaChoice::FromNu, HChoice::Given(_)) => Err(PipelineError::Config(String::from(
            "kappa = from-nu with a fixed h is not supported",
        ))),
    }
}

/// Runs the pipeline prefix ending at `stage`.
pub fn run_pipeline(config: &RunConfig, stage: Stage) -> Result<RunArtifacts, PipelineError> {
    let mut timings = Timings::default();
    let t0 = Instant::now();
    let model = load_model(config.model.clone())?;
    let (torus, mode) = resolve_mode(config, &model)?;
    let defect = action_defect(&torus, mode.nu, mode.h, config.defect_bound);
    timings.quantize_ms = t0.elapsed().as_millis();

    let t0 = Instant::now();
    let kappa = torus.kappa;
    let torus_actions = (torus.action_u, torus.action_v);
    let omega = torus.omega;
    let chart = build_chart(&model, torus)?;
    timings.chart_ms = t0.elapsed().as_millis();

    let t0 = Instant::now();
    let lambda = if config.zero_lambda {
        0.0
    } else {
        compute_lambda(&chart, mode.q, mode.h)?
    };
    let transport = solve_transport(
        &chart,
        mode.q,
        mode.h,
        lambda,
        config.truncation,
        config.divisor_floor,
    )?;
    let transport_residual = transport_residual_sup(&chart, &transport, mode.q, mode.h, 512)?;
    let resonances = resonance_report(omega, config.truncation);
    timings.transport_ms = t0.elapsed().as_millis();

    let mut artifacts = RunArtifacts {
        model,
        torus_actions,
        omega,
        kappa,
        mode,
        defect,
        chart,
        lambda,
        transport,
        transport_residual,
        resonances,
        field: None,
        residual: None,
        timings,
    };
    if stage < Stage::Field {
        return Ok(artifacts);
    }

    let t0 = Instant::now();
    let field = evaluate_field_parallel(
        &artifacts.chart,
        &artifacts.transport,
        artifacts.mode,
        FieldOptions {
            grid_u: config.grid_u,
            grid_v: config.grid_v,
            partition_width: config.partition_width,
            caustic_patch_action: config.patch_action,
            ..FieldOptions::default()
        },
    )?;
    artifacts.timings.field_ms = t0.elapsed().as_millis();
    artifacts.field = Some(field);
    if stage < Stage::Verify {
        return Ok(artifacts);
    }

    let t0 = Instant::now();
    let field = artifacts.field.as_ref().unwrap();
    let mut report = residual(&artifacts.model, field, &artifacts.chart, config.window_band)?;
    if config.grid_check {
        let fine = evaluate_field_parallel(
            &artifacts.chart,
            &artifacts.transport,
            artifacts.mode,
            FieldOptions {
                grid_u: 2 * config.grid_u,
                grid_v: 2 * config.grid_v,
                partition_width: config.partition_width,
                caustic_patch_action: config.patch_action,
                ..FieldOptions::default()
            },
        )?;
        let fine_report =
            residual(&artifacts.model, &fine, &artifacts.chart, config.window_band)?;
        let moved = (fine_report.l2_residual - report.l2_residual).abs()
            / report.l2_residual.max(1e-300);
        report.grid_limited = Some(moved > 0.20);
    }
    artifacts.timings.verify_ms = t0.elapsed().as_millis();
    artifacts.residual = Some(report);
    Ok(artifacts)
}

/// Evaluates the field grid with one worker per available core, splitting
/// by u-rows.
pub fn evaluate_field_parallel(
    chart: &AngleChart,
    transport: &TransportSolution,
    mode: QuantizedMode,
    opts: FieldOptions,
) -> Result<WaveField, PipelineError> {
    let evaluator = FieldEvaluator::new(chart, transport, mode, opts)?;
    let grid = FieldGrid::over_torus(&chart.torus, opts.grid_u, opts.grid_v);
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(grid.n_u);
    let mut values = vec![Complex64::default(); grid.n_u * grid.n_v];
    let rows_per = grid.n_u.div_ceil(workers);
    let mut failure: Option<ctw_core::field::FieldError> = None;
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (chunk_idx, chunk) in values.chunks_mut(rows_per * grid.n_v).enumerate() {
            let row_lo = chunk_idx * rows_per;
            let row_hi = (row_lo + chunk.len() / grid.n_v).min(grid.n_u);
            let ev = &evaluator;
            handles.push(scope.spawn(move || ev.eval_rows(&grid, row_lo, row_hi, chunk)));
        }
        for handle in handles {
            if let Err(e) = handle.join().expect("field worker panicked") {
                failure = Some(e);
            }
        }
    });
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(WaveField::from_parts(grid, values, chart, transport, mode))
}
