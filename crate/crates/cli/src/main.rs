//! `ctw` — construct and verify semiclassical coastal-trapped-wave
//! eigenfunctions from a run-configuration file.
//!
//! Subcommands run pipeline prefixes: `quantize` stops after the
//! Bohr–Sommerfeld solve, `field` after evaluating the glued eigenfunction,
//! `verify` adds the discrete-operator residual, `run` writes every
//! artifact (field exports, JSON report, plots). `study` drives a
//! convergence-order study along a quantum-number ray and `resonances`
//! prints the small-divisor table.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical failure,
//! 4 acceptance-check failure (with `--check`).

mod config;
mod export;
mod pipeline;
mod plot;
mod png;
mod report;

use std::path::{Path, PathBuf};

use ctw_core::field::{FieldEvaluator, FieldOptions};
use ctw_core::transport::resonance_report;
use ctw_core::verify::{convergence_study, StudyOptions};

use config::{load_config, RunConfig};
use pipeline::{run_pipeline, PipelineError, Stage};

const USAGE: &str = "\
usage: ctw <subcommand> --config PATH [options]

subcommands:
  run         full pipeline: quantize, transport, field, verify, export
  quantize    stop after the Bohr-Sommerfeld solve; print mode diagnostics
  field       stop after field evaluation; write field exports
  verify      field plus the discrete-operator residual report
  study       convergence study along a nu-ray (--ray \"a,b\" --ray-count K)
  resonances  small-divisor table (from the config torus, or --omega \"w1,w2\")

options:
  --config PATH        run configuration file (required except with --omega)
  --out DIR            override the output directory
  --grid NxM           override the field grid
  --no-plots           skip PNG emission
  --window-band W      residual window band in alpha1 (default 0.15)
  --fourier-order N    transport truncation order (default 16)
  --divisor-floor X    small-divisor refusal threshold (default 1e-8)
  --ray \"a,b\"          study ray direction
  --ray-count K        number of modes along the ray (default 3)
  --zero-lambda        study/run control: force lambda = 0
  --omega \"w1,w2\"      resonances for an explicit frequency vector
  --check              enforce acceptance thresholds (exit 4 on failure)
";

struct Cli {
    command: String,
    config: Option<PathBuf>,
    out: Option<PathBuf>,
    grid: Option<(usize, usize)>,
    no_plots: bool,
    window_band: Option<f64>,
    fourier_order: Option<usize>,
    divisor_floor: Option<f64>,
    ray: Option<(i64, i64)>,
    ray_count: u32,
    zero_lambda: bool,
    omega: Option<(f64, f64)>,
    check: bool,
}

fn parse_args() -> Result<Cli, String> {
    let mut args = std::env::args().skip(1);
    let command = args.next().ok_or_else(|| USAGE.to_string())?;
    let mut cli = Cli {
        command,
        config: None,
        out: None,
        grid: None,
        no_plots: false,
        window_band: None,
        fourier_order: None,
        divisor_floor: None,
        ray: None,
        ray_count: 3,
        zero_lambda: false,
        omega: None,
        check: false,
    };
    let next_value = |args: &mut dyn Iterator<Item = String>, flag: &str| {
        args.next().ok_or_else(|| format!("{} needs a value", flag))
    };
    while let Some(arg) = args.next() {
        match arg.as_str() {
            "--config" => cli.config = Some(PathBuf::from(next_value(&mut args, "--config")?)),
            "--out" => cli.out = Some(PathBuf::from(next_value(&mut args, "--out")?)),
            "--grid" => {
                let v = next_value(&mut args, "--grid")?;
                let (a, b) = v.split_once('x').ok_or("expected --grid NxM")?;
                cli.grid = Some((
                    a.parse().map_err(|_| "bad --grid")?,
                    b.parse().map_err(|_| "bad --grid")?,
                ));
            }
            "--no-plots" => cli.no_plots = true,
            "--window-band" => {
                cli.window_band = Some(
                    next_value(&mut args, "--window-band")?
                        .parse()
                        .map_err(|_| "bad --window-band")?,
                )
            }
            "--fourier-order" => {
                cli.fourier_order = Some(
                    next_value(&mut args, "--fourier-order")?
                        .parse()
                        .map_err(|_| "bad --fourier-order")?,
                )
            }
            "--divisor-floor" => {
                cli.divisor_floor = Some(
                    next_value(&mut args, "--divisor-floor")?
                        .parse()
                        .map_err(|_| "bad --divisor-floor")?,
                )
            }
            "--ray" => {
                let v = next_value(&mut args, "--ray")?;
                let (a, b) = v.split_once(',').ok_or("expected --ray \"a,b\"")?;
                cli.ray = Some((
                    a.trim().parse().map_err(|_| "bad --ray")?,
                    b.trim().parse().map_err(|_| "bad --ray")?,
                ));
            }
            "--ray-count" => {
                cli.ray_count =
                    next_value(&mut args, "--ray-count")?.parse().map_err(|_| "bad --ray-count")?
            }
            "--zero-lambda" => cli.zero_lambda = true,
            "--omega" => {
                let v = next_value(&mut args, "--omega")?;
                let (a, b) = v.split_once(',').ok_or("expected --omega \"w1,w2\"")?;
                cli.omega = Some((
                    a.trim().parse().map_err(|_| "bad --omega")?,
                    b.trim().parse().map_err(|_| "bad --omega")?,
                ));
            }
            "--check" => cli.check = true,
            "--help" | "-h" => return Err(USAGE.to_string()),
            other => return Err(format!("unknown argument '{}'\n{}", other, USAGE)),
        }
    }
    Ok(cli)
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match parse_args() {
        Ok(cli) => cli,
        Err(msg) => {
            eprintln!("{}", msg);
            return 2;
        }
    };

    // resonances with an explicit frequency vector needs no config
    if cli.command == "resonances" {
        if let Some(omega) = cli.omega {
            print_resonances(omega, cli.fourier_order.unwrap_or(16));
            return 0;
        }
    }

    let Some(config_path) = cli.config.clone() else {
        eprintln!("--config is required\n{}", USAGE);
        return 2;
    };
    let mut config = match load_config(&config_path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("configuration error: {}", e);
            return 2;
        }
    };
    apply_overrides(&mut config, &cli);

    let result = match cli.command.as_str() {
        "run" => cmd_run(&config, &config_path, &cli, true),
        "quantize" => cmd_quantize(&config),
        "field" => cmd_run(&config, &config_path, &cli, false),
        "verify" => cmd_verify(&config, &cli),
        "study" => cmd_study(&config, &cli),
        "resonances" => cmd_resonances_from_config(&config, &cli),
        other => {
            eprintln!("unknown subcommand '{}'\n{}", other, USAGE);
            return 2;
        }
    };
    match result {
        Ok(code) => code,
        Err(PipelineError::Config(msg)) => {
            eprintln!("configuration error: {}", msg);
            2
        }
        Err(PipelineError::Numerical(msg)) => {
            eprintln!("numerical failure: {}", msg);
            3
        }
    }
}

fn apply_overrides(config: &mut RunConfig, cli: &Cli) {
    if let Some(out) = &cli.out {
        config.output.directory = out.clone();
    }
    if let Some((gu, gv)) = cli.grid {
        config.grid_u = gu;
        config.grid_v = gv;
    }
    if cli.no_plots {
        config.output.plots = false;
    }
    if let Some(band) = cli.window_band {
        config.window_band = band;
    }
    if let Some(n) = cli.fourier_order {
        config.truncation = n;
    }
    if let Some(floor) = cli.divisor_floor {
        config.divisor_floor = floor;
    }
    if cli.zero_lambda {
        config.zero_lambda = true;
    }
}

fn print_mode_summary(artifacts: &pipeline::RunArtifacts) {
    println!("case {}   mu = {}", artifacts.model.case, artifacts.model.mu);
    println!("kappa      = {:.15}", artifacts.kappa);
    println!("h          = {:.15}   (1/h = {:.13})", artifacts.mode.h, 1.0 / artifacts.mode.h);
    println!(
        "actions    = ({:.12}, {:.12})",
        artifacts.torus_actions.0, artifacts.torus_actions.1
    );
    println!("omega      = ({:.6}, {:.6})", artifacts.omega.0, artifacts.omega.1);
    let qh = artifacts.mode.q_over_h();
    println!("q/h        = ({:.6}, {:.6})", qh.0, qh.1);
    println!("lambda     = {:.10}", artifacts.lambda);
    println!(
        "caustics   = {:.12} ({:?}) .. {:.12} ({:?})",
        artifacts.chart.torus.caustics.0.location,
        artifacts.chart.torus.caustics.0.kind,
        artifacts.chart.torus.caustics.1.location,
        artifacts.chart.torus.caustics.1.kind,
    );
    if artifacts.defect.exceeds_bound {
        eprintln!(
            "warning: |q|/h = ({:.3}, {:.3}) exceeds the configured O(h) bound",
            artifacts.defect.q_over_h.0.abs(),
            artifacts.defect.q_over_h.1.abs()
        );
    }
}

fn cmd_quantize(config: &RunConfig) -> Result<i32, PipelineError> {
    let artifacts = run_pipeline(config, Stage::Quantize)?;
    print_mode_summary(&artifacts);
    Ok(0)
}

/// Structural invariants enforced by `--check`.
fn structural_checks(
    config: &RunConfig,
    artifacts: &pipeline::RunArtifacts,
) -> Vec<(String, bool, String)> {
    let mut checks = Vec::new();
    // |A| = 1 on a sample grid
    let mut worst = 0.0f64;
    for i in 0..16 {
        for j in 0..16 {
            let a1 = 2.0 * std::f64::consts::PI * i as f64 / 16.0;
            let a2 = 2.0 * std::f64::consts::PI * j as f64 / 16.0;
            worst = worst.max((artifacts.transport.amplitude(a1, a2).norm() - 1.0).abs());
        }
    }
    checks.push((
        "unit amplitude |A| = 1".to_string(),
        worst <= 1e-12,
        format!("max deviation {:.3e}", worst),
    ));
    let bound = (10.0 * artifacts.transport.residual_bound).max(1e-7);
    checks.push((
        "transport residual".to_string(),
        artifacts.transport_residual <= bound,
        format!("sup {:.3e} vs bound {:.3e}", artifacts.transport_residual, bound),
    ));
    if !config.zero_lambda {
        checks.push((
            "transport solvability (G_0)".to_string(),
            artifacts.transport.mean_defect <= 1e-10,
            format!("|G_0| = {:.3e}", artifacts.transport.mean_defect),
        ));
    }
    // v-periodicity and overlap consistency of the glued field
    let opts = FieldOptions {
        grid_u: config.grid_u,
        grid_v: config.grid_v,
        partition_width: config.partition_width,
        caustic_patch_action: config.patch_action,
        ..FieldOptions::default()
    };
    match FieldEvaluator::new(&artifacts.chart, &artifacts.transport, artifacts.mode, opts) {
        Ok(ev) => {
            let torus = &artifacts.chart.torus;
            let mut worst = 0.0f64;
            let mut scale = 0.0f64;
            for i in 0..24 {
                let u = torus.u_min() + torus.span() * (0.05 + 0.9 * i as f64 / 23.0);
                match (ev.psi(u, 0.0), ev.psi(u, 2.0 * std::f64::consts::PI)) {
                    (Ok(a), Ok(b)) => {
                        worst = worst.max((a - b).norm());
                        scale = scale.max(a.norm());
                    }
                    _ => {
                        checks.push((
                            "v-periodicity".to_string(),
                            false,
                            "evaluation failed".to_string(),
                        ));
                        return checks;
                    }
                }
            }
            checks.push((
                "v-periodicity".to_string(),
                worst <= 1e-9 * scale.max(1e-300),
                format!("defect {:.3e} vs scale {:.3e}", worst, scale),
            ));
            match ev.overlap_constant(24, 16) {
                Ok(c) => checks.push((
                    "overlap consistency".to_string(),
                    c <= 5.0,
                    format!("fitted C = {:.3}", c),
                )),
                Err(e) => {
                    checks.push(("overlap consistency".to_string(), false, format!("{}", e)))
                }
            }
        }
        Err(e) => checks.push(("field evaluator".to_string(), false, format!("{}", e))),
    }
    checks
}

fn run_structural_checks(config: &RunConfig, artifacts: &pipeline::RunArtifacts) -> i32 {
    let mut failed = false;
    for (name, pass, detail) in structural_checks(config, artifacts) {
        println!("check {:28} {}  ({})", name, if pass { "PASS" } else { "FAIL" }, detail);
        failed |= !pass;
    }
    if failed {
        4
    } else {
        0
    }
}

fn cmd_verify(config: &RunConfig, cli: &Cli) -> Result<i32, PipelineError> {
    let artifacts = run_pipeline(config, Stage::Verify)?;
    print_mode_summary(&artifacts);
    let res = artifacts.residual.as_ref().unwrap();
    println!(
        "residual   = {:.6e} over window u in [{:.4}, {:.4}] ({} rows), relative {:.6e}",
        res.l2_residual, res.window_u.0, res.window_u.1, res.window_rows, res.relative_residual
    );
    if let Some(limited) = res.grid_limited {
        println!("grid check = {}", if limited { "GRID-LIMITED" } else { "grid-independent" });
    }
    if cli.check {
        return Ok(run_structural_checks(config, &artifacts));
    }
    Ok(0)
}

fn cmd_run(
    config: &RunConfig,
    config_path: &Path,
    cli: &Cli,
    verify_stage: bool,
) -> Result<i32, PipelineError> {
    let stage = if verify_stage { Stage::Verify } else { Stage::Field };
    let artifacts = run_pipeline(config, stage)?;
    print_mode_summary(&artifacts);

    let dir = &config.output.directory;
    std::fs::create_dir_all(dir)
        .map_err(|e| PipelineError::Config(format!("cannot create output directory: {}", e)))?;
    let mut written: Vec<PathBuf> = Vec::new();
    let result = write_artifacts(config, config_path, &artifacts, &mut written);
    if let Err(e) = result {
        // leave no partial artifacts behind
        for path in &written {
            let _ = std::fs::remove_file(path);
        }
        return Err(PipelineError::Config(format!("export failed: {}", e)));
    }
    for path in &written {
        println!("wrote {}", path.display());
    }
    if let Some(res) = &artifacts.residual {
        println!("relative residual = {:.6e}", res.relative_residual);
    }
    if cli.check {
        return Ok(run_structural_checks(config, &artifacts));
    }
    Ok(0)
}

fn write_artifacts(
    config: &RunConfig,
    config_path: &Path,
    artifacts: &pipeline::RunArtifacts,
    written: &mut Vec<PathBuf>,
) -> std::io::Result<()> {
    let dir = &config.output.directory;
    let config_name = config_path.file_name().and_then(|s| s.to_str()).unwrap_or("config");
    let report_path = dir.join("report.json");
    std::fs::write(&report_path, report::run_report(config_name, artifacts))?;
    written.push(report_path);
    let meta_path = dir.join("run_meta.json");
    std::fs::write(&meta_path, report::timing_report(&artifacts.timings))?;
    written.push(meta_path);
    if let Some(field) = &artifacts.field {
        if config.output.csv {
            let path = dir.join("field.csv");
            export::write_csv(field, &path)?;
            written.push(path);
        }
        if config.output.binary {
            let path = dir.join("field.bin");
            export::write_binary(field, &path)?;
            written.push(path);
        }
        if config.output.plots {
            let path = dir.join("field_re.png");
            plot::heatmap_cylinder(field, &path)?;
            written.push(path);
            if config.output.physical_coords {
                let path = dir.join("field_re_physical.png");
                plot::heatmap_physical(field, &path)?;
                written.push(path);
            }
        }
    }
    Ok(())
}

fn cmd_study(config: &RunConfig, cli: &Cli) -> Result<i32, PipelineError> {
    let ray = cli.ray.unwrap_or(config.nu);
    let model = ctw_core::model::load_model(config.model.clone())?;
    let opts = StudyOptions {
        energy: config.energy,
        truncation: config.truncation,
        divisor_floor: config.divisor_floor,
        band: config.window_band,
        grid_u: config.grid_u,
        grid_v: config.grid_v,
        zero_lambda: config.zero_lambda || cli.zero_lambda,
        grid_check: config.grid_check,
    };
    let report = convergence_study(&model, ray, cli.ray_count, opts)?;
    println!("convergence study along nu = m * ({}, {})", ray.0, ray.1);
    for p in &report.points {
        println!(
            "  m = {:2}  nu = ({:4},{:4})  h = {:.8}  relative residual = {:.6e}  lambda = {:+.6e}",
            p.multiple, p.nu.0, p.nu.1, p.h, p.relative_residual, p.lambda
        );
    }
    for (m, why) in &report.excluded {
        println!("  m = {:2}  excluded: {}", m, why);
    }
    println!("fitted slope of log(residual) vs log(h): {:.4}", report.slope);
    if cli.check {
        let pass = report.slope >= 1.7;
        println!(
            "check convergence order          {}  (slope {:.3} vs 1.7)",
            if pass { "PASS" } else { "FAIL" },
            report.slope
        );
        return Ok(if pass { 0 } else { 4 });
    }
    Ok(0)
}

fn print_resonances(omega: (f64, f64), order: usize) {
    let report = resonance_report(omega, order);
    println!("smallest divisors |<omega, k>| for |k|_inf <= {}:", order);
    for r in &report.smallest {
        println!("  k = ({:4}, {:4})   <omega, k> = {:+.6e}", r.k.0, r.k.1, r.divisor);
    }
    println!(
        "fitted Diophantine bound: |<omega, k>| >= {:.4e} / (|k1|+|k2|)^{:.3}",
        report.c1, report.c2
    );
    if report.smallest.first().map(|r| r.divisor.abs() < 1e-12).unwrap_or(false) {
        println!("warning: exact resonance detected");
    }
}

fn cmd_resonances_from_config(config: &RunConfig, cli: &Cli) -> Result<i32, PipelineError> {
    let artifacts = run_pipeline(config, Stage::Quantize)?;
    println!("omega = ({:.6}, {:.6})", artifacts.omega.0, artifacts.omega.1);
    print_resonances(artifacts.omega, cli.fourier_order.unwrap_or(config.truncation));
    Ok(0)
}
