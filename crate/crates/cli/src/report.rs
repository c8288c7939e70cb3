//! The deterministic JSON run report. Two runs of the same configuration
//! produce byte-identical output; wall-clock timings go to a separate
//! file so the report itself stays reproducible.

use std::fmt::Write as _;

use crate::pipeline::{RunArtifacts, Timings};

/// Minimal JSON writer: floats through Rust's shortest-roundtrip Display,
/// which is deterministic.
pub struct Json {
    out: String,
    stack: Vec<bool>, // "needs comma" per open scope
}

impl Json {
    pub fn new() -> Self {
        Json { out: String::new(), stack: Vec::new() }
    }

    fn pad(&mut self) {
        if let Some(needs_comma) = self.stack.last_mut() {
            if *needs_comma {
                self.out.push(',');
            }
            *needs_comma = true;
            self.out.push('\n');
            for _ in 0..self.stack.len() {
                self.out.push_str("  ");
            }
        }
    }

    pub fn open_object(&mut self) {
        self.out.push('{');
        self.stack.push(false);
    }

    pub fn close_object(&mut self) {
        let depth = self.stack.pop().map(|_| self.stack.len()).unwrap_or(0);
        self.out.push('\n');
        for _ in 0..depth {
            self.out.push_str("  ");
        }
        self.out.push('}');
    }

    pub fn key(&mut self, name: &str) {
        self.pad();
        let _ = write!(self.out, "\"{}\": ", name);
    }

    pub fn object(&mut self, name: &str) {
        self.key(name);
        self.open_object();
    }

    pub fn number(&mut self, name: &str, value: f64) {
        self.key(name);
        if value.is_finite() {
            let _ = write!(self.out, "{}", value);
        } else {
            self.out.push_str("null");
        }
    }

    pub fn integer(&mut self, name: &str, value: i64) {
        self.key(name);
        let _ = write!(self.out, "{}", value);
    }

    pub fn boolean(&mut self, name: &str, value: bool) {
        self.key(name);
        let _ = write!(self.out, "{}", value);
    }

    pub fn string(&mut self, name: &str, value: &str) {
        self.key(name);
        let _ = write!(self.out, "\"{}\"", value.replace('\\', "\\\\").replace('"', "\\\""));
    }

    pub fn null(&mut self, name: &str) {
        self.key(name);
        self.out.push_str("null");
    }

    pub fn pair(&mut self, name: &str, value: (f64, f64)) {
        self.key(name);
        let _ = write!(self.out, "[{}, {}]", value.0, value.1);
    }

    pub fn int_pair(&mut self, name: &str, value: (i64, i64)) {
        self.key(name);
        let _ = write!(self.out, "[{}, {}]", value.0, value.1);
    }

    pub fn raw_array(&mut self, name: &str, body: &str) {
        self.key(name);
        let _ = write!(self.out, "[{}]", body);
    }

    pub fn finish(mut self) -> String {
        self.out.push('\n');
        self.out
    }
}

impl Default for Json {
    fn default() -> Self {
        Self::new()
    }
}

/// The main run report.
pub fn run_report(config_name: &str, artifacts: &RunArtifacts) -> String {
    let mut json = Json::new();
    json.open_object();
    json.string("config", config_name);
    json.string("case", &format!("{}", artifacts.model.case));
    json.integer("mu", artifacts.model.mu as i64);
    json.number("energy", artifacts.chart.torus.energy);
    json.number("kappa", artifacts.kappa);
    json.int_pair("nu", artifacts.mode.nu);
    json.number("h", artifacts.mode.h);
    json.number("inverse_h", 1.0 / artifacts.mode.h);
    json.pair("actions", artifacts.torus_actions);
    json.pair("quantized_actions", artifacts.mode.i_nu);
    json.pair("omega", artifacts.omega);
    json.pair("q", artifacts.mode.q);
    json.pair("q_over_h", artifacts.mode.q_over_h());
    json.boolean("defect_exceeds_bound", artifacts.defect.exceeds_bound);
    json.number("lambda", artifacts.lambda);
    json.number("curly_e", artifacts.chart.torus.energy + artifacts.mode.h * artifacts.lambda);
    json.number("t1", artifacts.chart.torus.t1);
    json.number("eta_full", artifacts.chart.torus.eta_full);
    json.number("mean_f2", artifacts.chart.mean_f2);
    json.pair(
        "caustics",
        (artifacts.chart.torus.caustics.0.location, artifacts.chart.torus.caustics.1.location),
    );
    json.string(
        "caustic_kinds",
        &format!(
            "{:?}/{:?}",
            artifacts.chart.torus.caustics.0.kind, artifacts.chart.torus.caustics.1.kind
        ),
    );

    json.object("transport");
    json.integer("truncation", artifacts.transport.truncation as i64);
    json.number("min_divisor", artifacts.transport.min_divisor);
    json.number("residual_bound", artifacts.transport.residual_bound);
    json.number("mean_defect", artifacts.transport.mean_defect);
    json.number("residual_sup", artifacts.transport_residual);
    json.close_object();

    json.object("resonances");
    let mut body = String::new();
    for (i, r) in artifacts.resonances.smallest.iter().enumerate() {
        if i > 0 {
            body.push_str(", ");
        }
        let _ = write!(body, "{{\"k\": [{}, {}], \"divisor\": {}}}", r.k.0, r.k.1, r.divisor);
    }
    json.raw_array("smallest", &body);
    json.number("c1", artifacts.resonances.c1);
    json.number("c2", artifacts.resonances.c2);
    json.integer("scanned_up_to", artifacts.resonances.scanned_up_to as i64);
    json.close_object();

    if let Some(field) = &artifacts.field {
        json.object("field");
        json.integer("grid_u", field.grid.n_u as i64);
        json.integer("grid_v", field.grid.n_v as i64);
        json.number("u_min", field.grid.u_at(0));
        json.number("u_max", field.grid.u_at(field.grid.n_u - 1));
        json.number("max_abs", field.max_abs());
        json.number("l2_norm", field.l2_norm());
        json.number("amplitude_scale", field.meta.amplitude_scale);
        json.close_object();
    }
    if let Some(res) = &artifacts.residual {
        json.object("residual");
        json.number("l2_residual", res.l2_residual);
        json.number("l2_norm", res.l2_norm);
        json.number("relative_residual", res.relative_residual);
        json.pair("window_u", res.window_u);
        json.integer("window_rows", res.window_rows as i64);
        json.integer("fd_order", res.fd_order as i64);
        match res.grid_limited {
            Some(flag) => json.boolean("grid_limited", flag),
            None => json.null("grid_limited"),
        }
        json.close_object();
    }
    json.close_object();
    json.finish()
}

/// Wall-clock timings, kept out of the deterministic report.
pub fn timing_report(timings: &Timings) -> String {
    let mut json = Json::new();
    json.open_object();
    json.integer("quantize_ms", timings.quantize_ms as i64);
    json.integer("chart_ms", timings.chart_ms as i64);
    json.integer("transport_ms", timings.transport_ms as i64);
    json.integer("field_ms", timings.field_ms as i64);
    json.integer("verify_ms", timings.verify_ms as i64);
    json.close_object();
    json.finish()
}
