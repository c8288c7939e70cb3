//! Run-configuration files: line-oriented `key = value` pairs under
//! `[section]` headers. Expression values are double-quoted; scalar values
//! are constant expressions (`-0.03`, `1/17.8`, `pi/8` are all fine), so
//! fixtures can state parameters exactly as the problem defines them.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use ctw_core::expr::{parse, Bindings, Expr};
use ctw_core::model::{CausticCase, ModelInput};

#[derive(Debug)]
pub struct ConfigError {
    pub path: Option<PathBuf>,
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.path, self.line) {
            (Some(p), Some(l)) => write!(f, "{}:{}: {}", p.display(), l, self.message),
            (Some(p), None) => write!(f, "{}: {}", p.display(), self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

fn err(message: impl Into<String>) -> ConfigError {
    ConfigError { path: None, line: None, message: message.into() }
}

/// How the torus parameter kappa is determined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KappaChoice {
    Given(f64),
    FromNu,
}

/// How the semiclassical parameter h is determined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HChoice {
    Given(f64),
    FromQuantization,
}

/// Reference torus for the action defect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferencePolicy {
    /// q measured against the configured torus
    Torus,
    /// q = 0: the mode's own exactly-quantized torus
    SelfTorus,
}

#[derive(Debug, Clone)]
pub struct OutputConfig {
    pub directory: PathBuf,
    pub csv: bool,
    pub binary: bool,
    pub plots: bool,
    pub physical_coords: bool,
}

/// A fully parsed run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub model: ModelInput,
    pub energy: f64,
    pub kappa: KappaChoice,
    pub nu: (i64, i64),
    pub h: HChoice,
    pub reference: ReferencePolicy,
    pub truncation: usize,
    pub divisor_floor: f64,
    pub zero_lambda: bool,
    pub defect_bound: f64,
    pub grid_u: usize,
    pub grid_v: usize,
    pub partition_width: f64,
    pub patch_action: f64,
    pub window_band: f64,
    pub grid_check: bool,
    pub output: OutputConfig,
}

struct Sections {
    map: BTreeMap<String, BTreeMap<String, (String, usize)>>,
}

impl Sections {
    fn get(&self, section: &str, key: &str) -> Option<&(String, usize)> {
        self.map.get(section).and_then(|s| s.get(key))
    }

    fn required(&self, section: &str, key: &str) -> Result<&(String, usize), ConfigError> {
        self.get(section, key).ok_or_else(|| {
            err(format!("missing required key '{}' in section [{}]", key, section))
        })
    }
}

fn parse_sections(text: &str) -> Result<Sections, ConfigError> {
    let mut map: BTreeMap<String, BTreeMap<String, (String, usize)>> = BTreeMap::new();
    let mut current = String::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            // a # inside quotes stays part of the value
            Some(pos) if !raw[..pos].contains('"') || raw[..pos].matches('"').count() % 2 == 0 => {
                &raw[..pos]
            }
            _ => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            current = name.trim().to_lowercase();
            map.entry(current.clone()).or_default();
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError {
                path: None,
                line: Some(lineno + 1),
                message: format!("expected 'key = value', got '{}'", line),
            });
        };
        if current.is_empty() {
            return Err(ConfigError {
                path: None,
                line: Some(lineno + 1),
                message: String::from("key outside of any [section]"),
            });
        }
        map.get_mut(&current).unwrap().insert(
            key.trim().to_lowercase(),
            (value.trim().to_string(), lineno + 1),
        );
    }
    Ok(Sections { map })
}

/// A quoted expression value.
fn expr_value(raw: &(String, usize), what: &str) -> Result<Expr, ConfigError> {
    let text = raw.0.trim();
    let inner = text
        .strip_prefix('"')
        .and_then(|r| r.strip_suffix('"'))
        .ok_or_else(|| ConfigError {
            path: None,
            line: Some(raw.1),
            message: format!("{} must be a double-quoted expression", what),
        })?;
    parse(inner).map_err(|e| ConfigError {
        path: None,
        line: Some(raw.1),
        message: format!("{}: {}", what, e),
    })
}

/// A scalar value: a constant expression with no free variables.
fn scalar_value(raw: &(String, usize), what: &str) -> Result<f64, ConfigError> {
    let text = raw.0.trim().trim_matches('"');
    let expr = parse(text).map_err(|e| ConfigError {
        path: None,
        line: Some(raw.1),
        message: format!("{}: {}", what, e),
    })?;
    let vars = expr.free_vars();
    if vars.u || vars.v {
        return Err(ConfigError {
            path: None,
            line: Some(raw.1),
            message: format!("{} must be a constant (found a variable)", what),
        });
    }
    expr.eval(&Bindings::default()).map_err(|e| ConfigError {
        path: None,
        line: Some(raw.1),
        message: format!("{}: {}", what, e),
    })
}

fn scalar_or(sections: &Sections, section: &str, key: &str, default: f64) -> Result<f64, ConfigError> {
    match sections.get(section, key) {
        Some(raw) => scalar_value(raw, &format!("[{section}] {key}")),
        None => Ok(default),
    }
}

fn usize_or(sections: &Sections, section: &str, key: &str, default: usize) -> Result<usize, ConfigError> {
    let v = scalar_or(sections, section, key, default as f64)?;
    if v < 1.0 || v.fract() != 0.0 {
        return Err(err(format!("[{section}] {key} must be a positive integer")));
    }
    Ok(v as usize)
}

fn bool_or(sections: &Sections, section: &str, key: &str, default: bool) -> Result<bool, ConfigError> {
    match sections.get(section, key) {
        Some(raw) => match raw.0.trim() {
            "true" | "yes" | "on" | "1" => Ok(true),
            "false" | "no" | "off" | "0" => Ok(false),
            other => Err(ConfigError {
                path: None,
                line: Some(raw.1),
                message: format!("[{section}] {key}: expected a boolean, got '{}'", other),
            }),
        },
        None => Ok(default),
    }
}

/// Parses configuration text. `base_dir` anchors relative output paths.
pub fn parse_config(text: &str, base_dir: &Path) -> Result<RunConfig, ConfigError> {
    let sections = parse_sections(text)?;
    if !sections.map.contains_key("model") {
        return Err(err("missing [model] section"));
    }

    let case_raw = sections.required("model", "case")?;
    let case = match case_raw.0.trim().trim_matches('"') {
        "A" | "a" => CausticCase::A,
        "B" | "b" => CausticCase::B,
        "C" | "c" => CausticCase::C,
        other => {
            return Err(ConfigError {
                path: None,
                line: Some(case_raw.1),
                message: format!("case must be A, B, or C, got '{}'", other),
            })
        }
    };
    let mu = scalar_or(&sections, "model", "mu", 0.0)?;
    if mu != 0.0 && mu != 1.0 {
        return Err(err("mu must be 0 or 1"));
    }
    let infinite = |raw: &(String, usize), sign: f64| -> Result<f64, ConfigError> {
        let t = raw.0.trim().trim_matches('"');
        if t == "-inf" || t == "inf" || t == "+inf" {
            Ok(if t == "-inf" { f64::NEG_INFINITY } else { f64::INFINITY })
        } else {
            let _ = sign;
            scalar_value(raw, "cylinder bound")
        }
    };
    let model = ModelInput {
        u_left: infinite(sections.required("model", "u_left")?, -1.0)?,
        u_right: infinite(sections.required("model", "u_right")?, 1.0)?,
        f1: expr_value(sections.required("model", "f1")?, "[model] f1")?,
        f2: expr_value(sections.required("model", "f2")?, "[model] f2")?,
        g: expr_value(sections.required("model", "g")?, "[model] g")?,
        d1: expr_value(sections.required("model", "d1")?, "[model] d1")?,
        mu: mu as u8,
        case,
    };

    let energy = scalar_or(&sections, "torus", "energy", 1.0)?;
    let kappa = match sections.get("torus", "kappa") {
        Some(raw) if raw.0.trim().trim_matches('"') == "from-nu" => KappaChoice::FromNu,
        Some(raw) => KappaChoice::Given(scalar_value(raw, "[torus] kappa")?),
        None => return Err(err("missing [torus] kappa (a number or 'from-nu')")),
    };

    let nu_raw = sections.required("mode", "nu")?;
    let nu = {
        let parts: Vec<&str> = nu_raw.0.trim().trim_matches('"').split(',').collect();
        if parts.len() != 2 {
            return Err(ConfigError {
                path: None,
                line: Some(nu_raw.1),
                message: String::from("nu must be 'nu1, nu2'"),
            });
        }
        let p1: i64 = parts[0].trim().parse().map_err(|_| err("nu1 must be an integer"))?;
        let p2: i64 = parts[1].trim().parse().map_err(|_| err("nu2 must be an integer"))?;
        (p1, p2)
    };
    let h = match sections.get("mode", "h") {
        Some(raw) if raw.0.trim().trim_matches('"') == "from-quantization" => {
            HChoice::FromQuantization
        }
        Some(raw) => HChoice::Given(scalar_value(raw, "[mode] h")?),
        None => return Err(err("missing [mode] h (a number or 'from-quantization')")),
    };
    let reference = match sections.get("mode", "reference") {
        Some(raw) => match raw.0.trim().trim_matches('"') {
            "torus" => ReferencePolicy::Torus,
            "self" => ReferencePolicy::SelfTorus,
            other => {
                return Err(ConfigError {
                    path: None,
                    line: Some(raw.1),
                    message: format!("reference must be 'torus' or 'self', got '{}'", other),
                })
            }
        },
        None => ReferencePolicy::Torus,
    };
    // the spec's exactly-one-of invariant
    if kappa == KappaChoice::FromNu && h != HChoice::FromQuantization {
        return Err(err(
            "kappa = from-nu requires h = from-quantization (the pair is solved jointly)",
        ));
    }
    if kappa == KappaChoice::FromNu && reference == ReferencePolicy::Torus {
        return Err(err("kappa = from-nu implies reference = self"));
    }

    let out_dir = sections
        .get("output", "directory")
        .map(|raw| raw.0.trim().trim_matches('"').to_string())
        .unwrap_or_else(|| String::from("out"));
    let formats = sections
        .get("output", "formats")
        .map(|raw| raw.0.trim().trim_matches('"').to_string())
        .unwrap_or_else(|| String::from("csv"));
    let mut csv = false;
    let mut binary = false;
    for fmt in formats.split(',') {
        match fmt.trim() {
            "csv" => csv = true,
            "binary" | "bin" => binary = true,
            "" => {}
            other => return Err(err(format!("unknown output format '{}'", other))),
        }
    }

    Ok(RunConfig {
        model,
        energy,
        kappa,
        nu,
        h,
        reference,
        truncation: usize_or(&sections, "transport", "truncation", 16)?,
        divisor_floor: scalar_or(&sections, "transport", "divisor_floor", 1e-8)?,
        zero_lambda: bool_or(&sections, "transport", "zero_lambda", false)?,
        defect_bound: scalar_or(&sections, "mode", "defect_bound", 2.0)?,
        grid_u: usize_or(&sections, "field", "grid_u", 512)?,
        grid_v: usize_or(&sections, "field", "grid_v", 512)?,
        partition_width: scalar_or(&sections, "field", "partition_width", std::f64::consts::PI / 8.0)?,
        patch_action: scalar_or(&sections, "field", "patch_action", 0.1)?,
        window_band: scalar_or(&sections, "field", "window_band", 0.15)?,
        grid_check: bool_or(&sections, "verify", "grid_check", false)?,
        output: OutputConfig {
            directory: base_dir.join(out_dir),
            csv,
            binary,
            plots: bool_or(&sections, "output", "plots", true)?,
            physical_coords: bool_or(&sections, "output", "physical_coords", false)?,
        },
    })
}

/// Reads and parses a configuration file.
pub fn load_config(path: &Path) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError {
        path: Some(path.to_path_buf()),
        line: None,
        message: format!("cannot read config: {}", e),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_config(&text, base).map_err(|mut e| {
        e.path = Some(path.to_path_buf());
        e
    })
}
