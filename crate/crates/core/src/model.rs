//! Physical configuration of the three-layer displacement and its
//! validation, plus the JSON config schema used by the CLI.
//!
//! The base flow is stationary: the displacing fluid (viscosity `mu_L`,
//! `x < a`) pushes the middle layer (`mu`, `a < x < b`) which pushes the
//! displaced fluid (`mu_R`, `x > b`) at far-upstream speed `U`. Surface
//! tensions `T_a`, `T_b` act on the two planar interfaces.

use std::ops::Deref;

use thiserror::Error;

use crate::Scalar;

/// Raw physical parameters, prior to validation.
///
/// All quantities are in one consistent nondimensional system; the Darcy
/// permeability prefactor is absorbed into `speed`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowConfig<T> {
    /// Viscosity of the displacing fluid (`x < a`).
    pub mu_left: T,
    /// Viscosity of the middle-layer fluid (`a < x < b`).
    pub mu_mid: T,
    /// Viscosity of the displaced fluid (`x > b`).
    pub mu_right: T,
    /// Far-upstream displacement speed.
    pub speed: T,
    /// Surface tension at the left interface `x = a`.
    pub tension_a: T,
    /// Surface tension at the right interface `x = b`.
    pub tension_b: T,
    /// Left interface position.
    pub a: T,
    /// Right interface position.
    pub b: T,
    /// Skip the strict viscosity ordering and `U > 0` checks.
    ///
    /// Exists so symmetry experiments (swapped viscosities, reversed
    /// speed) can run; CLI ingestion defaults to strict validation.
    pub relax_ordering: bool,
}

/// A configuration that passed [`validate`]; immutable thereafter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidatedConfig<T>(FlowConfig<T>);

impl<T> Deref for ValidatedConfig<T> {
    type Target = FlowConfig<T>;

    fn deref(&self) -> &FlowConfig<T> {
        &self.0
    }
}

impl<T: Scalar> ValidatedConfig<T> {
    /// The underlying raw configuration.
    pub fn raw(&self) -> &FlowConfig<T> {
        &self.0
    }

    /// Middle-layer length `L' = b - a` (strictly positive).
    pub fn layer_length(&self) -> T {
        self.b - self.a
    }

    /// Piecewise-constant viscosity profile.
    ///
    /// Returns `mu_left` for `x < a`, `mu_right` for `x > b`, and the
    /// middle-layer value on `[a, b]` (interface points take the middle
    /// value by convention).
    pub fn viscosity_at(&self, x: T) -> T {
        if x < self.a {
            self.mu_left
        } else if x > self.b {
            self.mu_right
        } else {
            self.mu_mid
        }
    }
}

/// Every constraint violated by a configuration, reported together.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("invalid configuration: {}", violations.join("; "))]
pub struct ValidationErrors {
    pub violations: Vec<String>,
}

/// Check a raw configuration against the model's standing assumptions.
///
/// Default validation enforces `0 < mu_L < mu < mu_R`, `U > 0`, positive
/// tensions, `a < b` and `b <= 0`. With `relax_ordering` set, the
/// ordering and `U > 0` checks are skipped (positivity and interval
/// orientation still apply).
pub fn validate<T: Scalar>(raw: FlowConfig<T>) -> Result<ValidatedConfig<T>, ValidationErrors> {
    let mut violations = Vec::new();
    let zero = T::zero();

    let finite = [
        ("mu_L", raw.mu_left),
        ("mu", raw.mu_mid),
        ("mu_R", raw.mu_right),
        ("U", raw.speed),
        ("T_a", raw.tension_a),
        ("T_b", raw.tension_b),
        ("a", raw.a),
        ("b", raw.b),
    ];
    for (name, v) in finite {
        if !v.is_finite() {
            violations.push(format!("{name} not finite: got {v}"));
        }
    }
    for (name, v) in [
        ("mu_L", raw.mu_left),
        ("mu", raw.mu_mid),
        ("mu_R", raw.mu_right),
    ] {
        if !(v > zero) {
            violations.push(format!("{name} > 0 violated: got {v}"));
        }
    }
    if !(raw.tension_a > zero) {
        violations.push(format!("T_a > 0 violated: got {}", raw.tension_a));
    }
    if !(raw.tension_b > zero) {
        violations.push(format!("T_b > 0 violated: got {}", raw.tension_b));
    }
    if !raw.relax_ordering {
        if !(raw.mu_left < raw.mu_mid && raw.mu_mid < raw.mu_right) {
            violations.push(format!(
                "ordering violated: require mu_L < mu < mu_R, got {} / {} / {}",
                raw.mu_left, raw.mu_mid, raw.mu_right
            ));
        }
        if !(raw.speed > zero) {
            violations.push(format!("U > 0 violated: got {}", raw.speed));
        }
    }
    if !(raw.a < raw.b) {
        violations.push(format!("a < b violated: got a={}, b={}", raw.a, raw.b));
    }
    if !(raw.b <= zero) {
        violations.push(format!("b <= 0 violated: got {}", raw.b));
    }

    if violations.is_empty() {
        Ok(ValidatedConfig(raw))
    } else {
        Err(ValidationErrors { violations })
    }
}

/// Failure to map a JSON document onto [`FlowConfig`].
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("config must be a JSON object")]
    NotObject,
    #[error("invalid config document: {}", .0.join("; "))]
    Schema(Vec<String>),
}

const FIELDS: [&str; 8] = ["mu_L", "mu", "mu_R", "U", "T_a", "T_b", "a", "b"];

/// Parse the documented JSON schema into a raw configuration.
///
/// Exact keys `mu_L, mu, mu_R, U, T_a, T_b, a, b` plus optional boolean
/// `relax_ordering`. Unknown keys are rejected; every missing or
/// non-numeric field is reported by name in one pass.
pub fn parse_config(text: &str) -> Result<FlowConfig<f64>, ParseError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let obj = value.as_object().ok_or(ParseError::NotObject)?;

    let mut issues = Vec::new();
    for key in obj.keys() {
        if !FIELDS.contains(&key.as_str()) && key != "relax_ordering" {
            issues.push(format!("unknown field {key}"));
        }
    }
    let mut numbers = [0.0f64; 8];
    for (slot, name) in numbers.iter_mut().zip(FIELDS) {
        match obj.get(name) {
            None => issues.push(format!("missing field {name}")),
            Some(v) => match v.as_f64() {
                Some(x) if x.is_finite() => *slot = x,
                _ => issues.push(format!("non-numeric {name}")),
            },
        }
    }
    let relax_ordering = match obj.get("relax_ordering") {
        None => false,
        Some(serde_json::Value::Bool(flag)) => *flag,
        Some(_) => {
            issues.push("relax_ordering must be a boolean".to_owned());
            false
        }
    };
    if !issues.is_empty() {
        return Err(ParseError::Schema(issues));
    }
    let [mu_left, mu_mid, mu_right, speed, tension_a, tension_b, a, b] = numbers;
    Ok(FlowConfig {
        mu_left,
        mu_mid,
        mu_right,
        speed,
        tension_a,
        tension_b,
        a,
        b,
        relax_ordering,
    })
}

/// Serialize a configuration back to the JSON schema (round-trips exactly
/// through [`parse_config`]).
pub fn serialize_config(cfg: &FlowConfig<f64>) -> String {
    serde_json::json!({
        "mu_L": cfg.mu_left,
        "mu": cfg.mu_mid,
        "mu_R": cfg.mu_right,
        "U": cfg.speed,
        "T_a": cfg.tension_a,
        "T_b": cfg.tension_b,
        "a": cfg.a,
        "b": cfg.b,
        "relax_ordering": cfg.relax_ordering,
    })
    .to_string()
}
