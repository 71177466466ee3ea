//! Compatibility diagnostics: both interface conditions must produce the
//! same growth rate, and in the large-wavenumber limit that forces the
//! tension-ratio restriction `T_b/T_a = (mu + mu_R)/(mu_L + mu)`.
//!
//! For a genuine eigenpair the per-interface identities
//! `E_b/sigma = mu F(k,b) + mu_R` and `E_a/sigma = mu_L - mu F(k,a)` hold
//! at every finite `k` (they are rearrangements of the interface rows).
//! Each branch attains exactly one of the two limits `mu + mu_R`,
//! `mu_L + mu` as `k` grows; requiring the *other* interface's quotient
//! to reach its own limit simultaneously pins the tension ratio. Generic
//! configurations violate that restriction, so consistent growth rates do
//! not exist in general; this module measures the mismatch instead of
//! hiding it.

use num_complex::Complex;
use thiserror::Error;

use crate::dispersion::{decay_factor, driving_terms, growth_rates};
use crate::eigenfunctions::{
    interface_ratio, null_vector, Branch, EigenError, EigenPair, Interface,
};
use crate::model::ValidatedConfig;
use crate::{lit, Scalar};

/// Which of the two large-`k` limits a branch attains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchedInterface {
    /// `E_b/sigma -> mu + mu_R` (right interface, `x = b`).
    Right,
    /// `E_a/sigma -> mu_L + mu` (left interface, `x = a`).
    Left,
}

impl MatchedInterface {
    pub fn as_str(self) -> &'static str {
        match self {
            MatchedInterface::Right => "b",
            MatchedInterface::Left => "a",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Compatible,
    Incompatible,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Compatible => "compatible",
            Verdict::Incompatible => "incompatible",
        }
    }
}

/// Branch-limit estimates along an ascending wavenumber sequence, with
/// the cross-limit mismatch and the feasibility verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct CompatibilityReport<T> {
    pub branch: Branch,
    pub k_sequence: Vec<T>,
    pub eb_over_sigma: Vec<Complex<T>>,
    pub ea_over_sigma: Vec<Complex<T>>,
    pub f_at_a: Vec<Complex<T>>,
    pub f_at_b: Vec<Complex<T>>,
    pub limit_eb_over_sigma: Complex<T>,
    pub limit_ea_over_sigma: Complex<T>,
    pub matched_interface: MatchedInterface,
    /// Large-`k` value of the unmatched interface's quotient, measured
    /// against its own limit.
    pub cross_limit_mismatch: T,
    /// `T_b/T_a - (mu + mu_R)/(mu_L + mu)`.
    pub tension_ratio_residual: T,
    pub verdict: Verdict,
}

/// Per-branch identity residuals in sigma-multiplied form, with the
/// magnitude scales used for relative comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResiduals<T> {
    /// `sigma(mu F(k,b) + mu_R) - E_b`
    pub res_b: Complex<T>,
    /// `sigma(mu_L - mu F(k,a)) - E_a`
    pub res_a: Complex<T>,
    pub scale_b: T,
    pub scale_a: T,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CompatError {
    #[error("k sequence must be non-empty and strictly ascending")]
    BadSequence,
    #[error("sequence too short: final coupling factor {final_q:e} >= 1e-12")]
    SequenceTooShort { final_q: f64 },
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Evaluate both per-interface identities for an eigenpair.
///
/// Both residuals vanish to tolerance for genuine eigenpairs at every
/// finite `k`; the obstruction lives only in the joint large-`k` limits.
pub fn r9_identity_residuals<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    pair: &EigenPair<T>,
) -> Result<IdentityResiduals<T>, EigenError> {
    let (e_a, e_b) = driving_terms(cfg, pair.k);
    if pair.sigma.norm() == T::zero() {
        // sigma-multiplied form: sigma*F is zero at sigma = 0 even where
        // the bare ratio is indeterminate (the amplitude vanishes at the
        // interface there)
        return Ok(IdentityResiduals {
            res_b: -Complex::new(e_b, T::zero()),
            res_a: -Complex::new(e_a, T::zero()),
            scale_b: e_b.abs(),
            scale_a: e_a.abs(),
        });
    }
    let f_a = interface_ratio(pair, cfg, Interface::Left)?;
    let f_b = interface_ratio(pair, cfg, Interface::Right)?;
    let res_b = pair.sigma * (f_b * cfg.mu_mid + cfg.mu_right) - e_b;
    let res_a = pair.sigma * (-f_a * cfg.mu_mid + cfg.mu_left) - e_a;
    let scale_b = pair.sigma.norm() * (cfg.mu_mid * f_b.norm() + cfg.mu_right) + e_b.abs();
    let scale_a = pair.sigma.norm() * (cfg.mu_mid * f_a.norm() + cfg.mu_left) + e_a.abs();
    Ok(IdentityResiduals {
        res_b,
        res_a,
        scale_b,
        scale_a,
    })
}

/// Tension-ratio restriction residual `T_b/T_a - (mu + mu_R)/(mu_L + mu)`.
pub fn tension_ratio_residual<T: Scalar>(cfg: &ValidatedConfig<T>) -> T {
    cfg.tension_b / cfg.tension_a
        - (cfg.mu_mid + cfg.mu_right) / (cfg.mu_left + cfg.mu_mid)
}

/// Default relative tolerance for the "compatible" verdict, against the
/// `mu_L + mu_R` scale.
pub fn default_verdict_tolerance<T: Scalar>() -> T {
    lit::<T>(1e-6)
}

/// Tabulate the branch quotients along `k_sequence` and judge the
/// simultaneous large-`k` limits.
///
/// The limit estimate is simply the value at the largest `k`; the
/// correction is `O(e^{-2kL'})`, so the sequence must end with a
/// coupling factor `Q < 1e-12`. Which interface the branch attains is
/// decided per configuration from the data, not assumed from root
/// ordering.
pub fn branch_limit_report<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    branch: Branch,
    k_sequence: &[T],
    tol_rel: T,
) -> Result<CompatibilityReport<T>, CompatError> {
    if k_sequence.is_empty() || k_sequence.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(CompatError::BadSequence);
    }
    let k_last = *k_sequence.last().unwrap();
    let final_q = decay_factor(cfg, k_last);
    if !(final_q < lit::<T>(1e-12)) {
        return Err(CompatError::SequenceTooShort {
            final_q: num_traits::ToPrimitive::to_f64(&final_q).unwrap_or(f64::NAN),
        });
    }

    let mut eb_over_sigma = Vec::with_capacity(k_sequence.len());
    let mut ea_over_sigma = Vec::with_capacity(k_sequence.len());
    let mut f_at_a = Vec::with_capacity(k_sequence.len());
    let mut f_at_b = Vec::with_capacity(k_sequence.len());
    for &k in k_sequence {
        let pt = growth_rates(cfg, k);
        let sigma = match branch {
            Branch::Plus => pt.sigma_plus,
            Branch::Minus => pt.sigma_minus,
        };
        let pair = null_vector(cfg, k, sigma, branch)?;
        let (e_a, e_b) = driving_terms(cfg, k);
        let qa = Complex::new(e_a, T::zero()) / sigma;
        let qb = Complex::new(e_b, T::zero()) / sigma;
        eb_over_sigma.push(qb);
        ea_over_sigma.push(qa);
        // once e^{-2kL'} underflows, the amplitude-based ratio at the
        // branch's far interface is 0/0; the identities E_b/sigma =
        // mu F(b) + mu_R and E_a/sigma = mu_L - mu F(a) hold on-shell at
        // every k and stay well conditioned, so fall back to them there
        f_at_a.push(match interface_ratio(&pair, cfg, Interface::Left) {
            Ok(v) => v,
            Err(EigenError::IndeterminateRatio) => {
                (Complex::new(cfg.mu_left, T::zero()) - qa) / cfg.mu_mid
            }
            Err(e) => return Err(e.into()),
        });
        f_at_b.push(match interface_ratio(&pair, cfg, Interface::Right) {
            Ok(v) => v,
            Err(EigenError::IndeterminateRatio) => (qb - cfg.mu_right) / cfg.mu_mid,
            Err(e) => return Err(e.into()),
        });
    }

    let limit_eb_over_sigma = *eb_over_sigma.last().unwrap();
    let limit_ea_over_sigma = *ea_over_sigma.last().unwrap();
    let right_sum = cfg.mu_mid + cfg.mu_right;
    let left_sum = cfg.mu_left + cfg.mu_mid;
    let dist_b = (limit_eb_over_sigma - right_sum).norm();
    let dist_a = (limit_ea_over_sigma - left_sum).norm();
    let matched_interface = if dist_b <= dist_a {
        MatchedInterface::Right
    } else {
        MatchedInterface::Left
    };
    let cross_limit_mismatch = match matched_interface {
        MatchedInterface::Right => {
            (right_sum * cfg.tension_a / cfg.tension_b - left_sum).abs()
        }
        MatchedInterface::Left => {
            (left_sum * cfg.tension_b / cfg.tension_a - right_sum).abs()
        }
    };
    let verdict = if cross_limit_mismatch <= tol_rel * (cfg.mu_left + cfg.mu_right) {
        Verdict::Compatible
    } else {
        Verdict::Incompatible
    };

    Ok(CompatibilityReport {
        branch,
        k_sequence: k_sequence.to_vec(),
        eb_over_sigma,
        ea_over_sigma,
        f_at_a,
        f_at_b,
        limit_eb_over_sigma,
        limit_ea_over_sigma,
        matched_interface,
        cross_limit_mismatch,
        tension_ratio_residual: tension_ratio_residual(cfg),
        verdict,
    })
}

/// Default wavenumber sequence for limit reports: scaled so the final
/// coupling factor is `e^{-30} < 1e-12` (gives `{5, 10, 15}` for a
/// unit-length layer).
pub fn default_k_sequence<T: Scalar>(cfg: &ValidatedConfig<T>) -> Vec<T> {
    let base = lit::<T>(5.0) / (cfg.b - cfg.a);
    vec![base, base * lit::<T>(2.0), base * lit::<T>(3.0)]
}

/// Outcome of the middle-viscosity feasibility formula
/// `mu = (mu_R T_a - mu_L T_b)/(T_b - T_a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Feasibility<T> {
    /// The unique middle viscosity satisfying the tension-ratio
    /// restriction, strictly inside `(mu_L, mu_R)`.
    Feasible(T),
    /// Equal tensions would force `mu_R = mu_L`.
    EqualTensions,
    /// Formula value at or below `mu_L`.
    BelowLower { mu_hat: T },
    /// Formula value at or above `mu_R`.
    AboveUpper { mu_hat: T },
}

/// Solve the tension-ratio restriction for the middle viscosity and
/// check the window `mu_L < mu < mu_R`.
pub fn feasible_mu<T: Scalar>(
    mu_left: T,
    mu_right: T,
    tension_a: T,
    tension_b: T,
) -> Result<Feasibility<T>, CompatError> {
    let zero = T::zero();
    if !(mu_left > zero && mu_right > zero && tension_a > zero && tension_b > zero) {
        return Err(CompatError::InvalidInput(
            "all of mu_L, mu_R, T_a, T_b must be positive".to_owned(),
        ));
    }
    if !(mu_left < mu_right) {
        return Err(CompatError::InvalidInput(format!(
            "mu_L < mu_R violated: got {mu_left} >= {mu_right}"
        )));
    }
    if tension_a == tension_b {
        return Ok(Feasibility::EqualTensions);
    }
    let mu_hat = (mu_right * tension_a - mu_left * tension_b) / (tension_b - tension_a);
    if !(mu_hat > mu_left) {
        Ok(Feasibility::BelowLower { mu_hat })
    } else if !(mu_hat < mu_right) {
        Ok(Feasibility::AboveUpper { mu_hat })
    } else {
        Ok(Feasibility::Feasible(mu_hat))
    }
}

fn complex_json(z: &Complex<f64>) -> serde_json::Value {
    serde_json::json!([z.re, z.im])
}

impl CompatibilityReport<f64> {
    /// JSON form of the report: keys mirror the field names, complex
    /// numbers encode as `[re, im]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "branch": self.branch.as_str(),
            "k_sequence": self.k_sequence,
            "Eb_over_sigma": self.eb_over_sigma.iter().map(complex_json).collect::<Vec<_>>(),
            "Ea_over_sigma": self.ea_over_sigma.iter().map(complex_json).collect::<Vec<_>>(),
            "F_at_a": self.f_at_a.iter().map(complex_json).collect::<Vec<_>>(),
            "F_at_b": self.f_at_b.iter().map(complex_json).collect::<Vec<_>>(),
            "limit_Eb_over_sigma": complex_json(&self.limit_eb_over_sigma),
            "limit_Ea_over_sigma": complex_json(&self.limit_ea_over_sigma),
            "matched_interface": self.matched_interface.as_str(),
            "cross_limit_mismatch": self.cross_limit_mismatch,
            "tension_ratio_residual": self.tension_ratio_residual,
            "verdict": self.verdict.as_str(),
        })
    }
}
