//! Eigenfunction amplitudes for a given growth rate.
//!
//! The middle-layer amplitude is `f(x) = A e^{kx} + B e^{-kx}`, continued
//! into the outer regions by decaying exponentials. We store the scaled
//! coefficients `a_hat = A e^{ka}`, `b_hat = B e^{-ka}` so no bare
//! `e^{+-ka}` is ever formed; every interior exponent is `k(x - a)` in
//! `[0, kL']` and the right-interface formulas are rearranged so all
//! exponential factors are `<= 1`.

use num_complex::Complex;
use thiserror::Error;

use crate::dispersion::{
    decay_factor, driving_terms, quadratic_coefficients, residual_scale,
};
use crate::model::ValidatedConfig;
use crate::{lit, Scalar};

/// Which root of the dispersion quadratic an eigenpair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" => Ok(Branch::Plus),
            "minus" => Ok(Branch::Minus),
            other => Err(format!("unknown branch {other:?} (expected plus|minus)")),
        }
    }
}

/// Interface selector: `Left` is `x = a`, `Right` is `x = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interface {
    Left,
    Right,
}

/// One growth-rate root together with its scaled null-vector
/// coefficients, normalized so the larger component is exactly `1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair<T> {
    pub k: T,
    pub sigma: Complex<T>,
    pub branch: Branch,
    /// `A e^{ka}`
    pub a_hat: Complex<T>,
    /// `B e^{-ka}`
    pub b_hat: Complex<T>,
}

/// Sigma-multiplied interface-row residuals for an eigenpair, with the
/// term-magnitude sums used for relative comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowResiduals<T> {
    pub row_a: Complex<T>,
    pub row_b: Complex<T>,
    pub scale_a: T,
    pub scale_b: T,
    /// All row coefficients vanish (resonant wavenumber with sigma = 0);
    /// the residual is trivially zero for every vector.
    pub row_a_degenerate: bool,
    pub row_b_degenerate: bool,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum EigenError {
    #[error("sigma is not a root of the dispersion quadratic (relative residual {residual:e})")]
    NotARoot { residual: f64 },
    #[error("both interface rows vanish identically; null vector undetermined")]
    DoublyDegenerate,
    #[error("indeterminate ratio: amplitude vanishes at the interface")]
    IndeterminateRatio,
}

/// Sigma-multiplied row-a coefficients `(C, D)` with
/// `C = sigma(mu_L - mu) - E_a`, `D = sigma(mu_L + mu) - E_a`.
fn row_a_coefficients<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    e_a: T,
    sigma: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    (
        sigma * (cfg.mu_left - cfg.mu_mid) - e_a,
        sigma * (cfg.mu_left + cfg.mu_mid) - e_a,
    )
}

/// Sigma-multiplied row-b coefficients `(G, H)` with
/// `G = sigma(mu_R + mu) - E_b`, `H = sigma(mu_R - mu) - E_b`.
fn row_b_coefficients<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    e_b: T,
    sigma: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    (
        sigma * (cfg.mu_right + cfg.mu_mid) - e_b,
        sigma * (cfg.mu_right - cfg.mu_mid) - e_b,
    )
}

fn row_is_degenerate<T: Scalar>(u: Complex<T>, v: Complex<T>, scale: T) -> bool {
    let floor = scale * T::epsilon() * lit::<T>(100.0);
    u.norm() <= floor && v.norm() <= floor
}

/// Build the null vector of the interface system for a verified root.
///
/// Row a gives `(a_hat, b_hat) = (D, -C)`; if that row vanishes
/// identically (resonant left interface with `sigma = 0`) the vector is
/// taken from row b instead. The result is normalized so the
/// larger-magnitude component equals `1` exactly.
pub fn null_vector<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    k: T,
    sigma: Complex<T>,
    branch: Branch,
) -> Result<EigenPair<T>, EigenError> {
    let (alpha, beta, gamma) = quadratic_coefficients(cfg, k);
    let residual = ((sigma * sigma) * alpha + sigma * beta + gamma).norm();
    let scale = residual_scale(alpha, beta, gamma, sigma);
    if residual > lit::<T>(1e-6) * scale {
        return Err(EigenError::NotARoot {
            residual: (residual / scale.max(T::min_positive_value()))
                .to_f64()
                .unwrap_or(f64::NAN),
        });
    }

    let (e_a, e_b) = driving_terms(cfg, k);
    let (c, d) = row_a_coefficients(cfg, e_a, sigma);
    let scale_a = sigma.norm() * (cfg.mu_left.abs() + cfg.mu_mid.abs()) + e_a.abs();
    let (raw_a, raw_b) = if !row_is_degenerate(c, d, scale_a) {
        (d, -c)
    } else {
        let (g, h) = row_b_coefficients(cfg, e_b, sigma);
        let scale_b = sigma.norm() * (cfg.mu_right.abs() + cfg.mu_mid.abs()) + e_b.abs();
        if row_is_degenerate(g, h, scale_b) {
            return Err(EigenError::DoublyDegenerate);
        }
        // row b in hat coordinates: a_hat*G + b_hat*Q*H = 0
        let q = decay_factor(cfg, k);
        (h * q, -g)
    };

    let pivot = if raw_a.norm() >= raw_b.norm() { raw_a } else { raw_b };
    if pivot.norm() == T::zero() {
        return Err(EigenError::DoublyDegenerate);
    }
    Ok(EigenPair {
        k,
        sigma,
        branch,
        a_hat: raw_a / pivot,
        b_hat: raw_b / pivot,
    })
}

/// Null vector for one branch of the dispersion quadratic at `k`.
pub fn eigenpair_for_branch<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    k: T,
    branch: Branch,
) -> Result<EigenPair<T>, EigenError> {
    let pt = crate::dispersion::growth_rates(cfg, k);
    let sigma = match branch {
        Branch::Plus => pt.sigma_plus,
        Branch::Minus => pt.sigma_minus,
    };
    null_vector(cfg, k, sigma, branch)
}

/// Evaluate the amplitude `f` at any position: two-exponential form on
/// `[a, b]`, decaying continuation outside, continuous at both
/// interfaces by construction.
pub fn amplitude_at<T: Scalar>(
    pair: &EigenPair<T>,
    cfg: &ValidatedConfig<T>,
    x: T,
) -> Complex<T> {
    let k = pair.k;
    let len = cfg.b - cfg.a;
    if x < cfg.a {
        (pair.a_hat + pair.b_hat) * (k * (x - cfg.a)).exp()
    } else if x <= cfg.b {
        let d = x - cfg.a;
        pair.a_hat * (k * d).exp() + pair.b_hat * (-k * d).exp()
    } else {
        let d = x - cfg.b;
        pair.a_hat * (k * (len - d)).exp() + pair.b_hat * (-k * (len + d)).exp()
    }
}

/// Interface ratio `F(k, x) = f'/(k f)` at one of the interfaces.
///
/// At `x = b` the rescaled form
/// `(a_hat - b_hat e^{-2kL'})/(a_hat + b_hat e^{-2kL'})` is used so only
/// factors `<= 1` appear.
pub fn interface_ratio<T: Scalar>(
    pair: &EigenPair<T>,
    cfg: &ValidatedConfig<T>,
    at: Interface,
) -> Result<Complex<T>, EigenError> {
    let (num, den) = match at {
        Interface::Left => (pair.a_hat - pair.b_hat, pair.a_hat + pair.b_hat),
        Interface::Right => {
            let q = decay_factor(cfg, pair.k);
            (pair.a_hat - pair.b_hat * q, pair.a_hat + pair.b_hat * q)
        }
    };
    if den.norm() <= T::min_positive_value().sqrt() {
        return Err(EigenError::IndeterminateRatio);
    }
    Ok(num / den)
}

/// Sigma-multiplied residuals of both interface rows for an arbitrary
/// coefficient vector (not necessarily a genuine eigenpair).
pub fn boundary_residuals<T: Scalar>(
    pair: &EigenPair<T>,
    cfg: &ValidatedConfig<T>,
) -> RowResiduals<T> {
    let (e_a, e_b) = driving_terms(cfg, pair.k);
    let q = decay_factor(cfg, pair.k);
    let (c, d) = row_a_coefficients(cfg, e_a, pair.sigma);
    let (g, h) = row_b_coefficients(cfg, e_b, pair.sigma);

    let row_a = pair.a_hat * c + pair.b_hat * d;
    let scale_a = pair.a_hat.norm() * c.norm() + pair.b_hat.norm() * d.norm();
    // second interface equation divided by e^{kL'} so all factors are <= 1
    let row_b = pair.a_hat * g + pair.b_hat * h * q;
    let scale_b = pair.a_hat.norm() * g.norm() + pair.b_hat.norm() * h.norm() * q;

    RowResiduals {
        row_a,
        row_b,
        scale_a,
        scale_b,
        row_a_degenerate: c.norm() + d.norm() == T::zero(),
        row_b_degenerate: g.norm() + h.norm() == T::zero(),
    }
}

/// Cross-layer amplification `|f(b)| / |f(a)|`, computed in log space.
pub fn amplitude_ratio<T: Scalar>(
    pair: &EigenPair<T>,
    cfg: &ValidatedConfig<T>,
) -> Result<T, EigenError> {
    let f_a = pair.a_hat + pair.b_hat;
    if f_a.norm() <= T::min_positive_value().sqrt() {
        return Err(EigenError::IndeterminateRatio);
    }
    let q = decay_factor(cfg, pair.k);
    let scaled_f_b = pair.a_hat + pair.b_hat * q;
    let ln_ratio = pair.k * (cfg.b - cfg.a) + scaled_f_b.norm().ln() - f_a.norm().ln();
    Ok(ln_ratio.exp())
}

/// The Fourier-mode velocity perturbation
/// `u' = eps * f(x) * e^{i k y + sigma t}`.
pub fn perturbation_velocity<T: Scalar>(
    pair: &EigenPair<T>,
    cfg: &ValidatedConfig<T>,
    eps: T,
    x: T,
    y: T,
    t: T,
) -> Complex<T> {
    let phase = (Complex::<T>::i() * (pair.k * y) + pair.sigma * t).exp();
    amplitude_at(pair, cfg, x) * phase * eps
}
