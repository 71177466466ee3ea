//! Wavenumber sweeps, unstable-band extraction, and the minimax search
//! over the middle viscosity.

use thiserror::Error;

use crate::compatibility::Verdict;
use crate::dispersion::{growth_rates, SpectralPoint};
use crate::model::{validate, FlowConfig, ValidatedConfig, ValidationErrors};
use crate::{lit, Scalar};

/// A dispersion sweep with extracted maximum and unstable bands.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthCurve<T> {
    pub k_grid: Vec<T>,
    pub points: Vec<SpectralPoint<T>>,
    /// Maximal real growth rate over the grid, refined within the
    /// bracketing cell.
    pub sigma_max: T,
    pub k_at_max: T,
    /// Maximal interval(s) of `k` where the larger branch has positive
    /// real part, edges refined by bisection.
    pub unstable_bands: Vec<(T, T)>,
}

/// Result of the middle-viscosity minimax search.
#[derive(Debug, Clone, PartialEq)]
pub struct MuOptimum<T> {
    pub mu_star: T,
    pub objective_star: T,
    /// Every `(mu, objective)` evaluation, in order.
    pub trace: Vec<(T, T)>,
}

/// Parameter axis a scan can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanAxis {
    MuMid,
    Speed,
    TensionA,
    TensionB,
    InterfaceA,
    InterfaceB,
}

impl ScanAxis {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanAxis::MuMid => "mu",
            ScanAxis::Speed => "U",
            ScanAxis::TensionA => "T_a",
            ScanAxis::TensionB => "T_b",
            ScanAxis::InterfaceA => "a",
            ScanAxis::InterfaceB => "b",
        }
    }

    fn apply<T: Scalar>(self, raw: &mut FlowConfig<T>, value: T) {
        match self {
            ScanAxis::MuMid => raw.mu_mid = value,
            ScanAxis::Speed => raw.speed = value,
            ScanAxis::TensionA => raw.tension_a = value,
            ScanAxis::TensionB => raw.tension_b = value,
            ScanAxis::InterfaceA => raw.a = value,
            ScanAxis::InterfaceB => raw.b = value,
        }
    }
}

impl std::str::FromStr for ScanAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mu" => Ok(ScanAxis::MuMid),
            "U" => Ok(ScanAxis::Speed),
            "T_a" => Ok(ScanAxis::TensionA),
            "T_b" => Ok(ScanAxis::TensionB),
            "a" => Ok(ScanAxis::InterfaceA),
            "b" => Ok(ScanAxis::InterfaceB),
            other => Err(format!(
                "unknown axis {other:?} (expected mu|U|T_a|T_b|a|b)"
            )),
        }
    }
}

/// One cell of a parameter scan, row-major over (axis1, axis2).
#[derive(Debug, Clone, PartialEq)]
pub enum ScanCell<T> {
    Ok {
        sigma_star: T,
        k_star: T,
        verdict: Verdict,
    },
    /// The cell's configuration failed validation; the scan continues.
    Invalid { error: ValidationErrors },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanTable<T> {
    pub axis1: ScanAxis,
    pub axis1_values: Vec<T>,
    pub axis2: ScanAxis,
    pub axis2_values: Vec<T>,
    /// Row-major: `cells[i * axis2_values.len() + j]`.
    pub cells: Vec<ScanCell<T>>,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AnalysisError {
    #[error("invalid wavenumber range: require 0 <= k_min < k_max, got [{0}, {1}]")]
    InvalidRange(f64, f64),
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("invalid mu bounds: {0}")]
    InvalidBounds(String),
}

/// Largest resonant wavenumber
/// `k_cut = sqrt(U * max(mu - mu_L, mu_R - mu) / min(T_a, T_b))`;
/// beyond it both driving terms are negative and every mode decays.
pub fn resonance_cutoff<T: Scalar>(cfg: &ValidatedConfig<T>) -> T {
    let contrast = (cfg.mu_mid - cfg.mu_left).max(cfg.mu_right - cfg.mu_mid);
    (cfg.speed * contrast / cfg.tension_a.min(cfg.tension_b)).sqrt()
}

/// Default sweep upper bound: `10 * k_cut`, capturing the entire
/// unstable band with margin.
pub fn default_k_max<T: Scalar>(cfg: &ValidatedConfig<T>) -> T {
    let cut = resonance_cutoff(cfg);
    if cut.is_finite() && cut > T::zero() {
        cut * lit::<T>(10.0)
    } else {
        lit::<T>(10.0)
    }
}

fn linspace<T: Scalar>(lo: T, hi: T, n: usize) -> Vec<T> {
    let last = T::from_usize(n - 1).unwrap();
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * T::from_usize(i).unwrap() / last
            }
        })
        .collect()
}

fn logspace<T: Scalar>(lo: T, hi: T, n: usize) -> Vec<T> {
    let (ll, lh) = (lo.ln(), hi.ln());
    let last = T::from_usize(n - 1).unwrap();
    (0..n)
        .map(|i| match i {
            0 => lo,
            i if i == n - 1 => hi,
            i => (ll + (lh - ll) * T::from_usize(i).unwrap() / last).exp(),
        })
        .collect()
}

/// Hybrid wavenumber grid: linear up to the largest resonant wavenumber,
/// logarithmic above it.
fn wavenumber_grid<T: Scalar>(cfg: &ValidatedConfig<T>, k_min: T, k_max: T, samples: usize) -> Vec<T> {
    let cut = resonance_cutoff(cfg);
    if !cut.is_finite() || cut <= k_min || cut >= k_max {
        if k_min > T::zero() && cut.is_finite() && cut <= k_min {
            return logspace(k_min, k_max, samples);
        }
        return linspace(k_min, k_max, samples);
    }
    let frac = ((cut - k_min) / (k_max - k_min)).to_f64().unwrap_or(0.5);
    let n_lin = ((samples as f64 * frac).round() as usize).clamp(2, samples - 1);
    let n_log = samples - n_lin;
    let mut grid = linspace(k_min, cut, n_lin);
    grid.extend(logspace(cut, k_max, n_log + 1).into_iter().skip(1));
    grid
}

/// Golden-section search for the maximum of `f` on `[lo, hi]`.
fn golden_max<T: Scalar, F: Fn(T) -> T>(f: &F, mut lo: T, mut hi: T, tol: T) -> (T, T) {
    let inv_phi = lit::<T>(0.618_033_988_749_894_9);
    let mut x1 = hi - (hi - lo) * inv_phi;
    let mut x2 = lo + (hi - lo) * inv_phi;
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut guard = 0usize;
    while hi - lo > tol && guard < 400 {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - (hi - lo) * inv_phi;
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + (hi - lo) * inv_phi;
            f2 = f(x2);
        }
        guard += 1;
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Bisect the edge of a sign change of `f` on `[lo, hi]` (positivity of
/// `f` differs at the endpoints) down to `|hi - lo| <= tol`.
fn bisect_edge<T: Scalar, F: Fn(T) -> T>(f: &F, mut lo: T, mut hi: T, tol: T) -> T {
    let lo_positive = f(lo) > T::zero();
    let two = lit::<T>(2.0);
    let mut guard = 0usize;
    while hi - lo > tol && guard < 200 {
        let mid = (lo + hi) / two;
        if (f(mid) > T::zero()) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
        guard += 1;
    }
    (lo + hi) / two
}

fn sweep_impl<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    k_min: T,
    k_max: T,
    samples: usize,
    refine_tol: T,
) -> Result<GrowthCurve<T>, AnalysisError> {
    if !(k_min >= T::zero() && k_min < k_max) {
        return Err(AnalysisError::InvalidRange(
            k_min.to_f64().unwrap_or(f64::NAN),
            k_max.to_f64().unwrap_or(f64::NAN),
        ));
    }
    if samples < 2 {
        return Err(AnalysisError::TooFewSamples(samples));
    }

    let k_grid = wavenumber_grid(cfg, k_min, k_max, samples);
    let points: Vec<SpectralPoint<T>> = k_grid.iter().map(|&k| growth_rates(cfg, k)).collect();
    let growth = |k: T| growth_rates(cfg, k).sigma_plus.re;

    // refine the incumbent maximum inside its bracketing cell
    let mut best = 0usize;
    for (idx, pt) in points.iter().enumerate() {
        if pt.sigma_plus.re > points[best].sigma_plus.re {
            best = idx;
        }
    }
    let lo = k_grid[best.saturating_sub(1)];
    let hi = k_grid[(best + 1).min(k_grid.len() - 1)];
    let (mut k_at_max, mut sigma_max) = (k_grid[best], points[best].sigma_plus.re);
    if hi > lo {
        let (k_ref, s_ref) = golden_max(&growth, lo, hi, refine_tol);
        if s_ref > sigma_max {
            k_at_max = k_ref;
            sigma_max = s_ref;
        }
    }

    // unstable bands: maximal runs of positive growth, edges bisected
    let edge_tol = lit::<T>(1e-9) * k_max;
    let positive: Vec<bool> = points.iter().map(|p| p.sigma_plus.re > T::zero()).collect();
    let mut unstable_bands = Vec::new();
    let mut start: Option<T> = None;
    for i in 0..positive.len() {
        if positive[i] && start.is_none() {
            let left = if i == 0 {
                k_grid[0]
            } else {
                bisect_edge(&growth, k_grid[i - 1], k_grid[i], edge_tol)
            };
            start = Some(left);
        }
        if !positive[i] {
            if let Some(left) = start.take() {
                let right = bisect_edge(&growth, k_grid[i - 1], k_grid[i], edge_tol);
                unstable_bands.push((left, right));
            }
        }
    }
    if let Some(left) = start {
        unstable_bands.push((left, k_grid[k_grid.len() - 1]));
    }

    Ok(GrowthCurve {
        k_grid,
        points,
        sigma_max,
        k_at_max,
        unstable_bands,
    })
}

/// Evaluate the dispersion relation over a hybrid grid and extract the
/// maximum growth rate and unstable bands.
pub fn sweep<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    k_min: T,
    k_max: T,
    samples: usize,
) -> Result<GrowthCurve<T>, AnalysisError> {
    sweep_impl(cfg, k_min, k_max, samples, lit::<T>(1e-9) * (k_max - k_min))
}

/// Maximal growth rate over `[k_min, k_max]`: 512-point sweep followed
/// by golden-section refinement in the bracketing cell.
pub fn max_growth<T: Scalar>(
    cfg: &ValidatedConfig<T>,
    k_min: T,
    k_max: T,
) -> Result<(T, T), AnalysisError> {
    let curve = sweep_impl(cfg, k_min, k_max, 512, lit::<T>(1e-10) * (k_max - k_min))?;
    Ok((curve.k_at_max, curve.sigma_max))
}

/// Minimize the maximal growth rate over the middle viscosity.
///
/// Coarse 32-point grid over `[mu_lo, mu_hi]`, then golden-section
/// restarts from the three best cells. `J(mu)` may be multimodal; the
/// full evaluation trace is returned for audit. Deterministic for fixed
/// inputs.
pub fn optimize_mu<T: Scalar>(
    template: &ValidatedConfig<T>,
    mu_lo: T,
    mu_hi: T,
    k_min: T,
    k_max: T,
) -> Result<MuOptimum<T>, AnalysisError> {
    if !(mu_lo <= mu_hi) {
        return Err(AnalysisError::InvalidBounds(format!(
            "empty bounds [{mu_lo}, {mu_hi}]"
        )));
    }
    if !(template.mu_left < mu_lo && mu_hi < template.mu_right) {
        return Err(AnalysisError::InvalidBounds(format!(
            "bounds [{mu_lo}, {mu_hi}] not inside (mu_L, mu_R) = ({}, {})",
            template.mu_left, template.mu_right
        )));
    }
    if !(k_min >= T::zero() && k_min < k_max) {
        return Err(AnalysisError::InvalidRange(
            num_traits::ToPrimitive::to_f64(&k_min).unwrap_or(f64::NAN),
            num_traits::ToPrimitive::to_f64(&k_max).unwrap_or(f64::NAN),
        ));
    }

    let raw = *template.raw();
    let mut trace: Vec<(T, T)> = Vec::new();
    let objective = |mu: T, trace: &mut Vec<(T, T)>| -> T {
        let cfg = validate(FlowConfig { mu_mid: mu, ..raw })
            .expect("mu inside (mu_L, mu_R) keeps the config valid");
        let (_, sigma_star) = max_growth(&cfg, k_min, k_max)
            .expect("range already validated");
        trace.push((mu, sigma_star));
        sigma_star
    };

    if mu_lo == mu_hi {
        let j = objective(mu_lo, &mut trace);
        return Ok(MuOptimum {
            mu_star: mu_lo,
            objective_star: j,
            trace,
        });
    }

    let grid = linspace(mu_lo, mu_hi, 32);
    let coarse: Vec<T> = grid
        .iter()
        .map(|&mu| objective(mu, &mut trace))
        .collect();
    // never return worse than the template's own middle viscosity
    if raw.mu_mid >= mu_lo && raw.mu_mid <= mu_hi {
        objective(raw.mu_mid, &mut trace);
    }
    let mut order: Vec<usize> = (0..grid.len()).collect();
    order.sort_by(|&a, &b| coarse[a].partial_cmp(&coarse[b]).unwrap().then(a.cmp(&b)));

    let tol = lit::<T>(1e-9) * (mu_hi - mu_lo);
    for &idx in order.iter().take(3) {
        let lo = grid[idx.saturating_sub(1)];
        let hi = grid[(idx + 1).min(grid.len() - 1)];
        if hi > lo {
            // golden-section minimization of J
            let mut local = Vec::new();
            let neg = |mu: T, local: &mut Vec<(T, T)>| -> T { -objective(mu, local) };
            let _ = {
                // inline golden section so every evaluation reaches the trace
                let inv_phi = lit::<T>(0.618_033_988_749_894_9);
                let (mut lo, mut hi) = (lo, hi);
                let mut x1 = hi - (hi - lo) * inv_phi;
                let mut x2 = lo + (hi - lo) * inv_phi;
                let mut f1 = neg(x1, &mut local);
                let mut f2 = neg(x2, &mut local);
                let mut guard = 0usize;
                while hi - lo > tol && guard < 200 {
                    if f1 >= f2 {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - (hi - lo) * inv_phi;
                        f1 = neg(x1, &mut local);
                    } else {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + (hi - lo) * inv_phi;
                        f2 = neg(x2, &mut local);
                    }
                    guard += 1;
                }
            };
            trace.extend(local);
        }
    }

    let (mu_star, objective_star) = trace
        .iter()
        .copied()
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(a.0.partial_cmp(&b.0).unwrap()))
        .unwrap();
    Ok(MuOptimum {
        mu_star,
        objective_star,
        trace,
    })
}

/// Dense table of maximal growth and compatibility verdict over a
/// two-axis parameter grid, row-major, deterministic.
///
/// Invalid cells are recorded in place and the scan continues. The
/// verdict uses the closed-form cross-limit mismatch, which depends only
/// on viscosities and tensions.
pub fn param_scan<T: Scalar>(
    template: &ValidatedConfig<T>,
    axis1: (ScanAxis, &[T]),
    axis2: (ScanAxis, &[T]),
    k_min: T,
    k_max: T,
) -> Result<ScanTable<T>, AnalysisError> {
    if !(k_min >= T::zero() && k_min < k_max) {
        return Err(AnalysisError::InvalidRange(
            num_traits::ToPrimitive::to_f64(&k_min).unwrap_or(f64::NAN),
            num_traits::ToPrimitive::to_f64(&k_max).unwrap_or(f64::NAN),
        ));
    }
    let mut cells = Vec::with_capacity(axis1.1.len() * axis2.1.len());
    for &v1 in axis1.1 {
        for &v2 in axis2.1 {
            let mut raw = *template.raw();
            axis1.0.apply(&mut raw, v1);
            axis2.0.apply(&mut raw, v2);
            match validate(raw) {
                Err(error) => cells.push(ScanCell::Invalid { error }),
                Ok(cfg) => {
                    let (k_star, sigma_star) = max_growth(&cfg, k_min, k_max)?;
                    let tol = crate::compatibility::default_verdict_tolerance::<T>();
                    let left_sum = cfg.mu_left + cfg.mu_mid;
                    let right_sum = cfg.mu_mid + cfg.mu_right;
                    let cross =
                        (right_sum * cfg.tension_a / cfg.tension_b - left_sum).abs();
                    let verdict = if cross <= tol * (cfg.mu_left + cfg.mu_right) {
                        Verdict::Compatible
                    } else {
                        Verdict::Incompatible
                    };
                    cells.push(ScanCell::Ok {
                        sigma_star,
                        k_star,
                        verdict,
                    });
                }
            }
        }
    }
    Ok(ScanTable {
        axis1: axis1.0,
        axis1_values: axis1.1.to_vec(),
        axis2: axis2.0,
        axis2_values: axis2.1.to_vec(),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{cfg0, cfg_compatible};

    #[test]
    fn sweep_band_edges() {
        let cfg = cfg0();
        let curve = sweep(&cfg, 0.0, 2.0, 201).unwrap();
        assert_eq!(curve.k_grid.len(), 201);
        assert_eq!(curve.k_grid[0], 0.0);
        assert_eq!(*curve.k_grid.last().unwrap(), 2.0);
        assert!(curve.sigma_max > 0.0);
        assert_eq!(curve.unstable_bands.len(), 1);
        let (lo, hi) = curve.unstable_bands[0];
        assert!(lo >= 0.0 && lo < 1e-2);
        assert!((hi - 1.0).abs() < 1e-6, "band edge {hi}");
        assert!(curve.k_at_max > lo && curve.k_at_max < hi);
        // sigma_max dominates every sampled root
        for p in &curve.points {
            assert!(curve.sigma_max >= p.sigma_plus.re);
        }
    }

    #[test]
    fn sweep_stable_range() {
        let cfg = cfg0();
        let curve = sweep(&cfg, 1.5, 3.0, 64).unwrap();
        assert!(curve.points.iter().all(|p| p.sigma_plus.re <= 0.0));
        assert!(curve.unstable_bands.is_empty());
    }

    #[test]
    fn sweep_rejects_bad_input() {
        let cfg = cfg0();
        assert!(matches!(
            sweep(&cfg, 1.0, 1.0, 10),
            Err(AnalysisError::InvalidRange(..))
        ));
        assert!(matches!(
            sweep(&cfg, 0.0, 1.0, 1),
            Err(AnalysisError::TooFewSamples(1))
        ));
    }

    #[test]
    fn max_growth_matches_dense_grid() {
        let cfg = cfg0();
        let (k_star, sigma_star) = max_growth(&cfg, 0.0, 2.0).unwrap();
        assert!(k_star > 0.0 && k_star < 1.0);
        assert!(sigma_star > 0.0);
        let mut dense_best = f64::NEG_INFINITY;
        let n = 200_000;
        for i in 0..=n {
            let k = 2.0 * i as f64 / n as f64;
            dense_best = dense_best.max(growth_rates(&cfg, k).sigma_plus.re);
        }
        assert!((sigma_star - dense_best).abs() <= 1e-6 * dense_best.abs());
        assert!(sigma_star >= dense_best - 1e-14);
    }

    #[test]
    fn refinement_never_reduces_incumbent() {
        let cfg = cfg0();
        let curve = sweep(&cfg, 0.0, 2.0, 512).unwrap();
        let grid_max = curve
            .points
            .iter()
            .map(|p| p.sigma_plus.re)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(curve.sigma_max >= grid_max - 1e-14);
    }

    #[test]
    fn stable_config_has_no_growth() {
        let raw = crate::FlowConfig64 {
            tension_a: 100.0,
            tension_b: 100.0,
            ..*cfg0().raw()
        };
        let cfg = validate(raw).unwrap();
        let (_, sigma_star) = max_growth(&cfg, 0.2, 2.0).unwrap();
        assert!(sigma_star <= 0.0);
    }

    #[test]
    fn optimizer_beats_template() {
        let cfg = cfg0();
        let opt = optimize_mu(&cfg, 1.0 + 1e-6, 3.0 - 1e-6, 0.0, 2.0).unwrap();
        let raw = *cfg.raw();
        let at_template = max_growth(&cfg, 0.0, 2.0).unwrap().1;
        assert!(opt.objective_star <= at_template + 1e-14);
        // re-evaluation at mu_star reproduces the objective exactly
        let re = validate(FlowConfig { mu_mid: opt.mu_star, ..raw }).unwrap();
        let again = max_growth(&re, 0.0, 2.0).unwrap().1;
        assert_eq!(again, opt.objective_star);
        assert!(!opt.trace.is_empty());
    }

    #[test]
    fn optimizer_collapsed_bounds() {
        let cfg = cfg0();
        let opt = optimize_mu(&cfg, 1.7, 1.7, 0.0, 2.0).unwrap();
        assert_eq!(opt.mu_star, 1.7);
        assert_eq!(opt.trace.len(), 1);
    }

    #[test]
    fn optimizer_rejects_bad_bounds() {
        let cfg = cfg0();
        assert!(matches!(
            optimize_mu(&cfg, 2.0, 1.5, 0.0, 2.0),
            Err(AnalysisError::InvalidBounds(_))
        ));
        assert!(matches!(
            optimize_mu(&cfg, 0.5, 2.0, 0.0, 2.0),
            Err(AnalysisError::InvalidBounds(_))
        ));
    }

    #[test]
    fn scan_shapes_and_verdicts() {
        let cfg = cfg0();
        // 1x1 grid equals max_growth of that config
        let single = param_scan(
            &cfg,
            (ScanAxis::MuMid, &[2.0]),
            (ScanAxis::TensionB, &[1.0]),
            0.0,
            2.0,
        )
        .unwrap();
        assert_eq!(single.cells.len(), 1);
        let direct = max_growth(&cfg, 0.0, 2.0).unwrap();
        match &single.cells[0] {
            ScanCell::Ok { sigma_star, k_star, .. } => {
                assert_eq!(*sigma_star, direct.1);
                assert_eq!(*k_star, direct.0);
            }
            other => panic!("unexpected cell {other:?}"),
        }

        // 3x3 grid over (mu, T_b): row-major, the compatible cell flagged
        let compat = cfg_compatible();
        let table = param_scan(
            &compat,
            (ScanAxis::MuMid, &[1.5, 2.0, 2.5]),
            (ScanAxis::TensionB, &[1.0, 2.0, 3.0]),
            0.0,
            2.0,
        )
        .unwrap();
        assert_eq!(table.cells.len(), 9);
        for (idx, cell) in table.cells.iter().enumerate() {
            let verdict = match cell {
                ScanCell::Ok { verdict, .. } => *verdict,
                other => panic!("unexpected cell {other:?}"),
            };
            // mu = 2, T_b = 2 is the unique cell satisfying the restriction
            let expected = if idx == 4 {
                Verdict::Compatible
            } else {
                Verdict::Incompatible
            };
            assert_eq!(verdict, expected, "cell {idx}");
        }
    }

    #[test]
    fn scan_reports_invalid_cells_and_continues() {
        let cfg = cfg0();
        let table = param_scan(
            &cfg,
            (ScanAxis::MuMid, &[0.5, 2.0]),
            (ScanAxis::TensionB, &[1.0]),
            0.0,
            2.0,
        )
        .unwrap();
        assert!(matches!(table.cells[0], ScanCell::Invalid { .. }));
        assert!(matches!(table.cells[1], ScanCell::Ok { .. }));
    }
}
