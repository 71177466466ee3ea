//! Property-based invariants of the dispersion relation: exact scaling
//! covariances and structural facts that must hold for every valid
//! configuration, not just hand-picked ones.

use proptest::prelude::*;

use trilayer::dispersion::{decay_factor, growth_rates};
use trilayer::model::{validate, ValidatedConfig};
use trilayer::FlowConfig64;

fn configs() -> impl Strategy<Value = ValidatedConfig<f64>> {
    (
        0.1..5.0f64,   // mu_left
        1.05..4.0f64,  // mu_mid / mu_left
        1.05..4.0f64,  // mu_right / mu_mid
        0.1..5.0f64,   // speed
        0.1..5.0f64,   // tension_a
        0.1..5.0f64,   // tension_b
        -1.0..0.0f64,  // b
        0.05..3.0f64,  // layer length
    )
        .prop_map(|(ml, r1, r2, u, ta, tb, b, len)| {
            validate(FlowConfig64 {
                mu_left: ml,
                mu_mid: ml * r1,
                mu_right: ml * r1 * r2,
                speed: u,
                tension_a: ta,
                tension_b: tb,
                a: b - len,
                b,
                relax_ordering: false,
            })
            .unwrap()
        })
}

proptest! {
    #[test]
    fn roots_ordered_and_coupling_in_range(cfg in configs(), k in 1e-3..30.0f64) {
        let pt = growth_rates(&cfg, k);
        prop_assert!(pt.sigma_plus.re >= pt.sigma_minus.re);
        let q = decay_factor(&cfg, k);
        prop_assert!(q > 0.0 && q <= 1.0);
        prop_assert!(pt.alpha < 0.0);
    }

    // (mu, T) -> (lambda mu, lambda T) leaves both driving terms fixed and
    // rescales the quadratic so every growth rate picks up a factor
    // 1/lambda
    #[test]
    fn viscosity_tension_scaling_covariance(
        cfg in configs(),
        k in 1e-3..30.0f64,
        lambda in 0.2..8.0f64,
    ) {
        let raw = cfg.raw();
        let scaled = validate(FlowConfig64 {
            mu_left: raw.mu_left * lambda,
            mu_mid: raw.mu_mid * lambda,
            mu_right: raw.mu_right * lambda,
            tension_a: raw.tension_a * lambda,
            tension_b: raw.tension_b * lambda,
            ..*raw
        })
        .unwrap();
        let base = growth_rates(&cfg, k);
        let pt = growth_rates(&scaled, k);
        let tol = 1e-10 * (base.sigma_plus.norm() + base.sigma_minus.norm());
        prop_assert!((pt.sigma_plus * lambda - base.sigma_plus).norm() <= tol);
        prop_assert!((pt.sigma_minus * lambda - base.sigma_minus).norm() <= tol);
    }

    // (U, T) -> (lambda U, lambda T) is a rescaling of time: every growth
    // rate picks up a factor lambda
    #[test]
    fn rate_scaling_covariance(
        cfg in configs(),
        k in 1e-3..30.0f64,
        lambda in 0.2..8.0f64,
    ) {
        let raw = cfg.raw();
        let scaled = validate(FlowConfig64 {
            speed: raw.speed * lambda,
            tension_a: raw.tension_a * lambda,
            tension_b: raw.tension_b * lambda,
            ..*raw
        })
        .unwrap();
        let base = growth_rates(&cfg, k);
        let pt = growth_rates(&scaled, k);
        let tol = 1e-10 * lambda * (base.sigma_plus.norm() + base.sigma_minus.norm());
        prop_assert!((pt.sigma_plus - base.sigma_plus * lambda).norm() <= tol);
        prop_assert!((pt.sigma_minus - base.sigma_minus * lambda).norm() <= tol);
    }
}
