//! Independent oracles used by the integration tests. Nothing in here calls
//! into the closed-form evaluators it is used to check.
#![allow(dead_code)]

use std::f64::consts::PI;

use supcal::PriorSpec;

/// Gauss–Legendre nodes and weights on [−1, 1] by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite Gauss–Legendre integral of `f` over [a, b].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gauss_legendre(20);
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let lo = a + p as f64 * h;
            let mid = lo + 0.5 * h;
            rule.iter()
                .map(|&(x, w)| w * f(mid + 0.5 * h * x))
                .sum::<f64>()
                * 0.5
                * h
        })
        .sum()
}

pub fn normal_density(x: f64, mean: f64, sd: f64) -> f64 {
    let z = (x - mean) / sd;
    (-0.5 * z * z).exp() / (sd * (2.0 * PI).sqrt())
}

/// BF₀₁ from numerically integrating the likelihood against the prior.
pub fn quadrature_bf01(estimate: f64, se: f64, prior: &PriorSpec, theta0: f64) -> f64 {
    let (center, spread) = match *prior {
        PriorSpec::Normal { mean, sd } => (mean, sd),
        PriorSpec::LocalNormal { sd } => (theta0, sd),
        PriorSpec::NonlocalNormalMoment { scale } => (theta0, scale),
    };
    let prior_density = |t: f64| match *prior {
        PriorSpec::Normal { mean, sd } => normal_density(t, mean, sd),
        PriorSpec::LocalNormal { sd } => normal_density(t, theta0, sd),
        PriorSpec::NonlocalNormalMoment { scale } => {
            normal_density(t, theta0, scale) * (t - theta0).powi(2) / (scale * scale)
        }
    };
    let prec = 1.0 / (se * se) + 1.0 / (spread * spread);
    let post_mean = (estimate / (se * se) + center / (spread * spread)) / prec;
    let post_sd = prec.recip().sqrt();
    let (a, b) = (post_mean - 40.0 * post_sd, post_mean + 40.0 * post_sd);
    let marginal = integrate(
        |t| normal_density(estimate, t, se) * prior_density(t),
        a,
        b,
        400,
    );
    normal_density(estimate, theta0, se) / marginal
}

/// Bisection root of an increasing function on [lo, hi].
pub fn bisect_increasing<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * mid.abs().max(1e-300) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Standard normal CDF by quadrature of the density, Φ(z) = ½ + ∫₀ᶻ φ.
pub fn quadrature_norm_cdf(z: f64) -> f64 {
    0.5 + integrate(|t| normal_density(t, 0.0, 1.0), 0.0, z, 200)
}

/// Standard normal quantile by bisection on the quadrature CDF.
pub fn oracle_quantile(p: f64) -> f64 {
    bisect_increasing(|z| quadrature_norm_cdf(z) - p, -10.0, 10.0)
}

pub fn round2(x: f64) -> f64 {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// RECOVERY dexamethasone trial: HR 0.83 (95% CI 0.75 to 0.93) on the log scale.
pub fn recovery_log_hr() -> (f64, f64) {
    let z975 = oracle_quantile(0.975);
    (0.83f64.ln(), (0.93f64.ln() - 0.75f64.ln()) / (2.0 * z975))
}
