//! The counting laboratory: sphere sizes, entropy-style bounds, Stirling
//! sandwiches, Cheeger cuts and separator audits of concrete embeddings.

mod audit;
mod cheeger;
mod report;

pub use audit::{separation_audit, AuditData, AuditOutcome};
pub use cheeger::{cheeger_exact, cheeger_spectral_lower_bound, CheegerCut};
pub use report::BoundsReport;

use crate::error::{Error, Result};
use num::bigint::BigUint;
use num::traits::{One, ToPrimitive, Zero};

/// `e / sqrt(2 pi)`, the constant of the Stirling-based binomial bound.
pub fn stirling_constant() -> f64 {
    std::f64::consts::E / (2.0 * std::f64::consts::PI).sqrt()
}

/// `sqrt(2) e / sqrt(pi)`, the central-binomial envelope factor.
pub fn central_binomial_factor() -> f64 {
    std::f64::consts::SQRT_2 * std::f64::consts::E / std::f64::consts::PI.sqrt()
}

/// Exact binomials `C(d, 0..=d)` by the Pascal recurrence; their sum is
/// checked against `2^d`.
pub fn sphere_sizes(d: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    let total: BigUint = row.iter().sum();
    debug_assert_eq!(total, BigUint::one() << d);
    row
}

/// Exact sphere sizes `C(n, r) k^r` for `r = 0..=n` around the origin of a
/// product of `n` complete graphs on `k + 1` vertices; the sum is checked
/// against `(k + 1)^n`.
pub fn product_sphere_sizes(n: usize, k: usize) -> Result<Vec<BigUint>> {
    if k < 1 {
        return Err(Error::usage("side count k must be at least 1"));
    }
    let binomials = sphere_sizes(n);
    let mut out = Vec::with_capacity(n + 1);
    let mut k_pow = BigUint::one();
    for b in binomials {
        out.push(&b * &k_pow);
        k_pow *= k;
    }
    let total: BigUint = out.iter().sum();
    debug_assert_eq!(total, num::pow::pow(BigUint::from(k + 1), n));
    Ok(out)
}

/// `f(a) = k^a / (a^a (1-a)^(1-a))`, evaluated in log space.
pub fn entropy_bound(a: f64, k: usize) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::usage(format!("a = {a} outside (0, 1)")));
    }
    if k < 1 {
        return Err(Error::usage("k must be at least 1"));
    }
    let ln = a * (k as f64).ln() - a * a.ln() - (1.0 - a) * (1.0 - a).ln();
    Ok(ln.exp())
}

/// The maximum of `f` on `(0, 1)` with its argmax: `(k + 1, k / (k + 1))`,
/// cross-checked on a millesimal grid before being returned.
pub fn entropy_max_and_argmax(k: usize) -> Result<(f64, f64)> {
    if k < 1 {
        return Err(Error::usage("k must be at least 1"));
    }
    let mut grid_max = f64::NEG_INFINITY;
    let mut grid_arg = 0.0;
    for i in 1..1000 {
        let a = i as f64 / 1000.0;
        let v = entropy_bound(a, k)?;
        if v > grid_max {
            grid_max = v;
            grid_arg = a;
        }
    }
    let max = (k + 1) as f64;
    let argmax = k as f64 / (k + 1) as f64;
    if grid_max > max + 1e-9 || (grid_arg - argmax).abs() > 1e-3 {
        return Err(Error::invalid(format!(
            "grid check failed for k = {k}: max {grid_max} at {grid_arg}"
        )));
    }
    Ok((max, argmax))
}

fn ln_factorial_lower(x: usize) -> f64 {
    let xf = x as f64;
    0.5 * (2.0 * std::f64::consts::PI * xf).ln() + xf * (xf.ln() - 1.0) + 1.0 / (12.0 * xf + 1.0)
}

fn ln_factorial_upper(x: usize) -> f64 {
    let xf = x as f64;
    0.5 * (2.0 * std::f64::consts::PI * xf).ln() + xf * (xf.ln() - 1.0) + 1.0 / (12.0 * xf)
}

fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

fn binomial(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    let mut out = BigUint::one();
    for i in 0..m.min(n - m) {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// The factorial sandwich applied to `C(n, an) k^(an)`: returns exact
/// lower and upper bounds and checks that the exact integer sits between
/// them. `a` is the rational `a_num / a_den`; `a n` must be an integer in
/// `[1, n - 1]`.
pub fn stirling_binomial_bound(
    n: usize,
    a_num: u64,
    a_den: u64,
    k: usize,
) -> Result<(f64, f64)> {
    if a_den == 0 || a_num == 0 || a_num >= a_den {
        return Err(Error::usage("a must be a rational strictly between 0 and 1"));
    }
    if (n as u128 * a_num as u128) % a_den as u128 != 0 {
        return Err(Error::usage(format!("a*n = {n}*{a_num}/{a_den} is not an integer")));
    }
    let m = (n as u128 * a_num as u128 / a_den as u128) as usize;
    if m < 1 || m > n - 1 {
        return Err(Error::usage(format!("a*n = {m} outside [1, {}]", n - 1)));
    }
    let ln_k_pow = m as f64 * (k as f64).ln();
    let lower = (ln_factorial_lower(n) - ln_factorial_upper(m) - ln_factorial_upper(n - m)
        + ln_k_pow)
        .exp();
    let upper = (ln_factorial_upper(n) - ln_factorial_lower(m) - ln_factorial_lower(n - m)
        + ln_k_pow)
        .exp();
    let exact = big_to_f64(&(binomial(n, m) * num::pow::pow(BigUint::from(k), m)));
    if !(lower <= exact && exact <= upper) {
        return Err(Error::invalid(format!(
            "sandwich violated: {lower} <= {exact} <= {upper} fails"
        )));
    }
    Ok((lower, upper))
}

/// Parameters of the generalized constant computation.
#[derive(Clone, Copy, Debug)]
pub struct GeneralizedParams {
    pub k: usize,
    /// Threshold in `(k/(k+1), 1)`; defaults to the midpoint of that range.
    pub k_prime: Option<f64>,
}

/// Evaluates the non-universality constants for dimension `d` and Cheeger
/// constant `h`, optionally with the generalized `k`-ary quantities.
pub fn nonuniversality_constants(
    d: usize,
    h: f64,
    generalized: Option<GeneralizedParams>,
) -> Result<BoundsReport> {
    if d < 1 {
        return Err(Error::usage("d must be at least 1"));
    }
    if !(h > 0.0 && h <= 1.0) {
        return Err(Error::usage(format!("h = {h} outside (0, 1]")));
    }
    let mut report = BoundsReport::new("nonuniversality-constants");
    report.push("d", d);
    report.push_f64("h", h);
    let c = stirling_constant();
    let factor = central_binomial_factor();
    report.push_f64("c", c);
    report.push_f64("sqrt2e_over_sqrtpi", factor);
    let big_c = 10.0 * factor / h;
    report.push_f64("C", big_c);
    let scale = 2f64.powi(d as i32) / (d as f64).sqrt();
    report.push_f64("n_interval_low", big_c * scale);
    report.push_f64("n_interval_high", 2.0 * big_c * scale);
    report.push_f64("edge_bound", 3.0 * big_c * scale);

    if let Some(params) = generalized {
        let k = params.k;
        if k < 1 {
            return Err(Error::usage("generalized k must be at least 1"));
        }
        let peak = k as f64 / (k + 1) as f64;
        let k_prime = params.k_prime.unwrap_or((peak + 1.0) / 2.0);
        if !(k_prime > peak && k_prime < 1.0) {
            return Err(Error::usage(format!(
                "k' = {k_prime} outside ({peak}, 1)"
            )));
        }
        let m = entropy_bound(k_prime, k)?.max(entropy_bound(1.0 - k_prime, k)?);
        // Suprema over n of the two envelope sequences; both decay
        // geometrically, so a bounded scan reaches the maximum.
        let ratio1 = k as f64 / (k + 1) as f64;
        let c1 = (1..=4000)
            .map(|n| (n as f64).sqrt() * ratio1.powi(n))
            .fold(f64::NEG_INFINITY, f64::max);
        let ratio2 = m / (k + 1) as f64;
        let c2 = (2..=4000)
            .map(|n| c * ratio2.powi(n) * n as f64 / ((n - 1) as f64).sqrt())
            .fold(f64::NEG_INFINITY, f64::max);
        report.push("k", k);
        report.push_f64("k_prime", k_prime);
        report.push_f64("m", m);
        report.push_f64("C1", c1);
        report.push_f64("C2", c2);
        report.push_f64("C3", c / (k_prime * (1.0 - k_prime)));
        report.push_f64("m_upper_bound", (k + 1) as f64);
    }
    Ok(report)
}
