//! Upper incomplete gamma Γ(z, x) for complex z and real x > 0, by the
//! lower-gamma power series below the switch point and a modified-Lentz
//! continued fraction above it. This is the smoothing kernel of the
//! approximate functional equation, so the hot path accepts a precomputed
//! Γ(z) to avoid re-evaluating log-gamma for every summand.

use super::gamma::loggamma;
use super::ZetaError;
use crate::eval::ComplexEval;
use num_complex::Complex64;
use num_traits::Float;

const MAX_SERIES_TERMS: usize = 2000;
const MAX_CF_ITERS: usize = 3000;
const TINY: f64 = 1e-290;

/// Where the power series hands over to the continued fraction.
#[inline]
pub(crate) fn series_applies(z: Complex64, x: f64) -> bool {
    if x >= z.norm() + 2.0 {
        return false;
    }
    // the series divides by z, z+1, ...: step aside near nonpositive integers
    if z.im.abs() < 0.05 {
        let r = z.re.round();
        if r <= 0.0 && (z.re - r).abs() < 0.05 {
            return false;
        }
    }
    true
}

/// Σ_{k≥0} x^k / (z (z+1) ⋯ (z+k)); γ(z, x) = x^z e^{-x} · Σ.
fn lower_series_sum(z: Complex64, x: f64) -> Result<(Complex64, f64), ZetaError> {
    let mut term = 1.0 / z;
    let mut sum = term;
    let mut sum_abs = term.norm();
    for k in 1..MAX_SERIES_TERMS {
        term *= x / (z + k as f64);
        sum += term;
        sum_abs += term.norm();
        if term.norm() <= sum.norm() * 1e-18 + 1e-320 {
            return Ok((sum, sum_abs));
        }
    }
    Err(ZetaError::Precision {
        what: "incomplete gamma series did not converge",
        achieved: (1.0 / MAX_SERIES_TERMS as f64),
    })
}

/// Continued fraction for Γ(z, x): e^{-x} x^z / (x+1-z - 1(1-z)/(x+3-z - ...)).
fn upper_cf(z: Complex64, x: f64) -> Result<(Complex64, usize), ZetaError> {
    let mut b = x + 1.0 - z;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = if b.norm() < TINY {
        Complex64::new(1.0 / TINY, 0.0)
    } else {
        1.0 / b
    };
    let mut h = d;
    for i in 1..MAX_CF_ITERS {
        let an = -(i as f64) * (Complex64::new(i as f64, 0.0) - z);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = Complex64::new(TINY, 0.0);
        }
        c = b + an / c;
        if c.norm() < TINY {
            c = Complex64::new(TINY, 0.0);
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            return Ok((h, i));
        }
    }
    Err(ZetaError::Precision {
        what: "incomplete gamma continued fraction did not converge",
        achieved: f64::NAN,
    })
}

/// x^z e^{-x} without intermediate overflow for the x, |Im z| ranges in use.
#[inline]
fn prefactor(z: Complex64, x: f64) -> Complex64 {
    // exp(z ln x - x)
    let w = z * x.ln() - x;
    w.exp()
}

pub(crate) enum IncGammaPath {
    Series,
    ContinuedFraction,
}

pub(crate) fn inc_gamma_upper_impl(
    z: Complex64,
    x: f64,
    full_gamma: Option<Complex64>,
    path: IncGammaPath,
) -> Result<ComplexEval, ZetaError> {
    match path {
        IncGammaPath::Series => {
            let gamma_z = match full_gamma {
                Some(g) => g,
                None => loggamma(z)?.exp(),
            };
            let (sum, sum_abs) = lower_series_sum(z, x)?;
            let pre = prefactor(z, x);
            let lower = pre * sum;
            let value = gamma_z - lower;
            let err = f64::EPSILON * (gamma_z.norm() + pre.norm() * sum_abs) * 8.0;
            Ok(ComplexEval::new(value, err))
        }
        IncGammaPath::ContinuedFraction => {
            let (h, iters) = upper_cf(z, x)?;
            let value = prefactor(z, x) * h;
            let err = f64::EPSILON * value.norm() * (8.0 + iters as f64 * 0.25);
            Ok(ComplexEval::new(value, err))
        }
    }
}

/// Upper incomplete gamma Γ(z, x), x > 0 (x = 0 is accepted when Re z > 0,
/// where it degenerates to Γ(z)).
pub fn inc_gamma_upper(z: Complex64, x: f64) -> Result<ComplexEval, ZetaError> {
    if x < 0.0 || !x.is_finite() {
        return Err(ZetaError::Domain {
            what: "inc_gamma_upper requires x >= 0",
        });
    }
    if x == 0.0 {
        if z.re > 0.0 {
            return Ok(ComplexEval::rounded(loggamma(z)?.exp()));
        }
        return Err(ZetaError::Domain {
            what: "inc_gamma_upper at x = 0 requires Re z > 0",
        });
    }
    if x > 700.0 {
        // e^{-x} x^z underflows; the value is indistinguishable from zero
        return Ok(ComplexEval::new(
            Complex64::new(0.0, 0.0),
            f64::MIN_POSITIVE,
        ));
    }
    let path = if series_applies(z, x) {
        IncGammaPath::Series
    } else {
        IncGammaPath::ContinuedFraction
    };
    inc_gamma_upper_impl(z, x, None, path)
}

/// Hot-path variant with Γ(z) precomputed by the caller (z is fixed across
/// the coefficient sum of an approximate functional equation).
#[inline]
pub(crate) fn inc_gamma_upper_hot(
    z: Complex64,
    x: f64,
    full_gamma: Complex64,
) -> Result<Complex64, ZetaError> {
    if x > 700.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let path = if series_applies(z, x) {
        IncGammaPath::Series
    } else {
        IncGammaPath::ContinuedFraction
    };
    Ok(inc_gamma_upper_impl(z, x, Some(full_gamma), path)?.value)
}
