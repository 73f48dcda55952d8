//! Complex log-gamma, digamma and trigamma by upward recurrence into the
//! Stirling regime. The principal branch of `loggamma` is continuous along
//! vertical lines in the right half plane and along horizontal paths in the
//! open upper half plane, which is what the phase bookkeeping of the Hardy
//! functions and the argument-principle zero counts rely on.

use super::ZetaError;
use num_complex::Complex64;
use num_traits::Float;

/// B_2, B_4, ..., B_50.
pub(crate) const BERNOULLI_2K: [f64; 25] = [
    0.166666666666666667,
    -0.0333333333333333333,
    0.0238095238095238095,
    -0.0333333333333333333,
    0.0757575757575757576,
    -0.253113553113553114,
    1.16666666666666667,
    -7.09215686274509804,
    54.9711779448621554,
    -529.124242424242424,
    6192.1231884057971,
    -86580.2531135531136,
    1425517.16666666667,
    -27298231.067816092,
    601580873.900642368,
    -15116315767.0921569,
    429614643061.166667,
    -13711655205088.3328,
    488332318973593.167,
    -19296579341940068.1,
    841693047573682615.0,
    -4.03380718540594554e19,
    2.11507486380819916e21,
    -1.20866265222965259e23,
    7.50086674607696437e24,
];

const LN_SQRT_2PI: f64 = 0.918938533204672741780329736406;

/// Real part threshold beyond which the Stirling series is applied directly.
const STIRLING_RE: f64 = 12.0;

fn near_nonpositive_integer(z: Complex64) -> bool {
    z.im.abs() < 1e-12 && z.re < 0.5 && (z.re - z.re.round()).abs() < 1e-12 && z.re.round() <= 0.0
}

/// Principal-branch log Γ(z).
///
/// Valid away from the nonpositive real axis; arguments there return a pole
/// error. Accuracy is close to machine precision for |z| up to ~10^8.
pub fn loggamma(z: Complex64) -> Result<Complex64, ZetaError> {
    if near_nonpositive_integer(z) {
        return Err(ZetaError::Pole { at: z });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < STIRLING_RE {
        if w.norm() < 1e-290 {
            return Err(ZetaError::Pole { at: z });
        }
        shift += w.ln();
        w += 1.0;
    }
    let winv2 = 1.0 / (w * w);
    let mut series = Complex64::new(0.0, 0.0);
    let mut wpow = 1.0 / w;
    for (k, &b2k) in BERNOULLI_2K.iter().enumerate().take(9) {
        let k2 = (2 * k + 2) as f64;
        series += b2k / (k2 * (k2 - 1.0)) * wpow;
        wpow *= winv2;
    }
    Ok((w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - shift)
}

/// Digamma Ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: Complex64) -> Result<Complex64, ZetaError> {
    if near_nonpositive_integer(z) {
        return Err(ZetaError::Pole { at: z });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < STIRLING_RE {
        if w.norm() < 1e-290 {
            return Err(ZetaError::Pole { at: z });
        }
        shift += 1.0 / w;
        w += 1.0;
    }
    let winv2 = 1.0 / (w * w);
    let mut series = Complex64::new(0.0, 0.0);
    let mut wpow = winv2;
    for (k, &b2k) in BERNOULLI_2K.iter().enumerate().take(9) {
        let k2 = (2 * k + 2) as f64;
        series += b2k / k2 * wpow;
        wpow *= winv2;
    }
    Ok(w.ln() - 0.5 / w - series - shift)
}

/// Trigamma Ψ'(z).
pub fn trigamma(z: Complex64) -> Result<Complex64, ZetaError> {
    if near_nonpositive_integer(z) {
        return Err(ZetaError::Pole { at: z });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < STIRLING_RE {
        if w.norm() < 1e-290 {
            return Err(ZetaError::Pole { at: z });
        }
        shift += 1.0 / (w * w);
        w += 1.0;
    }
    let winv = 1.0 / w;
    let winv2 = winv * winv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut wpow = winv2 * winv;
    for &b2k in BERNOULLI_2K.iter().take(9) {
        series += b2k * wpow;
        wpow *= winv2;
    }
    Ok(winv + 0.5 * winv2 + series + shift)
}

/// |Γ(z)| through exp(Re log Γ).
pub fn gamma_abs(z: Complex64) -> Result<f64, ZetaError> {
    Ok(loggamma(z)?.re.exp())
}
