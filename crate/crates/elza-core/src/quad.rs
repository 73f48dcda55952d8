//! Adaptive quadrature helpers shared by the prediction formulas and
//! the oracle-style cross-checks in the test suites.

use alloc::vec::Vec;
use num_traits::Float;

/// Gauss–Legendre nodes/weights on [-1, 1], 7-point rule.
const GL7_X: [f64; 7] = [
    -0.949107912342758524526189684048,
    -0.741531185599394439863864773281,
    -0.405845151377397166906606412077,
    0.0,
    0.405845151377397166906606412077,
    0.741531185599394439863864773281,
    0.949107912342758524526189684048,
];
const GL7_W: [f64; 7] = [
    0.129484966168869693270611432679,
    0.279705391489276667901467771424,
    0.381830050505118944950369775489,
    0.417959183673469387755102040816,
    0.381830050505118944950369775489,
    0.279705391489276667901467771424,
    0.129484966168869693270611432679,
];

/// Fixed 7-point Gauss–Legendre on [a, b].
pub fn gauss7<F: FnMut(f64) -> f64>(a: f64, b: f64, mut f: F) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = 0.0;
    for i in 0..7 {
        s += GL7_W[i] * f(c + h * GL7_X[i]);
    }
    s * h
}

/// Adaptive Simpson with absolute tolerance. Robust for integrands with a
/// modest number of jump discontinuities: the recursion isolates jumps and
/// the residual error per jump is bounded by |jump| * width, which the
/// depth cap drives below `tol`.
pub fn adaptive_simpson<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    struct Frame {
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(fa, fm, fb, a, b);
    let mut stack = Vec::with_capacity(64);
    stack.push(Frame {
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        tol,
        depth: 0,
    });
    let mut total = 0.0;
    while let Some(fr) = stack.pop() {
        let m = 0.5 * (fr.a + fr.b);
        let lm = 0.5 * (fr.a + m);
        let rm = 0.5 * (m + fr.b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fr.fa, flm, fr.fm, fr.a, m);
        let right = simpson(fr.fm, frm, fr.fb, m, fr.b);
        let delta = left + right - fr.whole;
        if fr.depth >= max_depth || delta.abs() <= 15.0 * fr.tol {
            total += left + right + delta / 15.0;
        } else {
            stack.push(Frame {
                a: fr.a,
                b: m,
                fa: fr.fa,
                fm: flm,
                fb: fr.fm,
                whole: left,
                tol: fr.tol * 0.5,
                depth: fr.depth + 1,
            });
            stack.push(Frame {
                a: m,
                b: fr.b,
                fa: fr.fm,
                fm: frm,
                fb: fr.fb,
                whole: right,
                tol: fr.tol * 0.5,
                depth: fr.depth + 1,
            });
        }
    }
    total
}

/// Adaptive Gauss–Legendre by interval halving until two levels agree to
/// `rel_tol` (with an absolute floor). Intended for smooth integrands.
pub fn adaptive_gauss<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_floor: f64,
    max_depth: u32,
) -> f64 {
    fn recurse<F: FnMut(f64) -> f64>(
        f: &mut F,
        a: f64,
        b: f64,
        coarse: f64,
        rel_tol: f64,
        abs_floor: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let left = gauss7(a, m, &mut *f);
        let right = gauss7(m, b, &mut *f);
        let fine = left + right;
        let err = (fine - coarse).abs();
        if depth == 0 || err <= rel_tol * fine.abs().max(abs_floor) {
            fine
        } else {
            recurse(f, a, m, left, rel_tol, abs_floor, depth - 1)
                + recurse(f, m, b, right, rel_tol, abs_floor, depth - 1)
        }
    }
    let coarse = gauss7(a, b, &mut f);
    recurse(&mut f, a, b, coarse, rel_tol, abs_floor, max_depth)
}

/// Brent root refinement on a bracketing interval [a, b] with f(a)f(b) <= 0.
/// Returns the abscissa located to `xtol`.
pub fn brent_root<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, xtol: f64) -> f64 {
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    debug_assert!(fa * fb < 0.0, "brent_root requires a sign change");
    if fa.abs() < fb.abs() {
        core::mem::swap(&mut a, &mut b);
        core::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut mflag = true;
    let mut d = a;
    for _ in 0..200 {
        if fb == 0.0 || (b - a).abs() < xtol {
            return b;
        }
        let mut s = if fa != fc && fb != fc {
            // inverse quadratic interpolation
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            b - fb * (b - a) / (fb - fa)
        };
        let lo = (3.0 * a + b) / 4.0;
        let cond1 = !((s > lo.min(b) && s < lo.max(b)) || (s > b.min(lo) && s < b.max(lo)));
        let cond2 = mflag && (s - b).abs() >= (b - c).abs() / 2.0;
        let cond3 = !mflag && (s - b).abs() >= (c - d).abs() / 2.0;
        let cond4 = mflag && (b - c).abs() < xtol;
        let cond5 = !mflag && (c - d).abs() < xtol;
        if cond1 || cond2 || cond3 || cond4 || cond5 {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        let fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if fa * fs < 0.0 {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            core::mem::swap(&mut a, &mut b);
            core::mem::swap(&mut fa, &mut fb);
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_integrates_polynomials_exactly() {
        // degree 13 is exact for 7-point Gauss
        let v = gauss7(0.0, 1.0, |x| x.powi(9));
        assert!((v - 0.1).abs() < 1e-14);
    }

    #[test]
    fn simpson_handles_step_function() {
        // step at sqrt(2)/2, irrational so no node coincidence
        let c = core::f64::consts::FRAC_1_SQRT_2;
        let v = adaptive_simpson(|x| if x < c { 1.0 } else { 3.0 }, 0.0, 1.0, 1e-11, 52);
        let exact = c + 3.0 * (1.0 - c);
        assert!((v - exact).abs() < 1e-9, "got {v}, want {exact}");
    }

    #[test]
    fn brent_finds_cos_root() {
        let r = brent_root(|x| x.cos(), 1.0, 2.0, 1e-13);
        assert!((r - core::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }
}
