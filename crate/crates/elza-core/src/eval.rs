//! Error-carrying complex values and compensated summation.

use num_complex::Complex64;
use num_traits::Float;

/// A complex value together with a conservative absolute error bound.
///
/// Arithmetic on `ComplexEval` propagates bounds first-order: the bound of a
/// product includes the cross terms, the bound of a sum is the sum of bounds.
/// Bounds are kept finite; an infinite or NaN bound marks the value unusable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEval {
    pub value: Complex64,
    pub abs_error: f64,
}

impl ComplexEval {
    pub fn new(value: Complex64, abs_error: f64) -> Self {
        Self { value, abs_error }
    }

    pub fn exact(value: Complex64) -> Self {
        Self {
            value,
            abs_error: 0.0,
        }
    }

    /// Value tainted with relative machine error of its own magnitude.
    pub fn rounded(value: Complex64) -> Self {
        Self {
            value,
            abs_error: value.norm() * f64::EPSILON,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.value.re.is_finite() && self.value.im.is_finite() && self.abs_error.is_finite()
    }

    pub fn add(self, rhs: Self) -> Self {
        Self::new(self.value + rhs.value, self.abs_error + rhs.abs_error)
    }

    pub fn sub(self, rhs: Self) -> Self {
        Self::new(self.value - rhs.value, self.abs_error + rhs.abs_error)
    }

    pub fn mul(self, rhs: Self) -> Self {
        let v = self.value * rhs.value;
        let e = self.abs_error * rhs.value.norm()
            + rhs.abs_error * self.value.norm()
            + self.abs_error * rhs.abs_error
            + v.norm() * f64::EPSILON;
        Self::new(v, e)
    }

    pub fn div(self, rhs: Self) -> Self {
        let denom = rhs.value.norm();
        let v = self.value / rhs.value;
        // |a/b - a'/b'| <= (|da| + |a/b||db|) / (|b| - |db|), first order
        let slack = (denom - rhs.abs_error).max(denom * 0.5);
        let e = (self.abs_error + v.norm() * rhs.abs_error) / slack + v.norm() * f64::EPSILON;
        Self::new(v, e)
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.value * k, self.abs_error * k.abs())
    }

    pub fn neg(self) -> Self {
        Self::new(-self.value, self.abs_error)
    }
}

/// Neumaier compensated accumulator for f64 sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanComplex {
    re: Kahan,
    im: Kahan,
}

impl KahanComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn total(&self) -> Complex64 {
        Complex64::new(self.re.total(), self.im.total())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_recovers_cancellation() {
        let mut k = Kahan::new();
        k.add(1.0);
        for _ in 0..10_000 {
            k.add(1e-17);
        }
        k.add(-1.0);
        assert!((k.total() - 1e-13).abs() < 1e-24);
    }

    #[test]
    fn eval_error_propagation_is_conservative() {
        let a = ComplexEval::new(Complex64::new(2.0, 0.0), 1e-12);
        let b = ComplexEval::new(Complex64::new(3.0, 4.0), 1e-13);
        let p = a.mul(b);
        assert!(p.abs_error >= 5.0 * 1e-12);
        assert!(p.is_finite());
    }
}
