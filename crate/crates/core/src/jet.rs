//! Truncated Taylor series in one variable.
//!
//! A [`Jet`] holds `f(x₀ + h) = Σ cᵢ hⁱ` for `i < ORDER`. Arithmetic follows
//! the usual power-series recurrences, so derivatives of composite
//! expressions (square roots, quotients, products of metric coefficients)
//! come out exactly up to rounding, with no finite differencing.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of stored coefficients (derivatives up to order `ORDER - 1`).
pub const ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet(pub [f64; ORDER]);

impl Jet {
    pub const ZERO: Jet = Jet([0.0; ORDER]);

    pub fn constant(c: f64) -> Self {
        let mut j = Self::ZERO;
        j.0[0] = c;
        j
    }

    /// The independent variable at `x0`.
    pub fn variable(x0: f64) -> Self {
        let mut j = Self::constant(x0);
        j.0[1] = 1.0;
        j
    }

    pub fn value(&self) -> f64 {
        self.0[0]
    }

    /// `n`-th derivative at the expansion point.
    pub fn derivative_value(&self, n: usize) -> f64 {
        let fact: f64 = (1..=n).map(|i| i as f64).product();
        self.0[n] * fact
    }

    /// Jet of `f'`; the top coefficient is lost to truncation and set to 0.
    pub fn deriv(&self) -> Self {
        let mut out = Self::ZERO;
        for i in 1..ORDER {
            out.0[i - 1] = self.0[i] * i as f64;
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        Jet(self.0.map(|c| c * s))
    }

    pub fn recip(&self) -> Self {
        let c = &self.0;
        let mut r = [0.0; ORDER];
        r[0] = 1.0 / c[0];
        for n in 1..ORDER {
            let s: f64 = (1..=n).map(|k| c[k] * r[n - k]).sum();
            r[n] = -s * r[0];
        }
        Jet(r)
    }

    /// Principal square root; requires a positive value.
    pub fn sqrt(&self) -> Self {
        let c = &self.0;
        let mut r = [0.0; ORDER];
        r[0] = c[0].sqrt();
        for n in 1..ORDER {
            let s: f64 = (1..n).map(|k| r[k] * r[n - k]).sum();
            r[n] = (c[n] - s) / (2.0 * r[0]);
        }
        Jet(r)
    }

    pub fn abs(&self) -> Self {
        if self.0[0] < 0.0 {
            -*self
        } else {
            *self
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        Jet(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        Jet(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let mut r = [0.0; ORDER];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate().take(ORDER - i) {
                r[i + j] += a * b;
            }
        }
        Jet(r)
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Jet) -> Jet {
        self * rhs.recip()
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, rhs: f64) -> Jet {
        self.0[0] += rhs;
        self
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl std::iter::Sum for Jet {
    fn sum<I: Iterator<Item = Jet>>(iter: I) -> Jet {
        iter.fold(Jet::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn product_and_quotient_rules() {
        let x = Jet::variable(2.0);
        let f = x * x * x; // x³
        assert!(close(f.derivative_value(1), 12.0));
        assert!(close(f.derivative_value(2), 12.0));
        assert!(close(f.derivative_value(3), 6.0));
        let g = Jet::constant(1.0) / x; // 1/x
        assert!(close(g.derivative_value(1), -0.25));
        assert!(close(g.derivative_value(2), 0.25));
        assert!(close(g.derivative_value(3), -6.0 / 16.0));
    }

    #[test]
    fn square_root_series() {
        let x = Jet::variable(4.0);
        let r = x.sqrt();
        assert!(close(r.value(), 2.0));
        assert!(close(r.derivative_value(1), 0.25));
        assert!(close(r.derivative_value(2), -1.0 / 32.0));
        let back = r * r;
        for i in 0..ORDER {
            assert!(close(back.0[i], x.0[i]));
        }
    }

    #[test]
    fn deriv_shifts_coefficients() {
        let x = Jet::variable(1.5);
        let f = x * x;
        let d = f.deriv();
        assert!(close(d.value(), 3.0));
        assert!(close(d.derivative_value(1), 2.0));
    }
}
