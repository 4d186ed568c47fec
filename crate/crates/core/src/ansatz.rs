//! The cohomogeneity-one Kähler metric attached to a quartic.
//!
//! With `t = x + α` and `σ₁, σ₂, σ₃` left-invariant on `S³`,
//!
//! ```text
//! g = t [dx²/(2Ψ) + 2(σ₁² + σ₂²)] + (2Ψ/t) σ₃²,      h = g / x²
//! ```
//!
//! `g` is Kähler for every positive `Ψ`; `h` has constant scalar curvature
//! exactly when `Ψ` has the reduced form `𝔄x⁴ + 𝔅x³ + x² + ℭx + ℭα/2`, and
//! then `s_h = -12ℭ`. Every derivative in this module is taken exactly from
//! the quartic; float entry points convert the sample point to a rational
//! first and round only the final value.

use num_traits::{One, Signed, Zero};

use crate::exact::{self, int, Exact};
use crate::quartic::QuarticPoly;
use crate::{Error, Result};

/// `Ψ(x) = 𝔄x⁴ + 𝔅x³ + x² + ℭx + ℭα/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedQuartic {
    pub coef_a: Exact,
    pub coef_b: Exact,
    pub coef_c: Exact,
    pub alpha: Exact,
}

impl ReducedQuartic {
    pub fn new(coef_a: Exact, coef_b: Exact, coef_c: Exact, alpha: Exact) -> Self {
        Self {
            coef_a,
            coef_b,
            coef_c,
            alpha,
        }
    }

    pub fn to_poly(&self) -> QuarticPoly {
        let constant = &self.coef_c * &self.alpha / int(2);
        QuarticPoly::new([
            constant,
            self.coef_c.clone(),
            Exact::one(),
            self.coef_b.clone(),
            self.coef_a.clone(),
        ])
    }

    /// Reads `(𝔄, 𝔅, ℭ)` off `psi`, failing unless the `x²` coefficient is 1
    /// and the constant term is `ℭα/2`.
    pub fn from_poly(psi: &QuarticPoly, alpha: &Exact) -> Result<Self> {
        if !psi.coeff(2).is_one() {
            return Err(Error::Profile("x² coefficient of Ψ must be 1"));
        }
        if *psi.coeff(0) != psi.coeff(1) * alpha / int(2) {
            return Err(Error::Profile("constant term of Ψ must be ℭα/2"));
        }
        Ok(Self::new(
            psi.coeff(4).clone(),
            psi.coeff(3).clone(),
            psi.coeff(1).clone(),
            alpha.clone(),
        ))
    }

    /// Constant scalar curvature of `h`: `κ = -12ℭ`.
    pub fn kappa(&self) -> Exact {
        -&self.coef_c * int(12)
    }
}

/// A metric profile: quartic `Ψ(x)`, shift `α` and momentum interval `[a, b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricProfile {
    psi: QuarticPoly,
    alpha: Exact,
    a: Exact,
    b: Exact,
}

/// Metric coefficients at one point, in the `(dx², σ₁², σ₂², σ₃²)` basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameSample {
    pub x: f64,
    pub g_diag: [f64; 4],
    pub h_diag: [f64; 4],
    /// `Φ = Ψ / t²`.
    pub phi: f64,
    pub psi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub extremal: bool,
    pub csck: bool,
    pub scalar_flat_kahler: bool,
    /// `None` when `𝔄 = 0` or `α = 0`, where the algebraic criterion does not apply.
    pub einstein: Option<bool>,
}

impl Classification {
    pub fn einstein(&self) -> Result<bool> {
        self.einstein.ok_or(Error::Hypothesis(
            "the Einstein criterion needs 𝔄 ≠ 0 and α ≠ 0",
        ))
    }
}

impl MetricProfile {
    /// Validates `a < b`, `a` and `b` nonzero of the same sign, `a + α > 0`
    /// and `Ψ > 0` on `(a, b)`, all exactly.
    pub fn new(psi: QuarticPoly, alpha: Exact, a: Exact, b: Exact) -> Result<Self> {
        if a >= b {
            return Err(Error::Profile("a < b"));
        }
        if (&a * &b).is_negative() || a.is_zero() || b.is_zero() {
            return Err(Error::Profile("a and b nonzero of the same sign"));
        }
        if !(&a + &alpha).is_positive() {
            return Err(Error::Profile("x + α > 0 on [a, b]"));
        }
        if !psi.is_positive_on_open_interval(&a, &b) {
            return Err(Error::Profile("Ψ > 0 on (a, b)"));
        }
        Ok(Self { psi, alpha, a, b })
    }

    pub fn from_reduced(r: &ReducedQuartic, a: Exact, b: Exact) -> Result<Self> {
        Self::new(r.to_poly(), r.alpha.clone(), a, b)
    }

    /// Same quartic and interval with a different shift.
    pub fn with_alpha(&self, alpha: Exact) -> Result<Self> {
        Self::new(self.psi.clone(), alpha, self.a.clone(), self.b.clone())
    }

    /// Same shift and interval with a different quartic.
    pub fn with_psi(&self, psi: QuarticPoly) -> Result<Self> {
        Self::new(psi, self.alpha.clone(), self.a.clone(), self.b.clone())
    }

    pub fn psi(&self) -> &QuarticPoly {
        &self.psi
    }

    pub fn alpha(&self) -> &Exact {
        &self.alpha
    }

    pub fn a(&self) -> &Exact {
        &self.a
    }

    pub fn b(&self) -> &Exact {
        &self.b
    }

    pub fn domain_f64(&self) -> (f64, f64) {
        (exact::to_f64(&self.a), exact::to_f64(&self.b))
    }

    pub fn reduced(&self) -> Result<ReducedQuartic> {
        ReducedQuartic::from_poly(&self.psi, &self.alpha)
    }

    /// `Ψ(t - α)` as a polynomial in `t`.
    pub fn t_expansion(&self) -> QuarticPoly {
        self.psi.shift(&-&self.alpha)
    }

    /// Checks `x` lies in the open domain and is not a pole, returning it exactly.
    pub fn interior_point(&self, x: f64) -> Result<Exact> {
        let (lo, hi) = self.domain_f64();
        if x == 0.0 {
            return Err(Error::Pole { what: "x = 0" });
        }
        let xe = exact::from_f64(x)?;
        self.check_interior(&xe)
            .map_err(|_| Error::Domain { x, lo, hi })?;
        Ok(xe)
    }

    fn check_interior(&self, x: &Exact) -> Result<()> {
        if x.is_zero() {
            return Err(Error::Pole { what: "x = 0" });
        }
        if x <= &self.a || x >= &self.b {
            return Err(Error::Domain {
                x: exact::to_f64(x),
                lo: exact::to_f64(&self.a),
                hi: exact::to_f64(&self.b),
            });
        }
        Ok(())
    }

    pub fn sample(&self, x: f64) -> Result<FrameSample> {
        let xe = self.interior_point(x)?;
        let t = exact::to_f64(&(&xe + &self.alpha));
        let psi = exact::to_f64(&self.psi.eval(&xe));
        let g_diag = [t / (2.0 * psi), 2.0 * t, 2.0 * t, 2.0 * psi / t];
        let x2 = x * x;
        Ok(FrameSample {
            x,
            g_diag,
            h_diag: g_diag.map(|c| c / x2),
            phi: psi / (t * t),
            psi,
        })
    }

    /// `s_g = (2/t)(2 - Ψ″)`, exact.
    pub fn scalar_curvature_g_exact(&self, x: &Exact) -> Result<Exact> {
        self.check_interior(x)?;
        let t = x + &self.alpha;
        let d2 = self.psi.derivative().derivative().eval(x);
        Ok(int(2) / t * (int(2) - d2))
    }

    pub fn scalar_curvature_g(&self, x: f64) -> Result<f64> {
        let xe = self.interior_point(x)?;
        Ok(exact::to_f64(&self.scalar_curvature_g_exact(&xe)?))
    }

    /// `Δφ = -(2/t)(Ψ′φ′ + Ψφ″)` given `φ′(x)` and `φ″(x)`.
    pub fn laplacian_exact(&self, x: &Exact, dphi: &Exact, ddphi: &Exact) -> Result<Exact> {
        self.check_interior(x)?;
        let t = x + &self.alpha;
        let p = self.psi.eval(x);
        let dp = self.psi.derivative().eval(x);
        Ok(-(int(2) / t) * (dp * dphi + p * ddphi))
    }

    /// Laplacian of `phi`, a function of `x` given on jets.
    pub fn laplacian(
        &self,
        phi: impl Fn(crate::jet::Jet) -> crate::jet::Jet,
        x: f64,
    ) -> Result<f64> {
        let xe = self.interior_point(x)?;
        let j = phi(crate::jet::Jet::variable(x));
        let d1 = exact::from_f64(j.derivative_value(1))?;
        let d2 = exact::from_f64(j.derivative_value(2))?;
        Ok(exact::to_f64(&self.laplacian_exact(&xe, &d1, &d2)?))
    }

    /// `κ(x) = x² s_g + 6x³ Δ(1/x)`: the scalar curvature of `h = g/x²`.
    pub fn conformal_kappa_exact(&self, x: &Exact) -> Result<Exact> {
        let s = self.scalar_curvature_g_exact(x)?;
        let x2 = x * x;
        let x3 = &x2 * x;
        let dphi = -x2.recip();
        let ddphi = int(2) / &x3;
        let lap = self.laplacian_exact(x, &dphi, &ddphi)?;
        Ok(&x2 * s + int(6) * x3 * lap)
    }

    pub fn conformal_kappa(&self, x: f64) -> Result<f64> {
        let xe = self.interior_point(x)?;
        Ok(exact::to_f64(&self.conformal_kappa_exact(&xe)?))
    }

    /// Exact classification from the `t`-expansion `Ψ = Σ Tᵢ tⁱ`, i.e.
    /// `Φ = T₄t² + T₃t + T₂ + T₁/t + T₀/t²`. Extremal means `T₂ = 1`, so that
    /// `s_g = -12(2T₄t + T₃)` is affine in `t`.
    pub fn classify(&self) -> Classification {
        let p = self.t_expansion();
        let extremal = p.coeff(2).is_one();
        let csck = extremal && p.coeff(4).is_zero();
        let scalar_flat_kahler = csck && p.coeff(3).is_zero();
        let big_a = self.psi.coeff(4);
        let big_b = self.psi.coeff(3);
        let einstein = if big_a.is_zero() || self.alpha.is_zero() {
            None
        } else {
            Some(*big_b == big_a * &self.alpha * int(2))
        };
        Classification {
            extremal,
            csck,
            scalar_flat_kahler,
            einstein,
        }
    }

    /// The dual profile under `t ↦ 1/t`: `Ψ̃(t) = t⁴Ψ(1/t)` in `t`, shift
    /// `1/α` and interval `[1/(b+α), 1/(a+α)]` in `t`.
    pub fn invert(&self) -> Result<Self> {
        if self.alpha.is_zero() {
            return Err(Error::Pole { what: "α = 0" });
        }
        let alpha_hat = self.alpha.recip();
        let p_hat = self.t_expansion().invert();
        let psi_hat = p_hat.shift(&alpha_hat);
        let lo = (&self.b + &self.alpha).recip() - &alpha_hat;
        let hi = (&self.a + &self.alpha).recip() - &alpha_hat;
        Self::new(psi_hat, alpha_hat, lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn flat() -> MetricProfile {
        MetricProfile::new(
            QuarticPoly::from_ints([0, 0, 1, 0, 0]),
            int(0),
            int(1),
            int(3),
        )
        .unwrap()
    }

    /// k = 1, a = 1, b = 2, First.
    fn reference() -> MetricProfile {
        let psi = QuarticPoly::new([
            ratio(20, 39),
            ratio(-20, 13),
            int(1),
            ratio(3, 13),
            ratio(-8, 39),
        ]);
        MetricProfile::new(psi, ratio(-2, 3), int(1), int(2)).unwrap()
    }

    #[test]
    fn sample_flat_metric() {
        let s = flat().sample(2.0).unwrap();
        // Ψ = x², α = 0: g = (x/(2x²), 2x, 2x, 2x²/x)
        assert_eq!(s.g_diag, [0.25, 4.0, 4.0, 4.0]);
        assert_eq!(s.h_diag, [0.25 / 4.0, 1.0, 1.0, 1.0]);
        let p = MetricProfile::new(
            QuarticPoly::from_ints([0, 0, 1, 0, 0]),
            int(0),
            ratio(1, 2),
            int(3),
        )
        .unwrap();
        assert_eq!(p.sample(1.0).unwrap().g_diag, [0.5, 2.0, 2.0, 2.0]);
    }

    #[test]
    fn sample_rejects_endpoints() {
        assert!(matches!(flat().sample(1.0), Err(Error::Domain { .. })));
        assert!(matches!(flat().sample(3.5), Err(Error::Domain { .. })));
    }

    #[test]
    fn flat_scalar_curvature_vanishes() {
        for x in [1.1, 1.7, 2.9] {
            assert_eq!(flat().scalar_curvature_g(x).unwrap(), 0.0);
        }
    }

    #[test]
    fn laplacian_examples() {
        let p = flat();
        assert_eq!(
            p.laplacian(|_| crate::jet::Jet::constant(3.0), 2.0)
                .unwrap(),
            0.0
        );
        // φ = t = x when α = 0, Ψ = t²: Δφ = -(2/t)(2t) = -4
        assert_eq!(p.laplacian(|x| x, 2.0).unwrap(), -4.0);
    }

    #[test]
    fn kappa_is_constant_on_reduced_profiles() {
        let p = reference();
        for x in [ratio(6, 5), ratio(3, 2), ratio(9, 5)] {
            assert_eq!(p.conformal_kappa_exact(&x).unwrap(), ratio(240, 13));
        }
        assert_eq!(p.reduced().unwrap().kappa(), ratio(240, 13));
    }

    #[test]
    fn kappa_vanishes_when_c_is_zero() {
        let r = ReducedQuartic::new(ratio(1, 7), ratio(-2, 5), int(0), ratio(-1, 3));
        let p = MetricProfile::from_reduced(&r, int(1), int(2)).unwrap();
        for i in 1..10 {
            assert!(p
                .conformal_kappa_exact(&(int(1) + ratio(i, 10)))
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn perturbed_constant_term_breaks_constancy() {
        let p = reference();
        let mut psi = p.psi().clone();
        psi.set_coeff(0, psi.coeff(0) + ratio(1, 100));
        let q = p.with_psi(psi).unwrap();
        assert!(q.reduced().is_err());
        let k: Vec<f64> = [1.2, 1.5, 1.8]
            .iter()
            .map(|&x| q.conformal_kappa(x).unwrap())
            .collect();
        let spread =
            k.iter().cloned().fold(f64::MIN, f64::max) - k.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread > 1e-3, "{k:?}");
    }

    #[test]
    fn classification_examples() {
        let c = reference().classify();
        assert!(!c.extremal);
        assert_eq!(c.einstein(), Ok(false));
        let f = flat().classify();
        assert!(f.extremal && f.csck && f.scalar_flat_kahler);
        assert!(matches!(f.einstein(), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn inversion_is_an_involution() {
        let p = reference();
        let q = p.invert().unwrap();
        assert_eq!(q.alpha(), &ratio(-3, 2));
        assert_eq!((q.a(), q.b()), (&ratio(9, 4), &ratio(9, 2)));
        assert_eq!(
            q.psi(),
            &QuarticPoly::new([
                ratio(135, 52),
                ratio(-45, 13),
                int(1),
                ratio(4, 39),
                ratio(-128, 3159)
            ])
        );
        assert!(q.reduced().is_ok());
        assert_eq!(q.invert().unwrap(), p);
        assert!(matches!(flat().invert(), Err(Error::Pole { .. })));
    }

    #[test]
    fn profile_validation() {
        let psi = QuarticPoly::from_ints([-2, 3, -1, 0, 0]); // (2-x)(x-1)
        assert!(MetricProfile::new(psi.clone(), int(0), int(1), int(2)).is_ok());
        assert!(MetricProfile::new(psi.clone(), int(0), int(2), int(1)).is_err());
        assert!(MetricProfile::new(psi.clone(), int(-5), int(1), int(2)).is_err());
        assert!(MetricProfile::new(psi, int(0), ratio(1, 2), int(2)).is_err());
    }
}
