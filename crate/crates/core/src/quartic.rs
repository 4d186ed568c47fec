//! Exact polynomials of degree at most four.
//!
//! Real roots are isolated with Sturm sequences on the square-free factors of
//! the polynomial (Yun's decomposition), so multiplicities come out of the
//! factorisation rather than out of floating-point clustering. Brackets are
//! refined by exact bisection; callers that need a float get one at the end.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::{self, Exact};
use crate::{Error, Result};

/// Default relative tolerance for floating root values.
pub const DEFAULT_ROOT_TOL: f64 = 1e-14;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuarticPoly {
    coeffs: [Exact; 5],
}

/// Upper end of a search interval; the lower end is always finite.
#[derive(Clone, Debug, PartialEq)]
pub enum Upper {
    Finite(Exact),
    Infinity,
}

impl QuarticPoly {
    /// Coefficients in increasing powers: `c[0] + c[1] x + ... + c[4] x⁴`.
    pub fn new(coeffs: [Exact; 5]) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(c: [i64; 5]) -> Self {
        Self::new(c.map(exact::int))
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| Exact::zero()))
    }

    pub fn monomial(power: usize, coeff: Exact) -> Self {
        let mut p = Self::zero();
        p.coeffs[power] = coeff;
        p
    }

    /// `x - r`.
    pub fn linear_root(r: &Exact) -> Self {
        Self::new([
            -r.clone(),
            Exact::one(),
            Exact::zero(),
            Exact::zero(),
            Exact::zero(),
        ])
    }

    pub fn coeff(&self, power: usize) -> &Exact {
        &self.coeffs[power]
    }

    pub fn coeffs(&self) -> &[Exact; 5] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, power: usize, value: Exact) {
        self.coeffs[power] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn degree(&self) -> Option<usize> {
        (0..5).rev().find(|&i| !self.coeffs[i].is_zero())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Exact) -> Exact {
        self.coeffs
            .iter()
            .rev()
            .fold(Exact::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64_coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c)
    }

    pub fn to_f64_coeffs(&self) -> [f64; 5] {
        std::array::from_fn(|i| exact::to_f64(&self.coeffs[i]))
    }

    pub fn derivative(&self) -> Self {
        let mut d = Self::zero();
        for i in 1..5 {
            d.coeffs[i - 1] = &self.coeffs[i] * Exact::from_integer((i as i64).into());
        }
        d
    }

    /// `t⁴ p(1/t)`: reverses the coefficient list.
    pub fn invert(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// The polynomial `y ↦ p(y + s)`.
    pub fn shift(&self, s: &Exact) -> Self {
        Self::new(self.taylor_at(s))
    }

    /// Taylor coefficients of `p` at `x`: `p(x + h) = Σ out[i] hⁱ`.
    pub fn taylor_at(&self, x: &Exact) -> [Exact; 5] {
        // Repeated synthetic division by (y - x).
        let mut c = self.coeffs.clone();
        for i in 0..5 {
            for j in (i..4).rev() {
                let carry = &c[j + 1] * x;
                c[j] += carry;
            }
        }
        c
    }

    /// Product, failing when the degree would exceed four.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out: [Exact; 9] = std::array::from_fn(|_| Exact::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        if out[5..].iter().any(|c| !c.is_zero()) {
            return Err(Error::DegreeOverflow);
        }
        Ok(Self::new(std::array::from_fn(|i| out[i].clone())))
    }

    pub fn scale(&self, s: &Exact) -> Self {
        Self::new(std::array::from_fn(|i| &self.coeffs[i] * s))
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Exact) -> i32 {
        sign(&self.eval(x))
    }

    /// All real roots in the open interval `(lo, hi)`, each reported once with
    /// its multiplicity, sorted increasingly with pairwise disjoint brackets.
    pub fn real_roots_in(&self, lo: &Exact, hi: &Upper) -> Result<Vec<RootBracket>> {
        if self.is_zero() {
            return Err(Error::DegeneratePolynomial);
        }
        let mut brackets = Vec::new();
        for (multiplicity, factor) in square_free_decomposition(&Dense::from(self)) {
            if factor.degree() == 0 {
                continue;
            }
            let factor = factor.to_quartic();
            let sturm = SturmSequence::new(&factor);
            let hi_bound = match hi {
                Upper::Finite(h) => h.clone(),
                Upper::Infinity => cauchy_bound(&factor).max(lo + Exact::one()),
            };
            if hi_bound <= *lo {
                continue;
            }
            for (l, r) in sturm.isolate(lo, &hi_bound) {
                if l == r && l == hi_bound && matches!(hi, Upper::Finite(_)) {
                    // Root sitting on the excluded upper endpoint.
                    continue;
                }
                brackets.push(RootBracket {
                    lo: l,
                    hi: r,
                    multiplicity,
                    factor: factor.clone(),
                });
            }
        }
        separate_and_sort(&mut brackets);
        Ok(brackets)
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count_distinct_roots_in(&self, lo: &Exact, hi: &Upper) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::DegeneratePolynomial);
        }
        let sf = square_free_part(&Dense::from(self)).to_quartic();
        if sf.degree() == Some(0) {
            return Ok(0);
        }
        let hi_bound = match hi {
            Upper::Finite(h) => h.clone(),
            Upper::Infinity => cauchy_bound(&sf).max(lo + Exact::one()),
        };
        if hi_bound <= *lo {
            return Ok(0);
        }
        let sturm = SturmSequence::new(&sf);
        let mut n = sturm.count(lo, &hi_bound);
        if matches!(hi, Upper::Finite(_)) && sf.eval(&hi_bound).is_zero() {
            n -= 1;
        }
        Ok(n)
    }

    /// Whether `p(x) > 0` for every `x` in `(a, b)`, decided exactly: no root
    /// in the open interval and a positive interior sample.
    pub fn is_positive_on_open_interval(&self, a: &Exact, b: &Exact) -> bool {
        if self.is_zero() || a >= b {
            return false;
        }
        match self.count_distinct_roots_in(a, &Upper::Finite(b.clone())) {
            Ok(0) => {
                let mid = (a + b) / exact::int(2);
                self.eval(&mid).is_positive()
            }
            _ => false,
        }
    }
}

impl fmt::Debug for QuarticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuarticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..5).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "({a})x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "({a})x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &QuarticPoly {
    type Output = QuarticPoly;
    fn add(self, rhs: Self) -> QuarticPoly {
        QuarticPoly::new(std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]))
    }
}

impl Sub for &QuarticPoly {
    type Output = QuarticPoly;
    fn sub(self, rhs: Self) -> QuarticPoly {
        QuarticPoly::new(std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]))
    }
}

impl Neg for &QuarticPoly {
    type Output = QuarticPoly;
    fn neg(self) -> QuarticPoly {
        QuarticPoly::new(std::array::from_fn(|i| -&self.coeffs[i]))
    }
}

impl Mul<&Exact> for &QuarticPoly {
    type Output = QuarticPoly;
    fn mul(self, rhs: &Exact) -> QuarticPoly {
        self.scale(rhs)
    }
}

/// An isolating interval for one real root.
///
/// Either `lo == hi` (the root is that rational, found exactly) or the root
/// lies strictly inside `(lo, hi)` and is the only root of `factor` there.
#[derive(Clone, Debug, PartialEq)]
pub struct RootBracket {
    lo: Exact,
    hi: Exact,
    multiplicity: u32,
    factor: QuarticPoly,
}

impl RootBracket {
    pub fn lo(&self) -> &Exact {
        &self.lo
    }

    pub fn hi(&self) -> &Exact {
        &self.hi
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Square-free factor whose only root in the bracket is this root.
    pub fn factor(&self) -> &QuarticPoly {
        &self.factor
    }

    pub fn width(&self) -> Exact {
        &self.hi - &self.lo
    }

    pub fn exact_root(&self) -> Option<&Exact> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn midpoint(&self) -> Exact {
        (&self.lo + &self.hi) / exact::int(2)
    }

    fn bisect_once(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = self.midpoint();
        let s_mid = self.factor.sign_at(&mid);
        if s_mid == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        let s_lo = self.factor.sign_at(&self.lo);
        let root_left = if s_lo != 0 {
            s_lo != s_mid
        } else {
            // lo is a root of the factor outside this bracket; the one root
            // inside cannot share the sign pattern of the hi end.
            self.factor.sign_at(&self.hi) == s_mid
        };
        if root_left {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Exact bisection until the bracket width is at most `width`.
    pub fn refine_to_width(&mut self, width: &Exact) {
        while self.lo != self.hi && &self.width() > width {
            self.bisect_once();
        }
    }

    /// Bisect until the width is below `rel_tol` relative to the root
    /// magnitude (absolute for roots near zero), then return the midpoint as
    /// a float polished by Newton steps on the square-free factor.
    pub fn refine(&mut self, rel_tol: f64) -> f64 {
        let tol = rel_tol.max(f64::EPSILON);
        loop {
            if let Some(r) = self.exact_root() {
                return exact::to_f64(r);
            }
            let scale = exact::to_f64(&self.midpoint()).abs().max(1.0);
            if exact::to_f64(&self.width()) <= tol * scale * 0.5 {
                break;
            }
            self.bisect_once();
        }
        let mut x = exact::to_f64(&self.midpoint());
        let (lo, hi) = (exact::to_f64(&self.lo), exact::to_f64(&self.hi));
        let d = self.factor.derivative();
        for _ in 0..3 {
            let fx = self.factor.eval_f64(x);
            let dfx = d.eval_f64(x);
            if dfx == 0.0 || !fx.is_finite() {
                break;
            }
            let next = x - fx / dfx;
            if !(lo..=hi).contains(&next) {
                break;
            }
            x = next;
        }
        x
    }

    /// If the root is a "simple" rational (smallest denominator inside the
    /// current bracket) and really is a root, return it exactly and collapse
    /// the bracket onto it.
    pub fn try_rational(&mut self) -> Option<Exact> {
        if let Some(r) = self.exact_root() {
            return Some(r.clone());
        }
        let candidate = exact::simplest_between(&self.lo, &self.hi);
        if self.factor.eval(&candidate).is_zero() {
            self.lo = candidate.clone();
            self.hi = candidate.clone();
            return Some(candidate);
        }
        None
    }

    /// Refine to `width`, trying to land on an exact rational root first.
    pub fn rationalize(&mut self, width: &Exact) -> Exact {
        // A coarse refinement makes the simplest-rational probe meaningful.
        let coarse = exact::ratio(1, 1 << 30);
        self.refine_to_width(&coarse);
        if let Some(r) = self.try_rational() {
            return r;
        }
        self.refine_to_width(width);
        if let Some(r) = self.try_rational() {
            return r;
        }
        exact::simplest_between(&self.lo, &self.hi)
    }

    fn overlaps(&self, other: &Self) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }
}

fn sign(x: &Exact) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn separate_and_sort(brackets: &mut [RootBracket]) {
    // Brackets of different square-free factors may overlap; roots are
    // distinct, so bisecting both eventually separates them.
    loop {
        let mut changed = false;
        for i in 0..brackets.len() {
            for j in (i + 1)..brackets.len() {
                if brackets[i].overlaps(&brackets[j])
                    && !(brackets[i].exact_root().is_some() && brackets[j].exact_root().is_some())
                {
                    brackets[i].bisect_once();
                    brackets[j].bisect_once();
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    brackets.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap_or(Ordering::Equal));
}

/// `1 + max |cᵢ / c_n|`: every root has modulus strictly below it.
fn cauchy_bound(p: &QuarticPoly) -> Exact {
    let n = p.degree().unwrap_or(0);
    let lead = p.coeff(n).abs();
    let m = (0..n)
        .map(|i| p.coeff(i).abs() / &lead)
        .max()
        .unwrap_or_else(Exact::zero);
    m + Exact::one()
}

struct SturmSequence {
    polys: Vec<Dense>,
}

impl SturmSequence {
    fn new(p: &QuarticPoly) -> Self {
        let p0 = Dense::from(p);
        let p1 = p0.derivative();
        let mut polys = vec![p0, p1];
        loop {
            let n = polys.len();
            if polys[n - 1].is_zero() {
                polys.pop();
                break;
            }
            let (_, r) = polys[n - 2].div_rem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.neg());
        }
        Self { polys }
    }

    fn variations(&self, x: &Exact) -> usize {
        let mut last = 0;
        let mut v = 0;
        for p in &self.polys {
            let s = sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn count(&self, a: &Exact, b: &Exact) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Isolating intervals for the roots in `(a, b]`; a root found exactly is
    /// returned as a degenerate interval.
    fn isolate(&self, a: &Exact, b: &Exact) -> Vec<(Exact, Exact)> {
        let p = &self.polys[0];
        let mut out = Vec::new();
        let mut stack = vec![(a.clone(), b.clone())];
        while let Some((l, r)) = stack.pop() {
            match self.count(&l, &r) {
                0 => {}
                1 => {
                    if p.eval(&r).is_zero() {
                        out.push((r.clone(), r));
                    } else {
                        out.push((l, r));
                    }
                }
                _ => {
                    let m = (&l + &r) / exact::int(2);
                    stack.push((m.clone(), r));
                    stack.push((l, m));
                }
            }
        }
        out
    }
}

/// Dense polynomial with trimmed trailing zeros; internal to the Sturm and
/// gcd machinery.
#[derive(Clone, Debug, PartialEq)]
struct Dense(Vec<Exact>);

impl From<&QuarticPoly> for Dense {
    fn from(p: &QuarticPoly) -> Self {
        Dense(p.coeffs.to_vec()).trimmed()
    }
}

impl Dense {
    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn eval(&self, x: &Exact) -> Exact {
        self.0
            .iter()
            .rev()
            .fold(Exact::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> Self {
        Dense(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Exact::from_integer((i as i64).into()))
                .collect(),
        )
        .trimmed()
    }

    fn neg(&self) -> Self {
        Dense(self.0.iter().map(|c| -c).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Dense(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Exact::zero)
                        - other.0.get(i).cloned().unwrap_or_else(Exact::zero)
                })
                .collect(),
        )
        .trimmed()
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            Some(lead) => Dense(self.0.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.0.clone();
        let dn = d.degree();
        let lead = d.0[dn].clone();
        if r.len() < d.0.len() {
            return (Dense(vec![]), Dense(r).trimmed());
        }
        let mut q = vec![Exact::zero(); r.len() - dn];
        for i in (0..q.len()).rev() {
            let c = &r[i + dn] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dn);
        (Dense(q).trimmed(), Dense(r).trimmed())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn to_quartic(&self) -> QuarticPoly {
        let mut p = QuarticPoly::zero();
        for (i, c) in self.0.iter().enumerate() {
            p.coeffs[i] = c.clone();
        }
        p
    }
}

fn square_free_part(p: &Dense) -> Dense {
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0.monic()
}

/// Yun's algorithm: `p = c · Π aᵢ^i` with the `aᵢ` square-free and pairwise
/// coprime. Returns `(i, aᵢ)` for the nonconstant factors.
fn square_free_decomposition(p: &Dense) -> Vec<(u32, Dense)> {
    let mut out = Vec::new();
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        if a.degree() > 0 {
            out.push((i, a));
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn q(c: [i64; 5]) -> QuarticPoly {
        QuarticPoly::from_ints(c)
    }

    #[test]
    fn horner_evaluation() {
        assert_eq!(q([0, 0, 1, 0, 0]).eval(&int(3)), int(9));
        let page = q([-3, -4, 0, 0, 1]);
        assert_eq!(page.eval(&int(1)), int(-6));
        assert_eq!(page.eval(&int(2)), int(5));
    }

    #[test]
    fn derivative_coefficients() {
        let p = q([5, 4, 3, 2, 1]);
        assert_eq!(p.derivative(), q([4, 6, 6, 4, 0]));
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let p = q([-3, -4, 0, 7, 1]);
        let x = ratio(3, 7);
        let t = p.taylor_at(&x);
        assert_eq!(t[0], p.eval(&x));
        assert_eq!(t[1], p.derivative().eval(&x));
        assert_eq!(t[2], p.derivative().derivative().eval(&x) / int(2));
        let shifted = p.shift(&x);
        assert_eq!(shifted.eval(&int(2)), p.eval(&(int(2) + &x)));
    }

    #[test]
    fn invert_reverses_coefficients() {
        assert_eq!(q([0, 0, 1, 0, 0]).invert(), q([0, 0, 1, 0, 0]));
        assert_eq!(q([1, 2, 1, 3, 4]).invert(), q([4, 3, 1, 2, 1]));
    }

    #[test]
    fn page_quartic_has_one_root_above_one() {
        let p = q([-3, -4, 0, 0, 1]);
        let mut roots = p.real_roots_in(&int(1), &Upper::Infinity).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity(), 1);
        let z = roots[0].refine(DEFAULT_ROOT_TOL);
        assert!((z - 1.784358).abs() < 5e-7, "{z}");
    }

    #[test]
    fn einstein_locus_polynomials_have_no_roots_above_one() {
        let cubic = q([3, 13, 7, 1, 0]);
        assert!(cubic
            .real_roots_in(&int(1), &Upper::Infinity)
            .unwrap()
            .is_empty());
        // (k-2) z^4 + 2(k-1) z^3 + 2(k+1) z + (k+2) at k = 2
        let k2 = q([4, 6, 0, 2, 0]);
        assert!(k2
            .real_roots_in(&int(1), &Upper::Infinity)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(
            QuarticPoly::zero().real_roots_in(&int(0), &Upper::Infinity),
            Err(Error::DegeneratePolynomial)
        );
    }

    #[test]
    fn multiplicities_from_square_free_decomposition() {
        // (x-1)²(x-2)(x+3)
        let a = QuarticPoly::linear_root(&int(1));
        let p = a
            .checked_mul(&a)
            .unwrap()
            .checked_mul(&QuarticPoly::linear_root(&int(2)))
            .unwrap()
            .checked_mul(&QuarticPoly::linear_root(&int(-3)))
            .unwrap();
        let mut roots = p.real_roots_in(&int(-10), &Upper::Finite(int(10))).unwrap();
        let summary: Vec<(f64, u32)> = roots
            .iter_mut()
            .map(|r| (r.refine(1e-12), r.multiplicity()))
            .collect();
        assert_eq!(summary.len(), 3);
        assert!((summary[0].0 + 3.0).abs() < 1e-9 && summary[0].1 == 1);
        assert!((summary[1].0 - 1.0).abs() < 1e-9 && summary[1].1 == 2);
        assert!((summary[2].0 - 2.0).abs() < 1e-9 && summary[2].1 == 1);
    }

    #[test]
    fn open_interval_excludes_endpoints() {
        // (x-1)(x-2)
        let p = q([2, -3, 1, 0, 0]);
        assert!(p
            .real_roots_in(&int(1), &Upper::Finite(int(2)))
            .unwrap()
            .is_empty());
        assert_eq!(
            p.real_roots_in(&int(0), &Upper::Finite(int(2)))
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            p.real_roots_in(&int(1), &Upper::Finite(int(3)))
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn positivity_examples() {
        let x2 = q([0, 0, 1, 0, 0]);
        assert!(x2.is_positive_on_open_interval(&int(1), &int(2)));
        // (2-x)(x-1) = -x^2 + 3x - 2
        let bump = q([-2, 3, -1, 0, 0]);
        assert!(bump.is_positive_on_open_interval(&int(1), &int(2)));
        assert!(!bump.is_positive_on_open_interval(&int(0), &int(3)));
        // a double root inside is not strictly positive
        let touch = q([9, -12, 4, 0, 0]);
        assert!(!touch.is_positive_on_open_interval(&int(1), &int(2)));
    }

    #[test]
    fn rational_roots_are_recovered_exactly() {
        // 2x^2 - 5x + 2 = (2x - 1)(x - 2)
        let p = q([2, -5, 2, 0, 0]);
        let mut roots = p.real_roots_in(&int(0), &Upper::Infinity).unwrap();
        let tiny = ratio(1, 1_000_000_000_000);
        let values: Vec<Exact> = roots.iter_mut().map(|r| r.rationalize(&tiny)).collect();
        assert_eq!(values, vec![ratio(1, 2), int(2)]);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(q([-3, -4, 0, 0, 1]).to_string(), "x^4 - (4)x - 3");
        assert_eq!(QuarticPoly::zero().to_string(), "0");
    }
}
