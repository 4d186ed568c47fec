//! The Einstein locus of the compact families and the Page point.
//!
//! A compact solution is Einstein exactly when
//! `2kα² + 2(b-a)α - (k+2)a² - (k-2)b² = 0`. With `z = b/a` this reduces to
//! `(k-2)z⁴ + 2(k-1)z³ + 2(k+1)z + (k+2) = 0` on the First branch and to
//! `(z-1)³(z³ + 7z² + 13z + 3) = 0` on the Second. Only `k = 1`, First, has
//! a root `z > 1`: the root of `z⁴ - 4z - 3`, which gives the Page metric.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::compactify::{Branch, CompactSolution};
use crate::exact::{self, int, Exact};
use crate::invariants;
use crate::quartic::{QuarticPoly, RootBracket, Upper, DEFAULT_ROOT_TOL};
use crate::{Error, Result};

/// Decimal digits carried by the radical evaluation.
pub const RADICAL_DIGITS: usize = 100;

/// `2kα² + 2(b-a)α - (k+2)a² - (k-2)b²`, exactly.
pub fn einstein_residual(sol: &CompactSolution) -> Exact {
    let (a, b, alpha) = (sol.a(), sol.b(), sol.alpha());
    let k = int(sol.k() as i64);
    int(2) * &k * alpha * alpha + int(2) * (b - a) * alpha
        - (&k + int(2)) * a * a
        - (&k - int(2)) * b * b
}

/// `𝔅 - 2𝔄α`, the algebraic Einstein criterion on the quartic itself.
pub fn criterion_difference(sol: &CompactSolution) -> Exact {
    sol.psi().coeff(3) - sol.psi().coeff(4) * sol.alpha() * int(2)
}

/// The exact nonzero factor `-(b-a)(a² + 4ab + b²)` relating the two forms:
/// `einstein_residual = factor · (𝔅 - 2𝔄α)`.
pub fn criterion_factor(sol: &CompactSolution) -> Exact {
    let (a, b) = (sol.a(), sol.b());
    -((b - a) * (a * a + int(4) * a * b + b * b))
}

/// `(k-2)z⁴ + 2(k-1)z³ + 2(k+1)z + (k+2)`.
pub fn first_branch_locus(k: u32) -> QuarticPoly {
    let k = k as i64;
    QuarticPoly::from_ints([k + 2, 2 * (k + 1), 0, 2 * (k - 1), k - 2])
}

/// `z³ + 7z² + 13z + 3`.
pub fn second_branch_locus() -> QuarticPoly {
    QuarticPoly::from_ints([3, 13, 7, 1, 0])
}

/// `z⁴ - 4z - 3`, the `k = 1` First-branch locus up to sign.
pub fn page_quartic() -> QuarticPoly {
    QuarticPoly::from_ints([-3, -4, 0, 0, 1])
}

#[derive(Clone, Debug, PartialEq)]
pub struct EinsteinLocusResult {
    pub k: u32,
    pub branch: Branch,
    pub polynomial: QuarticPoly,
    pub roots_z: Vec<f64>,
    pub brackets: Vec<RootBracket>,
    /// The radical expression, for `k = 1`, First.
    pub closed_form_z: Option<f64>,
}

pub fn einstein_locus(k: u32, branch: Branch) -> Result<EinsteinLocusResult> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be a positive integer".into()));
    }
    if branch == Branch::Second && k != 1 {
        return Err(Error::Branch { k });
    }
    let polynomial = match branch {
        Branch::First => first_branch_locus(k),
        Branch::Second => second_branch_locus(),
    };
    let mut brackets = polynomial.real_roots_in(&Exact::one(), &Upper::Infinity)?;
    let roots_z = brackets
        .iter_mut()
        .map(|r| r.refine(DEFAULT_ROOT_TOL))
        .collect();
    let closed_form_z = (k == 1 && branch == Branch::First).then(|| exact::to_f64(&ferrari_root()));
    Ok(EinsteinLocusResult {
        k,
        branch,
        polynomial,
        roots_z,
        brackets,
        closed_form_z,
    })
}

fn scale() -> BigInt {
    num_traits::pow(BigInt::from(10), RADICAL_DIGITS)
}

/// The radical
///
/// ```text
/// z = √w + √(w^{-1/2} - w),   w = (∛(1+√2) - 1/∛(1+√2)) / 2
/// ```
///
/// evaluated in fixed point with `RADICAL_DIGITS` digits.
pub fn ferrari_root() -> Exact {
    let s = scale();
    let s2 = &s * &s;
    let sqrt2 = Roots::sqrt(&(&s2 * BigInt::from(2)));
    let c = Roots::cbrt(&((&s + &sqrt2) * &s2));
    let w: BigInt = (&c - &s2 / &c) / BigInt::from(2);
    let sqrt_w = Roots::sqrt(&(&w * &s));
    let inner = &s2 / &sqrt_w - &w;
    let z = &sqrt_w + Roots::sqrt(&(inner * &s));
    Exact::new(z, s)
}

/// The unique root of `z⁴ - 4z - 3` above 1 as a bracket of width below `width`.
pub fn page_bracket(width: &Exact) -> Result<RootBracket> {
    let mut roots = page_quartic().real_roots_in(&Exact::one(), &Upper::Infinity)?;
    if roots.len() != 1 {
        return Err(Error::Validation(format!(
            "expected one root above 1, found {}",
            roots.len()
        )));
    }
    let mut r = roots.remove(0);
    r.refine_to_width(width);
    Ok(r)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PagePoint {
    pub z: f64,
    /// `z` to 50 decimal places from the radical.
    pub z_decimal: String,
    pub z_rational: Exact,
    pub bracket: (Exact, Exact),
    /// `|radical - certified root|`.
    pub radical_gap: f64,
    pub u_over_v: f64,
    pub alpha_over_a: f64,
    pub sv: f64,
    /// Einstein residual at the rational approximation.
    pub residual_at_z: f64,
    /// The residual of the solutions at both bracket ends has opposite signs,
    /// so the Einstein condition holds at a point inside the bracket.
    pub einstein_certified: bool,
}

/// Width of the bracket used for the rational approximation of `z`.
pub fn page_width() -> Exact {
    Exact::new(BigInt::one(), num_traits::pow(BigInt::from(10), 40))
}

/// First-branch solution on `(a, b) = (1, z)` with rational `z`.
pub fn page_solution(z: &Exact) -> Result<CompactSolution> {
    CompactSolution::build(1, Exact::one(), z.clone(), Branch::First)
}

pub fn page_point() -> Result<PagePoint> {
    let bracket = page_bracket(&page_width())?;
    let (lo, hi) = (bracket.lo().clone(), bracket.hi().clone());
    let z_rational = exact::simplest_between(&lo, &hi);
    let radical = ferrari_root();
    let root_mid = bracket.midpoint();
    let radical_gap = exact::to_f64(&(&radical - &root_mid).abs());
    let sol = page_solution(&z_rational)?;
    let report = invariants::report(&sol)?;
    let r_lo = einstein_residual(&page_solution(&lo)?);
    let r_hi = einstein_residual(&page_solution(&hi)?);
    let einstein_certified = (r_lo.is_negative() && r_hi.is_positive())
        || (r_lo.is_positive() && r_hi.is_negative())
        || r_lo.is_zero()
        || r_hi.is_zero();
    let z = exact::to_f64(&z_rational);
    Ok(PagePoint {
        z,
        z_decimal: exact::to_decimal(&radical, 50),
        bracket: (lo, hi),
        radical_gap,
        u_over_v: exact::to_f64(&(&z_rational * &z_rational)),
        alpha_over_a: exact::to_f64(&(sol.alpha() / sol.a())),
        sv: report.sv,
        residual_at_z: exact::to_f64(&einstein_residual(&sol)),
        einstein_certified,
        z_rational,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn residual_examples() {
        let f = CompactSolution::build_ints(1, 1, 2, Branch::First).unwrap();
        assert_eq!(einstein_residual(&f), ratio(5, 9));
        let s = CompactSolution::build_ints(1, 1, 2, Branch::Second).unwrap();
        assert_eq!(einstein_residual(&s), ratio(65, 81));
        // z = 2: (z-1)³(z³+7z²+13z+3)/(z+1)⁴ = 65/81
        assert_eq!(second_branch_locus().eval(&int(2)) / int(81), ratio(65, 81));
    }

    #[test]
    fn residual_and_criterion_agree() {
        for (k, a, b) in [(1, 1, 2), (2, 1, 3), (5, 3, 11)] {
            let s = CompactSolution::build_ints(k, a, b, Branch::First).unwrap();
            assert_eq!(
                einstein_residual(&s),
                criterion_factor(&s) * criterion_difference(&s)
            );
        }
    }

    #[test]
    fn locus_examples() {
        let one = einstein_locus(1, Branch::First).unwrap();
        assert_eq!(one.roots_z.len(), 1);
        assert!((one.roots_z[0] - 1.784358).abs() < 5e-7);
        assert!((one.roots_z[0] - one.closed_form_z.unwrap()).abs() < 1e-12);
        assert!(einstein_locus(2, Branch::First).unwrap().roots_z.is_empty());
        assert!(einstein_locus(1, Branch::Second)
            .unwrap()
            .roots_z
            .is_empty());
        assert_eq!(
            einstein_locus(2, Branch::Second).unwrap_err(),
            Error::Branch { k: 2 }
        );
    }

    #[test]
    fn radical_sits_inside_the_certified_bracket() {
        let r = ferrari_root();
        let b = page_bracket(&Exact::new(
            BigInt::one(),
            num_traits::pow(BigInt::from(10), 80),
        ))
        .unwrap();
        let slack = Exact::new(BigInt::one(), num_traits::pow(BigInt::from(10), 95));
        assert!(b.lo() - &slack <= r && r <= b.hi() + &slack);
    }

    #[test]
    fn page_point_values() {
        let p = page_point().unwrap();
        assert!((p.z - 1.784358).abs() < 1e-6);
        assert!((p.u_over_v - 3.1839334).abs() < 1e-6);
        assert!(p.radical_gap < 1e-30);
        assert!(p.einstein_certified);
        assert!(p.residual_at_z.abs() < 1e-25);
        assert!(p.z_decimal.starts_with("1.784357981032"));
    }
}
