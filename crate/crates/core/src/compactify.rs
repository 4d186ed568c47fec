//! Compact solutions on the Hirzebruch surface `Σ_k`.
//!
//! For `b > a > 0` the quartic
//!
//! ```text
//! Ψ(x) = ((b - x)(x - a)/(b - a)) · [k(x + α) + E(b - x)(x - a)]
//! E    = (kα - (k+1)a - (k-1)b) / (a² + 4ab + b²)
//! ```
//!
//! vanishes at both ends with the slopes that close the metric up smoothly
//! over the curves `C₋` (at `x = a`) and `C₊` (at `x = b`). It has the reduced
//! form for exactly two shifts: `α = -ab/(a+b)` (First) and, when `k = 1`
//! only, `α = -4a²b/(a+b)²` (Second).

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::ansatz::{MetricProfile, ReducedQuartic};
use crate::exact::{self, int, Exact};
use crate::quartic::{QuarticPoly, Upper};
use crate::{Error, Result};

/// Relative gap below which `b` and `a` are treated as coincident in float paths.
pub const DEGENERATION_TOL: f64 = 1e-12;

/// Approximation width used when an irrational parameter must be rationalised.
fn rational_width() -> Exact {
    Exact::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 40))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    First,
    Second,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::First => "first",
            Branch::Second => "second",
        })
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" | "1" => Ok(Branch::First),
            "second" | "2" => Ok(Branch::Second),
            _ => Err(Error::InvalidInput(format!("unknown branch {s:?}"))),
        }
    }
}

fn check_order(a: &Exact, b: &Exact) -> Result<()> {
    if !a.is_positive() || b <= a {
        return Err(Error::InvalidInput(format!(
            "need b > a > 0 (got a = {a}, b = {b})"
        )));
    }
    Ok(())
}

fn check_branch(k: u32, branch: Branch) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be a positive integer".into()));
    }
    if branch == Branch::Second && k != 1 {
        return Err(Error::Branch { k });
    }
    Ok(())
}

/// The shift `α` of the requested branch.
pub fn alpha_of(k: u32, a: &Exact, b: &Exact, branch: Branch) -> Result<Exact> {
    check_branch(k, branch)?;
    check_order(a, b)?;
    Ok(match branch {
        Branch::First => -(a * b) / (a + b),
        Branch::Second => alpha_second_general(k, a, b),
    })
}

/// The second root of the reduced-form condition for arbitrary `k`:
/// `-2ab[a(k+1) + b(k-1)] / (k(a+b)²)`. Only `k = 1` gives `a + α > 0`.
pub fn alpha_second_general(k: u32, a: &Exact, b: &Exact) -> Exact {
    let k = int(k as i64);
    let s = a + b;
    -(int(2) * a * b * (a * (&k + int(1)) + b * (&k - int(1)))) / (k * &s * &s)
}

pub fn e_of(k: u32, a: &Exact, b: &Exact, alpha: &Exact) -> Exact {
    let k = int(k as i64);
    (&k * alpha - (&k + int(1)) * a - (&k - int(1)) * b) / (a * a + int(4) * a * b + b * b)
}

/// The quartic of a compact solution for an arbitrary shift.
pub fn constrained_quartic(k: u32, a: &Exact, b: &Exact, alpha: &Exact) -> QuarticPoly {
    let e = e_of(k, a, b, alpha);
    // (b - x)(x - a) = -x² + (a+b)x - ab
    let bump = QuarticPoly::new([-(a * b), a + b, -Exact::one(), Exact::zero(), Exact::zero()]);
    let inner = &(&QuarticPoly::linear_root(&-alpha) * &int(k as i64)) + &(&bump * &e);
    bump.checked_mul(&inner)
        .expect("quadratic times quadratic")
        .scale(&(b - a).recip())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompactSolution {
    k: u32,
    a: Exact,
    b: Exact,
    branch: Branch,
    alpha: Exact,
    e: Exact,
    psi: QuarticPoly,
}

/// Outcome of each exact check, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<(&'static str, bool)>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks
            .iter()
            .find(|&&(_, ok)| !ok)
            .map(|&(name, _)| name)
    }
}

/// Symplectic areas in units of `2π`.
#[derive(Clone, Debug, PartialEq)]
pub struct KahlerClass {
    pub k: u32,
    pub area_cminus: Exact,
    pub area_cplus: Exact,
    pub area_f: Exact,
}

impl KahlerClass {
    /// `(u, v)` with `Ω = u𝓛 - v𝔈`, defined for `k = 1` only.
    pub fn uv(&self) -> Option<(Exact, Exact)> {
        (self.k == 1).then(|| (self.area_cplus.clone(), self.area_cminus.clone()))
    }

    pub fn u_over_v(&self) -> Option<Exact> {
        self.uv().map(|(u, v)| u / v)
    }
}

/// One entry of a `k = 1` enumeration.
#[derive(Clone, Debug, PartialEq)]
pub struct Enumerated {
    pub solution: CompactSolution,
    /// Set on the single entry returned at `u/v = 9`, where all branches meet.
    pub merged: bool,
    /// `𝔷 = (b/a - 1)/2` for Second-branch entries.
    pub zeta: Option<Exact>,
}

impl CompactSolution {
    /// Constructs and validates the solution of branch `branch`.
    pub fn build(k: u32, a: Exact, b: Exact, branch: Branch) -> Result<Self> {
        let alpha = alpha_of(k, &a, &b, branch)?;
        let e = e_of(k, &a, &b, &alpha);
        let psi = constrained_quartic(k, &a, &b, &alpha);
        let sol = Self {
            k,
            a,
            b,
            branch,
            alpha,
            e,
            psi,
        };
        let report = sol.validate();
        match report.first_failure() {
            None => Ok(sol),
            Some(name) => Err(Error::Validation(name.to_string())),
        }
    }

    pub fn build_ints(k: u32, a: i64, b: i64, branch: Branch) -> Result<Self> {
        Self::build(k, int(a), int(b), branch)
    }

    /// Assembles a solution from raw parts without validation; negative
    /// controls use this to feed deliberately broken data to [`validate`].
    ///
    /// [`validate`]: CompactSolution::validate
    pub fn from_parts(
        k: u32,
        a: Exact,
        b: Exact,
        branch: Branch,
        alpha: Exact,
        e: Exact,
        psi: QuarticPoly,
    ) -> Self {
        Self {
            k,
            a,
            b,
            branch,
            alpha,
            e,
            psi,
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> &Exact {
        &self.a
    }

    pub fn b(&self) -> &Exact {
        &self.b
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn alpha(&self) -> &Exact {
        &self.alpha
    }

    pub fn e(&self) -> &Exact {
        &self.e
    }

    pub fn psi(&self) -> &QuarticPoly {
        &self.psi
    }

    pub fn reduced(&self) -> Result<ReducedQuartic> {
        ReducedQuartic::from_poly(&self.psi, &self.alpha)
    }

    pub fn profile(&self) -> Result<MetricProfile> {
        MetricProfile::new(
            self.psi.clone(),
            self.alpha.clone(),
            self.a.clone(),
            self.b.clone(),
        )
    }

    /// `κ = -12ℭ`, the constant scalar curvature of `h`.
    pub fn kappa(&self) -> Exact {
        -self.psi.coeff(1) * int(12)
    }

    /// Every boundary, positivity and reduced-form condition, checked exactly.
    pub fn validate(&self) -> ValidationReport {
        let (a, b, alpha) = (&self.a, &self.b, &self.alpha);
        let k = int(self.k as i64);
        let dpsi = self.psi.derivative();
        let order = a.is_positive() && b > a;
        let checks = vec![
            ("b > a > 0", order),
            ("a + α > 0", (a + alpha).is_positive()),
            ("Ψ(a) = 0", self.psi.eval(a).is_zero()),
            ("Ψ(b) = 0", self.psi.eval(b).is_zero()),
            ("Ψ′(a) = k(a+α)", dpsi.eval(a) == &k * (a + alpha)),
            ("Ψ′(b) = -k(b+α)", dpsi.eval(b) == -(&k * (b + alpha))),
            (
                "Ψ > 0 on (a,b)",
                order && self.psi.is_positive_on_open_interval(a, b),
            ),
            ("x² coefficient = 1", self.psi.coeff(2).is_one()),
            (
                "constant term = ℭα/2",
                *self.psi.coeff(0) == self.psi.coeff(1) * alpha / int(2),
            ),
        ];
        ValidationReport { checks }
    }

    pub fn kahler_class(&self) -> KahlerClass {
        KahlerClass {
            k: self.k,
            area_cminus: &self.a + &self.alpha,
            area_cplus: &self.b + &self.alpha,
            area_f: (&self.b - &self.a) / int(self.k as i64),
        }
    }

    /// The quadratic `Q(y) = Ψ(x)(b-a)/((b-x)(x-a))` in `y = x - a`,
    /// coefficients in increasing powers.
    pub fn q_in_y(&self) -> [Exact; 3] {
        let k = int(self.k as i64);
        let (a, b) = (&self.a, &self.b);
        [
            &k * (a + &self.alpha),
            &k + &self.e * (b - a),
            -self.e.clone(),
        ]
    }
}

fn positive(name: &str, x: &Exact) -> Result<()> {
    if !x.is_positive() {
        return Err(Error::InvalidInput(format!(
            "{name} must be positive (got {x})"
        )));
    }
    Ok(())
}

/// Positive root of a quadratic `c₀ + c₁y + c₂y²` above `lo`, exact when
/// rational and otherwise the simplest rational within [`rational_width`].
fn quadratic_root_above(c: [Exact; 3], lo: &Exact) -> Result<Option<Exact>> {
    let [c0, c1, c2] = c;
    let p = QuarticPoly::new([c0, c1, c2, Exact::zero(), Exact::zero()]);
    let mut roots = p.real_roots_in(lo, &Upper::Infinity)?;
    Ok(roots.last_mut().map(|r| r.rationalize(&rational_width())))
}

/// The First-branch `(a, b)` with `a + α = area_cminus` and `(b-a)/k = area_f`.
///
/// `a` solves `a² - 2Ca - CkF = 0`; it is returned exactly when rational and
/// to within `1e-40` otherwise.
pub fn solve_class_first(k: u32, area_cminus: &Exact, area_f: &Exact) -> Result<(Exact, Exact)> {
    check_branch(k, Branch::First)?;
    positive("area of C₋", area_cminus)?;
    positive("area of F", area_f)?;
    let c = area_cminus;
    let kf = int(k as i64) * area_f;
    let a = quadratic_root_above([-(c * &kf), -(c * int(2)), Exact::one()], &Exact::zero())?
        .ok_or(Error::InvalidInput("no positive root".into()))?;
    if exact::to_f64(&kf) < DEGENERATION_TOL * exact::to_f64(&a) {
        return Err(Error::Degeneration {
            tolerance: DEGENERATION_TOL,
        });
    }
    let b = &a + kf;
    Ok((a, b))
}

/// All U(2)-invariant solutions with `Ω = u𝓛 - v𝔈` on `Σ₁`, normalised so
/// that the area of `𝔈` equals `v`.
///
/// One First solution with `b/a = √(u/v)`; for `u/v > 9` two more Second
/// solutions with `b/a = 1 + 2𝔷` and `5 + 2(𝔷 + 1/𝔷) = u/v`. At `u/v = 9` they
/// all coincide and a single entry flagged `merged` is returned.
pub fn enumerate_k1(u: &Exact, v: &Exact) -> Result<Vec<Enumerated>> {
    positive("u", u)?;
    positive("v", v)?;
    let r = u / v;
    if r <= Exact::one() {
        return Err(Error::DegenerateClass {
            ratio: exact::to_f64(&r),
        });
    }
    let z = quadratic_root_above([-r.clone(), Exact::zero(), Exact::one()], &Exact::one())?.ok_or(
        Error::DegenerateClass {
            ratio: exact::to_f64(&r),
        },
    )?;
    if exact::to_f64(&(&z - Exact::one())) < DEGENERATION_TOL {
        return Err(Error::Degeneration {
            tolerance: DEGENERATION_TOL,
        });
    }
    let a = v * (Exact::one() + &z);
    let b = &z * &a;
    let nine = int(9);
    let first = CompactSolution::build(1, a, b, Branch::First)?;
    let mut out = vec![Enumerated {
        solution: first,
        merged: r == nine,
        zeta: None,
    }];
    if r > nine {
        // 𝔷² - ((r-5)/2)𝔷 + 1 = 0; the roots are reciprocal.
        let half = (&r - int(5)) / int(2);
        let zeta_hi = quadratic_root_above([Exact::one(), -half, Exact::one()], &Exact::one())?
            .ok_or(Error::Threshold {
                ratio: exact::to_f64(&r),
            })?;
        let zeta_lo = zeta_hi.recip();
        for zeta in [zeta_lo, zeta_hi] {
            let a = v * (Exact::one() + &zeta).pow(2) / zeta.pow(2);
            let b = (Exact::one() + int(2) * &zeta) * &a;
            let solution = CompactSolution::build(1, a, b, Branch::Second)?;
            out.push(Enumerated {
                solution,
                merged: false,
                zeta: Some(zeta),
            });
        }
    }
    Ok(out)
}
