//! Independent curvature engine for the diagonal Bianchi IX ansatz.
//!
//! The orthonormal coframe is `e⁰ = A dx`, `eⁱ = Bᵢ σᵢ` with
//! `dσ₁ = 2σ₂∧σ₃` (cyclic). Writing `deᵃ = -½ Cᵃ_bc eᵇ∧eᶜ`, the connection
//! follows from Koszul's formula and the curvature from the second structure
//! equation. Coefficients are Taylor jets in `x` built from the exact Taylor
//! expansion of `Ψ`, so every radial derivative is analytic.
//!
//! For `g` the coefficients are `A = √(t/2Ψ)`, `B₁ = B₂ = √(2t)`,
//! `B₃ = √(2Ψ/t)`; the rescaled metric `h = g/x²` divides each by `|x|`.

#![allow(clippy::needless_range_loop)]

use num_traits::Zero;

use crate::ansatz::MetricProfile;
use crate::exact::{self, Exact};
use crate::jet::Jet;
use crate::quartic::QuarticPoly;
use crate::{par, Error, Result};

/// Endpoint margin as a fraction of `b - a`.
pub const MARGIN_FRACTION: f64 = 0.01;

/// `|r̊_h|` below this fraction of `|Ric_h|` counts as an Einstein point.
pub const EINSTEIN_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// The Kähler metric `g`.
    Kahler,
    /// The Einstein–Maxwell metric `h = g/x²`.
    Rescaled,
}

type Mat = [[Jet; 4]; 4];
type Tensor3 = [[[Jet; 4]; 4]; 4];

/// Orthonormal coframe coefficients as jets at a point.
#[derive(Clone, Copy, Debug)]
pub struct Coframe {
    pub x: f64,
    pub a: Jet,
    pub b: [Jet; 3],
}

/// Connection data of one coframe: `c[a][b][c] = Cᵃ_bc` and
/// `gamma[c][a][b] = g(∇_{E_a} E_b, E_c)`.
#[derive(Clone, Copy, Debug)]
pub struct CoframeConnection {
    pub coframe: Coframe,
    c: Tensor3,
    gamma: Tensor3,
}

/// Ricci data at one point, in the orthonormal frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RicciSample {
    pub x: f64,
    pub tensor: [[f64; 4]; 4],
    pub scalar: f64,
    pub tracefree_norm: f64,
    /// `max |Γ_{c,ab} - Γ_{c,ba} - Cᶜ_ab|` together with the metric-compatibility
    /// defect `max |Γ_{c,ab} + Γ_{b,ac}|`.
    pub first_structure_residual: f64,
}

impl RicciSample {
    pub fn diag(&self) -> [f64; 4] {
        std::array::from_fn(|i| self.tensor[i][i])
    }
}

/// A two-form in the basis `{e⁰¹, e⁰², e⁰³, e¹², e¹³, e²³}` of the `h` coframe.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantTwoForm {
    pub components: [f64; 6],
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl InvariantTwoForm {
    /// Hodge star for the orientation `e⁰¹²³`.
    pub fn hodge_star(&self) -> Self {
        let [f01, f02, f03, f12, f13, f23] = self.components;
        Self {
            components: [f23, -f13, f12, f03, -f02, f01],
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest of the `e⁰¹, e⁰², e¹³, e²³` components, which vanish for
    /// U(2)-invariant forms of this type.
    pub fn off_invariant(&self) -> f64 {
        [0, 1, 4, 5]
            .iter()
            .fold(0.0, |m, &i| m.max(self.components[i].abs()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            components: std::array::from_fn(|i| self.components[i] + other.components[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            components: std::array::from_fn(|i| self.components[i] - other.components[i]),
        }
    }
}

/// Self-dual and anti-self-dual parts of the reconstructed field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Reconstruction {
    pub plus: InvariantTwoForm,
    pub minus: InvariantTwoForm,
    /// `max |⋆F⁻ + F⁻|`.
    pub asd_residual: f64,
    /// `max |F⁻ + F⁻ᵀ|` before antisymmetrisation.
    pub antisymmetry_residual: f64,
    pub tracefree_norm: f64,
}

impl Reconstruction {
    pub fn total(&self) -> InvariantTwoForm {
        self.plus.add(&self.minus)
    }
}

/// One row of a curvature report.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvatureRow {
    pub x: f64,
    pub ricci_h_diag: [f64; 4],
    pub s_h: f64,
    pub tracefree_norm: f64,
    pub first_structure_residual: f64,
    pub j_residual: f64,
    /// `None` at Einstein points, where the field is not determined.
    pub em_residual: Option<f64>,
    pub maxwell_residual: Option<(f64, f64)>,
    pub asd_residual: Option<f64>,
}

/// Residual summary over a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureReport {
    pub rows: Vec<CurvatureRow>,
    pub kappa: f64,
    pub constant_scalar_residual: f64,
    pub max_first_structure: f64,
    pub max_j_residual: f64,
    pub max_tracefree_norm: f64,
    pub min_tracefree_norm: f64,
    /// `None` when every sample is an Einstein point.
    pub max_em_residual: Option<f64>,
    pub max_maxwell_residual: Option<(f64, f64)>,
    pub max_asd_residual: Option<f64>,
    pub einstein: bool,
}

fn psi_jet(profile: &MetricProfile, x: &Exact) -> Jet {
    let t = profile.psi().taylor_at(x);
    Jet(std::array::from_fn(|i| exact::to_f64(&t[i])))
}

/// Default endpoint margin `(b - a)/100`.
pub fn margin(profile: &MetricProfile) -> f64 {
    let (lo, hi) = profile.domain_f64();
    (hi - lo) * MARGIN_FRACTION
}

fn check_margin(profile: &MetricProfile, x: f64) -> Result<()> {
    let (lo, hi) = profile.domain_f64();
    let m = margin(profile);
    if !(x > lo && x < hi) {
        return Err(Error::Domain { x, lo, hi });
    }
    if x < lo + m || x > hi - m {
        return Err(Error::Margin { x, margin: m });
    }
    Ok(())
}

/// `n` points evenly spread over `[a + δ, b - δ]`, cell-centred.
pub fn sample_grid(profile: &MetricProfile, n: usize) -> Vec<f64> {
    let (lo, hi) = profile.domain_f64();
    let m = margin(profile);
    let (lo, hi) = (lo + m, hi - m);
    (0..n)
        .map(|i| lo + (hi - lo) * (i as f64 + 0.5) / n as f64)
        .collect()
}

pub fn coframe(profile: &MetricProfile, x: f64, metric: Metric) -> Result<Coframe> {
    let xe = profile.interior_point(x)?;
    let psi = psi_jet(profile, &xe);
    let t = Jet::variable(exact::to_f64(&(&xe + profile.alpha())));
    let two_psi = psi.scale(2.0);
    let a = (t / two_psi).sqrt();
    let b12 = t.scale(2.0).sqrt();
    let b3 = (two_psi / t).sqrt();
    let mut frame = Coframe {
        x,
        a,
        b: [b12, b12, b3],
    };
    if metric == Metric::Rescaled {
        let inv = Jet::variable(x).abs().recip();
        frame.a = frame.a * inv;
        frame.b = frame.b.map(|b| b * inv);
    }
    Ok(frame)
}

impl CoframeConnection {
    pub fn new(frame: Coframe) -> Self {
        let mut c = [[[Jet::ZERO; 4]; 4]; 4];
        for i in 1..4 {
            let s = frame.b[i - 1].deriv() / (frame.a * frame.b[i - 1]);
            c[i][0][i] = -s;
            c[i][i][0] = s;
        }
        for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            let s = frame.b[i - 1].scale(2.0) / (frame.b[j - 1] * frame.b[k - 1]);
            c[i][j][k] = -s;
            c[i][k][j] = s;
        }
        let mut gamma = [[[Jet::ZERO; 4]; 4]; 4];
        for (cc, g_c) in gamma.iter_mut().enumerate() {
            for (a, g_ca) in g_c.iter_mut().enumerate() {
                for (b, g) in g_ca.iter_mut().enumerate() {
                    *g = (c[cc][a][b] - c[a][b][cc] + c[b][cc][a]).scale(0.5);
                }
            }
        }
        Self {
            coframe: frame,
            c,
            gamma,
        }
    }

    /// `Γ_{c,ab} = g(∇_{E_a} E_b, E_c)`.
    pub fn gamma(&self, c: usize, a: usize, b: usize) -> f64 {
        self.gamma[c][a][b].value()
    }

    pub fn structure_constant(&self, c: usize, a: usize, b: usize) -> f64 {
        self.c[c][a][b].value()
    }

    /// Torsion and metric-compatibility defects of the computed connection.
    pub fn first_structure_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for c in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    let torsion = self.gamma[c][a][b].value()
                        - self.gamma[c][b][a].value()
                        - self.c[c][a][b].value();
                    let compat = self.gamma[c][a][b].value() + self.gamma[b][a][c].value();
                    r = r.max(torsion.abs()).max(compat.abs());
                }
            }
        }
        r
    }

    /// Frame derivative `E_a(f)`; only `E₀ = A⁻¹ ∂ₓ` acts on functions of `x`.
    fn frame_derivative(&self, a: usize, f: &Jet) -> Jet {
        if a == 0 {
            f.deriv() / self.coframe.a
        } else {
            Jet::ZERO
        }
    }

    /// `R^d_{cab}` as jets, indexed `[d][c][a][b]`.
    fn riemann(&self) -> Box<[[[[Jet; 4]; 4]; 4]; 4]> {
        let g = &self.gamma;
        let mut r = Box::new([[[[Jet::ZERO; 4]; 4]; 4]; 4]);
        for d in 0..4 {
            for c in 0..4 {
                for a in 0..4 {
                    for b in 0..4 {
                        let mut v = self.frame_derivative(a, &g[d][b][c])
                            - self.frame_derivative(b, &g[d][a][c]);
                        for e in 0..4 {
                            v = v + g[e][b][c] * g[d][a][e]
                                - g[e][a][c] * g[d][b][e]
                                - self.c[e][a][b] * g[d][e][c];
                        }
                        r[d][c][a][b] = v;
                    }
                }
            }
        }
        r
    }

    /// `Ric_{bc} = Σ_a R^a_{cab}` as jets.
    fn ricci_jets(&self) -> Mat {
        let r = self.riemann();
        let mut ric = [[Jet::ZERO; 4]; 4];
        for (b, row) in ric.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = (0..4).map(|a| r[a][c][a][b]).sum();
            }
        }
        ric
    }
}

fn values(m: &Mat) -> [[f64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[i][j].value()))
}

fn frobenius(m: &[[f64; 4]; 4]) -> f64 {
    m.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
}

fn trace_free(m: &Mat) -> Mat {
    let tr: Jet = (0..4).map(|i| m[i][i]).sum();
    let mut out = *m;
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = row[i] - tr.scale(0.25);
    }
    out
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

/// Gauss–Jordan inverse of a jet matrix, pivoting on values.
fn mat_inverse(m: &Mat) -> Option<Mat> {
    let mut a = *m;
    let mut inv = [[Jet::ZERO; 4]; 4];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = Jet::constant(1.0);
    }
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| a[i][col].value().abs().total_cmp(&a[j][col].value().abs()))?;
        if a[pivot][col].value() == 0.0 {
            return None;
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for j in 0..4 {
            a[col][j] = a[col][j] * p;
            inv[col][j] = inv[col][j] * p;
        }
        for i in 0..4 {
            if i != col {
                let f = a[i][col];
                for j in 0..4 {
                    a[i][j] = a[i][j] - f * a[col][j];
                    inv[i][j] = inv[i][j] - f * inv[col][j];
                }
            }
        }
    }
    Some(inv)
}

fn form_to_matrix(f: &[Jet; 6]) -> Mat {
    let mut m = [[Jet::ZERO; 4]; 4];
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        m[i][j] = f[k];
        m[j][i] = -f[k];
    }
    m
}

fn matrix_to_form(m: &Mat) -> ([Jet; 6], f64) {
    let mut f = [Jet::ZERO; 6];
    let mut asym: f64 = 0.0;
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        f[k] = (m[i][j] - m[j][i]).scale(0.5);
        asym = asym.max((m[i][j].value() + m[j][i].value()).abs());
    }
    for i in 0..4 {
        asym = asym.max(m[i][i].value().abs());
    }
    (f, asym)
}

fn form_values(f: &[Jet; 6]) -> InvariantTwoForm {
    InvariantTwoForm {
        components: f.map(|c| c.value()),
    }
}

/// Ricci tensor of `g` or `h` at `x`, at least `(b-a)/100` away from the ends.
pub fn ricci(profile: &MetricProfile, x: f64, metric: Metric) -> Result<RicciSample> {
    check_margin(profile, x)?;
    ricci_unchecked(profile, x, metric)
}

fn ricci_unchecked(profile: &MetricProfile, x: f64, metric: Metric) -> Result<RicciSample> {
    let conn = CoframeConnection::new(coframe(profile, x, metric)?);
    let ric = conn.ricci_jets();
    let tensor = values(&ric);
    let scalar = (0..4).map(|i| tensor[i][i]).sum();
    Ok(RicciSample {
        x,
        tensor,
        scalar,
        tracefree_norm: frobenius(&values(&trace_free(&ric))),
        first_structure_residual: conn.first_structure_residual(),
    })
}

/// `Δφ = -(1/√det) ∂ₓ(√det A⁻² φ′)` with `√det = A B₁B₂B₃`, by central
/// differences of the coframe values with step `step`. Independent of the
/// closed-form Laplacian in the ansatz module.
pub fn laplacian_fd(
    profile: &MetricProfile,
    phi: impl Fn(f64) -> f64,
    x: f64,
    step: f64,
    metric: Metric,
) -> Result<f64> {
    let flux = |y: f64| -> Result<f64> {
        let f = coframe(profile, y, metric)?;
        let (a, b) = (f.a.value(), f.b.map(|b| b.value()));
        let dphi = (phi(y + step) - phi(y - step)) / (2.0 * step);
        Ok(b[0] * b[1] * b[2] / a * dphi)
    };
    let f = coframe(profile, x, metric)?;
    let density = f.a.value() * f.b.iter().map(|b| b.value()).product::<f64>();
    let d = (flux(x + step)? - flux(x - step)?) / (2.0 * step);
    Ok(-d / density)
}

/// Everything the field reconstruction needs at one point, kept as jets.
struct FieldJets {
    frame: Coframe,
    ricci: Mat,
    tracefree: Mat,
    plus: [Jet; 6],
    minus: [Jet; 6],
    antisymmetry: f64,
}

fn field_jets(profile: &MetricProfile, x: f64) -> Result<FieldJets> {
    check_margin(profile, x)?;
    let frame = coframe(profile, x, Metric::Rescaled)?;
    let conn = CoframeConnection::new(frame);
    let ricci = conn.ricci_jets();
    let tracefree = trace_free(&ricci);
    let norm = frobenius(&values(&tracefree));
    let scale = frobenius(&values(&ricci)).max(1.0);
    if norm < EINSTEIN_TOL * scale {
        return Err(Error::EinsteinPoint { norm });
    }
    // ω = e⁰∧e³ + e¹∧e² in the g coframe is x²(ê⁰³ + ê¹²) in the h coframe.
    let xj = Jet::variable(x);
    let half_x2 = (xj * xj).scale(0.5);
    let plus = [Jet::ZERO, Jet::ZERO, half_x2, half_x2, Jet::ZERO, Jet::ZERO];
    let p_inv = mat_inverse(&form_to_matrix(&plus)).ok_or(Error::Pole { what: "x = 0" })?;
    let n = mat_mul(&p_inv, &tracefree);
    let n = n.map(|row| row.map(|v| v.scale(-0.5)));
    let (minus, antisymmetry) = matrix_to_form(&n);
    Ok(FieldJets {
        frame,
        ricci,
        tracefree,
        plus,
        minus,
        antisymmetry,
    })
}

/// `F⁺ = ω/2` and `F⁻ = -½ (F⁺)⁻¹ ∘ r̊_h` at `x`.
pub fn reconstruct(profile: &MetricProfile, x: f64) -> Result<Reconstruction> {
    let f = field_jets(profile, x)?;
    let plus = form_values(&f.plus);
    let minus = form_values(&f.minus);
    Ok(Reconstruction {
        plus,
        minus,
        asd_residual: minus.hodge_star().add(&minus).max_abs(),
        antisymmetry_residual: f.antisymmetry,
        tracefree_norm: frobenius(&values(&f.tracefree)),
    })
}

/// The reconstructed field `F = F⁺ + F⁻`.
pub fn reconstruct_f(profile: &MetricProfile, x: f64) -> Result<InvariantTwoForm> {
    reconstruct(profile, x).map(|r| r.total())
}

/// Frobenius norm of `[Ric_h + F∘F]₀` with `(F∘F)_{jk} = F_j^ℓ F_{ℓk}`.
pub fn em_residual(profile: &MetricProfile, x: f64) -> Result<f64> {
    let f = field_jets(profile, x)?;
    let total: [Jet; 6] = std::array::from_fn(|i| f.plus[i] + f.minus[i]);
    let m = form_to_matrix(&total);
    let ff = mat_mul(&m, &m);
    let sum: Mat = std::array::from_fn(|i| std::array::from_fn(|j| f.ricci[i][j] + ff[i][j]));
    Ok(frobenius(&values(&trace_free(&sum))))
}

/// Coefficients of `dx∧σⱼ∧σₖ` in `dF` for `F = Σ pᵢ dx∧σᵢ + qᵢ σⱼ∧σₖ`
/// (cyclic), namely `qᵢ′ - 2pᵢ`.
pub fn d_coordinate(p: &[Jet; 3], q: &[Jet; 3]) -> [f64; 3] {
    std::array::from_fn(|i| q[i].deriv().value() - 2.0 * p[i].value())
}

/// Exact `dω` for `ω = dx∧σ₃ + 2(x+α)σ₁∧σ₂`: all three coefficients at `x`.
pub fn kahler_form_d_exact(profile: &MetricProfile, x: &Exact) -> [Exact; 3] {
    let zero = QuarticPoly::zero();
    let one = QuarticPoly::monomial(0, Exact::from_integer(1.into()));
    let q3 = &QuarticPoly::linear_root(&-profile.alpha()) * &exact::int(2);
    let p = [&zero, &zero, &one];
    let q = [&zero, &zero, &q3];
    std::array::from_fn(|i| q[i].derivative().eval(x) - p[i].eval(x) * exact::int(2))
}

/// `dF` in the orthonormal `h` frame: the `ê⁰ʲᵏ` components for `i = 1, 2, 3`.
fn d_orthonormal(frame: &Coframe, f: &[Jet; 6]) -> [f64; 3] {
    let [f01, f02, f03, f12, f13, f23] = *f;
    let (a, b) = (frame.a, frame.b);
    let p = [f01 * a * b[0], f02 * a * b[1], f03 * a * b[2]];
    let q = [f23 * b[1] * b[2], -(f13 * b[2] * b[0]), f12 * b[0] * b[1]];
    let d = d_coordinate(&p, &q);
    let norm = [
        (a * b[1] * b[2]).value(),
        (a * b[2] * b[0]).value(),
        (a * b[0] * b[1]).value(),
    ];
    std::array::from_fn(|i| d[i] / norm[i])
}

fn star_jets(f: &[Jet; 6]) -> [Jet; 6] {
    let [f01, f02, f03, f12, f13, f23] = *f;
    [f23, -f13, f12, f03, -f02, f01]
}

fn max_abs3(v: [f64; 3]) -> f64 {
    v.iter().fold(0.0, |m, c| m.max(c.abs()))
}

/// `(max |dF|, max |d⋆F|)` at one point, in the orthonormal `h` frame.
pub fn maxwell_residual_at(profile: &MetricProfile, x: f64) -> Result<(f64, f64)> {
    let f = field_jets(profile, x)?;
    let total: [Jet; 6] = std::array::from_fn(|i| f.plus[i] + f.minus[i]);
    let df = max_abs3(d_orthonormal(&f.frame, &total));
    let dstar = max_abs3(d_orthonormal(&f.frame, &star_jets(&total)));
    Ok((df, dstar))
}

/// `max |dF⁻|` at one point: the closedness of the anti-self-dual part.
pub fn d_minus_at(profile: &MetricProfile, x: f64) -> Result<f64> {
    let f = field_jets(profile, x)?;
    Ok(max_abs3(d_orthonormal(&f.frame, &f.minus)))
}

/// Maxwell residuals maximised over an `n`-point grid.
pub fn maxwell_residual(profile: &MetricProfile, samples: usize) -> Result<(f64, f64)> {
    let grid = sample_grid(profile, samples.max(1));
    let rows = par::try_map(&grid, |&x| maxwell_residual_at(profile, x))?;
    Ok(rows.into_iter().fold((0.0, 0.0), |(a, b), (c, d)| {
        (f64::max(a, c), f64::max(b, d))
    }))
}

/// `κ = -12ℭ` read off the linear coefficient of `Ψ`.
pub fn kappa_of(profile: &MetricProfile) -> f64 {
    -12.0 * exact::to_f64(profile.psi().coeff(1))
}

/// `max |tr Ric_h - κ| / |κ|` over an `n`-point grid (absolute when `κ = 0`).
pub fn constant_scalar_residual(profile: &MetricProfile, samples: usize) -> Result<f64> {
    if samples < 2 {
        return Err(Error::InvalidInput("need at least two samples".into()));
    }
    let kappa = kappa_of(profile);
    let scale = if kappa == 0.0 { 1.0 } else { kappa.abs() };
    let grid = sample_grid(profile, samples);
    let s = par::try_map(&grid, |&x| {
        ricci(profile, x, Metric::Rescaled).map(|r| r.scalar)
    })?;
    Ok(s.iter().fold(0.0, |m, v| m.max((v - kappa).abs() / scale)))
}

/// `max |r̊(J·, J·) - r̊|` with `J: e⁰ ↦ e³, e¹ ↦ e²`.
pub fn j_invariance_residual(tensor: &[[f64; 4]; 4]) -> f64 {
    let mut j = [[0.0; 4]; 4];
    j[3][0] = 1.0;
    j[0][3] = -1.0;
    j[2][1] = 1.0;
    j[1][2] = -1.0;
    let mut r = 0.0f64;
    for a in 0..4 {
        for b in 0..4 {
            let mut v = 0.0;
            for c in 0..4 {
                for d in 0..4 {
                    v += j[c][a] * tensor[c][d] * j[d][b];
                }
            }
            r = r.max((v - tensor[a][b]).abs());
        }
    }
    r
}

fn row_at(profile: &MetricProfile, x: f64) -> Result<CurvatureRow> {
    let ric = ricci(profile, x, Metric::Rescaled)?;
    let tr = ric.scalar / 4.0;
    let mut r0 = ric.tensor;
    for (i, row) in r0.iter_mut().enumerate() {
        row[i] -= tr;
    }
    let (em, maxwell, asd) = match reconstruct(profile, x) {
        Ok(rec) => (
            Some(em_residual(profile, x)?),
            Some(maxwell_residual_at(profile, x)?),
            Some(rec.asd_residual.max(rec.antisymmetry_residual)),
        ),
        Err(Error::EinsteinPoint { .. }) => (None, None, None),
        Err(e) => return Err(e),
    };
    Ok(CurvatureRow {
        x,
        ricci_h_diag: ric.diag(),
        s_h: ric.scalar,
        tracefree_norm: ric.tracefree_norm,
        first_structure_residual: ric.first_structure_residual,
        j_residual: j_invariance_residual(&r0),
        em_residual: em,
        maxwell_residual: maxwell,
        asd_residual: asd,
    })
}

/// Per-point curvature rows on an `n`-point grid plus their maxima.
pub fn report(profile: &MetricProfile, samples: usize) -> Result<CurvatureReport> {
    let grid = sample_grid(profile, samples.max(2));
    let rows = par::try_map(&grid, |&x| row_at(profile, x))?;
    let kappa = kappa_of(profile);
    let scale = if kappa == 0.0 { 1.0 } else { kappa.abs() };
    let fold = |f: &dyn Fn(&CurvatureRow) -> f64| rows.iter().map(f).fold(0.0, f64::max);
    let opt_max = |f: &dyn Fn(&CurvatureRow) -> Option<f64>| {
        rows.iter()
            .filter_map(f)
            .fold(None, |m: Option<f64>, v| Some(m.map_or(v, |m| m.max(v))))
    };
    let max_maxwell = {
        let d = opt_max(&|r| r.maxwell_residual.map(|m| m.0));
        let s = opt_max(&|r| r.maxwell_residual.map(|m| m.1));
        d.zip(s)
    };
    let einstein = rows.iter().all(|r| r.em_residual.is_none());
    Ok(CurvatureReport {
        kappa,
        constant_scalar_residual: fold(&|r| (r.s_h - kappa).abs() / scale),
        max_first_structure: fold(&|r| r.first_structure_residual),
        max_j_residual: fold(&|r| r.j_residual),
        max_tracefree_norm: fold(&|r| r.tracefree_norm),
        min_tracefree_norm: rows
            .iter()
            .map(|r| r.tracefree_norm)
            .fold(f64::INFINITY, f64::min),
        max_em_residual: opt_max(&|r| r.em_residual),
        max_maxwell_residual: max_maxwell,
        max_asd_residual: opt_max(&|r| r.asd_residual),
        einstein,
        rows,
    })
}

/// Whether every trace-free Ricci sample of `h` on the grid is below `tol`.
pub fn is_einstein_on_grid(profile: &MetricProfile, samples: usize, tol: f64) -> Result<bool> {
    let grid = sample_grid(profile, samples.max(2));
    let norms = par::try_map(&grid, |&x| {
        ricci(profile, x, Metric::Rescaled).map(|r| r.tracefree_norm)
    })?;
    Ok(norms.iter().all(|&n| n < tol))
}

#[doc(hidden)]
pub fn is_zero_exact(v: &[Exact; 3]) -> bool {
    v.iter().all(Zero::is_zero)
}
