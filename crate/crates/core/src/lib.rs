//! Construction and verification of the U(2)-invariant, conformally Kähler
//! Einstein–Maxwell metrics on Hirzebruch surfaces.
//!
//! The pipeline is:
//!
//! * [`quartic`]: exact quartic polynomials over the rationals, Sturm-based
//!   root isolation and interval positivity.
//! * [`ansatz`]: the cohomogeneity-one Kähler metric `g` attached to a quartic
//!   `Ψ(x)` and a shift `α`, its scalar curvature, Laplacian, the conformal
//!   scalar-curvature constant of `h = g/x²`, and the extremal/Einstein
//!   classification.
//! * [`compactify`]: the two-parameter families `(k, a, b, branch)` that close
//!   up smoothly on the Hirzebruch surface `Σ_k`, their exact validation and
//!   their Kähler classes.
//! * [`curvature`]: an independent Cartan-frame curvature engine used to
//!   verify the full Einstein–Maxwell system numerically.
//! * [`invariants`]: closed-form `s_h`, `V_h`, `s_h V_h^{1/2}`, Hermitian areas
//!   and the moduli component-count scan.
//! * [`page`]: the Einstein locus, including the Page point.
//!
//! Exact quantities are [`Exact`] (arbitrary precision rationals); only root
//! values and curvature samples are floating point.

pub mod ansatz;
pub mod compactify;
pub mod curvature;
pub mod exact;
pub mod invariants;
pub mod jet;
pub mod page;
pub mod par;
pub mod quartic;

mod error;

pub use ansatz::{Classification, FrameSample, MetricProfile, ReducedQuartic};
pub use compactify::{Branch, CompactSolution, Enumerated, KahlerClass, ValidationReport};
pub use error::{Error, Result};
pub use exact::Exact;
pub use quartic::{QuarticPoly, RootBracket, Upper};
