//! Numerical tolerances used across the crate.
//!
//! Centralized so that every threshold has one authoritative value and a
//! stated reason. Library code never hardcodes a tolerance inline.

/// Maximum-norm residual of the circle-pattern angle-sum system at which the
/// Newton solve is declared converged. Double precision leaves roughly three
/// orders of magnitude of headroom below this before roundoff dominates.
pub const SOLVER_RESIDUAL: f64 = 1e-12;

/// Maximum disagreement between multiply-determined points in the kite layout.
/// Layout propagates solved radii through ~E kites, so it accumulates more
/// roundoff than the solve itself.
pub const LAYOUT_CLOSURE: f64 = 1e-9;

/// Per-kite orthogonality check after layout: relative error of
/// `|center_f - center_g|^2` against `r_f^2 + r_g^2`.
pub const KITE_ORTHOGONALITY: f64 = 1e-10;

/// Absolute accuracy of the Lobachevsky function evaluation.
pub const LOBACHEVSKY_ABS: f64 = 1e-13;

/// Residual of collinearity when fitting the rectangle sides to laid-out
/// boundary points.
pub const RECTANGLE_FIT: f64 = 1e-7;

/// Agreement required between volumes computed with different choices of the
/// deleted vertex, and between the generic pipeline and the W(3,q) fast path.
pub const VOLUME_INVARIANCE: f64 = 1e-8;

/// Accuracy of the root found for the W(3,q) closure equation.
pub const WEAVING_ROOT: f64 = 1e-14;

/// Default iteration cap for the Newton solve. Overridable per call site; the
/// CLI maps the RAV_MAX_ITER environment variable onto it.
pub const MAX_NEWTON_ITER: usize = 200;
