//! Coefficients of the twelve-step symmetric family.
//!
//! Every method in the family shares the characteristic-polynomial weights
//! `a = (1, -2, 2, -1, 0, ..., 0, -1, 2, -2, 1)`; what varies is the
//! right-hand-side weight vector `b(v)`, a function of the frequency
//! parameter `v = omega * h`. The classical method fixes `b` at the exact
//! rationals that maximize algebraic order (twelve). Each fitted variant
//! `pf-d{i}` instead chooses `b(v)` so that the phase-lag function and its
//! first `i` derivatives vanish at `s = v`, trading two algebraic-order
//! conditions per extra derivative.
//!
//! Two representations of `b(v)` are kept: truncated Maclaurin series
//! (accurate only for small `v`, but immune to cancellation) and the full
//! closed forms (valid on `(0, 2pi)`, but catastrophically
//! cancellation-prone, so they are evaluated in extended precision; see
//! [`closed`](self) internals). [`coefficients`] dispatches between them.

mod closed;
mod taylor;

use crate::bigfloat::BigFloat;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Shared `a`-weights of the family, `a_j` for `j = 0..=12`.
pub const A_COEFFS: [f64; 13] = [
    1.0, -2.0, 2.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 2.0, -2.0, 1.0,
];

/// Classical `b_1..b_6` as exact reduced fractions. `b_0 = 0`, and indices
/// 7..=12 mirror 5..=0.
pub const CLASSICAL_B_RATIONAL: [(i64, i64); 6] = [
    (90987349, 53222400),
    (-114798419, 26611200),
    (270875723, 17740800),
    (-67855831, 2217600),
    (50277247, 985600),
    (-253491379, 4435200),
];

/// Radius inside which the printed Maclaurin series carry truncation error
/// below 1e-13 per weight.
const TAYLOR_RADIUS: f64 = 0.05;

/// Distance from the `csc(v/2)` poles at `v = 0 (mod 2pi)` below which the
/// closed forms are rejected. At 1e-8 the worst cancellation still leaves
/// more than 30 significant digits in the extended evaluation.
const SINGULAR_TOL: f64 = 1e-8;

/// Identifies one method of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodId {
    /// Order-twelve method with constant weights.
    Classical,
    /// Phase-fitted: phase lag vanishes at the fitted frequency.
    PfD0,
    /// Phase lag and first derivative vanish.
    PfD1,
    /// Phase lag and first two derivatives vanish.
    PfD2,
    /// Phase lag and first three derivatives vanish.
    PfD3,
    /// Phase lag and first four derivatives vanish.
    PfD4,
    /// Phase lag and first five derivatives vanish.
    PfD5,
}

impl MethodId {
    /// All methods, classical first, then by fitting order.
    pub const ALL: [MethodId; 7] = [
        MethodId::Classical,
        MethodId::PfD0,
        MethodId::PfD1,
        MethodId::PfD2,
        MethodId::PfD3,
        MethodId::PfD4,
        MethodId::PfD5,
    ];

    /// Number of phase-lag derivatives forced to vanish at the fitted
    /// frequency; `None` for the classical method.
    pub fn fitting_order(self) -> Option<u8> {
        match self {
            MethodId::Classical => None,
            MethodId::PfD0 => Some(0),
            MethodId::PfD1 => Some(1),
            MethodId::PfD2 => Some(2),
            MethodId::PfD3 => Some(3),
            MethodId::PfD4 => Some(4),
            MethodId::PfD5 => Some(5),
        }
    }

    /// The fitted method with `order` vanishing phase-lag derivatives.
    pub fn fitted(order: u8) -> MethodId {
        match order {
            0 => MethodId::PfD0,
            1 => MethodId::PfD1,
            2 => MethodId::PfD2,
            3 => MethodId::PfD3,
            4 => MethodId::PfD4,
            5 => MethodId::PfD5,
            _ => panic!("fitting order must be 0..=5, got {order}"),
        }
    }

    /// Canonical lowercase name, as accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            MethodId::Classical => "classical",
            MethodId::PfD0 => "pf-d0",
            MethodId::PfD1 => "pf-d1",
            MethodId::PfD2 => "pf-d2",
            MethodId::PfD3 => "pf-d3",
            MethodId::PfD4 => "pf-d4",
            MethodId::PfD5 => "pf-d5",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for a method name that is not in the family.
#[derive(Clone, Debug, Error)]
#[error("unknown method {0:?} (expected classical or pf-d0 .. pf-d5)")]
pub struct ParseMethodError(String);

impl FromStr for MethodId {
    type Err = ParseMethodError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MethodId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| ParseMethodError(s.to_owned()))
    }
}

/// Which representation of `b(v)` produced a [`CoefficientSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffSource {
    /// Classical constant weights.
    Constant,
    /// Truncated Maclaurin series (small `v`).
    Taylor,
    /// Closed-form trigonometric expressions.
    ClosedForm,
}

/// Full weight table of one method at one frequency parameter.
///
/// Symmetry (`a_j = a_{12-j}`, `b_j = b_{12-j}`) holds bit-exactly: the
/// upper half of `b` is mirrored from the lower half, never re-evaluated.
#[derive(Clone, Debug)]
pub struct CoefficientSet {
    pub a: [f64; 13],
    pub b: [f64; 13],
    /// Frequency parameter the set was evaluated at (recorded but unused
    /// for the classical method).
    pub v: f64,
    pub source: CoeffSource,
}

/// Branch-selection knobs for [`coefficients`].
#[derive(Clone, Copy, Debug)]
pub struct PrecisionPolicy {
    /// Below this `v` the Maclaurin branch is used.
    pub taylor_threshold: f64,
    /// Above this `v` plain double evaluation of the closed forms would be
    /// acceptable; the evaluator keeps extended precision everywhere, so
    /// this records intent rather than switching code paths.
    pub extended_precision_limit: f64,
    /// Minimum significant decimal digits for extended evaluation. The
    /// evaluator always runs at 384 mantissa bits (about 115 digits),
    /// which satisfies any setting this field accepts.
    pub extended_digits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            taylor_threshold: TAYLOR_RADIUS,
            extended_precision_limit: 1.0,
            extended_digits: 115,
        }
    }
}

/// Errors from coefficient evaluation.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum CoeffError {
    /// `v` is outside `(0, 2pi)` or within tolerance of a `csc(v/2)` pole.
    #[error("frequency parameter v = {v} is singular or outside (0, 2pi)")]
    Domain { v: f64 },
    /// `|v|` exceeds the Maclaurin truncation radius.
    #[error("v = {v} exceeds the Taylor branch radius {radius}")]
    Range { v: f64, radius: f64 },
}

/// Mirrors half-weights `[b_1..b_6]` into the full symmetric 13-vector.
pub(crate) fn mirror_b(half: &[f64; 6]) -> [f64; 13] {
    let mut b = [0.0; 13];
    for (j, &w) in half.iter().enumerate() {
        b[j + 1] = w;
        b[11 - j] = w;
    }
    b
}

fn classical_b_f64() -> [f64; 6] {
    CLASSICAL_B_RATIONAL.map(|(num, den)| num as f64 / den as f64)
}

/// The constant weight set of the classical order-twelve method.
pub fn classical_coefficients() -> CoefficientSet {
    CoefficientSet {
        a: A_COEFFS,
        b: mirror_b(&classical_b_f64()),
        v: 0.0,
        source: CoeffSource::Constant,
    }
}

/// Returns the exact rational constant terms of a method's Maclaurin
/// weight series for `b_1..b_6`.
///
/// Every fitted method's series starts at the classical weights, so this
/// equals [`CLASSICAL_B_RATIONAL`] for all seven methods; exposing the
/// stored numerators and denominators lets callers verify that identity
/// without any floating-point rounding.
pub fn taylor_constant_terms(method: MethodId) -> [(i64, i64); 6] {
    match method.fitting_order() {
        None => CLASSICAL_B_RATIONAL,
        Some(order) => {
            let mut out = [(0i64, 1i64); 6];
            for (j, series) in taylor::TAYLOR[order as usize].iter().enumerate() {
                out[j] = series[0];
            }
            out
        }
    }
}

/// Evaluates the Maclaurin branch of a fitted method's weights.
///
/// The series are exact-rational data truncated at the printed order;
/// beyond `|v| = 0.05` that truncation is no longer below 1e-13 and the
/// call is rejected.
pub fn eval_b_taylor(method: MethodId, v: f64) -> Result<[f64; 13], CoeffError> {
    let order = method
        .fitting_order()
        .expect("the classical method has no Taylor branch");
    if !(v.abs() <= TAYLOR_RADIUS) {
        return Err(CoeffError::Range { v, radius: TAYLOR_RADIUS });
    }
    let v2 = v * v;
    let mut half = [0.0; 6];
    for (j, series) in taylor::TAYLOR[order as usize].iter().enumerate() {
        let mut acc = 0.0;
        for &(num, den) in series.iter().rev() {
            acc = acc * v2 + num as f64 / den as f64;
        }
        half[j] = acc;
    }
    Ok(mirror_b(&half))
}

/// Evaluates the closed-form branch of a fitted method's weights.
///
/// Valid for `v` in `(0, 2pi)` away from the `csc(v/2)` poles; evaluation
/// runs in extended precision throughout and rounds once to doubles, so
/// the result is correct to the last bit or two even where the printed
/// expressions cancel 50 digits.
pub fn eval_b_closed(method: MethodId, v: f64) -> Result<[f64; 13], CoeffError> {
    Ok(mirror_b(&eval_b_closed_ext(method, v)?.map(|w| w.to_f64())))
}

/// Extended-precision closed-form evaluation, shared with the phase-lag
/// analysis which cannot afford the double rounding.
pub(crate) fn eval_b_closed_ext(
    method: MethodId,
    v: f64,
) -> Result<[BigFloat; 6], CoeffError> {
    let order = method
        .fitting_order()
        .expect("the classical method has no closed-form branch");
    if !(v > SINGULAR_TOL && v < 2.0 * std::f64::consts::PI - SINGULAR_TOL) {
        return Err(CoeffError::Domain { v });
    }
    Ok(closed::fitted_b_extended(order, &BigFloat::from_f64(v)))
}

/// Extended-precision weights for any method, dispatching like
/// [`coefficients`] with the default policy: exact rationals for the
/// classical method, Maclaurin below the Taylor radius, closed forms
/// above.
pub(crate) fn b_extended(method: MethodId, v: f64) -> Result<[BigFloat; 6], CoeffError> {
    let order = match method.fitting_order() {
        None => return Ok(CLASSICAL_B_RATIONAL.map(|(n, d)| BigFloat::from_ratio(n, d))),
        Some(order) => order,
    };
    if v.abs() < TAYLOR_RADIUS {
        let v = BigFloat::from_f64(v);
        let v2 = &v * &v;
        Ok(taylor::TAYLOR[order as usize].map(|series| {
            let mut acc = BigFloat::zero();
            for &(num, den) in series.iter().rev() {
                acc = acc * &v2 + BigFloat::from_ratio(num, den);
            }
            acc
        }))
    } else {
        eval_b_closed_ext(method, v)
    }
}

/// Evaluates a method's full weight table at `v`, choosing the branch per
/// `policy`.
///
/// `v` must be nonnegative (it is ignored for the classical method). A
/// policy with `taylor_threshold` beyond the printed series radius makes
/// dispatch forward mid-range `v` to the Taylor branch, which then rejects
/// them; errors from either branch propagate.
pub fn coefficients(
    method: MethodId,
    v: f64,
    policy: PrecisionPolicy,
) -> Result<CoefficientSet, CoeffError> {
    assert!(
        policy.taylor_threshold > 0.0
            && policy.taylor_threshold < policy.extended_precision_limit,
        "policy requires 0 < taylor_threshold < extended_precision_limit"
    );
    if !(v >= 0.0) {
        return Err(CoeffError::Domain { v });
    }
    if method.fitting_order().is_none() {
        let mut set = classical_coefficients();
        set.v = v;
        return Ok(set);
    }
    let (b, source) = if v < policy.taylor_threshold {
        (eval_b_taylor(method, v)?, CoeffSource::Taylor)
    } else {
        (eval_b_closed(method, v)?, CoeffSource::ClosedForm)
    };
    Ok(CoefficientSet { a: A_COEFFS, b, v, source })
}
