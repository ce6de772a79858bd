//! Phase-lag function of the family, its s-derivatives, and the principal
//! local truncation error.
//!
//! Applied to the test equation `y'' = -sigma^2 y` with `s = sigma * h`,
//! a method of the family has characteristic coefficients
//! `A_j(s^2, v) = a_{6-j} + s^2 b_{6-j}(v)` and phase lag
//!
//! ```text
//! PL(s, v) = [2 sum_{j=1}^{6} A_j cos(j s) + A_0] / [2 sum_{j=1}^{6} j^2 A_j]
//! ```
//!
//! The numerator cancels to `O(s^14)` near `s = 0` (the method order), so
//! doubles lose all significant digits exactly where the function is most
//! interesting; evaluation therefore runs in extended precision and rounds
//! once. Derivatives in `s` are central finite differences on that
//! extended evaluation with Richardson refinement, which keeps the noise
//! floor near 1e-14 even at order six.

use crate::bigfloat::BigFloat;
use crate::coeffs::{self, CoeffError, MethodId, PrecisionPolicy};
use thiserror::Error;

/// Exact principal-truncation-error prefactor shared by the whole family.
pub const PLTE_FACTOR: (i64, i64) = (16301796103, 290594304000);

/// `a_{6-j}` for `j = 0..=6`.
const A_REV: [i64; 7] = [0, 0, 0, -1, 2, -2, 1];

/// Relative threshold below which the phase-lag denominator counts as
/// singular.
const SINGULAR_REL: f64 = 1e-14;

/// Characteristic coefficients `A_0..A_6` of a method at `(s, v)`.
#[derive(Clone, Debug)]
pub struct CharCoefficients {
    /// `a[j] = A_j(s^2, v)`; `a[6] = 1` always (`b_0 = 0`).
    pub a: [f64; 7],
    pub s: f64,
    pub v: f64,
}

/// Errors from phase-lag evaluation.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum PhaseLagError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    /// `|2 sum j^2 A_j|` fell below `1e-14` times the magnitude sum of its
    /// terms.
    #[error("phase-lag denominator {denominator:e} is singular (scale {scale:e})")]
    SingularDenominator { denominator: f64, scale: f64 },
}

/// Evaluates the characteristic coefficients at `(s, v)`.
///
/// `s` and `v` must be nonnegative; coefficient-branch errors propagate.
pub fn char_coeffs(
    method: MethodId,
    s: f64,
    v: f64,
) -> Result<CharCoefficients, PhaseLagError> {
    let set = coeffs::coefficients(method, v, PrecisionPolicy::default())?;
    let s2 = s * s;
    let mut a = [0.0; 7];
    for (j, slot) in a.iter_mut().enumerate() {
        *slot = set.a[6 - j] + s2 * set.b[6 - j];
    }
    Ok(CharCoefficients { a, s, v })
}

/// Extended-precision phase lag from half-weights `b = [b_1..b_6]`.
fn pl_extended(b: &[BigFloat; 6], s: &BigFloat) -> Result<BigFloat, PhaseLagError> {
    let s2 = s * s;
    let mut a: Vec<BigFloat> = (0..=5)
        .map(|j| A_REV[j] + &s2 * &b[5 - j])
        .collect();
    a.push(BigFloat::one());

    // cos(j s) by the Chebyshev recurrence from a single Maclaurin value.
    let c1 = s.cos();
    let mut cos_js = vec![BigFloat::one(), c1.clone()];
    for j in 2..=6 {
        cos_js.push(2 * (&c1 * &cos_js[j - 1]) - &cos_js[j - 2]);
    }

    let mut num = a[0].clone();
    let mut den = BigFloat::zero();
    let mut scale = 0.0_f64;
    for j in 1..=6usize {
        num = num + 2 * (&a[j] * &cos_js[j]);
        let weighted = 2 * (j * j) as i64 * &a[j];
        scale += weighted.to_f64().abs();
        den = den + weighted;
    }
    let den_f64 = den.to_f64();
    if den_f64.abs() < SINGULAR_REL * scale {
        return Err(PhaseLagError::SingularDenominator { denominator: den_f64, scale });
    }
    Ok(num / den)
}

/// Phase lag `PL(s, v)` of a method.
///
/// Even in `s`; vanishes at `s = 0` for every method (consistency) and at
/// `s = v` for the fitted methods (their defining condition).
pub fn phase_lag(method: MethodId, s: f64, v: f64) -> Result<f64, PhaseLagError> {
    let b = coeffs::b_extended(method, v)?;
    Ok(pl_extended(&b, &BigFloat::from_f64(s))?.to_f64())
}

/// Central FD stencils with `O(d^2)` leading error for derivative orders
/// 1..=6: `(offsets-and-weights, divisor coefficient)`; the quotient is
/// `sum w_i f(s + o_i d) / (coeff * d^order)`.
const STENCILS: [(&[(i64, i64)], i64); 6] = [
    (&[(1, 1), (-1, -1)], 2),
    (&[(1, 1), (0, -2), (-1, 1)], 1),
    (&[(2, 1), (1, -2), (-1, 2), (-2, -1)], 2),
    (&[(2, 1), (1, -4), (0, 6), (-1, -4), (-2, 1)], 1),
    (&[(3, 1), (2, -4), (1, 5), (-1, -5), (-2, 4), (-3, -1)], 2),
    (&[(3, 1), (2, -6), (1, 15), (0, -20), (-1, 15), (-2, -6), (-3, 1)], 1),
];

/// Richardson refinement levels (step halvings) per derivative call.
const FD_LEVELS: usize = 4;

/// Estimates the `order`-th s-derivative of the phase lag at `(s, v)`.
///
/// Returns `(estimate, error)` where `error` is the spread of the last two
/// Richardson refinements. The base step is `max(1e-3, 1e-2 * s)`, halved
/// [`FD_LEVELS`] times; function values come from the extended evaluation,
/// so the estimates bottom out near 1e-14 rather than at the usual f64 FD
/// noise. Supports orders 1..=6 (one past the deepest fitted method, so
/// the first non-vanishing derivative of every method is reachable).
pub fn phase_lag_derivative(
    method: MethodId,
    s: f64,
    v: f64,
    order: u32,
) -> Result<(f64, f64), PhaseLagError> {
    assert!((1..=6).contains(&order), "derivative order must be 1..=6, got {order}");
    let b = coeffs::b_extended(method, v)?;
    let (stencil, divisor) = STENCILS[order as usize - 1];
    let base = BigFloat::from_f64(f64::max(1e-3, 1e-2 * s));
    let s_ext = BigFloat::from_f64(s);

    let mut rows = [0.0_f64; FD_LEVELS];
    for (level, row) in rows.iter_mut().enumerate() {
        let d = &base / (1_i64 << level);
        let mut acc = BigFloat::zero();
        for &(offset, weight) in stencil {
            let x = &s_ext + offset * &d;
            acc = acc + weight * pl_extended(&b, &x)?;
        }
        *row = (acc / (divisor * d.powi(order))).to_f64();
    }

    // Neville-style Richardson triangle in doubles; the FD error expands in
    // even powers of d, so each column gains a factor 4 of convergence.
    let mut table = rows;
    let mut prev_diag = table[0];
    let mut diag = table[0];
    for m in 1..FD_LEVELS {
        for l in 0..FD_LEVELS - m {
            let pow = 4f64.powi(m as i32);
            table[l] = (pow * table[l + 1] - table[l]) / (pow - 1.0);
        }
        prev_diag = diag;
        diag = table[0];
    }
    Ok((diag, (diag - prev_diag).abs()))
}

/// Principal local truncation error of a method.
///
/// `y_derivs[k]` holds the even solution derivative `y^(2k+2)` at the
/// expansion point (so `y_derivs[0] = y''` and `y_derivs[6] = y^(14)`).
/// For the fitted method of order `i` the error polynomial is the
/// binomial combination `sum_m C(i+1, m) y^(14-2m) omega^(2m)`; the
/// classical method keeps only the `y^(14)` term. Both are scaled by the
/// family factor [`PLTE_FACTOR`] and `h^14`. Feeding `y = sin(omega x)`
/// derivatives makes every fitted polynomial vanish identically (the
/// alternating binomial sum), which is what fitting buys on resonant
/// problems.
pub fn plte_estimate(method: MethodId, y_derivs: &[f64; 7], omega: f64, h: f64) -> f64 {
    let factor = PLTE_FACTOR.0 as f64 / PLTE_FACTOR.1 as f64;
    let coeff = match method.fitting_order() {
        None => y_derivs[6],
        Some(i) => {
            let n = u32::from(i) + 1;
            let omega2 = omega * omega;
            let mut power = 1.0;
            let mut acc = 0.0;
            for m in 0..=n {
                acc += binomial(n, m) * y_derivs[6 - m as usize] * power;
                power *= omega2;
            }
            acc
        }
    };
    factor * coeff * h.powi(14)
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}
