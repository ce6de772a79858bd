//! Twelve-step symmetric multistep methods for `y'' = f(x, y)`.
//!
//! The family consists of a classical constant-coefficient method of
//! algebraic order 12 and six phase-fitted variants `PF-D0`..`PF-D5`.
//! Variant `PF-Di` chooses its `b`-coefficients as functions of a fitting
//! parameter `v = omega * h` so that the method's phase-lag function and
//! its first `i` derivatives in `s` vanish at `s = v`, which desensitizes
//! the phase accuracy to errors in the frequency estimate `omega`.
//!
//! Modules:
//! - [`bigfloat`]: fixed-precision (384-bit) binary floating point used to
//!   evaluate the heavily cancelling closed-form coefficient expressions.
//! - [`coeffs`]: the seven methods' `a`- and `b`-coefficients, with a
//!   cancellation-safe switch between closed forms and Taylor series.
//! - [`phaselag`]: the phase-lag function `PL(s, v)`, its `s`-derivatives,
//!   and principal local truncation error estimates.
//! - [`stability`]: characteristic polynomial, root conditions, and
//!   rasterization of the stability region in the `s`-`v` plane.
//! - [`integrator`]: the explicit 12-step recurrence with RK4 starting
//!   values and a piecewise-constant frequency schedule.
//! - [`schrodinger`]: radial Schrodinger benchmark on the Woods-Saxon
//!   potential with scattering phase-shift extraction.

pub mod bigfloat;
pub mod coeffs;
pub mod integrator;
pub mod phaselag;
pub mod schrodinger;
pub mod stability;
