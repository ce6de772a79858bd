//! Driver for the explicit 12-step recurrence on `y'' = f(x, y)`.
//!
//! The recurrence needs 12 starting values before it can run; they come
//! from a classical RK4 bootstrap on the first-order reformulation,
//! refined by substep halving until a step-doubling comparison certifies
//! the starting error is below the multistep method's own error floor.
//! After that every new point costs one stencil application plus one
//! right-hand-side evaluation.
//!
//! The fitted methods need `v = omega * h` per step; a [`FrequencySchedule`]
//! supplies `omega` as a piecewise-constant, right-continuous function of
//! `x`, and each step reads it at the newest grid point `x_{n+12}`. A
//! window straddling a schedule breakpoint keeps that single `v`: one
//! coefficient set per step, no blending.

use crate::coeffs::{self, CoeffError, MethodId, PrecisionPolicy};
use std::collections::HashMap;
use thiserror::Error;

/// Relative-ish tolerance the bootstrap refines to: absolute below
/// `max(1, |y|)` scale.
const BOOTSTRAP_TOL: f64 = 1e-14;

/// Step-doubling deltas below this are candidates for the roundoff-floor
/// stall acceptance (see [`bootstrap`]).
const BOOTSTRAP_FLOOR: f64 = 1e-11;

/// Hard cap on bootstrap substep halvings (`2^20` substeps per interval).
const BOOTSTRAP_MAX_LEVEL: u32 = 20;

/// Scalar second-order initial value problem `y'' = f(x, y)`.
///
/// `dy0` is consumed only by the bootstrapper; the multistep recurrence
/// itself never sees first derivatives.
pub struct SecondOrderIVP<F: Fn(f64, f64) -> f64> {
    pub f: F,
    pub x0: f64,
    pub y0: f64,
    pub dy0: f64,
    pub x_end: f64,
}

/// Piecewise-constant fitting frequency `omega(x)`, right-continuous at
/// its breakpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct FrequencySchedule {
    /// `(breakpoint, omega)` pairs; `omega(x)` is the entry with the
    /// largest breakpoint `<= x` (first entry for `x` before all of them).
    pieces: Vec<(f64, f64)>,
}

impl FrequencySchedule {
    /// Builds a schedule from `(breakpoint, omega)` pairs.
    pub fn new(pieces: Vec<(f64, f64)>) -> Self {
        assert!(!pieces.is_empty(), "schedule needs at least one piece");
        for pair in pieces.windows(2) {
            assert!(
                pair[0].0 < pair[1].0,
                "breakpoints must increase strictly: {} then {}",
                pair[0].0,
                pair[1].0
            );
        }
        assert!(pieces.iter().all(|&(_, w)| w >= 0.0), "omega must be nonnegative");
        Self { pieces }
    }

    /// Single-frequency schedule.
    pub fn constant(omega: f64) -> Self {
        Self::new(vec![(0.0, omega)])
    }

    /// The frequency in effect at `x`.
    pub fn omega_at(&self, x: f64) -> f64 {
        self.pieces
            .iter()
            .rev()
            .find(|&&(bp, _)| bp <= x)
            .unwrap_or(&self.pieces[0])
            .1
    }
}

/// Cost counters of one integration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrajectoryStats {
    /// RK4 substeps per grid interval the bootstrap settled on.
    pub bootstrap_substeps: u32,
    /// Multistep stencil applications.
    pub steps: usize,
}

/// Solution samples on the equispaced grid `x_n = x0 + n h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub method: MethodId,
    pub h: f64,
    /// Grid abscissas, each recomputed as `x0 + n * h` (never accumulated).
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub stats: TrajectoryStats,
}

/// Errors from bootstrapping and integration.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum IntegratorError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    /// Step-doubling never certified the starting values, even at
    /// `2^BOOTSTRAP_MAX_LEVEL` substeps per interval.
    #[error(
        "bootstrap tolerance unreachable: delta {last_delta:e} after {levels} halvings"
    )]
    ToleranceUnreachable { levels: u32, last_delta: f64 },
}

/// One classical RK4 step of size `d` on the pair `(y, y')`.
fn rk4_step<F: Fn(f64, f64) -> f64>(f: &F, x: f64, y: f64, dy: f64, d: f64) -> (f64, f64) {
    let (k1y, k1d) = (dy, f(x, y));
    let (k2y, k2d) = (dy + 0.5 * d * k1d, f(x + 0.5 * d, y + 0.5 * d * k1y));
    let (k3y, k3d) = (dy + 0.5 * d * k2d, f(x + 0.5 * d, y + 0.5 * d * k2y));
    let (k4y, k4d) = (dy + d * k3d, f(x + d, y + d * k3y));
    (
        y + d / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        dy + d / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d),
    )
}

/// Marches the first 11 grid intervals with `subs` RK4 substeps each.
fn march<F: Fn(f64, f64) -> f64>(ivp: &SecondOrderIVP<F>, h: f64, subs: u32) -> [f64; 12] {
    let mut out = [0.0; 12];
    out[0] = ivp.y0;
    let (mut y, mut dy) = (ivp.y0, ivp.dy0);
    let d = h / subs as f64;
    for n in 1..12 {
        let base = ivp.x0 + (n - 1) as f64 * h;
        for i in 0..subs {
            (y, dy) = rk4_step(&ivp.f, base + i as f64 * d, y, dy, d);
        }
        out[n] = y;
    }
    out
}

fn bootstrap_with_stats<F: Fn(f64, f64) -> f64>(
    ivp: &SecondOrderIVP<F>,
    h: f64,
) -> Result<([f64; 12], u32), IntegratorError> {
    assert!(h > 0.0, "step size must be positive, got {h}");
    let mut prev = march(ivp, h, 1);
    let mut prev_delta = f64::INFINITY;
    for level in 1..=BOOTSTRAP_MAX_LEVEL {
        let cur = march(ivp, h, 1 << level);
        let delta = prev
            .iter()
            .zip(&cur)
            .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
            .fold(0.0, f64::max);
        // Converged, or stalled on the f64 roundoff floor: once deltas sit
        // below 1e-11 and stop shrinking, further halvings only accumulate
        // rounding noise (fast oscillations can floor near 1e-12, above
        // the nominal tolerance, while the values are as good as doubles
        // allow).
        if delta < BOOTSTRAP_TOL || (delta < BOOTSTRAP_FLOOR && delta > 0.5 * prev_delta) {
            return Ok((cur, 1 << level));
        }
        prev = cur;
        prev_delta = delta;
    }
    Err(IntegratorError::ToleranceUnreachable {
        levels: BOOTSTRAP_MAX_LEVEL,
        last_delta: prev_delta,
    })
}

/// Generates the 12 starting values `y_0..y_11` for the recurrence.
///
/// RK4 on `(y, y')` with `2^m` substeps per grid interval, `m` raised
/// until consecutive refinements agree below `1e-14 * max(1, |y|)` at
/// every point; the finer run is returned. Deterministic.
pub fn bootstrap<F: Fn(f64, f64) -> f64>(
    ivp: &SecondOrderIVP<F>,
    h: f64,
) -> Result<[f64; 12], IntegratorError> {
    bootstrap_with_stats(ivp, h).map(|(ys, _)| ys)
}

/// The stencil: `y_12 = -sum a_j y_j + h^2 sum b_j f_j` over the window,
/// with the f-sum paired symmetrically (`b_j = b_{12-j}`).
fn apply_stencil(b: &[f64; 13], ys: &[f64], fs: &[f64], h: f64) -> f64 {
    debug_assert!(ys.len() == 12 && fs.len() == 12);
    let ypart = -ys[0] + 2.0 * ys[1] - 2.0 * ys[2] + ys[3] + ys[9] - 2.0 * ys[10]
        + 2.0 * ys[11];
    let fpart = b[1] * (fs[1] + fs[11])
        + b[2] * (fs[2] + fs[10])
        + b[3] * (fs[3] + fs[9])
        + b[4] * (fs[4] + fs[8])
        + b[5] * (fs[5] + fs[7])
        + b[6] * fs[6];
    ypart + h * h * fpart
}

/// Advances the recurrence one step from a 12-point window.
///
/// `ys` and `fs` hold `y_n..y_{n+11}` and `f_n..f_{n+11}`; the result is
/// `y_{n+12}`. `fs[0]` is carried for window uniformity but unused
/// (`b_0 = b_12 = 0`: the method is explicit).
pub fn step(
    method: MethodId,
    ys: &[f64; 12],
    fs: &[f64; 12],
    h: f64,
    v: f64,
) -> Result<f64, CoeffError> {
    let set = coeffs::coefficients(method, v, PrecisionPolicy::default())?;
    Ok(apply_stencil(&set.b, ys, fs, h))
}

/// Integrates the IVP on the grid `x_n = x0 + n h`.
///
/// The grid covers `[x0, x_end]`; `(x_end - x0) / h` must reach 12 (one
/// full starting window plus a step). Each step fits to
/// `v = omega(x_{n+12}) * h` with coefficient sets cached per distinct
/// `v` bit pattern, so a piecewise schedule costs one evaluation per
/// piece.
pub fn integrate<F: Fn(f64, f64) -> f64>(
    ivp: &SecondOrderIVP<F>,
    method: MethodId,
    h: f64,
    schedule: &FrequencySchedule,
) -> Result<Trajectory, IntegratorError> {
    assert!(ivp.x_end > ivp.x0, "x_end must exceed x0");
    let raw = (ivp.x_end - ivp.x0) / h;
    let rounded = raw.round();
    let n_last = if (raw - rounded).abs() <= 1e-9 * raw.abs().max(1.0) {
        rounded as usize
    } else {
        raw.floor() as usize
    };
    assert!(n_last >= 12, "window holds only {raw:.2} steps; the recurrence needs 12");

    let (start, bootstrap_substeps) = bootstrap_with_stats(ivp, h)?;
    let xs: Vec<f64> = (0..=n_last).map(|n| ivp.x0 + n as f64 * h).collect();
    let mut ys = Vec::with_capacity(n_last + 1);
    let mut fs = Vec::with_capacity(n_last + 1);
    for (n, &y) in start.iter().enumerate() {
        ys.push(y);
        fs.push((ivp.f)(xs[n], y));
    }

    let mut cache: HashMap<u64, [f64; 13]> = HashMap::new();
    for target in 12..=n_last {
        let v = schedule.omega_at(xs[target]) * h;
        let b = match cache.entry(v.to_bits()) {
            std::collections::hash_map::Entry::Occupied(e) => *e.get(),
            std::collections::hash_map::Entry::Vacant(e) => *e.insert(
                coeffs::coefficients(method, v, PrecisionPolicy::default())?.b,
            ),
        };
        let n = target - 12;
        let y = apply_stencil(&b, &ys[n..target], &fs[n..target], h);
        ys.push(y);
        fs.push((ivp.f)(xs[target], y));
    }

    Ok(Trajectory {
        method,
        h,
        xs,
        ys,
        stats: TrajectoryStats {
            bootstrap_substeps,
            steps: n_last - 11,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bootstrap_reproduces_closed_forms() {
        let linear = SecondOrderIVP { f: |_, _| 0.0, x0: 0.0, y0: 0.0, dy0: 1.0, x_end: 2.0 };
        let ys = bootstrap(&linear, 0.1).unwrap();
        for (n, &y) in ys.iter().enumerate() {
            assert!((y - 0.1 * n as f64).abs() < 1e-14, "linear point {n}: {y}");
        }

        let sine = SecondOrderIVP { f: |_, y| -y, x0: 0.0, y0: 0.0, dy0: 1.0, x_end: 2.0 };
        let ys = bootstrap(&sine, 0.05).unwrap();
        for (n, &y) in ys.iter().enumerate() {
            assert!((y - (0.05 * n as f64).sin()).abs() < 1e-13, "sine point {n}");
        }

        let stiff = SecondOrderIVP {
            f: |_, y| -100.0 * y,
            x0: 0.0,
            y0: 1.0,
            dy0: 0.0,
            x_end: 2.0,
        };
        let ys = bootstrap(&stiff, 0.01).unwrap();
        for (n, &y) in ys.iter().enumerate() {
            assert!((y - (0.1 * n as f64).cos()).abs() < 1e-12, "cosine point {n}");
        }
    }

    #[test]
    fn bootstrap_reports_unreachable_tolerance() {
        // y'' oscillating at 1e9 rad per unit: RK4 cannot resolve it at
        // any substep within the halving budget.
        let wild = SecondOrderIVP {
            f: |x, _| (1e9 * x).sin(),
            x0: 0.0,
            y0: 0.0,
            dy0: 0.0,
            x_end: 2.0,
        };
        let err = bootstrap(&wild, 0.1);
        assert!(matches!(err, Err(IntegratorError::ToleranceUnreachable { .. })));
    }

    #[test]
    fn step_is_exact_on_constants_and_lines() {
        let fs = [0.0; 12];
        let constant = [1.37; 12];
        let next = step(MethodId::Classical, &constant, &fs, 0.1, 0.0).unwrap();
        assert_eq!(next, 1.37, "zeroth-order consistency");

        let mut line = [0.0; 12];
        for (n, y) in line.iter_mut().enumerate() {
            *y = n as f64;
        }
        let next = step(MethodId::Classical, &line, &fs, 0.1, 0.0).unwrap();
        assert_eq!(next, 12.0, "first-order consistency");
    }

    #[test]
    fn fitted_step_reproduces_the_test_equation() {
        let mut ys = [0.0; 12];
        let mut fs = [0.0; 12];
        for n in 0..12 {
            ys[n] = (0.1 * n as f64).cos();
            fs[n] = -ys[n];
        }
        let next = step(MethodId::PfD0, &ys, &fs, 0.1, 0.1).unwrap();
        let exact = 1.2_f64.cos();
        assert!(
            (next - exact).abs() < 5e-15 * exact.abs(),
            "fitted step error {:e}",
            next - exact
        );
    }

    #[test]
    fn fitted_integration_is_near_exact_on_resonance() {
        let ivp = SecondOrderIVP {
            f: |_, y| -y,
            x0: 0.0,
            y0: 0.0,
            dy0: 1.0,
            x_end: 100.0 * std::f64::consts::PI,
        };
        let h = std::f64::consts::PI / 50.0;
        let t = integrate(&ivp, MethodId::PfD0, h, &FrequencySchedule::constant(1.0)).unwrap();
        assert_eq!(t.ys.len(), 5001);
        assert_eq!(t.stats.steps, 5001 - 12);
        let err = (t.ys.last().unwrap() - (100.0 * std::f64::consts::PI).sin()).abs();
        assert!(err < 1e-8, "endpoint error {err:e}");
    }

    #[test]
    fn every_fitted_order_stays_exact_over_ten_thousand_steps() {
        let h = std::f64::consts::PI / 50.0;
        let ivp = SecondOrderIVP {
            f: |_, y| -y,
            x0: 0.0,
            y0: 0.0,
            dy0: 1.0,
            x_end: 10_000.0 * h,
        };
        for order in 0..=5 {
            let method = MethodId::fitted(order);
            let t = integrate(&ivp, method, h, &FrequencySchedule::constant(1.0)).unwrap();
            let exact = (10_000.0 * h).sin();
            let err = (t.ys.last().unwrap() - exact).abs();
            assert!(err < 1e-8, "{method}: endpoint error {err:e}");
        }
    }

    #[test]
    fn classical_halving_gains_twelve_orders() {
        // h = 0.2 and 0.1 both sit inside the stability interval and keep
        // the global error above the f64 roundoff floor.
        let ivp = SecondOrderIVP { f: |_, y| -y, x0: 0.0, y0: 0.0, dy0: 1.0, x_end: 20.0 };
        let sched = FrequencySchedule::constant(0.0);
        let exact = 20.0_f64.sin();
        let coarse = integrate(&ivp, MethodId::Classical, 0.2, &sched).unwrap();
        let fine = integrate(&ivp, MethodId::Classical, 0.1, &sched).unwrap();
        let e_coarse = (coarse.ys.last().unwrap() - exact).abs();
        let e_fine = (fine.ys.last().unwrap() - exact).abs();
        let ratio = e_coarse / e_fine;
        assert!(
            (2048.0..=8192.0).contains(&ratio),
            "error ratio {ratio:.1} ({e_coarse:e} / {e_fine:e})"
        );
    }

    #[test]
    fn measured_order_on_a_nonlinear_desk_case() {
        // y'' = -y^3: smooth, nonlinear, no exact frequency to fit.
        let reference = {
            let (mut y, mut dy) = (1.0, 0.0);
            let f = |_: f64, y: f64| -y * y * y;
            let n = 200_000;
            let d = 2.5 / n as f64;
            for i in 0..n {
                (y, dy) = rk4_step(&f, i as f64 * d, y, dy, d);
            }
            y
        };
        let sched = FrequencySchedule::constant(0.0);
        let mut errs = Vec::new();
        for h in [0.125, 0.0625] {
            let ivp = SecondOrderIVP {
                f: |_, y| -y * y * y,
                x0: 0.0,
                y0: 1.0,
                dy0: 0.0,
                x_end: 2.5,
            };
            let t = integrate(&ivp, MethodId::Classical, h, &sched).unwrap();
            errs.push((t.ys.last().unwrap() - reference).abs());
        }
        let order = (errs[0] / errs[1]).log2();
        assert!(
            (11.5..=12.5).contains(&order),
            "measured order {order:.2} from errors {errs:?}"
        );
    }

    #[test]
    fn integration_is_linear_in_the_initial_data() {
        let sched = FrequencySchedule::constant(1.3);
        let run = |y0: f64, dy0: f64| {
            let ivp = SecondOrderIVP {
                f: |_, y| -1.69 * y,
                x0: 0.0,
                y0,
                dy0,
                x_end: 10.0,
            };
            integrate(&ivp, MethodId::PfD1, 0.05, &sched).unwrap().ys
        };
        let (a, b, c) = (run(1.0, 0.0), run(0.0, 1.0), run(2.0, -3.0));
        for n in 0..a.len() {
            let superposed = 2.0 * a[n] - 3.0 * b[n];
            assert!((c[n] - superposed).abs() < 1e-12, "point {n}");
        }
    }

    #[test]
    fn breakpoint_on_a_grid_point_pieces_two_constant_runs() {
        let h = 0.05;
        let ivp = SecondOrderIVP { f: |_, y| -y, x0: 0.0, y0: 0.0, dy0: 1.0, x_end: 10.0 };
        let split = integrate(
            &ivp,
            MethodId::PfD2,
            h,
            &FrequencySchedule::new(vec![(0.0, 1.3), (5.0, 0.7)]),
        )
        .unwrap();
        let left = integrate(&ivp, MethodId::PfD2, h, &FrequencySchedule::constant(1.3))
            .unwrap();

        // Up to target index 99 (x < 5) every step reads omega = 1.3, so
        // the split run must agree with the constant-1.3 run bit for bit.
        assert_eq!(split.ys[..100], left.ys[..100]);

        // From index 100 on, manually continue the shared window with the
        // right-hand frequency; the split trajectory must match.
        let mut ys = left.ys[88..100].to_vec();
        let mut fs: Vec<f64> = (88..100).map(|n| -left.ys[n]).collect();
        for target in 100..=200 {
            let window_y: [f64; 12] = ys[ys.len() - 12..].try_into().unwrap();
            let window_f: [f64; 12] = fs[fs.len() - 12..].try_into().unwrap();
            let y = step(MethodId::PfD2, &window_y, &window_f, h, 0.7 * h).unwrap();
            ys.push(y);
            fs.push(-y);
            assert_eq!(y, split.ys[target], "target {target}");
        }
    }

    #[test]
    fn reversed_windows_satisfy_the_same_relation() {
        // Symmetry a_j = a_{12-j}, b_j = b_{12-j}: if the stencil maps a
        // window to y_12, the reversed window maps back to y_0.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut ys = [0.0; 12];
            let mut fs = [0.0; 12];
            for n in 0..12 {
                ys[n] = rng.gen_range(-2.0..2.0);
                fs[n] = rng.gen_range(-2.0..2.0);
            }
            let (h, v) = (rng.gen_range(0.01..0.3), rng.gen_range(0.1..1.0));
            let y12 = step(MethodId::PfD3, &ys, &fs, h, v).unwrap();

            let mut rys = [0.0; 12];
            let mut rfs = [0.0; 12];
            rys[0] = y12;
            for j in 1..12 {
                rys[j] = ys[12 - j];
                rfs[j] = fs[12 - j];
            }
            let back = step(MethodId::PfD3, &rys, &rfs, h, v).unwrap();
            let scale = ys.iter().fold(1.0_f64, |m, y| m.max(y.abs()));
            assert!((back - ys[0]).abs() < 1e-12 * scale, "{back} vs {}", ys[0]);
        }
    }

    #[test]
    fn grid_is_recomputed_not_accumulated() {
        let ivp = SecondOrderIVP { f: |_, y| -y, x0: 0.3, y0: 0.1, dy0: 1.0, x_end: 5.3 };
        let t = integrate(&ivp, MethodId::Classical, 0.1, &FrequencySchedule::constant(0.0))
            .unwrap();
        assert_eq!(t.xs.len(), 51);
        for (n, &x) in t.xs.iter().enumerate() {
            assert_eq!(x.to_bits(), (0.3 + n as f64 * 0.1).to_bits());
        }
    }

    #[test]
    fn schedule_lookup_is_right_continuous() {
        let sched = FrequencySchedule::new(vec![(0.0, 2.0), (6.5, 3.0)]);
        assert_eq!(sched.omega_at(6.4999), 2.0);
        assert_eq!(sched.omega_at(6.5), 3.0);
        assert_eq!(sched.omega_at(-1.0), 2.0);
        assert_eq!(sched.omega_at(100.0), 3.0);
    }
}
