//! Characteristic polynomial, root conditions, and s-v stability rasters.
//!
//! On the test equation `y'' = -sigma^2 y` with `s = sigma h`, a method of
//! the family reduces to the linear recurrence with characteristic
//! polynomial `P(z) = sum_j (a_j + s^2 b_j(v)) z^j`. The method is stable
//! at `(s, v)` when every root lies in the closed unit disk; rastering
//! that predicate over a window of the s-v plane charts how robust each
//! method is to frequency misestimation.
//!
//! `P` is palindromic for every member of the family, so roots come in
//! reciprocal pairs `(z, 1/z)` and any excursion off the unit circle
//! produces a root of modulus greater than one; the stability test only
//! needs the maximum modulus.

use crate::coeffs::{self, CoeffError, MethodId, PrecisionPolicy};
use nalgebra::{Complex, DMatrix};
use std::fmt::Write as _;
use std::io;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Default root-modulus tolerance for stability classification.
pub const DEFAULT_STABILITY_TOL: f64 = 1e-8;

/// Iteration cap handed to the QR eigensolver; generous for a 12x12
/// companion matrix.
const SCHUR_MAX_ITER: usize = 1000;

/// Relative backward-error bound accepted from the root finder.
const RESIDUAL_REL: f64 = 1e-8;

/// Characteristic polynomial `sum_k c_k z^k` of a method at one `(s, v)`.
///
/// Polynomials built by [`characteristic_polynomial`] are palindromic
/// (`c_k = c_{12-k}`) with `c_12 = 1`; the root utilities below accept any
/// coefficient vector with `c_12 != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPolynomial {
    pub c: [f64; 13],
}

impl CharPolynomial {
    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: Complex<f64>) -> Complex<f64> {
        self.c
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, &ck| acc * z + ck)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.c.iter().map(|ck| ck * ck).sum::<f64>().sqrt()
    }
}

/// Errors from root extraction and stability classification.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum StabilityError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    /// The eigensolver did not converge, or a computed root failed the
    /// backward-error residual check.
    #[error("root finding failed: residual {max_residual:e} exceeds bound {bound:e}")]
    ConvergenceFailure { max_residual: f64, bound: f64 },
}

/// Boolean stability raster over a window of the s-v plane.
///
/// Cell `(p, q)` samples the midpoint `(s_at(p), v_at(q))`, half a cell in
/// from the window edges, so `s_min = 0` never evaluates the degenerate
/// `s = 0` polynomial (consistency double root at `z = 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityGrid {
    pub s_min: f64,
    pub s_max: f64,
    pub v_min: f64,
    pub v_max: f64,
    pub ns: usize,
    pub nv: usize,
    pub tol: f64,
    /// Row-major in v: `cells[q * ns + p]` is the cell at `(s_p, v_q)`.
    pub cells: Vec<bool>,
    /// Root-finder failures encountered during the scan; the affected
    /// cells are classified unstable, never silently stable.
    pub failures: usize,
}

impl StabilityGrid {
    /// Sample abscissa of column `p`.
    pub fn s_at(&self, p: usize) -> f64 {
        self.s_min + (p as f64 + 0.5) * (self.s_max - self.s_min) / self.ns as f64
    }

    /// Sample ordinate of row `q`.
    pub fn v_at(&self, q: usize) -> f64 {
        self.v_min + (q as f64 + 0.5) * (self.v_max - self.v_min) / self.nv as f64
    }

    /// Stability decision at cell `(p, q)`.
    pub fn cell(&self, p: usize, q: usize) -> bool {
        self.cells[q * self.ns + p]
    }

    /// CSV rendering: header `s,v,stable`, one row per cell, row-major in
    /// v then s, abscissas with 9 significant digits.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("s,v,stable\n");
        for q in 0..self.nv {
            for p in 0..self.ns {
                let _ = writeln!(
                    out,
                    "{:.8e},{:.8e},{}",
                    self.s_at(p),
                    self.v_at(q),
                    u8::from(self.cell(p, q))
                );
            }
        }
        out
    }

    /// PGM (P2) rendering: width `ns`, height `nv`, maxval 255, one v row
    /// per line, stable cells white (255), unstable black (0).
    pub fn to_pgm_string(&self) -> String {
        let mut out = format!("P2\n{} {}\n255\n", self.ns, self.nv);
        for q in 0..self.nv {
            let row: Vec<&str> = (0..self.ns)
                .map(|p| if self.cell(p, q) { "255" } else { "0" })
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

/// Builds the characteristic polynomial of a method at `(s, v)`.
pub fn characteristic_polynomial(
    method: MethodId,
    s: f64,
    v: f64,
) -> Result<CharPolynomial, CoeffError> {
    let set = coeffs::coefficients(method, v, PrecisionPolicy::default())?;
    let s2 = s * s;
    let mut c = [0.0; 13];
    for (k, slot) in c.iter_mut().enumerate() {
        *slot = set.a[k] + s2 * set.b[k];
    }
    Ok(CharPolynomial { c })
}

/// All twelve roots of a degree-12 polynomial via companion-matrix
/// eigenvalues, sorted by real then imaginary part.
///
/// Every returned root passes the backward-error residual check
/// `|P(z)| <= 1e-8 * ||c|| * max(1, |z|)^12`; the `max(1, |z|)` power is
/// the standard normalization that makes the bound achievable by a
/// backward-stable solver for roots far outside the unit disk, where
/// `|P'(z)|` itself is enormous.
pub fn roots(p: &CharPolynomial) -> Result<Vec<Complex<f64>>, StabilityError> {
    assert!(p.c[12] != 0.0, "leading coefficient must be nonzero");
    let companion = DMatrix::from_fn(12, 12, |i, j| {
        if j == 11 {
            -p.c[i] / p.c[12]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let schur = nalgebra::linalg::Schur::try_new(companion, f64::EPSILON, SCHUR_MAX_ITER)
        .ok_or(StabilityError::ConvergenceFailure {
            max_residual: f64::INFINITY,
            bound: RESIDUAL_REL * p.coeff_norm(),
        })?;
    let mut zs: Vec<Complex<f64>> = schur.complex_eigenvalues().iter().copied().collect();
    zs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let norm = p.coeff_norm();
    let mut max_rel = 0.0_f64;
    for &z in &zs {
        let growth = z.norm().max(1.0).powi(12);
        let rel = p.eval(z).norm() / (norm * growth);
        max_rel = max_rel.max(rel);
    }
    if max_rel > RESIDUAL_REL {
        return Err(StabilityError::ConvergenceFailure {
            max_residual: max_rel * norm,
            bound: RESIDUAL_REL * norm,
        });
    }
    Ok(zs)
}

/// Largest root modulus of a method's characteristic polynomial.
pub fn max_root_modulus(method: MethodId, s: f64, v: f64) -> Result<f64, StabilityError> {
    let p = characteristic_polynomial(method, s, v)?;
    Ok(roots(&p)?
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max))
}

/// Whether every characteristic root lies within `1 + tol` of the origin.
///
/// `s` must be positive: at `s = 0` consistency plants a double root at
/// `z = 1` for every method and the predicate is vacuous.
pub fn is_stable(method: MethodId, s: f64, v: f64, tol: f64) -> Result<bool, StabilityError> {
    assert!(s > 0.0, "stability is classified for s > 0, got {s}");
    Ok(max_root_modulus(method, s, v)? <= 1.0 + tol)
}

/// Argument of the principal characteristic root (the branch continuing
/// the consistency double root at `z = 1`).
///
/// Numerically: the smallest `|arg z|` among roots on the unit circle
/// (within 1e-6), falling back to all roots when none are on the circle.
/// Inside the interval of periodicity this is the `lambda(s)` whose
/// deviation from `s` the phase lag measures; for a fitted method at
/// `s = v` it returns exactly `v`.
pub fn principal_argument(method: MethodId, s: f64, v: f64) -> Result<f64, StabilityError> {
    let zs = roots(&characteristic_polynomial(method, s, v)?)?;
    let on_circle: Vec<f64> = zs
        .iter()
        .filter(|z| (z.norm() - 1.0).abs() <= 1e-6)
        .map(|z| z.arg().abs())
        .collect();
    let candidates = if on_circle.is_empty() {
        zs.iter().map(|z| z.arg().abs()).collect()
    } else {
        on_circle
    };
    Ok(candidates.into_iter().fold(f64::INFINITY, f64::min))
}

/// Rasters the stability predicate over `[s_min, s_max] x [v_min, v_max]`
/// with midpoint sampling.
///
/// Root-finder failures (and coefficient-domain errors at exotic cells)
/// mark the cell unstable and increment the grid's failure count. Cells
/// are independent; evaluation order never affects the raster.
pub fn stability_grid(
    method: MethodId,
    s_range: (f64, f64),
    v_range: (f64, f64),
    ns: usize,
    nv: usize,
    tol: f64,
) -> StabilityGrid {
    assert!(ns >= 2 && nv >= 2, "grid needs at least 2x2 cells, got {ns}x{nv}");
    assert!(s_range.0 >= 0.0 && s_range.0 < s_range.1, "bad s range {s_range:?}");
    assert!(v_range.0 >= 0.0 && v_range.0 < v_range.1, "bad v range {v_range:?}");
    let mut grid = StabilityGrid {
        s_min: s_range.0,
        s_max: s_range.1,
        v_min: v_range.0,
        v_max: v_range.1,
        ns,
        nv,
        tol,
        cells: vec![false; ns * nv],
        failures: 0,
    };
    for q in 0..nv {
        for p in 0..ns {
            match is_stable(method, grid.s_at(p), grid.v_at(q), tol) {
                Ok(stable) => grid.cells[q * ns + p] = stable,
                Err(_) => grid.failures += 1,
            }
        }
    }
    grid
}

/// Writes both renderings of a grid: `stem.csv` and `stem.pgm`.
///
/// Any extension already on `stem` is replaced. Returns the two paths
/// written, CSV first.
pub fn write_grid(grid: &StabilityGrid, stem: &Path) -> io::Result<(PathBuf, PathBuf)> {
    let csv_path = stem.with_extension("csv");
    let pgm_path = stem.with_extension("pgm");
    std::fs::write(&csv_path, grid.to_csv_string())?;
    std::fs::write(&pgm_path, grid.to_pgm_string())?;
    Ok((csv_path, pgm_path))
}
