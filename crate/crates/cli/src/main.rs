//! Command-line front end for the twelve-step symmetric multistep family.
//!
//! Subcommands mirror the library modules: `coeffs` dumps a method's
//! weights, `phaselag` sweeps the phase-lag function, `stability-map`
//! rasterizes the s-v stability region, `solve` runs the Woods-Saxon
//! scattering benchmark once, and `accuracy-curve` tabulates benchmark
//! accuracy over methods and a step-size ladder.
//!
//! Every float is printed with 17 significant digits so outputs
//! round-trip exactly (the stability CSV keeps its own 9-digit layout).
//! Output files are written to a temporary file in the destination
//! directory and renamed into place, so a failing run never leaves a
//! partial artifact behind.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use symmstep::coeffs::{self, MethodId, PrecisionPolicy};
use symmstep::phaselag;
use symmstep::schrodinger;
use symmstep::stability;

#[derive(Parser)]
#[command(name = "symmstep", version, about = "Twelve-step symmetric multistep methods: coefficients, phase lag, stability maps, and a scattering benchmark")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the thirteen b-weights of one method at a fitting parameter
    Coeffs {
        /// Method name: classical, pf-d0 .. pf-d5
        #[arg(long)]
        method: String,
        /// Fitting parameter v = omega * h (ignored by classical)
        #[arg(long, default_value_t = 0.0)]
        v: f64,
        /// Output format
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Destination file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the phase-lag function over scaled frequencies
    Phaselag {
        /// Method name: classical, pf-d0 .. pf-d5
        #[arg(long)]
        method: String,
        /// Fitting parameter v = omega * h
        #[arg(long)]
        v: f64,
        /// First scaled frequency s of the sweep
        #[arg(long, default_value_t = 0.0)]
        s_from: f64,
        /// Last scaled frequency s of the sweep
        #[arg(long, default_value_t = 2.0)]
        s_to: f64,
        /// Number of sample points (endpoints included)
        #[arg(long, default_value_t = 400)]
        n: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Destination file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rasterize the stability region over the s-v plane
    StabilityMap {
        /// Method name: classical, pf-d0 .. pf-d5
        #[arg(long)]
        method: String,
        /// Upper edge of the s window (lower edge is 0)
        #[arg(long, default_value_t = 1.5)]
        s_max: f64,
        /// Upper edge of the v window (lower edge is 0)
        #[arg(long, default_value_t = 1.5)]
        v_max: f64,
        /// Cells per axis
        #[arg(long, default_value_t = 200)]
        n: usize,
        /// Allowed excess of the largest root modulus over 1
        #[arg(long, default_value_t = stability::DEFAULT_STABILITY_TOL)]
        tol: f64,
        /// Output format (inferred from --out extension when omitted)
        #[arg(long, value_enum)]
        format: Option<RasterFormat>,
        /// Destination file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the Woods-Saxon scattering benchmark at one energy
    Solve {
        /// Method name: classical, pf-d0 .. pf-d5
        #[arg(long)]
        method: String,
        /// Scattering energy E (must exceed the well depth step, 50)
        #[arg(long)]
        energy: f64,
        /// Grid steps per unit length, so h = 1 / steps-per-unit
        #[arg(long, default_value_t = 32)]
        steps_per_unit: u32,
        /// Destination file for the result row (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the full trajectory as x,y CSV to this file
        #[arg(long)]
        trajectory: Option<PathBuf>,
    },
    /// Tabulate benchmark accuracy over methods and a step-size ladder
    AccuracyCurve {
        /// Comma-separated method names, or "all"
        #[arg(long, default_value = "all")]
        methods: String,
        /// Scattering energy E (must exceed the well depth step, 50)
        #[arg(long)]
        energy: f64,
        /// Comma-separated steps-per-unit ladder, increasing (h decreasing)
        #[arg(long, value_delimiter = ',', required = true)]
        steps_per_unit: Vec<u32>,
        /// Destination file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RasterFormat {
    Csv,
    Pgm,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Coeffs { method, v, format: TableFormat::Csv, out } => {
            let method = parse_method(&method)?;
            emit(out.as_deref(), &coeffs_csv(method, v)?)
        }
        Command::Phaselag { method, v, s_from, s_to, n, format: TableFormat::Csv, out } => {
            let method = parse_method(&method)?;
            emit(out.as_deref(), &phaselag_csv(method, v, s_from, s_to, n)?)
        }
        Command::StabilityMap { method, s_max, v_max, n, tol, format, out } => {
            let method = parse_method(&method)?;
            let format = raster_format(format, out.as_deref())?;
            emit(out.as_deref(), &stability_output(method, s_max, v_max, n, tol, format)?)
        }
        Command::Solve { method, energy, steps_per_unit, out, trajectory } => {
            let method = parse_method(&method)?;
            if steps_per_unit == 0 {
                bail!("steps-per-unit must be positive");
            }
            let h = 1.0 / f64::from(steps_per_unit);
            let run = schrodinger::benchmark_trajectory(method, energy, h)?;
            if let Some(path) = trajectory {
                emit(Some(&path), &trajectory_csv(&run))?;
            }
            let mut csv = String::from("method,E,h,delta,digits\n");
            csv.push_str(&result_row(method, energy, &run)?);
            emit(out.as_deref(), &csv)
        }
        Command::AccuracyCurve { methods, energy, steps_per_unit, out } => {
            let methods = parse_methods(&methods)?;
            validate_ladder(&steps_per_unit)?;
            emit(out.as_deref(), &accuracy_csv(&methods, energy, &steps_per_unit)?)
        }
    }
}

/// 17 significant digits, enough for an exact `f64` round trip.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_method(name: &str) -> Result<MethodId> {
    name.parse::<MethodId>().map_err(anyhow::Error::from)
}

fn parse_methods(list: &str) -> Result<Vec<MethodId>> {
    if list == "all" {
        return Ok(MethodId::ALL.to_vec());
    }
    list.split(',').map(|name| parse_method(name.trim())).collect()
}

fn validate_ladder(ladder: &[u32]) -> Result<()> {
    if ladder.is_empty() {
        bail!("steps-per-unit ladder must be nonempty");
    }
    if ladder.contains(&0) {
        bail!("steps-per-unit must be positive");
    }
    if ladder.windows(2).any(|w| w[1] <= w[0]) {
        bail!("steps-per-unit ladder must increase (step size must decrease)");
    }
    Ok(())
}

fn coeffs_csv(method: MethodId, v: f64) -> Result<String> {
    let set = coeffs::coefficients(method, v, PrecisionPolicy::default())?;
    let mut csv = String::from("j,b\n");
    for (j, b) in set.b.iter().enumerate() {
        csv.push_str(&format!("{j},{}\n", fmt17(*b)));
    }
    Ok(csv)
}

fn phaselag_csv(method: MethodId, v: f64, s_from: f64, s_to: f64, n: usize) -> Result<String> {
    if n < 2 {
        bail!("need at least 2 sample points, got {n}");
    }
    if !(s_from < s_to) {
        bail!("empty sweep range: s-from {s_from} is not below s-to {s_to}");
    }
    let mut csv = String::from("s,pl\n");
    for j in 0..n {
        let s = s_from + (s_to - s_from) * j as f64 / (n - 1) as f64;
        let pl = phaselag::phase_lag(method, s, v)
            .with_context(|| format!("phase lag at s = {s}"))?;
        csv.push_str(&format!("{},{}\n", fmt17(s), fmt17(pl)));
    }
    Ok(csv)
}

fn raster_format(flag: Option<RasterFormat>, out: Option<&Path>) -> Result<RasterFormat> {
    if let Some(format) = flag {
        return Ok(format);
    }
    match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("pgm") => Ok(RasterFormat::Pgm),
        Some("csv") | None => Ok(RasterFormat::Csv),
        Some(other) => bail!("cannot infer output format from extension .{other}; pass --format"),
    }
}

fn stability_output(
    method: MethodId,
    s_max: f64,
    v_max: f64,
    n: usize,
    tol: f64,
    format: RasterFormat,
) -> Result<String> {
    if n < 2 {
        bail!("need at least a 2x2 grid, got n = {n}");
    }
    if !(s_max > 0.0) || !(v_max > 0.0) {
        bail!("window edges must be positive, got s-max {s_max}, v-max {v_max}");
    }
    let grid = stability::stability_grid(method, (0.0, s_max), (0.0, v_max), n, n, tol);
    Ok(match format {
        RasterFormat::Csv => grid.to_csv_string(),
        RasterFormat::Pgm => grid.to_pgm_string(),
    })
}

fn result_row(
    method: MethodId,
    energy: f64,
    run: &symmstep::integrator::Trajectory,
) -> Result<String> {
    let i = run.ys.len() - 2;
    let shift = schrodinger::phase_shift(
        run.ys[i],
        run.ys[i + 1],
        run.xs[i],
        run.xs[i + 1],
        energy.sqrt(),
        0,
    )?;
    Ok(format!(
        "{},{},{},{},{}\n",
        method.name(),
        fmt17(energy),
        fmt17(run.h),
        fmt17(shift.delta),
        fmt17(shift.digits)
    ))
}

fn trajectory_csv(run: &symmstep::integrator::Trajectory) -> String {
    let mut csv = String::from("x,y\n");
    for (x, y) in run.xs.iter().zip(&run.ys) {
        csv.push_str(&format!("{},{}\n", fmt17(*x), fmt17(*y)));
    }
    csv
}

fn accuracy_csv(methods: &[MethodId], energy: f64, ladder: &[u32]) -> Result<String> {
    let mut csv = String::from("method,E,h,steps,delta,digits\n");
    for &method in methods {
        for &steps_per_unit in ladder {
            let h = 1.0 / f64::from(steps_per_unit);
            let run = schrodinger::benchmark_trajectory(method, energy, h)?;
            let i = run.ys.len() - 2;
            let shift = schrodinger::phase_shift(
                run.ys[i],
                run.ys[i + 1],
                run.xs[i],
                run.xs[i + 1],
                energy.sqrt(),
                0,
            )?;
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                method.name(),
                fmt17(energy),
                fmt17(h),
                run.xs.len() - 1,
                fmt17(shift.delta),
                fmt17(shift.digits)
            ));
        }
    }
    Ok(csv)
}

fn emit(out: Option<&Path>, contents: &str) -> Result<()> {
    match out {
        None => {
            print!("{contents}");
            Ok(())
        }
        Some(path) => write_atomic(path, contents)
            .with_context(|| format!("writing {}", path.display())),
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_lists_parse_or_reject_before_compute() {
        assert_eq!(parse_methods("all").unwrap(), MethodId::ALL.to_vec());
        assert_eq!(
            parse_methods("classical, pf-d3").unwrap(),
            vec![MethodId::Classical, MethodId::PfD3]
        );
        assert!(parse_methods("pf-d9").is_err());
        assert!(parse_method("Classical").is_err());
    }

    #[test]
    fn ladder_must_be_increasing_and_positive() {
        assert!(validate_ladder(&[8, 16, 32]).is_ok());
        assert!(validate_ladder(&[]).is_err());
        assert!(validate_ladder(&[8, 8]).is_err());
        assert!(validate_ladder(&[16, 8]).is_err());
        assert!(validate_ladder(&[0, 8]).is_err());
    }

    #[test]
    fn floats_print_with_seventeen_significant_digits() {
        assert_eq!(fmt17(0.0), "0.0000000000000000e0");
        assert_eq!(fmt17(std::f64::consts::PI), "3.1415926535897931e0");
        let x = 163.215341;
        assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn coeffs_table_has_thirteen_mirrored_rows() {
        let csv = coeffs_csv(MethodId::PfD3, 0.7).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 14);
        assert_eq!(lines[0], "j,b");
        assert_eq!(lines[1], "0,0.0000000000000000e0");
        let row = |j: usize| lines[j + 1].split(',').nth(1).unwrap().to_owned();
        assert_eq!(row(0), "0.0000000000000000e0");
        assert_eq!(row(12), "0.0000000000000000e0");
        for j in 1..6 {
            assert_eq!(row(j), row(12 - j));
        }
    }

    #[test]
    fn phaselag_sweep_covers_the_endpoints() {
        let csv = phaselag_csv(MethodId::Classical, 0.0, 0.0, 2.0, 5).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "s,pl");
        assert!(lines[1].starts_with("0.0000000000000000e0,"));
        assert!(lines[5].starts_with("2.0000000000000000e0,"));
        assert!(phaselag_csv(MethodId::Classical, 0.0, 1.0, 1.0, 5).is_err());
        assert!(phaselag_csv(MethodId::Classical, 0.0, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn raster_format_follows_flag_then_extension() {
        let pgm = Path::new("out/map.pgm");
        let csv = Path::new("map.csv");
        assert_eq!(raster_format(None, Some(pgm)).unwrap(), RasterFormat::Pgm);
        assert_eq!(raster_format(None, Some(csv)).unwrap(), RasterFormat::Csv);
        assert_eq!(raster_format(None, None).unwrap(), RasterFormat::Csv);
        assert_eq!(
            raster_format(Some(RasterFormat::Csv), Some(pgm)).unwrap(),
            RasterFormat::Csv
        );
        assert!(raster_format(None, Some(Path::new("map.png"))).is_err());
    }

    #[test]
    fn atomic_writes_replace_but_never_truncate_in_place() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("row.csv");
        write_atomic(&path, "first\n").unwrap();
        write_atomic(&path, "second\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "second\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
