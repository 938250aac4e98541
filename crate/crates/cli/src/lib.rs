//! Command-line front end for the `genzeta` regulators.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use genzeta::fractional::{frac_regulator, FracConfig};
use genzeta::hankel::{branch_map, ContourConfig, GridSpec};
use genzeta::series::{format_rational, rational_to_f64};
use genzeta::stirling::{eigen_check, stirling2_frac};
use genzeta::trace::trace_integer;
use genzeta::zeta_fn::{gen_zeta, reg_product};
use genzeta::GeneratorSpec;
use num_complex::Complex64;
use thiserror::Error;

pub mod verify;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] genzeta::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("verification failed: {0} check(s) did not pass")]
    VerificationFailed(usize),
}

impl CliError {
    /// 1 verification failure, 2 spec or parse error, 3 mathematical precondition failure.
    pub fn exit_code(&self) -> u8 {
        use genzeta::Error as E;
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::Usage(_) | CliError::Io(_) | CliError::Csv(_) => 2,
            CliError::Core(e) => match e {
                E::EmptySpec
                | E::NonpositiveConstant(_)
                | E::MalformedRational(_)
                | E::Parse(_)
                | E::InvalidArgument(_)
                | E::TruncationTooLow { .. } => 2,
                _ => 3,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "genzeta", version, about = "Generalized zeta regularization of sum n^alpha")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact integer traces R_L(m) as rationals.
    Trace {
        #[command(flatten)]
        io: GenIo,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "0..3")]
        m_range: String,
    },
    /// Fractional regulator over an alpha grid.
    Frac {
        #[command(flatten)]
        io: GenIo,
        #[command(flatten)]
        grid: AlphaGrid,
        #[command(flatten)]
        num: Numerics,
        /// Also run the circle+ray route and report the difference.
        #[arg(long)]
        crosscheck: bool,
        /// Near integers, use the limit of the fractional route instead of the exact formula.
        #[arg(long)]
        integer_limit: bool,
    },
    /// Generalized zeta function Z_L(alpha) = R_L(-alpha), Re alpha < 1.
    Zeta {
        #[command(flatten)]
        io: GenIo,
        #[command(flatten)]
        grid: AlphaGrid,
        #[command(flatten)]
        num: Numerics,
    },
    /// Regularized product exp(-Z_L'(0)).
    Product {
        #[command(flatten)]
        io: GenIo,
        #[command(flatten)]
        num: Numerics,
    },
    /// Complex-argument Stirling numbers {alpha, k} and eigen deviations.
    Stirling {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha_im: f64,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// |Li_{-alpha}(exp(-Phi(z)))| on a complex grid.
    Branchmap {
        #[command(flatten)]
        io: GenIo,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// `re0:re1:im0:im1:nx:ny`.
        #[arg(long, allow_hyphen_values = true, default_value = "-3:3:-3:3:121:121")]
        grid: String,
    },
    /// Run every check suite and print a JSON report.
    Verify(verify::VerifyArgs),
    /// Linear stiffness of the fermion-box force, proportional to sum n^2.
    Fermion {
        #[command(flatten)]
        io: GenIo,
        #[arg(long, default_value_t = 1.0)]
        planck_h: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 1.0)]
        box_length: f64,
    },
}

#[derive(Debug, Args)]
pub struct GenIo {
    /// Generator JSON file; the Riemann generator h = 1 when omitted.
    #[arg(long)]
    pub generator: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AlphaGrid {
    /// Inclusive grid `a:b:step`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_grid: String,
}

#[derive(Debug, Args)]
pub struct Numerics {
    #[arg(long, default_value_t = 1e-11)]
    pub tol: f64,
    #[arg(long, default_value_t = 0.25)]
    pub rho: f64,
}

impl Numerics {
    fn config(&self) -> FracConfig {
        FracConfig {
            tol: self.tol,
            contour: ContourConfig {
                rho: self.rho,
                ..ContourConfig::default()
            },
            ..FracConfig::default()
        }
    }
}

/// 17 significant digits, enough to round-trip a double.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.16e}")
    }
}

pub fn load_generator(path: Option<&Path>) -> CliResult<GeneratorSpec> {
    match path {
        Some(p) => Ok(GeneratorSpec::from_path(p)?),
        None => Ok(GeneratorSpec::riemann()),
    }
}

pub fn parse_m_range(s: &str) -> CliResult<(u32, u32)> {
    let bad = || CliError::Usage(format!("m range {s:?} is not a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Points `a, a + step, ...` up to and including `b` (within rounding).
pub fn parse_alpha_grid(s: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Usage(format!("alpha grid {s:?} is not a:b:step with step > 0 and a <= b"));
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [a, b, step] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0) || !(a <= b) {
        return Err(bad());
    }
    let n = ((b - a) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|i| a + step * i as f64).collect())
}

pub(crate) fn open_out(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn csv_writer(path: Option<&Path>) -> CliResult<csv::Writer<Box<dyn Write>>> {
    Ok(csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(open_out(path)?))
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Trace { io, m_range } => cmd_trace(&io, &m_range),
        Command::Frac {
            io,
            grid,
            num,
            crosscheck,
            integer_limit,
        } => {
            let cfg = FracConfig {
                crosscheck,
                integer_limit,
                ..num.config()
            };
            cmd_frac(&io, &grid.alpha_grid, &cfg)
        }
        Command::Zeta { io, grid, num } => cmd_zeta(&io, &grid.alpha_grid, &num.config()),
        Command::Product { io, num } => cmd_product(&io, &num.config()),
        Command::Stirling {
            alpha,
            alpha_im,
            k_max,
            out,
        } => cmd_stirling(Complex64::new(alpha, alpha_im), k_max, out.as_deref()),
        Command::Branchmap { io, alpha, grid } => cmd_branchmap(&io, alpha, &grid),
        Command::Verify(args) => verify::cmd_verify(&args),
        Command::Fermion {
            io,
            planck_h,
            mass,
            box_length,
        } => cmd_fermion(&io, planck_h, mass, box_length),
    }
}

pub fn cmd_trace(io: &GenIo, m_range: &str) -> CliResult<()> {
    let (a, b) = parse_m_range(m_range)?;
    let g = load_generator(io.generator.as_deref())?;
    let rows = (a..=b).map(|m| trace_integer(&g, m)).collect::<Result<Vec<_>, _>>()?;
    let mut w = csv_writer(io.out.as_deref())?;
    w.write_record(["m", "zeta_part", "correction", "total"])?;
    for t in rows {
        w.write_record([
            t.m.to_string(),
            format_rational(&t.zeta_part),
            format_rational(&t.correction),
            format_rational(&t.total),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_frac(io: &GenIo, grid: &str, cfg: &FracConfig) -> CliResult<()> {
    let alphas = parse_alpha_grid(grid)?;
    let g = load_generator(io.generator.as_deref())?;
    let rows = alphas
        .iter()
        .map(|&a| frac_regulator(&g, Complex64::new(a, 0.0), cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let mut w = csv_writer(io.out.as_deref())?;
    w.write_record(["alpha", "re_total", "im_total", "route", "err_estimate", "crosscheck_delta"])?;
    for v in rows {
        w.write_record([
            fmt_f64(v.alpha.re),
            fmt_f64(v.total.re),
            fmt_f64(v.total.im),
            v.route.as_str().to_string(),
            fmt_f64(v.err_estimate),
            v.crosscheck_delta.map(fmt_f64).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_zeta(io: &GenIo, grid: &str, cfg: &FracConfig) -> CliResult<()> {
    let alphas = parse_alpha_grid(grid)?;
    let g = load_generator(io.generator.as_deref())?;
    let rows = alphas
        .iter()
        .map(|&a| gen_zeta(&g, Complex64::new(a, 0.0), cfg).map(|z| (a, z)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut w = csv_writer(io.out.as_deref())?;
    w.write_record(["alpha", "re_zeta", "im_zeta"])?;
    for (a, z) in rows {
        w.write_record([fmt_f64(a), fmt_f64(z.re), fmt_f64(z.im)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_product(io: &GenIo, cfg: &FracConfig) -> CliResult<()> {
    let g = load_generator(io.generator.as_deref())?;
    let p = reg_product(&g, cfg)?;
    let mut w = csv_writer(io.out.as_deref())?;
    w.write_record(["z_prime_0", "product", "step", "richardson_order"])?;
    w.write_record([
        fmt_f64(p.z_prime_0),
        fmt_f64(p.product),
        fmt_f64(p.step),
        p.richardson_order.to_string(),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn cmd_stirling(alpha: Complex64, k_max: u32, out: Option<&Path>) -> CliResult<()> {
    if k_max == 0 || k_max > genzeta::stirling::MAX_STIRLING_K {
        return Err(CliError::Usage(format!(
            "k-max must lie in 1..={}",
            genzeta::stirling::MAX_STIRLING_K
        )));
    }
    let mut w = csv_writer(out)?;
    w.write_record(["k", "re_value", "im_value", "eigen_deviation"])?;
    for k in 1..=k_max {
        let v = stirling2_frac(alpha, k);
        w.write_record([k.to_string(), fmt_f64(v.re), fmt_f64(v.im), fmt_f64(eigen_check(alpha, k))])?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_branchmap(io: &GenIo, alpha: f64, grid: &str) -> CliResult<()> {
    let spec: GridSpec = grid.parse()?;
    let g = load_generator(io.generator.as_deref())?;
    let map = branch_map(&g, Complex64::new(alpha, 0.0), &spec)?;
    let mut out = open_out(io.out.as_deref())?;
    map.write_csv(&mut out)?;
    out.flush()?;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForceKind {
    Zero,
    Restoring,
    Repulsive,
}

impl ForceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ForceKind::Zero => "zero",
            ForceKind::Restoring => "restoring",
            ForceKind::Repulsive => "repulsive",
        }
    }
}

/// Linear stiffness `k = 48 hbar^2 / (m L^4) * sum n^2` and its sign class.
pub fn fermion_stiffness(g: &GeneratorSpec, planck_h: f64, mass: f64, box_length: f64) -> CliResult<(String, f64, ForceKind)> {
    if !(planck_h > 0.0 && mass > 0.0 && box_length > 0.0) {
        return Err(CliError::Usage("physical parameters must be positive".into()));
    }
    let sum = trace_integer(g, 2)?.total;
    let k = 48.0 * planck_h * planck_h / (mass * box_length.powi(4)) * rational_to_f64(&sum);
    let kind = if k == 0.0 {
        ForceKind::Zero
    } else if k > 0.0 {
        ForceKind::Restoring
    } else {
        ForceKind::Repulsive
    };
    Ok((format_rational(&sum), k, kind))
}

pub fn cmd_fermion(io: &GenIo, planck_h: f64, mass: f64, box_length: f64) -> CliResult<()> {
    let g = load_generator(io.generator.as_deref())?;
    let (sum, k, kind) = fermion_stiffness(&g, planck_h, mass, box_length)?;
    let mut w = csv_writer(io.out.as_deref())?;
    w.write_record(["generator", "sum_n2", "stiffness", "force"])?;
    w.write_record([g.name().to_string(), sum, fmt_f64(k), kind.as_str().to_string()])?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_grid_is_inclusive() {
        assert_eq!(parse_alpha_grid("0:1:0.25").unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(parse_alpha_grid("-0.5:-0.5:0.1").unwrap(), vec![-0.5]);
        assert_eq!(parse_alpha_grid("0.1:0.3:0.1").unwrap().len(), 3);
        assert!(parse_alpha_grid("1:0:0.1").is_err());
        assert!(parse_alpha_grid("0:1:0").is_err());
    }

    #[test]
    fn m_range() {
        assert_eq!(parse_m_range("0..3").unwrap(), (0, 3));
        assert!(parse_m_range("3..1").is_err());
        assert!(parse_m_range("x").is_err());
    }

    #[test]
    fn float_format() {
        assert_eq!(fmt_f64(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_f64(f64::NAN), "nan");
        let x = 0.1f64 + 0.2;
        assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn fermion_classes() {
        let kind = |c: &[i64]| fermion_stiffness(&GeneratorSpec::polynomial("g", c).unwrap(), 1.0, 1.0, 1.0).unwrap();
        assert_eq!(kind(&[1]).2, ForceKind::Zero);
        let (sum, k, class) = kind(&[1, 2]);
        assert_eq!((sum.as_str(), class), ("-20", ForceKind::Repulsive));
        assert_eq!(k, -960.0);
        assert_eq!(kind(&[1, 2, 3]).2, ForceKind::Restoring);
    }
}
