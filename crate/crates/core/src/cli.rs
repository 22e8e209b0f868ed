//! Command-line front end. Every command is a thin wrapper over a library
//! call; numbers are printed with `f64`'s shortest round-trip formatting so
//! output is byte-for-byte reproducible.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::best::{construct_approximant, oracle_report};
use crate::conv::{check_conv_membership, complement_closure, product_closure, separates_points};
use crate::error::{Error, ErrorClass};
use crate::io::{AnyDocument, ClassDocument, DocumentError, FunctionDocument, LoadedFunction};
use crate::real::{dist_to_real_level, dist_to_real_with, midpoint_selector, radius, Convention};
use crate::space::FuzzyFunction;

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-approx",
    version,
    about = "Metrics and best approximation for fuzzy-number-valued functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Uniform distance D(f, g) between two fuzzy functions.
    Dist { f: PathBuf, g: PathBuf },

    /// Distance from a fuzzy function to a real-valued function.
    DistReal {
        f: PathBuf,
        real: PathBuf,
        /// Measure at this level set instead of the core.
        #[arg(long, conflicts_with = "support")]
        level: Option<f64>,
        /// Measure at the supports (level 0).
        #[arg(long)]
        support: bool,
    },

    /// Core radius profile and rad(f).
    Radius { f: PathBuf },

    /// Best real-valued approximant (core midpoints).
    BestReal {
        f: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },

    /// Constructive approximant h in W with D(f, h) <= max_x d_x(f, W) + 3 epsilon.
    Approx {
        f: PathBuf,
        class: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },

    /// Brute-force d(f, W), max_x d_x(f, W) and where it is attained.
    Oracle { f: PathBuf, class: PathBuf },

    /// Validate a function or class document and print its invariant report.
    Check { document: PathBuf },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("output failed: {0}")]
    Output(#[from] io::Error),
    #[error("report failed: {0}")]
    Report(#[from] csv::Error),
}

impl CliError {
    /// 1 validation, 2 parse or I/O, 3 algorithmic failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Document(DocumentError::Validation { source, .. }) => match source.class() {
                ErrorClass::Validation => 1,
                ErrorClass::Algorithmic => 3,
            },
            CliError::Document(DocumentError::Unsupported(_)) => 1,
            CliError::Document(_) => 2,
            CliError::Library(e) => match e.class() {
                ErrorClass::Validation => 1,
                ErrorClass::Algorithmic => 3,
            },
            CliError::Output(_) | CliError::Report(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Document(e) => e.kind(),
            CliError::Library(e) => e.kind(),
            CliError::Output(_) => "IoError",
            CliError::Report(_) => "ReportError",
        }
    }

    /// Single machine-readable line for stderr.
    pub fn error_line(&self) -> String {
        let message = self.to_string().replace('\n', " ");
        let cause = match self {
            CliError::Document(DocumentError::Validation { source, .. }) => {
                format!(" cause={}", source.kind())
            }
            _ => String::new(),
        };
        format!(
            "error code={} kind={}{cause} message={:?}",
            self.exit_code(),
            self.kind(),
            message.trim()
        )
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    execute(cli.command, out)
}

fn load_fuzzy(path: &Path) -> Result<FuzzyFunction, CliError> {
    Ok(FunctionDocument::load(path)?.to_fuzzy()?)
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Dist { f, g } => {
            let f = load_fuzzy(&f)?;
            let g = load_fuzzy(&g)?;
            writeln!(out, "D={}", f.distance(&g)?)?;
        }
        Command::DistReal {
            f,
            real,
            level,
            support,
        } => {
            let f = load_fuzzy(&f)?;
            let real = FunctionDocument::load(&real)?.to_scalar()?;
            let (lambda, d) = match level {
                Some(lambda) => (lambda, dist_to_real_level(&f, &real, lambda)?),
                None => {
                    let convention = if support {
                        Convention::Support
                    } else {
                        Convention::Core
                    };
                    (
                        convention.level(),
                        dist_to_real_with(&f, &real, convention)?,
                    )
                }
            };
            writeln!(out, "level={lambda}")?;
            writeln!(out, "D={d}")?;
        }
        Command::Radius { f } => {
            let f = load_fuzzy(&f)?;
            let report = midpoint_selector(&f);
            writeln!(out, "radius={}", radius(&f))?;
            writeln!(out)?;
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["x", "rad"])?;
            for (x, r) in f.domain().points().iter().zip(report.rad_profile.values()) {
                w.write_record([x.to_string(), r.to_string()])?;
            }
            w.flush()?;
        }
        Command::BestReal {
            f,
            out: f0_path,
            report,
        } => {
            let f = load_fuzzy(&f)?;
            let r = midpoint_selector(&f);
            writeln!(out, "radius={}", r.radius)?;
            writeln!(out, "achieved={}", r.achieved)?;
            if let Some(path) = f0_path {
                FunctionDocument::from_scalar(&r.f0).save(path)?;
            }
            let rows = f
                .domain()
                .points()
                .iter()
                .zip(f.cores())
                .zip(r.f0.values().iter().zip(&r.g_intervals))
                .map(|((x, core), (f0, g))| {
                    [x, &core.lo, &core.hi, f0, &g.lo, &g.hi].map(|v| v.to_string())
                });
            let header = ["x", "core_lo", "core_hi", "F0", "G_lo", "G_hi"];
            write_table(out, report.as_deref(), &header, rows)?;
        }
        Command::Approx {
            f,
            class,
            epsilon,
            out: h_path,
            report,
        } => {
            let f = load_fuzzy(&f)?;
            let class = ClassDocument::load(&class)?.to_class()?;
            let r = construct_approximant(&f, &class, epsilon)?;
            writeln!(out, "target={}", r.target)?;
            writeln!(out, "epsilon={}", r.epsilon)?;
            writeln!(out, "bound={}", r.bound())?;
            writeln!(out, "achieved={}", r.achieved)?;
            writeln!(out, "cover_size={}", r.cover.len())?;
            writeln!(out, "delta={}", r.delta)?;
            writeln!(out, "k={}", r.k_const)?;
            if let Some(path) = h_path {
                FunctionDocument::from_fuzzy(&r.h).save(path)?;
            }
            let rows = f
                .domain()
                .points()
                .iter()
                .zip(r.gamma.values())
                .enumerate()
                .map(|(i, (x, g))| {
                    [
                        x.to_string(),
                        g.to_string(),
                        u8::from(r.is_center(i)).to_string(),
                    ]
                });
            write_table(out, report.as_deref(), &["x", "gamma", "center"], rows)?;
        }
        Command::Oracle { f, class } => {
            let f = load_fuzzy(&f)?;
            let doc = ClassDocument::load(&class)?;
            let class = doc.to_class()?;
            let r = oracle_report(&f, &class)?;
            writeln!(out, "global={}", r.global)?;
            writeln!(
                out,
                "global_argmin={}",
                doc.enumeration[r.global_argmin].name
            )?;
            writeln!(out, "max_pointwise={}", r.max_pointwise)?;
            writeln!(out, "attainment_index={}", r.attainment.index)?;
            writeln!(out, "attainment_x={}", r.attainment.point)?;
            writeln!(out, "gap={}", r.gap)?;
            writeln!(out, "separates={}", r.attainment.hypothesis_met)?;
        }
        Command::Check { document } => check(&document, out)?,
    }
    Ok(())
}

fn write_table<R>(
    out: &mut dyn Write,
    path: Option<&Path>,
    header: &[&str],
    rows: impl Iterator<Item = R>,
) -> Result<(), CliError>
where
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    match path {
        Some(path) => {
            let mut w = csv::Writer::from_path(path)?;
            w.write_record(header)?;
            for row in rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        None => {
            writeln!(out)?;
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(header)?;
            for row in rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn check(path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    match AnyDocument::load(path)? {
        AnyDocument::Function(doc) => match doc.to_function()? {
            LoadedFunction::Fuzzy(f) => {
                writeln!(out, "document=function")?;
                writeln!(out, "kind=fuzzy")?;
                writeln!(out, "domain_points={}", f.domain().len())?;
                writeln!(out, "levels={}", f.levels().len())?;
                writeln!(out, "monotone_endpoints=true")?;
                writeln!(out, "ordered_endpoints=true")?;
                writeln!(out, "crisp={}", f.values().iter().all(|v| v.is_crisp()))?;
                writeln!(out, "radius={}", radius(&f))?;
            }
            LoadedFunction::Scalar(s) => {
                writeln!(out, "document=function")?;
                writeln!(out, "kind=scalar")?;
                writeln!(out, "domain_points={}", s.domain().len())?;
                writeln!(out, "unit_range={}", s.is_unit_range())?;
            }
        },
        AnyDocument::Class(doc) => {
            let class = doc.to_class()?;
            writeln!(out, "document=class")?;
            writeln!(out, "rule={}", class.rule())?;
            writeln!(out, "domain_points={}", class.domain().len())?;
            writeln!(out, "levels={}", class.levels().len())?;
            writeln!(out, "enumeration={}", class.enumeration().len())?;
            writeln!(out, "members_valid=true")?;
            writeln!(out, "multipliers={}", class.multipliers().len())?;
            let family = class.multipliers();
            let mut in_conv = true;
            let mut complements = true;
            let mut products = true;
            for phi in family {
                in_conv &= check_conv_membership(phi, &class)?;
                complements &= complement_closure(phi, &class)?;
                for psi in family {
                    products &= product_closure(phi, psi, &class)?;
                }
            }
            writeln!(out, "multipliers_in_conv={in_conv}")?;
            writeln!(out, "complement_closure={complements}")?;
            writeln!(out, "product_closure={products}")?;
            writeln!(
                out,
                "separates_points={}",
                separates_points(family, class.domain())?
            )?;
        }
    }
    Ok(())
}
