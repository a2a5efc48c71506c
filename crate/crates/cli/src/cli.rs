use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{self, CoverArgs, Env, Grading, KSpec, NSpec, SweepArgs};
use crate::data::Loader;
use crate::error::{CliError, Result};
use crate::report::Report;
use crate::verify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Exact homology computations for finitely presented groups: abelianization,
/// Fox calculus, Alexander polynomials and finite cyclic covers.
///
/// File arguments name files on disk or bundled data files such as
/// `n-final`, `nb`, `rst`, `delta_L` or `map-free-abelian`.
#[derive(Debug, Parser)]
#[command(name = "foxhom", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads for sweeps; results do not depend on this.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Directory that replaces the bundled data files.
    #[arg(long, global = true, value_name = "DIR")]
    pub data_dir: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GradingArgs {
    /// One-variable abelianization map giving the degrees.
    #[arg(long, value_name = "FILE")]
    map: Option<String>,
    /// Degrees as `gen=int,gen=int,...`.
    #[arg(long, value_parser = Grading::parse_degrees)]
    degrees: Option<Grading>,
}

#[derive(Debug, Args)]
pub struct CoverCli {
    /// Presentation file.
    presentation: String,
    #[command(flatten)]
    grading: GradingArgs,
    /// Cover degrees: `INT`, `a,b,c` or an inclusive range `a..b`.
    #[arg(long)]
    n: NSpec,
}

impl CoverCli {
    fn args(&self) -> CoverArgs {
        let grading = match (&self.grading.map, &self.grading.degrees) {
            (Some(m), _) => Grading::Map(m.clone()),
            (None, Some(d)) => d.clone(),
            (None, None) => unreachable!("clap requires one of --map and --degrees"),
        };
        CoverArgs {
            presentation: self.presentation.clone(),
            grading,
            n: self.n.clone(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First homology of presentations: rank and torsion.
    Abelianize {
        #[arg(required = true)]
        presentations: Vec<String>,
    },
    /// Alexander matrix, optional row-deletion minors, and the Alexander polynomial.
    Alexander {
        presentation: String,
        /// Abelianization map file.
        #[arg(long)]
        map: String,
        /// Also list the minors with one generator row deleted.
        #[arg(long)]
        minors: bool,
    },
    /// First homology of n-fold cyclic covers.
    Cover(CoverCli),
    /// First homology of cyclic covers with slope lifts filled.
    Fill {
        #[command(flatten)]
        cover: CoverCli,
        /// Slope word; repeat for several. Defaults to the bundled slopes.
        #[arg(long = "slope")]
        slopes: Vec<String>,
    },
    /// Cover homology modulo tr(m), 2 tr(s), 2 tr(t), with its index over H_n.
    Sakuma(CoverCli),
    /// Cover homology modulo the transfers of all generators.
    Hn(CoverCli),
    /// First Betti numbers of branched covers from a two-variable polynomial.
    Branched {
        /// Polynomial file.
        delta: String,
        #[arg(long)]
        n: NSpec,
        /// `INT` or `all` coprime k.
        #[arg(long, default_value = "all")]
        k: KSpec,
    },
    /// Rational homology sphere check of filled covers over odd n.
    RhsSweep {
        #[arg(long, default_value = "n-final")]
        presentation: String,
        /// One-variable map giving the cover degrees.
        #[arg(long, default_value = "map-infinite-cyclic")]
        map: String,
        /// Slope word; repeat for several. Defaults to the bundled slopes.
        #[arg(long = "slope")]
        slopes: Vec<String>,
        /// A range keeps its odd values; explicit even n needs --force.
        #[arg(long)]
        n: NSpec,
        /// Admit even n, flagged in the output.
        #[arg(long)]
        force: bool,
    },
    /// Check the bundled example against its recorded values.
    VerifyPaper {
        /// Run only this item; repeat for several.
        #[arg(long = "item", value_parser = clap::builder::PossibleValuesParser::new(verify::ITEMS))]
        items: Vec<String>,
    },
    /// Run a JSON job file.
    Job { file: String },
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let env = Env::new(Loader::new(cli.data_dir.clone()), cli.jobs as usize)?;
    match &cli.command {
        Command::Abelianize { presentations } => commands::abelianize(&env, presentations),
        Command::Alexander {
            presentation,
            map,
            minors,
        } => commands::alexander(&env, presentation, map, *minors),
        Command::Cover(c) => commands::cover(&env, &c.args()),
        Command::Fill { cover, slopes } => commands::fill(&env, &cover.args(), slopes),
        Command::Sakuma(c) => commands::sakuma(&env, &c.args()),
        Command::Hn(c) => commands::hn(&env, &c.args()),
        Command::Branched { delta, n, k } => commands::branched(&env, delta, n, *k),
        Command::RhsSweep {
            presentation,
            map,
            slopes,
            n,
            force,
        } => commands::rhs_sweep(
            &env,
            &SweepArgs {
                presentation: presentation.clone(),
                map: map.clone(),
                slopes: slopes.clone(),
                n: n.clone(),
                force: *force,
            },
        ),
        Command::VerifyPaper { items } => verify::verify(&env, items),
        Command::Job { file } => commands::job(&env, file),
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    }
}

/// Runs the command line; returns the process exit code. 0 on success, 1 on
/// a verification mismatch, 2 on any input error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let text = render(&report, cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "stdout".into(),
                source,
            }),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    if report.mismatch {
        1
    } else {
        0
    }
}
