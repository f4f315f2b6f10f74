//! Command-line definitions.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixbound::mixing::SearchConfig;

use crate::commands::{self, AnalyzeArgs, CmdResult, Outcome, EXIT_MISMATCH};
use crate::render::Format;
use crate::verify::verify_paper;

const EXIT_CODES: &str = "Exit codes: 0 success, 1 verification mismatch, 2 parse or usage error, \
3 degenerate input (zero or monomial polynomial, degenerate hull).";

#[derive(Debug, Parser)]
#[command(name = "mixbound", version, about = "Order-of-mixing analysis for algebraic Z^2-actions over F_p", after_help = EXIT_CODES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Characteristic p (a prime below 2^16)
    #[arg(long, short = 'p')]
    pub prime: u64,
    /// Laurent polynomial in u1, u2, e.g. "u2+u1+u1^3u2"
    #[arg(long)]
    pub poly: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Largest dilation k searched
    #[arg(long, default_value_t = 16)]
    pub kmax: u64,
    /// Window schedule for non-constant coefficients
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    pub windows: Vec<u32>,
    /// Search each (k, W) in turn instead of all constants first
    #[arg(long)]
    pub no_constants_first: bool,
}

impl SearchArgs {
    pub fn config(&self) -> SearchConfig {
        SearchConfig {
            kmax: self.kmax,
            windows: self.windows.clone(),
            constants_first: !self.no_constants_first,
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Svg,
    Tikz,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hull, Newton polygons, irreducibility and mixing-order bounds
    Analyze {
        #[command(flatten)]
        poly: PolyArgs,
        /// Emit JSON (the default)
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        /// Emit a human-readable summary
        #[arg(long)]
        pretty: bool,
        /// Write the hull figure as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the hull figure as TikZ
        #[arg(long)]
        tikz: Option<PathBuf>,
        /// Also classify this shape, "(a,b);(c,d);..." (repeatable)
        #[arg(long)]
        shape: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Decide or search whether a finite shape is mixing
    ShapeTest {
        #[command(flatten)]
        poly: PolyArgs,
        /// Shape points, "(a,b);(c,d);..."
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        search: SearchArgs,
        /// Skip the 3-point classifier and run only the witness search
        #[arg(long)]
        search_only: bool,
    },
    /// Alignment of tuple families with the faces of the hull
    SeqDiagnose {
        #[command(flatten)]
        poly: PolyArgs,
        /// One tuple, "(a,b);(c,d);..." (repeatable)
        #[arg(long)]
        tuple: Vec<String>,
        /// File with one "j: (a,b);(c,d);..." tuple per line
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Solutions of (1+t+t^2)^m = 1+t^(2m) over F_2 for m <= mmax
    VolochScan {
        #[arg(long, default_value_t = 4096)]
        mmax: u64,
    },
    /// Replay the worked examples and golden figures
    VerifyPaper {
        /// Human-readable lines instead of JSON
        #[arg(long)]
        pretty: bool,
    },
    /// Draw the support hull, optionally with a Newton polygon panel
    Render {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value = "svg")]
        format: FormatArg,
        /// Add the Newton polygon used for face F<N>
        #[arg(long)]
        newton_face: Option<usize>,
        /// Output file (stdout if absent)
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
}

pub fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Analyze {
            poly,
            pretty,
            svg,
            tikz,
            shape,
            search,
            ..
        } => commands::analyze(&AnalyzeArgs {
            prime: poly.prime,
            poly: &poly.poly,
            pretty: *pretty,
            svg: svg.as_deref(),
            tikz: tikz.as_deref(),
            shapes: shape,
            config: search.config(),
        }),
        Command::ShapeTest {
            poly,
            shape,
            search,
            search_only,
        } => commands::shape_test(poly.prime, &poly.poly, shape, &search.config(), *search_only),
        Command::SeqDiagnose { poly, tuple, file } => {
            commands::seq_diagnose(poly.prime, &poly.poly, tuple, file.as_deref())
        }
        Command::VolochScan { mmax } => commands::voloch_scan(*mmax),
        Command::VerifyPaper { pretty } => {
            let summary = verify_paper();
            let stdout = if *pretty {
                let mut s = String::new();
                for c in &summary.checks {
                    let mark = if c.pass { "PASS" } else { "FAIL" };
                    s.push_str(&format!("{mark} {}: {}\n", c.check, c.got));
                    if !c.pass {
                        s.push_str(&format!("     expected: {}\n", c.expected));
                    }
                }
                s.push_str(&format!("{} passed, {} failed\n", summary.passed, summary.failed));
                s
            } else {
                serde_json::to_string_pretty(&summary).expect("serializable") + "\n"
            };
            Ok(Outcome {
                code: if summary.all_pass() { 0 } else { EXIT_MISMATCH },
                stdout,
            })
        }
        Command::Render {
            poly,
            format,
            newton_face,
            output,
        } => {
            let format = match format {
                FormatArg::Svg => Format::Svg,
                FormatArg::Tikz => Format::Tikz,
            };
            commands::render(poly.prime, &poly.poly, format, *newton_face, output.as_deref())
        }
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}
