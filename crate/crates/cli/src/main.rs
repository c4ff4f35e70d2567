//! `rkcodes`: build and analyze linear codes over `Z_m[v_1, ..., v_k]`.
//!
//! Exit codes: 0 success or verified, 1 verification mismatch, 2 input
//! error, 3 guard exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rkcodes::{Guard, Layout};

use commands::{Ctx, Report};

#[derive(Parser)]
#[command(name = "rkcodes", version, about = "Linear codes over Z_m[v_1..v_k] with v_i^2 = v_i")]
struct Cli {
    /// Largest enumeration any single step may perform.
    #[arg(long, global = true, default_value_t = Guard::DEFAULT_CAP)]
    guard: u128,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Layout of idempotent coordinates in printed words.
    #[arg(long, global = true, value_enum, default_value_t = LayoutArg::ComponentMajor)]
    layout: LayoutArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LayoutArg {
    Interleaved,
    ComponentMajor,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Form {
    Hamming,
    Cwe,
    Swe,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GroupArg {
    Trivial,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Size, distances, components and self-duality of a code.
    Analyze { code: PathBuf },
    /// Euclidean or Hermitian dual by exhaustive scan.
    Dual {
        code: PathBuf,
        #[arg(long)]
        hermitian: bool,
        /// Write the dual as a code file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a MacWilliams identity against the exhaustive dual.
    Macwilliams {
        code: PathBuf,
        #[arg(long, value_enum, default_value_t = Form::Hamming)]
        form: Form,
        /// Unit subgroup for the symmetrized form.
        #[arg(long, value_enum, default_value_t = GroupArg::Full)]
        group: GroupArg,
    },
    /// Quasi-cyclicity of index d, with the component and phi-image checks.
    CyclicCheck {
        code: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Also check the image under this phi map.
        #[arg(long)]
        phi: Option<PathBuf>,
    },
    /// Quasi-theta-cyclicity of index d, directly and on psi coordinates.
    SkewCheck {
        code: PathBuf,
        #[arg(long)]
        theta: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Build a quasi-theta-cyclic code from component codes.
    SkewConstruct {
        #[arg(long)]
        components: PathBuf,
        #[arg(long)]
        theta: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Idempotent coordinates of the generators, and optionally a phi image.
    Gray {
        code: PathBuf,
        #[arg(long)]
        phi: Option<PathBuf>,
    },
    /// Recompute the table of Z_4 codes obtained with phi_1.
    Table1 {
        /// Table fixture; defaults to the bundled one.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Exhaustive search over phi maps of a given length.
    SearchPhi {
        code: PathBuf,
        /// Output symbols per input symbol.
        #[arg(long)]
        l: usize,
        /// Largest coefficient tried in beta and beta'; defaults to m - 1.
        #[arg(long)]
        max_coeff: Option<u32>,
        /// Number of ranked candidates to print.
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    let ctx = Ctx {
        guard: Guard::new(cli.guard),
        layout: match cli.layout {
            LayoutArg::Interleaved => Layout::Interleaved,
            LayoutArg::ComponentMajor => Layout::ComponentMajor,
        },
    };
    match cli.command {
        Command::Analyze { code } => commands::analyze(&ctx, &code),
        Command::Dual { code, hermitian, out } => commands::dual(&ctx, &code, hermitian, out.as_deref()),
        Command::Macwilliams { code, form, group } => commands::macwilliams(&ctx, &code, form, group),
        Command::CyclicCheck { code, d, phi } => commands::cyclic_check(&ctx, &code, d, phi.as_deref()),
        Command::SkewCheck { code, theta, d } => commands::skew_check(&ctx, &code, &theta, d),
        Command::SkewConstruct {
            components,
            theta,
            d,
            out,
        } => commands::skew_construct(&ctx, &components, &theta, d, out.as_deref()),
        Command::Gray { code, phi } => commands::gray(&ctx, &code, phi.as_deref()),
        Command::Table1 { fixture } => commands::table1(&ctx, fixture.as_deref()),
        Command::SearchPhi { code, l, max_coeff, top } => commands::search_phi(&ctx, &code, l, max_coeff, top),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable report"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            let guard_hit = err
                .chain()
                .any(|e| matches!(e.downcast_ref::<rkcodes::Error>(), Some(rkcodes::Error::GuardExceeded { .. })));
            ExitCode::from(if guard_hit { 3 } else { 2 })
        }
    }
}
