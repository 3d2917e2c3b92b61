//! Command-line front end: argument parsing, output routing and exit codes.
//!
//! Exit codes: 0 success, 1 failed checks or computation errors, 2 usage or
//! parse errors.

pub mod commands;
pub mod report;
pub mod verify;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use pencil_core::Field;

use commands::{ChowCmd, Failure};

#[derive(Parser, Debug)]
#[command(name = "pencil-git", version, about = "Exact checks for pencils of binary cubics and their Chow rings")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Field spec: q, fp:<p>, or either with (sqrt:<d>).
    #[arg(long, global = true, default_value = "fp:13")]
    pub field: String,
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "degree-bound", global = true, default_value_t = 8)]
    pub degree_bound: u32,
    /// Also write the output to this file.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// I', J, Newstead point and stability class.
    Invariants {
        #[arg(long)]
        pencil: String,
    },
    /// Orbit label.
    Classify {
        #[arg(long)]
        pencil: String,
    },
    /// Some (A, rho) with A . p_rho = p (finite fields).
    WallForm {
        #[arg(long)]
        pencil: String,
    },
    /// Stabilizer of a pencil, or a named subgroup.
    Stabilizer {
        #[arg(long)]
        pencil: Option<String>,
        #[arg(long)]
        group: Option<String>,
    },
    /// Fiber of Phi over a pencil, or Wall parameters over a Newstead point.
    Fiber {
        #[arg(long)]
        pencil: Option<String>,
        #[arg(long)]
        point: Option<String>,
    },
    /// S4-orbit of a Wall parameter.
    Orbit {
        #[arg(long)]
        rho: String,
    },
    /// Graded rings over Z.
    Chow {
        #[command(subcommand)]
        cmd: ChowSub,
    },
    /// Character table and decompositions for S4, A4, D8, D4 or C3.
    Chars { group: String },
    /// Run every acceptance check.
    VerifyAll {
        /// Drop the first relation of this builtin before checking.
        #[arg(long, hide = true)]
        corrupt_builtin: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ChowSub {
    /// Degree-d piece of a builtin ring.
    Piece { name: String, degree: u32 },
    /// Print a builtin presentation.
    Show { name: String },
    /// Ideal membership and normal form.
    Member {
        name: String,
        element: String,
        /// Extra relations to quotient by first.
        #[arg(long = "quotient")]
        quotient: Vec<String>,
    },
    /// Check a builtin ring map up to the degree bound.
    Map { name: String },
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Output { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Output { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(&cli) {
        Ok((report, text)) => {
            let body = if cli.global.json {
                let mut s = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
                s.push('\n');
                s
            } else {
                text
            };
            if let Some(path) = &cli.global.out {
                if let Err(e) = std::fs::write(path, &body) {
                    return Output { code: 1, stdout: body, stderr: format!("error: cannot write {}: {e}\n", path.display()) };
                }
            }
            Output { code: if report.ok() { 0 } else { 1 }, stdout: body, stderr: String::new() }
        }
        Err(f) => Output { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn dispatch(cli: &Cli) -> commands::Outcome {
    let field = Field::parse(&cli.global.field).map_err(Failure::from)?;
    let f = &field;
    match &cli.command {
        Command::Invariants { pencil } => commands::invariants(f, pencil),
        Command::Classify { pencil } => commands::classify(f, pencil),
        Command::WallForm { pencil } => commands::wall_form(f, pencil),
        Command::Stabilizer { pencil, group } => commands::stabilizer_cmd(f, pencil.as_deref(), group.as_deref()),
        Command::Fiber { pencil, point } => commands::fiber(f, pencil.as_deref(), point.as_deref()),
        Command::Orbit { rho } => commands::orbit(f, rho),
        Command::Chow { cmd } => {
            let cmd = match cmd {
                ChowSub::Piece { name, degree } => ChowCmd::Piece { name: name.clone(), degree: *degree },
                ChowSub::Show { name } => ChowCmd::Show { name: name.clone() },
                ChowSub::Member { name, element, quotient } => {
                    ChowCmd::Member { name: name.clone(), element: element.clone(), extra: quotient.clone() }
                }
                ChowSub::Map { name } => ChowCmd::Map { name: name.clone() },
            };
            commands::chow(f, cmd, cli.global.degree_bound)
        }
        Command::Chars { group } => commands::chars(f, group),
        Command::VerifyAll { corrupt_builtin } => {
            let mut ctx = verify::Ctx::new(field.clone(), cli.global.seed, cli.global.degree_bound);
            ctx.corrupt = corrupt_builtin.clone();
            commands::verify_all(&ctx)
        }
    }
}
