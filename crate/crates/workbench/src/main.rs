use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ringoid_core::Caps;
use ringoid_workbench::corpus::corpus;
use ringoid_workbench::ingest::StructureFile;
use ringoid_workbench::job::{AvoidMode, IdealRef, ModuleChoice, SideArg};
use ringoid_workbench::{execute, Command, Job, Parameters, Result, Settings, WorkbenchError};

/// Verify theorems about finite ringoids and semirings.
#[derive(Parser)]
#[command(name = "workbench", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Global {
    /// Largest carrier a construction may build.
    #[arg(long, global = true)]
    cap_carrier: Option<usize>,
    /// Largest carrier handed to ideal enumeration.
    #[arg(long, global = true)]
    cap_ideals: Option<usize>,
    /// Degree bound for monoid-semiring slices.
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sum bracketings.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args)]
struct Target {
    /// Corpus name or path to a structure file.
    structure: String,
}

#[derive(Args)]
struct CoverArgs {
    #[command(flatten)]
    target: Target,
    /// Target ideal: generators like `2,3`, or a predefined ideal name.
    #[arg(long)]
    ideal: String,
    /// A covering ideal; repeat for each cover.
    #[arg(long = "cover", required = true)]
    covers: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Law flags with least witnesses.
    Laws(Target),
    /// Enumerate ideals, or classify one.
    Ideals {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_enum)]
        side: Option<SideOpt>,
        /// Generators of a multiplicative set.
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<usize>>,
    },
    /// Prime spectrum and Zariski closed sets.
    Spec(Target),
    /// Prime avoidance and its variants.
    Avoid {
        #[command(flatten)]
        cover: CoverArgs,
        #[arg(long, value_enum, default_value = "ringoid")]
        mode: ModeOpt,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<usize>>,
    },
    /// McCoy exponent of an efficient covering.
    Mccoy(CoverArgs),
    /// Compactly-packed battery.
    Packed(Target),
    /// Zero divisors of a semimodule.
    Zdiv {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        module: Option<ModuleOpt>,
    },
    /// Total quotient semiring.
    Quotient(Target),
    /// Run every suite over the corpus.
    VerifyAll {
        /// Comma-separated entry names; an empty value selects nothing.
        #[arg(long)]
        scope: Option<String>,
    },
    /// Run a job file.
    Run { job: PathBuf },
    /// List the corpus, or write every entry as a structure file.
    Corpus {
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum SideOpt {
    Left,
    Right,
    TwoSided,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ModeOpt {
    Ringoid,
    Semiring,
    Radical,
    Semiprime,
    Davis,
    TSemiprime,
    Annihilator,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ModuleOpt {
    Regular,
    Square,
    Zero,
}

fn settings(g: &Global) -> Settings {
    let mut caps = Caps::default();
    if let Some(c) = g.cap_carrier {
        caps.carrier = c;
    }
    if let Some(c) = g.cap_ideals {
        caps.ideal_enumeration = c;
    }
    Settings { caps, seed: g.seed, degree_cap: g.degree_cap, timing: g.timing }
}

fn job(command: Command, structure: Option<String>, parameters: Parameters) -> Job {
    Job { command, structure, parameters }
}

fn cover_params(c: &CoverArgs) -> Parameters {
    Parameters {
        ideal: Some(IdealRef::parse(&c.ideal)),
        covers: Some(c.covers.iter().map(|s| IdealRef::parse(s)).collect()),
        ..Parameters::default()
    }
}

fn build_job(cmd: Cmd) -> Result<Job> {
    let plain = |command, t: Target| job(command, Some(t.structure), Parameters::default());
    Ok(match cmd {
        Cmd::Laws(t) => plain(Command::Laws, t),
        Cmd::Spec(t) => plain(Command::Spec, t),
        Cmd::Packed(t) => plain(Command::Packed, t),
        Cmd::Quotient(t) => plain(Command::Quotient, t),
        Cmd::Ideals { target, ideal, side, t } => {
            let side = side.map(|s| match s {
                SideOpt::Left => SideArg::Left,
                SideOpt::Right => SideArg::Right,
                SideOpt::TwoSided => SideArg::TwoSided,
            });
            let params =
                Parameters { ideal: ideal.as_deref().map(IdealRef::parse), side, t, ..Parameters::default() };
            job(Command::Ideals, Some(target.structure), params)
        }
        Cmd::Avoid { cover, mode, x, t } => {
            let mode = match mode {
                ModeOpt::Ringoid => AvoidMode::Ringoid,
                ModeOpt::Semiring => AvoidMode::Semiring,
                ModeOpt::Radical => AvoidMode::Radical,
                ModeOpt::Semiprime => AvoidMode::Semiprime,
                ModeOpt::Davis => AvoidMode::Davis,
                ModeOpt::TSemiprime => AvoidMode::TSemiprime,
                ModeOpt::Annihilator => AvoidMode::Annihilator,
            };
            let params = Parameters { mode: Some(mode), x, t, ..cover_params(&cover) };
            job(Command::Avoid, Some(cover.target.structure), params)
        }
        Cmd::Mccoy(cover) => job(Command::Mccoy, Some(cover.target.structure.clone()), cover_params(&cover)),
        Cmd::Zdiv { target, module } => {
            let module = module.map(|m| match m {
                ModuleOpt::Regular => ModuleChoice::Regular,
                ModuleOpt::Square => ModuleChoice::Square,
                ModuleOpt::Zero => ModuleChoice::Zero,
            });
            job(Command::Zdiv, Some(target.structure), Parameters { module, ..Parameters::default() })
        }
        Cmd::VerifyAll { scope } => {
            let scope = scope
                .map(|s| s.split(',').map(str::trim).filter(|n| !n.is_empty()).map(String::from).collect());
            job(Command::VerifyAll, None, Parameters { scope, ..Parameters::default() })
        }
        Cmd::Run { job } => {
            let text = std::fs::read_to_string(&job)
                .map_err(|source| WorkbenchError::Io { path: job.clone(), source })?;
            serde_json::from_str(&text)?
        }
        Cmd::Corpus { .. } => unreachable!("handled before dispatch"),
    })
}

fn list_corpus(settings: &Settings, export: Option<&Path>) -> Result<()> {
    let entries = corpus(&settings.caps)?;
    if let Some(dir) = export {
        std::fs::create_dir_all(dir).map_err(|source| WorkbenchError::Io { path: dir.into(), source })?;
    }
    for e in &entries {
        println!("{:<20} {:>3}  {}", e.name, e.structure.size(), e.source);
        if let Some(dir) = export {
            let path = dir.join(format!("{}.json", e.name));
            let file = StructureFile::from_structure(&e.structure, &e.claims);
            let text = serde_json::to_string_pretty(&file)?;
            std::fs::write(&path, text + "\n").map_err(|source| WorkbenchError::Io { path, source })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = settings(&cli.global);
    let outcome = match cli.command {
        Cmd::Corpus { export } => list_corpus(&settings, export.as_deref()).map(|()| 0),
        cmd => build_job(cmd).and_then(|j| execute(&j, &settings)).map(|report| {
            if cli.global.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            report.exit_code()
        }),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
