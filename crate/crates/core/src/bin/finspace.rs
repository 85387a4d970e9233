use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use finspace::enumerate::{EnumerationFilter, Search, MAX_ENUMERATION_POINTS};
use finspace::format::{to_dot, PosetFile};
use finspace::pi1::DEFAULT_TIETZE_BUDGET;
use finspace::verify::{describe, verify, Target, VerifyConfig};

const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "finspace", version, about = "Finite T0-spaces as posets: cores, homology, pi1 and exhaustive searches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of a space.
    Invariants {
        /// PosetFile path, or `-` for standard input.
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TIETZE_BUDGET)]
        budget: usize,
    },
    /// Run an exhaustive verification target.
    Verify {
        /// min9, classify9, sphere-min, prop35, lemma31, lemma32, lemma33,
        /// lemma34, prop22 or remark23.
        target: String,
        #[arg(long)]
        max_points: Option<usize>,
        /// Worker threads (default: FINSPACE_JOBS, else 1).
        #[arg(long, env = "FINSPACE_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Tietze rewrite steps per space.
        #[arg(long, default_value_t = DEFAULT_TIETZE_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Skip spaces with a maximum or minimum before computing verdicts.
        #[arg(long)]
        fast: bool,
    },
    /// List one representative per isomorphism class of n-point posets.
    Enumerate {
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Only spaces without beat points.
        #[arg(long)]
        cores: bool,
        #[arg(long)]
        max_height: Option<usize>,
        #[arg(long)]
        count_only: bool,
        #[arg(long, env = "FINSPACE_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Graphviz rendering of the Hasse diagram.
    ExportDot { file: PathBuf },
    /// Non-Hausdorff suspension, applied k times.
    Suspend {
        file: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: usize,
    },
    /// The opposite space.
    Opposite { file: PathBuf },
}

enum Failure {
    Usage(String),
    Io(String),
}

fn read_poset(path: &Path) -> Result<PosetFile, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    PosetFile::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let mut emit = |s: &str| out.write_all(s.as_bytes()).map_err(|e| Failure::Io(e.to_string()));
    match cli.command {
        Command::Invariants { file, budget } => {
            let f = read_poset(&file)?;
            emit(&describe(&f.name, &f.poset, budget))?;
            Ok(0)
        }
        Command::Verify {
            target,
            max_points,
            jobs,
            budget,
            format,
            fast,
        } => {
            let target: Target = target.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            let cfg = VerifyConfig {
                max_points,
                jobs,
                budget,
                fast,
            };
            let start = Instant::now();
            let report = verify(target, &cfg).map_err(|e| Failure::Usage(e.to_string()))?;
            eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
            match format {
                OutputFormat::Text => emit(&report.to_text())?,
                OutputFormat::Structured => emit(&report.to_json())?,
            }
            Ok(report.status.exit_code() as u8)
        }
        Command::Enumerate {
            n,
            connected,
            cores,
            max_height,
            count_only,
            jobs,
        } => {
            if n > MAX_ENUMERATION_POINTS {
                return Err(Failure::Usage(format!("at most {MAX_ENUMERATION_POINTS} points")));
            }
            if jobs == 0 {
                return Err(Failure::Usage("--jobs must be at least 1".into()));
            }
            let filter = EnumerationFilter {
                connected,
                cores_only: cores,
                max_height,
                ..EnumerationFilter::all()
            };
            let search = Search::new(n..=n, filter).jobs(jobs);
            if count_only {
                let outcome = search.run(|_| None::<()>);
                emit(&format!("{}\n", outcome.accepted[n]))?;
            } else {
                let mut items = search.run(|node| Some(node.form.clone())).items;
                items.sort();
                for (i, form) in items.iter().enumerate() {
                    if i > 0 {
                        emit("\n")?;
                    }
                    emit(&PosetFile::new(format!("n{n}-{i}"), form.to_poset()).to_string())?;
                }
            }
            Ok(0)
        }
        Command::ExportDot { file } => {
            let f = read_poset(&file)?;
            emit(&to_dot(&f.name, &f.poset))?;
            Ok(0)
        }
        Command::Suspend { file, k } => {
            let f = read_poset(&file)?;
            let mut p = f.poset;
            for _ in 0..k {
                p = p.nh_suspension().map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let name = if k == 0 { f.name } else { format!("{}-susp{k}", f.name) };
            emit(&PosetFile::new(name, p).to_string())?;
            Ok(0)
        }
        Command::Opposite { file } => {
            let f = read_poset(&file)?;
            let name = match f.name.strip_suffix("op") {
                Some(base) if !base.is_empty() => base.to_string(),
                _ => format!("{}op", f.name),
            };
            emit(&PosetFile::new(name, f.poset.opposite()).to_string())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
