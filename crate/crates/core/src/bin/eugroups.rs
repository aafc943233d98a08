use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use eugroups::builders::{build, builtin_catalog, lookup};
use eugroups::corpus::{load_corpus, run_entries, CorpusEntry, RunOptions, RunResult};
use eugroups::export::{emit_dot, lattice_json};
use eugroups::lattice::{SubgroupLattice, LATTICE_CAP};
use eugroups::theorems::Verdict;

/// `println!` that tolerates a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(version, about = "Subgroup lattices and E_U classification checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest group order for which a subgroup lattice is built.
    #[arg(long, global = true, default_value_t = LATTICE_CAP)]
    cap_order: usize,

    /// Worker threads for corpus runs (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a catalog group or every entry of a corpus file.
    Analyze { target: String },
    /// Check a corpus against the classification theorems or the lemmas.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_enum, ignore_case = true)]
        theorem: Option<TheoremArg>,
    },
    /// Print the subgroup lattice of a catalog group.
    Lattice {
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// List the built-in groups.
    Catalog {
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    A,
    B,
    Lemmas,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn emit(report: Option<&Path>, text: &str) -> Result<(), u8> {
    match report {
        Some(path) => std::fs::write(path, format!("{text}\n")).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_INPUT
        }),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn entries_for(target: &str) -> Result<Vec<CorpusEntry>, u8> {
    if Path::new(target).is_file() {
        return load_corpus(target).map_err(|e| {
            eprintln!("error: {e}");
            EXIT_INPUT
        });
    }
    let spec = lookup(target).map_err(|e| {
        eprintln!("error: {e} (not a catalog name or a readable file)");
        EXIT_INPUT
    })?;
    Ok(vec![CorpusEntry {
        name: target.to_string(),
        spec,
        expect: Default::default(),
    }])
}

fn summarize(result: &RunResult, theorem: Option<TheoremArg>) -> u8 {
    let gate_a = !matches!(theorem, Some(TheoremArg::B));
    let gate_b = !matches!(theorem, Some(TheoremArg::A));
    let mut failed = false;
    for r in &result.reports {
        let show = |v: &Verdict| match v {
            Verdict::Violation(d) => format!("VIOLATION ({d})"),
            other => serde_json::to_string(other)
                .unwrap_or_default()
                .replace('"', ""),
        };
        out!(
            "{:<16} order {:>5}  D {:>4}  E_U {:<5}  A: {:<14}  B: {}",
            r.name,
            r.order,
            r.d_order,
            r.brute_eu.applicable && r.brute_eu.holds,
            show(&r.theorem_a.verdict),
            show(&r.theorem_b.verdict)
        );
        for m in &r.mismatches {
            out!("  mismatch: {m}");
        }
        failed |= !r.mismatches.is_empty()
            || (gate_a && r.theorem_a.verdict.is_violation())
            || (gate_b && r.theorem_b.verdict.is_violation());
    }
    for s in &result.skipped {
        out!("{:<16} skipped: {}", s.name, s.reason);
    }
    for l in result.lemmas.iter().filter(|l| !l.pass()) {
        out!(
            "lemma {} failed on {}: {}",
            l.lemma,
            l.group,
            l.failures.join("; ")
        );
        failed = true;
    }
    if matches!(theorem, Some(TheoremArg::B)) || theorem.is_none() {
        let agree = result
            .reports
            .iter()
            .filter(|r| r.theorem_b.verdict != Verdict::NotApplicable)
            .map(|r| r.theorem_b.literal_agrees)
            .collect::<Vec<_>>();
        if !agree.is_empty() {
            out!(
                "Gaschütz condition read in G instead of G/Φ agrees on {}/{} groups",
                agree.iter().filter(|&&a| a).count(),
                agree.len()
            );
        }
    }
    if failed {
        EXIT_VIOLATION
    } else if !result.skipped.is_empty() {
        EXIT_CAP
    } else {
        EXIT_OK
    }
}

fn real_main(cli: Cli) -> Result<u8, u8> {
    let opts = RunOptions {
        cap_order: cli.cap_order,
        jobs: cli.jobs,
        ..RunOptions::default()
    };
    match cli.command {
        Command::Analyze { target } => {
            let entries = entries_for(&target)?;
            let result = run_entries(&entries, &opts);
            emit(cli.report.as_deref(), &result.report_json())?;
            Ok(summarize_quiet(&result))
        }
        Command::Verify { corpus, theorem } => {
            let entries = load_corpus(&corpus).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_INPUT
            })?;
            let lemmas = matches!(theorem, Some(TheoremArg::Lemmas));
            let result = run_entries(&entries, &RunOptions { lemmas, ..opts });
            let code = summarize(&result, theorem);
            if let Some(path) = &cli.report {
                let json = if lemmas {
                    result.lemma_json()
                } else {
                    result.report_json()
                };
                emit(Some(path), &json)?;
            }
            Ok(code)
        }
        Command::Lattice { name, format } => {
            let spec = lookup(&name).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_INPUT
            })?;
            let group = build(&spec).map_err(|e| {
                eprintln!("error: {e}");
                if e.is_cap() {
                    EXIT_CAP
                } else {
                    EXIT_INPUT
                }
            })?;
            let lattice = SubgroupLattice::with_cap(&group, cli.cap_order).map_err(|e| {
                eprintln!("error: lattice too large: {e}");
                EXIT_CAP
            })?;
            let text = match format {
                Format::Dot => emit_dot(&lattice),
                Format::Json => lattice_json(&lattice),
            };
            emit(cli.report.as_deref(), text.trim_end())?;
            Ok(EXIT_OK)
        }
        Command::Catalog { list: _ } => {
            for (name, spec) in builtin_catalog() {
                let order = build(&spec).map_or_else(|e| e.to_string(), |g| g.order().to_string());
                out!("{name:<16} order {order:>5}  degree {:>3}", spec.degree());
            }
            Ok(EXIT_OK)
        }
    }
}

/// Exit status for `analyze`, which prints JSON and no summary table.
fn summarize_quiet(result: &RunResult) -> u8 {
    for s in &result.skipped {
        eprintln!("{}: skipped: {}", s.name, s.reason);
    }
    if result.violations() > 0 || result.mismatches() > 0 {
        EXIT_VIOLATION
    } else if !result.skipped.is_empty() {
        EXIT_CAP
    } else {
        EXIT_OK
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(code) | Err(code) => ExitCode::from(code),
    }
}
