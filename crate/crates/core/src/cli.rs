//! The `ringlab` command line.
//!
//! Exit codes: 0 pass or found, 1 negative or inconclusive, 2 usage or
//! input error, 3 search budget exhausted.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::leads::{
    extent_feasibility, lead_scheme, leadhead_graph, FeasibilityOptions, LeadScheme, SchemeId, Verdict,
};
use crate::methods::{ccdd_course, expand_leads, grandsire_course, plain_bob_course, plain_hunt, sjt_extent, Method};
use crate::notation::{
    format_cycles, method_file_from_json, method_file_to_json, parse_cycles, parse_rows, read_composition_file,
    MethodFile,
};
use crate::perm::Perm;
use crate::rules::{validate, Ruleset};
use crate::unicursal::qset::random_trace;
use crate::unicursal::search::DEFAULT_BUDGET;
use crate::unicursal::{
    closure, hamiltonian_cycle, longest_cycle, parity_audit, rankin_oracle, CayleyGraph, Footprints,
    HamiltonianOutcome, LongestOptions, RankinVerdict, SearchOptions,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ringlab",
    version,
    about = "Change-ringing methods, rules and unicursal generation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a method and print its rows.
    Gen {
        #[command(subcommand)]
        method: GenMethod,
        #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
        format: Format,
    },
    /// Check a method file or row list against the rules.
    Validate {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = RulesetArg::Ringers)]
        ruleset: RulesetArg,
    },
    /// Search a Cayley graph for a Hamiltonian or longest cycle.
    Search {
        kind: SearchKind,
        #[command(flatten)]
        target: Target,
        #[arg(long, env = "RINGLAB_BUDGET", default_value_t = DEFAULT_BUDGET,
              value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
    /// Run the Rankin oracle, the extent feasibility tests or a Q-set
    /// parity audit.
    Prove {
        kind: ProveKind,
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenMethod {
    /// Plain changes: every row by single adjacent swaps.
    Sjt {
        #[arg(long)]
        n: usize,
    },
    PlainHunt {
        #[arg(long)]
        bells: usize,
    },
    PlainBob {
        #[arg(long)]
        bells: usize,
        /// Composition file of plain and bob leads.
        #[arg(long)]
        comp: Option<PathBuf>,
    },
    Grandsire {
        #[arg(long)]
        bells: usize,
        #[arg(long)]
        comp: Option<PathBuf>,
    },
    /// Christ Church Dublin Differential Doubles.
    Ccdd {
        #[arg(long)]
        comp: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RulesetArg {
    Motel,
    Ringers,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchKind {
    Hamiltonian,
    Longest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProveKind {
    Rankin,
    Feasibility,
    ParityAudit,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// `Sk`, `Ak` or `closure`.
    #[arg(long)]
    group: Option<String>,
    /// Semicolon-separated cycle strings, e.g. "(1 2 3);(1 2 3 4)".
    #[arg(long)]
    gens: Option<String>,
    /// Lead scheme such as plain-bob-6; generators are its P and B.
    #[arg(long, conflicts_with_all = ["group", "gens"])]
    scheme: Option<String>,
}

/// Generators, their labels and the group they generate.
struct Resolved {
    gens: Vec<Perm>,
    labels: Vec<String>,
    group: crate::unicursal::GroupTable,
    scheme: Option<LeadScheme>,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Format {
        path: "arguments".into(),
        message: msg.into(),
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn resolve(t: &Target) -> Result<Resolved> {
    if let Some(s) = &t.scheme {
        let scheme = lead_scheme(&s.parse::<SchemeId>()?)?;
        let gens = scheme.generators();
        let group = closure(&gens, 1_000_000)?;
        return Ok(Resolved {
            gens,
            labels: vec!["P".into(), "B".into()],
            group,
            scheme: Some(scheme),
        });
    }
    let text = t.gens.as_deref().ok_or_else(|| usage("give --gens or --scheme"))?;
    let parts: Vec<&str> = text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        return Err(usage("--gens is empty"));
    }
    let spec = t.group.as_deref().unwrap_or("closure");
    let (kind, k) = match spec {
        "closure" => ('c', 0),
        _ => {
            let (kind, rest) = spec.split_at(1);
            let k: usize = rest.parse().map_err(|_| usage(format!("bad group `{spec}`")))?;
            match kind {
                "S" => ('S', k),
                "A" => ('A', k),
                _ => return Err(usage(format!("bad group `{spec}`; use Sk, Ak or closure"))),
            }
        }
    };
    let max_point = parts
        .iter()
        .flat_map(|p| p.split(|c: char| !c.is_ascii_digit()))
        .filter_map(|tok| tok.parse::<usize>().ok())
        .max()
        .unwrap_or(1);
    let n = max_point.max(k).max(1);
    let gens = parts.iter().map(|p| parse_cycles(p, n)).collect::<Result<Vec<_>>>()?;
    let group = closure(&gens, 1_000_000)?;
    if kind != 'c' {
        let want = if kind == 'S' {
            factorial(k)
        } else {
            (factorial(k) / 2).max(1)
        };
        let mut support: Vec<usize> = gens.iter().flat_map(|g| g.support()).collect();
        support.sort_unstable();
        support.dedup();
        if group.order() != want || support.len() > k {
            return Err(Error::Generation {
                closure: group.order(),
                group: want,
            });
        }
    }
    let labels = (0..gens.len())
        .map(|i| {
            if i < 26 {
                char::from(b'A' + i as u8).to_string()
            } else {
                format!("T{i}")
            }
        })
        .collect();
    Ok(Resolved {
        gens,
        labels,
        group,
        scheme: None,
    })
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

fn word_string(labels: &[String], word: &[usize]) -> String {
    word.iter().map(|&t| labels[t].as_str()).collect::<Vec<_>>().join(",")
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn with_comp(scheme: &str, course: Result<Method>, comp: &Option<PathBuf>) -> Result<Method> {
    match comp {
        None => course,
        Some(path) => {
            let id: SchemeId = scheme.parse()?;
            let file = read_composition_file(path)?;
            expand_leads(&lead_scheme(&id)?, &file)
        }
    }
}

fn generate(method: &GenMethod) -> Result<Method> {
    match method {
        GenMethod::Sjt { n } => sjt_extent(*n),
        GenMethod::PlainHunt { bells } => plain_hunt(*bells),
        GenMethod::PlainBob { bells, comp } => with_comp(&format!("plain-bob-{bells}"), plain_bob_course(*bells), comp),
        GenMethod::Grandsire { bells, comp } => {
            with_comp(&format!("grandsire-{bells}"), grandsire_course(*bells), comp)
        }
        GenMethod::Ccdd { comp } => with_comp("ccdd-5", ccdd_course(), comp),
    }
}

fn cmd_gen(method: &GenMethod, format: Format, out: &mut dyn Write) -> Result<u8> {
    let m = generate(method)?;
    match format {
        Format::Text => {
            for r in m.rows() {
                writeln!(out, "{r}")?;
            }
        }
        Format::Json => writeln!(out, "{}", method_file_to_json(&MethodFile::from_method(&m)))?,
        Format::Csv => {
            writeln!(out, "index,row,transition")?;
            let mut ts = m.transitions();
            for (i, r) in m.rows().enumerate() {
                let t = if i == 0 {
                    String::new()
                } else {
                    format_cycles(ts.next().expect("one per row"))
                };
                writeln!(out, "{i},{r},{t}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn load_method(path: &Path) -> Result<Method> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        method_file_from_json(&text)?.to_method()
    } else {
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("rows");
        Method::from_rows(name, &parse_rows(&text)?)
    }
}

fn cmd_validate(path: &Path, ruleset: RulesetArg, out: &mut dyn Write) -> Result<u8> {
    let m = load_method(path)?;
    let ruleset = match ruleset {
        RulesetArg::Motel => Ruleset::Motel,
        RulesetArg::Ringers => Ruleset::Ringers,
    };
    let report = validate(&m, ruleset);
    emit(out, &report)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_search(kind: SearchKind, t: &Target, budget: u64, workers: usize, out: &mut dyn Write) -> Result<u8> {
    let r = resolve(t)?;
    let group_order = r.group.order();
    let lead_graph = r.scheme.as_ref().map(leadhead_graph).transpose()?;
    let graph = match &lead_graph {
        Some(lg) => lg.graph.clone(),
        None => CayleyGraph::new(r.group, r.gens)?,
    };
    match kind {
        SearchKind::Hamiltonian => {
            let rep = hamiltonian_cycle(&graph, &SearchOptions { budget, workers })?;
            let (status, word, code) = match &rep.outcome {
                HamiltonianOutcome::Found(w) => ("found", Some(word_string(&r.labels, w)), EXIT_OK),
                HamiltonianOutcome::None => ("none", None, EXIT_NEGATIVE),
                HamiltonianOutcome::Exhausted => ("exhausted", None, EXIT_BUDGET),
            };
            let mut v = json!({
                "status": status,
                "group_order": group_order,
                "expansions": rep.expansions,
                "elapsed": secs(rep.elapsed),
            });
            if let Some(w) = word {
                v["word"] = json!(w);
            }
            emit(out, &v)?;
            Ok(code)
        }
        SearchKind::Longest => {
            let fp: Option<&Footprints> = lead_graph.as_ref().map(|lg| &lg.footprints);
            let rep = longest_cycle(&graph, fp, &LongestOptions { budget, target: None });
            let word = rep.best.as_ref().map(|c| word_string(&r.labels, &c.labels));
            let status = if rep.optimal { "optimal" } else { "exhausted" };
            let mut v = json!({
                "status": status,
                "length": rep.length(),
                "optimal": rep.optimal,
                "upper_bound": rep.upper_bound,
                "expansions": rep.expansions,
                "elapsed": secs(rep.elapsed),
            });
            if let Some(w) = word {
                v["word"] = json!(w);
            }
            if let (Some(lg), Some(_)) = (&lead_graph, &rep.best) {
                v["rows"] = json!(rep.length() * lg.scheme.lead_length());
            }
            emit(out, &v)?;
            Ok(if rep.optimal { EXIT_OK } else { EXIT_BUDGET })
        }
    }
}

fn two_gens(r: &Resolved) -> Result<(&Perm, &Perm)> {
    match r.gens.as_slice() {
        [x, y] => Ok((x, y)),
        _ => Err(usage("exactly two generators are needed")),
    }
}

fn cmd_prove(kind: ProveKind, t: &Target, steps: usize, seed: u64, out: &mut dyn Write) -> Result<u8> {
    match kind {
        ProveKind::Rankin => {
            let r = resolve(t)?;
            let (x, y) = two_gens(&r)?;
            let rep = rankin_oracle(&r.group, x, y)?;
            emit(out, &rep)?;
            Ok(if rep.verdict == RankinVerdict::Impossible {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        ProveKind::Feasibility => {
            let name = t.scheme.as_deref().ok_or_else(|| usage("feasibility needs --scheme"))?;
            let s = lead_scheme(&name.parse()?)?;
            let f = extent_feasibility(&s, &FeasibilityOptions::default())?;
            emit(out, &f)?;
            Ok(if f.verdict == Verdict::Unknown {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            })
        }
        ProveKind::ParityAudit => {
            let r = resolve(t)?;
            let (p, b) = two_gens(&r)?;
            let cosets = r.group.order() / b.compose(&p.inverse())?.order() as usize;
            let trace = random_trace(cosets, steps, seed);
            let rep = parity_audit(&r.group, p, b, &trace)?;
            let counts: Vec<usize> = std::iter::once(rep.start_chains)
                .chain(rep.steps.iter().map(|s| s.chains_after))
                .collect();
            let v = json!({
                "verdict": if rep.all_held() { "held" } else { "violated" },
                "group_order": rep.group_order,
                "gamma": rep.gamma,
                "gamma_order": rep.gamma_order,
                "coset_count": rep.coset_count,
                "index_p": rep.index_p,
                "steps": rep.steps.len(),
                "seed": seed,
                "chain_counts": counts,
                "parity_law_held": rep.parity_law_held,
                "label_flip_held": rep.label_flip_held,
                "rotation_identity_held": rep.rotation_identity_held,
                "chain_count_prediction_held": rep.chain_count_prediction_held,
                "single_chain_excluded": rep.single_chain_excluded,
            });
            emit(out, &v)?;
            Ok(if rep.all_held() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

/// Runs a parsed command, writing data to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Gen { method, format } => cmd_gen(method, *format, out),
        Command::Validate { path, ruleset } => cmd_validate(path, *ruleset, out),
        Command::Search {
            kind,
            target,
            budget,
            workers,
        } => cmd_search(*kind, target, *budget, *workers as usize, out),
        Command::Prove {
            kind,
            target,
            steps,
            seed,
        } => cmd_prove(*kind, target, *steps, *seed, out),
    }
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let rendered = e.render();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
