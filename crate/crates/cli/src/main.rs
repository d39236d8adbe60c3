//! `hodeg`: Alexander-type invariants of line arrangement and curve complements.
//!
//! Exit codes: 0 success, 1 selftest failure, 2 parse error, 3 geometric or
//! algebraic inconsistency of the input, 4 internal invariant violation
//! (including disagreement of the two δ₀ routes).

mod report;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use hodeg_core::alexinv::Route;
use hodeg_core::arrangements::{family_presentation, parse_arrangement, wiring_presentation, ArrangementInput, Family};
use hodeg_core::groups::parse_presentation;
use hodeg_core::selftest::{bundled_corpus, run, Case};

use report::{analyze_lines, arrangement_failure, combinatorics, curve_bounds, family_input, InputInfo, Report};

#[derive(Parser)]
#[command(name = "hodeg", version, about = "Alexander polynomials and higher-order degrees of curve complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an arrangement, bound its degrees and compute its invariants.
    Analyze {
        /// Arrangement file (`line:` records or one `curve:` record).
        path: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
    },
    /// Invariants of a group presentation file.
    Invariants {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
    },
    /// Combinatorial bounds only.
    Bounds {
        path: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Print the presentation of a family, or of the sweep of an arrangement.
    Presentation {
        path: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        /// Sweep the family's concrete lines instead of using its standard presentation.
        #[arg(long)]
        wiring: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run the regression corpus.
    Selftest {
        /// Only cases in this group, with this name, or named `<filter>-...`.
        #[arg(long)]
        filter: Option<String>,
        /// TOML file of `[[case]]` tables to run instead of the bundled corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Machine-readable output. Reports are always JSON; this switches
    /// `presentation` and `selftest` to JSON too.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// pencil, near-pencil, parallel or generic.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum RouteArg {
    Degree,
    Pid,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Degree => Route::Degree,
            RouteArg::Pid => Route::Pid,
            RouteArg::Both => Route::Both,
        }
    }
}

/// An error with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl Failure {
    pub fn new(code: u8, err: impl Into<anyhow::Error>) -> Self {
        Failure { code, err: err.into() }
    }

    fn parse(err: impl Into<anyhow::Error>) -> Self {
        Self::new(2, err)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.err)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(Failure::parse)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())).map_err(|e| Failure::new(1, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn parse_family(args: &FamilyArgs) -> Result<Option<(Family, Option<usize>)>, Failure> {
    match &args.family {
        None if args.m.is_some() => Err(Failure::parse(anyhow::anyhow!("--m needs --family"))),
        None => Ok(None),
        Some(name) => {
            let f: Family = name.parse().map_err(arrangement_failure)?;
            Ok(Some((f, args.m)))
        }
    }
}

fn need_m(m: Option<usize>) -> Result<usize, Failure> {
    m.ok_or_else(|| Failure::parse(anyhow::anyhow!("--family needs --m")))
}

/// The arrangement behind `analyze` and `bounds`: a file, or a family's lines.
enum Target {
    Lines(InputInfo, Vec<hodeg_core::arrangements::Line>),
    Curve(InputInfo, hodeg_core::arrangements::CurveInput),
}

fn target(path: Option<&Path>, family: Option<(Family, Option<usize>)>) -> Result<Target, Failure> {
    match path {
        Some(p) => {
            let path_str = Some(p.display().to_string());
            match parse_arrangement(&read(p)?).map_err(arrangement_failure)? {
                ArrangementInput::Lines(lines) => {
                    if let Some((_, Some(m))) = family {
                        if m != lines.len() {
                            return Err(Failure::parse(anyhow::anyhow!("--m {m} but the file has {} lines", lines.len())));
                        }
                    }
                    let info = InputInfo {
                        kind: "arrangement".into(),
                        path: path_str,
                        family: family.map(|f| f.0),
                        lines: Some(lines.len()),
                        ..InputInfo::default()
                    };
                    Ok(Target::Lines(info, lines))
                }
                ArrangementInput::Curve(c) => {
                    Ok(Target::Curve(InputInfo { kind: "curve".into(), path: path_str, ..InputInfo::default() }, c))
                }
            }
        }
        None => {
            let (f, m) = family.ok_or_else(|| Failure::parse(anyhow::anyhow!("give an arrangement file or --family and --m")))?;
            let (info, lines) = family_input(f, need_m(m)?)?;
            Ok(Target::Lines(info, lines))
        }
    }
}

fn finish_report(report: &Report, common: &Common) -> Result<u8, Failure> {
    emit(&to_json(report), common.out.as_deref())?;
    if report.routes_disagree() {
        eprintln!("error: the two delta_0 routes disagree");
        return Ok(4);
    }
    Ok(0)
}

fn load_corpus(path: &Path) -> Result<Vec<Case>, Failure> {
    #[derive(Deserialize)]
    struct File {
        #[serde(default)]
        case: Vec<Case>,
    }
    let text = read(path)?;
    let f: File = toml::from_str(&text).with_context(|| format!("malformed corpus {}", path.display())).map_err(Failure::parse)?;
    Ok(f.case)
}

fn run_cli(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { path, family, common, route } => {
            let fam = parse_family(&family)?;
            let report = match target(path.as_deref(), fam)? {
                Target::Lines(info, lines) => {
                    // A named family uses its standard presentation rather than the sweep.
                    analyze_lines(Report::new(info), &lines, fam.map(|f| f.0), route.into())?
                }
                Target::Curve(info, c) => {
                    let mut r = Report::new(info);
                    curve_bounds(&mut r, c)?;
                    r
                }
            };
            finish_report(&report, &common)
        }
        Command::Invariants { path, common, route } => {
            let p = parse_presentation(&read(&path)?).map_err(Failure::parse)?;
            let info = InputInfo {
                kind: "presentation".into(),
                path: Some(path.display().to_string()),
                presentation: Some("file".into()),
                ..InputInfo::default()
            };
            let mut report = Report::new(info);
            report.add_invariants(&p, route.into())?;
            finish_report(&report, &common)
        }
        Command::Bounds { path, family, common } => {
            let fam = parse_family(&family)?;
            let report = match target(path.as_deref(), fam)? {
                Target::Lines(info, lines) => {
                    let mut r = Report::new(info);
                    combinatorics(&mut r, &lines)?;
                    r
                }
                Target::Curve(info, c) => {
                    let mut r = Report::new(info);
                    curve_bounds(&mut r, c)?;
                    r
                }
            };
            finish_report(&report, &common)
        }
        Command::Presentation { path, family, wiring, common } => {
            let fam = parse_family(&family)?;
            let p = match (path, fam) {
                (Some(_), Some(_)) => return Err(Failure::parse(anyhow::anyhow!("give a file or --family, not both"))),
                (Some(path), None) => match parse_arrangement(&read(&path)?).map_err(arrangement_failure)? {
                    ArrangementInput::Lines(lines) => wiring_presentation(&lines).map_err(arrangement_failure)?.presentation,
                    ArrangementInput::Curve(_) => {
                        return Err(Failure::new(3, anyhow::anyhow!("a curve record carries no presentation")))
                    }
                },
                (None, Some((f, m))) if wiring => {
                    let (_, lines) = family_input(f, need_m(m)?)?;
                    wiring_presentation(&lines).map_err(arrangement_failure)?.presentation
                }
                (None, Some((f, m))) => family_presentation(f, need_m(m)?).map_err(arrangement_failure)?,
                (None, None) => return Err(Failure::parse(anyhow::anyhow!("give an arrangement file or --family and --m"))),
            };
            let text = p.to_string();
            let text = if common.json { to_json(&serde_json::json!({ "schema": report::SCHEMA, "presentation": text })) } else { text };
            emit(&text, common.out.as_deref())?;
            Ok(0)
        }
        Command::Selftest { filter, corpus, common } => {
            let cases = match corpus {
                Some(p) => load_corpus(&p)?,
                None => bundled_corpus(),
            };
            let summary = run(&cases, filter.as_deref());
            let text = if common.json {
                to_json(&summary)
            } else {
                let mut s = String::new();
                for r in &summary.results {
                    if r.passed {
                        s.push_str(&format!("PASS {} ({} ms)\n", r.name, r.millis));
                    } else {
                        s.push_str(&format!("FAIL {}: {}\n", r.name, r.failures.join("; ")));
                    }
                }
                s.push_str(&format!("{} passed, {} failed\n", summary.passed(), summary.failed()));
                s
            };
            emit(&text, common.out.as_deref())?;
            if summary.results.is_empty() {
                eprintln!("warning: no case matched");
            }
            Ok(if summary.ok() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_cli(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
