//! Golden-file reproduction: committed case files are replayed and their
//! reports byte-compared against committed golden reports.
//!
//! A case file bundles one command's inputs with the published figures the
//! output mirrors and annotations for any figure the exact algebra
//! contradicts. Golden reports therefore always carry the computed value as
//! truth, with the published figure beside it in the `[published]` section.
//! Everything lives under one directory (default: the crate's `repro/`):
//! `cases/<id>.toml` in, `golden/<id>.toml` to compare against.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use qckit::WeightKind;

use crate::commands;
use crate::config::{load_toml, parse_kind, parse_weight, CaseFile, CliError};
use crate::report::Report;

/// Options for one repro invocation.
pub struct ReproOptions {
    /// Directory holding `cases/` and `golden/`.
    pub dir: PathBuf,
    /// Case ids to run; empty means all.
    pub cases: Vec<String>,
    /// Rewrite the golden files instead of comparing.
    pub bless: bool,
    /// Only list the case ids.
    pub list: bool,
}

/// What a repro run produced: the deterministic stdout text and one
/// stderr-bound message per mismatching case.
pub struct ReproOutcome {
    pub stdout: String,
    pub failures: Vec<String>,
}

/// The committed repro directory of this crate.
pub fn default_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/repro"))
}

fn case_paths(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let cases_dir = dir.join("cases");
    let entries = std::fs::read_dir(&cases_dir)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", cases_dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|ext| ext == "toml").unwrap_or(false))
        .collect();
    paths.sort();
    Ok(paths)
}

/// Build the report for one case by dispatching to its command.
pub fn case_report(case: &CaseFile) -> Result<Report, CliError> {
    let kind = case.kind.as_deref().map(parse_kind).transpose()?;
    let need_kind = |kind: Option<qckit::InnerProduct>| {
        kind.ok_or_else(|| {
            CliError::Config(format!("case {}: command {} needs kind", case.id, case.command))
        })
    };
    let need_desc = || {
        case.description.as_ref().ok_or_else(|| {
            CliError::Config(format!("case {}: missing [description]", case.id))
        })
    };
    let mut report = match case.command.as_str() {
        "check" => commands::check_report(need_desc()?, kind)?,
        "dual" => commands::dual_report(need_desc()?, need_kind(kind)?)?,
        "distance" => {
            let weight = match case.weight.as_deref() {
                Some(w) => parse_weight(w)?,
                None => WeightKind::Hamming,
            };
            commands::distance_report(need_desc()?, weight, case.budget)?
        }
        "stabilizer" => commands::stabilizer_report(need_desc()?, need_kind(kind)?, case.budget)?,
        "sync" => {
            let sync = case.sync.as_ref().ok_or_else(|| {
                CliError::Config(format!("case {}: missing [sync]", case.id))
            })?;
            commands::sync_report(sync, case.budget)?
        }
        "search" => {
            let search = case.search.as_ref().ok_or_else(|| {
                CliError::Config(format!("case {}: missing [search]", case.id))
            })?;
            commands::search_report(search, None)?
        }
        other => {
            return Err(CliError::Config(format!(
                "case {}: unknown command {other:?}",
                case.id
            )))
        }
    };
    for (key, value) in &case.published {
        report.push("published", key, value.clone());
    }
    for (key, value) in &case.annotations {
        report.push("annotations", key, value.clone());
    }
    Ok(report)
}

/// Human-readable first point of divergence between two reports.
fn describe_diff(expected: &str, actual: &str) -> String {
    let mut out = String::new();
    let expected_lines: Vec<&str> = expected.lines().collect();
    let actual_lines: Vec<&str> = actual.lines().collect();
    let common = expected_lines.len().min(actual_lines.len());
    let mut differing = 0usize;
    let mut first: Option<usize> = None;
    for i in 0..common {
        if expected_lines[i] != actual_lines[i] {
            differing += 1;
            first.get_or_insert(i);
        }
    }
    differing += expected_lines.len().max(actual_lines.len()) - common;
    if first.is_none() && expected_lines.len() != actual_lines.len() {
        first = Some(common);
    }
    if let Some(i) = first {
        let _ = writeln!(out, "  {differing} differing line(s); first at line {}:", i + 1);
        let _ = writeln!(out, "  - {}", expected_lines.get(i).unwrap_or(&"<end of report>"));
        let _ = writeln!(out, "  + {}", actual_lines.get(i).unwrap_or(&"<end of report>"));
    }
    out
}

/// Run the selected cases: list, bless, or compare against goldens.
pub fn run(opts: &ReproOptions) -> Result<ReproOutcome, CliError> {
    let paths = case_paths(&opts.dir)?;
    let mut stdout = String::new();
    let mut failures = Vec::new();
    let mut seen_ids = Vec::new();
    let mut ran = 0usize;

    if opts.bless {
        let golden_dir = opts.dir.join("golden");
        std::fs::create_dir_all(&golden_dir)
            .map_err(|e| CliError::Config(format!("cannot create {}: {e}", golden_dir.display())))?;
    }

    for path in &paths {
        let case: CaseFile = load_toml(path)?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_default();
        if stem != case.id {
            return Err(CliError::Config(format!(
                "case file {} declares id {:?}; the file name and id must agree",
                path.display(),
                case.id
            )));
        }
        seen_ids.push(case.id.clone());
        if opts.list {
            let _ = writeln!(stdout, "{}", case.id);
            continue;
        }
        if !opts.cases.is_empty() && !opts.cases.contains(&case.id) {
            continue;
        }
        ran += 1;
        let text = case_report(&case)?.render();
        let _ = writeln!(stdout, "# case {}", case.id);
        stdout.push_str(&text);
        stdout.push('\n');
        let golden_path = opts.dir.join("golden").join(format!("{}.toml", case.id));
        if opts.bless {
            std::fs::write(&golden_path, &text).map_err(|e| {
                CliError::Config(format!("cannot write {}: {e}", golden_path.display()))
            })?;
            continue;
        }
        match std::fs::read_to_string(&golden_path) {
            Ok(golden) => {
                if golden != text {
                    failures.push(format!(
                        "case {}: report differs from {}\n{}",
                        case.id,
                        golden_path.display(),
                        describe_diff(&golden, &text)
                    ));
                }
            }
            Err(_) => failures.push(format!(
                "case {}: no golden report at {} (run repro --bless)",
                case.id,
                golden_path.display()
            )),
        }
    }

    if opts.list {
        return Ok(ReproOutcome { stdout, failures });
    }
    for wanted in &opts.cases {
        if !seen_ids.contains(wanted) {
            return Err(CliError::Config(format!("no case named {wanted:?}")));
        }
    }
    let verb = if opts.bless { "blessed" } else { "checked" };
    let _ = writeln!(stdout, "repro: {ran} case(s) {verb}, {} mismatch(es)", failures.len());
    Ok(ReproOutcome { stdout, failures })
}
