//! Corpus files, batch runs and expectation checks.
//!
//! A corpus is a JSON array of entries, each naming its group in one of
//! three ways:
//!
//! ```json
//! [
//!   {"name": "S4 on 4 points", "degree": 4, "generators": ["(1 2 3 4)", "(1 2)"]},
//!   {"name": "A4", "builtin": "A4"},
//!   {"name": "F2^2:C3", "affine": {"p": 2, "k": 2, "matrices": [[[0, 1], [1, 1]]]},
//!    "expect": {"order": 12, "is_EU": true, "D_order": 4}}
//! ]
//! ```

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::builders::{build, lookup, GroupSpec, Matrix};
use crate::error::GroupError;
use crate::lattice::{SubgroupLattice, LATTICE_CAP};
use crate::lemmas::{lemma_checks, LemmaConfig, LemmaResult};
use crate::theorems::{Analysis, TheoremReport};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("corpus line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("corpus line {line}: entry {name:?}: {reason}")]
    Entry {
        line: usize,
        name: String,
        reason: String,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, rename = "is_EU", skip_serializing_if = "Option::is_none")]
    pub is_eu: Option<bool>,
    #[serde(default, rename = "D_order", skip_serializing_if = "Option::is_none")]
    pub d_order: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
struct AffineRaw {
    p: u64,
    k: usize,
    matrices: Vec<Matrix>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    degree: Option<usize>,
    generators: Option<Vec<String>>,
    builtin: Option<String>,
    affine: Option<AffineRaw>,
    #[serde(default)]
    expect: Expectations,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub expect: Expectations,
}

/// Line of the first `"name": "<name>"` occurrence, for error messages.
fn line_of_name(text: &str, name: &str) -> usize {
    let needle = serde_json::to_string(name).unwrap_or_default();
    text.lines()
        .position(|line| line.contains("\"name\"") && line.contains(&needle))
        .map_or(0, |i| i + 1)
}

fn entry_spec(raw: &RawEntry) -> Result<GroupSpec, String> {
    let sources = [
        raw.generators.is_some() || raw.degree.is_some(),
        raw.builtin.is_some(),
        raw.affine.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err("exactly one of degree+generators, builtin or affine is required".into());
    }
    if let Some(b) = &raw.builtin {
        let mut spec = lookup(b).map_err(|e| e.to_string())?;
        spec.name = raw.name.clone();
        return Ok(spec);
    }
    if let Some(a) = &raw.affine {
        return Ok(GroupSpec::affine(
            raw.name.clone(),
            a.p,
            a.k,
            a.matrices.clone(),
        ));
    }
    match (raw.degree, &raw.generators) {
        (Some(d), Some(gens)) => {
            let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
            Ok(GroupSpec::explicit(raw.name.clone(), d, &gens))
        }
        _ => Err("explicit entries need both degree and generators".into()),
    }
}

/// Parses a corpus; entries come back sorted by name.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let raws: Vec<RawEntry> = serde_json::from_str(text).map_err(|e| CorpusError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut entries = Vec::with_capacity(raws.len());
    for raw in &raws {
        let fail = |reason: String| CorpusError::Entry {
            line: line_of_name(text, &raw.name),
            name: raw.name.clone(),
            reason,
        };
        let spec = entry_spec(raw).map_err(fail)?;
        // Malformed generators and singular matrices are input errors,
        // caught here rather than mid-run.
        if let Err(e) = build(&spec) {
            if !e.is_cap() {
                return Err(fail(e.to_string()));
            }
        }
        entries.push(CorpusEntry {
            name: raw.name.clone(),
            spec,
            expect: raw.expect.clone(),
        });
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    if let Some(w) = entries.windows(2).find(|w| w[0].name == w[1].name) {
        return Err(CorpusError::Entry {
            line: line_of_name(text, &w[1].name),
            name: w[1].name.clone(),
            reason: "duplicate entry name".into(),
        });
    }
    Ok(entries)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>, CorpusError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_corpus(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub cap_order: usize,
    /// Worker threads; 0 lets the pool choose.
    pub jobs: usize,
    pub lemmas: bool,
    pub lemma_config: LemmaConfig,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            cap_order: LATTICE_CAP,
            jobs: 0,
            lemmas: false,
            lemma_config: LemmaConfig::default(),
        }
    }
}

/// An entry that could not be analysed under the caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunResult {
    pub reports: Vec<TheoremReport>,
    pub lemmas: Vec<LemmaResult>,
    pub skipped: Vec<Skipped>,
}

impl RunResult {
    pub fn violations(&self) -> usize {
        self.reports.iter().filter(|r| r.has_violation()).count()
    }

    pub fn mismatches(&self) -> usize {
        self.reports.iter().map(|r| r.mismatches.len()).sum()
    }

    pub fn lemma_failures(&self) -> usize {
        self.lemmas.iter().filter(|r| !r.pass()).count()
    }

    /// Report JSON: the theorem reports as an array, in name order.
    pub fn report_json(&self) -> String {
        serde_json::to_string_pretty(&self.reports).expect("reports serialize")
    }

    pub fn lemma_json(&self) -> String {
        serde_json::to_string_pretty(&self.lemmas).expect("lemma results serialize")
    }
}

fn expectation_mismatches(e: &Expectations, r: &TheoremReport) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(o) = e.order {
        if o != r.order {
            out.push(format!("expected order {o}, found {}", r.order));
        }
    }
    if let Some(d) = e.d_order {
        if d != r.d_order {
            out.push(format!("expected D_order {d}, found {}", r.d_order));
        }
    }
    if let Some(eu) = e.is_eu {
        let found = r.brute_eu.applicable && r.brute_eu.holds;
        if eu != found {
            out.push(format!("expected is_EU {eu}, found {found}"));
        }
    }
    out
}

enum EntryOutcome {
    Done(Box<TheoremReport>, Vec<LemmaResult>),
    Skipped(Skipped),
}

fn run_entry(entry: &CorpusEntry, opts: &RunOptions) -> EntryOutcome {
    let skip = |e: GroupError| {
        EntryOutcome::Skipped(Skipped {
            name: entry.name.clone(),
            reason: e.to_string(),
        })
    };
    let group = match build(&entry.spec) {
        Ok(g) => g,
        Err(e) => return skip(e),
    };
    let lattice = match SubgroupLattice::with_cap(&group, opts.cap_order) {
        Ok(l) => l,
        Err(e) => return skip(e),
    };
    let analysis = Analysis::new(&lattice);
    let mut report = analysis.report(&entry.name);
    report.mismatches = expectation_mismatches(&entry.expect, &report);
    let lemmas = if opts.lemmas {
        lemma_checks(&entry.name, &analysis, &opts.lemma_config)
    } else {
        Vec::new()
    };
    EntryOutcome::Done(Box::new(report), lemmas)
}

/// Analyses every entry; output order follows entry names regardless of
/// scheduling.
pub fn run_entries(entries: &[CorpusEntry], opts: &RunOptions) -> RunResult {
    let work = || -> Vec<EntryOutcome> { entries.par_iter().map(|e| run_entry(e, opts)).collect() };
    let outcomes = if opts.jobs > 0 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
        {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        }
    } else {
        work()
    };
    let mut result = RunResult::default();
    for o in outcomes {
        match o {
            EntryOutcome::Done(r, lemmas) => {
                result.reports.push(*r);
                result.lemmas.extend(lemmas);
            }
            EntryOutcome::Skipped(s) => result.skipped.push(s),
        }
    }
    result.reports.sort_by(|a, b| a.name.cmp(&b.name));
    result.skipped.sort_by(|a, b| a.name.cmp(&b.name));
    result
        .lemmas
        .sort_by(|a, b| (&a.group, &a.lemma).cmp(&(&b.group, &b.lemma)));
    result
}

pub fn run(path: impl AsRef<Path>, opts: &RunOptions) -> Result<RunResult, CorpusError> {
    Ok(run_entries(&load_corpus(path)?, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_corpus() {
        let entries = parse_corpus("[]").unwrap();
        let r = run_entries(&entries, &RunOptions::default());
        assert!(r.reports.is_empty());
        assert_eq!(r.report_json(), "[]");
    }

    #[test]
    fn three_entry_forms() {
        let text = r#"[
  {"name": "s4", "degree": 4, "generators": ["(1 2 3 4)", "(1 2)"]},
  {"name": "a4", "builtin": "A4"},
  {"name": "ex", "affine": {"p": 2, "k": 2, "matrices": [[[0, 1], [1, 1]]]},
   "expect": {"order": 12, "is_EU": true, "D_order": 4}}
]"#;
        let entries = parse_corpus(text).unwrap();
        let names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["a4", "ex", "s4"]);
        let r = run_entries(&entries, &RunOptions::default());
        assert_eq!(r.reports.len(), 3);
        assert_eq!(r.mismatches(), 0);
        assert_eq!(r.violations(), 0);
    }

    #[test]
    fn wrong_expected_order_is_recorded() {
        let text = r#"[{"name": "a4", "builtin": "A4", "expect": {"order": 13}}]"#;
        let r = run_entries(&parse_corpus(text).unwrap(), &RunOptions::default());
        assert_eq!(r.mismatches(), 1);
        assert!(r.reports[0].mismatches[0].contains("13"));
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_corpus("[\n  {\"name\": \"x\",\n  ]").unwrap_err();
        assert!(matches!(err, CorpusError::Syntax { line: 3, .. }), "{err}");
        let err =
            parse_corpus("[\n{\"name\": \"bad\", \"degree\": 3, \"generators\": [\"(1 4)\"]}\n]")
                .unwrap_err();
        assert!(matches!(err, CorpusError::Entry { line: 2, .. }), "{err}");
        let err = parse_corpus(r#"[{"name": "both", "builtin": "A4", "degree": 3}]"#).unwrap_err();
        assert!(matches!(err, CorpusError::Entry { .. }));
    }

    #[test]
    fn cap_skips_entry() {
        let text = r#"[{"name": "s5", "builtin": "S5"}]"#;
        let opts = RunOptions {
            cap_order: 60,
            ..RunOptions::default()
        };
        let r = run_entries(&parse_corpus(text).unwrap(), &opts);
        assert!(r.reports.is_empty());
        assert_eq!(r.skipped.len(), 1);
    }
}
