//! Corpus files: a TOML list of ring descriptions with optional expected facts.
//!
//! ```toml
//! [[ring]]
//! expr = "Z/12"
//! spectrum_size = 2
//! flat_ideals = 4
//! reduced = false
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{run_checks, verify_with, Check, Context, Fact, TheoremId, TheoremReport, Verdict};
use crate::dsl::{ring_from_str, DslError};

pub const DEFAULT_CORPUS: &str = include_str!("../../corpus/default.toml");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub expr: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flat_ideals: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced: Option<bool>,
}

impl CorpusEntry {
    pub fn new(expr: &str) -> Self {
        CorpusEntry {
            expr: expr.to_string(),
            spectrum_size: None,
            flat_ideals: None,
            reduced: None,
        }
    }

    fn fact_checks(&self) -> Vec<Check> {
        [
            (Fact::SpectrumSize, self.spectrum_size.map(|v| v.to_string())),
            (Fact::FlatIdeals, self.flat_ideals.map(|v| v.to_string())),
            (Fact::Reduced, self.reduced.map(|v| v.to_string())),
        ]
        .into_iter()
        .filter_map(|(fact, expected)| expected.map(|expected| Check::Fact { fact, expected }))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("corpus file: {0}")]
    Toml(String),
    #[error("entry {index} (`{expr}`): {source}")]
    Parse {
        index: usize,
        expr: String,
        #[source]
        source: DslError,
    },
}

#[derive(Deserialize)]
struct CorpusFile {
    #[serde(default)]
    ring: Vec<CorpusEntry>,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let file: CorpusFile = toml::from_str(text).map_err(|e| CorpusError::Toml(e.to_string()))?;
    Ok(file.ring)
}

pub fn default_corpus() -> Vec<CorpusEntry> {
    parse_corpus(DEFAULT_CORPUS).expect("bundled corpus parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub index: usize,
    pub expr: String,
    pub reports: Vec<TheoremReport>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusReport {
    pub entries: Vec<EntryReport>,
}

impl CorpusReport {
    fn count(&self, pred: impl Fn(&Verdict) -> bool) -> usize {
        self.entries
            .iter()
            .flat_map(|e| &e.reports)
            .filter(|r| pred(&r.verdict))
            .count()
    }

    pub fn passed(&self) -> usize {
        self.count(|v| *v == Verdict::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(|v| *v == Verdict::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(|v| matches!(v, Verdict::Skipped(_)))
    }

    pub fn errors(&self) -> usize {
        self.count(|v| matches!(v, Verdict::Error(_)))
    }
}

/// Parse every entry, then verify them in parallel. Entries come back in
/// corpus order, each with its reports in theorem order.
pub fn run_corpus(entries: &[CorpusEntry]) -> Result<CorpusReport, CorpusError> {
    let rings = entries
        .iter()
        .enumerate()
        .map(|(index, entry)| {
            ring_from_str(&entry.expr).map_err(|source| CorpusError::Parse {
                index,
                expr: entry.expr.clone(),
                source,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut reports: Vec<EntryReport> = entries
        .par_iter()
        .zip(rings.par_iter())
        .enumerate()
        .map(|(index, (entry, ring))| {
            let ctx = Context::new(ring);
            let mut reports: Vec<TheoremReport> =
                TheoremId::ALL.iter().map(|&t| verify_with(t, &ctx)).collect();
            let facts = entry.fact_checks();
            if !facts.is_empty() {
                reports.push(run_checks(TheoremId::Facts, &ctx, facts));
            }
            EntryReport {
                index,
                expr: entry.expr.clone(),
                reports,
            }
        })
        .collect();
    reports.sort_by_key(|e| e.index);
    Ok(CorpusReport { entries: reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_passes() {
        let report = run_corpus(&default_corpus()).unwrap();
        assert_eq!(report.entries.len(), 8);
        assert_eq!(report.failed(), 0, "{report:#?}");
        assert_eq!(report.errors(), 0, "{report:#?}");
    }

    #[test]
    fn empty_corpus() {
        assert_eq!(run_corpus(&parse_corpus("").unwrap()).unwrap(), CorpusReport::default());
    }

    #[test]
    fn wrong_expected_size_fails() {
        let mut entry = CorpusEntry::new("Z/12");
        entry.spectrum_size = Some(3);
        let report = run_corpus(&[entry]).unwrap();
        let facts = report.entries[0].reports.last().unwrap();
        assert_eq!(facts.theorem, TheoremId::Facts);
        assert_eq!(facts.verdict, Verdict::Fail);
        assert!(facts.counterexample.as_ref().unwrap().detail.contains("computed 2"));
    }

    #[test]
    fn parse_errors_carry_entry_index() {
        let entries = parse_corpus("[[ring]]\nexpr = \"Z/4\"\n[[ring]]\nexpr = \"GF(6)\"\n").unwrap();
        match run_corpus(&entries) {
            Err(CorpusError::Parse { index: 1, source, .. }) => assert_eq!(source.position(), 3),
            other => panic!("{other:?}"),
        }
    }
}
