//! JSON documents. Field order is fixed by declaration order, and every
//! document deserializes back to an equal value.

use serde::{Deserialize, Serialize};

use crate::flatness::{FlatnessCertificate, Projectivity};
use crate::harness::{CorpusReport, TheoremReport, Verdict};
use crate::ring::{Elem, Ideal};
use crate::spectrum::{ClosedFamily, PointSet, SpectrumPoset};
use crate::sring::{
    ChainConditionTrace, ChainGraphReport, SringCertificate, StabilizationOutcome,
    StabilizationReport,
};

fn strings(elems: &[Elem]) -> Vec<String> {
    elems.iter().map(Elem::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDoc {
    pub index: usize,
    pub label: String,
    pub minimal: bool,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub ring: String,
    pub points: Vec<PointDoc>,
    /// Strict inclusions `[smaller, larger]`, by label.
    pub order: Vec<[String; 2]>,
    /// Covering inclusions only.
    pub hasse: Vec<[String; 2]>,
}

impl SpectrumDoc {
    pub fn new(spectrum: &SpectrumPoset) -> Self {
        let pair = |(a, b): (usize, usize)| [spectrum.label(a), spectrum.label(b)];
        SpectrumDoc {
            ring: spectrum.ring().to_string(),
            points: spectrum
                .points()
                .iter()
                .enumerate()
                .map(|(index, p)| PointDoc {
                    index,
                    label: p.label(),
                    minimal: p.is_minimal,
                    maximal: p.is_maximal,
                })
                .collect(),
            order: spectrum.strict_pairs().into_iter().map(pair).collect(),
            hasse: spectrum.covering_pairs().into_iter().map(pair).collect(),
        }
    }
}

fn set_doc(spectrum: &SpectrumPoset, set: PointSet) -> Vec<String> {
    spectrum.labels(set)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyDoc {
    pub ring: String,
    pub topology: String,
    pub points: Vec<String>,
    pub subbasis: Vec<Vec<String>>,
    pub closed_sets: Vec<Vec<String>>,
}

impl TopologyDoc {
    pub fn new(spectrum: &SpectrumPoset, subbasis: &[PointSet], family: &ClosedFamily) -> Self {
        TopologyDoc {
            ring: spectrum.ring().to_string(),
            topology: family.topology.to_string(),
            points: spectrum.labels(spectrum.full()),
            subbasis: subbasis.iter().map(|&s| set_doc(spectrum, s)).collect(),
            closed_sets: family.iter().map(|s| set_doc(spectrum, s)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub f: String,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatnessDoc {
    pub ring: String,
    pub ideal: String,
    pub generators: Vec<String>,
    pub flat: bool,
    pub witnesses: Vec<WitnessDoc>,
    pub failing_member: Option<String>,
    pub schema: Option<String>,
    pub projective: bool,
    pub idempotent_generator: Option<String>,
    pub projectivity_reason: String,
    /// `V(I)`, when the spectrum is enumerable.
    pub locus: Option<Vec<String>>,
}

impl FlatnessDoc {
    pub fn new(
        ideal: &Ideal,
        cert: &FlatnessCertificate,
        proj: &Projectivity,
        spectrum: Option<&SpectrumPoset>,
    ) -> Self {
        FlatnessDoc {
            ring: ideal.ring().to_string(),
            ideal: ideal.name(),
            generators: strings(&ideal.generators()),
            flat: cert.verdict,
            witnesses: cert
                .witnesses
                .iter()
                .map(|w| WitnessDoc {
                    f: w.f.to_string(),
                    a: w.a.to_string(),
                    b: w.b.to_string(),
                })
                .collect(),
            failing_member: cert.failing.as_ref().map(Elem::to_string),
            schema: cert.schema.map(str::to_string),
            projective: proj.projective,
            idempotent_generator: proj.generator.as_ref().map(Elem::to_string),
            projectivity_reason: proj.reason.clone(),
            locus: spectrum.map(|s| s.labels(s.vanishing_locus(ideal))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleClosedDoc {
    pub set: Vec<String>,
    pub idempotent: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainGraphDoc {
    pub mode: String,
    pub nodes: usize,
    pub edges: usize,
    pub self_loops: Vec<String>,
    pub cycles: Vec<Vec<String>>,
}

impl ChainGraphDoc {
    pub fn new(mode: &str, report: &ChainGraphReport) -> Self {
        ChainGraphDoc {
            mode: mode.to_string(),
            nodes: report.nodes,
            edges: report.edges,
            self_loops: strings(&report.self_loops),
            cycles: report.cycles.iter().map(|c| strings(c)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationDoc {
    pub checked_prefix_length: usize,
    pub stabilized: bool,
    pub k: Option<usize>,
    pub value: Option<String>,
    pub last_distinct: Option<[String; 2]>,
    pub never_stabilizes: Option<String>,
}

impl StabilizationDoc {
    pub fn new(report: &StabilizationReport) -> Self {
        let (stabilized, k, value, last_distinct) = match &report.outcome {
            StabilizationOutcome::StabilizedAt { k, e } => (true, Some(*k), Some(e.to_string()), None),
            StabilizationOutcome::NotStabilizedWithinBudget { last_distinct, .. } => (
                false,
                None,
                None,
                last_distinct.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
            ),
        };
        StabilizationDoc {
            checked_prefix_length: report.checked_prefix_length,
            stabilized,
            k,
            value,
            last_distinct,
            never_stabilizes: report.never_stabilizes.map(str::to_string),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonExampleDoc {
    pub chain: StabilizationDoc,
    pub flat_not_projective: FlatnessDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SringDoc {
    pub ring: String,
    pub sring: bool,
    pub zariski_failures: Vec<Vec<String>>,
    pub patch_failures: Vec<Vec<String>>,
    pub flat_failures: Vec<Vec<String>>,
    pub double_closed: Vec<DoubleClosedDoc>,
    pub chain_graphs: Vec<ChainGraphDoc>,
    pub non_example: Option<NonExampleDoc>,
}

impl SringDoc {
    pub fn new(spectrum: &SpectrumPoset, cert: &SringCertificate, graphs: Vec<ChainGraphDoc>) -> Self {
        let sets = |v: &[PointSet]| v.iter().map(|&s| set_doc(spectrum, s)).collect();
        SringDoc {
            ring: spectrum.ring().to_string(),
            sring: cert.passes() && graphs.iter().all(|g| g.cycles.is_empty()),
            zariski_failures: sets(&cert.zariski_failures),
            patch_failures: sets(&cert.patch_failures),
            flat_failures: sets(&cert.flat_failures),
            double_closed: cert
                .double_closed
                .iter()
                .map(|(s, e)| DoubleClosedDoc {
                    set: set_doc(spectrum, *s),
                    idempotent: e.as_ref().map(Elem::to_string),
                })
                .collect(),
            chain_graphs: graphs,
            non_example: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Th55Doc {
    pub ring: String,
    pub x: Vec<String>,
    pub hypothesis_holds: bool,
    pub uncovered: Option<String>,
    pub j: Option<String>,
    pub family: Vec<Vec<String>>,
    pub acc: Option<bool>,
    pub dcc: Option<bool>,
    pub pairs_checked: usize,
    pub conclusion_sring: Option<bool>,
}

impl Th55Doc {
    pub fn new(spectrum: &SpectrumPoset, trace: &ChainConditionTrace) -> Self {
        Th55Doc {
            ring: spectrum.ring().to_string(),
            x: spectrum.labels(trace.x),
            hypothesis_holds: true,
            uncovered: None,
            j: Some(trace.j.name()),
            family: trace.family.iter().map(|&s| set_doc(spectrum, s)).collect(),
            acc: Some(trace.acc),
            dcc: Some(trace.dcc),
            pairs_checked: trace.pairs_checked,
            conclusion_sring: Some(trace.conclusion.passes()),
        }
    }

    pub fn violated(spectrum: &SpectrumPoset, x: PointSet, uncovered: String) -> Self {
        Th55Doc {
            ring: spectrum.ring().to_string(),
            x: spectrum.labels(x),
            hypothesis_holds: false,
            uncovered: Some(uncovered),
            j: None,
            family: Vec::new(),
            acc: None,
            dcc: None,
            pairs_checked: 0,
            conclusion_sring: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub name: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub check: String,
    pub subset: Option<Vec<String>>,
    pub subset_bits: Option<u64>,
    pub ideals: Vec<IdealDoc>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReportDoc {
    pub theorem: String,
    pub ring: String,
    pub verdict: String,
    pub reason: Option<String>,
    pub checks: usize,
    pub counterexample: Option<CounterexampleDoc>,
}

impl TheoremReportDoc {
    pub fn new(report: &TheoremReport, spectrum: Option<&SpectrumPoset>) -> Self {
        let reason = match &report.verdict {
            Verdict::Skipped(r) | Verdict::Error(r) => Some(r.clone()),
            _ => None,
        };
        TheoremReportDoc {
            theorem: report.theorem.to_string(),
            ring: report.ring.clone(),
            verdict: report.verdict.name().to_string(),
            reason,
            checks: report.checks,
            counterexample: report.counterexample.as_ref().map(|c| CounterexampleDoc {
                check: c.check.kind().to_string(),
                subset: c.check.subset().and_then(|s| spectrum.map(|sp| sp.labels(s))),
                subset_bits: c.check.subset().map(|s| s.0),
                ideals: c
                    .check
                    .ideals()
                    .into_iter()
                    .map(|i| IdealDoc {
                        name: i.name(),
                        generators: strings(&i.generators()),
                    })
                    .collect(),
                detail: c.detail.clone(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub index: usize,
    pub expr: String,
    pub reports: Vec<TheoremReportDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDoc {
    pub entries: Vec<EntryDoc>,
    pub summary: SummaryDoc,
}

impl CorpusDoc {
    /// Spectra are not re-enumerated here, so subsets in counterexamples are
    /// given by their bit masks only.
    pub fn new(report: &CorpusReport) -> Self {
        CorpusDoc {
            entries: report
                .entries
                .iter()
                .map(|e| EntryDoc {
                    index: e.index,
                    expr: e.expr.clone(),
                    reports: e.reports.iter().map(|r| TheoremReportDoc::new(r, None)).collect(),
                })
                .collect(),
            summary: SummaryDoc {
                passed: report.passed(),
                failed: report.failed(),
                skipped: report.skipped(),
                errors: report.errors(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flatness::{is_cyclic_flat, is_cyclic_projective};
    use crate::ring::Ring;

    fn round_trip<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(v: &T) {
        let text = serde_json::to_string_pretty(v).unwrap();
        assert_eq!(&serde_json::from_str::<T>(&text).unwrap(), v);
    }

    #[test]
    fn z12_spectrum_doc() {
        let s = SpectrumPoset::enumerate(&Ring::modular(12).unwrap()).unwrap();
        let doc = SpectrumDoc::new(&s);
        let labels: Vec<_> = doc.points.iter().map(|p| p.label.as_str()).collect();
        assert_eq!(labels, ["(2)", "(3)"]);
        assert!(doc.order.is_empty());
        assert!(doc.points.iter().all(|p| p.minimal && p.maximal));
        round_trip(&doc);
    }

    #[test]
    fn flatness_doc_round_trips() {
        let r = Ring::modular(4).unwrap();
        let i = r.ideal(&[Elem::Int(2)]).unwrap();
        let doc = FlatnessDoc::new(
            &i,
            &is_cyclic_flat(&r, &i).unwrap(),
            &is_cyclic_projective(&r, &i).unwrap(),
            None,
        );
        assert!(!doc.flat);
        assert_eq!(doc.failing_member.as_deref(), Some("2"));
        round_trip(&doc);
    }
}
