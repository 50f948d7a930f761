//! Command-line front end. Results go to `out` as JSON (DOT for
//! `export-dot`); diagnostics go to `err`.
//!
//! Exit status: 0 success, 1 a verification failed, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dsl::{parse_ideal, ring_from_str};
use crate::export::json::{
    ChainGraphDoc, CorpusDoc, FlatnessDoc, NonExampleDoc, SpectrumDoc, SringDoc, StabilizationDoc,
    Th55Doc, TheoremReportDoc, TopologyDoc,
};
use crate::export::export_dot;
use crate::flatness::{is_cyclic_flat, is_cyclic_projective};
use crate::harness::corpus::{default_corpus, parse_corpus};
use crate::harness::{run_corpus, verify_with, Context, TheoremId, Verdict, NON_EXAMPLE_BUDGET};
use crate::ring::Ring;
use crate::spectrum::{PointSet, SpectrumPoset, Topology};
use crate::sring::{
    boolean_chain, chain_graph_check, check_chain_stabilization, sring_certificate, th55_check,
    ChainMode, SringError, GRAPH_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "spectra", version, about = "Prime spectra and flatness checks for small commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Prime ideals and their inclusion order.
    Spec {
        #[arg(long)]
        ring: String,
    },
    /// Closed sets of one topology on the spectrum.
    Topology {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum)]
        which: TopologyArg,
    },
    /// Flatness and projectivity of R/I.
    Flat {
        #[arg(long)]
        ring: String,
        /// Comma-separated generators.
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// S-ring certificate.
    Sring {
        #[arg(long)]
        ring: String,
    },
    /// Chain conditions on X ∩ V(f) for X the minimal primes, the maximal
    /// ideals, or a listed set of points.
    Th55 {
        #[arg(long)]
        ring: String,
        #[arg(long = "X", alias = "x", value_enum)]
        x: XArg,
        /// Point indices for `--X custom`, comma-separated.
        #[arg(long, value_delimiter = ',')]
        points: Vec<usize>,
    },
    /// Run one verifier or all of them on a ring.
    Verify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Run every verifier on each ring of a corpus file (the bundled corpus
    /// when no file is given).
    Corpus { file: Option<PathBuf> },
    /// Hasse diagram of the spectrum in DOT.
    ExportDot {
        #[arg(long)]
        ring: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TopologyArg {
    Zariski,
    Flat,
    Patch,
}

impl From<TopologyArg> for Topology {
    fn from(t: TopologyArg) -> Topology {
        match t {
            TopologyArg::Zariski => Topology::Zariski,
            TopologyArg::Flat => Topology::Flat,
            TopologyArg::Patch => Topology::Patch,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum XArg {
    Min,
    Max,
    Custom,
}

/// An input problem, reported with exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Output {
    text: String,
    status: i32,
}

fn json<T: Serialize>(doc: &T, status: i32) -> Output {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    Output { text, status }
}

fn ring_arg(text: &str) -> Result<Ring, UsageError> {
    ring_from_str(text).map_err(|e| UsageError(format!("--ring {text:?}: {e}")))
}

fn spectrum_of(ring: &Ring) -> Result<SpectrumPoset, UsageError> {
    Ok(SpectrumPoset::enumerate(ring)?)
}

fn sring_doc(ring: &Ring) -> Result<SringDoc, UsageError> {
    if ring.is_boolean_sequences() {
        let chain = boolean_chain(NON_EXAMPLE_BUDGET)?;
        let fin = ring.finitely_supported_ideal()?;
        return Ok(SringDoc {
            ring: ring.to_string(),
            sring: false,
            zariski_failures: Vec::new(),
            patch_failures: Vec::new(),
            flat_failures: Vec::new(),
            double_closed: Vec::new(),
            chain_graphs: Vec::new(),
            non_example: Some(NonExampleDoc {
                chain: StabilizationDoc::new(&check_chain_stabilization(&chain)),
                flat_not_projective: FlatnessDoc::new(
                    &fin,
                    &is_cyclic_flat(ring, &fin)?,
                    &is_cyclic_projective(ring, &fin)?,
                    None,
                ),
            }),
        });
    }
    let spectrum = spectrum_of(ring)?;
    let cert = sring_certificate(&spectrum)?;
    let mut graphs = Vec::new();
    if ring.order().is_some_and(|n| n as usize <= GRAPH_LIMIT) {
        for (name, mode) in [("ascending", ChainMode::Ascending), ("descending", ChainMode::Descending)] {
            graphs.push(ChainGraphDoc::new(name, &chain_graph_check(ring, mode)?));
        }
    }
    Ok(SringDoc::new(&spectrum, &cert, graphs))
}

fn execute(command: Command) -> Result<Output, UsageError> {
    match command {
        Command::Spec { ring } => {
            let spectrum = spectrum_of(&ring_arg(&ring)?)?;
            Ok(json(&SpectrumDoc::new(&spectrum), EXIT_OK))
        }
        Command::Topology { ring, which } => {
            let spectrum = spectrum_of(&ring_arg(&ring)?)?;
            let topology = Topology::from(which);
            let family = spectrum.closed_family(topology)?;
            let subbasis = spectrum.subbasis(topology)?;
            Ok(json(&TopologyDoc::new(&spectrum, &subbasis, &family), EXIT_OK))
        }
        Command::Flat { ring, ideal } => {
            let ring = ring_arg(&ring)?;
            let ideal = parse_ideal(&ring, &ideal).map_err(|e| UsageError(format!("--ideal: {e}")))?;
            let cert = is_cyclic_flat(&ring, &ideal)?;
            let proj = is_cyclic_projective(&ring, &ideal)?;
            let spectrum = SpectrumPoset::enumerate(&ring).ok();
            Ok(json(&FlatnessDoc::new(&ideal, &cert, &proj, spectrum.as_ref()), EXIT_OK))
        }
        Command::Sring { ring } => {
            let ring = ring_arg(&ring)?;
            let doc = sring_doc(&ring)?;
            // Only the Boolean ring is expected to fail; anything else failing
            // contradicts the finiteness results.
            let status = if doc.sring || ring.is_boolean_sequences() { EXIT_OK } else { EXIT_FAILURE };
            Ok(json(&doc, status))
        }
        Command::Th55 { ring, x, points } => {
            let spectrum = spectrum_of(&ring_arg(&ring)?)?;
            let set = match x {
                XArg::Min => spectrum.minimal(),
                XArg::Max => spectrum.maximal(),
                XArg::Custom => {
                    if let Some(&bad) = points.iter().find(|&&i| i >= spectrum.len()) {
                        return Err(UsageError(format!(
                            "--points: no point {bad}; the spectrum has {} points",
                            spectrum.len()
                        )));
                    }
                    points.iter().copied().collect::<PointSet>()
                }
            };
            match th55_check(&spectrum, set) {
                Ok(trace) => {
                    let status = if trace.passes() { EXIT_OK } else { EXIT_FAILURE };
                    Ok(json(&Th55Doc::new(&spectrum, &trace), status))
                }
                // A set missing a maximal ideal is a property of the input,
                // not a failed verification.
                Err(SringError::HypothesisViolated { uncovered }) => {
                    Ok(json(&Th55Doc::violated(&spectrum, set, uncovered), EXIT_OK))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { ring, theorem } => {
            let ring = ring_arg(&ring)?;
            let theorems = match theorem {
                Some(id) => vec![TheoremId::parse(&id)?],
                None => TheoremId::ALL.to_vec(),
            };
            let ctx = Context::new(&ring);
            let spectrum = ctx.spectrum().ok();
            let reports: Vec<_> = theorems.into_iter().map(|t| verify_with(t, &ctx)).collect();
            let status = status_of(reports.iter().map(|r| &r.verdict));
            let docs: Vec<_> = reports.iter().map(|r| TheoremReportDoc::new(r, spectrum)).collect();
            Ok(json(&docs, status))
        }
        Command::Corpus { file } => {
            let entries = match file {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    parse_corpus(&text)?
                }
                None => default_corpus(),
            };
            let report = run_corpus(&entries)?;
            let status = status_of(report.entries.iter().flat_map(|e| &e.reports).map(|r| &r.verdict));
            Ok(json(&CorpusDoc::new(&report), status))
        }
        Command::ExportDot { ring } => {
            let spectrum = spectrum_of(&ring_arg(&ring)?)?;
            Ok(Output {
                text: export_dot(&spectrum),
                status: EXIT_OK,
            })
        }
    }
}

/// Failures take precedence over errors.
fn status_of<'a>(verdicts: impl Iterator<Item = &'a Verdict>) -> i32 {
    let mut status = EXIT_OK;
    for v in verdicts {
        match v {
            Verdict::Fail => return EXIT_FAILURE,
            Verdict::Error(_) => status = EXIT_USAGE,
            _ => {}
        }
    }
    status
}

/// Parse `args` (program name first), run the command, and return the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            if out.write_all(output.text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            output.status
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
