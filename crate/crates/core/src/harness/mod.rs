//! Executable versions of the structural results, checked exhaustively on a
//! ring. Every verifier expands into a list of [`Check`]s; a failing report
//! carries the first failing check, which can be evaluated again on its own.

pub mod corpus;

use std::fmt;

use thiserror::Error;

use crate::flatness::{
    closed_genstable_to_flat_ideal, is_cyclic_flat, is_cyclic_projective, lemma9_witness,
    FlatnessError,
};
use crate::ring::{smallest_prime_factor, Elem, Ideal, RingError, RingPresentation};
use crate::ring::Ring;
use crate::spectrum::{ClosedFamily, PointSet, SpectrumError, SpectrumPoset, Topology};
use crate::sring::{
    boolean_chain, chain_graph_check, check_chain_stabilization, sring_certificate,
    sring_certificate_finite, th55_check, ChainMode, SringError, StabilizationOutcome,
    GRAPH_LIMIT,
};

pub use corpus::{run_corpus, CorpusEntry, CorpusError, CorpusReport, EntryReport};

/// Steps the non-example chain is materialized to.
pub const NON_EXAMPLE_BUDGET: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Flatness(#[from] FlatnessError),
    #[error(transparent)]
    Sring(#[from] SringError),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Flat and Zariski closed sets described through the patch topology.
    Topology,
    /// `F(E)` flat closed, `Z(E)` Zariski closed, and the flat kernel of a
    /// generalization-stable `V(I)`.
    ClosureOperators,
    /// Flat quotients correspond to generalization-stable closed sets.
    FlatBijection,
    /// `R/√I` flat forces `I = √I`.
    RadicalFlat,
    /// Over a reduced ring a flat quotient is radical and determined by its locus.
    ReducedCorollaries,
    /// Common multiplier for finitely many members of a flat-quotient ideal.
    CommonMultiplier,
    /// The S-ring conditions.
    SringConditions,
    /// Finitely many minimal or maximal primes.
    FiniteExtremal,
    /// Idempotent splitting of `Z/n` into non-free projective summands.
    CrtRemark,
    /// Chain conditions on `X ∩ V(f)`.
    ChainConditions,
    /// Products: finite ones inherit the property, the infinite one fails it.
    Products,
    /// Expected facts from a corpus entry.
    Facts,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Topology,
        TheoremId::ClosureOperators,
        TheoremId::FlatBijection,
        TheoremId::RadicalFlat,
        TheoremId::ReducedCorollaries,
        TheoremId::CommonMultiplier,
        TheoremId::SringConditions,
        TheoremId::FiniteExtremal,
        TheoremId::CrtRemark,
        TheoremId::ChainConditions,
        TheoremId::Products,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Topology => "topology",
            TheoremId::ClosureOperators => "th2",
            TheoremId::FlatBijection => "theoremI",
            TheoremId::RadicalFlat => "cor1",
            TheoremId::ReducedCorollaries => "cor2-3",
            TheoremId::CommonMultiplier => "lemma9",
            TheoremId::SringConditions => "th1",
            TheoremId::FiniteExtremal => "coro112",
            TheoremId::CrtRemark => "crt-remark",
            TheoremId::ChainConditions => "th55",
            TheoremId::Products => "product",
            TheoremId::Facts => "facts",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId, HarnessError> {
        TheoremId::ALL
            .into_iter()
            .chain([TheoremId::Facts])
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| HarnessError::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A single decidable statement about one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// Flat closed iff patch closed and stable under generalization.
    FlatClosedCharacterized(PointSet),
    /// Zariski closed iff patch closed and stable under specialization.
    ZariskiClosedCharacterized(PointSet),
    PatchClosed(PointSet),
    /// `V(I)` over ideals and `V(f)` over elements generate the same flat topology.
    IdealBasisAgrees,
    /// `F(E)` is flat closed.
    FlatClosureClosed(PointSet),
    /// `F(V(I)) = {q : q ∩ (1 + I) = ∅}`.
    LocalizationImage(PointSet),
    /// `Z(E)` is Zariski closed.
    SpecializationClosed(PointSet),
    /// The saturation kernel `J` has `V(J) = E` and `R/J` flat.
    FlatKernel(PointSet),
    /// `V(I)` is Zariski closed and generalization-stable.
    FlatLocusStable(Ideal),
    DistinctFlatLoci(Ideal, Ideal),
    LocusRealized(PointSet),
    /// Zariski closed and generalization-stable iff flat closed and
    /// specialization-stable.
    StabilityDuality(PointSet),
    /// `R/√I` flat implies `I = √I`.
    RadicalFlatness(Ideal),
    FlatIsRadical(Ideal),
    /// `R/I` flat and `V(I) = V(J)` imply `I = J`.
    FlatDeterminedByLocus(Ideal, Ideal),
    CommonMultiplier(Ideal, Vec<Elem>),
    FlatIsProjective(Ideal),
    ZariskiOpen(PointSet),
    PatchOpen(PointSet),
    FlatOpen(PointSet),
    DoubleClosedIsIdempotentLocus(PointSet),
    IdempotentLocusDoubleClosed(Elem),
    ChainsStabilize(ChainMode),
    SringCertificate,
    CrtDecomposition,
    ChainConditions(PointSet),
    NonStabilizingChain(usize),
    FlatNotProjective,
    FactorCertificates,
    Fact { fact: Fact, expected: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fact {
    SpectrumSize,
    FlatIdeals,
    Reduced,
}

impl Fact {
    pub fn name(self) -> &'static str {
        match self {
            Fact::SpectrumSize => "spectrum_size",
            Fact::FlatIdeals => "flat_ideals",
            Fact::Reduced => "reduced",
        }
    }
}

impl Check {
    pub fn kind(&self) -> &'static str {
        match self {
            Check::FlatClosedCharacterized(_) => "flat-closed-characterized",
            Check::ZariskiClosedCharacterized(_) => "zariski-closed-characterized",
            Check::PatchClosed(_) => "patch-closed",
            Check::IdealBasisAgrees => "ideal-basis-agrees",
            Check::FlatClosureClosed(_) => "flat-closure-closed",
            Check::LocalizationImage(_) => "localization-image",
            Check::SpecializationClosed(_) => "specialization-closed",
            Check::FlatKernel(_) => "flat-kernel",
            Check::FlatLocusStable(_) => "flat-locus-stable",
            Check::DistinctFlatLoci(..) => "distinct-flat-loci",
            Check::LocusRealized(_) => "locus-realized",
            Check::StabilityDuality(_) => "stability-duality",
            Check::RadicalFlatness(_) => "radical-flatness",
            Check::FlatIsRadical(_) => "flat-is-radical",
            Check::FlatDeterminedByLocus(..) => "flat-determined-by-locus",
            Check::CommonMultiplier(..) => "common-multiplier",
            Check::FlatIsProjective(_) => "flat-is-projective",
            Check::ZariskiOpen(_) => "zariski-open",
            Check::PatchOpen(_) => "patch-open",
            Check::FlatOpen(_) => "flat-open",
            Check::DoubleClosedIsIdempotentLocus(_) => "double-closed-is-idempotent-locus",
            Check::IdempotentLocusDoubleClosed(_) => "idempotent-locus-double-closed",
            Check::ChainsStabilize(_) => "chains-stabilize",
            Check::SringCertificate => "sring-certificate",
            Check::CrtDecomposition => "crt-decomposition",
            Check::ChainConditions(_) => "chain-conditions",
            Check::NonStabilizingChain(_) => "non-stabilizing-chain",
            Check::FlatNotProjective => "flat-not-projective",
            Check::FactorCertificates => "factor-certificates",
            Check::Fact { .. } => "fact",
        }
    }

    /// The subset of the spectrum the check is about, if any.
    pub fn subset(&self) -> Option<PointSet> {
        match self {
            Check::FlatClosedCharacterized(s)
            | Check::ZariskiClosedCharacterized(s)
            | Check::PatchClosed(s)
            | Check::FlatClosureClosed(s)
            | Check::LocalizationImage(s)
            | Check::SpecializationClosed(s)
            | Check::FlatKernel(s)
            | Check::LocusRealized(s)
            | Check::StabilityDuality(s)
            | Check::ZariskiOpen(s)
            | Check::PatchOpen(s)
            | Check::FlatOpen(s)
            | Check::DoubleClosedIsIdempotentLocus(s)
            | Check::ChainConditions(s) => Some(*s),
            _ => None,
        }
    }

    /// Ideals the check is about.
    pub fn ideals(&self) -> Vec<&Ideal> {
        match self {
            Check::FlatLocusStable(i)
            | Check::RadicalFlatness(i)
            | Check::FlatIsRadical(i)
            | Check::FlatIsProjective(i)
            | Check::CommonMultiplier(i, _) => vec![i],
            Check::DistinctFlatLoci(i, j) | Check::FlatDeterminedByLocus(i, j) => vec![i, j],
            _ => Vec::new(),
        }
    }

    /// `None` when the statement holds, otherwise a description of the failure.
    pub fn evaluate(&self, ctx: &Context) -> Result<Option<String>, HarnessError> {
        let ring = &ctx.ring;
        let fail = |ok: bool, msg: &dyn Fn() -> String| if ok { None } else { Some(msg()) };
        Ok(match self {
            Check::FlatClosedCharacterized(s) => {
                let (spec, fam) = ctx.families()?;
                let lhs = fam.flat.contains(*s);
                let rhs = fam.patch.contains(*s) && spec.is_stable_generalization(*s);
                fail(lhs == rhs, &|| format!("flat closed: {lhs}, patch closed and generalization-stable: {rhs}"))
            }
            Check::ZariskiClosedCharacterized(s) => {
                let (spec, fam) = ctx.families()?;
                let lhs = fam.zariski.contains(*s);
                let rhs = fam.patch.contains(*s) && spec.is_stable_specialization(*s);
                fail(lhs == rhs, &|| format!("Zariski closed: {lhs}, patch closed and specialization-stable: {rhs}"))
            }
            Check::PatchClosed(s) => {
                let (_, fam) = ctx.families()?;
                fail(fam.patch.contains(*s), &|| "not patch closed".into())
            }
            Check::IdealBasisAgrees => {
                let (spec, fam) = ctx.families()?;
                let other = spec.flat_family_from_ideal_basis()?;
                fail(other == fam.flat, &|| "ideal basis generates a different flat topology".into())
            }
            Check::FlatClosureClosed(s) => {
                let (spec, fam) = ctx.families()?;
                let image = spec.f_operator(*s);
                fail(fam.flat.contains(image), &|| format!("F(E) = {:?} is not flat closed", spec.labels(image)))
            }
            Check::LocalizationImage(s) => {
                let spec = ctx.spectrum()?;
                let ideal = spec.intersection_ideal(*s)?;
                let one = ring.one();
                let units_of_s: Vec<Elem> =
                    ideal.elements()?.iter().map(|m| ring.add(&one, m)).collect();
                let image: PointSet = (0..spec.len())
                    .filter(|&q| !units_of_s.iter().any(|x| spec.points()[q].ideal.contains(x)))
                    .collect();
                let closure = spec.f_operator(*s);
                fail(image == closure, &|| {
                    format!("F(E) = {:?} but primes avoiding 1 + I are {:?}", spec.labels(closure), spec.labels(image))
                })
            }
            Check::SpecializationClosed(s) => {
                let (spec, fam) = ctx.families()?;
                let image = spec.z_operator(*s);
                fail(fam.zariski.contains(image), &|| format!("Z(E) = {:?} is not Zariski closed", spec.labels(image)))
            }
            Check::FlatKernel(s) => {
                let spec = ctx.spectrum()?;
                match closed_genstable_to_flat_ideal(spec, *s) {
                    Ok(_) => None,
                    Err(FlatnessError::Postcondition(msg)) => Some(msg),
                    Err(e) => return Err(e.into()),
                }
            }
            Check::FlatLocusStable(i) => {
                let (spec, fam) = ctx.families()?;
                let locus = spec.vanishing_locus(i);
                fail(
                    fam.zariski.contains(locus) && spec.is_stable_generalization(locus),
                    &|| format!("V({}) = {:?} is not a generalization-stable closed set", i.name(), spec.labels(locus)),
                )
            }
            Check::DistinctFlatLoci(i, j) => {
                let spec = ctx.spectrum()?;
                fail(spec.vanishing_locus(i) != spec.vanishing_locus(j), &|| {
                    format!("{} and {} have flat quotients and the same locus", i.name(), j.name())
                })
            }
            Check::LocusRealized(s) => {
                let spec = ctx.spectrum()?;
                let mut found = false;
                for i in ring.representative_ideals()? {
                    if spec.vanishing_locus(&i) == *s && is_cyclic_flat(ring, &i)?.verdict {
                        found = true;
                        break;
                    }
                }
                fail(found, &|| "no flat-quotient ideal has this locus".into())
            }
            Check::StabilityDuality(s) => {
                let (spec, fam) = ctx.families()?;
                let lhs = fam.zariski.contains(*s) && spec.is_stable_generalization(*s);
                let rhs = fam.flat.contains(*s) && spec.is_stable_specialization(*s);
                fail(lhs == rhs, &|| format!("Zariski-closed generalization-stable: {lhs}, flat-closed specialization-stable: {rhs}"))
            }
            Check::RadicalFlatness(i) => {
                let rad = ring.radical(i)?;
                let ok = !is_cyclic_flat(ring, &rad)?.verdict || rad == *i;
                fail(ok, &|| format!("R/{} is flat but {} is not radical", rad.name(), i.name()))
            }
            Check::FlatIsRadical(i) => {
                let ok = !is_cyclic_flat(ring, i)?.verdict || ring.radical(i)? == *i;
                fail(ok, &|| format!("R/{} is flat but not radical", i.name()))
            }
            Check::FlatDeterminedByLocus(i, j) => {
                let spec = ctx.spectrum()?;
                let ok = !is_cyclic_flat(ring, i)?.verdict
                    || spec.vanishing_locus(i) != spec.vanishing_locus(j)
                    || i == j;
                fail(ok, &|| format!("R/{} is flat and V({}) = V({})", i.name(), i.name(), j.name()))
            }
            Check::CommonMultiplier(i, fs) => {
                let g = lemma9_witness(ring, i, fs)?;
                let ok = i.contains(&g) && fs.iter().all(|f| ring.mul(f, &g) == *f);
                fail(ok, &|| format!("multiplier {g} fails"))
            }
            Check::FlatIsProjective(i) => {
                let ok = !is_cyclic_flat(ring, i)?.verdict || is_cyclic_projective(ring, i)?.projective;
                fail(ok, &|| format!("R/{} is flat but not projective", i.name()))
            }
            Check::ZariskiOpen(s) => {
                let (spec, fam) = ctx.families()?;
                let ok = !(fam.zariski.contains(*s) && spec.is_stable_generalization(*s)) || fam.zariski.is_open(*s);
                fail(ok, &|| "Zariski closed, generalization-stable, not Zariski open".into())
            }
            Check::PatchOpen(s) => {
                let (spec, fam) = ctx.families()?;
                let stable = spec.is_stable_generalization(*s) && spec.is_stable_specialization(*s);
                let ok = !(fam.patch.contains(*s) && stable) || fam.patch.is_open(*s);
                fail(ok, &|| "patch closed, stable both ways, not patch open".into())
            }
            Check::FlatOpen(s) => {
                let (spec, fam) = ctx.families()?;
                let ok = !(fam.flat.contains(*s) && spec.is_stable_specialization(*s)) || fam.flat.is_open(*s);
                fail(ok, &|| "flat closed, specialization-stable, not flat open".into())
            }
            Check::DoubleClosedIsIdempotentLocus(s) => {
                let spec = ctx.spectrum()?;
                let ok = ring.idempotents()?.iter().any(|e| spec.vanishing_of(e) == *s);
                fail(ok, &|| "double closed but not V(e) for an idempotent e".into())
            }
            Check::IdempotentLocusDoubleClosed(e) => {
                let (spec, fam) = ctx.families()?;
                let v = spec.vanishing_of(e);
                fail(fam.zariski.contains(v) && fam.flat.contains(v), &|| format!("V({e}) is not double closed"))
            }
            Check::ChainsStabilize(mode) => {
                let report = chain_graph_check(ring, *mode)?;
                fail(report.passes(), &|| {
                    let cycle: Vec<String> = report.cycles[0].iter().map(|e| e.to_string()).collect();
                    format!("chain cycle through {}", cycle.join(", "))
                })
            }
            Check::SringCertificate => {
                let cert = sring_certificate(ctx.spectrum()?)?;
                fail(cert.passes(), &|| format!("{cert:?}"))
            }
            Check::CrtDecomposition => {
                let parts = crt_decomposition(ring)?;
                let n = ring.order().unwrap_or(0);
                let sum = parts.iter().fold(ring.zero(), |acc, p| ring.add(&acc, &p.idempotent));
                let orthogonal = parts.iter().enumerate().all(|(i, a)| {
                    parts[i + 1..].iter().all(|b| ring.is_zero(&ring.mul(&a.idempotent, &b.idempotent)))
                });
                let mut sizes: Vec<u64> = parts.iter().map(|p| p.summand_size as u64).collect();
                sizes.sort_unstable();
                let ok = parts.len() >= 2
                    && sum == ring.one()
                    && orthogonal
                    && sizes == prime_power_factors(n)
                    && parts.iter().all(|p| p.projective && (p.summand_size as u64) < n);
                fail(ok, &|| format!("decomposition {parts:?}"))
            }
            Check::ChainConditions(x) => {
                let trace = th55_check(ctx.spectrum()?, *x)?;
                fail(trace.passes(), &|| format!("{trace:?}"))
            }
            Check::NonStabilizingChain(budget) => {
                let chain = boolean_chain(*budget)?;
                let report = check_chain_stabilization(&chain);
                let grows = chain.terms().windows(2).all(|w| w[0] != w[1]);
                let ok = grows
                    && report.never_stabilizes.is_some()
                    && matches!(report.outcome, StabilizationOutcome::NotStabilizedWithinBudget { .. });
                fail(ok, &|| format!("{:?}", report.outcome))
            }
            Check::FlatNotProjective => {
                let fin = ring.finitely_supported_ideal()?;
                let cert = is_cyclic_flat(ring, &fin)?;
                let proj = is_cyclic_projective(ring, &fin)?;
                fail(cert.verdict && cert.recheck()? && !proj.projective, &|| {
                    format!("flat: {}, projective: {}", cert.verdict, proj.projective)
                })
            }
            Check::FactorCertificates => {
                let mut bad = None;
                for factor in ring.factors().unwrap_or_default() {
                    if !sring_certificate_finite(factor)?.passes() {
                        bad = Some(factor.to_string());
                        break;
                    }
                }
                match bad {
                    Some(f) => Some(format!("factor {f} fails the certificate")),
                    None => fail(sring_certificate_finite(ring)?.passes(), &|| "product fails the certificate".into()),
                }
            }
            Check::Fact { fact, expected } => {
                let computed = compute_fact(ring, *fact)?;
                fail(computed == *expected, &|| format!("{}: expected {expected}, computed {computed}", fact.name()))
            }
        })
    }
}

pub fn compute_fact(ring: &Ring, fact: Fact) -> Result<String, HarnessError> {
    Ok(match fact {
        Fact::SpectrumSize => SpectrumPoset::enumerate(ring)?.len().to_string(),
        Fact::FlatIdeals => {
            let mut count = 0;
            for i in ring.representative_ideals()? {
                if is_cyclic_flat(ring, &i)?.verdict {
                    count += 1;
                }
            }
            count.to_string()
        }
        Fact::Reduced => ring.is_reduced()?.to_string(),
    })
}

/// The closed-set families of one spectrum.
#[derive(Clone, Debug)]
pub struct Families {
    pub zariski: ClosedFamily,
    pub flat: ClosedFamily,
    pub patch: ClosedFamily,
}

/// Shared data for evaluating checks on one ring.
#[derive(Clone, Debug)]
pub struct Context {
    pub ring: Ring,
    spectrum: Result<SpectrumPoset, SpectrumError>,
    families: Result<Families, SpectrumError>,
}

impl Context {
    pub fn new(ring: &Ring) -> Context {
        let spectrum = SpectrumPoset::enumerate(ring);
        let families = spectrum.as_ref().map_err(Clone::clone).and_then(|s| {
            Ok(Families {
                zariski: s.closed_family(Topology::Zariski)?,
                flat: s.closed_family(Topology::Flat)?,
                patch: s.closed_family(Topology::Patch)?,
            })
        });
        Context {
            ring: ring.clone(),
            spectrum,
            families,
        }
    }

    pub fn spectrum(&self) -> Result<&SpectrumPoset, HarnessError> {
        self.spectrum.as_ref().map_err(|e| e.clone().into())
    }

    pub fn families(&self) -> Result<(&SpectrumPoset, &Families), HarnessError> {
        let fam = self.families.as_ref().map_err(|e| HarnessError::from(e.clone()))?;
        Ok((self.spectrum()?, fam))
    }

    fn all_subsets(&self) -> Result<Vec<PointSet>, HarnessError> {
        let (spec, _) = self.families()?;
        Ok((0..1u64 << spec.len()).map(PointSet).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
    Error(String),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped(_) => "skipped",
            Verdict::Error(_) => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub check: Check,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub ring: String,
    pub verdict: Verdict,
    pub checks: usize,
    pub counterexample: Option<Counterexample>,
}

impl TheoremReport {
    /// Evaluate the counterexample again; `true` when the failure reproduces.
    pub fn recheck(&self, ring: &Ring) -> Result<bool, HarnessError> {
        match &self.counterexample {
            Some(c) => Ok(c.check.evaluate(&Context::new(ring))?.is_some()),
            None => Ok(false),
        }
    }
}

/// One summand `R·e` of an idempotent splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtPart {
    pub idempotent: Elem,
    pub summand_size: usize,
    pub projective: bool,
}

/// Split `Z/n` along its primitive idempotents.
pub fn crt_decomposition(ring: &Ring) -> Result<Vec<CrtPart>, HarnessError> {
    ring.primitive_idempotents()?
        .into_iter()
        .map(|e| {
            let summand = ring.ideal(std::slice::from_ref(&e))?;
            Ok(CrtPart {
                summand_size: summand.elements()?.len(),
                projective: is_cyclic_projective(ring, &summand)?.projective,
                idempotent: e,
            })
        })
        .collect()
}

/// Prime powers `p^s` exactly dividing `n`, ascending.
pub fn prime_power_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while let Some(p) = smallest_prime_factor(n) {
        let mut q = 1;
        while n.is_multiple_of(p) {
            n /= p;
            q *= p;
        }
        out.push(q);
    }
    out.sort_unstable();
    out
}

/// Flat-quotient ideals paired with their loci.
pub fn flat_ideal_bijection(spectrum: &SpectrumPoset) -> Result<Vec<(Ideal, PointSet)>, HarnessError> {
    let ring = spectrum.ring();
    let mut out = Vec::new();
    for i in ring.representative_ideals()? {
        if is_cyclic_flat(ring, &i)?.verdict {
            let locus = spectrum.vanishing_locus(&i);
            out.push((i, locus));
        }
    }
    Ok(out)
}

/// Zariski-closed subsets stable under generalization.
pub fn genstable_closed_sets(spectrum: &SpectrumPoset) -> Result<Vec<PointSet>, HarnessError> {
    Ok(spectrum
        .closed_family(Topology::Zariski)?
        .iter()
        .filter(|&s| spectrum.is_stable_generalization(s))
        .collect())
}

enum Plan {
    Run(Vec<Check>),
    Skip(String),
}

fn plan(theorem: TheoremId, ctx: &Context) -> Result<Plan, HarnessError> {
    let ring = &ctx.ring;
    let needs_families = matches!(
        theorem,
        TheoremId::Topology
            | TheoremId::ClosureOperators
            | TheoremId::FlatBijection
            | TheoremId::ReducedCorollaries
            | TheoremId::SringConditions
            | TheoremId::FiniteExtremal
            | TheoremId::ChainConditions
    );
    if needs_families {
        if let Err(e) = ctx.families() {
            return Ok(Plan::Skip(e.to_string()));
        }
    }
    let checks = match theorem {
        TheoremId::Topology => {
            let mut checks = Vec::new();
            for s in ctx.all_subsets()? {
                checks.push(Check::FlatClosedCharacterized(s));
                checks.push(Check::ZariskiClosedCharacterized(s));
                checks.push(Check::PatchClosed(s));
            }
            checks.push(Check::IdealBasisAgrees);
            checks
        }
        TheoremId::ClosureOperators => {
            let (spec, fam) = ctx.families()?;
            let mut checks = Vec::new();
            for s in fam.zariski.iter() {
                checks.push(Check::FlatClosureClosed(s));
                if ring.is_finite() {
                    checks.push(Check::LocalizationImage(s));
                }
                if spec.is_stable_generalization(s) {
                    checks.push(Check::FlatKernel(s));
                }
            }
            checks.extend(fam.patch.iter().map(Check::SpecializationClosed));
            checks
        }
        TheoremId::FlatBijection => {
            let (spec, _) = ctx.families()?;
            let pairs = flat_ideal_bijection(spec)?;
            let mut checks: Vec<Check> =
                pairs.iter().map(|(i, _)| Check::FlatLocusStable(i.clone())).collect();
            for (a, (i, _)) in pairs.iter().enumerate() {
                for (j, _) in &pairs[a + 1..] {
                    checks.push(Check::DistinctFlatLoci(i.clone(), j.clone()));
                }
            }
            checks.extend(genstable_closed_sets(spec)?.into_iter().map(Check::LocusRealized));
            checks.extend(ctx.all_subsets()?.into_iter().map(Check::StabilityDuality));
            checks
        }
        TheoremId::RadicalFlat => match ring.representative_ideals() {
            Ok(ideals) => ideals.into_iter().map(Check::RadicalFlatness).collect(),
            Err(e) => return Ok(Plan::Skip(e.to_string())),
        },
        TheoremId::ReducedCorollaries => {
            if !ring.is_reduced()? {
                return Ok(Plan::Skip(format!(
                    "ring is not reduced: nilradical {}",
                    ring.nilradical()?.name()
                )));
            }
            let ideals = ring.representative_ideals()?;
            let mut checks: Vec<Check> = ideals.iter().cloned().map(Check::FlatIsRadical).collect();
            for i in &ideals {
                for j in &ideals {
                    checks.push(Check::FlatDeterminedByLocus(i.clone(), j.clone()));
                }
            }
            checks
        }
        TheoremId::CommonMultiplier => {
            if ring.is_boolean_sequences() {
                let fin = ring.finitely_supported_ideal()?;
                let members = fin.representative_members();
                vec![Check::CommonMultiplier(fin, members)]
            } else {
                let ideals = match ring.representative_ideals() {
                    Ok(ideals) => ideals,
                    Err(e) => return Ok(Plan::Skip(e.to_string())),
                };
                let mut checks = Vec::new();
                for i in ideals {
                    if !is_cyclic_flat(ring, &i)?.verdict {
                        continue;
                    }
                    let members = i.representative_members();
                    for (a, f) in members.iter().enumerate() {
                        for g in &members[a..] {
                            checks.push(Check::CommonMultiplier(i.clone(), vec![f.clone(), g.clone()]));
                        }
                    }
                    checks.push(Check::CommonMultiplier(i, members));
                }
                checks
            }
        }
        TheoremId::SringConditions => {
            let (spec, fam) = ctx.families()?;
            let mut checks: Vec<Check> = ring
                .representative_ideals()?
                .into_iter()
                .map(Check::FlatIsProjective)
                .collect();
            checks.extend(fam.zariski.iter().map(Check::ZariskiOpen));
            checks.extend(fam.patch.iter().map(Check::PatchOpen));
            checks.extend(fam.flat.iter().map(Check::FlatOpen));
            checks.extend(
                spec.double_closed()?
                    .into_iter()
                    .map(Check::DoubleClosedIsIdempotentLocus),
            );
            checks.extend(ring.idempotents()?.into_iter().map(Check::IdempotentLocusDoubleClosed));
            if ring.is_finite() && ring.order().is_some_and(|n| n as usize <= GRAPH_LIMIT) {
                checks.push(Check::ChainsStabilize(ChainMode::Ascending));
                checks.push(Check::ChainsStabilize(ChainMode::Descending));
            }
            checks.push(Check::SringCertificate);
            checks
        }
        TheoremId::FiniteExtremal => {
            let mut checks = vec![Check::SringCertificate];
            checks.extend(
                ring.representative_ideals()?
                    .into_iter()
                    .map(Check::FlatIsProjective),
            );
            checks
        }
        TheoremId::CrtRemark => match ring.presentation() {
            RingPresentation::ModularInt(n) if prime_power_factors(*n).len() >= 2 => {
                vec![Check::CrtDecomposition]
            }
            _ => return Ok(Plan::Skip("needs Z/n with at least two distinct prime factors".into())),
        },
        TheoremId::ChainConditions => {
            let spec = ctx.spectrum()?;
            vec![
                Check::ChainConditions(spec.minimal()),
                Check::ChainConditions(spec.maximal()),
            ]
        }
        TheoremId::Products => {
            if ring.is_boolean_sequences() {
                vec![Check::NonStabilizingChain(NON_EXAMPLE_BUDGET), Check::FlatNotProjective]
            } else if ring.factors().is_some() {
                vec![Check::FactorCertificates]
            } else {
                return Ok(Plan::Skip("not a product".into()));
            }
        }
        TheoremId::Facts => return Ok(Plan::Skip("no expected facts".into())),
    };
    Ok(Plan::Run(checks))
}

/// Evaluate `checks` in order, stopping at the first failure.
pub fn run_checks(theorem: TheoremId, ctx: &Context, checks: Vec<Check>) -> TheoremReport {
    let mut report = TheoremReport {
        theorem,
        ring: ctx.ring.to_string(),
        verdict: Verdict::Pass,
        checks: 0,
        counterexample: None,
    };
    for check in checks {
        report.checks += 1;
        match check.evaluate(ctx) {
            Ok(None) => {}
            Ok(Some(detail)) => {
                report.verdict = Verdict::Fail;
                report.counterexample = Some(Counterexample { check, detail });
                break;
            }
            Err(e) => {
                report.verdict = Verdict::Error(e.to_string());
                break;
            }
        }
    }
    report
}

pub fn verify_with(theorem: TheoremId, ctx: &Context) -> TheoremReport {
    match plan(theorem, ctx) {
        Ok(Plan::Run(checks)) => run_checks(theorem, ctx, checks),
        Ok(Plan::Skip(reason)) => TheoremReport {
            theorem,
            ring: ctx.ring.to_string(),
            verdict: Verdict::Skipped(reason),
            checks: 0,
            counterexample: None,
        },
        Err(e) => TheoremReport {
            theorem,
            ring: ctx.ring.to_string(),
            verdict: Verdict::Error(e.to_string()),
            checks: 0,
            counterexample: None,
        },
    }
}

pub fn verify(theorem: TheoremId, ring: &Ring) -> TheoremReport {
    verify_with(theorem, &Context::new(ring))
}

/// Every verifier on one ring, in [`TheoremId::ALL`] order.
pub fn verify_all(ring: &Ring) -> Vec<TheoremReport> {
    let ctx = Context::new(ring);
    TheoremId::ALL.iter().map(|&t| verify_with(t, &ctx)).collect()
}

pub fn verify_topology_characterization(ring: &Ring) -> TheoremReport {
    verify(TheoremId::Topology, ring)
}

pub fn verify_theorem2(ring: &Ring) -> TheoremReport {
    verify(TheoremId::ClosureOperators, ring)
}

pub fn verify_flat_bijection(ring: &Ring) -> TheoremReport {
    verify(TheoremId::FlatBijection, ring)
}

pub fn verify_corollaries_reduced(ring: &Ring) -> TheoremReport {
    verify(TheoremId::ReducedCorollaries, ring)
}

pub fn verify_th1_equivalences(ring: &Ring) -> TheoremReport {
    verify(TheoremId::SringConditions, ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    #[test]
    fn every_verifier_passes_or_skips_on_small_rings() {
        let rings = [
            z(4),
            z(6),
            z(12),
            Ring::galois_field(2, 2).unwrap(),
            Ring::localized_integers(2).unwrap(),
            Ring::product(vec![Ring::localized_integers(2).unwrap(), z(3)]).unwrap(),
            Ring::eventually_constant_bits(),
        ];
        for ring in rings {
            for report in verify_all(&ring) {
                assert!(
                    matches!(report.verdict, Verdict::Pass | Verdict::Skipped(_)),
                    "{ring} {}: {:?} {:?}",
                    report.theorem,
                    report.verdict,
                    report.counterexample
                );
            }
        }
    }

    #[test]
    fn reduced_corollaries_skip_non_reduced() {
        assert!(matches!(verify_corollaries_reduced(&z(12)).verdict, Verdict::Skipped(_)));
        assert_eq!(verify_corollaries_reduced(&z(6)).verdict, Verdict::Pass);
    }

    #[test]
    fn fact_mismatch_is_rechecked() {
        let ring = z(12);
        let ctx = Context::new(&ring);
        let report = run_checks(
            TheoremId::Facts,
            &ctx,
            vec![Check::Fact { fact: Fact::SpectrumSize, expected: "3".into() }],
        );
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(report.counterexample.as_ref().unwrap().detail.contains("computed 2"));
        assert!(report.recheck(&ring).unwrap());
    }

    #[test]
    fn crt_parts_of_z12() {
        let parts = crt_decomposition(&z(12)).unwrap();
        let got: Vec<(Elem, usize)> =
            parts.iter().map(|p| (p.idempotent.clone(), p.summand_size)).collect();
        assert_eq!(got, vec![(Elem::Int(4), 3), (Elem::Int(9), 4)]);
        assert_eq!(prime_power_factors(12), vec![3, 4]);
        assert!(matches!(verify(TheoremId::CrtRemark, &z(8)).verdict, Verdict::Skipped(_)));
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.id()).unwrap(), t);
        }
        assert!(TheoremId::parse("nope").is_err());
    }
}
