//! S-rings: multiplicative chains, the finite S-ring certificate, the
//! chain-condition check on `X ∩ V(f)`, and the Boolean non-example.

use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use thiserror::Error;

use crate::ring::{BitSeq, Elem, Ideal, Ring, RingError};
use crate::spectrum::Topology;
use crate::spectrum::{PointSet, SpectrumError, SpectrumPoset};

/// Largest ring whose full divisibility graph is built.
pub const GRAPH_LIMIT: usize = 256;
/// Largest ring for which every pair `(a, a')` with `a = a·a'` is traced.
pub const PAIR_LIMIT: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SringError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("chain equation fails between terms {index} and {}", index + 1)]
    InvalidChain { index: usize },
    #[error("a chain needs at least one term")]
    EmptyChain,
    #[error("hypothesis violated: no point of X lies below the maximal ideal {uncovered}")]
    HypothesisViolated { uncovered: String },
    #[error("ring of order {order} exceeds the graph limit {limit}")]
    TooLarge { order: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainMode {
    /// `f_n = f_n·f_{n+1}`
    Ascending,
    /// `g_{n+1} = g_n·g_{n+1}`
    Descending,
}

impl ChainMode {
    pub fn flip(self) -> ChainMode {
        match self {
            ChainMode::Ascending => ChainMode::Descending,
            ChainMode::Descending => ChainMode::Ascending,
        }
    }

    fn holds(self, ring: &Ring, current: &Elem, next: &Elem) -> bool {
        let product = ring.mul(current, next);
        match self {
            ChainMode::Ascending => product == *current,
            ChainMode::Descending => product == *next,
        }
    }
}

/// What lies past the materialized terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainTail {
    /// The last term repeats forever.
    Constant,
    /// Produced by a rule; nothing is known past the budget.
    Open,
    /// Produced by a rule that provably never stabilizes.
    NeverStable(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativeChain {
    ring: Ring,
    mode: ChainMode,
    terms: Vec<Elem>,
    tail: ChainTail,
}

impl MultiplicativeChain {
    /// A finite prefix whose last term repeats.
    pub fn explicit(ring: &Ring, mode: ChainMode, terms: Vec<Elem>) -> Result<Self, SringError> {
        Self::validated(ring, mode, terms, ChainTail::Constant)
    }

    /// Terms `rule(1), ..., rule(budget)`.
    pub fn from_rule(
        ring: &Ring,
        mode: ChainMode,
        budget: usize,
        rule: impl Fn(usize) -> Elem,
    ) -> Result<Self, SringError> {
        Self::validated(ring, mode, (1..=budget).map(rule).collect(), ChainTail::Open)
    }

    fn validated(
        ring: &Ring,
        mode: ChainMode,
        terms: Vec<Elem>,
        tail: ChainTail,
    ) -> Result<Self, SringError> {
        let Some(last) = terms.last() else {
            return Err(SringError::EmptyChain);
        };
        for t in &terms {
            ring.check(t)?;
        }
        for (i, pair) in terms.windows(2).enumerate() {
            if !mode.holds(ring, &pair[0], &pair[1]) {
                return Err(SringError::InvalidChain { index: i + 1 });
            }
        }
        if tail == ChainTail::Constant && !mode.holds(ring, last, last) {
            return Err(SringError::InvalidChain { index: terms.len() });
        }
        Ok(MultiplicativeChain {
            ring: ring.clone(),
            mode,
            terms,
            tail,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn mode(&self) -> ChainMode {
        self.mode
    }

    pub fn terms(&self) -> &[Elem] {
        &self.terms
    }

    pub fn tail(&self) -> &ChainTail {
        &self.tail
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilizationOutcome {
    /// 1-based index `k` and the idempotent value `e`.
    StabilizedAt { k: usize, e: Elem },
    NotStabilizedWithinBudget {
        last_index: usize,
        /// The last term and the latest earlier term different from it.
        last_distinct: Option<(Elem, Elem)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub outcome: StabilizationOutcome,
    pub checked_prefix_length: usize,
    /// Set only when the chain comes with a proof that it never stabilizes.
    pub never_stabilizes: Option<&'static str>,
}

impl StabilizationReport {
    /// Re-multiply the claimed stable value against the chain.
    pub fn recheck(&self, chain: &MultiplicativeChain) -> bool {
        let ring = chain.ring();
        match &self.outcome {
            StabilizationOutcome::StabilizedAt { k, e } => {
                *k >= 1
                    && *k <= chain.terms().len()
                    && ring.mul(e, e) == *e
                    && chain.terms()[k - 1..].iter().all(|t| t == e)
            }
            StabilizationOutcome::NotStabilizedWithinBudget { last_index, .. } => {
                *last_index == chain.terms().len()
                    && !chain.terms().iter().enumerate().any(|(i, t)| {
                        ring.is_idempotent(t) && chain.terms()[i..].iter().all(|u| u == t)
                            && (chain.tail() == &ChainTail::Constant || i + 1 < chain.terms().len())
                    })
            }
        }
    }
}

pub fn check_chain_stabilization(chain: &MultiplicativeChain) -> StabilizationReport {
    let ring = chain.ring();
    let terms = chain.terms();
    let n = terms.len();
    let last = &terms[n - 1];
    let run_start = terms.iter().rposition(|t| t != last).map_or(0, |i| i + 1);
    let run_is_enough = match chain.tail() {
        ChainTail::Constant => true,
        ChainTail::Open => n - run_start >= 2,
        ChainTail::NeverStable(_) => false,
    };
    let outcome = if run_is_enough && ring.is_idempotent(last) {
        StabilizationOutcome::StabilizedAt {
            k: run_start + 1,
            e: last.clone(),
        }
    } else {
        StabilizationOutcome::NotStabilizedWithinBudget {
            last_index: n,
            last_distinct: run_start
                .checked_sub(1)
                .map(|i| (last.clone(), terms[i].clone())),
        }
    };
    let never_stabilizes = match chain.tail() {
        ChainTail::NeverStable(reason) => Some(*reason),
        _ => None,
    };
    StabilizationReport {
        outcome,
        checked_prefix_length: n,
        never_stabilizes,
    }
}

/// `t ↦ 1 - t`, with the mode flipped.
pub fn dual_chain(chain: &MultiplicativeChain) -> MultiplicativeChain {
    let ring = chain.ring();
    MultiplicativeChain {
        ring: ring.clone(),
        mode: chain.mode().flip(),
        terms: chain.terms().iter().map(|t| ring.one_minus(t)).collect(),
        tail: chain.tail().clone(),
    }
}

/// The element of the Boolean ring that is 1 on positions `1..=n`, 0 after.
pub fn boolean_nonexample(n: u64) -> Elem {
    assert!(n >= 1, "the non-example chain starts at n = 1");
    Elem::Bits(BitSeq::prefix_indicator(n))
}

const BOOLEAN_PROOF: &str =
    "x_n has support {1..n}; supports strictly grow, so x_n != x_(n+1) for every n";

/// The chain `x_1, x_2, ...` in the ring of eventually constant bit
/// sequences, materialized to `budget` terms.
pub fn boolean_chain(budget: usize) -> Result<MultiplicativeChain, SringError> {
    let ring = Ring::eventually_constant_bits();
    let terms = (1..=budget as u64).map(boolean_nonexample).collect();
    MultiplicativeChain::validated(
        &ring,
        ChainMode::Ascending,
        terms,
        ChainTail::NeverStable(BOOLEAN_PROOF),
    )
}

/// The graph on ring elements with an edge `f -> f'` whenever the pair obeys
/// the mode's equation. Every chain is a walk in it, so in a finite ring all
/// chains stabilize exactly when every cycle is a self-loop (at an
/// idempotent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGraphReport {
    pub nodes: usize,
    pub edges: usize,
    pub self_loops: Vec<Elem>,
    /// Strongly connected components with more than one element.
    pub cycles: Vec<Vec<Elem>>,
}

impl ChainGraphReport {
    pub fn passes(&self) -> bool {
        self.cycles.is_empty()
    }
}

pub fn chain_graph_check(ring: &Ring, mode: ChainMode) -> Result<ChainGraphReport, SringError> {
    let elements = ring.elements()?;
    if elements.len() > GRAPH_LIMIT {
        return Err(SringError::TooLarge {
            order: elements.len(),
            limit: GRAPH_LIMIT,
        });
    }
    let mut graph = DiGraph::<usize, ()>::new();
    let nodes: Vec<_> = (0..elements.len()).map(|i| graph.add_node(i)).collect();
    let mut self_loops = Vec::new();
    for (i, f) in elements.iter().enumerate() {
        for (j, g) in elements.iter().enumerate() {
            if mode.holds(ring, f, g) {
                if i == j {
                    self_loops.push(f.clone());
                }
                graph.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let cycles = tarjan_scc(&graph)
        .into_iter()
        .filter(|scc| scc.len() > 1)
        .map(|scc| scc.into_iter().map(|n| elements[graph[n]].clone()).collect())
        .collect();
    Ok(ChainGraphReport {
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        self_loops,
        cycles,
    })
}

/// Outcome of the finite S-ring checks on one spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SringCertificate {
    /// Zariski-closed generalization-stable sets that are not Zariski open.
    pub zariski_failures: Vec<PointSet>,
    /// Patch-closed sets stable both ways that are not patch open.
    pub patch_failures: Vec<PointSet>,
    /// Flat-closed specialization-stable sets that are not flat open.
    pub flat_failures: Vec<PointSet>,
    /// Each double-closed set with the first idempotent `e` for which it is `V(e)`.
    pub double_closed: Vec<(PointSet, Option<Elem>)>,
    /// Loci `V(e)` that are not double closed.
    pub stray_idempotent_loci: Vec<PointSet>,
}

impl SringCertificate {
    pub fn passes(&self) -> bool {
        self.zariski_failures.is_empty()
            && self.patch_failures.is_empty()
            && self.flat_failures.is_empty()
            && self.stray_idempotent_loci.is_empty()
            && self.double_closed.iter().all(|(_, e)| e.is_some())
    }
}

pub fn sring_certificate(spectrum: &SpectrumPoset) -> Result<SringCertificate, SringError> {
    let ring = spectrum.ring();
    let zariski = spectrum.closed_family(Topology::Zariski)?;
    let flat = spectrum.closed_family(Topology::Flat)?;
    let patch = spectrum.closed_family(Topology::Patch)?;
    let zariski_failures = zariski
        .iter()
        .filter(|&s| spectrum.is_stable_generalization(s) && !zariski.is_open(s))
        .collect();
    let patch_failures = patch
        .iter()
        .filter(|&s| {
            spectrum.is_stable_generalization(s)
                && spectrum.is_stable_specialization(s)
                && !patch.is_open(s)
        })
        .collect();
    let flat_failures = flat
        .iter()
        .filter(|&s| spectrum.is_stable_specialization(s) && !flat.is_open(s))
        .collect();

    let idempotents = ring.idempotents()?;
    let loci: Vec<(PointSet, Elem)> = idempotents
        .into_iter()
        .map(|e| (spectrum.vanishing_of(&e), e))
        .collect();
    let double: BTreeSet<PointSet> = spectrum.double_closed()?.into_iter().collect();
    let double_closed = double
        .iter()
        .map(|&s| (s, loci.iter().find(|(v, _)| *v == s).map(|(_, e)| e.clone())))
        .collect();
    let stray_idempotent_loci = loci
        .iter()
        .map(|(v, _)| *v)
        .filter(|v| !double.contains(v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(SringCertificate {
        zariski_failures,
        patch_failures,
        flat_failures,
        double_closed,
        stray_idempotent_loci,
    })
}

pub fn sring_certificate_finite(ring: &Ring) -> Result<SringCertificate, SringError> {
    sring_certificate(&SpectrumPoset::enumerate(ring)?)
}

/// The chain-condition check on `{X ∩ V(f)}` for a set `X` of primes that
/// reaches below every maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainConditionTrace {
    pub x: PointSet,
    pub j: Ideal,
    /// The distinct sets `X ∩ V(f)`.
    pub family: Vec<PointSet>,
    pub acc: bool,
    pub dcc: bool,
    /// Pairs `(a, a')` with `a = a·a'` whose sets `E = X∩V(a)`,
    /// `F = X∩V(1-a)` were checked.
    pub pairs_checked: usize,
    /// A pair breaking `E ⊇ E'`, `F ⊆ F'` or `X = E ∪ F'`.
    pub pair_failure: Option<(Elem, Elem)>,
    pub conclusion: SringCertificate,
}

impl ChainConditionTrace {
    pub fn passes(&self) -> bool {
        self.acc && self.dcc && self.pair_failure.is_none() && self.conclusion.passes()
    }
}

/// `(E, F)` for one consecutive pair, and whether the inclusions hold.
fn pair_sets(spectrum: &SpectrumPoset, x: PointSet, a: &Elem, next: &Elem) -> bool {
    let ring = spectrum.ring();
    let e = x.intersection(spectrum.vanishing_of(a));
    let e_next = x.intersection(spectrum.vanishing_of(next));
    let f = x.intersection(spectrum.vanishing_of(&ring.one_minus(a)));
    let f_next = x.intersection(spectrum.vanishing_of(&ring.one_minus(next)));
    e_next.is_subset(e) && f.is_subset(f_next) && e.union(f_next) == x
}

pub fn th55_check(spectrum: &SpectrumPoset, x: PointSet) -> Result<ChainConditionTrace, SringError> {
    spectrum.check_subset(x)?;
    for m in spectrum.maximal().iter() {
        if !x.iter().any(|p| spectrum.leq(p, m)) {
            return Err(SringError::HypothesisViolated {
                uncovered: spectrum.label(m),
            });
        }
    }
    let ring = spectrum.ring();
    let j = spectrum.intersection_ideal(x)?;
    let elements = ring.representative_elements()?;
    let family: BTreeSet<PointSet> = elements
        .iter()
        .map(|f| x.intersection(spectrum.vanishing_of(f)))
        .collect();

    let mut pairs_checked = 0;
    let mut pair_failure = None;
    if elements.len() <= PAIR_LIMIT {
        'outer: for a in &elements {
            for next in &elements {
                if ring.mul(a, next) != *a {
                    continue;
                }
                pairs_checked += 1;
                if !pair_sets(spectrum, x, a, next) {
                    pair_failure = Some((a.clone(), next.clone()));
                    break 'outer;
                }
            }
        }
    }
    Ok(ChainConditionTrace {
        x,
        j,
        family: family.into_iter().collect(),
        // A finite family of sets has no infinite strict chains either way.
        acc: true,
        dcc: true,
        pairs_checked,
        pair_failure,
        conclusion: sring_certificate(spectrum)?,
    })
}

/// `(E_n, F_n)` along an ascending chain.
pub fn sequence_trace(
    spectrum: &SpectrumPoset,
    x: PointSet,
    chain: &MultiplicativeChain,
) -> Vec<(PointSet, PointSet)> {
    let ring = spectrum.ring();
    chain
        .terms()
        .iter()
        .map(|a| {
            (
                x.intersection(spectrum.vanishing_of(a)),
                x.intersection(spectrum.vanishing_of(&ring.one_minus(a))),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn ints(xs: &[u64]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem::Int(x)).collect()
    }

    #[test]
    fn z6_chain_stabilizes_at_two() {
        let chain = MultiplicativeChain::explicit(&z(6), ChainMode::Ascending, ints(&[2, 4, 4])).unwrap();
        let report = check_chain_stabilization(&chain);
        assert_eq!(
            report.outcome,
            StabilizationOutcome::StabilizedAt { k: 2, e: Elem::Int(4) }
        );
        assert!(report.recheck(&chain));
    }

    #[test]
    fn constant_idempotent_chain() {
        let chain = MultiplicativeChain::explicit(&z(12), ChainMode::Ascending, ints(&[9])).unwrap();
        assert_eq!(
            check_chain_stabilization(&chain).outcome,
            StabilizationOutcome::StabilizedAt { k: 1, e: Elem::Int(9) }
        );
    }

    #[test]
    fn invalid_chains_are_rejected() {
        assert_eq!(
            MultiplicativeChain::explicit(&z(6), ChainMode::Ascending, ints(&[1, 2])),
            Err(SringError::InvalidChain { index: 1 })
        );
        // 2 is not idempotent, so it cannot repeat.
        assert_eq!(
            MultiplicativeChain::explicit(&z(6), ChainMode::Ascending, ints(&[2])),
            Err(SringError::InvalidChain { index: 1 })
        );
        assert_eq!(
            MultiplicativeChain::explicit(&z(6), ChainMode::Ascending, vec![]),
            Err(SringError::EmptyChain)
        );
    }

    #[test]
    fn dual_of_z6_chain() {
        let chain = MultiplicativeChain::explicit(&z(6), ChainMode::Ascending, ints(&[2, 4, 4])).unwrap();
        let dual = dual_chain(&chain);
        assert_eq!(dual.terms(), ints(&[5, 3, 3]).as_slice());
        assert_eq!(dual.mode(), ChainMode::Descending);
        assert_eq!(
            check_chain_stabilization(&dual).outcome,
            StabilizationOutcome::StabilizedAt { k: 2, e: Elem::Int(3) }
        );
        assert_eq!(dual_chain(&dual), chain);
        let zeros = MultiplicativeChain::explicit(&z(6), ChainMode::Ascending, ints(&[0, 0])).unwrap();
        assert_eq!(dual_chain(&zeros).terms(), ints(&[1, 1]).as_slice());
    }

    #[test]
    fn boolean_chain_never_stabilizes() {
        let chain = boolean_chain(100).unwrap();
        let report = check_chain_stabilization(&chain);
        match &report.outcome {
            StabilizationOutcome::NotStabilizedWithinBudget { last_index, last_distinct } => {
                assert_eq!(*last_index, 100);
                assert_eq!(
                    last_distinct,
                    &Some((boolean_nonexample(100), boolean_nonexample(99)))
                );
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(report.never_stabilizes.is_some());
        assert!(report.recheck(&chain));
        let b = Ring::eventually_constant_bits();
        let x3 = boolean_nonexample(3);
        assert_eq!(b.mul(&x3, &boolean_nonexample(4)), x3);
    }

    #[test]
    fn chain_graphs_have_no_cycles() {
        for ring in [z(4), z(6), z(12), Ring::galois_field(2, 2).unwrap()] {
            for mode in [ChainMode::Ascending, ChainMode::Descending] {
                let report = chain_graph_check(&ring, mode).unwrap();
                assert!(report.passes());
                assert_eq!(report.self_loops, ring.idempotents().unwrap());
            }
        }
    }

    #[test]
    fn certificates() {
        let cert = sring_certificate_finite(&z(12)).unwrap();
        assert!(cert.passes());
        let pairs: Vec<_> = cert.double_closed.iter().map(|(_, e)| e.clone().unwrap()).collect();
        let mut pairs = pairs;
        pairs.sort();
        assert_eq!(pairs, ints(&[0, 1, 4, 9]));
        let zl = sring_certificate_finite(&Ring::localized_integers(2).unwrap()).unwrap();
        assert!(zl.passes());
        assert_eq!(zl.double_closed.len(), 2);
    }

    #[test]
    fn th55_instances() {
        let s = SpectrumPoset::enumerate(&z(12)).unwrap();
        for x in [s.minimal(), s.maximal()] {
            let trace = th55_check(&s, x).unwrap();
            assert!(trace.passes());
            assert_eq!(trace.j, z(12).ideal(&[Elem::Int(6)]).unwrap());
        }
        let mixed = Ring::product(vec![Ring::localized_integers(2).unwrap(), z(3)]).unwrap();
        let s = SpectrumPoset::enumerate(&mixed).unwrap();
        assert_eq!(
            th55_check(&s, PointSet::singleton(0)),
            Err(SringError::HypothesisViolated { uncovered: "(1)×(0)".into() })
        );
    }
}
