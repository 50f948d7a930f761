//! Randomized invariants over a pool of small rings.

use proptest::prelude::*;
use proptest::sample::{select, subsequence};

use spectra::dsl::{parse_element, ring_from_str};
use spectra::export::export_dot;
use spectra::export::json::{FlatnessDoc, SpectrumDoc};
use spectra::flatness::{is_cyclic_flat, is_cyclic_projective, lemma9_witness};
use spectra::harness::corpus::{run_corpus, CorpusEntry};
use spectra::ring::{Elem, Ring};
use spectra::spectrum::{PointSet, SpectrumPoset, Topology};
use spectra::sring::{check_chain_stabilization, dual_chain, ChainMode, MultiplicativeChain, StabilizationOutcome};

const FINITE: &[&str] = &[
    "Z/1", "Z/2", "Z/4", "Z/6", "Z/8", "Z/9", "Z/12", "Z/18", "Z/30", "Z/36", "GF(4)", "GF(8)",
    "GF(9)", "Z/2[x]/(x^2)", "Z/2[x]/(x^2+x)", "Z/3[x]/(x^2+1)", "Z/2[x]/(x^3+x)", "Z/2 * Z/3",
    "Z/4 * Z/2", "Z/2 * Z/2 * Z/2", "GF(4) * Z/3",
];

const WITH_SPECTRUM: &[&str] = &[
    "Z/6", "Z/12", "Z/30", "Z/2[x]/(x^2+x)", "Z/2 * Z/2 * Z/2", "Zloc(2)", "Zloc(3) * Z/2",
    "Zloc(2) * Zloc(3)", "Zloc(5) * GF(4)",
];

fn ring(text: &str) -> Ring {
    ring_from_str(text).unwrap()
}

fn nth(r: &Ring, i: usize) -> Elem {
    r.element_at(i % r.order().unwrap() as usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(text in select(FINITE), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let r = ring(text);
        let (a, b, c) = (nth(&r, a), nth(&r, b), nth(&r, c));
        prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
        prop_assert_eq!(r.add(&a, &r.zero()), a.clone());
        prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
        prop_assert_eq!(r.index_of(&a), r.index_of(&r.element_at(r.index_of(&a))));
    }

    #[test]
    fn closure_operators(text in select(WITH_SPECTRUM), bits in any::<u64>()) {
        let s = SpectrumPoset::enumerate(&ring(text)).unwrap();
        let set = PointSet(bits).intersection(s.full());
        for op in [SpectrumPoset::f_operator, SpectrumPoset::z_operator] {
            let once = op(&s, set);
            prop_assert!(set.is_subset(once));
            prop_assert_eq!(op(&s, once), once);
        }
        prop_assert!(s.is_stable_generalization(s.f_operator(set)));
        prop_assert!(s.is_stable_specialization(s.z_operator(set)));
    }

    #[test]
    fn closed_families_are_topologies(text in select(WITH_SPECTRUM)) {
        let s = SpectrumPoset::enumerate(&ring(text)).unwrap();
        for t in [Topology::Zariski, Topology::Flat, Topology::Patch] {
            let family = s.closed_family(t).unwrap();
            prop_assert!(family.contains(PointSet::default()));
            prop_assert!(family.contains(s.full()));
            for a in family.iter() {
                for b in family.iter() {
                    prop_assert!(family.contains(a.union(b)));
                    prop_assert!(family.contains(a.intersection(b)));
                }
            }
        }
        // every Zariski or flat closed set is patch closed
        let patch = s.closed_family(Topology::Patch).unwrap();
        for t in [Topology::Zariski, Topology::Flat] {
            prop_assert!(s.closed_family(t).unwrap().iter().all(|c| patch.contains(c)));
        }
    }

    #[test]
    fn flatness_certificates_recheck(text in select(FINITE)) {
        let r = ring(text);
        for ideal in r.ideals().unwrap() {
            let cert = is_cyclic_flat(&r, &ideal).unwrap();
            prop_assert!(cert.recheck().unwrap());
            let proj = is_cyclic_projective(&r, &ideal).unwrap();
            // finite rings: flat quotients are exactly the projective ones
            prop_assert_eq!(proj.projective, cert.verdict);
        }
    }

    #[test]
    fn common_multiplier(text in select(FINITE), picks in subsequence((0..64usize).collect::<Vec<_>>(), 1..6)) {
        let r = ring(text);
        for ideal in r.ideals().unwrap() {
            if !is_cyclic_flat(&r, &ideal).unwrap().verdict {
                continue;
            }
            let members = ideal.elements().unwrap();
            let fs: Vec<Elem> = picks.iter().map(|&i| members[i % members.len()].clone()).collect();
            let g = lemma9_witness(&r, &ideal, &fs).unwrap();
            prop_assert!(ideal.contains(&g));
            for f in &fs {
                prop_assert_eq!(&r.mul(f, &g), f);
            }
        }
    }

    #[test]
    fn dual_chains(text in select(FINITE), seeds in prop::collection::vec(any::<usize>(), 1..12), ascending in any::<bool>()) {
        let r = ring(text);
        let mode = if ascending { ChainMode::Ascending } else { ChainMode::Descending };
        // grow the chain greedily from the seeds, keeping only admissible steps
        let mut terms = vec![nth(&r, seeds[0])];
        for &s in &seeds[1..] {
            let last = terms.last().unwrap().clone();
            let next = nth(&r, s);
            let p = r.mul(&last, &next);
            let ok = match mode {
                ChainMode::Ascending => p == last,
                ChainMode::Descending => p == next,
            };
            if ok {
                terms.push(next);
            }
        }
        // an explicit chain repeats its last term, so that term must be idempotent
        let last = terms.last().unwrap().clone();
        if !r.is_idempotent(&last) {
            terms.push(match mode {
                ChainMode::Ascending => r.one(),
                ChainMode::Descending => r.zero(),
            });
        }
        let chain = MultiplicativeChain::explicit(&r, mode, terms).unwrap();
        let dual = dual_chain(&chain);
        prop_assert_eq!(dual.mode(), mode.flip());
        prop_assert_eq!(&dual_chain(&dual), &chain);
        // the dual is again a valid chain
        prop_assert!(MultiplicativeChain::explicit(&r, dual.mode(), dual.terms().to_vec()).is_ok());
        let a = check_chain_stabilization(&chain);
        let b = check_chain_stabilization(&dual);
        prop_assert!(a.recheck(&chain));
        prop_assert!(b.recheck(&dual));
        match (a.outcome, b.outcome) {
            (StabilizationOutcome::StabilizedAt { k, e }, StabilizationOutcome::StabilizedAt { k: k2, e: e2 }) => {
                prop_assert_eq!(k, k2);
                prop_assert_eq!(r.one_minus(&e), e2);
            }
            (x, y) => prop_assert!(false, "{x:?} vs {y:?}"),
        }
    }

    #[test]
    fn element_print_parse(text in select(FINITE), i in any::<usize>()) {
        let r = ring(text);
        let e = nth(&r, i);
        prop_assert_eq!(parse_element(&r, &e.to_string()).unwrap(), e);
    }

    #[test]
    fn ring_print_parse(text in select(FINITE).prop_union(select(WITH_SPECTRUM))) {
        let r = ring(text);
        let again = ring(&r.to_string());
        prop_assert_eq!(again.to_string(), r.to_string());
        prop_assert_eq!(again.order(), r.order());
    }

    #[test]
    fn json_round_trip(text in select(FINITE)) {
        let r = ring(text);
        let s = SpectrumPoset::enumerate(&r).unwrap();
        let doc = SpectrumDoc::new(&s);
        let back: SpectrumDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        prop_assert_eq!(back, doc);
        for ideal in r.ideals().unwrap() {
            let cert = is_cyclic_flat(&r, &ideal).unwrap();
            let proj = is_cyclic_projective(&r, &ideal).unwrap();
            let doc = FlatnessDoc::new(&ideal, &cert, &proj, Some(&s));
            let back: FlatnessDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
            prop_assert_eq!(back, doc);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn dot_is_deterministic(text in select(WITH_SPECTRUM)) {
        let first = export_dot(&SpectrumPoset::enumerate(&ring(text)).unwrap());
        let others: Vec<String> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| scope.spawn(|| export_dot(&SpectrumPoset::enumerate(&ring(text)).unwrap())))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for other in others {
            prop_assert_eq!(&other, &first);
        }
    }

    #[test]
    fn corpus_order_does_not_matter(order in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let exprs = ["Z/6", "Z/12", "GF(4)", "Zloc(2)", "Z/2 * Z/3"];
        let entries: Vec<CorpusEntry> = exprs.iter().map(|e| CorpusEntry::new(e)).collect();
        let shuffled: Vec<CorpusEntry> = order.iter().map(|&i| entries[i].clone()).collect();
        let a = run_corpus(&entries).unwrap();
        let b = run_corpus(&shuffled).unwrap();
        for (pos, &i) in order.iter().enumerate() {
            prop_assert_eq!(&b.entries[pos].expr, &a.entries[i].expr);
            prop_assert_eq!(&b.entries[pos].reports, &a.entries[i].reports);
        }
    }
}
