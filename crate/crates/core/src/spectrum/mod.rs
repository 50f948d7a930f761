//! Prime spectra as finite posets.
//!
//! Points are prime ideals ordered by inclusion, so `p ≤ q` means `q` is a
//! specialization of `p`. Subsets of the spectrum are bitmasks over point
//! indices ([`PointSet`]), which keeps the exhaustive quantifiers of the
//! topology code cheap.

mod topology;

use std::fmt;

use thiserror::Error;

use crate::ring::{Elem, Ideal, Ring, RingError};

pub use topology::{ClosedFamily, Topology, FAMILY_LIMIT};

/// Spectra are stored as bitmasks, which caps their size.
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("spectrum has {size} points; closed-set families are limited to {limit}")]
    SpectrumTooLarge { size: usize, limit: usize },
    #[error("spectrum has more than {MAX_POINTS} points")]
    TooManyPoints,
    #[error("{0} is not a prime ideal of this ring")]
    NotAPoint(String),
}

/// A subset of an enumerated spectrum, as a bitmask over point indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        if n == 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> PointSet {
        PointSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn minus(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePoint {
    pub ideal: Ideal,
    pub is_minimal: bool,
    pub is_maximal: bool,
}

impl PrimePoint {
    pub fn label(&self) -> String {
        self.ideal.name()
    }
}

/// The prime spectrum of a ring with its inclusion order.
#[derive(Clone, Debug)]
pub struct SpectrumPoset {
    ring: Ring,
    points: Vec<PrimePoint>,
    /// `up[i]` holds every `j` with `p_i ⊆ p_j` (including `i`).
    up: Vec<PointSet>,
    /// `down[i]` holds every `j` with `p_j ⊆ p_i` (including `i`).
    down: Vec<PointSet>,
}

impl SpectrumPoset {
    /// Enumerate `Spec(R)`. Products are assembled factor by factor; finite
    /// rings otherwise go through [`SpectrumPoset::brute_force`].
    pub fn enumerate(ring: &Ring) -> Result<SpectrumPoset, SpectrumError> {
        if ring.is_boolean_sequences() {
            return Err(ring.unsupported("spectrum enumeration").into());
        }
        if let Some(factors) = ring.factors() {
            let mut primes = Vec::new();
            for (i, factor) in factors.iter().enumerate() {
                for point in SpectrumPoset::enumerate(factor)?.points {
                    primes.push(ring.lift_factor_ideal(i, &point.ideal)?);
                }
            }
            return SpectrumPoset::from_primes(ring, primes);
        }
        if let Some(p) = ring.local_prime() {
            let primes = vec![
                ring.zero_ideal(),
                ring.ideal(&[Elem::integer(p as i64)])?,
            ];
            return SpectrumPoset::from_primes(ring, primes);
        }
        SpectrumPoset::brute_force(ring)
    }

    /// Enumerate every ideal of a finite ring and keep the prime ones.
    pub fn brute_force(ring: &Ring) -> Result<SpectrumPoset, SpectrumError> {
        let mut primes = Vec::new();
        for ideal in ring.ideals()? {
            if ring.is_prime_ideal(&ideal)? {
                primes.push(ideal);
            }
        }
        SpectrumPoset::from_primes(ring, primes)
    }

    fn from_primes(ring: &Ring, mut primes: Vec<Ideal>) -> Result<SpectrumPoset, SpectrumError> {
        primes.sort();
        primes.dedup();
        let n = primes.len();
        if n > MAX_POINTS {
            return Err(SpectrumError::TooManyPoints);
        }
        let mut up = vec![PointSet::EMPTY; n];
        let mut down = vec![PointSet::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                if primes[i].is_subset(&primes[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let points = primes
            .into_iter()
            .enumerate()
            .map(|(i, ideal)| PrimePoint {
                ideal,
                is_minimal: down[i].len() == 1,
                is_maximal: up[i].len() == 1,
            })
            .collect();
        Ok(SpectrumPoset {
            ring: ring.clone(),
            points,
            up,
            down,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn points(&self) -> &[PrimePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn label(&self, i: usize) -> String {
        self.points[i].label()
    }

    pub fn labels(&self, set: PointSet) -> Vec<String> {
        set.iter().map(|i| self.label(i)).collect()
    }

    /// `p_i ⊆ p_j`
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.points.iter().position(|p| p.ideal == *ideal)
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label() == label)
    }

    pub fn minimal(&self) -> PointSet {
        (0..self.len()).filter(|&i| self.points[i].is_minimal).collect()
    }

    pub fn maximal(&self) -> PointSet {
        (0..self.len()).filter(|&i| self.points[i].is_maximal).collect()
    }

    /// Strict inclusions `p_i ⊂ p_j` with nothing in between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.len() {
            for j in self.up[i].iter().filter(|&j| j != i) {
                let between = self.up[i]
                    .intersection(self.down[j])
                    .minus(PointSet::singleton(i))
                    .minus(PointSet::singleton(j));
                if between.is_empty() {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Strict inclusions `p_i ⊂ p_j`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.up[i].iter().filter(move |&j| j != i).map(move |j| (i, j)))
            .collect()
    }

    /// `V(I) = {p : I ⊆ p}`.
    pub fn vanishing_locus(&self, ideal: &Ideal) -> PointSet {
        (0..self.len())
            .filter(|&i| ideal.is_subset(&self.points[i].ideal))
            .collect()
    }

    /// `V(f) = {p : f ∈ p}`.
    pub fn vanishing_of(&self, f: &Elem) -> PointSet {
        (0..self.len())
            .filter(|&i| self.points[i].ideal.contains(f))
            .collect()
    }

    /// `D(f)`, the complement of `V(f)`.
    pub fn basic_open(&self, f: &Elem) -> PointSet {
        self.full().minus(self.vanishing_of(f))
    }

    /// `Λ(p)`: the flat closure of a point, i.e. all primes contained in it.
    pub fn flat_point_closure(&self, i: usize) -> PointSet {
        self.down[i]
    }

    /// `V(p)`: the Zariski closure of a point, i.e. all primes containing it.
    pub fn zariski_point_closure(&self, i: usize) -> PointSet {
        self.up[i]
    }

    /// Whether `q ∈ E` for every `q ⊆ p ∈ E`.
    pub fn is_stable_generalization(&self, set: PointSet) -> bool {
        set.iter().all(|i| self.down[i].is_subset(set))
    }

    /// Whether `q ∈ E` for every `q ⊇ p ∈ E`.
    pub fn is_stable_specialization(&self, set: PointSet) -> bool {
        set.iter().all(|i| self.up[i].is_subset(set))
    }

    /// `F(E)`: union of the flat closures of the points of `E`.
    pub fn f_operator(&self, set: PointSet) -> PointSet {
        set.iter()
            .fold(PointSet::EMPTY, |acc, i| acc.union(self.flat_point_closure(i)))
    }

    /// `Z(E)`: union of the Zariski closures of the points of `E`.
    pub fn z_operator(&self, set: PointSet) -> PointSet {
        set.iter()
            .fold(PointSet::EMPTY, |acc, i| acc.union(self.zariski_point_closure(i)))
    }

    /// Intersection of the primes in `set`; the unit ideal for the empty set.
    pub fn intersection_ideal(&self, set: PointSet) -> Result<Ideal, SpectrumError> {
        let mut acc = self.ring.whole_ideal();
        for i in set.iter() {
            acc = acc.intersection(&self.points[i].ideal)?;
        }
        Ok(acc)
    }

    pub fn check_subset(&self, set: PointSet) -> Result<(), SpectrumError> {
        if set.is_subset(self.full()) {
            Ok(())
        } else {
            Err(SpectrumError::NotAPoint(format!("{set:?}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn zloc_z3() -> Ring {
        Ring::product(vec![
            Ring::localized_integers(2).unwrap(),
            Ring::modular(3).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn spectrum_of_z12() {
        let s = SpectrumPoset::enumerate(&Ring::modular(12).unwrap()).unwrap();
        assert_eq!(s.labels(s.full()), ["(2)", "(3)"]);
        assert!(s.strict_pairs().is_empty());
        assert!(s.points().iter().all(|p| p.is_minimal && p.is_maximal));
    }

    #[test]
    fn spectrum_of_field_and_local_ring() {
        let s = SpectrumPoset::enumerate(&Ring::galois_field(2, 2).unwrap()).unwrap();
        assert_eq!(s.labels(s.full()), ["(0)"]);
        let s = SpectrumPoset::enumerate(&Ring::localized_integers(2).unwrap()).unwrap();
        assert_eq!(s.labels(s.full()), ["(0)", "(2)"]);
        assert_eq!(s.strict_pairs(), [(0, 1)]);
        assert!(s.points()[0].is_minimal && !s.points()[0].is_maximal);
        assert!(s.points()[1].is_maximal && !s.points()[1].is_minimal);
    }

    #[test]
    fn boolean_sequences_have_no_enumerable_spectrum() {
        assert!(matches!(
            SpectrumPoset::enumerate(&Ring::eventually_constant_bits()),
            Err(SpectrumError::Ring(RingError::UnsupportedForPresentation { .. }))
        ));
    }

    #[test]
    fn mixed_product_spectrum() {
        let s = SpectrumPoset::enumerate(&zloc_z3()).unwrap();
        assert_eq!(s.labels(s.full()), ["(0)×(1)", "(2)×(1)", "(1)×(0)"]);
        assert_eq!(s.covering_pairs(), [(0, 1)]);
    }

    #[test]
    fn vanishing_loci() {
        let r = Ring::modular(12).unwrap();
        let s = SpectrumPoset::enumerate(&r).unwrap();
        let four = r.ideal(&[Elem::Int(4)]).unwrap();
        assert_eq!(s.labels(s.vanishing_locus(&four)), ["(2)"]);
        assert_eq!(s.vanishing_locus(&r.zero_ideal()), s.full());
        assert_eq!(s.vanishing_locus(&r.whole_ideal()), PointSet::EMPTY);
        assert_eq!(s.basic_open(&Elem::Int(4)), PointSet::singleton(1));
    }

    #[test]
    fn point_closures_and_operators() {
        let s = SpectrumPoset::enumerate(&Ring::localized_integers(2).unwrap()).unwrap();
        assert_eq!(s.flat_point_closure(1), s.full());
        assert_eq!(s.f_operator(PointSet::singleton(1)), s.full());
        assert_eq!(s.z_operator(PointSet::singleton(0)), s.full());
        assert_eq!(s.f_operator(PointSet::EMPTY), PointSet::EMPTY);
        assert_eq!(s.z_operator(PointSet::EMPTY), PointSet::EMPTY);
        assert!(s.is_stable_generalization(PointSet::singleton(0)));
        assert!(!s.is_stable_generalization(PointSet::singleton(1)));
        assert!(s.is_stable_specialization(PointSet::singleton(1)));
        assert!(s.is_stable_generalization(PointSet::EMPTY));
        assert!(s.is_stable_specialization(PointSet::EMPTY));

        let z12 = SpectrumPoset::enumerate(&Ring::modular(12).unwrap()).unwrap();
        assert_eq!(z12.flat_point_closure(0), PointSet::singleton(0));

        let mixed = SpectrumPoset::enumerate(&zloc_z3()).unwrap();
        // m = (2)×(1) generalizes to g = (0)×(1)
        assert_eq!(mixed.f_operator(PointSet::singleton(1)), PointSet(0b011));
        assert_eq!(mixed.z_operator(PointSet::singleton(0)), PointSet(0b011));
    }

    #[test]
    fn finite_products_match_brute_force() {
        let r = Ring::product(vec![Ring::modular(4).unwrap(), Ring::modular(3).unwrap()]).unwrap();
        let structural = SpectrumPoset::enumerate(&r).unwrap();
        let brute = SpectrumPoset::brute_force(&r).unwrap();
        let a: Vec<_> = structural.points().iter().map(|p| p.ideal.clone()).collect();
        let b: Vec<_> = brute.points().iter().map(|p| p.ideal.clone()).collect();
        assert_eq!(a, b);
    }
}
