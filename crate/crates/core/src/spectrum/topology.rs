use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{PointSet, SpectrumError, SpectrumPoset};

/// Closed-set families are materialized only up to this many points.
pub const FAMILY_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Topology {
    /// Sub-basic opens `D(f)`.
    Zariski,
    /// Sub-basic opens `V(f)`.
    Flat,
    /// Sub-basic opens `D(f) ∩ V(g)`.
    Patch,
}

impl Topology {
    pub const ALL: [Topology; 3] = [Topology::Zariski, Topology::Flat, Topology::Patch];

    pub fn name(self) -> &'static str {
        match self {
            Topology::Zariski => "zariski",
            Topology::Flat => "flat",
            Topology::Patch => "patch",
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Topology {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "zariski" => Ok(Topology::Zariski),
            "flat" => Ok(Topology::Flat),
            "patch" => Ok(Topology::Patch),
            other => Err(format!("unknown topology `{other}`")),
        }
    }
}

/// Every closed set of one topology on a finite spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFamily {
    pub topology: Topology,
    pub universe: PointSet,
    pub sets: BTreeSet<PointSet>,
}

impl ClosedFamily {
    /// Builds the family whose opens are generated by `subbasis`.
    ///
    /// On a finite space every point `x` has a smallest basic neighbourhood
    /// `N(x)`, the intersection of all sub-basic opens containing it, and a
    /// set is open exactly when it contains `N(x)` for each of its points.
    pub fn from_subbasis(topology: Topology, n: usize, subbasis: &[PointSet]) -> ClosedFamily {
        let universe = PointSet::full(n);
        let nbhd: Vec<PointSet> = (0..n)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(universe, |acc, s| acc.intersection(*s))
            })
            .collect();
        let sets = (0..1u64 << n)
            .map(PointSet)
            .filter(|u| u.iter().all(|x| nbhd[x].is_subset(*u)))
            .map(|u| universe.minus(u))
            .collect();
        ClosedFamily {
            topology,
            universe,
            sets,
        }
    }

    pub fn contains(&self, set: PointSet) -> bool {
        self.sets.contains(&set)
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.contains(self.universe.minus(set))
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.sets.iter().copied()
    }
}

impl SpectrumPoset {
    fn family_guard(&self) -> Result<(), SpectrumError> {
        if self.len() > FAMILY_LIMIT {
            Err(SpectrumError::SpectrumTooLarge {
                size: self.len(),
                limit: FAMILY_LIMIT,
            })
        } else {
            Ok(())
        }
    }

    /// The distinct sets `V(f)` as `f` runs over the ring.
    pub fn principal_loci(&self) -> Result<BTreeSet<PointSet>, SpectrumError> {
        Ok(self
            .ring()
            .representative_elements()?
            .iter()
            .map(|f| self.vanishing_of(f))
            .collect())
    }

    /// Sub-basic opens of a topology, deduplicated.
    pub fn subbasis(&self, topology: Topology) -> Result<Vec<PointSet>, SpectrumError> {
        let loci = self.principal_loci()?;
        let full = self.full();
        let sets: BTreeSet<PointSet> = match topology {
            Topology::Zariski => loci.iter().map(|v| full.minus(*v)).collect(),
            Topology::Flat => loci.clone(),
            Topology::Patch => loci
                .iter()
                .flat_map(|vf| loci.iter().map(move |vg| full.minus(*vf).intersection(*vg)))
                .collect(),
        };
        Ok(sets.into_iter().collect())
    }

    /// All closed sets of the named topology, generated from its sub-basis.
    pub fn closed_family(&self, topology: Topology) -> Result<ClosedFamily, SpectrumError> {
        self.family_guard()?;
        let subbasis = self.subbasis(topology)?;
        Ok(ClosedFamily::from_subbasis(topology, self.len(), &subbasis))
    }

    /// Flat closed sets generated instead from the basis `V(I)` with `I`
    /// finitely generated. Must agree with [`Self::closed_family`] for
    /// [`Topology::Flat`].
    pub fn flat_family_from_ideal_basis(&self) -> Result<ClosedFamily, SpectrumError> {
        self.family_guard()?;
        let basis: BTreeSet<PointSet> = self
            .ring()
            .representative_ideals()?
            .iter()
            .map(|i| self.vanishing_locus(i))
            .collect();
        let basis: Vec<PointSet> = basis.into_iter().collect();
        Ok(ClosedFamily::from_subbasis(Topology::Flat, self.len(), &basis))
    }

    /// Sets closed in both the Zariski and the flat topology.
    pub fn double_closed(&self) -> Result<Vec<PointSet>, SpectrumError> {
        let zariski = self.closed_family(Topology::Zariski)?;
        let flat = self.closed_family(Topology::Flat)?;
        Ok(zariski.iter().filter(|s| flat.contains(*s)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn spec(ring: Ring) -> SpectrumPoset {
        SpectrumPoset::enumerate(&ring).unwrap()
    }

    #[test]
    fn flat_family_of_local_ring() {
        let s = spec(Ring::localized_integers(2).unwrap());
        let flat = s.closed_family(Topology::Flat).unwrap();
        let expected: BTreeSet<PointSet> =
            [PointSet::EMPTY, PointSet::singleton(0), s.full()].into();
        assert_eq!(flat.sets, expected);
        let zar = s.closed_family(Topology::Zariski).unwrap();
        let expected: BTreeSet<PointSet> =
            [PointSet::EMPTY, PointSet::singleton(1), s.full()].into();
        assert_eq!(zar.sets, expected);
    }

    #[test]
    fn patch_family_of_z12_is_power_set() {
        let s = spec(Ring::modular(12).unwrap());
        assert_eq!(s.closed_family(Topology::Patch).unwrap().len(), 4);
    }

    #[test]
    fn one_point_space() {
        let s = spec(Ring::galois_field(2, 2).unwrap());
        let zar = s.closed_family(Topology::Zariski).unwrap();
        assert_eq!(zar.sets, [PointSet::EMPTY, s.full()].into());
    }

    #[test]
    fn zero_ring_has_empty_spectrum() {
        let s = spec(Ring::modular(1).unwrap());
        assert!(s.is_empty());
        let fam = s.closed_family(Topology::Patch).unwrap();
        assert_eq!(fam.sets, [PointSet::EMPTY].into());
    }

    #[test]
    fn ideal_basis_agrees_with_element_subbasis() {
        for ring in [
            Ring::modular(12).unwrap(),
            Ring::localized_integers(3).unwrap(),
            Ring::product(vec![Ring::localized_integers(2).unwrap(), Ring::modular(3).unwrap()])
                .unwrap(),
        ] {
            let s = spec(ring);
            assert_eq!(
                s.closed_family(Topology::Flat).unwrap(),
                s.flat_family_from_ideal_basis().unwrap()
            );
        }
    }

    #[test]
    fn parse_topology_names() {
        assert_eq!("Flat".parse::<Topology>().unwrap(), Topology::Flat);
        assert!("discrete".parse::<Topology>().is_err());
    }
}
