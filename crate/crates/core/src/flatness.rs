//! Flatness and projectivity of cyclic modules `R/I`.
//!
//! `R/I` is flat exactly when `Ann(f) + I = R` for every `f ∈ I`; the
//! certificates below record, for each tested `f`, a pair `a ∈ Ann(f)`,
//! `b ∈ I` with `a + b = 1`. A cyclic quotient is projective exactly when `I`
//! is generated by one idempotent.

use thiserror::Error;

use crate::ring::{BoolIdeal, Elem, Ideal, IdealRepr, LocalIdeal, Ring, RingError};
use crate::spectrum::{PointSet, SpectrumError, SpectrumPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlatnessError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("R/{ideal} is not flat: Ann({failing}) + {ideal} is a proper ideal")]
    NotFlat { ideal: String, failing: String },
    #[error("{element} does not lie in {ideal}")]
    NotMember { element: String, ideal: String },
    #[error("{set:?} is not stable under generalization")]
    NotGenStable { set: Vec<String> },
    #[error("{set:?} is not Zariski closed")]
    NotZariskiClosed { set: Vec<String> },
    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

/// `a ∈ Ann(f)` and `b ∈ I` with `a + b = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatWitness {
    pub f: Elem,
    pub a: Elem,
    pub b: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessCertificate {
    pub ideal: Ideal,
    pub verdict: bool,
    /// One witness per tested member when the verdict is positive.
    pub witnesses: Vec<FlatWitness>,
    /// The member `f` for which `Ann(f) + I` is proper.
    pub failing: Option<Elem>,
    /// For infinite rings, the argument that makes the finite witness list
    /// conclusive.
    pub schema: Option<&'static str>,
}

const LOCAL_SCHEMA: &str = "Z_(p) is a domain: Ann(f) = 0 for f != 0, so Ann(f) + I = R \
                            holds for every f in I exactly when I = 0 or I = R";
const BOOLEAN_SCHEMA: &str = "Boolean ring: a = 1 + f annihilates f and b = f lies in I, \
                              so a + b = 1 for every f in I";
const PRODUCT_SCHEMA: &str = "direct product: Ann(f) + I = R holds componentwise, and the \
                              sampled members realize every combination of component cases";

fn schema_for(ideal: &Ideal) -> Option<&'static str> {
    match ideal.repr() {
        IdealRepr::Explicit(_) => None,
        IdealRepr::Local(_) => Some(LOCAL_SCHEMA),
        IdealRepr::Product(_) => Some(PRODUCT_SCHEMA),
        IdealRepr::Boolean(_) => Some(BOOLEAN_SCHEMA),
    }
}

/// Find `(a, b)` with `a·f = 0`, `b ∈ I`, `a + b = 1`, if any.
fn witness_pair(ring: &Ring, ideal: &Ideal, f: &Elem) -> Result<Option<(Elem, Elem)>, FlatnessError> {
    match ideal.repr() {
        IdealRepr::Explicit(_) => {
            let ann = ring.annihilator(f)?;
            Ok(ann.elements()?.into_iter().find_map(|a| {
                let b = ring.one_minus(&a);
                ideal.contains(&b).then_some((a, b))
            }))
        }
        IdealRepr::Local(level) => Ok(if ring.is_zero(f) {
            Some((ring.one(), ring.zero()))
        } else if *level == LocalIdeal::Power(0) {
            Some((ring.zero(), ring.one()))
        } else {
            None
        }),
        IdealRepr::Product(parts) => {
            let (Some(factors), Elem::Tuple(fs)) = (ring.factors(), f) else {
                unreachable!("product ideal in a product ring")
            };
            let mut a = Vec::new();
            let mut b = Vec::new();
            for ((factor, part), x) in factors.iter().zip(parts).zip(fs) {
                match witness_pair(factor, part, x)? {
                    Some((ai, bi)) => {
                        a.push(ai);
                        b.push(bi);
                    }
                    None => return Ok(None),
                }
            }
            Ok(Some((Elem::Tuple(a), Elem::Tuple(b))))
        }
        IdealRepr::Boolean(_) => Ok(Some((ring.one_minus(f), f.clone()))),
    }
}

/// Decide whether `R/I` is flat, with witnesses.
pub fn is_cyclic_flat(ring: &Ring, ideal: &Ideal) -> Result<FlatnessCertificate, FlatnessError> {
    let mut witnesses = Vec::new();
    for f in ideal.representative_members() {
        match witness_pair(ring, ideal, &f)? {
            Some((a, b)) => witnesses.push(FlatWitness { f, a, b }),
            None => {
                return Ok(FlatnessCertificate {
                    ideal: ideal.clone(),
                    verdict: false,
                    witnesses: Vec::new(),
                    failing: Some(f),
                    schema: schema_for(ideal),
                })
            }
        }
    }
    Ok(FlatnessCertificate {
        ideal: ideal.clone(),
        verdict: true,
        witnesses,
        failing: None,
        schema: schema_for(ideal),
    })
}

impl FlatnessCertificate {
    /// Re-verify the certificate without going through the witness search:
    /// witnesses are re-multiplied, and a failure is confirmed by checking
    /// that the ideal sum `Ann(f) + I` misses 1.
    pub fn recheck(&self) -> Result<bool, FlatnessError> {
        let ring = self.ideal.ring();
        if self.verdict {
            let ok = self.witnesses.iter().all(|w| {
                self.ideal.contains(&w.f)
                    && ring.is_zero(&ring.mul(&w.a, &w.f))
                    && self.ideal.contains(&w.b)
                    && ring.add(&w.a, &w.b) == ring.one()
            });
            let covered = self.ideal.representative_members().len() == self.witnesses.len();
            Ok(ok && covered && self.failing.is_none())
        } else {
            let Some(f) = &self.failing else {
                return Ok(false);
            };
            Ok(self.ideal.contains(f) && !ring.annihilator(f)?.sum(&self.ideal)?.is_whole())
        }
    }
}

/// Given finitely many members of a flat-quotient ideal, return `g ∈ I` with
/// `f_i = f_i·g` for all `i`. Per-element multipliers `h` come from the
/// flatness witnesses (`f = f·b`) and are folded pairwise, in input order,
/// with `g := h + h' - h·h'`.
pub fn lemma9_witness(ring: &Ring, ideal: &Ideal, fs: &[Elem]) -> Result<Elem, FlatnessError> {
    let cert = is_cyclic_flat(ring, ideal)?;
    if !cert.verdict {
        return Err(FlatnessError::NotFlat {
            ideal: ideal.name(),
            failing: cert.failing.map(|f| f.to_string()).unwrap_or_default(),
        });
    }
    let mut g: Option<Elem> = None;
    for f in fs {
        ring.check(f)?;
        if !ideal.contains(f) {
            return Err(FlatnessError::NotMember {
                element: f.to_string(),
                ideal: ideal.name(),
            });
        }
        let (_, h) = witness_pair(ring, ideal, f)?.ok_or_else(|| {
            FlatnessError::Postcondition(format!("no multiplier for {f} in a flat quotient"))
        })?;
        g = Some(match g {
            None => h,
            Some(prev) => ring.sub(&ring.add(&prev, &h), &ring.mul(&prev, &h)),
        });
    }
    Ok(g.unwrap_or_else(|| ring.zero()))
}

/// An idempotent `e` with `I = Re`, if there is one.
pub fn idempotent_generator(ring: &Ring, ideal: &Ideal) -> Result<Option<Elem>, FlatnessError> {
    match ideal.repr() {
        IdealRepr::Explicit(_) => {
            for e in ring.idempotents()? {
                if ring.ideal(std::slice::from_ref(&e))? == *ideal {
                    return Ok(Some(e));
                }
            }
            Ok(None)
        }
        IdealRepr::Local(LocalIdeal::Zero) => Ok(Some(ring.zero())),
        IdealRepr::Local(LocalIdeal::Power(0)) => Ok(Some(ring.one())),
        IdealRepr::Local(_) => Ok(None),
        IdealRepr::Product(parts) => {
            let factors = ring.factors().expect("product ring");
            let mut es = Vec::new();
            for (factor, part) in factors.iter().zip(parts) {
                match idempotent_generator(factor, part)? {
                    Some(e) => es.push(e),
                    None => return Ok(None),
                }
            }
            Ok(Some(Elem::Tuple(es)))
        }
        IdealRepr::Boolean(BoolIdeal::Principal(e)) => Ok(Some(Elem::Bits(e.clone()))),
        IdealRepr::Boolean(BoolIdeal::FinitelySupported) => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projectivity {
    pub projective: bool,
    pub generator: Option<Elem>,
    pub reason: String,
}

/// `R/I` is projective iff `I = Re` for an idempotent `e`, and then
/// `R/I ≅ R(1-e)`.
pub fn is_cyclic_projective(ring: &Ring, ideal: &Ideal) -> Result<Projectivity, FlatnessError> {
    if let IdealRepr::Boolean(BoolIdeal::FinitelySupported) = ideal.repr() {
        return Ok(Projectivity {
            projective: false,
            generator: None,
            reason: "no single generator: I is a strictly increasing union".into(),
        });
    }
    Ok(match idempotent_generator(ring, ideal)? {
        Some(e) => Projectivity {
            projective: true,
            reason: format!("I = R·{e} with {e} idempotent, so R/I is isomorphic to R(1 - {e})"),
            generator: Some(e),
        },
        None => Projectivity {
            projective: false,
            generator: None,
            reason: "I is not generated by an idempotent".into(),
        },
    })
}

/// For `E` Zariski closed and stable under generalization, the ideal
/// `J = ker(R -> S^{-1}R)` with `S = 1 + I`, where `I` is the intersection of
/// the primes in `E`. Then `V(J) = E` and `R/J` is flat.
pub fn closed_genstable_to_flat_ideal(
    spectrum: &SpectrumPoset,
    set: PointSet,
) -> Result<Ideal, FlatnessError> {
    spectrum.check_subset(set)?;
    if !spectrum.is_stable_generalization(set) {
        return Err(FlatnessError::NotGenStable {
            set: spectrum.labels(set),
        });
    }
    let ring = spectrum.ring();
    let ideal = spectrum.intersection_ideal(set)?;
    if spectrum.vanishing_locus(&ideal) != set {
        return Err(FlatnessError::NotZariskiClosed {
            set: spectrum.labels(set),
        });
    }
    let kernel = ring.saturation_kernel(&ideal)?;
    if spectrum.vanishing_locus(&kernel) != set {
        return Err(FlatnessError::Postcondition(format!(
            "V({}) differs from {:?}",
            kernel.name(),
            spectrum.labels(set)
        )));
    }
    if !is_cyclic_flat(ring, &kernel)?.verdict {
        return Err(FlatnessError::Postcondition(format!(
            "R/{} is not flat",
            kernel.name()
        )));
    }
    Ok(kernel)
}

/// `Supp(I) = {p : I_p ≠ 0} = {p : Ann(f) ⊆ p for some f ∈ I}`.
pub fn support_of_ideal(spectrum: &SpectrumPoset, ideal: &Ideal) -> Result<PointSet, FlatnessError> {
    let ring = spectrum.ring();
    let mut support = PointSet::EMPTY;
    for f in ideal.representative_members() {
        let ann = ring.annihilator(&f)?;
        for (i, point) in spectrum.points().iter().enumerate() {
            if ann.is_subset(&point.ideal) {
                support.insert(i);
            }
        }
    }
    Ok(support)
}
