//! Exact arithmetic and ideal theory for the supported ring presentations.
//!
//! Six presentations are supported: `Z/n`, Galois fields `GF(p^k)`, quotients
//! `Z/p[x]/(f)`, finite direct products, the localization `Z_(p)` and the
//! Boolean ring of eventually constant bit sequences. A [`Ring`] is an
//! immutable, cheaply clonable handle; every element is kept in canonical form
//! so that equality is structural.

mod element;
mod ideal;
mod poly;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use element::{BitSeq, Elem, Residue};
pub use ideal::{BoolIdeal, Ideal, IdealRepr, LocalIdeal};
pub use poly::Poly;

/// Finite rings up to this size cache full addition and multiplication tables.
pub const TABLE_LIMIT: u64 = 4096;

/// Exhaustive enumeration (elements, ideals) is refused above this size.
pub const ENUMERATION_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{op} is not supported for {presentation}")]
    UnsupportedForPresentation { op: &'static str, presentation: String },
    #[error("a direct product needs at least one factor")]
    EmptyProduct,
    #[error("{value} is not prime (divisible by {factor})")]
    NotPrime { value: u64, factor: u64 },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("{poly} is not irreducible over Z/{p} (divisible by {factor})")]
    NotIrreducible { p: u64, poly: String, factor: String },
    #[error("{poly} is not monic of positive degree")]
    NotMonic { poly: String },
    #[error("{element} is not an element of {ring}")]
    ForeignElement { element: String, ring: String },
    #[error("ring of order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: String, limit: u64 },
    #[error("element set is not an ideal: {reason}")]
    NotAnIdeal { reason: String },
}

/// How a ring is presented. This is the user-facing description; [`Ring`]
/// validates it and adds the derived data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingPresentation {
    ModularInt(u64),
    GaloisField { p: u64, modulus: Poly },
    PolyQuotient { p: u64, modulus: Poly },
    Product(Vec<RingPresentation>),
    LocalizedIntegers(u64),
    EventuallyConstantBits,
}

impl RingPresentation {
    pub fn is_finite(&self) -> bool {
        match self {
            RingPresentation::ModularInt(_)
            | RingPresentation::GaloisField { .. }
            | RingPresentation::PolyQuotient { .. } => true,
            RingPresentation::Product(factors) => factors.iter().all(Self::is_finite),
            RingPresentation::LocalizedIntegers(_) | RingPresentation::EventuallyConstantBits => {
                false
            }
        }
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingPresentation::ModularInt(n) => write!(f, "Z/{n}"),
            RingPresentation::GaloisField { p, modulus } => {
                let k = modulus.degree().unwrap_or(0) as u32;
                write!(f, "GF({})", p.pow(k))
            }
            RingPresentation::PolyQuotient { p, modulus } => write!(f, "Z/{p}[x]/({modulus})"),
            RingPresentation::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
            RingPresentation::LocalizedIntegers(p) => write!(f, "Zloc({p})"),
            RingPresentation::EventuallyConstantBits => write!(f, "EvBits"),
        }
    }
}

/// Smallest prime factor of `n` by trial division, `None` for `n < 2`.
pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

pub fn check_prime(n: u64) -> Result<(), RingError> {
    match smallest_prime_factor(n) {
        Some(d) if d == n => Ok(()),
        Some(d) => Err(RingError::NotPrime { value: n, factor: d }),
        None => Err(RingError::NotPrime { value: n, factor: n }),
    }
}

#[derive(Debug)]
enum Kind {
    Modular(u64),
    Quotient { p: u64, modulus: Poly, degree: usize },
    Product(Vec<Ring>),
    Local(u64),
    Bits,
}

struct Tables {
    elements: Vec<Elem>,
    add: Vec<u16>,
    mul: Vec<u16>,
}

struct Inner {
    presentation: RingPresentation,
    kind: Kind,
    order: Option<u64>,
    tables: OnceLock<Option<Tables>>,
}

/// A validated commutative ring. Cloning shares the underlying data.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.presentation == other.0.presentation
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.presentation)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.presentation)
    }
}

impl Ring {
    pub fn new(presentation: RingPresentation) -> Result<Ring, RingError> {
        let (kind, order) = match &presentation {
            RingPresentation::ModularInt(n) => {
                if *n == 0 {
                    return Err(RingError::ZeroModulus);
                }
                (Kind::Modular(*n), Some(*n))
            }
            RingPresentation::GaloisField { p, modulus } => {
                check_prime(*p)?;
                check_modulus(*p, modulus)?;
                if let Some(factor) = modulus.find_factor() {
                    return Err(RingError::NotIrreducible {
                        p: *p,
                        poly: modulus.to_string(),
                        factor: factor.to_string(),
                    });
                }
                quotient_kind(*p, modulus)
            }
            RingPresentation::PolyQuotient { p, modulus } => {
                check_prime(*p)?;
                check_modulus(*p, modulus)?;
                quotient_kind(*p, modulus)
            }
            RingPresentation::Product(factors) => {
                if factors.is_empty() {
                    return Err(RingError::EmptyProduct);
                }
                let rings = factors
                    .iter()
                    .map(|f| Ring::new(f.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(bad) = rings.iter().find(|r| matches!(r.0.kind, Kind::Bits)) {
                    return Err(RingError::UnsupportedForPresentation {
                        op: "direct product",
                        presentation: bad.to_string(),
                    });
                }
                let order = rings
                    .iter()
                    .try_fold(1u64, |acc, r| r.order().and_then(|o| acc.checked_mul(o)));
                (Kind::Product(rings), order)
            }
            RingPresentation::LocalizedIntegers(p) => {
                check_prime(*p)?;
                (Kind::Local(*p), None)
            }
            RingPresentation::EventuallyConstantBits => (Kind::Bits, None),
        };
        Ok(Ring(Arc::new(Inner {
            presentation,
            kind,
            order,
            tables: OnceLock::new(),
        })))
    }

    /// Direct product of already-built rings. A single factor is returned
    /// unchanged.
    pub fn product(factors: Vec<Ring>) -> Result<Ring, RingError> {
        match factors.len() {
            0 => Err(RingError::EmptyProduct),
            1 => Ok(factors.into_iter().next().unwrap()),
            _ => Ring::new(RingPresentation::Product(
                factors.iter().map(|r| r.presentation().clone()).collect(),
            )),
        }
    }

    pub fn modular(n: u64) -> Result<Ring, RingError> {
        Ring::new(RingPresentation::ModularInt(n))
    }

    pub fn galois_field(p: u64, degree: usize) -> Result<Ring, RingError> {
        check_prime(p)?;
        Ring::new(RingPresentation::GaloisField {
            p,
            modulus: Poly::least_irreducible(p, degree),
        })
    }

    pub fn poly_quotient(p: u64, modulus: Poly) -> Result<Ring, RingError> {
        Ring::new(RingPresentation::PolyQuotient { p, modulus })
    }

    pub fn localized_integers(p: u64) -> Result<Ring, RingError> {
        Ring::new(RingPresentation::LocalizedIntegers(p))
    }

    pub fn eventually_constant_bits() -> Ring {
        Ring::new(RingPresentation::EventuallyConstantBits).expect("always valid")
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.0.presentation
    }

    pub fn is_finite(&self) -> bool {
        self.0.order.is_some()
    }

    pub fn order(&self) -> Option<u64> {
        self.0.order
    }

    /// Factors of a product presentation, `None` otherwise.
    pub fn factors(&self) -> Option<&[Ring]> {
        match &self.0.kind {
            Kind::Product(fs) => Some(fs),
            _ => None,
        }
    }

    pub fn local_prime(&self) -> Option<u64> {
        match self.0.kind {
            Kind::Local(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_boolean_sequences(&self) -> bool {
        matches!(self.0.kind, Kind::Bits)
    }

    pub(crate) fn unsupported(&self, op: &'static str) -> RingError {
        RingError::UnsupportedForPresentation {
            op,
            presentation: self.to_string(),
        }
    }

    pub fn zero(&self) -> Elem {
        match &self.0.kind {
            Kind::Modular(_) => Elem::Int(0),
            Kind::Quotient { degree, .. } => Elem::Poly(Residue(vec![0; *degree])),
            Kind::Product(fs) => Elem::Tuple(fs.iter().map(Ring::zero).collect()),
            Kind::Local(_) => Elem::Frac(BigRational::zero()),
            Kind::Bits => Elem::Bits(BitSeq::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        match &self.0.kind {
            Kind::Modular(n) => Elem::Int(1 % n),
            Kind::Quotient { degree, .. } => {
                let mut c = vec![0; *degree];
                c[0] = 1;
                Elem::Poly(Residue(c))
            }
            Kind::Product(fs) => Elem::Tuple(fs.iter().map(Ring::one).collect()),
            Kind::Local(_) => Elem::Frac(BigRational::one()),
            Kind::Bits => Elem::Bits(BitSeq::one()),
        }
    }

    /// Reduce an integer into the ring (the image of `n` under `Z -> R`).
    pub fn from_integer(&self, n: i64) -> Elem {
        match &self.0.kind {
            Kind::Modular(m) => Elem::Int(n.rem_euclid(*m as i64) as u64),
            Kind::Quotient { p, degree, .. } => {
                let mut c = vec![0; *degree];
                c[0] = n.rem_euclid(*p as i64) as u64;
                Elem::Poly(Residue(c))
            }
            Kind::Product(fs) => Elem::Tuple(fs.iter().map(|f| f.from_integer(n)).collect()),
            Kind::Local(_) => Elem::integer(n),
            Kind::Bits => {
                if n.rem_euclid(2) == 1 {
                    Elem::Bits(BitSeq::one())
                } else {
                    Elem::Bits(BitSeq::zero())
                }
            }
        }
    }

    /// Whether `e` has the shape and canonical form of an element of this ring.
    pub fn contains(&self, e: &Elem) -> bool {
        match (&self.0.kind, e) {
            (Kind::Modular(n), Elem::Int(r)) => r < n,
            (Kind::Quotient { p, degree, .. }, Elem::Poly(Residue(c))) => {
                c.len() == *degree && c.iter().all(|x| x < p)
            }
            (Kind::Product(fs), Elem::Tuple(parts)) => {
                fs.len() == parts.len() && fs.iter().zip(parts).all(|(f, x)| f.contains(x))
            }
            (Kind::Local(p), Elem::Frac(q)) => {
                (q.denom() % BigInt::from(*p)) != BigInt::zero()
            }
            (Kind::Bits, Elem::Bits(_)) => true,
            _ => false,
        }
    }

    pub fn check(&self, e: &Elem) -> Result<(), RingError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(RingError::ForeignElement {
                element: e.to_string(),
                ring: self.to_string(),
            })
        }
    }

    /// Sum. Panics if an argument is not an element of this ring.
    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Modular(n), Elem::Int(x), Elem::Int(y)) => {
                Elem::Int(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (Kind::Quotient { p, .. }, Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(Residue(
                x.0.iter().zip(&y.0).map(|(a, b)| (a + b) % p).collect(),
            )),
            (Kind::Product(fs), Elem::Tuple(xs), Elem::Tuple(ys)) => Elem::Tuple(
                fs.iter()
                    .zip(xs.iter().zip(ys))
                    .map(|(f, (x, y))| f.add(x, y))
                    .collect(),
            ),
            (Kind::Local(_), Elem::Frac(x), Elem::Frac(y)) => Elem::Frac(x + y),
            (Kind::Bits, Elem::Bits(x), Elem::Bits(y)) => Elem::Bits(x.xor(y)),
            _ => panic!("{a} or {b} is not an element of {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&self.0.kind, a) {
            (Kind::Modular(n), Elem::Int(x)) => Elem::Int((n - x) % n),
            (Kind::Quotient { p, .. }, Elem::Poly(x)) => {
                Elem::Poly(Residue(x.0.iter().map(|c| (p - c) % p).collect()))
            }
            (Kind::Product(fs), Elem::Tuple(xs)) => {
                Elem::Tuple(fs.iter().zip(xs).map(|(f, x)| f.neg(x)).collect())
            }
            (Kind::Local(_), Elem::Frac(x)) => Elem::Frac(-x),
            (Kind::Bits, Elem::Bits(x)) => Elem::Bits(x.clone()),
            _ => panic!("{a} is not an element of {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    /// Product. Panics if an argument is not an element of this ring.
    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Modular(n), Elem::Int(x), Elem::Int(y)) => {
                Elem::Int(((*x as u128 * *y as u128) % *n as u128) as u64)
            }
            (
                Kind::Quotient {
                    p, modulus, degree, ..
                },
                Elem::Poly(x),
                Elem::Poly(y),
            ) => {
                let prod = Poly::new(*p, x.0.clone())
                    .mul(&Poly::new(*p, y.0.clone()))
                    .rem_monic(modulus);
                Elem::Poly(Residue((0..*degree).map(|i| prod.coeff(i)).collect()))
            }
            (Kind::Product(fs), Elem::Tuple(xs), Elem::Tuple(ys)) => Elem::Tuple(
                fs.iter()
                    .zip(xs.iter().zip(ys))
                    .map(|(f, (x, y))| f.mul(x, y))
                    .collect(),
            ),
            (Kind::Local(_), Elem::Frac(x), Elem::Frac(y)) => Elem::Frac(x * y),
            (Kind::Bits, Elem::Bits(x), Elem::Bits(y)) => Elem::Bits(x.and(y)),
            _ => panic!("{a} or {b} is not an element of {self}"),
        }
    }

    pub fn pow(&self, a: &Elem, k: u32) -> Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *a == self.zero()
    }

    pub fn is_idempotent(&self, e: &Elem) -> bool {
        self.mul(e, e) == *e
    }

    /// `1 - a`
    pub fn one_minus(&self, a: &Elem) -> Elem {
        self.sub(&self.one(), a)
    }

    /// p-adic valuation of a nonzero element of `Z_(p)`.
    pub fn valuation(&self, a: &Elem) -> Option<u32> {
        let (Kind::Local(p), Elem::Frac(q)) = (&self.0.kind, a) else {
            return None;
        };
        if q.is_zero() {
            return None;
        }
        let p = BigInt::from(*p);
        let mut num = q.numer().abs();
        let mut v = 0;
        while num.is_multiple_of(&p) {
            num /= &p;
            v += 1;
        }
        Some(v)
    }

    // ---- finite rings: index encoding -------------------------------------

    pub(crate) fn enumerable_order(&self) -> Result<usize, RingError> {
        match self.0.order {
            Some(o) if o <= ENUMERATION_LIMIT => Ok(o as usize),
            Some(o) => Err(RingError::TooLarge {
                order: o.to_string(),
                limit: ENUMERATION_LIMIT,
            }),
            None => Err(self.unsupported("element enumeration")),
        }
    }

    /// Position of `e` in the canonical enumeration of a finite ring.
    pub fn index_of(&self, e: &Elem) -> usize {
        match (&self.0.kind, e) {
            (Kind::Modular(_), Elem::Int(r)) => *r as usize,
            (Kind::Quotient { p, .. }, Elem::Poly(Residue(c))) => c
                .iter()
                .rev()
                .fold(0usize, |acc, &x| acc * *p as usize + x as usize),
            (Kind::Product(fs), Elem::Tuple(parts)) => fs.iter().zip(parts).fold(0, |acc, (f, x)| {
                acc * f.order().expect("finite factor") as usize + f.index_of(x)
            }),
            _ => panic!("index_of on {e} in {self}"),
        }
    }

    /// Inverse of [`Ring::index_of`].
    pub fn element_at(&self, mut index: usize) -> Elem {
        match &self.0.kind {
            Kind::Modular(_) => Elem::Int(index as u64),
            Kind::Quotient { p, degree, .. } => {
                let p = *p as usize;
                let mut c = Vec::with_capacity(*degree);
                for _ in 0..*degree {
                    c.push((index % p) as u64);
                    index /= p;
                }
                Elem::Poly(Residue(c))
            }
            Kind::Product(fs) => {
                let mut parts = Vec::with_capacity(fs.len());
                for f in fs.iter().rev() {
                    let o = f.order().expect("finite factor") as usize;
                    parts.push(f.element_at(index % o));
                    index /= o;
                }
                parts.reverse();
                Elem::Tuple(parts)
            }
            _ => panic!("element_at on infinite ring {self}"),
        }
    }

    /// All elements of a finite ring, in index order.
    pub fn elements(&self) -> Result<Vec<Elem>, RingError> {
        let n = self.enumerable_order()?;
        if let Some(t) = self.tables() {
            return Ok(t.elements.clone());
        }
        Ok((0..n).map(|i| self.element_at(i)).collect())
    }

    fn tables(&self) -> Option<&Tables> {
        self.0
            .tables
            .get_or_init(|| {
                let n = self.0.order.filter(|&o| o <= TABLE_LIMIT)? as usize;
                let elements: Vec<Elem> = (0..n).map(|i| self.element_at(i)).collect();
                let mut add = Vec::with_capacity(n * n);
                let mut mul = Vec::with_capacity(n * n);
                for a in &elements {
                    for b in &elements {
                        add.push(self.index_of(&self.add(a, b)) as u16);
                        mul.push(self.index_of(&self.mul(a, b)) as u16);
                    }
                }
                Some(Tables { elements, add, mul })
            })
            .as_ref()
    }

    pub(crate) fn add_idx(&self, a: usize, b: usize, n: usize) -> usize {
        match self.tables() {
            Some(t) => t.add[a * n + b] as usize,
            None => self.index_of(&self.add(&self.element_at(a), &self.element_at(b))),
        }
    }

    pub(crate) fn mul_idx(&self, a: usize, b: usize, n: usize) -> usize {
        match self.tables() {
            Some(t) => t.mul[a * n + b] as usize,
            None => self.index_of(&self.mul(&self.element_at(a), &self.element_at(b))),
        }
    }

    pub(crate) fn one_idx(&self) -> usize {
        self.index_of(&self.one())
    }

    // ---- finite sampling of infinite rings -------------------------------

    /// A finite set of elements on which every question about `V(f)`,
    /// annihilators and flatness witnesses already takes all of its possible
    /// answers. For finite rings this is every element; for `Z_(p)` it is
    /// `{0, 1, p}` (zero, a unit, a non-unit); products take the cartesian
    /// product of their factors' samples.
    pub fn representative_elements(&self) -> Result<Vec<Elem>, RingError> {
        match &self.0.kind {
            Kind::Local(p) => Ok(vec![
                Elem::integer(0),
                Elem::integer(1),
                Elem::integer(*p as i64),
            ]),
            Kind::Product(fs) if !self.is_finite() => {
                let per: Vec<Vec<Elem>> = fs
                    .iter()
                    .map(Ring::representative_elements)
                    .collect::<Result<_, _>>()?;
                Ok(cartesian(&per).into_iter().map(Elem::Tuple).collect())
            }
            Kind::Bits => Err(self.unsupported("representative elements")),
            _ => self.elements(),
        }
    }

    /// All idempotents, sorted. Finite for every presentation except the
    /// Boolean sequence ring, where every element is idempotent.
    pub fn idempotents(&self) -> Result<Vec<Elem>, RingError> {
        match &self.0.kind {
            Kind::Local(_) => Ok(vec![Elem::integer(0), Elem::integer(1)]),
            Kind::Product(fs) if !self.is_finite() => {
                let per: Vec<Vec<Elem>> =
                    fs.iter().map(Ring::idempotents).collect::<Result<_, _>>()?;
                let mut all: Vec<Elem> = cartesian(&per).into_iter().map(Elem::Tuple).collect();
                all.sort();
                Ok(all)
            }
            Kind::Bits => Err(self.unsupported("listing idempotents (all elements are)")),
            _ => {
                let n = self.enumerable_order()?;
                Ok((0..n)
                    .filter(|&i| self.mul_idx(i, i, n) == i)
                    .map(|i| self.element_at(i))
                    .collect())
            }
        }
    }

    /// Nonzero idempotents that admit no smaller nonzero idempotent below
    /// them (`f·e = f`). They sum to 1 and are pairwise orthogonal.
    pub fn primitive_idempotents(&self) -> Result<Vec<Elem>, RingError> {
        let all = self.idempotents()?;
        let zero = self.zero();
        Ok(all
            .iter()
            .filter(|e| **e != zero)
            .filter(|e| {
                !all.iter()
                    .any(|f| *f != zero && f != *e && self.mul(f, e) == *f)
            })
            .cloned()
            .collect())
    }
}

fn check_modulus(p: u64, modulus: &Poly) -> Result<(), RingError> {
    if modulus.characteristic() != p || !modulus.is_monic() || modulus.degree() == Some(0) {
        return Err(RingError::NotMonic {
            poly: modulus.to_string(),
        });
    }
    Ok(())
}

fn quotient_kind(p: u64, modulus: &Poly) -> (Kind, Option<u64>) {
    let degree = modulus.degree().expect("checked monic");
    let order = p.checked_pow(degree as u32);
    (
        Kind::Quotient {
            p,
            modulus: modulus.clone(),
            degree,
        },
        order,
    )
}

pub(crate) fn cartesian(per: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    per.iter().fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(Ring::modular(0).unwrap_err(), RingError::ZeroModulus);
        assert!(matches!(
            Ring::localized_integers(6),
            Err(RingError::NotPrime { value: 6, factor: 2 })
        ));
        let reducible = Poly::new(2, vec![0, 1, 1]);
        assert!(matches!(
            Ring::new(RingPresentation::GaloisField { p: 2, modulus: reducible.clone() }),
            Err(RingError::NotIrreducible { .. })
        ));
        assert!(Ring::poly_quotient(2, reducible).is_ok());
        assert_eq!(Ring::product(vec![]).unwrap_err(), RingError::EmptyProduct);
        assert!(Ring::new(RingPresentation::Product(vec![
            RingPresentation::ModularInt(2),
            RingPresentation::EventuallyConstantBits,
        ]))
        .is_err());
    }

    #[test]
    fn finiteness_flags() {
        assert!(z(12).is_finite());
        assert!(Ring::galois_field(2, 2).unwrap().is_finite());
        assert!(!Ring::localized_integers(2).unwrap().is_finite());
        assert!(!Ring::eventually_constant_bits().is_finite());
        let mixed = Ring::product(vec![Ring::localized_integers(2).unwrap(), z(3)]).unwrap();
        assert!(!mixed.is_finite());
        assert!(!mixed.presentation().is_finite());
        let fin = Ring::product(vec![z(4), z(3)]).unwrap();
        assert_eq!(fin.order(), Some(12));
    }

    #[test]
    fn unary_product_is_the_factor() {
        assert_eq!(Ring::product(vec![z(6)]).unwrap(), z(6));
    }

    #[test]
    fn index_round_trip() {
        for ring in [
            z(12),
            Ring::galois_field(3, 2).unwrap(),
            Ring::product(vec![z(4), Ring::galois_field(2, 2).unwrap()]).unwrap(),
        ] {
            let n = ring.order().unwrap() as usize;
            for i in 0..n {
                assert_eq!(ring.index_of(&ring.element_at(i)), i);
            }
        }
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(
            z(12).idempotents().unwrap(),
            [0, 1, 4, 9].map(Elem::Int).to_vec()
        );
        assert_eq!(
            z(6).idempotents().unwrap(),
            [0, 1, 3, 4].map(Elem::Int).to_vec()
        );
        let gf4 = Ring::galois_field(2, 2).unwrap();
        assert_eq!(gf4.idempotents().unwrap(), vec![gf4.zero(), gf4.one()]);
        assert!(Ring::eventually_constant_bits().idempotents().is_err());
        assert_eq!(
            Ring::localized_integers(2).unwrap().idempotents().unwrap(),
            vec![Elem::integer(0), Elem::integer(1)]
        );
    }

    #[test]
    fn primitive_idempotents_of_z12() {
        assert_eq!(
            z(12).primitive_idempotents().unwrap(),
            vec![Elem::Int(4), Elem::Int(9)]
        );
    }

    #[test]
    fn local_arithmetic_stays_reduced() {
        let r = Ring::localized_integers(2).unwrap();
        let a = Elem::frac(4, 3);
        assert!(r.contains(&a));
        assert!(!r.contains(&Elem::frac(1, 2)));
        assert_eq!(r.valuation(&a), Some(2));
        assert_eq!(r.mul(&a, &Elem::frac(3, 4)), r.one());
        assert_eq!(r.add(&Elem::frac(1, 3), &Elem::frac(2, 3)), r.one());
    }

    #[test]
    fn quotient_arithmetic() {
        // Z/2[x]/(x^2+x): x*x = x
        let r = Ring::poly_quotient(2, Poly::new(2, vec![0, 1, 1])).unwrap();
        let x = Elem::Poly(Residue(vec![0, 1]));
        assert_eq!(r.mul(&x, &x), x);
        assert!(r.is_idempotent(&x));
    }
}
