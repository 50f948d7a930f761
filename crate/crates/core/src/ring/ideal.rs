use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::{cartesian, BitSeq, Elem, Kind, Ring, RingError};

/// An ideal of `Z_(p)`: zero or a power of the maximal ideal.
///
/// Ordered by size, so `(0) < (p^2) < (p) < (1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalIdeal {
    Zero,
    /// `(p^k)`; `Power(0)` is the whole ring.
    Power(u32),
}

impl Ord for LocalIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LocalIdeal::Zero, LocalIdeal::Zero) => Ordering::Equal,
            (LocalIdeal::Zero, _) => Ordering::Less,
            (_, LocalIdeal::Zero) => Ordering::Greater,
            (LocalIdeal::Power(a), LocalIdeal::Power(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for LocalIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl LocalIdeal {
    fn is_subset(self, other: LocalIdeal) -> bool {
        match (self, other) {
            (LocalIdeal::Zero, _) => true,
            (_, LocalIdeal::Zero) => false,
            (LocalIdeal::Power(a), LocalIdeal::Power(b)) => a >= b,
        }
    }
}

/// Ideals of the Boolean ring of eventually constant sequences that the
/// library can name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolIdeal {
    /// All sequences with finitely many ones (tail bit 0).
    FinitelySupported,
    /// `R·e`. Every finitely generated ideal of a Boolean ring has this form.
    Principal(BitSeq),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealRepr {
    /// Sorted element indices of a finite ring.
    Explicit(Vec<usize>),
    Local(LocalIdeal),
    /// Componentwise ideal of a product with an infinite factor.
    Product(Vec<Ideal>),
    Boolean(BoolIdeal),
}

/// An ideal together with the ring that owns it. Representations are
/// canonical, so equality is structural.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    repr: IdealRepr,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.ring == other.ring
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.cmp(&other.repr)
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{} in {}", self.name(), self.ring)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

// ---- index-level helpers for finite rings ---------------------------------

fn principal_idx(ring: &Ring, n: usize, g: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    for r in 0..n {
        seen[ring.mul_idx(r, g, n)] = true;
    }
    collect(&seen)
}

fn sum_idx(ring: &Ring, n: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; n];
    for &x in a {
        for &y in b {
            seen[ring.add_idx(x, y, n)] = true;
        }
    }
    collect(&seen)
}

fn collect(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

fn mask_of(n: usize, set: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &i in set {
        mask[i] = true;
    }
    mask
}

fn join(a: &BitSeq, b: &BitSeq) -> BitSeq {
    a.xor(b).xor(&a.and(b))
}

impl Ring {
    pub(crate) fn explicit(&self, indices: Vec<usize>) -> Ideal {
        Ideal {
            ring: self.clone(),
            repr: IdealRepr::Explicit(indices),
        }
    }

    fn with_repr(&self, repr: IdealRepr) -> Ideal {
        Ideal {
            ring: self.clone(),
            repr,
        }
    }

    /// The smallest ideal containing `gens`.
    pub fn ideal(&self, gens: &[Elem]) -> Result<Ideal, RingError> {
        for g in gens {
            self.check(g)?;
        }
        match &self.0.kind {
            Kind::Local(_) => {
                let level = gens
                    .iter()
                    .filter_map(|g| self.valuation(g))
                    .min()
                    .map_or(LocalIdeal::Zero, LocalIdeal::Power);
                Ok(self.with_repr(IdealRepr::Local(level)))
            }
            Kind::Product(fs) if !self.is_finite() => {
                let parts = fs
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.ideal(&project(gens, i)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(self.with_repr(IdealRepr::Product(parts)))
            }
            Kind::Bits => {
                let e = gens.iter().fold(BitSeq::zero(), |acc, g| match g {
                    Elem::Bits(b) => join(&acc, b),
                    _ => unreachable!("checked above"),
                });
                Ok(self.with_repr(IdealRepr::Boolean(BoolIdeal::Principal(e))))
            }
            _ => {
                let n = self.enumerable_order()?;
                let mut current = vec![0usize];
                for g in gens {
                    let idx = self.index_of(g);
                    if current.binary_search(&idx).is_ok() {
                        continue;
                    }
                    current = sum_idx(self, n, &current, &principal_idx(self, n, idx));
                }
                Ok(self.explicit(current))
            }
        }
    }

    pub fn whole_ideal(&self) -> Ideal {
        self.ideal(&[self.one()]).expect("unit ideal is always constructible")
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.ideal(&[]).expect("zero ideal is always constructible")
    }

    /// The ideal of finitely supported sequences in the Boolean sequence ring.
    pub fn finitely_supported_ideal(&self) -> Result<Ideal, RingError> {
        if !self.is_boolean_sequences() {
            return Err(self.unsupported("the finitely supported ideal"));
        }
        Ok(self.with_repr(IdealRepr::Boolean(BoolIdeal::FinitelySupported)))
    }

    /// Build an ideal from an explicit element set of a finite ring, checking
    /// that it is closed under addition and under multiplication by the ring.
    pub fn ideal_from_elements(&self, elems: &[Elem]) -> Result<Ideal, RingError> {
        let n = self.enumerable_order()?;
        for e in elems {
            self.check(e)?;
        }
        let mut set: Vec<usize> = elems.iter().map(|e| self.index_of(e)).collect();
        set.sort_unstable();
        set.dedup();
        let mask = mask_of(n, &set);
        if !mask[0] {
            return Err(RingError::NotAnIdeal {
                reason: "missing 0".into(),
            });
        }
        for &a in &set {
            for &b in &set {
                if !mask[self.add_idx(a, b, n)] {
                    return Err(RingError::NotAnIdeal {
                        reason: format!(
                            "{} + {} escapes",
                            self.element_at(a),
                            self.element_at(b)
                        ),
                    });
                }
            }
            for r in 0..n {
                if !mask[self.mul_idx(r, a, n)] {
                    return Err(RingError::NotAnIdeal {
                        reason: format!(
                            "{} * {} escapes",
                            self.element_at(r),
                            self.element_at(a)
                        ),
                    });
                }
            }
        }
        Ok(self.explicit(set))
    }

    /// `Ann(f) = {x : x·f = 0}`.
    pub fn annihilator(&self, f: &Elem) -> Result<Ideal, RingError> {
        self.check(f)?;
        match &self.0.kind {
            Kind::Local(_) => Ok(self.with_repr(IdealRepr::Local(if self.is_zero(f) {
                LocalIdeal::Power(0)
            } else {
                LocalIdeal::Zero
            }))),
            Kind::Product(fs) if !self.is_finite() => {
                let Elem::Tuple(parts) = f else { unreachable!() };
                let anns = fs
                    .iter()
                    .zip(parts)
                    .map(|(ring, x)| ring.annihilator(x))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(self.with_repr(IdealRepr::Product(anns)))
            }
            Kind::Bits => {
                let Elem::Bits(b) = f else { unreachable!() };
                Ok(self.with_repr(IdealRepr::Boolean(BoolIdeal::Principal(b.complement()))))
            }
            _ => {
                let n = self.enumerable_order()?;
                let fi = self.index_of(f);
                Ok(self.explicit((0..n).filter(|&x| self.mul_idx(x, fi, n) == 0).collect()))
            }
        }
    }

    /// `{x : x^k ∈ I for some k ≥ 1}`.
    pub fn radical(&self, ideal: &Ideal) -> Result<Ideal, RingError> {
        match (&self.0.kind, &ideal.repr) {
            (Kind::Local(_), IdealRepr::Local(level)) => {
                let rad = match level {
                    LocalIdeal::Zero => LocalIdeal::Zero,
                    LocalIdeal::Power(0) => LocalIdeal::Power(0),
                    LocalIdeal::Power(_) => LocalIdeal::Power(1),
                };
                Ok(self.with_repr(IdealRepr::Local(rad)))
            }
            (Kind::Product(fs), IdealRepr::Product(parts)) => {
                let rads = fs
                    .iter()
                    .zip(parts)
                    .map(|(f, i)| f.radical(i))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(self.with_repr(IdealRepr::Product(rads)))
            }
            // every element of a Boolean ring satisfies x^2 = x
            (Kind::Bits, IdealRepr::Boolean(_)) => Ok(ideal.clone()),
            (_, IdealRepr::Explicit(set)) => {
                let n = self.enumerable_order()?;
                let mask = mask_of(n, set);
                let rad = (0..n)
                    .filter(|&x| {
                        let mut seen = vec![false; n];
                        let mut power = x;
                        while !seen[power] {
                            if mask[power] {
                                return true;
                            }
                            seen[power] = true;
                            power = self.mul_idx(power, x, n);
                        }
                        false
                    })
                    .collect();
                Ok(self.explicit(rad))
            }
            _ => Err(self.unsupported("radical")),
        }
    }

    pub fn nilradical(&self) -> Result<Ideal, RingError> {
        self.radical(&self.zero_ideal())
    }

    pub fn is_reduced(&self) -> Result<bool, RingError> {
        Ok(self.nilradical()?.is_zero_ideal())
    }

    /// Kernel of the localization `R -> S^{-1}R` with `S = 1 + I`:
    /// `{r : s·r = 0 for some s ∈ 1 + I}`.
    pub fn saturation_kernel(&self, ideal: &Ideal) -> Result<Ideal, RingError> {
        match (&self.0.kind, &ideal.repr) {
            (Kind::Local(_), IdealRepr::Local(level)) => {
                // 1 + (p^k) consists of units for k ≥ 1; 1 + R contains 0
                let kernel = match level {
                    LocalIdeal::Power(0) => LocalIdeal::Power(0),
                    _ => LocalIdeal::Zero,
                };
                Ok(self.with_repr(IdealRepr::Local(kernel)))
            }
            (Kind::Product(fs), IdealRepr::Product(parts)) => {
                let ks = fs
                    .iter()
                    .zip(parts)
                    .map(|(f, i)| f.saturation_kernel(i))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(self.with_repr(IdealRepr::Product(ks)))
            }
            (_, IdealRepr::Explicit(set)) => {
                let n = self.enumerable_order()?;
                let one = self.one_idx();
                let multipliers: Vec<usize> = set.iter().map(|&i| self.add_idx(one, i, n)).collect();
                let kernel = (0..n)
                    .filter(|&r| multipliers.iter().any(|&s| self.mul_idx(s, r, n) == 0))
                    .collect();
                Ok(self.explicit(kernel))
            }
            _ => Err(self.unsupported("saturation kernel")),
        }
    }

    pub fn is_prime_ideal(&self, ideal: &Ideal) -> Result<bool, RingError> {
        match (&self.0.kind, &ideal.repr) {
            (Kind::Local(_), IdealRepr::Local(level)) => {
                Ok(matches!(level, LocalIdeal::Zero | LocalIdeal::Power(1)))
            }
            (Kind::Product(fs), IdealRepr::Product(parts)) => {
                let mut prime_components = 0;
                for (f, part) in fs.iter().zip(parts) {
                    if part.is_whole() {
                        continue;
                    }
                    if !f.is_prime_ideal(part)? {
                        return Ok(false);
                    }
                    prime_components += 1;
                }
                Ok(prime_components == 1)
            }
            (_, IdealRepr::Explicit(set)) => {
                let n = self.enumerable_order()?;
                if set.len() == n {
                    return Ok(false);
                }
                let mask = mask_of(n, set);
                let outside: Vec<usize> = (0..n).filter(|&i| !mask[i]).collect();
                Ok(outside
                    .iter()
                    .all(|&a| outside.iter().all(|&b| !mask[self.mul_idx(a, b, n)])))
            }
            _ => Err(self.unsupported("primality test")),
        }
    }

    /// Every ideal of a finite ring, sorted. Obtained as the closure of the
    /// principal ideals under sums.
    pub fn ideals(&self) -> Result<Vec<Ideal>, RingError> {
        let n = self.enumerable_order()?;
        let principals: Vec<Vec<usize>> = {
            let mut ps: Vec<Vec<usize>> = (0..n).map(|g| principal_idx(self, n, g)).collect();
            ps.sort();
            ps.dedup();
            ps
        };
        let mut all: std::collections::BTreeSet<Vec<usize>> = principals.iter().cloned().collect();
        let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for i in &frontier {
                for p in &principals {
                    let s = sum_idx(self, n, i, p);
                    if all.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        Ok(all.into_iter().map(|s| self.explicit(s)).collect())
    }

    /// All ideals of a finite ring; for `Z_(p)` the ideals `(0), (p^2), (p),
    /// (1)`, which exhibit every behaviour of the lattice since all `(p^k)`
    /// with `k ≥ 1` share radical, annihilators and saturation; products
    /// combine their factors' lists.
    pub fn representative_ideals(&self) -> Result<Vec<Ideal>, RingError> {
        match &self.0.kind {
            Kind::Local(_) => Ok([
                LocalIdeal::Zero,
                LocalIdeal::Power(2),
                LocalIdeal::Power(1),
                LocalIdeal::Power(0),
            ]
            .into_iter()
            .map(|l| self.with_repr(IdealRepr::Local(l)))
            .collect()),
            Kind::Product(fs) if !self.is_finite() => {
                let per: Vec<Vec<Ideal>> = fs
                    .iter()
                    .map(Ring::representative_ideals)
                    .collect::<Result<_, _>>()?;
                let combos = per.iter().fold(vec![Vec::new()], |acc, options| {
                    acc.iter()
                        .flat_map(|prefix: &Vec<Ideal>| {
                            options.iter().map(move |o| {
                                let mut v = prefix.clone();
                                v.push(o.clone());
                                v
                            })
                        })
                        .collect::<Vec<_>>()
                });
                let mut out: Vec<Ideal> = combos
                    .into_iter()
                    .map(|parts| self.with_repr(IdealRepr::Product(parts)))
                    .collect();
                out.sort();
                Ok(out)
            }
            Kind::Bits => Err(self.unsupported("ideal enumeration")),
            _ => self.ideals(),
        }
    }

    /// Embed an ideal of factor `index` as `R_1 × … × I × … × R_k`.
    pub fn lift_factor_ideal(&self, index: usize, part: &Ideal) -> Result<Ideal, RingError> {
        let fs = self.factors().ok_or_else(|| self.unsupported("factor lifting"))?;
        if self.is_finite() {
            let n = self.enumerable_order()?;
            let members = (0..n)
                .filter(|&i| match self.element_at(i) {
                    Elem::Tuple(parts) => part.contains(&parts[index]),
                    _ => unreachable!(),
                })
                .collect();
            Ok(self.explicit(members))
        } else {
            let parts = fs
                .iter()
                .enumerate()
                .map(|(i, f)| if i == index { part.clone() } else { f.whole_ideal() })
                .collect();
            Ok(self.with_repr(IdealRepr::Product(parts)))
        }
    }
}

fn project(gens: &[Elem], i: usize) -> Vec<Elem> {
    gens.iter()
        .map(|g| match g {
            Elem::Tuple(parts) => parts[i].clone(),
            _ => unreachable!("checked tuple"),
        })
        .collect()
}

impl Ideal {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn repr(&self) -> &IdealRepr {
        &self.repr
    }

    pub fn contains(&self, e: &Elem) -> bool {
        if !self.ring.contains(e) {
            return false;
        }
        match (&self.repr, e) {
            (IdealRepr::Explicit(set), _) => set.binary_search(&self.ring.index_of(e)).is_ok(),
            (IdealRepr::Local(level), _) => match (level, self.ring.valuation(e)) {
                (_, None) => true,
                (LocalIdeal::Zero, Some(_)) => false,
                (LocalIdeal::Power(k), Some(v)) => v >= *k,
            },
            (IdealRepr::Product(parts), Elem::Tuple(xs)) => {
                parts.iter().zip(xs).all(|(i, x)| i.contains(x))
            }
            (IdealRepr::Boolean(BoolIdeal::FinitelySupported), Elem::Bits(b)) => !b.tail(),
            (IdealRepr::Boolean(BoolIdeal::Principal(g)), Elem::Bits(b)) => b.and(g) == *b,
            _ => false,
        }
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        match (&self.repr, &other.repr) {
            (IdealRepr::Explicit(a), IdealRepr::Explicit(b)) => {
                a.iter().all(|x| b.binary_search(x).is_ok())
            }
            (IdealRepr::Local(a), IdealRepr::Local(b)) => a.is_subset(*b),
            (IdealRepr::Product(a), IdealRepr::Product(b)) => {
                a.iter().zip(b).all(|(x, y)| x.is_subset(y))
            }
            (IdealRepr::Boolean(a), IdealRepr::Boolean(b)) => match (a, b) {
                (BoolIdeal::FinitelySupported, BoolIdeal::FinitelySupported) => true,
                (BoolIdeal::Principal(e), BoolIdeal::FinitelySupported) => !e.tail(),
                (BoolIdeal::FinitelySupported, BoolIdeal::Principal(e)) => *e == BitSeq::one(),
                (BoolIdeal::Principal(e), BoolIdeal::Principal(f)) => e.and(f) == *e,
            },
            _ => false,
        }
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal, RingError> {
        let repr = match (&self.repr, &other.repr) {
            (IdealRepr::Explicit(a), IdealRepr::Explicit(b)) => IdealRepr::Explicit(
                a.iter()
                    .copied()
                    .filter(|x| b.binary_search(x).is_ok())
                    .collect(),
            ),
            (IdealRepr::Local(a), IdealRepr::Local(b)) => IdealRepr::Local((*a).min(*b)),
            (IdealRepr::Product(a), IdealRepr::Product(b)) => IdealRepr::Product(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.intersection(y))
                    .collect::<Result<_, _>>()?,
            ),
            (IdealRepr::Boolean(BoolIdeal::Principal(e)), IdealRepr::Boolean(BoolIdeal::Principal(f))) => {
                IdealRepr::Boolean(BoolIdeal::Principal(e.and(f)))
            }
            (IdealRepr::Boolean(_), IdealRepr::Boolean(_)) => {
                if self.is_subset(other) {
                    self.repr.clone()
                } else if other.is_subset(self) {
                    other.repr.clone()
                } else {
                    return Err(self.ring.unsupported("this Boolean ideal intersection"));
                }
            }
            _ => return Err(self.ring.unsupported("intersection of mismatched ideals")),
        };
        Ok(Ideal {
            ring: self.ring.clone(),
            repr,
        })
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, RingError> {
        let repr = match (&self.repr, &other.repr) {
            (IdealRepr::Explicit(a), IdealRepr::Explicit(b)) => {
                let n = self.ring.enumerable_order()?;
                IdealRepr::Explicit(sum_idx(&self.ring, n, a, b))
            }
            (IdealRepr::Local(a), IdealRepr::Local(b)) => IdealRepr::Local((*a).max(*b)),
            (IdealRepr::Product(a), IdealRepr::Product(b)) => IdealRepr::Product(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.sum(y))
                    .collect::<Result<_, _>>()?,
            ),
            (IdealRepr::Boolean(BoolIdeal::Principal(e)), IdealRepr::Boolean(BoolIdeal::Principal(f))) => {
                IdealRepr::Boolean(BoolIdeal::Principal(join(e, f)))
            }
            (IdealRepr::Boolean(BoolIdeal::FinitelySupported), IdealRepr::Boolean(BoolIdeal::FinitelySupported)) => {
                self.repr.clone()
            }
            (IdealRepr::Boolean(BoolIdeal::Principal(e)), IdealRepr::Boolean(BoolIdeal::FinitelySupported))
            | (IdealRepr::Boolean(BoolIdeal::FinitelySupported), IdealRepr::Boolean(BoolIdeal::Principal(e))) => {
                // 1 + e is finitely supported when e has tail 1
                if e.tail() {
                    IdealRepr::Boolean(BoolIdeal::Principal(BitSeq::one()))
                } else {
                    IdealRepr::Boolean(BoolIdeal::FinitelySupported)
                }
            }
            _ => return Err(self.ring.unsupported("sum of mismatched ideals")),
        };
        Ok(Ideal {
            ring: self.ring.clone(),
            repr,
        })
    }

    pub fn is_whole(&self) -> bool {
        self.contains(&self.ring.one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        match &self.repr {
            IdealRepr::Explicit(set) => set.len() == 1,
            IdealRepr::Local(level) => *level == LocalIdeal::Zero,
            IdealRepr::Product(parts) => parts.iter().all(Ideal::is_zero_ideal),
            IdealRepr::Boolean(BoolIdeal::Principal(e)) => *e == BitSeq::zero(),
            IdealRepr::Boolean(BoolIdeal::FinitelySupported) => false,
        }
    }

    /// Number of elements, for ideals of finite rings.
    pub fn cardinality(&self) -> Option<usize> {
        match &self.repr {
            IdealRepr::Explicit(set) => Some(set.len()),
            _ => None,
        }
    }

    pub fn elements(&self) -> Result<Vec<Elem>, RingError> {
        match &self.repr {
            IdealRepr::Explicit(set) => Ok(set.iter().map(|&i| self.ring.element_at(i)).collect()),
            _ => Err(self.ring.unsupported("explicit enumeration of ideal members")),
        }
    }

    /// A finite set of members exhibiting every behaviour relevant to
    /// annihilators and flatness witnesses: all members for finite rings,
    /// otherwise zero plus generators (and, for the unit ideal of `Z_(p)`,
    /// a non-unit as well).
    pub fn representative_members(&self) -> Vec<Elem> {
        match &self.repr {
            IdealRepr::Explicit(set) => set.iter().map(|&i| self.ring.element_at(i)).collect(),
            IdealRepr::Local(level) => {
                let p = self.ring.local_prime().expect("local ring") as i64;
                match level {
                    LocalIdeal::Zero => vec![Elem::integer(0)],
                    LocalIdeal::Power(0) => {
                        vec![Elem::integer(0), Elem::integer(1), Elem::integer(p)]
                    }
                    LocalIdeal::Power(k) => vec![Elem::integer(0), Elem::integer(p.pow(*k))],
                }
            }
            IdealRepr::Product(parts) => {
                let per: Vec<Vec<Elem>> = parts.iter().map(Ideal::representative_members).collect();
                cartesian(&per).into_iter().map(Elem::Tuple).collect()
            }
            IdealRepr::Boolean(BoolIdeal::Principal(e)) => {
                let mut v = vec![Elem::Bits(BitSeq::zero())];
                if *e != BitSeq::zero() {
                    v.push(Elem::Bits(e.clone()));
                }
                v
            }
            IdealRepr::Boolean(BoolIdeal::FinitelySupported) => {
                (0..=3).map(|n| Elem::Bits(BitSeq::prefix_indicator(n))).collect()
            }
        }
    }

    /// A generating set. Every ideal of a supported presentation other than
    /// the finitely supported Boolean ideal is principal, and then exactly one
    /// generator is returned (the one of least index for finite rings).
    pub fn generators(&self) -> Vec<Elem> {
        match &self.repr {
            IdealRepr::Explicit(set) => {
                let ring = &self.ring;
                let n = ring.order().expect("finite") as usize;
                if let Some(&g) = set.iter().find(|&&g| principal_idx(ring, n, g) == *set) {
                    return vec![ring.element_at(g)];
                }
                let mut span = vec![0usize];
                let mut gens = Vec::new();
                for &g in set {
                    if span.binary_search(&g).is_err() {
                        span = sum_idx(ring, n, &span, &principal_idx(ring, n, g));
                        gens.push(ring.element_at(g));
                    }
                }
                gens
            }
            IdealRepr::Local(level) => {
                let p = self.ring.local_prime().expect("local ring") as i64;
                match level {
                    LocalIdeal::Zero => vec![Elem::integer(0)],
                    LocalIdeal::Power(k) => vec![Elem::integer(p.pow(*k))],
                }
            }
            IdealRepr::Product(parts) => {
                let per: Vec<Vec<Elem>> = parts.iter().map(Ideal::generators).collect();
                if per.iter().all(|g| g.len() == 1) {
                    vec![Elem::Tuple(per.into_iter().map(|mut g| g.remove(0)).collect())]
                } else {
                    let fs = self.ring.factors().expect("product");
                    per.iter()
                        .enumerate()
                        .flat_map(|(i, gens)| {
                            gens.iter().map(move |g| {
                                Elem::Tuple(
                                    fs.iter()
                                        .enumerate()
                                        .map(|(j, f)| if i == j { g.clone() } else { f.zero() })
                                        .collect(),
                                )
                            })
                        })
                        .collect()
                }
            }
            IdealRepr::Boolean(BoolIdeal::Principal(e)) => vec![Elem::Bits(e.clone())],
            IdealRepr::Boolean(BoolIdeal::FinitelySupported) => Vec::new(),
        }
    }

    /// Canonical display name such as `(2)`, `(2^2)`, `(0)×(1)` or `Fin`.
    pub fn name(&self) -> String {
        match &self.repr {
            IdealRepr::Local(LocalIdeal::Zero) => "(0)".into(),
            IdealRepr::Local(LocalIdeal::Power(0)) => "(1)".into(),
            IdealRepr::Local(LocalIdeal::Power(1)) => {
                format!("({})", self.ring.local_prime().unwrap())
            }
            IdealRepr::Local(LocalIdeal::Power(k)) => {
                format!("({}^{k})", self.ring.local_prime().unwrap())
            }
            IdealRepr::Product(parts) => parts
                .iter()
                .map(Ideal::name)
                .collect::<Vec<_>>()
                .join("×"),
            IdealRepr::Boolean(BoolIdeal::FinitelySupported) => "Fin".into(),
            _ => {
                let gens: Vec<String> = self.generators().iter().map(Elem::to_string).collect();
                format!("({})", gens.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Poly;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn ints(ideal: &Ideal) -> Vec<u64> {
        ideal
            .elements()
            .unwrap()
            .into_iter()
            .map(|e| match e {
                Elem::Int(r) => r,
                _ => unreachable!(),
            })
            .collect()
    }

    #[test]
    fn generated_ideals() {
        assert_eq!(ints(&z(6).ideal(&[Elem::Int(2)]).unwrap()), [0, 2, 4]);
        assert_eq!(ints(&z(12).ideal(&[]).unwrap()), [0]);
        assert_eq!(ints(&z(12).ideal(&[Elem::Int(4), Elem::Int(6)]).unwrap()), [0, 2, 4, 6, 8, 10]);
        let zl = Ring::localized_integers(2).unwrap();
        let i = zl.ideal(&[Elem::frac(4, 3)]).unwrap();
        assert_eq!(i.repr(), &IdealRepr::Local(LocalIdeal::Power(2)));
        assert_eq!(i.name(), "(2^2)");
    }

    #[test]
    fn annihilators() {
        assert_eq!(ints(&z(6).annihilator(&Elem::Int(2)).unwrap()), [0, 3]);
        assert!(z(12).annihilator(&Elem::Int(0)).unwrap().is_whole());
        assert_eq!(ints(&z(4).annihilator(&Elem::Int(2)).unwrap()), [0, 2]);
        let b = Ring::eventually_constant_bits();
        let f = Elem::Bits(BitSeq::prefix_indicator(2));
        let ann = b.annihilator(&f).unwrap();
        assert!(ann.contains(&Elem::Bits(BitSeq::new([1, 2], true))));
        assert!(!ann.contains(&f));
    }

    #[test]
    fn radicals() {
        let r = z(12);
        let four = r.ideal(&[Elem::Int(4)]).unwrap();
        assert_eq!(ints(&r.radical(&four).unwrap()), [0, 2, 4, 6, 8, 10]);
        assert_eq!(ints(&r.nilradical().unwrap()), [0, 6]);
        assert!(r.radical(&r.whole_ideal()).unwrap().is_whole());
        assert!(!r.is_reduced().unwrap());
        assert!(z(6).is_reduced().unwrap());
    }

    #[test]
    fn saturation_kernels() {
        let r = z(12);
        let k = |g: u64| ints(&r.saturation_kernel(&r.ideal(&[Elem::Int(g)]).unwrap()).unwrap());
        assert_eq!(k(2), [0, 4, 8]);
        assert_eq!(k(0), [0]);
        assert_eq!(k(4), [0, 4, 8]);
    }

    #[test]
    fn ideal_lattice_of_z12() {
        let names: Vec<String> = z(12).ideals().unwrap().iter().map(Ideal::name).collect();
        assert_eq!(names.len(), 6);
        for n in ["(0)", "(1)", "(2)", "(3)", "(4)", "(6)"] {
            assert!(names.contains(&n.to_string()), "{n} missing from {names:?}");
        }
    }

    #[test]
    fn closure_is_checked() {
        let r = z(6);
        assert!(r.ideal_from_elements(&[Elem::Int(0), Elem::Int(3)]).is_ok());
        assert!(matches!(
            r.ideal_from_elements(&[Elem::Int(0), Elem::Int(2)]),
            Err(RingError::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn primes_of_quotient() {
        let r = Ring::poly_quotient(2, Poly::new(2, vec![0, 1, 1])).unwrap();
        let primes: Vec<String> = r
            .ideals()
            .unwrap()
            .into_iter()
            .filter(|i| r.is_prime_ideal(i).unwrap())
            .map(|i| i.name())
            .collect();
        assert_eq!(primes, ["(x)", "(x+1)"]);
    }

    #[test]
    fn boolean_ideal_lattice_facts() {
        let b = Ring::eventually_constant_bits();
        let fin = b.finitely_supported_ideal().unwrap();
        let x3 = b.ideal(&[Elem::Bits(BitSeq::prefix_indicator(3))]).unwrap();
        assert!(x3.is_subset(&fin));
        assert!(!fin.is_subset(&x3));
        assert!(fin.sum(&b.ideal(&[Elem::Bits(BitSeq::new([1], true))]).unwrap()).unwrap().is_whole());
        assert!(!fin.is_whole());
    }
}
