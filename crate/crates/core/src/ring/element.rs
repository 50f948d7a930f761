use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// A ring element in canonical form. Equality is structural, so two values
/// compare equal exactly when they denote the same element of the same ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    /// Residue in `0..n`.
    Int(u64),
    /// Residue of a polynomial quotient.
    Poly(Residue),
    /// Element of a finite direct product.
    Tuple(Vec<Elem>),
    /// Reduced fraction whose denominator is prime to the localizing prime.
    Frac(BigRational),
    /// Eventually constant bit sequence.
    Bits(BitSeq),
}

impl Elem {
    pub fn frac(num: i64, den: i64) -> Elem {
        Elem::Frac(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Elem {
        Elem::Frac(BigRational::from_integer(BigInt::from(n)))
    }
}

/// Coefficients of a residue modulo a degree-`d` polynomial, always exactly
/// `d` of them, constant term first.
///
/// Ordered by degree first so that sorting agrees with the ring's element
/// index (constant term least significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue(pub Vec<u64>);

impl Ord for Residue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Residue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sequence `(b_1, b_2, ...)` of bits that is constant from some point on.
///
/// Stored as the tail bit plus the finite set of positions whose bit differs
/// from the tail. That set is determined by the sequence, which makes the
/// representation canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSeq {
    flips: BTreeSet<u64>,
    tail: bool,
}

impl BitSeq {
    /// `flips` lists the (1-based) positions whose bit is `!tail`.
    pub fn new(flips: impl IntoIterator<Item = u64>, tail: bool) -> Self {
        let flips: BTreeSet<u64> = flips.into_iter().collect();
        assert!(!flips.contains(&0), "bit positions start at 1");
        BitSeq { flips, tail }
    }

    pub fn zero() -> Self {
        BitSeq::new([], false)
    }

    pub fn one() -> Self {
        BitSeq::new([], true)
    }

    /// Indicator of the first `n` coordinates.
    pub fn prefix_indicator(n: u64) -> Self {
        BitSeq::new(1..=n, false)
    }

    pub fn tail(&self) -> bool {
        self.tail
    }

    pub fn flips(&self) -> &BTreeSet<u64> {
        &self.flips
    }

    pub fn bit(&self, position: u64) -> bool {
        self.tail ^ self.flips.contains(&position)
    }

    /// Positions carrying a 1, when there are finitely many.
    pub fn support(&self) -> Option<&BTreeSet<u64>> {
        (!self.tail).then_some(&self.flips)
    }

    fn combine(&self, other: &BitSeq, op: impl Fn(bool, bool) -> bool) -> BitSeq {
        let tail = op(self.tail, other.tail);
        let flips = self
            .flips
            .union(&other.flips)
            .copied()
            .filter(|&i| op(self.bit(i), other.bit(i)) != tail);
        BitSeq::new(flips, tail)
    }

    pub fn and(&self, other: &BitSeq) -> BitSeq {
        self.combine(other, |a, b| a & b)
    }

    pub fn xor(&self, other: &BitSeq) -> BitSeq {
        self.combine(other, |a, b| a ^ b)
    }

    pub fn complement(&self) -> BitSeq {
        BitSeq {
            flips: self.flips.clone(),
            tail: !self.tail,
        }
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.flips.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}:{}", items.join(","), u8::from(self.tail))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(r) => write!(f, "{r}"),
            Elem::Poly(Residue(coeffs)) => {
                let mut first = true;
                for (i, &c) in coeffs.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match (i, c) {
                        (0, c) => write!(f, "{c}")?,
                        (1, 1) => write!(f, "x")?,
                        (1, c) => write!(f, "{c}x")?,
                        (i, 1) => write!(f, "x^{i}")?,
                        (i, c) => write!(f, "{c}x^{i}")?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
            Elem::Tuple(parts) => {
                write!(f, "(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
            Elem::Frac(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Elem::Bits(bits) => write!(f, "{bits}"),
        }
    }
}
