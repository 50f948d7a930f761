//! Text syntax for rings and their elements.
//!
//! ```text
//! expr := atom ("*" atom)*
//! atom := "Z/" nat | "GF(" prime-power ")" | "Z/" prime "[x]/(" poly ")"
//!       | "Zloc(" prime ")" | "EvBits"
//! poly := term ("+" term)*      term := coeff | [coeff] "x" ["^" nat]
//! ```
//!
//! Products are flattened: `A * B * C` is one product with three factors.
//!
//! Element literals depend on the ring: `5` in `Z/n`, `x^2+1` in a
//! polynomial quotient, `3/5` or `-2` in `Zloc(p)`, `(1, x)` in a product,
//! and `{1,3}:0` in `EvBits`, listing the positions that differ from the tail
//! bit after the colon.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::ring::{check_prime, smallest_prime_factor, BitSeq, Elem, Ideal, Poly, Residue, Ring};
use crate::ring::{RingError, RingPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("at {position}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("at {position}: {value} is not a prime power")]
    NotPrimePower { position: usize, value: u64 },
    #[error("at {position}: coefficient {value} is not below {p}")]
    CoefficientOutOfRange { position: usize, value: u64, p: u64 },
    #[error("at {position}: {source}")]
    Invalid {
        position: usize,
        #[source]
        source: RingError,
    },
}

impl DslError {
    pub fn position(&self) -> usize {
        match self {
            DslError::Parse { position, .. }
            | DslError::NotPrimePower { position, .. }
            | DslError::CoefficientOutOfRange { position, .. }
            | DslError::Invalid { position, .. } => *position,
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn found(&self) -> String {
        match self.rest().chars().next() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        }
    }

    fn error(&self, expected: &[&str]) -> DslError {
        DslError::Parse {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), DslError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[&format!("`{token}`")]))
        }
    }

    fn peek_digit(&mut self) -> bool {
        self.skip_ws();
        self.rest().starts_with(|c: char| c.is_ascii_digit())
    }

    fn nat(&mut self) -> Result<u64, DslError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error(&["number"]));
        }
        let value = self.rest()[..len]
            .parse()
            .map_err(|_| self.error(&["number below 2^64"]))?;
        self.pos += len;
        Ok(value)
    }

    fn int(&mut self) -> Result<i64, DslError> {
        let negative = self.eat("-");
        let start = self.pos;
        let n = self.nat()?;
        let n = i64::try_from(n).map_err(|_| DslError::Parse {
            position: start,
            expected: vec!["number below 2^63".into()],
            found: n.to_string(),
        })?;
        Ok(if negative { -n } else { n })
    }

    fn finish(&mut self) -> Result<(), DslError> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }
}

fn invalid(position: usize) -> impl Fn(RingError) -> DslError {
    move |source| DslError::Invalid { position, source }
}

fn prime(cur: &mut Cursor) -> Result<u64, DslError> {
    cur.skip_ws();
    let at = cur.pos;
    let p = cur.nat()?;
    check_prime(p).map_err(invalid(at))?;
    Ok(p)
}

/// Polynomial over `Z/p`; coefficients must lie in `0..p`.
fn poly(cur: &mut Cursor, p: u64) -> Result<Poly, DslError> {
    let mut coeffs: Vec<u64> = Vec::new();
    loop {
        cur.skip_ws();
        let at = cur.pos;
        let coeff = if cur.peek_digit() { Some(cur.nat()?) } else { None };
        let degree = if cur.eat("x") {
            if cur.eat("^") {
                cur.nat()? as usize
            } else {
                1
            }
        } else if coeff.is_some() {
            0
        } else {
            return Err(cur.error(&["coefficient", "`x`"]));
        };
        let c = coeff.unwrap_or(1);
        if c >= p {
            return Err(DslError::CoefficientOutOfRange { position: at, value: c, p });
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] = (coeffs[degree] + c) % p;
        if !cur.eat("+") {
            return Ok(Poly::new(p, coeffs));
        }
    }
}

fn atom(cur: &mut Cursor) -> Result<RingPresentation, DslError> {
    cur.skip_ws();
    let at = cur.pos;
    if cur.eat("Z/") {
        let n_at = cur.pos;
        let n = cur.nat()?;
        if cur.eat("[") {
            check_prime(n).map_err(invalid(n_at))?;
            cur.expect("x")?;
            cur.expect("]")?;
            cur.expect("/")?;
            cur.expect("(")?;
            cur.skip_ws();
            let poly_at = cur.pos;
            let modulus = poly(cur, n)?;
            cur.expect(")")?;
            let presentation = RingPresentation::PolyQuotient { p: n, modulus };
            Ring::new(presentation.clone()).map_err(invalid(poly_at))?;
            return Ok(presentation);
        }
        Ring::new(RingPresentation::ModularInt(n)).map_err(invalid(n_at))?;
        Ok(RingPresentation::ModularInt(n))
    } else if cur.eat("GF(") {
        cur.skip_ws();
        let q_at = cur.pos;
        let q = cur.nat()?;
        cur.expect(")")?;
        let p = smallest_prime_factor(q).ok_or(DslError::NotPrimePower { position: q_at, value: q })?;
        let mut degree = 0;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            degree += 1;
        }
        if rest != 1 {
            return Err(DslError::NotPrimePower { position: q_at, value: q });
        }
        Ok(RingPresentation::GaloisField {
            p,
            modulus: Poly::least_irreducible(p, degree),
        })
    } else if cur.eat("Zloc(") {
        let p = prime(cur)?;
        cur.expect(")")?;
        Ok(RingPresentation::LocalizedIntegers(p))
    } else if cur.eat("EvBits") {
        Ok(RingPresentation::EventuallyConstantBits)
    } else {
        cur.pos = at;
        Err(cur.error(&["`Z/`", "`GF(`", "`Zloc(`", "`EvBits`"]))
    }
}

/// Parse a ring description into its presentation.
pub fn parse_ring(text: &str) -> Result<RingPresentation, DslError> {
    let mut cur = Cursor::new(text);
    let mut factors = Vec::new();
    loop {
        let at = {
            cur.skip_ws();
            cur.pos
        };
        match atom(&mut cur)? {
            RingPresentation::EventuallyConstantBits if !factors.is_empty() || cur.rest().trim_start().starts_with('*') => {
                return Err(DslError::Invalid {
                    position: at,
                    source: RingError::UnsupportedForPresentation {
                        op: "product factor",
                        presentation: "EvBits".into(),
                    },
                })
            }
            a => factors.push(a),
        }
        if !cur.eat("*") {
            break;
        }
    }
    cur.finish()?;
    Ok(if factors.len() == 1 {
        factors.pop().expect("one factor")
    } else {
        RingPresentation::Product(factors)
    })
}

/// Parse and construct a ring.
pub fn ring_from_str(text: &str) -> Result<Ring, DslError> {
    let presentation = parse_ring(text)?;
    Ring::new(presentation).map_err(invalid(0))
}

/// Split at top-level commas (outside parentheses and braces).
fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &text[start..]));
    parts
}

fn element(cur: &mut Cursor, ring: &Ring) -> Result<Elem, DslError> {
    cur.skip_ws();
    let at = cur.pos;
    let elem = match ring.presentation() {
        RingPresentation::ModularInt(_) => ring.from_integer(cur.int()?),
        RingPresentation::GaloisField { p, modulus } | RingPresentation::PolyQuotient { p, modulus } => {
            let reduced = poly(cur, *p)?.rem_monic(modulus);
            let degree = modulus.degree().expect("modulus has positive degree");
            Elem::Poly(Residue((0..degree).map(|i| reduced.coeff(i)).collect()))
        }
        RingPresentation::LocalizedIntegers(_) => {
            let num = cur.int()?;
            let den = if cur.eat("/") {
                let den_at = cur.pos;
                let den = cur.int()?;
                if den == 0 {
                    return Err(DslError::Parse {
                        position: den_at,
                        expected: vec!["nonzero denominator".into()],
                        found: "0".into(),
                    });
                }
                den
            } else {
                1
            };
            Elem::Frac(BigRational::new(BigInt::from(num), BigInt::from(den)))
        }
        RingPresentation::Product(_) => {
            let factors = ring.factors().expect("product ring");
            cur.expect("(")?;
            let mut parts = Vec::with_capacity(factors.len());
            for (i, factor) in factors.iter().enumerate() {
                if i > 0 {
                    cur.expect(",")?;
                }
                parts.push(element(cur, factor)?);
            }
            cur.expect(")")?;
            Elem::Tuple(parts)
        }
        RingPresentation::EventuallyConstantBits => {
            cur.expect("{")?;
            let mut flips = BTreeSet::new();
            if !cur.eat("}") {
                loop {
                    cur.skip_ws();
                    let pos_at = cur.pos;
                    let position = cur.nat()?;
                    if position == 0 {
                        return Err(DslError::Parse {
                            position: pos_at,
                            expected: vec!["position ≥ 1".into()],
                            found: "0".into(),
                        });
                    }
                    flips.insert(position);
                    if cur.eat("}") {
                        break;
                    }
                    cur.expect(",")?;
                }
            }
            cur.expect(":")?;
            let tail = if cur.eat("0") {
                false
            } else if cur.eat("1") {
                true
            } else {
                return Err(cur.error(&["`0`", "`1`"]));
            };
            Elem::Bits(BitSeq::new(flips, tail))
        }
    };
    ring.check(&elem).map_err(invalid(at))?;
    Ok(elem)
}

/// Parse one element literal of `ring`.
pub fn parse_element(ring: &Ring, text: &str) -> Result<Elem, DslError> {
    let mut cur = Cursor::new(text);
    let e = element(&mut cur, ring)?;
    cur.finish()?;
    Ok(e)
}

/// Parse a comma-separated list of element literals.
pub fn parse_elements(ring: &Ring, text: &str) -> Result<Vec<Elem>, DslError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text)
        .into_iter()
        .map(|(offset, part)| {
            parse_element(ring, part).map_err(|e| shift(e, offset))
        })
        .collect()
}

/// The ideal generated by a comma-separated list of element literals.
pub fn parse_ideal(ring: &Ring, text: &str) -> Result<Ideal, DslError> {
    let gens = parse_elements(ring, text)?;
    ring.ideal(&gens).map_err(invalid(0))
}

fn shift(e: DslError, offset: usize) -> DslError {
    match e {
        DslError::Parse { position, expected, found } => DslError::Parse { position: position + offset, expected, found },
        DslError::NotPrimePower { position, value } => DslError::NotPrimePower { position: position + offset, value },
        DslError::CoefficientOutOfRange { position, value, p } => {
            DslError::CoefficientOutOfRange { position: position + offset, value, p }
        }
        DslError::Invalid { position, source } => DslError::Invalid { position: position + offset, source },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(parse_ring("Z/12").unwrap(), RingPresentation::ModularInt(12));
        assert_eq!(
            parse_ring("Zloc(2) * Z/3").unwrap(),
            RingPresentation::Product(vec![
                RingPresentation::LocalizedIntegers(2),
                RingPresentation::ModularInt(3)
            ])
        );
        assert_eq!(
            parse_ring("GF(4)").unwrap(),
            RingPresentation::GaloisField { p: 2, modulus: Poly::new(2, vec![1, 1, 1]) }
        );
        assert_eq!(
            parse_ring("Z/2[x]/(x^2+x)").unwrap(),
            RingPresentation::PolyQuotient { p: 2, modulus: Poly::new(2, vec![0, 1, 1]) }
        );
        assert_eq!(parse_ring(" EvBits ").unwrap(), RingPresentation::EventuallyConstantBits);
    }

    #[test]
    fn products_flatten() {
        match parse_ring("Z/2 * Z/3 * GF(4)").unwrap() {
            RingPresentation::Product(fs) => assert_eq!(fs.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_ring("GF(6)"), Err(DslError::NotPrimePower { value: 6, .. })));
        assert!(matches!(
            parse_ring("Zloc(4)"),
            Err(DslError::Invalid { position: 5, source: RingError::NotPrime { value: 4, factor: 2 } })
        ));
        assert!(matches!(parse_ring("Z/4[x]/(x)"), Err(DslError::Invalid { .. })));
        assert!(matches!(
            parse_ring("Z/3[x]/(2x^2+1)"),
            Err(DslError::Invalid { source: RingError::NotMonic { .. }, .. })
        ));
        assert!(matches!(
            parse_ring("Z/2[x]/(x^2+3)"),
            Err(DslError::CoefficientOutOfRange { value: 3, .. })
        ));
        match parse_ring("Q") {
            Err(DslError::Parse { position: 0, expected, .. }) => assert_eq!(expected.len(), 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ring("Z/6 *"), Err(DslError::Parse { position: 5, .. })));
        assert!(parse_ring("EvBits * Z/2").is_err());
        assert!(matches!(parse_ring("Z/6 Z/2"), Err(DslError::Parse { position: 4, .. })));
    }

    #[test]
    fn print_parse_round_trip() {
        for text in ["Z/12", "GF(8)", "Z/2[x]/(x^2+x)", "Zloc(3)", "EvBits", "Zloc(2) * Z/3", "Z/3[x]/(x^2+1)"] {
            let p = parse_ring(text).unwrap();
            assert_eq!(p.to_string(), text);
            assert_eq!(parse_ring(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn element_literals() {
        let z12 = ring_from_str("Z/12").unwrap();
        assert_eq!(parse_elements(&z12, "4, -1").unwrap(), vec![Elem::Int(4), Elem::Int(11)]);
        let q = ring_from_str("Z/2[x]/(x^2+x)").unwrap();
        assert_eq!(parse_element(&q, "x+1").unwrap(), Elem::Poly(Residue(vec![1, 1])));
        assert_eq!(parse_element(&q, "x^2").unwrap(), Elem::Poly(Residue(vec![0, 1])));
        let zl = ring_from_str("Zloc(2)").unwrap();
        assert_eq!(parse_element(&zl, "6/3").unwrap(), Elem::integer(2));
        assert!(matches!(parse_element(&zl, "1/2"), Err(DslError::Invalid { .. })));
        let mixed = ring_from_str("Zloc(2) * Z/3").unwrap();
        assert_eq!(
            parse_elements(&mixed, "(1/3, 2), (0, 1)").unwrap(),
            vec![
                Elem::Tuple(vec![Elem::frac(1, 3), Elem::Int(2)]),
                Elem::Tuple(vec![Elem::integer(0), Elem::Int(1)])
            ]
        );
        let b = ring_from_str("EvBits").unwrap();
        assert_eq!(
            parse_element(&b, "{1,3}:0").unwrap(),
            Elem::Bits(BitSeq::new([1, 3], false))
        );
        assert_eq!(parse_element(&b, "{}:1").unwrap(), Elem::Bits(BitSeq::one()));
        match parse_elements(&z12, "4, x") {
            Err(DslError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
    }
}
