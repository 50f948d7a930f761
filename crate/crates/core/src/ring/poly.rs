//! Dense univariate polynomials over a prime field `Z/p`.
//!
//! Only what the quotient presentations need: ring arithmetic, remainder by a
//! monic divisor, and a brute-force irreducibility test that reports the
//! factor it found.

use std::fmt;

/// A polynomial over `Z/p`, coefficients stored lowest degree first with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Poly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(p >= 2, "coefficient modulus must be at least 2");
        let mut poly = Poly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn zero(p: u64) -> Self {
        Poly::new(p, Vec::new())
    }

    pub fn one(p: u64) -> Self {
        Poly::new(p, vec![1])
    }

    /// The monomial `x^k`.
    pub fn monomial(p: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Poly::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Poly::new(self.p, coeffs)
    }

    /// Remainder of division by a monic polynomial.
    pub fn rem_monic(&self, divisor: &Poly) -> Poly {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - d;
            if lead != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(lead, c, self.p);
                    rem[shift + i] = (rem[shift + i] + self.p - sub) % self.p;
                }
            }
            rem.pop();
        }
        Poly::new(self.p, rem)
    }

    /// All monic polynomials of the given degree, ordered by reading the
    /// lower coefficients as a base-`p` number (constant term least
    /// significant).
    pub fn monic_of_degree(p: u64, degree: usize) -> impl Iterator<Item = Poly> {
        let count = p.checked_pow(degree as u32).expect("too many polynomials");
        (0..count).map(move |mut code| {
            let mut coeffs = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                coeffs.push(code % p);
                code /= p;
            }
            coeffs.push(1);
            Poly::new(p, coeffs)
        })
    }

    /// Smallest-degree monic proper factor, found by trial division.
    pub fn find_factor(&self) -> Option<Poly> {
        let n = self.degree()?;
        (1..=n / 2).find_map(|d| {
            Poly::monic_of_degree(self.p, d).find(|g| self.rem_monic(g).is_zero())
        })
    }

    /// Irreducible means degree at least one and no proper factor.
    pub fn is_irreducible(&self) -> bool {
        matches!(self.degree(), Some(d) if d >= 1) && self.find_factor().is_none()
    }

    /// The least monic irreducible polynomial of the given degree in the
    /// order of [`Poly::monic_of_degree`].
    pub fn least_irreducible(p: u64, degree: usize) -> Poly {
        assert!(degree >= 1);
        Poly::monic_of_degree(p, degree)
            .find(|f| f.is_irreducible())
            .expect("irreducible polynomials exist in every degree")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
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
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_reads_high_to_low() {
        assert_eq!(Poly::new(2, vec![1, 1, 1]).to_string(), "x^2+x+1");
        assert_eq!(Poly::new(3, vec![2, 0, 0, 2]).to_string(), "2x^3+2");
        assert_eq!(Poly::new(5, vec![0, 1]).to_string(), "x");
        assert_eq!(Poly::zero(7).to_string(), "0");
    }

    #[test]
    fn remainder_by_monic() {
        // x^3 mod (x^2+x+1) over Z/2 is 1
        let f = Poly::new(2, vec![1, 1, 1]);
        assert_eq!(Poly::monomial(2, 3).rem_monic(&f), Poly::one(2));
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(Poly::new(2, vec![1, 1, 1]).is_irreducible());
        // x^2+x = x(x+1)
        let red = Poly::new(2, vec![0, 1, 1]);
        assert_eq!(red.find_factor(), Some(Poly::new(2, vec![0, 1])));
        // x^2+1 = (x+1)^2 over Z/2
        assert!(!Poly::new(2, vec![1, 0, 1]).is_irreducible());
        // x^2+1 is irreducible over Z/3
        assert!(Poly::new(3, vec![1, 0, 1]).is_irreducible());
        assert!(!Poly::one(2).is_irreducible());
    }

    #[test]
    fn least_irreducible_choices() {
        assert_eq!(Poly::least_irreducible(2, 1).to_string(), "x");
        assert_eq!(Poly::least_irreducible(2, 2).to_string(), "x^2+x+1");
        assert_eq!(Poly::least_irreducible(2, 3).to_string(), "x^3+x+1");
        assert_eq!(Poly::least_irreducible(3, 2).to_string(), "x^2+1");
    }
}
