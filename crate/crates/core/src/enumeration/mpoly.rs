use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in `x, y1, y2` with integer coefficients, keyed by the
/// exponent triple. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<[u32; 3], BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term([0, 0, 0], c.into());
        p
    }

    pub fn x() -> Self {
        Self::monomial([1, 0, 0])
    }

    pub fn y1() -> Self {
        Self::monomial([0, 1, 0])
    }

    pub fn y2() -> Self {
        Self::monomial([0, 0, 1])
    }

    pub fn monomial(exp: [u32; 3]) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, BigInt::one());
        p
    }

    pub fn add_term(&mut self, exp: [u32; 3], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: [u32; 3]) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff([0, 0, 0])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0, 0, 0])
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Exact division of every coefficient, or `None` if some coefficient is
    /// not a multiple of `c`.
    pub fn div_exact(&self, c: &BigInt) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (e, v) in &self.terms {
            if !(v % c).is_zero() {
                return None;
            }
            out.insert(*e, v / c);
        }
        Some(Self { terms: out })
    }

    pub fn eval(&self, x: &BigInt, y1: &BigInt, y2: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * x.pow(e[0]) * y1.pow(e[1]) * y2.pow(e[2]))
            .sum()
    }

    /// Value at `x = y1 = y2 = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    /// Terms in decreasing lexicographic order of `(x, y1, y2)` exponents,
    /// e.g. `2x^2 + y1 + y2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = *e == [0, 0, 0];
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (name, p) in ["x", "y1", "y2"].iter().zip(e) {
                match p {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let x = MPoly::x();
        let s = &(&x * &x).scale(&BigInt::from(2)) + &(&MPoly::y1() + &MPoly::y2());
        assert_eq!(s.to_string(), "2x^2 + y1 + y2");
        assert_eq!(s.eval_ones(), BigInt::from(4));
        let d = &s - &s;
        assert!(d.is_zero());
        assert_eq!(d.to_string(), "0");
        let mut t = MPoly::constant(2);
        t.add_term([1, 0, 0], BigInt::from(-4));
        assert_eq!(t.to_string(), "-4x + 2");
        assert_eq!(t.eval(&BigInt::from(3), &BigInt::zero(), &BigInt::zero()), BigInt::from(-10));
        assert_eq!(t.div_exact(&BigInt::from(2)).unwrap().to_string(), "-2x + 1");
        assert!(t.div_exact(&BigInt::from(3)).is_none());
    }
}
