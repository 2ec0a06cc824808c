use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

use super::mpoly::MPoly;

pub const DEFAULT_SERIES_ORDER: usize = 24;

/// A power series in `z` truncated after `z^order`, with coefficients in
/// `Z[x, y1, y2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<MPoly>,
}

impl SeriesPoly {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![MPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, MPoly::one())
    }

    pub fn constant(order: usize, c: MPoly) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = MPoly::one();
        }
        s
    }

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<MPoly>) -> Self {
        coeffs.resize(order + 1, MPoly::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Coefficients at `x = y1 = y2 = 1`.
    pub fn eval_ones(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(MPoly::eval_ones).collect()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Multiplication by a coefficient-ring element.
    pub fn scale(&self, c: &MPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `z`, dropping the top coefficient.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(MPoly::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Self { coeffs }
    }

    /// `d/dz`. The top coefficient of the result is unknown at this order
    /// and set to zero.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 1..=n {
            out.coeffs[k - 1] = self.coeffs[k].scale(&BigInt::from(k));
        }
        out
    }

    /// `z d/dz`, exact at every order.
    pub fn z_derivative(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&BigInt::from(k)))
                .collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let unit = c0.constant_term();
        if !c0.is_constant() || !(unit.is_one() || (-&unit).is_one()) {
            return Err(Error::NotAUnit(c0.to_string()));
        }
        let n = self.order();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = MPoly::constant(unit.clone());
        for k in 1..=n {
            let mut acc = MPoly::zero();
            for i in 1..=k {
                acc += &(&self.coeffs[i] * &inv.coeffs[k - i]);
            }
            // c0 * inv_k = -acc, and c0 is its own inverse
            inv.coeffs[k] = (-&acc).scale(&unit);
        }
        Ok(inv)
    }

    /// `log(1/(1 - f))` for `f` with zero constant term, when its
    /// coefficients are integral.
    pub fn log_inverse_one_minus(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotAUnit(format!("1 - ({})", self.coeffs[0])));
        }
        let n = self.order();
        let one_minus = Self::one(n).sub(self);
        let zl = self.z_derivative().mul(&one_minus.inverse()?);
        let mut out = Self::zero(n);
        for k in 1..=n {
            out.coeffs[k] = zl.coeffs[k]
                .div_exact(&BigInt::from(k))
                .ok_or(Error::NonIntegral(k))?;
        }
        Ok(out)
    }
}

impl fmt::Display for SeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// The generating function `P(z)` of polygon Ptolemy diagrams, marked by
/// `x` per triangle, `y1` per clique and `y2` per empty cell, truncated at
/// `z^order`.
///
/// `P = z + x P^2 + (y1 + y2) P^3/(1 - P)` is solved degree by degree: the
/// `z^k` coefficient of the right-hand side only involves coefficients of
/// `P` below `k`, which is what makes the fixed-point iteration converge.
/// `S = P^3/(1 - P)` satisfies `S = P^3 + P S`.
pub fn series_p(order: usize) -> SeriesPoly {
    let n = order;
    let mut p = vec![MPoly::zero(); n + 1];
    let mut p2 = vec![MPoly::zero(); n + 1];
    let mut s = vec![MPoly::zero(); n + 1];
    let x = MPoly::x();
    let y = &MPoly::y1() + &MPoly::y2();
    for k in 1..=n {
        let mut sq = MPoly::zero();
        for i in 1..k {
            sq += &(&p[i] * &p[k - i]);
        }
        let mut cube = MPoly::zero();
        for i in 1..k {
            cube += &(&p[i] * &p2[k - i]);
        }
        let mut sk = cube;
        for i in 1..k {
            sk += &(&p[i] * &s[k - i]);
        }
        let mut pk = &(&x * &sq) + &(&y * &sk);
        if k == 1 {
            pk += &MPoly::one();
        }
        p[k] = pk;
        p2[k] = sq;
        s[k] = sk;
    }
    SeriesPoly::from_coeffs(order, p)
}

/// `2 z P'(z) / (1 - P(z))`, whose `z^n` coefficient counts torsion pairs at
/// rank `n` by cell statistics.
pub fn series_torsion(order: usize) -> SeriesPoly {
    let p = series_p(order);
    let denom = SeriesPoly::one(order)
        .sub(&p)
        .inverse()
        .expect("1 - P has constant term 1");
    p.z_derivative().mul(&denom).scale(&MPoly::constant(2))
}
