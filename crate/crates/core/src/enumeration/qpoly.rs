use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::counts::{binomial, torsion_count_refined};

/// A polynomial in `q` with integer coefficients, lowest degree first and
/// without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a monic polynomial.
    pub fn div_rem_monic(&self, m: &QPoly) -> (QPoly, QPoly) {
        let dm = m.degree().expect("division by zero polynomial");
        assert!(m.coeffs[dm].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dm {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dm];
        for top in (dm..rem.len()).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            for (t, mc) in m.coeffs[..dm].iter().enumerate() {
                rem[top - dm + t] -= &c * mc;
            }
            quot[top - dm] = c;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &QPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        QPoly::new((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &rhs.scale(&BigInt::from(-1))
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn qint(n: usize) -> QPoly {
    QPoly::new(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfactorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| &acc * &qint(k))
}

/// The Gaussian binomial `[a choose b]_q`; zero when `b > a`.
pub fn qbinomial(a: usize, b: usize) -> QPoly {
    if b > a {
        return QPoly::zero();
    }
    // row r of the q-Pascal triangle, [r choose c] for c = 0..=b
    let mut row = vec![QPoly::one()];
    for r in 1..=a {
        let mut next = Vec::with_capacity(row.len() + 1);
        for c in 0..=r.min(b) {
            let left = if c == 0 { QPoly::zero() } else { row[c - 1].clone() };
            let right = row.get(c).map(|p| &QPoly::monomial(c) * p).unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(b)
}

/// `[p_1 + ... + p_r; p_1, ..., p_r]_q`.
pub fn qmultinomial(parts: &[usize]) -> QPoly {
    let mut total = 0;
    let mut acc = QPoly::one();
    for &p in parts {
        total += p;
        acc = &acc * &qbinomial(total, p);
    }
    acc
}

/// The `d`-th cyclotomic polynomial, by dividing `q^d - 1` by the cyclotomic
/// polynomials of the proper divisors.
pub fn cyclotomic(d: usize) -> QPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut p = &QPoly::monomial(d) - &QPoly::one();
    for e in (1..d).filter(|e| d % e == 0) {
        let (quot, rem) = p.div_rem_monic(&cyclotomic(e));
        debug_assert!(rem.is_zero());
        p = quot;
    }
    p
}

/// The value of `p` at a primitive `d`-th root of unity, when that value is
/// an integer detectable as a constant remainder modulo `Φ_d`.
pub fn eval_at_primitive_root(p: &QPoly, d: usize) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::NotADivisor(0, 0));
    }
    let (_, rem) = p.div_rem_monic(&cyclotomic(d));
    match rem.degree() {
        None => Ok(BigInt::zero()),
        Some(0) => Ok(rem.coeffs[0].clone()),
        Some(_) => Err(Error::NonConstantEvaluation(d)),
    }
}

/// `[a choose b]_q` at a primitive `d`-th root of unity when `d` divides `b`,
/// by the q-Lucas theorem: `C(a div d, b div d)`.
pub fn q_lucas(a: usize, b: usize, d: usize) -> Option<BigInt> {
    (d >= 1 && b % d == 0).then(|| binomial((a / d) as i64, (b / d) as i64))
}

/// The q-analogue of the refined count,
/// `2 [n-1+k+l+m; n-1, k, l, m]_q [n-1-k-l-m choose l+m]_q`.
pub fn refined_q(n: usize, k: usize, l: usize, m: usize) -> QPoly {
    if n == 0 || k + l + m > n - 1 {
        return QPoly::zero();
    }
    let p = &qmultinomial(&[n - 1, k, l, m]) * &qbinomial(n - 1 - k - l - m, l + m);
    let out = p.scale(&BigInt::from(2));
    debug_assert_eq!(out.eval_at_one(), torsion_count_refined(n, k, l, m));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn q_integers_and_factorials() {
        assert_eq!(qint(0), QPoly::zero());
        assert_eq!(qint(3), q(&[1, 1, 1]));
        assert_eq!(qfactorial(3), q(&[1, 2, 2, 1]));
        assert_eq!(qfactorial(0), QPoly::one());
    }

    #[test]
    fn q_binomials() {
        assert_eq!(qbinomial(2, 1), q(&[1, 1]));
        assert_eq!(qbinomial(4, 2), q(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinomial(7, 0), QPoly::one());
        assert_eq!(qbinomial(2, 3), QPoly::zero());
        assert_eq!(qbinomial(4, 2).to_string(), "1 + q + 2q^2 + q^3 + q^4");
        for a in 0..12 {
            for b in 0..=a {
                let p = qbinomial(a, b);
                assert_eq!(p.eval_at_one(), binomial(a as i64, b as i64));
                // [a]_q! = [b]_q! [a-b]_q! [a choose b]_q
                assert_eq!(&(&qfactorial(b) * &qfactorial(a - b)) * &p, qfactorial(a));
            }
        }
        assert_eq!(qmultinomial(&[1, 1]), q(&[1, 1]));
        assert_eq!(qmultinomial(&[2, 1, 1]).eval_at_one(), BigInt::from(12));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), q(&[-1, 1]));
        assert_eq!(cyclotomic(2), q(&[1, 1]));
        assert_eq!(cyclotomic(4), q(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), q(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), q(&[1, 0, -1, 0, 1]));
        // product over divisors of 12 is q^12 - 1
        let prod = [1, 2, 3, 4, 6, 12].iter().fold(QPoly::one(), |acc, &d| &acc * &cyclotomic(d));
        assert_eq!(prod, &QPoly::monomial(12) - &QPoly::one());
    }

    #[test]
    fn root_of_unity_values() {
        assert_eq!(eval_at_primitive_root(&qbinomial(2, 1), 2).unwrap(), BigInt::zero());
        assert_eq!(eval_at_primitive_root(&qbinomial(4, 2), 2).unwrap(), BigInt::from(2));
        assert_eq!(eval_at_primitive_root(&refined_q(2, 1, 0, 0), 2).unwrap(), BigInt::zero());
        assert_eq!(eval_at_primitive_root(&q(&[0, 1]), 3), Err(Error::NonConstantEvaluation(3)));
        assert_eq!(eval_at_primitive_root(&qbinomial(5, 2), 1).unwrap(), BigInt::from(10));
    }

    #[test]
    fn q_lucas_agrees_with_reduction() {
        let mut rows = vec![vec![QPoly::one()]];
        for a in 1..=40 {
            let prev = &rows[a - 1];
            let row: Vec<QPoly> = (0..=a)
                .map(|b| {
                    let left = if b == 0 { QPoly::zero() } else { prev[b - 1].clone() };
                    let right = prev.get(b).map(|p| &QPoly::monomial(b) * p).unwrap_or_default();
                    &left + &right
                })
                .collect();
            rows.push(row);
        }
        assert_eq!(rows[9][4], qbinomial(9, 4));
        for (a, row) in rows.iter().enumerate() {
            for d in 1..=a.max(1) {
                for b in (0..=a).step_by(d) {
                    let want = q_lucas(a, b, d).unwrap();
                    assert_eq!(eval_at_primitive_root(&row[b], d).unwrap(), want, "a={a} b={b} d={d}");
                }
            }
        }
        assert_eq!(q_lucas(4, 1, 2), None);
    }
}
