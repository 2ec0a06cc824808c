//! Growth constants of `T_n ~ α ρ^n / sqrt(π n)`.
//!
//! Roots are isolated exactly with Sturm sequences over the rationals and
//! then narrowed by bisection, so the only rounding is the final conversion
//! to `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::counts::torsion_count;

/// `8x^3 - 48x^2 - 47x + 4`, lowest degree first; `ρ` is its largest
/// positive root.
pub const RHO_POLY: [i64; 4] = [4, -47, -48, 8];

/// `71x^6 + 213x^4 - 72x^2 + 4`, lowest degree first; `α` is its smallest
/// positive root.
pub const ALPHA_POLY: [i64; 7] = [4, 0, -72, 0, 213, 0, 71];

const CONSTANT_PRECISION: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RootChoice {
    LargestPositive,
    SmallestPositive,
    /// The smallest root in `(lo, hi]`.
    Bracket(f64, f64),
}

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.clone();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for top in (db..rem.len()).rev() {
        let c = &rem[top] / lead;
        if c.is_zero() {
            continue;
        }
        for (t, bc) in b.iter().enumerate() {
            rem[top - db + t] -= &c * bc;
        }
        quot[top - db] = c;
    }
    (trim(quot), trim(rem))
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = std::mem::replace(&mut b, r);
    }
    a
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let dp = derivative(p);
    let g = gcd(p, &dp);
    let p0 = if g.len() > 1 { div_rem(p, &g).0 } else { p.clone() };
    let mut seq = vec![p0.clone(), derivative(&p0)];
    while seq.last().is_some_and(|q| !q.is_empty()) {
        let k = seq.len();
        let (_, r) = div_rem(&seq[k - 2], &seq[k - 1]);
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq.pop();
    seq
}

/// Sign changes of the sequence at `x`, zeros skipped. For a squarefree
/// leading polynomial, `variations(a) - variations(b)` counts the roots in
/// `(a, b]`.
fn variations(seq: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn rational(v: f64) -> Result<BigRational> {
    BigRational::from_f64(v).ok_or(Error::NoRoot)
}

/// A rational within `precision` above the chosen real root of the
/// polynomial with integer coefficients `coeffs`, lowest degree first.
pub fn real_root_rational(coeffs: &[i64], which: RootChoice, precision: f64) -> Result<BigRational> {
    let p = trim(
        coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
    );
    if p.len() < 2 || !(precision > 0.0) {
        return Err(Error::NoRoot);
    }
    let seq = sturm_sequence(&p);
    let (mut lo, mut hi) = match which {
        RootChoice::Bracket(a, b) if a < b => (rational(a)?, rational(b)?),
        RootChoice::Bracket(..) => return Err(Error::NoRoot),
        _ => {
            // Cauchy's bound on the absolute value of every root
            let lead = p.last().unwrap().abs();
            let max = p[..p.len() - 1].iter().map(|c| c.abs() / &lead).max().unwrap();
            (BigRational::zero(), max + BigRational::from_integer(BigInt::from(1)))
        }
    };
    let total = variations(&seq, &lo) - variations(&seq, &hi);
    if total == 0 {
        return Err(Error::NoRoot);
    }
    // the target is the `rank`-th root in (lo, hi]
    let mut rank = match which {
        RootChoice::LargestPositive => total,
        _ => 1,
    };
    let two = BigRational::from_integer(BigInt::from(2));
    let eps = rational(precision)?;
    while &hi - &lo >= eps {
        let mid = (&lo + &hi) / &two;
        let below = variations(&seq, &lo) - variations(&seq, &mid);
        if rank <= below {
            hi = mid;
        } else {
            rank -= below;
            lo = mid;
        }
    }
    Ok(hi)
}

/// The chosen real root as `f64`, accurate to `precision`.
pub fn real_root(coeffs: &[i64], which: RootChoice, precision: f64) -> Result<f64> {
    let r = real_root_rational(coeffs, which, precision)?;
    r.to_f64().ok_or(Error::NoRoot)
}

/// The exponential growth rate of `T_n`.
pub fn rho() -> f64 {
    real_root(&RHO_POLY, RootChoice::LargestPositive, CONSTANT_PRECISION).expect("ρ exists")
}

/// The constant `α` in `T_n ~ α ρ^n / sqrt(π n)`.
pub fn alpha() -> f64 {
    real_root(&ALPHA_POLY, RootChoice::SmallestPositive, CONSTANT_PRECISION).expect("α exists")
}

fn ln_big(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    (v >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// `(T_{n+1}/T_n, T_n sqrt(π n)/ρ^n)`, from exact counts; these tend to `ρ`
/// and `α`.
pub fn asymptotic_check(n: usize) -> (f64, f64) {
    assert!(n >= 1, "rank must be positive");
    let t = torsion_count(n);
    let t1 = torsion_count(n + 1);
    let ratio = BigRational::new(t1, t.clone()).to_f64().unwrap();
    let nf = n as f64;
    let alpha_est = (ln_big(&t) + 0.5 * (std::f64::consts::PI * nf).ln() - nf * rho().ln()).exp();
    (ratio, alpha_est)
}
