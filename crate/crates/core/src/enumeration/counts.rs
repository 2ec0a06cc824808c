use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polygon::CellStatistics;

use super::mpoly::MPoly;

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

/// `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0i64;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p as i64;
        acc *= binomial(total, p as i64);
    }
    acc
}

/// Number of torsion pairs in the cluster tube of rank `n >= 1`.
pub fn torsion_count(n: usize) -> BigInt {
    assert!(n >= 1, "rank must be positive");
    let n = n as i64;
    let mut acc = BigInt::zero();
    let mut l = 0;
    while n - 1 - 2 * l >= 0 {
        acc += (BigInt::one() << (l + 1)) * binomial(n - 1 + l, l) * binomial(2 * n - 1, n - 1 - 2 * l);
        l += 1;
    }
    acc
}

/// Number of torsion pairs at rank `n` with `k` triangles, `l` cliques and
/// `m` empty cells.
pub fn torsion_count_refined(n: usize, k: usize, l: usize, m: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let free = n as i64 - 1 - (k + l + m) as i64;
    if free < (l + m) as i64 {
        return BigInt::zero();
    }
    2 * multinomial(&[n as u64 - 1, k as u64, l as u64, m as u64]) * binomial(free, (l + m) as i64)
}

/// Every nonzero refined count at rank `n`.
pub fn refined_table(n: usize) -> BTreeMap<CellStatistics, BigInt> {
    let mut table = BTreeMap::new();
    if n == 0 {
        return table;
    }
    for k in 0..n {
        for lm in 0..n {
            if k + 2 * lm > n - 1 {
                break;
            }
            for l in 0..=lm {
                let v = torsion_count_refined(n, k, l, lm - l);
                if !v.is_zero() {
                    table.insert(CellStatistics::new(k, l, lm - l), v);
                }
            }
        }
    }
    table
}

/// Twice `[z^(n-1)] (1/(1-z)) (z/Q(z))^n` for the compositional inverse
/// `Q(z) = z(1 - xz - (y1+y2) z^2/(1-z))` of `P`, expanded term by term.
///
/// Writing `u = xz + (y1+y2) z^2/(1-z)`, the power `(1-u)^(-n)` contributes
/// `C(n-1+j, j) u^j`, the multinomial theorem splits `u^j` by the exponents
/// `k, l, m` of `x, y1, y2`, and the remaining `(1-z)^-(l+m+1)` supplies
/// `z^i` with coefficient `C(l+m+i, l+m)`, where `i = n-1-k-2(l+m)`.
pub fn lagrange_coefficient(n: usize) -> MPoly {
    assert!(n >= 1, "rank must be positive");
    let mut out = MPoly::zero();
    let top = n as i64 - 1;
    for k in 0..=top {
        for l in 0..=top {
            for m in 0..=top {
                let i = top - k - 2 * (l + m);
                if i < 0 {
                    break;
                }
                let j = (k + l + m) as u64;
                let coeff = binomial(top + j as i64, j as i64)
                    * multinomial(&[k as u64, l as u64, m as u64])
                    * binomial(l + m + i, l + m);
                out.add_term([k as u32, l as u32, m as u32], 2 * coeff);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(multinomial(&[1, 1, 2]), BigInt::from(12));
        assert_eq!(multinomial(&[]), BigInt::one());
    }

    #[test]
    fn torsion_counts() {
        let expect = [2u64, 6, 32, 182, 1092];
        for (n, e) in (1..).zip(expect) {
            assert_eq!(torsion_count(n), BigInt::from(e));
        }
    }

    #[test]
    fn refined_examples() {
        assert_eq!(torsion_count_refined(2, 0, 0, 0), BigInt::from(2));
        assert_eq!(torsion_count_refined(2, 1, 0, 0), BigInt::from(4));
        assert_eq!(torsion_count_refined(2, 0, 1, 0), BigInt::zero());
        for n in 1..=30 {
            let sum: BigInt = refined_table(n).values().sum();
            assert_eq!(sum, torsion_count(n), "n={n}");
        }
    }

    #[test]
    fn lagrange_small() {
        assert_eq!(lagrange_coefficient(1), MPoly::constant(2));
        let mut two = MPoly::constant(2);
        two.add_term([1, 0, 0], BigInt::from(4));
        assert_eq!(lagrange_coefficient(2), two);
        for n in 1..=8 {
            let lc = lagrange_coefficient(n);
            for (s, v) in refined_table(n) {
                let (k, l, m) = s.as_tuple();
                assert_eq!(lc.coeff([k as u32, l as u32, m as u32]), v);
            }
            assert_eq!(lc.eval_ones(), torsion_count(n));
        }
    }
}
