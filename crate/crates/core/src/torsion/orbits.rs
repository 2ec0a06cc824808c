//! Counting torsion pairs up to the Auslander–Reiten translation.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arc_model::PeriodicDiagram;
use crate::enumeration::{refined_table, torsion_count, torsion_count_refined};
use crate::error::{Error, Result};
use crate::polygon::CellStatistics;

use super::enumerate::{enumerate_structured_with_cap, DEFAULT_STRUCTURED_CAP};
use super::statistics;

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// `<τ>`-orbits of torsion pairs at rank `n` by the Cauchy–Frobenius formula:
/// `τ^b` fixes exactly the pairs coming from rank `gcd(b, n)`.
pub fn orbit_count(n: usize) -> BigInt {
    assert!(n >= 1, "rank must be positive");
    let total: BigInt = (0..n).map(|b| torsion_count(b.gcd(&n))).sum();
    let (q, r) = total.div_rem(&BigInt::from(n));
    debug_assert!(r.is_zero());
    q
}

/// Orbits by cell statistics. An element of order `e` fixes
/// `T_{n/e, k/e, l/e, m/e}` pairs with statistics `(k, l, m)`, and `<τ>`
/// has `φ(e)` elements of order `e`.
pub fn orbit_count_refined(n: usize) -> BTreeMap<CellStatistics, BigInt> {
    assert!(n >= 1, "rank must be positive");
    refined_table(n)
        .into_keys()
        .map(|s| {
            let (k, l, m) = s.as_tuple();
            let total: BigInt = (1..=n)
                .filter(|e| n % e == 0 && k % e == 0 && l % e == 0 && m % e == 0)
                .map(|e| euler_phi(e) * torsion_count_refined(n / e, k / e, l / e, m / e))
                .sum();
            (s, total / n)
        })
        .collect()
}

/// The lexicographically least short-orbit mask over the `τ`-orbit of `x`.
fn canonical_mask(x: &PeriodicDiagram) -> u128 {
    (0..x.rank())
        .map(|b| x.tau_pow(b).short_orbit_mask().expect("finite halves have short orbits"))
        .min()
        .unwrap()
}

fn enumerate_for_orbits(n: usize, cap: usize) -> Result<Vec<PeriodicDiagram>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    enumerate_structured_with_cap(n, cap)
}

/// `<τ>`-orbits of torsion pairs at rank `n`, by partitioning the enumerated
/// finite halves; `τ` preserves the finite side, so each half-orbit gives
/// two pair orbits.
pub fn orbit_count_direct(n: usize) -> Result<BigInt> {
    orbit_count_direct_with_cap(n, DEFAULT_STRUCTURED_CAP)
}

pub fn orbit_count_direct_with_cap(n: usize, cap: usize) -> Result<BigInt> {
    let reps: BTreeSet<u128> = enumerate_for_orbits(n, cap)?.par_iter().map(canonical_mask).collect();
    Ok(BigInt::from(2 * reps.len()))
}

pub fn orbit_count_refined_direct(n: usize) -> Result<BTreeMap<CellStatistics, BigInt>> {
    orbit_count_refined_direct_with_cap(n, DEFAULT_STRUCTURED_CAP)
}

pub fn orbit_count_refined_direct_with_cap(
    n: usize,
    cap: usize,
) -> Result<BTreeMap<CellStatistics, BigInt>> {
    let reps: Vec<(u128, CellStatistics)> = enumerate_for_orbits(n, cap)?
        .par_iter()
        .map(|x| Ok((canonical_mask(x), statistics(x)?)))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<(u128, CellStatistics)> = reps.into_iter().collect();
    let mut out = BTreeMap::new();
    for (_, s) in distinct {
        *out.entry(s).or_insert_with(BigInt::zero) += 2;
    }
    Ok(out)
}
