//! Enumerators for finite halves.
//!
//! [`enumerate_brute`] scans every subset of the `n(n-1)` orbits of length
//! `2..=n` and keeps the Ptolemy ones. [`enumerate_structured`] instead picks
//! a cut set and fills each span with a polygon Ptolemy diagram. The two
//! share nothing beyond the crossing predicate, and serve as oracles for one
//! another.

use rayon::prelude::*;

use crate::arc_model::{shift_window, Arc, PeriodicDiagram};
use crate::error::{Error, Result};
use crate::polygon::{enumerate_polygon, PolygonDiagram};

use super::wings::{compose, WingDecomposition};

pub const DEFAULT_BRUTE_CAP: usize = 5;
pub const DEFAULT_STRUCTURED_CAP: usize = 9;

const BRUTE_HARD_CAP: usize = 6;
const STRUCTURED_HARD_CAP: usize = 10;

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what,
            requested: n,
            cap,
        });
    }
    Ok(())
}

impl PeriodicDiagram {
    /// Inverse of [`PeriodicDiagram::short_orbit_mask`].
    pub fn from_short_orbit_mask(rank: usize, mask: u128) -> Result<Self> {
        let n = rank as i64;
        let universe = rank * rank.saturating_sub(1);
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if universe < 128 && mask >> universe != 0 {
            return Err(Error::NotFiniteHalf("mask has bits outside the orbit universe".into()));
        }
        let arcs = (0..universe as i64)
            .filter(|t| mask >> t & 1 == 1)
            .map(|t| Arc::new_unchecked(t % n, t % n + t / n + 2));
        PeriodicDiagram::from_arcs(rank, arcs)
    }
}

/// For each pair of short orbits `a <= b` that cross at some shift, the orbits
/// every such crossing forces; `None` when a forced orbit is longer than `n`.
fn ptolemy_requirements(n: usize) -> Vec<Vec<(usize, Option<u64>)>> {
    let rank = n as i64;
    let universe: Vec<Arc> = (2..=rank)
        .flat_map(|len| (0..rank).map(move |i| Arc::new_unchecked(i, i + len)))
        .collect();
    let index_of = |a: Arc| -> Option<usize> {
        let len = a.len();
        (len <= rank).then(|| ((len - 2) * rank + a.start().rem_euclid(rank)) as usize)
    };
    let mut table = vec![Vec::new(); universe.len()];
    for (ia, &a) in universe.iter().enumerate() {
        for (ib, &b) in universe.iter().enumerate().skip(ia) {
            let w = shift_window(a.len(), b.len(), n);
            let mut crossed = false;
            let mut required = Some(0u64);
            for m in -w..=w {
                let b = b.shifted(m * rank);
                if !a.crosses(&b) {
                    continue;
                }
                crossed = true;
                let (p, q) = if a.start() < b.start() { (a, b) } else { (b, a) };
                for (s, t) in [
                    (p.start(), q.start()),
                    (p.start(), q.end()),
                    (q.start(), p.end()),
                    (p.end(), q.end()),
                ] {
                    if t - s < 2 {
                        continue;
                    }
                    required = match (required, index_of(Arc::new_unchecked(s, t))) {
                        (Some(r), Some(c)) => Some(r | 1 << c),
                        _ => None,
                    };
                }
            }
            if crossed {
                table[ia].push((ib, required));
            }
        }
    }
    table
}

fn brute_masks(n: usize) -> Vec<u64> {
    let table = ptolemy_requirements(n);
    let k = n * (n - 1);
    (0u64..1 << k)
        .into_par_iter()
        .filter(|&mask| {
            let mut rest = mask;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                for &(b, req) in &table[a] {
                    if mask >> b & 1 == 0 {
                        continue;
                    }
                    match req {
                        None => return false,
                        Some(r) if r & !mask != 0 => return false,
                        _ => {}
                    }
                }
            }
            true
        })
        .collect()
}

/// All finite halves at rank `n` by exhaustive subset scan (`n <= 5`).
pub fn enumerate_brute(n: usize) -> Result<Vec<PeriodicDiagram>> {
    enumerate_brute_with_cap(n, DEFAULT_BRUTE_CAP)
}

/// Sorted by [`PeriodicDiagram::short_orbit_mask`]. The cap is clamped to 6.
pub fn enumerate_brute_with_cap(n: usize, cap: usize) -> Result<Vec<PeriodicDiagram>> {
    check_cap("brute-force rank", n, cap.min(BRUTE_HARD_CAP))?;
    brute_masks(n)
        .into_iter()
        .map(|m| PeriodicDiagram::from_short_orbit_mask(n, m as u128))
        .collect()
}

/// Calls `f` on every composition of a fixed cut set.
fn fill_cut_set(
    n: usize,
    cuts: &[i64],
    polygons: &[Vec<PolygonDiagram>],
    f: &mut impl FnMut(PeriodicDiagram),
) {
    let rank = n as i64;
    let gaps: Vec<usize> = (0..cuts.len())
        .map(|k| (cuts.get(k + 1).copied().unwrap_or(cuts[0] + rank) - cuts[k]) as usize)
        .collect();
    let mut choice = vec![0usize; cuts.len()];
    loop {
        let pieces = gaps
            .iter()
            .zip(&choice)
            .map(|(&g, &c)| polygons[g][c].clone())
            .collect();
        let w = WingDecomposition::new(n, cuts.to_vec(), pieces)
            .expect("cut sets and polygon sizes are consistent by construction");
        f(compose(&w));

        // odometer over the polygon choices
        let mut k = 0;
        loop {
            if k == choice.len() {
                return;
            }
            choice[k] += 1;
            if choice[k] < polygons[gaps[k]].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn structured_par<T: Send>(
    n: usize,
    cap: usize,
    map: impl Fn(PeriodicDiagram) -> T + Sync,
) -> Result<Vec<T>> {
    check_cap("structured rank", n, cap.min(STRUCTURED_HARD_CAP))?;
    let polygons: Vec<Vec<PolygonDiagram>> = std::iter::once(Ok(Vec::new()))
        .chain((1..=n).map(enumerate_polygon))
        .collect::<Result<_>>()?;
    let rank = n as i64;
    let per_subset: Vec<Vec<T>> = (1u32..1 << n)
        .into_par_iter()
        .map(|subset| {
            let cuts: Vec<i64> = (0..rank).filter(|&v| subset >> v & 1 == 1).collect();
            let mut out = Vec::new();
            fill_cut_set(n, &cuts, &polygons, &mut |x| out.push(map(x)));
            out
        })
        .collect();
    Ok(per_subset.into_iter().flatten().collect())
}

/// Sorted short-orbit masks of every structured finite half; the compact form
/// used for large ranks.
pub fn structured_masks(n: usize, cap: usize) -> Result<Vec<u128>> {
    let mut masks = structured_par(n, cap, |x| {
        x.short_orbit_mask().expect("finite halves have short orbits")
    })?;
    masks.par_sort_unstable();
    Ok(masks)
}

/// All finite halves at rank `n` via cut sets and polygon diagrams (`n <= 9`).
pub fn enumerate_structured(n: usize) -> Result<Vec<PeriodicDiagram>> {
    enumerate_structured_with_cap(n, DEFAULT_STRUCTURED_CAP)
}

/// Sorted by [`PeriodicDiagram::short_orbit_mask`]. The cap is clamped to 10.
pub fn enumerate_structured_with_cap(n: usize, cap: usize) -> Result<Vec<PeriodicDiagram>> {
    let mut xs = structured_par(n, cap, |x| (x.short_orbit_mask().unwrap(), x))?;
    xs.par_sort_unstable_by_key(|(m, _)| *m);
    Ok(xs.into_iter().map(|(_, x)| x).collect())
}

/// Finite halves at rank `n` invariant under `tau^d`.
pub fn fixed_under(n: usize, d: usize) -> Result<Vec<PeriodicDiagram>> {
    fixed_under_with_cap(n, d, DEFAULT_STRUCTURED_CAP)
}

pub fn fixed_under_with_cap(n: usize, d: usize, cap: usize) -> Result<Vec<PeriodicDiagram>> {
    if d == 0 || n % d != 0 {
        return Err(Error::NotADivisor(d, n));
    }
    Ok(enumerate_structured_with_cap(n, cap)?
        .into_iter()
        .filter(|x| x.tau_pow(d) == *x)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn mask_round_trip() {
        let x = PeriodicDiagram::from_pairs(4, &[(1, 3), (3, 7), (2, 4)]).unwrap();
        let m = x.short_orbit_mask().unwrap();
        assert_eq!(PeriodicDiagram::from_short_orbit_mask(4, m).unwrap(), x);
        assert!(PeriodicDiagram::from_short_orbit_mask(2, 1 << 2).is_err());
    }

    #[test]
    fn brute_small_ranks() {
        assert_eq!(enumerate_brute(1).unwrap(), vec![PeriodicDiagram::empty(1).unwrap()]);
        let two = enumerate_brute(2).unwrap();
        let expect: BTreeSet<String> = [r#"{"rank":2,"orbits":[]}"#, r#"{"rank":2,"orbits":[[0,2]]}"#, r#"{"rank":2,"orbits":[[1,3]]}"#]
            .into_iter()
            .map(String::from)
            .collect();
        assert_eq!(two.iter().map(PeriodicDiagram::to_json).collect::<BTreeSet<_>>(), expect);
        assert_eq!(enumerate_brute(4).unwrap().len(), 91);
    }

    #[test]
    fn requirement_table_agrees_with_is_ptolemy() {
        for n in 1..=3 {
            let k = n * (n - 1);
            let fast: BTreeSet<u64> = brute_masks(n).into_iter().collect();
            for mask in 0u64..1 << k {
                let x = PeriodicDiagram::from_short_orbit_mask(n, mask as u128).unwrap();
                assert_eq!(fast.contains(&mask), x.is_ptolemy(), "n={n} {x}");
            }
        }
    }

    #[test]
    fn structured_expansions() {
        assert_eq!(enumerate_structured(1).unwrap(), vec![PeriodicDiagram::empty(1).unwrap()]);
        // 3·a₃ + 3·a₂ + 1
        assert_eq!(enumerate_structured(3).unwrap().len(), 3 * 4 + 3 + 1);
        // 5·82 + 5·17 + 5·4 + 5·4 + 5 + 5 + 1
        assert_eq!(enumerate_structured(5).unwrap().len(), 5 * 82 + 5 * 17 + 5 * 4 + 5 * 4 + 5 + 5 + 1);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(enumerate_brute(6), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_brute_with_cap(7, 99), Err(Error::CapExceeded { cap: 6, .. })));
        assert!(matches!(enumerate_structured(10), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_structured(0), Err(Error::ZeroRank)));
    }

    #[test]
    fn fixed_points() {
        assert_eq!(fixed_under(2, 1).unwrap(), vec![PeriodicDiagram::empty(2).unwrap()]);
        assert_eq!(fixed_under(2, 2).unwrap().len(), 3);
        assert_eq!(fixed_under(4, 2).unwrap().len(), 3);
        assert_eq!(fixed_under(6, 3).unwrap().len(), 16);
        assert!(matches!(fixed_under(4, 3), Err(Error::NotADivisor(3, 4))));
    }
}
