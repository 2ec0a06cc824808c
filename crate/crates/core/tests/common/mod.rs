//! Helpers and naive oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tube_torsion::torsion::{is_finite_half, perp_contains, statistics, structured_masks};
use tube_torsion::{Arc, ArcOrbit, PeriodicDiagram};

pub fn arc(i: i64, j: i64) -> Arc {
    Arc::new(i, j).unwrap()
}

pub fn diag(n: usize, pairs: &[(i64, i64)]) -> PeriodicDiagram {
    PeriodicDiagram::from_pairs(n, pairs).unwrap()
}

/// The rank-10 finite half with wings over the spans `(2,3)`, `(3,6)`,
/// `(6,8)` and `(8,12)`.
pub fn ten_gon_example() -> PeriodicDiagram {
    diag(10, &[(8, 12), (8, 11), (9, 11), (3, 6), (3, 5), (4, 6), (6, 8)])
}

/// Every orbit at rank `n` with length in `2..=max_len`.
pub fn all_orbits(n: usize, max_len: i64) -> Vec<ArcOrbit> {
    (2..=max_len)
        .flat_map(|l| (0..n as i64).map(move |i| ArcOrbit::from_coords(n, i, i + l).unwrap()))
        .collect()
}

/// Crossing of orbits by scanning a window far wider than needed.
pub fn naive_orbits_cross(a: &ArcOrbit, b: &ArcOrbit) -> bool {
    let n = a.rank() as i64;
    let wide = (a.len() + b.len()) / n + 6;
    (-wide..=wide).any(|m| a.rep().crosses(&b.rep().shifted(m * n)))
}

/// The Ptolemy condition checked over all lifts with left endpoint in a
/// window well beyond one period on each side.
pub fn naive_is_ptolemy(x: &PeriodicDiagram) -> bool {
    naive_is_ptolemy_up_to(x, i64::MAX)
}

/// The Ptolemy condition for a diagram truncated at length `bound`:
/// completions longer than `bound` are not required.
pub fn naive_is_ptolemy_up_to(x: &PeriodicDiagram, bound: i64) -> bool {
    let n = x.rank() as i64;
    let max = x.max_len().unwrap_or(2);
    let span = 3 * (max + n);
    let lifts: Vec<Arc> = x
        .reps()
        .iter()
        .flat_map(|a| (-span / n - 1..=span / n + 1).map(move |m| a.shifted(m * n)))
        .collect();
    let has = |i: i64, j: i64| j - i < 2 || j - i > bound || x.contains_arc(&Arc::new(i, j).unwrap());
    for a in &lifts {
        for b in &lifts {
            if a.start() < b.start() && a.crosses(b) {
                let (ai, aj, bi, bj) = (a.start(), a.end(), b.start(), b.end());
                if !(has(ai, bi) && has(ai, bj) && has(bi, aj) && has(aj, bj)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Membership in `nc X` by scanning many lifts of every orbit of `x`.
pub fn naive_nc_contains(x: &PeriodicDiagram, a: &Arc) -> bool {
    let n = x.rank() as i64;
    x.reps().iter().all(|b| {
        let wide = (a.len() + b.len()) / n + 6;
        let base = (a.start() - b.start()).div_euclid(n);
        (base - wide..=base + wide).all(|m| !a.crosses(&b.shifted(m * n)))
    })
}

/// `count` distinct finite halves drawn uniformly from the structured
/// enumeration at rank `n`, deterministically for a given seed.
pub fn sample_halves(n: usize, count: usize, seed: u64) -> Vec<PeriodicDiagram> {
    let masks = cached_masks(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked: BTreeSet<u128> = masks
        .choose_multiple(&mut rng, count.min(masks.len()))
        .copied()
        .collect();
    picked
        .into_iter()
        .map(|m| PeriodicDiagram::from_short_orbit_mask(n, m).unwrap())
        .collect()
}

/// A random subset of the orbits of length `2..=max_len` at rank `n`.
pub fn random_diagram(n: usize, max_len: i64, rng: &mut ChaCha8Rng) -> PeriodicDiagram {
    use rand::Rng;
    let density = rng.gen_range(0.0..0.5);
    let orbits = all_orbits(n, max_len)
        .into_iter()
        .filter(|_| rng.gen_bool(density));
    PeriodicDiagram::from_orbits(n, orbits).unwrap()
}

fn cached_masks(n: usize) -> &'static [u128] {
    static MASKS: [OnceLock<Vec<u128>>; 11] = [const { OnceLock::new() }; 11];
    MASKS[n].get_or_init(|| structured_masks(n, 10).unwrap())
}

/// One finite half drawn uniformly at rank `n <= 10`.
pub fn sample_halves_cached(n: usize, rng: &mut ChaCha8Rng) -> PeriodicDiagram {
    let mask = *cached_masks(n).choose(rng).unwrap();
    PeriodicDiagram::from_short_orbit_mask(n, mask).unwrap()
}

/// The invariants every finite half must satisfy: nc X is Ptolemy up to the
/// enumeration bound and gives back X, the perpendicular side is infinite,
/// and τ behaves.
pub fn check_finite_half(x: &PeriodicDiagram) {
    let n = x.rank();
    let ni = n as i64;

    // nc X is Ptolemy, and X is recovered from it
    let nc = x.nc_enumerate(2 * ni + 2);
    assert!(naive_is_ptolemy_up_to(&nc, 2 * ni + 2), "nc of {x}");
    assert_eq!(&nc.nc_enumerate(ni), x, "double nc of {x}");

    // the perpendicular side is infinite: it has arcs of every length kn
    for k in (1..=3).filter(|k| k * ni >= 2) {
        assert!((0..ni).any(|i| perp_contains(x, &arc(i, i + k * ni))), "{x} length {}", k * ni);
    }
    // while X itself never exceeds length n
    assert!(x.max_len().map_or(true, |l| l <= ni));

    // τ
    let t = x.tau();
    assert!(is_finite_half(&t));
    assert_eq!(statistics(&t).unwrap(), statistics(x).unwrap());
    assert_eq!(&x.tau_pow(n), x);
    for a in x.nc_enumerate(2 * ni).reps().iter().take(20) {
        assert!(t.nc_contains(&a.shifted(-1)));
    }
    for i in 0..ni {
        for l in 2..=2 * ni + 1 {
            let a = arc(i, i + l);
            assert_eq!(x.nc_contains(&a), t.nc_contains(&a.shifted(-1)));
            assert_eq!(x.nc_contains(&a), naive_nc_contains(x, &a), "{x} {a}");
        }
    }
}
