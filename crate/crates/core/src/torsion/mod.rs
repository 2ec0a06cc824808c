//! Torsion pairs in the cluster tube of rank `n`.
//!
//! Exactly one half of a torsion pair has finitely many indecomposables, and
//! that half is an `n`-periodic Ptolemy diagram with every arc of length at
//! most `n`. A [`TorsionPair`] is stored as that finite half plus a flag for
//! which side it is; the infinite half is only available through
//! [`perp_contains`].

mod enumerate;
mod orbits;
mod pointed;
mod wings;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc_model::{Arc, DiagramRepr, PeriodicDiagram};
use crate::error::{Error, Result};
use crate::polygon::{statistics_polygon, CellStatistics};

pub use enumerate::{
    enumerate_brute, enumerate_brute_with_cap, enumerate_structured, enumerate_structured_with_cap,
    fixed_under, fixed_under_with_cap, structured_masks, DEFAULT_BRUTE_CAP, DEFAULT_STRUCTURED_CAP,
};
pub use orbits::{
    orbit_count, orbit_count_direct, orbit_count_direct_with_cap, orbit_count_refined,
    orbit_count_refined_direct, orbit_count_refined_direct_with_cap,
};
pub use pointed::{from_pointed_cycle, to_pointed_cycle, PointedCycle};
pub use wings::{compose, decompose, WingDecomposition, WingPair};

/// True iff `x` is Ptolemy and every orbit has length at most the rank.
pub fn is_finite_half(x: &PeriodicDiagram) -> bool {
    x.max_len().map_or(true, |l| l <= x.rank() as i64) && x.is_ptolemy()
}

pub(crate) fn require_finite_half(x: &PeriodicDiagram) -> Result<()> {
    if let Some(l) = x.max_len() {
        if l > x.rank() as i64 {
            return Err(Error::NotFiniteHalf(format!(
                "orbit of length {l} exceeds rank {}",
                x.rank()
            )));
        }
    }
    if let Some((a, b, c)) = x.first_ptolemy_violation() {
        return Err(Error::NotFiniteHalf(format!(
            "{a} and {b} cross but {c} is missing"
        )));
    }
    Ok(())
}

/// Membership in the perpendicular category: `a` lies in `Σ nc X`, i.e.
/// `(a.i + 1, a.j + 1)` crosses no arc of `x`.
pub fn perp_contains(x: &PeriodicDiagram, a: &Arc) -> bool {
    x.nc_contains(&a.shifted(1))
}

/// Orbits of length in `[2, max_len]` in the perpendicular category.
pub fn perp_enumerate(x: &PeriodicDiagram, max_len: i64) -> PeriodicDiagram {
    x.nc_enumerate(max_len).shifted(-1)
}

/// Triangle, clique and empty-cell counts summed over the wing pieces.
pub fn statistics(x: &PeriodicDiagram) -> Result<CellStatistics> {
    let w = decompose(x)?;
    w.pieces()
        .iter()
        .try_fold(CellStatistics::default(), |acc, p| Ok(acc + statistics_polygon(p)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiniteSide {
    /// The torsion class `X` is the finite half.
    Left,
    /// The torsion-free class `X^⊥` is the finite half.
    Right,
}

impl FiniteSide {
    pub fn as_str(&self) -> &'static str {
        match self {
            FiniteSide::Left => "left",
            FiniteSide::Right => "right",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionPair {
    finite_half: PeriodicDiagram,
    side: FiniteSide,
}

impl TorsionPair {
    pub fn new(finite_half: PeriodicDiagram, side: FiniteSide) -> Result<Self> {
        require_finite_half(&finite_half)?;
        Ok(Self { finite_half, side })
    }

    pub fn rank(&self) -> usize {
        self.finite_half.rank()
    }

    pub fn finite_half(&self) -> &PeriodicDiagram {
        &self.finite_half
    }

    pub fn finite_side(&self) -> FiniteSide {
        self.side
    }

    /// Whether `a` is an arc of the torsion class.
    pub fn torsion_contains(&self, a: &Arc) -> bool {
        match self.side {
            FiniteSide::Left => self.finite_half.contains_arc(a),
            // X = ⊥(X^⊥) corresponds to Σ⁻¹ nc (X^⊥)
            FiniteSide::Right => self.finite_half.nc_contains(&a.shifted(-1)),
        }
    }

    /// Whether `a` is an arc of the torsion-free class.
    pub fn torsion_free_contains(&self, a: &Arc) -> bool {
        match self.side {
            FiniteSide::Left => perp_contains(&self.finite_half, a),
            FiniteSide::Right => self.finite_half.contains_arc(a),
        }
    }

    pub fn tau(&self) -> Self {
        Self {
            finite_half: self.finite_half.tau(),
            side: self.side,
        }
    }

    pub fn statistics(&self) -> Result<CellStatistics> {
        statistics(&self.finite_half)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("torsion pair serialization is infallible")
    }
}

impl fmt::Display for TorsionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} finite: {}", self.side.as_str(), self.finite_half)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TorsionPairRepr {
    rank: usize,
    finite_side: FiniteSide,
    orbits: Vec<[i64; 2]>,
}

impl Serialize for TorsionPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = DiagramRepr::from(&self.finite_half);
        TorsionPairRepr {
            rank: d.rank,
            finite_side: self.side,
            orbits: d.orbits,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TorsionPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TorsionPairRepr::deserialize(d)?;
        let half = PeriodicDiagram::try_from(DiagramRepr {
            rank: r.rank,
            orbits: r.orbits,
        })
        .map_err(serde::de::Error::custom)?;
        TorsionPair::new(half, r.finite_side).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(n: usize, pairs: &[(i64, i64)]) -> PeriodicDiagram {
        PeriodicDiagram::from_pairs(n, pairs).unwrap()
    }

    fn arc(i: i64, j: i64) -> Arc {
        Arc::new(i, j).unwrap()
    }

    #[test]
    fn finite_half_examples() {
        assert!(is_finite_half(&PeriodicDiagram::empty(2).unwrap()));
        assert!(is_finite_half(&diag(2, &[(0, 2)])));
        assert!(!is_finite_half(&diag(2, &[(0, 3)])));
        assert!(!is_finite_half(&diag(2, &[(0, 2), (1, 3)])));
    }

    #[test]
    fn perp_examples() {
        let x = diag(2, &[(0, 2)]);
        assert!(perp_contains(&x, &arc(1, 3)));
        assert!(!perp_contains(&x, &arc(0, 2)));
        let e = PeriodicDiagram::empty(3).unwrap();
        assert!(perp_contains(&e, &arc(5, 19)));
    }

    #[test]
    fn statistics_examples() {
        assert_eq!(statistics(&PeriodicDiagram::empty(3).unwrap()).unwrap(), CellStatistics::default());
        assert_eq!(statistics(&diag(2, &[(0, 2)])).unwrap(), CellStatistics::new(1, 0, 0));
        assert_eq!(statistics(&diag(4, &[(1, 5)])).unwrap(), CellStatistics::new(0, 0, 1));
    }

    #[test]
    fn pair_sides() {
        let x = diag(2, &[(0, 2)]);
        let left = TorsionPair::new(x.clone(), FiniteSide::Left).unwrap();
        assert!(left.torsion_contains(&arc(2, 4)));
        assert!(!left.torsion_contains(&arc(1, 3)));
        assert!(left.torsion_free_contains(&arc(1, 3)));
        let right = TorsionPair::new(x, FiniteSide::Right).unwrap();
        assert!(right.torsion_free_contains(&arc(0, 2)));
        // Hom(X, X^⊥) = 0 on a sample of arcs: nothing in both classes
        for i in 0..2 {
            for l in 2..8 {
                let a = arc(i, i + l);
                assert!(!(right.torsion_contains(&a) && right.torsion_free_contains(&a)));
                assert!(!(left.torsion_contains(&a) && left.torsion_free_contains(&a)));
            }
        }
        assert!(TorsionPair::new(diag(2, &[(0, 3)]), FiniteSide::Left).is_err());
    }

    #[test]
    fn pair_json() {
        let p = TorsionPair::new(diag(4, &[(1, 3)]), FiniteSide::Right).unwrap();
        let s = p.to_json();
        assert_eq!(s, r#"{"rank":4,"finite_side":"right","orbits":[[1,3]]}"#);
        assert_eq!(serde_json::from_str::<TorsionPair>(&s).unwrap(), p);
        assert!(serde_json::from_str::<TorsionPair>(
            r#"{"rank":2,"finite_side":"left","orbits":[[0,2],[1,3]]}"#
        )
        .is_err());
    }
}
