//! Cutting a finite half at the vertices no arc overarches.

use serde::{Deserialize, Serialize};

use crate::arc_model::{Arc, PeriodicDiagram};
use crate::error::{Error, Result};
use crate::polygon::{is_ptolemy_polygon, PolygonDiagram};

use super::require_finite_half;

/// A finite half split into wings.
///
/// `cuts` are the vertices in `[0, n)` not strictly overarched by any arc;
/// consecutive cuts `c_k < c_{k+1}` (with `c_{r+1} = c_1 + n`) bound a span
/// of `g = c_{k+1} - c_k` steps carrying a polygon diagram of size `g`, whose
/// base edge is the top arc `(c_k, c_{k+1})`. Unit spans carry the degenerate
/// diagram and contribute no arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WingDecomposition {
    rank: usize,
    cuts: Vec<i64>,
    pieces: Vec<PolygonDiagram>,
}

impl WingDecomposition {
    pub fn new(rank: usize, cuts: Vec<i64>, pieces: Vec<PolygonDiagram>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if cuts.is_empty() {
            return bad("at least one cut is required".into());
        }
        if cuts.len() != pieces.len() {
            return bad(format!("{} cuts but {} pieces", cuts.len(), pieces.len()));
        }
        let n = rank as i64;
        if cuts[0] < 0 || *cuts.last().unwrap() >= n || cuts.windows(2).any(|w| w[0] >= w[1]) {
            return bad(format!("cuts {cuts:?} must increase strictly within [0, {n})"));
        }
        for (k, p) in pieces.iter().enumerate() {
            let gap = Self::gap_at(&cuts, n, k);
            if p.size() as i64 != gap {
                return bad(format!("piece {k} has size {} but spans {gap}", p.size()));
            }
            if !is_ptolemy_polygon(p) {
                return bad(format!("piece {k} is not a Ptolemy diagram"));
            }
        }
        Ok(Self { rank, cuts, pieces })
    }

    fn gap_at(cuts: &[i64], n: i64, k: usize) -> i64 {
        let next = cuts.get(k + 1).copied().unwrap_or(cuts[0] + n);
        next - cuts[k]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cuts(&self) -> &[i64] {
        &self.cuts
    }

    pub fn pieces(&self) -> &[PolygonDiagram] {
        &self.pieces
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.cuts.len())
            .map(|k| Self::gap_at(&self.cuts, self.rank as i64, k))
            .collect()
    }

    /// The spans `(c_k, c_{k+1})` in absolute coordinates.
    pub fn spans(&self) -> Vec<(i64, i64)> {
        self.cuts.iter().zip(self.gaps()).map(|(&c, g)| (c, c + g)).collect()
    }

    /// Arcs of each wing in absolute coordinates, top arc included.
    pub fn pairs(&self) -> Vec<WingPair> {
        self.spans()
            .into_iter()
            .zip(&self.pieces)
            .map(|((lo, hi), p)| {
                let mut arcs: Vec<[i64; 2]> = p
                    .diagonals()
                    .iter()
                    .map(|&(a, b)| [lo + a as i64, lo + b as i64])
                    .collect();
                if hi - lo >= 2 {
                    arcs.push([lo, hi]);
                }
                arcs.sort_unstable();
                WingPair { top: [lo, hi], arcs }
            })
            .collect()
    }

    /// Inverse of [`pairs`](Self::pairs). Tops may be given in any shift by a
    /// multiple of `rank`; pairs may come in any order.
    pub fn from_pairs(rank: usize, pairs: &[WingPair]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let n = rank as i64;
        let mut located = Vec::with_capacity(pairs.len());
        for pair in pairs {
            let [lo, hi] = pair.top;
            if hi <= lo {
                return Err(Error::InvalidDecomposition(format!("top ({lo},{hi}) is reversed")));
            }
            let mut diagonals = Vec::new();
            for &[a, b] in &pair.arcs {
                if a < lo || b > hi || b - a < 2 {
                    return Err(Error::InvalidDecomposition(format!(
                        "arc ({a},{b}) does not lie under ({lo},{hi})"
                    )));
                }
                if (a, b) != (lo, hi) {
                    diagonals.push(((a - lo) as usize, (b - lo) as usize));
                }
            }
            let size = usize::try_from(hi - lo).map_err(|_| Error::InvalidDecomposition("span too large".into()))?;
            let piece = PolygonDiagram::new(size, diagonals)?;
            located.push((lo.rem_euclid(n), piece));
        }
        located.sort_by_key(|(c, _)| *c);
        let (cuts, pieces) = located.into_iter().unzip();
        Self::new(rank, cuts, pieces)
    }
}

/// One wing as listed in JSON: the top pair and every arc under it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WingPair {
    pub top: [i64; 2],
    pub arcs: Vec<[i64; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WingRepr {
    rank: usize,
    pairs: Vec<WingPair>,
}

impl Serialize for WingDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WingRepr {
            rank: self.rank,
            pairs: self.pairs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WingDecomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WingRepr::deserialize(d)?;
        WingDecomposition::from_pairs(r.rank, &r.pairs).map_err(serde::de::Error::custom)
    }
}

/// Splits a finite half into its wings.
pub fn decompose(x: &PeriodicDiagram) -> Result<WingDecomposition> {
    require_finite_half(x)?;
    let n = x.rank() as i64;
    // With lengths at most n and left endpoints in [0, n), only the lifts
    // through v and v + n can overarch v.
    let cuts: Vec<i64> = (0..n)
        .filter(|&v| {
            !x.reps()
                .iter()
                .any(|a| a.overarches_vertex(v) || a.overarches_vertex(v + n))
        })
        .collect();
    if cuts.is_empty() {
        return Err(Error::NotFiniteHalf("every vertex is overarched".into()));
    }
    let mut pieces = Vec::with_capacity(cuts.len());
    for (k, &lo) in cuts.iter().enumerate() {
        let hi = cuts.get(k + 1).copied().unwrap_or(cuts[0] + n);
        if hi - lo == 1 {
            pieces.push(PolygonDiagram::degenerate());
            continue;
        }
        let top = Arc::new_unchecked(lo, hi);
        if !x.contains_arc(&top) {
            return Err(Error::NotFiniteHalf(format!("top arc {top} of a wing is missing")));
        }
        let diagonals = x
            .orbits()
            .flat_map(|o| o.lifts_within(lo, hi).collect::<Vec<_>>())
            .filter(|a| *a != top)
            .map(|a| ((a.start() - lo) as usize, (a.end() - lo) as usize));
        pieces.push(PolygonDiagram::new((hi - lo) as usize, diagonals)?);
    }
    WingDecomposition::new(x.rank(), cuts, pieces)
}

/// Reassembles the periodic diagram from its wings.
pub fn compose(w: &WingDecomposition) -> PeriodicDiagram {
    let mut arcs = Vec::new();
    for ((lo, hi), p) in w.spans().into_iter().zip(&w.pieces) {
        if hi - lo >= 2 {
            arcs.push(Arc::new_unchecked(lo, hi));
        }
        arcs.extend(
            p.diagonals()
                .iter()
                .map(|&(a, b)| Arc::new_unchecked(lo + a as i64, lo + b as i64)),
        );
    }
    PeriodicDiagram::from_arcs_unchecked(w.rank, arcs)
}
