//! Arcs of the ∞-gon and their `n`-periodic quotient.
//!
//! An arc `(i, j)` with `j - i >= 2` stands for the vertex `(i, j)` of the
//! translation quiver `ZA_∞`; in the cluster tube of rank `n` the arcs
//! `(i + rn, j + rn)` are identified. An [`ArcOrbit`] is such a class, stored
//! by its canonical representative with left endpoint in `[0, n)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An arc `(i, j)` of the ∞-gon, `j - i >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    i: i64,
    j: i64,
}

impl Arc {
    pub fn new(i: i64, j: i64) -> Result<Self> {
        if j - i < 2 {
            return Err(Error::InvalidArc(i, j));
        }
        Ok(Self { i, j })
    }

    pub(crate) const fn new_unchecked(i: i64, j: i64) -> Self {
        Self { i, j }
    }

    #[inline]
    pub fn start(&self) -> i64 {
        self.i
    }

    #[inline]
    pub fn end(&self) -> i64 {
        self.j
    }

    #[inline]
    pub fn len(&self) -> i64 {
        self.j - self.i
    }

    /// Height of the corresponding vertex in the AR-quiver; the mouth is level 1.
    pub fn level(&self) -> i64 {
        self.j - self.i - 1
    }

    #[inline]
    pub fn shifted(&self, by: i64) -> Self {
        Self {
            i: self.i + by,
            j: self.j + by,
        }
    }

    /// Strict interleaving of endpoints. Shared endpoints and nesting do not cross.
    #[inline]
    pub fn crosses(&self, other: &Arc) -> bool {
        (self.i < other.i && other.i < self.j && self.j < other.j)
            || (other.i < self.i && self.i < other.j && other.j < self.j)
    }

    /// True if `v` lies strictly between the endpoints.
    #[inline]
    pub fn overarches_vertex(&self, v: i64) -> bool {
        self.i < v && v < self.j
    }

    /// True if `other` lies in the wing of `self`, i.e. `i <= r < s <= j`.
    pub fn overarches(&self, other: &Arc) -> bool {
        self.i <= other.i && other.j <= self.j
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Crossing predicate on two arcs.
pub fn cross(a: &Arc, b: &Arc) -> bool {
    a.crosses(b)
}

fn normalize(arc: Arc, rank: usize) -> Arc {
    let n = rank as i64;
    let i = arc.i.rem_euclid(n);
    arc.shifted(i - arc.i)
}

/// Number of shifts by multiples of `n` to scan in either direction so that
/// every possible interleaving of two arcs with normalized representatives is
/// seen.
pub(crate) fn shift_window(len_a: i64, len_b: i64, rank: usize) -> i64 {
    let n = rank as i64;
    (len_a + len_b + n - 1) / n + 1
}

/// A shift class `{(i + rn, j + rn)}` of arcs; an indecomposable object of the
/// cluster tube of rank `rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArcOrbit {
    rank: usize,
    rep: Arc,
}

impl ArcOrbit {
    pub fn new(rank: usize, arc: Arc) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self {
            rank,
            rep: normalize(arc, rank),
        })
    }

    pub fn from_coords(rank: usize, i: i64, j: i64) -> Result<Self> {
        Self::new(rank, Arc::new(i, j)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonical representative, left endpoint in `[0, rank)`.
    pub fn rep(&self) -> Arc {
        self.rep
    }

    pub fn len(&self) -> i64 {
        self.rep.len()
    }

    pub fn level(&self) -> i64 {
        self.rep.level()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        arc.len() == self.rep.len()
            && (arc.i - self.rep.i).rem_euclid(self.rank as i64) == 0
    }

    /// Applies the translation `(i, j) -> (i + by, j + by)`.
    pub fn shifted(&self, by: i64) -> Self {
        Self {
            rank: self.rank,
            rep: normalize(self.rep.shifted(by), self.rank),
        }
    }

    /// All lifts `(a, b)` of this orbit with `lo <= a` and `b <= hi`.
    pub fn lifts_within(&self, lo: i64, hi: i64) -> impl Iterator<Item = Arc> + '_ {
        let n = self.rank as i64;
        let first = (lo - self.rep.i + n - 1).div_euclid(n);
        (first..)
            .map(move |r| self.rep.shifted(r * n))
            .take_while(move |a| a.j <= hi)
    }

    fn sort_key(&self) -> (usize, i64, i64) {
        (self.rank, self.rep.len(), self.rep.i)
    }
}

impl PartialOrd for ArcOrbit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ArcOrbit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for ArcOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

fn some_shift_crosses(a: Arc, b: Arc, rank: usize) -> bool {
    let n = rank as i64;
    let w = shift_window(a.len(), b.len(), rank);
    (-w..=w).any(|m| a.crosses(&b.shifted(m * n)))
}

/// True iff some shift of `b`'s representative crosses `a`'s representative.
pub fn orbits_cross(a: &ArcOrbit, b: &ArcOrbit) -> Result<bool> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch(a.rank, b.rank));
    }
    Ok(some_shift_crosses(a.rep, b.rep, a.rank))
}

/// `#{m : lo < x + m n < hi}`.
fn count_shifts_strictly_between(lo: i64, hi: i64, x: i64, n: i64) -> u64 {
    // smallest m with x + mn >= lo + 1, largest m with x + mn <= hi - 1
    let first = -(-(lo + 1 - x)).div_euclid(n);
    let last = (hi - 1 - x).div_euclid(n);
    if last < first {
        0
    } else {
        (last - first + 1) as u64
    }
}

/// Dimension of Ext¹ between two indecomposables of the cluster tube.
///
/// With `(i, j)` the shorter and `(k, l)` the longer representative this is
/// `#{m : i < k + mn < j} + #{m : i < l + mn < j}`.
pub fn ext1_dim(a: &ArcOrbit, b: &ArcOrbit) -> Result<u64> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch(a.rank, b.rank));
    }
    let (short, long) = if a.len() <= b.len() {
        (a.rep, b.rep)
    } else {
        (b.rep, a.rep)
    };
    let n = a.rank as i64;
    Ok(count_shifts_strictly_between(short.i, short.j, long.i, n)
        + count_shifts_strictly_between(short.i, short.j, long.j, n))
}

/// An indecomposable is rigid iff its arc has length at most the rank.
pub fn is_rigid(a: &ArcOrbit) -> bool {
    a.len() <= a.rank as i64
}

/// A finite set of arc orbits at a fixed rank: an `n`-periodic collection of
/// arcs, i.e. a subcategory of the cluster tube closed under shifts.
///
/// Orbits are kept sorted by `(length, left endpoint)` and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicDiagram {
    rank: usize,
    reps: Vec<Arc>,
}

fn rep_key(a: &Arc) -> (i64, i64) {
    (a.len(), a.i)
}

impl PeriodicDiagram {
    pub fn empty(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self {
            rank,
            reps: Vec::new(),
        })
    }

    /// Builds the diagram generated by the given arcs (each stands for its orbit).
    pub fn from_arcs<I: IntoIterator<Item = Arc>>(rank: usize, arcs: I) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self::from_arcs_unchecked(rank, arcs))
    }

    pub(crate) fn from_arcs_unchecked<I: IntoIterator<Item = Arc>>(rank: usize, arcs: I) -> Self {
        let mut reps: Vec<Arc> = arcs.into_iter().map(|a| normalize(a, rank)).collect();
        reps.sort_unstable_by_key(rep_key);
        reps.dedup();
        Self { rank, reps }
    }

    pub fn from_pairs(rank: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        let arcs = pairs
            .iter()
            .map(|&(i, j)| Arc::new(i, j))
            .collect::<Result<Vec<_>>>()?;
        Self::from_arcs(rank, arcs)
    }

    pub fn from_orbits<I: IntoIterator<Item = ArcOrbit>>(rank: usize, orbits: I) -> Result<Self> {
        let mut arcs = Vec::new();
        for o in orbits {
            if o.rank != rank {
                return Err(Error::RankMismatch(rank, o.rank));
            }
            arcs.push(o.rep);
        }
        Self::from_arcs(rank, arcs)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonical representatives in serialization order.
    pub fn reps(&self) -> &[Arc] {
        &self.reps
    }

    pub fn orbits(&self) -> impl Iterator<Item = ArcOrbit> + '_ {
        self.reps.iter().map(move |&rep| ArcOrbit {
            rank: self.rank,
            rep,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn max_len(&self) -> Option<i64> {
        self.reps.last().map(Arc::len)
    }

    /// True iff the orbit of `arc` belongs to the diagram.
    pub fn contains_arc(&self, arc: &Arc) -> bool {
        let rep = normalize(*arc, self.rank);
        self.reps
            .binary_search_by_key(&rep_key(&rep), rep_key)
            .is_ok()
    }

    pub fn contains_orbit(&self, orbit: &ArcOrbit) -> bool {
        orbit.rank == self.rank && self.contains_arc(&orbit.rep)
    }

    /// Membership oracle for `nc X`: true iff no arc of the diagram crosses `arc`.
    pub fn nc_contains(&self, arc: &Arc) -> bool {
        let a = normalize(*arc, self.rank);
        !self
            .reps
            .iter()
            .any(|&b| some_shift_crosses(a, b, self.rank))
    }

    /// All orbits of length in `[2, max_len]` lying in `nc X`.
    pub fn nc_enumerate(&self, max_len: i64) -> Self {
        let n = self.rank as i64;
        let reps = (2..=max_len)
            .flat_map(|len| (0..n).map(move |i| Arc::new_unchecked(i, i + len)))
            .filter(|a| self.nc_contains(a));
        Self::from_arcs_unchecked(self.rank, reps)
    }

    /// The Ptolemy condition: whenever two arcs cross, every completion pair
    /// `(i,r), (i,s), (r,j), (j,s)` of length at least 2 is present.
    pub fn is_ptolemy(&self) -> bool {
        self.first_ptolemy_violation().is_none()
    }

    /// A crossing pair of lifts together with a missing completion, if any.
    pub fn first_ptolemy_violation(&self) -> Option<(Arc, Arc, Arc)> {
        let n = self.rank as i64;
        for (ia, &a) in self.reps.iter().enumerate() {
            for &b in &self.reps[ia..] {
                let w = shift_window(a.len(), b.len(), self.rank);
                for m in -w..=w {
                    let b = b.shifted(m * n);
                    if !a.crosses(&b) {
                        continue;
                    }
                    let (p, q) = if a.i < b.i { (a, b) } else { (b, a) };
                    for (s, t) in [(p.i, q.i), (p.i, q.j), (q.i, p.j), (p.j, q.j)] {
                        if t - s >= 2 {
                            let c = Arc::new_unchecked(s, t);
                            if !self.contains_arc(&c) {
                                return Some((p, q, c));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Shift every arc by `by` vertices.
    pub fn shifted(&self, by: i64) -> Self {
        Self::from_arcs_unchecked(self.rank, self.reps.iter().map(|a| a.shifted(by)))
    }

    /// Auslander–Reiten translation `(i, j) -> (i - 1, j - 1)`.
    pub fn tau(&self) -> Self {
        self.shifted(-1)
    }

    pub fn tau_pow(&self, k: usize) -> Self {
        let k = (k % self.rank) as i64;
        self.shifted(-k)
    }

    /// Bit index `(len - 2) * n + i` per orbit, when every orbit has length at
    /// most the rank and the universe of such orbits fits in 128 bits.
    pub fn short_orbit_mask(&self) -> Option<u128> {
        let n = self.rank as i64;
        if self.rank * self.rank.saturating_sub(1) > 128 {
            return None;
        }
        let mut mask = 0u128;
        for a in &self.reps {
            if a.len() > n {
                return None;
            }
            mask |= 1u128 << ((a.len() - 2) * n + a.i);
        }
        Some(mask)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialization is infallible")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for PeriodicDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.rank)?;
        for (k, a) in self.reps.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{a}]")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct DiagramRepr {
    pub(crate) rank: usize,
    pub(crate) orbits: Vec<[i64; 2]>,
}

impl From<&PeriodicDiagram> for DiagramRepr {
    fn from(d: &PeriodicDiagram) -> Self {
        Self {
            rank: d.rank,
            orbits: d.reps.iter().map(|a| [a.i, a.j]).collect(),
        }
    }
}

impl TryFrom<DiagramRepr> for PeriodicDiagram {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        let pairs: Vec<(i64, i64)> = r.orbits.iter().map(|p| (p[0], p[1])).collect();
        PeriodicDiagram::from_pairs(r.rank, &pairs)
    }
}

impl Serialize for PeriodicDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PeriodicDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DiagramRepr::deserialize(d)?;
        PeriodicDiagram::try_from(repr).map_err(serde::de::Error::custom)
    }
}
