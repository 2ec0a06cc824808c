//! Ptolemy diagrams on an `(m+1)`-gon with a distinguished base edge.
//!
//! Vertices are labelled `0..=m` clockwise starting at the base vertex; the
//! base edge is `(0, m)` and is always present. A diagram of size 1 is the
//! degenerate diagram: two vertices joined by the base edge.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on `m` for [`enumerate_polygon`].
pub const DEFAULT_POLYGON_CAP: usize = 10;
/// Upper bound on `m` for the plain subset scan [`enumerate_polygon_brute`].
pub const BRUTE_POLYGON_CAP: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolygonDiagram {
    size: usize,
    diagonals: Vec<(usize, usize)>,
}

#[inline]
fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

impl PolygonDiagram {
    pub fn new(size: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidPolygon("size must be at least 1".into()));
        }
        let mut diagonals: Vec<(usize, usize)> = diagonals.into_iter().collect();
        for &(a, b) in &diagonals {
            if a >= b || b > size || b - a < 2 || (a, b) == (0, size) {
                return Err(Error::InvalidPolygon(format!(
                    "({a},{b}) is not a diagonal of the {}-gon",
                    size + 1
                )));
            }
        }
        diagonals.sort_unstable();
        diagonals.dedup();
        Ok(Self { size, diagonals })
    }

    pub fn degenerate() -> Self {
        Self {
            size: 1,
            diagonals: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn is_degenerate(&self) -> bool {
        self.size == 1
    }

    pub fn has_diagonal(&self, a: usize, b: usize) -> bool {
        self.diagonals.binary_search(&(a, b)).is_ok()
    }

    /// Sides, the base edge and the stored diagonals.
    pub fn has_chord(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b - a == 1 || (a, b) == (0, self.size) || self.has_diagonal(a, b)
    }

    /// Diagonals crossed by no other diagonal.
    pub fn non_crossed(&self) -> Vec<(usize, usize)> {
        self.diagonals
            .iter()
            .copied()
            .filter(|&d| !self.diagonals.iter().any(|&e| chords_cross(d, e)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polygon serialization is infallible")
    }
}

impl fmt::Display for PolygonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-gon {:?}", self.size + 1, self.diagonals)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonRepr {
    size: usize,
    diagonals: Vec<[usize; 2]>,
}

impl Serialize for PolygonDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolygonRepr {
            size: self.size,
            diagonals: self.diagonals.iter().map(|&(a, b)| [a, b]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolygonDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolygonRepr::deserialize(d)?;
        PolygonDiagram::new(r.size, r.diagonals.into_iter().map(|[a, b]| (a, b)))
            .map_err(serde::de::Error::custom)
    }
}

/// Ptolemy condition on the polygon; the base edge and the sides count as present.
pub fn is_ptolemy_polygon(p: &PolygonDiagram) -> bool {
    let ds = &p.diagonals;
    for (k, &(i, j)) in ds.iter().enumerate() {
        for &(r, s) in &ds[k + 1..] {
            if !chords_cross((i, j), (r, s)) {
                continue;
            }
            let ((i, j), (r, s)) = if i < r { ((i, j), (r, s)) } else { ((r, s), (i, j)) };
            for (a, b) in [(i, r), (i, s), (r, j), (j, s)] {
                if !p.has_chord(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

fn all_diagonals(size: usize) -> Vec<(usize, usize)> {
    let mut ds = Vec::new();
    for a in 0..=size {
        for b in a + 2..=size {
            if (a, b) != (0, size) {
                ds.push((a, b));
            }
        }
    }
    ds
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidPolygon("size must be at least 1".into()));
    }
    if m > cap {
        return Err(Error::CapExceeded {
            what: "polygon size",
            requested: m,
            cap,
        });
    }
    Ok(())
}

/// Every Ptolemy diagram of size `m`, by scanning all subsets of diagonals.
pub fn enumerate_polygon_brute(m: usize) -> Result<Vec<PolygonDiagram>> {
    check_cap(m, BRUTE_POLYGON_CAP)?;
    let ds = all_diagonals(m);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << ds.len()) {
        let p = PolygonDiagram {
            size: m,
            diagonals: ds
                .iter()
                .enumerate()
                .filter(|(t, _)| mask >> t & 1 == 1)
                .map(|(_, &d)| d)
                .collect(),
        };
        if is_ptolemy_polygon(&p) {
            out.push(p);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Every Ptolemy diagram of size `m` (`1 <= m <= DEFAULT_POLYGON_CAP`), sorted.
pub fn enumerate_polygon(m: usize) -> Result<Vec<PolygonDiagram>> {
    enumerate_polygon_with_cap(m, DEFAULT_POLYGON_CAP)
}

/// Exhaustive search over diagonal subsets that decides diagonals shortest
/// first and abandons a branch as soon as a decided crossing pair has a
/// decided-absent completion.
pub fn enumerate_polygon_with_cap(m: usize, cap: usize) -> Result<Vec<PolygonDiagram>> {
    check_cap(m, cap.min(10))?;
    let mut ds = all_diagonals(m);
    ds.sort_by_key(|&(a, b)| (b - a, a));
    let index = |a: usize, b: usize| ds.iter().position(|&d| d == (a, b));

    // crossing[d]: (e, completion diagonals) for every e crossing d
    // forced_by[c]: pairs (d, e) that require c
    let k = ds.len();
    let mut crossing: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); k];
    let mut forced_by: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for d in 0..k {
        for e in 0..k {
            if d == e || !chords_cross(ds[d], ds[e]) {
                continue;
            }
            let ((i, j), (r, s)) = if ds[d].0 < ds[e].0 { (ds[d], ds[e]) } else { (ds[e], ds[d]) };
            let comps: Vec<usize> = [(i, r), (i, s), (r, j), (j, s)]
                .into_iter()
                .filter_map(|(a, b)| index(a, b))
                .collect();
            if d < e {
                for &c in &comps {
                    forced_by[c].push((d, e));
                }
            }
            crossing[d].push((e, comps));
        }
    }

    const UNDECIDED: u8 = 0;
    const IN: u8 = 1;
    const OUT: u8 = 2;

    struct Search<'a> {
        crossing: &'a [Vec<(usize, Vec<usize>)>],
        forced_by: &'a [Vec<(usize, usize)>],
        state: Vec<u8>,
        found: Vec<u64>,
    }

    impl Search<'_> {
        fn run(&mut self, d: usize) {
            if d == self.state.len() {
                let mask = self
                    .state
                    .iter()
                    .enumerate()
                    .filter(|(_, &s)| s == IN)
                    .fold(0u64, |m, (t, _)| m | 1 << t);
                self.found.push(mask);
                return;
            }
            let can_include = self.crossing[d].iter().all(|(e, comps)| {
                self.state[*e] != IN || comps.iter().all(|&c| self.state[c] != OUT)
            });
            if can_include {
                self.state[d] = IN;
                self.run(d + 1);
            }
            let can_exclude = self.forced_by[d]
                .iter()
                .all(|&(a, b)| !(self.state[a] == IN && self.state[b] == IN));
            if can_exclude {
                self.state[d] = OUT;
                self.run(d + 1);
            }
            self.state[d] = UNDECIDED;
        }
    }

    let mut search = Search {
        crossing: &crossing,
        forced_by: &forced_by,
        state: vec![UNDECIDED; k],
        found: Vec::new(),
    };
    search.run(0);

    let mut out: Vec<PolygonDiagram> = search
        .found
        .into_iter()
        .map(|mask| {
            let mut diagonals: Vec<(usize, usize)> = (0..k)
                .filter(|t| mask >> t & 1 == 1)
                .map(|t| ds[t])
                .collect();
            diagonals.sort_unstable();
            PolygonDiagram { size: m, diagonals }
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellKind {
    Triangle,
    Clique,
    EmptyCell,
}

/// A face of the subdivision of the polygon by its non-crossed chords.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    /// Boundary vertices in increasing (clockwise) order.
    pub vertices: Vec<usize>,
    pub kind: CellKind,
}

impl Cell {
    /// Pairs of boundary vertices that are not adjacent along the boundary.
    pub fn inner_diagonals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let v = &self.vertices;
        let len = v.len();
        (0..len).flat_map(move |a| {
            (a + 2..len)
                .filter(move |&b| !(a == 0 && b == len - 1))
                .map(move |b| (v[a], v[b]))
        })
    }
}

/// Number of triangles, cliques and empty cells.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellStatistics {
    pub triangles: usize,
    pub cliques: usize,
    pub empty_cells: usize,
}

impl CellStatistics {
    pub const fn new(triangles: usize, cliques: usize, empty_cells: usize) -> Self {
        Self {
            triangles,
            cliques,
            empty_cells,
        }
    }

    pub fn of_kind(kind: CellKind) -> Self {
        match kind {
            CellKind::Triangle => Self::new(1, 0, 0),
            CellKind::Clique => Self::new(0, 1, 0),
            CellKind::EmptyCell => Self::new(0, 0, 1),
        }
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.triangles, self.cliques, self.empty_cells)
    }
}

impl Add for CellStatistics {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self::new(
            self.triangles + o.triangles,
            self.cliques + o.cliques,
            self.empty_cells + o.empty_cells,
        )
    }
}

impl AddAssign for CellStatistics {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

fn classify(p: &PolygonDiagram, vertices: Vec<usize>) -> Result<Cell> {
    if vertices.len() == 3 {
        return Ok(Cell {
            vertices,
            kind: CellKind::Triangle,
        });
    }
    let probe = Cell {
        vertices,
        kind: CellKind::EmptyCell,
    };
    let (mut present, mut absent) = (0usize, 0usize);
    for (a, b) in probe.inner_diagonals() {
        if p.has_diagonal(a, b) {
            present += 1;
        } else {
            absent += 1;
        }
    }
    let kind = match (present, absent) {
        (0, _) => CellKind::EmptyCell,
        (_, 0) => CellKind::Clique,
        _ => return Err(Error::MixedFace(probe.vertices)),
    };
    Ok(Cell { kind, ..probe })
}

/// Faces of the subdivision by sides, base edge and non-crossed diagonals,
/// each classified as triangle, clique or empty cell. Sorted by vertex list.
pub fn cells(p: &PolygonDiagram) -> Result<Vec<Cell>> {
    if p.is_degenerate() {
        return Ok(Vec::new());
    }
    let splitters = p.non_crossed();
    let mut pending = vec![(0..=p.size).collect::<Vec<_>>()];
    let mut out = Vec::new();
    while let Some(face) = pending.pop() {
        let len = face.len();
        let split = (0..len).find_map(|a| {
            (a + 2..len)
                .filter(|&b| !(a == 0 && b == len - 1))
                .find(|&b| splitters.binary_search(&(face[a], face[b])).is_ok())
                .map(|b| (a, b))
        });
        match split {
            Some((a, b)) => {
                pending.push(face[a..=b].to_vec());
                let mut rest = face[..=a].to_vec();
                rest.extend_from_slice(&face[b..]);
                pending.push(rest);
            }
            None => out.push(classify(p, face)?),
        }
    }
    out.sort();
    Ok(out)
}

pub fn statistics_polygon(p: &PolygonDiagram) -> Result<CellStatistics> {
    Ok(cells(p)?
        .iter()
        .map(|c| CellStatistics::of_kind(c.kind))
        .fold(CellStatistics::default(), Add::add))
}

/// The cell on the base edge together with the diagrams glued on its other
/// sides, each re-rooted on its own base edge. `cell` is `None` exactly for
/// the degenerate diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseDecomposition {
    pub cell: Option<Cell>,
    pub children: Vec<PolygonDiagram>,
}

impl BaseDecomposition {
    /// Glues the children back onto the base cell.
    pub fn reassemble(&self) -> Result<PolygonDiagram> {
        let Some(cell) = &self.cell else {
            if !self.children.is_empty() {
                return Err(Error::InvalidPolygon("degenerate base with children".into()));
            }
            return Ok(PolygonDiagram::degenerate());
        };
        let v = &cell.vertices;
        if v.len() < 3 || self.children.len() != v.len() - 1 || v[0] != 0 {
            return Err(Error::InvalidPolygon("cell and children do not match".into()));
        }
        let size = *v.last().unwrap();
        let mut diagonals = Vec::new();
        if cell.kind == CellKind::Clique {
            diagonals.extend(cell.inner_diagonals());
        }
        for (w, child) in v.windows(2).zip(&self.children) {
            if w[1] - w[0] != child.size {
                return Err(Error::InvalidPolygon("child size does not fit its side".into()));
            }
            if child.size >= 2 {
                diagonals.push((w[0], w[1]));
            }
            diagonals.extend(child.diagonals.iter().map(|&(a, b)| (a + w[0], b + w[0])));
        }
        PolygonDiagram::new(size, diagonals)
    }
}

pub fn decompose_base(p: &PolygonDiagram) -> Result<BaseDecomposition> {
    if p.is_degenerate() {
        return Ok(BaseDecomposition {
            cell: None,
            children: Vec::new(),
        });
    }
    let cell = cells(p)?
        .into_iter()
        .find(|c| c.vertices[0] == 0 && *c.vertices.last().unwrap() == p.size)
        .expect("some face contains the base edge");
    let children = cell
        .vertices
        .windows(2)
        .map(|w| {
            let (lo, hi) = (w[0], w[1]);
            PolygonDiagram {
                size: hi - lo,
                diagonals: p
                    .diagonals
                    .iter()
                    .filter(|&&(a, b)| lo <= a && b <= hi && (a, b) != (lo, hi))
                    .map(|&(a, b)| (a - lo, b - lo))
                    .collect(),
            }
        })
        .collect();
    Ok(BaseDecomposition {
        cell: Some(cell),
        children,
    })
}

/// Statistics computed through the recursive base decomposition.
pub fn statistics_recursive(p: &PolygonDiagram) -> Result<CellStatistics> {
    let dec = decompose_base(p)?;
    let mut stats = match &dec.cell {
        None => return Ok(CellStatistics::default()),
        Some(c) => CellStatistics::of_kind(c.kind),
    };
    for child in &dec.children {
        stats += statistics_recursive(child)?;
    }
    Ok(stats)
}
