//! Finite halves as pointed cycles of polygon Ptolemy diagrams.
//!
//! A cycle `(P_1, ..., P_r)` of diagrams of total size `n`, together with a
//! chosen non-base vertex `ℓ` of some `P_s`, is laid out along the ∞-gon by
//! numbering the vertices of `P_s` from `-ℓ` to `size(P_s) - ℓ`, so the chosen
//! vertex gets number 0, and continuing with `P_{s+1}, P_{s+2}, ...`, each
//! reusing the last number of its predecessor for its base vertex. Vertex
//! classes modulo `n` are labelled by their residue, so in the image the
//! point always sits on label 0.

use crate::arc_model::PeriodicDiagram;
use crate::error::{Error, Result};
use crate::polygon::PolygonDiagram;

use super::wings::{compose, decompose, WingDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedCycle {
    pieces: Vec<PolygonDiagram>,
    /// Index into `pieces` and the 1-based position of the pointed vertex
    /// counted clockwise after the base vertex.
    point: (usize, usize),
}

impl PointedCycle {
    pub fn new(pieces: Vec<PolygonDiagram>, point: (usize, usize)) -> Result<Self> {
        let (s, l) = point;
        let Some(p) = pieces.get(s) else {
            return Err(Error::InvalidPointedCycle(format!(
                "point on piece {s} of {}",
                pieces.len()
            )));
        };
        if l == 0 || l > p.size() {
            return Err(Error::InvalidPointedCycle(format!(
                "vertex {l} is not a non-base vertex of a size-{} piece",
                p.size()
            )));
        }
        Ok(Self { pieces, point })
    }

    pub fn pieces(&self) -> &[PolygonDiagram] {
        &self.pieces
    }

    pub fn point(&self) -> (usize, usize) {
        self.point
    }

    pub fn total_size(&self) -> usize {
        self.pieces.iter().map(PolygonDiagram::size).sum()
    }

    /// The same cycle rotated so the pointed piece comes first.
    pub fn canonical(&self) -> Self {
        let (s, l) = self.point;
        let mut pieces = self.pieces.clone();
        pieces.rotate_left(s);
        Self {
            pieces,
            point: (0, l),
        }
    }

    /// Residue labels of the vertices of each piece, base vertex first, in
    /// the order of [`canonical`](Self::canonical).
    pub fn labels(&self) -> Vec<Vec<usize>> {
        let c = self.canonical();
        let n = c.total_size() as i64;
        let mut start = -(c.point.1 as i64);
        c.pieces
            .iter()
            .map(|p| {
                let labels = (0..=p.size() as i64)
                    .map(|t| (start + t).rem_euclid(n) as usize)
                    .collect();
                start += p.size() as i64;
                labels
            })
            .collect()
    }
}

/// The pointed cycle of a finite half: its wings read cyclically starting
/// with the one whose non-base vertices contain vertex 0.
pub fn to_pointed_cycle(x: &PeriodicDiagram) -> Result<PointedCycle> {
    let w = decompose(x)?;
    let n = x.rank() as i64;
    // vertex 0 ≡ n is a non-base vertex of the wrap-around span (c_r, c_1 + n]
    let last = w.cuts().len() - 1;
    let l = (n - w.cuts()[last]) as usize;
    let mut pieces = w.pieces().to_vec();
    pieces.rotate_right(1);
    PointedCycle::new(pieces, (0, l))
}

pub fn from_pointed_cycle(pc: &PointedCycle, n: usize) -> Result<PeriodicDiagram> {
    if pc.total_size() != n {
        return Err(Error::InvalidPointedCycle(format!(
            "pieces have total size {} but the rank is {n}",
            pc.total_size()
        )));
    }
    let c = pc.canonical();
    let rank = n as i64;
    let mut start = -(c.point.1 as i64);
    let mut located: Vec<(i64, PolygonDiagram)> = Vec::with_capacity(c.pieces.len());
    for p in c.pieces {
        let size = p.size() as i64;
        located.push((start.rem_euclid(rank), p));
        start += size;
    }
    located.sort_by_key(|(cut, _)| *cut);
    let (cuts, pieces) = located.into_iter().unzip();
    Ok(compose(&WingDecomposition::new(n, cuts, pieces)?))
}
