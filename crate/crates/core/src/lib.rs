//! Torsion pairs in cluster tubes.
//!
//! The indecomposable objects of the cluster tube of rank `n` are shift
//! classes of arcs `(i, j)` of the ∞-gon modulo `n`. Torsion pairs are
//! determined by their finite half, an `n`-periodic Ptolemy diagram whose
//! arcs all have length at most `n`. This crate provides:
//!
//! - [`arc_model`]: crossing, Ext¹ dimensions, the `nc` operator, the Ptolemy
//!   condition and the Auslander–Reiten translation on periodic diagrams.
//! - [`polygon`]: Ptolemy diagrams on a polygon with a distinguished base edge,
//!   their cells and their recursive decomposition.
//! - [`torsion`]: finite halves, the wing decomposition, the pointed-cycle
//!   bijection, enumerators, fixed points and orbit counts.
//! - [`enumeration`]: closed-form counts, generating functions, q-analogues,
//!   cyclic sieving and asymptotics.

pub mod arc_model;
pub mod enumeration;
pub mod error;
pub mod polygon;
pub mod torsion;

pub use arc_model::{Arc, ArcOrbit, PeriodicDiagram};
pub use enumeration::{MPoly, QPoly, SeriesPoly};
pub use error::{Error, Result};
pub use polygon::{Cell, CellKind, CellStatistics, PolygonDiagram};
pub use torsion::{FiniteSide, PointedCycle, TorsionPair, WingDecomposition};
