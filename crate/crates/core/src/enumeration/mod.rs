//! Exact counting of torsion pairs.
//!
//! Closed forms for `T_n` and the refined counts by triangles, cliques and
//! empty cells; the generating function `P(z)` of polygon Ptolemy diagrams and
//! the torsion series derived from it; q-analogues evaluated at roots of unity
//! for cyclic sieving; and the numerics of the growth constants.

mod asymptotics;
mod counts;
mod mpoly;
mod qpoly;
mod series;
mod sieve;

pub use asymptotics::{
    alpha, asymptotic_check, real_root, real_root_rational, rho, RootChoice, ALPHA_POLY, RHO_POLY,
};
pub use counts::{
    binomial, lagrange_coefficient, multinomial, refined_table, torsion_count,
    torsion_count_refined,
};
pub use mpoly::MPoly;
pub use qpoly::{
    cyclotomic, eval_at_primitive_root, q_lucas, qbinomial, qfactorial, qint, qmultinomial,
    refined_q, QPoly,
};
pub use series::{series_p, series_torsion, SeriesPoly, DEFAULT_SERIES_ORDER};
pub use sieve::{csp_verify, csp_verify_with_cap, fixed_statistics, CspReport, CspRow};

/// A big integer as a plain JSON number, however many digits it has.
pub fn json_number(v: &num_bigint::BigInt) -> serde_json::Number {
    v.to_string()
        .parse()
        .expect("decimal integers are valid JSON numbers")
}
