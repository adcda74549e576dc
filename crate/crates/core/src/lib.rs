//! Exact radical solutions of rational polynomials of degree at most four,
//! quartic root-reality classification, and solvability certificates for
//! quintics, all checked against an independent numeric root finder.

pub mod arith;
pub mod galois;
pub mod numeric;
pub mod oracle;
pub mod parse;
pub mod radical;
pub mod solve;
