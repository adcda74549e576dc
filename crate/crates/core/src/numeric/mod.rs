//! Arbitrary-precision numeric primitives shared by radical evaluation and
//! the numeric root oracle.

mod bigfloat;
mod complex;

pub use bigfloat::BigFloat;
pub use complex::BigComplex;
