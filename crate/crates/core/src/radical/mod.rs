//! Radical expressions: the output language of the solvers.

mod eval;
mod expr;
mod render;
mod simplify;

use thiserror::Error;

pub use eval::{eval_numeric, ComplexApprox, EvalError};
pub use expr::RadicalExpr;
pub use render::{render, Format};
pub(crate) use simplify::exact_root;
pub use simplify::simplify;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("root index must be at least 2, got {0}")]
    BadIndex(u32),
    #[error("branch {branch} out of range for index {index}")]
    BadBranch { index: u32, branch: u32 },
    #[error("root of unity of order zero")]
    ZeroOrder,
    #[error("division by a literal zero")]
    DivisionByZero,
}
