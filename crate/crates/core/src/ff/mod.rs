//! Exact arithmetic in finite fields and univariate polynomial rings.

mod field;
pub mod linalg;
mod poly;

pub use field::{factor_u128, Fe, Field};
pub use poly::{
    factor, factor_with_seed, monic_irreducibles, norm_via_resultant, smallest_irreducible, Factorization, Poly,
    DEFAULT_FACTOR_SEED,
};

use crate::error::Result;

/// The four field operations plus integer powers, as a single dispatchable op.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i64),
}

/// Applies `op` to `a` and `b` (`b` is ignored by `Pow`).
pub fn field_arithmetic(a: &Fe, b: &Fe, op: FieldOp) -> Result<Fe> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Div => a.checked_div(b),
        FieldOp::Pow(k) => a.pow(k),
    }
}
