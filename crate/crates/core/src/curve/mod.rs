//! Curves, functions, places and divisors.

mod divisor;
mod function;
mod group;
mod local;
mod model;
mod riemann_roch;
mod series;

pub use divisor::{divisor_of, Divisor};
pub use function::Function;
pub use group::{
    chord_over_vertical, point_add, point_mul, point_neg, random_divisor, random_function, random_place,
    rational_points, torsion_points,
};
pub use local::{evaluate_at, leading_coefficient_at_base, order_at, uniformizer};
pub use model::{Curve, CurveKind, Place};
pub use riemann_roch::{certify_m_torsion, is_principal, riemann_roch, space, RiemannRoch};
