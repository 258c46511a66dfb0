//! The polynomial families, their squares and weighted sums, and the
//! recurrences they satisfy.

mod families;
mod recurrences;
mod theorem;

pub use families::{
    d_poly, d_value, dn_square_rhs, double_sum_a, double_sum_b, double_sum_two_lhs,
    double_sum_two_rhs, s_alt_poly, s_poly, s_value, schmidt_poly, schmidt_power_sum,
    simple_sum_sides, sn_inner_sum, sn_square_rhs, xx1_lhs, xx1_rhs,
};
pub use recurrences::{
    d_square_order3_residual, order2_residual, order2_residual_a, order2_residual_b,
    rec_one_residual, rec_two_residual, single_sum_order3_residual, zeil1_residual, zeil3_residual,
    zeil4_residual,
};
pub use theorem::{theorem11_expression, theorem11_poly, theorem12_quantities, SumKind, SumSpec};
