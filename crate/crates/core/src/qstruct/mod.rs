//! q-binomial coefficients, cyclotomic polynomials and exponent profiles,
//! and q-Delannoy numbers.

mod cyclotomic;
mod delannoy;
mod profile;
mod qbinomial;

pub use cyclotomic::{cyclotomic, cyclotomic_valuation, divisors};
pub use delannoy::{q_delannoy, QDelannoyPair};
pub use profile::{
    exponent_profile_a, exponent_profile_b, profile_a_in_range, profile_b_in_range, q_analog_a,
    q_analog_b, CycloProfile,
};
pub use qbinomial::{q_binomial, q_binomial_product};
