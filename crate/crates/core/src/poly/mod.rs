//! Exact polynomial arithmetic: dense `PolyX` over the rationals, sparse
//! Laurent polynomials in `q`, and multivariate integer polynomials.

mod laurent;
mod multi;
mod polyx;

pub use laurent::{
    laurent_add, laurent_exact_div, laurent_is_nonneg, laurent_mul, laurent_sub, LaurentError,
    LaurentQ,
};
pub use multi::{
    multipoly_coeff_divisibility, multipoly_pow, multipoly_scale, Monomial, MultiPolyZ,
};
pub use polyx::{
    is_integer_valued, polyx_binomial, polyx_binomial_shifted, to_binomial_basis,
    BinomialBasisPoly, Degree, PolyX,
};
