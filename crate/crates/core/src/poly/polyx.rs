//! Dense univariate polynomials in `x` over the rationals, and the binomial
//! basis `{x choose k}` used to certify integer-valuedness.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::{rat_from_int, ExactInt, ExactRat};

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyX {
    coeffs: Vec<ExactRat>,
}

impl PolyX {
    pub fn new(mut coeffs: Vec<ExactRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| ExactRat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRat::one())
    }

    pub fn constant(c: ExactRat) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `x + c`
    pub fn x_plus(c: i64) -> Self {
        Self::from_ints(&[c, 1])
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactRat {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: &ExactInt) -> Self {
        self.scale(&rat_from_int(c.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &ExactRat) -> ExactRat {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: &ExactInt) -> ExactRat {
        self.eval(&rat_from_int(x.clone()))
    }

    /// `p(inner(x))`, by Horner's rule over polynomials.
    pub fn compose(&self, inner: &PolyX) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Add for &PolyX {
    type Output = PolyX;
    fn add(self, rhs: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyX::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyX {
    type Output = PolyX;
    fn sub(self, rhs: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyX::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyX {
    type Output = PolyX;
    fn mul(self, rhs: &PolyX) -> PolyX {
        if self.is_zero() || rhs.is_zero() {
            return PolyX::zero();
        }
        let mut out = vec![ExactRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyX::new(out)
    }
}

impl Neg for &PolyX {
    type Output = PolyX;
    fn neg(self) -> PolyX {
        PolyX {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { $tr::$m(&self, &rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { $tr::$m(&self, rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(PolyX, Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for PolyX {
    fn sum<I: Iterator<Item = PolyX>>(iter: I) -> PolyX {
        iter.fold(PolyX::zero(), |acc, p| &acc + &p)
    }
}

/// Writes `c*var^e` terms in descending order: `2*x + 1`, `q^4 - q^-1`.
pub(crate) fn write_terms<C, I>(f: &mut fmt::Formatter<'_>, var: &str, terms: I) -> fmt::Result
where
    C: fmt::Display + Signed + One + PartialEq,
    I: Iterator<Item = (i64, C)>,
{
    let mut first = true;
    for (e, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        let unit = mag.is_one();
        match e {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    f.write_str(var)?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            "x",
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }
}

/// `{x choose k} = x(x-1)...(x-k+1)/k!` as a polynomial of degree `k`.
pub fn polyx_binomial(k: usize) -> PolyX {
    let mut acc = PolyX::one();
    for i in 0..k {
        acc = &acc * &PolyX::x_plus(-(i as i64));
        acc = acc.scale(&ExactRat::new(1.into(), ExactInt::from(i + 1)));
    }
    acc
}

/// Generalized binomial `{x + shift choose k}` as a polynomial in `x`.
pub fn polyx_binomial_shifted(shift: i64, k: usize) -> PolyX {
    polyx_binomial(k).compose(&PolyX::x_plus(shift))
}

/// Coefficients `c_k` with `P(x) = sum_k c_k {x choose k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialBasisPoly {
    bcoeffs: Vec<ExactRat>,
}

impl BinomialBasisPoly {
    pub fn new(mut bcoeffs: Vec<ExactRat>) -> Self {
        while bcoeffs.last().is_some_and(Zero::is_zero) {
            bcoeffs.pop();
        }
        Self { bcoeffs }
    }

    pub fn bcoeffs(&self) -> &[ExactRat] {
        &self.bcoeffs
    }

    pub fn is_integral(&self) -> bool {
        self.bcoeffs.iter().all(|c| c.is_integer())
    }

    /// First non-integral coefficient, as `(k, c_k)`.
    pub fn first_non_integral(&self) -> Option<(usize, &ExactRat)> {
        self.bcoeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_integer())
    }

    pub fn to_monomial(&self) -> PolyX {
        self.bcoeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| polyx_binomial(k).scale(c))
            .sum()
    }
}

/// Binomial-basis coefficients via iterated forward differences at 0:
/// `c_k = (Delta^k p)(0)`.
pub fn to_binomial_basis(p: &PolyX) -> BinomialBasisPoly {
    let Some(deg) = p.degree().finite() else {
        return BinomialBasisPoly::new(Vec::new());
    };
    let mut row: Vec<ExactRat> = (0..=deg)
        .map(|i| p.eval(&ExactRat::from_integer(ExactInt::from(i))))
        .collect();
    let mut out = Vec::with_capacity(deg + 1);
    while let Some(first) = row.first() {
        out.push(first.clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    BinomialBasisPoly::new(out)
}

/// Integer-valuedness by Polya's criterion: all binomial-basis coefficients integral.
pub fn is_integer_valued(p: &PolyX) -> bool {
    to_binomial_basis(p).is_integral()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn binomial_polys() {
        assert_eq!(polyx_binomial(0), PolyX::one());
        assert_eq!(polyx_binomial(1), PolyX::x());
        let half = rat(1, 2);
        assert_eq!(
            polyx_binomial(2),
            PolyX::new(vec![rat(0, 1), -half.clone(), half])
        );
        assert_eq!(polyx_binomial(3).degree(), Degree::Finite(3));
    }

    #[test]
    fn basis_examples() {
        let x2 = PolyX::from_ints(&[0, 0, 1]);
        assert_eq!(
            to_binomial_basis(&x2).bcoeffs(),
            &[rat(0, 1), rat(1, 1), rat(2, 1)]
        );
        assert_eq!(
            to_binomial_basis(&polyx_binomial(3)).bcoeffs(),
            &[rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]
        );
        assert_eq!(
            to_binomial_basis(&PolyX::from_ints(&[5])).bcoeffs(),
            &[rat(5, 1)]
        );
        assert!(to_binomial_basis(&PolyX::zero()).bcoeffs().is_empty());
    }

    #[test]
    fn integer_valued_examples() {
        let tri = PolyX::new(vec![rat(0, 1), rat(1, 2), rat(1, 2)]);
        assert_eq!(
            to_binomial_basis(&tri).bcoeffs(),
            &[rat(0, 1), rat(1, 1), rat(1, 1)]
        );
        assert!(is_integer_valued(&tri));
        let half_x = PolyX::new(vec![rat(0, 1), rat(1, 2)]);
        assert!(!is_integer_valued(&half_x));
        assert!(is_integer_valued(&PolyX::zero()));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(PolyX::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(PolyX::from_ints(&[3, 0, 0]).degree(), Degree::Finite(0));
    }

    #[test]
    fn display() {
        assert_eq!(PolyX::from_ints(&[1, 2]).to_string(), "2*x + 1");
        assert_eq!(PolyX::from_ints(&[0, -1, 1]).to_string(), "x^2 - x");
        assert_eq!(PolyX::from_ints(&[-3]).to_string(), "-3");
        assert_eq!(PolyX::zero().to_string(), "0");
        assert_eq!(polyx_binomial(2).to_string(), "1/2*x^2 - 1/2*x");
    }

    #[test]
    fn compose_reflection() {
        // (x^2 + x)(-x-1) = x^2 + x
        let p = PolyX::from_ints(&[0, 1, 1]);
        assert_eq!(p.compose(&PolyX::from_ints(&[-1, -1])), p);
        assert_eq!(polyx_binomial_shifted(3, 2).eval_int(&int(-3)), rat(0, 1));
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = PolyX> {
        prop::collection::vec((-20i64..20, 1i64..7), 0..=max_deg + 1)
            .prop_map(|cs| PolyX::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn basis_round_trip(p in small_poly(20)) {
            prop_assert_eq!(to_binomial_basis(&p).to_monomial(), p);
        }

        #[test]
        fn criterion_agrees_with_sampling(p in small_poly(8), integral in any::<bool>()) {
            // Build witnesses of both kinds: an integer-valued one from
            // integer binomial coefficients, or an arbitrary rational polynomial.
            let p = if integral {
                let b = to_binomial_basis(&p);
                BinomialBasisPoly::new(b.bcoeffs().iter().map(|c| c.floor()).collect()).to_monomial()
            } else {
                p
            };
            let d = p.degree().finite().unwrap_or(0) as i64;
            let sampled = (-(d + 1)..=d + 1).all(|x| p.eval_int(&int(x)).is_integer());
            prop_assert_eq!(is_integer_valued(&p), sampled);
        }
    }
}
