//! Sparse Laurent polynomials in `q` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::polyx::{forward_owned, write_terms};
use crate::exact::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division by the zero Laurent polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: LaurentQ },
}

/// Exponent -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentQ {
    support: BTreeMap<i64, ExactInt>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExactInt::one(), 0)
    }

    pub fn monomial(c: ExactInt, e: i64) -> Self {
        let mut support = BTreeMap::new();
        if !c.is_zero() {
            support.insert(e, c);
        }
        Self { support }
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(ExactInt::one(), e)
    }

    /// `1 - q^e`
    pub fn one_minus_q_pow(e: i64) -> Self {
        &Self::one() - &Self::q_pow(e)
    }

    /// q-integer `[n] = 1 + q + ... + q^(n-1)` for `n >= 0`.
    pub fn q_int(n: u32) -> Self {
        Self::from_coeffs(0, &vec![1; n as usize])
    }

    /// Dense constructor: `coeffs[i]` multiplies `q^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low + i as i64, ExactInt::from(c))),
        )
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, ExactInt)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: ExactInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.support.entry(e).or_insert_with(ExactInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.support.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.support.len() == 1 && self.support.get(&0).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &ExactInt)> + '_ {
        self.support.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> ExactInt {
        self.support.get(&e).cloned().unwrap_or_else(ExactInt::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.support.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.support.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.support.keys().next_back().copied()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            support: self
                .support
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Substitute `q -> q^-1`.
    pub fn mirror(&self) -> Self {
        Self {
            support: self.support.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &ExactInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            support: self.support.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
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

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> ExactInt {
        self.support.values().sum()
    }

    /// True iff no stored coefficient is negative.
    pub fn is_nonneg(&self) -> bool {
        self.support.values().all(|c| c.is_positive())
    }

    /// Lowest-degree negative coefficient, if any, as `(exponent, coefficient)`.
    pub fn first_negative(&self) -> Option<(i64, &ExactInt)> {
        self.terms().find(|(_, c)| c.is_negative())
    }

    /// Exact quotient in `Z[q, q^-1]`.
    ///
    /// Both operands are normalized to ordinary polynomials with nonzero
    /// constant term (powers of `q` are units), then long division runs from
    /// the top. A nonzero remainder, or a leading coefficient that does not
    /// divide, yields `NotDivisible` carrying the remainder reached.
    pub fn exact_div(&self, den: &LaurentQ) -> Result<LaurentQ, LaurentError> {
        let (quot, rem) = self.div_rem(den)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(LaurentError::NotDivisible { remainder: rem })
        }
    }

    /// Normalized long division; see [`LaurentQ::exact_div`]. The remainder is
    /// expressed in the normalized (non-negative exponent) frame of the numerator.
    pub fn div_rem(&self, den: &LaurentQ) -> Result<(LaurentQ, LaurentQ), LaurentError> {
        let (Some(dlow), Some(dhigh)) = (den.min_exp(), den.max_exp()) else {
            return Err(LaurentError::DivisionByZero);
        };
        let Some(nlow) = self.min_exp() else {
            return Ok((Self::zero(), Self::zero()));
        };
        let ddeg = dhigh - dlow;
        let lead = &den.support[&dhigh];
        let den_terms: Vec<(i64, ExactInt)> = den
            .support
            .iter()
            .map(|(e, c)| (e - dlow, c.clone()))
            .collect();
        let mut rem = self.shift(-nlow);
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < ddeg {
                break;
            }
            let (t, r) = rem.support[&top].div_rem(lead);
            if !r.is_zero() {
                break;
            }
            let shift = top - ddeg;
            for (e, c) in &den_terms {
                rem.add_term(e + shift, -(c * &t));
            }
            quot.add_term(shift, t);
        }
        Ok((quot.shift(nlow - dlow), rem))
    }

    pub fn divides(&self, num: &LaurentQ) -> bool {
        num.exact_div(self).is_ok()
    }
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        for (e, c) in &rhs.support {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        for (e, c) in &rhs.support {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        let (Some(a_lo), Some(a_hi), Some(b_lo), Some(b_hi)) =
            (self.min_exp(), self.max_exp(), rhs.min_exp(), rhs.max_exp())
        else {
            return LaurentQ::zero();
        };
        let span = (a_hi - a_lo + b_hi - b_lo + 1) as usize;
        let low = a_lo + b_lo;
        let mut acc = vec![ExactInt::zero(); span];
        for (ea, ca) in &self.support {
            for (eb, cb) in &rhs.support {
                acc[(ea + eb - low) as usize] += ca * cb;
            }
        }
        LaurentQ {
            support: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (low + i as i64, c))
                .collect(),
        }
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            support: self.support.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

forward_owned!(LaurentQ, Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for LaurentQ {
    fn sum<I: Iterator<Item = LaurentQ>>(iter: I) -> LaurentQ {
        iter.fold(LaurentQ::zero(), |mut acc, p| {
            for (e, c) in p.support {
                acc.add_term(e, c);
            }
            acc
        })
    }
}

impl std::iter::Product for LaurentQ {
    fn product<I: Iterator<Item = LaurentQ>>(iter: I) -> LaurentQ {
        iter.fold(LaurentQ::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "q", self.terms().rev().map(|(e, c)| (e, c.clone())))
    }
}

pub fn laurent_add(a: &LaurentQ, b: &LaurentQ) -> LaurentQ {
    a + b
}

pub fn laurent_sub(a: &LaurentQ, b: &LaurentQ) -> LaurentQ {
    a - b
}

pub fn laurent_mul(a: &LaurentQ, b: &LaurentQ) -> LaurentQ {
    a * b
}

pub fn laurent_exact_div(num: &LaurentQ, den: &LaurentQ) -> Result<LaurentQ, LaurentError> {
    num.exact_div(den)
}

pub fn laurent_is_nonneg(a: &LaurentQ) -> bool {
    a.is_nonneg()
}
