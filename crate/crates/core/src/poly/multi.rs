//! Sparse multivariate polynomials over the integers in `x_0, x_1, ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::polyx::forward_owned;
use crate::exact::ExactInt;

/// Exponent vector; trailing zero exponents are trimmed so `x_0` has one
/// canonical key regardless of how many variables are in play.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPolyZ {
    terms: BTreeMap<Monomial, ExactInt>,
}

impl MultiPolyZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(ExactInt::one(), Vec::new())
    }

    pub fn term(c: ExactInt, exps: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(exps, c);
        out
    }

    /// `c * x_i`
    pub fn var(i: usize, c: ExactInt) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        Self::term(c, exps)
    }

    fn add_term(&mut self, exps: Monomial, c: ExactInt) {
        if c.is_zero() {
            return;
        }
        let key = trim(exps);
        let slot = self.terms.entry(key.clone()).or_insert_with(ExactInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> ExactInt {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(ExactInt::zero)
    }

    pub fn scale(&self, k: &ExactInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// True iff `n` divides every coefficient.
    pub fn coeffs_divisible_by(&self, n: &ExactInt) -> bool {
        self.first_non_multiple(n).is_none()
    }

    /// A term whose coefficient is not a multiple of `n`.
    pub fn first_non_multiple(&self, n: &ExactInt) -> Option<(&Monomial, &ExactInt)> {
        self.terms.iter().find(|(_, c)| !c.is_multiple_of(n))
    }
}

impl Add for &MultiPolyZ {
    type Output = MultiPolyZ;
    fn add(self, rhs: &MultiPolyZ) -> MultiPolyZ {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Mul for &MultiPolyZ {
    type Output = MultiPolyZ;
    fn mul(self, rhs: &MultiPolyZ) -> MultiPolyZ {
        let mut out = MultiPolyZ::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let len = ma.len().max(mb.len());
                let exps = (0..len)
                    .map(|i| ma.get(i).unwrap_or(&0) + mb.get(i).unwrap_or(&0))
                    .collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

forward_owned!(MultiPolyZ, Add::add, Mul::mul);

impl std::iter::Sum for MultiPolyZ {
    fn sum<I: Iterator<Item = MultiPolyZ>>(iter: I) -> MultiPolyZ {
        iter.fold(MultiPolyZ::zero(), |acc, p| &acc + &p)
    }
}

pub fn multipoly_pow(p: &MultiPolyZ, e: u32) -> MultiPolyZ {
    p.pow(e)
}

pub fn multipoly_scale(p: &MultiPolyZ, k: &ExactInt) -> MultiPolyZ {
    p.scale(k)
}

pub fn multipoly_coeff_divisibility(p: &MultiPolyZ, n: &ExactInt) -> bool {
    p.coeffs_divisible_by(n)
}

impl fmt::Display for MultiPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{v}")
                    } else {
                        format!("x{v}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
