//! Exact scalar arithmetic: big integers and rationals, residues modulo
//! prime powers, and the handful of number-theoretic helpers the checks need.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision integer. Zero is canonical (sign `NoSign`, no limbs).
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type ExactRat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(ExactInt),
    #[error("{residue} is not invertible modulo {modulus}")]
    NotInvertible {
        residue: ExactInt,
        modulus: ExactInt,
    },
    #[error("modulus must be at least 1, got {0}")]
    BadModulus(ExactInt),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(ExactInt, ExactInt),
}

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn rat(num: i64, den: i64) -> ExactRat {
    ExactRat::new(int(num), int(den))
}

pub fn rat_from_int(v: ExactInt) -> ExactRat {
    ExactRat::from_integer(v)
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!` for any integer `n`.
///
/// Returns 0 for `k < 0`, so out-of-range summands vanish.
pub fn int_binomial(n: &ExactInt, k: i64) -> ExactInt {
    if k < 0 {
        return ExactInt::zero();
    }
    // For 0 <= n < k the falling product hits zero; short-circuit it.
    if !n.is_negative() && *n < int(k) {
        return ExactInt::zero();
    }
    let mut acc = ExactInt::one();
    for i in 0..k {
        // After step i the accumulator is binom(n, i+1), an integer.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `int_binomial` on machine integers.
pub fn binom(n: i64, k: i64) -> ExactInt {
    int_binomial(&int(n), k)
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// Deterministic primality by trial division up to `sqrt(n)`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Legendre symbol `(a|p)` via Euler's criterion.
pub fn legendre_symbol(a: &ExactInt, p: &ExactInt) -> Result<i8, ExactError> {
    let p_small = p.to_u64().filter(|&v| v > 2 && is_prime(v));
    if p_small.is_none() {
        return Err(ExactError::NotOddPrime(p.clone()));
    }
    let r = a.mod_floor(p);
    if r.is_zero() {
        return Ok(0);
    }
    let e = (p - 1u32) / 2u32;
    let v = r.modpow(&e, p);
    if v.is_one() {
        Ok(1)
    } else {
        debug_assert_eq!(v, p - 1u32);
        Ok(-1)
    }
}

/// `p`-adic valuation of a nonzero integer; `None` for zero.
pub fn valuation(v: &ExactInt, p: u64) -> Option<u32> {
    if v.is_zero() {
        return None;
    }
    let p = ExactInt::from(p);
    let mut v = v.abs();
    let mut e = 0;
    while v.is_multiple_of(&p) {
        v /= &p;
        e += 1;
    }
    Some(e)
}

/// A residue class modulo `modulus`, kept in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModScalar {
    residue: ExactInt,
    modulus: ExactInt,
}

impl ModScalar {
    pub fn new(value: ExactInt, modulus: ExactInt) -> Result<Self, ExactError> {
        if modulus < ExactInt::one() {
            return Err(ExactError::BadModulus(modulus));
        }
        Ok(Self {
            residue: value.mod_floor(&modulus),
            modulus,
        })
    }

    pub fn from_i64(value: i64, modulus: i64) -> Result<Self, ExactError> {
        Self::new(int(value), int(modulus))
    }

    /// Image of the rational `num/den` in `Z/modulus`, when `den` is a unit there.
    pub fn from_rational(q: &ExactRat, modulus: &ExactInt) -> Result<Self, ExactError> {
        let den = Self::new(q.denom().clone(), modulus.clone())?;
        let num = Self::new(q.numer().clone(), modulus.clone())?;
        Ok(num.mul(&mod_inverse(&den)?))
    }

    pub fn residue(&self) -> &ExactInt {
        &self.residue
    }

    pub fn modulus(&self) -> &ExactInt {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn same(&self, residue: ExactInt) -> Self {
        Self {
            residue: residue.mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }

    pub fn lift(&self, value: &ExactInt) -> Self {
        self.same(value.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        self.same(&self.residue + &other.residue)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        self.same(&self.residue - &other.residue)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        self.same(&self.residue * &other.residue)
    }

    pub fn neg(&self) -> Self {
        self.same(-&self.residue)
    }

    pub fn scale(&self, k: &ExactInt) -> Self {
        self.same(&self.residue * k)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.same(self.residue.modpow(&ExactInt::from(e), &self.modulus))
    }

    pub fn zero_like(&self) -> Self {
        self.same(ExactInt::zero())
    }

    pub fn one_like(&self) -> Self {
        self.same(ExactInt::one())
    }

    /// Binomial `{x choose k}` at this residue; requires `k!` to be a unit.
    pub fn binomial(&self, k: u64) -> Result<Self, ExactError> {
        let mut num = self.one_like();
        let mut den = self.one_like();
        for i in 0..k {
            num = num.mul(&self.sub(&self.lift(&ExactInt::from(i))));
            den = den.scale(&ExactInt::from(i + 1));
        }
        Ok(num.mul(&mod_inverse(&den)?))
    }
}

impl fmt::Display for ModScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// Inverse by the extended Euclidean algorithm.
pub fn mod_inverse(a: &ModScalar) -> Result<ModScalar, ExactError> {
    let ext = a.residue.extended_gcd(&a.modulus);
    if !ext.gcd.is_one() {
        return Err(ExactError::NotInvertible {
            residue: a.residue.clone(),
            modulus: a.modulus.clone(),
        });
    }
    Ok(a.same(ext.x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binom(5, 2), int(10));
        assert_eq!(binom(-3, 2), int(6));
        for n in [-7, 0, 3, 100] {
            assert_eq!(binom(n, 0), int(1));
        }
        assert_eq!(binom(4, -1), int(0));
        assert_eq!(binom(3, 5), int(0));
        assert_eq!(binom(-1, 5), int(-1));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=60 {
            for k in 0..=n {
                assert_eq!(
                    binom(n, k),
                    binom(n - 1, k - 1) + binom(n - 1, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn binomial_times_factorial_is_falling_product() {
        for x in -30..=30i64 {
            for k in 0..=12i64 {
                let falling = (0..k).fold(int(1), |acc, i| acc * (x - i));
                assert_eq!(binom(x, k) * factorial(k as u64), falling, "x={x} k={k}");
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(9973));
        assert!(!is_prime(9991));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&int(-1), &int(5)), Ok(1));
        assert_eq!(legendre_symbol(&int(-3), &int(7)), Ok(1));
        assert_eq!(legendre_symbol(&int(35), &int(7)), Ok(0));
        assert_eq!(legendre_symbol(&int(-1), &int(7)), Ok(-1));
        assert!(legendre_symbol(&int(3), &int(9)).is_err());
        assert!(legendre_symbol(&int(3), &int(2)).is_err());
    }

    #[test]
    fn legendre_is_multiplicative() {
        for p in (3..=31u64).filter(|&p| is_prime(p)) {
            let pp = ExactInt::from(p);
            // Squares mod p, computed independently of Euler's criterion.
            let squares: Vec<u64> = (1..p).map(|t| t * t % p).collect();
            for a in 1..p as i64 {
                let expect = if squares.contains(&(a as u64)) { 1 } else { -1 };
                assert_eq!(legendre_symbol(&int(a), &pp).unwrap(), expect);
                for b in 1..p as i64 {
                    let lhs = legendre_symbol(&int(a * b), &pp).unwrap();
                    let rhs = legendre_symbol(&int(a), &pp).unwrap()
                        * legendre_symbol(&int(b), &pp).unwrap();
                    assert_eq!(lhs, rhs, "p={p} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let two = ModScalar::from_i64(2, 625).unwrap();
        assert_eq!(mod_inverse(&two).unwrap().residue(), &int(313));
        let one = ModScalar::from_i64(1, 77).unwrap();
        assert_eq!(mod_inverse(&one).unwrap().residue(), &int(1));
        let three = ModScalar::from_i64(3, 9).unwrap();
        assert!(matches!(
            mod_inverse(&three),
            Err(ExactError::NotInvertible { .. })
        ));
    }

    #[test]
    fn rational_residues() {
        let m = int(625);
        let half = ModScalar::from_rational(&rat(-1, 2), &m).unwrap();
        assert_eq!(half.scale(&int(-2)).residue(), &int(1));
        assert!(ModScalar::from_rational(&rat(1, 5), &m).is_err());
    }

    #[test]
    fn modular_binomial_matches_exact() {
        let m = int(49);
        for x in -60..60i64 {
            let xs = ModScalar::new(int(x), m.clone()).unwrap();
            for k in 0..7u64 {
                let exact = binom(x, k as i64).mod_floor(&m);
                assert_eq!(xs.binomial(k).unwrap().residue(), &exact);
            }
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&int(250), 5), Some(3));
        assert_eq!(valuation(&int(-7), 5), Some(0));
        assert_eq!(valuation(&int(0), 5), None);
    }

    proptest! {
        #[test]
        fn inverse_is_involution(a in -10_000i64..10_000, m in 2i64..5000) {
            let x = ModScalar::from_i64(a, m).unwrap();
            if let Ok(inv) = mod_inverse(&x) {
                prop_assert!(x.mul(&inv).residue().is_one());
                prop_assert_eq!(mod_inverse(&inv).unwrap(), x);
            } else {
                prop_assert!(!x.residue().gcd(&int(m)).is_one());
            }
        }
    }
}
