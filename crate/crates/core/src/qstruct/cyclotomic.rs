//! Cyclotomic polynomials by exact division, and cyclotomic valuations.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::poly::LaurentQ;

static CACHE: OnceLock<RwLock<HashMap<u32, LaurentQ>>> = OnceLock::new();

pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q)`, memoized.
///
/// # Panics
/// Panics if `d == 0`.
pub fn cyclotomic(d: u32) -> LaurentQ {
    assert!(d >= 1, "cyclotomic index must be positive");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().expect("cyclotomic cache poisoned").get(&d) {
        return hit.clone();
    }
    let mut phi = LaurentQ::one_minus_q_pow(d as i64).scale(&(-1).into());
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        phi = phi
            .exact_div(&cyclotomic(e))
            .expect("q^d - 1 is divisible by Phi_e for e | d");
    }
    // Concurrent fills compute the same value, so last write wins harmlessly.
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .insert(d, phi.clone());
    phi
}

/// Largest `e` with `Phi_d(q)^e` dividing `p`. `None` for the zero polynomial.
pub fn cyclotomic_valuation(p: &LaurentQ, d: u32) -> Option<u32> {
    if p.is_zero() {
        return None;
    }
    let phi = cyclotomic(d);
    let mut rest = p.clone();
    let mut e = 0;
    while let Ok(q) = rest.exact_div(&phi) {
        rest = q;
        e += 1;
    }
    Some(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic(1), LaurentQ::from_coeffs(0, &[-1, 1]));
        assert_eq!(cyclotomic(6), LaurentQ::from_coeffs(0, &[1, -1, 1]));
        assert_eq!(cyclotomic(4), LaurentQ::from_coeffs(0, &[1, 0, 1]));
        for p in [2u32, 3, 5, 7, 11, 13] {
            assert_eq!(cyclotomic(p), LaurentQ::q_int(p));
        }
        // Phi_105 is the first with a coefficient of absolute value 2.
        assert_eq!(cyclotomic(105).coeff(7), (-2).into());
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn product_over_divisors_reconstructs() {
        for n in 1..=60u32 {
            let prod: LaurentQ = divisors(n).into_iter().map(cyclotomic).product();
            assert_eq!(prod, &LaurentQ::q_pow(n as i64) - &LaurentQ::one(), "n={n}");
        }
    }

    #[test]
    fn valuations() {
        let p = LaurentQ::one_minus_q_pow(12);
        for d in divisors(12) {
            assert_eq!(cyclotomic_valuation(&p, d), Some(1));
        }
        assert_eq!(cyclotomic_valuation(&p, 5), Some(0));
        assert_eq!(cyclotomic_valuation(&p.pow(3), 4), Some(3));
        assert_eq!(cyclotomic_valuation(&LaurentQ::zero(), 4), None);
    }
}
