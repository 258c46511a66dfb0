//! Gaussian binomial coefficients.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::poly::LaurentQ;

static CACHE: OnceLock<RwLock<HashMap<(i64, i64), LaurentQ>>> = OnceLock::new();

/// `[n brack k]` via the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
/// Zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> LaurentQ {
    if k < 0 || k > n {
        return LaurentQ::zero();
    }
    if k == 0 || k == n {
        return LaurentQ::one();
    }
    let key = (n, k.min(n - k));
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().expect("q-binomial cache poisoned").get(&key) {
        return hit.clone();
    }
    let v = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k);
    cache
        .write()
        .expect("q-binomial cache poisoned")
        .entry(key)
        .or_insert_with(|| v.clone());
    v
}

/// `prod_{i=1}^{k} (1 - q^(n-k+i)) / (1 - q^i)` by exact division.
pub fn q_binomial_product(n: i64, k: i64) -> LaurentQ {
    if k < 0 || k > n {
        return LaurentQ::zero();
    }
    let num: LaurentQ = (1..=k)
        .map(|i| LaurentQ::one_minus_q_pow(n - k + i))
        .product();
    let den: LaurentQ = (1..=k).map(LaurentQ::one_minus_q_pow).product();
    num.exact_div(&den)
        .expect("Gaussian binomial is a polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binom;

    #[test]
    fn examples() {
        assert_eq!(q_binomial(7, 0), LaurentQ::one());
        assert_eq!(q_binomial(4, 2), LaurentQ::from_coeffs(0, &[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(-2, 1).is_zero());
    }

    #[test]
    fn agrees_with_product_formula() {
        for n in 0..=20 {
            for k in -1..=n + 1 {
                assert_eq!(q_binomial(n, k), q_binomial_product(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pascal_degree_and_specialization() {
        for n in 1..=40i64 {
            for k in 0..=n {
                let v = q_binomial(n, k);
                let rhs = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k);
                assert_eq!(v, rhs, "n={n} k={k}");
                assert_eq!(v.eval_at_one(), binom(n, k));
                assert_eq!(v.max_exp(), Some(k * (n - k)));
                assert_eq!(v.min_exp(), Some(0));
                assert!(v.is_nonneg());
            }
        }
    }

    #[test]
    fn symmetric_in_k() {
        for n in 0..=25 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
            }
        }
    }
}
