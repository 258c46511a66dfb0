//! Cyclotomic exponent profiles of the two q-binomial quotients
//!
//! ```text
//! A(n,k,m) = (1-q^(n-k))(1-q^(k+1)) / ((1-q)(1-q^n)) [n+k,2k] [m+1,k+1] [m+k,k+1]
//! B(n,k,m,j) = (1-q)/(1-q^(k+1)) [n-1,k] [n+k,k] [2k,j+k] [m+k,2k] [m,j] [m+j,j]
//! ```
//!
//! Each equals `prod_{d >= 2} Phi_d(q)^(e_d)`, where `e_d` is a sum of divisibility
//! indicators and floor terms. The profiles below evaluate those closed forms;
//! the explicit quotients (built from `q_binomial`) are the independent side.

use std::collections::BTreeMap;

use super::cyclotomic::cyclotomic;
use super::qbinomial::q_binomial;
use crate::poly::{LaurentError, LaurentQ};

/// `d -> e_d` for `d` in `[2, d_max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloProfile {
    exponents: BTreeMap<u32, i64>,
}

impl CycloProfile {
    pub fn exponents(&self) -> &BTreeMap<u32, i64> {
        &self.exponents
    }

    pub fn get(&self, d: u32) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn d_max(&self) -> u32 {
        self.exponents.keys().next_back().copied().unwrap_or(1)
    }

    /// First `(d, e_d)` with `e_d < 0`.
    pub fn first_negative(&self) -> Option<(u32, i64)> {
        self.exponents
            .iter()
            .find(|(_, e)| **e < 0)
            .map(|(d, e)| (*d, *e))
    }

    pub fn is_nonneg(&self) -> bool {
        self.first_negative().is_none()
    }

    /// `prod_d Phi_d^(e_d)`, defined when every exponent is non-negative.
    pub fn reconstruct(&self) -> Option<LaurentQ> {
        if !self.is_nonneg() {
            return None;
        }
        Some(
            self.exponents
                .iter()
                .filter(|(_, e)| **e > 0)
                .map(|(d, e)| cyclotomic(*d).pow(*e as u32))
                .product(),
        )
    }
}

fn fl(a: i64, d: i64) -> i64 {
    a.div_euclid(d)
}

fn chi(d: i64, a: i64) -> i64 {
    i64::from(a.rem_euclid(d) == 0)
}

/// Exponents for `A(n,k,m)`, for `d` in `[2, max(m+k, n+k, m+1)]`.
///
/// The `m+1` bound only matters at `k = 0`, where `[m+1,1]` contributes `Phi_(m+1)`.
pub fn exponent_profile_a(n: i64, k: i64, m: i64) -> CycloProfile {
    let d_max = (m + k).max(n + k).max(m + 1);
    let exponents = (2..=d_max)
        .map(|d| {
            let e = chi(d, n - k) + chi(d, k + 1) - chi(d, n)
                + fl(n + k, d)
                + fl(m + 1, d)
                + fl(m + k, d)
                - fl(n - k, d)
                - fl(2 * k, d)
                - fl(m - k, d)
                - fl(m - 1, d)
                - 2 * fl(k + 1, d);
            (d as u32, e)
        })
        .collect();
    CycloProfile { exponents }
}

/// Exponents for `B(n,k,m,j)`, for `d` in `[2, max(n+k, m+k, m+j)]`.
pub fn exponent_profile_b(n: i64, k: i64, m: i64, j: i64) -> CycloProfile {
    let d_max = (n + k).max(m + k).max(m + j);
    let exponents = (2..=d_max)
        .map(|d| {
            let e = -chi(d, k + 1) + fl(n - 1, d) + fl(n + k, d) + fl(m + k, d) + fl(m + j, d)
                - fl(n, d)
                - fl(n - k - 1, d)
                - fl(j + k, d)
                - fl(k - j, d)
                - fl(m - k, d)
                - 2 * fl(k, d)
                - fl(m - j, d)
                - 2 * fl(j, d);
            (d as u32, e)
        })
        .collect();
    CycloProfile { exponents }
}

/// Whether the closed form for `A(n,k,m)` describes a nonzero quotient:
/// `0 <= k < n` and `k <= m`. Outside this range the quotient vanishes.
pub fn profile_a_in_range(n: i64, k: i64, m: i64) -> bool {
    n >= 1 && m >= 1 && (0..n).contains(&k) && k <= m
}

/// Nonzero range for `B(n,k,m,j)`: `0 <= j <= k <= min(n-1, m)`.
pub fn profile_b_in_range(n: i64, k: i64, m: i64, j: i64) -> bool {
    n >= 1 && m >= 1 && 0 <= j && j <= k && k < n && k <= m
}

/// The quotient `A(n,k,m)` by exact division.
pub fn q_analog_a(n: i64, k: i64, m: i64) -> Result<LaurentQ, LaurentError> {
    let num: LaurentQ = [
        LaurentQ::one_minus_q_pow(n - k),
        LaurentQ::one_minus_q_pow(k + 1),
        q_binomial(n + k, 2 * k),
        q_binomial(m + 1, k + 1),
        q_binomial(m + k, k + 1),
    ]
    .into_iter()
    .product();
    let den = &LaurentQ::one_minus_q_pow(1) * &LaurentQ::one_minus_q_pow(n);
    num.exact_div(&den)
}

/// The quotient `B(n,k,m,j)` by exact division.
pub fn q_analog_b(n: i64, k: i64, m: i64, j: i64) -> Result<LaurentQ, LaurentError> {
    let num: LaurentQ = [
        LaurentQ::one_minus_q_pow(1),
        q_binomial(n - 1, k),
        q_binomial(n + k, k),
        q_binomial(2 * k, j + k),
        q_binomial(m + k, 2 * k),
        q_binomial(m, j),
        q_binomial(m + j, j),
    ]
    .into_iter()
    .product();
    num.exact_div(&LaurentQ::one_minus_q_pow(k + 1))
}
