//! The polynomial families `d_n(x)`, `s_n(x)` and the sums built from them.

use num_traits::{One, Zero};

use crate::exact::{binom, int, int_binomial, rat, rat_from_int, ExactInt, ExactRat};
use crate::poly::{polyx_binomial, polyx_binomial_shifted, MultiPolyZ, PolyX};

fn pow2(k: u32) -> ExactInt {
    ExactInt::one() << k
}

fn pow4(k: u32) -> ExactInt {
    ExactInt::one() << (2 * k)
}

/// `{x choose k}{x+k choose k}`
fn xk_pair(k: usize) -> PolyX {
    &polyx_binomial(k) * &polyx_binomial_shifted(k as i64, k)
}

/// `d_n(x) = sum_k C(n,k) {x choose k} 2^k`
pub fn d_poly(n: u32) -> PolyX {
    (0..=n)
        .map(|k| polyx_binomial(k as usize).scale_int(&(binom(n as i64, k as i64) * pow2(k))))
        .sum()
}

/// `s_n(x) = sum_k C(n,k) {x choose k} {x+k choose k}`
pub fn s_poly(n: u32) -> PolyX {
    (0..=n)
        .map(|k| xk_pair(k as usize).scale_int(&binom(n as i64, k as i64)))
        .sum()
}

/// `s_n(x) = sum_k C(n,k) {x choose k} {x+n-k choose n}`
pub fn s_alt_poly(n: u32) -> PolyX {
    let n_us = n as usize;
    (0..=n)
        .map(|k| {
            let term = &polyx_binomial(k as usize) * &polyx_binomial_shifted((n - k) as i64, n_us);
            term.scale_int(&binom(n as i64, k as i64))
        })
        .sum()
}

/// `sum_k C(n+k,2k) {x choose k}{x+k choose k} 4^k`, equal to `d_n(x)^2`.
pub fn dn_square_rhs(n: u32) -> PolyX {
    (0..=n)
        .map(|k| {
            let c = binom((n + k) as i64, 2 * k as i64) * pow4(k);
            xk_pair(k as usize).scale_int(&c)
        })
        .sum()
}

/// Inner sum `sum_{j<=k} C(2k,j+k) {x choose j}{x+j choose j}`.
pub fn sn_inner_sum(k: u32) -> PolyX {
    (0..=k)
        .map(|j| xk_pair(j as usize).scale_int(&binom(2 * k as i64, (j + k) as i64)))
        .sum()
}

/// `sum_k C(n+k,2k) {x choose k}{x+k choose k} sum_j C(2k,j+k) {x choose j}{x+j choose j}`,
/// equal to `s_n(x)^2`.
pub fn sn_square_rhs(n: u32) -> PolyX {
    (0..=n)
        .map(|k| {
            let outer = xk_pair(k as usize).scale_int(&binom((n + k) as i64, 2 * k as i64));
            &outer * &sn_inner_sum(k)
        })
        .sum()
}

/// `S_n(x_0..x_n) = sum_k C(n+k,2k) C(2k,k) x_k`
pub fn schmidt_poly(n: u32) -> MultiPolyZ {
    (0..=n)
        .map(|k| {
            let c = binom((n + k) as i64, 2 * k as i64) * binom(2 * k as i64, k as i64);
            MultiPolyZ::var(k as usize, c)
        })
        .sum()
}

/// `sum_{k<n} eps^k (2k+1) S_k^m`
pub fn schmidt_power_sum(n: u32, m: u32, alternating: bool) -> MultiPolyZ {
    (0..n)
        .map(|k| {
            let sign = if alternating && k % 2 == 1 { -1 } else { 1 };
            schmidt_poly(k)
                .pow(m)
                .scale(&int(sign * (2 * k as i64 + 1)))
        })
        .sum()
}

/// `A_n(r) = sum_{j,k<=n} C(n,j)C(n,k)C(j+k,j)C(k,r-j)C(r,k)`
pub fn double_sum_a(n: u32, r: u32) -> ExactInt {
    let (n, r) = (n as i64, r as i64);
    let mut acc = ExactInt::zero();
    for j in 0..=n {
        for k in 0..=n {
            let t = binom(k, r - j);
            if t.is_zero() {
                continue;
            }
            acc += binom(n, j) * binom(n, k) * binom(j + k, j) * t * binom(r, k);
        }
    }
    acc
}

/// `B_n(r) = sum_{j,k<=n} C(n+k,2k)C(2k,j+k)C(j+k,j)C(k,r-j)C(r,k)`
pub fn double_sum_b(n: u32, r: u32) -> ExactInt {
    let (n, r) = (n as i64, r as i64);
    let mut acc = ExactInt::zero();
    for j in 0..=n {
        for k in 0..=n {
            let t = binom(k, r - j);
            if t.is_zero() {
                continue;
            }
            acc += binom(n + k, 2 * k) * binom(2 * k, j + k) * binom(j + k, j) * t * binom(r, k);
        }
    }
    acc
}

/// Both sides of `sum_{m=k}^{n-1} (2m+1) C(m+k,2k) = n(n-k)/(k+1) C(n+k,2k)`.
pub fn simple_sum_sides(n: u32, k: u32) -> (ExactRat, ExactRat) {
    let (n, k) = (n as i64, k as i64);
    let lhs: ExactInt = (k..n).map(|m| binom(m + k, 2 * k) * (2 * m + 1)).sum();
    let rhs = rat(n * (n - k), k + 1) * rat_from_int(binom(n + k, 2 * k));
    (rat_from_int(lhs), rhs)
}

/// Left side of the weighted identity: `x(x+1)/(2n^2) sum_{m<n} (2m+1) d_m(x)^2`.
pub fn xx1_lhs(n: u32) -> PolyX {
    let sum: PolyX = (0..n)
        .map(|m| d_poly(m).pow(2).scale_int(&int(2 * m as i64 + 1)))
        .sum();
    let pre = PolyX::from_ints(&[0, 1, 1]).scale(&rat(1, 2 * (n as i64).pow(2)));
    &pre * &sum
}

/// Right side: `sum_{k<n} (n-k)(k+1)/(2n) C(n+k,2k) {x+1 choose k+1}{x+k choose k+1} 4^k`.
pub fn xx1_rhs(n: u32) -> PolyX {
    let ni = n as i64;
    (0..n)
        .map(|k| {
            let ki = k as i64;
            let c =
                rat((ni - ki) * (ki + 1), 2 * ni) * rat_from_int(binom(ni + ki, 2 * ki) * pow4(k));
            let t = &polyx_binomial_shifted(1, k as usize + 1)
                * &polyx_binomial_shifted(ki, k as usize + 1);
            t.scale(&c)
        })
        .sum()
}

/// `(1/n^2) sum_{m<n} (2m+1) s_m(x)^2`
pub fn double_sum_two_lhs(n: u32) -> PolyX {
    let sum: PolyX = (0..n)
        .map(|m| s_poly(m).pow(2).scale_int(&int(2 * m as i64 + 1)))
        .sum();
    sum.scale(&rat(1, (n as i64).pow(2)))
}

/// `sum_{k<n} 1/(k+1) C(n-1,k) C(n+k,k) {x+k choose 2k} sum_j C(2k,j+k){x choose j}{x+j choose j}`
pub fn double_sum_two_rhs(n: u32) -> PolyX {
    let ni = n as i64;
    (0..n)
        .map(|k| {
            let ki = k as i64;
            let c = rat(1, ki + 1) * rat_from_int(binom(ni - 1, ki) * binom(ni + ki, ki));
            (&polyx_binomial_shifted(ki, 2 * k as usize) * &sn_inner_sum(k)).scale(&c)
        })
        .sum()
}

/// `d_n(x)` at an integer point, through generalized integer binomials.
pub fn d_value(n: u32, x: &ExactInt) -> ExactInt {
    (0..=n)
        .map(|k| binom(n as i64, k as i64) * int_binomial(x, k as i64) * pow2(k))
        .sum()
}

/// `s_n(x)` at an integer point.
pub fn s_value(n: u32, x: &ExactInt) -> ExactInt {
    (0..=n)
        .map(|k| {
            let k = k as i64;
            binom(n as i64, k) * int_binomial(x, k) * int_binomial(&(x + k), k)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Degree, PolyX};

    fn delannoy_paths(m: usize, n: usize) -> i64 {
        let mut t = vec![vec![1i64; n + 1]; m + 1];
        for i in 1..=m {
            for j in 1..=n {
                t[i][j] = t[i - 1][j] + t[i][j - 1] + t[i - 1][j - 1];
            }
        }
        t[m][n]
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_poly(0), PolyX::one());
        assert_eq!(d_poly(1), PolyX::from_ints(&[1, 2]));
        for n in 0..=8 {
            assert_eq!(d_poly(n).degree(), Degree::Finite(n as usize));
            for m in 0..=8 {
                let expect = rat_from_int(int(delannoy_paths(m, n as usize)));
                assert_eq!(d_poly(n).eval_int(&int(m as i64)), expect, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_poly(0), PolyX::one());
        assert_eq!(s_poly(1), PolyX::from_ints(&[1, 1, 1]));
        assert_eq!(s_alt_poly(0), PolyX::one());
        assert_eq!(s_alt_poly(1), PolyX::from_ints(&[1, 1, 1]));
        for n in 0..=12 {
            assert_eq!(s_poly(n), s_alt_poly(n), "n={n}");
            assert_eq!(s_poly(n).degree(), Degree::Finite(2 * n as usize));
        }
    }

    #[test]
    fn point_values_match_polynomials() {
        for n in 0..=7 {
            let (d, s) = (d_poly(n), s_poly(n));
            for x in -12..=12 {
                let xi = int(x);
                assert_eq!(rat_from_int(d_value(n, &xi)), d.eval_int(&xi));
                assert_eq!(rat_from_int(s_value(n, &xi)), s.eval_int(&xi));
            }
        }
    }

    #[test]
    fn square_examples() {
        assert_eq!(dn_square_rhs(0), PolyX::one());
        // 1 + 4x(x+1) = (1+2x)^2
        assert_eq!(dn_square_rhs(1), PolyX::from_ints(&[1, 4, 4]));
        assert_eq!(sn_square_rhs(0), PolyX::one());
        assert_eq!(sn_square_rhs(1), PolyX::from_ints(&[1, 1, 1]).pow(2));
    }

    #[test]
    fn schmidt_examples() {
        assert_eq!(schmidt_poly(0), MultiPolyZ::var(0, int(1)));
        assert_eq!(
            schmidt_poly(1),
            &MultiPolyZ::var(0, int(1)) + &MultiPolyZ::var(1, int(2))
        );
        let s2: MultiPolyZ = [(0, 1), (1, 6), (2, 6)]
            .into_iter()
            .map(|(i, c)| MultiPolyZ::var(i, int(c)))
            .sum();
        assert_eq!(schmidt_poly(2), s2);
        assert!(schmidt_power_sum(5, 1, false).coeffs_divisible_by(&int(5)));
    }

    #[test]
    fn double_sum_corners() {
        for r in 0..6 {
            let expect = int(i64::from(r == 0));
            assert_eq!(double_sum_a(0, r), expect);
            assert_eq!(double_sum_b(0, r), expect);
        }
        // r = 1 by hand. A: (j,k) = (0,1), (1,0), (1,1) give 1 + 1 + 2.
        // B: (0,1) and (1,1) give 2 + 2.
        assert_eq!(double_sum_a(1, 1), int(4));
        assert_eq!(double_sum_b(1, 1), int(4));
    }

    #[test]
    fn simple_sum_examples() {
        // n=3, k=1: 3*C(2,2) + 5*C(3,2) = 18 = 3*2/2 * C(4,2)
        assert_eq!(simple_sum_sides(3, 1), (rat(18, 1), rat(18, 1)));
        assert_eq!(simple_sum_sides(4, 4), (rat(0, 1), rat(0, 1)));
    }
}
