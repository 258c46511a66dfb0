use super::qbinomial::q_binomial;
use crate::poly::LaurentQ;

/// `D_q(m,n)` together with `D_{q^-1}(m,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDelannoyPair {
    pub m: u32,
    pub n: u32,
    pub dq: LaurentQ,
    pub dqinv: LaurentQ,
}

impl QDelannoyPair {
    /// `D_q(m,n) * D_{q^-1}(m,n)`
    pub fn product(&self) -> LaurentQ {
        &self.dq * &self.dqinv
    }
}

fn tri(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `D_q(m,n) = sum_k q^C(k,2) [n,k] [n+m-k,n]`, and the inverted-base value
/// through its closed form `q^(-mn) sum_k q^C(k+1,2) [n,k] [n+m-k,n]`.
pub fn q_delannoy(m: u32, n: u32) -> QDelannoyPair {
    let (mi, ni) = (m as i64, n as i64);
    let core = |k: i64| &q_binomial(ni, k) * &q_binomial(ni + mi - k, ni);
    let dq = (0..=ni).map(|k| core(k).shift(tri(k))).sum();
    let dqinv = (0..=ni).map(|k| core(k).shift(tri(k + 1) - mi * ni)).sum();
    QDelannoyPair { m, n, dq, dqinv }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    /// Lattice paths with E, N and NE steps.
    fn delannoy_paths(m: usize, n: usize) -> i64 {
        let mut t = vec![vec![0i64; n + 1]; m + 1];
        for i in 0..=m {
            for j in 0..=n {
                t[i][j] = if i == 0 || j == 0 {
                    1
                } else {
                    t[i - 1][j] + t[i][j - 1] + t[i - 1][j - 1]
                };
            }
        }
        t[m][n]
    }

    #[test]
    fn trivial_column() {
        for m in 0..6 {
            assert!(q_delannoy(m, 0).dq.is_one());
            assert!(q_delannoy(m, 0).dqinv.is_one());
        }
    }

    #[test]
    fn one_one() {
        let p = q_delannoy(1, 1);
        assert_eq!(p.dq, LaurentQ::from_coeffs(0, &[2, 1]));
        assert_eq!(p.dq.eval_at_one(), int(3));
    }

    #[test]
    fn specializes_to_delannoy_numbers() {
        for m in 0..=8u32 {
            for n in 0..=8u32 {
                let p = q_delannoy(m, n);
                let d = int(delannoy_paths(m as usize, n as usize));
                assert_eq!(p.dq.eval_at_one(), d, "m={m} n={n}");
                assert_eq!(p.dqinv.eval_at_one(), d, "m={m} n={n}");
                assert_eq!(p.dq.min_exp(), Some(0));
                // Closed form agrees with substituting q -> 1/q.
                assert_eq!(p.dqinv, p.dq.mirror(), "m={m} n={n}");
            }
        }
    }
}
