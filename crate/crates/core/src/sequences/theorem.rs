//! The weighted power sums of `d_k` and `s_k` and the integrality quantities.

use super::families::{d_poly, d_value, s_poly, s_value};
use crate::exact::{binom, int, rat, rat_from_int, ExactInt, ExactRat};
use crate::poly::PolyX;

/// Which weighted sum. `T11_*` are the six integer-valued expressions; the
/// `Mixed*` kinds are the `d_k^m s_k^m` sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SumKind {
    /// `x(x+1)/(2n^2) sum (2k+1) d_k^2`
    T11_1,
    /// `(1/n) sum (2k+1) d_k^(2m)`
    T11_2,
    /// `(1/n) sum (-1)^k (2k+1) d_k^(2m)`
    T11_3,
    /// `(1/n^2) sum (2k+1) s_k^2`
    T11_4,
    /// `(1/n) sum (2k+1) s_k^(2m)`
    T11_5,
    /// `(1/n) sum (-1)^k (2k+1) s_k^(2m)`
    T11_6,
    /// `(1/n) sum (2k+1) d_k^m s_k^m`
    MixedDs,
    /// `(1/n) sum (-1)^k (2k+1) d_k^m s_k^m`
    MixedDsAlt,
}

impl SumKind {
    pub const THEOREM11: [SumKind; 6] = [
        SumKind::T11_1,
        SumKind::T11_2,
        SumKind::T11_3,
        SumKind::T11_4,
        SumKind::T11_5,
        SumKind::T11_6,
    ];
    pub const MIXED: [SumKind; 2] = [SumKind::MixedDs, SumKind::MixedDsAlt];

    pub fn label(self) -> &'static str {
        match self {
            SumKind::T11_1 => "T11_1",
            SumKind::T11_2 => "T11_2",
            SumKind::T11_3 => "T11_3",
            SumKind::T11_4 => "T11_4",
            SumKind::T11_5 => "T11_5",
            SumKind::T11_6 => "T11_6",
            SumKind::MixedDs => "MIXED_DS",
            SumKind::MixedDsAlt => "MIXED_DS_ALT",
        }
    }

    fn alternating(self) -> bool {
        matches!(self, SumKind::T11_3 | SumKind::T11_6 | SumKind::MixedDsAlt)
    }

    /// `(d exponent, s exponent)` of the summand for power parameter `m`.
    fn exponents(self, m: u32) -> (u32, u32) {
        match self {
            SumKind::T11_1 => (2, 0),
            SumKind::T11_2 | SumKind::T11_3 => (2 * m, 0),
            SumKind::T11_4 => (0, 2),
            SumKind::T11_5 | SumKind::T11_6 => (0, 2 * m),
            SumKind::MixedDs | SumKind::MixedDsAlt => (m, m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumSpec {
    pub kind: SumKind,
    pub n: u32,
    pub m: u32,
}

impl SumSpec {
    pub fn new(kind: SumKind, n: u32, m: u32) -> Self {
        Self { kind, n, m }
    }

    fn weight(&self, k: u32) -> i64 {
        let w = 2 * k as i64 + 1;
        if self.kind.alternating() && k % 2 == 1 {
            -w
        } else {
            w
        }
    }

    fn prefactor_at(&self, x: &ExactInt) -> ExactRat {
        let n = self.n as i64;
        match self.kind {
            SumKind::T11_1 => rat_from_int(x * (x + 1)) * rat(1, 2 * n * n),
            SumKind::T11_4 => rat(1, n * n),
            _ => rat(1, n),
        }
    }

    fn prefactor_poly(&self) -> PolyX {
        let n = self.n as i64;
        match self.kind {
            SumKind::T11_1 => PolyX::from_ints(&[0, 1, 1]).scale(&rat(1, 2 * n * n)),
            SumKind::T11_4 => PolyX::constant(rat(1, n * n)),
            _ => PolyX::constant(rat(1, n)),
        }
    }
}

/// Exact value of the expression at an integer `x`, summing point values of
/// `d_k(x)` and `s_k(x)` from integer binomials.
pub fn theorem11_expression(spec: SumSpec, x: &ExactInt) -> ExactRat {
    let (de, se) = spec.kind.exponents(spec.m);
    let sum: ExactInt = (0..spec.n)
        .map(|k| {
            let mut t = int(spec.weight(k));
            if de > 0 {
                t *= num_traits::pow(d_value(k, x), de as usize);
            }
            if se > 0 {
                t *= num_traits::pow(s_value(k, x), se as usize);
            }
            t
        })
        .sum();
    spec.prefactor_at(x) * rat_from_int(sum)
}

/// The same expression as an exact polynomial in `x`.
pub fn theorem11_poly(spec: SumSpec) -> PolyX {
    let (de, se) = spec.kind.exponents(spec.m);
    let sum: PolyX = (0..spec.n)
        .map(|k| {
            let mut t = PolyX::constant(rat(spec.weight(k), 1));
            if de > 0 {
                t = &t * &d_poly(k).pow(de);
            }
            if se > 0 {
                t = &t * &s_poly(k).pow(se);
            }
            t
        })
        .sum();
    &spec.prefactor_poly() * &sum
}

/// `((n-k)(k+1)/n) C(n+k,2k) C(m+1,k+1) C(m+k,k+1)` and
/// `(1/(k+1)) C(n-1,k) C(n+k,k) C(2k,j+k) C(m+k,2k) C(m,j) C(m+j,j)`.
pub fn theorem12_quantities(n: u32, m: u32, k: u32, j: u32) -> (ExactRat, ExactRat) {
    let (n, m, k, j) = (n as i64, m as i64, k as i64, j as i64);
    let first = rat((n - k) * (k + 1), n)
        * rat_from_int(binom(n + k, 2 * k) * binom(m + 1, k + 1) * binom(m + k, k + 1));
    let second = rat(1, k + 1)
        * rat_from_int(
            binom(n - 1, k)
                * binom(n + k, k)
                * binom(2 * k, j + k)
                * binom(m + k, 2 * k)
                * binom(m, j)
                * binom(m + j, j),
        );
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn examples() {
        let v = theorem11_expression(SumSpec::new(SumKind::T11_1, 1, 1), &int(1));
        assert_eq!(v, rat(1, 1));
        let v = theorem11_expression(SumSpec::new(SumKind::T11_4, 2, 1), &int(1));
        assert_eq!(v, rat(7, 1));
    }

    #[test]
    fn point_and_polynomial_paths_agree() {
        for kind in SumKind::THEOREM11.into_iter().chain(SumKind::MIXED) {
            for n in 1..=4 {
                for m in 1..=2 {
                    let spec = SumSpec::new(kind, n, m);
                    let p = theorem11_poly(spec);
                    for x in -6..=6 {
                        let xi = int(x);
                        assert_eq!(
                            theorem11_expression(spec, &xi),
                            p.eval_int(&xi),
                            "{spec:?} x={x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn theorem12_examples() {
        let (a, _) = theorem12_quantities(3, 2, 1, 0);
        assert_eq!(a, rat(72, 1));
        for n in 1..=6 {
            let (a, _) = theorem12_quantities(n, 4, n, 0);
            assert!(a.is_zero());
        }
    }
}
