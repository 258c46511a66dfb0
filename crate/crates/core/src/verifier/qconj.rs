//! q-analogue conjectures: a congruence modulo `[p]^2` and non-negativity of
//! three weighted sums of `D_q(m,k) D_{q^-1}(m,k)`.

use super::claims::ClaimId;
use super::congruence::OddPrime;
use super::report::{Outcome, Params, Report};
use crate::poly::{LaurentError, LaurentQ};
use crate::qstruct::{cyclotomic, q_delannoy};

fn tri(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn pair_product(m: u32, k: u32) -> LaurentQ {
    q_delannoy(m, k).product()
}

/// `sum_{k<p} [2k+1] D_q(m,k) D_{q^-1}(m,k) q^-k`
pub fn q_sun1_sum(p: u32, m: u32) -> LaurentQ {
    (0..p)
        .map(|k| (&LaurentQ::q_int(2 * k + 1) * &pair_product(m, k)).shift(-(k as i64)))
        .sum()
}

/// Right side by case: `q(1-q^-2m)/(1-q^2)` if `p | m`, `q(1-q^(2m+2))/(1-q^2)`
/// if `p | m+1`, otherwise 0.
pub fn q_sun1_expected(p: u32, m: u32) -> LaurentQ {
    let mi = m as i64;
    let num = if m % p == 0 {
        LaurentQ::one_minus_q_pow(-2 * mi)
    } else if (m + 1) % p == 0 {
        LaurentQ::one_minus_q_pow(2 * mi + 2)
    } else {
        return LaurentQ::zero();
    };
    num.exact_div(&LaurentQ::one_minus_q_pow(2))
        .expect("1-q^2 divides 1-q^(2j)")
        .shift(1)
}

/// Congruence of the weighted sum modulo `Phi_p(q)^2`.
///
/// `q` is a unit modulo `Phi_p(q)^2`, so divisibility of the Laurent
/// difference is decided by exact division.
pub fn check_conj_q_sun1(p: OddPrime, m: u32) -> Report {
    let params = Params::new().with("m", m).with("p", p.get());
    Report::timed(ClaimId::ConjQSun1, params, || {
        let p = p.get() as u32;
        let diff = &q_sun1_sum(p, m) - &q_sun1_expected(p, m);
        let phi2 = cyclotomic(p).pow(2);
        match diff.exact_div(&phi2) {
            Ok(_) => Outcome::pass(),
            Err(LaurentError::NotDivisible { remainder }) => {
                Outcome::fail(format!("difference mod Phi_{p}^2 leaves {remainder}"))
            }
            Err(e) => Outcome::fail(e.to_string()),
        }
    })
}

/// The three sums for given `(n, m, r)`, each divided exactly by its denominator.
///
/// 1. `sum_{k<n} (1-q^m)(1-q^(m+1))(1-q^(2k+1)) / ((1-q^2)(1-q^n)^2) P_k q^-k`
/// 2. `sum_{k<n} (1-q^(2k+1))/(1-q^n) P_k^r q^-k`
/// 3. `sum_{k<n} (-1)^(n-k-1) (1-q^(2k+1))/(1-q^n) P_k^r q^C(k,2)`
///
/// where `P_k = D_q(m,k) D_{q^-1}(m,k)`.
pub fn q_t11_expressions(n: u32, m: u32, r: u32) -> [Result<LaurentQ, LaurentError>; 3] {
    let (ni, mi) = (n as i64, m as i64);
    let products: Vec<LaurentQ> = (0..n).map(|k| pair_product(m, k)).collect();
    let odd = |k: u32| LaurentQ::one_minus_q_pow(2 * k as i64 + 1);
    let one_minus_qn = LaurentQ::one_minus_q_pow(ni);

    let first_num: LaurentQ = (0..n)
        .map(|k| (&odd(k) * &products[k as usize]).shift(-(k as i64)))
        .sum();
    let first_num =
        &(&LaurentQ::one_minus_q_pow(mi) * &LaurentQ::one_minus_q_pow(mi + 1)) * &first_num;
    let first_den = &LaurentQ::one_minus_q_pow(2) * &one_minus_qn.pow(2);

    let second_num: LaurentQ = (0..n)
        .map(|k| (&odd(k) * &products[k as usize].pow(r)).shift(-(k as i64)))
        .sum();

    let third_num: LaurentQ = (0..n)
        .map(|k| {
            let t = (&odd(k) * &products[k as usize].pow(r)).shift(tri(k as i64));
            if (n - k - 1) % 2 == 0 {
                t
            } else {
                t.scale(&crate::exact::int(-1))
            }
        })
        .sum();

    [
        first_num.exact_div(&first_den),
        second_num.exact_div(&one_minus_qn),
        third_num.exact_div(&one_minus_qn),
    ]
}

/// All three sums are Laurent polynomials with non-negative coefficients.
pub fn check_conj_q_t11(n: u32, m: u32, r: u32) -> Report {
    let params = Params::new().with("m", m).with("n", n).with("r", r);
    Report::timed(ClaimId::ConjQT11, params, || {
        Outcome::all(
            q_t11_expressions(n, m, r)
                .into_iter()
                .enumerate()
                .map(|(i, res)| match res {
                    Ok(v) => match v.first_negative() {
                        None => Outcome::pass(),
                        Some((e, c)) => {
                            Outcome::fail(format!("sum {}: coefficient {c} at q^{e}", i + 1))
                        }
                    },
                    Err(LaurentError::NotDivisible { remainder }) => Outcome::fail(format!(
                        "sum {}: not a Laurent polynomial, remainder {remainder}",
                        i + 1
                    )),
                    Err(e) => Outcome::fail(format!("sum {}: {e}", i + 1)),
                }),
        )
    })
}
