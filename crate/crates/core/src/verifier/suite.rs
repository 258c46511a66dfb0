//! Grid enumeration, per-point evaluation and the parallel suite runner.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::claims::ClaimId;
use super::congruence::{
    check_binom_cong, check_congruence_sun1, check_congruence_sun2, check_sun_final, check_thm51,
    residue_mod_power, OddPrime, SunFinalPoint,
};
use super::qconj::{check_conj_q_sun1, check_conj_q_t11};
use super::report::{Outcome, Params, Report, Status};
use crate::exact::{int, ExactInt, ExactRat};
use crate::poly::{is_integer_valued, to_binomial_basis, LaurentQ, PolyX};
use crate::qstruct::{
    cyclotomic_valuation, exponent_profile_a, exponent_profile_b, profile_a_in_range,
    profile_b_in_range, q_analog_a, q_analog_b, CycloProfile,
};
use crate::sequences::*;

pub const DEFAULT_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];
pub const DEFAULT_THM51_SAMPLES: usize = 128;
pub const DEFAULT_SEED: u64 = 0x5EED_D31A;

/// Grid bounds. `None` keeps each claim's own default range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: Option<u32>,
    pub m_max: Option<u32>,
    pub r_max: Option<u32>,
    pub x_min: Option<i64>,
    pub x_max: Option<i64>,
    pub primes: Vec<u64>,
    /// Residues per prime for the `p^4` check; exhaustive when `p^4` is at most this.
    pub thm51_samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            n_max: None,
            m_max: None,
            r_max: None,
            x_min: None,
            x_max: None,
            primes: DEFAULT_PRIMES.to_vec(),
            thm51_samples: DEFAULT_THM51_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

impl Bounds {
    fn n(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }

    fn m(&self, default: u32) -> u32 {
        self.m_max.unwrap_or(default)
    }

    fn r(&self, default: u32) -> u32 {
        self.r_max.unwrap_or(default)
    }

    fn x_range(&self) -> (i64, i64) {
        (self.x_min.unwrap_or(-12), self.x_max.unwrap_or(12))
    }

    fn odd_primes(&self) -> impl Iterator<Item = OddPrime> + '_ {
        self.primes.iter().filter_map(|&p| OddPrime::new(p).ok())
    }
}

fn p_n(n: u32) -> Params {
    Params::new().with("n", n)
}

fn p_nm(n: u32, m: u32) -> Params {
    Params::new().with("m", m).with("n", n)
}

fn p_nr(n: u32, r: u32) -> Params {
    Params::new().with("n", n).with("r", r)
}

fn grid_n(lo: u32, hi: u32) -> Vec<Params> {
    (lo..=hi).map(p_n).collect()
}

fn grid_nm(n_lo: u32, n_hi: u32, m_lo: u32, m_hi: u32) -> Vec<Params> {
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        for m in m_lo..=m_hi {
            out.push(p_nm(n, m));
        }
    }
    out
}

fn grid_nr(n_hi: u32) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 0..=n_hi {
        for r in 0..=2 * n {
            out.push(p_nr(n, r));
        }
    }
    out
}

/// Distinct residues modulo `p^4`: all of them when few enough, otherwise a
/// seeded sample, sorted.
pub fn thm51_residues(p: u64, samples: usize, seed: u64) -> Vec<u64> {
    let modulus = p.pow(4);
    if modulus <= samples as u64 {
        return (0..modulus).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p);
    let mut picked = BTreeSet::new();
    while picked.len() < samples {
        picked.insert(rng.gen_range(0..modulus));
    }
    picked.into_iter().collect()
}

/// Parameter points of one claim, in a fixed order.
pub fn points(claim: ClaimId, b: &Bounds) -> Vec<Params> {
    use ClaimId::*;
    match claim {
        EqDnSquare | EqSymmetry | RecZeil1 => grid_n(0, b.n(25)),
        EqSnSquare | EqSAlt => grid_n(0, b.n(12)),
        EqDoubleSum | RecOrder3 | RecOrder2 => grid_nr(b.n(12)),
        EqSimple => grid_n(0, b.n(40)),
        EqXx1 => grid_n(1, b.n(15)),
        EqDoubleSumTwo => grid_n(1, b.n(10)),
        RecZeilSquare => grid_n(0, b.n(20)),
        Thm11All => {
            let (lo, hi) = b.x_range();
            grid_nm(1, b.n(8), 1, b.m(3))
                .into_iter()
                .map(|p| p.with("x_max", hi).with("x_min", lo))
                .collect()
        }
        Thm11Iv => grid_nm(1, b.n(6), 1, b.m(2)),
        Thm12 => grid_nm(1, b.n(12), 1, b.m(12)),
        Thm21A | Thm21B => grid_nm(1, b.n(10), 1, b.m(10)),
        ProfileA | ProfileB => grid_nm(1, b.n(8), 1, b.m(8)),
        Lem34 => {
            let mut out = Vec::new();
            for eps in [1i64, -1] {
                for m in 1..=b.m(3) {
                    for n in 1..=b.n(8) {
                        out.push(p_nm(n, m).with("eps", eps));
                    }
                }
            }
            out
        }
        BinomCong => b
            .odd_primes()
            .map(|p| Params::new().with("p", p.get()))
            .collect(),
        CongSun1 | CongSun2 => b
            .odd_primes()
            .flat_map(|p| {
                let p = p.get();
                (0..p * p).map(move |x| Params::new().with("p", p).with("x", x))
            })
            .collect(),
        Thm51 => b
            .odd_primes()
            .flat_map(|p| {
                let p = p.get();
                thm51_residues(p, b.thm51_samples, b.seed)
                    .into_iter()
                    .map(move |x| Params::new().with("p", p).with("x", x))
            })
            .collect(),
        ConjSunFinal => b
            .odd_primes()
            .flat_map(|p| {
                SunFinalPoint::ALL
                    .into_iter()
                    .map(move |w| Params::new().with("p", p.get()).with("x", w.label()))
            })
            .collect(),
        ConjQSun1 => b
            .odd_primes()
            .flat_map(|p| (1..=b.m(5)).map(move |m| Params::new().with("m", m).with("p", p.get())))
            .collect(),
        ConjQT11 => {
            let mut out = Vec::new();
            for n in 1..=b.n(5) {
                for m in 1..=b.m(5) {
                    for r in 1..=b.r(2) {
                        out.push(p_nm(n, m).with("r", r));
                    }
                }
            }
            out
        }
        ConjMixedDs => grid_nm(1, b.n(6), 1, b.m(6)),
    }
}

fn get_int(params: &Params, key: &str) -> Result<i64, String> {
    params
        .int(key)
        .ok_or_else(|| format!("missing integer parameter `{key}`"))
}

fn get_u32(params: &Params, key: &str) -> Result<u32, String> {
    let v = get_int(params, key)?;
    u32::try_from(v).map_err(|_| format!("parameter `{key}` out of range: {v}"))
}

fn poly_identity(lhs: PolyX, rhs: PolyX) -> Outcome {
    let diff = &lhs - &rhs;
    Outcome::check(diff.is_zero(), || format!("difference {diff}"))
}

fn zero_residual(label: &str, v: PolyX) -> Outcome {
    Outcome::check(v.is_zero(), || format!("{label} residual {v}"))
}

fn zero_int_residual(label: &str, v: ExactInt) -> Outcome {
    Outcome::check(v.is_zero(), || format!("{label} residual {v}"))
}

fn integral(label: impl FnOnce() -> String, v: &ExactRat) -> Outcome {
    Outcome::check(v.is_integer(), || format!("{} = {v}", label()))
}

fn nonneg_polynomial(
    label: impl Fn() -> String,
    q: Result<LaurentQ, crate::poly::LaurentError>,
) -> Outcome {
    match q {
        Ok(v) => {
            if let Some(e) = v.min_exp().filter(|e| *e < 0) {
                return Outcome::fail(format!("{}: negative power q^{e}", label()));
            }
            match v.first_negative() {
                None => Outcome::pass(),
                Some((e, c)) => Outcome::fail(format!("{}: coefficient {c} at q^{e}", label())),
            }
        }
        Err(e) => Outcome::fail(format!("{}: {e}", label())),
    }
}

fn profile_matches(label: impl Fn() -> String, prof: CycloProfile, quotient: LaurentQ) -> Outcome {
    if quotient.is_zero() {
        return Outcome::fail(format!("{}: quotient vanishes", label()));
    }
    for d in 2..=prof.d_max() {
        let v = cyclotomic_valuation(&quotient, d).map(i64::from);
        if v != Some(prof.get(d)) {
            return Outcome::fail(format!(
                "{}: e_{d} = {} but valuation is {v:?}",
                label(),
                prof.get(d)
            ));
        }
    }
    match prof.reconstruct() {
        Some(r) if r == quotient => Outcome::pass(),
        Some(r) => Outcome::fail(format!("{}: product of Phi_d^e_d is {r}", label())),
        None => Outcome::fail(format!(
            "{}: negative exponent {:?}",
            label(),
            prof.first_negative()
        )),
    }
}

/// Evaluates one claim at one parameter point. Everything the check needs is
/// in `params`, so a report can be re-evaluated from its own fields.
pub fn evaluate(claim: ClaimId, params: &Params) -> Outcome {
    match evaluate_inner(claim, params) {
        Ok(o) => o,
        Err(msg) => Outcome::fail(msg),
    }
}

fn evaluate_inner(claim: ClaimId, params: &Params) -> Result<Outcome, String> {
    use ClaimId::*;
    let outcome = match claim {
        EqDnSquare => {
            let n = get_u32(params, "n")?;
            poly_identity(d_poly(n).pow(2), dn_square_rhs(n))
        }
        EqSnSquare => {
            let n = get_u32(params, "n")?;
            poly_identity(s_poly(n).pow(2), sn_square_rhs(n))
        }
        EqDoubleSum => {
            let (n, r) = (get_u32(params, "n")?, get_u32(params, "r")?);
            let (a, b) = (double_sum_a(n, r), double_sum_b(n, r));
            Outcome::check(a == b, || format!("A = {a}, B = {b}"))
        }
        EqSymmetry => {
            let n = get_u32(params, "n")?;
            let d = d_poly(n);
            let reflected = d.compose(&PolyX::from_ints(&[-1, -1]));
            let signed = if n % 2 == 0 { d } else { -&d };
            poly_identity(reflected, signed)
        }
        EqSAlt => {
            let n = get_u32(params, "n")?;
            poly_identity(s_poly(n), s_alt_poly(n))
        }
        EqSimple => {
            let n = get_u32(params, "n")?;
            Outcome::all((0..=n).map(|k| {
                let (l, r) = simple_sum_sides(n, k);
                Outcome::check(l == r, || format!("k={k}: {l} != {r}"))
            }))
        }
        EqXx1 => {
            let n = get_u32(params, "n")?;
            poly_identity(xx1_lhs(n), xx1_rhs(n))
        }
        EqDoubleSumTwo => {
            let n = get_u32(params, "n")?;
            poly_identity(double_sum_two_lhs(n), double_sum_two_rhs(n))
        }
        RecZeil1 => zero_residual("zeil1", zeil1_residual(get_u32(params, "n")?)),
        RecZeilSquare => {
            let n = get_u32(params, "n")?;
            Outcome::all([
                zero_residual("zeil3", zeil3_residual(n)),
                zero_residual("zeil4", zeil4_residual(n)),
                zero_residual("d^2 order-3", d_square_order3_residual(n)),
                zero_residual("single-sum order-3", single_sum_order3_residual(n)),
            ])
        }
        RecOrder3 => {
            let (n, r) = (get_u32(params, "n")?, get_u32(params, "r")?);
            Outcome::all([
                zero_int_residual("A order-3", rec_one_residual(n, r)),
                zero_int_residual("B order-3", rec_two_residual(n, r)),
            ])
        }
        RecOrder2 => {
            let (n, r) = (get_u32(params, "n")?, get_u32(params, "r")?);
            Outcome::all([
                zero_int_residual("A order-2", order2_residual_a(n, r)),
                zero_int_residual("B order-2", order2_residual_b(n, r)),
            ])
        }
        Thm11All => {
            let (n, m) = (get_u32(params, "n")?, get_u32(params, "m")?);
            let (lo, hi) = (get_int(params, "x_min")?, get_int(params, "x_max")?);
            let mut out = Outcome::pass();
            'grid: for kind in SumKind::THEOREM11 {
                let spec = SumSpec::new(kind, n, m);
                for x in lo..=hi {
                    let v = theorem11_expression(spec, &int(x));
                    out = integral(|| format!("{} at x={x}", kind.label()), &v);
                    if out.status != Status::Pass {
                        break 'grid;
                    }
                }
            }
            out
        }
        Thm11Iv => {
            let (n, m) = (get_u32(params, "n")?, get_u32(params, "m")?);
            Outcome::all(SumKind::THEOREM11.into_iter().map(|kind| {
                let basis = to_binomial_basis(&theorem11_poly(SumSpec::new(kind, n, m)));
                match basis.first_non_integral() {
                    None => Outcome::pass(),
                    Some((i, c)) => Outcome::fail(format!(
                        "{}: coefficient {c} of {{x choose {i}}}",
                        kind.label()
                    )),
                }
            }))
        }
        Thm12 => {
            let (n, m) = (get_u32(params, "n")?, get_u32(params, "m")?);
            let mut out = Outcome::pass();
            'outer: for k in 0..=n {
                for j in 0..=k {
                    let (a, b) = theorem12_quantities(n, m, k, j);
                    out = Outcome::all([
                        integral(|| format!("first quantity at k={k}"), &a),
                        integral(|| format!("second quantity at k={k} j={j}"), &b),
                    ]);
                    if out.status != Status::Pass {
                        break 'outer;
                    }
                }
            }
            out
        }
        Thm21A => {
            let (n, m) = (get_int(params, "n")?, get_int(params, "m")?);
            Outcome::all(
                (0..=n).map(|k| nonneg_polynomial(|| format!("k={k}"), q_analog_a(n, k, m))),
            )
        }
        Thm21B => {
            let (n, m) = (get_int(params, "n")?, get_int(params, "m")?);
            Outcome::all((0..=n).flat_map(|k| {
                (0..=k).map(move |j| {
                    nonneg_polynomial(|| format!("k={k} j={j}"), q_analog_b(n, k, m, j))
                })
            }))
        }
        ProfileA => {
            let (n, m) = (get_int(params, "n")?, get_int(params, "m")?);
            let mut out = Outcome::pass();
            for k in (0..n).filter(|&k| profile_a_in_range(n, k, m)) {
                let q = q_analog_a(n, k, m).map_err(|e| format!("k={k}: {e}"))?;
                out = profile_matches(|| format!("k={k}"), exponent_profile_a(n, k, m), q);
                if out.status != Status::Pass {
                    break;
                }
            }
            out
        }
        ProfileB => {
            let (n, m) = (get_int(params, "n")?, get_int(params, "m")?);
            let mut out = Outcome::pass();
            'outer: for k in 0..n {
                for j in (0..=k).filter(|&j| profile_b_in_range(n, k, m, j)) {
                    let q = q_analog_b(n, k, m, j).map_err(|e| format!("k={k} j={j}: {e}"))?;
                    out = profile_matches(
                        || format!("k={k} j={j}"),
                        exponent_profile_b(n, k, m, j),
                        q,
                    );
                    if out.status != Status::Pass {
                        break 'outer;
                    }
                }
            }
            out
        }
        Lem34 => {
            let (n, m) = (get_u32(params, "n")?, get_u32(params, "m")?);
            let eps = get_int(params, "eps")?;
            let poly = schmidt_power_sum(n, m, eps < 0);
            let nn = int(n as i64);
            match poly.first_non_multiple(&nn) {
                None => Outcome::pass(),
                Some((mono, c)) => Outcome::fail(format!("coefficient {c} of monomial {mono:?}")),
            }
        }
        BinomCong => check_binom_cong(odd_prime(params)?).outcome(),
        CongSun1 => {
            let p = odd_prime(params)?;
            check_congruence_sun1(p, &residue(params, p.get(), 2)?).outcome()
        }
        CongSun2 => {
            let p = odd_prime(params)?;
            check_congruence_sun2(p, &residue(params, p.get(), 2)?).outcome()
        }
        Thm51 => {
            let p = odd_prime(params)?.get();
            check_thm51(p, &residue(params, p, 4)?).outcome()
        }
        ConjSunFinal => {
            let p = odd_prime(params)?;
            let which: SunFinalPoint = params
                .text("x")
                .ok_or("missing parameter `x`")?
                .parse()
                .map_err(|e: super::congruence::CongruenceError| e.to_string())?;
            check_sun_final(p, which).outcome()
        }
        ConjQSun1 => check_conj_q_sun1(odd_prime(params)?, get_u32(params, "m")?).outcome(),
        ConjQT11 => check_conj_q_t11(
            get_u32(params, "n")?,
            get_u32(params, "m")?,
            get_u32(params, "r")?,
        )
        .outcome(),
        ConjMixedDs => {
            let (n, m) = (get_u32(params, "n")?, get_u32(params, "m")?);
            Outcome::all(SumKind::MIXED.into_iter().map(|kind| {
                let poly = theorem11_poly(SumSpec::new(kind, n, m));
                Outcome::check(is_integer_valued(&poly), || {
                    let basis = to_binomial_basis(&poly);
                    let (i, c) = basis
                        .first_non_integral()
                        .expect("non-integral coefficient");
                    format!("{}: coefficient {c} of {{x choose {i}}}", kind.label())
                })
            }))
        }
    };
    Ok(outcome)
}

fn odd_prime(params: &Params) -> Result<OddPrime, String> {
    let p = get_int(params, "p")?;
    u64::try_from(p)
        .ok()
        .and_then(|p| OddPrime::new(p).ok())
        .ok_or_else(|| format!("{p} is not an odd prime"))
}

fn residue(params: &Params, p: u64, e: u32) -> Result<crate::exact::ModScalar, String> {
    let x = get_int(params, "x")?;
    let r = residue_mod_power(p, e, x).map_err(|e| e.to_string())?;
    if ExactInt::from(x) != *r.residue() {
        return Err(format!("x = {x} is not reduced modulo {}", r.modulus()));
    }
    Ok(r)
}

/// Runs every point of every requested claim and returns reports sorted by
/// claim, then parameters. `parallelism = 0` uses all available cores.
pub fn run_suite(claims: &[ClaimId], bounds: &Bounds, parallelism: usize) -> Vec<Report> {
    let claims: BTreeSet<ClaimId> = claims.iter().copied().collect();
    let tasks: Vec<(ClaimId, Params)> = claims
        .iter()
        .flat_map(|&c| points(c, bounds).into_iter().map(move |p| (c, p)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .expect("thread pool");
    let mut reports: Vec<Report> = pool.install(|| {
        tasks
            .into_par_iter()
            .map(|(claim, params)| {
                let p = params.clone();
                Report::timed(claim, params, || evaluate(claim, &p))
            })
            .collect()
    });
    reports.sort_by(|a, b| (a.claim, &a.params).cmp(&(b.claim, &b.params)));
    reports
}

/// Re-evaluates a report from its claim and parameters.
pub fn recheck(report: &Report) -> Report {
    Report::timed(report.claim, report.params.clone(), || {
        evaluate(report.claim, &report.params)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_claim_set() {
        assert!(run_suite(&[], &Bounds::default(), 1).is_empty());
    }

    #[test]
    fn dnsquare_default_count() {
        let b = Bounds {
            n_max: Some(25),
            ..Bounds::default()
        };
        let r = run_suite(&[ClaimId::EqDnSquare], &b, 2);
        assert_eq!(r.len(), 26);
        assert!(r.iter().all(|r| r.status == Status::Pass));
        let ns: Vec<i64> = r.iter().map(|r| r.params.int("n").unwrap()).collect();
        assert_eq!(ns, (0..=25).collect::<Vec<_>>());
    }

    #[test]
    fn thm51_sampling() {
        assert_eq!(thm51_residues(3, 128, 1), (0..81).collect::<Vec<_>>());
        let s = thm51_residues(5, 128, 7);
        assert_eq!(s.len(), 128);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s, thm51_residues(5, 128, 7));
        assert!(s.iter().all(|&x| x < 625));
    }

    #[test]
    fn deterministic_order_independent_of_parallelism() {
        let b = Bounds {
            n_max: Some(3),
            m_max: Some(2),
            primes: vec![3, 5],
            ..Bounds::default()
        };
        let claims = [ClaimId::CongSun1, ClaimId::Thm11All, ClaimId::EqDoubleSum];
        let a: Vec<String> = run_suite(&claims, &b, 1)
            .iter()
            .map(|r| r.to_json_line(false))
            .collect();
        let c: Vec<String> = run_suite(&claims, &b, 4)
            .iter()
            .map(|r| r.to_json_line(false))
            .collect();
        assert_eq!(a, c);
    }

    #[test]
    fn bad_parameters_fail_with_witness() {
        let o = evaluate(
            ClaimId::CongSun1,
            &Params::new().with("p", 9i64).with("x", 1i64),
        );
        assert_eq!(o.status, Status::Fail);
        assert!(o.witness.unwrap().contains("not an odd prime"));
        let o = evaluate(ClaimId::EqDnSquare, &Params::new());
        assert!(o.witness.unwrap().contains("missing"));
        let o = evaluate(
            ClaimId::CongSun2,
            &Params::new().with("p", 5i64).with("x", 30i64),
        );
        assert_eq!(o.status, Status::Fail);
    }

    #[test]
    fn recheck_reproduces() {
        let b = Bounds {
            n_max: Some(2),
            m_max: Some(2),
            primes: vec![3],
            ..Bounds::default()
        };
        for r in run_suite(ClaimId::ALL, &b, 0) {
            let again = recheck(&r);
            assert_eq!(
                (again.status, &again.witness),
                (r.status, &r.witness),
                "{}",
                r.to_text_line(false)
            );
        }
    }
}
