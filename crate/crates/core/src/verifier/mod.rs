//! Claim registry, individual checks and the suite runner.

mod claims;
mod congruence;
mod qconj;
mod report;
mod suite;

pub use claims::{ClaimId, UnknownClaim};
pub use congruence::{
    check_binom_cong, check_congruence_sun1, check_congruence_sun2, check_sun_final, check_thm51,
    d_value_mod, residue_mod_power, s_value_mod, sun1_expected, sun1_sum, sun2_sum,
    sun_final_expected, sun_final_sum, thm51_sides, CongruenceError, OddPrime, SunFinalPoint,
};
pub use qconj::{
    check_conj_q_sun1, check_conj_q_t11, q_sun1_expected, q_sun1_sum, q_t11_expressions,
};
pub use report::{Outcome, ParamValue, Params, Report, Status, Summary};
pub use suite::{
    evaluate, points, recheck, run_suite, thm51_residues, Bounds, DEFAULT_PRIMES, DEFAULT_SEED,
    DEFAULT_THM51_SAMPLES,
};
