use std::fmt;
use std::str::FromStr;

use thiserror::Error;

macro_rules! claims {
    ($($variant:ident => $name:literal, $conj:literal, $desc:literal;)*) => {
        /// One tag per checkable statement. Declaration order is report order.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }

            /// Conjectural statements pass as "conjecture-consistent", never as proved.
            pub fn is_conjecture(self) -> bool {
                match self {
                    $(ClaimId::$variant => $conj,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $desc,)*
                }
            }
        }
    };
}

claims! {
    EqDnSquare => "EQ_DNSQUARE", false, "d_n(x)^2 equals the single sum over C(n+k,2k){x,k}{x+k,k}4^k";
    EqSnSquare => "EQ_SNSQUARE", false, "s_n(x)^2 equals the nested double sum";
    EqDoubleSum => "EQ_DOUBLESUM", false, "A_n = B_n for the coefficient double sums";
    EqSymmetry => "EQ_SYMMETRY", false, "d_n(-x-1) = (-1)^n d_n(x)";
    EqSAlt => "EQ_SALT", false, "s_n(x) = sum C(n,k){x,k}{x+n-k,n}";
    EqSimple => "EQ_SIMPLE", false, "sum_{m=k}^{n-1}(2m+1)C(m+k,2k) = n(n-k)/(k+1) C(n+k,2k)";
    EqXx1 => "EQ_XX1", false, "x(x+1)/(2n^2) sum (2m+1)d_m^2 as a single sum of integral terms";
    EqDoubleSumTwo => "EQ_DOUBLESUM_TWO", false, "(1/n^2) sum (2m+1)s_m^2 as a double sum of integral terms";
    RecZeil1 => "REC_ZEIL1", false, "(n+2)d_{n+2} = (2x+1)d_{n+1} + (n+1)d_n";
    RecZeilSquare => "REC_ZEIL_SQUARE", false, "squared d_n recurrences and the order-3 recurrence for d_n^2 and the single sum";
    RecOrder3 => "REC_ORDER3", false, "order-3 recurrences for A_n and B_n";
    RecOrder2 => "REC_ORDER2", false, "shared order-2 recurrence for A_n and B_n";
    Thm11All => "THM11_ALL", false, "the six weighted power sums are integers on the integer grid";
    Thm11Iv => "THM11_IV", false, "the six weighted power sums have integral binomial-basis coefficients";
    Thm12 => "THM12", false, "the two binomial quotients are integers";
    Thm21A => "THM21_A", false, "first q-quotient is a polynomial with non-negative coefficients";
    Thm21B => "THM21_B", false, "second q-quotient is a polynomial with non-negative coefficients";
    ProfileA => "PROFILE_A", false, "closed-form cyclotomic exponents of the first q-quotient match its factorization";
    ProfileB => "PROFILE_B", false, "closed-form cyclotomic exponents of the second q-quotient match its factorization";
    Lem34 => "LEM34", false, "coefficients of sum eps^k(2k+1)S_k^m are multiples of n";
    BinomCong => "BINOM_CONG", false, "C(p-1,k)C(p+k,k) = (-1)^k mod p^2";
    CongSun1 => "CONG_SUN1", false, "sum_{k<p}(2k+1)d_k(x)^2 mod p^2 three-case congruence";
    CongSun2 => "CONG_SUN2", false, "sum_{k<p}(2k+1)s_k(x)^2 = 0 mod p^2";
    Thm51 => "THM51", false, "sum_{k<p}(2k+1)s_k(x)^2 congruence mod p^4";
    ConjSunFinal => "CONJ_SUNFINAL", true, "sum_{k<p}(2k+1)s_k(x)^2 mod p^4 at x = -1/2, -1/3, -1/4, -1/6";
    ConjQSun1 => "CONJ_Q_SUN1", true, "q-analogue of the d_k^2 congruence modulo [p]^2";
    ConjQT11 => "CONJ_Q_T11", true, "q-analogues of the first three sums are non-negative Laurent polynomials";
    ConjMixedDs => "CONJ_MIXED_DS", true, "(1/n) sum (+-1)^k(2k+1)d_k^m s_k^m is integer-valued";
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim `{0}`")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim();
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(key))
            .ok_or_else(|| UnknownClaim(key.to_string()))
    }
}
