//! Cyclicity of the Galois group of real cyclotomic fields.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::numtheory::{euler_phi, exact_sqrt, factor_u64, unit_group_mod_pm1};

/// Which shape of `N` matched, or why none did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Branch {
    /// `N = p^a`
    PrimePower {
        p: u64,
        a: u32,
    },
    /// `N = 2 p^a`
    TwoPrimePower {
        p: u64,
        a: u32,
    },
    /// `N = p^a q^b`, `gamma = gcd(φ(p^a), φ(q^b)) = 2`
    PrimePowerPair {
        p: u64,
        a: u32,
        q: u64,
        b: u32,
        gamma: u64,
    },
    /// `N = 2 p^a q^b`, `gamma = 2`
    TwoPrimePowerPair {
        p: u64,
        a: u32,
        q: u64,
        b: u32,
        gamma: u64,
    },
    Fails {
        reason: FailReason,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FailReason {
    /// `4 | N` (this includes `N = 4`).
    DivisibleByFour,
    /// `N = 2`: no odd prime power part.
    NoOddPart,
    /// More than two distinct odd primes.
    TooManyPrimes { count: usize },
    /// Two odd prime powers whose phis share more than a factor 2.
    GammaNotTwo {
        p: u64,
        a: u32,
        q: u64,
        b: u32,
        gamma: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCVerdict {
    #[serde(rename = "N")]
    pub n: u64,
    pub satisfied: bool,
    pub branch: Branch,
}

impl ConditionCVerdict {
    /// `gcd(φ(p^a), φ(q^b))` when `N` has exactly two odd prime factors.
    pub fn gamma(&self) -> Option<u64> {
        match &self.branch {
            Branch::PrimePowerPair { gamma, .. }
            | Branch::TwoPrimePowerPair { gamma, .. }
            | Branch::Fails {
                reason: FailReason::GammaNotTwo { gamma, .. },
            } => Some(*gamma),
            _ => None,
        }
    }
}

/// Condition 𝒞, implemented as stated: odd `N` is `p^a` or `p^a q^b` with
/// `gcd(φ(p^a), φ(q^b)) = 2`; even `N` is twice such a number.
pub fn condition_c(n: u64) -> Result<ConditionCVerdict> {
    if n < 2 {
        return Err(out_of_range("N", n, ">= 2"));
    }
    let fail = |reason| ConditionCVerdict {
        n,
        satisfied: false,
        branch: Branch::Fails { reason },
    };
    if n % 4 == 0 {
        return Ok(fail(FailReason::DivisibleByFour));
    }
    let doubled = n % 2 == 0;
    let odd = if doubled { n / 2 } else { n };
    if odd == 1 {
        return Ok(fail(FailReason::NoOddPart));
    }
    let fac = factor_u64(odd);
    let branch = match fac.as_slice() {
        &[(p, a)] => {
            if doubled {
                Branch::TwoPrimePower { p, a }
            } else {
                Branch::PrimePower { p, a }
            }
        }
        &[(p, a), (q, b)] => {
            let gamma = euler_phi(p.pow(a)).gcd(&euler_phi(q.pow(b)));
            if gamma != 2 {
                return Ok(fail(FailReason::GammaNotTwo { p, a, q, b, gamma }));
            }
            if doubled {
                Branch::TwoPrimePowerPair { p, a, q, b, gamma }
            } else {
                Branch::PrimePowerPair { p, a, q, b, gamma }
            }
        }
        more => {
            return Ok(fail(FailReason::TooManyPrimes { count: more.len() }));
        }
    };
    Ok(ConditionCVerdict {
        n,
        satisfied: true,
        branch,
    })
}

/// Whether `Gal(Q(ζ_N + ζ_N^{-1}) / Q)` is cyclic, for `N >= 3` odd or
/// `N ≡ 2 (mod 4)`. Moduli divisible by 4 are refused.
pub fn real_cyclotomic_gal_cyclic(n: u64) -> Result<bool> {
    if n < 3 {
        return Err(out_of_range("N", n, ">= 3"));
    }
    if n % 4 == 0 {
        return Err(Error::UnsupportedModulus(n));
    }
    Ok(condition_c(n)?.satisfied)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaGaloisReport {
    pub d: u64,
    pub group_order: u64,
    /// From Condition 𝒞 on `d`.
    pub cyclic: bool,
    /// From the element-order scan of `(Z/2dZ)^* / {±1}`.
    pub oracle_cyclic: bool,
}

pub fn omega_galois_report(d: u64) -> Result<OmegaGaloisReport> {
    if d % 2 == 0 {
        return Err(Error::EvenIndex(d));
    }
    if d < 3 {
        return Err(out_of_range("d", d, ">= 3"));
    }
    let cyclic = condition_c(d)?.satisfied;
    let oracle = unit_group_mod_pm1(2 * d)?;
    if cyclic != oracle.is_cyclic {
        return Err(Error::InternalInconsistency(format!(
            "Condition C says {cyclic} but the unit group scan says {} for d = {d}",
            oracle.is_cyclic
        )));
    }
    Ok(OmegaGaloisReport {
        d,
        group_order: euler_phi(d) / 2,
        cyclic,
        oracle_cyclic: oracle.is_cyclic,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuarticClass {
    C4,
    V4,
    D4,
}

/// Galois group of an irreducible `x^4 + p x^2 + q`: `V4` if `q` is a
/// square, `C4` if `q (p^2 - 4q)` is a square, `D4` otherwise.
pub fn even_quartic_class(p: &BigInt, q: &BigInt) -> QuarticClass {
    if exact_sqrt(q).is_some() {
        QuarticClass::V4
    } else if exact_sqrt(&(q * (p * p - BigInt::from(4) * q))).is_some() {
        QuarticClass::C4
    } else {
        QuarticClass::D4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_c_examples() {
        let c = |n| condition_c(n).unwrap();
        assert_eq!(c(9).branch, Branch::PrimePower { p: 3, a: 2 });
        assert!(c(9).satisfied);
        assert_eq!(
            c(15).branch,
            Branch::PrimePowerPair {
                p: 3,
                a: 1,
                q: 5,
                b: 1,
                gamma: 2
            }
        );
        assert!(!c(63).satisfied);
        assert_eq!(c(63).gamma(), Some(6));
        assert_eq!(
            c(105).branch,
            Branch::Fails {
                reason: FailReason::TooManyPrimes { count: 3 }
            }
        );
        assert_eq!(c(11).branch, Branch::PrimePower { p: 11, a: 1 });
        assert_eq!(c(22).branch, Branch::TwoPrimePower { p: 11, a: 1 });
        assert!(!c(2).satisfied);
        assert!(!c(4).satisfied);
        assert!(!c(16).satisfied);
        assert!(matches!(
            c(42).branch,
            Branch::TwoPrimePowerPair { p: 3, q: 7, .. }
        ));
        assert!(condition_c(1).is_err());
    }

    #[test]
    fn gal_cyclic_examples() {
        assert!(real_cyclotomic_gal_cyclic(15).unwrap());
        assert!(!real_cyclotomic_gal_cyclic(63).unwrap());
        assert!(real_cyclotomic_gal_cyclic(22).unwrap());
        assert_eq!(
            real_cyclotomic_gal_cyclic(16),
            Err(Error::UnsupportedModulus(16))
        );
    }

    #[test]
    fn omega_report_examples() {
        let r = omega_galois_report(9).unwrap();
        assert_eq!((r.group_order, r.cyclic, r.oracle_cyclic), (3, true, true));
        let r = omega_galois_report(21).unwrap();
        assert_eq!((r.group_order, r.cyclic), (6, true));
        let r = omega_galois_report(63).unwrap();
        assert_eq!(
            (r.group_order, r.cyclic, r.oracle_cyclic),
            (18, false, false)
        );
        assert_eq!(omega_galois_report(10), Err(Error::EvenIndex(10)));
    }

    #[test]
    fn quartic_examples() {
        let b = |v: i64| BigInt::from(v);
        assert_eq!(even_quartic_class(&b(3), &b(1)), QuarticClass::V4);
        assert_eq!(even_quartic_class(&b(-4), &b(2)), QuarticClass::C4);
        assert_eq!(even_quartic_class(&b(0), &b(-2)), QuarticClass::D4);
        // Lucas L_4 = x^4 + 4x^2 + 2
        assert_eq!(even_quartic_class(&b(4), &b(2)), QuarticClass::C4);
    }

    #[test]
    fn divisor_closure() {
        for n in 2..=10_000u64 {
            if !condition_c(n).unwrap().satisfied {
                continue;
            }
            // d = 2 has no odd prime power part and fails by definition
            for d in crate::numtheory::divisors(n)
                .into_iter()
                .filter(|&d| d >= 3)
            {
                assert!(condition_c(d).unwrap().satisfied, "N = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn parity_bridge() {
        for m in (3..=10_000u64).step_by(2) {
            assert_eq!(
                condition_c(m).unwrap().satisfied,
                condition_c(2 * m).unwrap().satisfied,
                "m = {m}"
            );
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(condition_c(15).unwrap()).unwrap();
        assert_eq!(v["N"], 15);
        assert_eq!(v["branch"]["tag"], "PrimePowerPair");
        assert_eq!(v["branch"]["gamma"], 2);
        let v = serde_json::to_value(condition_c(63).unwrap()).unwrap();
        assert_eq!(v["branch"]["reason"]["kind"], "GammaNotTwo");
    }
}
