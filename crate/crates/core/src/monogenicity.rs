//! Monogenicity checks.
//!
//! Two independent routes are offered: Dedekind's criterion at every prime
//! whose square divides the polynomial discriminant, and a direct comparison
//! of the polynomial discriminant with the closed-form discriminant of the
//! real cyclotomic field it generates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::omega;
use crate::error::{out_of_range, Error, Result};
use crate::fppoly::{self, gcd_mod_p, FpPoly, MAX_MODULUS};
use crate::intpoly::IntPoly;
use crate::numtheory::{euler_phi, exact_sqrt, factor_int, factor_u64, IntFactorization};

/// Outcome of Dedekind's criterion at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindOutcome {
    pub p: u64,
    pub passed: bool,
    /// Product of the distinct irreducible factors of `f mod p`.
    pub g_bar: FpPoly,
    /// `(f mod p) / g_bar`.
    pub h_bar: FpPoly,
    /// `((g h - f) / p) mod p` for monic lifts `g`, `h`.
    pub f_bar: FpPoly,
    /// Degree of `gcd(f_bar, g_bar, h_bar)`; `None` when that gcd is zero.
    pub gcd_degree: Option<usize>,
}

/// Dedekind's criterion: `p` does not divide `[Z_K : Z[θ]]` iff
/// `gcd(F̄, ḡ, h̄) = 1`.
pub fn dedekind_at_prime(f: &IntPoly, p: u64) -> Result<DedekindOutcome> {
    dedekind_at_prime_seeded(f, p, fppoly::DEFAULT_SEED)
}

pub fn dedekind_at_prime_seeded(f: &IntPoly, p: u64, seed: u64) -> Result<DedekindOutcome> {
    if p >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p.to_string()));
    }
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let fbar = f.reduce_mod(p);
    let factors = fppoly::factor_mod_p_seeded(&fbar, seed)?;
    let mut g_bar = FpPoly::one(p);
    for (g, _) in &factors {
        g_bar = g_bar.mul(g)?;
    }
    let h_bar = fbar.div_exact(&g_bar)?;
    let lift = |q: &FpPoly| IntPoly::new(q.coeffs().iter().map(|&c| BigInt::from(c)).collect());
    let gh_minus_f = &(&lift(&g_bar) * &lift(&h_bar)) - f;
    let big_f = gh_minus_f
        .div_scalar_exact(&BigInt::from(p))
        .map_err(|_| Error::InternalInconsistency("g*h - f not divisible by p".into()))?;
    let f_bar = big_f.reduce_mod(p);
    let common = gcd_mod_p(&gcd_mod_p(&f_bar, &g_bar)?, &h_bar)?;
    Ok(DedekindOutcome {
        p,
        passed: common.is_one(),
        gcd_degree: common.degree(),
        g_bar,
        h_bar,
        f_bar,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Monogenic,
    NotMonogenic,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicReport {
    pub poly: IntPoly,
    pub disc: BigInt,
    /// Factorization of `|disc|`; `None` when it could not be completed.
    pub disc_factorization: Option<IntFactorization>,
    pub per_prime: Vec<DedekindOutcome>,
    pub verdict: Verdict,
}

/// JSON form of a [`MonogenicReport`]: the discriminant as a decimal string,
/// its factorization as `[[p, e], ...]` and one `{"p", "passed"}` per prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonogenicSummary {
    pub poly: IntPoly,
    #[serde(with = "crate::intpoly::bigint_string")]
    pub disc: BigInt,
    pub factorization: Option<Vec<(String, u32)>>,
    pub per_prime: Vec<PrimeOutcome>,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOutcome {
    pub p: u64,
    pub passed: bool,
}

impl MonogenicReport {
    pub fn summary(&self) -> MonogenicSummary {
        MonogenicSummary {
            poly: self.poly.clone(),
            disc: self.disc.clone(),
            factorization: self
                .disc_factorization
                .as_ref()
                .map(|f| f.pairs.iter().map(|(p, e)| (p.to_string(), *e)).collect()),
            per_prime: self
                .per_prime
                .iter()
                .map(|o| PrimeOutcome {
                    p: o.p,
                    passed: o.passed,
                })
                .collect(),
            verdict: self.verdict,
        }
    }
}

impl Serialize for MonogenicReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.summary().serialize(s)
    }
}

/// Dedekind's criterion at every `p` with `p^2 | Δ(f)`. A squarefree
/// discriminant is monogenic without further work.
///
/// `f` must be monic and irreducible; irreducibility is not re-checked.
pub fn monogenic_verdict(f: &IntPoly) -> Result<MonogenicReport> {
    monogenic_verdict_seeded(f, fppoly::DEFAULT_SEED)
}

pub fn monogenic_verdict_seeded(f: &IntPoly, seed: u64) -> Result<MonogenicReport> {
    let disc = f.discriminant()?;
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let fac = match factor_int(&disc.abs()) {
        Ok(fac) => fac,
        Err(Error::FactorizationTooHard(_)) => {
            return Ok(MonogenicReport {
                poly: f.clone(),
                disc,
                disc_factorization: None,
                per_prime: Vec::new(),
                verdict: Verdict::Unknown,
            })
        }
        Err(e) => return Err(e),
    };
    let mut per_prime = Vec::new();
    for (p, e) in &fac.pairs {
        if *e < 2 {
            continue;
        }
        let p = p
            .to_u64()
            .filter(|&p| p < MAX_MODULUS)
            .ok_or_else(|| Error::ModulusTooLarge(p.to_string()))?;
        per_prime.push(dedekind_at_prime_seeded(f, p, seed)?);
    }
    let verdict = if per_prime.iter().all(|o| o.passed) {
        Verdict::Monogenic
    } else {
        Verdict::NotMonogenic
    };
    Ok(MonogenicReport {
        poly: f.clone(),
        disc,
        disc_factorization: Some(fac),
        per_prime,
        verdict,
    })
}

/// Discriminant of the maximal real subfield `Q(ζ_N + ζ_N^{-1})`, `N >= 3`.
///
/// * `N = p^k` or `2p^k`, `p` odd: `p^((p^(k-1)(pk - k - 1) - 1) / 2)`
/// * `N = 2^k`, `k >= 3`: `2^(2^(k-2)(k-1) - 1)`
/// * otherwise: `N^(φ(N)/2) / prod_{p | N} p^(φ(N) / (2(p - 1)))`
///
/// `N` in {3, 4, 6} gives the rational field, discriminant 1.
pub fn field_disc_real_cyclotomic(n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(out_of_range("N", n, ">= 3"));
    }
    if n > crate::cyclotomic::MAX_CYCLOTOMIC_INDEX {
        return Err(out_of_range(
            "N",
            n,
            format!("<= {}", crate::cyclotomic::MAX_CYCLOTOMIC_INDEX),
        ));
    }
    if matches!(n, 3 | 4 | 6) {
        return Ok(BigInt::one());
    }
    let fac = factor_u64(n);
    let odd: Vec<(u64, u32)> = fac.iter().copied().filter(|&(p, _)| p != 2).collect();
    let two_exp = fac.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e);

    if odd.len() == 1 && two_exp <= 1 {
        let (p, k) = odd[0];
        let k = k as u64;
        let exp = (p.pow(k as u32 - 1) * (p * k - k - 1) - 1) / 2;
        return Ok(num_traits::pow(BigInt::from(p), exp as usize));
    }
    if odd.is_empty() {
        let k = two_exp as u64;
        let exp = (1u64 << (k - 2)) * (k - 1) - 1;
        return Ok(num_traits::pow(BigInt::from(2), exp as usize));
    }
    let phi = euler_phi(n);
    let num = num_traits::pow(BigInt::from(n), (phi / 2) as usize);
    let mut den = BigInt::one();
    for &(p, _) in &fac {
        let e = phi / (2 * (p - 1));
        debug_assert_eq!(phi % (2 * (p - 1)), 0);
        den *= num_traits::pow(BigInt::from(p), e as usize);
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "field discriminant quotient for N = {n} is not integral"
        )));
    }
    Ok(q)
}

/// `Δ(Ω_d) == Δ(Q(ζ_{2d} + ζ_{2d}^{-1}))` for odd `d >= 3`.
pub fn monogenic_by_disc_match(d: u64) -> Result<bool> {
    let om = omega(d)?;
    Ok(om.poly.discriminant()? == field_disc_real_cyclotomic(2 * d)?)
}

/// `|Δ(f)| / |Δ(K)|`, the squared index `[Z_K : Z[θ]]^2`.
pub fn index_square(f: &IntPoly, field_disc: &BigInt) -> Result<BigInt> {
    if field_disc.is_zero() {
        return Err(Error::NotASquareQuotient("division by zero".into()));
    }
    let disc = f.discriminant()?.abs();
    let (q, r) = disc.div_rem(&field_disc.abs());
    if !r.is_zero() || exact_sqrt(&q).is_none() {
        return Err(Error::NotASquareQuotient(format!(
            "{disc} / {}",
            field_disc.abs()
        )));
    }
    Ok(q)
}

/// For two monogenic cyclic polynomials of the same degree, equivalence
/// (same stem field) is equality of discriminants. Cyclicity and
/// monogenicity are the caller's responsibility.
pub fn equivalent(f: &IntPoly, g: &IntPoly) -> Result<bool> {
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
    if df != dg {
        return Err(Error::DegreeMismatch(df, dg));
    }
    Ok(f.discriminant()? == g.discriminant()?)
}
