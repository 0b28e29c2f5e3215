//! Cyclotomic polynomials `Φ_N`, real cyclotomic polynomials `ψ_N` (minimal
//! polynomial of `ζ_N + ζ_N^{-1}`), and the factors `Ω_d` of `w_n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::intpoly::IntPoly;
use crate::numtheory::{divisors, euler_phi, mobius};
use crate::sequences::{term, SeqKind, SequenceTable};

/// Largest index accepted by [`cyclotomic_poly`] and [`real_cyclotomic_poly`].
pub const MAX_CYCLOTOMIC_INDEX: u64 = 100_000;

/// `Φ_N` from the Möbius product `prod_{d | N} (x^d - 1)^{μ(N/d)}`.
///
/// All factors with `μ = +1` are multiplied in first, then the `μ = -1`
/// factors are divided out exactly, so every intermediate is a polynomial.
pub fn cyclotomic_poly(n: u64) -> Result<IntPoly> {
    if n == 0 || n > MAX_CYCLOTOMIC_INDEX {
        return Err(out_of_range("N", n, format!("1..={MAX_CYCLOTOMIC_INDEX}")));
    }
    let divs = divisors(n);
    let mut acc = IntPoly::one();
    let mut denominators = Vec::new();
    for &d in &divs {
        match mobius(n / d) {
            1 => acc = acc.mul_xd_minus_one(d as usize),
            -1 => denominators.push(d as usize),
            _ => {}
        }
    }
    for d in denominators {
        acc = acc.div_xd_minus_one(d)?;
    }
    Ok(acc)
}

/// `ψ_N` for `N >= 3`, the monic minimal polynomial of `ζ_N + ζ_N^{-1}`.
///
/// Writing the palindromic `Φ_N(x) / x^m = a_m + Σ_k a_{m+k} (x^k + x^{-k})`
/// with `m = φ(N)/2` and using `x^k + x^{-k} = v_k(x + 1/x)` gives
/// `ψ_N(y) = a_m + Σ_k a_{m+k} v_k(y)`.
pub fn real_cyclotomic_poly(n: u64) -> Result<IntPoly> {
    if n < 3 {
        return Err(out_of_range("N", n, ">= 3"));
    }
    let phi = cyclotomic_poly(n)?;
    let m = phi.degree().expect("nonzero") / 2;
    let mut vieta = SequenceTable::new(SeqKind::VietaLucas);
    let mut psi = IntPoly::constant(phi.coeff(m));
    for k in 1..=m {
        let a = phi.coeff(m + k);
        psi = &psi + &vieta.get(k as u64)?.scale(&a);
    }
    Ok(psi)
}

/// `Ω_d` together with its index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaFactor {
    pub d: u64,
    pub poly: IntPoly,
}

impl OmegaFactor {
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }
}

/// `Ω_d(x) = ψ_{2d}(x - 2)` for odd `d >= 3`; its roots are `ρ + ρ^{-1} + 2`
/// for the primitive `2d`-th roots of unity `ρ`.
pub fn omega(d: u64) -> Result<OmegaFactor> {
    if d % 2 == 0 {
        return Err(Error::EvenIndex(d));
    }
    if d < 3 {
        return Err(out_of_range("d", d, ">= 3"));
    }
    if 2 * d > MAX_CYCLOTOMIC_INDEX {
        return Err(out_of_range(
            "d",
            d,
            format!("<= {}", MAX_CYCLOTOMIC_INDEX / 2),
        ));
    }
    let psi = real_cyclotomic_poly(2 * d)?;
    let poly = psi.taylor_shift(&BigInt::from(-2));
    debug_assert_eq!(poly.degree(), Some(euler_phi(d) as usize / 2));
    Ok(OmegaFactor { d, poly })
}

/// Verified factorization `w_n = prod_{d | 2n-1, d > 1} Ω_d`.
///
/// JSON form: `{"n": n, "modulus": 2n-1, "factors": [{"d", "degree", "coeffs"}]}`
/// with divisors ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WFactorizationJson", try_from = "WFactorizationJson")]
pub struct WFactorization {
    pub n: u64,
    pub factors: BTreeMap<u64, OmegaFactor>,
}

impl WFactorization {
    pub fn modulus(&self) -> u64 {
        2 * self.n - 1
    }

    pub fn product(&self) -> IntPoly {
        self.factors.values().map(|f| f.poly.clone()).product()
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    d: u64,
    degree: usize,
    coeffs: IntPoly,
}

#[derive(Serialize, Deserialize)]
struct WFactorizationJson {
    n: u64,
    modulus: u64,
    factors: Vec<FactorJson>,
}

impl From<WFactorization> for WFactorizationJson {
    fn from(w: WFactorization) -> Self {
        WFactorizationJson {
            n: w.n,
            modulus: w.modulus(),
            factors: w
                .factors
                .into_values()
                .map(|f| FactorJson {
                    d: f.d,
                    degree: f.degree(),
                    coeffs: f.poly,
                })
                .collect(),
        }
    }
}

impl TryFrom<WFactorizationJson> for WFactorization {
    type Error = String;
    fn try_from(j: WFactorizationJson) -> std::result::Result<Self, String> {
        if j.n < 2 || j.modulus != 2 * j.n - 1 {
            return Err(format!("modulus {} does not match n = {}", j.modulus, j.n));
        }
        let mut factors = BTreeMap::new();
        for f in j.factors {
            if f.coeffs.degree() != Some(f.degree) {
                return Err(format!("factor d = {} has inconsistent degree", f.d));
            }
            factors.insert(
                f.d,
                OmegaFactor {
                    d: f.d,
                    poly: f.coeffs,
                },
            );
        }
        Ok(WFactorization { n: j.n, factors })
    }
}

/// Builds every `Ω_d` for `d | 2n - 1`, `d > 1`, and checks their product
/// against `w_n` from the recurrence.
pub fn factor_w(n: u64) -> Result<WFactorization> {
    let wn = term(SeqKind::WSmall, n)?;
    factor_w_against(n, &wn)
}

/// [`factor_w`] with a caller-supplied `w_n` (e.g. from a [`SequenceTable`]).
pub fn factor_w_against(n: u64, wn: &IntPoly) -> Result<WFactorization> {
    if n < 2 {
        return Err(out_of_range("n", n, ">= 2"));
    }
    let modulus = 2 * n - 1;
    let mut factors = BTreeMap::new();
    for d in divisors(modulus).into_iter().filter(|&d| d > 1) {
        factors.insert(d, omega(d)?);
    }
    let fac = WFactorization { n, factors };
    if fac.product() != *wn {
        return Err(Error::ProductMismatch(n));
    }
    Ok(fac)
}

/// `Ω_{2n-1}`, the factor of `w_n` that divides no earlier term.
pub fn primitive_divisor(n: u64) -> Result<OmegaFactor> {
    if n < 2 {
        return Err(out_of_range("n", n, ">= 2"));
    }
    omega(2 * n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_poly(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic_poly(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(2).unwrap(), p(&[1, 1]));
        assert!(cyclotomic_poly(0).is_err());
        assert!(cyclotomic_poly(MAX_CYCLOTOMIC_INDEX + 1).is_err());
        // first coefficient of magnitude 2
        assert_eq!(cyclotomic_poly(105).unwrap().coeff(7), BigInt::from(-2));
    }

    #[test]
    fn real_cyclotomic_examples() {
        assert_eq!(real_cyclotomic_poly(11).unwrap(), p(&[1, 3, -3, -4, 1, 1]));
        assert_eq!(real_cyclotomic_poly(5).unwrap(), p(&[-1, 1, 1]));
        assert_eq!(real_cyclotomic_poly(14).unwrap(), p(&[1, -2, -1, 1]));
        assert_eq!(real_cyclotomic_poly(9).unwrap(), p(&[1, -3, 0, 1]));
        assert_eq!(real_cyclotomic_poly(16).unwrap(), p(&[2, 0, -4, 0, 1]));
        assert!(real_cyclotomic_poly(2).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(3).unwrap().poly, p(&[-3, 1]));
        assert_eq!(omega(7).unwrap().poly, p(&[-7, 14, -7, 1]));
        assert_eq!(omega(9).unwrap().poly, p(&[-3, 9, -6, 1]));
        assert_eq!(omega(4), Err(Error::EvenIndex(4)));
        assert!(omega(1).is_err());
    }

    #[test]
    fn factor_w_examples() {
        let f = factor_w(5).unwrap();
        assert_eq!(f.factors.keys().copied().collect::<Vec<_>>(), vec![3, 9]);
        assert_eq!(f.factors[&3].poly, p(&[-3, 1]));
        assert_eq!(f.factors[&9].poly, p(&[-3, 9, -6, 1]));
        assert_eq!(f.product(), p(&[9, -30, 27, -9, 1]));

        let f = factor_w(4).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[&7].poly, p(&[-7, 14, -7, 1]));

        let f = factor_w(2).unwrap();
        assert_eq!(f.factors[&3].poly, p(&[-3, 1]));
        assert!(factor_w(1).is_err());
    }

    #[test]
    fn factor_w_detects_mismatch() {
        let wrong = p(&[9, -30, 27, -9, 2]);
        assert_eq!(factor_w_against(5, &wrong), Err(Error::ProductMismatch(5)));
    }

    #[test]
    fn primitive_divisor_examples() {
        let om = primitive_divisor(5).unwrap();
        assert_eq!(om.poly, p(&[-3, 9, -6, 1]));
        for m in 2..5 {
            let wm = term(SeqKind::WSmall, m).unwrap();
            assert_eq!(wm.divide_exact(&om.poly), Err(Error::NotDivisible));
        }
        assert_eq!(primitive_divisor(2).unwrap().poly, p(&[-3, 1]));
        assert_eq!(
            primitive_divisor(4).unwrap().poly,
            term(SeqKind::WSmall, 4).unwrap()
        );
    }

    #[test]
    fn factorization_json() {
        let f = factor_w(5).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"n":5,"modulus":9,"factors":[{"d":3,"degree":1,"coeffs":["-3","1"]},{"d":9,"degree":3,"coeffs":["-3","9","-6","1"]}]}"#
        );
        let back: WFactorization = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(
            serde_json::from_str::<WFactorization>(r#"{"n":5,"modulus":7,"factors":[]}"#).is_err()
        );
    }

    #[test]
    fn cyclotomic_product_identity() {
        for n in 1..=500u64 {
            let prod: IntPoly = divisors(n)
                .into_iter()
                .map(|d| cyclotomic_poly(d).unwrap())
                .product();
            let mut expect = vec![BigInt::from(0); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::from(1);
            assert_eq!(prod, IntPoly::new(expect), "N = {n}");
        }
    }

    /// `Φ_N(x) = x^m ψ_N(x + 1/x)`, expanded as `Σ c_k (x^2 + 1)^k x^(m - k)`.
    #[test]
    fn psi_identity() {
        let x2p1 = p(&[1, 0, 1]);
        for n in 3..=300u64 {
            let psi = real_cyclotomic_poly(n).unwrap();
            let m = psi.degree().unwrap();
            assert_eq!(m as u64, euler_phi(n) / 2);
            let mut acc = IntPoly::zero();
            let mut pw = IntPoly::one();
            for (k, c) in psi.coeffs().iter().enumerate() {
                acc = &acc + &(&pw * &IntPoly::monomial(c.clone(), m - k));
                pw = &pw * &x2p1;
            }
            assert_eq!(acc, cyclotomic_poly(n).unwrap(), "N = {n}");
        }
    }

    #[test]
    fn degree_ledger() {
        for n in 2..=400u64 {
            let total: u64 = divisors(2 * n - 1)
                .into_iter()
                .filter(|&d| d > 1)
                .map(|d| euler_phi(d) / 2)
                .sum();
            assert_eq!(total, n - 1);
        }
    }

    #[test]
    fn omega_eisenstein_at_prime_index() {
        for d in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            assert!(crate::sequences::eisenstein_check(
                &omega(d).unwrap().poly,
                d
            ));
        }
    }
}
