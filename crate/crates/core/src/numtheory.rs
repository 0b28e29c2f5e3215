//! Integer utilities: deterministic primality below 2^64, factorization,
//! Euler phi / divisors / Möbius, and a brute-force scan of the group
//! `(Z/NZ)^* / {±1}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};

/// Default upper bound for [`unit_group_mod_pm1`].
pub const UNIT_GROUP_BOUND: u64 = 1_000_000;

const TRIAL_BOUND: u64 = 1 << 16;

// Deterministic for every n < 3.3 * 10^24, which covers u64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Miller–Rabin with a fixed witness set, exact on the whole `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality for nonnegative integers below `2^64`; larger inputs are refused.
pub fn is_prime(n: &BigInt) -> Result<bool> {
    if n.is_negative() {
        return Err(out_of_range("n", n, ">= 0"));
    }
    match n.to_u64() {
        Some(v) => Ok(is_prime_u64(v)),
        None => Err(out_of_range("n", n, "< 2^64")),
    }
}

/// Prime factorization with strictly increasing primes. Serialized as
/// `[["p", e], ...]` with primes as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(String, u32)>", try_from = "Vec<(String, u32)>")]
pub struct IntFactorization {
    pub pairs: Vec<(BigInt, u32)>,
}

impl From<IntFactorization> for Vec<(String, u32)> {
    fn from(f: IntFactorization) -> Self {
        f.pairs
            .into_iter()
            .map(|(p, e)| (p.to_string(), e))
            .collect()
    }
}

impl TryFrom<Vec<(String, u32)>> for IntFactorization {
    type Error = num_bigint::ParseBigIntError;
    fn try_from(v: Vec<(String, u32)>) -> std::result::Result<Self, Self::Error> {
        let pairs = v
            .into_iter()
            .map(|(p, e)| p.parse().map(|p| (p, e)))
            .collect::<std::result::Result<_, _>>()?;
        Ok(IntFactorization { pairs })
    }
}

impl IntFactorization {
    pub fn product(&self) -> BigInt {
        self.pairs
            .iter()
            .map(|(p, e)| num_traits::pow(p.clone(), *e as usize))
            .product()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.pairs.iter().map(|(p, _)| p)
    }

    /// Factorization of a `u64`-sized input as machine integers.
    pub fn to_u64_pairs(&self) -> Option<Vec<(u64, u32)>> {
        self.pairs
            .iter()
            .map(|(p, e)| p.to_u64().map(|p| (p, *e)))
            .collect()
    }
}

fn pollard_brent(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mulmod(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let m = 128u64;
    let mut g;
    let mut x;
    let mut ys;
    loop {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        loop {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mulmod(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += m;
            if k >= r || g != 1 {
                break;
            }
        }
        r *= 2;
        if g != 1 || r > (1 << 40) {
            break;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g != 1 {
                break;
            }
        }
    }
    (g != n && g != 1).then_some(g)
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    for c in 1.. {
        if let Some(d) = pollard_brent(n, c) {
            factor_u64_into(d, out);
            factor_u64_into(n / d, out);
            return;
        }
    }
}

/// Factorization of a positive machine integer.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factor_u64 requires n >= 1");
    let mut primes = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5] {
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
    }
    let mut p = 7u64;
    while p * p <= m && p < 1 << 12 {
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
        p += 2;
    }
    factor_u64_into(m, &mut primes);
    primes.sort_unstable();
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match pairs.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => pairs.push((q, 1)),
        }
    }
    pairs
}

/// Complete factorization of `n >= 1`: trial division, then Brent's rho on
/// the cofactor. A cofactor beyond 64 bits that is not a perfect power of
/// a 64-bit integer is reported as `FactorizationTooHard`.
pub fn factor_int(n: &BigInt) -> Result<IntFactorization> {
    if !n.is_positive() {
        return Err(out_of_range("n", n, ">= 1"));
    }
    let mut m = n.clone();
    let mut pairs: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            pairs.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let rest = factor_cofactor(&m).ok_or_else(|| Error::FactorizationTooHard(n.to_string()))?;
        for (q, e) in rest {
            pairs.push((BigInt::from(q), e));
        }
    }
    pairs.sort();
    let mut merged: Vec<(BigInt, u32)> = Vec::new();
    for (q, e) in pairs {
        match merged.last_mut() {
            Some((last, le)) if *last == q => *le += e,
            _ => merged.push((q, e)),
        }
    }
    Ok(IntFactorization { pairs: merged })
}

fn factor_cofactor(m: &BigInt) -> Option<Vec<(u64, u32)>> {
    if let Some(v) = m.to_u64() {
        return Some(factor_u64(v));
    }
    let bits = m.bits() as u32;
    for k in (2..=bits).rev() {
        let r = m.nth_root(k);
        if r.bits() > 64 {
            continue;
        }
        if num_traits::pow(r.clone(), k as usize) == *m {
            let base = factor_u64(r.to_u64()?);
            return Some(base.into_iter().map(|(p, e)| (p, e * k)).collect());
        }
    }
    // every prime factor must fit in a u64 to be certified, so split
    let mut budget = RHO_STEP_BUDGET;
    let d = (1..=8u64).find_map(|c| match pollard_brent_big(m, c, &mut budget) {
        Rho::Split(d) => Some(Some(d)),
        Rho::Cycle => None,
        Rho::OutOfSteps => Some(None),
    })??;
    let mut out = factor_cofactor(&d)?;
    out.extend(factor_cofactor(&(m / &d))?);
    Some(out)
}

/// Shared across retries; enough to find factors below about 2^40.
const RHO_STEP_BUDGET: u64 = 1 << 20;

enum Rho {
    Split(BigInt),
    /// The sequence closed on `n` itself; retry with another constant.
    Cycle,
    OutOfSteps,
}

fn pollard_brent_big(n: &BigInt, c: u64, budget: &mut u64) -> Rho {
    let c = BigInt::from(c);
    let f = |x: &BigInt| (x * x + &c) % n;
    let mut y = BigInt::from(2);
    let mut x;
    let mut ys;
    let mut q = BigInt::one();
    let mut g;
    let mut r = 1u64;
    let m = 128u64;
    loop {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        loop {
            ys = y.clone();
            let chunk = m.min(r - k);
            for _ in 0..chunk {
                y = f(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += m;
            *budget = budget.saturating_sub(2 * chunk);
            if k >= r || !g.is_one() {
                break;
            }
        }
        r *= 2;
        if !g.is_one() {
            break;
        }
        if *budget == 0 {
            return Rho::OutOfSteps;
        }
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if g == *n {
        Rho::Cycle
    } else {
        Rho::Split(g)
    }
}

/// Euler phi, ascending divisors and Möbius value of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiDivisorsMobius {
    pub phi: u64,
    pub divisors: Vec<u64>,
    pub mobius: i8,
}

pub fn phi_divisors_mobius(n: u64) -> PhiDivisorsMobius {
    assert!(n >= 1, "phi_divisors_mobius requires n >= 1");
    let fac = factor_u64(n);
    PhiDivisorsMobius {
        phi: phi_from(&fac),
        divisors: divisors_from(&fac),
        mobius: mobius_from(&fac),
    }
}

pub fn euler_phi(n: u64) -> u64 {
    phi_from(&factor_u64(n))
}

pub fn divisors(n: u64) -> Vec<u64> {
    divisors_from(&factor_u64(n))
}

pub fn mobius(n: u64) -> i8 {
    mobius_from(&factor_u64(n))
}

fn phi_from(fac: &[(u64, u32)]) -> u64 {
    fac.iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product()
}

fn mobius_from(fac: &[(u64, u32)]) -> i8 {
    if fac.iter().any(|&(_, e)| e > 1) {
        0
    } else if fac.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn divisors_from(fac: &[(u64, u32)]) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in fac {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Result of scanning `(Z/NZ)^* / {±1}` element by element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitGroupReport {
    pub modulus: u64,
    pub group_order: u64,
    pub max_element_order: u64,
    pub is_cyclic: bool,
    pub witness: u64,
}

/// Brute-force structure scan of `(Z/NZ)^* / {±1}` for `3 <= N <= bound`.
///
/// The order of a class `u{±1}` is the least `k` with `u^k ≡ ±1 (mod N)`.
/// Orders are found by walking powers: a walk from `u` of length `k` also
/// yields the order `k / gcd(j, k)` of every power `u^j`, so each class is
/// assigned without any knowledge of the group structure.
pub fn unit_group_mod_pm1(n: u64) -> Result<UnitGroupReport> {
    unit_group_mod_pm1_bounded(n, UNIT_GROUP_BOUND)
}

pub fn unit_group_mod_pm1_bounded(n: u64, bound: u64) -> Result<UnitGroupReport> {
    if n < 3 {
        return Err(out_of_range("N", n, ">= 3"));
    }
    if n > bound {
        return Err(out_of_range("N", n, format!("<= {bound}")));
    }
    // order[u] for the representative u <= N/2 of each class; 0 = unassigned
    let mut order = vec![0u64; n as usize / 2 + 1];
    let rep = |u: u64| if u > n / 2 { n - u } else { u };
    let group_order = euler_phi(n) / 2;
    let mut best = (0u64, 1u64);
    let mut powers: Vec<u64> = Vec::new();
    for u in 1..=n / 2 {
        if gcd_u64(u, n) != 1 {
            continue;
        }
        if order[u as usize] != 0 {
            continue;
        }
        powers.clear();
        let mut x = u;
        loop {
            powers.push(x);
            if x == 1 || x == n - 1 {
                break;
            }
            x = mulmod(x, u, n);
        }
        let k = powers.len() as u64;
        for (j, &y) in powers.iter().enumerate() {
            let slot = &mut order[rep(y) as usize];
            if *slot == 0 {
                *slot = k / gcd_u64(j as u64 + 1, k);
            }
        }
        if k > best.0 {
            best = (k, u);
        }
        // a class of full order generates everything; nothing left to find
        if k == group_order {
            break;
        }
    }
    let (max_element_order, witness) = best;
    let report = UnitGroupReport {
        modulus: n,
        group_order,
        max_element_order,
        is_cyclic: max_element_order == group_order,
        witness,
    };
    verify_class_order(n, witness, max_element_order)?;
    Ok(report)
}

/// Checks by direct exponentiation that `u` has class order exactly `k`.
pub fn verify_class_order(n: u64, u: u64, k: u64) -> Result<()> {
    let pm1 = |v: u64| v == 1 || v == n - 1;
    if !pm1(powmod(u, k, n)) {
        return Err(Error::InternalInconsistency(format!(
            "{u}^{k} is not ±1 mod {n}"
        )));
    }
    for (l, _) in factor_u64(k.max(1)) {
        if k > 1 && pm1(powmod(u, k / l, n)) {
            return Err(Error::InternalInconsistency(format!(
                "class of {u} mod {n} has order dividing {}",
                k / l
            )));
        }
    }
    Ok(())
}

/// Exact square root of a nonnegative perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&b(11)).unwrap());
        assert!(!is_prime(&b(15)).unwrap());
        assert!(!is_prime(&b(1)).unwrap());
        assert!(!is_prime(&b(0)).unwrap());
        assert!(is_prime(&b(503)).unwrap());
        assert!(is_prime_u64(18446744073709551557)); // largest u64 prime
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime(&(BigInt::one() << 64)).is_err());
    }

    #[test]
    fn factor_examples() {
        let f = |v: i64| factor_int(&b(v)).unwrap().pairs;
        assert_eq!(f(105), vec![(b(3), 1), (b(5), 1), (b(7), 1)]);
        assert_eq!(f(9), vec![(b(3), 2)]);
        assert_eq!(f(2012), vec![(b(2), 2), (b(503), 1)]);
        assert_eq!(f(1), vec![]);
        assert!(factor_int(&b(0)).is_err());
    }

    #[test]
    fn factor_large_semiprime_and_powers() {
        let p = 4294967291u64; // 2^32 - 5
        let q = 4294967279u64;
        let n = BigInt::from(p) * BigInt::from(q);
        let fac = factor_int(&n).unwrap();
        assert_eq!(fac.pairs, vec![(BigInt::from(q), 1), (BigInt::from(p), 1)]);
        // perfect power with a large base beyond 64 bits overall
        let big = num_traits::pow(BigInt::from(1_000_000_007u64), 5);
        assert_eq!(
            factor_int(&big).unwrap().pairs,
            vec![(BigInt::from(1_000_000_007u64), 5)]
        );
    }

    #[test]
    fn factor_too_hard() {
        // product of two primes just above 2^64 / trial bound
        let p = BigInt::from(18446744073709551557u64);
        let q = BigInt::from(18446744073709551533u64);
        assert!(matches!(
            factor_int(&(p * q)),
            Err(Error::FactorizationTooHard(_))
        ));
    }

    #[test]
    fn phi_divisors_mobius_examples() {
        let r = phi_divisors_mobius(9);
        assert_eq!((r.phi, r.divisors, r.mobius), (6, vec![1, 3, 9], 0));
        let r = phi_divisors_mobius(15);
        assert_eq!((r.phi, r.divisors, r.mobius), (8, vec![1, 3, 5, 15], 1));
        let r = phi_divisors_mobius(1);
        assert_eq!((r.phi, r.divisors, r.mobius), (1, vec![1], 1));
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn unit_group_examples() {
        let r = unit_group_mod_pm1(15).unwrap();
        assert_eq!((r.group_order, r.is_cyclic), (4, true));
        assert_eq!(r.max_element_order, 4);
        verify_class_order(15, 2, 4).unwrap();

        let r = unit_group_mod_pm1(63).unwrap();
        assert_eq!((r.group_order, r.is_cyclic), (18, false));

        let r = unit_group_mod_pm1(16).unwrap();
        assert_eq!((r.group_order, r.is_cyclic), (4, true));
        verify_class_order(16, 3, 4).unwrap();

        assert!(unit_group_mod_pm1(2).is_err());
        assert!(unit_group_mod_pm1(UNIT_GROUP_BOUND + 1).is_err());
    }

    #[test]
    fn phi_matches_gcd_count() {
        for n in 1..=10_000u64 {
            let count = (1..=n).filter(|&k| gcd_u64(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), count, "n = {n}");
        }
    }

    #[test]
    fn unit_group_order_is_half_phi() {
        for n in 3..=2000u64 {
            let r = unit_group_mod_pm1(n).unwrap();
            assert_eq!(r.group_order, euler_phi(n) / 2);
            assert!(r.max_element_order <= r.group_order);
            assert_eq!(r.group_order % r.max_element_order, 0);
        }
    }
}
