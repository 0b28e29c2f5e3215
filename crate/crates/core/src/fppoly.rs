//! Polynomials over a prime field `F_p` with `p < 2^63`, and their complete
//! factorization (squarefree, distinct-degree, then equal-degree splitting).

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest modulus accepted (exclusive).
pub const MAX_MODULUS: u64 = 1 << 63;

/// Seed used by the convenience entry points when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

impl FpPoly {
    /// Reduces the residues mod `p` and strips leading zeros.
    ///
    /// # Panics
    /// If `p < 2` or `p >= 2^63`; use [`FpPoly::try_new`] to get an error instead.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        Self::try_new(p, coeffs).expect("modulus within bounds")
    }

    pub fn try_new(p: u64, mut coeffs: Vec<u64>) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p.to_string()));
        }
        if p < 2 {
            return Err(crate::error::out_of_range("modulus", p, ">= 2"));
        }
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut f = FpPoly { p, coeffs };
        f.trim();
        Ok(f)
    }

    pub fn zero(p: u64) -> Self {
        Self::new(p, Vec::new())
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn check(&self, other: &FpPoly) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p, other.p))
        }
    }

    pub fn monic(&self) -> FpPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(1) => self.clone(),
            Some(lc) => self.scale(invmod(lc, self.p)),
        }
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&a| mulmod(a, c, p)).collect())
    }

    pub fn add(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| addmod(self.coeff(i), other.coeff(i), p))
            .collect();
        Ok(FpPoly::new(p, coeffs))
    }

    pub fn sub(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| submod(self.coeff(i), other.coeff(i), p))
            .collect();
        Ok(FpPoly::new(p, coeffs))
    }

    pub fn mul(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(FpPoly::zero(self.p));
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = addmod(out[i + j], mulmod(a, b, p), p);
            }
        }
        Ok(FpPoly::new(p, out))
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn div_rem(&self, den: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        self.check(den)?;
        let dd = den.degree().ok_or(Error::ZeroPolynomial)?;
        let p = self.p;
        let Some(dn) = self.degree() else {
            return Ok((FpPoly::zero(p), FpPoly::zero(p)));
        };
        if dn < dd {
            return Ok((FpPoly::zero(p), self.clone()));
        }
        let inv = invmod(den.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let t = rem[k + dd];
            if t == 0 {
                continue;
            }
            let q = mulmod(t, inv, p);
            quot[k] = q;
            for (i, &c) in den.coeffs.iter().enumerate() {
                rem[k + i] = submod(rem[k + i], mulmod(q, c, p), p);
            }
        }
        Ok((FpPoly::new(p, quot), FpPoly::new(p, rem)))
    }

    pub fn rem(&self, den: &FpPoly) -> Result<FpPoly> {
        Ok(self.div_rem(den)?.1)
    }

    /// Exact quotient; `NotDivisible` on a nonzero remainder.
    pub fn div_exact(&self, den: &FpPoly) -> Result<FpPoly> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &FpPoly) -> Result<FpPoly> {
        self.check(m)?;
        let mut base = self.rem(m)?;
        let mut acc = FpPoly::one(self.p).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Inverse of the Frobenius on a polynomial whose exponents are all
    /// multiples of `p`: returns `g` with `g^p = self`.
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        let coeffs = self.coeffs.iter().step_by(p).copied().collect();
        FpPoly::new(self.p, coeffs)
    }

    /// Value at `t`.
    pub fn evaluate(&self, t: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| addmod(mulmod(acc, t, p), c, p))
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd_mod_p(a: &FpPoly, b: &FpPoly) -> Result<FpPoly> {
    a.check(b)?;
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Orders factors by degree, then lexicographically on ascending coefficients.
fn factor_order(a: &FpPoly, b: &FpPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.cmp(&b.coeffs))
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree monic factors, each with its multiplicity.
pub fn squarefree_decomposition(f: &FpPoly) -> Result<Vec<(FpPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.leading_coeff() != Some(1) {
        return Err(Error::NonMonic);
    }
    let mut out = Vec::new();
    sqf_rec(f, 1, &mut out)?;
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| factor_order(&a.0, &b.0)));
    Ok(out)
}

fn sqf_rec(f: &FpPoly, scale: u32, out: &mut Vec<(FpPoly, u32)>) -> Result<()> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(());
    }
    let d = f.derivative();
    let mut c = gcd_mod_p(f, &d)?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = gcd_mod_p(&w, &c)?;
        let fac = w.div_exact(&y)?;
        if !fac.is_one() {
            out.push((fac.monic(), i * scale));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root();
        let p = u32::try_from(f.p).map_err(|_| {
            Error::InternalInconsistency("p-th power part at a modulus beyond u32".into())
        })?;
        sqf_rec(&root.monic(), scale * p, out)?;
    }
    Ok(())
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree: returns `(product, degree)` pairs.
pub fn distinct_degree(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while let Some(n) = rest.degree() {
        if n < 2 * (d + 1) {
            if n > 0 {
                out.push((rest.clone(), n));
            }
            break;
        }
        d += 1;
        h = h.pow_mod(p, &rest)?;
        let g = gcd_mod_p(&rest, &h.sub(&x)?)?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
    }
    Ok(out)
}

/// Splits a product of distinct monic irreducibles of degree `d` into its
/// irreducible factors.
pub fn equal_degree<R: Rng>(f: &FpPoly, d: usize, rng: &mut R) -> Result<Vec<FpPoly>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let p = f.p;
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let candidate = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f)?;
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t)?.rem(f)?;
                acc = acc.add(&t)?;
            }
            acc
        } else {
            // a^((p^d - 1) / 2) = (a^(1 + p + ... + p^(d-1)))^((p - 1) / 2)
            let mut frob = a.rem(f)?;
            let mut norm = frob.clone();
            for _ in 1..d {
                frob = frob.pow_mod(p, f)?;
                norm = norm.mul(&frob)?.rem(f)?;
            }
            norm.pow_mod((p - 1) / 2, f)?.sub(&FpPoly::one(p))?
        };
        let g = gcd_mod_p(f, &candidate)?;
        let gd = g.degree().unwrap_or(0);
        if gd == 0 || gd == n {
            continue;
        }
        let mut left = equal_degree(&g, d, rng)?;
        left.extend(equal_degree(&f.div_exact(&g)?, d, rng)?);
        return Ok(left);
    }
}

/// Complete factorization of a monic polynomial into monic irreducibles
/// with multiplicities, sorted by degree then coefficients.
pub fn factor_mod_p<R: Rng>(f: &FpPoly, rng: &mut R) -> Result<Vec<(FpPoly, u32)>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(crate::error::out_of_range(
            "degree",
            f.degree().map_or("-inf".to_string(), |d| d.to_string()),
            ">= 1",
        ));
    }
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(f)? {
        for (block, d) in distinct_degree(&sqf)? {
            for g in equal_degree(&block, d, rng)? {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| factor_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// [`factor_mod_p`] with a generator seeded from `seed`.
pub fn factor_mod_p_seeded(f: &FpPoly, seed: u64) -> Result<Vec<(FpPoly, u32)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    factor_mod_p(f, &mut rng)
}

/// Multiplies out a factorization.
pub fn expand(p: u64, factors: &[(FpPoly, u32)]) -> Result<FpPoly> {
    let mut acc = FpPoly::one(p);
    for (g, e) in factors {
        for _ in 0..*e {
            acc = acc.mul(g)?;
        }
    }
    Ok(acc)
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 || c != 1 {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    #[test]
    fn gcd_examples() {
        assert!(gcd_mod_p(&fp(2, &[1, 1, 1]), &fp(2, &[1, 1]))
            .unwrap()
            .is_one());
        let f = fp(5, &[2, 0, 3]);
        assert_eq!(gcd_mod_p(&f, &FpPoly::zero(5)).unwrap(), f.monic());
        assert_eq!(
            gcd_mod_p(&fp(5, &[4, 0, 1]), &fp(5, &[4, 1])).unwrap(),
            fp(5, &[4, 1])
        );
        assert!(gcd_mod_p(&FpPoly::zero(3), &FpPoly::zero(3))
            .unwrap()
            .is_zero());
        assert_eq!(
            gcd_mod_p(&fp(3, &[1]), &fp(5, &[1])),
            Err(Error::ModulusMismatch(3, 5))
        );
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            squarefree_decomposition(&fp(7, &[0, 0, 0, 1])).unwrap(),
            vec![(fp(7, &[0, 1]), 3)]
        );
        assert_eq!(
            squarefree_decomposition(&fp(5, &[4, 0, 1])).unwrap(),
            vec![(fp(5, &[4, 0, 1]), 1)]
        );
        assert_eq!(
            squarefree_decomposition(&fp(2, &[0, 0, 1])).unwrap(),
            vec![(fp(2, &[0, 1]), 2)]
        );
        // (x+1)^2 (x+2)^3 over F_3: (x+2)^3 = x^3 + 2 needs the p-th power branch
        let f = expand(3, &[(fp(3, &[1, 1]), 2), (fp(3, &[2, 1]), 3)]).unwrap();
        assert_eq!(
            squarefree_decomposition(&f).unwrap(),
            vec![(fp(3, &[1, 1]), 2), (fp(3, &[2, 1]), 3)]
        );
    }

    #[test]
    fn factor_examples() {
        // x^3 - 7x^2 + 14x - 7 reduces to x^3 mod 7
        let f = fp(7, &[0, 0, 0, 1]);
        assert_eq!(
            factor_mod_p_seeded(&f, 1).unwrap(),
            vec![(fp(7, &[0, 1]), 3)]
        );
        assert_eq!(
            factor_mod_p_seeded(&fp(5, &[1, 0, 1]), 1).unwrap(),
            vec![(fp(5, &[2, 1]), 1), (fp(5, &[3, 1]), 1)]
        );
        assert_eq!(
            factor_mod_p_seeded(&fp(3, &[1, 0, 1]), 1).unwrap(),
            vec![(fp(3, &[1, 0, 1]), 1)]
        );
    }

    #[test]
    fn factor_over_f2_uses_trace_split() {
        // (x^2+x+1)(x^2+x+1)... and several distinct quadratics/cubics over F_2
        let a = fp(2, &[1, 1, 1]);
        let b = fp(2, &[1, 1, 0, 1]);
        let c = fp(2, &[1, 0, 1, 1]);
        let f = a.mul(&b).unwrap().mul(&c).unwrap();
        let got = factor_mod_p_seeded(&f, 9).unwrap();
        assert_eq!(got, vec![(a, 1), (c, 1), (b, 1)]);
    }

    #[test]
    fn factor_large_prime() {
        let p = (1u64 << 61) - 1;
        let roots = [3u64, 17, 1 << 40];
        let mut f = FpPoly::one(p);
        for r in roots {
            f = f.mul(&fp(p, &[p - r, 1])).unwrap();
        }
        let got = factor_mod_p_seeded(&f, 3).unwrap();
        assert_eq!(got.len(), 3);
        assert_eq!(expand(p, &got).unwrap(), f);
    }

    #[test]
    fn modulus_bounds() {
        assert!(matches!(
            FpPoly::try_new(1 << 63, vec![1]),
            Err(Error::ModulusTooLarge(_))
        ));
        assert!(FpPoly::try_new(1, vec![1]).is_err());
    }

    #[test]
    fn rejects_constants_and_nonmonic() {
        assert!(factor_mod_p_seeded(&fp(5, &[3]), 0).is_err());
        assert_eq!(
            squarefree_decomposition(&fp(5, &[1, 2])),
            Err(Error::NonMonic)
        );
    }
}
