//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector and the
//! last stored coefficient is never zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fppoly::FpPoly;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, stripping leading zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (negative infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide each one exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Quotient and remainder of long division. Fails with `NotDivisible`
    /// as soon as a step needs a non-integral quotient coefficient.
    fn div_rem_integral(&self, den: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = den.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = den.leading_coeff().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.degree() else {
            return Ok((IntPoly::zero(), IntPoly::zero()));
        };
        if dn < dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, c) in den.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient `self / den`; `NotDivisible` if any remainder is left.
    pub fn divide_exact(&self, den: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_integral(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// True iff `den` divides `self` in `Z[x]`.
    pub fn is_divisible_by(&self, den: &IntPoly) -> bool {
        self.divide_exact(den).is_ok()
    }

    /// Pseudo-remainder: the remainder of `lc(den)^(deg self - deg den + 1) * self`
    /// divided by `den`.
    pub fn pseudo_rem(&self, den: &IntPoly) -> Result<IntPoly> {
        let dd = den.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = den.leading_coeff().expect("nonzero").clone();
        let Some(dn) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if dn < dd {
            return Ok(self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut unused = dn - dd + 1;
        for k in (dd..=dn).rev() {
            let t = std::mem::take(&mut rem[k]);
            rem.truncate(k);
            if t.is_zero() {
                continue;
            }
            unused -= 1;
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (i, c) in den.coeffs[..dd].iter().enumerate() {
                rem[k - dd + i] -= &t * c;
            }
        }
        let factor = num_traits::pow(lc, unused);
        Ok(IntPoly::new(rem).scale(&factor))
    }

    /// `f(x + c)`.
    pub fn taylor_shift(&self, c: &BigInt) -> IntPoly {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if n < 2 || c.is_zero() {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = c * &a[j + 1];
                a[j] += t;
            }
        }
        IntPoly::new(a)
    }

    /// `f(x^2)`.
    pub fn compose_square(&self) -> IntPoly {
        let mut out = Vec::with_capacity(2 * self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(BigInt::zero());
            }
            out.push(c.clone());
        }
        IntPoly::new(out)
    }

    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Resultant by the subresultant pseudo-remainder sequence.
    ///
    /// Normalised so that `res(f, g) = lc(f)^deg g * prod g(alpha)` over the
    /// roots `alpha` of `f`, i.e. it matches the Sylvester determinant.
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut negate = false;
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                negate = true;
            }
        }
        if b.deg() == 0 {
            let r = num_traits::pow(b.coeffs[0].clone(), a.deg());
            return Ok(if negate { -r } else { r });
        }

        let ca = a.content();
        let cb = b.content();
        a = a.div_scalar_exact(&ca)?;
        b = b.div_scalar_exact(&cb)?;
        let t = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());

        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let (da, db) = (a.deg(), b.deg());
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                negate = !negate;
            }
            let r = a.pseudo_rem(&b)?;
            if r.is_zero() {
                return Ok(BigInt::zero());
            }
            a = b;
            let denom = &g * num_traits::pow(h.clone(), delta);
            b = r.div_scalar_exact(&denom)?;
            g = a.leading_coeff().expect("nonzero").clone();
            if delta > 0 {
                h = exact_div(
                    &num_traits::pow(g.clone(), delta),
                    &num_traits::pow(h.clone(), delta - 1),
                )?;
            }
            if b.deg() == 0 {
                break;
            }
        }
        let da = a.deg();
        let lb = b.leading_coeff().expect("nonzero").clone();
        let h = exact_div(&num_traits::pow(lb, da), &num_traits::pow(h, da - 1))?;
        let r = t * h;
        Ok(if negate { -r } else { r })
    }

    /// Discriminant of a monic polynomial: `(-1)^(n(n-1)/2) res(f, f')`.
    /// Linear polynomials have discriminant 1.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        if n == 0 {
            return Err(Error::ZeroPolynomial);
        }
        let r = self.resultant(&self.derivative())?;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
    }

    /// Reduction into `F_p[x]`.
    pub fn reduce_mod(&self, p: u64) -> FpPoly {
        let m = BigInt::from(p);
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().expect("reduced below p"))
                .collect(),
        )
    }

    /// Product with `x^d - 1`, using two shifted copies.
    pub(crate) fn mul_xd_minus_one(&self, d: usize) -> IntPoly {
        let n = self.coeffs.len();
        if n == 0 {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); n + d];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + d] += c;
            out[i] -= c;
        }
        IntPoly::new(out)
    }

    /// Exact division by `x^d - 1`.
    pub(crate) fn div_xd_minus_one(&self, d: usize) -> Result<IntPoly> {
        let Some(n) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if n < d {
            return Err(Error::NotDivisible);
        }
        // a_i = q_{i-d} - q_i
        let qlen = n - d + 1;
        let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let prev = if i >= d {
                q[i - d].clone()
            } else {
                BigInt::zero()
            };
            q.push(prev - &self.coeffs[i]);
        }
        for i in qlen..=n {
            let hi = if i >= d && i - d < qlen {
                &q[i - d]
            } else {
                &BigInt::ZERO
            };
            let lo = if i < qlen { &q[i] } else { &BigInt::ZERO };
            if self.coeffs[i] != hi - lo {
                return Err(Error::NotDivisible);
            }
        }
        Ok(IntPoly::new(q))
    }

    fn deg(&self) -> usize {
        self.degree().expect("nonzero polynomial")
    }
}

fn exact_div(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InternalInconsistency(
            "subresultant step was not an exact division".into(),
        ))
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        IntPoly::new(out)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, c) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= c;
        }
        IntPoly::new(out)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, f| &acc * &f)
    }
}

/// Human-readable form, e.g. `x^3 - 7x^2 + 14x - 7`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Canonical form: JSON array of decimal strings, ascending.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Serde adapter writing a `BigInt` as a decimal string.
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_ops_examples() {
        let x_minus_2 = p(&[-2, 1]);
        assert_eq!(
            &(&x_minus_2 * &IntPoly::one()) - &IntPoly::one(),
            p(&[-3, 1])
        );
        assert_eq!(p(&[-3, 1]) * p(&[-3, 9, -6, 1]), p(&[9, -30, 27, -9, 1]));
        let f = p(&[5, -5, 1]);
        let z = &f + &(-&f);
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn divide_exact_examples() {
        let w5 = p(&[9, -30, 27, -9, 1]);
        assert_eq!(w5.divide_exact(&p(&[-3, 1])).unwrap(), p(&[-3, 9, -6, 1]));
        assert_eq!(w5.divide_exact(&IntPoly::one()).unwrap(), w5);
        assert_eq!(
            p(&[5, -5, 1]).divide_exact(&p(&[-1, 1])),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            w5.divide_exact(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
        // non-integral quotient coefficient
        assert_eq!(
            p(&[1, 1]).divide_exact(&p(&[1, 2])),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn taylor_shift_examples() {
        let psi14 = p(&[1, -2, -1, 1]);
        assert_eq!(psi14.taylor_shift(&BigInt::from(-2)), p(&[-7, 14, -7, 1]));
        assert_eq!(psi14.taylor_shift(&BigInt::zero()), psi14);
        assert_eq!(p(&[0, 0, 1]).taylor_shift(&BigInt::one()), p(&[1, 2, 1]));
    }

    #[test]
    fn compose_square_examples() {
        assert_eq!(p(&[-3, 1]).compose_square(), p(&[-3, 0, 1]));
        assert_eq!(p(&[5, -5, 1]).compose_square(), p(&[5, 0, -5, 0, 1]));
        assert!(IntPoly::zero().compose_square().is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let w4 = p(&[-7, 14, -7, 1]);
        assert_eq!(w4.evaluate(&BigInt::zero()), BigInt::from(-7));
        assert_eq!(p(&[-3, 1]).evaluate(&BigInt::from(3)), BigInt::zero());
        assert_eq!(p(&[5, -5, 1]).evaluate(&BigInt::one()), BigInt::one());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(
            p(&[-1, 0, 1]).resultant(&p(&[-2, 1])).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            IntPoly::zero().resultant(&p(&[1, 1])),
            Err(Error::ZeroPolynomial)
        );
        // common root
        assert_eq!(
            p(&[-1, 0, 1]).resultant(&p(&[-1, 1])).unwrap(),
            BigInt::zero()
        );
        // res(x^3 - 2, x^2 + 1): degrees odd*even, constants
        let f = p(&[-2, 0, 0, 1]);
        let g = p(&[1, 0, 1]);
        assert_eq!(f.resultant(&g).unwrap(), g.resultant(&f).unwrap());
        assert_eq!(p(&[3]).resultant(&p(&[1, 2, 1])).unwrap(), BigInt::from(9));
        assert_eq!(p(&[3]).resultant(&p(&[5])).unwrap(), BigInt::one());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[5, -5, 1]).discriminant().unwrap(), BigInt::from(5));
        assert_eq!(p(&[0, -3, 0, 1]).discriminant().unwrap(), BigInt::from(108));
        assert_eq!(p(&[-3, 1]).discriminant().unwrap(), BigInt::one());
        assert_eq!(p(&[1, 2]).discriminant(), Err(Error::NonMonic));
        assert_eq!(IntPoly::zero().discriminant(), Err(Error::ZeroPolynomial));
        assert_eq!(
            p(&[-8, -2, -1, 1]).discriminant().unwrap(),
            BigInt::from(-2012)
        );
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(p(&[-7, 14, -7, 1]).reduce_mod(7).coeffs(), &[0, 0, 0, 1]);
        assert!(p(&[7, 14]).reduce_mod(7).is_zero());
        assert!(IntPoly::zero().reduce_mod(7).is_zero());
        assert_eq!(p(&[5, -5, 1]).reduce_mod(2).coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-7, 14, -7, 1]).to_string(), "x^3 - 7x^2 + 14x - 7");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, 1]).to_string(), "x^2 + 1");
    }

    #[test]
    fn json_form() {
        let f = p(&[-7, 14, -7, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["-7","14","-7","1"]"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), f);
    }

    #[test]
    fn xd_minus_one_helpers() {
        let f = p(&[1, 1, 1]);
        let g = f.mul_xd_minus_one(3);
        assert_eq!(g, p(&[-1, -1, -1, 1, 1, 1]));
        assert_eq!(g.div_xd_minus_one(3).unwrap(), f);
        assert_eq!(
            p(&[0, 0, 0, 1]).div_xd_minus_one(3),
            Err(Error::NotDivisible)
        );
        assert_eq!(p(&[-1, 0, 0, 1]).div_xd_minus_one(1).unwrap(), f);
    }
}
