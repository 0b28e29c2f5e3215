//! Polynomial recurrence sequences: `w_n`, `W_n(x) = w_n(x^2)`, Vieta–Lucas
//! `v_n`, Fibonacci `F_n` and Lucas `L_n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::intpoly::IntPoly;

/// Largest index accepted by [`term`].
pub const MAX_TERM_INDEX: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeqKind {
    /// `w_0 = w_1 = 1`, `w_n = (x - 2) w_{n-1} - w_{n-2}`
    WSmall,
    /// `W_n(x) = w_n(x^2)`
    WBig,
    /// `v_0 = 2`, `v_1 = x`, `v_n = x v_{n-1} - v_{n-2}`
    VietaLucas,
    /// `F_0 = 0`, `F_1 = 1`, `F_n = x F_{n-1} + F_{n-2}`
    Fibonacci,
    /// `L_0 = 2`, `L_1 = x`, `L_n = x L_{n-1} + L_{n-2}`
    Lucas,
}

impl SeqKind {
    pub const ALL: [SeqKind; 5] = [
        SeqKind::WSmall,
        SeqKind::WBig,
        SeqKind::VietaLucas,
        SeqKind::Fibonacci,
        SeqKind::Lucas,
    ];

    /// `(initial pair, multiplier, sign of the second-previous term)`.
    fn recurrence(self) -> (IntPoly, IntPoly, IntPoly, bool) {
        let x = IntPoly::x();
        match self {
            SeqKind::WSmall => (
                IntPoly::one(),
                IntPoly::one(),
                IntPoly::from_i64s(&[-2, 1]),
                false,
            ),
            SeqKind::WBig => (
                IntPoly::one(),
                IntPoly::one(),
                IntPoly::from_i64s(&[-2, 0, 1]),
                false,
            ),
            SeqKind::VietaLucas => (IntPoly::constant(BigInt::from(2)), x.clone(), x, false),
            SeqKind::Fibonacci => (IntPoly::zero(), IntPoly::one(), x, true),
            SeqKind::Lucas => (IntPoly::constant(BigInt::from(2)), x.clone(), x, true),
        }
    }
}

/// Iterator over the terms of a sequence, starting at index 0.
pub struct Terms {
    prev: IntPoly,
    cur: IntPoly,
    mult: IntPoly,
    plus: bool,
}

impl Iterator for Terms {
    type Item = IntPoly;
    fn next(&mut self) -> Option<IntPoly> {
        let step = &self.mult * &self.cur;
        let next = if self.plus {
            &step + &self.prev
        } else {
            &step - &self.prev
        };
        let prev = std::mem::replace(&mut self.prev, std::mem::replace(&mut self.cur, next));
        Some(prev)
    }
}

pub fn terms(kind: SeqKind) -> Terms {
    let (prev, cur, mult, plus) = kind.recurrence();
    Terms {
        prev,
        cur,
        mult,
        plus,
    }
}

/// The `n`-th term by iterating the recurrence. `W_n` is computed from
/// `w_n` by substituting `x^2`.
pub fn term(kind: SeqKind, n: u64) -> Result<IntPoly> {
    if n > MAX_TERM_INDEX {
        return Err(out_of_range("n", n, format!("<= {MAX_TERM_INDEX}")));
    }
    if kind == SeqKind::WBig {
        return Ok(term(SeqKind::WSmall, n)?.compose_square());
    }
    Ok(terms(kind).nth(n as usize).expect("infinite iterator"))
}

/// Memo table holding every term computed so far for one sequence.
///
/// Not shared between threads; give each task its own table.
#[derive(Clone, Debug)]
pub struct SequenceTable {
    kind: SeqKind,
    cache: Vec<IntPoly>,
}

impl SequenceTable {
    pub fn new(kind: SeqKind) -> Self {
        SequenceTable {
            kind,
            cache: Vec::new(),
        }
    }

    pub fn get(&mut self, n: u64) -> Result<&IntPoly> {
        if n > MAX_TERM_INDEX {
            return Err(out_of_range("n", n, format!("<= {MAX_TERM_INDEX}")));
        }
        let n = n as usize;
        if n >= self.cache.len() {
            if self.kind == SeqKind::WBig {
                let mut small = SequenceTable::new(SeqKind::WSmall);
                for i in self.cache.len()..=n {
                    let t = small.get(i as u64)?.compose_square();
                    self.cache.push(t);
                }
            } else {
                let need = n + 1 - self.cache.len();
                let start = self.cache.len();
                self.cache.extend(terms(self.kind).skip(start).take(need));
            }
        }
        Ok(&self.cache[n])
    }
}

/// `B(n, j) = n / (n - j) * C(n - j, j)`, the magnitude of the coefficient of
/// `x^(n - 2j)` in `v_n`.
pub fn vieta_coefficient(n: u64, j: i64) -> Result<BigInt> {
    let max = n / 2;
    if n == 0 || j < 0 || j as u64 > max {
        return Err(Error::IndexOutOfRange { j, max });
    }
    if j == 0 {
        return Ok(BigInt::one());
    }
    let j = j as u64;
    // n * C(n - j - 1, j - 1) / j
    let num = BigInt::from(n) * binomial(n - j - 1, j - 1);
    let (q, r) = num.div_rem(&BigInt::from(j));
    debug_assert!(r.is_zero());
    Ok(q)
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// True iff `p` divides every non-leading coefficient of the monic `f` and
/// `p^2` does not divide its constant term.
pub fn eisenstein_check(f: &IntPoly, p: u64) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 || !f.is_monic() {
        return false;
    }
    let bp = BigInt::from(p);
    let p2 = &bp * &bp;
    f.coeffs()[..n].iter().all(|c| c.is_multiple_of(&bp)) && !f.coeffs()[0].is_multiple_of(&p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn term_examples() {
        assert_eq!(term(SeqKind::WSmall, 3).unwrap(), p(&[5, -5, 1]));
        assert_eq!(term(SeqKind::VietaLucas, 3).unwrap(), p(&[0, -3, 0, 1]));
        assert_eq!(term(SeqKind::WSmall, 0).unwrap(), IntPoly::one());
        assert_eq!(term(SeqKind::WSmall, 1).unwrap(), IntPoly::one());
        assert_eq!(term(SeqKind::Fibonacci, 5).unwrap(), p(&[1, 0, 3, 0, 1]));
        assert_eq!(term(SeqKind::WSmall, 4).unwrap(), p(&[-7, 14, -7, 1]));
        assert_eq!(term(SeqKind::WBig, 3).unwrap(), p(&[5, 0, -5, 0, 1]));
        assert_eq!(term(SeqKind::Lucas, 2).unwrap(), p(&[2, 0, 1]));
        assert!(term(SeqKind::WSmall, MAX_TERM_INDEX + 1).is_err());
    }

    #[test]
    fn table_matches_direct_terms() {
        for kind in SeqKind::ALL {
            let mut table = SequenceTable::new(kind);
            // out-of-order access
            for n in [7u64, 2, 12, 0, 12, 5] {
                assert_eq!(
                    table.get(n).unwrap(),
                    &term(kind, n).unwrap(),
                    "{kind:?} {n}"
                );
            }
        }
    }

    #[test]
    fn vieta_coefficient_examples() {
        assert_eq!(vieta_coefficient(9, 0).unwrap(), BigInt::one());
        assert_eq!(vieta_coefficient(7, 2).unwrap(), BigInt::from(14));
        assert_eq!(vieta_coefficient(5, 2).unwrap(), BigInt::from(5));
        assert_eq!(
            vieta_coefficient(5, 3),
            Err(Error::IndexOutOfRange { j: 3, max: 2 })
        );
        assert!(vieta_coefficient(5, -1).is_err());
    }

    #[test]
    fn eisenstein_examples() {
        assert!(eisenstein_check(&p(&[-7, 14, -7, 1]), 7));
        assert!(eisenstein_check(&p(&[5, -5, 1]), 5));
        assert!(!eisenstein_check(&p(&[1, 1, 1]), 3));
        assert!(!eisenstein_check(&p(&[9, 3, 1]), 3));
        assert!(!eisenstein_check(&IntPoly::zero(), 3));
    }

    #[test]
    fn closed_form_coefficients() {
        let mut v = SequenceTable::new(SeqKind::VietaLucas);
        for n in 1..=200u64 {
            let mut coeffs = vec![BigInt::zero(); n as usize + 1];
            for j in 0..=(n / 2) {
                let b = vieta_coefficient(n, j as i64).unwrap();
                coeffs[(n - 2 * j) as usize] = if j % 2 == 0 { b } else { -b };
            }
            assert_eq!(v.get(n).unwrap(), &IntPoly::new(coeffs), "n = {n}");
        }
    }

    #[test]
    fn x_times_big_w_is_vieta() {
        let mut v = SequenceTable::new(SeqKind::VietaLucas);
        let mut w = SequenceTable::new(SeqKind::WBig);
        for n in 2..=500u64 {
            let lhs = &IntPoly::x() * w.get(n).unwrap();
            assert_eq!(&lhs, v.get(2 * n - 1).unwrap(), "n = {n}");
        }
    }

    /// `x^n v_n(x + 1/x) = x^(2n) + 1`, checked by expanding
    /// `sum_k c_k (x^2 + 1)^k x^(n - k)`.
    #[test]
    fn laurent_identity() {
        let mut v = SequenceTable::new(SeqKind::VietaLucas);
        let x2p1 = p(&[1, 0, 1]);
        for n in 1..=100u64 {
            let vn = v.get(n).unwrap().clone();
            let mut acc = IntPoly::zero();
            let mut pw = IntPoly::one();
            for (k, c) in vn.coeffs().iter().enumerate() {
                let shift = IntPoly::monomial(c.clone(), n as usize - k);
                acc = &acc + &(&pw * &shift);
                pw = &pw * &x2p1;
            }
            let mut expect = vec![BigInt::zero(); 2 * n as usize + 1];
            expect[0] = BigInt::one();
            expect[2 * n as usize] = BigInt::one();
            assert_eq!(acc, IntPoly::new(expect), "n = {n}");
        }
    }

    #[test]
    fn degrees() {
        let mut w = SequenceTable::new(SeqKind::WSmall);
        let mut wb = SequenceTable::new(SeqKind::WBig);
        let mut v = SequenceTable::new(SeqKind::VietaLucas);
        for n in 2..=150u64 {
            assert_eq!(w.get(n).unwrap().degree(), Some(n as usize - 1));
            assert_eq!(wb.get(n).unwrap().degree(), Some(2 * n as usize - 2));
            assert_eq!(v.get(n).unwrap().degree(), Some(n as usize));
        }
    }

    #[test]
    fn eisenstein_at_prime_index() {
        let mut w = SequenceTable::new(SeqKind::WSmall);
        for n in 2..=250u64 {
            let q = 2 * n - 1;
            if !crate::numtheory::is_prime_u64(q) {
                continue;
            }
            let wn = w.get(n).unwrap().clone();
            assert!(eisenstein_check(&wn, q), "w_{n}");
            assert!(eisenstein_check(&wn.compose_square(), q), "W_{n}");
        }
    }
}
