//! Slow reference implementations that share no code path with the fast
//! routines they are compared against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fppoly::FpPoly;
use crate::intpoly::IntPoly;

/// Resultant as the determinant of the Sylvester matrix, computed with
/// fraction-free Bareiss elimination.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let m = f.degree().expect("nonzero f");
    let n = g.degree().expect("nonzero g");
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    // rows 0..n: shifts of f; rows n..n+m: shifts of g; descending powers
    for r in 0..n {
        for (i, c) in f.coeffs().iter().enumerate() {
            mat[r][r + m - i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in g.coeffs().iter().enumerate() {
            mat[n + r][r + n - i] = c.clone();
        }
    }
    bareiss_det(mat)
}

pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// All monic polynomials of degree `d` over `F_p`, in lexicographic order.
fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = FpPoly> {
    let total = (p as u128).pow(d as u32);
    (0..total).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push((idx % p as u128) as u64);
            idx /= p as u128;
        }
        coeffs.push(1);
        FpPoly::new(p, coeffs)
    })
}

/// Factorization by exhaustive trial division with every monic polynomial
/// of degree up to half the remaining degree. Only sensible for tiny `p`
/// and degree.
pub fn trial_division_factor(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let mut rest = f.monic();
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        for cand in monic_of_degree(p, d) {
            let mut e = 0;
            while let Ok(q) = rest.div_exact(&cand) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((cand, e));
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        match out.iter_mut().find(|(g, _)| *g == rest) {
            Some((_, e)) => *e += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort_by(|a, b| {
        a.0.coeffs()
            .len()
            .cmp(&b.0.coeffs().len())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_small_cases() {
        let p = IntPoly::from_i64s;
        assert_eq!(
            sylvester_resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])),
            BigInt::from(3)
        );
        assert_eq!(
            sylvester_resultant(&p(&[3]), &p(&[1, 2, 1])),
            BigInt::from(9)
        );
        assert_eq!(
            sylvester_resultant(&p(&[-1, 1]), &p(&[-1, 0, 1])),
            BigInt::zero()
        );
        // disc(x^2 + bx + c) = b^2 - 4c from -res(f, f')
        let f = p(&[5, -5, 1]);
        assert_eq!(-sylvester_resultant(&f, &f.derivative()), BigInt::from(5));
    }

    #[test]
    fn trial_division_small_cases() {
        let f = FpPoly::new(5, vec![1, 0, 1]);
        assert_eq!(
            trial_division_factor(&f),
            vec![
                (FpPoly::new(5, vec![2, 1]), 1),
                (FpPoly::new(5, vec![3, 1]), 1)
            ]
        );
        let g = FpPoly::new(2, vec![0, 0, 1, 1, 1]); // x^2 (x^2 + x + 1)
        assert_eq!(
            trial_division_factor(&g),
            vec![
                (FpPoly::new(2, vec![0, 1]), 2),
                (FpPoly::new(2, vec![1, 1, 1]), 1)
            ]
        );
    }
}
