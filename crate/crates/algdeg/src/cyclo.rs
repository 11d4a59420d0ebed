//! Cyclotomic polynomials and the minimal polynomials of 2cos(2*pi/d).
//!
//! The latter drive the exact spectra of cycles: the eigenvalues of a cycle
//! of length n are 2cos(2*pi*j/n), grouped by the order d = n/gcd(j, n), and
//! for d >= 3 the values 2cos(2*pi*j/d) with gcd(j, d) = 1 share one minimal
//! polynomial of degree totient(d)/2.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith;
use crate::intpoly::IntPoly;

/// The d-th cyclotomic polynomial, computed exactly by dividing X^d - 1 by
/// the cyclotomic polynomials of the proper divisors of d.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic polynomials are indexed from 1");
    let numerator = &IntPoly::monomial(BigInt::one(), d as usize) - &IntPoly::one();
    let mut denominator = IntPoly::one();
    for e in 1..d {
        if d % e == 0 {
            denominator = &denominator * &cyclotomic(e);
        }
    }
    numerator.exact_div(&denominator).expect("cyclotomic division is exact")
}

/// Minimal polynomial of 2cos(2*pi/d) over the rationals.
///
/// For d >= 3 the d-th cyclotomic polynomial is palindromic of even degree
/// 2m, so Phi_d(X)/X^m = a_m + sum a_{m+k} (X^k + X^-k), and substituting
/// the two-cosine recursion c_0 = 2, c_1 = y, c_k = y c_{k-1} - c_{k-2}
/// (c_k(y) = X^k + X^-k at y = X + 1/X) folds it into a monic polynomial of
/// degree m = totient(d)/2 whose roots are the 2cos(2*pi*j/d), gcd(j,d) = 1.
pub fn min_poly_two_cos(d: u64) -> IntPoly {
    assert!(d >= 1, "two-cosine minimal polynomials are indexed from 1");
    match d {
        1 => IntPoly::from_i64(&[-2, 1]),
        2 => IntPoly::from_i64(&[2, 1]),
        _ => {
            let phi = cyclotomic(d);
            let m = (arith::totient(d) / 2) as usize;
            debug_assert_eq!(phi.deg(), 2 * m);
            let a = phi.coeffs();
            let mut acc = IntPoly::constant(a[m].clone());
            let mut c_prev = IntPoly::constant(2.into());
            let mut c_cur = IntPoly::x();
            for k in 1..=m {
                acc = &acc + &c_cur.scale(&a[m + k]);
                let next = &c_cur.shift_up(1) - &c_prev;
                c_prev = std::mem::replace(&mut c_cur, next);
            }
            acc
        }
    }
}
