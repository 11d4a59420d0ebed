//! Finite fields GF(p^f) with a deterministic representation.
//!
//! The modulus is the lexicographically smallest monic irreducible polynomial
//! of degree f over GF(p), comparing coefficients from X^(f-1) down to the
//! constant term, found by exhaustive search. Elements are indexed 0..q by
//! base-p encoding of their coefficient vectors, so element 0 is the zero of
//! the field and indices are stable across runs.

use crate::arith::prime_power;
use crate::zmodpoly::{zis_irreducible_small, zmul, znormalize, zrem, Zp};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum GfError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of {max}", max = MAX_FIELD_ORDER)]
    OrderTooLarge(u64),
}

/// Largest supported field order. Fields are used to label graph vertices
/// (capped at 64) but stay independently usable at small desk scale.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// GF(p^f) with elements indexed 0..q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    f: u32,
    q: u64,
    /// Monic irreducible modulus, ascending coefficients, length f+1.
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self, GfError> {
        let (p, f) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(GfError::OrderTooLarge(q));
        }
        let modulus = if f == 1 {
            vec![0, 1] // reduction mod X: elements are the residues mod p
        } else {
            find_smallest_irreducible(p, f)
        };
        Ok(FiniteField { p, f, q, modulus })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.f
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Base-p digits of an element index, ascending: the coefficient vector.
    pub fn coeffs(&self, idx: u64) -> Vec<u64> {
        debug_assert!(idx < self.q);
        let mut v = Vec::with_capacity(self.f as usize);
        let mut x = idx;
        for _ in 0..self.f {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let zp = Zp::new(self.p);
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| zp.add(x, y)).collect();
        self.encode(&sum)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let zp = Zp::new(self.p);
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let diff: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| zp.sub(x, y)).collect();
        self.encode(&diff)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let zp = Zp::new(self.p);
        let prod = zmul(zp, &znormalize(self.coeffs(a)), &znormalize(self.coeffs(b)));
        let mut red = zrem(zp, &prod, &self.modulus);
        red.resize(self.f as usize, 0);
        self.encode(&red)
    }

    /// The set {x^2 : x != 0}, sorted ascending. Has (q-1)/2 elements for odd q.
    pub fn nonzero_squares(&self) -> Vec<u64> {
        let mut sq: Vec<u64> = (1..self.q).map(|x| self.mul(x, x)).collect();
        sq.sort_unstable();
        sq.dedup();
        sq
    }
}

/// Smallest monic irreducible of degree f over GF(p), ordering candidates by
/// the coefficient tuple (a_{f-1}, ..., a_0). That tuple order coincides with
/// numeric order of the base-p encoding with a_{f-1} most significant.
fn find_smallest_irreducible(p: u64, f: u32) -> Vec<u64> {
    let zp = Zp::new(p);
    let count = p.pow(f);
    for idx in 0..count {
        let mut digits = Vec::with_capacity(f as usize);
        let mut x = idx;
        for _ in 0..f {
            digits.push(x % p);
            x /= p;
        }
        // digits[0] is a_0 ... digits[f-1] is a_{f-1}; idx order sorts by
        // a_{f-1} first, which is the documented order.
        let mut cand = digits;
        cand.push(1);
        if zis_irreducible_small(zp, &cand) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}
