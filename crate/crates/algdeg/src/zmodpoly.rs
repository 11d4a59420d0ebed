//! Polynomial arithmetic over GF(p) for word-sized primes, plus Berlekamp
//! factorization of squarefree polynomials. Crate-internal: the public
//! factorization API lives in [`crate::factor`], finite fields in
//! [`crate::gf`].
//!
//! Polynomials are `Vec<u64>` with ascending coefficients in `[0, p)` and no
//! trailing zeros (the zero polynomial is empty). All products go through
//! `u128`, so any prime below 2^63 is safe.

/// Arithmetic in GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Zp {
    pub p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p >= 2);
        Zp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat (p prime, a nonzero mod p).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }
}

/// Ascending coefficients in `[0, p)`, no trailing zeros.
pub(crate) type ZPoly = Vec<u64>;

pub(crate) fn znormalize(mut v: ZPoly) -> ZPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn zdeg(f: &ZPoly) -> Option<usize> {
    f.len().checked_sub(1)
}

#[cfg(test)]
pub(crate) fn zadd(zp: Zp, f: &ZPoly, g: &ZPoly) -> ZPoly {
    let mut v = vec![0u64; f.len().max(g.len())];
    for (i, &c) in f.iter().enumerate() {
        v[i] = zp.add(v[i], c);
    }
    for (i, &c) in g.iter().enumerate() {
        v[i] = zp.add(v[i], c);
    }
    znormalize(v)
}

pub(crate) fn zsub(zp: Zp, f: &ZPoly, g: &ZPoly) -> ZPoly {
    let mut v = vec![0u64; f.len().max(g.len())];
    for (i, &c) in f.iter().enumerate() {
        v[i] = zp.add(v[i], c);
    }
    for (i, &c) in g.iter().enumerate() {
        v[i] = zp.sub(v[i], c);
    }
    znormalize(v)
}

pub(crate) fn zmul(zp: Zp, f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            v[i + j] = zp.add(v[i + j], zp.mul(a, b));
        }
    }
    znormalize(v)
}

pub(crate) fn zscale(zp: Zp, f: &ZPoly, c: u64) -> ZPoly {
    znormalize(f.iter().map(|&a| zp.mul(a, c)).collect())
}

/// Scale to leading coefficient 1. Zero polynomial stays zero.
pub(crate) fn zmonic(zp: Zp, f: &ZPoly) -> ZPoly {
    match f.last() {
        None => Vec::new(),
        Some(&1) => f.clone(),
        Some(&lc) => zscale(zp, f, zp.inv(lc)),
    }
}

/// Division with remainder; `g` must be nonzero.
pub(crate) fn zdivmod(zp: Zp, f: &ZPoly, g: &ZPoly) -> (ZPoly, ZPoly) {
    assert!(!g.is_empty(), "division by zero polynomial");
    if f.len() < g.len() {
        return (Vec::new(), f.clone());
    }
    let lg_inv = zp.inv(*g.last().expect("nonzero"));
    let mut rem = f.clone();
    let mut quot = vec![0u64; f.len() - g.len() + 1];
    for i in (g.len() - 1..f.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        let q = zp.mul(c, lg_inv);
        quot[i - (g.len() - 1)] = q;
        for (j, &gc) in g.iter().enumerate() {
            let idx = i - (g.len() - 1) + j;
            rem[idx] = zp.sub(rem[idx], zp.mul(q, gc));
        }
    }
    (znormalize(quot), znormalize(rem))
}

pub(crate) fn zrem(zp: Zp, f: &ZPoly, g: &ZPoly) -> ZPoly {
    zdivmod(zp, f, g).1
}

/// Monic gcd by the Euclidean algorithm; `zgcd(0,0) = 0`.
pub(crate) fn zgcd(zp: Zp, f: &ZPoly, g: &ZPoly) -> ZPoly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_empty() {
        let r = zrem(zp, &a, &b);
        a = b;
        b = r;
    }
    zmonic(zp, &a)
}

/// Extended Euclid: returns monic `d = gcd(f,g)` and `s, t` with
/// `s*f + t*g = d`.
pub(crate) fn zxgcd(zp: Zp, f: &ZPoly, g: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1): (ZPoly, ZPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (ZPoly, ZPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = zdivmod(zp, &r0, &r1);
        let s = zsub(zp, &s0, &zmul(zp, &q, &s1));
        let t = zsub(zp, &t0, &zmul(zp, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    // Normalize to a monic gcd.
    match r0.last() {
        None | Some(&1) => (r0, s0, t0),
        Some(&lc) => {
            let inv = zp.inv(lc);
            (zscale(zp, &r0, inv), zscale(zp, &s0, inv), zscale(zp, &t0, inv))
        }
    }
}

/// `base^e mod f` by square and multiply.
pub(crate) fn zpowmod(zp: Zp, base: &ZPoly, mut e: u64, f: &ZPoly) -> ZPoly {
    let mut acc: ZPoly = vec![1];
    let mut b = zrem(zp, base, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = zrem(zp, &zmul(zp, &acc, &b), f);
        }
        b = zrem(zp, &zmul(zp, &b, &b), f);
        e >>= 1;
    }
    acc
}

/// Whether a monic polynomial of degree >= 1 is irreducible over GF(p), by
/// trial division against every monic polynomial of degree up to deg/2.
/// Intended for the small moduli used to build finite fields.
pub(crate) fn zis_irreducible_small(zp: Zp, f: &ZPoly) -> bool {
    let d = zdeg(f).expect("nonzero");
    assert!(d >= 1);
    if d == 1 {
        return true;
    }
    for dd in 1..=d / 2 {
        // Monic divisors of degree dd: enumerate the lower dd coefficients.
        let count = zp.p.pow(dd as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(dd + 1);
            let mut x = idx;
            for _ in 0..dd {
                cand.push(x % zp.p);
                x /= zp.p;
            }
            cand.push(1);
            if zrem(zp, f, &cand).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Nullspace basis of an n-by-n matrix over GF(p) (row-major), via Gaussian
/// elimination. Each basis vector has length n.
fn nullspace(zp: Zp, mut m: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut pivot_cols = vec![false; n];
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, r);
        let inv = zp.inv(m[row][col]);
        for j in 0..n {
            m[row][j] = zp.mul(m[row][j], inv);
        }
        for r2 in 0..n {
            if r2 != row && m[r2][col] != 0 {
                let factor = m[r2][col];
                for j in 0..n {
                    let t = zp.mul(factor, m[row][j]);
                    m[r2][j] = zp.sub(m[r2][j], t);
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_cols[col] = true;
        row += 1;
        if row == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols[free] {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = zp.sub(0, m[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp factorization of a monic squarefree polynomial over GF(p).
/// Returns monic irreducible factors, sorted canonically.
pub(crate) fn berlekamp_factor(zp: Zp, f: &ZPoly) -> Vec<ZPoly> {
    let n = zdeg(f).expect("nonzero input");
    assert!(*f.last().expect("nonzero") == 1, "input must be monic");
    if n == 1 {
        return vec![f.clone()];
    }
    // Q row i = X^(p*i) mod f; Berlekamp subalgebra = nullspace of (Q - I)^T.
    let xp = zpowmod(zp, &vec![0, 1], zp.p, f);
    let mut rows: Vec<ZPoly> = Vec::with_capacity(n);
    let mut cur: ZPoly = vec![1];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = zrem(zp, &zmul(zp, &cur, &xp), f);
    }
    // We need v with v*Q = v (v as a row vector of coefficients); that is
    // (Q^T - I) v^T = 0 where Q^T[j][i] = coeff j of row i.
    let mut mt = vec![vec![0u64; n]; n];
    for (i, r) in rows.iter().enumerate() {
        for (j, &c) in r.iter().enumerate() {
            mt[j][i] = c;
        }
    }
    for i in 0..n {
        mt[i][i] = zp.sub(mt[i][i], 1);
    }
    let basis = nullspace(zp, mt);
    let r = basis.len();
    debug_assert!(r >= 1);
    let mut factors: Vec<ZPoly> = vec![f.clone()];
    if r == 1 {
        return factors;
    }
    'outer: for v in &basis {
        let vp = znormalize(v.clone());
        if zdeg(&vp).map_or(true, |d| d == 0) {
            continue; // constant vectors split nothing
        }
        let mut next: Vec<ZPoly> = Vec::new();
        for w in factors.drain(..) {
            if zdeg(&w) == Some(1) {
                next.push(w);
                continue;
            }
            let mut pieces: Vec<ZPoly> = Vec::new();
            let mut rest = w;
            for s in 0..zp.p {
                let shifted = zsub(zp, &vp, &vec![s]);
                let g = zgcd(zp, &rest, &shifted);
                if let Some(d) = zdeg(&g) {
                    if d >= 1 && d < zdeg(&rest).unwrap_or(0) {
                        rest = zdivmod(zp, &rest, &g).0;
                        pieces.push(g);
                    }
                }
                if zdeg(&rest) == Some(0) {
                    break;
                }
            }
            if zdeg(&rest).map_or(false, |d| d >= 1) {
                pieces.push(zmonic(zp, &rest));
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    debug_assert_eq!(factors.len(), r, "Berlekamp split incomplete");
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
    factors
}
