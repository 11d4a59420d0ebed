//! Exact factorization of integer polynomials.
//!
//! Pipeline: strip unit and content, Yun's algorithm for the squarefree
//! decomposition, then per squarefree part the classical modular route —
//! reduce mod a prime that keeps the polynomial squarefree, factor with
//! Berlekamp, lift the factors with quadratic Hensel steps until the modulus
//! clears twice the Mignotte coefficient bound, and recombine subsets
//! (Zassenhaus) with trial exact division. Non-monic parts are factored
//! through the standard monicization substitution. Every result is certified
//! by multiplying the factors back together; an inconsistency is a bug and
//! panics rather than returning a wrong answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::intpoly::{poly_gcd, resultant, IntPoly, PolyError};
use crate::zmodpoly::{berlekamp_factor, zdivmod, zmul, zrem, zsub, zxgcd, ZPoly, Zp};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("discriminant {0} is not positive; no real quadratic irrational")]
    NonPositiveDiscriminant(BigInt),
    #[error("discriminant {0} is a perfect square; the roots are rational")]
    SquareDiscriminant(BigInt),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `unit * content * prod factors[i].0 ^ factors[i].1`, with primitive
/// positive-leading-coefficient irreducible factors sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: i8,
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    /// Multiply the factorization back out.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(BigInt::from(self.unit) * &self.content);
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e);
        }
        acc
    }
}

/// Factor into irreducibles over the integers. Certified: the expanded
/// factorization is asserted equal to the input before returning.
pub fn factor(q: &IntPoly) -> Result<Factorization, FactorError> {
    if q.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let (content, prim) = q.content_primitive()?;
    let unit: i8 = if prim.leading().is_negative() { -1 } else { 1 };
    let work = if unit < 0 { -&prim } else { prim };
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    if !work.is_constant() {
        for (part, mult) in yun_squarefree(&work) {
            for irr in factor_squarefree(&part) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort();
    let out = Factorization { unit, content, factors };
    assert_eq!(out.expand(), *q, "factorization failed to certify");
    Ok(out)
}

/// Is the polynomial irreducible over the rationals? Content is ignored;
/// constants are rejected as neither reducible nor irreducible.
pub fn is_irreducible(p: &IntPoly) -> Result<bool, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(FactorError::ConstantPolynomial);
    }
    let f = factor(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

/// Minimal polynomial X^2 - trace X + norm of a real quadratic irrational
/// with the given trace and norm. Rejects inputs whose discriminant is not
/// positive (no real irrational pair) or a perfect square (rational roots).
pub fn min_poly_of_quadratic_surd(
    trace: &BigInt,
    norm: &BigInt,
) -> Result<IntPoly, FactorError> {
    let disc: BigInt = trace * trace - BigInt::from(4) * norm;
    if !disc.is_positive() {
        return Err(FactorError::NonPositiveDiscriminant(disc));
    }
    let root = disc.sqrt();
    if &root * &root == disc {
        return Err(FactorError::SquareDiscriminant(disc));
    }
    Ok(IntPoly::from_coeffs(vec![norm.clone(), -trace, BigInt::one()]))
}

/// Yun's squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: returns pairwise coprime squarefree parts with their
/// multiplicities, product over parts of part^mult equal to the input.
fn yun_squarefree(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    debug_assert!(f.deg() >= 1 && f.leading().is_positive());
    let fp = f.derivative();
    let g = poly_gcd(f, &fp);
    let mut c = f.exact_div(&g).expect("gcd divides f");
    let mut d = &fp.exact_div(&g).expect("gcd divides f'") - &c.derivative();
    let mut out = Vec::new();
    let mut mult = 1u32;
    while c.deg() >= 1 {
        let part = poly_gcd(&c, &d);
        c = c.exact_div(&part).expect("squarefree part divides");
        d = &d.exact_div(&part).expect("squarefree part divides") - &c.derivative();
        if part.deg() >= 1 {
            out.push((part, mult));
        }
        mult += 1;
    }
    out
}

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient into irreducibles (primitive, positive leading coefficient).
fn factor_squarefree(s: &IntPoly) -> Vec<IntPoly> {
    if s.deg() == 1 {
        return vec![s.clone()];
    }
    let lc = s.leading();
    if lc.is_one() {
        return factor_monic_squarefree(s);
    }
    // Monicize: F(X) = lc^(n-1) s(X/lc) is monic with the roots scaled by lc.
    let n = s.deg();
    let coeffs: Vec<BigInt> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i == n { BigInt::one() } else { c * lc.pow((n - 1 - i) as u32) })
        .collect();
    let monic = IntPoly::from_coeffs(coeffs);
    factor_monic_squarefree(&monic)
        .iter()
        .map(|h| {
            h.scale_argument(&lc)
                .normalized_primitive()
                .expect("factors of a squarefree polynomial are nonzero")
        })
        .collect()
}

fn factor_monic_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    debug_assert!(f.is_monic() && f.deg() >= 2);
    let p = choose_prime(f);
    let zp = Zp::new(p);
    let parts = berlekamp_factor(zp, &int_to_zpoly(f, zp));
    if parts.len() == 1 {
        return vec![f.clone()];
    }
    let bound = mignotte_bound(f);
    let mut cap = BigInt::from(p);
    let two_b = 2 * &bound;
    while cap <= two_b {
        cap = &cap * &cap;
    }
    let lifted = lift_factors(&mreduce(f, &cap), &parts, zp, &cap);
    let mut out = recombine(f, lifted, &cap, &bound);
    out.sort();
    out
}

/// Smallest odd prime keeping the squarefree `f` squarefree mod p: p must
/// not divide the resultant of f and f'.
fn choose_prime(f: &IntPoly) -> u64 {
    let bad = resultant(f, &f.derivative());
    debug_assert!(!bad.is_zero(), "prime selection requires a squarefree input");
    arith::primes_from(3)
        .find(|&p| !(&bad % BigInt::from(p)).is_zero())
        .expect("only finitely many primes divide the resultant")
}

/// Coefficient bound for any monic divisor of the monic `f`:
/// 2^n * ceil(sqrt(n+1)) * max |coeff|.
fn mignotte_bound(f: &IntPoly) -> BigInt {
    let n = f.deg();
    let m = BigInt::from(n as u64 + 1);
    let mut root = m.sqrt();
    if &root * &root < m {
        root += 1;
    }
    (BigInt::one() << n) * root * f.norm_inf()
}

fn int_to_zpoly(f: &IntPoly, zp: Zp) -> ZPoly {
    let m = BigInt::from(zp.p);
    f.coeffs()
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("residue fits"))
        .collect()
}

fn zpoly_to_int(f: &ZPoly) -> IntPoly {
    IntPoly::from_coeffs(f.iter().map(|&c| BigInt::from(c)).collect())
}

/// Canonical representative with every coefficient in [0, m).
fn mreduce(a: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::from_coeffs(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mmul(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    mreduce(&(a * b), m)
}

/// Division with remainder mod m by a monic divisor (leading coefficient
/// exactly 1 in the canonical representative).
fn mdivrem_monic(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(b.is_monic());
    let db = b.deg();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    if rem.len() <= db {
        return (IntPoly::zero(), mreduce(a, m));
    }
    let da = rem.len() - 1;
    let mut quo = vec![BigInt::zero(); da - db + 1];
    for i in (db..=da).rev() {
        let c = rem[i].mod_floor(m);
        if !c.is_zero() {
            for (j, bj) in b.coeffs().iter().enumerate() {
                let idx = i - db + j;
                rem[idx] = (&rem[idx] - &c * bj).mod_floor(m);
            }
        }
        quo[i - db] = c;
    }
    rem.truncate(db);
    let rem = rem.into_iter().map(|c| c.mod_floor(m)).collect();
    (IntPoly::from_coeffs(quo), IntPoly::from_coeffs(rem))
}

struct LiftPair {
    g: IntPoly,
    h: IntPoly,
    s: IntPoly,
    t: IntPoly,
}

/// One quadratic Hensel step: from f = g h and s g + t h = 1 (mod m) to the
/// same congruences mod m^2, preserving monicity and degrees.
fn hensel_step(f: &IntPoly, lp: &LiftPair, m: &BigInt) -> LiftPair {
    let m2 = m * m;
    let e = mreduce(&(f - &(&lp.g * &lp.h)), &m2);
    let (q, r) = mdivrem_monic(&mmul(&lp.s, &e, &m2), &lp.h, &m2);
    let te = &lp.t * &e;
    let qg = &q * &lp.g;
    let g = mreduce(&(&(&lp.g + &te) + &qg), &m2);
    let h = mreduce(&(&lp.h + &r), &m2);
    let sg = &lp.s * &g;
    let th = &lp.t * &h;
    let b = mreduce(&(&(&sg + &th) - &IntPoly::one()), &m2);
    let (c, d) = mdivrem_monic(&mmul(&lp.s, &b, &m2), &h, &m2);
    let s = mreduce(&(&lp.s - &d), &m2);
    let tb = &lp.t * &b;
    let cg = &c * &g;
    let t = mreduce(&(&(&lp.t - &tb) - &cg), &m2);
    debug_assert!(g.is_monic() && g.deg() == lp.g.deg());
    debug_assert!(h.is_monic() && h.deg() == lp.h.deg());
    LiftPair { g, h, s, t }
}

/// Lift the pairwise coprime monic mod-p factors of the monic `f` to
/// factors mod `cap`, where cap = p^(2^k). Peels one factor at a time:
/// lift (first, rest) as a pair, then recurse on the lifted remainder.
fn lift_factors(f: &IntPoly, parts: &[ZPoly], zp: Zp, cap: &BigInt) -> Vec<IntPoly> {
    if parts.len() == 1 {
        return vec![f.clone()];
    }
    let g0 = &parts[0];
    let mut h0: ZPoly = vec![1];
    for part in &parts[1..] {
        h0 = zmul(zp, &h0, part);
    }
    let (d, s_raw, _) = zxgcd(zp, g0, &h0);
    debug_assert_eq!(d, vec![1], "modular factors must be coprime");
    // Normalize the Bezout pair: deg s < deg h, then t = (1 - s g)/h exactly.
    let s0 = zrem(zp, &s_raw, &h0);
    let num = zsub(zp, &vec![1], &zmul(zp, &s0, g0));
    let (t0, r0) = zdivmod(zp, &num, &h0);
    debug_assert!(r0.is_empty());
    let mut pair = LiftPair {
        g: zpoly_to_int(g0),
        h: zpoly_to_int(&h0),
        s: zpoly_to_int(&s0),
        t: zpoly_to_int(&t0),
    };
    let mut m = BigInt::from(zp.p);
    while &m < cap {
        pair = hensel_step(f, &pair, &m);
        m = &m * &m;
    }
    let mut out = vec![pair.g];
    out.extend(lift_factors(&pair.h, &parts[1..], zp, cap));
    out
}

/// Map a canonical mod-m representative to the balanced one in (-m/2, m/2].
fn balance(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::from_coeffs(
        a.coeffs()
            .iter()
            .map(|c| if c > &half { c - m } else { c.clone() })
            .collect(),
    )
}

/// Zassenhaus recombination: try subset products of the lifted factors in
/// order of subset size, extract those that divide exactly, and declare the
/// remainder irreducible once no subset up to half the active count works.
fn recombine(
    f: &IntPoly,
    mut active: Vec<IntPoly>,
    modulus: &BigInt,
    bound: &BigInt,
) -> Vec<IntPoly> {
    let mut remaining = f.clone();
    let mut out = Vec::new();
    'restart: loop {
        if remaining.is_constant() {
            debug_assert_eq!(remaining, IntPoly::one());
            break;
        }
        let r = active.len();
        for size in 1..=r / 2 {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let mut cand = IntPoly::one();
                for &i in &idx {
                    cand = mmul(&cand, &active[i], modulus);
                }
                let cand = balance(&cand, modulus);
                if plausible_factor(&remaining, &cand, bound) {
                    if let Ok(quo) = remaining.exact_div(&cand) {
                        out.push(cand);
                        remaining = quo;
                        for &i in idx.iter().rev() {
                            active.remove(i);
                        }
                        continue 'restart;
                    }
                }
                if !next_combination(&mut idx, r) {
                    break;
                }
            }
        }
        out.push(remaining);
        break;
    }
    out
}

/// Cheap rejection before trial division: coefficient bound, and the
/// candidate's constant term must divide the remaining constant term.
fn plausible_factor(remaining: &IntPoly, cand: &IntPoly, bound: &BigInt) -> bool {
    if cand.norm_inf() > *bound {
        return false;
    }
    let r0 = remaining.coeff(0);
    if !r0.is_zero() {
        let c0 = cand.coeff(0);
        if c0.is_zero() || !(r0 % c0).is_zero() {
            return false;
        }
    }
    true
}

/// Advance `idx` to the next k-subset of 0..n in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
