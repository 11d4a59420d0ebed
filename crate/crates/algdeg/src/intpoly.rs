//! Dense univariate polynomials over the integers.
//!
//! `IntPoly` stores coefficients in ascending order with no trailing zeros;
//! the zero polynomial is the empty coefficient vector. All arithmetic is
//! exact over `BigInt`. The module also provides the classical exact
//! subroutines everything else is built from: content/primitive part, gcd by
//! a primitive pseudo-remainder sequence, squarefree part, resultants via
//! fraction-free (Bareiss) elimination, and discriminants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("the zero polynomial is not a valid operand here")]
    ZeroPolynomial,
    #[error("polynomial division is not exact")]
    NonExactDivision,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial has no real roots")]
    NoRealRoots,
    #[error("interval comparison undecided after refinement limit")]
    RefinementLimit,
}

/// Dense integer polynomial, coefficients ascending.
///
/// Invariant: the last stored coefficient is nonzero; the zero polynomial is
/// represented by an empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::from_coeffs(v)
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience for literals in tests and tables: ascending `i64` coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(v)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // Homogenized evaluation: p(a/b) = (sum c_i a^i b^(d-i)) / b^d.
        let d = self.deg();
        let (a, b) = (x.numer(), x.denom());
        let mut num = BigInt::zero();
        let mut bpow = BigInt::one();
        let mut terms: Vec<BigInt> = Vec::with_capacity(d + 1);
        let mut apow = BigInt::one();
        for c in &self.coeffs {
            terms.push(c * &apow);
            apow *= a;
        }
        for t in terms.into_iter().rev() {
            num += t * &bpow;
            bpow *= b;
        }
        BigRational::new(num, b.pow(d as u32))
    }

    /// Sign of `p(x)` without building the rational value: -1, 0, or 1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let d = self.deg();
        let (a, b) = (x.numer(), x.denom()); // b > 0 by BigRational's invariant
        let mut num = BigInt::zero();
        let mut apow = BigInt::one();
        let mut pows: Vec<BigInt> = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            pows.push(apow.clone());
            apow *= a;
        }
        let mut bpow = BigInt::one();
        for i in (0..=d).rev() {
            num += &self.coeffs[i] * &pows[i] * &bpow;
            bpow *= b;
        }
        match num.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// `p(aX + b)`, exact.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            // acc = acc*(aX + b) + c
            let shifted = acc.mul_by_linear(a, b);
            acc = &shifted + &IntPoly::constant(c.clone());
        }
        acc
    }

    fn mul_by_linear(&self, a: &BigInt, b: &BigInt) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let n = self.coeffs.len();
        let mut v = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i + 1] += c * a;
            v[i] += c * b;
        }
        IntPoly::from_coeffs(v)
    }

    /// `p(cX)`: coefficient `i` picks up a factor `c^i`.
    pub fn scale_argument(&self, c: &BigInt) -> IntPoly {
        let mut pow = BigInt::one();
        let v = self
            .coeffs
            .iter()
            .map(|ci| {
                let t = ci * &pow;
                pow *= c;
                t
            })
            .collect();
        IntPoly::from_coeffs(v)
    }

    /// Multiply by `X^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Content: the positive gcd of the coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// `(content, primitive part)`. The primitive part keeps the sign of the
    /// leading coefficient.
    pub fn content_primitive(&self) -> Result<(BigInt, IntPoly), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let c = self.content();
        let prim = IntPoly::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect());
        Ok((c, prim))
    }

    pub fn primitive_part(&self) -> Result<IntPoly, PolyError> {
        Ok(self.content_primitive()?.1)
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized_primitive(&self) -> Result<IntPoly, PolyError> {
        let p = self.primitive_part()?;
        Ok(if p.leading().is_negative() { -&p } else { p })
    }

    /// Sum of absolute coefficient values.
    pub fn norm1(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Largest absolute coefficient value.
    pub fn norm_inf(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exact division; `Err(NonExactDivision)` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &IntPoly) -> Result<IntPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.deg() < d.deg() {
            return Err(PolyError::NonExactDivision);
        }
        let dn = d.deg();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.deg() - dn + 1];
        for i in (dn..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(&lead);
            if !r.is_zero() {
                return Err(PolyError::NonExactDivision);
            }
            for j in 0..dn {
                let t = &q * &d.coeffs[j];
                rem[i - dn + j] -= t;
            }
            rem[i] = BigInt::zero();
            quot[i - dn] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonExactDivision);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// `true` when `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &IntPoly) -> bool {
        self.exact_div(d).is_ok()
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            v[i] += c;
        }
        IntPoly::from_coeffs(v)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            v[i] -= c;
        }
        IntPoly::from_coeffs(v)
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(v)
    }
}

/// Canonical ordering for reports and factor lists: by degree, then by
/// coefficients from the leading one down.
impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text form, descending powers: `X^5 - 10X^3 - 20X^2 - 15X - 4`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{}", i)?,
            }
        }
        Ok(())
    }
}

/// Pseudo-remainder of `f` by `g`: the remainder of `lc(g)^(deg f - deg g + 1) * f`
/// divided by `g`, which stays in integer coefficients. Returns the remainder
/// together with the sign (+1/-1) of the implied multiplier `lc(g)^(deg f - deg g + 1)`.
pub fn pseudo_rem(f: &IntPoly, g: &IntPoly) -> (IntPoly, i8) {
    assert!(!g.is_zero(), "pseudo_rem by zero");
    if f.is_zero() || f.deg() < g.deg() {
        return (f.clone(), 1);
    }
    let l = g.leading();
    let delta = f.deg() - g.deg() + 1;
    let mut r = f.clone();
    let mut remaining = delta;
    while !r.is_zero() && r.deg() >= g.deg() {
        let k = r.deg() - g.deg();
        // r = l*r - lead(r) * X^k * g
        let lead = r.leading();
        let mut v = vec![BigInt::zero(); r.coeffs.len()];
        for (i, c) in r.coeffs.iter().enumerate() {
            v[i] = c * &l;
        }
        for (j, c) in g.coeffs.iter().enumerate() {
            v[k + j] -= &lead * c;
        }
        r = IntPoly::from_coeffs(v);
        remaining -= 1;
    }
    // Pad so the total multiplier is exactly l^delta, keeping behavior uniform.
    for _ in 0..remaining {
        r = r.scale(&l);
    }
    let mult_negative = l.is_negative() && delta % 2 == 1;
    (r, if mult_negative { -1 } else { 1 })
}

/// Greatest common divisor in `Z[X]`: gcd of contents times the primitive
/// gcd of primitive parts, normalized to a positive leading coefficient.
/// `poly_gcd(0, 0) = 0`.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return normalize_sign(b);
    }
    if b.is_zero() {
        return normalize_sign(a);
    }
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let mut f = a.primitive_part().expect("nonzero");
    let mut g = b.primitive_part().expect("nonzero");
    if f.deg() < g.deg() {
        std::mem::swap(&mut f, &mut g);
    }
    // Primitive PRS: take primitive parts after each pseudo-remainder step to
    // keep coefficient growth in check.
    while !g.is_zero() {
        let (r, _) = pseudo_rem(&f, &g);
        f = g;
        g = if r.is_zero() {
            IntPoly::zero()
        } else {
            r.primitive_part().expect("nonzero")
        };
    }
    let prim = normalize_sign(&f);
    prim.scale(&c)
}

fn normalize_sign(p: &IntPoly) -> IntPoly {
    if p.leading().is_negative() {
        -p
    } else {
        p.clone()
    }
}

/// Squarefree part `p / gcd(p, p')`: primitive, positive leading coefficient,
/// same root set as `p` with every root simple.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(IntPoly::one());
    }
    let g = poly_gcd(p, &p.derivative());
    let sf = p.exact_div(&g)?;
    sf.normalized_primitive()
}

/// Resultant of `f` and `g` via Bareiss (fraction-free) elimination on the
/// Sylvester matrix. Zero if either input is zero; 1 if both are nonzero
/// constants.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (m, n) = (f.deg(), g.deg());
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    if m == 0 {
        return f.leading().pow(n as u32);
    }
    if n == 0 {
        return g.leading().pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Bareiss' identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Discriminant: `(-1)^(d(d-1)/2) * res(p, p') / lc(p)` for `deg p >= 1`.
pub fn discriminant(p: &IntPoly) -> Result<BigInt, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(PolyError::ConstantPolynomial);
    }
    let d = p.deg();
    if d == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(p, &p.derivative());
    let (q, rem) = r.div_rem(&p.leading());
    debug_assert!(rem.is_zero());
    let flips = (d * (d - 1) / 2) % 2 == 1;
    Ok(if flips { -q } else { q })
}
