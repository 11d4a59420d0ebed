//! Sturm chains: exact real-root counting, isolation, and comparison.
//!
//! All queries are answered with integer/rational arithmetic only. Closed
//! intervals are handled exactly: when an endpoint is itself a root it is
//! counted directly and divided out before the open-interval variation count,
//! so clustered roots can never be mis-attributed to a neighboring interval.

use crate::intpoly::{pseudo_rem, squarefree_part, IntPoly, PolyError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::cmp::Ordering;

/// Closed rational interval `[lo, hi]`, `lo <= hi`. A degenerate interval
/// (`lo == hi`) pins a value exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// A Sturm chain for a nonzero polynomial. Consecutive elements follow the
/// classical rule `s_{i+1} = -rem(s_{i-1}, s_i)`, realized with primitive
/// pseudo-remainders whose sign is corrected for the implied multiplier, so
/// every element stays in integer coefficients.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let s0 = p.primitive_part()?;
        let mut chain = vec![s0.clone()];
        let d = s0.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_part()?);
        }
        while chain.last().map_or(false, |s| !s.is_constant()) {
            let n = chain.len();
            let (r, mult_sign) = pseudo_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // Want a positive multiple of -rem(s_{n-2}, s_{n-1}); the pseudo
            // remainder is lc^delta * rem, so flip unless the multiplier was
            // already negative.
            let signed = if mult_sign > 0 { -&r } else { r };
            chain.push(signed.primitive_part()?);
        }
        Ok(SturmChain { chain })
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|s| s.sign_at(x)))
    }

    fn sign_at_pos_inf(p: &IntPoly) -> i8 {
        match p.leading().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    fn sign_at_neg_inf(p: &IntPoly) -> i8 {
        let s = Self::sign_at_pos_inf(p);
        if p.degree().map_or(false, |d| d % 2 == 1) {
            -s
        } else {
            s
        }
    }

    fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(Self::sign_at_neg_inf))
    }

    fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(Self::sign_at_pos_inf))
    }

    /// Distinct real roots in the open interval `(a, b)`. Both endpoints must
    /// be non-roots; use the closed-interval entry points otherwise.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        debug_assert!(self.chain[0].sign_at(a) != 0, "open-count endpoint is a root");
        debug_assert!(self.chain[0].sign_at(b) != 0, "open-count endpoint is a root");
        if a == b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct real roots on the whole line.
    pub fn count_whole_line(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Outcome of a closed-interval count, recording whether either endpoint was
/// itself a root (and hence contributed to the count).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountDetail {
    pub count: usize,
    pub lo_is_root: bool,
    pub hi_is_root: bool,
}

/// Divide out the linear factor for rational root `r` as often as it divides.
fn deflate_root(p: &IntPoly, r: &BigRational) -> IntPoly {
    let lin = IntPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
    let mut q = p.clone();
    while let Ok(next) = q.exact_div(&lin) {
        q = next;
        if q.is_zero() {
            break;
        }
    }
    q
}

/// Distinct real roots of `p` in the closed interval, with endpoint detail.
///
/// Endpoint roots are detected exactly and divided out of a working copy so
/// the interior count runs with non-root endpoints, which keeps the result
/// exact even when other roots crowd arbitrarily close to an endpoint.
pub fn sturm_count_detailed(
    p: &IntPoly,
    interval: &RationalInterval,
) -> Result<CountDetail, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let lo_is_root = p.sign_at(&interval.lo) == 0;
    let hi_is_root = !interval.is_point() && p.sign_at(&interval.hi) == 0;
    if interval.is_point() {
        return Ok(CountDetail { count: usize::from(lo_is_root), lo_is_root, hi_is_root: lo_is_root });
    }
    let mut q = p.clone();
    if lo_is_root {
        q = deflate_root(&q, &interval.lo);
    }
    if hi_is_root {
        q = deflate_root(&q, &interval.hi);
    }
    let interior = if q.is_constant() {
        0
    } else {
        SturmChain::new(&q)?.count_open(&interval.lo, &interval.hi)
    };
    Ok(CountDetail {
        count: interior + usize::from(lo_is_root) + usize::from(hi_is_root),
        lo_is_root,
        hi_is_root,
    })
}

/// Distinct real roots of `p` in the closed interval (endpoints included).
pub fn sturm_count(p: &IntPoly, interval: &RationalInterval) -> Result<usize, PolyError> {
    Ok(sturm_count_detailed(p, interval)?.count)
}

/// Distinct real roots of `p` over the whole real line.
pub fn count_real_roots(p: &IntPoly) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(0);
    }
    Ok(SturmChain::new(p)?.count_whole_line())
}

/// Whether every complex root of `p` is real: the distinct real-root count of
/// the squarefree part equals its degree. Nonzero constants pass vacuously.
pub fn is_totally_real(p: &IntPoly) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(true);
    }
    let sf = squarefree_part(p)?;
    Ok(count_real_roots(&sf)? == sf.deg())
}

/// A rational bound `B > 0` with every real root of `p` inside `(-B, B)`,
/// and `p(-B), p(B)` nonzero (Cauchy bound plus one).
fn open_root_bound(p: &IntPoly) -> BigRational {
    let lc = p.leading().abs();
    let cauchy = BigRational::one()
        + BigRational::new(p.norm1(), lc.max(BigInt::one()));
    cauchy + BigRational::one()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremeRoot {
    Smallest,
    Largest,
}

fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

/// Isolate the largest or smallest real root of `p` in a closed rational
/// interval of width at most `width` (default `1/10^9`). The returned
/// interval contains exactly one distinct root of `p` and no root of `p` lies
/// beyond it on the chosen side. A rational root hit exactly comes back as a
/// degenerate point interval. `Err(NoRealRoots)` if `p` has no real root.
pub fn isolate_extreme_root(
    p: &IntPoly,
    which: ExtremeRoot,
    width: Option<BigRational>,
) -> Result<RationalInterval, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(PolyError::NoRealRoots);
    }
    let target = width.unwrap_or_else(default_width);
    let q = squarefree_part(p)?;
    if q.is_constant() {
        return Err(PolyError::NoRealRoots);
    }
    let chain = SturmChain::new(&q)?;
    if chain.count_whole_line() == 0 {
        return Err(PolyError::NoRealRoots);
    }
    let bound = open_root_bound(&q);
    let mut lo = -&bound;
    let mut hi = bound;
    // Invariant: endpoints are non-roots, (lo, hi) contains at least one root,
    // and no root lies beyond the extreme side's endpoint.
    loop {
        let count = chain.count_open(&lo, &hi);
        debug_assert!(count >= 1);
        if count == 1 && &hi - &lo <= target {
            return Ok(RationalInterval::new(lo, hi));
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        if q.sign_at(&mid) == 0 {
            // Exact hit. Shrink a symmetric punch-out until it contains only
            // this root, then either finish or continue past it.
            let mut w = (&hi - &lo) / BigRational::from_integer(BigInt::from(4));
            let (ml, mh) = loop {
                let ml = &mid - &w;
                let mh = &mid + &w;
                if q.sign_at(&ml) != 0
                    && q.sign_at(&mh) != 0
                    && chain.count_open(&ml, &mh) == 1
                {
                    break (ml, mh);
                }
                w = w / BigRational::from_integer(BigInt::from(2));
            };
            let beyond = match which {
                ExtremeRoot::Largest => chain.count_open(&mh, &hi),
                ExtremeRoot::Smallest => chain.count_open(&lo, &ml),
            };
            if beyond == 0 {
                return Ok(RationalInterval::point(mid));
            }
            match which {
                ExtremeRoot::Largest => lo = mh,
                ExtremeRoot::Smallest => hi = ml,
            }
        } else {
            let upper_count = chain.count_open(&mid, &hi);
            match which {
                ExtremeRoot::Largest => {
                    if upper_count >= 1 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                ExtremeRoot::Smallest => {
                    if count - upper_count >= 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
            }
        }
    }
}

/// Isolating intervals for every distinct real root of `p`, in ascending
/// order, pairwise disjoint, each of width at most `width` (default `1/10^9`).
/// Rational roots come back as degenerate point intervals.
pub fn isolate_real_roots(
    p: &IntPoly,
    width: Option<BigRational>,
) -> Result<Vec<RationalInterval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let target = width.unwrap_or_else(default_width);
    let q = squarefree_part(p)?;
    if q.is_constant() {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&q)?;
    let bound = open_root_bound(&q);
    let mut out: Vec<RationalInterval> = Vec::new();
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let count = chain.count_open(&lo, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo <= target {
            out.push(RationalInterval::new(lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        if q.sign_at(&mid) == 0 {
            let mut w = (&hi - &lo) / BigRational::from_integer(BigInt::from(4));
            let (ml, mh) = loop {
                let ml = &mid - &w;
                let mh = &mid + &w;
                if q.sign_at(&ml) != 0
                    && q.sign_at(&mh) != 0
                    && chain.count_open(&ml, &mh) == 1
                {
                    break (ml, mh);
                }
                w = w / BigRational::from_integer(BigInt::from(2));
            };
            out.push(RationalInterval::point(mid));
            stack.push((lo, ml));
            stack.push((mh, hi));
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    debug_assert_eq!(out.len(), chain.count_whole_line());
    Ok(out)
}

/// How many extra bisection steps a comparison may take before giving up.
const REFINE_CAP: usize = 60;

/// Compare the unique root of `p` inside `encl` against the rational `q`.
///
/// `encl` must isolate a simple real root of `p`: either a degenerate point
/// interval pinning a rational root, or an interval with non-root endpoints
/// containing exactly one root. Refines by bisection; if after `REFINE_CAP`
/// halvings the question is still open (it cannot be, for a genuine isolating
/// interval) reports `RefinementLimit`.
pub fn cmp_root_vs_rational(
    p: &IntPoly,
    encl: &RationalInterval,
    q: &BigRational,
) -> Result<Ordering, PolyError> {
    if encl.is_point() {
        return Ok(encl.lo.cmp(q));
    }
    // Exact-hit shortcut: q itself is the enclosed root.
    if encl.contains(q) && p.sign_at(q) == 0 {
        return Ok(Ordering::Equal);
    }
    let mut lo = encl.lo.clone();
    let mut hi = encl.hi.clone();
    let mut sign_lo = p.sign_at(&lo);
    debug_assert!(sign_lo != 0 && p.sign_at(&hi) != 0, "enclosure endpoint is a root");
    for _ in 0..REFINE_CAP {
        if hi < *q {
            return Ok(Ordering::Less);
        }
        if lo > *q {
            return Ok(Ordering::Greater);
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let sign_mid = p.sign_at(&mid);
        if sign_mid == 0 {
            return Ok(mid.cmp(q));
        }
        if sign_mid == sign_lo {
            lo = mid;
            sign_lo = sign_mid;
        } else {
            hi = mid;
        }
    }
    Err(PolyError::RefinementLimit)
}

/// Narrow an isolating interval (simple root, sign change across it) below
/// the requested width by bisection. An exact hit collapses to a point.
pub fn refine_enclosure(
    p: &IntPoly,
    encl: &RationalInterval,
    width: &BigRational,
) -> RationalInterval {
    if encl.is_point() {
        return encl.clone();
    }
    let mut lo = encl.lo.clone();
    let mut hi = encl.hi.clone();
    let mut sign_lo = p.sign_at(&lo);
    debug_assert!(sign_lo != 0, "enclosure endpoint is a root");
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let sign_mid = p.sign_at(&mid);
        if sign_mid == 0 {
            return RationalInterval::point(mid);
        }
        if sign_mid == sign_lo {
            lo = mid;
            sign_lo = sign_mid;
        } else {
            hi = mid;
        }
    }
    RationalInterval::new(lo, hi)
}

/// Number of distinct real roots of `p` that are strictly larger than `q`.
pub fn count_roots_above(p: &IntPoly, q: &BigRational) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(0);
    }
    let deflated = if p.sign_at(q) == 0 { deflate_root(p, q) } else { p.clone() };
    if deflated.is_constant() {
        return Ok(0);
    }
    let chain = SturmChain::new(&deflated)?;
    let bound = open_root_bound(&deflated);
    Ok(chain.count_open(q, &bound))
}
