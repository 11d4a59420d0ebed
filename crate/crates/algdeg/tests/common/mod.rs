//! Shared helpers for the integration suites: seeded random graph
//! generators and naive independent oracles (Kronecker factorization,
//! exhaustive algebraic-integer counting) used to cross-check the library's
//! optimized implementations.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use algdeg::intpoly::IntPoly;
use algdeg::graph::Graph;
use algdeg::rng::SplitMix64;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Random connected graph: a uniform random labeled tree plus a uniform
/// number of extra edges drawn without replacement from the non-tree pairs.
pub fn random_connected_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    assert!(n >= 1);
    let mut label: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut label);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..n {
        let j = rng.next_below(i as u64) as usize;
        pairs.push((label[i], label[j]));
    }
    let tree: BTreeSet<(usize, usize)> =
        pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !tree.contains(p))
        .collect();
    rng.shuffle(&mut rest);
    let extra = rng.next_below(rest.len() as u64 + 1) as usize;
    pairs.extend(rest.into_iter().take(extra));
    Graph::new(n, &pairs).expect("generated pairs are valid")
}

/// Random tree on `n` vertices (connected, minimal edge count).
pub fn random_tree(rng: &mut SplitMix64, n: usize) -> Graph {
    assert!(n >= 1);
    let mut label: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut label);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..n {
        let j = rng.next_below(i as u64) as usize;
        pairs.push((label[i], label[j]));
    }
    Graph::new(n, &pairs).expect("generated pairs are valid")
}

/// Path 0-1-...-(n-1).
pub fn path_graph(n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &pairs).expect("path pairs are valid")
}

/// Random connected k-regular graph: a circulant base randomized by
/// degree-preserving double-edge swaps. `None` when the swap sequence left
/// the graph disconnected; callers retry with fresh randomness.
pub fn random_regular_graph(rng: &mut SplitMix64, n: usize, k: usize) -> Option<Graph> {
    assert!(k < n && n * k % 2 == 0 && k >= 1);
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for off in 1..=k / 2 {
        for i in 0..n {
            set.insert(norm(i, (i + off) % n));
        }
    }
    if k % 2 == 1 {
        for i in 0..n / 2 {
            set.insert(norm(i, i + n / 2));
        }
    }
    let mut edges: Vec<(usize, usize)> = set.iter().copied().collect();
    for _ in 0..20 * n * k {
        let i = rng.next_below(edges.len() as u64) as usize;
        let j = rng.next_below(edges.len() as u64) as usize;
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (mut c, mut d) = edges[j];
        if rng.next_below(2) == 1 {
            std::mem::swap(&mut c, &mut d);
        }
        if a == c || a == d || b == c || b == d {
            continue;
        }
        let (n1, n2) = (norm(a, c), norm(b, d));
        if set.contains(&n1) || set.contains(&n2) {
            continue;
        }
        set.remove(&edges[i]);
        set.remove(&edges[j]);
        set.insert(n1);
        set.insert(n2);
        edges[i] = n1;
        edges[j] = n2;
    }
    let g = Graph::new(n, &edges).expect("swaps preserve simplicity");
    g.is_connected().then_some(g)
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("oracle coefficients stay small")
}

fn positive_divisors(v: i64) -> Vec<i64> {
    let v = v.abs();
    assert!(v > 0);
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            if d != v / d {
                out.push(v / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn signed_divisors(v: i64) -> Vec<i64> {
    positive_divisors(v)
        .into_iter()
        .flat_map(|d| [d, -d])
        .collect()
}

/// Degree-2 divisor of `h` by Kronecker's method: the leading coefficient
/// divides lc(h) and the values at 0 and 1 divide h(0) and h(1), so the
/// finitely many interpolants through admissible value triples exhaust all
/// candidates. `h` must have no rational roots (its values at 0, 1, -1 are
/// then nonzero).
fn find_quadratic_divisor(h: &IntPoly) -> Option<IntPoly> {
    let lc = to_i64(&h.leading());
    let h0 = to_i64(&h.coeff(0));
    let h1 = to_i64(&h.eval_int(&BigInt::from(1)));
    let hm1 = to_i64(&h.eval_int(&BigInt::from(-1)));
    assert!(h0 != 0 && h1 != 0 && hm1 != 0);
    for a in positive_divisors(lc) {
        for c in signed_divisors(h0) {
            for v1 in signed_divisors(h1) {
                let b = v1 - a - c;
                let gm1 = a - b + c;
                if gm1 == 0 || hm1 % gm1 != 0 {
                    continue;
                }
                let g = IntPoly::from_i64(&[c, b, a]);
                if h.divisible_by(&g) {
                    return Some(g);
                }
            }
        }
    }
    None
}

/// Degree-3 divisor by the same method, interpolating through values at
/// 0, 1, -1 and checking divisibility of the value at 2 before dividing.
fn find_cubic_divisor(h: &IntPoly) -> Option<IntPoly> {
    let lc = to_i64(&h.leading());
    let h0 = to_i64(&h.coeff(0));
    let h1 = to_i64(&h.eval_int(&BigInt::from(1)));
    let hm1 = to_i64(&h.eval_int(&BigInt::from(-1)));
    let h2 = to_i64(&h.eval_int(&BigInt::from(2)));
    assert!(h0 != 0 && h1 != 0 && hm1 != 0 && h2 != 0);
    for a in positive_divisors(lc) {
        for c0 in signed_divisors(h0) {
            for v1 in signed_divisors(h1) {
                for vm1 in signed_divisors(hm1) {
                    let s = v1 + vm1;
                    let t = v1 - vm1;
                    if s % 2 != 0 || t % 2 != 0 {
                        continue;
                    }
                    let b2 = s / 2 - c0;
                    let b1 = t / 2 - a;
                    let g2 = 8 * a + 4 * b2 + 2 * b1 + c0;
                    if g2 == 0 || h2 % g2 != 0 {
                        continue;
                    }
                    let g = IntPoly::from_i64(&[c0, b1, b2, a]);
                    if h.divisible_by(&g) {
                        return Some(g);
                    }
                }
            }
        }
    }
    None
}

/// `h` primitive, positive leading coefficient, no rational roots.
/// Splits completely: any reducible polynomial of degree <= 6 without
/// rational roots has a divisor of degree 2, or is a product of two cubics.
fn split_nonlinear(h: IntPoly, out: &mut Vec<IntPoly>) {
    let d = h.deg();
    if d == 0 {
        return;
    }
    if d <= 3 {
        out.push(h);
        return;
    }
    if let Some(g) = find_quadratic_divisor(&h) {
        let q = h.exact_div(&g).expect("divisor verified");
        out.push(g);
        split_nonlinear(q.normalized_primitive().expect("nonzero"), out);
        return;
    }
    if d == 6 {
        if let Some(g) = find_cubic_divisor(&h) {
            let q = h.exact_div(&g).expect("divisor verified");
            out.push(g);
            split_nonlinear(q.normalized_primitive().expect("nonzero"), out);
            return;
        }
    }
    out.push(h);
}

/// Naive complete factorization over the integers for degree <= 6 via
/// rational-root extraction and Kronecker interpolation. Returns
/// `(unit, content, multiset of primitive positive-leading irreducibles)`.
pub fn naive_factor(p: &IntPoly) -> (i8, BigInt, BTreeMap<IntPoly, u32>) {
    assert!(!p.is_zero() && p.deg() <= 6);
    let unit: i8 = if p.leading().is_negative() { -1 } else { 1 };
    let content = p.content();
    let mut h = p.normalized_primitive().expect("nonzero");
    let mut found: Vec<IntPoly> = Vec::new();
    let x = IntPoly::x();
    while h.deg() > 0 && h.coeff(0).is_zero() {
        h = h.exact_div(&x).expect("constant term is zero");
        found.push(x.clone());
    }
    // Linear factors q X - r: q divides the leading coefficient and r the
    // constant term. Repeat until none divides, so multiplicities drain.
    'linear: while h.deg() >= 1 {
        let lc = to_i64(&h.leading());
        let c0 = to_i64(&h.coeff(0));
        for q in positive_divisors(lc) {
            for r in signed_divisors(c0) {
                let g = IntPoly::from_i64(&[-r, q]);
                if h.divisible_by(&g) {
                    h = h.exact_div(&g).expect("divisor verified");
                    found.push(g);
                    continue 'linear;
                }
            }
        }
        break;
    }
    split_nonlinear(h, &mut found);
    let mut multiset: BTreeMap<IntPoly, u32> = BTreeMap::new();
    for f in found {
        *multiset.entry(f).or_insert(0) += 1;
    }
    (unit, content, multiset)
}

/// Poly and root counts from the naive counting oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveCount {
    pub polys: u64,
    pub alphas: u64,
}

/// Count monic irreducible integer polynomials of degree `d` (1, 2 or 3)
/// with all roots real, distinct, and inside `[-k, k]`, within the
/// per-coefficient box |a_{d-j}| <= C(d,j) k^j. Entirely independent of the
/// library: irreducibility via discriminants and integer root tests, root
/// location via Vieta sign patterns of shifted polynomials (valid exactly
/// because positivity of all elementary symmetric functions characterizes
/// all-positive root sets among totally real polynomials).
pub fn naive_count_alg_ints(d: u32, k: i64) -> NaiveCount {
    assert!(k >= 1);
    match d {
        1 => NaiveCount { polys: 2 * k as u64 + 1, alphas: 2 * k as u64 + 1 },
        2 => {
            let mut polys = 0u64;
            for a1 in -2 * k..=2 * k {
                for a0 in -k * k..=k * k {
                    let disc = a1 * a1 - 4 * a0;
                    if disc <= 0 || is_square(disc) {
                        continue;
                    }
                    // Roots > -k: f(X-k) = X^2 + (a1-2k)X + (k^2-a1 k+a0)
                    // has all-positive roots iff the tail signs are (-,+).
                    if !(a1 - 2 * k < 0 && k * k - a1 * k + a0 > 0) {
                        continue;
                    }
                    // Roots < k: f(k-X) reversed similarly.
                    if !(a1 + 2 * k > 0 && k * k + a1 * k + a0 > 0) {
                        continue;
                    }
                    polys += 1;
                }
            }
            NaiveCount { polys, alphas: 2 * polys }
        }
        3 => {
            let mut polys = 0u64;
            for a2 in -3 * k..=3 * k {
                for a1 in -3 * k * k..=3 * k * k {
                    for a0 in -k * k * k..=k * k * k {
                        if a0 == 0 || has_integer_root(a2, a1, a0) {
                            continue;
                        }
                        let (a2i, a1i, a0i) = (a2 as i128, a1 as i128, a0 as i128);
                        let disc = 18 * a2i * a1i * a0i - 4 * a2i.pow(3) * a0i
                            + a2i.pow(2) * a1i.pow(2)
                            - 4 * a1i.pow(3)
                            - 27 * a0i.pow(2);
                        if disc <= 0 {
                            continue;
                        }
                        // Roots > -k: shifted coefficients must alternate.
                        let s2 = a2 - 3 * k;
                        let s1 = 3 * k * k - 2 * a2 * k + a1;
                        let s0 = -k * k * k + a2 * k * k - a1 * k + a0;
                        if !(s2 < 0 && s1 > 0 && s0 < 0) {
                            continue;
                        }
                        // Roots < k: -f(k-X) monic, same alternation.
                        let t2 = -(3 * k + a2);
                        let t1 = 3 * k * k + 2 * a2 * k + a1;
                        let t0 = -(k * k * k + a2 * k * k + a1 * k + a0);
                        if !(t2 < 0 && t1 > 0 && t0 < 0) {
                            continue;
                        }
                        polys += 1;
                    }
                }
            }
            NaiveCount { polys, alphas: 3 * polys }
        }
        _ => panic!("naive oracle handles degrees 1..=3"),
    }
}

fn is_square(v: i64) -> bool {
    if v < 0 {
        return false;
    }
    let r = (v as f64).sqrt().round() as i64;
    (r - 1..=r + 1).any(|s| s >= 0 && s * s == v)
}

/// Monic cubic X^3 + a2 X^2 + a1 X + a0 with a0 != 0 has an integer root
/// iff some divisor of a0 is a root.
fn has_integer_root(a2: i64, a1: i64, a0: i64) -> bool {
    signed_divisors(a0)
        .into_iter()
        .any(|r| ((r + a2) * r + a1) * r + a0 == 0)
}
