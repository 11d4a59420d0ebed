//! Characteristic polynomials of adjacency matrices, spectral moments, and
//! the consistency check tying the two together.
//!
//! The characteristic polynomial is computed with the Berkowitz algorithm:
//! division-free, exact over arbitrary-size integers, O(n^4) ring operations.
//! Walk counts grow like (n-1)^n, so fixed-width arithmetic is not an option
//! beyond toy sizes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::intpoly::IntPoly;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum CharPolyError {
    #[error("combinatorial moments stop at order 4, requested {0}")]
    MomentOrderTooLarge(u32),
    #[error("power sums require a monic polynomial")]
    NonMonic,
}

/// det(XI - A) for the adjacency matrix A, exactly.
///
/// Berkowitz iteration: `p` holds the descending coefficients of
/// det(XI_k - A_k) for the leading principal k-by-k block. Each step builds
/// the Toeplitz column `t` with t[j] = -(R A_{k-1}^{j-2} C) — R and C are the
/// new row/column, equal by symmetry — and replaces `p` by the convolution
/// t * p truncated to degree k.
pub fn char_poly(g: &Graph) -> IntPoly {
    let n = g.n();
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let new = k - 1; // vertex being adjoined
        let col: Vec<usize> = (0..new).filter(|&u| g.has_edge(u, new)).collect();
        let mut t: Vec<BigInt> = Vec::with_capacity(k + 1);
        t.push(BigInt::one());
        t.push(BigInt::zero()); // adjacency diagonal is zero
        let mut w: Vec<BigInt> = vec![BigInt::zero(); new];
        for &u in &col {
            w[u] = BigInt::one();
        }
        for j in 2..=k {
            let dot: BigInt = col.iter().map(|&u| &w[u]).sum();
            t.push(-dot);
            if j < k {
                let mut next = vec![BigInt::zero(); new];
                for (u, slot) in next.iter_mut().enumerate() {
                    let mut bits = g.adjacency_row(u) & ((1u64 << new) - 1);
                    while bits != 0 {
                        let v = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        *slot += &w[v];
                    }
                }
                w = next;
            }
        }
        let mut np = vec![BigInt::zero(); k + 1];
        for (i, ti) in t.iter().enumerate() {
            if ti.is_zero() {
                continue;
            }
            for (j, pj) in p.iter().enumerate() {
                if i + j <= k {
                    np[i + j] += ti * pj;
                }
            }
        }
        p = np;
    }
    p.reverse();
    IntPoly::from_coeffs(p)
}

/// tr(A^order) computed combinatorially, without touching the matrix:
/// order 0 is n, order 1 is 0, order 2 counts edge round trips, order 3
/// counts oriented triangles, order 4 counts closed 4-walks (edge
/// back-and-forths, cherries, and proper 4-cycles).
pub fn moment(g: &Graph, order: u32) -> Result<BigInt, CharPolyError> {
    let m = BigInt::from(g.edge_count());
    Ok(match order {
        0 => BigInt::from(g.n()),
        1 => BigInt::zero(),
        2 => 2 * m,
        3 => 6 * BigInt::from(g.triangle_count()),
        4 => {
            let cherries: u64 = g
                .degree_stats()
                .sequence
                .iter()
                .map(|&d| (d as u64) * (d as u64).saturating_sub(1) / 2)
                .sum();
            2 * m + 4 * BigInt::from(cherries) + 8 * BigInt::from(g.four_cycle_count())
        }
        _ => return Err(CharPolyError::MomentOrderTooLarge(order)),
    })
}

/// Power sums of the roots of a monic polynomial, via Newton's identities.
///
/// Returns `[p_0, p_1, ..., p_up_to]` with p_0 = degree. Exact: the power
/// sums of a monic integer polynomial are integers.
pub fn power_sums(p: &IntPoly, up_to: u32) -> Result<Vec<BigInt>, CharPolyError> {
    if !p.is_monic() {
        return Err(CharPolyError::NonMonic);
    }
    let n = p.deg();
    let elem = |i: usize| -> BigInt {
        if i > n {
            return BigInt::zero();
        }
        let c = p.coeff(n - i);
        if i % 2 == 0 { c } else { -c }
    };
    let mut ps: Vec<BigInt> = vec![BigInt::from(n)];
    for k in 1..=up_to as usize {
        let mut sum = BigInt::zero();
        for i in 1..k {
            let term = elem(i) * &ps[k - i];
            if i % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let last = elem(k) * BigInt::from(k);
        if k % 2 == 1 {
            sum += last;
        } else {
            sum -= last;
        }
        ps.push(sum);
    }
    Ok(ps)
}

/// Does `p` look like the characteristic polynomial of `g`?
///
/// Checks shape (monic, degree n) and that the first five power sums of the
/// roots equal the combinatorial traces tr(A^j), j = 0..=4. Catches sign and
/// transcription slips that preserve degree.
pub fn moment_consistency(g: &Graph, p: &IntPoly) -> bool {
    if !p.is_monic() || p.degree() != Some(g.n()) {
        return false;
    }
    let Ok(ps) = power_sums(p, 4) else { return false };
    (0..=4u32).all(|j| moment(g, j).expect("order <= 4") == ps[j as usize])
}
