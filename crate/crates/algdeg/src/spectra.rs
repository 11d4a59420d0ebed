//! Spectral-algebraic reports: exact eigenvalue structure of a graph, the
//! closed-form spectra of the classical families, and the identity checks
//! tying diameter, degrees, and traces to the characteristic polynomial.
//!
//! Everything is exact. Eigenvalues are handled as irreducible factors of
//! the characteristic polynomial plus isolating rational intervals; no
//! floating point is involved anywhere.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith;
use crate::charpoly::{char_poly, moment_consistency};
use crate::cyclo::min_poly_two_cos;
use crate::factor::{factor, is_irreducible, Factorization};
use crate::graph::{gamma_graph, Diameter, GammaVariant, Graph, GraphError};
use crate::intpoly::IntPoly;
use crate::polytext::{poly_to_json_coeffs, rational_string};
use crate::sturm::{
    count_roots_above, isolate_extreme_root, isolate_real_roots, ExtremeRoot, RationalInterval,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum SpectraError {
    #[error("scan range must satisfy 7 <= lo <= hi, got {lo}..{hi}")]
    BadScanRange { lo: usize, hi: usize },
    #[error("exhaustive search is capped at {max} vertices, got {got}", max = SEARCH_MAX_VERTICES)]
    SearchTooLarge { got: usize },
    #[error("the complement identity requires a regular graph")]
    NotRegular,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One line of the eigenvalue table: an irreducible minimal polynomial, its
/// multiplicity in the spectrum, and an isolating interval per distinct root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueGroup {
    pub min_poly: IntPoly,
    pub multiplicity: u32,
    pub roots: Vec<RationalInterval>,
}

/// Complete exact description of a graph's spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub diameter: Diameter,
    pub char_poly: IntPoly,
    pub factorization: Factorization,
    /// Number of distinct eigenvalues (degree of the squarefree part).
    pub distinct_count: usize,
    /// Largest degree of an irreducible factor: the algebraic degree of the
    /// most irrational eigenvalue.
    pub max_alg_degree: usize,
    /// All eigenvalues integers, i.e. every factor linear.
    pub is_integral: bool,
    /// Enclosure of the largest eigenvalue.
    pub lambda1: RationalInterval,
    pub eigenvalue_table: Vec<EigenvalueGroup>,
}

/// Intersect an enclosure with [-k, k]; eigenvalues always lie there, so
/// this keeps every reported interval inside the degree bound.
fn clamp_to_degree_bound(iv: RationalInterval, k: usize) -> RationalInterval {
    let kq = BigRational::from_integer(BigInt::from(k));
    let lo = if iv.lo < -kq.clone() { -kq.clone() } else { iv.lo };
    let hi = if iv.hi > kq { kq } else { iv.hi };
    RationalInterval::new(lo, hi)
}

/// Build the full spectral report. Pure and deterministic; works for
/// disconnected graphs too (diameter comes back infinite).
pub fn analyze(g: &Graph) -> SpectrumReport {
    let cp = char_poly(g);
    let factorization = factor(&cp).expect("characteristic polynomials are nonzero");
    let k = g.max_degree();
    let distinct_count = factorization.factors.iter().map(|(f, _)| f.deg()).sum();
    let max_alg_degree = factorization
        .factors
        .iter()
        .map(|(f, _)| f.deg())
        .max()
        .expect("degree n >= 1 leaves at least one factor");
    let lambda1 = clamp_to_degree_bound(
        isolate_extreme_root(&cp, ExtremeRoot::Largest, None)
            .expect("adjacency spectra are real"),
        k,
    );
    let eigenvalue_table = factorization
        .factors
        .iter()
        .map(|(f, m)| EigenvalueGroup {
            min_poly: f.clone(),
            multiplicity: *m,
            roots: isolate_real_roots(f, None)
                .expect("factors of a totally real polynomial have real roots")
                .into_iter()
                .map(|iv| clamp_to_degree_bound(iv, k))
                .collect(),
        })
        .collect();
    SpectrumReport {
        n: g.n(),
        edge_count: g.edge_count(),
        max_degree: k,
        diameter: g.diameter(),
        char_poly: cp,
        distinct_count,
        max_alg_degree,
        is_integral: max_alg_degree == 1,
        lambda1,
        eigenvalue_table,
        factorization,
    }
}

impl SpectrumReport {
    /// JSON form: integers as decimal strings, rationals as "p/q", intervals
    /// as {lo, hi}, polynomials as ascending coefficient arrays.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n.to_string(),
            "edge_count": self.edge_count.to_string(),
            "max_degree": self.max_degree.to_string(),
            "diameter": self.diameter.to_string(),
            "char_poly": poly_to_json_coeffs(&self.char_poly),
            "factors": self.factorization.factors.iter().map(|(f, m)| json!({
                "coeffs": poly_to_json_coeffs(f),
                "degree": f.deg().to_string(),
                "multiplicity": m.to_string(),
            })).collect::<Vec<_>>(),
            "distinct_count": self.distinct_count.to_string(),
            "max_alg_degree": self.max_alg_degree.to_string(),
            "is_integral": self.is_integral,
            "lambda1": interval_json(&self.lambda1),
            "eigenvalues": self.eigenvalue_table.iter().map(|grp| json!({
                "min_poly": poly_to_json_coeffs(&grp.min_poly),
                "multiplicity": grp.multiplicity.to_string(),
                "roots": grp.roots.iter().map(interval_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn interval_json(iv: &RationalInterval) -> Value {
    json!({ "lo": rational_string(&iv.lo), "hi": rational_string(&iv.hi) })
}

/// The graph families with closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete { n: usize },
    CompleteMinusEdge { n: usize },
    CompleteBipartite { m: usize, l: usize },
    Paley { q: u64 },
    Cycle { n: usize },
    CycleComplement { n: usize },
}

impl Family {
    /// Construct the family member as a concrete graph.
    pub fn graph(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Complete { n } => Graph::complete(n),
            Family::CompleteMinusEdge { n } => {
                if n < 3 {
                    return Err(GraphError::FamilyTooSmall { need: 3, got: n });
                }
                Graph::complete(n)?.remove_edge(0, 1)
            }
            Family::CompleteBipartite { m, l } => Graph::complete_bipartite(m, l),
            Family::Paley { q } => Graph::paley(q),
            Family::Cycle { n } => Graph::cycle(n),
            Family::CycleComplement { n } => Ok(Graph::cycle(n)?.complement()),
        }
    }
}

/// Symbolic spectrum: irreducible minimal polynomials with multiplicities,
/// sorted canonically. Degrees times multiplicities sum to n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedSpectrum {
    pub entries: Vec<(IntPoly, u32)>,
}

/// The closed-form spectrum of a family member, assembled symbolically
/// (never from the matrix). Parameters are validated by constructing the
/// graph, so exactly the representable family members are accepted.
pub fn expected_spectrum(family: &Family) -> Result<ExpectedSpectrum, SpectraError> {
    let g = family.graph()?;
    let mut acc: BTreeMap<IntPoly, u32> = BTreeMap::new();
    let mut push = |p: IntPoly, m: u64| {
        if m > 0 {
            *acc.entry(p).or_insert(0) += u32::try_from(m).expect("multiplicity fits");
        }
    };
    let linear = |root: i64| IntPoly::from_i64(&[-root, 1]);
    match *family {
        Family::Complete { n } => {
            push(linear(n as i64 - 1), 1);
            push(linear(-1), n as u64 - 1);
        }
        Family::CompleteMinusEdge { n } => {
            let n = n as i64;
            push(linear(0), 1);
            push(linear(-1), (n - 3) as u64);
            push(IntPoly::from_i64(&[-(2 * n - 4), -(n - 3), 1]), 1);
        }
        Family::CompleteBipartite { m, l } => {
            let prod = (m as u64) * (l as u64);
            let s = prod.isqrt();
            if s * s == prod {
                push(linear(s as i64), 1);
                push(linear(-(s as i64)), 1);
            } else {
                push(IntPoly::from_i64(&[-(prod as i64), 0, 1]), 1);
            }
            push(linear(0), (m + l) as u64 - 2);
        }
        Family::Paley { q } => {
            push(linear((q as i64 - 1) / 2), 1);
            let (p, f) = arith::prime_power(q).expect("paley orders are prime powers");
            if f % 2 == 0 {
                let s = p.pow(f / 2) as i64;
                push(linear((s - 1) / 2), (q - 1) / 2);
                push(linear(-(s + 1) / 2), (q - 1) / 2);
            } else {
                push(IntPoly::from_i64(&[-((q as i64 - 1) / 4), 1, 1]), (q - 1) / 2);
            }
        }
        Family::Cycle { n } => {
            push(linear(2), 1);
            if n % 2 == 0 {
                push(linear(-2), 1);
            }
            for d in 3..=n as u64 {
                if n as u64 % d == 0 {
                    push(min_poly_two_cos(d), 2);
                }
            }
        }
        Family::CycleComplement { n } => {
            push(linear(n as i64 - 3), 1);
            if n % 2 == 0 {
                push(linear(1), 1);
            }
            let minus_one = BigInt::from(-1);
            for d in 3..=n as u64 {
                if n as u64 % d == 0 {
                    // Minimal polynomial of -1 - 2cos(2 pi j / d).
                    let reflected = min_poly_two_cos(d)
                        .compose_linear(&minus_one, &minus_one)
                        .normalized_primitive()
                        .expect("composition of a monic polynomial is nonzero");
                    push(reflected, 2);
                }
            }
        }
    }
    let entries: Vec<(IntPoly, u32)> = acc.into_iter().collect();
    debug_assert_eq!(
        entries.iter().map(|(p, m)| p.deg() * *m as usize).sum::<usize>(),
        g.n(),
        "multiplicities times degrees must sum to n"
    );
    Ok(ExpectedSpectrum { entries })
}

/// Exact oracle comparison: does the computed factorization of the
/// characteristic polynomial equal the expected symbolic multiset?
pub fn verify_family(g: &Graph, expected: &ExpectedSpectrum) -> bool {
    let fz = factor(&char_poly(g)).expect("characteristic polynomials are nonzero");
    fz.factors == expected.entries
}

/// For a k-regular graph, check the exact polynomial identity relating the
/// characteristic polynomials of the graph and its complement:
/// (X + k + 1) chi_complement(X) = (-1)^n (X - (n - k - 1)) chi(-X - 1).
pub fn complement_identity_check(g: &Graph) -> Result<bool, SpectraError> {
    let Some(k) = g.regularity() else {
        return Err(SpectraError::NotRegular);
    };
    let n = g.n();
    let lhs = &IntPoly::from_i64(&[k as i64 + 1, 1]) * &char_poly(&g.complement());
    let minus_one = BigInt::from(-1);
    let reflected = char_poly(g).compose_linear(&minus_one, &minus_one);
    let mut rhs = &IntPoly::from_i64(&[-(n as i64 - 1 - k as i64), 1]) * &reflected;
    if n % 2 == 1 {
        rhs = -&rhs;
    }
    Ok(lhs == rhs)
}

/// Verdicts of the spectrum-level criteria for one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriteriaReport {
    /// (a) diameter + 1 <= number of distinct eigenvalues (vacuous when the
    /// graph is disconnected and the diameter infinite).
    pub distinct_eigenvalue_bound: bool,
    /// (b) When 2k < diameter: some eigenvalue has algebraic degree >= 2.
    /// None when the hypothesis does not apply.
    pub forced_nonintegral: Option<bool>,
    /// (c) average degree <= lambda1 <= max degree, decided exactly.
    pub perron_bounds: bool,
    /// (d) The first five power sums of the polynomial's roots match the
    /// combinatorial traces.
    pub trace_identities: bool,
}

impl CriteriaReport {
    pub fn all_hold(&self) -> bool {
        self.distinct_eigenvalue_bound
            && self.forced_nonintegral.unwrap_or(true)
            && self.perron_bounds
            && self.trace_identities
    }
}

/// Evaluate the four criteria against a graph and its report. Comparisons
/// with lambda1 are decided by exact root counting above a rational, so no
/// refinement cap is involved.
pub fn criteria_check(g: &Graph, r: &SpectrumReport) -> CriteriaReport {
    let (distinct_eigenvalue_bound, forced_nonintegral) = match r.diameter {
        Diameter::Finite(d) => (
            d + 1 <= r.distinct_count,
            if 2 * r.max_degree < d { Some(r.max_alg_degree >= 2) } else { None },
        ),
        Diameter::Infinite => (true, None),
    };
    let cp = &r.char_poly;
    let avg = g.degree_stats().average;
    let lower_ok = cp.sign_at(&avg) == 0
        || count_roots_above(cp, &avg).expect("characteristic polynomial is nonconstant") >= 1;
    let kq = BigRational::from_integer(BigInt::from(r.max_degree));
    let upper_ok =
        count_roots_above(cp, &kq).expect("characteristic polynomial is nonconstant") == 0;
    CriteriaReport {
        distinct_eigenvalue_bound,
        forced_nonintegral,
        perron_bounds: lower_ok && upper_ok,
        trace_identities: moment_consistency(g, cp),
    }
}

/// Hard cap for the exhaustive search: 2^15 edge subsets at six vertices.
pub const SEARCH_MAX_VERTICES: usize = 6;

/// Enumerate every connected graph on at most `n_max` vertices and return
/// one representative (the minimum-adjacency-bitstring member) of each
/// isomorphism class whose maximum algebraic degree reaches `target_degree`.
pub fn exhaustive_min_degree_search(
    n_max: usize,
    target_degree: usize,
) -> Result<Vec<Graph>, SpectraError> {
    if n_max > SEARCH_MAX_VERTICES {
        return Err(SpectraError::SearchTooLarge { got: n_max });
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let pairs = n * (n - 1) / 2;
        let mut codes: Vec<u64> = (0u64..1 << pairs)
            .into_par_iter()
            .filter_map(|bits| {
                let g = Graph::from_pair_bits(n, bits).expect("bits cover exactly the pairs");
                if !g.is_connected() {
                    return None;
                }
                let fz = factor(&char_poly(&g)).expect("nonzero");
                let max_deg = fz.factors.iter().map(|(f, _)| f.deg()).max().unwrap_or(0);
                if max_deg < target_degree {
                    return None;
                }
                Some(g.canonical_code().expect("n <= 6"))
            })
            .collect();
        codes.sort_unstable();
        codes.dedup();
        out.extend(
            codes
                .into_iter()
                .map(|c| Graph::from_pair_bits(n, c).expect("canonical codes are valid")),
        );
    }
    Ok(out)
}

/// One row of an irreducibility scan over the cycle-plus-three-chords family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaScanRow {
    pub n: usize,
    pub irreducible: bool,
    pub char_poly: IntPoly,
}

/// Scan gamma_graph(n, variant) for n in lo..=hi (inclusive), reporting
/// whether each characteristic polynomial is irreducible. Rows are computed
/// in parallel and returned sorted by n.
pub fn gamma_scan(
    n_lo: usize,
    n_hi: usize,
    variant: GammaVariant,
) -> Result<Vec<GammaScanRow>, SpectraError> {
    if n_lo < 7 || n_lo > n_hi {
        return Err(SpectraError::BadScanRange { lo: n_lo, hi: n_hi });
    }
    let mut rows = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let g = gamma_graph(n, variant)?;
            let cp = char_poly(&g);
            let irreducible = is_irreducible(&cp).expect("degree >= 7");
            Ok(GammaScanRow { n, irreducible, char_poly: cp })
        })
        .collect::<Result<Vec<_>, SpectraError>>()?;
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

/// How the canonical chord layout was resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaChoice {
    pub apex_poly: IntPoly,
    pub spread_poly: IntPoly,
    pub apex_qualifies: bool,
    pub spread_qualifies: bool,
    /// Vertex count at which family-wide irreducibility separated the
    /// layouts; `None` when the n = 7 gate alone decided.
    pub separated_at: Option<usize>,
    pub canonical: GammaVariant,
}

/// Decide which chord layout is canonical. At n = 7 a qualifying layout has
/// 10 edges, a characteristic polynomial consistent with its own
/// combinatorial traces, and that polynomial irreducible of degree 7. Both
/// layouts clear that single-graph gate, so the deciding property is the
/// family-wide one: the characteristic polynomials are supposed to stay
/// irreducible as n grows, and the scan over n = 8..20 keeps the layout for
/// which that holds (the other one picks up rational eigenvalues already at
/// n = 8).
pub fn canonical_gamma_choice() -> &'static GammaChoice {
    static CHOICE: OnceLock<GammaChoice> = OnceLock::new();
    CHOICE.get_or_init(|| {
        let probe = |variant: GammaVariant| {
            let g = gamma_graph(7, variant).expect("7 is large enough");
            let cp = char_poly(&g);
            let qualifies = g.edge_count() == 10
                && moment_consistency(&g, &cp)
                && cp.degree() == Some(7)
                && is_irreducible(&cp).expect("degree 7 is not constant");
            (cp, qualifies)
        };
        let (apex_poly, apex_qualifies) = probe(GammaVariant::Apex);
        let (spread_poly, spread_qualifies) = probe(GammaVariant::Spread);
        let mut separated_at = None;
        let canonical = match (apex_qualifies, spread_qualifies) {
            (true, false) => GammaVariant::Apex,
            (false, true) => GammaVariant::Spread,
            _ => {
                let stays_irreducible = |variant: GammaVariant, n: usize| {
                    let g = gamma_graph(n, variant).expect("n >= 7");
                    is_irreducible(&char_poly(&g)).expect("degree >= 7")
                };
                let mut winner = GammaVariant::Spread;
                for n in 8..=20 {
                    match (
                        stays_irreducible(GammaVariant::Apex, n),
                        stays_irreducible(GammaVariant::Spread, n),
                    ) {
                        (true, false) => {
                            winner = GammaVariant::Apex;
                            separated_at = Some(n);
                            break;
                        }
                        (false, true) => {
                            winner = GammaVariant::Spread;
                            separated_at = Some(n);
                            break;
                        }
                        _ => {}
                    }
                }
                winner
            }
        };
        GammaChoice {
            apex_poly,
            spread_poly,
            apex_qualifies,
            spread_qualifies,
            separated_at,
            canonical,
        }
    })
}

/// The canonical chord layout (resolved once, then cached).
pub fn canonical_gamma_variant() -> GammaVariant {
    canonical_gamma_choice().canonical
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn analyze_complete_six() {
        let r = analyze(&Graph::complete(6).unwrap());
        assert!(r.is_integral);
        assert_eq!(r.max_alg_degree, 1);
        assert_eq!(r.distinct_count, 2);
        assert_eq!(r.diameter, Diameter::Finite(1));
        assert!(r.lambda1.contains(&BigRational::from_integer(5.into())));
        let width_cap = BigRational::new(1.into(), 1_000_000_000.into());
        assert!(r.lambda1.width() <= width_cap);
    }

    #[test]
    fn analyze_complete_minus_edge() {
        let g = Graph::complete(5).unwrap().remove_edge(0, 1).unwrap();
        let r = analyze(&g);
        assert_eq!(
            r.factorization.factors,
            vec![(poly(&[0, 1]), 1), (poly(&[1, 1]), 2), (poly(&[-6, -2, 1]), 1)]
        );
        assert_eq!(r.max_alg_degree, 2);
        assert_eq!(r.distinct_count, 4);
        assert!(!r.is_integral);
    }

    #[test]
    fn analyze_cycle_seven() {
        let r = analyze(&Graph::cycle(7).unwrap());
        assert_eq!(r.max_alg_degree, 3); // totient(7)/2
        assert_eq!(r.diameter, Diameter::Finite(3));
        assert_eq!(r.distinct_count, 4);
    }

    #[test]
    fn report_invariants_on_a_mixed_bag() {
        for g in [
            Graph::cycle_plus_chords(5, &[(0, 2)]).unwrap(),
            Graph::paley(9).unwrap(),
            Graph::complete_bipartite(2, 5).unwrap(),
            Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap(),
            Graph::empty(3).unwrap(),
        ] {
            let r = analyze(&g);
            if let Diameter::Finite(d) = r.diameter {
                assert!(r.distinct_count >= d + 1);
            }
            assert_eq!(r.is_integral, r.max_alg_degree == 1);
            let k = BigRational::from_integer(BigInt::from(r.max_degree));
            for grp in &r.eigenvalue_table {
                assert_eq!(grp.roots.len(), grp.min_poly.deg());
                for iv in &grp.roots {
                    assert!(iv.lo >= -k.clone() && iv.hi <= k, "interval escapes [-k, k]");
                }
            }
            let table_mult: usize =
                r.eigenvalue_table.iter().map(|g| g.min_poly.deg() * g.multiplicity as usize).sum();
            assert_eq!(table_mult, r.n);
        }
    }

    #[test]
    fn expected_spectra_match_reality() {
        let families = [
            Family::Complete { n: 7 },
            Family::CompleteMinusEdge { n: 5 },
            Family::CompleteMinusEdge { n: 3 },
            Family::CompleteBipartite { m: 3, l: 4 },
            Family::CompleteBipartite { m: 4, l: 9 }, // 36 = 6^2 splits
            Family::CompleteBipartite { m: 1, l: 1 },
            Family::Paley { q: 13 },
            Family::Paley { q: 9 },
            Family::Paley { q: 25 },
            Family::Cycle { n: 6 },
            Family::Cycle { n: 12 },
            Family::Cycle { n: 7 },
            Family::CycleComplement { n: 3 },
            Family::CycleComplement { n: 4 },
            Family::CycleComplement { n: 6 },
            Family::CycleComplement { n: 9 },
        ];
        for fam in families {
            let g = fam.graph().unwrap();
            let expected = expected_spectrum(&fam).unwrap();
            assert!(verify_family(&g, &expected), "{fam:?}");
        }
    }

    #[test]
    fn expected_spectrum_fixed_points() {
        let e = expected_spectrum(&Family::Complete { n: 5 }).unwrap();
        assert_eq!(e.entries, vec![(poly(&[-4, 1]), 1), (poly(&[1, 1]), 4)]);
        let e = expected_spectrum(&Family::Paley { q: 9 }).unwrap();
        assert_eq!(
            e.entries,
            vec![(poly(&[-4, 1]), 1), (poly(&[-1, 1]), 4), (poly(&[2, 1]), 4)]
        );
        let e = expected_spectrum(&Family::Cycle { n: 6 }).unwrap();
        assert_eq!(
            e.entries,
            vec![
                (poly(&[-2, 1]), 1),
                (poly(&[-1, 1]), 2),
                (poly(&[1, 1]), 2),
                (poly(&[2, 1]), 1)
            ]
        );
        let e = expected_spectrum(&Family::Paley { q: 13 }).unwrap();
        assert!(e.entries.contains(&(poly(&[-3, 1, 1]), 6)));
        // Complement of the triangle: the empty graph, eigenvalue 0 thrice.
        let e = expected_spectrum(&Family::CycleComplement { n: 3 }).unwrap();
        assert_eq!(e.entries, vec![(poly(&[0, 1]), 3)]);
    }

    #[test]
    fn family_validation_errors() {
        assert!(expected_spectrum(&Family::CompleteMinusEdge { n: 2 }).is_err());
        assert!(expected_spectrum(&Family::Paley { q: 7 }).is_err());
        assert!(expected_spectrum(&Family::Paley { q: 15 }).is_err());
        assert!(expected_spectrum(&Family::Cycle { n: 2 }).is_err());
        assert!(expected_spectrum(&Family::Complete { n: 0 }).is_err());
    }

    #[test]
    fn complement_identity_on_regular_graphs() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::complete(7).unwrap(),
            Graph::paley(13).unwrap(),
            Graph::cycle(8).unwrap(),
            Graph::complete_bipartite(3, 3).unwrap(),
            Graph::empty(4).unwrap(),
        ] {
            assert_eq!(complement_identity_check(&g), Ok(true));
        }
        let paw = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(complement_identity_check(&paw), Err(SpectraError::NotRegular));
    }

    #[test]
    fn criteria_on_known_graphs() {
        // cycle(10): k = 2, diameter 5, hypothesis 2k < diameter applies.
        let g = Graph::cycle(10).unwrap();
        let r = analyze(&g);
        let c = criteria_check(&g, &r);
        assert_eq!(c.forced_nonintegral, Some(true));
        assert!(c.all_hold());

        // K5 minus an edge: 18/5 <= lambda1 < 4.
        let g = Graph::complete(5).unwrap().remove_edge(0, 1).unwrap();
        let r = analyze(&g);
        let c = criteria_check(&g, &r);
        assert!(c.perron_bounds && c.all_hold());
        assert_eq!(c.forced_nonintegral, None);

        // complete(4): diameter 1, distinct_count 2.
        let g = Graph::complete(4).unwrap();
        let r = analyze(&g);
        let c = criteria_check(&g, &r);
        assert!(c.distinct_eigenvalue_bound && c.all_hold());

        // Disconnected: vacuous diameter bound, hypothesis inapplicable.
        let g = Graph::empty(4).unwrap();
        let c = criteria_check(&g, &analyze(&g));
        assert!(c.all_hold());
        assert_eq!(c.forced_nonintegral, None);
    }

    #[test]
    fn exhaustive_search_small_cases() {
        // No connected graph on <= 3 vertices has an irrational eigenvalue
        // of degree 2? It does: the 2-path. Degree >= 2 witnesses exist.
        let at_least_quadratic = exhaustive_min_degree_search(3, 2).unwrap();
        assert!(!at_least_quadratic.is_empty());
        // But none reaches degree 3 below 5 vertices... except the paw at 4.
        // That expectation is pinned by the acceptance suite; here we only
        // check determinism and the 5-vertex house witness.
        let five = exhaustive_min_degree_search(5, 3).unwrap();
        assert!(!five.is_empty());
        let house = Graph::cycle_plus_chords(5, &[(0, 2)]).unwrap();
        let house_code = house.canonical_code().unwrap();
        assert!(
            five.iter().any(|g| g.canonical_code().unwrap() == house_code),
            "house class missing from witnesses"
        );
        let again = exhaustive_min_degree_search(5, 3).unwrap();
        assert_eq!(five, again, "search must be deterministic");
        assert!(matches!(
            exhaustive_min_degree_search(7, 3),
            Err(SpectraError::SearchTooLarge { got: 7 })
        ));
    }

    #[test]
    fn gamma_scan_basics() {
        let rows = gamma_scan(7, 9, canonical_gamma_variant()).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.irreducible), "canonical layout stays irreducible");
        assert_eq!(rows[0].char_poly.degree(), Some(7));
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![7, 8, 9]);
        assert!(gamma_scan(6, 9, GammaVariant::Spread).is_err());
        assert!(gamma_scan(9, 7, GammaVariant::Spread).is_err());
    }

    #[test]
    fn canonical_gamma_is_the_apex_layout() {
        // Both layouts qualify at n = 7 (each characteristic polynomial is
        // irreducible of degree 7 and consistent with its own traces), so
        // the family separates them: at n = 8 the spread polynomial picks
        // up a rational factor while the apex one stays irreducible. Pin
        // both degree-7 polynomials so a change in either graph constructor
        // or the resolution rule is loud.
        let c = canonical_gamma_choice();
        assert!(c.apex_qualifies && c.spread_qualifies);
        assert_eq!(c.canonical, GammaVariant::Apex);
        assert_eq!(c.separated_at, Some(8));
        assert_eq!(c.apex_poly, poly(&[-4, -9, 12, 19, -6, -10, 0, 1]));
        assert_eq!(c.spread_poly, poly(&[-2, -8, 8, 21, -4, -10, 0, 1]));
        // The X^4 coefficient is -e_3 = -2 * triangle_count.
        let spread = gamma_graph(7, GammaVariant::Spread).unwrap();
        assert_eq!(spread.triangle_count(), 2);
        assert_eq!(c.spread_poly.coeff(4), BigInt::from(-4));
        let apex = gamma_graph(7, GammaVariant::Apex).unwrap();
        assert_eq!(apex.triangle_count(), 3);
        assert_eq!(c.apex_poly.coeff(4), BigInt::from(-6));
        // The spread layout's defect at n = 8: zero is an eigenvalue twice.
        let spread8 = char_poly(&gamma_graph(8, GammaVariant::Spread).unwrap());
        assert!(!is_irreducible(&spread8).unwrap());
        assert_eq!(spread8.coeff(0), BigInt::from(0));
        assert_eq!(spread8.coeff(1), BigInt::from(0));
    }

    #[test]
    fn report_json_shape() {
        let r = analyze(&Graph::cycle(4).unwrap());
        let v = r.to_json();
        assert_eq!(v["n"], "4");
        assert_eq!(v["diameter"], "2");
        assert_eq!(v["char_poly"], json!(["0", "0", "-4", "0", "1"]));
        assert!(v["is_integral"].as_bool().unwrap());
        // lambda1 = 2 sits at the degree bound, so the clamped enclosure
        // ends exactly there.
        assert_eq!(v["lambda1"]["hi"], "2/1");
        let inf = analyze(&Graph::empty(2).unwrap());
        assert_eq!(inf.to_json()["diameter"], "infinite");
    }
}
