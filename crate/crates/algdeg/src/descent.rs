//! Edge-deletion descents from the complete graph to a cycle.
//!
//! Starting from K_n, repeatedly delete one edge that is not on the pinned
//! Hamiltonian cycle 0-1-...-(n-1)-0 until only that cycle remains. Every
//! intermediate graph therefore contains a spanning cycle, so it is connected
//! with minimum degree at least 2, and the extreme endpoints of the walk are
//! the two families with fully understood spectra. Recording the spectrum
//! along the way shows how eigenvalue structure degrades between them: the
//! largest eigenvalue can only shrink when an edge is removed, the diameter
//! can only grow, and integrality is lost immediately (K_n minus one edge
//! already has an irrational eigenvalue pair).

use serde_json::{json, Value};

use crate::graph::{Diameter, Edge, Graph, GraphError};
use crate::rng::SplitMix64;
use crate::spectra::{analyze, interval_json};
use crate::sturm::RationalInterval;
use crate::polytext::rational_string;
use crate::TOOL_VERSION;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DescentError {
    #[error("descent needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("analysis interval must be at least 1")]
    ZeroAnalysisInterval,
    #[error("trace has unanalyzed steps; rerun with every step analyzed")]
    NotFullyAnalyzed,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How the next edge to delete is chosen among the legal candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyKind {
    /// Uniform over candidates, driven by the seeded generator.
    UniformRandom,
    /// Edge whose endpoint degrees are largest, comparing the pair
    /// (larger degree, smaller degree); ties broken by edge order.
    MaxDegreeFirst,
    /// Edge whose removal gives the smallest diameter; ties by edge order.
    DiameterGreedy,
}

impl StrategyKind {
    pub fn name(&self) -> &'static str {
        match self {
            StrategyKind::UniformRandom => "uniform-random",
            StrategyKind::MaxDegreeFirst => "max-degree-first",
            StrategyKind::DiameterGreedy => "diameter-greedy",
        }
    }
}

impl std::fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for StrategyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform-random" => Ok(StrategyKind::UniformRandom),
            "max-degree-first" => Ok(StrategyKind::MaxDegreeFirst),
            "diameter-greedy" => Ok(StrategyKind::DiameterGreedy),
            other => Err(format!(
                "unknown strategy {:?}; expected uniform-random, max-degree-first or diameter-greedy",
                other
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescentStrategy {
    pub kind: StrategyKind,
    /// Consumed only by the random strategy, but always recorded so headers
    /// identify runs unambiguously.
    pub seed: u64,
}

/// Spectral quantities, computed only at analyzed steps.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSnapshot {
    pub lambda1: RationalInterval,
    pub distinct_count: usize,
    pub max_alg_degree: usize,
    pub is_integral: bool,
}

/// One graph along the descent: the state after `m` deletions.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub m: usize,
    /// Edge deleted to reach this state; `None` only at the start.
    pub removed: Option<Edge>,
    pub diameter: Diameter,
    pub max_degree: usize,
    pub spectral: Option<SpectralSnapshot>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DescentTrace {
    pub n: usize,
    pub strategy: DescentStrategy,
    pub steps: Vec<StepRecord>,
}

/// Edges of the pinned Hamiltonian cycle are never deletion candidates.
fn is_cycle_edge(n: usize, e: &Edge) -> bool {
    e.v() - e.u() == 1 || (e.u() == 0 && e.v() == n - 1)
}

fn finite_diameter(d: Diameter) -> usize {
    match d {
        Diameter::Finite(x) => x,
        Diameter::Infinite => unreachable!("descent graphs contain a spanning cycle"),
    }
}

fn record_step(m: usize, removed: Option<Edge>, g: &Graph, analyzed: bool) -> StepRecord {
    let spectral = analyzed.then(|| {
        let r = analyze(g);
        SpectralSnapshot {
            lambda1: r.lambda1,
            distinct_count: r.distinct_count,
            max_alg_degree: r.max_alg_degree,
            is_integral: r.is_integral,
        }
    });
    StepRecord { m, removed, diameter: g.diameter(), max_degree: g.max_degree(), spectral }
}

fn pick_max_degree_first(g: &Graph, candidates: &[Edge]) -> Edge {
    let degrees = g.degrees();
    let mut best = candidates[0];
    let mut best_key = (0usize, 0usize);
    for &e in candidates {
        let (a, b) = (degrees[e.u()], degrees[e.v()]);
        let key = (a.max(b), a.min(b));
        if key > best_key {
            best_key = key;
            best = e;
        }
    }
    best
}

fn pick_diameter_greedy(g: &Graph, candidates: &[Edge]) -> Edge {
    let mut best = candidates[0];
    let mut best_diam = usize::MAX;
    for &e in candidates {
        let h = g.remove_edge(e.u(), e.v()).expect("candidate edge is present");
        let d = finite_diameter(h.diameter());
        if d < best_diam {
            best_diam = d;
            best = e;
        }
    }
    best
}

/// Walk from K_n down to the cycle, deleting one non-cycle edge per step.
///
/// The trace has `n(n-3)/2 + 1` steps. Spectral analysis runs at step 0, at
/// the final step, and at every index divisible by `analyze_every`; the cheap
/// metrics (diameter, maximum degree) are recorded at every step regardless.
/// Identical `(n, strategy)` inputs produce identical traces.
pub fn run_descent(
    n: usize,
    strategy: DescentStrategy,
    analyze_every: usize,
) -> Result<DescentTrace, DescentError> {
    if n < 4 {
        return Err(DescentError::TooFewVertices(n));
    }
    if analyze_every == 0 {
        return Err(DescentError::ZeroAnalysisInterval);
    }
    let mut g = Graph::complete(n)?;
    let mut rng = SplitMix64::new(strategy.seed);
    let total = n * (n - 3) / 2;
    let mut steps = Vec::with_capacity(total + 1);
    steps.push(record_step(0, None, &g, true));
    for m in 1..=total {
        // `Graph::edges` is sorted, so candidate order is the lexicographic
        // edge order every tie-break refers to.
        let candidates: Vec<Edge> =
            g.edges().iter().copied().filter(|e| !is_cycle_edge(n, e)).collect();
        assert_eq!(candidates.len(), total - m + 1, "one candidate is consumed per step");
        let chosen = match strategy.kind {
            StrategyKind::UniformRandom => {
                candidates[rng.next_below(candidates.len() as u64) as usize]
            }
            StrategyKind::MaxDegreeFirst => pick_max_degree_first(&g, &candidates),
            StrategyKind::DiameterGreedy => pick_diameter_greedy(&g, &candidates),
        };
        g = g.remove_edge(chosen.u(), chosen.v())?;
        // The spanning cycle stays intact, so these can never fire; they
        // guard the candidate filter against regressions.
        assert!(g.is_connected(), "descent graph lost connectivity");
        assert!(g.min_degree() >= 2, "descent graph lost minimum degree 2");
        let analyzed = m == total || m % analyze_every == 0;
        steps.push(record_step(m, Some(chosen), &g, analyzed));
    }
    debug_assert_eq!(g, Graph::cycle(n).expect("n >= 4"));
    Ok(DescentTrace { n, strategy, steps })
}

/// Total order on diameters with the disconnected value at the top.
fn diameter_rank(d: Diameter) -> (u8, usize) {
    match d {
        Diameter::Finite(x) => (0, x),
        Diameter::Infinite => (1, 0),
    }
}

/// Re-check everything a descent trace promises. Returns the list of
/// violations; an empty list means the trace is internally consistent.
///
/// The largest-eigenvalue chain uses enclosures, so only a provable
/// violation is reported: consecutive analyzed steps fail exactly when the
/// later lower bound exceeds the earlier upper bound.
pub fn validate_trace(t: &DescentTrace) -> Vec<String> {
    let mut bad = Vec::new();
    if t.n < 4 {
        bad.push(format!("vertex count {} is below the minimum of 4", t.n));
        return bad;
    }
    let total = t.n * (t.n - 3) / 2;
    if t.steps.len() != total + 1 {
        bad.push(format!("expected {} steps, found {}", total + 1, t.steps.len()));
        return bad;
    }
    let mut g = match Graph::complete(t.n) {
        Ok(g) => g,
        Err(e) => {
            bad.push(format!("cannot rebuild starting graph: {}", e));
            return bad;
        }
    };
    let mut prev_diam: Option<Diameter> = None;
    let mut prev_lambda: Option<RationalInterval> = None;
    for (i, step) in t.steps.iter().enumerate() {
        let tag = format!("step {}", i);
        if step.m != i {
            bad.push(format!("{}: recorded index {} is out of sequence", tag, step.m));
        }
        match (i, step.removed) {
            (0, Some(e)) => bad.push(format!("{}: starting step records removed edge {}", tag, e)),
            (0, None) => {}
            (_, None) => bad.push(format!("{}: missing removed edge", tag)),
            (_, Some(e)) => {
                if is_cycle_edge(t.n, &e) {
                    bad.push(format!("{}: removed cycle edge {}", tag, e));
                }
                if !g.has_edge(e.u(), e.v()) {
                    bad.push(format!("{}: removed edge {} was not present", tag, e));
                    continue;
                }
                g = g.remove_edge(e.u(), e.v()).expect("presence checked above");
            }
        }
        if !g.is_connected() {
            bad.push(format!("{}: graph is disconnected", tag));
        }
        if g.min_degree() < 2 {
            bad.push(format!("{}: minimum degree dropped to {}", tag, g.min_degree()));
        }
        if step.diameter != g.diameter() {
            bad.push(format!(
                "{}: recorded diameter {} but graph has {}",
                tag,
                step.diameter,
                g.diameter()
            ));
        }
        if step.max_degree != g.max_degree() {
            bad.push(format!(
                "{}: recorded max degree {} but graph has {}",
                tag,
                step.max_degree,
                g.max_degree()
            ));
        }
        if t.n % 2 == 1 {
            if let Some(k) = g.regularity() {
                if k % 2 == 1 {
                    bad.push(format!(
                        "{}: {}-regular graph on odd vertex count {}",
                        tag, k, t.n
                    ));
                }
            }
        }
        if let Some(d) = prev_diam {
            if diameter_rank(step.diameter) < diameter_rank(d) {
                bad.push(format!(
                    "{}: diameter shrank from {} to {}",
                    tag, d, step.diameter
                ));
            }
        }
        prev_diam = Some(step.diameter);
        if let Some(s) = &step.spectral {
            if let Some(prev) = &prev_lambda {
                if s.lambda1.lo > prev.hi {
                    bad.push(format!(
                        "{}: largest eigenvalue rose above the previous enclosure ({} > {})",
                        tag,
                        rational_string(&s.lambda1.lo),
                        rational_string(&prev.hi)
                    ));
                }
            }
            prev_lambda = Some(s.lambda1.clone());
        }
    }
    if t.steps.first().and_then(|s| s.spectral.as_ref()).is_none() {
        bad.push("starting step is not analyzed".to_string());
    }
    if t.steps.last().and_then(|s| s.spectral.as_ref()).is_none() {
        bad.push("final step is not analyzed".to_string());
    }
    if bad.is_empty() {
        let cycle = Graph::cycle(t.n).expect("n >= 4");
        if g != cycle {
            bad.push("final graph is not the pinned cycle".to_string());
        }
    }
    bad
}

/// Smallest step index whose spectrum is non-integral. Requires a trace with
/// every step analyzed, otherwise the answer could silently skip the true
/// first loss.
pub fn first_nonintegral_step(t: &DescentTrace) -> Result<Option<usize>, DescentError> {
    let snaps: Vec<&SpectralSnapshot> = t
        .steps
        .iter()
        .map(|s| s.spectral.as_ref().ok_or(DescentError::NotFullyAnalyzed))
        .collect::<Result<_, _>>()?;
    Ok(t.steps
        .iter()
        .zip(snaps)
        .find(|(_, s)| !s.is_integral)
        .map(|(step, _)| step.m))
}

impl DescentTrace {
    fn header_json(&self) -> Value {
        json!({
            "n": self.n.to_string(),
            "strategy": self.strategy.kind.name(),
            "seed": self.strategy.seed.to_string(),
            "tool_version": TOOL_VERSION,
        })
    }

    /// One JSON object per line: a header, then every step in order.
    /// Integers are serialized as decimal strings.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header_json().to_string());
        out.push('\n');
        for step in &self.steps {
            let spectral = match &step.spectral {
                None => Value::Null,
                Some(s) => json!({
                    "lambda1": interval_json(&s.lambda1),
                    "distinct_count": s.distinct_count.to_string(),
                    "max_alg_degree": s.max_alg_degree.to_string(),
                    "is_integral": s.is_integral,
                }),
            };
            let removed = match step.removed {
                None => Value::Null,
                Some(e) => json!({ "u": e.u().to_string(), "v": e.v().to_string() }),
            };
            let line = json!({
                "m": step.m.to_string(),
                "removed": removed,
                "diameter": step.diameter.to_string(),
                "max_degree": step.max_degree.to_string(),
                "spectral": spectral,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }

    /// Flat summary table. Cells of unanalyzed steps are left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "m,removed,diameter,max_degree,lambda1_lo,lambda1_hi,distinct_count,max_alg_degree,is_integral\n",
        );
        for step in &self.steps {
            let removed = step.removed.map(|e| e.to_string()).unwrap_or_default();
            let (lo, hi, distinct, alg, integral) = match &step.spectral {
                None => (String::new(), String::new(), String::new(), String::new(), String::new()),
                Some(s) => (
                    rational_string(&s.lambda1.lo),
                    rational_string(&s.lambda1.hi),
                    s.distinct_count.to_string(),
                    s.max_alg_degree.to_string(),
                    s.is_integral.to_string(),
                ),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                step.m, removed, step.diameter, step.max_degree, lo, hi, distinct, alg, integral
            ));
        }
        out
    }
}
