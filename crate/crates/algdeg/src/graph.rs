//! Simple undirected graphs on up to 64 vertices.
//!
//! Vertices are 0-based; edges live in a sorted, deduplicated list of
//! `Edge { u < v }` pairs mirrored into per-vertex adjacency bitsets (one
//! `u64` per vertex, which is what pins the vertex cap). Graphs are immutable
//! after construction: transformations return new values, so they can be
//! shared freely across worker threads.

use crate::gf::{FiniteField, GfError};
use num_bigint::BigInt;
use num_rational::BigRational;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum GraphError {
    #[error("graphs need at least one vertex")]
    ZeroVertices,
    #[error("vertex count {0} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
    #[error("cycles need at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("both bipartite parts must be nonempty")]
    EmptyBipartitePart,
    #[error("chord {{{0}, {1}}} duplicates a cycle edge")]
    ChordOnCycle(usize, usize),
    #[error("field construction failed: {0}")]
    Field(#[from] GfError),
    #[error("order {0} is not 1 mod 4, so square differences would not be symmetric")]
    NotOneModFour(u64),
    #[error("this family needs at least {need} vertices, got {got}")]
    FamilyTooSmall { need: usize, got: usize },
    #[error("canonical codes are only computed for graphs on at most 8 vertices, got {0}")]
    TooLargeForCanonical(usize),
}

/// Unordered vertex pair with the invariant `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(Edge { u: a.min(b), v: a.max(b) })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Shortest-path diameter; disconnected graphs get the distinguished value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{}", d),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl Graph {
    /// Build from explicit vertex count and edge pairs (either orientation).
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph { n, edges: Vec::with_capacity(pairs.len()), adj: vec![0u64; n] };
        for &(a, b) in pairs {
            g.insert_edge(a, b)?;
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    fn insert_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let e = Edge::new(a, b)?;
        if e.v >= self.n {
            return Err(GraphError::VertexOutOfRange { v: e.v, n: self.n });
        }
        if self.has_edge(e.u, e.v) {
            return Err(GraphError::DuplicateEdge(e.u, e.v));
        }
        self.adj[e.u] |= 1u64 << e.v;
        self.adj[e.v] |= 1u64 << e.u;
        self.edges.push(e);
        Ok(())
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, &[])
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &pairs)
    }

    /// Cycle 0-1-...-(n-1)-0; requires n >= 3.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &pairs)
    }

    /// Parts {0..m-1} and {m..m+l-1}, all cross edges.
    pub fn complete_bipartite(m: usize, l: usize) -> Result<Self, GraphError> {
        if m == 0 || l == 0 {
            return Err(GraphError::EmptyBipartitePart);
        }
        let pairs: Vec<_> = (0..m).flat_map(|u| (m..m + l).map(move |v| (u, v))).collect();
        Graph::new(m + l, &pairs)
    }

    /// Vertices are the elements of GF(q); x ~ y iff x - y is a nonzero
    /// square. Requires q a prime power with q = 1 mod 4 (which makes
    /// "difference is a square" symmetric) and yields a (q-1)/2-regular graph.
    pub fn paley(q: u64) -> Result<Self, GraphError> {
        if q % 4 != 1 {
            // Report non-prime-powers as such first for a precise error.
            if crate::arith::prime_power(q).is_none() {
                return Err(GraphError::Field(GfError::NotPrimePower(q)));
            }
            return Err(GraphError::NotOneModFour(q));
        }
        if q as usize > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(q as usize));
        }
        let field = FiniteField::new(q)?;
        let squares = field.nonzero_squares();
        let mut pairs = Vec::new();
        for x in 0..q {
            for y in x + 1..q {
                let d = field.sub(x, y);
                if squares.binary_search(&d).is_ok() {
                    pairs.push((x as usize, y as usize));
                }
            }
        }
        Graph::new(q as usize, &pairs)
    }

    /// Union of cycle(n) and the given chords; chords may not repeat cycle
    /// edges or each other.
    pub fn cycle_plus_chords(n: usize, chords: &[(usize, usize)]) -> Result<Self, GraphError> {
        let cycle = Graph::cycle(n)?;
        let mut g = cycle;
        for &(a, b) in chords {
            let e = Edge::new(a, b)?;
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { v: e.v, n });
            }
            let on_cycle = (e.v - e.u == 1) || (e.u == 0 && e.v == n - 1);
            if on_cycle {
                return Err(GraphError::ChordOnCycle(e.u, e.v));
            }
            g.insert_edge(a, b)?;
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    /// Same vertices, edges exactly where `self` has none.
    pub fn complement(&self) -> Graph {
        let pairs: Vec<_> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Graph::new(self.n, &pairs).expect("complement of a valid graph is valid")
    }

    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        let e = Edge::new(a, b)?;
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e.u, e.v));
        }
        let mut g = self.clone();
        g.edges.retain(|&x| x != e);
        g.adj[e.u] &= !(1u64 << e.v);
        g.adj[e.v] &= !(1u64 << e.u);
        Ok(g)
    }

    /// Build from a bitmask over vertex pairs in lexicographic order
    /// (0,1),(0,2),...,(0,n-1),(1,2),...; requires C(n,2) <= 64.
    pub fn from_pair_bits(n: usize, bits: u64) -> Result<Self, GraphError> {
        let pairs: Vec<_> = lex_pairs(n)
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        Graph::new(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Adjacency bitset of `v`: bit `w` set iff `v ~ w`.
    pub fn adjacency_row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// `Some(k)` iff every vertex has degree k.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let sequence = self.degrees();
        let max = sequence.iter().copied().max().unwrap_or(0);
        let min = sequence.iter().copied().min().unwrap_or(0);
        let average =
            BigRational::new(BigInt::from(2 * self.edge_count()), BigInt::from(self.n));
        DegreeStats { sequence, max, min, average }
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0).count_ones() as usize == self.n
    }

    fn reachable_from(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Maximum over vertex pairs of the BFS shortest-path length;
    /// `Infinite` for disconnected graphs, 0 for a single vertex.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0usize;
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        for start in 0..self.n {
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            let mut dist = 0usize;
            while seen != full {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                if frontier == 0 {
                    return Diameter::Infinite;
                }
                seen |= frontier;
                dist += 1;
            }
            best = best.max(dist);
        }
        Diameter::Finite(best)
    }

    /// Number of triangles (3-cycles as vertex sets).
    pub fn triangle_count(&self) -> u64 {
        let mut total = 0u64;
        for e in &self.edges {
            total += (self.adj[e.u] & self.adj[e.v]).count_ones() as u64;
        }
        total / 3
    }

    /// Number of 4-cycles (as vertex sets): each contributes two "opposite"
    /// vertex pairs, so sum C(codegree, 2) over all pairs and halve.
    pub fn four_cycle_count(&self) -> u64 {
        let mut twice = 0u64;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let co = (self.adj[u] & self.adj[v] & !(1 << u) & !(1 << v)).count_ones() as u64;
                if co >= 2 {
                    twice += co * (co - 1) / 2;
                }
            }
        }
        twice / 2
    }

    /// Minimum upper-triangle bitstring over all vertex relabelings: equal
    /// codes iff isomorphic. Brute force, so capped at 8 vertices.
    pub fn canonical_code(&self) -> Result<u64, GraphError> {
        if self.n > 8 {
            return Err(GraphError::TooLargeForCanonical(self.n));
        }
        let pairs: Vec<(usize, usize)> = lex_pairs(self.n).collect();
        let mut best = u64::MAX;
        let mut order: Vec<usize> = (0..self.n).collect();
        permute(&mut order, 0, &mut |relabel_to_old| {
            let mut code = 0u64;
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if self.has_edge(relabel_to_old[i], relabel_to_old[j]) {
                    code |= 1 << bit;
                }
            }
            best = best.min(code);
        });
        Ok(best)
    }
}

/// Degree summary with an exact average.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub sequence: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub average: BigRational,
}

/// Which chord set a cycle-plus-three-chords graph uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaVariant {
    /// All three chords share vertex 0: {0, n-5}, {0, n-4}, {0, n-2}.
    /// Vertex 0 ends up with degree 5.
    Apex,
    /// Chords spread across the cycle: {1, n-1}, {2, n-3}, {0, n-3}.
    /// Maximum degree stays at 4.
    Spread,
}

impl std::fmt::Display for GammaVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GammaVariant::Apex => write!(f, "apex"),
            GammaVariant::Spread => write!(f, "spread"),
        }
    }
}

/// Cycle on n vertices plus three chords, n >= 7; always n+3 edges.
pub fn gamma_graph(n: usize, variant: GammaVariant) -> Result<Graph, GraphError> {
    if n < 7 {
        return Err(GraphError::FamilyTooSmall { need: 7, got: n });
    }
    let chords = match variant {
        GammaVariant::Apex => [(0, n - 5), (0, n - 4), (0, n - 2)],
        GammaVariant::Spread => [(1, n - 1), (2, n - 3), (0, n - 3)],
    };
    Graph::cycle_plus_chords(n, &chords)
}

/// Vertex pairs (u, v) with u < v in lexicographic order.
pub fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert_eq!(Graph::new(0, &[]), Err(GraphError::ZeroVertices));
        assert_eq!(Graph::new(65, &[]), Err(GraphError::TooManyVertices(65)));
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { v: 3, n: 3 }));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        let g = Graph::new(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 2) && g.has_edge(1, 0));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(Graph::complete(3).unwrap().edge_count(), 3);
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(5).unwrap().degrees(), vec![4; 5]);
    }

    #[test]
    fn cycles() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.regularity(), Some(2));
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(Graph::cycle(2), Err(GraphError::CycleTooSmall(2)));
        assert_eq!(Graph::cycle(7).unwrap().diameter(), Diameter::Finite(3));
        assert_eq!(Graph::cycle(8).unwrap().diameter(), Diameter::Finite(4));
    }

    #[test]
    fn bipartite() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(Graph::complete_bipartite(5, 4).unwrap().edge_count(), 20);
        assert_eq!(Graph::complete_bipartite(5, 4).unwrap().diameter(), Diameter::Finite(2));
        assert_eq!(Graph::complete_bipartite(1, 1).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(Graph::complete_bipartite(0, 2), Err(GraphError::EmptyBipartitePart));
        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().diameter(), Diameter::Finite(2));
    }

    #[test]
    fn paley_graphs() {
        // Squares mod 5 are {1,4}, so differences of +-1: exactly the 5-cycle.
        assert_eq!(Graph::paley(5).unwrap(), Graph::cycle(5).unwrap());
        let p9 = Graph::paley(9).unwrap();
        assert_eq!(p9.regularity(), Some(4));
        assert_eq!(p9.edge_count(), 18);
        assert_eq!(p9.diameter(), Diameter::Finite(2));
        assert_eq!(Graph::paley(13).unwrap().regularity(), Some(6));
        assert_eq!(Graph::paley(17).unwrap().regularity(), Some(8));
        assert_eq!(Graph::paley(25).unwrap().regularity(), Some(12));
        assert_eq!(Graph::paley(9).unwrap().degree(0), 4);
        assert!(matches!(Graph::paley(7), Err(GraphError::NotOneModFour(7))));
        assert!(matches!(Graph::paley(12), Err(GraphError::Field(_))));
    }

    #[test]
    fn complement_involution_and_counts() {
        let c5 = Graph::cycle(5).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert_eq!(cc.regularity(), Some(2));
        assert_eq!(cc.complement(), c5);
        assert_eq!(Graph::complete(5).unwrap().complement().edge_count(), 0);
        for n in [5usize, 8, 11] {
            let c = Graph::cycle(n).unwrap().complement();
            assert_eq!(c.regularity(), Some(n - 3));
            assert_eq!(c.edge_count(), n * (n - 3) / 2);
        }
    }

    #[test]
    fn house_and_chords() {
        let house = Graph::cycle_plus_chords(5, &[(0, 2)]).unwrap();
        assert_eq!(house.edge_count(), 6);
        assert_eq!(house.degrees(), vec![3, 2, 3, 2, 2]);
        assert_eq!(house.triangle_count(), 1);
        assert_eq!(house.four_cycle_count(), 1);
        assert!(matches!(
            Graph::cycle_plus_chords(5, &[(0, 1)]),
            Err(GraphError::ChordOnCycle(0, 1))
        ));
        assert!(matches!(
            Graph::cycle_plus_chords(5, &[(0, 4)]),
            Err(GraphError::ChordOnCycle(0, 4))
        ));
        let left = Graph::cycle_plus_chords(7, &[(1, 6), (0, 3), (0, 4)]).unwrap();
        assert_eq!(left.edge_count(), 10);
        let right = Graph::cycle_plus_chords(7, &[(1, 6), (2, 4), (0, 4)]).unwrap();
        assert_eq!(right.edge_count(), 10);
    }

    #[test]
    fn gamma_variants() {
        let apex = gamma_graph(7, GammaVariant::Apex).unwrap();
        assert_eq!(apex.edge_count(), 10);
        assert_eq!(apex.max_degree(), 5);
        let spread = gamma_graph(7, GammaVariant::Spread).unwrap();
        assert_eq!(spread.edge_count(), 10);
        assert_eq!(spread.max_degree(), 4);
        assert_eq!(spread.triangle_count(), 2);
        // Spread at n=7 is literally the cycle-plus-three-chords drawing.
        assert_eq!(spread, Graph::cycle_plus_chords(7, &[(1, 6), (2, 4), (0, 4)]).unwrap());
        for n in [7usize, 12, 20, 64] {
            for v in [GammaVariant::Apex, GammaVariant::Spread] {
                assert_eq!(gamma_graph(n, v).unwrap().edge_count(), n + 3);
            }
        }
        assert!(gamma_graph(6, GammaVariant::Apex).is_err());
    }

    #[test]
    fn remove_edge_and_diameter() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.remove_edge(0, 1).unwrap().edge_count(), 9);
        assert!(k5.remove_edge(0, 1).unwrap().remove_edge(0, 1).is_err());
        let path = Graph::cycle(4).unwrap().remove_edge(0, 1).unwrap();
        assert_eq!(path.edge_count(), 3);
        assert_eq!(path.diameter(), Diameter::Finite(3));
        assert_eq!(Graph::complete(9).unwrap().diameter(), Diameter::Finite(1));
        assert_eq!(Graph::complete(1).unwrap().diameter(), Diameter::Finite(0));
        assert_eq!(Graph::empty(2).unwrap().diameter(), Diameter::Infinite);
        assert!(!Graph::empty(2).unwrap().is_connected());
        // Removing an edge never shrinks the diameter.
        let g = Graph::cycle_plus_chords(6, &[(0, 3)]).unwrap();
        let before = match g.diameter() {
            Diameter::Finite(d) => d,
            Diameter::Infinite => unreachable!(),
        };
        for e in g.edges().to_vec() {
            match g.remove_edge(e.u(), e.v()).unwrap().diameter() {
                Diameter::Finite(d) => assert!(d >= before),
                Diameter::Infinite => {}
            }
        }
    }

    #[test]
    fn handshake_holds() {
        for g in [
            Graph::complete(7).unwrap(),
            Graph::cycle(9).unwrap(),
            Graph::paley(13).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            gamma_graph(11, GammaVariant::Spread).unwrap(),
        ] {
            let sum: usize = g.degrees().iter().sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn degree_stats_exact_average() {
        let k5e = Graph::complete(5).unwrap().remove_edge(0, 1).unwrap();
        let stats = k5e.degree_stats();
        assert_eq!(stats.sequence.iter().sum::<usize>(), (5 - 2) * (5 + 1));
        assert_eq!(stats.max, 4);
        assert_eq!(stats.min, 3);
        assert_eq!(stats.average, BigRational::new(BigInt::from(18), BigInt::from(5)));
    }

    #[test]
    fn pair_bits_round_trip() {
        // Bits in lex pair order on 4 vertices: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
        let g = Graph::from_pair_bits(4, 0b001011).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn canonical_codes_separate_isomorphism_classes() {
        // Paw (triangle + pendant) in two labelings.
        let paw_a = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let paw_b = Graph::new(4, &[(3, 1), (3, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(paw_a.canonical_code().unwrap(), paw_b.canonical_code().unwrap());
        // Diamond is a different class.
        let diamond = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_ne!(paw_a.canonical_code().unwrap(), diamond.canonical_code().unwrap());
        // Path and star on 4 vertices differ too.
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(p4.canonical_code().unwrap(), star.canonical_code().unwrap());
        assert!(Graph::complete(9).unwrap().canonical_code().is_err());
    }

    #[test]
    fn neighbors_iterate_ascending() {
        let g = Graph::new(5, &[(2, 0), (2, 4), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![0, 1, 4]);
        assert_eq!(g.degree(2), 3);
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}
