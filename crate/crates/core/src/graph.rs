//! Labeled simple graphs on up to 31 vertices with bitmask adjacency rows.
//!
//! Vertices are `0..n` internally; every text format (graph6 aside, which has
//! its own encoding) and every JSON report uses 1-based labels. All set
//! operations are single-word bitmask operations: vertex sets fit in a `u32`,
//! edge sets in a `u64` (so edge-set handles require `edge_count() <= 64`).

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Hard cap on the vertex count so vertex sets and the `2n` monomial
/// variables downstream fit in single machine words.
pub const MAX_VERTICES: usize = 31;

/// Largest edge count representable by an [`EdgeSet`].
pub const MAX_EDGES: usize = 64;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("star center {vertex} has degree {degree}, need at least 2")]
    StarDegree { vertex: usize, degree: usize },
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list parse error: {0}")]
    EdgeList(String),
    #[error("enumeration order {0} outside supported range 1..=8")]
    EnumerationOrder(usize),
    #[error("graph has {edges} edges, edge sets support at most {MAX_EDGES}")]
    TooManyEdges { edges: usize },
    #[error("edge bit {bit} out of range for a graph with {edges} edges")]
    EdgeBitOutOfRange { bit: usize, edges: usize },
    #[error("disjoint union on {0} vertices exceeds the {MAX_VERTICES}-vertex cap")]
    UnionTooLarge(usize),
}

/// A subset of the vertices `0..n` of some graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(if n == 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// 1-based labels, ascending. This is the external representation.
    pub fn to_labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|v| v + 1))
    }
}

/// A subset of the edges of a fixed parent graph. Bit `k` refers to the
/// `k`-th edge of the parent's lexicographic edge order (see [`Graph::edges`]).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_bits(bits: u64) -> Self {
        EdgeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, bit: usize) -> bool {
        self.0 >> bit & 1 == 1
    }

    pub fn insert(&mut self, bit: usize) {
        self.0 |= 1 << bit;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(k)
            }
        })
    }
}

impl std::ops::BitOr for EdgeSet {
    type Output = EdgeSet;
    fn bitor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | rhs.0)
    }
}

/// A labeled simple graph on `1..=n` vertices (0-indexed internally).
///
/// Invariants: the adjacency rows are symmetric, loop-free, and contain no
/// bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-indexed endpoint pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// The path `1 - 2 - ... - n` with labels increasing along the path.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// The star on `m + 1` vertices with center label 1 and leaves `2..=m+1`.
    pub fn star_graph(m: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(m + 1)?;
        for leaf in 1..=m {
            g.add_edge(0, leaf)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges as 0-indexed pairs `(i, j)` with `i < j`, lexicographically
    /// sorted. This order indexes [`EdgeSet`] bits.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut upper = self.adj[i] >> (i + 1);
            let mut j = i + 1;
            while upper != 0 {
                let skip = upper.trailing_zeros() as usize;
                j += skip;
                out.push((i, j));
                upper >>= skip + 1;
                j += 1;
            }
        }
        out
    }

    /// Full edge set handle; errors if the graph has more than 64 edges.
    pub fn full_edge_set(&self) -> Result<EdgeSet, GraphError> {
        let m = self.edge_count();
        if m > MAX_EDGES {
            return Err(GraphError::TooManyEdges { edges: m });
        }
        Ok(EdgeSet(if m == 64 { u64::MAX } else { (1u64 << m) - 1 }))
    }

    /// Connected components of the graph minus `removed`, as vertex sets in
    /// ascending order of their least vertex. Isolated vertices count.
    pub fn connected_components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut remaining = self.vertices().bits() & !removed.bits();
        let mut comps = Vec::new();
        while remaining != 0 {
            let mut comp = remaining & remaining.wrapping_neg();
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= self.adj[v] & remaining;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comps.push(VertexSet(comp));
            remaining &= !comp;
        }
        comps
    }

    pub fn component_count(&self, removed: VertexSet) -> usize {
        self.connected_components(removed).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(VertexSet::EMPTY) <= 1
    }

    /// A vertex is simplicial (free) when its closed neighborhood induces a
    /// complete graph.
    pub fn is_simplicial(&self, v: usize) -> bool {
        let nbrs = self.adj[v];
        let mut rest = nbrs;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nbrs & !(1 << a) & !self.adj[a] != 0 {
                return false;
            }
        }
        true
    }

    /// Number of non-simplicial vertices.
    pub fn iv(&self) -> usize {
        (0..self.n).filter(|&v| !self.is_simplicial(v)).count()
    }

    /// Non-simplicial vertices as a set.
    pub fn non_simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.n).filter(|&v| !self.is_simplicial(v)))
    }

    /// The star at `v`: all edges incident to `v`. Requires `deg(v) >= 2`.
    pub fn star(&self, v: usize) -> Result<EdgeSubgraph<'_>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let d = self.degree(v);
        if d < 2 {
            return Err(GraphError::StarDegree { vertex: v, degree: d });
        }
        let mut edges = EdgeSet::EMPTY;
        for (k, &(a, b)) in self.edges().iter().enumerate() {
            if a == v || b == v {
                edges.insert(k);
            }
        }
        EdgeSubgraph::new(self, edges)
    }

    /// Deletes `v` and its incident edges. The remaining vertices are packed
    /// down; the returned map sends old indices to new ones (`None` for `v`).
    ///
    /// # Panics
    /// Panics if `v` is out of range or the graph has a single vertex.
    pub fn ohtani_delete(&self, v: usize) -> (Graph, Vec<Option<usize>>) {
        assert!(v < self.n, "vertex {v} out of range");
        assert!(self.n > 1, "cannot delete the only vertex");
        let mut map = vec![None; self.n];
        let mut next = 0;
        for u in 0..self.n {
            if u != v {
                map[u] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph { n: self.n - 1, adj: vec![0; self.n - 1] };
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let nu = map[u].unwrap();
            let mut row = self.adj[u] & !(1 << v);
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                g.adj[nu] |= 1 << map[w].unwrap();
            }
        }
        (g, map)
    }

    /// Completes the neighborhood of `v` to a clique; `v` itself is kept and
    /// its neighborhood is unchanged.
    pub fn ohtani_saturate(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex {v} out of range");
        let nbrs = self.adj[v];
        let mut g = self.clone();
        let mut rest = nbrs;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.adj[a] |= nbrs & !(1 << a);
        }
        g
    }

    /// Relabels by `perm` (`perm[old] = new`, a bijection on `0..n`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for u in 0..self.n {
            let mut row = self.adj[u];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                g.adj[perm[u]] |= 1 << perm[w];
            }
        }
        g
    }

    /// Induced subgraph on `vs`, vertices relabeled by ascending rank.
    ///
    /// # Panics
    /// Panics if `vs` is empty or not a subset of the vertices.
    pub fn induced(&self, vs: VertexSet) -> Graph {
        assert!(vs.is_subset_of(self.vertices()), "vertex set out of range");
        assert!(!vs.is_empty(), "induced subgraph on the empty set");
        let verts: Vec<usize> = vs.iter().collect();
        let mut g = Graph { n: verts.len(), adj: vec![0; verts.len()] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Spanning subgraph keeping only the edges in `mask`.
    pub fn subgraph_with_edges(&self, mask: EdgeSet) -> Result<Graph, GraphError> {
        let edges = self.edges();
        if edges.len() > MAX_EDGES {
            return Err(GraphError::TooManyEdges { edges: edges.len() });
        }
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for k in mask.iter() {
            let (u, v) = *edges.get(k).ok_or(GraphError::EdgeBitOutOfRange {
                bit: k,
                edges: edges.len(),
            })?;
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Union of the endpoints of the edges in `mask`.
    pub fn edge_support(&self, mask: EdgeSet) -> VertexSet {
        let edges = self.edges();
        let mut s = VertexSet::EMPTY;
        for k in mask.iter() {
            let (u, v) = edges[k];
            s.insert(u);
            s.insert(v);
        }
        s
    }

    /// Vertices with at least one incident edge.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.n).filter(|&v| self.adj[v] != 0))
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::UnionTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph { n, adj })
    }

    pub fn with_added_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        debug_assert!(neighbors.is_subset_of(self.vertices()));
        let mut adj = self.adj.clone();
        adj.push(neighbors.bits());
        let mut g = Graph { n, adj };
        for w in neighbors.iter() {
            g.adj[w] |= 1 << (n - 1);
        }
        Ok(g)
    }

    /// Upper-triangle bits in column-major order, one packed word per
    /// position: entry `k` holds the adjacency bits between position `k` and
    /// positions `0..k`, with position 0 in the most significant place.
    pub fn triangle_columns(&self) -> Vec<u32> {
        let mut cols = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let mut col = 0u32;
            for i in 0..k {
                col = col << 1 | (self.adj[i] >> k & 1);
            }
            cols.push(col);
        }
        cols
    }

    /// The canonical representative of the isomorphism class: the relabeling
    /// whose upper-triangle bit string (column-major) is lexicographically
    /// least over all vertex permutations. Branch-and-bound over partial
    /// labelings with prefix pruning; exact for every `n <= 31`, intended for
    /// the small graphs this crate targets.
    pub fn canonical_form(&self) -> Graph {
        self.relabel(&self.canonical_perm())
    }

    /// The permutation (`old -> new`) realizing [`Graph::canonical_form`].
    pub fn canonical_perm(&self) -> Vec<usize> {
        let n = self.n;
        if n == 1 {
            return vec![0];
        }
        // Low-degree vertices tend to open with zero columns; trying them
        // first finds a tight incumbent early.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (self.degree(v), v));

        let mut best: Option<Vec<u32>> = None;
        let mut best_seq: Vec<usize> = Vec::new();
        let mut seq: Vec<usize> = Vec::with_capacity(n);
        let mut cols: Vec<u32> = Vec::with_capacity(n);
        let mut used = 0u32;
        self.canon_dfs(&order, &mut seq, &mut used, &mut cols, &mut best, &mut best_seq);

        // best_seq[k] = original vertex at position k; invert to old -> new.
        let mut perm = vec![0; n];
        for (pos, &v) in best_seq.iter().enumerate() {
            perm[v] = pos;
        }
        perm
    }

    fn canon_dfs(
        &self,
        order: &[usize],
        seq: &mut Vec<usize>,
        used: &mut u32,
        cols: &mut Vec<u32>,
        best: &mut Option<Vec<u32>>,
        best_seq: &mut Vec<usize>,
    ) {
        let k = seq.len();
        if k == self.n {
            let better = match best {
                None => true,
                Some(b) => cols.as_slice() < &b[..],
            };
            if better {
                *best = Some(cols.clone());
                *best_seq = seq.clone();
            }
            return;
        }
        for &v in order {
            if *used >> v & 1 == 1 {
                continue;
            }
            let mut col = 0u32;
            for &u in seq.iter() {
                col = col << 1 | (self.adj[u] >> v & 1);
            }
            if let Some(b) = best {
                // cols[0..k] is <= the incumbent prefix; a strictly smaller
                // prefix wins regardless of col.
                if cols.as_slice() == &b[..k] && col > b[k] {
                    continue;
                }
            }
            seq.push(v);
            cols.push(col);
            *used |= 1 << v;
            self.canon_dfs(order, seq, used, cols, best, best_seq);
            *used &= !(1 << v);
            cols.pop();
            seq.pop();
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

/// A subgraph of a fixed parent given by a subset of its edges; the vertex
/// support is derived from the endpoints.
#[derive(Clone, Copy)]
pub struct EdgeSubgraph<'g> {
    parent: &'g Graph,
    edges: EdgeSet,
}

impl<'g> EdgeSubgraph<'g> {
    pub fn new(parent: &'g Graph, edges: EdgeSet) -> Result<Self, GraphError> {
        let m = parent.edge_count();
        if m > MAX_EDGES {
            return Err(GraphError::TooManyEdges { edges: m });
        }
        if let Some(bit) = edges.iter().find(|&k| k >= m) {
            return Err(GraphError::EdgeBitOutOfRange { bit, edges: m });
        }
        Ok(EdgeSubgraph { parent, edges })
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let all = self.parent.edges();
        self.edges.iter().map(|k| all[k]).collect()
    }

    pub fn vertex_support(&self) -> VertexSet {
        self.parent.edge_support(self.edges)
    }

    /// The subgraph as a spanning graph of the parent (same vertex count).
    pub fn to_spanning_graph(&self) -> Graph {
        self.parent
            .subgraph_with_edges(self.edges)
            .expect("edge set validated on construction")
    }
}

impl fmt::Debug for EdgeSubgraph<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSubgraph(")?;
        for (k, (u, v)) in self.edge_pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle {2,3,5} with pendant edges 1-2, 3-4, 5-6 (1-based).
    pub(crate) fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn components_of_net_minus_5() {
        let g = net();
        let comps = g.connected_components(VertexSet::singleton(4));
        assert_eq!(
            comps,
            vec![
                VertexSet::from_vertices([0, 1, 2, 3]),
                VertexSet::from_vertices([5])
            ]
        );
    }

    #[test]
    fn components_trivia() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.connected_components(VertexSet::EMPTY), vec![k5.vertices()]);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            p3.connected_components(VertexSet::singleton(1)),
            vec![VertexSet::singleton(0), VertexSet::singleton(2)]
        );
    }

    #[test]
    fn simplicial_vertices_of_net() {
        let g = net();
        assert!(g.is_simplicial(0));
        assert!(!g.is_simplicial(4));
        assert_eq!(g.iv(), 3);
        assert_eq!(g.non_simplicial_vertices(), VertexSet::from_vertices([1, 2, 4]));
    }

    #[test]
    fn simplicial_trivia() {
        let k4 = Graph::complete(4).unwrap();
        assert!((0..4).all(|v| k4.is_simplicial(v)));
        assert_eq!(k4.iv(), 0);
        // Star: leaves simplicial, center not.
        let s3 = Graph::star_graph(3).unwrap();
        assert_eq!(s3.iv(), 1);
        assert!(!s3.is_simplicial(0));
    }

    #[test]
    fn star_of_net_at_5() {
        let g = net();
        let st = g.star(4).unwrap();
        let mut pairs = st.edge_pairs();
        pairs.sort();
        assert_eq!(pairs, vec![(1, 4), (2, 4), (4, 5)]);
        assert_eq!(st.vertex_support(), VertexSet::from_vertices([1, 2, 4, 5]));
    }

    #[test]
    fn star_trivia_and_errors() {
        let s4 = Graph::star_graph(4).unwrap();
        assert_eq!(s4.star(0).unwrap().edge_count(), 4);
        assert!(matches!(
            s4.star(1),
            Err(GraphError::StarDegree { vertex: 1, degree: 1 })
        ));
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.star(1).unwrap().edge_count(), 2);
    }

    #[test]
    fn ohtani_saturate_net_at_5() {
        let g = net();
        let sat = g.ohtani_saturate(4);
        assert!(sat.has_edge(1, 5));
        assert!(sat.has_edge(2, 5));
        assert!(sat.has_edge(1, 2));
        assert_eq!(sat.edge_count(), g.edge_count() + 2);
        assert_eq!(sat.neighbors(4), g.neighbors(4));
    }

    #[test]
    fn ohtani_saturate_complete_fixed_point() {
        let k5 = Graph::complete(5).unwrap();
        for v in 0..5 {
            assert_eq!(k5.ohtani_saturate(v), k5);
        }
    }

    #[test]
    fn ohtani_delete_net_at_5() {
        let g = net();
        let (h, map) = g.ohtani_delete(4);
        assert_eq!(h.n(), 5);
        assert_eq!(map, vec![Some(0), Some(1), Some(2), Some(3), None, Some(4)]);
        // Path 1-2-3-4 plus the now-isolated vertex 6.
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(h.degree(4), 0);
    }

    #[test]
    fn edge_order_and_subgraphs() {
        let g = net();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 4), (2, 3), (2, 4), (4, 5)]);
        let sub = g.subgraph_with_edges(EdgeSet::from_bits(0b100001)).unwrap();
        assert_eq!(sub.edges(), vec![(0, 1), (4, 5)]);
        assert_eq!(
            g.edge_support(EdgeSet::from_bits(0b100001)),
            VertexSet::from_vertices([0, 1, 4, 5])
        );
    }

    #[test]
    fn relabel_and_induced() {
        let p3 = Graph::path(3).unwrap();
        // Move the center to label 1: 2-1-3.
        let r = p3.relabel(&[1, 0, 2]);
        assert_eq!(r.edges(), vec![(0, 1), (0, 2)]);
        let ind = net().induced(VertexSet::from_vertices([1, 2, 4]));
        assert_eq!(ind, Graph::complete(3).unwrap());
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let g = net();
        let perm = [3, 0, 5, 1, 2, 4];
        let h = g.relabel(&perm);
        assert_eq!(g.canonical_form(), h.canonical_form());
        // Idempotent on its own output.
        let c = g.canonical_form();
        assert_eq!(c.canonical_form(), c);
    }

    #[test]
    fn disjoint_union_shape() {
        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::path(2).unwrap()).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.component_count(VertexSet::EMPTY), 2);
    }

    #[test]
    fn vertex_set_display_and_serde() {
        let s = VertexSet::from_vertices([0, 2, 4]);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3,5]");
        assert_eq!(s.to_labels(), vec![1, 3, 5]);
    }
}
