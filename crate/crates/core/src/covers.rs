//! Clique machinery and cover-type invariants: the number of maximal cliques
//! `c(G)`, the minimum of `#cliques + 2·#stars` over mixed clique/star edge
//! covers, and the largest clique-disjoint edge set `η(G)`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::graph::{EdgeSet, Graph, VertexSet};

/// All maximal cliques, each as a vertex set, sorted ascending by bitmask.
/// Bron–Kerbosch with pivoting on bitmask sets. Isolated vertices count as
/// maximal cliques of size 1.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort();
    out
}

/// `c(G)`, the number of maximal cliques.
pub fn clique_count(g: &Graph) -> usize {
    maximal_cliques(g).len()
}

fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    // Pivot with the most neighbors in P.
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (g.neighbors(u) & p).len())
        .expect("P or X nonempty");
    let mut p = p;
    let mut x = x;
    for v in (p - g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}

/// An edge cover by cliques (weight 1 each) and stars with at least two
/// leaves (weight 2 each).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    /// Clique members, each of size >= 2, sorted by bitmask.
    pub cliques: Vec<VertexSet>,
    /// Star members as (center, leaves) with >= 2 leaves, sorted.
    pub stars: Vec<(usize, VertexSet)>,
    /// `#cliques + 2·#stars`.
    pub value: usize,
}

impl CoverSolution {
    /// Validates the cover invariants against its carrier graph: every clique
    /// member induces a complete subgraph of size >= 2, every star member's
    /// edges exist, and together they cover `E(G)`.
    ///
    /// # Panics
    /// Panics if any invariant fails.
    pub fn new(g: &Graph, mut cliques: Vec<VertexSet>, mut stars: Vec<(usize, VertexSet)>) -> Self {
        for &c in &cliques {
            assert!(c.len() >= 2, "clique member {c} too small");
            for u in c.iter() {
                assert!(
                    c.without(u).is_subset_of(g.neighbors(u)),
                    "clique member {c} not complete in the carrier graph"
                );
            }
        }
        for &(center, leaves) in &stars {
            assert!(leaves.len() >= 2, "star at {} has fewer than 2 leaves", center + 1);
            assert!(
                leaves.is_subset_of(g.neighbors(center)),
                "star at {} uses non-edges",
                center + 1
            );
        }
        for (u, v) in g.edges() {
            let in_clique = cliques.iter().any(|c| c.contains(u) && c.contains(v));
            let in_star = stars.iter().any(|&(c, l)| {
                (c == u && l.contains(v)) || (c == v && l.contains(u))
            });
            assert!(in_clique || in_star, "edge {}-{} uncovered", u + 1, v + 1);
        }
        cliques.sort();
        stars.sort();
        let value = cliques.len() + 2 * stars.len();
        CoverSolution { cliques, stars, value }
    }

    fn key(&self) -> (usize, &[VertexSet], &[(usize, VertexSet)]) {
        (self.value, &self.cliques, &self.stars)
    }
}

impl Serialize for CoverSolution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct StarEntry {
            center: usize,
            leaves: VertexSet,
        }
        let mut st = s.serialize_struct("CoverSolution", 5)?;
        st.serialize_field("p", &self.cliques.len())?;
        st.serialize_field("q", &self.stars.len())?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("cliques", &self.cliques)?;
        let stars: Vec<StarEntry> = self
            .stars
            .iter()
            .map(|&(c, l)| StarEntry { center: c + 1, leaves: l })
            .collect();
        st.serialize_field("stars", &stars)?;
        st.end()
    }
}

#[derive(Clone, Copy)]
enum Candidate {
    Clique(VertexSet),
    Star { center: usize, leaves: VertexSet },
}

impl Candidate {
    fn weight(&self) -> usize {
        match self {
            Candidate::Clique(_) => 1,
            Candidate::Star { .. } => 2,
        }
    }
}

/// A cover minimizing `#cliques + 2·#stars`, found by exact branch-and-bound
/// over maximal cliques, single edges, and the full star at every vertex of
/// degree >= 2 (any clique extends to a maximal one without uncovering edges,
/// and sub-stars are dominated by full stars). Ties are broken toward the
/// lexicographically least clique list, then star list.
pub fn mixed_cover_number(g: &Graph) -> CoverSolution {
    let edges = g.edges();
    assert!(edges.len() <= crate::graph::MAX_EDGES, "edge set exceeds one machine word");
    if edges.is_empty() {
        return CoverSolution::new(g, Vec::new(), Vec::new());
    }

    let mut pool: Vec<Candidate> = Vec::new();
    let mut clique_sets: Vec<VertexSet> = maximal_cliques(g)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    for &(u, v) in &edges {
        let pair = VertexSet::from_vertices([u, v]);
        if !clique_sets.contains(&pair) {
            clique_sets.push(pair);
        }
    }
    clique_sets.sort();
    pool.extend(clique_sets.into_iter().map(Candidate::Clique));
    for v in 0..g.n() {
        if g.degree(v) >= 2 {
            pool.push(Candidate::Star { center: v, leaves: g.neighbors(v) });
        }
    }

    // Edge mask covered by each candidate.
    let covered_mask: Vec<u64> = pool
        .iter()
        .map(|cand| {
            let mut mask = 0u64;
            for (k, &(u, v)) in edges.iter().enumerate() {
                let covers = match cand {
                    Candidate::Clique(c) => c.contains(u) && c.contains(v),
                    Candidate::Star { center, leaves } => {
                        (*center == u && leaves.contains(v)) || (*center == v && leaves.contains(u))
                    }
                };
                if covers {
                    mask |= 1 << k;
                }
            }
            mask
        })
        .collect();

    let all = g.full_edge_set().expect("edge count checked above").bits();
    let mut best: Option<CoverSolution> = None;
    let mut chosen: Vec<usize> = Vec::new();
    cover_search(g, &pool, &covered_mask, all, 0, 0, &mut chosen, &mut best);
    best.expect("full clique cover is always feasible")
}

#[allow(clippy::too_many_arguments)]
fn cover_search(
    g: &Graph,
    pool: &[Candidate],
    covered_mask: &[u64],
    all: u64,
    covered: u64,
    cost: usize,
    chosen: &mut Vec<usize>,
    best: &mut Option<CoverSolution>,
) {
    if covered == all {
        let mut cliques = Vec::new();
        let mut stars = Vec::new();
        for &k in chosen.iter() {
            match pool[k] {
                Candidate::Clique(c) => cliques.push(c),
                Candidate::Star { center, leaves } => stars.push((center, leaves)),
            }
        }
        let sol = CoverSolution::new(g, cliques, stars);
        let better = match best {
            None => true,
            Some(b) => sol.key() < b.key(),
        };
        if better {
            *best = Some(sol);
        }
        return;
    }
    if let Some(b) = best {
        // At least one more member is needed, at weight >= 1.
        if cost + 1 > b.value {
            return;
        }
    }
    let target = (!covered & all).trailing_zeros() as usize;
    for (k, mask) in covered_mask.iter().enumerate() {
        if mask >> target & 1 == 0 {
            continue;
        }
        if let Some(b) = best {
            if cost + pool[k].weight() > b.value {
                continue;
            }
        }
        chosen.push(k);
        cover_search(g, pool, covered_mask, all, covered | mask, cost + pool[k].weight(), chosen, best);
        chosen.pop();
    }
}

/// `η(G)`: the maximum size of an edge set no two of whose members lie in a
/// common clique of `G`. Two edges conflict exactly when the union of their
/// endpoints induces a complete subgraph (3 vertices when they share an
/// endpoint, 4 otherwise); η is the maximum independent set of that conflict
/// graph, solved exactly by bitmask branch-and-bound.
pub fn eta(g: &Graph) -> usize {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= crate::graph::MAX_EDGES, "edge set exceeds one machine word");
    if m == 0 {
        return 0;
    }
    let mut conflict = vec![0u64; m];
    for a in 0..m {
        for b in a + 1..m {
            if edges_in_common_clique(g, edges[a], edges[b]) {
                conflict[a] |= 1 << b;
                conflict[b] |= 1 << a;
            }
        }
    }
    let avail = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut best = 0;
    mis_branch(&conflict, avail, 0, &mut best);
    best
}

fn edges_in_common_clique(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    let union = VertexSet::from_vertices([e.0, e.1, f.0, f.1]);
    union
        .iter()
        .all(|u| union.without(u).is_subset_of(g.neighbors(u)))
}

fn mis_branch(conflict: &[u64], mut avail: u64, mut current: usize, best: &mut usize) {
    loop {
        if current + avail.count_ones() as usize <= *best {
            return;
        }
        if avail == 0 {
            *best = current.max(*best);
            return;
        }
        // Greedy reductions: a vertex with no remaining conflicts is always
        // taken; one with a single conflict is taken over its neighbor.
        let mut reduced = false;
        let mut scan = avail;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (conflict[v] & avail).count_ones();
            if deg <= 1 {
                avail &= !(conflict[v] | 1 << v);
                current += 1;
                reduced = true;
                break;
            }
        }
        if reduced {
            continue;
        }
        // Branch on a max-degree vertex: include it or discard it.
        let v = {
            let mut arg = 0;
            let mut max_deg = 0;
            let mut scan = avail;
            while scan != 0 {
                let u = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let deg = (conflict[u] & avail).count_ones();
                if deg > max_deg {
                    max_deg = deg;
                    arg = u;
                }
            }
            arg
        };
        mis_branch(conflict, avail & !(conflict[v] | 1 << v), current + 1, best);
        avail &= !(1 << v);
    }
}
