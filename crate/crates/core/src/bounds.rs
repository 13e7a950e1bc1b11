//! Upper bounds for the regularity of a binomial edge ideal and the tools
//! that cross-check them: the clique-count, mixed-cover, clique-disjoint, and
//! height bounds, the recursion over the Ohtani operations, and the checker
//! for clique-sum decompositions with initial-ideal additivity.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::covers::{clique_count, eta, mixed_cover_number};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::graph6::emit_graph6;
use crate::groebner::initial_ideal;
use crate::homology::{reg_binomial_edge, HomologyError};
use crate::primes::height;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("A, B, C must be nonempty")]
    EmptyPart,
    #[error("A, B, C must be pairwise disjoint")]
    OverlappingParts,
    #[error("part contains a vertex outside the graph")]
    PartOutOfRange,
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Memo for the recursion, keyed by canonical form. Bounded; evicts the
/// stalest half when full.
struct BoundCache {
    map: HashMap<Graph, (usize, u64)>,
    stamp: u64,
    cap: usize,
}

impl BoundCache {
    fn new(cap: usize) -> Self {
        BoundCache { map: HashMap::new(), stamp: 0, cap }
    }

    fn get(&mut self, key: &Graph) -> Option<usize> {
        self.stamp += 1;
        let stamp = self.stamp;
        self.map.get_mut(key).map(|entry| {
            entry.1 = stamp;
            entry.0
        })
    }

    fn insert(&mut self, key: Graph, value: usize) {
        if self.map.len() >= self.cap {
            let mut stamps: Vec<u64> = self.map.values().map(|&(_, s)| s).collect();
            stamps.sort_unstable();
            let cutoff = stamps[stamps.len() / 2];
            self.map.retain(|_, &mut (_, s)| s > cutoff);
        }
        self.stamp += 1;
        self.map.insert(key, (value, self.stamp));
    }
}

static OHTANI_CACHE: LazyLock<Mutex<BoundCache>> =
    LazyLock::new(|| Mutex::new(BoundCache::new(1 << 16)));

/// Upper bound for `reg(R/J_G)` by recursion over the Ohtani operations:
/// when every component is complete the value is the number of components
/// with at least two vertices; otherwise it is the minimum over all
/// non-simplicial `v` of
/// `max { bound(G \ v), bound(G_v), bound(G_v \ v) + 1 }`.
///
/// Each `v` yields a valid bound, so the minimum is one too, and all three
/// arguments strictly decrease the non-simplicial count, so the recursion
/// terminates. Memoized on canonical forms; safe to call concurrently.
pub fn ohtani_bound(g: &Graph) -> usize {
    let support = g.support();
    if support.is_empty() {
        return 0;
    }
    let h = if support == g.vertices() { g.clone() } else { g.induced(support) };
    if h.iv() == 0 {
        return h
            .connected_components(VertexSet::EMPTY)
            .iter()
            .filter(|c| c.len() >= 2)
            .count();
    }
    let key = h.canonical_form();
    if let Some(v) = OHTANI_CACHE.lock().unwrap().get(&key) {
        return v;
    }
    let mut best = usize::MAX;
    for v in h.non_simplicial_vertices().iter() {
        let (del, _) = h.ohtani_delete(v);
        let sat = h.ohtani_saturate(v);
        let (sat_del, _) = sat.ohtani_delete(v);
        let cand = ohtani_bound(&del)
            .max(ohtani_bound(&sat))
            .max(ohtani_bound(&sat_del) + 1);
        best = best.min(cand);
    }
    OHTANI_CACHE.lock().unwrap().insert(key, best);
    best
}

/// Truth of `reg <= bound` for each bound in a [`BoundsReport`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct BoundVerdicts {
    pub reg_leq_c: bool,
    pub reg_leq_mixed_cover: bool,
    pub reg_leq_eta: bool,
    pub reg_leq_height: bool,
    pub reg_leq_ohtani: bool,
}

impl BoundVerdicts {
    pub fn all_hold(&self) -> bool {
        self.reg_leq_c
            && self.reg_leq_mixed_cover
            && self.reg_leq_eta
            && self.reg_leq_height
            && self.reg_leq_ohtani
    }
}

/// The regularity of a graph's binomial edge ideal next to every upper bound
/// this crate computes.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct BoundsReport {
    pub graph6: String,
    pub reg: usize,
    pub height: usize,
    pub c: usize,
    pub mixed_cover: usize,
    pub eta: usize,
    pub ohtani: usize,
    pub verdicts: BoundVerdicts,
}

pub fn bounds_report(g: &Graph, p: u32) -> Result<BoundsReport, BoundsError> {
    let reg = reg_binomial_edge(g, p)?;
    let height = height(g);
    let c = clique_count(g);
    let mixed_cover = mixed_cover_number(g).value;
    let eta = eta(g);
    let ohtani = ohtani_bound(g);
    let verdicts = BoundVerdicts {
        reg_leq_c: reg <= c,
        reg_leq_mixed_cover: reg <= mixed_cover,
        reg_leq_eta: reg <= eta,
        reg_leq_height: reg <= height,
        reg_leq_ohtani: reg <= ohtani,
    };
    Ok(BoundsReport { graph6: emit_graph6(g), reg, height, c, mixed_cover, eta, ohtani, verdicts })
}

/// A hypothesis failure of a vertex-partition decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompViolation {
    UnionNotWhole,
    BNotComplete,
    BNotConnected,
    EdgeBetweenAAndC,
}

impl fmt::Display for DecompViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            DecompViolation::UnionNotWhole => "union of A, B, C is not V(G)",
            DecompViolation::BNotComplete => "B not complete",
            DecompViolation::BNotConnected => "B not connected",
            DecompViolation::EdgeBetweenAAndC => "edge between A and C",
        };
        f.write_str(text)
    }
}

impl Serialize for DecompViolation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Outcome of checking a partition `V(G) = A ⊔ B ⊔ C` with `B` inducing a
/// complete subgraph and no edge joining `A` to `C`: under a block relabeling
/// `A < B < C`, the initial ideal of `G` must equal the sum of the initial
/// ideals of the induced subgraphs `H_1` (on `A ∪ B`) and `H_2` (on `B ∪ C`),
/// and `reg(G) <= reg(H_1) + reg(H_2)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionCase {
    pub graph6: String,
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "B")]
    pub b: VertexSet,
    #[serde(rename = "C")]
    pub c: VertexSet,
    pub valid: bool,
    pub violations: Vec<DecompViolation>,
    pub relabeled_graph6: Option<String>,
    pub h1_graph6: Option<String>,
    pub h2_graph6: Option<String>,
    pub init_g: Option<String>,
    pub init_h_sum: Option<String>,
    pub init_sum_equal: Option<bool>,
    pub reg_g: Option<usize>,
    pub reg_h1: Option<usize>,
    pub reg_h2: Option<usize>,
    pub reg_inequality_holds: Option<bool>,
}

impl DecompositionCase {
    /// Both conclusions hold (false when the hypotheses are invalid).
    pub fn conclusions_hold(&self) -> bool {
        self.init_sum_equal == Some(true) && self.reg_inequality_holds == Some(true)
    }
}

pub fn decomp_check(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    c: VertexSet,
    p: u32,
) -> Result<DecompositionCase, BoundsError> {
    if a.is_empty() || b.is_empty() || c.is_empty() {
        return Err(BoundsError::EmptyPart);
    }
    if !(a & b).is_empty() || !(a & c).is_empty() || !(b & c).is_empty() {
        return Err(BoundsError::OverlappingParts);
    }
    if !(a | b | c).is_subset_of(g.vertices()) {
        return Err(BoundsError::PartOutOfRange);
    }

    let mut violations = Vec::new();
    if (a | b | c) != g.vertices() {
        violations.push(DecompViolation::UnionNotWhole);
    }
    let b_complete = b
        .iter()
        .all(|u| b.without(u).is_subset_of(g.neighbors(u)));
    if !b_complete {
        violations.push(DecompViolation::BNotComplete);
        // A complete nonempty induced subgraph is connected; only flag
        // connectivity when completeness already failed.
        if g.induced(b).component_count(VertexSet::EMPTY) > 1 {
            violations.push(DecompViolation::BNotConnected);
        }
    }
    if a.iter().any(|u| !(g.neighbors(u) & c).is_empty()) {
        violations.push(DecompViolation::EdgeBetweenAAndC);
    }

    let mut case = DecompositionCase {
        graph6: emit_graph6(g),
        a,
        b,
        c,
        valid: violations.is_empty(),
        violations,
        relabeled_graph6: None,
        h1_graph6: None,
        h2_graph6: None,
        init_g: None,
        init_h_sum: None,
        init_sum_equal: None,
        reg_g: None,
        reg_h1: None,
        reg_h2: None,
        reg_inequality_holds: None,
    };
    if !case.valid {
        return Ok(case);
    }

    // Block relabeling A < B < C (ascending inside each block).
    let order: Vec<usize> = a.iter().chain(b.iter()).chain(c.iter()).collect();
    let mut perm = vec![0usize; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let relabeled = g.relabel(&perm);
    let na = a.len();
    let nab = na + b.len();
    let ab = VertexSet::from_vertices(0..nab);
    let bc = VertexSet::from_vertices(na..g.n());

    let spanning_on = |verts: VertexSet| -> Result<Graph, GraphError> {
        let mut mask = crate::graph::EdgeSet::EMPTY;
        for (k, &(u, v)) in relabeled.edges().iter().enumerate() {
            if verts.contains(u) && verts.contains(v) {
                mask.insert(k);
            }
        }
        relabeled.subgraph_with_edges(mask)
    };
    let h1 = spanning_on(ab)?;
    let h2 = spanning_on(bc)?;

    let init_g = initial_ideal(&relabeled);
    let init_sum = initial_ideal(&h1).sum(&initial_ideal(&h2));
    let reg_g = reg_binomial_edge(&relabeled, p)?;
    let reg_h1 = reg_binomial_edge(&h1, p)?;
    let reg_h2 = reg_binomial_edge(&h2, p)?;

    case.relabeled_graph6 = Some(emit_graph6(&relabeled));
    case.h1_graph6 = Some(emit_graph6(&h1));
    case.h2_graph6 = Some(emit_graph6(&h2));
    case.init_sum_equal = Some(init_g == init_sum);
    case.init_g = Some(init_g.text());
    case.init_h_sum = Some(init_sum.text());
    case.reg_g = Some(reg_g);
    case.reg_h1 = Some(reg_h1);
    case.reg_h2 = Some(reg_h2);
    case.reg_inequality_holds = Some(reg_g <= reg_h1 + reg_h2);
    Ok(case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::connected_graphs;

    fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn ohtani_base_cases() {
        for n in 2..=6 {
            assert_eq!(ohtani_bound(&Graph::complete(n).unwrap()), 1);
        }
        assert_eq!(ohtani_bound(&Graph::new(4).unwrap()), 0);
        let two_triangles = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(ohtani_bound(&two_triangles), 2);
    }

    #[test]
    fn ohtani_p3_recursion_step() {
        // Center deletion: edgeless (0), saturation: K_3 (1), both: K_2 (1).
        assert_eq!(ohtani_bound(&Graph::path(3).unwrap()), 2);
    }

    #[test]
    fn ohtani_net_golden_value() {
        // Sits between reg = 4 and height = 5; pinned at first computation.
        assert_eq!(ohtani_bound(&net()), 4);
    }

    #[test]
    fn ohtani_is_relabeling_invariant() {
        let g = net();
        let perm = [5, 2, 0, 4, 1, 3];
        assert_eq!(ohtani_bound(&g), ohtani_bound(&g.relabel(&perm)));
    }

    #[test]
    fn bound_sandwich_small() {
        for n in 2..=5 {
            for g in connected_graphs(n).unwrap() {
                let reg = reg_binomial_edge(&g, 2).unwrap();
                let oht = ohtani_bound(&g);
                let hgt = height(&g);
                assert!(reg <= oht && oht <= hgt, "{g:?}: reg={reg} ohtani={oht} hgt={hgt}");
            }
        }
    }

    #[test]
    fn bounds_report_examples() {
        let r = bounds_report(&net(), 2).unwrap();
        assert_eq!((r.reg, r.height, r.c, r.mixed_cover, r.eta), (4, 5, 4, 4, 4));
        assert!(r.verdicts.all_hold());
        assert!(r.ohtani <= r.height && r.mixed_cover <= r.c);

        let r = bounds_report(&Graph::star_graph(4).unwrap(), 2).unwrap();
        assert_eq!((r.reg, r.height, r.c, r.mixed_cover, r.eta), (2, 2, 4, 2, 4));

        let r = bounds_report(&Graph::complete(5).unwrap(), 2).unwrap();
        assert_eq!((r.reg, r.height, r.c, r.mixed_cover, r.eta, r.ohtani), (1, 4, 1, 1, 1, 1));
    }

    #[test]
    fn bounds_report_json_uses_camel_case() {
        let r = bounds_report(&Graph::complete(2).unwrap(), 2).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert!(json.get("mixedCover").is_some());
        assert!(json["verdicts"].get("regLeqHeight").is_some());
    }

    #[test]
    fn decomp_p3_three_singletons() {
        let g = Graph::path(3).unwrap();
        let case = decomp_check(
            &g,
            VertexSet::singleton(0),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
            2,
        )
        .unwrap();
        assert!(case.valid);
        assert_eq!(case.init_sum_equal, Some(true));
        assert_eq!(case.init_g.as_deref(), Some("(x1*y2, x2*y3)"));
        assert_eq!((case.reg_g, case.reg_h1, case.reg_h2), (Some(2), Some(1), Some(1)));
        assert!(case.conclusions_hold());
    }

    #[test]
    fn decomp_net_pendant_split() {
        let g = net();
        let case = decomp_check(
            &g,
            VertexSet::singleton(0),
            VertexSet::singleton(1),
            VertexSet::from_vertices([2, 3, 4, 5]),
            2,
        )
        .unwrap();
        assert!(case.valid, "{:?}", case.violations);
        assert!(case.conclusions_hold());
    }

    #[test]
    fn decomp_rejects_non_clique_b() {
        // B = {1, 4} in the net: non-adjacent.
        let g = net();
        let case = decomp_check(
            &g,
            VertexSet::singleton(1),
            VertexSet::from_vertices([0, 3]),
            VertexSet::from_vertices([2, 4, 5]),
            2,
        )
        .unwrap();
        assert!(!case.valid);
        assert!(case.violations.contains(&DecompViolation::BNotComplete));
        assert_eq!(case.init_sum_equal, None);
    }

    #[test]
    fn decomp_flags_ac_edges_and_partial_unions() {
        let g = Graph::path(4).unwrap();
        let case = decomp_check(
            &g,
            VertexSet::singleton(0),
            VertexSet::singleton(2),
            VertexSet::from_vertices([1, 3]),
            2,
        )
        .unwrap();
        assert!(case.violations.contains(&DecompViolation::EdgeBetweenAAndC));

        let case = decomp_check(
            &g,
            VertexSet::singleton(0),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
            2,
        )
        .unwrap();
        assert!(case.violations.contains(&DecompViolation::UnionNotWhole));
    }

    #[test]
    fn decomp_precondition_errors() {
        let g = Graph::path(3).unwrap();
        assert!(matches!(
            decomp_check(&g, VertexSet::EMPTY, VertexSet::singleton(1), VertexSet::singleton(2), 2),
            Err(BoundsError::EmptyPart)
        ));
        assert!(matches!(
            decomp_check(
                &g,
                VertexSet::singleton(0),
                VertexSet::singleton(0),
                VertexSet::singleton(2),
                2
            ),
            Err(BoundsError::OverlappingParts)
        ));
    }
}
