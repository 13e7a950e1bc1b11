//! Cut sets, the invariant `b_G`, and the height of the binomial edge ideal.
//!
//! For `S ⊆ V(G)` with components `C_1, ..., C_c` of `G \ S`,
//! `b(S) = 2·#S + Σ(#C_i − 1)`, and the height of the ideal is the minimum
//! of `b(S)` over all subsets. Cut sets (`S = ∅`, or removing any single
//! element of `S` strictly decreases the component count of `G \ S`) index
//! the minimal primes; for those `b(S)` is the height of the prime.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// One minimal prime, recorded combinatorially: the cut set together with the
/// component data of `G \ S`, never as polynomial generators.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CutSetRecord {
    /// The removed vertex set (1-based labels in JSON).
    #[serde(rename = "S")]
    pub s: VertexSet,
    /// Component count of `G \ S`.
    #[serde(rename = "c")]
    pub component_count: usize,
    /// `2·#S + Σ(#C_i − 1)` over the components of `G \ S`.
    #[serde(rename = "b")]
    pub b_value: usize,
    /// Whether `S` passes the cut-set criterion.
    #[serde(rename = "cut")]
    pub is_cut_set: bool,
    /// Height of the associated prime; equals `b_value` for cut sets.
    pub height: usize,
}

impl CutSetRecord {
    pub fn evaluate(g: &Graph, s: VertexSet) -> CutSetRecord {
        let b = b_value(g, s);
        CutSetRecord {
            s,
            component_count: g.component_count(s),
            b_value: b,
            is_cut_set: is_cut_set(g, s),
            height: b,
        }
    }
}

/// `2·#S + Σ(#C_i − 1)` over the components of `G \ S` (isolated vertices
/// contribute 0).
///
/// Note the second summand is `(n − #S) − c(S)`, not `n − c(S)`: removed
/// vertices do not count toward the components. On the path 1–2–3 with
/// `S = {2}` this gives `2 + 0 + 0 = 2`, matching the minimum over all `S`;
/// the other reading would give 3.
pub fn b_value(g: &Graph, s: VertexSet) -> usize {
    debug_assert!(s.is_subset_of(g.vertices()));
    let comps = g.connected_components(s);
    2 * s.len() + comps.iter().map(|c| c.len() - 1).sum::<usize>()
}

/// `S = ∅`, or every `i ∈ S` satisfies `c(S \ {i}) < c(S)` where `c` counts
/// components of `G` minus the given set.
pub fn is_cut_set(g: &Graph, s: VertexSet) -> bool {
    debug_assert!(s.is_subset_of(g.vertices()));
    if s.is_empty() {
        return true;
    }
    let c = g.component_count(s);
    s.iter().all(|i| g.component_count(s.without(i)) < c)
}

/// Height of the binomial edge ideal: the minimum of [`b_value`] over all
/// `2^n` subsets. Exhaustive with popcount pruning; additive over connected
/// components by construction.
pub fn height(g: &Graph) -> usize {
    let n = g.n();
    // S = ∅ gives an initial incumbent of n - c(∅).
    let mut best = b_value(g, VertexSet::EMPTY);
    for bits in 1..1u32 << n {
        if 2 * bits.count_ones() as usize >= best {
            continue;
        }
        let b = b_value(g, VertexSet::from_bits(bits));
        if b < best {
            best = b;
        }
    }
    best
}

/// All minimal primes of the binomial edge ideal as [`CutSetRecord`]s,
/// sorted by `(height, S)`.
///
/// For disconnected input the records are computed per connected component
/// (with `S` in the original labels); the set of minimal primes of the whole
/// ideal corresponds to unions across components, which are not expanded.
pub fn minimal_primes(g: &Graph) -> Vec<CutSetRecord> {
    let comps = g.connected_components(VertexSet::EMPTY);
    let mut records = Vec::new();
    if comps.len() <= 1 {
        collect_cut_sets(g, &mut records, |s| s);
    } else {
        for comp in comps {
            let verts: Vec<usize> = comp.iter().collect();
            let sub = g.induced(comp);
            collect_cut_sets(&sub, &mut records, |s| {
                VertexSet::from_vertices(s.iter().map(|v| verts[v]))
            });
        }
    }
    records.sort_by_key(|r| (r.height, r.s));
    records
}

fn collect_cut_sets(g: &Graph, out: &mut Vec<CutSetRecord>, lift: impl Fn(VertexSet) -> VertexSet) {
    for bits in 0..1u32 << g.n() {
        let s = VertexSet::from_bits(bits);
        if is_cut_set(g, s) {
            let mut rec = CutSetRecord::evaluate(g, s);
            rec.s = lift(s);
            out.push(rec);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn b_value_examples() {
        let g = net();
        assert_eq!(b_value(&g, VertexSet::singleton(4)), 5);
        assert_eq!(b_value(&g, VertexSet::EMPTY), 5);
        for n in 2..=6 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(b_value(&k, VertexSet::EMPTY), n - 1);
        }
        // Star center: all leaves become isolated.
        for m in 2..=6 {
            let s = Graph::star_graph(m).unwrap();
            assert_eq!(b_value(&s, VertexSet::singleton(0)), 2);
        }
    }

    #[test]
    fn cut_set_examples() {
        let g = net();
        assert!(is_cut_set(&g, VertexSet::EMPTY));
        assert!(is_cut_set(&g, VertexSet::singleton(4)));
        // Removing a leaf never disconnects.
        assert!(!is_cut_set(&g, VertexSet::singleton(0)));
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&net()), 5);
        for m in 3..=6 {
            assert_eq!(height(&Graph::star_graph(m).unwrap()), 2);
        }
        for n in 2..=7 {
            assert_eq!(height(&Graph::complete(n).unwrap()), n - 1);
        }
        assert_eq!(height(&Graph::new(1).unwrap()), 0);
    }

    #[test]
    fn minimal_primes_of_k2() {
        let recs = minimal_primes(&Graph::complete(2).unwrap());
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].s, VertexSet::EMPTY);
        assert_eq!(recs[0].height, 1);
        assert!(recs[0].is_cut_set);
    }

    #[test]
    fn minimal_primes_of_p3() {
        let recs = minimal_primes(&Graph::path(3).unwrap());
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].s, VertexSet::EMPTY);
        assert_eq!(recs[0].height, 2);
        assert_eq!(recs[1].s, VertexSet::singleton(1));
        assert_eq!(recs[1].height, 2);
    }

    #[test]
    fn minimal_primes_of_net_include_empty_and_5() {
        let recs = minimal_primes(&net());
        assert!(recs.iter().any(|r| r.s == VertexSet::EMPTY && r.height == 5));
        assert!(recs.iter().any(|r| r.s == VertexSet::singleton(4) && r.height == 5));
        assert_eq!(height(&net()), recs.iter().map(|r| r.height).min().unwrap());
    }

    #[test]
    fn record_json_shape() {
        let rec = CutSetRecord::evaluate(&net(), VertexSet::singleton(4));
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["S"], serde_json::json!([5]));
        assert_eq!(json["c"], 2);
        assert_eq!(json["b"], 5);
        assert_eq!(json["cut"], true);
        assert_eq!(json["height"], 5);
    }

    #[test]
    fn disconnected_records_are_per_component() {
        let g = Graph::path(3).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        let recs = minimal_primes(&g);
        // Two from the path, one from the edge.
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().any(|r| r.s == VertexSet::singleton(1)));
    }
}
