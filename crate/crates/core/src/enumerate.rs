//! Isomorph-free enumeration of small graphs by vertex augmentation.
//!
//! Every graph on `k` vertices is some graph on `k-1` vertices plus one new
//! vertex with an arbitrary neighborhood, so growing level by level and
//! deduplicating canonical forms yields exactly one representative per
//! isomorphism class. Representatives are returned in canonical form, sorted
//! by their upper-triangle bit string.

use std::collections::HashSet;

use crate::graph::{Graph, GraphError, VertexSet};

const MAX_ENUMERATION_ORDER: usize = 8;

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, connected or not.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::EnumerationOrder(n));
    }
    let mut level = vec![Graph::new(1)?];
    for k in 2..=n {
        let mut seen: HashSet<Graph> = HashSet::new();
        for g in &level {
            for mask in 0..1u32 << (k - 1) {
                let grown = g.with_added_vertex(VertexSet::from_bits(mask))?;
                seen.insert(grown.canonical_form());
            }
        }
        let mut next: Vec<Graph> = seen.into_iter().collect();
        next.sort_by_key(|g| g.triangle_columns());
        level = next;
    }
    Ok(level)
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices, in a deterministic order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut graphs = all_graphs(n)?;
    graphs.retain(Graph::is_connected);
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_match_published_values() {
        // OEIS A001349: 1, 1, 2, 6, 21, 112.
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (n, &count) in expected.iter().enumerate().map(|(i, c)| (i + 1, c)) {
            assert_eq!(connected_graphs(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn all_counts_match_published_values() {
        // OEIS A000088: 1, 2, 4, 11, 34, 156.
        let expected = [1usize, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate().map(|(i, c)| (i + 1, c)) {
            assert_eq!(all_graphs(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn n3_representatives_are_path_and_triangle() {
        let graphs = connected_graphs(3).unwrap();
        assert_eq!(graphs.len(), 2);
        let mut edge_counts: Vec<usize> = graphs.iter().map(Graph::edge_count).collect();
        edge_counts.sort();
        assert_eq!(edge_counts, vec![2, 3]);
    }

    #[test]
    fn order_out_of_range() {
        assert!(all_graphs(0).is_err());
        assert!(all_graphs(9).is_err());
    }

    #[test]
    fn outputs_are_canonical_fixed_points() {
        for g in connected_graphs(6).unwrap() {
            assert_eq!(g.canonical_form(), g);
        }
    }
}
