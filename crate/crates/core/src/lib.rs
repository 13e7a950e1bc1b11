//! Exact combinatorics of binomial edge ideals of small graphs: graph
//! invariants and enumeration, cut sets and heights, clique covers, squarefree
//! lex initial ideals from admissible paths, and Castelnuovo–Mumford
//! regularity through Stanley–Reisner homology over a prime field.

pub mod bounds;
pub mod covers;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod groebner;
pub mod homology;
pub mod primes;

pub use graph::{EdgeSet, EdgeSubgraph, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_edge_list, parse_graph6, parse_graph_auto};
