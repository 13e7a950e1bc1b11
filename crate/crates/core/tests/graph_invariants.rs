use beilab_core::enumerate::{all_graphs, connected_graphs};
use beilab_core::graph6::{emit_graph6, parse_graph6};

#[test]
fn ohtani_moves_strictly_decrease_iv() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let iv = g.iv();
            for v in g.non_simplicial_vertices().iter() {
                let (del, _) = g.ohtani_delete(v);
                let sat = g.ohtani_saturate(v);
                let (sat_del, _) = sat.ohtani_delete(v);
                let worst = del.iv().max(sat.iv()).max(sat_del.iv());
                assert!(worst < iv, "{g:?} at v={}: {worst} !< {iv}", v + 1);
            }
        }
    }
}

#[test]
fn saturation_makes_the_center_simplicial() {
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            for v in 0..g.n() {
                assert!(g.ohtani_saturate(v).is_simplicial(v), "{g:?} at v={}", v + 1);
            }
        }
    }
}

#[test]
fn graph6_roundtrips_on_all_enumerated_graphs() {
    for n in 1..=8 {
        for g in connected_graphs(n).unwrap() {
            let encoded = emit_graph6(&g);
            assert_eq!(parse_graph6(&encoded).unwrap(), g, "{encoded}");
        }
    }
}

#[test]
fn enumeration_is_isomorph_free() {
    for n in 1..=6 {
        let graphs = all_graphs(n).unwrap();
        for g in &graphs {
            assert_eq!(&g.canonical_form(), g);
        }
        let distinct: std::collections::HashSet<_> = graphs.iter().cloned().collect();
        assert_eq!(distinct.len(), graphs.len());
    }
}
