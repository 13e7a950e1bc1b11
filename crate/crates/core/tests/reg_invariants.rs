use beilab_core::enumerate::connected_graphs;
use beilab_core::homology::reg_binomial_edge;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn regularity_is_labeling_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 2..=5 {
        for g in connected_graphs(n).unwrap() {
            let reference = reg_binomial_edge(&g, 2).unwrap();
            for _ in 0..3 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let relabeled = g.relabel(&perm);
                assert_eq!(
                    reg_binomial_edge(&relabeled, 2).unwrap(),
                    reference,
                    "{g:?} under {perm:?}"
                );
            }
        }
    }
}

#[test]
fn regularity_additive_over_disjoint_unions_small() {
    for n1 in 1..=3 {
        for n2 in n1..=3 {
            if n1 + n2 > 6 {
                continue;
            }
            for g1 in connected_graphs(n1).unwrap() {
                for g2 in connected_graphs(n2).unwrap() {
                    let u = g1.disjoint_union(&g2).unwrap();
                    let whole = reg_binomial_edge(&u, 2).unwrap();
                    let parts =
                        reg_binomial_edge(&g1, 2).unwrap() + reg_binomial_edge(&g2, 2).unwrap();
                    assert_eq!(whole, parts, "{g1:?} + {g2:?}");
                }
            }
        }
    }
}

#[test]
fn regularity_bounded_by_vertex_count_minus_one() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            assert!(reg_binomial_edge(&g, 2).unwrap() <= n - 1, "{g:?}");
        }
    }
}

#[test]
fn characteristics_2_and_3_agree_on_tiny_graphs() {
    for n in 2..=4 {
        for g in connected_graphs(n).unwrap() {
            assert_eq!(
                reg_binomial_edge(&g, 2).unwrap(),
                reg_binomial_edge(&g, 3).unwrap(),
                "{g:?}"
            );
        }
    }
}
