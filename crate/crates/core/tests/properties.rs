use kordered::coloring::{build_color_map, check_color_map, check_colored_walk, colored_walk};
use kordered::dispatch::{order, Family};
use kordered::extension::in_cyclic_order;
use kordered::families::{cycle5_ordered_hamiltonian, path_ordered_hamiltonian};
use kordered::four::four_ordered_hamiltonian;
use kordered::gen::{random_anchors, random_connected, random_tree, rng};
use kordered::general::{mark_anchors, ordered_hamiltonian, required_labels, MarkMode};
use kordered::graph::{power, spanning_tree, steiner_subtree, DistanceTable, Graph, Tree};
use kordered::oracle::oracle_cycle;
use kordered::verify::{verify, CycleCertificate};
use proptest::prelude::*;
use rand::Rng;

fn connected(n: usize, seed: u64) -> Graph {
    let extra = rng(seed).gen_range(0..=n);
    random_connected(n, (n - 1 + extra).min(n * (n - 1) / 2), seed).unwrap()
}

fn valid(g: &Graph, c: &CycleCertificate) -> bool {
    verify(g, c).unwrap().is_valid()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn power_edges_match_distances(n in 2usize..20, p in 1usize..6, seed: u64) {
        let g = connected(n, seed);
        let h = power(&g, p).unwrap();
        let d = DistanceTable::new(&g);
        for u in 0..n {
            for v in u + 1..n {
                prop_assert_eq!(h.has_edge(u, v), d.get(u, v) <= p);
            }
        }
    }

    #[test]
    fn spanning_and_steiner_trees(n in 2usize..30, k in 1usize..6, seed: u64) {
        let g = connected(n, seed);
        let t = spanning_tree(&g).unwrap();
        prop_assert_eq!(t.graph().edge_count(), n - 1);
        prop_assert!(t.graph().edges().all(|(u, v)| g.has_edge(u, v)));
        let s = random_anchors(n, k.min(n), &mut rng(seed));
        let st = steiner_subtree(&t, &s).unwrap();
        for &l in &st.leaves() {
            prop_assert!(st.len() == 1 || s.contains(&l));
        }
        for &v in st.members() {
            let on = s.iter().any(|&a| s.iter().any(|&b| t.on_path(a, b, v)));
            prop_assert!(on);
        }
    }

    #[test]
    fn cyclic_order_is_rotation_invariant(n in 3usize..12, k in 1usize..6, r in 0usize..12, seed: u64) {
        let mut cycle: Vec<usize> = (0..n).collect();
        let seq = random_anchors(n, k.min(n), &mut rng(seed));
        let before = in_cyclic_order(&cycle, &seq);
        cycle.rotate_left(r % n);
        prop_assert_eq!(in_cyclic_order(&cycle, &seq), before);
        cycle.reverse();
        let back: Vec<usize> = seq.iter().rev().copied().collect();
        prop_assert_eq!(in_cyclic_order(&cycle, &back), before);
    }

    #[test]
    fn marking_labels_are_distinct(k in 3usize..14, seed: u64, color in any::<bool>()) {
        let mode = if color { MarkMode::Color } else { MarkMode::Path };
        let t = required_labels(k, mode);
        let mut r = rng(seed);
        let keys: Vec<usize> = if color {
            (0..k).map(|_| r.gen_range(1..=t)).collect()
        } else {
            random_anchors(5 * k, k, &mut r).into_iter().map(|x| x + 1).collect()
        };
        let m = mark_anchors(&keys, mode, t).unwrap();
        prop_assert!(m.value_set.len() + m.unmarked <= t);
        let mut labels = m.labels.clone();
        labels.sort_unstable();
        labels.dedup();
        prop_assert_eq!(labels.len(), k);
        for i in 0..k {
            if m.marked[i] {
                prop_assert_eq!(m.labels[i], m.values[i]);
            }
        }
    }

    #[test]
    fn color_maps_and_walks(n in 1usize..60, t in 1usize..10, seed: u64) {
        let tree = Tree::from_graph(random_tree(n, seed), 0).unwrap();
        let t = t.min(n);
        let cm = build_color_map(&tree, t).unwrap();
        prop_assert_eq!(check_color_map(&tree, &cm), Ok(()));
        let mut r = rng(seed);
        for _ in 0..5 {
            let (x, z) = (r.gen_range(0..n), r.gen_range(0..n));
            let c = r.gen_range(1..=t);
            if x == z {
                continue;
            }
            let w = colored_walk(&tree, &cm, x, z, c).unwrap();
            prop_assert_eq!(check_colored_walk(&tree, &cm, &w, x, z, c), Ok(()));
        }
    }

    #[test]
    fn general_certificates_verify(n in 3usize..35, k in 3usize..8, seed: u64) {
        prop_assume!(k <= n);
        let g = connected(n, seed);
        let anchors = random_anchors(n, k, &mut rng(seed ^ 1));
        let c = ordered_hamiltonian(&g, &anchors).unwrap();
        prop_assert_eq!(c.power, 3 * anchors.len() / 2 + 1);
        prop_assert!(valid(&g, &c));
    }

    #[test]
    fn path_certificates_verify(n in 3usize..40, k in 3usize..10, seed: u64) {
        prop_assume!(k <= n);
        let labels: Vec<usize> = random_anchors(n, k, &mut rng(seed)).into_iter().map(|v| v + 1).collect();
        let c = path_ordered_hamiltonian(n, &labels).unwrap();
        prop_assert_eq!(c.power, 3 * k / 2 - 1);
        prop_assert!(valid(&Graph::path(n), &c));
    }

    #[test]
    fn cycle5_certificates_verify(n in 5usize..60, seed: u64) {
        let anchors = random_anchors(n, 5, &mut rng(seed));
        let c = cycle5_ordered_hamiltonian(n, &anchors).unwrap();
        prop_assert!(valid(&Graph::cycle(n), &c));
    }

    #[test]
    fn four_certificates_verify(n in 4usize..50, seed: u64, tree in any::<bool>()) {
        let g = if tree { random_tree(n, seed) } else { connected(n, seed) };
        let anchors = random_anchors(n, 4, &mut rng(seed ^ 2));
        let c = four_ordered_hamiltonian(&g, &anchors).unwrap();
        prop_assert_eq!(c.power, 4);
        prop_assert!(valid(&g, &c));
    }

    #[test]
    fn certificates_survive_json(n in 5usize..25, k in 3usize..6, seed: u64) {
        let g = connected(n, seed);
        let anchors = random_anchors(n, k, &mut rng(seed));
        let c = order(&g, &anchors, Family::Auto, None).unwrap();
        let back = CycleCertificate::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(back.to_json(), c.to_json());
    }

    #[test]
    fn dropping_a_vertex_invalidates(n in 5usize..25, seed: u64, at: usize) {
        let g = connected(n, seed);
        let anchors = random_anchors(n, 3, &mut rng(seed));
        let mut c = ordered_hamiltonian(&g, &anchors).unwrap();
        c.cycle.remove(at % n);
        prop_assert!(!verify(&g, &c).unwrap().hamiltonian_ok);
    }

    #[test]
    fn oracle_witnesses_are_ordered_cycles(n in 3usize..10, p in 1usize..4, k in 1usize..5, seed: u64) {
        let g = connected(n, seed);
        let h = power(&g, p).unwrap();
        let anchors = random_anchors(n, k.min(n), &mut rng(seed));
        if let Some(cycle) = oracle_cycle(&h, &anchors, true, 24).unwrap() {
            let c = CycleCertificate { n, power: p, cycle, anchors, construction: kordered::verify::Construction::General };
            prop_assert!(valid(&g, &c));
        }
    }
}
