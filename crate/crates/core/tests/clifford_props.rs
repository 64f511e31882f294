mod common;

use common::arb_graph;
use proptest::prelude::*;
use spinorgraph_core::clifford::{
    center_basis, center_oracle, is_central_monomial, monomial_product, predicted_center_dim, CenterShape, Monomial,
};
use spinorgraph_core::graph::disjoint_union;
use spinorgraph_core::{Complex64, OrientedGraph};

fn distances(g: &OrientedGraph, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[test]
fn path_centers_by_parity() {
    for n in 1..=12 {
        let expected = if n % 2 == 0 { 1 } else { 2 };
        assert_eq!(center_basis(&OrientedGraph::path(n)).unwrap().len(), expected, "P{n}");
    }
}

#[test]
fn glued_path_predictions() {
    for n in 3..=7 {
        for m in 1..=7 {
            for attach in 2..n {
                let shape = CenterShape::GluedPaths { n, m, attach };
                let computed = center_basis(&shape.graph().unwrap()).unwrap().len() as u64;
                assert_eq!(computed, predicted_center_dim(&shape).unwrap(), "n={n} m={m} attach={attach}");
            }
        }
    }
    for n in 1..=7 {
        for m in 1..=7 {
            let shape = CenterShape::EndToEnd { n, m };
            let computed = center_basis(&shape.graph().unwrap()).unwrap().len() as u64;
            assert_eq!(computed, predicted_center_dim(&shape).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn parity_center_matches_oracle(g in arb_graph(11)) {
        prop_assert_eq!(center_basis(&g).unwrap(), center_oracle(&g).unwrap());
    }

    #[test]
    fn product_is_associative(g in arb_graph(10), triples in proptest::collection::vec((any::<u16>(), any::<u16>(), any::<u16>()), 100)) {
        let mask = (1u64 << g.vertex_count()) - 1;
        let c = |x: u16| Complex64::new(1.0 + (x % 3) as f64, (x % 5) as f64 - 2.0);
        for (a, b, d) in triples {
            let (a, b, d) = (Monomial::new(a as u64 & mask, c(a)), Monomial::new(b as u64 & mask, c(b)), Monomial::new(d as u64 & mask, c(d)));
            let left = monomial_product(&g, &monomial_product(&g, &a, &b), &d);
            let right = monomial_product(&g, &a, &monomial_product(&g, &b, &d));
            prop_assert_eq!(left, right);
            prop_assert_eq!(monomial_product(&g, &Monomial::identity(), &a), a);
            prop_assert_eq!(monomial_product(&g, &a, &Monomial::identity()), a);
        }
    }

    #[test]
    fn disjoint_union_multiplies_centers(a in arb_graph(6), b in arb_graph(6)) {
        let u = disjoint_union(&a, &b);
        let (za, zb, zu) = (center_basis(&a).unwrap(), center_basis(&b).unwrap(), center_basis(&u).unwrap());
        prop_assert_eq!(zu.len(), za.len() * zb.len());
        let low = (1u64 << a.vertex_count()) - 1;
        for s in &zu {
            prop_assert!(is_central_monomial(&a, s & low).unwrap());
            prop_assert!(is_central_monomial(&b, s >> a.vertex_count()).unwrap());
        }
        for x in &za {
            for y in &zb {
                prop_assert!(zu.contains(&(x | y << a.vertex_count())));
            }
        }
    }

    #[test]
    fn tree_centers_hold_two_leaves_at_even_distance(parents in proptest::collection::vec(any::<prop::sample::Index>(), 1..12)) {
        let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
        let g = OrientedGraph::new(parents.len() + 1, edges).unwrap();
        for s in center_basis(&g).unwrap().into_iter().filter(|&s| s != 0) {
            let leaves: Vec<usize> = (0..g.vertex_count()).filter(|&v| s >> v & 1 == 1 && g.degree(v) == 1).collect();
            let found = leaves.iter().any(|&u| {
                let d = distances(&g, u);
                leaves.iter().any(|&w| w != u && d[w] % 2 == 0)
            });
            prop_assert!(found, "support {s:b} of {g:?}");
        }
    }
}
