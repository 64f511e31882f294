#![allow(dead_code)]

use proptest::prelude::*;
use spinorgraph_core::{Complex64, DenseMatrix, OrientedGraph};

/// Graph on `n` vertices: pair `(i, j)`, `i < j`, is an edge when its bit in
/// `mask` is set, oriented `j → i` when its bit in `flips` is set.
pub fn graph_from_bits(n: usize, mask: u128, flips: u128) -> OrientedGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push(if flips >> bit & 1 == 1 { (j, i) } else { (i, j) });
            }
            bit += 1;
        }
    }
    OrientedGraph::new(n, edges).unwrap()
}

prop_compose! {
    pub fn arb_graph(max_vertices: usize)(n in 1..=max_vertices, mask in any::<u128>(), flips in any::<u128>(), density in 0u32..4) -> OrientedGraph {
        // thin the mask so sparse graphs and forests are common
        let mut m = mask;
        for d in 0..density {
            m &= mask.rotate_left(17 * (d + 1));
        }
        graph_from_bits(n, m, flips)
    }
}

prop_compose! {
    pub fn arb_state(len: usize)(parts in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)) -> Vec<Complex64> {
        parts.into_iter().map(|(re, im)| Complex64::new(re, im)).collect()
    }
}

pub fn graph_and_state(max_vertices: usize, dim: fn(&OrientedGraph) -> usize) -> impl Strategy<Value = (OrientedGraph, Vec<Complex64>)> {
    arb_graph(max_vertices).prop_flat_map(move |g| {
        let len = dim(&g);
        (Just(g), arb_state(len))
    })
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `exp((i/ħ)·A·t)·ψ` by 20-term Taylor series over substeps with `‖A‖_F·dt/ħ ≤ 0.5`.
pub fn taylor_evolve(a: &DenseMatrix, psi: &[Complex64], t: f64, hbar: f64) -> Vec<Complex64> {
    let norm = a.frobenius_norm();
    let steps = ((norm * t.abs() / hbar) / 0.5).ceil().max(1.0) as usize;
    let dt = t / steps as f64;
    let factor = Complex64::new(0.0, dt / hbar);
    let mut out = psi.to_vec();
    for _ in 0..steps {
        let mut term = out.clone();
        let mut sum = out.clone();
        for k in 1..20 {
            term = a.mul_vec(&term).into_iter().map(|z| z * factor / k as f64).collect();
            for (s, x) in sum.iter_mut().zip(&term) {
                *s += x;
            }
        }
        out = sum;
    }
    out
}
