//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinorgraph::io::{format_time_series, CSV_HEADER};
use spinorgraph_core::clifford::{
    center_basis, center_oracle, format_support, is_central_monomial, predicted_center_dim, CenterShape,
};
use spinorgraph_core::dimer::{
    count_matchings_brute, glued_count_brute, glued_tiling_count, gluing_case, gluing_identity_check,
    kasteleyn_abs_det, partial_sums, tiling_closed, tiling_count, GluingCase, GluingSpec, LatticeGraph,
    SumVariant,
};
use spinorgraph_core::eigen::spectrum;
use spinorgraph_core::evolution::{
    average, is_steady, time_series, EvolutionParams, Propagator, StateKind, StateVector,
};
use spinorgraph_core::graph::{connected_components, cycle_basis, disjoint_union, first_betti_number};
use spinorgraph_core::matrix::vec_norm;
use spinorgraph_core::ops::{even_laplacian, incidence_dirac, kernel_of, odd_laplacian};
use spinorgraph_core::walks::{signed_walk_sum, walk_count_matrix, WalkElement};
use spinorgraph_core::{BigUint, Complex64, DenseMatrix, IntMatrix, OrientedGraph};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> OrientedGraph {
    let n = rng.gen_range(1..=max_vertices);
    let p: f64 = rng.gen_range(0.1..0.8);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
            }
        }
    }
    OrientedGraph::new(n, edges).unwrap()
}

fn random_state(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> =
        (0..len).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let n = vec_norm(&v);
    if n == 0.0 {
        v
    } else {
        v.into_iter().map(|z| z / n).collect()
    }
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn taylor_evolve(a: &DenseMatrix, psi: &[Complex64], t: f64, hbar: f64) -> Vec<Complex64> {
    let steps = ((a.frobenius_norm() * t.abs() / hbar) / 0.5).ceil().max(1.0) as usize;
    let factor = Complex64::new(0.0, t / steps as f64 / hbar);
    let mut out = psi.to_vec();
    for _ in 0..steps {
        let mut term = out.clone();
        let mut sum = out.clone();
        for k in 1..20 {
            term = a.mul_vec(&term).into_iter().map(|z| z * factor / k as f64).collect();
            sum.iter_mut().zip(&term).for_each(|(s, x)| *s += x);
        }
        out = sum;
    }
    out
}

fn corpus(seed: u64, count: usize, max_vertices: usize) -> Vec<OrientedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng, max_vertices)).collect()
}

fn golden_matrices() -> Check {
    let p3 = OrientedGraph::new(3, vec![(0, 1), (2, 1)]).unwrap();
    ensure!(even_laplacian(&p3) == IntMatrix::from_rows(&[[1, -1, 0], [-1, 2, -1], [0, -1, 1]]), "even Laplacian of P3");
    ensure!(odd_laplacian(&p3) == IntMatrix::from_rows(&[[2, 1], [1, 2]]), "odd Laplacian of P3");
    ensure!(
        odd_laplacian(&OrientedGraph::cycle(3)) == IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]),
        "odd Laplacian of cyclic C3"
    );
    let c3_flipped = OrientedGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    ensure!(
        odd_laplacian(&c3_flipped) == IntMatrix::from_rows(&[[2, -1, 1], [-1, 2, 1], [1, 1, 2]]),
        "odd Laplacian of C3 with one edge reversed"
    );
    let tt = disjoint_union(&OrientedGraph::cycle(3), &OrientedGraph::cycle(3));
    let expected = IntMatrix::from_rows(&[
        [2, -1, -1, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0],
        [-1, -1, 2, 0, 0, 0],
        [0, 0, 0, 2, -1, -1],
        [0, 0, 0, -1, 2, -1],
        [0, 0, 0, -1, -1, 2],
    ]);
    ensure!(even_laplacian(&tt) == expected, "even Laplacian of two triangles");
    let k3 = OrientedGraph::new(3, vec![(1, 2), (2, 0), (0, 1)]).unwrap();
    let cube = IntMatrix::from_rows(&[
        [0, 0, 0, 0, 3, -3],
        [0, 0, 0, -3, 0, 3],
        [0, 0, 0, 3, -3, 0],
        [0, -3, 3, 0, 0, 0],
        [3, 0, -3, 0, 0, 0],
        [-3, 3, 0, 0, 0, 0],
    ]);
    ensure!(incidence_dirac(&k3).try_pow(3).unwrap() == cube, "cube of the incidence Dirac operator on K3");
    Ok(())
}

fn kernel_dimensions() -> Check {
    for (i, g) in corpus(0x6b65726e, 200, 10).iter().enumerate() {
        let b0 = connected_components(g).count;
        let b1 = first_betti_number(g);
        let dim = |m: IntMatrix| {
            let d = m.to_dense();
            let spec = spectrum(&d).unwrap();
            kernel_of(&spec, 1e-9 * d.frobenius_norm().max(1.0)).len()
        };
        let (k0, k1, kd) = (dim(even_laplacian(g)), dim(odd_laplacian(g)), dim(incidence_dirac(g)));
        ensure!(
            k0 == b0 && k1 == b1 && kd == b0 + b1,
            "graph {i}: kernels ({k0}, {k1}, {kd}) vs b0={b0}, b1={b1}"
        );
    }
    Ok(())
}

fn dynamics() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x64796e);
    let times = [0.1, 1.0, 10.0];
    for case in 0..50 {
        let g = random_graph(&mut rng, 8);
        let hbar = if case % 5 == 0 { 0.5 } else { 1.0 };
        let ops = [
            (even_laplacian(&g).to_dense(), StateKind::Vertex),
            (odd_laplacian(&g).to_dense(), StateKind::Edge),
            (incidence_dirac(&g).to_dense(), StateKind::VertexEdge),
        ];
        for (op, kind) in &ops {
            let len = kind.dimension(&g);
            if len == 0 {
                continue;
            }
            let psi = random_state(&mut rng, len);
            let prop = Propagator::new(op, hbar).map_err(|e| e.to_string())?;
            for &t in &times {
                let out = prop.apply(&psi, t).unwrap();
                ensure!((vec_norm(&out) - vec_norm(&psi)).abs() < 1e-9, "case {case} {kind}: norm drift at t={t}");
                for &s in &times {
                    let two = prop.apply(&prop.apply(&psi, s).unwrap(), t).unwrap();
                    let one = prop.apply(&psi, s + t).unwrap();
                    ensure!(max_diff(&two, &one) < 1e-8, "case {case} {kind}: group law at s={s}, t={t}");
                }
                if *kind == StateKind::Vertex {
                    let a0 = average(&StateVector::new(*kind, psi.clone())).unwrap();
                    let at = average(&StateVector::new(*kind, out.clone())).unwrap();
                    ensure!((a0 - at).norm() < 1e-9, "case {case}: average moved at t={t}");
                }
                if t <= 1.0 {
                    let oracle = taylor_evolve(op, &psi, t, hbar);
                    ensure!(max_diff(&out, &oracle) < 1e-8, "case {case} {kind}: Taylor mismatch at t={t}");
                }
            }
        }
        // kernel states built from components and cycles
        let comps = connected_components(&g);
        let weights = random_state(&mut rng, comps.count);
        let vertex_steady: Vec<Complex64> = (0..g.vertex_count()).map(|v| weights[comps.component_of[v]]).collect();
        let mut edge_steady = vec![Complex64::new(0.0, 0.0); g.edge_count()];
        for c in cycle_basis(&g) {
            let w = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            edge_steady.iter_mut().zip(&c.coefficients).for_each(|(x, &k)| *x += w * k as f64);
        }
        let mut mixed = vertex_steady.clone();
        mixed.extend(edge_steady.iter().copied());
        for ((op, kind), state) in ops.iter().zip([vertex_steady, edge_steady, mixed]) {
            if state.is_empty() {
                continue;
            }
            let sv = StateVector::new(*kind, state.clone());
            ensure!(is_steady(op, &sv, 1e-9).unwrap(), "case {case} {kind}: kernel state not steady");
            let prop = Propagator::new(op, hbar).unwrap();
            for &t in &times {
                let out = prop.apply(&state, t).unwrap();
                ensure!(max_diff(&out, &state) < 1e-9 * vec_norm(&state).max(1.0), "case {case} {kind}: kernel state moved");
            }
        }
    }
    Ok(())
}

fn check_walks(g: &OrientedGraph, label: &str) -> Check {
    let size = g.vertex_count() + g.edge_count();
    for k in 0..=6 {
        let m = walk_count_matrix(g, k).map_err(|e| e.to_string())?;
        for i in 0..size {
            for j in 0..size {
                let (a, b) = (WalkElement::from_position(g, i), WalkElement::from_position(g, j));
                let s = signed_walk_sum(g, a, b, k).unwrap();
                ensure!(m[(i, j)] == s, "{label}: k={k} entry {a}->{b} is {} but walks sum to {s}", m[(i, j)]);
            }
        }
    }
    Ok(())
}

fn walk_theorem() -> Check {
    let k3 = OrientedGraph::new(3, vec![(1, 2), (2, 0), (0, 1)]).unwrap();
    ensure!(
        signed_walk_sum(&k3, WalkElement::Vertex(0), WalkElement::Edge(0), 3) == Ok(0),
        "v1 -> e1 walks on K3 do not cancel"
    );
    let mut named: Vec<(String, OrientedGraph)> = Vec::new();
    for n in 1..=6 {
        named.push((format!("P{n}"), OrientedGraph::path(n)));
    }
    for n in 3..=6 {
        named.push((format!("C{n}"), OrientedGraph::cycle(n)));
    }
    named.push(("K3".into(), k3));
    named.push(("K4".into(), OrientedGraph::complete(4)));
    for (i, g) in corpus(0x77616c6b, 12, 6).into_iter().enumerate() {
        named.push((format!("random #{i}"), g));
    }
    for (label, g) in &named {
        check_walks(g, label)?;
    }
    Ok(())
}

fn tilings() -> Check {
    for k in 2..=4 {
        for n in 0..=8 {
            let rec = tiling_count(k, n).unwrap();
            let brute = if n == 0 {
                BigUint::from(1u32)
            } else {
                count_matchings_brute(LatticeGraph::new(k, n).unwrap().graph(), &[], &[]).value
            };
            ensure!(rec.value == brute, "T{k}({n}): recurrence {rec} vs brute force {brute}");
        }
    }
    for (k, n, v) in [(2, 2, 2u32), (3, 2, 3), (4, 4, 36)] {
        ensure!(tiling_count(k, n).unwrap().value == BigUint::from(v), "seed T{k}({n}) != {v}");
    }
    for k in 3..=4 {
        for n in 0..=30 {
            let exact: f64 = tiling_count(k, n).unwrap().value.to_string().parse().unwrap();
            let closed = tiling_closed(k, n).unwrap();
            ensure!((closed - exact).abs() <= 1e-9 * exact.max(1.0), "closed form T{k}({n}) = {closed} vs {exact}");
        }
    }
    for k in 2..=4 {
        for n in 1..=24 / k {
            let l = LatticeGraph::new(k, n).unwrap();
            let t = tiling_count(k, n).unwrap().value;
            ensure!(kasteleyn_abs_det(&l) == Some(&t * &t), "|det K| for {k}x{n}");
        }
    }
    Ok(())
}

fn gluing() -> Check {
    let mut zero_cases = 0;
    for k in 2..=4 {
        for shift in 0..k {
            let overlap = k - shift;
            for mask in 0u32..1 << overlap {
                let bridges: Vec<usize> = (0..overlap).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect();
                for m in 1..=5 {
                    for n in 1..=5 {
                        let spec = GluingSpec::new(k, m, n, shift, bridges.iter().copied()).unwrap();
                        let formula = glued_tiling_count(&spec).map_err(|e| e.to_string())?;
                        let brute = glued_count_brute(&spec).unwrap();
                        ensure!(formula == brute, "k={k} s={shift} B={bridges:?} m={m} n={n}: {formula} vs {brute}");
                        if matches!(gluing_case(&spec).unwrap(), GluingCase::Zero | GluingCase::OddBridgeCount) {
                            ensure!(formula.value == BigUint::from(0u32), "zero case k={k} s={shift} B={bridges:?}");
                            zero_cases += 1;
                        }
                    }
                }
            }
        }
    }
    ensure!(zero_cases > 0, "no zero cases exercised");
    for n in 0..=20 {
        if n % 2 == 0 {
            partial_sums(SumVariant::ThreeEven, n).map_err(|e| format!("T3 sum n={n}: {e}"))?;
        }
        partial_sums(SumVariant::FourConsecutive, n).map_err(|e| format!("T4 sum n={n}: {e}"))?;
        partial_sums(SumVariant::FourAlternating, n).map_err(|e| format!("T4 alternating n={n}: {e}"))?;
    }
    for k in 2..=4 {
        for m in 1..=6 {
            for n in 1..=6 {
                gluing_identity_check(k, m, n).map_err(|e| format!("identity k={k} m={m} n={n}: {e}"))?;
            }
        }
    }
    Ok(())
}

fn clifford_centers() -> Check {
    let mut graphs = corpus(0x636c6966, 60, 12);
    graphs.extend([OrientedGraph::complete(5), OrientedGraph::cycle(7), OrientedGraph::edgeless(6)]);
    for (i, g) in graphs.iter().enumerate() {
        ensure!(center_basis(g).unwrap() == center_oracle(g).unwrap(), "graph {i}: parity center differs from oracle");
    }
    for n in 1..=12 {
        let d = center_basis(&OrientedGraph::path(n)).unwrap().len();
        ensure!(d == if n % 2 == 0 { 1 } else { 2 }, "P{n} center has dimension {d}");
    }
    let left = CenterShape::EndToEnd { n: 3, m: 3 }.graph().unwrap();
    let left_center: Vec<String> = center_basis(&left).unwrap().into_iter().map(format_support).collect();
    ensure!(left_center == ["1"], "end-to-end P3 gluing: {left_center:?}");
    let right = CenterShape::GluedPaths { n: 3, m: 3, attach: 2 }.graph().unwrap();
    let right_center: Vec<String> = center_basis(&right).unwrap().into_iter().map(format_support).collect();
    ensure!(
        right_center == ["1", "e1 e3", "e1 e4 e6", "e3 e4 e6"],
        "middle-to-end P3 gluing: {right_center:?}"
    );
    for n in 3..=7 {
        for m in 1..=7 {
            for attach in 2..n {
                let shape = CenterShape::GluedPaths { n, m, attach };
                let computed = center_basis(&shape.graph().unwrap()).unwrap().len() as u64;
                let predicted = predicted_center_dim(&shape).unwrap();
                ensure!(computed == predicted, "P{n} with P{m} at {attach}: computed {computed}, predicted {predicted}");
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7072);
    for i in 0..50 {
        let a = random_graph(&mut rng, 7);
        let b = random_graph(&mut rng, 7);
        let u = disjoint_union(&a, &b);
        let (za, zb, zu) = (center_basis(&a).unwrap(), center_basis(&b).unwrap(), center_basis(&u).unwrap());
        ensure!(zu.len() == za.len() * zb.len(), "pair {i}: {} != {} * {}", zu.len(), za.len(), zb.len());
        let low = (1u64 << a.vertex_count()) - 1;
        for s in &zu {
            ensure!(
                is_central_monomial(&a, s & low).unwrap() && is_central_monomial(&b, s >> a.vertex_count()).unwrap(),
                "pair {i}: central support does not split"
            );
        }
    }
    Ok(())
}

fn time_series_output() -> Check {
    let g = disjoint_union(&OrientedGraph::cycle(3), &OrientedGraph::cycle(3));
    let op = even_laplacian(&g).to_dense();
    let params = EvolutionParams::uniform(1.0, 10.0, 50).unwrap();
    let steady = StateVector::from_real(StateKind::Vertex, &[1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
    let moving = StateVector::from_real(StateKind::Vertex, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    for (state, label) in [(steady, "kernel state"), (moving, "point state")] {
        let csv = format_time_series(&time_series(&op, &state, &params).unwrap());
        let mut lines = csv.lines();
        ensure!(lines.next() == Some(CSV_HEADER), "{label}: header");
        let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
        ensure!(rows.len() == 51, "{label}: {} rows", rows.len());
        let first = &rows[0];
        for r in &rows {
            ensure!((r[1] - first[1]).abs() < 1e-9 && (r[2] - first[2]).abs() < 1e-9, "{label}: average moved");
            ensure!((r[4] - first[4]).abs() < 1e-9, "{label}: norm moved");
        }
    }
    Ok(())
}

fn main() {
    let criteria: Vec<(u32, &str, u64, fn() -> Check)> = vec![
        (1, "golden operator matrices reproduced exactly", 1, golden_matrices),
        (2, "kernel dimensions equal Betti numbers on 200 random graphs", 30, kernel_dimensions),
        (3, "unitarity, group law, average conservation, steady states, Taylor oracle", 60, dynamics),
        (4, "incidence Dirac powers equal signed walk sums", 60, walk_theorem),
        (5, "tiling recurrences, brute force, closed forms, Kasteleyn determinants", 60, tilings),
        (6, "gluing case formulas, sum identities, gluing identities", 120, gluing),
        (7, "Clifford centers: oracle, paths, glued examples, glued paths, unions", 60, clifford_centers),
        (8, "time-series CSV stands in for the evolution plots", 10, time_series_output),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("exceeded {limit} s"))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("criterion {id}: PASS ({:.2} s) {name}", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL ({:.2} s) {name}: {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
