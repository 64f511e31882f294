//! Oriented simple graphs.
//!
//! Every operator in this crate is built from an [`OrientedGraph`]: a vertex
//! count plus an ordered list of `(tail, head)` pairs. Edge order is the
//! order given at construction and fixes the column order of the incidence
//! matrix.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { position: usize, vertex: usize },
    DuplicateEdge { position: usize, first: usize },
    VertexOutOfRange { position: usize, vertex: usize, vertex_count: usize },
    BridgeOutOfRange { position: usize },
    DuplicateBridge { position: usize },
    EmptyInterface,
    InterfaceNotBijective { position: usize },
    InterfaceOutOfRange { position: usize },
    InterfaceNotAdjacencyPreserving { first: usize, second: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::SelfLoop { position, vertex } => {
                write!(f, "edge {position} is a self-loop at vertex {vertex}")
            }
            GraphError::DuplicateEdge { position, first } => {
                write!(f, "edge {position} duplicates edge {first}")
            }
            GraphError::VertexOutOfRange { position, vertex, vertex_count } => write!(
                f,
                "edge {position} references vertex {vertex}, graph has {vertex_count} vertices"
            ),
            GraphError::BridgeOutOfRange { position } => {
                write!(f, "bridge {position} references a vertex outside its graph")
            }
            GraphError::DuplicateBridge { position } => write!(f, "bridge {position} is repeated"),
            GraphError::EmptyInterface => {
                f.write_str("interface gluing needs a nonempty interface; use a disjoint union instead")
            }
            GraphError::InterfaceNotBijective { position } => {
                write!(f, "interface pair {position} reuses a vertex")
            }
            GraphError::InterfaceOutOfRange { position } => {
                write!(f, "interface pair {position} references a vertex outside its graph")
            }
            GraphError::InterfaceNotAdjacencyPreserving { first, second } => write!(
                f,
                "interface pairs {first} and {second} are adjacent in one graph but not the other"
            ),
        }
    }
}

/// Finite simple graph with one orientation per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // per vertex: (neighbor, edge index), sorted by neighbor
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl OrientedGraph {
    /// Validates and builds a graph. Errors carry the offending edge position.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = alloc::collections::BTreeMap::new();
        for (position, &(tail, head)) in edges.iter().enumerate() {
            for vertex in [tail, head] {
                if vertex >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { position, vertex, vertex_count });
                }
            }
            if tail == head {
                return Err(GraphError::SelfLoop { position, vertex: tail });
            }
            let key = (tail.min(head), tail.max(head));
            if let Some(&first) = seen.get(&key) {
                return Err(GraphError::DuplicateEdge { position, first });
            }
            seen.insert(key, position);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (j, &(t, h)) in edges.iter().enumerate() {
            adjacency[t].push((h, j));
            adjacency[h].push((t, j));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(OrientedGraph { vertex_count, edges, adjacency })
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        OrientedGraph { vertex_count: n, edges: Vec::new(), adjacency: vec![Vec::new(); n] }
    }

    /// Path `P_n` with edges `i → i+1`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, edges).expect("path graph is simple")
    }

    /// Cycle `C_n` (`n ≥ 3`) oriented cyclically: `i → i+1` and `n−1 → 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, edges).expect("cycle graph is simple")
    }

    /// Complete graph `K_n` with edges `i → j` for `i < j` in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(tail, head)` of edge `j`.
    pub fn edge(&self, j: usize) -> (usize, usize) {
        self.edges[j]
    }

    /// `(neighbor, edge index)` pairs of `v`, ascending by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edge indices incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        let mut es: Vec<usize> = self.adjacency[v].iter().map(|&(_, e)| e).collect();
        es.sort_unstable();
        es
    }

    /// Index of the edge joining `u` and `v` in either direction.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|k| self.adjacency[u][k].1)
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Same graph with every edge `j` for which `flip(j)` holds reversed.
    pub fn reoriented(&self, mut flip: impl FnMut(usize) -> bool) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(j, &(t, h))| if flip(j) { (h, t) } else { (t, h) })
            .collect();
        Self::new(self.vertex_count, edges).expect("reorientation keeps the graph simple")
    }

    /// True when the graph is connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.vertex_count > 0
            && self.edges.len() + 1 == self.vertex_count
            && connected_components(self).count == 1
    }
}

/// `g1 ⊔ g2`: vertices of `g2` shifted by `g1.vertex_count()`, edges concatenated.
pub fn disjoint_union(g1: &OrientedGraph, g2: &OrientedGraph) -> OrientedGraph {
    let offset = g1.vertex_count;
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(t, h)| (t + offset, h + offset)));
    OrientedGraph::new(offset + g2.vertex_count, edges).expect("disjoint union of simple graphs is simple")
}

/// Disjoint union plus one bridge edge per `(vertex of g1, vertex of g2)` pair,
/// oriented from `g1` to `g2`. Bridge edges follow the edges of both graphs.
pub fn bridge_glue(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    pairs: &[(usize, usize)],
) -> Result<OrientedGraph, GraphError> {
    let offset = g1.vertex_count;
    let mut seen = BTreeSet::new();
    for (position, &(a, b)) in pairs.iter().enumerate() {
        if a >= g1.vertex_count || b >= g2.vertex_count {
            return Err(GraphError::BridgeOutOfRange { position });
        }
        if !seen.insert((a, b)) {
            return Err(GraphError::DuplicateBridge { position });
        }
    }
    let mut edges = disjoint_union(g1, g2).edges;
    edges.extend(pairs.iter().map(|&(a, b)| (a, b + offset)));
    Ok(OrientedGraph::new(offset + g2.vertex_count, edges).expect("bridges join distinct graphs"))
}

/// Identifies `iso[i].1` in `g2` with `iso[i].0` in `g1`.
///
/// The result keeps all vertices of `g1` in place, then appends the
/// non-interface vertices of `g2` in order. Edges of `g2` lying inside the
/// interface are dropped (the copy from `g1`, with its orientation, is kept).
pub fn interface_glue(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    iso: &[(usize, usize)],
) -> Result<OrientedGraph, GraphError> {
    if iso.is_empty() {
        return Err(GraphError::EmptyInterface);
    }
    let mut map2: Vec<Option<usize>> = vec![None; g2.vertex_count];
    let mut used1 = vec![false; g1.vertex_count];
    for (position, &(a, b)) in iso.iter().enumerate() {
        if a >= g1.vertex_count || b >= g2.vertex_count {
            return Err(GraphError::InterfaceOutOfRange { position });
        }
        if used1[a] || map2[b].is_some() {
            return Err(GraphError::InterfaceNotBijective { position });
        }
        used1[a] = true;
        map2[b] = Some(a);
    }
    for (i, &(a1, a2)) in iso.iter().enumerate() {
        for (j, &(b1, b2)) in iso.iter().enumerate().skip(i + 1) {
            if g1.are_adjacent(a1, b1) != g2.are_adjacent(a2, b2) {
                return Err(GraphError::InterfaceNotAdjacencyPreserving { first: i, second: j });
            }
        }
    }
    let mut next = g1.vertex_count;
    let index2: Vec<usize> = map2
        .iter()
        .map(|m| match m {
            Some(a) => *a,
            None => {
                next += 1;
                next - 1
            }
        })
        .collect();
    let mut edges = g1.edges.clone();
    for &(t, h) in &g2.edges {
        if map2[t].is_some() && map2[h].is_some() {
            continue;
        }
        edges.push((index2[t], index2[h]));
    }
    Ok(OrientedGraph::new(next, edges).expect("interface gluing of simple graphs is simple"))
}

/// Connected components with ids ordered by smallest contained vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub component_of: Vec<usize>,
    /// `b₀`, the number of components.
    pub count: usize,
}

impl ComponentPartition {
    /// Vertices of component `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        (0..self.component_of.len()).filter(|&v| self.component_of[v] == c).collect()
    }
}

pub fn connected_components(g: &OrientedGraph) -> ComponentPartition {
    let n = g.vertex_count;
    let mut component_of = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        component_of[start] = count;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if component_of[w] == usize::MAX {
                    component_of[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    ComponentPartition { component_of, count }
}

/// Signed edge vector of one cycle: `+1` on edges traversed along their
/// orientation, `-1` against it, `0` off the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasisElement {
    pub coefficients: Vec<i8>,
}

impl CycleBasisElement {
    /// Edges on the cycle, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coefficients.len()).filter(|&j| self.coefficients[j] != 0).collect()
    }
}

/// Spanning forest from a depth-first search rooted at the smallest vertex
/// of each component, neighbors visited in ascending order.
struct SpanningForest {
    parent: Vec<Option<(usize, usize)>>, // (parent vertex, edge)
    depth: Vec<usize>,
    tree_edge: Vec<bool>,
}

fn spanning_forest(g: &OrientedGraph) -> SpanningForest {
    let n = g.vertex_count;
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut visited = vec![false; n];
    let mut tree_edge = vec![false; g.edge_count()];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        // explicit stack of (vertex, next neighbor slot)
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, slot) = *top;
            if slot == g.neighbors(v).len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let (w, e) = g.neighbors(v)[slot];
            if !visited[w] {
                visited[w] = true;
                parent[w] = Some((v, e));
                depth[w] = depth[v] + 1;
                tree_edge[e] = true;
                stack.push((w, 0));
            }
        }
    }
    SpanningForest { parent, depth, tree_edge }
}

/// Fundamental cycles of the depth-first spanning forest, one per non-tree
/// edge in edge order. Each cycle is traversed along its non-tree edge,
/// which therefore has coefficient `+1`.
pub fn cycle_basis(g: &OrientedGraph) -> Vec<CycleBasisElement> {
    let forest = spanning_forest(g);
    let mut basis = Vec::new();
    for (e, &(tail, head)) in g.edges.iter().enumerate() {
        if forest.tree_edge[e] {
            continue;
        }
        let mut coefficients = vec![0i8; g.edge_count()];
        coefficients[e] = 1;
        // walk head → tail through the tree; sides meet at the common ancestor
        let (mut a, mut b) = (head, tail);
        let mut tail_side = Vec::new();
        while a != b {
            if forest.depth[a] >= forest.depth[b] {
                let (p, pe) = forest.parent[a].expect("non-root vertex has a parent");
                // traversed a → p
                coefficients[pe] = if g.edges[pe] == (a, p) { 1 } else { -1 };
                a = p;
            } else {
                let (p, pe) = forest.parent[b].expect("non-root vertex has a parent");
                // traversed p → b, recorded after the head side finishes
                tail_side.push((pe, g.edges[pe] == (p, b)));
                b = p;
            }
        }
        for (pe, forward) in tail_side {
            coefficients[pe] = if forward { 1 } else { -1 };
        }
        basis.push(CycleBasisElement { coefficients });
    }
    basis
}

/// `b₁ = |E| − |V| + b₀`.
pub fn first_betti_number(g: &OrientedGraph) -> usize {
    g.edge_count() + connected_components(g).count - g.vertex_count
}

/// `|V|×|E|` matrix with `+1` where edge `j` ends at vertex `i` and `−1`
/// where it starts.
pub fn incidence_matrix(g: &OrientedGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.vertex_count, g.edge_count());
    for (j, &(t, h)) in g.edges.iter().enumerate() {
        m[(t, j)] = -1;
        m[(h, j)] = 1;
    }
    m
}
