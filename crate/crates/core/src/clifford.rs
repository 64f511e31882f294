//! Clifford graph algebras.
//!
//! One generator `e_i` per vertex with `e_i² = −1`; `e_i` and `e_j`
//! anticommute when `i` and `j` are adjacent and commute otherwise. A
//! monomial `e_α` is written by its support `α`, a set of vertices stored as
//! a bit pattern (bit `i` = vertex `i`), so graphs are limited to 64 vertices.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use num_complex::Complex64;

use crate::graph::{bridge_glue, disjoint_union, OrientedGraph};

/// Largest vertex count a support bit pattern can hold.
pub const MAX_GENERATORS: usize = 64;
/// Vertex bound for [`center_basis`].
pub const CENTER_VERTEX_LIMIT: usize = 30;
/// Vertex bound for [`center_oracle`].
pub const ORACLE_VERTEX_LIMIT: usize = 14;
/// Largest center dimension (as a power of two) [`center_basis`] will list.
pub const CENTER_LIST_LIMIT: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliffordError {
    TooManyVertices { count: usize, limit: usize },
    CenterTooLarge { log2_dimension: u32 },
    SupportOutOfRange { vertex: usize },
    InvalidShape(String),
    NotATree,
    EmptySupport,
}

impl fmt::Display for CliffordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordError::TooManyVertices { count, limit } => {
                write!(f, "graph has {count} vertices, limit is {limit}")
            }
            CliffordError::CenterTooLarge { log2_dimension } => {
                write!(f, "center has dimension 2^{log2_dimension}, too large to list")
            }
            CliffordError::SupportOutOfRange { vertex } => write!(f, "support contains missing vertex {vertex}"),
            CliffordError::InvalidShape(msg) => write!(f, "invalid shape: {msg}"),
            CliffordError::NotATree => f.write_str("graph is not a tree"),
            CliffordError::EmptySupport => f.write_str("support is empty"),
        }
    }
}

fn check_size(g: &OrientedGraph, limit: usize) -> Result<(), CliffordError> {
    let count = g.vertex_count();
    if count > limit {
        Err(CliffordError::TooManyVertices { count, limit })
    } else {
        Ok(())
    }
}

fn check_support(g: &OrientedGraph, support: u64) -> Result<(), CliffordError> {
    let n = g.vertex_count();
    if n < 64 && support >> n != 0 {
        return Err(CliffordError::SupportOutOfRange { vertex: 63 - support.leading_zeros() as usize });
    }
    Ok(())
}

/// Support bit pattern from vertex ids.
pub fn support_from_vertices(vertices: &[usize]) -> Result<u64, CliffordError> {
    vertices.iter().try_fold(0u64, |acc, &v| {
        if v >= MAX_GENERATORS {
            Err(CliffordError::SupportOutOfRange { vertex: v })
        } else {
            Ok(acc | 1 << v)
        }
    })
}

/// Vertex ids of a support, ascending.
pub fn support_vertices(support: u64) -> Vec<usize> {
    (0..64).filter(|&i| support >> i & 1 == 1).collect()
}

/// `"e1 e3 e5"`, or `"1"` for the empty support.
pub fn format_support(support: u64) -> String {
    if support == 0 {
        return String::from("1");
    }
    let mut s = String::new();
    for (i, v) in support_vertices(support).into_iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "e{}", v + 1);
    }
    s
}

/// `coefficient · e_α` with the generators of `α` in ascending order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monomial {
    pub support: u64,
    pub coefficient: Complex64,
}

impl Monomial {
    pub fn new(support: u64, coefficient: Complex64) -> Self {
        Monomial { support, coefficient }
    }

    pub fn identity() -> Self {
        Monomial::basis(0)
    }

    /// `e_α` with coefficient 1.
    pub fn basis(support: u64) -> Self {
        Monomial { support, coefficient: Complex64::new(1.0, 0.0) }
    }

    pub fn generator(i: usize) -> Self {
        Monomial::basis(1 << i)
    }
}

/// Product in canonical form.
///
/// The two words are concatenated and insertion-sorted; each transposition
/// of adjacent-vertex generators flips the sign. Repeated generators then
/// meet side by side and each pair contributes `e_i² = −1`.
pub fn monomial_product(g: &OrientedGraph, a: &Monomial, b: &Monomial) -> Monomial {
    let mut word = support_vertices(a.support);
    let split = word.len();
    word.extend(support_vertices(b.support));
    let mut negative = false;
    for i in split..word.len() {
        let mut j = i;
        while j > 0 && word[j - 1] > word[j] {
            if g.are_adjacent(word[j - 1], word[j]) {
                negative = !negative;
            }
            word.swap(j - 1, j);
            j -= 1;
        }
    }
    let squares = word.windows(2).filter(|w| w[0] == w[1]).count();
    if squares % 2 == 1 {
        negative = !negative;
    }
    let sign = if negative { -1.0 } else { 1.0 };
    Monomial { support: a.support ^ b.support, coefficient: a.coefficient * b.coefficient * sign }
}

/// Finite linear combination of monomials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<u64, Complex64>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn terms(&self) -> &BTreeMap<u64, Complex64> {
        &self.terms
    }

    pub fn add_term(&mut self, m: Monomial) {
        let c = self.terms.entry(m.support).or_insert(Complex64::new(0.0, 0.0));
        *c += m.coefficient;
        if *c == Complex64::new(0.0, 0.0) {
            self.terms.remove(&m.support);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (&s, &c) in &other.terms {
            out.add_term(Monomial::new(s, c));
        }
        out
    }

    pub fn mul(&self, g: &OrientedGraph, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&sa, &ca) in &self.terms {
            for (&sb, &cb) in &other.terms {
                out.add_term(monomial_product(g, &Monomial::new(sa, ca), &Monomial::new(sb, cb)));
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &AlgebraElement) -> f64 {
        let mut worst: f64 = 0.0;
        for (s, c) in &self.terms {
            worst = worst.max((c - other.terms.get(s).copied().unwrap_or_default()).norm());
        }
        for (s, c) in &other.terms {
            if !self.terms.contains_key(s) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }
}

impl From<Monomial> for AlgebraElement {
    fn from(m: Monomial) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(m);
        e
    }
}

// adjacency rows as bit patterns
fn adjacency_bits(g: &OrientedGraph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &(w, _)| acc | 1 << w))
        .collect()
}

/// `e_α` is central iff every vertex has an even number of neighbours in `α`.
pub fn is_central_monomial(g: &OrientedGraph, support: u64) -> Result<bool, CliffordError> {
    check_size(g, MAX_GENERATORS)?;
    check_support(g, support)?;
    Ok(adjacency_bits(g).iter().all(|row| (row & support).count_ones() % 2 == 0))
}

/// Basis of the null space of the adjacency matrix over GF(2).
fn parity_nullspace(g: &OrientedGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut rows = adjacency_bits(g);
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i] >> col & 1 == 1 {
                rows[i] ^= rows[r];
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = 1u64 << f;
            for (i, &p) in pivots.iter().enumerate() {
                if rows[i] >> f & 1 == 1 {
                    v |= 1 << p;
                }
            }
            v
        })
        .collect()
}

/// `log₂ dim Z(A_Γ)`.
pub fn center_log2_dimension(g: &OrientedGraph) -> Result<u32, CliffordError> {
    check_size(g, MAX_GENERATORS)?;
    Ok(parity_nullspace(g).len() as u32)
}

/// All central supports, ascending by bit pattern; the empty support is first.
///
/// The supports are exactly the parity-condition solutions, enumerated as the
/// span of a GF(2) null-space basis of the adjacency matrix.
pub fn center_basis(g: &OrientedGraph) -> Result<Vec<u64>, CliffordError> {
    check_size(g, CENTER_VERTEX_LIMIT)?;
    let basis = parity_nullspace(g);
    let d = basis.len() as u32;
    if d > CENTER_LIST_LIMIT {
        return Err(CliffordError::CenterTooLarge { log2_dimension: d });
    }
    let mut out: Vec<u64> = (0u64..1 << d)
        .map(|mask| {
            basis.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, &b)| acc ^ b)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Central supports found by checking commutation with every generator directly.
pub fn center_oracle(g: &OrientedGraph) -> Result<Vec<u64>, CliffordError> {
    check_size(g, ORACLE_VERTEX_LIMIT)?;
    let n = g.vertex_count();
    Ok((0u64..1 << n)
        .filter(|&alpha| {
            let ea = Monomial::basis(alpha);
            (0..n).all(|i| {
                let ei = Monomial::generator(i);
                monomial_product(g, &ea, &ei) == monomial_product(g, &ei, &ea)
            })
        })
        .collect())
}

/// Graph families with a predicted center dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterShape {
    Path(usize),
    Disjoint(Box<CenterShape>, Box<CenterShape>),
    /// `P_n` and `P_m` joined by a bridge between their endpoints.
    EndToEnd { n: usize, m: usize },
    /// A bridge from interior vertex `attach` of `P_n` (1-based) to an endpoint of `P_m`.
    GluedPaths { n: usize, m: usize, attach: usize },
}

impl CenterShape {
    fn validate(&self) -> Result<(), CliffordError> {
        match self {
            CenterShape::Path(n) if *n == 0 => Err(CliffordError::InvalidShape("path needs at least one vertex".into())),
            CenterShape::Path(_) => Ok(()),
            CenterShape::Disjoint(a, b) => {
                a.validate()?;
                b.validate()
            }
            CenterShape::EndToEnd { n, m } if *n == 0 || *m == 0 => {
                Err(CliffordError::InvalidShape("paths need at least one vertex".into()))
            }
            CenterShape::EndToEnd { .. } => Ok(()),
            CenterShape::GluedPaths { n, m, attach } => {
                if *m == 0 {
                    Err(CliffordError::InvalidShape("attached path needs at least one vertex".into()))
                } else if *attach < 2 || *attach + 1 > *n {
                    Err(CliffordError::InvalidShape(alloc::format!(
                        "attach point {attach} is not an interior vertex of P{n}"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// The graph the shape describes; `P_n` comes first, vertices in path order.
    pub fn graph(&self) -> Result<OrientedGraph, CliffordError> {
        self.validate()?;
        Ok(match self {
            CenterShape::Path(n) => OrientedGraph::path(*n),
            CenterShape::Disjoint(a, b) => disjoint_union(&a.graph()?, &b.graph()?),
            CenterShape::EndToEnd { n, m } => {
                bridge_glue(&OrientedGraph::path(*n), &OrientedGraph::path(*m), &[(n - 1, 0)])
                    .expect("endpoints exist")
            }
            CenterShape::GluedPaths { n, m, attach } => {
                bridge_glue(&OrientedGraph::path(*n), &OrientedGraph::path(*m), &[(attach - 1, 0)])
                    .expect("attach point exists")
            }
        })
    }
}

/// Center dimension predicted for a shape.
///
/// Paths give 1 (even) or 2 (odd); disjoint unions multiply; two paths
/// joined end to end form `P_{n+m}`. For an interior attachment: both even
/// gives 1, exactly one odd gives 2, and both odd gives 4 when the attach
/// index is even and 1 when it is odd (re-splitting at the attach vertex
/// turns the graph into paths of `attach + m` and `n − attach` vertices
/// glued at an interior point, both even).
pub fn predicted_center_dim(shape: &CenterShape) -> Result<u64, CliffordError> {
    shape.validate()?;
    let path = |n: usize| if n % 2 == 0 { 1 } else { 2 };
    Ok(match shape {
        CenterShape::Path(n) => path(*n),
        CenterShape::Disjoint(a, b) => predicted_center_dim(a)? * predicted_center_dim(b)?,
        CenterShape::EndToEnd { n, m } => path(n + m),
        CenterShape::GluedPaths { n, m, attach } => match (n % 2, m % 2) {
            (0, 0) => 1,
            (0, _) | (_, 0) => 2,
            _ if attach % 2 == 0 => 4,
            _ => 1,
        },
    })
}

/// A necessary condition for central supports of trees that fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeClause {
    /// No vertex of the support is a leaf.
    NoLeaf,
    /// No other support vertex lies at distance 2 from this one.
    NoPartnerAtDistanceTwo(usize),
    /// Two support vertices are adjacent.
    AdjacentPair(usize, usize),
}

impl fmt::Display for TreeClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeClause::NoLeaf => f.write_str("no leaf in the support"),
            TreeClause::NoPartnerAtDistanceTwo(v) => write!(f, "v{} has no support vertex at distance 2", v + 1),
            TreeClause::AdjacentPair(u, v) => write!(f, "v{} and v{} are adjacent", u + 1, v + 1),
        }
    }
}

/// Checks the three necessary conditions for a central support of a tree.
pub fn tree_central_support_check(g: &OrientedGraph, support: u64) -> Result<Vec<TreeClause>, CliffordError> {
    check_size(g, MAX_GENERATORS)?;
    check_support(g, support)?;
    if !g.is_tree() {
        return Err(CliffordError::NotATree);
    }
    if support == 0 {
        return Err(CliffordError::EmptySupport);
    }
    let members = support_vertices(support);
    let inside = |v: usize| support >> v & 1 == 1;
    let mut violations = Vec::new();
    if !members.iter().any(|&v| g.degree(v) == 1) {
        violations.push(TreeClause::NoLeaf);
    }
    for &v in &members {
        let partner = g.neighbors(v).iter().any(|&(w, _)| g.neighbors(w).iter().any(|&(u, _)| u != v && inside(u)));
        if !partner {
            violations.push(TreeClause::NoPartnerAtDistanceTwo(v));
        }
    }
    for &(a, b) in g.edges() {
        if inside(a) && inside(b) {
            violations.push(TreeClause::AdjacentPair(a.min(b), a.max(b)));
        }
    }
    Ok(violations)
}
