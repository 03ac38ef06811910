//! Vertex-weighted graphs, induced subgraphs, independent sets, and
//! independence polynomials.
//!
//! Vertices are dense indices `0..n` and vertex subsets are `u64` bitmasks,
//! so graphs are limited to 64 vertices — far beyond the reach of the
//! `2^|V|` subset enumerations everything downstream performs anyway.
//! All values are immutable after construction and all operations are pure.

use std::collections::HashMap;
use std::error::Error;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub const MAX_VERTICES: usize = 64;

/// A subset of vertices, bitmask semantics over dense indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn full(n: usize) -> Self {
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_vertices(vertices: &[usize]) -> Self {
        VertexSet(vertices.iter().fold(0, |m, &v| m | (1 << v)))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    /// Vertices in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All `2^n` subsets of `{0..n}`, ascending by mask value.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
        assert!(n < 64, "subset enumeration needs n < 64");
        (0u64..(1 << n)).map(VertexSet)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

/// A polynomial with big-integer coefficients, used for independence
/// polynomials. Trailing zero coefficients are trimmed; the zero polynomial
/// stores no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `self + t^shift · other`; the building block of the deletion identity.
    pub fn add_shifted(&self, other: &IntPolynomial, shift: usize) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        let needed = other.coeffs.len() + shift;
        if coeffs.len() < needed {
            coeffs.resize(needed, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i + shift] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", render_polynomial(self))
    }
}

/// Renders a polynomial as `1 + 2t + t^2` style text.
pub fn render_polynomial(poly: &IntPolynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &BigInt::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let show_coeff = i == 0 || !magnitude.is_one();
        if show_coeff {
            out.push_str(&magnitude.to_string());
        }
        if i == 1 {
            out.push('t');
        } else if i > 1 {
            out.push_str(&format!("t^{}", i));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Errors from [`parse_graph`], each naming the offending line (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseGraphError {
    MalformedLine { line: usize, content: String },
    InvalidWeight { line: usize, token: String },
    DuplicateVertex { line: usize, id: String },
    UnknownVertex { line: usize, id: String },
    SelfLoop { line: usize, id: String },
    TooManyVertices { line: usize },
}

impl fmt::Display for ParseGraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseGraphError::MalformedLine { line, content } => {
                write!(f, "line {}: malformed directive: {:?}", line, content)
            }
            ParseGraphError::InvalidWeight { line, token } => {
                write!(f, "line {}: weight must be a positive integer, got {:?}", line, token)
            }
            ParseGraphError::DuplicateVertex { line, id } => {
                write!(f, "line {}: vertex {:?} declared twice", line, id)
            }
            ParseGraphError::UnknownVertex { line, id } => {
                write!(f, "line {}: edge references undeclared vertex {:?}", line, id)
            }
            ParseGraphError::SelfLoop { line, id } => {
                write!(f, "line {}: self-loop on vertex {:?} is not allowed", line, id)
            }
            ParseGraphError::TooManyVertices { line } => {
                write!(f, "line {}: more than {} vertices", line, MAX_VERTICES)
            }
        }
    }
}

impl Error for ParseGraphError {}

/// An undirected graph with positive integer vertex weights.
///
/// Vertices are dense indices `0..n`. Edges are kept both as a sorted,
/// deduplicated pair list and as per-vertex neighbor bitmasks.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    weights: Vec<usize>,
    adjacency: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("weights", &self.weights)
            .field("edges", &self.edges)
            .finish()
    }
}

impl WeightedGraph {
    /// Builds a graph from weights and an edge list. Duplicate edges collapse
    /// silently; self-loops, zero weights, and out-of-range endpoints panic.
    pub fn new(weights: Vec<usize>, edges: &[(usize, usize)]) -> Self {
        let n = weights.len();
        assert!(n <= MAX_VERTICES, "at most {} vertices supported", MAX_VERTICES);
        assert!(weights.iter().all(|&w| w >= 1), "vertex weights must be ≥ 1");
        let mut adjacency = vec![0u64; n];
        let mut dedup: Vec<(usize, usize)> = Vec::new();
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({}, {}) references a missing vertex", u, v);
            assert!(u != v, "self-loop on vertex {} is not allowed", u);
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adjacency[a] >> b & 1 == 0 {
                adjacency[a] |= 1 << b;
                adjacency[b] |= 1 << a;
                dedup.push((a, b));
            }
        }
        dedup.sort_unstable();
        WeightedGraph { weights, adjacency, edges: dedup }
    }

    /// Unweighted constructor: every vertex gets weight 1.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::new(vec![1; n], edges)
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight_of(&self, v: usize) -> usize {
        self.weights[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adjacency[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adjacency[v] | (1 << v))
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// `ω(G)`: the sum of all vertex weights.
    pub fn total_weight(&self) -> usize {
        self.weights.iter().sum()
    }

    /// `ω(S)`: the total weight of a vertex subset.
    pub fn subset_weight(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.weights[v]).sum()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adjacency[v] & s.0 == 0)
    }

    /// The induced subgraph on `w`, vertices renumbered densely in ascending
    /// index order. Panics if `w` is not a subset of the vertex set.
    pub fn induced_subgraph(&self, w: VertexSet) -> WeightedGraph {
        assert!(
            w.is_subset_of(&self.full_set()),
            "subset {:?} contains vertices outside the graph",
            w
        );
        let kept: Vec<usize> = w.iter().collect();
        let mut renumber = HashMap::new();
        for (new, &old) in kept.iter().enumerate() {
            renumber.insert(old, new);
        }
        let weights = kept.iter().map(|&v| self.weights[v]).collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| w.contains(*u) && w.contains(*v))
            .map(|(u, v)| (renumber[u], renumber[v]))
            .collect();
        WeightedGraph::new(weights, &edges)
    }

    /// Disjoint union; the second graph's vertices are shifted past the first's.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> WeightedGraph {
        let offset = self.vertex_count();
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        WeightedGraph::new(weights, &edges)
    }

    /// Streams every independent set exactly once (the empty set included),
    /// branching on a highest-degree vertex of the remaining subgraph.
    pub fn independent_sets(&self) -> IndependentSets<'_> {
        IndependentSets {
            graph: self,
            stack: vec![Frame { chosen: VertexSet::EMPTY, remaining: self.full_set() }],
        }
    }

    /// `I_(G,ω)(t)`: coefficient of `t^m` counts independent sets of total
    /// weight `m`. Constant term 1 from the empty set.
    pub fn independence_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.total_weight() + 1];
        for s in self.independent_sets() {
            coeffs[self.subset_weight(s)] += 1;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Independence polynomials of every induced subgraph at once, indexed by
    /// subset bitmask, via the deletion identity
    /// `I_W = I_(W−v) + t^(ω(v)) · I_(W−N[v])`. Identical polynomials are
    /// shared through `Arc`.
    pub fn independence_polynomials_all_subsets(&self) -> Vec<Arc<IntPolynomial>> {
        let n = self.vertex_count();
        assert!(n < 64, "all-subsets enumeration needs fewer than 64 vertices");
        let mut pool: HashMap<IntPolynomial, Arc<IntPolynomial>> = HashMap::new();
        let mut intern = |p: IntPolynomial| -> Arc<IntPolynomial> {
            pool.entry(p.clone()).or_insert_with(|| Arc::new(p)).clone()
        };
        let mut table: Vec<Arc<IntPolynomial>> = Vec::with_capacity(1 << n);
        table.push(intern(IntPolynomial::one()));
        for mask in 1u64..(1 << n) {
            let v = mask.trailing_zeros() as usize;
            let without_v = mask & !(1 << v);
            let without_closed = mask & !self.closed_neighborhood(v).0;
            let poly = table[without_v as usize]
                .add_shifted(&table[without_closed as usize], self.weights[v]);
            table.push(intern(poly));
        }
        table
    }

    /// Maximal connected vertex sets, ordered by smallest contained vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut components = Vec::new();
        for v in 0..self.vertex_count() {
            if seen.contains(v) {
                continue;
            }
            let mut component = VertexSet::singleton(v);
            let mut frontier = vec![v];
            while let Some(u) = frontier.pop() {
                for w in self.neighbors(u).iter() {
                    if !component.contains(w) {
                        component.insert(w);
                        frontier.push(w);
                    }
                }
            }
            seen = seen.union(&component);
            components.push(component);
        }
        components
    }

    /// True iff the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

struct Frame {
    chosen: VertexSet,
    remaining: VertexSet,
}

/// Iterator over all independent sets of a graph.
pub struct IndependentSets<'a> {
    graph: &'a WeightedGraph,
    stack: Vec<Frame>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some(frame) = self.stack.pop() {
            if frame.remaining.is_empty() {
                return Some(frame.chosen);
            }
            let v = frame
                .remaining
                .iter()
                .max_by_key(|&v| {
                    let degree = (self.graph.adjacency[v] & frame.remaining.0).count_ones();
                    (degree, std::cmp::Reverse(v))
                })
                .expect("remaining is nonempty");
            // exclude v
            self.stack.push(Frame {
                chosen: frame.chosen,
                remaining: VertexSet(frame.remaining.0 & !(1 << v)),
            });
            // include v: drop its closed neighborhood from consideration
            self.stack.push(Frame {
                chosen: VertexSet(frame.chosen.0 | (1 << v)),
                remaining: VertexSet(frame.remaining.0 & !self.graph.closed_neighborhood(v).0),
            });
        }
        None
    }
}

/// Parses the graph file format: one directive per line, `#` starts a
/// comment, blank lines ignored. `v <id> [weight]` declares a vertex
/// (weight defaults to 1); `e <id1> <id2>` declares an edge between
/// previously declared vertices. Vertices are numbered densely in
/// declaration order.
pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseGraphError> {
    parse_graph_with_labels(text).map(|(graph, _)| graph)
}

/// Like [`parse_graph`], also returning the original vertex id tokens in
/// declaration order.
pub fn parse_graph_with_labels(
    text: &str,
) -> Result<(WeightedGraph, Vec<String>), ParseGraphError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut weights: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (line_idx, raw_line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let malformed = || ParseGraphError::MalformedLine {
            line: line_no,
            content: raw_line.trim().to_string(),
        };
        match tokens[0] {
            "v" => {
                if tokens.len() < 2 || tokens.len() > 3 {
                    return Err(malformed());
                }
                let id = tokens[1];
                if index.contains_key(id) {
                    return Err(ParseGraphError::DuplicateVertex {
                        line: line_no,
                        id: id.to_string(),
                    });
                }
                let weight = match tokens.get(2) {
                    None => 1,
                    Some(tok) => match tok.parse::<usize>() {
                        Ok(w) if w >= 1 => w,
                        _ => {
                            return Err(ParseGraphError::InvalidWeight {
                                line: line_no,
                                token: tok.to_string(),
                            })
                        }
                    },
                };
                if labels.len() == MAX_VERTICES {
                    return Err(ParseGraphError::TooManyVertices { line: line_no });
                }
                index.insert(id.to_string(), labels.len());
                labels.push(id.to_string());
                weights.push(weight);
            }
            "e" => {
                if tokens.len() != 3 {
                    return Err(malformed());
                }
                let resolve = |tok: &str| {
                    index.get(tok).copied().ok_or(ParseGraphError::UnknownVertex {
                        line: line_no,
                        id: tok.to_string(),
                    })
                };
                let u = resolve(tokens[1])?;
                let v = resolve(tokens[2])?;
                if u == v {
                    return Err(ParseGraphError::SelfLoop {
                        line: line_no,
                        id: tokens[1].to_string(),
                    });
                }
                edges.push((u, v));
            }
            _ => return Err(malformed()),
        }
    }
    Ok((WeightedGraph::new(weights, &edges), labels))
}
