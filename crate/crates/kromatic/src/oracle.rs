//! Independent brute-force verification paths.
//!
//! Two routes recompute the p̄-expansion without touching the exponent
//! recurrences: (1) the `m̄̃`-expansion counts stable set covers and is
//! converted to the p̄ basis by inverting a unit upper triangular transition
//! matrix; (2) direct enumeration of proper set colorings in `n` variables
//! is compared against the specialization `p̄_k ↦ ∏_{i≤n}(1+x_i^k) − 1` of
//! the computed expansion. [`verify_graph`] orchestrates every cross-check
//! and reports per-check pass/fail with details.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::expansion::{
    exponents_by_log_rational, kromatic_pbar_expansion_by_products, kromatic_pbar_expansion_with,
    leading_terms_check, sign_report, Basis, SubgraphExponentTable, SymExpansion,
};
use crate::graph::{VertexSet, WeightedGraph};
use crate::partition::{partitions_up_to, Partition};

/// A set of distinct nonempty independent sets whose union is the whole
/// vertex set. Members are stored ascending by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetCover {
    sets: Vec<VertexSet>,
}

impl StableSetCover {
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    /// Total weight `Σ_S ω(S)` of the cover.
    pub fn total_weight(&self, graph: &WeightedGraph) -> usize {
        self.sets.iter().map(|&s| graph.subset_weight(s)).sum()
    }

    /// `λ(C)`: the partition collecting the member weights.
    pub fn weight_partition(&self, graph: &WeightedGraph) -> Partition {
        Partition::new(self.sets.iter().map(|&s| graph.subset_weight(s)).collect())
    }
}

struct CoverFrame {
    chosen: Vec<usize>,
    union: VertexSet,
    weight: usize,
    next: usize,
}

/// Streams every stable set cover with total weight at most the bound,
/// each exactly once, by ordered inclusion of candidate stable sets.
pub struct StableSetCovers<'a> {
    graph: &'a WeightedGraph,
    candidates: Vec<VertexSet>,
    candidate_weights: Vec<usize>,
    suffix_union: Vec<VertexSet>,
    bound: usize,
    full: VertexSet,
    stack: Vec<CoverFrame>,
}

impl Iterator for StableSetCovers<'_> {
    type Item = StableSetCover;

    fn next(&mut self) -> Option<StableSetCover> {
        while let Some(frame) = self.stack.pop() {
            for i in (frame.next..self.candidates.len()).rev() {
                let weight = frame.weight + self.candidate_weights[i];
                if weight > self.bound {
                    continue;
                }
                let union = frame.union.union(&self.candidates[i]);
                let missing = self.full.difference(&union);
                // covering the missing vertices costs at least their weight
                if weight + self.graph.subset_weight(missing) > self.bound {
                    continue;
                }
                if !missing.is_subset_of(&self.suffix_union[i + 1]) {
                    continue;
                }
                let mut chosen = frame.chosen.clone();
                chosen.push(i);
                self.stack.push(CoverFrame { chosen, union, weight, next: i + 1 });
            }
            if frame.union == self.full {
                return Some(StableSetCover {
                    sets: frame.chosen.iter().map(|&i| self.candidates[i]).collect(),
                });
            }
        }
        None
    }
}

/// All stable set covers of `G` with `Σ_S ω(S) ≤ max_total_weight`.
pub fn stable_set_covers(graph: &WeightedGraph, max_total_weight: usize) -> StableSetCovers<'_> {
    let mut candidates: Vec<VertexSet> = graph
        .independent_sets()
        .filter(|s| !s.is_empty() && graph.subset_weight(*s) <= max_total_weight)
        .collect();
    candidates.sort_unstable();
    let candidate_weights: Vec<usize> =
        candidates.iter().map(|&s| graph.subset_weight(s)).collect();
    let mut suffix_union = vec![VertexSet::EMPTY; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        suffix_union[i] = suffix_union[i + 1].union(&candidates[i]);
    }
    let full = graph.full_set();
    let mut stack = Vec::new();
    // root survives the same prunes its children face
    if graph.total_weight() <= max_total_weight && full.is_subset_of(&suffix_union[0]) {
        stack.push(CoverFrame { chosen: Vec::new(), union: VertexSet::EMPTY, weight: 0, next: 0 });
    }
    StableSetCovers {
        graph,
        candidates,
        candidate_weights,
        suffix_union,
        bound: max_total_weight,
        full,
        stack,
    }
}

/// The `m̄̃`-expansion of `X̄_(G,ω)` truncated at `degree`: the coefficient
/// of `m̄̃_μ` counts the stable set covers with `λ(C) = μ`.
pub fn mtilde_expansion(graph: &WeightedGraph, degree: usize) -> SymExpansion {
    let mut expansion = SymExpansion::new(Basis::Mtilde, degree);
    for cover in stable_set_covers(graph, degree) {
        expansion.add_term(cover.weight_partition(graph), BigInt::one());
    }
    expansion
}

/// The `m̄̃`-expansion of `p̄_λ` (the Kromatic function of the edgeless graph
/// whose vertex weights are the parts of `λ`), truncated at `degree`.
pub fn pbar_in_mtilde(lambda: &Partition, degree: usize) -> SymExpansion {
    assert!(lambda.size() <= degree, "partition {} exceeds degree {}", lambda, degree);
    let graph = WeightedGraph::new(lambda.parts().to_vec(), &[]);
    mtilde_expansion(&graph, degree)
}

/// Converts an `m̄̃`-expansion to the p̄ basis by solving the triangular
/// system `b_μ = Σ_λ c_λ [m̄̃_μ] p̄_λ` in the canonical partition order.
/// Panics if the transition matrix fails to be unit upper triangular, which
/// would signal an ordering bug.
pub fn mtilde_to_pbar(expansion: &SymExpansion, degree: usize) -> SymExpansion {
    assert_eq!(expansion.basis(), Basis::Mtilde, "input must be an m̄̃-expansion");
    assert_eq!(expansion.degree(), degree, "truncation degree mismatch");
    let partitions = partitions_up_to(degree);
    let rows: Vec<SymExpansion> =
        partitions.iter().map(|lambda| pbar_in_mtilde(lambda, degree)).collect();
    for (i, lambda) in partitions.iter().enumerate() {
        assert!(
            rows[i].coefficient(lambda).is_one(),
            "transition matrix is not unit triangular: diagonal entry at {} is {}",
            lambda,
            rows[i].coefficient(lambda)
        );
        for mu in partitions.iter().take(i) {
            assert!(
                rows[i].coefficient(mu).is_zero(),
                "transition matrix is not upper triangular: [m̄̃_{}] p̄_{} = {}",
                mu,
                lambda,
                rows[i].coefficient(mu)
            );
        }
    }
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(partitions.len());
    for (i, mu) in partitions.iter().enumerate() {
        let mut c = expansion.coefficient(mu);
        for j in 0..i {
            if coeffs[j].is_zero() {
                continue;
            }
            let m = rows[j].coefficient(mu);
            if !m.is_zero() {
                c -= &coeffs[j] * m;
            }
        }
        coeffs.push(c);
    }
    SymExpansion::from_terms(Basis::Pbar, degree, partitions.into_iter().zip(coeffs))
}

/// A symmetric polynomial in `num_vars` variables truncated at total degree
/// `degree`, stored by canonical exponent key (sorted descending, trailing
/// zeros dropped). The stored coefficient is the coefficient of the
/// representative monomial `x_1^(e_1) x_2^(e_2) ⋯` with `e` descending.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialTable {
    num_vars: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl MonomialTable {
    pub fn empty(num_vars: usize, degree: usize) -> Self {
        MonomialTable { num_vars, degree, terms: BTreeMap::new() }
    }

    /// Canonicalizes a map keyed by exact per-variable exponent vectors.
    /// Asserts the data is actually symmetric: within each orbit of the
    /// variable-permutation action all coefficients must agree and the
    /// orbit must be fully present.
    pub fn from_exact_exponents(
        num_vars: usize,
        degree: usize,
        exact: HashMap<Vec<usize>, BigInt>,
    ) -> Self {
        let mut groups: BTreeMap<Vec<usize>, (BigInt, u128)> = BTreeMap::new();
        for (exponents, coeff) in &exact {
            if coeff.is_zero() {
                continue;
            }
            assert_eq!(exponents.len(), num_vars, "exponent vector has wrong arity");
            let key = canonical_key(exponents);
            assert!(key.iter().sum::<usize>() <= degree, "monomial exceeds degree bound");
            match groups.get_mut(&key) {
                None => {
                    groups.insert(key, (coeff.clone(), 1));
                }
                Some((value, seen)) => {
                    assert_eq!(
                        value, coeff,
                        "not symmetric: orbit of {:?} carries different coefficients",
                        exponents
                    );
                    *seen += 1;
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (key, (value, seen)) in groups {
            let expected = orbit_size(&key, num_vars);
            assert_eq!(
                seen, expected,
                "not symmetric: orbit of {:?} has {} members, expected {}",
                key, seen, expected
            );
            terms.insert(key, value);
        }
        MonomialTable { num_vars, degree, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with the given exponents (any order).
    pub fn coefficient(&self, exponents: &[usize]) -> BigInt {
        self.terms.get(&canonical_key(exponents)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.terms.iter()
    }
}

impl fmt::Debug for MonomialTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialTable[n={}, D={}] {{", self.num_vars, self.degree)?;
        for (i, (key, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}: {}", key, coeff)?;
        }
        write!(f, "}}")
    }
}

fn canonical_key(exponents: &[usize]) -> Vec<usize> {
    let mut key: Vec<usize> = exponents.to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));
    while key.last() == Some(&0) {
        key.pop();
    }
    key
}

/// Number of distinct length-`n` exponent vectors with the given sorted
/// profile: the multinomial `n! / (zeros! · ∏ mult_v!)`.
fn orbit_size(key: &[usize], n: usize) -> u128 {
    let factorial = |m: usize| -> u128 { (1..=m as u128).product() };
    let mut size = factorial(n);
    let mut run = 1usize;
    for i in 1..key.len() {
        if key[i] == key[i - 1] {
            run += 1;
        } else {
            size /= factorial(run);
            run = 1;
        }
    }
    if !key.is_empty() {
        size /= factorial(run);
    }
    size /= factorial(n - key.len());
    size
}

struct ColoringSearch<'a> {
    graph: &'a WeightedGraph,
    colors: usize,
    degree: usize,
    earlier_neighbors: Vec<VertexSet>,
    suffix_min: Vec<usize>,
    assigned: Vec<u32>,
    exponents: Vec<usize>,
    exact: HashMap<Vec<usize>, BigInt>,
}

impl ColoringSearch<'_> {
    fn run(&mut self, v: usize, used_degree: usize) {
        let n = self.graph.vertex_count();
        if v == n {
            *self.exact.entry(self.exponents.clone()).or_insert_with(BigInt::zero) += 1;
            return;
        }
        let weight = self.graph.weight_of(v);
        let mut forbidden: u32 = 0;
        for u in self.earlier_neighbors[v].iter() {
            forbidden |= self.assigned[u];
        }
        for mask in 1u32..(1 << self.colors) {
            if mask & forbidden != 0 {
                continue;
            }
            let chosen = mask.count_ones() as usize;
            let next_degree = used_degree + weight * chosen;
            if next_degree + self.suffix_min[v + 1] > self.degree {
                continue;
            }
            self.assigned[v] = mask;
            for i in 0..self.colors {
                if mask >> i & 1 == 1 {
                    self.exponents[i] += weight;
                }
            }
            self.run(v + 1, next_degree);
            for i in 0..self.colors {
                if mask >> i & 1 == 1 {
                    self.exponents[i] -= weight;
                }
            }
        }
        self.assigned[v] = 0;
    }
}

/// Sums the monomials of every proper set coloring `α: V → nonempty subsets
/// of {1..n}` with disjoint sets on edges, discarding monomials of total
/// degree above `degree`.
pub fn enumerate_set_colorings(
    graph: &WeightedGraph,
    colors: usize,
    degree: usize,
) -> MonomialTable {
    assert!(colors >= 1, "need at least one color");
    assert!(colors <= 20, "color-subset enumeration is limited to 20 colors");
    let n = graph.vertex_count();
    let earlier_neighbors: Vec<VertexSet> = (0..n)
        .map(|v| VertexSet(graph.neighbors(v).0 & ((1u64 << v) - 1)))
        .collect();
    let mut suffix_min = vec![0usize; n + 1];
    for v in (0..n).rev() {
        suffix_min[v] = suffix_min[v + 1] + graph.weight_of(v);
    }
    if suffix_min[0] > degree {
        // even one color per vertex exceeds the degree bound
        return MonomialTable::empty(colors, degree);
    }
    let mut search = ColoringSearch {
        graph,
        colors,
        degree,
        earlier_neighbors,
        suffix_min,
        assigned: vec![0; n.max(1)],
        exponents: vec![0; colors],
        exact: HashMap::new(),
    };
    search.run(0, 0);
    let exact = std::mem::take(&mut search.exact);
    MonomialTable::from_exact_exponents(colors, degree, exact)
}

/// Evaluates a p̄-expansion in `n` variables via `p̄_k ↦ ∏_{i≤n}(1+x_i^k) − 1`,
/// truncated at total degree `degree`.
pub fn specialize_pbar(expansion: &SymExpansion, colors: usize, degree: usize) -> MonomialTable {
    assert_eq!(expansion.basis(), Basis::Pbar, "can only specialize a p̄-expansion");
    assert!(colors >= 1, "need at least one color");
    assert!(colors <= 20, "color-subset enumeration is limited to 20 colors");
    let mut result: HashMap<Vec<usize>, BigInt> = HashMap::new();
    for (lambda, coeff) in expansion.terms() {
        if lambda.size() > degree {
            continue;
        }
        let mut poly: HashMap<Vec<usize>, BigInt> = HashMap::new();
        poly.insert(vec![0; colors], BigInt::one());
        for &part in lambda.parts() {
            let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
            for (exponents, c) in &poly {
                let total: usize = exponents.iter().sum();
                for mask in 1u32..(1 << colors) {
                    let chosen = mask.count_ones() as usize;
                    if total + part * chosen > degree {
                        continue;
                    }
                    let mut bumped = exponents.clone();
                    for (i, e) in bumped.iter_mut().enumerate() {
                        if mask >> i & 1 == 1 {
                            *e += part;
                        }
                    }
                    *next.entry(bumped).or_insert_with(BigInt::zero) += c;
                }
            }
            poly = next;
        }
        for (exponents, c) in poly {
            *result.entry(exponents).or_insert_with(BigInt::zero) += coeff * c;
        }
    }
    result.retain(|_, c| !c.is_zero());
    MonomialTable::from_exact_exponents(colors, degree, result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Skipped => write!(f, "SKIPPED"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub status: CheckStatus,
    pub details: Vec<String>,
}

impl CheckResult {
    fn pass(check: &str, details: Vec<String>) -> Self {
        CheckResult { check: check.to_string(), status: CheckStatus::Pass, details }
    }

    fn fail(check: &str, details: Vec<String>) -> Self {
        CheckResult { check: check.to_string(), status: CheckStatus::Fail, details }
    }

    fn from_mismatches(check: &str, mismatches: Vec<String>, ok_detail: String) -> Self {
        if mismatches.is_empty() {
            Self::pass(check, vec![ok_detail])
        } else {
            Self::fail(check, mismatches)
        }
    }
}

/// Outcome of [`verify_graph`]: one entry per cross-check, in a fixed order.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

fn diff_expansions(
    left_name: &str,
    left: &SymExpansion,
    right_name: &str,
    right: &SymExpansion,
) -> Vec<String> {
    let mut keys: Vec<&Partition> = left.terms().map(|(p, _)| p).collect();
    keys.extend(right.terms().map(|(p, _)| p));
    keys.sort();
    keys.dedup();
    let mut diffs = Vec::new();
    for key in keys {
        let a = left.coefficient(key);
        let b = right.coefficient(key);
        if a != b {
            diffs.push(format!(
                "λ = {}: {} gives {}, {} gives {}",
                key, left_name, a, right_name, b
            ));
        }
    }
    diffs
}

fn diff_tables(
    left_name: &str,
    left: &MonomialTable,
    right_name: &str,
    right: &MonomialTable,
) -> Vec<String> {
    let mut keys: Vec<Vec<usize>> = left.terms().map(|(k, _)| k.clone()).collect();
    keys.extend(right.terms().map(|(k, _)| k.clone()));
    keys.sort();
    keys.dedup();
    let mut diffs = Vec::new();
    for key in keys {
        let a = left.coefficient(&key);
        let b = right.coefficient(&key);
        if a != b {
            diffs.push(format!(
                "monomial {:?}: {} gives {}, {} gives {}",
                key, left_name, a, right_name, b
            ));
        }
    }
    diffs
}

/// Runs every cross-check on one graph and reports the outcomes:
/// agreement of the two exponent recurrences, the product-shaped assembly
/// against the per-coefficient assembly, the stable-set-cover oracle, the
/// set-coloring oracle in `colors` variables, the leading-terms comparison
/// with the classical chromatic expansion, integrality of the rational
/// recurrence, and (for unweighted graphs) the sign pattern.
pub fn verify_graph(graph: &WeightedGraph, degree: usize, colors: usize) -> VerificationReport {
    verify_graph_with(graph, degree, colors, false)
}

/// [`verify_graph`] with a parallelism toggle for the expansion assembly;
/// the report is identical either way.
pub fn verify_graph_with(
    graph: &WeightedGraph,
    degree: usize,
    colors: usize,
    parallel: bool,
) -> VerificationReport {
    let mut checks = Vec::new();
    let table = SubgraphExponentTable::build(graph, degree);
    let expansion = kromatic_pbar_expansion_with(graph, degree, parallel);

    // 1. the two exponent recurrences agree on every induced subgraph
    let mut mismatches = Vec::new();
    for class in table.classes() {
        let by_log = exponents_by_log_rational(&class.polynomial, degree);
        for k in 1..=degree {
            let integer_route = class.exponents.get(k);
            let log_route = &by_log[k - 1];
            if !log_route.is_integer() || &log_route.to_integer() != integer_route {
                mismatches.push(format!(
                    "W = {:?}, k = {}: integer recurrence gives {}, log recurrence gives {}",
                    class.representative, k, integer_route, log_route
                ));
            }
        }
    }
    checks.push(CheckResult::from_mismatches(
        "recurrence_agreement",
        mismatches,
        format!(
            "{} subset classes ({} subsets) agree through k = {}",
            table.classes().len(),
            1u64 << graph.vertex_count(),
            degree
        ),
    ));

    // 2. product-shaped assembly equals per-coefficient assembly
    let by_products = kromatic_pbar_expansion_by_products(graph, degree);
    checks.push(CheckResult::from_mismatches(
        "product_vs_coefficient_assembly",
        diff_expansions("product route", &by_products, "coefficient route", &expansion),
        format!("{} nonzero terms agree", expansion.len()),
    ));

    // 3. stable-set-cover oracle through the triangular basis change
    let from_covers = mtilde_to_pbar(&mtilde_expansion(graph, degree), degree);
    checks.push(CheckResult::from_mismatches(
        "stable_set_cover_oracle",
        diff_expansions("cover oracle", &from_covers, "expansion", &expansion),
        format!("cover route matches on all partitions with |λ| ≤ {}", degree),
    ));

    // 4. proper-set-coloring oracle in `colors` variables
    let colored = enumerate_set_colorings(graph, colors, degree);
    let specialized = specialize_pbar(&expansion, colors, degree);
    checks.push(CheckResult::from_mismatches(
        "set_coloring_oracle",
        diff_tables("coloring enumeration", &colored, "specialized expansion", &specialized),
        format!("{} monomial classes match in {} variables", colored.len(), colors),
    ));

    // 5. leading terms against the classical chromatic expansion
    let leading = leading_terms_check(graph);
    checks.push(CheckResult::from_mismatches(
        "leading_terms",
        leading.mismatches,
        format!("slice |λ| = {} matches; lower slices vanish", graph.total_weight()),
    ));

    // 6. integrality of the rational recurrence
    let mut integrality = Vec::new();
    for class in table.classes() {
        for (i, value) in exponents_by_log_rational(&class.polynomial, degree).iter().enumerate() {
            if !value.is_integer() {
                integrality.push(format!(
                    "W = {:?}: a({}) = {} is not an integer",
                    class.representative,
                    i + 1,
                    value
                ));
            }
        }
    }
    checks.push(CheckResult::from_mismatches(
        "integrality",
        integrality,
        format!("all a_W(k) integral across {} classes", table.classes().len()),
    ));

    // 7. sign pattern, unweighted graphs only
    if graph.is_unweighted() {
        let report = sign_report(graph, degree);
        let mut violations: Vec<String> = report
            .coefficient_violations
            .iter()
            .map(|(p, c)| {
                format!("coefficient at {} is {}: sign should be (−1)^{}", p, c, p.size() - p.len())
            })
            .collect();
        violations.extend(report.exponent_violations.iter().map(|(w, k, a)| {
            format!("a_W({}) = {} for W = {:?}: sign should be (−1)^{}", k, a, w, k + 1)
        }));
        let zeros = report.zero_at_or_above_vertex_count.len();
        checks.push(CheckResult::from_mismatches(
            "sign_pattern",
            violations,
            format!("signs consistent; {} zero coefficients with |λ| ≥ |V|", zeros),
        ));
    } else {
        checks.push(CheckResult {
            check: "sign_pattern".to_string(),
            status: CheckStatus::Skipped,
            details: vec![
                "graph has a weight above 1; the sign pattern applies to unweighted graphs"
                    .to_string(),
            ],
        });
    }

    VerificationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::kromatic_pbar_expansion;
    use crate::graph::parse_graph;

    fn k21() -> WeightedGraph {
        parse_graph("v a 2\nv b 1\ne a b").unwrap()
    }

    fn edge() -> WeightedGraph {
        parse_graph("v a\nv b\ne a b").unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn covers_of_single_vertex() {
        let g = WeightedGraph::unweighted(1, &[]);
        let covers: Vec<StableSetCover> = stable_set_covers(&g, 3).collect();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].sets(), &[VertexSet::singleton(0)]);
        assert_eq!(covers[0].weight_partition(&g), p(&[1]));
    }

    #[test]
    fn covers_of_edge_with_tight_bound() {
        let g = edge();
        let covers: Vec<StableSetCover> = stable_set_covers(&g, 2).collect();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].sets(), &[VertexSet::singleton(0), VertexSet::singleton(1)]);
        assert_eq!(covers[0].weight_partition(&g), p(&[1, 1]));
    }

    #[test]
    fn covers_of_edgeless_pair() {
        let g = WeightedGraph::unweighted(2, &[]);
        let mut partitions: Vec<Partition> =
            stable_set_covers(&g, 2).map(|c| c.weight_partition(&g)).collect();
        partitions.sort();
        assert_eq!(partitions, vec![p(&[1, 1]), p(&[2])]);
    }

    #[test]
    fn covers_of_empty_graph() {
        let g = WeightedGraph::empty();
        let covers: Vec<StableSetCover> = stable_set_covers(&g, 4).collect();
        assert_eq!(covers.len(), 1);
        assert!(covers[0].sets().is_empty());
        assert_eq!(covers[0].weight_partition(&g), Partition::empty());
    }

    #[test]
    fn covers_respect_the_weight_bound() {
        let g = WeightedGraph::unweighted(3, &[(0, 1)]);
        for bound in 3..=6 {
            for cover in stable_set_covers(&g, bound) {
                assert!(cover.total_weight(&g) <= bound);
            }
        }
    }

    #[test]
    fn covers_are_distinct_families() {
        let g = WeightedGraph::unweighted(4, &[(0, 1), (2, 3)]);
        let covers: Vec<Vec<u64>> = stable_set_covers(&g, 6)
            .map(|c| c.sets().iter().map(|s| s.0).collect())
            .collect();
        let mut dedup = covers.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(covers.len(), dedup.len());
    }

    #[test]
    fn mtilde_expansion_of_edge() {
        // the only stable sets are the two singletons, so the only cover is
        // both of them together
        let expansion = mtilde_expansion(&edge(), 4);
        assert_eq!(expansion.len(), 1);
        assert_eq!(expansion.coefficient(&p(&[1, 1])), int(1));
    }

    #[test]
    fn mtilde_expansion_of_single_weighted_vertex() {
        for weight in [1, 3] {
            let g = WeightedGraph::new(vec![weight], &[]);
            let expansion = mtilde_expansion(&g, weight + 2);
            assert_eq!(expansion.len(), 1);
            assert_eq!(expansion.coefficient(&p(&[weight])), int(1));
        }
    }

    #[test]
    fn mtilde_expansion_of_k21() {
        let expansion = mtilde_expansion(&k21(), 3);
        assert_eq!(expansion.len(), 1);
        assert_eq!(expansion.coefficient(&p(&[2, 1])), int(1));
    }

    #[test]
    fn pbar_in_mtilde_diagonal_entries() {
        let row = pbar_in_mtilde(&p(&[1]), 3);
        assert_eq!(row.len(), 1);
        assert_eq!(row.coefficient(&p(&[1])), int(1));

        let pair = pbar_in_mtilde(&p(&[1, 1]), 2);
        assert_eq!(pair.coefficient(&p(&[1, 1])), int(1));
        assert_eq!(pair.coefficient(&p(&[2])), int(1));
        assert_eq!(pair.len(), 2);

        let row21 = pbar_in_mtilde(&p(&[2, 1]), 3);
        assert_eq!(row21.coefficient(&p(&[2, 1])), int(1));
        assert_eq!(row21.coefficient(&p(&[3])), int(1));
    }

    #[test]
    fn pbar_in_mtilde_is_triangular_up_to_six() {
        let all = partitions_up_to(6);
        for lambda in &all {
            let row = pbar_in_mtilde(lambda, 6);
            for mu in &all {
                let entry = row.coefficient(mu);
                if mu == lambda {
                    assert!(entry.is_one());
                } else if mu.size() < lambda.size()
                    || (mu.size() == lambda.size() && !lambda.is_refinement_of(mu))
                {
                    assert!(entry.is_zero(), "[m̄̃_{}] p̄_{} = {}", mu, lambda, entry);
                }
            }
        }
    }

    #[test]
    fn mtilde_to_pbar_recovers_k21_expansion() {
        let converted = mtilde_to_pbar(&mtilde_expansion(&k21(), 4), 4);
        assert_eq!(converted, kromatic_pbar_expansion(&k21(), 4));
        assert_eq!(converted.coefficient(&p(&[3])), int(-1));
        assert_eq!(converted.coefficient(&p(&[2, 1])), int(1));
        assert_eq!(converted.coefficient(&p(&[4])), int(1));
        assert_eq!(converted.coefficient(&p(&[3, 1])), int(-1));
    }

    #[test]
    fn mtilde_to_pbar_recovers_edge_expansion() {
        let converted = mtilde_to_pbar(&mtilde_expansion(&edge(), 4), 4);
        let expected = SymExpansion::from_terms(
            Basis::Pbar,
            4,
            [
                (p(&[2]), int(-1)),
                (p(&[1, 1]), int(1)),
                (p(&[3]), int(2)),
                (p(&[2, 1]), int(-2)),
                (p(&[4]), int(-4)),
                (p(&[3, 1]), int(4)),
                (p(&[2, 2]), int(1)),
                (p(&[2, 1, 1]), int(-1)),
            ],
        );
        assert_eq!(converted, expected);
    }

    #[test]
    fn mtilde_to_pbar_inverts_single_basis_element() {
        let degree = 5;
        let lambda0 = p(&[2, 2, 1]);
        let single = SymExpansion::from_terms(Basis::Mtilde, degree, [(lambda0.clone(), int(1))]);
        let in_pbar = mtilde_to_pbar(&single, degree);
        // re-expand: Σ_λ c_λ · (m̄̃ expansion of p̄_λ) must give back the input
        let mut recombined = SymExpansion::new(Basis::Mtilde, degree);
        for (lambda, c) in in_pbar.terms() {
            recombined.accumulate_scaled(&pbar_in_mtilde(lambda, degree), c);
        }
        assert_eq!(recombined, single);
    }

    #[test]
    fn cover_counts_are_isomorphism_invariant() {
        let g = parse_graph("v a\nv b\nv c\ne a b\ne b c").unwrap();
        let relabeled = parse_graph("v c\nv a\nv b\ne b c\ne a b").unwrap();
        assert_eq!(mtilde_expansion(&g, 5), mtilde_expansion(&relabeled, 5));
    }

    #[test]
    fn colorings_of_single_vertex() {
        let g = WeightedGraph::unweighted(1, &[]);
        let table = enumerate_set_colorings(&g, 2, 2);
        assert_eq!(table.coefficient(&[1]), int(1));
        assert_eq!(table.coefficient(&[1, 1]), int(1));
        assert_eq!(table.len(), 2);
    }

    #[test]
    fn colorings_of_edge_two_colors() {
        let table = enumerate_set_colorings(&edge(), 2, 2);
        assert_eq!(table.coefficient(&[1, 1]), int(2));
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn colorings_of_k21_two_colors() {
        let table = enumerate_set_colorings(&k21(), 2, 3);
        assert_eq!(table.coefficient(&[2, 1]), int(1));
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn colorings_of_empty_graph() {
        let table = enumerate_set_colorings(&WeightedGraph::empty(), 3, 2);
        assert_eq!(table.coefficient(&[]), int(1));
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn specialize_single_pbar_term() {
        let expansion = SymExpansion::from_terms(Basis::Pbar, 2, [(p(&[1]), int(1))]);
        let table = specialize_pbar(&expansion, 2, 2);
        assert_eq!(table.coefficient(&[1]), int(1));
        assert_eq!(table.coefficient(&[1, 1]), int(1));
        assert_eq!(table.len(), 2);
    }

    #[test]
    fn specialize_edge_expansion_matches_colorings() {
        let expansion = kromatic_pbar_expansion(&edge(), 2);
        let table = specialize_pbar(&expansion, 2, 2);
        assert_eq!(table.coefficient(&[1, 1]), int(2));
        assert_eq!(table, enumerate_set_colorings(&edge(), 2, 2));
    }

    #[test]
    fn specialize_empty_expansion() {
        let table = specialize_pbar(&SymExpansion::new(Basis::Pbar, 3), 3, 3);
        assert!(table.is_empty());
    }

    #[test]
    fn monomial_table_symmetry_queries() {
        let table = enumerate_set_colorings(&k21(), 3, 3);
        assert_eq!(table.coefficient(&[2, 1, 0]), table.coefficient(&[0, 1, 2]));
        assert_eq!(table.coefficient(&[1, 2, 0]), table.coefficient(&[2, 1]));
    }

    #[test]
    fn verify_k21() {
        let report = verify_graph(&k21(), 6, 6);
        for check in &report.checks {
            if check.check == "sign_pattern" {
                assert_eq!(check.status, CheckStatus::Skipped);
            } else {
                assert_eq!(check.status, CheckStatus::Pass, "{:?}", check);
            }
        }
        assert!(report.all_passed());
    }

    #[test]
    fn verify_edge() {
        let report = verify_graph(&edge(), 6, 6);
        assert!(report.all_passed());
        assert!(report.checks.iter().all(|c| c.status == CheckStatus::Pass));
    }

    #[test]
    fn verify_triangle() {
        let g = WeightedGraph::unweighted(3, &[(0, 1), (1, 2), (0, 2)]);
        let report = verify_graph(&g, 5, 5);
        assert!(report.all_passed(), "{}", report.to_json_string());
    }

    #[test]
    fn report_serializes_as_array() {
        let report = verify_graph(&WeightedGraph::unweighted(1, &[]), 3, 3);
        let json = report.to_json_string();
        assert!(json.starts_with("[{\"check\":\"recurrence_agreement\",\"status\":\"pass\""));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks.len(), report.checks.len());
    }
}
