//! The p̄-expansion engine.
//!
//! For a weighted graph `(G, ω)` the Kromatic symmetric function satisfies
//!
//! ```text
//! X̄_(G,ω) = Σ_{W ⊆ V} (−1)^(|V∖W|) ∏_{k≥1} (1 + p̄_k)^(a_W(k)),
//! ```
//!
//! where the exponents `a_W(k)` are the unique integers with
//! `∏_k (1 + t^k)^(a_W(k)) = I_(G|_W,ω)(t)` as formal series. This module
//! computes the exponent vectors by two independent recurrences (a rational
//! logarithm recurrence and an all-integer binomial recurrence), assembles
//! the p̄-expansion coefficient by coefficient, and provides the classical
//! chromatic `p`-expansion for leading-term checks.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{IntPolynomial, VertexSet, WeightedGraph};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::series::{gen_binomial, product_of_binomial_powers, TruncatedSeries};

/// The integers `a(1)..a(D)` of one factorization `∏_k (1+t^k)^(a(k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentVector {
    entries: Vec<BigInt>,
}

impl ExponentVector {
    pub fn from_entries(entries: Vec<BigInt>) -> Self {
        ExponentVector { entries }
    }

    /// Highest `k` with a stored entry.
    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// `a(k)`, 1-based; panics beyond the stored degree.
    pub fn get(&self, k: usize) -> &BigInt {
        assert!(k >= 1 && k <= self.entries.len(), "a({}) not computed", k);
        &self.entries[k - 1]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Reconstructs `∏_k (1+t^k)^(a(k))` truncated at the vector's degree.
    pub fn to_series(&self) -> TruncatedSeries {
        product_of_binomial_powers(&self.entries, self.entries.len())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "a({})={}", i + 1, a)?;
        }
        Ok(())
    }
}

/// `∏_j binom(a(j), i_j)` over the parts of `λ` with multiplicities `i_j`.
fn coefficient_product(exponents: &[BigInt], lambda: &Partition) -> BigInt {
    let mut product = BigInt::one();
    for (&j, &mult) in &lambda.multiplicity_view() {
        assert!(j <= exponents.len(), "a({}) not available for partition {}", j, lambda);
        product *= gen_binomial(&exponents[j - 1], mult);
        if product.is_zero() {
            break;
        }
    }
    product
}

/// Exponents by the logarithm recurrence, in exact rational arithmetic:
/// `a(k) = [t^k] log I(t) + Σ_{d|k, d<k} (−1)^(k/d) d·a(d) / k`.
///
/// The entries are provably integers; this returns the raw rationals so the
/// integrality can be checked externally as well.
pub fn exponents_by_log_rational(poly: &IntPolynomial, degree: usize) -> Vec<BigRational> {
    assert!(
        poly.constant_term().is_one(),
        "exponent recurrences require constant term 1"
    );
    let log = TruncatedSeries::from_int_polynomial(poly, degree).log();
    let mut a: Vec<BigRational> = Vec::with_capacity(degree);
    for k in 1..=degree {
        let mut value = log.coeff(k).clone();
        for d in 1..k {
            if k % d != 0 {
                continue;
            }
            let sign: i64 = if (k / d) % 2 == 0 { 1 } else { -1 };
            let factor = BigRational::new(BigInt::from(sign * d as i64), BigInt::from(k));
            value += &a[d - 1] * factor;
        }
        a.push(value);
    }
    a
}

/// Exponents by the logarithm recurrence, asserted integral.
pub fn exponents_by_log(poly: &IntPolynomial, degree: usize) -> ExponentVector {
    let rationals = exponents_by_log_rational(poly, degree);
    let entries = rationals
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert!(
                r.is_integer(),
                "a({}) = {} is not an integer; this signals an arithmetic bug",
                i + 1,
                r
            );
            r.to_integer()
        })
        .collect();
    ExponentVector { entries }
}

/// Exponents by the all-integer recurrence:
/// `a(k) = [t^k] I(t) − Σ_{λ ⊢ k, λ ≠ (k)} ∏_j binom(a(j), i_j)`,
/// where the sum runs over partitions of `k` with all parts below `k`.
pub fn exponents_by_integer_recurrence(poly: &IntPolynomial, degree: usize) -> ExponentVector {
    assert!(
        poly.constant_term().is_one(),
        "exponent recurrences require constant term 1"
    );
    let mut entries: Vec<BigInt> = Vec::with_capacity(degree);
    for k in 1..=degree {
        let mut value = poly.coeff(k);
        for lambda in partitions_of(k) {
            if lambda.len() == 1 {
                continue;
            }
            value -= coefficient_product(&entries, &lambda);
        }
        entries.push(value);
    }
    ExponentVector { entries }
}

/// One equivalence class of vertex subsets sharing an independence
/// polynomial, with the inclusion-exclusion weight `Σ_W (−1)^(|V∖W|)`
/// accumulated over its members.
pub struct ExponentClass {
    pub polynomial: Arc<IntPolynomial>,
    pub exponents: Arc<ExponentVector>,
    pub signed_count: BigInt,
    pub representative: VertexSet,
    pub member_count: usize,
}

/// Exponent vectors of every induced subgraph `G|_W`, memoized by the
/// independence polynomial so subgraphs with equal polynomials are solved
/// once. Classes are ordered by first occurrence (ascending subset mask).
pub struct SubgraphExponentTable {
    degree: usize,
    class_of: Vec<usize>,
    classes: Vec<ExponentClass>,
}

impl SubgraphExponentTable {
    pub fn build(graph: &WeightedGraph, degree: usize) -> Self {
        let n = graph.vertex_count();
        let polys = graph.independence_polynomials_all_subsets();
        let mut index_of_poly: std::collections::HashMap<*const IntPolynomial, usize> =
            std::collections::HashMap::new();
        let mut classes: Vec<ExponentClass> = Vec::new();
        let mut class_of: Vec<usize> = Vec::with_capacity(1 << n);
        for (mask, poly) in polys.iter().enumerate() {
            let idx = *index_of_poly.entry(Arc::as_ptr(poly)).or_insert_with(|| {
                classes.push(ExponentClass {
                    polynomial: poly.clone(),
                    exponents: Arc::new(exponents_by_integer_recurrence(poly, degree)),
                    signed_count: BigInt::zero(),
                    representative: VertexSet(mask as u64),
                    member_count: 0,
                });
                classes.len() - 1
            });
            let class = &mut classes[idx];
            if (n - (mask as u64).count_ones() as usize).is_multiple_of(2) {
                class.signed_count += 1;
            } else {
                class.signed_count -= 1;
            }
            class.member_count += 1;
            class_of.push(idx);
        }
        SubgraphExponentTable { degree, class_of, classes }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, w: VertexSet) -> &ExponentVector {
        &self.classes[self.class_of[w.0 as usize]].exponents
    }

    pub fn polynomial(&self, w: VertexSet) -> &IntPolynomial {
        &self.classes[self.class_of[w.0 as usize]].polynomial
    }

    pub fn classes(&self) -> &[ExponentClass] {
        &self.classes
    }
}

/// Which basis a [`SymExpansion`]'s coefficients refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "pbar")]
    Pbar,
    #[serde(rename = "mtilde")]
    Mtilde,
    #[serde(rename = "classical_p")]
    ClassicalP,
}

impl Basis {
    /// Token used when rendering terms, e.g. `p[321]` or `m~[321]`.
    pub fn term_symbol(&self) -> &'static str {
        match self {
            Basis::Pbar | Basis::ClassicalP => "p",
            Basis::Mtilde => "m~",
        }
    }
}

/// A finite map from partitions to integer coefficients, tagged with its
/// basis and truncation degree. Zero coefficients are never stored, and the
/// key order is the canonical partition order.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpansion {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymExpansion {
    pub fn new(basis: Basis, degree: usize) -> Self {
        SymExpansion { basis, degree, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut expansion = Self::new(basis, degree);
        for (partition, coeff) in terms {
            expansion.add_term(partition, coeff);
        }
        expansion
    }

    pub fn basis(&self) -> Basis {
        self.basis
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

    /// Accumulates `coeff` onto `partition`, dropping the entry if it cancels.
    pub fn add_term(&mut self, partition: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        assert!(
            partition.size() <= self.degree,
            "partition {} exceeds truncation degree {}",
            partition,
            self.degree
        );
        match self.terms.entry(partition) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, partition: &Partition) -> BigInt {
        self.terms.get(partition).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// The terms whose partitions have the given size.
    pub fn slice(&self, size: usize) -> Vec<(&Partition, &BigInt)> {
        self.terms.iter().filter(|(p, _)| p.size() == size).collect()
    }

    /// Adds `factor · other` into `self` term by term.
    pub fn accumulate_scaled(&mut self, other: &SymExpansion, factor: &BigInt) {
        for (partition, coeff) in other.terms() {
            self.add_term(partition.clone(), coeff * factor);
        }
    }

    /// Product in the coefficient algebra where basis elements multiply by
    /// merging partitions (`p̄_λ · p̄_μ = p̄_{λ∪μ}`), truncated at the shared
    /// degree. Valid for the multiplicative bases, not for `m̄̃`.
    pub fn mul_truncated(&self, other: &SymExpansion) -> SymExpansion {
        assert_eq!(self.basis, other.basis, "cannot multiply expansions in different bases");
        assert!(
            !matches!(self.basis, Basis::Mtilde),
            "augmented monomial basis elements do not multiply by partition merge"
        );
        assert_eq!(self.degree, other.degree, "truncation degree mismatch");
        let mut out = SymExpansion::new(self.basis, self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if p.size() + q.size() <= self.degree {
                    out.add_term(p.merge(q), a * b);
                }
            }
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        let repr = ExpansionRepr {
            basis: self.basis,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(partition, coeff)| TermRepr {
                    partition: partition.clone(),
                    coeff: coeff.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("expansion serialization cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<Self, String> {
        let repr: ExpansionRepr = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let mut expansion = SymExpansion::new(repr.basis, repr.degree);
        for term in repr.terms {
            let coeff: BigInt = term
                .coeff
                .parse()
                .map_err(|_| format!("invalid integer coefficient {:?}", term.coeff))?;
            if term.partition.size() > repr.degree {
                return Err(format!(
                    "partition {} exceeds truncation degree {}",
                    term.partition, repr.degree
                ));
            }
            expansion.add_term(term.partition, coeff);
        }
        Ok(expansion)
    }
}

impl fmt::Debug for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymExpansion[{:?}, D={}] {{", self.basis, self.degree)?;
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", p, c)?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    basis: Basis,
    degree: usize,
    terms: Vec<TermRepr>,
}

/// The p̄-expansion of `X̄_(G,ω)` to degree `degree`: for every partition
/// with `|λ| ≤ degree`, the exact integer coefficient
/// `Σ_{W⊆V} (−1)^(|V∖W|) ∏_k binom(a_W(k), i_k)`.
///
/// The empty-partition coefficient is included when nonzero, which happens
/// exactly for the empty graph (where `X̄ = 1`).
pub fn kromatic_pbar_expansion(graph: &WeightedGraph, degree: usize) -> SymExpansion {
    kromatic_pbar_expansion_with(graph, degree, false)
}

/// Same as [`kromatic_pbar_expansion`] with an explicit parallelism toggle;
/// both settings produce identical output.
pub fn kromatic_pbar_expansion_with(
    graph: &WeightedGraph,
    degree: usize,
    parallel: bool,
) -> SymExpansion {
    let table = SubgraphExponentTable::build(graph, degree);
    let partitions = partitions_up_to(degree);
    let coefficient = |lambda: &Partition| -> BigInt {
        table
            .classes()
            .iter()
            .map(|class| {
                &class.signed_count * coefficient_product(class.exponents.entries(), lambda)
            })
            .sum()
    };
    let pairs: Vec<(Partition, BigInt)> = if parallel {
        partitions
            .into_par_iter()
            .map(|lambda| {
                let c = coefficient(&lambda);
                (lambda, c)
            })
            .collect()
    } else {
        partitions
            .into_iter()
            .map(|lambda| {
                let c = coefficient(&lambda);
                (lambda, c)
            })
            .collect()
    };
    SymExpansion::from_terms(Basis::Pbar, degree, pairs)
}

/// Single coefficient `[p̄_λ] X̄_(G,ω)` without materializing the expansion.
pub fn pbar_coefficient(graph: &WeightedGraph, lambda: &Partition) -> BigInt {
    let table = SubgraphExponentTable::build(graph, lambda.max_part());
    table
        .classes()
        .iter()
        .map(|class| &class.signed_count * coefficient_product(class.exponents.entries(), lambda))
        .sum()
}

/// Closed-form prediction of `[p̄_λ] X̄` for the graph with one edge joining
/// a weight-2 vertex to a weight-1 vertex: the coefficient is
/// `(−1)^(number of parts divisible by 3)` when `|λ| ≥ 3`, every part is
/// `2^j` or `3·2^j`, and no power-of-two part repeats; otherwise 0.
pub fn k21_coefficient_rule(lambda: &Partition) -> BigInt {
    if lambda.size() < 3 {
        return BigInt::zero();
    }
    let mut multiples_of_three = 0usize;
    for (&part, &mult) in &lambda.multiplicity_view() {
        let odd = part >> part.trailing_zeros();
        match odd {
            1 => {
                if mult > 1 {
                    return BigInt::zero();
                }
            }
            3 => multiples_of_three += mult,
            _ => return BigInt::zero(),
        }
    }
    if multiples_of_three.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// p̄-expansion of the Y-function (the coloring sum relaxed to allow empty
/// color sets), which factors as `∏_k (1 + p̄_k)^(a_V(k))`. Includes the
/// empty-partition coefficient 1.
pub fn y_function_expansion(graph: &WeightedGraph, degree: usize) -> SymExpansion {
    let exponents = exponents_by_integer_recurrence(&graph.independence_polynomial(), degree);
    let terms = partitions_up_to(degree).into_iter().map(|lambda| {
        let c = coefficient_product(exponents.entries(), &lambda);
        (lambda, c)
    });
    SymExpansion::from_terms(Basis::Pbar, degree, terms)
}

/// The truncated expansion of one factor `(1 + p̄_k)^a`:
/// `Σ_i binom(a, i) p̄_(k^i)` over `k·i ≤ degree`.
fn binomial_factor_expansion(k: usize, a: &BigInt, degree: usize) -> SymExpansion {
    let mut terms = Vec::new();
    let mut i = 0;
    while k * i <= degree {
        terms.push((Partition::new(vec![k; i]), gen_binomial(a, i)));
        i += 1;
    }
    SymExpansion::from_terms(Basis::Pbar, degree, terms)
}

/// Assembles the p̄-expansion by explicitly multiplying the truncated
/// factors `∏_k (1 + p̄_k)^(a_W(k))` per subset class and combining them by
/// inclusion-exclusion. Computes the same numbers as
/// [`kromatic_pbar_expansion`] along the product shape instead of the
/// per-coefficient formula; used as a cross-check.
pub fn kromatic_pbar_expansion_by_products(graph: &WeightedGraph, degree: usize) -> SymExpansion {
    let table = SubgraphExponentTable::build(graph, degree);
    let mut acc = SymExpansion::new(Basis::Pbar, degree);
    for class in table.classes() {
        let mut product =
            SymExpansion::from_terms(Basis::Pbar, degree, [(Partition::empty(), BigInt::one())]);
        for k in 1..=degree {
            let a = class.exponents.get(k);
            if a.is_zero() {
                continue;
            }
            product = product.mul_truncated(&binomial_factor_expansion(k, a, degree));
        }
        acc.accumulate_scaled(&product, &class.signed_count);
    }
    acc
}

/// Stanley's expansion of the ordinary chromatic symmetric function:
/// `X_(G,ω) = Σ_{S ⊆ E} (−1)^(|S|) p_(λ(S))` where `λ(S)` collects the
/// component weights of `(V, S)`. Finite and homogeneous of degree `ω(G)`.
pub fn classical_p_expansion(graph: &WeightedGraph) -> SymExpansion {
    let edges = graph.edges();
    assert!(edges.len() < 64, "edge-subset enumeration needs fewer than 64 edges");
    let n = graph.vertex_count();
    let mut expansion = SymExpansion::new(Basis::ClassicalP, graph.total_weight());
    for mask in 0u64..(1 << edges.len()) {
        let mut parent: Vec<usize> = (0..n).collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ru, rv) = (find_root(&mut parent, u), find_root(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                }
            }
        }
        let mut component_weight = vec![0usize; n];
        for v in 0..n {
            let root = find_root(&mut parent, v);
            component_weight[root] += graph.weight_of(v);
        }
        let parts: Vec<usize> = component_weight.into_iter().filter(|&w| w > 0).collect();
        let sign = if mask.count_ones() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        expansion.add_term(Partition::new(parts), sign);
    }
    expansion
}

fn find_root(parent: &mut Vec<usize>, v: usize) -> usize {
    if parent[v] != v {
        let root = find_root(parent, parent[v]);
        parent[v] = root;
    }
    parent[v]
}

/// Outcome of comparing the lowest-degree slice of the p̄-expansion against
/// the classical chromatic p-expansion.
#[derive(Clone, Debug)]
pub struct LeadingTermsReport {
    pub pass: bool,
    pub mismatches: Vec<String>,
}

/// Checks that the `|λ| = ω(G)` slice of the p̄-expansion equals the
/// classical p-expansion exactly and that every coefficient below that
/// degree vanishes.
pub fn leading_terms_check(graph: &WeightedGraph) -> LeadingTermsReport {
    let target = graph.total_weight();
    let kromatic = kromatic_pbar_expansion(graph, target);
    let classical = classical_p_expansion(graph);
    let mut mismatches = Vec::new();
    for lambda in partitions_up_to(target) {
        let k = kromatic.coefficient(&lambda);
        if lambda.size() < target {
            if !k.is_zero() {
                mismatches.push(format!(
                    "coefficient at {} is {} but |λ| < ω(G) = {} forces 0",
                    lambda, k, target
                ));
            }
            continue;
        }
        let c = classical.coefficient(&lambda);
        if k != c {
            mismatches.push(format!(
                "leading coefficient at {}: p̄ route gives {}, edge-subset route gives {}",
                lambda, k, c
            ));
        }
    }
    LeadingTermsReport { pass: mismatches.is_empty(), mismatches }
}

/// Sign data for an unweighted graph: the coefficient of `p̄_λ` should have
/// sign `(−1)^(|λ|−ℓ(λ))` and `a_W(k)` should have sign `(−1)^(k+1)`, in
/// the weak sense that no tested value has the opposite sign. The report
/// also records which tested coefficients were exactly zero.
#[derive(Clone, Debug)]
pub struct SignReport {
    pub degree: usize,
    pub coefficient_violations: Vec<(Partition, BigInt)>,
    pub exponent_violations: Vec<(VertexSet, usize, BigInt)>,
    pub zero_coefficients: Vec<Partition>,
    /// Zero coefficients with `|λ| ≥ |V|`, where the expansion genuinely
    /// has support.
    pub zero_at_or_above_vertex_count: Vec<Partition>,
}

impl SignReport {
    pub fn pass(&self) -> bool {
        self.coefficient_violations.is_empty() && self.exponent_violations.is_empty()
    }
}

/// Runs the sign checks for an unweighted graph; panics if any weight
/// differs from 1 (the sign pattern genuinely fails for weighted graphs).
pub fn sign_report(graph: &WeightedGraph, degree: usize) -> SignReport {
    assert!(graph.is_unweighted(), "sign pattern applies to unweighted graphs only");
    let n = graph.vertex_count();
    let expansion = kromatic_pbar_expansion(graph, degree);
    let mut report = SignReport {
        degree,
        coefficient_violations: Vec::new(),
        exponent_violations: Vec::new(),
        zero_coefficients: Vec::new(),
        zero_at_or_above_vertex_count: Vec::new(),
    };
    for lambda in partitions_up_to(degree) {
        let coeff = expansion.coefficient(&lambda);
        if coeff.is_zero() {
            if lambda.size() >= n {
                report.zero_at_or_above_vertex_count.push(lambda.clone());
            }
            report.zero_coefficients.push(lambda);
            continue;
        }
        let expect_negative = (lambda.size() - lambda.len()) % 2 == 1;
        if coeff.is_negative() != expect_negative {
            report.coefficient_violations.push((lambda, coeff));
        }
    }
    let table = SubgraphExponentTable::build(graph, degree);
    for class in table.classes() {
        for k in 1..=degree {
            let a = class.exponents.get(k);
            if a.is_zero() {
                continue;
            }
            let expect_negative = k % 2 == 0;
            if a.is_negative() != expect_negative {
                report.exponent_violations.push((class.representative, k, a.clone()));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn ipoly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(coeffs)
    }

    fn entries(v: &ExponentVector) -> Vec<i64> {
        v.entries().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn log_recurrence_on_one_plus_two_t() {
        let a = exponents_by_log(&ipoly(&[1, 2]), 5);
        assert_eq!(entries(&a), vec![2, -1, 2, -4, 6]);
    }

    #[test]
    fn log_recurrence_on_one_plus_t() {
        let a = exponents_by_log(&ipoly(&[1, 1]), 5);
        assert_eq!(entries(&a), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn log_recurrence_on_k21_polynomial() {
        let a = exponents_by_log(&ipoly(&[1, 1, 1]), 12);
        let expected: Vec<i64> = (1..=12)
            .map(|k| match k {
                1 | 2 | 4 | 8 => 1,
                3 | 6 | 12 => -1,
                _ => 0,
            })
            .collect();
        assert_eq!(entries(&a), expected);
    }

    #[test]
    fn integer_recurrence_matches_worked_chain() {
        let a = exponents_by_integer_recurrence(&ipoly(&[1, 2]), 5);
        assert_eq!(entries(&a), vec![2, -1, 2, -4, 6]);
    }

    #[test]
    fn integer_recurrence_on_constant_one() {
        let a = exponents_by_integer_recurrence(&IntPolynomial::one(), 7);
        assert!(a.entries().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn recurrences_agree_on_k21_polynomial() {
        let poly = ipoly(&[1, 1, 1]);
        assert_eq!(exponents_by_log(&poly, 12), exponents_by_integer_recurrence(&poly, 12));
    }

    #[test]
    #[should_panic(expected = "constant term 1")]
    fn recurrences_reject_nonunit_constant() {
        exponents_by_integer_recurrence(&ipoly(&[2, 1]), 3);
    }

    #[test]
    fn subgraph_table_k21() {
        let table = SubgraphExponentTable::build(&k21(), 6);
        let mut polys: Vec<Vec<i64>> = VertexSet::all_subsets(2)
            .map(|w| {
                table
                    .polynomial(w)
                    .coeffs()
                    .iter()
                    .map(|c| i64::try_from(c).unwrap())
                    .collect()
            })
            .collect();
        polys.sort();
        assert_eq!(polys, vec![vec![1], vec![1, 0, 1], vec![1, 1], vec![1, 1, 1]]);
        // reconstruction through the table
        for w in VertexSet::all_subsets(2) {
            let series = product_of_binomial_powers(table.get(w).entries(), 6);
            assert_eq!(series, TruncatedSeries::from_int_polynomial(table.polynomial(w), 6));
        }
    }

    #[test]
    fn subgraph_table_edge_shares_singleton_class() {
        let table = SubgraphExponentTable::build(&edge(), 4);
        // classes: I = 1 (∅), I = 1 + t (both singletons), I = 1 + 2t (V)
        assert_eq!(table.classes().len(), 3);
        let singleton_class = table
            .classes()
            .iter()
            .find(|c| c.polynomial.coeffs() == ipoly(&[1, 1]).coeffs())
            .unwrap();
        assert_eq!(singleton_class.member_count, 2);
        assert_eq!(singleton_class.signed_count, int(-2));
    }

    #[test]
    fn subgraph_table_empty_graph() {
        let table = SubgraphExponentTable::build(&WeightedGraph::empty(), 5);
        assert_eq!(table.classes().len(), 1);
        assert!(table.get(VertexSet::EMPTY).entries().iter().all(|x| x.is_zero()));
        assert_eq!(table.classes()[0].signed_count, int(1));
    }

    #[test]
    fn k21_expansion_to_degree_four() {
        let expansion = kromatic_pbar_expansion(&k21(), 4);
        let expected = SymExpansion::from_terms(
            Basis::Pbar,
            4,
            [
                (p(&[3]), int(-1)),
                (p(&[2, 1]), int(1)),
                (p(&[4]), int(1)),
                (p(&[3, 1]), int(-1)),
            ],
        );
        assert_eq!(expansion, expected);
    }

    #[test]
    fn edge_expansion_degree_six_slice() {
        let expansion = kromatic_pbar_expansion(&edge(), 6);
        let slice: Vec<(String, i64)> = expansion
            .slice(6)
            .into_iter()
            .map(|(q, c)| (q.to_string(), i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(
            slice,
            vec![
                ("2211".to_string(), 1),
                ("222".to_string(), -1),
                ("321".to_string(), -4),
                ("33".to_string(), 1),
                ("411".to_string(), -4),
                ("42".to_string(), 4),
                ("51".to_string(), 12),
                ("6".to_string(), -9),
            ]
        );
    }

    #[test]
    fn single_vertex_expansion_is_one_term() {
        for weight in [1, 2, 5] {
            let g = WeightedGraph::new(vec![weight], &[]);
            let expansion = kromatic_pbar_expansion(&g, weight + 3);
            assert_eq!(expansion.len(), 1, "weight {}", weight);
            assert_eq!(expansion.coefficient(&p(&[weight])), int(1));
        }
    }

    #[test]
    fn empty_graph_expansion_is_constant_one() {
        let expansion = kromatic_pbar_expansion(&WeightedGraph::empty(), 4);
        assert_eq!(expansion.len(), 1);
        assert_eq!(expansion.coefficient(&Partition::empty()), int(1));
    }

    #[test]
    fn empty_partition_coefficient_vanishes_for_nonempty_graphs() {
        for g in [k21(), edge(), WeightedGraph::unweighted(3, &[(0, 1)])] {
            let expansion = kromatic_pbar_expansion(&g, 3);
            assert_eq!(expansion.coefficient(&Partition::empty()), int(0));
        }
    }

    #[test]
    fn pbar_coefficient_examples() {
        assert_eq!(pbar_coefficient(&k21(), &p(&[3, 3, 2, 1])), int(1));
        assert_eq!(pbar_coefficient(&k21(), &p(&[2, 2])), int(0));
        assert_eq!(pbar_coefficient(&edge(), &p(&[4, 1])), int(-8));
    }

    #[test]
    fn pbar_coefficient_agrees_with_full_expansion() {
        let expansion = kromatic_pbar_expansion(&k21(), 6);
        for lambda in partitions_up_to(6) {
            assert_eq!(
                pbar_coefficient(&k21(), &lambda),
                expansion.coefficient(&lambda),
                "λ = {}",
                lambda
            );
        }
    }

    #[test]
    fn k21_rule_examples() {
        assert_eq!(k21_coefficient_rule(&p(&[3, 2, 1])), int(-1));
        assert_eq!(k21_coefficient_rule(&p(&[3, 3])), int(1));
        assert_eq!(k21_coefficient_rule(&p(&[2])), int(0));
        assert_eq!(k21_coefficient_rule(&p(&[5])), int(0));
        assert_eq!(k21_coefficient_rule(&p(&[1, 1, 1])), int(0));
        assert_eq!(k21_coefficient_rule(&p(&[4, 3])), int(-1));
    }

    #[test]
    fn y_function_examples() {
        let empty = y_function_expansion(&WeightedGraph::empty(), 3);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty.coefficient(&Partition::empty()), int(1));

        let vertex = y_function_expansion(&WeightedGraph::unweighted(1, &[]), 3);
        assert_eq!(vertex.len(), 2);
        assert_eq!(vertex.coefficient(&Partition::empty()), int(1));
        assert_eq!(vertex.coefficient(&p(&[1])), int(1));
    }

    #[test]
    fn y_function_recombines_to_expansion() {
        // Σ_W (−1)^(|V∖W|) Y_(G|_W) = X̄_G term by term
        let g = edge();
        let degree = 5;
        let n = g.vertex_count();
        let mut acc = SymExpansion::new(Basis::Pbar, degree);
        for w in VertexSet::all_subsets(n) {
            let sub = g.induced_subgraph(w);
            let sign = if (n - w.len()).is_multiple_of(2) { int(1) } else { int(-1) };
            acc.accumulate_scaled(&y_function_expansion(&sub, degree), &sign);
        }
        assert_eq!(acc, kromatic_pbar_expansion(&g, degree));
    }

    #[test]
    fn product_route_matches_coefficient_route() {
        for (g, degree) in [
            (k21(), 6),
            (edge(), 6),
            (WeightedGraph::unweighted(3, &[(0, 1), (1, 2), (0, 2)]), 5),
            (WeightedGraph::new(vec![2, 1, 1], &[(0, 1)]), 5),
        ] {
            assert_eq!(
                kromatic_pbar_expansion_by_products(&g, degree),
                kromatic_pbar_expansion(&g, degree)
            );
        }
    }

    #[test]
    fn parallel_expansion_is_identical() {
        let serial = kromatic_pbar_expansion_with(&k21(), 8, false);
        let parallel = kromatic_pbar_expansion_with(&k21(), 8, true);
        assert_eq!(serial, parallel);
        assert_eq!(serial.to_json_string(), parallel.to_json_string());
    }

    #[test]
    fn classical_expansions() {
        let e = classical_p_expansion(&edge());
        assert_eq!(
            e,
            SymExpansion::from_terms(Basis::ClassicalP, 2, [
                (p(&[2]), int(-1)),
                (p(&[1, 1]), int(1)),
            ])
        );
        let k = classical_p_expansion(&k21());
        assert_eq!(
            k,
            SymExpansion::from_terms(Basis::ClassicalP, 3, [
                (p(&[3]), int(-1)),
                (p(&[2, 1]), int(1)),
            ])
        );
        let triangle =
            classical_p_expansion(&WeightedGraph::unweighted(3, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(
            triangle,
            SymExpansion::from_terms(Basis::ClassicalP, 3, [
                (p(&[1, 1, 1]), int(1)),
                (p(&[2, 1]), int(-3)),
                (p(&[3]), int(2)),
            ])
        );
    }

    #[test]
    fn leading_terms_check_examples() {
        assert!(leading_terms_check(&k21()).pass);
        assert!(leading_terms_check(&edge()).pass);
        let paw = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!(leading_terms_check(&paw).pass);
        let weighted = WeightedGraph::new(vec![2, 1, 1, 2], &[(0, 1), (1, 2), (2, 3)]);
        assert!(leading_terms_check(&weighted).pass);
    }

    #[test]
    fn sign_report_on_edge() {
        let report = sign_report(&edge(), 6);
        assert!(report.pass(), "violations: {:?}", report);
        // the full-subset exponents alternate in sign
        let table = SubgraphExponentTable::build(&edge(), 6);
        assert_eq!(entries(table.get(VertexSet::full(2))), vec![2, -1, 2, -4, 6, -9]);
    }

    #[test]
    fn sign_report_on_edgeless_pair() {
        let g = WeightedGraph::unweighted(2, &[]);
        let report = sign_report(&g, 4);
        assert!(report.pass());
        let expansion = kromatic_pbar_expansion(&g, 4);
        assert_eq!(expansion.len(), 1);
        assert_eq!(expansion.coefficient(&p(&[1, 1])), int(1));
        // zeros at or above |V| exist (the expansion is a single term)
        assert!(!report.zero_at_or_above_vertex_count.is_empty());
    }

    #[test]
    #[should_panic(expected = "unweighted")]
    fn sign_report_rejects_weighted_graphs() {
        sign_report(&k21(), 4);
    }

    #[test]
    fn disjoint_union_multiplies_expansions() {
        let g = WeightedGraph::new(vec![2, 1], &[(0, 1)]);
        let h = WeightedGraph::unweighted(2, &[(0, 1)]);
        let degree = 6;
        let product = kromatic_pbar_expansion(&g, degree)
            .mul_truncated(&kromatic_pbar_expansion(&h, degree));
        assert_eq!(kromatic_pbar_expansion(&g.disjoint_union(&h), degree), product);
    }

    #[test]
    fn reconstruction_invariant_on_assorted_graphs() {
        let graphs = [
            WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3)]),
            WeightedGraph::new(vec![1, 2, 3], &[(0, 1), (1, 2)]),
            WeightedGraph::new(vec![2, 2], &[]),
        ];
        for g in graphs {
            let degree = 8;
            let table = SubgraphExponentTable::build(&g, degree);
            for class in table.classes() {
                let rebuilt = product_of_binomial_powers(class.exponents.entries(), degree);
                assert_eq!(
                    rebuilt,
                    TruncatedSeries::from_int_polynomial(&class.polynomial, degree)
                );
            }
        }
    }

    #[test]
    fn expansion_json_round_trip() {
        let expansion = kromatic_pbar_expansion(&k21(), 6);
        let text = expansion.to_json_string();
        let back = SymExpansion::from_json_str(&text).unwrap();
        assert_eq!(back, expansion);
        assert_eq!(back.to_json_string(), text);
        assert!(text.starts_with(
            "{\"basis\":\"pbar\",\"degree\":6,\"terms\":[{\"partition\":[2,1],\"coeff\":\"1\"}"
        ));
    }
}
