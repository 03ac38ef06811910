//! Shared helpers for integration tests: exhaustive enumeration of small
//! graphs up to isomorphism and weight-map generation.

use std::collections::HashMap;

use kromatic::graph::WeightedGraph;

pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut items, 0, &mut out);
    out
}

/// Edge sets of all graphs on `n` labeled vertices, one representative per
/// isomorphism class, found by brute force over vertex permutations.
pub fn unlabeled_edge_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs = edge_pairs(n);
    let perms = permutations(n);
    let index_of: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut representatives = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canonical = perms
            .iter()
            .map(|perm| {
                let mut relabeled = 0u32;
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        let (a, b) = if perm[u] < perm[v] {
                            (perm[u], perm[v])
                        } else {
                            (perm[v], perm[u])
                        };
                        relabeled |= 1 << index_of[&(a, b)];
                    }
                }
                relabeled
            })
            .min()
            .expect("at least the identity permutation");
        if canonical == mask {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            representatives.push(edges);
        }
    }
    representatives
}

/// Every function from `n` vertices into the given weight choices.
pub fn weight_maps(n: usize, choices: &[usize]) -> Vec<Vec<usize>> {
    let mut maps = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for partial in &maps {
            for &w in choices {
                let mut extended = partial.clone();
                extended.push(w);
                next.push(extended);
            }
        }
        maps = next;
    }
    maps
}

/// All graphs on `0..=max_n` vertices up to isomorphism, unit weights.
#[allow(dead_code)] // not every test target uses every helper
pub fn unweighted_graphs_up_to(max_n: usize) -> Vec<WeightedGraph> {
    (0..=max_n)
        .flat_map(|n| {
            unlabeled_edge_sets(n)
                .into_iter()
                .map(move |edges| WeightedGraph::unweighted(n, &edges))
        })
        .collect()
}
