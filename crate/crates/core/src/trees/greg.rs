use std::collections::HashSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::prufer::{decode, for_each_constrained};
use super::{adjacency, Edge, GregTree, Variant};
use crate::polyseq::Poly;

/// Largest possible number of unlabeled vertices, from the degree sum
/// `2(n + u - 1)` against the degree lower bounds.
pub fn max_unlabeled(n: usize, variant: Variant) -> usize {
    match variant {
        Variant::Unrooted => n.saturating_sub(2),
        Variant::Rooted => n.saturating_sub(1),
        Variant::RelaxedRooted => n,
        Variant::Birooted => n + 2,
    }
}

/// Greg trees of size `n` with exactly `u` unlabeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GregCensus {
    pub u: usize,
    /// Labeled trees (with roots) on `n + u` vertices passing the degree filter,
    /// before identifying relabelings of the unlabeled vertices.
    pub labeled_count: u64,
    /// Distinct canonical forms, in order of first appearance.
    pub trees: Vec<GregTree>,
}

/// Root tuples to try, in lexicographic order. Bi-rooted trees may use the
/// same vertex for both roots.
fn root_choices(variant: Variant, k: usize) -> Vec<Vec<usize>> {
    match variant {
        Variant::Unrooted => vec![vec![]],
        Variant::Rooted | Variant::RelaxedRooted => (1..=k).map(|r| vec![r]).collect(),
        Variant::Birooted => (1..=k)
            .flat_map(|a| (1..=k).map(move |b| vec![a, b]))
            .collect(),
    }
}

/// Missing Prüfer occurrences the roots can excuse, summed over roots.
fn root_slack(variant: Variant) -> usize {
    match variant {
        Variant::Unrooted => 0,
        Variant::Rooted => 1,
        Variant::RelaxedRooted => 2,
        Variant::Birooted => 4,
    }
}

pub fn enumerate_greg_with_u(n: usize, variant: Variant, u: usize) -> GregCensus {
    let k = n + u;
    let mut census = GregCensus {
        u,
        labeled_count: 0,
        trees: Vec::new(),
    };
    if n == 0 {
        return census;
    }
    // every unlabeled non-root vertex has degree >= 3, i.e. appears twice
    let mut need = vec![0usize; k + 1];
    for v in need.iter_mut().skip(n + 1) {
        *v = 2;
    }
    let choices = root_choices(variant, k);
    let mut seen = HashSet::new();
    let mut degree = vec![0usize; k + 1];
    for_each_constrained(k, &need, root_slack(variant), |seq| {
        degree
            .iter_mut()
            .for_each(|d| *d = if k > 1 { 1 } else { 0 });
        for &v in seq {
            degree[v] += 1;
        }
        let mut edges: Option<Vec<Edge>> = None;
        for roots in &choices {
            let ok =
                (n + 1..=k).all(|v| degree[v] >= variant.min_unlabeled_degree(roots.contains(&v)));
            if !ok {
                continue;
            }
            census.labeled_count += 1;
            let e = edges.get_or_insert_with(|| decode(seq, k));
            let t = canonicalize(n, u, e, roots);
            if seen.insert(t.clone()) {
                census.trees.push(t);
            }
        }
    });
    census
}

/// Every Greg tree of size `n`, by increasing `u`.
pub fn enumerate_greg(n: usize, variant: Variant) -> Vec<GregTree> {
    (0..=max_unlabeled(n, variant))
        .into_par_iter()
        .map(|u| enumerate_greg_with_u(n, variant, u).trees)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// `sum_T x^{unl(T)}` over the Greg trees of the variant.
pub fn unl_polynomial(n: usize, variant: Variant) -> Poly {
    let counts: Vec<usize> = (0..=max_unlabeled(n, variant))
        .into_par_iter()
        .map(|u| enumerate_greg_with_u(n, variant, u).trees.len())
        .collect();
    Poly::new(counts.into_iter().map(BigInt::from).collect())
}

/// The relabeling of the unlabeled ids `n+1..=n+u` with the lexicographically
/// smallest sorted edge list (ties broken by the mapped roots).
///
/// Rows of the sorted edge list for labeled vertices have fixed lengths, so
/// the unlabeled neighbours of vertex 1 must take the smallest fresh ids,
/// then those of vertex 2, and so on. Only orderings inside these groups
/// (and of the unlabeled vertices with no labeled neighbour) are searched.
pub fn canonicalize(n: usize, u: usize, edges: &[Edge], roots: &[usize]) -> GregTree {
    let k = n + u;
    let adj = adjacency(k, edges);
    let mut grouped = vec![false; k + 1];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for nbrs in adj.iter().take(n + 1).skip(1) {
        let mut g: Vec<usize> = nbrs
            .iter()
            .copied()
            .filter(|&w| w > n && !grouped[w])
            .collect();
        g.sort_unstable();
        g.iter().for_each(|&w| grouped[w] = true);
        if !g.is_empty() {
            groups.push(g);
        }
    }
    let rest: Vec<usize> = (n + 1..=k).filter(|&w| !grouped[w]).collect();
    if !rest.is_empty() {
        groups.push(rest);
    }

    let mut best: Option<(Vec<Edge>, Vec<usize>)> = None;
    let mut order = Vec::with_capacity(u);
    search(&groups, 0, &mut order, &mut |order| {
        let mut map: Vec<usize> = (0..=k).collect();
        for (i, &old) in order.iter().enumerate() {
            map[old] = n + 1 + i;
        }
        let mut e: Vec<Edge> = edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (map[a], map[b]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        e.sort_unstable();
        let r: Vec<usize> = roots.iter().map(|&v| map[v]).collect();
        let cand = (e, r);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    });
    let (edges, roots) = best.expect("at least one ordering");
    GregTree { n, u, roots, edges }
}

/// Calls `visit` with every concatenation of permutations of the groups.
fn search(
    groups: &[Vec<usize>],
    gi: usize,
    order: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if gi == groups.len() {
        visit(order);
        return;
    }
    let mut g = groups[gi].clone();
    permute(&mut g, 0, &mut |perm| {
        let base = order.len();
        order.extend_from_slice(perm);
        search(groups, gi + 1, order, visit);
        order.truncate(base);
    });
}

fn permute(items: &mut [usize], i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == items.len() {
        visit(items);
        return;
    }
    for j in i..items.len() {
        items.swap(i, j);
        permute(items, i + 1, visit);
        items.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn unl_multiset(trees: &[GregTree]) -> Vec<(usize, usize)> {
        trees
            .iter()
            .map(|t| t.u)
            .counts()
            .into_iter()
            .sorted()
            .collect()
    }

    #[test]
    fn size_three_unrooted() {
        let trees = enumerate_greg(3, Variant::Unrooted);
        assert_eq!(trees.len(), 4);
        assert_eq!(unl_multiset(&trees), vec![(0, 3), (1, 1)]);
        let star = trees.iter().find(|t| t.u == 1).unwrap();
        assert_eq!(star.edges, vec![(1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn size_two_rooted() {
        let trees = enumerate_greg(2, Variant::Rooted);
        assert_eq!(trees.len(), 3);
        assert_eq!(unl_multiset(&trees), vec![(0, 2), (1, 1)]);
    }

    #[test]
    fn size_one() {
        let trees = enumerate_greg(1, Variant::Unrooted);
        assert_eq!(trees.len(), 1);
        assert!(trees[0].edges.is_empty());
        assert_eq!(
            unl_polynomial(1, Variant::RelaxedRooted),
            Poly::from_i64s(&[1, 1])
        );
        assert_eq!(
            unl_polynomial(1, Variant::Birooted),
            Poly::from_i64s(&[1, 3, 3, 1])
        );
    }

    #[test]
    fn census_polynomials() {
        assert_eq!(
            unl_polynomial(3, Variant::Unrooted),
            Poly::from_i64s(&[3, 1])
        );
        assert_eq!(unl_polynomial(2, Variant::Rooted), Poly::from_i64s(&[2, 1]));
        assert_eq!(
            unl_polynomial(4, Variant::Unrooted),
            Poly::from_i64s(&[16, 13, 3])
        );
    }

    #[test]
    fn canonical_form_ignores_unlabeled_ids() {
        // 1 - a - b - 2 with a, b also carrying labeled leaves 3 and 4
        let e1 = [(1, 5), (3, 5), (5, 6), (2, 6), (4, 6)];
        let e2 = [(1, 6), (3, 6), (5, 6), (2, 5), (4, 5)];
        assert_eq!(canonicalize(4, 2, &e1, &[]), canonicalize(4, 2, &e2, &[]));
        assert_eq!(
            canonicalize(4, 2, &e1, &[]).edges,
            vec![(1, 5), (2, 6), (3, 5), (4, 6), (5, 6)]
        );
    }

    #[test]
    fn nothing_beyond_the_bound() {
        for v in Variant::ALL {
            for n in 1..=4 {
                let u = max_unlabeled(n, v) + 1;
                assert!(enumerate_greg_with_u(n, v, u).trees.is_empty(), "{v} n={n}");
            }
        }
    }

    #[test]
    fn every_enumerated_tree_is_valid_and_canonical() {
        for v in Variant::ALL {
            for t in enumerate_greg(3, v) {
                t.validate(v).unwrap();
                assert_eq!(canonicalize(t.n, t.u, &t.edges, &t.roots), t);
            }
        }
    }
}
