use std::collections::BTreeSet;

use super::cayley::enumerate_cayley;
use super::greg::canonicalize;
use super::{CayleyTree, GregTree};
use crate::error::{Error, Result};

/// `X|_n`: forget the labels above `n`, then repeatedly smooth unlabeled
/// vertices of degree 2 and prune unlabeled leaves until every unlabeled
/// vertex has degree at least 3.
///
/// For a rooted `X` the root is kept: an unlabeled root of degree 2 is not
/// smoothed, and pruning an unlabeled root of degree 1 hands the root to its
/// neighbour.
pub fn restrict(x: &CayleyTree, n: usize) -> Result<GregTree> {
    let m = x.n;
    if n < 1 || n >= m {
        return Err(Error::BadRestriction { n, m });
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m + 1];
    for &(a, b) in &x.edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut alive = vec![true; m + 1];
    let mut root = x.root;

    loop {
        let mut changed = false;
        for v in n + 1..=m {
            if !alive[v] {
                continue;
            }
            match adj[v].len() {
                1 => {
                    let w = *adj[v].iter().next().expect("degree 1");
                    adj[w].remove(&v);
                    adj[v].clear();
                    alive[v] = false;
                    if root == Some(v) {
                        root = Some(w);
                    }
                    changed = true;
                }
                2 if root != Some(v) => {
                    let mut it = adj[v].iter();
                    let (a, b) = (*it.next().expect("degree 2"), *it.next().expect("degree 2"));
                    adj[a].remove(&v);
                    adj[b].remove(&v);
                    adj[a].insert(b);
                    adj[b].insert(a);
                    adj[v].clear();
                    alive[v] = false;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }

    // relabel surviving unlabeled vertices to n+1.. and canonicalize
    let mut id = vec![0usize; m + 1];
    (1..=n).for_each(|v| id[v] = v);
    let mut u = 0;
    for v in n + 1..=m {
        if alive[v] {
            u += 1;
            id[v] = n + u;
        }
    }
    let mut edges = Vec::new();
    for a in 1..=m {
        for &b in &adj[a] {
            if a < b {
                let (p, q) = (id[a], id[b]);
                edges.push(if p < q { (p, q) } else { (q, p) });
            }
        }
    }
    let roots: Vec<usize> = root.map(|r| id[r]).into_iter().collect();
    Ok(canonicalize(n, u, &edges, &roots))
}

/// For `m = n..=m_max`, the number of Cayley trees `X` on `m` vertices
/// (rooted iff `t` is) with `X|_n = t`. `t` must be in canonical form.
pub fn propgen_census(t: &GregTree, m_max: usize) -> Vec<u64> {
    let rooted = !t.roots.is_empty();
    (t.n..=m_max)
        .map(|m| {
            if m == t.n {
                let same = t.u == 0 && enumerate_cayley(m, rooted).any(|x| x.as_greg() == *t);
                return same as u64;
            }
            enumerate_cayley(m, rooted)
                .filter(|x| restrict(x, t.n).is_ok_and(|r| r == *t))
                .count() as u64
        })
        .collect()
}
