use num_bigint::BigInt;
use rayon::prelude::*;

use super::prufer::{decode, Sequences};
use super::CayleyTree;
use crate::polyseq::Poly;

/// Stream of every labeled tree on `1..=n`, in lexicographic Prüfer order and,
/// for rooted trees, then by root id.
pub struct CayleyTrees {
    n: usize,
    rooted: bool,
    seqs: Sequences,
    edges: Option<Vec<(usize, usize)>>,
    next_root: usize,
}

impl Iterator for CayleyTrees {
    type Item = CayleyTree;

    fn next(&mut self) -> Option<CayleyTree> {
        if self.n == 0 {
            return None;
        }
        if !self.rooted {
            let seq = self.seqs.next()?;
            return Some(CayleyTree {
                n: self.n,
                root: None,
                edges: decode(&seq, self.n),
            });
        }
        if self.edges.is_none() || self.next_root > self.n {
            let seq = self.seqs.next()?;
            self.edges = Some(decode(&seq, self.n));
            self.next_root = 1;
        }
        let root = self.next_root;
        self.next_root += 1;
        Some(CayleyTree {
            n: self.n,
            root: Some(root),
            edges: self.edges.clone().expect("set above"),
        })
    }
}

/// `n^{n-2}` unrooted or `n^{n-1}` rooted trees.
pub fn enumerate_cayley(n: usize, rooted: bool) -> CayleyTrees {
    CayleyTrees {
        n,
        rooted,
        seqs: Sequences::new(n),
        edges: None,
        next_root: 1,
    }
}

/// `sum_T x^{imp(T)}` over rooted trees on `1..=n`, or over unrooted trees
/// read as rooted at vertex 1.
pub fn imp_polynomial(n: usize, rooted: bool) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    // partition the root choices across workers; counts add up order-independently
    let roots: Vec<Option<usize>> = if rooted {
        (1..=n).map(Some).collect()
    } else {
        vec![None]
    };
    let counts = roots
        .par_iter()
        .map(|&root| {
            let mut c = vec![0u64; n];
            for seq in Sequences::new(n) {
                let t = CayleyTree {
                    n,
                    root,
                    edges: decode(&seq, n),
                };
                c[t.imp()] += 1;
            }
            c
        })
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Poly::new(counts.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_cayley(3, false).count(), 3);
        assert_eq!(enumerate_cayley(2, true).count(), 2);
        assert_eq!(enumerate_cayley(4, false).count(), 16);
        assert_eq!(enumerate_cayley(4, true).count(), 64);
        assert_eq!(enumerate_cayley(1, false).count(), 1);
        assert_eq!(enumerate_cayley(1, true).count(), 1);
    }

    #[test]
    fn imp_census_small() {
        assert_eq!(imp_polynomial(2, true), Poly::from_i64s(&[1, 1]));
        assert_eq!(imp_polynomial(3, false), Poly::from_i64s(&[2, 1]));
        assert_eq!(imp_polynomial(4, true), Poly::from_i64s(&[6, 18, 25, 15]));
    }
}
