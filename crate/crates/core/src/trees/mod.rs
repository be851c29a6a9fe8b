//! Cayley and Greg trees.
//!
//! Labeled vertices carry ids `1..=n`; the unlabeled vertices of a Greg tree
//! carry placeholder ids `n+1..=n+u`. Edges are stored as sorted `(min, max)`
//! pairs so that equality of canonical forms is plain `==`.

mod cayley;
mod greg;
pub mod prufer;
mod restrict;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cayley::{enumerate_cayley, imp_polynomial, CayleyTrees};
pub use greg::{
    canonicalize, enumerate_greg, enumerate_greg_with_u, max_unlabeled, unl_polynomial, GregCensus,
};
pub use restrict::{propgen_census, restrict};

/// Largest `n + u` accepted for full enumeration.
pub const MAX_VERTICES: usize = 11;

pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CayleyTree {
    pub n: usize,
    pub root: Option<usize>,
    pub edges: Vec<Edge>,
}

impl CayleyTree {
    pub fn new(n: usize, mut edges: Vec<Edge>, root: Option<usize>) -> Result<Self> {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        check_tree(n, &edges)?;
        if let Some(r) = root {
            if r == 0 || r > n {
                return Err(Error::InvalidTree(format!("root {r} outside 1..={n}")));
            }
        }
        Ok(CayleyTree { n, root, edges })
    }

    pub fn is_rooted(&self) -> bool {
        self.root.is_some()
    }

    /// Number of improper edges. An edge from parent `p` to child `c` is
    /// improper when `p` is larger than the smallest label in the subtree of
    /// `c`. Unrooted trees are read as rooted at vertex 1.
    pub fn imp(&self) -> usize {
        let root = self.root.unwrap_or(1);
        let adj = adjacency(self.n, &self.edges);
        let (order, parent) = bfs(&adj, root);
        let mut sub_min: Vec<usize> = (0..=self.n).collect();
        let mut count = 0;
        for &v in order.iter().rev() {
            let p = parent[v];
            if p == 0 {
                continue;
            }
            if p > sub_min[v] {
                count += 1;
            }
            sub_min[p] = sub_min[p].min(sub_min[v]);
        }
        count
    }

    pub fn as_greg(&self) -> GregTree {
        GregTree {
            n: self.n,
            u: 0,
            roots: self.root.into_iter().collect(),
            edges: self.edges.clone(),
        }
    }
}

/// The four flavours of Greg tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Unlabeled vertices have degree at least 3.
    Unrooted,
    /// One root; an unlabeled root may have degree 2.
    Rooted,
    /// One root; an unlabeled root may have degree 1 or 2.
    RelaxedRooted,
    /// Two ordered roots, possibly the same vertex; unlabeled roots may have degree 1 or 2.
    Birooted,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Unrooted,
        Variant::Rooted,
        Variant::RelaxedRooted,
        Variant::Birooted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Unrooted => "unrooted",
            Variant::Rooted => "rooted",
            Variant::RelaxedRooted => "relaxed_rooted",
            Variant::Birooted => "birooted",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "unrooted" => Ok(Variant::Unrooted),
            "rooted" => Ok(Variant::Rooted),
            "relaxed_rooted" | "relaxed" => Ok(Variant::RelaxedRooted),
            "birooted" | "bi_rooted" => Ok(Variant::Birooted),
            _ => Err(Error::Unknown {
                kind: "variant",
                name: s.to_string(),
            }),
        }
    }

    pub fn root_count(self) -> usize {
        match self {
            Variant::Unrooted => 0,
            Variant::Rooted | Variant::RelaxedRooted => 1,
            Variant::Birooted => 2,
        }
    }

    /// Smallest degree allowed for an unlabeled vertex.
    pub fn min_unlabeled_degree(self, is_root: bool) -> usize {
        match (self, is_root) {
            (_, false) | (Variant::Unrooted, true) => 3,
            (Variant::Rooted, true) => 2,
            (Variant::RelaxedRooted | Variant::Birooted, true) => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A Greg tree in canonical form when produced by this module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GregTree {
    pub n: usize,
    pub u: usize,
    pub roots: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl GregTree {
    pub fn vertex_count(&self) -> usize {
        self.n + self.u
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count() + 1];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Checks the tree shape and the degree rules of `variant`.
    pub fn validate(&self, variant: Variant) -> Result<()> {
        check_tree(self.vertex_count(), &self.edges)?;
        if self.roots.len() != variant.root_count() {
            return Err(Error::InvalidTree(format!(
                "{} roots for variant {variant}",
                self.roots.len()
            )));
        }
        if let Some(&r) = self
            .roots
            .iter()
            .find(|&&r| r == 0 || r > self.vertex_count())
        {
            return Err(Error::InvalidTree(format!("root {r} is not a vertex")));
        }
        let deg = self.degrees();
        for v in self.n + 1..=self.vertex_count() {
            let min = variant.min_unlabeled_degree(self.roots.contains(&v));
            if deg[v] < min {
                return Err(Error::InvalidTree(format!(
                    "unlabeled vertex {v} has degree {} < {min}",
                    deg[v]
                )));
            }
        }
        Ok(())
    }

    /// Edge-list text: a header `n u roots...` (`-` when unrooted), then one `a b` per line.
    pub fn to_text(&self) -> String {
        let roots = if self.roots.is_empty() {
            "-".to_string()
        } else {
            self.roots
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut s = format!("{} {} {}\n", self.n, self.u, roots);
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidTree(m.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<&str> = lines
            .next()
            .ok_or_else(|| bad("empty input"))?
            .split_whitespace()
            .collect();
        if header.len() < 3 {
            return Err(bad("header must be `n u root`"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad("expected an integer"));
        let n = num(header[0])?;
        let u = num(header[1])?;
        let roots = if header[2..] == ["-"] {
            Vec::new()
        } else {
            header[2..]
                .iter()
                .map(|s| num(s))
                .collect::<Result<Vec<_>>>()?
        };
        let mut edges = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(bad("edge lines must be `a b`"));
            }
            let (a, b) = (num(parts[0])?, num(parts[1])?);
            edges.push(if a < b { (a, b) } else { (b, a) });
        }
        edges.sort_unstable();
        Ok(GregTree { n, u, roots, edges })
    }
}

/// `k` vertices `1..=k`, `k - 1` edges, connected.
fn check_tree(k: usize, edges: &[Edge]) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidTree("no vertices".into()));
    }
    if edges.len() != k - 1 {
        return Err(Error::InvalidTree(format!(
            "{} edges on {k} vertices",
            edges.len()
        )));
    }
    if let Some(e) = edges.iter().find(|&&(a, b)| a == 0 || b > k || a >= b) {
        return Err(Error::InvalidTree(format!("bad edge {e:?}")));
    }
    let adj = adjacency(k, edges);
    let (order, _) = bfs(&adj, 1);
    if order.len() != k {
        return Err(Error::InvalidTree("not connected".into()));
    }
    Ok(())
}

pub(crate) fn adjacency(k: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); k + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// BFS order from `root` and parent array (0 for the root).
fn bfs(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut order = Vec::with_capacity(adj.len());
    let mut queue = VecDeque::from([root]);
    parent[root] = 0;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    (order, parent)
}
