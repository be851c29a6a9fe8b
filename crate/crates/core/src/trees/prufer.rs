//! Prüfer sequences over vertices `1..=k`.

/// Decodes a Prüfer sequence into the edge list of a labeled tree on `1..=k`,
/// `k = seq.len() + 2`. Edges come out as `(min, max)` pairs, sorted.
pub fn decode(seq: &[usize], k: usize) -> Vec<(usize, usize)> {
    debug_assert!(k == seq.len() + 2 || (k <= 1 && seq.is_empty()));
    if k < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; k + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    let mut ptr = 1;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push(ordered(leaf, v));
        degree[v] -= 1;
        if v < ptr && degree[v] == 1 {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // the last edge joins the remaining leaf with k
    edges.push(ordered(leaf, k));
    edges.sort_unstable();
    edges
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Every Prüfer sequence of length `k - 2` over `1..=k`, in lexicographic order.
pub struct Sequences {
    k: usize,
    current: Option<Vec<usize>>,
}

impl Sequences {
    pub fn new(k: usize) -> Self {
        let len = k.saturating_sub(2);
        Sequences {
            k,
            current: Some(vec![1; len]),
        }
    }
}

impl Iterator for Sequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let mut nxt = cur.clone();
        let mut i = nxt.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if nxt[i] < self.k {
                nxt[i] += 1;
                self.current = Some(nxt);
                break;
            }
            nxt[i] = 1;
        }
        Some(cur)
    }
}

/// Visits, in lexicographic order, every Prüfer sequence of length `k - 2`
/// in which vertex `v` appears at least `need[v]` times, up to `slack` missing
/// occurrences in total. `need` is indexed by vertex id (index 0 unused).
pub fn for_each_constrained(
    k: usize,
    need: &[usize],
    slack: usize,
    mut visit: impl FnMut(&[usize]),
) {
    let len = k.saturating_sub(2);
    let mut counts = vec![0usize; k + 1];
    let mut seq = Vec::with_capacity(len);
    let deficit: usize = need.iter().sum();
    walk(
        k,
        len,
        need,
        slack,
        deficit,
        &mut counts,
        &mut seq,
        &mut visit,
    );
}

#[allow(clippy::too_many_arguments)]
fn walk(
    k: usize,
    len: usize,
    need: &[usize],
    slack: usize,
    deficit: usize,
    counts: &mut [usize],
    seq: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let remaining = len - seq.len();
    if deficit > remaining + slack {
        return;
    }
    if remaining == 0 {
        visit(seq);
        return;
    }
    for v in 1..=k {
        let reduces = counts[v] < need[v];
        counts[v] += 1;
        seq.push(v);
        let d = if reduces { deficit - 1 } else { deficit };
        walk(k, len, need, slack, d, counts, seq, visit);
        seq.pop();
        counts[v] -= 1;
    }
}
