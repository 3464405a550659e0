//! Canonical labelling of hypergraphs by colour refinement plus
//! individualization.
//!
//! The canonical form is the lexicographically least sorted edge list over
//! all leaves of the individualization-refinement tree. Refinement and the
//! choice of target cell are isomorphism invariant, so isomorphic inputs
//! explore the same multiset of leaf graphs and agree on the minimum.

use crate::hypergraph::Hypergraph;

/// Result of canonical labelling.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// `labeling[old] = new`.
    pub labeling: Vec<usize>,
    pub hypergraph: Hypergraph,
}

/// Replaces colours by their rank among the distinct values.
fn normalize<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut distinct: Vec<T> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).unwrap() as u32)
        .collect()
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Iterated refinement: a vertex's new colour is its old colour together with
/// the multiset of colour tuples of its incident edges.
fn refine(h: &Hypergraph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = h.n();
    let r = h.r();
    loop {
        let cells = cell_count(&colors);
        if cells == n {
            return colors;
        }
        let mut sigs: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
        let mut others = Vec::with_capacity(r - 1);
        for e in h.edges() {
            for (i, &v) in e.iter().enumerate() {
                others.clear();
                others.extend(
                    e.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &u)| colors[u as usize]),
                );
                others.sort_unstable();
                sigs[v as usize].push(others.clone());
            }
        }
        let keys: Vec<(u32, Vec<Vec<u32>>)> = sigs
            .into_iter()
            .enumerate()
            .map(|(v, mut s)| {
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let next = normalize(&keys);
        if cell_count(&next) == cells {
            return next;
        }
        colors = next;
    }
}

fn target_cell(colors: &[u32]) -> Option<u32> {
    let mut sizes = vec![0usize; cell_count(colors)];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    // first non-singleton cell of minimum size
    sizes
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|&(c, &s)| (s, c))
        .map(|(c, _)| c as u32)
}

/// Twin classes: `u` and `v` are twins when the transposition `(u v)` is an
/// automorphism. Returns the class id of each vertex.
pub(crate) fn twin_classes(h: &Hypergraph) -> Vec<usize> {
    let n = h.n();
    let inc = h.incidence();
    // (r-1)-sets completing u to an edge, excluding edges through `other`
    let rest = |u: usize, other: usize| -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = inc[u]
            .iter()
            .map(|&i| h.edge(i as usize))
            .filter(|e| !e.contains(&(other as u32)))
            .map(|e| e.iter().copied().filter(|&w| w as usize != u).collect())
            .collect();
        out.sort_unstable();
        out
    };
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let found = reps.iter().position(|&u| {
            inc[u].len() == inc[v].len() && rest(u, v) == rest(v, u)
        });
        match found {
            Some(c) => class[v] = c,
            None => {
                class[v] = reps.len();
                reps.push(v);
            }
        }
    }
    class
}

struct Search<'a> {
    h: &'a Hypergraph,
    twins: Vec<usize>,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let relabeled = self.h.relabel(&perm);
        let flat = relabeled.flat_edges();
        let better = match &self.best {
            None => true,
            Some((b, _)) => flat < b.as_slice(),
        };
        if better {
            self.best = Some((flat.to_vec(), perm));
        }
    }

    fn descend(&mut self, colors: Vec<u32>) {
        let Some(cell) = target_cell(&colors) else {
            self.leaf(&colors);
            return;
        };
        let members: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == cell).collect();
        let mut tried_classes = Vec::new();
        for &v in &members {
            // a twin's subtree is the mirror image of one already explored
            if tried_classes.contains(&self.twins[v]) {
                continue;
            }
            tried_classes.push(self.twins[v]);
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(c == cell && u != v))
                .collect();
            let next = refine(self.h, normalize(&split));
            self.descend(next);
        }
    }
}

pub fn canonical_form(h: &Hypergraph) -> CanonicalForm {
    let colors = refine(h, vec![0; h.n()]);
    let mut search = Search {
        h,
        twins: twin_classes(h),
        best: None,
    };
    search.descend(colors);
    let (flat, labeling) = search.best.unwrap_or_default();
    CanonicalForm {
        labeling,
        hypergraph: Hypergraph::from_sorted_flat(h.n(), h.r(), flat),
    }
}

pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.n() != b.n() || a.r() != b.r() || a.len() != b.len() {
        return false;
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a).hypergraph == canonical_form(b).hypergraph
}
