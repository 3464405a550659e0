//! Clique search by branch and bound with greedy-colouring bounds.

use crate::bitset::Bitset;
use crate::graph::Graph;

/// True when a greedy colouring of `cand` needs at least `need` colours, i.e.
/// the colouring bound cannot rule out a `need`-clique.
fn colour_bound_reaches(g: &Graph, cand: &Bitset, need: usize) -> bool {
    let mut uncoloured = cand.clone();
    let mut colours = 0;
    while !uncoloured.is_empty() {
        if colours == need {
            return true;
        }
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            uncoloured.remove(v);
            avail.difference_with(g.neighbors(v));
        }
        colours += 1;
    }
    colours >= need
}

fn extend(g: &Graph, cand: &Bitset, need: usize, cur: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if cand.count() < need || !colour_bound_reaches(g, cand, need) {
        return false;
    }
    let mut rest = cand.clone();
    while let Some(v) = rest.first() {
        rest.remove(v);
        let next = rest.intersection(g.neighbors(v));
        cur.push(v);
        if extend(g, &next, need - 1, cur) {
            return true;
        }
        cur.pop();
        if rest.count() < need {
            return false;
        }
    }
    false
}

/// The lexicographically least `k`-clique (ascending ids), if any.
pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    find_clique_within(g, &Bitset::full(g.n()), k)
}

/// As [`find_clique`], restricted to vertices of `allowed`.
pub fn find_clique_within(g: &Graph, allowed: &Bitset, k: usize) -> Option<Vec<usize>> {
    let mut cur = Vec::with_capacity(k);
    extend(g, allowed, k, &mut cur).then_some(cur)
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}
