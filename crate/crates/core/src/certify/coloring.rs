//! Exact t-colourability.
//!
//! A DSatur greedy pass runs first; a colouring it finds is a certificate.
//! Otherwise each component with at most [`EXACT_COMPONENT_CAP`] vertices is
//! searched exhaustively; a larger component that defeats the greedy pass is
//! reported as undecided.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::clique::find_clique;

pub const EXACT_COMPONENT_CAP: usize = 64;

const NONE: u8 = u8::MAX;

/// Colours `order`-local vertices; `adj[i]` lists local neighbours.
struct Dsatur<'a> {
    adj: &'a [Vec<usize>],
    t: usize,
    colour: Vec<u8>,
    /// `forbid[v]` bit c set when some neighbour of v has colour c, with counts.
    counts: Vec<Vec<u16>>,
    backtrack: bool,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.counts[v].iter().filter(|&&c| c > 0).count()
    }

    fn pick(&self) -> Option<usize> {
        (0..self.adj.len())
            .filter(|&v| self.colour[v] == NONE)
            .max_by_key(|&v| (self.saturation(v), self.adj[v].len(), std::cmp::Reverse(v)))
    }

    fn set(&mut self, v: usize, c: u8) {
        self.colour[v] = c;
        for &u in &self.adj[v] {
            self.counts[u][c as usize] += 1;
        }
    }

    fn unset(&mut self, v: usize) {
        let c = self.colour[v] as usize;
        self.colour[v] = NONE;
        for &u in &self.adj[v] {
            self.counts[u][c] -= 1;
        }
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        // colours beyond `used` are interchangeable; try only the first new one
        let limit = (used + 1).min(self.t);
        for c in 0..limit {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.set(v, c as u8);
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.unset(v);
            if !self.backtrack {
                return false;
            }
        }
        false
    }
}

fn colour_component(g: &Graph, comp: &[usize], t: usize, backtrack: bool) -> Option<Vec<u8>> {
    let local: std::collections::HashMap<usize, usize> =
        comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| g.neighbors(v).iter().filter_map(|u| local.get(&u).copied()).collect())
        .collect();
    let mut ds = Dsatur {
        adj: &adj,
        t,
        colour: vec![NONE; comp.len()],
        counts: vec![vec![0; t]; comp.len()],
        backtrack,
    };
    ds.solve(0).then_some(ds.colour)
}

/// A proper colouring with colours `< t` of all `n` vertices (isolated ones get 0),
/// or `None` when none exists.
pub fn t_coloring(g: &Graph, t: usize) -> Result<Option<Vec<u32>>> {
    if t == 0 {
        return Ok((g.n() == 0).then(Vec::new));
    }
    if t >= 256 {
        return Err(Error::InvalidParameter(format!("t = {t} too large for colouring")));
    }
    let mut colouring = vec![0u32; g.n()];
    let mut clique_checked = false;
    for comp in g.components(&g.non_isolated()) {
        let mut found = colour_component(g, &comp, t, false);
        if found.is_none() {
            if !clique_checked {
                if find_clique(g, t + 1).is_some() {
                    return Ok(None);
                }
                clique_checked = true;
            }
            if comp.len() > EXACT_COMPONENT_CAP {
                return Err(Error::Undecided {
                    what: "t-colourability",
                    size: comp.len(),
                    limit: EXACT_COMPONENT_CAP,
                });
            }
            found = colour_component(g, &comp, t, true);
        }
        match found {
            Some(c) => {
                for (i, &v) in comp.iter().enumerate() {
                    colouring[v] = c[i] as u32;
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(colouring))
}

pub fn is_proper_coloring(g: &Graph, colouring: &[u32], t: usize) -> bool {
    colouring.len() == g.n()
        && colouring.iter().all(|&c| (c as usize) < t)
        && g.edges().all(|(u, v)| colouring[u] != colouring[v])
}
