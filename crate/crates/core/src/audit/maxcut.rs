//! Max-cut t-partitions of small graphs.
//!
//! Exact mode returns the lexicographically least assignment vector among
//! all maximizers. Graphs above [`exact_cap`] are handled exactly only when
//! they are t-colourable, since then every proper colouring is a maximizer.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::t_coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutMode {
    Exact,
    Heuristic { seed: u64 },
}

impl CutMode {
    pub fn is_exact(self) -> bool {
        matches!(self, CutMode::Exact)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkPartition {
    pub t: usize,
    /// Part of each vertex, `< t`.
    pub assignment: Vec<u32>,
    pub cross_edges: usize,
    pub inside_edges: usize,
    pub heuristic: bool,
}

const SEARCH_BUDGET: u64 = 5_000_000;
const HEURISTIC_RESTARTS: usize = 16;

/// Largest vertex count for the exhaustive search: `t^m <= 5 * 10^6`.
pub fn exact_cap(t: usize) -> usize {
    if t <= 1 {
        return usize::MAX;
    }
    let mut m = 0;
    let mut p: u64 = 1;
    while p * t as u64 <= SEARCH_BUDGET {
        p *= t as u64;
        m += 1;
    }
    m
}

pub fn cross_count(g: &Graph, assignment: &[u32]) -> usize {
    g.edges().filter(|&(u, v)| assignment[u] != assignment[v]).count()
}

fn finish(g: &Graph, t: usize, assignment: Vec<u32>, heuristic: bool) -> LinkPartition {
    let cross_edges = cross_count(g, &assignment);
    LinkPartition {
        t,
        cross_edges,
        inside_edges: g.edge_count() - cross_edges,
        assignment,
        heuristic,
    }
}

pub fn max_cut_partition(g: &Graph, t: usize, mode: CutMode) -> Result<LinkPartition> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    if t > 32 {
        return Err(Error::InvalidParameter(format!("t = {t} too large for max-cut")));
    }
    let n = g.n();
    if t == 1 || g.edge_count() == 0 {
        return Ok(finish(g, t, vec![0; n], !mode.is_exact()));
    }
    match mode {
        CutMode::Heuristic { seed } => Ok(finish(g, t, local_search(g, t, seed), true)),
        CutMode::Exact if n <= exact_cap(t) => Ok(finish(g, t, branch_and_bound(g, t), false)),
        CutMode::Exact => {
            let over = || Error::CapExceeded {
                what: "exact max-cut vertex",
                actual: n as u64,
                limit: exact_cap(t) as u64,
            };
            match t_coloring(g, t) {
                Ok(Some(_)) => lex_least_coloring(g, t).map(|a| finish(g, t, a, false)).ok_or_else(over),
                _ => Err(over()),
            }
        }
    }
}

/// Lexicographically least proper colouring, by ascending DFS with forward
/// checking; `None` if the node budget runs out.
fn lex_least_coloring(g: &Graph, t: usize) -> Option<Vec<u32>> {
    let n = g.n();
    let full: u32 = if t == 32 { u32::MAX } else { (1 << t) - 1 };
    let mut domain = vec![full; n];
    let mut colour = vec![0u32; n];
    let mut budget = SEARCH_BUDGET;

    fn go(
        g: &Graph,
        v: usize,
        domain: &mut Vec<u32>,
        colour: &mut [u32],
        budget: &mut u64,
    ) -> Option<bool> {
        if v == g.n() {
            return Some(true);
        }
        let mut options = domain[v];
        while options != 0 {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let c = options.trailing_zeros();
            options &= options - 1;
            colour[v] = c;
            let saved = domain.clone();
            let mut dead = false;
            for u in g.neighbors(v).iter().filter(|&u| u > v) {
                domain[u] &= !(1 << c);
                dead |= domain[u] == 0;
            }
            if !dead && go(g, v + 1, domain, colour, budget)? {
                return Some(true);
            }
            *domain = saved;
        }
        Some(false)
    }

    go(g, 0, &mut domain, &mut colour, &mut budget)?.then_some(colour)
}

struct Bnb {
    n: usize,
    t: usize,
    adj: Vec<Vec<usize>>,
    /// Edges with both ends `>= k`.
    suffix_edges: Vec<usize>,
    colour: Vec<u32>,
    /// `cnt[v * t + c]`: assigned neighbours of `v` with colour `c`.
    cnt: Vec<u32>,
    assigned_nbrs: Vec<u32>,
    best: i64,
    best_assignment: Vec<u32>,
}

impl Bnb {
    fn bound(&self, k: usize, cur: usize) -> usize {
        let mut ub = cur + self.suffix_edges[k];
        for v in k..self.n {
            let row = &self.cnt[v * self.t..(v + 1) * self.t];
            ub += (self.assigned_nbrs[v] - row.iter().min().unwrap()) as usize;
        }
        ub
    }

    fn dfs(&mut self, k: usize, cur: usize, used: usize) {
        if k == self.n {
            if cur as i64 > self.best {
                self.best = cur as i64;
                self.best_assignment = self.colour.clone();
            }
            return;
        }
        for c in 0..(used + 1).min(self.t) {
            let gain = (self.assigned_nbrs[k] - self.cnt[k * self.t + c]) as usize;
            self.colour[k] = c as u32;
            for i in 0..self.adj[k].len() {
                let u = self.adj[k][i];
                self.cnt[u * self.t + c] += 1;
                self.assigned_nbrs[u] += 1;
            }
            let next = cur + gain;
            if self.bound(k + 1, next) as i64 > self.best {
                self.dfs(k + 1, next, used.max(c + 1));
            }
            for i in 0..self.adj[k].len() {
                let u = self.adj[k][i];
                self.cnt[u * self.t + c] -= 1;
                self.assigned_nbrs[u] -= 1;
            }
        }
    }
}

fn branch_and_bound(g: &Graph, t: usize) -> Vec<u32> {
    let n = g.n();
    // forward neighbours only: counts are read for unassigned vertices
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().filter(|&u| u > v).collect()).collect();
    let mut suffix_edges = vec![0; n + 1];
    for k in (0..n).rev() {
        suffix_edges[k] = suffix_edges[k + 1] + adj[k].len();
    }
    let seed = local_search(g, t, 0);
    let mut bnb = Bnb {
        n,
        t,
        adj,
        suffix_edges,
        colour: vec![0; n],
        cnt: vec![0; n * t],
        assigned_nbrs: vec![0; n],
        best: cross_count(g, &seed) as i64 - 1,
        best_assignment: seed,
    };
    bnb.dfs(0, 0, 0);
    bnb.best_assignment
}

/// Relabels parts in order of first appearance.
fn normalize(assignment: &mut [u32], t: usize) {
    let mut map = vec![u32::MAX; t];
    let mut next = 0;
    for a in assignment.iter_mut() {
        if map[*a as usize] == u32::MAX {
            map[*a as usize] = next;
            next += 1;
        }
        *a = map[*a as usize];
    }
}

/// Seeded restarts of single-vertex improving moves.
fn local_search(g: &Graph, t: usize, seed: u64) -> Vec<u32> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<u32>)> = None;
    for _ in 0..HEURISTIC_RESTARTS {
        let mut a: Vec<u32> = (0..n).map(|_| rng.random_range(0..t as u32)).collect();
        let mut improved = true;
        while improved {
            improved = false;
            for v in 0..n {
                let mut per = vec![0usize; t];
                for u in g.neighbors(v).iter() {
                    per[a[u] as usize] += 1;
                }
                let c = (0..t).min_by_key(|&c| (per[c], c)).unwrap();
                if per[c] < per[a[v] as usize] {
                    a[v] = c as u32;
                    improved = true;
                }
            }
        }
        normalize(&mut a, t);
        let value = cross_count(g, &a);
        let better = match &best {
            None => true,
            Some((bv, ba)) => value > *bv || (value == *bv && a < *ba),
        };
        if better {
            best = Some((value, a));
        }
    }
    best.map(|(_, a)| a).unwrap_or_default()
}
