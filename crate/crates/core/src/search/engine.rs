//! Orderly generation over r-subsets of `[n]` in colex order.
//!
//! A hypergraph is a bitmask over edge indices. It is canonical when no
//! relabelling yields a code whose lowest differing bit belongs to the
//! relabelled copy, i.e. its sorted edge-index list is lexicographically
//! least in its isomorphism class. Removing the largest edge of a canonical
//! code leaves a canonical code, so extending only by larger edges and
//! keeping canonical children visits every class exactly once.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::combinatorics::Combinations;

use super::Mode;

pub(crate) struct Universe {
    pub n: usize,
    pub r: usize,
    /// Vertex bitmask of each edge, colex order.
    pub edges: Vec<u16>,
    idx_of_mask: Vec<u8>,
    /// `prefix[k] = C(k, r)`: edges inside `{0..k-1}` have smaller indices.
    prefix: Vec<usize>,
    /// For each `k`, the `(r-1)`-subsets of `{0..k-1}` as label masks, colex order.
    tsets: Vec<Vec<u16>>,
    nsets: usize,
    /// For each edge: `(S index, a, b)` for every `(r-2)`-subset `S` with `{a, b} = e \ S`.
    edge_links: Vec<Vec<(u16, u8, u8)>>,
    constraint: Mode,
}

fn colex_subsets(n: usize, k: usize) -> Vec<u16> {
    let mut out: Vec<u16> = Combinations::new(n, k)
        .map(|s| s.iter().fold(0u16, |m, &v| m | 1 << v))
        .collect();
    // colex: compare by the largest differing element, i.e. as integers
    out.sort_unstable();
    out
}

impl Universe {
    pub fn new(n: usize, mode: Mode) -> Self {
        let r = mode.r();
        assert!(n <= 16, "search supports n <= 16");
        let edges = colex_subsets(n, r);
        assert!(edges.len() <= 128, "search needs C(n, r) <= 128");
        let mut idx_of_mask = vec![u8::MAX; 1 << n];
        for (i, &m) in edges.iter().enumerate() {
            idx_of_mask[m as usize] = i as u8;
        }
        let prefix = (0..=n).map(|k| colex_subsets(k, r).len()).collect();
        let tsets = (0..n).map(|k| colex_subsets(k, r - 1)).collect();
        let sets = colex_subsets(n, r - 2);
        let set_idx = |m: u16| sets.binary_search(&m).unwrap() as u16;
        let edge_links = edges
            .iter()
            .map(|&e| {
                colex_subsets(r, r - 2)
                    .iter()
                    .map(|&pick| {
                        let verts: Vec<usize> = (0..n).filter(|&v| e >> v & 1 == 1).collect();
                        let mut s = 0u16;
                        let mut rest = Vec::new();
                        for (i, &v) in verts.iter().enumerate() {
                            if pick >> i & 1 == 1 {
                                s |= 1 << v;
                            } else {
                                rest.push(v as u8);
                            }
                        }
                        (set_idx(s), rest[0], rest[1])
                    })
                    .collect()
            })
            .collect();
        Universe {
            n,
            r,
            edges,
            idx_of_mask,
            prefix,
            tsets,
            nsets: sets.len(),
            edge_links,
            constraint: mode,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_vertices(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.edges[i] >> v & 1 == 1).collect()
    }
}

fn has_clique(adj: &[u16], cand: u16, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], k - 1) {
            return true;
        }
        if (rest.count_ones() as usize) < k - 1 {
            return false;
        }
    }
    false
}

fn colourable(adj: &[u16], t: usize) -> bool {
    let verts: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
    let mut colour = vec![u8::MAX; adj.len()];
    fn go(adj: &[u16], verts: &[usize], i: usize, colour: &mut [u8], t: usize, used: usize) -> bool {
        let Some(&v) = verts.get(i) else {
            return true;
        };
        for c in 0..(used + 1).min(t) {
            let mut nb = adj[v];
            let mut clash = false;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if colour[u] == c as u8 {
                    clash = true;
                    break;
                }
            }
            if !clash {
                colour[v] = c as u8;
                if go(adj, verts, i + 1, colour, t, used.max(c + 1)) {
                    return true;
                }
                colour[v] = u8::MAX;
            }
        }
        false
    }
    go(adj, &verts, 0, &mut colour, t, 0)
}

#[derive(Clone)]
pub(crate) struct State {
    pub code: u128,
    pub count: usize,
    degree: [u8; 16],
    /// `links[s * n + a]`: neighbours of `a` in the link of set `s`.
    links: Vec<u16>,
}

impl Universe {
    pub fn empty_state(&self) -> State {
        State {
            code: 0,
            count: 0,
            degree: [0; 16],
            links: vec![0; self.nsets * self.n],
        }
    }

    /// Whether `state + e` still satisfies the constraint.
    pub fn feasible_add(&self, st: &State, e: usize) -> bool {
        let n = self.n;
        match self.constraint {
            Mode::Daisy { t, .. } => self.edge_links[e].iter().all(|&(s, a, b)| {
                let adj = &st.links[s as usize * n..(s as usize + 1) * n];
                let common = adj[a as usize] & adj[b as usize];
                !has_clique(adj, common, t - 2)
            }),
            Mode::LinkPartite { t } => self.edge_links[e].iter().all(|&(s, a, b)| {
                let mut adj = st.links[s as usize * n..(s as usize + 1) * n].to_vec();
                adj[a as usize] |= 1 << b;
                adj[b as usize] |= 1 << a;
                colourable(&adj, t)
            }),
        }
    }

    pub fn add(&self, st: &State, e: usize) -> State {
        let mut next = st.clone();
        next.code |= 1u128 << e;
        next.count += 1;
        for v in 0..self.n {
            if self.edges[e] >> v & 1 == 1 {
                next.degree[v] += 1;
            }
        }
        for &(s, a, b) in &self.edge_links[e] {
            next.links[s as usize * self.n + a as usize] |= 1 << b;
            next.links[s as usize * self.n + b as usize] |= 1 << a;
        }
        next
    }

    fn twin_classes(&self, code: u128) -> [u8; 16] {
        let n = self.n;
        let mut class = [u8::MAX; 16];
        let mut reps: Vec<usize> = Vec::new();
        for v in 0..n {
            let found = reps.iter().position(|&u| {
                let swap = (1u16 << u) | (1u16 << v);
                (0..self.edges.len()).all(|i| {
                    let m = self.edges[i];
                    if code >> i & 1 == 0 || (m & swap).count_ones() != 1 {
                        return true;
                    }
                    code >> self.idx_of_mask[(m ^ swap) as usize] & 1 == 1
                })
            });
            class[v] = match found {
                Some(c) => c as u8,
                None => {
                    reps.push(v);
                    (reps.len() - 1) as u8
                }
            };
        }
        class
    }

    pub fn is_canonical(&self, code: u128) -> bool {
        let twins = self.twin_classes(code);
        let mut perm = [0u8; 16];
        self.canon_rec(code, 0, &mut perm, 0, &twins)
    }

    /// False once some relabelling gives a smaller code.
    fn canon_rec(&self, code: u128, k: usize, perm: &mut [u8; 16], used: u16, twins: &[u8; 16]) -> bool {
        if k == self.n {
            return true;
        }
        let (lo, hi) = (self.prefix[k], self.prefix[k + 1]);
        let chunk_g = (code >> lo) & ((1u128 << (hi - lo)) - 1);
        let mut tried: u16 = 0;
        for v in 0..self.n {
            if used >> v & 1 == 1 || tried >> twins[v] & 1 == 1 {
                continue;
            }
            tried |= 1 << twins[v];
            perm[k] = v as u8;
            let mut chunk_pi: u128 = 0;
            for (j, &tm) in self.tsets[k].iter().enumerate() {
                let mut old = 1u16 << v;
                let mut bits = tm;
                while bits != 0 {
                    let l = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    old |= 1 << perm[l];
                }
                if code >> self.idx_of_mask[old as usize] & 1 == 1 {
                    chunk_pi |= 1 << j;
                }
            }
            let diff = chunk_pi ^ chunk_g;
            if diff == 0 {
                if !self.canon_rec(code, k + 1, perm, used | 1 << v, twins) {
                    return false;
                }
            } else if chunk_pi & diff & diff.wrapping_neg() != 0 {
                return false;
            }
        }
        true
    }
}

pub(crate) struct Node {
    pub state: State,
    /// Edges above the maximum edge whose addition alone stays feasible.
    pub cands: Vec<u8>,
}

/// Per-subtree search outcome.
#[derive(Debug, Clone, Default)]
pub(crate) struct Outcome {
    pub best: usize,
    pub extremal: Vec<u128>,
    pub nodes: u64,
}

pub(crate) struct Searcher<'a> {
    pub uni: &'a Universe,
    /// `ex(n-1)` when known exactly; enables the local bound.
    pub ex_prev: Option<usize>,
    pub counter: &'a AtomicU64,
    pub cap: u64,
    pub aborted: &'a AtomicBool,
}

impl Searcher<'_> {
    pub fn root(&self) -> Node {
        let state = self.uni.empty_state();
        let cands = (0..self.uni.edge_count())
            .filter(|&e| self.uni.feasible_add(&state, e))
            .map(|e| e as u8)
            .collect();
        Node { state, cands }
    }

    fn upper_bound(&self, node: &Node) -> usize {
        let st = &node.state;
        let simple = st.count + node.cands.len();
        let Some(ex) = self.ex_prev else {
            return simple;
        };
        let (n, r) = (self.uni.n, self.uni.r);
        if n <= r {
            return simple;
        }
        let mut add_without = [0usize; 16];
        for &e in &node.cands {
            let m = self.uni.edges[e as usize];
            for (v, slot) in add_without.iter_mut().enumerate().take(n) {
                if m >> v & 1 == 0 {
                    *slot += 1;
                }
            }
        }
        let total: usize = (0..n)
            .map(|v| ex.min(st.count - st.degree[v] as usize + add_without[v]))
            .sum();
        simple.min(total / (n - r))
    }

    fn record(&self, node: &Node, out: &mut Outcome) {
        let c = node.state.count;
        if c > out.best {
            out.best = c;
            out.extremal.clear();
        }
        if c == out.best {
            out.extremal.push(node.state.code);
        }
    }

    /// Visits `node`, records it and returns its canonical children.
    pub fn expand(&self, node: &Node, out: &mut Outcome) -> Vec<Node> {
        out.nodes += 1;
        if self.counter.fetch_add(1, Ordering::Relaxed) >= self.cap {
            self.aborted.store(true, Ordering::Relaxed);
            return Vec::new();
        }
        self.record(node, out);
        if self.upper_bound(node) < out.best {
            return Vec::new();
        }
        let mut children = Vec::new();
        for (ci, &e) in node.cands.iter().enumerate() {
            let remaining = node.cands.len() - ci;
            if node.state.count + remaining < out.best {
                break;
            }
            let code = node.state.code | 1u128 << e;
            if !self.uni.is_canonical(code) {
                continue;
            }
            let state = self.uni.add(&node.state, e as usize);
            let cands = node.cands[ci + 1..]
                .iter()
                .copied()
                .filter(|&f| self.uni.feasible_add(&state, f as usize))
                .collect();
            children.push(Node { state, cands });
        }
        children
    }

    pub fn dfs(&self, node: &Node, out: &mut Outcome) {
        if self.aborted.load(Ordering::Relaxed) {
            return;
        }
        for child in self.expand(node, out) {
            self.dfs(&child, out);
        }
    }

    /// A maximal feasible hypergraph built greedily in edge order.
    pub fn greedy(&self) -> usize {
        let mut st = self.uni.empty_state();
        for e in 0..self.uni.edge_count() {
            if self.uni.feasible_add(&st, e) {
                st = self.uni.add(&st, e);
            }
        }
        st.count
    }
}
