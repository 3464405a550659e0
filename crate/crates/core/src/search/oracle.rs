//! Exhaustive reference values: every edge subset of `K_n^r` is tested.
//!
//! Link graphs are encoded as bitmasks over the pairs of `[n]`, and the
//! constraint is looked up in a table filled by brute force, so nothing here
//! shares code with the certifier or the orderly search.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

use super::{Mode, SearchProblem};

/// Edge subsets are enumerated only up to `2^ORACLE_MAX_EDGES`.
pub const ORACLE_MAX_EDGES: usize = 22;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `table[mask]`: whether the graph with pair set `mask` is allowed.
fn link_table(n: usize, pairs: &[(usize, usize)], mode: Mode) -> Vec<bool> {
    let m = pairs.len();
    let pair_bit = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    match mode {
        Mode::Daisy { t, .. } => {
            let cliques: Vec<u32> = subsets(n, t)
                .iter()
                .map(|c| {
                    let mut mask = 0u32;
                    for i in 0..c.len() {
                        for j in i + 1..c.len() {
                            mask |= 1 << pair_bit(c[i], c[j]);
                        }
                    }
                    mask
                })
                .collect();
            (0..1u32 << m).map(|g| cliques.iter().all(|&c| g & c != c)).collect()
        }
        Mode::LinkPartite { t } => {
            let mut cuts: Vec<u32> = Vec::new();
            let total = (t as u64).pow(n as u32);
            for mut code in 0..total {
                let mut colour = vec![0usize; n];
                for c in colour.iter_mut() {
                    *c = (code % t as u64) as usize;
                    code /= t as u64;
                }
                let mut mask = 0u32;
                for (i, &(a, b)) in pairs.iter().enumerate() {
                    if colour[a] != colour[b] {
                        mask |= 1 << i;
                    }
                }
                cuts.push(mask);
            }
            cuts.sort_unstable();
            cuts.dedup();
            (0..1u32 << m).map(|g| cuts.iter().any(|&c| g & !c == 0)).collect()
        }
    }
}

/// The optimum and every labelled edge set attaining it.
pub fn naive_oracle_sets(prob: &SearchProblem) -> Result<(usize, Vec<Hypergraph>)> {
    let (n, r) = (prob.n, prob.mode.r());
    let edges = subsets(n, r);
    if edges.len() > ORACLE_MAX_EDGES {
        return Err(Error::CapExceeded {
            what: "oracle edge universe",
            actual: edges.len() as u64,
            limit: ORACLE_MAX_EDGES as u64,
        });
    }
    let pairs: Vec<(usize, usize)> = subsets(n, 2).iter().map(|p| (p[0], p[1])).collect();
    let table = link_table(n, &pairs, prob.mode);
    let sets = subsets(n, r - 2);
    // contribution of each edge: (set index, pair bit)
    let contrib: Vec<Vec<(usize, u32)>> = edges
        .iter()
        .map(|e| {
            sets.iter()
                .enumerate()
                .filter(|(_, s)| s.iter().all(|v| e.contains(v)))
                .map(|(si, s)| {
                    let rest: Vec<usize> = e.iter().copied().filter(|v| !s.contains(v)).collect();
                    let bit = pairs.iter().position(|&p| p == (rest[0], rest[1])).unwrap();
                    (si, 1u32 << bit)
                })
                .collect()
        })
        .collect();
    let mut links = vec![0u32; sets.len()];
    let mut bad = sets.iter().filter(|_| !table[0]).count();
    let mut best = 0;
    let mut winners: Vec<u64> = Vec::new();
    let m = edges.len();
    let mut gray: u64 = 0;
    for i in 0..1u64 << m {
        if i > 0 {
            let flip = i.trailing_zeros() as usize;
            gray ^= 1 << flip;
            for &(si, bit) in &contrib[flip] {
                let before = table[links[si] as usize];
                links[si] ^= bit;
                let after = table[links[si] as usize];
                if before != after {
                    if after {
                        bad -= 1;
                    } else {
                        bad += 1;
                    }
                }
            }
        }
        if bad == 0 {
            let c = gray.count_ones() as usize;
            if c > best {
                best = c;
                winners.clear();
            }
            if c == best {
                winners.push(gray);
            }
        }
    }
    winners.sort_unstable();
    let graphs = winners
        .iter()
        .map(|&w| {
            let chosen: Vec<&Vec<usize>> = (0..m).filter(|&i| w >> i & 1 == 1).map(|i| &edges[i]).collect();
            Hypergraph::from_edges(n, r, &chosen).expect("valid edges")
        })
        .collect();
    Ok((best, graphs))
}

pub fn naive_oracle(prob: &SearchProblem) -> Result<usize> {
    naive_oracle_sets(prob).map(|(best, _)| best)
}
