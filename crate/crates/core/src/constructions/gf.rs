//! The linear-independence construction on GF(q)^r \ {0} and its balanced blow-up.

use crate::error::Result;
use crate::field::{rank, FiniteField, GfVector};
use crate::hypergraph::{blow_up, Hypergraph};

use super::Caps;

/// `prod_{i<r} (q^r - q^i) / r!`: the number of unordered bases of GF(q)^r.
pub fn gf_independent_edge_count(r: u32, q: u64) -> u64 {
    let qr = q.pow(r);
    let ordered: u128 = (0..r).map(|i| (qr - q.pow(i)) as u128).product();
    let fact: u128 = (1..=r as u128).product();
    (ordered / fact) as u64
}

/// Vertex `i` of the construction is the vector with code `i + 1`.
pub fn vertex_vector(i: usize, q: u32, r: usize) -> GfVector {
    GfVector::decode(i as u64 + 1, q, r)
}

struct SpanSearch<'a> {
    field: &'a FiniteField,
    coords: Vec<Vec<u32>>,
    q: usize,
    r: usize,
    flat: Vec<u32>,
}

impl SpanSearch<'_> {
    fn code(&self, coords: &[u32]) -> usize {
        coords.iter().fold(0, |acc, &c| acc * self.q + c as usize)
    }

    /// `span` lists the codes of the current span; `chosen` are vertex ids.
    fn extend(&mut self, chosen: &mut Vec<u32>, span: &[usize], in_span: &mut Vec<bool>) {
        if chosen.len() == self.r {
            self.flat.extend_from_slice(chosen);
            return;
        }
        let start = chosen.last().map_or(0, |&v| v as usize + 1);
        let total = self.coords.len() - 1;
        // leave room for the remaining picks
        let last = total - (self.r - chosen.len() - 1);
        for v in start..last {
            let code = v + 1;
            if in_span[code] {
                continue;
            }
            let mut next_span = Vec::with_capacity(span.len() * self.q);
            for &s in span {
                for c in 0..self.q as u32 {
                    let combo: Vec<u32> = self.coords[s]
                        .iter()
                        .zip(&self.coords[code])
                        .map(|(&a, &b)| self.field.add(a, self.field.mul(c, b)))
                        .collect();
                    next_span.push(self.code(&combo));
                }
            }
            for &s in &next_span {
                in_span[s] = true;
            }
            chosen.push(v as u32);
            self.extend(chosen, &next_span, in_span);
            chosen.pop();
            for &s in &next_span {
                in_span[s] = false;
            }
            for &s in span {
                in_span[s] = true;
            }
        }
    }
}

/// r-sets of nonzero vectors of GF(q)^r that are linearly independent.
pub fn gf_independent_hypergraph(r: usize, q: u64, caps: &Caps) -> Result<Hypergraph> {
    if r < 3 {
        return Err(crate::Error::InvalidParameter(format!("r must be at least 3, got {r}")));
    }
    let field = FiniteField::with_order(q)?;
    let qr = q
        .checked_pow(r as u32)
        .ok_or(crate::Error::CapExceeded {
            what: "vertex",
            actual: u64::MAX,
            limit: caps.max_vertices as u64,
        })?;
    caps.check_vertices(qr - 1)?;
    caps.check_edges(gf_independent_edge_count(r as u32, q))?;
    let qf = field.order();
    let coords: Vec<Vec<u32>> = (0..qr).map(|c| GfVector::decode(c, qf, r).coords).collect();
    let mut search = SpanSearch {
        field: &field,
        coords,
        q: q as usize,
        r,
        flat: Vec::new(),
    };
    let mut in_span = vec![false; qr as usize];
    in_span[0] = true;
    search.extend(&mut Vec::with_capacity(r), &[0], &mut in_span);
    Hypergraph::from_flat(qr as usize - 1, r, search.flat)
}

/// Balanced blow-up with every class of size `n_class`.
pub fn balanced_blowup_gf(r: usize, q: u64, n_class: usize, caps: &Caps) -> Result<Hypergraph> {
    if n_class == 0 {
        return Err(crate::Error::InvalidParameter("N must be at least 1".into()));
    }
    let qr = q.checked_pow(r as u32).unwrap_or(u64::MAX);
    caps.check_vertices((qr - 1).saturating_mul(n_class as u64))?;
    caps.check_edges(
        gf_independent_edge_count(r as u32, q).saturating_mul((n_class as u64).saturating_pow(r as u32)),
    )?;
    let base = gf_independent_hypergraph(r, q, &Caps::unlimited())?;
    blow_up(&base, &vec![n_class; base.n()])
}

/// The positive codegree of the balanced blow-up: `(q^r - q^{r-1}) N`.
pub fn blowup_codegree(r: u32, q: u64, n_class: u64) -> u64 {
    (q.pow(r) - q.pow(r - 1)) * n_class
}

/// The direction partition of the link of an `(r-2)`-set `set` of vertices of
/// `B_{r,q}`: vertex `u` outside `W = span(set)` goes to the part of the line
/// `u + W` in the 2-dimensional quotient, parts numbered by first appearance
/// in vertex order. Vectors of `W` have no link edges; they go to part 0.
/// `None` when `set` is dependent (the link is then empty).
pub fn gf_link_partition(r: usize, q: u64, set: &[usize]) -> Result<Option<Vec<u32>>> {
    if set.len() + 2 != r {
        return Err(crate::Error::InvalidParameter(format!("expected {} vertices, got {}", r - 2, set.len())));
    }
    let field = FiniteField::with_order(q)?;
    let qf = field.order();
    let n = q.pow(r as u32) as usize - 1;
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(crate::Error::VertexOutOfRange { vertex: v, n });
    }
    let base: Vec<GfVector> = set.iter().map(|&i| vertex_vector(i, qf, r)).collect();
    if rank(&field, &base)? < base.len() {
        return Ok(None);
    }
    let with = |extra: &[usize]| -> Result<usize> {
        let mut vecs = base.clone();
        vecs.extend(extra.iter().map(|&i| vertex_vector(i, qf, r)));
        rank(&field, &vecs)
    };
    let mut reps: Vec<usize> = Vec::new();
    let mut part = vec![0u32; n];
    for u in 0..n {
        if with(&[u])? == r - 2 {
            continue;
        }
        // same direction iff u and rep together add only one dimension
        part[u] = match reps.iter().position(|&p| with(&[u, p]).is_ok_and(|k| k == r - 1)) {
            Some(i) => i as u32,
            None => {
                reps.push(u);
                reps.len() as u32 - 1
            }
        };
    }
    debug_assert_eq!(reps.len() as u64, q + 1);
    Ok(Some(part))
}
