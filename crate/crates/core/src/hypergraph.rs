//! Uniform hypergraphs and their basic statistics.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{binomial, Rational};

/// An `r`-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored flat, each as `r` strictly increasing vertex ids, and the
/// edge list is sorted lexicographically without duplicates. Per-vertex
/// incidence lists are built on first use.
pub struct Hypergraph {
    n: usize,
    r: usize,
    flat: Vec<u32>,
    incidence: OnceLock<Vec<Vec<u32>>>,
}

impl Clone for Hypergraph {
    fn clone(&self) -> Self {
        Hypergraph {
            n: self.n,
            r: self.r,
            flat: self.flat.clone(),
            incidence: OnceLock::new(),
        }
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.flat == other.flat
    }
}

impl Eq for Hypergraph {}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("edges", &self.len())
            .finish()
    }
}

/// Packs a sorted tuple into a single sortable key; valid when `n <= 2^16` and `r <= 8`.
fn pack(edge: &[u32]) -> u128 {
    edge.iter().fold(0u128, |acc, &v| acc << 16 | v as u128)
}

fn unpack(key: u128, r: usize, out: &mut Vec<u32>) {
    for i in (0..r).rev() {
        out.push((key >> (16 * i)) as u32 & 0xffff);
    }
}

impl Hypergraph {
    /// Empty `r`-graph on `n` vertices.
    pub fn empty(n: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "uniformity must be at least 2, got {r}"
            )));
        }
        Ok(Hypergraph {
            n,
            r,
            flat: Vec::new(),
            incidence: OnceLock::new(),
        })
    }

    /// Builds from arbitrary edge tuples: each is sorted, validated and
    /// deduplicated.
    pub fn from_edges<E: AsRef<[usize]>>(n: usize, r: usize, edges: &[E]) -> Result<Self> {
        let mut flat = Vec::with_capacity(edges.len() * r);
        for e in edges {
            let e = e.as_ref();
            if e.len() != r {
                return Err(Error::WrongSetSize {
                    expected: r,
                    got: e.len(),
                });
            }
            for &v in e {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(n, r, flat)
    }

    /// Builds from a flat list of `r`-tuples (any order, any vertex order
    /// within a tuple). Tuples with repeated vertices are rejected.
    pub fn from_flat(n: usize, r: usize, mut flat: Vec<u32>) -> Result<Self> {
        let mut h = Self::empty(n, r)?;
        if flat.len() % r != 0 {
            return Err(Error::InvalidParameter("flat edge list length".into()));
        }
        for e in flat.chunks_exact_mut(r) {
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "edge {e:?} repeats a vertex"
                )));
            }
            if let Some(&v) = e.last() {
                if v as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v as usize,
                        n,
                    });
                }
            }
        }
        if n <= 1 << 16 && r <= 8 {
            let mut keys: Vec<u128> = flat.chunks_exact(r).map(pack).collect();
            keys.sort_unstable();
            keys.dedup();
            flat.clear();
            for k in keys {
                unpack(k, r, &mut flat);
            }
        } else {
            let mut edges: Vec<&[u32]> = flat.chunks_exact(r).collect();
            edges.sort_unstable();
            edges.dedup();
            flat = edges.concat();
        }
        h.flat = flat;
        Ok(h)
    }

    /// Builds from a flat list already sorted, deduplicated and validated.
    pub(crate) fn from_sorted_flat(n: usize, r: usize, flat: Vec<u32>) -> Self {
        debug_assert!(flat.chunks_exact(r).is_sorted());
        Hypergraph {
            n,
            r,
            flat,
            incidence: OnceLock::new(),
        }
    }

    /// The complete `r`-graph on `n` vertices.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        let mut flat = Vec::new();
        for s in crate::combinatorics::Combinations::new(n, r) {
            flat.extend(s.iter().map(|&v| v as u32));
        }
        Ok(Self::from_sorted_flat(n, r, flat))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.flat.len() / self.r
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn edge(&self, i: usize) -> &[u32] {
        &self.flat[i * self.r..(i + 1) * self.r]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> std::slice::ChunksExact<'_, u32> {
        self.flat.chunks_exact(self.r)
    }

    pub fn flat_edges(&self) -> &[u32] {
        &self.flat
    }

    /// Membership of a sorted tuple.
    pub fn contains(&self, edge: &[u32]) -> bool {
        if edge.len() != self.r {
            return false;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(edge) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> &[Vec<u32>] {
        self.incidence.get_or_init(|| {
            let mut inc = vec![Vec::new(); self.n];
            for (i, e) in self.edges().enumerate() {
                for &v in e {
                    inc[v as usize].push(i as u32);
                }
            }
            inc
        })
    }

    fn check_set(&self, set: &[usize], expected: usize) -> Result<Vec<u32>> {
        if set.len() != expected {
            return Err(Error::WrongSetSize {
                expected,
                got: set.len(),
            });
        }
        let mut s: Vec<u32> = Vec::with_capacity(set.len());
        for &v in set {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            s.push(v as u32);
        }
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("repeated vertex in set".into()));
        }
        Ok(s)
    }

    /// Indices of the edges containing every vertex of the sorted set `s`.
    fn edges_containing(&self, s: &[u32]) -> Vec<usize> {
        if s.is_empty() {
            return (0..self.len()).collect();
        }
        let inc = self.incidence();
        let pivot = s
            .iter()
            .min_by_key(|&&v| inc[v as usize].len())
            .copied()
            .unwrap();
        inc[pivot as usize]
            .iter()
            .map(|&i| i as usize)
            .filter(|&i| {
                let e = self.edge(i);
                s.iter().all(|v| e.binary_search(v).is_ok())
            })
            .collect()
    }

    /// Link graph of an `(r-2)`-set `S`: pairs `xy` with `S ∪ {x, y}` an edge.
    ///
    /// The graph keeps the ids of `H`; vertices of `S` are isolated.
    pub fn link_graph(&self, set: &[usize]) -> Result<Graph> {
        let s = self.check_set(set, self.r - 2)?;
        let mut g = Graph::new(self.n);
        for i in self.edges_containing(&s) {
            let rest: Vec<usize> = self
                .edge(i)
                .iter()
                .filter(|v| s.binary_search(v).is_err())
                .map(|&v| v as usize)
                .collect();
            g.add_edge(rest[0], rest[1]);
        }
        Ok(g)
    }

    /// Link graph of a single vertex of a 3-graph.
    pub fn vertex_link(&self, v: usize) -> Result<Graph> {
        if self.r != 3 {
            return Err(Error::InvalidParameter(format!(
                "vertex links as graphs need r = 3, got r = {}",
                self.r
            )));
        }
        self.link_graph(&[v])
    }

    /// The `(r-1)`-uniform link of vertex `v`, on the same vertex ids.
    pub fn vertex_link_hypergraph(&self, v: usize) -> Result<Hypergraph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.r < 3 {
            return Err(Error::InvalidParameter(
                "link hypergraph needs r >= 3".into(),
            ));
        }
        let mut flat = Vec::new();
        for &i in &self.incidence()[v] {
            flat.extend(self.edge(i as usize).iter().filter(|&&u| u as usize != v));
        }
        Hypergraph::from_flat(self.n, self.r - 1, flat)
    }

    /// Number of edges containing the `(r-1)`-set `S`.
    pub fn codegree(&self, set: &[usize]) -> Result<usize> {
        let s = self.check_set(set, self.r - 1)?;
        Ok(self.edges_containing(&s).len())
    }

    /// Codegrees of all `(r-1)`-sets with positive codegree, keyed by the sorted set.
    pub fn codegrees(&self) -> HashMap<Vec<u32>, usize> {
        let mut map: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut sub = Vec::with_capacity(self.r - 1);
        for e in self.edges() {
            for skip in 0..self.r {
                sub.clear();
                sub.extend(e.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                *map.entry(sub.clone()).or_insert(0) += 1;
            }
        }
        map
    }

    /// Distinct positive codegree values, ascending.
    pub fn codegree_spectrum(&self) -> Vec<usize> {
        if self.r == 3 && self.n <= 4096 {
            let n = self.n;
            let mut counts = vec![0u32; n * n];
            for e in self.edges() {
                let (a, b, c) = (e[0] as usize, e[1] as usize, e[2] as usize);
                counts[a * n + b] += 1;
                counts[a * n + c] += 1;
                counts[b * n + c] += 1;
            }
            let mut vals: Vec<usize> = counts.into_iter().filter(|&c| c > 0).map(|c| c as usize).collect();
            vals.sort_unstable();
            vals.dedup();
            return vals;
        }
        let mut vals: Vec<usize> = self.codegrees().into_values().collect();
        vals.sort_unstable();
        vals.dedup();
        vals
    }

    /// Minimum positive `(r-1)`-codegree; `None` for an edgeless hypergraph.
    pub fn positive_min_codegree(&self) -> Option<usize> {
        self.codegree_spectrum().first().copied()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &v in &self.flat {
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.degrees();
        DegreeStats {
            min: degrees.iter().copied().min().unwrap_or(0),
            max: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    /// `|H| / C(n, r)` as an exact fraction.
    pub fn edge_density(&self) -> Result<Rational> {
        if self.n < self.r {
            return Err(Error::InvalidParameter(format!(
                "density needs n >= r (n = {}, r = {})",
                self.n, self.r
            )));
        }
        let total = binomial(self.n as u64, self.r as u64);
        Ok(Rational::new(self.len() as i128, total as i128))
    }

    /// Vertices of the `(r-1)`-shadow's `(r-2)`-sets: the distinct `(r-2)`-subsets
    /// of edges, sorted.
    pub fn shadow_sets(&self, size: usize) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for e in self.edges() {
            for idx in crate::combinatorics::Combinations::new(self.r, size) {
                let s: Vec<u32> = idx.iter().map(|&i| e[i]).collect();
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Relabels vertices by `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> Hypergraph {
        assert_eq!(perm.len(), self.n);
        let flat = self.flat.iter().map(|&v| perm[v as usize] as u32).collect();
        Hypergraph::from_flat(self.n, self.r, flat).expect("relabelling preserves validity")
    }

    /// Sub-hypergraph induced on the vertices for which `keep` is true, relabelled
    /// in increasing order.
    pub fn induced(&self, keep: &[bool]) -> Hypergraph {
        let mut new_id = vec![u32::MAX; self.n];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                new_id[v] = next;
                next += 1;
            }
        }
        let mut flat = Vec::new();
        for e in self.edges() {
            if e.iter().all(|&v| keep[v as usize]) {
                flat.extend(e.iter().map(|&v| new_id[v as usize]));
            }
        }
        Hypergraph::from_sorted_flat(next as usize, self.r, flat)
    }

    /// Removes one edge (no-op if absent).
    pub fn without_edge(&self, edge: &[u32]) -> Hypergraph {
        let mut flat = Vec::with_capacity(self.flat.len());
        for e in self.edges() {
            if e != edge {
                flat.extend_from_slice(e);
            }
        }
        Hypergraph::from_sorted_flat(self.n, self.r, flat)
    }

    /// Converts a 2-graph into a [`Graph`].
    pub fn to_graph(&self) -> Result<Graph> {
        if self.r != 2 {
            return Err(Error::UniformityMismatch {
                hypergraph: self.r,
                pattern: 2,
            });
        }
        let mut g = Graph::new(self.n);
        for e in self.edges() {
            g.add_edge(e[0] as usize, e[1] as usize);
        }
        Ok(g)
    }

    pub fn from_graph(g: &Graph) -> Hypergraph {
        let mut flat = Vec::with_capacity(g.edge_count() * 2);
        for (u, v) in g.edges() {
            flat.push(u as u32);
            flat.push(v as u32);
        }
        Hypergraph::from_sorted_flat(g.n(), 2, flat)
    }
}

/// Per-vertex degrees with their extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

/// Blow-up: vertex `v` becomes a class of `sizes[v]` clones occupying the
/// contiguous id range starting at `sizes[0] + ... + sizes[v-1]`.
pub fn blow_up(h: &Hypergraph, sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            got: sizes.len(),
        });
    }
    if let Some(v) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidParameter(format!(
            "class size of vertex {v} must be positive"
        )));
    }
    let mut offset = Vec::with_capacity(sizes.len());
    let mut total = 0usize;
    for &s in sizes {
        offset.push(total);
        total += s;
    }
    let r = h.r();
    let mut flat = Vec::new();
    let mut idx = vec![0usize; r];
    for e in h.edges() {
        // odometer over the product of the classes; ids stay sorted because
        // classes are contiguous and the base edge is sorted
        idx.iter_mut().for_each(|i| *i = 0);
        'product: loop {
            for (k, &v) in e.iter().enumerate() {
                flat.push((offset[v as usize] + idx[k]) as u32);
            }
            let mut k = r;
            loop {
                if k == 0 {
                    break 'product;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < sizes[e[k] as usize] {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    Hypergraph::from_flat(total, r, flat)
}

/// Edge count of the Turán graph T(N, t).
pub fn turan_graph_edges(n: u64, t: u64) -> Result<u64> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let (base, extra) = (n / t, n % t);
    let inside = extra * binomial(base + 1, 2) + (t - extra) * binomial(base, 2);
    Ok(binomial(n, 2) - inside)
}

/// Display helper: a rational as a float.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
