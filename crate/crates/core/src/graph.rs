//! Simple graphs with bitset adjacency.

use crate::bitset::Bitset;

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Bitset>,
    edges: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Bitset::new(n); n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete multipartite graph with parts of the given sizes, parts laid
    /// out as contiguous id ranges.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n = sizes.iter().sum();
        let mut part = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, s));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// The Turán graph T(n, t): balanced complete t-partite.
    pub fn turan(n: usize, t: usize) -> Self {
        assert!(t >= 1);
        let sizes: Vec<usize> = (0..t).map(|i| n / t + usize::from(i < n % t)).collect();
        Graph::complete_multipartite(&sizes)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Adds `uv`; returns false if it was already present. Loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loops are not allowed");
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.edges -= 1;
        true
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn non_isolated(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &Bitset) -> usize {
        set.iter()
            .map(|u| self.adj[u].intersection_count(set))
            .sum::<usize>()
            / 2
    }

    /// Connected components over the given vertex set, each sorted ascending,
    /// ordered by least vertex.
    pub fn components(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let allowed = Bitset::from_items(n, vertices.iter().copied());
        let mut seen = Bitset::new(n);
        let mut out = Vec::new();
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for &s in &sorted {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.adj[u].iter() {
                    if allowed.contains(v) && !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}
