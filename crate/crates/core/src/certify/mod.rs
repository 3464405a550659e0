//! Certificates for daisy-freeness, link cliques and link partiteness, and
//! the degree conditions used in the codegree argument.
//!
//! Negative verdicts always carry a witness that can be re-validated against
//! the input.

mod clique;
mod coloring;

pub use clique::{find_clique, find_clique_within, is_clique};
pub use coloring::{is_proper_coloring, t_coloring, EXACT_COMPONENT_CAP};

use std::time::Instant;

use rayon::prelude::*;

use crate::combinatorics::Combinations;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::rational::{rat, Rational};

/// The daisy `D_{r,t}`: a `K_t` whose edges are each extended by one fixed
/// `(r-2)`-set of further vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DaisyPattern {
    pub r: usize,
    pub t: usize,
}

impl DaisyPattern {
    pub fn new(r: usize, t: usize) -> Result<Self> {
        if r < 2 || t < 2 {
            return Err(Error::InvalidParameter(format!("daisy needs r >= 2 and t >= 2, got r={r} t={t}")));
        }
        Ok(DaisyPattern { r, t })
    }

    pub fn vertex_count(&self) -> usize {
        self.t + self.r - 2
    }

    pub fn edge_count(&self) -> usize {
        self.t * (self.t - 1) / 2
    }

    /// The pattern itself, suspension on `0..r-2`, clique on the rest.
    pub fn hypergraph(&self) -> Hypergraph {
        let s = self.r - 2;
        let edges: Vec<Vec<usize>> = Combinations::new(self.t, 2)
            .map(|p| (0..s).chain(p.iter().map(|&x| x + s)).collect())
            .collect();
        Hypergraph::from_edges(self.vertex_count(), self.r, &edges).expect("valid pattern")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    DaisyFree,
    LinksCliqueFree,
    LinksTPartite,
    AesPartite,
}

impl Property {
    pub fn id(self) -> &'static str {
        match self {
            Property::DaisyFree => "daisy-free",
            Property::LinksCliqueFree => "links-clique-free",
            Property::LinksTPartite => "links-t-partite",
            Property::AesPartite => "aes-partite",
        }
    }
}

/// Suspension set `S` and clique `C` such that `S ∪ {a, b}` is an edge for all
/// distinct `a, b ∈ C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaisyWitness {
    pub set: Vec<usize>,
    pub clique: Vec<usize>,
}

impl DaisyWitness {
    pub fn validate(&self, h: &Hypergraph) -> bool {
        if self.set.len() + 2 != h.r() || self.clique.iter().any(|v| self.set.contains(v)) {
            return false;
        }
        self.clique.iter().enumerate().all(|(i, &a)| {
            self.clique[i + 1..].iter().all(|&b| {
                let mut e: Vec<u32> = self.set.iter().chain([&a, &b]).map(|&v| v as u32).collect();
                e.sort_unstable();
                e.windows(2).all(|w| w[0] < w[1]) && h.contains(&e)
            })
        })
    }
}

/// A proper colouring (colours `< t`) of the link of `set`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub set: Vec<usize>,
    /// Colour of every vertex id of `H`; vertices outside the link get 0.
    pub coloring: Vec<u32>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CertStats {
    pub sets_checked: usize,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertReport {
    pub property: Property,
    pub r: usize,
    pub t: usize,
    pub verdict: bool,
    /// For daisy-free and clique-free: the least embedding. For partiteness:
    /// a `(t+1)`-clique in the failing link when one exists.
    pub witness: Option<DaisyWitness>,
    /// For partiteness failures: the set whose link has no proper colouring.
    pub failed_set: Option<Vec<usize>>,
    /// For partiteness successes: one certificate per tested set.
    pub certificates: Vec<PartitionCertificate>,
    pub stats: CertStats,
}

fn to_usize(s: &[u32]) -> Vec<usize> {
    s.iter().map(|&v| v as usize).collect()
}

/// `H` is `D_{r,t}`-free iff no `(r-2)`-set has a `K_t` in its link. Only sets
/// of the shadow are examined; the witness is the least `(S, C)` in
/// lexicographic order regardless of scheduling.
pub fn is_daisy_free(h: &Hypergraph, pattern: DaisyPattern) -> Result<CertReport> {
    if pattern.r != h.r() {
        return Err(Error::UniformityMismatch {
            hypergraph: h.r(),
            pattern: pattern.r,
        });
    }
    let start = Instant::now();
    let sets = h.shadow_sets(h.r() - 2);
    h.incidence();
    let hit = sets.par_iter().enumerate().find_map_first(|(i, s)| {
        let s = to_usize(s);
        let g = h.link_graph(&s).expect("shadow set has size r-2");
        find_clique(&g, pattern.t).map(|c| (i, DaisyWitness { set: s, clique: c }))
    });
    let sets_checked = hit.as_ref().map_or(sets.len(), |(i, _)| i + 1);
    Ok(CertReport {
        property: Property::DaisyFree,
        r: h.r(),
        t: pattern.t,
        verdict: hit.is_none(),
        witness: hit.map(|(_, w)| w),
        failed_set: None,
        certificates: Vec::new(),
        stats: CertStats {
            sets_checked,
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

/// Every vertex link of a 3-graph is `K_k`-free; checks all `n` vertices
/// directly, independent of the shadow.
pub fn links_clique_free(h: &Hypergraph, k: usize) -> Result<CertReport> {
    if h.r() != 3 {
        return Err(Error::UniformityMismatch { hypergraph: h.r(), pattern: 3 });
    }
    let start = Instant::now();
    let hit = (0..h.n()).into_par_iter().find_map_first(|v| {
        let g = h.vertex_link(v).expect("r = 3");
        find_clique(&g, k).map(|c| (v, DaisyWitness { set: vec![v], clique: c }))
    });
    Ok(CertReport {
        property: Property::LinksCliqueFree,
        r: 3,
        t: k,
        verdict: hit.is_none(),
        failed_set: None,
        certificates: Vec::new(),
        stats: CertStats {
            sets_checked: hit.as_ref().map_or(h.n(), |(v, _)| v + 1),
            elapsed_ms: start.elapsed().as_millis(),
        },
        witness: hit.map(|(_, w)| w),
    })
}

enum LinkOutcome {
    Coloured(Vec<u32>),
    Failed(Option<Vec<usize>>),
}

/// Every tested link is `t`-colourable. With `setlinks`, all `(r-2)`-sets of
/// the shadow are tested; otherwise all vertex links (needs `r = 3`).
pub fn links_t_partite(h: &Hypergraph, t: usize, setlinks: bool) -> Result<CertReport> {
    if !setlinks && h.r() != 3 {
        return Err(Error::UniformityMismatch { hypergraph: h.r(), pattern: 3 });
    }
    let start = Instant::now();
    let sets: Vec<Vec<usize>> = if setlinks {
        h.shadow_sets(h.r() - 2).iter().map(|s| to_usize(s)).collect()
    } else {
        (0..h.n()).map(|v| vec![v]).collect()
    };
    h.incidence();
    let outcomes: Vec<Result<LinkOutcome>> = sets
        .par_iter()
        .map(|s| {
            let g = h.link_graph(s)?;
            Ok(match t_coloring(&g, t)? {
                Some(c) => LinkOutcome::Coloured(c),
                None => LinkOutcome::Failed(find_clique(&g, t + 1)),
            })
        })
        .collect();
    let mut certificates = Vec::with_capacity(sets.len());
    for (i, (s, out)) in sets.iter().zip(outcomes).enumerate() {
        match out? {
            LinkOutcome::Coloured(c) => certificates.push(PartitionCertificate {
                set: s.clone(),
                coloring: c,
            }),
            LinkOutcome::Failed(clique) => {
                return Ok(CertReport {
                    property: Property::LinksTPartite,
                    r: h.r(),
                    t,
                    verdict: false,
                    witness: clique.map(|c| DaisyWitness { set: s.clone(), clique: c }),
                    failed_set: Some(s.clone()),
                    certificates: Vec::new(),
                    stats: CertStats {
                        sets_checked: i + 1,
                        elapsed_ms: start.elapsed().as_millis(),
                    },
                })
            }
        }
    }
    Ok(CertReport {
        property: Property::LinksTPartite,
        r: h.r(),
        t,
        verdict: true,
        witness: None,
        failed_set: None,
        certificates,
        stats: CertStats {
            sets_checked: sets.len(),
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

/// Exhaustive search for a `D_{r,t}` copy over every `(r-2)`-set and every
/// `t`-set; independent of link extraction. Small inputs only.
pub fn naive_daisy_embedding(h: &Hypergraph, t: usize) -> Option<DaisyWitness> {
    let (n, r) = (h.n(), h.r());
    for s in Combinations::new(n, r - 2) {
        let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
        for c in Combinations::new(rest.len(), t) {
            let w = DaisyWitness {
                set: s.clone(),
                clique: c.iter().map(|&i| rest[i]).collect(),
            };
            if w.validate(h) {
                return Some(w);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AesReport {
    pub t: usize,
    pub m: usize,
    pub cliquefree: bool,
    pub mindeg: usize,
    /// `(3t - 4) m / (3t - 1)`.
    pub threshold: Rational,
    /// `K_{t+1}`-free and minimum degree above the threshold.
    pub conclusion_applies: bool,
    pub partite: bool,
}

impl AesReport {
    /// Hypothesis implies conclusion.
    pub fn theorem_holds(&self) -> bool {
        !self.conclusion_applies || self.partite
    }
}

pub fn aes_check(g: &Graph, t: usize) -> Result<AesReport> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let m = g.n();
    let ti = t as i128;
    let threshold = rat((3 * ti - 4) * m as i128, 3 * ti - 1);
    let cliquefree = find_clique(g, t + 1).is_none();
    let mindeg = g.min_degree();
    let conclusion_applies = cliquefree && Rational::from_integer(mindeg as i128) > threshold;
    let partite = t_coloring(g, t)?.is_some();
    Ok(AesReport { t, m, cliquefree, mindeg, threshold, conclusion_applies, partite })
}

/// `U_v`: vertices `u` with positive codegree `d(uv)`.
pub fn positive_link_support(h: &Hypergraph, v: usize) -> Result<Vec<usize>> {
    Ok(h.vertex_link(v)?.non_isolated())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportRow {
    pub v: usize,
    pub link_edges: usize,
    pub support: usize,
    /// `|U_v| δ⁺ / 2`.
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodegreeEdgeBound {
    pub n: usize,
    pub edges: usize,
    pub nonisolated: usize,
    pub delta_plus: usize,
    /// `α̂³ n³ / (2 ŝ²)` with `α̂ = δ⁺/n`, `ŝ = 1 - 1/t`.
    pub lower: Rational,
    pub rows: Vec<SupportRow>,
    /// `|L(v)| ≥ |U_v| δ⁺ / 2` for every non-isolated `v`.
    pub holds: bool,
}

pub fn codegree_edge_bound(h: &Hypergraph, t: usize) -> Result<CodegreeEdgeBound> {
    if h.r() != 3 {
        return Err(Error::UniformityMismatch { hypergraph: h.r(), pattern: 3 });
    }
    if t < 2 {
        return Err(Error::InvalidParameter("t must be at least 2".into()));
    }
    let delta_plus = h.positive_min_codegree().ok_or(Error::EmptyHypergraph)?;
    let degrees = h.degrees();
    let mut rows = Vec::new();
    for v in (0..h.n()).filter(|&v| degrees[v] > 0) {
        let support = positive_link_support(h, v)?.len();
        rows.push(SupportRow {
            v,
            link_edges: degrees[v],
            support,
            rhs: rat((support * delta_plus) as i128, 2),
        });
    }
    let holds = rows.iter().all(|r| Rational::from_integer(r.link_edges as i128) >= r.rhs);
    let s_hat = rat(t as i128 - 1, t as i128);
    let n = h.n() as i128;
    let alpha = rat(delta_plus as i128, n);
    let lower = alpha * alpha * alpha * Rational::from_integer(n * n * n) / (s_hat * s_hat * 2);
    Ok(CodegreeEdgeBound {
        n: h.n(),
        edges: h.len(),
        nonisolated: rows.len(),
        delta_plus,
        lower,
        rows,
        holds,
    })
}
