//! Lower-bound constructions: non-collinear triples of PG(2, q), their
//! recursive blow-up, the linear-independence r-graphs over GF(q) and their
//! balanced blow-ups, plus the exact bound formulas.

mod bounds;
mod gf;
mod plane;
mod recursive;

pub use bounds::{bounds_table, BoundsTable};
pub use gf::{
    balanced_blowup_gf, blowup_codegree, gf_independent_edge_count, gf_independent_hypergraph,
    gf_link_partition, vertex_vector,
};
pub use plane::{noncollinear_edge_count, ProjectivePlane};
pub use recursive::{recursive_blowup, recursive_edge_count};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_MAX_VERTICES: usize = 400;
pub const DEFAULT_MAX_EDGES: u64 = 10_000_000;

/// Size limits for generated hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_vertices: usize,
    pub max_edges: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Caps {
            max_vertices: usize::MAX,
            max_edges: u64::MAX,
        }
    }

    /// Defaults overridden by `DAISYLAB_MAX_VERTICES` / `DAISYLAB_MAX_EDGES`.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var("DAISYLAB_MAX_VERTICES") {
            caps.max_vertices = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("DAISYLAB_MAX_VERTICES={v}")))?;
        }
        if let Ok(v) = std::env::var("DAISYLAB_MAX_EDGES") {
            caps.max_edges = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("DAISYLAB_MAX_EDGES={v}")))?;
        }
        Ok(caps)
    }

    pub fn check_vertices(&self, n: u64) -> Result<()> {
        if n > self.max_vertices as u64 {
            return Err(Error::CapExceeded {
                what: "vertex",
                actual: n,
                limit: self.max_vertices as u64,
            });
        }
        Ok(())
    }

    pub fn check_edges(&self, e: u64) -> Result<()> {
        if e > self.max_edges {
            return Err(Error::CapExceeded {
                what: "edge",
                actual: e,
                limit: self.max_edges,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    PgNoncollinear,
    PgRecursive,
    GfIndependent,
    GfBlowup,
}

impl Family {
    pub fn id(self) -> &'static str {
        match self {
            Family::PgNoncollinear => "pg-noncollinear",
            Family::PgRecursive => "pg-recursive",
            Family::GfIndependent => "gf-independent",
            Family::GfBlowup => "gf-blowup",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "pg-noncollinear" => Ok(Family::PgNoncollinear),
            "pg-recursive" => Ok(Family::PgRecursive),
            "gf-independent" => Ok(Family::GfIndependent),
            "gf-blowup" => Ok(Family::GfBlowup),
            _ => Err(Error::InvalidParameter(format!("unknown family `{s}`"))),
        }
    }
}

/// A family plus the parameters it uses; unused ones are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionLabel {
    pub family: Family,
    pub q: u64,
    pub r: Option<usize>,
    pub depth: Option<u32>,
    pub n_class: Option<usize>,
}

impl ConstructionLabel {
    pub fn pg_noncollinear(q: u64) -> Self {
        ConstructionLabel { family: Family::PgNoncollinear, q, r: None, depth: None, n_class: None }
    }

    pub fn pg_recursive(q: u64, depth: u32) -> Self {
        ConstructionLabel { family: Family::PgRecursive, q, r: None, depth: Some(depth), n_class: None }
    }

    pub fn gf_independent(r: usize, q: u64) -> Self {
        ConstructionLabel { family: Family::GfIndependent, q, r: Some(r), depth: None, n_class: None }
    }

    pub fn gf_blowup(r: usize, q: u64, n_class: usize) -> Self {
        ConstructionLabel { family: Family::GfBlowup, q, r: Some(r), depth: None, n_class: Some(n_class) }
    }

    /// Rejects missing parameters for the family.
    pub fn validate(&self) -> Result<()> {
        let missing = |what: &str| Error::InvalidParameter(format!("{} needs --{what}", self.family.id()));
        match self.family {
            Family::PgNoncollinear => Ok(()),
            Family::PgRecursive => self.depth.map(|_| ()).ok_or_else(|| missing("depth")),
            Family::GfIndependent => self.r.map(|_| ()).ok_or_else(|| missing("r")),
            Family::GfBlowup => {
                self.r.ok_or_else(|| missing("r"))?;
                self.n_class.map(|_| ()).ok_or_else(|| missing("N"))
            }
        }
    }

    pub fn parameter_string(&self) -> String {
        let mut s = format!("q={}", self.q);
        if let Some(r) = self.r {
            s.push_str(&format!(" r={r}"));
        }
        if let Some(d) = self.depth {
            s.push_str(&format!(" depth={d}"));
        }
        if let Some(n) = self.n_class {
            s.push_str(&format!(" N={n}"));
        }
        s
    }

    /// Comment lines written into the HGF header.
    pub fn comments(&self) -> Vec<String> {
        vec![
            format!("family: {}", self.family.id()),
            format!("params: {}", self.parameter_string()),
            format!("tool: daisylab {}", env!("CARGO_PKG_VERSION")),
        ]
    }

    pub fn build(&self, caps: &Caps) -> Result<Hypergraph> {
        self.validate()?;
        match self.family {
            Family::PgNoncollinear => {
                let plane = ProjectivePlane::new(self.q)?;
                caps.check_vertices(plane.point_count() as u64)?;
                caps.check_edges(noncollinear_edge_count(self.q))?;
                Ok(plane.noncollinear_hypergraph())
            }
            Family::PgRecursive => recursive_blowup(self.q, self.depth.unwrap_or(1), caps),
            Family::GfIndependent => gf_independent_hypergraph(self.r.unwrap_or(3), self.q, caps),
            Family::GfBlowup => {
                balanced_blowup_gf(self.r.unwrap_or(3), self.q, self.n_class.unwrap_or(1), caps)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn two_q2_constructions_coincide() {
        let p = ConstructionLabel::pg_noncollinear(2).build(&Caps::default()).unwrap();
        let b = ConstructionLabel::gf_independent(3, 2).build(&Caps::default()).unwrap();
        assert!(are_isomorphic(&p, &b));
    }

    #[test]
    fn blowup_codegree_dichotomy() {
        for (r, q, n) in [(3usize, 2u64, 5usize), (3, 3, 2), (4, 2, 2)] {
            let h = balanced_blowup_gf(r, q, n, &Caps::default()).unwrap();
            let d = blowup_codegree(r as u32, q, n as u64) as usize;
            assert_eq!(h.positive_min_codegree(), Some(d));
            assert!(h.codegrees().values().all(|&c| c == d));
            assert_eq!(h.n(), (q.pow(r as u32) as usize - 1) * n);
        }
    }

    #[test]
    fn labels_and_comments() {
        let l = ConstructionLabel::gf_blowup(3, 2, 5);
        assert_eq!(l.comments()[0], "family: gf-blowup");
        assert_eq!(l.comments()[1], "params: q=2 r=3 N=5");
        assert_eq!(Family::parse("pg-recursive").unwrap(), Family::PgRecursive);
        assert!(Family::parse("nope").is_err());
        let bad = ConstructionLabel { depth: None, ..ConstructionLabel::pg_recursive(2, 1) };
        assert!(bad.build(&Caps::default()).is_err());
    }

    #[test]
    fn point_links_are_line_partitions() {
        let pg = ProjectivePlane::new(2).unwrap();
        let h = pg.noncollinear_hypergraph();
        for v in 0..7 {
            let link = h.vertex_link(v).unwrap();
            assert_eq!(link.edge_count(), 12);
            for (a, b) in link.edges() {
                assert_ne!(pg.line_through(v, a), pg.line_through(v, b));
            }
        }
    }
}
