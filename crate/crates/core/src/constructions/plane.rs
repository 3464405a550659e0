//! The Desarguesian projective plane PG(2, q) and the non-collinear triple system.

use crate::error::Result;
use crate::field::{FiniteField, GfVector};
use crate::hypergraph::Hypergraph;

/// PG(2, q): points and lines are the 1-dimensional subspaces of GF(q)^3,
/// each represented by its vector with first nonzero coordinate 1. Points are
/// numbered by the integer code of that vector; lines likewise by their dual
/// vector. A point lies on a line when their dot product vanishes.
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    field: FiniteField,
    points: Vec<GfVector>,
    line_vectors: Vec<GfVector>,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    pair_line: Vec<u32>,
}

fn normalized_vectors(field: &FiniteField) -> Vec<GfVector> {
    let q = field.order();
    (1..(q as u64).pow(3))
        .map(|code| GfVector::decode(code, q, 3))
        .filter(|v| v.coords.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

impl ProjectivePlane {
    pub fn new(q: u64) -> Result<Self> {
        let field = FiniteField::with_order(q)?;
        let points = normalized_vectors(&field);
        let line_vectors = points.clone();
        let m = points.len();
        let mut lines = vec![Vec::new(); m];
        let mut point_lines = vec![Vec::new(); m];
        for (l, lv) in line_vectors.iter().enumerate() {
            for (p, pv) in points.iter().enumerate() {
                if lv.dot(&field, pv) == 0 {
                    lines[l].push(p);
                    point_lines[p].push(l);
                }
            }
        }
        let mut pair_line = vec![u32::MAX; m * m];
        for (l, pts) in lines.iter().enumerate() {
            for &a in pts {
                for &b in pts {
                    if a != b {
                        pair_line[a * m + b] = l as u32;
                    }
                }
            }
        }
        Ok(ProjectivePlane {
            field,
            points,
            line_vectors,
            lines,
            point_lines,
            pair_line,
        })
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Number of points (`q^2 + q + 1`).
    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[GfVector] {
        &self.points
    }

    pub fn line_vectors(&self) -> &[GfVector] {
        &self.line_vectors
    }

    /// Point ids on each line, ascending.
    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Line ids through each point, ascending.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    /// The line through two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> usize {
        assert_ne!(a, b);
        self.pair_line[a * self.points.len() + b] as usize
    }

    pub fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        self.lines[self.line_through(a, b)].binary_search(&c).is_ok()
    }

    /// Exhaustively verifies the incidence axioms; returns the first violation.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let q = self.order() as usize;
        let m = q * q + q + 1;
        if self.points.len() != m || self.lines.len() != m {
            return Err(format!(
                "expected {m} points and lines, got {} and {}",
                self.points.len(),
                self.lines.len()
            ));
        }
        if let Some((l, pts)) = self.lines.iter().enumerate().find(|(_, p)| p.len() != q + 1) {
            return Err(format!("line {l} has {} points", pts.len()));
        }
        if let Some((p, ls)) = self
            .point_lines
            .iter()
            .enumerate()
            .find(|(_, l)| l.len() != q + 1)
        {
            return Err(format!("point {p} is on {} lines", ls.len()));
        }
        for a in 0..m {
            for b in a + 1..m {
                let common = self.point_lines[a]
                    .iter()
                    .filter(|l| self.point_lines[b].binary_search(l).is_ok())
                    .count();
                if common != 1 {
                    return Err(format!("points {a}, {b} share {common} lines"));
                }
            }
        }
        Ok(())
    }

    /// The 3-graph of non-collinear point triples.
    pub fn noncollinear_hypergraph(&self) -> Hypergraph {
        let m = self.points.len();
        let mut flat = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let line = &self.lines[self.line_through(a, b)];
                for c in b + 1..m {
                    if line.binary_search(&c).is_err() {
                        flat.extend([a as u32, b as u32, c as u32]);
                    }
                }
            }
        }
        Hypergraph::from_sorted_flat(m, 3, flat)
    }
}

/// Closed form `q^3 (q + 1) (q^2 + q + 1) / 6` for the non-collinear triple count.
pub fn noncollinear_edge_count(q: u64) -> u64 {
    q.pow(3) * (q + 1) * (q * q + q + 1) / 6
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::binomial;

    #[test]
    fn small_planes() {
        for (q, m) in [(2u64, 7usize), (3, 13), (4, 21), (5, 31)] {
            let pg = ProjectivePlane::new(q).unwrap();
            assert_eq!(pg.point_count(), m);
            assert_eq!(pg.lines()[0].len(), q as usize + 1);
            pg.check_axioms().unwrap();
        }
        assert!(ProjectivePlane::new(6).is_err());
    }

    #[test]
    fn triple_counts_match_both_formulas() {
        for q in 2..=5u64 {
            let pg = ProjectivePlane::new(q).unwrap();
            let m = pg.point_count() as u64;
            let h = pg.noncollinear_hypergraph();
            assert_eq!(h.len() as u64, noncollinear_edge_count(q));
            assert_eq!(h.len() as u64, binomial(m, 3) - m * binomial(q + 1, 3));
        }
        assert_eq!(noncollinear_edge_count(2), 28);
        assert_eq!(noncollinear_edge_count(3), 234);
    }

    #[test]
    fn points_are_normalized_and_sorted() {
        let pg = ProjectivePlane::new(3).unwrap();
        let codes: Vec<u64> = pg.points().iter().map(|p| p.encode(3)).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(pg.points()[0].coords, vec![0, 0, 1]);
    }
}
