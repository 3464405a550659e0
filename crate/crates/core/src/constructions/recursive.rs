//! Iterated blow-up of the non-collinear triple system.

use crate::error::Result;
use crate::hypergraph::{blow_up, Hypergraph};

use super::plane::{noncollinear_edge_count, ProjectivePlane};
use super::Caps;

/// Edge count from `E_1 = |P_q|`, `E_d = |P_q| m^{3(d-1)} + m E_{d-1}`.
pub fn recursive_edge_count(q: u64, depth: u32) -> u128 {
    let base = noncollinear_edge_count(q) as u128;
    let m = (q * q + q + 1) as u128;
    let mut e = base;
    for d in 2..=depth {
        e = base * m.pow(3 * (d - 1)) + m * e;
    }
    e
}

/// `R(1) = P_q`; `R(d)` is the balanced blow-up of `P_q` with classes of size
/// `m^(d-1)`, each class carrying a copy of `R(d-1)`. Class `p` occupies ids
/// `[p m^(d-1), (p+1) m^(d-1))`.
pub fn recursive_blowup(q: u64, depth: u32, caps: &Caps) -> Result<Hypergraph> {
    if depth == 0 {
        return Err(crate::Error::InvalidParameter("depth must be at least 1".into()));
    }
    let plane = ProjectivePlane::new(q)?;
    let m = plane.point_count() as u64;
    let n = m.checked_pow(depth).unwrap_or(u64::MAX);
    caps.check_vertices(n)?;
    caps.check_edges(recursive_edge_count(q, depth).min(u64::MAX as u128) as u64)?;
    let base = plane.noncollinear_hypergraph();
    let mut current = base.clone();
    for _ in 1..depth {
        let class = current.n();
        let outer = blow_up(&base, &vec![class; base.n()])?;
        let mut flat = outer.flat_edges().to_vec();
        flat.reserve(current.flat_edges().len() * base.n());
        for p in 0..base.n() {
            let shift = (p * class) as u32;
            flat.extend(current.flat_edges().iter().map(|&v| v + shift));
        }
        current = Hypergraph::from_flat(class * base.n(), 3, flat)?;
    }
    Ok(current)
}
