//! Max-cut link partitions, their bad and missing pair sets, and the
//! potentials of the averaging argument, with the identities and
//! inequalities that hold for every input.

mod maxcut;

pub use maxcut::{cross_count, exact_cap, max_cut_partition, CutMode, LinkPartition};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{rat, Rational};

/// Marks the base vertex in [`PartitionAudit::part_of`].
pub const NO_PART: u32 = u32::MAX;

/// The partition of `V \ {x}` maximizing cross edges of `L(x)`, with
/// `B^x` (link edges inside parts) and `M^x` (cross pairs outside the link).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionAudit {
    pub x: usize,
    pub t: usize,
    pub n: usize,
    /// Part of every vertex; `NO_PART` at `x`.
    pub part_of: Vec<u32>,
    pub sizes: Vec<usize>,
    pub link_edges: usize,
    pub cross_edges: usize,
    pub bad: Vec<(usize, usize)>,
    pub missing: Vec<(usize, usize)>,
    pub bad_degree: Vec<u32>,
    pub missing_degree: Vec<u32>,
    pub heuristic: bool,
}

impl PartitionAudit {
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.t];
        for (v, &p) in self.part_of.iter().enumerate() {
            if p != NO_PART {
                parts[p as usize].push(v);
            }
        }
        parts
    }

    /// `x_i = |V_i| / n`.
    pub fn fractions(&self) -> Vec<Rational> {
        self.sizes.iter().map(|&s| rat(s as i128, self.n as i128)).collect()
    }

    /// Number of cross pairs `Σ_{i<j} s_i s_j`.
    pub fn cross_pairs(&self) -> usize {
        let total: usize = self.sizes.iter().sum();
        (total * total - self.sizes.iter().map(|s| s * s).sum::<usize>()) / 2
    }

    pub fn is_consistent(&self) -> bool {
        self.bad.len() + self.cross_edges == self.link_edges
            && self.missing.len() + self.cross_edges == self.cross_pairs()
    }
}

fn require_r3(h: &Hypergraph) -> Result<()> {
    if h.r() != 3 {
        return Err(Error::UniformityMismatch { hypergraph: h.r(), pattern: 3 });
    }
    Ok(())
}

pub fn partition_audit(h: &Hypergraph, x: usize, t: usize, mode: CutMode) -> Result<PartitionAudit> {
    require_r3(h)?;
    let n = h.n();
    let link = h.vertex_link(x)?;
    let others: Vec<usize> = (0..n).filter(|&v| v != x).collect();
    let g = link.induced(&others);
    let cut = max_cut_partition(&g, t, mode)?;
    let mut part_of = vec![NO_PART; n];
    for (i, &v) in others.iter().enumerate() {
        part_of[v] = cut.assignment[i];
    }
    let mut sizes = vec![0; t];
    for &v in &others {
        sizes[part_of[v] as usize] += 1;
    }
    let mut bad = Vec::new();
    let mut missing = Vec::new();
    let mut bad_degree = vec![0; n];
    let mut missing_degree = vec![0; n];
    for (i, &a) in others.iter().enumerate() {
        for &b in &others[i + 1..] {
            let same = part_of[a] == part_of[b];
            let edge = link.has_edge(a, b);
            if same && edge {
                bad.push((a, b));
                bad_degree[a] += 1;
                bad_degree[b] += 1;
            } else if !same && !edge {
                missing.push((a, b));
                missing_degree[a] += 1;
                missing_degree[b] += 1;
            }
        }
    }
    Ok(PartitionAudit {
        x,
        t,
        n,
        part_of,
        sizes,
        link_edges: link.edge_count(),
        cross_edges: cut.cross_edges,
        bad,
        missing,
        bad_degree,
        missing_degree,
        heuristic: cut.heuristic,
    })
}

/// `Σ_i (x_i - 1/t)^2`.
pub fn l2_part_balance(audit: &PartitionAudit) -> Rational {
    let inv_t = rat(1, audit.t as i128);
    audit.fractions().iter().map(|&x| (x - inv_t) * (x - inv_t)).sum()
}

/// The fixed constants of the averaging argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragingConstants {
    pub t: usize,
    /// `1 / (12 t^2)`.
    pub epsilon: Rational,
    pub theta: Rational,
    pub lambda: Rational,
    /// `3Λ + 3 + 10/3`.
    pub k: Rational,
}

impl AveragingConstants {
    pub fn new(t: usize) -> Self {
        let ti = t as i128;
        AveragingConstants {
            t,
            epsilon: rat(1, 12 * ti * ti),
            theta: rat(1, 10_000),
            lambda: rat(5, 3),
            k: rat(34, 3),
        }
    }

    /// `(1 + θ) · 34/36 < 1`.
    pub fn consistent(&self) -> bool {
        let one = Rational::from_integer(1);
        (one + self.theta) * rat(34, 36) < one && self.k == self.lambda * 3 + 3 + rat(10, 3)
    }
}

/// One partition audit per vertex, indexed by vertex.
pub fn audit_all(h: &Hypergraph, t: usize, mode: CutMode) -> Result<Vec<PartitionAudit>> {
    require_r3(h)?;
    h.incidence();
    (0..h.n()).into_par_iter().map(|x| partition_audit(h, x, t, mode)).collect()
}

fn has_triple(h: &Hypergraph, a: usize, b: usize, c: usize) -> bool {
    let mut e = [a as u32, b as u32, c as u32];
    e.sort_unstable();
    h.contains(&e)
}

/// Edges of `L(a)` with both ends in `set`, against `(1 - 1/t) |set|^2 / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranCheck {
    pub a: usize,
    pub set_size: usize,
    pub lhs: usize,
    pub rhs: Rational,
    pub ok: bool,
}

pub fn turan_link_check(h: &Hypergraph, a: usize, set: &[usize], t: usize) -> TuranCheck {
    let mut lhs = 0;
    for (i, &b) in set.iter().enumerate() {
        for &c in &set[i + 1..] {
            if b != a && c != a && has_triple(h, a, b, c) {
                lhs += 1;
            }
        }
    }
    let s = set.len() as i128;
    let rhs = rat((t as i128 - 1) * s * s, 2 * t as i128);
    TuranCheck { a, set_size: set.len(), lhs, rhs, ok: Rational::from_integer(lhs as i128) <= rhs }
}

/// For base `x`, `A = V_i^x`, `B = V_j^x` and every `w ∈ B`:
/// `|P(w) ∩ A| <= d_{M^x}(w) + d_{B^w}(x)` and
/// `|B \ P(w)| <= d_{M^w}(x) + d_{B^x}(w) + 1`, where `P(w)` is the part of
/// `w`'s partition containing `x`.
pub fn local_claims_hold(audits: &[PartitionAudit], x: usize, i: usize, j: usize) -> bool {
    let ax = &audits[x];
    let parts = ax.parts();
    let (a_part, b_part) = (&parts[i], &parts[j]);
    b_part.iter().all(|&w| {
        let aw = &audits[w];
        let px = aw.part_of[x];
        let in_a = a_part.iter().filter(|&&a| aw.part_of[a] == px).count();
        let out_b = b_part.iter().filter(|&&b| aw.part_of[b] != px).count();
        in_a <= (ax.missing_degree[w] + aw.bad_degree[x]) as usize
            && out_b <= (aw.missing_degree[x] + ax.bad_degree[w]) as usize + 1
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalAudit {
    pub n: usize,
    pub t: usize,
    pub constants: AveragingConstants,
    pub heuristic: bool,
    pub phi: Vec<Rational>,
    pub phi_sum: Rational,
    /// `2 Σ_w |M^w| + 2Λ Σ_w |B^w|`.
    pub phi_identity_rhs: Rational,
    pub phi_identity_ok: bool,
    pub x_star: usize,
    pub sizes: Vec<usize>,
    pub p: Vec<u64>,
    pub q: Vec<u64>,
    /// `C[i][j]`, zero on the diagonal.
    pub c: Vec<Vec<u64>>,
    /// `Σ_j (Q_j + ΛP_j)` and its expansion.
    pub pq_lhs: Rational,
    pub pq_rhs: Rational,
    pub pq_expansion_ok: bool,
    /// `Σ_{i≠j} C_{i,j} <= 2 Σ_{w ∈ V_j} |M^w|` for every `j`.
    pub c_row_sum_ok: bool,
    pub i_of_j: Vec<Option<usize>>,
    /// Weighted error `Q_j + (s_j/|V_i|) P_j + C_{i,j}/|V_i|` at `i = i(j)`.
    pub weighted_error: Vec<Option<Rational>>,
    pub chosen_ij: Option<(usize, usize)>,
    /// `T(a)` for every `a ∈ A`.
    pub t_values: Vec<(usize, u64)>,
    pub t_max: Option<(usize, u64)>,
    /// `Σ_a T(a) >= r s (s-1) - s P_j - r Q_j - C_{i,j}`.
    pub t_sum_ok: bool,
    /// `2 |L(a_0)[B]| >= T(a_0)`.
    pub t_link_ok: bool,
    pub local_claims_ok: bool,
    pub turan_check: Option<TuranCheck>,
}

pub const GLOBAL_EXACT_CAP: usize = 64;

pub fn global_audit(h: &Hypergraph, t: usize, consts: &AveragingConstants, mode: CutMode) -> Result<GlobalAudit> {
    require_r3(h)?;
    if mode.is_exact() && h.n() > GLOBAL_EXACT_CAP {
        return Err(Error::CapExceeded {
            what: "exact global audit vertex",
            actual: h.n() as u64,
            limit: GLOBAL_EXACT_CAP as u64,
        });
    }
    let audits = audit_all(h, t, mode)?;
    Ok(global_from_audits(h, t, consts, &audits))
}

pub fn global_from_audits(
    h: &Hypergraph,
    t: usize,
    consts: &AveragingConstants,
    audits: &[PartitionAudit],
) -> GlobalAudit {
    let n = h.n();
    let lambda = consts.lambda;
    let int = |v: u64| Rational::from_integer(v as i128);

    let mut miss_col = vec![0u64; n];
    let mut bad_col = vec![0u64; n];
    for a in audits {
        for z in 0..n {
            miss_col[z] += a.missing_degree[z] as u64;
            bad_col[z] += a.bad_degree[z] as u64;
        }
    }
    let phi: Vec<Rational> = (0..n).map(|z| int(miss_col[z]) + lambda * int(bad_col[z])).collect();
    let phi_sum: Rational = phi.iter().copied().sum();
    let total_m: u64 = audits.iter().map(|a| a.missing.len() as u64).sum();
    let total_b: u64 = audits.iter().map(|a| a.bad.len() as u64).sum();
    let phi_identity_rhs = int(2 * total_m) + lambda * int(2 * total_b);
    let x = (0..n).min_by(|&a, &b| phi[a].cmp(&phi[b]).then(a.cmp(&b))).unwrap_or(0);

    let ax = &audits[x];
    let parts = ax.parts();
    let sizes = ax.sizes.clone();
    let p: Vec<u64> = parts
        .iter()
        .map(|vj| vj.iter().map(|&w| (ax.missing_degree[w] + audits[w].bad_degree[x]) as u64).sum())
        .collect();
    let q: Vec<u64> = parts
        .iter()
        .map(|vj| vj.iter().map(|&w| (audits[w].missing_degree[x] + ax.bad_degree[w]) as u64).sum())
        .collect();
    let mut c = vec![vec![0u64; t]; t];
    for (j, vj) in parts.iter().enumerate() {
        for (i, vi) in parts.iter().enumerate() {
            if i != j {
                c[i][j] = vj
                    .iter()
                    .map(|&w| vi.iter().map(|&a| audits[w].missing_degree[a] as u64).sum::<u64>())
                    .sum();
            }
        }
    }

    let pq_lhs: Rational = (0..t).map(|j| int(q[j]) + lambda * int(p[j])).sum();
    let pq_rhs = lambda * int(2 * ax.missing.len() as u64)
        + int(2 * ax.bad.len() as u64)
        + int(miss_col_at(audits, x))
        + lambda * int(audits.iter().map(|a| a.bad_degree[x] as u64).sum());
    let c_row_sum_ok = (0..t).all(|j| {
        let row: u64 = (0..t).filter(|&i| i != j).map(|i| c[i][j]).sum();
        let cap: u64 = parts[j].iter().map(|&w| 2 * audits[w].missing.len() as u64).sum();
        row <= cap
    });

    let mut i_of_j = vec![None; t];
    let mut weighted_error = vec![None; t];
    for j in 0..t {
        let cost = |i: usize| rat(sizes[j] as i128, sizes[i] as i128) * int(p[j]) + rat(c[i][j] as i128, sizes[i] as i128);
        let best = (0..t)
            .filter(|&i| i != j && sizes[i] > 0)
            .min_by(|&a, &b| cost(a).cmp(&cost(b)).then(a.cmp(&b)));
        if let Some(i) = best {
            i_of_j[j] = Some(i);
            weighted_error[j] = Some(int(q[j]) + cost(i));
        }
    }
    let chosen_ij = (0..t)
        .filter(|&j| sizes[j] > 0)
        .filter_map(|j| {
            let err = weighted_error[j]?;
            let s = sizes[j] as i128;
            Some((err / Rational::from_integer(s * s), j))
        })
        .min()
        .map(|(_, j)| (i_of_j[j].unwrap(), j));

    let mut t_values = Vec::new();
    let mut t_max = None;
    let mut t_sum_ok = true;
    let mut t_link_ok = true;
    let mut local_claims_ok = true;
    let mut turan_check = None;
    if let Some((i, j)) = chosen_ij {
        let (a_set, b_set) = (&parts[i], &parts[j]);
        for &a in a_set {
            let mut total = 0u64;
            for &w in b_set {
                let px = audits[w].part_of[x];
                if audits[w].part_of[a] == px {
                    continue;
                }
                total += b_set.iter().filter(|&&b| b != w && has_triple(h, a, b, w)).count() as u64;
            }
            t_values.push((a, total));
        }
        t_max = t_values.iter().copied().max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
        let (r_, s_) = (a_set.len() as i128, b_set.len() as i128);
        let sum_t: i128 = t_values.iter().map(|&(_, v)| v as i128).sum();
        t_sum_ok = sum_t >= r_ * s_ * (s_ - 1) - s_ * p[j] as i128 - r_ * q[j] as i128 - c[i][j] as i128;
        if let Some((a0, tv)) = t_max {
            let check = turan_link_check(h, a0, b_set, t);
            t_link_ok = 2 * check.lhs as u64 >= tv;
            turan_check = Some(check);
        }
        local_claims_ok = local_claims_hold(audits, x, i, j);
    }

    GlobalAudit {
        n,
        t,
        constants: consts.clone(),
        heuristic: audits.iter().any(|a| a.heuristic),
        phi_identity_ok: phi_sum == phi_identity_rhs,
        phi,
        phi_sum,
        phi_identity_rhs,
        x_star: x,
        sizes,
        p,
        q,
        c,
        pq_expansion_ok: pq_lhs == pq_rhs,
        pq_lhs,
        pq_rhs,
        c_row_sum_ok,
        i_of_j,
        weighted_error,
        chosen_ij,
        t_values,
        t_max,
        t_sum_ok,
        t_link_ok,
        local_claims_ok,
        turan_check,
    }
}

fn miss_col_at(audits: &[PartitionAudit], z: usize) -> u64 {
    audits.iter().map(|a| a.missing_degree[z] as u64).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimRow {
    pub x: usize,
    pub bad: usize,
    pub missing: usize,
    pub bad_ok: bool,
    pub missing_ok: bool,
}

/// `|B^x|` and `|M^x|` against `(1+θ)εn²/2` and `(1+θ)εn²`, reported only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub bad_threshold: Rational,
    pub missing_threshold: Rational,
    pub rows: Vec<ClaimRow>,
    pub all_pass: bool,
    pub heuristic: bool,
}

pub fn claim_bounds(h: &Hypergraph, t: usize, consts: &AveragingConstants, mode: CutMode) -> Result<ClaimReport> {
    let audits = audit_all(h, t, mode)?;
    let n = h.n() as i128;
    let one = Rational::from_integer(1);
    let missing_threshold = (one + consts.theta) * consts.epsilon * Rational::from_integer(n * n);
    let bad_threshold = missing_threshold / 2;
    let rows: Vec<ClaimRow> = audits
        .iter()
        .map(|a| ClaimRow {
            x: a.x,
            bad: a.bad.len(),
            missing: a.missing.len(),
            bad_ok: Rational::from_integer(a.bad.len() as i128) <= bad_threshold,
            missing_ok: Rational::from_integer(a.missing.len() as i128) <= missing_threshold,
        })
        .collect();
    Ok(ClaimReport {
        all_pass: rows.iter().all(|r| r.bad_ok && r.missing_ok),
        heuristic: audits.iter().any(|a| a.heuristic),
        bad_threshold,
        missing_threshold,
        rows,
    })
}
