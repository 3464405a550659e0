//! JSON and CSV renderings. Rationals are `"p/q"` strings with a separate
//! decimal display field.

use std::path::Path;

use serde_json::{json, Value};

use daisylab::audit::{ClaimReport, CutMode, GlobalAudit, PartitionAudit};
use daisylab::certify::{CertReport, CodegreeEdgeBound};
use daisylab::constructions::{BoundsTable, ConstructionLabel};
use daisylab::rational::{to_decimal, to_fraction_string};
use daisylab::search::SearchResult;
use daisylab::{Hypergraph, Rational};

pub fn frac(x: &Rational) -> Value {
    Value::String(to_fraction_string(x))
}

pub fn frac_pair(x: &Rational) -> Value {
    json!({"value": to_fraction_string(x), "decimal": to_decimal(x)})
}

fn mode_json(mode: CutMode) -> Value {
    match mode {
        CutMode::Exact => json!({"mode": "exact"}),
        CutMode::Heuristic { seed } => json!({"mode": "heuristic", "seed": seed}),
    }
}

fn density(h: &Hypergraph) -> Value {
    h.edge_density().map_or(Value::Null, |d| frac_pair(&d))
}

pub fn construct_json(label: &ConstructionLabel, h: &Hypergraph, out: Option<&Path>) -> daisylab::Result<Value> {
    Ok(json!({
        "family": label.family.id(),
        "params": {
            "q": label.q,
            "r": label.r,
            "depth": label.depth,
            "N": label.n_class,
        },
        "n": h.n(),
        "r": h.r(),
        "edges": h.len(),
        "density": density(h),
        "output": out.map(|p| p.display().to_string()),
    }))
}

pub fn cert_json(rep: &CertReport, params: Value, with_certificates: bool) -> Value {
    let witness = rep
        .witness
        .as_ref()
        .map_or(Value::Null, |w| json!({"S": w.set, "clique": w.clique}));
    let mut v = json!({
        "property": rep.property.id(),
        "params": params,
        "verdict": rep.verdict,
        "witness": witness,
        "failed_set": rep.failed_set,
        "certificates": rep.certificates.len(),
        "stats": {
            "sets_checked": rep.stats.sets_checked,
            "elapsed_ms": rep.stats.elapsed_ms as u64,
        },
    });
    if with_certificates {
        v["colorings"] = rep
            .certificates
            .iter()
            .map(|c| json!({"S": c.set, "coloring": c.coloring}))
            .collect();
    }
    v
}

pub fn stats_json(h: &Hypergraph, bound: Option<&CodegreeEdgeBound>) -> daisylab::Result<Value> {
    let deg = h.degree_stats();
    let bound = bound.map_or(Value::Null, |b| {
        json!({
            "nonisolated": b.nonisolated,
            "delta_plus": b.delta_plus,
            "lower": frac_pair(&b.lower),
            "holds": b.holds,
            "rows": b.rows.iter().map(|r| json!({
                "v": r.v,
                "link_edges": r.link_edges,
                "support": r.support,
                "rhs": frac(&r.rhs),
            })).collect::<Vec<_>>(),
        })
    });
    Ok(json!({
        "n": h.n(),
        "r": h.r(),
        "edges": h.len(),
        "density": density(h),
        "degree_min": deg.min,
        "degree_max": deg.max,
        "degrees": deg.degrees,
        "delta_plus": h.positive_min_codegree(),
        "codegree_spectrum": h.codegree_spectrum(),
        "codegree_bound": bound,
    }))
}

pub fn stats_csv(h: &Hypergraph) -> daisylab::Result<String> {
    let mut out = String::from("vertex,degree\n");
    for (v, d) in h.degrees().iter().enumerate() {
        out.push_str(&format!("{v},{d}\n"));
    }
    Ok(out)
}

pub fn partition_json(a: &PartitionAudit, mode: CutMode) -> Value {
    json!({
        "x": a.x,
        "t": a.t,
        "n": a.n,
        "cut": mode_json(mode),
        "heuristic": a.heuristic,
        "parts": a.parts(),
        "sizes": a.sizes,
        "fractions": a.fractions().iter().map(frac).collect::<Vec<_>>(),
        "l2_balance": frac_pair(&daisylab::audit::l2_part_balance(a)),
        "link_edges": a.link_edges,
        "cross_edges": a.cross_edges,
        "bad": a.bad,
        "missing": a.missing,
        "consistent": a.is_consistent(),
    })
}

pub fn audit_json(g: &GlobalAudit, claims: Option<&ClaimReport>, mode: CutMode) -> Value {
    let turan = g.turan_check.as_ref().map_or(Value::Null, |c| {
        json!({"a": c.a, "set_size": c.set_size, "lhs": c.lhs, "rhs": frac(&c.rhs), "ok": c.ok})
    });
    let claims = claims.map_or(Value::Null, |c| {
        json!({
            "bad_threshold": frac_pair(&c.bad_threshold),
            "missing_threshold": frac_pair(&c.missing_threshold),
            "all_pass": c.all_pass,
            "rows": c.rows.iter().map(|r| json!({
                "x": r.x, "bad": r.bad, "missing": r.missing,
                "bad_ok": r.bad_ok, "missing_ok": r.missing_ok,
            })).collect::<Vec<_>>(),
        })
    });
    json!({
        "n": g.n,
        "t": g.t,
        "cut": mode_json(mode),
        "heuristic": g.heuristic,
        "lambda": frac(&g.constants.lambda),
        "epsilon": frac(&g.constants.epsilon),
        "theta": frac(&g.constants.theta),
        "K": frac(&g.constants.k),
        "phi": g.phi.iter().map(frac).collect::<Vec<_>>(),
        "phi_identity": {"lhs": frac(&g.phi_sum), "rhs": frac(&g.phi_identity_rhs), "ok": g.phi_identity_ok},
        "x_star": g.x_star,
        "sizes": g.sizes,
        "P": g.p,
        "Q": g.q,
        "C": g.c,
        "pq_expansion": {"lhs": frac(&g.pq_lhs), "rhs": frac(&g.pq_rhs), "ok": g.pq_expansion_ok},
        "c_row_sum_ok": g.c_row_sum_ok,
        "i_of_j": g.i_of_j,
        "chosen_ij": g.chosen_ij.map(|(i, j)| vec![i, j]),
        "T": g.t_values.iter().map(|&(a, v)| json!({"a": a, "T": v})).collect::<Vec<_>>(),
        "T_max": g.t_max.map(|(a, v)| json!({"a": a, "T": v})),
        "t_sum_ok": g.t_sum_ok,
        "t_link_ok": g.t_link_ok,
        "local_claims_ok": g.local_claims_ok,
        "turan_check": turan,
        "claims": claims,
    })
}

pub fn search_json(res: &SearchResult, oracle: Value) -> Value {
    json!({
        "mode": res.mode.id(),
        "n": res.n,
        "params": {"r": res.mode.r(), "t": res.mode.t()},
        "optimum": res.optimum,
        "complete": res.complete,
        "extremal": res.extremal.iter().map(|h| h.edges().map(|e| e.to_vec()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "nodes": res.nodes,
        "elapsed_ms": res.elapsed_ms as u64,
        "oracle": oracle,
    })
}

pub fn bounds_json(b: &BoundsTable) -> Value {
    json!({
        "t": b.t,
        "r": b.r,
        "t_minus_1_prime_power": b.t_minus_1_prime_power,
        "link_lower": frac_pair(&b.link_lower),
        "link_upper": frac_pair(&b.link_upper),
        "codeg_lower": b.codeg_lower.as_ref().map(frac_pair),
        "codeg_upper": frac_pair(&b.codeg_upper),
    })
}

pub fn bounds_csv(b: &BoundsTable) -> String {
    let mut out = String::from("quantity,value,decimal\n");
    let mut row = |name: &str, x: &Rational| {
        out.push_str(&format!("{name},{},{}\n", to_fraction_string(x), to_decimal(x)));
    };
    row("link_lower", &b.link_lower);
    row("link_upper", &b.link_upper);
    if let Some(c) = &b.codeg_lower {
        row("codeg_lower", c);
    }
    row("codeg_upper", &b.codeg_upper);
    out
}
