//! `daisylab` command-line workbench.
//!
//! Exit codes: 0 success (certify: property holds), 1 negative verdict or
//! failed check, 2 usage, input or cap errors.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use daisylab::audit::{self, AveragingConstants, CutMode};
use daisylab::certify::{self, DaisyPattern};
use daisylab::constructions::{bounds_table, Caps, ConstructionLabel, Family};
use daisylab::hgf;
use daisylab::search::{self, Mode, SearchProblem};
use daisylab::{Error, Hypergraph};

use report::*;

#[derive(Parser)]
#[command(name = "daisylab", version, about = "Daisy-free hypergraph workbench")]
struct Cli {
    /// Worker threads for parallel certification, audits and search.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction and write it as HGF.
    Construct(ConstructArgs),
    /// Certify daisy-freeness or link properties of an HGF file.
    Certify(CertifyArgs),
    /// Degrees, codegrees and density of an HGF file.
    Stats(StatsArgs),
    /// Max-cut partition audit of one vertex link.
    Partition(PartitionArgs),
    /// Potentials and identities over all vertex links.
    Audit(AuditArgs),
    /// Exact Turán number by exhaustive search.
    Search(SearchArgs),
    /// Exact values of the density bounds.
    Formulas(FormulasArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Hgf,
}

#[derive(Clone, Copy, ValueEnum)]
enum CutModeArg {
    Exact,
    Heuristic,
}

#[derive(Args)]
struct ConstructArgs {
    /// pg-noncollinear | pg-recursive | gf-independent | gf-blowup
    #[arg(long)]
    family: String,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    depth: Option<u32>,
    /// Class size of the balanced blow-up.
    #[arg(long = "N")]
    n_class: Option<usize>,
    /// Output path; HGF goes to stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "hgf")]
    format: Format,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    max_edges: Option<u64>,
}

#[derive(Args)]
struct CertifyArgs {
    file: PathBuf,
    /// Pattern `r,t` for D_{r,t}-freeness.
    #[arg(long, value_parser = parse_pair, conflicts_with_all = ["links_partite", "links_clique"])]
    daisy: Option<(usize, usize)>,
    /// Every link is t-colourable.
    #[arg(long, conflicts_with = "links_clique")]
    links_partite: Option<usize>,
    /// Every vertex link is K_k-free (3-graphs).
    #[arg(long)]
    links_clique: Option<usize>,
    /// Test links of all (r-2)-sets instead of vertex links.
    #[arg(long)]
    setlinks: bool,
    /// Include colourings in the report.
    #[arg(long)]
    certificates: bool,
}

#[derive(Args)]
struct StatsArgs {
    file: PathBuf,
    /// Evaluate the codegree edge-count chain for this t.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PartitionArgs {
    file: PathBuf,
    #[arg(long)]
    x: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, value_enum, default_value = "exact")]
    mode: CutModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct AuditArgs {
    file: PathBuf,
    #[arg(long)]
    t: usize,
    #[arg(long, value_enum, default_value = "exact")]
    mode: CutModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also report |B^x|, |M^x| against their thresholds.
    #[arg(long)]
    claims: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchModeArg {
    Daisy,
    LinkPartite,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    mode: SearchModeArg,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    n: usize,
    /// Cross-check against exhaustive enumeration when in range.
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = search::DEFAULT_NODE_CAP)]
    node_cap: u64,
    /// Report only the first extremal class.
    #[arg(long)]
    first_only: bool,
}

#[derive(Args)]
struct FormulasArgs {
    #[arg(long)]
    t: u64,
    #[arg(long, default_value_t = 3)]
    r: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `r,t`, got `{s}`"))?;
    let a = a.trim().parse().map_err(|_| format!("bad r in `{s}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad t in `{s}`"))?;
    Ok((a, b))
}

/// A command's machine-readable output plus its exit status.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn json(value: Value, ok: bool) -> Self {
        Outcome {
            text: serde_json::to_string_pretty(&value).expect("serializable") + "\n",
            ok,
        }
    }
}

fn cut_mode(mode: CutModeArg, seed: u64) -> CutMode {
    match mode {
        CutModeArg::Exact => CutMode::Exact,
        CutModeArg::Heuristic => CutMode::Heuristic { seed },
    }
}

fn load(path: &std::path::Path) -> daisylab::Result<Hypergraph> {
    Ok(hgf::read_file(path)?.hypergraph)
}

fn construct(a: &ConstructArgs) -> daisylab::Result<Outcome> {
    let label = ConstructionLabel {
        family: Family::parse(&a.family)?,
        q: a.q,
        r: a.r,
        depth: a.depth,
        n_class: a.n_class,
    };
    let mut caps = Caps::from_env()?;
    if let Some(v) = a.max_vertices {
        caps.max_vertices = v;
    }
    if let Some(e) = a.max_edges {
        caps.max_edges = e;
    }
    let h = label.build(&caps)?;
    let text = hgf::write(&h, &label.comments());
    let summary = construct_json(&label, &h, a.out.as_deref())?;
    match (&a.out, a.format) {
        (Some(path), _) => {
            std::fs::write(path, &text)
                .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::json(summary, true))
        }
        (None, Format::Hgf) => Ok(Outcome { text, ok: true }),
        (None, Format::Json) => Ok(Outcome::json(summary, true)),
        (None, Format::Csv) => Err(Error::InvalidParameter("construct supports hgf or json output".into())),
    }
}

fn certify_cmd(a: &CertifyArgs) -> daisylab::Result<Outcome> {
    let h = load(&a.file)?;
    let (rep, params) = if let Some((r, t)) = a.daisy {
        (certify::is_daisy_free(&h, DaisyPattern::new(r, t)?)?, json!({"r": r, "t": t}))
    } else if let Some(t) = a.links_partite {
        (certify::links_t_partite(&h, t, a.setlinks)?, json!({"r": h.r(), "t": t, "setlinks": a.setlinks}))
    } else if let Some(k) = a.links_clique {
        (certify::links_clique_free(&h, k)?, json!({"r": h.r(), "k": k}))
    } else {
        return Err(Error::InvalidParameter(
            "choose one of --daisy, --links-partite, --links-clique".into(),
        ));
    };
    let ok = rep.verdict;
    Ok(Outcome::json(cert_json(&rep, params, a.certificates), ok))
}

fn stats(a: &StatsArgs) -> daisylab::Result<Outcome> {
    let h = load(&a.file)?;
    let bound = match a.t {
        Some(t) if h.r() == 3 && !h.is_empty() => Some(certify::codegree_edge_bound(&h, t)?),
        _ => None,
    };
    let value = stats_json(&h, bound.as_ref())?;
    match a.format {
        Format::Json => Ok(Outcome::json(value, bound.as_ref().is_none_or(|b| b.holds))),
        Format::Csv => Ok(Outcome { text: stats_csv(&h)?, ok: true }),
        Format::Hgf => Err(Error::InvalidParameter("stats supports json or csv output".into())),
    }
}

fn partition(a: &PartitionArgs) -> daisylab::Result<Outcome> {
    let h = load(&a.file)?;
    if a.x >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: a.x, n: h.n() });
    }
    let mode = cut_mode(a.mode, a.seed);
    let audit = audit::partition_audit(&h, a.x, a.t, mode)?;
    let ok = audit.is_consistent();
    Ok(Outcome::json(partition_json(&audit, mode), ok))
}

fn audit_cmd(a: &AuditArgs) -> daisylab::Result<Outcome> {
    let h = load(&a.file)?;
    let mode = cut_mode(a.mode, a.seed);
    let consts = AveragingConstants::new(a.t);
    let g = audit::global_audit(&h, a.t, &consts, mode)?;
    let claims = if a.claims {
        Some(audit::claim_bounds(&h, a.t, &consts, mode)?)
    } else {
        None
    };
    let ok = g.phi_identity_ok
        && g.pq_expansion_ok
        && g.c_row_sum_ok
        && g.t_sum_ok
        && g.t_link_ok
        && g.local_claims_ok;
    Ok(Outcome::json(audit_json(&g, claims.as_ref(), mode), ok))
}

fn search_cmd(a: &SearchArgs) -> daisylab::Result<Outcome> {
    let mode = match a.mode {
        SearchModeArg::Daisy => Mode::Daisy { r: a.r, t: a.t },
        SearchModeArg::LinkPartite => {
            if a.r != 3 {
                return Err(Error::InvalidParameter("link-partite mode needs r = 3".into()));
            }
            Mode::LinkPartite { t: a.t }
        }
    };
    let mut prob = SearchProblem::new(a.n, mode);
    prob.node_cap = a.node_cap;
    prob.report_all = !a.first_only;
    let res = search::turan_number(&prob)?;
    let mut oracle = Value::Null;
    let mut ok = res.complete;
    if a.oracle {
        oracle = match search::naive_oracle(&prob) {
            Ok(v) => {
                ok &= v == res.optimum;
                json!({"optimum": v, "agree": v == res.optimum})
            }
            Err(Error::CapExceeded { .. }) => json!({"skipped": "out of oracle range"}),
            Err(e) => return Err(e),
        };
    }
    Ok(Outcome::json(search_json(&res, oracle), ok))
}

fn formulas(a: &FormulasArgs) -> daisylab::Result<Outcome> {
    if a.t < 2 || a.r < 3 {
        return Err(Error::InvalidParameter("formulas need t >= 2 and r >= 3".into()));
    }
    let b = bounds_table(a.t, a.r);
    match a.format {
        Format::Json => Ok(Outcome::json(bounds_json(&b), true)),
        Format::Csv => Ok(Outcome { text: bounds_csv(&b), ok: true }),
        Format::Hgf => Err(Error::InvalidParameter("formulas supports json or csv output".into())),
    }
}

fn run(cli: &Cli) -> daisylab::Result<Outcome> {
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Certify(a) => certify_cmd(a),
        Command::Stats(a) => stats(a),
        Command::Partition(a) => partition(a),
        Command::Audit(a) => audit_cmd(a),
        Command::Search(a) => search_cmd(a),
        Command::Formulas(a) => formulas(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
