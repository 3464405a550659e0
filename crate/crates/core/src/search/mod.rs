//! Exact Turán numbers of small generalized daisies and of the link
//! t-partite property, by orderly generation with branch-and-bound.

mod engine;
mod oracle;

pub use oracle::{naive_oracle, naive_oracle_sets, ORACLE_MAX_EDGES};

use std::sync::atomic::{AtomicBool, AtomicU64};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

use engine::{Node, Outcome, Searcher, Universe};

/// The property every hypergraph in the search must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// No copy of `D_{r,t}`.
    Daisy { r: usize, t: usize },
    /// Every vertex link of a 3-graph is `t`-colourable.
    LinkPartite { t: usize },
}

impl Mode {
    pub fn r(&self) -> usize {
        match *self {
            Mode::Daisy { r, .. } => r,
            Mode::LinkPartite { .. } => 3,
        }
    }

    pub fn t(&self) -> usize {
        match *self {
            Mode::Daisy { t, .. } | Mode::LinkPartite { t } => t,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            Mode::Daisy { .. } => "daisy",
            Mode::LinkPartite { .. } => "link-partite",
        }
    }
}

pub const DEFAULT_NODE_CAP: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchProblem {
    pub n: usize,
    pub mode: Mode,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Nodes allowed per vertex count before the result is marked incomplete.
    pub node_cap: u64,
    pub report_all: bool,
}

impl SearchProblem {
    pub fn new(n: usize, mode: Mode) -> Self {
        SearchProblem {
            n,
            mode,
            threads: None,
            node_cap: DEFAULT_NODE_CAP,
            report_all: true,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    fn validate(&self) -> Result<()> {
        let r = self.mode.r();
        let t = self.mode.t();
        if r < 2 {
            return Err(Error::InvalidParameter("r must be at least 2".into()));
        }
        match self.mode {
            Mode::Daisy { .. } if t < 2 => {
                return Err(Error::InvalidParameter("daisy needs t >= 2".into()))
            }
            Mode::LinkPartite { .. } if t < 1 => {
                return Err(Error::InvalidParameter("link-partite needs t >= 1".into()))
            }
            _ => {}
        }
        if self.n < r {
            return Err(Error::InvalidParameter(format!("n must be at least r = {r}")));
        }
        if self.n > 16 || crate::rational::binomial(self.n as u64, r as u64) > 128 {
            return Err(Error::CapExceeded {
                what: "search edge universe",
                actual: crate::rational::binomial(self.n as u64, r as u64),
                limit: 128,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub mode: Mode,
    /// Exact when `complete`; otherwise only a lower bound.
    pub optimum: usize,
    /// One representative per isomorphism class, sorted by edge list.
    pub extremal: Vec<Hypergraph>,
    pub nodes: u64,
    pub complete: bool,
    pub oracle_checked: bool,
    pub elapsed_ms: u128,
}

fn search_one(prob: &SearchProblem, ex_prev: Option<usize>) -> SearchResult {
    let start = Instant::now();
    let uni = Universe::new(prob.n, prob.mode);
    let counter = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let searcher = Searcher {
        uni: &uni,
        ex_prev,
        counter: &counter,
        cap: prob.node_cap,
        aborted: &aborted,
    };
    let init = searcher.greedy().max(ex_prev.unwrap_or(0));
    let mut top = Outcome { best: init, ..Outcome::default() };
    // the first two levels run serially; their subtrees are independent work units
    let mut frontier: Vec<Node> = vec![searcher.root()];
    for _ in 0..2 {
        frontier = frontier.iter().flat_map(|node| searcher.expand(node, &mut top)).collect();
    }
    let outcomes: Vec<Outcome> = frontier
        .par_iter()
        .map(|node| {
            let mut out = Outcome { best: init, ..Outcome::default() };
            searcher.dfs(node, &mut out);
            out
        })
        .collect();
    let best = outcomes.iter().map(|o| o.best).fold(top.best, usize::max);
    let nodes = top.nodes + outcomes.iter().map(|o| o.nodes).sum::<u64>();
    let mut codes: Vec<u128> = std::iter::once(&top)
        .chain(&outcomes)
        .filter(|o| o.best == best)
        .flat_map(|o| o.extremal.iter().copied())
        .collect();
    codes.sort_unstable();
    codes.dedup();
    let mut extremal: Vec<Hypergraph> = codes
        .iter()
        .map(|&code| {
            let edges: Vec<Vec<usize>> = (0..uni.edge_count())
                .filter(|&i| code >> i & 1 == 1)
                .map(|i| uni.edge_vertices(i))
                .collect();
            Hypergraph::from_edges(prob.n, prob.mode.r(), &edges).expect("valid edges")
        })
        .collect();
    extremal.sort_by(|a, b| a.flat_edges().cmp(b.flat_edges()));
    if !prob.report_all {
        extremal.truncate(1);
    }
    SearchResult {
        n: prob.n,
        mode: prob.mode,
        optimum: best,
        extremal,
        nodes,
        complete: !aborted.load(std::sync::atomic::Ordering::Relaxed),
        oracle_checked: false,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn run_levels(prob: &SearchProblem) -> SearchResult {
    let r = prob.mode.r();
    // ex(r) on r vertices feeds the local bound at r + 1, and so on upwards
    let mut ex_prev: Option<usize> = None;
    let mut result = None;
    for n in r..=prob.n {
        let sub = SearchProblem { n, ..prob.clone() };
        let res = search_one(&sub, ex_prev);
        ex_prev = res.complete.then_some(res.optimum);
        result = Some(res);
    }
    result.expect("n >= r")
}

/// `ex(n, ·)` for the problem's mode, with all extremal classes.
pub fn turan_number(prob: &SearchProblem) -> Result<SearchResult> {
    prob.validate()?;
    match prob.threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            Ok(pool.install(|| run_levels(prob)))
        }
        None => Ok(run_levels(prob)),
    }
}

/// Runs the search and, when the problem is within oracle range, checks it
/// against [`naive_oracle`].
pub fn turan_number_checked(prob: &SearchProblem) -> Result<SearchResult> {
    let mut res = turan_number(prob)?;
    let edges = crate::rational::binomial(prob.n as u64, prob.mode.r() as u64);
    if res.complete && edges <= ORACLE_MAX_EDGES as u64 {
        let oracle = naive_oracle(prob)?;
        if oracle != res.optimum {
            return Err(Error::InvalidParameter(format!(
                "search optimum {} disagrees with oracle {oracle}",
                res.optimum
            )));
        }
        res.oracle_checked = true;
    }
    Ok(res)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSpread {
    /// `Δ - δ` of each extremal representative, in result order.
    pub spreads: Vec<usize>,
    pub max: usize,
    /// `max <= n - 2`.
    pub holds: bool,
}

/// `Δ - δ` over the extremal 3-graphs of a complete result.
pub fn extremal_degree_spread(res: &SearchResult) -> Result<DegreeSpread> {
    if !res.complete {
        return Err(Error::IncompleteResult);
    }
    if res.mode.r() != 3 {
        return Err(Error::InvalidParameter("degree spread is defined for 3-graphs".into()));
    }
    let spreads: Vec<usize> = res
        .extremal
        .iter()
        .map(|h| {
            let s = h.degree_stats();
            s.max - s.min
        })
        .collect();
    let max = spreads.iter().copied().max().unwrap_or(0);
    Ok(DegreeSpread {
        holds: max + 2 <= res.n,
        spreads,
        max,
    })
}
