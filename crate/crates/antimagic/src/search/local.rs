use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::EdgeLabeling;

/// Largest edge count searched in exhaustive mode by default.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 16;
/// Largest edge count [`chi_la_exact`] accepts by default.
pub const CHI_LA_EDGE_LIMIT: usize = 10;

/// Value ordering of the backtracking search. Both modes are complete; they
/// differ only in which labels are tried first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Labels tried from largest to smallest. Fully deterministic.
    Exhaustive,
    /// Each depth gets its own seeded shuffle of the labels; the budget is
    /// spent in restarts of doubling size, each with a fresh shuffle.
    Randomized,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_colors: usize,
    pub require_parity: bool,
    pub node_limit: u64,
    pub seed: u64,
    /// `None` picks exhaustive mode up to [`EXHAUSTIVE_EDGE_LIMIT`] edges.
    pub mode: Option<Mode>,
    pub workers: usize,
}

impl SearchConfig {
    pub fn new(max_colors: usize) -> Self {
        SearchConfig {
            max_colors,
            require_parity: false,
            node_limit: 10_000_000,
            seed: 0,
            mode: None,
            workers: 1,
        }
    }

    pub fn parity(mut self, on: bool) -> Self {
        self.require_parity = on;
        self
    }

    pub fn node_limit(mut self, limit: u64) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = Some(mode);
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    fn resolved_mode(&self, edges: usize) -> Mode {
        self.mode.unwrap_or(if edges <= EXHAUSTIVE_EDGE_LIMIT { Mode::Exhaustive } else { Mode::Randomized })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeLabeling),
    /// The whole tree was explored: no labeling meets the constraints.
    ProvenNone,
    /// The node budget ran out first.
    Budget,
}

impl SearchOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::ProvenNone => "none",
            SearchOutcome::Budget => "budget",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

/// Periodic progress callback payload.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub nodes: u64,
    pub best_colors: usize,
}

const PROGRESS_EVERY: u64 = 1 << 20;

/// Backtracking search for a local antimagic labeling of `g` with at most
/// `cfg.max_colors` distinct sums (and parity balance if requested).
///
/// Edges are assigned in order of decreasing endpoint degree sum. A branch
/// is cut as soon as a vertex whose edges are all labeled shares its sum with
/// a finished neighbor, when finished vertices already show more than
/// `max_colors` sums, or when a label's parity is no longer needed at one of
/// its endpoints.
///
/// ```
/// use antimagic::{graph, search::{search_local_antimagic, SearchConfig, SearchOutcome}};
/// let r = search_local_antimagic(&graph::cycle(3).unwrap(), &SearchConfig::new(2));
/// assert_eq!(r.outcome, SearchOutcome::ProvenNone);
/// ```
pub fn search_local_antimagic(g: &Graph, cfg: &SearchConfig) -> SearchResult {
    search_with_progress(g, cfg, &mut |_| {})
}

/// [`search_local_antimagic`] reporting to `progress` every 2²⁰ nodes.
pub fn search_with_progress(g: &Graph, cfg: &SearchConfig, progress: &mut dyn FnMut(Progress)) -> SearchResult {
    let q = g.size();
    if cfg.require_parity && (q % 2 == 1 || g.degrees().iter().any(|d| d % 2 == 1)) {
        return SearchResult { outcome: SearchOutcome::ProvenNone, nodes: 0 };
    }
    match cfg.resolved_mode(q) {
        Mode::Exhaustive => run(g, cfg, None, cfg.node_limit, 0, progress),
        Mode::Randomized => {
            let mut spent = 0;
            let mut chunk = 10_000u64;
            let mut restart = 0u64;
            loop {
                let budget = chunk.min(cfg.node_limit.saturating_sub(spent));
                let seed = cfg.seed.wrapping_add(restart.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                let r = run(g, cfg, Some(seed), budget, spent, progress);
                spent += r.nodes;
                if r.outcome != SearchOutcome::Budget || spent >= cfg.node_limit {
                    return SearchResult { outcome: r.outcome, nodes: spent };
                }
                chunk = chunk.saturating_mul(2);
                restart += 1;
            }
        }
    }
}

fn run(
    g: &Graph,
    cfg: &SearchConfig,
    shuffle: Option<u64>,
    budget: u64,
    offset: u64,
    progress: &mut dyn FnMut(Progress),
) -> SearchResult {
    let q = g.size();
    let mut order: Vec<usize> = (0..q).collect();
    let deg = g.degrees();
    order.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        std::cmp::Reverse(deg[u] + deg[v])
    });
    let values: Vec<Vec<u64>> = match shuffle {
        None => vec![(1..=q as u64).rev().collect(); q],
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..q)
                .map(|_| {
                    let mut v: Vec<u64> = (1..=q as u64).collect();
                    v.shuffle(&mut rng);
                    v
                })
                .collect()
        }
    };
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        budget,
    };
    let workers = if q == 0 { 1 } else { cfg.workers.max(1) };
    let mut results: Vec<Step> = Vec::with_capacity(workers);
    if workers == 1 {
        let mut s = Searcher::new(g, cfg, &order, &values, &shared, None);
        s.report = Some((progress, offset));
        results.push(s.dfs(0));
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let (order, values, shared) = (&order, &values, &shared);
                    scope.spawn(move || {
                        let mut s = Searcher::new(g, cfg, order, values, shared, Some((w, workers)));
                        s.dfs(0)
                    })
                })
                .collect();
            results.extend(handles.into_iter().map(|h| h.join().expect("search worker panicked")));
        });
    }
    let nodes = shared.nodes.load(Ordering::Relaxed).min(budget);
    let outcome = if let Some(labels) = results.iter().find_map(|r| match r {
        Step::Found(l) => Some(l.clone()),
        _ => None,
    }) {
        let l = EdgeLabeling::new(g.clone(), labels).expect("one label per edge");
        debug_assert!(l.verify().is_local_antimagic);
        SearchOutcome::Found(l)
    } else if results.iter().any(|r| matches!(r, Step::Budget)) {
        SearchOutcome::Budget
    } else {
        SearchOutcome::ProvenNone
    };
    SearchResult { outcome, nodes }
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    budget: u64,
}

enum Step {
    Found(Vec<u64>),
    Exhausted,
    Budget,
    /// Another worker already succeeded.
    Cancelled,
}

struct Searcher<'a> {
    edges: Vec<(usize, usize)>,
    edge_ids: &'a [usize],
    values: &'a [Vec<u64>],
    adj: Vec<Vec<usize>>,
    remaining: Vec<usize>,
    partial: Vec<u64>,
    done: Vec<bool>,
    need: Vec<[usize; 2]>,
    used: Vec<bool>,
    assigned: Vec<u64>,
    colors: std::collections::HashMap<u64, usize>,
    max_colors: usize,
    parity: bool,
    shared: &'a Shared,
    /// `(worker, workers)`: which top-level choices this searcher owns.
    split: Option<(usize, usize)>,
    pending: u64,
    report: Option<(&'a mut dyn FnMut(Progress), u64)>,
}

const BATCH: u64 = 256;

impl<'a> Searcher<'a> {
    fn new(
        g: &Graph,
        cfg: &SearchConfig,
        order: &'a [usize],
        values: &'a [Vec<u64>],
        shared: &'a Shared,
        split: Option<(usize, usize)>,
    ) -> Self {
        let deg = g.degrees();
        let q = g.size();
        Searcher {
            edges: order.iter().map(|&e| g.edges()[e]).collect(),
            edge_ids: order,
            values,
            adj: g.adjacency_lists(),
            remaining: deg.clone(),
            partial: vec![0; g.order()],
            done: deg.iter().map(|&d| d == 0).collect(),
            need: deg.iter().map(|&d| [d / 2, d / 2]).collect(),
            used: vec![false; q + 1],
            assigned: vec![0; q],
            colors: if deg.contains(&0) { [(0, deg.iter().filter(|&&d| d == 0).count())].into() } else { Default::default() },
            max_colors: cfg.max_colors,
            parity: cfg.require_parity,
            shared,
            split,
            pending: 0,
            report: None,
        }
    }

    /// Counts a node; `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.split.is_none() {
            let n = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            self.pending = 0;
            if let Some((cb, offset)) = self.report.as_mut() {
                if n % PROGRESS_EVERY == 0 {
                    cb(Progress { nodes: *offset + n, best_colors: self.max_colors });
                }
            }
            return n <= self.shared.budget;
        }
        if self.pending >= BATCH {
            let n = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
            self.pending = 0;
            return n <= self.shared.budget;
        }
        true
    }

    fn flush(&mut self) {
        if self.pending > 0 {
            self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed);
            self.pending = 0;
        }
    }

    /// Marks `w` finished if its last edge just got labeled; `false` on a
    /// clash with a finished neighbor or too many colors.
    fn finish(&mut self, w: usize) -> bool {
        let s = self.partial[w];
        if self.adj[w].iter().any(|&x| self.done[x] && self.partial[x] == s) {
            return false;
        }
        let fresh = !self.colors.contains_key(&s);
        if fresh && self.colors.len() >= self.max_colors {
            return false;
        }
        *self.colors.entry(s).or_insert(0) += 1;
        self.done[w] = true;
        true
    }

    fn unfinish(&mut self, w: usize) {
        let s = self.partial[w];
        let c = self.colors.get_mut(&s).expect("finished vertex has a color");
        *c -= 1;
        if *c == 0 {
            self.colors.remove(&s);
        }
        self.done[w] = false;
    }

    fn dfs(&mut self, depth: usize) -> Step {
        let r = self.dfs_inner(depth);
        if depth == 0 {
            self.flush();
        }
        r
    }

    fn dfs_inner(&mut self, depth: usize) -> Step {
        if depth == self.edges.len() {
            let mut labels = vec![0; self.edges.len()];
            for (d, &e) in self.edge_ids.iter().enumerate() {
                labels[e] = self.assigned[d];
            }
            self.shared.stop.store(true, Ordering::Relaxed);
            return Step::Found(labels);
        }
        let (u, v) = self.edges[depth];
        let values = self.values;
        for (k, &l) in values[depth].iter().enumerate() {
            if depth == 0 {
                if let Some((w, ws)) = self.split {
                    if k % ws != w {
                        continue;
                    }
                }
            }
            if self.used[l as usize] {
                continue;
            }
            if self.shared.stop.load(Ordering::Relaxed) && self.split.is_some() {
                return Step::Cancelled;
            }
            if !self.tick() {
                return Step::Budget;
            }
            let par = (l % 2 == 0) as usize;
            if self.parity && (self.need[u][par] == 0 || self.need[v][par] == 0) {
                continue;
            }
            self.used[l as usize] = true;
            self.assigned[depth] = l;
            for w in [u, v] {
                self.partial[w] += l;
                self.remaining[w] -= 1;
                self.need[w][par] = self.need[w][par].wrapping_sub(1);
            }
            let mut finished = Vec::with_capacity(2);
            let mut ok = true;
            for w in [u, v] {
                if self.remaining[w] == 0 {
                    if self.finish(w) {
                        finished.push(w);
                    } else {
                        ok = false;
                        break;
                    }
                }
            }
            let step = if ok { self.dfs_inner(depth + 1) } else { Step::Exhausted };
            for &w in finished.iter().rev() {
                self.unfinish(w);
            }
            for w in [u, v] {
                self.partial[w] -= l;
                self.remaining[w] += 1;
                self.need[w][par] = self.need[w][par].wrapping_add(1);
            }
            self.used[l as usize] = false;
            match step {
                Step::Exhausted => {}
                other => return other,
            }
        }
        Step::Exhausted
    }
}

/// `χ_la(G)` with a witness, by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiLa {
    pub value: usize,
    pub witness: EdgeLabeling,
    /// Nodes spent across all rounds.
    pub nodes: u64,
}

/// Exact local antimagic chromatic number for graphs with at most
/// [`CHI_LA_EDGE_LIMIT`] edges.
///
/// Finds any labeling, then keeps asking for one with fewer colors until the
/// exhaustive search proves there is none. The chromatic number is a lower
/// bound but is never used to stop early: every answer ends in a proof.
///
/// ```
/// use antimagic::{graph, search::chi_la_exact};
/// assert_eq!(chi_la_exact(&graph::cycle(4).unwrap()).unwrap().value, 3);
/// ```
pub fn chi_la_exact(g: &Graph) -> Result<ChiLa> {
    chi_la_exact_with(g, CHI_LA_EDGE_LIMIT, u64::MAX, &mut |_| {})
}

pub fn chi_la_exact_with(
    g: &Graph,
    edge_limit: usize,
    node_limit: u64,
    progress: &mut dyn FnMut(Progress),
) -> Result<ChiLa> {
    if g.size() > edge_limit {
        return Err(Error::SizeLimit { what: "edge count", actual: g.size(), limit: edge_limit });
    }
    let floor = chromatic_number(g)?;
    let mut best: Option<EdgeLabeling> = None;
    let mut nodes = 0;
    let mut cap = g.order().max(1);
    loop {
        let cfg = SearchConfig::new(cap).mode(Mode::Exhaustive).node_limit(node_limit.saturating_sub(nodes));
        let r = search_with_progress(g, &cfg, progress);
        nodes += r.nodes;
        match r.outcome {
            SearchOutcome::Found(l) => {
                let c = l.verify().color_count;
                best = Some(l);
                if c == 1 {
                    break;
                }
                cap = c - 1;
            }
            SearchOutcome::ProvenNone => break,
            SearchOutcome::Budget => return Err(Error::Budget { nodes }),
        }
    }
    let witness = best.ok_or_else(|| Error::NoSuchObject("graph has no local antimagic labeling".into()))?;
    let value = witness.verify().color_count;
    debug_assert!(value >= floor);
    Ok(ChiLa { value, witness, nodes })
}
