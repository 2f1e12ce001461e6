//! Exact branch-and-bound for the nine broadcast parameters.
//!
//! Strengths are assigned depth-first in a fixed vertex order. The search
//! state keeps, as bitmasks, the set of vertices hearing at least one and at
//! least two committed broadcasters; from those every private boundary can be
//! read off directly (`PB_x = B_x \ heard2` for `f(x) >= 2`, `N_x \ heard2`
//! for `f(x) = 1`). Private boundaries only shrink as broadcasters are added,
//! so an empty one prunes the subtree for the irredundant kinds.
//!
//! Solving runs in two phases. The first finds the optimum value using the
//! descending-eccentricity order, optionally split across workers. The
//! second walks vertices in index order with ascending strengths and stops
//! at the first broadcast of exactly that weight, which is the
//! lexicographically least optimal strength vector.

use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::broadcast::{Broadcast, ParameterKind};
use crate::error::{Error, Result};
use crate::graph::{distances, independence_number_capped, DistanceMatrix, Graph};

const MAXN: usize = 64;

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "BROADCAST_LAB_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search-tree nodes over both phases.
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    /// Vertex cap for `gamma_b` and `i_bn`.
    pub max_vertices_min: usize,
    /// Vertex cap for the maximization kinds.
    pub max_vertices_max: usize,
    /// On trees, restrict `alpha_bn`/`alpha_bnr` value searches to broadcasts
    /// where every non-leaf has strength at most 1.
    pub enable_tree_heuristics: bool,
    /// Worker count; `None` reads [`THREADS_ENV`] or uses all cores.
    pub threads: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: 100_000_000,
            time_budget: None,
            max_vertices_min: 24,
            max_vertices_max: 22,
            enable_tree_heuristics: true,
            threads: None,
        }
    }
}

impl SolveOptions {
    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn with_tree_heuristics(mut self, on: bool) -> Self {
        self.enable_tree_heuristics = on;
        self
    }

    fn cap_for(&self, kind: ParameterKind) -> usize {
        if kind.is_maximization() {
            self.max_vertices_max
        } else {
            self.max_vertices_min
        }
    }

    pub fn worker_count(&self) -> usize {
        self.threads
            .or_else(|| std::env::var(THREADS_ENV).ok()?.parse().ok())
            .filter(|&t| t > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

/// Outcome of a solve.
///
/// When `optimal` is false the search ran out of budget: `value` is the
/// weight of the best feasible broadcast found, a lower bound for the
/// maximization kinds and an upper bound for `gamma_b`/`i_bn`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterResult {
    pub kind: ParameterKind,
    pub value: u32,
    pub optimal: bool,
    pub witness: Broadcast,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

/// A-priori bracket `(lower, upper)` for a parameter on a connected graph.
pub fn bounds(g: &Graph, kind: ParameterKind, d: &DistanceMatrix) -> Result<(u32, u32)> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n() as u32;
    if n == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    if n == 1 {
        return Ok((1, 1));
    }
    let diam = d.diameter();
    let delta = d.min_degree() as u32;
    Ok(match kind {
        ParameterKind::GammaUpper => (diam, n - delta),
        ParameterKind::AlphaBn | ParameterKind::AlphaBnr | ParameterKind::AlphaBnd => (diam, n - 1),
        ParameterKind::AlphaH | ParameterKind::AlphaHd => (diam, n * diam),
        ParameterKind::GammaLower => (1, d.radius()),
        ParameterKind::IBn => (1, n - 1),
        ParameterKind::Alpha => (1, n - delta),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Independence {
    None,
    Hearing,
    Boundary,
}

/// Precomputed masks for one graph and kind.
struct Problem {
    n: usize,
    all: u64,
    maximize: bool,
    independence: Independence,
    irredundant: bool,
    dominating: bool,
    maximal: bool,
    dist: Vec<u8>,
    /// Per-vertex strength ceiling (eccentricity, kind limit, heuristics).
    cap: Vec<u8>,
    stride: usize,
    ball: Vec<u64>,
    sphere: Vec<u64>,
    /// Edges covered by `v` broadcasting with strength `s`.
    cover: Vec<u32>,
    edges: u32,
}

impl Problem {
    fn new(g: &Graph, d: &DistanceMatrix, kind: ParameterKind, leaf_heuristic: bool) -> Self {
        use ParameterKind::*;
        let n = g.n();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let stride = (0..n).map(|v| d.strength_cap(v)).max().unwrap_or(1) as usize + 1;
        let dist: Vec<u8> = (0..n * n)
            .map(|i| d.d(i / n, i % n).min(255) as u8)
            .collect();
        let cap: Vec<u8> = (0..n)
            .map(|v| {
                let mut c = d.strength_cap(v);
                if kind == Alpha {
                    c = c.min(1);
                }
                if leaf_heuristic && g.degree(v) != 1 {
                    c = c.min(1);
                }
                c as u8
            })
            .collect();
        let mut ball = vec![0u64; n * stride];
        let mut sphere = vec![0u64; n * stride];
        let mut cover = vec![0u32; n * stride];
        let edge_list: Vec<(usize, usize)> = g.edges().collect();
        for v in 0..n {
            for s in 0..stride {
                let mut b = 0u64;
                let mut sp = 0u64;
                for u in 0..n {
                    let duv = dist[v * n + u] as usize;
                    if duv <= s {
                        b |= 1 << u;
                    }
                    if duv == s {
                        sp |= 1 << u;
                    }
                }
                ball[v * stride + s] = b;
                sphere[v * stride + s] = sp;
                if s > 0 {
                    cover[v * stride + s] = edge_list
                        .iter()
                        .filter(|&&(a, c)| {
                            let (da, dc) = (dist[v * n + a] as usize, dist[v * n + c] as usize);
                            da <= s && dc <= s && !(da == s && dc == s)
                        })
                        .count() as u32;
                }
            }
        }
        Problem {
            n,
            all,
            maximize: kind.is_maximization(),
            independence: match kind {
                Alpha | AlphaBn | AlphaBnr | AlphaBnd | IBn => Independence::Boundary,
                AlphaH | AlphaHd => Independence::Hearing,
                GammaLower | GammaUpper => Independence::None,
            },
            irredundant: matches!(kind, GammaUpper | AlphaBnr | AlphaBnd | AlphaHd),
            dominating: matches!(kind, GammaLower | GammaUpper | AlphaBnd | AlphaHd | IBn),
            maximal: kind == IBn,
            dist,
            cap,
            stride,
            ball,
            sphere,
            cover,
            edges: edge_list.len() as u32,
        }
    }

    #[inline]
    fn d(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.n + v]
    }

    #[inline]
    fn ball(&self, v: usize, s: u8) -> u64 {
        self.ball[v * self.stride + s as usize]
    }

    /// Candidate private boundary region of `v` at strength `s`.
    #[inline]
    fn pb_region(&self, v: usize, s: u8) -> u64 {
        if s >= 2 {
            self.sphere[v * self.stride + s as usize]
        } else {
            self.ball[v * self.stride + s as usize]
        }
    }
}

#[derive(Clone, Copy)]
struct State {
    pos: usize,
    weight: u32,
    heard1: u64,
    heard2: u64,
    broadcasters: u64,
    /// Σ over committed broadcasters of the vertex count of a private geodesic
    /// (`f + 1` for strength >= 2, at least 1 for strength 1).
    geodesic_use: u32,
    covered_edges: u32,
    f: [u8; MAXN],
    /// Strength ceiling imposed by the independence condition.
    room: [u8; MAXN],
}

impl State {
    fn root(p: &Problem) -> Self {
        let mut room = [0u8; MAXN];
        room[..p.n].copy_from_slice(&p.cap);
        State {
            pos: 0,
            weight: 0,
            heard1: 0,
            heard2: 0,
            broadcasters: 0,
            geodesic_use: 0,
            covered_edges: 0,
            f: [0; MAXN],
            room,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Strict improvement over the shared incumbent.
    Optimize,
    /// Broadcasts of exactly this weight, in lexicographic order.
    Target(u32),
}

struct Shared {
    best: AtomicU32,
    best_witness: Mutex<Option<Vec<u8>>>,
    nodes: AtomicU64,
    aborted: AtomicBool,
    budget: u64,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(best: u32, budget: u64, deadline: Option<Instant>) -> Self {
        Shared {
            best: AtomicU32::new(best),
            best_witness: Mutex::new(None),
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
            budget,
            deadline,
        }
    }

    fn offer(&self, maximize: bool, weight: u32, f: &[u8]) {
        let mut guard = self.best_witness.lock().unwrap();
        let cur = self.best.load(Ordering::Relaxed);
        let better = if maximize { weight > cur } else { weight < cur };
        if better || guard.is_none() && weight == cur {
            self.best.store(weight, Ordering::Relaxed);
            *guard = Some(f.to_vec());
        }
    }
}

const FLUSH: u64 = 1024;

struct Search<'a> {
    p: &'a Problem,
    order: &'a [usize],
    mode: Mode,
    shared: &'a Shared,
    local_nodes: u64,
    flush_every: u64,
    /// Target mode: collected solutions and the collection limit.
    found: Vec<Vec<u8>>,
    limit: usize,
}

impl<'a> Search<'a> {
    fn new(p: &'a Problem, order: &'a [usize], mode: Mode, shared: &'a Shared) -> Self {
        Search {
            p,
            order,
            mode,
            shared,
            local_nodes: 0,
            flush_every: FLUSH.min(shared.budget.max(1)),
            found: Vec::new(),
            limit: 1,
        }
    }

    fn flush(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.local_nodes, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes >= self.flush_every {
            let total = self
                .shared
                .nodes
                .fetch_add(self.local_nodes, Ordering::Relaxed)
                + self.local_nodes;
            self.local_nodes = 0;
            if total > self.shared.budget
                || self.shared.deadline.is_some_and(|t| Instant::now() > t)
            {
                self.shared.aborted.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.aborted.load(Ordering::Relaxed)
    }

    fn done(&self) -> bool {
        self.shared.aborted.load(Ordering::Relaxed)
            || matches!(self.mode, Mode::Target(_)) && self.found.len() >= self.limit
    }

    /// Current private boundaries of the committed broadcasters.
    fn private_boundaries(&self, st: &State, out: &mut Vec<u64>) {
        out.clear();
        let mut bs = st.broadcasters;
        while bs != 0 {
            let x = bs.trailing_zeros() as usize;
            bs &= bs - 1;
            out.push(self.p.pb_region(x, st.f[x]) & !st.heard2);
        }
    }

    /// Whether `w` may be added with strength `s >= 1` without emptying a
    /// committed private boundary, and with a candidate private boundary of
    /// its own.
    #[inline]
    fn irredundant_ok(&self, st: &State, pbs: &[u64], w: usize, s: u8) -> bool {
        let ball = self.p.ball(w, s);
        self.p.pb_region(w, s) & !st.heard1 != 0 && pbs.iter().all(|&pb| pb & !ball != 0)
    }

    /// Largest strength `w` could still take in some completion (0 if none).
    fn allowed(&self, st: &State, pbs: &[u64], w: usize) -> u8 {
        let lim = st.room[w];
        if !self.p.irredundant {
            return lim;
        }
        (1..=lim)
            .rev()
            .find(|&s| self.irredundant_ok(st, pbs, w, s))
            .unwrap_or(0)
    }

    fn child(&self, st: &State, w: usize, s: u8) -> State {
        let mut c = *st;
        c.pos += 1;
        if s == 0 {
            return c;
        }
        let p = self.p;
        let ball = p.ball(w, s);
        c.f[w] = s;
        c.weight += s as u32;
        c.heard2 |= c.heard1 & ball;
        c.heard1 |= ball;
        c.broadcasters |= 1 << w;
        c.geodesic_use += if s >= 2 { s as u32 + 1 } else { 1 };
        c.covered_edges += p.cover[w * p.stride + s as usize];
        match p.independence {
            Independence::None => {}
            Independence::Boundary => {
                for &y in &self.order[c.pos..] {
                    let room = p.d(y, w).saturating_sub(s);
                    c.room[y] = c.room[y].min(room);
                }
            }
            Independence::Hearing => {
                for &y in &self.order[c.pos..] {
                    let dy = p.d(y, w);
                    let room = if dy <= s { 0 } else { dy - 1 };
                    c.room[y] = c.room[y].min(room);
                }
            }
        }
        c
    }

    fn is_maximal(&self, st: &State) -> bool {
        let p = self.p;
        (0..p.n).all(|v| {
            let s = st.f[v] + 1;
            if s > p.cap[v] {
                return true;
            }
            let mut bs = st.broadcasters & !(1 << v);
            while bs != 0 {
                let x = bs.trailing_zeros() as usize;
                bs &= bs - 1;
                if (p.d(v, x) as u32) < s as u32 + st.f[x] as u32 {
                    return true;
                }
            }
            false
        })
    }

    fn accept(&mut self, st: &State) {
        let p = self.p;
        if p.dominating && st.heard1 != p.all {
            return;
        }
        if p.irredundant && st.weight == 0 {
            return;
        }
        if p.maximal && !self.is_maximal(st) {
            return;
        }
        match self.mode {
            Mode::Optimize => self.shared.offer(p.maximize, st.weight, &st.f[..p.n]),
            Mode::Target(t) => {
                if st.weight == t {
                    self.found.push(st.f[..p.n].to_vec());
                }
            }
        }
    }

    /// Returns false when the node is pruned.
    fn bound_ok(&self, st: &State, pbs: &[u64]) -> bool {
        let p = self.p;
        let rest = &self.order[st.pos..];
        let unheard = p.all & !st.heard1;
        let mut allowed = [0u8; MAXN];
        let mut reach = 0u64;
        let mut sum_allowed = 0u32;
        for &w in rest {
            let a = self.allowed(st, pbs, w);
            allowed[w] = a;
            sum_allowed += a as u32;
            if a > 0 {
                reach |= p.ball(w, a);
            }
        }
        if p.dominating && unheard & !reach != 0 {
            return false;
        }
        let best = self.shared.best.load(Ordering::Relaxed);
        if p.maximize {
            let mut extra = sum_allowed;
            if p.independence == Independence::Boundary {
                extra = extra.min(p.edges - st.covered_edges);
            }
            if p.irredundant {
                extra = extra.min((p.n as u32).saturating_sub(st.geodesic_use));
                // Each new broadcaster owns a distinct, currently unheard
                // private vertex at distance equal to its strength.
                let mut owned = 0u32;
                let mut scan = unheard;
                while scan != 0 && owned < extra {
                    let q = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    let mut top = 0u8;
                    for &w in rest {
                        let need = p.d(w, q).max(1);
                        if need <= allowed[w] && need > top {
                            top = need;
                        }
                    }
                    owned += top as u32;
                }
                extra = extra.min(owned);
            }
            let ub = st.weight + extra;
            match self.mode {
                Mode::Optimize => ub > best,
                Mode::Target(t) => ub >= t && st.weight <= t,
            }
        } else {
            let mut need_max = 0u8;
            if p.dominating {
                let mut scan = unheard;
                while scan != 0 {
                    let q = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    let mut cheapest = u8::MAX;
                    for &w in rest {
                        let need = p.d(w, q).max(1);
                        if need <= allowed[w] && need < cheapest {
                            cheapest = need;
                        }
                    }
                    need_max = need_max.max(cheapest);
                }
            }
            let lb = st.weight + need_max as u32;
            match self.mode {
                Mode::Optimize => lb < best,
                Mode::Target(t) => lb <= t,
            }
        }
    }

    /// Strengths to try at the current vertex, in search order.
    fn choices(&self, st: &State, pbs: &[u64], w: usize) -> ([u8; 256], usize) {
        let mut out = [0u8; 256];
        let mut len = 0;
        let lim = st.room[w];
        let ok = |s: u8| s == 0 || !self.p.irredundant || self.irredundant_ok(st, pbs, w, s);
        let descending = self.p.maximize && self.mode == Mode::Optimize;
        if descending {
            for s in (0..=lim).rev() {
                if ok(s) {
                    out[len] = s;
                    len += 1;
                }
            }
        } else {
            for s in 0..=lim {
                if ok(s) {
                    out[len] = s;
                    len += 1;
                }
            }
        }
        (out, len)
    }

    fn dfs(&mut self, st: &State) {
        if !self.tick() || self.done() {
            return;
        }
        if st.pos == self.p.n {
            self.accept(st);
            return;
        }
        let mut pbs = Vec::with_capacity(st.broadcasters.count_ones() as usize);
        if self.p.irredundant {
            self.private_boundaries(st, &mut pbs);
        }
        if !self.bound_ok(st, &pbs) {
            return;
        }
        let w = self.order[st.pos];
        let (choices, len) = self.choices(st, &pbs, w);
        for &s in &choices[..len] {
            let c = self.child(st, w, s);
            self.dfs(&c);
            if self.done() {
                return;
            }
        }
    }

    /// Expands the tree breadth-first until at least `want` open nodes exist.
    fn frontier(&mut self, root: State, want: usize) -> Vec<State> {
        let mut level = vec![root];
        let mut pbs = Vec::new();
        while level.len() < want {
            let mut next = Vec::new();
            let mut expanded = false;
            for st in &level {
                if st.pos == self.p.n {
                    next.push(*st);
                    continue;
                }
                self.tick();
                if self.p.irredundant {
                    self.private_boundaries(st, &mut pbs);
                }
                if !self.bound_ok(st, &pbs) {
                    continue;
                }
                expanded = true;
                let w = self.order[st.pos];
                let (choices, len) = self.choices(st, &pbs, w);
                next.extend(choices[..len].iter().map(|&s| self.child(st, w, s)));
            }
            level = next;
            if !expanded {
                break;
            }
        }
        level
    }
}

fn check_input(g: &Graph, kind: ParameterKind, cap: usize) -> Result<DistanceMatrix> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    if n > cap.min(MAXN) {
        return Err(Error::CapExceeded {
            n,
            cap: cap.min(MAXN),
        });
    }
    let d = distances(g);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let _ = kind;
    Ok(d)
}

/// Known feasible broadcast used to seed the incumbent.
fn seed(g: &Graph, d: &DistanceMatrix, kind: ParameterKind) -> Broadcast {
    let n = g.n();
    if n == 1 {
        return Broadcast::new(vec![1]);
    }
    match kind {
        ParameterKind::Alpha => Broadcast::from_pairs(n, &[(0, 1)]),
        ParameterKind::GammaLower => {
            let centre = (0..n).find(|&v| d.ecc(v) == d.radius()).unwrap();
            Broadcast::from_pairs(n, &[(centre, d.radius())])
        }
        _ => {
            let peripheral = (0..n).find(|&v| d.ecc(v) == d.diameter()).unwrap();
            Broadcast::from_pairs(n, &[(peripheral, d.diameter())])
        }
    }
}

fn ecc_order(d: &DistanceMatrix) -> Vec<usize> {
    let mut order: Vec<usize> = (0..d.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.ecc(v)), v));
    order
}

fn run_pool<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Exact value of `kind` on a connected graph, with the lexicographically
/// least optimal strength vector as witness.
pub fn solve(g: &Graph, kind: ParameterKind, options: &SolveOptions) -> Result<ParameterResult> {
    let start = Instant::now();
    let d = check_input(g, kind, options.cap_for(kind))?;
    let n = g.n();
    let seed = seed(g, &d, kind);
    debug_assert!(kind.is_feasible(&seed, g, &d));
    if n == 1 {
        return Ok(ParameterResult {
            kind,
            value: 1,
            optimal: true,
            witness: seed,
            nodes_explored: 1,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    let deadline = options.time_budget.map(|t| start + t);
    let heuristic = options.enable_tree_heuristics
        && matches!(kind, ParameterKind::AlphaBn | ParameterKind::AlphaBnr)
        && g.is_tree();

    // Phase 1: optimum value.
    let problem = Problem::new(g, &d, kind, heuristic);
    let order = ecc_order(&d);
    let shared = Shared::new(seed.weight(), options.node_budget, deadline);
    let threads = options.worker_count();
    {
        let mut search = Search::new(&problem, &order, Mode::Optimize, &shared);
        if threads <= 1 {
            search.dfs(&State::root(&problem));
            search.flush();
        } else {
            let frontier = search.frontier(State::root(&problem), threads * 16);
            search.flush();
            run_pool(threads, || {
                frontier.par_iter().for_each(|st| {
                    let mut s = Search::new(&problem, &order, Mode::Optimize, &shared);
                    s.dfs(st);
                    s.flush();
                });
            });
        }
    }
    let value = shared.best.load(Ordering::Relaxed);
    let phase1_witness = shared
        .best_witness
        .lock()
        .unwrap()
        .clone()
        .map(|f| Broadcast::new(f.into_iter().map(u32::from).collect()))
        .unwrap_or_else(|| seed.clone());
    let mut nodes = shared.nodes.load(Ordering::Relaxed);
    if shared.aborted.load(Ordering::Relaxed) {
        return Ok(ParameterResult {
            kind,
            value,
            optimal: false,
            witness: phase1_witness,
            nodes_explored: nodes,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }

    // Phase 2: lexicographically least witness of that weight.
    let witness = {
        let plain = if heuristic {
            Problem::new(g, &d, kind, false)
        } else {
            problem
        };
        let natural: Vec<usize> = (0..n).collect();
        let remaining = options.node_budget.saturating_sub(nodes);
        let shared2 = Shared::new(value, remaining, deadline);
        let mut search = Search::new(&plain, &natural, Mode::Target(value), &shared2);
        search.dfs(&State::root(&plain));
        search.flush();
        nodes += shared2.nodes.load(Ordering::Relaxed);
        search
            .found
            .pop()
            .map(|f| Broadcast::new(f.into_iter().map(u32::from).collect()))
            .unwrap_or(phase1_witness)
    };
    debug_assert!(kind.is_feasible(&witness, g, &d));
    debug_assert_eq!(witness.weight(), value);
    Ok(ParameterResult {
        kind,
        value,
        optimal: true,
        witness,
        nodes_explored: nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Upper cap on the vertex count for [`enumerate_optimal`].
pub const ENUMERATION_CAP: usize = 12;

/// Every optimal feasible broadcast (up to `limit`), in lexicographic order
/// of strength vectors.
pub fn enumerate_optimal(g: &Graph, kind: ParameterKind, limit: usize) -> Result<Vec<Broadcast>> {
    let n = g.n();
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let options = SolveOptions::default().with_threads(1);
    let value = solve(g, kind, &options)?.value;
    if n == 1 {
        return Ok(vec![Broadcast::new(vec![1])]);
    }
    let d = distances(g);
    let problem = Problem::new(g, &d, kind, false);
    let natural: Vec<usize> = (0..n).collect();
    let shared = Shared::new(value, u64::MAX, None);
    let mut search = Search::new(&problem, &natural, Mode::Target(value), &shared);
    search.limit = limit;
    search.dfs(&State::root(&problem));
    Ok(search
        .found
        .into_iter()
        .map(|f| Broadcast::new(f.into_iter().map(u32::from).collect()))
        .collect())
}

/// `alpha` through the dedicated independent-set search instead of the
/// broadcast engine.
pub fn solve_alpha_via_sets(g: &Graph) -> Result<ParameterResult> {
    independence_number_capped(g, MAXN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn single() -> SolveOptions {
        SolveOptions::default().with_threads(1)
    }

    fn value(spec: FamilySpec, kind: ParameterKind) -> u32 {
        let g = generate(&spec).unwrap();
        let r = solve(&g, kind, &single()).unwrap();
        assert!(r.optimal);
        r.value
    }

    #[test]
    fn bracket_examples() {
        let p5 = generate(&FamilySpec::Path(5)).unwrap();
        assert_eq!(
            bounds(&p5, ParameterKind::GammaUpper, &distances(&p5)).unwrap(),
            (4, 4)
        );
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        assert_eq!(
            bounds(&k5, ParameterKind::GammaUpper, &distances(&k5)).unwrap(),
            (1, 1)
        );
        let sp = generate(&FamilySpec::Spider(vec![2, 2, 2])).unwrap();
        assert_eq!(
            bounds(&sp, ParameterKind::AlphaBn, &distances(&sp)).unwrap(),
            (4, 6)
        );
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            bounds(&two, ParameterKind::AlphaBn, &distances(&two)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn paths_and_small_cases() {
        assert_eq!(value(FamilySpec::Path(6), ParameterKind::GammaUpper), 5);
        assert_eq!(value(FamilySpec::Path(2), ParameterKind::IBn), 1);
        assert_eq!(value(FamilySpec::Complete(4), ParameterKind::AlphaBn), 1);
        assert_eq!(value(FamilySpec::Complete(4), ParameterKind::GammaUpper), 1);
        assert_eq!(value(FamilySpec::Path(1), ParameterKind::GammaUpper), 1);
    }

    #[test]
    fn spider_values() {
        let sp = || FamilySpec::Spider(vec![2, 2, 2]);
        assert_eq!(value(sp(), ParameterKind::AlphaBn), 6);
        assert_eq!(value(sp(), ParameterKind::AlphaBnr), 4);
        assert_eq!(value(sp(), ParameterKind::AlphaBnd), 4);
        assert_eq!(value(sp(), ParameterKind::GammaUpper), 4);
        assert_eq!(value(sp(), ParameterKind::AlphaH), 9);
        assert_eq!(value(sp(), ParameterKind::Alpha), 4);
    }

    #[test]
    fn rejects_bad_inputs() {
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            solve(&two, ParameterKind::AlphaBn, &single()),
            Err(Error::Disconnected)
        );
        let big = generate(&FamilySpec::Path(30)).unwrap();
        assert!(matches!(
            solve(&big, ParameterKind::GammaUpper, &single()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn exhausted_budget_is_flagged() {
        let g = generate(&FamilySpec::Grid(3, 4)).unwrap();
        let r = solve(
            &g,
            ParameterKind::GammaUpper,
            &single().with_node_budget(10),
        )
        .unwrap();
        assert!(!r.optimal);
        let d = distances(&g);
        assert!(ParameterKind::GammaUpper.is_feasible(&r.witness, &g, &d));
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let g = generate(&FamilySpec::Path(4)).unwrap();
        let r = solve(&g, ParameterKind::Alpha, &single()).unwrap();
        assert_eq!(r.witness.strengths(), &[0, 1, 0, 1]);
        let all = enumerate_optimal(&g, ParameterKind::GammaUpper, usize::MAX).unwrap();
        let r = solve(&g, ParameterKind::GammaUpper, &single()).unwrap();
        assert_eq!(&r.witness, &all[0]);
    }

    #[test]
    fn enumeration_of_p3_alpha_bn() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        let all = enumerate_optimal(&g, ParameterKind::AlphaBn, 100).unwrap();
        assert!(all.iter().all(|f| f.weight() == 2));
        assert!(all.contains(&Broadcast::new(vec![2, 0, 0])));
        assert!(all.contains(&Broadcast::new(vec![0, 0, 2])));
        assert!(all.contains(&Broadcast::new(vec![1, 0, 1])));
    }
}
