//! Canonical-tree enumeration of Ferrers diagrams.
//!
//! Every diagram containing the seed is generated exactly once by adding
//! its non-seed nodes in lexicographically increasing order. This is a
//! valid reverse search: each prefix of the lex-sorted non-seed nodes is
//! automatically downward-closed (every predecessor v - e_i sorts strictly
//! before v), so the set of such addition sequences forms a tree with one
//! path per diagram. No visited set is needed; memory is the current path
//! plus the addable frontier.
//!
//! Classification (depth, reduced dimension, D-component-freeness, Type2
//! count) is maintained incrementally along the path and accumulated into
//! a [`CountLedger`]. Ledgers are mergeable by addition, which makes the
//! parallel runs (subtree splitting at a shallow frontier) schedule- and
//! thread-count-independent.

use std::time::Instant;

use num_bigint::BigUint;

use crate::diagram::{FerrersDiagram, Node};
use crate::{Error, Result};

/// Hard representation limit: nodes are packed into a u128, one byte per
/// axis, most significant byte first so integer order is lexicographic.
pub const MAX_AMBIENT: usize = 16;
/// Desk-scale ambient guard (the packing still allows 15 and 16 with
/// `allow_large`).
pub const GUARD_AMBIENT: usize = 14;
/// Desk-scale projected-visit guard.
pub const GUARD_VISITS: f64 = 1e9;

type Packed = u128;

#[inline]
fn shift(axis: usize) -> u32 {
    (8 * (15 - axis)) as u32
}

#[inline]
fn coord_of(p: Packed, axis: usize) -> u32 {
    ((p >> shift(axis)) & 0xff) as u32
}

#[inline]
fn plus_unit(p: Packed, axis: usize) -> Packed {
    p + (1u128 << shift(axis))
}

fn pack(coords: &[u32]) -> Packed {
    let mut p = 0u128;
    for (i, &c) in coords.iter().enumerate() {
        debug_assert!(c <= 0xff);
        p |= (c as u128) << shift(i);
    }
    p
}

fn unpack(p: Packed, r: usize) -> Node {
    Node::new((0..r).map(|i| coord_of(p, i)).collect())
}

/// What the ledger records per visited diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classify {
    /// Per-depth visit totals only.
    Totals,
    /// Totals refined by reduced dimension of the skew against the seed.
    ByRd,
    /// Totals plus, per depth, diagrams with r.d. equal to the ambient
    /// dimension and no skew component lying in D.
    FCounts,
    /// `FCounts`, further refined by the number of Type2 skew nodes.
    ForestRefined,
}

impl Classify {
    fn needs_skew(self) -> bool {
        !matches!(self, Classify::Totals)
    }
}

/// How to run the walk.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    /// Use the rayon global pool (sequential when the `parallel` feature
    /// is disabled).
    #[default]
    Auto,
    /// A dedicated pool with exactly this many threads.
    Threads(usize),
}

/// A fully specified enumeration run.
#[derive(Clone, Debug)]
pub struct EnumConfig {
    pub ambient_dim: usize,
    pub seed: FerrersDiagram,
    /// Tree depth beyond the seed.
    pub max_added: usize,
    /// Symmetric box restriction: coordinates take values in 0..b-1.
    pub box_bound: Option<u32>,
    pub classify: Classify,
    pub threads: Parallelism,
    /// Lift the desk-scale guards (ambient and projected visits).
    pub allow_large: bool,
    /// Force sequential visitation even when counting could be parallel.
    pub serialize_visitor: bool,
    /// Emit visits/sec to stderr while running, plus a final summary.
    pub progress: bool,
    /// Prune subtrees that cannot reach this reduced dimension within the
    /// depth budget (each added node raises the r.d. by at most 2). Counts
    /// for r.d. >= the bound stay exact; others become partial, so this is
    /// only exposed through the per-column counting helpers.
    pub(crate) min_final_rd: Option<usize>,
}

impl EnumConfig {
    /// Seeded at the single origin node: visits at depth k are diagrams
    /// with k+1 nodes, i.e. per-depth totals give p_{r-1}(k+1).
    pub fn origin_seeded(ambient_dim: usize, max_added: usize) -> Self {
        EnumConfig {
            ambient_dim,
            seed: FerrersDiagram::origin(ambient_dim),
            max_added,
            box_bound: None,
            classify: Classify::Totals,
            threads: Parallelism::default(),
            allow_large: false,
            serialize_visitor: false,
            progress: false,
            min_final_rd: None,
        }
    }

    /// Seeded at mu_r in ambient r: every visited diagram is strict, and
    /// visits at depth m are the diagrams counted by a_{m+r+1,r}.
    pub fn mu_seeded(r: usize, max_added: usize) -> Self {
        EnumConfig {
            seed: FerrersDiagram::mu(r),
            ..EnumConfig::origin_seeded(r, max_added)
        }
    }

    pub(crate) fn with_min_rd(mut self, rd: usize) -> Self {
        self.min_final_rd = Some(rd);
        self
    }

    fn validate(&self) -> Result<()> {
        let r = self.ambient_dim;
        if r > MAX_AMBIENT {
            return Err(Error::ScaleGuard(format!(
                "ambient dimension {r} exceeds the representation limit {MAX_AMBIENT}"
            )));
        }
        if r > GUARD_AMBIENT && !self.allow_large {
            return Err(Error::ScaleGuard(format!(
                "ambient dimension {r} exceeds the desk-scale guard {GUARD_AMBIENT} \
                 (pass allow_large to override)"
            )));
        }
        if self.seed.ambient_dim() != r {
            return Err(Error::Config(format!(
                "seed ambient dimension {} does not match {r}",
                self.seed.ambient_dim()
            )));
        }
        if self.seed.node_count() == 0 {
            return Err(Error::Config("seed must be nonempty".into()));
        }
        if !self.seed.is_valid() {
            return Err(Error::Config(format!(
                "seed is not downward-closed: {}",
                self.seed.validate()
            )));
        }
        if let Some(b) = self.box_bound {
            if b < 1 {
                return Err(Error::Config("box bound must be at least 1".into()));
            }
            if !self.seed.in_box(b) {
                return Err(Error::Config("seed does not fit the box".into()));
            }
        }
        let seed_max = self
            .seed
            .nodes()
            .iter()
            .flat_map(|n| n.coords())
            .copied()
            .max()
            .unwrap_or(0) as usize;
        if seed_max + self.max_added > 0xff {
            return Err(Error::Config(format!(
                "coordinates can reach {}, beyond the packed-byte limit 255",
                seed_max + self.max_added
            )));
        }
        if self.classify.needs_skew() && self.seed != FerrersDiagram::mu(r) {
            return Err(Error::Config(
                "skew classification (r.d. / D-freeness / Type2) requires a mu_r seed".into(),
            ));
        }
        if let Some(min_rd) = self.min_final_rd {
            if min_rd > r {
                return Err(Error::Config(format!(
                    "target reduced dimension {min_rd} exceeds ambient {r}"
                )));
            }
        }
        let projected = projected_visits(r, self.max_added, self.box_bound);
        if projected > GUARD_VISITS && !self.allow_large {
            return Err(Error::ScaleGuard(format!(
                "projected visit count ~{projected:.2e} exceeds {GUARD_VISITS:.0e} \
                 (pass allow_large to override)"
            )));
        }
        Ok(())
    }
}

/// Rough upper estimate of tree size, used only by the desk-scale guard.
/// Per-depth growth is modelled as C(r+1,2)^k / k!, capped by the number
/// of k-subsets of the box universe when a box is set.
fn projected_visits(r: usize, max_added: usize, box_bound: Option<u32>) -> f64 {
    let ln_b = (((r * (r + 1)) / 2).max(1) as f64).ln();
    let universe = box_bound.map(|b| (b as f64).powi(r as i32) - (r as f64) - 1.0);
    let mut total = 0.0f64;
    let mut ln_fact = 0.0f64;
    for k in 0..=max_added {
        if k > 0 {
            ln_fact += (k as f64).ln();
        }
        let mut ln_est = k as f64 * ln_b - ln_fact;
        if let Some(u) = universe {
            if u < k as f64 {
                continue; // box exhausted
            }
            let mut ln_choose = 0.0;
            for i in 0..k {
                ln_choose += ((u - i as f64) / (i as f64 + 1.0)).ln();
            }
            ln_est = ln_est.min(ln_choose);
        }
        total += ln_est.exp().min(1e30);
        if total > 1e30 {
            break;
        }
    }
    total
}

/// Exact per-depth counts from one enumeration run, with the optional
/// refinements requested via [`Classify`]. Refined counts sum to the
/// unrefined total at each depth. Ledgers merge by elementwise addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountLedger {
    pub ambient_dim: usize,
    pub max_added: usize,
    /// Visits per depth, depth 0 being the seed itself.
    pub totals: Vec<BigUint>,
    /// `[depth][rd]` for rd in 0..=ambient_dim.
    pub by_rd: Option<Vec<Vec<BigUint>>>,
    /// Per depth: diagrams with r.d. == ambient and no component in D.
    pub f_counts: Option<Vec<BigUint>>,
    /// `[depth][type2]` refinement of `f_counts`.
    pub f_by_type2: Option<Vec<Vec<BigUint>>>,
}

impl CountLedger {
    fn from_raw(cfg: &EnumConfig, raw: RawCounts) -> Self {
        let depths = cfg.max_added + 1;
        let r = cfg.ambient_dim;
        let to_big = |v: Vec<u64>| v.into_iter().map(BigUint::from).collect::<Vec<_>>();
        let chunk = |v: Vec<u64>, w: usize| {
            v.chunks(w)
                .map(|c| c.iter().copied().map(BigUint::from).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        CountLedger {
            ambient_dim: r,
            max_added: cfg.max_added,
            totals: to_big(raw.totals),
            by_rd: raw.by_rd.map(|v| chunk(v, r + 1)),
            f_counts: raw.f.map(to_big),
            f_by_type2: raw.f_by_t2.map(|v| chunk(v, depths)),
        }
    }
}

/// Per-worker counters; merged by addition.
#[derive(Clone, Debug)]
struct RawCounts {
    totals: Vec<u64>,
    by_rd: Option<Vec<u64>>,
    f: Option<Vec<u64>>,
    f_by_t2: Option<Vec<u64>>,
}

impl RawCounts {
    fn new(classify: Classify, max_added: usize, ambient: usize) -> Self {
        let depths = max_added + 1;
        RawCounts {
            totals: vec![0; depths],
            by_rd: matches!(classify, Classify::ByRd).then(|| vec![0; depths * (ambient + 1)]),
            f: matches!(classify, Classify::FCounts | Classify::ForestRefined)
                .then(|| vec![0; depths]),
            f_by_t2: matches!(classify, Classify::ForestRefined)
                .then(|| vec![0; depths * depths]),
        }
    }

    fn merge(mut self, other: RawCounts) -> RawCounts {
        fn add(a: &mut Vec<u64>, b: &[u64]) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += *y;
            }
        }
        add(&mut self.totals, &other.totals);
        if let (Some(a), Some(b)) = (self.by_rd.as_mut(), other.by_rd.as_ref()) {
            add(a, b);
        }
        if let (Some(a), Some(b)) = (self.f.as_mut(), other.f.as_ref()) {
            add(a, b);
        }
        if let (Some(a), Some(b)) = (self.f_by_t2.as_mut(), other.f_by_t2.as_ref()) {
            add(a, b);
        }
        self
    }
}

/// Receives every visited diagram. Implementations must tolerate
/// concurrent invocation unless the run serializes visitation.
pub trait Visitor: Sync {
    /// When false, diagrams are never materialized (counting-only runs).
    const ACTIVE: bool = true;
    fn visit(&self, diagram: &FerrersDiagram);
}

struct NoVisit;

impl Visitor for NoVisit {
    const ACTIVE: bool = false;
    #[inline]
    fn visit(&self, _diagram: &FerrersDiagram) {}
}

/// Adapter for plain closures.
pub struct FnVisitor<F: Fn(&FerrersDiagram) + Sync>(pub F);

impl<F: Fn(&FerrersDiagram) + Sync> Visitor for FnVisitor<F> {
    fn visit(&self, diagram: &FerrersDiagram) {
        (self.0)(diagram)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum NodeClass {
    Type1,
    Type2,
    Other,
}

struct PathEntry {
    node: Packed,
    class: NodeClass,
    /// How many frontier insertions this step pushed on `ins_stack`.
    ins_count: u8,
}

struct Progress {
    counter: std::sync::atomic::AtomicU64,
    started: Instant,
    last_report: std::sync::Mutex<Instant>,
}

impl Progress {
    fn new() -> Self {
        Progress {
            counter: Default::default(),
            started: Instant::now(),
            last_report: std::sync::Mutex::new(Instant::now()),
        }
    }

    fn bump(&self, n: u64) {
        use std::sync::atomic::Ordering;
        let total = self.counter.fetch_add(n, Ordering::Relaxed) + n;
        let mut last = self.last_report.lock().unwrap();
        if last.elapsed().as_secs_f64() >= 1.0 {
            *last = Instant::now();
            let rate = total as f64 / self.started.elapsed().as_secs_f64();
            eprintln!("enumerate: {total} visits, {rate:.0} visits/s");
        }
    }
}

struct Walker<'a, V: Visitor> {
    r: usize,
    max_coord: u32,
    max_added: usize,
    min_final_rd: usize,
    /// All nodes (seed + path), sorted; lex order == packed order.
    set: Vec<Packed>,
    addable: Vec<Packed>,
    path: Vec<PathEntry>,
    ins_stack: Vec<Packed>,
    axis_count: [u32; MAX_AMBIENT],
    rd: usize,
    type2: usize,
    counts: RawCounts,
    classify: Classify,
    visitor: &'a V,
    progress: Option<&'a Progress>,
    local_visits: u64,
}

impl<'a, V: Visitor> Walker<'a, V> {
    fn new(cfg: &EnumConfig, visitor: &'a V, progress: Option<&'a Progress>) -> Self {
        let r = cfg.ambient_dim;
        let seed_max = cfg
            .seed
            .nodes()
            .iter()
            .flat_map(|n| n.coords())
            .copied()
            .max()
            .unwrap_or(0);
        let max_coord = match cfg.box_bound {
            Some(b) => b - 1,
            None => seed_max + cfg.max_added as u32,
        };
        let mut set: Vec<Packed> = cfg.seed.nodes().iter().map(|n| pack(n.coords())).collect();
        set.sort_unstable();
        let mut w = Walker {
            r,
            max_coord,
            max_added: cfg.max_added,
            min_final_rd: cfg.min_final_rd.unwrap_or(0),
            set,
            addable: Vec::new(),
            path: Vec::with_capacity(cfg.max_added),
            ins_stack: Vec::with_capacity(cfg.max_added * r),
            axis_count: [0; MAX_AMBIENT],
            rd: 0,
            type2: 0,
            counts: RawCounts::new(cfg.classify, cfg.max_added, r),
            classify: cfg.classify,
            visitor,
            progress,
            local_visits: 0,
        };
        w.addable = w.initial_addable();
        w
    }

    fn initial_addable(&self) -> Vec<Packed> {
        let mut out = Vec::new();
        for &p in &self.set {
            for i in 0..self.r {
                if coord_of(p, i) >= self.max_coord {
                    continue;
                }
                let cand = plus_unit(p, i);
                if self.set.binary_search(&cand).is_ok() {
                    continue;
                }
                if self.supported(cand, i) && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All predecessors of `cand` except the one on `skip_axis` are present.
    #[inline]
    fn supported(&self, cand: Packed, skip_axis: usize) -> bool {
        for j in 0..self.r {
            if j == skip_axis || coord_of(cand, j) == 0 {
                continue;
            }
            let pred = cand - (1u128 << shift(j));
            if self.set.binary_search(&pred).is_err() {
                return false;
            }
        }
        true
    }

    fn classify_node(&self, p: Packed) -> NodeClass {
        let mut ones = 0u32;
        let mut twos = 0u32;
        let mut other = 0u32;
        for i in 0..self.r {
            match coord_of(p, i) {
                0 => {}
                1 => ones += 1,
                2 => twos += 1,
                _ => other += 1,
            }
        }
        if ones == 2 && twos == 0 && other == 0 {
            NodeClass::Type1
        } else if ones == 0 && twos == 1 && other == 0 {
            NodeClass::Type2
        } else {
            NodeClass::Other
        }
    }

    fn add(&mut self, v: Packed) {
        let pos = self.set.binary_search(&v).unwrap_err();
        self.set.insert(pos, v);
        let pos = self.addable.binary_search(&v).expect("v was addable");
        self.addable.remove(pos);

        let mut ins = 0u8;
        for i in 0..self.r {
            if coord_of(v, i) >= self.max_coord {
                continue;
            }
            let cand = plus_unit(v, i);
            if self.supported(cand, i) {
                let pos = self.addable.binary_search(&cand).unwrap_err();
                self.addable.insert(pos, cand);
                self.ins_stack.push(cand);
                ins += 1;
            }
        }

        let class = if self.classify.needs_skew() {
            for i in 0..self.r {
                if coord_of(v, i) > 0 {
                    self.axis_count[i] += 1;
                    if self.axis_count[i] == 1 {
                        self.rd += 1;
                    }
                }
            }
            let c = self.classify_node(v);
            if c == NodeClass::Type2 {
                self.type2 += 1;
            }
            c
        } else {
            NodeClass::Other
        };

        self.path.push(PathEntry {
            node: v,
            class,
            ins_count: ins,
        });
    }

    fn remove_last(&mut self) {
        let entry = self.path.pop().expect("path nonempty");
        for _ in 0..entry.ins_count {
            let cand = self.ins_stack.pop().expect("insertion stack");
            let pos = self.addable.binary_search(&cand).expect("inserted addable");
            self.addable.remove(pos);
        }
        let pos = self.addable.binary_search(&entry.node).unwrap_err();
        self.addable.insert(pos, entry.node);
        let pos = self.set.binary_search(&entry.node).expect("node present");
        self.set.remove(pos);

        if self.classify.needs_skew() {
            for i in 0..self.r {
                if coord_of(entry.node, i) > 0 {
                    self.axis_count[i] -= 1;
                    if self.axis_count[i] == 0 {
                        self.rd -= 1;
                    }
                }
            }
            if entry.class == NodeClass::Type2 {
                self.type2 -= 1;
            }
        }
    }

    /// True when no skew component consists solely of Type1 nodes.
    fn d_component_free(&self) -> bool {
        let mut parent: [u8; MAX_AMBIENT] = [0; MAX_AMBIENT];
        for (i, p) in parent.iter_mut().enumerate().take(self.r) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; MAX_AMBIENT], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for e in &self.path {
            let mut first: Option<u8> = None;
            for i in 0..self.r {
                if coord_of(e.node, i) > 0 {
                    match first {
                        None => first = Some(i as u8),
                        Some(f) => {
                            let (a, b) = (find(&mut parent, f), find(&mut parent, i as u8));
                            if a != b {
                                let lo = a.min(b);
                                parent[a.max(b) as usize] = lo;
                                first = Some(lo);
                            }
                        }
                    }
                }
            }
        }
        let mut seen = [false; MAX_AMBIENT];
        let mut impure = [false; MAX_AMBIENT];
        for e in &self.path {
            let first = (0..self.r)
                .find(|&i| coord_of(e.node, i) > 0)
                .expect("skew node has support") as u8;
            let root = find(&mut parent, first) as usize;
            seen[root] = true;
            if e.class != NodeClass::Type1 {
                impure[root] = true;
            }
        }
        (0..self.r).all(|i| !seen[i] || impure[i])
    }

    #[inline]
    fn record(&mut self, depth: usize) {
        self.counts.totals[depth] += 1;
        match self.classify {
            Classify::Totals => {}
            Classify::ByRd => {
                self.counts.by_rd.as_mut().unwrap()[depth * (self.r + 1) + self.rd] += 1;
            }
            Classify::FCounts | Classify::ForestRefined => {
                if self.rd == self.r && self.d_component_free() {
                    self.counts.f.as_mut().unwrap()[depth] += 1;
                    if self.classify == Classify::ForestRefined {
                        self.counts.f_by_t2.as_mut().unwrap()
                            [depth * (self.max_added + 1) + self.type2] += 1;
                    }
                }
            }
        }
        if let Some(p) = self.progress {
            self.local_visits += 1;
            if self.local_visits >= 1 << 16 {
                p.bump(self.local_visits);
                self.local_visits = 0;
            }
        }
        if V::ACTIVE {
            let nodes: Vec<Node> = self.set.iter().map(|&p| unpack(p, self.r)).collect();
            let d = FerrersDiagram::new(self.r, nodes).expect("walker state is a valid diagram");
            self.visitor.visit(&d);
        }
    }

    #[inline]
    fn pruned(&self, depth: usize) -> bool {
        self.min_final_rd > 0 && self.rd + 2 * (self.max_added - depth) < self.min_final_rd
    }

    /// Enumerate the subtree rooted at the current state, whose own depth
    /// is `depth` and whose last-added node is `last` (0 for the seed:
    /// addable nodes are never the origin).
    fn walk(&mut self, last: Packed, depth: usize, limit: usize) {
        if self.pruned(depth) {
            return;
        }
        self.record(depth);
        if depth == limit {
            return;
        }
        let mut cursor = last;
        loop {
            let idx = self.addable.partition_point(|&a| a <= cursor);
            if idx == self.addable.len() {
                break;
            }
            let v = self.addable[idx];
            cursor = v;
            self.add(v);
            self.walk(v, depth + 1, limit);
            self.remove_last();
        }
    }

    /// Like `walk`, but stops at `limit` and collects the paths of the
    /// frontier diagrams there instead of recording them.
    fn collect_frontier(&mut self, last: Packed, depth: usize, limit: usize, out: &mut Vec<Vec<Packed>>) {
        if self.pruned(depth) {
            return;
        }
        if depth == limit {
            out.push(self.path.iter().map(|e| e.node).collect());
            return;
        }
        self.record(depth);
        let mut cursor = last;
        loop {
            let idx = self.addable.partition_point(|&a| a <= cursor);
            if idx == self.addable.len() {
                break;
            }
            let v = self.addable[idx];
            cursor = v;
            self.add(v);
            self.collect_frontier(v, depth + 1, limit, out);
            self.remove_last();
        }
    }

    fn finish(mut self) -> RawCounts {
        if let Some(p) = self.progress {
            if self.local_visits > 0 {
                p.bump(self.local_visits);
                self.local_visits = 0;
            }
        }
        std::mem::replace(
            &mut self.counts,
            RawCounts::new(Classify::Totals, 0, 0),
        )
    }
}

/// Count-only frontier size at `depth` (respecting pruning), used to pick
/// the parallel split depth.
fn frontier_size(cfg: &EnumConfig, depth: usize) -> usize {
    let mut out = Vec::new();
    let mut w = Walker::new(cfg, &NoVisit, None);
    w.collect_frontier(0, 0, depth, &mut out);
    out.len()
}

fn run_sequential<V: Visitor>(cfg: &EnumConfig, visitor: &V, progress: Option<&Progress>) -> RawCounts {
    let mut w = Walker::new(cfg, visitor, progress);
    w.walk(0, 0, cfg.max_added);
    w.finish()
}

#[cfg(feature = "parallel")]
fn run_parallel<V: Visitor>(
    cfg: &EnumConfig,
    visitor: &V,
    progress: Option<&Progress>,
    threads: usize,
) -> RawCounts {
    use rayon::prelude::*;

    let target = threads * 8;
    let mut split = 0usize;
    for d in 1..=cfg.max_added.saturating_sub(1) {
        if frontier_size(cfg, d) >= target {
            split = d;
            break;
        }
    }
    if split == 0 {
        return run_sequential(cfg, visitor, progress);
    }

    // Shallow pass: record depths < split, collect subtree roots at split.
    let mut items = Vec::new();
    let mut base = Walker::new(cfg, visitor, progress);
    base.collect_frontier(0, 0, split, &mut items);
    let base = base.finish();

    let subtree = |path: &[Packed]| -> RawCounts {
        let mut w = Walker::new(cfg, visitor, progress);
        for &v in path {
            w.add(v);
        }
        let last = *path.last().expect("split depth >= 1");
        w.walk(last, split, cfg.max_added);
        w.finish()
    };

    items
        .par_iter()
        .map(|path| subtree(path))
        .reduce(|| RawCounts::new(cfg.classify, cfg.max_added, cfg.ambient_dim), RawCounts::merge)
        .merge(base)
}

/// Run an enumeration, counting only.
pub fn enumerate(cfg: &EnumConfig) -> Result<CountLedger> {
    enumerate_with(cfg, &NoVisit)
}

/// Run an enumeration, invoking `visitor` exactly once per visited
/// diagram. The ledger result is independent of traversal order and
/// thread count.
pub fn enumerate_with<V: Visitor>(cfg: &EnumConfig, visitor: &V) -> Result<CountLedger> {
    cfg.validate()?;
    let progress = cfg.progress.then(Progress::new);
    let progress = progress.as_ref();

    let sequential = cfg.serialize_visitor
        || matches!(cfg.threads, Parallelism::Sequential | Parallelism::Threads(1))
        || cfg.max_added < 2;

    let raw = if sequential {
        run_sequential(cfg, visitor, progress)
    } else {
        #[cfg(feature = "parallel")]
        {
            match cfg.threads {
                Parallelism::Threads(k) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(k)
                        .build()
                        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
                    pool.install(|| {
                        Ok::<_, Error>(run_parallel(cfg, visitor, progress, k))
                    })?
                }
                _ => run_parallel(
                    cfg,
                    visitor,
                    progress,
                    rayon::current_num_threads().max(1),
                ),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            if let Parallelism::Threads(k) = cfg.threads {
                if k > 1 {
                    return Err(Error::Config(
                        "built without the `parallel` feature; only --threads 1 available".into(),
                    ));
                }
            }
            run_sequential(cfg, visitor, progress)
        }
    };

    if let Some(p) = progress {
        let total: u64 = raw.totals.iter().sum();
        let secs = p.started.elapsed().as_secs_f64();
        eprintln!(
            "enumerate: done, {total} visits in {secs:.2}s ({:.0} visits/s)",
            total as f64 / secs.max(1e-9)
        );
        eprintln!("enumerate: depth histogram {:?}", raw.totals);
    }

    Ok(CountLedger::from_raw(cfg, raw))
}
