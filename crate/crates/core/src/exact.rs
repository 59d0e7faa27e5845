//! Exhaustive solvers used as ground truth.
//!
//! Walk lengths are found by iterative deepening over all walks; the
//! multiplicity-type parameters by enumerating edge multisets, using that a
//! multiset is the edge multiset of some walk iff its support is connected
//! and it has zero or two vertices of odd incidence.

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{EdgeMultiset, Graph, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactValue {
    Finite(usize),
    /// No irregularising object exists.
    Infinite,
    /// The search budget was used up without finding one.
    Exhausted(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub value: ExactValue,
    pub walk: Option<Walk>,
    pub multiset: Option<EdgeMultiset>,
}

impl ExactResult {
    fn infinite() -> Self {
        ExactResult {
            value: ExactValue::Infinite,
            walk: None,
            multiset: None,
        }
    }

    fn exhausted(budget: usize) -> Self {
        ExactResult {
            value: ExactValue::Exhausted(budget),
            walk: None,
            multiset: None,
        }
    }

    fn with_walk(value: usize, walk: Walk) -> Self {
        ExactResult {
            value: ExactValue::Finite(value),
            multiset: Some(walk.edge_multiset()),
            walk: Some(walk),
        }
    }

    pub fn finite(&self) -> Option<usize> {
        match self.value {
            ExactValue::Finite(v) => Some(v),
            _ => None,
        }
    }
}

/// `2(m + n - 1)`, an upper bound on the shortest irregularising walk of a
/// nice graph.
pub fn default_budget(g: &Graph) -> usize {
    2 * (g.m() + g.n()).saturating_sub(1)
}

/// Degrees of `G + W` together with the number of conflicting edges,
/// maintained under single-vertex increments.
#[derive(Clone)]
struct ConflictCounter<'a> {
    g: &'a Graph,
    deg: Vec<usize>,
    conflicts: usize,
}

impl<'a> ConflictCounter<'a> {
    fn new(g: &'a Graph) -> Self {
        let deg = g.degrees();
        let conflicts = g.edges().iter().filter(|&&(u, v)| deg[u] == deg[v]).count();
        ConflictCounter { g, deg, conflicts }
    }

    fn shift(&mut self, v: usize, up: bool) {
        let before = self.g.neighbors(v).iter().filter(|&&u| self.deg[u] == self.deg[v]).count();
        if up {
            self.deg[v] += 1;
        } else {
            self.deg[v] -= 1;
        }
        let after = self.g.neighbors(v).iter().filter(|&&u| self.deg[u] == self.deg[v]).count();
        self.conflicts = self.conflicts + after - before;
    }

    fn step(&mut self, u: usize, v: usize) {
        self.shift(u, true);
        self.shift(v, true);
    }

    fn unstep(&mut self, u: usize, v: usize) {
        self.shift(v, false);
        self.shift(u, false);
    }
}

/// Shortest irregularising walk, searched up to `budget` edges.
///
/// Returns `Infinite` for graphs that are not nice. Walks are enumerated by
/// length, then start vertex, then neighbours in ascending order, so the
/// witness is the lexicographically smallest shortest one.
pub fn exact_mlw(g: &Graph, budget: usize) -> ExactResult {
    mlw_search(g, budget, false)
}

/// Same result as [`exact_mlw`], with each length level split across start
/// vertices on the rayon pool.
pub fn exact_mlw_parallel(g: &Graph, budget: usize) -> ExactResult {
    mlw_search(g, budget, true)
}

/// Like [`exact_mlw`], but only walks staying inside `allowed` are
/// considered.
pub fn exact_mlw_within(g: &Graph, budget: usize, allowed: &[bool]) -> ExactResult {
    if !g.is_nice() {
        return ExactResult::infinite();
    }
    if g.is_locally_irregular() {
        return ExactResult::with_walk(0, Walk::empty());
    }
    for k in 1..=budget {
        if let Some(w) = (0..g.n()).filter(|&s| allowed[s]).find_map(|s| walk_from(g, s, k, Some(allowed))) {
            return ExactResult::with_walk(k, w);
        }
    }
    ExactResult::exhausted(budget)
}

fn mlw_search(g: &Graph, budget: usize, parallel: bool) -> ExactResult {
    if !g.is_nice() {
        return ExactResult::infinite();
    }
    if g.is_locally_irregular() {
        return ExactResult::with_walk(0, Walk::empty());
    }
    for k in 1..=budget {
        let found = if parallel {
            (0..g.n())
                .into_par_iter()
                .filter_map(|s| walk_from(g, s, k, None))
                .min()
        } else {
            (0..g.n()).find_map(|s| walk_from(g, s, k, None))
        };
        if let Some(w) = found {
            return ExactResult::with_walk(k, w);
        }
    }
    ExactResult::exhausted(budget)
}

fn walk_from(g: &Graph, start: usize, len: usize, allowed: Option<&[bool]>) -> Option<Walk> {
    fn dfs(c: &mut ConflictCounter, walk: &mut Vec<usize>, left: usize, allowed: Option<&[bool]>) -> bool {
        if left == 0 {
            return c.conflicts == 0;
        }
        let v = *walk.last().expect("walk has a start");
        for &u in c.g.neighbors(v) {
            if allowed.is_some_and(|a| !a[u]) {
                continue;
            }
            c.step(v, u);
            walk.push(u);
            if dfs(c, walk, left - 1, allowed) {
                return true;
            }
            walk.pop();
            c.unstep(v, u);
        }
        false
    }
    let mut c = ConflictCounter::new(g);
    let mut walk = vec![start];
    dfs(&mut c, &mut walk, len, allowed).then(|| Walk::new(walk))
}

/// Constraints for the edge-multiset search.
#[derive(Clone, Copy)]
enum Target {
    /// Some walk multiset with every edge used at most `k` times.
    EdgeCap(usize),
    /// Some walk multiset with at most `k` edge-slots at every vertex.
    VertexCap(usize),
    /// Any multiset, minimum cardinality, at most `budget`.
    MinCardinality(usize),
}

struct MultisetSearch<'a> {
    g: &'a Graph,
    target: Target,
    caps: Vec<usize>,
    /// Index of the last edge incident to each vertex.
    last_edge: Vec<Option<usize>>,
    counts: Vec<usize>,
    inc: Vec<usize>,
    sum: usize,
    odd_final: usize,
    best: Option<(usize, Vec<usize>)>,
}

impl<'a> MultisetSearch<'a> {
    fn new(g: &'a Graph, target: Target) -> Self {
        let edges = g.edges();
        let mut last_edge = vec![None; g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            last_edge[u] = Some(i);
            last_edge[v] = Some(i);
        }
        let caps = edges
            .iter()
            .map(|&(u, v)| {
                let simplify = 2 * (g.degree(u) + g.degree(v) - 1);
                match target {
                    Target::EdgeCap(k) | Target::VertexCap(k) => k.min(simplify),
                    Target::MinCardinality(_) => simplify,
                }
            })
            .collect();
        MultisetSearch {
            g,
            target,
            caps,
            last_edge,
            counts: vec![0; edges.len()],
            inc: vec![0; g.n()],
            sum: 0,
            odd_final: 0,
            best: None,
        }
    }

    fn walk_mode(&self) -> bool {
        !matches!(self.target, Target::MinCardinality(_))
    }

    fn deg(&self, v: usize) -> usize {
        self.g.degree(v) + self.inc[v]
    }

    fn is_final(&self, v: usize, e: usize) -> bool {
        self.last_edge[v].is_some_and(|l| l <= e)
    }

    // Checks the vertices whose last incident edge is `e`.
    fn finalize_ok(&mut self, e: usize, fresh_odd: &mut usize) -> bool {
        let (x, y) = self.g.edges()[e];
        for z in [x, y] {
            if self.last_edge[z] != Some(e) {
                continue;
            }
            let dz = self.deg(z);
            if self
                .g
                .neighbors(z)
                .iter()
                .any(|&w| self.is_final(w, e) && self.deg(w) == dz)
            {
                return false;
            }
            if self.inc[z] % 2 == 1 {
                *fresh_odd += 1;
            }
        }
        !(self.walk_mode() && self.odd_final + *fresh_odd > 2)
    }

    fn run(&mut self) {
        self.dfs(0);
    }

    // Returns true to stop the whole search.
    fn dfs(&mut self, e: usize) -> bool {
        if e == self.counts.len() {
            return self.leaf();
        }
        let (x, y) = self.g.edges()[e];
        let mut limit = self.caps[e];
        match self.target {
            Target::VertexCap(k) => {
                limit = limit.min(k - self.inc[x]).min(k - self.inc[y]);
            }
            Target::MinCardinality(budget) => {
                let bound = self.best.as_ref().map_or(budget + 1, |b| b.0);
                if self.sum >= bound {
                    return false;
                }
                limit = limit.min(bound - 1 - self.sum);
            }
            Target::EdgeCap(_) => {}
        }
        for c in 0..=limit {
            self.counts[e] = c;
            self.inc[x] += c;
            self.inc[y] += c;
            self.sum += c;
            let mut fresh_odd = 0;
            if self.finalize_ok(e, &mut fresh_odd) {
                self.odd_final += fresh_odd;
                let stop = self.dfs(e + 1);
                self.odd_final -= fresh_odd;
                if stop {
                    return true;
                }
            }
            self.inc[x] -= c;
            self.inc[y] -= c;
            self.sum -= c;
        }
        self.counts[e] = 0;
        false
    }

    fn leaf(&mut self) -> bool {
        if self.walk_mode() {
            if self.sum == 0 {
                return false;
            }
            let ms = EdgeMultiset::from_counts(self.g, &self.counts);
            if ms.to_walk(self.g.n(), None).is_some() {
                self.best = Some((self.sum, self.counts.clone()));
                return true;
            }
            false
        } else {
            if self.best.as_ref().is_none_or(|b| self.sum < b.0) {
                self.best = Some((self.sum, self.counts.clone()));
            }
            false
        }
    }
}

fn multiset_walk_search(g: &Graph, cap: usize, edge_cap: bool) -> ExactResult {
    if !g.is_nice() {
        return ExactResult::infinite();
    }
    if g.is_locally_irregular() {
        return ExactResult::with_walk(0, Walk::empty());
    }
    for k in 1..=cap {
        let target = if edge_cap {
            Target::EdgeCap(k)
        } else {
            Target::VertexCap(k)
        };
        let mut search = MultisetSearch::new(g, target);
        search.run();
        if let Some((_, counts)) = search.best {
            let ms = EdgeMultiset::from_counts(g, &counts);
            let walk = ms.to_walk(g.n(), None).expect("checked at the leaf");
            return ExactResult {
                value: ExactValue::Finite(k),
                walk: Some(walk),
                multiset: Some(ms),
            };
        }
    }
    ExactResult::exhausted(cap)
}

/// Smallest `k <= cap` such that some irregularising walk traverses every
/// edge at most `k` times.
pub fn exact_mew(g: &Graph, cap: usize) -> ExactResult {
    multiset_walk_search(g, cap, true)
}

/// Smallest `k <= cap` such that some irregularising walk has at most `k`
/// edges incident to every vertex.
pub fn exact_mvw(g: &Graph, cap: usize) -> ExactResult {
    multiset_walk_search(g, cap, false)
}

/// Minimum cardinality of an edge multiset `F` with `G + F` locally
/// irregular, searched up to `budget`.
pub fn exact_phi(g: &Graph, budget: usize) -> ExactResult {
    let mut search = MultisetSearch::new(g, Target::MinCardinality(budget));
    search.run();
    match search.best {
        Some((sum, counts)) => ExactResult {
            value: ExactValue::Finite(sum),
            walk: None,
            multiset: Some(EdgeMultiset::from_counts(g, &counts)),
        },
        None => ExactResult::exhausted(budget),
    }
}

/// Shortest irregularising path or cycle. Among those of minimum length the
/// lexicographically smallest vertex sequence is returned.
pub fn exists_irregularising_path(g: &Graph) -> ExactResult {
    if g.is_locally_irregular() {
        return ExactResult::with_walk(0, Walk::empty());
    }
    struct State<'a> {
        c: ConflictCounter<'a>,
        on_path: Vec<bool>,
        path: Vec<usize>,
        target: usize,
    }
    impl State<'_> {
        // Paths of exactly `target` edges extending the current one, in
        // lexicographic order; cycles close on the first vertex.
        fn dfs(&mut self) -> bool {
            let v = *self.path.last().expect("nonempty");
            let len = self.path.len() - 1;
            let g = self.c.g;
            for &u in g.neighbors(v) {
                let closes = u == self.path[0] && len >= 2;
                if !closes && self.on_path[u] {
                    continue;
                }
                if !closes && len + 1 < self.target {
                    self.on_path[u] = true;
                    self.c.step(v, u);
                    self.path.push(u);
                    if self.dfs() {
                        return true;
                    }
                    self.path.pop();
                    self.c.unstep(v, u);
                    self.on_path[u] = false;
                } else if len + 1 == self.target {
                    self.c.step(v, u);
                    if self.c.conflicts == 0 {
                        self.path.push(u);
                        return true;
                    }
                    self.c.unstep(v, u);
                }
            }
            false
        }
    }
    let mut st = State {
        c: ConflictCounter::new(g),
        on_path: vec![false; g.n()],
        path: Vec::new(),
        target: 0,
    };
    for target in 1..=g.n() {
        st.target = target;
        for s in 0..g.n() {
            st.on_path[s] = true;
            st.path.push(s);
            if st.dfs() {
                return ExactResult::with_walk(target, Walk::new(st.path));
            }
            st.path.pop();
            st.on_path[s] = false;
        }
    }
    ExactResult::infinite()
}

/// Checks that a finite result's witness is irregularising and realises the
/// claimed value under `measure`.
pub fn witness_is_consistent(
    g: &Graph,
    r: &ExactResult,
    measure: impl Fn(&Walk) -> usize,
) -> Result<bool> {
    let (Some(v), Some(w)) = (r.finite(), r.walk.as_ref()) else {
        return Ok(r.finite().is_none());
    };
    let report = crate::walkops::check_irregularising(g, w)?;
    Ok(report.is_irregularising() && measure(w) == v)
}

/// Largest number of walk edges at a single vertex.
pub fn max_vertex_traversal(w: &Walk, n: usize) -> usize {
    w.edge_multiset().incidence(n).into_iter().max().unwrap_or(0)
}
