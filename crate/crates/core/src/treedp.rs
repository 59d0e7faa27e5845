//! Exact shortest irregularising walks of trees by dynamic programming.
//!
//! A rooted tree is built from single vertices by repeatedly hanging a rooted
//! tree `T''` below the root of a rooted tree `T'` (`T = T' ↑ T''`). For a
//! rooted tree `T` with root `r`, an outside weight `w` (extra degree that
//! `r` receives from edges outside `T`) and a target degree `d` of `r`, the
//! table stores the minimum length of a walk `W` of `T` such that `T + W` is
//! locally irregular when `r` ends with degree `d`, split by how `W` meets
//! `r`:
//!
//! * `Zero`: `W` is empty.
//! * `Io`: `W` starts and ends at `r` (the empty walk included).
//! * `I`: `W` has an end at `r`.
//! * `R`: `W` goes through `r`.
//! * `NotR`: any walk.
//!
//! Each class contains the previous one except `Zero`, which is part of `Io`.
//! Walks are handled through their edge multisets: a multiset is that of a
//! walk iff its support is connected and at most two vertices have odd
//! incidence, so it suffices to track, besides `d`, how many non-root
//! vertices have odd incidence.

use crate::error::{Error, Result};
use crate::exact::{ExactResult, ExactValue};
use crate::graph::{EdgeMultiset, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Zero,
    Io,
    I,
    R,
    NotR,
}

pub const SHAPES: [Shape; 5] = [Shape::Zero, Shape::Io, Shape::I, Shape::R, Shape::NotR];

const INF: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Choice {
    None,
    /// Same entry of another shape.
    Alias(Shape),
    /// `t` copies of the new edge, parent entry of shape `s1` at the same
    /// `d`, child entry of shape `s2` at degree `d2`.
    Join { t: u16, s1: Shape, d2: u16, s2: Shape },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Entry {
    cost: u32,
    choice: Choice,
}

const EMPTY: Entry = Entry {
    cost: INF,
    choice: Choice::None,
};

/// ψ-table of one rooted tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTable {
    w_max: usize,
    d_max: usize,
    /// Degree of the root inside the tree.
    root_degree: usize,
    entries: Vec<[Entry; 5]>,
}

impl PsiTable {
    fn blank(w_max: usize, d_max: usize, root_degree: usize) -> Self {
        PsiTable {
            w_max,
            d_max,
            root_degree,
            entries: vec![[EMPTY; 5]; (w_max + 1) * (d_max + 1)],
        }
    }

    fn idx(&self, w: usize, d: usize) -> usize {
        w * (self.d_max + 1) + d
    }

    fn entry(&self, s: Shape, w: usize, d: usize) -> Entry {
        if w > self.w_max || d > self.d_max {
            return EMPTY;
        }
        self.entries[self.idx(w, d)][s as usize]
    }

    /// Minimum walk length for the given shape, outside weight and root
    /// degree, or `None` if no such walk exists within the table's range.
    pub fn get(&self, s: Shape, w: usize, d: usize) -> Option<usize> {
        let c = self.entry(s, w, d).cost;
        (c != INF).then_some(c as usize)
    }

    pub fn w_max(&self) -> usize {
        self.w_max
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn root_degree(&self) -> usize {
        self.root_degree
    }

    /// `Io >= I >= R >= NotR` entrywise.
    pub fn satisfies_chain(&self) -> bool {
        self.entries.iter().all(|e| {
            let c = |s: Shape| e[s as usize].cost;
            c(Shape::Io) >= c(Shape::I) && c(Shape::I) >= c(Shape::R) && c(Shape::R) >= c(Shape::NotR)
        })
    }

    fn relax(&mut self, w: usize, d: usize, s: Shape, cost: u32, choice: Choice) {
        let i = self.idx(w, d);
        let e = &mut self.entries[i][s as usize];
        if cost < e.cost {
            *e = Entry { cost, choice };
        }
    }

    fn fill_chain(&mut self) {
        for e in &mut self.entries {
            for (lo, hi) in [(Shape::I, Shape::Io), (Shape::R, Shape::I), (Shape::NotR, Shape::R)] {
                if e[hi as usize].cost < e[lo as usize].cost {
                    e[lo as usize] = Entry {
                        cost: e[hi as usize].cost,
                        choice: Choice::Alias(hi),
                    };
                }
            }
        }
    }
}

/// Table of the single-vertex tree: only the empty walk, at `d = w`.
pub fn psi_leaf_table(w_max: usize, d_max: usize) -> PsiTable {
    let mut t = PsiTable::blank(w_max, d_max, 0);
    for w in 0..=w_max.min(d_max) {
        for s in SHAPES {
            t.relax(w, w, s, 0, Choice::None);
        }
    }
    t
}

// Ways a part of the walk may meet the root of its subtree when the walk
// also uses the edge above that root, with the number of odd non-root
// vertices each implies.
fn attached_options(f: usize) -> &'static [(Shape, usize)] {
    if f == 0 {
        &[(Shape::Zero, 0)]
    } else if f.is_multiple_of(2) {
        &[(Shape::Io, 0), (Shape::R, 2)]
    } else {
        &[(Shape::I, 1)]
    }
}

#[derive(Clone, Copy)]
struct Best {
    cost: u32,
    d: usize,
    s: Shape,
}

/// The two cheapest candidates with distinct degrees.
#[derive(Clone, Copy)]
struct Top2([Option<Best>; 2]);

impl Top2 {
    const NONE: Top2 = Top2([None, None]);

    fn offer(&mut self, b: Best) {
        match self.0 {
            [None, _] => self.0[0] = Some(b),
            [Some(a), _] if b.cost < a.cost => self.0 = [Some(b), Some(a)],
            [Some(_), None] => self.0[1] = Some(b),
            [Some(_), Some(c)] if b.cost < c.cost => self.0[1] = Some(b),
            _ => {}
        }
    }

    fn avoiding(&self, d: usize) -> Option<Best> {
        self.0.iter().flatten().find(|b| b.d != d).copied()
    }
}

/// Table of `T' ↑ T''` from the tables of `T'` (`parent`) and `T''`
/// (`child`), where the new edge between the roots is used at most `cap`
/// times.
pub fn combine_tables(parent: &PsiTable, child: &PsiTable, cap: usize) -> Result<PsiTable> {
    if child.w_max < 1 + cap {
        return Err(Error::DimensionMismatch(format!(
            "child table has w_max {} but the edge needs {}",
            child.w_max,
            1 + cap
        )));
    }
    let mut out = PsiTable::blank(parent.w_max, parent.d_max, parent.root_degree + 1);
    let deg = out.root_degree;

    // Child candidates per t (outside weight 1 + t), grouped by how many odd
    // vertices of T below r they contribute.
    let mut child_best = vec![[Top2::NONE; 4]; cap + 1];
    for (t, groups) in child_best.iter_mut().enumerate().skip(1) {
        let w2 = 1 + t;
        for d2 in child.root_degree + w2..=child.d_max {
            let f2 = d2 - child.root_degree - w2;
            for &(s, odd) in attached_options(f2) {
                let e = child.entry(s, w2, d2);
                if e.cost != INF {
                    groups[odd + (f2 + t) % 2].offer(Best { cost: e.cost, d: d2, s });
                }
            }
        }
    }
    let mut child_any = Top2::NONE;
    for d2 in 0..=child.d_max {
        let e = child.entry(Shape::NotR, 1, d2);
        if e.cost != INF {
            child_any.offer(Best { cost: e.cost, d: d2, s: Shape::NotR });
        }
    }
    let child_zero_d = child.root_degree + 1;
    let child_zero = child.entry(Shape::Zero, 1, child_zero_d).cost;

    for w in 0..=out.w_max {
        for d in deg + w..=out.d_max {
            let f = d - deg - w;
            // The new edge is unused: one side carries the whole walk.
            if w < parent.w_max {
                if child_zero != INF && child_zero_d != d {
                    for s in SHAPES {
                        let e = parent.entry(s, w + 1, d);
                        if e.cost != INF {
                            let choice = Choice::Join { t: 0, s1: s, d2: child_zero_d as u16, s2: Shape::Zero };
                            out.relax(w, d, s, e.cost + child_zero, choice);
                        }
                    }
                }
                let e = parent.entry(Shape::Zero, w + 1, d);
                if let (true, Some(b)) = (e.cost != INF, child_any.avoiding(d)) {
                    let choice = Choice::Join { t: 0, s1: Shape::Zero, d2: b.d as u16, s2: b.s };
                    out.relax(w, d, Shape::NotR, e.cost + b.cost, choice);
                }
            }
            // The new edge is used t >= 1 times: both parts hang from it.
            for (t, groups) in child_best.iter().enumerate().take(f.min(cap) + 1).skip(1) {
                let w1 = w + 1 + t;
                if w1 > parent.w_max {
                    break;
                }
                for &(s1, odd1) in attached_options(f - t) {
                    let e1 = parent.entry(s1, w1, d);
                    if e1.cost == INF {
                        continue;
                    }
                    for (odd2, group) in groups.iter().enumerate() {
                        let odd = odd1 + odd2;
                        let shape = match (f % 2, odd) {
                            (0, 0) => Shape::Io,
                            (0, 2) => Shape::R,
                            (1, 1) => Shape::I,
                            _ => continue,
                        };
                        if let Some(b) = group.avoiding(d) {
                            let cost = e1.cost + b.cost + t as u32;
                            let choice = Choice::Join { t: t as u16, s1, d2: b.d as u16, s2: b.s };
                            out.relax(w, d, shape, cost, choice);
                        }
                    }
                }
            }
        }
    }
    out.fill_chain();
    Ok(out)
}

/// A tree with a root; children are listed in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::NotATree);
        }
        if root >= graph.n() {
            return Err(Error::VertexOutOfRange { vertex: root, n: graph.n() });
        }
        let n = graph.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for &u in graph.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    children[v].push(u);
                    stack.push(u);
                }
            }
        }
        Ok(RootedTree { graph, root, parent, children })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    // Children before parents.
    fn post_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.graph.n());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().copied());
        }
        order.reverse();
        order
    }
}

/// Per-edge multiplicity beyond which an irregularising walk can always be
/// shortened by removing half-turns.
pub fn edge_cap(g: &Graph, u: usize, v: usize) -> usize {
    2 * (g.degree(u) + g.degree(v) - 1)
}

struct Solved {
    /// stages[v][j]: table of v with its first j children attached.
    stages: Vec<Vec<PsiTable>>,
    caps: Vec<usize>,
}

fn solve(t: &RootedTree, slack: usize) -> Result<Solved> {
    let g = &t.graph;
    let caps: Vec<usize> = g.edges().iter().map(|&(u, v)| edge_cap(g, u, v) + slack).collect();
    let cap = |u: usize, v: usize| caps[g.edge_index(u, v).expect("tree edge")];
    let mut stages: Vec<Vec<PsiTable>> = vec![Vec::new(); g.n()];
    for v in t.post_order() {
        let around: usize = g.neighbors(v).iter().map(|&u| cap(v, u)).sum();
        let w_max = around + g.degree(v);
        let d_max = around + g.degree(v);
        let mut table = psi_leaf_table(w_max, d_max);
        let mut mine = Vec::with_capacity(t.children[v].len() + 1);
        for &c in &t.children[v] {
            let child = stages[c].last().expect("child solved first");
            let next = combine_tables(&table, child, cap(v, c))?;
            mine.push(std::mem::replace(&mut table, next));
        }
        mine.push(table);
        stages[v] = mine;
    }
    Ok(Solved { stages, caps })
}

/// Shortest irregularising walk of a tree, with a witness.
pub fn tree_mlw(t: &RootedTree) -> Result<ExactResult> {
    tree_mlw_with_slack(t, 0)
}

/// [`tree_mlw`] with every per-edge multiplicity cap raised by `slack`.
pub fn tree_mlw_with_slack(t: &RootedTree, slack: usize) -> Result<ExactResult> {
    let g = &t.graph;
    if !g.is_nice() {
        return Err(Error::NotNice);
    }
    let solved = solve(t, slack)?;
    let root_table = solved.stages[t.root].last().expect("root solved");
    let best = (0..=root_table.d_max)
        .filter_map(|d| root_table.get(Shape::NotR, 0, d).map(|c| (c, d)))
        .min();
    let Some((value, d)) = best else {
        return Ok(ExactResult {
            value: ExactValue::Infinite,
            walk: None,
            multiset: None,
        });
    };
    let mut counts = vec![0usize; g.m()];
    let last = solved.stages[t.root].len() - 1;
    rebuild(t, &solved, t.root, last, Shape::NotR, 0, d, &mut counts);
    let ms = EdgeMultiset::from_counts(g, &counts);
    let walk = ms.to_walk(g.n(), None).expect("table entries describe walks");
    debug_assert_eq!(walk.length(), value);
    debug_assert!(crate::walkops::is_irregularising(g, &walk));
    Ok(ExactResult {
        value: ExactValue::Finite(value),
        walk: Some(walk),
        multiset: Some(ms),
    })
}

#[allow(clippy::too_many_arguments)]
fn rebuild(
    t: &RootedTree,
    solved: &Solved,
    v: usize,
    stage: usize,
    s: Shape,
    w: usize,
    d: usize,
    counts: &mut [usize],
) {
    let table = &solved.stages[v][stage];
    match table.entry(s, w, d).choice {
        Choice::None => {}
        Choice::Alias(other) => rebuild(t, solved, v, stage, other, w, d, counts),
        Choice::Join { t: k, s1, d2, s2 } => {
            let k = k as usize;
            let c = t.children[v][stage - 1];
            let e = t.graph.edge_index(v, c).expect("tree edge");
            debug_assert!(k <= solved.caps[e]);
            counts[e] += k;
            rebuild(t, solved, v, stage - 1, s1, w + 1 + k, d, counts);
            let child_last = solved.stages[c].len() - 1;
            rebuild(t, solved, c, child_last, s2, 1 + k, d2 as usize, counts);
        }
    }
}

/// Root tables of every rooting stage, for inspection.
pub fn tree_tables(t: &RootedTree) -> Result<Vec<PsiTable>> {
    let solved = solve(t, 0)?;
    Ok(solved.stages.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{default_budget, exact_mlw};
    use crate::generators::{path, star, subdivided_star};

    fn rooted(g: Graph, r: usize) -> RootedTree {
        RootedTree::new(g, r).unwrap()
    }

    #[test]
    fn leaf_table() {
        let t = psi_leaf_table(5, 5);
        assert_eq!(t.get(Shape::Zero, 0, 0), Some(0));
        assert_eq!(t.get(Shape::Zero, 3, 3), Some(0));
        assert_eq!(t.get(Shape::Zero, 3, 4), None);
        assert_eq!(t.get(Shape::Io, 2, 2), Some(0));
        assert_eq!(t.get(Shape::Io, 2, 3), None);
        assert!(t.satisfies_chain());
    }

    #[test]
    fn single_edge_table() {
        let leaf = psi_leaf_table(4, 4);
        let e = combine_tables(&leaf, &leaf, 2).unwrap();
        assert!(e.satisfies_chain());
        // No walk: root degree 1 + w, the other end has degree 1.
        assert_eq!(e.get(Shape::Zero, 1, 2), Some(0));
        assert_eq!(e.get(Shape::Zero, 0, 1), None);
        // One traversal: both ends reach degree 2, a conflict.
        assert_eq!(e.get(Shape::I, 0, 2), None);
        // Traversing once with an outside edge: root 3, other end 2.
        assert_eq!(e.get(Shape::I, 1, 3), Some(1));
        assert_eq!(e.get(Shape::Io, 1, 3), None);
        assert!(matches!(combine_tables(&leaf, &psi_leaf_table(2, 2), 2), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn small_trees() {
        assert_eq!(tree_mlw(&rooted(path(2), 0)).unwrap().finite(), Some(0));
        assert_eq!(tree_mlw(&rooted(path(6), 0)).unwrap().finite(), Some(2));
        assert_eq!(tree_mlw(&rooted(star(4), 0)).unwrap().finite(), Some(0));
        let spider = subdivided_star(3, 3);
        let want = exact_mlw(&spider, default_budget(&spider)).finite();
        assert_eq!(tree_mlw(&rooted(spider, 0)).unwrap().finite(), want);
    }

    #[test]
    fn witness_checks() {
        for len in 2..=12 {
            let g = path(len);
            let r = tree_mlw(&rooted(g.clone(), len / 2)).unwrap();
            let w = r.walk.as_ref().unwrap();
            assert!(crate::walkops::is_irregularising(&g, w));
            assert_eq!(Some(w.length()), r.finite());
            assert_eq!(r.finite(), Some(crate::closedform::mlw_path(len).unwrap().value));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(RootedTree::new(crate::generators::cycle(4), 0), Err(Error::NotATree));
        assert_eq!(tree_mlw(&rooted(path(1), 0)), Err(Error::NotNice));
    }

    #[test]
    fn tables_keep_chain() {
        for table in tree_tables(&rooted(subdivided_star(3, 2), 1)).unwrap() {
            assert!(table.satisfies_chain());
        }
    }
}
