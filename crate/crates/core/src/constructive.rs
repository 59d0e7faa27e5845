//! Polynomial-time constructions of irregularising walks with certified
//! length bounds.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeMultiset, Graph, Walk};

/// Edge labels `>= 1` whose vertex sums differ across every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperLabelling {
    labels: BTreeMap<(usize, usize), usize>,
    sums: Vec<usize>,
}

impl ProperLabelling {
    /// Builds a labelling from one label per edge of `g` (in `g.edges()`
    /// order) and checks that it is proper.
    pub fn new(g: &Graph, labels: &[usize]) -> Result<Self> {
        if labels.len() != g.m() {
            return Err(Error::ImproperLabelling(format!(
                "expected {} labels, got {}",
                g.m(),
                labels.len()
            )));
        }
        let mut sums = vec![0; g.n()];
        let mut map = BTreeMap::new();
        for (&(u, v), &l) in g.edges().iter().zip(labels) {
            if l == 0 {
                return Err(Error::ImproperLabelling(format!("edge {u}-{v} has label 0")));
            }
            sums[u] += l;
            sums[v] += l;
            map.insert((u, v), l);
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| sums[u] == sums[v]) {
            return Err(Error::ImproperLabelling(format!(
                "vertices {u} and {v} both have sum {}",
                sums[u]
            )));
        }
        Ok(ProperLabelling { labels: map, sums })
    }

    pub fn label(&self, u: usize, v: usize) -> usize {
        self.labels[&(u.min(v), u.max(v))]
    }

    pub fn sums(&self) -> &[usize] {
        &self.sums
    }

    pub fn label_sum(&self) -> usize {
        self.labels.values().sum()
    }

    pub fn max_label(&self) -> usize {
        self.labels.values().copied().max().unwrap_or(0)
    }

    pub fn max_vertex_sum(&self) -> usize {
        self.sums.iter().copied().max().unwrap_or(0)
    }

    pub fn labels(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColouring {
    colours: Vec<usize>,
    k: usize,
}

impl VertexColouring {
    pub fn new(g: &Graph, colours: Vec<usize>, k: usize) -> Result<Self> {
        if colours.len() != g.n() {
            return Err(Error::ImproperColouring(format!(
                "expected {} colours, got {}",
                g.n(),
                colours.len()
            )));
        }
        if let Some(&c) = colours.iter().find(|&&c| c >= k) {
            return Err(Error::ImproperColouring(format!("colour {c} out of range 0..{k}")));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| colours[u] == colours[v]) {
            return Err(Error::ImproperColouring(format!("{u} and {v} share colour {}", colours[u])));
        }
        Ok(VertexColouring { colours, k })
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Which certified bound a construction guarantees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `p + 2m` for a spanning closed guide of length `p`.
    GuideHalfTurns,
    /// `p + (n-1)(2k-2) + 2Δ` with a proper `k`-colouring.
    Chromatic,
    /// `2m + 2⌊3Δ/2⌋(x - m)` for a proper labelling of sum `x`.
    Labelling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedWitness {
    pub walk: Walk,
    pub bound: usize,
    pub kind: BoundKind,
}

/// Closed walk of length `2(n-1)` around a DFS tree, rooted at the lowest
/// vertex of degree at least 2.
pub fn guiding_closed_walk(g: &Graph) -> Result<Walk> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let root = (0..g.n()).find(|&v| g.degree(v) > 1).ok_or(Error::NotNice)?;
    let mut seen = vec![false; g.n()];
    let mut walk = vec![root];
    let mut stack = vec![(root, 0usize)];
    seen[root] = true;
    while let Some((v, next)) = stack.last_mut() {
        let nbrs = g.neighbors(*v);
        while *next < nbrs.len() && seen[nbrs[*next]] {
            *next += 1;
        }
        if let Some(&u) = nbrs.get(*next) {
            seen[u] = true;
            walk.push(u);
            stack.push((u, 0));
        } else {
            stack.pop();
            if let Some(&(parent, _)) = stack.last() {
                walk.push(parent);
            }
        }
    }
    Ok(Walk::new(walk))
}

struct Guide {
    verts: Vec<usize>,
    last: Vec<usize>,
    v2: usize,
}

fn check_guide(g: &Graph, guide: &Walk) -> Result<Guide> {
    if !g.is_nice() {
        return Err(Error::NotNice);
    }
    let verts = guide.vertices().to_vec();
    let bad = |msg: &str| Err(Error::BadGuide(msg.to_string()));
    if !crate::graph::validate_walk(g, guide) {
        return bad("not a walk of the graph");
    }
    if verts.len() < 3 || !guide.is_closed() {
        return bad("not a closed walk");
    }
    let p = verts.len() - 1;
    let mut last = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        last[v] = i;
    }
    if last.contains(&usize::MAX) {
        return bad("does not visit every vertex");
    }
    let u0 = verts[0];
    if g.degree(u0) < 2 {
        return bad("start vertex has degree 1");
    }
    let v1 = verts[p - 1];
    let v2 = *g.neighbors(u0).iter().find(|&&v| v != v1).expect("degree >= 2");
    Ok(Guide { verts, last, v2 })
}

struct Builder<'a> {
    g: &'a Graph,
    deg: Vec<usize>,
    walk: Vec<usize>,
}

impl<'a> Builder<'a> {
    fn new(g: &'a Graph, start: usize) -> Self {
        Builder {
            g,
            deg: g.degrees(),
            walk: vec![start],
        }
    }

    fn step(&mut self, v: usize) {
        let u = *self.walk.last().expect("nonempty");
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.walk.push(v);
    }

    // From the current end `v`, performs `h` half-turns `v u v`.
    fn half_turns(&mut self, u: usize, h: usize) {
        let v = *self.walk.last().expect("nonempty");
        for _ in 0..h {
            self.step(u);
            self.step(v);
        }
    }

    /// True iff `x`, raised by `extra`, differs from every neighbour that is
    /// `settled` and is not `skip`.
    fn clear_of(&self, x: usize, extra: usize, skip: usize, settled: impl Fn(usize) -> bool) -> bool {
        self.g
            .neighbors(x)
            .iter()
            .filter(|&&w| w != skip && settled(w))
            .all(|&w| self.deg[w] != self.deg[x] + extra)
    }
}

/// Follows `guide`, inserting the fewest half-turns that settle each vertex
/// at its last visit. The result is irregularising with length at most
/// `p + 2m`.
pub fn greedy_irregularise(g: &Graph, guide: &Walk) -> Result<BoundedWitness> {
    let Guide { verts, last, v2 } = check_guide(g, guide)?;
    let p = verts.len() - 1;
    let up = verts[p];
    let mut b = Builder::new(g, verts[0]);
    let is_settled = |w: usize, i: usize| w != v2 && w != up && last[w] < i;
    for i in 0..p {
        let ui = verts[i];
        let next = verts[i + 1];
        b.step(next);
        if last[ui] != i || ui == v2 {
            continue;
        }
        let mut h = 0;
        loop {
            let ok = b.clear_of(ui, 2 * h, usize::MAX, |w| is_settled(w, i))
                && (i != p - 1 || b.deg[up] + 2 * h != b.deg[v2]);
            if ok {
                break;
            }
            h += 1;
        }
        b.half_turns(ui, h);
    }
    let mut h = 0;
    while !(b.clear_of(up, 2 * h, v2, |_| true) && b.clear_of(v2, 2 * h, up, |_| true)) {
        h += 1;
    }
    b.half_turns(v2, h);
    Ok(BoundedWitness {
        walk: Walk::new(b.walk),
        bound: p + 2 * g.m(),
        kind: BoundKind::GuideHalfTurns,
    })
}

/// Index of the degree class containing `x`: classes take consecutive pairs
/// `{1,2}, {3,4}, ...` in turn, cycling through `0..k`.
pub fn degree_class(x: usize, k: usize) -> usize {
    (x.div_ceil(2) + k - 1) % k
}

/// Variant of [`greedy_irregularise`] that drives each settled vertex into
/// the degree class of its colour. Length at most `p + (n-1)(2k-2) + 2Δ`.
pub fn chromatic_irregularise(g: &Graph, guide: &Walk, col: &VertexColouring) -> Result<BoundedWitness> {
    let Guide { verts, last, v2 } = check_guide(g, guide)?;
    let col = VertexColouring::new(g, col.colours.clone(), col.k)?;
    let k = col.k();
    let p = verts.len() - 1;
    let up = verts[p];
    let mut b = Builder::new(g, verts[0]);
    for i in 0..p {
        let ui = verts[i];
        b.step(verts[i + 1]);
        if last[ui] != i || ui == v2 {
            continue;
        }
        let mut h = 0;
        while degree_class(b.deg[ui] + 2 * h, k) != col.colour(ui)
            || (i == p - 1 && b.deg[up] + 2 * h == b.deg[v2])
        {
            h += 1;
        }
        b.half_turns(ui, h);
    }
    // Back and forth along u_p v_2: each step raises both ends by one.
    let mut len = 0;
    while !(b.clear_of(up, len, v2, |_| true) && b.clear_of(v2, len, up, |_| true)) {
        len += 1;
    }
    for s in 0..len {
        b.step(if s % 2 == 0 { v2 } else { up });
    }
    Ok(BoundedWitness {
        walk: Walk::new(b.walk),
        bound: p + (g.n() - 1) * (2 * k - 2) + 2 * g.max_degree(),
        kind: BoundKind::Chromatic,
    })
}

/// Closed walk from the lowest non-isolated vertex traversing every edge
/// exactly twice.
pub fn doubled_euler_tour(g: &Graph) -> Result<Walk> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut ms = EdgeMultiset::new();
    for &(u, v) in g.edges() {
        ms.add(u, v, 2);
    }
    ms.to_walk(g.n(), Some(0)).ok_or(Error::NotConnected)
}

/// Doubled Euler tour in which the second traversal `u -> v` of each edge is
/// followed by `q(ℓ(uv) - 1)` half-turns `v u v`, `q = ⌊3Δ/2⌋`. The degree
/// of `u` becomes `3 d(u) + 2q (σ(u) - d(u))`.
pub fn labelling_irregularise(g: &Graph, lab: &ProperLabelling) -> Result<BoundedWitness> {
    if !g.is_nice() {
        return Err(Error::NotNice);
    }
    let labels: Vec<usize> = g.edges().iter().map(|&(u, v)| lab.label(u, v)).collect();
    let lab = ProperLabelling::new(g, &labels)?;
    let q = 3 * g.max_degree() / 2;
    let tour = doubled_euler_tour(g)?;
    let mut seen = vec![0u8; g.m()];
    let mut b = Builder::new(g, tour.vertices()[0]);
    for (u, v) in tour.steps() {
        b.step(v);
        let e = g.edge_index(u, v).expect("tour edge");
        seen[e] += 1;
        if seen[e] == 2 {
            b.half_turns(u, q * (lab.label(u, v) - 1));
        }
    }
    Ok(BoundedWitness {
        walk: Walk::new(b.walk),
        bound: 2 * g.m() + 2 * q * (lab.label_sum() - g.m()),
        kind: BoundKind::Labelling,
    })
}

/// Greedy colouring in ascending vertex order with the smallest free colour.
pub fn greedy_vertex_colouring(g: &Graph) -> VertexColouring {
    let mut colours = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&u| colours[u]).collect();
        colours[v] = (0..).find(|c| !used.contains(c)).expect("unbounded");
    }
    let k = colours.iter().copied().max().map_or(1, |c| c + 1);
    VertexColouring { colours, k }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Any proper labelling; the first one in search order.
    First,
    MinSum,
    MinMaxLabel,
    MinMaxVertexSum,
}

/// Proper labelling with labels in `1..=max_label` optimising `objective`.
/// Among optimal labellings the one that is lexicographically smallest in
/// `g.edges()` order is returned.
pub fn exact_proper_labelling(g: &Graph, objective: Objective, max_label: usize) -> Result<ProperLabelling> {
    if !g.is_nice() {
        return Err(Error::NotNice);
    }
    let m = g.m();
    let mut last_edge = vec![None; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        last_edge[u] = Some(i);
        last_edge[v] = Some(i);
    }
    struct Search<'a> {
        g: &'a Graph,
        objective: Objective,
        max_label: usize,
        last_edge: Vec<Option<usize>>,
        labels: Vec<usize>,
        sums: Vec<usize>,
        best: Option<(usize, Vec<usize>)>,
    }
    impl Search<'_> {
        fn lower_bound(&self, e: usize) -> usize {
            match self.objective {
                Objective::First => 0,
                Objective::MinSum => self.labels[..e].iter().sum::<usize>() + (self.labels.len() - e),
                Objective::MinMaxLabel => self.labels[..e].iter().copied().max().unwrap_or(1),
                Objective::MinMaxVertexSum => self.sums.iter().copied().max().unwrap_or(0),
            }
        }

        fn dfs(&mut self, e: usize) -> bool {
            if let Some((b, _)) = &self.best {
                if self.objective == Objective::First || self.lower_bound(e) >= *b {
                    return self.objective == Objective::First;
                }
            }
            if e == self.labels.len() {
                self.best = Some((self.lower_bound(e), self.labels.clone()));
                return self.objective == Objective::First;
            }
            let (x, y) = self.g.edges()[e];
            for l in 1..=self.max_label {
                self.labels[e] = l;
                self.sums[x] += l;
                self.sums[y] += l;
                let ok = [x, y].into_iter().all(|z| {
                    self.last_edge[z] != Some(e)
                        || self.g.neighbors(z).iter().all(|&w| {
                            self.last_edge[w].is_none_or(|le| le > e) || self.sums[w] != self.sums[z]
                        })
                });
                if ok && self.dfs(e + 1) {
                    return true;
                }
                self.sums[x] -= l;
                self.sums[y] -= l;
            }
            self.labels[e] = 0;
            false
        }
    }
    let mut s = Search {
        g,
        objective,
        max_label,
        last_edge,
        labels: vec![0; m],
        sums: vec![0; g.n()],
        best: None,
    };
    s.dfs(0);
    match s.best {
        Some((_, labels)) => ProperLabelling::new(g, &labels),
        None => Err(Error::NoLabellingWithinCap(max_label)),
    }
}

/// Labelling induced by an irregularising multiset: `1 + F(e)` on every edge.
pub fn labelling_from_multiset(g: &Graph, f: &EdgeMultiset) -> Result<ProperLabelling> {
    let labels: Vec<usize> = g.edges().iter().map(|&(u, v)| 1 + f.get(u, v)).collect();
    ProperLabelling::new(g, &labels)
}
