//! Simple undirected graphs, walks, edge multisets and degree profiles.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted, and edges are stored once as `(u, v)`
/// with `u < v`, in lexicographic order. The position of an edge in
/// [`Graph::edges`] is its edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, edges })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Breadth-first connectivity test. The graph on zero vertices counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Connected, at least two vertices, and not `K_2`. A single vertex is
    /// not nice.
    pub fn is_nice(&self) -> bool {
        self.n >= 2 && self.is_connected() && !(self.n == 2 && self.m() == 1)
    }

    /// True iff no two adjacent vertices share a degree.
    pub fn is_locally_irregular(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.adj[u].len() != self.adj[v].len())
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Breadth-first 2-colouring, `None` if the graph has an odd cycle.
    /// Every component's lowest vertex gets side `0`.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

/// A walk, stored as its vertex sequence. The empty sequence and a single
/// vertex are both walks of length zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk(Vec<usize>);

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Self {
        Walk(vertices)
    }

    pub fn empty() -> Self {
        Walk(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of edges traversed.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        !self.0.is_empty() && self.0.first() == self.0.last()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> Walk {
        Walk(self.0.iter().rev().copied().collect())
    }

    /// Consecutive vertex pairs, in traversal order.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn edge_multiset(&self) -> EdgeMultiset {
        let mut ms = EdgeMultiset::new();
        for (u, v) in self.steps() {
            ms.add(u, v, 1);
        }
        ms
    }

    /// Per-edge traversal counts, indexed like [`Graph::edges`]. The walk
    /// must be valid for `g`.
    pub fn edge_counts(&self, g: &Graph) -> Vec<usize> {
        let mut counts = vec![0; g.m()];
        for (u, v) in self.steps() {
            if let Some(e) = g.edge_index(u, v) {
                counts[e] += 1;
            }
        }
        counts
    }
}

impl From<Vec<usize>> for Walk {
    fn from(v: Vec<usize>) -> Self {
        Walk(v)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Multiset of unordered vertex pairs, keyed as `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeMultiset {
    counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from per-edge counts indexed like [`Graph::edges`].
    pub fn from_counts(g: &Graph, counts: &[usize]) -> Self {
        let mut ms = EdgeMultiset::new();
        for (&(u, v), &c) in g.edges().iter().zip(counts) {
            ms.add(u, v, c);
        }
        ms
    }

    pub fn add(&mut self, u: usize, v: usize, count: usize) {
        if count > 0 {
            *self.counts.entry((u.min(v), u.max(v))).or_insert(0) += count;
        }
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.counts.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Total number of edges, with multiplicity.
    pub fn cardinality(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    /// Number of multiset edges incident to each vertex.
    pub fn incidence(&self, n: usize) -> Vec<usize> {
        let mut inc = vec![0; n];
        for (&(u, v), &c) in &self.counts {
            inc[u] += c;
            inc[v] += c;
        }
        inc
    }

    pub fn is_subset_of(&self, g: &Graph) -> bool {
        self.counts.keys().all(|&(u, v)| g.has_edge(u, v))
    }

    /// Orders the multiset into a walk using every edge exactly as often as
    /// it occurs (Hierholzer on the multigraph). Returns `None` unless the
    /// edges form a connected multigraph with zero or two odd vertices.
    ///
    /// The trail starts at the lowest odd vertex, or at `start` (default:
    /// lowest touched vertex) when all degrees are even. Neighbours are tried
    /// in ascending order, so the result is deterministic.
    pub fn to_walk(&self, n: usize, start: Option<usize>) -> Option<Walk> {
        if self.counts.is_empty() {
            return Some(Walk::empty());
        }
        let mut nbrs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut remaining: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (&(u, v), &c) in &self.counts {
            if u >= n || v >= n || u == v {
                return None;
            }
            nbrs[u].push((v, 0));
            nbrs[v].push((u, 0));
            remaining.insert((u, v), c);
        }
        for list in &mut nbrs {
            list.sort_unstable();
        }
        let inc = self.incidence(n);
        let odd: Vec<usize> = (0..n).filter(|&v| inc[v] % 2 == 1).collect();
        let begin = match odd.len() {
            0 => match start {
                Some(s) if s < n && inc[s] > 0 => s,
                _ => (0..n).find(|&v| inc[v] > 0)?,
            },
            2 => odd[0],
            _ => return None,
        };
        let mut ptr = vec![0usize; n];
        let mut stack = vec![begin];
        let mut circuit = Vec::with_capacity(self.cardinality() + 1);
        while let Some(&v) = stack.last() {
            let mut next = None;
            while ptr[v] < nbrs[v].len() {
                let u = nbrs[v][ptr[v]].0;
                let key = (v.min(u), v.max(u));
                let left = remaining.get_mut(&key).expect("edge present");
                if *left > 0 {
                    *left -= 1;
                    next = Some(u);
                    break;
                }
                ptr[v] += 1;
            }
            match next {
                Some(u) => stack.push(u),
                None => {
                    circuit.push(v);
                    stack.pop();
                }
            }
        }
        circuit.reverse();
        (circuit.len() == self.cardinality() + 1).then_some(Walk(circuit))
    }
}

/// Degrees of the multigraph `G + W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeProfile(Vec<usize>);

impl DegreeProfile {
    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Edges of `g` whose endpoints share a degree in this profile, sorted.
    pub fn conflicts(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| self.0[u] == self.0[v])
            .collect()
    }
}

/// Checks that every step of `w` is an edge of `g`.
pub fn validate_walk(g: &Graph, w: &Walk) -> bool {
    w.vertices().iter().all(|&v| v < g.n()) && w.steps().all(|(u, v)| g.has_edge(u, v))
}

pub(crate) fn ensure_valid(g: &Graph, w: &Walk) -> Result<()> {
    if let Some(&v) = w.vertices().iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidWalk(format!("vertex {v} out of range")));
    }
    if let Some((u, v)) = w.steps().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::InvalidWalk(format!("{u} {v} is not an edge")));
    }
    Ok(())
}

/// Degree of every vertex in `G + W`: the base degree plus one for every walk
/// edge incident to it.
pub fn degree_profile(g: &Graph, w: &Walk) -> Result<DegreeProfile> {
    ensure_valid(g, w)?;
    let mut deg = g.degrees();
    for (u, v) in w.steps() {
        deg[u] += 1;
        deg[v] += 1;
    }
    Ok(DegreeProfile(deg))
}

/// Degrees of `G + F` for an edge multiset `F`.
pub fn multiset_profile(g: &Graph, f: &EdgeMultiset) -> DegreeProfile {
    let mut deg = g.degrees();
    for ((u, v), c) in f.iter() {
        deg[u] += c;
        deg[v] += c;
    }
    DegreeProfile(deg)
}
