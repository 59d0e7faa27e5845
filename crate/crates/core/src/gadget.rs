//! Reduction graphs from Hamiltonian cycle in cubic bipartite graphs, and a
//! backtracking Hamiltonian-cycle oracle to test them against.
//!
//! Vertex layout of a gadget built from `h`:
//!
//! 1. the vertices of `h`, keeping their indices;
//! 2. the hubs of each vertex of `h` in turn: `a_u, b_u` on side U and
//!    `a_v, b_v, c_v` on side V;
//! 3. path gadget only: the four degree-raised neighbours of each hub, in
//!    hub order, lower target degrees first;
//! 4. plain leaves, grouped by the vertex they hang from, in the order above.

use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    U,
    V,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub g: Graph,
    /// Length budget of the walk gadget; `None` for the path gadget.
    pub k: Option<usize>,
    /// `h_vertices[x]` is the gadget vertex standing for vertex `x` of `h`.
    pub h_vertices: Vec<usize>,
    pub side: Vec<Side>,
    /// `[a, b]` or `[a, b, c]` per vertex of `h`.
    pub hubs: Vec<Vec<usize>>,
    /// Degree-raised neighbours of each hub, parallel to `hubs`.
    pub raised: Vec<Vec<Vec<usize>>>,
}

impl GadgetInstance {
    /// Lifts a cycle of `h` (vertices in order, without repeating the first)
    /// to the closed walk it induces in the gadget.
    pub fn lift_cycle(&self, cycle: &[usize]) -> Walk {
        let mut w: Vec<usize> = cycle.iter().map(|&x| self.h_vertices[x]).collect();
        if let Some(&first) = w.first() {
            w.push(first);
        }
        Walk::new(w)
    }

    /// The vertices of `h` visited by `w`, in order, mapped back to `h`.
    pub fn restrict_to_h(&self, w: &Walk) -> Vec<usize> {
        w.vertices()
            .iter()
            .filter_map(|&x| self.h_vertices.iter().position(|&y| y == x))
            .collect()
    }
}

fn check_input(h: &Graph) -> Result<Vec<Side>> {
    let colours = h.bipartition().ok_or(Error::NotBipartite)?;
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    if (0..h.n()).any(|v| h.degree(v) != 3) {
        return Err(Error::NotCubic);
    }
    Ok(colours.into_iter().map(|c| if c == 0 { Side::U } else { Side::V }).collect())
}

struct Builder {
    edges: Vec<(usize, usize)>,
    n: usize,
    // (vertex, leaves to add), in creation order.
    pending: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn attach(&mut self, to: usize) -> usize {
        let x = self.vertex();
        self.edges.push((to, x));
        x
    }

    fn finish(mut self) -> Graph {
        for (v, count) in std::mem::take(&mut self.pending) {
            for _ in 0..count {
                self.attach(v);
            }
        }
        Graph::from_edges(self.n, &self.edges).expect("gadget edges are simple")
    }
}

fn build(h: &Graph, raise: bool) -> Result<GadgetInstance> {
    let side = check_input(h)?;
    let mut b = Builder {
        edges: h.edges().to_vec(),
        n: h.n(),
        pending: Vec::new(),
    };
    // Target degrees of the hubs of a U and a V vertex.
    let hub_degrees = |s: Side| -> &'static [usize] {
        match (s, raise) {
            (Side::U, _) => &[5, 6],
            (Side::V, false) => &[6, 7, 1],
            (Side::V, true) => &[6, 7, 6],
        }
    };
    let mut hubs = Vec::with_capacity(h.n());
    for x in 0..h.n() {
        let ids: Vec<usize> = hub_degrees(side[x]).iter().map(|_| b.attach(x)).collect();
        hubs.push(ids);
    }
    let mut raised = vec![Vec::new(); h.n()];
    for x in 0..h.n() {
        for (i, &hub) in hubs[x].iter().enumerate() {
            let target = hub_degrees(side[x])[i];
            let mut around = Vec::new();
            if raise {
                // Two neighbours one above the hub, two more another step up.
                for extra in [1, 1, 2, 2] {
                    let y = b.attach(hub);
                    around.push(y);
                    b.pending.push((y, target + extra - 1));
                }
            }
            raised[x].push(around);
        }
    }
    for x in 0..h.n() {
        for (i, &hub) in hubs[x].iter().enumerate() {
            let target = hub_degrees(side[x])[i];
            let have = 1 + raised[x][i].len();
            b.pending.push((hub, target - have));
        }
    }
    // Leaves of raised neighbours come after those of hubs.
    let split = b.pending.len() - hubs.iter().map(Vec::len).sum::<usize>();
    b.pending.rotate_left(split);
    let g = b.finish();
    Ok(GadgetInstance {
        k: (!raise).then_some(h.n()),
        g,
        h_vertices: (0..h.n()).collect(),
        side,
        hubs,
        raised,
    })
}

/// Gadget whose shortest irregularising walk has length at most `|V(h)|`
/// exactly when `h` has a Hamiltonian cycle.
pub fn build_walk_gadget(h: &Graph) -> Result<GadgetInstance> {
    build(h, false)
}

/// Gadget with an irregularising path exactly when `h` has a Hamiltonian
/// cycle.
pub fn build_path_gadget(h: &Graph) -> Result<GadgetInstance> {
    build(h, true)
}

/// Degrees of the gadget vertices around `h` that the construction fixes,
/// as `(vertex, expected degree)` pairs.
pub fn expected_degrees(inst: &GadgetInstance) -> Vec<(usize, usize)> {
    let raise = inst.k.is_none();
    let mut out = Vec::new();
    for x in 0..inst.h_vertices.len() {
        let (own, hubs): (usize, &[usize]) = match (inst.side[x], raise) {
            (Side::U, _) => (5, &[5, 6]),
            (Side::V, false) => (6, &[6, 7, 1]),
            (Side::V, true) => (6, &[6, 7, 6]),
        };
        out.push((inst.h_vertices[x], own));
        for (i, &hub) in inst.hubs[x].iter().enumerate() {
            out.push((hub, hubs[i]));
            for (j, &y) in inst.raised[x][i].iter().enumerate() {
                out.push((y, hubs[i] + 1 + j / 2));
            }
        }
    }
    out
}

/// A Hamiltonian cycle of `h` starting at vertex 0, found by backtracking in
/// increasing neighbour order, or `None`.
pub fn hamiltonian_cycle(h: &Graph) -> Option<Vec<usize>> {
    let n = h.n();
    if n < 3 || !h.is_connected() {
        return None;
    }
    fn extend(h: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = *path.last().expect("nonempty");
        if path.len() == h.n() {
            return h.has_edge(v, path[0]);
        }
        for &u in h.neighbors(v) {
            if used[u] {
                continue;
            }
            used[u] = true;
            path.push(u);
            if extend(h, path, used) {
                return true;
            }
            path.pop();
            used[u] = false;
        }
        false
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut path = vec![0];
    extend(h, &mut path, &mut used).then_some(path)
}

/// Whether `cycle` lists every vertex of `h` once along a cycle of `h`.
pub fn is_hamiltonian_cycle(h: &Graph, cycle: &[usize]) -> bool {
    let n = h.n();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| h.has_edge(cycle[i], cycle[(i + 1) % n]))
}
