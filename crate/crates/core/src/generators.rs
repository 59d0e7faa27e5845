//! Graph families used by the closed forms, the tests and the benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced a simple graph")
}

/// Path of length `len`: vertices `0..=len`, edges `i, i+1`.
pub fn path(len: usize) -> Graph {
    let edges: Vec<_> = (0..len).map(|i| (i, i + 1)).collect();
    build(len + 1, &edges)
}

/// Cycle on `n >= 3` vertices `0..n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    build(a + b, &edges)
}

/// Star with centre `0` and `k` leaves.
pub fn star(k: usize) -> Graph {
    subdivided_star(k, 1)
}

/// Centre `0` with `k` branches, each a path of `len` edges. Branch `b`
/// occupies vertices `1 + b*len ..= (b+1)*len`, ordered away from the centre.
pub fn subdivided_star(k: usize, len: usize) -> Graph {
    let mut edges = Vec::with_capacity(k * len);
    for b in 0..k {
        let base = 1 + b * len;
        edges.push((0, base));
        for i in 1..len {
            edges.push((base + i - 1, base + i));
        }
    }
    build(1 + k * len, &edges)
}

/// The 3-dimensional hypercube.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let u = v ^ (1 << bit);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    build(8, &edges)
}

/// Uniform random labelled tree on `n` vertices (Prüfer decoding).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 | 1 => return Graph::empty(n),
        2 => return build(2, &[(0, 1)]),
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    build(n, &edges)
}

/// Erdős–Rényi `G(n, p)`, resampled until connected.
pub fn connected_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = build(n, &edges);
        if g.is_connected() {
            return g;
        }
    }
}

/// Cubic bipartite graph on `2s` vertices (`s >= 3`): the Hamiltonian cycle
/// `0, 1, ..., 2s-1` plus a random perfect matching between even and odd
/// vertices that avoids the cycle edges.
pub fn cubic_bipartite<R: Rng + ?Sized>(s: usize, rng: &mut R) -> Graph {
    assert!(s >= 3, "cubic bipartite graphs need at least 6 vertices");
    let n = 2 * s;
    let evens: Vec<usize> = (0..n).step_by(2).collect();
    let mut odds: Vec<usize> = (1..n).step_by(2).collect();
    loop {
        odds.shuffle(rng);
        let clash = evens.iter().zip(&odds).any(|(&e, &o)| {
            let d = e.abs_diff(o);
            d == 1 || d == n - 1
        });
        if clash {
            continue;
        }
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend(evens.iter().zip(&odds).map(|(&e, &o)| (e, o)));
        return build(n, &edges);
    }
}

/// All labelled graphs on `n` vertices, one per isomorphism class, that are
/// connected. Brute-force canonical forms; intended for `n <= 6`.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if edges.len() + 1 < n {
            continue;
        }
        let g = build(n, &edges);
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<_> = edges
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .expect("at least one permutation");
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All free trees on `n` vertices, one per isomorphism class, generated from
/// canonical level sequences of rooted trees and deduplicated by AHU
/// canonical form over every rooting.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut parents = vec![usize::MAX; n];
    enumerate_parent_arrays(1, n, &mut parents, &mut |par| {
        let edges: Vec<_> = (1..n).map(|v| (par[v], v)).collect();
        let g = build(n, &edges);
        let key = (0..n).map(|r| ahu_code(&g, r)).min().expect("n >= 1");
        if seen.insert(key) {
            out.push(g);
        }
    });
    out
}

// Vertex v (in BFS-like numbering) takes a parent among 0..v; the depth of
// parents is non-decreasing, which keeps the enumeration small.
fn enumerate_parent_arrays(
    v: usize,
    n: usize,
    parents: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if v == n {
        visit(parents);
        return;
    }
    let lo = if v == 1 { 0 } else { parents[v - 1] };
    for p in lo..v {
        parents[v] = p;
        enumerate_parent_arrays(v + 1, n, parents, visit);
    }
}

fn ahu_code(g: &Graph, root: usize) -> String {
    fn rec(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| rec(g, u, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    rec(g, root, usize::MAX)
}
