//! Irregularity checks and normal forms of walks.
//!
//! Two walks are equivalent when they have the same edge multiset, and only
//! the multiset matters for irregularity. Every walk is equivalent to one
//! that follows a base walk `S` (traverses `S` once, inserting half-turns
//! `v u v` along each edge just traversed) in which edges of odd
//! multiplicity appear once and edges of even multiplicity at most twice.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{degree_profile, ensure_valid, EdgeMultiset, Graph, Walk};

pub use crate::graph::validate_walk;

/// Edges of `G` whose endpoints have equal degree in `G + W`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConflictReport {
    pub conflicts: Vec<(usize, usize)>,
}

impl ConflictReport {
    pub fn is_irregularising(&self) -> bool {
        self.conflicts.is_empty()
    }
}

pub fn check_irregularising(g: &Graph, w: &Walk) -> Result<ConflictReport> {
    let profile = degree_profile(g, w)?;
    Ok(ConflictReport {
        conflicts: profile.conflicts(g),
    })
}

pub fn is_irregularising(g: &Graph, w: &Walk) -> bool {
    check_irregularising(g, w).is_ok_and(|r| r.is_irregularising())
}

/// A walk written as a base walk plus half-turn counts.
///
/// `half_turns[k]` half-turns are performed along the `k`-th edge of `base`
/// right after it is traversed, so the expansion reads
/// `u0 (u1 u0)^i0 u1 (u2 u1)^i1 u2 ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub base: Walk,
    pub half_turns: Vec<usize>,
    /// Edges traversed an odd number of times by the expansion.
    pub e_odd: BTreeSet<(usize, usize)>,
    /// Edges traversed a non-zero even number of times by the expansion.
    pub e_even: BTreeSet<(usize, usize)>,
}

impl NormalForm {
    fn from_parts(base: Walk, half_turns: Vec<usize>) -> Self {
        let mut nf = NormalForm {
            base,
            half_turns,
            e_odd: BTreeSet::new(),
            e_even: BTreeSet::new(),
        };
        for ((u, v), c) in expand_normal_form(&nf).edge_multiset().iter() {
            if c % 2 == 1 {
                nf.e_odd.insert((u, v));
            } else {
                nf.e_even.insert((u, v));
            }
        }
        nf
    }

    /// True iff every odd edge occurs once in the base, every even edge at
    /// most twice, and no other edge occurs.
    pub fn base_is_admissible(&self) -> bool {
        let base = self.base.edge_multiset();
        base.iter().all(|(e, c)| {
            (self.e_odd.contains(&e) && c == 1) || (self.e_even.contains(&e) && c <= 2)
        }) && self.e_odd.iter().all(|&(u, v)| base.get(u, v) == 1)
    }
}

pub fn expand_normal_form(nf: &NormalForm) -> Walk {
    let base = nf.base.vertices();
    let mut out = Vec::with_capacity(base.len() + 2 * nf.half_turns.iter().sum::<usize>());
    if let Some(&first) = base.first() {
        out.push(first);
    }
    for (k, w) in base.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        out.push(b);
        for _ in 0..nf.half_turns.get(k).copied().unwrap_or(0) {
            out.push(a);
            out.push(b);
        }
    }
    Walk::new(out)
}

/// Gathers the occurrences of every edge, one edge at a time in ascending
/// order, then reads the result off as a base walk plus half-turns.
pub fn normalize_walk(g: &Graph, w: &Walk) -> Result<NormalForm> {
    ensure_valid(g, w)?;
    if w.is_empty() {
        return Err(Error::EmptyWalk);
    }
    let mut current = w.vertices().to_vec();
    let edges: Vec<(usize, usize)> = w.edge_multiset().iter().map(|(e, _)| e).collect();
    for (x, y) in edges {
        current = gather_edge(&current, x, y);
    }
    debug_assert_eq!(Walk::new(current.clone()).edge_multiset(), w.edge_multiset());
    let (base, half_turns) = collapse_runs(&current);
    Ok(NormalForm::from_parts(Walk::new(base), half_turns))
}

// `e^k` starting at `from`: k traversals of edge {from, to}, alternating.
fn edge_power(from: usize, to: usize, k: usize) -> Vec<usize> {
    (0..=k).map(|i| if i % 2 == 0 { from } else { to }).collect()
}

fn append(out: &mut Vec<usize>, piece: &[usize]) {
    match out.last() {
        None => out.extend_from_slice(piece),
        Some(&last) => {
            debug_assert_eq!(Some(&last), piece.first(), "pieces must chain");
            out.extend_from_slice(&piece[1..]);
        }
    }
}

/// Rearranges `w` so that the occurrences of edge `{a, b}` sit in at most two
/// contiguous runs, without touching the subwalks between occurrences.
fn gather_edge(w: &[usize], a: usize, b: usize) -> Vec<usize> {
    let is_e = |i: usize| {
        let (u, v) = (w[i], w[i + 1]);
        (u == a && v == b) || (u == b && v == a)
    };
    let positions: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| is_e(i)).collect();
    let n = positions.len();
    if n == 0 {
        return w.to_vec();
    }
    // Orient e so that the prefix ends at x.
    let x = w[positions[0]];
    let y = if x == a { b } else { a };

    let first = &w[..=positions[0]];
    let last = &w[positions[n - 1] + 1..];
    let mut at_x: Vec<Vec<usize>> = Vec::new();
    let mut at_y: Vec<Vec<usize>> = Vec::new();
    let mut crossing: Vec<Vec<usize>> = Vec::new();
    for pair in positions.windows(2) {
        let piece = &w[pair[0] + 1..=pair[1]];
        let (s, t) = (piece[0], piece[piece.len() - 1]);
        if s == x && t == x {
            at_x.push(piece.to_vec());
        } else if s == y && t == y {
            at_y.push(piece.to_vec());
        } else if s == x {
            crossing.push(piece.to_vec());
        } else {
            crossing.push(piece.iter().rev().copied().collect());
        }
    }

    let mut out = Vec::with_capacity(w.len());
    append(&mut out, first);
    for piece in &at_x {
        append(&mut out, piece);
    }
    if let Some((chosen, rest)) = crossing.split_first() {
        append(&mut out, chosen);
        for piece in &at_y {
            append(&mut out, piece);
        }
        append(&mut out, &edge_power(y, x, n));
        for piece in rest {
            let here = *out.last().expect("nonempty");
            if piece[0] == here {
                append(&mut out, piece);
            } else {
                let rev: Vec<usize> = piece.iter().rev().copied().collect();
                append(&mut out, &rev);
            }
        }
    } else if n % 2 == 1 {
        append(&mut out, &edge_power(x, y, n));
        for piece in &at_y {
            append(&mut out, piece);
        }
    } else {
        append(&mut out, &[x, y]);
        for piece in &at_y {
            append(&mut out, piece);
        }
        append(&mut out, &edge_power(y, x, n - 1));
    }
    append(&mut out, last);
    out
}

/// Splits a walk into maximal runs on a single edge. A run of odd length `k`
/// becomes one base step with `(k-1)/2` half-turns; a run of even length
/// becomes two base steps, the second carrying `(k-2)/2` half-turns.
fn collapse_runs(w: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut base = Vec::new();
    let mut turns = Vec::new();
    if let Some(&first) = w.first() {
        base.push(first);
    }
    let steps = w.len().saturating_sub(1);
    let mut i = 0;
    while i < steps {
        let (a, b) = (w[i], w[i + 1]);
        let mut k = 1;
        while i + k < steps {
            let (u, v) = (w[i + k], w[i + k + 1]);
            if (u == a && v == b) || (u == b && v == a) {
                k += 1;
            } else {
                break;
            }
        }
        if k % 2 == 1 {
            base.push(b);
            turns.push((k - 1) / 2);
        } else {
            base.push(b);
            turns.push(0);
            base.push(a);
            turns.push((k - 2) / 2);
        }
        i += k;
    }
    (base, turns)
}

/// Normal form of a walk on the path `u0 u1 ... un` (vertex `k` is `u_k`).
///
/// The walk is read as `S = u_i ... u_low ... u_high ... u_j` with
/// `low <= start <= end <= high` (reversing the walk when it ends before it
/// starts), plus half-turns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathNormalForm {
    pub form: NormalForm,
    pub low: usize,
    pub start: usize,
    pub end: usize,
    pub high: usize,
    /// `multiplicities[k]` counts traversals of edge `u_k u_{k+1}`.
    pub multiplicities: Vec<usize>,
}

impl PathNormalForm {
    /// Even multiplicity on `low..start` and `end..high`, odd on
    /// `start..end`, zero elsewhere.
    pub fn parity_conditions_hold(&self) -> bool {
        self.multiplicities.iter().enumerate().all(|(k, &t)| {
            if k < self.low || k >= self.high {
                t == 0
            } else if k < self.start || k >= self.end {
                t > 0 && t % 2 == 0
            } else {
                t % 2 == 1
            }
        })
    }
}

pub fn normalize_path_walk(path_length: usize, w: &Walk) -> Result<PathNormalForm> {
    let g = crate::generators::path(path_length);
    ensure_valid(&g, w)?;
    if w.is_empty() {
        return Err(Error::EmptyWalk);
    }
    let w = if w.first() > w.last() { w.reversed() } else { w.clone() };
    let verts = w.vertices();
    let low = *verts.iter().min().expect("nonempty");
    let high = *verts.iter().max().expect("nonempty");
    let (start, end) = (verts[0], verts[verts.len() - 1]);
    let mut t = vec![0usize; path_length];
    for (u, v) in w.steps() {
        t[u.min(v)] += 1;
    }

    let mut base = vec![start];
    let mut turns = Vec::new();
    // Down to `low` bare, back up to `start` with the surplus half-turns.
    for k in (low..start).rev() {
        base.push(k);
        turns.push(0);
    }
    for k in low..start {
        base.push(k + 1);
        turns.push(t[k] / 2 - 1);
    }
    for k in start..end {
        base.push(k + 1);
        turns.push((t[k] - 1) / 2);
    }
    for k in end..high {
        base.push(k + 1);
        turns.push(t[k] / 2 - 1);
    }
    for k in (end..high).rev() {
        base.push(k);
        turns.push(0);
    }
    Ok(PathNormalForm {
        form: NormalForm::from_parts(Walk::new(base), turns),
        low,
        start,
        end,
        high,
        multiplicities: t,
    })
}

/// Reconstructs any walk realising `counts` on `g` (see
/// [`EdgeMultiset::to_walk`]).
pub fn walk_from_counts(g: &Graph, counts: &[usize]) -> Option<Walk> {
    EdgeMultiset::from_counts(g, counts).to_walk(g.n(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};

    #[test]
    fn validates_walks() {
        let p3 = path(3);
        assert!(validate_walk(&p3, &Walk::new(vec![0, 1, 2])));
        assert!(!validate_walk(&p3, &Walk::new(vec![0, 2])));
        let k3 = complete(3);
        assert!(validate_walk(&k3, &Walk::new(vec![0, 1, 0, 1, 0])));
    }

    #[test]
    fn conflict_reports() {
        let k3 = complete(3);
        let r = check_irregularising(&k3, &Walk::empty()).unwrap();
        assert_eq!(r.conflicts, vec![(0, 1), (0, 2), (1, 2)]);
        let k34 = crate::generators::complete_bipartite(3, 4);
        assert!(check_irregularising(&k34, &Walk::empty()).unwrap().is_irregularising());
        assert!(is_irregularising(&k3, &Walk::new(vec![0, 1, 2, 1])));
    }

    #[test]
    fn expansion_examples() {
        let nf = |base: Vec<usize>, turns: Vec<usize>| NormalForm {
            base: Walk::new(base),
            half_turns: turns,
            e_odd: BTreeSet::new(),
            e_even: BTreeSet::new(),
        };
        assert_eq!(expand_normal_form(&nf(vec![0, 1], vec![0])).vertices(), &[0, 1]);
        let w = expand_normal_form(&nf(vec![0, 1], vec![2]));
        assert_eq!(w.vertices(), &[0, 1, 0, 1, 0, 1]);
        assert_eq!(w.length(), 5);
        let w = expand_normal_form(&nf(vec![0, 1, 2], vec![1, 0]));
        assert_eq!(w.vertices(), &[0, 1, 0, 1, 2]);
    }

    #[test]
    fn normalizes_small_path_walk() {
        let g = path(3);
        let w = Walk::new(vec![1, 0, 1, 2]);
        let nf = normalize_walk(&g, &w).unwrap();
        assert_eq!(expand_normal_form(&nf).edge_multiset(), w.edge_multiset());
        assert!(nf.base_is_admissible());
        assert_eq!(nf.e_odd, BTreeSet::from([(1, 2)]));
        assert_eq!(nf.e_even, BTreeSet::from([(0, 1)]));
    }

    #[test]
    fn already_normal_walk_is_kept() {
        let g = path(1);
        let w = Walk::new(vec![0, 1, 0, 1, 0, 1]);
        let nf = normalize_walk(&g, &w).unwrap();
        assert_eq!(nf.base.vertices(), &[0, 1]);
        assert_eq!(nf.half_turns, vec![2]);
        assert_eq!(expand_normal_form(&nf), w);
    }

    #[test]
    fn normalize_rejects_empty_and_invalid() {
        let g = path(3);
        assert_eq!(normalize_walk(&g, &Walk::empty()), Err(Error::EmptyWalk));
        assert!(matches!(
            normalize_walk(&g, &Walk::new(vec![0, 3])),
            Err(Error::InvalidWalk(_))
        ));
    }

    #[test]
    fn path_shape_examples() {
        let nf = normalize_path_walk(4, &Walk::new(vec![1, 2, 3])).unwrap();
        assert_eq!((nf.low, nf.start, nf.end, nf.high), (1, 1, 3, 3));
        assert_eq!(&nf.multiplicities[1..3], &[1, 1]);

        let w = Walk::new(vec![2, 1, 2, 3, 2, 3]);
        let nf = normalize_path_walk(4, &w).unwrap();
        assert_eq!((nf.low, nf.start, nf.end, nf.high), (1, 2, 3, 3));
        assert_eq!(nf.multiplicities[1], 2);
        assert_eq!(nf.multiplicities[2], 3);
        assert!(nf.parity_conditions_hold());
        assert_eq!(expand_normal_form(&nf.form).edge_multiset(), w.edge_multiset());
        assert_eq!(nf.form.base.vertices(), &[2, 1, 2, 3]);
    }

    #[test]
    fn path_walk_reversed_when_needed() {
        let w = Walk::new(vec![3, 2, 1]);
        let nf = normalize_path_walk(4, &w).unwrap();
        assert_eq!((nf.start, nf.end), (1, 3));
        assert!(nf.parity_conditions_hold());
    }
}
