//! Exact shortest irregularising walks for complete graphs, complete
//! bipartite graphs, paths and cycles, each with a witness.
//!
//! Vertex numbering follows [`crate::generators`]: `K_n` on `0..n`,
//! `K_{a,b}` with sides `0..a` and `a..a+b`, the path of length `n` as
//! `0, 1, ..., n` and the cycle `C_n` as `0, 1, ..., n-1`.

use crate::error::{Error, Result};
use crate::graph::{EdgeMultiset, Graph, Walk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormAnswer {
    pub value: usize,
    pub witness: Walk,
}

fn too_small(got: usize, min: usize) -> Result<()> {
    if got < min {
        Err(Error::OrderTooSmall { got, min })
    } else {
        Ok(())
    }
}

/// `3` for `K_3`, `(n² - 5n + 10) / 2` for `n >= 4`.
pub fn mlw_complete(n: usize) -> Result<ClosedFormAnswer> {
    too_small(n, 3)?;
    if n == 3 {
        return Ok(ClosedFormAnswer {
            value: 3,
            witness: Walk::new(vec![0, 1, 2, 1]),
        });
    }
    // On K_4 this walk alters the degrees by 0, +1, +3, +2.
    let mut walk = vec![1, 3, 2, 3];
    for k in 4..n {
        let mut alt = vec![0usize; k];
        for w in walk.windows(2) {
            alt[w[0]] += 1;
            alt[w[1]] += 1;
        }
        // roles[r] is the vertex whose alteration has rank r.
        let mut roles: Vec<usize> = (0..k).collect();
        roles.sort_by_key(|&v| alt[v]);
        if walk.last() != Some(&roles[3]) {
            walk.reverse();
        }
        walk.push(roles[1]);
        walk.extend_from_slice(&roles[4..]);
        walk.push(k);
    }
    Ok(ClosedFormAnswer {
        value: (n * n + 10 - 5 * n) / 2,
        witness: Walk::new(walk),
    })
}

/// `0` when the sides differ, `2a - 2` when `a = b >= 2`.
pub fn mlw_complete_bipartite(a: usize, b: usize) -> Result<ClosedFormAnswer> {
    too_small(a.min(b), 1)?;
    too_small(a + b, 3)?;
    if a != b {
        return Ok(ClosedFormAnswer {
            value: 0,
            witness: Walk::empty(),
        });
    }
    // Star-shaped: every vertex of the first side, pivoting on vertex `a`.
    let mut walk = vec![0];
    for v in 1..a {
        walk.push(a);
        walk.push(v);
    }
    Ok(ClosedFormAnswer {
        value: 2 * a - 2,
        witness: Walk::new(walk),
    })
}

/// `φ(P_n)`, the fewest extra edges making the path of length `n` locally
/// irregular.
pub fn phi_path(n: usize) -> Result<usize> {
    too_small(n, 2)?;
    Ok(match n % 4 {
        0 => n / 2,
        2 => n / 2 - 1,
        _ => (n - 1) / 2,
    })
}

/// Optimal multiset for [`phi_path`]: edges `(4t+2, 4t+3)` and
/// `(4t+3, 4t+4)` that fit in the path.
pub fn phi_path_witness(n: usize) -> Result<EdgeMultiset> {
    too_small(n, 2)?;
    let mut f = EdgeMultiset::new();
    for a in (2..n).step_by(4) {
        f.add(a, a + 1, 1);
        if a + 2 <= n {
            f.add(a + 1, a + 2, 1);
        }
    }
    Ok(f)
}

// Shortest witnesses for short paths, found by exhaustive search. From
// length 6 on they stay within vertices `2..=n-2`, which the cycle
// construction relies on.
const SHORT_PATH_WITNESSES: [&[usize]; 8] = [
    &[],
    &[0, 1],
    &[0, 1, 2],
    &[1, 2, 3],
    &[2, 3, 4],
    &[2, 3, 4, 5, 4],
    &[2, 3, 4, 5, 6, 5, 4],
    &[3, 2, 3, 4, 5, 6, 7, 6, 5],
];

/// Shortest irregularising walk of the path of length `n`: `0, 1, 2, 2`
/// for `n = 2, 3, 4, 5` and `2n - 10` from then on.
pub fn mlw_path(n: usize) -> Result<ClosedFormAnswer> {
    too_small(n, 2)?;
    if n <= 9 {
        let witness = Walk::new(SHORT_PATH_WITNESSES[n - 2].to_vec());
        return Ok(ClosedFormAnswer {
            value: witness.length(),
            witness,
        });
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 2..=4 {
        for j in (n - 4..=n - 2).rev() {
            let cost = 2 * n + i - j + 2 * phi_path(j - i)? - 8;
            if best.is_none_or(|(c, _, _)| cost < c) {
                best = Some((cost, i, j));
            }
        }
    }
    let (value, i, j) = best.expect("nine candidates");
    let f = phi_path_witness(j - i)?;
    let mut walk: Vec<usize> = (2..=i).rev().collect();
    walk.extend(3..=i);
    for k in i..j {
        walk.push(k + 1);
        for _ in 0..f.get(k - i, k - i + 1) {
            walk.push(k);
            walk.push(k + 1);
        }
    }
    walk.extend(j + 1..=n - 2);
    walk.extend((j..n - 2).rev());
    let witness = Walk::new(walk);
    debug_assert_eq!(witness.length(), value);
    Ok(ClosedFormAnswer { value, witness })
}

/// `3` for `C_3`, `2n - 6` for `n >= 4`. The witness is the path witness of
/// length `n + 2` shifted by one, which leaves `n-1, 0, 1` untouched.
pub fn mlw_cycle(n: usize) -> Result<ClosedFormAnswer> {
    too_small(n, 3)?;
    if n == 3 {
        return Ok(ClosedFormAnswer {
            value: 3,
            witness: Walk::new(vec![0, 1, 2, 1]),
        });
    }
    let p = mlw_path(n + 2)?;
    let walk = p.witness.vertices().iter().map(|&k| k - 1).collect();
    Ok(ClosedFormAnswer {
        value: p.value,
        witness: Walk::new(walk),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Path with the given number of edges.
    Path(usize),
    Cycle(usize),
}

/// Class of `g` with an isomorphism onto it: `relabel[i]` is the vertex of
/// `g` playing vertex `i` of the standard numbering.
pub fn recognise(g: &Graph) -> Option<(GraphClass, Vec<usize>)> {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let degrees = g.degrees();
    if degrees.iter().all(|&d| d == 2) {
        return Some((GraphClass::Cycle(n), trace(g, 0)));
    }
    if g.is_tree() && degrees.iter().all(|&d| d <= 2) {
        let end = degrees.iter().position(|&d| d == 1).expect("a path has ends");
        return Some((GraphClass::Path(n - 1), trace(g, end)));
    }
    if g.m() == n * (n - 1) / 2 {
        return Some((GraphClass::Complete(n), (0..n).collect()));
    }
    let colours = g.bipartition()?;
    let (mut a, mut b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| colours[v] == 0);
    if g.m() != a.len() * b.len() {
        return None;
    }
    if a.len() > b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let class = GraphClass::CompleteBipartite(a.len(), b.len());
    a.extend(b);
    Some((class, a))
}

// Vertices of a path or cycle in order from `start`, turning towards the
// smaller neighbour first.
fn trace(g: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().filter(|&&u| u != prev && u != start).min() {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Closed-form answer for any graph [`recognise`] knows, with the witness
/// expressed in the vertices of `g`.
pub fn solve_closed_form(g: &Graph) -> Result<ClosedFormAnswer> {
    let (class, relabel) = recognise(g).ok_or(Error::UnrecognisedClass)?;
    let a = match class {
        GraphClass::Complete(n) => mlw_complete(n)?,
        GraphClass::CompleteBipartite(x, y) => mlw_complete_bipartite(x, y)?,
        GraphClass::Path(len) => mlw_path(len)?,
        GraphClass::Cycle(n) => mlw_cycle(n)?,
    };
    let walk = a.witness.vertices().iter().map(|&v| relabel[v]).collect();
    Ok(ClosedFormAnswer {
        value: a.value,
        witness: Walk::new(walk),
    })
}
