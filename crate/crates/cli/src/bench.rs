//! Bound benchmarking over generated families.
//!
//! Each instance gets the greedy and chromatic constructions and, when
//! affordable, the exact optimum (tree DP for trees, search otherwise).
//! Instances whose optimum exceeds `3m` are flagged as counterexamples to
//! the `3m` conjecture; a greedy walk longer than `2(m + n - 1)` is a bug.

use irregwalk_core::constructive::{
    chromatic_irregularise, greedy_irregularise, greedy_vertex_colouring, guiding_closed_walk,
};
use irregwalk_core::exact::{default_budget, exact_mlw_parallel};
use irregwalk_core::treedp::{tree_mlw, RootedTree};
use irregwalk_core::{is_irregularising, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::source::GenSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub specs: Vec<GenSpec>,
    /// Instances drawn per spec; only random specs use more than one.
    pub samples: usize,
    pub seed: u64,
    /// Largest non-tree order handed to exact search.
    pub exact_limit: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub index: usize,
    pub spec: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub greedy: usize,
    pub greedy_bound: usize,
    pub chromatic: usize,
    pub chromatic_bound: usize,
    pub exact: Option<usize>,
    pub exact_source: Option<&'static str>,
    pub exact_ratio: Option<f64>,
    pub greedy_ratio: f64,
    pub counterexample: bool,
    pub greedy_violation: bool,
    pub chromatic_violation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchSummary {
    pub rows: Vec<BenchRow>,
    pub skipped: Vec<String>,
    pub max_exact_ratio: Option<f64>,
    pub counterexamples: Vec<usize>,
    pub violations: Vec<usize>,
}

/// Evaluates one graph; `None` when it is not nice.
pub fn bench_instance(g: &Graph, exact_limit: usize) -> Option<BenchInstance> {
    if !g.is_nice() {
        return None;
    }
    let guide = guiding_closed_walk(g).ok()?;
    let greedy = greedy_irregularise(g, &guide).ok()?;
    let chromatic = chromatic_irregularise(g, &guide, &greedy_vertex_colouring(g)).ok()?;
    let exact = if g.is_tree() {
        let t = RootedTree::new(g.clone(), 0).ok()?;
        tree_mlw(&t).ok()?.finite().map(|v| (v, "tree"))
    } else if g.n() <= exact_limit {
        exact_mlw_parallel(g, default_budget(g)).finite().map(|v| (v, "search"))
    } else {
        None
    };
    let (n, m) = (g.n(), g.m());
    Some(BenchInstance {
        n,
        m,
        greedy: greedy.walk.length(),
        greedy_ok: is_irregularising(g, &greedy.walk) && greedy.walk.length() <= 2 * (m + n - 1),
        chromatic: chromatic.walk.length(),
        chromatic_bound: chromatic.bound,
        chromatic_ok: is_irregularising(g, &chromatic.walk) && chromatic.walk.length() <= chromatic.bound,
        exact,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchInstance {
    pub n: usize,
    pub m: usize,
    pub greedy: usize,
    pub greedy_ok: bool,
    pub chromatic: usize,
    pub chromatic_bound: usize,
    pub chromatic_ok: bool,
    pub exact: Option<(usize, &'static str)>,
}

pub fn run_bench(cfg: &BenchConfig) -> BenchSummary {
    let mut jobs = Vec::new();
    for spec in &cfg.specs {
        let draws = if spec.is_random() { cfg.samples.max(1) } else { 1 };
        for j in 0..draws {
            jobs.push((spec.clone(), cfg.seed.wrapping_add(j as u64)));
        }
    }
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(spec, seed)| bench_instance(&spec.build(*seed), cfg.exact_limit))
        .collect();

    let mut summary = BenchSummary {
        rows: Vec::new(),
        skipped: Vec::new(),
        max_exact_ratio: None,
        counterexamples: Vec::new(),
        violations: Vec::new(),
    };
    for ((spec, seed), res) in jobs.into_iter().zip(results) {
        let Some(r) = res else {
            summary.skipped.push(spec.to_string());
            continue;
        };
        let index = summary.rows.len();
        let exact_ratio = r.exact.map(|(v, _)| v as f64 / r.m as f64);
        let row = BenchRow {
            index,
            spec: spec.to_string(),
            seed,
            n: r.n,
            m: r.m,
            greedy: r.greedy,
            greedy_bound: 2 * (r.m + r.n - 1),
            chromatic: r.chromatic,
            chromatic_bound: r.chromatic_bound,
            exact: r.exact.map(|(v, _)| v),
            exact_source: r.exact.map(|(_, s)| s),
            exact_ratio,
            greedy_ratio: r.greedy as f64 / r.m as f64,
            counterexample: r.exact.is_some_and(|(v, _)| v > 3 * r.m),
            greedy_violation: !r.greedy_ok,
            chromatic_violation: !r.chromatic_ok,
        };
        if row.counterexample {
            summary.counterexamples.push(index);
        }
        if row.greedy_violation || row.chromatic_violation {
            summary.violations.push(index);
        }
        if let Some(x) = exact_ratio {
            summary.max_exact_ratio = Some(summary.max_exact_ratio.map_or(x, |y: f64| y.max(x)));
        }
        summary.rows.push(row);
    }
    summary
}

/// Plain-text table of a summary.
pub fn render_table(s: &BenchSummary) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4}  {:<14} {:>4} {:>4} {:>7} {:>7} {:>9} {:>7} {:>7}  flags",
        "idx", "graph", "n", "m", "greedy", "bound", "chromatic", "exact", "ML/m"
    );
    for r in &s.rows {
        let exact = r.exact.map_or("-".to_string(), |v| v.to_string());
        let ratio = r.exact_ratio.map_or("-".to_string(), |x| format!("{x:.3}"));
        let mut flags = Vec::new();
        if r.counterexample {
            flags.push("COUNTEREXAMPLE");
        }
        if r.greedy_violation {
            flags.push("GREEDY-BUG");
        }
        if r.chromatic_violation {
            flags.push("CHROMATIC-BUG");
        }
        let _ = writeln!(
            out,
            "{:>4}  {:<14} {:>4} {:>4} {:>7} {:>7} {:>9} {:>7} {:>7}  {}",
            r.index,
            r.spec,
            r.n,
            r.m,
            r.greedy,
            r.greedy_bound,
            r.chromatic,
            exact,
            ratio,
            flags.join(",")
        );
    }
    for s in &s.skipped {
        let _ = writeln!(out, "skipped {s}: not nice");
    }
    let _ = writeln!(
        out,
        "max ML/m: {}",
        s.max_exact_ratio.map_or("-".to_string(), |x| format!("{x:.3}"))
    );
    let _ = writeln!(out, "counterexamples to ML <= 3m: {}", s.counterexamples.len());
    let _ = writeln!(out, "bound violations: {}", s.violations.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_match_their_formula() {
        let cfg = BenchConfig {
            specs: (6..=9).map(GenSpec::Path).collect(),
            samples: 1,
            seed: 0,
            exact_limit: 10,
        };
        let s = run_bench(&cfg);
        let exact: Vec<usize> = s.rows.iter().map(|r| r.exact.unwrap()).collect();
        assert_eq!(exact, vec![2, 4, 6, 8]);
        assert!(s.violations.is_empty());
        assert!(s.counterexamples.is_empty());
    }

    #[test]
    fn rows_follow_job_order() {
        let cfg = BenchConfig {
            specs: vec![GenSpec::Gnp(7, 0.5), GenSpec::Complete(2), GenSpec::Cycle(5)],
            samples: 3,
            seed: 11,
            exact_limit: 7,
        };
        let s = run_bench(&cfg);
        assert_eq!(s.skipped, vec!["complete:2".to_string()]);
        let seeds: Vec<u64> = s.rows.iter().map(|r| r.seed).collect();
        assert_eq!(seeds, vec![11, 12, 13, 11]);
        assert_eq!(s.rows[3].exact, Some(4));
        assert_eq!(s, run_bench(&cfg));
    }
}
