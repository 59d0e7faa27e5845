use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use irregwalk_core::closedform::solve_closed_form;
use irregwalk_core::constructive::{
    chromatic_irregularise, exact_proper_labelling, greedy_irregularise, greedy_vertex_colouring,
    guiding_closed_walk, labelling_irregularise, Objective,
};
use irregwalk_core::exact::{default_budget, exact_mlw_parallel, exists_irregularising_path, ExactValue};
use irregwalk_core::gadget::{build_path_gadget, build_walk_gadget, hamiltonian_cycle, is_hamiltonian_cycle};
use irregwalk_core::io::{parse_walk, to_dot, write_edge_list};
use irregwalk_core::treedp::{tree_mlw, RootedTree};
use irregwalk_core::walkops::{expand_normal_form, normalize_path_walk, normalize_walk};
use irregwalk_core::{check_irregularising, degree_profile, validate_walk, Graph, Walk};
use serde::Serialize;

use crate::bench::{render_table, run_bench, BenchConfig};
use crate::source::{read_graph, GenSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "irregwalk", version, about = "Irregularising walks of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a walk irregularises a graph.
    Verify(VerifyArgs),
    /// Find an irregularising walk with the chosen method.
    Solve(SolveArgs),
    /// Compare constructions with exact optima over generated graphs.
    Bench(BenchArgs),
    /// Render a graph and a walk as DOT.
    ExportDot(ExportDotArgs),
    /// Build a reduction gadget from a cubic bipartite graph.
    Gadget(GadgetArgs),
    /// Print the normal form of a walk.
    Normalize(NormalizeArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge-list file.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    pub graph: Option<PathBuf>,
    /// Generator spec instead of a file, e.g. `path:10`, `kbip:3,3`, `gnp:8,0.4`.
    #[arg(long)]
    pub gen: Option<GenSpec>,
    /// Seed for random generators.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl GraphArgs {
    fn load(&self) -> Result<(Graph, String), String> {
        match (&self.graph, &self.gen) {
            (Some(p), _) => Ok((read_graph(p)?, p.display().to_string())),
            (None, Some(spec)) => {
                let name = if spec.is_random() { format!("{spec}@{}", self.seed) } else { spec.to_string() };
                Ok((spec.build(self.seed), name))
            }
            (None, None) => Err("either --graph or --gen is required".into()),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// Walk file: whitespace-separated vertex indices.
    #[arg(long)]
    pub walk: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Greedy,
    Chromatic,
    Labelling,
    Tree,
    ClosedForm,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    #[arg(long, value_enum)]
    pub method: Method,
    /// Longest walk the exact search may try; defaults to 2(m+n-1).
    #[arg(long)]
    pub budget: Option<usize>,
    /// Root vertex for the tree method.
    #[arg(long, default_value_t = 0)]
    pub root: usize,
    #[arg(long)]
    pub json: bool,
    /// Also write `G + W` as DOT to this file.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Include wall time in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Generator specs; a range `a..b` in one argument expands, e.g.
    /// `spider:2..5,2..5` or `path:6..9`.
    #[arg(long = "gen", required = true, num_args = 1..)]
    pub gens: Vec<String>,
    /// Instances per random spec.
    #[arg(long, default_value_t = 1)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest order of a non-tree graph solved exactly.
    #[arg(long, default_value_t = 9)]
    pub exact_limit: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// Walk file; without it the plain graph is drawn.
    #[arg(long)]
    pub walk: Option<PathBuf>,
    /// Output file instead of standard output.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    Walk,
    Path,
}

#[derive(Debug, Args)]
pub struct GadgetArgs {
    /// The cubic bipartite graph `H`.
    #[command(flatten)]
    pub input: GraphArgs,
    #[arg(long, value_enum, default_value_t = GadgetKind::Walk)]
    pub kind: GadgetKind,
    /// Write the gadget as an edge list to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Run the exact solver on the gadget (small `H` only).
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct NormalizeArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    #[arg(long)]
    pub walk: PathBuf,
    #[arg(long)]
    pub json: bool,
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify(a) => cmd_verify(&a),
        Command::Solve(a) => cmd_solve(&a),
        Command::Bench(a) => cmd_bench(&a),
        Command::ExportDot(a) => cmd_export_dot(&a),
        Command::Gadget(a) => cmd_gadget(&a),
        Command::Normalize(a) => cmd_normalize(&a),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialise") + "\n"
}

fn read_walk(path: &Path) -> Result<Walk, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_walk(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_pair(input: &GraphArgs, walk: &Path) -> Result<(Graph, Walk), String> {
    let (g, _) = input.load()?;
    let w = read_walk(walk)?;
    if !validate_walk(&g, &w) {
        return Err(format!("{} is not a walk of the graph", walk.display()));
    }
    Ok((g, w))
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    schema: u32,
    irregularising: bool,
    length: usize,
    conflicts: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

pub fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let (g, w) = match load_pair(&a.input, &a.walk) {
        Ok(x) => x,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let report = check_irregularising(&g, &w).expect("walk validated");
    let degrees = degree_profile(&g, &w).expect("walk validated").into_inner();
    let code = if report.is_irregularising() { EXIT_OK } else { EXIT_NEGATIVE };
    if a.json {
        let r = VerifyReport {
            schema: 1,
            irregularising: report.is_irregularising(),
            length: w.length(),
            conflicts: report.conflicts,
            degrees,
        };
        return Outcome::ok(code, json(&r));
    }
    let mut out = String::new();
    if report.is_irregularising() {
        let _ = writeln!(out, "irregularising walk of length {}", w.length());
    } else {
        let _ = writeln!(out, "not irregularising: {} conflict(s)", report.conflicts.len());
        for (u, v) in &report.conflicts {
            let _ = writeln!(out, "  {u} {v} (degree {})", degrees[*u]);
        }
    }
    Outcome::ok(code, out)
}

/// Result of `solve`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub input: String,
    pub method: String,
    /// Walk length, or `None` when no walk was found.
    pub value: Option<usize>,
    pub status: &'static str,
    pub walk: Vec<usize>,
    pub bound: Option<usize>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<f64>,
}

struct Solution {
    value: ExactValue,
    walk: Option<Walk>,
    bound: Option<usize>,
    // Exact methods certify the length as optimal; constructions only a bound.
    exact: bool,
}

fn solve_with(g: &Graph, a: &SolveArgs) -> Result<Solution, String> {
    let constructed = |walk: Walk, bound: usize| Solution {
        value: ExactValue::Finite(walk.length()),
        walk: Some(walk),
        bound: Some(bound),
        exact: false,
    };
    if !g.is_nice() {
        return Err(format!("method not applicable: {}", irregwalk_core::Error::NotNice));
    }
    let inapplicable = |e: irregwalk_core::Error| format!("method not applicable: {e}");
    Ok(match a.method {
        Method::Exact => {
            let r = exact_mlw_parallel(g, a.budget.unwrap_or_else(|| default_budget(g)));
            Solution { value: r.value, walk: r.walk, bound: None, exact: true }
        }
        Method::Tree => {
            let t = RootedTree::new(g.clone(), a.root).map_err(inapplicable)?;
            let r = tree_mlw(&t).map_err(inapplicable)?;
            Solution { value: r.value, walk: r.walk, bound: None, exact: true }
        }
        Method::ClosedForm => {
            let r = solve_closed_form(g).map_err(inapplicable)?;
            Solution {
                value: ExactValue::Finite(r.value),
                walk: Some(r.witness),
                bound: None,
                exact: true,
            }
        }
        Method::Greedy => {
            let guide = guiding_closed_walk(g).map_err(inapplicable)?;
            let r = greedy_irregularise(g, &guide).map_err(inapplicable)?;
            constructed(r.walk, r.bound)
        }
        Method::Chromatic => {
            let guide = guiding_closed_walk(g).map_err(inapplicable)?;
            let r = chromatic_irregularise(g, &guide, &greedy_vertex_colouring(g)).map_err(inapplicable)?;
            constructed(r.walk, r.bound)
        }
        Method::Labelling => {
            let lab = (3..=g.m().max(3))
                .find_map(|cap| exact_proper_labelling(g, Objective::First, cap).ok())
                .ok_or("no proper labelling found")?;
            let r = labelling_irregularise(g, &lab).map_err(inapplicable)?;
            constructed(r.walk, r.bound)
        }
    })
}

pub fn cmd_solve(a: &SolveArgs) -> Outcome {
    let (g, input) = match a.input.load() {
        Ok(x) => x,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let start = Instant::now();
    let sol = match solve_with(&g, a) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let elapsed = start.elapsed();

    if let (ExactValue::Finite(v), Some(w)) = (sol.value, &sol.walk) {
        let length_ok = if sol.exact { w.length() == v } else { sol.bound.is_none_or(|b| w.length() <= b) };
        if !validate_walk(&g, w) || !irregwalk_core::is_irregularising(&g, w) || !length_ok {
            return Outcome::fail(EXIT_VERIFY, format!("witness failed verification: {w}"));
        }
    }
    let (value, status) = match sol.value {
        ExactValue::Finite(v) => (Some(v), "found"),
        ExactValue::Infinite => (None, "none"),
        ExactValue::Exhausted(_) => (None, "exhausted"),
    };
    let walk = sol.walk.clone().unwrap_or_else(Walk::empty);
    if let (Some(path), Some(_)) = (&a.dot, value) {
        if let Err(e) = std::fs::write(path, to_dot(&g, &walk)) {
            return Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display()));
        }
    }
    let method = Method::to_possible_value(&a.method).expect("no skipped variants");
    let report = RunReport {
        schema: 1,
        input,
        method: method.get_name().to_string(),
        value,
        status,
        walk: walk.vertices().to_vec(),
        bound: sol.bound,
        seed: a.input.seed,
        time_ms: a.timing.then_some(elapsed.as_secs_f64() * 1e3),
    };
    let code = if value.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
    if a.json {
        return Outcome::ok(code, json(&report));
    }
    let mut out = String::new();
    match (value, sol.value) {
        (Some(v), _) => {
            let _ = writeln!(out, "length: {v}");
            let _ = writeln!(out, "walk: {walk}");
        }
        (None, ExactValue::Exhausted(b)) => {
            let _ = writeln!(out, "no irregularising walk of length at most {b}");
        }
        _ => {
            let _ = writeln!(out, "no irregularising walk");
        }
    }
    if let Some(b) = report.bound {
        let _ = writeln!(out, "bound: {b}");
    }
    if let Some(t) = report.time_ms {
        let _ = writeln!(out, "time: {t:.3} ms");
    }
    Outcome::ok(code, out)
}

/// Expands `a..b` ranges in a generator spec into every combination.
pub fn expand_spec(s: &str) -> Result<Vec<GenSpec>, String> {
    let (name, args) = s.split_once(':').unwrap_or((s, ""));
    let mut combos: Vec<Vec<String>> = vec![Vec::new()];
    for arg in args.split(',').filter(|x| !x.is_empty()) {
        let values: Vec<String> = match arg.split_once("..") {
            Some((lo, hi)) => {
                let lo: usize = lo.parse().map_err(|_| format!("bad range `{arg}`"))?;
                let hi: usize = hi.parse().map_err(|_| format!("bad range `{arg}`"))?;
                (lo..=hi).map(|x| x.to_string()).collect()
            }
            None => vec![arg.to_string()],
        };
        combos = combos
            .into_iter()
            .flat_map(|c| {
                values.iter().map(move |v| {
                    let mut c = c.clone();
                    c.push(v.clone());
                    c
                })
            })
            .collect();
    }
    combos
        .into_iter()
        .map(|c| {
            if c.is_empty() {
                name.parse()
            } else {
                format!("{name}:{}", c.join(",")).parse()
            }
        })
        .collect()
}

pub fn cmd_bench(a: &BenchArgs) -> Outcome {
    let mut specs = Vec::new();
    for s in &a.gens {
        match expand_spec(s) {
            Ok(v) => specs.extend(v),
            Err(e) => return Outcome::fail(EXIT_USAGE, e),
        }
    }
    let summary = run_bench(&BenchConfig {
        specs,
        samples: a.samples,
        seed: a.seed,
        exact_limit: a.exact_limit,
    });
    let code = if summary.violations.is_empty() { EXIT_OK } else { EXIT_VERIFY };
    let out = if a.json {
        #[derive(Serialize)]
        struct Versioned<'a> {
            schema: u32,
            #[serde(flatten)]
            summary: &'a crate::bench::BenchSummary,
        }
        json(&Versioned { schema: 1, summary: &summary })
    } else {
        render_table(&summary)
    };
    Outcome::ok(code, out)
}

pub fn cmd_export_dot(a: &ExportDotArgs) -> Outcome {
    let loaded = match &a.walk {
        Some(p) => load_pair(&a.input, p),
        None => a.input.load().map(|(g, _)| (g, Walk::empty())),
    };
    let (g, w) = match loaded {
        Ok(x) => x,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let dot = to_dot(&g, &w);
    match &a.dot {
        Some(path) => match std::fs::write(path, &dot) {
            Ok(()) => Outcome::ok(EXIT_OK, String::new()),
            Err(e) => Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())),
        },
        None => Outcome::ok(EXIT_OK, dot),
    }
}

#[derive(Debug, Serialize)]
struct GadgetReport {
    schema: u32,
    kind: &'static str,
    n: usize,
    m: usize,
    k: Option<usize>,
    hamiltonian_cycle: Option<Vec<usize>>,
    lifted_cycle_irregularising: Option<bool>,
    exact_value: Option<usize>,
    exact_restriction_hamiltonian: Option<bool>,
}

pub fn cmd_gadget(a: &GadgetArgs) -> Outcome {
    let (h, _) = match a.input.load() {
        Ok(x) => x,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let built = match a.kind {
        GadgetKind::Walk => build_walk_gadget(&h),
        GadgetKind::Path => build_path_gadget(&h),
    };
    let inst = match built {
        Ok(i) => i,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };
    if let Some(path) = &a.out {
        if let Err(e) = std::fs::write(path, write_edge_list(&inst.g)) {
            return Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display()));
        }
    }
    let cycle = hamiltonian_cycle(&h);
    let lifted = cycle
        .as_ref()
        .map(|c| irregwalk_core::is_irregularising(&inst.g, &inst.lift_cycle(c)));
    let (exact_value, restriction) = if a.exact {
        let r = match a.kind {
            GadgetKind::Walk => exact_mlw_parallel(&inst.g, inst.k.expect("walk gadget has k")),
            GadgetKind::Path => exists_irregularising_path(&inst.g),
        };
        let restriction = r.walk.as_ref().filter(|w| w.is_closed()).map(|w| {
            let mut c = inst.restrict_to_h(w);
            c.pop();
            is_hamiltonian_cycle(&h, &c)
        });
        (r.finite(), restriction.or(r.finite().map(|_| false)))
    } else {
        (None, None)
    };
    let report = GadgetReport {
        schema: 1,
        kind: match a.kind {
            GadgetKind::Walk => "walk",
            GadgetKind::Path => "path",
        },
        n: inst.g.n(),
        m: inst.g.m(),
        k: inst.k,
        hamiltonian_cycle: cycle.clone(),
        lifted_cycle_irregularising: lifted,
        exact_value,
        exact_restriction_hamiltonian: restriction,
    };
    let broken = lifted == Some(false)
        || restriction == Some(false)
        || (a.exact && cycle.is_some() != exact_value.is_some());
    let code = if broken {
        EXIT_VERIFY
    } else if cycle.is_none() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    if a.json {
        return Outcome::ok(code, json(&report));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} gadget: n = {}, m = {}", report.kind, report.n, report.m);
    if let Some(k) = report.k {
        let _ = writeln!(out, "budget k = {k}");
    }
    match &cycle {
        Some(c) => {
            let _ = writeln!(out, "hamiltonian cycle of H: {c:?}");
            let _ = writeln!(out, "lifted cycle irregularising: {}", lifted == Some(true));
        }
        None => {
            let _ = writeln!(out, "H has no hamiltonian cycle");
        }
    }
    if a.exact {
        match exact_value {
            Some(v) => {
                let _ = writeln!(out, "exact: {v}, restriction to H hamiltonian: {}", restriction == Some(true));
            }
            None => {
                let _ = writeln!(out, "exact: none");
            }
        }
    }
    Outcome::ok(code, out)
}

#[derive(Debug, Serialize)]
struct NormalizeReport {
    schema: u32,
    base: Vec<usize>,
    half_turns: Vec<usize>,
    e_odd: Vec<(usize, usize)>,
    e_even: Vec<(usize, usize)>,
    admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<PathReport>,
}

#[derive(Debug, Serialize)]
struct PathReport {
    low: usize,
    start: usize,
    end: usize,
    high: usize,
    multiplicities: Vec<usize>,
    parity_conditions: bool,
}

fn is_standard_path(g: &Graph) -> bool {
    g.m() + 1 == g.n() && g.edges().iter().enumerate().all(|(i, &e)| e == (i, i + 1))
}

pub fn cmd_normalize(a: &NormalizeArgs) -> Outcome {
    let (g, w) = match load_pair(&a.input, &a.walk) {
        Ok(x) => x,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let nf = match normalize_walk(&g, &w) {
        Ok(nf) => nf,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };
    if expand_normal_form(&nf).edge_multiset() != w.edge_multiset() {
        return Outcome::fail(EXIT_VERIFY, "normal form changed the edge multiset");
    }
    let path = if is_standard_path(&g) {
        let pf = normalize_path_walk(g.m(), &w).expect("walk validated");
        if expand_normal_form(&pf.form).edge_multiset() != w.edge_multiset() {
            return Outcome::fail(EXIT_VERIFY, "path normal form changed the edge multiset");
        }
        Some(PathReport {
            low: pf.low,
            start: pf.start,
            end: pf.end,
            high: pf.high,
            parity_conditions: pf.parity_conditions_hold(),
            multiplicities: pf.multiplicities,
        })
    } else {
        None
    };
    let report = NormalizeReport {
        schema: 1,
        admissible: nf.base_is_admissible(),
        base: nf.base.vertices().to_vec(),
        half_turns: nf.half_turns,
        e_odd: nf.e_odd.into_iter().collect(),
        e_even: nf.e_even.into_iter().collect(),
        path,
    };
    if a.json {
        return Outcome::ok(EXIT_OK, json(&report));
    }
    let mut out = String::new();
    let _ = writeln!(out, "base: {}", Walk::new(report.base.clone()));
    let _ = writeln!(out, "half-turns: {:?}", report.half_turns);
    let _ = writeln!(out, "odd edges: {:?}", report.e_odd);
    let _ = writeln!(out, "even edges: {:?}", report.e_even);
    if let Some(p) = &report.path {
        let _ = writeln!(out, "path span: low {} start {} end {} high {}", p.low, p.start, p.end, p.high);
        let _ = writeln!(out, "multiplicities: {:?}", p.multiplicities);
    }
    Outcome::ok(EXIT_OK, out)
}
