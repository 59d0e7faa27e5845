//! Where graphs come from: edge-list files or generator specs.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use irregwalk_core::generators as gen;
use irregwalk_core::io::parse_edge_list;
use irregwalk_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A generator spec such as `path:10`, `kbip:3,4`, `spider:3,5` or
/// `gnp:8,0.4`. Random families draw from the seed given at build time.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    SubdividedStar(usize, usize),
    Cube,
    RandomTree(usize),
    Gnp(usize, f64),
    CubicBipartite(usize),
}

impl GenSpec {
    pub fn is_random(&self) -> bool {
        matches!(self, GenSpec::RandomTree(_) | GenSpec::Gnp(..) | GenSpec::CubicBipartite(_))
    }

    pub fn build(&self, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match *self {
            GenSpec::Path(len) => gen::path(len),
            GenSpec::Cycle(n) => gen::cycle(n),
            GenSpec::Complete(n) => gen::complete(n),
            GenSpec::CompleteBipartite(a, b) => gen::complete_bipartite(a, b),
            GenSpec::Star(k) => gen::star(k),
            GenSpec::SubdividedStar(k, len) => gen::subdivided_star(k, len),
            GenSpec::Cube => gen::cube(),
            GenSpec::RandomTree(n) => gen::random_tree(n, &mut rng),
            GenSpec::Gnp(n, p) => gen::connected_gnp(n, p, &mut rng),
            GenSpec::CubicBipartite(s) => gen::cubic_bipartite(s, &mut rng),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Path(len) => write!(f, "path:{len}"),
            GenSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GenSpec::Complete(n) => write!(f, "complete:{n}"),
            GenSpec::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            GenSpec::Star(k) => write!(f, "star:{k}"),
            GenSpec::SubdividedStar(k, len) => write!(f, "spider:{k},{len}"),
            GenSpec::Cube => write!(f, "cube"),
            GenSpec::RandomTree(n) => write!(f, "tree:{n}"),
            GenSpec::Gnp(n, p) => write!(f, "gnp:{n},{p}"),
            GenSpec::CubicBipartite(s) => write!(f, "cubic-bip:{s}"),
        }
    }
}

impl FromStr for GenSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = if args.is_empty() { Vec::new() } else { args.split(',').collect() };
        let int = |i: usize| -> Result<usize, String> {
            args.get(i)
                .ok_or_else(|| format!("`{name}` needs {} argument(s)", i + 1))?
                .trim()
                .parse()
                .map_err(|_| format!("bad number in `{s}`"))
        };
        let want = |k: usize| -> Result<(), String> {
            if args.len() == k {
                Ok(())
            } else {
                Err(format!("`{name}` takes {k} argument(s), got {}", args.len()))
            }
        };
        let spec = match name {
            "path" => GenSpec::Path(int(0)?),
            "cycle" => GenSpec::Cycle(int(0)?),
            "complete" => GenSpec::Complete(int(0)?),
            "kbip" => {
                want(2)?;
                GenSpec::CompleteBipartite(int(0)?, int(1)?)
            }
            "star" => GenSpec::Star(int(0)?),
            "spider" => {
                want(2)?;
                GenSpec::SubdividedStar(int(0)?, int(1)?)
            }
            "cube" => {
                want(0)?;
                return Ok(GenSpec::Cube);
            }
            "tree" => GenSpec::RandomTree(int(0)?),
            "gnp" => {
                want(2)?;
                let p: f64 = args[1].trim().parse().map_err(|_| format!("bad probability in `{s}`"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(format!("probability {p} is outside [0, 1]"));
                }
                GenSpec::Gnp(int(0)?, p)
            }
            "cubic-bip" => GenSpec::CubicBipartite(int(0)?),
            _ => return Err(format!("unknown generator `{name}`")),
        };
        if !matches!(spec, GenSpec::CompleteBipartite(..) | GenSpec::SubdividedStar(..) | GenSpec::Gnp(..)) {
            want(1)?;
        }
        Ok(spec)
    }
}

/// Reads an edge-list file, mapping both I/O and parse failures to a message.
pub fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}
