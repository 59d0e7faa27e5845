//! Fixed benchmark inputs, shared by the criterion benches.

use irregwalk_core::generators::{complete, complete_bipartite, connected_gnp, cycle, path, random_tree, subdivided_star};
use irregwalk_core::Graph;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Small graphs the exact walk search handles in milliseconds.
pub fn exact_inputs() -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    vec![
        ("K_5".into(), complete(5)),
        ("K_3,3".into(), complete_bipartite(3, 3)),
        ("P_9".into(), path(9)),
        ("C_7".into(), cycle(7)),
        ("gnp_8".into(), connected_gnp(8, 0.4, &mut rng)),
    ]
}

/// Trees for the DP, from paths to bushy spiders.
pub fn tree_inputs() -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    vec![
        ("spider_5_5".into(), subdivided_star(5, 5)),
        ("spider_8_8".into(), subdivided_star(8, 8)),
        ("path_60".into(), path(60)),
        ("random_40".into(), random_tree(40, &mut rng)),
    ]
}

/// Larger graphs for the polynomial constructions.
pub fn construction_inputs() -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    vec![
        ("gnp_50".into(), connected_gnp(50, 0.1, &mut rng)),
        ("gnp_200".into(), connected_gnp(200, 0.03, &mut rng)),
        ("K_30".into(), complete(30)),
    ]
}
