use irregwalk_core::exact::{default_budget, exact_mlw};
use irregwalk_core::io::to_dot;
use irregwalk_core::{check_irregularising, degree_profile, Graph, Walk};

fn instance() -> (Graph, Walk) {
    let edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6),
        (6, 7), (6, 8), (6, 9), (9, 10), (9, 11), (9, 12),
    ];
    let g = Graph::from_edges(13, &edges).unwrap();
    (g, Walk::new(vec![1, 2, 3, 2, 3, 4, 3, 4, 6]))
}

#[test]
fn profile_of_the_sum() {
    let (g, w) = instance();
    assert_eq!(w.length(), 8);
    let p = degree_profile(&g, &w).unwrap();
    assert_eq!(p.degrees(), &[1, 3, 6, 8, 7, 1, 5, 1, 1, 4, 1, 1, 1]);
    assert!(check_irregularising(&g, &w).unwrap().conflicts.is_empty());
}

#[test]
fn dot_numbers_each_step() {
    let (g, w) = instance();
    let dot = to_dot(&g, &w);
    for i in 1..=8 {
        assert!(dot.contains(&format!("label=\"{i}\"")), "arc {i}");
    }
    assert!(!dot.contains("label=\"9\""));
}

#[test]
fn optimum_is_at_most_eight() {
    let (g, _) = instance();
    let r = exact_mlw(&g, default_budget(&g));
    assert!(r.finite().unwrap() <= 8);
}
