//! Shared generators for the benchmark targets in `benches/`.

use rand::Rng;

use gradedk::graph::{Edge, Graph, Parity};
use gradedk::sample;
use gradedk::{make_problem, KTheoryProblem};

/// Graph with exactly `vertices` vertices and `edges` random graded edges.
pub fn fixed_size_graph(seed: u64, vertices: usize, edges: usize) -> Graph {
    let mut rng = sample::seeded_rng(seed);
    let ids: Vec<String> = (0..vertices).map(|i| format!("v{i}")).collect();
    let edge_list = (0..edges)
        .map(|i| Edge {
            id: format!("e{i}"),
            source: ids[rng.gen_range(0..vertices)].clone(),
            range: ids[rng.gen_range(0..vertices)].clone(),
            parity: if rng.gen_bool(0.5) {
                Parity::Odd
            } else {
                Parity::Even
            },
        })
        .collect();
    Graph::new(ids, edge_list).expect("generated identifiers are distinct")
}

/// Problem on a fixed-size graph with the full regular vertex set.
pub fn fixed_size_problem(seed: u64, vertices: usize, edges: usize) -> KTheoryProblem {
    let g = fixed_size_graph(seed, vertices, edges);
    let regular = g.regular_vertices();
    make_problem(&g, regular).expect("regular set is always valid")
}
