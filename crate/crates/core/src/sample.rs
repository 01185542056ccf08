//! Seeded random generators for graphs, relative sets, problems and
//! matrices. Used by the randomized consistency checks in the CLI and by
//! the test suites; everything is deterministic given the generator state.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph, KTheoryProblem, Parity, RelativeSet};
use crate::linalg::IntMatrix;

/// The generator used for all seeded checks.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with `1..=max_vertices` vertices, `0..=max_edges` edges and
/// random parities.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let m = rng.gen_range(0..=max_edges);
    let edges = (0..m)
        .map(|i| Edge {
            id: format!("e{i}"),
            source: vertices[rng.gen_range(0..n)].clone(),
            range: vertices[rng.gen_range(0..n)].clone(),
            parity: if rng.gen_bool(0.5) {
                Parity::Odd
            } else {
                Parity::Even
            },
        })
        .collect();
    Graph::new(vertices, edges).expect("generated identifiers are distinct")
}

/// Random subset of the graph's regular vertices.
pub fn random_relative_set(rng: &mut impl Rng, g: &Graph) -> RelativeSet {
    let members: Vec<String> = g
        .regular_vertices()
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    RelativeSet::new(g, members).expect("subset of regular vertices is valid")
}

/// Random `(graph, δ, V)` triple as a ready-made problem.
pub fn random_problem(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> KTheoryProblem {
    let g = random_graph(rng, max_vertices, max_edges);
    let v_set = random_relative_set(rng, &g);
    KTheoryProblem::new(g, v_set).expect("sampled set is valid")
}

/// Random graph guaranteed to contain a vertex that receives no edges,
/// returned together with that vertex's identifier. The extra vertex may
/// feed edges into the rest of the graph.
pub fn random_graph_with_silent_vertex(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
) -> (Graph, String) {
    let base = random_graph(rng, max_vertices, max_edges);
    let silent = format!("s{}", base.vertex_count());
    let mut vertices = base.vertices().to_vec();
    vertices.push(silent.clone());
    let mut edges = base.edges().to_vec();
    for i in 0..rng.gen_range(0..=2usize) {
        edges.push(Edge {
            id: format!("out{i}"),
            source: silent.clone(),
            range: base.vertices()[rng.gen_range(0..base.vertex_count())].clone(),
            parity: Parity::Even,
        });
    }
    let g = Graph::new(vertices, edges).expect("fresh identifier cannot collide");
    (g, silent)
}

/// Dense random matrix with entries uniform in `[−entry_bound, entry_bound]`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, entry_bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| {
        BigInt::from(rng.gen_range(-entry_bound..=entry_bound))
    })
}

/// Random unimodular matrix: the identity scrambled by `steps` elementary
/// row operations (swaps, sign flips, and shear additions with small
/// coefficients).
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 1 {
        return m;
    }
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                m.swap_rows(i, j);
            }
            1 => {
                let i = rng.gen_range(0..n);
                m.negate_row(i);
            }
            _ => {
                if n >= 2 {
                    let mut idx: Vec<usize> = (0..n).collect();
                    idx.shuffle(rng);
                    let q = BigInt::from(rng.gen_range(-3i64..=3));
                    m.add_multiple_of_row(idx[0], idx[1], &q);
                }
            }
        }
    }
    m
}
