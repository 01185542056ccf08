//! Graded K-theory and K-homology of relative Cuntz–Krieger algebras of
//! finite directed graphs.
//!
//! A graph document fixes a finite directed multigraph, a `{0,1}` parity
//! per edge (the grading), and a relative vertex set `V` contained in the
//! regular vertices (those receiving at least one edge). From these the
//! library builds the signed adjacency matrix and the vertex inclusion,
//! forms the connecting matrix `ι − Aᵗ`, and reads all four graded
//! invariants off exact Smith normal forms: the even/odd K-theory groups
//! are its cokernel and kernel, and the even/odd K-homology groups are the
//! kernel and cokernel of its transpose.
//!
//! Everything is exact integer arithmetic on unbounded integers; there is
//! no floating point anywhere.

pub mod error;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod sample;
pub mod tails;

pub use error::{Error, Result};
pub use graph::{
    cuntz_graph, graded_cuntz_graph, make_problem, parse_graph, Edge, Graph, GraphDocument,
    KTheoryProblem, Parity, RelativeSet, RelativeSetSpec,
};
pub use invariants::{
    classical_k_theory, classical_problem, connecting_matrix, duality_report,
    exact_sequence_report, graded_k_homology, graded_k_theory, group_quadruple,
    tail_invariance_report, Check, DualityReport, ExactSequenceReport, GradedKHomologyResult,
    GradedKTheoryResult, GroupQuadruple, TailInvarianceReport,
};
pub use linalg::{
    cokernel, determinantal_divisors, diagonal_from_divisors, kernel_basis, smith_normal_form,
    AbelianGroup, IntMatrix, SmithDecomposition,
};
pub use tails::{sweep, SweepOutcome, TailSweepConfig};
