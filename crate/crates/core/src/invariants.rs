//! The four graded invariants of a relative graph algebra, produced from
//! the connecting matrix `ι − Aᵗ` (inclusion minus transposed signed
//! adjacency) and its transpose.
//!
//! With `M` the `E⁰×V` connecting matrix:
//! the even K-theory group is `coker M`, the odd one is `ker M` (free of
//! rank `|V| − rank M`); the even K-homology group is `ker Mᵗ` (free of
//! rank `|E⁰| − rank M`) and the odd one is `coker Mᵗ`. For finite graphs
//! the dual map is the literal transpose, so the product/sum distinction
//! between `Z^{E⁰}` and `Z E⁰` collapses and all four groups come out of
//! two Smith normal forms.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{make_problem, Graph, KTheoryProblem, Parity, RelativeSet};
use crate::linalg::{smith_normal_form, AbelianGroup, IntMatrix};

/// Graded K-theory of a problem: `k0 = coker(matrix)`, `k1` free of the
/// kernel's rank. `matrix` is the `E⁰×V` connecting matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedKTheoryResult {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    pub matrix: IntMatrix,
    pub problem: KTheoryProblem,
}

/// Graded K-homology of a problem: `k0` free of the kernel's rank,
/// `k1 = coker(matrix)`. `matrix` is the `V×E⁰` transpose of the K-theory
/// connecting matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedKHomologyResult {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    pub matrix: IntMatrix,
    pub problem: KTheoryProblem,
}

/// The `E⁰×V` connecting matrix `ι − Aᵗ` of a problem.
pub fn connecting_matrix(p: &KTheoryProblem) -> IntMatrix {
    let iota = p.inclusion_matrix();
    let at = p.signed_adjacency().transpose();
    let mut m = IntMatrix::from_fn(iota.rows(), iota.cols(), |r, c| &iota[(r, c)] - &at[(r, c)]);
    if let (Some(rows), Some(cols)) = (iota.row_labels(), iota.col_labels()) {
        m = m.with_labels(rows.to_vec(), cols.to_vec());
    }
    m
}

/// Graded K-theory from the cokernel and kernel of the connecting matrix.
pub fn graded_k_theory(p: &KTheoryProblem) -> GradedKTheoryResult {
    let matrix = connecting_matrix(p);
    let snf = smith_normal_form(&matrix);
    GradedKTheoryResult {
        k0: AbelianGroup::new(matrix.rows() - snf.rank, snf.invariant_factors()),
        k1: AbelianGroup::free(matrix.cols() - snf.rank),
        matrix,
        problem: p.clone(),
    }
}

/// Graded K-homology from the kernel and cokernel of the transposed
/// connecting matrix.
pub fn graded_k_homology(p: &KTheoryProblem) -> GradedKHomologyResult {
    let matrix = connecting_matrix(p).transpose();
    let snf = smith_normal_form(&matrix);
    GradedKHomologyResult {
        k0: AbelianGroup::free(matrix.cols() - snf.rank),
        k1: AbelianGroup::new(matrix.rows() - snf.rank, snf.invariant_factors()),
        matrix,
        problem: p.clone(),
    }
}

/// The ungraded case: every parity forced to 0 and the relative set taken
/// to be all regular vertices. For a finite graph with no sources this
/// recovers the Bowen–Franks presentation `coker(1 − Aᵗ)`.
pub fn classical_k_theory(g: &Graph) -> GradedKTheoryResult {
    graded_k_theory(&classical_problem(g))
}

/// The problem underlying [`classical_k_theory`]; exposed so callers can
/// also take its K-homology.
pub fn classical_problem(g: &Graph) -> KTheoryProblem {
    let g = g.with_uniform_parity(Parity::Even);
    let relative_set = RelativeSet::all_regular(&g);
    KTheoryProblem::new(g, relative_set).expect("all-regular set is always valid")
}

/// One named equality check inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Offending data when the check fails, rendered; empty on pass.
    pub detail: String,
}

impl Check {
    fn equal<T: PartialEq + std::fmt::Display>(name: &str, lhs: T, rhs: T) -> Check {
        let pass = lhs == rhs;
        Check {
            name: name.to_string(),
            pass,
            detail: if pass {
                String::new()
            } else {
                format!("{lhs} ≠ {rhs}")
            },
        }
    }
}

/// Cross-check of the two halves of the computation: the K-theory and
/// K-homology groups are computed through independent Smith normal forms
/// of a matrix and its transpose, so their invariant factors and free
/// ranks must line up, and rank–nullity must hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub k_theory: GradedKTheoryResult,
    pub k_homology: GradedKHomologyResult,
    pub checks: Vec<Check>,
}

impl DualityReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn duality_report(p: &KTheoryProblem) -> DualityReport {
    let kt = graded_k_theory(p);
    let kh = graded_k_homology(p);
    let vertex_count = p.graph().vertex_count() as i64;
    let relative_count = p.relative_set().len() as i64;
    let checks = vec![
        Check::equal(
            "torsion match: K0 (K-theory) vs K1 (K-homology)",
            format!("{:?}", kt.k0.invariant_factors()),
            format!("{:?}", kh.k1.invariant_factors()),
        ),
        Check::equal(
            "even free ranks: K0 (K-homology) vs K0 (K-theory)",
            kh.k0.free_rank(),
            kt.k0.free_rank(),
        ),
        Check::equal(
            "odd free ranks: K1 (K-homology) vs K1 (K-theory)",
            kh.k1.free_rank(),
            kt.k1.free_rank(),
        ),
        Check::equal(
            "rank-nullity: rk K0 − rk K1 = |E0| − |V|",
            kt.k0.free_rank() as i64 - kt.k1.free_rank() as i64,
            vertex_count - relative_count,
        ),
    ];
    DualityReport {
        k_theory: kt,
        k_homology: kh,
        checks,
    }
}

/// Bookkeeping for the four-term exact sequence
/// `0 → K₁ → ZV → ZE⁰ → K₀ → 0` around the connecting matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub k1: AbelianGroup,
    pub domain_rank: usize,
    pub codomain_rank: usize,
    pub k0: AbelianGroup,
    pub matrix: IntMatrix,
    pub matrix_rank: usize,
    pub verified: bool,
}

pub fn exact_sequence_report(p: &KTheoryProblem) -> ExactSequenceReport {
    let kt = graded_k_theory(p);
    let matrix = kt.matrix;
    let rank = smith_normal_form(&matrix).rank;
    let domain_rank = p.relative_set().len();
    let codomain_rank = p.graph().vertex_count();
    let verified =
        kt.k1.free_rank() + rank == domain_rank && kt.k0.free_rank() + rank == codomain_rank;
    ExactSequenceReport {
        k1: kt.k1,
        domain_rank,
        codomain_rank,
        k0: kt.k0,
        matrix,
        matrix_rank: rank,
        verified,
    }
}

/// The four groups of one problem, in a fixed order convenient for
/// equality comparisons across computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupQuadruple {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    pub kh0: AbelianGroup,
    pub kh1: AbelianGroup,
}

pub fn group_quadruple(p: &KTheoryProblem) -> GroupQuadruple {
    let kt = graded_k_theory(p);
    let kh = graded_k_homology(p);
    GroupQuadruple {
        k0: kt.k0,
        k1: kt.k1,
        kh0: kh.k0,
        kh1: kh.k1,
    }
}

impl std::fmt::Display for GroupQuadruple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "K0^gr = {}, K1^gr = {}, K0_gr = {}, K1_gr = {}",
            self.k0, self.k1, self.kh0, self.kh1
        )
    }
}

/// Result of recomputing the invariants across tail lengths `1..=max`.
///
/// Attaching a tail at a vertex that receives no edges leaves the algebra
/// alone up to Morita equivalence, so all four groups must stay constant
/// and equal to the groups of the original problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailInvarianceReport {
    pub attachment: String,
    /// Groups of the original `(graph, v_set)` problem.
    pub reference: GroupQuadruple,
    /// Groups after adding a tail of length `L`, for `L = 1..=max_length`.
    pub per_length: Vec<GroupQuadruple>,
    pub constant: bool,
    pub verified: bool,
}

/// Recomputes all four groups for tails of length `1..=max_length` attached
/// at `at`, enlarging the relative set by every newly regular tail vertex.
///
/// Preconditions: `at` receives no edges in `g` and `max_length ≥ 1`.
pub fn tail_invariance_report(
    g: &Graph,
    v_set: &RelativeSet,
    at: &str,
    max_length: usize,
) -> Result<TailInvarianceReport> {
    if max_length < 1 {
        return Err(Error::ZeroTailLength);
    }
    if !g.has_vertex(at) {
        return Err(Error::UnknownVertex(at.to_string()));
    }
    if g.is_regular(at) {
        return Err(Error::TailAtReceivingVertex(at.to_string()));
    }
    let base = KTheoryProblem::new(g.clone(), v_set.clone())?;
    let reference = group_quadruple(&base);

    let mut per_length = Vec::with_capacity(max_length);
    for length in 1..=max_length {
        let tailed = g.add_tail(at, length)?;
        // Newly regular vertices: the attachment point plus every tail
        // vertex except the far end. Tail vertices sit after the original
        // ones in declaration order.
        let mut members: Vec<String> = v_set.members().to_vec();
        members.push(at.to_string());
        members.extend(
            tailed.vertices()[g.vertex_count()..g.vertex_count() + length - 1]
                .iter()
                .cloned(),
        );
        let problem = make_problem(&tailed, members)?;
        per_length.push(group_quadruple(&problem));
    }

    let constant = per_length.windows(2).all(|w| w[0] == w[1]);
    let verified = constant && per_length.first() == Some(&reference);
    Ok(TailInvarianceReport {
        attachment: at.to_string(),
        reference,
        per_length,
        constant,
        verified,
    })
}
