use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Finitely generated abelian group in invariant-factor normal form:
/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/dₖ` with `1 < d₁ | d₂ | … | dₖ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    /// Builds a group from its free rank and torsion coefficients.
    ///
    /// Panics if the factors are not all `> 1` in divisibility order; the
    /// Smith normal form layer always hands them over that way.
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Self {
        for (i, d) in invariant_factors.iter().enumerate() {
            assert!(d > &BigInt::one(), "invariant factor {d} not > 1");
            if i > 0 {
                assert!(
                    (d % &invariant_factors[i - 1]).is_zero(),
                    "invariant factors out of divisibility order"
                );
            }
        }
        AbelianGroup {
            free_rank,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup::new(0, Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup::new(rank, Vec::new())
    }

    /// `Z/n`, normalizing `n = 0` to `Z` and `n = ±1` to the trivial group.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        let n = if n < BigInt::zero() { -n } else { n };
        if n.is_zero() {
            AbelianGroup::free(1)
        } else if n.is_one() {
            AbelianGroup::trivial()
        } else {
            AbelianGroup::new(0, vec![n])
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// Canonical rendering: free part first, then factors in divisibility order,
/// e.g. `0`, `Z`, `Z^3`, `Z ⊕ Z/2 ⊕ Z/6`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::with_capacity(1 + self.invariant_factors.len());
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}
