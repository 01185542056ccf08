use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Determinantal divisors `(d₁, …, d_r)`: `d_k` is the gcd of all `k×k`
/// minors, with trailing zero divisors trimmed.
///
/// Computed by brute-force minor enumeration, deliberately independent of
/// the Smith normal form routine so the two can cross-check each other:
/// the SNF diagonal must equal `d_k / d_{k−1}` (with `d₀ = 1`), extended
/// by zeros.
pub fn determinantal_divisors(m: &IntMatrix) -> Vec<BigInt> {
    let max_order = m.rows().min(m.cols());
    let mut divisors = Vec::with_capacity(max_order);
    for k in 1..=max_order {
        let mut g = BigInt::zero();
        'minors: for row_idx in (0..m.rows()).combinations(k) {
            for col_idx in (0..m.cols()).combinations(k) {
                let det = m.submatrix(&row_idx, &col_idx).determinant();
                g = g.gcd(&det);
                if g.is_one() {
                    break 'minors;
                }
            }
        }
        if g.is_zero() {
            break; // every k×k minor vanishes, so all higher ones do too
        }
        divisors.push(g.abs());
    }
    divisors
}

/// SNF diagonal predicted by the determinantal divisors: the quotients
/// `d_k / d_{k−1}` padded with zeros to length `min(rows, cols)`.
pub fn diagonal_from_divisors(divisors: &[BigInt], rows: usize, cols: usize) -> Vec<BigInt> {
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for d in divisors {
        diag.push(d / &prev);
        prev = d.clone();
    }
    diag.resize(n, BigInt::zero());
    diag
}
