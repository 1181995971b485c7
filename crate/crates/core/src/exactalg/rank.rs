use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::matrix::DenseMatrix;
use super::prime::{random_prime, PrimeField};

/// Trial count used by every probabilistic rank unless the caller overrides it.
pub const DEFAULT_TRIALS: usize = 2;

/// Rank over the rationals. Each row is scaled by the lcm of its denominators
/// and the resulting integer matrix goes through fraction-free elimination.
pub fn rank_exact(m: &DenseMatrix<BigRational>) -> usize {
    let rows = (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    bareiss_rank(rows, m.cols())
}

/// Rank of an integer matrix over the rationals (Bareiss elimination).
pub fn rank_integer(m: &DenseMatrix<BigInt>) -> usize {
    let rows = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    bareiss_rank(rows, m.cols())
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                // Every intermediate entry is a minor, so this division is exact.
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Rank of the integer matrix reduced modulo the given prime.
pub fn rank_mod_prime(m: &DenseMatrix<BigInt>, field: &PrimeField) -> usize {
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|v| field.from_bigint(v)).collect())
        .collect();
    let nrows = a.len();
    let cols = m.cols();
    let mut rank = 0;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = field.inv(a[rank][col]);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = field.mul(row[col], inv);
            for j in col..cols {
                row[j] = field.sub(row[j], field.mul(factor, pivot_row[j]));
            }
        }
        rank += 1;
    }
    rank
}

/// Maximum over `trials` of the rank modulo independently drawn primes in
/// (2^60, 2^62). Never exceeds the rational rank; deterministic in `seed`.
pub fn rank_modular(m: &DenseMatrix<BigInt>, trials: usize, seed: u64) -> usize {
    assert!(trials >= 1, "rank_modular needs at least one trial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| rank_mod_prime(m, &random_prime(&mut rng)))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: Vec<Vec<i64>>) -> DenseMatrix<BigInt> {
        DenseMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    fn rat_matrix(rows: Vec<Vec<i64>>) -> DenseMatrix<BigRational> {
        int_matrix(rows).map(|v| BigRational::from_integer(v.clone()))
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        assert_eq!(rank_exact(&DenseMatrix::new(0, 0, vec![])), 0);
        assert_eq!(rank_modular(&DenseMatrix::new(0, 0, vec![]), 1, 0), 0);
    }

    #[test]
    fn identity_and_proportional_rows() {
        let id3 = rat_matrix(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(rank_exact(&id3), 3);
        assert_eq!(rank_exact(&rat_matrix(vec![vec![1, 2], vec![2, 4]])), 1);
        let id4 = int_matrix(
            (0..4)
                .map(|i| (0..4).map(|j| (i == j) as i64).collect())
                .collect(),
        );
        assert_eq!(rank_modular(&id4, 1, 0), 4);
        assert_eq!(rank_modular(&int_matrix(vec![vec![0; 3]; 3]), 3, 9), 0);
    }

    #[test]
    fn rational_entries_are_cleared() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let one = BigRational::from_integer(BigInt::from(1));
        let m = DenseMatrix::from_rows(vec![
            vec![half.clone(), one.clone()],
            vec![one.clone(), one.clone() + one.clone()],
        ]);
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn binomial_expansion_rows() {
        // (x1+x2)^2 expanded in the basis x1^2, x1x2, x2^2, listed twice.
        let m = int_matrix(vec![vec![1, 2, 1], vec![1, 2, 1]]);
        let exact = rank_integer(&m);
        assert_eq!(exact, 1);
        assert_eq!(rank_modular(&m, 2, 0), exact);
    }

    #[test]
    fn skipped_columns_keep_bareiss_exact() {
        let m = int_matrix(vec![
            vec![0, 2, 4, 1],
            vec![0, 1, 2, 3],
            vec![0, 3, 6, 4],
            vec![0, 0, 0, 5],
        ]);
        assert_eq!(rank_integer(&m), 2);
    }

    proptest! {
        #[test]
        fn modular_never_exceeds_exact(
            rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 0..6),
            seed in any::<u64>(),
        ) {
            let m = if rows.is_empty() { DenseMatrix::new(0, 0, vec![]) } else { int_matrix(rows) };
            let exact = rank_integer(&m);
            let modular = rank_modular(&m, 2, seed);
            prop_assert!(modular <= exact);
            prop_assert_eq!(modular, exact);
        }

        #[test]
        fn rank_invariant_under_permutation(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..5),
            rot in 0usize..5,
        ) {
            let m = int_matrix(rows.clone());
            let mut permuted = rows.clone();
            let len = permuted.len();
            permuted.rotate_left(rot % len);
            for r in &mut permuted { r.swap(0, 2); }
            prop_assert_eq!(rank_integer(&m), rank_integer(&int_matrix(permuted)));
            prop_assert_eq!(rank_integer(&m), rank_integer(&m.transpose()));
        }
    }
}
