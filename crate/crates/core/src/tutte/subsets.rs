use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::poly::BivariatePolynomial;
use super::TutteError;
use crate::graphs::{enumerate_forests, Multigraph};
use crate::limits::Limits;

/// Sums `count * (x - 1)^a * y^b` (or `(y - 1)^b` when `shift_y`) over a histogram.
fn expand_histogram(hist: BTreeMap<(u32, u32), u64>, shift_y: bool) -> BivariatePolynomial {
    let mut out = BivariatePolynomial::zero();
    for ((a, b), count) in hist {
        let xs = BivariatePolynomial::x_shift_pow(-1, a);
        let ys = if shift_y {
            BivariatePolynomial::y_shift_pow(-1, b)
        } else {
            BivariatePolynomial::monomial(0, b, 1)
        };
        let term = &(&xs * &ys) * &BivariatePolynomial::monomial(0, 0, BigInt::from(count));
        out = &out + &term;
    }
    out
}

/// `sum over forests F of (x - 1)^(c(F) - c(G)) * y^act(F)` for the given
/// edge order. The result does not depend on the order.
pub fn tutte_activity(g: &Multigraph, order: &[usize]) -> Result<BivariatePolynomial, TutteError> {
    let forests = enumerate_forests(g, order)?;
    let rank = g.rank();
    let mut hist = BTreeMap::new();
    for f in forests {
        // c(F) - c(G) = (v - |F|) - (v - rank) = rank - |F|
        *hist
            .entry(((rank - f.size) as u32, f.activity as u32))
            .or_insert(0u64) += 1;
    }
    Ok(expand_histogram(hist, false))
}

/// Corank-nullity expansion `sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))` over
/// all subsets of a ground set of `ground_size` elements. Subsets are passed
/// to `rank` as bitmasks. Each rank is checked against the subset with its
/// lowest element removed (the increment must be 0 or 1).
pub fn tutte_corank_nullity(
    mut rank: impl FnMut(u64) -> usize,
    ground_size: usize,
) -> Result<BivariatePolynomial, TutteError> {
    let cap = Limits::global().enumeration_cap;
    if ground_size > cap {
        return Err(TutteError::CapExceeded {
            size: ground_size,
            cap,
        });
    }
    let total = 1usize << ground_size;
    let mut ranks = vec![0u8; total];
    for s in 0..total {
        let r = rank(s as u64);
        let size = s.count_ones() as usize;
        let ok = if s == 0 {
            r == 0
        } else {
            let below = ranks[s & (s - 1)] as usize;
            r <= size && (r == below || r == below + 1)
        };
        if !ok {
            return Err(TutteError::InvalidRank { subset: s as u64 });
        }
        ranks[s] = r as u8;
    }
    let full = ranks[total - 1] as u32;
    let mut hist = BTreeMap::new();
    for (s, &r) in ranks.iter().enumerate() {
        let r = r as u32;
        *hist.entry((full - r, s.count_ones() - r)).or_insert(0u64) += 1;
    }
    Ok(expand_histogram(hist, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::components_with;

    #[test]
    fn activity_sum_k3_in_every_order() {
        let k3 = Multigraph::complete(3);
        let orders = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for o in orders {
            assert_eq!(tutte_activity(&k3, &o).unwrap().to_string(), "x^2 + x + y");
        }
        assert_eq!(
            tutte_activity(&Multigraph::edgeless(3), &[])
                .unwrap()
                .to_string(),
            "1"
        );
    }

    #[test]
    fn corank_nullity_examples() {
        let k3 = Multigraph::complete(3);
        let graphic = |s: u64| {
            let edges = (0..3).filter(|i| s >> i & 1 == 1).map(|i| k3.edge(i));
            3 - components_with(3, edges)
        };
        assert_eq!(
            tutte_corank_nullity(graphic, 3).unwrap().to_string(),
            "x^2 + x + y"
        );
        let free = |s: u64| s.count_ones() as usize;
        assert_eq!(tutte_corank_nullity(free, 2).unwrap().to_string(), "x^2");
        assert_eq!(tutte_corank_nullity(|_| 0, 1).unwrap().to_string(), "y");
    }

    #[test]
    fn rejects_non_rank_functions() {
        assert!(matches!(
            tutte_corank_nullity(|s| 2 * s.count_ones() as usize, 2),
            Err(TutteError::InvalidRank { .. })
        ));
        assert!(matches!(
            tutte_corank_nullity(|_| 1, 1),
            Err(TutteError::InvalidRank { subset: 0 })
        ));
        assert!(matches!(
            tutte_corank_nullity(|_| 0, 40),
            Err(TutteError::CapExceeded { .. })
        ));
    }
}
