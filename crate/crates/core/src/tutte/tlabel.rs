use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::deletion_contraction::tutte_deletion_contraction;
use super::series::{forest_hilbert_from_tutte, HilbertSeries};
use super::TutteError;
use crate::graphs::{clone_graph, Multigraph};

/// Hilbert series of the algebra with relations `phi^(t+1) = 0`, obtained
/// through the clone graph: the t-capped algebra of `g` has the same series as
/// the square-free algebra of `g` with every edge replaced by `t` copies.
pub fn tlabel_hilbert(g: &Multigraph, t: usize) -> Result<HilbertSeries, TutteError> {
    if t == 0 {
        return Err(TutteError::ZeroLabels);
    }
    let cloned = clone_graph(g, t);
    let tc = tutte_deletion_contraction(&cloned);
    forest_hilbert_from_tutte(
        &tc,
        cloned.edge_count(),
        g.vertex_count(),
        g.component_count(),
    )
}

/// Both sides of the clone identity at `y`:
/// `T_clone(1 + 1/y, y)` and
/// `((y^t - 1)/(y - 1))^(v - c) * T_G((y^(t+1) - 1)/(y^(t+1) - y), y^t)`.
pub fn clone_tutte_sides(
    g: &Multigraph,
    t: usize,
    y: &BigRational,
) -> Result<(BigRational, BigRational), TutteError> {
    if t == 0 {
        return Err(TutteError::ZeroLabels);
    }
    let one = BigRational::one();
    let minus_one = -one.clone();
    let t_i32 = t as i32;
    let y_t = Pow::pow(y, t_i32);
    let y_t1 = Pow::pow(y, t_i32 + 1);
    if y.is_zero() || *y == one || *y == minus_one || y_t1 == *y {
        return Err(TutteError::DegenerateSample(y.to_string()));
    }
    let lhs = tutte_deletion_contraction(&clone_graph(g, t)).eval(&(&one + &one / y), y);
    let rank = (g.vertex_count() - g.component_count()) as i32;
    let geometric = (&y_t - &one) / (y - &one);
    let x_arg = (&y_t1 - &one) / (&y_t1 - y);
    let rhs = Pow::pow(&geometric, rank) * tutte_deletion_contraction(g).eval(&x_arg, &y_t);
    Ok((lhs, rhs))
}

/// Checks the clone identity exactly at every sample point.
pub fn clone_tutte_identity_check(
    g: &Multigraph,
    t: usize,
    samples: &[BigRational],
) -> Result<bool, TutteError> {
    for y in samples {
        let (lhs, rhs) = clone_tutte_sides(g, t, y)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
