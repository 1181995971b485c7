use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::algebra::accumulate;
use super::span::{independent_subset, Poly};
use super::{Exponents, NilError, RankPolicy};
use crate::graphs::{GraphError, Multigraph};
use crate::limits::Limits;
use crate::tutte::HilbertSeries;

/// The power `form^power` of a linear form in the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGenerator {
    pub form: Vec<BigInt>,
    pub power: u32,
}

impl QuotientGenerator {
    pub fn new(form: Vec<BigInt>, power: u32) -> Self {
        Self { form, power }
    }
}

/// Hilbert series of `K[x_1..x_n] / (l^d : (l, d) in gens)`.
pub fn quotient_hilbert(n: usize, gens: &[QuotientGenerator]) -> Result<HilbertSeries, NilError> {
    quotient_hilbert_with(n, gens, RankPolicy::Auto)
}

pub fn quotient_hilbert_with(
    n: usize,
    gens: &[QuotientGenerator],
    policy: RankPolicy,
) -> Result<HilbertSeries, NilError> {
    for (index, g) in gens.iter().enumerate() {
        if g.power == 0 {
            return Err(NilError::ZeroPower { index });
        }
        if g.form.len() != n {
            return Err(NilError::Invalid(format!(
                "generator {index} has {} coefficients, expected {n}",
                g.form.len()
            )));
        }
    }
    let (vars, gens) = eliminate_linear(n, gens);
    let limits = Limits::global();
    let max_power = gens.iter().map(|g| g.power as usize).max();
    // A finite-dimensional quotient by forms of degree at most D in m
    // variables lives in degrees at most m*(D-1): it is a quotient of a
    // complete intersection of m forms of degree D.
    let top_bound = max_power.map_or(0, |d| vars * (d - 1));
    let mut dims = vec![1u64];
    // Basis of the ideal in the current degree: x^alpha * l_g^d_g.
    let mut basis: Vec<((Exponents, usize), Poly)> = Vec::new();
    let zero: Exponents = vec![0u16; vars].into();
    for degree in 1.. {
        let mut seen = BTreeSet::new();
        let mut candidates = Vec::new();
        for ((alpha, g), p) in &basis {
            for j in 0..vars {
                let mut next = alpha.clone();
                next[j] += 1;
                if seen.insert((next.clone(), *g)) {
                    candidates.push(((next, *g), shift(p, j)));
                }
            }
        }
        for (g, gen) in gens.iter().enumerate() {
            if gen.power as usize == degree {
                candidates.push(((zero.clone(), g), power_of_form(&gen.form, gen.power)));
            }
        }
        basis = independent_subset(candidates, degree, policy, limits)?;
        let all = monomial_count(vars, degree)?;
        let dim = all - basis.len() as u64;
        if dim == 0 {
            break;
        }
        if degree > top_bound {
            return Err(NilError::NotArtinian { degree });
        }
        dims.push(dim);
    }
    Ok(HilbertSeries::new(dims))
}

fn monomial_count(vars: usize, degree: usize) -> Result<u64, NilError> {
    // C(vars + degree - 1, degree)
    let mut c: u128 = 1;
    for i in 0..vars.saturating_sub(1) as u128 {
        c = c * (degree as u128 + i + 1) / (i + 1);
        if c > u128::from(u64::MAX) {
            return Err(NilError::Overflow);
        }
    }
    Ok(if vars == 0 { 0 } else { c as u64 })
}

fn shift(p: &Poly, var: usize) -> Poly {
    p.iter()
        .map(|(m, c)| {
            let mut m = m.clone();
            m[var] += 1;
            (m, c.clone())
        })
        .collect()
}

fn power_of_form(form: &[BigInt], power: u32) -> Poly {
    let mut out = Poly::from([(vec![0u16; form.len()].into(), BigInt::one())]);
    for _ in 0..power {
        let mut next = Poly::new();
        for (m, c) in &out {
            for (var, a) in form.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                let mut m = m.clone();
                m[var] += 1;
                accumulate(&mut next, m, c * a);
            }
        }
        out = next;
    }
    out
}

/// Quotients by the linear generators first: the result is a polynomial
/// ring in the remaining variables, with every other generator rewritten
/// there, made primitive, and deduplicated (keeping the lowest power).
fn eliminate_linear(n: usize, gens: &[QuotientGenerator]) -> (usize, Vec<QuotientGenerator>) {
    let linear: Vec<Vec<BigRational>> = gens
        .iter()
        .filter(|g| g.power == 1)
        .map(|g| {
            g.form
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect()
        })
        .collect();
    let (pivots, rows) = rref(n, linear);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    // x_pivot = -sum_f row[f] * x_f over the free variables.
    let substitute = |form: &[BigInt]| -> Vec<BigRational> {
        free.iter()
            .map(|&f| {
                let mut v = BigRational::from_integer(form[f].clone());
                for (&p, row) in pivots.iter().zip(&rows) {
                    v -= BigRational::from_integer(form[p].clone()) * &row[f];
                }
                v
            })
            .collect()
    };
    let mut reduced: BTreeMap<Vec<BigInt>, u32> = BTreeMap::new();
    for g in gens.iter().filter(|g| g.power > 1) {
        let Some(form) = primitive(substitute(&g.form)) else {
            continue;
        };
        let entry = reduced.entry(form).or_insert(g.power);
        *entry = (*entry).min(g.power);
    }
    let gens = reduced
        .into_iter()
        .map(|(form, power)| QuotientGenerator { form, power })
        .collect();
    (free.len(), gens)
}

/// Reduced row echelon form; returns pivot columns and their rows.
fn rref(n: usize, mut rows: Vec<Vec<BigRational>>) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(i) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, i);
        let lead = rows[r][col].clone();
        for v in &mut rows[r] {
            *v /= &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in 0..n {
                    let d = &f * &rows[r][c];
                    rows[i][c] -= d;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (pivots, rows)
}

/// Clears denominators, divides by the content and fixes the sign so that
/// the first nonzero entry is positive. `None` for the zero form.
fn primitive(form: Vec<BigRational>) -> Option<Vec<BigInt>> {
    let lcm = form.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = form
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let lead = ints.iter().find(|v| !v.is_zero())?;
    let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if lead.is_negative() {
        g = -g;
    }
    Some(ints.into_iter().map(|v| v / &g).collect())
}

/// Number of edges with exactly one endpoint in `subset`.
pub fn boundary_degree(g: &Multigraph, subset: &[usize]) -> Result<usize, NilError> {
    if subset.is_empty() {
        return Err(NilError::Invalid("vertex subset must be nonempty".into()));
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in subset {
        if v >= g.vertex_count() {
            return Err(GraphError::NoSuchVertex {
                vertex: v,
                n: g.vertex_count(),
            }
            .into());
        }
        inside[v] = true;
    }
    Ok(boundary_of(g, |v| inside[v]))
}

fn boundary_of(g: &Multigraph, inside: impl Fn(usize) -> bool) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| inside(u) != inside(v))
        .count()
}

fn subset_masks(g: &Multigraph) -> Result<std::ops::Range<u64>, NilError> {
    let n = g.vertex_count();
    let cap = Limits::global().enumeration_cap;
    if n > cap {
        return Err(NilError::Invalid(format!(
            "{n} vertices give 2^{n} vertex subsets, over the enumeration cap of {cap}"
        )));
    }
    Ok(1..1u64 << n)
}

fn indicator(n: usize, mask: u64) -> Vec<BigInt> {
    (0..n).map(|i| BigInt::from((mask >> i) & 1)).collect()
}

/// `(sum_{i in I} x_i)^(t*D_I + 1)` for every nonempty vertex subset `I`.
pub fn graph_quotient_generators(
    g: &Multigraph,
    t: u32,
) -> Result<Vec<QuotientGenerator>, NilError> {
    if t == 0 {
        return Err(NilError::InvalidCap(t));
    }
    let n = g.vertex_count();
    Ok(subset_masks(g)?
        .map(|mask| {
            let d = boundary_of(g, |v| mask >> v & 1 == 1) as u32;
            QuotientGenerator::new(indicator(n, mask), t * d + 1)
        })
        .collect())
}

/// `(sum_{i in I} x_i)^D_I` for proper nonempty `I`, plus `x_1 + ... + x_n`.
pub fn graph_tree_generators(g: &Multigraph) -> Result<Vec<QuotientGenerator>, NilError> {
    if !g.is_connected() {
        return Err(NilError::Disconnected);
    }
    let n = g.vertex_count();
    let full = (1u64 << n) - 1;
    let mut gens: Vec<_> = subset_masks(g)?
        .filter(|&mask| mask != full)
        .map(|mask| {
            let d = boundary_of(g, |v| mask >> v & 1 == 1) as u32;
            QuotientGenerator::new(indicator(n, mask), d)
        })
        .collect();
    gens.push(QuotientGenerator::new(indicator(n, full), 1));
    Ok(gens)
}
