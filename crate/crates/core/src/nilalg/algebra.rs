use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Exponents, NilError};
use crate::graphs::{minimal_cuts, Multigraph};

/// Commutative algebra on `variables` generators with `phi^(cap+1) = 0` for
/// every generator, where additionally any monomial whose support contains
/// a forbidden support vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedAlgebra {
    variables: usize,
    cap: u16,
    forbidden: Vec<u64>,
}

impl TruncatedAlgebra {
    pub fn new(variables: usize, cap: u32) -> Result<Self, NilError> {
        Self::with_forbidden(variables, cap, [])
    }

    /// Only inclusion-minimal supports are kept; they generate the same ideal.
    pub fn with_forbidden(
        variables: usize,
        cap: u32,
        supports: impl IntoIterator<Item = u64>,
    ) -> Result<Self, NilError> {
        if cap == 0 || cap > u32::from(u16::MAX) {
            return Err(NilError::InvalidCap(cap));
        }
        let mut supports: Vec<u64> = supports.into_iter().collect();
        if !supports.is_empty() && variables > 64 {
            return Err(NilError::TooManyVariables(variables));
        }
        if let Some(&bad) = supports
            .iter()
            .find(|&&s| variables < 64 && s >> variables != 0)
        {
            return Err(NilError::Invalid(format!(
                "forbidden support {bad:#b} names a variable outside 0..{variables}"
            )));
        }
        supports.sort_by_key(|s| (s.count_ones(), *s));
        supports.dedup();
        let mut forbidden: Vec<u64> = Vec::new();
        for s in supports {
            if !forbidden.iter().any(|&f| f & !s == 0) {
                forbidden.push(s);
            }
        }
        Ok(Self {
            variables,
            cap: cap as u16,
            forbidden,
        })
    }

    /// The algebra of t-labelled forests: one variable per edge, cap `t`.
    pub fn forest(g: &Multigraph, t: u32) -> Result<Self, NilError> {
        Self::new(g.edge_count(), t)
    }

    /// The tree algebra: cap 1 and every cut of `g` forbidden.
    pub fn tree(g: &Multigraph) -> Result<Self, NilError> {
        if !g.is_connected() {
            return Err(NilError::Disconnected);
        }
        Self::with_forbidden(g.edge_count(), 1, minimal_cuts(g)?)
    }

    pub fn variable_count(&self) -> usize {
        self.variables
    }

    pub fn cap(&self) -> u32 {
        u32::from(self.cap)
    }

    pub fn forbidden_supports(&self) -> &[u64] {
        &self.forbidden
    }

    pub fn is_basis_monomial(&self, exps: &[u16]) -> bool {
        exps.len() == self.variables
            && exps.iter().all(|&a| a <= self.cap)
            && (self.forbidden.is_empty() || !self.kills(support_mask(exps)))
    }

    fn kills(&self, mask: u64) -> bool {
        self.forbidden.iter().any(|&f| f & !mask == 0)
    }

    /// `phi_var` times the basis monomial `exps`, or `None` when it vanishes.
    pub(crate) fn times_variable(&self, exps: &[u16], var: usize) -> Option<Exponents> {
        if exps[var] >= self.cap {
            return None;
        }
        let mut out: Exponents = exps.into();
        out[var] += 1;
        if exps[var] == 0 && !self.forbidden.is_empty() && self.kills(support_mask(&out)) {
            return None;
        }
        Some(out)
    }

    pub(crate) fn unit_survives(&self) -> bool {
        !self.forbidden.contains(&0)
    }
}

fn support_mask(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Element of a [`TruncatedAlgebra`], stored on its monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    host: Arc<TruncatedAlgebra>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl AlgebraElement {
    pub fn zero(host: &Arc<TruncatedAlgebra>) -> Self {
        Self {
            host: Arc::clone(host),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(host: &Arc<TruncatedAlgebra>) -> Self {
        let zeros = vec![0u16; host.variables];
        let mut out = Self::zero(host);
        if host.unit_survives() {
            out.terms.insert(zeros.into(), BigInt::from(1));
        }
        out
    }

    pub fn variable(host: &Arc<TruncatedAlgebra>, var: usize) -> Result<Self, NilError> {
        let mut exps = vec![0u16; host.variables];
        if var >= host.variables {
            return Err(NilError::Invalid(format!(
                "variable {var} outside 0..{}",
                host.variables
            )));
        }
        exps[var] = 1;
        Self::monomial(host, &exps, BigInt::from(1))
    }

    /// `c * phi^exps`; zero if the monomial vanishes in the algebra.
    pub fn monomial(
        host: &Arc<TruncatedAlgebra>,
        exps: &[u16],
        c: BigInt,
    ) -> Result<Self, NilError> {
        if exps.len() != host.variables {
            return Err(NilError::ShapeMismatch {
                expected: host.variables,
                got: exps.len(),
            });
        }
        let mut out = Self::zero(host);
        if host.is_basis_monomial(exps) && !c.is_zero() {
            out.terms.insert(exps.into(), c);
        }
        Ok(out)
    }

    pub fn host(&self) -> &Arc<TruncatedAlgebra> {
        &self.host
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &BigInt)> {
        self.terms.iter().map(|(k, v)| (&**k, v))
    }

    pub fn coeff(&self, exps: &[u16]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_host(&self, other: &Self) -> Result<(), NilError> {
        if Arc::ptr_eq(&self.host, &other.host) || self.host == other.host {
            Ok(())
        } else {
            Err(NilError::HostMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, NilError> {
        self.check_host(other)?;
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            accumulate(&mut terms, k.clone(), v.clone());
        }
        Ok(Self {
            host: Arc::clone(&self.host),
            terms,
        })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, NilError> {
        self.check_host(other)?;
        let host = &self.host;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let exps: Exponents = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                if host.is_basis_monomial(&exps) {
                    accumulate(&mut terms, exps, ca * cb);
                }
            }
        }
        Ok(Self {
            host: Arc::clone(host),
            terms,
        })
    }
}

pub(crate) fn accumulate(terms: &mut BTreeMap<Exponents, BigInt>, key: Exponents, c: BigInt) {
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation() {
        let cap1 = Arc::new(TruncatedAlgebra::new(1, 1).unwrap());
        let phi = AlgebraElement::variable(&cap1, 0).unwrap();
        assert!(phi.multiply(&phi).unwrap().is_zero());
        let cap2 = Arc::new(TruncatedAlgebra::new(1, 2).unwrap());
        let phi = AlgebraElement::variable(&cap2, 0).unwrap();
        let sq = phi.multiply(&phi).unwrap();
        assert_eq!(sq.coeff(&[2]), BigInt::from(1));
        assert!(sq.multiply(&phi).unwrap().is_zero());
    }

    #[test]
    fn forbidden_supports() {
        let k3 = Multigraph::complete(3);
        let tree = Arc::new(TruncatedAlgebra::tree(&k3).unwrap());
        assert_eq!(tree.forbidden_supports(), &[0b011, 0b101, 0b110]);
        let e: Vec<_> = (0..3)
            .map(|i| AlgebraElement::variable(&tree, i).unwrap())
            .collect();
        assert!(!e[0].is_zero());
        assert!(e[0].multiply(&e[1]).unwrap().is_zero());
        let forest = Arc::new(TruncatedAlgebra::new(3, 1).unwrap());
        let f: Vec<_> = (0..3)
            .map(|i| AlgebraElement::variable(&forest, i).unwrap())
            .collect();
        let all = f[0].multiply(&f[1]).unwrap().multiply(&f[2]).unwrap();
        assert_eq!(all.coeff(&[1, 1, 1]), BigInt::from(1));
        // Only the full edge set is forbidden here.
        let whole = Arc::new(TruncatedAlgebra::with_forbidden(3, 1, [0b111, 0b111]).unwrap());
        assert_eq!(whole.forbidden_supports(), &[0b111]);
        let w: Vec<_> = (0..3)
            .map(|i| AlgebraElement::variable(&whole, i).unwrap())
            .collect();
        let pair = w[0].multiply(&w[1]).unwrap();
        assert!(!pair.is_zero());
        assert!(pair.multiply(&w[2]).unwrap().is_zero());
    }

    #[test]
    fn minimal_supports_only() {
        let alg = TruncatedAlgebra::with_forbidden(4, 1, [0b1111, 0b0011, 0b0111, 0b1100]).unwrap();
        assert_eq!(alg.forbidden_supports(), &[0b0011, 0b1100]);
        assert!(TruncatedAlgebra::with_forbidden(2, 1, [0b100]).is_err());
        assert!(TruncatedAlgebra::new(2, 0).is_err());
        let empty = Arc::new(TruncatedAlgebra::with_forbidden(2, 1, [0]).unwrap());
        assert!(AlgebraElement::one(&empty).is_zero());
    }

    #[test]
    fn host_mismatch() {
        let a = Arc::new(TruncatedAlgebra::new(2, 1).unwrap());
        let b = Arc::new(TruncatedAlgebra::new(2, 2).unwrap());
        let x = AlgebraElement::variable(&a, 0).unwrap();
        let y = AlgebraElement::variable(&b, 0).unwrap();
        assert_eq!(x.multiply(&y), Err(NilError::HostMismatch));
        let same = Arc::new(TruncatedAlgebra::new(2, 1).unwrap());
        let z = AlgebraElement::variable(&same, 1).unwrap();
        assert_eq!(x.multiply(&z).unwrap().coeff(&[1, 1]), BigInt::from(1));
        let sum = x.add(&z).unwrap();
        assert_eq!(sum.terms().count(), 2);
    }
}
