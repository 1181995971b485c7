use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::prime::PrimeField;

/// Sparse integer vector: strictly increasing column indices, nonzero values.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Incrementally maintained row-echelon basis of a span of integer vectors.
pub trait Echelon {
    /// Adds `row` to the span. Returns whether the rank went up.
    fn insert(&mut self, row: &[(usize, BigInt)]) -> bool;
    fn rank(&self) -> usize;
}

/// Where ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankBackend {
    /// Over the rationals, fraction-free.
    Exact,
    /// Over the given prime field.
    Modular(PrimeField),
}

impl RankBackend {
    pub fn echelon(&self) -> Box<dyn Echelon> {
        match *self {
            RankBackend::Exact => Box::new(IntegerEchelon::default()),
            RankBackend::Modular(field) => Box::new(ModularEchelon::new(field)),
        }
    }
}

/// Echelon basis over the rationals kept as primitive integer rows.
#[derive(Default)]
pub struct IntegerEchelon {
    pivots: HashMap<usize, Vec<(usize, BigInt)>>,
}

fn make_primitive(row: &mut BTreeMap<usize, BigInt>) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g == BigInt::from(1) {
            return;
        }
    }
    if !g.is_zero() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

impl Echelon for IntegerEchelon {
    fn insert(&mut self, row: &[(usize, BigInt)]) -> bool {
        let mut work: BTreeMap<usize, BigInt> =
            row.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
        make_primitive(&mut work);
        while let Some((&col, lead)) = work.iter().next() {
            let Some(pivot) = self.pivots.get(&col) else {
                let lead_negative = lead.is_negative();
                if lead_negative {
                    for v in work.values_mut() {
                        *v = -&*v;
                    }
                }
                self.pivots.insert(col, work.into_iter().collect());
                return true;
            };
            let g = lead.gcd(&pivot[0].1);
            let row_mult = &pivot[0].1 / &g;
            let pivot_mult = lead / &g;
            for v in work.values_mut() {
                *v *= &row_mult;
            }
            for (c, pv) in pivot {
                let entry = work.entry(*c).or_insert_with(BigInt::zero);
                *entry -= &pivot_mult * pv;
                if entry.is_zero() {
                    work.remove(c);
                }
            }
            make_primitive(&mut work);
        }
        false
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Echelon basis over a prime field; pivot rows are normalized to a leading 1.
pub struct ModularEchelon {
    field: PrimeField,
    pivots: HashMap<usize, Vec<(usize, u64)>>,
}

impl ModularEchelon {
    pub fn new(field: PrimeField) -> Self {
        Self {
            field,
            pivots: HashMap::new(),
        }
    }
}

impl Echelon for ModularEchelon {
    fn insert(&mut self, row: &[(usize, BigInt)]) -> bool {
        let f = self.field;
        let mut work: BTreeMap<usize, u64> = row
            .iter()
            .map(|(c, v)| (*c, f.from_bigint(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some((&col, &lead)) = work.iter().next() {
            let Some(pivot) = self.pivots.get(&col) else {
                let inv = f.inv(lead);
                let normalized = work.into_iter().map(|(c, v)| (c, f.mul(v, inv))).collect();
                self.pivots.insert(col, normalized);
                return true;
            };
            for &(c, pv) in pivot {
                let entry = work.entry(c).or_insert(0);
                *entry = f.sub(*entry, f.mul(lead, pv));
                if *entry == 0 {
                    work.remove(&c);
                }
            }
        }
        false
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}
