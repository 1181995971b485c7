use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Integer polynomial in `x` and `y`. Keys are `(x_degree, y_degree)`; zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(x_deg: u32, y_deg: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(x_deg, y_deg, c.into());
        p
    }

    /// Builds a polynomial from `(x_degree, y_degree, coefficient)` triples;
    /// repeated monomials are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    pub fn add_term(&mut self, x_deg: u32, y_deg: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry((x_deg, y_deg))
            .or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(x_deg, y_deg));
        }
    }

    pub fn coeff(&self, x_deg: u32, y_deg: u32) -> BigInt {
        self.coeffs
            .get(&(x_deg, y_deg))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in increasing `(x_degree, y_degree)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigInt)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `(x + a)^k` expanded.
    pub fn x_shift_pow(a: i64, k: u32) -> Self {
        Self::linear_pow(true, a, k)
    }

    /// `(y + a)^k` expanded.
    pub fn y_shift_pow(a: i64, k: u32) -> Self {
        Self::linear_pow(false, a, k)
    }

    fn linear_pow(in_x: bool, a: i64, k: u32) -> Self {
        let mut p = Self::zero();
        let mut binom = BigInt::one();
        let a = BigInt::from(a);
        for i in 0..=k {
            // C(k, i) * var^i * a^(k-i)
            let c = &binom * Pow::pow(&a, k - i);
            if in_x {
                p.add_term(i, 0, c);
            } else {
                p.add_term(0, i, c);
            }
            binom = binom * BigInt::from(k - i) / BigInt::from(i + 1);
        }
        p
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, (&(i, j), c)| {
                acc + BigRational::from_integer(c.clone())
                    * Pow::pow(x, i as i32)
                    * Pow::pow(y, j as i32)
            })
    }

    pub fn eval_int(&self, x: i64, y: i64) -> BigInt {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, (&(i, j), c)| {
                acc + c * Pow::pow(&x, i) * Pow::pow(&y, j)
            })
    }

    pub fn x_degree(&self) -> u32 {
        self.coeffs.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.coeffs.keys().map(|k| k.1).max().unwrap_or(0)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.coeffs {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i1, j1), c1) in &self.coeffs {
            for (&(i2, j2), c2) in &rhs.coeffs {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Highest terms first, e.g. `x^2 + x + y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.coeffs.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if n == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let var = |name: &str, d: u32| match d {
                0 => String::new(),
                1 => name.to_string(),
                d => format!("{name}^{d}"),
            };
            let vars = [var("x", i), var("y", j)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("*");
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// Integer polynomial in one variable; `coeffs[k]` multiplies `y^k`.
/// Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    coeffs: Vec<BigInt>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `1 + y + ... + y^(t-1)`.
    pub fn geometric(t: usize) -> Self {
        Self::new(vec![BigInt::one(); t])
    }

    /// Lowest-degree nonzero term as `(degree, coefficient)`.
    pub fn lowest_term(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::new(vec![BigInt::one()]), |acc, _| &acc * self)
    }

    /// Multiplies by `c * y^shift`.
    pub fn scaled_shift(&self, c: &BigInt, shift: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        Self::new(coeffs)
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(out)
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn add(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
        UnivariatePolynomial::new(
            (0..len)
                .map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i))
                .collect(),
        )
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn sub(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
        UnivariatePolynomial::new(
            (0..len)
                .map(|i| get(&self.coeffs, i) - get(&rhs.coeffs, i))
                .collect(),
        )
    }
}
