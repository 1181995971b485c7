use rand::Rng;

/// Largest prime below 2^62. Products of two residues fit in a `u128`.
pub const DEFAULT_PRIME: u64 = (1 << 62) - 57;

/// Arithmetic context for the field of residues modulo a prime `p > 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

/// A residue together with the modulus it lives under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    pub residue: u64,
    pub modulus: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        Self {
            modulus: DEFAULT_PRIME,
        }
    }
}

impl PrimeField {
    /// Returns `None` unless `modulus` is an odd prime below 2^63.
    pub fn new(modulus: u64) -> Option<Self> {
        if modulus > 2 && modulus < (1 << 63) && is_prime_u64(modulus) {
            Some(Self { modulus })
        } else {
            None
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn element(&self, residue: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            residue: residue % self.modulus,
            modulus: self.modulus,
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.modulus;
        base %= self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat. `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.modulus));
        self.pow(a, self.modulus - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        let m = self.modulus as i128;
        ((v as i128 % m + m) % m) as u64
    }

    pub fn from_bigint(&self, v: &num_bigint::BigInt) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let m = num_bigint::BigInt::from(self.modulus);
        v.mod_floor(&m).to_u64().expect("residue fits in u64")
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.modulus)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases suffice below 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniformly chosen odd candidate in (2^60, 2^62), stepped up to the next prime.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> PrimeField {
    loop {
        let mut candidate = rng.gen_range((1u64 << 60) + 1..(1u64 << 62)) | 1;
        while candidate < DEFAULT_PRIME {
            if is_prime_u64(candidate) {
                return PrimeField { modulus: candidate };
            }
            candidate += 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_prime_is_prime_and_below_2_62() {
        assert!(is_prime_u64(DEFAULT_PRIME));
        assert_eq!(DEFAULT_PRIME.leading_zeros(), 2);
        for k in 1..57u64 {
            let c = (1u64 << 62) - k;
            assert!(!is_prime_u64(c), "{c} should be composite");
        }
    }

    #[test]
    fn miller_rabin_small_values() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
        // Carmichael numbers and a strong pseudoprime to several bases.
        for c in [561u64, 1105, 1729, 3_215_031_751, 3_825_123_056_546_413_051] {
            assert!(!is_prime_u64(c));
        }
    }

    #[test]
    fn random_primes_are_large_primes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..8 {
            let f = random_prime(&mut rng);
            assert!(f.modulus() > 1 << 60 && f.modulus() < 1 << 62);
            assert!(is_prime_u64(f.modulus()));
        }
    }

    #[test]
    fn field_ops() {
        let f = PrimeField::default();
        let a = f.from_i64(-5);
        assert_eq!(f.add(a, 5), 0);
        let inv = f.inv(a);
        assert_eq!(f.mul(a, inv), 1);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.sub(3, 5), f.from_i64(-2));
        assert!(PrimeField::new(15).is_none());
        assert!(PrimeField::new(2).is_none());
        assert_eq!(PrimeField::new(13).unwrap().element(27).residue, 1);
    }
}
