use crate::error::{Error, Result};

/// The prime field F_q. Elements are plain `u64` residues in `[0, q)`;
/// the field value carries the modulus so that arithmetic stays exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    q: u64,
    /// `floor(2^64 / q)` for Barrett reduction.
    barrett: u64,
}

/// Largest modulus accepted, so that products of residues fit in a `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

pub const DEFAULT_FIELD_ORDER: u64 = 32003;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) || q > MAX_MODULUS {
            return Err(Error::NotPrime(q));
        }
        Ok(Field { q, barrett: u64::MAX / q })
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    /// `x mod q` for any `x < 2^63`.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let est = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let r = x - est * self.q;
        if r >= self.q {
            r - self.q
        } else {
            r
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.q;
        a %= self.q;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.q), "inverse of zero in F_{}", self.q);
        self.pow(a, self.q - 2)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.q as i64) as u64
    }

    /// Symmetric representative in `(-q/2, q/2]`, used for display.
    pub fn to_signed(&self, a: u64) -> i64 {
        if a > self.q / 2 {
            a as i64 - self.q as i64
        } else {
            a as i64
        }
    }
}

#[cfg(test)]
mod tests {

    #[test]
    fn barrett_matches_remainder() {
        for q in [2u64, 3, 23, 32003, MAX_MODULUS] {
            let f = Field::new(q).unwrap();
            for x in [0u64, 1, q - 1, q, 2 * q - 1, (q - 1) * (q - 1), (1 << 62) + 12345, (1 << 63) - 1] {
                assert_eq!(f.reduce(x), x % q, "q={q} x={x}");
            }
        }
    }
    use super::*;

    #[test]
    fn rejects_composite_and_huge() {
        assert!(Field::new(15).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(4294967311).is_err());
        assert!(Field::new(2).is_ok());
        assert!(Field::new(DEFAULT_FIELD_ORDER).is_ok());
    }

    #[test]
    fn inverses() {
        let f = Field::new(23).unwrap();
        for a in 1..23 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.from_i64(-1), 22);
        assert_eq!(f.to_signed(22), -1);
    }
}
