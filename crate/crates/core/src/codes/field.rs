//! Finite fields small enough to tabulate.
//!
//! Prime fields use modular arithmetic. The prime powers 4, 8, 9 and 16 are
//! realised as `F_p[x] / (m(x))` with the pinned moduli below; an element is
//! the base-`p` integer whose digit `i` is the coefficient of `x^i`.

use super::CodeError;

/// Pinned monic moduli, lowest coefficient first (leading 1 omitted).
const MODULI: &[(usize, usize, &[u8])] = &[
    (4, 2, &[1, 1]),        // x^2 + x + 1
    (8, 2, &[1, 1, 0]),     // x^3 + x + 1
    (9, 3, &[1, 0]),        // x^2 + 1
    (16, 2, &[1, 1, 0, 0]), // x^4 + x + 1
];

/// Largest alphabet the crate handles; symbols are rendered as base-36 digits.
pub const MAX_Q: usize = 36;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    q: usize,
    characteristic: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl Field {
    pub fn new(q: usize) -> Result<Self, CodeError> {
        if q > MAX_Q {
            return Err(CodeError::UnsupportedField(q));
        }
        if is_prime(q) {
            let mut add = vec![0u8; q * q];
            let mut mul = vec![0u8; q * q];
            for a in 0..q {
                for b in 0..q {
                    add[a * q + b] = ((a + b) % q) as u8;
                    mul[a * q + b] = ((a * b) % q) as u8;
                }
            }
            return Ok(Field { q, characteristic: q, add, mul });
        }
        let &(_, p, modulus) = MODULI
            .iter()
            .find(|(size, _, _)| *size == q)
            .ok_or(CodeError::UnsupportedField(q))?;
        let m = modulus.len();
        let digits = |mut x: usize| {
            let mut d = vec![0usize; m];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[usize]| d.iter().rev().fold(0usize, |acc, &c| acc * p + c);
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum) as u8;

                let mut prod = vec![0usize; 2 * m - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // x^m = -(modulus lower terms)
                for deg in (m..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &mc) in modulus.iter().enumerate() {
                        let shift = deg - m + i;
                        prod[shift] = (prod[shift] + (p - c) * mc as usize) % p;
                    }
                }
                mul[a * q + b] = undigits(&prod[..m]) as u8;
            }
        }
        Ok(Field { q, characteristic: p, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (1..self.q as u8).find(|&b| self.mul(a, b) == 1)
    }

    pub fn pow(&self, a: u8, e: usize) -> u8 {
        (0..e).fold(1u8, |acc, _| self.mul(acc, a))
    }

    /// Exhaustively verifies the field axioms on the tables.
    pub fn check_axioms(&self) -> bool {
        let q = self.q as u8;
        let elems = || 0..q;
        for a in elems() {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return false;
            }
            if a != 0 && self.inv(a).is_none() {
                return false;
            }
            for b in elems() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for c in elems() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return false;
                    }
                }
            }
        }
        (0..q).all(|a| (0..q).any(|b| self.add(a, b) == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_fields_satisfy_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::new(q).unwrap();
            assert!(f.check_axioms(), "GF({q})");
        }
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        for q in [1, 6, 10, 12, 25, 27, 32, 37] {
            assert!(Field::new(q).is_err(), "q={q}");
        }
    }

    #[test]
    fn characteristic_of_extension_fields() {
        assert_eq!(Field::new(9).unwrap().characteristic(), 3);
        let f = Field::new(16).unwrap();
        assert_eq!(f.characteristic(), 2);
        // x * x^3 = x^4 = x + 1
        assert_eq!(f.mul(0b0010, 0b1000), 0b0011);
    }
}
