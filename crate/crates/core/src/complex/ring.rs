use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::ComplexError;

/// A ring with unit supplying cochain values.
///
/// Multiplication is never assumed commutative: every product built from a
/// ring keeps its factors in order.
pub trait CoefficientRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_commutative(&self) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// `a` for `sign > 0`, `-a` otherwise.
    fn signed(&self, a: &Self::Elem, sign: i8) -> Self::Elem {
        if sign > 0 {
            a.clone()
        } else {
            self.neg(a)
        }
    }
}

/// The integers or the integers modulo `m >= 2`. Elements are `BigInt`s, kept
/// reduced into `0..m` for the modular case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Integers,
    IntegersMod(u64),
}

impl Coeff {
    pub fn modulo(m: u64) -> Result<Self, ComplexError> {
        if m < 2 {
            return Err(ComplexError::BadModulus(m));
        }
        Ok(Coeff::IntegersMod(m))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Coeff::Integers => None,
            Coeff::IntegersMod(m) => Some(*m),
        }
    }

    pub fn reduce(&self, a: BigInt) -> BigInt {
        match self {
            Coeff::Integers => a,
            Coeff::IntegersMod(m) => a.mod_floor(&BigInt::from(*m)),
        }
    }

    pub fn from_i64(&self, a: i64) -> BigInt {
        self.reduce(BigInt::from(a))
    }

    /// Uniform over `-3..=3` for the integers, over all residues otherwise.
    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigInt {
        match self {
            Coeff::Integers => BigInt::from(rng.gen_range(-3i64..=3)),
            Coeff::IntegersMod(m) => BigInt::from(rng.gen_range(0..*m)),
        }
    }
}

impl CoefficientRing for Coeff {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Integers => f.write_str("Z"),
            Coeff::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for Coeff {
    type Err = ComplexError;

    /// Accepts `Z` and `Z/m`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Z" {
            return Ok(Coeff::Integers);
        }
        let m = s
            .strip_prefix("Z/")
            .and_then(|m| m.parse::<u64>().ok())
            .ok_or_else(|| ComplexError::BadCoefficientSpec(s.to_string()))?;
        Coeff::modulo(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_and_display() {
        assert_eq!("Z".parse::<Coeff>().unwrap(), Coeff::Integers);
        assert_eq!("Z/6".parse::<Coeff>().unwrap(), Coeff::IntegersMod(6));
        assert_eq!(Coeff::IntegersMod(6).to_string(), "Z/6");
        assert!("Z/1".parse::<Coeff>().is_err());
        assert!("Q".parse::<Coeff>().is_err());
    }

    #[test]
    fn ring_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for ring in [Coeff::Integers, Coeff::IntegersMod(2), Coeff::IntegersMod(6), Coeff::IntegersMod(7)] {
            for _ in 0..200 {
                let a = ring.random_elem(&mut rng);
                let b = ring.random_elem(&mut rng);
                let c = ring.random_elem(&mut rng);
                assert_eq!(ring.add(&a, &ring.add(&b, &c)), ring.add(&ring.add(&a, &b), &c));
                assert_eq!(ring.mul(&a, &ring.mul(&b, &c)), ring.mul(&ring.mul(&a, &b), &c));
                assert_eq!(
                    ring.mul(&a, &ring.add(&b, &c)),
                    ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
                );
                assert_eq!(
                    ring.mul(&ring.add(&a, &b), &c),
                    ring.add(&ring.mul(&a, &c), &ring.mul(&b, &c))
                );
                assert_eq!(ring.mul(&ring.one(), &a), a);
                assert_eq!(ring.mul(&a, &ring.one()), a);
                assert!(ring.is_zero(&ring.add(&a, &ring.neg(&a))));
                assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
            }
        }
    }

    #[test]
    fn residues_stay_reduced() {
        let r = Coeff::IntegersMod(6);
        assert_eq!(r.neg(&BigInt::from(1)), BigInt::from(5));
        assert_eq!(r.from_i64(-13), BigInt::from(5));
    }
}
