//! Scalar types: the field trait all linear algebra is generic over, the
//! exact rational default, and a prime-field alternative backend.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A field of scalars for exact linear algebra. No tolerances anywhere:
/// equality is exact equality.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// Arbitrary-precision rational, the default scalar.
pub type Rat = num_rational::BigRational;

impl Field for Rat {
    fn from_i64(v: i64) -> Self {
        Rat::from_integer(v.into())
    }
}

/// The prime field F_p for an odd prime modulus `P`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        let p = P as i64;
        Fp(v.rem_euclid(p) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{}", P);
        // Fermat: x^(p-2) is the inverse of x.
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn fp_arithmetic() {
        let a = F7::new(3);
        let b = F7::new(5);
        assert_eq!(a + b, F7::new(1));
        assert_eq!(a * b, F7::new(1));
        assert_eq!(a - b, F7::new(-2));
        assert_eq!((a / b) * b, a);
        assert_eq!(F7::new(6).inv() * F7::new(6), F7::one());
    }

    #[test]
    fn rational_field() {
        let half = Rat::from_i64(1) / Rat::from_i64(2);
        assert_eq!(half.clone() + half.clone(), Rat::one());
        assert_eq!(half.inv(), Rat::from_i64(2));
    }
}
