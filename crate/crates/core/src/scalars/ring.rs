use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

/// Commutative ring with exact equality.
pub trait Ring:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn from_i64(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc + one.clone();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn rat2(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
