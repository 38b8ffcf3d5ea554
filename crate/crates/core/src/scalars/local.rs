use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use super::cyclo::CycloElem;
use super::laurent::{poly_divrem, poly_gcd, LaurentPoly};
use super::ring::{Field, Ring};
use super::ScalarError;

/// A fraction num/den of Laurent polynomials.
///
/// Kept in lowest terms with den a monic polynomial with nonzero constant term.
/// Membership in the localization at v = zeta is a property checked against a
/// chosen order, see [`LocalScalar::is_regular_at`].
#[derive(Clone)]
pub struct LocalScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LocalScalar {
    pub fn from_poly(p: LaurentPoly) -> Self {
        LocalScalar { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return LocalScalar { num, den: LaurentPoly::one() };
        }
        let shift = num.low() - den.low();
        if den.is_monomial() {
            let c = den.coeff(den.low()).recip();
            return LocalScalar {
                num: LaurentPoly::from_parts(shift, num.body().to_vec()).scale(&c),
                den: LaurentPoly::one(),
            };
        }
        let g = poly_gcd(num.body(), den.body());
        let (n2, _) = poly_divrem(num.body(), &g);
        let (d2, _) = poly_divrem(den.body(), &g);
        let lead = d2.last().cloned().expect("nonzero denominator").recip();
        let num = LaurentPoly::from_parts(shift, n2).scale(&lead);
        let den = LaurentPoly::from_parts(0, d2).scale(&lead);
        LocalScalar { num, den }
    }

    /// True when the denominator does not vanish at zeta_n.
    pub fn is_regular_at(&self, n: u32) -> bool {
        !self.den.eval(n).is_zero()
    }

    /// Value at v = zeta_n.
    pub fn eval(&self, n: u32) -> Result<CycloElem, ScalarError> {
        let d = self.den.eval(n);
        let inv = d.inv().ok_or_else(|| ScalarError::OutsideLocalization {
            value: self.to_string(),
            order: n,
        })?;
        Ok(self.num.eval(n) * inv)
    }

    /// Inverse inside the localization at zeta_n, if it exists there.
    pub fn inv_at(&self, n: u32) -> Option<Self> {
        if self.num.eval(n).is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Exact polynomial value when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }
}

impl PartialEq for LocalScalar {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul_ref(&o.den) == o.num.mul_ref(&self.den)
    }
}

impl Add for LocalScalar {
    type Output = LocalScalar;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl Sub for LocalScalar {
    type Output = LocalScalar;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl Mul for LocalScalar {
    type Output = LocalScalar;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl Neg for LocalScalar {
    type Output = LocalScalar;
    fn neg(self) -> Self {
        LocalScalar { num: -self.num, den: self.den }
    }
}

impl Ring for LocalScalar {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalized(self.num.add_ref(&o.num), self.den.clone());
        }
        Self::normalized(
            self.num.mul_ref(&o.den).add_ref(&o.num.mul_ref(&self.den)),
            self.den.mul_ref(&o.den),
        )
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&-o.clone())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul_ref(&o.num));
        }
        Self::normalized(self.num.mul_ref(&o.num), self.den.mul_ref(&o.den))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }
}

impl fmt::Display for LocalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for LocalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<LaurentPoly> for LocalScalar {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<BigRational> for LocalScalar {
    fn from(q: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qcomb::qint;

    #[test]
    fn cancellation_to_lowest_terms() {
        let x = LocalScalar::new(qint(4, 1).mul_ref(&qint(3, 1)), qint(4, 1)).unwrap();
        assert_eq!(x.as_poly(), Some(&qint(3, 1)));
        assert!(x.is_regular_at(8));
    }

    #[test]
    fn denominator_vanishing_at_zeta_detected() {
        let x = LocalScalar::new(LaurentPoly::one(), qint(4, 1)).unwrap();
        assert!(!x.is_regular_at(8));
        assert!(x.eval(8).is_err());
        assert!(x.is_regular_at(12));
    }

    #[test]
    fn monomial_denominator_moves_to_numerator() {
        let x = LocalScalar::new(LaurentPoly::one(), LaurentPoly::v_pow(3)).unwrap();
        assert_eq!(x.as_poly(), Some(&LaurentPoly::v_pow(-3)));
    }
}
