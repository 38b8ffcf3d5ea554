use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use super::cyclo::CycloElem;
use super::ring::Ring;

/// Laurent polynomial in v with rational coefficients.
///
/// Stored as v^low * (c[0] + c[1] v + ...), trimmed so that both ends are nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    c: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn monomial(coeff: BigRational, exp: i64) -> Self {
        Self::from_parts(exp, vec![coeff])
    }

    pub fn v() -> Self {
        Self::v_pow(1)
    }

    pub fn v_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    pub fn constant(q: BigRational) -> Self {
        Self::monomial(q, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn from_parts(low: i64, c: Vec<BigRational>) -> Self {
        let mut p = LaurentPoly { low, c };
        p.trim();
        p
    }

    /// Builds from (exponent, coefficient) pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigRational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, q) in terms {
            c[(e - lo) as usize] += q;
        }
        Self::from_parts(lo, c)
    }

    fn trim(&mut self) {
        while self.c.last().map_or(false, |x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead == self.c.len() {
            self.c.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.c.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.c.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        let i = e - self.low;
        if i < 0 || i as usize >= self.c.len() {
            BigRational::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.c.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(move |(i, q)| (self.low + i as i64, q))
    }

    pub fn is_monomial(&self) -> bool {
        self.c.len() == 1
    }

    pub(crate) fn body(&self) -> &[BigRational] {
        &self.c
    }

    /// Substitutes v = zeta_n.
    pub fn eval(&self, n: u32) -> CycloElem {
        CycloElem::from_powers(n, self.terms().map(|(e, q)| (e, q.clone())))
    }

    /// v -> v^k
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms().map(|(e, q)| (e * k, q.clone())))
    }

    /// Exact quotient self / d, or None if d does not divide self in Q[v, v^-1].
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = poly_divrem(&self.c, &d.c);
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_parts(self.low - d.low, q))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_parts(self.low, self.c.iter().map(|x| x * q).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    fn add_signed(&self, o: &Self, sign: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { o.clone() } else { -o.clone() };
        }
        let lo = self.low.min(o.low);
        let hi = self.high().max(o.high());
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (i, x) in self.c.iter().enumerate() {
            c[(self.low - lo) as usize + i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            let slot = &mut c[(o.low - lo) as usize + i];
            if sign {
                *slot += x;
            } else {
                *slot -= x;
            }
        }
        Self::from_parts(lo, c)
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        Self::from_parts(self.low + o.low, c)
    }
}

/// Ordinary polynomial division (lowest degree first); divisor must be nonzero.
pub(crate) fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut b = b.to_vec();
    while b.last().map_or(false, |x| x.is_zero()) {
        b.pop();
    }
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return (vec![], r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for k in (db..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let f = &r[k] * &lead_inv;
        for j in 0..=db {
            let t = &f * &b[j];
            r[k - db + j] -= t;
        }
        q[k - db] = f;
    }
    r.truncate(db);
    (q, r)
}

/// Monic gcd of two ordinary polynomials (lowest degree first).
pub(crate) fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let strip = |mut p: Vec<BigRational>| {
        while p.last().map_or(false, |x| x.is_zero()) {
            p.pop();
        }
        p
    };
    let mut x = strip(a.to_vec());
    let mut y = strip(b.to_vec());
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = strip(r);
    }
    if let Some(l) = x.last().cloned() {
        let inv = l.recip();
        for c in x.iter_mut() {
            *c *= &inv;
        }
    }
    x
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: Self) -> Self {
        self.add_signed(&o, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: Self) -> Self {
        self.add_signed(&o, false)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: Self) -> Self {
        self.mul_impl(&o)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> Self {
        LaurentPoly { low: self.low, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { low: 0, c: vec![] }
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.add_signed(o, true)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_signed(o, false)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul_impl(o)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, q) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if e == 1 {
                    write!(f, "v")?;
                } else {
                    write!(f, "v^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ring::rat;

    #[test]
    fn arithmetic_and_trim() {
        let a = LaurentPoly::v() + LaurentPoly::v_pow(-1);
        let b = LaurentPoly::v() - LaurentPoly::v_pow(-1);
        let p = a.clone() * b;
        assert_eq!(p, LaurentPoly::v_pow(2) - LaurentPoly::v_pow(-2));
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn exact_division() {
        let num = LaurentPoly::v_pow(3) - LaurentPoly::v_pow(-3);
        let den = LaurentPoly::v() - LaurentPoly::v_pow(-1);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, LaurentPoly::v_pow(2) + LaurentPoly::one() + LaurentPoly::v_pow(-2));
        assert!(LaurentPoly::one().div_exact(&den).is_none());
    }

    #[test]
    fn gcd_is_monic() {
        let a = vec![rat(-1), rat(0), rat(1)];
        let b = vec![rat(2), rat(-2)];
        assert_eq!(poly_gcd(&a, &b), vec![rat(-1), rat(1)]);
    }

    #[test]
    fn evaluation_at_root_of_unity() {
        let p = LaurentPoly::v_pow(4) - LaurentPoly::v_pow(-4);
        assert!(p.eval(8).is_zero());
        assert_eq!(LaurentPoly::v().eval(8), CycloElem::zeta(8, 1));
    }

    #[test]
    fn display() {
        let p = LaurentPoly::v_pow(2) + LaurentPoly::one() - LaurentPoly::v_pow(-2).scale(&rat(3));
        assert_eq!(p.to_string(), "v^2 + 1 - 3*v^-2");
    }
}
