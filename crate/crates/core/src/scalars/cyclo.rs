use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::ring::{Field, Ring};

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u32, Rc<Vec<BigInt>>>> = RefCell::new(HashMap::new());
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Rc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_poly(d);
            p = div_monic_int(&p, &q);
        }
    }
    let p = Rc::new(p);
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

fn div_monic_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (db..a.len()).rev() {
        let c = r[k].clone();
        if c.is_zero() {
            continue;
        }
        q[k - db] = c.clone();
        for j in 0..=db {
            r[k - db + j] -= &c * &b[j];
        }
    }
    debug_assert!(r.iter().all(|x| x.is_zero()));
    q
}

pub fn totient(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Element of Q(zeta_order) in the power basis 1, z, ..., z^(phi-1).
#[derive(Clone)]
pub struct CycloElem {
    order: u32,
    coeffs: Vec<BigRational>,
}

fn reduce(mut p: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if p.len() > deg {
        for k in (deg..p.len()).rev() {
            let c = std::mem::replace(&mut p[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..deg {
                if !phi[j].is_zero() {
                    let t = &c * BigRational::from_integer(phi[j].clone());
                    p[k - deg + j] -= t;
                }
            }
        }
    }
    p.resize(deg, BigRational::zero());
    p
}

impl CycloElem {
    pub fn from_rational(q: BigRational) -> Self {
        CycloElem { order: 1, coeffs: vec![q] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// zeta_n^k
    pub fn zeta(n: u32, k: i64) -> Self {
        Self::from_powers(n, std::iter::once((k, BigRational::one())))
    }

    /// Sum of c * zeta_n^k over the given pairs.
    pub fn from_powers<I: IntoIterator<Item = (i64, BigRational)>>(n: u32, terms: I) -> Self {
        let mut p = vec![BigRational::zero(); n as usize];
        for (k, c) in terms {
            let idx = k.rem_euclid(n as i64) as usize;
            p[idx] += c;
        }
        CycloElem { order: n, coeffs: reduce(p, n) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-express in Q(zeta_n); n must be a multiple of the current order.
    pub fn lift(&self, n: u32) -> Self {
        if n == self.order {
            return self.clone();
        }
        assert!(n % self.order == 0, "cannot lift order {} to {}", self.order, n);
        let step = (n / self.order) as i64;
        Self::from_powers(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64 * step, c.clone())),
        )
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<i64> {
        let q = self.to_rational()?;
        if q.is_integer() {
            use num::ToPrimitive;
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let n = self.order.lcm(&other.order);
        (self.lift(n), other.lift(n))
    }

    fn scale(&self, q: &BigRational) -> Self {
        CycloElem { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.order == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.order == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let (a, b) = self.common(other);
        let mut p = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        CycloElem { order: a.order, coeffs: reduce(p, a.order) }
    }

    fn add_impl(&self, other: &Self, sign: bool) -> Self {
        let (a, b) = self.common(other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| if sign { x + y } else { x - y })
            .collect();
        CycloElem { order: a.order, coeffs }
    }

    fn inv_impl(&self) -> Option<Self> {
        if self.order == 1 || self.to_rational().is_some() {
            let q = self.coeffs[0].clone();
            return if q.is_zero() { None } else { Some(Self::from_rational(q.recip())) };
        }
        let n = self.order;
        let phi = self.coeffs.len();
        // columns: self * z^j
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul_impl(&CycloElem::zeta(n, j as i64));
            for i in 0..phi {
                m[i][j] = col.coeffs[i].clone();
            }
        }
        m[0][phi] = BigRational::one();
        let sol = solve_dense_rational(m, phi)?;
        Some(CycloElem { order: n, coeffs: sol })
    }
}

/// Solves an augmented square system (last column is the right-hand side).
fn solve_dense_rational(mut m: Vec<Vec<BigRational>>, n: usize) -> Option<Vec<BigRational>> {
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloElem {}

impl Add for CycloElem {
    type Output = CycloElem;
    fn add(self, o: CycloElem) -> CycloElem {
        self.add_impl(&o, true)
    }
}

impl Sub for CycloElem {
    type Output = CycloElem;
    fn sub(self, o: CycloElem) -> CycloElem {
        self.add_impl(&o, false)
    }
}

impl Mul for CycloElem {
    type Output = CycloElem;
    fn mul(self, o: CycloElem) -> CycloElem {
        self.mul_impl(&o)
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Ring for CycloElem {
    fn zero() -> Self {
        CycloElem::from_int(0)
    }
    fn one() -> Self {
        CycloElem::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn from_i64(n: i64) -> Self {
        CycloElem::from_int(n)
    }
}

impl Field for CycloElem {
    fn inv(&self) -> Option<Self> {
        self.inv_impl()
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    write!(f, "z{}", self.order)?;
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for CycloElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ring::rat;

    #[test]
    fn cyclotomic_polys() {
        let p8: Vec<i64> = cyclotomic_poly(8).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(p8, vec![1, 0, 0, 0, 1]);
        let p12: Vec<i64> = cyclotomic_poly(12).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(p12, vec![1, 0, -1, 0, 1]);
        let p3: Vec<i64> = cyclotomic_poly(3).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(p3, vec![1, 1, 1]);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(1), 1);
    }

    #[test]
    fn root_of_unity_identities() {
        for n in [2u32, 3, 4, 6, 8, 12] {
            assert!(CycloElem::zeta(n, n as i64).is_one());
            if n % 2 == 0 {
                assert_eq!(CycloElem::zeta(n, n as i64 / 2), CycloElem::from_int(-1));
            }
            let z = CycloElem::zeta(n, 1);
            assert!((z.clone() * z.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn mixed_orders_compare_semantically() {
        let i4 = CycloElem::zeta(4, 1);
        let i8 = CycloElem::zeta(8, 2);
        assert_eq!(i4, i8);
        assert_eq!(i4.clone() * i4, CycloElem::from_int(-1));
        assert_eq!(CycloElem::zeta(2, 1), CycloElem::from_rational(rat(-1)));
    }

    #[test]
    fn display_is_readable() {
        let x = CycloElem::from_int(2) + CycloElem::zeta(8, 1) - CycloElem::zeta(8, 3);
        assert_eq!(x.to_string(), "2 + z8 - z8^3");
        assert_eq!(CycloElem::zero().to_string(), "0");
    }
}
