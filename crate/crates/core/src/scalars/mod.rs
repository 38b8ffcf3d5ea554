//! Exact scalars: rationals, cyclotomic fields, Laurent polynomials in v and
//! their localization at a root of unity, plus quantum integers and binomials.

mod cyclo;
mod laurent;
mod local;
mod qcomb;
mod ring;

pub use cyclo::{cyclotomic_poly, totient, CycloElem};
pub use laurent::LaurentPoly;
pub use local::LocalScalar;
pub use qcomb::{qbinom, qbinom_at, qfact, qfact_at, qint, qint_at};
pub use ring::{rat, rat2, Field, Ring};

use serde::Serialize;
use thiserror::Error;

use crate::linalg::SparseMat;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{value} is not regular at a primitive {order}-th root of unity")]
    OutsideLocalization { value: String, order: u32 },
    #[error("entry ({row}, {col}) of the quotient does not lie in the localization")]
    NotInLattice { row: usize, col: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// The root of unity data: ell even, symmetrizers d_i dividing ell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QParams {
    ell: u32,
    d: Vec<u32>,
}

impl QParams {
    pub fn new(ell: u32, d: Vec<u32>) -> Result<Self, ScalarError> {
        if ell == 0 || ell % 2 != 0 {
            return Err(ScalarError::InvalidParams(format!("ell must be a positive even integer, got {}", ell)));
        }
        for &di in &d {
            if !(1..=3).contains(&di) {
                return Err(ScalarError::InvalidParams(format!("d_i must lie in {{1, 2, 3}}, got {}", di)));
            }
            if ell % di != 0 {
                return Err(ScalarError::InvalidParams(format!("d_i = {} does not divide ell = {}", di, ell)));
            }
            if ell / di < 2 {
                return Err(ScalarError::InvalidParams(format!("ell / d_i = {} is below 2", ell / di)));
            }
        }
        Ok(QParams { ell, d })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn d(&self, i: usize) -> u32 {
        self.d[i]
    }

    pub fn ds(&self) -> &[u32] {
        &self.d
    }

    pub fn ell_i(&self, i: usize) -> u32 {
        self.ell / self.d[i]
    }

    /// N = 2 ell, the order of zeta.
    pub fn order(&self) -> u32 {
        2 * self.ell
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    /// zeta^k
    pub fn zeta_pow(&self, k: i64) -> CycloElem {
        CycloElem::zeta(self.order(), k)
    }
}

/// Value of a localized scalar at v = zeta_n.
pub fn local_eval(x: &LocalScalar, n: u32) -> Result<CycloElem, ScalarError> {
    x.eval(n)
}

/// Divides every entry by s, reducing to lowest terms; every reduced entry must be
/// regular at zeta_n.
pub fn matrix_divide_exact(
    m: &SparseMat<LaurentPoly>,
    s: &LaurentPoly,
    n: u32,
) -> Result<SparseMat<LocalScalar>, ScalarError> {
    if s.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    let mut trip = Vec::with_capacity(m.nnz());
    for (i, j, x) in m.entries() {
        let q = match x.div_exact(s) {
            Some(p) => LocalScalar::from_poly(p),
            None => LocalScalar::new(x.clone(), s.clone())?,
        };
        if !q.is_regular_at(n) {
            return Err(ScalarError::NotInLattice { row: i, col: j });
        }
        trip.push((i, j, q));
    }
    Ok(SparseMat::from_triplets(m.rows(), m.cols(), trip))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(QParams::new(4, vec![1]).is_ok());
        assert!(QParams::new(5, vec![1]).is_err());
        assert!(QParams::new(4, vec![3]).is_err());
        assert!(QParams::new(2, vec![2]).is_err());
        let p = QParams::new(6, vec![1, 3]).unwrap();
        assert_eq!(p.ell_i(1), 2);
        assert_eq!(p.order(), 12);
    }

    #[test]
    fn local_eval_examples() {
        assert!(local_eval(&LocalScalar::one(), 8).unwrap().is_one());
        assert_eq!(local_eval(&LaurentPoly::v().into(), 8).unwrap(), CycloElem::zeta(8, 1));
        let x = LocalScalar::new(qint(3, 1), qint(1, 1)).unwrap();
        let expect = CycloElem::zeta(8, 2) + CycloElem::one() + CycloElem::zeta(8, -2);
        assert_eq!(local_eval(&x, 8).unwrap(), expect);
    }

    #[test]
    fn divide_exact_examples() {
        let z: SparseMat<LaurentPoly> = SparseMat::zeros(3, 3);
        assert!(matrix_divide_exact(&z, &qfact(4, 1), 8).unwrap().is_zero());
        let m = SparseMat::identity(2).scale(&qint(2, 1));
        assert_eq!(matrix_divide_exact(&m, &qint(2, 1), 8).unwrap(), SparseMat::identity(2));
        let one = SparseMat::identity(1);
        assert_eq!(matrix_divide_exact(&one, &qint(4, 1), 8), Err(ScalarError::NotInLattice { row: 0, col: 0 }));
    }
}
