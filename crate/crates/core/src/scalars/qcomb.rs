use std::cell::RefCell;
use std::collections::HashMap;

use num::BigRational;

use super::cyclo::CycloElem;
use super::laurent::LaurentPoly;
use super::ring::Ring;

/// Quantum integer (v^{dm} - v^{-dm}) / (v^d - v^{-d}).
pub fn qint(m: i64, d: u32) -> LaurentPoly {
    assert!(d > 0, "d must be positive");
    if m == 0 {
        return LaurentPoly::zero();
    }
    let a = m.abs();
    let d = d as i64;
    let p = LaurentPoly::from_terms((0..a).map(|j| (d * (a - 1 - 2 * j), BigRational::from_integer(1.into()))));
    if m < 0 {
        -p
    } else {
        p
    }
}

/// Quantum factorial [1]_d [2]_d ... [m]_d.
pub fn qfact(m: i64, d: u32) -> LaurentPoly {
    assert!(m >= 0, "qfact needs a nonnegative argument, got {}", m);
    (1..=m).fold(LaurentPoly::one(), |acc, s| acc.mul_ref(&qint(s, d)))
}

/// Quantum binomial: product over s = 1..t of [m - s + 1]_d / [s]_d.
pub fn qbinom(m: i64, t: i64, d: u32) -> LaurentPoly {
    assert!(t >= 0, "qbinom needs t >= 0, got {}", t);
    let num = (1..=t).fold(LaurentPoly::one(), |acc, s| acc.mul_ref(&qint(m - s + 1, d)));
    num.div_exact(&qfact(t, d)).expect("quantum binomials are Laurent polynomials")
}

thread_local! {
    static QBINOM_AT: RefCell<HashMap<(i64, i64, u32, u32), CycloElem>> = RefCell::new(HashMap::new());
}

/// qbinom(m, t, d) evaluated at zeta_n, cached.
pub fn qbinom_at(m: i64, t: i64, d: u32, n: u32) -> CycloElem {
    let key = (m, t, d, n);
    if let Some(x) = QBINOM_AT.with(|c| c.borrow().get(&key).cloned()) {
        return x;
    }
    let x = qbinom(m, t, d).eval(n);
    QBINOM_AT.with(|c| c.borrow_mut().insert(key, x.clone()));
    x
}

/// [m]_d at zeta_n.
pub fn qint_at(m: i64, d: u32, n: u32) -> CycloElem {
    qbinom_at(m, 1, d, n)
}

/// [m]_d! at zeta_n.
pub fn qfact_at(m: i64, d: u32, n: u32) -> CycloElem {
    (1..=m).fold(CycloElem::one(), |acc, s| acc * qint_at(s, d, n))
}
