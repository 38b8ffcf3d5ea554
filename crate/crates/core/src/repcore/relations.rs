use serde::Serialize;

use crate::scalars::{local_eval, matrix_divide_exact, qbinom_at, qfact, qint, LaurentPoly, Ring};

use super::module::{GenMat, Generator, Mat, WeightModule};
use super::RepError;

/// Outcome of one relation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationResult {
    pub name: String,
    pub holds: bool,
    /// number of nonzero entries in the residual matrix
    pub residual_nnz: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RelationReport {
    pub results: Vec<RelationResult>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.results.iter().filter(|r| !r.holds).map(|r| r.name.as_str()).collect()
    }

    fn push(&mut self, name: String, residual: &Mat) {
        self.results.push(RelationResult { name, holds: residual.is_zero(), residual_nnz: residual.nnz() });
    }

    fn push_flag(&mut self, name: String, holds: bool) {
        self.results.push(RelationResult { name, holds, residual_nnz: usize::from(!holds) });
    }
}

fn comm(a: &Mat, b: &Mat) -> Mat {
    a.mul(b).sub(&b.mul(a))
}

/// Basis pairs (row, col) of nonzero entries violating the grading shift.
fn grading_violations(m: &WeightModule, g: Generator, i: usize) -> usize {
    let li = m.params().ell_i(i) as i64;
    let alpha = m.datum().simple_root(i);
    let shift = match g {
        Generator::E => alpha,
        Generator::F => alpha.scaled(-1),
        Generator::DivE => alpha.scaled(li),
        Generator::DivF => alpha.scaled(-li),
    };
    m.gen(g, i)
        .entries()
        .filter(|(r, c, _)| m.weights()[*r] != m.weights()[*c].add(&shift))
        .count()
}

/// Residual of [E_i^(l), F_i^(l)] = sum_{k < l} F_i^(k) [K_i; -2k, l-k] E_i^(k).
pub fn commutator_identity_residual(m: &WeightModule, i: usize) -> Mat {
    let li = m.params().ell_i(i);
    let lhs = comm(m.div_e(i), m.div_f(i));
    let mut rhs = Mat::zeros(m.dim(), m.dim());
    for k in 0..li {
        let term = m
            .divided_f(i, k)
            .mul(&m.kbin_mat(i, -2 * k as i64, (li - k) as i64))
            .mul(&m.divided_e(i, k));
        rhs = rhs.add(&term);
    }
    lhs.sub(&rhs)
}

/// Residual of the same identity with the displayed E-first ordering,
/// sum_{k < l} E_i^(k) [K_i; 2k, l-k] F_i^(k).
pub fn commutator_identity_residual_e_first(m: &WeightModule, i: usize) -> Mat {
    let li = m.params().ell_i(i);
    let lhs = comm(m.div_e(i), m.div_f(i));
    let mut rhs = Mat::zeros(m.dim(), m.dim());
    for k in 0..li {
        let term = m
            .divided_e(i, k)
            .mul(&m.kbin_mat(i, 2 * k as i64, (li - k) as i64))
            .mul(&m.divided_f(i, k));
        rhs = rhs.add(&term);
    }
    lhs.sub(&rhs)
}

/// Generic-v form: [E^l, F^l] = sum_k ([l]!/[k]!)^2 F^k [K; -2k, l-k] E^k over Q[v, v^-1].
pub fn generic_commutator_residual(m: &WeightModule, i: usize) -> Option<GenMat> {
    let gen = m.generic()?;
    let (e, f) = (&gen[i].e, &gen[i].f);
    let li = m.params().ell_i(i) as i64;
    let d = m.params().d(i);
    let lhs = e.pow(li as u32).mul(&f.pow(li as u32)).sub(&f.pow(li as u32).mul(&e.pow(li as u32)));
    let fl = qfact(li, d);
    let mut rhs = GenMat::zeros(m.dim(), m.dim());
    for k in 0..li {
        let c = fl.div_exact(&qfact(k, d)).expect("[l]!/[k]! is a polynomial");
        let kb: Vec<LaurentPoly> = (0..m.dim()).map(|b| crate::scalars::qbinom(m.pairing(i, b) - 2 * k, li - k, d)).collect();
        let term = f.pow(k as u32).right_diag(&kb).mul(&e.pow(k as u32)).scale(&c.mul_ref(&c));
        rhs = rhs.add(&term);
    }
    Some(lhs.sub(&rhs))
}

/// Checks every defining relation as an exact matrix identity at zeta.
pub fn relation_check(m: &WeightModule) -> RelationReport {
    let mut rep = RelationReport::default();
    let r = m.rank();
    let n = m.dim();
    let order = m.params().order();
    for i in 0..r {
        for g in Generator::ALL {
            rep.push_flag(format!("grading {}", g.label(i)), grading_violations(m, g, i) == 0);
        }
    }
    for i in 0..r {
        for j in 0..r {
            let mut res = comm(m.e(i), m.f(j));
            if i == j {
                res = res.sub(&m.kbin_mat(i, 0, 1));
            }
            rep.push(format!("[E_{},F_{}]", i, j), &res);
        }
    }
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let top = 1 - m.datum().a(i, j);
            let d = m.params().d(i);
            for (name, x, y) in [("E", m.e(i), m.e(j)), ("F", m.f(i), m.f(j))] {
                let mut res = Mat::zeros(n, n);
                for s in 0..=top {
                    let rr = top - s;
                    let mut c = qbinom_at(top, s, d, order);
                    if s % 2 == 1 {
                        c = -c;
                    }
                    let term = x.pow(rr as u32).mul(y).mul(&x.pow(s as u32)).scale(&c);
                    res = res.add(&term);
                }
                rep.push(format!("Serre {}_{} {}_{}", name, i, name, j), &res);
            }
        }
    }
    for i in 0..r {
        let li = m.params().ell_i(i);
        rep.push(format!("E_{}^l = 0", i), &m.e(i).pow(li));
        rep.push(format!("F_{}^l = 0", i), &m.f(i).pow(li));
        rep.push(format!("[E_{},E_{}^(l)]", i, i), &comm(m.e(i), m.div_e(i)));
        rep.push(format!("[F_{},F_{}^(l)]", i, i), &comm(m.f(i), m.div_f(i)));
        let kb = m.kbin_mat(i, 1 - li as i64, 1);
        let res = comm(m.e(i), m.div_f(i)).sub(&m.divided_f(i, li - 1).mul(&kb));
        rep.push(format!("[E_{},F_{}^(l)]", i, i), &res);
        let res = comm(m.div_e(i), m.f(i)).sub(&kb.mul(&m.divided_e(i, li - 1)));
        rep.push(format!("[E_{}^(l),F_{}]", i, i), &res);
        rep.push(format!("[E_{}^(l),F_{}^(l)]", i, i), &commutator_identity_residual(m, i));
    }
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            rep.push(format!("[E_{}^(l),F_{}]", i, j), &comm(m.div_e(i), m.f(j)));
            rep.push(format!("[E_{},F_{}^(l)]", i, j), &comm(m.e(i), m.div_f(j)));
            rep.push(format!("[E_{}^(l),F_{}^(l)]", i, j), &comm(m.div_e(i), m.div_f(j)));
        }
    }
    if m.generic().is_some() {
        for (i, res) in generic_checks(m).into_iter().enumerate() {
            let (spec, div_e, div_f, ef) = res;
            rep.push_flag(format!("generic E_{0},F_{0} specialize", i), spec);
            rep.push_flag(format!("E_{0}^(l) = E_{0}^l/[l]!", i), div_e);
            rep.push_flag(format!("F_{0}^(l) = F_{0}^l/[l]!", i), div_f);
            rep.push_flag(format!("generic [E_{0},F_{0}]", i), ef);
        }
    }
    rep
}

fn generic_checks(m: &WeightModule) -> Vec<(bool, bool, bool, bool)> {
    let gen = m.generic().expect("generic matrices present");
    let order = m.params().order();
    let mut out = Vec::new();
    for (i, g) in gen.iter().enumerate() {
        let spec = g.e.map(|x| x.eval(order)) == *m.e(i) && g.f.map(|x| x.eval(order)) == *m.f(i);
        let li = m.params().ell_i(i);
        let fl = qfact(li as i64, m.params().d(i));
        let check = |x: &GenMat, target: &Mat| match generic_divided_power(x, li, &fl, order) {
            Ok(d) => d == *target,
            Err(_) => false,
        };
        let div_e = check(&g.e, m.div_e(i));
        let div_f = check(&g.f, m.div_f(i));
        let d = m.params().d(i);
        let diag: Vec<LaurentPoly> = (0..m.dim()).map(|k| qint(m.pairing(i, k), d)).collect();
        let ef = g.e.mul(&g.f).sub(&g.f.mul(&g.e)).sub(&GenMat::diag(diag)).is_zero();
        out.push((spec, div_e, div_f, ef));
    }
    out
}

/// x^l / [l]! computed in the localization, then specialized.
pub fn generic_divided_power(x: &GenMat, l: u32, fact: &LaurentPoly, order: u32) -> Result<Mat, RepError> {
    let q = matrix_divide_exact(&x.pow(l), fact, order)?;
    Ok(q.try_map(|s| local_eval(s, order))?)
}

/// Specialize a generic matrix at zeta_n.
pub fn specialize(x: &GenMat, order: u32) -> Mat {
    x.map(|p| p.eval(order))
}
