use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::repcore::Mat;
use crate::rootdata::{CartanType, RootDatum};
use crate::scalars::CycloElem;

use super::FrobError;

/// Finite-dimensional representation of the dual Lie algebra.
///
/// Weights are in fundamental-coweight coordinates; h_i acts on weight mu by mu_i.
/// e_i raises the weight by alpha_i^vee, which in these coordinates is row i of the
/// Cartan matrix.
#[derive(Clone, Debug)]
pub struct DualGroupRep {
    datum: RootDatum,
    weights: Vec<Vec<i64>>,
    e: Vec<Mat>,
    f: Vec<Mat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chevalley {
    E,
    F,
}

/// A product exp(c_1 x_1) exp(c_2 x_2) ... in the dual group, x_k = e_i or f_i.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DualGroupElement(pub Vec<(usize, Chevalley, BigRational)>);

impl DualGroupElement {
    pub fn identity() -> Self {
        DualGroupElement(vec![])
    }

    pub fn exp(i: usize, x: Chevalley, c: BigRational) -> Self {
        DualGroupElement(vec![(i, x, c)])
    }

    /// Group product self * other.
    pub fn then(&self, other: &DualGroupElement) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        DualGroupElement(v)
    }
}

impl DualGroupRep {
    pub fn new(datum: &RootDatum, weights: Vec<Vec<i64>>, e: Vec<Mat>, f: Vec<Mat>) -> Result<Self, FrobError> {
        let rep = DualGroupRep { datum: datum.clone(), weights, e, f };
        rep.validate()?;
        Ok(rep)
    }

    pub fn trivial(datum: &RootDatum) -> Self {
        let r = datum.rank();
        DualGroupRep {
            datum: datum.clone(),
            weights: vec![vec![0; r]],
            e: vec![Mat::zeros(1, 1); r],
            f: vec![Mat::zeros(1, 1); r],
        }
    }

    /// The irreducible representation of highest weight n of the dual sl2:
    /// f u_j = (j+1) u_{j+1}, e u_j = (n-j+1) u_{j-1}.
    pub fn sl2_irrep(datum: &RootDatum, n: u32) -> Result<Self, FrobError> {
        if datum.cartan_type() != CartanType::A1 {
            return Err(FrobError::Unsupported("sl2 irreps need type A1".into()));
        }
        let dim = n as usize + 1;
        let mut e = Vec::new();
        let mut f = Vec::new();
        for j in 0..dim {
            if j + 1 < dim {
                f.push((j + 1, j, CycloElem::from_int(j as i64 + 1)));
            }
            if j >= 1 {
                e.push((j - 1, j, CycloElem::from_int(n as i64 - j as i64 + 1)));
            }
        }
        let weights = (0..dim).map(|j| vec![n as i64 - 2 * j as i64]).collect();
        DualGroupRep::new(datum, weights, vec![Mat::from_triplets(dim, dim, e)], vec![Mat::from_triplets(dim, dim, f)])
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn e(&self, i: usize) -> &Mat {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &Mat {
        &self.f[i]
    }

    pub fn h(&self, i: usize) -> Mat {
        Mat::diag(self.weights.iter().map(|w| CycloElem::from_int(w[i])).collect())
    }

    /// Checks grading, [e_i, f_j] = delta_ij h_i, the dual Serre relations and nilpotency.
    pub fn validate(&self) -> Result<(), FrobError> {
        let r = self.datum.rank();
        let n = self.dim();
        if self.e.len() != r || self.f.len() != r {
            return Err(FrobError::InvalidRep(format!("expected {} operators of each kind", r)));
        }
        if self.weights.iter().any(|w| w.len() != r) {
            return Err(FrobError::InvalidRep("weight of the wrong rank".into()));
        }
        for i in 0..r {
            for m in [&self.e[i], &self.f[i]] {
                if m.rows() != n || m.cols() != n {
                    return Err(FrobError::InvalidRep("operator of the wrong shape".into()));
                }
            }
            let shift = self.datum.simple_coroot_as_coweight(i);
            for (sign, m, name) in [(1i64, &self.e[i], "e"), (-1, &self.f[i], "f")] {
                for (row, col, _) in m.entries() {
                    let ok = (0..r).all(|k| self.weights[row][k] == self.weights[col][k] + sign * shift[k]);
                    if !ok {
                        return Err(FrobError::InvalidRep(format!("{}_{} does not shift weights by the coroot", name, i)));
                    }
                }
            }
            if !self.e[i].pow(n as u32 + 1).is_zero() || !self.f[i].pow(n as u32 + 1).is_zero() {
                return Err(FrobError::InvalidRep(format!("e_{0} or f_{0} is not nilpotent", i)));
            }
        }
        for i in 0..r {
            for j in 0..r {
                let c = self.e[i].mul(&self.f[j]).sub(&self.f[j].mul(&self.e[i]));
                let expect = if i == j { self.h(i) } else { Mat::zeros(n, n) };
                if c != expect {
                    return Err(FrobError::InvalidRep(format!("[e_{}, f_{}] is wrong", i, j)));
                }
                if i != j {
                    // dual Cartan entry <alpha_j, alpha_i^vee> of the dual root system is a_ji
                    let top = 1 - self.datum.a(j, i);
                    for (x, y, name) in [(&self.e[i], &self.e[j], "e"), (&self.f[i], &self.f[j], "f")] {
                        let mut acc = y.clone();
                        for _ in 0..top {
                            acc = x.mul(&acc).sub(&acc.mul(x));
                        }
                        if !acc.is_zero() {
                            return Err(FrobError::InvalidRep(format!("Serre relation for {}_{}, {}_{}", name, i, name, j)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, o: &DualGroupRep) -> Result<DualGroupRep, FrobError> {
        self.same_datum(o)?;
        let mut weights = self.weights.clone();
        weights.extend(o.weights.iter().cloned());
        let e = self.e.iter().zip(&o.e).map(|(a, b)| a.direct_sum(b)).collect();
        let f = self.f.iter().zip(&o.f).map(|(a, b)| a.direct_sum(b)).collect();
        DualGroupRep::new(&self.datum, weights, e, f)
    }

    /// V (x) W with basis order (a, b) -> a * dim W + b.
    pub fn tensor(&self, o: &DualGroupRep) -> Result<DualGroupRep, FrobError> {
        self.same_datum(o)?;
        let mut weights = Vec::new();
        for a in &self.weights {
            for b in &o.weights {
                weights.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        let (ia, ib) = (Mat::identity(self.dim()), Mat::identity(o.dim()));
        let e = self.e.iter().zip(&o.e).map(|(a, b)| a.kron(&ib).add(&ia.kron(b))).collect();
        let f = self.f.iter().zip(&o.f).map(|(a, b)| a.kron(&ib).add(&ia.kron(b))).collect();
        DualGroupRep::new(&self.datum, weights, e, f)
    }

    fn same_datum(&self, o: &DualGroupRep) -> Result<(), FrobError> {
        if self.datum != o.datum {
            return Err(FrobError::Unsupported("representations over different root data".into()));
        }
        Ok(())
    }

    /// Whether every weight lies in the coroot lattice Y.
    pub fn weights_in_coroot_lattice(&self) -> bool {
        let r = self.datum.rank();
        self.weights.iter().all(|w| {
            // w = sum_j y_j alpha_j^vee, i.e. A^T y = w
            let a = self.datum.cartan();
            match r {
                1 => w[0] % a[0][0] == 0,
                _ => {
                    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
                    // inverse of A^T times w
                    let y0 = a[1][1] * w[0] - a[1][0] * w[1];
                    let y1 = -a[0][1] * w[0] + a[0][0] * w[1];
                    y0 % det == 0 && y1 % det == 0
                }
            }
        })
    }

    /// Matrix of a dual group element acting on this representation.
    pub fn group_action(&self, g: &DualGroupElement) -> Mat {
        let n = self.dim();
        let mut acc = Mat::identity(n);
        for (i, x, c) in &g.0 {
            let base = match x {
                Chevalley::E => &self.e[*i],
                Chevalley::F => &self.f[*i],
            };
            let c = CycloElem::from_rational(c.clone());
            let mut term = Mat::identity(n);
            let mut exp = Mat::identity(n);
            for k in 1..=n {
                let s = c.clone() * CycloElem::from_rational(BigRational::new(1.into(), (k as i64).into()));
                term = term.mul(base).scale(&s);
                if term.is_zero() {
                    break;
                }
                exp = exp.add(&term);
            }
            acc = acc.mul(&exp);
        }
        acc
    }

    /// Whether phi: self -> o intertwines e_i and f_i.
    pub fn is_morphism_to(&self, o: &DualGroupRep, phi: &Mat) -> bool {
        phi.rows() == o.dim()
            && phi.cols() == self.dim()
            && (0..self.datum.rank()).all(|i| {
                o.e[i].mul(phi) == phi.mul(&self.e[i]) && o.f[i].mul(phi) == phi.mul(&self.f[i])
            })
            && phi.entries().all(|(r, c, _)| o.weights[r] == self.weights[c])
    }

    /// Same data on all operators and weights.
    pub fn same_as(&self, o: &DualGroupRep) -> bool {
        self.weights == o.weights && self.e == o.e && self.f == o.f
    }

    pub(crate) fn from_parts_unchecked(datum: &RootDatum, weights: Vec<Vec<i64>>, e: Vec<Mat>, f: Vec<Mat>) -> Self {
        DualGroupRep { datum: datum.clone(), weights, e, f }
    }
}

impl PartialEq for DualGroupRep {
    fn eq(&self, o: &Self) -> bool {
        self.datum == o.datum && self.same_as(o)
    }
}
