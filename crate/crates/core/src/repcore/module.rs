use crate::linalg::SparseMat;
use crate::rootdata::{RootDatum, Weight};
use crate::scalars::{qbinom_at, qfact_at, CycloElem, Field, LaurentPoly, QParams};

use super::RepError;

/// Matrix over Q(zeta).
pub type Mat = SparseMat<CycloElem>;
/// Matrix over Q[v, v^-1], before specialization.
pub type GenMat = SparseMat<LaurentPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E,
    F,
    DivE,
    DivF,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::E, Generator::F, Generator::DivE, Generator::DivF];

    pub fn label(self, i: usize) -> String {
        match self {
            Generator::E => format!("E_{}", i),
            Generator::F => format!("F_{}", i),
            Generator::DivE => format!("E_{}^(l)", i),
            Generator::DivF => format!("F_{}^(l)", i),
        }
    }
}

/// Action of the generators attached to one vertex, specialized at zeta.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexAction {
    pub e: Mat,
    pub f: Mat,
    pub div_e: Mat,
    pub div_f: Mat,
}

impl VertexAction {
    pub fn zeros(n: usize) -> Self {
        VertexAction { e: Mat::zeros(n, n), f: Mat::zeros(n, n), div_e: Mat::zeros(n, n), div_f: Mat::zeros(n, n) }
    }

    pub fn get(&self, g: Generator) -> &Mat {
        match g {
            Generator::E => &self.e,
            Generator::F => &self.f,
            Generator::DivE => &self.div_e,
            Generator::DivF => &self.div_f,
        }
    }

    pub fn get_mut(&mut self, g: Generator) -> &mut Mat {
        match g {
            Generator::E => &mut self.e,
            Generator::F => &mut self.f,
            Generator::DivE => &mut self.div_e,
            Generator::DivF => &mut self.div_f,
        }
    }
}

/// E_i and F_i at generic v.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericAction {
    pub e: GenMat,
    pub f: GenMat,
}

/// A finite-dimensional X-graded module with explicit generator matrices.
///
/// Basis vectors are weight vectors. K_t and the K-binomials act through the grading.
#[derive(Clone, Debug)]
pub struct WeightModule {
    datum: RootDatum,
    params: QParams,
    weights: Vec<Weight>,
    act: Vec<VertexAction>,
    generic: Option<Vec<GenericAction>>,
}

impl WeightModule {
    pub fn new(
        datum: RootDatum,
        params: QParams,
        weights: Vec<Weight>,
        act: Vec<VertexAction>,
        generic: Option<Vec<GenericAction>>,
    ) -> Result<Self, RepError> {
        let n = weights.len();
        let r = datum.rank();
        if params.rank() != r {
            return Err(RepError::Shape(format!("params of rank {} for a root datum of rank {}", params.rank(), r)));
        }
        if params.ds() != datum.d() {
            return Err(RepError::Shape("symmetrizers of params and root datum differ".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.rank() != r) {
            return Err(RepError::Shape(format!("weight {} has the wrong rank", w)));
        }
        if act.len() != r {
            return Err(RepError::Shape(format!("{} vertex actions for rank {}", act.len(), r)));
        }
        for va in &act {
            for g in Generator::ALL {
                let m = va.get(g);
                if m.rows() != n || m.cols() != n {
                    return Err(RepError::Shape(format!("{:?} matrix is {}x{}, expected {}x{}", g, m.rows(), m.cols(), n, n)));
                }
            }
        }
        if let Some(gen) = &generic {
            if gen.len() != r || gen.iter().any(|g| g.e.rows() != n || g.e.cols() != n || g.f.rows() != n || g.f.cols() != n) {
                return Err(RepError::Shape("generic matrices have the wrong shape".into()));
            }
        }
        Ok(WeightModule { datum, params, weights, act, generic })
    }

    /// The one-dimensional module of weight 0.
    pub fn trivial(datum: &RootDatum, params: &QParams) -> Self {
        let r = datum.rank();
        let generic = (0..r).map(|_| GenericAction { e: GenMat::zeros(1, 1), f: GenMat::zeros(1, 1) }).collect();
        WeightModule {
            datum: datum.clone(),
            params: params.clone(),
            weights: vec![Weight::zero(r)],
            act: vec![VertexAction::zeros(1); r],
            generic: Some(generic),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn params(&self) -> &QParams {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn action(&self, i: usize) -> &VertexAction {
        &self.act[i]
    }

    pub fn gen(&self, g: Generator, i: usize) -> &Mat {
        self.act[i].get(g)
    }

    pub fn e(&self, i: usize) -> &Mat {
        &self.act[i].e
    }

    pub fn f(&self, i: usize) -> &Mat {
        &self.act[i].f
    }

    pub fn div_e(&self, i: usize) -> &Mat {
        &self.act[i].div_e
    }

    pub fn div_f(&self, i: usize) -> &Mat {
        &self.act[i].div_f
    }

    pub fn generic(&self) -> Option<&[GenericAction]> {
        self.generic.as_deref()
    }

    /// All generator matrices, vertex by vertex.
    pub fn all_generators(&self) -> Vec<&Mat> {
        self.act.iter().flat_map(|a| Generator::ALL.iter().map(move |&g| a.get(g))).collect()
    }

    /// Copy with one entry of one generator replaced (for negative controls).
    pub fn with_entry(&self, g: Generator, i: usize, row: usize, col: usize, value: CycloElem) -> Self {
        let mut out = self.clone();
        out.act[i].get_mut(g).set(row, col, value);
        out.generic = None;
        out
    }

    pub fn without_generic(&self) -> Self {
        let mut out = self.clone();
        out.generic = None;
        out
    }

    /// <alpha_i^vee, weight of basis vector k>
    pub fn pairing(&self, i: usize, k: usize) -> i64 {
        self.weights[k].0[i]
    }

    /// Diagonal of K_i^p at zeta: zeta^{p d_i <alpha_i^vee, lambda>}.
    pub fn k_diag(&self, i: usize, p: i64) -> Vec<CycloElem> {
        let d = self.params.d(i) as i64;
        (0..self.dim()).map(|k| self.params.zeta_pow(p * d * self.pairing(i, k))).collect()
    }

    /// Diagonal of K_i^p at generic v.
    pub fn k_diag_generic(&self, i: usize, p: i64) -> Vec<LaurentPoly> {
        let d = self.params.d(i) as i64;
        (0..self.dim()).map(|k| LaurentPoly::v_pow(p * d * self.pairing(i, k))).collect()
    }

    /// Diagonal of the K-binomial [K_i; m, t] at zeta.
    pub fn kbin_diag(&self, i: usize, m: i64, t: i64) -> Vec<CycloElem> {
        let d = self.params.d(i);
        let n = self.params.order();
        (0..self.dim()).map(|k| qbinom_at(self.pairing(i, k) + m, t, d, n)).collect()
    }

    pub fn kbin_mat(&self, i: usize, m: i64, t: i64) -> Mat {
        Mat::diag(self.kbin_diag(i, m, t))
    }

    /// E_i^(a) at zeta for 0 <= a <= ell_i; below ell_i this is E_i^a / [a]!.
    pub fn divided_e(&self, i: usize, a: u32) -> Mat {
        self.divided(i, a, Generator::E)
    }

    pub fn divided_f(&self, i: usize, a: u32) -> Mat {
        self.divided(i, a, Generator::F)
    }

    fn divided(&self, i: usize, a: u32, g: Generator) -> Mat {
        let li = self.params.ell_i(i);
        assert!(a <= li, "divided power {} above ell_i = {}", a, li);
        if a == li {
            return match g {
                Generator::E => self.div_e(i).clone(),
                _ => self.div_f(i).clone(),
            };
        }
        let base = if g == Generator::E { self.e(i) } else { self.f(i) };
        let c = qfact_at(a as i64, self.params.d(i), self.params.order())
            .inv()
            .expect("[a]! is nonzero at zeta below ell_i");
        base.pow(a).scale(&c)
    }

    /// Block-diagonal sum; the basis of `self` comes first.
    pub fn direct_sum(&self, o: &WeightModule) -> Result<WeightModule, RepError> {
        self.same_setting(o)?;
        let mut weights = self.weights.clone();
        weights.extend(o.weights.iter().cloned());
        let act = self
            .act
            .iter()
            .zip(&o.act)
            .map(|(a, b)| VertexAction {
                e: a.e.direct_sum(&b.e),
                f: a.f.direct_sum(&b.f),
                div_e: a.div_e.direct_sum(&b.div_e),
                div_f: a.div_f.direct_sum(&b.div_f),
            })
            .collect();
        let generic = match (&self.generic, &o.generic) {
            (Some(x), Some(y)) => Some(
                x.iter()
                    .zip(y)
                    .map(|(a, b)| GenericAction { e: a.e.direct_sum(&b.e), f: a.f.direct_sum(&b.f) })
                    .collect(),
            ),
            _ => None,
        };
        WeightModule::new(self.datum.clone(), self.params.clone(), weights, act, generic)
    }

    pub(crate) fn same_setting(&self, o: &WeightModule) -> Result<(), RepError> {
        if self.datum != o.datum || self.params != o.params {
            return Err(RepError::Shape("modules over different root data or parameters".into()));
        }
        Ok(())
    }

    /// Dimension of each weight space, sorted by weight.
    pub fn character(&self) -> std::collections::BTreeMap<Weight, usize> {
        let mut out = std::collections::BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Whether all generator matrices (specialized) coincide with those of `o`.
    pub fn same_matrices(&self, o: &WeightModule) -> bool {
        self.weights == o.weights && self.act == o.act
    }
}
