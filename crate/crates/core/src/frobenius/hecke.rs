use serde::Serialize;

use crate::repcore::{intertwiners, tensor_product, Mat, WeightModule};
use crate::rootdata::SmallLattice;
use crate::scalars::{CycloElem, Ring};

use super::dualrep::{DualGroupElement, DualGroupRep};
use super::pullback::{frobenius_pullback, restrict_to_small, SmallQuantumView};
use super::FrobError;

/// The family alpha_V : Fr*(V) (x) M -> V (x) M of small-quantum-group intertwiners,
/// optionally twisted by an element of the dual group.
#[derive(Clone, Debug)]
pub struct HeckeStructure {
    base: WeightModule,
    lattice: SmallLattice,
    reps: Vec<DualGroupRep>,
    alphas: Vec<Mat>,
    hom_dims: Vec<usize>,
    twist: DualGroupElement,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeckeCheck {
    pub name: String,
    pub holds: bool,
}

/// The small-quantum-group structure on V (x) M with V carrying the trivial action.
fn underline_view(v_dim: usize, m_view: &SmallQuantumView) -> SmallQuantumView {
    let id = Mat::identity(v_dim);
    let mut classes = Vec::with_capacity(v_dim * m_view.dim());
    for _ in 0..v_dim {
        classes.extend(m_view.classes.iter().cloned());
    }
    SmallQuantumView {
        lattice: m_view.lattice,
        ke: m_view.ke.iter().map(|g| id.kron(g)).collect(),
        f: m_view.f.iter().map(|g| id.kron(g)).collect(),
        classes,
    }
}

/// Solves for alpha_V for one V: returns the canonical map and the dimension of the
/// space of intertwiners it lies in.
fn solve_alpha(m: &WeightModule, v: &DualGroupRep, lattice: SmallLattice) -> Result<(Mat, usize), FrobError> {
    let fr = frobenius_pullback(v, m.params())?;
    let src_mod = tensor_product(&fr, m)?;
    let src = restrict_to_small(&src_mod, lattice);
    let dst = underline_view(v.dim(), &restrict_to_small(m, lattice));
    let homs = intertwiners(&src.generators(), &dst.generators(), &src.classes, &dst.classes);
    let id = Mat::identity(src.dim());
    let commutes = src.generators().iter().zip(dst.generators()).all(|(a, b)| b.mul(&id) == id.mul(a));
    if commutes && src.classes == dst.classes {
        return Ok((id, homs.len()));
    }
    Err(FrobError::NoHeckeStructure(format!("no intertwiner for a representation of dimension {}", v.dim())))
}

/// Builds alpha_V for every supplied V. The lattice defaults to phi(Y) when all weights lie
/// in the coroot lattice and to phi_sc otherwise.
pub fn build_hecke_structure(
    m: &WeightModule,
    reps: &[DualGroupRep],
    lattice: Option<SmallLattice>,
) -> Result<HeckeStructure, FrobError> {
    let lattice = lattice.unwrap_or_else(|| super::pullback::lattice_for(&reps.iter().collect::<Vec<_>>()));
    let mut alphas = Vec::new();
    let mut hom_dims = Vec::new();
    for v in reps {
        let (a, h) = solve_alpha(m, v, lattice)?;
        alphas.push(a);
        hom_dims.push(h);
    }
    Ok(HeckeStructure {
        base: m.clone(),
        lattice,
        reps: reps.to_vec(),
        alphas,
        hom_dims,
        twist: DualGroupElement::identity(),
    })
}

/// Permutation A (x) B (x) C -> B (x) A (x) C on basis indices.
pub fn swap_matrix(a: usize, b: usize, c: usize) -> Mat {
    let mut trip = Vec::with_capacity(a * b * c);
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                trip.push(((j * a + i) * c + k, (i * b + j) * c + k, CycloElem::one()));
            }
        }
    }
    Mat::from_triplets(a * b * c, a * b * c, trip)
}

impl HeckeStructure {
    pub fn base(&self) -> &WeightModule {
        &self.base
    }

    pub fn lattice(&self) -> SmallLattice {
        self.lattice
    }

    pub fn reps(&self) -> &[DualGroupRep] {
        &self.reps
    }

    /// alpha for the k-th supplied representation.
    pub fn alpha(&self, k: usize) -> Mat {
        self.twisted(&self.reps[k], &self.alphas[k])
    }

    /// Dimension of the intertwiner space containing the k-th alpha.
    pub fn hom_dim(&self, k: usize) -> usize {
        self.hom_dims[k]
    }

    /// alpha for an arbitrary V, solved on demand.
    pub fn alpha_for(&self, v: &DualGroupRep) -> Result<Mat, FrobError> {
        let (a, _) = solve_alpha(&self.base, v, self.lattice)?;
        Ok(self.twisted(v, &a))
    }

    fn twisted(&self, v: &DualGroupRep, a: &Mat) -> Mat {
        if self.twist.0.is_empty() {
            return a.clone();
        }
        v.group_action(&self.twist).kron(&Mat::identity(self.base.dim())).mul(a)
    }

    /// T_gamma: every alpha_V is composed with gamma acting on V.
    pub fn twist(&self, gamma: &DualGroupElement) -> HeckeStructure {
        let mut out = self.clone();
        out.twist = gamma.then(&self.twist);
        out
    }

    pub fn check_unit(&self) -> Result<bool, FrobError> {
        let a = self.alpha_for(&DualGroupRep::trivial(self.base.datum()))?;
        Ok(a == Mat::identity(self.base.dim()))
    }

    /// The square for phi: V1 -> V2 commutes (phi must be a morphism).
    pub fn check_naturality(&self, v1: &DualGroupRep, v2: &DualGroupRep, phi: &Mat) -> Result<bool, FrobError> {
        if !v1.is_morphism_to(v2, phi) {
            return Err(FrobError::InvalidRep("supplied map is not a morphism of representations".into()));
        }
        let p = phi.kron(&Mat::identity(self.base.dim()));
        let a1 = self.alpha_for(v1)?;
        let a2 = self.alpha_for(v2)?;
        Ok(a2.mul(&p) == p.mul(&a1))
    }

    /// The two composites Fr*(V1) (x) Fr*(V2) (x) M -> V2 (x) V1 (x) M agree.
    pub fn check_tensor_compat(&self, v1: &DualGroupRep, v2: &DualGroupRep) -> Result<bool, FrobError> {
        let (a, b, m) = (v1.dim(), v2.dim(), self.base.dim());
        let params = self.base.params();
        // Fr*(V1) (x) Fr*(V2) is Fr*(V1 (x) V2) on the same basis
        let v12 = v1.tensor(v2)?;
        let lhs_src = tensor_product(&frobenius_pullback(v1, params)?, &frobenius_pullback(v2, params)?)?;
        if !lhs_src.same_matrices(&frobenius_pullback(&v12, params)?) {
            return Ok(false);
        }
        let lhs = swap_matrix(a, b, m).mul(&self.alpha_for(&v12)?);
        let step1 = Mat::identity(a).kron(&self.alpha_for(v2)?);
        let step2 = swap_matrix(a, b, m);
        let step3 = Mat::identity(b).kron(&self.alpha_for(v1)?);
        let rhs = step3.mul(&step2).mul(&step1);
        Ok(lhs == rhs)
    }

    pub fn all_invertible(&self) -> bool {
        (0..self.reps.len()).all(|k| {
            let a = self.alpha(k);
            a.rows() == a.cols() && a.rank() == a.rows()
        })
    }

    /// Unit, naturality over the supplied morphisms, tensor compatibility over all pairs of
    /// supplied representations, invertibility.
    pub fn check_axioms(&self, morphisms: &[(usize, usize, Mat)]) -> Result<Vec<HeckeCheck>, FrobError> {
        let mut out = vec![HeckeCheck { name: "unit".into(), holds: self.check_unit()? }];
        for (k, (s, t, phi)) in morphisms.iter().enumerate() {
            let holds = self.check_naturality(&self.reps[*s], &self.reps[*t], phi)?;
            out.push(HeckeCheck { name: format!("naturality #{}", k), holds });
        }
        for i in 0..self.reps.len() {
            for j in 0..self.reps.len() {
                let holds = self.check_tensor_compat(&self.reps[i], &self.reps[j])?;
                out.push(HeckeCheck { name: format!("tensor compatibility ({}, {})", i, j), holds });
            }
        }
        out.push(HeckeCheck { name: "invertible".into(), holds: self.all_invertible() });
        Ok(out)
    }
}
