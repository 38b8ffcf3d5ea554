use crate::frobenius::swap_matrix;
use crate::linalg::closure;
use crate::repcore::{intertwiners, Mat};
use crate::scalars::{CycloElem, Ring};

use super::HopfError;

pub(crate) fn col(v: &[CycloElem]) -> Mat {
    Mat::from_triplets(v.len(), 1, v.iter().enumerate().map(|(i, x)| (i, 0, x.clone())))
}

pub(crate) fn row(v: &[CycloElem]) -> Mat {
    Mat::from_triplets(1, v.len(), v.iter().enumerate().map(|(j, x)| (0, j, x.clone())))
}

pub(crate) fn basis_vec(n: usize, k: usize) -> Vec<CycloElem> {
    let mut v = vec![CycloElem::zero(); n];
    v[k] = CycloElem::one();
    v
}

fn require(cond: bool, what: &str) -> Result<(), HopfError> {
    if cond {
        Ok(())
    } else {
        Err(HopfError::Axiom(what.to_string()))
    }
}

fn shape(m: &Mat, rows: usize, cols: usize, what: &str) -> Result<(), HopfError> {
    if m.rows() == rows && m.cols() == cols {
        Ok(())
    } else {
        Err(HopfError::Shape(format!("{} is {}x{}, expected {}x{}", what, m.rows(), m.cols(), rows, cols)))
    }
}

/// A finite-dimensional coalgebra. Column j of `delta` is the coproduct of the j-th basis
/// element in the basis b_a (x) b_b, indexed a * dim + b.
#[derive(Clone, Debug, PartialEq)]
pub struct CoalgebraFD {
    dim: usize,
    delta: Mat,
    counit: Vec<CycloElem>,
}

impl CoalgebraFD {
    pub fn new(delta: Mat, counit: Vec<CycloElem>) -> Result<Self, HopfError> {
        let n = counit.len();
        shape(&delta, n * n, n, "comultiplication")?;
        let id = Mat::identity(n);
        require(delta.kron(&id).mul(&delta) == id.kron(&delta).mul(&delta), "coassociativity")?;
        let e = row(&counit);
        require(e.kron(&id).mul(&delta) == id, "left counit law")?;
        require(id.kron(&e).mul(&delta) == id, "right counit law")?;
        Ok(CoalgebraFD { dim: n, delta, counit })
    }

    /// The ground field as a coalgebra.
    pub fn ground() -> Self {
        CoalgebraFD { dim: 1, delta: Mat::identity(1), counit: vec![CycloElem::one()] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn counit(&self) -> &[CycloElem] {
        &self.counit
    }

    pub fn counit_row(&self) -> Mat {
        row(&self.counit)
    }

    pub fn is_grouplike(&self, g: &[CycloElem]) -> bool {
        g.len() == self.dim && self.delta.mul(&col(g)) == col(g).kron(&col(g)) && self.eval_counit(g).is_one()
    }

    pub fn eval_counit(&self, x: &[CycloElem]) -> CycloElem {
        self.counit.iter().zip(x).fold(CycloElem::zero(), |acc, (e, y)| acc + e.mul_ref(y))
    }
}

/// A finite-dimensional Hopf algebra. `mult` maps the basis b_a (x) b_b (index a * dim + b)
/// to the product.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebraFD {
    coalg: CoalgebraFD,
    mult: Mat,
    unit: Vec<CycloElem>,
    antipode: Mat,
}

impl HopfAlgebraFD {
    pub fn new(coalg: CoalgebraFD, mult: Mat, unit: Vec<CycloElem>, antipode: Mat) -> Result<Self, HopfError> {
        let n = coalg.dim();
        shape(&mult, n, n * n, "multiplication")?;
        shape(&antipode, n, n, "antipode")?;
        if unit.len() != n {
            return Err(HopfError::Shape(format!("unit of length {} in dimension {}", unit.len(), n)));
        }
        let id = Mat::identity(n);
        let u = col(&unit);
        let e = coalg.counit_row();
        let delta = coalg.delta();
        require(mult.mul(&mult.kron(&id)) == mult.mul(&id.kron(&mult)), "associativity")?;
        require(mult.mul(&u.kron(&id)) == id && mult.mul(&id.kron(&u)) == id, "unit law")?;
        let middle = id.kron(&swap_matrix(n, n, 1)).kron(&id);
        require(
            delta.mul(&mult) == mult.kron(&mult).mul(&middle).mul(&delta.kron(delta)),
            "comultiplication is multiplicative",
        )?;
        require(delta.mul(&u) == u.kron(&u), "comultiplication of the unit")?;
        require(e.mul(&mult) == e.kron(&e) && e.mul(&u) == Mat::identity(1), "counit is multiplicative")?;
        let ue = u.mul(&e);
        require(mult.mul(&antipode.kron(&id)).mul(delta) == ue, "left antipode identity")?;
        require(mult.mul(&id.kron(&antipode)).mul(delta) == ue, "right antipode identity")?;
        Ok(HopfAlgebraFD { coalg, mult, unit, antipode })
    }

    pub fn coalgebra(&self) -> &CoalgebraFD {
        &self.coalg
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim()
    }

    pub fn delta(&self) -> &Mat {
        self.coalg.delta()
    }

    pub fn counit(&self) -> &[CycloElem] {
        self.coalg.counit()
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &[CycloElem] {
        &self.unit
    }

    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    pub fn product(&self, x: &[CycloElem], y: &[CycloElem]) -> Vec<CycloElem> {
        self.mult.mul(&col(x).kron(&col(y))).column(0)
    }

    /// Matrix of y -> x y.
    pub fn left_mult(&self, x: &[CycloElem]) -> Mat {
        self.mult.mul(&col(x).kron(&Mat::identity(self.dim())))
    }

    /// Matrix of y -> y x.
    pub fn right_mult(&self, x: &[CycloElem]) -> Mat {
        self.mult.mul(&Mat::identity(self.dim()).kron(&col(x)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// M -> C (x) M, indexed c * dim + k
    Left,
    /// M -> M (x) C, indexed k * coalgebra_dim + c
    Right,
}

/// A finite-dimensional comodule over a coalgebra of dimension `coalg_dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleFD {
    coalg_dim: usize,
    dim: usize,
    side: Side,
    coaction: Mat,
}

impl ComoduleFD {
    pub fn new(coalg: &CoalgebraFD, side: Side, coaction: Mat) -> Result<Self, HopfError> {
        let (c, d) = (coalg.dim(), coaction.cols());
        shape(&coaction, c * d, d, "coaction")?;
        let idd = Mat::identity(d);
        let idc = Mat::identity(c);
        let e = coalg.counit_row();
        let ok = match side {
            Side::Left => {
                coalg.delta().kron(&idd).mul(&coaction) == idc.kron(&coaction).mul(&coaction)
                    && e.kron(&idd).mul(&coaction) == idd
            }
            Side::Right => {
                coaction.kron(&idc).mul(&coaction) == idd.kron(coalg.delta()).mul(&coaction)
                    && idd.kron(&e).mul(&coaction) == idd
            }
        };
        if !ok {
            return Err(HopfError::NotComodule(format!("coaction of dimension {} fails coassociativity or counit", d)));
        }
        Ok(ComoduleFD { coalg_dim: c, dim: d, side, coaction })
    }

    pub(crate) fn from_parts_unchecked(coalg_dim: usize, side: Side, coaction: Mat) -> Self {
        ComoduleFD { coalg_dim, dim: coaction.cols(), side, coaction }
    }

    pub fn regular(coalg: &CoalgebraFD, side: Side) -> Self {
        ComoduleFD { coalg_dim: coalg.dim(), dim: coalg.dim(), side, coaction: coalg.delta().clone() }
    }

    /// One-dimensional left comodule through a grouplike element.
    pub fn trivial(coalg: &CoalgebraFD, grouplike: &[CycloElem]) -> Result<Self, HopfError> {
        Self::line(coalg, grouplike, Side::Left)
    }

    pub fn line(coalg: &CoalgebraFD, grouplike: &[CycloElem], side: Side) -> Result<Self, HopfError> {
        if !coalg.is_grouplike(grouplike) {
            return Err(HopfError::NotComodule("element is not grouplike".into()));
        }
        Ok(ComoduleFD { coalg_dim: coalg.dim(), dim: 1, side, coaction: col(grouplike) })
    }

    pub fn zero(coalg: &CoalgebraFD, side: Side) -> Self {
        ComoduleFD { coalg_dim: coalg.dim(), dim: 0, side, coaction: Mat::zeros(0, 0) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coalg_dim(&self) -> usize {
        self.coalg_dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coaction(&self) -> &Mat {
        &self.coaction
    }

    /// The action of the dual basis functional on c: the matrix of (c* (x) id) o coaction.
    pub fn block(&self, c: usize) -> Mat {
        let rows: Vec<usize> = match self.side {
            Side::Left => (0..self.dim).map(|k| c * self.dim + k).collect(),
            Side::Right => (0..self.dim).map(|k| k * self.coalg_dim + c).collect(),
        };
        self.coaction.submatrix(&rows, &(0..self.dim).collect::<Vec<_>>())
    }

    pub fn blocks(&self) -> Vec<Mat> {
        (0..self.coalg_dim).map(|c| self.block(c)).collect()
    }

    /// Rebuilds the coaction matrix from dual-functional blocks.
    pub(crate) fn from_blocks(coalg_dim: usize, side: Side, blocks: &[Mat]) -> Self {
        let d = blocks.first().map(|b| b.cols()).unwrap_or(0);
        let mut trip = Vec::new();
        for (c, b) in blocks.iter().enumerate() {
            for (i, j, x) in b.entries() {
                let r = match side {
                    Side::Left => c * d + i,
                    Side::Right => i * coalg_dim + c,
                };
                trip.push((r, j, x.clone()));
            }
        }
        ComoduleFD { coalg_dim, dim: d, side, coaction: Mat::from_triplets(coalg_dim * d, d, trip) }
    }

    pub fn direct_sum(&self, o: &ComoduleFD) -> ComoduleFD {
        let blocks: Vec<Mat> = self.blocks().iter().zip(o.blocks()).map(|(a, b)| a.direct_sum(&b)).collect();
        Self::from_blocks(self.coalg_dim, self.side, &blocks)
    }

    /// Restriction to an invariant subspace spanned by the columns of `basis`.
    pub fn restrict(&self, basis: &[Vec<CycloElem>]) -> Result<ComoduleFD, HopfError> {
        let cb = crate::linalg::CoordBasis::from_vectors(self.dim, basis);
        let mut blocks = Vec::new();
        for b in self.blocks() {
            blocks.push(
                crate::linalg::restrict(&b, &cb)
                    .ok_or_else(|| HopfError::NotComodule("subspace is not a subcomodule".into()))?,
            );
        }
        Ok(Self::from_blocks(self.coalg_dim, self.side, &blocks))
    }

    /// Smallest subcomodule containing the seeds.
    pub fn closure(&self, seeds: &[Vec<CycloElem>]) -> Vec<Vec<CycloElem>> {
        let blocks = self.blocks();
        let refs: Vec<&Mat> = blocks.iter().collect();
        closure(&refs, seeds, self.dim).vectors().to_vec()
    }
}

/// Basis of comodule maps src -> dst.
pub fn comodule_homs(src: &ComoduleFD, dst: &ComoduleFD) -> Vec<Mat> {
    let (bs, bd) = (src.blocks(), dst.blocks());
    let s: Vec<&Mat> = bs.iter().collect();
    let d: Vec<&Mat> = bd.iter().collect();
    intertwiners(&s, &d, &vec![(); src.dim()], &vec![(); dst.dim()])
}

pub fn is_comodule_map(src: &ComoduleFD, dst: &ComoduleFD, f: &Mat) -> bool {
    f.rows() == dst.dim()
        && f.cols() == src.dim()
        && src.blocks().iter().zip(dst.blocks()).all(|(a, b)| f.mul(a) == b.mul(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_field_is_a_coalgebra() {
        let g = CoalgebraFD::ground();
        assert!(CoalgebraFD::new(g.delta().clone(), g.counit().to_vec()).is_ok());
        assert!(g.is_grouplike(&[CycloElem::one()]));
    }

    #[test]
    fn broken_counit_rejected() {
        let g = CoalgebraFD::ground();
        assert!(matches!(CoalgebraFD::new(g.delta().clone(), vec![CycloElem::from_int(2)]), Err(HopfError::Axiom(_))));
    }

    #[test]
    fn comodule_blocks_round_trip() {
        let g = CoalgebraFD::ground();
        let m = ComoduleFD::trivial(&g, &[CycloElem::one()]).unwrap();
        let s = m.direct_sum(&m);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.block(0), Mat::identity(2));
        assert_eq!(comodule_homs(&s, &m).len(), 2);
    }
}
