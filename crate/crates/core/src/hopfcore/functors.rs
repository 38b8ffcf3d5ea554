use crate::linalg::{dense_to_sparse, CoordBasis, Echelon};
use crate::repcore::Mat;
use crate::scalars::{CycloElem, Ring};

use super::algebra::{comodule_homs, ComoduleFD, Side};
use super::triple::{is_object_map, object_homs, TripleFD, TripleObject};
use super::HopfError;

/// The equalizer of Delta_1 (x) id and id (x) Delta_2 on Mr (x) Ml, as a basis of vectors.
pub fn cotensor(mr: &ComoduleFD, ml: &ComoduleFD) -> Result<Vec<Vec<CycloElem>>, HopfError> {
    if mr.side() != Side::Right || ml.side() != Side::Left || mr.coalg_dim() != ml.coalg_dim() {
        return Err(HopfError::Shape("cotensor needs a right and a left comodule over one coalgebra".into()));
    }
    let lhs = mr.coaction().kron(&Mat::identity(ml.dim()));
    let rhs = Mat::identity(mr.dim()).kron(ml.coaction());
    Ok(lhs.sub(&rhs).nullspace())
}

/// Quotient of a family of operators by an invariant subspace, on the non-pivot coordinates.
pub(crate) struct QuotientData {
    pub projection: Mat,
    pub keep: Vec<usize>,
    pub ops: Vec<Mat>,
}

pub(crate) fn quotient_ops(ops: &[Mat], sub: &[Vec<CycloElem>], dim: usize) -> Result<QuotientData, HopfError> {
    let mut ech = Echelon::new(dim);
    for v in sub {
        ech.insert(dense_to_sparse(v));
    }
    let pivots: Vec<usize> = ech.pivot_columns().collect();
    let keep: Vec<usize> = (0..dim).filter(|k| !pivots.contains(k)).collect();
    let mut pos = vec![usize::MAX; dim];
    for (a, &k) in keep.iter().enumerate() {
        pos[k] = a;
    }
    let q = keep.len();
    let project = |v: Vec<CycloElem>| -> Vec<(usize, CycloElem)> {
        ech.reduce(dense_to_sparse(&v)).into_iter().map(|(r, x)| (pos[r], x)).collect()
    };
    let mut trip = Vec::new();
    for k in 0..dim {
        let mut e = vec![CycloElem::zero(); dim];
        e[k] = CycloElem::one();
        for (r, x) in project(e) {
            trip.push((r, k, x));
        }
    }
    let projection = Mat::from_triplets(q, dim, trip);
    let mut out = Vec::with_capacity(ops.len());
    for g in ops {
        for s in sub {
            if !project(g.apply(s)).is_empty() {
                return Err(HopfError::Inconsistent("subspace is not invariant".into()));
            }
        }
        let mut trip = Vec::new();
        for (a, &k) in keep.iter().enumerate() {
            for (r, x) in project(g.column(k)) {
                trip.push((r, a, x));
            }
        }
        out.push(Mat::from_triplets(q, q, trip));
    }
    Ok(QuotientData { projection, keep, ops: out })
}

/// Quotient comodule M / S with its projection matrix.
pub fn comodule_quotient(m: &ComoduleFD, sub: &[Vec<CycloElem>]) -> Result<(ComoduleFD, Mat), HopfError> {
    let q = quotient_ops(&m.blocks(), sub, m.dim())
        .map_err(|_| HopfError::NotComodule("subspace is not a subcomodule".into()))?;
    Ok((ComoduleFD::from_blocks(m.coalg_dim(), m.side(), &q.ops), q.projection))
}

/// Ind(M) = (A (x) M)^a with its embedding into A (x) M (columns).
#[derive(Clone, Debug)]
pub struct Induced {
    pub object: TripleObject,
    pub embedding: Mat,
    basis: CoordBasis<CycloElem>,
}

impl Induced {
    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    /// Coordinates in Ind(M) of a vector of A (x) M.
    pub fn coords(&self, v: &[CycloElem]) -> Option<Vec<CycloElem>> {
        self.basis.coords(v)
    }
}

pub fn induce(t: &TripleFD, m: &ComoduleFD) -> Result<Induced, HopfError> {
    if m.side() != Side::Left || m.coalg_dim() != t.small_dim() {
        return Err(HopfError::Shape("induction needs a left a-comodule".into()));
    }
    let vecs = cotensor(&t.big_as_right_small(), m)?;
    let (na, d, k) = (t.big_dim(), m.dim(), vecs.len());
    let basis = CoordBasis::from_vectors(na * d, &vecs);
    let id = Mat::identity(d);
    let delta = t.big().delta().kron(&id);
    let mut trip = Vec::new();
    for (j, v) in vecs.iter().enumerate() {
        let w = delta.apply(v);
        for c in 0..na {
            let slice = &w[c * na * d..(c + 1) * na * d];
            if slice.iter().all(|x| x.is_zero()) {
                continue;
            }
            let co = basis.coords(slice).ok_or_else(|| HopfError::Inconsistent("coaction leaves the cotensor".into()))?;
            for (i, x) in co.into_iter().enumerate() {
                trip.push((c * k + i, j, x));
            }
        }
    }
    let coaction = Mat::from_triplets(na * k, k, trip);
    let mut act = Vec::with_capacity(t.o_dim());
    for f in 0..t.o_dim() {
        let l = t.iota_left_mult(f).kron(&id);
        let mut cols = Vec::with_capacity(k);
        for v in &vecs {
            cols.push(basis.coords(&l.apply(v)).ok_or_else(|| {
                HopfError::ConditionViolated("(ii): the O-action does not preserve (A (x) M)^a".into())
            })?);
        }
        act.push(Mat::from_columns(&cols, k));
    }
    let object = TripleObject::new(t, act, coaction)?;
    Ok(Induced { object, embedding: Mat::from_columns(&vecs, na * d), basis })
}

/// Psi(N) = C (x)_O N with the descended a-coaction.
#[derive(Clone, Debug)]
pub struct Psi {
    pub comodule: ComoduleFD,
    /// N -> Psi(N)
    pub projection: Mat,
    /// carrier basis vectors of N representing the basis of Psi(N)
    pub keep: Vec<usize>,
}

/// The augmentation ideal applied to N.
pub fn augmentation_image(t: &TripleFD, n: &TripleObject) -> Vec<Vec<CycloElem>> {
    let mut b = CoordBasis::new(n.dim());
    for g in t.augmentation_generators() {
        let mut op = Mat::zeros(n.dim(), n.dim());
        for (f, x) in g.iter().enumerate() {
            if !x.is_zero() {
                op = op.add(&n.o_action()[f].scale(x));
            }
        }
        for c in op.columns() {
            if c.iter().any(|x| !x.is_zero()) {
                b.push(c);
            }
        }
    }
    b.vectors().to_vec()
}

pub fn psi(t: &TripleFD, n: &TripleObject) -> Result<Psi, HopfError> {
    let sub = augmentation_image(t, n);
    let big_blocks = n.coaction_blocks(t.big_dim());
    // a-coaction blocks: (pi (x) id) o co-ac
    let mut blocks = Vec::with_capacity(t.small_dim());
    for c in 0..t.small_dim() {
        let mut acc = Mat::zeros(n.dim(), n.dim());
        for (x, b) in big_blocks.iter().enumerate() {
            let p = t.pi().get(c, x);
            if !p.is_zero() {
                acc = acc.add(&b.scale(&p));
            }
        }
        blocks.push(acc);
    }
    let q = quotient_ops(&blocks, &sub, n.dim())
        .map_err(|_| HopfError::NotObject("the a-coaction does not descend to C (x)_O N".into()))?;
    let comodule = ComoduleFD::new(t.small(), Side::Left, ComoduleFD::from_blocks(t.small_dim(), Side::Left, &q.ops).coaction().clone())?;
    Ok(Psi { comodule, projection: q.projection, keep: q.keep })
}

/// The composite N -> (A (x) N)^A -> (A (x) N)^a -> (A (x) Psi(N))^a.
#[derive(Clone, Debug)]
pub struct UnitMap {
    pub psi: Psi,
    pub induced: Induced,
    pub matrix: Mat,
}

impl UnitMap {
    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }
}

pub fn adjunction_unit(t: &TripleFD, n: &TripleObject) -> Result<UnitMap, HopfError> {
    let ps = psi(t, n)?;
    let ind = induce(t, &ps.comodule)?;
    let lift = Mat::identity(t.big_dim()).kron(&ps.projection).mul(n.coaction());
    let mut cols = Vec::with_capacity(n.dim());
    for v in lift.columns() {
        cols.push(ind.coords(&v).ok_or_else(|| HopfError::Inconsistent("unit leaves Ind(Psi(N))".into()))?);
    }
    let matrix = Mat::from_columns(&cols, ind.dim());
    if !is_object_map(t, n, &ind.object, &matrix) {
        return Err(HopfError::Inconsistent("the unit is not a morphism in Cat".into()));
    }
    Ok(UnitMap { psi: ps, induced: ind, matrix })
}

/// The composite (A (x) M)^a -> A (x) M -> M through eps (x) id, descended to Psi(Ind(M)).
#[derive(Clone, Debug)]
pub struct CounitMap {
    pub induced: Induced,
    pub psi: Psi,
    pub matrix: Mat,
}

impl CounitMap {
    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.matrix.rows()
    }
}

pub fn adjunction_counit(t: &TripleFD, m: &ComoduleFD) -> Result<CounitMap, HopfError> {
    let ind = induce(t, m)?;
    let ps = psi(t, &ind.object)?;
    let eps = t.big().coalgebra().counit_row().kron(&Mat::identity(m.dim())).mul(&ind.embedding);
    for s in augmentation_image(t, &ind.object) {
        if eps.apply(&s).iter().any(|x| !x.is_zero()) {
            return Err(HopfError::Inconsistent("eps (x) id does not vanish on m Ind(M)".into()));
        }
    }
    let cols: Vec<Vec<CycloElem>> = ps.keep.iter().map(|&k| eps.column(k)).collect();
    let matrix = Mat::from_columns(&cols, m.dim());
    let comap = super::algebra::is_comodule_map(&ps.comodule, m, &matrix);
    if !comap {
        return Err(HopfError::Inconsistent("the counit is not a map of a-comodules".into()));
    }
    Ok(CounitMap { induced: ind, psi: ps, matrix })
}

/// dim Hom_Cat(N, Ind M) and dim Hom_a(Psi N, M).
pub fn adjunction_hom_dims(t: &TripleFD, n: &TripleObject, m: &ComoduleFD) -> Result<(usize, usize), HopfError> {
    let ind = induce(t, m)?;
    let ps = psi(t, n)?;
    Ok((object_homs(t, n, &ind.object).len(), comodule_homs(&ps.comodule, m).len()))
}

/// Ind applied to a comodule map f: M1 -> M2, as a matrix Ind(M1) -> Ind(M2).
pub fn induce_map(i1: &Induced, i2: &Induced, f: &Mat, big_dim: usize) -> Result<Mat, HopfError> {
    let lifted = Mat::identity(big_dim).kron(f).mul(&i1.embedding);
    let mut cols = Vec::with_capacity(i1.dim());
    for v in lifted.columns() {
        cols.push(i2.coords(&v).ok_or_else(|| HopfError::Inconsistent("Ind(f) leaves the target".into()))?);
    }
    Ok(Mat::from_columns(&cols, i2.dim()))
}
