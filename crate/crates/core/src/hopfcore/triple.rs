use crate::repcore::{intertwiners, Mat};
use crate::scalars::{CycloElem, Ring};

use super::algebra::{basis_vec, col, CoalgebraFD, ComoduleFD, HopfAlgebraFD, Side};
use super::HopfError;

/// A triple (O, A, a): Hopf algebras O and A with an embedding O -> A, a coalgebra a with a
/// right A-module structure, and a surjection A -> a respecting both.
#[derive(Clone, Debug)]
pub struct TripleFD {
    name: String,
    o: HopfAlgebraFD,
    big: HopfAlgebraFD,
    small: CoalgebraFD,
    small_action: Mat,
    iota: Mat,
    pi: Mat,
    eigen_order: u32,
}

fn check(cond: bool, what: &str) -> Result<(), HopfError> {
    if cond {
        Ok(())
    } else {
        Err(HopfError::Axiom(what.to_string()))
    }
}

impl TripleFD {
    /// `small_action` maps a (x) A -> a; `eigen_order` is the order of the roots of unity that
    /// may occur as eigenvalues of coaction blocks (used when splitting comodules).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        o: HopfAlgebraFD,
        big: HopfAlgebraFD,
        small: CoalgebraFD,
        small_action: Mat,
        iota: Mat,
        pi: Mat,
        eigen_order: u32,
    ) -> Result<Self, HopfError> {
        let (no, na, ns) = (o.dim(), big.dim(), small.dim());
        if iota.rows() != na || iota.cols() != no || pi.rows() != ns || pi.cols() != na {
            return Err(HopfError::Shape("iota must be dim A x dim O and pi dim a x dim A".into()));
        }
        if small_action.rows() != ns || small_action.cols() != ns * na {
            return Err(HopfError::Shape("the action on a must be dim a x (dim a * dim A)".into()));
        }
        check(iota.rank() == no, "iota is injective")?;
        check(big.mult().mul(&iota.kron(&iota)) == iota.mul(o.mult()), "iota is multiplicative")?;
        check(iota.mul(&col(o.unit())) == col(big.unit()), "iota preserves the unit")?;
        check(big.delta().mul(&iota) == iota.kron(&iota).mul(o.delta()), "iota respects comultiplication")?;
        check(big.coalgebra().counit_row().mul(&iota) == o.coalgebra().counit_row(), "iota respects the counit")?;
        check(big.antipode().mul(&iota) == iota.mul(o.antipode()), "iota respects the antipode")?;
        check(pi.rank() == ns, "pi is surjective")?;
        check(small.delta().mul(&pi) == pi.kron(&pi).mul(big.delta()), "pi respects comultiplication")?;
        check(small.counit_row().mul(&pi) == big.coalgebra().counit_row(), "pi respects the counit")?;
        let ids = Mat::identity(ns);
        let ida = Mat::identity(na);
        check(
            small_action.mul(&small_action.kron(&ida)) == small_action.mul(&ids.kron(big.mult())),
            "a is a right A-module",
        )?;
        check(small_action.mul(&ids.kron(&col(big.unit()))) == ids, "the unit of A acts trivially on a")?;
        check(pi.mul(big.mult()) == small_action.mul(&pi.kron(&ida)), "pi is a map of right A-modules")?;
        Ok(TripleFD { name: name.to_string(), o, big, small, small_action, iota, pi, eigen_order })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn o(&self) -> &HopfAlgebraFD {
        &self.o
    }

    pub fn big(&self) -> &HopfAlgebraFD {
        &self.big
    }

    pub fn small(&self) -> &CoalgebraFD {
        &self.small
    }

    pub fn small_action(&self) -> &Mat {
        &self.small_action
    }

    pub fn iota(&self) -> &Mat {
        &self.iota
    }

    pub fn pi(&self) -> &Mat {
        &self.pi
    }

    pub fn eigen_order(&self) -> u32 {
        self.eigen_order
    }

    pub fn o_dim(&self) -> usize {
        self.o.dim()
    }

    pub fn big_dim(&self) -> usize {
        self.big.dim()
    }

    pub fn small_dim(&self) -> usize {
        self.small.dim()
    }

    /// pi(1), the unit of a.
    pub fn small_unit(&self) -> Vec<CycloElem> {
        self.pi.apply(self.big.unit())
    }

    pub fn iota_of(&self, f: usize) -> Vec<CycloElem> {
        self.iota.column(f)
    }

    /// Left multiplication by iota of the f-th basis element of O, on A.
    pub fn iota_left_mult(&self, f: usize) -> Mat {
        self.big.left_mult(&self.iota_of(f))
    }

    /// A as a right a-comodule through (id (x) pi) o Delta.
    pub fn big_as_right_small(&self) -> ComoduleFD {
        let m = Mat::identity(self.big_dim()).kron(&self.pi).mul(self.big.delta());
        ComoduleFD::from_parts_unchecked(self.small_dim(), Side::Right, m)
    }

    /// The ground field as an a-comodule, through pi(1).
    pub fn small_trivial(&self) -> Result<ComoduleFD, HopfError> {
        ComoduleFD::trivial(&self.small, &self.small_unit())
    }

    pub fn small_regular(&self) -> ComoduleFD {
        ComoduleFD::regular(&self.small, Side::Left)
    }

    pub fn big_regular(&self) -> ComoduleFD {
        ComoduleFD::regular(self.big.coalgebra(), Side::Left)
    }

    /// Restriction of a left A-comodule to a.
    pub fn res(&self, n: &ComoduleFD) -> Result<ComoduleFD, HopfError> {
        if n.coalg_dim() != self.big_dim() || n.side() != Side::Left {
            return Err(HopfError::Shape("restriction needs a left A-comodule".into()));
        }
        let m = self.pi.kron(&Mat::identity(n.dim())).mul(n.coaction());
        ComoduleFD::new(&self.small, Side::Left, m)
    }

    /// f - eps(f) 1 for every basis element f of O.
    pub fn augmentation_generators(&self) -> Vec<Vec<CycloElem>> {
        let u = self.o.unit();
        (0..self.o_dim())
            .map(|f| {
                let e = self.o.counit()[f].clone();
                basis_vec(self.o_dim(), f).iter().zip(u).map(|(x, y)| x.sub_ref(&e.mul_ref(y))).collect()
            })
            .collect()
    }
}

/// An object of the category Cat: a left O-action and a compatible left A-coaction.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleObject {
    dim: usize,
    o_action: Vec<Mat>,
    coaction: Mat,
}

impl TripleObject {
    /// `o_action[f]` is the action of the f-th basis element of O; `coaction` maps the carrier
    /// to A (x) carrier.
    pub fn new(t: &TripleFD, o_action: Vec<Mat>, coaction: Mat) -> Result<Self, HopfError> {
        let n = coaction.cols();
        let no = t.o_dim();
        if o_action.len() != no || o_action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(HopfError::Shape(format!("need {} square action matrices of size {}", no, n)));
        }
        ComoduleFD::new(t.big().coalgebra(), Side::Left, coaction.clone())
            .map_err(|_| HopfError::NotObject("A-coaction is not a comodule structure".into()))?;
        let combo = |v: &[CycloElem]| -> Mat {
            let mut acc = Mat::zeros(n, n);
            for (f, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    acc = acc.add(&o_action[f].scale(x));
                }
            }
            acc
        };
        if combo(t.o().unit()) != Mat::identity(n) {
            return Err(HopfError::NotObject("the unit of O does not act as the identity".into()));
        }
        for f in 0..no {
            for g in 0..no {
                let fg = t.o().product(&basis_vec(no, f), &basis_vec(no, g));
                if o_action[f].mul(&o_action[g]) != combo(&fg) {
                    return Err(HopfError::NotObject(format!("O-action is not multiplicative on ({}, {})", f, g)));
                }
            }
        }
        let obj = TripleObject { dim: n, o_action, coaction };
        for f in 0..no {
            if obj.coaction.mul(&obj.o_action[f]) != obj.delta_action(t, f).mul(&obj.coaction) {
                return Err(HopfError::NotObject(format!("co-ac(f m) differs from Delta(f) co-ac(m) for f = {}", f)));
            }
        }
        Ok(obj)
    }

    /// The operator of Delta(f) on A (x) carrier: sum of L_{iota(f1)} (x) act(f2).
    fn delta_action(&self, t: &TripleFD, f: usize) -> Mat {
        let no = t.o_dim();
        let na = t.big_dim();
        let mut acc = Mat::zeros(na * self.dim, na * self.dim);
        for (r, c, x) in t.o().delta().entries() {
            if c != f {
                continue;
            }
            let (f1, f2) = (r / no, r % no);
            acc = acc.add(&t.iota_left_mult(f1).kron(&self.o_action[f2]).scale(x));
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn o_action(&self) -> &[Mat] {
        &self.o_action
    }

    pub fn coaction(&self) -> &Mat {
        &self.coaction
    }

    pub fn coaction_blocks(&self, big_dim: usize) -> Vec<Mat> {
        ComoduleFD::from_parts_unchecked(big_dim, Side::Left, self.coaction.clone()).blocks()
    }

    /// The underlying A-comodule.
    pub fn comodule(&self, big_dim: usize) -> ComoduleFD {
        ComoduleFD::from_parts_unchecked(big_dim, Side::Left, self.coaction.clone())
    }

    fn generators(&self, big_dim: usize) -> Vec<Mat> {
        let mut g = self.o_action.clone();
        g.extend(self.coaction_blocks(big_dim));
        g
    }

    /// O as an object: left multiplication and the coaction (iota (x) id) o Delta.
    pub fn o_object(t: &TripleFD) -> Self {
        let no = t.o_dim();
        let act = (0..no).map(|f| t.o().left_mult(&basis_vec(no, f))).collect();
        let coaction = t.iota().kron(&Mat::identity(no)).mul(t.o().delta());
        TripleObject { dim: no, o_action: act, coaction }
    }

    /// A as an object: O acts through iota by left multiplication.
    pub fn big_object(t: &TripleFD) -> Self {
        let act = (0..t.o_dim()).map(|f| t.iota_left_mult(f)).collect();
        TripleObject { dim: t.big_dim(), o_action: act, coaction: t.big().delta().clone() }
    }

    /// O (x) N for a left A-comodule N, O acting on the first factor, diagonal coaction.
    pub fn free_object(t: &TripleFD, n: &ComoduleFD) -> Result<Self, HopfError> {
        if n.coalg_dim() != t.big_dim() || n.side() != Side::Left {
            return Err(HopfError::Shape("the free object needs a left A-comodule".into()));
        }
        let (no, na, d) = (t.o_dim(), t.big_dim(), n.dim());
        let id = Mat::identity(d);
        let act = (0..no).map(|f| t.o().left_mult(&basis_vec(no, f)).kron(&id)).collect();
        let mults: Vec<Mat> = (0..no).map(|f| t.iota_left_mult(f)).collect();
        let mut trip = Vec::new();
        for (r, f, x) in t.o().delta().entries() {
            let (f1, f2) = (r / no, r % no);
            for (rn, k, y) in n.coaction().entries() {
                let (c, k2) = (rn / d, rn % d);
                let xy = x.mul_ref(y);
                for (a, z) in mults[f1].column(c).into_iter().enumerate() {
                    if !z.is_zero() {
                        trip.push((a * no * d + f2 * d + k2, f * d + k, xy.mul_ref(&z)));
                    }
                }
            }
        }
        let coaction = Mat::from_triplets(na * no * d, no * d, trip);
        TripleObject::new(t, act, coaction)
    }

    pub fn direct_sum(&self, o: &TripleObject, big_dim: usize) -> TripleObject {
        let act = self.o_action.iter().zip(&o.o_action).map(|(a, b)| a.direct_sum(b)).collect();
        let blocks: Vec<Mat> =
            self.coaction_blocks(big_dim).iter().zip(o.coaction_blocks(big_dim)).map(|(a, b)| a.direct_sum(&b)).collect();
        let coaction = ComoduleFD::from_blocks(big_dim, Side::Left, &blocks).coaction().clone();
        TripleObject { dim: self.dim + o.dim, o_action: act, coaction }
    }
}

/// Basis of morphisms in Cat: maps commuting with the O-action and the A-coaction.
pub fn object_homs(t: &TripleFD, src: &TripleObject, dst: &TripleObject) -> Vec<Mat> {
    let gs = src.generators(t.big_dim());
    let gd = dst.generators(t.big_dim());
    let s: Vec<&Mat> = gs.iter().collect();
    let d: Vec<&Mat> = gd.iter().collect();
    intertwiners(&s, &d, &vec![(); src.dim()], &vec![(); dst.dim()])
}

pub fn is_object_map(t: &TripleFD, src: &TripleObject, dst: &TripleObject, f: &Mat) -> bool {
    f.rows() == dst.dim()
        && f.cols() == src.dim()
        && src.generators(t.big_dim()).iter().zip(dst.generators(t.big_dim())).all(|(a, b)| f.mul(a) == b.mul(f))
}

pub fn objects_isomorphic(t: &TripleFD, a: &TripleObject, b: &TripleObject) -> bool {
    a.dim() == b.dim() && crate::repcore::find_invertible(&object_homs(t, a, b)).is_some()
}
