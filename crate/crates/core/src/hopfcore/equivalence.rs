use serde::Serialize;

use crate::linalg::CoordBasis;
use crate::repcore::Mat;
use crate::scalars::{CycloElem, Ring};

use super::algebra::{basis_vec, col, row, ComoduleFD, Side};
use super::functors::{adjunction_counit, adjunction_unit, psi};
use super::simples::simple_comodules;
use super::triple::{TripleFD, TripleObject};
use super::HopfError;

/// Named test objects of Cat and of a-comod.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub objects: Vec<(String, TripleObject)>,
    pub comodules: Vec<(String, ComoduleFD)>,
}

/// Simples of a, the regular comodule a, the ground field; the objects O, A and O (x) N
/// for every simple A-comodule N.
pub fn standard_catalog(t: &TripleFD) -> Result<Catalog, HopfError> {
    let mut c = Catalog::default();
    for (k, s) in simple_comodules(t.small(), t.eigen_order())?.into_iter().enumerate() {
        c.comodules.push((format!("simple a-comodule {}", k), s));
    }
    c.comodules.push(("regular a".into(), t.small_regular()));
    c.comodules.push(("ground field".into(), t.small_trivial()?));
    c.objects.push(("O".into(), TripleObject::o_object(t)));
    c.objects.push(("A".into(), TripleObject::big_object(t)));
    for (k, n) in simple_comodules(t.big().coalgebra(), t.eigen_order())?.iter().enumerate() {
        c.objects.push((format!("O (x) simple A-comodule {}", k), TripleObject::free_object(t, n)?));
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjunctionEntry {
    pub object: String,
    /// "unit" or "counit"
    pub map: String,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub entries: Vec<AdjunctionEntry>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.bijective)
    }

    pub fn counterexamples(&self) -> Vec<&AdjunctionEntry> {
        self.entries.iter().filter(|e| !e.bijective).collect()
    }
}

/// Checks that the unit is bijective on every catalog object and the counit on every
/// catalog comodule. Entries are ordered by object name, units before counits.
pub fn verify_equivalence(t: &TripleFD, catalog: &Catalog) -> Result<EquivalenceReport, HopfError> {
    let mut entries = Vec::new();
    for (name, n) in &catalog.objects {
        let u = adjunction_unit(t, n)?;
        entries.push(AdjunctionEntry {
            object: name.clone(),
            map: "unit".into(),
            source_dim: n.dim(),
            target_dim: u.induced.dim(),
            rank: u.matrix.rank(),
            bijective: u.is_bijective(),
        });
    }
    for (name, m) in &catalog.comodules {
        let c = adjunction_counit(t, m)?;
        entries.push(AdjunctionEntry {
            object: name.clone(),
            map: "counit".into(),
            source_dim: c.psi.comodule.dim(),
            target_dim: m.dim(),
            rank: c.matrix.rank(),
            bijective: c.is_bijective(),
        });
    }
    entries.sort_by(|a, b| (a.map.as_str() == "counit", &a.object).cmp(&(b.map.as_str() == "counit", &b.object)));
    Ok(EquivalenceReport { entries })
}

/// Whether gamma, a functional on O, is an algebra map O -> C.
pub fn is_point(t: &TripleFD, gamma: &[CycloElem]) -> bool {
    let o = t.o();
    if gamma.len() != o.dim() {
        return false;
    }
    let g = row(gamma);
    g.mul(o.mult()) == g.kron(&g) && g.mul(&col(o.unit())) == Mat::identity(1)
}

/// The counit, the identity point of Spec O.
pub fn identity_point(t: &TripleFD) -> Vec<CycloElem> {
    t.o().counit().to_vec()
}

/// Product of points: (g1 (x) g2) o Delta.
pub fn point_product(t: &TripleFD, g1: &[CycloElem], g2: &[CycloElem]) -> Vec<CycloElem> {
    row(g1).kron(&row(g2)).mul(t.o().delta()).row(0).iter().fold(vec![CycloElem::zero(); t.o_dim()], |mut v, (j, x)| {
        v[*j] = x.clone();
        v
    })
}

/// f -> sum f1 gamma(tau(f2)): right translation by the inverse point.
fn translation(t: &TripleFD, gamma: &[CycloElem]) -> Mat {
    let o = t.o();
    let functional = row(gamma).mul(o.antipode());
    Mat::identity(o.dim()).kron(&functional).mul(o.delta())
}

/// The O-action precomposed with translation, so that twist(g1, twist(g2, X)) equals
/// twist(g1 g2, X).
pub fn twist_object(t: &TripleFD, gamma: &[CycloElem], x: &TripleObject) -> Result<TripleObject, HopfError> {
    if !is_point(t, gamma) {
        return Err(HopfError::NotAPoint);
    }
    let tr = translation(t, gamma);
    let mut act = Vec::with_capacity(t.o_dim());
    for f in 0..t.o_dim() {
        let mut acc = Mat::zeros(x.dim(), x.dim());
        for (g, c) in tr.column(f).into_iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&x.o_action()[g].scale(&c));
            }
        }
        act.push(acc);
    }
    TripleObject::new(t, act, x.coaction().clone())
}

/// Both bracketings of three twists agree with the twist by the triple product.
pub fn twist_coherence(
    t: &TripleFD,
    g: [&[CycloElem]; 3],
    x: &TripleObject,
) -> Result<bool, HopfError> {
    let nested = twist_object(t, g[0], &twist_object(t, g[1], &twist_object(t, g[2], x)?)?)?;
    let left = point_product(t, &point_product(t, g[0], g[1]), g[2]);
    let right = point_product(t, g[0], &point_product(t, g[1], g[2]));
    Ok(nested == twist_object(t, &left, x)? && nested == twist_object(t, &right, x)?)
}

/// An object of Cat with a right O-coaction compatible with the O-action and commuting with
/// the A-coaction: the form equivariance data takes here.
#[derive(Clone, Debug)]
pub struct EquivariantObject {
    pub object: TripleObject,
    pub o_coaction: Mat,
}

impl EquivariantObject {
    pub fn new(t: &TripleFD, object: TripleObject, o_coaction: Mat) -> Result<Self, HopfError> {
        let (n, no) = (object.dim(), t.o_dim());
        ComoduleFD::new(t.o().coalgebra(), Side::Right, o_coaction.clone())
            .map_err(|_| HopfError::Incompatible("not a right O-comodule".into()))?;
        for f in 0..no {
            // rho(f m) = sum f1 m_0 (x) f2 m_1
            let mut rhs = Mat::zeros(n * no, n * no);
            for (r, c, x) in t.o().delta().entries() {
                if c != f {
                    continue;
                }
                let (f1, f2) = (r / no, r % no);
                rhs = rhs.add(&object.o_action()[f1].kron(&t.o().left_mult(&basis_vec(no, f2))).scale(x));
            }
            if o_coaction.mul(&object.o_action()[f]) != rhs.mul(&o_coaction) {
                return Err(HopfError::Incompatible(format!("O-coaction incompatible with the action of {}", f)));
            }
        }
        let lhs = Mat::identity(t.big_dim()).kron(&o_coaction).mul(object.coaction());
        let rhs = object.coaction().kron(&Mat::identity(no)).mul(&o_coaction);
        if lhs != rhs {
            return Err(HopfError::Incompatible("O-coaction does not commute with the A-coaction".into()));
        }
        Ok(EquivariantObject { object, o_coaction })
    }

    /// O (x) N with the right regular O-coaction on the first factor.
    pub fn from_comodule(t: &TripleFD, n: &ComoduleFD) -> Result<Self, HopfError> {
        let object = TripleObject::free_object(t, n)?;
        let (no, d) = (t.o_dim(), n.dim());
        let mut trip = Vec::new();
        for (r, f, x) in t.o().delta().entries() {
            let (f1, f2) = (r / no, r % no);
            for k in 0..d {
                trip.push(((f1 * d + k) * no + f2, f * d + k, x.clone()));
            }
        }
        let co = Mat::from_triplets(no * d * no, no * d, trip);
        Self::new(t, object, co)
    }

    /// The underlying a-comodule, C (x)_O N.
    pub fn underlying(&self, t: &TripleFD) -> Result<ComoduleFD, HopfError> {
        Ok(psi(t, &self.object)?.comodule)
    }
}

/// The fiber at the identity point: O-coinvariants with the restricted A-coaction.
pub fn equivariant_reconstruct(t: &TripleFD, e: &EquivariantObject) -> Result<ComoduleFD, HopfError> {
    let n = e.object.dim();
    let triv = Mat::identity(n).kron(&col(t.o().unit()));
    let coinv = e.o_coaction.sub(&triv).nullspace();
    if coinv.len() * t.o_dim() != n {
        return Err(HopfError::Incompatible(format!(
            "coinvariants of dimension {} do not generate a free object of dimension {}",
            coinv.len(),
            n
        )));
    }
    let basis = CoordBasis::from_vectors(n, &coinv);
    let mut blocks = Vec::with_capacity(t.big_dim());
    for b in e.object.coaction_blocks(t.big_dim()) {
        blocks.push(
            crate::linalg::restrict(&b, &basis)
                .ok_or_else(|| HopfError::Incompatible("coinvariants are not an A-subcomodule".into()))?,
        );
    }
    let m = ComoduleFD::from_blocks(t.big_dim(), Side::Left, &blocks);
    ComoduleFD::new(t.big().coalgebra(), Side::Left, m.coaction().clone())
}
