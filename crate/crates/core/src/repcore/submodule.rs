use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::linalg::{closure, dense_to_sparse, CoordBasis};
use crate::rootdata::{CartanType, Weight};
use crate::scalars::{CycloElem, Ring};

use super::module::{Mat, VertexAction, WeightModule};
use super::weyl::weyl_module;
use super::RepError;

/// A submodule, spanned by weight vectors of the parent module.
#[derive(Clone, Debug)]
pub struct Submodule {
    basis: CoordBasis<CycloElem>,
    weights: Vec<Weight>,
}

impl Submodule {
    /// Span of the given weight vectors, without closing up under the generators.
    pub fn span(m: &WeightModule, vecs: &[Vec<CycloElem>]) -> Result<Self, RepError> {
        let mut basis = CoordBasis::new(m.dim());
        let mut weights = Vec::new();
        for v in vecs {
            if v.len() != m.dim() {
                return Err(RepError::Shape(format!("vector of length {} in a module of dimension {}", v.len(), m.dim())));
            }
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let w = homogeneous_weight(m, v).ok_or(RepError::NotHomogeneous)?;
            if basis.push(v.clone()) {
                weights.push(w);
            }
        }
        Ok(Submodule { basis, weights })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &CoordBasis<CycloElem> {
        &self.basis
    }

    pub fn vectors(&self) -> &[Vec<CycloElem>] {
        self.basis.vectors()
    }

    /// Weights of the spanning vectors, in order.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn contains(&self, v: &[CycloElem]) -> bool {
        self.basis.contains(v)
    }

    pub fn highest_weight(&self) -> Option<&Weight> {
        self.weights.iter().max()
    }

    /// Sum of two submodules of the same parent.
    pub fn sum(&self, o: &Submodule) -> Submodule {
        let mut out = self.clone();
        for (v, w) in o.basis.vectors().iter().zip(&o.weights) {
            if out.basis.push(v.clone()) {
                out.weights.push(w.clone());
            }
        }
        out
    }

    /// Whether every spanning vector is fixed by every generator of `m` into the span.
    pub fn is_stable(&self, m: &WeightModule) -> bool {
        self.basis
            .vectors()
            .iter()
            .all(|v| m.all_generators().iter().all(|g| self.basis.contains(&g.apply(v))))
    }
}

/// Weight of a vector supported on a single weight space, if it is one.
pub fn homogeneous_weight(m: &WeightModule, v: &[CycloElem]) -> Option<Weight> {
    let mut w: Option<&Weight> = None;
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        match w {
            None => w = Some(&m.weights()[k]),
            Some(u) if *u == m.weights()[k] => {}
            Some(_) => return None,
        }
    }
    w.cloned()
}

pub fn unit_vector(n: usize, k: usize) -> Vec<CycloElem> {
    let mut v = vec![CycloElem::zero(); n];
    v[k] = CycloElem::one();
    v
}

/// Smallest submodule containing the seeds.
pub fn submodule_closure(m: &WeightModule, seeds: &[Vec<CycloElem>]) -> Result<Submodule, RepError> {
    for s in seeds {
        if s.len() != m.dim() {
            return Err(RepError::Shape(format!("seed of length {} in a module of dimension {}", s.len(), m.dim())));
        }
        if s.iter().any(|x| !x.is_zero()) && homogeneous_weight(m, s).is_none() {
            return Err(RepError::NotHomogeneous);
        }
    }
    let gens = m.all_generators();
    let basis = closure(&gens, seeds, m.dim());
    let weights = basis
        .vectors()
        .iter()
        .map(|v| homogeneous_weight(m, v).expect("graded generators preserve homogeneity"))
        .collect();
    Ok(Submodule { basis, weights })
}

/// M / S, on the basis vectors of M that are not pivots of S.
pub fn quotient(m: &WeightModule, s: &Submodule) -> Result<WeightModule, RepError> {
    let ech = s.basis().echelon();
    let pivots: Vec<usize> = ech.pivot_columns().collect();
    let keep: Vec<usize> = (0..m.dim()).filter(|k| !pivots.contains(k)).collect();
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &k)| (k, a)).collect();
    let q = keep.len();
    let project = |g: &Mat| -> Mat {
        let mut trip = Vec::new();
        for (a, &k) in keep.iter().enumerate() {
            let img = dense_to_sparse(&g.column(k));
            let red = ech.reduce(img);
            for (row, x) in red {
                let b = *pos.get(&row).expect("reduced vectors vanish on pivot columns");
                trip.push((b, a, x));
            }
        }
        Mat::from_triplets(q, q, trip)
    };
    let act = (0..m.rank())
        .map(|i| {
            let a = m.action(i);
            VertexAction { e: project(&a.e), f: project(&a.f), div_e: project(&a.div_e), div_f: project(&a.div_f) }
        })
        .collect();
    let weights = keep.iter().map(|&k| m.weights()[k].clone()).collect();
    WeightModule::new(m.datum().clone(), m.params().clone(), weights, act, None)
}

fn index_of_highest(m: &WeightModule) -> Result<usize, RepError> {
    let ch = m.character();
    if let Some((w, _)) = ch.iter().find(|(_, &c)| c > 1) {
        return Err(RepError::WeightSpaceNotOneDim(w.clone()));
    }
    let top = m.weights().iter().max().ok_or(RepError::Shape("zero module".into()))?;
    Ok(m.weights().iter().position(|w| w == top).unwrap())
}

/// For a cyclic module with one-dimensional weight spaces: the sum of the closures of
/// basis vectors that avoid the highest weight line.
pub fn maximal_proper_submodule(m: &WeightModule) -> Result<Submodule, RepError> {
    let top = index_of_highest(m)?;
    let n = m.dim();
    let mut acc = submodule_closure(m, &[])?;
    let top_vec = unit_vector(n, top);
    for k in 0..n {
        if k == top || acc.contains(&unit_vector(n, k)) {
            continue;
        }
        let c = submodule_closure(m, &[unit_vector(n, k)])?;
        if !c.contains(&top_vec) {
            acc = acc.sum(&c);
        }
    }
    Ok(acc)
}

/// The simple module L(lambda) for A1, as the head of W(lambda).
pub fn simple_module(m_like: &WeightModule, lam: i64) -> Result<WeightModule, RepError> {
    let w = weyl_module(m_like.datum(), m_like.params(), lam)?;
    let max = maximal_proper_submodule(&w)?;
    quotient(&w, &max)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CompositionFactor {
    pub highest_weight: Weight,
    pub dim: usize,
}

/// Simple factors with multiplicity, by peeling characters of simple modules off the
/// character of M from the top weight down. Sorted by decreasing highest weight.
pub fn composition_factors(m: &WeightModule) -> Result<Vec<CompositionFactor>, RepError> {
    if m.datum().cartan_type() != CartanType::A1 {
        return Err(RepError::Unsupported("composition factors are computed for A1 only".into()));
    }
    let mut ch: BTreeMap<i64, i64> = m.character().into_iter().map(|(w, c)| (w.0[0], c as i64)).collect();
    let mut cache: HashMap<i64, BTreeMap<i64, i64>> = HashMap::new();
    let mut out = Vec::new();
    while let Some((&top, &mult)) = ch.iter().next_back() {
        if mult < 0 || top < 0 {
            return Err(RepError::Inconsistent(format!("character does not decompose at weight {}", top)));
        }
        let simple = match cache.get(&top) {
            Some(c) => c.clone(),
            None => {
                let l = simple_module(m, top)?;
                let c: BTreeMap<i64, i64> = l.character().into_iter().map(|(w, c)| (w.0[0], c as i64)).collect();
                cache.insert(top, c.clone());
                c
            }
        };
        let dim: i64 = simple.values().sum();
        for _ in 0..mult {
            out.push(CompositionFactor { highest_weight: Weight::a1(top), dim: dim as usize });
        }
        for (w, c) in &simple {
            let e = ch.entry(*w).or_insert(0);
            *e -= c * mult;
        }
        ch.retain(|_, c| *c != 0);
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootDatum;
    use crate::scalars::QParams;

    fn setup() -> (RootDatum, QParams) {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(4).unwrap();
        (rd, p)
    }

    #[test]
    fn closure_examples() {
        let (rd, p) = setup();
        let w = weyl_module(&rd, &p, 4).unwrap();
        assert_eq!(submodule_closure(&w, &[unit_vector(5, 0)]).unwrap().dim(), 5);
        assert!(submodule_closure(&w, &[]).unwrap().is_zero());
        // v_4 generates: E^(l) v_4 = v_0
        assert_eq!(submodule_closure(&w, &[unit_vector(5, 4)]).unwrap().dim(), 5);
        let c = submodule_closure(&w, &[unit_vector(5, 3)]).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.highest_weight(), Some(&Weight::a1(2)));
        let mixed: Vec<CycloElem> = (0..5).map(|_| CycloElem::one()).collect();
        assert!(submodule_closure(&w, &[mixed]).is_err());
    }

    #[test]
    fn maximal_submodules() {
        let (rd, p) = setup();
        let w = weyl_module(&rd, &p, 4).unwrap();
        let m = maximal_proper_submodule(&w).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.highest_weight(), Some(&Weight::a1(2)));
        assert!(m.is_stable(&w));
        assert!(maximal_proper_submodule(&weyl_module(&rd, &p, 2).unwrap()).unwrap().is_zero());
        assert!(maximal_proper_submodule(&weyl_module(&rd, &p, 0).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn factors_of_w4() {
        let (rd, p) = setup();
        let f = composition_factors(&weyl_module(&rd, &p, 4).unwrap()).unwrap();
        let hw: Vec<i64> = f.iter().map(|x| x.highest_weight.0[0]).collect();
        assert_eq!(hw, vec![4, 2]);
        assert_eq!(f.iter().map(|x| x.dim).sum::<usize>(), 5);
    }

    #[test]
    fn quotient_is_a_module() {
        let (rd, p) = setup();
        let w = weyl_module(&rd, &p, 4).unwrap();
        let q = quotient(&w, &maximal_proper_submodule(&w).unwrap()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(crate::repcore::relation_check(&q).passed());
    }
}
