use crate::rootdata::{CartanType, RootDatum, Weight};
use crate::scalars::{qfact, qint, QParams};

use super::module::{GenMat, GenericAction, VertexAction, WeightModule};
use super::relations::{generic_divided_power, specialize};
use super::RepError;

/// The Weyl module W(lambda) for A1, with basis v_0, ..., v_lambda of weights lambda - 2k.
///
/// At generic v: F v_k = [k+1] v_{k+1} and E v_k = [lambda-k+1] v_{k-1}. The divided
/// powers are E^l/[l]! and F^l/[l]!, computed in the localization and specialized.
pub fn weyl_module(datum: &RootDatum, params: &QParams, lam: i64) -> Result<WeightModule, RepError> {
    if datum.cartan_type() != CartanType::A1 {
        return Err(RepError::Unsupported(format!("Weyl modules are built for A1 only, not {}", datum.cartan_type())));
    }
    if lam < 0 {
        return Err(RepError::NotDominant(Weight::a1(lam)));
    }
    let n = (lam + 1) as usize;
    let d = params.d(0);
    let order = params.order();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for k in 0..n {
        if k + 1 < n {
            f.push((k + 1, k, qint(k as i64 + 1, d)));
        }
        if k >= 1 {
            e.push((k - 1, k, qint(lam - k as i64 + 1, d)));
        }
    }
    let e = GenMat::from_triplets(n, n, e);
    let f = GenMat::from_triplets(n, n, f);
    let li = params.ell_i(0);
    let fl = qfact(li as i64, d);
    let div_e = generic_divided_power(&e, li, &fl, order)?;
    let div_f = generic_divided_power(&f, li, &fl, order)?;
    let act = VertexAction { e: specialize(&e, order), f: specialize(&f, order), div_e, div_f };
    let weights = (0..n).map(|k| Weight::a1(lam - 2 * k as i64)).collect();
    WeightModule::new(datum.clone(), params.clone(), weights, vec![act], Some(vec![GenericAction { e, f }]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::relation_check;
    use crate::scalars::{qbinom_at, CycloElem, Ring};

    fn setup(ell: u32) -> (RootDatum, QParams) {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(ell).unwrap();
        (rd, p)
    }

    #[test]
    fn small_cases() {
        let (rd, p) = setup(4);
        let w0 = weyl_module(&rd, &p, 0).unwrap();
        assert_eq!(w0.dim(), 1);
        assert!(w0.all_generators().iter().all(|m| m.is_zero()));
        assert_eq!(weyl_module(&rd, &p, 1).unwrap().dim(), 2);
        assert!(weyl_module(&rd, &p, -1).is_err());
        let a2 = RootDatum::build(CartanType::A2);
        assert!(weyl_module(&a2, &a2.params(4).unwrap(), 1).is_err());
    }

    #[test]
    fn highest_weight_vector_killed() {
        let (rd, p) = setup(4);
        let w = weyl_module(&rd, &p, 9).unwrap();
        for k in 0..w.dim() {
            assert!(w.e(0).get(k, 0).is_zero());
            assert!(w.div_e(0).get(k, 0).is_zero());
        }
    }

    #[test]
    fn divided_powers_match_closed_form() {
        // divF v_k = [k+l choose l] v_{k+l}, divE v_k = [lambda-k+l choose l] v_{k-l}
        for ell in [4u32, 6] {
            let (rd, p) = setup(ell);
            let l = ell as i64;
            for lam in [5i64, 9, 12] {
                let w = weyl_module(&rd, &p, lam).unwrap();
                for k in 0..=lam {
                    let fk = if k + l <= lam { qbinom_at(k + l, l, 1, p.order()) } else { CycloElem::zero() };
                    if k + l <= lam {
                        assert_eq!(w.div_f(0).get((k + l) as usize, k as usize), fk);
                    }
                    if k >= l {
                        let ek = qbinom_at(lam - k + l, l, 1, p.order());
                        assert_eq!(w.div_e(0).get((k - l) as usize, k as usize), ek);
                    }
                }
            }
        }
    }

    #[test]
    fn relations_hold() {
        let (rd, p) = setup(4);
        let rep = relation_check(&weyl_module(&rd, &p, 5).unwrap());
        assert!(rep.passed(), "{:?}", rep.failures());
    }
}
