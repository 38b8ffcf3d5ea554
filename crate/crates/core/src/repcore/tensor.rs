use crate::scalars::{qfact, Field, LaurentPoly};

use super::module::{GenMat, GenericAction, Mat, VertexAction, WeightModule};
use super::relations::generic_divided_power;
use super::RepError;

/// How the divided powers on a tensor product are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorRoute {
    /// (Delta E)^l / [l]! in the localization; needs generic matrices on both factors
    Generic,
    /// sum over a + b = l of zeta^{d ab} E^(a) K^b (x) E^(b) and the analogue for F
    Coproduct,
}

/// M (x) N with E acting by E (x) 1 + K (x) E and F by F (x) K^-1 + 1 (x) F.
///
/// Divided powers use the generic route when both factors carry generic matrices.
pub fn tensor_product(m: &WeightModule, n: &WeightModule) -> Result<WeightModule, RepError> {
    let route = if m.generic().is_some() && n.generic().is_some() { TensorRoute::Generic } else { TensorRoute::Coproduct };
    tensor_product_via(m, n, route)
}

pub fn tensor_product_via(m: &WeightModule, n: &WeightModule, route: TensorRoute) -> Result<WeightModule, RepError> {
    m.same_setting(n)?;
    let params = m.params();
    let order = params.order();
    let (dm, dn) = (m.dim(), n.dim());
    let id_m = Mat::identity(dm);
    let id_n = Mat::identity(dn);
    let mut weights = Vec::with_capacity(dm * dn);
    for a in m.weights() {
        for b in n.weights() {
            weights.push(a.add(b));
        }
    }
    let generic_parts: Option<Vec<GenericAction>> = match (m.generic(), n.generic()) {
        (Some(gm), Some(gn)) => Some(
            (0..m.rank())
                .map(|i| {
                    let km = GenMat::diag(m.k_diag_generic(i, 1));
                    let kn_inv = GenMat::diag(n.k_diag_generic(i, -1));
                    let e = gm[i].e.kron(&GenMat::identity(dn)).add(&km.kron(&gn[i].e));
                    let f = gm[i].f.kron(&kn_inv).add(&GenMat::identity(dm).kron(&gn[i].f));
                    GenericAction { e, f }
                })
                .collect(),
        ),
        _ => None,
    };
    let mut act = Vec::with_capacity(m.rank());
    for i in 0..m.rank() {
        let km = Mat::diag(m.k_diag(i, 1));
        let kn_inv = Mat::diag(n.k_diag(i, -1));
        let e = m.e(i).kron(&id_n).add(&km.kron(n.e(i)));
        let f = m.f(i).kron(&kn_inv).add(&id_m.kron(n.f(i)));
        let (div_e, div_f) = match route {
            TensorRoute::Generic => {
                let g = generic_parts
                    .as_ref()
                    .ok_or_else(|| RepError::Unsupported("generic route needs generic matrices on both factors".into()))?;
                let li = params.ell_i(i);
                let fl: LaurentPoly = qfact(li as i64, params.d(i));
                (generic_divided_power(&g[i].e, li, &fl, order)?, generic_divided_power(&g[i].f, li, &fl, order)?)
            }
            TensorRoute::Coproduct => coproduct_divided(m, n, i),
        };
        act.push(VertexAction { e, f, div_e, div_f });
    }
    WeightModule::new(m.datum().clone(), params.clone(), weights, act, generic_parts)
}

fn coproduct_divided(m: &WeightModule, n: &WeightModule, i: usize) -> (Mat, Mat) {
    let params = m.params();
    let li = params.ell_i(i);
    let d = params.d(i) as i64;
    let (dm, dn) = (m.dim(), n.dim());
    let mut div_e = Mat::zeros(dm * dn, dm * dn);
    let mut div_f = Mat::zeros(dm * dn, dm * dn);
    for a in 0..=li {
        let b = li - a;
        let c = params.zeta_pow(d * (a * b) as i64);
        let c_inv = c.inv().expect("roots of unity are invertible");
        let left_e = m.divided_e(i, a).right_diag(&m.k_diag(i, b as i64));
        div_e = div_e.add(&left_e.kron(&n.divided_e(i, b)).scale(&c));
        let right_f = n.divided_f(i, b).left_diag(&n.k_diag(i, -(a as i64)));
        div_f = div_f.add(&m.divided_f(i, a).kron(&right_f).scale(&c_inv));
    }
    (div_e, div_f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::{relation_check, weyl_module};
    use crate::rootdata::{CartanType, RootDatum, Weight};

    #[test]
    fn tensor_with_trivial() {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(4).unwrap();
        let w = weyl_module(&rd, &p, 3).unwrap();
        let t = tensor_product(&w, &WeightModule::trivial(&rd, &p)).unwrap();
        assert!(t.same_matrices(&w));
        let t = tensor_product(&WeightModule::trivial(&rd, &p), &w).unwrap();
        assert!(t.same_matrices(&w));
    }

    #[test]
    fn grading_of_w1_squared() {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(4).unwrap();
        let w = weyl_module(&rd, &p, 1).unwrap();
        let t = tensor_product(&w, &w).unwrap();
        let mut ws: Vec<i64> = t.weights().iter().map(|x| x.0[0]).collect();
        ws.sort();
        assert_eq!(ws, vec![-2, 0, 0, 2]);
        assert_eq!(t.weights()[0], Weight::a1(2));
    }

    #[test]
    fn routes_agree_and_relations_hold() {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(4).unwrap();
        let a = weyl_module(&rd, &p, 2).unwrap();
        let b = weyl_module(&rd, &p, 3).unwrap();
        let g = tensor_product_via(&a, &b, TensorRoute::Generic).unwrap();
        let c = tensor_product_via(&a, &b, TensorRoute::Coproduct).unwrap();
        assert!(g.same_matrices(&c));
        let rep = relation_check(&g);
        assert!(rep.passed(), "{:?}", rep.failures());
    }
}
