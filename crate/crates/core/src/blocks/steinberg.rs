use serde::Serialize;

use crate::frobenius::{frobenius_pullback, restrict_to_small, DualGroupRep};
use crate::linalg::closure;
use crate::repcore::{find_invertible, hom_space, simple_module, tensor_product, unit_vector, WeightModule};
use crate::rootdata::{CartanType, RootDatum, SmallLattice, Weight};
use crate::scalars::QParams;

use super::BlockError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinbergReport {
    pub lambda: i64,
    pub lambda1: i64,
    pub mu: i64,
    pub dim_simple: usize,
    pub dim_restricted: usize,
    pub dim_dual: usize,
    pub dims_match: bool,
    /// an invertible intertwiner L(lambda) -> L(lambda1) (x) Fr*(V^mu) was found
    pub isomorphism: bool,
    /// L(lambda1) has no proper nonzero submodule for the small quantum group
    pub restricted_irreducible_on_small: bool,
}

impl SteinbergReport {
    pub fn holds(&self) -> bool {
        self.dims_match && self.isomorphism && self.restricted_irreducible_on_small
    }
}

/// Irreducibility of a module for the small quantum group, assuming its lattice classes
/// are pairwise distinct, so that every submodule is spanned by basis vectors.
fn irreducible_on_small(m: &WeightModule) -> bool {
    let view = restrict_to_small(m, SmallLattice::Phi);
    let n = view.dim();
    let mut classes = view.classes.clone();
    classes.sort();
    classes.dedup();
    if classes.len() != n {
        return false;
    }
    let gens = view.generators();
    (0..n).all(|k| closure(&gens, &[unit_vector(n, k)], n).len() == n)
}

/// Builds L(lambda) as the head of W(lambda) and L(lambda1) (x) Fr*(V^mu) independently
/// and looks for an isomorphism between them (type A1).
pub fn steinberg_verify(lam: i64, params: &QParams) -> Result<SteinbergReport, BlockError> {
    if params.rank() != 1 {
        return Err(BlockError::Unsupported("the Steinberg check is implemented for A1".into()));
    }
    let datum = RootDatum::build(CartanType::A1);
    let (l1, mu) = datum.steinberg_decompose(&Weight::a1(lam), params)?;
    let (lambda1, mu) = (l1.0[0], mu[0]);
    let triv = WeightModule::trivial(&datum, params);
    let simple = simple_module(&triv, lam)?;
    let restricted = simple_module(&triv, lambda1)?;
    let dual = DualGroupRep::sl2_irrep(&datum, mu as u32)?;
    let fr = frobenius_pullback(&dual, params)?;
    let product = tensor_product(&restricted, &fr)?;
    let isomorphism = simple.dim() == product.dim() && find_invertible(&hom_space(&simple, &product)?).is_some();
    Ok(SteinbergReport {
        lambda: lam,
        lambda1,
        mu,
        dim_simple: simple.dim(),
        dim_restricted: restricted.dim(),
        dim_dual: dual.dim(),
        dims_match: simple.dim() == restricted.dim() * dual.dim(),
        isomorphism,
        restricted_irreducible_on_small: irreducible_on_small(&restricted),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_at_four() {
        let p = RootDatum::build(CartanType::A1).params(4).unwrap();
        let r = steinberg_verify(5, &p).unwrap();
        assert_eq!((r.lambda1, r.mu, r.dim_simple), (1, 1, 4));
        assert!(r.holds());
        let r = steinberg_verify(4, &p).unwrap();
        assert_eq!((r.lambda1, r.mu, r.dim_simple), (0, 1, 2));
        assert!(r.holds());
        let r = steinberg_verify(2, &p).unwrap();
        assert_eq!((r.mu, r.dim_dual), (0, 1));
        assert!(r.holds());
    }
}
