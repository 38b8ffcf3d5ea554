use crate::linalg::{closure, restrict, CoordBasis};
use crate::repcore::Mat;
use crate::scalars::{CycloElem, Ring};

use super::algebra::{comodule_homs, CoalgebraFD, ComoduleFD, Side};
use super::HopfError;

fn eigen_candidates(order: u32) -> Vec<CycloElem> {
    let mut c = vec![CycloElem::zero()];
    c.extend((0..order as i64).map(|k| CycloElem::zeta(order.max(1), k)));
    c
}

/// Eigenvectors of g restricted to span(space), in ambient coordinates.
fn eigenvectors(g: &Mat, space: &CoordBasis<CycloElem>, lambda: &CycloElem) -> Vec<Vec<CycloElem>> {
    let Some(r) = restrict(g, space) else { return Vec::new() };
    let shifted = r.sub(&Mat::identity(r.rows()).scale(lambda));
    shifted
        .nullspace()
        .into_iter()
        .map(|c| {
            let mut v = vec![CycloElem::zero(); space.ambient_dim()];
            for (coef, b) in c.iter().zip(space.vectors()) {
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(b) {
                    *x = x.add_ref(&coef.mul_ref(y));
                }
            }
            v
        })
        .collect()
}

fn same_span(a: &CoordBasis<CycloElem>, b: &CoordBasis<CycloElem>) -> bool {
    a.len() == b.len() && b.vectors().iter().all(|v| a.contains(v))
}

/// Invariant subspaces reachable from `start` by eigenvector closures that contain no
/// smaller such closure.
fn minimal_subspaces(gens: &[&Mat], start: CoordBasis<CycloElem>, cands: &[CycloElem]) -> Vec<CoordBasis<CycloElem>> {
    let mut queue = vec![start];
    let mut visited: Vec<CoordBasis<CycloElem>> = Vec::new();
    let mut minimal: Vec<CoordBasis<CycloElem>> = Vec::new();
    while let Some(cur) = queue.pop() {
        if visited.iter().any(|v| same_span(v, &cur)) {
            continue;
        }
        let mut children: Vec<CoordBasis<CycloElem>> = Vec::new();
        if cur.len() > 1 {
            let mut seeds: Vec<Vec<CycloElem>> = cur.vectors().to_vec();
            for g in gens {
                for lambda in cands {
                    seeds.extend(eigenvectors(g, &cur, lambda));
                }
            }
            for v in seeds {
                let c = closure(gens, &[v], cur.ambient_dim());
                if c.len() < cur.len() && !children.iter().any(|x| same_span(x, &c)) {
                    children.push(c);
                }
            }
        }
        if children.is_empty() {
            minimal.push(cur.clone());
        }
        visited.push(cur);
        queue.extend(children);
    }
    minimal
}

/// Simple comodules of a cosemisimple coalgebra split over Q(zeta_order), found inside the
/// regular comodule by eigenvector closures. Each has a one-dimensional endomorphism space
/// and the squares of their dimensions sum to the dimension of the coalgebra.
pub fn simple_comodules(coalg: &CoalgebraFD, order: u32) -> Result<Vec<ComoduleFD>, HopfError> {
    let reg = ComoduleFD::regular(coalg, Side::Left);
    let blocks = reg.blocks();
    let gens: Vec<&Mat> = blocks.iter().collect();
    let cands = eigen_candidates(order);
    let n = coalg.dim();
    let whole = CoordBasis::from_vectors(n, &(0..n).map(|k| super::algebra::basis_vec(n, k)).collect::<Vec<_>>());
    let mut found: Vec<ComoduleFD> = Vec::new();
    let mut total = 0usize;
    for min in minimal_subspaces(&gens, whole, &cands) {
        let sub = reg.restrict(min.vectors())?;
        if found.iter().any(|f| !comodule_homs(f, &sub).is_empty()) {
            continue;
        }
        if comodule_homs(&sub, &sub).len() != 1 {
            continue;
        }
        total += sub.dim() * sub.dim();
        found.push(sub);
    }
    if total != n {
        return Err(HopfError::Decomposition(format!(
            "simple comodules found have squared dimensions summing to {} instead of {}",
            total, n
        )));
    }
    found.sort_by_key(|s| s.dim());
    Ok(found)
}

/// Multiplicity of a simple comodule in a semisimple comodule, by Hom dimension.
pub fn multiplicity(simple: &ComoduleFD, m: &ComoduleFD) -> usize {
    comodule_homs(simple, m).len()
}

pub fn isomorphic(a: &ComoduleFD, b: &ComoduleFD) -> bool {
    if a.dim() != b.dim() {
        return false;
    }
    crate::repcore::find_invertible(&comodule_homs(a, b)).is_some()
}
