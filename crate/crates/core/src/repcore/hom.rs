use std::collections::BTreeMap;

use crate::linalg::{nullspace, SparseVec};
use crate::scalars::{CycloElem, Ring};

use super::module::{Mat, WeightModule};
use super::RepError;

/// Basis of {X : dst_k X = X src_k for all k}, with X[r][c] allowed to be nonzero only
/// when dst_labels[r] == src_labels[c].
pub fn intertwiners<L: PartialEq>(src: &[&Mat], dst: &[&Mat], src_labels: &[L], dst_labels: &[L]) -> Vec<Mat> {
    assert_eq!(src.len(), dst.len(), "generator lists must pair up");
    let (ns, nd) = (src_labels.len(), dst_labels.len());
    let mut var = BTreeMap::new();
    let mut vars = Vec::new();
    for r in 0..nd {
        for c in 0..ns {
            if dst_labels[r] == src_labels[c] {
                var.insert((r, c), vars.len());
                vars.push((r, c));
            }
        }
    }
    let mut eqs: Vec<SparseVec<CycloElem>> = Vec::new();
    for (gs, gd) in src.iter().zip(dst) {
        let gd_t = gd.transpose();
        let mut rows: BTreeMap<(usize, usize), SparseVec<CycloElem>> = BTreeMap::new();
        for (idx, &(k, c)) in vars.iter().enumerate() {
            // (gd X)[r][c] gets gd[r][k] X[k][c]
            for (r, x) in gd_t.row(k) {
                let e = rows.entry((*r, c)).or_default().entry(idx).or_insert_with(CycloElem::zero);
                *e = e.add_ref(x);
            }
            // (X gs)[k][c'] gets X[k][c] gs[c][c']
            for (c2, x) in gs.row(c) {
                let e = rows.entry((k, *c2)).or_default().entry(idx).or_insert_with(CycloElem::zero);
                *e = e.sub_ref(x);
            }
        }
        for (_, mut row) in rows {
            row.retain(|_, x| !x.is_zero());
            if !row.is_empty() {
                eqs.push(row);
            }
        }
    }
    nullspace(&eqs, vars.len())
        .into_iter()
        .map(|v| {
            Mat::from_triplets(
                nd,
                ns,
                v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (vars[i].0, vars[i].1, x)),
            )
        })
        .collect()
}

/// Basis of Hom_U(M, N): weight-preserving maps commuting with every generator.
pub fn hom_space(m: &WeightModule, n: &WeightModule) -> Result<Vec<Mat>, RepError> {
    m.same_setting(n)?;
    let src = m.all_generators();
    let dst = n.all_generators();
    Ok(intertwiners(&src, &dst, m.weights(), n.weights()))
}

/// Some invertible element of the span of `basis`, trying a few fixed combinations.
pub fn find_invertible(basis: &[Mat]) -> Option<Mat> {
    let first = basis.first()?;
    if first.rows() != first.cols() {
        return None;
    }
    for shift in 0..4i64 {
        let mut acc = Mat::zeros(first.rows(), first.cols());
        for (k, b) in basis.iter().enumerate() {
            let c = CycloElem::from_int(1 + ((k as i64 + shift) * (k as i64 + 2 * shift + 1)) % 7);
            acc = acc.add(&b.scale(&c));
        }
        if acc.rank() == acc.rows() {
            return Some(acc);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::weyl_module;
    use crate::rootdata::{CartanType, RootDatum};

    #[test]
    fn endomorphisms_of_weyl_modules() {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(4).unwrap();
        for lam in 0..8 {
            let w = weyl_module(&rd, &p, lam).unwrap();
            let h = hom_space(&w, &w).unwrap();
            assert_eq!(h.len(), 1, "End W({})", lam);
            assert!(find_invertible(&h).is_some());
        }
        // the head map W(4) -> L(4) exists, nothing from W(2) to W(4) is onto
        let w4 = weyl_module(&rd, &p, 4).unwrap();
        let w2 = weyl_module(&rd, &p, 2).unwrap();
        assert_eq!(hom_space(&w2, &w4).unwrap().len(), 1);
        assert_eq!(hom_space(&w4, &w2).unwrap().len(), 0);
    }
}
