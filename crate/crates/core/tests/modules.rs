use qgroup::linalg::closure;
use qgroup::repcore::*;
use qgroup::rootdata::{CartanType, RootDatum, Weight, Window};
use qgroup::scalars::{CycloElem, QParams, Ring};

fn a1(ell: u32) -> (RootDatum, QParams) {
    let rd = RootDatum::build(CartanType::A1);
    let p = rd.params(ell).unwrap();
    (rd, p)
}

/// Composition series by repeatedly splitting off the smallest closure of a basis vector.
fn series_by_closures(m: &WeightModule) -> Vec<(i64, usize)> {
    let mut cur = m.clone();
    let mut out = Vec::new();
    while cur.dim() > 0 {
        let n = cur.dim();
        let mut best: Option<Submodule> = None;
        for k in 0..n {
            let c = submodule_closure(&cur, &[unit_vector(n, k)]).unwrap();
            if best.as_ref().map_or(true, |b| c.dim() < b.dim()) {
                best = Some(c);
            }
        }
        let s = best.unwrap();
        out.push((s.highest_weight().unwrap().0[0], s.dim()));
        cur = quotient(&cur, &s).unwrap();
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[test]
fn weyl_modules_satisfy_relations() {
    for ell in [4, 6] {
        let (rd, p) = a1(ell);
        for lam in 0..=12 {
            let w = weyl_module(&rd, &p, lam).unwrap();
            assert_eq!(w.dim(), lam as usize + 1);
            let rep = relation_check(&w);
            assert!(rep.passed(), "W({}) at ell {}: {:?}", lam, ell, rep.failures());
        }
    }
}

#[test]
fn tensor_products_satisfy_relations() {
    for ell in [4, 6] {
        let (rd, p) = a1(ell);
        let ws: Vec<WeightModule> = (0..=6).map(|l| weyl_module(&rd, &p, l).unwrap()).collect();
        for a in 0..=6 {
            for b in 0..=6 {
                let route = if (a + b) % 3 == 0 { TensorRoute::Generic } else { TensorRoute::Coproduct };
                let t = tensor_product_via(&ws[a], &ws[b], route).unwrap();
                let rep = relation_check(&t);
                assert!(rep.passed(), "W({})xW({}) at ell {}: {:?}", a, b, ell, rep.failures());
            }
        }
    }
}

#[test]
fn tensor_routes_agree() {
    let (rd, p) = a1(6);
    for (a, b) in [(1, 5), (4, 4), (6, 2)] {
        let x = weyl_module(&rd, &p, a).unwrap();
        let y = weyl_module(&rd, &p, b).unwrap();
        let g = tensor_product_via(&x, &y, TensorRoute::Generic).unwrap();
        let c = tensor_product_via(&x, &y, TensorRoute::Coproduct).unwrap();
        assert!(g.same_matrices(&c), "W({}) x W({})", a, b);
    }
}

#[test]
fn corrupted_module_is_caught() {
    let (rd, p) = a1(4);
    let w = weyl_module(&rd, &p, 5).unwrap();
    let doubled = w.f(0).get(1, 0) * CycloElem::from_int(2);
    let bad = w.with_entry(Generator::F, 0, 1, 0, doubled);
    let rep = relation_check(&bad);
    assert!(!rep.passed());
    assert!(rep.failures().contains(&"[E_0,F_0]"));
    let off = w.with_entry(Generator::E, 0, 3, 0, CycloElem::one());
    assert!(relation_check(&off).failures().contains(&"grading E_0"));
}

#[test]
fn commutator_identity_orderings() {
    for ell in [4, 6] {
        let (rd, p) = a1(ell);
        let mut e_first_failed = false;
        for lam in 0..=8 {
            let w = weyl_module(&rd, &p, lam).unwrap();
            assert!(commutator_identity_residual(&w, 0).is_zero());
            assert!(generic_commutator_residual(&w, 0).unwrap().is_zero());
            e_first_failed |= !commutator_identity_residual_e_first(&w, 0).is_zero();
        }
        assert!(e_first_failed);
    }
}

#[test]
fn factors_match_closure_series() {
    for ell in [4, 6] {
        let (rd, p) = a1(ell);
        for lam in 0..=14 {
            let w = weyl_module(&rd, &p, lam).unwrap();
            let f: Vec<(i64, usize)> =
                composition_factors(&w).unwrap().iter().map(|c| (c.highest_weight.0[0], c.dim)).collect();
            assert_eq!(f, series_by_closures(&w), "W({}) at ell {}", lam, ell);
            assert_eq!(f.iter().map(|x| x.1).sum::<usize>(), w.dim());
        }
    }
}

#[test]
fn factors_lie_in_dot_orbit() {
    for ell in [4, 6] {
        let (rd, p) = a1(ell);
        for lam in 0..=20 {
            let w = weyl_module(&rd, &p, lam).unwrap();
            let orbit = rd.orbit_in_window(&Weight::a1(lam), &Window::interval(0, lam), &p).unwrap();
            for c in composition_factors(&w).unwrap() {
                assert!(orbit.contains(&c.highest_weight), "{} not linked to {}", c.highest_weight, lam);
            }
        }
    }
}

#[test]
fn factors_additive_over_direct_sums() {
    let (rd, p) = a1(4);
    let a = weyl_module(&rd, &p, 6).unwrap();
    let b = weyl_module(&rd, &p, 9).unwrap();
    let s = a.direct_sum(&b).unwrap();
    let mut expect = composition_factors(&a).unwrap();
    expect.extend(composition_factors(&b).unwrap());
    expect.sort_by(|x, y| y.cmp(x));
    assert_eq!(composition_factors(&s).unwrap(), expect);
}

#[test]
fn tensor_factors_sum_to_dimension() {
    let (rd, p) = a1(4);
    let t = tensor_product(&weyl_module(&rd, &p, 3).unwrap(), &weyl_module(&rd, &p, 2).unwrap()).unwrap();
    let f = composition_factors(&t).unwrap();
    assert_eq!(f.iter().map(|c| c.dim).sum::<usize>(), 12);
}

#[test]
fn closure_is_stable_and_minimal() {
    let (rd, p) = a1(6);
    let w = weyl_module(&rd, &p, 10).unwrap();
    for k in 0..w.dim() {
        let s = submodule_closure(&w, &[unit_vector(w.dim(), k)]).unwrap();
        assert!(s.is_stable(&w));
        let again = closure(&w.all_generators(), s.vectors(), w.dim());
        assert_eq!(again.len(), s.dim());
    }
}

#[test]
fn zero_seed_gives_zero() {
    let (rd, p) = a1(4);
    let w = weyl_module(&rd, &p, 3).unwrap();
    let z = vec![CycloElem::zero(); 4];
    assert!(submodule_closure(&w, &[z]).unwrap().is_zero());
}
