use std::collections::BTreeMap;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::blocks::{compare_linkage, finite_block_bijection, observed_blocks_a1, predicted_blocks, steinberg_verify};
use crate::frobenius::{
    build_hecke_structure, factorization_reconstruct, frobenius_pullback, lattice_for, restrict_to_small,
    verify_commutator_identity, DualGroupRep,
};
use crate::hopfcore::{
    check_conditions, finite_group_triple, identity_point, point_product, simple_comodules, small_simples,
    standard_catalog, twist_coherence, twist_object, verify_equivalence, Flatness, GroupTable, TripleFD, TripleObject,
};
use crate::repcore::{relation_check, tensor_product, weyl_module, Generator, WeightModule};
use crate::rootdata::{CartanType, SmallLattice};
use crate::scalars::{CycloElem, Ring};

use super::config::{RunConfig, Suite};
use super::report::Report;
use super::CliError;

struct Clock {
    enabled: bool,
    times: BTreeMap<String, u128>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Clock { enabled, times: BTreeMap::new() }
    }

    fn run<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.times.insert(name.to_string(), start.elapsed().as_millis());
        }
        out
    }

    fn finish(self, r: &mut Report) {
        if self.enabled {
            r.timing = Some(self.times);
        }
    }
}

fn base_params(cfg: &RunConfig) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("type".to_string(), cfg.cartan_type.to_string()),
        ("ell".to_string(), cfg.ell.to_string()),
        ("seed".to_string(), cfg.seed.to_string()),
    ])
}

/// Predicted blocks on the window; for A1 with the verify suite, also the Weyl-module
/// linkage, its comparison with the prediction and the Steinberg check per weight.
pub fn cmd_linkage(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let datum = cfg.datum();
    let params = cfg.params()?;
    let window = cfg.window_box()?;
    let mut p = base_params(cfg);
    p.insert("window".into(), cfg.window.clone());
    p.insert("suite".into(), format!("{:?}", cfg.suite).to_lowercase());
    let mut r = Report::new("linkage", p);
    let mut clock = Clock::new(cfg.timing);

    let table = clock
        .run("predicted blocks", || predicted_blocks(&window, &params, &datum))
        .map_err(|e| CliError::Config(e.to_string()))?;
    let singular = table.entries.iter().filter(|e| e.singular).count();
    r.pass("predicted blocks", format!("{} weights in {} blocks, {} singular", table.entries.len(), table.block_count(), singular));

    if cfg.suite == Suite::Verify {
        if cfg.cartan_type != CartanType::A1 {
            r.skip("observed linkage", "Weyl-module linkage is computed for A1 only");
        } else {
            let res = clock.run("observed linkage", || -> Result<_, crate::blocks::BlockError> {
                let g = observed_blocks_a1(&window, &params)?;
                let cmp = compare_linkage(&window, &params)?;
                Ok((g, cmp))
            });
            match res {
                Ok((g, cmp)) => {
                    let bad: Vec<_> = g
                        .edges()
                        .filter(|(a, b)| !datum.same_block(a, b, &params).unwrap_or(false))
                        .map(|(a, b)| json!([a, b]))
                        .collect();
                    r.record(
                        "observed linkage",
                        bad.is_empty(),
                        format!("{} edges, {} components", g.edge_count(), g.components().len()),
                        || json!({ "edges_across_orbits": bad }),
                    );
                    let chained = cmp.blocks.iter().filter(|b| b.chain_connected).count();
                    r.record(
                        "linkage matches prediction",
                        cmp.holds(),
                        format!(
                            "observed refines predicted: {}; equal on the {} of {} blocks chained in the window: {}",
                            cmp.refines,
                            chained,
                            cmp.blocks.len(),
                            cmp.equal_where_chained
                        ),
                        || {
                            json!(cmp
                                .blocks
                                .iter()
                                .filter(|b| b.chain_connected && b.observed_parts.len() != 1)
                                .collect::<Vec<_>>())
                        },
                    );
                }
                Err(e) => r.fail("observed linkage", e.to_string(), json!({ "error": e.to_string() })),
            }
            let dominant: Vec<i64> = window.points().iter().filter(|w| w.is_dominant()).map(|w| w.0[0]).collect();
            let reports = clock.run("steinberg", || {
                dominant.iter().map(|&l| steinberg_verify(l, &params)).collect::<Result<Vec<_>, _>>()
            });
            match reports {
                Ok(reps) => {
                    let bad: Vec<_> = reps.iter().filter(|s| !s.holds()).collect();
                    r.record("steinberg", bad.is_empty(), format!("{} dominant weights", reps.len()), || json!(bad));
                }
                Err(e) => r.fail("steinberg", e.to_string(), json!({ "error": e.to_string() })),
            }
        }
    }
    r.artifacts.block_table = Some(table);
    clock.finish(&mut r);
    Ok(r)
}

/// A copy of the module with one nonzero E entry changed.
fn corrupted(m: &WeightModule) -> WeightModule {
    let (row, col, x) = m.e(0).entries().next().map(|(r, c, x)| (r, c, x.clone())).expect("E acts nontrivially");
    m.with_entry(Generator::E, 0, row, col, x.add_ref(&CycloElem::one()))
}

/// Defining relations, the commutator identity, Frobenius round trips and Hecke
/// structures on a catalog of A1 modules.
pub fn cmd_frobenius_check(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    if cfg.cartan_type != CartanType::A1 {
        return Err(CliError::Config("frobenius-check runs on type A1".into()));
    }
    let datum = cfg.datum();
    let params = cfg.params()?;
    let mut p = base_params(cfg);
    p.insert("corrupt".into(), cfg.corrupt.to_string());
    let mut r = Report::new("frobenius-check", p);
    let mut clock = Clock::new(cfg.timing);
    let err = |e: &dyn std::fmt::Display| CliError::Input(e.to_string());

    let mut catalog: Vec<(String, WeightModule)> = Vec::new();
    for lam in 0..=8 {
        catalog.push((format!("W({})", lam), weyl_module(&datum, &params, lam).map_err(|e| err(&e))?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pairs = vec![(1i64, 1i64)];
    for _ in 0..3 {
        pairs.push((rng.gen_range(0..=4), rng.gen_range(0..=4)));
    }
    for (a, b) in &pairs {
        let t = tensor_product(&catalog[*a as usize].1, &catalog[*b as usize].1).map_err(|e| err(&e))?;
        catalog.push((format!("W({}) (x) W({})", a, b), t));
    }
    let reps: Vec<DualGroupRep> =
        (0..=4).map(|n| DualGroupRep::sl2_irrep(&datum, n)).collect::<Result<_, _>>().map_err(|e| err(&e))?;
    for (n, v) in reps.iter().enumerate() {
        catalog.push((format!("Fr*(V{})", n), frobenius_pullback(v, &params).map_err(|e| err(&e))?));
    }
    if cfg.corrupt {
        let bad = corrupted(&catalog[3].1);
        catalog.push(("W(3) with a damaged E entry".into(), bad));
    }

    let failures = clock.run("relations", || {
        catalog
            .iter()
            .filter_map(|(name, m)| {
                let rep = relation_check(m);
                if rep.passed() {
                    None
                } else {
                    Some(json!({ "module": name, "relations": rep.failures() }))
                }
            })
            .collect::<Vec<_>>()
    });
    r.record("relations", failures.is_empty(), format!("{} modules", catalog.len()), || json!(failures));

    let failures: Vec<String> = clock.run("commutator identity", || {
        catalog.iter().filter(|(_, m)| !verify_commutator_identity(m, 0).holds).map(|(n, _)| n.clone()).collect()
    });
    r.record("commutator identity", failures.is_empty(), format!("{} modules", catalog.len()), || json!(failures));

    let failures: Vec<String> = clock.run("frobenius round trip", || {
        reps.iter()
            .enumerate()
            .filter(|(_, v)| {
                let lattice = lattice_for(&[v]);
                let Ok(m) = frobenius_pullback(v, &params) else { return true };
                let back = factorization_reconstruct(&m, lattice).map(|b| b.same_as(v)).unwrap_or(false);
                !back || !restrict_to_small(&m, SmallLattice::PhiSc).is_trivial()
            })
            .map(|(n, _)| format!("V{}", n))
            .collect()
    });
    r.record("frobenius round trip", failures.is_empty(), format!("{} dual representations", reps.len()), || {
        json!(failures)
    });

    let failures: Vec<String> = clock.run("hecke structures", || {
        (0..=3)
            .filter_map(|lam| {
                let ok = build_hecke_structure(&catalog[lam].1, &reps[..3], None)
                    .and_then(|h| Ok(h.all_invertible() && h.check_axioms(&[])?.iter().all(|c| c.holds)))
                    .unwrap_or(false);
                (!ok).then(|| format!("W({})", lam))
            })
            .collect()
    });
    r.record("hecke structures", failures.is_empty(), "W(0)..W(3) against V0, V1, V2", || json!(failures));
    clock.finish(&mut r);
    Ok(r)
}

fn unit_point(n: usize, k: usize) -> Vec<CycloElem> {
    (0..n).map(|j| if j == k { CycloElem::one() } else { CycloElem::zero() }).collect()
}

fn triple_from_text(text: &str) -> Result<(GroupTable, Vec<usize>, TripleFD), CliError> {
    let (g, normal) = GroupTable::parse(text).map_err(|e| CliError::Input(e.to_string()))?;
    if normal.is_empty() {
        return Err(CliError::Input("the group file names no subgroup (`normal:` line)".into()));
    }
    let t = finite_group_triple(&g, &normal).map_err(|e| CliError::Input(e.to_string()))?;
    Ok((g, normal, t))
}

/// Conditions, the adjunction on the catalog, the block correspondence and twisting for
/// the triple of a finite group and a normal subgroup read from a group table.
pub fn cmd_triple_verify(cfg: &RunConfig, group_text: &str) -> Result<Report, CliError> {
    let (g, normal, t) = triple_from_text(group_text)?;
    let mut p = BTreeMap::new();
    p.insert("group_order".to_string(), g.order().to_string());
    p.insert("subgroup".to_string(), normal.iter().map(|&k| g.names()[k].clone()).collect::<Vec<_>>().join(" "));
    p.insert("seed".to_string(), cfg.seed.to_string());
    let mut r = Report::new("triple-verify", p);
    let mut clock = Clock::new(cfg.timing);

    let cond = clock.run("conditions", || check_conditions(&t));
    r.record("condition (i)", cond.i, "O^A = ground field", || json!({ "condition": "(i)" }));
    r.record(
        "condition (ii)",
        cond.ii,
        format!("invariants of A under a: dimension {} against dim O = {}", cond.invariants_dim.0, cond.invariants_dim.1),
        || json!({ "invariants_dim": cond.invariants_dim }),
    );
    r.record(
        "condition (iii)",
        cond.iii,
        format!("ideal dimensions {:?}", cond.ideal_dims),
        || json!({ "ideal_dims": cond.ideal_dims }),
    );
    match &cond.iv_a {
        Flatness::Free { generators } => r.pass("condition (iv a)", format!("A is free over O on {} generators", generators.len())),
        Flatness::Unknown => r.fail("condition (iv a)", "no free basis found in the search", json!({ "search": "exhausted" })),
    }
    match &cond.iv_b {
        Some(w) => r.record(
            "condition (iv b)",
            w.holds(),
            format!("{} sequences", w.sequences),
            || json!({ "exact": w.exact, "faithful_on_simples": w.faithful_on_simples }),
        ),
        None => r.fail("condition (iv b)", "witness could not be computed", json!(null)),
    }

    let counts = clock.run("simple counts", || -> Result<(usize, usize), crate::hopfcore::HopfError> {
        Ok((simple_comodules(t.big().coalgebra(), t.eigen_order())?.len(), small_simples(&t)?.len()))
    });
    match counts {
        Ok((nb, ns)) => r.pass(
            "simple counts",
            format!("dim O = {}, dim A = {}, dim a = {}; {} simple A-comodules, {} simple a-comodules", t.o_dim(), t.big_dim(), t.small_dim(), nb, ns),
        ),
        Err(e) => r.fail("simple counts", e.to_string(), json!({ "error": e.to_string() })),
    }

    let eq = clock.run("equivalence", || standard_catalog(&t).and_then(|c| verify_equivalence(&t, &c)));
    match eq {
        Ok(rep) => r.record(
            "equivalence",
            rep.passed(),
            format!("{} adjunction maps checked", rep.entries.len()),
            || json!(rep.counterexamples()),
        ),
        Err(e) => r.fail("equivalence", e.to_string(), json!({ "error": e.to_string() })),
    }

    match clock.run("block bijection", || finite_block_bijection(&t)) {
        Ok(b) => r.record(
            "block bijection",
            b.passed(),
            format!(
                "{} A-blocks, {} a-blocks; condition (*) {}; {} classes matched",
                b.big_blocks.len(),
                b.small_blocks.len(),
                if b.star_holds { "holds" } else { "fails, comparing saturated classes" },
                b.correspondence.len()
            ),
            || json!(b.failures),
        ),
        Err(e) => r.fail("block bijection", e.to_string(), json!({ "error": e.to_string() })),
    }

    let twist = clock.run("twisting coherence", || -> Result<Vec<serde_json::Value>, crate::hopfcore::HopfError> {
        let x = TripleObject::big_object(&t);
        let n = t.o_dim();
        let mut bad = Vec::new();
        if twist_object(&t, &identity_point(&t), &x)? != x {
            bad.push(json!({ "identity": true }));
        }
        for a in 0..n {
            for b in 0..n {
                let (pa, pb) = (unit_point(n, a), unit_point(n, b));
                let lhs = twist_object(&t, &pa, &twist_object(&t, &pb, &x)?)?;
                if lhs != twist_object(&t, &point_product(&t, &pa, &pb), &x)? {
                    bad.push(json!({ "points": [a, b] }));
                }
                for c in 0..n {
                    if !twist_coherence(&t, [&pa, &pb, &unit_point(n, c)], &x)? {
                        bad.push(json!({ "points": [a, b, c] }));
                    }
                }
            }
        }
        Ok(bad)
    });
    match twist {
        Ok(bad) => r.record(
            "twisting coherence",
            bad.is_empty(),
            format!("all {} points of O", t.o_dim()),
            || json!(bad),
        ),
        Err(e) => r.fail("twisting coherence", e.to_string(), json!({ "error": e.to_string() })),
    }
    clock.finish(&mut r);
    Ok(r)
}
