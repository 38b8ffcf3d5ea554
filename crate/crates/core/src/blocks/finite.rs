use serde::Serialize;

use crate::hopfcore::{
    comodule_homs, induce, psi, simple_comodules, standard_catalog, CoalgebraFD, ComoduleFD, HopfError, Side,
    TripleFD, TripleObject,
};
use crate::linalg::CoordBasis;
use crate::scalars::CycloElem;

use super::graph::LinkageGraph;
use super::BlockError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseFailure {
    pub clause: String,
    pub object: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockBijectionReport {
    pub triple: String,
    pub big_simple_dims: Vec<usize>,
    pub small_simple_dims: Vec<usize>,
    /// blocks of A-comod and a-comod from the linkage of the regular comodules
    pub big_blocks: Vec<Vec<usize>>,
    pub small_blocks: Vec<Vec<usize>>,
    /// tensoring with O preserves every block of A-comod
    pub star_holds: bool,
    pub star_failures: Vec<String>,
    /// the partitions compared: the blocks themselves when (*) holds, otherwise the
    /// coarsening by O-tensoring on the A side and by common restriction on the a side
    pub big_classes: Vec<Vec<usize>>,
    pub small_classes: Vec<Vec<usize>>,
    /// pairs (A-class, a-class)
    pub correspondence: Vec<(usize, usize)>,
    pub bijective: bool,
    pub clause_a: bool,
    pub clause_b: bool,
    pub regular_block_matches: bool,
    pub failures: Vec<ClauseFailure>,
}

impl BlockBijectionReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.clause_a && self.clause_b && self.regular_block_matches
    }
}

struct Side_ {
    simples: Vec<ComoduleFD>,
}

impl Side_ {
    fn new(coalg: &CoalgebraFD, order: u32) -> Result<Self, BlockError> {
        Ok(Side_ { simples: simple_comodules(coalg, order)? })
    }

    /// Multiplicity of each simple in a semisimple comodule.
    fn constituents(&self, n: &ComoduleFD) -> Result<Vec<usize>, BlockError> {
        let mult: Vec<usize> = self.simples.iter().map(|s| comodule_homs(s, n).len()).collect();
        let total: usize = mult.iter().zip(&self.simples).map(|(m, s)| m * s.dim()).sum();
        if total != n.dim() {
            return Err(HopfError::Decomposition(format!(
                "comodule of dimension {} is not a sum of simples (found {})",
                n.dim(),
                total
            ))
            .into());
        }
        Ok(mult)
    }

    /// Linkage through the regular comodule: simples sharing an indecomposable summand.
    /// The isotypic components must span the regular comodule; then every summand is
    /// simple and no two simples are linked.
    fn linkage(&self, coalg: &CoalgebraFD) -> Result<LinkageGraph<usize>, BlockError> {
        let reg = ComoduleFD::regular(coalg, Side::Left);
        let mut span = CoordBasis::<CycloElem>::new(reg.dim());
        for s in &self.simples {
            for h in comodule_homs(s, &reg) {
                for c in h.columns() {
                    span.push(c);
                }
            }
        }
        if span.len() != reg.dim() {
            return Err(BlockError::Unsupported("linkage for coalgebras that are not cosemisimple".into()));
        }
        Ok(LinkageGraph::new((0..self.simples.len()).collect()))
    }
}

/// Index of the class containing every constituent, if there is one.
fn class_of(mult: &[usize], classes: &[Vec<usize>]) -> Option<usize> {
    let present: Vec<usize> = (0..mult.len()).filter(|&k| mult[k] > 0).collect();
    if present.is_empty() {
        return None;
    }
    classes.iter().position(|c| present.iter().all(|k| c.contains(k)))
}

fn describe(mult: &[usize]) -> String {
    let parts: Vec<String> =
        mult.iter().enumerate().filter(|(_, &m)| m > 0).map(|(k, m)| format!("{}x simple {}", m, k)).collect();
    parts.join(" + ")
}

/// Compares the blocks of A-comod and a-comod for a triple of cosemisimple coalgebras and
/// checks the correspondence clauses on the standard catalog:
/// (a) N lies in the A-class alpha iff Res(N) lies in the matching a-class,
/// (b) M lies in an a-class iff Ind(M) lies in the matching A-class,
/// and that the trivial objects and the objects of Cat over the regular block match up.
pub fn finite_block_bijection(t: &TripleFD) -> Result<BlockBijectionReport, BlockError> {
    let big = Side_::new(t.big().coalgebra(), t.eigen_order())?;
    let small = Side_::new(t.small(), t.eigen_order())?;
    let mut big_graph = big.linkage(t.big().coalgebra())?;
    let mut small_graph = small.linkage(t.small())?;
    let big_blocks = big_graph.components();
    let small_blocks = small_graph.components();

    // condition (*): O (x) S stays in the block of S
    let mut star_failures = Vec::new();
    for (k, s) in big.simples.iter().enumerate() {
        let free = TripleObject::free_object(t, s)?.comodule(t.big_dim());
        let mult = big.constituents(&free)?;
        for (j, &m) in mult.iter().enumerate() {
            if m > 0 {
                if !big_graph.same_component(&k, &j) {
                    star_failures.push(format!("O (x) simple A-comodule {} contains simple A-comodule {}", k, j));
                }
                big_graph.link(&k, &j);
            }
        }
    }
    // a-simples occurring in the restriction of one A-simple are identified
    let res_mult: Vec<Vec<usize>> =
        big.simples.iter().map(|s| small.constituents(&t.res(s)?)).collect::<Result<_, BlockError>>()?;
    for mult in &res_mult {
        let present: Vec<usize> = (0..mult.len()).filter(|&j| mult[j] > 0).collect();
        for w in present.windows(2) {
            small_graph.link(&w[0], &w[1]);
        }
    }
    let big_classes = big_graph.components();
    let small_classes = small_graph.components();

    let mut failures = Vec::new();
    let mut correspondence = Vec::new();
    for (alpha, class) in big_classes.iter().enumerate() {
        let mut targets: Vec<usize> = Vec::new();
        for &k in class {
            match class_of(&res_mult[k], &small_classes) {
                Some(b) => {
                    if !targets.contains(&b) {
                        targets.push(b);
                    }
                }
                None => failures.push(ClauseFailure {
                    clause: "correspondence".into(),
                    object: format!("simple A-comodule {}", k),
                    detail: "restriction meets several a-classes".into(),
                }),
            }
        }
        if targets.len() == 1 {
            correspondence.push((alpha, targets[0]));
        } else {
            failures.push(ClauseFailure {
                clause: "correspondence".into(),
                object: format!("A-class {}", alpha),
                detail: format!("restrictions land in {} a-classes", targets.len()),
            });
        }
    }
    let mut image: Vec<usize> = correspondence.iter().map(|p| p.1).collect();
    image.sort();
    image.dedup();
    let bijective = correspondence.len() == big_classes.len()
        && image.len() == correspondence.len()
        && image.len() == small_classes.len();
    let forward = |a: usize| correspondence.iter().find(|p| p.0 == a).map(|p| p.1);
    let backward = |b: usize| correspondence.iter().find(|p| p.1 == b).map(|p| p.0);

    let catalog = standard_catalog(t)?;
    let mut big_catalog: Vec<(String, ComoduleFD)> = Vec::new();
    for (k, s) in big.simples.iter().enumerate() {
        big_catalog.push((format!("simple A-comodule {}", k), s.clone()));
    }
    big_catalog.push(("regular A".into(), t.big_regular()));
    big_catalog.push(("ground field".into(), ComoduleFD::trivial(t.big().coalgebra(), t.big().unit())?));
    for (name, x) in &catalog.objects {
        big_catalog.push((format!("underlying {}", name), x.comodule(t.big_dim())));
    }

    let mut clause_a = bijective;
    for (name, n) in &big_catalog {
        let cls = class_of(&big.constituents(n)?, &big_classes);
        let rcls = class_of(&small.constituents(&t.res(n)?)?, &small_classes);
        for alpha in 0..big_classes.len() {
            let lhs = cls == Some(alpha);
            let rhs = forward(alpha).is_some() && rcls == forward(alpha);
            if lhs != rhs {
                clause_a = false;
                failures.push(ClauseFailure {
                    clause: "(a)".into(),
                    object: name.clone(),
                    detail: format!("membership in A-class {} is {} but its restriction disagrees", alpha, lhs),
                });
            }
        }
    }

    let mut clause_b = bijective;
    for (name, m) in &catalog.comodules {
        let mult = small.constituents(m)?;
        let cls = class_of(&mult, &small_classes);
        let ind = induce(t, m)?.object.comodule(t.big_dim());
        let icls = class_of(&big.constituents(&ind)?, &big_classes);
        for beta in 0..small_classes.len() {
            let lhs = cls == Some(beta);
            let rhs = backward(beta).is_some() && icls == backward(beta);
            if lhs != rhs {
                clause_b = false;
                failures.push(ClauseFailure {
                    clause: "(b)".into(),
                    object: name.clone(),
                    detail: format!("{}: membership in a-class {} is {} but Ind disagrees", describe(&mult), beta, lhs),
                });
            }
        }
    }

    let big_trivial = ComoduleFD::trivial(t.big().coalgebra(), t.big().unit())?;
    let big_regular_class = class_of(&big.constituents(&big_trivial)?, &big_classes);
    let small_regular_class = class_of(&small.constituents(&t.small_trivial()?)?, &small_classes);
    let mut regular_block_matches =
        big_regular_class.is_some() && big_regular_class.and_then(forward) == small_regular_class;
    if !regular_block_matches {
        failures.push(ClauseFailure {
            clause: "regular block".into(),
            object: "ground field".into(),
            detail: "trivial comodules lie in non-matching classes".into(),
        });
    }
    // objects of Cat over the regular block go to comodules in the regular a-block
    for (name, x) in &catalog.objects {
        let over_regular = class_of(&big.constituents(&x.comodule(t.big_dim()))?, &big_classes) == big_regular_class;
        let image = psi(t, x)?.comodule;
        let lands_regular = class_of(&small.constituents(&image)?, &small_classes) == small_regular_class;
        if over_regular != lands_regular {
            regular_block_matches = false;
            failures.push(ClauseFailure {
                clause: "regular block".into(),
                object: name.clone(),
                detail: format!("over the regular block: {}, image in the regular a-block: {}", over_regular, lands_regular),
            });
        }
    }

    Ok(BlockBijectionReport {
        triple: t.name().to_string(),
        big_simple_dims: big.simples.iter().map(|s| s.dim()).collect(),
        small_simple_dims: small.simples.iter().map(|s| s.dim()).collect(),
        big_blocks,
        small_blocks,
        star_holds: star_failures.is_empty(),
        star_failures,
        big_classes,
        small_classes,
        correspondence,
        bijective,
        clause_a,
        clause_b,
        regular_block_matches,
        failures,
    })
}
