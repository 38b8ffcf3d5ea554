use std::collections::BTreeMap;

use serde::Serialize;

use crate::repcore::{composition_factors, weyl_module};
use crate::rootdata::{CartanType, RootDatum, Weight, Window};
use crate::scalars::QParams;

use super::graph::LinkageGraph;
use super::BlockError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockEntry {
    pub weight: Weight,
    /// the block label: the canonical representative of the dot orbit, which does not
    /// depend on the window
    pub block: Weight,
    pub singular: bool,
    /// (lambda1, mu) with lambda = lambda1 + phi_sc(mu), for dominant weights
    pub steinberg: Option<(Weight, Vec<i64>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTable {
    pub cartan_type: CartanType,
    pub ell: u32,
    pub entries: Vec<BlockEntry>,
}

impl BlockTable {
    /// The window partitioned by block, each part sorted, parts in order of their
    /// smallest weight.
    pub fn partition(&self) -> Vec<Vec<Weight>> {
        let mut by_block: BTreeMap<&Weight, Vec<Weight>> = BTreeMap::new();
        for e in &self.entries {
            by_block.entry(&e.block).or_default().push(e.weight.clone());
        }
        let mut parts: Vec<Vec<Weight>> = by_block.into_values().collect();
        for p in parts.iter_mut() {
            p.sort();
        }
        parts.sort();
        parts
    }

    pub fn block_count(&self) -> usize {
        self.partition().len()
    }

    pub fn entry(&self, w: &Weight) -> Option<&BlockEntry> {
        self.entries.iter().find(|e| &e.weight == w)
    }

    /// Restriction to the dominant weights, partitioned.
    pub fn dominant_partition(&self) -> Vec<Vec<Weight>> {
        self.partition()
            .into_iter()
            .map(|p| p.into_iter().filter(|w| w.is_dominant()).collect::<Vec<_>>())
            .filter(|p| !p.is_empty())
            .collect()
    }
}

/// Every weight of the window labelled by its dot-orbit representative.
pub fn predicted_blocks(window: &Window, params: &QParams, datum: &RootDatum) -> Result<BlockTable, BlockError> {
    let mut entries = Vec::new();
    for w in window.points() {
        let c = datum.canonical(&w, params)?;
        let steinberg = if w.is_dominant() { Some(datum.steinberg_decompose(&w, params)?) } else { None };
        entries.push(BlockEntry { weight: w, block: c.rep, singular: c.singular, steinberg });
    }
    Ok(BlockTable { cartan_type: datum.cartan_type(), ell: params.ell(), entries })
}

fn check_a1(params: &QParams) -> Result<RootDatum, BlockError> {
    if params.rank() != 1 {
        return Err(BlockError::Unsupported("observed linkage is computed for A1 only".into()));
    }
    Ok(RootDatum::build(CartanType::A1))
}

/// Nodes are the dominant weights of the window; every Weyl module W(lambda) in the window
/// links all of its composition factors that lie in the window.
pub fn observed_blocks_a1(window: &Window, params: &QParams) -> Result<LinkageGraph<Weight>, BlockError> {
    let datum = check_a1(params)?;
    let nodes: Vec<Weight> = window.points().into_iter().filter(|w| w.is_dominant()).collect();
    let mut g = LinkageGraph::new(nodes.clone());
    for lam in &nodes {
        let w = weyl_module(&datum, params, lam.0[0])?;
        let factors: Vec<Weight> = composition_factors(&w)?.into_iter().map(|f| f.highest_weight).collect();
        for a in &factors {
            for b in &factors {
                g.link(a, b);
            }
        }
    }
    Ok(g)
}

/// For A1: the reflection of lambda across the nearest wall below lambda + rho, when it
/// is dominant and lambda is regular.
pub fn linkage_partner(lam: i64, params: &QParams) -> Option<i64> {
    let l = params.ell_i(0) as i64;
    let mu = lam + 1;
    if mu <= 0 {
        return None;
    }
    let wall = l * mu.div_euclid(l);
    if wall == mu {
        return None;
    }
    let reflected = 2 * wall - mu;
    if reflected > 0 {
        Some(reflected - 1)
    } else {
        None
    }
}

/// Components of the dominant window weights under lambda -- partner(lambda), keeping only
/// edges with both ends in the window.
pub fn chain_components(window: &Window, params: &QParams) -> Result<Vec<Vec<Weight>>, BlockError> {
    check_a1(params)?;
    let nodes: Vec<Weight> = window.points().into_iter().filter(|w| w.is_dominant()).collect();
    let mut g = LinkageGraph::new(nodes.clone());
    for lam in &nodes {
        if let Some(p) = linkage_partner(lam.0[0], params) {
            g.link(lam, &Weight::a1(p));
        }
    }
    Ok(g.components())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockComparison {
    pub predicted: Vec<Weight>,
    pub observed_parts: Vec<Vec<Weight>>,
    /// the part is connected through partners inside the window
    pub chain_connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageComparison {
    /// every observed component lies inside one predicted block
    pub refines: bool,
    /// observed equals predicted on every chain-connected block
    pub equal_where_chained: bool,
    pub blocks: Vec<BlockComparison>,
}

impl LinkageComparison {
    pub fn holds(&self) -> bool {
        self.refines && self.equal_where_chained
    }
}

/// Compares the observed Weyl-module linkage with the dot-orbit prediction on the
/// dominant weights of an A1 window.
pub fn compare_linkage(window: &Window, params: &QParams) -> Result<LinkageComparison, BlockError> {
    let datum = check_a1(params)?;
    let predicted = predicted_blocks(window, params, &datum)?.dominant_partition();
    let observed = observed_blocks_a1(window, params)?.components();
    let chains = chain_components(window, params)?;
    let refines = observed.iter().all(|o| predicted.iter().any(|p| o.iter().all(|w| p.contains(w))));
    let mut blocks = Vec::new();
    for p in predicted {
        let observed_parts: Vec<Vec<Weight>> = observed.iter().filter(|o| p.contains(&o[0])).cloned().collect();
        let chain_connected = chains.iter().any(|c| *c == p);
        blocks.push(BlockComparison { predicted: p, observed_parts, chain_connected });
    }
    let equal_where_chained = blocks.iter().filter(|b| b.chain_connected).all(|b| b.observed_parts.len() == 1);
    Ok(LinkageComparison { refines, equal_where_chained, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1(ell: u32) -> (RootDatum, QParams) {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(ell).unwrap();
        (rd, p)
    }

    fn ws(v: &[i64]) -> Vec<Weight> {
        v.iter().map(|&x| Weight::a1(x)).collect()
    }

    #[test]
    fn mod_eight_blocks() {
        let (rd, p) = a1(4);
        let t = predicted_blocks(&Window::interval(0, 7), &p, &rd).unwrap();
        assert_eq!(t.partition(), vec![ws(&[0, 6]), ws(&[1, 5]), ws(&[2, 4]), ws(&[3]), ws(&[7])]);
        let singular: Vec<i64> = t.entries.iter().filter(|e| e.singular).map(|e| e.weight.0[0]).collect();
        assert_eq!(singular, vec![3, 7]);
        assert_eq!(t.entry(&Weight::a1(5)).unwrap().steinberg, Some((Weight::a1(1), vec![1])));
    }

    #[test]
    fn one_point_window() {
        let (rd, p) = a1(4);
        assert_eq!(predicted_blocks(&Window::interval(5, 5), &p, &rd).unwrap().block_count(), 1);
        assert!(predicted_blocks(&Window::interval(1, 0), &p, &rd).unwrap().entries.is_empty());
    }

    #[test]
    fn partners() {
        let (_, p) = a1(4);
        assert_eq!(linkage_partner(4, &p), Some(2));
        assert_eq!(linkage_partner(6, &p), Some(0));
        assert_eq!(linkage_partner(8, &p), Some(6));
        assert_eq!(linkage_partner(1, &p), None);
        assert_eq!(linkage_partner(3, &p), None);
        assert_eq!(linkage_partner(-1, &p), None);
    }

    #[test]
    fn weyl_module_edges() {
        let (_, p) = a1(4);
        let g = observed_blocks_a1(&Window::interval(0, 10), &p).unwrap();
        assert!(g.has_edge(&Weight::a1(4), &Weight::a1(2)));
        assert!(g.has_edge(&Weight::a1(5), &Weight::a1(1)));
        // W(0) and W(1) are simple
        assert_eq!(observed_blocks_a1(&Window::interval(0, 1), &p).unwrap().edge_count(), 0);
    }
}
