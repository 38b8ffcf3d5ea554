use std::collections::BTreeSet;

use serde::Serialize;

/// Undirected graph on simple-object labels; its connected components are the blocks it
/// witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageGraph<N> {
    nodes: Vec<N>,
    edges: BTreeSet<(usize, usize)>,
}

impl<N: Clone + PartialEq + Ord> LinkageGraph<N> {
    pub fn new(nodes: Vec<N>) -> Self {
        LinkageGraph { nodes, edges: BTreeSet::new() }
    }

    pub fn nodes(&self) -> &[N] {
        &self.nodes
    }

    pub fn edges(&self) -> impl Iterator<Item = (&N, &N)> + '_ {
        self.edges.iter().map(|&(a, b)| (&self.nodes[a], &self.nodes[b]))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, n: &N) -> Option<usize> {
        self.nodes.iter().position(|x| x == n)
    }

    /// Adds an edge between two existing nodes; returns false if either is missing.
    /// Loops are ignored.
    pub fn link(&mut self, a: &N, b: &N) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => {
                if i != j {
                    self.edges.insert((i.min(j), i.max(j)));
                }
                true
            }
            _ => false,
        }
    }

    pub fn has_edge(&self, a: &N, b: &N) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    /// Component index of every node, numbered by first appearance.
    fn labels(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for k in 0..n {
            let r = find(&mut parent, k);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            out[k] = ids[r];
        }
        out
    }

    /// Connected components, each sorted, listed by smallest element.
    pub fn components(&self) -> Vec<Vec<N>> {
        let labels = self.labels();
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut comps: Vec<Vec<N>> = vec![Vec::new(); count];
        for (k, &l) in labels.iter().enumerate() {
            comps[l].push(self.nodes[k].clone());
        }
        for c in comps.iter_mut() {
            c.sort();
        }
        comps.sort();
        comps
    }

    pub fn same_component(&self, a: &N, b: &N) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => {
                let l = self.labels();
                l[i] == l[j]
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_of_a_path_and_a_point() {
        let mut g = LinkageGraph::new(vec![3, 1, 2, 5]);
        assert!(g.link(&1, &2));
        assert!(g.link(&2, &5));
        assert!(!g.link(&2, &9));
        g.link(&5, &5);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.components(), vec![vec![1, 2, 5], vec![3]]);
        assert!(g.same_component(&1, &5));
        assert!(!g.same_component(&1, &3));
        assert!(g.has_edge(&5, &2));
    }

    #[test]
    fn empty_graph() {
        let g: LinkageGraph<i32> = LinkageGraph::new(vec![]);
        assert!(g.components().is_empty());
    }
}
