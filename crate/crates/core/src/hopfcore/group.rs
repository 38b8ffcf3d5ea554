use std::collections::BTreeMap;

use num::Integer;

use crate::repcore::Mat;
use crate::scalars::{CycloElem, Ring};

use super::algebra::{CoalgebraFD, HopfAlgebraFD};
use super::triple::TripleFD;
use super::HopfError;

/// A finite group given by its multiplication table on named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupTable {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(HopfError::Group("table must be a square array over the element list".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| HopfError::Group("no identity element".into()))?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(HopfError::Group(format!(
                            "not associative on ({}, {}, {})",
                            names[x], names[y], names[z]
                        )));
                    }
                }
            }
            if !(0..n).any(|y| table[x][y] == identity) {
                return Err(HopfError::Group(format!("{} has no inverse", names[x])));
            }
        }
        Ok(GroupTable { names, table, identity })
    }

    /// Parses the text format:
    ///
    /// ```text
    /// elements: e a b
    /// e a -> a
    /// ...
    /// normal: e a
    /// ```
    ///
    /// Blank lines and lines starting with '#' are ignored. Returns the group and the listed
    /// subgroup elements (empty when no `normal:` line is present).
    pub fn parse(text: &str) -> Result<(Self, Vec<usize>), HopfError> {
        let mut names: Vec<String> = Vec::new();
        let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut normal_names: Vec<String> = Vec::new();
        let index = |names: &[String], s: &str, line: usize| -> Result<usize, HopfError> {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| HopfError::Group(format!("line {}: unknown element {}", line, s)))
        };
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("elements:") {
                names = rest.split_whitespace().map(str::to_string).collect();
                continue;
            }
            if let Some(rest) = line.strip_prefix("normal:") {
                normal_names = rest.split_whitespace().map(str::to_string).collect();
                continue;
            }
            let (lhs, rhs) =
                line.split_once("->").ok_or_else(|| HopfError::Group(format!("line {}: expected 'x y -> z'", ln + 1)))?;
            let ops: Vec<&str> = lhs.split_whitespace().collect();
            if ops.len() != 2 {
                return Err(HopfError::Group(format!("line {}: expected two factors", ln + 1)));
            }
            let x = index(&names, ops[0], ln + 1)?;
            let y = index(&names, ops[1], ln + 1)?;
            let z = index(&names, rhs.trim(), ln + 1)?;
            if entries.insert((x, y), z).is_some_and(|old| old != z) {
                return Err(HopfError::Group(format!("line {}: conflicting product", ln + 1)));
            }
        }
        let n = names.len();
        let mut table = vec![vec![0; n]; n];
        for (x, row) in table.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                *cell = *entries
                    .get(&(x, y))
                    .ok_or_else(|| HopfError::Group(format!("missing product {} {}", names[x], names[y])))?;
            }
        }
        let normal = normal_names.iter().map(|s| index(&names, s, 0)).collect::<Result<Vec<_>, _>>()?;
        Ok((GroupTable::new(names, table)?, normal))
    }

    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|k| format!("g{}", k)).collect();
        let table = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        GroupTable { names, table, identity: 0 }
    }

    /// S3 as permutations of {0, 1, 2}, listed in lexicographic order of images.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| pos([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        let names = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        GroupTable { names, table, identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order()).find(|&y| self.table[x][y] == self.identity).expect("validated group")
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|x| self.element_order(x)).fold(1, |a, b| a.lcm(&b))
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        h.contains(&self.identity) && h.iter().all(|&x| h.iter().all(|&y| h.contains(&self.mul(x, self.inverse(y)))))
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        self.is_subgroup(h)
            && (0..self.order()).all(|g| h.iter().all(|&x| h.contains(&self.mul(self.mul(g, x), self.inverse(g)))))
    }

    /// Left cosets g H, each sorted, ordered by smallest element.
    pub fn cosets(&self, h: &[usize]) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for g in 0..self.order() {
            if out.iter().any(|c| c.contains(&g)) {
                continue;
            }
            let mut c: Vec<usize> = h.iter().map(|&x| self.mul(g, x)).collect();
            c.sort_unstable();
            out.push(c);
        }
        out
    }

    /// Number of conjugacy classes.
    pub fn class_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            count += 1;
            for g in 0..self.order() {
                seen[self.mul(self.mul(g, x), self.inverse(g))] = true;
            }
        }
        count
    }

    /// The subgroup table on the given elements, renumbered in the listed order.
    pub fn subgroup(&self, h: &[usize]) -> Result<GroupTable, HopfError> {
        if !self.is_subgroup(h) {
            return Err(HopfError::Group("elements do not form a subgroup".into()));
        }
        let pos = |x: usize| h.iter().position(|&y| y == x).unwrap();
        let names = h.iter().map(|&x| self.names[x].clone()).collect();
        let table = h.iter().map(|&x| h.iter().map(|&y| pos(self.mul(x, y))).collect()).collect();
        GroupTable::new(names, table)
    }
}

fn one() -> CycloElem {
    CycloElem::one()
}

/// The Hopf algebra of functions on a finite group, in the basis of delta functions.
pub fn function_algebra(g: &GroupTable) -> Result<HopfAlgebraFD, HopfError> {
    let n = g.order();
    let mut dtrip = Vec::new();
    for x in 0..n {
        for y in 0..n {
            dtrip.push((x * n + y, g.mul(x, y), one()));
        }
    }
    let counit = (0..n).map(|x| if x == g.identity() { one() } else { CycloElem::zero() }).collect();
    let coalg = CoalgebraFD::new(Mat::from_triplets(n * n, n, dtrip), counit)?;
    let mult = Mat::from_triplets(n, n * n, (0..n).map(|x| (x, x * n + x, one())));
    let unit = vec![one(); n];
    let antipode = Mat::from_triplets(n, n, (0..n).map(|x| (g.inverse(x), x, one())));
    HopfAlgebraFD::new(coalg, mult, unit, antipode)
}

/// The ground field as a Hopf algebra.
pub fn ground_hopf() -> HopfAlgebraFD {
    HopfAlgebraFD::new(CoalgebraFD::ground(), Mat::identity(1), vec![one()], Mat::identity(1))
        .expect("the ground field is a Hopf algebra")
}

/// (O_H, O_H'', O_H') for 1 -> H' -> H'' -> H -> 1 with H = H'' / H'.
pub fn finite_group_triple(g: &GroupTable, normal: &[usize]) -> Result<TripleFD, HopfError> {
    if !g.is_normal(normal) {
        return Err(HopfError::NotNormal);
    }
    let mut h: Vec<usize> = normal.to_vec();
    h.sort_unstable();
    h.dedup();
    let cosets = g.cosets(&h);
    let quotient_names: Vec<String> = cosets.iter().map(|c| g.names()[c[0]].clone()).collect();
    let coset_of = |x: usize| cosets.iter().position(|c| c.contains(&x)).unwrap();
    let qtable = cosets.iter().map(|c| cosets.iter().map(|d| coset_of(g.mul(c[0], d[0]))).collect()).collect();
    let quotient = GroupTable::new(quotient_names, qtable)?;
    let sub = g.subgroup(&h)?;
    let o = function_algebra(&quotient)?;
    let big = function_algebra(g)?;
    let small_h = function_algebra(&sub)?;
    let (n, m) = (g.order(), h.len());
    let iota = Mat::from_triplets(n, cosets.len(), (0..n).map(|x| (x, coset_of(x), one())));
    let pi = Mat::from_triplets(m, n, h.iter().enumerate().map(|(k, &x)| (k, x, one())));
    let action = Mat::from_triplets(m, m * n, h.iter().enumerate().map(|(k, &x)| (k, k * n + x, one())));
    TripleFD::new(
        &format!("functions on a group of order {} over a normal subgroup of order {}", n, m),
        o,
        big,
        small_h.coalgebra().clone(),
        action,
        iota,
        pi,
        g.exponent() as u32,
    )
}

/// (A, A, C): O = A, a the ground field through the counit.
pub fn absolute_triple(a: &HopfAlgebraFD, eigen_order: u32) -> Result<TripleFD, HopfError> {
    let n = a.dim();
    let eps = a.coalgebra().counit_row();
    TripleFD::new("absolute", a.clone(), a.clone(), CoalgebraFD::ground(), eps.clone(), Mat::identity(n), eps, eigen_order)
}

/// (A, A, A) with identity maps. Condition (i) and (iii) fail once A has a nonzero
/// augmentation ideal.
pub fn degenerate_triple(a: &HopfAlgebraFD, eigen_order: u32) -> Result<TripleFD, HopfError> {
    let n = a.dim();
    TripleFD::new(
        "degenerate",
        a.clone(),
        a.clone(),
        a.coalgebra().clone(),
        a.mult().clone(),
        Mat::identity(n),
        Mat::identity(n),
        eigen_order,
    )
}

/// The group triple with O replaced by the ground field, a proper Hopf subalgebra of A^a
/// whenever H' is a proper subgroup.
pub fn shrunk_triple(g: &GroupTable, normal: &[usize]) -> Result<TripleFD, HopfError> {
    let full = finite_group_triple(g, normal)?;
    let iota = super::algebra::col(full.big().unit());
    TripleFD::new(
        "shrunk O",
        ground_hopf(),
        full.big().clone(),
        full.small().clone(),
        full.small_action().clone(),
        iota,
        full.pi().clone(),
        full.eigen_order(),
    )
}
