//! Root data of types A1, A2, B2, G2, the forms and maps attached to a root of
//! unity, and the affine Weyl group dot action.
//!
//! Coordinates: weights in X are written in the fundamental-weight basis, Y in the
//! simple-coroot basis, and the coweight lattice X*_sc in the fundamental-coweight basis.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{QParams, ScalarError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootDataError {
    #[error("unsupported Cartan type `{0}` (expected A1, A2, B2 or G2)")]
    UnsupportedType(String),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("bad window: {0}")]
    BadWindow(String),
    #[error(transparent)]
    Params(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A1,
    A2,
    B2,
    G2,
}

impl FromStr for CartanType {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(CartanType::A1),
            "A2" => Ok(CartanType::A2),
            "B2" => Ok(CartanType::B2),
            "G2" => Ok(CartanType::G2),
            other => Err(RootDataError::UnsupportedType(other.to_string())),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Element of X in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn a1(n: i64) -> Self {
        Weight(vec![n])
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(", "))
        }
    }
}

/// A positive root with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    /// coordinates in the simple-root basis
    pub in_roots: Vec<i64>,
    /// the root as a weight
    pub weight: Weight,
    /// coroot in the simple-coroot basis
    pub coroot: Vec<i64>,
    pub d: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    d: Vec<u32>,
    positive: Vec<PositiveRoot>,
}

/// The integral form on Y attached to ell, as a symmetric matrix on simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllForm {
    pub matrix: Vec<Vec<i64>>,
}

/// Which lattice the small quantum group's torus characters are taken modulo.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmallLattice {
    /// phi(Y)
    Phi,
    /// phi_sc(X*_sc)
    PhiSc,
}

/// Canonical representative of a dot orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Canonical {
    /// the representative lambda*, with lambda* + rho in the closed fundamental alcove
    pub rep: Weight,
    pub singular: bool,
}

impl RootDatum {
    pub fn build(ty: CartanType) -> Self {
        let (cartan, d): (Vec<Vec<i64>>, Vec<u32>) = match ty {
            CartanType::A1 => (vec![vec![2]], vec![1]),
            CartanType::A2 => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
            // alpha_1 short, alpha_2 long
            CartanType::B2 => (vec![vec![2, -2], vec![-1, 2]], vec![1, 2]),
            CartanType::G2 => (vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
        };
        let mut rd = RootDatum { ty, cartan, d, positive: vec![] };
        rd.positive = rd.compute_positive_roots();
        rd
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    /// a_ij = <alpha_i^vee, alpha_j>
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn params(&self, ell: u32) -> Result<QParams, ScalarError> {
        QParams::new(ell, self.d.clone())
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    /// alpha_j as a weight: column j of the Cartan matrix.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank()).map(|i| self.cartan[i][j]).collect())
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// alpha_j^vee in fundamental-coweight coordinates: row j of the Cartan matrix.
    pub fn simple_coroot_as_coweight(&self, j: usize) -> Vec<i64> {
        self.cartan[j].clone()
    }

    /// <y, x> for y in simple-coroot coordinates.
    pub fn pair(&self, y: &[i64], x: &Weight) -> i64 {
        y.iter().zip(&x.0).map(|(a, b)| a * b).sum()
    }

    fn check_rank(&self, n: usize) -> Result<(), RootDataError> {
        if n != self.rank() {
            Err(RootDataError::RankMismatch { expected: self.rank(), got: n })
        } else {
            Ok(())
        }
    }

    fn compute_positive_roots(&self) -> Vec<PositiveRoot> {
        let r = self.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>, u32)> = VecDeque::new();
        for j in 0..r {
            let mut e = vec![0; r];
            e[j] = 1;
            queue.push_back((e.clone(), e, self.d[j]));
        }
        while let Some((beta, cobeta, dj)) = queue.pop_front() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            if beta.iter().all(|&c| c >= 0) {
                let weight = Weight((0..r).map(|k| (0..r).map(|j| beta[j] * self.cartan[k][j]).sum()).collect());
                out.push(PositiveRoot { in_roots: beta.clone(), weight, coroot: cobeta.clone(), d: dj });
            }
            for i in 0..r {
                let p: i64 = (0..r).map(|j| self.cartan[i][j] * beta[j]).sum();
                let mut b2 = beta.clone();
                b2[i] -= p;
                let q: i64 = (0..r).map(|j| cobeta[j] * self.cartan[j][i]).sum();
                let mut c2 = cobeta.clone();
                c2[i] -= q;
                queue.push_back((b2, c2, dj));
            }
        }
        out.sort_by(|a, b| (a.in_roots.iter().sum::<i64>(), &a.in_roots).cmp(&(b.in_roots.iter().sum::<i64>(), &b.in_roots)));
        out
    }

    /// (alpha_i^vee, alpha_j^vee)_ell = ell_j a_ij
    pub fn ell_form(&self, p: &QParams) -> EllForm {
        let r = self.rank();
        EllForm {
            matrix: (0..r).map(|i| (0..r).map(|j| p.ell_i(j) as i64 * self.cartan[i][j]).collect()).collect(),
        }
    }

    /// phi(y) for y in simple-coroot coordinates: sum_j y_j ell_j alpha_j.
    pub fn phi(&self, y: &[i64], p: &QParams) -> Weight {
        let r = self.rank();
        Weight((0..r).map(|i| (0..r).map(|j| y[j] * p.ell_i(j) as i64 * self.cartan[i][j]).sum()).collect())
    }

    /// phi_sc(c) for c in fundamental-coweight coordinates: diagonal scaling by ell_k.
    pub fn phi_sc(&self, c: &[i64], p: &QParams) -> Weight {
        Weight(c.iter().enumerate().map(|(k, x)| x * p.ell_i(k) as i64).collect())
    }

    /// Linear reflection s_i.
    pub fn reflect(&self, i: usize, x: &Weight) -> Weight {
        x.sub(&self.simple_root(i).scaled(x.0[i]))
    }

    /// s_i . lambda = s_i(lambda + rho) - rho
    pub fn dot_reflect(&self, i: usize, lam: &Weight) -> Weight {
        lam.sub(&self.simple_root(i).scaled(lam.0[i] + 1))
    }

    /// Orbit of lambda under the finite Weyl group acting by the dot action.
    pub fn finite_dot_orbit(&self, lam: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([lam.clone()]);
        while let Some(w) = queue.pop_front() {
            if !seen.insert(w.clone()) {
                continue;
            }
            for i in 0..self.rank() {
                queue.push_back(self.dot_reflect(i, &w));
            }
        }
        seen
    }

    /// Representative of the W_aff dot orbit of lambda in the closed fundamental alcove.
    pub fn canonical(&self, lam: &Weight, p: &QParams) -> Result<Canonical, RootDataError> {
        self.check_rank(lam.rank())?;
        let ell = p.ell() as i64;
        let mut mu = lam.add(&self.rho());
        loop {
            if let Some(i) = (0..self.rank()).find(|&i| mu.0[i] < 0) {
                mu = self.reflect(i, &mu);
                continue;
            }
            let over = self.positive.iter().find_map(|b| {
                let lb = ell / b.d as i64;
                let c = self.pair(&b.coroot, &mu);
                if c > lb {
                    Some((b, c, lb))
                } else {
                    None
                }
            });
            match over {
                Some((b, c, lb)) => {
                    // reflect across the wall <., beta^vee> = k ell_beta nearest below c
                    let k = (c - 1).div_euclid(lb);
                    mu = mu.sub(&b.weight.scaled(c - k * lb));
                }
                None => break,
            }
        }
        let singular = self.positive.iter().any(|b| {
            let lb = ell / b.d as i64;
            let c = self.pair(&b.coroot, &mu);
            c == 0 || c == lb
        });
        Ok(Canonical { rep: mu.sub(&self.rho()), singular })
    }

    pub fn same_block(&self, l1: &Weight, l2: &Weight, p: &QParams) -> Result<bool, RootDataError> {
        Ok(self.canonical(l1, p)?.rep == self.canonical(l2, p)?.rep)
    }

    /// All points of the W_aff dot orbit of lambda inside the window.
    pub fn orbit_in_window(&self, lam: &Weight, window: &Window, p: &QParams) -> Result<BTreeSet<Weight>, RootDataError> {
        self.check_rank(lam.rank())?;
        self.check_rank(window.rank())?;
        let mut out = BTreeSet::new();
        if window.is_empty() {
            return Ok(out);
        }
        let r = self.rank();
        // translation lattice basis: columns phi(alpha_j^vee)
        let cols: Vec<Weight> = (0..r)
            .map(|j| {
                let mut e = vec![0; r];
                e[j] = 1;
                self.phi(&e, p)
            })
            .collect();
        let corners = window.corners();
        for base in self.finite_dot_orbit(lam) {
            // y ranges: y = Phi^{-1}(x - base) over the window corners
            let mut lo = vec![i64::MAX; r];
            let mut hi = vec![i64::MIN; r];
            for c in &corners {
                let target = c.sub(&base);
                let y = solve_small(&cols, &target.0);
                for k in 0..r {
                    lo[k] = lo[k].min(floor_div(y[k].0, y[k].1));
                    hi[k] = hi[k].max(ceil_div(y[k].0, y[k].1));
                }
            }
            for y in box_points(&lo, &hi) {
                let mut x = base.clone();
                for (k, col) in cols.iter().enumerate() {
                    x = x.add(&col.scaled(y[k]));
                }
                if window.contains(&x) {
                    out.insert(x);
                }
            }
        }
        Ok(out)
    }

    /// lambda = lambda1 + phi_sc(mu) with 0 <= <alpha_i^vee, lambda1> < ell_i.
    pub fn steinberg_decompose(&self, lam: &Weight, p: &QParams) -> Result<(Weight, Vec<i64>), RootDataError> {
        self.check_rank(lam.rank())?;
        if !lam.is_dominant() {
            return Err(RootDataError::NotDominant(lam.clone()));
        }
        let l1 = Weight(lam.0.iter().enumerate().map(|(i, x)| x.rem_euclid(p.ell_i(i) as i64)).collect());
        let mu = lam.0.iter().enumerate().map(|(i, x)| x.div_euclid(p.ell_i(i) as i64)).collect();
        Ok((l1, mu))
    }

    /// Representative of the class of x modulo phi(Y) or phi_sc(X*_sc).
    pub fn class_rep(&self, x: &Weight, lattice: SmallLattice, p: &QParams) -> Weight {
        let r = self.rank();
        match lattice {
            SmallLattice::PhiSc => {
                Weight(x.0.iter().enumerate().map(|(k, v)| v.rem_euclid(p.ell_i(k) as i64)).collect())
            }
            SmallLattice::Phi => {
                let cols: Vec<Weight> = (0..r)
                    .map(|j| {
                        let mut e = vec![0; r];
                        e[j] = 1;
                        self.phi(&e, p)
                    })
                    .collect();
                let y = solve_small(&cols, &x.0);
                let mut out = x.clone();
                for (k, col) in cols.iter().enumerate() {
                    out = out.sub(&col.scaled(floor_div(y[k].0, y[k].1)));
                }
                out
            }
        }
    }

    /// Whether x lies in phi(Y) (resp. phi_sc(X*_sc)).
    pub fn in_lattice(&self, x: &Weight, lattice: SmallLattice, p: &QParams) -> bool {
        self.class_rep(x, lattice, p).0.iter().all(|&c| c == 0)
    }
}

/// Solves sum_k y_k cols[k] = x for rank <= 2; returns (numerator, positive denominator) pairs.
fn solve_small(cols: &[Weight], x: &[i64]) -> Vec<(i64, i64)> {
    match cols.len() {
        1 => vec![norm_frac(x[0], cols[0].0[0])],
        2 => {
            let (a, b, c, d) = (cols[0].0[0], cols[1].0[0], cols[0].0[1], cols[1].0[1]);
            let det = a * d - b * c;
            vec![norm_frac(d * x[0] - b * x[1], det), norm_frac(a * x[1] - c * x[0], det)]
        }
        n => panic!("lattice solve implemented for rank <= 2, got {}", n),
    }
}

fn norm_frac(n: i64, d: i64) -> (i64, i64) {
    assert!(d != 0, "singular lattice");
    if d < 0 {
        (-n, -d)
    } else {
        (n, d)
    }
}

fn floor_div(n: i64, d: i64) -> i64 {
    n.div_euclid(d)
}

fn ceil_div(n: i64, d: i64) -> i64 {
    -((-n).div_euclid(d))
}

fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for k in 0..lo.len() {
        let mut next = Vec::new();
        for p in &out {
            for v in lo[k]..=hi[k] {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Axis-aligned box of weights, bounds inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        Window { lo, hi }
    }

    pub fn interval(lo: i64, hi: i64) -> Self {
        Window { lo: vec![lo], hi: vec![hi] }
    }

    /// Parses `a..b` (same range on every coordinate), `a..b,c..d` (one range per
    /// coordinate) or `box` (0..2*ell-1 on every coordinate).
    pub fn parse(s: &str, rank: usize, ell: u32) -> Result<Self, RootDataError> {
        let s = s.trim();
        if s == "box" {
            return Ok(Window { lo: vec![0; rank], hi: vec![2 * ell as i64 - 1; rank] });
        }
        let parts: Vec<&str> = s.split(',').collect();
        let mut ranges = Vec::new();
        for part in &parts {
            let (a, b) = part
                .split_once("..")
                .ok_or_else(|| RootDataError::BadWindow(format!("expected a..b, got `{}`", part)))?;
            let a: i64 = a.trim().parse().map_err(|_| RootDataError::BadWindow(format!("bad bound `{}`", a)))?;
            let b: i64 = b.trim().parse().map_err(|_| RootDataError::BadWindow(format!("bad bound `{}`", b)))?;
            ranges.push((a, b));
        }
        if ranges.len() == 1 {
            ranges = vec![ranges[0]; rank];
        }
        if ranges.len() != rank {
            return Err(RootDataError::BadWindow(format!("{} ranges given for rank {}", ranges.len(), rank)));
        }
        Ok(Window { lo: ranges.iter().map(|r| r.0).collect(), hi: ranges.iter().map(|r| r.1).collect() })
    }

    pub fn rank(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(a, b)| a > b)
    }

    pub fn contains(&self, x: &Weight) -> bool {
        x.0.iter().zip(self.lo.iter().zip(&self.hi)).all(|(v, (a, b))| a <= v && v <= b)
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> Vec<Weight> {
        if self.is_empty() {
            return vec![];
        }
        box_points(&self.lo, &self.hi).into_iter().map(Weight).collect()
    }

    fn corners(&self) -> Vec<Weight> {
        let r = self.rank();
        (0..(1usize << r))
            .map(|mask| Weight((0..r).map(|k| if mask >> k & 1 == 1 { self.hi[k] } else { self.lo[k] }).collect()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> (RootDatum, QParams) {
        let rd = RootDatum::build(CartanType::A1);
        let p = rd.params(4).unwrap();
        (rd, p)
    }

    #[test]
    fn basic_data() {
        let (rd, _) = a1();
        assert_eq!(rd.rank(), 1);
        assert_eq!(rd.simple_root(0), Weight::a1(2));
        assert_eq!(rd.rho(), Weight::a1(1));
        let a2 = RootDatum::build(CartanType::A2);
        assert_eq!(a2.a(0, 1), -1);
        assert_eq!(a2.positive_roots().len(), 3);
        let b2 = RootDatum::build(CartanType::B2);
        assert_eq!(b2.d(), &[1, 2]);
        assert_eq!(b2.positive_roots().len(), 4);
        let g2 = RootDatum::build(CartanType::G2);
        assert_eq!(g2.positive_roots().len(), 6);
    }

    #[test]
    fn symmetrizable() {
        for ty in [CartanType::A1, CartanType::A2, CartanType::B2, CartanType::G2] {
            let rd = RootDatum::build(ty);
            for i in 0..rd.rank() {
                for j in 0..rd.rank() {
                    assert_eq!(rd.d()[i] as i64 * rd.a(i, j), rd.d()[j] as i64 * rd.a(j, i));
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        let (rd, p) = a1();
        assert_eq!(rd.phi(&[1], &p), Weight::a1(8));
        assert_eq!(rd.phi(&[0], &p), Weight::a1(0));
        assert_eq!(rd.phi_sc(&[1], &p), Weight::a1(4));
        assert_eq!(rd.phi_sc(&[2], &p), Weight::a1(8));
        let a2 = RootDatum::build(CartanType::A2);
        let p6 = a2.params(6).unwrap();
        assert_eq!(a2.phi(&[1, 0], &p6), Weight(vec![12, -6]));
    }

    #[test]
    fn phi_sc_extends_phi() {
        for (ty, ell) in [(CartanType::A2, 6), (CartanType::B2, 4), (CartanType::G2, 6)] {
            let rd = RootDatum::build(ty);
            let p = rd.params(ell).unwrap();
            for j in 0..rd.rank() {
                let mut e = vec![0; rd.rank()];
                e[j] = 1;
                assert_eq!(rd.phi(&e, &p), rd.phi_sc(&rd.simple_coroot_as_coweight(j), &p));
            }
            let f = rd.ell_form(&p);
            for i in 0..rd.rank() {
                assert_eq!(f.matrix[i][i], 2 * p.ell_i(i) as i64);
            }
        }
    }

    #[test]
    fn dot_action_examples() {
        let (rd, p) = a1();
        assert_eq!(rd.dot_reflect(0, &Weight::a1(5)), Weight::a1(-7));
        assert_eq!(rd.dot_reflect(0, &Weight::a1(-1)), Weight::a1(-1));
        assert!(rd.same_block(&Weight::a1(0), &Weight::a1(6), &p).unwrap());
        assert!(!rd.same_block(&Weight::a1(0), &Weight::a1(1), &p).unwrap());
        assert!(rd.canonical(&Weight::a1(3), &p).unwrap().singular);
        assert!(rd.canonical(&Weight::a1(7), &p).unwrap().singular);
        assert!(!rd.canonical(&Weight::a1(2), &p).unwrap().singular);
    }

    #[test]
    fn orbit_in_window_a1() {
        let (rd, p) = a1();
        let w = Window::interval(-10, 10);
        let o = rd.orbit_in_window(&Weight::a1(0), &w, &p).unwrap();
        let got: Vec<i64> = o.iter().map(|x| x.0[0]).collect();
        assert_eq!(got, vec![-10, -8, -2, 0, 6, 8]);
        let o = rd.orbit_in_window(&Weight::a1(-1), &w, &p).unwrap();
        let got: Vec<i64> = o.iter().map(|x| x.0[0]).collect();
        assert_eq!(got, vec![-9, -1, 7]);
        assert!(rd.orbit_in_window(&Weight::a1(0), &Window::interval(1, 5), &p).unwrap().is_empty());
    }

    #[test]
    fn steinberg_examples() {
        let (rd, p) = a1();
        assert_eq!(rd.steinberg_decompose(&Weight::a1(9), &p).unwrap(), (Weight::a1(1), vec![2]));
        assert_eq!(rd.steinberg_decompose(&Weight::a1(3), &p).unwrap(), (Weight::a1(3), vec![0]));
        assert!(rd.steinberg_decompose(&Weight::a1(-1), &p).is_err());
    }

    #[test]
    fn class_reps() {
        let (rd, p) = a1();
        assert_eq!(rd.class_rep(&Weight::a1(-3), SmallLattice::Phi, &p), Weight::a1(5));
        assert_eq!(rd.class_rep(&Weight::a1(-3), SmallLattice::PhiSc, &p), Weight::a1(1));
        let a2 = RootDatum::build(CartanType::A2);
        let p6 = a2.params(6).unwrap();
        let x = Weight(vec![12, -6]);
        assert!(a2.in_lattice(&x, SmallLattice::Phi, &p6));
        assert!(!a2.in_lattice(&Weight(vec![6, 0]), SmallLattice::Phi, &p6));
        assert!(a2.in_lattice(&Weight(vec![6, 0]), SmallLattice::PhiSc, &p6));
    }

    #[test]
    fn window_parsing() {
        assert_eq!(Window::parse("0..7", 1, 4).unwrap(), Window::interval(0, 7));
        assert_eq!(Window::parse("box", 2, 6).unwrap(), Window::new(vec![0, 0], vec![11, 11]));
        assert_eq!(Window::parse("0..2,1..3", 2, 6).unwrap(), Window::new(vec![0, 1], vec![2, 3]));
        assert!(Window::parse("0..2,1..3", 1, 6).is_err());
        assert!(Window::parse("nope", 1, 4).is_err());
        assert!(Window::parse("5..4", 1, 4).unwrap().points().is_empty());
    }
}
