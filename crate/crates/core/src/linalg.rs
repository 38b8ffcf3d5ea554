//! Sparse matrices and exact elimination over a generic ring/field.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::{Field, Ring};

pub type SparseVec<T> = BTreeMap<usize, T>;

/// Row-major sparse matrix; rows hold (column, value) pairs sorted by column, no stored zeros.
#[derive(Clone)]
pub struct SparseMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, T)>>,
}

impl<T: Ring> SparseMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag((0..n).map(|_| T::one()).collect())
    }

    pub fn diag(d: Vec<T>) -> Self {
        let n = d.len();
        let data = d.into_iter().enumerate().map(|(i, x)| if x.is_zero() { vec![] } else { vec![(i, x)] }).collect();
        SparseMat { rows: n, cols: n, data }
    }

    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, T)>>(rows: usize, cols: usize, it: I) -> Self {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); rows];
        for (i, j, x) in it {
            assert!(i < rows && j < cols, "entry ({}, {}) outside {}x{}", i, j, rows, cols);
            match acc[i].get_mut(&j) {
                Some(y) => *y = y.add_ref(&x),
                None => {
                    acc[i].insert(j, x);
                }
            }
        }
        let data = acc.into_iter().map(|r| r.into_iter().filter(|(_, x)| !x.is_zero()).collect()).collect();
        SparseMat { rows, cols, data }
    }

    pub fn from_dense(d: &[Vec<T>], cols: usize) -> Self {
        Self::from_triplets(
            d.len(),
            cols,
            d.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, x)| (i, j, x.clone()))),
        )
    }

    /// Matrix whose columns are the given dense vectors.
    pub fn from_columns(cols: &[Vec<T>], rows: usize) -> Self {
        Self::from_triplets(
            rows,
            cols.len(),
            cols.iter().enumerate().flat_map(|(j, c)| c.iter().enumerate().map(move |(i, x)| (i, j, x.clone()))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                if x.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = x;
                }
            }
            Err(k) => {
                if !x.is_zero() {
                    row.insert(k, (j, x));
                }
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut data = Vec::with_capacity(self.rows);
        for r in &self.data {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (k, a) in r {
                for (j, b) in &o.data[*k] {
                    let t = a.mul_ref(b);
                    match acc.get_mut(j) {
                        Some(y) => *y = y.add_ref(&t),
                        None => {
                            acc.insert(*j, t);
                        }
                    }
                }
            }
            data.push(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
        }
        SparseMat { rows: self.rows, cols: o.cols, data }
    }

    fn combine(&self, o: &Self, sub: bool) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols, "dimension mismatch in sum");
        let data = self
            .data
            .iter()
            .zip(o.data.iter())
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, T> = a.iter().cloned().collect();
                for (j, y) in b {
                    let v = match acc.get(j) {
                        Some(x) => {
                            if sub {
                                x.sub_ref(y)
                            } else {
                                x.add_ref(y)
                            }
                        }
                        None => {
                            if sub {
                                -y.clone()
                            } else {
                                y.clone()
                            }
                        }
                    };
                    acc.insert(*j, v);
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, x)| (*j, s.mul_ref(x))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMat { rows: self.rows, cols: self.cols, data }
    }

    /// Multiplies row i by d[i] (i.e. diag(d) * self).
    pub fn left_diag(&self, d: &[T]) -> Self {
        let data = self
            .data
            .iter()
            .zip(d.iter())
            .map(|(r, s)| r.iter().map(|(j, x)| (*j, s.mul_ref(x))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMat { rows: self.rows, cols: self.cols, data }
    }

    /// self * diag(d)
    pub fn right_diag(&self, d: &[T]) -> Self {
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, x)| (*j, x.mul_ref(&d[*j]))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.cols, self.rows, self.entries().map(|(i, j, x)| (j, i, x.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn kron(&self, o: &Self) -> Self {
        let mut trip = Vec::with_capacity(self.nnz() * o.nnz());
        for (i, j, x) in self.entries() {
            for (k, l, y) in o.entries() {
                trip.push((i * o.rows + k, j * o.cols + l, x.mul_ref(y)));
            }
        }
        Self::from_triplets(self.rows * o.rows, self.cols * o.cols, trip)
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|r| r.iter().fold(T::zero(), |acc, (j, x)| acc.add_ref(&x.mul_ref(&v[*j]))))
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.rows]; self.cols];
        for (i, j, x) in self.entries() {
            out[j][i] = x.clone();
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut colmap = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            colmap[c] = k;
        }
        let data = rows
            .iter()
            .map(|&r| {
                self.data[r]
                    .iter()
                    .filter(|(j, _)| colmap[*j] != usize::MAX)
                    .map(|(j, x)| (colmap[*j], x.clone()))
                    .collect()
            })
            .collect();
        SparseMat { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn map<U: Ring, F: Fn(&T) -> U>(&self, f: F) -> SparseMat<U> {
        SparseMat::from_triplets(self.rows, self.cols, self.entries().map(|(i, j, x)| (i, j, f(x))))
    }

    pub fn try_map<U: Ring, E, F: Fn(&T) -> Result<U, E>>(&self, f: F) -> Result<SparseMat<U>, E> {
        let mut trip = Vec::with_capacity(self.nnz());
        for (i, j, x) in self.entries() {
            trip.push((i, j, f(x)?));
        }
        Ok(SparseMat::from_triplets(self.rows, self.cols, trip))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let trip = self
            .entries()
            .map(|(i, j, x)| (i, j, x.clone()))
            .chain(o.entries().map(|(i, j, x)| (i + self.rows, j + self.cols, x.clone())));
        Self::from_triplets(self.rows + o.rows, self.cols + o.cols, trip)
    }
}

impl<T: Ring> PartialEq for SparseMat<T> {
    fn eq(&self, o: &Self) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.data == o.data
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for SparseMat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for (i, j, x) in self.entries() {
            writeln!(f, "  ({}, {}) = {}", i, j, x)?;
        }
        write!(f, "]")
    }
}

impl<T: Field> SparseMat<T> {
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in &self.data {
            e.insert(r.iter().cloned().collect());
        }
        e.rank()
    }

    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let eqs: Vec<SparseVec<T>> = self.data.iter().map(|r| r.iter().cloned().collect()).collect();
        nullspace(&eqs, self.cols)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let cols: Vec<Vec<T>> = (0..n)
            .map(|j| {
                let mut e = vec![T::zero(); n];
                e[j] = T::one();
                solve(self, &e)
            })
            .collect::<Option<_>>()?;
        if self.rank() != n {
            return None;
        }
        Some(Self::from_columns(&cols, n))
    }
}

/// Row-echelon accumulator: pivot column -> row normalized to 1 at its pivot.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseVec<T>>,
}

impl<T: Field> Echelon<T> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces v against every pivot row (leaves entries only in non-pivot columns).
    pub fn reduce(&self, mut v: SparseVec<T>) -> SparseVec<T> {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(c, _)| *c).find(|c| self.pivots.contains_key(c));
            let c = match next {
                Some(c) => c,
                None => break,
            };
            let f = v.remove(&c).expect("present");
            for (j, x) in &self.pivots[&c] {
                if *j == c {
                    continue;
                }
                let t = f.mul_ref(x);
                let nv = match v.get(j) {
                    Some(y) => y.sub_ref(&t),
                    None => -t,
                };
                if nv.is_zero() {
                    v.remove(j);
                } else {
                    v.insert(*j, nv);
                }
            }
            cursor = c + 1;
        }
        v
    }

    /// Inserts a row; returns true if it increased the rank.
    pub fn insert(&mut self, v: SparseVec<T>) -> bool {
        let v: SparseVec<T> = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let r = self.reduce(v);
        let (&c, lead) = match r.iter().next() {
            Some(x) => x,
            None => return false,
        };
        let inv = lead.inv().expect("nonzero lead");
        let row: SparseVec<T> = r.iter().map(|(j, x)| (*j, x.mul_ref(&inv))).collect();
        // keep existing rows reduced in the new pivot column
        let keys: Vec<usize> = self.pivots.iter().filter(|(_, pr)| pr.contains_key(&c)).map(|(k, _)| *k).collect();
        for k in keys {
            let pr = self.pivots.get_mut(&k).unwrap();
            let f = pr.remove(&c).unwrap();
            for (j, x) in &row {
                if *j == c {
                    continue;
                }
                let t = f.mul_ref(x);
                let nv = match pr.get(j) {
                    Some(y) => y.sub_ref(&t),
                    None => -t,
                };
                if nv.is_zero() {
                    pr.remove(j);
                } else {
                    pr.insert(*j, nv);
                }
            }
        }
        self.pivots.insert(c, row);
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(dense_to_sparse(v)).is_empty()
    }

    /// Basis of the solution space of {x : row . x = 0 for all rows}.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![T::zero(); self.ncols];
                x[f] = T::one();
                for (p, row) in &self.pivots {
                    if let Some(a) = row.get(&f) {
                        x[*p] = -a.clone();
                    }
                }
                x
            })
            .collect()
    }

    /// Reduced basis rows (dense).
    pub fn basis(&self) -> Vec<Vec<T>> {
        self.pivots.values().map(|r| sparse_to_dense(r, self.ncols)).collect()
    }
}

pub fn dense_to_sparse<T: Ring>(v: &[T]) -> SparseVec<T> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense<T: Ring>(v: &SparseVec<T>, n: usize) -> Vec<T> {
    let mut out = vec![T::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn nullspace<T: Field>(eqs: &[SparseVec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut e = Echelon::new(ncols);
    for r in eqs {
        e.insert(r.clone());
    }
    e.kernel()
}

/// Some solution of A x = b, if one exists.
pub fn solve<T: Field>(a: &SparseMat<T>, b: &[T]) -> Option<Vec<T>> {
    let n = a.cols();
    let mut e = Echelon::new(n + 1);
    for i in 0..a.rows() {
        let mut r: SparseVec<T> = a.row(i).iter().cloned().collect();
        if !b[i].is_zero() {
            r.insert(n, b[i].clone());
        }
        e.insert(r);
    }
    if e.pivots.contains_key(&n) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (p, row) in &e.pivots {
        if let Some(c) = row.get(&n) {
            x[*p] = c.clone();
        }
    }
    Some(x)
}

/// A linearly independent family with coordinate extraction.
#[derive(Clone, Debug)]
pub struct CoordBasis<T> {
    dim: usize,
    vectors: Vec<Vec<T>>,
    // echelon over [vector | tag], tags track the combination of basis vectors
    ech: Echelon<T>,
}

impl<T: Field> CoordBasis<T> {
    pub fn new(dim: usize) -> Self {
        CoordBasis { dim, vectors: Vec::new(), ech: Echelon::new(dim) }
    }

    pub fn from_vectors(dim: usize, vs: &[Vec<T>]) -> Self {
        let mut b = Self::new(dim);
        for v in vs {
            b.push(v.clone());
        }
        b
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    /// Adds v if independent; returns whether it was added.
    pub fn push(&mut self, v: Vec<T>) -> bool {
        if self.ech.insert(dense_to_sparse(&v)) {
            self.vectors.push(v);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.ech.contains(v)
    }

    /// Coordinates of v in this family, or None when v is outside the span.
    pub fn coords(&self, v: &[T]) -> Option<Vec<T>> {
        if !self.contains(v) {
            return None;
        }
        let m = SparseMat::from_columns(&self.vectors, self.dim);
        solve(&m, v)
    }

    pub fn as_matrix(&self) -> SparseMat<T> {
        SparseMat::from_columns(&self.vectors, self.dim)
    }

    pub fn echelon(&self) -> &Echelon<T> {
        &self.ech
    }
}

/// Matrix of g restricted to the span of `basis` (which must be g-stable).
pub fn restrict<T: Field>(g: &SparseMat<T>, basis: &CoordBasis<T>) -> Option<SparseMat<T>> {
    let m = basis.as_matrix();
    let gm = g.mul(&m);
    let mut cols = Vec::with_capacity(basis.len());
    for j in 0..basis.len() {
        cols.push(basis.coords(&gm.column(j))?);
    }
    Some(SparseMat::from_columns(&cols, basis.len()))
}

/// Smallest subspace containing the seeds and stable under all generators.
pub fn closure<T: Field>(gens: &[&SparseMat<T>], seeds: &[Vec<T>], dim: usize) -> CoordBasis<T> {
    let mut basis = CoordBasis::new(dim);
    let mut queue: Vec<Vec<T>> = Vec::new();
    for s in seeds {
        if basis.push(s.clone()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.apply(&v);
            if w.iter().all(|x| x.is_zero()) {
                continue;
            }
            if basis.push(w.clone()) {
                queue.push(w);
            }
        }
    }
    basis
}
