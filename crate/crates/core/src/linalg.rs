//! Exact linear algebra over a [`GroundField`]: dense matrices for module
//! work, sparse rows for the large differentials, and a fraction-free
//! integer elimination used for ranks over the rationals.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::GroundField;

/// Sparse vector: strictly increasing column indices, no zero values.
pub type SparseRow<E> = Vec<(usize, E)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn filled(rows: usize, cols: usize, v: E) -> Self {
        Mat {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<E>], zero: E) -> Self {
        let mut m = Mat::filled(rows, columns.len(), zero);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Mat { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

pub fn zeros<F: GroundField>(f: &F, rows: usize, cols: usize) -> Mat<F::Elem> {
    Mat::filled(rows, cols, f.zero())
}

pub fn identity<F: GroundField>(f: &F, n: usize) -> Mat<F::Elem> {
    Mat::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
}

pub fn mat_mul<F: GroundField>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch in product");
    let mut out = zeros(f, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if f.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let bkj = b.get(k, j);
                if f.is_zero(bkj) {
                    continue;
                }
                let v = f.add_mul(out.get(i, j), aik, bkj);
                out.set(i, j, v);
            }
        }
    }
    out
}

pub fn mat_vec<F: GroundField>(f: &F, a: &Mat<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .fold(f.zero(), |acc, (x, y)| f.add_mul(&acc, x, y))
        })
        .collect()
}

pub fn mat_add<F: GroundField>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat::from_fn(a.rows, a.cols, |i, j| f.add(a.get(i, j), b.get(i, j)))
}

pub fn mat_sub<F: GroundField>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat::from_fn(a.rows, a.cols, |i, j| f.sub(a.get(i, j), b.get(i, j)))
}

pub fn mat_scale<F: GroundField>(f: &F, c: &F::Elem, a: &Mat<F::Elem>) -> Mat<F::Elem> {
    a.map(|x| f.mul(c, x))
}

pub fn is_zero_mat<F: GroundField>(f: &F, a: &Mat<F::Elem>) -> bool {
    a.data.iter().all(|x| f.is_zero(x))
}

pub fn trace<F: GroundField>(f: &F, a: &Mat<F::Elem>) -> F::Elem {
    (0..a.rows.min(a.cols)).fold(f.zero(), |acc, i| f.add(&acc, a.get(i, i)))
}

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref<F: GroundField>(f: &F, a: &mut Mat<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..a.cols {
            let v = f.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..a.cols {
                let v = f.sub(a.get(i, j), &f.mul(&factor, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: GroundField>(f: &F, a: &Mat<F::Elem>) -> usize {
    let mut m = a.clone();
    rref(f, &mut m).len()
}

/// Basis of the right null space `{x : a x = 0}`.
pub fn nullspace<F: GroundField>(f: &F, a: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut m = a.clone();
    let pivots = rref(f, &mut m);
    let mut is_pivot = vec![false; a.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..a.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); a.cols];
        v[free] = f.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(m.get(r, free));
        }
        basis.push(v);
    }
    basis
}

pub fn inverse<F: GroundField>(f: &F, a: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    if a.rows != a.cols {
        return None;
    }
    let n = a.rows;
    let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Mat::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// Solves `a x = b` for one solution, if any.
pub fn solve<F: GroundField>(f: &F, a: &Mat<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows, b.len());
    let mut aug = Mat::from_fn(a.rows, a.cols + 1, |i, j| {
        if j < a.cols {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![f.zero(); a.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(r, a.cols).clone();
    }
    Some(x)
}

/// Subspace of `F^dim` kept in fully reduced echelon form. Coordinates of a
/// member with respect to the stored basis are its entries at the pivots.
#[derive(Debug, Clone)]
pub struct Subspace<E> {
    dim: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn new(dim: usize) -> Self {
        Subspace {
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot.
    pub fn reduce<F: GroundField<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (wi, bi) in w.iter_mut().zip(b) {
                if !f.is_zero(bi) {
                    *wi = f.sub(wi, &f.mul(&c, bi));
                }
            }
        }
        w
    }

    pub fn contains<F: GroundField<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }

    /// Adds `v`; returns `false` when it was already in the span.
    pub fn insert<F: GroundField<Elem = E>>(&mut self, f: &F, v: &[E]) -> bool {
        let mut w = self.reduce(f, v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for b in self.basis.iter_mut() {
            let c = b[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (bi, wi) in b.iter_mut().zip(&w) {
                *bi = f.sub(bi, &f.mul(&c, wi));
            }
        }
        self.basis.push(w);
        self.pivots.push(p);
        true
    }

    /// Coordinates of a member of the subspace in the stored basis.
    pub fn coordinates(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Columns not used as pivots; unit vectors there span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.dim).filter(|&c| !is_pivot[c]).collect()
    }
}

fn axpy_sparse<F: GroundField>(
    f: &F,
    row: &SparseRow<F::Elem>,
    c: &F::Elem,
    other: &SparseRow<F::Elem>,
) -> SparseRow<F::Elem> {
    // row - c * other
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        if j == other.len() || (i < row.len() && row[i].0 < other[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || other[j].0 < row[i].0 {
            out.push((other[j].0, f.neg(&f.mul(c, &other[j].1))));
            j += 1;
        } else {
            let v = f.sub(&row[i].1, &f.mul(c, &other[j].1));
            if !f.is_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Normalises an unordered list of entries into a [`SparseRow`].
pub fn sparse_from_entries<F: GroundField>(
    f: &F,
    entries: impl IntoIterator<Item = (usize, F::Elem)>,
) -> SparseRow<F::Elem> {
    let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
    for (c, v) in entries {
        let slot = acc.entry(c).or_insert_with(|| f.zero());
        *slot = f.add(slot, &v);
    }
    acc.into_iter().filter(|(_, v)| !f.is_zero(v)).collect()
}

/// Incremental sparse echelon form with monic pivot rows. Rows are only
/// reduced at their leading column on insertion; [`SparseEchelon::reduce`]
/// reduces fully.
#[derive(Debug, Clone)]
pub struct SparseEchelon<E> {
    pivots: HashMap<usize, SparseRow<E>>,
}

impl<E: Clone> Default for SparseEchelon<E> {
    fn default() -> Self {
        SparseEchelon {
            pivots: HashMap::new(),
        }
    }
}

impl<E: Clone> SparseEchelon<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn insert<F: GroundField<Elem = E>>(&mut self, f: &F, mut row: SparseRow<E>) -> bool {
        loop {
            let Some((c, lead)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&c) {
                Some(p) => row = axpy_sparse(f, &row, &lead, p),
                None => {
                    let inv = f.inv(&lead).expect("nonzero lead");
                    for (_, v) in row.iter_mut() {
                        *v = f.mul(v, &inv);
                    }
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
    }

    /// Full reduction: the result has no entries on pivot columns.
    pub fn reduce<F: GroundField<Elem = E>>(&self, f: &F, row: &SparseRow<E>) -> SparseRow<E> {
        let mut work: BTreeMap<usize, E> = row.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((c, v)) = work.pop_first() {
            if f.is_zero(&v) {
                continue;
            }
            match self.pivots.get(&c) {
                Some(p) => {
                    for (pc, pv) in p.iter().skip(1) {
                        let slot = work.entry(*pc).or_insert_with(|| f.zero());
                        *slot = f.sub(slot, &f.mul(&v, pv));
                    }
                }
                None => out.push((c, v)),
            }
        }
        out
    }
}

pub fn sparse_rank_generic<F: GroundField>(f: &F, mut rows: Vec<SparseRow<F::Elem>>) -> usize {
    rows.sort_by_key(|r| r.len());
    let mut ech = SparseEchelon::new();
    rows.into_iter().filter(|r| ech.insert(f, r.clone())).count()
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let negate = row.first().is_some_and(|(_, v)| v.is_negative());
    if g.is_zero() {
        return;
    }
    if negate {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Rank over the rationals of an integer row set by fraction-free sparse
/// elimination; rows are kept primitive to bound coefficient growth.
pub fn fraction_free_rank(mut rows: Vec<Vec<(usize, BigInt)>>) -> usize {
    rows.sort_by_key(|r| r.len());
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for mut row in rows {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        make_primitive(&mut row);
        loop {
            let Some((c, a)) = row.first().cloned() else {
                break;
            };
            let Some(p) = pivots.get(&c) else {
                pivots.insert(c, row);
                break;
            };
            let b = &p[0].1;
            let g = a.gcd(b);
            let (ra, pb) = (b / &g, &a / &g);
            // row <- (b/g) row - (a/g) p
            let mut out = Vec::with_capacity(row.len() + p.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < p.len() {
                if j == p.len() || (i < row.len() && row[i].0 < p[j].0) {
                    out.push((row[i].0, &ra * &row[i].1));
                    i += 1;
                } else if i == row.len() || p[j].0 < row[i].0 {
                    out.push((p[j].0, -(&pb * &p[j].1)));
                    j += 1;
                } else {
                    let v = &ra * &row[i].1 - &pb * &p[j].1;
                    if !v.is_zero() {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            make_primitive(&mut out);
            row = out;
        }
    }
    pivots.len()
}

/// Linear map between based spaces stored by columns: `cols[j]` is the
/// image of the `j`-th source basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat<E> {
    pub nrows: usize,
    pub cols: Vec<SparseRow<E>>,
}

impl<E: Clone> SparseMat<E> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat {
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply<F: GroundField<Elem = E>>(&self, f: &F, v: &SparseRow<E>) -> SparseRow<E> {
        sparse_from_entries(
            f,
            v.iter().flat_map(|(j, c)| {
                self.cols[*j]
                    .iter()
                    .map(move |(i, x)| (*i, f.mul(c, x)))
            }),
        )
    }

    /// `self ∘ other`.
    pub fn compose<F: GroundField<Elem = E>>(&self, f: &F, other: &SparseMat<E>) -> SparseMat<E> {
        assert_eq!(self.ncols(), other.nrows);
        SparseMat {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(f, c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn rank<F: GroundField<Elem = E>>(&self, f: &F) -> usize {
        f.sparse_rank(self.cols.clone())
    }

    pub fn to_dense<F: GroundField<Elem = E>>(&self, f: &F) -> Mat<E> {
        let mut m = zeros(f, self.nrows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn from_dense<F: GroundField<Elem = E>>(f: &F, m: &Mat<E>) -> Self {
        SparseMat {
            nrows: m.rows(),
            cols: (0..m.cols())
                .map(|j| {
                    (0..m.rows())
                        .filter(|&i| !f.is_zero(m.get(i, j)))
                        .map(|i| (i, m.get(i, j).clone()))
                        .collect()
                })
                .collect(),
        }
    }
}
