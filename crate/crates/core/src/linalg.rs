//! Exact sparse linear algebra over ℚ(i).
//!
//! Provides ranks, kernels, images, intersections, sums, quotients and
//! stabilized kernels. Subspaces carry a canonical reduced column echelon
//! basis so that two computations of the same subspace produce identical
//! data, which keeps every report byte-deterministic.

use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Dense coordinate vector. Dimensions in this crate stay small (≤ a few
/// hundred), so dense columns are the simplest exact representation.
pub type Coord = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Coord {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Coord {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn vec_is_zero(v: &Coord) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &Coord, b: &Coord) -> Coord {
    a.iter().zip(b).map(|(x, y)| x.clone() + y).collect()
}

pub fn vec_sub(a: &Coord, b: &Coord) -> Coord {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}

pub fn vec_scale(a: &Coord, c: &Scalar) -> Coord {
    a.iter().map(|x| x * c).collect()
}

/// Sparse matrix with fixed dimensions; zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_entries<I>(rows: usize, cols: usize, it: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in it {
            let cur = m.get(r, c) + &v;
            m.set(r, c, cur);
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Coord]) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for (&(r, c), v) in &self.entries {
            m.set(c, r, v.clone());
        }
        m
    }

    /// Conjugate transpose, used for hermitian adjoints.
    pub fn dagger(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for (&(r, c), v) in &self.entries {
            m.set(c, r, v.conj());
        }
        m
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut m = Self::zero(self.rows, self.cols);
        for (&(r, col), v) in &self.entries {
            m.set(r, col, v * c);
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (&(r, c), v) in &other.entries {
            let cur = m.get(r, c) + v;
            m.set(r, c, cur);
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (&(k2, j), b) in other.entries.range((k, 0)..=(k, usize::MAX)) {
                debug_assert_eq!(k, k2);
                let e = acc.entry((i, j)).or_insert_with(Scalar::zero);
                *e += &(a * b);
            }
        }
        let mut m = Self::zero(self.rows, other.cols);
        for ((i, j), v) in acc {
            m.set(i, j, v);
        }
        m
    }

    pub fn apply(&self, v: &Coord) -> Coord {
        assert_eq!(v.len(), self.cols);
        let mut out = zero_vec(self.rows);
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += &(a * &v[c]);
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Coord {
        let mut out = zero_vec(self.rows);
        for (&(r, c), v) in &self.entries {
            if c == j {
                out[r] = v.clone();
            }
        }
        out
    }

    pub fn columns(&self) -> Vec<Coord> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Restriction to a set of rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let rpos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let cpos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut m = Self::zero(rows.len(), cols.len());
        for (&(r, c), v) in &self.entries {
            if let (Some(&ri), Some(&ci)) = (rpos.get(&r), cpos.get(&c)) {
                m.set(ri, ci, v.clone());
            }
        }
        m
    }

    pub fn pow(&self, k: usize) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }
}

/// Reduced column echelon form of a list of columns. Pivot rows are chosen
/// top-down and each pivot is normalized to 1 and cleared from every other
/// column, so the result is the canonical basis of the column span.
pub fn column_echelon(cols: &[Coord], ambient: usize) -> Vec<Coord> {
    let mut work: Vec<Coord> = cols.iter().filter(|c| !vec_is_zero(c)).cloned().collect();
    for c in &work {
        assert_eq!(c.len(), ambient, "ambient dimension mismatch");
    }
    let mut done: Vec<(usize, Coord)> = Vec::new(); // (pivot row, column)
    for row in 0..ambient {
        let Some(pos) = work.iter().position(|c| !c[row].is_zero()) else {
            continue;
        };
        let mut piv = work.swap_remove(pos);
        let inv = piv[row].inv();
        piv = vec_scale(&piv, &inv);
        for c in work.iter_mut() {
            if !c[row].is_zero() {
                let f = c[row].clone();
                *c = vec_sub(c, &vec_scale(&piv, &f));
            }
        }
        for (_, c) in done.iter_mut() {
            if !c[row].is_zero() {
                let f = c[row].clone();
                *c = vec_sub(c, &vec_scale(&piv, &f));
            }
        }
        done.push((row, piv));
        work.retain(|c| !vec_is_zero(c));
    }
    done.sort_by_key(|(r, _)| *r);
    done.into_iter().map(|(_, c)| c).collect()
}

/// A linear subspace in canonical reduced column echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    pub ambient: usize,
    basis: Vec<Coord>,
}

impl Subspace {
    pub fn from_spanning(ambient: usize, vectors: &[Coord]) -> Self {
        Self { ambient, basis: column_echelon(vectors, ambient) }
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_spanning(ambient, &(0..ambient).map(|i| unit_vec(ambient, i)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Coord] {
        &self.basis
    }

    /// Reduce `v` against the echelon basis; the remainder is zero exactly
    /// when `v` lies in the subspace.
    pub fn reduce(&self, v: &Coord) -> Coord {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.clone();
        for b in &self.basis {
            let pivot = b.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
            if !v[pivot].is_zero() {
                let f = v[pivot].clone();
                v = vec_sub(&v, &vec_scale(b, &f));
            }
        }
        v
    }

    pub fn contains(&self, v: &Coord) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "subspace sum: ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::from_spanning(self.ambient, &all))
    }

    /// Intersection via the kernel of the stacked matrix `[U | -W]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "subspace intersection: ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let mut cols: Vec<Coord> = self.basis.clone();
        for w in &other.basis {
            cols.push(vec_scale(w, &Scalar::from_int(-1)));
        }
        let stacked = SparseMatrix::from_columns(self.ambient, &cols);
        let (ker, _) = kernel_image(&stacked);
        let u_mat = SparseMatrix::from_columns(self.ambient, &self.basis);
        let vectors: Vec<Coord> = ker
            .basis()
            .iter()
            .map(|k| u_mat.apply(&k[..self.dim()].to_vec()))
            .collect();
        Ok(Subspace::from_spanning(self.ambient, &vectors))
    }

    /// Coset representatives spanning `self / other`; requires `other ⊆ self`.
    pub fn quotient_basis(&self, other: &Subspace) -> Result<Vec<Coord>> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension("quotient: ambient mismatch".into()));
        }
        if !self.contains_subspace(other) {
            return Err(Error::Containment("quotient: denominator not contained".into()));
        }
        let mut reps = Vec::new();
        let mut span = other.clone();
        for v in &self.basis {
            if !span.contains(v) {
                reps.push(v.clone());
                let mut ext = span.basis.clone();
                ext.push(v.clone());
                span = Subspace::from_spanning(self.ambient, &ext);
            }
        }
        debug_assert_eq!(reps.len(), self.dim() - other.dim());
        Ok(reps)
    }
}

/// Kernel and image of a matrix, both in canonical form.
pub fn kernel_image(m: &SparseMatrix) -> (Subspace, Subspace) {
    let image = Subspace::from_spanning(m.rows, &m.columns());
    // Row-reduce to find the kernel.
    let mut rows: Vec<Coord> = (0..m.rows).map(|_| zero_vec(m.cols)).collect();
    for (&(r, c), v) in m.entries.iter() {
        rows[r][c] = v.clone();
    }
    let mut pivots: Vec<(usize, Coord)> = Vec::new(); // (pivot col, reduced row)
    for mut row in rows {
        for (pc, prow) in &pivots {
            if !row[*pc].is_zero() {
                let f = row[*pc].clone();
                row = vec_sub(&row, &vec_scale(prow, &f));
            }
        }
        if let Some(pc) = row.iter().position(|x| !x.is_zero()) {
            let inv = row[pc].inv();
            row = vec_scale(&row, &inv);
            for (_, prow) in pivots.iter_mut() {
                if !prow[pc].is_zero() {
                    let f = prow[pc].clone();
                    *prow = vec_sub(prow, &vec_scale(&row, &f));
                }
            }
            pivots.push((pc, row));
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|(c, _)| *c).collect();
    let mut kernel_vectors = Vec::new();
    for free in 0..m.cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = zero_vec(m.cols);
        v[free] = Scalar::one();
        for (pc, prow) in &pivots {
            v[*pc] = -prow[free].clone();
        }
        kernel_vectors.push(v);
    }
    let kernel = Subspace::from_spanning(m.cols, &kernel_vectors);
    (kernel, image)
}

pub fn rank(m: &SparseMatrix) -> usize {
    kernel_image(m).1.dim()
}

/// One solution of `M x = b`, if any.
pub fn solve(m: &SparseMatrix, b: &Coord) -> Option<Coord> {
    assert_eq!(b.len(), m.rows);
    let mut cols = m.columns();
    cols.push(b.clone());
    let aug = SparseMatrix::from_columns(m.rows, &cols);
    let (ker, _) = kernel_image(&aug);
    // A kernel vector with nonzero last coordinate yields a solution.
    for k in ker.basis() {
        let last = &k[m.cols];
        if !last.is_zero() {
            let inv = last.inv();
            let scaled = vec_scale(k, &inv);
            return Some(scaled[..m.cols].iter().map(|x| -x.clone()).collect());
        }
    }
    None
}

/// Result of iterating kernels of powers until stabilization.
pub struct StableKernel {
    pub kernel: Subspace,
    pub power: usize,
    /// `ker M == ker M²`, i.e. the eigenvalue 0 part of `M` acts semisimply.
    pub semisimple_at_zero: bool,
}

pub fn stable_kernel(m: &SparseMatrix) -> StableKernel {
    assert_eq!(m.rows, m.cols, "stable kernel needs a square matrix");
    let (k1, _) = kernel_image(m);
    let mut prev = k1.clone();
    let mut power = 1;
    let mut mk = m.clone();
    loop {
        mk = mk.matmul(m);
        power += 1;
        let (k, _) = kernel_image(&mk);
        if k.dim() == prev.dim() {
            return StableKernel {
                kernel: prev,
                power: power - 1,
                semisimple_at_zero: k1.dim() == k.dim() && power - 1 == 1,
            };
        }
        // strictly increasing and bounded by the dimension
        prev = k;
        if power > m.rows + 1 {
            unreachable!("kernel chain failed to stabilize");
        }
    }
}
