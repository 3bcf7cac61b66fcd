//! Exact matrices and subspaces.
//!
//! [`SparseMatrix`] is the storage used for maps (most maps in this crate are
//! signed permutation matrices or close to it). [`Matrix`] is a dense
//! row-major matrix used by the eliminator, and [`Span`] keeps a subspace in
//! reduced row echelon form together with coordinates relative to the
//! vectors it was built from.

use std::collections::BTreeMap;

use crate::scalars::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += c * x`.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(c * xi);
        }
    }
}

pub fn scale_vector(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Column-sparse matrix; each column holds `(row, value)` pairs sorted by row
/// with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let columns = (0..n).map(|i| vec![(i, field.one())]).collect();
        SparseMatrix {
            field,
            rows: n,
            cols: n,
            columns,
        }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triples(
        field: Field,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triples {
            assert!(
                r < rows && c < cols,
                "triple ({r},{c}) outside {rows}x{cols}"
            );
            match acc[c].entry(r) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(v);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &v;
                }
            }
        }
        let columns = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix {
            field,
            rows,
            cols,
            columns,
        }
    }

    /// Builds from dense columns.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Self {
        let columns = cols
            .iter()
            .map(|c| {
                assert_eq!(c.len(), rows);
                c.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            field,
            rows,
            cols: cols.len(),
            columns,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.columns[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => self.columns[c][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Iterates `(row, col, value)` in column-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// Entrywise rewrite; returning `None` drops the entry.
    pub fn map_entries(&self, mut f: impl FnMut(usize, usize, &Scalar) -> Option<Scalar>) -> Self {
        let columns = self
            .columns
            .iter()
            .enumerate()
            .map(|(c, col)| {
                col.iter()
                    .filter_map(|(r, v)| f(*r, c, v).filter(|x| !x.is_zero()).map(|x| (*r, x)))
                    .collect()
            })
            .collect();
        SparseMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let columns = rhs
            .columns
            .iter()
            .map(|rcol| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, b) in rcol {
                    for (i, a) in &self.columns[*k] {
                        let prod = a * b;
                        acc.entry(*i).and_modify(|x| *x += &prod).or_insert(prod);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            columns,
        }
    }

    fn combine(&self, rhs: &SparseMatrix, subtract: bool) -> SparseMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Scalar> = a.iter().cloned().collect();
                for (i, v) in b {
                    let v = if subtract { -v } else { v.clone() };
                    acc.entry(*i).and_modify(|x| *x += &v).or_insert(v);
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.combine(rhs, true)
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        self.map_entries(|_, _, v| Some(c * v))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_triples(
            self.field,
            self.cols,
            self.rows,
            self.triples().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.cols);
        let mut y = zero_vector(self.field, self.rows);
        for (c, col) in self.columns.iter().enumerate() {
            if x[c].is_zero() {
                continue;
            }
            for (r, v) in col {
                y[*r] += &(v * &x[c]);
            }
        }
        y
    }

    /// Row-major flattening, index `r * cols + c`.
    pub fn flatten(&self) -> Vector {
        let mut out = zero_vector(self.field, self.rows * self.cols);
        for (r, c, v) in self.triples() {
            out[r * self.cols + c] = v.clone();
        }
        out
    }

    pub fn unflatten(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> SparseMatrix {
        assert_eq!(v.len(), rows * cols);
        SparseMatrix::from_triples(
            field,
            rows,
            cols,
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k / cols, k % cols, x.clone())),
        )
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, self.cols);
        for (r, c, v) in self.triples() {
            m[(r, c)] = v.clone();
        }
        m
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for k in c..self.cols {
                let v = &self[(r, k)] * &inv;
                self[(r, k)] = v;
            }
            let pivot_row: Vector = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for (k, pv) in (c..self.cols).zip(&pivot_row) {
                    if !pv.is_zero() {
                        let d = &f * pv;
                        self[(i, k)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vector(self.field, self.cols);
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_triples(
            self.field,
            self.rows,
            self.cols,
            (0..self.rows).flat_map(|r| {
                (0..self.cols)
                    .filter(move |&c| !self[(r, c)].is_zero())
                    .map(move |c| (r, c, self[(r, c)].clone()))
            }),
        )
    }
}

/// A subspace of `field^ambient` kept in reduced echelon form, remembering
/// how each echelon row was built from the generators it was given.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    ambient: usize,
    generators: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    transform: Vec<Vector>,
}

impl Span {
    pub fn new(field: Field, ambient: usize) -> Self {
        Span {
            field,
            ambient,
            generators: 0,
            rows: Vec::new(),
            pivots: Vec::new(),
            transform: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(
        field: Field,
        ambient: usize,
        vecs: impl IntoIterator<Item = &'a Vector>,
    ) -> Self {
        let mut s = Span::new(field, ambient);
        for v in vecs {
            s.push(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn generator_count(&self) -> usize {
        self.generators
    }
    pub fn echelon_rows(&self) -> &[Vector] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon rows, returning the remainder and the
    /// generator combination that was subtracted.
    fn reduce(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut rem = v.to_vec();
        let mut combo = zero_vector(self.field, self.generators);
        for (row, (&p, t)) in self
            .rows
            .iter()
            .zip(self.pivots.iter().zip(&self.transform))
        {
            if rem[p].is_zero() {
                continue;
            }
            let c = rem[p].clone();
            axpy(&mut rem, &-&c, row);
            axpy(&mut combo, &c, &t[..]);
        }
        (rem, combo)
    }

    /// Adds a generator; returns `true` if it enlarged the span.
    pub fn push(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        for t in &mut self.transform {
            t.push(self.field.zero());
        }
        self.generators += 1;
        let (mut rem, combo) = self.reduce(v);
        let Some(p) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // new row = (v - combo·gens) normalised
        let mut t: Vector = combo.iter().map(|x| -x).collect();
        t[self.generators - 1] = self.field.one();
        let inv = rem[p].inv().expect("nonzero");
        rem.iter_mut().for_each(|x| *x *= &inv);
        t.iter_mut().for_each(|x| *x *= &inv);
        for (row, tr) in self.rows.iter_mut().zip(self.transform.iter_mut()) {
            if row[p].is_zero() {
                continue;
            }
            let c = -&row[p];
            axpy(row, &c, &rem);
            axpy(tr, &c, &t);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, rem);
        self.transform.insert(at, t);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v).0)
    }

    /// Coefficients expressing `v` in the generators, if `v` lies in the span.
    /// Unique when the generators were independent.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let (rem, combo) = self.reduce(v);
        is_zero_vector(&rem).then_some(combo)
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_subspace(&self, other: &Span) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.contains_span(other)
    }
}

/// Basis of the common kernel of the given square operators on `field^n`,
/// found by successive refinement: each operator only has to be solved on the
/// kernel left by the previous ones.
pub fn common_kernel(field: Field, n: usize, ops: &[SparseMatrix]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = zero_vector(field, n);
            v[i] = field.one();
            v
        })
        .collect();
    for op in ops {
        if basis.is_empty() {
            break;
        }
        basis = refine_kernel(field, &basis, |b| op.apply(b));
    }
    basis
}

/// Given a basis `b₁…b_k` and a linear map `L`, returns a basis of
/// `{Σ tᵢbᵢ : Σ tᵢ L(bᵢ) = 0}`.
pub fn refine_kernel(
    field: Field,
    basis: &[Vector],
    mut image: impl FnMut(&Vector) -> Vector,
) -> Vec<Vector> {
    let images: Vec<Vector> = basis.iter().map(&mut image).collect();
    let rows = images.first().map_or(0, Vec::len);
    if images.iter().all(|v| is_zero_vector(v)) {
        return basis.to_vec();
    }
    let m = Matrix::from_columns(field, rows, &images);
    let n = basis.first().map_or(0, Vec::len);
    m.kernel()
        .into_iter()
        .map(|t| {
            let mut v = zero_vector(field, n);
            for (c, b) in t.iter().zip(basis) {
                axpy(&mut v, c, b);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::rationals().from_i64(n)
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = Field::rationals();
        let m = Matrix::from_rows(f, 3, &[vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            let mv = m.to_sparse().apply(v);
            assert!(is_zero_vector(&mv));
        }
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 3
        let rows = |f: Field| {
            Matrix::from_rows(
                f,
                2,
                &[
                    vec![f.from_i64(1), f.from_i64(1)],
                    vec![f.from_i64(-1), f.from_i64(2)],
                ],
            )
        };
        assert_eq!(rows(Field::rationals()).rank(), 2);
        assert_eq!(rows(Field::gf(3)).rank(), 1);
    }

    #[test]
    fn span_coords_recover_combination() {
        let f = Field::rationals();
        let a = vec![q(1), q(0), q(2)];
        let b = vec![q(0), q(1), q(1)];
        let s = Span::from_vectors(f, 3, [&a, &b]);
        let x: Vector = a
            .iter()
            .zip(&b)
            .map(|(u, v)| &(u * &q(3)) - &(v * &q(5)))
            .collect();
        assert_eq!(s.coords(&x).unwrap(), vec![q(3), q(-5)]);
        assert!(s.coords(&[q(0), q(0), q(1)]).is_none());
    }

    #[test]
    fn span_dependent_generator_does_not_grow() {
        let f = Field::gf(5);
        let a = vec![f.from_i64(1), f.from_i64(2)];
        let b = vec![f.from_i64(2), f.from_i64(4)];
        let mut s = Span::new(f, 2);
        assert!(s.push(&a));
        assert!(!s.push(&b));
        assert_eq!(s.dim(), 1);
        let c = s.coords(&b).unwrap();
        // 2a reproduces b
        let rebuilt: Vector = a.iter().map(|x| x * &c[0]).collect::<Vec<_>>();
        let rebuilt: Vector = rebuilt
            .iter()
            .zip(b.iter().map(|x| x * &c[1]))
            .map(|(u, v)| u + &v)
            .collect();
        assert_eq!(rebuilt, b);
    }

    #[test]
    fn sparse_product_matches_dense() {
        let f = Field::rationals();
        let a = SparseMatrix::from_triples(f, 2, 3, [(0, 0, q(1)), (1, 2, q(-2)), (0, 1, q(3))]);
        let b = SparseMatrix::from_triples(f, 3, 2, [(0, 1, q(4)), (2, 0, q(5)), (1, 1, q(1))]);
        assert_eq!(a.mul(&b).to_dense(), a.to_dense().mul(&b.to_dense()));
        assert_eq!(a.transpose().transpose(), a);
        let flat = a.flatten();
        assert_eq!(SparseMatrix::unflatten(f, 2, 3, &flat), a);
    }
}
