//! Exact linear algebra over a [`Field`]: dense row reduction, kernels,
//! inverses, and an incremental sparse echelon form for large ranks.

use std::collections::BTreeMap;

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref<F: Field<Elem = E>>(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = field.inv(self.get(r, c));
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for j in c..self.cols {
                    let rv = self.get(r, j);
                    if field.is_zero(rv) {
                        continue;
                    }
                    let v = field.sub(self.get(i, j), &field.mul(&factor, rv));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse<F: Field<Elem = E>>(&self, field: &F) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, field.one());
        }
        let pivots = aug.rref(field);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Row-reduces a list of vectors and returns a basis of their span in
/// reduced echelon form.
pub fn span_basis<F: Field>(field: &F, vectors: Vec<Vec<F::Elem>>, dim: usize) -> Vec<Vec<F::Elem>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_rows(vectors);
    debug_assert_eq!(m.cols(), dim);
    let r = m.rref(field).len();
    m.to_rows().into_iter().take(r).collect()
}

/// Incremental echelon form of sparse vectors, used to compute ranks of
/// large sparse matrices one row at a time.
pub struct SparseEchelon<F: Field> {
    field: F,
    /// pivot column -> monic row with that leading column
    pivots: BTreeMap<usize, Vec<(usize, F::Elem)>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F) -> Self {
        SparseEchelon {
            field,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` (sorted by column, no zeros) against the current
    /// pivots; inserts it when independent. Returns whether it was.
    pub fn insert(&mut self, mut row: Vec<(usize, F::Elem)>) -> bool {
        let f = &self.field;
        loop {
            let Some((lead_col, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead_col) {
                Some(prow) => {
                    row = axpy_sparse(f, &row, &f.neg(&lead_val), prow);
                }
                None => {
                    let inv = f.inv(&lead_val);
                    let row: Vec<_> = row.into_iter().map(|(c, v)| (c, f.mul(&v, &inv))).collect();
                    self.pivots.insert(lead_col, row);
                    return true;
                }
            }
        }
    }
}

/// `a + s * b` for sparse sorted vectors.
fn axpy_sparse<F: Field>(
    f: &F,
    a: &[(usize, F::Elem)],
    s: &F::Elem,
    b: &[(usize, F::Elem)],
) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f.mul(s, &b[j].1)));
            j += 1;
        } else {
            let v = f.add(&a[i].1, &f.mul(s, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a sparse matrix given by its rows.
pub fn sparse_rank<F: Field>(field: &F, rows: impl IntoIterator<Item = Vec<(usize, F::Elem)>>) -> usize {
    let mut ech = SparseEchelon::new(field.clone());
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_kernel_inverse() {
        let q = Rationals;
        let i = |v: i64| q.from_i64(v);
        let m = Matrix::from_rows(vec![
            vec![i(1), i(2), i(3)],
            vec![i(2), i(4), i(6)],
            vec![i(1), i(0), i(1)],
        ]);
        assert_eq!(m.rank(&q), 2);
        let ker = m.kernel(&q);
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&q, &ker[0]).iter().all(|x| q.is_zero(x)));
        assert!(m.inverse(&q).is_none());

        let a = Matrix::from_rows(vec![vec![i(2), i(1)], vec![i(1), i(1)]]);
        let inv = a.inverse(&q).unwrap();
        assert_eq!(a.mul(&q, &inv), Matrix::identity(&q, 2));
    }

    #[test]
    fn sparse_matches_dense() {
        let f = PrimeField::new(101).unwrap();
        let rows = vec![
            vec![(0, 1u32), (2, 5)],
            vec![(1, 3), (2, 1)],
            vec![(0, 2), (1, 3), (2, 11)],
            vec![(2, 7)],
        ];
        let mut dense = Matrix::zeros(&f, 4, 3);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row {
                dense.set(r, *c, *v);
            }
        }
        assert_eq!(sparse_rank(&f, rows), dense.rank(&f));
    }
}
