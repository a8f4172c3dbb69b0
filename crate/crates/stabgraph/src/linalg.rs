//! Exact dense linear algebra over GF(p).
//!
//! Matrices are row-major with entries stored as canonical residues.
//! Subspaces are kept in a canonical form: the reduced row echelon basis of
//! their span, with zero rows dropped. Two subspaces are equal exactly when
//! their canonical bases are equal entry-wise. The dual pairing between a
//! space and its dual is realized as the standard dot product throughout, so
//! adjoints are transposes and annihilators are orthogonal complements.

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};

/// Dense matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GFMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl GFMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        GFMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from integer rows; entries are reduced mod p.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<u64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            for &v in r {
                data.push(v % field.p());
            }
        }
        GFMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.field.scalar(self.entry(r, c))
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar from a different field");
        self.set_entry(r, c, v.value());
    }

    /// Raw residue at (r, c).
    pub fn entry(&self, r: usize, c: usize) -> u64 {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: u64) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.entry(r, c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.entry(r, c) != self.entry(c, r) {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut out = GFMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.entry(r, c);
            }
        }
        out
    }

    pub fn multiply(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!(self.field, other.field, "fields differ");
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = GFMatrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = self.field.mul_mod(a, other.entry(k, c));
                    out.data[r * other.cols + c] =
                        self.field.add_mod(out.data[r * other.cols + c], v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!(self.field, other.field, "fields differ");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shapes differ");
        let mut out = self.clone();
        for i in 0..out.data.len() {
            out.data[i] = self.field.add_mod(out.data[i], other.data[i]);
        }
        out
    }

    pub fn sub(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!(self.field, other.field, "fields differ");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shapes differ");
        let mut out = self.clone();
        for i in 0..out.data.len() {
            out.data[i] = self.field.sub_mod(out.data[i], other.data[i]);
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length differs from column count");
        (0..self.rows)
            .map(|r| dot_mod(self.field, self.row(r), v))
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!(self.field, other.field, "fields differ");
        assert_eq!(self.rows, other.rows, "row counts differ");
        let mut out = GFMatrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[r * out.cols + c] = self.entry(r, c);
            }
            for c in 0..other.cols {
                out.data[r * out.cols + self.cols + c] = other.entry(r, c);
            }
        }
        out
    }

    /// Vertical concatenation, `self` on top.
    pub fn vstack(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!(self.field, other.field, "fields differ");
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        GFMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn submatrix(&self, row_start: usize, row_end: usize, col_start: usize, col_end: usize) -> GFMatrix {
        assert!(row_end <= self.rows && col_end <= self.cols && row_start <= row_end && col_start <= col_end);
        let mut out = GFMatrix::zeros(self.field, row_end - row_start, col_end - col_start);
        for r in row_start..row_end {
            for c in col_start..col_end {
                out.data[(r - row_start) * out.cols + (c - col_start)] = self.entry(r, c);
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the strictly increasing pivot columns.
    pub fn rref(&self) -> (GFMatrix, Vec<usize>) {
        let mut m = self.clone();
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.entry(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv_mod(m.entry(r, c));
            for j in 0..m.cols {
                let v = f.mul_mod(m.entry(r, j), inv);
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.entry(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub_mod(m.entry(i, j), f.mul_mod(factor, m.entry(r, j)));
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One solution of `self · x = rhs`, if any.
    pub fn solve(&self, rhs: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length differs");
        let rhs_col = GFMatrix::from_rows(self.field, rhs.iter().map(|&v| vec![v]).collect());
        let rhs_col = if self.rows == 0 {
            GFMatrix::zeros(self.field, 0, 1)
        } else {
            rhs_col
        };
        let aug = self.hstack(&rhs_col);
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent system
        }
        let mut x = vec![0u64; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = red.entry(i, self.cols);
        }
        Some(x)
    }
}

pub(crate) fn dot_mod(field: FieldSpec, a: &[u64], b: &[u64]) -> u64 {
    assert_eq!(a.len(), b.len(), "vector lengths differ");
    let mut acc = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        acc = field.add_mod(acc, field.mul_mod(x, y));
    }
    acc
}

/// A linear subspace of F^n in canonical form: its basis is the RREF of any
/// spanning set, zero rows dropped. Equality of values is equality of spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: GFMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(field: FieldSpec, ambient_dim: usize, rows: Vec<Vec<u64>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient_dim, "row length differs from ambient dimension");
        }
        let m = if rows.is_empty() {
            GFMatrix::zeros(field, 0, ambient_dim)
        } else {
            GFMatrix::from_rows(field, rows)
        };
        Self::from_span(&m)
    }

    /// Row space of `m`, canonicalized.
    pub fn from_span(m: &GFMatrix) -> Self {
        let (red, pivots) = m.rref();
        let dim = pivots.len();
        let basis = red.submatrix(0, dim, 0, m.cols());
        Subspace {
            field: m.field(),
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: GFMatrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: GFMatrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical RREF basis, one row per basis vector.
    pub fn basis(&self) -> &GFMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical representative of `v` modulo this subspace: subtract the
    /// basis combination that clears the pivot coordinates. The result is
    /// zero exactly when `v` lies in the subspace.
    pub fn reduce_vector(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient_dim, "vector length differs from ambient dimension");
        let f = self.field;
        let mut w = v.to_vec();
        for (i, &piv) in self.pivots.iter().enumerate() {
            let c = w[piv];
            if c == 0 {
                continue;
            }
            for j in 0..self.ambient_dim {
                w[j] = f.sub_mod(w[j], f.mul_mod(c, self.basis.entry(i, j)));
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        self.reduce_vector(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimensions differ");
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimensions differ");
        Subspace::from_span(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimensions differ");
        self.ortho_complement()
            .sum(&other.ortho_complement())
            .ortho_complement()
    }

    /// All vectors orthogonal to this subspace under the dot product.
    pub fn ortho_complement(&self) -> Subspace {
        kernel_basis(&self.basis)
    }

    /// Matrix of `v ↦ reduce_vector(v)`: the identity minus the pivot-rule
    /// basis combination. Idempotent, kernel is this subspace, image is the
    /// set of vectors with zero pivot coordinates.
    pub fn reduction_matrix(&self) -> GFMatrix {
        let n = self.ambient_dim;
        let f = self.field;
        let mut m = GFMatrix::identity(f, n);
        for (i, &piv) in self.pivots.iter().enumerate() {
            for r in 0..n {
                let v = f.sub_mod(m.entry(r, piv), self.basis.entry(i, r));
                m.set_entry(r, piv, v);
            }
        }
        m
    }

    /// Visit every element of the subspace, including zero, in lexicographic
    /// order of basis coefficients. The caller is responsible for sizing.
    pub fn for_each_element(&self, mut f: impl FnMut(&[u64])) {
        let p = self.field.p();
        let dim = self.dim();
        let n = self.ambient_dim;
        let mut coeffs = vec![0u64; dim];
        let mut current = vec![0u64; n];
        loop {
            f(&current);
            // Odometer increment; every digit step adds basis row j once,
            // because a rollover from p-1 to 0 is also +1 mod p.
            let mut j = dim;
            let mut advanced = false;
            for d in 0..dim {
                coeffs[d] += 1;
                for c in 0..n {
                    current[c] = self.field.add_mod(current[c], self.basis.entry(d, c));
                }
                if coeffs[d] == p {
                    coeffs[d] = 0;
                } else {
                    j = d;
                    advanced = true;
                    break;
                }
            }
            let _ = j;
            if !advanced {
                return;
            }
        }
    }

    /// All elements, materialized. Guarded against large spaces.
    pub fn elements(&self) -> Result<Vec<Vec<u64>>, Error> {
        let count = (self.field.p() as u128).pow(self.dim() as u32);
        let limit = 1u128 << 20;
        if count > limit {
            return Err(Error::TooLarge {
                what: "subspace enumeration",
                needed: count,
                limit,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        self.for_each_element(|v| out.push(v.to_vec()));
        Ok(out)
    }
}

/// Null space `{v : m·v = 0}` in canonical form.
pub fn kernel_basis(m: &GFMatrix) -> Subspace {
    let f = m.field();
    let n = m.cols();
    let (red, pivots) = m.rref();
    let mut rows = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg_mod(red.entry(i, free));
        }
        rows.push(v);
    }
    Subspace::from_rows(f, n, rows)
}

/// Column space of `m` in canonical form.
pub fn image_basis(m: &GFMatrix) -> Subspace {
    Subspace::from_span(&m.transpose())
}

/// Idempotent matrix projecting onto `target`: the identity on `target`,
/// zero on the complement spanned by the non-pivot coordinate axes of the
/// target's RREF basis. `within` only enters through the containment
/// precondition.
pub fn projection_onto(target: &Subspace, within: &Subspace) -> Result<GFMatrix, Error> {
    assert_eq!(target.ambient_dim(), within.ambient_dim(), "ambient dimensions differ");
    if !within.contains(target) {
        return Err(Error::NotContained);
    }
    let n = target.ambient_dim();
    let mut p = GFMatrix::zeros(target.field(), n, n);
    for (i, &piv) in target.pivots().iter().enumerate() {
        for r in 0..n {
            p.set_entry(r, piv, target.basis().entry(i, r));
        }
    }
    Ok(p)
}

/// Canonical coset representatives spanning `big / small`, as the columns of
/// an (ambient × quotient-dimension) matrix: each big-basis vector is reduced
/// modulo `small` (clearing small's pivot coordinates) and the survivors are
/// put in RREF.
pub fn quotient_representatives(big: &Subspace, small: &Subspace) -> Result<GFMatrix, Error> {
    assert_eq!(big.ambient_dim(), small.ambient_dim(), "ambient dimensions differ");
    if !big.contains(small) {
        return Err(Error::NotContained);
    }
    let rows: Vec<Vec<u64>> = (0..big.dim())
        .map(|i| small.reduce_vector(big.basis().row(i)))
        .collect();
    let reps = Subspace::from_rows(big.field(), big.ambient_dim(), rows);
    Ok(reps.basis().transpose())
}
