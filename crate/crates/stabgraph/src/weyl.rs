//! Dense complex realizations of the codes: Weyl operators, the explicit
//! code isometry, stabilizer eigenvalue checks, Knill-Laflamme scans and
//! the numerical distance. This is the oracle side: everything the exact
//! algebra claims is re-checked here on concrete matrices.
//!
//! The computational basis of the p^n-dimensional space is indexed by digit
//! vectors over GF(p) in lexicographic order, most significant digit first.
//! A Weyl operator labeled (phase | shift) multiplies basis function values
//! by the p-th root of unity raised to ⟨phase, g⟩ and translates the
//! argument by the shift.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::TAU;

use crate::convert::graph_to_stabilizer;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::graph::GraphCode;
use crate::linalg::dot_mod;
use crate::stabilizer::SymplecticVector;

/// Unitarity of materialized Weyl matrices.
pub const TOL_UNITARY: f64 = 1e-12;
/// Orthonormality of isometry columns.
pub const TOL_ISOMETRY: f64 = 1e-10;
/// Eigenvalue equations and scalar-multiple checks.
pub const TOL_EIGEN: f64 = 1e-9;
/// Knill-Laflamme scalar deviation.
pub const TOL_KL: f64 = 1e-9;
/// Projector comparison in the equivalence search.
pub const TOL_EQUIV: f64 = 1e-8;

const DENSE_LIMIT: u128 = 1 << 12;
const SEARCH_LIMIT: u128 = 1 << 16;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone)]
pub struct CplxMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CplxMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CplxMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn multiply(&self, other: &CplxMatrix) -> CplxMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = CplxMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CplxMatrix {
        let mut out = CplxMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn sub(&self, other: &CplxMatrix) -> CplxMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shapes differ");
        let mut out = self.clone();
        for i in 0..out.data.len() {
            out.data[i] -= other.data[i];
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> CplxMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= factor;
        }
        out
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// ‖MᴴM − I‖_max.
    pub fn unitarity_defect(&self) -> f64 {
        let id = CplxMatrix::identity(self.cols);
        self.adjoint().multiply(self).sub(&id).max_abs()
    }

    pub fn max_abs_diff(&self, other: &CplxMatrix) -> f64 {
        self.sub(other).max_abs()
    }
}

/// exp(2πi·a/p).
pub fn root_of_unity(field: FieldSpec, a: u64) -> Complex64 {
    let angle = TAU * (a % field.p()) as f64 / field.p() as f64;
    Complex64::new(angle.cos(), angle.sin())
}

pub(crate) fn pow_u128(p: u64, n: usize) -> u128 {
    (p as u128).pow(n as u32)
}

fn check_dense_limit(field: FieldSpec, n: usize, what: &'static str) -> Result<usize, Error> {
    let size = pow_u128(field.p(), n);
    if size > DENSE_LIMIT {
        return Err(Error::TooLarge {
            what,
            needed: size,
            limit: DENSE_LIMIT,
        });
    }
    Ok(size as usize)
}

/// Lexicographic index of a digit vector, most significant digit first.
pub fn digits_to_index(field: FieldSpec, digits: &[u64]) -> usize {
    let p = field.p() as usize;
    digits.iter().fold(0usize, |acc, &d| acc * p + d as usize)
}

pub fn index_to_digits(field: FieldSpec, n: usize, index: usize) -> Vec<u64> {
    let p = field.p() as usize;
    let mut out = vec![0u64; n];
    let mut rem = index;
    for i in (0..n).rev() {
        out[i] = (rem % p) as u64;
        rem /= p;
    }
    out
}

/// Materialize the Weyl operator with the given label as a p^n × p^n
/// unitary: row g maps from column g − shift with phase ⟨phase, g⟩.
pub fn weyl_matrix(label: &SymplecticVector) -> Result<CplxMatrix, Error> {
    let field = label.field();
    let n = label.n();
    let size = check_dense_limit(field, n, "Weyl matrix")?;
    let mut m = CplxMatrix::zeros(size, size);
    for row in 0..size {
        let g = index_to_digits(field, n, row);
        let phase = root_of_unity(field, dot_mod(field, label.phase_part(), &g));
        let src: Vec<u64> = (0..n)
            .map(|i| field.sub_mod(g[i], label.shift_part()[i]))
            .collect();
        m.set(row, digits_to_index(field, &src), phase);
    }
    Ok(m)
}

/// Apply a Weyl operator to a tall matrix without materializing it:
/// out[g] = phase(g) · m[g − shift].
pub fn apply_weyl(m: &CplxMatrix, label: &SymplecticVector) -> CplxMatrix {
    let field = label.field();
    let n = label.n();
    let size = pow_u128(field.p(), n) as usize;
    assert_eq!(m.rows(), size, "matrix height differs from p^n");
    let mut out = CplxMatrix::zeros(m.rows(), m.cols());
    for row in 0..size {
        let g = index_to_digits(field, n, row);
        let phase = root_of_unity(field, dot_mod(field, label.phase_part(), &g));
        let src: Vec<u64> = (0..n)
            .map(|i| field.sub_mod(g[i], label.shift_part()[i]))
            .collect();
        let src_row = digits_to_index(field, &src);
        for c in 0..m.cols() {
            out.set(row, c, phase * m.get(src_row, c));
        }
    }
    out
}

/// Composition law: w(u)·w(v) = phase · w(u + v) with
/// phase = exp(−2πi·⟨v_phase, u_shift⟩/p).
pub fn weyl_compose(
    u: &SymplecticVector,
    v: &SymplecticVector,
) -> (Complex64, SymplecticVector) {
    assert_eq!(u.field(), v.field(), "fields differ");
    assert_eq!(u.n(), v.n(), "lengths differ");
    let field = u.field();
    let d = dot_mod(field, v.phase_part(), u.shift_part());
    let phase = root_of_unity(field, field.neg_mod(d));
    let sum_phase: Vec<u64> = u
        .phase_part()
        .iter()
        .zip(v.phase_part())
        .map(|(&a, &b)| field.add_mod(a, b))
        .collect();
    let sum_shift: Vec<u64> = u
        .shift_part()
        .iter()
        .zip(v.shift_part())
        .map(|(&a, &b)| field.add_mod(a, b))
        .collect();
    (phase, SymplecticVector::new(field, sum_phase, sum_shift))
}

fn check_character_support(g: &GraphCode) -> Result<(), Error> {
    if g.field().p() == 2 {
        let total = g.total_vertices();
        for i in 0..total {
            if g.gamma().entry(i, i) != 0 {
                return Err(Error::UnsupportedCharacter);
            }
        }
    }
    Ok(())
}

/// The canonical character value at a full vertex vector v.
///
/// For odd p this is exp(2πi·⟨Γv, v⟩/(2p)) realized with the field inverse
/// of two; for p = 2 it is (−1)^Q(v) with Q the sum of Γ(z, z')·v_z·v_z'
/// over strictly ordered pairs, which requires a zero diagonal.
pub fn tau_character(g: &GraphCode, v: &[u64]) -> Result<Complex64, Error> {
    let field = g.field();
    let total = g.total_vertices();
    assert_eq!(v.len(), total, "vector length differs from vertex count");
    check_character_support(g)?;
    if field.p() == 2 {
        let mut q = 0u64;
        for z in 0..total {
            if v[z] % 2 == 0 {
                continue;
            }
            for z2 in (z + 1)..total {
                q += g.gamma().entry(z, z2) * (v[z] % 2) * (v[z2] % 2);
            }
        }
        Ok(if q % 2 == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(-1.0, 0.0)
        })
    } else {
        let gv = g.gamma().mul_vec(v);
        let quad = dot_mod(field, &gv, v);
        let half = field.inv_mod(2 % field.p());
        Ok(root_of_unity(field, field.mul_mod(half, quad)))
    }
}

/// The code map of a graph code as a dense p^|Y| × p^|X| matrix with
/// orthonormal columns whenever the code corrects at least zero errors.
/// Entry (g, h) is the auxiliary average (|G||F|)^(-1/2) Σ_f τ(h ⊕ f ⊕ g).
#[derive(Debug, Clone)]
pub struct CodeIsometry {
    graph: GraphCode,
    matrix: CplxMatrix,
}

impl CodeIsometry {
    pub fn graph(&self) -> &GraphCode {
        &self.graph
    }

    pub fn matrix(&self) -> &CplxMatrix {
        &self.matrix
    }

    /// ‖VᴴV − I‖_max: zero for an exact isometry.
    pub fn isometry_defect(&self) -> f64 {
        self.matrix.unitarity_defect()
    }

    pub fn is_isometric(&self, tol: f64) -> bool {
        self.isometry_defect() <= tol
    }
}

/// Materialize the code map of a valid graph code.
pub fn encode_isometry(g: &GraphCode) -> Result<CodeIsometry, Error> {
    let violations = g.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidGraph(violations));
    }
    check_character_support(g)?;
    let field = g.field();
    let (nx, nj, ny) = (g.n_inputs(), g.n_aux(), g.n_outputs());
    let rows = check_dense_limit(field, ny, "code isometry")?;
    let cols = pow_u128(field.p(), nx) as usize;
    let aux_count = pow_u128(field.p(), nj) as usize;
    let norm = 1.0 / ((rows as f64) * (aux_count as f64)).sqrt();
    let mut matrix = CplxMatrix::zeros(rows, cols);
    let mut v = vec![0u64; nx + nj + ny];
    for col in 0..cols {
        let h = index_to_digits(field, nx, col);
        for row in 0..rows {
            let gout = index_to_digits(field, ny, row);
            let mut acc = Complex64::new(0.0, 0.0);
            for f_idx in 0..aux_count {
                let f = index_to_digits(field, nj, f_idx);
                v[..nx].copy_from_slice(&h);
                v[nx..nx + nj].copy_from_slice(&f);
                v[nx + nj..].copy_from_slice(&gout);
                acc += tau_character(g, &v)?;
            }
            matrix.set(row, col, acc * norm);
        }
    }
    Ok(CodeIsometry {
        graph: g.clone(),
        matrix,
    })
}

/// Eigenvalue check of one derived generator.
#[derive(Debug, Clone, Serialize)]
pub struct EigenEntry {
    /// Generator as a row (phase | shift).
    pub generator: Vec<u64>,
    pub lambda_re: f64,
    pub lambda_im: f64,
    /// ‖W·V − λ·V‖_max.
    pub deviation: f64,
    /// Expected character value when the generator is exactly (A·k | k).
    pub tau_re_im: Option<(f64, f64)>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EigencheckReport {
    pub entries: Vec<EigenEntry>,
    pub pass: bool,
}

/// Check that every derived stabilizer generator fixes the code space up to
/// a unit phase, and that the phase equals the canonical character whenever
/// the generator's phase part is exactly A·shift.
pub fn stabilizer_eigencheck(
    g: &GraphCode,
    iso: &CodeIsometry,
) -> Result<EigencheckReport, Error> {
    let space = graph_to_stabilizer(g)?;
    let a = g.blocks().a;
    let v = iso.matrix();
    // Reference entry for reading off the eigenvalue.
    let (mut ri, mut ci, mut best) = (0usize, 0usize, -1.0f64);
    for r in 0..v.rows() {
        for c in 0..v.cols() {
            let mag = v.get(r, c).norm();
            if mag > best {
                best = mag;
                ri = r;
                ci = c;
            }
        }
    }
    let mut entries = Vec::new();
    let mut all_pass = true;
    for gen in space.generators() {
        let wv = apply_weyl(v, &gen);
        let lambda = wv.get(ri, ci) / v.get(ri, ci);
        let deviation = wv.sub(&v.scale(lambda)).max_abs();
        let unit_defect = (lambda.norm() - 1.0).abs();
        let ak = a.mul_vec(gen.shift_part());
        let phase_only_zero = gen
            .phase_part()
            .iter()
            .zip(&ak)
            .all(|(&x, &y)| x == y);
        let mut tau_re_im = None;
        let mut tau_ok = true;
        if phase_only_zero {
            let mut full = vec![0u64; g.total_vertices()];
            full[g.n_inputs() + g.n_aux()..].copy_from_slice(gen.shift_part());
            let tau = tau_character(g, &full)?;
            tau_ok = (lambda - tau).norm() <= TOL_EIGEN;
            tau_re_im = Some((tau.re, tau.im));
        }
        let pass = deviation <= TOL_EIGEN && unit_defect <= TOL_EIGEN && tau_ok;
        all_pass &= pass;
        entries.push(EigenEntry {
            generator: gen.as_row(),
            lambda_re: lambda.re,
            lambda_im: lambda.im,
            deviation,
            tau_re_im,
            pass,
        });
    }
    Ok(EigencheckReport {
        entries,
        pass: all_pass,
    })
}

/// Visit every strictly increasing support set of the given size.
fn for_each_support(n: usize, w: usize, f: &mut impl FnMut(&[usize])) {
    if w > n {
        return;
    }
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        f(&idx);
        // Advance the rightmost index that can move.
        let mut i = w;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - w {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..w {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Visit every symplectic label of exactly the given weight, in
/// lexicographic (support, digits) order. The label is a row (phase | shift).
pub fn for_each_label_of_weight(
    field: FieldSpec,
    n: usize,
    weight: usize,
    mut f: impl FnMut(&SymplecticVector),
) {
    if weight == 0 {
        f(&SymplecticVector::new(field, vec![0; n], vec![0; n]));
        return;
    }
    let p = field.p();
    let pairs = p * p;
    for_each_support(n, weight, &mut |support| {
        // Each position carries a nonzero (phase, shift) pair encoded as a
        // base-p² digit in 1..p².
        let mut digits = vec![1u64; weight];
        loop {
            let mut phase = vec![0u64; n];
            let mut shift = vec![0u64; n];
            for (slot, &pos) in support.iter().enumerate() {
                phase[pos] = digits[slot] / p;
                shift[pos] = digits[slot] % p;
            }
            f(&SymplecticVector::new(field, phase, shift));
            let mut advanced = false;
            for d in (0..weight).rev() {
                digits[d] += 1;
                if digits[d] == pairs {
                    digits[d] = 1;
                } else {
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    });
}

/// Aggregate result of scanning all error operators of one weight.
#[derive(Debug, Clone, Serialize)]
pub struct WeightCheck {
    pub weight: usize,
    pub labels_checked: usize,
    pub violations: usize,
    pub max_deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct KlReport {
    pub max_weight: usize,
    pub weights: Vec<WeightCheck>,
    pub pass: bool,
}

fn kl_weight_scan(iso: &CodeIsometry, weight: usize) -> WeightCheck {
    let g = iso.graph();
    let field = g.field();
    let ny = g.n_outputs();
    let v = iso.matrix();
    let vh = v.adjoint();
    let k = v.cols() as f64;
    let mut labels_checked = 0usize;
    let mut violations = 0usize;
    let mut max_deviation = 0.0f64;
    for_each_label_of_weight(field, ny, weight, |label| {
        labels_checked += 1;
        let m = vh.multiply(&apply_weyl(v, label));
        let scalar = m.trace() / k;
        let dev = m.sub(&CplxMatrix::identity(v.cols()).scale(scalar)).max_abs();
        if dev > TOL_KL {
            violations += 1;
        }
        max_deviation = max_deviation.max(dev);
    });
    WeightCheck {
        weight,
        labels_checked,
        violations,
        max_deviation,
        pass: violations == 0,
    }
}

/// Scan every Weyl error of weight up to `max_weight` and test that the
/// compressed operator VᴴWV is a scalar multiple of the identity.
pub fn kl_check(iso: &CodeIsometry, max_weight: usize) -> KlReport {
    let mut weights = Vec::new();
    let mut pass = true;
    for w in 0..=max_weight {
        let check = kl_weight_scan(iso, w);
        pass &= check.pass;
        weights.push(check);
    }
    KlReport {
        max_weight,
        weights,
        pass,
    }
}

/// Smallest weight at which the scalar condition fails. Defined for codes
/// with at least one input.
pub fn distance_kl(iso: &CodeIsometry) -> Result<usize, Error> {
    if iso.graph().n_inputs() == 0 {
        return Err(Error::NoLogicalInputs);
    }
    let ny = iso.graph().n_outputs();
    for w in 1..=ny {
        if !kl_weight_scan(iso, w).pass {
            return Ok(w);
        }
    }
    Err(Error::Internal("no violating error weight found"))
}

/// The discrete Fourier matrix on one tensor factor: unitary, and by
/// conjugation it exchanges the shift and multiplier roles on that factor.
pub fn local_fourier(field: FieldSpec, n: usize, factor: usize) -> Result<CplxMatrix, Error> {
    assert!(factor < n, "factor index out of range");
    let size = check_dense_limit(field, n, "local Fourier matrix")?;
    let p = field.p();
    let norm = 1.0 / (p as f64).sqrt();
    let mut m = CplxMatrix::zeros(size, size);
    for row in 0..size {
        let a = index_to_digits(field, n, row);
        for col in 0..size {
            let b = index_to_digits(field, n, col);
            let matches = (0..n).all(|i| i == factor || a[i] == b[i]);
            if !matches {
                continue;
            }
            let phase = root_of_unity(field, field.mul_mod(a[factor], b[factor]));
            m.set(row, col, phase * norm);
        }
    }
    Ok(m)
}

/// Projector onto the protected subspace: V·Vᴴ.
pub fn code_projector(iso: &CodeIsometry) -> CplxMatrix {
    iso.matrix().multiply(&iso.matrix().adjoint())
}

/// Search all Weyl labels for one conjugating the first projector onto the
/// second. Returns the first match in lexicographic label order.
pub fn weyl_equivalent(
    p1: &CplxMatrix,
    p2: &CplxMatrix,
    field: FieldSpec,
    n: usize,
) -> Result<Option<SymplecticVector>, Error> {
    assert_eq!((p1.rows(), p1.cols()), (p2.rows(), p2.cols()), "shapes differ");
    let labels = pow_u128(field.p(), 2 * n);
    if labels > SEARCH_LIMIT {
        return Err(Error::TooLarge {
            what: "Weyl equivalence search",
            needed: labels,
            limit: SEARCH_LIMIT,
        });
    }
    let size = pow_u128(field.p(), n) as usize;
    assert_eq!(p1.rows(), size, "projector size differs from p^n");
    if (p1.trace() - p2.trace()).norm() > TOL_EQUIV {
        return Ok(None); // trace obstruction
    }
    for idx in 0..labels as usize {
        let digits = index_to_digits(field, 2 * n, idx);
        let label = SymplecticVector::from_row(field, &digits);
        // (w P1 w†)[a][b] = ε(⟨phase, a⟩ − ⟨phase, b⟩) P1[a − g][b − g]
        let mut ok = true;
        'rows: for a in 0..size {
            let da = index_to_digits(field, n, a);
            let pa = dot_mod(field, label.phase_part(), &da);
            let sa: Vec<u64> = (0..n)
                .map(|i| field.sub_mod(da[i], label.shift_part()[i]))
                .collect();
            let src_a = digits_to_index(field, &sa);
            for b in 0..size {
                let db = index_to_digits(field, n, b);
                let pb = dot_mod(field, label.phase_part(), &db);
                let sb: Vec<u64> = (0..n)
                    .map(|i| field.sub_mod(db[i], label.shift_part()[i]))
                    .collect();
                let src_b = digits_to_index(field, &sb);
                let phase = root_of_unity(field, field.sub_mod(pa, pb));
                let val = phase * p1.get(src_a, src_b);
                if (val - p2.get(a, b)).norm() > TOL_EQUIV {
                    ok = false;
                    break 'rows;
                }
            }
        }
        if ok {
            return Ok(Some(label));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::GFMatrix;
    use crate::testutil::{pentagon_code, self_dual_code};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn sv(field: FieldSpec, phase: &[u64], shift: &[u64]) -> SymplecticVector {
        SymplecticVector::new(field, phase.to_vec(), shift.to_vec())
    }

    fn single_edge_code(field: FieldSpec) -> GraphCode {
        GraphCode::new(
            1,
            0,
            1,
            GFMatrix::from_rows(field, vec![vec![0, 1], vec![1, 0]]),
        )
    }

    #[test]
    fn weyl_matrix_examples() {
        let f2 = gf(2);
        let id = weyl_matrix(&sv(f2, &[0], &[0])).unwrap();
        assert!(id.max_abs_diff(&CplxMatrix::identity(2)) < 1e-15);

        let flip = weyl_matrix(&sv(f2, &[0], &[1])).unwrap();
        let mut x = CplxMatrix::zeros(2, 2);
        x.set(0, 1, Complex64::new(1.0, 0.0));
        x.set(1, 0, Complex64::new(1.0, 0.0));
        assert!(flip.max_abs_diff(&x) < 1e-15);

        let mult = weyl_matrix(&sv(f2, &[1], &[0])).unwrap();
        let mut z = CplxMatrix::zeros(2, 2);
        z.set(0, 0, Complex64::new(1.0, 0.0));
        z.set(1, 1, Complex64::new(-1.0, 0.0));
        assert!(mult.max_abs_diff(&z) < 1e-15);
    }

    #[test]
    fn weyl_matrices_are_unitary() {
        for p in [2u64, 3] {
            let f = gf(p);
            for n in 1..=2usize {
                let labels = pow_u128(p, 2 * n) as usize;
                for idx in 0..labels {
                    let digits = index_to_digits(f, 2 * n, idx);
                    let w = weyl_matrix(&SymplecticVector::from_row(f, &digits)).unwrap();
                    assert!(w.unitarity_defect() <= TOL_UNITARY);
                }
            }
        }
    }

    #[test]
    fn weyl_matrix_size_guard() {
        let f2 = gf(2);
        let label = sv(f2, &[0; 13], &[0; 13]);
        assert!(matches!(weyl_matrix(&label), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn compose_phase_matches_matrix_products_exhaustively() {
        for p in [2u64, 3] {
            let f = gf(p);
            for n in 1..=2usize {
                let labels = pow_u128(p, 2 * n) as usize;
                for i in 0..labels {
                    for j in 0..labels {
                        let u = SymplecticVector::from_row(f, &index_to_digits(f, 2 * n, i));
                        let v = SymplecticVector::from_row(f, &index_to_digits(f, 2 * n, j));
                        let (phase, sum) = weyl_compose(&u, &v);
                        let lhs = weyl_matrix(&u).unwrap().multiply(&weyl_matrix(&v).unwrap());
                        let rhs = weyl_matrix(&sum).unwrap().scale(phase);
                        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn compose_examples() {
        let f2 = gf(2);
        let u = sv(f2, &[1], &[0]);
        let v = sv(f2, &[0], &[1]);
        let id = sv(f2, &[0], &[0]);
        let (phase, _) = weyl_compose(&u, &id);
        assert!((phase - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let (uv, _) = weyl_compose(&u, &v);
        let (vu, _) = weyl_compose(&v, &u);
        assert!((uv + vu).norm() < 1e-15); // anticommuting pair

        let f3 = gf(3);
        let a = sv(f3, &[1], &[0]);
        let b = sv(f3, &[0], &[1]);
        // A multiplier applied after a shift picks up no phase; the other
        // order picks up ε(−1). Both against the matrix product oracle.
        for (u, v) in [(&a, &b), (&b, &a)] {
            let (phase, sum) = weyl_compose(u, v);
            let lhs = weyl_matrix(u).unwrap().multiply(&weyl_matrix(v).unwrap());
            let rhs = weyl_matrix(&sum).unwrap().scale(phase);
            assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        }
        let (phase, _) = weyl_compose(&a, &b);
        assert!((phase - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let (phase, _) = weyl_compose(&b, &a);
        assert!((phase - root_of_unity(f3, 2)).norm() < 1e-15); // ε(−1)
    }

    #[test]
    fn tau_examples() {
        let f2 = gf(2);
        let single = single_edge_code(f2);
        assert!((tau_character(&single, &[0, 0]).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((tau_character(&single, &[1, 1]).unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-15);

        let pent = pentagon_code(f2);
        let v = [0, 1, 0, 0, 0, 1]; // input 0, outputs 1 and 5 set
        assert!((tau_character(&pent, &v).unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn tau_guard_for_characteristic_two_diagonal() {
        let f2 = gf(2);
        let mut gamma = GFMatrix::zeros(f2, 2, 2);
        gamma.set_entry(0, 1, 1);
        gamma.set_entry(1, 0, 1);
        gamma.set_entry(1, 1, 1);
        let g = GraphCode::new(1, 0, 1, gamma);
        assert!(matches!(
            tau_character(&g, &[0, 1]),
            Err(Error::UnsupportedCharacter)
        ));
    }

    /// The character must turn addition of labels into the composition
    /// phase of the corresponding Weyl operators.
    fn check_cocycle(g: &GraphCode, samples: usize, seed: u64) {
        let field = g.field();
        let total = g.total_vertices();
        let p = field.p();
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..samples {
            let v: Vec<u64> = (0..total).map(|_| rng.gen_range(0..p)).collect();
            let w: Vec<u64> = (0..total).map(|_| rng.gen_range(0..p)).collect();
            let sum: Vec<u64> = v.iter().zip(&w).map(|(&a, &b)| field.add_mod(a, b)).collect();
            let gv = g.gamma().mul_vec(&w);
            let cross = dot_mod(field, &gv, &v);
            let lhs = tau_character(g, &v).unwrap() * tau_character(g, &w).unwrap();
            let rhs = root_of_unity(field, field.neg_mod(cross)) * tau_character(g, &sum).unwrap();
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn tau_cocycle_identity() {
        let f2 = gf(2);
        check_cocycle(&pentagon_code(f2), 500, 101);
        check_cocycle(&self_dual_code(f2), 500, 102);
        let f3 = gf(3);
        let mut gamma = GFMatrix::zeros(f3, 3, 3);
        for (r, c, v) in [(0, 1, 1), (0, 2, 2), (1, 2, 1), (1, 1, 2), (2, 2, 1)] {
            gamma.set_entry(r, c, v);
            gamma.set_entry(c, r, v);
        }
        let odd = GraphCode::new(1, 0, 2, gamma);
        check_cocycle(&odd, 500, 103);
    }

    #[test]
    fn single_edge_isometry_is_the_fourier_matrix() {
        let f2 = gf(2);
        let iso = encode_isometry(&single_edge_code(f2)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut expected = CplxMatrix::zeros(2, 2);
        expected.set(0, 0, Complex64::new(s, 0.0));
        expected.set(0, 1, Complex64::new(s, 0.0));
        expected.set(1, 0, Complex64::new(s, 0.0));
        expected.set(1, 1, Complex64::new(-s, 0.0));
        assert!(iso.matrix().max_abs_diff(&expected) < 1e-15);
        assert!(iso.isometry_defect() < 1e-15);
    }

    #[test]
    fn pentagon_isometry_is_isometric() {
        let f2 = gf(2);
        let iso = encode_isometry(&pentagon_code(f2)).unwrap();
        assert_eq!(iso.matrix().rows(), 32);
        assert_eq!(iso.matrix().cols(), 2);
        assert!(iso.isometry_defect() <= TOL_ISOMETRY);
    }

    #[test]
    fn self_dual_isometry_is_isometric() {
        let f2 = gf(2);
        let iso = encode_isometry(&self_dual_code(f2)).unwrap();
        assert_eq!(iso.matrix().rows(), 16);
        assert_eq!(iso.matrix().cols(), 4);
        assert!(iso.isometry_defect() <= TOL_ISOMETRY);
    }

    #[test]
    fn inputless_uniform_state() {
        let f2 = gf(2);
        let g = GraphCode::new(0, 0, 1, GFMatrix::zeros(f2, 1, 1));
        let iso = encode_isometry(&g).unwrap();
        assert_eq!(iso.matrix().rows(), 2);
        assert_eq!(iso.matrix().cols(), 1);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((iso.matrix().get(0, 0) - Complex64::new(s, 0.0)).norm() < 1e-15);
        assert!((iso.matrix().get(1, 0) - Complex64::new(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pentagon_eigencheck_passes_with_character_values() {
        let f2 = gf(2);
        let g = pentagon_code(f2);
        let iso = encode_isometry(&g).unwrap();
        let report = stabilizer_eigencheck(&g, &iso).unwrap();
        assert!(report.pass);
        assert_eq!(report.entries.len(), 4);
        for e in &report.entries {
            assert!(e.tau_re_im.is_some());
        }
    }

    #[test]
    fn pentagon_specific_eigenvalue() {
        let f2 = gf(2);
        let g = pentagon_code(f2);
        let iso = encode_isometry(&g).unwrap();
        // Element with shift (1,0,0,0,1): its eigenvalue is the character
        // value −1 computed in tau_examples.
        let shift = vec![1, 0, 0, 0, 1];
        let phase = g.blocks().a.mul_vec(&shift);
        let label = SymplecticVector::new(f2, phase, shift);
        let wv = apply_weyl(iso.matrix(), &label);
        let expected = iso.matrix().scale(Complex64::new(-1.0, 0.0));
        assert!(wv.max_abs_diff(&expected) <= TOL_EIGEN);
    }

    #[test]
    fn identity_generator_has_unit_eigenvalue() {
        let f2 = gf(2);
        let g = pentagon_code(f2);
        let iso = encode_isometry(&g).unwrap();
        let label = sv(f2, &[0; 5], &[0; 5]);
        let wv = apply_weyl(iso.matrix(), &label);
        assert!(wv.max_abs_diff(iso.matrix()) < 1e-15);
    }

    #[test]
    fn self_dual_eigencheck_passes() {
        let f2 = gf(2);
        let g = self_dual_code(f2);
        let iso = encode_isometry(&g).unwrap();
        let report = stabilizer_eigencheck(&g, &iso).unwrap();
        assert!(report.pass);
        // The phase-only generator (1,1,1,1 | 0,0,0,0) is among the derived
        // generators and must fix the code space with a unit phase.
        let label = sv(f2, &[1, 1, 1, 1], &[0, 0, 0, 0]);
        let wv = apply_weyl(iso.matrix(), &label);
        let lambda = wv.get(0, 0) / iso.matrix().get(0, 0);
        assert!((lambda.norm() - 1.0).abs() <= TOL_EIGEN);
        assert!(wv.max_abs_diff(&iso.matrix().scale(lambda)) <= TOL_EIGEN);
    }

    #[test]
    fn label_enumeration_counts() {
        let f2 = gf(2);
        let mut count = 0;
        for_each_label_of_weight(f2, 5, 2, |_| count += 1);
        assert_eq!(count, 10 * 9); // C(5,2) supports × 3² nonzero pairs
        let mut count0 = 0;
        for_each_label_of_weight(f2, 5, 0, |l| {
            assert!(l.is_zero());
            count0 += 1;
        });
        assert_eq!(count0, 1);
    }

    #[test]
    fn kl_scan_on_pentagon() {
        let f2 = gf(2);
        let iso = encode_isometry(&pentagon_code(f2)).unwrap();
        let report = kl_check(&iso, 2);
        assert!(report.pass);
        assert_eq!(report.weights.len(), 3);
        let failing = kl_check(&iso, 3);
        assert!(!failing.pass);
        assert!(failing.weights[3].violations > 0);
    }

    #[test]
    fn kl_weight_zero_is_the_identity_check() {
        let f2 = gf(2);
        let iso = encode_isometry(&single_edge_code(f2)).unwrap();
        let report = kl_check(&iso, 0);
        assert!(report.pass);
        assert_eq!(report.weights[0].labels_checked, 1);
    }

    #[test]
    fn numerical_distances() {
        let f2 = gf(2);
        assert_eq!(
            distance_kl(&encode_isometry(&pentagon_code(f2)).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            distance_kl(&encode_isometry(&self_dual_code(f2)).unwrap()).unwrap(),
            2
        );
        assert_eq!(
            distance_kl(&encode_isometry(&single_edge_code(f2)).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn distance_kl_needs_inputs() {
        let f2 = gf(2);
        let g = GraphCode::new(0, 0, 1, GFMatrix::zeros(f2, 1, 1));
        let iso = encode_isometry(&g).unwrap();
        assert!(matches!(distance_kl(&iso), Err(Error::NoLogicalInputs)));
    }

    #[test]
    fn fourier_factor_examples() {
        let f2 = gf(2);
        let h = local_fourier(f2, 1, 0).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((h.get(0, 0) - Complex64::new(s, 0.0)).norm() < 1e-15);
        assert!((h.get(1, 1) - Complex64::new(-s, 0.0)).norm() < 1e-15);
        assert!(h.unitarity_defect() <= TOL_UNITARY);
    }

    #[test]
    fn fourier_conjugation_swaps_shift_and_multiplier() {
        for p in [2u64, 3] {
            let f = gf(p);
            let n = 2usize;
            for factor in 0..n {
                let fm = local_fourier(f, n, factor).unwrap();
                let fmh = fm.adjoint();
                let mut shift = vec![0u64; n];
                shift[factor] = 1;
                let w = weyl_matrix(&SymplecticVector::new(f, vec![0; n], shift)).unwrap();
                let conj = fm.multiply(&w).multiply(&fmh);
                // Expect a multiplier on the same factor, up to a global phase.
                let mut found = false;
                for a in 0..p {
                    let mut phase = vec![0u64; n];
                    phase[factor] = a;
                    let cand = weyl_matrix(&SymplecticVector::new(f, phase, vec![0; n])).unwrap();
                    for r in 0..p {
                        let scaled = cand.scale(root_of_unity(f, r));
                        if conj.max_abs_diff(&scaled) < 1e-12 {
                            found = true;
                        }
                    }
                }
                assert!(found, "conjugated shift is not a multiplier (p = {p})");
            }
        }
    }

    #[test]
    fn fourier_squared_is_the_parity_permutation() {
        let f3 = gf(3);
        let fm = local_fourier(f3, 1, 0).unwrap();
        let sq = fm.multiply(&fm);
        let mut parity = CplxMatrix::zeros(3, 3);
        for a in 0..3usize {
            parity.set(a, (3 - a) % 3, Complex64::new(1.0, 0.0));
        }
        assert!(sq.max_abs_diff(&parity) < 1e-12);
    }

    #[test]
    fn projector_properties() {
        let f2 = gf(2);
        let iso = encode_isometry(&single_edge_code(f2)).unwrap();
        let p = code_projector(&iso);
        assert!(p.max_abs_diff(&CplxMatrix::identity(2)) < 1e-12);

        let iso = encode_isometry(&pentagon_code(f2)).unwrap();
        let p = code_projector(&iso);
        assert!(p.multiply(&p).max_abs_diff(&p) <= TOL_EIGEN);
        assert!(p.adjoint().max_abs_diff(&p) <= TOL_EIGEN);
        assert!((p.trace() - Complex64::new(2.0, 0.0)).norm() <= TOL_EIGEN);

        let iso = encode_isometry(&self_dual_code(f2)).unwrap();
        let p = code_projector(&iso);
        assert!((p.trace() - Complex64::new(4.0, 0.0)).norm() <= TOL_EIGEN);
    }

    #[test]
    fn equivalence_search() {
        let f2 = gf(2);
        let iso = encode_isometry(&single_edge_code(f2)).unwrap();
        let p1 = code_projector(&iso);
        let found = weyl_equivalent(&p1, &p1, f2, 1).unwrap().unwrap();
        assert!(found.is_zero());

        // Conjugate by a multiplier and recover some valid conjugator.
        let g = pentagon_code(f2);
        let iso = encode_isometry(&g).unwrap();
        let p1 = code_projector(&iso);
        let label = sv(f2, &[1, 0, 0, 0, 0], &[0; 5]);
        let w = weyl_matrix(&label).unwrap();
        let p2 = w.multiply(&p1).multiply(&w.adjoint());
        let found = weyl_equivalent(&p1, &p2, f2, 5).unwrap().expect("conjugator exists");
        let wf = weyl_matrix(&found).unwrap();
        let back = wf.multiply(&p1).multiply(&wf.adjoint());
        assert!(back.max_abs_diff(&p2) <= TOL_EQUIV);

        // Different ranks can never be equivalent.
        let small = code_projector(&encode_isometry(&single_edge_code(f2)).unwrap());
        let mut embedded = CplxMatrix::zeros(2, 2);
        embedded.set(0, 0, Complex64::new(1.0, 0.0));
        assert!(weyl_equivalent(&small, &embedded, f2, 1).unwrap().is_none());
    }
}
