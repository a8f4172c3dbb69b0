//! Stabilizer codes as isotropic subspaces of F^n ⊕ F^n.
//!
//! A vector splits as (phase part | shift part), each of length n. The
//! symplectic form of two such vectors is ⟨û, v_shift⟩ − ⟨v̂, u_shift⟩; a
//! subspace on which it vanishes identically is isotropic and labels a
//! commuting family of Weyl operators. Generators are canonicalized to the
//! RREF basis of their span, so equal spaces compare equal.

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{dot_mod, kernel_basis, GFMatrix, Subspace};

/// A labeled pair (phase part | shift part) in F^n ⊕ F^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticVector {
    field: FieldSpec,
    phase: Vec<u64>,
    shift: Vec<u64>,
}

impl SymplecticVector {
    pub fn new(field: FieldSpec, phase: Vec<u64>, shift: Vec<u64>) -> Self {
        assert_eq!(phase.len(), shift.len(), "phase and shift lengths differ");
        let phase = phase.into_iter().map(|v| v % field.p()).collect();
        let shift = shift.into_iter().map(|v| v % field.p()).collect();
        SymplecticVector { field, phase, shift }
    }

    /// Split a row of length 2n into its two halves.
    pub fn from_row(field: FieldSpec, row: &[u64]) -> Self {
        assert!(row.len() % 2 == 0, "row length must be even");
        let n = row.len() / 2;
        Self::new(field, row[..n].to_vec(), row[n..].to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.phase.len()
    }

    pub fn phase_part(&self) -> &[u64] {
        &self.phase
    }

    pub fn shift_part(&self) -> &[u64] {
        &self.shift
    }

    pub fn as_row(&self) -> Vec<u64> {
        let mut row = self.phase.clone();
        row.extend_from_slice(&self.shift);
        row
    }

    pub fn is_zero(&self) -> bool {
        self.phase.iter().chain(&self.shift).all(|&v| v == 0)
    }

    /// Number of positions where the (phase, shift) pair is nonzero.
    pub fn weight(&self) -> usize {
        (0..self.n())
            .filter(|&i| self.phase[i] != 0 || self.shift[i] != 0)
            .count()
    }
}

/// ⟨û, v_shift⟩ − ⟨v̂, u_shift⟩.
pub fn symplectic_form(u: &SymplecticVector, v: &SymplecticVector) -> Scalar {
    assert_eq!(u.field, v.field, "fields differ");
    assert_eq!(u.n(), v.n(), "lengths differ");
    let f = u.field;
    let a = dot_mod(f, &u.phase, &v.shift);
    let b = dot_mod(f, &v.phase, &u.shift);
    f.scalar(f.sub_mod(a, b))
}

pub(crate) fn row_weight(row: &[u64]) -> usize {
    let n = row.len() / 2;
    (0..n).filter(|&i| row[i] != 0 || row[n + i] != 0).count()
}

/// True when the symplectic form vanishes on every pair of generators
/// (pairwise vanishing suffices by bilinearity).
pub fn is_isotropic(generators: &[SymplecticVector]) -> bool {
    for (i, u) in generators.iter().enumerate() {
        for v in &generators[i..] {
            if !symplectic_form(u, v).is_zero() {
                return false;
            }
        }
    }
    true
}

/// An isotropic subspace of F^n ⊕ F^n, stored as a canonical generator
/// basis. Construction fails on non-isotropic input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerSpace {
    field: FieldSpec,
    n: usize,
    space: Subspace,
}

impl StabilizerSpace {
    pub fn new(
        field: FieldSpec,
        n: usize,
        generators: &[SymplecticVector],
    ) -> Result<Self, Error> {
        let rows = generators.iter().map(|g| g.as_row()).collect();
        Self::from_rows(field, n, rows)
    }

    /// Build from raw rows of length 2n. Generators need not be independent
    /// or in any normal form; the span is canonicalized.
    pub fn from_rows(field: FieldSpec, n: usize, rows: Vec<Vec<u64>>) -> Result<Self, Error> {
        for row in &rows {
            if row.len() != 2 * n {
                return Err(Error::BadFile(format!(
                    "generator has {} entries, expected {}",
                    row.len(),
                    2 * n
                )));
            }
        }
        let space = Subspace::from_rows(field, 2 * n, rows);
        Self::from_subspace(field, n, space)
    }

    pub fn from_subspace(field: FieldSpec, n: usize, space: Subspace) -> Result<Self, Error> {
        assert_eq!(space.ambient_dim(), 2 * n, "ambient dimension is not 2n");
        let gens: Vec<SymplecticVector> = (0..space.dim())
            .map(|i| SymplecticVector::from_row(field, space.basis().row(i)))
            .collect();
        if !is_isotropic(&gens) {
            return Err(Error::NotIsotropic);
        }
        debug_assert!(space.dim() <= n, "isotropic dimension exceeds n");
        Ok(StabilizerSpace { field, n, space })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of output systems.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The underlying subspace of F^{2n}.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Canonical generators (RREF basis rows).
    pub fn generators(&self) -> Vec<SymplecticVector> {
        (0..self.dim())
            .map(|i| SymplecticVector::from_row(self.field, self.space.basis().row(i)))
            .collect()
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        self.space.contains_vector(&v.as_row())
    }

    /// Re-check isotropy of the stored basis.
    pub fn is_isotropic(&self) -> bool {
        is_isotropic(&self.generators())
    }

    /// Number of encoded systems: n − dim S.
    pub fn logical_qudits(&self) -> usize {
        self.n - self.dim()
    }

    /// Dimension of the protected subspace: p^(n − dim S).
    pub fn logical_dim(&self) -> u64 {
        self.field
            .p()
            .checked_pow(self.logical_qudits() as u32)
            .expect("logical dimension overflows u64")
    }

    /// The phase parts t with (t | 0) in the space, as a subspace of F^n.
    pub fn degenerate_part(&self) -> Subspace {
        let f = self.field;
        let n = self.n;
        // Intersect with the phase-only coordinate subspace, then project
        // onto the first n coordinates.
        let phase_only = Subspace::from_rows(
            f,
            2 * n,
            (0..n)
                .map(|i| {
                    let mut row = vec![0u64; 2 * n];
                    row[i] = 1;
                    row
                })
                .collect(),
        );
        let inter = self.space.intersect(&phase_only);
        let rows: Vec<Vec<u64>> = (0..inter.dim())
            .map(|i| inter.basis().row(i)[..n].to_vec())
            .collect();
        Subspace::from_rows(f, n, rows)
    }

    /// All vectors of F^{2n} whose symplectic form against the whole space
    /// vanishes. Its dimension is 2n − dim S.
    pub fn centralizer(&self) -> Subspace {
        let f = self.field;
        let n = self.n;
        // form(v, w) = 0 for all generators w is the linear system with
        // constraint rows (w_shift | -w_phase).
        let rows: Vec<Vec<u64>> = self
            .generators()
            .iter()
            .map(|w| {
                let mut row: Vec<u64> = w.shift_part().to_vec();
                row.extend(w.phase_part().iter().map(|&v| f.neg_mod(v)));
                row
            })
            .collect();
        if rows.is_empty() {
            return Subspace::full(f, 2 * n);
        }
        kernel_basis(&GFMatrix::from_rows(f, rows))
    }

    /// Minimum symplectic weight over the centralizer outside the space,
    /// found by exhaustive enumeration. For a maximal isotropic space
    /// (dim S = n) the centralizer equals the space itself and the minimum
    /// runs over its nonzero elements instead.
    pub fn distance_algebraic(&self) -> Result<usize, Error> {
        let cent = self.centralizer();
        let count = (self.field.p() as u128).pow(cent.dim() as u32);
        let limit = 1u128 << 24;
        if count > limit {
            return Err(Error::TooLarge {
                what: "centralizer enumeration",
                needed: count,
                limit,
            });
        }
        let maximal = self.dim() == self.n;
        let mut best: Option<usize> = None;
        cent.for_each_element(|row| {
            if row.iter().all(|&v| v == 0) {
                return;
            }
            if !maximal && self.space.contains_vector(row) {
                return;
            }
            let w = row_weight(row);
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        });
        best.ok_or(Error::Internal("no centralizer element found"))
    }
}
