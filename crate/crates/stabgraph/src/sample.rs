//! Random code generators for property tests.

use rand::Rng;

use crate::field::FieldSpec;
use crate::graph::{GammaBlocks, GraphCode};
use crate::linalg::GFMatrix;
use crate::stabilizer::{symplectic_form, StabilizerSpace, SymplecticVector};

/// Random isotropic subspace of F^n ⊕ F^n of the requested dimension (or a
/// random one up to n). The basis grows by rejection: candidate vectors must
/// commute with the current span and extend it.
pub fn random_isotropic<R: Rng>(
    rng: &mut R,
    field: FieldSpec,
    n: usize,
    dim: Option<usize>,
) -> StabilizerSpace {
    let target = dim.unwrap_or_else(|| rng.gen_range(0..=n));
    assert!(target <= n, "isotropic dimension cannot exceed n");
    let p = field.p();
    let mut gens: Vec<SymplecticVector> = Vec::new();
    let mut space = StabilizerSpace::from_rows(field, n, vec![]).unwrap();
    while space.dim() < target {
        let phase: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let shift: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let cand = SymplecticVector::new(field, phase, shift);
        if gens.iter().any(|g| !symplectic_form(g, &cand).is_zero()) {
            continue;
        }
        if space.contains(&cand) {
            continue;
        }
        gens.push(cand);
        space = StabilizerSpace::new(field, n, &gens).expect("grown basis stays isotropic");
    }
    space
}

/// Random valid graph code with the requested partition: a symmetric output
/// block (with zero diagonal over GF(2), where the canonical character needs
/// it) and jointly independent input and auxiliary columns, found by
/// rejection. Requires `n_inputs + n_aux <= n_outputs`.
pub fn random_graph_code<R: Rng>(
    rng: &mut R,
    field: FieldSpec,
    n_inputs: usize,
    n_aux: usize,
    n_outputs: usize,
) -> GraphCode {
    assert!(
        n_inputs + n_aux <= n_outputs,
        "input and auxiliary columns cannot be independent"
    );
    let p = field.p();
    let mut a = GFMatrix::zeros(field, n_outputs, n_outputs);
    for r in 0..n_outputs {
        for c in r..n_outputs {
            if r == c && p == 2 {
                continue;
            }
            let v = rng.gen_range(0..p);
            a.set_entry(r, c, v);
            a.set_entry(c, r, v);
        }
    }
    loop {
        let b = random_matrix(rng, field, n_outputs, n_inputs);
        let c = random_matrix(rng, field, n_outputs, n_aux);
        if b.hstack(&c).rank() == n_inputs + n_aux {
            let g = GammaBlocks { a, b, c }.assemble();
            debug_assert!(g.is_valid());
            return g;
        }
    }
}

fn random_matrix<R: Rng>(rng: &mut R, field: FieldSpec, rows: usize, cols: usize) -> GFMatrix {
    let mut m = GFMatrix::zeros(field, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set_entry(r, c, rng.gen_range(0..field.p()));
        }
    }
    m
}
