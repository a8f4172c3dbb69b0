//! Shared fixtures for unit tests: the worked example codes.

use crate::field::FieldSpec;
use crate::graph::GraphCode;
use crate::linalg::GFMatrix;
use crate::stabilizer::{StabilizerSpace, SymplecticVector};

/// Length-five code: one input wired to every output, outputs in a
/// five-cycle.
pub(crate) fn pentagon_code(field: FieldSpec) -> GraphCode {
    let gamma = GFMatrix::from_rows(
        field,
        vec![
            vec![0, 1, 1, 1, 1, 1],
            vec![1, 0, 1, 0, 0, 1],
            vec![1, 1, 0, 1, 0, 0],
            vec![1, 0, 1, 0, 1, 0],
            vec![1, 0, 0, 1, 0, 1],
            vec![1, 1, 0, 0, 1, 0],
        ],
    );
    GraphCode::new(1, 0, 5, gamma)
}

/// Element of the pentagon code's isotropic space at parameter k in F^4:
/// phase (-k1-k3-k4, k1+k3, k2+k4, -k1-k2-k4, k1+k4), shift
/// (k1, k2, k3, k4, -k1-k2-k3-k4).
pub(crate) fn pentagon_element(field: FieldSpec, k: [i64; 4]) -> SymplecticVector {
    let s = |v: i64| field.scalar_from_i64(v).value();
    let phase = vec![
        s(-k[0] - k[2] - k[3]),
        s(k[0] + k[2]),
        s(k[1] + k[3]),
        s(-k[0] - k[1] - k[3]),
        s(k[0] + k[3]),
    ];
    let shift = vec![
        s(k[0]),
        s(k[1]),
        s(k[2]),
        s(k[3]),
        s(-k[0] - k[1] - k[2] - k[3]),
    ];
    SymplecticVector::new(field, phase, shift)
}

/// The pentagon code's isotropic space, spanned by the four unit-parameter
/// elements.
pub(crate) fn pentagon_space(field: FieldSpec) -> StabilizerSpace {
    let rows = (0..4)
        .map(|i| {
            let mut k = [0i64; 4];
            k[i] = 1;
            pentagon_element(field, k).as_row()
        })
        .collect();
    StabilizerSpace::from_rows(field, 5, rows).unwrap()
}

/// The self-dual space D ⊕ D with D the diagonal line in F^4.
pub(crate) fn self_dual_space(field: FieldSpec) -> StabilizerSpace {
    StabilizerSpace::from_rows(
        field,
        4,
        vec![
            vec![1, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        ],
    )
    .unwrap()
}

/// The seven-vertex graph code equivalent to the self-dual space: two
/// inputs, one auxiliary vertex, four outputs.
pub(crate) fn self_dual_code(field: FieldSpec) -> GraphCode {
    let gamma = GFMatrix::from_rows(
        field,
        vec![
            vec![0, 0, 0, 0, 1, 0, 1],
            vec![0, 0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![1, 0, 1, 0, 0, 0, 0],
            vec![0, 1, 1, 0, 0, 0, 0],
            vec![1, 1, 1, 0, 0, 0, 0],
        ],
    );
    GraphCode::new(2, 1, 4, gamma)
}

/// Length-six degenerate example: three phase-only generators and two
/// mixed ones.
pub(crate) fn length_six_rows() -> Vec<Vec<u64>> {
    vec![
        vec![1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0],
        vec![0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1],
    ]
}

pub(crate) fn length_six_space(field: FieldSpec) -> StabilizerSpace {
    StabilizerSpace::from_rows(field, 6, length_six_rows()).unwrap()
}
