//! Graph codes: a symmetric matrix over GF(p) with an input / auxiliary /
//! output vertex partition.
//!
//! The matrix acts on coordinates ordered inputs, then auxiliaries, then
//! outputs, and must vanish on the (input ∪ auxiliary) × (input ∪ auxiliary)
//! block. The three nonzero blocks are the output-output block `A`
//! (symmetric), the output-input block `B` (injective) and the
//! output-auxiliary block `C`.

use std::fmt::Write as _;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::GFMatrix;

/// A graph code: symmetric matrix plus vertex partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCode {
    field: FieldSpec,
    n_inputs: usize,
    n_aux: usize,
    n_outputs: usize,
    gamma: GFMatrix,
}

/// The three nonzero blocks of a valid graph-code matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaBlocks {
    /// Output × output block, symmetric.
    pub a: GFMatrix,
    /// Output × input block, injective as a linear map.
    pub b: GFMatrix,
    /// Output × auxiliary block.
    pub c: GFMatrix,
}

/// A failed graph-code invariant, with the offending indices where useful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Matrix size does not equal the square of the vertex count.
    ShapeMismatch { expected: usize, rows: usize, cols: usize },
    /// `gamma[row][col] != gamma[col][row]`.
    NotSymmetric { row: usize, col: usize },
    /// Nonzero entry inside the (input ∪ auxiliary) square block.
    InputBlockNonzero { row: usize, col: usize },
    /// More input vertices than output vertices.
    InputsExceedOutputs { inputs: usize, outputs: usize },
    /// The output × input block has rank below the input count.
    BNotInjective { rank: usize, inputs: usize },
    /// The column spaces of the input and auxiliary blocks intersect
    /// nontrivially, so the code map collapses information.
    InputAuxOverlap,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ShapeMismatch { expected, rows, cols } => write!(
                f,
                "matrix is {rows}x{cols} but the vertex partition needs {expected}x{expected}"
            ),
            Violation::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            Violation::InputBlockNonzero { row, col } => write!(
                f,
                "nonzero entry at ({row}, {col}) inside the input/auxiliary block"
            ),
            Violation::InputsExceedOutputs { inputs, outputs } => {
                write!(f, "{inputs} inputs exceed {outputs} outputs")
            }
            Violation::BNotInjective { rank, inputs } => write!(
                f,
                "output-input block has rank {rank}, expected {inputs} (not injective)"
            ),
            Violation::InputAuxOverlap => write!(
                f,
                "input and auxiliary column spaces overlap inside the output block"
            ),
        }
    }
}

pub(crate) fn describe_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl GraphCode {
    /// Bundle a matrix with a vertex partition. Only the shape is enforced
    /// here; call [`GraphCode::validate`] for the full invariant list.
    pub fn new(n_inputs: usize, n_aux: usize, n_outputs: usize, gamma: GFMatrix) -> Self {
        let total = n_inputs + n_aux + n_outputs;
        assert_eq!(gamma.rows(), total, "matrix rows do not match vertex count");
        assert_eq!(gamma.cols(), total, "matrix cols do not match vertex count");
        GraphCode {
            field: gamma.field(),
            n_inputs,
            n_aux,
            n_outputs,
            gamma,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_aux(&self) -> usize {
        self.n_aux
    }

    pub fn n_outputs(&self) -> usize {
        self.n_outputs
    }

    pub fn total_vertices(&self) -> usize {
        self.n_inputs + self.n_aux + self.n_outputs
    }

    pub fn gamma(&self) -> &GFMatrix {
        &self.gamma
    }

    /// Human-readable vertex name: `x<i>` for inputs, `j<i>` for
    /// auxiliaries, `y<i>` for outputs.
    pub fn vertex_label(&self, index: usize) -> String {
        if index < self.n_inputs {
            format!("x{index}")
        } else if index < self.n_inputs + self.n_aux {
            format!("j{}", index - self.n_inputs)
        } else {
            format!("y{}", index - self.n_inputs - self.n_aux)
        }
    }

    /// Check every invariant; an empty list means the code is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let total = self.total_vertices();
        if self.gamma.rows() != total || self.gamma.cols() != total {
            out.push(Violation::ShapeMismatch {
                expected: total,
                rows: self.gamma.rows(),
                cols: self.gamma.cols(),
            });
            return out;
        }
        for r in 0..total {
            for c in (r + 1)..total {
                if self.gamma.entry(r, c) != self.gamma.entry(c, r) {
                    out.push(Violation::NotSymmetric { row: r, col: c });
                }
            }
        }
        let top = self.n_inputs + self.n_aux;
        for r in 0..top {
            for c in 0..top {
                if self.gamma.entry(r, c) != 0 {
                    out.push(Violation::InputBlockNonzero { row: r, col: c });
                }
            }
        }
        if self.n_inputs > self.n_outputs {
            out.push(Violation::InputsExceedOutputs {
                inputs: self.n_inputs,
                outputs: self.n_outputs,
            });
        }
        let blocks = self.blocks();
        let rank_b = blocks.b.rank();
        if rank_b < self.n_inputs {
            out.push(Violation::BNotInjective {
                rank: rank_b,
                inputs: self.n_inputs,
            });
        }
        let rank_c = blocks.c.rank();
        let stacked = blocks.b.hstack(&blocks.c);
        if stacked.rank() < rank_b + rank_c {
            out.push(Violation::InputAuxOverlap);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Extract the output-output, output-input and output-auxiliary blocks.
    pub fn blocks(&self) -> GammaBlocks {
        let nx = self.n_inputs;
        let nj = self.n_aux;
        let total = self.total_vertices();
        let y0 = nx + nj;
        GammaBlocks {
            a: self.gamma.submatrix(y0, total, y0, total),
            b: self.gamma.submatrix(y0, total, 0, nx),
            c: self.gamma.submatrix(y0, total, nx, y0),
        }
    }

    /// All weighted edges: one entry per unordered pair with a nonzero
    /// matrix entry, plus a loop per nonzero diagonal entry.
    pub fn edge_list(&self) -> Vec<(usize, usize, Scalar)> {
        let total = self.total_vertices();
        let mut out = Vec::new();
        for z in 0..total {
            for z2 in z..total {
                let w = self.gamma.entry(z, z2);
                if w != 0 {
                    out.push((z, z2, self.field.scalar(w)));
                }
            }
        }
        out
    }

    /// Rebuild a code from its edge list and vertex partition.
    pub fn from_edges(
        field: FieldSpec,
        n_inputs: usize,
        n_aux: usize,
        n_outputs: usize,
        edges: &[(usize, usize, Scalar)],
    ) -> Self {
        let total = n_inputs + n_aux + n_outputs;
        let mut gamma = GFMatrix::zeros(field, total, total);
        for &(a, b, w) in edges {
            gamma.set(a, b, w);
            gamma.set(b, a, w);
        }
        GraphCode::new(n_inputs, n_aux, n_outputs, gamma)
    }

    /// DOT rendering: inputs as open circles, auxiliaries as crossed
    /// circles, outputs filled. Edge weights are labeled only for p > 2.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph code {\n");
        for i in 0..self.n_inputs {
            let _ = writeln!(s, "  x{i} [shape=circle];");
        }
        for i in 0..self.n_aux {
            let _ = writeln!(s, "  j{i} [shape=Mcircle];");
        }
        for i in 0..self.n_outputs {
            let _ = writeln!(s, "  y{i} [shape=circle, style=filled];");
        }
        for (a, b, w) in self.edge_list() {
            let la = self.vertex_label(a);
            let lb = self.vertex_label(b);
            if self.field.p() > 2 {
                let _ = writeln!(s, "  {la} -- {lb} [label=\"{w}\"];");
            } else {
                let _ = writeln!(s, "  {la} -- {lb};");
            }
        }
        s.push_str("}\n");
        s
    }
}

impl GammaBlocks {
    /// Reassemble the full symmetric matrix from the blocks.
    pub fn assemble(&self) -> GraphCode {
        let field = self.a.field();
        let ny = self.a.rows();
        let nx = self.b.cols();
        let nj = self.c.cols();
        assert_eq!(self.a.cols(), ny, "output block is not square");
        assert_eq!(self.b.rows(), ny, "input block height differs");
        assert_eq!(self.c.rows(), ny, "auxiliary block height differs");
        let total = nx + nj + ny;
        let mut gamma = GFMatrix::zeros(field, total, total);
        let y0 = nx + nj;
        for r in 0..ny {
            for c in 0..nx {
                gamma.set_entry(y0 + r, c, self.b.entry(r, c));
                gamma.set_entry(c, y0 + r, self.b.entry(r, c));
            }
            for c in 0..nj {
                gamma.set_entry(y0 + r, nx + c, self.c.entry(r, c));
                gamma.set_entry(nx + c, y0 + r, self.c.entry(r, c));
            }
            for c in 0..ny {
                gamma.set_entry(y0 + r, y0 + c, self.a.entry(r, c));
            }
        }
        GraphCode::new(nx, nj, ny, gamma)
    }
}
