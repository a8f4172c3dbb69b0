//! Conversion between the two code representations.
//!
//! Graph → stabilizer: the derived isotropic space is spanned by the pairs
//! (A·k | k) with k ranging over the common kernel of the transposed input
//! and auxiliary blocks, together with the phase-only pairs (t | 0) for t in
//! the column space of the auxiliary block.
//!
//! Stabilizer → graph: a general isotropic space S is first reduced. Its
//! degenerate part T (phase-only members) is split off, the remainder lives
//! in the reduced space on T-perp and is the graph of a symmetric operator R
//! restricted to the shift-part image K. The output graph has one output per
//! system, one auxiliary vertex per dimension of T, and one input per
//! dimension of K-perp / T; re-deriving the stabilizer space from it returns
//! S exactly.
//!
//! All choices (projections, coset representatives, bases) follow one pivot
//! rule, so both directions are deterministic functions.

use serde::Serialize;

use crate::error::Error;
use crate::graph::{GammaBlocks, GraphCode};
use crate::linalg::{
    image_basis, kernel_basis, projection_onto, quotient_representatives, GFMatrix, Subspace,
};
use crate::stabilizer::StabilizerSpace;

/// Derive the isotropic space of a graph code.
pub fn graph_to_stabilizer(g: &GraphCode) -> Result<StabilizerSpace, Error> {
    let violations = g.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidGraph(violations));
    }
    let field = g.field();
    let ny = g.n_outputs();
    let GammaBlocks { a, b, c } = g.blocks();
    let constraint = b.transpose().vstack(&c.transpose());
    let kern = kernel_basis(&constraint);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..kern.dim() {
        let k = kern.basis().row(i);
        let mut row = a.mul_vec(k);
        row.extend_from_slice(k);
        rows.push(row);
    }
    let ran_c = image_basis(&c);
    for i in 0..ran_c.dim() {
        let mut row = ran_c.basis().row(i).to_vec();
        row.extend(vec![0u64; ny]);
        rows.push(row);
    }
    StabilizerSpace::from_rows(field, ny, rows)
        .map_err(|_| Error::Internal("derived space is not isotropic"))
}

/// The reduction of an isotropic space: degenerate part, reduced space,
/// shift-part image and the symmetric operator that reconstructs it.
///
/// Ambient data (`degenerate`, `g_nat`, `q_proj`) lives in F^n. Reduced
/// data (`s_nat`, `k_shift`, `r`, `p_proj`) lives in the coordinates of
/// T-perp given by its canonical basis, of dimension m = n − dim T.
#[derive(Debug, Clone)]
pub struct ReductionData {
    degenerate: Subspace,
    g_nat: Subspace,
    s_nat: Subspace,
    k_shift: Subspace,
    r: GFMatrix,
    p_proj: GFMatrix,
    q_proj: GFMatrix,
}

impl ReductionData {
    /// Degenerate part T: phase vectors t with (t | 0) in the space.
    pub fn degenerate(&self) -> &Subspace {
        &self.degenerate
    }

    /// T-perp, the carrier of the reduced space.
    pub fn g_nat(&self) -> &Subspace {
        &self.g_nat
    }

    /// The reduced isotropic space, in T-perp coordinates (ambient 2m).
    pub fn s_nat(&self) -> &Subspace {
        &self.s_nat
    }

    /// Shift-part image K of the reduced space, in T-perp coordinates.
    pub fn k_shift(&self) -> &Subspace {
        &self.k_shift
    }

    /// K mapped back to ambient F^n coordinates.
    pub fn k_ambient(&self) -> Subspace {
        let n_bas = self.g_nat.basis();
        Subspace::from_span(&self.k_shift.basis().multiply(n_bas))
    }

    /// Symmetric operator with (R·k | k) spanning the reduced space, k in K.
    pub fn r(&self) -> &GFMatrix {
        &self.r
    }

    /// Projection onto K inside the reduced coordinates.
    pub fn p_proj(&self) -> &GFMatrix {
        &self.p_proj
    }

    /// Projection of F^n onto T-perp whose transpose maps a vector to its
    /// canonical representative modulo T.
    pub fn q_proj(&self) -> &GFMatrix {
        &self.q_proj
    }
}

/// Selector matrix picking the listed coordinates: rows(i) = e_{indices[i]}.
fn selector(field: crate::field::FieldSpec, indices: &[usize], ambient: usize) -> GFMatrix {
    let mut m = GFMatrix::zeros(field, indices.len(), ambient);
    for (i, &idx) in indices.iter().enumerate() {
        m.set_entry(i, idx, 1);
    }
    m
}

/// Reduce an isotropic space, verifying the reconstruction identities.
pub fn reduce(s: &StabilizerSpace) -> Result<ReductionData, Error> {
    let field = s.field();
    let n = s.n();
    let degenerate = s.degenerate_part();
    let g_nat = degenerate.ortho_complement();
    let m = g_nat.dim();
    let n_bas = g_nat.basis().clone(); // m × n
    let pick = selector(field, g_nat.pivots(), n); // m × n

    // Map each generator into reduced coordinates: the phase part goes
    // through pairing with the T-perp basis (kernel exactly T), the shift
    // part is a coordinate vector of a member of T-perp.
    let mut snat_rows = Vec::new();
    let mut k_rows = Vec::new();
    for gen in s.generators() {
        if !g_nat.contains_vector(gen.shift_part()) {
            return Err(Error::Internal("shift part escapes the reduced space"));
        }
        let phase_red = n_bas.mul_vec(gen.phase_part());
        let shift_red = pick.mul_vec(gen.shift_part());
        let mut row = phase_red;
        row.extend_from_slice(&shift_red);
        k_rows.push(row[m..].to_vec());
        snat_rows.push(row);
    }
    let s_nat = Subspace::from_rows(field, 2 * m, snat_rows);
    let k_shift = Subspace::from_rows(field, m, k_rows);

    // The shift projection is injective on the reduced space, so each K
    // basis vector determines a unique reduced phase part.
    let d = s_nat.dim();
    let mut shift_cols = GFMatrix::zeros(field, m, d);
    let mut phase_cols = GFMatrix::zeros(field, m, d);
    for j in 0..d {
        let row = s_nat.basis().row(j);
        for i in 0..m {
            phase_cols.set_entry(i, j, row[i]);
            shift_cols.set_entry(i, j, row[m + i]);
        }
    }
    let mut phase_images = Vec::new(); // rows: phase image of each K basis vector
    for i in 0..k_shift.dim() {
        let kappa = k_shift.basis().row(i);
        let coeffs = shift_cols
            .solve(kappa)
            .ok_or(Error::Internal("shift image does not cover K"))?;
        phase_images.push(phase_cols.mul_vec(&coeffs));
    }

    let p_proj = projection_onto(&k_shift, &Subspace::full(field, m))?;
    // m1 agrees with the phase map after projecting onto K; the symmetric
    // completion adds the transposed part on the complement.
    let mut m1 = GFMatrix::zeros(field, m, m);
    for (i, &piv) in k_shift.pivots().iter().enumerate() {
        for r in 0..m {
            m1.set_entry(r, piv, phase_images[i][r]);
        }
    }
    let identity = GFMatrix::identity(field, m);
    let r = m1.add(&m1.transpose().multiply(&identity.sub(&p_proj)));
    if !r.is_symmetric() {
        return Err(Error::Internal("reduced operator is not symmetric"));
    }
    for (i, phase) in phase_images.iter().enumerate() {
        if &r.mul_vec(k_shift.basis().row(i)) != phase {
            return Err(Error::Internal("reduced operator misses a phase image"));
        }
    }

    // Reconstruction inside the reduced coordinates.
    let graph_rows: Vec<Vec<u64>> = (0..k_shift.dim())
        .map(|i| {
            let kappa = k_shift.basis().row(i);
            let mut row = r.mul_vec(kappa);
            row.extend_from_slice(kappa);
            row
        })
        .collect();
    if Subspace::from_rows(field, 2 * m, graph_rows) != s_nat {
        return Err(Error::Internal("reduced space is not the graph of R"));
    }

    let q_proj = degenerate.reduction_matrix().transpose();

    // Reconstruction in ambient coordinates: lift the reduced phase parts
    // through the canonical section and re-span the original space.
    let lift = degenerate.reduction_matrix().multiply(&pick.transpose()); // n × m
    let mut ambient_rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..k_shift.dim() {
        let kappa = k_shift.basis().row(i);
        let mut row = lift.mul_vec(&r.mul_vec(kappa));
        let shift_ambient: Vec<u64> = {
            let row_mat = GFMatrix::from_rows(field, vec![kappa.to_vec()]);
            row_mat.multiply(&n_bas).row(0).to_vec()
        };
        row.extend(shift_ambient);
        ambient_rows.push(row);
    }
    for i in 0..degenerate.dim() {
        let mut row = degenerate.basis().row(i).to_vec();
        row.extend(vec![0u64; n]);
        ambient_rows.push(row);
    }
    if &Subspace::from_rows(field, 2 * n, ambient_rows) != s.space() {
        return Err(Error::Internal("reduction does not reconstruct the space"));
    }

    Ok(ReductionData {
        degenerate,
        g_nat,
        s_nat,
        k_shift,
        r,
        p_proj,
        q_proj,
    })
}

/// Build a graph code equivalent to the isotropic space. Re-deriving the
/// space from the result returns the input exactly.
pub fn stabilizer_to_graph(s: &StabilizerSpace) -> Result<GraphCode, Error> {
    let field = s.field();
    let n = s.n();
    let rd = reduce(s)?;
    let t = rd.degenerate();
    let k_amb = rd.k_ambient();
    let k_perp = k_amb.ortho_complement();
    if !k_perp.contains(t) {
        return Err(Error::Internal("degenerate part escapes the K annihilator"));
    }

    // Input block: canonical representatives of K-perp modulo T.
    let v = quotient_representatives(&k_perp, t)?;
    // Auxiliary block: the canonical basis of T itself.
    let w = t.basis().transpose();
    // Output block: R transported back to ambient coordinates.
    let pick = selector(field, rd.g_nat().pivots(), n); // m × n
    let lift = t.reduction_matrix().multiply(&pick.transpose()); // n × m
    let red = pick.multiply(rd.q_proj()); // m × n
    let a = lift.multiply(&rd.r().multiply(&red));
    debug_assert!(a.is_symmetric());

    let blocks = GammaBlocks { a, b: v, c: w };
    let g = blocks.assemble();
    debug_assert!(g.is_valid(), "constructed graph violates an invariant");
    Ok(g)
}

/// One stage of a round-trip check.
#[derive(Debug, Clone, Serialize)]
pub struct RoundtripStage {
    pub description: String,
    pub n: usize,
    pub k: usize,
}

/// Result of running a conversion cycle and comparing the spaces.
#[derive(Debug, Clone, Serialize)]
pub struct RoundtripReport {
    pub stages: Vec<RoundtripStage>,
    pub pass: bool,
}

fn stage(description: &str, s: &StabilizerSpace) -> RoundtripStage {
    RoundtripStage {
        description: description.to_string(),
        n: s.n(),
        k: s.logical_qudits(),
    }
}

/// Graph input: derive, rebuild, re-derive; the two derived spaces must be
/// identical.
pub fn roundtrip_from_graph(g: &GraphCode) -> Result<RoundtripReport, Error> {
    let s1 = graph_to_stabilizer(g)?;
    let g2 = stabilizer_to_graph(&s1)?;
    let s2 = graph_to_stabilizer(&g2)?;
    let pass = s1 == s2;
    Ok(RoundtripReport {
        stages: vec![
            stage("graph to stabilizer", &s1),
            stage("stabilizer to graph to stabilizer", &s2),
        ],
        pass,
    })
}

/// Stabilizer input: rebuild a graph and re-derive; the result must equal
/// the input space.
pub fn roundtrip_from_stabilizer(s: &StabilizerSpace) -> Result<RoundtripReport, Error> {
    let g = stabilizer_to_graph(s)?;
    let s2 = graph_to_stabilizer(&g)?;
    let pass = *s == s2;
    Ok(RoundtripReport {
        stages: vec![
            stage("input stabilizer", s),
            stage("stabilizer to graph to stabilizer", &s2),
        ],
        pass,
    })
}
