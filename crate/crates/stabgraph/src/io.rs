//! JSON file formats for both code kinds.
//!
//! Graph files: `{"p", "inputs", "aux", "outputs", "gamma"}` with `gamma` a
//! row-major matrix of size (inputs + aux + outputs)² and entries in [0, p).
//! Stabilizer files: `{"p", "n", "generators"}` where each generator is a
//! row of 2n entries, phase half first. The file kind is inferred from the
//! keys. Output is canonical: sorted keys, two-space indentation, trailing
//! newline, generators in RREF — identical inputs produce identical bytes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::FieldSpec;
use crate::graph::GraphCode;
use crate::linalg::GFMatrix;
use crate::stabilizer::StabilizerSpace;

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    p: u64,
    inputs: usize,
    aux: usize,
    outputs: usize,
    gamma: Vec<Vec<u64>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct StabilizerFile {
    p: u64,
    n: usize,
    generators: Vec<Vec<u64>>,
}

/// A loaded code file of either kind.
#[derive(Debug, Clone)]
pub enum CodeFile {
    Graph(GraphCode),
    Stabilizer(StabilizerSpace),
}

impl CodeFile {
    pub fn kind(&self) -> &'static str {
        match self {
            CodeFile::Graph(_) => "graph",
            CodeFile::Stabilizer(_) => "stabilizer",
        }
    }
}

fn check_entries(rows: &[Vec<u64>], p: u64) -> Result<(), Error> {
    for row in rows {
        for &v in row {
            if v >= p {
                return Err(Error::BadFile(format!(
                    "entry {v} is outside the residue range [0, {p})"
                )));
            }
        }
    }
    Ok(())
}

/// Parse either file kind, validating every invariant of the payload.
pub fn parse_code_file(text: &str) -> Result<CodeFile, Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::BadFile("top level is not an object".into()))?;
    if obj.contains_key("gamma") {
        let file: GraphFile = serde_json::from_value(value)?;
        let field = FieldSpec::new(file.p)?;
        let total = file.inputs + file.aux + file.outputs;
        if file.gamma.len() != total || file.gamma.iter().any(|r| r.len() != total) {
            return Err(Error::BadFile(format!(
                "gamma must be {total}x{total} for this vertex partition"
            )));
        }
        check_entries(&file.gamma, file.p)?;
        let gamma = if total == 0 {
            GFMatrix::zeros(field, 0, 0)
        } else {
            GFMatrix::from_rows(field, file.gamma)
        };
        let g = GraphCode::new(file.inputs, file.aux, file.outputs, gamma);
        let violations = g.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        Ok(CodeFile::Graph(g))
    } else if obj.contains_key("generators") {
        let file: StabilizerFile = serde_json::from_value(value)?;
        let field = FieldSpec::new(file.p)?;
        check_entries(&file.generators, file.p)?;
        let s = StabilizerSpace::from_rows(field, file.n, file.generators)?;
        Ok(CodeFile::Stabilizer(s))
    } else {
        Err(Error::BadFile(
            "expected a \"gamma\" key (graph) or a \"generators\" key (stabilizer)".into(),
        ))
    }
}

pub fn load_code_file(path: &Path) -> Result<CodeFile, Error> {
    let text = fs::read_to_string(path)?;
    parse_code_file(&text)
}

fn to_canonical_json<T: Serialize>(value: &T) -> String {
    // Route through Value: its object map is ordered by key, and the pretty
    // printer indents with two spaces, so output bytes are reproducible.
    let value = serde_json::to_value(value).expect("serializable file struct");
    let mut s = serde_json::to_string_pretty(&value).expect("printable JSON value");
    s.push('\n');
    s
}

pub fn graph_to_json(g: &GraphCode) -> String {
    let total = g.total_vertices();
    let gamma = (0..total)
        .map(|r| g.gamma().row(r).to_vec())
        .collect();
    to_canonical_json(&GraphFile {
        p: g.field().p(),
        inputs: g.n_inputs(),
        aux: g.n_aux(),
        outputs: g.n_outputs(),
        gamma,
    })
}

pub fn stabilizer_to_json(s: &StabilizerSpace) -> String {
    let generators = (0..s.dim())
        .map(|i| s.space().basis().row(i).to_vec())
        .collect();
    to_canonical_json(&StabilizerFile {
        p: s.field().p(),
        n: s.n(),
        generators,
    })
}

pub fn code_file_to_json(file: &CodeFile) -> String {
    match file {
        CodeFile::Graph(g) => graph_to_json(g),
        CodeFile::Stabilizer(s) => stabilizer_to_json(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{length_six_rows, pentagon_code, self_dual_space};

    #[test]
    fn graph_files_roundtrip() {
        let g = pentagon_code(FieldSpec::new(2).unwrap());
        let json = graph_to_json(&g);
        match parse_code_file(&json).unwrap() {
            CodeFile::Graph(back) => assert_eq!(back, g),
            _ => panic!("expected a graph file"),
        }
        // Writing is deterministic.
        assert_eq!(json, graph_to_json(&g));
    }

    #[test]
    fn stabilizer_files_canonicalize_on_load() {
        let field = FieldSpec::new(2).unwrap();
        let s = self_dual_space(field);
        let json = stabilizer_to_json(&s);
        match parse_code_file(&json).unwrap() {
            CodeFile::Stabilizer(back) => assert_eq!(back, s),
            _ => panic!("expected a stabilizer file"),
        }

        // Redundant, non-reduced generators load to the same space.
        let noisy = serde_json::json!({
            "p": 2,
            "n": 4,
            "generators": [
                [1, 1, 1, 1, 1, 1, 1, 1],
                [0, 0, 0, 0, 1, 1, 1, 1],
                [1, 1, 1, 1, 0, 0, 0, 0],
            ],
        })
        .to_string();
        match parse_code_file(&noisy).unwrap() {
            CodeFile::Stabilizer(back) => assert_eq!(back, s),
            _ => panic!("expected a stabilizer file"),
        }
    }

    #[test]
    fn length_six_file_parses() {
        let json = serde_json::json!({
            "p": 2,
            "n": 6,
            "generators": length_six_rows(),
        })
        .to_string();
        match parse_code_file(&json).unwrap() {
            CodeFile::Stabilizer(s) => {
                assert_eq!(s.dim(), 5);
                assert_eq!(s.logical_qudits(), 1);
            }
            _ => panic!("expected a stabilizer file"),
        }
    }

    #[test]
    fn bad_files_are_rejected() {
        assert!(matches!(
            parse_code_file("{\"p\": 4, \"n\": 1, \"generators\": []}"),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            parse_code_file("{\"p\": 2, \"n\": 1, \"generators\": [[1, 0, 0]]}"),
            Err(Error::BadFile(_))
        ));
        assert!(matches!(
            parse_code_file("{\"p\": 2, \"n\": 1, \"generators\": [[2, 0]]}"),
            Err(Error::BadFile(_))
        ));
        assert!(matches!(
            parse_code_file("{\"p\": 2, \"n\": 1, \"generators\": [[1, 0], [0, 1]]}"),
            Err(Error::NotIsotropic)
        ));
        assert!(matches!(
            parse_code_file("{\"p\": 2}"),
            Err(Error::BadFile(_))
        ));
        // Gamma shape mismatch.
        let bad = serde_json::json!({
            "p": 2, "inputs": 1, "aux": 0, "outputs": 1,
            "gamma": [[0, 1]],
        })
        .to_string();
        assert!(matches!(parse_code_file(&bad), Err(Error::BadFile(_))));
        // Asymmetric matrix fails validation.
        let invalid = serde_json::json!({
            "p": 2, "inputs": 1, "aux": 0, "outputs": 1,
            "gamma": [[0, 1], [0, 0]],
        })
        .to_string();
        assert!(matches!(
            parse_code_file(&invalid),
            Err(Error::InvalidGraph(_))
        ));
    }
}
