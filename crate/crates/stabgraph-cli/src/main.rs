//! Command-line front end: convert between the two code file formats,
//! inspect parameters, run the numerical verification suite, and export
//! graphs as DOT.
//!
//! Exit codes: 0 on success, 1 for input or usage errors, 2 when a
//! mathematical check fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use stabgraph::convert::{
    graph_to_stabilizer, roundtrip_from_graph, roundtrip_from_stabilizer, stabilizer_to_graph,
    RoundtripReport,
};
use stabgraph::io::{graph_to_json, load_code_file, stabilizer_to_json, CodeFile};
use stabgraph::weyl::{
    distance_kl, encode_isometry, kl_check, stabilizer_eigencheck, TOL_ISOMETRY,
};
use stabgraph::{Error, GraphCode, StabilizerSpace};

#[derive(Parser)]
#[command(
    name = "stabgraph",
    version,
    about = "Convert and verify graph codes and stabilizer codes over GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Graph,
    Stabilizer,
}

#[derive(Subcommand)]
enum Command {
    /// Print kind, field and code parameters of a file
    Info {
        path: PathBuf,
        /// Also compute the code distance(s)
        #[arg(long)]
        distance: bool,
    },
    /// Convert a file to the other representation
    Convert {
        path: PathBuf,
        /// Target representation
        #[arg(long, value_enum)]
        to: Kind,
        /// Output file
        #[arg(short, long)]
        output: PathBuf,
        /// Skip the re-conversion consistency check
        #[arg(long)]
        no_check: bool,
    },
    /// Run the numerical checks on a graph code: isometry, stabilizer
    /// eigenvalues and the error scan up to a weight
    Verify {
        path: PathBuf,
        /// Largest error weight to scan
        #[arg(long, default_value_t = 2)]
        max_weight: usize,
        /// Emit machine-readable JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the code distance
    Distance { path: PathBuf },
    /// Export a graph code in DOT format
    Dot {
        path: PathBuf,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert there and back and check that the code is unchanged
    Roundtrip { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let result = match cli.command {
        Command::Info { path, distance } => cmd_info(&path, distance),
        Command::Convert {
            path,
            to,
            output,
            no_check,
        } => cmd_convert(&path, to, &output, no_check),
        Command::Verify {
            path,
            max_weight,
            json,
        } => cmd_verify(&path, max_weight, json),
        Command::Distance { path } => cmd_distance(&path),
        Command::Dot { path, output } => cmd_dot(&path, output.as_deref()),
        Command::Roundtrip { path } => cmd_roundtrip(&path),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parameters(s: &StabilizerSpace) -> String {
    format!("[[{},{}]]", s.n(), s.logical_qudits())
}

fn cmd_info(path: &Path, distance: bool) -> Result<u8, Error> {
    match load_code_file(path)? {
        CodeFile::Graph(g) => {
            let s = graph_to_stabilizer(&g)?;
            let mut line = format!(
                "graph code, p={}, {}, dim S={}, degenerate dim {}",
                g.field().p(),
                parameters(&s),
                s.dim(),
                s.degenerate_part().dim()
            );
            if distance {
                let d = s.distance_algebraic()?;
                line.push_str(&format!(", d={d} (algebraic)"));
                match encode_isometry(&g).and_then(|iso| distance_kl(&iso)) {
                    Ok(dk) => line.push_str(&format!(", d={dk} (error scan)")),
                    Err(e) => line.push_str(&format!("; error scan skipped: {e}")),
                }
            }
            println!("{line}");
        }
        CodeFile::Stabilizer(s) => {
            let mut line = format!(
                "stabilizer, p={}, {}, dim S={}, degenerate dim {}",
                s.field().p(),
                parameters(&s),
                s.dim(),
                s.degenerate_part().dim()
            );
            if distance {
                line.push_str(&format!(", d={}", s.distance_algebraic()?));
            }
            println!("{line}");
        }
    }
    Ok(0)
}

fn cmd_convert(path: &Path, to: Kind, output: &Path, no_check: bool) -> Result<u8, Error> {
    let file = load_code_file(path)?;
    let same_kind = matches!(
        (&file, to),
        (CodeFile::Graph(_), Kind::Graph) | (CodeFile::Stabilizer(_), Kind::Stabilizer)
    );
    if same_kind {
        eprintln!(
            "error: input is already a {} file; nothing to convert",
            file.kind()
        );
        return Ok(1);
    }
    match file {
        CodeFile::Graph(g) => {
            let s = graph_to_stabilizer(&g)?;
            if !no_check && !reconverts_to(&s)? {
                eprintln!("error: re-conversion does not reproduce the derived space");
                return Ok(2);
            }
            fs::write(output, stabilizer_to_json(&s))?;
            if !no_check {
                println!("round-trip check passed: {}", parameters(&s));
            }
            println!("wrote {}", output.display());
        }
        CodeFile::Stabilizer(s) => {
            let g = stabilizer_to_graph(&s)?;
            if !no_check && graph_to_stabilizer(&g)? != s {
                eprintln!("error: re-conversion does not reproduce the input space");
                return Ok(2);
            }
            fs::write(output, graph_to_json(&g))?;
            if !no_check {
                println!("round-trip check passed: {}", parameters(&s));
            }
            println!("wrote {}", output.display());
        }
    }
    Ok(0)
}

fn reconverts_to(s: &StabilizerSpace) -> Result<bool, Error> {
    Ok(graph_to_stabilizer(&stabilizer_to_graph(s)?)? == *s)
}

fn require_graph(file: CodeFile, hint: &str) -> Result<GraphCode, u8> {
    match file {
        CodeFile::Graph(g) => Ok(g),
        CodeFile::Stabilizer(_) => {
            eprintln!("error: {hint}");
            Err(1)
        }
    }
}

fn cmd_verify(path: &Path, max_weight: usize, json: bool) -> Result<u8, Error> {
    let g = match require_graph(
        load_code_file(path)?,
        "verify needs a graph file; run convert --to graph first",
    ) {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    let iso = encode_isometry(&g)?;
    let defect = iso.isometry_defect();
    let isometry_pass = defect <= TOL_ISOMETRY;
    let eigen = stabilizer_eigencheck(&g, &iso)?;
    let kl = kl_check(&iso, max_weight);
    let all_pass = isometry_pass && eigen.pass && kl.pass;
    if json {
        let report = serde_json::json!([
            {
                "check": "isometry",
                "pass": isometry_pass,
                "details": { "defect": defect, "tolerance": TOL_ISOMETRY },
            },
            {
                "check": "stabilizer eigenvalues",
                "pass": eigen.pass,
                "details": eigen,
            },
            {
                "check": "error scan",
                "pass": kl.pass,
                "details": kl,
            },
        ]);
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
    } else {
        println!(
            "isometry: {} (defect {defect:.2e})",
            pass_str(isometry_pass)
        );
        println!(
            "stabilizer eigenvalues: {} ({} generators)",
            pass_str(eigen.pass),
            eigen.entries.len()
        );
        for w in &kl.weights {
            println!(
                "error scan, weight {}: {} ({} operators, {} violations)",
                w.weight,
                pass_str(w.pass),
                w.labels_checked,
                w.violations
            );
        }
    }
    Ok(if all_pass { 0 } else { 2 })
}

fn pass_str(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_distance(path: &Path) -> Result<u8, Error> {
    match load_code_file(path)? {
        CodeFile::Stabilizer(s) => {
            println!("d={} (algebraic)", s.distance_algebraic()?);
            Ok(0)
        }
        CodeFile::Graph(g) => {
            let s = graph_to_stabilizer(&g)?;
            let d = s.distance_algebraic()?;
            match encode_isometry(&g).and_then(|iso| distance_kl(&iso)) {
                Ok(dk) => {
                    println!("d={d} (algebraic), d={dk} (error scan)");
                    if dk != d {
                        eprintln!("error: the two distance computations disagree");
                        return Ok(2);
                    }
                }
                Err(e) => println!("d={d} (algebraic); error scan skipped: {e}"),
            }
            Ok(0)
        }
    }
}

fn cmd_dot(path: &Path, output: Option<&Path>) -> Result<u8, Error> {
    let g = match require_graph(
        load_code_file(path)?,
        "dot needs a graph file; run convert --to graph first",
    ) {
        Ok(g) => g,
        Err(code) => return Ok(code),
    };
    let dot = g.to_dot();
    match output {
        Some(out) => {
            fs::write(out, dot)?;
            println!("wrote {}", out.display());
        }
        None => print!("{dot}"),
    }
    Ok(0)
}

fn print_roundtrip(report: &RoundtripReport) {
    for stage in &report.stages {
        println!("{}: [[{},{}]]", stage.description, stage.n, stage.k);
    }
    println!("round-trip: {}", pass_str(report.pass));
}

fn cmd_roundtrip(path: &Path) -> Result<u8, Error> {
    let report = match load_code_file(path)? {
        CodeFile::Graph(g) => roundtrip_from_graph(&g)?,
        CodeFile::Stabilizer(s) => roundtrip_from_stabilizer(&s)?,
    };
    print_roundtrip(&report);
    Ok(if report.pass { 0 } else { 2 })
}
