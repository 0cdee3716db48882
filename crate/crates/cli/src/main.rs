//! Command-line front end: mixed-graph edge lists in, matrices,
//! cycle classifications, minor reports, and verification out.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use quasilap::*;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "quasilap",
    about = "Exact minors of Hermitian Laplacians and quasi-Laplacians of mixed graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Edge-list file; standard input when omitted
    #[arg(long)]
    input: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    H,
    D,
    L,
    Q,
    S,
    T,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichMatrix {
    L,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Combinatorial,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the graph matrices
    Matrix {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Evaluate a minor of L or Q directly and/or combinatorially
    Minor {
        #[command(flatten)]
        io: Io,
        /// Comma-separated row vertex labels
        #[arg(long)]
        rows: String,
        /// Comma-separated column vertex labels
        #[arg(long)]
        cols: String,
        #[arg(long, value_enum)]
        matrix: WhichMatrix,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Enumerate and classify all simple cycles
    Cycles {
        #[command(flatten)]
        io: Io,
    },
    /// Report the quapartite partition and singularity equivalences
    Quapartite {
        #[command(flatten)]
        io: Io,
    },
    /// List the special square substructures on a vertex subset
    Sss {
        #[command(flatten)]
        io: Io,
        /// Comma-separated vertex labels
        #[arg(long)]
        verts: String,
    },
    /// Count spanning trees of the underlying graph
    SpanningTrees {
        #[command(flatten)]
        io: Io,
    },
    /// Run the full invariant suite on the input graph
    Verify {
        #[command(flatten)]
        io: Io,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn usage_err(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, message: message.into() }
}

fn load_graph(io: &Io) -> Result<MixedGraph, CliError> {
    let text = match &io.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| usage_err(format!("cannot read {path}: {e}")))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage_err(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    MixedGraph::parse(&text).map_err(|e| CliError { code: EXIT_PARSE, message: e.to_string() })
}

fn parse_vertex_set(g: &MixedGraph, spec: &str) -> Result<Vec<usize>, CliError> {
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|label| {
            let label = label.trim();
            g.vertex_by_label(label)
                .ok_or_else(|| usage_err(format!("unknown vertex label: {label}")))
        })
        .collect()
}

fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

fn gauss_json(v: &GaussianInt) -> Value {
    json!([bigint_json(&v.re), bigint_json(&v.im)])
}

fn matrix_json(m: &GMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array((0..m.cols()).map(|c| gauss_json(m.get(r, c))).collect()))
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

fn matrix_text(m: &GMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    cells
        .iter()
        .map(|row| {
            row.iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn labels_of(g: &MixedGraph, verts: &[usize]) -> Vec<String> {
    verts.iter().map(|&v| g.label(v).to_string()).collect()
}

fn minor_report_json(g: &MixedGraph, r: &MinorReport) -> Value {
    let terms: Vec<Value> = r
        .terms
        .iter()
        .map(|t| {
            json!({
                "verts": labels_of(g, &t.verts),
                "edges": t.edge_ids,
                "norm_sq": bigint_json(&t.closed_form_norm_sq),
                "value": t.oracle_value.as_ref().map(gauss_json),
                "phase_literal": t.literal_phase.as_ref().map(gauss_json),
            })
        })
        .collect();
    json!({
        "direct": r.direct.as_ref().map(gauss_json),
        "combinatorial": r.combinatorial.as_ref().map(gauss_json),
        "terms": terms,
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Matrix { io, kind } => {
            let g = load_graph(&io)?;
            let m = match kind {
                Kind::H => hermitian_adjacency(&g),
                Kind::D => degree_matrix(&g),
                Kind::L => hermitian_laplacian(&g),
                Kind::Q => quasi_laplacian(&g),
                Kind::S => quasi_incidence(&g),
                Kind::T => incidence(&g, &OrientationMap::lower_to_higher(&g))
                    .expect("default orientation covers all unoriented edges"),
            };
            match io.format {
                Format::Json => println!("{}", serde_json::to_string(&matrix_json(&m)).unwrap()),
                Format::Text => println!("{}", matrix_text(&m)),
            }
        }
        Command::Minor { io, rows, cols, matrix, method } => {
            let g = load_graph(&io)?;
            let a = parse_vertex_set(&g, &rows)?;
            let b = parse_vertex_set(&g, &cols)?;
            let which = match matrix {
                WhichMatrix::L => MatrixKind::L,
                WhichMatrix::Q => MatrixKind::Q,
            };
            let method = match method {
                MethodArg::Direct => Method::Direct,
                MethodArg::Combinatorial => Method::Combinatorial,
                MethodArg::Both => Method::Both,
            };
            let mut sa = a.clone();
            let mut sb = b.clone();
            sa.sort_unstable();
            sa.dedup();
            sb.sort_unstable();
            sb.dedup();
            let report = if sa == sb {
                principal_minor(&g, &sa, which, method)
            } else {
                nonprincipal_minor(&g, &sa, &sb, which, method)
            }
            .map_err(|e| usage_err(e.to_string()))?;
            match io.format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&minor_report_json(&g, &report)).unwrap())
                }
                Format::Text => {
                    if let Some(d) = &report.direct {
                        println!("direct        = {d}");
                    }
                    if let Some(c) = &report.combinatorial {
                        println!("combinatorial = {c}");
                    }
                    println!("terms         = {}", report.terms.len());
                }
            }
        }
        Command::Cycles { io } => {
            let g = load_graph(&io)?;
            let cycles = simple_cycles(&g);
            let classified: Vec<(CycleSeq, CycleProfile, CycleTypeS, CycleTypeT)> = cycles
                .into_iter()
                .map(|c| {
                    let p = cycle_profile(&g, &c).expect("enumerated cycle is a cycle");
                    let (s, t) = classify_cycle(&p);
                    (c, p, s, t)
                })
                .collect();
            match io.format {
                Format::Json => {
                    let arr: Vec<Value> = classified
                        .iter()
                        .map(|(c, p, s, t)| {
                            json!({
                                "verts": labels_of(&g, &c.verts),
                                "a": p.a, "b": p.b, "c": p.c,
                                "type_s": format!("{s:?}"),
                                "type_t": format!("{t:?}"),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&Value::Array(arr)).unwrap());
                }
                Format::Text => {
                    for (c, p, s, t) in &classified {
                        println!(
                            "cycle {}: a={} b={} c={} typeS={s:?} typeT={t:?}",
                            labels_of(&g, &c.verts).join("-"),
                            p.a,
                            p.b,
                            p.c
                        );
                    }
                    println!("{} cycle(s)", classified.len());
                }
            }
        }
        Command::Quapartite { io } => {
            let g = load_graph(&io)?;
            let partition = find_quapartition(&g);
            let r = equivalence_report(&g);
            match io.format {
                Format::Json => {
                    let parts = partition.as_ref().map(|p| {
                        Value::Array(
                            p.parts().iter().map(|part| json!(labels_of(&g, part))).collect(),
                        )
                    });
                    println!(
                        "{}",
                        serde_json::to_string(&json!({
                            "partition": parts,
                            "quapartite": r.quapartite,
                            "all_cycles_type_iii": r.all_cycles_type_iii,
                            "q_singular": r.q_singular,
                            "all_cycles_type_v": r.all_cycles_type_v,
                            "l_singular": r.l_singular,
                        }))
                        .unwrap()
                    );
                }
                Format::Text => {
                    match &partition {
                        Some(p) => {
                            for (k, part) in p.parts().iter().enumerate() {
                                println!("V{} = {{{}}}", k + 1, labels_of(&g, part).join(", "));
                            }
                        }
                        None => println!("none"),
                    }
                    println!("quapartite          = {}", r.quapartite);
                    println!("all cycles type III = {}", r.all_cycles_type_iii);
                    println!("Q singular          = {}", r.q_singular);
                    println!("all cycles type V   = {}", r.all_cycles_type_v);
                    println!("L singular          = {}", r.l_singular);
                }
            }
        }
        Command::Sss { io, verts } => {
            let g = load_graph(&io)?;
            let mut w = parse_vertex_set(&g, &verts)?;
            w.sort_unstable();
            w.dedup();
            let mut rows: Vec<Value> = Vec::new();
            let mut lines: Vec<String> = Vec::new();
            for sub in enumerate_square_substructures(&g, &w) {
                let eval = square_substructure_eval(&g, &sub)
                    .expect("enumerated substructures are square");
                if !eval.is_sss && !eval.is_ssss {
                    continue;
                }
                rows.push(json!({
                    "edges": eval.edge_ids,
                    "is_sss": eval.is_sss,
                    "is_ssss": eval.is_ssss,
                    "x": eval.x, "y": eval.y, "p": eval.p, "q": eval.q,
                    "det_s": gauss_json(&eval.det_s),
                    "det_t": gauss_json(&eval.det_t),
                }));
                lines.push(format!(
                    "edges {{{}}}: sss={} ssss={} x={} y={} p={} q={} detS={} detT={}",
                    eval.edge_ids.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","),
                    eval.is_sss,
                    eval.is_ssss,
                    eval.x,
                    eval.y,
                    eval.p,
                    eval.q,
                    eval.det_s,
                    eval.det_t
                ));
            }
            match io.format {
                Format::Json => println!("{}", serde_json::to_string(&Value::Array(rows)).unwrap()),
                Format::Text => {
                    for line in &lines {
                        println!("{line}");
                    }
                    println!("{} qualifying substructure(s)", lines.len());
                }
            }
        }
        Command::SpanningTrees { io } => {
            let g = load_graph(&io)?;
            let count = spanning_tree_count(&g);
            match io.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&json!({"spanning_trees": bigint_json(&count)})).unwrap()
                ),
                Format::Text => println!("{count}"),
            }
        }
        Command::Verify { io } => {
            let g = load_graph(&io)?;
            let failures = verify(&g);
            let ok = failures.is_empty();
            match io.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "ok": ok,
                        "quapartite": find_quapartition(&g).is_some(),
                        "failures": failures,
                    }))
                    .unwrap()
                ),
                Format::Text => {
                    for f in &failures {
                        println!("FAIL: {f}");
                    }
                    println!("quapartite = {}", find_quapartition(&g).is_some());
                    println!("{}", if ok { "verify: ok" } else { "verify: FAILED" });
                }
            }
            if !ok {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Runs every library-level invariant on one graph, returning
/// human-readable descriptions of any violations. Library assertions
/// fire as panics; they are caught and reported here.
fn verify(g: &MixedGraph) -> Vec<String> {
    let mut failures = Vec::new();
    let mut check = |name: &str, f: &dyn Fn() -> bool| {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f));
        match outcome {
            Ok(true) => {}
            Ok(false) => failures.push(name.to_string()),
            Err(_) => failures.push(format!("{name} (internal assertion)")),
        }
    };
    // hide panic backtraces from the report
    let prev_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));

    check("incidence factorization S S* = Q", &|| {
        quasi_incidence(g).mul_conj_transpose() == quasi_laplacian(g)
    });
    check("incidence factorization T T* = L", &|| {
        incidence(g, &OrientationMap::lower_to_higher(g)).unwrap().mul_conj_transpose()
            == hermitian_laplacian(g)
    });
    check("principal minors match combinatorial sums", &|| {
        principal_minor_suite(g)
    });
    check("singularity equivalences hold per component", &|| {
        let r = equivalence_report(g);
        let q = null_labeling(g, MatrixKind::Q).is_some();
        let l = null_labeling(g, MatrixKind::L).is_some();
        q == r.q_singular && l == r.l_singular
    });
    check("cofactor corollaries", &|| cofactor_corollaries(g));

    std::panic::set_hook(prev_hook);
    failures
}

fn principal_minor_suite(g: &MixedGraph) -> bool {
    let n = g.n();
    let subsets: Vec<Vec<usize>> = if n <= 7 {
        (0..(1u32 << n))
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
            .collect()
    } else {
        // deterministic sample of 100 subsets
        let mut state: u64 = 0x9e3779b97f4a7c15;
        (0..100)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (0..n).filter(|&v| state >> v & 1 == 1).collect()
            })
            .collect()
    };
    subsets.iter().all(|w| {
        [MatrixKind::L, MatrixKind::Q].into_iter().all(|which| {
            let r = principal_minor(g, w, which, Method::Both).unwrap();
            r.direct == r.combinatorial
        })
    })
}

/// Matrix-tree corollaries. When the relevant matrix is singular with
/// a rank-one cofactor structure (Q of a quapartite graph, L when all
/// cycles are type V), every cofactor equals the underlying
/// spanning-tree count times conj(x_i) x_j, where x is the unit-phase
/// kernel labeling. In particular every cofactor has modulus equal to
/// the spanning-tree count, and on an unoriented graph (x constant)
/// they are all equal: the classical matrix-tree theorem.
fn cofactor_corollaries(g: &MixedGraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let st = spanning_tree_count(g);
    let mut targets = Vec::new();
    if find_quapartition(g).is_some() {
        targets.push(MatrixKind::Q);
    }
    let all_type_v = simple_cycles(g).iter().all(|c| {
        let p = cycle_profile(g, c).unwrap();
        classify_cycle(&p).1 == CycleTypeT::V
    });
    if all_type_v {
        targets.push(MatrixKind::L);
    }
    for which in targets {
        let x = match null_labeling(g, which) {
            Some(x) => x,
            None => return false, // singular by the equivalences
        };
        let scale = GaussianInt::new(st.clone(), 0);
        for i in 0..g.n() {
            for j in 0..g.n() {
                let predicted = &(&x[i].conjugate() * &x[j]) * &scale;
                if cofactor(g, which, i, j) != predicted {
                    return false;
                }
            }
        }
    }
    true
}
