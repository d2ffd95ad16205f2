//! Command-line front end: exact cup/convolution products, character
//! tables, Betti numbers, the cohomology presentation, determinant checks
//! and the verification harness, with JSON or aligned-text output.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage
//! errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use hilbcup::classalg::{self, Engine, IntClassFunction};
use hilbcup::hilbert::{self, Presentation};
use hilbcup::json::{self, ChernPolyTerm, ClassFunctionJson};
use hilbcup::partition::Partition;
use hilbcup::symfun;
use hilbcup::verify::{self, VerificationReport, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "hilbcup",
    version,
    about = "Exact cup products on symmetric-group class functions and the cohomology of Hilbert schemes of points"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum EngineArg {
    Bruteforce,
    Character,
    #[default]
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Bruteforce => Engine::BruteForce,
            EngineArg::Character => Engine::Character,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Graded cup product of two class functions (JSON on --f / --g).
    Cup {
        /// Conformal weight; must match the inputs when given.
        #[arg(long)]
        n: Option<usize>,
        /// First factor, e.g. '{"n":3,"coeffs":[{"partition":[2,1],"value":"1"}]}'.
        #[arg(long)]
        f: String,
        /// Second factor, same encoding.
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t)]
        engine: EngineArg,
    },
    /// Convolution product of two class functions.
    Conv {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t)]
        engine: EngineArg,
    },
    /// Character table of S_n, rows and columns in enumeration order.
    Chartable {
        #[arg(long)]
        n: usize,
    },
    /// Image of a class function in the power-sum ring.
    Phi {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        f: String,
    },
    /// Betti numbers p(n, n-i) of the weight-n ring.
    Betti {
        #[arg(long)]
        n: usize,
    },
    /// Generators-and-relations presentation of the weight-n ring.
    Presentation {
        #[arg(long)]
        n: usize,
        /// Largest relation degree to emit (defaults to n).
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        engine: EngineArg,
    },
    /// Determinants of the change-of-basis matrices against the product
    /// formulas.
    DetCheck {
        #[arg(long)]
        max_d: usize,
        #[arg(long, value_enum, default_value_t)]
        engine: EngineArg,
    },
    /// Run a verification suite ("all" for every suite).
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_d: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        engine: EngineArg,
    },
}

#[derive(Serialize)]
struct CharTableOut {
    n: usize,
    classes: Vec<Partition>,
    values: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct RelationOut {
    lambda: Partition,
    poly: Vec<ChernPolyTerm>,
}

#[derive(Serialize)]
struct PresentationOut {
    n: usize,
    max_degree: usize,
    generators: Vec<String>,
    relations: Vec<RelationOut>,
    betti: Vec<u64>,
}

#[derive(Serialize)]
struct DetRow {
    d: usize,
    n: usize,
    det_a: String,
    det_a_formula: String,
    det_b: String,
    det_b_formula: String,
    ratio: String,
    pass: bool,
}

#[derive(Serialize)]
struct DetCheckOut {
    max_d: usize,
    rows: Vec<DetRow>,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyAllOut {
    suites: Vec<VerificationReport>,
    pass: bool,
}

/// Rendered output plus the exit status it should carry.
struct Outcome {
    body: String,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out_path = cli.out.clone();
    match run(cli, format) {
        Ok(outcome) => {
            if let Some(path) = out_path {
                if let Err(e) = std::fs::write(&path, format!("{}\n", outcome.body)) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                println!("{}", outcome.body);
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, format: Format) -> hilbcup::Result<Outcome> {
    match cli.cmd {
        Cmd::Cup { n, f, g, engine } => product_cmd(n, &f, &g, engine.into(), true, format),
        Cmd::Conv { n, f, g, engine } => product_cmd(n, &f, &g, engine.into(), false, format),
        Cmd::Chartable { n } => chartable_cmd(n, format),
        Cmd::Phi { n, f } => phi_cmd(n, &f, format),
        Cmd::Betti { n } => {
            let betti = hilbert::betti(n);
            let body = match format {
                Format::Json => serde_json::to_string(&betti).expect("serializable"),
                Format::Text => format!(
                    "betti({n}) = [{}]",
                    betti.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
                ),
            };
            Ok(Outcome { body, failed: false })
        }
        Cmd::Presentation {
            n,
            max_degree,
            engine,
        } => presentation_cmd(n, max_degree, engine.into(), format),
        Cmd::DetCheck { max_d, engine } => det_check_cmd(max_d, engine.into(), format),
        Cmd::Verify {
            suite,
            max_n,
            max_d,
            engine,
        } => verify_cmd(&suite, max_n, max_d, engine.into(), format),
    }
}

fn parse_class_function(s: &str, expected_n: Option<usize>) -> hilbcup::Result<IntClassFunction> {
    let j: ClassFunctionJson = serde_json::from_str(s)
        .map_err(|e| hilbcup::Error::InvalidInput(format!("class function JSON: {e}")))?;
    if let Some(n) = expected_n {
        if n != j.n {
            return Err(hilbcup::Error::InvalidInput(format!(
                "--n {n} does not match the input weight {}",
                j.n
            )));
        }
    }
    json::class_function_from_json(&j)
}

fn render_class_function(f: &IntClassFunction, format: Format) -> String {
    match format {
        Format::Json => {
            serde_json::to_string(&json::class_function_to_json(f)).expect("serializable")
        }
        Format::Text => {
            if f.is_zero() {
                return format!("0 (weight {})", f.n());
            }
            let mut s = String::new();
            for (l, c) in f.iter() {
                let _ = writeln!(s, "{:>12}  {}", c.to_string(), l);
            }
            s.pop();
            s
        }
    }
}

fn product_cmd(
    n: Option<usize>,
    f: &str,
    g: &str,
    engine: Engine,
    graded: bool,
    format: Format,
) -> hilbcup::Result<Outcome> {
    let f = parse_class_function(f, n)?;
    let g = parse_class_function(g, n)?;
    let result = if graded {
        classalg::cup(&f, &g, engine)?
    } else {
        classalg::convolve(&f, &g, engine)?
    };
    Ok(Outcome {
        body: render_class_function(&result, format),
        failed: false,
    })
}

fn chartable_cmd(n: usize, format: Format) -> hilbcup::Result<Outcome> {
    let table = hilbcup::character::table(n)?;
    let classes: Vec<Partition> = table.order().to_vec();
    let values: Vec<Vec<String>> = (0..classes.len())
        .map(|i| {
            (0..classes.len())
                .map(|j| table.value_at(i, j).to_string())
                .collect()
        })
        .collect();
    let out = CharTableOut { n, classes, values };
    let body = match format {
        Format::Json => serde_json::to_string(&out).expect("serializable"),
        Format::Text => {
            let width = out
                .values
                .iter()
                .flatten()
                .map(String::len)
                .max()
                .unwrap_or(1)
                .max(out.classes.iter().map(|c| c.to_string().len()).max().unwrap_or(1));
            let mut s = String::new();
            let _ = write!(s, "{:>w$}", "", w = width + 2);
            for c in &out.classes {
                let _ = write!(s, "{:>w$}", c.to_string(), w = width + 2);
            }
            for (i, row) in out.values.iter().enumerate() {
                let _ = write!(s, "\n{:>w$}", out.classes[i].to_string(), w = width + 2);
                for v in row {
                    let _ = write!(s, "{v:>w$}", w = width + 2);
                }
            }
            s
        }
    };
    Ok(Outcome { body, failed: false })
}

fn phi_cmd(n: Option<usize>, f: &str, format: Format) -> hilbcup::Result<Outcome> {
    let f = parse_class_function(f, n)?;
    let q = symfun::phi(&f);
    let body = match format {
        Format::Json => {
            serde_json::to_string(&json::ppoly_to_json(&q)).expect("serializable")
        }
        Format::Text => q.to_string(),
    };
    Ok(Outcome { body, failed: false })
}

fn presentation_cmd(
    n: usize,
    max_degree: Option<usize>,
    engine: Engine,
    format: Format,
) -> hilbcup::Result<Outcome> {
    if n == 0 {
        return Err(hilbcup::Error::InvalidInput(
            "presentation needs n >= 1".into(),
        ));
    }
    let bound = max_degree.unwrap_or(n).max(1);
    let pres: Presentation = hilbert::presentation(n, bound, engine)?;
    let out = PresentationOut {
        n: pres.n,
        max_degree: pres.degree_bound,
        generators: pres.generators.iter().map(|i| format!("c{i}")).collect(),
        relations: pres
            .relations
            .iter()
            .map(|(lambda, poly)| RelationOut {
                lambda: lambda.clone(),
                poly: json::chern_poly_to_json(poly),
            })
            .collect(),
        betti: pres.betti.clone(),
    };
    let body = match format {
        Format::Json => serde_json::to_string(&out).expect("serializable"),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "weight {n}, relations through degree {bound}");
            let _ = writeln!(s, "generators: {}", out.generators.join(", "));
            let _ = writeln!(
                s,
                "betti:      [{}]",
                out.betti.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
            );
            let _ = writeln!(s, "relations:");
            for (lambda, poly) in &pres.relations {
                let _ = writeln!(s, "  {:<12} {}", lambda.to_string(), poly);
            }
            s.pop();
            s
        }
    };
    Ok(Outcome { body, failed: false })
}

fn det_check_cmd(max_d: usize, engine: Engine, format: Format) -> hilbcup::Result<Outcome> {
    let mut rows = Vec::new();
    for d in 1..=max_d {
        let n = 2 * d;
        let a = hilbert::matrix_a(d, n, engine)?;
        let b = hilbert::matrix_b(d, n)?;
        let det_a = a.abs_determinant();
        let det_b = b.abs_determinant();
        let fa = hilbert::det_a_formula(d);
        let fb = hilbert::det_b_formula(d);
        let ratio = &det_a / &det_b;
        let pass = det_a == fa && det_b == fb && ratio == num_rational::BigRational::from_integer(BigInt::from(1));
        rows.push(DetRow {
            d,
            n,
            det_a: rational_str(&det_a),
            det_a_formula: rational_str(&fa),
            det_b: rational_str(&det_b),
            det_b_formula: rational_str(&fb),
            ratio: rational_str(&ratio),
            pass,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    let out = DetCheckOut { max_d, rows, pass };
    let body = match format {
        Format::Json => serde_json::to_string(&out).expect("serializable"),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:>2} {:>3} {:>12} {:>12} {:>12} {:>12} {:>6} {:>5}",
                "d", "n", "|det A|", "formula A", "|det B|", "formula B", "ratio", "ok"
            );
            for r in &out.rows {
                let _ = writeln!(
                    s,
                    "{:>2} {:>3} {:>12} {:>12} {:>12} {:>12} {:>6} {:>5}",
                    r.d, r.n, r.det_a, r.det_a_formula, r.det_b, r.det_b_formula, r.ratio, r.pass
                );
            }
            let _ = write!(s, "overall: {}", if out.pass { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Outcome {
        body,
        failed: !pass,
    })
}

fn rational_str(q: &num_rational::BigRational) -> String {
    use hilbcup::json::CoeffString;
    q.to_coeff_string()
}

fn verify_cmd(
    suite: &str,
    max_n: Option<usize>,
    max_d: Option<usize>,
    engine: Engine,
    format: Format,
) -> hilbcup::Result<Outcome> {
    let opts = VerifyOptions {
        max_n,
        max_d,
        engine,
    };
    let reports: Vec<VerificationReport> = if suite == "all" {
        verify::run_all(&opts)?
    } else {
        vec![verify::run_suite(suite, &opts)?]
    };
    let pass = reports.iter().all(|r| r.pass);
    let body = match format {
        Format::Json => {
            if suite == "all" {
                serde_json::to_string(&VerifyAllOut {
                    suites: reports.clone(),
                    pass,
                })
                .expect("serializable")
            } else {
                serde_json::to_string(&reports[0]).expect("serializable")
            }
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let params = r
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(
                    s,
                    "{:<16} {:<5} {:>5} cases, {} failures  [{params}]",
                    r.suite,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.total,
                    r.failures
                );
                if let Some(ce) = &r.counterexample {
                    let _ = writeln!(s, "  first counterexample: {}", ce.case);
                    let _ = writeln!(s, "    lhs: {}", ce.lhs);
                    let _ = writeln!(s, "    rhs: {}", ce.rhs);
                }
            }
            let _ = write!(s, "overall: {}", if pass { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Outcome {
        body,
        failed: !pass,
    })
}
