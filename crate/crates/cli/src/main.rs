use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use acdual::combinat::{self, Partition};
use acdual::complexes::{self, Checks, Which};
use acdual::decomp::{self, LabeledIntMatrix};
use acdual::duality::{self, Side};
use acdual::error::{Error, Result};
use acdual::field::FieldSpec;
use acdual::par::Exec;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "acdual", version, about = "Duality complexes, decomposition and duality matrices for type-A Hecke and q-Schur algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    /// Integer specialisation of `q` for the generic field.
    #[arg(long, default_value_t = 4, global = true)]
    q: i64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Chop,
    Llt,
    Weights,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DecompTarget {
    Hecke,
    Schur,
    GlUnipotent,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DualityTarget {
    Gl,
    Hecke,
    Schur,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FieldKind {
    Generic,
    Modular,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// The Mullineux map on e-regular partitions.
    Mullineux {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        /// Comma-separated parts, descending.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// A decomposition matrix.
    Decomp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        qbar: Option<u64>,
        #[arg(long, value_enum)]
        engine: Option<Engine>,
        #[arg(long, value_enum)]
        target: DecompTarget,
    },
    /// A duality matrix.
    Duality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        qbar: Option<u64>,
        #[arg(long, value_enum)]
        target: DualityTarget,
    },
    /// Builds X_H or X_S and checks it.
    Complex {
        #[arg(long)]
        which: Which,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FieldKind::Generic)]
        field: FieldKind,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        qbar: Option<u64>,
        /// Comma-separated subset of d2,cohomology,splitmono,h0.
        #[arg(long)]
        check: Option<Checks>,
    },
    /// Runs every matrix identity at (n, e, ell).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// What a subcommand produced, and whether its checks held.
struct Output {
    body: Body,
    ok: bool,
}

enum Body {
    Matrix(LabeledIntMatrix, Value),
    Report(Value),
}

fn field_spec(ell: Option<u64>, qbar: Option<u64>, q: i64) -> Result<FieldSpec> {
    match (ell, qbar) {
        (None, None) => Ok(FieldSpec::Generic { q }),
        (Some(ell), Some(qbar)) => Ok(FieldSpec::modular(ell, qbar)),
        _ => Err(Error::Input("--ell and --qbar go together".into())),
    }
}

fn run(cli: &Cli, exec: Exec) -> Result<Output> {
    match &cli.cmd {
        Cmd::Mullineux { n, e, lambda } => {
            if let Some(s) = lambda {
                let l = Partition::parse(s)?;
                if l.n() != *n {
                    return Err(Error::Input(format!("{l} is not a partition of {n}")));
                }
                let image = combinat::mullineux(&l, *e)?;
                return Ok(Output { body: Body::Report(json!(image)), ok: true });
            }
            let m = duality::mullineux_matrix(*n, *e)?;
            let involution = decomp::mat_mul(m.entries(), m.entries()) == decomp::identity(m.entries().len());
            Ok(Output { body: Body::Matrix(m.matrix.clone(), m.to_json()), ok: involution })
        }
        Cmd::Decomp { n, ell, qbar, engine, target } => {
            let spec = field_spec(*ell, *qbar, cli.q)?;
            spec.resolve()?;
            let m = match (target, engine) {
                (DecompTarget::Hecke, None | Some(Engine::Chop)) => decomp::decomp_hecke(*n, spec, cli.seed, exec)?,
                (DecompTarget::Hecke, Some(Engine::Llt)) => {
                    let e = spec.e().ok_or_else(|| Error::Input("the LLT engine needs a modular field".into()))?;
                    decomp::decomp_llt(*n, e)?
                }
                (DecompTarget::Schur, None | Some(Engine::Weights)) => decomp::decomp_schur(*n, spec, cli.seed, exec)?,
                (DecompTarget::GlUnipotent, None | Some(Engine::Weights)) => {
                    decomp::zu_from_zs(&decomp::decomp_schur(*n, spec, cli.seed, exec)?)?
                }
                (t, Some(en)) => return Err(Error::Input(format!("engine {en:?} does not compute target {t:?}"))),
            };
            let v = m.to_json();
            Ok(Output { body: Body::Matrix(m, v), ok: true })
        }
        Cmd::Duality { n, ell, qbar, target } => {
            let spec = field_spec(*ell, *qbar, cli.q)?;
            spec.resolve()?;
            let (d, ok) = match target {
                DualityTarget::Gl => {
                    let zu = decomp::zu_from_zs(&decomp::decomp_schur(*n, spec, cli.seed, exec)?)?;
                    (duality::a_from_z(&zu, Side::GlUnipotentSimples)?, true)
                }
                DualityTarget::Schur => {
                    let zs = decomp::decomp_schur(*n, spec, cli.seed, exec)?;
                    (duality::a_from_z(&zs, Side::SchurSimples)?, true)
                }
                DualityTarget::Hecke => {
                    let zh = decomp::decomp_hecke(*n, spec, cli.seed, exec)?;
                    let a = duality::a_hecke_from_decomp(&zh)?;
                    let e = spec.e().unwrap_or(n + 1);
                    let ok = a.entries() == duality::mullineux_matrix(*n, e)?.entries();
                    (a, ok)
                }
            };
            let v = d.to_json();
            Ok(Output { body: Body::Matrix(d.matrix, v), ok })
        }
        Cmd::Complex { which, n, field, ell, qbar, check } => {
            let spec = match field {
                FieldKind::Generic => FieldSpec::Generic { q: cli.q },
                FieldKind::Modular => match (ell, qbar) {
                    (Some(l), Some(b)) => FieldSpec::modular(*l, *b),
                    _ => return Err(Error::Input("--field modular needs --ell and --qbar".into())),
                },
            };
            let checks = check.unwrap_or_default();
            let report = complexes::complex_report(*which, *n, spec, checks, cli.seed, exec)?;
            let ok = complex_ok(&report, *which, *n, checks);
            Ok(Output { body: Body::Report(report), ok })
        }
        Cmd::Verify { n, e, ell, .. } => {
            let r = duality::verify_identities(*n, *e, *ell, cli.seed, exec)?;
            Ok(Output { ok: r.all_pass(), body: Body::Report(r.to_json()) })
        }
    }
}

fn complex_ok(report: &Value, which: Which, n: usize, checks: Checks) -> bool {
    let mut ok = report["d2_zero"] != json!(false);
    if checks.split_mono {
        ok &= report["split_mono"] == json!(true);
    }
    if checks.h0 {
        ok &= report["h0_alpha_regular"] != json!(false);
    }
    if checks.cohomology && which == Which::XH {
        let len = report["term_dims"].as_array().map_or(0, Vec::len);
        let mut expect = vec![0u64; len];
        expect[0] = combinat::factorial(n);
        ok &= report["cohomology"] == json!(expect);
    }
    ok
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn report_csv(v: &Value) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(["key", "value"]).map_err(io)?;
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                w.write_record([k.as_str(), &cell(x)]).map_err(io)?;
            }
        }
        other => w.write_record(["value", &cell(other)]).map_err(io)?,
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Internal(e.to_string()))?)
        .map_err(|e| Error::Internal(e.to_string()))
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}")
        .replace('_', "\\_")
        .replace('&', "\\&")
        .replace('{', "\\{")
        .replace('}', "\\}")
        .replace('^', "\\^{}")
}

fn report_latex(v: &Value) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    let rows: Vec<(String, String)> = match v {
        Value::Object(map) => map.iter().map(|(k, x)| (k.clone(), cell(x))).collect(),
        other => vec![("value".into(), cell(other))],
    };
    for (k, x) in rows {
        out.push_str(&format!("\\texttt{{{}}} & \\texttt{{{}}} \\\\\n", latex_escape(&k), latex_escape(&x)));
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn render(body: &Body, format: Format) -> Result<String> {
    Ok(match (body, format) {
        (Body::Matrix(_, v) | Body::Report(v), Format::Json) => serde_json::to_string_pretty(v)? + "\n",
        (Body::Matrix(m, _), Format::Csv) => m.to_csv()?,
        (Body::Matrix(m, _), Format::Latex) => m.to_latex(),
        (Body::Report(v), Format::Csv) => report_csv(v)?,
        (Body::Report(v), Format::Latex) => report_latex(v),
    })
}

fn exec_for(cli: &Cli) -> Result<Exec> {
    if let Cmd::Verify { jobs, .. } = cli.cmd {
        if jobs == 0 {
            return Err(Error::Input("--jobs must be at least 1".into()));
        }
        if jobs > 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build_global()
                .map_err(|e| Error::Internal(e.to_string()))?;
        }
        return Ok(Exec::from_jobs(jobs));
    }
    Ok(Exec::Parallel)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = exec_for(&cli).and_then(|exec| run(&cli, exec)).and_then(|out| {
        let text = render(&out.body, cli.format)?;
        match &cli.out {
            Some(path) => fs::write(path, &text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?,
            None => {
                let _ = std::io::stdout().write_all(text.as_bytes());
            }
        }
        Ok(out.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("acdual: a check failed; see the report");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("acdual: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
