//! `superschur`: dimensions, structure constants, verification suites and
//! classification labels from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use superschur::algebras::{clifford, diagonal_algebra, sergeev};
use superschur::centralizer::{
    double_centralizer, q_identification, schur_i, schur_i_commutant, schur_i_dimension, schur_ii,
    schur_ii_commutant, schur_ii_dimension, weight_decomposition,
};
use superschur::classify::{labels_type_i, labels_type_ii};
use superschur::duality::{cosalg_duality_check, double_dual_algebra_check, gamma_sym_pairing};
use superschur::gamma_cat::{surjectivity_report, trivial_module};
use superschur::json::algebra_to_json;
use superschur::modules_actions::{u1_module, Side};
use superschur::super_linear::make_space;
use superschur::sym_action::{exponential_decomposition, gamma_dimension};
use superschur::{make_field, Error, Field, SuperAlgebra};

const DEFAULT_MAX_MN: usize = 4;
const DEFAULT_MAX_D: usize = 4;

#[derive(Parser)]
#[command(
    name = "superschur",
    version,
    about = "Schur superalgebras, divided powers and their dualities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of S(m|n,d) or Q(n,d), by commutant rank and by closed form
    Dim(Common),
    /// Structure constants of S(m|n,d), Q(n,d), W(d) or C(d)
    Algebra(Common),
    /// Run a verification suite
    Verify {
        suite: Suite,
        /// which duality to check (suite `duality`)
        #[arg(long, value_enum, default_value = "pairing")]
        what: What,
        #[command(flatten)]
        common: Common,
    },
    /// Labels of simple objects of type I or II in degree d
    Classify(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// I: S(m|n,d) / k-modules; II: Q(n,d) / C(1)-modules; W: Sergeev W(d); C: Clifford C(d)
    #[arg(long = "type", visible_alias = "B", value_enum, default_value = "I")]
    kind: Kind,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// field characteristic: 0 for ℚ, otherwise an odd prime
    #[arg(long, default_value_t = 0)]
    p: u32,
    /// algebra B for the cosalg and doubledual checks
    #[arg(long, value_enum, default_value = "c1")]
    algebra: BaseAlgebra,
    /// write the output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// lift the default bounds m, n ≤ 4 and d ≤ 4
    #[arg(long)]
    force_large: bool,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Kind {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "W")]
    W,
    #[value(name = "C")]
    C,
}

#[derive(ValueEnum, Clone, Copy)]
enum Suite {
    Surjectivity,
    Sergeev,
    Duality,
    Cosalg,
    Exponential,
}

#[derive(ValueEnum, Clone, Copy)]
enum What {
    Pairing,
    Cosalg,
    Doubledual,
}

#[derive(ValueEnum, Clone, Copy)]
enum BaseAlgebra {
    /// the ground field
    K,
    /// k ⊕ k
    Kk,
    /// C(1)
    C1,
    /// W(d)
    W,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Json,
    Csv,
    Pretty,
}

/// Output of a command in all three formats, plus its failure count.
struct Report {
    json: Value,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    pretty: String,
    failures: usize,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Audit(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<Report, Failure>;

fn field_of(c: &Common) -> Result<Field, Failure> {
    Ok(make_field(i64::from(c.p))?)
}

fn field_name(f: Field) -> String {
    if f.is_rational() {
        "Q".into()
    } else {
        format!("GF({})", f.characteristic())
    }
}

/// Enforces the default bounds; with `--force-large` prints the size instead.
fn check_bounds(c: &Common) -> Result<(), Failure> {
    let large = c.m > DEFAULT_MAX_MN || c.n > DEFAULT_MAX_MN || c.d > DEFAULT_MAX_D;
    if !large {
        return Ok(());
    }
    let ambient = ((c.m + c.n).max(2 * c.n) as f64).powi(c.d as i32);
    if c.force_large {
        eprintln!(
            "warning: tensor space of dimension up to {ambient:.0}; commutant systems grow with its square"
        );
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "m, n ≤ {DEFAULT_MAX_MN} and d ≤ {DEFAULT_MAX_D} by default (tensor space would have dimension {ambient:.0}); pass --force-large to override"
        )))
    }
}

fn kv_report(json: Value, pairs: Vec<(String, String)>, failures: usize) -> Report {
    let pretty = pairs
        .iter()
        .map(|(k, v)| format!("{k:>14}: {v}"))
        .collect::<Vec<_>>()
        .join("\n");
    Report {
        json,
        header: vec!["key".into(), "value".into()],
        rows: pairs.into_iter().map(|(k, v)| vec![k, v]).collect(),
        pretty,
        failures,
    }
}

fn cmd_dim(c: &Common) -> CmdResult {
    let f = field_of(c)?;
    let (name, comm, closed) = match c.kind {
        Kind::I => (
            format!("S({}|{},{})", c.m, c.n, c.d),
            schur_i_commutant(c.m, c.n, c.d, f)?,
            schur_i_dimension(c.m, c.n, c.d),
        ),
        Kind::II => (
            format!("Q({},{})", c.n, c.d),
            schur_ii_commutant(c.n, c.d, f)?,
            schur_ii_dimension(c.n, c.d),
        ),
        _ => return Err(Failure::Usage("dim takes --type I or II".into())),
    };
    let (even, odd) = comm.sdim();
    let agree = comm.dim() == closed;
    let json = json!({
        "algebra": name,
        "field": field_name(f),
        "dim": comm.dim(),
        "sdim": [even, odd],
        "closed_form": closed,
        "agree": agree,
    });
    let pairs = vec![
        ("algebra".into(), name),
        ("field".into(), field_name(f)),
        ("dim".into(), comm.dim().to_string()),
        ("sdim".into(), format!("({even}|{odd})")),
        ("closed_form".into(), closed.to_string()),
        ("agree".into(), agree.to_string()),
    ];
    Ok(kv_report(json, pairs, usize::from(!agree)))
}

fn cmd_algebra(c: &Common) -> CmdResult {
    let f = field_of(c)?;
    let a: SuperAlgebra = match c.kind {
        Kind::I => schur_i(c.m, c.n, c.d, f)?,
        Kind::II => schur_ii(c.n, c.d, f)?,
        Kind::W => sergeev(c.d, f)?,
        Kind::C => clifford(c.d, f)?,
    };
    let j = algebra_to_json(&a);
    let rows: Vec<Vec<String>> = j
        .constants
        .iter()
        .map(|(i, k, l, x)| vec![i.to_string(), k.to_string(), l.to_string(), x.clone()])
        .collect();
    let mut pretty = format!("{} over {}, dim {}\n", a.name, field_name(f), a.dim());
    for (i, label) in a.labels().iter().enumerate() {
        pretty += &format!("  b{i} = {label} ({})\n", a.parity(i).bit());
    }
    for (i, k, l, x) in &j.constants {
        pretty += &format!("  b{i}·b{k} ∋ {x}·b{l}\n");
    }
    Ok(Report {
        json: serde_json::to_value(&j).map_err(Error::from)?,
        header: ["i", "j", "k", "scalar"].map(String::from).to_vec(),
        rows,
        pretty: pretty.trim_end().to_string(),
        failures: 0,
    })
}

fn base_algebra(c: &Common, f: Field) -> Result<SuperAlgebra, Failure> {
    Ok(match c.algebra {
        BaseAlgebra::K => clifford(0, f)?,
        BaseAlgebra::Kk => diagonal_algebra(2, f)?,
        BaseAlgebra::C1 => clifford(1, f)?,
        BaseAlgebra::W => sergeev(c.d, f)?,
    })
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn verify_surjectivity(c: &Common, f: Field) -> Result<Vec<Check>, Failure> {
    let (v, p, label) = match c.kind {
        Kind::I => (
            trivial_module(&make_space(f, c.m, c.n))?,
            trivial_module(&make_space(f, c.d, c.d))?,
            format!("B=k, V=W=k^{{{}|{}}}, P=k^{{{}|{}}}", c.m, c.n, c.d, c.d),
        ),
        Kind::II => (
            u1_module(c.n, Side::Right, f)?,
            u1_module(c.d, Side::Right, f)?,
            format!("B=C(1), V=W=U(1)^{}, P=U(1)^{}", c.n, c.d),
        ),
        _ => return Err(Failure::Usage("surjectivity takes --type I or II".into())),
    };
    let r = surjectivity_report(&v, &p, &v, c.d)?;
    Ok(vec![check(
        "surjectivity",
        r.surjective,
        format!("{label}, d={}: rank {} of {}", c.d, r.rank, r.target_dim),
    )])
}

fn verify_sergeev(c: &Common, f: Field) -> Result<Vec<Check>, Failure> {
    let r = double_centralizer(c.n, c.d, f)?;
    let mut out = vec![check(
        "double centralizer",
        r.passed(),
        format!(
            "n={} d={}: W(d) dim {}, image {}, Q dim {}, commutant of Q {}{}",
            c.n,
            c.d,
            r.w_dim,
            r.image_dim,
            r.q_dim,
            r.commutant_dim,
            if r.hypothesis_holds {
                ""
            } else {
                " (n < d: not asserted)"
            }
        ),
    )];
    let w = weight_decomposition(c.n, c.d, f)?;
    let total: usize = w.dims.values().sum();
    out.push(check(
        "weight decomposition",
        w.stable && total == (2 * c.n).pow(c.d as u32),
        format!("{} weight spaces, total dim {total}", w.dims.len()),
    ));
    for side in [Side::Left, Side::Right] {
        let q = q_identification(c.n, side, f)?;
        let which = if side == Side::Left { "U_l(1)" } else { "U(1)" };
        out.push(match q.isomorphic {
            Some(ok) => check(
                format!("Q_n = End over C(1), {which}"),
                ok,
                format!(
                    "n={}: End_C(1)({which}^{}) has dim {}",
                    c.n, c.n, q.commutant_dim
                ),
            ),
            None => check(
                format!("Q_n = End over C(1), {which}"),
                true,
                format!("skipped: {} has no square root of -1", field_name(f)),
            ),
        });
    }
    Ok(out)
}

fn verify_pairing(c: &Common, f: Field) -> Result<Check, Failure> {
    let p = gamma_sym_pairing(&make_space(f, c.m, c.n), c.d)?;
    Ok(check(
        "pairing",
        p.is_perfect(),
        format!(
            "S^{}(M^∨) × Γ^{}M for M=k^{{{}|{}}}: rank {} of {}",
            c.d,
            c.d,
            c.m,
            c.n,
            p.gram.rank(),
            p.right.dim()
        ),
    ))
}

fn verify_cosalg(c: &Common, f: Field) -> Result<Check, Failure> {
    let b = base_algebra(c, f)?;
    let r = cosalg_duality_check(&b, c.d)?;
    Ok(check(
        "cosalg",
        r.isomorphism,
        format!(
            "B={}, d={}: dim Γ^d(B⁻)={}, dim S^d(B^∨)={}, coproduct well defined: {}",
            b.name, c.d, r.gamma_dim, r.sym_dim, r.well_defined
        ),
    ))
}

fn verify_doubledual(c: &Common, f: Field) -> Result<Check, Failure> {
    let b = base_algebra(c, f)?;
    let r = double_dual_algebra_check(&b)?;
    Ok(check(
        "double dual",
        r.iso_to_minus,
        format!("B={} (dim {}): (B^∨)^∨ ≅ B⁻", b.name, r.dim),
    ))
}

fn verify_exponential(c: &Common, f: Field) -> Result<Vec<Check>, Failure> {
    let e = exponential_decomposition(&make_space(f, c.m, 0), &make_space(f, 0, c.n), c.d)?;
    let want = gamma_dimension(c.m, c.n, c.d);
    Ok(vec![check(
        "exponential",
        e.invertible && e.total_dim == want,
        format!(
            "⊕ Γ^(d-i)(k^{{{}|0}}) ⊗ Γ^i(k^{{0|{}}}) → Γ^{}(k^{{{}|{}}}): dim {} (closed form {want})",
            c.m, c.n, c.d, c.m, c.n, e.total_dim
        ),
    )])
}

fn cmd_verify(suite: Suite, what: What, c: &Common) -> CmdResult {
    let f = field_of(c)?;
    let checks = match suite {
        Suite::Surjectivity => verify_surjectivity(c, f)?,
        Suite::Sergeev => verify_sergeev(c, f)?,
        Suite::Duality => vec![match what {
            What::Pairing => verify_pairing(c, f)?,
            What::Cosalg => verify_cosalg(c, f)?,
            What::Doubledual => verify_doubledual(c, f)?,
        }],
        Suite::Cosalg => vec![verify_cosalg(c, f)?],
        Suite::Exponential => verify_exponential(c, f)?,
    };
    let failures = checks.iter().filter(|k| !k.passed).count();
    let status = |p: bool| if p { "PASS" } else { "FAIL" };
    Ok(Report {
        json: json!({
            "field": field_name(f),
            "checks": checks.iter().map(|k| json!({"name": k.name, "passed": k.passed, "detail": k.detail})).collect::<Vec<_>>(),
            "failures": failures,
        }),
        header: ["check", "passed", "detail"].map(String::from).to_vec(),
        rows: checks
            .iter()
            .map(|k| vec![k.name.clone(), k.passed.to_string(), k.detail.clone()])
            .collect(),
        pretty: checks
            .iter()
            .map(|k| format!("{} {}: {}", status(k.passed), k.name, k.detail))
            .collect::<Vec<_>>()
            .join("\n"),
        failures,
    })
}

fn cmd_classify(c: &Common) -> CmdResult {
    let (labels, rows): (Vec<Value>, Vec<Vec<String>>) = match c.kind {
        Kind::I => labels_type_i(c.d, c.p)?
            .into_iter()
            .map(|(l, m)| (json!([l, m]), vec![l.to_string(), m.to_string()]))
            .unzip(),
        Kind::II => labels_type_ii(c.d, c.p)?
            .into_iter()
            .map(|l| (json!(l), vec![l.to_string()]))
            .unzip(),
        _ => return Err(Failure::Usage("classify takes --type I or II".into())),
    };
    let kind = if c.kind == Kind::I { "I" } else { "II" };
    let header = if c.kind == Kind::I {
        vec!["lambda", "mu"]
    } else {
        vec!["lambda"]
    };
    let pretty = format!(
        "type {kind}, d={}, p={}: {} labels\n{}",
        c.d,
        c.p,
        rows.len(),
        rows.iter()
            .map(|r| format!("  {}", r.join(" ")))
            .collect::<Vec<_>>()
            .join("\n")
    );
    Ok(Report {
        json: json!({"type": kind, "d": c.d, "p": c.p, "count": rows.len(), "labels": labels}),
        header: header.into_iter().map(String::from).collect(),
        rows,
        pretty: pretty.trim_end().to_string(),
        failures: 0,
    })
}

fn render(r: &Report, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&r.json).map_err(Error::from)? + "\n",
        Format::Pretty => r.pretty.clone() + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Usage(format!("csv: {e}"));
            w.write_record(&r.header).map_err(io)?;
            for row in &r.rows {
                w.write_record(row).map_err(io)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Failure::Usage(format!("csv: {e}")))?;
            String::from_utf8(bytes).expect("csv output is UTF-8")
        }
    })
}

fn run(cli: Cli) -> Result<usize, Failure> {
    let (common, report) = match &cli.command {
        Command::Dim(c) => (c, {
            check_bounds(c)?;
            cmd_dim(c)?
        }),
        Command::Algebra(c) => (c, {
            check_bounds(c)?;
            cmd_algebra(c)?
        }),
        Command::Verify {
            suite,
            what,
            common,
        } => (common, {
            check_bounds(common)?;
            cmd_verify(*suite, *what, common)?
        }),
        Command::Classify(c) => (c, cmd_classify(c)?),
    };
    let text = render(&report, common.format)?;
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(e.to_string()))?;
        }
    }
    Ok(report.failures)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
