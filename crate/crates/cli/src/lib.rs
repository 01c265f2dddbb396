//! Command-line front end for the `oddschur` crate.
//!
//! Every subcommand writes either a human-readable text form or a single JSON
//! document (`--format json`). Exit status: 0 on success, 1 when a
//! verification or cross-check fails, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use oddschur::lr::{lr, LrMethod, LrQuery};
use oddschur::oddsym::{kostka_matrix, BasisImages};
use oddschur::plactic::{knuth_normalize_with, Strategy};
use oddschur::polytopes::{enumerate_hives, enumerate_triangles, lr_hive, lr_triangle, polytope_size};
use oddschur::schur::{pieri_horizontal, pieri_vertical, schur, schur_plactic, schur_symmetrized, SchurMethod};
use oddschur::verify::{self, Suite, VerifyOptions};
use oddschur::{Basis, Error, Partition, SkewPolynomial, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "oddschur", version, about = "Odd Schur functions and odd Littlewood-Richardson coefficients")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Odd Schur polynomial s_λ in OPol_n, by one or all constructions.
    Schur(SchurArgs),
    /// Odd Littlewood-Richardson coefficients c_{μν}^λ.
    Lr(LrArgs),
    /// The Kostka matrix K_{λμ} for partitions of k.
    Kostka(KostkaArgs),
    /// Lattice points of the hive (or LR triangle) polytope.
    Hive(HiveArgs),
    /// Pieri rule expansion of s_λ e_k or s_λ h_k.
    Pieri(PieriArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Normal form of a word in the odd plactic monoid.
    Plactic(PlacticArgs),
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    #[arg(long)]
    pub lambda: Partition,
    /// Number of variables (defaults to |λ|, at least 1).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = SchurChoice::All)]
    pub method: SchurChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchurChoice {
    Plactic,
    Symmetrized,
    Kostka,
    All,
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Partition,
    /// Omit to list every λ with a non-zero coefficient.
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long, value_enum, default_value_t = LrChoice::All)]
    pub method: LrChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LrChoice {
    Direct,
    Yamanouchi,
    Plactic,
    Triangle,
    Hive,
    Even,
    All,
}

#[derive(Debug, Args)]
pub struct KostkaArgs {
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Args)]
pub struct HiveArgs {
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Partition,
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long, value_enum, default_value_t = Emit::Count)]
    pub emit: Emit,
    /// Which polytope to enumerate; the two are in bijection.
    #[arg(long, value_enum, default_value_t = Model::Hive)]
    pub model: Model,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// Number of lattice points.
    Count,
    /// Signed lattice-point sum, i.e. the odd LR coefficient.
    Signed,
    /// Every lattice point as a list of rows, top row first.
    Points,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Hive,
    Triangle,
}

#[derive(Debug, Args)]
pub struct PieriArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum)]
    pub kind: PieriKind,
    /// Also multiply the polynomials out and compare with the rule.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PieriKind {
    /// s_λ e_k: add a vertical strip.
    Vertical,
    /// s_λ h_k: add a horizontal strip.
    Horizontal,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
    pub suite: SuiteChoice,
    #[arg(long, default_value_t = 5)]
    pub max_degree: u32,
    /// Run the Schur coincidence sweep to degree 6 regardless of --max-degree.
    #[arg(long)]
    pub deep: bool,
    /// Print only failing cases and the summary (text format).
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteChoice {
    Coincidence,
    Pieri,
    Lr,
    Polytopes,
    Ring,
    All,
}

#[derive(Debug, Args)]
pub struct PlacticArgs {
    /// Digits (`53422331112`) or comma-separated letters (`10,2,1`).
    #[arg(long)]
    pub word: Word,
    #[arg(long, value_enum, default_value_t = StrategyChoice::LeftToRight)]
    pub strategy: StrategyChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyChoice {
    LeftToRight,
    RightToLeft,
    BumpSign,
}

/// What a subcommand produced: the text and JSON renderings plus whether its
/// internal checks passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = stream.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            let written = match cli.format {
                Format::Text => writeln!(out, "{}", output.text.trim_end()),
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&output.json).expect("JSON values serialize"))
                }
            };
            if written.is_err() {
                return EXIT_FAILED;
            }
            if output.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
    }
}

fn execute(command: &Command) -> Result<Output, Error> {
    match command {
        Command::Schur(a) => run_schur(a),
        Command::Lr(a) => run_lr(a),
        Command::Kostka(a) => Ok(run_kostka(a)),
        Command::Hive(a) => Ok(run_hive(a)),
        Command::Pieri(a) => run_pieri(a),
        Command::Verify(a) => Ok(run_verify(a)),
        Command::Plactic(a) => Ok(run_plactic(a)),
    }
}

fn run_schur(a: &SchurArgs) -> Result<Output, Error> {
    let n = a.n.unwrap_or(a.lambda.weight() as usize).max(1);
    let methods: Vec<SchurMethod> = match a.method {
        SchurChoice::Plactic => vec![SchurMethod::Plactic],
        SchurChoice::Symmetrized => vec![SchurMethod::Symmetrized],
        SchurChoice::Kostka => vec![SchurMethod::Kostka],
        SchurChoice::All => SchurMethod::ALL.to_vec(),
    };
    let polys = methods
        .iter()
        .map(|&m| schur(&a.lambda, n, m).map(|p| (m, p)))
        .collect::<Result<Vec<(SchurMethod, SkewPolynomial)>, Error>>()?;
    let agree = polys.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = String::new();
    for (m, p) in &polys {
        text += &format!("{:<12} {p}\n", format!("{}:", m.name()));
    }
    let verdict = (polys.len() > 1).then_some(if agree { "AGREE" } else { "DISAGREE" });
    if let Some(v) = verdict {
        text += v;
    }
    let json = json!({
        "lambda": a.lambda,
        "n": n,
        "polynomials": polys.iter().map(|(m, p)| json!({"method": m.name(), "polynomial": p})).collect::<Vec<_>>(),
        "verdict": verdict.map(str::to_lowercase),
    });
    Ok(Output { text, json, ok: agree })
}

fn lr_methods(choice: LrChoice) -> Vec<LrMethod> {
    match choice {
        LrChoice::Direct => vec![LrMethod::Direct],
        LrChoice::Yamanouchi => vec![LrMethod::Yamanouchi],
        LrChoice::Plactic => vec![LrMethod::Plactic],
        LrChoice::Triangle => vec![LrMethod::Triangle],
        LrChoice::Hive => vec![LrMethod::Hive],
        LrChoice::Even => vec![LrMethod::Even],
        LrChoice::All => LrMethod::ODD.into_iter().chain([LrMethod::Even]).collect(),
    }
}

/// One coefficient under the chosen methods. With several methods, `coeff`
/// is the common odd value (null if they disagree) and `values` lists each.
#[derive(Serialize)]
struct LrRecord {
    mu: Partition,
    nu: Partition,
    lambda: Partition,
    coeff: Option<i64>,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<serde_json::Map<String, Value>>,
}

impl LrRecord {
    fn build(q: LrQuery, choice: LrChoice) -> Result<Self, Error> {
        let methods = lr_methods(choice);
        let values = methods.iter().map(|&m| lr(&q, m).map(|v| (m, v))).collect::<Result<Vec<_>, Error>>()?;
        let (coeff, method, listed) = if let [(m, v)] = values[..] {
            (Some(v), m.name(), None)
        } else {
            let odd: Vec<i64> = values.iter().filter(|(m, _)| *m != LrMethod::Even).map(|(_, v)| *v).collect();
            let common = odd.windows(2).all(|w| w[0] == w[1]).then(|| odd[0]);
            let map = values.iter().map(|(m, v)| (m.name().to_string(), json!(v))).collect();
            (common, "all", Some(map))
        };
        Ok(LrRecord { mu: q.mu, nu: q.nu, lambda: q.lambda, coeff, method, values: listed })
    }

    fn agrees(&self) -> bool {
        self.coeff.is_some()
    }

    fn is_zero(&self) -> bool {
        match &self.values {
            Some(map) => map.values().all(|v| v.as_i64() == Some(0)),
            None => self.coeff == Some(0),
        }
    }

    fn text(&self) -> String {
        let q = format!("c({}, {}; {})", self.mu, self.nu, self.lambda);
        let coeff = self.coeff.map_or("?".to_string(), |c| c.to_string());
        match &self.values {
            None => format!("{q} = {coeff}  [{}]", self.method),
            Some(map) => {
                let each: Vec<String> = map.iter().map(|(m, v)| format!("{m} {v}")).collect();
                let verdict = if self.agrees() { "AGREE" } else { "DISAGREE" };
                format!("{q} = {coeff}  ({})  {verdict}", each.join(", "))
            }
        }
    }
}

fn run_lr(a: &LrArgs) -> Result<Output, Error> {
    if let Some(lambda) = &a.lambda {
        let r = LrRecord::build(LrQuery::new(a.mu.clone(), a.nu.clone(), lambda.clone()), a.method)?;
        let json = serde_json::to_value(&r).expect("record serializes");
        return Ok(Output { text: r.text(), ok: r.agrees(), json });
    }
    let degree = a.mu.weight() + a.nu.weight();
    let mut records = Vec::new();
    for lambda in oddschur::diagrams::enumerate_partitions(degree, None, None) {
        let r = LrRecord::build(LrQuery::new(a.mu.clone(), a.nu.clone(), lambda), a.method)?;
        if !r.is_zero() {
            records.push(r);
        }
    }
    let ok = records.iter().all(LrRecord::agrees);
    let mut text: String = records.iter().map(|r| r.text() + "\n").collect();
    if records.is_empty() {
        text = format!("s_{} s_{} = 0", a.mu, a.nu);
    }
    Ok(Output { text, json: serde_json::to_value(&records).expect("records serialize"), ok })
}

fn run_kostka(a: &KostkaArgs) -> Output {
    let m = kostka_matrix(a.k);
    let labels: Vec<String> = m.partitions().iter().map(ToString::to_string).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(2);
    let mut text = format!("{:width$} ", "");
    for l in &labels {
        text += &format!(" {l:>width$}");
    }
    text.push('\n');
    for (l, row) in labels.iter().zip(m.entries()) {
        text += &format!("{l:>width$} ");
        for v in row {
            text += &format!(" {v:>width$}");
        }
        text.push('\n');
    }
    Output::ok(text, json!({"k": a.k, "partitions": m.partitions(), "entries": m.entries()}))
}

fn run_hive(a: &HiveArgs) -> Output {
    let (mu, nu, lambda) = (&a.mu, &a.nu, &a.lambda);
    let n = polytope_size(lambda, mu, nu);
    let mut json = json!({"mu": mu, "nu": nu, "lambda": lambda, "model": model_name(a.model), "n": n});
    let text = match a.emit {
        Emit::Count => {
            let count = match a.model {
                Model::Hive => enumerate_hives(lambda, mu, nu).len(),
                Model::Triangle => enumerate_triangles(lambda, mu, nu).len(),
            };
            json["count"] = json!(count);
            count.to_string()
        }
        Emit::Signed => {
            let coeff = match a.model {
                Model::Hive => lr_hive(mu, nu, lambda),
                Model::Triangle => lr_triangle(mu, nu, lambda),
            };
            json["coeff"] = json!(coeff);
            coeff.to_string()
        }
        Emit::Points => {
            let (points, lines): (Vec<Value>, Vec<String>) = match a.model {
                Model::Hive => enumerate_hives(lambda, mu, nu)
                    .iter()
                    .map(|h| (serde_json::to_value(h).expect("hive serializes"), format!("{h}  Q={}", h.q())))
                    .unzip(),
                Model::Triangle => enumerate_triangles(lambda, mu, nu)
                    .iter()
                    .map(|t| (serde_json::to_value(t).expect("triangle serializes"), format!("{t}  Q={}", t.q())))
                    .unzip(),
            };
            json["points"] = Value::Array(points);
            if lines.is_empty() {
                "(no points)".into()
            } else {
                lines.join("\n")
            }
        }
    };
    Output::ok(text, json)
}

fn model_name(m: Model) -> &'static str {
    match m {
        Model::Hive => "hive",
        Model::Triangle => "triangle",
    }
}

fn run_pieri(a: &PieriArgs) -> Result<Output, Error> {
    let (rule, kind) = match a.kind {
        PieriKind::Vertical => (pieri_vertical(&a.lambda, a.k), "vertical"),
        PieriKind::Horizontal => (pieri_horizontal(&a.lambda, a.k), "horizontal"),
    };
    let mut text = format!("{rule}");
    let mut json = json!({"lambda": a.lambda, "k": a.k, "kind": kind, "expansion": rule});
    let mut ok = true;
    if a.check {
        let deg = a.lambda.weight() + a.k;
        let n = deg as usize;
        let product = match a.kind {
            PieriKind::Vertical => {
                schur_symmetrized(&a.lambda, n)?.multiply(&schur_symmetrized(&Partition::column(a.k), n)?)?
            }
            PieriKind::Horizontal => schur_plactic(&a.lambda, n).multiply(&schur_plactic(&Partition::row(a.k), n))?,
        };
        let got = BasisImages::new(Basis::S, deg, n)?.expand(&product)?;
        ok = got == rule;
        text += &format!("\ncheck: {}", if ok { "AGREE" } else { "DISAGREE" });
        json["check"] = json!({"agree": ok, "product": got});
    }
    Ok(Output { text, json, ok })
}

fn run_verify(a: &VerifyArgs) -> Output {
    let suite = match a.suite {
        SuiteChoice::Coincidence => Suite::Coincidence,
        SuiteChoice::Pieri => Suite::Pieri,
        SuiteChoice::Lr => Suite::Lr,
        SuiteChoice::Polytopes => Suite::Polytopes,
        SuiteChoice::Ring => Suite::Ring,
        SuiteChoice::All => Suite::All,
    };
    let report = verify::run(suite, VerifyOptions { max_degree: a.max_degree, deep: a.deep });
    let text = if a.quiet {
        let summary = report.to_string().lines().last().unwrap_or_default().to_string();
        let mut lines: Vec<String> = report
            .failures()
            .map(|c| format!("FAIL  {} {}  expected {}, got {}", c.check, c.inputs, c.expected, c.got))
            .collect();
        lines.push(summary);
        lines.join("\n")
    } else {
        report.to_string()
    };
    Output { text, json: serde_json::to_value(&report).expect("report serializes"), ok: report.passed() }
}

fn run_plactic(a: &PlacticArgs) -> Output {
    let (strategy, name) = match a.strategy {
        StrategyChoice::LeftToRight => (Strategy::LeftToRight, "left-to-right"),
        StrategyChoice::RightToLeft => (Strategy::RightToLeft, "right-to-left"),
        StrategyChoice::BumpSign => (Strategy::BumpSign, "bump-sign"),
    };
    let (sign, tableau) = knuth_normalize_with(&a.word, strategy);
    let text = format!("sign     {sign}\ntableau  {tableau}");
    let json = json!({"word": a.word.to_string(), "strategy": name, "sign": sign.to_i64(), "tableau": tableau});
    Output::ok(text, json)
}
