//! Command-line front end: compute gap sets, minimal generating sets, box
//! member sets, oracle cross-checks, and the reference-table reproduction.
//!
//! Exit codes: 0 success, 1 validation/usage error, 2 verification failure
//! (a failed certificate, cross-check, or table comparison).

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use weierstrass::{
    enumerate_gamma, extract_minimal_generating, gamma_cardinality, gap_set_box, generate_h_box,
    golden, oracle_box_semigroup, singleton_semigroup, verify_all, CurveParams,
    DefaultGammaProvider, OnePointSemigroup, Preset,
};

#[derive(Parser)]
#[command(name = "weierstrass", version, about = "Multi-point Weierstrass semigroups on curves f(y) = g(x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresetKind {
    /// (a, b) = (q, q^r + 1), the quotient-Hermitian family.
    HermitianLike,
    /// Raw coprime (a, b).
    Kummer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct CurveArgs {
    /// Degree of f(y) (number of x-roots); points are P_1..P_{a+1}.
    #[arg(long)]
    a: Option<u64>,
    /// Degree of g(x).
    #[arg(long)]
    b: Option<u64>,
    /// Curve family preset.
    #[arg(long, value_enum)]
    preset: Option<PresetKind>,
    /// Preset parameter q (hermitian-like).
    #[arg(long)]
    q: Option<u64>,
    /// Preset parameter r (hermitian-like; odd).
    #[arg(long)]
    r: Option<u64>,
}

impl CurveArgs {
    fn resolve(&self) -> Result<CurveParams> {
        match self.preset {
            Some(PresetKind::HermitianLike) => {
                let q = self.q.ok_or_else(|| anyhow!("--preset hermitian-like needs --q"))?;
                let r = self.r.ok_or_else(|| anyhow!("--preset hermitian-like needs --r"))?;
                Ok(CurveParams::hermitian_like(q, r)?)
            }
            Some(PresetKind::Kummer) | None => {
                let a = self.a.ok_or_else(|| anyhow!("missing --a (or use --preset)"))?;
                let b = self.b.ok_or_else(|| anyhow!("missing --b (or use --preset)"))?;
                Ok(CurveParams::new(a, b)?)
            }
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Gaps of the one-point semigroup <a, b>.
    Gaps {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The minimal generating set Gamma(P_1, ..., P_m) in closed form.
    Gamma {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        m: usize,
        /// Print only the cardinality.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Box-truncated member set of H(P_1, ..., P_m); m = 1 lists <a, b>.
    Semigroup {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        m: usize,
        /// Per-coordinate bound, comma-separated or a single value
        /// (default: a*b per coordinate).
        #[arg(long)]
        bound: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Vectors below the bound that are not members; m = 1 lists the gaps.
    Gapset {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        bound: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Brute-force monomial oracle: minimal generators from the box closure,
    /// or a certified singleton semigroup H(P_l).
    Oracle {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, required_unless_present = "singleton")]
        m: Option<usize>,
        #[arg(long)]
        bound: Option<String>,
        /// Compute H(P_l) for this point index (>= 2) instead.
        #[arg(long)]
        singleton: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cross-verify certificates, oracle vs closed form, and both box
    /// constructions over a range of m.
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 2)]
        m_min: usize,
        /// Default: a+1.
        #[arg(long)]
        m_max: Option<usize>,
        /// Uniform per-coordinate bound (default: a*b).
        #[arg(long)]
        bound_value: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recompute the five reference tables and compare them as sets.
    Reproduce {
        /// Directory of `<table>.json` files overriding the embedded tables.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// The stable payload: a/b/m/command echo the request; `result` is the
/// per-command data; no timing inside (that goes to stderr).
#[derive(Serialize)]
struct RunReport {
    a: u64,
    b: u64,
    m: u64,
    command: String,
    result: Value,
    certified: bool,
    version: String,
}

impl RunReport {
    fn new(params: Option<&CurveParams>, m: u64, command: &str, result: Value, certified: bool) -> Self {
        RunReport {
            a: params.map_or(0, |p| p.a()),
            b: params.map_or(0, |p| p.b()),
            m,
            command: command.to_string(),
            result,
            certified,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    init_workers();
    let start = Instant::now();
    match run(cli.command) {
        Ok(verified) => {
            eprintln!("# completed in {:.3?}", start.elapsed());
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Worker count comes from WEIERSTRASS_WORKERS; it never changes results.
fn init_workers() {
    #[cfg(feature = "parallel")]
    if let Ok(v) = std::env::var("WEIERSTRASS_WORKERS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            if n == 1 {
                weierstrass::exec::set_mode(weierstrass::exec::Mode::Sequential);
            }
        }
    }
}

fn parse_bound(raw: Option<&str>, m: usize, default: u64) -> Result<Vec<u64>> {
    let Some(raw) = raw else {
        return Ok(vec![default; m]);
    };
    let parts: Vec<u64> = raw
        .split(',')
        .map(|s| s.trim().parse::<u64>().with_context(|| format!("bad bound component {s:?}")))
        .collect::<Result<_>>()?;
    match parts.len() {
        1 => Ok(vec![parts[0]; m]),
        n if n == m => Ok(parts),
        n => bail!("bound has {n} components but m = {m}"),
    }
}

/// Listing a box member-by-member is refused beyond this many cells.
const MAX_LIST_CELLS: u64 = 20_000_000;

fn check_list_size(bound: &[u64]) -> Result<()> {
    let cells: u128 = bound.iter().map(|&b| b as u128 + 1).product();
    if cells > MAX_LIST_CELLS as u128 {
        bail!("box of {cells} cells is too large to list; pass a smaller --bound");
    }
    Ok(())
}

fn warn_preset_m(params: &CurveParams, m: usize) {
    if let Some(Preset::HermitianLike { q, .. }) = params.preset() {
        if (m as u64) > *q {
            eprintln!(
                "warning: m = {m} exceeds the preset field parameter q = {q}; \
                 the closed form is evaluated for the abstract relation curve"
            );
        }
    }
}

fn vectors_value(vectors: &[Vec<u64>]) -> Value {
    json!(vectors)
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Gaps { curve, output } => {
            let params = curve.resolve()?;
            let semi = OnePointSemigroup::new(&params);
            let report = RunReport::new(Some(&params), 1, "gaps", json!(semi.gaps()), true);
            emit(&report, &output)?;
            Ok(true)
        }
        Command::Gamma { curve, m, count, output } => {
            let params = curve.resolve()?;
            warn_preset_m(&params, m);
            let result = if count {
                json!(gamma_cardinality(&params, m)?)
            } else {
                let vectors: Vec<Vec<u64>> =
                    enumerate_gamma(&params, m)?.into_iter().map(|g| g.coords).collect();
                vectors_value(&vectors)
            };
            let report = RunReport::new(Some(&params), m as u64, "gamma", result, true);
            emit(&report, &output)?;
            Ok(true)
        }
        Command::Semigroup { curve, m, bound, output } => {
            let params = curve.resolve()?;
            let ab = params.a() * params.b();
            if m == 1 {
                let b = parse_bound(bound.as_deref(), 1, 2 * ab)?[0];
                let semi = OnePointSemigroup::new(&params);
                let report = RunReport::new(
                    Some(&params),
                    1,
                    "semigroup",
                    json!(semi.members_up_to(b)),
                    true,
                );
                emit(&report, &output)?;
                return Ok(true);
            }
            let bound = parse_bound(bound.as_deref(), m, ab)?;
            check_list_size(&bound)?;
            let sbox = generate_h_box(&params, m, &bound, &DefaultGammaProvider::new())?;
            let vectors: Vec<Vec<u64>> =
                sbox.members().map(weierstrass::PoleVector::into_coords).collect();
            let certified = sbox.certified();
            let report =
                RunReport::new(Some(&params), m as u64, "semigroup", vectors_value(&vectors), certified);
            emit(&report, &output)?;
            Ok(true)
        }
        Command::Gapset { curve, m, bound, output } => {
            let params = curve.resolve()?;
            let ab = params.a() * params.b();
            if m == 1 {
                let semi = OnePointSemigroup::new(&params);
                let report =
                    RunReport::new(Some(&params), 1, "gapset", json!(semi.gaps()), true);
                emit(&report, &output)?;
                return Ok(true);
            }
            let bound = parse_bound(bound.as_deref(), m, ab)?;
            check_list_size(&bound)?;
            let sbox = generate_h_box(&params, m, &bound, &DefaultGammaProvider::new())?;
            let vectors: Vec<Vec<u64>> =
                gap_set_box(&sbox).into_iter().map(weierstrass::PoleVector::into_coords).collect();
            let certified = sbox.certified();
            let report =
                RunReport::new(Some(&params), m as u64, "gapset", vectors_value(&vectors), certified);
            emit(&report, &output)?;
            Ok(true)
        }
        Command::Oracle { curve, m, bound, singleton, output } => {
            let params = curve.resolve()?;
            let ab = params.a() * params.b();
            if let Some(point) = singleton {
                let b = parse_bound(bound.as_deref(), 1, ab)?[0];
                let cert = singleton_semigroup(&params, point, b)?;
                let certified = cert.certified;
                let report = RunReport::new(
                    Some(&params),
                    1,
                    "oracle",
                    serde_json::to_value(&cert)?,
                    certified,
                );
                emit(&report, &output)?;
                return Ok(true);
            }
            let m = m.expect("clap enforces m unless --singleton");
            let bound = parse_bound(bound.as_deref(), m, ab)?;
            let sbox = oracle_box_semigroup(&params, m, &bound)?;
            let vectors: Vec<Vec<u64>> = extract_minimal_generating(&sbox)
                .into_iter()
                .map(weierstrass::PoleVector::into_coords)
                .collect();
            let report = RunReport::new(
                Some(&params),
                m as u64,
                "oracle",
                vectors_value(&vectors),
                sbox.certified(),
            );
            emit(&report, &output)?;
            Ok(true)
        }
        Command::Verify { curve, m_min, m_max, bound_value, output } => {
            let params = curve.resolve()?;
            let m_max = m_max.unwrap_or(params.point_count());
            if m_min < 2 || m_max > params.point_count() || m_min > m_max {
                bail!(
                    "m range {m_min}..={m_max} invalid; need 2 <= m_min <= m_max <= {}",
                    params.point_count()
                );
            }
            let r = verify_all(&params, m_min, m_max, bound_value)?;
            let overall = r.overall;
            let report = RunReport::new(
                Some(&params),
                m_max as u64,
                "verify",
                serde_json::to_value(&r)?,
                overall,
            );
            emit(&report, &output)?;
            Ok(overall)
        }
        Command::Reproduce { golden_dir, output } => {
            let tables = match &golden_dir {
                None => golden::embedded_tables(),
                Some(dir) => load_golden_dir(dir)?,
            };
            let reports = golden::check_tables(&tables);
            let all_pass = reports.iter().all(|r| r.pass);
            let report = RunReport::new(None, 0, "reproduce", serde_json::to_value(&reports)?, all_pass);
            emit(&report, &output)?;
            if !all_pass {
                for r in reports.iter().filter(|r| !r.pass) {
                    eprintln!(
                        "table {} differs: {} missing, {} extra",
                        r.name,
                        r.missing.len(),
                        r.extra.len()
                    );
                }
            }
            Ok(all_pass)
        }
    }
}

fn load_golden_dir(dir: &std::path::Path) -> Result<Vec<golden::GoldenTable>> {
    golden::embedded_tables()
        .into_iter()
        .map(|mut t| {
            let path = dir.join(format!("{}.json", t.name));
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            t.vectors = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            Ok(t)
        })
        .collect()
}

fn emit(report: &RunReport, output: &OutputArgs) -> Result<()> {
    let text = match output.format {
        Format::Json => format!("{}\n", serde_json::to_string(report)?),
        Format::Csv => render_csv(report),
        Format::Table => render_table(report),
    };
    match &output.out {
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn render_csv(report: &RunReport) -> String {
    let mut out = String::new();
    match &report.result {
        Value::Array(rows) if rows.iter().all(Value::is_array) => {
            for row in rows {
                let cells: Vec<String> =
                    row.as_array().unwrap().iter().map(Value::to_string).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(map) => {
                        let cells: Vec<String> =
                            map.values().map(|v| v.to_string().replace(',', ";")).collect();
                        out.push_str(&cells.join(","));
                        out.push('\n');
                    }
                    other => {
                        out.push_str(&other.to_string());
                        out.push('\n');
                    }
                }
            }
        }
        other => {
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
    out
}

fn render_table(report: &RunReport) -> String {
    let mut out = if report.a == 0 {
        format!("{} certified={}\n", report.command, report.certified)
    } else {
        format!(
            "{} (a={}, b={}, m={}) certified={}\n",
            report.command, report.a, report.b, report.m, report.certified
        )
    };
    match &report.result {
        Value::Array(rows) if rows.iter().all(Value::is_array) => {
            for row in rows {
                let cells: Vec<String> =
                    row.as_array().unwrap().iter().map(Value::to_string).collect();
                out.push_str(&format!("  ({})\n", cells.join(", ")));
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(map) => {
                        let pass = map.get("pass").and_then(Value::as_bool);
                        let prefix = match pass {
                            Some(true) => "PASS ",
                            Some(false) => "FAIL ",
                            None => "",
                        };
                        let name = map
                            .get("name")
                            .and_then(Value::as_str)
                            .map(str::to_string)
                            .unwrap_or_else(|| item.to_string());
                        let detail = map
                            .get("detail")
                            .or_else(|| map.get("expected"))
                            .map(|v| format!(" — {v}"))
                            .unwrap_or_default();
                        out.push_str(&format!("  {prefix}{name}{detail}\n"));
                    }
                    other => out.push_str(&format!("  {other}\n")),
                }
            }
        }
        other => out.push_str(&format!("  {other}\n")),
    }
    out
}
