//! Command-line surface: argument parsing and command execution, returning the exit code and
//! the text to print so the binary stays a thin wrapper.
//!
//! Exit codes: `0` when everything verified, `1` when some verification failed (the report is
//! still printed), `2` for usage errors and exceeded bounds.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::degree::{degree, syt_enumerate, SYT_BOUND};
use crate::error::{Error, Result};
use crate::identity::{
    tables, verify_analytic_4_5, verify_branching_decomposition, verify_four_row_count,
    verify_hook_wrap, verify_l_identity, verify_prop_2_4, verify_regev, verify_riordan_refinement,
    verify_theorem_1_4, verify_theorem_4_7, VerificationReport,
};
use crate::partition::{partitions, x_set, Partition, XSetClass};
use crate::paths::{
    count_paths, count_riordan_by_steps, enumerate_paths, PathKind, ENUMERATION_BOUND,
};
use crate::search::{
    find_equal_sum_pairs, scan_even_l, ScanRow, SearchLimits, SearchPool, DEFAULT_EVAL_CAP,
};
use crate::symbolic::{certify_all, certify_by_id, CERTIFICATE_IDS};

/// Environment variable naming the directory that relative `--out` paths resolve against.
pub const OUT_DIR_ENV: &str = "KNAPSACK_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "knapsack",
    version,
    about = "Exact character degrees and knapsack identities"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the output to this file as well; relative paths resolve against $KNAPSACK_OUT_DIR.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of standard Young tableaux of a shape.
    Degree {
        /// Shape such as `5,5,1^10`.
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = Method::Hook)]
        method: Method,
    },
    /// Dyck, Motzkin or Riordan path counts.
    Paths {
        #[arg(long)]
        kind: String,
        /// Length (semilength for Dyck paths).
        #[arg(long)]
        n: usize,
        /// Riordan paths with this many flat steps.
        #[arg(long, requires = "up")]
        flat: Option<usize>,
        /// Riordan paths with this many up steps.
        #[arg(long, requires = "flat")]
        up: Option<usize>,
        /// List the paths (lengths up to 16).
        #[arg(long)]
        list: bool,
    },
    /// Verify identity instances, singly or as a sweep.
    Verify(VerifyArgs),
    /// Reproduce a fixed table of identities.
    Table {
        #[arg(long)]
        id: String,
    },
    /// Run the symbolic certificates.
    Certify {
        #[arg(long, conflicts_with = "id")]
        all: bool,
        #[arg(long)]
        id: Option<String>,
    },
    /// Search a pool of shapes for disjoint sets with equal degree sums.
    Search {
        #[arg(long)]
        n: usize,
        /// Families joined by `+`: `3part`, `fathook`, `rows<p>`.
        #[arg(long, default_value = "3part+fathook")]
        pool: String,
        #[arg(long, default_value_t = 4)]
        max_side: usize,
        #[arg(long, default_value_t = DEFAULT_EVAL_CAP)]
        max_evals: u64,
        /// Print at most this many identities.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Tabulate `L_d(k,m)` for even `d` with fat-hook probes.
    Scan {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 6)]
        max_d: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hook,
    Syt,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// thm1.3, thm1.4, lem2.3, prop2.4, thm4.2, cor4.4, ex4.1, eq4.5, thm4.7, hookwrap,
    /// regev, fourrow, branch.
    #[arg(long)]
    pub id: String,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long)]
    pub d: Option<i64>,
    /// Partition for hook wrapping.
    #[arg(long)]
    pub mu: Option<String>,
    /// `X1` or `X2` for branching decompositions.
    #[arg(long)]
    pub class: Option<String>,
    /// Sweep the default parameter ranges instead of a single instance.
    #[arg(long)]
    pub sweep: bool,
    #[arg(long)]
    pub max_n: Option<i64>,
    #[arg(long)]
    pub max_k: Option<i64>,
    #[arg(long)]
    pub max_m: Option<i64>,
    #[arg(long)]
    pub max_d: Option<i64>,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    finish(execute(&cli), cli.out.as_ref())
}

/// Maps a command result to an exit code, writing the output file if one was requested.
fn finish(result: Run, out_path: Option<&PathBuf>) -> Outcome {
    match result {
        Ok((pass, stdout)) => {
            let mut out = Outcome {
                code: if pass { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            };
            if let Some(path) = out_path {
                let path = resolve_out(path);
                match std::fs::write(&path, &out.stdout) {
                    Ok(()) => out.stderr = format!("wrote {}\n", path.display()),
                    Err(e) => {
                        out.code = 2;
                        out.stderr = format!("error: cannot write {}: {e}\n", path.display());
                    }
                }
            }
            out
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn resolve_out(path: &PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.clone(),
    }
}

type Run = Result<(bool, String)>;

fn execute(cli: &Cli) -> Run {
    let f = cli.format;
    match &cli.command {
        Command::Degree { shape, method } => cmd_degree(shape, *method, f),
        Command::Paths {
            kind,
            n,
            flat,
            up,
            list,
        } => cmd_paths(kind, *n, *flat, *up, *list, f),
        Command::Verify(args) => cmd_verify(args, f),
        Command::Table { id } => cmd_table(id, f),
        Command::Certify { all, id } => cmd_certify(*all, id.as_deref(), f),
        Command::Search {
            n,
            pool,
            max_side,
            max_evals,
            limit,
        } => cmd_search(*n, pool, *max_side, *max_evals, *limit, f),
        Command::Scan { k, m, max_d } => cmd_scan(*k, *m, *max_d, f),
    }
}

fn cmd_degree(shape: &str, method: Method, f: Format) -> Run {
    let lam: Partition = shape.parse()?;
    let value = match method {
        Method::Hook => degree(&lam),
        Method::Syt => syt_enumerate(&lam, SYT_BOUND)?,
    };
    Ok((
        true,
        match f {
            Format::Json => format!("{}\n", json!({"shape": lam, "degree": value.to_string()})),
            Format::Csv => format!("shape,degree\n\"{lam}\",{value}\n"),
            Format::Text => format!("{value}\n"),
        },
    ))
}

fn cmd_paths(
    kind: &str,
    n: usize,
    flat: Option<usize>,
    up: Option<usize>,
    list: bool,
    f: Format,
) -> Run {
    let kind: PathKind = kind.parse()?;
    let count = match (flat, up) {
        (Some(m), Some(k)) => {
            if kind != PathKind::Riordan {
                return Err(Error::Precondition(
                    "--flat/--up apply to Riordan paths".into(),
                ));
            }
            count_riordan_by_steps(n, m, k)?
        }
        _ => count_paths(kind, n),
    };
    let listed = if list {
        Some(enumerate_paths(kind, n, ENUMERATION_BOUND)?)
    } else {
        None
    };
    let listed: Option<Vec<String>> = listed.map(|ps| {
        ps.into_iter()
            .filter(|p| match (flat, up) {
                (Some(m), Some(k)) => {
                    p.count(crate::paths::Step::F) == m && p.count(crate::paths::Step::U) == k
                }
                _ => true,
            })
            .map(|p| p.to_string())
            .collect()
    });
    Ok((
        true,
        match f {
            Format::Json => {
                let mut v = json!({"kind": format!("{kind:?}").to_lowercase(), "n": n, "count": count.to_string()});
                if let (Some(m), Some(k)) = (flat, up) {
                    v["flat"] = json!(m);
                    v["up"] = json!(k);
                }
                if let Some(l) = &listed {
                    v["paths"] = json!(l);
                }
                format!("{v}\n")
            }
            _ => {
                let mut s = format!("{count}\n");
                for p in listed.iter().flatten() {
                    s += p;
                    s.push('\n');
                }
                s
            }
        },
    ))
}

fn render_reports(reports: &[VerificationReport], f: Format) -> String {
    match f {
        Format::Json => format!(
            "{}\n",
            Value::Array(reports.iter().map(|r| r.to_json()).collect())
        ),
        Format::Csv => {
            let mut s = String::from("id,params,lhs,rhs,pass,regime\n");
            for r in reports {
                let params: Vec<String> = r
                    .instance
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let _ = writeln!(
                    s,
                    "{},\"{}\",{},{},{},\"{}\"",
                    r.id(),
                    params.join(";"),
                    r.lhs_value,
                    r.rhs_value,
                    r.pass,
                    r.regime
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s += &r.to_text();
                s.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            let _ = writeln!(s, "{} reports, {} failed", reports.len(), failed);
            s
        }
    }
}

fn need(v: Option<i64>, name: &str) -> Result<i64> {
    v.ok_or_else(|| Error::Precondition(format!("--{name} is required (or use --sweep)")))
}

fn to_usize(v: i64, name: &str) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Precondition(format!("--{name} must be nonnegative")))
}

fn parse_class(s: &str) -> Result<XSetClass> {
    match s.to_ascii_uppercase().as_str() {
        "X1" | "1" | "CLASS1" => Ok(XSetClass::Class1),
        "X2" | "2" | "CLASS2" => Ok(XSetClass::Class2),
        _ => Err(Error::UnknownId(s.to_string())),
    }
}

fn cmd_verify(a: &VerifyArgs, f: Format) -> Run {
    let reports = if a.sweep { sweep(a)? } else { single(a)? };
    let pass = reports.iter().all(|r| r.pass);
    Ok((pass, render_reports(&reports, f)))
}

fn single(a: &VerifyArgs) -> Result<Vec<VerificationReport>> {
    let id = a.id.as_str();
    Ok(match id {
        "thm1.4" | "thm1.4-eq1" | "thm1.4-eq2" => {
            let n = to_usize(need(a.n, "n")?, "n")?;
            let k = to_usize(need(a.k, "k")?, "k")?;
            let pair = verify_theorem_1_4(n, k)?;
            match id {
                "thm1.4-eq1" => vec![pair[0].clone()],
                "thm1.4-eq2" => vec![pair[1].clone()],
                _ => pair.to_vec(),
            }
        }
        "thm1.3" => {
            let r = verify_riordan_refinement(to_usize(need(a.n, "n")?, "n")?)?;
            r.reports().cloned().collect()
        }
        "lem2.3" | "thm4.2" | "cor4.4" | "ex4.1" | "L" => {
            let d = if id == "lem2.3" {
                a.d.unwrap_or(1)
            } else if id == "ex4.1" {
                a.d.unwrap_or(2)
            } else {
                need(a.d, "d")?
            };
            let all = verify_l_identity(d, need(a.k, "k")?, need(a.m, "m")?)?;
            let wanted: Vec<VerificationReport> = all
                .iter()
                .filter(|r| id == "L" || r.id().as_str() == id)
                .cloned()
                .collect();
            if wanted.is_empty() {
                return Err(Error::NoRegion(format!(
                    "{id} at d={d}, k={:?}, m={:?}",
                    a.k, a.m
                )));
            }
            wanted
        }
        "prop2.4" => vec![verify_prop_2_4(need(a.k, "k")?, need(a.m, "m")?)?],
        "eq4.5" => vec![verify_analytic_4_5(
            need(a.d, "d")?,
            need(a.k, "k")?,
            need(a.m, "m")?,
        )?],
        "thm4.7" => verify_theorem_4_7(
            to_usize(need(a.n, "n")?, "n")?,
            to_usize(need(a.k, "k")?, "k")?,
        )?,
        "hookwrap" => {
            let mu: Partition = a.mu.as_deref().unwrap_or("").parse()?;
            vec![verify_hook_wrap(&mu, to_usize(need(a.k, "k")?, "k")?)?]
        }
        "regev" => verify_regev(to_usize(need(a.m, "m")?, "m")?)?.to_vec(),
        "fourrow" => vec![verify_four_row_count(to_usize(need(a.n, "n")?, "n")?)?],
        "branch" => {
            let class = parse_class(a.class.as_deref().unwrap_or("X1"))?;
            let d = verify_branching_decomposition(
                to_usize(need(a.n, "n")?, "n")?,
                to_usize(need(a.k, "k")?, "k")?,
                class,
            )?;
            vec![d.report]
        }
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

fn cap(v: Option<i64>, default: i64) -> i64 {
    v.unwrap_or(default)
}

/// Default sweep ranges, each overridable with `--max-*`.
fn sweep(a: &VerifyArgs) -> Result<Vec<VerificationReport>> {
    let id = a.id.as_str();
    let collect = |items: Vec<Result<Vec<VerificationReport>>>| -> Result<Vec<VerificationReport>> {
        Ok(items
            .into_iter()
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect())
    };
    Ok(match id {
        "thm1.4" => {
            let pairs: Vec<(usize, usize)> = (4..=cap(a.max_n, 60) as usize)
                .flat_map(|n| (1..=n / 2).map(move |k| (n, k)))
                .collect();
            collect(
                pairs
                    .par_iter()
                    .map(|&(n, k)| verify_theorem_1_4(n, k).map(|p| p.to_vec()))
                    .collect(),
            )?
        }
        "thm1.3" => collect(
            (2..=cap(a.max_n, 40) as usize)
                .into_par_iter()
                .map(|n| verify_riordan_refinement(n).map(|r| r.reports().cloned().collect()))
                .collect(),
        )?,
        "lem2.3" => {
            let pts: Vec<(i64, i64)> = (2..=cap(a.max_k, 40))
                .flat_map(|k| (4..=cap(a.max_m, 40)).map(move |m| (k, m)))
                .collect();
            collect(
                pts.par_iter()
                    .map(|&(k, m)| l_region(1, k, m, "lem2.3"))
                    .collect(),
            )?
        }
        "thm4.2" => {
            let mut pts = Vec::new();
            for d in 0..=cap(a.max_d, 4) {
                for k in 2..=cap(a.max_k, 30) {
                    for m in (4 * (d - 1)).max(2)..=k {
                        pts.push((d, k, m));
                    }
                }
            }
            collect(
                pts.par_iter()
                    .map(|&(d, k, m)| l_region(d, k, m, "thm4.2"))
                    .collect(),
            )?
        }
        "cor4.4" => {
            let mut pts = Vec::new();
            for d in 0..=cap(a.max_d, 4) {
                for k in 2..=cap(a.max_k, 20) {
                    for m in (k + 6 * d - 3).max(2)..=cap(a.max_m, 60) {
                        pts.push((d, k, m));
                    }
                }
            }
            collect(
                pts.par_iter()
                    .map(|&(d, k, m)| l_region(d, k, m, "cor4.4"))
                    .collect(),
            )?
        }
        "ex4.1" => {
            let pts: Vec<(i64, i64)> = (6..=cap(a.max_k, 30))
                .flat_map(|k| (1..=8).map(move |delta| (k, k + delta)))
                .collect();
            collect(
                pts.par_iter()
                    .map(|&(k, m)| l_region(2, k, m, "ex4.1"))
                    .collect(),
            )?
        }
        "prop2.4" => {
            let pts: Vec<(i64, i64)> = (2..=cap(a.max_m, 40))
                .flat_map(|m| [(m - 1, m), (m + 1, m)])
                .filter(|p| p.0 >= 1)
                .collect();
            pts.par_iter()
                .map(|&(k, m)| verify_prop_2_4(k, m))
                .collect::<Result<_>>()?
        }
        "eq4.5" => {
            let mut pts = Vec::new();
            for d in 0..=cap(a.max_d, 3) {
                for k in 2..=cap(a.max_k, 12) {
                    for m in 2..=cap(a.max_m, 16) {
                        pts.push((d, k, m));
                    }
                }
            }
            pts.par_iter()
                .filter_map(|&(d, k, m)| match verify_analytic_4_5(d, k, m) {
                    Err(Error::Singular(_)) => None,
                    other => Some(other),
                })
                .collect::<Result<_>>()?
        }
        "thm4.7" => {
            let pairs: Vec<(usize, usize)> = (4..=cap(a.max_n, 40) as usize)
                .flat_map(|n| (1..=(n - 2) / 2).map(move |k| (n, k)))
                .collect();
            collect(
                pairs
                    .par_iter()
                    .map(|&(n, k)| verify_theorem_4_7(n, k))
                    .collect(),
            )?
        }
        "hookwrap" => {
            let mut pts = Vec::new();
            for size in 0..=cap(a.max_n, 8) as usize {
                for mu in partitions(size) {
                    for k in 2..=cap(a.max_k, 8) as usize {
                        pts.push((mu.clone(), k));
                    }
                }
            }
            pts.par_iter()
                .map(|(mu, k)| verify_hook_wrap(mu, *k))
                .collect::<Result<_>>()?
        }
        "regev" => collect(
            (2..=cap(a.max_m, 12) as usize)
                .into_par_iter()
                .map(|m| verify_regev(m).map(|r| r.to_vec()))
                .collect(),
        )?,
        "fourrow" => (0..=cap(a.max_n, 24) as usize)
            .into_par_iter()
            .map(verify_four_row_count)
            .collect::<Result<_>>()?,
        "branch" => {
            let mut pts = Vec::new();
            for n in 2..=cap(a.max_n, 30) as usize {
                for k in 1..=n / 2 {
                    for class in [XSetClass::Class1, XSetClass::Class2] {
                        if !x_set(n, k, class).is_empty() {
                            pts.push((n, k, class));
                        }
                    }
                }
            }
            pts.par_iter()
                .map(|&(n, k, c)| verify_branching_decomposition(n, k, c).map(|d| d.report))
                .collect::<Result<_>>()?
        }
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

fn l_region(d: i64, k: i64, m: i64, id: &str) -> Result<Vec<VerificationReport>> {
    Ok(verify_l_identity(d, k, m)?
        .into_iter()
        .filter(|r| r.id().as_str() == id)
        .collect())
}

fn cmd_table(id: &str, f: Format) -> Run {
    let t = tables::table(id)?;
    let pass = t.pass();
    Ok((
        pass,
        match f {
            Format::Text => t.to_text(),
            _ => render_reports(&t.reports().cloned().collect::<Vec<_>>(), f),
        },
    ))
}

fn cmd_certify(all: bool, id: Option<&str>, f: Format) -> Run {
    let reports = match (all, id) {
        (_, Some(id)) => vec![certify_by_id(id).ok_or_else(|| {
            Error::UnknownId(format!("{id} (known: {})", CERTIFICATE_IDS.join(", ")))
        })?],
        (true, None) => certify_all(),
        (false, None) => return Err(Error::Precondition("pass --all or --id".into())),
    };
    let pass = reports.iter().all(|r| r.pass());
    Ok((
        pass,
        match f {
            Format::Json => format!(
                "{}\n",
                Value::Array(reports.iter().map(|r| r.to_json()).collect())
            ),
            Format::Csv => {
                let mut s = String::from("id,check,difference,pass\n");
                for r in &reports {
                    for c in &r.checks {
                        let _ =
                            writeln!(s, "{},\"{}\",\"{}\",{}", r.id, c.name, c.difference, c.pass);
                    }
                }
                s
            }
            Format::Text => reports.iter().map(|r| r.to_text()).collect(),
        },
    ))
}

fn cmd_search(
    n: usize,
    pool: &str,
    max_side: usize,
    max_evals: u64,
    limit: Option<usize>,
    f: Format,
) -> Run {
    let pool = SearchPool::parse(n, pool)?;
    let outcome = find_equal_sum_pairs(
        n,
        &pool,
        SearchLimits {
            max_side,
            eval_cap: max_evals,
        },
    )?;
    let shown = limit.unwrap_or(usize::MAX).min(outcome.identities.len());
    let mut reports: Vec<VerificationReport> = outcome.identities[..shown]
        .par_iter()
        .map(|i| i.verify())
        .collect();
    if outcome.truncated {
        for r in &mut reports {
            r.notes.push(format!(
                "partial results: stopped after {} subsets",
                outcome.evaluated
            ));
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let body = match f {
        Format::Text => {
            let mut s = format!(
                "pool of {} shapes, {} subsets, {} identities{}\n",
                pool.len(),
                outcome.evaluated,
                outcome.identities.len(),
                if outcome.truncated {
                    " (truncated)"
                } else {
                    ""
                }
            );
            for (i, r) in reports.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{:>4}. {}  [{}] {}",
                    i + 1,
                    r.instance.equation(),
                    r.lhs_value,
                    outcome.identities[i].label.as_deref().unwrap_or("new")
                );
            }
            s
        }
        _ => render_reports(&reports, f),
    };
    Ok((pass, body))
}

fn cmd_scan(k: i64, m: i64, max_d: usize, f: Format) -> Run {
    let rows = scan_even_l(k, m, max_d)?;
    Ok((
        true,
        match f {
            Format::Json => format!("{}\n", serde_json::to_string(&rows).expect("serializable")),
            _ => {
                let mut s = format!("{}\n", ScanRow::csv_header());
                for r in &rows {
                    s += &r.to_csv();
                    s.push('\n');
                }
                s
            }
        },
    ))
}
