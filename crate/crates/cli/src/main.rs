//! Single CLI entry point: construction, verification, spectral queries,
//! bound-checking campaigns, and the exhaustive search oracle, all with
//! reproducible JSON outputs.
//!
//! Exit codes: 0 all checks pass, 2 usage or parameter problem,
//! 3 verification failure, 4 certificate violation.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use equilines::cert::{StatementId, Verdict};
use equilines::code::{
    self, BoundRegime, CodeFile, CodeOffender, GramFile, SphericalCode,
};
use equilines::error::Error;
use equilines::exact::{rat_from_str, rat_to_f64, rat_to_string, Rat};
use equilines::graph::Graph;
use equilines::spectrum::{self, SpectrumMode};
use equilines::{campaign, search};

const MANIFEST_FORMAT_VERSION: u32 = 1;
const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "equilines",
    version,
    about = "Equiangular line families, spherical codes, and spectral multiplicity certificates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the extremal clique-union code at alpha = 1/(2k-1) in R^r.
    Construct {
        /// Clique size k >= 2 (the angle is arccos 1/(2k-1))
        #[arg(long)]
        k: usize,
        /// Ambient dimension
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Check a code file: unit norms, pairwise +-alpha, corresponding
    /// graph, beta, and the equality-case checks when n >= r + 2.
    Verify {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Numeric adjacency spectrum of a graph file.
    Spectrum {
        #[arg(long)]
        graph: PathBuf,
        /// exact | numeric (exact full spectra are not served)
        #[arg(long, default_value = "numeric")]
        mode: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Eigenvalue multiplicity at a rational target.
    Multiplicity {
        #[arg(long)]
        graph: PathBuf,
        /// Rational target, e.g. 2 or -1/3
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// exact | numeric
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Largest Rayleigh quotient orthogonal to the all-ones vector.
    Beta {
        #[arg(long)]
        graph: PathBuf,
        /// Optional rational candidate; checked exactly as an eigenvalue
        /// achieved on the hyperplane
        #[arg(long, allow_hyphen_values = true)]
        candidate: Option<String>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Re-sign a code against its first vector and switch away high
    /// degrees; the output graph has maximum degree at most 6/alpha^4.
    Normalize {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run inequality checkers over a graph file or a generated family.
    Bounds(BoundsArgs),
    /// Exhaustive search for the maximum feasible number of lines.
    Search {
        #[arg(long)]
        r: usize,
        /// Rational angle cosine, e.g. 1/3
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        n_max: usize,
        /// Skip graphs that are not canonical in their switching class
        #[arg(long, default_value_t = false)]
        canonicalize: bool,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Closed-form maximum-lines bound evaluation.
    Formula {
        /// Clique size k (sets alpha = 1/(2k-1))
        #[arg(long)]
        k: Option<usize>,
        /// Rational alpha, e.g. 1/5 (mutually exclusive with --k)
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        r: u64,
        /// main | superpolynomial
        #[arg(long, default_value = "main")]
        regime: String,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Graph file to check (edge-list or compact format)
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family generator: all-connected | random
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated statement ids, e.g. small_eval,disjoint_supports
    #[arg(long)]
    statements: String,
    /// Family size cap (all-connected) or random-instance host cap
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Number of random instances per statement
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Ball radius for the ball-cover reduction
    #[arg(long, default_value_t = 1)]
    radius: usize,
    /// Minimum ball size B for the ball-cover reduction
    #[arg(long, default_value_t = 2.0)]
    min_ball: f64,
    /// Support split parameter for the random deletion
    #[arg(long, default_value_t = 2)]
    ell: usize,
    /// Walk exponent S for the random deletion
    #[arg(long, default_value_t = 3)]
    s_exp: usize,
    /// Walk exponent R for the walk-count identity
    #[arg(long, default_value_t = 2)]
    walk_exponent: usize,
    /// Epsilon for the combined bound's additive term
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    /// Exact rational second-eigenvalue target (otherwise numeric)
    #[arg(long, allow_hyphen_values = true)]
    lambda2: Option<String>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("EQUILINES_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let kind = match &e {
                Error::Parameter(_) | Error::Budget(_) | Error::Parse(_)
                | Error::Capability(_) | Error::Structure(_) | Error::Io(_) => "usage",
                Error::Verification(_)
                | Error::CodeIntegrity(_)
                | Error::Infeasible { .. }
                | Error::AmbiguousMultiplicity { .. } => "verification",
            };
            eprintln!(
                "{}",
                serde_json::json!({ "error": e.to_string(), "kind": kind })
            );
            if kind == "usage" {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Construct { k, r, out } => cmd_construct(k, r, &out),
        Cmd::Verify { code, out } => cmd_verify(&code, &out),
        Cmd::Spectrum { graph, mode, tol } => cmd_spectrum(&graph, &mode, tol),
        Cmd::Multiplicity {
            graph,
            lambda,
            mode,
            tol,
        } => cmd_multiplicity(&graph, &lambda, &mode, tol),
        Cmd::Beta {
            graph,
            candidate,
            tol,
        } => cmd_beta(&graph, candidate.as_deref(), tol),
        Cmd::Normalize { code, out } => cmd_normalize(&code, &out),
        Cmd::Bounds(args) => cmd_bounds(&args),
        Cmd::Search {
            r,
            alpha,
            n_max,
            canonicalize,
            out,
        } => cmd_search(r, &alpha, n_max, canonicalize, &out),
        Cmd::Formula {
            k,
            alpha,
            r,
            regime,
        } => cmd_formula(k, alpha.as_deref(), r, &regime),
    }
}

// -- shared output plumbing ---------------------------------------------------

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

fn write_manifest(
    out: &Path,
    command: &str,
    config: serde_json::Value,
    outputs: &[&Path],
) -> Result<(), Error> {
    let timestamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let manifest = serde_json::json!({
        "format_version": MANIFEST_FORMAT_VERSION,
        "command": command,
        "config": config,
        "timestamp_unix_secs": timestamp,
        "outputs": outputs.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    write_json(&out.join("run_manifest.json"), &manifest)
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    Graph::from_text(&std::fs::read_to_string(path)?)
}

fn load_code(path: &Path) -> Result<SphericalCode, Error> {
    let file: CodeFile = serde_json::from_str(&std::fs::read_to_string(path)?)
        .map_err(|e| Error::Parse(format!("bad code file: {e}")))?;
    file.into_code()
}

// -- verification report --------------------------------------------------------

#[derive(Serialize)]
struct VerifyReport {
    format_version: u32,
    n: usize,
    r: usize,
    alpha: String,
    code_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    worst_offender: Option<CodeOffender>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph_max_degree: Option<usize>,
    beta_target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta_within_upper_bound: Option<bool>,
    /// n >= r + 2: the regime in which beta must equal (1-alpha)/(2 alpha)
    equality_case: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta_equals_target: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_eigenvalue_on_hyperplane: Option<bool>,
    pass: bool,
}

fn verify_report(c: &SphericalCode) -> Result<VerifyReport, Error> {
    let alpha = c.alpha.clone();
    let target: Rat = (Rat::from_integer(1.into()) - &alpha) / (&alpha + &alpha);
    let target_f = rat_to_f64(&target);
    let offender = c.worst_offender();
    let code_valid = offender.is_none();
    let equality_case = c.n() >= c.dim + 2;

    let mut report = VerifyReport {
        format_version: REPORT_FORMAT_VERSION,
        n: c.n(),
        r: c.dim,
        alpha: rat_to_string(&alpha),
        code_valid,
        worst_offender: offender,
        graph: None,
        graph_max_degree: None,
        beta_target: rat_to_string(&target),
        beta: None,
        beta_within_upper_bound: None,
        equality_case,
        beta_equals_target: None,
        exact_eigenvalue_on_hyperplane: None,
        pass: false,
    };
    if !code_valid {
        return Ok(report);
    }

    let g = code::graph_from_code(c)?;
    report.graph = Some(g.to_text());
    report.graph_max_degree = Some(g.max_degree());

    if g.n() >= 2 {
        let b = code::beta_with_candidate(&g, 1e-9, &target)?;
        report.beta = Some(b.value);
        report.beta_within_upper_bound = Some(b.value <= target_f + 1e-6);
        if equality_case {
            report.beta_equals_target = Some((b.value - target_f).abs() <= 1e-6);
            report.exact_eigenvalue_on_hyperplane = b.is_eigenvalue_exact;
        }
    }

    report.pass = code_valid
        && report.beta_within_upper_bound.unwrap_or(true)
        && (!equality_case
            || (report.beta_equals_target == Some(true)
                && report.exact_eigenvalue_on_hyperplane == Some(true)));
    Ok(report)
}

// -- commands ---------------------------------------------------------------------

fn cmd_construct(k: usize, r: usize, out: &Path) -> Result<ExitCode, Error> {
    let code_obj = code::tight_construction(k, r)?;
    let (graph, t) = code::tight_graph(k, r)?;
    let gram = code::gram_from_graph(&graph, &code_obj.alpha)?;
    let expected_n = r - 1 + t;

    let verify = verify_report(&code_obj)?;
    let pass = verify.pass && code_obj.n() == expected_n;

    let provenance = format!("construct --k {k} --r {r}");
    let code_path = out.join("code.json");
    let graph_path = out.join("graph.txt");
    let gram_path = out.join("gram.json");
    let verify_path = out.join("verification.json");
    write_json(&code_path, &CodeFile::from_code(&code_obj, &provenance))?;
    std::fs::write(&graph_path, graph.to_text())?;
    write_json(&gram_path, &GramFile::from_gram(&gram))?;
    let record = serde_json::json!({
        "format_version": REPORT_FORMAT_VERSION,
        "k": k,
        "r": r,
        "t_cliques": t,
        "expected_n": expected_n,
        "actual_n": code_obj.n(),
        "verification": serde_json::to_value(&verify).expect("serializable"),
        "pass": pass,
    });
    write_json(&verify_path, &record)?;

    let config = serde_json::json!({ "k": k, "r": r, "out": out.display().to_string() });
    write_manifest(out, "construct", config.clone(), &[&code_path, &graph_path, &gram_path, &verify_path])?;
    println!(
        "{}",
        serde_json::json!({
            "format_version": REPORT_FORMAT_VERSION,
            "config": config,
            "n": code_obj.n(),
            "pass": pass,
            "code": code_path.display().to_string(),
        })
    );
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn cmd_verify(code_path: &Path, out: &Path) -> Result<ExitCode, Error> {
    let c = load_code(code_path)?;
    let report = verify_report(&c)?;
    let report_path = out.join("verify_report.json");
    write_json(&report_path, &report)?;
    let config = serde_json::json!({
        "code": code_path.display().to_string(),
        "out": out.display().to_string(),
    });
    write_manifest(out, "verify", config, &[&report_path])?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn cmd_spectrum(graph: &Path, mode: &str, tol: Option<f64>) -> Result<ExitCode, Error> {
    let g = load_graph(graph)?;
    let mode = match mode {
        "numeric" => SpectrumMode::Numeric,
        "exact" => SpectrumMode::Exact,
        other => return Err(Error::Parameter(format!("unknown mode {other:?}"))),
    };
    let spec = spectrum::spectrum(&g, mode, tol)?;
    let clusters: Vec<serde_json::Value> = spec
        .clusters()
        .into_iter()
        .map(|(v, c)| serde_json::json!({ "value": v, "count": c }))
        .collect();
    println!(
        "{}",
        serde_json::json!({
            "format_version": REPORT_FORMAT_VERSION,
            "config": { "graph": graph.display().to_string(), "mode": "numeric", "tol": tol },
            "n": g.n(),
            "values": spec.values,
            "cluster_tol": spec.cluster_tol,
            "clusters": clusters,
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_multiplicity(graph: &Path, lambda: &str, mode: &str, tol: f64) -> Result<ExitCode, Error> {
    let g = load_graph(graph)?;
    let lam = rat_from_str(lambda)?;
    let m = match mode {
        "exact" => spectrum::multiplicity_exact(&g, &lam),
        "numeric" => spectrum::multiplicity_numeric(&g, rat_to_f64(&lam), tol)?,
        other => return Err(Error::Parameter(format!("unknown mode {other:?}"))),
    };
    println!(
        "{}",
        serde_json::json!({
            "format_version": REPORT_FORMAT_VERSION,
            "config": { "graph": graph.display().to_string(), "lambda": rat_to_string(&lam), "mode": mode, "tol": tol },
            "multiplicity": m,
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_beta(graph: &Path, candidate: Option<&str>, tol: f64) -> Result<ExitCode, Error> {
    let g = load_graph(graph)?;
    let report = match candidate {
        Some(c) => code::beta_with_candidate(&g, tol, &rat_from_str(c)?)?,
        None => code::beta(&g, tol)?,
    };
    println!(
        "{}",
        serde_json::json!({
            "format_version": REPORT_FORMAT_VERSION,
            "config": { "graph": graph.display().to_string(), "candidate": candidate, "tol": tol },
            "beta": report.value,
            "is_eigenvalue_exact": report.is_eigenvalue_exact,
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_normalize(code_path: &Path, out: &Path) -> Result<ExitCode, Error> {
    let c = load_code(code_path)?;
    let outcome = code::normalize_max_degree(&c)?;
    let provenance = format!("normalize {}", code_path.display());
    let code_out = out.join("normalized_code.json");
    let graph_out = out.join("normalized_graph.txt");
    let report_out = out.join("normalize_report.json");
    write_json(&code_out, &CodeFile::from_code(&outcome.code, &provenance))?;
    std::fs::write(&graph_out, outcome.graph.to_text())?;
    let report = serde_json::json!({
        "format_version": REPORT_FORMAT_VERSION,
        "switched": outcome.switched,
        "anchor": outcome.anchor,
        "anchor_degree": outcome.anchor_degree,
        "non_anchor_max_degree": outcome.non_anchor_max_degree,
        "max_degree": outcome.graph.max_degree(),
        "degree_cap": rat_to_string(&outcome.degree_cap),
    });
    write_json(&report_out, &report)?;
    let config = serde_json::json!({
        "code": code_path.display().to_string(),
        "out": out.display().to_string(),
    });
    write_manifest(out, "normalize", config, &[&code_out, &graph_out, &report_out])?;
    println!("{report}");
    Ok(ExitCode::SUCCESS)
}

fn parse_statements(s: &str) -> Result<Vec<StatementId>, Error> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        out.push(
            StatementId::parse(part)
                .ok_or_else(|| Error::Parameter(format!("unknown statement {part:?}")))?,
        );
    }
    if out.is_empty() {
        return Err(Error::Parameter("statements list must not be empty".into()));
    }
    Ok(out)
}

fn cmd_bounds(args: &BoundsArgs) -> Result<ExitCode, Error> {
    let statements = parse_statements(&args.statements)?;
    let lambda2 = args.lambda2.as_deref().map(rat_from_str).transpose()?;

    let mut total_violated = 0usize;
    let mut summaries: Vec<serde_json::Value> = Vec::new();

    match (&args.graph, args.family.as_deref()) {
        (Some(path), None) => {
            let g = load_graph(path)?;
            let params = campaign::GraphRunParams {
                radius: args.radius,
                min_ball: args.min_ball,
                ell: args.ell,
                s_exp: args.s_exp,
                walk_exponent: args.walk_exponent,
                seed: args.seed,
                eps: args.eps,
                lambda2,
            };
            let certs = campaign::certificates_for_graph(&g, &statements, &params)?;
            let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
            for cert in &certs {
                println!("{}", serde_json::to_string(cert).expect("serializable"));
                let key = match cert.verdict {
                    Verdict::Holds => "holds",
                    Verdict::Vacuous => "vacuous",
                    Verdict::Violated => "violated",
                };
                *counts.entry(key).or_default() += 1;
            }
            total_violated = counts.get("violated").copied().unwrap_or(0);
            summaries.push(serde_json::json!({
                "graph": path.display().to_string(),
                "certificates": certs.len(),
                "counts": counts,
            }));
        }
        (None, Some("all-connected")) => {
            let results = campaign::exhaustive_connected_campaign(args.n_max, &statements)?;
            for s in &results {
                total_violated += s.violated;
                summaries.push(serde_json::to_value(s).expect("serializable"));
            }
        }
        (None, Some("random")) => {
            for (i, &st) in statements.iter().enumerate() {
                let s = campaign::random_campaign(st, args.count, args.seed.wrapping_add(i as u64))?;
                total_violated += s.violated;
                summaries.push(serde_json::to_value(&s).expect("serializable"));
            }
        }
        (None, Some(other)) => {
            return Err(Error::Parameter(format!(
                "unknown family {other:?}; use all-connected or random"
            )));
        }
        (Some(_), Some(_)) => {
            return Err(Error::Parameter("pass either --graph or --family, not both".into()));
        }
        (None, None) => {
            return Err(Error::Parameter("pass --graph FILE or --family NAME".into()));
        }
    }

    let summary = serde_json::json!({
        "format_version": REPORT_FORMAT_VERSION,
        "config": {
            "statements": statements.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            "family": args.family,
            "graph": args.graph.as_ref().map(|p| p.display().to_string()),
            "n_max": args.n_max,
            "count": args.count,
            "seed": args.seed,
        },
        "summaries": summaries,
        "violated": total_violated,
    });
    let summary_path = args.out.join("bounds_summary.json");
    write_json(&summary_path, &summary)?;
    write_manifest(
        &args.out,
        "bounds",
        summary["config"].clone(),
        &[&summary_path],
    )?;
    println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
    Ok(if total_violated > 0 {
        ExitCode::from(4)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_search(
    r: usize,
    alpha: &str,
    n_max: usize,
    canonicalize: bool,
    out: &Path,
) -> Result<ExitCode, Error> {
    let alpha = rat_from_str(alpha)?;
    let task = search::SearchTask {
        r,
        alpha: alpha.clone(),
        n_max,
        canonicalize,
    };
    let result = search::max_lines(&task)?;

    let mut outputs: Vec<PathBuf> = Vec::new();
    let result_path = out.join("search_result.json");
    if let Some(g) = &result.witness_graph {
        let p = out.join("witness_graph.txt");
        // edge-list plus the compact degree-sorted line the parsers accept
        std::fs::write(&p, format!("{}\n# compact: {}\n", g.to_text().trim_end(), g.to_compact()))?;
        outputs.push(p);
    }
    if let Some(c) = &result.witness_code {
        let p = out.join("witness_code.json");
        let provenance = format!(
            "search --r {r} --alpha {} --n-max {n_max}",
            rat_to_string(&alpha)
        );
        write_json(&p, &CodeFile::from_code(c, &provenance))?;
        outputs.push(p);
    }
    let record = serde_json::json!({
        "format_version": REPORT_FORMAT_VERSION,
        "config": {
            "r": r,
            "alpha": rat_to_string(&alpha),
            "n_max": n_max,
            "canonicalize": canonicalize,
        },
        "best_n": result.best_n,
        "exhausted": result.exhausted,
        "checked": result.checked,
        "witness_graph": result.witness_graph.as_ref().map(|g| g.to_compact()),
        "outputs": outputs.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    write_json(&result_path, &record)?;
    let mut manifest_outputs: Vec<&Path> = vec![&result_path];
    manifest_outputs.extend(outputs.iter().map(|p| p.as_path()));
    write_manifest(out, "search", record["config"].clone(), &manifest_outputs)?;
    println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_formula(
    k: Option<usize>,
    alpha: Option<&str>,
    r: u64,
    regime: &str,
) -> Result<ExitCode, Error> {
    let alpha = match (k, alpha) {
        (Some(k), None) => {
            if k < 2 {
                return Err(Error::Parameter("k must be at least 2".into()));
            }
            Rat::new(1.into(), (2 * k as i64 - 1).into())
        }
        (None, Some(a)) => rat_from_str(a)?,
        _ => {
            return Err(Error::Parameter("pass exactly one of --k or --alpha".into()));
        }
    };
    let regime = BoundRegime::parse(regime)
        .ok_or_else(|| Error::Parameter(format!("unknown regime {regime:?}")))?;
    let report = code::max_lines_bound(r, &alpha, regime)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}
