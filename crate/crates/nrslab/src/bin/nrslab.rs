use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use rand::Rng;
use serde_json::json;

use nrslab::attractor::{build_alpha, certify_fixed_point, pt_closed, pt_composition, AlgebraCtx};
use nrslab::comb::{compositions_nn, subsets_k};
use nrslab::dsg::{check_simple_graph_gen, decode, encode, enumerate_dsg, is_in_b};
use nrslab::error::{Error, Result};
use nrslab::jacobian::{
    check_det_m_eq_det_uv, check_factorization, check_jacobian_route, check_reduction_to_uv,
    det2, factored_det, jacobian_numeric_m2, RootSplit,
};
use nrslab::laurent::{Frac, SparseLaurent};
use nrslab::lgv::{
    build_g, check_g_eq_p, enumerate_vd, g_leading_coeff, CoeffCtx, VdVariant,
};
use nrslab::nrs2::{classify_limit, iterate, IterStatus, Nrs2System, DEFAULT_MAXITER, DEFAULT_TOL};
use nrslab::polyspec::{pairwise_sum_poly, PolySpec};
use nrslab::report::{parse_kv_config, Report, RunConfig, DEFAULT_SEED};
use nrslab::scalar::{format_rat, rat_to_f64};
use nrslab::suites::{case_rng, run_suite};

#[derive(Parser)]
#[command(name = "nrslab", about = "Exact verification engine for the NRS root iteration")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GlobalOpts {
    /// Seed for all randomized cases (falls back to NRSLAB_SEED, then 42)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the report to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Key = value configuration file overriding defaults
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and report per-case pass/fail
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Lift the desk-scale bounds d <= 6, m <= 4
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Attractor points, PT values both ways, and fixed-point residuals
    Attractors {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        symbolic: bool,
    },
    /// Jacobian determinant factorization checks
    Jacobian {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        numeric: bool,
    },
    /// The elimination polynomial g and its pairwise-sum factorization
    Gpoly {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        symbolic: bool,
        /// Export vertex-disjoint path systems as JSON files
        #[arg(long)]
        emit_paths: Option<PathBuf>,
    },
    /// Newton iteration on the NRS(2) system with limit classification
    Nrs2 {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, default_value_t = 100)]
        starts: usize,
        /// Sampling box as "lo,hi"
        #[arg(long = "box", default_value = "-10,10")]
        sample_box: String,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Basin grid as "WxH"
        #[arg(long)]
        grid: Option<String>,
    },
    /// Directed simple graph identity and encoding bijection
    Graphs {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        check_identity: bool,
        #[arg(long)]
        check_bijection: bool,
    },
    /// Combinatorial identity suites
    Identities {
        #[arg(long, default_value = "identities")]
        suite: String,
    },
}

fn resolve_config(g: &GlobalOpts) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Ok(env_seed) = std::env::var("NRSLAB_SEED") {
        cfg.seed = env_seed
            .parse()
            .map_err(|_| Error::ConfigInvalid(format!("NRSLAB_SEED: {env_seed}")))?;
    }
    if let Some(path) = &g.config {
        let text = std::fs::read_to_string(path)?;
        let kv = parse_kv_config(&text)?;
        for (k, v) in &kv {
            match k.as_str() {
                "seed" => {
                    cfg.seed = v
                        .parse()
                        .map_err(|_| Error::ConfigInvalid(format!("seed: {v}")))?
                }
                "threads" => {
                    cfg.threads = v
                        .parse()
                        .map_err(|_| Error::ConfigInvalid(format!("threads: {v}")))?
                }
                "d_max" => {
                    cfg.d_max = v
                        .parse()
                        .map_err(|_| Error::ConfigInvalid(format!("d_max: {v}")))?
                }
                "m_max" => {
                    cfg.m_max = v
                        .parse()
                        .map_err(|_| Error::ConfigInvalid(format!("m_max: {v}")))?
                }
                other => {
                    return Err(Error::ConfigInvalid(format!("unknown key: {other}")));
                }
            }
        }
    }
    if let Some(seed) = g.seed {
        cfg.seed = seed;
    }
    if cfg.seed == 0 && g.seed.is_none() {
        cfg.seed = DEFAULT_SEED;
    }
    if let Some(t) = g.threads {
        cfg.threads = t;
    }
    Ok(cfg)
}

fn emit(g: &GlobalOpts, text: &str) -> Result<()> {
    match &g.out {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_report(g: &GlobalOpts, report: &Report) -> Result<()> {
    let text = match g.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    emit(g, &text)
}

fn load_poly(path: &PathBuf) -> Result<PolySpec> {
    PolySpec::from_json(&std::fs::read_to_string(path)?)
}

fn cx_pair(z: Complex64) -> serde_json::Value {
    json!([z.re, z.im])
}

fn cmd_attractors(g: &GlobalOpts, poly: &PathBuf, m: usize, symbolic: bool) -> Result<bool> {
    let spec = load_poly(poly)?;
    let d = spec.degree();
    let mut cases = Vec::new();
    let mut all_pass = true;
    if symbolic {
        let ctx = AlgebraCtx::<Frac<SparseLaurent>>::symbolic(d);
        for sel in subsets_k(d, m) {
            let alpha = build_alpha(&ctx, m, &sel)?;
            let mut ok = certify_fixed_point(&ctx, &alpha)?;
            for s in 0..=(d - m + 1) as i64 {
                ok &= pt_closed(&ctx, &alpha, s)? == pt_composition(&ctx, &alpha, s)?;
            }
            all_pass &= ok;
            cases.push(json!({
                "selection": sel,
                "mode": "symbolic",
                "residual": if ok { "0" } else { "nonzero" },
                "pass": ok,
            }));
        }
    } else {
        let ctx = AlgebraCtx::from_spec(&spec);
        for sel in subsets_k(d, m) {
            let alpha = build_alpha(&ctx, m, &sel)?;
            let coords: Vec<String> = alpha.coords.iter().map(format_rat).collect();
            let mut pts = Vec::new();
            let mut ok = certify_fixed_point(&ctx, &alpha)?;
            for s in 0..=(d - m + 1) as i64 {
                let closed = pt_closed(&ctx, &alpha, s)?;
                let comp = pt_composition(&ctx, &alpha, s)?;
                ok &= closed == comp;
                pts.push(json!({
                    "s": s,
                    "closed": format_rat(&closed),
                    "composition": format_rat(&comp),
                }));
            }
            all_pass &= ok;
            cases.push(json!({
                "selection": sel,
                "coords": coords,
                "pt": pts,
                "residual": if ok { "0" } else { "nonzero" },
                "pass": ok,
            }));
        }
    }
    let doc = json!({"poly": spec.to_json(), "m": m, "cases": cases, "pass": all_pass});
    emit(g, &serde_json::to_string_pretty(&doc).expect("json"))?;
    Ok(all_pass)
}

fn cmd_jacobian(
    g: &GlobalOpts,
    poly: &PathBuf,
    m: usize,
    symbolic: bool,
    numeric: bool,
) -> Result<bool> {
    let spec = load_poly(poly)?;
    let d = spec.degree();
    let ctx = AlgebraCtx::from_spec(&spec);
    let mut cases = Vec::new();
    let mut all_pass = true;
    if symbolic {
        let split = RootSplit::symbolic(d, m);
        let ok = check_factorization(&split)
            && check_det_m_eq_det_uv(&split)
            && check_reduction_to_uv(&split);
        all_pass &= ok;
        cases.push(json!({"mode": "symbolic", "d": d, "m": m, "pass": ok}));
    }
    for sel in subsets_k(d, m) {
        let split = RootSplit::from_spec(&spec, &sel)?;
        let fact = check_factorization(&split) && check_det_m_eq_det_uv(&split);
        let route = check_jacobian_route(&ctx, &sel)?;
        let fd = factored_det(&spec, &sel)?;
        let mut case = json!({
            "selection": sel,
            "factored_det": format_rat(&fd),
            "factorization_pass": fact,
            "jacobian_route_pass": route,
        });
        let mut ok = fact && route;
        if numeric && m == 2 {
            let alpha = build_alpha(&ctx, m, &sel)?;
            let num = det2(&jacobian_numeric_m2(&spec, &alpha)?);
            let exact = rat_to_f64(&fd);
            let rel = (num - exact).abs() / exact.abs().max(1e-30);
            case["numeric_det"] = json!(num);
            case["numeric_rel_err"] = json!(rel);
            ok &= rel < 1e-6;
        }
        case["pass"] = json!(ok);
        all_pass &= ok;
        cases.push(case);
    }
    let doc = json!({"poly": spec.to_json(), "m": m, "cases": cases, "pass": all_pass});
    emit(g, &serde_json::to_string_pretty(&doc).expect("json"))?;
    Ok(all_pass)
}

fn cmd_gpoly(
    g: &GlobalOpts,
    poly: &PathBuf,
    symbolic: bool,
    emit_paths: Option<&PathBuf>,
) -> Result<bool> {
    let spec = load_poly(poly)?;
    let d = spec.degree();
    let actx = AlgebraCtx::from_spec(&spec);
    let cctx = CoeffCtx::from_algebra(&actx);
    let gp = build_g(&cctx)?;
    let lead = g_leading_coeff(&cctx);
    let top = d * (d - 1) / 2;
    let mut ok = gp.degree() == Some(top)
        && gp.coeff(top) == lead
        && gp == pairwise_sum_poly(&spec.roots).scale(&lead);
    if symbolic {
        let sym = AlgebraCtx::<Frac<SparseLaurent>>::symbolic(d);
        ok &= check_g_eq_p(&sym)?;
    }
    if let Some(dir) = emit_paths {
        std::fs::create_dir_all(dir)?;
        for k in 0..=top as u32 {
            for c in compositions_nn(k, (d - 1) as u32) {
                if c.parts.iter().any(|&p| p as usize > d) {
                    continue;
                }
                let parts: Vec<i64> = c.parts.iter().map(|&p| p as i64).collect();
                let systems = enumerate_vd(d, &parts, VdVariant::Full);
                if systems.is_empty() {
                    continue;
                }
                let tag: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                let path = dir.join(format!("vd-k{}-c{}.json", k, tag.join("_")));
                std::fs::write(path, serde_json::to_string_pretty(&systems).expect("json"))?;
            }
        }
    }
    let coeffs: Vec<String> = (0..=top).map(|k| format_rat(&gp.coeff(k))).collect();
    let doc = json!({
        "poly": spec.to_json(),
        "degree": top,
        "leading_coeff": format_rat(&lead),
        "coeffs": coeffs,
        "pass": ok,
    });
    emit(g, &serde_json::to_string_pretty(&doc).expect("json"))?;
    Ok(ok)
}

fn fmt_cx(z: Complex64) -> String {
    format!("{}{}{}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
}

fn cmd_nrs2(
    g: &GlobalOpts,
    cfg: &RunConfig,
    poly: &PathBuf,
    starts: usize,
    sample_box: &str,
    csv: Option<&PathBuf>,
    grid: Option<&str>,
) -> Result<bool> {
    let spec = load_poly(poly)?;
    let sys = Nrs2System::new(spec.clone())?;
    let (lo, hi) = sample_box
        .split_once(',')
        .and_then(|(a, b)| Some((a.trim().parse::<f64>().ok()?, b.trim().parse::<f64>().ok()?)))
        .ok_or_else(|| Error::ConfigInvalid(format!("box: {sample_box}")))?;
    if lo >= hi {
        return Err(Error::ConfigInvalid(format!("empty box: {sample_box}")));
    }
    let mut rows = String::from(
        "start_re0,start_im0,start_re1,start_im1,status,steps,limit0,limit1,matched_i,matched_j\n",
    );
    let mut converged = 0usize;
    let mut matched = 0usize;
    for i in 0..starts {
        let mut rng = case_rng(cfg.seed, 6000 + i as u64);
        let start = (
            Complex64::new(rng.gen_range(lo..hi), 0.0),
            Complex64::new(rng.gen_range(lo..hi), 0.0),
        );
        let tr = iterate(&sys, start, DEFAULT_TOL, DEFAULT_MAXITER);
        let (l0, l1, mi, mj) = match (tr.status, tr.limit) {
            (IterStatus::Converged, Some(lim)) => {
                converged += 1;
                let m = classify_limit(&spec, lim.0, 1e-8);
                let (mi, mj) = if m.len() == 1 {
                    matched += 1;
                    (m[0].0.to_string(), m[0].1.to_string())
                } else {
                    (String::new(), String::new())
                };
                (fmt_cx(lim.0), fmt_cx(lim.1), mi, mj)
            }
            _ => (String::new(), String::new(), String::new(), String::new()),
        };
        rows.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            start.0.re,
            start.0.im,
            start.1.re,
            start.1.im,
            tr.status.as_str(),
            tr.steps,
            l0,
            l1,
            mi,
            mj
        ));
    }
    if let Some(path) = csv {
        std::fs::write(path, &rows)?;
    }
    let mut doc = json!({
        "poly": spec.to_json(),
        "seed": cfg.seed,
        "starts": starts,
        "box": [lo, hi],
        "converged": converged,
        "matched": matched,
    });
    if let Some(gspec) = grid {
        let (w, h) = gspec
            .split_once(['x', 'X'])
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .ok_or_else(|| Error::ConfigInvalid(format!("grid: {gspec}")))?;
        let mut lines = String::new();
        for row in 0..h {
            let y = lo + (hi - lo) * (row as f64 + 0.5) / h as f64;
            let mut cells = Vec::with_capacity(w);
            for col in 0..w {
                let x = lo + (hi - lo) * (col as f64 + 0.5) / w as f64;
                let tr = iterate(
                    &sys,
                    (Complex64::new(x, 0.0), Complex64::new(y, 0.0)),
                    DEFAULT_TOL,
                    DEFAULT_MAXITER,
                );
                let label = match (tr.status, tr.limit) {
                    (IterStatus::Converged, Some(lim)) => {
                        let m = classify_limit(&spec, lim.0, 1e-8);
                        if m.len() == 1 {
                            let d = spec.degree();
                            (m[0].0 * d + m[0].1) as i64
                        } else {
                            -1
                        }
                    }
                    _ => -1,
                };
                cells.push(label.to_string());
            }
            lines.push_str(&cells.join(","));
            lines.push('\n');
        }
        let gp = g
            .out
            .clone()
            .map(|p| p.with_extension("grid.csv"))
            .unwrap_or_else(|| PathBuf::from("basin-grid.csv"));
        std::fs::write(&gp, lines)?;
        doc["grid_csv"] = json!(gp.display().to_string());
    }
    if csv.is_none() && g.format == Format::Csv {
        emit(g, &rows)?;
    } else {
        doc["start_of_sample"] = cx_pair(Complex64::new(lo, 0.0));
        emit(g, &serde_json::to_string_pretty(&doc).expect("json"))?;
    }
    Ok(true)
}

fn cmd_graphs(g: &GlobalOpts, cfg: &RunConfig, d: usize, identity: bool, bijection: bool) -> Result<bool> {
    let run_both = !identity && !bijection;
    let mut doc = json!({"d": d, "graphs": enumerate_dsg(d).len()});
    let mut all_pass = true;
    if identity || run_both {
        let ok = if d <= 4 {
            let z: Vec<SparseLaurent> = (0..d as u32).map(SparseLaurent::var).collect();
            (0..=d * (d - 1) / 2).all(|l| check_simple_graph_gen(d, l, &z))
        } else {
            let mut rng = case_rng(cfg.seed, 4000);
            let z = nrslab::suites::random_roots(&mut rng, d);
            (0..=d * (d - 1) / 2).all(|l| check_simple_graph_gen(d, l, &z))
        };
        doc["identity_pass"] = json!(ok);
        all_pass &= ok;
    }
    if bijection || run_both {
        let mut ok = true;
        let mut count = 0usize;
        for m in enumerate_dsg(d) {
            let sigma = encode(&m);
            ok &= is_in_b(&sigma) && m.rho2() == sigma.rho1() && decode(&sigma)? == m;
            count += 1;
        }
        doc["bijection_pass"] = json!(ok);
        doc["bijection_cases"] = json!(count);
        all_pass &= ok;
    }
    doc["pass"] = json!(all_pass);
    emit(g, &serde_json::to_string_pretty(&doc).expect("json"))?;
    Ok(all_pass)
}

fn real_main() -> Result<bool> {
    let cli = Cli::parse();
    let cfg = resolve_config(&cli.global)?;
    match &cli.cmd {
        Cmd::Verify {
            suite,
            d,
            m,
            unsafe_large,
        } => {
            let mut cfg = cfg.clone();
            cfg.d = *d;
            cfg.m = *m;
            cfg.unsafe_large = *unsafe_large;
            let report = run_suite(suite, &cfg)?;
            emit_report(&cli.global, &report)?;
            Ok(report.all_pass())
        }
        Cmd::Attractors { poly, m, symbolic } => cmd_attractors(&cli.global, poly, *m, *symbolic),
        Cmd::Jacobian {
            poly,
            m,
            symbolic,
            numeric,
        } => cmd_jacobian(&cli.global, poly, *m, *symbolic, *numeric),
        Cmd::Gpoly {
            poly,
            symbolic,
            emit_paths,
        } => cmd_gpoly(&cli.global, poly, *symbolic, emit_paths.as_ref()),
        Cmd::Nrs2 {
            poly,
            starts,
            sample_box,
            csv,
            grid,
        } => cmd_nrs2(
            &cli.global,
            &cfg,
            poly,
            *starts,
            sample_box,
            csv.as_ref(),
            grid.as_deref(),
        ),
        Cmd::Graphs {
            d,
            check_identity,
            check_bijection,
        } => cmd_graphs(&cli.global, &cfg, *d, *check_identity, *check_bijection),
        Cmd::Identities { suite } => {
            let report = run_suite(suite, &cfg)?;
            emit_report(&cli.global, &report)?;
            Ok(report.all_pass())
        }
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::UnknownSuite(_) | Error::ConfigInvalid(_) | Error::Parse(_) => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}
