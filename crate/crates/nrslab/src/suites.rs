//! Verification suites: each runs a module's acceptance checks and collects
//! per-case results into a `Report`.

use std::time::Instant;

use num::complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::attractor::{build_alpha, certify_fixed_point, pt_closed, pt_composition, AlgebraCtx};
use crate::comb::subsets_k;
use crate::dsg::{check_simple_graph_gen, decode, encode, enumerate_dsg, is_in_b};
use crate::error::{Error, Result};
use crate::jacobian::{
    build_u_matrix, build_v_matrix, check_det_m_eq_det_uv, check_factorization,
    check_jacobian_route, check_lin_combo, check_reduction_to_uv, det2, factored_det,
    jacobian_numeric_m2, RootSplit,
};
use crate::laurent::{Frac, SparseLaurent};
use crate::lgv::{
    build_g, check_all_paths_lemma, check_g_eq_p, check_vd_paths_lemma, check_w_sum,
    epsilon, g_leading_coeff, m_prime_seq, n_seq, BlockSpec, CoeffCtx,
};
use crate::newton_series::{check_bin_sum, check_rec, check_s_exp, check_s_exp_2, check_t_su};
use crate::nrs2::{classify_limit, iterate, IterStatus, Nrs2System, DEFAULT_MAXITER, DEFAULT_TOL};
use crate::polyspec::{pairwise_sum_poly, PolySpec};
use crate::report::{CaseResult, Report, RunConfig};
use crate::scalar::{rat, rat_to_f64, ratio, Rat};
use crate::symfunc::{check_e_z_prod, check_ec_hc_identities, check_eh_identity};

pub const SUITES: &[&str] = &[
    "identities",
    "attractors",
    "jacobian",
    "gpoly",
    "graphs",
    "newton-series",
    "nrs2",
    "all",
];

/// Deterministic per-case generator, independent of execution order.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ case.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Distinct nonzero rationals with pairwise-distinct sums.
pub fn random_roots(rng: &mut ChaCha8Rng, d: usize) -> Vec<Rat> {
    loop {
        let cand: Vec<Rat> = (0..d)
            .map(|_| {
                let mut n = 0i64;
                while n == 0 {
                    n = rng.gen_range(-12i64..=12);
                }
                ratio(n, rng.gen_range(1i64..=3))
            })
            .collect();
        let mut sums = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                sums.push(cand[i].clone() + cand[j].clone());
            }
        }
        sums.sort();
        sums.dedup();
        let mut vals = cand.clone();
        vals.sort();
        vals.dedup();
        if vals.len() == d && sums.len() == d * (d - 1) / 2 {
            return cand;
        }
    }
}

fn record(report: &mut Report, id: String, inputs: String, pass: bool, started: Instant) {
    report.push(CaseResult {
        id,
        inputs,
        pass,
        residual: if pass { "0".into() } else { "nonzero".into() },
        wall_ms: started.elapsed().as_secs_f64() * 1e3,
    });
}

fn run_check(report: &mut Report, id: &str, inputs: &str, f: impl FnOnce() -> Result<bool>) {
    let t = Instant::now();
    let pass = f().unwrap_or(false);
    record(report, id.to_string(), inputs.to_string(), pass, t);
}

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    match name {
        "identities" => Ok(suite_identities(cfg)),
        "attractors" => Ok(suite_attractors(cfg)),
        "jacobian" => Ok(suite_jacobian(cfg)),
        "gpoly" => Ok(suite_gpoly(cfg)),
        "graphs" => Ok(suite_graphs(cfg)),
        "newton-series" => Ok(suite_newton_series(cfg)),
        "nrs2" => Ok(suite_nrs2(cfg)),
        "all" => {
            let mut all = Report::new("all", cfg.seed);
            for s in SUITES.iter().filter(|&&s| s != "all") {
                all.absorb(run_suite(s, cfg)?);
            }
            Ok(all)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn sym_vars(n: usize) -> Vec<SparseLaurent> {
    (0..n as u32).map(SparseLaurent::var).collect()
}

fn suite_identities(cfg: &RunConfig) -> Report {
    let mut r = Report::new("identities", cfg.seed);
    for d in 1..=cfg.d_max.min(6) {
        if d <= 4 {
            let vals = sym_vars(d);
            run_check(&mut r, &format!("eh-d{d}-sym"), &format!("{d} symbolic vars, n <= 8"), || {
                Ok((0..=8).all(|n| check_eh_identity(n, &vals)))
            });
            run_check(&mut r, &format!("echc-d{d}-sym"), &format!("{d} symbolic vars, n <= 8"), || {
                Ok((0..=8).all(|n| check_ec_hc_identities(n, &vals)))
            });
        } else {
            for point in 0..3u64 {
                let mut rng = case_rng(cfg.seed, 900 + d as u64 * 10 + point);
                let vals = random_roots(&mut rng, d);
                run_check(
                    &mut r,
                    &format!("eh-echc-d{d}-p{point}"),
                    &format!("{d} rational vars point {point}, n <= 8"),
                    || {
                        Ok((0..=8).all(|n| {
                            check_eh_identity(n, &vals) && check_ec_hc_identities(n, &vals)
                        }))
                    },
                );
            }
        }
    }
    for d in 2..=4usize.min(cfg.d_max) {
        let roots: Vec<Frac<SparseLaurent>> = (0..d as u32)
            .map(|v| Frac::from_ring(SparseLaurent::var(v)))
            .collect();
        let invs: Vec<Frac<SparseLaurent>> = (0..d as u32)
            .map(|v| Frac::new(SparseLaurent::constant(rat(1)), SparseLaurent::var(v)))
            .collect();
        for m in 1..=d {
            for n in 0..=d {
                run_check(
                    &mut r,
                    &format!("ezprod-d{d}-m{m}-n{n}-sym"),
                    &format!("d={d} m={m} n={n} symbolic"),
                    || check_e_z_prod(n, m, &roots, &invs),
                );
            }
        }
    }
    for d in 5..=cfg.d_max.min(6) {
        for point in 0..3u64 {
            let mut rng = case_rng(cfg.seed, 1000 + d as u64 * 10 + point);
            let roots = random_roots(&mut rng, d);
            let invs: Vec<Rat> = roots.iter().map(|z| Rat::one() / z.clone()).collect();
            for m in 1..=d {
                for n in 0..=d {
                    run_check(
                        &mut r,
                        &format!("ezprod-d{d}-m{m}-n{n}-p{point}"),
                        &format!("d={d} m={m} n={n} rational point {point}"),
                        || check_e_z_prod(n, m, &roots, &invs),
                    );
                }
            }
        }
    }
    r
}

fn suite_attractors(cfg: &RunConfig) -> Report {
    let mut r = Report::new("attractors", cfg.seed);
    let ds: Vec<usize> = match cfg.d {
        Some(d) => vec![d],
        None => (2..=cfg.d_max).collect(),
    };
    for d in ds {
        let ms: Vec<usize> = match cfg.m {
            Some(m) => vec![m],
            None => (1..=cfg.m_max.min(d - 1)).collect(),
        };
        for m in ms {
            for set in 0..5u64 {
                let mut rng = case_rng(cfg.seed, (d as u64) << 16 | (m as u64) << 8 | set);
                let roots = random_roots(&mut rng, d);
                let spec = PolySpec::new(ratio(rng.gen_range(1i64..=5), 1), roots).unwrap();
                let ctx = AlgebraCtx::from_spec(&spec);
                run_check(
                    &mut r,
                    &format!("fixed-point-d{d}-m{m}-set{set}"),
                    &format!("d={d} m={m} roots set {set}"),
                    || {
                        for sel in subsets_k(d, m) {
                            let alpha = build_alpha(&ctx, m, &sel)?;
                            for s in 0..=(d - m + 1) as i64 {
                                if pt_closed(&ctx, &alpha, s)? != pt_composition(&ctx, &alpha, s)? {
                                    return Ok(false);
                                }
                            }
                            if !certify_fixed_point(&ctx, &alpha)? {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    },
                );
            }
        }
    }
    r
}

fn suite_jacobian(cfg: &RunConfig) -> Report {
    let mut r = Report::new("jacobian", cfg.seed);
    for (d, m) in [(3usize, 2usize), (4, 2), (4, 3)] {
        run_check(
            &mut r,
            &format!("factorization-sym-d{d}-m{m}"),
            &format!("d={d} m={m} symbolic"),
            || {
                let split = RootSplit::symbolic(d, m);
                Ok(check_factorization(&split)
                    && check_det_m_eq_det_uv(&split)
                    && check_reduction_to_uv(&split))
            },
        );
        run_check(
            &mut r,
            &format!("substitution-vanishes-d{d}-m{m}"),
            &format!("d={d} m={m} z1 = z_m+1"),
            || {
                let split = RootSplit::symbolic_z1_eq_zm1(d, m);
                let uv = build_u_matrix(&split).add(&build_v_matrix(&split));
                Ok(uv.det_cofactor().is_zero() && check_lin_combo(&split))
            },
        );
    }
    for (d, m) in [(5usize, 2usize), (5, 3), (6, 2)] {
        for point in 0..5u64 {
            let mut rng = case_rng(cfg.seed, 2000 + (d as u64) * 100 + (m as u64) * 10 + point);
            let roots = random_roots(&mut rng, d);
            run_check(
                &mut r,
                &format!("factorization-rat-d{d}-m{m}-p{point}"),
                &format!("d={d} m={m} rational point {point}"),
                || {
                    let split =
                        RootSplit::from_roots(roots[..m].to_vec(), roots[m..].to_vec())?;
                    Ok(check_factorization(&split) && check_det_m_eq_det_uv(&split))
                },
            );
        }
    }
    // closed-form Jacobian route against the factored product
    for (d, m) in [(3usize, 2usize), (4, 2), (4, 3), (5, 2)] {
        let mut rng = case_rng(cfg.seed, 2500 + (d as u64) * 10 + m as u64);
        let roots = random_roots(&mut rng, d);
        let spec = PolySpec::new(rat(1), roots).unwrap();
        let ctx = AlgebraCtx::from_spec(&spec);
        run_check(
            &mut r,
            &format!("jacobian-route-d{d}-m{m}"),
            &format!("d={d} m={m} rational"),
            || check_jacobian_route(&ctx, &(0..m).collect::<Vec<_>>()),
        );
    }
    // numeric cross-check, m = 2
    run_check(&mut r, "worked-value-1-648", "monic roots (1,2,3)", || {
        let spec = PolySpec::monic(vec![rat(1), rat(2), rat(3)])?;
        Ok(factored_det(&spec, &[0, 1])? == ratio(1, 648))
    });
    for d in 3..=5usize {
        let mut rng = case_rng(cfg.seed, 2600 + d as u64);
        let roots = random_roots(&mut rng, d);
        let spec = PolySpec::new(rat(1), roots).unwrap();
        let ctx = AlgebraCtx::from_spec(&spec);
        run_check(
            &mut r,
            &format!("numeric-fd-d{d}"),
            &format!("d={d} all m=2 selections, tol 1e-6"),
            || {
                for sel in subsets_k(d, 2) {
                    let alpha = build_alpha(&ctx, 2, &sel)?;
                    let jac = jacobian_numeric_m2(&spec, &alpha)?;
                    let exact = rat_to_f64(&factored_det(&spec, &sel)?);
                    let rel = (det2(&jac) - exact).abs() / exact.abs().max(1e-30);
                    if rel >= 1e-6 {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        );
    }
    r
}

fn suite_gpoly(cfg: &RunConfig) -> Report {
    let mut r = Report::new("gpoly", cfg.seed);
    // null vector of the reduced system
    run_check(&mut r, "null-vector-sym-d3", "d=3 fully symbolic X", || {
        let ms = m_prime_seq(3);
        let ns = n_seq(3);
        let mut v = 0u32;
        let x = ms
            .iter()
            .map(|&mi| {
                ns.iter()
                    .map(|&nj| {
                        (0..(mi as i64 - nj as i64 + 1).max(0))
                            .map(|_| {
                                v += 1;
                                SparseLaurent::var(v)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        BlockSpec::new(ms, ns, x)?.check_null()
    });
    for d in [4usize, 5] {
        for seed in 0..5u64 {
            run_check(
                &mut r,
                &format!("null-vector-rat-d{d}-s{seed}"),
                &format!("d={d} random rational X seed {seed}"),
                || {
                    let mut rng = case_rng(cfg.seed, 3000 + d as u64 * 10 + seed);
                    let ms = m_prime_seq(d);
                    let ns = n_seq(d);
                    let x = ms
                        .iter()
                        .map(|&mi| {
                            ns.iter()
                                .map(|&nj| {
                                    (0..(mi as i64 - nj as i64 + 1).max(0))
                                        .map(|_| rat(rng.gen_range(-9i64..=9)))
                                        .collect()
                                })
                                .collect()
                        })
                        .collect();
                    BlockSpec::new(ms, ns, x)?.check_null()
                },
            );
        }
    }
    // signed path sums equal the null-vector entries
    for d in [3usize, 4] {
        run_check(
            &mut r,
            &format!("vd-paths-sym-d{d}"),
            &format!("d={d} symbolic coefficients"),
            || {
                let coeffs: Vec<Frac<SparseLaurent>> = (0..=d as u32)
                    .map(|i| Frac::from_ring(SparseLaurent::var(i)))
                    .collect();
                let ctx = CoeffCtx::new(coeffs);
                for j0 in 1..d {
                    for k in 0..n_seq(d)[j0 - 1] {
                        if !check_vd_paths_lemma(&ctx, j0, k)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            },
        );
    }
    run_check(&mut r, "vd-paths-rat-d5", "d=5 rational roots", || {
        let mut rng = case_rng(cfg.seed, 3100);
        let spec = PolySpec::new(rat(1), random_roots(&mut rng, 5)).unwrap();
        let ctx = CoeffCtx::from_algebra(&AlgebraCtx::from_spec(&spec));
        for j0 in 1..5 {
            for k in 0..n_seq(5)[j0 - 1] {
                if !check_vd_paths_lemma(&ctx, j0, k)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    // the elimination polynomial
    run_check(&mut r, "g-sym-d3", "d=3 symbolic roots", || {
        let actx = AlgebraCtx::<Frac<SparseLaurent>>::symbolic(3);
        check_g_eq_p(&actx)
    });
    for d in [4usize, 5] {
        run_check(
            &mut r,
            &format!("g-rat-d{d}"),
            &format!("d={d} rational roots"),
            || {
                let mut rng = case_rng(cfg.seed, 3200 + d as u64);
                let spec = PolySpec::new(ratio(2, 3), random_roots(&mut rng, d)).unwrap();
                let actx = AlgebraCtx::from_spec(&spec);
                let cctx = CoeffCtx::from_algebra(&actx);
                let g = build_g(&cctx)?;
                if g.degree() != Some(d * (d - 1) / 2) {
                    return Ok(false);
                }
                if g.coeff(d * (d - 1) / 2) != g_leading_coeff(&cctx) {
                    return Ok(false);
                }
                Ok(g == pairwise_sum_poly(&spec.roots).scale(&g_leading_coeff(&cctx)))
            },
        );
    }
    // supporting lemmas
    run_check(&mut r, "all-paths-d3-d4", "row sums vs full path systems", || {
        let spec3 = PolySpec::monic(vec![rat(1), rat(2), rat(3)])?;
        let c3 = CoeffCtx::from_algebra(&AlgebraCtx::from_spec(&spec3));
        for k in 0..=3 {
            if !check_all_paths_lemma(&c3, k)? {
                return Ok(false);
            }
        }
        let spec4 = PolySpec::monic(vec![rat(2), rat(-3), rat(5), rat(7)])?;
        let c4 = CoeffCtx::from_algebra(&AlgebraCtx::from_spec(&spec4));
        for k in 0..=6 {
            if !check_all_paths_lemma(&c4, k)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    run_check(&mut r, "w-sum-surjections", "exhaustive d = 4, 5", || {
        for d in [4usize, 5] {
            let vals = d - 2;
            for code in 0..vals.pow((d - 1) as u32) {
                let mut sigma = Vec::with_capacity(d - 1);
                let mut c = code;
                for _ in 0..d - 1 {
                    sigma.push(c % vals + 1);
                    c /= vals;
                }
                match check_w_sum(d, &sigma) {
                    Ok(ok) => {
                        if !ok {
                            return Ok(false);
                        }
                    }
                    Err(Error::NotSurjective) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        let _ = epsilon(3, 1, 1);
        Ok(true)
    });
    r
}

fn suite_graphs(cfg: &RunConfig) -> Report {
    let mut r = Report::new("graphs", cfg.seed);
    for d in 2..=4usize {
        run_check(
            &mut r,
            &format!("graph-gen-sym-d{d}"),
            &format!("d={d} all l, symbolic"),
            || {
                let z = sym_vars(d);
                for l in 0..=d * (d - 1) / 2 {
                    if !check_simple_graph_gen(d, l, &z) {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        );
    }
    for point in 0..3u64 {
        run_check(
            &mut r,
            &format!("graph-gen-rat-d5-p{point}"),
            &format!("d=5 all l, rational point {point}"),
            || {
                let mut rng = case_rng(cfg.seed, 4000 + point);
                let z = random_roots(&mut rng, 5);
                for l in 0..=10 {
                    if !check_simple_graph_gen(5, l, &z) {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        );
    }
    for rr in 1..=5usize {
        run_check(
            &mut r,
            &format!("bijection-r{rr}"),
            &format!("r={rr} exhaustive round trip"),
            || {
                let mut seen = std::collections::HashSet::new();
                for m in enumerate_dsg(rr) {
                    let sigma = encode(&m);
                    if !is_in_b(&sigma)
                        || m.rho2() != sigma.rho1()
                        || decode(&sigma)? != m
                        || !seen.insert(format!("{:?}", sigma.sets))
                    {
                        return Ok(false);
                    }
                }
                Ok(seen.len() == 3usize.pow((rr * (rr - 1) / 2) as u32))
            },
        );
    }
    r
}

fn suite_newton_series(cfg: &RunConfig) -> Report {
    let mut r = Report::new("newton-series", cfg.seed);
    run_check(&mut r, "bin-sum", "exhaustive a,b,l <= 8", || {
        for a in 0..=8 {
            for b in 0..=8 {
                for l in 0..=8 {
                    if !check_bin_sum(a, b, l) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });
    run_check(&mut r, "rec", "exhaustive A <= 6, m,n <= 3", || {
        for a in 0..=6u32 {
            for m in 1..=3u32 {
                for n in 1..=3u32 {
                    for xs in crate::comb::compositions_nn(a, m) {
                        for ys in crate::comb::compositions_nn(a, n) {
                            let x: Vec<u64> = xs.parts.iter().map(|&v| v as u64).collect();
                            let y: Vec<u64> = ys.parts.iter().map(|&v| v as u64).collect();
                            if !check_rec(&x, &y)? {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    });
    run_check(&mut r, "t-su", "exhaustive d <= 6, r <= 3, nu <= 3", || {
        for d in 0..=6u64 {
            for rr in 1..=3usize {
                for code in 0..4usize.pow(rr as u32) {
                    let mut nu = Vec::with_capacity(rr);
                    let mut c = code;
                    for _ in 0..rr {
                        nu.push((c % 4) as u64);
                        c /= 4;
                    }
                    if !check_t_su(d, &nu) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });
    run_check(&mut r, "s-exp", "m <= 5, seeded random s", || {
        let mut rng = case_rng(cfg.seed, 5000);
        for m in 0..=5u64 {
            for _ in 0..4 {
                let s: Vec<Rat> = (0..m)
                    .map(|_| ratio(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=2)))
                    .collect();
                if !check_s_exp(m, &s) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    run_check(&mut r, "s-exp-2", "r <= 5, seeded random x", || {
        let mut rng = case_rng(cfg.seed, 5001);
        for rr in 0..=5usize {
            for _ in 0..4 {
                let x: Vec<Rat> = (0..rr)
                    .map(|_| ratio(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=2)))
                    .collect();
                if !check_s_exp_2(rr, &x) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    r
}

pub struct Nrs2Stats {
    pub converged: usize,
    pub matched: usize,
    pub unmatched: usize,
    pub non_converged: usize,
}

/// Run seeded random starts in the box and classify limits against the
/// pairwise root sums.
pub fn nrs2_random_starts(
    sys: &Nrs2System,
    n: usize,
    lo: f64,
    hi: f64,
    seed: u64,
) -> Nrs2Stats {
    let mut stats = Nrs2Stats {
        converged: 0,
        matched: 0,
        unmatched: 0,
        non_converged: 0,
    };
    for i in 0..n {
        let mut rng = case_rng(seed, 6000 + i as u64);
        let start = (
            Complex64::new(rng.gen_range(lo..hi), 0.0),
            Complex64::new(rng.gen_range(lo..hi), 0.0),
        );
        let tr = iterate(sys, start, DEFAULT_TOL, DEFAULT_MAXITER);
        if tr.status == IterStatus::Converged {
            stats.converged += 1;
            let lim = tr.limit.unwrap();
            if classify_limit(&sys.spec, lim.0, 1e-8).is_empty() {
                stats.unmatched += 1;
            } else {
                stats.matched += 1;
            }
        } else {
            stats.non_converged += 1;
        }
    }
    stats
}

fn suite_nrs2(cfg: &RunConfig) -> Report {
    let mut r = Report::new("nrs2", cfg.seed);
    let spec = PolySpec::monic(vec![rat(1), rat(2), rat(3)]).unwrap();
    let sys = Nrs2System::new(spec.clone()).unwrap();
    run_check(
        &mut r,
        "basin-classification",
        "1000 seeded starts in [-10,10]^2",
        || {
            let stats = nrs2_random_starts(&sys, 1000, -10.0, 10.0, cfg.seed);
            if stats.converged == 0 {
                return Ok(false);
            }
            Ok(stats.matched * 100 >= stats.converged * 99)
        },
    );
    run_check(
        &mut r,
        "quadratic-convergence",
        "offset 1e-3 from each attractor, 3 steps",
        || {
            let ctx = AlgebraCtx::from_spec(&spec);
            for sel in subsets_k(3, 2) {
                let alpha = build_alpha(&ctx, 2, &sel)?;
                let a = (
                    Complex64::new(rat_to_f64(&alpha.coords[0]), 0.0),
                    Complex64::new(rat_to_f64(&alpha.coords[1]), 0.0),
                );
                let mut x = (a.0 + 1e-3, a.1 + 1e-3);
                let mut prev = ((x.0 - a.0).norm_sqr() + (x.1 - a.1).norm_sqr()).sqrt();
                for _ in 0..3 {
                    // once the error hits the rounding floor, e^2 is below
                    // machine precision and the ratio is meaningless
                    if prev < 1e-7 {
                        break;
                    }
                    x = sys.newton_step(x.0, x.1)?;
                    let err = ((x.0 - a.0).norm_sqr() + (x.1 - a.1).norm_sqr()).sqrt();
                    let ratio = err / (prev * prev);
                    if !(1e-3..1e3).contains(&ratio) {
                        return Ok(false);
                    }
                    prev = err;
                }
            }
            Ok(true)
        },
    );
    run_check(&mut r, "exact-fixed-points", "5 random rational root sets", || {
        for set in 0..5u64 {
            let mut rng = case_rng(cfg.seed, 6100 + set);
            let d = 2 + (set as usize % 5);
            let spec = PolySpec::new(rat(1), random_roots(&mut rng, d)).unwrap();
            if spec.coeff(1).is_zero() || spec.coeff(2).is_zero() {
                continue;
            }
            let sys = Nrs2System::new(spec.clone()).unwrap();
            let ctx = AlgebraCtx::from_spec(&spec);
            for sel in subsets_k(d, 2.min(d - 1)) {
                if sel.len() != 2 {
                    continue;
                }
                let a = build_alpha(&ctx, 2, &sel)?;
                if sys.eval_f02_rat(&a.coords[0], &a.coords[1]) != a.coords[0]
                    || sys.eval_f12_rat(&a.coords[0], &a.coords[1]) != a.coords[1]
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_rejected() {
        assert!(matches!(
            run_suite("bogus", &RunConfig::default()),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn random_roots_satisfy_condition() {
        let mut rng = case_rng(1, 2);
        for d in 2..=6 {
            let roots = random_roots(&mut rng, d);
            assert_eq!(roots.len(), d);
            assert!(roots.iter().all(|z| !z.is_zero()));
        }
    }

    #[test]
    fn case_rng_deterministic() {
        let a: u64 = case_rng(9, 3).gen();
        let b: u64 = case_rng(9, 3).gen();
        let c: u64 = case_rng(9, 4).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn newton_series_suite_passes() {
        let r = run_suite("newton-series", &RunConfig::default()).unwrap();
        assert!(r.all_pass(), "{:?}", r.cases.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }
}
