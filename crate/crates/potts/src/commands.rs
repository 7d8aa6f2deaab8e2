//! One function per subcommand. Each returns the report plus its plain-text
//! rendering; errors are one-line messages.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_traits::Signed;
use potts_core::certificate::{
    self, Entry, MaxCertificateReport, MinCertificateReport, Verdict as CertVerdict,
};
use potts_core::graphs::{cycle_closed_forms, line_energy, oracle, Graph, OracleLimits};
use potts_core::localstats::LocalCounts;
use potts_core::localview::{enumerate_views_bounded, ViewTable};
use potts_core::lp::{
    assemble_scan, check_duality, energy_row_redundant, scan_point, solve_exact, ConstraintSet,
    LpBuilder, Sense, Status,
};
use potts_core::rational::to_fraction_string;
use potts_core::Rational;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::cli::{
    CertifyArgs, CycleArgs, Format, LpArgs, OracleArgs, ScanArgs, SenseArg, StatsArgs, ViewsArgs,
};
use crate::config::Settings;
use crate::inputs::parse_graph;
use crate::report::{frac, monomial_text, poly_value, view_value, Report, Verdict};

pub struct Outcome {
    pub report: Report,
    pub text: String,
}

pub type CmdResult = Result<Outcome, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn set_name(set: ConstraintSet) -> &'static str {
    match set {
        ConstraintSet::EnergyOnly => "energy_only",
        ConstraintSet::QPartitions => "q_partitions",
    }
}

fn view_table(degree: usize, max_colors: Option<usize>, cap: Option<usize>) -> Result<ViewTable, String> {
    enumerate_views_bounded(degree, max_colors, cap).map_err(err)
}

pub fn views(args: &ViewsArgs, settings: &Settings) -> CmdResult {
    let cap = args.max_views.or(settings.max_views);
    let table = view_table(args.degree, args.max_colors, cap)?;
    let list: Vec<Value> = table
        .views()
        .iter()
        .enumerate()
        .map(|(i, v)| view_value(i + 1, v))
        .collect();
    let mut text = String::new();
    match args.format {
        Format::Csv => {
            text.push_str("ordinal,inner_edges,q_c,view\n");
            for (i, v) in table.views().iter().enumerate() {
                let _ = writeln!(text, "{},{},{},\"{}\"", i + 1, v.inner_edge_count(), v.q_c(), v);
            }
        }
        _ => {
            let _ = writeln!(text, "{} local views of degree {}", table.len(), args.degree);
            for (i, v) in table.views().iter().enumerate() {
                let _ = writeln!(text, "{:>5}  q_C={}  {}", i + 1, v.q_c(), v);
            }
        }
    }
    let report = Report::new(
        "views",
        params(&[
            ("degree", json!(args.degree)),
            ("max_colors", json!(args.max_colors)),
        ]),
        json!({ "count": table.len(), "views": list }),
        Verdict::Data,
    );
    Ok(Outcome { report, text })
}

pub fn stats(args: &StatsArgs, settings: &Settings) -> CmdResult {
    let table = view_table(args.degree, None, settings.max_views)?;
    let view = args
        .view
        .checked_sub(1)
        .and_then(|i| table.get(i))
        .ok_or_else(|| format!("view ordinal {} out of range 1..={}", args.view, table.len()))?;
    let lq = LocalCounts::new(view).symbolic();
    let mut text = String::new();
    let _ = writeln!(text, "# view {} of {} (degree {}): {}", args.view, table.len(), args.degree, view);
    let _ = writeln!(text, "# q_C = {}", view.q_c());
    let _ = writeln!(text, "# U^v = Uv / (2 Z), U^N = UN / (2 d Z)");
    for (label, p) in [("Z", &lq.z), ("Uv", &lq.uv_num), ("UN", &lq.un_num)] {
        let _ = writeln!(text, "[{label}]");
        text.push_str(&p.to_text());
    }
    let mut gamma = Map::new();
    if args.gamma {
        for (s, (gv, gn)) in &lq.gamma {
            let _ = writeln!(text, "[gamma_v {s}]");
            text.push_str(&gv.to_text());
            let _ = writeln!(text, "[gamma_N {s}]");
            text.push_str(&gn.to_text());
            gamma.insert(s.to_string(), json!({ "v": poly_value(gv), "n": poly_value(gn) }));
        }
    }
    let mut payload = json!({
        "view": view_value(args.view, view),
        "z": poly_value(&lq.z),
        "uv_num": poly_value(&lq.uv_num),
        "un_num": poly_value(&lq.un_num),
    });
    if args.gamma {
        payload["gamma"] = Value::Object(gamma);
    }
    let report = Report::new(
        "stats",
        params(&[("degree", json!(args.degree)), ("view", json!(args.view))]),
        payload,
        Verdict::Data,
    );
    Ok(Outcome { report, text })
}

fn entry_value(e: &Entry, poly_key: &str) -> Value {
    let mut v = json!({
        "ordinal": e.ordinal,
        "view": e.view.to_string(),
        "is_zero": e.is_zero,
        "all_nonneg": e.all_nonneg,
        "terms": e.poly.len(),
        "negative_witness": e.negative_witness.as_ref().map(|(m, c)| json!({
            "monomial": monomial_text(m),
            "coefficient": frac(c),
        })),
        "strict_witness": e.strict_witness.as_ref().map(frac),
    });
    v[poly_key] = poly_value(&e.poly);
    v
}

fn entry_line(text: &mut String, e: &Entry) {
    let status = if e.is_zero {
        "zero"
    } else if e.all_nonneg {
        "nonneg"
    } else {
        "NEGATIVE"
    };
    let _ = writeln!(
        text,
        "{:>4}  {:>3}  {:>6}  {:<8}  {}",
        e.ordinal,
        e.view.q_c(),
        e.poly.len(),
        status,
        e.view
    );
}

fn failures(v: &CertVerdict) -> Vec<String> {
    match v {
        CertVerdict::Pass => Vec::new(),
        CertVerdict::Fail(f) => f.clone(),
    }
}

fn dump(dir: &Path, prefix: &str, entries: &[Entry], q2: &[Entry], q2_tag: &str) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("cannot create '{}': {e}", dir.display()))?;
    let write = |name: String, e: &Entry| {
        let path = dir.join(name);
        fs::write(&path, e.poly.to_text()).map_err(|err| format!("cannot write '{}': {err}", path.display()))
    };
    for e in entries {
        write(format!("{prefix}_view_{:02}.txt", e.ordinal), e)?;
    }
    for e in q2 {
        write(format!("{prefix}_view_{:02}_{q2_tag}.txt", e.ordinal), e)?;
    }
    Ok(())
}

pub fn certify_min(args: &CertifyArgs) -> CmdResult {
    let report: MinCertificateReport = certificate::verify_min_certificate_with(|cert, views| {
        views.par_iter().map(|v| cert.scaled_slack(v)).collect()
    })
    .map_err(err)?;
    if let Some(dir) = &args.dump_polys {
        dump(dir, "S", &report.entries, &report.q2_entries, "r-1")?;
    }
    let verdict = if report.verdict.passed() { Verdict::Pass } else { Verdict::Fail };
    let mut text = String::new();
    let _ = writeln!(text, "minimization certificate, {} views of degree 3", report.entries.len());
    let _ = writeln!(text, "delta-star identity verified: {}", report.delta_star_identity_verified);
    let _ = writeln!(text, "rescaling prefactors positive: {}", report.prefactors_positive);
    let _ = writeln!(text, "view  q_C   terms  status    local view");
    report.entries.iter().for_each(|e| entry_line(&mut text, e));
    let _ = writeln!(text, "q = 2 (r = -1), views with q_C <= 2:");
    report.q2_entries.iter().for_each(|e| entry_line(&mut text, e));
    for f in failures(&report.verdict) {
        let _ = writeln!(text, "failure: {f}");
    }
    let _ = writeln!(text, "verdict: {}", verdict.as_str());
    let payload = json!({
        "entries": report.entries.iter().map(|e| entry_value(e, "s_tilde")).collect::<Vec<_>>(),
        "q2_entries": report.q2_entries.iter().map(|e| entry_value(e, "s_tilde_at_r_eq_minus1")).collect::<Vec<_>>(),
        "delta_star_identity_verified": report.delta_star_identity_verified,
        "prefactors_positive": report.prefactors_positive,
        "zero_set": report.zero_set,
        "failures": failures(&report.verdict),
    });
    let p = params(&[("dump_polys", json!(args.dump_polys.as_ref().map(|d| d.display().to_string())))]);
    Ok(Outcome {
        report: Report::new("certify-min", p, payload, verdict),
        text,
    })
}

pub fn certify_max(args: &CertifyArgs) -> CmdResult {
    let report: MaxCertificateReport = certificate::verify_max_certificate_with(|cert, views| {
        views.par_iter().map(|v| cert.scaled_diff(v)).collect()
    })
    .map_err(err)?;
    if let Some(dir) = &args.dump_polys {
        dump(dir, "D", &report.entries, &report.q2_entries, "s-1")?;
    }
    let verdict = if report.verdict.passed() { Verdict::Pass } else { Verdict::Fail };
    let mut text = String::new();
    let _ = writeln!(text, "maximization certificate, {} views of degree 3", report.entries.len());
    let _ = writeln!(text, "rescaling prefactors positive: {}", report.prefactors_positive);
    let _ = writeln!(text, "view  q_C   terms  status    local view");
    report.entries.iter().for_each(|e| entry_line(&mut text, e));
    let _ = writeln!(text, "q = 2 (s = -1), views with q_C <= 2:");
    report.q2_entries.iter().for_each(|e| entry_line(&mut text, e));
    for f in failures(&report.verdict) {
        let _ = writeln!(text, "failure: {f}");
    }
    let _ = writeln!(text, "verdict: {}", verdict.as_str());
    let payload = json!({
        "entries": report.entries.iter().map(|e| entry_value(e, "d_v")).collect::<Vec<_>>(),
        "q2_entries": report.q2_entries.iter().map(|e| entry_value(e, "d_v_at_s_eq_minus1")).collect::<Vec<_>>(),
        "prefactors_positive": report.prefactors_positive,
        "zero_set": report.zero_set,
        "failures": failures(&report.verdict),
    });
    let p = params(&[("dump_polys", json!(args.dump_polys.as_ref().map(|d| d.display().to_string())))]);
    Ok(Outcome {
        report: Report::new("certify-max", p, payload, verdict),
        text,
    })
}

pub fn lp_solve(args: &LpArgs, settings: &Settings) -> CmdResult {
    let (Some(d), Some(q), Some(lam)) = (args.degree, args.colors, args.lam.as_ref()) else {
        return Err(String::from("lp needs --degree, --colors and --lam"));
    };
    let set = if args.q_partitions { ConstraintSet::QPartitions } else { ConstraintSet::EnergyOnly };
    let sense = match args.sense {
        SenseArg::Min => Sense::Min,
        SenseArg::Max => Sense::Max,
    };
    let builder = LpBuilder::new(d, Some(q as usize), args.max_views.or(settings.max_views)).map_err(err)?;
    let lp = builder.instance(q, lam, set, sense).map_err(err)?;
    let sol = solve_exact(&lp);
    let check = check_duality(&lp, &sol);
    let redundant = match set {
        ConstraintSet::QPartitions => Some(energy_row_redundant(&lp).map_err(err)?),
        ConstraintSet::EnergyOnly => None,
    };
    let ok = sol.status == Status::Optimal && check.all() && redundant != Some(false);
    let verdict = if ok { Verdict::Data } else { Verdict::Fail };
    let sense_name = if sense == Sense::Min { "min" } else { "max" };
    let status = format!("{:?}", sol.status).to_lowercase();
    let row_names: Vec<String> = lp.rows.iter().map(|r| r.kind.name()).collect();

    let mut text = String::new();
    let _ = writeln!(
        text,
        "LP {sense_name}, degree {d}, q = {q}, lam = {}, {} ({} views, {} rows)",
        to_fraction_string(lam),
        set_name(set),
        lp.views.len(),
        lp.rows.len()
    );
    let _ = writeln!(text, "status: {status}");
    let _ = writeln!(text, "optimum: {}", to_fraction_string(&sol.optimum));
    let _ = writeln!(text, "distribution:");
    let mut dist = Vec::new();
    for (ord, p) in &sol.distribution {
        let view = builder.table().get(ord - 1).expect("ordinal from table");
        let _ = writeln!(text, "  view {ord}: {}  ({view})", to_fraction_string(p));
        dist.push(json!({ "ordinal": ord, "view": view.to_string(), "p": frac(p) }));
    }
    let _ = writeln!(text, "dual values:");
    let mut duals = Vec::new();
    for (name, y) in row_names.iter().zip(&sol.dual_values) {
        let _ = writeln!(text, "  {name}: {}", to_fraction_string(y));
        duals.push(json!({ "row": name, "value": frac(y) }));
    }
    let _ = writeln!(
        text,
        "checks: primal feasible {}, dual feasible {}, strong duality {}, complementary slackness {}",
        check.primal_feasible, check.dual_feasible, check.strong_duality, check.complementary_slackness
    );
    if let Some(r) = redundant {
        let _ = writeln!(text, "energy row implied by histogram rows: {r}");
    }
    let payload = json!({
        "status": status,
        "optimum": frac(&sol.optimum),
        "variables": lp.views.len(),
        "rows": row_names,
        "distribution": dist,
        "dual_values": duals,
        "redundant_rows": sol.redundant_rows.iter().map(|&i| lp.rows[i].kind.name()).collect::<Vec<_>>(),
        "duality": {
            "primal_feasible": check.primal_feasible,
            "dual_feasible": check.dual_feasible,
            "strong_duality": check.strong_duality,
            "complementary_slackness": check.complementary_slackness,
        },
        "energy_row_redundant": redundant,
    });
    let p = params(&[
        ("degree", json!(d)),
        ("colors", json!(q)),
        ("lam", frac(lam)),
        ("sense", json!(sense_name)),
        ("constraint_set", json!(set_name(set))),
    ]);
    Ok(Outcome {
        report: Report::new("lp", p, payload, verdict),
        text,
    })
}

pub fn lp_scan(args: &ScanArgs, settings: &Settings) -> CmdResult {
    let set = if args.q_partitions { ConstraintSet::QPartitions } else { ConstraintSet::EnergyOnly };
    let lams: Vec<Rational> = args.lams.clone().unwrap_or_else(|| settings.scan_grid.clone());
    if let Some(bad) = lams.iter().find(|l| !l.is_positive() || **l >= Rational::from_integer(1.into())) {
        return Err(format!("lam '{}' is outside (0, 1)", to_fraction_string(bad)));
    }
    let builder = LpBuilder::new(args.degree, Some(args.colors as usize), args.max_views.or(settings.max_views))
        .map_err(err)?;
    let budget = args.max_solves.or(settings.max_solves).unwrap_or(lams.len()).min(lams.len());
    let points = lams[..budget]
        .par_iter()
        .map(|lam| scan_point(&builder, args.colors, lam, set))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let scan = assemble_scan(args.degree, args.colors, set, points, budget < lams.len());
    let verdict = if scan.duality_verified { Verdict::Data } else { Verdict::Fail };

    let mut text = String::from("lam,lp_min,u_kdd,gap,below\n");
    let mut records = Vec::new();
    for r in &scan.records {
        let _ = writeln!(
            text,
            "{},{},{},{},{}",
            to_fraction_string(&r.lam),
            to_fraction_string(&r.lp_min),
            to_fraction_string(&r.u_kdd),
            to_fraction_string(&r.gap),
            r.below()
        );
        records.push(json!({
            "lam": frac(&r.lam),
            "lp_min": frac(&r.lp_min),
            "u_kdd": frac(&r.u_kdd),
            "gap": frac(&r.gap),
            "below": r.below(),
            "support": r.support,
        }));
    }
    let _ = writeln!(text, "# witness: {}", scan.witness.as_ref().map(to_fraction_string).unwrap_or_else(|| "none".into()));
    let _ = writeln!(text, "# truncated: {}", scan.truncated);
    let _ = writeln!(text, "# duality verified: {}", scan.duality_verified);
    let payload = json!({
        "records": records,
        "witness": scan.witness.as_ref().map(frac),
        "truncated": scan.truncated,
        "duality_verified": scan.duality_verified,
        "views": builder.table().len(),
    });
    let p = params(&[
        ("degree", json!(args.degree)),
        ("colors", json!(args.colors)),
        ("constraint_set", json!(set_name(set))),
        ("lams", json!(lams.iter().map(to_fraction_string).collect::<Vec<_>>())),
    ]);
    Ok(Outcome {
        report: Report::new("lp scan", p, payload, verdict),
        text,
    })
}

fn limits(flag: Option<usize>, settings: &Settings) -> OracleLimits {
    OracleLimits {
        max_vertices: flag.unwrap_or(settings.max_vertices),
    }
}

pub fn oracle(args: &OracleArgs, settings: &Settings) -> CmdResult {
    let g: Graph = parse_graph(&args.graph)?;
    let lim = limits(args.max_vertices, settings);
    let eval = oracle::potts_evaluation(&g, args.colors, &args.lam, lim).map_err(err)?;
    let proper = oracle::count_proper_colorings(&g, args.colors, lim).map_err(err)?;
    let mut text = String::new();
    let _ = writeln!(text, "graph {} ({} vertices, {} edges)", args.graph, g.n(), g.edge_count());
    let _ = writeln!(text, "q = {}, lam = {}", args.colors, to_fraction_string(&args.lam));
    let _ = writeln!(text, "Z = {}", to_fraction_string(&eval.z));
    let _ = writeln!(text, "U = {}", to_fraction_string(&eval.u));
    let _ = writeln!(text, "C_q = {proper}");
    let payload = json!({
        "graph": args.graph,
        "n": g.n(),
        "edges": g.edges().map(|(u, v)| json!([u, v])).collect::<Vec<_>>(),
        "regular_degree": g.regular_degree(),
        "q": args.colors,
        "lam": frac(&eval.lam),
        "Z": frac(&eval.z),
        "U": frac(&eval.u),
        "C_q": proper.to_string(),
    });
    let p = params(&[
        ("graph", json!(args.graph)),
        ("colors", json!(args.colors)),
        ("lam", frac(&args.lam)),
    ]);
    Ok(Outcome {
        report: Report::new("oracle", p, payload, Verdict::Data),
        text,
    })
}

pub fn cycle(args: &CycleArgs, settings: &Settings) -> CmdResult {
    let forms = cycle_closed_forms(args.n, args.colors, &args.lam).map_err(err)?;
    let line = line_energy(args.colors, &args.lam).ok();
    let mut text = String::new();
    let _ = writeln!(text, "cycle C_{}, q = {}, lam = {}", args.n, args.colors, to_fraction_string(&args.lam));
    let _ = writeln!(text, "Z = {}", to_fraction_string(&forms.z));
    let _ = writeln!(text, "U = {}", to_fraction_string(&forms.u));
    if let Some(l) = &line {
        let _ = writeln!(text, "line limit = {}", to_fraction_string(l));
    }
    let mut verified = None;
    if args.verify {
        let g = Graph::cycle(args.n).map_err(err)?;
        let eval = oracle::potts_evaluation(&g, args.colors, &args.lam, limits(args.max_vertices, settings))
            .map_err(err)?;
        let ok = eval.z == forms.z && eval.u == forms.u;
        let _ = writeln!(text, "brute force agrees: {ok}");
        verified = Some(ok);
    }
    let verdict = match verified {
        None => Verdict::Data,
        Some(true) => Verdict::Pass,
        Some(false) => Verdict::Fail,
    };
    let payload = json!({
        "Z": frac(&forms.z),
        "U": frac(&forms.u),
        "line_limit": line.as_ref().map(frac),
        "verified": verified,
    });
    let p = params(&[
        ("n", json!(args.n)),
        ("colors", json!(args.colors)),
        ("lam", frac(&args.lam)),
        ("verify", json!(args.verify)),
    ]);
    Ok(Outcome {
        report: Report::new("cycle", p, payload, verdict),
        text,
    })
}
