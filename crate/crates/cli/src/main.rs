//! Command-line front end: twig arithmetic, graph checks and contractions,
//! the configuration catalog, and the del Pezzo decision tables.

mod args;
mod io;

use std::process::ExitCode;

use plumbing_core::catalog::{
    field_condition, mnc_target_shape, Catalog, EnumBounds, FamilyId, FamilyParams,
};
use plumbing_core::classifier::{
    analyze_singularities, classify_boundary, contains_affine_plane_duval, format_duval_types,
    BoundaryVerdict, DuValType, DuValVerdict, HIGH_DEGREE_TABLE, LOW_DEGREE_TABLE,
};
use plumbing_core::contraction::{
    blow_down, contract_orbit, is_mnc, morrow_audit, normalize, trace_to_text,
};
use plumbing_core::dual_graph::{
    intersection_matrix, is_connected, is_forest, is_negative_definite, orbit_audit, picard_rank,
    to_dot,
};
use plumbing_core::rational::Rational;
use plumbing_core::twig::{
    adjoint, admissible_twigs_up_to, decompose_boundary, det, inductance, m_a, Twig,
};

use args::{int_flag, parse, FlagSpec};

const USAGE: &str = "\
usage: plumbing <command> [args]

commands:
  twig det|inductance|adjoint|ma|decompose <twig>     twig arithmetic, e.g. \"[2,4]\"
  graph check <file> [--dot] [--json]                 validate a graph file
  graph contract <file> (--vertex <id> | --orbit <label>) [--json]
  graph normalize <file> [--trace] [--json]           contract to a minimal model
  graph classify <file> [--strict] [--trace] [--json] full boundary decision
  catalog gen <id> [--t N] [--t2 N] [--m N] [--n N] [--twig T] [--strict] [--templates F]
  catalog match <file> [--strict] [--json] [--templates F]
  catalog verify [--max-t N] [--max-t2 N] [--max-m N] [--twig-det D] [--n-span K]
                 [--strict] [--json] [--templates F]
  catalog field-condition <id> [--t N] [--t2 N] [--m N] [--n N] [--twig T] [--strict]
  dp contains-a2 --degree D --type T[,T...] [--rational-point] [--json]
  dp table [--json]

exit status: 0 success or positive verdict, 1 negative verdict, 2 input error.
The twig pool for `catalog verify` can be replaced by a file named in the
PLUMBING_TWIG_POOL environment variable (one twig per line).";

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&argv) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            eprintln!("run `plumbing` with no arguments for usage");
            ExitCode::from(2)
        }
    }
}

fn run(argv: &[String]) -> Result<ExitCode, String> {
    let (command, rest) = match argv.split_first() {
        Some(x) => x,
        None => {
            println!("{}", USAGE);
            return Ok(ExitCode::from(2));
        }
    };
    match command.as_str() {
        "twig" => cmd_twig(rest),
        "graph" => cmd_graph(rest),
        "catalog" => cmd_catalog(rest),
        "dp" => cmd_dp(rest),
        other => Err(format!("unknown command `{}`", other)),
    }
}

fn ok() -> Result<ExitCode, String> {
    Ok(ExitCode::SUCCESS)
}

fn negative() -> Result<ExitCode, String> {
    Ok(ExitCode::from(1))
}

// ---------------------------------------------------------------------------
// twig
// ---------------------------------------------------------------------------

fn cmd_twig(rest: &[String]) -> Result<ExitCode, String> {
    let (op, rest) = rest
        .split_first()
        .ok_or("twig needs an operation: det|inductance|adjoint|ma|decompose")?;
    let parsed = parse(
        rest,
        &[FlagSpec {
            name: "json",
            takes_value: false,
        }],
    )?;
    let [twig_text] = parsed.positional.as_slice() else {
        return Err(format!("twig {} needs exactly one twig argument", op));
    };
    let twig = Twig::parse(twig_text).map_err(|e| format!("{}", e))?;
    let json = parsed.switch("json");
    let emit = |key: &str, value: serde_json::Value, plain: String| {
        if json {
            println!("{}", serde_json::json!({ key: value }));
        } else {
            println!("{}", plain);
        }
    };
    match op.as_str() {
        "det" => {
            let d = det(&twig);
            emit("det", serde_json::json!(d.to_string()), format!("{}", d));
            ok()
        }
        "inductance" => {
            let e: Rational = inductance(&twig).map_err(|e| format!("{}", e))?;
            emit(
                "inductance",
                serde_json::json!(e.to_string()),
                format!("{}", e),
            );
            ok()
        }
        "adjoint" => {
            let a = adjoint(&twig).map_err(|e| format!("{}", e))?;
            emit(
                "adjoint",
                serde_json::json!(a.to_string()),
                format!("{}", a),
            );
            ok()
        }
        "ma" => {
            let v = m_a(&twig).map_err(|e| format!("{}", e))?;
            emit("ma", serde_json::json!(v), format!("{}", v));
            ok()
        }
        "decompose" => match decompose_boundary(&twig) {
            Ok(case) => {
                emit(
                    "decomposition",
                    serde_json::json!(case.to_string()),
                    format!("{}", case),
                );
                ok()
            }
            Err(plumbing_core::twig::TwigError::NoDecomposition) => {
                if json {
                    println!("{}", serde_json::json!({ "decomposition": null }));
                } else {
                    println!("no boundary decomposition");
                }
                negative()
            }
            Err(e) => Err(format!("{}", e)),
        },
        other => Err(format!("unknown twig operation `{}`", other)),
    }
}

// ---------------------------------------------------------------------------
// graph
// ---------------------------------------------------------------------------

fn cmd_graph(rest: &[String]) -> Result<ExitCode, String> {
    let (op, rest) = rest
        .split_first()
        .ok_or("graph needs an operation: check|contract|normalize|classify")?;
    match op.as_str() {
        "check" => graph_check(rest),
        "contract" => graph_contract(rest),
        "normalize" => graph_normalize(rest),
        "classify" => graph_classify(rest),
        other => Err(format!("unknown graph operation `{}`", other)),
    }
}

fn graph_check(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[
            FlagSpec {
                name: "json",
                takes_value: false,
            },
            FlagSpec {
                name: "dot",
                takes_value: false,
            },
        ],
    )?;
    let [path] = parsed.positional.as_slice() else {
        return Err("graph check needs exactly one file".into());
    };
    let g = io::load_graph(path)?;
    if parsed.switch("dot") {
        print!("{}", to_dot(&g));
        return ok();
    }
    let forest = is_forest(&g);
    let connected = is_connected(&g);
    let audit = orbit_audit(&g);
    let (over_closure, over_base) = picard_rank(&g);
    let exceptional = g.exceptional_part();
    let neg_def = is_negative_definite(&intersection_matrix(&exceptional));
    let minimal = is_mnc(&g);
    let all_ok = forest && connected && audit.passed();
    if parsed.switch("json") {
        println!(
            "{}",
            serde_json::json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "components_over_closure": over_closure,
                "orbit_blocks": over_base,
                "forest": forest,
                "connected": connected,
                "orbit_audit": {
                    "uniform_weight": audit.uniform_weight,
                    "uniform_configuration": audit.uniform_configuration,
                    "realizable_by_automorphisms": audit.realizable_by_automorphisms,
                },
                "exceptional_negative_definite": neg_def,
                "minimal": minimal,
                "ok": all_ok,
            })
        );
    } else {
        println!("vertices: {} (orbit blocks: {})", over_closure, over_base);
        println!("edges: {}", g.edge_count());
        println!("forest: {}", yesno(forest));
        println!("connected: {}", yesno(connected));
        println!(
            "orbit audit: weights {} / configuration {} / automorphisms {}",
            yesno(audit.uniform_weight),
            yesno(audit.uniform_configuration),
            match audit.realizable_by_automorphisms {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "skipped (graph too large)",
            }
        );
        println!("exceptional part negative definite: {}", yesno(neg_def));
        println!("already minimal: {}", yesno(minimal));
    }
    if all_ok {
        ok()
    } else {
        negative()
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn graph_contract(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[
            FlagSpec {
                name: "vertex",
                takes_value: true,
            },
            FlagSpec {
                name: "orbit",
                takes_value: true,
            },
            FlagSpec {
                name: "json",
                takes_value: false,
            },
        ],
    )?;
    let [path] = parsed.positional.as_slice() else {
        return Err("graph contract needs exactly one file".into());
    };
    let g = io::load_graph(path)?;
    let outcome = match (parsed.value("vertex"), parsed.value("orbit")) {
        (Some(v), None) => blow_down(&g, v),
        (None, Some(label)) => contract_orbit(&g, label),
        _ => return Err("graph contract needs exactly one of --vertex or --orbit".into()),
    };
    match outcome {
        Ok((next, step)) => {
            if parsed.switch("json") {
                println!(
                    "{}",
                    serde_json::json!({
                        "contracted": step.contracted,
                        "graph": io::graph_to_json(&next),
                    })
                );
            } else {
                print!("{}", next.to_text());
            }
            ok()
        }
        Err(e) => {
            eprintln!("cannot contract: {}", e);
            negative()
        }
    }
}

fn graph_normalize(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[
            FlagSpec {
                name: "trace",
                takes_value: false,
            },
            FlagSpec {
                name: "json",
                takes_value: false,
            },
        ],
    )?;
    let [path] = parsed.positional.as_slice() else {
        return Err("graph normalize needs exactly one file".into());
    };
    let g = io::load_graph(path)?;
    match normalize(&g) {
        Ok((final_graph, trace, shape)) => {
            let morrow = morrow_audit(&final_graph);
            if parsed.switch("json") {
                let steps: Vec<serde_json::Value> = trace
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "contracted": s.contracted,
                            "new_weights": s.new_weights.iter()
                                .map(|(id, w)| serde_json::json!([id, w])).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "shape": shape.to_string(),
                        "steps": if parsed.switch("trace") {
                            serde_json::Value::Array(steps)
                        } else {
                            serde_json::json!(trace.len())
                        },
                        "minimal_graph": io::graph_to_json(&final_graph),
                        "morrow": morrow.passed(),
                    })
                );
            } else {
                if parsed.switch("trace") {
                    print!("{}", trace_to_text(&trace));
                }
                println!("minimal model: {}", shape);
                println!("chain-shape audit: {}", yesno(morrow.passed()));
            }
            ok()
        }
        Err(e) => {
            eprintln!("normalization failed: {}", e);
            negative()
        }
    }
}

fn graph_classify(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[
            FlagSpec {
                name: "trace",
                takes_value: false,
            },
            FlagSpec {
                name: "json",
                takes_value: false,
            },
            FlagSpec {
                name: "strict",
                takes_value: false,
            },
            FlagSpec {
                name: "templates",
                takes_value: true,
            },
        ],
    )?;
    let [path] = parsed.positional.as_slice() else {
        return Err("graph classify needs exactly one file".into());
    };
    let g = io::load_graph(path)?;
    let catalog = load_catalog(parsed.value("templates"))?;
    let verdict = classify_boundary(&catalog, &g, parsed.switch("strict"));
    let json = parsed.switch("json");
    match &verdict {
        BoundaryVerdict::ContainsA2 {
            family,
            params,
            all_matches,
            shape,
            trace,
            singularities,
            ..
        } => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "verdict": "ContainsA2",
                        "family": family.0,
                        "params": params.to_string(),
                        "all_matches": all_matches.iter()
                            .map(|(id, p)| serde_json::json!([id.0, p.to_string()]))
                            .collect::<Vec<_>>(),
                        "minimal_model": shape.to_string(),
                        "singular_points_closure": singularities.count_closure,
                        "singular_points_rational": singularities.count_base,
                        "singularities": singularities.components.iter()
                            .map(|c| c.kind.to_string()).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("verdict: contains the affine plane");
                println!("family: {} with {}", family, params);
                if all_matches.len() > 1 {
                    for (id, p) in all_matches.iter().skip(1) {
                        println!("  also matches: {} with {}", id, p);
                    }
                }
                println!("minimal model: {}", shape);
                println!(
                    "singular points: {} over the closure, {} rational",
                    singularities.count_closure, singularities.count_base
                );
                for c in &singularities.components {
                    println!(
                        "  - {} ({} curves, orbit size {})",
                        c.kind,
                        c.vertices.len(),
                        c.orbit_size
                    );
                }
                if parsed.switch("trace") {
                    print!("{}", trace_to_text(trace));
                }
            }
            ok()
        }
        BoundaryVerdict::NotMatched {
            reasons,
            singularities,
        } => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "verdict": "NotMatched",
                        "reasons": reasons,
                        "singularities": singularities.as_ref().map(|s| s.components.iter()
                            .map(|c| c.kind.to_string()).collect::<Vec<_>>()),
                    })
                );
            } else {
                println!("verdict: no configuration matched");
                for r in reasons {
                    println!("  - {}", r);
                }
                if let Some(s) = singularities {
                    for c in &s.components {
                        println!("  singular point: {}", c.kind);
                    }
                }
            }
            negative()
        }
        BoundaryVerdict::Rejected { reason } => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "verdict": "Rejected", "reason": reason })
                );
            } else {
                println!("verdict: rejected ({})", reason);
            }
            negative()
        }
    }
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

fn load_catalog(templates: Option<&str>) -> Result<Catalog, String> {
    let mut catalog = Catalog::builtin();
    if let Some(path) = templates {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
        catalog
            .load_extra(&text)
            .map_err(|e| format!("{}: {}", path, e))?;
    }
    Ok(catalog)
}

fn family_params_from(parsed: &args::Parsed) -> Result<FamilyParams, String> {
    Ok(FamilyParams {
        t: int_flag(parsed, "t")?,
        t2: int_flag(parsed, "t2")?,
        m: int_flag(parsed, "m")?,
        n: int_flag(parsed, "n")?,
        twig: match parsed.value("twig") {
            None => None,
            Some(text) => Some(Twig::parse(text).map_err(|e| format!("{}", e))?),
        },
    })
}

fn parse_family_index(text: &str) -> Result<u32, String> {
    let trimmed = text.trim_start_matches('(').trim_end_matches(')');
    trimmed
        .parse::<u32>()
        .map_err(|_| format!("bad family index `{}`", text))
}

fn cmd_catalog(rest: &[String]) -> Result<ExitCode, String> {
    let (op, rest) = rest
        .split_first()
        .ok_or("catalog needs an operation: gen|match|verify|field-condition")?;
    match op.as_str() {
        "gen" => catalog_gen(rest),
        "match" => catalog_match(rest),
        "verify" => catalog_verify(rest),
        "field-condition" => catalog_field_condition(rest),
        other => Err(format!("unknown catalog operation `{}`", other)),
    }
}

const PARAM_FLAGS: [FlagSpec; 7] = [
    FlagSpec {
        name: "t",
        takes_value: true,
    },
    FlagSpec {
        name: "t2",
        takes_value: true,
    },
    FlagSpec {
        name: "m",
        takes_value: true,
    },
    FlagSpec {
        name: "n",
        takes_value: true,
    },
    FlagSpec {
        name: "twig",
        takes_value: true,
    },
    FlagSpec {
        name: "strict",
        takes_value: false,
    },
    FlagSpec {
        name: "templates",
        takes_value: true,
    },
];

fn catalog_gen(rest: &[String]) -> Result<ExitCode, String> {
    let mut flags = PARAM_FLAGS.to_vec();
    flags.push(FlagSpec {
        name: "json",
        takes_value: false,
    });
    let parsed = parse(rest, &flags)?;
    let [index_text] = parsed.positional.as_slice() else {
        return Err("catalog gen needs exactly one family index".into());
    };
    let index = parse_family_index(index_text)?;
    let catalog = load_catalog(parsed.value("templates"))?;
    let strict = parsed.switch("strict");
    let params = catalog
        .fill_defaults(index, &family_params_from(&parsed)?, strict)
        .map_err(|e| format!("{}", e))?;
    let inst = catalog
        .instantiate(index, &params, strict)
        .map_err(|e| format!("{}", e))?;
    if parsed.switch("json") {
        println!(
            "{}",
            serde_json::json!({
                "family": index,
                "params": params.to_string(),
                "graph": io::graph_to_json(&inst.graph),
            })
        );
    } else {
        println!(
            "# family ({}) group {} params: {}",
            index,
            inst.id.group(),
            params
        );
        print!("{}", inst.graph.to_text());
    }
    ok()
}

fn catalog_match(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[
            FlagSpec {
                name: "strict",
                takes_value: false,
            },
            FlagSpec {
                name: "json",
                takes_value: false,
            },
            FlagSpec {
                name: "templates",
                takes_value: true,
            },
        ],
    )?;
    let [path] = parsed.positional.as_slice() else {
        return Err("catalog match needs exactly one file".into());
    };
    let g = io::load_graph(path)?;
    let catalog = load_catalog(parsed.value("templates"))?;
    let strict = parsed.switch("strict");
    let matches = catalog.match_graph(&g, strict);
    if parsed.switch("json") {
        println!(
            "{}",
            serde_json::json!({
                "matches": matches.iter()
                    .map(|(id, p)| serde_json::json!({"family": id.0, "params": p.to_string()}))
                    .collect::<Vec<_>>(),
            })
        );
        return if matches.is_empty() { negative() } else { ok() };
    }
    if matches.is_empty() {
        println!("no configuration matches");
        // advisory second pass: would the weighted graph match under its own
        // full symmetry orbits?
        let mut relabeled = g.clone();
        plumbing_core::dual_graph::assign_automorphism_orbits(&mut relabeled);
        let loose = catalog.match_graph(&relabeled, strict);
        if let Some((id, p)) = loose.first() {
            println!(
                "note: the weighted graph matches family {} with {} under canonical \
                 orbits; the supplied orbit partition is what fails",
                id, p
            );
        }
        return negative();
    }
    let (id, p) = &matches[0];
    println!("family {} with {}", id, p);
    for (id, p) in matches.iter().skip(1) {
        println!("also matches: family {} with {}", id, p);
    }
    if let Ok(report) = analyze_singularities(&g) {
        if let Some(types) = report.du_val_types() {
            println!("singularities: Du Val {}", format_duval_types(&types));
        }
    }
    ok()
}

fn catalog_verify(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[
            FlagSpec {
                name: "max-t",
                takes_value: true,
            },
            FlagSpec {
                name: "max-t2",
                takes_value: true,
            },
            FlagSpec {
                name: "max-m",
                takes_value: true,
            },
            FlagSpec {
                name: "twig-det",
                takes_value: true,
            },
            FlagSpec {
                name: "n-span",
                takes_value: true,
            },
            FlagSpec {
                name: "strict",
                takes_value: false,
            },
            FlagSpec {
                name: "json",
                takes_value: false,
            },
            FlagSpec {
                name: "templates",
                takes_value: true,
            },
        ],
    )?;
    if !parsed.positional.is_empty() {
        return Err(format!("unexpected argument `{}`", parsed.positional[0]));
    }
    let max_t = int_flag(&parsed, "max-t")?.unwrap_or(1);
    let max_t2 = int_flag(&parsed, "max-t2")?.unwrap_or(max_t);
    let max_m = int_flag(&parsed, "max-m")?.unwrap_or(3);
    let n_span = int_flag(&parsed, "n-span")?.unwrap_or(1);
    let twig_pool = match int_flag(&parsed, "twig-det")? {
        Some(d) => admissible_twigs_up_to(d),
        None => match std::env::var("PLUMBING_TWIG_POOL") {
            Ok(path) => io::load_twig_pool(&path)?,
            Err(_) => admissible_twigs_up_to(8),
        },
    };
    let bounds = EnumBounds {
        max_t,
        max_t2,
        max_m,
        n_span,
        twig_pool,
    };
    let strict = parsed.switch("strict");
    let catalog = load_catalog(parsed.value("templates"))?;
    let json = parsed.switch("json");

    let mut all_pass = true;
    let mut rows = Vec::new();
    for index in catalog.indices() {
        let instances = catalog
            .enumerate_instances(index, &bounds, strict)
            .map_err(|e| format!("family {}: {}", index, e))?;
        let mut failures: Vec<String> = Vec::new();
        for inst in &instances {
            if !is_forest(&inst.graph) {
                failures.push(format!("{}: not a forest", inst.params));
                continue;
            }
            if !orbit_audit(&inst.graph).passed() {
                failures.push(format!("{}: orbit audit", inst.params));
                continue;
            }
            let exceptional = inst.graph.exceptional_part();
            if !is_negative_definite(&intersection_matrix(&exceptional)) {
                failures.push(format!("{}: exceptional part indefinite", inst.params));
                continue;
            }
            let want = match mnc_target_shape(inst.id, &inst.params) {
                Ok(w) => w,
                Err(e) => {
                    failures.push(format!("{}: {}", inst.params, e));
                    continue;
                }
            };
            match normalize(&inst.graph) {
                Ok((final_graph, _, shape)) => {
                    if shape != want {
                        failures.push(format!("{}: reached {}", inst.params, shape));
                    } else if !morrow_audit(&final_graph).passed() {
                        failures.push(format!("{}: chain-shape audit", inst.params));
                    }
                }
                Err(e) => failures.push(format!("{}: {}", inst.params, e)),
            }
        }
        let pass = failures.is_empty();
        all_pass &= pass;
        rows.push((index, instances.len(), pass, failures));
    }
    if json {
        println!(
            "{}",
            serde_json::json!({
                "families": rows.iter().map(|(i, n, pass, fails)| serde_json::json!({
                    "family": i, "instances": n, "pass": pass, "failures": fails,
                })).collect::<Vec<_>>(),
                "all_pass": all_pass,
            })
        );
    } else {
        for (index, count, pass, failures) in &rows {
            println!(
                "({:>2}) {}  {:>3} instances",
                index,
                if *pass { "PASS" } else { "FAIL" },
                count
            );
            for f in failures {
                println!("      {}", f);
            }
        }
        let passed = rows.iter().filter(|r| r.2).count();
        println!("{}/{} families pass", passed, rows.len());
    }
    if all_pass {
        ok()
    } else {
        negative()
    }
}

fn catalog_field_condition(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(rest, &PARAM_FLAGS)?;
    let [index_text] = parsed.positional.as_slice() else {
        return Err("catalog field-condition needs exactly one family index".into());
    };
    let index = parse_family_index(index_text)?;
    let catalog = load_catalog(parsed.value("templates"))?;
    let strict = parsed.switch("strict");
    let params = catalog
        .fill_defaults(index, &family_params_from(&parsed)?, strict)
        .map_err(|e| format!("{}", e))?;
    let situation = field_condition(&catalog, FamilyId(index), &params, strict)
        .map_err(|e| format!("{}", e))?;
    println!("{}", situation);
    ok()
}

// ---------------------------------------------------------------------------
// dp
// ---------------------------------------------------------------------------

fn cmd_dp(rest: &[String]) -> Result<ExitCode, String> {
    let (op, rest) = rest
        .split_first()
        .ok_or("dp needs an operation: contains-a2|table")?;
    match op.as_str() {
        "contains-a2" => dp_contains(rest),
        "table" => dp_table(rest),
        other => Err(format!("unknown dp operation `{}`", other)),
    }
}

fn parse_types(text: &str) -> Result<Vec<DuValType>, String> {
    text.split(',')
        .map(|p| DuValType::parse(p.trim()).ok_or_else(|| format!("bad singularity type `{}`", p)))
        .collect()
}

fn dp_contains(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[
            FlagSpec {
                name: "degree",
                takes_value: true,
            },
            FlagSpec {
                name: "type",
                takes_value: true,
            },
            FlagSpec {
                name: "rational-point",
                takes_value: false,
            },
            FlagSpec {
                name: "json",
                takes_value: false,
            },
        ],
    )?;
    if !parsed.positional.is_empty() {
        return Err(format!("unexpected argument `{}`", parsed.positional[0]));
    }
    let degree = int_flag(&parsed, "degree")?.ok_or("dp contains-a2 needs --degree")?;
    let types = parse_types(parsed.value("type").ok_or("dp contains-a2 needs --type")?)?;
    let verdict = contains_affine_plane_duval(degree, &types).map_err(|e| format!("{}", e))?;
    let resolved = match (verdict, parsed.switch("rational-point")) {
        (DuValVerdict::NeedsSmoothRationalPoint, true) => DuValVerdict::Contains,
        (v, _) => v,
    };
    if parsed.switch("json") {
        println!(
            "{}",
            serde_json::json!({
                "degree": degree,
                "type": format_duval_types(&types),
                "verdict": resolved.to_string(),
            })
        );
    } else {
        println!("{}", resolved);
    }
    match resolved {
        DuValVerdict::NotContains => negative(),
        _ => ok(),
    }
}

fn dp_table(rest: &[String]) -> Result<ExitCode, String> {
    let parsed = parse(
        rest,
        &[FlagSpec {
            name: "json",
            takes_value: false,
        }],
    )?;
    if !parsed.positional.is_empty() {
        return Err(format!("unexpected argument `{}`", parsed.positional[0]));
    }
    let mut rows: Vec<(i64, &str, &str)> = Vec::new();
    for (d, ty) in HIGH_DEGREE_TABLE {
        rows.push((
            d,
            ty,
            if d == 8 {
                "smooth-rational-point"
            } else {
                "yes"
            },
        ));
    }
    for (d, ty) in LOW_DEGREE_TABLE {
        rows.push((d, ty, "yes"));
    }
    rows.sort_by(|a, b| (b.0, a.1).cmp(&(a.0, b.1)));
    if parsed.switch("json") {
        println!(
            "{}",
            serde_json::json!({
                "rows": rows.iter().map(|(d, t, v)| serde_json::json!({
                    "degree": d, "type": t, "contains_a2": v,
                })).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("degree\ttype\tcontains_a2");
        for (d, t, v) in rows {
            println!("{}\t{}\t{}", d, t, v);
        }
    }
    ok()
}
