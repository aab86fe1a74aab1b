mod args;

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{
    Cli, Command, Emit, ExponentsArgs, Format, InputArgs, LabelArgs, PosetArgs, SelftestArgs,
    VerifyArgs,
};
use matfree::chordal::{find_chordless_cycle, is_chordal, peo_exponents};
use matfree::generate::{random_chordal, random_graph, random_strongly_chordal, rng_from_seed};
use matfree::graph::{named, Graph};
use matfree::invariants::{check_terao_factorization, exponents_from_labeling};
use matfree::io;
use matfree::labeling::{
    brute_force_mat_labeling, construct_with_trace, find_mat_peo, verify_mat_labeling,
    BruteOptions, EdgeLabeling, LabelingError,
};
use matfree::poset::{build_poset, first_crown};
use matfree::strong::{find_any_sun, find_induced_subgraph, is_strongly_chordal, is_unit_interval};

enum CliError {
    /// Bad input or usage: exit 1.
    Input(String),
    /// The mathematics says no: exit 2, with a JSON report on stdout.
    Rejected(Value),
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap would use 2, which is reserved for rejections
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Classify(a) => cmd_classify(&cli, a),
        Command::Label(a) => cmd_label(&cli, a),
        Command::Verify(a) => cmd_verify(&cli, a),
        Command::Exponents(a) => cmd_exponents(&cli, a),
        Command::Poset(a) => cmd_poset(&cli, a),
        Command::Selftest(a) => cmd_selftest(&cli, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Rejected(report)) => {
            emit(&render(&report));
            ExitCode::from(2)
        }
    }
}

/// Stdout write that tolerates a closed pipe (`| head`).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_graph(cli: &Cli, path: &Path) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let by_ext = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        Some("txt") | Some("edges") => Format::Edges,
        _ => Format::Auto,
    };
    let fmt = if cli.format == Format::Auto {
        by_ext
    } else {
        cli.format
    };
    let parsed = match fmt {
        Format::Json => io::parse_graph_json(&text),
        Format::Edges => io::parse_edge_list(&text),
        Format::Auto => io::parse_graph(&text),
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> CliResult {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn classification(g: &Graph) -> Value {
    let chordal = is_chordal(g);
    let strongly = chordal && is_strongly_chordal(g);
    let unit = strongly && is_unit_interval(g);
    let witness = if !chordal {
        json!({"chordless_cycle": find_chordless_cycle(g)})
    } else if !strongly {
        json!({"sun": find_any_sun(g).map(|w| to_json(&w))})
    } else if !unit {
        let found = [("claw", named::claw()), ("net", named::net())]
            .into_iter()
            .find_map(|(name, p)| find_induced_subgraph(g, &p).map(|m| (name, m)));
        match found {
            Some((name, m)) => json!({"forbidden": name, "vertices": m}),
            None => Value::Null,
        }
    } else {
        Value::Null
    };
    json!({
        "chordal": chordal,
        "strongly_chordal": strongly,
        "unit_interval": unit,
        "witness": witness,
    })
}

fn cmd_classify(cli: &Cli, a: &InputArgs) -> CliResult {
    let g = read_graph(cli, &a.input)?;
    let report = classification(&g);
    if cli.verbose {
        eprintln!(
            "{} vertices, {} edges: chordal={} strongly_chordal={} unit_interval={}",
            g.vertex_count(),
            g.edge_count(),
            report["chordal"],
            report["strongly_chordal"],
            report["unit_interval"]
        );
    }
    emit(&render(&report));
    Ok(())
}

fn rejection(e: LabelingError) -> CliError {
    match e {
        LabelingError::NotStronglyChordal(r) => CliError::Rejected(json!({
            "error": "not strongly chordal",
            "witness": to_json(&*r),
        })),
        other => CliError::Input(other.to_string()),
    }
}

fn cmd_label(cli: &Cli, a: &LabelArgs) -> CliResult {
    let g = read_graph(cli, &a.input)?;
    let c = construct_with_trace(&g).map_err(rejection)?;
    let mut report = io::labeling_to_json(&c.labeling);
    if a.emit == Emit::Trace {
        report["trace"] = to_json(&c);
    }
    if let Some(p) = &a.dot {
        fs::write(p, io::labeling_to_dot(&c.labeling))?;
    }
    if cli.verbose {
        eprintln!(
            "block sizes {:?}, exponents {}",
            c.labeling.block_sizes(),
            exponents_from_labeling(&c.labeling).map_err(|v| CliError::Input(v.to_string()))?
        );
    }
    write_or_print(a.out.as_ref(), &render(&report))
}

fn read_labeling_for(g: &Graph, path: &Path) -> Result<EdgeLabeling, CliError> {
    let lab = io::parse_labeling(&read_text(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    io::relabel_onto(g, &lab)
        .map_err(|e| CliError::Input(format!("labeling does not match graph: {e}")))
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs) -> CliResult {
    let g = read_graph(cli, &a.graph)?;
    let lab = read_labeling_for(&g, &a.labeling)?;
    match verify_mat_labeling(&lab) {
        Ok(()) => {
            if cli.verbose {
                let peo = find_mat_peo(&lab).map(|o| o.0);
                eprintln!("MAT-labeling; MAT-PEO {peo:?}");
            }
            emit(&render(&json!({"ok": true})));
            Ok(())
        }
        Err(v) => {
            if cli.verbose {
                eprintln!("{v}");
            }
            Err(CliError::Rejected(
                json!({"ok": false, "violation": to_json(&v)}),
            ))
        }
    }
}

fn cmd_exponents(cli: &Cli, a: &ExponentsArgs) -> CliResult {
    let g = read_graph(cli, &a.graph)?;
    let (exps, source) = match &a.labeling {
        Some(p) => {
            let lab = read_labeling_for(&g, p)?;
            let exps = exponents_from_labeling(&lab).map_err(|v| {
                CliError::Rejected(json!({"error": "not a MAT-labeling", "violation": to_json(&v)}))
            })?;
            (exps, "labeling")
        }
        None => match peo_exponents(&g) {
            Some(e) => (e, "peo"),
            None => {
                return Err(CliError::Rejected(json!({
                    "error": "graph is not chordal and no labeling was given",
                    "witness": {"chordless_cycle": find_chordless_cycle(&g)},
                })))
            }
        },
    };
    let check = check_terao_factorization(&g, &exps)?;
    if cli.verbose {
        eprintln!("exponents {exps} from {source}; factorization {check}");
    }
    emit(&render(
        &json!({"exponents": exps.values(), "chromatic_factors_check": check, "source": source}),
    ));
    Ok(())
}

fn cmd_poset(cli: &Cli, a: &PosetArgs) -> CliResult {
    let g = read_graph(cli, &a.input)?;
    let p = match build_poset(&g) {
        Ok(p) => p,
        Err(_) => {
            return Err(CliError::Rejected(json!({
                "error": "graph is not chordal",
                "witness": {"chordless_cycle": find_chordless_cycle(&g)},
            })))
        }
    };
    let crown = first_crown(&p);
    if cli.verbose {
        eprintln!(
            "{} nodes, {} cover pairs, crown: {}",
            p.len(),
            p.cover_pairs().len(),
            crown.is_some()
        );
    }
    let text = if a.dot {
        io::poset_to_dot(&p)
    } else {
        let mut v = io::poset_to_json(&p);
        v["crown"] = match &crown {
            Some(w) => json!({"k": w.k, "bottoms": w.bottom_sets(&p), "tops": w.top_sets(&p)}),
            None => Value::Null,
        };
        render(&v)
    };
    write_or_print(a.out.as_ref(), &text)
}

fn cmd_selftest(cli: &Cli, a: &SelftestArgs) -> CliResult {
    if a.max_vertices < 3 {
        return Err(CliError::Input("--max-vertices must be at least 3".into()));
    }
    let opts = BruteOptions {
        max_edges: a.max_brute_edges,
        ..Default::default()
    };
    let mut mismatches = Vec::new();
    let mut brute_checked = 0usize;
    let mut labeled = 0usize;
    for i in 0..a.count {
        let mut rng = rng_from_seed(a.seed.wrapping_mul(1_000_003).wrapping_add(i as u64));
        let n = 3 + (i as u32 % (a.max_vertices - 2));
        let p = [0.3, 0.5, 0.7][i % 3];
        let g = match i % 3 {
            0 => random_graph(&mut rng, n, p),
            1 => random_chordal(&mut rng, n, p),
            _ => random_strongly_chordal(&mut rng, n, p),
        };
        let strongly = is_strongly_chordal(&g);
        if g.edge_count() <= a.max_brute_edges {
            brute_checked += 1;
            let brute = brute_force_mat_labeling(&g, &opts)?.is_some();
            if brute != strongly {
                mismatches.push(json!({"graph": io::graph_to_json(&g), "strongly_chordal": strongly, "brute": brute}));
            }
        }
        if strongly {
            let ok = construct_with_trace(&g).ok().is_some_and(|c| {
                exponents_from_labeling(&c.labeling)
                    .is_ok_and(|e| check_terao_factorization(&g, &e).unwrap_or(false))
            });
            labeled += 1;
            if !ok {
                mismatches.push(json!({"graph": io::graph_to_json(&g), "construct": false}));
            }
        }
    }
    let report = json!({
        "seed": a.seed,
        "graphs": a.count,
        "brute_checked": brute_checked,
        "labeled": labeled,
        "mismatches": mismatches,
    });
    if cli.verbose {
        eprintln!(
            "{} graphs, {} mismatches",
            a.count,
            report["mismatches"].as_array().map_or(0, Vec::len)
        );
    }
    if report["mismatches"]
        .as_array()
        .is_some_and(|m| !m.is_empty())
    {
        return Err(CliError::Rejected(report));
    }
    emit(&render(&report));
    Ok(())
}
