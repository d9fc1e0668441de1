use std::fmt::Write;
use std::path::{Path, PathBuf};

use chanmetric::embedding::{
    embed_points, embed_weight, embed_weight_with, verify_linear, verify_points, EmbeddingReport,
};
use chanmetric::metrization::{metrize, Certificate, MetrizationResult, Mode, Node, Step};
use chanmetric::minimal::{minimize_dimension, minimize_dimension_points, OptimalityReport};
use chanmetric::orders::{decoder_agreement_oracle, matched, same_weak_order, weak_order, AgreementReport};
use chanmetric::rational::{format_rat, int, parse_rat, rat};
use chanmetric::subsets::{
    cap_from_sym, check_realizable, realize, scale_shift, solve_cap, solve_sym, subset_label, ScalingWitness,
};
use chanmetric::{Channel, Direction, DistanceMatrix, Rat, SquareMatrix, SubsetVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::format::{
    format_embedding, format_family, format_matrix, format_rows, parse_channel, parse_distance, parse_embedding,
    parse_matrix, parse_subset_vector, parse_weight, Embedding, ParseError,
};
use crate::{Cli, Command, GenKind, MatrixKind, SetpatternAction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn success(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn failure(stderr: String) -> Self {
        Self {
            code: 1,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Core(#[from] chanmetric::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// Text and JSON renderings of one result, plus its exit code.
struct Report {
    code: i32,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self { code: 0, text, json }
    }
}

pub(crate) fn execute(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(report) => Outcome {
            code: report.code,
            stdout: if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.json).expect("serializable"))
            } else {
                report.text
            },
            stderr: String::new(),
        },
        Err(e) => Outcome::failure(format!("error: {e}\n")),
    }
}

fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Order { file, asc, .. } => order(file, if *asc { Direction::Ascending } else { Direction::Descending }),
        Command::Metrize { channel, mode } => metrize_cmd(channel, *mode),
        Command::Equiv { a, b, kind } => equiv(a, b, *kind),
        Command::Matched {
            channel,
            distance,
            oracle,
        } => matched_cmd(channel, distance, *oracle),
        Command::Setpattern {
            action: SetpatternAction::Solve { cap, file, .. },
        } => setpattern(file, *cap),
        Command::Embed {
            weight,
            distance,
            minimal,
            scale,
            shift,
        } => match (weight, distance) {
            (Some(w), _) => embed_weight_cmd(w, *minimal, scale.as_deref().zip(shift.as_deref())),
            (_, Some(d)) => embed_distance_cmd(d, *minimal),
            _ => Err(CliError::Usage("one of --weight or --distance is required".into())),
        },
        Command::VerifyEmbed { embedding, target } => verify_embed(embedding, target),
        Command::Gen { kind, n, seed } => generate(*kind, *n, *seed),
    }
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> std::result::Result<T, ParseError>) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn rat_arg(text: &str, what: &str) -> Result<Rat> {
    parse_rat(text).ok_or_else(|| CliError::Usage(format!("{what}: malformed rational {text:?}")))
}

fn matrix_json(m: &SquareMatrix) -> Value {
    json!(m.rows().map(|r| r.iter().map(format_rat).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn vector_json(v: &SubsetVector) -> Value {
    json!(v.values().iter().map(format_rat).collect::<Vec<_>>())
}

/// `{1}=3 {2}=2 {1,2}=3 …`
fn labeled(v: &SubsetVector) -> String {
    v.iter()
        .map(|(mask, value)| format!("{}={}", subset_label(mask), format_rat(value)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn order(file: &Path, direction: Direction) -> Result<Report> {
    let m = load(file, parse_matrix)?;
    let ranks = weak_order(&m, direction).rows();
    Ok(Report::ok(
        format_rows(&ranks),
        json!({ "direction": direction, "ranks": ranks }),
    ))
}

fn node_entry(node: Node, row: usize, column: usize) -> [usize; 2] {
    debug_assert!(node == Node::at(row, column));
    [row + 1, column + 1]
}

fn step_json(s: &Step) -> Value {
    json!({
        "from": node_entry(s.from, s.rows.0, s.column),
        "rel": s.rel,
        "to": node_entry(s.to, s.rows.1, s.column),
        "column": s.column + 1,
        "rows": [s.rows.0 + 1, s.rows.1 + 1],
    })
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Cycle(steps) => json!({ "kind": "cycle", "steps": steps.iter().map(step_json).collect::<Vec<_>>() }),
        Certificate::Diagonal { index, row } => json!({ "kind": "diagonal", "index": index + 1, "row": row + 1 }),
        Certificate::OffDiagonalZero { column, row } => {
            json!({ "kind": "off_diagonal_zero", "column": column + 1, "row": row + 1 })
        }
    }
}

fn metrize_cmd(file: &Path, mode: Mode) -> Result<Report> {
    let channel = load(file, parse_channel)?;
    Ok(match metrize(&channel, mode) {
        MetrizationResult::Matched(found) => {
            let classes: Vec<String> = found
                .classes
                .iter()
                .map(|c| {
                    let members: Vec<String> = c.members.iter().map(|p| p.to_string()).collect();
                    format!("{}={}", members.join("="), c.value)
                })
                .collect();
            let mut text = format!("# matched (mode {mode})\n");
            if !classes.is_empty() {
                writeln!(text, "# classes: {}", classes.join(" < ")).expect("write to string");
            }
            text.push_str(&format_matrix(found.distance.matrix()));
            let classes_json: Vec<Value> = found
                .classes
                .iter()
                .map(|c| {
                    json!({
                        "pairs": c.members.iter().map(|p| [p.lo() + 1, p.hi() + 1]).collect::<Vec<_>>(),
                        "value": c.value,
                    })
                })
                .collect();
            Report::ok(
                text,
                json!({
                    "matched": true,
                    "mode": mode,
                    "distance": matrix_json(found.distance.matrix()),
                    "classes": classes_json,
                }),
            )
        }
        MetrizationResult::Infeasible(cert) => Report {
            code: 2,
            text: format!("# not metrizable (mode {mode})\n{cert}"),
            json: json!({ "matched": false, "mode": mode, "certificate": certificate_json(&cert) }),
        },
    })
}

fn equiv(a: &Path, b: &Path, kind: MatrixKind) -> Result<Report> {
    let (ma, mb, direction) = match kind {
        MatrixKind::Distance => (
            load(a, parse_distance)?.matrix().clone(),
            load(b, parse_distance)?.matrix().clone(),
            Direction::Ascending,
        ),
        MatrixKind::Channel => (
            load(a, parse_channel)?.matrix().clone(),
            load(b, parse_channel)?.matrix().clone(),
            Direction::Descending,
        ),
    };
    let same = same_weak_order(&ma, &mb, direction)?;
    let kind_name = match kind {
        MatrixKind::Distance => "distance",
        MatrixKind::Channel => "channel",
    };
    Ok(Report::ok(
        format!("equivalent: {}\n", yes(same)),
        json!({ "equivalent": same, "as": kind_name }),
    ))
}

fn members(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn oracle_lines(r: &AgreementReport, n: usize) -> String {
    match &r.witness {
        None => format!("oracle: decoders agree on all {} codes and {n} received symbols\n", r.codes_checked),
        Some(w) => format!(
            "oracle: decoders differ for code {} receiving {}: maximum likelihood {}, minimum distance {}\n",
            members(w.code.members()),
            w.received + 1,
            members(&w.mld),
            members(&w.mdd)
        ),
    }
}

fn matched_cmd(channel: &Path, distance: &Path, oracle: bool) -> Result<Report> {
    let p = load(channel, parse_channel)?;
    let d = load(distance, parse_distance)?;
    let verdict = matched(&p, &d)?;
    let mut text = format!("matched: {}\n", yes(verdict));
    let mut out = json!({ "matched": verdict });
    if oracle {
        let r = decoder_agreement_oracle(&p, &d)?;
        text.push_str(&oracle_lines(&r, p.n()));
        out["oracle"] = json!({
            "agree": r.agree,
            "codes_checked": r.codes_checked,
            "witness": r.witness.as_ref().map(|w| json!({
                "code": w.code.members().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "received": w.received + 1,
                "mld": w.mld.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "mdd": w.mdd.iter().map(|i| i + 1).collect::<Vec<_>>(),
            })),
        });
    }
    Ok(Report::ok(text, out))
}

fn witness_json(w: &ScalingWitness) -> Value {
    json!({
        "m": format_rat(&w.m),
        "r": format_rat(&w.r),
        "k": format_rat(&w.k),
        "x_prime": vector_json(&w.x_prime),
    })
}

fn setpattern(file: &Path, cap: bool) -> Result<Report> {
    let c = load(file, parse_subset_vector)?;
    let mut text = String::new();
    let mut out = json!({ "pattern": if cap { "cap" } else { "sym" } });
    let x = if cap {
        solve_cap(&c)
    } else {
        let through = cap_from_sym(&c);
        writeln!(text, "cap = {}", labeled(&through)).expect("write to string");
        out["cap"] = vector_json(&through);
        solve_sym(&c)
    };
    let realizable = check_realizable(&x);
    writeln!(text, "x = {}", labeled(&x)).expect("write to string");
    writeln!(text, "realizable: {}", yes(realizable)).expect("write to string");
    out["x"] = vector_json(&x);
    out["realizable"] = json!(realizable);
    if realizable {
        let family = realize(&x)?;
        writeln!(text, "realization (N = {}):", family.ground_size()).expect("write to string");
        text.push_str(&format_family(&family));
        out["family"] = json!(format_family(&family).lines().collect::<Vec<_>>());
    } else if !cap {
        let w = scale_shift(&x);
        writeln!(
            text,
            "scaled: m = {}, r = {}, k = {}",
            format_rat(&w.m),
            format_rat(&w.r),
            format_rat(&w.k)
        )
        .expect("write to string");
        writeln!(text, "x' = {}", labeled(&w.x_prime)).expect("write to string");
        out["scaled"] = witness_json(&w);
    }
    Ok(Report::ok(text, out))
}

fn embedding_json(e: &Embedding) -> Value {
    let words = e.words();
    json!({
        "kind": e.kind(),
        "n": words.len(),
        "N": words.first().map_or(0, |w| w.len()),
        "m": e.scale().map(|s| format_rat(&s.m)),
        "k": e.scale().map(|s| format_rat(&s.k)),
        "words": words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    })
}

fn optimum_comment(report: &OptimalityReport, x_star: &SubsetVector) -> String {
    format!(
        "# minimal: N* = {}, incumbent {}, nodes explored {}\n# x* = {}\n",
        report.n_star,
        report.incumbent,
        report.nodes_explored,
        labeled(x_star)
    )
}

fn with_optimum(e: &Embedding, report: &OptimalityReport, x_star: &SubsetVector) -> Report {
    let mut out = embedding_json(e);
    out["optimality"] = json!({
        "N_star": report.n_star,
        "incumbent": report.incumbent,
        "nodes_explored": report.nodes_explored,
    });
    out["x_star"] = vector_json(x_star);
    Report::ok(optimum_comment(report, x_star) + &format_embedding(e), out)
}

fn plain(e: Embedding) -> Report {
    let json = embedding_json(&e);
    Report::ok(format_embedding(&e), json)
}

fn embed_weight_cmd(file: &Path, minimal: bool, explicit: Option<(&str, &str)>) -> Result<Report> {
    let w = load(file, parse_weight)?;
    if minimal {
        let opt = minimize_dimension(&w)?;
        return Ok(with_optimum(&Embedding::Linear(opt.embedding), &opt.report, &opt.x_star));
    }
    let e = match explicit {
        Some((m, r)) => embed_weight_with(&w, rat_arg(m, "--scale")?, rat_arg(r, "--shift")?)?,
        None => embed_weight(&w)?,
    };
    Ok(plain(Embedding::Linear(e)))
}

fn embed_distance_cmd(file: &Path, minimal: bool) -> Result<Report> {
    let d = load(file, parse_distance)?;
    if minimal {
        let opt = minimize_dimension_points(&d)?;
        return Ok(with_optimum(&Embedding::Points(opt.embedding), &opt.report, &opt.x_star));
    }
    Ok(plain(Embedding::Points(embed_points(&d)?)))
}

fn report_text(r: &EmbeddingReport, declared: bool) -> String {
    let mut text = format!("ok: {}\n", yes(r.ok));
    match &r.scale {
        Some(s) => writeln!(
            text,
            "m = {}, k = {} ({})",
            format_rat(&s.m),
            format_rat(&s.k),
            if declared { "declared" } else { "solved" }
        ),
        None => writeln!(text, "m = -, k = -"),
    }
    .expect("write to string");
    writeln!(text, "weak order preserved: {}", yes(r.weak_order_preserved)).expect("write to string");
    writeln!(text, "injective: {}", yes(r.injective)).expect("write to string");
    if r.violations.is_empty() {
        text.push_str("violations: none\n");
    }
    for v in &r.violations {
        writeln!(
            text,
            "violation at {}: target {}, expected {}, actual {}",
            v.item,
            format_rat(&v.target),
            format_rat(&v.expected),
            v.actual
        )
        .expect("write to string");
    }
    text
}

fn verify_embed(embedding: &Path, target: &Path) -> Result<Report> {
    let e = load(embedding, parse_embedding)?;
    let declared = e.scale().cloned();
    let report = match &e {
        Embedding::Linear(lin) => verify_linear(lin, &load(target, parse_weight)?, declared.as_ref())?,
        Embedding::Points(pts) => verify_points(pts, &load(target, parse_distance)?, declared.as_ref())?,
    };
    let json = json!({
        "ok": report.ok,
        "m": report.scale.as_ref().map(|s| format_rat(&s.m)),
        "k": report.scale.as_ref().map(|s| format_rat(&s.k)),
        "declared": declared.is_some(),
        "weak_order_preserved": report.weak_order_preserved,
        "injective": report.injective,
        "violations": report.violations.iter().map(|v| json!({
            "item": v.item,
            "target": format_rat(&v.target),
            "expected": format_rat(&v.expected),
            "actual": v.actual,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::ok(report_text(&report, declared.is_some()), json))
}

const GEN_MAX_N: usize = 64;

fn generate(kind: GenKind, n: usize, seed: u64) -> Result<Report> {
    if n == 0 || n > GEN_MAX_N {
        return Err(CliError::Usage(format!("N must be in 1..={GEN_MAX_N}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrix = match kind {
        GenKind::Channel => {
            let rows = (0..n)
                .map(|i| {
                    let mut weights: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
                    if weights.iter().all(|&w| w == 0) {
                        weights[i] = 1;
                    }
                    let total: i64 = weights.iter().sum();
                    weights.into_iter().map(|w| rat(w, total)).collect()
                })
                .collect();
            Channel::from_rows(rows)?.matrix().clone()
        }
        GenKind::Distance => {
            let upper: Vec<i64> = (0..n * n).map(|_| rng.gen_range(1..=5)).collect();
            DistanceMatrix::from_pairs(n, |i, j| int(upper[i * n + j]))?.matrix().clone()
        }
    };
    Ok(Report::ok(format_matrix(&matrix), json!({ "matrix": matrix_json(&matrix) })))
}
