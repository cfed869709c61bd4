//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or check fails, 2 on
//! malformed input.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::geometry::{
    find_specialization_weight, gin, tangent_dimension_with, verify_specialization,
    weight_initial_ideal, WeightVector, DEFAULT_GIN_TRIALS,
};
use crate::groebner::{GradedIdeal, SyzygySource};
use crate::hilbert::{
    hilbert_function, ideal_hilbert_polynomial, lex_segment, regularity, stabilization_bound,
    HilbertTarget,
};
use crate::monomial_ideal::{
    enumerate_borel_with_hf, enumerate_saturated_borel_with_hp, MonomialIdeal, DEFAULT_NODE_CAP,
};
use crate::parse::{parse_generators, parse_ideal_document, parse_int_list};
use crate::ring::{MonomialOrder, Ring, UniPoly};
use crate::scenarios::{builtin_cases, parse_dataset, run_cases, RunOptions, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "lexseg",
    version,
    about = "Borel-fixed ideals, lex segments and tangent spaces of standard-graded Hilbert schemes"
)]
struct Cli {
    /// Monomial order: lex, grevlex or weight:w0,w1,...
    #[arg(long, global = true)]
    order: Option<String>,
    /// Largest degree to compute or search
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Seed for random coordinate changes
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Random coordinate changes per generic initial ideal
    #[arg(long, global = true, default_value_t = DEFAULT_GIN_TRIALS, value_parser = parse_trials)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct IdealInput {
    /// Ideal document (`ring ...`, `order ...`, `ideal ...`); `-` reads stdin
    file: Option<PathBuf>,
    /// Generators given inline instead of a file
    #[arg(long, conflicts_with = "file")]
    ideal: Option<String>,
    /// Variables for --ideal, e.g. "x y z"
    #[arg(long, requires = "ideal")]
    ring: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct TargetInput {
    /// Values dim I_d for d = 0, 1, ..., comma separated
    #[arg(long, value_name = "LIST")]
    h: String,
    /// Hilbert polynomial of S/I continuing the values, e.g. 4d
    #[arg(long, value_name = "POLY")]
    hp: Option<String>,
    /// Variables, e.g. "x y z t"
    #[arg(long, default_value = "x y z t")]
    vars: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function of I and S/I
    Hf(IdealInput),
    /// Hilbert polynomial of S/I
    Hp(IdealInput),
    /// Lex-segment ideal with a given Hilbert function
    LexSegment(TargetInput),
    /// Castelnuovo-Mumford regularity
    Regularity(IdealInput),
    /// Whether a monomial ideal is strongly stable
    BorelCheck(IdealInput),
    /// Strongly stable ideals with a given Hilbert function
    BorelEnum(TargetInput),
    /// Saturate a monomial ideal, or list saturated strongly stable ideals with --hp
    Sat {
        #[command(flatten)]
        input: IdealInput,
        /// Hilbert polynomial of S/J
        #[arg(long, value_name = "POLY", conflicts_with_all = ["file", "ideal"])]
        hp: Option<String>,
        /// Number of variables for --hp
        #[arg(long, default_value_t = 4)]
        nvars: usize,
    },
    /// Reduced Groebner basis
    Gb(IdealInput),
    /// Initial ideal
    Initial(IdealInput),
    /// Generic initial ideal
    Gin(IdealInput),
    /// Dimension of Hom(I, S/I)_0
    Tangent {
        #[command(flatten)]
        input: IdealInput,
        /// Relations among the generators: taylor or schreyer
        #[arg(long, value_parser = ["taylor", "schreyer"])]
        syzygies: Option<String>,
    },
    /// Check that a weight degeneration of I is the target monomial ideal
    Specialize {
        #[command(flatten)]
        input: IdealInput,
        /// Target monomial ideal, e.g. "x^2, x*y, y^3"
        #[arg(long)]
        target: String,
        /// Weight vector; searched for when omitted
        #[arg(long, value_name = "LIST")]
        weight: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_entry: i64,
    },
    /// Search for a weight vector degenerating I to the target
    FindWeight {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 6)]
        max_entry: i64,
    },
    /// Check the built-in scenarios
    VerifyPaper {
        /// Run one case only
        #[arg(long = "case", value_name = "ID")]
        case_id: Option<String>,
        /// Alternative dataset file
        #[arg(long)]
        data: Option<PathBuf>,
        /// Skip sampling of family members
        #[arg(long)]
        no_families: bool,
        /// Record measured running times in JSON output
        #[arg(long)]
        timing: bool,
    },
}

fn parse_trials(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        Ok(_) => Err("at least 2 trials are needed to detect disagreement".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Why a command did not succeed.
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<Output, Failure>;

/// A command result: text for people, JSON for machines.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn read_input(
    input: &IdealInput,
) -> std::result::Result<(GradedIdeal, Option<MonomialOrder>), Failure> {
    if let Some(gens) = &input.ideal {
        let ring = match &input.ring {
            Some(v) => Ring::new(
                &v.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>(),
            )?,
            None => Ring::xyzt(),
        };
        let polys = parse_generators(&ring, gens, &MonomialOrder::Grevlex)?;
        return Ok((GradedIdeal::new(ring, polys)?, None));
    }
    let (name, text) = match &input.file {
        None => {
            return Err(Failure::Input(
                "no input: give a file, `-`, or --ideal".into(),
            ))
        }
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            ("<stdin>".to_string(), s)
        }
        Some(p) => (
            p.display().to_string(),
            std::fs::read_to_string(p)
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        ),
    };
    let doc = parse_ideal_document(&text).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Failure::Input(format!("{name}:{line}:{column}: {message}")),
        other => Failure::Input(format!("{name}: {other}")),
    })?;
    let ideal = GradedIdeal::new(doc.ring.clone(), doc.generators.clone())?;
    Ok((ideal, doc.order))
}

fn monomial_target(ring: &Ring, text: &str) -> std::result::Result<MonomialIdeal, Failure> {
    let gens = parse_generators(ring, text, &MonomialOrder::Grevlex)?;
    GradedIdeal::new(ring.clone(), gens)?
        .as_monomial_ideal()
        .ok_or_else(|| Failure::Input("the target must be a monomial ideal".into()))
}

fn hilbert_target(t: &TargetInput) -> std::result::Result<(Ring, HilbertTarget), Failure> {
    let names: Vec<&str> = t
        .vars
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    let ring = Ring::new(&names)?;
    let h: Vec<u64> = parse_int_list(&t.h)?
        .into_iter()
        .map(|v| u64::try_from(v).map_err(|_| Failure::Input(format!("negative value {v}"))))
        .collect::<std::result::Result<_, _>>()?;
    let target = match &t.hp {
        Some(p) => HilbertTarget::with_polynomial(ring.nvars(), h, UniPoly::parse(p)?)?,
        None => HilbertTarget::lex_generated(&ring, h)?,
    };
    Ok((ring, target))
}

fn ideal_line(i: &MonomialIdeal) -> String {
    i.generator_strings().join(", ")
}

fn list_lines(ideals: &[MonomialIdeal]) -> String {
    ideals.iter().map(|i| ideal_line(i) + "\n").collect()
}

fn order_of(
    cli: &Cli,
    declared: Option<MonomialOrder>,
    default: MonomialOrder,
) -> std::result::Result<MonomialOrder, Failure> {
    match &cli.order {
        Some(s) => Ok(MonomialOrder::parse(s)?),
        None => Ok(declared.unwrap_or(default)),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Hf(input) => {
            let (ideal, _) = read_input(input)?;
            let top = cli.max_degree.unwrap_or_else(|| {
                stabilization_bound(&ideal.initial_ideal(&MonomialOrder::Grevlex)) + 1
            });
            let hd = hilbert_function(&ideal, top);
            let q = hd.h_quotient();
            let mut text = format!("{:>3}  {:>8}  {:>8}\n", "d", "dim I_d", "dim S/I_d");
            for (d, (a, b)) in hd.h_ideal().iter().zip(&q).enumerate() {
                text.push_str(&format!("{d:>3}  {a:>8}  {b:>8}\n"));
            }
            Ok(Output::ok(
                text,
                json!({ "ideal": hd.h_ideal(), "quotient": q }),
            ))
        }
        Command::Hp(input) => {
            let (ideal, _) = read_input(input)?;
            let p = ideal_hilbert_polynomial(&ideal);
            Ok(Output::ok(
                format!("{p}\n"),
                json!({ "hilbert_polynomial": p.to_string() }),
            ))
        }
        Command::LexSegment(t) => {
            let (ring, target) = hilbert_target(t)?;
            let top = cli
                .max_degree
                .unwrap_or(t.h.split(',').count().saturating_sub(1) as u32);
            let top = match target.polynomial() {
                Some(p) => top.max(crate::hilbert::gotzmann_bound(p)?),
                None => top,
            };
            let lex = lex_segment(&ring, &target.values(top))?;
            Ok(Output::ok(
                format!("{}\n", ideal_line(&lex)),
                json!({ "generators": lex.generator_strings() }),
            ))
        }
        Command::Regularity(input) => {
            let (ideal, _) = read_input(input)?;
            let r = regularity(&ideal, cli.seed, cli.trials)?;
            Ok(Output::ok(format!("{r}\n"), json!({ "regularity": r })))
        }
        Command::BorelCheck(input) => {
            let (ideal, _) = read_input(input)?;
            let m = ideal
                .as_monomial_ideal()
                .ok_or_else(|| Failure::Input("borel-check needs a monomial ideal".into()))?;
            match m.stability_witness() {
                None => Ok(Output::ok(
                    "strongly stable\n".into(),
                    json!({ "strongly_stable": true }),
                )),
                Some(w) => {
                    let missing = m.ring().fmt_monomial(&w);
                    Ok(Output {
                        text: format!("not strongly stable: {missing} is missing\n"),
                        json: json!({ "strongly_stable": false, "missing": missing }),
                        ok: false,
                    })
                }
            }
        }
        Command::BorelEnum(t) => {
            let (ring, target) = hilbert_target(t)?;
            let e = enumerate_borel_with_hf(&ring, &target, cli.max_degree)?;
            let mut text = list_lines(&e.ideals);
            if !e.complete {
                text.push_str("# search stopped at the node cap; the list may be incomplete\n");
            }
            Ok(Output {
                text,
                json: json!({
                    "degree_bound": e.degree_bound,
                    "complete": e.complete,
                    "ideals": e.ideals.iter().map(|i| i.generator_strings()).collect::<Vec<_>>(),
                }),
                ok: e.complete,
            })
        }
        Command::Sat { input, hp, nvars } => {
            if let Some(p) = hp {
                let p = UniPoly::parse(p)?;
                let bound = match cli.max_degree {
                    Some(b) => b,
                    None => crate::hilbert::gotzmann_bound(&p)?,
                };
                let e = enumerate_saturated_borel_with_hp(
                    &Ring::with_vars(*nvars),
                    &p,
                    bound,
                    DEFAULT_NODE_CAP,
                )?;
                let mut text = list_lines(&e.ideals);
                if !e.complete {
                    text.push_str("# search stopped at the node cap; the list may be incomplete\n");
                }
                return Ok(Output {
                    text,
                    json: json!({
                        "hilbert_polynomial": p.to_string(),
                        "degree_bound": e.degree_bound,
                        "complete": e.complete,
                        "ideals": e.ideals.iter().map(|i| i.generator_strings()).collect::<Vec<_>>(),
                    }),
                    ok: e.complete,
                });
            }
            let (ideal, _) = read_input(input)?;
            let m = ideal
                .as_monomial_ideal()
                .ok_or_else(|| Failure::Input("sat needs a monomial ideal or --hp".into()))?;
            let s = m.saturate();
            Ok(Output::ok(
                format!("{}\n", ideal_line(&s)),
                json!({ "generators": s.generator_strings(), "saturated_input": s == m }),
            ))
        }
        Command::Gb(input) => {
            let (ideal, declared) = read_input(input)?;
            let ord = order_of(cli, declared, MonomialOrder::Grevlex)?;
            let gb = ideal.groebner_basis(&ord);
            let mut elems: Vec<_> = gb.elements().iter().map(|p| p.primitive()).collect();
            elems.sort_by(|a, b| {
                let (a, b) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
                a.degree().cmp(&b.degree()).then_with(|| ord.cmp(b, a))
            });
            let lines: Vec<String> = elems
                .iter()
                .map(|p| ideal.ring().fmt_polynomial(p))
                .collect();
            let text = lines.iter().map(|l| format!("{l}\n")).collect();
            Ok(Output::ok(
                text,
                json!({ "order": ord.to_string(), "basis": lines }),
            ))
        }
        Command::Initial(input) => {
            let (ideal, declared) = read_input(input)?;
            let ord = order_of(cli, declared, MonomialOrder::Grevlex)?;
            let init = ideal.initial_ideal(&ord);
            Ok(Output::ok(
                format!("{}\n", ideal_line(&init)),
                json!({ "order": ord.to_string(), "generators": init.generator_strings() }),
            ))
        }
        Command::Gin(input) => {
            let (ideal, _) = read_input(input)?;
            let ord = order_of(cli, None, MonomialOrder::Grevlex)?;
            let g = gin(&ideal, &ord, cli.seed, cli.trials);
            let json = json!({
                "order": ord.to_string(),
                "seed": g.seed,
                "trials": g.trials,
                "agreed": g.agreed,
                "generators": g.ideal.generator_strings(),
            });
            if g.agreed {
                Ok(Output::ok(format!("{}\n", ideal_line(&g.ideal)), json))
            } else {
                let text = g
                    .per_trial
                    .iter()
                    .map(|i| format!("# trial: {}\n", ideal_line(i)))
                    .collect::<String>();
                Ok(Output {
                    text: format!("# trials disagree or the result is not strongly stable\n{text}"),
                    json,
                    ok: false,
                })
            }
        }
        Command::Tangent { input, syzygies } => {
            let (ideal, _) = read_input(input)?;
            let source = match syzygies.as_deref() {
                Some("taylor") => SyzygySource::Taylor,
                Some("schreyer") => SyzygySource::Schreyer,
                _ if ideal.as_monomial_ideal().is_some() => SyzygySource::Taylor,
                _ => SyzygySource::Schreyer,
            };
            let t = tangent_dimension_with(&ideal, source)?;
            Ok(Output::ok(
                format!("{}\n", t.dimension),
                json!({
                    "dimension": t.dimension,
                    "unknown_count": t.unknown_count,
                    "constraint_rank": t.constraint_rank,
                    "syzygy_source": t.syzygy_source.name(),
                    "generator_count": t.generator_count,
                    "syzygy_count": t.syzygy_count,
                }),
            ))
        }
        Command::Specialize {
            input,
            target,
            weight,
            max_entry,
        } => {
            let (ideal, _) = read_input(input)?;
            let target = monomial_target(ideal.ring(), target)?;
            let w = match weight {
                Some(w) => WeightVector::new(parse_int_list(w)?),
                None => match find_specialization_weight(
                    &ideal,
                    &target,
                    *max_entry,
                    &MonomialOrder::Grevlex,
                ) {
                    Ok(w) => w,
                    Err(e @ Error::WeightNotFound(_)) => return Err(Failure::Check(e.to_string())),
                    Err(e) => return Err(e.into()),
                },
            };
            let c = verify_specialization(&ideal, &target, &w)?;
            let limit = weight_initial_ideal(&ideal, &w)?;
            let weights: Vec<String> = w.weights.iter().map(|x| x.to_string()).collect();
            let verdict = if c.holds() { "holds" } else { "fails" };
            let text =
                format!(
                "{verdict}\nweight      {}\nlimit       {}\nhilbert     {}\ntangent     {} -> {}\n",
                weights.join(","),
                ideal_line(&limit),
                if c.hilbert_matches { "equal" } else { "different" },
                c.tangent_source,
                c.tangent_target
            );
            Ok(Output {
                text,
                json: json!({
                    "holds": c.holds(),
                    "weight": w.weights,
                    "limit": limit.generator_strings(),
                    "initial_matches": c.initial_matches,
                    "hilbert_matches": c.hilbert_matches,
                    "tangent_source": c.tangent_source,
                    "tangent_target": c.tangent_target,
                }),
                ok: c.holds(),
            })
        }
        Command::FindWeight {
            input,
            target,
            max_entry,
        } => {
            let (ideal, _) = read_input(input)?;
            let target = monomial_target(ideal.ring(), target)?;
            match find_specialization_weight(&ideal, &target, *max_entry, &MonomialOrder::Grevlex) {
                Ok(w) => {
                    let s: Vec<String> = w.weights.iter().map(|x| x.to_string()).collect();
                    Ok(Output::ok(
                        format!("{}\n", s.join(",")),
                        json!({ "weight": w.weights }),
                    ))
                }
                Err(e @ Error::WeightNotFound(_)) => Ok(Output {
                    text: format!("{e}\n"),
                    json: json!({ "weight": Value::Null, "max_entry": max_entry }),
                    ok: false,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::VerifyPaper {
            case_id,
            data,
            no_families,
            timing,
        } => {
            let cases = match data {
                Some(p) => {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
                    parse_dataset(&text)?
                }
                None => builtin_cases(),
            };
            let cases: Vec<_> = match case_id {
                Some(id) => {
                    let c: Vec<_> = cases.into_iter().filter(|c| &c.id == id).collect();
                    if c.is_empty() {
                        return Err(Failure::Input(format!("no case `{id}`")));
                    }
                    c
                }
                None => cases,
            };
            let opts = RunOptions {
                seed: cli.seed,
                gin_trials: cli.trials,
                families: !no_families,
                ..RunOptions::default()
            };
            let reports = run_cases(&cases, &opts);
            let ok = reports.iter().all(|r| r.passed());
            let text = reports
                .iter()
                .map(|r| emit_report(r, Format::Text, true))
                .collect::<Vec<_>>()
                .join("\n");
            let list: Vec<Value> = reports.iter().map(|r| report_json(r, *timing)).collect();
            let json = if case_id.is_some() {
                list.into_iter().next().unwrap()
            } else {
                Value::Array(list)
            };
            Ok(Output { text, json, ok })
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    case: &'a str,
    checks: &'a [crate::scenarios::Check],
    elapsed_ms: u64,
}

fn report_json(r: &VerificationReport, timing: bool) -> Value {
    let elapsed_ms = if timing {
        r.elapsed.as_millis() as u64
    } else {
        0
    };
    serde_json::to_value(ReportJson {
        case: &r.case,
        checks: &r.checks,
        elapsed_ms,
    })
    .expect("report serializes")
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Render a verification report. JSON follows
/// `{"case", "checks": [{"name", "expected", "computed", "pass"}], "elapsed_ms"}`;
/// `elapsed_ms` is 0 unless `timing` is set, so that repeated runs compare equal.
pub fn emit_report(report: &VerificationReport, format: Format, timing: bool) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(report, timing))
                .expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let rows: Vec<[String; 4]> = report
                .checks
                .iter()
                .map(|c| {
                    [
                        if c.pass { "pass" } else { "FAIL" }.to_string(),
                        c.name.clone(),
                        compact(&c.expected),
                        compact(&c.computed),
                    ]
                })
                .collect();
            let header = ["", "check", "expected", "computed"].map(String::from);
            let mut width = [0usize; 4];
            for r in rows.iter().chain(std::iter::once(&header)) {
                for (w, cell) in width.iter_mut().zip(r) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |r: &[String; 4]| {
                let mut s = format!(
                    "{:<w0$}  {:<w1$}  {:<w2$}  {}",
                    r[0],
                    r[1],
                    r[2],
                    r[3],
                    w0 = width[0],
                    w1 = width[1],
                    w2 = width[2]
                );
                s.truncate(s.trim_end().len());
                s + "\n"
            };
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            let mut out = format!(
                "case {}: {} ({} checks, {} failed, {} ms)\n",
                report.case,
                if failed == 0 { "pass" } else { "FAIL" },
                report.checks.len(),
                failed,
                if timing {
                    report.elapsed.as_millis()
                } else {
                    0
                }
            );
            out.push_str(&line(&header));
            for r in &rows {
                out.push_str(&line(r));
            }
            out
        }
    }
}

/// Run the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run_command(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match run(&cli) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json")
                ),
            };
            if o.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "{m}");
            EXIT_FAILED
        }
    }
}

/// Convenience for library users: run and collect stdout and stderr.
pub fn run_to_strings<S: AsRef<str>>(args: &[S]) -> (i32, String, String) {
    let args: Vec<String> = args.iter().map(|s| s.as_ref().to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(&args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}
