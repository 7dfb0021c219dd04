//! The `asymhollow` command line.
//!
//! Every subcommand prints one document: `{command, input, payload}` plus
//! `elapsed_ms` when `--timing` is given. Exit status is 0 on success, 1 for
//! a computed negative verdict, 2 for bad input.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::appendix::{
    boundary_probe, closed_form_sweep, s_set_bruteforce, s_set_closed_form, SRVariant,
};
use crate::asymptotic::{
    is_asymptotically_hollow, oracle_agreement, thresholds, Range, TupleA,
};
use crate::classify::{a_n_family, classify_triples, known_triples, ClassificationBox, Triple};
use crate::error::{Error, Result};
use crate::par;
use crate::proscriptive::{candidate_extensions, proscriptive_datum, HorizonPolicy};
use crate::simplex::{
    empty_sufficient, enumerate_non_extreme_points, facet_cotorsion_oracle, facet_volumes,
    functional_width, is_empty, is_hollow, width_one, width_one_functional, width_upper_bound,
    zero_sum_union, SimplexSpec,
};

#[derive(Debug, Parser)]
#[command(name = "asymhollow", version, about = "Hollow lattice simplices and asymptotic hollowness")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for sweeps (0 = rayon default).
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
    /// Accepted for scripts; output never depends on a seed or the clock.
    #[arg(long, global = true)]
    seedless: bool,
    /// Include wall-clock time in the output (makes it nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
struct AlphaArg {
    /// Simplex spec `a1,...,a(n-1):d`.
    #[arg(long)]
    alpha: SimplexSpec,
}

#[derive(Debug, Args)]
struct TupleArg {
    /// Comma-separated positive integers.
    #[arg(long)]
    tuple: TupleA,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Does K_alpha have an interior lattice point?
    Hollow(AlphaArg),
    /// Are the vertices the only lattice points?
    Empty(AlphaArg),
    /// List the non-extreme lattice points.
    Points(AlphaArg),
    /// Normalized facet volumes, with the minors oracle.
    Facets(AlphaArg),
    /// Width-one witness and the augmented-row width bound.
    Width(AlphaArg),
    /// Decide asymptotic hollowness of a tuple.
    Asym {
        #[command(flatten)]
        tuple: TupleArg,
        #[arg(long, default_value = "half")]
        range: Range,
    },
    /// Thresholds past which hollowness is eventually constant.
    Thresholds(TupleArg),
    /// One proscriptive datum; `i` is 1-based.
    Proscribe {
        #[command(flatten)]
        tuple: TupleArg,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        m: i64,
    },
    /// Nontrivial asymptotically hollow extensions (b, y) of a prefix.
    Extend {
        #[command(flatten)]
        tuple: TupleArg,
        /// Search horizon; derived from the data when omitted.
        #[arg(long)]
        horizon: Option<i64>,
    },
    /// Classify nontrivial asymptotically hollow triples in a box.
    Classify {
        #[arg(long, default_value_t = 10)]
        a_max: i64,
        #[arg(long, default_value_t = 60)]
        x_max: i64,
    },
    /// The tuple a_n and its verdict.
    Family {
        #[arg(long)]
        n: i64,
    },
    /// The set S(x, r) or S0(x, r), or a sweep against the closed form.
    Sset {
        #[arg(long, required_unless_present = "sweep")]
        x: Option<i64>,
        #[arg(long, required_unless_present = "sweep")]
        r: Option<i64>,
        #[arg(long, default_value = "S")]
        variant: SRVariant,
        /// Use the closed form instead of brute force.
        #[arg(long, conflicts_with = "sweep")]
        closed_form: bool,
        /// Compare brute force with the closed form for r_min..=r_max,
        /// r^2 <= x <= x_max, and probe where agreement starts.
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 2)]
        r_min: i64,
        #[arg(long, default_value_t = 8)]
        r_max: i64,
        #[arg(long, default_value_t = 300)]
        x_max: i64,
    },
    /// Criterion against brute force past the threshold, over every sorted
    /// tuple with lengths and entries in the box.
    Agree {
        #[arg(long, default_value_t = 3)]
        len_min: usize,
        #[arg(long, default_value_t = 3)]
        len_max: usize,
        #[arg(long, default_value_t = 2)]
        entry_min: i64,
        #[arg(long, default_value_t = 8)]
        entry_max: i64,
        #[arg(long, default_value_t = 50)]
        window: i64,
    },
}

#[derive(Debug, Serialize)]
struct CommandResult {
    command: &'static str,
    input: BTreeMap<&'static str, String>,
    payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

struct Outcome {
    command: &'static str,
    input: BTreeMap<&'static str, String>,
    payload: Value,
    negative: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

fn triple_str(t: &Triple) -> String {
    format!("{},{},{}", t.0, t.1, t.2)
}

fn execute(cmd: &Command) -> Result<Outcome> {
    let mut input = BTreeMap::new();
    let (command, payload, negative) = match cmd {
        Command::Hollow(AlphaArg { alpha }) => {
            input.insert("alpha", alpha.to_string());
            let v = is_hollow(alpha);
            ("hollow", to_value(&v), !v.hollow)
        }
        Command::Empty(AlphaArg { alpha }) => {
            input.insert("alpha", alpha.to_string());
            let empty = is_empty(alpha);
            let payload = json!({
                "empty": empty,
                "sufficient": empty_sufficient(alpha),
                "zero_sum_union": zero_sum_union(alpha),
            });
            ("empty", payload, !empty)
        }
        Command::Points(AlphaArg { alpha }) => {
            input.insert("alpha", alpha.to_string());
            let points = enumerate_non_extreme_points(alpha);
            ("points", json!({ "count": points.len(), "points": points }), false)
        }
        Command::Facets(AlphaArg { alpha }) => {
            input.insert("alpha", alpha.to_string());
            let fv = facet_volumes(alpha);
            let oracle = (0..fv.volumes.len())
                .map(|f| facet_cotorsion_oracle(alpha, f))
                .collect::<Result<Vec<_>>>()?;
            let payload = json!({
                "volumes": fv.volumes,
                "standard_count": fv.standard_count,
                "oracle": oracle,
                "agree": oracle == fv.volumes,
            });
            ("facets", payload, false)
        }
        Command::Width(AlphaArg { alpha }) => {
            input.insert("alpha", alpha.to_string());
            let subset = width_one(alpha)?;
            let functional = match &subset {
                Some(s) => Some(width_one_functional(alpha, s)?),
                None => None,
            };
            let functional_width = functional.as_ref().map(|phi| functional_width(alpha, phi));
            let (bound, bound_error) = match width_upper_bound(alpha) {
                Ok(b) => (Some(b), None),
                Err(e @ Error::PreconditionViolation(_)) => (None, Some(e.to_string())),
                Err(e) => return Err(e),
            };
            let payload = json!({
                "width_one_subset": subset,
                "functional": functional,
                "functional_width": functional_width,
                "bound": bound,
                "bound_error": bound_error,
            });
            ("width", payload, false)
        }
        Command::Asym { tuple: TupleArg { tuple }, range } => {
            input.insert("tuple", tuple.to_string());
            input.insert("range", format!("{range:?}").to_lowercase());
            let v = is_asymptotically_hollow(tuple, *range);
            ("asym", to_value(&v), !v.asymptotically_hollow)
        }
        Command::Thresholds(TupleArg { tuple }) => {
            input.insert("tuple", tuple.to_string());
            ("thresholds", to_value(&thresholds(tuple)), false)
        }
        Command::Proscribe { tuple: TupleArg { tuple }, i, m } => {
            input.insert("tuple", tuple.to_string());
            input.insert("i", i.to_string());
            input.insert("m", m.to_string());
            if *i < 1 {
                return Err(Error::InvalidArgument("i is 1-based".into()));
            }
            let d = proscriptive_datum(tuple, i - 1, *m)?;
            ("proscribe", to_value(&d), false)
        }
        Command::Extend { tuple: TupleArg { tuple }, horizon } => {
            input.insert("tuple", tuple.to_string());
            let policy = match horizon {
                Some(h) => {
                    input.insert("horizon", h.to_string());
                    HorizonPolicy::Explicit(*h)
                }
                None => HorizonPolicy::Derived,
            };
            let report = candidate_extensions(tuple, policy)?;
            ("extend", to_value(&report), false)
        }
        Command::Classify { a_max, x_max } => {
            input.insert("a_max", a_max.to_string());
            input.insert("x_max", x_max.to_string());
            let bx = ClassificationBox::new(*a_max, *x_max)?;
            let got = classify_triples(bx)?;
            let expected = known_triples(*x_max)?.with_min_entry_at_most(*a_max);
            let payload = json!({
                "count": got.len(),
                "sporadic": got.sporadic.iter().map(triple_str).collect::<Vec<_>>(),
                "family_xs": got.family_xs,
                "matches_known_list": got == expected,
            });
            ("classify", payload, false)
        }
        Command::Family { n } => {
            input.insert("n", n.to_string());
            let a = a_n_family(*n)?;
            let v = is_asymptotically_hollow(&a, Range::Half);
            let payload = json!({
                "tuple": a,
                "asymptotically_hollow": v.asymptotically_hollow,
                "witness": v.witness,
            });
            ("family", payload, !v.asymptotically_hollow)
        }
        Command::Sset { x, r, variant, closed_form, sweep, r_min, r_max, x_max } => {
            if *sweep {
                input.insert("r_min", r_min.to_string());
                input.insert("r_max", r_max.to_string());
                input.insert("x_max", x_max.to_string());
                let mismatches = closed_form_sweep(*r_min, *r_max, *x_max)?;
                let probe = boundary_probe(*r_min, *r_max, *x_max)?;
                let negative = !mismatches.is_empty();
                let payload = json!({
                    "mismatches": mismatches,
                    "agree": mismatches.is_empty(),
                    "boundary_probe": probe,
                });
                ("sset", payload, negative)
            } else {
                let (x, r) = (x.expect("required"), r.expect("required"));
                input.insert("x", x.to_string());
                input.insert("r", r.to_string());
                let set = if *closed_form {
                    input.insert("method", "closed-form".into());
                    s_set_closed_form(x, r)?
                } else {
                    input.insert("method", "brute-force".into());
                    input.insert("variant", format!("{variant:?}"));
                    s_set_bruteforce(x, r, *variant)?
                };
                ("sset", to_value(&set), false)
            }
        }
        Command::Agree { len_min, len_max, entry_min, entry_max, window } => {
            input.insert("len_min", len_min.to_string());
            input.insert("len_max", len_max.to_string());
            input.insert("entry_min", entry_min.to_string());
            input.insert("entry_max", entry_max.to_string());
            input.insert("window", window.to_string());
            if *len_min < 2 || len_max < len_min || *entry_min < 2 || entry_max < entry_min {
                return Err(Error::InvalidArgument(
                    "need 2 <= len_min <= len_max and 2 <= entry_min <= entry_max".into(),
                ));
            }
            let tuples: Vec<Vec<i64>> = (*len_min..=*len_max)
                .flat_map(|len| {
                    (*entry_min..=*entry_max).combinations_with_replacement(len)
                })
                .collect();
            let rows = par::map(tuples, |v| {
                oracle_agreement(&TupleA::new(v).expect("valid"), *window)
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
            let failures: Vec<_> = rows.iter().filter(|r| !r.passed()).collect();
            let hollow = rows.iter().filter(|r| r.criterion).count();
            let strict_mismatches: usize = rows.iter().map(|r| r.mismatches.len()).sum();
            let payload = json!({
                "checked": rows.len(),
                "cells": rows.len() as i64 * window,
                "asymptotically_hollow": hollow,
                "mismatches": strict_mismatches,
                "strict_pass": rows.iter().all(|r| r.passed_strict()),
                "failures": failures,
                "pass": failures.is_empty(),
            });
            ("agree", payload, !failures.is_empty())
        }
    };
    Ok(Outcome {
        command,
        input,
        payload,
        negative,
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&key(k), child, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let joined = items.iter().map(scalar).join(" ");
            out.push((prefix.to_string(), joined));
        }
        Value::Array(items) => {
            for (idx, child) in items.iter().enumerate() {
                flatten(&key(&idx.to_string()), child, out);
            }
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render(result: &CommandResult, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(result).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv | Format::Table => {
            let mut rows = Vec::new();
            flatten("", &to_value(result), &mut rows);
            if format == Format::Csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["key", "value"]).expect("in-memory write");
                for (k, v) in &rows {
                    w.write_record([k, v]).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
            } else {
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                rows.iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                    .collect()
            }
        }
    }
}

fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        // Fails only if a pool already exists (e.g. repeated in-process runs).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

/// Runs the CLI on `argv` (including the program name), writing the
/// document to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    configure_threads(cli.threads);
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(outcome) => {
            let result = CommandResult {
                command: outcome.command,
                input: outcome.input,
                payload: outcome.payload,
                elapsed_ms: cli.timing.then(|| start.elapsed().as_millis()),
            };
            let _ = out.write_all(render(&result, cli.format).as_bytes());
            i32::from(outcome.negative)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("asymhollow").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn payload(args: &[&str]) -> (i32, Value) {
        let (code, out, _) = call(args);
        let v: Value = serde_json::from_str(&out).unwrap();
        (code, v["payload"].clone())
    }

    #[test]
    fn examples() {
        let (code, p) = payload(&["asym", "--tuple", "6,10,15"]);
        assert_eq!((code, p["asymptotically_hollow"].as_bool()), (0, Some(true)));
        let (code, p) = payload(&["hollow", "--alpha", "3,5,7:30"]);
        assert_eq!((code, p["hollow"].as_bool()), (0, Some(true)));
        let (code, p) = payload(&["extend", "--tuple", "29,38,66"]);
        assert_eq!(code, 0);
        assert_eq!(p["candidates"], json!([2, 3, 11]));
    }

    #[test]
    fn negative_verdicts_exit_one() {
        assert_eq!(call(&["asym", "--tuple", "3,7,9"]).0, 1);
        assert_eq!(call(&["hollow", "--alpha", "2,3:13"]).0, 1);
    }

    #[test]
    fn bad_input_exits_two() {
        let (code, out, err) = call(&["asym", "--tuple", "3,x"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(!err.is_empty());
        assert_eq!(call(&["hollow", "--alpha", "3,5,7"]).0, 2);
        assert_eq!(call(&["sset", "--x", "5", "--r", "3"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["sset", "--x", "8", "--r", "3", "--closed-form"]).0, 2);
    }

    #[test]
    fn other_formats() {
        let (code, out, _) = call(&["--format", "csv", "thresholds", "--tuple", "3,5,7"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("key,value\n"));
        assert!(out.contains("payload.c,"));
        let (_, out, _) = call(&["--format", "table", "family", "--n", "4"]);
        assert!(out.contains("payload.tuple"));
        assert!(out.contains("6,10,15"));
    }

    #[test]
    fn timing_is_opt_in() {
        let (_, out, _) = call(&["thresholds", "--tuple", "3,5,7"]);
        assert!(!out.contains("elapsed_ms"));
        let (_, out, _) = call(&["--timing", "thresholds", "--tuple", "3,5,7"]);
        assert!(out.contains("elapsed_ms"));
    }
}
