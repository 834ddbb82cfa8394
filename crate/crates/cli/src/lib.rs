//! Command-line front end. [`run`] parses arguments, dispatches to the core
//! library and writes the report; it returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zetarh::enumerator::{family, WeightEnumerator};
use zetarh::exactnum::{format_decimal, parse_rational, Rational};
use zetarh::rh::{decide, decide_all, default_tolerance, Method, RhVerdict};
use zetarh::scan::{conjecture_probe, rh_q_boundary, scan_n_with, threshold_constants, ScanOptions};
use zetarh::zeta::{functional_equation_check, symmetrize, zeta_polynomial};
use zetarh::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "zetarh", version, about = "Exact zeta polynomials and the Riemann hypothesis for weight enumerators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct Source {
    /// Enumerator file (JSON)
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Inline family member (x² + (q−1)y²)^n, e.g. `n=4,q=2`
    #[arg(long, value_name = "n=..,q=..")]
    family: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Zeta polynomial P(T) of an enumerator
    Zeta {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide the Riemann hypothesis for an enumerator
    Check {
        #[command(flatten)]
        source: Source,
        /// direct-exact, direct-numeric, genus1, genus2, genus3, cubic-procedure or all
        #[arg(long, default_value = "direct-exact")]
        method: String,
        /// Bound on | |T|·√q − 1 | for the numeric method
        #[arg(long)]
        tolerance: Option<String>,
        /// Fractional digits of approximations
        #[arg(long, default_value_t = 5)]
        digits: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Sweep the family over n = 2..n-max at fixed q
    Scan {
        #[arg(long)]
        q: String,
        #[arg(long)]
        n_max: usize,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
        /// JSON-lines row cache for resumable sweeps
        #[arg(long, value_name = "FILE")]
        cache: Option<PathBuf>,
        /// Include per-row wall time
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Threshold constants bounding the q-ranges for genus 1 to 3
    Thresholds {
        /// Restrict to one genus
        #[arg(long)]
        genus: Option<usize>,
        /// Enclosure width
        #[arg(long, default_value = "1e-6")]
        eps: String,
        /// Also locate the boundaries by bisection on exact verdicts
        #[arg(long, requires = "genus")]
        boundary: bool,
        /// Fractional digits; defaults to the precision of `--eps`
        #[arg(long)]
        digits: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact verdicts for one n across a list of q
    Probe {
        #[arg(long)]
        n: usize,
        /// Comma-separated values of q
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(report) => match out.write_all(report.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_DOMAIN
            }
        },
        Err(e) => {
            let (code, kind) = classify_error(&e);
            let obj = json!({"error": {"kind": kind, "message": format!("{e:#}")}});
            let _ = writeln!(out, "{obj}");
            let _ = writeln!(err, "error: {e:#}");
            code
        }
    }
}

fn classify_error(e: &anyhow::Error) -> (i32, &'static str) {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::Inconsistent(_)) => (EXIT_INCONSISTENT, "inconsistent"),
        Some(Error::Parse(_)) => (EXIT_DOMAIN, "parse"),
        Some(Error::Io(_)) => (EXIT_DOMAIN, "io"),
        _ => (EXIT_DOMAIN, "domain"),
    }
}

fn dispatch(command: Command) -> anyhow::Result<String> {
    match command {
        Command::Zeta { source, format } => cmd_zeta(&source, format),
        Command::Check {
            source,
            method,
            tolerance,
            digits,
            format,
        } => cmd_check(&source, &method, tolerance.as_deref(), digits, format),
        Command::Scan {
            q,
            n_max,
            jobs,
            cache,
            timings,
            format,
        } => {
            let q = parse_q(&q)?;
            let report = scan_n_with(&q, n_max, &ScanOptions { jobs, cache })?;
            Ok(match format {
                Format::Csv => report.to_csv(timings),
                Format::Json => json_line(&report.to_json(timings)),
                Format::Text => {
                    let mut s = format!("q = {}\n", report.q);
                    for r in &report.rows {
                        s.push_str(&format!(
                            "n = {:>3}  genus = {:>3}  RH {}\n",
                            r.n,
                            r.genus,
                            if r.holds { "holds" } else { "fails" }
                        ));
                    }
                    match report.max_prefix_n {
                        Some(n) => s.push_str(&format!("RH holds for 2 <= n <= {n}\n")),
                        None => s.push_str("RH fails at n = 2\n"),
                    }
                    s
                }
            })
        }
        Command::Thresholds {
            genus,
            eps,
            boundary,
            digits,
            format,
        } => cmd_thresholds(genus, &eps, boundary, digits, format),
        Command::Probe { n, q, format } => {
            let grid = q.iter().map(|s| parse_q(s)).collect::<anyhow::Result<Vec<_>>>()?;
            let rows = conjecture_probe(n, &grid)?;
            Ok(match format {
                Format::Json => json_line(&json!({
                    "n": n,
                    "results": rows
                        .iter()
                        .map(|(q, holds)| json!({"q": q.to_string(), "holds": holds}))
                        .collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut s = String::from("q,verdict\n");
                    for (q, holds) in &rows {
                        s.push_str(&format!("{q},{holds}\n"));
                    }
                    s
                }
                Format::Text => rows
                    .iter()
                    .map(|(q, holds)| format!("n = {n}, q = {q}: RH {}\n", if *holds { "holds" } else { "fails" }))
                    .collect(),
            })
        }
    }
}

/// Fewest fractional digits `k` with `10^−k ≤ eps`, at least 5.
fn digits_for(eps: &Rational) -> usize {
    let mut k = 0;
    let mut unit = Rational::from_integer(1.into());
    let ten = Rational::from_integer(10.into());
    while &unit > eps && k < 60 {
        unit /= &ten;
        k += 1;
    }
    k.max(5)
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn parse_q(s: &str) -> anyhow::Result<Rational> {
    parse_rational(s).with_context(|| format!("invalid q {s:?}"))
}

fn parse_family(arg: &str) -> anyhow::Result<WeightEnumerator> {
    let (mut n, mut q) = (None, None);
    for part in arg.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value in --family, got {part:?}")))?;
        match key.trim() {
            "n" => {
                n = Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("invalid n {value:?}: {e}")))?,
                )
            }
            "q" => q = Some(parse_q(value.trim())?),
            other => return Err(Error::Parse(format!("unknown --family key {other:?}")).into()),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("--family needs n".into()))?;
    let q = q.ok_or_else(|| Error::Parse("--family needs q".into()))?;
    Ok(family(n, &q)?)
}

fn load(source: &Source) -> anyhow::Result<WeightEnumerator> {
    match (&source.input, &source.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok(WeightEnumerator::from_json(&text)
                .with_context(|| format!("reading {}", path.display()))?)
        }
        (None, Some(arg)) => parse_family(arg),
        _ => bail!(Error::Domain("give exactly one of --input or --family".into())),
    }
}

fn cmd_zeta(source: &Source, format: Format) -> anyhow::Result<String> {
    let w = load(source)?;
    let z = zeta_polynomial(&w)?;
    Ok(match format {
        Format::Json => json_line(&z.to_json()),
        Format::Csv => {
            let mut s = String::from("i,p_i\n");
            for (i, c) in z.p().coeffs().iter().enumerate() {
                s.push_str(&format!("{i},{c}\n"));
            }
            s
        }
        Format::Text => {
            let mut s = format!("P(T) = {}\n", z.p().to_string().replace('X', "T"));
            match z.genus() {
                Some(g) => {
                    s.push_str(&format!("genus = {g}\n"));
                    s.push_str(&format!(
                        "functional equation: {}\n",
                        if functional_equation_check(&z) { "holds" } else { "fails" }
                    ));
                    if let Ok(sym) = symmetrize(&z) {
                        s.push_str(&format!("h(U) = {}\n", sym.h.to_string().replace('X', "U")));
                    }
                }
                None => s.push_str("genus undefined (not self-dual)\n"),
            }
            s
        }
    })
}

fn verdict_text(v: &RhVerdict, digits: usize) -> String {
    let mut s = format!(
        "{}: RH {}{}\n",
        v.method,
        if v.holds { "holds" } else { "fails" },
        if v.witness.advisory { " (advisory)" } else { "" }
    );
    if let Some(p) = &v.witness.polynomial {
        s.push_str(&format!("  polynomial: {p}\n"));
    }
    if let Some((lo, hi)) = &v.witness.interval {
        s.push_str(&format!("  interval: [{lo}, {hi}]\n"));
    }
    if let Some((lo, hi)) = &v.witness.bounds {
        s.push_str(&format!("  bounds: [{lo}, {hi}]\n"));
    }
    if let Some(why) = &v.witness.violated {
        s.push_str(&format!("  violated: {why}\n"));
    }
    if let Some(dev) = v.witness.max_deviation {
        s.push_str(&format!("  max deviation: {}\n", zetarh::exactnum::format_f64(dev, digits.max(12))));
    }
    s
}

fn cmd_check(
    source: &Source,
    method: &str,
    tolerance: Option<&str>,
    digits: usize,
    format: Format,
) -> anyhow::Result<String> {
    let w = load(source)?;
    let tol = match tolerance {
        Some(t) => parse_rational(t).with_context(|| format!("invalid tolerance {t:?}"))?,
        None => default_tolerance(),
    };
    let verdicts = if method == "all" {
        decide_all(&w, &tol)?
    } else {
        vec![decide(&w, method.parse::<Method>()?, &tol)?]
    };
    Ok(match format {
        Format::Json if method == "all" => json_line(&json!({
            "holds": verdicts[0].holds,
            "unanimous": true,
            "verdicts": verdicts.iter().map(|v| v.to_json(digits)).collect::<Vec<_>>(),
        })),
        Format::Json => json_line(&verdicts[0].to_json(digits)),
        Format::Csv => {
            let mut s = String::from("method,verdict,advisory\n");
            for v in &verdicts {
                s.push_str(&format!("{},{},{}\n", v.method, v.holds, v.witness.advisory));
            }
            s
        }
        Format::Text => verdicts.iter().map(|v| verdict_text(v, digits)).collect(),
    })
}

fn cmd_thresholds(
    genus: Option<usize>,
    eps: &str,
    boundary: bool,
    digits: Option<usize>,
    format: Format,
) -> anyhow::Result<String> {
    let eps = parse_rational(eps).with_context(|| format!("invalid eps {eps:?}"))?;
    let digits = digits.unwrap_or_else(|| digits_for(&eps));
    let set = threshold_constants(&eps)?;
    let named: Vec<(String, &zetarh::Enclosure)> = match genus {
        Some(g) => {
            let (lo, hi) = set
                .for_genus(g)
                .ok_or_else(|| anyhow!(Error::Domain(format!("thresholds exist for genus 1 to 3, got {g}"))))?;
            vec![(format!("g{g}_lo"), lo), (format!("g{g}_hi"), hi)]
        }
        None => set.named().iter().map(|(k, e)| (k.to_string(), *e)).collect(),
    };
    let boundary = match (boundary, genus) {
        (true, Some(g)) => Some(rh_q_boundary(g, &eps)?),
        _ => None,
    };
    Ok(match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            if let Some(g) = genus {
                obj.insert("genus".into(), json!(g));
            }
            obj.insert("eps".into(), json!(eps.to_string()));
            for (k, e) in &named {
                obj.insert(k.clone(), e.to_json(digits));
            }
            if let Some(b) = &boundary {
                obj.insert("boundary".into(), b.to_json(digits));
            }
            json_line(&Value::Object(obj))
        }
        Format::Csv => {
            let mut s = String::from("name,lo,hi,definition\n");
            for (k, e) in &named {
                s.push_str(&format!(
                    "{k},{},{},\"{}\"\n",
                    format_decimal(&e.lo, digits),
                    format_decimal(&e.hi, digits),
                    e.definition
                ));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (k, e) in &named {
                s.push_str(&format!(
                    "{k:<9} [{}, {}]  {}\n",
                    format_decimal(&e.lo, digits),
                    format_decimal(&e.hi, digits),
                    e.definition
                ));
            }
            if let Some(b) = &boundary {
                for f in &b.flips {
                    s.push_str(&format!(
                        "flip      [{}, {}]\n",
                        format_decimal(&f.lo, digits),
                        format_decimal(&f.hi, digits)
                    ));
                }
            }
            s
        }
    })
}
