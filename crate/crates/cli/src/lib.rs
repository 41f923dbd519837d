//! The `hfrac` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hfrac_core::catalog::{self, Param, Registry, Summary};
use hfrac_core::euler::{euler_numbers, euler_ogf, q_euler};
use hfrac_core::exact::Rational;
use hfrac_core::hankel::hankel_sequence;
use hfrac_core::hfrac::expand;
use hfrac_core::perms::{weight_sum, Weight};
use hfrac_core::series::{named_series, TruncatedSeries};

/// Environment variable capping `--order`, `--n` and friends.
pub const MAX_ORDER_VAR: &str = "HFRAC_MAX_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hfrac", version, about = "Exact Hankel continued fractions for Euler numbers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Euler numbers E_0..E_n.
    Euler {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// The q-Euler polynomials E_0(q)..E_n(q), or their values at --q.
    Qeuler {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[command(flatten)]
        fmt: Format,
    },
    /// Super δ-fraction expansion of a series.
    Hfrac {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 2)]
        delta: usize,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Hankel determinants H_0..H_max of a sequence.
    Hankel {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        max: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Weighted sum over the permutations of length n.
    PermStats {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: Weight,
        #[command(flatten)]
        fmt: Format,
    },
    /// Check catalog identities.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = catalog::DEFAULT_ORDER)]
        order: usize,
        #[arg(long = "n-max", default_value_t = catalog::DEFAULT_N_MAX)]
        n_max: usize,
        #[arg(long, conflicts_with = "q", requires = "id")]
        r: Option<u32>,
        #[arg(long, allow_hyphen_values = true, requires = "id")]
        q: Option<Rational>,
        /// Also check the permutation fractions at random points.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        fmt: Format,
    },
}

#[derive(Args, Debug)]
struct Format {
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Source {
    /// `euler` (Σ E_n x^n) or a named series such as `tan` or `sec_pow(3)`.
    #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
    series: Option<String>,
    /// Comma separated coefficients, e.g. `1,1,2,5/3`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<Rational>>,
}

#[derive(Serialize)]
struct Values<T> {
    name: String,
    values: Vec<T>,
}

enum Failure {
    Usage(String),
    Other(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Other(e.to_string())
    }
}

fn cap() -> Result<Option<usize>, Failure> {
    match std::env::var(MAX_ORDER_VAR) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{MAX_ORDER_VAR}={v} is not a nonnegative integer"))),
    }
}

fn check_cap(flag: &str, value: usize) -> Result<(), Failure> {
    if let Some(c) = cap()? {
        if value > c {
            return Err(Failure::Usage(format!(
                "--{flag} {value} exceeds {MAX_ORDER_VAR}={c}"
            )));
        }
    }
    Ok(())
}

fn source_series(src: &Source, order: usize) -> Result<(String, TruncatedSeries<Rational>), Failure> {
    if let Some(c) = &src.coeffs {
        if c.len() <= order {
            return Err(Failure::Usage(format!(
                "--coeffs has {} values, {} needed",
                c.len(),
                order + 1
            )));
        }
        return Ok(("coeffs".into(), TruncatedSeries::new(c[..=order].to_vec(), order)));
    }
    let name = src.series.clone().unwrap_or_default();
    let s = if name == "euler" {
        euler_ogf(order)
    } else {
        named_series(&name, order).map_err(|e| Failure::Usage(format!("--series: {e}")))?
    };
    Ok((name, s))
}

fn emit<T: Serialize + ToString>(out: &mut dyn Write, json: bool, name: &str, values: Vec<T>) -> Result<(), Failure> {
    if json {
        let v = Values { name: name.to_string(), values };
        writeln!(out, "{}", serde_json::to_string(&v)?)?;
    } else {
        let line: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

fn print_summary(out: &mut dyn Write, s: &Summary, json: bool) -> Result<i32, Failure> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&s.reports)?)?;
    } else {
        for r in &s.reports {
            writeln!(out, "{r}")?;
        }
        let failed = s.failures().count();
        writeln!(out, "{} checks, {} failed", s.reports.len(), failed)?;
    }
    Ok(if s.all_passed() { EXIT_OK } else { EXIT_FAIL })
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Cmd::Euler { n, fmt } => {
            check_cap("n", n)?;
            emit(out, fmt.json, "euler", euler_numbers(n).into_iter().map(Rational::from).collect())?;
        }
        Cmd::Qeuler { n, q, fmt } => {
            check_cap("n", n)?;
            let polys = q_euler(n);
            match q {
                Some(q) => {
                    let vals: Vec<Rational> = polys.iter().map(|p| p.eval(&q)).collect();
                    emit(out, fmt.json, &format!("qeuler(q={q})"), vals)?;
                }
                None if fmt.json => {
                    let v = Values { name: "qeuler".into(), values: polys };
                    writeln!(out, "{}", serde_json::to_string(&v)?)?;
                }
                None => {
                    for (i, p) in polys.iter().enumerate() {
                        writeln!(out, "E_{i}(q) = {}", p.display_in("q"))?;
                    }
                }
            }
        }
        Cmd::Hfrac { src, delta, order, fmt } => {
            check_cap("order", order)?;
            if delta == 0 {
                return Err(Failure::Usage("--delta must be at least 1".into()));
            }
            let (_, f) = source_series(&src, order)?;
            let x = expand(&f, delta)?;
            if fmt.json {
                #[derive(Serialize)]
                struct Out<'a> {
                    fraction: &'a hfrac_core::hfrac::SuperFraction<Rational>,
                    certified_order: usize,
                    class: String,
                }
                let o = Out {
                    fraction: &x.fraction,
                    certified_order: x.certified_order,
                    class: x.fraction.classify().to_string(),
                };
                writeln!(out, "{}", serde_json::to_string(&o)?)?;
            } else {
                writeln!(
                    out,
                    "delta {delta}, class {}, certified to order {}",
                    x.fraction.classify(),
                    x.certified_order
                )?;
                for (j, l) in x.fraction.levels.iter().enumerate() {
                    writeln!(out, "{}: v = {}, k = {}, u = {}", j + 1, l.v, l.k, l.u)?;
                }
            }
        }
        Cmd::Hankel { src, max, fmt } => {
            check_cap("max", max)?;
            let (name, f) = source_series(&src, (2 * max).saturating_sub(2))?;
            let h = hankel_sequence(f.coeffs(), max)?;
            emit(out, fmt.json, &format!("hankel({name})"), h)?;
        }
        Cmd::PermStats { n, weight, fmt } => {
            check_cap("n", n)?;
            let v = weight_sum(n, weight)?;
            emit(out, fmt.json, &format!("{weight}({n})"), vec![v.to_string()])?;
        }
        Cmd::Verify { id, all, order, n_max, r, q, seed, fmt } => {
            check_cap("order", order)?;
            check_cap("n-max", n_max)?;
            let reg = Registry::standard();
            let mut summary = if all {
                reg.verify_all(order, n_max, None)
            } else {
                let id = id.expect("clap enforces --id or --all");
                let param = match (r, q) {
                    (Some(r), _) => Some(Param::R(r)),
                    (_, Some(q)) => Some(Param::Q(q)),
                    _ => None,
                };
                match param {
                    None => match reg.verify_id(&id, order, n_max) {
                        Ok(s) => s,
                        Err(e) => return Err(Failure::Usage(format!("--id: {e}"))),
                    },
                    Some(p) => {
                        let rep = if reg.derivation(&id).is_ok() {
                            reg.verify_derivation(&id, &p)
                        } else {
                            match reg.entry(&id).map(|e| e.kind) {
                                Ok(catalog::Kind::Fraction) => reg.verify_fraction(&id, order, &p),
                                Ok(catalog::Kind::Determinant) => reg.verify_hankel(&id, n_max, &p),
                                Err(e) => Err(e),
                            }
                        };
                        Summary { reports: vec![rep.map_err(|e| Failure::Usage(format!("{e}")))?] }
                    }
                }
            };
            if let Some(seed) = seed {
                let extra = catalog::verify_random_specializations(seed, 5, n_max)?;
                summary.reports.extend(extra.reports);
            }
            return print_summary(out, &summary, fmt.json);
        }
    }
    Ok(EXIT_OK)
}

/// Parse `argv` (including the program name), run, and return the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
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
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Other(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_FAIL
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let argv = std::iter::once("hfrac").chain(args.iter().copied());
        let code = run(argv, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn euler_line() {
        let (c, o, _) = go(&["euler", "--n", "9"]);
        assert_eq!(c, 0);
        assert_eq!(o, "1 1 1 2 5 16 61 272 1385 7936\n");
    }

    #[test]
    fn hankel_of_euler() {
        let (c, o, _) = go(&["hankel", "--series", "euler", "--max", "4"]);
        assert_eq!(c, 0);
        assert_eq!(o, "1 1 0 -1 -9\n");
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        let (c, _, e) = go(&["euler", "--n", "x"]);
        assert_eq!(c, 2);
        assert!(e.contains("--n"), "{e}");
        let (c, _, e) = go(&["hfrac", "--series", "nope"]);
        assert_eq!(c, 2);
        assert!(e.contains("--series"), "{e}");
    }
}
