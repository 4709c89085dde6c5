//! The `adelic` command line: argument parsing, dispatch, output and exit codes.
//!
//! Exit codes: 0 on success, 2 on parse and usage errors, 3 on domain errors.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::biext::{
    parse_setup, quotient_weil_pairing, transport, validate_setup, verify_setup, FiniteAbelianGroup, PairingSetup,
    TorsorPoint,
};
use crate::curve::{certify_m_torsion, point_add, point_mul, riemann_roch, Divisor, Place};
use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::idele::{commutator_pairing, unsigned_pairing};
use crate::parse::{parse_curve, parse_divisor, parse_function, parse_idele, parse_place};
use crate::selftest::run_selftest;
use crate::tame::{reciprocity_factors, residue_norm, tame_symbol, weil_reciprocity};
use crate::weil::{weil_pairing_adelic, weil_pairing_disjoint, weil_pairing_miller};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "adelic", version, about = "Tame symbols, idele pairings and Weil pairings over finite fields")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Adelic,
    Disjoint,
    Miller,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tame symbol (f, g)_x and its norm to the base field.
    Tame {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        place: String,
    },
    /// Product of the norms of all tame symbols of f and g.
    Reciprocity {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Commutator pairing of two ideles.
    Commutator {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Weil pairing of two m-torsion divisor classes.
    Weil {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        m: u64,
        #[arg(long = "D")]
        d: String,
        #[arg(long = "Dp")]
        dp: String,
        #[arg(long, value_enum, default_value_t = Method::Adelic)]
        method: Method,
    },
    /// Basis of L(D) with h0 and h1.
    Rr {
        #[arg(long)]
        curve: String,
        #[arg(long = "D")]
        d: String,
    },
    /// A function f with div f = m·D.
    Torsion {
        #[arg(long)]
        curve: String,
        #[arg(long = "D")]
        d: String,
        #[arg(long)]
        m: u64,
    },
    /// Finite pairing setups read from a setup file.
    Biext {
        #[command(subcommand)]
        verb: BiextVerb,
    },
    /// Runs the invariant suite.
    Selftest {
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum BiextVerb {
    /// Checks the four vanishing conditions.
    Validate {
        #[arg(long)]
        setup: String,
    },
    /// Moves a torsor point by (b, c, b', c').
    Transport {
        #[arg(long)]
        setup: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        ap: String,
        #[arg(long, default_value_t = 0)]
        value: u64,
        #[arg(long, default_value = "0")]
        b: String,
        #[arg(long, default_value = "0")]
        c: String,
        #[arg(long, default_value = "0")]
        bp: String,
        #[arg(long, default_value = "0")]
        cp: String,
    },
    /// Quotient Weil pairing of the classes of a and a'.
    Weil {
        #[arg(long)]
        setup: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        ap: String,
        #[arg(long)]
        m: u64,
    },
    /// Runs every exhaustive property scan on the setup.
    Check {
        #[arg(long)]
        setup: String,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        m: Vec<u64>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Semantic(_) | Error::Structural(_) => EXIT_USAGE,
        Error::Domain(_) | Error::Torsion(_) | Error::Arithmetic(_) => EXIT_DOMAIN,
    }
}

fn root_of_unity(v: &Fe) -> Result<String> {
    Ok(format!("{} (order {})", v, v.multiplicative_order()?))
}

/// Sums `Σ n_i·P_i` on the curve; the image of a degree-zero divisor in the group.
fn divisor_point(d: &Divisor) -> Result<Place> {
    let curve = d.curve();
    let mut acc = Place::Origin;
    for (x, n) in d.terms() {
        acc = point_add(curve, &acc, &point_mul(curve, n, x)?)?;
    }
    Ok(acc)
}

fn group_element(g: &FiniteAbelianGroup, text: &str) -> Result<usize> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let v = inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse { pos: 0, msg: format!("'{text}' is not a group element") })
        })
        .collect::<Result<Vec<_>>>()?;
    g.encode(&v)
}

fn read_setup(path: &str) -> Result<PairingSetup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Semantic(format!("cannot read {path}: {e}")))?;
    parse_setup(&text)
}

/// Output lines; the last one is the result.
fn dispatch(cli: &Cli) -> Result<(Vec<String>, bool)> {
    let mut out = Vec::new();
    let mut ok = true;
    match &cli.command {
        Command::Tame { curve, f, g, place } => {
            let c = parse_curve(curve)?;
            let (f, g, x) = (parse_function(&c, f)?, parse_function(&c, g)?, parse_place(&c, place)?);
            let s = tame_symbol(&f, &g, &x)?;
            out.push(format!("norm {}", residue_norm(&c, &x, &s)?));
            out.push(s.to_string());
        }
        Command::Reciprocity { curve, f, g } => {
            let c = parse_curve(curve)?;
            let (f, g) = (parse_function(&c, f)?, parse_function(&c, g)?);
            for (x, v) in reciprocity_factors(&f, &g)? {
                out.push(format!("{x} {v}"));
            }
            out.push(weil_reciprocity(&f, &g)?.to_string());
        }
        Command::Commutator { curve, a, b } => {
            let c = parse_curve(curve)?;
            let (a, b) = (parse_idele(&c, a)?, parse_idele(&c, b)?);
            out.push(format!("degrees {} {}", a.degree()?, b.degree()?));
            out.push(format!("unsigned {}", unsigned_pairing(&a, &b)?));
            out.push(commutator_pairing(&a, &b)?.to_string());
        }
        Command::Weil { curve, m, d, dp, method } => {
            let c = parse_curve(curve)?;
            let (d, dp) = (parse_divisor(&c, d)?, parse_divisor(&c, dp)?);
            let v = match method {
                Method::Adelic => weil_pairing_adelic(&d, &dp, *m)?,
                Method::Disjoint => weil_pairing_disjoint(&d, &dp, *m)?,
                Method::Miller => {
                    if c.is_line() {
                        return Err(Error::domain("Miller's algorithm needs an elliptic curve"));
                    }
                    for x in [&d, &dp] {
                        if x.degree() != 0 {
                            return Err(Error::domain(format!("{x} has degree {}, expected 0", x.degree())));
                        }
                    }
                    let (p, q) = (divisor_point(&d)?, divisor_point(&dp)?);
                    out.push(format!("points {p} {q}"));
                    weil_pairing_miller(&p, &q, *m, &c, cli.seed)?
                }
            };
            out.push(root_of_unity(&v)?);
        }
        Command::Rr { curve, d } => {
            let c = parse_curve(curve)?;
            let d = parse_divisor(&c, d)?;
            let rr = riemann_roch(&d)?;
            for f in &rr.basis {
                out.push(format!("basis {f}"));
            }
            out.push(format!("h0={} h1={} deg={} g={}", rr.h0, rr.h1, d.degree(), c.genus()));
        }
        Command::Torsion { curve, d, m } => {
            let c = parse_curve(curve)?;
            let d = parse_divisor(&c, d)?;
            match certify_m_torsion(&d, *m)? {
                Some(f) => out.push(f.to_string()),
                None => return Err(Error::Torsion(format!("the class of {d} is not {m}-torsion"))),
            }
        }
        Command::Biext { verb } => match verb {
            BiextVerb::Validate { setup } => {
                let s = read_setup(setup)?;
                let report = validate_setup(&s);
                out.extend(report.to_string().lines().map(str::to_string));
                ok = report.passed();
                out.push(if ok { "valid" } else { "invalid" }.to_string());
            }
            BiextVerb::Transport { setup, a, ap, value, b, c, bp, cp } => {
                let s = read_setup(setup)?;
                let t =
                    TorsorPoint { a: group_element(s.a(), a)?, ap: group_element(s.ap(), ap)?, value: value % s.n() };
                let g = (
                    group_element(s.a(), b)?,
                    group_element(s.a(), c)?,
                    group_element(s.ap(), bp)?,
                    group_element(s.ap(), cp)?,
                );
                let r = transport(&s, &t, g)?;
                out.push(format!("{} {} {}", s.a().show(r.a), s.ap().show(r.ap), r.value));
            }
            BiextVerb::Weil { setup, a, ap, m } => {
                let s = read_setup(setup)?;
                let v = quotient_weil_pairing(&s, group_element(s.a(), a)?, group_element(s.ap(), ap)?, *m)?;
                out.push(v.to_string());
            }
            BiextVerb::Check { setup, m } => {
                let s = read_setup(setup)?;
                let results = verify_setup(&s, m);
                ok = results.iter().all(|r| r.passed());
                out.extend(results.iter().map(|r| r.to_string()));
                out.push(if ok { "pass" } else { "fail" }.to_string());
            }
        },
        Command::Selftest { samples } => {
            let lines = run_selftest(*samples, cli.seed)?;
            ok = lines.iter().all(|l| l.passed());
            out.extend(lines.iter().map(|l| l.to_string()));
            out.push(if ok { "pass" } else { "fail" }.to_string());
        }
    }
    Ok((out, ok))
}

fn verb_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Tame { .. } => "tame",
        Command::Reciprocity { .. } => "reciprocity",
        Command::Commutator { .. } => "commutator",
        Command::Weil { .. } => "weil",
        Command::Rr { .. } => "rr",
        Command::Torsion { .. } => "torsion",
        Command::Biext { .. } => "biext",
        Command::Selftest { .. } => "selftest",
    }
}

fn render(format: Format, verb: &str, lines: &[String], code: i32, error: Option<&str>) -> String {
    match format {
        Format::Plain => {
            let mut s = String::new();
            for l in lines {
                let _ = writeln!(s, "{l}");
            }
            if let Some(e) = error {
                let _ = writeln!(s, "error: {e}");
            }
            s
        }
        Format::Json => {
            let mut v = serde_json::json!({ "command": verb, "exit_code": code, "lines": lines });
            match error {
                Some(e) => v["error"] = e.into(),
                None => v["result"] = lines.last().cloned().unwrap_or_default().into(),
            }
            format!("{v}\n")
        }
    }
}

/// Runs the command line `argv` (including the program name) and returns the exit
/// code with everything that would be printed.
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let verb = verb_name(&cli.command);
    match dispatch(&cli) {
        Ok((lines, ok)) => {
            // failed checks are reported as domain outcomes
            let code = if ok { EXIT_OK } else { EXIT_DOMAIN };
            (code, render(cli.format, verb, &lines, code, None))
        }
        Err(e) => {
            let code = exit_code(&e);
            (code, render(cli.format, verb, &[], code, Some(&e.to_string())))
        }
    }
}
