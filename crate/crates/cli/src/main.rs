use std::fmt::Write as _;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bscone::betti::{make_pure_diagram, DegreeSequence, FunctionalId};
use bscone::cone::{check_finite_length, check_graded, check_local, BettiSequence, Verdict};
use bscone::format::{parse_table, print_table};
use bscone::resolve::{self, FieldSpec, ModuleDescription, Presentation};
use bscone::verify::{cross_check, CrossCheckOptions, Family, Window};
use bscone::{Rational, Table};

/// Exact computations with Betti tables over k[x,y,z]/(xy,yz,xz).
///
/// Exit status: 0 success or member, 1 not a member or check failed,
/// 2 usage or input error.
#[derive(Parser, Debug)]
#[command(name = "bscone", version)]
struct Cli {
    /// Coefficient field for `resolve` and `hilbert`: `qq` or `fp:<p>`.
    /// Overrides a `field` line in the module file [default: fp:32003].
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the pure diagram of a degree sequence.
    Rays {
        #[arg(long, allow_negative_numbers = true)]
        d0: i64,
        /// An integer or `inf`.
        #[arg(long, default_value = "inf", allow_hyphen_values = true)]
        d1: String,
        /// The sequence continues d1+1, d1+2, ...
        #[arg(long)]
        tail: bool,
    },
    /// Test cone membership of a table file (`-` for stdin).
    Check {
        file: String,
        /// Use the finite length cone (adds gamma_inf = 0).
        #[arg(long)]
        finite_length: bool,
    },
    /// Like `check`, printing only the decomposition.
    Decompose {
        file: String,
        #[arg(long)]
        finite_length: bool,
    },
    /// Resolve a module description and print its Betti table.
    Resolve {
        file: String,
        /// Largest internal degree computed
        /// [default: max generator/relation degree + hom-bound + 3].
        #[arg(long, allow_negative_numbers = true)]
        deg_bound: Option<i64>,
        #[arg(long, default_value_t = 4)]
        hom_bound: usize,
    },
    /// Hilbert series numerator and multiplicity of a module description.
    Hilbert {
        file: String,
        /// [default: max generator/relation degree + 4]
        #[arg(long, allow_negative_numbers = true)]
        deg_bound: Option<i64>,
    },
    /// Compare generators and halfspaces of the cone on a degree window.
    VerifyWindow {
        #[arg(long, allow_negative_numbers = true)]
        jmin: i64,
        #[arg(long, allow_negative_numbers = true)]
        jmax: i64,
        #[arg(long)]
        finite_length: bool,
        /// Leave one family of inequalities out.
        #[arg(long, value_enum)]
        drop: Option<DropFamily>,
        #[arg(long, default_value_t = Window::DEFAULT_WIDTH_CAP)]
        width_cap: usize,
    },
    /// Local (complete) cone of a sequence b0 b1 b2.
    Local {
        #[arg(value_enum)]
        mode: LocalMode,
        #[arg(allow_negative_numbers = true)]
        b0: Rational,
        #[arg(allow_negative_numbers = true)]
        b1: Rational,
        #[arg(allow_negative_numbers = true)]
        b2: Rational,
        #[arg(long)]
        finite_length: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DropFamily {
    Alpha,
    Gamma,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LocalMode {
    Check,
    Decompose,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: bscone::Error| e.to_string())
}

/// Text for stdout plus the exit status.
struct Outcome {
    text: String,
    status: u8,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Self {
        Outcome {
            text,
            status: if ok { 0 } else { 1 },
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let err = |e: bscone::Error| e.to_string();
    match cli.command {
        Command::Rays { d0, d1, tail } => {
            let d1 = match d1.as_str() {
                "inf" => None,
                s => Some(s.parse::<i64>().map_err(|_| format!("bad d1 `{s}`"))?),
            };
            if tail && d1.is_none() {
                return Err("--tail needs a finite d1".into());
            }
            let d = DegreeSequence::from_parts(d0, d1, tail).map_err(err)?;
            Ok(Outcome::new(
                print_table(make_pure_diagram::<Rational>(d).table()),
                true,
            ))
        }
        Command::Check {
            file,
            finite_length,
        } => check(&file, finite_length, false),
        Command::Decompose {
            file,
            finite_length,
        } => check(&file, finite_length, true),
        Command::Resolve {
            file,
            deg_bound,
            hom_bound,
        } => {
            let (spec, p) = load_module(&file, cli.field)?;
            let deg_bound = deg_bound.unwrap_or(top_degree(&p) + hom_bound as i64 + 3);
            let r = resolve::resolve_with(spec, &p, deg_bound, hom_bound).map_err(err)?;
            let mut out = print_table(&r.betti);
            let _ = writeln!(out, "field: {spec}");
            let _ = writeln!(out, "deg_bound: {deg_bound}");
            let _ = writeln!(out, "hom_bound: {hom_bound}");
            let _ = writeln!(out, "tail_consistent: {}", yes_no(r.tail_consistent));
            let mut ok = r.complete && r.tail_consistent;
            match resolve::hilbert_with(spec, &p, deg_bound) {
                Ok(h) => {
                    let _ = writeln!(out, "e: {}", h.multiplicity);
                }
                Err(e) => {
                    ok = false;
                    let _ = writeln!(out, "e: unknown");
                    let _ = writeln!(out, "warning: {e}");
                }
            }
            let gamma = bscone::betti::eval_functional(FunctionalId::GammaInf, &r.betti);
            let _ = writeln!(out, "gamma_inf: {gamma}");
            for w in &r.warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            Ok(Outcome::new(out, ok))
        }
        Command::Hilbert { file, deg_bound } => {
            let (spec, p) = load_module(&file, cli.field)?;
            let deg_bound = deg_bound.unwrap_or(top_degree(&p) + 4);
            let h = resolve::hilbert_with(spec, &p, deg_bound).map_err(err)?;
            let mut out = String::new();
            let _ = writeln!(out, "field: {spec}");
            let _ = writeln!(out, "min_degree: {}", h.min_degree);
            let _ = writeln!(
                out,
                "numerator: {}",
                format_poly(h.min_degree, &h.numerator)
            );
            let _ = writeln!(out, "e: {}", h.multiplicity);
            let dims: Vec<String> = h.dims.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "dims: {}", dims.join(" "));
            Ok(Outcome::new(out, true))
        }
        Command::VerifyWindow {
            jmin,
            jmax,
            finite_length,
            drop,
            width_cap,
        } => {
            let w = Window::new(jmin, jmax).map_err(err)?;
            let options = CrossCheckOptions {
                finite_length,
                drop: drop.map(|d| match d {
                    DropFamily::Alpha => Family::Alpha,
                    DropFamily::Gamma => Family::Gamma,
                }),
                width_cap,
            };
            let report = cross_check::<Rational>(&w, options).map_err(err)?;
            Ok(Outcome::new(report.to_text(), report.equal))
        }
        Command::Local {
            mode,
            b0,
            b1,
            b2,
            finite_length,
        } => {
            let s = BettiSequence::new(b0, b1, b2);
            let mut out = String::new();
            let verdict = check_local(&s, finite_length);
            match (&verdict, mode) {
                (Verdict::Member(d), LocalMode::Check) => {
                    let _ = writeln!(out, "member: yes");
                    let _ = writeln!(out, "a: {}\nb: {}\nc: {}", d.a, d.b, d.c);
                }
                (Verdict::Member(d), LocalMode::Decompose) => {
                    let _ = writeln!(out, "a: {}\nb: {}\nc: {}", d.a, d.b, d.c);
                }
                (Verdict::NotMember { functional, value }, _) => {
                    let _ = writeln!(out, "member: no");
                    let _ = writeln!(out, "violated: {functional} value: {value}");
                }
            }
            Ok(Outcome::new(out, verdict.is_member()))
        }
    }
}

fn check(file: &str, finite_length: bool, only_terms: bool) -> Result<Outcome, String> {
    let t: Table = parse_table(&read_input(file)?).map_err(|e| e.to_string())?;
    let verdict = if finite_length {
        check_finite_length(&t)
    } else {
        check_graded(&t)
    };
    let mut out = String::new();
    match &verdict {
        Verdict::Member(d) => {
            if !only_terms {
                let _ = writeln!(out, "member: yes");
            }
            for (seq, c) in &d.terms {
                let _ = writeln!(out, "term {seq} {c}");
            }
        }
        Verdict::NotMember { functional, value } => {
            let _ = writeln!(out, "member: no");
            let _ = writeln!(out, "violated: {functional} value: {value}");
        }
    }
    Ok(Outcome::new(out, verdict.is_member()))
}

/// The field to use and the presentation; `--field` wins over the file.
fn load_module(file: &str, flag: Option<FieldSpec>) -> Result<(FieldSpec, Presentation), String> {
    let d = ModuleDescription::parse(&read_input(file)?).map_err(|e| e.to_string())?;
    Ok((flag.or(d.field).unwrap_or_default(), d.presentation))
}

fn top_degree(p: &Presentation) -> i64 {
    p.gen_degrees()
        .iter()
        .chain(p.relation_degrees())
        .copied()
        .max()
        .unwrap_or(0)
}

/// `1+2t`, `1-t`, `t^-1+3`, ...; `0` for the zero polynomial.
fn format_poly(min_degree: i64, coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let e = min_degree + k as i64;
        let sign = if c < 0 {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let a = c.unsigned_abs();
        let mono = match e {
            0 => String::new(),
            1 => "t".into(),
            e => format!("t^{e}"),
        };
        let coeff = if a == 1 && !mono.is_empty() {
            String::new()
        } else {
            a.to_string()
        };
        let _ = write!(out, "{sign}{coeff}{mono}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(o.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
