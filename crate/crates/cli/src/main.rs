use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dialgebra::completion::{
    check_gs, complete, reduce_basis, CheckConfig, CompletionStatus, Verdict, DEFAULT_FUEL,
    DEFAULT_RM_DEPTH,
};
use dialgebra::disemigroup::{audit_right_commutative, AuditOutcome};
use dialgebra::format::format_diword;
use dialgebra::{
    enumerate_irr, family_reduced, family_rules, normal_form, parse_diword, parse_poly,
    span_membership, Alphabet, Error, Execution, Family, Membership, ProblemFile, RuleSet,
};

mod report;

#[derive(Parser)]
#[command(
    name = "digs",
    version,
    about = "Gröbner-Shirshov bases for dialgebras"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Maximum number of rules completion may add.
    #[arg(long, global = true)]
    fuel: Option<usize>,
    /// Length bound for `irr` and the right-commutative audit.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Tail-length bound of the right-multiplication analysis.
    #[arg(long, global = true)]
    rm_depth: Option<usize>,
    /// Word order; only `deglex` is supported.
    #[arg(long, global = true, default_value = "deglex")]
    order: String,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Run on the current thread only.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the rules form a Gröbner-Shirshov basis.
    Check { file: PathBuf },
    /// Run Shirshov completion.
    Complete { file: PathBuf },
    /// Compute the reduced basis.
    Reduce { file: PathBuf },
    /// Normal form of a diword or polynomial.
    Nf { file: PathBuf, expr: String },
    /// List irreducible diwords up to `--max-len`.
    Irr { file: PathBuf },
    /// Decide whether two diwords are equal in the presented disemigroup.
    Wp {
        file: PathBuf,
        lhs: String,
        rhs: String,
    },
    /// Print the relations of a built-in family.
    Family {
        name: String,
        /// Symbols, greatest first.
        #[arg(long, default_value = "x3 x2 x1")]
        alphabet: String,
        /// Instantiate the defining schema up to this length instead.
        #[arg(long)]
        schema: Option<usize>,
        /// Audit the right-commutative relations.
        #[arg(long)]
        audit: bool,
    },
    /// Brute-force ideal membership.
    Oracle {
        file: PathBuf,
        expr: String,
        #[arg(long)]
        bound: Option<usize>,
    },
}

/// Exit status: 0 success, 1 property false, 2 bounded or out of fuel, 3 input error.
enum Outcome {
    Ok,
    False,
    Bounded,
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn config(opts: &Opts, file: Option<&ProblemFile>) -> Result<CheckConfig, Failure> {
    let from_file = |key: &str| -> Result<Option<usize>, Failure> {
        match file.and_then(|f| f.option(key)) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Failure(format!("option {key}: `{v}` is not a number"))),
        }
    };
    let fuel = opts.fuel.or(from_file("fuel")?).unwrap_or(DEFAULT_FUEL);
    let rm_depth = opts
        .rm_depth
        .or(from_file("rm-depth")?)
        .unwrap_or(DEFAULT_RM_DEPTH);
    if fuel == 0 {
        return Err(Error::InvalidFuel.into());
    }
    if rm_depth == 0 {
        return Err(Error::InvalidDepthBound.into());
    }
    Ok(CheckConfig {
        fuel,
        rm_depth,
        exec: if opts.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        ..CheckConfig::default()
    })
}

fn load(path: &PathBuf) -> Result<ProblemFile, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    ProblemFile::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn verdict_outcome(v: Verdict) -> Outcome {
    match v {
        Verdict::GS => Outcome::Ok,
        Verdict::GSUpToBound(_) => Outcome::Bounded,
        Verdict::NotGS => Outcome::False,
    }
}

fn with_basis(file: &ProblemFile, basis: &RuleSet) -> ProblemFile {
    ProblemFile {
        polys: basis
            .rules()
            .iter()
            .map(|r| (r.name().to_string(), r.poly().clone()))
            .collect(),
        relations: Vec::new(),
        ..file.clone()
    }
}

fn run(cli: Cli, out: &mut String) -> Result<Outcome, Failure> {
    let opts = &cli.opts;
    if opts.order != "deglex" {
        return Err(Failure(format!("unsupported order `{}`", opts.order)));
    }
    match &cli.command {
        Command::Check { file } => {
            let file = load(file)?;
            let cfg = config(opts, Some(&file))?;
            let rules = file.rules()?;
            let rep = check_gs(&rules, &cfg)?;
            if opts.json {
                report::json_line(out, &report::check_json(&rep, &rules));
            } else {
                report::check_text(out, &rep, &rules);
            }
            Ok(verdict_outcome(rep.verdict))
        }
        Command::Complete { file } => {
            let file = load(file)?;
            let cfg = config(opts, Some(&file))?;
            let rules = file.rules()?;
            let res = complete(&rules, &cfg)?;
            if opts.json {
                report::json_line(out, &report::completion_json(&res));
            } else {
                report::completion_text(out, &res);
                out.push_str(&with_basis(&file, &res.basis).to_string());
            }
            Ok(match res.status {
                CompletionStatus::Complete(v) => verdict_outcome(v),
                CompletionStatus::FuelExhausted => Outcome::Bounded,
            })
        }
        Command::Reduce { file } => {
            let file = load(file)?;
            let cfg = config(opts, Some(&file))?;
            let rules = file.rules()?;
            let red = match reduce_basis(&rules, &cfg) {
                Err(Error::FuelExhausted { added }) => {
                    writeln!(out, "status: fuel exhausted after {added} rules").unwrap();
                    return Ok(Outcome::Bounded);
                }
                r => r?,
            };
            if opts.json {
                report::json_line(out, &report::reduced_json(&red));
            } else {
                writeln!(
                    out,
                    "# verdict: {}",
                    report::verdict_text(red.report.verdict)
                )
                .unwrap();
                writeln!(out, "# recompletions: {}", red.recompletions).unwrap();
                out.push_str(&with_basis(&file, &red.basis).to_string());
            }
            Ok(verdict_outcome(red.report.verdict))
        }
        Command::Nf { file, expr } => {
            let file = load(file)?;
            let a = &file.alphabet;
            if file.polys.is_empty() {
                let cfg = config(opts, Some(&file))?;
                let d = parse_diword(expr, a)?;
                let nf = file.presentation()?.with_config(cfg).nf(&d)?;
                if opts.json {
                    report::json_line(out, &serde_json::json!({ "nf": format_diword(&nf, a) }));
                } else {
                    writeln!(out, "{}", format_diword(&nf, a)).unwrap();
                }
                return Ok(Outcome::Ok);
            }
            let f = parse_poly(expr, a)?;
            let rules = file.rules()?;
            let nf = normal_form(&f, &rules);
            if opts.json {
                report::json_line(out, &report::nf_json(&nf, &rules));
            } else {
                writeln!(out, "{}", nf.nf.display(a)).unwrap();
            }
            Ok(Outcome::Ok)
        }
        Command::Irr { file } => {
            let file = load(file)?;
            let rules = file.rules()?;
            let max_len = opts.max_len.unwrap_or(4);
            let irr = enumerate_irr(&rules, max_len);
            let a = &file.alphabet;
            if opts.json {
                let items: Vec<_> = irr.iter().map(|d| format_diword(d, a)).collect();
                report::json_line(
                    out,
                    &serde_json::json!({ "max_len": max_len, "irr": items }),
                );
            } else {
                for d in &irr {
                    writeln!(out, "{}", format_diword(d, a)).unwrap();
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Wp { file, lhs, rhs } => {
            let file = load(file)?;
            let cfg = config(opts, Some(&file))?;
            let a = &file.alphabet;
            let (l, r) = (parse_diword(lhs, a)?, parse_diword(rhs, a)?);
            let p = file.presentation()?.with_config(cfg);
            let (nl, nr) = (p.nf(&l)?, p.nf(&r)?);
            let equal = nl == nr;
            if opts.json {
                report::json_line(
                    out,
                    &serde_json::json!({
                        "equal": equal,
                        "lhs_nf": format_diword(&nl, a),
                        "rhs_nf": format_diword(&nr, a),
                    }),
                );
            } else {
                writeln!(out, "{equal}").unwrap();
                writeln!(
                    out,
                    "# {} / {}",
                    format_diword(&nl, a),
                    format_diword(&nr, a)
                )
                .unwrap();
            }
            Ok(if equal { Outcome::Ok } else { Outcome::False })
        }
        Command::Family {
            name,
            alphabet,
            schema,
            audit,
        } => {
            let fam = Family::from_name(name).ok_or_else(|| {
                let known: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Failure(format!(
                    "unknown family `{name}` (one of {})",
                    known.join(", ")
                ))
            })?;
            let a = Alphabet::new(alphabet.split_whitespace())?;
            if *audit {
                if fam != Family::RightCommutative {
                    return Err(Failure("--audit applies to right-commutative only".into()));
                }
                let cfg = config(opts, None)?;
                let rep = audit_right_commutative(&a, opts.max_len.unwrap_or(4), &cfg)?;
                writeln!(out, "{rep}").unwrap();
                return Ok(match rep.outcome() {
                    AuditOutcome::Consistent => Outcome::Ok,
                    AuditOutcome::Discrepancy(_) => Outcome::False,
                });
            }
            let rules = match schema {
                Some(b) => family_rules(fam, &a, *b)?,
                None => family_reduced(fam, &a)?,
            };
            let file = ProblemFile {
                alphabet: a,
                order: "deglex".into(),
                polys: rules
                    .rules()
                    .iter()
                    .map(|r| (r.name().to_string(), r.poly().clone()))
                    .collect(),
                relations: Vec::new(),
                options: Default::default(),
            };
            out.push_str(&file.to_string());
            Ok(Outcome::Ok)
        }
        Command::Oracle { file, expr, bound } => {
            let file = load(file)?;
            let rules = file.rules()?;
            let f = parse_poly(expr, &file.alphabet)?;
            let verdict = span_membership(&f, &rules, *bound)?;
            if opts.json {
                report::json_line(out, &report::membership_json(&verdict, &rules));
            } else {
                report::membership_text(out, &verdict, &rules);
            }
            Ok(match verdict {
                Membership::Certified(_) => Outcome::Ok,
                Membership::UnknownAtBound(_) => Outcome::False,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::False) => 1,
        Ok(Outcome::Bounded) => 2,
        Err(Failure(msg)) => {
            eprintln!("digs: {msg}");
            3
        }
    };
    print!("{out}");
    ExitCode::from(code)
}
