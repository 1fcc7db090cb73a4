//! Command-line interface over definition files. All results go to standard
//! output, diagnostics to standard error. Exit codes: 0 success, 1 input
//! error, 2 internal-consistency alarm.

// See lib.rs: errors carry exact witnesses and error paths are cold.
#![allow(clippy::result_large_err)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rieszpp::c00;
use rieszpp::dsl::{self, SourceProgram, Value};
use rieszpp::error::{Error, Result};
use rieszpp::exactnum::Rational;
use rieszpp::finitedim::{factor_bimorphism, matrix_sup, outer, FiniteMatrix};
use rieszpp::pplattice::PiecewisePoly;
use rieszpp::suite;
use rieszpp::tensorlattice::{refute_h, verify_h_dominated, Axis, SupInfForm};

#[derive(Parser)]
#[command(
    name = "rieszpp",
    about = "Exact computation in piecewise-polynomial Riesz spaces and their tensor products",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a binding at a point: one coordinate for one-variable
    /// functions, "x,y" for tensor expressions
    Eval {
        file: PathBuf,
        name: String,
        /// Evaluation point, e.g. "3" or "3,1"
        #[arg(long)]
        at: String,
    },
    /// Print the sup-inf normal form of a tensor expression
    Normalize { file: PathBuf, name: String },
    /// Restrict a tensor expression to a line by pinning one variable
    Restrict {
        file: PathBuf,
        name: String,
        /// Which variable to pin: "x" or "y"
        #[arg(long)]
        axis: String,
        /// The pinned value
        #[arg(long)]
        c: String,
    },
    /// Decide membership of a one-variable function in the principal ideal
    /// of the unit p(x) = x
    IdealCheck { file: PathBuf, name: String },
    /// Verify |f(x)| <= bound * x and report the horizon past which f is
    /// affine
    Affinity {
        file: PathBuf,
        name: String,
        #[arg(long)]
        bound: String,
    },
    /// Refute a candidate representation of the counterexample target h,
    /// printing an exact-mismatch certificate
    RefuteH {
        file: PathBuf,
        name: String,
        /// Restriction line x = LINE; defaults to horizon + 2
        #[arg(long)]
        line: Option<String>,
    },
    /// Verify h <= x (x) y symbolically along the given lines
    DominateH {
        /// Comma-separated abscissas, e.g. "1/2,1,2"
        #[arg(long)]
        lines: String,
    },
    /// Operations on finitely supported maps
    C00(C00Cmd),
    /// Operations on finite-dimensional vectors and matrices
    Fin(FinCmd),
    /// Run the full invariant suite
    Selftest {
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct C00Cmd {
    #[command(subcommand)]
    op: C00Op,
}

#[derive(Subcommand)]
enum C00Op {
    /// Supremum of the named maps
    Sup {
        file: PathBuf,
        names: Vec<String>,
    },
    /// Pointwise join of two maps
    Join {
        file: PathBuf,
        a: String,
        b: String,
    },
    /// Pointwise meet of two maps
    Meet {
        file: PathBuf,
        a: String,
        b: String,
    },
    /// Pointwise sum of two maps
    Add {
        file: PathBuf,
        a: String,
        b: String,
    },
    /// Evaluate an indicator-tensor expression into a map
    FromTensor { file: PathBuf, name: String },
}

#[derive(Args)]
struct FinCmd {
    #[command(subcommand)]
    op: FinOp,
}

#[derive(Subcommand)]
enum FinOp {
    /// Outer product of two vectors
    Outer {
        file: PathBuf,
        u: String,
        v: String,
    },
    /// Supremum of the named matrices
    Sup {
        file: PathBuf,
        names: Vec<String>,
    },
    /// Apply the factorization of the bimorphism table PSI to the matrix M
    Factor {
        file: PathBuf,
        psi: String,
        m: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InternalConsistency(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn load(file: &PathBuf) -> Result<SourceProgram> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Type(format!("cannot read {}: {e}", file.display())))?;
    dsl::parse_program(&text)
}

fn as_pp<'a>(v: &'a Value, name: &str) -> Result<&'a PiecewisePoly> {
    match v {
        Value::Pp(f) => Ok(f),
        other => Err(Error::Type(format!(
            "`{name}` is a {}, expected a piecewise polynomial",
            other.kind()
        ))),
    }
}

fn as_normal_form(v: &Value, name: &str) -> Result<SupInfForm> {
    match v {
        Value::Tensor(e) => Ok(e.normalize()),
        other => Err(Error::Type(format!(
            "`{name}` is a {}, expected a tensor expression",
            other.kind()
        ))),
    }
}

fn parse_axis(s: &str) -> Result<Axis> {
    match s {
        "x" => Ok(Axis::X),
        "y" => Ok(Axis::Y),
        other => Err(Error::Type(format!("axis must be `x` or `y`, got `{other}`"))),
    }
}

fn parse_rationals(list: &str) -> Result<Vec<Rational>> {
    list.split(',')
        .map(|s| dsl::parse_rational(s.trim()))
        .collect()
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Eval { file, name, at } => {
            let program = load(&file)?;
            let coords = parse_rationals(&at)?;
            let value = program.get(&name)?;
            let result = match (value, coords.as_slice()) {
                (Value::Pp(f), [x]) => f.eval(x)?,
                (Value::Tensor(e), [x, y]) => e.eval(x, y)?,
                (Value::Pp(_), _) => {
                    return Err(Error::Type(format!(
                        "`{name}` takes one coordinate, e.g. --at 3"
                    )))
                }
                (Value::Tensor(_), _) => {
                    return Err(Error::Type(format!(
                        "`{name}` takes two coordinates, e.g. --at 3,1"
                    )))
                }
                (other, _) => {
                    return Err(Error::Type(format!(
                        "`{name}` is a {}, which cannot be evaluated at a point",
                        other.kind()
                    )))
                }
            };
            println!("{}", dsl::print_rational(&result));
        }
        Command::Normalize { file, name } => {
            let program = load(&file)?;
            let sif = as_normal_form(program.get(&name)?, &name)?;
            println!("{}", dsl::print_sup_inf(&sif));
        }
        Command::Restrict { file, name, axis, c } => {
            let program = load(&file)?;
            let sif = as_normal_form(program.get(&name)?, &name)?;
            let axis = parse_axis(&axis)?;
            let c = dsl::parse_rational(&c)?;
            let restricted = sif.restrict_line(axis, &c)?;
            let var = match axis {
                Axis::X => 'y',
                Axis::Y => 'x',
            };
            println!("{}", dsl::print_pp(&restricted, var));
        }
        Command::IdealCheck { file, name } => {
            let program = load(&file)?;
            let f = as_pp(program.get(&name)?, &name)?;
            match f.ideal_member_linear() {
                Ok(lambda) => println!("member lambda={}", dsl::print_rational(&lambda)),
                Err(Error::NotInIdeal { reason }) => println!("not a member: {reason}"),
                Err(e) => return Err(e),
            }
        }
        Command::Affinity { file, name, bound } => {
            let program = load(&file)?;
            let f = as_pp(program.get(&name)?, &name)?;
            let c = dsl::parse_rational(&bound)?;
            let k = f.eventual_affinity(&c)?;
            println!("k={}", dsl::print_rational(&k));
        }
        Command::RefuteH { file, name, line } => {
            let program = load(&file)?;
            let sif = as_normal_form(program.get(&name)?, &name)?;
            let line = line.map(|s| dsl::parse_rational(&s)).transpose()?;
            let cert = refute_h(&sif, line)?;
            println!("refuted");
            println!("horizon k={}", dsl::print_rational(&cert.horizon));
            println!("line x={}", dsl::print_rational(&cert.line));
            println!("witness y={}", dsl::print_rational(&cert.witness));
            println!(
                "candidate value={}",
                dsl::print_rational(&cert.candidate_value)
            );
            println!("h value={}", dsl::print_rational(&cert.h_value));
            println!(
                "candidate restriction: {}",
                dsl::print_pp(&cert.restricted_candidate, 'y')
            );
            println!(
                "h restriction: {}",
                dsl::print_pp(&cert.restricted_h, 'y')
            );
        }
        Command::DominateH { lines } => {
            let lines = parse_rationals(&lines)?;
            for r in verify_h_dominated(&lines)? {
                let verdict = if r.dominated { "dominated" } else { "NOT dominated" };
                println!("x={}: {verdict}", dsl::print_rational(&r.line));
            }
        }
        Command::C00(c) => run_c00(c.op)?,
        Command::Fin(f) => run_fin(f.op)?,
        Command::Selftest { seed } => {
            let reports = suite::run_all(seed);
            let mut ok = true;
            for (i, r) in reports.iter().enumerate() {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                println!("criterion {}: {verdict} — {} ({})", i + 1, r.name, r.detail);
                ok &= r.passed;
            }
            if !ok {
                return Err(Error::InternalConsistency(
                    "selftest failed; see criterion lines above".into(),
                ));
            }
        }
    }
    Ok(())
}

fn print_map_value(v: &Value) -> Result<()> {
    match v {
        Value::C00Rat(m) => println!("{}", dsl::print_map_rat(m)),
        Value::C00Pp(m) => println!("{}", dsl::print_map_pp(m)),
        other => {
            return Err(Error::Type(format!(
                "expected a c00 map, got a {}",
                other.kind()
            )))
        }
    }
    Ok(())
}

/// Folds the named maps with a binary operation; all maps must share one
/// element space.
fn c00_binary(
    program: &SourceProgram,
    a: &str,
    b: &str,
    op_rat: impl Fn(
        &c00::FinSuppMap<Rational>,
        &c00::FinSuppMap<Rational>,
    ) -> Result<c00::FinSuppMap<Rational>>,
    op_pp: impl Fn(
        &c00::FinSuppMap<PiecewisePoly>,
        &c00::FinSuppMap<PiecewisePoly>,
    ) -> Result<c00::FinSuppMap<PiecewisePoly>>,
) -> Result<Value> {
    match (program.get(a)?, program.get(b)?) {
        (Value::C00Rat(f), Value::C00Rat(g)) => Ok(Value::C00Rat(op_rat(f, g)?)),
        (Value::C00Pp(f), Value::C00Pp(g)) => Ok(Value::C00Pp(op_pp(f, g)?)),
        (f, g) => Err(Error::Type(format!(
            "`{a}` is a {} and `{b}` is a {}; need two c00 maps over one element space",
            f.kind(),
            g.kind()
        ))),
    }
}

fn run_c00(op: C00Op) -> Result<()> {
    match op {
        C00Op::Sup { file, names } => {
            let program = load(&file)?;
            if names.is_empty() {
                return Err(Error::Type("sup needs at least one map name".into()));
            }
            let values: Vec<&Value> = names
                .iter()
                .map(|n| program.get(n))
                .collect::<Result<_>>()?;
            let result = if values.iter().all(|v| matches!(v, Value::C00Rat(_))) {
                let family: Vec<_> = values
                    .iter()
                    .map(|v| match v {
                        Value::C00Rat(m) => m.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                Value::C00Rat(c00::sup(&family)?)
            } else if values.iter().all(|v| matches!(v, Value::C00Pp(_))) {
                let family: Vec<_> = values
                    .iter()
                    .map(|v| match v {
                        Value::C00Pp(m) => m.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                Value::C00Pp(c00::sup(&family)?)
            } else {
                return Err(Error::Type(
                    "sup needs c00 maps over one element space".into(),
                ));
            };
            print_map_value(&result)?;
        }
        C00Op::Join { file, a, b } => {
            let program = load(&file)?;
            let v = c00_binary(&program, &a, &b, |f, g| f.join(g), |f, g| f.join(g))?;
            print_map_value(&v)?;
        }
        C00Op::Meet { file, a, b } => {
            let program = load(&file)?;
            let v = c00_binary(&program, &a, &b, |f, g| f.meet(g), |f, g| f.meet(g))?;
            print_map_value(&v)?;
        }
        C00Op::Add { file, a, b } => {
            let program = load(&file)?;
            let v = c00_binary(&program, &a, &b, |f, g| Ok(f.add(g)), |f, g| Ok(f.add(g)))?;
            print_map_value(&v)?;
        }
        C00Op::FromTensor { file, name } => {
            let program = load(&file)?;
            match program.get(&name)? {
                Value::CtenRat(e) => {
                    println!("{}", dsl::print_map_rat(&c00::from_tensor(e)?))
                }
                Value::CtenPp(e) => {
                    println!("{}", dsl::print_map_pp(&c00::from_tensor(e)?))
                }
                other => {
                    return Err(Error::Type(format!(
                        "`{name}` is a {}, expected an indicator-tensor expression",
                        other.kind()
                    )))
                }
            }
        }
    }
    Ok(())
}

fn as_matrix<'a>(v: &'a Value, name: &str) -> Result<&'a FiniteMatrix> {
    match v {
        Value::Matrix(m) => Ok(m),
        other => Err(Error::Type(format!(
            "`{name}` is a {}, expected a matrix",
            other.kind()
        ))),
    }
}

fn run_fin(op: FinOp) -> Result<()> {
    match op {
        FinOp::Outer { file, u, v } => {
            let program = load(&file)?;
            let uu = match program.get(&u)? {
                Value::Vector(x) => x,
                other => {
                    return Err(Error::Type(format!(
                        "`{u}` is a {}, expected a vector",
                        other.kind()
                    )))
                }
            };
            let vv = match program.get(&v)? {
                Value::Vector(x) => x,
                other => {
                    return Err(Error::Type(format!(
                        "`{v}` is a {}, expected a vector",
                        other.kind()
                    )))
                }
            };
            println!("{}", dsl::print_matrix(&outer(uu, vv)));
        }
        FinOp::Sup { file, names } => {
            let program = load(&file)?;
            if names.is_empty() {
                return Err(Error::Type("sup needs at least one matrix name".into()));
            }
            let family: Vec<FiniteMatrix> = names
                .iter()
                .map(|n| program.get(n).and_then(|v| as_matrix(v, n).cloned()))
                .collect::<Result<_>>()?;
            println!("{}", dsl::print_matrix(&matrix_sup(&family)?));
        }
        FinOp::Factor { file, psi, m } => {
            let program = load(&file)?;
            let (rows, cols, table) = match program.get(&psi)? {
                Value::Psi { rows, cols, table } => (*rows, *cols, table.clone()),
                other => {
                    return Err(Error::Type(format!(
                        "`{psi}` is a {}, expected a bimorphism table",
                        other.kind()
                    )))
                }
            };
            let matrix = as_matrix(program.get(&m)?, &m)?;
            let map = factor_bimorphism(rows, cols, table)?;
            println!("{}", dsl::print_matrix(&map.apply(matrix)?));
        }
    }
    Ok(())
}
