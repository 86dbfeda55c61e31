//! Command-line front end for the qsl2 library.
//!
//! Symbolic mode (coefficients in Q(q)) is the default; pass a top-level
//! `--q RATIONAL` before the subcommand to compute at a concrete rational
//! parameter instead.  `--json` (or `QSL2_OUTPUT=json`) switches stdout to
//! a single structured value; diagnostics always go to stderr.  Exit code
//! 0 means the command ran (including negative answers such as
//! `NOT A UNIT`), 1 means a domain error, 2 a usage error.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand};
use num::BigRational;
use serde_json::{json, Value};

use qsl2::{
    casimir, commutator, decide_isomorphic, differencing_identities, express_in_casimir,
    factorization_witness, is_central, iso_trace, parse_element, parse_scalar, Automorphism,
    Element, Error, Family, Matrix, ModuleRep, ParseError, QParam, Scalar, Sign,
};

#[derive(Parser)]
#[command(
    name = "qsl2",
    about = "Exact computations in the quantized enveloping algebra of sl2",
    version
)]
struct Cli {
    /// Evaluate at a concrete rational q (default: symbolic).
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
    q: Option<String>,

    /// Emit a single JSON value instead of text (also: QSL2_OUTPUT=json).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its normal form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Multiply two expressions and print the normal form of the product.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print the normal form of the commutator a*b - b*a.
    Comm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print the Casimir element, or a power of it.
    Casimir {
        #[arg(long, default_value_t = 1)]
        power: u64,
    },
    /// Report whether an expression is central.
    Central {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Express an element as a polynomial in the Casimir element.
    InCasimir {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Classify an element as a unit lambda*K^m, or report that it is none.
    Unit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Inspect the simple module with highest K-eigenvalue sign*q^n.
    Module {
        /// Highest weight; the module has dimension n + 1.
        #[arg(long)]
        n: u64,
        /// Sign of the highest K-eigenvalue: 1 or -1.
        #[arg(long, allow_hyphen_values = true)]
        sign: String,
        /// Print the action of E, F, K on the basis (the default view).
        #[arg(long)]
        table: bool,
        /// Check the defining relations and the simplicity ladder.
        #[arg(long)]
        verify: bool,
        /// Print the scalar by which the Casimir element acts.
        #[arg(long)]
        casimir: bool,
    },
    /// Work with an automorphism descriptor (family, r, lambda).
    #[command(group(
        ArgGroup::new("action")
            .required(true)
            .args(["apply", "verify", "compose", "invert", "casimir_sign"])
    ))]
    Aut {
        /// Family index, 1 through 4.
        #[arg(long)]
        family: u8,
        /// Power of K twisting the images of E and F.
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        /// Nonzero scalar rescaling the image of E.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Apply the automorphism to an expression.
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        apply: Option<String>,
        /// Re-check the defining relations on the generator images.
        #[arg(long)]
        verify: bool,
        /// Compose with another descriptor, given as JSON {family, r, lambda}.
        #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
        compose: Option<String>,
        /// Print the inverse descriptor.
        #[arg(long)]
        invert: bool,
        /// Print the sign the Casimir element picks up.
        #[arg(long)]
        casimir_sign: bool,
    },
    /// Decide whether the algebras at two rational parameters are isomorphic.
    Iso {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Also print the scalar-sequence comparison behind the decision.
        #[arg(long)]
        trace: bool,
    },
    /// Check the power-sum differencing identities and the factorization identity.
    Identities {
        /// Point at which to instantiate the factorization (default 2).
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Second coordinate of the point (default 3).
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json
        || std::env::var("QSL2_OUTPUT")
            .map(|v| v == "json")
            .unwrap_or(false);
    match run(cli, json) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_rational(text: &str) -> Result<BigRational, Error> {
    BigRational::from_str(text.trim()).map_err(|_| {
        Error::Parse(ParseError {
            pos: 0,
            message: format!("not a rational number: {text:?}"),
        })
    })
}

fn parse_sign(text: &str) -> Result<Sign, Error> {
    match text.trim() {
        "1" | "+1" => Ok(Sign::Plus),
        "-1" => Ok(Sign::Minus),
        other => Err(Error::Parse(ParseError {
            pos: 0,
            message: format!("sign must be 1 or -1, got {other:?}"),
        })),
    }
}

fn run(cli: Cli, json: bool) -> Result<(), Error> {
    let qp = match &cli.q {
        None => QParam::generic(),
        Some(text) => QParam::concrete(parse_rational(text)?)?,
    };

    match cli.command {
        Command::Normalize { expr } => {
            emit_element(&parse_element(&expr, &qp)?, json);
        }
        Command::Mul { a, b } => {
            let x = parse_element(&a, &qp)?;
            let y = parse_element(&b, &qp)?;
            emit_element(&(&x * &y), json);
        }
        Command::Comm { a, b } => {
            let x = parse_element(&a, &qp)?;
            let y = parse_element(&b, &qp)?;
            emit_element(&commutator(&x, &y), json);
        }
        Command::Casimir { power } => {
            if power > 64 {
                return Err(Error::ExponentTooLarge(power as i64));
            }
            emit_element(&casimir(&qp).pow(power), json);
        }
        Command::Central { expr } => {
            let central = is_central(&parse_element(&expr, &qp)?);
            if json {
                emit_json(json!({ "central": central }));
            } else {
                println!("{}", if central { "CENTRAL" } else { "NOT CENTRAL" });
            }
        }
        Command::InCasimir { expr } => {
            match express_in_casimir(&parse_element(&expr, &qp)?) {
                Ok(poly) => {
                    if json {
                        let coeffs: Vec<String> =
                            poly.coeffs().iter().map(|c| c.to_string()).collect();
                        emit_json(json!({ "in_casimir": true, "coeffs": coeffs }));
                    } else {
                        println!("{poly}");
                    }
                }
                Err(Error::NotInCasimir) => {
                    if json {
                        emit_json(json!({ "in_casimir": false }));
                    } else {
                        println!("NOT A POLYNOMIAL IN c");
                    }
                }
                Err(other) => return Err(other),
            }
        }
        Command::Unit { expr } => {
            match parse_element(&expr, &qp)?.as_unit() {
                Some((lambda, m)) => {
                    if json {
                        emit_json(json!({
                            "unit": true,
                            "lambda": lambda.to_string(),
                            "m": m,
                        }));
                    } else {
                        println!("UNIT: lambda = {lambda}, m = {m}");
                    }
                }
                None => {
                    if json {
                        emit_json(json!({ "unit": false }));
                    } else {
                        println!("NOT A UNIT");
                    }
                }
            }
        }
        Command::Module {
            n,
            sign,
            table,
            verify,
            casimir: casimir_flag,
        } => {
            let eps = parse_sign(&sign)?;
            let rep = ModuleRep::build(&qp, n, eps);
            if json {
                let mut body = json!({
                    "n": n,
                    "sign": eps.as_i8(),
                    "dim": rep.dim(),
                    "e": matrix_rows(rep.mat_e()),
                    "f": matrix_rows(rep.mat_f()),
                    "k": matrix_rows(rep.mat_k()),
                });
                let map = body.as_object_mut().expect("object");
                if verify {
                    map.insert("relations_hold".into(), json!(rep.verify_relations()));
                    map.insert(
                        "simple".into(),
                        json!(rep.ladder().certifies_simplicity()),
                    );
                }
                if casimir_flag {
                    map.insert(
                        "casimir_scalar".into(),
                        json!(qsl2::casimir_scalar(&qp, n, eps).to_string()),
                    );
                }
                emit_json(body);
            } else {
                let mut printed = false;
                if verify {
                    for (name, ok) in rep.relation_checks() {
                        println!("relation {name}: {}", if ok { "ok" } else { "FAIL" });
                    }
                    println!(
                        "ladder certifies simplicity: {}",
                        if rep.ladder().certifies_simplicity() { "yes" } else { "no" }
                    );
                    printed = true;
                }
                if casimir_flag {
                    println!("{}", qsl2::casimir_scalar(&qp, n, eps));
                    printed = true;
                }
                if table || !printed {
                    for (name, mat) in [("E", rep.mat_e()), ("F", rep.mat_f()), ("K", rep.mat_k())]
                    {
                        for j in 0..rep.dim() {
                            println!("{name} v_{j} = {}", column_action(mat, j));
                        }
                    }
                }
            }
        }
        Command::Aut {
            family,
            r,
            lambda,
            apply,
            verify,
            compose,
            invert,
            casimir_sign,
        } => {
            let alpha = Automorphism::new(
                &qp,
                Family::from_index(family)?,
                r,
                parse_scalar(&lambda, &qp)?,
            )?;
            if let Some(expr) = apply {
                emit_element(&alpha.apply(&parse_element(&expr, &qp)?), json);
            } else if verify {
                let checks = alpha.homomorphism_checks();
                if json {
                    let mut obj = serde_json::Map::new();
                    obj.insert(
                        "homomorphism".into(),
                        json!(checks.iter().all(|(_, ok)| *ok)),
                    );
                    for (name, ok) in &checks {
                        obj.insert((*name).into(), json!(*ok));
                    }
                    emit_json(Value::Object(obj));
                } else {
                    for (name, ok) in checks {
                        println!("relation {name}: {}", if ok { "ok" } else { "FAIL" });
                    }
                }
            } else if let Some(text) = compose {
                let beta = descriptor_from_json(&text, &qp)?;
                emit_descriptor(&alpha.compose(&beta), json);
            } else if invert {
                emit_descriptor(&alpha.invert(), json);
            } else if casimir_sign {
                if json {
                    emit_json(json!({ "casimir_sign": alpha.casimir_sign().as_i8() }));
                } else {
                    println!("{}", alpha.casimir_sign());
                }
            }
        }
        Command::Iso { q, p, trace } => {
            let q0 = parse_rational(&q)?;
            let p0 = parse_rational(&p)?;
            let decision = decide_isomorphic(&q0, &p0)?;
            let trace_lines = if trace { Some(iso_trace(&q0, &p0)?) } else { None };
            if json {
                let mut body = json!({ "isomorphic": decision.isomorphic });
                let map = body.as_object_mut().expect("object");
                if let Some((direction, witness)) = &decision.witness {
                    map.insert("direction".into(), json!(direction.to_string()));
                    map.insert(
                        "witness".into(),
                        json!({
                            "a": witness.a.to_string(),
                            "b": witness.b.to_string(),
                            "epsilon": witness.epsilon.as_i8(),
                        }),
                    );
                }
                if let Some(lines) = &trace_lines {
                    let rows: Vec<Value> = lines
                        .iter()
                        .map(|line| {
                            json!({
                                "label": line.label,
                                "q_side": line.q_side.to_string(),
                                "p_side": line.p_side.to_string(),
                                "equal": line.sides_equal(),
                            })
                        })
                        .collect();
                    map.insert("trace".into(), json!(rows));
                }
                emit_json(body);
            } else {
                if let Some(lines) = &trace_lines {
                    for line in lines {
                        println!(
                            "{}: {} vs {} -> {}",
                            line.label,
                            line.q_side,
                            line.p_side,
                            if line.sides_equal() { "equal" } else { "differ" }
                        );
                    }
                }
                match &decision.witness {
                    Some((direction, _)) => {
                        println!("ISOMORPHIC ({direction}); Phi(c_q) = c_p");
                    }
                    None => println!("NOT ISOMORPHIC"),
                }
            }
        }
        Command::Identities { q, p } => {
            let q0 = match q {
                Some(text) => parse_rational(&text)?,
                None => BigRational::from_integer(2.into()),
            };
            let p0 = match p {
                Some(text) => parse_rational(&text)?,
                None => BigRational::from_integer(3.into()),
            };
            let differencing = differencing_identities();
            let report = factorization_witness(&q0, &p0)?;
            if json {
                emit_json(json!({
                    "differencing": differencing,
                    "q": q0.to_string(),
                    "p": p0.to_string(),
                    "difference": report.difference.to_string(),
                    "factored": report.factored.to_string(),
                    "point_identity": report.point_identity_holds,
                    "polynomial_identity": report.polynomial_identity_holds,
                }));
            } else {
                println!(
                    "power-sum differencing identities: {}",
                    pass_fail(differencing)
                );
                println!(
                    "factorization identity at (q, p) = ({q0}, {p0}): {} (difference = {}, factored = {})",
                    pass_fail(report.point_identity_holds),
                    report.difference,
                    report.factored
                );
                println!(
                    "bivariate factorization identity on the 25-point grid: {}",
                    pass_fail(report.polynomial_identity_holds)
                );
            }
        }
    }
    Ok(())
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn emit_json(value: Value) {
    println!("{}", serde_json::to_string(&value).expect("serializable"));
}

fn emit_element(x: &Element, json: bool) {
    if json {
        let terms: Vec<Value> = x
            .terms()
            .rev()
            .map(|(m, c)| {
                let (num, den) = scalar_strings(c);
                json!({ "e": m.e, "f": m.f, "k": m.k, "num": num, "den": den })
            })
            .collect();
        emit_json(json!(terms));
    } else {
        println!("{x}");
    }
}

fn emit_descriptor(alpha: &Automorphism, json: bool) {
    if json {
        emit_json(json!({
            "family": alpha.family().index(),
            "r": alpha.r(),
            "lambda": alpha.lambda().to_string(),
        }));
    } else {
        println!(
            "family = {}, r = {}, lambda = {}",
            alpha.family().index(),
            alpha.r(),
            alpha.lambda()
        );
    }
}

fn scalar_strings(c: &Scalar) -> (String, String) {
    match c {
        Scalar::Sym(f) => (f.num().to_string(), f.den().to_string()),
        Scalar::Num(r) => (r.numer().to_string(), r.denom().to_string()),
    }
}

fn matrix_rows(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect();
    json!(rows)
}

/// Image of the j-th basis vector under the matrix, in basis syntax:
/// "0", "v_i", or "(coeff)*v_i" (joined with " + " if ever non-sparse).
fn column_action(m: &Matrix, j: usize) -> String {
    let mut parts = Vec::new();
    for i in 0..m.dim() {
        let c = m.entry(i, j);
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(format!("v_{i}"));
        } else {
            parts.push(format!("({c})*v_{i}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn descriptor_from_json(text: &str, qp: &QParam) -> Result<Automorphism, Error> {
    let bad = |message: String| {
        Error::Parse(ParseError { pos: 0, message })
    };
    let value: Value = serde_json::from_str(text)
        .map_err(|e| bad(format!("descriptor is not valid JSON: {e}")))?;
    let family = value
        .get("family")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("descriptor needs an integer \"family\"".into()))?;
    let r = value
        .get("r")
        .and_then(Value::as_i64)
        .ok_or_else(|| bad("descriptor needs an integer \"r\"".into()))?;
    let lambda_text = value
        .get("lambda")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("descriptor needs a string \"lambda\"".into()))?;
    let family = u8::try_from(family).map_err(|_| Error::BadFamily(255))?;
    Automorphism::new(
        qp,
        Family::from_index(family)?,
        r,
        parse_scalar(lambda_text, qp)?,
    )
}
