//! Command-line front end. `parse_and_run` is the whole program; the binary
//! only forwards argv and prints the result.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::gcdengine::{gcd_composite, lcm_composite};
use crate::ideals::{
    ideal_class, ideal_intersect, membership, normalize_ideal, reduce_generators, IdealClass, Membership,
};
use crate::oracle::{class_group_sequence, decide_dichotomy, decide_n_generator, decide_property, Holds, Property, TraceStep, Verdict};
use crate::parse::{parse_element, parse_ideal, parse_prime, parse_ring, InputError, ParseError};
use crate::poly::Poly;
use crate::ringdesc::{ClassGroup, CompositePair};
use crate::spectrum::{classify_prime, krull_dim, witness_chain, verify_chain, PrimeChain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// JSON schema every `--json` document on stdout or stderr conforms to.
pub const OUTPUT_SCHEMA: &str = include_str!("../schema/cli-output.schema.json");

#[derive(Debug, Parser)]
#[command(name = "polycomp", version, about = "Exact computations in composite rings K + X*L[X]")]
struct Cli {
    /// Composite ring, e.g. "Z + X*Q[X]".
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Coherent, Noetherian, Prufer, Bezout and GCD verdicts.
    Props {
        /// Also decide the n-generator property.
        #[arg(long)]
        n: Option<u32>,
    },
    /// gcd of two elements.
    Gcd { a: String, b: String },
    /// lcm of two elements.
    Lcm { a: String, b: String },
    /// Whether a divides b in R.
    Divides { a: String, b: String },
    /// Ideal membership with a certificate.
    Member { x: String, ideal: String },
    /// Normal form b*J*R of an ideal.
    Normalize { ideal: String },
    /// An equal ideal on fewer generators.
    Reduce { ideal: String },
    /// Intersection of two ideals.
    Intersect { i: String, j: String },
    /// Class of an ideal, or the class group of R when no ideal is given.
    Class { ideal: Option<String> },
    /// Krull dimension with a witness chain.
    Dim,
    /// Witness chain of primes.
    Chain,
    /// Place of a prime in the spectrum.
    ClassifyPrime { prime: String },
    /// Which finite-conductor branch the pair falls in.
    Dichotomy,
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Props { .. } => "props",
            Verb::Gcd { .. } => "gcd",
            Verb::Lcm { .. } => "lcm",
            Verb::Divides { .. } => "divides",
            Verb::Member { .. } => "member",
            Verb::Normalize { .. } => "normalize",
            Verb::Reduce { .. } => "reduce",
            Verb::Intersect { .. } => "intersect",
            Verb::Class { .. } => "class",
            Verb::Dim => "dim",
            Verb::Chain => "chain",
            Verb::ClassifyPrime { .. } => "classify-prime",
            Verb::Dichotomy => "dichotomy",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(ParseError),
    Domain(Error, Vec<TraceStep>),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Parse(p) => Failure::Parse(p),
            InputError::Domain(d) => Failure::Domain(d, Vec::new()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e, Vec::new())
    }
}

/// Rendered success: text form and JSON `result` object.
struct Rendered {
    text: String,
    json: Value,
}

type Run = std::result::Result<Rendered, Failure>;

pub fn parse_and_run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: rendered },
            };
        }
    };
    let verb = cli.verb.name();
    let Some(ring_src) = cli.ring.as_deref() else {
        return Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: "error: --ring <desc> is required\n".into() };
    };
    let result = parse_ring(ring_src).map_err(Failure::from).and_then(|pair| run(&pair, &cli.verb));
    match result {
        Ok(r) => {
            let stdout = if cli.json {
                let doc = json!({ "verb": verb, "ring": ring_src_canonical(ring_src), "result": r.json });
                pretty(&doc)
            } else {
                r.text
            };
            Outcome { code: EXIT_OK, stdout, stderr: String::new() }
        }
        Err(Failure::Parse(p)) => {
            let stderr = if cli.json {
                pretty(&json!({
                    "verb": verb,
                    "error": "ParseError",
                    "message": p.to_string(),
                    "position": p.pos,
                    "expected": p.expected,
                }))
            } else {
                format!("error: {p}\n")
            };
            Outcome { code: EXIT_PARSE, stdout: String::new(), stderr }
        }
        Err(Failure::Domain(e, trace)) => {
            let stderr = if cli.json {
                pretty(&json!({ "verb": verb, "error": e.name(), "message": e.to_string(), "trace": trace }))
            } else {
                let mut s = format!("error: {}: {e}\n", e.name());
                s.push_str(&render_trace(&trace));
                s
            };
            Outcome { code: EXIT_DOMAIN, stdout: String::new(), stderr }
        }
    }
}

fn ring_src_canonical(src: &str) -> String {
    parse_ring(src).map(|p| p.to_string()).unwrap_or_else(|_| src.to_string())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn render_trace(trace: &[TraceStep]) -> String {
    let mut s = String::new();
    for step in trace {
        let premises: Vec<String> = step.premises.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "  [{}] {}", step.cite, step.quote);
        if !premises.is_empty() {
            let _ = writeln!(s, "    premises: {}", premises.join(", "));
        }
    }
    s
}

/// Attaches the verdict explaining why a configuration error was raised.
fn explain(pair: &CompositePair, e: Error) -> Failure {
    let prop = match &e {
        Error::NotGCDConfiguration(_) => Some(Property::Gcd),
        Error::NotBezoutConfiguration(_) => Some(Property::Bezout),
        Error::NotPruferConfiguration(_) => Some(Property::Prufer),
        Error::NotNGeneratorConfiguration { n, .. } => Some(Property::NGenerator(*n)),
        _ => None,
    };
    let trace = match prop {
        Some(Property::NGenerator(n)) => decide_n_generator(pair, n).map(|v| v.trace).unwrap_or_default(),
        Some(p) => decide_property(pair, p).map(|v| v.trace).unwrap_or_default(),
        None => Vec::new(),
    };
    Failure::Domain(e, trace)
}

fn show_list<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn class_group_text(c: ClassGroup) -> String {
    match c {
        ClassGroup::Trivial => "trivial".into(),
        ClassGroup::CyclicOfOrder(n) => format!("cyclic of order {n}"),
        ClassGroup::Unknown => "unknown".into(),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn run(pair: &Arc<CompositePair>, verb: &Verb) -> Run {
    let el = |s: &str| parse_element(s, pair);
    let ideal = |s: &str| parse_ideal(s, pair);
    let domain = |e: Error| explain(pair, e);
    match verb {
        Verb::Props { n } => {
            let mut verdicts = Vec::new();
            for p in Property::FIVE {
                verdicts.push(decide_property(pair, p)?);
            }
            if let Some(n) = n {
                verdicts.push(decide_n_generator(pair, *n)?);
            }
            let mut text = String::new();
            for v in &verdicts {
                let cite = v.trace.last().map(|s| s.cite.as_str()).unwrap_or("");
                let _ = writeln!(text, "{:<14}{:<7}{}", v.property.to_string(), v.truth(), cite);
            }
            Ok(Rendered { text, json: json!({ "verdicts": verdicts.iter().map(verdict_json).collect::<Vec<_>>() }) })
        }
        Verb::Gcd { a, b } => {
            let (a, b) = (el(a)?, el(b)?);
            let g = gcd_composite(&a, &b).map_err(domain)?;
            let (ca, cb) = g.cofactors.expect("gcd_composite returns cofactors");
            Ok(Rendered {
                text: format!("{}\n", g.g),
                json: json!({ "gcd": g.g.to_string(), "cofactors": [ca.to_string(), cb.to_string()] }),
            })
        }
        Verb::Lcm { a, b } => {
            let l = lcm_composite(&el(a)?, &el(b)?).map_err(domain)?;
            Ok(Rendered { text: format!("{l}\n"), json: json!({ "lcm": l.to_string() }) })
        }
        Verb::Divides { a, b } => {
            let (a, b) = (el(a)?, el(b)?);
            let q = a.divides(&b)?;
            let text = match &q {
                Some(q) => format!("true\nquotient: {q}\n"),
                None => "false\n".to_string(),
            };
            Ok(Rendered { text, json: json!({ "divides": q.is_some(), "quotient": q.map(|q| q.to_string()) }) })
        }
        Verb::Member { x, ideal: i } => {
            let (x, i) = (el(x)?, ideal(i)?);
            let m = membership(&x, &i).map_err(domain)?;
            let (text, json) = match m {
                Membership::Member(cs) => (
                    format!("member\ncoefficients: {}\n", show_list(&cs).join("; ")),
                    json!({ "member": true, "coefficients": show_list(&cs), "bound": null }),
                ),
                Membership::NotMember => {
                    ("not member\n".to_string(), json!({ "member": false, "coefficients": null, "bound": null }))
                }
                Membership::NotMemberWithinBound(n) => (
                    format!("not member with coefficients of degree at most {n}\n"),
                    json!({ "member": false, "coefficients": null, "bound": n }),
                ),
            };
            Ok(Rendered { text, json })
        }
        Verb::Normalize { ideal: i } => {
            let nf = normalize_ideal(&ideal(i)?).map_err(domain)?;
            let lambdas: Vec<String> = nf.lambdas.iter().map(|c| Poly::constant(c.clone()).to_string()).collect();
            let principal = nf.j().principal_generator()?.is_some();
            let text = format!(
                "b = {}\nJ = K({})\nwitness: {}\nJ principal: {}\n",
                nf.b,
                lambdas.join("; "),
                show_list(&nf.b_witness).join("; "),
                principal
            );
            Ok(Rendered {
                text,
                json: json!({
                    "b": nf.b.to_string(),
                    "lambdas": lambdas,
                    "b_witness": show_list(&nf.b_witness),
                    "j_principal": principal,
                }),
            })
        }
        Verb::Reduce { ideal: i } => {
            let r = reduce_generators(&ideal(i)?).map_err(domain)?;
            Ok(Rendered {
                text: format!("{r}\n"),
                json: json!({ "ideal": r.to_string(), "generators": show_list(r.gens()) }),
            })
        }
        Verb::Intersect { i, j } => {
            let r = ideal_intersect(&ideal(i)?, &ideal(j)?).map_err(domain)?;
            Ok(Rendered {
                text: format!("{r}\n"),
                json: json!({ "ideal": r.to_string(), "generators": show_list(r.gens()) }),
            })
        }
        Verb::Class { ideal: Some(i) } => {
            let c = ideal_class(&ideal(i)?).map_err(domain)?;
            let order = match c {
                IdealClass::Trivial => 1,
                IdealClass::NonTrivial { order } => order,
            };
            Ok(Rendered { text: format!("{c}\n"), json: json!({ "class": c.to_string(), "order": order }) })
        }
        Verb::Class { ideal: None } => {
            let rep = class_group_sequence(pair).map_err(domain)?;
            let text = format!(
                "C(K) = {}\nC(L[X]) = {}\nC(R) = {}\n{}",
                class_group_text(rep.c_k),
                class_group_text(rep.c_t),
                class_group_text(rep.c_r),
                render_trace(&rep.trace)
            );
            Ok(Rendered { text, json: serde_json::to_value(&rep).expect("serializable") })
        }
        Verb::Dim => {
            let d = krull_dim(pair)?;
            let chain = witness_chain(pair)?;
            Ok(Rendered { text: format!("{d}\n{}", chain_text(&chain)), json: json!({ "krull_dim": d, "chain": chain_json(pair, &chain)? }) })
        }
        Verb::Chain => {
            let chain = witness_chain(pair)?;
            Ok(Rendered { text: chain_text(&chain), json: chain_json(pair, &chain)? })
        }
        Verb::ClassifyPrime { prime } => {
            let q = parse_prime(prime, pair)?;
            let rep = classify_prime(pair, &q)?;
            let text = format!(
                "prime: {}\nbranch: {:?}\ncontraction to K: {}\ncontains M: {}\nmaximal: {}\nheight: {}\nquotient: {}\n",
                rep.prime, rep.branch, rep.k_contraction, rep.contains_m, rep.maximal, rep.height, rep.quotient
            );
            Ok(Rendered { text, json: serde_json::to_value(&rep).expect("serializable") })
        }
        Verb::Dichotomy => {
            let v = decide_dichotomy(pair)?;
            Ok(Rendered { text: format!("{}\n{}", holds_text(&v), render_trace(&v.trace)), json: verdict_json(&v) })
        }
    }
}

fn holds_text(v: &Verdict) -> String {
    match v.holds {
        Holds::Bool(b) => b.to_string(),
        Holds::Branch(b) => b.to_string(),
    }
}

fn chain_text(chain: &PrimeChain) -> String {
    let mut s = show_list(&chain.links).join(" < ");
    s.push('\n');
    for (i, sep) in chain.separators.iter().enumerate() {
        let _ = writeln!(s, "  {} in {} but not in {}", sep, chain.links[i + 1], chain.links[i]);
    }
    s
}

fn chain_json(pair: &Arc<CompositePair>, chain: &PrimeChain) -> std::result::Result<Value, Failure> {
    Ok(json!({
        "links": show_list(&chain.links),
        "separators": show_list(&chain.separators),
        "verified": verify_chain(pair, chain)?,
    }))
}
