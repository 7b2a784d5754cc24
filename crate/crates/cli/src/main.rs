//! `pigrowth`: codimensions, cocharacters and identity checks for the
//! catalog algebras, plus the full verification suite.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pigrowth::catalog::ENTRIES;
use pigrowth::claims::{self, Options};
use pigrowth::cochar::{self, fit_growth, format_fit};
use pigrowth::eval::{self, codimension_with, first_non_containment, proper_codimension_with};
use pigrowth::scalar::format_scalar;
use pigrowth::select::{bind_symbols, parse_algebra, parse_group, Bindings};
use pigrowth::tideal::{verify_tideal_with, GeneratorSet};
use pigrowth::{Error, Exec, GStarAlgebra};
use serde_json::json;

#[derive(Parser)]
#[command(name = "pigrowth", version, about = "Exact codimension and identity computations for (G,*)-algebras")]
struct Cli {
    /// Run every loop sequentially.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct One {
    /// Catalog selector, e.g. `C3:g` or `G2psi:1,3+Wnu1:1,3`.
    #[arg(long, conflicts_with = "json")]
    algebra: Option<String>,
    /// Algebra in the JSON schema.
    #[arg(long)]
    json: Option<String>,
    /// Group, e.g. `Z4`, `Z2,Z2`, or `Z4:1` to bind symbolic degrees.
    #[arg(long)]
    group: Option<String>,
}

#[derive(Args)]
struct Two {
    #[arg(long)]
    a: Option<String>,
    #[arg(long, conflicts_with = "a")]
    a_json: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long, conflicts_with = "b")]
    b_json: Option<String>,
    #[arg(long)]
    group: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
}

#[derive(Subcommand)]
enum Verb {
    /// List the catalog.
    Catalog {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Codimensions c_n.
    Codim {
        #[command(flatten)]
        alg: One,
        /// Inclusive range `a..b` or a single degree.
        #[arg(long, default_value = "0..5")]
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Proper codimensions of a unital algebra.
    Proper {
        #[command(flatten)]
        alg: One,
        #[arg(long, default_value = "0..5")]
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Nonzero cocharacter multiplicities of size 1 and 2.
    Cochar {
        #[command(flatten)]
        alg: One,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Polynomial fit of the codimension sequence.
    Fit {
        #[command(flatten)]
        alg: One,
        #[arg(long, default_value = "0..5")]
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Checks that generators span the identities up to a pattern size.
    VerifyTideal {
        #[command(flatten)]
        alg: One,
        /// Generator, e.g. `[x1^+_e,x2_g]`; repeatable.
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        /// Extra symbol binding `name=index`; repeatable.
        #[arg(long)]
        bind: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Use the generators as given, without star images and the
        /// variables of degrees outside the support.
        #[arg(long)]
        no_closure: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Id(A) ⊆ Id(B) up to a degree.
    Contains {
        #[command(flatten)]
        two: Two,
    },
    /// Id(A) = Id(B) up to a degree.
    Equiv {
        #[command(flatten)]
        two: Two,
    },
    /// Run the verification suite.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        scope: String,
        /// Corrupt a structure constant of W.
        #[arg(long)]
        inject_fault: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
}

fn load_one(o: &One) -> Result<(GStarAlgebra, String), Failure> {
    load(o.algebra.as_deref(), o.json.as_deref(), o.group.as_deref(), &[])
}

fn load(sel: Option<&str>, json: Option<&str>, group: Option<&str>, others: &[&str]) -> Result<(GStarAlgebra, String), Failure> {
    match (sel, json) {
        (_, Some(path)) => Ok((GStarAlgebra::from_json(&read(path)?)?, path.to_string())),
        (Some(sel), None) => {
            let g = parse_group(group.ok_or_else(|| usage("--group is required with a catalog selector"))?)?;
            let mut all = vec![sel];
            all.extend_from_slice(others);
            let b = bind_symbols(&all, &g.values)?;
            Ok((parse_algebra(sel, &g.group, &b)?, sel.to_string()))
        }
        (None, None) => Err(usage("give an algebra selector or a JSON file")),
    }
}

fn bindings_for(o: &One, extra: &[String]) -> Result<Bindings, Failure> {
    let mut b = match (&o.algebra, &o.group) {
        (Some(sel), Some(g)) => bind_symbols(&[sel], &parse_group(g)?.values)?,
        _ => Bindings::from([("e".to_string(), 0)]),
    };
    for kv in extra {
        let (k, v) = kv.split_once('=').ok_or_else(|| usage(format!("bad binding {kv:?}; expected name=index")))?;
        b.insert(k.trim().into(), v.trim().parse().map_err(|_| usage(format!("bad binding {kv:?}")))?);
    }
    Ok(b)
}

fn range(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || usage(format!("bad degree range {text:?}; expected a..b"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if a > b {
        return Err(bad());
    }
    let cap = pigrowth::exec::max_degree();
    if b > cap {
        return Err(usage(format!("degree {b} exceeds the cap {cap}; set PIGROWTH_MAX_N to raise it")));
    }
    Ok((a..=b).collect())
}

fn print_sequence(name: &str, label: &str, ns: &[usize], vals: &[String], format: Format) {
    match format {
        Format::Csv => println!("{}", vals.join(",")),
        Format::Json => {
            let v: Vec<serde_json::Value> =
                vals.iter().map(|x| serde_json::from_str(x).unwrap_or(json!(x))).collect();
            println!("{}", json!({"algebra": name, "n": ns, label: v}));
        }
        Format::Text => {
            for (n, v) in ns.iter().zip(vals) {
                println!("{n} {v}");
            }
        }
    }
}

fn two_algebras(t: &Two) -> Result<(GStarAlgebra, GStarAlgebra), Failure> {
    let sels: Vec<&str> = [t.a.as_deref(), t.b.as_deref()].into_iter().flatten().collect();
    let (a, _) = load(t.a.as_deref(), t.a_json.as_deref(), t.group.as_deref(), &sels)?;
    let (b, _) = load(t.b.as_deref(), t.b_json.as_deref(), t.group.as_deref(), &sels)?;
    Ok((a, b))
}

fn run(cli: Cli) -> Out {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match cli.verb {
        Verb::Catalog { format } => {
            match format {
                Format::Json => {
                    let v: Vec<_> = ENTRIES
                        .iter()
                        .map(|e| json!({"name": e.name, "degrees": e.degrees, "description": e.description}))
                        .collect();
                    println!("{}", serde_json::Value::Array(v));
                }
                Format::Csv => {
                    println!("name,degrees,description");
                    for e in ENTRIES {
                        println!("{},{},\"{}\"", e.name, e.degrees, e.description);
                    }
                }
                Format::Text => {
                    for e in ENTRIES {
                        println!("{:<10} {} degree(s)  {}", e.name, e.degrees, e.description);
                    }
                }
            }
            Ok(())
        }
        Verb::Codim { alg, n, format } => {
            let ns = range(&n)?;
            let (a, name) = load_one(&alg)?;
            let vals = ns.iter().map(|&k| codimension_with(&a, k, exec).map(|c| c.to_string())).collect::<Result<Vec<_>, _>>()?;
            print_sequence(&name, "codimensions", &ns, &vals, format);
            Ok(())
        }
        Verb::Proper { alg, n, format } => {
            let ns = range(&n)?;
            let (a, name) = load_one(&alg)?;
            let vals =
                ns.iter().map(|&k| proper_codimension_with(&a, k, exec).map(|c| c.to_string())).collect::<Result<Vec<_>, _>>()?;
            print_sequence(&name, "proper_codimensions", &ns, &vals, format);
            Ok(())
        }
        Verb::Cochar { alg, format } => {
            let (a, _) = load_one(&alg)?;
            let rows = cochar::cocharacter_table_with(&a, exec);
            match format {
                Format::Json => println!("{}", cochar::table_to_json(&rows)),
                Format::Csv => print!("{}", cochar::table_to_csv(&rows)),
                Format::Text => {
                    for r in &rows {
                        println!("{} {}", r.mp, r.mult);
                    }
                }
            }
            Ok(())
        }
        Verb::Fit { alg, n, format } => {
            let ns = range(&n)?;
            if ns[0] != 0 {
                return Err(usage("fit needs a range starting at 0"));
            }
            let (a, name) = load_one(&alg)?;
            let c = eval::codimensions(&a, *ns.last().expect("nonempty"), exec)?;
            let seq: Vec<i128> = c.iter().map(|&x| x as i128).collect();
            let fit = fit_growth(&seq)?;
            let g = a.group().order();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "algebra": name,
                        "codimensions": c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "degree": fit.degree,
                        "coefficients": fit.coefficients.iter().map(format_scalar).collect::<Vec<_>>(),
                        "from": fit.from,
                        "polynomial": format_fit(&fit),
                        "lower_bound": format_scalar(&fit.lower_bound()),
                        "lower_bound_holds": fit.lower_bound_holds(),
                        "upper_bound": format_scalar(&fit.upper_bound(g)),
                    })
                ),
                Format::Csv => {
                    println!("degree,leading,polynomial,lower_bound_holds");
                    println!("{},{},{},{}", fit.degree, format_scalar(fit.leading()), format_fit(&fit), fit.lower_bound_holds());
                }
                Format::Text => {
                    println!("c_n = {} for n >= {}", format_fit(&fit), fit.from);
                    println!("t = {}, q = {}", fit.degree, format_scalar(fit.leading()));
                    println!(
                        "lower bound 1/t! = {} {}",
                        format_scalar(&fit.lower_bound()),
                        if fit.lower_bound_holds() { "holds" } else { "fails" }
                    );
                    println!("upper bound (reported only): {}", format_scalar(&fit.upper_bound(g)));
                }
            }
            Ok(())
        }
        Verb::VerifyTideal { alg, gens, bind, max_degree, no_closure, format } => {
            let (a, _) = load_one(&alg)?;
            let b = bindings_for(&alg, &bind)?;
            let mut set = GeneratorSet::parse(&gens, a.group(), &b)?;
            if !no_closure {
                set = set.with_star_closure().with_outside_family(&a);
            }
            let r = verify_tideal_with(&a, &set, max_degree, exec)?;
            let failure = r.first_failure();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "ok": r.ok,
                        "non_identity": r.non_identity.map(|i| set.polys()[i].to_string()),
                        "checks": r.checks.iter().map(|c| json!({
                            "pattern": c.pattern.to_string(),
                            "identities": c.identities,
                            "consequences": c.consequences,
                        })).collect::<Vec<_>>(),
                    })
                ),
                _ => {
                    if let Some(i) = r.non_identity {
                        println!("FAIL: {} is not an identity", set.polys()[i]);
                    } else if let Some(f) = failure {
                        println!("FAIL: pattern {} has {} identities, {} generated", f.pattern, f.identities, f.consequences);
                    } else {
                        println!("PASS: {} patterns up to size {max_degree}", r.checks.len());
                    }
                }
            }
            if r.ok {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Verb::Contains { two } => {
            let (a, b) = two_algebras(&two)?;
            match first_non_containment(&a, &b, two.max_degree, exec)? {
                None => {
                    println!("CONTAINED");
                    Ok(())
                }
                Some(p) => {
                    println!("NOT CONTAINED (pattern {p})");
                    Err(Failure::Mismatch)
                }
            }
        }
        Verb::Equiv { two } => {
            let (a, b) = two_algebras(&two)?;
            let ab = first_non_containment(&a, &b, two.max_degree, exec)?;
            let ba = first_non_containment(&b, &a, two.max_degree, exec)?;
            match (ab, ba) {
                (None, None) => {
                    println!("EQUIVALENT");
                    Ok(())
                }
                (ab, ba) => {
                    let p = ab.map(|p| format!("an identity of A fails on B in pattern {p}"));
                    let q = ba.map(|p| format!("an identity of B fails on A in pattern {p}"));
                    println!("NOT EQUIVALENT ({})", p.into_iter().chain(q).collect::<Vec<_>>().join("; "));
                    Err(Failure::Mismatch)
                }
            }
        }
        Verb::VerifyPaper { scope, inject_fault, format } => {
            let report = claims::verify_paper(&scope, &Options { exec, inject_fault })?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable")),
                Format::Csv => print!("{}", report.to_csv()?),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.ok() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
