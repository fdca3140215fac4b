//! `altdef`: identity checks, cohomology and deformation computations over
//! the rationals, reported as deterministic JSON.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use altdef_core::catalog::CATALOG_NAMES;
use altdef_core::cochain::{apply_differential, Cochain};
use altdef_core::deformation::{
    deformation_residuals, equivalence_check, integrate, kill_leading_coboundary, obstruction,
};
use altdef_core::identities::{check_identity, Identity};
use altdef_core::io::{self, to_canonical_string};
use altdef_core::{catalog, cohomology, verify_class, Algebra, Element, Error};

#[derive(Parser)]
#[command(
    name = "altdef",
    version,
    about = "Left alternative cohomology and formal deformations"
)]
struct Cli {
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    LeftAlternative,
    Hochschild,
}

impl From<TheoryArg> for altdef_core::Theory {
    fn from(t: TheoryArg) -> Self {
        match t {
            TheoryArg::LeftAlternative => altdef_core::Theory::LeftAlternative,
            TheoryArg::Hochschild => altdef_core::Theory::Hochschild,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check polynomial identities on basis tuples.
    Check {
        /// Catalog name or path to an algebra file.
        algebra: String,
        /// Comma separated identity names; all by default.
        #[arg(long, value_delimiter = ',')]
        identities: Option<Vec<String>>,
    },
    /// Cocycles, coboundaries and cohomology representatives.
    Cohomology {
        algebra: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "left-alternative")]
        theory: TheoryArg,
    },
    /// Decide whether a 2-cochain is a cocycle and a coboundary.
    VerifyClass {
        algebra: String,
        cochain: PathBuf,
        #[arg(long, value_enum, default_value = "left-alternative")]
        theory: TheoryArg,
    },
    /// Obstruction to extending a jet by one order.
    Obstruct {
        algebra: String,
        #[arg(long)]
        jet: PathBuf,
    },
    /// Extend a 2-cocycle order by order.
    Integrate {
        algebra: String,
        cochain: PathBuf,
        #[arg(long)]
        max_order: usize,
    },
    /// Deformation equation residuals for k = 0..order.
    DeformVerify {
        algebra: String,
        #[arg(long)]
        jet: PathBuf,
    },
    /// Check that a gauge carries one jet onto another.
    Equiv {
        algebra: String,
        #[arg(long = "jet-a")]
        jet_a: PathBuf,
        #[arg(long = "jet-b")]
        jet_b: PathBuf,
        #[arg(long)]
        gauge: PathBuf,
    },
    /// Remove coboundary leading terms from a jet.
    Normalize {
        algebra: String,
        #[arg(long)]
        jet: PathBuf,
    },
    /// Subalgebra generated by basis elements (1-based indices).
    Subalgebra {
        algebra: String,
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<usize>,
        #[arg(long)]
        check_associative: bool,
    },
    /// List or dump built-in algebras.
    Catalog {
        #[arg(long, conflicts_with = "dump")]
        list: bool,
        #[arg(long)]
        dump: Option<String>,
    },
}

/// An input error, reported with exit code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// A finished computation: the payload, the canonical inputs it depends on,
/// a one-line summary, and any violated internal invariant.
struct Run {
    output: Value,
    inputs: Value,
    summary: String,
    violation: Option<String>,
}

fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: altdef_core::Result<T>) -> Outcome<T> {
    r.map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// A catalog name, or else a path to an algebra file.
fn load_algebra(name: &str) -> Outcome<Algebra> {
    match catalog(name) {
        Ok(a) => Ok(a),
        Err(Error::UnknownAlgebra(_)) if Path::new(name).is_file() => {
            let path = Path::new(name);
            with_path(path, io::parse_algebra(&read(path)?))
        }
        Err(e) => Err(Failure(format!("{e} (and no file named `{name}`)"))),
    }
}

fn load_cochain(path: &Path, a: &Algebra, degree: usize) -> Outcome<Cochain> {
    let c = with_path(path, io::parse_cochain(&read(path)?))?;
    if c.degree() != degree || c.dim() != a.dim() {
        return Err(Failure(format!(
            "{}: expected a degree {degree} cochain of dim {}, found degree {} dim {}",
            path.display(),
            a.dim(),
            c.degree(),
            c.dim()
        )));
    }
    Ok(c)
}

fn load_jet(path: &Path, a: &Algebra) -> Outcome<altdef_core::DeformationJet> {
    with_path(path, io::parse_jet(&read(path)?, a))
}

fn digest(verb: &str, inputs: &Value) -> String {
    let canonical =
        serde_json::to_string(&json!({ "verb": verb, "inputs": inputs })).expect("serializable");
    format!(
        "sha256:{}",
        hex::encode(Sha256::digest(canonical.as_bytes()))
    )
}

fn verb_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Cohomology { .. } => "cohomology",
        Command::VerifyClass { .. } => "verify-class",
        Command::Obstruct { .. } => "obstruct",
        Command::Integrate { .. } => "integrate",
        Command::DeformVerify { .. } => "deform-verify",
        Command::Equiv { .. } => "equiv",
        Command::Normalize { .. } => "normalize",
        Command::Subalgebra { .. } => "subalgebra",
        Command::Catalog { .. } => "catalog",
    }
}

fn execute(command: &Command) -> Outcome<Run> {
    match command {
        Command::Check {
            algebra,
            identities,
        } => {
            let a = load_algebra(algebra)?;
            let which: Vec<Identity> = match identities {
                None => Identity::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|n| n.parse())
                    .collect::<Result<_, Error>>()?,
            };
            let reports = which
                .iter()
                .map(|&i| check_identity(&a, i))
                .collect::<Result<Vec<_>, _>>()?;
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.holds)
                .map(|r| r.identity.as_str())
                .collect();
            let summary = format!(
                "{}: {} of {} identities hold{}",
                a.name(),
                reports.len() - failed.len(),
                reports.len(),
                if failed.is_empty() {
                    String::new()
                } else {
                    format!("; fails {}", failed.join(", "))
                }
            );
            Ok(Run {
                output: json!({
                    "algebra": a.name(),
                    "results": reports.iter().map(io::identity_report_value).collect::<Vec<_>>(),
                }),
                inputs: json!({
                    "algebra": io::algebra_to_value(&a),
                    "identities": which.iter().map(|i| i.name()).collect::<Vec<_>>(),
                }),
                summary,
                violation: None,
            })
        }
        Command::Cohomology {
            algebra,
            degree,
            theory,
        } => {
            let a = load_algebra(algebra)?;
            let theory = altdef_core::Theory::from(*theory);
            let r = cohomology(&a, *degree, theory)?;
            let violation = (!r.verification.generators_are_cocycles
                || !r.verification.independent_mod_coboundaries
                || r.dim_h + r.dim_coboundaries != r.dim_cocycles)
                .then(|| "cohomology report failed its own verification".to_string());
            Ok(Run {
                summary: format!(
                    "{}: dim H^{} ({}) = {} [cochains {}, cocycles {}, coboundaries {}]",
                    a.name(),
                    degree,
                    theory,
                    r.dim_h,
                    r.dim_cochains,
                    r.dim_cocycles,
                    r.dim_coboundaries
                ),
                output: io::cohomology_report_value(a.name(), &r),
                inputs: json!({
                    "algebra": io::algebra_to_value(&a),
                    "degree": degree,
                    "theory": theory.name(),
                }),
                violation,
            })
        }
        Command::VerifyClass {
            algebra,
            cochain,
            theory,
        } => {
            let a = load_algebra(algebra)?;
            let theory = altdef_core::Theory::from(*theory);
            let phi = load_cochain(cochain, &a, 2)?;
            let c = verify_class(&a, &phi, theory)?;
            Ok(Run {
                summary: format!(
                    "{}: cocycle {}, coboundary {}",
                    a.name(),
                    c.cocycle,
                    c.coboundary
                ),
                output: io::class_check_value(a.name(), theory.name(), &c),
                inputs: json!({
                    "algebra": io::algebra_to_value(&a),
                    "cochain": io::cochain_to_value(&phi),
                    "theory": theory.name(),
                }),
                violation: None,
            })
        }
        Command::Obstruct { algebra, jet } => {
            let a = load_algebra(algebra)?;
            let j = load_jet(jet, &a)?;
            let r = with_path(jet, obstruction(&j))?;
            let violation = match &r.extension {
                Some(ext)
                    if apply_differential(&a, ext, altdef_core::Theory::LeftAlternative)?
                        != r.obstruction =>
                {
                    Some("extension does not solve the obstruction equation".to_string())
                }
                _ => None,
            };
            Ok(Run {
                summary: format!(
                    "{}: obstruction at order {}: cocycle {}, solvable {}",
                    a.name(),
                    r.order,
                    r.is_cocycle,
                    r.solvable
                ),
                output: io::obstruction_value(&r),
                inputs: json!({ "algebra": io::algebra_to_value(&a), "jet": io::jet_to_value(&j) }),
                violation,
            })
        }
        Command::Integrate {
            algebra,
            cochain,
            max_order,
        } => {
            let a = load_algebra(algebra)?;
            let mu1 = load_cochain(cochain, &a, 2)?;
            let r = with_path(cochain, integrate(&a, &mu1, *max_order))?;
            let summary = match &r.failure {
                None => format!("{}: integrated to order {}", a.name(), r.stopped_at),
                Some(f) => format!(
                    "{}: obstructed at order {} (jet reaches order {})",
                    a.name(),
                    f.order,
                    r.stopped_at
                ),
            };
            Ok(Run {
                summary,
                output: io::integration_value(&r, *max_order),
                inputs: json!({
                    "algebra": io::algebra_to_value(&a),
                    "cochain": io::cochain_to_value(&mu1),
                    "max_order": max_order,
                }),
                violation: None,
            })
        }
        Command::DeformVerify { algebra, jet } => {
            let a = load_algebra(algebra)?;
            let j = load_jet(jet, &a)?;
            let residuals = deformation_residuals(&j)?;
            let bad: Vec<String> = residuals
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.is_zero())
                .map(|(k, _)| k.to_string())
                .collect();
            Ok(Run {
                summary: if bad.is_empty() {
                    format!(
                        "{}: jet of order {} satisfies the deformation equation",
                        a.name(),
                        j.order()
                    )
                } else {
                    format!("{}: nonzero residuals at k = {}", a.name(), bad.join(", "))
                },
                output: io::residuals_value("deformation-residuals", &residuals),
                inputs: json!({ "algebra": io::algebra_to_value(&a), "jet": io::jet_to_value(&j) }),
                violation: None,
            })
        }
        Command::Equiv {
            algebra,
            jet_a,
            jet_b,
            gauge,
        } => {
            let a = load_algebra(algebra)?;
            let ja = load_jet(jet_a, &a)?;
            let jb = load_jet(jet_b, &a)?;
            let g = with_path(gauge, io::parse_gauge(&read(gauge)?, a.dim()))?;
            let residuals = equivalence_check(&ja, &jb, &g)?;
            let ok = residuals.iter().all(Cochain::is_zero);
            Ok(Run {
                summary: format!(
                    "{}: gauge {} the jets through order {}",
                    a.name(),
                    if ok { "relates" } else { "does not relate" },
                    residuals.len() - 1
                ),
                output: io::residuals_value("equivalence", &residuals),
                inputs: json!({
                    "algebra": io::algebra_to_value(&a),
                    "jet_a": io::jet_to_value(&ja),
                    "jet_b": io::jet_to_value(&jb),
                    "gauge": io::gauge_to_value(&g),
                }),
                violation: None,
            })
        }
        Command::Normalize { algebra, jet } => {
            let a = load_algebra(algebra)?;
            let j = load_jet(jet, &a)?;
            let (normal, gauge) = with_path(jet, kill_leading_coboundary(&j))?;
            let check = equivalence_check(&j, &normal, &gauge)?;
            let violation = (!check.iter().all(Cochain::is_zero))
                .then(|| "normalizing gauge does not relate the jets".to_string());
            let leading = normal.terms().iter().position(|t| !t.is_zero());
            Ok(Run {
                summary: match leading {
                    None => format!(
                        "{}: jet is trivial through order {}",
                        a.name(),
                        normal.order()
                    ),
                    Some(i) => format!(
                        "{}: leading term at order {} is not a coboundary",
                        a.name(),
                        i + 1
                    ),
                },
                output: io::normalization_value(&normal, &gauge),
                inputs: json!({ "algebra": io::algebra_to_value(&a), "jet": io::jet_to_value(&j) }),
                violation,
            })
        }
        Command::Subalgebra {
            algebra,
            generators,
            check_associative,
        } => {
            let a = load_algebra(algebra)?;
            let gens = generators
                .iter()
                .map(|&i| {
                    if i == 0 || i > a.dim() {
                        Err(Failure(format!(
                            "generator index {i} out of range 1..={}",
                            a.dim()
                        )))
                    } else {
                        Ok(a.basis_element(i - 1))
                    }
                })
                .collect::<Outcome<Vec<Element>>>()?;
            let (basis, dim) = a.subalgebra_closure(&gens)?;
            let assoc = if *check_associative {
                Some(a.restricted_associativity(&basis)?)
            } else {
                None
            };
            let mut summary = format!("{}: generated subalgebra has dim {dim}", a.name());
            if let Some(r) = &assoc {
                summary.push_str(if r.holds {
                    ", associative"
                } else {
                    ", not associative"
                });
            }
            Ok(Run {
                summary,
                output: json!({
                    "algebra": a.name(),
                    "generators": generators,
                    "dim": dim,
                    "basis": basis
                        .iter()
                        .map(|e| e.coords().iter().map(altdef_core::linalg::format_rational).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                    "associative": assoc.as_ref().map(io::identity_report_value),
                }),
                inputs: json!({
                    "algebra": io::algebra_to_value(&a),
                    "generators": generators,
                    "check_associative": check_associative,
                }),
                violation: None,
            })
        }
        Command::Catalog {
            dump: Some(name), ..
        } => {
            let a = catalog(name)?;
            Ok(Run {
                summary: format!("{}: dim {}", a.name(), a.dim()),
                output: io::algebra_to_value(&a),
                inputs: json!({ "dump": name }),
                violation: None,
            })
        }
        // listing is the default
        Command::Catalog { .. } => Ok(Run {
            summary: format!("{} catalog entries", CATALOG_NAMES.len()),
            output: json!({ "algebras": CATALOG_NAMES }),
            inputs: json!({}),
            violation: None,
        }),
    }
}

fn emit(text: &str, out: Option<&Path>) -> bool {
    print!("{text}");
    match out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => true,
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                false
            }
        },
        None => true,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let verb = verb_name(&cli.command);
    let out = cli.out.as_deref();
    let dump = matches!(cli.command, Command::Catalog { dump: Some(_), .. });

    match execute(&cli.command) {
        Ok(run) => {
            eprintln!("{}", run.summary);
            // a dump is the algebra document itself so it can be read back
            let text = if dump {
                to_canonical_string(&run.output)
            } else {
                let status = if run.violation.is_some() {
                    "internal-error"
                } else {
                    "ok"
                };
                let mut report = json!({
                    "command": { "verb": verb, "args": args },
                    "inputs_digest": digest(verb, &run.inputs),
                    "output": run.output,
                    "status": status,
                });
                if let Some(v) = &run.violation {
                    report["error"] = json!(v);
                }
                to_canonical_string(&report)
            };
            if !emit(&text, out) {
                return ExitCode::from(2);
            }
            match run.violation {
                Some(v) => {
                    eprintln!("error: internal invariant violated: {v}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            let report = json!({
                "command": { "verb": verb, "args": args },
                "error": message,
                "status": "input-error",
            });
            emit(&to_canonical_string(&report), out);
            ExitCode::from(2)
        }
    }
}
