//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards its arguments and standard streams.
//!
//! Exit codes: 0 on success, 1 when the mathematics says no (an invalid
//! precubical set, a failed identity), 2 for usage and input errors.

pub mod render;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::cohomology::{cohomology_groups, cohomology_ring, CohomologyError};
use crate::complex::{cup, Coeff, Cochain};
use crate::cubical::{builders, PrecubicalSet, MAX_DIM};
use crate::document::{parse, serialize};
use crate::linalg::is_prime;
use crate::propcheck::{
    anticommutativity_report, anticommutativity_survey, check, check_on, GenConfig, Property,
    PropertyReport,
};

use render::{
    cochain_expression, cochain_values, cohomology_json, cohomology_text, number, ring_table_json,
    ring_table_text, CubeValue,
};

/// Names accepted by `--builtin`.
pub const BUILTINS: &[&str] = &["point", "interval", "circle", "torus", "t3", "klein", "cubeN (N <= 12)"];

pub fn builtin(name: &str) -> Option<PrecubicalSet> {
    Some(match name {
        "point" => builders::point(),
        "interval" => builders::interval(),
        "circle" => builders::circle(),
        "torus" => builders::torus(),
        "klein" => builders::klein_bottle(),
        "t3" => builders::tensor_product(&builders::torus(), &builders::circle()),
        _ => {
            let n: usize = name.strip_prefix("cube")?.parse().ok()?;
            if n > MAX_DIM {
                return None;
            }
            builders::standard_cube(n)
        }
    })
}

#[derive(Parser, Debug)]
#[command(name = "precubical", version, about = "Cohomology rings of finite precubical sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Precubical set document, or `-` for standard input.
    file: Option<PathBuf>,
    /// A built-in set: point, interval, circle, torus, t3, klein or cubeN.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalInput {
    /// Fixed instance to test instead of random ones.
    file: Option<PathBuf>,
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the face table and the cubical identities.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Print the canonical document of a set.
    Export {
        #[command(flatten)]
        input: Input,
    },
    /// Cohomology groups with generating cocycles.
    Cohomology {
        #[command(flatten)]
        input: Input,
        /// Z or Z/p with p prime.
        #[arg(long, default_value = "Z")]
        coeff: Coeff,
        #[arg(long)]
        json: bool,
    },
    /// Cup product of two cochains given as `[dim/]label:value,...`.
    Cup {
        #[command(flatten)]
        input: Input,
        #[arg(long = "p-cochain", allow_hyphen_values = true)]
        p_cochain: String,
        #[arg(long = "q-cochain", allow_hyphen_values = true)]
        q_cochain: String,
        /// Z or Z/m.
        #[arg(long, default_value = "Z")]
        coeff: Coeff,
        #[arg(long)]
        json: bool,
    },
    /// Products of all pairs of generators, as classes.
    RingTable {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "Z")]
        coeff: Coeff,
        #[arg(long)]
        json: bool,
    },
    /// Run identities on random instances, or on a given one.
    Check {
        #[command(flatten)]
        input: OptionalInput,
        /// Comma-separated property names, `all`, or `list` to print them.
        #[arg(long, default_value = "all")]
        props: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, env = "PRECUBICAL_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "Z")]
        coeff: Coeff,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 3)]
        factors: usize,
        #[arg(long, default_value_t = 2)]
        vertices: usize,
        #[arg(long, default_value_t = 3)]
        edges: usize,
        #[arg(long, default_value_t = 0.5)]
        fraction: f64,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("I/O error: {e}"))
    }
}

impl From<CohomologyError> for Failure {
    fn from(e: CohomologyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(file: Option<&PathBuf>, builtin_name: Option<&str>) -> Result<PrecubicalSet, Failure> {
    if let Some(name) = builtin_name {
        return builtin(name).ok_or_else(|| {
            Failure::Usage(format!("unknown builtin '{name}' (available: {})", BUILTINS.join(", ")))
        });
    }
    let path = file.ok_or_else(|| Failure::Usage("no input given".into()))?;
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_valid(input: &Input) -> Result<PrecubicalSet, Failure> {
    let x = load(input.file.as_ref(), input.builtin.as_deref())?;
    let report = x.validate();
    if !report.is_valid() {
        return Err(Failure::Math(format!("not a precubical set:\n{report}")));
    }
    Ok(x)
}

/// Parses `[dim/]label:value,...`. Unlisted cubes are 0. Without a dimension
/// prefix the labels must determine the dimension.
pub fn parse_cochain(x: &PrecubicalSet, spec: &str, ring: &Coeff) -> Result<Cochain<Coeff>, String> {
    let spec = spec.trim();
    let (dim, body) = match spec.split_once('/') {
        Some((d, rest)) if !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()) => {
            (Some(d.parse::<usize>().map_err(|e| e.to_string())?), rest)
        }
        _ => (None, spec),
    };
    let mut entries = Vec::new();
    for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (label, value) = item
            .rsplit_once(':')
            .ok_or_else(|| format!("'{item}' is not of the form label:value"))?;
        let value: BigInt = value.trim().parse().map_err(|_| format!("'{}' is not an integer", value.trim()))?;
        entries.push((label.trim(), value));
    }
    let dim = match dim {
        Some(d) => d,
        None => {
            let (label, _) = entries
                .first()
                .ok_or_else(|| "an empty cochain needs a dimension prefix such as '1/'".to_string())?;
            let dims: Vec<usize> = (0..=x.max_dim().unwrap_or(0)).filter(|&d| x.find(d, label).is_some()).collect();
            match dims.as_slice() {
                [d] => *d,
                [] => return Err(format!("no cube is labelled '{label}'")),
                _ => return Err(format!("'{label}' occurs in several dimensions; add a prefix such as '{}/'", dims[0])),
            }
        }
    };
    let mut values = vec![BigInt::from(0); x.cube_count(dim)];
    for (label, value) in entries {
        let u = x.find(dim, label).ok_or_else(|| format!("no {dim}-cube is labelled '{label}'"))?;
        values[u.index] += value;
    }
    let values = values.into_iter().map(|v| ring.reduce(v)).collect();
    Cochain::from_values(x, dim, ring.clone(), values).map_err(|e| e.to_string())
}

fn write_json(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

#[derive(serde::Serialize)]
struct CupJson {
    coefficients: String,
    dimension: usize,
    values: Vec<CubeValue>,
    class: Option<Vec<serde_json::Value>>,
    expression: Option<String>,
}

fn properties(spec: &str) -> Result<Vec<String>, Failure> {
    if spec.trim() == "all" {
        let mut v: Vec<String> = Property::ALL.iter().map(|p| p.name().to_string()).collect();
        v.push("anticommutativity_classes".into());
        return Ok(v);
    }
    let names: Vec<String> = spec.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    for n in &names {
        if n != "anticommutativity_classes" {
            n.parse::<Property>().map_err(|e| Failure::Usage(e.to_string()))?;
        }
    }
    if names.is_empty() {
        return Err(Failure::Usage("no properties given".into()));
    }
    Ok(names)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { input } => {
            let x = load(input.file.as_ref(), input.builtin.as_deref())?;
            let report = x.validate();
            if report.is_valid() {
                writeln!(out, "valid: cube counts {:?}", x.cube_counts())?;
                Ok(())
            } else {
                for v in &report.violations {
                    writeln!(out, "{}", v.describe(&x))?;
                }
                Err(Failure::Math(format!("{} violation(s)", report.violations.len())))
            }
        }
        Command::Export { input } => {
            let x = load(input.file.as_ref(), input.builtin.as_deref())?;
            write!(out, "{}", serialize(&x))?;
            Ok(())
        }
        Command::Cohomology { input, coeff, json } => {
            let x = load_valid(&input)?;
            let groups = cohomology_groups(&x, &coeff)?;
            if json {
                write_json(out, &cohomology_json(&x, &coeff, &groups))
            } else {
                write!(out, "{}", cohomology_text(&x, &groups))?;
                Ok(())
            }
        }
        Command::Cup { input, p_cochain, q_cochain, coeff, json } => {
            let x = load_valid(&input)?;
            let phi = parse_cochain(&x, &p_cochain, &coeff).map_err(|e| Failure::Usage(format!("--p-cochain: {e}")))?;
            let psi = parse_cochain(&x, &q_cochain, &coeff).map_err(|e| Failure::Usage(format!("--q-cochain: {e}")))?;
            let prod = cup(&x, &phi, &psi).map_err(|e| Failure::Usage(e.to_string()))?;
            // The class is reported when the product is a cocycle and the
            // coefficients admit a cohomology computation.
            let class = match cohomology_groups(&x, &coeff) {
                Ok(groups) => groups.get(prod.dim()).and_then(|g| g.class_of(&prod).ok()),
                Err(_) => None,
            };
            if json {
                write_json(
                    out,
                    &CupJson {
                        coefficients: coeff.to_string(),
                        dimension: prod.dim(),
                        values: cochain_values(&x, &prod),
                        class: class.as_ref().map(|c| c.iter().map(number).collect()),
                        expression: class.as_ref().map(|c| render::class_expression(prod.dim(), c)),
                    },
                )
            } else {
                writeln!(out, "dimension {}: {}", prod.dim(), cochain_expression(&x, &prod))?;
                if let Some(c) = class {
                    writeln!(out, "class: {}", render::class_expression(prod.dim(), &c))?;
                }
                Ok(())
            }
        }
        Command::RingTable { input, coeff, json } => {
            let x = load_valid(&input)?;
            let hr = cohomology_ring(&x, &coeff)?;
            let unit = hr.unit_class(&x)?;
            if json {
                write_json(out, &ring_table_json(&hr, &unit))
            } else {
                write!(out, "{}", ring_table_text(&hr, &unit))?;
                Ok(())
            }
        }
        Command::Check { input, props, trials, seed, coeff, max_dim, factors, vertices, edges, fraction } => {
            if props.trim() == "list" {
                for p in Property::ALL {
                    let kind = if p.is_assertion() { "" } else { "  (report only)" };
                    writeln!(out, "{}{kind}", p.name())?;
                }
                writeln!(out, "anticommutativity_classes  (report only)")?;
                return Ok(());
            }
            let names = properties(&props)?;
            let fixed = match (&input.file, &input.builtin) {
                (None, None) => None,
                (f, b) => Some(load_valid(&Input { file: f.clone(), builtin: b.clone() })?),
            };
            let cfg = GenConfig { seed, max_dim, vertices, edges, factors, fraction, ring: coeff.clone() };
            cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "seed {seed}, {trials} trials, coefficients {coeff}")?;
            let mut failed = Vec::new();
            for name in names {
                if name == "anticommutativity_classes" && !coeff.modulus().map_or(true, is_prime) {
                    writeln!(out, "{name}: skipped, cohomology needs Z or Z/p with p prime")?;
                    continue;
                }
                let report: PropertyReport = if name == "anticommutativity_classes" {
                    match &fixed {
                        Some(x) => anticommutativity_report(x, &coeff, trials, seed),
                        None => anticommutativity_survey(&cfg, trials),
                    }
                } else {
                    let p: Property = name.parse().expect("checked above");
                    match &fixed {
                        Some(x) => check_on(p, x, &coeff, seed, trials),
                        None => check(p, &cfg, trials),
                    }
                }
                .map_err(|e| Failure::Usage(e.to_string()))?;
                writeln!(out, "{report}")?;
                if report.asserted && !report.passed() {
                    failed.push(report.property);
                }
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Math(format!("failed: {}", failed.join(", "))))
            }
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Math(m)) => {
            let _ = writeln!(err, "{m}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("precubical").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn builtins_resolve() {
        assert_eq!(builtin("cube3").unwrap().cube_counts(), vec![8, 12, 6, 1]);
        assert_eq!(builtin("t3").unwrap().cube_counts(), vec![1, 3, 3, 1]);
        assert!(builtin("cube13").is_none());
        assert!(builtin("sphere").is_none());
    }

    #[test]
    fn torus_cohomology_line() {
        let (code, out, _) = run_str(&["cohomology", "--builtin", "torus"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("H^0 = Z, H^1 = Z^2, H^2 = Z"));
    }

    #[test]
    fn cochain_specs() {
        let t = builders::torus();
        let z = Coeff::Integers;
        let c = parse_cochain(&t, "t1:2, t2:-1", &z).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.values(), &[BigInt::from(2), BigInt::from(-1)]);
        assert_eq!(parse_cochain(&t, "2/", &z).unwrap().values(), &[BigInt::from(0)]);
        assert!(parse_cochain(&t, "", &z).is_err());
        assert!(parse_cochain(&t, "x:1", &z).is_err());
        assert!(parse_cochain(&t, "1/v:1", &z).is_err());
        assert!(parse_cochain(&t, "t1=1", &z).is_err());
        let m = parse_cochain(&t, "1/t1:7", &Coeff::IntegersMod(3)).unwrap();
        assert_eq!(m.values()[0], BigInt::from(1));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["validate", "--builtin", "torus"]).0, 0);
        assert_eq!(run_str(&["validate", "--builtin", "nothing"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["cohomology", "--builtin", "torus", "--coeff", "Z/6"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
        assert_eq!(run_str(&["check", "--props", "nonsense"]).0, 2);
    }

    #[test]
    fn generator_names() {
        assert_eq!(render::generator_name(1, 0), "g1_1");
    }
}
