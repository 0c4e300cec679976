use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stringchar::character::{cluster_character, StringDiagram};
use stringchar::formula::{walk_count, walk_laurent};
use stringchar::homalg::{euler_forms, normalisation_vector};
use stringchar::laurent::Monomial;
use stringchar::mutation::{enumerate_cluster_variables, match_character, seed_from_ice_quiver};
use stringchar::quiver::{
    enumerate_strings_up_to_inverse, string_module, validate_string, BoundIceQuiver, Walk,
};
use stringchar::{Error, VertexId};

/// Laurent polynomials and cluster characters of strings in bound quivers.
#[derive(Parser)]
#[command(name = "stringchar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct QuiverWalk {
    /// Quiver description file.
    quiver: PathBuf,
    /// A walk such as "alpha beta^-1" or "e(1)".
    #[arg(long = "string", alias = "walk")]
    string: String,
}

#[derive(Subcommand)]
enum Command {
    /// The matrix-product Laurent polynomial of a walk.
    Lpoly {
        quiver: PathBuf,
        #[arg(long)]
        walk: String,
        #[arg(long)]
        json: bool,
    },
    /// The number of positive-coefficient terms counted with multiplicity.
    Lcount {
        quiver: Option<PathBuf>,
        #[arg(long)]
        walk: String,
    },
    /// The cluster character of a string module.
    Character(QuiverWalk),
    /// Euler characteristics of quiver Grassmannians of a string module.
    Chi {
        #[command(flatten)]
        input: QuiverWalk,
        /// Dimension vector as "vertex:n,vertex:n"; missing vertices are 0.
        #[arg(long)]
        dimvec: Option<String>,
    },
    /// The normalising vector of a string module, as JSON.
    Normalise(QuiverWalk),
    /// Truncated and anti-symmetrised Euler forms of two string modules.
    Euler {
        quiver: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Cluster variables reachable within a number of mutations.
    Enumerate {
        quiver: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Whether the character of a string module is an enumerated cluster variable.
    Match {
        #[command(flatten)]
        input: QuiverWalk,
        #[arg(long)]
        depth: usize,
    },
    /// Checks character times normalising monomial against the walk polynomial for all short strings.
    Verify {
        quiver: PathBuf,
        #[arg(long)]
        max_length: usize,
    },
}

enum Failure {
    Parse {
        source: String,
        line: usize,
        column: usize,
        message: String,
    },
    Domain(Error),
    Io(PathBuf, std::io::Error),
    Verify(String),
}

impl Failure {
    fn tagged(source: &str, e: Error) -> Failure {
        match e {
            Error::Parse {
                line,
                column,
                message,
            } => Failure::Parse {
                source: source.to_string(),
                line,
                column,
                message,
            },
            e => Failure::Domain(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::tagged("input", e)
    }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path) -> Result<BoundIceQuiver, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))?;
    BoundIceQuiver::parse(&src).map_err(|e| Failure::tagged(&path.display().to_string(), e))
}

fn walk(flag: &str, text: &str) -> Result<Walk, Failure> {
    text.parse().map_err(|e| Failure::tagged(flag, e))
}

fn string_in(q: &BoundIceQuiver, flag: &str, text: &str) -> Result<Walk, Failure> {
    let c = walk(flag, text)?;
    validate_string(q, &c)?;
    Ok(c)
}

fn parse_dimvec(q: &BoundIceQuiver, text: &str) -> Result<BTreeMap<VertexId, usize>, Failure> {
    let err = |column: usize, message: String| Failure::Parse {
        source: "--dimvec".into(),
        line: 1,
        column,
        message,
    };
    let mut out = BTreeMap::new();
    let mut column = 1;
    for part in text.split(',') {
        let (v, n) = part
            .split_once(':')
            .ok_or_else(|| err(column, format!("expected `vertex:count`, found `{part}`")))?;
        let v = VertexId::from(v.trim());
        let n: usize = n.trim().parse().map_err(|_| {
            err(
                column + part.find(':').unwrap() + 1,
                format!("bad count `{}`", n.trim()),
            )
        })?;
        q.check_vertex(&v)?;
        if n > 0 {
            out.insert(v, n);
        }
        column += part.chars().count() + 1;
    }
    Ok(out)
}

fn format_dimvec(d: &BTreeMap<VertexId, usize>) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter()
        .map(|(v, n)| format!("{v}:{n}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cmd: Command) -> Outcome {
    let out = match cmd {
        Command::Lpoly {
            quiver,
            walk: w,
            json: as_json,
        } => {
            let q = load(&quiver)?;
            let f = walk_laurent(&q, &walk("--walk", &w)?)?;
            if as_json {
                serde_json::to_string(&f).unwrap()
            } else {
                f.to_string()
            }
        }
        Command::Lcount { quiver, walk: w } => {
            let c = walk("--walk", &w)?;
            if let Some(path) = quiver {
                c.vertices(&load(&path)?)?;
            }
            walk_count(&c).to_string()
        }
        Command::Character(input) => {
            let q = load(&input.quiver)?;
            let c = string_in(&q, "--string", &input.string)?;
            cluster_character(&q, &c)?.to_string()
        }
        Command::Chi { input, dimvec } => {
            let q = load(&input.quiver)?;
            let c = string_in(&q, "--string", &input.string)?;
            let counts = StringDiagram::new(&q, &c)?.submodule_counts();
            match dimvec {
                Some(text) => {
                    let e = parse_dimvec(&q, &text)?;
                    counts
                        .get(&e)
                        .map_or_else(|| "0".to_string(), |n| n.to_string())
                }
                None => {
                    let mut s = String::new();
                    for (e, n) in &counts {
                        writeln!(s, "{} {n}", format_dimvec(e)).unwrap();
                    }
                    s.pop();
                    s
                }
            }
        }
        Command::Normalise(input) => {
            let q = load(&input.quiver)?;
            let c = string_in(&q, "--string", &input.string)?;
            let n: BTreeMap<String, i64> = normalisation_vector(&q, &c)?
                .into_iter()
                .map(|(v, k)| (v.to_string(), k))
                .collect();
            serde_json::to_string(&n).unwrap()
        }
        Command::Euler { quiver, lhs, rhs } => {
            let q = load(&quiver)?;
            let m = string_module(&q, &string_in(&q, "--lhs", &lhs)?)?;
            let n = string_module(&q, &string_in(&q, "--rhs", &rhs)?)?;
            let (t, a) = euler_forms(&q, &m, &n)?;
            format!("truncated {t}\nantisymmetric {a}")
        }
        Command::Enumerate {
            quiver,
            depth,
            json: as_json,
        } => {
            let q = load(&quiver)?;
            let vars = enumerate_cluster_variables(&seed_from_ice_quiver(&q)?, depth)?;
            if as_json {
                serde_json::to_string(&vars).unwrap()
            } else {
                vars.iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Command::Match { input, depth } => {
            let q = load(&input.quiver)?;
            let c = string_in(&q, "--string", &input.string)?;
            let f = cluster_character(&q, &c)?;
            let found = match_character(&seed_from_ice_quiver(&q)?, &f, depth)?;
            format!("{f}\n{}", if found { "found" } else { "not found" })
        }
        Command::Verify { quiver, max_length } => return verify(&load(&quiver)?, max_length),
    };
    Ok(out)
}

fn verify(q: &BoundIceQuiver, max_length: usize) -> Outcome {
    let mut rows = Vec::new();
    for c in enumerate_strings_up_to_inverse(q, max_length) {
        if c.vertices(q)?.iter().any(|v| q.is_frozen(v)) {
            continue;
        }
        let x = cluster_character(q, &c)?;
        let n = Monomial::from_exponents(normalisation_vector(q, &c)?);
        let ok = x.mul_monomial(&n) == walk_laurent(q, &c)?;
        rows.push((c.to_string(), ok));
    }
    let width = rows
        .iter()
        .map(|(s, _)| s.len())
        .max()
        .unwrap_or(0)
        .max("string".len());
    let mut s = format!("{:width$}  result\n", "string");
    for (c, ok) in &rows {
        writeln!(s, "{c:width$}  {}", if *ok { "PASS" } else { "FAIL" }).unwrap();
    }
    let passed = rows.iter().filter(|r| r.1).count();
    write!(s, "{passed}/{} passed", rows.len()).unwrap();
    if passed == rows.len() {
        Ok(s)
    } else {
        Err(Failure::Verify(s))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Parse {
            source,
            line,
            column,
            message,
        }) => {
            eprintln!("{source}:{line}:{column}: Parse: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Verify(table)) => {
            println!("{table}");
            eprintln!("IdentityFailed: the main identity failed on some strings");
            ExitCode::from(1)
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("Io: {}: {e}", path.display());
            ExitCode::from(1)
        }
    }
}
