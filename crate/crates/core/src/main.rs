//! Command-line driver: root enumeration, the reflection playground, the
//! X_α construction, main-theorem verification, AR-quiver emission, and
//! graded path-algebra tables.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use superquiver::gabriel::{build_ar_quiver, build_x_alpha, grothendieck_check, verify_main_theorem, Setup};
use superquiver::parity::Parity;
use superquiver::pathalg::{dims_to_json, preprojective_dims, DoubleQuiver};
use superquiver::quiver::ColouredQuiver;
use superquiver::roots::{SimpleSystem, SuperRoot, SuperRootSystem};
use superquiver::{Error, Rat};

#[derive(Parser)]
#[command(
    name = "superquiver",
    version,
    about = "Root systems A(n,m) via super-representations of coloured quivers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Common {
    /// Number of ε functionals
    #[arg(long)]
    n: usize,
    /// Number of δ functionals
    #[arg(long)]
    m: usize,
    /// Simple system as a shuffle of 'E'/'D' letters, optionally with a
    /// leading '-' for the negative chain (default: all E's then all D's)
    #[arg(long)]
    simple: Option<String>,
    /// Orientation of the Dynkin diagram: a string of '<'/'>' of length
    /// n+m−2, read left to right ('>' points towards the higher vertex;
    /// default: all '<')
    #[arg(long)]
    orient: Option<String>,
}

impl Common {
    fn simple_system(&self) -> Result<SimpleSystem, Error> {
        match &self.simple {
            None => SimpleSystem::standard(self.n, self.m),
            Some(spec) => {
                let (negative, shuffle) = match spec.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, spec.as_str()),
                };
                SimpleSystem::from_shuffle(self.n, self.m, shuffle, negative)
            }
        }
    }

    fn orient(&self) -> String {
        self.orient
            .clone()
            .unwrap_or_else(|| "<".repeat((self.n + self.m).saturating_sub(2)))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all roots of A(n,m) with parities
    Roots {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Render ε/δ as e/d
        #[arg(long)]
        ascii: bool,
    },
    /// Apply a sequence of simple reflections to a simple system
    Reflect {
        #[command(flatten)]
        common: Common,
        /// Comma-separated 1-based indices of the simple roots to reflect
        /// at, applied left to right
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        ascii: bool,
    },
    /// Build the super-representation X_α attached to a positive root
    Construct {
        #[command(flatten)]
        common: Common,
        /// The root, e.g. "e2-d2" or "ε2-δ2"
        #[arg(long)]
        root: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        ascii: bool,
    },
    /// Check that every X_α is indecomposable with the right dimension
    /// vector and parity, plus the K-theory bookkeeping
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Negative-control hook: flip the expected parities
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Emit the parity-coloured periodic Auslander-Reiten quiver
    Ar {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Graded dimension table of the preprojective algebra of the coloured
    /// Dynkin diagram
    Pathalg {
        /// Classical type, e.g. "A2" (all-even linear quiver); overrides
        /// --n/--m/--simple
        #[arg(long = "type")]
        classical: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        simple: Option<String>,
        #[arg(long)]
        orient: Option<String>,
        /// Largest path length to tabulate (default: 2(n+m))
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn run() -> Result<i32, Error> {
    match Cli::parse().command {
        Command::Roots {
            common,
            format,
            ascii,
        } => {
            let rs = SuperRootSystem::new(common.n, common.m)?;
            let roots = rs.all_roots();
            match format {
                Format::Json => {
                    let body: Vec<_> = roots.iter().map(|&r| rs.root_json(r)).collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "n": common.n,
                            "m": common.m,
                            "count": roots.len(),
                            "odd_count": roots.iter().filter(|r| r.parity() == Parity::Odd).count(),
                            "roots": body,
                        }))
                        .unwrap()
                    );
                }
                _ => {
                    for r in &roots {
                        println!("{}\t{}", r.render(ascii), r.parity());
                    }
                }
            }
            Ok(0)
        }
        Command::Reflect {
            common,
            word,
            format,
            ascii,
        } => {
            let mut pi = common.simple_system()?;
            let mut letters = Vec::new();
            for part in word.split(',').filter(|p| !p.trim().is_empty()) {
                let i: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameters(format!("bad index {:?}", part)))?;
                if i == 0 {
                    return Err(Error::InvalidParameters(
                        "reflection indices are 1-based".into(),
                    ));
                }
                letters.push(i - 1);
            }
            for &i in &letters {
                pi = pi.reflect(i)?;
            }
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "word": letters.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                        "simple_roots": pi.to_json(),
                        "colours": pi.colours(),
                    }))
                    .unwrap()
                ),
                _ => {
                    let parts: Vec<String> = pi
                        .simple_roots()
                        .iter()
                        .map(|r| format!("{} ({})", r.render(ascii), r.parity()))
                        .collect();
                    println!("{}", parts.join("  "));
                }
            }
            Ok(0)
        }
        Command::Construct {
            common,
            root,
            format,
            ascii,
        } => {
            let pi = common.simple_system()?;
            let setup = Setup::new(&pi, &common.orient())?;
            let alpha = SuperRoot::parse(&root)?;
            let x = build_x_alpha::<Rat>(&setup, alpha)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "root": pi.system().root_json(alpha),
                        "representation": x.to_json(),
                    }))
                    .unwrap()
                ),
                _ => println!("{}", x.render(ascii)),
            }
            Ok(0)
        }
        Command::Verify {
            common,
            format,
            corrupt,
        } => {
            let pi = common.simple_system()?;
            let report = verify_main_theorem::<Rat>(&pi, &common.orient(), corrupt)?;
            let ktheory = grothendieck_check(&pi)?;
            let pass = report.pass();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "pass": pass,
                        "report": report.to_json(),
                        "k_theory": ktheory,
                    }))
                    .unwrap()
                ),
                _ => {
                    for check in &report.checks {
                        println!(
                            "{}\t{}",
                            check.root,
                            if check.pass() { "ok" } else { "FAIL" }
                        );
                    }
                    println!("{}", if pass { "PASS" } else { "FAIL" });
                }
            }
            Ok(if pass { 0 } else { 1 })
        }
        Command::Ar { common, format } => {
            let pi = common.simple_system()?;
            let ar = build_ar_quiver(&pi, &common.orient())?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&ar.to_json()).unwrap())
                }
                _ => print!("{}", ar.emit_dot()),
            }
            Ok(0)
        }
        Command::Pathalg {
            classical,
            n,
            m,
            simple,
            orient,
            max_len,
            format,
        } => {
            let quiver = match (classical, n, m) {
                (Some(t), _, _) => {
                    let k: usize = t
                        .strip_prefix('A')
                        .and_then(|s| s.parse().ok())
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| {
                            Error::InvalidParameters(format!("unsupported type {:?}", t))
                        })?;
                    let o = orient.unwrap_or_else(|| "<".repeat(k - 1));
                    ColouredQuiver::from_orient_str(vec![Parity::Even; k], &o)?
                }
                (None, Some(n), Some(m)) => {
                    let common = Common {
                        n,
                        m,
                        simple,
                        orient,
                    };
                    let pi = common.simple_system()?;
                    pi.dynkin_quiver(&common.orient())?
                }
                _ => {
                    return Err(Error::InvalidParameters(
                        "need --type or both --n and --m".into(),
                    ))
                }
            };
            let cutoff = max_len.unwrap_or(2 * quiver.num_vertices() + 2);
            let dq = DoubleQuiver::new(quiver);
            let dims = preprojective_dims::<Rat>(&dq, cutoff)?;
            let total: usize = dims.iter().map(|&(e, o)| e + o).sum();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "total_dim": total,
                        "by_length": dims_to_json(&dims),
                    }))
                    .unwrap()
                ),
                _ => {
                    for (k, &(e, o)) in dims.iter().enumerate() {
                        println!("length {}\teven {}\todd {}", k, e, o);
                    }
                    println!("total {}", total);
                }
            }
            Ok(0)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(Error::VerificationFailed(msg)) => {
            eprintln!("error: {}", msg);
            std::process::exit(1);
        }
        Err(err) => {
            eprintln!("error: {}", err);
            std::process::exit(3);
        }
    }
}
