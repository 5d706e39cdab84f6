//! Command-line front end.
//!
//! [`run`] returns the exit status together with everything that should be
//! printed, which keeps the binary trivial and the commands testable.
//! Status 0 is success, 1 a failed verification, 2 a usage error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::atoms::{atomic_number2, AtomDecomposition};
use crate::charge::{kl_in_n_basis, kostant_oracle, kostka_foulkes, llt_charge2_all};
use crate::crystal::Crystal;
use crate::error::Error;
use crate::poly::LaurentPoly;
use crate::rootlat::{dominant_below, Weight};
use crate::wallcross::{Engine, MomentGraph, WallSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "crystal-charge", version, about = "Charge, atoms and wall crossing for type-A crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kostka-Foulkes polynomials K_{λ,μ}
    Kostka(KostkaArgs),
    /// Atomic decomposition and the expansion in the N basis
    Atoms(Common),
    /// Wall-crossing trace from the MV chamber to the KL chamber
    Wallcross(Common),
    /// Graphviz export of the crystal, an atom, or a (twisted) moment graph
    Graph(GraphArgs),
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    rank: usize,
    /// Partition, comma separated
    #[arg(long, value_parser = parse_list)]
    lambda: IntList,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Variable::V)]
    variable: Variable,
}

#[derive(Args, Debug)]
struct KostkaArgs {
    #[command(flatten)]
    common: Common,
    /// Content vector of length rank + 1; repeat for several. Defaults to all
    /// dominant μ ≤ λ.
    #[arg(long, value_parser = parse_list)]
    mu: Vec<IntList>,
    #[arg(long, value_enum)]
    oracle: Option<Oracle>,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, group = "which")]
    crystal: bool,
    /// Index of the atom to draw
    #[arg(long, group = "which")]
    atom: Option<usize>,
    #[arg(long, group = "which")]
    moment: bool,
    #[arg(long, group = "which", requires = "m")]
    twisted: bool,
    /// Number of walls still to cross
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Variable {
    V,
    Q,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Llt,
    Kostant,
    Both,
}

// A comma-separated integer list kept as a single clap value.
#[derive(Clone, Debug)]
struct IntList(Vec<i64>);

fn parse_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(IntList)
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::Engine { .. } => Failure::Verify(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(i32, String), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let out = match cli.command {
        Command::Kostka(a) => cmd_kostka(&a),
        Command::Atoms(a) => cmd_atoms(&a),
        Command::Wallcross(a) => cmd_wallcross(&a),
        Command::Graph(a) => cmd_graph(&a),
    };
    match out {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Verify(msg)) => (EXIT_VERIFY, format!("verification failed: {msg}\n")),
    }
}

fn build(c: &Common) -> Result<Crystal, Failure> {
    if c.rank == 0 {
        return Err(Failure::Usage("rank must be at least 1".into()));
    }
    Ok(Crystal::build(c.rank, &c.lambda.0)?)
}

fn render(p: &LaurentPoly, var: Variable) -> String {
    match var {
        Variable::V => p.to_string(),
        Variable::Q => p.to_q_string(),
    }
}

fn cmd_kostka(a: &KostkaArgs) -> Outcome {
    let c = build(&a.common)?;
    let mus: Vec<Weight> = if a.mu.is_empty() {
        dominant_below(c.lambda())?
    } else {
        a.mu
            .iter()
            .map(|m| {
                let w = Weight::new(m.0.clone());
                w.check_rank(c.rank()).map(|_| w)
            })
            .collect::<Result<_, _>>()?
    };
    let llt = match a.oracle {
        Some(Oracle::Llt | Oracle::Both) => Some(llt_charge2_all(&c)?),
        _ => None,
    };
    let var = a.common.variable;
    let mut rows = Vec::new();
    let mut all_match = true;
    for mu in &mus {
        let k = kostka_foulkes(&c, mu)?;
        let llt_k: Option<LaurentPoly> = llt.as_ref().map(|l| {
            c.of_weight(mu)
                .iter()
                .map(|&t| LaurentPoly::monomial(1, l[t]))
                .sum()
        });
        let kostant = match a.oracle {
            Some(Oracle::Kostant | Oracle::Both) => Some(kostant_oracle(c.rank(), c.lambda(), mu)?),
            _ => None,
        };
        let ok = llt_k.as_ref().map_or(true, |x| *x == k) && kostant.as_ref().map_or(true, |x| *x == k);
        all_match &= ok;
        rows.push((mu.clone(), k, llt_k, kostant, ok));
    }

    let mut out = String::new();
    match a.common.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(mu, k, l, kp, ok)| {
                    let mut v = json!({
                        "lambda": c.lambda(),
                        "mu": mu,
                        "q_poly": k.to_q_string(),
                        "v_poly": k,
                    });
                    if let Some(l) = l {
                        v["llt"] = json!(render(l, var));
                    }
                    if let Some(kp) = kp {
                        v["kostant"] = json!(render(kp, var));
                    }
                    if a.oracle.is_some() {
                        v["match"] = json!(ok);
                    }
                    v
                })
                .collect();
            out = serde_json::to_string_pretty(&items).unwrap();
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("mu,K");
            if llt.is_some() {
                out.push_str(",llt");
            }
            if matches!(a.oracle, Some(Oracle::Kostant | Oracle::Both)) {
                out.push_str(",kostant");
            }
            out.push('\n');
            for (mu, k, l, kp, _) in &rows {
                let mu_s: Vec<String> = mu.content().iter().map(|x| x.to_string()).collect();
                write!(out, "\"{}\",\"{}\"", mu_s.join(" "), render(k, var)).unwrap();
                for extra in [l, kp].into_iter().flatten() {
                    write!(out, ",\"{}\"", render(extra, var)).unwrap();
                }
                out.push('\n');
            }
        }
        Format::Text | Format::Dot => {
            let width = rows.iter().map(|r| r.0.to_string().len()).max().unwrap_or(2).max(2);
            for (mu, k, l, kp, ok) in &rows {
                write!(out, "{:<width$}  {}", mu.to_string(), render(k, var)).unwrap();
                if let Some(l) = l {
                    write!(out, "  | llt: {}", render(l, var)).unwrap();
                }
                if let Some(kp) = kp {
                    write!(out, "  | kostant: {}", render(kp, var)).unwrap();
                }
                if a.oracle.is_some() {
                    out.push_str(if *ok { "  ok" } else { "  MISMATCH" });
                }
                out.push('\n');
            }
            if a.oracle.is_some() {
                out.push_str(if all_match { "all match\n" } else { "oracle mismatch\n" });
            }
        }
    }
    Ok((if all_match { EXIT_OK } else { EXIT_VERIFY }, out))
}

fn cmd_atoms(a: &Common) -> Outcome {
    let c = build(a)?;
    let atoms = AtomDecomposition::new(&c);
    atoms.verify(&c)?;
    let basis = kl_in_n_basis(&c, &atoms)?;
    let out = match a.format {
        Format::Json => {
            let expansion: Vec<_> = basis
                .terms
                .iter()
                .map(|(w, e)| json!({"weight": w, "v_exponent": e}))
                .collect();
            let v = json!({"atoms": atoms.to_json(&c), "expansion": expansion});
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        _ => {
            let mut out = String::new();
            for (i, atom) in atoms.atoms().iter().enumerate() {
                writeln!(
                    out,
                    "atom {i}: highest weight {}, size {}, 2Z = {}",
                    atom.highest_weight(),
                    atom.len(),
                    atomic_number2(&c, atom.members()[0])
                )
                .unwrap();
            }
            writeln!(out, "KL = {basis}").unwrap();
            out
        }
    };
    Ok((EXIT_OK, out))
}

fn cmd_wallcross(a: &Common) -> Outcome {
    let c = build(a)?;
    let atoms = AtomDecomposition::new(&c);
    let engine = Engine::new(&c, &atoms)?;
    let trace = engine.run()?;
    let out = match a.format {
        Format::Json => serde_json::to_string_pretty(&trace).unwrap() + "\n",
        _ => {
            let mut out = String::new();
            writeln!(out, "walls: {}", engine.steps()).unwrap();
            for step in &trace.steps {
                let m = step.m.map_or("-".to_string(), |m| m.to_string());
                write!(out, "[{}] m={m}", step.stage).unwrap();
                if let Some(w) = &step.wall {
                    write!(out, " crossed {w}").unwrap();
                }
                if let (Some(r), Some(g)) = (step.recurrence_ok, step.gammam_ok) {
                    write!(
                        out,
                        " recurrence={} gammam={}",
                        if r { "ok" } else { "FAIL" },
                        if g { "ok" } else { "FAIL" }
                    )
                    .unwrap();
                }
                out.push('\n');
                for wp in &step.h {
                    writeln!(out, "  {}: {}", wp.weight, render(&wp.h, a.variable)).unwrap();
                }
            }
            writeln!(out, "{}", if trace.ok { "all checks passed" } else { "checks FAILED" }).unwrap();
            out
        }
    };
    Ok((if trace.ok { EXIT_OK } else { EXIT_VERIFY }, out))
}

fn cmd_graph(a: &GraphArgs) -> Outcome {
    let c = build(&a.common)?;
    let dot = if a.crystal {
        c.to_dot()
    } else if let Some(k) = a.atom {
        let atoms = AtomDecomposition::new(&c);
        let atom = atoms
            .atoms()
            .get(k)
            .ok_or_else(|| Failure::Usage(format!("there are only {} atoms", atoms.len())))?;
        c.to_dot_subset(atom.members())
    } else if a.moment || a.twisted {
        let g = MomentGraph::new(c.lambda())?;
        let walls = WallSequence::new(&g);
        let m = if a.twisted { a.m.unwrap_or(0) } else { 0 };
        if m > walls.len() {
            return Err(Failure::Usage(format!("m must be at most {}", walls.len())));
        }
        g.twisted(&walls, m).to_dot()
    } else {
        return Err(Failure::Usage(
            "choose one of --crystal, --atom, --moment, --twisted".into(),
        ));
    };
    Ok((EXIT_OK, dot))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> (i32, String) {
        run(std::iter::once("crystal-charge").chain(args.split_whitespace()))
    }

    #[test]
    fn kostka_examples() {
        let (code, out) = go("kostka --rank 2 --lambda 2,1 --mu 1,1,1 --variable q");
        assert_eq!(code, 0);
        assert!(out.contains("q + q^2"), "{out}");
        let (code, out) = go("kostka --rank 1 --lambda 4 --mu 4,0");
        assert_eq!(code, 0);
        assert!(out.trim_end().ends_with(" 1"), "{out}");
        let (code, out) = go("kostka --rank 2 --lambda 3,1 --oracle both");
        assert_eq!(code, 0);
        assert!(out.contains("all match"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go("kostka --rank 1 --lambda 1,1,1").0, EXIT_USAGE);
        assert_eq!(go("kostka --rank 2 --lambda 1,2").0, EXIT_USAGE);
        assert_eq!(go("kostka --rank 2 --lambda 2,1 --mu 1,1").0, EXIT_USAGE);
        assert_eq!(go("kostka --rank 2 --lambda 2,1 --mu 3,0,0").0, EXIT_USAGE);
        assert_eq!(go("kostka --rank 2 --lambda x").0, EXIT_USAGE);
        assert_eq!(go("bogus").0, EXIT_USAGE);
        assert_eq!(go("graph --rank 1 --lambda 4").0, EXIT_USAGE);
        assert_eq!(go("--help").0, EXIT_OK);
    }

    #[test]
    fn atoms_text() {
        let (code, out) = go("atoms --rank 2 --lambda 2,1");
        assert_eq!(code, 0);
        assert!(out.contains("size 7"));
        assert!(out.contains("size 1"));
        assert!(out.contains("KL = N_(2,1,0) + v^2 N_(1,1,1)"));
    }

    #[test]
    fn wallcross_trivial() {
        let (code, out) = go("wallcross --rank 2 --lambda 0");
        assert_eq!(code, 0);
        assert!(out.contains("walls: 0"));
    }

    #[test]
    fn graph_kinds() {
        let (_, moment) = go("graph --rank 2 --lambda 2,1 --moment");
        let (_, twisted) = go("graph --rank 2 --lambda 2,1 --twisted --m 0");
        assert_eq!(moment, twisted);
        assert_eq!(moment.matches(" -> ").count(), 15);
        let (_, chain) = go("graph --rank 1 --lambda 4 --crystal");
        assert_eq!(chain.matches(" -> ").count(), 4);
        assert_eq!(go("graph --rank 2 --lambda 2,1 --atom 5").0, EXIT_USAGE);
        assert_eq!(go("graph --rank 2 --lambda 2,1 --twisted --m 9").0, EXIT_USAGE);
    }
}
