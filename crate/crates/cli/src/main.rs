use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lscrystal::cartan::TypeLetter;
use lscrystal::crystal::CrystalGraph;
use lscrystal::decomp::condition_check;
use lscrystal::keypoly::{key_polynomial, render_type_a};
use lscrystal::verify::{run_all, run_suite, Grid, SuiteResult};
use lscrystal::{
    decompose, product_report, DecomposeOptions, Error, Session, Weight, WeylElement,
};

#[derive(Parser)]
#[command(name = "lscrystal", version, about = "Tensor products of Demazure crystals via LS paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose B_v(λ) ⊗ B_w(μ) into connected components
    Decompose {
        #[command(flatten)]
        instance: Instance,
        /// Cross-check the interval recipe for w(π) against crystal matching
        #[arg(long)]
        oracle: bool,
        /// Write one DOT graph per component into this directory
        #[arg(long)]
        dot_dir: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the Demazure condition in both orders
    Check {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand the product of the two key polynomials in the key basis
    Expand {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the crystal graph of B(λ), or of B_w(λ) when --w is given
    Graph {
        #[arg(long = "type")]
        root_system: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant suites over a grid such as "A2:2,B2:1" or "standard"
    Verify {
        #[arg(long, default_value = "standard")]
        grid: String,
        /// Run only the named suites
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Instance {
    /// Root system, e.g. A2, B2, G2
    #[arg(long = "type")]
    root_system: String,
    /// Word for v: "1,2", "s1s2" or "e"
    #[arg(long, default_value = "e")]
    v: String,
    #[arg(long, default_value = "e")]
    w: String,
    /// Dominant weight in fundamental coordinates, e.g. "1,1"
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
}

struct Problem {
    session: Session,
    v: WeylElement,
    w: WeylElement,
    lambda: Weight,
    mu: Weight,
}

impl Instance {
    fn resolve(&self) -> Result<Problem> {
        let session = Session::from_name(&self.root_system)?;
        let v = parse_element(&session, &self.v).context("--v")?;
        let w = parse_element(&session, &self.w).context("--w")?;
        let lambda = parse_weight(&session, &self.lambda).context("--lambda")?;
        let mu = parse_weight(&session, &self.mu).context("--mu")?;
        Ok(Problem { session, v, w, lambda, mu })
    }
}

fn parse_word(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let parts: Vec<&str> = if t.starts_with('s') {
        t.split('s').skip(1).collect()
    } else {
        t.split([',', ' ']).filter(|x| !x.is_empty()).collect()
    };
    parts
        .iter()
        .map(|p| p.trim().parse::<usize>().with_context(|| format!("bad letter {p:?} in word {text:?}")))
        .collect()
}

fn parse_element(s: &Session, text: &str) -> Result<WeylElement> {
    Ok(s.element(&parse_word(text)?)?)
}

fn parse_weight(s: &Session, text: &str) -> Result<Weight> {
    let t = text.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let coords = t
        .split(',')
        .map(|x| x.trim().parse::<i64>().with_context(|| format!("bad coordinate {x:?} in {text:?}")))
        .collect::<Result<Vec<i64>>>()?;
    let lambda = Weight(coords);
    s.rs().check_weight(&lambda)?;
    s.check_dominant(&lambda)?;
    Ok(lambda)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, &text)
}

fn cmd_decompose(instance: &Instance, oracle: bool, dot_dir: Option<&Path>, out: Option<&Path>) -> Result<()> {
    let p = instance.resolve()?;
    let report = decompose(&p.session, &p.v, &p.w, &p.lambda, &p.mu, DecomposeOptions { oracle })?;
    if let Some(dir) = dot_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (k, entry) in report.entries.iter().enumerate() {
            let graph = CrystalGraph::induced(p.session.rs(), entry.component.iter().cloned());
            let name = format!("component {} (highest weight {})", k + 1, entry.lambda_plus_wt);
            let dot = match &entry.witness {
                Some(wit) => graph.to_dot_highlighted(&name, |b| wit.string.contains(b)),
                None => graph.to_dot(&name),
            };
            let path = dir.join(format!("component_{:02}.dot", k + 1));
            fs::write(&path, dot).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    emit_json(out, &report)
}

#[derive(Serialize)]
struct CheckReport {
    root_system: String,
    /// ⌊v⌋^λ, 1-based
    v_min: Vec<usize>,
    /// ⌈w⌉^μ, 1-based
    w_max: Vec<usize>,
    forward: bool,
    swapped: bool,
}

fn cmd_check(instance: &Instance, out: Option<&Path>) -> Result<()> {
    let p = instance.resolve()?;
    let g = p.session.group();
    let report = CheckReport {
        root_system: p.session.rs().cartan_type().to_string(),
        v_min: g.coset_min_for(&p.v, &p.lambda).word_one_based(),
        w_max: g.coset_max_for(&p.w, &p.mu).word_one_based(),
        forward: condition_check(&p.session, &p.v, &p.w, &p.lambda, &p.mu),
        swapped: condition_check(&p.session, &p.w, &p.v, &p.mu, &p.lambda),
    };
    emit_json(out, &report)
}

#[derive(Serialize)]
struct ExpandOutput {
    #[serde(flatten)]
    report: lscrystal::keypoly::ProductReport,
    /// Type A only: each key of the expansion as a polynomial in x_1, …, x_{n+1}.
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomials: Option<Vec<RenderedKey>>,
}

#[derive(Serialize)]
struct RenderedKey {
    nu: Weight,
    coeff: i64,
    polynomial: String,
}

fn cmd_expand(instance: &Instance, out: Option<&Path>) -> Result<()> {
    let p = instance.resolve()?;
    let report = product_report(&p.session, &p.v, &p.w, &p.lambda, &p.mu)?;
    let is_type_a = p.session.rs().cartan_type().letter == TypeLetter::A;
    let polynomials = if is_type_a {
        let mut rendered = Vec::new();
        for t in &report.expansion.terms {
            let kappa = key_polynomial(&p.session, &t.nu)?;
            rendered.push(RenderedKey {
                nu: t.nu.clone(),
                coeff: t.coeff,
                polynomial: render_type_a(p.session.rs(), &kappa)?,
            });
        }
        Some(rendered)
    } else {
        None
    };
    emit_json(out, &ExpandOutput { report, polynomials })
}

fn cmd_graph(root_system: &str, lambda: &str, w: Option<&str>, out: Option<&Path>) -> Result<()> {
    let session = Session::from_name(root_system)?;
    let lambda = parse_weight(&session, lambda).context("--lambda")?;
    let (set, name) = match w {
        Some(word) => {
            let x = parse_element(&session, word).context("--w")?;
            let d = session.demazure(&x, &lambda)?;
            (d.elements.clone(), format!("B_{}{lambda}", d.witness))
        }
        None => ((*session.crystal(&lambda)?).clone(), format!("B{lambda}")),
    };
    let graph = CrystalGraph::induced(session.rs(), set);
    emit(out, &graph.to_dot(&name))
}

#[derive(Serialize)]
struct VerifyReport {
    grid: String,
    passed: bool,
    suites: Vec<SuiteResult>,
}

/// Returns whether every suite passed.
fn cmd_verify(grid_spec: &str, suites: &[String], out: Option<&Path>) -> Result<bool> {
    let grid = Grid::parse(grid_spec)?;
    let results = if suites.is_empty() {
        run_all(&grid)?
    } else {
        suites.iter().map(|n| run_suite(&grid, n)).collect::<lscrystal::Result<Vec<_>>>()?
    };
    for r in &results {
        eprintln!("{r}");
        if let Some(first) = r.counterexamples.first() {
            eprintln!("  first counterexample: {first}");
        }
    }
    let passed = results.iter().all(SuiteResult::passed);
    emit_json(
        out,
        &VerifyReport {
            grid: grid_spec.to_string(),
            passed,
            suites: results,
        },
    )?;
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.command {
        Command::Decompose { instance, oracle, dot_dir, out } => {
            cmd_decompose(instance, *oracle, dot_dir.as_deref(), out.as_deref())?
        }
        Command::Check { instance, out } => cmd_check(instance, out.as_deref())?,
        Command::Expand { instance, out } => cmd_expand(instance, out.as_deref())?,
        Command::Graph { root_system, lambda, w, out } => {
            cmd_graph(root_system, lambda, w.as_deref(), out.as_deref())?
        }
        Command::Verify { grid, suites, out } => return cmd_verify(grid, suites, out.as_deref()),
    }
    Ok(true)
}

/// 2 for a failed consistency check, 1 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::TheoremViolation(_) | Error::OracleMismatch { .. }) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("1,2,1").unwrap(), vec![1, 2, 1]);
        assert_eq!(parse_word("s1s2").unwrap(), vec![1, 2]);
        assert_eq!(parse_word("1 2").unwrap(), vec![1, 2]);
        assert!(parse_word("1,x").is_err());
    }

    #[test]
    fn weights() {
        let s = Session::from_name("A2").unwrap();
        assert_eq!(parse_weight(&s, "[1, 1]").unwrap(), Weight(vec![1, 1]));
        assert!(parse_weight(&s, "1,-1").is_err());
        assert!(parse_weight(&s, "1").is_err());
        assert!(parse_weight(&s, "a,b").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&anyhow::Error::from(Error::TheoremViolation("x".into()))), 2);
        assert_eq!(exit_code(&anyhow::Error::from(Error::NotInSpan)), 1);
        assert_eq!(exit_code(&anyhow::anyhow!("plain")), 1);
    }
}
