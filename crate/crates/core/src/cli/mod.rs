//! The `twistlab` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, parse or
//! precondition error, 3 size bound exceeded.

pub mod io;

pub use io::{format_algebra, load_algebra, parse_algebra, save_algebra};

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{verify_algebra, FiniteAlgebra};
use crate::catalog::{boolean2, build_spec, parse_spec, AlgebraSpec};
use crate::error::Error;
use crate::limits::Limits;
use crate::structure::{congruence_lattice, exists_embedding, is_isomorphic, is_rigid, is_tight_reduct, monolith};
use crate::term::{profile_failure, Profile};
use crate::twist::{enumerate_admissible, minimal_admissible_algebra, twist_product, PairIndexing};
use crate::varieties::{emit_dot, si_factors, VarietyLattice};

#[derive(Parser, Debug)]
#[command(
    name = "twistlab",
    version,
    about = "Finite residuated lattices, twist-products and their varieties"
)]
struct Cli {
    /// Largest algebra whose subuniverses are enumerated.
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    max_sub: u32,
    /// Largest algebra whose congruence lattice is computed.
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    max_con: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms and report which equation profiles hold.
    Verify {
        algebra: String,
        /// Also require this profile to hold (repeatable).
        #[arg(long = "profile")]
        profiles: Vec<String>,
    },
    /// Build an algebra and write it as JSON.
    Build {
        spec: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Emit the twist-product of an algebra as JSON.
    Kalman {
        algebra: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Admissible subalgebras of the twist-product of a bounded algebra.
    Admissibles {
        algebra: String,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// The congruence lattice.
    Congruences { algebra: String },
    /// Search for an isomorphism.
    Iso { first: String, second: String },
    /// Search for an embedding of the first algebra into the second.
    Embed { first: String, second: String },
    /// Rigidity and tightness.
    Rigid { algebra: String },
    /// The lattice of subvarieties generated by the given algebras.
    Varlattice {
        #[arg(required = true)]
        algebras: Vec<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

enum Failure {
    Verification,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

type CmdResult = Result<(), Failure>;

struct Ctx<'a> {
    limits: Limits,
    format: Format,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    /// Loads a JSON file if `arg` names an existing path, otherwise parses it as a spec.
    fn algebra(&self, arg: &str) -> Result<FiniteAlgebra, Error> {
        let path = Path::new(arg);
        let spec = if path.is_file() {
            AlgebraSpec::Table(Box::new(load_algebra(path)?))
        } else {
            parse_spec(arg)?
        };
        build_spec(&spec, &self.limits)
    }

    fn emit(&mut self, text: &str, value: Value) -> std::io::Result<()> {
        match self.format {
            Format::Text => write!(self.out, "{text}"),
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(&value).expect("json values serialize")
            ),
        }
    }
}

/// Runs the command line `argv` (including the program name) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let limits = match Limits::from_env() {
        Ok(l) => Limits {
            max_sub: cli.max_sub as usize,
            max_con: cli.max_con as usize,
            ..l
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut ctx = Ctx {
        limits,
        format: cli.format,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::SizeBound { .. } => 3,
                _ => 2,
            }
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> CmdResult {
    match command {
        Command::Verify { algebra, profiles } => verify(ctx, &algebra, &profiles),
        Command::Build { spec, output } => {
            let a = ctx.algebra(&spec)?;
            save_algebra(&a, &output)?;
            let text = format!("wrote {} ({} elements) to {}\n", a.name(), a.size(), output.display());
            ctx.emit(
                &text,
                json!({"name": a.name(), "size": a.size(), "path": output.display().to_string()}),
            )?;
            Ok(())
        }
        Command::Kalman { algebra, output } => {
            let a = ctx.algebra(&algebra)?;
            ctx.limits.check_cells(a.size() * a.size())?;
            let k = twist_product(&a)?;
            match output {
                Some(path) => {
                    save_algebra(&k, &path)?;
                    let text = format!("wrote {} ({} elements) to {}\n", k.name(), k.size(), path.display());
                    ctx.emit(
                        &text,
                        json!({"name": k.name(), "size": k.size(), "path": path.display().to_string()}),
                    )?;
                }
                None => write!(ctx.out, "{}", format_algebra(&k))?,
            }
            Ok(())
        }
        Command::Admissibles {
            algebra,
            count,
            list: _,
        } => admissibles(ctx, &algebra, count),
        Command::Congruences { algebra } => congruences(ctx, &algebra),
        Command::Iso { first, second } => {
            let (a, b) = (ctx.algebra(&first)?, ctx.algebra(&second)?);
            map_report(ctx, "isomorphism", &a, &b, is_isomorphic(&a, &b))
        }
        Command::Embed { first, second } => {
            let (a, b) = (ctx.algebra(&first)?, ctx.algebra(&second)?);
            map_report(ctx, "embedding", &a, &b, exists_embedding(&a, &b))
        }
        Command::Rigid { algebra } => {
            let a = ctx.algebra(&algebra)?;
            let rigid = is_rigid(&a, &ctx.limits)?;
            let tight = is_tight_reduct(&a)?;
            let text = format!("{}\nrigid: {rigid}\ntight: {tight}\n", a.name());
            ctx.emit(&text, json!({"name": a.name(), "rigid": rigid, "tight": tight}))?;
            Ok(())
        }
        Command::Varlattice { algebras, dot } => varlattice(ctx, &algebras, dot.as_deref()),
    }
}

fn verify(ctx: &mut Ctx, arg: &str, required: &[String]) -> CmdResult {
    let a = ctx.algebra(arg)?;
    let required: Vec<Profile> = required
        .iter()
        .map(|p| p.parse::<Profile>())
        .collect::<Result<_, _>>()?;
    let report = verify_algebra(&a)?;
    let mut text = format!("{} ({} elements)\n", a.name(), a.size());
    let mut checks = Vec::new();
    for c in report.checks.iter().chain([&report.integral]) {
        let status = match &c.counterexample {
            None => "pass".to_string(),
            Some(w) => format!("FAIL at {w:?}"),
        };
        text.push_str(&format!("  {:<22} {status}\n", c.name()));
        checks.push(json!({"check": c.name(), "passed": c.passed(), "counterexample": c.counterexample}));
    }
    let mut profile_values = Vec::new();
    let mut required_failed = false;
    if report.passed() {
        text.push_str("profiles:\n");
        for p in Profile::ALL {
            let (status, holds) = match profile_failure(&a, p) {
                Ok(None) => ("holds".to_string(), Some(true)),
                Ok(Some((id, asg))) => {
                    let asg: Vec<String> = asg.iter().map(|(v, x)| format!("{v}={x}")).collect();
                    (format!("fails: {id} at {}", asg.join(", ")), Some(false))
                }
                Err(_) => ("not applicable (unbounded)".to_string(), None),
            };
            if required.contains(&p) && holds != Some(true) {
                required_failed = true;
            }
            text.push_str(&format!("  {:<10} {status}\n", p.name()));
            profile_values.push(json!({"profile": p.name(), "holds": holds}));
        }
    }
    let ok = report.passed() && !required_failed;
    text.push_str(if ok { "result: pass\n" } else { "result: FAIL\n" });
    ctx.emit(
        &text,
        json!({"name": a.name(), "size": a.size(), "checks": checks, "profiles": profile_values, "passed": ok}),
    )?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn admissibles(ctx: &mut Ctx, arg: &str, count_only: bool) -> CmdResult {
    let a = ctx.algebra(arg)?;
    let subs = enumerate_admissible(&a, &ctx.limits)?;
    if count_only {
        ctx.emit(&format!("{}\n", subs.len()), json!({"count": subs.len()}))?;
        return Ok(());
    }
    let p = PairIndexing::new(&a);
    let mut text = format!("{} admissible subalgebras of K({})\n", subs.len(), a.name());
    let mut values = Vec::new();
    for (i, s) in subs.iter().enumerate() {
        let pairs: Vec<(usize, usize)> = s.carrier().iter().map(|&k| p.pair(k)).collect();
        let shown: Vec<String> = pairs.iter().map(|(x, y)| format!("({x},{y})")).collect();
        text.push_str(&format!("  S{i} [{}]: {}\n", s.len(), shown.join(" ")));
        values.push(json!({"size": s.len(), "pairs": pairs}));
    }
    ctx.emit(&text, json!({"count": subs.len(), "subalgebras": values}))?;
    Ok(())
}

fn congruences(ctx: &mut Ctx, arg: &str) -> CmdResult {
    let a = ctx.algebra(arg)?;
    let lattice = congruence_lattice(&a, &ctx.limits)?;
    let mono = monolith(&a, &ctx.limits)?;
    let mut text = format!("{} congruences of {}\n", lattice.len(), a.name());
    let mut values = Vec::new();
    for (i, c) in lattice.iter().enumerate() {
        let classes: Vec<String> = c
            .classes()
            .iter()
            .map(|cl| format!("{{{}}}", cl.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let mark = if mono.as_ref() == Some(c) { "  (monolith)" } else { "" };
        text.push_str(&format!("  c{i}: {}{mark}\n", classes.join(" ")));
        values.push(json!({"classes": c.classes(), "monolith": mono.as_ref() == Some(c)}));
    }
    text.push_str(&format!("subdirectly irreducible: {}\n", mono.is_some()));
    ctx.emit(
        &text,
        json!({"count": lattice.len(), "congruences": values, "subdirectly_irreducible": mono.is_some()}),
    )?;
    Ok(())
}

fn map_report(ctx: &mut Ctx, kind: &str, a: &FiniteAlgebra, b: &FiniteAlgebra, map: Option<Vec<usize>>) -> CmdResult {
    let text = match &map {
        Some(m) => {
            let shown: Vec<String> = m.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
            format!("{kind} {} -> {}: {}\n", a.name(), b.name(), shown.join(" "))
        }
        None => format!("no {kind} {} -> {}\n", a.name(), b.name()),
    };
    ctx.emit(
        &text,
        json!({"kind": kind, "from": a.name(), "to": b.name(), "map": map}),
    )?;
    Ok(())
}

fn varlattice(ctx: &mut Ctx, args: &[String], dot: Option<&Path>) -> CmdResult {
    let gens = args.iter().map(|g| ctx.algebra(g)).collect::<Result<Vec<_>, _>>()?;
    let mut catalog = si_factors(&gens, &ctx.limits)?;
    let two = boolean2();
    catalog.rename(&[
        (minimal_admissible_algebra(&two)?, "K3".into()),
        (twist_product(&two)?, "K4".into()),
    ]);
    let lattice = VarietyLattice::from_catalog(catalog, &ctx.limits)?;
    let rendered = emit_dot(&lattice);
    if let Some(path) = dot {
        std::fs::write(path, &rendered)?;
    }
    let mut text = format!(
        "nodes={}\nedges={}\nclasses={}\n",
        lattice.len(),
        lattice.edges().len(),
        lattice.catalog().len()
    );
    for c in lattice.catalog().classes() {
        text.push_str(&format!("  {} ({} elements)\n", c.name, c.algebra.size()));
    }
    let classes: Vec<Value> = lattice
        .catalog()
        .classes()
        .iter()
        .map(|c| json!({"name": c.name, "size": c.algebra.size(), "provenance": c.provenance}))
        .collect();
    ctx.emit(
        &text,
        json!({
            "nodes": lattice.len(),
            "edges": lattice.edges().len(),
            "classes": classes,
            "labels": lattice.nodes().iter().map(|n| n.label.clone()).collect::<Vec<_>>(),
        }),
    )?;
    Ok(())
}
