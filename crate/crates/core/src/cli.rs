//! Command-line front end. `run` returns the process exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{build_catalog, build_surface, SurfaceSpec};
use crate::certificate::Certificate;
use crate::families::{generate, verify_factorization, Family};
use crate::lefschetz::{chi_series, lefschetz_data, LefschetzData};
use crate::mcg::{Backend, Status, Verdict};
use crate::relations::{self, construct, default_surface, Params};
use crate::word::Budget;

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "twistcert",
    version,
    about = "Dehn twist factorizations: verify relations, emit and check certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a registered relation.
    VerifyRelation(VerifyRelationArgs),
    /// Write a factorization certificate.
    Generate(GenerateArgs),
    /// Check a certificate.
    Verify(VerifyArgs),
    /// Lefschetz fibration data for a certificate, or a χ series.
    Invariants(InvariantsArgs),
    /// Dump a curve catalog, or the relation registry.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
struct EngineArgs {
    #[arg(long, default_value = "both", value_parser = parse_backend)]
    backend: Backend,
    /// Letter budget for intermediate words (falls back to TWIST_BUDGET).
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyRelationArgs {
    #[arg(long)]
    name: String,
    #[arg(long)]
    g: Option<usize>,
    /// Number of boundary components of the surface.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    variant: Option<usize>,
    /// Relation parameters as `key=value` pairs, e.g. `n=4,h=1`.
    #[arg(long, value_delimiter = ',')]
    params: Vec<String>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, default_value_t = 2)]
    g: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Boundary power, for `multitwist-power`.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Args)]
struct InvariantsArgs {
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Series mode: χ for each m in `--m-range`.
    #[arg(long, value_parser = parse_family, requires = "m_range")]
    family: Option<Family>,
    #[arg(long, default_value_t = 2)]
    g: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Inclusive range such as `1..5`.
    #[arg(long, value_parser = parse_range)]
    m_range: Option<(usize, usize)>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long, default_value_t = 2)]
    g: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Dump the relation registry instead.
    #[arg(long)]
    relations: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    match s {
        "homology" => Ok(Backend::Homology),
        "pi1" => Ok(Backend::Pi1),
        "both" => Ok(Backend::Both),
        _ => Err(format!("unknown backend `{s}` (homology, pi1, both)")),
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
        .map_err(|e: crate::families::FamilyError| e.to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected `a..b`")?;
    let a: usize = a.parse().map_err(|_| format!("bad start `{a}`"))?;
    let b: usize = b
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<i32, InputError>;

/// Runs the CLI. `env_budget` is the value of `TWIST_BUDGET`, if set.
pub fn run<I, T>(
    args: I,
    env_budget: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::VerifyRelation(a) => verify_relation(a, env_budget, out),
        Command::Generate(a) => cmd_generate(a, out),
        Command::Verify(a) => cmd_verify(a, env_budget, out),
        Command::Invariants(a) => cmd_invariants(a, out),
        Command::Catalog(a) => cmd_catalog(a, out),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn budget(flag: Option<usize>, env: Option<String>) -> Result<Budget, InputError> {
    match (flag, env) {
        (Some(b), _) => Ok(Budget(b)),
        (None, Some(s)) => {
            let b = s
                .trim()
                .parse()
                .map_err(|_| InputError(format!("TWIST_BUDGET is not a number: `{s}`")))?;
            Ok(Budget(b))
        }
        (None, None) => Ok(Budget::default()),
    }
}

fn exit_code(v: &Verdict) -> i32 {
    match v.status {
        Status::Verified => EXIT_VERIFIED,
        Status::Falsified => EXIT_FALSIFIED,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn report(v: &Verdict, subject: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    } else {
        writeln!(out, "{subject}: {v}")?;
    }
    Ok(exit_code(v))
}

fn verify_relation(a: VerifyRelationArgs, env: Option<String>, out: &mut dyn Write) -> CmdResult {
    if !relations::REGISTRY.iter().any(|e| e.name == a.name) {
        return Err(InputError(format!("unknown relation `{}`", a.name)));
    }
    let mut p = Params {
        h: a.h,
        n: None,
        m: a.m,
        i: a.i,
        j: a.j,
        variant: a.variant,
    };
    for kv in &a.params {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| InputError(format!("bad parameter `{kv}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| InputError(format!("bad value in `{kv}`")))?;
        let slot = match k {
            "h" => &mut p.h,
            "n" => &mut p.n,
            "m" => &mut p.m,
            "i" => &mut p.i,
            "j" => &mut p.j,
            "variant" => &mut p.variant,
            _ => return Err(InputError(format!("unknown parameter `{k}`"))),
        };
        *slot = Some(v);
    }
    let fallback = default_surface(&a.name).unwrap_or(SurfaceSpec { g: 2, n: 2 });
    let spec = build_surface(a.g.unwrap_or(fallback.g), a.n.unwrap_or(fallback.n))?;
    let budget = budget(a.engine.budget, env)?;
    let cat = build_catalog(spec)?;
    let rel = construct(&a.name, &p, &cat)?;
    let v = relations::verify(&rel, a.engine.backend, budget, &cat);
    report(
        &v,
        &format!("{rel} on genus {}, {} boundary", spec.g, spec.n),
        a.engine.json,
        out,
    )
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write) -> CmdResult {
    let f = generate(a.family, a.g, a.k, a.m)?;
    let json = Certificate::from_factorization(&f).to_json();
    match a.out {
        Some(path) => {
            fs::write(&path, json)?;
            writeln!(
                out,
                "{} twists written to {}",
                f.twists.len(),
                path.display()
            )?;
        }
        None => out.write_all(json.as_bytes())?,
    }
    Ok(0)
}

fn read_certificate(path: &PathBuf) -> Result<Certificate, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(Certificate::parse(&text)?)
}

fn cmd_verify(a: VerifyArgs, env: Option<String>, out: &mut dyn Write) -> CmdResult {
    let cert = read_certificate(&a.input)?;
    let budget = budget(a.engine.budget, env)?;
    let cat = build_catalog(cert.surface)?;
    let f = cert.to_factorization();
    let v = verify_factorization(&f, a.engine.backend, budget, &cat);
    report(
        &v,
        &format!("{} m={} ({} twists)", f.family, f.m, f.twists.len()),
        a.engine.json,
        out,
    )
}

fn cmd_invariants(a: InvariantsArgs, out: &mut dyn Write) -> CmdResult {
    if let Some(family) = a.family {
        let (lo, hi) = a.m_range.expect("required by clap");
        let series = chi_series(family, a.g, a.k, lo..=hi)?;
        if a.json {
            let rows: Vec<_> = series
                .iter()
                .map(|(m, chi)| serde_json::json!({ "m": m, "chi": chi }))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        } else {
            writeln!(out, "{:>4}  {:>6}", "m", "chi")?;
            for (m, chi) in series {
                writeln!(out, "{m:>4}  {chi:>6}")?;
            }
        }
        return Ok(0);
    }
    let path = a
        .input
        .ok_or_else(|| InputError("need --input or --family".into()))?;
    let cert = read_certificate(&path)?;
    let cat = build_catalog(cert.surface)?;
    let data = lefschetz_data(&cert.to_factorization(), &cat)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&data)?)?;
    } else {
        write_table(&data, out)?;
    }
    Ok(0)
}

fn write_table(d: &LefschetzData, out: &mut dyn Write) -> std::io::Result<()> {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    let rows = [
        ("fiber genus", d.g.to_string()),
        ("sections", opt(d.n_sections.map(|n| n.to_string()))),
        (
            "section square",
            opt(d.section_self_intersection.map(|s| s.to_string())),
        ),
        (
            "extra twists",
            if d.extra_twists.is_empty() {
                "-".into()
            } else {
                d.extra_twists.join(" ")
            },
        ),
        ("singular fibers", d.r.to_string()),
        ("chi", d.chi.to_string()),
        ("H1 rank", opt(d.h1_total_rank.map(|r| r.to_string()))),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<16} {v}")?;
    }
    if let Some(n) = &d.shape_note {
        writeln!(out, "note: {n}")?;
    }
    Ok(())
}

fn cmd_catalog(a: CatalogArgs, out: &mut dyn Write) -> CmdResult {
    let text = if a.relations {
        let mut s = serde_json::to_string_pretty(&relations::export()?)?;
        s.push('\n');
        s
    } else {
        let spec = build_surface(a.g, a.n)?;
        let cat = build_catalog(spec)?;
        let rows: Vec<_> = cat
            .curves()
            .map(|c| {
                (
                    c.name.clone(),
                    c.class.as_ref().map(|h| h.coords().to_vec()),
                    c.word.as_ref().map(|w| cat.model().alphabet().render(w)),
                    c.nonseparating,
                    c.boundary,
                )
            })
            .collect();
        if a.json {
            let v: Vec<_> = rows
                .iter()
                .map(|(name, class, word, ns, b)| {
                    serde_json::json!({ "name": name, "class": class, "word": word, "nonseparating": ns, "boundary": b })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&v)?;
            s.push('\n');
            s
        } else {
            let mut s = String::new();
            for (name, class, word, ns, b) in rows {
                let class = class.map_or("-".into(), |c| format!("{c:?}"));
                let kind = if b {
                    "boundary"
                } else if ns {
                    "nonsep"
                } else {
                    "sep"
                };
                s.push_str(&format!(
                    "{name:<8} {kind:<8} {class:<24} {}\n",
                    word.unwrap_or_else(|| "abstract".into())
                ));
            }
            s
        }
    };
    match a.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}
