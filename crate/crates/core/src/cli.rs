//! Command-line front end. Exit codes: 0 success, 1 a checked property
//! failed (or the set could not be verified), 2 bad usage or unreadable input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construct::{build, es_baseline_grid_bound};
use crate::error::Error;
use crate::io::{deserialize, detect_format, serialize, Format};
use crate::pointset::{ConstructionParams, PointSet};
use crate::svg::{render_svg, RenderOptions};
use crate::verify::{check_claims, full_report, oracle_claim, BRUTE_FORCE_LIMIT};

#[derive(Parser, Debug)]
#[command(name = "esgrid", version, about = "Small-grid point sets without large convex polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a construction
    Gen(GenArgs),
    /// Recompute every property of a point-set file and check its claims
    Verify(VerifyArgs),
    /// Draw a point-set file as SVG
    Render(RenderArgs),
    /// Print size and grid statistics
    Stats(StatsArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Pr,
    Skl,
    SklOpt,
    Es,
    EsOpt,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Txt,
    Json,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    /// Use the wide separation at the outermost split as well
    #[arg(long)]
    no_unit_sep: bool,
    #[arg(long, value_enum, default_value = "txt")]
    format: FormatArg,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    /// Also compute the largest empty convex polygon
    #[arg(long)]
    empty: bool,
    /// Cross-check the convex maximum by exhaustive search (small sets only)
    #[arg(long)]
    oracle: bool,
    /// Cap the number of verifier threads
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    file: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    hull: bool,
    #[arg(long)]
    blocks: bool,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 4.0)]
    radius: f64,
}

#[derive(Args, Debug)]
struct StatsArgs {
    file: PathBuf,
}

/// An error and the exit code it maps to.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams(_) | Error::Parse { .. } | Error::DuplicatePoint(_) | Error::EmptySet => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Render(a) => render(a, out),
        Command::Stats(a) => stats(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn gen_params(a: &GenArgs) -> Result<ConstructionParams, Failure> {
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| usage(format!("--kind {:?} needs --{flag}", a.kind)));
    let unit_separation = !a.no_unit_sep;
    let params = match a.kind {
        Kind::Pr => ConstructionParams::Pr { r: need(a.r, "r")? },
        Kind::Skl => ConstructionParams::SklBaseline { k: need(a.k, "k")?, l: need(a.l, "l")? },
        Kind::SklOpt => ConstructionParams::SklOptimized { k: need(a.k, "k")?, l: need(a.l, "l")?, unit_separation },
        Kind::Es => ConstructionParams::EsBaseline { t: need(a.t, "t")? },
        Kind::EsOpt => ConstructionParams::EsOptimized { t: need(a.t, "t")?, unit_separation },
    };
    params.validate()?;
    Ok(params)
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = gen_params(&a)?;
    let set = build(params)?;
    let format = match a.format {
        FormatArg::Txt => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let bytes = serialize(&set, format)?;
    match &a.out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| Failure(1, format!("{}: {e}", path.display())))?,
        None => out.write_all(&bytes).map_err(|e| Failure(1, e.to_string()))?,
    }
    Ok(0)
}

fn load(path: &Path) -> Result<PointSet, Failure> {
    let bytes = std::fs::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(deserialize(&bytes, detect_format(&bytes))?)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let set = load(&a.file)?;
    let report = match a.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| usage(e.to_string()))?
            .install(|| full_report(&set, a.empty))?,
        None => full_report(&set, a.empty)?,
    };
    let mut claims = check_claims(&set, &report);
    let mut lines = String::new();
    if let Some(p) = set.params() {
        lines.push_str(&format!("construction:     {p}\n"));
    }
    lines.push_str(&report.to_string());
    if a.oracle {
        if set.len() <= BRUTE_FORCE_LIMIT && report.max_convex.is_some() {
            claims.push(oracle_claim(&set, &report));
        } else {
            lines.push_str(&format!(
                "oracle skipped: needs a set in general position of at most {BRUTE_FORCE_LIMIT} points\n"
            ));
        }
    }
    for c in &claims {
        lines.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    out.write_all(lines.as_bytes()).map_err(|e| Failure(1, e.to_string()))?;
    Ok(if claims.iter().all(|c| c.passed) { 0 } else { 1 })
}

fn render(a: RenderArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let set = load(&a.file)?;
    if a.width == 0 || a.radius.is_nan() || a.radius <= 0.0 {
        return Err(usage("--width and --radius must be positive"));
    }
    let options =
        RenderOptions { canvas_width_px: a.width, point_radius_px: a.radius, show_hull: a.hull, show_blocks: a.blocks };
    let svg = render_svg(&set, &options)?;
    std::fs::write(&a.out, svg).map_err(|e| Failure(1, format!("{}: {e}", a.out.display())))?;
    let _ = writeln!(out, "wrote {} ({} points)", a.out.display(), set.len());
    Ok(0)
}

fn stats(a: StatsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let set = load(&a.file)?;
    let bounds = set.bounding_box()?;
    let mut lines = format!("points:          {}\nbounds:          {bounds}\n", set.len());
    lines.push_str(&format!("max |coordinate|: {}\n", set.max_abs_coordinate()?));
    if let Some(p) = set.params() {
        lines.push_str(&format!("construction:    {p}\n"));
        if let Some(t) = p.t() {
            lines.push_str(&format!("baseline bound:  {} (3t^2(t+1)4^(t+1))\n", es_baseline_grid_bound(t)));
        }
    }
    for span in set.spans() {
        lines.push_str(&format!("block {}: points {}..{}\n", span.label, span.range.start, span.range.end));
    }
    out.write_all(lines.as_bytes()).map_err(|e| Failure(1, e.to_string()))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("esgrid").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_text() {
        let (code, out, _) = call(&["gen", "--kind", "es-opt", "--t", "6", "--format", "txt"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 16);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["gen", "--kind", "pr", "--r", "-1"]).0, 2);
        assert_eq!(call(&["gen", "--kind", "pr"]).0, 2);
        assert_eq!(call(&["gen", "--kind", "skl", "--k", "1", "--l", "3"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["verify", "/nonexistent/file"]).0, 2);
    }
}
