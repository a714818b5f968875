//! Command-line front end. Exit codes: 0 on success or equality, 1 when a
//! verification finds a mismatch, 2 on bad input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::elliptic::{dmvv_expand, verify_q0_with_table, GenusTable};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ELEMENT_CAP};
use crate::hilbert::{goettsche_series, verify_cor1, verify_samehodge, SurfaceHodge};
use crate::laurent::{IntSeries, SeriesQ};
use crate::orbifold::{wreath_series_direct, wreath_series_product, OrbifoldData};
use crate::report::ComparisonReport;
use crate::selftest;
use crate::types::{class_size, enumerate_types, TypeEntryJson, WreathType};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wreath-hodge",
    version,
    about = "Orbifold Hodge numbers of wreath-product orbifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Conjugacy classes of G or of G wr S_n.
    Classes(ClassesArgs),
    /// Wreath Hodge series of an orbifold.
    Hodge(HodgeArgs),
    /// Hodge series of Hilbert schemes of points on a surface.
    Hilbert(HilbertArgs),
    /// Compare a wreath orbifold series with a Hilbert-scheme or symmetric-product series.
    Verify(VerifyArgs),
    /// Expand the elliptic-genus product.
    Elliptic(EllipticArgs),
    /// Run every built-in invariant suite.
    Selftest,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["group", "builtin"])))]
struct ClassesArgs {
    /// Group file `{"name", "order", "mul"}`.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Built-in group: `trivial`, `z<k>`, `s<k>` or `d<k>`.
    #[arg(long)]
    builtin: Option<String>,
    /// List the classes of G wr S_n instead of G.
    #[arg(long)]
    n: Option<usize>,
    /// Largest wreath product to build explicitly.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("method").args(["direct", "product", "both"])))]
struct HodgeArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 4)]
    qmax: u32,
    /// Sum over conjugacy-class types.
    #[arg(long)]
    direct: bool,
    /// Closed product formula (default).
    #[arg(long)]
    product: bool,
    /// Compute both and print their differences (expected empty).
    #[arg(long)]
    both: bool,
    /// Also print the x = y = 1 specialization.
    #[arg(long)]
    euler: bool,
    /// Group file whose class representatives the sector labels `c<rep>` must name.
    #[arg(long)]
    group: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct HilbertArgs {
    surface: PathBuf,
    #[arg(long, default_value_t = 4)]
    qmax: u32,
    #[arg(long)]
    euler: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    orbifold: PathBuf,
    /// Surface file, or with `--cor1` a surface or orbifold file.
    #[arg(long)]
    resolution: PathBuf,
    #[arg(long, default_value_t = 4)]
    qmax: u32,
    /// Compare symmetric products of the resolution instead of Hilbert schemes.
    #[arg(long)]
    cor1: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct EllipticArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 4)]
    pmax: u32,
    #[arg(long, default_value_t = 4)]
    qmax: u32,
    /// Check the q = 0 slice against this orbifold's wreath Hodge series.
    #[arg(long = "q0-check", value_name = "ORBIFOLD")]
    q0_check: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

/// Parses `argv` (program name first), runs the command, returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Classes(a) => classes(&a, out),
        Command::Hodge(a) => hodge(&a, out),
        Command::Hilbert(a) => hilbert(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Elliptic(a) => elliptic(&a, out),
        Command::Selftest => Ok(selftest_cmd(out)),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    writeln!(out, "{text}").map_err(io_err)
}

fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let bad = || Error::UnknownGroup(name.to_string());
    if name == "trivial" {
        return Ok(FiniteGroup::trivial());
    }
    let (kind, k) = name.split_at(1.min(name.len()));
    let k: usize = k.parse().map_err(|_| bad())?;
    match (kind, k) {
        ("z", 1..=64) => Ok(FiniteGroup::cyclic(k)),
        ("s", 1..=5) => Ok(FiniteGroup::symmetric(k)),
        ("d", 3..=32) => Ok(FiniteGroup::dihedral(k)),
        _ => Err(bad()),
    }
}

#[derive(Serialize)]
struct ClassRow {
    index: usize,
    representative: String,
    size: String,
    centralizer_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    type_string: Option<String>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    type_entries: Option<Vec<TypeEntryJson>>,
}

fn classes(a: &ClassesArgs, out: &mut dyn Write) -> Result<i32> {
    let g = match (&a.group, &a.builtin) {
        (Some(path), _) => FiniteGroup::from_path(path)?,
        (None, Some(name)) => builtin_group(name)?,
        (None, None) => unreachable!("clap requires a group source"),
    };
    let rows: Vec<ClassRow> = match a.n {
        None | Some(0) => g
            .conjugacy_classes()
            .iter()
            .enumerate()
            .map(|(index, c)| ClassRow {
                index,
                representative: c.representative.to_string(),
                size: c.size().to_string(),
                centralizer_order: c.centralizer_order.to_string(),
                type_string: None,
                type_entries: None,
            })
            .collect(),
        Some(n) => {
            let w = g.build_wreath(n, a.cap)?;
            let mut rows: Vec<_> = w
                .conjugacy_classes()
                .iter()
                .map(|c| {
                    let rep = w.wreath_element(c.representative).expect("wreath index");
                    let ty = g.type_of(&rep);
                    (ty, rep, c)
                })
                .collect();
            // list in type enumeration order
            let order: BTreeMap<WreathType, usize> = enumerate_types(&g, n as u32)
                .into_iter()
                .enumerate()
                .map(|(i, t)| (t, i))
                .collect();
            rows.sort_by_key(|(ty, _, _)| order.get(ty).copied().unwrap_or(usize::MAX));
            rows.into_iter()
                .enumerate()
                .map(|(index, (ty, rep, c))| {
                    debug_assert_eq!(class_size(&g, &ty), c.size().into());
                    ClassRow {
                        index,
                        representative: rep.to_string(),
                        size: c.size().to_string(),
                        centralizer_order: c.centralizer_order.to_string(),
                        type_string: Some(ty.to_string()),
                        type_entries: Some(ty.to_json()),
                    }
                })
                .collect()
        }
    };
    let title = match a.n {
        None | Some(0) => g.name().to_string(),
        Some(n) => format!("{} wr S{n}", g.name()),
    };
    if a.json {
        print_json(out, &json!({ "group": title, "classes": rows }))?;
    } else {
        let w = |e: std::io::Error| io_err(e);
        writeln!(out, "{title}: {} classes", rows.len()).map_err(w)?;
        writeln!(
            out,
            "{:>3}  {:<28} {:>8} {:>12}  type",
            "#", "representative", "size", "centralizer"
        )
        .map_err(w)?;
        for r in &rows {
            writeln!(
                out,
                "{:>3}  {:<28} {:>8} {:>12}  {}",
                r.index,
                r.representative,
                r.size,
                r.centralizer_order,
                r.type_string.as_deref().unwrap_or("-")
            )
            .map_err(w)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_series(out: &mut dyn Write, s: &SeriesQ, euler: Option<&IntSeries>) -> Result<()> {
    write!(out, "{s}").map_err(io_err)?;
    if let Some(e) = euler {
        let values: Vec<String> = e.q_coeffs().iter().map(|c| c.to_string()).collect();
        writeln!(out, "x = y = 1: {}", values.join(", ")).map_err(io_err)?;
    }
    Ok(())
}

fn euler_values(e: &IntSeries) -> Vec<crate::laurent::JsonInt> {
    e.q_coeffs().into_iter().map(crate::laurent::JsonInt).collect()
}

fn hodge(a: &HodgeArgs, out: &mut dyn Write) -> Result<i32> {
    let o = OrbifoldData::from_path(&a.file)?;
    let group = a.group.as_ref().map(FiniteGroup::from_path).transpose()?;
    let method = if a.both {
        "both"
    } else if a.direct {
        "direct"
    } else {
        "product"
    };
    let series = match method {
        "direct" => wreath_series_direct(&o, group.as_ref(), a.qmax)?,
        _ => wreath_series_product(&o, a.qmax),
    };
    let diff = if a.both {
        let direct = wreath_series_direct(&o, group.as_ref(), a.qmax)?;
        Some(ComparisonReport::compare(
            format!("product vs direct for {}", o.name()),
            &series,
            &direct,
        ))
    } else {
        None
    };
    let euler = if a.euler {
        Some(series.specialize(1, 1)?)
    } else {
        None
    };

    if a.json {
        let mut doc = json!({
            "name": o.name(),
            "method": method,
            "qmax": a.qmax,
            "series": series.to_json(),
        });
        if let Some(e) = &euler {
            doc["euler"] = serde_json::to_value(euler_values(e)).expect("serializes");
        }
        if let Some(r) = &diff {
            let mismatches: Vec<_> = r.degrees.iter().filter(|d| !d.matches).collect();
            doc["diff"] = serde_json::to_value(mismatches).expect("serializes");
        }
        print_json(out, &doc)?;
    } else {
        writeln!(out, "{} ({method}, d = {})", o.name(), o.dim()).map_err(io_err)?;
        write_series(out, &series, euler.as_ref())?;
        if let Some(r) = &diff {
            let mismatches: Vec<_> = r.degrees.iter().filter(|d| !d.matches).collect();
            writeln!(out, "diff: {}", if mismatches.is_empty() { "none" } else { "" }).map_err(io_err)?;
            for d in mismatches {
                let m = d.first_mismatch.as_ref().expect("mismatch recorded");
                writeln!(out, "  q^{}: product vs direct at {m}", d.q).map_err(io_err)?;
            }
        }
    }
    Ok(match diff {
        Some(r) if !r.passed() => EXIT_MISMATCH,
        _ => EXIT_OK,
    })
}

fn hilbert(a: &HilbertArgs, out: &mut dyn Write) -> Result<i32> {
    let x = SurfaceHodge::from_path(&a.surface)?;
    let series = goettsche_series(&x, a.qmax);
    let euler = if a.euler {
        Some(series.specialize(1, 1)?)
    } else {
        None
    };
    if a.json {
        let mut doc = json!({ "name": x.name(), "qmax": a.qmax, "series": series.to_json() });
        if let Some(e) = &euler {
            doc["euler"] = serde_json::to_value(euler_values(e)).expect("serializes");
        }
        print_json(out, &doc)?;
    } else {
        writeln!(out, "Hilbert schemes of points on {}", x.name()).map_err(io_err)?;
        write_series(out, &series, euler.as_ref())?;
    }
    Ok(EXIT_OK)
}

/// Reads a file holding either orbifold data (has `sectors`) or a surface table.
fn orbifold_or_surface(path: &Path) -> Result<OrbifoldData> {
    let (text, origin) = crate::read_text(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::json(&origin, e))?;
    if value.get("sectors").is_some() {
        OrbifoldData::from_json_str(&text, &origin)
    } else {
        Ok(SurfaceHodge::from_json_str(&text, &origin)?.as_trivial_orbifold())
    }
}

fn emit_report(out: &mut dyn Write, r: &ComparisonReport, json: bool) -> Result<i32> {
    if json {
        print_json(out, r)?;
    } else {
        write!(out, "{r}").map_err(io_err)?;
    }
    Ok(if r.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let o = OrbifoldData::from_path(&a.orbifold)?;
    let report = if a.cor1 {
        let x = orbifold_or_surface(&a.resolution)?;
        verify_cor1(&o, &x, a.qmax)?
    } else {
        let x = SurfaceHodge::from_path(&a.resolution)?;
        verify_samehodge(&o, &x, a.qmax)?
    };
    emit_report(out, &report, a.json)
}

fn elliptic(a: &EllipticArgs, out: &mut dyn Write) -> Result<i32> {
    let table = GenusTable::from_path(&a.file)?;
    let orbifold = a.q0_check.as_ref().map(OrbifoldData::from_path).transpose()?;
    let series = dmvv_expand(&table, a.pmax, a.qmax)?;
    let report = orbifold
        .as_ref()
        .map(|o| verify_q0_with_table(&table, o, a.pmax))
        .transpose()?;
    if a.json {
        let mut doc = json!({
            "name": table.name(),
            "pmax": a.pmax,
            "qmax": a.qmax,
            "series": series.to_json(),
        });
        if let Some(r) = &report {
            doc["q0_check"] = serde_json::to_value(r).expect("serializes");
        }
        print_json(out, &doc)?;
    } else {
        writeln!(out, "product expansion for {}", table.name()).map_err(io_err)?;
        write!(out, "{series}").map_err(io_err)?;
        if let Some(r) = &report {
            write!(out, "{r}").map_err(io_err)?;
        }
    }
    Ok(match report {
        Some(r) if !r.passed() => EXIT_MISMATCH,
        _ => EXIT_OK,
    })
}

fn selftest_cmd(out: &mut dyn Write) -> i32 {
    let mut code = EXIT_OK;
    for suite in selftest::run_all() {
        let ms = suite.elapsed.as_secs_f64() * 1000.0;
        let _ = match &suite.failure {
            None => writeln!(
                out,
                "ok    {:<44} {:>4} checks {:>9.1} ms",
                suite.name, suite.checks, ms
            ),
            Some(f) => writeln!(out, "FAIL  {:<44} {:>9.1} ms\n  {f}", suite.name, ms),
        };
        if !suite.passed() {
            code = EXIT_MISMATCH;
            break;
        }
    }
    code
}
