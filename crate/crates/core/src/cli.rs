//! The `ade-bps` command line. [`run`] takes the argument list and output
//! streams so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or input error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::folding::{CurveClass, Marking};
use crate::localize::{GeometryDescriptor, Localization, Localizer};
use crate::rootsys::{DiagramKind, DynkinDiagram};
use crate::verify::{self, Case};

#[derive(Parser, Debug)]
#[command(name = "ade-bps", version, about = "Genus-0 BPS invariants of ADE G-Hilbert resolutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the positive roots of a diagram.
    Roots {
        /// A, D or E.
        kind: String,
        rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Fold the positive roots onto curve classes and tabulate invariants.
    Table {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Add columns computed by localization.
        #[arg(long)]
        localize: bool,
    },
    /// Lift a curve class to a divisor on the surface.
    Lift {
        /// Comma-separated white multiplicities, e.g. 3,5,4,3.
        class: String,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compute ch χ(O_C, O_C), the Ext groups and n_β by localization.
    Localize {
        /// Comma-separated white multiplicities, e.g. 3,5,4,3.
        class: String,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the self-checks for a built-in case.
    Verify {
        #[arg(long, default_value = "e8-a5")]
        case: String,
        /// Only the four classes with printed values.
        #[arg(long)]
        quick: bool,
    },
    /// Print a built-in descriptor in canonical form.
    DumpDescriptor {
        #[arg(long, default_value = "e8-a5")]
        case: String,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// Built-in case.
    #[arg(long, default_value = "e8-a5")]
    case: String,
    /// TOML marking file; overrides --case.
    #[arg(long)]
    marking: Option<PathBuf>,
    /// Descriptor file; needed for localization with --marking.
    #[arg(long)]
    descriptor: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

impl Source {
    fn marking(&self) -> Result<Marking> {
        match &self.marking {
            Some(p) => Marking::from_toml(&read(p)?),
            None => Ok(self.case()?.marking()),
        }
    }

    fn case(&self) -> Result<Case> {
        self.case.parse()
    }

    fn descriptor(&self) -> Result<GeometryDescriptor> {
        match (&self.descriptor, &self.marking) {
            (Some(p), _) => read(p)?.parse(),
            (None, None) => Ok(self.case()?.descriptor()),
            (None, Some(_)) => Err(Error::Descriptor("--marking needs --descriptor for localization".into())),
        }
    }
}

/// A rectangular table of exact values rendered as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl OutputTable {
    pub fn plain(&self) -> String {
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                self.rows
                    .iter()
                    .map(|r| r[i].len())
                    .chain([self.columns[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut s = String::new();
        for row in std::iter::once(&self.columns).chain(&self.rows) {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(s, "{}", cells.join("  ").trim_end()).unwrap();
        }
        s
    }

    pub fn csv(&self) -> String {
        let quote = |c: &String| {
            if c.contains([',', '"']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        };
        let mut s = String::new();
        for row in std::iter::once(&self.columns).chain(&self.rows) {
            writeln!(s, "{}", row.iter().map(quote).collect::<Vec<_>>().join(",")).unwrap();
        }
        s
    }
}

fn roots_cmd(kind: &str, rank: usize, format: Format) -> Result<String> {
    let kind: DiagramKind = kind.parse()?;
    let d = DynkinDiagram::build(kind, rank)?;
    let roots = d.positive_roots();
    let table = OutputTable {
        columns: vec!["root".into(), "height".into()],
        rows: roots.iter().map(|r| vec![r.to_string(), r.height().to_string()]).collect(),
    };
    Ok(match format {
        Format::Plain => format!("{}{}: {} positive roots\n", table.plain(), d.name(), roots.len()),
        Format::Csv => table.csv(),
        Format::Json => json_string(&json!({
            "diagram": d.name(),
            "count": roots.len(),
            "roots": roots.iter().map(|r| r.coeffs()).collect::<Vec<_>>(),
        })),
    })
}

fn json_string(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// The fold table, optionally with localization columns.
pub fn bps_output_table(marking: &Marking, engine: Option<&Localizer>) -> Result<OutputTable> {
    let table = marking.bps_table();
    let mut columns: Vec<String> = vec!["class".into(), "fiber".into(), "n".into()];
    if engine.is_some() {
        columns.extend(["chi", "e(Ext2)", "e(Ext1)", "n_loc"].map(String::from));
    }
    let mut rows = Vec::new();
    for r in &table.records {
        let mut row = vec![r.class.to_string(), r.fiber_count.to_string(), r.invariant.to_string()];
        if let Some(engine) = engine {
            let l = engine.localize(&r.class)?;
            row.extend([l.chi.to_string(), l.euler_ext2.to_string(), l.euler_ext1.to_string(), l.invariant.to_string()]);
        }
        rows.push(row);
    }
    Ok(OutputTable { columns, rows })
}

fn table_cmd(source: &Source, format: Format, localize: bool) -> Result<String> {
    let marking = source.marking()?;
    let descriptor = if localize { Some(source.descriptor()?) } else { None };
    let engine = descriptor.as_ref().map(|d| Localizer::new(&marking, d)).transpose()?;
    let out = bps_output_table(&marking, engine.as_ref())?;
    let t = marking.bps_table();
    Ok(match format {
        Format::Plain => format!("{}{}\n", out.plain(), t.summary()),
        Format::Csv => out.csv(),
        Format::Json => json_string(&json!({
            "diagram": marking.diagram().name(),
            "columns": out.columns,
            "rows": out.rows,
            "summary": {
                "classes": t.records.len(),
                "mapped_roots": t.mapped_roots(),
                "dropped": t.dropped.len(),
                "total_roots": t.total_roots,
            },
        })),
    })
}

fn lift_cmd(class: &str, source: &Source, format: Format) -> Result<String> {
    let marking = source.marking()?;
    let class: CurveClass = class.parse()?;
    let l = marking.lift(&class)?;
    let chi = l.euler_characteristic();
    let is_root = l.self_intersection == -2;
    let divisor: Vec<String> = (0..marking.diagram().rank())
        .filter(|&i| l.divisor.0[i] != 0)
        .map(|i| {
            let c = l.divisor.0[i];
            let name = marking.curve_name(i);
            if c == 1 {
                name
            } else {
                format!("{c}*{name}")
            }
        })
        .collect();
    Ok(match format {
        Format::Plain | Format::Csv => {
            let mut s = String::new();
            writeln!(s, "class {}", l.class).unwrap();
            writeln!(s, "divisor {}", divisor.join(" + ")).unwrap();
            writeln!(s, "coefficients {}", l.divisor).unwrap();
            writeln!(s, "k {}", CurveClass::new(l.k.clone())).unwrap();
            writeln!(s, "n {}", CurveClass::new(l.n.clone())).unwrap();
            writeln!(s, "delta {}", CurveClass::new(l.delta.clone())).unwrap();
            writeln!(s, "self-intersection {}", l.self_intersection).unwrap();
            writeln!(s, "euler characteristic {chi}").unwrap();
            writeln!(s, "root {}", if is_root { "yes" } else { "no" }).unwrap();
            s
        }
        Format::Json => json_string(&json!({
            "class": l.class,
            "divisor": l.divisor.coeffs(),
            "k": l.k,
            "n": l.n,
            "delta": l.delta,
            "self_intersection": l.self_intersection,
            "euler_characteristic": chi,
            "root": is_root,
        })),
    })
}

/// Plain-text report of one localization.
pub fn render_localization(l: &Localization) -> String {
    let mut s = String::new();
    writeln!(s, "class {}", l.lift.class).unwrap();
    writeln!(s, "lift {}", l.lift.divisor).unwrap();
    for t in &l.points {
        writeln!(s, "ch({}) = {}", t.name, t.ch).unwrap();
        writeln!(s, "chi({}) = {}", t.name, t.chi).unwrap();
    }
    writeln!(s, "ch = {}", l.chi).unwrap();
    writeln!(s, "ext1 = {}", l.ext.ext1).unwrap();
    writeln!(s, "ext2 = {}", l.ext.ext2).unwrap();
    writeln!(s, "ext1 weights {:?}", l.ext.ext1.weight_list()).unwrap();
    writeln!(s, "ext2 weights {:?}", l.ext.ext2.weight_list()).unwrap();
    writeln!(s, "e(Ext2) = {}", l.euler_ext2).unwrap();
    writeln!(s, "e(Ext1) = {}", l.euler_ext1).unwrap();
    writeln!(s, "n = {}", l.invariant).unwrap();
    s
}

fn localize_cmd(class: &str, source: &Source, format: Format, err: &mut dyn Write) -> Result<String> {
    let marking = source.marking()?;
    let descriptor = source.descriptor()?;
    let lints = descriptor.lint(marking.diagram());
    for l in lints.lints.iter().filter(|l| !l.passed()) {
        let _ = writeln!(err, "warning: descriptor lint `{}`: {}", l.name, l.problems.join("; "));
    }
    for w in &lints.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let engine = Localizer::new(&marking, &descriptor)?;
    let l = engine.localize(&class.parse()?)?;
    Ok(match format {
        Format::Plain | Format::Csv => render_localization(&l),
        Format::Json => json_string(&json!({
            "class": l.lift.class,
            "lift": l.lift.divisor.coeffs(),
            "points": l.points.iter().map(|t| json!({
                "name": t.name, "ch": t.ch.to_string(), "chi": t.chi.to_string(),
            })).collect::<Vec<_>>(),
            "ch": l.chi.to_string(),
            "ext1": l.ext.ext1.weight_list(),
            "ext2": l.ext.ext2.weight_list(),
            "euler_ext2": l.euler_ext2.to_string(),
            "euler_ext1": l.euler_ext1.to_string(),
            "n": l.invariant.to_string(),
        })),
    })
}

/// Runs the command line; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };

    let result = match &cli.command {
        Command::Roots { kind, rank, format } => roots_cmd(kind, *rank, *format),
        Command::Table { source, format, localize } => table_cmd(source, *format, *localize),
        Command::Lift { class, source, format } => lift_cmd(class, source, *format),
        Command::Localize { class, source, format } => localize_cmd(class, source, *format, err),
        Command::Verify { case, quick } => match case.parse::<Case>() {
            Ok(case) => {
                let report = verify::run(case, *quick);
                let _ = write!(out, "{report}");
                return if report.passed() { 0 } else { 1 };
            }
            Err(e) => Err(e),
        },
        Command::DumpDescriptor { case } => case.parse::<Case>().map(|c| c.descriptor().to_string()),
    };

    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
