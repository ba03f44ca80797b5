//! Command-line front end.
//!
//! [`run_command`] parses arguments and returns the exit status and both
//! output streams instead of touching the process, so the whole interface can
//! be driven from tests. Status 2 means bad usage or unreadable input, 1 a
//! failed verification, 0 success.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::af::{extensions_with_cap, parse_af, write_af, AfFormat, ArgumentationFramework, Semantics};
use crate::rdb::{
    covering_repairs_with_cap, enumerate_repairs_with_cap, export_dependencies, export_table, import_table,
    import_table_with_dependencies, AttributeId, CoveringMode, Instance, RepairClass, RepairMode, TableFormat,
};
use crate::translate::{build, Target, Translation};
use crate::verify::{check_all, check_correspondence_with_cap, format_set, run_suite, Fault, SuiteConfig};
use crate::{samples, EnumCap};

pub const TABLE_FILE: &str = "table.csv";
pub const DEPENDENCIES_FILE: &str = "dependencies.json";
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Parser)]
#[command(name = "af2db", version, about = "Argumentation frameworks as inconsistent databases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Translate a framework into a table, its dependencies and a manifest.
    Translate {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_parser = parse_target)]
        target: Target,
        /// One column per conflict instead of one per color.
        #[arg(long)]
        no_compress: bool,
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print the extensions of a framework, one per line.
    SolveAf {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_parser = parse_semantics)]
        semantics: Semantics,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print the repairs of a table, one per line.
    SolveDb {
        /// CSV table, or a JSON table carrying its own dependencies.
        #[arg(long, value_name = "FILE")]
        table: PathBuf,
        #[arg(long, value_name = "FILE")]
        deps: Option<PathBuf>,
        #[arg(long, value_parser = parse_class)]
        class: RepairClass,
        /// Covered attributes for the covering classes (default: all).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        attrs: Vec<String>,
    },
    /// Check the semantics/repair correspondences.
    Verify(VerifyArgs),
    /// Write the worked examples and their translations.
    Example {
        #[arg(long, value_name = "DIR", default_value = "af2db-example")]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct FormatArg {
    /// Framework format; by default `.tgf` files are TGF and the rest APX.
    #[arg(long, value_parser = parse_format)]
    format: Option<AfFormat>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "random"])))]
struct VerifyArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Check all seven correspondences (the default for --in).
    #[arg(long, requires = "input", conflicts_with = "semantics")]
    all: bool,
    #[arg(long, requires = "input", value_parser = parse_semantics)]
    semantics: Option<Semantics>,
    #[command(flatten)]
    format: FormatArg,
    /// Number of random frameworks.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, requires = "random", default_value_t = 8)]
    max_args: usize,
    #[arg(long, requires = "random", default_value_t = 0)]
    seed: u64,
    #[arg(long, requires = "random", default_value_t = 0.25)]
    attack_prob: f64,
    #[arg(long, requires = "random", default_value_t = 0.05)]
    loop_prob: f64,
    /// Print the summary as JSON.
    #[arg(long, requires = "random")]
    json: bool,
    #[arg(long, requires = "random", hide = true, value_parser = parse_fault)]
    inject_fault: Option<Fault>,
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse()
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    s.parse().map_err(|e: crate::af::UnknownSemantics| e.to_string())
}

fn parse_class(s: &str) -> Result<RepairClass, String> {
    s.parse()
}

fn parse_format(s: &str) -> Result<AfFormat, String> {
    s.parse()
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string())).map_err(|_| format!("unknown fault `{s}`"))
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs one command. `args` excludes the program name.
pub fn run_command<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("af2db")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Output {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn dispatch(command: Command) -> Result<Output> {
    let cap = EnumCap::from_env().map_err(anyhow::Error::msg)?;
    match command {
        Command::Translate {
            input,
            target,
            no_compress,
            out,
            format,
        } => {
            let af = read_af(&input, format.format)?;
            let t = build(&af, target, !no_compress)?;
            write_translation(&out, &t)?;
            Ok(Output::ok(format!(
                "{} table: {} rows, {} columns, {} dependencies -> {}\n",
                target,
                t.instance.row_count(),
                t.instance.column_count(),
                t.instance.dependencies().len(),
                out.display()
            )))
        }
        Command::SolveAf {
            input,
            semantics,
            format,
        } => {
            let af = read_af(&input, format.format)?;
            let family = extensions_with_cap(&af, semantics, cap)?;
            let mut out = String::new();
            for ext in &family {
                let _ = writeln!(out, "{ext}");
            }
            Ok(Output::ok(out))
        }
        Command::SolveDb {
            table,
            deps,
            class,
            attrs,
        } => {
            let inst = read_table(&table, deps.as_deref())?;
            let attrs: Vec<AttributeId> = if attrs.is_empty() {
                inst.schema().to_vec()
            } else {
                attrs.into_iter().map(AttributeId::from).collect()
            };
            let family = match class {
                RepairClass::All => enumerate_repairs_with_cap(&inst, RepairMode::All, cap)?,
                RepairClass::Maximal => enumerate_repairs_with_cap(&inst, RepairMode::Maximal, cap)?,
                RepairClass::MaxCovering => covering_repairs_with_cap(&inst, CoveringMode::Max, &attrs, cap)?,
                RepairClass::FullCovering => covering_repairs_with_cap(&inst, CoveringMode::Full, &attrs, cap)?,
            };
            let sets: BTreeSet<BTreeSet<String>> = family
                .iter()
                .map(|s| s.iter().map(|t| t.to_string()).collect())
                .collect();
            let mut out = String::new();
            for s in &sets {
                let _ = writeln!(out, "{}", format_set(s));
            }
            Ok(Output::ok(out))
        }
        Command::Verify(args) => verify(args, cap),
        Command::Example { out } => example(&out),
    }
}

fn verify(args: VerifyArgs, cap: EnumCap) -> Result<Output> {
    if let Some(count) = args.random {
        let config = SuiteConfig {
            instance_count: count,
            max_args: args.max_args,
            attack_probability: args.attack_prob,
            self_loop_probability: args.loop_prob,
            seed: args.seed,
            fault: args.inject_fault,
        };
        let summary = run_suite(&config)?;
        let stdout = if args.json { summary.to_json() } else { summary.to_text() };
        return Ok(Output {
            status: if summary.is_success() { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        });
    }
    let input = args.input.expect("clap requires --in or --random");
    let af = read_af(&input, args.format.format)?;
    let reports = match args.semantics {
        Some(sem) => vec![check_correspondence_with_cap(&af, sem, cap)?],
        None => check_all(&af, cap)?,
    };
    let mut out = String::new();
    for r in &reports {
        let status = if r.verdict { "pass" } else { "FAIL" };
        let _ = write!(
            out,
            "{status} {} = {} ({}): {} sets",
            r.semantics,
            r.repair_class,
            r.instance_kind.tag(),
            r.extensions.len()
        );
        if let Some(cx) = &r.counterexample {
            let _ = write!(out, ", counterexample {}", format_set(cx));
        }
        out.push('\n');
    }
    let passed = reports.iter().filter(|r| r.verdict).count();
    let _ = writeln!(out, "{passed}/{} correspondences pass", reports.len());
    Ok(Output {
        status: if passed == reports.len() { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    })
}

fn example(out: &Path) -> Result<Output> {
    let af = samples::example_one();
    let mut files: Vec<(PathBuf, String)> = vec![(out.join("example1.apx"), write_af(&af, AfFormat::Apx))];
    for target in Target::ALL {
        let t = build(&af, target, true)?;
        files.extend(translation_files(&out.join(format!("example1-{target}")), &t));
    }
    let plain = build(&af, Target::Conflict, false)?;
    files.extend(translation_files(&out.join("example1-conflict-uncompressed"), &plain));
    let table = samples::scheduling();
    files.push((out.join("scheduling.csv"), export_table(&table, TableFormat::Csv)));
    files.push((out.join("scheduling.deps.json"), export_dependencies(&table)));
    let mut listing = String::new();
    for (path, text) in &files {
        write_atomic(path, text)?;
        let _ = writeln!(listing, "{}", path.display());
    }
    Ok(Output::ok(listing))
}

fn read_af(path: &Path, format: Option<AfFormat>) -> Result<ArgumentationFramework> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = format.unwrap_or_else(|| AfFormat::from_path(path));
    parse_af(&text, format).with_context(|| format!("parsing {}", path.display()))
}

fn read_table(table: &Path, deps: Option<&Path>) -> Result<Instance> {
    let text = fs::read_to_string(table).with_context(|| format!("reading {}", table.display()))?;
    let is_json = table.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let inst = match (is_json, deps) {
        (true, None) => import_table(&text, TableFormat::Json)?,
        (true, Some(_)) => bail!("a JSON table carries its own dependencies; drop --deps"),
        (false, Some(deps)) => {
            let deps_text = fs::read_to_string(deps).with_context(|| format!("reading {}", deps.display()))?;
            import_table_with_dependencies(&text, &deps_text)?
        }
        (false, None) => import_table(&text, TableFormat::Csv)?,
    };
    Ok(inst)
}

fn translation_files(dir: &Path, t: &Translation) -> Vec<(PathBuf, String)> {
    vec![
        (dir.join(TABLE_FILE), export_table(&t.instance, TableFormat::Csv)),
        (dir.join(DEPENDENCIES_FILE), export_dependencies(&t.instance)),
        (dir.join(MANIFEST_FILE), t.manifest.to_json()),
    ]
}

fn write_translation(dir: &Path, t: &Translation) -> Result<()> {
    for (path, text) in translation_files(dir, t) {
        write_atomic(&path, &text)?;
    }
    Ok(())
}

/// Writes next to the target and renames, so readers never see half a file.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let name = path.file_name().context("output path has no file name")?;
    let mut tmp_name = OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}
