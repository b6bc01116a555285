//! Command-line surface. [`run`] takes the argument list and output
//! streams and returns the process exit code: 0 success or verified, 1 CIST
//! violation, 2 any error or structurally malformed input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Result;
use crate::family::family_stats;
use crate::io::{family_to_json, write_graph, FamilyDocument, GraphFormat, Labels};
use crate::lifting::{construct_cists_with, LiftOptions, DEFAULT_MAX_N};
use crate::routing::{route_stats, PairSample, Router};
use crate::verification::{verify_edge_lists, Mode, VerifyOptions, DEFAULT_BRUTEFORCE_MAX_N};

#[derive(Parser, Debug)]
#[command(
    name = "aqcist",
    version,
    about = "Completely independent spanning trees on augmented cubes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dot,
    Graphml,
    Edgelist,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Characterization,
    Bruteforce,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum LabelsArg {
    #[default]
    Binary,
    Paper,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum ReportArg {
    #[default]
    Text,
    Json,
}

impl From<LabelsArg> for Labels {
    fn from(l: LabelsArg) -> Self {
        match l {
            LabelsArg::Binary => Labels::Binary,
            LabelsArg::Paper => Labels::Paper,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the edge set of AQ_n.
    Generate {
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        /// Output path, `-` for stdout.
        #[arg(long, default_value = "-")]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "binary")]
        labels: LabelsArg,
    },
    /// Build a CIST family on AQ_n and write it as JSON.
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "-")]
        output: PathBuf,
        /// Raise the materialization cap (default 14).
        #[arg(long)]
        max_n_override: Option<u8>,
    },
    /// Check that a family file holds completely independent spanning trees.
    Verify {
        file: PathBuf,
        /// Defaults to `both` when brute force is allowed for the file's n.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportArg,
        /// Raise the brute-force cap (default 6).
        #[arg(long)]
        max_n_override: Option<u8>,
    },
    /// Print one route per tree between two vertices.
    Route {
        file: PathBuf,
        src: String,
        dst: String,
        #[arg(long, value_enum, default_value = "binary")]
        labels: LabelsArg,
    },
    /// Per-tree statistics for a family file.
    Stats {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "binary")]
        labels: LabelsArg,
        /// Also sample this many random vertex pairs for route lengths.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn write_target(path: &Path, bytes: &[u8], out: &mut dyn Write) -> Result<()> {
    if path.as_os_str() == "-" {
        out.write_all(bytes)?;
    } else {
        fs::write(path, bytes)?;
    }
    Ok(())
}

fn load(path: &Path) -> Result<FamilyDocument> {
    let text = fs::read_to_string(path)?;
    FamilyDocument::parse(&text)
}

pub fn cmd_generate(
    n: u8,
    format: GraphFormat,
    labels: Labels,
    output: &Path,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut buf = Vec::new();
    write_graph(n, format, labels, &mut buf)?;
    write_target(output, &buf, out)?;
    Ok(0)
}

pub fn cmd_construct(
    n: u32,
    max_n: Option<u8>,
    output: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let opts = LiftOptions {
        max_n: max_n.unwrap_or(DEFAULT_MAX_N),
        ..LiftOptions::default()
    };
    let family = construct_cists_with(n, opts)?;
    let json = family_to_json(&family);
    write_target(output, json.as_bytes(), out)?;
    let diameters: Vec<String> = family.diameters().iter().map(u32::to_string).collect();
    let line = format!(
        "AQ_{n}: {} trees ({}), diameters {}",
        family.k(),
        family.provenance(),
        diameters.join(" ")
    );
    // keep stdout clean when it carries the JSON
    if output.as_os_str() == "-" {
        writeln!(err, "{line}")?;
    } else {
        writeln!(out, "{line}")?;
    }
    Ok(0)
}

pub fn cmd_verify(
    file: &Path,
    mode: Option<Mode>,
    json: bool,
    bruteforce_cap: Option<u8>,
    out: &mut dyn Write,
) -> Result<i32> {
    let doc = load(file)?;
    let opts = VerifyOptions {
        bruteforce_max_n: bruteforce_cap.unwrap_or(DEFAULT_BRUTEFORCE_MAX_N),
    };
    let mode = mode.unwrap_or(Mode::default_for(doc.n, opts.bruteforce_max_n));
    let report = verify_edge_lists(doc.n, &doc.edge_lists(), mode, opts)?;
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(report.exit_code())
}

pub fn cmd_route(
    file: &Path,
    src: &str,
    dst: &str,
    labels: Labels,
    out: &mut dyn Write,
) -> Result<i32> {
    let family = load(file)?.to_family()?;
    let u = labels.parse(src, family.n())?;
    let v = labels.parse(dst, family.n())?;
    let router = Router::new(&family)?;
    for (i, path) in router.routes(u, v)?.iter().enumerate() {
        let hops: Vec<String> = path.vertices.iter().map(|&x| labels.render(x)).collect();
        writeln!(
            out,
            "tree {} (length {}): {}",
            i + 1,
            path.len(),
            hops.join(" -> ")
        )?;
    }
    Ok(0)
}

pub fn cmd_stats(
    file: &Path,
    labels: Labels,
    sample: Option<usize>,
    seed: u64,
    out: &mut dyn Write,
) -> Result<i32> {
    let doc = load(file)?;
    let family = doc.to_family()?;
    let stats = family_stats(&family);
    writeln!(
        out,
        "AQ_{}: {} trees, provenance {}",
        stats.n,
        family.k(),
        family.provenance()
    )?;
    writeln!(out, "tree  edges  diameter  radius  center  internal")?;
    for t in &stats.trees {
        writeln!(
            out,
            "{:<5} {:<6} {:<9} {:<7} {:<7} {}",
            t.id,
            t.edge_count,
            t.diameter,
            t.radius,
            labels.render(t.center),
            t.internal_count
        )?;
    }
    writeln!(out, "edge-disjoint: {}", stats.edge_disjoint)?;
    writeln!(out, "internal-disjoint: {}", stats.internal_disjoint)?;
    if let Some(count) = sample {
        let rs = route_stats(&family, &PairSample::Random { count, seed })?;
        writeln!(out, "routes over {} random pairs (seed {seed}):", rs.pairs)?;
        for (i, (m, mean)) in rs.max_len.iter().zip(&rs.mean_len).enumerate() {
            writeln!(out, "  tree {}: max {m}, mean {mean:.3}", i + 1)?;
        }
    }
    Ok(0)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Generate {
            n,
            format,
            output,
            labels,
        } => {
            let format = match format {
                FormatArg::Dot => GraphFormat::Dot,
                FormatArg::Graphml => GraphFormat::Graphml,
                FormatArg::Edgelist => GraphFormat::Edgelist,
                FormatArg::Json => GraphFormat::Json,
            };
            cmd_generate(n, format, labels.into(), &output, out)
        }
        Command::Construct {
            n,
            output,
            max_n_override,
        } => cmd_construct(n, max_n_override, &output, out, err),
        Command::Verify {
            file,
            mode,
            report,
            max_n_override,
        } => {
            let mode = mode.map(|m| match m {
                ModeArg::Characterization => Mode::Characterization,
                ModeArg::Bruteforce => Mode::BruteForce,
                ModeArg::Both => Mode::Both,
            });
            cmd_verify(&file, mode, report == ReportArg::Json, max_n_override, out)
        }
        Command::Route {
            file,
            src,
            dst,
            labels,
        } => cmd_route(&file, &src, &dst, labels.into(), out),
        Command::Stats {
            file,
            labels,
            sample,
            seed,
        } => cmd_stats(&file, labels.into(), sample, seed, out),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
