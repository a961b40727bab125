//! `ecc`: Jordan center and distance-to-center layers of undirected graphs.
//!
//! Subcommands: `center` (radius and center labels), `partition` (full
//! layering as JSON or DOT), `gen` (random graph with a target morphology)
//! and `bench` (timing sweep against Floyd-Warshall). Results go to stdout
//! or `--out`; diagnostics go to stderr.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ecc_core::{
    desk_preset, emit_table, export_dot, oracle_partition, partition, run_benchmark, Graph,
    Morphology, ParseWarnings, PartitionReport, TableFormat,
};

#[derive(Parser)]
#[command(name = "ecc", version, about = "Graph center and eccentricity layers")]
struct Cli {
    /// Worker threads for the matrix rounds (default: all cores).
    #[arg(long, global = true, env = "ECC_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the radius and the labels of the center nodes.
    Center {
        /// Edge-list file: one "label1 label2" pair per line, '#' comments.
        file: PathBuf,
    },
    /// Partition all nodes by distance to the center.
    Partition {
        file: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = PartitionFormat::Json)]
        format: PartitionFormat,
        /// Step one matrix power at a time instead of locating the radius by
        /// repeated squaring. Same output, different speed profile.
        #[arg(long)]
        no_doubling: bool,
    },
    /// Generate a random connected graph with a target morphology.
    Gen(GenArgs),
    /// Compare the matrix-power algorithm against Floyd-Warshall over a set
    /// of morphologies and write a comparison table.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartitionFormat {
    Json,
    Dot,
}

#[derive(Args)]
struct GenArgs {
    /// Node count (N).
    #[arg(long)]
    nodes: usize,
    /// Edge count (NA).
    #[arg(long)]
    edges: usize,
    /// Target depth (P): largest distance from any node to the center.
    #[arg(long)]
    depth: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the edge list here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Built-in morphology sweep.
    #[arg(long, conflicts_with = "spec_file")]
    preset: Option<Preset>,
    /// File of morphologies, one "N NA P" triple per line, '#' comments.
    #[arg(long)]
    spec_file: Option<PathBuf>,
    /// Timed repetitions per measurement (after one warm-up).
    #[arg(long, default_value_t = 3)]
    reps: u32,
    /// Random seeds per morphology.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, value_enum, default_value_t = BenchFormat::Markdown)]
    format: BenchFormat,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Desk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchFormat {
    Markdown,
    Csv,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Center { file } => center(&file),
        Command::Partition {
            file,
            format,
            no_doubling,
        } => partition_cmd(&file, format, no_doubling),
        Command::Gen(args) => gen(&args),
        Command::Bench(args) => bench(&args),
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (graph, warnings) =
        Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
    report_warnings(&warnings);
    Ok(graph)
}

fn report_warnings(w: &ParseWarnings) {
    if w.any() {
        eprintln!(
            "warning: normalized input ({} self-loops, {} duplicate edges dropped)",
            w.self_loops_dropped, w.duplicate_edges_dropped
        );
    }
}

fn center(file: &PathBuf) -> Result<()> {
    let g = load_graph(file)?;
    let p = partition(&g, true)?;
    let mut labels: Vec<&str> = p.center().map(|i| g.label(i)).collect();
    labels.sort_unstable();
    println!("radius {}; center: {}", p.radius(), labels.join(" "));
    Ok(())
}

fn partition_cmd(file: &PathBuf, format: PartitionFormat, no_doubling: bool) -> Result<()> {
    let g = load_graph(file)?;
    let p = partition(&g, !no_doubling)?;
    match format {
        PartitionFormat::Json => {
            let report = PartitionReport::new(&g, &p);
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        PartitionFormat::Dot => {
            print!("{}", export_dot(&g, &p)?);
        }
    }
    Ok(())
}

fn gen(args: &GenArgs) -> Result<()> {
    let morphology = Morphology::new(args.nodes, args.edges, args.depth)?;
    let g = morphology.generate(args.seed)?;
    let measured = oracle_partition(&g)?.depth();
    eprintln!(
        "generated N={} NA={} target P={} measured P={measured} seed={}",
        g.node_count(),
        g.edge_count(),
        args.depth,
        args.seed
    );
    write_output(args.out.as_ref(), &g.to_edge_list())
}

fn bench(args: &BenchArgs) -> Result<()> {
    let specs = match (&args.preset, &args.spec_file) {
        (Some(Preset::Desk), None) => desk_preset(),
        (None, Some(path)) => parse_spec_file(path)?,
        (None, None) => bail!("pass either --preset desk or --spec-file <path>"),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    if args.reps == 0 {
        bail!("--reps must be at least 1");
    }
    let records = run_benchmark(&specs, args.seeds, args.reps)?;
    let format = match args.format {
        BenchFormat::Markdown => TableFormat::Markdown,
        BenchFormat::Csv => TableFormat::Csv,
    };
    write_output(args.out.as_ref(), &emit_table(&records, format))
}

fn parse_spec_file(path: &PathBuf) -> Result<Vec<Morphology>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut specs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let parse = |s: &str, what: &str| -> Result<usize> {
            s.parse()
                .with_context(|| format!("{}:{}: bad {what} {s:?}", path.display(), lineno + 1))
        };
        match fields.as_slice() {
            [n, na, p] => specs.push(Morphology::new(
                parse(n, "node count")?,
                parse(na, "edge count")?,
                parse(p, "depth")?,
            )?),
            other => bail!(
                "{}:{}: expected \"N NA P\", found {} fields",
                path.display(),
                lineno + 1,
                other.len()
            ),
        }
    }
    if specs.is_empty() {
        bail!("{}: no morphologies", path.display());
    }
    Ok(specs)
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}
