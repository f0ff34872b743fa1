//! Command-line front end: build, verify, check, search, invariants, export.
//!
//! Exit status: 0 success, 1 a verification failed, 2 usage error,
//! 3 input could not be read or parsed, 4 internal error (invalid distance
//! or a graph that is not regular).

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use srg2048::coclique::{
    check_set, external_profile, pair_invariant, search_maximal, SearchConfig, DEFAULT_SEED,
};
use srg2048::coset_graph::{verify_srg, CosetGraph, RepClass, TARGET};
use srg2048::golay::{CodeError, GolayCode, WEIGHT_DISTRIBUTION};
use srg2048::io::{read_dat, write_dat, write_edge_list, write_gap, Endian};
use srg2048::VertexSet;

#[derive(Parser)]
#[command(version, about = "The srg(2048, 276, 44, 36) Golay coset graph")]
struct Cli {
    /// Generator matrix: 12 rows of 24 characters '0'/'1', leftmost
    /// character the highest bit. Blank lines and lines starting with '#'
    /// are skipped. Defaults to the built-in matrix.
    #[arg(long, global = true, value_name = "FILE")]
    generators: Option<PathBuf>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Read and write DAT entries high byte first.
    #[arg(long, global = true)]
    big_endian: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph and print construction statistics.
    Build {
        /// Write the edge list, one 1-based "u v" line per edge.
        #[arg(long, value_name = "PATH")]
        edges: Option<PathBuf>,
    },
    /// Check the code census, representatives, SRG parameters and ratio bound.
    Verify,
    /// Check every set in a DAT file.
    Check { dat: PathBuf },
    /// Search for maximal cocliques and write them to a DAT file.
    Search(SearchArgs),
    /// Print the external profile and pair invariant of every set.
    Invariants { dat: PathBuf },
    /// Write adjacency lists and optional sets as a GAP file.
    Export {
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Sets to append as the MIS list.
        #[arg(long, value_name = "DAT")]
        dat: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 20)]
    min: usize,
    #[arg(long, default_value_t = 40)]
    max: usize,
    /// Greedy constructions across all streams.
    #[arg(long, default_value_t = 20_000)]
    budget: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// RNG streams; the result depends on this, not on --workers.
    #[arg(long, default_value_t = 1)]
    streams: usize,
    /// Skip the orbit phase.
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
}

enum Failure {
    Verification(String),
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let endian = if cli.big_endian {
        Endian::Big
    } else {
        Endian::Little
    };
    let code = load_code(cli.generators.as_deref())?;
    let cg = CosetGraph::build(code, cli.workers).map_err(|e| Failure::Internal(e.to_string()))?;
    let mut out = BufWriter::new(io::stdout().lock());
    let result = match &cli.command {
        Command::Build { edges } => build(&cg, edges.as_deref(), &mut out),
        Command::Verify => verify(&cg, cli.workers, &mut out),
        Command::Check { dat } => check(&cg, &load_sets(&cg, dat, endian)?, &mut out),
        Command::Search(args) => search(&cg, args, endian, &mut out),
        Command::Invariants { dat } => invariants(&cg, &load_sets(&cg, dat, endian)?, &mut out),
        Command::Export { out: path, dat } => {
            let sets = match dat {
                Some(d) => load_sets(&cg, d, endian)?,
                None => Vec::new(),
            };
            export(&cg, &sets, path, &mut out)
        }
    };
    out.flush().map_err(io_failure)?;
    result
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn load_code(path: Option<&Path>) -> Result<GolayCode, Failure> {
    let Some(path) = path else {
        return Ok(GolayCode::standard());
    };
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    GolayCode::from_generator_text(&text).map_err(|e| match e {
        CodeError::WeightDistribution { .. } => Failure::Verification(e.to_string()),
        _ => Failure::Input(format!("{}: {e}", path.display())),
    })
}

fn load_sets(cg: &CosetGraph, path: &Path, endian: Endian) -> Result<Vec<VertexSet>, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    read_dat(&bytes, &cg.reps, endian)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn distribution(code: &GolayCode) -> String {
    let parts: Vec<String> = code
        .weight_distribution()
        .iter()
        .map(|(w, n)| format!("{w}:{n}"))
        .collect();
    parts.join(" ")
}

fn build(cg: &CosetGraph, edges: Option<&Path>, out: &mut impl Write) -> Outcome {
    let s = cg.stats;
    let w = |r: io::Result<()>| r.map_err(io_failure);
    w(writeln!(
        out,
        "code: {} words, weight distribution {}",
        cg.code.codewords().len(),
        distribution(&cg.code)
    ))?;
    w(writeln!(out, "vertices: {}", cg.graph.vertex_count()))?;
    w(writeln!(out, "edges: {}", cg.graph.edge_count()))?;
    w(writeln!(out, "pairs: {}", s.pairs))?;
    w(writeln!(out, "difference weight 2: {}", s.weight2))?;
    w(writeln!(out, "difference weight 4: {}", s.weight4))?;
    w(writeln!(
        out,
        "difference weight 6: {} (distance 2: {}, distance 4: {})",
        s.scanned(),
        s.scanned_distance2,
        s.scanned_distance4
    ))?;
    w(writeln!(out, "invalid distance: 0"))?;
    if let Some(path) = edges {
        let file = fs::File::create(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let mut file = BufWriter::new(file);
        w(write_edge_list(&mut file, &cg.graph).and_then(|()| file.flush()))?;
        w(writeln!(out, "edge list: {}", path.display()))?;
    }
    Ok(())
}

fn verify(cg: &CosetGraph, workers: usize, out: &mut impl Write) -> Outcome {
    let w = |r: io::Result<()>| r.map_err(io_failure);
    let words = cg.code.codewords().len();
    let census_ok = words == 4096
        && WEIGHT_DISTRIBUTION
            .iter()
            .all(|&(wt, n)| cg.code.weight_distribution().get(&wt) == Some(&n));
    w(writeln!(
        out,
        "code: {words} words, weight distribution {} {}",
        distribution(&cg.code),
        ok(census_ok)
    ))?;
    if !census_ok {
        return Err(Failure::Verification("code census".into()));
    }

    let counts = cg.reps.class_counts();
    let class = |c| counts.get(&c).copied().unwrap_or(0);
    let (z, p, q) = (
        class(RepClass::Zero),
        class(RepClass::Weight2),
        class(RepClass::Weight4Last1),
    );
    let reps_ok = cg.reps.len() == 2048 && (z, p, q) == (1, 276, 1771);
    w(writeln!(
        out,
        "representatives: {} ({z} + {p} + {q}) {}",
        cg.reps.len(),
        ok(reps_ok)
    ))?;
    if !reps_ok {
        return Err(Failure::Verification("representative census".into()));
    }

    w(writeln!(out, "edges: {}", cg.graph.edge_count()))?;
    let params = match verify_srg(&cg.graph, workers) {
        Ok(p) => p,
        Err(e) => {
            w(writeln!(out, "srg: FAIL"))?;
            return Err(Failure::Verification(format!("srg: {e}")));
        }
    };
    let srg_ok = params == TARGET;
    w(writeln!(out, "srg: {params} {}", ok(srg_ok)))?;
    if !srg_ok {
        return Err(Failure::Verification(format!(
            "srg: expected {TARGET}, got {params}"
        )));
    }

    match params.integral_eigenvalues() {
        Some((r, s)) => w(writeln!(out, "eigenvalues: {r} {s}"))?,
        None => {
            let (r, s) = params.eigenvalues();
            w(writeln!(out, "eigenvalues: {r} {s}"))?
        }
    }
    let bound = params.delsarte_bound();
    let bound_ok = bound == 85;
    w(writeln!(out, "delsarte bound: {bound} {}", ok(bound_ok)))?;
    if !bound_ok {
        return Err(Failure::Verification(format!(
            "delsarte bound: expected 85, got {bound}"
        )));
    }
    Ok(())
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check(cg: &CosetGraph, sets: &[VertexSet], out: &mut impl Write) -> Outcome {
    let w = |r: io::Result<()>| r.map_err(io_failure);
    let mut bad = 0;
    for (i, s) in sets.iter().enumerate() {
        let r = check_set(&cg.graph, s, 72);
        match r.edge {
            Some((u, v)) => {
                bad += 1;
                w(writeln!(
                    out,
                    "set {}: size {}, not a coclique (vertices {u} and {v} are adjacent)",
                    i + 1,
                    r.size
                ))?;
            }
            None => {
                bad += usize::from(!r.maximal);
                let mut line = format!(
                    "set {}: size {}, coclique yes, maximal {}, profile {}",
                    i + 1,
                    r.size,
                    yes(r.maximal),
                    r.profile
                );
                if let Some(p) = r.pair_invariant {
                    line.push_str(&format!(", pair invariant {p}"));
                }
                w(writeln!(out, "{line}"))?;
            }
        }
    }
    w(writeln!(
        out,
        "sets: {}, maximal cocliques: {}",
        sets.len(),
        sets.len() - bad
    ))?;
    if bad > 0 {
        return Err(Failure::Verification(format!(
            "{bad} set(s) are not maximal cocliques"
        )));
    }
    Ok(())
}

fn invariants(cg: &CosetGraph, sets: &[VertexSet], out: &mut impl Write) -> Outcome {
    let w = |r: io::Result<()>| r.map_err(io_failure);
    let mut bad = 0;
    for (i, s) in sets.iter().enumerate() {
        if !srg2048::coclique::is_coclique(&cg.graph, s) {
            bad += 1;
            w(writeln!(
                out,
                "set {}: size {}, not a coclique",
                i + 1,
                s.len()
            ))?;
            continue;
        }
        let p = external_profile(&cg.graph, s);
        w(writeln!(
            out,
            "set {}: size {}, profile {}, pair invariant {}",
            i + 1,
            s.len(),
            p,
            pair_invariant(&cg.graph, s)
        ))?;
    }
    if bad > 0 {
        return Err(Failure::Verification(format!(
            "{bad} set(s) are not cocliques"
        )));
    }
    Ok(())
}

fn search(cg: &CosetGraph, args: &SearchArgs, endian: Endian, out: &mut impl Write) -> Outcome {
    let w = |r: io::Result<()>| r.map_err(io_failure);
    let config = SearchConfig {
        sizes: args.min..=args.max,
        budget: args.budget,
        seed: args.seed,
        workers: args.streams,
        symmetries: if args.no_symmetry {
            Vec::new()
        } else {
            cg.residue_symmetries()
        },
        ..SearchConfig::default()
    };
    let found = search_maximal(&cg.graph, &config);
    let mut sets = found.sets.clone();
    if let Some(l) = &found.largest {
        if !config.sizes.contains(&l.len()) && l.len() >= 2 {
            sets.push(l.clone());
        }
    }
    let bytes = write_dat(&sets, &cg.reps, endian).map_err(|e| Failure::Internal(e.to_string()))?;
    fs::write(&args.out, bytes)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.out.display())))?;

    w(writeln!(out, "seed: {}", config.seed))?;
    w(writeln!(out, "constructed: {}", found.constructed))?;
    for s in &sets {
        w(writeln!(out, "size {}: found", s.len()))?;
    }
    let missing = found.missing(config.sizes.clone());
    let listed: Vec<String> = missing.iter().map(usize::to_string).collect();
    w(writeln!(
        out,
        "missing: {}",
        if listed.is_empty() {
            "none".to_string()
        } else {
            listed.join(" ")
        }
    ))?;
    w(writeln!(
        out,
        "written: {} sets to {}",
        sets.len(),
        args.out.display()
    ))?;
    Ok(())
}

fn export(cg: &CosetGraph, sets: &[VertexSet], path: &Path, out: &mut impl Write) -> Outcome {
    let file =
        fs::File::create(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut file = BufWriter::new(file);
    write_gap(&mut file, &cg.graph, sets)
        .and_then(|()| file.flush())
        .map_err(io_failure)?;
    writeln!(
        out,
        "gap: {} vertices, {} sets written to {}",
        cg.graph.vertex_count(),
        sets.len(),
        path.display()
    )
    .map_err(io_failure)
}
