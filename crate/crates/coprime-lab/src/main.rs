//! Thin command-line front end over the library: construct labelings, verify
//! labeling files, run the exhaustive searches, and cross-check OEIS data.
//!
//! Exit codes are stable for scripting: 0 success/valid, 1 invalid labeling
//! or data mismatch, 2 precondition violation, 3 budget exceeded, 4 I/O or
//! parse error. Results go to stdout, diagnostics to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use coprime_lab::bipartite::{self, BipartiteError, PartiteLabeling, SearchBudget};
use coprime_lab::format::{self, LabelingFile};
use coprime_lab::graphs::{self, Graph, Labeling};
use coprime_lab::ladders::{self, ColumnSumScreen};
use coprime_lab::numtheory::{PrimeSieve, DEFAULT_SIEVE_LIMIT};
use coprime_lab::oeis::{self, SequenceId};

#[derive(Parser)]
#[command(
    name = "coprime-lab",
    version,
    about = "Coprime and prime labelings of ladders and complete bipartite graphs"
)]
struct Cli {
    /// Sieve size backing primality data.
    #[arg(long, global = true, env = "COPRIME_LAB_SIEVE_LIMIT", default_value_t = DEFAULT_SIEVE_LIMIT)]
    sieve_limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labeling from one of the closed-form constructions.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check a labeling file; exit 0 exactly when it is a valid coprime labeling.
    Verify {
        /// JSON labeling file.
        file: PathBuf,
    },
    /// Run one of the exhaustive searches.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Build the popop label sets for a prime set and check them against K_{n,n}.
    Popop {
        /// Comma-separated primes, e.g. 2,7,11,13.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long)]
        n: usize,
        /// Reference pr(K_{n,n}) value to compare the largest label against.
        #[arg(long)]
        known_pr: Option<u64>,
    },
    /// Recompute an OEIS sequence locally and compare against reference data.
    Oeis {
        /// A213273, A213806, or A104272.
        sequence: String,
        #[arg(long)]
        max_index: u64,
        /// b-file overriding the built-in reference table.
        #[arg(long)]
        bfile: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Sequential rows; needs n+1 prime.
    Theorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Consecutive cyclic winding from the top-left corner; needs 2n+1 prime.
    Ccpl {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Consecutive cyclic winding for a prime pair; needs p prime, p < 2n+1, 2n+p prime.
    Theorem6 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Prime labeling of K_{m,n} from the prime-interval criterion; needs m < n.
    Kmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// Exact minimal coprime bound pr(K_{n,n}).
    Pr {
        #[arg(long)]
        n: usize,
        /// Enumerate every minimal labeling instead of one witness.
        #[arg(long)]
        count_all: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Number of minimal coprime labelings of K_{n,n}.
    Count {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// All top-row placements of 1 giving a consecutive cyclic prime labeling.
    Ccpl {
        #[arg(long)]
        n: usize,
    },
    /// Smallest p (1 or a prime below 2n+1) with 2n+p prime, plus its labeling.
    Witness {
        #[arg(long)]
        n: usize,
        /// Largest p to try; defaults to 2n.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// All n below the Ramanujan threshold for which K_{m,n} is still prime.
    Exceptions {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Abort the search after this many nodes.
    #[arg(long, default_value_t = 1_000_000_000)]
    max_nodes: u64,
    /// Abort the search after this many seconds.
    #[arg(long)]
    time_limit_secs: Option<u64>,
}

impl BudgetArgs {
    fn to_budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.max_nodes,
            time_limit: self.time_limit_secs.map(Duration::from_secs),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

/// Failure paired with the exit code it maps to.
enum AppError {
    Invalid,
    Precondition(String),
    Budget(String),
    Io(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Invalid => 1,
            AppError::Precondition(_) => 2,
            AppError::Budget(_) => 3,
            AppError::Io(_) => 4,
        }
    }

    fn message(&self) -> Option<&str> {
        match self {
            AppError::Invalid => None,
            AppError::Precondition(m) | AppError::Budget(m) | AppError::Io(m) => Some(m),
        }
    }
}

fn from_bipartite(e: BipartiteError) -> AppError {
    match e {
        BipartiteError::BudgetExceeded { .. } => AppError::Budget(e.to_string()),
        _ => AppError::Precondition(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Construct { kind } => construct(kind, cli.sieve_limit),
        Command::Verify { file } => verify(&file),
        Command::Search { target } => search(target, cli.sieve_limit),
        Command::Popop {
            primes,
            n,
            known_pr,
        } => popop(&primes, n, known_pr),
        Command::Oeis {
            sequence,
            max_index,
            bfile,
            budget,
        } => compare_oeis(
            &sequence,
            max_index,
            bfile,
            cli.sieve_limit,
            &budget.to_budget(),
        ),
    }
}

fn sieve(limit: u64) -> Result<PrimeSieve, AppError> {
    PrimeSieve::new(limit).map_err(|e| AppError::Precondition(e.to_string()))
}

fn emit(graph: &Graph, labeling: &Labeling, format: Format) {
    match format {
        Format::Json => println!("{}", LabelingFile::from_parts(graph, labeling).to_json()),
        Format::Dot => print!("{}", format::to_dot(graph, labeling)),
        Format::Csv => print!("{}", format::to_csv(graph, labeling)),
        Format::Text => {
            // Same row layout as CSV, space-separated for reading.
            print!("{}", format::to_csv(graph, labeling).replace(',', " "));
        }
    }
}

fn construct(kind: ConstructKind, sieve_limit: u64) -> Result<(), AppError> {
    let (graph, labeling, format) = match kind {
        ConstructKind::Theorem1 { n, format } => {
            let l = ladders::sequential_labeling(n)
                .map_err(|e| AppError::Precondition(e.to_string()))?;
            let (g, lab) = l.to_graph_labeling();
            (g, lab, format)
        }
        ConstructKind::Ccpl { n, format } => {
            let l = ladders::cyclic_origin_labeling(n)
                .map_err(|e| AppError::Precondition(e.to_string()))?;
            let (g, lab) = l.to_graph_labeling();
            (g, lab, format)
        }
        ConstructKind::Theorem6 { n, p, format } => {
            let l = ladders::cyclic_prime_pair_labeling(n, p)
                .map_err(|e| AppError::Precondition(e.to_string()))?;
            let (g, lab) = l.to_graph_labeling();
            (g, lab, format)
        }
        ConstructKind::Kmn { m, n, format } => {
            let s = sieve(sieve_limit)?;
            let l = bipartite::kmn_construct(&s, m, n).map_err(from_bipartite)?;
            let (g, lab) = l.to_graph_labeling(Some((m + n) as u64));
            (g, lab, format)
        }
    };
    emit(&graph, &labeling, format);
    Ok(())
}

fn verify(file: &PathBuf) -> Result<(), AppError> {
    let text =
        fs::read_to_string(file).map_err(|e| AppError::Io(format!("{}: {e}", file.display())))?;
    let parsed = LabelingFile::from_json(&text).map_err(|e| AppError::Io(e.to_string()))?;
    let (graph, labeling) = parsed.to_parts().map_err(|e| AppError::Io(e.to_string()))?;
    let violations = graphs::verify(&graph, &labeling).map_err(|e| AppError::Io(e.to_string()))?;
    if violations.is_empty() {
        println!("valid");
        Ok(())
    } else {
        println!("invalid");
        for v in &violations {
            println!("violation: {v}");
        }
        Err(AppError::Invalid)
    }
}

fn print_partition(l: &PartiteLabeling) {
    let row = |s: &[u64]| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("A: {}", row(l.a_side()));
    println!("B: {}", row(l.b_side()));
}

fn search(target: SearchTarget, sieve_limit: u64) -> Result<(), AppError> {
    let started = Instant::now();
    match target {
        SearchTarget::Pr {
            n,
            count_all,
            budget,
        } => {
            let report =
                bipartite::pr_search(n, count_all, &budget.to_budget()).map_err(from_bipartite)?;
            println!("pr(K_{{{n},{n}}}) = {}", report.pr_value);
            if count_all {
                println!("minimal labelings: {}", report.labelings.len());
            }
            for l in &report.labelings {
                print_partition(l);
            }
            eprintln!(
                "nodes: {}, elapsed: {:.3}s",
                report.nodes_explored,
                started.elapsed().as_secs_f64()
            );
        }
        SearchTarget::Count { n, budget } => {
            let report =
                bipartite::pr_search(n, true, &budget.to_budget()).map_err(from_bipartite)?;
            println!(
                "minimal coprime labelings of K_{{{n},{n}}} at k = {}: {}",
                report.pr_value,
                report.labelings.len()
            );
            eprintln!(
                "nodes: {}, elapsed: {:.3}s",
                report.nodes_explored,
                started.elapsed().as_secs_f64()
            );
        }
        SearchTarget::Ccpl { n } => {
            if n == 0 {
                return Err(AppError::Precondition(
                    "ladder size must be at least 1".into(),
                ));
            }
            let placements = ladders::find_all_cyclic_prime_labelings(n);
            let positions: Vec<String> = placements
                .iter()
                .map(|p| p.one_position().to_string())
                .collect();
            println!("positions: {}", positions.join(" "));
            for p in &placements {
                let screen = match ladders::screen_column_sums(p) {
                    ColumnSumScreen::Candidate => "candidate",
                    ColumnSumScreen::RejectComposite { .. } => "reject",
                };
                println!(
                    "position {}: k_below = {}, screen = {screen}",
                    p.one_position(),
                    p.k_below()
                );
            }
            eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
        }
        SearchTarget::Witness { n, limit } => {
            let limit = limit.unwrap_or(2 * n as u64);
            let w = ladders::prime_pair_witness(n, limit)
                .map_err(|e| AppError::Precondition(e.to_string()))?;
            println!("p = {} (2n+p = {})", w.p, 2 * n as u64 + w.p);
            println!("{}", w.labeling);
            eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
        }
        SearchTarget::Exceptions { m } => {
            let s = sieve(sieve_limit)?;
            let threshold = bipartite::kmn_threshold(&s, m).map_err(from_bipartite)?;
            let values = bipartite::kmn_exception_scan(&s, m).map_err(from_bipartite)?;
            let list: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            println!(
                "exceptional n: {}",
                if list.is_empty() {
                    "(none)".into()
                } else {
                    list.join(" ")
                }
            );
            println!("prime for all n >= {threshold}");
            eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
        }
    }
    Ok(())
}

fn popop(primes: &[u64], n: usize, known_pr: Option<u64>) -> Result<(), AppError> {
    if primes.is_empty() || n == 0 {
        return Err(AppError::Precondition(
            "need at least one prime and n >= 1".into(),
        ));
    }
    for &p in primes {
        if !coprime_lab::numtheory::is_prime(p) {
            return Err(AppError::Precondition(format!("{p} is not prime")));
        }
    }
    let report = bipartite::popop_partition(primes, n, known_pr);
    let row = |s: &[u64]| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("A: {}", row(&report.a_side));
    println!("B: {}", row(&report.b_side));
    println!("max label: {}", report.max_label);
    println!("coprime valid: {}", report.coprime_valid);
    if let Some(achieves) = report.achieves_pr {
        println!("achieves pr: {achieves}");
    }
    Ok(())
}

fn compare_oeis(
    sequence: &str,
    max_index: u64,
    bfile: Option<PathBuf>,
    sieve_limit: u64,
    budget: &SearchBudget,
) -> Result<(), AppError> {
    let id: SequenceId = sequence
        .parse()
        .map_err(|e: oeis::UnknownSequence| AppError::Precondition(e.to_string()))?;
    let expected = match bfile {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| AppError::Io(format!("{}: {e}", path.display())))?;
            Some(format::parse_bfile(&text).map_err(|e| AppError::Io(e.to_string()))?)
        }
        None => None,
    };
    let cmp = oeis::compare(id, max_index, expected, sieve_limit, budget).map_err(|e| match e {
        oeis::OeisError::Search(inner) => from_bipartite(inner),
        oeis::OeisError::Num(inner) => AppError::Precondition(inner.to_string()),
    })?;
    for &(index, value) in &cmp.computed {
        println!("{index} {value}");
    }
    if cmp.agree() {
        eprintln!("{}: all compared values agree", cmp.sequence_id);
        Ok(())
    } else {
        for m in &cmp.mismatches {
            eprintln!(
                "{} mismatch at index {}: expected {}, computed {}",
                cmp.sequence_id, m.index, m.expected, m.computed
            );
        }
        Err(AppError::Invalid)
    }
}
