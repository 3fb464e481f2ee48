use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use critshare::latin::Budget;
use critshare::lsss::{AttackStrategy, DealPolicy};

#[derive(Parser, Debug)]
#[command(name = "critshare", version, about = "Latin-square and threshold RSA secret sharing laboratory")]
pub struct Cli {
    /// Solver node budget per completion search, or `unlimited`.
    #[arg(long, global = true, env = "CRITSHARE_BUDGET", value_parser = parse_budget)]
    pub budget: Option<Budget>,

    /// Worker threads for harness runs.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

pub struct Context {
    pub budget: Budget,
    pub threads: usize,
}

impl Cli {
    pub fn context(&self) -> Context {
        Context {
            budget: self.budget.unwrap_or_default(),
            threads: self.threads.max(1),
        }
    }
}

fn parse_budget(s: &str) -> Result<Budget, String> {
    if s == "unlimited" {
        return Ok(Budget::unlimited());
    }
    s.parse::<u64>()
        .map(Budget::nodes)
        .map_err(|_| format!("`{s}` is not a node count or `unlimited`"))
}

pub fn parse_players(s: &str) -> Result<Vec<u32>, String> {
    if s == "none" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.parse::<u32>().map_err(|_| format!("`{p}` is not a player index")))
        .collect()
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Latin squares and completion counting.
    #[command(subcommand)]
    Latin(LatinCommand),
    /// Critical-set checks, search and strength classes.
    #[command(subcommand)]
    Critical(CriticalCommand),
    /// The Latin-square secret sharing scheme.
    #[command(subcommand)]
    Lsss(LsssCommand),
    /// Threshold RSA signatures.
    #[command(subcommand)]
    Rsa(RsaCommand),
    /// Security reports.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
}

#[derive(Args, Debug)]
pub struct Output {
    /// Write the document here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum LatinCommand {
    /// Generate a pseudo-random square.
    Gen {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Count completions of a partial square.
    Count {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also write a count report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CriticalCommand {
    /// Check that a partial square is a critical set.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Search a square for critical sets.
    Find {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        samples: usize,
        #[arg(long, default_value_t = 200_000)]
        subset_budget: u64,
        /// Also write each set found as a partial document in this directory.
        #[arg(long)]
        sets_dir: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Classify a critical set as strong, semi-strong or neither.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

/// A full deal: the public document plus every share.
#[derive(Args, Debug)]
pub struct DealInput {
    #[arg(long)]
    pub deal: PathBuf,
    #[arg(long = "share", required = true, num_args = 1..)]
    pub shares: Vec<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum LsssCommand {
    /// Deal shares of a square over declared critical sets.
    Deal {
        /// Secret square document; otherwise one is generated from --order.
        #[arg(long, conflicts_with = "order")]
        square: Option<PathBuf>,
        #[arg(long, required_unless_present = "square")]
        order: Option<usize>,
        /// Declared critical set (partial document). Repeatable.
        #[arg(long = "set", num_args = 1..)]
        sets: Vec<PathBuf>,
        /// Declare this many greedy critical sets instead of --set.
        #[arg(long, conflicts_with = "sets")]
        auto: Option<usize>,
        /// Defaults to one player per pooled triple.
        #[arg(long)]
        players: Option<usize>,
        #[arg(long, default_value = "one-per-player")]
        policy: DealPolicy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out_dir: PathBuf,
        /// Also write the secret square here.
        #[arg(long)]
        secret_out: Option<PathBuf>,
    },
    /// Pool shares and complete.
    Reconstruct {
        #[arg(long = "share", required = true, num_args = 1..)]
        shares: Vec<PathBuf>,
        /// Write the recovered square here.
        #[arg(long)]
        square_out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Simulate an intruder holding some players' shares.
    Attack {
        #[command(flatten)]
        input: DealInput,
        /// Comma-separated player indices, or `none`.
        #[arg(long, default_value = "none")]
        known: String,
        #[arg(long, default_value = "pick-one-random")]
        strategy: AttackStrategy,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Rank shares by how much they reveal.
    Rank {
        #[command(flatten)]
        input: DealInput,
        #[command(flatten)]
        output: Output,
    },
    /// Reconstruct from every subset and compare with the access structure.
    Audit {
        #[command(flatten)]
        input: DealInput,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Message {
    #[arg(long)]
    pub message: Option<String>,
    #[arg(long)]
    pub message_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KeyInput {
    #[arg(long)]
    pub pubkey: PathBuf,
    #[arg(long)]
    pub vks: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum RsaCommand {
    /// Generate a key, secret shares and verification keys.
    Keygen {
        #[arg(long)]
        players: usize,
        #[arg(long)]
        threshold: usize,
        #[arg(long)]
        corrupted: usize,
        #[arg(long, default_value_t = critshare::rsa::DEFAULT_MODULUS_BITS)]
        bits: u64,
        /// Deterministic seed; system entropy is used when absent.
        #[arg(long, conflicts_with = "entropy")]
        seed: Option<u64>,
        /// Only `system` is recognised.
        #[arg(long, value_parser = ["system"])]
        entropy: Option<String>,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Produce a signature share with its proof.
    SignShare {
        #[command(flatten)]
        keys: KeyInput,
        #[arg(long)]
        share: PathBuf,
        #[command(flatten)]
        message: Message,
        /// Draw the proof nonce from this seed instead of deriving it.
        #[arg(long)]
        nonce_seed: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Check a signature share against its verification key.
    VerifyShare {
        #[command(flatten)]
        keys: KeyInput,
        #[arg(long)]
        sig_share: PathBuf,
        #[command(flatten)]
        message: Message,
    },
    /// Combine verified shares into a signature.
    Combine {
        #[command(flatten)]
        keys: KeyInput,
        #[arg(long = "sig-share", required = true, num_args = 1..)]
        sig_shares: Vec<PathBuf>,
        #[command(flatten)]
        message: Message,
        #[command(flatten)]
        output: Output,
    },
    /// Verify a combined signature.
    Verify {
        #[arg(long)]
        pubkey: PathBuf,
        #[arg(long)]
        signature: PathBuf,
        #[command(flatten)]
        message: Message,
    },
}

#[derive(Args, Debug)]
pub struct LsssSource {
    /// Analyse this deal instead of generating deals.
    #[arg(long, requires = "shares", conflicts_with = "order")]
    pub deal: Option<PathBuf>,
    #[arg(long = "share")]
    pub shares: Vec<PathBuf>,
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    #[arg(long, default_value_t = 2)]
    pub deals: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct RsaMatrix {
    /// Comma-separated player counts.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    pub players: Vec<usize>,
    /// Every threshold for each player count, not just the minimal one.
    #[arg(long)]
    pub all_thresholds: bool,
    #[arg(long, default_value_t = critshare::rsa::TEST_MODULUS_BITS)]
    pub bits: u64,
    #[arg(long, default_value_t = 100)]
    pub tampers: usize,
    #[arg(long, default_value_t = 0)]
    pub rsa_seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum AnalyzeCommand {
    /// Leak curves, strength classes and defector odds.
    Lsss {
        #[command(flatten)]
        source: LsssSource,
        #[command(flatten)]
        output: Output,
    },
    /// Threshold RSA robustness suites over a parameter matrix.
    Rsa {
        #[command(flatten)]
        matrix: RsaMatrix,
        #[command(flatten)]
        output: Output,
    },
    /// Both reports and the flags derived from them.
    Compare {
        #[command(flatten)]
        source: LsssSource,
        #[command(flatten)]
        matrix: RsaMatrix,
        /// Print a human-readable rendering instead of the document.
        #[arg(long)]
        text: bool,
        #[command(flatten)]
        output: Output,
    },
}
