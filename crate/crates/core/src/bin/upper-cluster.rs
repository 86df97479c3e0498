use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use upper_cluster::cli::{
    cmd_check, cmd_laurent_fuzz, cmd_mutate, cmd_present, cmd_verify, CommandOutput, GeneratorFile, PresentArgs,
    RelationsFile, SeedFile, EXIT_INPUT_ERROR,
};
use upper_cluster::cluster::MutationWord;
use upper_cluster::groebner::MonomialOrder;
use upper_cluster::Result;

#[derive(Parser)]
#[command(name = "upper-cluster", version, about = "Presentations of upper cluster algebras")]
struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Degrevlex,
    Lex,
}

impl From<Order> for MonomialOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Degrevlex => MonomialOrder::DegRevLex,
            Order::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Acyclicity, coprimality, rank and total-coprimality certificate.
    Check { seed: PathBuf },
    /// Search for a presentation, starting from the lower bound or --gens.
    Present {
        seed: PathBuf,
        #[arg(long)]
        gens: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        max_iters: usize,
        /// Candidates adopted per iteration; 0 adopts all.
        #[arg(long, default_value_t = 3)]
        adopt_cap: usize,
        #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
        order: Order,
        #[arg(long)]
        assume_totally_coprime: bool,
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        no_minimize: bool,
    },
    /// Check a claimed presentation.
    Verify {
        seed: PathBuf,
        gens: PathBuf,
        relations: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
        order: Order,
        #[arg(long)]
        assume_totally_coprime: bool,
    },
    /// Mutate along a 1-based word, e.g. "1 2 1" or "1,2,1".
    Mutate { seed: PathBuf, word: String },
    /// Random mutation sequences with Laurent certification.
    LaurentFuzz {
        seed: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
}

fn run(cli: &Cli) -> Result<CommandOutput> {
    match &cli.command {
        Command::Check { seed } => Ok(cmd_check(&SeedFile::load(seed)?.to_seed()?)),
        Command::Present {
            seed,
            gens,
            max_iters,
            adopt_cap,
            order,
            assume_totally_coprime,
            no_prune,
            no_minimize,
        } => {
            let seed = SeedFile::load(seed)?.to_seed()?;
            let gens = gens
                .as_ref()
                .map(|p| GeneratorFile::load(p)?.to_generator_set(&seed))
                .transpose()?;
            let args = PresentArgs {
                max_iters: *max_iters,
                adopt_cap: (*adopt_cap > 0).then_some(*adopt_cap),
                order: (*order).into(),
                assume_totally_coprime: *assume_totally_coprime,
                prune: !no_prune,
                minimize_relations: !no_minimize,
                timings: cli.timings,
            };
            cmd_present(&seed, gens.as_ref(), &args)
        }
        Command::Verify {
            seed,
            gens,
            relations,
            order,
            assume_totally_coprime,
        } => {
            let seed = SeedFile::load(seed)?.to_seed()?;
            let gens = GeneratorFile::load(gens)?.to_generator_set(&seed)?;
            let rels = RelationsFile::load(relations)?;
            cmd_verify(
                &seed,
                &gens,
                &rels.relations,
                &(*order).into(),
                *assume_totally_coprime,
                cli.timings,
            )
        }
        Command::Mutate { seed, word } => {
            let seed = SeedFile::load(seed)?.to_seed()?;
            cmd_mutate(&seed, &MutationWord::parse_one_based(word, seed.m())?)
        }
        Command::LaurentFuzz {
            seed,
            max_len,
            trials,
            rng_seed,
        } => cmd_laurent_fuzz(&SeedFile::load(seed)?.to_seed()?, *max_len, *trials, *rng_seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
