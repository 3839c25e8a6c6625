//! The `itk` command line.
//!
//! Every command produces a [`Report`]. Errors print a JSON object with a
//! stable `code` to stderr and map to exit status 2 (input), 3
//! (precondition) or 4 (internal limit).

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::aitk::{
    toy::{default_max_bits, toy_shortest_with_workers, DIRECT_RUN_CAP},
    ComplexityEstimate, Estimator, Registry, ToyEstimator, ToyProgram, Witness, DEFAULT_SLACK_BITS,
};
use crate::bits::BitString;
use crate::corpus::{generate_corpus, CorpusKind, CorpusSpec};
use crate::error::{Error, Result};
use crate::integration::{
    avalanche_profile, builtin_encoder, edit_integration, integrating_violation_witness,
    NeighborhoodKind, NeighborhoodSpec, DEFAULT_KEY, DEFAULT_ROUNDS,
};
use crate::pid::{
    self, format as pid_format, lossless_check, mutual_information, pid_decompose,
    synergy_minus_redundancy, InputDistribution, JointDistribution, TruthTable, VarSet,
};
use crate::report::{to_value, Format, Report};
use crate::synergy::{c_slices_lossless, default_header_bits, s0_bounds, theorem2_demo};

#[derive(Debug, Parser)]
#[command(name = "itk", version, about = "Integrated-information toolkit")]
pub struct Cli {
    /// Output format: json, csv or table.
    #[arg(long, global = true, default_value = "json")]
    pub format: Format,
    /// Slack in bits for identities that hold up to a constant.
    #[arg(long, global = true, default_value_t = DEFAULT_SLACK_BITS)]
    pub slack: f64,
    /// Seed for generated data.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Read bit-string operands as 0/1 literals instead of file paths.
    #[arg(long, global = true)]
    pub bits: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partial information decomposition of a two-input channel.
    Pid(PidArgs),
    /// Complexity estimate of a bit string, optionally conditional.
    Complexity(ComplexityArgs),
    /// Synergy of the concatenation map.
    Synergy {
        #[command(subcommand)]
        command: SynergyCommand,
    },
    /// Edit-distance integration of an encoder at one input.
    Integrate(IntegrateArgs),
    /// Decoded damage from single-bit flips of an encoded stream.
    Avalanche(AvalancheArgs),
    /// Run or search programs on the toy machine.
    Vm {
        #[command(subcommand)]
        command: VmCommand,
    },
}

#[derive(Debug, Args)]
pub struct PidArgs {
    /// Distribution file of {x1, x2, y, p} records.
    #[arg(long, conflicts_with = "table", required_unless_present = "table")]
    pub dist: Option<PathBuf>,
    /// Built-in table name (xor, and, or, copy, concat) or truth-table file.
    #[arg(long)]
    pub table: Option<String>,
    /// Input distribution file for --table.
    #[arg(long, requires = "table")]
    pub input_dist: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComplexityArgs {
    #[arg(long, default_value = "toy")]
    pub backend: String,
    /// Advice operand.
    #[arg(long)]
    pub cond: Option<String>,
    /// Toy search depth in bits.
    #[arg(long)]
    pub max_bits: Option<usize>,
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum SynergyCommand {
    /// Estimator-side S - R of the pairing map against -I(x1:x2).
    Slices {
        #[arg(long, default_value = "lzss")]
        backend: String,
        x1: String,
        x2: String,
    },
    /// Interval estimate of S0 for z = x·y.
    S0 {
        #[arg(long, default_value = "toy")]
        backend: String,
        #[arg(long)]
        header_bits: Option<usize>,
        x: String,
        y: String,
    },
    /// Dual-advice construction on seeded normalized halves.
    Demo {
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Attach S0 bounds from this backend.
        #[arg(long)]
        backend: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    /// identity, reverse, xor_mask, feistel_mix or lzss_codec.
    #[arg(long, default_value = "identity")]
    pub encoder: String,
    /// Complexity backend: toy or lzss.
    #[arg(long, default_value = "toy")]
    pub estimator: String,
    /// Use the encoder-aware describer for the conditional term.
    #[arg(long)]
    pub aware: bool,
    /// flips or flips+del.
    #[arg(long, default_value = "flips")]
    pub neighborhood: String,
    /// Key for xor_mask and feistel_mix.
    #[arg(long, default_value_t = DEFAULT_KEY)]
    pub key: u64,
    /// Feistel rounds.
    #[arg(long, default_value_t = DEFAULT_ROUNDS)]
    pub rounds: usize,
    /// Bit-string file, or a 0/1 literal with --bits.
    pub input: String,
    /// Also test the integrating inequality at every neighbor.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Debug, Args)]
pub struct AvalancheArgs {
    #[arg(long, default_value = "lzss_codec")]
    pub codec: String,
    /// Generate a seeded corpus instead of reading input: compressible or
    /// incompressible.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub corpus: Option<CorpusKind>,
    #[arg(long, default_value_t = 10_240)]
    pub size: usize,
    /// Include the corruption of every flipped position.
    #[arg(long)]
    pub per_position: bool,
    pub input: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum VmCommand {
    /// Execute a program.
    Run {
        #[arg(long)]
        program: String,
        #[arg(long, default_value = "")]
        advice: String,
    },
    /// Shortest program printing the target.
    Shortest {
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "")]
        advice: String,
        #[arg(long)]
        max_bits: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

/// Reads a bit-string operand: a 0/1 literal with `--bits`, otherwise a
/// file whose bytes are taken most-significant bit first.
fn operand(arg: &str, literal: bool) -> Result<BitString> {
    if literal {
        BitString::parse_literal(arg)
    } else {
        read_file(Path::new(arg)).map(|bytes| BitString::from_bytes(&bytes))
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn estimate_value(e: &ComplexityEstimate) -> Value {
    let witness = match &e.witness {
        Some(Witness::Program(p)) => json!({"program": p.code().to_string(), "mnemonics": p.mnemonics()}),
        Some(Witness::Codec(name)) => json!({"codec": name}),
        None => Value::Null,
    };
    json!({
        "value_bits": e.value_bits,
        "kind": e.kind.as_str(),
        "witness": witness,
        "backend": e.backend,
    })
}

fn backend(name: &str, max_bits: Option<usize>) -> Result<Arc<dyn Estimator>> {
    if name == "toy" {
        return Ok(Arc::new(ToyEstimator { max_bits }));
    }
    Registry::default().get(name)
}

fn run_pid(args: &PidArgs) -> Result<(Value, Value)> {
    let (dist, inputs): (JointDistribution, Value) = match (&args.dist, &args.table) {
        (Some(path), _) => (
            pid_format::parse_distribution(&read_text(path)?)?,
            json!({"dist": path.display().to_string()}),
        ),
        (None, Some(name)) => {
            let (table, mut input) = if pid::tables::BUILTIN_TABLES.contains(&name.as_str()) {
                (TruthTable::builtin(name)?, InputDistribution::Uniform)
            } else {
                pid_format::parse_truth_table(&read_text(Path::new(name))?)?
            };
            if let Some(path) = &args.input_dist {
                input = pid_format::parse_input_distribution(&read_text(path)?, &table)?;
            }
            let inputs = json!({
                "table": name,
                "input_dist": args.input_dist.as_ref().map(|p| p.display().to_string()),
            });
            (table.distribution(&input)?, inputs)
        }
        (None, None) => return Err(Error::InvalidInput("pass --dist or --table".into())),
    };
    let r = pid_decompose(&dist);
    let theorem1 = if lossless_check(&dist, pid::TOLERANCE) {
        json!({
            "status": "lossless",
            "input_mutual_information": mutual_information(&dist, VarSet::X1, VarSet::X2)?,
            "residual": pid::theorem1_residual(&dist)?,
        })
    } else {
        json!({
            "status": "not-lossless",
            "input_equivocation": pid::input_equivocation(&dist),
        })
    };
    let results = json!({
        "pid": {
            "redundancy": r.redundancy,
            "unique1": r.unique1,
            "unique2": r.unique2,
            "synergy": r.synergy,
            "i1": r.i1,
            "i2": r.i2,
            "i12": r.i12,
            "synergy_minus_redundancy": synergy_minus_redundancy(&dist),
            "redundancy_measure": r.redundancy_measure,
        },
        "theorem1": theorem1,
    });
    Ok((inputs, results))
}

fn run_vm(cmd: &VmCommand) -> Result<(&'static str, Value, Value)> {
    match cmd {
        VmCommand::Run { program, advice } => {
            let code = BitString::parse_literal(program)?;
            let advice = BitString::parse_literal(advice)?;
            let prog = ToyProgram::decode(&code)?;
            let output = prog.run(&advice, DIRECT_RUN_CAP)?;
            Ok((
                "vm run",
                json!({"program": code.to_string(), "advice": advice.to_string()}),
                json!({
                    "output": output.to_string(),
                    "output_bits": output.len(),
                    "mnemonics": prog.mnemonics(),
                }),
            ))
        }
        VmCommand::Shortest {
            target,
            advice,
            max_bits,
            workers,
        } => {
            let target = BitString::parse_literal(target)?;
            let advice = BitString::parse_literal(advice)?;
            let depth = max_bits.unwrap_or_else(|| default_max_bits(target.len()));
            let est = toy_shortest_with_workers(&target, &advice, Some(depth), (*workers).max(1));
            Ok((
                "vm shortest",
                json!({
                    "target": target.to_string(),
                    "advice": advice.to_string(),
                    "max_bits": depth,
                }),
                estimate_value(&est),
            ))
        }
    }
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Result<Report> {
    let lit = cli.bits;
    let (command, inputs, results): (&str, Value, Value) = match &cli.command {
        Command::Pid(args) => {
            let (inputs, results) = run_pid(args)?;
            ("pid", inputs, results)
        }
        Command::Complexity(args) => {
            let b = backend(&args.backend, args.max_bits)?;
            let x = operand(&args.input, lit)?;
            let est = match &args.cond {
                Some(c) => b.estimate_cond(&x, &operand(c, lit)?),
                None => b.estimate(&x),
            };
            let mut results = estimate_value(&est);
            results["input_bits"] = json!(x.len());
            (
                "complexity",
                json!({"input": args.input, "cond": args.cond, "backend": args.backend}),
                results,
            )
        }
        Command::Synergy { command } => match command {
            SynergyCommand::Slices { backend: name, x1, x2 } => {
                let b = backend(name, None)?;
                let r = c_slices_lossless(&operand(x1, lit)?, &operand(x2, lit)?, b.as_ref(), cli.slack);
                (
                    "synergy slices",
                    json!({"x1": x1, "x2": x2, "backend": name}),
                    json!({
                        "value": r.value,
                        "neg_mutual_info": r.neg_mutual_info,
                        "disagreement_flag": r.disagreement_flag,
                        "backend": r.backend,
                    }),
                )
            }
            SynergyCommand::S0 {
                backend: name,
                header_bits,
                x,
                y,
            } => {
                let b = backend(name, None)?;
                let header = header_bits.unwrap_or_else(|| default_header_bits(name));
                let e = s0_bounds(&operand(x, lit)?, &operand(y, lit)?, b.as_ref(), header, cli.slack)?;
                (
                    "synergy s0",
                    json!({"x": x, "y": y, "backend": name, "header_bits": header}),
                    s0_value(&e),
                )
            }
            SynergyCommand::Demo { n, backend: name } => {
                let b = name.as_deref().map(|n| backend(n, None)).transpose()?;
                let r = theorem2_demo(*n, cli.seed, b.as_deref(), cli.slack)?;
                (
                    "synergy demo",
                    json!({"n": n, "seed": cli.seed, "backend": name}),
                    json!({
                        "x": r.x.to_string(),
                        "y": r.y.to_string(),
                        "mask": r.mask.to_string(),
                        "payload_bits": r.payload_bits,
                        "decoded_from_x": r.decoded_from_x,
                        "decoded_from_y": r.decoded_from_y,
                        "s0": r.s0.as_ref().map(s0_value),
                    }),
                )
            }
        },
        Command::Integrate(args) => {
            let encoder = builtin_encoder(&args.encoder, args.key, args.rounds)?;
            let b = backend(&args.estimator, None)?;
            let kind = args.neighborhood.parse::<NeighborhoodKind>()?;
            let spec = NeighborhoodSpec { kind };
            let z = operand(&args.input, lit)?;
            let report = edit_integration(encoder.as_ref(), &z, spec, b.as_ref(), args.aware)?;
            let mut results = json!({"integration": to_value(&report)});
            if args.witness {
                let w = integrating_violation_witness(encoder.as_ref(), &z, spec, b.as_ref(), cli.slack)?;
                results["witness"] = to_value(&w);
            }
            (
                "integrate",
                json!({
                    "input": args.input,
                    "encoder": args.encoder,
                    "key": args.key,
                    "rounds": args.rounds,
                    "estimator": args.estimator,
                    "aware": args.aware,
                    "neighborhood": kind.as_str(),
                }),
                results,
            )
        }
        Command::Avalanche(args) => {
            let codec = builtin_encoder(&args.codec, DEFAULT_KEY, DEFAULT_ROUNDS)?;
            let data = match (&args.input, args.corpus) {
                (Some(input), _) => operand(input, lit)?,
                (None, Some(kind)) => BitString::from_bytes(&generate_corpus(CorpusSpec {
                    seed: cli.seed,
                    size_bytes: args.size,
                    kind,
                })?),
                (None, None) => return Err(Error::InvalidInput("pass an input or --corpus".into())),
            };
            let profile = avalanche_profile(codec.as_ref(), &data)?;
            let mut results = to_value(&profile);
            if !args.per_position {
                if let Value::Object(map) = &mut results {
                    map.shift_remove("per_position");
                }
            }
            (
                "avalanche",
                json!({
                    "codec": args.codec,
                    "input": args.input,
                    "corpus": args.corpus,
                    "size": args.corpus.map(|_| args.size),
                    "seed": cli.seed,
                }),
                results,
            )
        }
        Command::Vm { command } => run_vm(command)?,
    };
    Ok(Report::new(command, inputs, results, cli.slack))
}

fn s0_value(e: &crate::synergy::S0Estimate) -> Value {
    json!({
        "lower": e.lower,
        "upper": e.upper,
        "given_x": e.given_x,
        "given_y": e.given_y,
        "given_both": e.given_both,
        "either_lower": e.either_lower,
        "either_upper": e.either_upper,
        "bounds_consistent": e.bounds_consistent,
        "backend": e.backend,
    })
}

/// Outcome of one invocation: exit status and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first), runs the command and renders the
/// result without touching the process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Outcome { status, stdout: text, stderr: String::new() }
            } else {
                Outcome { status, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            status: 0,
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: e.exit_code(),
            stdout: String::new(),
            stderr: format!(
                "{}\n",
                json!({"error": {"code": e.code(), "message": e.to_string()}})
            ),
        },
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let outcome = run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.status
}
