//! `glp`: command-line front end for ordinal and worm computations.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use glp_core::oracle::{self, enumerate_worms, DEFAULT_SEED};
use glp_core::ordinal::{e_enum, hyperexp, hyperexp_factor, hyperlog, whnf, Ordinal};
use glp_core::turing::{self, SIDE_CONDITIONS};
use glp_core::worm::{self, Worm};
use glp_core::{parse_ordinal, parse_worm, print_ordinal, Error, Style};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "glp", version, about = "Ordinals below Gamma_0 and worms of the closed fragment of GLP")]
struct Cli {
    /// Print one JSON object {command, inputs, result} instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized oracle suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ordinal arithmetic.
    #[command(subcommand)]
    Ord(OrdCommand),
    /// e^XI(G).
    Hyperexp { xi: String, g: String },
    /// l^XI(G).
    Hyperlog { xi: String, g: String },
    /// Worm operations.
    #[command(subcommand)]
    Worm(WormCommand),
    /// Turing-progression schedules (natural-number modalities only).
    #[command(subcommand)]
    Turing(TuringCommand),
    /// List every worm over an alphabet up to a length, with its order type.
    Enumerate(EnumerateArgs),
    /// Run the default oracle suites; exits 1 if any check fails.
    Selftest,
}

#[derive(Subcommand)]
enum OrdCommand {
    /// Compare two ordinals: less, equal or greater.
    Cmp { a: String, b: String },
    /// A + B.
    Add { a: String, b: String },
    /// -A + B, the unique X with A + X = B.
    Sub { a: String, b: String },
    /// The exponent of the last Cantor term (0 for 0).
    Ell { a: String },
    /// The Cantor normal form exponents.
    Cnf { a: String },
    /// Weak hyperexponential normal form.
    Whnf { a: String },
    /// The Veblen value phi(A, B).
    Veblen { a: String, b: String },
    /// The largest partial sum of X's Cantor normal form that is at most Z.
    Cnp { z: String, x: String },
    /// Whether A and B have the same projection onto G's partial sums.
    Sim { a: String, b: String, g: String },
    /// The maximal (alpha, zeta) with G = e^alpha(zeta).
    Factor { g: String },
    /// e_M(G), the G-th element of the M-th Veblen level.
    EEnum { m: String, g: String },
}

#[derive(Subcommand)]
enum WormCommand {
    /// The order type o(A).
    O { worm: String },
    /// The normal-form worm equivalent to A.
    Normalize { worm: String },
    /// The XI-head of A.
    Head { xi: String, worm: String },
    /// The XI-remainder of A.
    Rem { xi: String, worm: String },
    /// Promote every modality of A by adding ALPHA on the left.
    Up { alpha: String, worm: String },
    /// Demote every modality of A by left-subtracting ALPHA.
    Down { alpha: String, worm: String },
    /// Compare A and B under <_XI.
    Compare { xi: String, a: String, b: String },
    /// Omega_XI(A).
    Omega { xi: String, worm: String },
    /// The full Omega-sequence of A as change points.
    OmegaSeq { worm: String },
    /// Whether A is in Beklemishev normal form.
    Bnf { worm: String },
    /// o_XI(A) for A with every modality at least XI.
    OAt { xi: String, worm: String },
    /// The normal-form worm with order type X.
    OfOrdinal { x: String },
    /// Whether Omega_XI(A) = Omega_ZETA(A), decided from A's normal form.
    CoordsEqual { worm: String, xi: String, zeta: String },
    /// Minimum and first modality.
    Extremes { worm: String },
}

#[derive(Subcommand)]
enum TuringCommand {
    /// The levels with nonzero extent and their remainders.
    Schedule { worm: String },
    /// The level-N conservativity statement.
    Conservativity { worm: String, n: u64 },
}

#[derive(Args)]
struct EnumerateArgs {
    /// Comma-separated modalities.
    #[arg(long, default_value = "0,1,2")]
    alphabet: String,
    #[arg(long, default_value_t = 3)]
    max_length: usize,
}

/// Text and structured renderings of one result.
struct Output {
    command: String,
    inputs: Value,
    text: String,
    result: Value,
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("results serialize")
}

fn ordinal(text: &str) -> Result<Ordinal, Error> {
    parse_ordinal(text)
}

fn worm_arg(text: &str) -> Result<Worm, Error> {
    parse_worm(text)
}

fn sum(a: &Ordinal) -> String {
    print_ordinal(a, Style::Sum)
}

fn compact(a: &Ordinal) -> String {
    print_ordinal(a, Style::Compact)
}

fn ordinal_output(command: &str, inputs: Value, value: Ordinal) -> Output {
    Output {
        command: command.into(),
        inputs,
        text: sum(&value),
        result: to_value(&value),
    }
}

fn worm_output(command: &str, inputs: Value, value: Worm) -> Output {
    Output {
        command: command.into(),
        inputs,
        text: value.to_string(),
        result: to_value(&value),
    }
}

fn bool_output(command: &str, inputs: Value, value: bool) -> Output {
    Output {
        command: command.into(),
        inputs,
        text: value.to_string(),
        result: json!(value),
    }
}

fn run_ord(cmd: OrdCommand) -> Result<Output, Error> {
    Ok(match cmd {
        OrdCommand::Cmp { a, b } => {
            let (a, b) = (ordinal(&a)?, ordinal(&b)?);
            let word = match a.cmp(&b) {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            Output {
                command: "ord cmp".into(),
                inputs: json!({"a": to_value(&a), "b": to_value(&b)}),
                text: word.into(),
                result: json!(word),
            }
        }
        OrdCommand::Add { a, b } => {
            let (a, b) = (ordinal(&a)?, ordinal(&b)?);
            ordinal_output("ord add", json!({"a": to_value(&a), "b": to_value(&b)}), a.add(&b))
        }
        OrdCommand::Sub { a, b } => {
            let (a, b) = (ordinal(&a)?, ordinal(&b)?);
            let value = a.left_sub(&b)?;
            ordinal_output("ord sub", json!({"a": to_value(&a), "b": to_value(&b)}), value)
        }
        OrdCommand::Ell { a } => {
            let a = ordinal(&a)?;
            ordinal_output("ord ell", json!({"a": to_value(&a)}), a.last_exponent())
        }
        OrdCommand::Cnf { a } => {
            let a = ordinal(&a)?;
            let exponents = a.cnf_terms();
            let text = format!("[{}]", exponents.iter().map(sum).collect::<Vec<_>>().join(", "));
            Output {
                command: "ord cnf".into(),
                inputs: json!({"a": to_value(&a)}),
                text,
                result: to_value(&exponents),
            }
        }
        OrdCommand::Whnf { a } => {
            let a = ordinal(&a)?;
            let view = whnf(&a);
            let terms: Vec<Value> = view
                .terms
                .iter()
                .map(|t| json!({"exponent": to_value(&t.exponent), "argument": to_value(&t.argument)}))
                .collect();
            Output {
                command: "ord whnf".into(),
                inputs: json!({"a": to_value(&a)}),
                text: print_ordinal(&a, Style::Whnf),
                result: json!({"terms": terms, "trailing": view.trailing}),
            }
        }
        OrdCommand::Veblen { a, b } => {
            let (a, b) = (ordinal(&a)?, ordinal(&b)?);
            let value = Ordinal::veblen(&a, &b);
            ordinal_output("ord veblen", json!({"a": to_value(&a), "b": to_value(&b)}), value)
        }
        OrdCommand::Cnp { z, x } => {
            let (z, x) = (ordinal(&z)?, ordinal(&x)?);
            let value = Ordinal::cnp(&z, &x);
            ordinal_output("ord cnp", json!({"z": to_value(&z), "x": to_value(&x)}), value)
        }
        OrdCommand::Sim { a, b, g } => {
            let (a, b, g) = (ordinal(&a)?, ordinal(&b)?, ordinal(&g)?);
            let value = Ordinal::sim(&a, &b, &g);
            bool_output(
                "ord sim",
                json!({"a": to_value(&a), "b": to_value(&b), "g": to_value(&g)}),
                value,
            )
        }
        OrdCommand::Factor { g } => {
            let g = ordinal(&g)?;
            let (alpha, zeta) = hyperexp_factor(&g)?;
            Output {
                command: "ord factor".into(),
                inputs: json!({"g": to_value(&g)}),
                text: format!("alpha: {}; zeta: {}", sum(&alpha), sum(&zeta)),
                result: json!({"alpha": to_value(&alpha), "zeta": to_value(&zeta)}),
            }
        }
        OrdCommand::EEnum { m, g } => {
            let (m, g) = (ordinal(&m)?, ordinal(&g)?);
            let value = e_enum(&m, &g);
            ordinal_output("ord e-enum", json!({"m": to_value(&m), "g": to_value(&g)}), value)
        }
    })
}

fn run_worm(cmd: WormCommand) -> Result<Output, Error> {
    Ok(match cmd {
        WormCommand::O { worm } => {
            let a = worm_arg(&worm)?;
            ordinal_output("worm o", json!({"worm": to_value(&a)}), worm::o(&a))
        }
        WormCommand::Normalize { worm } => {
            let a = worm_arg(&worm)?;
            worm_output("worm normalize", json!({"worm": to_value(&a)}), worm::normalize(&a))
        }
        WormCommand::Head { xi, worm } => {
            let (xi, a) = (ordinal(&xi)?, worm_arg(&worm)?);
            worm_output("worm head", json!({"xi": to_value(&xi), "worm": to_value(&a)}), worm::head(&xi, &a))
        }
        WormCommand::Rem { xi, worm } => {
            let (xi, a) = (ordinal(&xi)?, worm_arg(&worm)?);
            worm_output("worm rem", json!({"xi": to_value(&xi), "worm": to_value(&a)}), worm::remainder(&xi, &a))
        }
        WormCommand::Up { alpha, worm } => {
            let (alpha, a) = (ordinal(&alpha)?, worm_arg(&worm)?);
            let value = worm::promote(&alpha, &a);
            worm_output("worm up", json!({"alpha": to_value(&alpha), "worm": to_value(&a)}), value)
        }
        WormCommand::Down { alpha, worm } => {
            let (alpha, a) = (ordinal(&alpha)?, worm_arg(&worm)?);
            let value = worm::demote(&alpha, &a)?;
            worm_output("worm down", json!({"alpha": to_value(&alpha), "worm": to_value(&a)}), value)
        }
        WormCommand::Compare { xi, a, b } => {
            let (xi, a, b) = (ordinal(&xi)?, worm_arg(&a)?, worm_arg(&b)?);
            let outcome = worm::compare_at(&xi, &a, &b);
            Output {
                command: "worm compare".into(),
                inputs: json!({"xi": to_value(&xi), "a": to_value(&a), "b": to_value(&b)}),
                text: outcome.to_string(),
                result: to_value(&outcome),
            }
        }
        WormCommand::Omega { xi, worm } => {
            let (xi, a) = (ordinal(&xi)?, worm_arg(&worm)?);
            ordinal_output("worm omega", json!({"xi": to_value(&xi), "worm": to_value(&a)}), worm::omega(&xi, &a))
        }
        WormCommand::OmegaSeq { worm } => {
            let a = worm_arg(&worm)?;
            let seq = worm::omega_sequence(&a);
            let text = seq
                .steps
                .iter()
                .map(|s| format!("{}: {}", compact(&s.start), compact(&s.value)))
                .collect::<Vec<_>>()
                .join("; ");
            Output {
                command: "worm omega-seq".into(),
                inputs: json!({"worm": to_value(&a)}),
                text,
                result: to_value(&seq.steps),
            }
        }
        WormCommand::Bnf { worm } => {
            let a = worm_arg(&worm)?;
            bool_output("worm bnf", json!({"worm": to_value(&a)}), worm::is_bnf(&a))
        }
        WormCommand::OAt { xi, worm } => {
            let (xi, a) = (ordinal(&xi)?, worm_arg(&worm)?);
            let value = worm::o_at(&xi, &a)?;
            ordinal_output("worm o-at", json!({"xi": to_value(&xi), "worm": to_value(&a)}), value)
        }
        WormCommand::OfOrdinal { x } => {
            let x = ordinal(&x)?;
            worm_output("worm of-ordinal", json!({"x": to_value(&x)}), worm::worm_of_ordinal(&x))
        }
        WormCommand::CoordsEqual { worm, xi, zeta } => {
            let (a, xi, zeta) = (worm_arg(&worm)?, ordinal(&xi)?, ordinal(&zeta)?);
            let value = worm::coordinates_equal(&a, &xi, &zeta)?;
            bool_output(
                "worm coords-equal",
                json!({"worm": to_value(&a), "xi": to_value(&xi), "zeta": to_value(&zeta)}),
                value,
            )
        }
        WormCommand::Extremes { worm } => {
            let a = worm_arg(&worm)?;
            let (min, first) = worm::extremes(&a);
            let show = |x: &Option<Ordinal>| x.as_ref().map_or("none".to_string(), sum);
            Output {
                command: "worm extremes".into(),
                inputs: json!({"worm": to_value(&a)}),
                text: format!("min: {}; first: {}", show(&min), show(&first)),
                result: json!({"min": to_value(&min), "first": to_value(&first)}),
            }
        }
    })
}

fn run_turing(cmd: TuringCommand) -> Result<Output, Error> {
    Ok(match cmd {
        TuringCommand::Schedule { worm } => {
            let a = worm_arg(&worm)?;
            let schedule = turing::schedule(&a)?;
            let mut lines = vec![schedule.render()];
            lines.extend(schedule.entries.iter().map(|e| {
                format!("level {}: extent {}; remainder {}", e.level, sum(&e.extent), e.remainder)
            }));
            Output {
                command: "turing schedule".into(),
                inputs: json!({"worm": to_value(&a)}),
                text: lines.join("\n"),
                result: to_value(&schedule),
            }
        }
        TuringCommand::Conservativity { worm, n } => {
            let a = worm_arg(&worm)?;
            let statement = turing::conservativity(&a, n)?;
            Output {
                command: "turing conservativity".into(),
                inputs: json!({"worm": to_value(&a), "n": n}),
                text: format!("{statement}\n({SIDE_CONDITIONS}, with n = {n})"),
                result: json!({"statement": statement, "assumptions": SIDE_CONDITIONS}),
            }
        }
    })
}

fn run_enumerate(args: EnumerateArgs) -> Result<Output, Error> {
    let alphabet = args
        .alphabet
        .split(',')
        .map(|s| parse_ordinal(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    let universe = enumerate_worms(&alphabet, args.max_length)?;
    let rows: Vec<(Worm, Ordinal)> = universe
        .worms
        .iter()
        .map(|w| (w.clone(), worm::o(w)))
        .collect();
    let text = rows
        .iter()
        .map(|(w, v)| format!("{w}\t{}", sum(v)))
        .collect::<Vec<_>>()
        .join("\n");
    let result: Vec<Value> = rows
        .iter()
        .map(|(w, v)| json!({"worm": to_value(w), "o": to_value(v)}))
        .collect();
    Ok(Output {
        command: "enumerate".into(),
        inputs: json!({"alphabet": to_value(&universe.alphabet), "max_length": args.max_length}),
        text,
        result: json!(result),
    })
}

fn run(command: Command, seed: u64) -> Result<(Output, bool), Error> {
    let output = match command {
        Command::Ord(cmd) => run_ord(cmd)?,
        Command::Hyperexp { xi, g } => {
            let (xi, g) = (ordinal(&xi)?, ordinal(&g)?);
            ordinal_output("hyperexp", json!({"xi": to_value(&xi), "g": to_value(&g)}), hyperexp(&xi, &g))
        }
        Command::Hyperlog { xi, g } => {
            let (xi, g) = (ordinal(&xi)?, ordinal(&g)?);
            ordinal_output("hyperlog", json!({"xi": to_value(&xi), "g": to_value(&g)}), hyperlog(&xi, &g))
        }
        Command::Worm(cmd) => run_worm(cmd)?,
        Command::Turing(cmd) => run_turing(cmd)?,
        Command::Enumerate(args) => run_enumerate(args)?,
        Command::Selftest => {
            let report = oracle::selftest(seed);
            let passed = report.passed();
            return Ok((
                Output {
                    command: "selftest".into(),
                    inputs: json!({"seed": seed}),
                    text: report.to_string(),
                    result: to_value(&report),
                },
                passed,
            ));
        }
    };
    Ok((output, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.seed) {
        Ok((output, passed)) => {
            if cli.json {
                let doc = json!({
                    "command": output.command,
                    "inputs": output.inputs,
                    "result": output.result,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("JSON renders"));
            } else {
                println!("{}", output.text);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
