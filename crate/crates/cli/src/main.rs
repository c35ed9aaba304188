//! `monoclean`: command-line front end.
//!
//! Exit codes: 0 computed, 1 verdict false under `--strict`, 2 usage or input
//! error, 3 resource cap exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monoclean::cleanness::{decide, find_filtration, CleannessMode};
use monoclean::corpus::{exhaustive_ideals, gen_ideals, CorpusSpec};
use monoclean::decomposition::{associated_primes, irreducible_decomposition, minimal_primes};
use monoclean::sequences::{
    find_filter_regular_sequence, find_regular_sequence, gcd_condition, gcd_condition_any_order,
    is_d_sequence_any_order, is_d_sequence_on, is_filter_regular_sequence, is_forest_type,
    is_regular_sequence,
};
use monoclean::verify::{verify, verify_ideals, Theorem, VerificationReport};
use monoclean::{homology, stanley, Characteristic, Error, Monomial, MonomialIdeal, RingContext};
use serde_json::{json, Value};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "monoclean", version, about = "Cleanness, sequences and Stanley depth for monomial quotients S/I")]
struct Cli {
    /// Number of variables x1..xn; inferred from the input when omitted.
    #[arg(long, global = true)]
    vars: Option<usize>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a boolean verdict is false.
    #[arg(long, global = true)]
    strict: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModeArgs {
    ideal: String,
    /// Print the witnessing ordering (or filtration with --oracle).
    #[arg(long)]
    certify: bool,
    /// Decide through the prime filtration search instead.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Per-variable exponent cap.
    #[arg(long, default_value_t = 3)]
    maxdeg: u32,
    /// Generators drawn per ideal.
    #[arg(long, default_value_t = 3)]
    gens: usize,
    #[arg(long)]
    squarefree: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Irredundant irreducible decomposition.
    Decompose { ideal: String },
    /// Associated primes of S/I.
    Ass { ideal: String },
    /// Minimal primes of S/I.
    Minprimes { ideal: String },
    /// I : m^∞.
    Saturate { ideal: String },
    /// Is S/I clean?
    Clean(ModeArgs),
    /// Is S/I pretty clean?
    Pretty(ModeArgs),
    /// Is S/I almost clean?
    Almost(ModeArgs),
    /// A prime filtration of S/I for the mode, found by direct search.
    Filtration {
        ideal: String,
        #[arg(long, default_value = "pretty", value_parser = ["clean", "pretty", "almost"])]
        mode: String,
    },
    /// Check or find a filter-regular sequence on S/I.
    Filterreg(SequenceArgs),
    /// Check or find a regular sequence on S/I.
    Regseq(SequenceArgs),
    /// d-sequence test, on S or (with --on) on S/I.
    Dseq {
        /// The sequence, or the ideal when --on is given.
        input: String,
        /// Treat the positional argument as the ideal I and test --seq on S/I.
        #[arg(long, requires = "seq")]
        on: bool,
        #[arg(long)]
        seq: Option<String>,
        /// Accepted for symmetry with the other checks.
        #[arg(long)]
        check: bool,
        /// Accept any ordering of the sequence.
        #[arg(long)]
        any_order: bool,
    },
    /// gcd condition on an ordered monomial sequence.
    Gcdcond {
        seq: String,
        #[arg(long)]
        any_order: bool,
    },
    /// Is I of forest type?
    Foresttype { ideal: String },
    /// Multigraded Betti numbers of S/I.
    Betti {
        ideal: String,
        /// Field characteristic, 0 or a prime.
        #[arg(long, default_value_t = 0)]
        char: u32,
    },
    /// depth S/I.
    Depth { ideal: String },
    /// Stanley depth of S/I with a witness partition.
    Sdepth {
        ideal: String,
        #[arg(long)]
        partition: bool,
    },
    /// Is there a Stanley decomposition with generator degrees ≤ reg S/I?
    Hreg { ideal: String },
    /// Is depth S/I ≤ sdepth S/I?
    Stanley { ideal: String },
    /// Print a seeded random corpus, one ideal per line.
    Gen(CorpusArgs),
    /// Run a theorem harness over a corpus.
    Verify {
        theorem: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Use every ideal with exponents ≤ maxdeg instead of a random corpus.
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Args)]
struct SequenceArgs {
    ideal: String,
    /// Sequence to test, as a comma-separated list.
    #[arg(long, conflicts_with = "find", required_unless_present = "find")]
    check: Option<String>,
    /// Length of a sequence to search for.
    #[arg(long)]
    find: Option<usize>,
    /// Total degree cap of the search.
    #[arg(long, default_value_t = 3)]
    degree: u32,
}

/// What a subcommand produced: text, JSON payload, and the verdict for
/// `--strict` when the command is boolean.
struct Output {
    text: String,
    json: Value,
    verdict: Option<bool>,
}

impl Output {
    fn plain(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            verdict: None,
        }
    }

    fn boolean(holds: bool, extra: String, json: Value) -> Self {
        let mut text = holds.to_string();
        if !extra.is_empty() {
            text.push('\n');
            text.push_str(&extra);
        }
        Output {
            text,
            json,
            verdict: Some(holds),
        }
    }
}

/// Largest `k` with `xk` in the text.
fn infer_vars(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(k) = text[start..end].parse::<usize>() {
                best = best.max(k);
            }
            i = end.max(i + 1);
        } else {
            i += 1;
        }
    }
    best.max(1)
}

fn ring_for(vars: Option<usize>, texts: &[&str]) -> Result<RingContext, Error> {
    let n = vars.unwrap_or_else(|| texts.iter().map(|t| infer_vars(t)).max().unwrap_or(1));
    RingContext::new(n)
}

fn ideal_json(ring: &RingContext, ideal: &MonomialIdeal) -> Value {
    json!({ "text": ring.format_ideal(ideal), "data": ideal })
}

fn seq_text(ring: &RingContext, us: &[Monomial]) -> String {
    us.iter()
        .map(|u| ring.format_monomial(u))
        .collect::<Vec<_>>()
        .join(", ")
}

fn mode_of(cmd: &Command) -> Option<CleannessMode> {
    match cmd {
        Command::Clean(_) => Some(CleannessMode::Clean),
        Command::Pretty(_) => Some(CleannessMode::PrettyClean),
        Command::Almost(_) => Some(CleannessMode::AlmostClean),
        _ => None,
    }
}

fn parse_mode(name: &str) -> CleannessMode {
    CleannessMode::ALL
        .into_iter()
        .find(|m| m.name() == name)
        .expect("clap restricts the values")
}

fn run_mode(ring: &RingContext, args: &ModeArgs, mode: CleannessMode) -> Result<Output, Error> {
    let ideal = ring.parse_ideal(&args.ideal)?;
    if args.oracle {
        let f = find_filtration(&ideal, mode, None)?;
        let mut extra = String::new();
        if args.certify {
            if let Some(f) = &f {
                extra = filtration_lines(ring, &ideal, f);
            }
        }
        let json = json!({ "mode": mode, "ideal": ideal_json(ring, &ideal), "holds": f.is_some(), "filtration": f });
        return Ok(Output::boolean(f.is_some(), extra, json));
    }
    let v = decide(&ideal, mode)?;
    let mut extra = String::new();
    if args.certify {
        if let Some(cert) = &v.certificate {
            let lines: Vec<String> = cert
                .components
                .iter()
                .zip(cert.t_sets())
                .map(|(c, t)| {
                    format!(
                        "({})  T = {{{}}}",
                        ring.format_ideal(&c.to_ideal()),
                        seq_text(ring, &t)
                    )
                })
                .collect();
            extra = lines.join("\n");
        }
    }
    let json = json!({ "mode": mode, "ideal": ideal_json(ring, &ideal), "holds": v.holds, "route": v.route, "certificate": v.certificate });
    Ok(Output::boolean(v.holds, extra, json))
}

fn filtration_lines(
    ring: &RingContext,
    ideal: &MonomialIdeal,
    f: &monoclean::PrimeFiltration,
) -> String {
    f.steps
        .iter()
        .zip(f.chain(ideal))
        .map(|(s, before)| {
            format!(
                "({}) : {} = {}",
                ring.format_ideal(&before),
                ring.format_monomial(&s.v),
                s.prime.display_with(ring.names())
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = format!(
        "{}: {} ({} trials, {} passes, {} failures, {} skips, seed {}, {} ms)",
        r.theorem,
        if r.pass { "pass" } else { "FAIL" },
        r.trials,
        r.passes,
        r.failures,
        r.skips,
        r.seed,
        r.wall_time_ms
    );
    for (note, count) in &r.notes {
        out.push_str(&format!("\n  {note}: {count}"));
    }
    for cx in &r.counterexamples {
        out.push_str(&format!(
            "\n  counterexample trial {}: I = ({}) seq = [{}] {}: {} vs {}",
            cx.trial,
            cx.ideal,
            cx.sequence.join(", "),
            cx.check,
            cx.lhs,
            cx.rhs
        ));
        for cmd in &cx.replay {
            out.push_str(&format!("\n    replay: {cmd}"));
        }
    }
    out
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let vars = cli.vars;
    let one = |text: &str| -> Result<(RingContext, MonomialIdeal), Error> {
        let ring = ring_for(vars, &[text])?;
        let ideal = ring.parse_ideal(text)?;
        Ok((ring, ideal))
    };
    Ok(match &cli.command {
        Command::Decompose { ideal } => {
            let (ring, i) = one(ideal)?;
            let d = irreducible_decomposition(&i)?;
            let text = d
                .components()
                .iter()
                .map(|c| format!("({})", ring.format_ideal(&c.to_ideal())))
                .collect::<Vec<_>>()
                .join("\n");
            Output::plain(text, json!({ "ideal": ideal_json(&ring, &i), "decomposition": d }))
        }
        Command::Ass { ideal } | Command::Minprimes { ideal } => {
            let (ring, i) = one(ideal)?;
            let primes = if matches!(cli.command, Command::Ass { .. }) {
                associated_primes(&i)?
            } else {
                minimal_primes(&i)?
            };
            let text = primes
                .iter()
                .map(|p| p.display_with(ring.names()))
                .collect::<Vec<_>>()
                .join("\n");
            Output::plain(text, json!({ "ideal": ideal_json(&ring, &i), "primes": primes }))
        }
        Command::Saturate { ideal } => {
            let (ring, i) = one(ideal)?;
            let sat = i.saturate();
            Output::plain(
                ring.format_ideal(&sat),
                json!({ "ideal": ideal_json(&ring, &i), "saturation": ideal_json(&ring, &sat) }),
            )
        }
        Command::Clean(args) | Command::Pretty(args) | Command::Almost(args) => {
            let ring = ring_for(vars, &[&args.ideal])?;
            run_mode(&ring, args, mode_of(&cli.command).expect("mode subcommand"))?
        }
        Command::Filtration { ideal, mode } => {
            let (ring, i) = one(ideal)?;
            let mode = parse_mode(mode);
            let f = find_filtration(&i, mode, None)?;
            let text = match &f {
                Some(f) => filtration_lines(&ring, &i, f),
                None => "none".to_string(),
            };
            let json = json!({ "mode": mode, "ideal": ideal_json(&ring, &i), "filtration": f });
            Output {
                text,
                json,
                verdict: Some(f.is_some()),
            }
        }
        Command::Filterreg(args) | Command::Regseq(args) => {
            let filter = matches!(cli.command, Command::Filterreg(_));
            let texts: Vec<&str> = std::iter::once(args.ideal.as_str())
                .chain(args.check.as_deref())
                .collect();
            let ring = ring_for(vars, &texts)?;
            let i = ring.parse_ideal(&args.ideal)?;
            if let Some(seq) = &args.check {
                let us = ring.parse_monomial_list(seq)?;
                let holds = if filter {
                    is_filter_regular_sequence(&i, &us)?
                } else {
                    is_regular_sequence(&i, &us)?
                };
                Output::boolean(
                    holds,
                    String::new(),
                    json!({ "ideal": ideal_json(&ring, &i), "sequence": seq_text(&ring, &us), "holds": holds }),
                )
            } else {
                let len = args.find.expect("clap requires --check or --find");
                let found = if filter {
                    find_filter_regular_sequence(&i, len, args.degree)?
                } else {
                    find_regular_sequence(&i, len, args.degree)?
                };
                let shown = found.as_ref().map(|s| seq_text(&ring, s.items()));
                Output {
                    text: shown.clone().unwrap_or_else(|| "none".into()),
                    json: json!({ "ideal": ideal_json(&ring, &i), "length": len, "degree_cap": args.degree, "sequence": shown }),
                    verdict: Some(found.is_some()),
                }
            }
        }
        Command::Dseq {
            input,
            on,
            seq,
            any_order,
            ..
        } => {
            let (ideal_text, seq_src) = if *on {
                (Some(input.as_str()), seq.as_deref().expect("clap requires --seq"))
            } else {
                (None, input.as_str())
            };
            let texts: Vec<&str> = ideal_text.into_iter().chain([seq_src]).collect();
            let ring = ring_for(vars, &texts)?;
            let ideal = match ideal_text {
                Some(t) => ring.parse_ideal(t)?,
                None => MonomialIdeal::zero(ring.nvars()),
            };
            let us = ring.parse_monomial_list(seq_src)?;
            let holds = if *any_order {
                is_d_sequence_any_order(&ideal, &us)?
            } else {
                is_d_sequence_on(&ideal, &us)?
            };
            Output::boolean(
                holds,
                String::new(),
                json!({ "ideal": ideal_json(&ring, &ideal), "sequence": seq_text(&ring, &us), "any_order": any_order, "holds": holds }),
            )
        }
        Command::Gcdcond { seq, any_order } => {
            let ring = ring_for(vars, &[seq])?;
            let us = ring.parse_monomial_list(seq)?;
            let holds = if *any_order {
                gcd_condition_any_order(&us)?
            } else {
                gcd_condition(&us)?
            };
            Output::boolean(
                holds,
                String::new(),
                json!({ "sequence": seq_text(&ring, &us), "any_order": any_order, "holds": holds }),
            )
        }
        Command::Foresttype { ideal } => {
            let (ring, i) = one(ideal)?;
            let holds = is_forest_type(&i)?;
            Output::boolean(holds, String::new(), json!({ "ideal": ideal_json(&ring, &i), "holds": holds }))
        }
        Command::Betti { ideal, char } => {
            let (ring, i) = one(ideal)?;
            let characteristic = if *char == 0 {
                Characteristic::Zero
            } else {
                Characteristic::Prime(*char)
            };
            let table = homology::betti_table(&i, characteristic)?;
            let text = format!(
                "{}pd = {}\nreg = {}",
                table.diagram(),
                table.projective_dimension(),
                table.regularity()
            );
            Output::plain(
                text,
                json!({
                    "ideal": ideal_json(&ring, &i),
                    "characteristic": char,
                    "table": table,
                    "projective_dimension": table.projective_dimension(),
                    "regularity": table.regularity(),
                }),
            )
        }
        Command::Depth { ideal } => {
            let (ring, i) = one(ideal)?;
            let d = homology::depth(&i)?;
            Output::plain(d.to_string(), json!({ "ideal": ideal_json(&ring, &i), "depth": d }))
        }
        Command::Sdepth { ideal, partition } => {
            let (ring, i) = one(ideal)?;
            let (d, p) = stanley::sdepth(&i)?;
            let mut text = d.to_string();
            if *partition {
                for space in p.stanley_spaces() {
                    let z: Vec<&str> = space.vars.iter().map(|&j| ring.names()[j].as_str()).collect();
                    text.push_str(&format!(
                        "\n{} K[{}]",
                        ring.format_monomial(&space.generator),
                        z.join(", ")
                    ));
                }
            }
            Output::plain(text, json!({ "ideal": ideal_json(&ring, &i), "sdepth": d, "partition": p }))
        }
        Command::Hreg { ideal } => {
            let (ring, i) = one(ideal)?;
            let reg = homology::regularity(&i)?;
            let (holds, witness) = stanley::h_regularity_check(&i)?;
            Output::boolean(
                holds,
                format!("reg = {reg}"),
                json!({ "ideal": ideal_json(&ring, &i), "regularity": reg, "holds": holds, "partition": witness }),
            )
        }
        Command::Stanley { ideal } => {
            let (ring, i) = one(ideal)?;
            let depth = homology::depth(&i)?;
            let (sd, _) = stanley::sdepth(&i)?;
            let holds = depth <= sd;
            Output::boolean(
                holds,
                format!("depth = {depth}, sdepth = {sd}"),
                json!({ "ideal": ideal_json(&ring, &i), "depth": depth, "sdepth": sd, "holds": holds }),
            )
        }
        Command::Gen(c) => {
            let spec = corpus_spec(vars, c);
            let ring = RingContext::new(spec.n)?;
            let ideals: Vec<MonomialIdeal> = gen_ideals(&spec)?.collect();
            let text = ideals
                .iter()
                .map(|i| ring.format_ideal(i))
                .collect::<Vec<_>>()
                .join("\n");
            let list: Vec<Value> = ideals.iter().map(|i| ideal_json(&ring, i)).collect();
            Output::plain(text, json!({ "corpus": spec, "ideals": list }))
        }
        Command::Verify {
            theorem,
            corpus,
            exhaustive,
        } => {
            let theorem: Theorem = theorem.parse()?;
            let spec = corpus_spec(vars, corpus);
            let report = if *exhaustive {
                let ideals = exhaustive_ideals(spec.n, spec.max_deg)?;
                verify_ideals(theorem, &ideals, spec.seed)?
            } else {
                verify(theorem, &spec)?
            };
            Output {
                text: report_text(&report),
                json: serde_json::to_value(&report).expect("reports serialize"),
                verdict: Some(report.pass),
            }
        }
    })
}

fn corpus_spec(vars: Option<usize>, c: &CorpusArgs) -> CorpusSpec {
    CorpusSpec::new(c.seed, vars.unwrap_or(3), c.maxdeg, c.gens, c.trials).squarefree(c.squarefree)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Resource { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let rendered = if cli.json {
        let mut payload = json!({ "schema": SCHEMA });
        if let (Value::Object(dst), Value::Object(src)) = (&mut payload, output.json) {
            dst.extend(src);
        }
        serde_json::to_string_pretty(&payload).expect("JSON values serialize")
    } else {
        output.text
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, rendered + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        // A closed pipe (e.g. `| head`) is not an error worth reporting.
        None => {
            let _ = writeln!(std::io::stdout().lock(), "{rendered}");
        }
    }
    if cli.strict && output.verdict == Some(false) {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
