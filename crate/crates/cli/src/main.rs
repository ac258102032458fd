//! `penney` — exact Penney's-game analysis on words and group-action
//! patterns, with machine-readable output.
//!
//! Exit codes: 2 usage/parse errors, 3 budget exhaustion, 4 mathematical
//! degeneracies (non-reduced sets, singular systems, degenerate matchups).

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Value};

use penney_core::cyclic;
use penney_core::error::Error;
use penney_core::game;
use penney_core::genfunc::{self, ReducedPatternSet};
use penney_core::group::PermutationGroup;
use penney_core::oracle::{self, OracleBudget};
use penney_core::pattern::{self, Pattern};
use penney_core::rational::{decimal_string, rational_string};
use penney_core::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Parser, Debug)]
#[command(
    name = "penney",
    version,
    about = "Exact analysis of Penney's game on words and group-action patterns"
)]
struct Cli {
    /// Output format; CSV is available for tabular results, DOT for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Add 12-significant-digit decimal renderings (approximate) next to
    /// exact rationals.
    #[arg(long, global = true)]
    decimal: bool,

    /// Worker threads (default: all cores for graph/beater, 1 elsewhere).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbit, canonical representative, and stabilizer of a word.
    Orbits {
        #[arg(long)]
        group: String,
        #[arg(long)]
        word: String,
    },
    /// Correlation vector between two patterns.
    Correlate {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        /// Cross-validate against the orbit-sum definition.
        #[arg(long)]
        verify: bool,
    },
    /// Conway leading number between two patterns.
    Cln {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
    },
    /// Expected wait time of a pattern.
    Wait {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pattern: String,
    },
    /// Odds and expected length for a matchup, or a full odds table with --all.
    Odds {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p1: String,
        #[arg(long, conflicts_with = "all")]
        p2: Option<String>,
        /// Tabulate Bob's odds for every same-length pattern.
        #[arg(long)]
        all: bool,
        /// Pattern length; must match --p1 when given.
        #[arg(long)]
        length: Option<usize>,
    },
    /// Avoiding and first-occurrence generating functions for a pattern set.
    Genfunc {
        #[arg(long)]
        group: String,
        /// Comma-separated patterns forming a reduced set.
        #[arg(long)]
        patterns: String,
        /// Number of series coefficients to include.
        #[arg(long, default_value_t = 10)]
        series: usize,
    },
    /// Best beater of a pattern, with the shift-candidate family.
    Beater {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p1: String,
        /// Enumeration budget (words scanned).
        #[arg(long, default_value_t = pattern::DEFAULT_ENUM_BUDGET)]
        budget: u64,
    },
    /// Beater graph over all patterns of a length.
    Graph {
        #[arg(long)]
        group: String,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = pattern::DEFAULT_ENUM_BUDGET)]
        budget: u64,
    },
    /// Adjacency signature of a cyclic-group pattern.
    Signature {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pattern: String,
        /// Also lift the signature back starting from this letter.
        #[arg(long)]
        lift: Option<String>,
    },
    /// Brute-force and Monte Carlo oracles, exact values alongside.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Exact series coefficients vs brute-force counts.
    Counts {
        #[arg(long)]
        group: String,
        #[arg(long)]
        patterns: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Enumeration budget in letter steps.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Simulated matchup vs the exact odds.
    Game {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Simulated wait time vs the exact value.
    Wait {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(&cli);
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", json!({ "error": err.to_string() }));
            ExitCode::from(exit_code(&err))
        }
    }
}

fn configure_threads(cli: &Cli) {
    let default = match cli.command {
        Command::Graph { .. } | Command::Beater { .. } | Command::Oracle { .. } => 0,
        _ => 1,
    };
    let threads = cli.threads.unwrap_or(default);
    // 0 lets rayon use every core.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::OrderCapExceeded { .. } | Error::BudgetExceeded { .. } => 3,
        Error::NotReduced { .. }
        | Error::SingularSystem
        | Error::PoleAtZero
        | Error::PoleAtPoint
        | Error::DegenerateMatchup
        | Error::HypothesisViolated { .. } => 4,
        Error::InvalidInput(_)
        | Error::GroupMismatch
        | Error::WrongGroup(_)
        | Error::LengthTooShort { .. } => 2,
    }
}

struct Output {
    config: Value,
    body: Value,
    /// (header, rows) when the result is tabular.
    table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
    dot: Option<String>,
}

/// Write a line, ignoring a closed pipe (e.g. `penney ... | head`).
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn run(cli: &Cli) -> Result<(), Error> {
    let out = dispatch(cli)?;
    match cli.format {
        Format::Json => {
            let mut body = out.body;
            if let Value::Object(map) = &mut body {
                map.insert("config".into(), out.config);
                map.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
                if cli.decimal {
                    map.insert(
                        "decimal_note".into(),
                        json!("decimal fields are approximate"),
                    );
                }
            }
            emit(&serde_json::to_string_pretty(&body).unwrap());
        }
        Format::Csv => {
            let (header, rows) = out.table.ok_or_else(|| {
                Error::InvalidInput("csv output is only available for tabular results".into())
            })?;
            emit(&header.join(","));
            for row in rows {
                emit(&row.join(","));
            }
        }
        Format::Dot => {
            let dot = out.dot.ok_or_else(|| {
                Error::InvalidInput("dot output is only available for graphs".into())
            })?;
            emit(dot.trim_end());
        }
    }
    Ok(())
}

fn build_group(dsl: &str) -> Result<Arc<PermutationGroup>, Error> {
    Ok(Arc::new(PermutationGroup::from_dsl(dsl)?))
}

fn parse_pattern(group: &Arc<PermutationGroup>, s: &str) -> Result<Pattern, Error> {
    Pattern::parse(group, s)
}

/// Dense rational-function elimination degrades past a handful of patterns;
/// the CLI refuses larger sets (the library imposes no cap).
const MAX_CLI_SET: usize = 8;

fn parse_pattern_set(
    group: &Arc<PermutationGroup>,
    list: &str,
) -> Result<Vec<Pattern>, Error> {
    let patterns: Vec<Pattern> = list
        .split(',')
        .map(|s| parse_pattern(group, s.trim()))
        .collect::<Result<_, _>>()?;
    if patterns.len() > MAX_CLI_SET {
        return Err(Error::InvalidInput(format!(
            "at most {MAX_CLI_SET} patterns per set (got {})",
            patterns.len()
        )));
    }
    Ok(patterns)
}

fn rational_json(cli: &Cli, map: &mut serde_json::Map<String, Value>, key: &str, x: &BigRational) {
    map.insert(key.into(), json!(rational_string(x)));
    if cli.decimal {
        map.insert(format!("{key}_decimal"), json!(decimal_string(x)));
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Orbits { group, word } => {
            let g = build_group(group)?;
            let w = Word::parse(word, g.alphabet_size())?;
            let orbit = g.orbit(&w);
            let canonical = g.canonical_representative(&w);
            let rows = orbit
                .iter()
                .map(|v| vec![v.to_upper_string()])
                .collect::<Vec<_>>();
            Ok(Output {
                config: json!({ "command": "orbits", "group": group, "word": word }),
                body: json!({
                    "orbit": orbit.iter().map(Word::to_upper_string).collect::<Vec<_>>(),
                    "orbit_size": orbit.len(),
                    "canonical": canonical.to_lower_string(),
                    "stabilizer_order": g.stabilizer_order(&w),
                }),
                table: Some((vec!["word"], rows)),
                dot: None,
            })
        }
        Command::Correlate {
            group,
            p1,
            p2,
            verify,
        } => {
            let g = build_group(group)?;
            let a = parse_pattern(&g, p1)?;
            let b = parse_pattern(&g, p2)?;
            let corr = pattern::correlate_patterns(&a, &b)?;
            let mut body = corr.to_json();
            if *verify {
                let orbit_sum = pattern::correlate_patterns_orbit_sum(&a, &b)?;
                body["orbit_sum_agrees"] = json!(orbit_sum == corr);
            }
            Ok(Output {
                config: json!({
                    "command": "correlate", "group": group,
                    "p1": p1, "p2": p2, "verify": verify,
                }),
                body,
                table: None,
                dot: None,
            })
        }
        Command::Cln { group, p1, p2 } => {
            let g = build_group(group)?;
            let a = parse_pattern(&g, p1)?;
            let b = parse_pattern(&g, p2)?;
            let value = pattern::cln_pattern(&a, &b)?;
            let mut map = serde_json::Map::new();
            map.insert("p1".into(), json!(a.to_string()));
            map.insert("p2".into(), json!(b.to_string()));
            rational_json(cli, &mut map, "cln", &value);
            Ok(Output {
                config: json!({ "command": "cln", "group": group, "p1": p1, "p2": p2 }),
                body: Value::Object(map),
                table: None,
                dot: None,
            })
        }
        Command::Wait { group, pattern } => {
            let g = build_group(group)?;
            let p = parse_pattern(&g, pattern)?;
            let value = game::wait_time(&p);
            let mut map = serde_json::Map::new();
            map.insert("pattern".into(), json!(p.to_string()));
            map.insert("orbit_size".into(), json!(p.orbit_size()));
            rational_json(cli, &mut map, "wait", &value);
            Ok(Output {
                config: json!({ "command": "wait", "group": group, "pattern": pattern }),
                body: Value::Object(map),
                table: None,
                dot: None,
            })
        }
        Command::Odds {
            group,
            p1,
            p2,
            all,
            length,
        } => {
            let g = build_group(group)?;
            let a = parse_pattern(&g, p1)?;
            if let Some(l) = length {
                if *l != a.len() {
                    return Err(Error::InvalidInput(format!(
                        "--length {l} does not match --p1 (length {})",
                        a.len()
                    )));
                }
            }
            if *all {
                let patterns = pattern::enumerate_patterns(&g, a.len())?;
                let mut rows = Vec::new();
                let mut entries = Vec::new();
                for b in patterns {
                    if b == a {
                        continue;
                    }
                    let report = game::odds(&a, &b)?;
                    rows.push(vec![
                        b.to_string(),
                        format!("{}:{}", report.odds.1, report.odds.0),
                    ]);
                    entries.push(json!({
                        "pattern": b.to_string(),
                        "bob_odds": format!("{}:{}", report.odds.1, report.odds.0),
                        "alice_win_probability": rational_string(&report.alice_win_probability),
                    }));
                }
                Ok(Output {
                    config: json!({ "command": "odds", "group": group, "p1": p1, "all": true }),
                    body: json!({ "alice": a.to_string(), "table": entries }),
                    table: Some((vec!["pattern", "bob_odds"], rows)),
                    dot: None,
                })
            } else {
                let p2 = p2
                    .as_deref()
                    .ok_or_else(|| Error::InvalidInput("--p2 or --all is required".into()))?;
                let b = parse_pattern(&g, p2)?;
                let report = game::odds(&a, &b)?;
                let mut map = match report.to_json() {
                    Value::Object(map) => map,
                    _ => unreachable!(),
                };
                if cli.decimal {
                    map.insert(
                        "alice_win_probability_decimal".into(),
                        json!(decimal_string(&report.alice_win_probability)),
                    );
                    map.insert(
                        "expected_length_decimal".into(),
                        json!(decimal_string(&report.expected_length)),
                    );
                }
                Ok(Output {
                    config: json!({ "command": "odds", "group": group, "p1": p1, "p2": p2 }),
                    body: Value::Object(map),
                    table: None,
                    dot: None,
                })
            }
        }
        Command::Genfunc {
            group,
            patterns,
            series,
        } => {
            let g = build_group(group)?;
            let list = parse_pattern_set(&g, patterns)?;
            let set = ReducedPatternSet::new(list)?;
            let sol = genfunc::solve_patterns(&set)?;
            let series_of = |f: &penney_core::rational::RationalFunction| -> Result<Value, Error> {
                let coeffs = f.series_coefficients(*series)?;
                Ok(json!(coeffs.iter().map(rational_string).collect::<Vec<_>>()))
            };
            let mut first = serde_json::Map::new();
            let mut series_map = serde_json::Map::new();
            series_map.insert("avoiding".into(), series_of(&sol.avoiding)?);
            for (p, f) in set.patterns().iter().zip(&sol.first_occurrence) {
                first.insert(p.to_string(), f.to_json());
                series_map.insert(p.to_string(), series_of(f)?);
            }
            Ok(Output {
                config: json!({
                    "command": "genfunc", "group": group,
                    "patterns": patterns, "series": series,
                }),
                body: json!({
                    "avoiding": sol.avoiding.to_json(),
                    "first": first,
                    "series": series_map,
                }),
                table: None,
                dot: None,
            })
        }
        Command::Beater { group, p1, budget } => {
            let g = build_group(group)?;
            let a = parse_pattern(&g, p1)?;
            let candidates = pattern::enumerate_patterns_with_budget(&g, a.len(), *budget)?;
            let (beater, value) = game::best_beater_among(&a, &candidates)?;
            let family = game::bob_shift_candidates(&a)?;
            let heuristic = game::bob_pick_heuristic(&a);
            Ok(Output {
                config: json!({
                    "command": "beater", "group": group, "p1": p1, "budget": budget,
                }),
                body: json!({
                    "p1": a.to_string(),
                    "best_beater": beater.to_string(),
                    "bob_odds": format!("{}:{}", value.numer(), value.denom()),
                    "shift_candidates": family.iter().map(Pattern::to_string).collect::<Vec<_>>(),
                    "beater_in_shift_family": family.contains(&beater),
                    "heuristic_first_letter": ((b'a' + heuristic) as char).to_string(),
                    "tie_break": "lexicographically least pattern",
                }),
                table: None,
                dot: None,
            })
        }
        Command::Graph {
            group,
            length,
            budget,
        } => {
            let g = build_group(group)?;
            let graph = game::beater_graph_with_budget(&g, *length, *budget)?;
            let cycle = game::find_nontransitive_cycle(&graph)
                .map(|c| c.iter().map(Pattern::to_string).collect::<Vec<_>>());
            let rows = graph
                .edges
                .iter()
                .map(|e| {
                    vec![
                        graph.nodes[e.from].to_string(),
                        graph.nodes[e.to].to_string(),
                        format!("{}:{}", e.odds.0, e.odds.1),
                    ]
                })
                .collect::<Vec<_>>();
            let mut body = match graph.to_json() {
                Value::Object(map) => map,
                _ => unreachable!(),
            };
            body.insert("cycle".into(), json!(cycle));
            Ok(Output {
                config: json!({
                    "command": "graph", "group": group,
                    "length": length, "budget": budget,
                }),
                body: Value::Object(body),
                table: Some((vec!["from", "to", "bob_odds"], rows)),
                dot: Some(graph.to_dot()),
            })
        }
        Command::Signature {
            group,
            pattern,
            lift,
        } => {
            let g = build_group(group)?;
            let p = parse_pattern(&g, pattern)?;
            let sig = cyclic::signature(&p)?;
            let mut body = serde_json::Map::new();
            body.insert("pattern".into(), json!(p.to_string()));
            body.insert(
                "signature".into(),
                json!(sig.word().to_upper_string()),
            );
            body.insert("residues".into(), json!(sig.residues()));
            if let Some(first) = lift {
                let first_word = Word::parse(first, g.alphabet_size())?;
                if first_word.len() != 1 {
                    return Err(Error::InvalidInput("--lift takes a single letter".into()));
                }
                let lifted = cyclic::lift(&sig, first_word.letters()[0]);
                body.insert("lifted".into(), json!(lifted.to_upper_string()));
            }
            Ok(Output {
                config: json!({
                    "command": "signature", "group": group,
                    "pattern": pattern, "lift": lift,
                }),
                body: Value::Object(body),
                table: None,
                dot: None,
            })
        }
        Command::Oracle { command } => oracle_dispatch(cli, command),
    }
}

fn oracle_dispatch(cli: &Cli, command: &OracleCommand) -> Result<Output, Error> {
    match command {
        OracleCommand::Counts {
            group,
            patterns,
            n,
            budget,
        } => {
            let g = build_group(group)?;
            let list = parse_pattern_set(&g, patterns)?;
            let set = ReducedPatternSet::new(list.clone())?;
            let sol = genfunc::solve_patterns(&set)?;
            let budget = OracleBudget { max_steps: *budget };
            let (avoiding, first) = oracle::brute_pattern_counts(&list, *n, &budget)?;
            let exact_avoiding = sol.avoiding.series_coefficients(*n)?;
            let mut rows = Vec::new();
            let mut agree = true;
            for k in 0..=*n {
                let exact = rational_string(&exact_avoiding[k]);
                agree &= exact == avoiding[k].to_string();
                rows.push(vec![
                    "avoiding".to_string(),
                    k.to_string(),
                    exact,
                    avoiding[k].to_string(),
                ]);
            }
            let mut first_json = Vec::new();
            for (i, p) in list.iter().enumerate() {
                let exact_first = sol.first_occurrence[i].series_coefficients(*n)?;
                for k in 0..=*n {
                    let exact = rational_string(&exact_first[k]);
                    agree &= exact == first[i][k].to_string();
                    rows.push(vec![
                        p.to_string(),
                        k.to_string(),
                        exact,
                        first[i][k].to_string(),
                    ]);
                }
                first_json.push(json!({
                    "pattern": p.to_string(),
                    "brute": first[i],
                }));
            }
            Ok(Output {
                config: json!({
                    "command": "oracle counts", "group": group,
                    "patterns": patterns, "n": n, "budget": budget.max_steps,
                }),
                body: json!({
                    "avoiding_exact": exact_avoiding.iter().map(rational_string).collect::<Vec<_>>(),
                    "avoiding_brute": avoiding,
                    "first_brute": first_json,
                    "agree": agree,
                }),
                table: Some((vec!["series", "n", "exact", "brute"], rows)),
                dot: None,
            })
        }
        OracleCommand::Game {
            group,
            p1,
            p2,
            trials,
            seed,
        } => {
            let g = build_group(group)?;
            let a = parse_pattern(&g, p1)?;
            let b = parse_pattern(&g, p2)?;
            let report = game::odds(&a, &b)?;
            let sample = oracle::simulate_game(&a, &b, *trials, *seed)?;
            let mut map = serde_json::Map::new();
            map.insert("p1".into(), json!(a.to_string()));
            map.insert("p2".into(), json!(b.to_string()));
            rational_json(cli, &mut map, "exact_probability", &report.alice_win_probability);
            rational_json(cli, &mut map, "exact_expected_length", &report.expected_length);
            map.insert("empirical_frequency".into(), json!(sample.p1_frequency()));
            map.insert("empirical_mean_length".into(), json!(sample.mean_length()));
            map.insert("p1_wins".into(), json!(sample.p1_wins));
            map.insert("p2_wins".into(), json!(sample.p2_wins));
            map.insert("trials".into(), json!(sample.trials));
            map.insert("seed".into(), json!(sample.seed));
            Ok(Output {
                config: json!({
                    "command": "oracle game", "group": group, "p1": p1, "p2": p2,
                    "trials": trials, "seed": seed,
                }),
                body: Value::Object(map),
                table: None,
                dot: None,
            })
        }
        OracleCommand::Wait {
            group,
            pattern,
            trials,
            seed,
        } => {
            let g = build_group(group)?;
            let p = parse_pattern(&g, pattern)?;
            let exact = game::wait_time(&p);
            let sample = oracle::simulate_wait(&p, *trials, *seed)?;
            let mut map = serde_json::Map::new();
            map.insert("pattern".into(), json!(p.to_string()));
            rational_json(cli, &mut map, "exact_wait", &exact);
            map.insert("empirical_mean".into(), json!(sample.mean()));
            map.insert("standard_error".into(), json!(sample.standard_error()));
            map.insert("trials".into(), json!(sample.trials));
            map.insert("seed".into(), json!(sample.seed));
            Ok(Output {
                config: json!({
                    "command": "oracle wait", "group": group, "pattern": pattern,
                    "trials": trials, "seed": seed,
                }),
                body: Value::Object(map),
                table: None,
                dot: None,
            })
        }
    }
}
