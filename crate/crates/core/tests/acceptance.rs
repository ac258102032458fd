//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line and listing every divergent value on failure.

use std::sync::Arc;

use num::{BigInt, BigRational, One};

use penney_core::cyclic::{cln_identity_check, count_identity_check, signature};
use penney_core::game::{
    alice_advantage_check, beater_graph, best_beater, bob_shift_candidates,
    find_nontransitive_cycle, odds, wait_time,
};
use penney_core::genfunc::{
    conservation_at_inverse_q, solve_patterns, solve_words, ReducedPatternSet, ReducedWordSet,
};
use penney_core::group::PermutationGroup;
use penney_core::oracle::{
    brute_avoiding_counts, brute_first_occurrence_counts, brute_pattern_counts, simulate_game,
    simulate_wait, OracleBudget, XorShift64Star,
};
use penney_core::pattern::{
    correlate_patterns, correlate_patterns_orbit_sum, enumerate_patterns, min_cln_search, Pattern,
};
use penney_core::rational::{Poly, RationalFunction};
use penney_core::word::{cln_word, correlate, word_periods, Word};

fn group(dsl: &str) -> Arc<PermutationGroup> {
    Arc::new(PermutationGroup::from_dsl(dsl).unwrap())
}

fn pat(g: &Arc<PermutationGroup>, s: &str) -> Pattern {
    Pattern::parse(g, s).unwrap()
}

fn w2(s: &str) -> Word {
    Word::parse(s, 2).unwrap()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(Poly::from_integers(num), Poly::from_integers(den))
}

fn check(failures: &mut Vec<String>, ok: bool, label: &str, detail: String) {
    if !ok {
        failures.push(format!("{label}: {detail}"));
    }
}

fn finish(criterion: usize, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS");
    } else {
        println!("criterion {criterion}: FAIL — {}", failures.join("; "));
        panic!(
            "criterion {criterion} failed:\n  {}",
            failures.join("\n  ")
        );
    }
}

#[test]
fn criterion_1_word_layer_golden_values() {
    let mut failures = Vec::new();

    let c = correlate(&w2("HTHT"), &w2("HTHT"));
    check(
        &mut failures,
        c.entries() == [1, 0, 1, 0],
        "C(HTHT,HTHT)",
        format!("{:?}", c.entries()),
    );
    let cln = cln_word(&w2("HTHT"), &w2("HTHT"), 2);
    check(&mut failures, cln == ratio(10, 1), "HTHT CLN", cln.to_string());
    let cln = cln_word(&w2("HTH"), &w2("HTHT"), 2);
    check(&mut failures, cln == ratio(5, 1), "HTH-vs-HTHT CLN", cln.to_string());

    let t2 = group("T:2");
    let wait = wait_time(&pat(&t2, "HTHT"));
    check(&mut failures, wait == ratio(20, 1), "HTHT wait", wait.to_string());
    let wait = wait_time(&pat(&t2, "HHH"));
    check(&mut failures, wait == ratio(14, 1), "HHH wait", wait.to_string());

    for s in ["HHHHT", "HHHTT", "HHTHT", "HHTTT", "HTHTT", "HTTTT"] {
        let word = w2(s);
        let ok = word_periods(&word).is_empty()
            && cln_word(&word, &word, 2) == ratio(16, 1);
        check(&mut failures, ok, s, "CLN != 16".into());
    }

    finish(1, failures);
}

#[test]
fn criterion_2_generating_functions() {
    let mut failures = Vec::new();

    let set = ReducedWordSet::new(vec![w2("HH")], 2).unwrap();
    let sol = solve_words(&set, 2).unwrap();
    check(
        &mut failures,
        sol.avoiding == rf(&[1, 1], &[1, -1, -1]),
        "G for {HH}",
        sol.avoiding.to_string(),
    );
    check(
        &mut failures,
        sol.first_occurrence[0] == rf(&[0, 0, 1], &[1, -1, -1]),
        "G_HH",
        sol.first_occurrence[0].to_string(),
    );

    let s3 = group("S:3");
    let set = ReducedPatternSet::new(vec![pat(&s3, "abc")]).unwrap();
    let sol = solve_patterns(&set).unwrap();
    check(
        &mut failures,
        sol.avoiding == rf(&[1, 1, 2], &[1, -2, -1]),
        "G for {abc}",
        sol.avoiding.to_string(),
    );
    check(
        &mut failures,
        sol.first_occurrence[0] == rf(&[0, 0, 0, 6], &[1, -2, -1]),
        "G_abc",
        sol.first_occurrence[0].to_string(),
    );
    let series = sol.avoiding.series_coefficients(6).unwrap();
    let expect: Vec<BigRational> = [1, 3, 9, 21, 51, 123, 297]
        .iter()
        .map(|&n| BigRational::from_integer(n.into()))
        .collect();
    check(&mut failures, series == expect, "avoiding series", format!("{series:?}"));
    let series = sol.first_occurrence[0].series_coefficients(8).unwrap();
    let expect: Vec<BigRational> = [0, 0, 0, 6, 12, 30, 72, 174, 420]
        .iter()
        .map(|&n| BigRational::from_integer(n.into()))
        .collect();
    check(&mut failures, series == expect, "first series", format!("{series:?}"));

    let s2 = group("S:2");
    let set = ReducedPatternSet::new(vec![pat(&s2, "aa")]).unwrap();
    let sol = solve_patterns(&set).unwrap();
    check(
        &mut failures,
        sol.avoiding == rf(&[1, 1], &[1, -1]),
        "G for {aa}",
        sol.avoiding.to_string(),
    );
    check(
        &mut failures,
        sol.first_occurrence[0] == rf(&[0, 0, 2], &[1, -1]),
        "G_aa",
        sol.first_occurrence[0].to_string(),
    );

    finish(2, failures);
}

#[test]
fn criterion_3_odds_and_strategy() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();

    let t2 = group("T:2");
    let report = odds(&pat(&t2, "HTHT"), &pat(&t2, "THTT")).unwrap();
    check(
        &mut failures,
        report.alice_win_probability == ratio(9, 14),
        "HTHT vs THTT",
        report.alice_win_probability.to_string(),
    );

    // Stated: best beater of HTHTH is HHTHT at exactly 7:2. The beater is
    // HHTHT, but Conway's formula gives (21 - 1):(16 - 10) = 10:3, and the
    // generating-function solve and Monte Carlo agree with 10:3.
    let (beater, value) = best_beater(&pat(&t2, "HTHTH")).unwrap();
    check(
        &mut failures,
        beater == pat(&t2, "HHTHT"),
        "HTHTH beater",
        beater.to_string(),
    );
    check(
        &mut failures,
        value == ratio(7, 2),
        "HTHTH beater odds (stated 7:2)",
        format!("computed {value}"),
    );

    let graph = beater_graph(&t2, 3).unwrap();
    let cycle = find_nontransitive_cycle(&graph).unwrap();
    let names: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
    check(
        &mut failures,
        names == ["aab", "baa", "bba", "abb"],
        "classic 4-cycle",
        names.join(","),
    );

    let s4 = group("S:4");
    let graph = beater_graph(&s4, 4).unwrap();
    let expected_edges = [
        ("aabc", "abbc", "7:5"),
        ("abbc", "abcc", "2:1"),
        ("abcc", "abac", "4:3"),
        ("abac", "abcb", "3:2"),
        ("abcb", "aabc", "9:5"),
    ];
    let dot = graph.to_dot();
    for (from, to, label) in expected_edges {
        let needle = format!("\"{from}\" -> \"{to}\" [label=\"{label}\"]");
        check(
            &mut failures,
            dot.contains(&needle),
            "5-cycle edge",
            format!("missing {needle}"),
        );
    }
    let cycle = find_nontransitive_cycle(&graph).unwrap();
    let names: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
    check(
        &mut failures,
        names == ["aabc", "abbc", "abcc", "abac", "abcb"],
        "5-cycle",
        names.join(","),
    );

    let s6 = group("S:6");
    let table = alice_advantage_check(&s6, 3).unwrap();
    let rows: Vec<(String, String)> = table
        .rows
        .iter()
        .map(|r| (r.pattern.to_string(), format!("{}:{}", r.bob_odds.0, r.bob_odds.1)))
        .collect();
    let expect = [
        ("aaa", "1:14"),
        ("aab", "1:2"),
        ("aba", "1:4"),
        ("abb", "1:4"),
    ];
    check(
        &mut failures,
        rows.len() == expect.len()
            && rows
                .iter()
                .zip(expect.iter())
                .all(|((p, o), (ep, eo))| p == ep && o == eo),
        "S:6 odds table",
        format!("{rows:?}"),
    );

    let elapsed = started.elapsed();
    check(
        &mut failures,
        elapsed.as_secs() < 30,
        "runtime",
        format!("{elapsed:?}"),
    );

    finish(3, failures);
}

#[test]
fn criterion_4_pattern_layer_golden_values() {
    let mut failures = Vec::new();

    let s3 = group("S:3");
    let abc = pat(&s3, "abc");
    let weight_form = correlate_patterns(&abc, &abc).unwrap();
    let orbit_form = correlate_patterns_orbit_sum(&abc, &abc).unwrap();
    check(
        &mut failures,
        weight_form.entries() == [1, 1, 2],
        "C(abc,abc) weight form",
        format!("{:?}", weight_form.entries()),
    );
    check(
        &mut failures,
        orbit_form.entries() == [1, 1, 2],
        "C(abc,abc) orbit sum",
        format!("{:?}", orbit_form.entries()),
    );

    let bbc = Word::parse("BBC", 3).unwrap();
    let weight = s3.substring_weight(&bbc, 2, 3);
    check(&mut failures, weight == 2, "weight of C in BBC", weight.to_string());

    let s2 = group("S:2");
    let abab = pat(&s2, "abab");
    let cln = correlate_patterns(&abab, &abab).unwrap().base_q_value();
    check(&mut failures, cln == BigInt::from(15), "abab CLN", cln.to_string());
    let wait = wait_time(&abab);
    check(&mut failures, wait == ratio(15, 1), "abab wait", wait.to_string());

    let s4 = group("S:4");
    let wait = wait_time(&pat(&s4, "aabc"));
    check(&mut failures, wait == ratio(35, 3), "aabc wait", wait.to_string());

    // Stated: abbc wait 26. The CLN of abbc is 78 (forced by the 7:5 odds
    // of the aabc matchup), giving (4/24)*78 = 13; the generating-function
    // derivative and Monte Carlo agree with 13.
    let wait = wait_time(&pat(&s4, "abbc"));
    check(
        &mut failures,
        wait == ratio(26, 1),
        "abbc wait (stated 26)",
        format!("computed {wait}"),
    );

    let (value, witnesses) = min_cln_search(&s4, 5).unwrap();
    let names: Vec<String> = witnesses.iter().map(|p| p.to_string()).collect();
    check(
        &mut failures,
        value == BigInt::from(259)
            && names == ["aaaab", "aaaba", "aabab", "abaaa", "ababb", "abbbb"],
        "min CLN S:4 l=5",
        format!("{value} {names:?}"),
    );

    let (value, witnesses) = min_cln_search(&s3, 4).unwrap();
    let names: Vec<String> = witnesses.iter().map(|p| p.to_string()).collect();
    check(
        &mut failures,
        value == BigInt::from(29)
            && names == ["aaab", "aaba", "aabc", "abaa", "abbb", "abcc"],
        "min CLN S:3 l=4",
        format!("{value} {names:?}"),
    );

    finish(4, failures);
}

#[test]
fn criterion_5_oracle_equivalence() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();
    let budget = OracleBudget::default();

    let mut cases: Vec<(Arc<PermutationGroup>, Vec<Pattern>, usize)> = Vec::new();
    for q in [2usize, 3] {
        let n = 12;
        for dsl in [format!("S:{q}"), format!("Z:{q}"), format!("T:{q}")] {
            let g = group(&dsl);
            for l in 1..=4 {
                let singles = enumerate_patterns(&g, l)
                    .unwrap()
                    .into_iter()
                    .map(|p| (Arc::clone(&g), vec![p], n));
                cases.extend(singles);
            }
        }
    }
    // The paper's two-pattern matchups.
    let t2 = group("T:2");
    cases.push((
        Arc::clone(&t2),
        vec![pat(&t2, "HTHT"), pat(&t2, "THTT")],
        12,
    ));
    let s4 = group("S:4");
    cases.push((
        Arc::clone(&s4),
        vec![pat(&s4, "aabc"), pat(&s4, "abbc")],
        8,
    ));

    for (g, patterns, n) in cases {
        let set = ReducedPatternSet::new(patterns.clone()).unwrap();
        let sol = solve_patterns(&set).unwrap();
        let (avoiding, first) = brute_pattern_counts(&patterns, n, &budget).unwrap();
        let series = sol.avoiding.series_coefficients(n).unwrap();
        let label = patterns
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("+");
        for k in 0..=n {
            check(
                &mut failures,
                series[k] == BigRational::from_integer(avoiding[k].into()),
                &format!("{} avoiding[{k}]", g.spec_string()),
                format!("{label}: series {} vs brute {}", series[k], avoiding[k]),
            );
        }
        for (i, counts) in first.iter().enumerate() {
            let series = sol.first_occurrence[i].series_coefficients(n).unwrap();
            for k in 0..=n {
                check(
                    &mut failures,
                    series[k] == BigRational::from_integer(counts[k].into()),
                    &format!("{} first[{i}][{k}]", g.spec_string()),
                    format!("{label}: series {} vs brute {}", series[k], counts[k]),
                );
            }
        }
        if failures.len() > 10 {
            break; // enough detail to diagnose
        }
    }

    let elapsed = started.elapsed();
    check(
        &mut failures,
        elapsed.as_secs() < 300,
        "runtime",
        format!("{elapsed:?}"),
    );
    finish(5, failures);
}

#[test]
fn criterion_6_cyclic_reduction_identities() {
    let mut failures = Vec::new();
    let budget = OracleBudget::default();

    for q in [2usize, 3] {
        let zq = group(&format!("Z:{q}"));
        for l in 2..=5 {
            let patterns = enumerate_patterns(&zq, l).unwrap();
            for p in &patterns {
                for row in count_identity_check(p, 10, &budget).unwrap() {
                    check(
                        &mut failures,
                        row.holds(),
                        &format!("Z:{q} {p} counts"),
                        format!("n = {}: {row:?}", row.n),
                    );
                }
            }
            for p1 in &patterns {
                for p2 in &patterns {
                    let report = cln_identity_check(p1, p2).unwrap();
                    check(
                        &mut failures,
                        report.holds(),
                        &format!("Z:{q} {p1} vs {p2}"),
                        format!(
                            "pattern CLN {} vs 1 + q * {}",
                            report.pattern_cln, report.signature_cln
                        ),
                    );
                }
            }
            if failures.len() > 10 {
                break;
            }
        }
    }

    // The Z_2 beater graph on length-4 patterns maps, via signature, to the
    // word beater graph on length-3 words (same edges, same odds).
    let z2 = group("Z:2");
    let t2 = group("T:2");
    let pattern_graph = beater_graph(&z2, 4).unwrap();
    let word_graph = beater_graph(&t2, 3).unwrap();
    for edge in &pattern_graph.edges {
        let from_sig = signature(&pattern_graph.nodes[edge.from]).unwrap();
        let to_sig = signature(&pattern_graph.nodes[edge.to]).unwrap();
        let word_from = word_graph
            .nodes
            .iter()
            .position(|p| p.canonical() == from_sig.word());
        match word_from {
            Some(idx) => {
                let word_edge = word_graph.edge_from(idx).unwrap();
                let maps = word_graph.nodes[word_edge.to].canonical() == to_sig.word()
                    && word_edge.odds == edge.odds;
                check(
                    &mut failures,
                    maps,
                    "graph isomorphism",
                    format!(
                        "{} -> {} vs word {} -> {}",
                        pattern_graph.nodes[edge.from],
                        pattern_graph.nodes[edge.to],
                        word_graph.nodes[idx],
                        word_graph.nodes[word_edge.to]
                    ),
                );
            }
            None => check(
                &mut failures,
                false,
                "graph isomorphism",
                format!("signature {} not a word node", from_sig.word()),
            ),
        }
    }

    finish(6, failures);
}

#[test]
fn criterion_7_invariant_suites() {
    let mut failures = Vec::new();
    let mut rng = XorShift64Star::new(0xACCE97);

    // Group-action correlation invariance and orbit-stabilizer products.
    for dsl in ["S:3", "Z:4", "P:S:2xS:3"] {
        let g = group(dsl);
        let q = g.alphabet_size();
        for _ in 0..50 {
            let len = 1 + (rng.next_u64() as usize) % 6;
            let v = Word::new((0..len).map(|_| rng.next_letter(q)).collect());
            let w = Word::new((0..len).map(|_| rng.next_letter(q)).collect());
            let c = correlate(&v, &w);
            let invariant = g
                .elements()
                .iter()
                .all(|e| correlate(&e.act(&v), &e.act(&w)) == c);
            check(&mut failures, invariant, "correlation invariance", format!("{v} {w}"));
            let product = g.orbit(&v).len() as u64 * g.stabilizer_order(&v);
            check(
                &mut failures,
                product == g.order(),
                "orbit-stabilizer",
                format!("{v}: {product} vs {}", g.order()),
            );
        }
    }

    // Normalized-correlation symmetry.
    let s3 = group("S:3");
    for _ in 0..50 {
        let len = 1 + (rng.next_u64() as usize) % 5;
        let v = Word::new((0..len).map(|_| rng.next_letter(3)).collect());
        let w = Word::new((0..len).map(|_| rng.next_letter(3)).collect());
        let mut left = vec![0u64; len];
        let mut right = vec![0u64; len];
        for e in s3.elements() {
            for (acc, &x) in left.iter_mut().zip(correlate(&e.act(&v), &w).entries()) {
                *acc += x;
            }
            for (acc, &x) in right.iter_mut().zip(correlate(&v, &e.act(&w)).entries()) {
                *acc += x;
            }
        }
        check(
            &mut failures,
            left == right,
            "normalized symmetry",
            format!("{v} {w}"),
        );
    }

    // Subtraction lemma, exhaustive for q in {2, 3}, l <= 10.
    for q in [2usize, 3] {
        let g = group(&format!("S:{q}"));
        for l in 2..=10 {
            for p in enumerate_patterns(&g, l).unwrap() {
                let periods = penney_core::pattern::pattern_periods(&p);
                for &s in &periods {
                    for &t in &periods {
                        if s < t && l >= (q + 1) * s + t {
                            check(
                                &mut failures,
                                periods.contains(&(t - s)),
                                "subtraction lemma",
                                format!("S:{q} {p}: {t} - {s}"),
                            );
                        }
                    }
                }
            }
        }
    }

    // Probability conservation at z = 1/q.
    let z3 = group("Z:3");
    let patterns = enumerate_patterns(&z3, 3).unwrap();
    for (i, p1) in patterns.iter().enumerate() {
        for p2 in patterns.iter().skip(i + 1) {
            let sol =
                solve_patterns(&ReducedPatternSet::new(vec![p1.clone(), p2.clone()]).unwrap())
                    .unwrap();
            check(
                &mut failures,
                conservation_at_inverse_q(&sol, 3).unwrap(),
                "conservation",
                format!("{p1} vs {p2}"),
            );
        }
    }

    // Theorem-1 recurrence on brute counts: q A(n-1) - A(n) = sum T_i(n).
    let budget = OracleBudget::default();
    let words = vec![w2("HTHT"), w2("THTT")];
    let avoiding = brute_avoiding_counts(&words, 2, 12, &budget).unwrap();
    let t1 = brute_first_occurrence_counts(&words, &[0], 2, 12, &budget).unwrap();
    let t2 = brute_first_occurrence_counts(&words, &[1], 2, 12, &budget).unwrap();
    for n in 1..=12 {
        check(
            &mut failures,
            2 * avoiding[n - 1] - avoiding[n] == t1[n] + t2[n],
            "recurrence",
            format!("n = {n}"),
        );
    }

    finish(7, failures);
}

#[test]
fn criterion_8_monte_carlo_cross_checks() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();
    let trials = 1_000_000u64;
    let seed = 0x5EED_2026;

    // Win frequencies within 3 standard errors of the exact probabilities.
    let t2 = group("T:2");
    let sample = simulate_game(&pat(&t2, "HTHT"), &pat(&t2, "THTT"), trials, seed).unwrap();
    let p = 9.0 / 14.0;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    check(
        &mut failures,
        (sample.p1_frequency() - p).abs() <= 3.0 * sigma,
        "HTHT vs THTT frequency",
        format!("{} vs {p} (sigma {sigma})", sample.p1_frequency()),
    );

    let s4 = group("S:4");
    let sample = simulate_game(&pat(&s4, "aabc"), &pat(&s4, "abbc"), trials, seed).unwrap();
    let p = 5.0 / 12.0;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    check(
        &mut failures,
        (sample.p1_frequency() - p).abs() <= 3.0 * sigma,
        "aabc vs abbc frequency",
        format!("{} vs {p} (sigma {sigma})", sample.p1_frequency()),
    );

    // Mean waits within 3 standard errors.
    let s2 = group("S:2");
    let sample = simulate_wait(&pat(&s2, "abab"), trials, seed).unwrap();
    check(
        &mut failures,
        (sample.mean() - 15.0).abs() <= 3.0 * sample.standard_error(),
        "abab wait",
        format!("{} vs 15 (se {})", sample.mean(), sample.standard_error()),
    );

    let sample = simulate_wait(&pat(&s4, "aabc"), trials, seed).unwrap();
    let expect = 35.0 / 3.0;
    check(
        &mut failures,
        (sample.mean() - expect).abs() <= 3.0 * sample.standard_error(),
        "aabc wait",
        format!("{} vs {expect} (se {})", sample.mean(), sample.standard_error()),
    );

    let elapsed = started.elapsed();
    check(
        &mut failures,
        elapsed.as_secs() < 120,
        "runtime",
        format!("{elapsed:?}"),
    );
    finish(8, failures);
}

#[test]
fn criterion_9_best_beater_trend() {
    // The l -> infinity odds limit is out of reach; record the desk-scale
    // trend instead: for q = 2 words of length 4..10 the exhaustive best
    // beater always lies in the shift family with odds above 1.
    let mut failures = Vec::new();
    let t2 = group("T:2");
    for l in 4..=10 {
        let patterns = enumerate_patterns(&t2, l).unwrap();
        let mut min_odds: Option<BigRational> = None;
        for p1 in &patterns {
            let (beater, value) = best_beater(p1).unwrap();
            let family = bob_shift_candidates(p1).unwrap();
            let family_best = family
                .iter()
                .map(|p2| {
                    let l11 = correlate_patterns(p1, p1).unwrap().base_q_value();
                    let l12 = correlate_patterns(p1, p2).unwrap().base_q_value();
                    let l21 = correlate_patterns(p2, p1).unwrap().base_q_value();
                    let l22 = correlate_patterns(p2, p2).unwrap().base_q_value();
                    BigRational::new(
                        BigInt::from(p2.orbit_size()) * (l11 - l12),
                        BigInt::from(p1.orbit_size()) * (l22 - l21),
                    )
                })
                .max()
                .unwrap();
            check(
                &mut failures,
                family.contains(&beater) || value == family_best,
                "beater in shift family",
                format!("l = {l}, {p1}: beater {beater}"),
            );
            check(
                &mut failures,
                value > BigRational::one(),
                "beater odds > 1",
                format!("l = {l}, {p1}: {value}"),
            );
            min_odds = Some(match min_odds {
                Some(m) if m < value => m,
                _ => value,
            });
        }
        // Recorded, not asserted: the worst-case odds drift toward
        // q/(q-1) = 2 as l grows.
        println!("  l = {l}: min best-beater odds = {}", min_odds.unwrap());
    }
    finish(9, failures);
}

#[test]
fn criterion_9_excluded_limit_not_asserted() {
    // Guard: nothing in the suite claims the asymptotic odds value itself.
    // The shift family member THTHT... against HTHTH... has even odds at
    // every tested length, far from the limit 2, which is why only the
    // trend is recorded.
    let t2 = group("T:2");
    let p1 = pat(&t2, "HTHTH");
    let ththt = pat(&t2, "THTHT");
    let l11 = correlate_patterns(&p1, &p1).unwrap().base_q_value();
    let l12 = correlate_patterns(&p1, &ththt).unwrap().base_q_value();
    let l21 = correlate_patterns(&ththt, &p1).unwrap().base_q_value();
    let l22 = correlate_patterns(&ththt, &ththt).unwrap().base_q_value();
    assert_eq!(&l11 - &l12, &l22 - &l21);
    println!("criterion 9 (exclusion): PASS");
}
