//! Penney-game analysis on patterns: wait times, odds, expected game length,
//! best-beater search, beater graphs, non-transitive cycles, and the
//! extremal wait-time scans.

use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genfunc::pattern_reduction_violation;
use crate::group::PermutationGroup;
use crate::pattern::{
    cln_pattern, enumerate_patterns_with_budget, pattern_periods, Pattern, DEFAULT_ENUM_BUDGET,
};
use crate::rational::rational_string;
use crate::word::Word;

/// Expected wait time of `p`: `(q / r) * pLp`.
///
/// For words (trivial group) this is `q * wLw`; at `q = 2` it is twice the
/// Conway leading number.
pub fn wait_time(p: &Pattern) -> BigRational {
    let q = BigRational::from_integer(p.group().alphabet_size().into());
    let r = BigRational::from_integer(p.orbit_size().into());
    cln_pattern(p, p).expect("same group") * q / r
}

/// How a report's numbers were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Exact closed forms from Conway leading numbers.
    ClosedForm,
    /// Seeded Monte Carlo estimates.
    Oracle,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Oracle => "oracle",
        })
    }
}

/// Full exact report for a two-pattern matchup.
#[derive(Debug, Clone)]
pub struct GameReport {
    pub p1: Pattern,
    pub p2: Pattern,
    /// Alice's odds as a reduced integer pair (alice : bob).
    pub odds: (BigInt, BigInt),
    pub alice_win_probability: BigRational,
    pub expected_length: BigRational,
    pub wait1: BigRational,
    pub wait2: BigRational,
    pub provenance: Provenance,
}

impl GameReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p1": self.p1.to_string(),
            "p2": self.p2.to_string(),
            "odds": format!("{}:{}", self.odds.0, self.odds.1),
            "alice_win_probability": rational_string(&self.alice_win_probability),
            "expected_length": rational_string(&self.expected_length),
            "wait1": rational_string(&self.wait1),
            "wait2": rational_string(&self.wait2),
            "provenance": self.provenance.to_string(),
        })
    }
}

/// The four CLNs of a matchup, as exact integers.
struct MatchupClns {
    l11: BigInt,
    l12: BigInt,
    l21: BigInt,
    l22: BigInt,
}

fn matchup_clns(p1: &Pattern, p2: &Pattern) -> Result<MatchupClns> {
    let to_int = |r: BigRational| r.to_integer();
    Ok(MatchupClns {
        l11: to_int(cln_pattern(p1, p1)?),
        l12: to_int(cln_pattern(p1, p2)?),
        l21: to_int(cln_pattern(p2, p1)?),
        l22: to_int(cln_pattern(p2, p2)?),
    })
}

/// Alice's odds of winning as an exact ratio:
/// `(r1 / r2) * (p2Lp2 - p2Lp1) / (p1Lp1 - p1Lp2)`.
fn alice_odds_ratio(p1: &Pattern, p2: &Pattern, clns: &MatchupClns) -> Result<BigRational> {
    let num = BigInt::from(p1.orbit_size()) * (&clns.l22 - &clns.l21);
    let den = BigInt::from(p2.orbit_size()) * (&clns.l11 - &clns.l12);
    if den.is_zero() || num.is_zero() {
        return Err(Error::DegenerateMatchup);
    }
    Ok(BigRational::new(num, den))
}

/// Expected game length:
/// `q * (L11 L22 - L12 L21) / (r1 (L22 - L21) + r2 (L11 - L12))`.
fn expected_length_from_clns(
    p1: &Pattern,
    p2: &Pattern,
    clns: &MatchupClns,
) -> Result<BigRational> {
    let q = BigInt::from(p1.group().alphabet_size());
    let num = &q * (&clns.l11 * &clns.l22 - &clns.l12 * &clns.l21);
    let den = BigInt::from(p1.orbit_size()) * (&clns.l22 - &clns.l21)
        + BigInt::from(p2.orbit_size()) * (&clns.l11 - &clns.l12);
    if den.is_zero() {
        return Err(Error::DegenerateMatchup);
    }
    Ok(BigRational::new(num, den))
}

fn require_reduced_pair(p1: &Pattern, p2: &Pattern) -> Result<()> {
    if !p1.same_group(p2) {
        return Err(Error::GroupMismatch);
    }
    if p1 == p2 {
        return Err(Error::NotReduced {
            container: p1.to_string(),
            contained: p2.to_string(),
        });
    }
    let pair = [p1.clone(), p2.clone()];
    if let Some((container, contained)) = pattern_reduction_violation(&pair) {
        return Err(Error::NotReduced {
            container: container.to_string(),
            contained: contained.to_string(),
        });
    }
    Ok(())
}

/// Exact odds and expected length for Alice's `p1` against Bob's `p2`.
pub fn odds(p1: &Pattern, p2: &Pattern) -> Result<GameReport> {
    require_reduced_pair(p1, p2)?;
    let clns = matchup_clns(p1, p2)?;
    let ratio = alice_odds_ratio(p1, p2, &clns)?;
    if ratio.is_negative() {
        return Err(Error::DegenerateMatchup);
    }
    let odds = (ratio.numer().clone(), ratio.denom().clone());
    let alice_win_probability =
        BigRational::new(odds.0.clone(), &odds.0 + &odds.1);
    let expected_length = expected_length_from_clns(p1, p2, &clns)?;
    debug_assert!(expected_length > BigRational::zero());
    Ok(GameReport {
        p1: p1.clone(),
        p2: p2.clone(),
        odds,
        alice_win_probability,
        expected_length,
        wait1: wait_time(p1),
        wait2: wait_time(p2),
        provenance: Provenance::ClosedForm,
    })
}

/// Expected game length alone.
pub fn expected_game_length(p1: &Pattern, p2: &Pattern) -> Result<BigRational> {
    require_reduced_pair(p1, p2)?;
    let clns = matchup_clns(p1, p2)?;
    expected_length_from_clns(p1, p2, &clns)
}

/// Bob's odds of winning with `p2` against a fixed `p1`; lean path used by
/// the exhaustive searches (no report construction).
fn bob_odds_value(p1: &Pattern, p2: &Pattern, l11: &BigInt) -> Result<BigRational> {
    let l12 = cln_pattern(p1, p2)?.to_integer();
    let l21 = cln_pattern(p2, p1)?.to_integer();
    let l22 = cln_pattern(p2, p2)?.to_integer();
    let num = BigInt::from(p2.orbit_size()) * (l11 - &l12);
    let den = BigInt::from(p1.orbit_size()) * (&l22 - &l21);
    if den.is_zero() {
        return Err(Error::DegenerateMatchup);
    }
    Ok(BigRational::new(num, den))
}

/// Exhaustive best beater: the `p2` maximizing Bob's odds over all patterns
/// of `p1`'s length, ties broken by lexicographically least `p2`.
pub fn best_beater(p1: &Pattern) -> Result<(Pattern, BigRational)> {
    let candidates =
        enumerate_patterns_with_budget(p1.group(), p1.len(), DEFAULT_ENUM_BUDGET)?;
    best_beater_among(p1, &candidates)
}

/// Best beater over a precomputed candidate list (candidates of the wrong
/// length or equal to `p1` are skipped).
pub fn best_beater_among(
    p1: &Pattern,
    candidates: &[Pattern],
) -> Result<(Pattern, BigRational)> {
    let l11 = cln_pattern(p1, p1)?.to_integer();
    let mut best: Option<(Pattern, BigRational)> = None;
    for p2 in candidates {
        if p2 == p1 || p2.len() != p1.len() {
            continue;
        }
        let value = bob_odds_value(p1, p2, &l11)?;
        let better = match &best {
            Some((_, current)) => value > *current,
            None => true,
        };
        if better {
            best = Some((p2.clone(), value));
        }
    }
    best.ok_or_else(|| Error::InvalidInput("no opposing pattern exists".into()))
}

/// The candidate family from the shift construction: prepend each letter to
/// `p1(1, l-1)`, canonicalize, and deduplicate. `p1` itself is excluded.
pub fn bob_shift_candidates(p1: &Pattern) -> Result<Vec<Pattern>> {
    if p1.len() < 2 {
        return Err(Error::LengthTooShort { min: 2 });
    }
    let group = p1.group();
    let head = p1.canonical().slice(0, p1.len() - 1);
    let mut out: Vec<Pattern> = Vec::new();
    for letter in 0..group.alphabet_size() as u8 {
        let mut letters = Vec::with_capacity(p1.len());
        letters.push(letter);
        letters.extend_from_slice(head.letters());
        let candidate = Pattern::of(group, &Word::new(letters))?;
        if &candidate != p1 && !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out.sort();
    Ok(out)
}

/// First-letter heuristic from the constructive strategy: match `p1`'s first
/// letter unless `p1(s) = p1(s+1)` for the least period `s`, in which case
/// avoid it. Advisory only; the exhaustive search is authoritative.
pub fn bob_pick_heuristic(p1: &Pattern) -> u8 {
    let letters = p1.canonical().letters();
    match pattern_periods(p1).first() {
        Some(&s) if letters[s - 1] == letters[s] => {
            (0..p1.group().alphabet_size() as u8)
                .find(|&l| l != letters[0])
                .unwrap_or(letters[0])
        }
        _ => letters[0],
    }
}

/// One edge of the beater graph.
#[derive(Debug, Clone)]
pub struct BeaterEdge {
    pub from: usize,
    pub to: usize,
    /// Bob's winning odds, reduced.
    pub odds: (BigInt, BigInt),
}

/// Every pattern of a given length with its best beater.
#[derive(Debug, Clone)]
pub struct BeaterGraph {
    pub nodes: Vec<Pattern>,
    pub edges: Vec<BeaterEdge>,
}

impl BeaterGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph beaters {\n");
        for edge in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}:{}\"];\n",
                self.nodes[edge.from], self.nodes[edge.to], edge.odds.0, edge.odds.1
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "from": self.nodes[e.from].to_string(),
                "to": self.nodes[e.to].to_string(),
                "odds": format!("{}:{}", e.odds.0, e.odds.1),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn edge_from(&self, node: usize) -> Option<&BeaterEdge> {
        self.edges.iter().find(|e| e.from == node)
    }
}

/// Best beater for every pattern of length `l`; per-node searches run in
/// parallel and results are collected in node order.
pub fn beater_graph(group: &Arc<PermutationGroup>, l: usize) -> Result<BeaterGraph> {
    beater_graph_with_budget(group, l, DEFAULT_ENUM_BUDGET)
}

pub fn beater_graph_with_budget(
    group: &Arc<PermutationGroup>,
    l: usize,
    budget: u64,
) -> Result<BeaterGraph> {
    let nodes = enumerate_patterns_with_budget(group, l, budget)?;
    if nodes.len() < 2 {
        return Ok(BeaterGraph {
            nodes,
            edges: vec![],
        });
    }
    let edges: Result<Vec<BeaterEdge>> = nodes
        .par_iter()
        .enumerate()
        .map(|(from, p1)| {
            let (beater, value) = best_beater_among(p1, &nodes)?;
            let to = nodes.binary_search(&beater).expect("beater is a node");
            Ok(BeaterEdge {
                from,
                to,
                odds: (value.numer().clone(), value.denom().clone()),
            })
        })
        .collect();
    Ok(BeaterGraph {
        nodes,
        edges: edges?,
    })
}

/// Walk unique out-edges from the least node until a node repeats; the
/// discovered cycle is rotated to start at its least pattern.
pub fn find_nontransitive_cycle(graph: &BeaterGraph) -> Option<Vec<Pattern>> {
    if graph.edges.is_empty() {
        return None;
    }
    let mut position = vec![usize::MAX; graph.nodes.len()];
    let mut path: Vec<usize> = Vec::new();
    let mut current = 0usize;
    loop {
        if position[current] != usize::MAX {
            let cycle: Vec<usize> = path[position[current]..].to_vec();
            let least = cycle
                .iter()
                .enumerate()
                .min_by_key(|&(_, &n)| &graph.nodes[n])
                .map(|(i, _)| i)
                .unwrap();
            return Some(
                cycle[least..]
                    .iter()
                    .chain(cycle[..least].iter())
                    .map(|&n| graph.nodes[n].clone())
                    .collect(),
            );
        }
        position[current] = path.len();
        path.push(current);
        current = graph.edge_from(current)?.to;
    }
}

/// Exhaustive extremal wait times for patterns of length `l`; ties resolved
/// to the lexicographically least achiever.
pub fn extremal_wait(
    group: &Arc<PermutationGroup>,
    l: usize,
) -> Result<((Pattern, BigRational), (Pattern, BigRational))> {
    let patterns = enumerate_patterns_with_budget(group, l, DEFAULT_ENUM_BUDGET)?;
    let mut max: Option<(Pattern, BigRational)> = None;
    let mut min: Option<(Pattern, BigRational)> = None;
    for p in patterns {
        let wait = wait_time(&p);
        if max.as_ref().is_none_or(|(_, w)| wait > *w) {
            max = Some((p.clone(), wait.clone()));
        }
        if min.as_ref().is_none_or(|(_, w)| wait < *w) {
            min = Some((p, wait));
        }
    }
    Ok((max.unwrap(), min.unwrap()))
}

/// One row of an exhaustive odds table: Bob's pattern and his odds.
#[derive(Debug, Clone)]
pub struct OddsRow {
    pub pattern: Pattern,
    pub bob_odds: (BigInt, BigInt),
}

/// Report of the all-distinct-letters advantage check.
#[derive(Debug, Clone)]
pub struct AliceAdvantageReport {
    pub alice: Pattern,
    pub rows: Vec<OddsRow>,
}

/// For symmetric groups with `l < (q + 2) / 2`: verify exhaustively that the
/// all-distinct pattern beats every other same-length pattern, returning the
/// full odds table.
pub fn alice_advantage_check(
    group: &Arc<PermutationGroup>,
    l: usize,
) -> Result<AliceAdvantageReport> {
    let q = group.alphabet_size();
    if 2 * l >= q + 2 {
        return Err(Error::InvalidInput(format!(
            "advantage check requires l < (q + 2) / 2; got l = {l}, q = {q}"
        )));
    }
    let alice = Pattern::of(group, &Word::new((0..l as u8).collect()))?;
    let l11 = cln_pattern(&alice, &alice)?.to_integer();
    let mut rows = Vec::new();
    for p2 in enumerate_patterns_with_budget(group, l, DEFAULT_ENUM_BUDGET)? {
        if p2 == alice {
            continue;
        }
        let value = bob_odds_value(&alice, &p2, &l11)?;
        if value >= BigRational::one() {
            return Err(Error::HypothesisViolated {
                counterexample: p2.to_string(),
                odds: rational_string(&value),
            });
        }
        rows.push(OddsRow {
            pattern: p2,
            bob_odds: (value.numer().clone(), value.denom().clone()),
        });
    }
    Ok(AliceAdvantageReport { alice, rows })
}
