//! Independent ground truth: exhaustive avoiding / first-occurrence counts
//! by depth-first extension over a multi-word matching automaton, and seeded
//! Monte Carlo simulation of games and wait times.
//!
//! Everything here is deliberately separate from the generating-function
//! path it validates.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::word::Word;

/// Budget for exhaustive enumeration, counted in letter steps.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_steps: 100_000_000,
        }
    }
}

/// xorshift64* generator.
///
/// State update `x ^= x >> 12; x ^= x << 25; x ^= x >> 27`, output
/// `x * 0x2545F4914F6CDD1D`. A zero seed is replaced by
/// `0x9E3779B97F4A7C15` so the state never sticks at zero. The constants are
/// fixed so any implementation can reproduce the streams bit for bit.
#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        XorShift64Star {
            state: if seed == 0 { 0x9E37_79B9_7F4A_7C15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform letter in `[0, q)`. The modulo bias is below `q / 2^64` and
    /// irrelevant at the 3-standard-error tolerances used here.
    pub fn next_letter(&mut self, q: usize) -> u8 {
        (self.next_u64() % q as u64) as u8
    }
}

/// Failure-function automaton over a word set (Aho-Corasick style), with one
/// state per trie node and a per-state "some set word ends here" marker.
///
/// For a reduced set at most one word can end at any stream position, so the
/// marker stores that word's index directly.
#[derive(Debug)]
pub struct MatchAutomaton {
    q: usize,
    /// `next[state * q + letter] -> state`, failure links resolved.
    next: Vec<u32>,
    /// Index of the set word ending at this state, if any.
    hit: Vec<Option<u32>>,
}

impl MatchAutomaton {
    pub fn build(words: &[Word], q: usize) -> Result<Self> {
        for w in words {
            w.check_alphabet(q)?;
            if w.is_empty() {
                return Err(Error::InvalidInput("empty word in automaton".into()));
            }
        }
        // Trie construction.
        let mut children: Vec<Vec<u32>> = vec![vec![u32::MAX; q]];
        let mut terminal: Vec<Option<u32>> = vec![None];
        for (wi, w) in words.iter().enumerate() {
            let mut state = 0usize;
            for &l in w.letters() {
                let slot = children[state][l as usize];
                state = if slot == u32::MAX {
                    children.push(vec![u32::MAX; q]);
                    terminal.push(None);
                    let new = (children.len() - 1) as u32;
                    children[state][l as usize] = new;
                    new as usize
                } else {
                    slot as usize
                };
            }
            terminal[state] = Some(wi as u32);
        }
        // Breadth-first failure links, flattened into a dense table.
        let n = children.len();
        let mut fail = vec![0u32; n];
        let mut hit = terminal.clone();
        let mut order: Vec<u32> = Vec::with_capacity(n);
        let mut next = vec![0u32; n * q];
        for l in 0..q {
            let child = children[0][l];
            if child != u32::MAX {
                next[l] = child;
                order.push(child);
            }
        }
        let mut head = 0;
        while head < order.len() {
            let state = order[head] as usize;
            head += 1;
            let f = fail[state] as usize;
            if hit[state].is_none() {
                hit[state] = hit[f];
            }
            for l in 0..q {
                let child = children[state][l];
                if child == u32::MAX {
                    next[state * q + l] = next[f * q + l];
                } else {
                    fail[child as usize] = next[f * q + l];
                    next[state * q + l] = child;
                    order.push(child);
                }
            }
        }
        Ok(MatchAutomaton { q, next, hit })
    }

    pub fn start(&self) -> u32 {
        0
    }

    #[inline]
    pub fn step(&self, state: u32, letter: u8) -> u32 {
        self.next[state as usize * self.q + letter as usize]
    }

    /// Which set word (if any) ends at the stream position reaching `state`.
    #[inline]
    pub fn hit(&self, state: u32) -> Option<u32> {
        self.hit[state as usize]
    }
}

/// Exact counts `A(0..=n)` of strings avoiding every word in the set, by
/// depth-first extension with incremental automaton matching.
pub fn brute_avoiding_counts(
    words: &[Word],
    q: usize,
    n: usize,
    budget: &OracleBudget,
) -> Result<Vec<u64>> {
    let automaton = MatchAutomaton::build(words, q)?;
    let mut avoiding = vec![0u64; n + 1];
    avoiding[0] = 1; // the empty string avoids everything (words are nonempty)
    let mut steps = 0u64;
    let mut stack: Vec<(u32, usize)> = vec![(automaton.start(), 0)];
    while let Some((state, depth)) = stack.pop() {
        if depth == n {
            continue;
        }
        for letter in 0..q as u8 {
            steps += 1;
            if steps > budget.max_steps {
                return Err(Error::BudgetExceeded {
                    budget: budget.max_steps,
                });
            }
            let next = automaton.step(state, letter);
            if automaton.hit(next).is_some() {
                continue;
            }
            avoiding[depth + 1] += 1;
            stack.push((next, depth + 1));
        }
    }
    Ok(avoiding)
}

/// Exact count of length-`n` strings avoiding the set.
pub fn brute_avoiding(words: &[Word], q: usize, n: usize, budget: &OracleBudget) -> Result<u64> {
    Ok(brute_avoiding_counts(words, q, n, budget)?[n])
}

/// Exact counts `T(0..=n)` of strings avoiding the set except for a final
/// occurrence of a word whose index lies in `targets`.
pub fn brute_first_occurrence_counts(
    words: &[Word],
    targets: &[usize],
    q: usize,
    n: usize,
    budget: &OracleBudget,
) -> Result<Vec<u64>> {
    let automaton = MatchAutomaton::build(words, q)?;
    let is_target: Vec<bool> = {
        let mut v = vec![false; words.len()];
        for &t in targets {
            v[t] = true;
        }
        v
    };
    let mut first = vec![0u64; n + 1];
    let mut steps = 0u64;
    let mut stack: Vec<(u32, usize)> = vec![(automaton.start(), 0)];
    while let Some((state, depth)) = stack.pop() {
        if depth == n {
            continue;
        }
        for letter in 0..q as u8 {
            steps += 1;
            if steps > budget.max_steps {
                return Err(Error::BudgetExceeded {
                    budget: budget.max_steps,
                });
            }
            let next = automaton.step(state, letter);
            match automaton.hit(next) {
                Some(wi) => {
                    // First match on this branch; count it, never extend it.
                    if is_target[wi as usize] {
                        first[depth + 1] += 1;
                    }
                }
                None => stack.push((next, depth + 1)),
            }
        }
    }
    Ok(first)
}

pub fn brute_first_occurrence(
    words: &[Word],
    targets: &[usize],
    q: usize,
    n: usize,
    budget: &OracleBudget,
) -> Result<u64> {
    Ok(brute_first_occurrence_counts(words, targets, q, n, budget)?[n])
}

/// Avoiding / first-occurrence counts for a pattern set: patterns expand to
/// their full orbit word sets first.
pub fn brute_pattern_counts(
    patterns: &[Pattern],
    n: usize,
    budget: &OracleBudget,
) -> Result<(Vec<u64>, Vec<Vec<u64>>)> {
    let q = patterns[0].group().alphabet_size();
    let mut words = Vec::new();
    let mut spans = Vec::new();
    for p in patterns {
        let orbit = p.orbit();
        spans.push((words.len(), words.len() + orbit.len()));
        words.extend(orbit);
    }
    let avoiding = brute_avoiding_counts(&words, q, n, budget)?;
    let mut first = Vec::with_capacity(patterns.len());
    for &(start, end) in &spans {
        let targets: Vec<usize> = (start..end).collect();
        first.push(brute_first_occurrence_counts(
            &words, &targets, q, n, budget,
        )?);
    }
    Ok((avoiding, first))
}

/// Outcome of a simulated two-pattern match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSample {
    pub trials: u64,
    pub p1_wins: u64,
    pub p2_wins: u64,
    pub total_length: u64,
    pub seed: u64,
}

impl GameSample {
    pub fn p1_frequency(&self) -> f64 {
        self.p1_wins as f64 / self.trials as f64
    }

    pub fn mean_length(&self) -> f64 {
        self.total_length as f64 / self.trials as f64
    }
}

/// Trials per shard; shards get seeds `seed + shard_index` and merge by
/// summation, so the result is independent of thread scheduling.
const SHARD_SIZE: u64 = 65_536;

fn shard_plan(trials: u64, seed: u64) -> Vec<(u64, u64)> {
    (0..trials.div_ceil(SHARD_SIZE))
        .map(|i| {
            (
                seed.wrapping_add(i),
                (trials - i * SHARD_SIZE).min(SHARD_SIZE),
            )
        })
        .collect()
}

/// Deterministic Monte Carlo estimate of a two-pattern game.
pub fn simulate_game(p1: &Pattern, p2: &Pattern, trials: u64, seed: u64) -> Result<GameSample> {
    assert!(trials >= 1);
    if !p1.same_group(p2) {
        return Err(Error::GroupMismatch);
    }
    let q = p1.group().alphabet_size();
    let orbit1 = p1.orbit();
    let split = orbit1.len();
    let mut words = orbit1;
    words.extend(p2.orbit());
    let automaton = MatchAutomaton::build(&words, q)?;

    let shards = shard_plan(trials, seed);
    let (p1_wins, p2_wins, total_length) = shards
        .par_iter()
        .map(|&(shard_seed, len)| {
            let mut rng = XorShift64Star::new(shard_seed);
            let mut wins = (0u64, 0u64);
            let mut length = 0u64;
            for _ in 0..len {
                let mut state = automaton.start();
                loop {
                    length += 1;
                    state = automaton.step(state, rng.next_letter(q));
                    if let Some(wi) = automaton.hit(state) {
                        if (wi as usize) < split {
                            wins.0 += 1;
                        } else {
                            wins.1 += 1;
                        }
                        break;
                    }
                }
            }
            (wins.0, wins.1, length)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));

    Ok(GameSample {
        trials,
        p1_wins,
        p2_wins,
        total_length,
        seed,
    })
}

/// Empirical wait-time sample for one pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct WaitSample {
    pub trials: u64,
    pub total: u64,
    pub total_squares: u128,
    pub seed: u64,
}

impl WaitSample {
    pub fn mean(&self) -> f64 {
        self.total as f64 / self.trials as f64
    }

    /// Standard error of the empirical mean.
    pub fn standard_error(&self) -> f64 {
        let n = self.trials as f64;
        let mean = self.mean();
        let var = (self.total_squares as f64 / n - mean * mean) * n / (n - 1.0);
        (var / n).sqrt()
    }
}

/// Deterministic Monte Carlo estimate of a pattern's expected wait time.
pub fn simulate_wait(p: &Pattern, trials: u64, seed: u64) -> Result<WaitSample> {
    assert!(trials >= 1);
    let q = p.group().alphabet_size();
    let words = p.orbit();
    let automaton = MatchAutomaton::build(&words, q)?;

    let shards = shard_plan(trials, seed);
    let (total, total_squares) = shards
        .par_iter()
        .map(|&(shard_seed, len)| {
            let mut rng = XorShift64Star::new(shard_seed);
            let mut sum = 0u64;
            let mut squares = 0u128;
            for _ in 0..len {
                let mut state = automaton.start();
                let mut steps = 0u64;
                loop {
                    steps += 1;
                    state = automaton.step(state, rng.next_letter(q));
                    if automaton.hit(state).is_some() {
                        break;
                    }
                }
                sum += steps;
                squares += (steps as u128) * (steps as u128);
            }
            (sum, squares)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    Ok(WaitSample {
        trials,
        total,
        total_squares,
        seed,
    })
}
