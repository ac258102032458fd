//! Patterns (orbits of words under a group action), their correlation
//! vectors in both definitional forms, Conway leading numbers, periods, and
//! the minimum-CLN search.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::word::{correlate, Word};

/// Default cap on `q^l` during pattern enumeration.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// The canonical (lexicographically least) representative of an orbit,
/// bundled with its group, orbit size `r`, and stabilizer order.
#[derive(Debug, Clone)]
pub struct Pattern {
    canonical: Word,
    group: Arc<PermutationGroup>,
    orbit_size: u64,
    stabilizer_order: u64,
}

impl Pattern {
    /// Canonicalize `w` and fill in orbit data.
    pub fn of(group: &Arc<PermutationGroup>, w: &Word) -> Result<Self> {
        w.check_alphabet(group.alphabet_size())?;
        if w.is_empty() {
            return Err(Error::InvalidInput("empty pattern".into()));
        }
        let orbit = group.orbit(w);
        let canonical = orbit.first().expect("orbit nonempty").clone();
        let orbit_size = orbit.len() as u64;
        let stabilizer_order = group.stabilizer_order(&canonical);
        debug_assert_eq!(orbit_size * stabilizer_order, group.order());
        Ok(Pattern {
            canonical,
            group: Arc::clone(group),
            orbit_size,
            stabilizer_order,
        })
    }

    /// Parse a lowercase pattern string (any orbit member is accepted and
    /// canonicalized).
    pub fn parse(group: &Arc<PermutationGroup>, s: &str) -> Result<Self> {
        Pattern::of(group, &Word::parse(s, group.alphabet_size())?)
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn group(&self) -> &Arc<PermutationGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Orbit size `r`.
    pub fn orbit_size(&self) -> u64 {
        self.orbit_size
    }

    pub fn stabilizer_order(&self) -> u64 {
        self.stabilizer_order
    }

    pub fn orbit(&self) -> Vec<Word> {
        self.group.orbit(&self.canonical)
    }

    pub fn same_group(&self, other: &Pattern) -> bool {
        self.group.alphabet_size() == other.group.alphabet_size()
            && self.group.spec_string() == other.group.spec_string()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical.to_lower_string())
    }
}

/// Pattern identity is the canonical word plus the group identity.
impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical && self.same_group(other)
    }
}
impl Eq for Pattern {}

impl std::hash::Hash for Pattern {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
        self.group.spec_string().hash(state);
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical
            .cmp(&other.canonical)
            .then_with(|| self.group.spec_string().cmp(&other.group.spec_string()))
    }
}

/// Correlation vector between two patterns: integer entries plus the
/// normalized (divided by `r`) rational form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternCorrelation {
    entries: Vec<u64>,
    normalized: Vec<BigRational>,
    q: usize,
}

impl PatternCorrelation {
    fn new(entries: Vec<u64>, r: u64, q: usize) -> Self {
        let r = BigInt::from(r);
        let normalized = entries
            .iter()
            .map(|&e| BigRational::new(BigInt::from(e), r.clone()))
            .collect();
        PatternCorrelation {
            entries,
            normalized,
            q,
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Normalized entries, each in `[0, 1]`.
    pub fn normalized(&self) -> &[BigRational] {
        &self.normalized
    }

    pub fn alphabet_size(&self) -> usize {
        self.q
    }

    /// `sum entries[i] * q^(l-1-i)` as an exact integer.
    pub fn base_q_value(&self) -> BigInt {
        let q = BigInt::from(self.q);
        self.entries
            .iter()
            .fold(BigInt::from(0), |acc, &c| acc * &q + BigInt::from(c))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "entries": self.entries,
            "normalized": self.normalized.iter()
                .map(crate::rational::rational_string)
                .collect::<Vec<_>>(),
            "q": self.q,
        })
    }
}

/// Weight-based pattern correlation (the defining form).
///
/// Entry `i` is the weight in `p` of the substring `p(i+1, i+k)` with
/// `k = min(l-i, l')`, when that substring is orbit-equivalent to the prefix
/// `p'(1, k)`; otherwise 0.
pub fn correlate_patterns(p: &Pattern, p2: &Pattern) -> Result<PatternCorrelation> {
    if !p.same_group(p2) {
        return Err(Error::GroupMismatch);
    }
    let group = p.group();
    let l = p.len();
    let w = p.canonical();
    let w2 = p2.canonical();
    let entries = (0..l)
        .map(|i| {
            let k = (l - i).min(w2.len());
            let suffix = w.slice(i, i + k);
            let prefix = w2.slice(0, k);
            if group.equivalent(&suffix, &prefix) {
                group.substring_weight(w, i, i + k)
            } else {
                0
            }
        })
        .collect();
    Ok(PatternCorrelation::new(
        entries,
        p.orbit_size(),
        group.alphabet_size(),
    ))
}

/// Orbit-sum pattern correlation: componentwise sum of word correlations of
/// every orbit member of `p` against one fixed word of `p2`'s orbit. Exists
/// to cross-validate [`correlate_patterns`]; the two must agree exactly.
pub fn correlate_patterns_orbit_sum(p: &Pattern, p2: &Pattern) -> Result<PatternCorrelation> {
    if !p.same_group(p2) {
        return Err(Error::GroupMismatch);
    }
    let fixed = p2.canonical();
    let mut entries = vec![0u64; p.len()];
    for member in p.orbit() {
        let c = correlate(&member, fixed);
        for (acc, &e) in entries.iter_mut().zip(c.entries()) {
            *acc += e;
        }
    }
    Ok(PatternCorrelation::new(
        entries,
        p.orbit_size(),
        p.group().alphabet_size(),
    ))
}

/// Conway leading number `p L p' = q^(l-1) C_pp'(1/q)`, an integer.
pub fn cln_pattern(p: &Pattern, p2: &Pattern) -> Result<BigRational> {
    Ok(BigRational::from_integer(
        correlate_patterns(p, p2)?.base_q_value(),
    ))
}

/// Periods of a pattern: shifts `i >= 1` whose autocorrelation entry is
/// nonzero, i.e. some group element maps the prefix onto the suffix.
pub fn pattern_periods(p: &Pattern) -> Vec<usize> {
    let c = correlate_patterns(p, p).expect("same group");
    (1..p.len()).filter(|&i| c.entries()[i] != 0).collect()
}

/// Overlap classification of a pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapClass {
    /// No proper prefix is equivalent to a suffix.
    NonSelfOverlapping,
    /// Only the length-1 prefix is equivalent to a suffix.
    AlmostNonSelfOverlapping,
    Neither,
}

impl fmt::Display for OverlapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OverlapClass::NonSelfOverlapping => "non_self_overlapping",
            OverlapClass::AlmostNonSelfOverlapping => "almost_non_self_overlapping",
            OverlapClass::Neither => "neither",
        })
    }
}

pub fn overlap_class(p: &Pattern) -> OverlapClass {
    let periods = pattern_periods(p);
    if periods.is_empty() {
        OverlapClass::NonSelfOverlapping
    } else if periods == [p.len() - 1] {
        OverlapClass::AlmostNonSelfOverlapping
    } else {
        OverlapClass::Neither
    }
}

/// All distinct patterns of length `l`, sorted lexicographically.
///
/// Scans words in lexicographic order; the first unseen word of each orbit
/// is its canonical representative, so the output arrives sorted.
pub fn enumerate_patterns(group: &Arc<PermutationGroup>, l: usize) -> Result<Vec<Pattern>> {
    enumerate_patterns_with_budget(group, l, DEFAULT_ENUM_BUDGET)
}

pub fn enumerate_patterns_with_budget(
    group: &Arc<PermutationGroup>,
    l: usize,
    budget: u64,
) -> Result<Vec<Pattern>> {
    assert!(l >= 1, "patterns have length at least 1");
    let q = group.alphabet_size();
    let total = (q as u64).checked_pow(l as u32).unwrap_or(u64::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let total = total as usize;
    let mut visited = vec![false; total];
    let mut patterns = Vec::new();
    let mut letters = vec![0u8; l];
    let index_of = |w: &Word| -> usize {
        w.letters()
            .iter()
            .fold(0usize, |acc, &c| acc * q + c as usize)
    };
    for code in 0..total {
        if visited[code] {
            // Advance the letter counter even when skipping.
            increment(&mut letters, q);
            continue;
        }
        let word = Word::new(letters.clone());
        debug_assert_eq!(index_of(&word), code);
        let orbit = group.orbit(&word);
        for member in &orbit {
            visited[index_of(member)] = true;
        }
        let canonical = orbit[0].clone();
        debug_assert_eq!(canonical, word);
        let orbit_size = orbit.len() as u64;
        patterns.push(Pattern {
            canonical,
            group: Arc::clone(group),
            orbit_size,
            stabilizer_order: group.order() / orbit_size,
        });
        increment(&mut letters, q);
    }
    // Orbits partition the q^l words.
    debug_assert_eq!(
        patterns.iter().map(|p| p.orbit_size()).sum::<u64>(),
        total as u64
    );
    Ok(patterns)
}

fn increment(letters: &mut [u8], q: usize) {
    for slot in letters.iter_mut().rev() {
        if (*slot as usize) + 1 < q {
            *slot += 1;
            return;
        }
        *slot = 0;
    }
}

/// Exhaustive minimum of the pattern autocorrelation CLN over all patterns
/// of length `l`, with every achieving pattern in lexicographic order.
pub fn min_cln_search(
    group: &Arc<PermutationGroup>,
    l: usize,
) -> Result<(BigInt, Vec<Pattern>)> {
    min_cln_search_with_budget(group, l, DEFAULT_ENUM_BUDGET)
}

pub fn min_cln_search_with_budget(
    group: &Arc<PermutationGroup>,
    l: usize,
    budget: u64,
) -> Result<(BigInt, Vec<Pattern>)> {
    let patterns = enumerate_patterns_with_budget(group, l, budget)?;
    let mut best: Option<BigInt> = None;
    let mut witnesses: Vec<Pattern> = Vec::new();
    for p in patterns {
        let value = correlate_patterns(&p, &p)?.base_q_value();
        match &best {
            Some(current) if value > *current => {}
            Some(current) if value == *current => witnesses.push(p),
            _ => {
                best = Some(value);
                witnesses = vec![p];
            }
        }
    }
    Ok((best.expect("at least one pattern"), witnesses))
}
