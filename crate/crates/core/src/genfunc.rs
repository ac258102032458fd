//! Avoiding / first-occurrence generating functions for reduced word sets
//! and reduced pattern sets, via the exact linear systems they satisfy.

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::pattern::{correlate_patterns, Pattern};
use crate::rational::{solve_linear_system, Poly, Rational, RationalFunction};
use crate::word::{correlate, correlation_polynomial, Word};

/// A set of words in which no word is a substring of another.
#[derive(Debug, Clone)]
pub struct ReducedWordSet {
    words: Vec<Word>,
    q: usize,
}

impl ReducedWordSet {
    pub fn new(words: Vec<Word>, q: usize) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::InvalidInput("empty word set".into()));
        }
        for w in &words {
            w.check_alphabet(q)?;
            if w.is_empty() {
                return Err(Error::InvalidInput("empty word in set".into()));
            }
        }
        if let Some((container, contained)) = word_reduction_violation(&words) {
            return Err(Error::NotReduced {
                container: container.to_upper_string(),
                contained: contained.to_upper_string(),
            });
        }
        Ok(ReducedWordSet { words, q })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn alphabet_size(&self) -> usize {
        self.q
    }
}

/// First (container, contained) pair violating reducedness, if any.
pub fn word_reduction_violation(words: &[Word]) -> Option<(&Word, &Word)> {
    for (i, container) in words.iter().enumerate() {
        for (j, contained) in words.iter().enumerate() {
            if i == j {
                continue;
            }
            let (lc, ls) = (container.len(), contained.len());
            if ls > lc {
                continue;
            }
            let occurs = (0..=lc - ls)
                .any(|s| &container.letters()[s..s + ls] == contained.letters());
            if occurs {
                return Some((container, contained));
            }
        }
    }
    None
}

/// A set of patterns over one group in which no substring of any member is
/// equivalent to another member.
#[derive(Debug, Clone)]
pub struct ReducedPatternSet {
    patterns: Vec<Pattern>,
}

impl ReducedPatternSet {
    pub fn new(patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidInput("empty pattern set".into()));
        }
        if patterns.iter().any(|p| !p.same_group(&patterns[0])) {
            return Err(Error::GroupMismatch);
        }
        if let Some((container, contained)) = pattern_reduction_violation(&patterns) {
            return Err(Error::NotReduced {
                container: container.to_string(),
                contained: contained.to_string(),
            });
        }
        Ok(ReducedPatternSet { patterns })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn group(&self) -> &std::sync::Arc<crate::group::PermutationGroup> {
        self.patterns[0].group()
    }

    /// Union of all orbits, as plain words.
    pub fn expanded_words(&self) -> Vec<Word> {
        self.patterns.iter().flat_map(|p| p.orbit()).collect()
    }
}

/// First (container, contained) pattern pair where a substring of the
/// container is equivalent to the contained pattern. It suffices to scan
/// substrings of canonical words: substrings of other orbit members are
/// their images under the group action, and canonicalization is constant on
/// orbits.
pub fn pattern_reduction_violation(patterns: &[Pattern]) -> Option<(&Pattern, &Pattern)> {
    for (i, container) in patterns.iter().enumerate() {
        let group = container.group();
        for (j, contained) in patterns.iter().enumerate() {
            if i == j {
                continue;
            }
            let (lc, ls) = (container.len(), contained.len());
            if ls > lc {
                continue;
            }
            let word = container.canonical();
            let hit = (0..=lc - ls).any(|s| {
                group.equivalent(&word.slice(s, s + ls), contained.canonical())
            });
            if hit {
                return Some((container, contained));
            }
        }
    }
    None
}

/// The solved generating functions for one avoiding set.
///
/// `first_occurrence[i]` matches the i-th member of the input set; the
/// defining identity `(1 - qz) * avoiding + sum first_occurrence = 1` holds
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFuncSolution {
    pub avoiding: RationalFunction,
    pub first_occurrence: Vec<RationalFunction>,
}

impl GenFuncSolution {
    /// Check the defining identity; used by tests and debug assertions.
    pub fn satisfies_identity(&self, q: usize) -> bool {
        let one_minus_qz = RationalFunction::from_poly(Poly::from_integers(&[1, -(q as i64)]));
        let mut acc = &one_minus_qz * &self.avoiding;
        for f in &self.first_occurrence {
            acc = &acc + f;
        }
        acc == RationalFunction::one()
    }
}

/// Correlation polynomial rows for a word set: entry `(j, i)` holds
/// `z^(L - l_j) * C_(wj, wi)(z)` where `L = max l`. Scaling every
/// correlation row by `z^L` clears the `z^(-l_j)` factors of the raw system
/// while leaving the solution unchanged.
fn word_system(
    words: &[Word],
    q: usize,
) -> (Vec<Vec<RationalFunction>>, Vec<RationalFunction>) {
    let k = words.len();
    let max_len = words.iter().map(Word::len).max().unwrap();
    let mut matrix = Vec::with_capacity(k + 1);
    let mut row0 = Vec::with_capacity(k + 1);
    row0.push(RationalFunction::from_poly(Poly::from_integers(&[
        1,
        -(q as i64),
    ])));
    row0.extend(std::iter::repeat_n(RationalFunction::one(), k));
    matrix.push(row0);
    for wi in words {
        let mut row = Vec::with_capacity(k + 1);
        row.push(RationalFunction::from_poly(Poly::monomial(
            BigRational::one(),
            max_len,
        )));
        for wj in words {
            let c = correlation_polynomial(&correlate(wj, wi));
            let poly = Poly::from_integers(c.coeffs()).shift(max_len - wj.len());
            row.push(RationalFunction::from_poly(-&poly));
        }
        matrix.push(row);
    }
    let mut rhs = vec![RationalFunction::zero(); k + 1];
    rhs[0] = RationalFunction::one();
    (matrix, rhs)
}

/// Solve the avoiding system for a reduced word set.
pub fn solve_words(set: &ReducedWordSet, q: usize) -> Result<GenFuncSolution> {
    let (matrix, rhs) = word_system(set.words(), q);
    let solution = solve_linear_system(&matrix, &rhs)?;
    let mut iter = solution.into_iter();
    let avoiding = iter.next().unwrap();
    let out = GenFuncSolution {
        avoiding,
        first_occurrence: iter.collect(),
    };
    debug_assert!(out.satisfies_identity(q));
    Ok(out)
}

/// Solve the avoiding system for a reduced pattern set. Identical to the
/// word system with each correlation polynomial replaced by its normalized
/// form `(1/r_j) * C_(pj, pi)(z)`.
pub fn solve_patterns(set: &ReducedPatternSet) -> Result<GenFuncSolution> {
    let patterns = set.patterns();
    let q = set.group().alphabet_size();
    let k = patterns.len();
    let max_len = patterns.iter().map(Pattern::len).max().unwrap();
    let mut matrix = Vec::with_capacity(k + 1);
    let mut row0 = Vec::with_capacity(k + 1);
    row0.push(RationalFunction::from_poly(Poly::from_integers(&[
        1,
        -(q as i64),
    ])));
    row0.extend(std::iter::repeat_n(RationalFunction::one(), k));
    matrix.push(row0);
    for pi in patterns {
        let mut row = Vec::with_capacity(k + 1);
        row.push(RationalFunction::from_poly(Poly::monomial(
            BigRational::one(),
            max_len,
        )));
        for pj in patterns {
            let c = correlate_patterns(pj, pi)?;
            let coeffs: Vec<Rational> = c
                .normalized()
                .iter()
                .map(|e| -e.clone())
                .collect();
            let poly = Poly::new(coeffs).shift(max_len - pj.len());
            row.push(RationalFunction::from_poly(poly));
        }
        matrix.push(row);
    }
    let mut rhs = vec![RationalFunction::zero(); k + 1];
    rhs[0] = RationalFunction::one();
    let solution = solve_linear_system(&matrix, &rhs)?;
    let mut iter = solution.into_iter();
    let avoiding = iter.next().unwrap();
    let out = GenFuncSolution {
        avoiding,
        first_occurrence: iter.collect(),
    };
    debug_assert!(out.satisfies_identity(q));
    Ok(out)
}

/// Closed form for a single word: `G = C / (z^l + (1 - qz) C)` and
/// `G_w = z^l / (z^l + (1 - qz) C)`.
pub fn closed_form_single_word(w: &Word, q: usize) -> GenFuncSolution {
    let c = Poly::from_integers(correlation_polynomial(&correlate(w, w)).coeffs());
    let zl = Poly::monomial(BigRational::one(), w.len());
    let den = &zl + &(&Poly::from_integers(&[1, -(q as i64)]) * &c);
    GenFuncSolution {
        avoiding: RationalFunction::new(c, den.clone()),
        first_occurrence: vec![RationalFunction::new(zl, den)],
    }
}

/// Closed form for a single pattern: `G = C / (r z^l + (1 - qz) C)` and
/// `G_p = r z^l / (r z^l + (1 - qz) C)`.
pub fn closed_form_single_pattern(p: &Pattern) -> Result<GenFuncSolution> {
    let q = p.group().alphabet_size();
    let corr = correlate_patterns(p, p)?;
    let c = Poly::new(
        corr.entries()
            .iter()
            .map(|&e| BigRational::from_integer(e.into()))
            .collect(),
    );
    let rzl = Poly::monomial(BigRational::from_integer(p.orbit_size().into()), p.len());
    let den = &rzl + &(&Poly::from_integers(&[1, -(q as i64)]) * &c);
    Ok(GenFuncSolution {
        avoiding: RationalFunction::new(c, den.clone()),
        first_occurrence: vec![RationalFunction::new(rzl, den)],
    })
}

/// Total probability of eventual occurrence: at `z = 1/q` the first
/// occurrence functions sum to 1 (when no denominator vanishes there).
pub fn conservation_at_inverse_q(solution: &GenFuncSolution, q: usize) -> Result<bool> {
    let x = BigRational::new(1.into(), (q as i64).into());
    let mut acc = BigRational::zero();
    for f in &solution.first_occurrence {
        acc += f.evaluate(&x)?;
    }
    Ok(acc.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermutationGroup;
    use std::sync::Arc;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_integers(num), Poly::from_integers(den))
    }

    fn words(list: &[&str], q: usize) -> Vec<Word> {
        list.iter().map(|s| Word::parse(s, q).unwrap()).collect()
    }

    fn group(dsl: &str) -> Arc<PermutationGroup> {
        Arc::new(PermutationGroup::from_dsl(dsl).unwrap())
    }

    #[test]
    fn validate_reduced_words() {
        let err = ReducedWordSet::new(words(&["HTH", "TTHTH"], 2), 2).unwrap_err();
        assert_eq!(
            err,
            Error::NotReduced {
                container: "BBABA".into(),
                contained: "ABA".into()
            }
        );
        assert!(ReducedWordSet::new(words(&["ABA", "AABCB"], 3), 3).is_ok());
    }

    #[test]
    fn validate_reduced_patterns() {
        let s3 = group("S:3");
        let aba = Pattern::parse(&s3, "aba").unwrap();
        let aabcb = Pattern::parse(&s3, "aabcb").unwrap();
        let err = ReducedPatternSet::new(vec![aba.clone(), aabcb]).unwrap_err();
        assert_eq!(
            err,
            Error::NotReduced {
                container: "aabcb".into(),
                contained: "aba".into()
            }
        );
        let abc = Pattern::parse(&s3, "abc").unwrap();
        assert!(ReducedPatternSet::new(vec![aba, abc]).is_ok());
    }

    #[test]
    fn solve_single_word_hh() {
        let set = ReducedWordSet::new(words(&["HH"], 2), 2).unwrap();
        let sol = solve_words(&set, 2).unwrap();
        assert_eq!(sol.avoiding, rf(&[1, 1], &[1, -1, -1]));
        assert_eq!(sol.first_occurrence[0], rf(&[0, 0, 1], &[1, -1, -1]));
        assert!(sol.satisfies_identity(2));
    }

    #[test]
    fn solve_matches_closed_form_words() {
        for s in ["HH", "HTHT", "THTT", "HTHTH"] {
            let w = Word::parse(s, 2).unwrap();
            let set = ReducedWordSet::new(vec![w.clone()], 2).unwrap();
            let sol = solve_words(&set, 2).unwrap();
            let closed = closed_form_single_word(&w, 2);
            assert_eq!(sol.avoiding, closed.avoiding);
            assert_eq!(sol.first_occurrence, closed.first_occurrence);
        }
    }

    #[test]
    fn solve_two_word_matchup() {
        let set = ReducedWordSet::new(words(&["HTHT", "THTT"], 2), 2).unwrap();
        let sol = solve_words(&set, 2).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let alice = sol.first_occurrence[0].evaluate(&half).unwrap();
        let bob = sol.first_occurrence[1].evaluate(&half).unwrap();
        assert_eq!(alice, BigRational::new(9.into(), 14.into()));
        assert_eq!(&alice / &bob, BigRational::new(9.into(), 5.into()));
        assert!(conservation_at_inverse_q(&sol, 2).unwrap());
    }

    #[test]
    fn solve_single_pattern_examples() {
        let s2 = group("S:2");
        let aa = Pattern::parse(&s2, "aa").unwrap();
        let set = ReducedPatternSet::new(vec![aa.clone()]).unwrap();
        let sol = solve_patterns(&set).unwrap();
        assert_eq!(sol.avoiding, rf(&[1, 1], &[1, -1]));
        assert_eq!(sol.first_occurrence[0], rf(&[0, 0, 2], &[1, -1]));

        let s3 = group("S:3");
        let abc = Pattern::parse(&s3, "abc").unwrap();
        let set = ReducedPatternSet::new(vec![abc.clone()]).unwrap();
        let sol = solve_patterns(&set).unwrap();
        assert_eq!(sol.avoiding, rf(&[1, 1, 2], &[1, -2, -1]));
        assert_eq!(sol.first_occurrence[0], rf(&[0, 0, 0, 6], &[1, -2, -1]));

        // All-distinct pattern over S_q has correlation (0!, 1!, ..., (q-1)!).
        for q in [3usize, 4, 5] {
            let sq = group(&format!("S:{q}"));
            let word = Word::new((0..q as u8).collect());
            let p = Pattern::of(&sq, &word).unwrap();
            let sol = solve_patterns(&ReducedPatternSet::new(vec![p.clone()]).unwrap()).unwrap();
            let closed = closed_form_single_pattern(&p).unwrap();
            assert_eq!(sol.avoiding, closed.avoiding);
            assert_eq!(sol.first_occurrence, closed.first_occurrence);
            let c = correlate_patterns(&p, &p).unwrap();
            let mut factorial = 1u64;
            for (i, &e) in c.entries().iter().enumerate() {
                if i > 0 {
                    factorial *= i as u64;
                }
                assert_eq!(e, factorial);
            }
        }
    }

    #[test]
    fn patterns_under_trivial_group_reduce_to_words() {
        let t2 = group("T:2");
        let p1 = Pattern::parse(&t2, "ABAB").unwrap();
        let p2 = Pattern::parse(&t2, "BABB").unwrap();
        let pattern_sol =
            solve_patterns(&ReducedPatternSet::new(vec![p1.clone(), p2.clone()]).unwrap())
                .unwrap();
        let word_sol = solve_words(
            &ReducedWordSet::new(vec![p1.canonical().clone(), p2.canonical().clone()], 2).unwrap(),
            2,
        )
        .unwrap();
        assert_eq!(pattern_sol.avoiding, word_sol.avoiding);
        assert_eq!(pattern_sol.first_occurrence, word_sol.first_occurrence);
    }

    #[test]
    fn non_self_overlapping_word_closed_form() {
        // Autocorrelation 1 collapses the closed form to
        // z^l / (z^l + 1 - qz).
        let w = Word::parse("HHTHT", 2).unwrap();
        let sol = closed_form_single_word(&w, 2);
        assert_eq!(
            sol.first_occurrence[0],
            rf(&[0, 0, 0, 0, 0, 1], &[1, -2, 0, 0, 0, 1])
        );
        assert_eq!(sol.avoiding, rf(&[1], &[1, -2, 0, 0, 0, 1]));
    }

    #[test]
    fn three_word_set_solves_and_matches_oracle() {
        use crate::oracle::{brute_avoiding_counts, brute_first_occurrence_counts, OracleBudget};
        let list = words(&["HH", "TT", "HTHT"], 2);
        let set = ReducedWordSet::new(list.clone(), 2).unwrap();
        let sol = solve_words(&set, 2).unwrap();
        assert!(sol.satisfies_identity(2));
        assert!(conservation_at_inverse_q(&sol, 2).unwrap());
        let budget = OracleBudget::default();
        let avoiding = brute_avoiding_counts(&list, 2, 10, &budget).unwrap();
        let series = sol.avoiding.series_coefficients(10).unwrap();
        for (k, &count) in avoiding.iter().enumerate() {
            assert_eq!(series[k], BigRational::from_integer(count.into()));
        }
        for i in 0..3 {
            let counts =
                brute_first_occurrence_counts(&list, &[i], 2, 10, &budget).unwrap();
            let series = sol.first_occurrence[i].series_coefficients(10).unwrap();
            for (k, &count) in counts.iter().enumerate() {
                assert_eq!(series[k], BigRational::from_integer(count.into()));
            }
        }
    }

    #[test]
    fn non_reduced_input_is_hard_error() {
        assert!(matches!(
            ReducedWordSet::new(words(&["HH", "HHT"], 2), 2),
            Err(Error::NotReduced { .. })
        ));
        // Duplicates are not reduced either.
        assert!(matches!(
            ReducedWordSet::new(words(&["HH", "HH"], 2), 2),
            Err(Error::NotReduced { .. })
        ));
    }
}
