//! The cyclic-group reduction: adjacency signatures and the identities that
//! tie pattern quantities under `Z_q` to word quantities one letter shorter.

use num::{BigInt, BigRational, One};

use crate::error::{Error, Result};
use crate::genfunc::{
    closed_form_single_pattern, closed_form_single_word, GenFuncSolution, ReducedPatternSet,
};
use crate::oracle::{brute_avoiding_counts, brute_first_occurrence_counts, OracleBudget};
use crate::pattern::{correlate_patterns, Pattern};
use crate::rational::{Poly, RationalFunction};
use crate::word::{cln_word, correlate, Word};

/// The word of consecutive letter differences `p(i+1) - p(i) mod q`; one
/// letter shorter than the pattern, constant on orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencySignature {
    word: Word,
    q: usize,
}

impl AdjacencySignature {
    /// Build directly from residues mod `q`; the empty signature describes
    /// single-letter patterns.
    pub fn from_residues(residues: Vec<u8>, q: usize) -> Result<Self> {
        let word = Word::new(residues);
        word.check_alphabet(q)?;
        Ok(AdjacencySignature { word, q })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn residues(&self) -> Vec<u8> {
        self.word.letters().to_vec()
    }

    pub fn alphabet_size(&self) -> usize {
        self.q
    }
}

fn require_cyclic(p: &Pattern) -> Result<()> {
    if !p.group().is_cyclic_spec() {
        return Err(Error::WrongGroup(format!(
            "adjacency signatures require a cyclic group, got {}",
            p.group().spec_string()
        )));
    }
    Ok(())
}

/// Adjacency signature of a pattern under `Z_q`.
pub fn signature(p: &Pattern) -> Result<AdjacencySignature> {
    require_cyclic(p)?;
    if p.len() < 2 {
        return Err(Error::LengthTooShort { min: 2 });
    }
    let q = p.group().alphabet_size();
    let letters = p.canonical().letters();
    let diffs = letters
        .windows(2)
        .map(|w| ((w[1] as usize + q - w[0] as usize) % q) as u8)
        .collect();
    Ok(AdjacencySignature {
        word: Word::new(diffs),
        q,
    })
}

/// Rebuild a word from a signature and a first letter; the inverse of
/// [`signature`] up to the choice of orbit member.
pub fn lift(sig: &AdjacencySignature, first: u8) -> Word {
    let q = sig.q;
    let mut letters = Vec::with_capacity(sig.word.len() + 1);
    letters.push(first);
    for &d in sig.word.letters() {
        let prev = *letters.last().unwrap() as usize;
        letters.push(((prev + d as usize) % q) as u8);
    }
    Word::new(letters)
}

/// Both sides of the count bijection for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountIdentity {
    pub n: usize,
    pub pattern_avoiding: u64,
    pub word_avoiding_shifted: u64,
    pub pattern_first: u64,
    pub word_first_shifted: u64,
}

impl CountIdentity {
    pub fn holds(&self) -> bool {
        self.pattern_avoiding == self.word_avoiding_shifted
            && self.pattern_first == self.word_first_shifted
    }
}

/// Check `A(n, {p}) = q A(n-1, {S(p)})` and the first-occurrence analogue
/// for every `n <= max_n`, including the `n = 0, 1` edge cases.
pub fn count_identity_check(
    p: &Pattern,
    max_n: usize,
    budget: &OracleBudget,
) -> Result<Vec<CountIdentity>> {
    let sig = signature(p)?;
    let q = p.group().alphabet_size();
    let orbit = p.orbit();
    let pattern_avoiding = brute_avoiding_counts(&orbit, q, max_n, budget)?;
    let targets: Vec<usize> = (0..orbit.len()).collect();
    let pattern_first = brute_first_occurrence_counts(&orbit, &targets, q, max_n, budget)?;
    let sig_words = [sig.word().clone()];
    let word_avoiding = brute_avoiding_counts(&sig_words, q, max_n.saturating_sub(1), budget)?;
    let word_first =
        brute_first_occurrence_counts(&sig_words, &[0], q, max_n.saturating_sub(1), budget)?;

    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let (expected_avoiding, expected_first) = match n {
            // The empty string avoids everything and ends nothing.
            0 => (1, 0),
            // Single letters: every letter avoids a pattern of length >= 2.
            1 => (q as u64, 0),
            _ => (q as u64 * word_avoiding[n - 1], q as u64 * word_first[n - 1]),
        };
        out.push(CountIdentity {
            n,
            pattern_avoiding: pattern_avoiding[n],
            word_avoiding_shifted: expected_avoiding,
            pattern_first: pattern_first[n],
            word_first_shifted: expected_first,
        });
    }
    Ok(out)
}

/// Report of the CLN / correlation / generating-function identities for a
/// pattern pair under `Z_q`.
#[derive(Debug, Clone)]
pub struct ClnIdentityReport {
    pub pattern_cln: BigInt,
    pub signature_cln: BigInt,
    /// `pLp' = 1 + q S(p) L S(p')`.
    pub cln_identity: bool,
    /// Entrywise `C_i(p1, p2) = C_i(S(p1), S(p2))` for `i <= l-2`, with the
    /// final entry 1.
    pub entry_identity: bool,
    /// `G(z, {p}) = 1 + qz G(z, {S(p)})` and `G_p(z, {p}) = qz G_S(z, {S(p)})`
    /// as reduced rational functions (checked for `p = p'` only).
    pub genfunc_identity: Option<bool>,
}

impl ClnIdentityReport {
    pub fn holds(&self) -> bool {
        self.cln_identity && self.entry_identity && self.genfunc_identity.unwrap_or(true)
    }
}

/// Check the identities tying pattern quantities to signature-word
/// quantities. `p` and `p2` must share one cyclic group.
pub fn cln_identity_check(p: &Pattern, p2: &Pattern) -> Result<ClnIdentityReport> {
    require_cyclic(p)?;
    require_cyclic(p2)?;
    if !p.same_group(p2) {
        return Err(Error::GroupMismatch);
    }
    let q = p.group().alphabet_size();
    let sig1 = signature(p)?;
    let sig2 = signature(p2)?;

    let pattern_corr = correlate_patterns(p, p2)?;
    let pattern_cln = pattern_corr.base_q_value();
    let word_corr = correlate(sig1.word(), sig2.word());
    let signature_cln = cln_word(sig1.word(), sig2.word(), q).to_integer();

    let cln_identity =
        pattern_cln == BigInt::one() + BigInt::from(q) * &signature_cln;

    let l = p.len();
    let entry_identity = (0..l - 1)
        .all(|i| pattern_corr.entries()[i] == word_corr.entries()[i])
        && pattern_corr.entries()[l - 1] == 1;

    let genfunc_identity = if p == p2 {
        let pattern_side = closed_form_single_pattern(p)?;
        let word_side = closed_form_single_word(sig1.word(), q);
        let qz = RationalFunction::from_poly(Poly::monomial(
            BigRational::from_integer(q.into()),
            1,
        ));
        let avoiding_expected = &RationalFunction::one() + &(&qz * &word_side.avoiding);
        let first_expected = &qz * &word_side.first_occurrence[0];
        Some(
            pattern_side.avoiding == avoiding_expected
                && pattern_side.first_occurrence[0] == first_expected,
        )
    } else {
        None
    };

    Ok(ClnIdentityReport {
        pattern_cln,
        signature_cln,
        cln_identity,
        entry_identity,
        genfunc_identity,
    })
}

/// Convenience used by tests: the solved system for a single cyclic pattern,
/// for comparison against `1 + qz G(z, {S(p)})`.
pub fn pattern_genfuncs(p: &Pattern) -> Result<GenFuncSolution> {
    crate::genfunc::solve_patterns(&ReducedPatternSet::new(vec![p.clone()])?)
}
