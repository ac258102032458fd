//! Words over an indexed alphabet, correlation vectors, and Conway leading
//! numbers for plain words.

use std::fmt;

use num::{BigInt, BigRational, One};

use crate::error::{Error, Result};

/// A word over the alphabet `{0, 1, ..., q-1}`.
///
/// Words display as uppercase letters (`A` = 0), patterns as lowercase; the
/// letter indices are what every operation works on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    /// Parse a word for an alphabet of size `q`.
    ///
    /// Accepts letter strings (`ABC`, `abc`) or comma-separated indices
    /// (`0,1,2`). For the classical two-letter game, `H`/`T` are accepted as
    /// aliases for letters 0/1 when `q == 2`.
    pub fn parse(s: &str, q: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidInput("empty word".into()));
        }
        let letters: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::InvalidInput(format!("bad letter index {part:?}")))
                })
                .collect::<Result<_>>()?
        } else if q == 2 && s.chars().all(|c| matches!(c, 'H' | 'T' | 'h' | 't')) {
            s.chars().map(|c| matches!(c, 'T' | 't') as u8).collect()
        } else {
            s.chars()
                .map(|c| match c {
                    'A'..='Z' => Ok(c as u8 - b'A'),
                    'a'..='z' => Ok(c as u8 - b'a'),
                    _ => Err(Error::InvalidInput(format!("bad letter {c:?}"))),
                })
                .collect::<Result<_>>()?
        };
        let word = Word::new(letters);
        word.check_alphabet(q)?;
        Ok(word)
    }

    pub fn check_alphabet(&self, q: usize) -> Result<()> {
        match self.letters.iter().find(|&&l| l as usize >= q) {
            Some(&l) => Err(Error::InvalidInput(format!(
                "letter {l} out of range for alphabet of size {q}"
            ))),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Substring by 0-based half-open range.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::new(self.letters[start..end].to_vec())
    }

    /// Uppercase rendering (words).
    pub fn to_upper_string(&self) -> String {
        self.letters.iter().map(|&l| (b'A' + l) as char).collect()
    }

    /// Lowercase rendering (patterns).
    pub fn to_lower_string(&self) -> String {
        self.letters.iter().map(|&l| (b'a' + l) as char).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_upper_string())
    }
}

/// Correlation vector of one word against another; entries are 0/1 for words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationVector {
    entries: Vec<u64>,
}

impl CorrelationVector {
    pub fn new(entries: Vec<u64>) -> Self {
        CorrelationVector { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Value of the vector read as a base-`q` numeral: `sum C_i q^(l-1-i)`.
    pub fn base_q_value(&self, q: usize) -> BigInt {
        let q = BigInt::from(q);
        self.entries
            .iter()
            .fold(BigInt::from(0), |acc, &c| acc * &q + BigInt::from(c))
    }
}

/// Integer-coefficient polynomial in ascending degree, used for correlation
/// polynomials before they enter the rational-function layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::from_integer(0.into());
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.into());
        }
        acc
    }
}

/// Correlation of `v` against `w`.
///
/// Entry `i` is 1 when the length-`(l-i)` suffix of `v` and `w` agree on
/// their overlap: writing `k = min(l-i, |w|)`, the entry is 1 iff
/// `v(i+1, i+k) = w(1, k)`. For `l-i <= |w|` this is the usual
/// suffix-of-`v` = prefix-of-`w` test; for shorter `w` it detects `w`
/// occurring inside `v` at offset `i`, matching the worked examples
/// (`C(HTHT, HTH) = (1,0,1,0)`).
pub fn correlate(v: &Word, w: &Word) -> CorrelationVector {
    let l = v.len();
    let entries = (0..l)
        .map(|i| {
            let k = (l - i).min(w.len());
            (v.letters[i..i + k] == w.letters[..k]) as u64
        })
        .collect();
    CorrelationVector::new(entries)
}

/// Correlation polynomial `C_0 + C_1 z + ... + C_(l-1) z^(l-1)`.
pub fn correlation_polynomial(c: &CorrelationVector) -> IntPolynomial {
    IntPolynomial::new(c.entries.iter().map(|&e| e as i64).collect())
}

/// Conway leading number `v L w = q^(l-1) C_vw(1/q)`, exact.
///
/// Integral for words; returned as a rational so word and pattern CLNs share
/// one numeric type.
pub fn cln_word(v: &Word, w: &Word, q: usize) -> BigRational {
    assert!(q >= 2, "cln requires an alphabet of at least two letters");
    BigRational::from_integer(correlate(v, w).base_q_value(q))
}

/// Periods of `w`: shifts `i` in `[1, l-1]` with `C_i(w, w) = 1`.
pub fn word_periods(w: &Word) -> Vec<usize> {
    let c = correlate(w, w);
    (1..w.len()).filter(|&i| c.entries[i] == 1).collect()
}

/// A word is non-self-overlapping when no proper suffix equals a prefix.
pub fn is_non_self_overlapping(w: &Word) -> bool {
    word_periods(w).is_empty()
}

/// Autocorrelation sanity helper: `C_0` is always 1.
pub fn autocorrelation(w: &Word) -> CorrelationVector {
    let c = correlate(w, w);
    debug_assert!(c.entries[0].is_one());
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, q: usize) -> Word {
        Word::parse(s, q).unwrap()
    }

    #[test]
    fn correlate_paper_examples() {
        assert_eq!(
            correlate(&w("HTHT", 2), &w("HTHT", 2)).entries(),
            &[1, 0, 1, 0]
        );
        assert_eq!(correlate(&w("HTH", 2), &w("HTHT", 2)).entries(), &[1, 0, 1]);
        // Not commutative; the reversed pair sees HTH occur inside HTHT.
        assert_eq!(
            correlate(&w("HTHT", 2), &w("HTH", 2)).entries(),
            &[1, 0, 1, 0]
        );
    }

    #[test]
    fn correlation_polynomial_examples() {
        let p = correlation_polynomial(&CorrelationVector::new(vec![1, 0, 1, 0]));
        assert_eq!(p.coeffs(), &[1, 0, 1]); // 1 + z^2
        let p = correlation_polynomial(&CorrelationVector::new(vec![1, 0, 1]));
        assert_eq!(p.coeffs(), &[1, 0, 1]);
        let p = correlation_polynomial(&CorrelationVector::new(vec![0, 0]));
        assert!(p.is_zero());
    }

    #[test]
    fn cln_equals_polynomial_route() {
        // q^(l-1) C(1/q) and the base-q reading must agree.
        for (v, u, q) in [("HTHT", "HTHT", 2), ("HTH", "HTHT", 2), ("ABA", "BAB", 3)] {
            let (v, u) = (w(v, q), w(u, q));
            let c = correlate(&v, &u);
            let poly = correlation_polynomial(&c);
            let inv_q = BigRational::new(1.into(), (q as i64).into());
            let scale = BigRational::from_integer(BigInt::from(q).pow(v.len() as u32 - 1));
            assert_eq!(poly.evaluate(&inv_q) * scale, cln_word(&v, &u, q));
        }
    }

    #[test]
    fn cln_examples() {
        assert_eq!(
            cln_word(&w("HTHT", 2), &w("HTHT", 2), 2),
            BigRational::from_integer(10.into())
        );
        assert_eq!(
            cln_word(&w("HTH", 2), &w("HTHT", 2), 2),
            BigRational::from_integer(5.into())
        );
        // Non-self-overlapping word of length 5 over q = 2.
        assert_eq!(
            cln_word(&w("HHTHT", 2), &w("HHTHT", 2), 2),
            BigRational::from_integer(16.into())
        );
    }

    #[test]
    fn periods_examples() {
        assert_eq!(word_periods(&w("HTHHTH", 2)), vec![3, 5]);
        assert_eq!(word_periods(&w("HHHH", 2)), vec![1, 2, 3]);
        assert!(word_periods(&w("HHTHT", 2)).is_empty());
    }

    #[test]
    fn nso_examples() {
        assert!(is_non_self_overlapping(&w("HHTHT", 2)));
        assert!(!is_non_self_overlapping(&w("HH", 2)));
        assert!(is_non_self_overlapping(&w("HHHHT", 2)));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("HTHT", 2).to_upper_string(), "ABAB");
        assert_eq!(w("0,1,0,1", 2), w("ABAB", 2));
        assert_eq!(w("abc", 3).to_lower_string(), "abc");
        assert!(Word::parse("XYZ", 3).is_err());
        assert!(Word::parse("", 2).is_err());
        // H means letter 7 for alphabets large enough to contain it.
        assert_eq!(w("H", 26).letters(), &[7]);
    }

    #[test]
    fn length_one_word_is_degenerate_but_accepted() {
        let a = w("A", 2);
        assert_eq!(autocorrelation(&a).entries(), &[1]);
        assert!(word_periods(&a).is_empty());
        assert!(is_non_self_overlapping(&a));
    }
}
