//! Words over a totally ordered alphabet `1 < 2 < ... < m`, Lyndon words and
//! their factorizations.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    size: u8,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > u8::MAX as usize {
            return Err(Error::InvalidAlphabet(size));
        }
        Ok(Self { size: size as u8 })
    }

    pub fn binary() -> Self {
        Self { size: 2 }
    }

    pub fn size(&self) -> u8 {
        self.size
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> {
        1..=self.size
    }

    pub fn contains(&self, letter: u8) -> bool {
        (1..=self.size).contains(&letter)
    }

    /// True when words render as plain digit strings.
    pub fn is_digit_alphabet(&self) -> bool {
        self.size <= 9
    }
}

/// A finite word. The derived ordering is the lexicographic order in which a proper
/// left factor precedes its extensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: u8) -> Self {
        Word(vec![x])
    }

    /// Parses a digit string (`"1122"`) or the bracketed form (`"[1,12,2]"`).
    /// The empty string and `"1_X"` both denote the empty word.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<u8> = if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated word {s:?}")))?;
            if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u8>()
                            .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
                    })
                    .collect::<Result<_>>()?
            }
        } else if s == "1_X" {
            Vec::new()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        for &l in &letters {
            if !alphabet.contains(l) {
                return Err(Error::LetterOutOfRange {
                    letter: l as u32,
                    size: alphabet.size(),
                });
            }
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: u8) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Occurrence counts indexed by `letter - 1`.
    pub fn multidegree(&self, alphabet: Alphabet) -> Vec<usize> {
        let mut counts = vec![0; alphabet.size() as usize];
        for &l in &self.0 {
            counts[l as usize - 1] += 1;
        }
        counts
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    pub fn suffix(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    pub fn prefix(&self, end: usize) -> Word {
        Word(self.0[..end].to_vec())
    }

    /// Rendering for the given alphabet: digits up to size 9, brackets beyond.
    pub fn render(&self, alphabet: Alphabet) -> String {
        if alphabet.is_digit_alphabet() {
            self.0.iter().map(|l| l.to_string()).collect()
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1_X");
        }
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

/// A nonempty word strictly smaller than each of its proper suffixes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord(Word);

impl LyndonWord {
    pub fn new(word: Word) -> Result<Self> {
        if is_lyndon(&word) {
            Ok(LyndonWord(word))
        } else {
            Err(Error::NotLyndon(word.to_string()))
        }
    }

    pub fn letter(x: u8) -> Self {
        LyndonWord(Word::letter(x))
    }

    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        Self::new(Word::parse(s, alphabet)?)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_letter(&self) -> bool {
        self.0.len() == 1
    }

    pub fn count(&self, letter: u8) -> usize {
        self.0.count(letter)
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn lex_compare(a: &Word, b: &Word) -> Ordering {
    a.cmp(b)
}

/// Nonempty and strictly smaller than every proper suffix.
pub fn is_lyndon(w: &Word) -> bool {
    let l = w.letters();
    !l.is_empty() && (1..l.len()).all(|i| l < &l[i..])
}

/// Chen–Fox–Lyndon factorization into a non-increasing product of Lyndon words
/// (Duval's algorithm).
pub fn cfl_factorize(w: &Word) -> Result<Vec<LyndonWord>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(duval(w.letters())
        .into_iter()
        .map(|(a, b)| LyndonWord(Word::from(&w.letters()[a..b])))
        .collect())
}

/// Factor boundaries `(start, end)` of the Lyndon factorization of `s`.
pub(crate) fn duval(s: &[u8]) -> Vec<(usize, usize)> {
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push((i, i + j - k));
            i += j - k;
        }
    }
    out
}

/// Standard factorization `w = (left, right)` where `right` is the lexicographically
/// least proper suffix (equivalently the longest proper Lyndon suffix).
pub fn standard_factorization(w: &LyndonWord) -> Result<(LyndonWord, LyndonWord)> {
    let l = w.word().letters();
    if l.len() < 2 {
        return Err(Error::NoFactorization(w.to_string()));
    }
    let split = (1..l.len())
        .min_by(|&a, &b| l[a..].cmp(&l[b..]))
        .expect("length at least two");
    Ok((
        LyndonWord(Word::from(&l[..split])),
        LyndonWord(Word::from(&l[split..])),
    ))
}

/// All Lyndon words of length at most `max_len`, increasing, via Duval's successor
/// iteration.
pub fn lyndon_enumerate(alphabet: Alphabet, max_len: usize) -> Vec<LyndonWord> {
    let m = alphabet.size();
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![1];
    loop {
        out.push(LyndonWord(Word(w.clone())));
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&m) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// All words with the given letter counts (indexed by `letter - 1`), increasing.
pub fn words_with_multidegree(counts: &[usize]) -> Vec<Word> {
    fn rec(counts: &mut [usize], remaining: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i as u8 + 1);
                rec(counts, remaining - 1, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    let mut counts = counts.to_vec();
    let total = counts.iter().sum();
    let mut out = Vec::new();
    rec(&mut counts, total, &mut Vec::new(), &mut out);
    out
}

/// All words of length `len` over the alphabet, increasing.
pub fn all_words(alphabet: Alphabet, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.letters().map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    Word(v)
                })
            })
            .collect();
    }
    out
}
