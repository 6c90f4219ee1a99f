//! The free associative algebra `R<X>` in the word basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rings::{rat, Rational, Ring, UnitalRing};
use crate::words::{Alphabet, Word};

/// Finitely supported map from words to coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct FreePoly<R: Ring> {
    alphabet: Alphabet,
    terms: BTreeMap<Word, R>,
}

impl<R: Ring> FreePoly<R> {
    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(alphabet: Alphabet, word: Word, coeff: R) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(word, coeff);
        p
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Word, R)>) -> Self {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, R> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, R> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Option<&R> {
        self.terms.get(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lexicographically least word with its coefficient.
    pub fn min_term(&self) -> Option<(&Word, &R)> {
        self.terms.iter().next()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().plus(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                self.alphabet.size(),
                other.alphabet.size(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_poly())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.times(b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(
            self.alphabet,
            self.terms.iter().map(|(w, a)| (w.clone(), c.times(a))),
        )
    }

    pub fn neg_poly(&self) -> Self {
        Self {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.negated()))
                .collect(),
        }
    }

    /// Multiplies every word on the left by `w`.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        Self {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (w.concat(u), c.clone()))
                .collect(),
        }
    }

    /// Multiplies every word on the right by `w`.
    pub fn right_mul_word(&self, w: &Word) -> Self {
        Self {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (u.concat(w), c.clone()))
                .collect(),
        }
    }

    /// `fg - gf`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Bilinear extension of the word shuffle.
    pub fn shuffle_product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a.times(b);
                for (w, mult) in shuffle_words(u, v) {
                    out.add_term(w, ab.times_count(mult));
                }
            }
        }
        Ok(out)
    }

    /// Keeps only the terms whose word satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Word) -> bool) -> Self {
        Self {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into components of equal multidegree.
    pub fn homogeneous_components(&self) -> BTreeMap<Vec<usize>, Self> {
        let mut out: BTreeMap<Vec<usize>, Self> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.multidegree(self.alphabet))
                .or_insert_with(|| Self::zero(self.alphabet))
                .terms
                .insert(w.clone(), c.clone());
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> FreePoly<S> {
        FreePoly::from_terms(
            self.alphabet,
            self.terms.iter().map(|(w, c)| (w.clone(), f(c))),
        )
    }

    pub fn try_map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<FreePoly<S>> {
        let mut out = FreePoly::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Rebinds the polynomial to a larger alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        for w in self.terms.keys() {
            if let Some(&l) = w.letters().iter().find(|&&l| !alphabet.contains(l)) {
                return Err(Error::LetterOutOfRange {
                    letter: l as u32,
                    size: alphabet.size(),
                });
            }
        }
        Ok(Self {
            alphabet,
            terms: self.terms.clone(),
        })
    }
}

impl<R: UnitalRing> FreePoly<R> {
    /// The unit `1_X`.
    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, Word::empty(), R::one())
    }

    pub fn letter(alphabet: Alphabet, x: u8) -> Self {
        Self::monomial(alphabet, Word::letter(x), R::one())
    }

    pub fn word(alphabet: Alphabet, w: Word) -> Self {
        Self::monomial(alphabet, w, R::one())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.alphabet), |acc, _| &acc * self)
    }

    /// Applies the algebra homomorphism sending letter `x` to `images[x - 1]`.
    pub fn substitute(&self, images: &[FreePoly<R>], target: Alphabet) -> Result<Self> {
        let mut out = Self::zero(target);
        let mut cache: HashMap<Word, FreePoly<R>> = HashMap::new();
        for (w, c) in &self.terms {
            let img = match cache.get(w) {
                Some(p) => p.clone(),
                None => {
                    let mut p = Self::one(target);
                    for &l in w.letters() {
                        let im = images.get(l as usize - 1).ok_or(Error::LetterOutOfRange {
                            letter: l as u32,
                            size: images.len() as u8,
                        })?;
                        p = p.try_mul(im)?;
                    }
                    cache.insert(w.clone(), p.clone());
                    p
                }
            };
            out = out.try_add(&img.scale(c))?;
        }
        Ok(out)
    }
}

trait TimesCount {
    fn times_count(&self, n: u64) -> Self;
}

impl<R: Ring> TimesCount for R {
    fn times_count(&self, n: u64) -> Self {
        // repeated doubling keeps this ring-generic
        let mut acc: Option<R> = None;
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.plus(&base),
                    None => base.clone(),
                });
            }
            base = base.plus(&base);
            n >>= 1;
        }
        acc.unwrap_or_else(|| self.minus(self))
    }
}

/// Shuffle of two words with multiplicities, by `ua ⧢ vb = (u ⧢ vb)a + (ua ⧢ v)b`.
pub fn shuffle_words(u: &Word, v: &Word) -> BTreeMap<Word, u64> {
    let (a, b) = (u.letters(), v.letters());
    // row[j] holds the shuffle of a[..i] and b[..j]
    let mut row: Vec<BTreeMap<Vec<u8>, u64>> = Vec::with_capacity(b.len() + 1);
    let mut acc = BTreeMap::new();
    acc.insert(Vec::new(), 1u64);
    row.push(acc);
    for j in 1..=b.len() {
        row.push(append_letter(&row[j - 1], b[j - 1]));
    }
    for i in 1..=a.len() {
        let mut next: Vec<BTreeMap<Vec<u8>, u64>> = Vec::with_capacity(b.len() + 1);
        next.push(append_letter(&row[0], a[i - 1]));
        for j in 1..=b.len() {
            let mut cell = append_letter(&row[j], a[i - 1]);
            for (w, m) in append_letter(&next[j - 1], b[j - 1]) {
                *cell.entry(w).or_insert(0) += m;
            }
            next.push(cell);
        }
        row = next;
    }
    row.pop()
        .expect("nonempty table")
        .into_iter()
        .map(|(w, m)| (Word::new(w), m))
        .collect()
}

fn append_letter(src: &BTreeMap<Vec<u8>, u64>, x: u8) -> BTreeMap<Vec<u8>, u64> {
    src.iter()
        .map(|(w, &m)| {
            let mut w = w.clone();
            w.push(x);
            (w, m)
        })
        .collect()
}

/// Shuffle type polynomial `SH_{i,j}(y, x)` over `{1,2}` (letter 2 is `y`, letter 1
/// is `x`), by the recursion `SH_{i,j} = y SH_{i-1,j} + x SH_{i,j-1}`.
pub fn sh_word_basis(i: usize, j: usize) -> FreePoly<Rational> {
    sh_word_multi(&[j, i], Alphabet::binary())
}

/// `2^i ⧢ 1^j`, the shuffle route to the same polynomial.
pub fn sh_word_basis_via_shuffle(i: usize, j: usize) -> FreePoly<Rational> {
    sh_word_multi_via_shuffle(&[j, i], Alphabet::binary())
}

/// Multinomial shuffle type polynomial: the sum of all words with `counts[x-1]`
/// occurrences of each letter `x`, by the left-letter recursion.
pub fn sh_word_multi(counts: &[usize], alphabet: Alphabet) -> FreePoly<Rational> {
    fn rec(
        counts: &mut Vec<usize>,
        alphabet: Alphabet,
        memo: &mut HashMap<Vec<usize>, FreePoly<Rational>>,
    ) -> FreePoly<Rational> {
        if let Some(p) = memo.get(counts) {
            return p.clone();
        }
        let result = if counts.iter().all(|&c| c == 0) {
            FreePoly::one(alphabet)
        } else {
            let mut acc = FreePoly::zero(alphabet);
            for x in 0..counts.len() {
                if counts[x] == 0 {
                    continue;
                }
                counts[x] -= 1;
                let sub = rec(counts, alphabet, memo);
                counts[x] += 1;
                let letter = Word::letter(x as u8 + 1);
                for (w, c) in sub.terms {
                    acc.add_term(letter.concat(&w), c);
                }
            }
            acc
        };
        memo.insert(counts.clone(), result.clone());
        result
    }
    let mut counts = counts.to_vec();
    counts.resize(alphabet.size() as usize, 0);
    rec(&mut counts, alphabet, &mut HashMap::new())
}

/// `m^{i_m} ⧢ ... ⧢ 1^{i_1}`.
pub fn sh_word_multi_via_shuffle(counts: &[usize], alphabet: Alphabet) -> FreePoly<Rational> {
    let mut acc = FreePoly::one(alphabet);
    for (x, &c) in counts.iter().enumerate().rev() {
        let power = FreePoly::word(alphabet, Word::letter(x as u8 + 1).repeat(c));
        acc = acc.shuffle_product(&power).expect("same alphabet");
    }
    acc
}

impl<R: Ring> Add for &FreePoly<R> {
    type Output = FreePoly<R>;
    /// Panics on an alphabet mismatch; use [`FreePoly::try_add`] to check.
    fn add(self, rhs: &FreePoly<R>) -> FreePoly<R> {
        self.try_add(rhs).expect("alphabet mismatch")
    }
}

impl<R: Ring> Sub for &FreePoly<R> {
    type Output = FreePoly<R>;
    fn sub(self, rhs: &FreePoly<R>) -> FreePoly<R> {
        self.try_sub(rhs).expect("alphabet mismatch")
    }
}

impl<R: Ring> Mul for &FreePoly<R> {
    type Output = FreePoly<R>;
    fn mul(self, rhs: &FreePoly<R>) -> FreePoly<R> {
        self.try_mul(rhs).expect("alphabet mismatch")
    }
}

impl<R: Ring> Neg for &FreePoly<R> {
    type Output = FreePoly<R>;
    fn neg(self) -> FreePoly<R> {
        self.neg_poly()
    }
}

/// Joins `(coefficient, body)` pairs as `c1*b1 + c2*b2 - c3*b3`.
pub(crate) fn join_terms<'a>(terms: impl Iterator<Item = (String, String)> + 'a) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let simple_neg = c.starts_with('-') && !c[1..].contains([' ', '+', '-']);
        let (sign, c) = if simple_neg {
            ("-", c[1..].to_string())
        } else {
            ("+", c)
        };
        let c = if c.contains(' ') { format!("({c})") } else { c };
        match (i, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            (_, s) => {
                out.push(' ');
                out.push_str(s);
                out.push(' ');
            }
        }
        out.push_str(&c);
        out.push('*');
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<R: Ring> fmt::Display for FreePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.alphabet;
        f.write_str(&join_terms(self.terms.iter().map(|(w, c)| {
            let body = if w.is_empty() {
                "w()".to_string()
            } else {
                format!("w({})", w.render(alphabet))
            };
            (c.to_string(), body)
        })))
    }
}

/// Total of all coefficients, as a rational.
pub fn coefficient_mass(p: &FreePoly<Rational>) -> Rational {
    p.terms().values().fold(rat(0), |a, c| a + c)
}
