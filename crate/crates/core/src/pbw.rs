//! Lyndon-Shirshov basis elements and PBW coordinates in the free algebra.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freepoly::{join_terms, FreePoly};
use crate::rings::{Rational, Ring};
use crate::words::{
    cfl_factorize, standard_factorization, words_with_multidegree, Alphabet, LyndonWord, Word,
};

/// `E_{α₁}^{t₁} ⋯ E_{αₙ}^{tₙ}` with `α₁ ≻ ⋯ ≻ αₙ`.
///
/// Monomials are ordered by their expanded word `α₁^{t₁}⋯αₙ^{tₙ}`; by uniqueness of the
/// Lyndon factorization this word determines the monomial.
#[derive(Debug, Clone)]
pub struct PbwMonomial {
    factors: Vec<(LyndonWord, u32)>,
    word: Word,
}

impl PbwMonomial {
    pub fn unit() -> Self {
        Self {
            factors: Vec::new(),
            word: Word::empty(),
        }
    }

    pub fn new(factors: Vec<(LyndonWord, u32)>) -> Result<Self> {
        for (w, t) in &factors {
            if *t == 0 {
                return Err(Error::InvalidMonomial(format!("zero exponent on E({w})")));
            }
        }
        for pair in factors.windows(2) {
            if pair[0].0 <= pair[1].0 {
                return Err(Error::InvalidMonomial(format!(
                    "factors must strictly decrease, got E({}) before E({})",
                    pair[0].0, pair[1].0
                )));
            }
        }
        let mut letters = Vec::new();
        for (w, t) in &factors {
            for _ in 0..*t {
                letters.extend_from_slice(w.word().letters());
            }
        }
        Ok(Self {
            factors,
            word: Word::new(letters),
        })
    }

    /// The monomial whose expanded word is `w`, read off the Lyndon factorization.
    pub fn from_word(w: &Word) -> Self {
        if w.is_empty() {
            return Self::unit();
        }
        let mut factors: Vec<(LyndonWord, u32)> = Vec::new();
        for f in cfl_factorize(w).expect("nonempty word") {
            match factors.last_mut() {
                Some((last, t)) if *last == f => *t += 1,
                _ => factors.push((f, 1)),
            }
        }
        Self {
            factors,
            word: w.clone(),
        }
    }

    pub fn single(alpha: LyndonWord) -> Self {
        Self::new(vec![(alpha, 1)]).expect("single factor")
    }

    pub fn factors(&self) -> &[(LyndonWord, u32)] {
        &self.factors
    }

    /// Concatenation of the factors with multiplicity.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn multidegree(&self, alphabet: Alphabet) -> Vec<usize> {
        self.word.multidegree(alphabet)
    }

    pub fn contains_factor(&self, alpha: &LyndonWord) -> bool {
        self.factors.iter().any(|(w, _)| w == alpha)
    }

    pub fn first_factor(&self) -> Option<&LyndonWord> {
        self.factors.first().map(|(w, _)| w)
    }

    pub fn last_factor(&self) -> Option<&LyndonWord> {
        self.factors.last().map(|(w, _)| w)
    }

    /// Text form `E(2)^2*E(12)*E(1)`; the unit prints as `1`.
    pub fn render(&self, alphabet: Alphabet) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(w, t)| {
                if *t == 1 {
                    format!("E({})", w.word().render(alphabet))
                } else {
                    format!("E({})^{t}", w.word().render(alphabet))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// LaTeX form `E_{2}^{2}E_{12}E_{1}`.
    pub fn latex(&self, alphabet: Alphabet) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(w, t)| {
                let base = format!("E_{{{}}}", w.word().render(alphabet));
                if *t == 1 {
                    base
                } else {
                    format!("{base}^{{{t}}}")
                }
            })
            .collect()
    }
}

impl PartialEq for PbwMonomial {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for PbwMonomial {}

impl Hash for PbwMonomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word)
    }
}

/// All PBW monomials of the given multidegree, in increasing order.
pub fn pbw_monomials_with_multidegree(counts: &[usize]) -> Vec<PbwMonomial> {
    words_with_multidegree(counts)
        .iter()
        .map(PbwMonomial::from_word)
        .collect()
}

/// Linear combination of PBW monomials.
#[derive(Debug, Clone, PartialEq)]
pub struct PbwPoly<R: Ring> {
    alphabet: Alphabet,
    terms: BTreeMap<PbwMonomial, R>,
}

impl<R: Ring> PbwPoly<R> {
    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(alphabet: Alphabet, m: PbwMonomial, c: R) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (PbwMonomial, R)>) -> Self {
        let mut p = Self::zero(alphabet);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, R> {
        &self.terms
    }

    /// Terms in decreasing monomial order, the order used for display.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&PbwMonomial, &R)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&R> {
        self.terms.get(m)
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

    pub fn add_term(&mut self, m: PbwMonomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.plus(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                self.alphabet.size(),
                other.alphabet.size(),
            ));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale_by(|c| c.negated()))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.scale_by(|a| c.times(a))
    }

    fn scale_by(&self, f: impl Fn(&R) -> R) -> Self {
        Self::from_terms(
            self.alphabet,
            self.terms.iter().map(|(m, a)| (m.clone(), f(a))),
        )
    }

    pub fn filter(&self, mut keep: impl FnMut(&PbwMonomial) -> bool) -> Self {
        Self {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> PbwPoly<S> {
        PbwPoly::from_terms(
            self.alphabet,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    pub fn try_map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<PbwPoly<S>> {
        let mut out = PbwPoly::zero(self.alphabet);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// LaTeX rendering with unit coefficients and exponents omitted.
    pub fn latex(&self) -> String {
        let mut out = String::new();
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let c = c.to_string();
            let (neg, c) = match c.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest.to_string()),
                _ => (false, c),
            };
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let body = m.latex(self.alphabet);
            if c == "1" && !m.is_unit() {
                out.push_str(&body);
            } else if c.contains(' ') {
                out.push_str(&format!("({c})"));
                if !m.is_unit() {
                    out.push_str(&body);
                }
            } else {
                out.push_str(&c);
                if !m.is_unit() {
                    out.push_str(&body);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<R: Ring> fmt::Display for PbwPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.alphabet;
        f.write_str(&join_terms(
            self.terms_desc()
                .map(|(m, c)| (c.to_string(), m.render(alphabet))),
        ))
    }
}

/// Memoizing engine for basis elements, expansions and rewriting over `ℚ`.
#[derive(Debug)]
pub struct PbwEngine {
    alphabet: Alphabet,
    basis: Mutex<HashMap<LyndonWord, Arc<FreePoly<Rational>>>>,
    expansions: Mutex<HashMap<Word, Arc<FreePoly<Rational>>>>,
}

impl PbwEngine {
    pub fn new(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            basis: Mutex::new(HashMap::new()),
            expansions: Mutex::new(HashMap::new()),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// `E_α`: the letter itself, or `[E_β, E_γ]` for `st(α) = (β, γ)`.
    pub fn basis_element(&self, alpha: &LyndonWord) -> Arc<FreePoly<Rational>> {
        if let Some(p) = self.basis.lock().expect("cache poisoned").get(alpha) {
            return Arc::clone(p);
        }
        let value = if alpha.is_letter() {
            FreePoly::word(self.alphabet, alpha.word().clone())
        } else {
            let (beta, gamma) = standard_factorization(alpha).expect("composite Lyndon word");
            let eb = self.basis_element(&beta);
            let eg = self.basis_element(&gamma);
            eb.commutator(&eg).expect("same alphabet")
        };
        let value = Arc::new(value);
        self.basis
            .lock()
            .expect("cache poisoned")
            .insert(alpha.clone(), Arc::clone(&value));
        value
    }

    /// Word-basis expansion of a monomial, factors multiplied in stored order.
    pub fn expand(&self, m: &PbwMonomial) -> Arc<FreePoly<Rational>> {
        if let Some(p) = self.expansions.lock().expect("cache poisoned").get(m.word()) {
            return Arc::clone(p);
        }
        let mut acc = FreePoly::one(self.alphabet);
        for (alpha, t) in m.factors() {
            let e = self.basis_element(alpha);
            for _ in 0..*t {
                acc = &acc * &e;
            }
        }
        let acc = Arc::new(acc);
        self.expansions
            .lock()
            .expect("cache poisoned")
            .insert(m.word().clone(), Arc::clone(&acc));
        acc
    }

    pub fn expand_poly(&self, p: &PbwPoly<Rational>) -> FreePoly<Rational> {
        let mut out = FreePoly::zero(self.alphabet);
        for (m, c) in p.terms() {
            for (w, a) in self.expand(m).terms() {
                out.add_term(w.clone(), c * a);
            }
        }
        out
    }

    /// Whether the least word of the expansion of `m` is its concatenation word with
    /// coefficient 1.
    pub fn is_triangular(&self, m: &PbwMonomial) -> bool {
        let e = self.expand(m);
        matches!(e.min_term(), Some((w, c)) if w == m.word() && c.is_one())
    }

    /// PBW coordinates of `f`, by repeated elimination of the least word.
    pub fn rewrite(&self, f: &FreePoly<Rational>) -> Result<PbwPoly<Rational>> {
        let f = f.with_alphabet(self.alphabet)?;
        let mut rest = f.into_terms();
        let mut out = PbwPoly::zero(self.alphabet);
        while let Some((w, c)) = rest.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            let m = PbwMonomial::from_word(&w);
            if !self.is_triangular(&m) {
                let md = w.multidegree(self.alphabet);
                let component: BTreeMap<Word, Rational> = rest
                    .iter()
                    .filter(|(u, _)| u.multidegree(self.alphabet) == md)
                    .map(|(u, c)| (u.clone(), c.clone()))
                    .collect();
                for u in component.keys() {
                    rest.remove(u);
                }
                let solved = self.solve_component(&md, &component)?;
                out = out.try_add(&solved)?;
                continue;
            }
            for (u, a) in self.expand(&m).terms() {
                let entry = rest.entry(u.clone()).or_insert_with(Rational::zero);
                *entry -= &c * a;
                if Zero::is_zero(entry) {
                    rest.remove(u);
                }
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    /// PBW coordinates of a homogeneous component by exact Gaussian elimination
    /// against all monomials of that multidegree.
    pub fn solve_component(
        &self,
        multidegree: &[usize],
        component: &BTreeMap<Word, Rational>,
    ) -> Result<PbwPoly<Rational>> {
        let words = words_with_multidegree(multidegree);
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let monomials: Vec<PbwMonomial> = words.iter().map(PbwMonomial::from_word).collect();
        let n = words.len();
        // augmented matrix: rows are words, columns monomials, last column the target
        let mut rows = vec![vec![Rational::zero(); n + 1]; n];
        for (j, m) in monomials.iter().enumerate() {
            for (w, a) in self.expand(m).terms() {
                let i = *index.get(w).ok_or_else(|| {
                    Error::TheoremViolation(format!("expansion of {} leaves its multidegree", m.render(self.alphabet)))
                })?;
                rows[i][j] = a.clone();
            }
        }
        for (w, c) in component {
            let i = *index
                .get(w)
                .ok_or_else(|| Error::InvalidArgument(format!("word {w} outside component")))?;
            rows[i][n] = c.clone();
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !Zero::is_zero(&rows[r][col]))
                .ok_or_else(|| Error::TheoremViolation("PBW monomials are linearly dependent".into()))?;
            rows.swap(col, pivot);
            let inv = rows[col][col].recip();
            for v in rows[col].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != col && !Zero::is_zero(&row[col]) {
                    let factor = row[col].clone();
                    for (v, p) in row.iter_mut().zip(&pivot_row) {
                        *v -= &factor * p;
                    }
                }
            }
        }
        Ok(PbwPoly::from_terms(
            self.alphabet,
            monomials.into_iter().zip(rows).map(|(m, row)| (m, row[n].clone())),
        ))
    }

    /// PBW form of `[E_α, E_β]` for `α ≺ β`, checked against the structure of
    /// commutators of basis elements.
    pub fn commutator_ls(&self, alpha: &LyndonWord, beta: &LyndonWord) -> Result<PbwPoly<Rational>> {
        if alpha >= beta {
            return Err(Error::OrderViolation {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
            });
        }
        let ea = self.basis_element(alpha);
        let eb = self.basis_element(beta);
        let result = self.rewrite(&ea.commutator(&eb)?)?;
        let joined = LyndonWord::new(alpha.word().concat(beta.word()))?;
        let joined_m = PbwMonomial::single(joined.clone());
        let direct = alpha.is_letter() || {
            let (_, right) = standard_factorization(alpha)?;
            right >= *beta
        };
        let violation = |msg: String| Err(Error::TheoremViolation(msg));
        if direct {
            if result != PbwPoly::monomial(self.alphabet, joined_m, Rational::one()) {
                return violation(format!("[E({alpha}), E({beta})] = {result}, expected E({joined})"));
            }
            return Ok(result);
        }
        let md = joined.word().multidegree(self.alphabet);
        for m in result.terms().keys() {
            let ok = m.factors().len() == 1
                && m.factors()[0].1 == 1
                && m.factors()[0].0 >= joined
                && m.factors()[0].0 < *beta
                && m.multidegree(self.alphabet) == md;
            if !ok {
                return violation(format!(
                    "[E({alpha}), E({beta})] contains {}",
                    m.render(self.alphabet)
                ));
            }
        }
        if result.coeff(&joined_m).is_none() {
            return violation(format!("[E({alpha}), E({beta})] lacks E({joined})"));
        }
        Ok(result)
    }
}

/// Whether every `E_γ` in `[E_α, E_β]` satisfies `α_R ⪯ γ_R ≺ β`, where `_R` is the
/// right standard factor. Only meaningful when `α_R ≺ β`.
pub fn refined_commutator_holds(
    alpha: &LyndonWord,
    beta: &LyndonWord,
    commutator: &PbwPoly<Rational>,
) -> Result<bool> {
    let (_, alpha_r) = standard_factorization(alpha)?;
    for m in commutator.terms().keys() {
        let gamma = match m.factors() {
            [(g, 1)] if !g.is_letter() => g,
            _ => return Ok(false),
        };
        let (_, gamma_r) = standard_factorization(gamma)?;
        if gamma_r < alpha_r || gamma_r >= *beta {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E_α` without a shared cache.
pub fn ls_basis_element(alpha: &LyndonWord, alphabet: Alphabet) -> FreePoly<Rational> {
    (*PbwEngine::new(alphabet).basis_element(alpha)).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freepoly::sh_word_basis;
    use crate::rings::rat;

    fn b() -> Alphabet {
        Alphabet::binary()
    }

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::parse(s, b()).unwrap()
    }

    fn mono(spec: &[(&str, u32)]) -> PbwMonomial {
        PbwMonomial::new(spec.iter().map(|(s, t)| (lw(s), *t)).collect()).unwrap()
    }

    fn words(terms: &[(&str, i64)]) -> FreePoly<Rational> {
        FreePoly::from_terms(
            b(),
            terms.iter().map(|(s, c)| (Word::parse(s, b()).unwrap(), rat(*c))),
        )
    }

    fn pbw(terms: &[(&[(&str, u32)], i64)]) -> PbwPoly<Rational> {
        PbwPoly::from_terms(b(), terms.iter().map(|(m, c)| (mono(m), rat(*c))))
    }

    #[test]
    fn basis_elements() {
        let e = PbwEngine::new(b());
        assert_eq!(*e.basis_element(&lw("1")), words(&[("1", 1)]));
        assert_eq!(*e.basis_element(&lw("12")), words(&[("12", 1), ("21", -1)]));
        assert_eq!(
            *e.basis_element(&lw("112")),
            words(&[("112", 1), ("121", -2), ("211", 1)])
        );
    }

    #[test]
    fn expansions() {
        let e = PbwEngine::new(b());
        assert_eq!(*e.expand(&PbwMonomial::unit()), FreePoly::one(b()));
        assert_eq!(*e.expand(&mono(&[("2", 1), ("1", 1)])), words(&[("21", 1)]));
        assert_eq!(
            *e.expand(&mono(&[("2", 1), ("12", 1)])),
            words(&[("212", 1), ("221", -1)])
        );
    }

    #[test]
    fn monomial_validation() {
        assert!(PbwMonomial::new(vec![(lw("1"), 1), (lw("2"), 1)]).is_err());
        assert!(PbwMonomial::new(vec![(lw("2"), 0)]).is_err());
        let m = PbwMonomial::from_word(&Word::parse("2212121", b()).unwrap());
        assert_eq!(m, mono(&[("2", 2), ("12", 2), ("1", 1)]));
        assert_eq!(m.render(b()), "E(2)^2*E(12)^2*E(1)");
        assert_eq!(m.latex(b()), "E_{2}^{2}E_{12}^{2}E_{1}");
    }

    #[test]
    fn rewrite_examples() {
        let e = PbwEngine::new(b());
        assert_eq!(
            e.rewrite(&words(&[("21", 1), ("12", 1)])).unwrap(),
            pbw(&[(&[("2", 1), ("1", 1)], 2), (&[("12", 1)], 1)])
        );
        let sh22 = e.rewrite(&sh_word_basis(2, 2)).unwrap();
        let expected = pbw(&[
            (&[("2", 2), ("1", 2)], 6),
            (&[("2", 1), ("12", 1), ("1", 1)], 12),
            (&[("2", 1), ("112", 1)], 4),
            (&[("122", 1), ("1", 1)], 4),
            (&[("12", 2)], 3),
            (&[("1122", 1)], 1),
        ]);
        assert_eq!(sh22, expected);
        assert_eq!(
            sh22.latex(),
            "6E_{2}^{2}E_{1}^{2} + 12E_{2}E_{12}E_{1} + 4E_{2}E_{112} + 4E_{122}E_{1} + 3E_{12}^{2} + E_{1122}"
        );
    }

    #[test]
    fn solve_matches_elimination() {
        let e = PbwEngine::new(b());
        let f = sh_word_basis(2, 3);
        let direct = e.rewrite(&f).unwrap();
        let solved = e.solve_component(&[3, 2], f.terms()).unwrap();
        assert_eq!(direct, solved);
    }

    #[test]
    fn commutator_examples() {
        let e = PbwEngine::new(b());
        assert_eq!(
            e.commutator_ls(&lw("112"), &lw("2")).unwrap(),
            pbw(&[(&[("1122", 1)], 1)])
        );
        assert_eq!(
            e.commutator_ls(&lw("1112"), &lw("2")).unwrap(),
            pbw(&[(&[("11122", 1)], 1), (&[("11212", 1)], -1)])
        );
        assert_eq!(
            e.commutator_ls(&lw("1122"), &lw("2")).unwrap(),
            pbw(&[(&[("12122", 1)], 1), (&[("11222", 1)], 1)])
        );
        assert!(matches!(
            e.commutator_ls(&lw("2"), &lw("12")),
            Err(Error::OrderViolation { .. })
        ));
    }
}
