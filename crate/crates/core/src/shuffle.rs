//! Shuffle type polynomials in PBW coordinates and their closed coefficient formula.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freepoly::{sh_word_basis, sh_word_multi, FreePoly};
use crate::pbw::{PbwEngine, PbwMonomial, PbwPoly};
use crate::rings::{factorial, PrimeFieldElem, Rational};
use crate::words::{words_with_multidegree, Alphabet, LyndonWord, Word};

/// Letter counts indexed by `letter - 1`. Over `{1,2}` the binary pair `(i, j)`
/// (i copies of 2, j copies of 1) is `[j, i]`.
pub type MultiDegree = Vec<usize>;

pub fn binary_degree(i: usize, j: usize) -> MultiDegree {
    vec![j, i]
}

/// `SH` of the given multidegree in PBW coordinates.
pub fn sh_pbw(engine: &PbwEngine, d: &[usize]) -> Result<PbwPoly<Rational>> {
    let alphabet = engine.alphabet();
    if alphabet.size() < 2 {
        return Err(Error::InvalidAlphabet(alphabet.size() as usize));
    }
    let words = if alphabet.size() == 2 && d.len() <= 2 {
        let j = d.first().copied().unwrap_or(0);
        let i = d.get(1).copied().unwrap_or(0);
        sh_word_basis(i, j)
    } else {
        sh_word_multi(d, alphabet)
    };
    engine.rewrite(&words)
}

/// The coefficients `C_{E_α}` of single basis elements, memoized.
#[derive(Debug, Default)]
pub struct LsCoefficients {
    memo: Mutex<HashMap<LyndonWord, BigInt>>,
}

impl LsCoefficients {
    pub fn new() -> Self {
        Self::default()
    }

    /// `C_{E_α}`: 1 on letters; otherwise, with `α = a·β₁^{a₁}⋯β_r^{a_r}` (Lyndon
    /// factorization after the first letter), `(|α|-1)!/∏(|β_c|!)^{a_c} a_c! · ∏ C_{β_c}^{a_c}`.
    pub fn get(&self, alpha: &LyndonWord) -> Result<BigInt> {
        if alpha.is_letter() {
            return Ok(BigInt::one());
        }
        if let Some(c) = self.memo.lock().expect("cache poisoned").get(alpha) {
            return Ok(c.clone());
        }
        let rest = alpha.word().suffix(1);
        let tail = PbwMonomial::from_word(&rest);
        for (beta, _) in tail.factors() {
            if beta <= alpha {
                return Err(Error::TheoremViolation(format!(
                    "factor {beta} of {alpha} after the first letter does not exceed it"
                )));
            }
        }
        let value = self.monomial_coefficient(&tail)?;
        self.memo
            .lock()
            .expect("cache poisoned")
            .insert(alpha.clone(), value.clone());
        Ok(value)
    }

    /// `(Σ|α_k| t_k)! / ∏(|α_k|!)^{t_k} t_k! · ∏ C_{E_{α_k}}^{t_k}`, asserting integrality.
    pub fn monomial_coefficient(&self, m: &PbwMonomial) -> Result<BigInt> {
        let mut denom = BigInt::one();
        let mut numer = factorial(m.degree() as u64);
        for (alpha, t) in m.factors() {
            let fa = factorial(alpha.len() as u64);
            for _ in 0..*t {
                denom *= &fa;
                numer *= self.get(alpha)?;
            }
            denom *= factorial(*t as u64);
        }
        let (q, r) = numer.div_rem(&denom);
        if !r.is_zero() {
            return Err(Error::TheoremViolation(format!(
                "closed-form coefficient of {} is {numer}/{denom}, not an integer",
                m.render(Alphabet::new(9).expect("valid size"))
            )));
        }
        Ok(q)
    }
}

/// `C_{E_α}` with a throwaway cache.
pub fn c_e_alpha(alpha: &LyndonWord) -> Result<BigInt> {
    LsCoefficients::new().get(alpha)
}

/// Closed-form coefficient of `m` in the shuffle type polynomial of its multidegree.
pub fn coeff_closed_form(m: &PbwMonomial) -> Result<Rational> {
    LsCoefficients::new()
        .monomial_coefficient(m)
        .map(Rational::from_integer)
}

/// `SH` of multidegree `d` assembled only from the closed formula.
pub fn sh_closed_form(
    coeffs: &LsCoefficients,
    alphabet: Alphabet,
    d: &[usize],
) -> Result<PbwPoly<Rational>> {
    let mut counts = d.to_vec();
    counts.resize(alphabet.size() as usize, 0);
    let mut out = PbwPoly::zero(alphabet);
    for w in words_with_multidegree(&counts) {
        let m = PbwMonomial::from_word(&w);
        let c = coeffs.monomial_coefficient(&m)?;
        out.add_term(m, Rational::from_integer(c));
    }
    Ok(out)
}

/// `(E₁ + ⋯ + E_m)^d` assembled from the closed formula over all PBW monomials of
/// degree `d`.
pub fn binomial_ls(alphabet: Alphabet, d: usize) -> Result<PbwPoly<Rational>> {
    if alphabet.size() < 2 {
        return Err(Error::InvalidAlphabet(alphabet.size() as usize));
    }
    let coeffs = LsCoefficients::new();
    let mut out = PbwPoly::zero(alphabet);
    for m in pbw_monomials_of_degree(alphabet, d) {
        let c = coeffs.monomial_coefficient(&m)?;
        out.add_term(m, Rational::from_integer(c));
    }
    Ok(out)
}

/// PBW rewriting of the brute-force power `(1 + ⋯ + m)^d`.
pub fn binomial_by_rewriting(engine: &PbwEngine, d: usize) -> Result<PbwPoly<Rational>> {
    let alphabet = engine.alphabet();
    let sum = FreePoly::from_terms(
        alphabet,
        alphabet.letters().map(|x| (Word::letter(x), Rational::one())),
    );
    engine.rewrite(&sum.pow(d as u32))
}

/// Reduces an integral PBW polynomial modulo `p`.
pub fn reduce_mod_p(poly: &PbwPoly<Rational>, p: u64) -> Result<PbwPoly<PrimeFieldElem>> {
    poly.try_map_coeffs(|c| PrimeFieldElem::from_rational(c, p))
}

/// `SH_{k,p-k}` reduced mod `p`, asserting that only single basis elements of length
/// `p` survive.
pub fn sh_pbw_char_p(engine: &PbwEngine, k: usize, p: u64) -> Result<PbwPoly<PrimeFieldElem>> {
    if !crate::rings::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pu = p as usize;
    if k == 0 || k >= pu {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= p-1, got k={k}, p={p}")));
    }
    let reduced = reduce_mod_p(&sh_pbw(engine, &binary_degree(k, pu - k))?, p)?;
    for m in reduced.terms().keys() {
        let single = matches!(m.factors(), [(a, 1)] if a.len() == pu);
        if !single {
            return Err(Error::TheoremViolation(format!(
                "SH_{{{k},{}}} mod {p} keeps {}",
                pu - k,
                m.render(engine.alphabet())
            )));
        }
    }
    Ok(reduced)
}

/// Which letter's multiplicity triggers the kill in the characteristic-`p` quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharPKill {
    /// Kill `E_α` with `α(1) ≥ 2`, `|α| = p`.
    RepeatedOnes,
    /// Kill `E_α` with `α(2) ≥ 2`, `|α| = p`.
    RepeatedTwos,
}

/// Checks the reduced `SH_{k,p-k}` in the quotient where the chosen length-`p` basis
/// elements vanish: only `E_{12⋯2}` (or `E_{1⋯12}`) survives, in the expected degree.
pub fn char_p_kill_check(engine: &PbwEngine, p: u64, kill: CharPKill) -> Result<()> {
    let pu = p as usize;
    let one = PrimeFieldElem::new(1, p)?;
    for k in 1..pu {
        let reduced = sh_pbw_char_p(engine, k, p)?;
        let projected = reduced.filter(|m| {
            let a = m.factors()[0].0.word();
            match kill {
                CharPKill::RepeatedOnes => a.count(1) < 2,
                CharPKill::RepeatedTwos => a.count(2) < 2,
            }
        });
        let survivor = match kill {
            CharPKill::RepeatedOnes if k == pu - 1 => Some(Word::new(
                std::iter::once(1).chain(std::iter::repeat_n(2, pu - 1)).collect(),
            )),
            CharPKill::RepeatedTwos if k == 1 => Some(Word::new(
                std::iter::repeat_n(1, pu - 1).chain(std::iter::once(2)).collect(),
            )),
            _ => None,
        };
        let expected = match survivor {
            Some(w) => PbwPoly::monomial(
                engine.alphabet(),
                PbwMonomial::single(LyndonWord::new(w)?),
                one,
            ),
            None => PbwPoly::zero(engine.alphabet()),
        };
        if projected != expected {
            return Err(Error::TheoremViolation(format!(
                "SH_{{{k},{}}} mod {p} in the quotient is {projected}, expected {expected}",
                pu - k
            )));
        }
    }
    Ok(())
}

/// Compares closed form and rewriting for every multidegree of total at most
/// `max_total`; returns the number of multidegrees checked.
pub fn theorem_a_check(engine: &PbwEngine, max_total: usize) -> Result<usize> {
    let alphabet = engine.alphabet();
    let coeffs = LsCoefficients::new();
    let degrees: Vec<MultiDegree> = (0..=max_total)
        .flat_map(|n| compositions(n, alphabet.size() as usize))
        .collect();
    degrees
        .par_iter()
        .map(|d| {
            let closed = sh_closed_form(&coeffs, alphabet, d)?;
            let rewritten = sh_pbw(engine, d)?;
            if closed != rewritten {
                return Err(Error::TheoremViolation(format!(
                    "closed form differs from rewriting at multidegree {d:?}"
                )));
            }
            Ok(())
        })
        .collect::<Result<Vec<()>>>()
        .map(|v| v.len())
}

/// All vectors of `parts` nonnegative integers summing to `n`.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Enumerates PBW monomials of total degree `d` as non-increasing multisets of
/// Lyndon words, built from the Lyndon list rather than from word factorizations.
pub fn pbw_monomials_of_degree(alphabet: Alphabet, d: usize) -> Vec<PbwMonomial> {
    let lyndon = crate::words::lyndon_enumerate(alphabet, d.max(1));
    // decreasing order so that factors are chosen in the stored order
    let desc: Vec<LyndonWord> = lyndon.into_iter().rev().collect();
    let mut out = Vec::new();
    let mut current: Vec<(LyndonWord, u32)> = Vec::new();
    fn rec(
        desc: &[LyndonWord],
        start: usize,
        remaining: usize,
        current: &mut Vec<(LyndonWord, u32)>,
        out: &mut Vec<PbwMonomial>,
    ) {
        if remaining == 0 {
            out.push(PbwMonomial::new(current.clone()).expect("strictly decreasing"));
            return;
        }
        for idx in start..desc.len() {
            let len = desc[idx].len();
            let mut t = 1;
            while t * len <= remaining {
                current.push((desc[idx].clone(), t as u32));
                rec(desc, idx + 1, remaining - t * len, current, out);
                current.pop();
                t += 1;
            }
        }
    }
    rec(&desc, 0, d, &mut current, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;
    use crate::words::all_words;

    fn b() -> Alphabet {
        Alphabet::binary()
    }

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::parse(s, b()).unwrap()
    }

    fn mono(spec: &[(&str, u32)]) -> PbwMonomial {
        PbwMonomial::new(spec.iter().map(|(s, t)| (lw(s), *t)).collect()).unwrap()
    }

    #[test]
    fn ls_coefficients() {
        assert_eq!(c_e_alpha(&lw("1122")).unwrap(), BigInt::from(1));
        assert_eq!(c_e_alpha(&lw("11212")).unwrap(), BigInt::from(3));
        assert_eq!(c_e_alpha(&lw("12122")).unwrap(), BigInt::from(4));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            coeff_closed_form(&mono(&[("2", 1), ("12", 1), ("1", 1)])).unwrap(),
            rat(12)
        );
        assert_eq!(coeff_closed_form(&mono(&[("11212", 1), ("1", 1)])).unwrap(), rat(18));
        assert_eq!(coeff_closed_form(&mono(&[("12", 2)])).unwrap(), rat(3));
    }

    #[test]
    fn sh31() {
        let e = PbwEngine::new(b());
        let p = sh_pbw(&e, &binary_degree(3, 1)).unwrap();
        assert_eq!(
            p.to_string(),
            "4*E(2)^3*E(1) + 6*E(2)^2*E(12) + 4*E(2)*E(122) + 1*E(1222)"
        );
    }

    #[test]
    fn binomial_small() {
        let p = binomial_ls(b(), 2).unwrap();
        assert_eq!(p.latex(), "E_{2}^{2} + 2E_{2}E_{1} + E_{12} + E_{1}^{2}");
        assert_eq!(binomial_ls(b(), 0).unwrap().latex(), "1");
        let t = Alphabet::new(3).unwrap();
        assert_eq!(binomial_ls(t, 2).unwrap().len(), 9);
    }

    #[test]
    fn char_p_examples() {
        let e = PbwEngine::new(b());
        assert_eq!(sh_pbw_char_p(&e, 1, 3).unwrap().to_string(), "1*E(112)");
        assert_eq!(sh_pbw_char_p(&e, 2, 3).unwrap().to_string(), "1*E(122)");
        assert_eq!(sh_pbw_char_p(&e, 1, 2).unwrap().to_string(), "1*E(12)");
    }

    #[test]
    fn monomial_enumeration_matches_factorizations() {
        for d in 0..=6 {
            let from_lyndon = pbw_monomials_of_degree(b(), d);
            let mut from_words: Vec<PbwMonomial> =
                all_words(b(), d).iter().map(PbwMonomial::from_word).collect();
            from_words.sort();
            assert_eq!(from_lyndon, from_words);
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2).len(), 5);
        assert_eq!(compositions(3, 3).len(), 10);
    }
}
