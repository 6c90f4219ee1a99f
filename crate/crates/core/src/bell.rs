//! Bell differential polynomials, their duals, and their relation to shuffle type
//! polynomials in PBW coordinates.

use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::freepoly::FreePoly;
use crate::pbw::{PbwEngine, PbwMonomial, PbwPoly};
use crate::rings::{binomial, factorial, Rational};
use crate::shuffle::{binary_degree, sh_pbw, LsCoefficients};
use crate::words::{words_with_multidegree, Alphabet, LyndonWord, Word};

/// Which letters play `x` and `y` in a (dual) Bell recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Roles {
    pub x: u8,
    pub y: u8,
}

impl Roles {
    /// `x = 1`, `y = 2`: the assignment of `B̂_{n,k}(E₁, E₂)`.
    pub const STANDARD: Roles = Roles { x: 1, y: 2 };
    /// `x = 2`, `y = 1`: the assignment of `B̂*_{n,k}(E₂, E₁)`.
    pub const SWAPPED: Roles = Roles { x: 2, y: 1 };
}

/// Partial Bell differential polynomials `B̂_{n,k}` in the word basis, built by
/// `B̂_{n,k} = y B̂_{n-1,k-1} + [x, B̂_{n-1,k}]` with `B̂_{0,0} = 1`.
#[derive(Debug, Clone)]
pub struct BellTable {
    alphabet: Alphabet,
    roles: Roles,
    dual: bool,
    rows: Vec<Vec<FreePoly<Rational>>>,
}

impl BellTable {
    pub fn new(max_n: usize, roles: Roles) -> Self {
        Self::build(max_n, roles, false)
    }

    /// Dual table: `B̂*_{n,k} = B̂*_{n-1,k} x - x B̂*_{n-1,k} + B̂*_{n-1,k-1} y`.
    pub fn dual(max_n: usize, roles: Roles) -> Self {
        Self::build(max_n, roles, true)
    }

    fn build(max_n: usize, roles: Roles, dual: bool) -> Self {
        let alphabet = Alphabet::binary();
        let x = FreePoly::<Rational>::letter(alphabet, roles.x);
        let y = FreePoly::<Rational>::letter(alphabet, roles.y);
        let mut rows: Vec<Vec<FreePoly<Rational>>> = vec![vec![FreePoly::one(alphabet)]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let get = |k: usize| prev.get(k).cloned().unwrap_or_else(|| FreePoly::zero(alphabet));
            let row: Vec<FreePoly<Rational>> = (0..=n)
                .map(|k| {
                    let same = get(k);
                    let lower = if k > 0 { get(k - 1) } else { FreePoly::zero(alphabet) };
                    if dual {
                        let ad = same.commutator(&x).expect("same alphabet");
                        &ad + &(&lower * &y)
                    } else {
                        let ad = x.commutator(&same).expect("same alphabet");
                        &(&y * &lower) + &ad
                    }
                })
                .collect();
            rows.push(row);
        }
        Self {
            alphabet,
            roles,
            dual,
            rows,
        }
    }

    pub fn roles(&self) -> Roles {
        self.roles
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `B̂_{n,k}`; zero when `k > n`.
    pub fn partial(&self, n: usize, k: usize) -> FreePoly<Rational> {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(|| FreePoly::zero(self.alphabet))
    }

    /// `B̂_n = Σ_k B̂_{n,k}`.
    pub fn total(&self, n: usize) -> FreePoly<Rational> {
        (0..=n).fold(FreePoly::zero(self.alphabet), |acc, k| &acc + &self.partial(n, k))
    }
}

/// `B̂_{n,k}(E₁, E₂)` in both bases.
pub fn bell_partial(engine: &PbwEngine, n: usize, k: usize) -> Result<(FreePoly<Rational>, PbwPoly<Rational>)> {
    let words = BellTable::new(n, Roles::STANDARD).partial(n, k);
    let pbw = engine.rewrite(&words)?;
    Ok((words, pbw))
}

/// `B̂*_{n,k}(E₂, E₁)` in PBW coordinates.
pub fn bell_dual(engine: &PbwEngine, n: usize, k: usize) -> Result<PbwPoly<Rational>> {
    engine.rewrite(&BellTable::dual(n, Roles::SWAPPED).partial(n, k))
}

/// `Σ_k binom(n,k) B̂_k x^{n-k}` and `Σ_k binom(n,k) x^{n-k} B̂*_k` with `x = 1`, `y = 2`.
pub fn binomial_via_bell(n: usize) -> (FreePoly<Rational>, FreePoly<Rational>) {
    let alphabet = Alphabet::binary();
    let table = BellTable::new(n, Roles::STANDARD);
    let dual = BellTable::dual(n, Roles::STANDARD);
    let mut left = FreePoly::zero(alphabet);
    let mut right = FreePoly::zero(alphabet);
    for k in 0..=n {
        let c = Rational::from_integer(binomial(n as u64, k as u64));
        let xs = Word::letter(1).repeat(n - k);
        left = &left + &table.total(k).right_mul_word(&xs).scale(&c);
        right = &right + &dual.total(k).left_mul_word(&xs).scale(&c);
    }
    (left, right)
}

/// Which end of an `SH` term is inspected by [`sh_filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterSide {
    /// Drop terms whose last factor is `E₁`.
    RightmostNotE1,
    /// Drop terms whose first factor is `E₂`.
    LeftmostNotE2,
}

/// `SH_{i,j}` with the terms of the chosen side removed.
pub fn sh_filter(engine: &PbwEngine, i: usize, j: usize, side: FilterSide) -> Result<PbwPoly<Rational>> {
    let sh = sh_pbw(engine, &binary_degree(i, j))?;
    let e1 = LyndonWord::letter(1);
    let e2 = LyndonWord::letter(2);
    Ok(sh.filter(|m| match side {
        FilterSide::RightmostNotE1 => m.last_factor() != Some(&e1),
        FilterSide::LeftmostNotE2 => m.first_factor() != Some(&e2),
    }))
}

/// `B̂_{n,k}(E₁, E₂ + ⋯ + E_m)` assembled from the closed coefficient formula: all PBW
/// monomials with `n-k` ones and `k` other letters whose last factor is not `E₁`,
/// each with coefficient `n!/∏(|α|!)^{t} t! · ∏ C_{E_α}^{t}`.
pub fn bell_ls_form(alphabet: Alphabet, n: usize, k: usize) -> Result<PbwPoly<Rational>> {
    if k > n {
        return Ok(PbwPoly::zero(alphabet));
    }
    let coeffs = LsCoefficients::new();
    let e1 = LyndonWord::letter(1);
    let mut out = PbwPoly::zero(alphabet);
    let others = alphabet.size() as usize - 1;
    for split in crate::shuffle::compositions(k, others) {
        let mut counts = vec![n - k];
        counts.extend(split);
        for w in words_with_multidegree(&counts) {
            let m = PbwMonomial::from_word(&w);
            if m.last_factor() == Some(&e1) {
                continue;
            }
            let c = coeffs.monomial_coefficient(&m)?;
            out.add_term(m, Rational::from_integer(c));
        }
    }
    Ok(out)
}

/// `B̂_{n,k}(E₁, E₂ + ⋯ + E_m)` by the recursion in the word basis.
pub fn bell_partial_multi(alphabet: Alphabet, n: usize, k: usize) -> FreePoly<Rational> {
    let x = FreePoly::<Rational>::letter(alphabet, 1);
    let y = FreePoly::from_terms(
        alphabet,
        (2..=alphabet.size()).map(|l| (Word::letter(l), Rational::one())),
    );
    let mut memo: HashMap<(usize, usize), FreePoly<Rational>> = HashMap::new();
    fn rec(
        n: usize,
        k: usize,
        x: &FreePoly<Rational>,
        y: &FreePoly<Rational>,
        memo: &mut HashMap<(usize, usize), FreePoly<Rational>>,
    ) -> FreePoly<Rational> {
        let alphabet = x.alphabet();
        if n == 0 {
            return if k == 0 { FreePoly::one(alphabet) } else { FreePoly::zero(alphabet) };
        }
        if k == 0 || k > n {
            return FreePoly::zero(alphabet);
        }
        if let Some(p) = memo.get(&(n, k)) {
            return p.clone();
        }
        let lower = rec(n - 1, k - 1, x, y, memo);
        let same = rec(n - 1, k, x, y, memo);
        let value = &(y * &lower) + &x.commutator(&same).expect("same alphabet");
        memo.insert((n, k), value.clone());
        value
    }
    rec(n, k, &x, &y, &mut memo)
}

/// `B̂_n(E₁, E₂)` in PBW coordinates with every term containing some `E_α`,
/// `α(2) ≥ 2`, removed.
pub fn classical_bell_project(engine: &PbwEngine, n: usize) -> Result<PbwPoly<Rational>> {
    let total = BellTable::new(n, Roles::STANDARD).total(n);
    Ok(engine
        .rewrite(&total)?
        .filter(|m| m.factors().iter().all(|(a, _)| a.count(2) < 2)))
}

/// The classical Bell polynomial `Σ n!/∏ k_i!(i!)^{k_i} ∏ (y^{(i-1)})^{k_i}` with
/// `y^{(m)} = E_{1^m 2}`, products in decreasing order.
pub fn classical_bell_formula(n: usize) -> Result<PbwPoly<Rational>> {
    let alphabet = Alphabet::binary();
    let mut out = PbwPoly::zero(alphabet);
    for parts in partitions_by_multiplicity(n) {
        let mut denom = num_bigint::BigInt::one();
        let mut factors = Vec::new();
        for (size, &mult) in parts.iter().enumerate().skip(1) {
            if mult == 0 {
                continue;
            }
            denom *= factorial(mult as u64) * factorial(size as u64).pow(mult as u32);
            let mut w = vec![1u8; size - 1];
            w.push(2);
            factors.push((LyndonWord::new(Word::new(w))?, mult as u32));
        }
        // E_2 ≻ E_12 ≻ E_112 ≻ ... so increasing part size is decreasing order
        let m = PbwMonomial::new(factors)?;
        let c = Rational::new(factorial(n as u64), denom);
        out.add_term(m, c);
    }
    Ok(out)
}

/// Integer partitions of `n` as multiplicity vectors indexed by part size.
pub fn partitions_by_multiplicity(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current[part] += 1;
            rec(remaining - part, part, current, out);
            current[part] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut vec![0; n + 1], &mut out);
    out
}

/// Consistency checks up to `max_n`; returns the number of `(n,k)` pairs.
pub fn theorem_c_check(engine: &PbwEngine, max_n: usize) -> Result<usize> {
    let table = BellTable::new(max_n, Roles::STANDARD);
    let dual = BellTable::dual(max_n, Roles::SWAPPED);
    let mut checked = 0;
    for n in 0..=max_n {
        for k in 0..=n {
            let b = engine.rewrite(&table.partial(n, k))?;
            let filtered = sh_filter(engine, k, n - k, FilterSide::RightmostNotE1)?;
            if b != filtered {
                return Err(Error::TheoremViolation(format!(
                    "B_{{{n},{k}}} = {b} but filtered SH_{{{k},{}}} = {filtered}",
                    n - k
                )));
            }
            let bd = engine.rewrite(&dual.partial(n, k))?;
            let filtered = sh_filter(engine, n - k, k, FilterSide::LeftmostNotE2)?;
            if bd != filtered {
                return Err(Error::TheoremViolation(format!(
                    "B*_{{{n},{k}}} = {bd} but filtered SH_{{{},{k}}} = {filtered}",
                    n - k
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
