//! Quotient algebras: Lyndon-generator kill sets, the Weyl-type quotient, the
//! q-commutative `d`-alphabet and the Blumen relations.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::freepoly::FreePoly;
use crate::pbw::{PbwEngine, PbwMonomial, PbwPoly};
use crate::qsigma::{qbell_partial_alt_table, QFree};
use crate::rings::{
    factorial, q_binomial, q_factorial, q_factorial_base, q_integer, QPoly, Rational, Ring,
    UnitalRing,
};
use crate::words::{lyndon_enumerate, Alphabet, LyndonWord, Word};

/// Lyndon words whose basis elements are declared zero.
///
/// Projection removes every basis element lying in the Lie ideal the generators span.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KillSet {
    generators: BTreeSet<LyndonWord>,
}

impl KillSet {
    pub fn new(generators: impl IntoIterator<Item = LyndonWord>) -> Self {
        Self {
            generators: generators.into_iter().collect(),
        }
    }

    /// Parses a comma-separated list such as `112,122`.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let mut gens = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            gens.push(LyndonWord::parse(part, alphabet)?);
        }
        Ok(Self::new(gens))
    }

    pub fn generators(&self) -> &BTreeSet<LyndonWord> {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The generated ideal through length `max_len`.
    pub fn ideal(&self, alphabet: Alphabet, max_len: usize) -> KillIdeal {
        KillIdeal::build(self, alphabet, max_len)
    }

    /// Drops every term containing a factor from the generated ideal.
    pub fn project<R: Ring>(&self, p: &PbwPoly<R>) -> PbwPoly<R> {
        if self.is_empty() {
            return p.clone();
        }
        let max_len = p.terms().keys().map(PbwMonomial::degree).max().unwrap_or(0);
        let ideal = self.ideal(p.alphabet(), max_len);
        p.filter(|m| !m.factors().iter().any(|(a, _)| ideal.kills(a)))
    }
}

/// Row-echelon span keyed by least word, each row with leading coefficient 1.
#[derive(Debug, Clone, Default)]
struct Echelon {
    rows: BTreeMap<Word, FreePoly<Rational>>,
}

impl Echelon {
    fn reduce(&self, mut v: FreePoly<Rational>) -> FreePoly<Rational> {
        let mut cursor: Option<Word> = None;
        loop {
            let next = v
                .terms()
                .iter()
                .find(|(w, _)| {
                    cursor.as_ref().is_none_or(|c| *w > c) && self.rows.contains_key(*w)
                })
                .map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = next else { return v };
            v = v.try_sub(&self.rows[&w].scale(&c)).expect("same alphabet");
            cursor = Some(w);
        }
    }

    fn insert(&mut self, v: FreePoly<Rational>) {
        let r = self.reduce(v);
        let Some((w, c)) = r.min_term().map(|(w, c)| (w.clone(), c.clone())) else {
            return;
        };
        let inv = Rational::from_i64(1) / c;
        self.rows.insert(w, r.scale(&inv));
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// The Lie ideal generated by a kill set, graded by multidegree up to a length bound.
#[derive(Debug, Clone)]
pub struct KillIdeal {
    max_len: usize,
    killed: BTreeSet<LyndonWord>,
    dims: BTreeMap<Vec<usize>, (usize, usize)>,
}

impl KillIdeal {
    fn build(ks: &KillSet, alphabet: Alphabet, max_len: usize) -> Self {
        let engine = PbwEngine::new(alphabet);
        let size = alphabet.size() as usize;
        let mut by_md: BTreeMap<Vec<usize>, Vec<LyndonWord>> = BTreeMap::new();
        for g in lyndon_enumerate(alphabet, max_len) {
            by_md.entry(g.word().multidegree(alphabet)).or_default().push(g);
        }
        let mut components: BTreeMap<Vec<usize>, Echelon> = BTreeMap::new();
        let mut killed = BTreeSet::new();
        let mut dims = BTreeMap::new();
        for len in 1..=max_len {
            let mut layer: BTreeMap<Vec<usize>, Echelon> = BTreeMap::new();
            for g in ks.generators.iter().filter(|g| g.len() == len) {
                layer
                    .entry(g.word().multidegree(alphabet))
                    .or_default()
                    .insert((*engine.basis_element(g)).clone());
            }
            for (md, ech) in components.iter().filter(|(md, _)| md.iter().sum::<usize>() + 1 == len) {
                for i in 0..size {
                    let x = FreePoly::letter(alphabet, i as u8 + 1);
                    let mut target = md.clone();
                    target[i] += 1;
                    let entry = layer.entry(target).or_default();
                    for row in ech.rows.values() {
                        entry.insert(x.commutator(row).expect("same alphabet"));
                    }
                }
            }
            for (md, ech) in &layer {
                let mut count = 0;
                for g in by_md.get(md).into_iter().flatten() {
                    if ech.reduce((*engine.basis_element(g)).clone()).is_zero() {
                        killed.insert(g.clone());
                        count += 1;
                    }
                }
                dims.insert(md.clone(), (ech.dim(), count));
            }
            components.extend(layer);
        }
        Self { max_len, killed, dims }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Whether `E_γ` lies in the ideal; words beyond the length bound are reported alive.
    pub fn kills(&self, gamma: &LyndonWord) -> bool {
        self.killed.contains(gamma)
    }

    pub fn killed(&self) -> &BTreeSet<LyndonWord> {
        &self.killed
    }

    /// Whether every homogeneous piece of the ideal is spanned by the basis elements it
    /// contains, so that dropping killed factors computes the quotient exactly.
    pub fn spanned_by_basis(&self) -> bool {
        self.dims.values().all(|(dim, count)| dim == count)
    }

    /// Multidegrees where the ideal is not spanned by basis elements.
    pub fn defects(&self) -> Vec<Vec<usize>> {
        self.dims
            .iter()
            .filter(|(_, (d, c))| d != c)
            .map(|(md, _)| md.clone())
            .collect()
    }
}

/// `kill_project` as a free function.
pub fn kill_project<R: Ring>(p: &PbwPoly<R>, ks: &KillSet) -> PbwPoly<R> {
    ks.project(p)
}

/// Exponents `(t₂, t₁₂, t₁)` of `E₂^{t₂} E₁₂^{t₁₂} E₁^{t₁}`.
pub type WeylMonomial = (usize, usize, usize);

/// Reads a PBW polynomial over `{E₂, E₁₂, E₁}` as exponent triples.
pub fn weyl_coordinates(p: &PbwPoly<Rational>) -> Result<BTreeMap<WeylMonomial, Rational>> {
    let mut out = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut t = (0, 0, 0);
        for (a, e) in m.factors() {
            let e = *e as usize;
            match a.word().letters() {
                [2] => t.0 = e,
                [1, 2] => t.1 = e,
                [1] => t.2 = e,
                _ => {
                    return Err(Error::InvalidMonomial(format!(
                        "{} is outside the Weyl quotient",
                        m.render(p.alphabet())
                    )))
                }
            }
        }
        out.insert(t, c.clone());
    }
    Ok(out)
}

/// `(E₁ + E₂)^d = Σ d!/(t₂! 2^{t₁₂} t₁₂! t₁!) E₂^{t₂} E₁₂^{t₁₂} E₁^{t₁}`.
pub fn weyl_binomial(d: usize) -> BTreeMap<WeylMonomial, Rational> {
    let mut out = BTreeMap::new();
    for t12 in 0..=d / 2 {
        for t2 in 0..=d - 2 * t12 {
            let t1 = d - 2 * t12 - t2;
            let denom = factorial(t2 as u64)
                * BigInt::from(2).pow(t12 as u32)
                * factorial(t12 as u64)
                * factorial(t1 as u64);
            out.insert((t2, t12, t1), Rational::new(factorial(d as u64), denom));
        }
    }
    out
}

/// The Heisenberg-Weyl form `Σ n!/(j! i! (n-2j-i)!) (h/2)^j y^i x^{n-2j-i}` with the
/// power of one half folded into the coefficient, keyed as `(i, j, n-2j-i)`.
pub fn heisenberg_binomial(n: usize) -> BTreeMap<WeylMonomial, Rational> {
    let mut out = BTreeMap::new();
    for j in 0..=n / 2 {
        for i in 0..=n - 2 * j {
            let rest = n - 2 * j - i;
            let multinomial = Rational::new(
                factorial(n as u64),
                factorial(j as u64) * factorial(i as u64) * factorial(rest as u64),
            );
            let half = Rational::new(BigInt::one(), BigInt::from(2).pow(j as u32));
            out.insert((i, j, rest), multinomial * half);
        }
    }
    out
}

/// A monomial `d₁^{t₁} d₂^{t₂} ⋯` in normal order; trailing zero exponents are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QCommMonomial(Vec<usize>);

impl QCommMonomial {
    pub fn new(mut exponents: Vec<usize>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    /// Total weight `Σ i tᵢ`.
    pub fn weight(&self) -> usize {
        self.0.iter().enumerate().map(|(i, t)| (i + 1) * t).sum()
    }

    /// Number of factors `Σ tᵢ`.
    pub fn length(&self) -> usize {
        self.0.iter().sum()
    }

    /// The symbol word `d₁^{t₁} d₂^{t₂} ⋯` as indices.
    pub fn symbols(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &t)| std::iter::repeat_n(i + 1, t))
            .collect()
    }
}

impl fmt::Display for QCommMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0)
            .map(|(i, &t)| {
                if t == 1 {
                    format!("d{}", i + 1)
                } else {
                    format!("d{}^{t}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Sorts a word in the symbols `d_i` (given by index) into normal order using
/// `d_v d_u = q^v d_u d_v` for `v > u`, by adjacent swaps.
pub fn qcomm_normalize(word: &[usize]) -> (QPoly, QCommMonomial) {
    let mut w = word.to_vec();
    let mut power = 0;
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..w.len().saturating_sub(1) {
            if w[i] > w[i + 1] {
                power += w[i];
                w.swap(i, i + 1);
                swapped = true;
            }
        }
    }
    let max = w.iter().copied().max().unwrap_or(0);
    let mut exps = vec![0; max];
    for s in w {
        exps[s - 1] += 1;
    }
    (QPoly::q_pow(power), QCommMonomial::new(exps))
}

/// Normal-orders every word of a polynomial over the `d`-alphabet (letter `i` is `d_i`).
pub fn qcomm_project(f: &QFree) -> BTreeMap<QCommMonomial, QPoly> {
    let mut out: BTreeMap<QCommMonomial, QPoly> = BTreeMap::new();
    for (w, c) in f.terms() {
        let idx: Vec<usize> = w.letters().iter().map(|&l| l as usize).collect();
        let (qp, m) = qcomm_normalize(&idx);
        let entry = out.entry(m).or_insert_with(QPoly::zero);
        *entry = &*entry + &(&qp * c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Alphabet large enough for `d₁, …, d_n`.
pub fn d_alphabet(n: usize) -> Result<Alphabet> {
    Alphabet::new(n.max(1))
}

/// Partial q-Bell polynomials over the free `d`-alphabet by the alternative recursion
/// with `y^{(m)} = d_{m+1}`; row `n`, entry `k`.
pub fn qbell_d_alphabet_table(max_n: usize) -> Result<Vec<Vec<QFree>>> {
    let alphabet = d_alphabet(max_n)?;
    qbell_partial_alt_table(max_n, alphabet, |m| {
        Ok(FreePoly::word(alphabet, Word::letter(m as u8 + 1)))
    })
}

/// `ad_q x` on the free `d`-alphabet: `d_i ↦ d_{i+1}`, twisted by `q^{|w|}` with `|d_i| = i`.
pub fn d_alphabet_derivation(f: &QFree, alphabet: Alphabet) -> Result<QFree> {
    let mut out = FreePoly::zero(alphabet);
    for (w, c) in f.terms() {
        let letters = w.letters();
        let mut weight = 0;
        for (j, &l) in letters.iter().enumerate() {
            if l as usize >= alphabet.size() as usize {
                return Err(Error::LetterOutOfRange {
                    letter: l as u32 + 1,
                    size: alphabet.size(),
                });
            }
            let mut nw = letters.to_vec();
            nw[j] = l + 1;
            out.add_term(Word::new(nw), &QPoly::q_pow(weight) * c);
            weight += l as usize;
        }
    }
    Ok(out)
}

/// Partial q-Bell polynomials over the `d`-alphabet by `B̂_{n,k} = d₁ B̂_{n-1,k-1} + ad_q x(B̂_{n-1,k})`.
pub fn qbell_d_alphabet_by_derivation(max_n: usize) -> Result<Vec<Vec<QFree>>> {
    let alphabet = d_alphabet(max_n)?;
    let d1 = FreePoly::letter(alphabet, 1);
    let mut rows: Vec<Vec<QFree>> = vec![vec![FreePoly::one(alphabet)]];
    for n in 1..=max_n {
        let mut row = vec![FreePoly::zero(alphabet)];
        for k in 1..=n {
            let left = d1.try_mul(&rows[n - 1][k - 1])?;
            let right = match rows[n - 1].get(k) {
                Some(p) if k > 0 => d_alphabet_derivation(p, alphabet)?,
                _ => FreePoly::zero(alphabet),
            };
            row.push(left.try_add(&right)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Sorts every word with all symbols commuting.
pub fn commutative_project(f: &QFree) -> BTreeMap<QCommMonomial, QPoly> {
    let mut out: BTreeMap<QCommMonomial, QPoly> = BTreeMap::new();
    for (w, c) in f.terms() {
        let idx: Vec<usize> = w.letters().iter().map(|&l| l as usize).collect();
        let (_, m) = qcomm_normalize(&idx);
        let entry = out.entry(m).or_insert_with(QPoly::zero);
        *entry = &*entry + c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Commutative partial q-Bell polynomial: the alternative recursion with all `d_i` commuting.
pub fn qbell_commutative(n: usize, k: usize) -> Result<BTreeMap<QCommMonomial, QPoly>> {
    let table = qbell_d_alphabet_table(n)?;
    Ok(table[n].get(k).map(commutative_project).unwrap_or_default())
}

/// Route A: the alternative recursion over the `d`-alphabet, then normal ordering.
pub fn qcomm_bell_by_recursion(n: usize, k: usize) -> Result<BTreeMap<QCommMonomial, QPoly>> {
    let table = qbell_d_alphabet_table(n)?;
    let f = table[n]
        .get(k)
        .cloned()
        .unwrap_or_else(|| FreePoly::zero(d_alphabet(n).expect("valid size")));
    Ok(qcomm_project(&f))
}

/// Exponent vectors `(t₁, …, t_m)` with `Σ tᵢ = k` and `Σ i tᵢ = n`.
pub fn weighted_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, k: usize, max_i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i > max_i {
            if n == 0 && k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut t = 0;
        while t <= k && t * i <= n {
            cur.push(t);
            rec(i + 1, n - t * i, k - t, max_i, cur, out);
            cur.pop();
            t += 1;
        }
    }
    let max_i = if k == 0 { n.max(1) } else { n + 1 - k };
    let mut out = Vec::new();
    rec(1, n, k, max_i, &mut Vec::new(), &mut out);
    out
}

/// `∏ ((i)_q!)^{tᵢ} (tᵢ)_{q^i}!`.
fn qcomm_denominator(exps: &[usize]) -> QPoly {
    let mut denom = QPoly::one();
    for (idx, &t) in exps.iter().enumerate() {
        let i = idx + 1;
        denom = &denom * &q_factorial(i).pow(t as u32);
        denom = &denom * &q_factorial_base(t, i);
    }
    denom
}

/// Route B: `(n)_q! / ∏ ((i)_q!)^{tᵢ} (tᵢ)_{q^i}!` by exact division.
pub fn qcomm_bell_closed_form(n: usize, k: usize) -> Result<BTreeMap<QCommMonomial, QPoly>> {
    let mut out = BTreeMap::new();
    if k > n || (k == 0 && n > 0) {
        return Ok(out);
    }
    let nf = q_factorial(n);
    for exps in weighted_compositions(n, k) {
        let c = nf.exact_div(&qcomm_denominator(&exps))?;
        out.insert(QCommMonomial::new(exps), c);
    }
    Ok(out)
}

/// Checks Route A against Route B; a failed division surfaces as an error.
pub fn qcomm_bell(n: usize, k: usize) -> Result<BTreeMap<QCommMonomial, QPoly>> {
    let a = qcomm_bell_by_recursion(n, k)?;
    let b = qcomm_bell_closed_form(n, k)?;
    if a != b {
        return Err(Error::TheoremViolation(format!(
            "q-commutative Bell ({n},{k}): recursion and closed form differ"
        )));
    }
    Ok(b)
}

/// `(x+y)^n = Σ (n)_q!/(∏((i)_q!)^{tᵢ}(tᵢ)_{q^i}! (t)_q!) y^{t₁}(y^{(1)})^{t₂}⋯ x^t`, keyed by
/// the `d`-monomial and the power `t` of `x`.
pub fn qcomm_binomial(n: usize) -> Result<BTreeMap<(QCommMonomial, usize), QPoly>> {
    let nf = q_factorial(n);
    let mut out = BTreeMap::new();
    for t in 0..=n {
        let rest = n - t;
        for k in 0..=rest {
            if k == 0 && rest > 0 {
                continue;
            }
            for exps in weighted_compositions(rest, k) {
                let denom = &qcomm_denominator(&exps) * &q_factorial(t);
                out.insert((QCommMonomial::new(exps), t), nf.exact_div(&denom)?);
            }
        }
    }
    Ok(out)
}

/// The same expansion assembled as `Σ_k binom(n,k)_q · (B̂_{k,q} normal-ordered) · x^{n-k}`.
pub fn qcomm_binomial_via_bell(n: usize) -> Result<BTreeMap<(QCommMonomial, usize), QPoly>> {
    let table = qbell_d_alphabet_table(n)?;
    let alphabet = d_alphabet(n)?;
    let mut out = BTreeMap::new();
    for k in 0..=n {
        let mut total = FreePoly::zero(alphabet);
        for p in &table[k] {
            total = total.try_add(p)?;
        }
        let binom = q_binomial(n, k);
        for (m, c) in qcomm_project(&total) {
            out.insert((m, n - k), &binom * &c);
        }
    }
    Ok(out)
}

/// The `q = 1` value of the expansion: `binom(n,k) · k!/∏ rᵢ!(i!)^{rᵢ}`.
pub fn classical_ore_coefficients(n: usize) -> BTreeMap<(QCommMonomial, usize), Rational> {
    let mut out = BTreeMap::new();
    for k in 0..=n {
        let lower = if k == 0 { 0 } else { 1 };
        for kk in lower..=k {
            for exps in weighted_compositions(k, kk) {
                let mut denom = BigInt::one();
                for (idx, &r) in exps.iter().enumerate() {
                    denom *= factorial(r as u64) * factorial(idx as u64 + 1).pow(r as u32);
                }
                let c = Rational::new(
                    crate::rings::binomial(n as u64, k as u64) * factorial(k as u64),
                    denom,
                );
                out.insert((QCommMonomial::new(exps), n - k), c);
            }
        }
    }
    out
}

/// `y^r h^s x^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlumenMonomial {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl fmt::Display for BlumenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("y", self.r), ("h", self.s), ("x", self.t)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Letters of the Blumen algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlumenLetter {
    Y,
    H,
    X,
}

pub type BlumenPoly = BTreeMap<BlumenMonomial, QPoly>;

fn add_into(out: &mut BlumenPoly, m: BlumenMonomial, c: QPoly) {
    if c.is_zero() {
        return;
    }
    let entry = out.entry(m).or_insert_with(QPoly::zero);
    *entry = &*entry + &c;
    if entry.is_zero() {
        out.remove(&m);
    }
}

/// Normal-ordering engine for `xy → q yx + h`, `xh → q² hx`, `hy → q² yh`.
#[derive(Debug, Default)]
pub struct Blumen {
    memo: HashMap<BlumenMonomial, BlumenPoly>,
}

impl Blumen {
    pub fn new() -> Self {
        Self::default()
    }

    /// `letter · y^r h^s x^t` in normal order.
    pub fn left_mul(&mut self, letter: BlumenLetter, m: BlumenMonomial) -> BlumenPoly {
        let mut out = BlumenPoly::new();
        match letter {
            BlumenLetter::Y => {
                out.insert(BlumenMonomial { r: m.r + 1, ..m }, QPoly::one());
            }
            BlumenLetter::H => {
                // h y^r = q^{2r} y^r h
                out.insert(BlumenMonomial { s: m.s + 1, ..m }, QPoly::q_pow(2 * m.r));
            }
            BlumenLetter::X => return self.left_mul_x(m),
        }
        out
    }

    fn left_mul_x(&mut self, m: BlumenMonomial) -> BlumenPoly {
        if let Some(p) = self.memo.get(&m) {
            return p.clone();
        }
        let mut out = BlumenPoly::new();
        if m.r == 0 {
            // x h^s = q^{2s} h^s x
            out.insert(BlumenMonomial { t: m.t + 1, ..m }, QPoly::q_pow(2 * m.s));
        } else {
            // x y M = q y (x M) + h M
            let inner = BlumenMonomial { r: m.r - 1, ..m };
            let q = QPoly::q_pow(1);
            for (mm, c) in self.left_mul_x(inner) {
                for (m2, c2) in self.left_mul(BlumenLetter::Y, mm) {
                    add_into(&mut out, m2, &(&c * &c2) * &q);
                }
            }
            for (m2, c2) in self.left_mul(BlumenLetter::H, inner) {
                add_into(&mut out, m2, c2);
            }
        }
        self.memo.insert(m, out.clone());
        out
    }

    pub fn left_mul_poly(&mut self, letter: BlumenLetter, p: &BlumenPoly) -> BlumenPoly {
        let mut out = BlumenPoly::new();
        for (m, c) in p {
            for (m2, c2) in self.left_mul(letter, *m) {
                add_into(&mut out, m2, c * &c2);
            }
        }
        out
    }

    /// Normal form of a word.
    pub fn normalize(&mut self, word: &[BlumenLetter]) -> BlumenPoly {
        let mut acc = BlumenPoly::new();
        acc.insert(BlumenMonomial { r: 0, s: 0, t: 0 }, QPoly::one());
        for &l in word.iter().rev() {
            acc = self.left_mul_poly(l, &acc);
        }
        acc
    }

    /// Product of two normal-form polynomials.
    pub fn mul(&mut self, a: &BlumenPoly, b: &BlumenPoly) -> BlumenPoly {
        let mut out = BlumenPoly::new();
        for (m, c) in a {
            let mut word = Vec::new();
            word.extend(std::iter::repeat_n(BlumenLetter::Y, m.r));
            word.extend(std::iter::repeat_n(BlumenLetter::H, m.s));
            word.extend(std::iter::repeat_n(BlumenLetter::X, m.t));
            let mut acc = b.clone();
            for &l in word.iter().rev() {
                acc = self.left_mul_poly(l, &acc);
            }
            for (m2, c2) in acc {
                add_into(&mut out, m2, c * &c2);
            }
        }
        out
    }

    /// `(x + y)^n` by repeated left multiplication.
    pub fn binomial(&mut self, n: usize) -> BlumenPoly {
        let mut acc = BlumenPoly::new();
        acc.insert(BlumenMonomial { r: 0, s: 0, t: 0 }, QPoly::one());
        for _ in 0..n {
            let a = self.left_mul_poly(BlumenLetter::X, &acc);
            let b = self.left_mul_poly(BlumenLetter::Y, &acc);
            acc = a;
            for (m, c) in b {
                add_into(&mut acc, m, c);
            }
        }
        acc
    }

    /// `y^{(m)}`: `y^{(0)} = y`, `y^{(m)} = x y^{(m-1)} - q^m y^{(m-1)} x`.
    pub fn y_derivative(&mut self, m: usize) -> BlumenPoly {
        let mut cur = BlumenPoly::new();
        cur.insert(BlumenMonomial { r: 1, s: 0, t: 0 }, QPoly::one());
        let mut x = BlumenPoly::new();
        x.insert(BlumenMonomial { r: 0, s: 0, t: 1 }, QPoly::one());
        for i in 1..=m {
            let left = self.mul(&x, &cur);
            let right = self.mul(&cur, &x);
            let mut next = left;
            let qi = QPoly::q_pow(i);
            for (mm, c) in right {
                add_into(&mut next, mm, (&c * &qi).negated());
            }
            cur = next;
        }
        cur
    }
}

/// `(n)_q! / ((r)_q! (2)_q^s (s)_{q²}! (t)_q!)` for all `r + 2s + t = n`.
pub fn blumen_closed_form(n: usize) -> Result<BlumenPoly> {
    let nf = q_factorial(n);
    let mut out = BlumenPoly::new();
    for s in 0..=n / 2 {
        for r in 0..=n - 2 * s {
            let t = n - 2 * s - r;
            let denom = &(&(&q_factorial(r) * &q_integer(2).pow(s as u32)) * &q_factorial_base(s, 2))
                * &q_factorial(t);
            out.insert(BlumenMonomial { r, s, t }, nf.exact_div(&denom)?);
        }
    }
    Ok(out)
}

/// `(x + y)^n` in normal order via the rewriting system.
pub fn blumen_binomial(n: usize) -> BlumenPoly {
    Blumen::new().binomial(n)
}

/// Evaluates a Blumen polynomial at `q = 1`, keyed as Weyl triples `(r, s, t)`.
pub fn blumen_at_q_one(p: &BlumenPoly) -> BTreeMap<WeylMonomial, Rational> {
    let one = Rational::from_i64(1);
    p.iter()
        .map(|(m, c)| ((m.r, m.s, m.t), c.eval(&one)))
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .collect()
}

/// Projects a PBW polynomial to Weyl coordinates after killing `E₁₁₂` and `E₁₂₂`.
pub fn weyl_from_pbw(p: &PbwPoly<Rational>) -> Result<BTreeMap<WeylMonomial, Rational>> {
    let b = Alphabet::binary();
    let ks = KillSet::new([LyndonWord::parse("112", b)?, LyndonWord::parse("122", b)?]);
    weyl_coordinates(&ks.project(p))
}

/// Coefficient predicted for a monomial whose factors are all killed-set survivors of
/// a quotient where every surviving `C_{E_α}` is 1: `d!/∏ (|α|!)^{t} t!`.
pub fn unit_c_multinomial(m: &PbwMonomial) -> Rational {
    let mut denom = BigInt::one();
    for (a, t) in m.factors() {
        denom *= factorial(a.len() as u64).pow(*t) * factorial(*t as u64);
    }
    Rational::new(factorial(m.degree() as u64), denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;
    use crate::shuffle::{binary_degree, sh_pbw};

    #[test]
    fn kill_examples() {
        let b = Alphabet::binary();
        let e = PbwEngine::new(b);
        let sh = sh_pbw(&e, &binary_degree(1, 2)).unwrap();
        let ks = KillSet::parse("112", b).unwrap();
        assert_eq!(ks.project(&sh).latex(), "3E_{2}E_{1}^{2} + 3E_{12}E_{1}");
        assert_eq!(KillSet::default().project(&sh), sh);
    }

    #[test]
    fn closure_kills_brackets() {
        let b = Alphabet::binary();
        let ideal = KillSet::parse("112", b).unwrap().ideal(b, 5);
        for w in ["112", "1112", "1122", "11212", "11112"] {
            assert!(ideal.kills(&LyndonWord::parse(w, b).unwrap()), "{w}");
        }
        assert!(!ideal.kills(&LyndonWord::parse("122", b).unwrap()));
        assert!(!ideal.kills(&LyndonWord::parse("1222", b).unwrap()));
        let three = Alphabet::new(3).unwrap();
        let ks = KillSet::parse("112,113,122,123,132,133,223,233", three).unwrap();
        let ideal = ks.ideal(three, 5);
        assert!(ideal.kills(&LyndonWord::parse("1213", three).unwrap()));
        assert!(ideal.spanned_by_basis());
    }

    #[test]
    fn weyl_examples() {
        let w2 = weyl_binomial(2);
        assert_eq!(w2.len(), 4);
        assert!(w2.values().all(|c| *c == rat(1) || *c == rat(2)));
        assert_eq!(weyl_binomial(3)[&(0, 1, 1)], rat(3));
        assert_eq!(weyl_binomial(4)[&(0, 2, 0)], rat(3));
        for d in 0..=8 {
            assert_eq!(weyl_binomial(d), heisenberg_binomial(d));
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(qcomm_normalize(&[2, 1]), (QPoly::q_pow(2), QCommMonomial::new(vec![1, 1])));
        assert_eq!(
            qcomm_normalize(&[3, 1, 2]),
            (QPoly::q_pow(6), QCommMonomial::new(vec![1, 1, 1]))
        );
        assert_eq!(
            qcomm_normalize(&[1, 1, 2]),
            (QPoly::one(), QCommMonomial::new(vec![2, 1]))
        );
    }

    #[test]
    fn qcomm_examples() {
        let b32 = qcomm_bell(3, 2).unwrap();
        assert_eq!(b32[&QCommMonomial::new(vec![1, 1])], q_integer(3));
        let b42 = qcomm_bell(4, 2).unwrap();
        assert_eq!(b42[&QCommMonomial::new(vec![1, 0, 1])], q_integer(4));
        let b43 = qcomm_bell(4, 3).unwrap();
        assert_eq!(b43[&QCommMonomial::new(vec![2, 1])], q_binomial(4, 2));
    }

    #[test]
    fn blumen_examples() {
        let p = blumen_binomial(2);
        let expected = blumen_closed_form(2).unwrap();
        assert_eq!(p, expected);
        assert_eq!(p[&BlumenMonomial { r: 1, s: 0, t: 1 }], q_integer(2));
        assert_eq!(blumen_binomial(0).len(), 1);
        let mut bl = Blumen::new();
        assert_eq!(bl.y_derivative(1).len(), 1);
        assert!(bl.y_derivative(2).is_empty());
        assert!(bl.y_derivative(3).is_empty());
    }
}
