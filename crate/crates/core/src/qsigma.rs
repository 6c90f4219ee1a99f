//! Operators on the free algebra over `ℚ[q]`: endomorphisms, σ-derivations and the
//! operator-valued shuffle polynomials built from them, including the q-Bell
//! differential polynomials.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freepoly::FreePoly;
use crate::rings::{binomial, q_binomial, QPoly, Rational, UnitalRing};
use crate::words::{Alphabet, Word};

pub type QFree = FreePoly<QPoly>;

/// A linear map on `ℚ[q]⟨X⟩`, kept as an expression tree and evaluated on demand.
#[derive(Debug, Clone, PartialEq)]
pub enum Operator {
    Identity,
    /// Multiplicative extension of the images of the letters; an explicit unit image,
    /// when given, must be `1`.
    Endomorphism {
        images: Vec<QFree>,
        unit_image: Option<QFree>,
    },
    /// `σ(w) = q^{|w|} w`.
    Grading,
    /// `w ↦ x w - σ(w) x`.
    AdSigma { element: QFree, sigma: Box<Operator> },
    /// The σ-derivation with the given letter images, extended by
    /// `δ(uv) = δ(u) v + σ(u) δ(v)`.
    Derivation { images: Vec<QFree>, sigma: Box<Operator> },
    LeftMul(QFree),
    Sum(Vec<Operator>),
    /// `Compose([A, B])` is `A ∘ B`.
    Compose(Vec<Operator>),
    Power(Box<Operator>, u32),
}

impl Operator {
    pub fn endomorphism(images: Vec<QFree>) -> Self {
        Operator::Endomorphism {
            images,
            unit_image: None,
        }
    }

    pub fn ad_sigma(element: QFree, sigma: Operator) -> Self {
        Operator::AdSigma {
            element,
            sigma: Box::new(sigma),
        }
    }

    pub fn derivation(images: Vec<QFree>, sigma: Operator) -> Self {
        Operator::Derivation {
            images,
            sigma: Box::new(sigma),
        }
    }

    /// `ad_σ x + y`.
    pub fn ad_plus(x: QFree, y: QFree, sigma: Operator) -> Self {
        Operator::Sum(vec![Operator::ad_sigma(x, sigma), Operator::LeftMul(y)])
    }

    pub fn compose(ops: Vec<Operator>) -> Self {
        Operator::Compose(ops)
    }

    pub fn power(op: Operator, e: u32) -> Self {
        Operator::Power(Box::new(op), e)
    }

    pub fn apply(&self, f: &QFree) -> Result<QFree> {
        let alphabet = f.alphabet();
        match self {
            Operator::Identity => Ok(f.clone()),
            Operator::Grading => Ok(FreePoly::from_terms(
                alphabet,
                f.terms()
                    .iter()
                    .map(|(w, c)| (w.clone(), c * &QPoly::q_pow(w.len()))),
            )),
            Operator::Endomorphism { images, unit_image } => {
                if let Some(u) = unit_image {
                    if *u != FreePoly::one(u.alphabet()) {
                        return Err(Error::NotUnital);
                    }
                }
                f.substitute(images, alphabet)
            }
            Operator::AdSigma { element, sigma } => {
                let left = element.try_mul(f)?;
                let right = sigma.apply(f)?.try_mul(element)?;
                left.try_sub(&right)
            }
            Operator::Derivation { images, sigma } => {
                let mut out = FreePoly::zero(alphabet);
                let mut cache: HashMap<Word, QFree> = HashMap::new();
                for (w, c) in f.terms() {
                    let dw = match cache.get(w) {
                        Some(p) => p.clone(),
                        None => {
                            let p = derive_word(w, images, sigma, alphabet)?;
                            cache.insert(w.clone(), p.clone());
                            p
                        }
                    };
                    out = out.try_add(&dw.scale(c))?;
                }
                Ok(out)
            }
            Operator::LeftMul(g) => g.try_mul(f),
            Operator::Sum(ops) => {
                let mut out = FreePoly::zero(alphabet);
                for op in ops {
                    out = out.try_add(&op.apply(f)?)?;
                }
                Ok(out)
            }
            Operator::Compose(ops) => {
                let mut acc = f.clone();
                for op in ops.iter().rev() {
                    acc = op.apply(&acc)?;
                }
                Ok(acc)
            }
            Operator::Power(op, e) => {
                let mut acc = f.clone();
                for _ in 0..*e {
                    acc = op.apply(&acc)?;
                }
                Ok(acc)
            }
        }
    }
}

fn derive_word(w: &Word, images: &[QFree], sigma: &Operator, alphabet: Alphabet) -> Result<QFree> {
    let mut out = FreePoly::zero(alphabet);
    let letters = w.letters();
    for i in 0..letters.len() {
        let l = letters[i];
        let image = images.get(l as usize - 1).ok_or(Error::LetterOutOfRange {
            letter: l as u32,
            size: images.len() as u8,
        })?;
        let prefix = sigma.apply(&FreePoly::word(alphabet, Word::new(letters[..i].to_vec())))?;
        let suffix = Word::new(letters[i + 1..].to_vec());
        out = out.try_add(&prefix.try_mul(image)?.right_mul_word(&suffix))?;
    }
    Ok(out)
}

/// Checks `σ(1) = 1` and `σ(uv) = σ(u)σ(v)` on all pairs from `basket`.
pub fn check_endomorphism(sigma: &Operator, basket: &[QFree]) -> Result<()> {
    let Some(first) = basket.first() else {
        return Ok(());
    };
    let one = FreePoly::one(first.alphabet());
    if sigma.apply(&one)? != one {
        return Err(Error::NotUnital);
    }
    for u in basket {
        for v in basket {
            let lhs = sigma.apply(&u.try_mul(v)?)?;
            let rhs = sigma.apply(u)?.try_mul(&sigma.apply(v)?)?;
            if lhs != rhs {
                return Err(Error::TheoremViolation(format!(
                    "endomorphism fails on ({u}) * ({v})"
                )));
            }
        }
    }
    Ok(())
}

/// Checks `δ(uv) = δ(u) v + σ(u) δ(v)` on all pairs from `basket`.
pub fn check_sigma_derivation(delta: &Operator, sigma: &Operator, basket: &[QFree]) -> Result<()> {
    for u in basket {
        for v in basket {
            let lhs = delta.apply(&u.try_mul(v)?)?;
            let rhs = delta
                .apply(u)?
                .try_mul(v)?
                .try_add(&sigma.apply(u)?.try_mul(&delta.apply(v)?)?)?;
            if lhs != rhs {
                return Err(Error::NotASigmaDerivation(format!(
                    "Leibniz law fails on ({u}) * ({v})"
                )));
            }
        }
    }
    Ok(())
}

/// All words of length at most `max_len` as polynomials, plus a few mixed sums.
pub fn word_basket(alphabet: Alphabet, max_len: usize) -> Vec<QFree> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for w in crate::words::all_words(alphabet, len) {
            out.push(FreePoly::word(alphabet, w));
        }
    }
    let q = QPoly::q_pow(1);
    let mixed: Vec<QFree> = out
        .windows(2)
        .take(4)
        .map(|p| p[0].try_add(&p[1].scale(&q)).expect("same alphabet"))
        .collect();
    out.extend(mixed);
    out
}

/// `ŜH_{k,j}(f)` for all `k + j = n`, by
/// `ŜH_{i,j} = σ ∘ ŜH_{i,j-1} + (ad_σ x + y) ∘ ŜH_{i-1,j}`; entry `k` of the result is
/// `ŜH_{k,n-k}(f)`.
pub fn sh_hat_row(n: usize, x: &QFree, y: &QFree, sigma: &Operator, f: &QFree) -> Result<Vec<QFree>> {
    let d0 = Operator::ad_plus(x.clone(), y.clone(), sigma.clone());
    // row[i] holds ŜH_{i, m-i}(f) at total degree m
    let mut row = vec![f.clone()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let mut v = FreePoly::zero(f.alphabet());
            if i < m {
                v = v.try_add(&sigma.apply(&row[i])?)?;
            }
            if i > 0 {
                v = v.try_add(&d0.apply(&row[i - 1])?)?;
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row)
}

/// `ŜH_{k,j}(1)`.
pub fn sh_hat_apply(k: usize, j: usize, x: &QFree, y: &QFree, sigma: &Operator) -> Result<QFree> {
    let one = FreePoly::one(x.alphabet());
    Ok(sh_hat_row(k + j, x, y, sigma, &one)?.swap_remove(k))
}

/// The letters `x = 1`, `y = 2` of `ℚ[q]⟨x, y⟩`.
pub fn xy() -> (QFree, QFree) {
    let b = Alphabet::binary();
    (FreePoly::letter(b, 1), FreePoly::letter(b, 2))
}

/// `(x + y)^n = Σ_k ŜH_{k,n-k}(1) x^{n-k}` with `x = 1`, `y = 2`.
pub fn theorem_b_verify(n: usize, sigma: &Operator) -> Result<bool> {
    let (x, y) = xy();
    let lhs = x.try_add(&y)?.pow(n as u32);
    let row = sh_hat_row(n, &x, &y, sigma, &FreePoly::one(x.alphabet()))?;
    let mut rhs = FreePoly::zero(x.alphabet());
    for (k, v) in row.iter().enumerate() {
        rhs = rhs.try_add(&v.right_mul_word(&Word::letter(1).repeat(n - k)))?;
    }
    Ok(lhs == rhs)
}

/// Nondecreasing tuples `0 ≤ m₁ ≤ ⋯ ≤ m_k ≤ max`.
pub fn nondecreasing_tuples(k: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, lo: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for m in lo..=max {
            cur.push(m);
            rec(k, m, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 0, max, &mut Vec::new(), &mut out);
    out
}

/// `D_m = ad_σ(σ^m x) + σ^m y`.
pub fn d_operator(m: usize, x: &QFree, y: &QFree, sigma: &Operator) -> Result<Operator> {
    let sm = Operator::power(sigma.clone(), m as u32);
    Ok(Operator::ad_plus(sm.apply(x)?, sm.apply(y)?, sigma.clone()))
}

/// Checks `ŜH_{k,n-k} = Σ D_{m₁}⋯D_{m_k} σ^{n-k}` on every basket element, and, applied
/// to 1, the form `Σ σ^{m₁} D₀ σ^{m₂-m₁} D₀ ⋯ σ^{m_k-m_{k-1}} D₀ (1)`.
pub fn d_m_factorization_check(
    n: usize,
    k: usize,
    sigma: &Operator,
    basket: &[QFree],
) -> Result<bool> {
    let (x, y) = xy();
    let tuples = nondecreasing_tuples(k, n - k);
    let ds: Vec<Operator> = (0..=n - k)
        .map(|m| d_operator(m, &x, &y, sigma))
        .collect::<Result<_>>()?;
    let tail = Operator::power(sigma.clone(), (n - k) as u32);
    for f in basket {
        let lhs = sh_hat_row(n, &x, &y, sigma, f)?.swap_remove(k);
        let mut rhs = FreePoly::zero(f.alphabet());
        for t in &tuples {
            let mut ops: Vec<Operator> = t.iter().map(|&m| ds[m].clone()).collect();
            ops.push(tail.clone());
            rhs = rhs.try_add(&Operator::compose(ops).apply(f)?)?;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    let one = FreePoly::one(x.alphabet());
    let lhs = sh_hat_apply(k, n - k, &x, &y, sigma)?;
    let d0 = ds[0].clone();
    let mut rhs = FreePoly::zero(x.alphabet());
    for t in &tuples {
        let mut ops = Vec::new();
        let mut prev = 0;
        for &m in t {
            ops.push(Operator::power(sigma.clone(), (m - prev) as u32));
            ops.push(d0.clone());
            prev = m;
        }
        rhs = rhs.try_add(&Operator::compose(ops).apply(&one)?)?;
    }
    Ok(lhs == rhs)
}

/// Checks `σ^m ∘ (ad_σ x + y) = D_m ∘ σ^m` on every basket element.
pub fn sigma_adjoint_check(m: usize, sigma: &Operator, basket: &[QFree]) -> Result<bool> {
    let (x, y) = xy();
    let sm = Operator::power(sigma.clone(), m as u32);
    let lhs_op = Operator::compose(vec![sm.clone(), Operator::ad_plus(x.clone(), y.clone(), sigma.clone())]);
    let rhs_op = Operator::compose(vec![d_operator(m, &x, &y, sigma)?, sm]);
    for f in basket {
        if lhs_op.apply(f)? != rhs_op.apply(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ad_q x + y` on `ℚ[q]⟨x, y⟩`.
pub fn d0_grading() -> Operator {
    let (x, y) = xy();
    Operator::ad_plus(x, y, Operator::Grading)
}

/// `B̂_{n,q} = (ad_q x + y)^n (1)`.
pub fn qbell(n: usize) -> Result<QFree> {
    let one = FreePoly::one(Alphabet::binary());
    Operator::power(d0_grading(), n as u32).apply(&one)
}

/// `y^{(m)}`: `y^{(0)} = y`, `y^{(m)} = x y^{(m-1)} - q^m y^{(m-1)} x`.
pub fn y_derivative(m: usize) -> Result<QFree> {
    let (x, y) = xy();
    Operator::power(Operator::ad_sigma(x, Operator::Grading), m as u32).apply(&y)
}

/// Partial q-Bell differential polynomials by
/// `B̂_{n,k,q} = y B̂_{n-1,k-1,q} + ad_q x (B̂_{n-1,k,q})`; row `n`, entry `k`.
pub fn qbell_partial_table(max_n: usize) -> Result<Vec<Vec<QFree>>> {
    let (x, y) = xy();
    let b = x.alphabet();
    let ad = Operator::ad_sigma(x, Operator::Grading);
    let mut rows: Vec<Vec<QFree>> = vec![vec![FreePoly::one(b)]];
    for n in 1..=max_n {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let prev = &rows[n - 1];
            let mut v = FreePoly::zero(b);
            if k >= 1 && k - 1 < prev.len() {
                v = v.try_add(&y.try_mul(&prev[k - 1])?)?;
            }
            if k < prev.len() {
                v = v.try_add(&ad.apply(&prev[k])?)?;
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn qbell_partial(n: usize, k: usize) -> Result<QFree> {
    if k > n {
        return Ok(FreePoly::zero(Alphabet::binary()));
    }
    Ok(qbell_partial_table(n)?.swap_remove(n).swap_remove(k))
}

/// Partial q-Bell polynomials by the alternative recursion
/// `B̂_{n,k,q} = Σ_{ℓ=k-1}^{n-1} binom(n-1,ℓ)_q B̂_{ℓ,k-1,q} y^{(n-ℓ-1)}`, with derivative
/// orders supplied by `derivative`.
pub fn qbell_partial_alt_table<F>(max_n: usize, alphabet: Alphabet, derivative: F) -> Result<Vec<Vec<QFree>>>
where
    F: Fn(usize) -> Result<QFree>,
{
    let derivs: Vec<QFree> = (0..max_n.max(1)).map(&derivative).collect::<Result<_>>()?;
    let mut rows: Vec<Vec<QFree>> = vec![vec![FreePoly::one(alphabet)]];
    for n in 1..=max_n {
        let mut row = vec![FreePoly::zero(alphabet)];
        for k in 1..=n {
            let mut v = FreePoly::zero(alphabet);
            for l in (k - 1)..=(n - 1) {
                let prev = rows[l].get(k - 1).cloned().unwrap_or_else(|| FreePoly::zero(alphabet));
                if prev.is_zero() {
                    continue;
                }
                let term = prev.try_mul(&derivs[n - l - 1])?.scale(&q_binomial(n - 1, l));
                v = v.try_add(&term)?;
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `(x+y)^n = Σ_k binom(n,k)_q B̂_{k,q} x^{n-k}`.
pub fn binomial_q_verify(n: usize) -> Result<bool> {
    let (x, y) = xy();
    let lhs = x.try_add(&y)?.pow(n as u32);
    let mut rhs = FreePoly::zero(x.alphabet());
    for k in 0..=n {
        let term = qbell(k)?
            .right_mul_word(&Word::letter(1).repeat(n - k))
            .scale(&q_binomial(n, k));
        rhs = rhs.try_add(&term)?;
    }
    Ok(lhs == rhs)
}

/// Evaluates every coefficient at `q = 1`.
pub fn at_q_one(f: &QFree) -> FreePoly<Rational> {
    f.map_coeffs(|c| c.eval(&Rational::from_i64(1)))
}

/// Embeds a rational polynomial as a constant-coefficient one.
pub fn constant_coeffs(f: &FreePoly<Rational>) -> QFree {
    f.map_coeffs(|c| QPoly::constant(c.clone()))
}

/// Coefficients `c_j` with `(x+y)^n = Σ_j c_j x^j` whenever `x y = σ(y) x + δ(y)`:
/// `c_j = SH_{n-j,j}(δ + y, σ)(1)`, indexed by the power `j` of `x`. The σ-Leibniz law
/// of `δ` is checked on `basket` first.
pub fn ore_binomial(
    n: usize,
    sigma: &Operator,
    delta: &Operator,
    y: &QFree,
    basket: &[QFree],
) -> Result<Vec<QFree>> {
    check_endomorphism(sigma, basket)?;
    check_sigma_derivation(delta, sigma, basket)?;
    let alphabet = y.alphabet();
    let step = Operator::Sum(vec![delta.clone(), Operator::LeftMul(y.clone())]);
    let mut row = vec![FreePoly::one(alphabet)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let mut v = FreePoly::zero(alphabet);
            if i < m {
                v = v.try_add(&sigma.apply(&row[i])?)?;
            }
            if i > 0 {
                v = v.try_add(&step.apply(&row[i - 1])?)?;
            }
            next.push(v);
        }
        row = next;
    }
    row.reverse();
    Ok(row)
}

/// `binom(n,k)` lifted to `ℚ[q]`.
pub fn binom_q1(n: usize, k: usize) -> QPoly {
    QPoly::constant(Rational::from_integer(binomial(n as u64, k as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QPoly {
        QPoly::q_pow(1)
    }

    #[test]
    fn operator_examples() {
        let (x, y) = xy();
        let ad = Operator::ad_sigma(x.clone(), Operator::Identity);
        assert_eq!(
            ad.apply(&y).unwrap(),
            x.try_mul(&y).unwrap().try_sub(&y.try_mul(&x).unwrap()).unwrap()
        );
        let w = FreePoly::word(Alphabet::binary(), Word::parse("121", Alphabet::binary()).unwrap());
        assert_eq!(Operator::Grading.apply(&w).unwrap(), w.scale(&QPoly::q_pow(3)));
        let one = FreePoly::one(Alphabet::binary());
        assert_eq!(d0_grading().apply(&one).unwrap(), y);
    }

    #[test]
    fn not_unital() {
        let (x, y) = xy();
        let bad = Operator::Endomorphism {
            images: vec![x.clone(), y.clone()],
            unit_image: Some(x.clone()),
        };
        assert_eq!(bad.apply(&x), Err(Error::NotUnital));
    }

    #[test]
    fn sh_hat_examples() {
        let (x, y) = xy();
        let sigma = Operator::Grading;
        assert_eq!(sh_hat_apply(1, 0, &x, &y, &sigma).unwrap(), y);
        assert_eq!(
            sh_hat_apply(0, 4, &x, &y, &sigma).unwrap(),
            FreePoly::one(Alphabet::binary())
        );
        let expected = y.try_add(&sigma.apply(&y).unwrap()).unwrap();
        assert_eq!(sh_hat_apply(1, 1, &x, &y, &sigma).unwrap(), expected);
    }

    #[test]
    fn qbell_low_degree() {
        let (x, y) = xy();
        let y1 = x.try_mul(&y).unwrap().try_sub(&y.try_mul(&x).unwrap().scale(&q())).unwrap();
        assert_eq!(y_derivative(1).unwrap(), y1);
        assert_eq!(qbell(2).unwrap(), y1.try_add(&y.try_mul(&y).unwrap()).unwrap());
        assert_eq!(qbell(0).unwrap(), FreePoly::one(Alphabet::binary()));
        // y^(2) + (2)_q y y^(1) + y^(1) y + y^3
        let y2 = y_derivative(2).unwrap();
        let two_q = QPoly::from_ints(&[1, 1]);
        let expected = y2
            .try_add(&y.try_mul(&y1).unwrap().scale(&two_q))
            .unwrap()
            .try_add(&y1.try_mul(&y).unwrap())
            .unwrap()
            .try_add(&y.pow(3))
            .unwrap();
        assert_eq!(qbell(3).unwrap(), expected);
    }

    #[test]
    fn ore_n1() {
        let (x, y) = xy();
        let basket = word_basket(Alphabet::binary(), 2);
        let delta = Operator::ad_sigma(x, Operator::Identity);
        let coeffs = ore_binomial(1, &Operator::Identity, &delta, &y, &basket).unwrap();
        assert_eq!(coeffs, vec![y, FreePoly::one(Alphabet::binary())]);
    }

    #[test]
    fn non_derivation_rejected() {
        let (x, y) = xy();
        let basket = word_basket(Alphabet::binary(), 2);
        // left multiplication is not a derivation
        let bad = Operator::LeftMul(x);
        assert!(matches!(
            ore_binomial(2, &Operator::Identity, &bad, &y, &basket),
            Err(Error::NotASigmaDerivation(_))
        ));
    }

    #[test]
    fn tuple_count() {
        assert_eq!(nondecreasing_tuples(2, 3).len(), 10);
        assert_eq!(nondecreasing_tuples(0, 3).len(), 1);
    }
}
