//! Standalone identity checks: the noncommutative Faà di Bruno relation, cyclotomic
//! vanishing of Gaussian binomials and the quantum plane.

use std::collections::BTreeMap;

use crate::freepoly::{sh_word_multi, FreePoly};
use crate::rings::{binomial, cyclotomic, q_binomial, QPoly, Rational, UnitalRing};
use crate::shuffle::compositions;
use crate::words::{Alphabet, Word};

/// Letter `g` in the alphabet `{g ≺ h}`.
pub const G: u8 = 1;
/// Letter `h` in the alphabet `{g ≺ h}`.
pub const H: u8 = 2;

/// `a_k = g h^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaaWord(pub usize);

impl FaaWord {
    pub fn word(self) -> Word {
        let mut letters = vec![G];
        letters.extend(std::iter::repeat_n(H, self.0));
        Word::new(letters)
    }
}

/// `g · SH_{m,n}(h, g)`: `g` times the sum of words with `m` letters `h` and `n` letters `g`.
pub fn faa_left_side(m: usize, n: usize) -> FreePoly<Rational> {
    let alphabet = Alphabet::binary();
    let sh = sh_word_multi(&[n, m], alphabet);
    sh.left_mul_word(&Word::letter(G))
}

/// `Σ_{i₀+⋯+iₙ=m} a_{i₀} ⋯ a_{iₙ}`.
pub fn faa_right_side(m: usize, n: usize) -> FreePoly<Rational> {
    let alphabet = Alphabet::binary();
    let mut out = FreePoly::zero(alphabet);
    for parts in compositions(m, n + 1) {
        let w = parts
            .iter()
            .fold(Word::empty(), |acc, &i| acc.concat(&FaaWord(i).word()));
        out.add_term(w, Rational::from_i64(1));
    }
    out
}

pub fn faa_di_bruno_check(m: usize, n: usize) -> bool {
    faa_left_side(m, n) == faa_right_side(m, n)
}

/// Both sides carry total coefficient `binom(m+n, n)`, the number of weak compositions
/// of `m` into `n+1` parts.
pub fn faa_mass_check(m: usize, n: usize) -> bool {
    let expected = Rational::from_integer(binomial((m + n) as u64, n as u64));
    let mass = |p: &FreePoly<Rational>| {
        p.terms()
            .values()
            .fold(Rational::from_i64(0), |acc, c| acc + c)
    };
    mass(&faa_left_side(m, n)) == expected && mass(&faa_right_side(m, n)) == expected
}

/// Normal form `Σ c · h^i g^j` in the quantum plane `g h = q h g`, keyed by `(i, j)`.
pub type QuantumPlanePoly = BTreeMap<(usize, usize), QPoly>;

/// Normal-orders a two-letter word with `front` moved left; each other letter standing
/// before a `front` letter contributes a factor `q`. Returns the exponents `(front, other)`.
pub fn quantum_plane_normalize(word: &Word, front: u8) -> (QPoly, (usize, usize)) {
    let mut back_seen = 0;
    let mut inversions = 0;
    let mut fronts = 0;
    for &l in word.letters() {
        if l == front {
            inversions += back_seen;
            fronts += 1;
        } else {
            back_seen += 1;
        }
    }
    (QPoly::q_pow(inversions), (fronts, word.len() - fronts))
}

/// Normal-orders a word-basis polynomial with `front` moved to the left.
pub fn quantum_plane_project(p: &FreePoly<Rational>, front: u8) -> QuantumPlanePoly {
    let mut out = QuantumPlanePoly::new();
    for (w, c) in p.terms() {
        let (qp, key) = quantum_plane_normalize(w, front);
        let entry = out.entry(key).or_insert_with(QPoly::zero);
        *entry = &*entry + &qp.scale(c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `SH_{i,n-i}(h,g)` normal-orders to `binom(n,i)_q h^i g^{n-i}` when `gh = q hg`.
pub fn quantum_plane_shuffle_check(n: usize, i: usize) -> bool {
    let sh = sh_word_multi(&[n - i, i], Alphabet::binary());
    let got = quantum_plane_project(&sh, H);
    let mut expected = QuantumPlanePoly::new();
    expected.insert((i, n - i), q_binomial(n, i));
    got == expected
}

/// `(x + y)^n = Σ binom(n,j)_q y^{n-j} x^j` when `xy = q yx`, with `x = 1`, `y = 2`.
pub fn q_binomial_theorem_check(n: usize) -> bool {
    let alphabet = Alphabet::binary();
    let sum: FreePoly<Rational> = &FreePoly::letter(alphabet, 1) + &FreePoly::letter(alphabet, 2);
    let got = quantum_plane_project(&sum.pow(n as u32), 2);
    let expected: QuantumPlanePoly = (0..=n)
        .map(|j| ((n - j, j), q_binomial(n, j)))
        .collect();
    got == expected
}

/// `Φ_n` divides every `binom(n,i)_q` with `0 < i < n`, and the quantum-plane shuffle
/// relations hold.
pub fn qbinom_cyclotomic_vanish(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let phi = cyclotomic(n);
    (1..n).all(|i| q_binomial(n, i).exact_div(&phi).is_ok() && quantum_plane_shuffle_check(n, i))
}
