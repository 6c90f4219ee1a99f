//! Identity suites run by `verify`: each compares independent routes to the same
//! quantity and reports how many instances were checked.

use std::fmt;

use rayon::prelude::*;
use serde_json::Value;

use crate::bell::{binomial_via_bell, classical_bell_formula, classical_bell_project, theorem_c_check, BellTable, Roles};
use crate::error::{Error, Result};
use crate::freepoly::FreePoly;
use crate::identities::{faa_di_bruno_check, faa_mass_check, q_binomial_theorem_check, qbinom_cyclotomic_vanish};
use crate::output::pbw_to_json;
use crate::pbw::{PbwEngine, PbwMonomial, PbwPoly};
use crate::qsigma::{at_q_one, binomial_q_verify, constant_coeffs, qbell, sh_hat_row, theorem_b_verify, xy, Operator};
use crate::quotients::{
    blumen_at_q_one, blumen_closed_form, heisenberg_binomial, qcomm_bell, unit_c_multinomial, weyl_binomial,
    weyl_from_pbw, Blumen, KillSet,
};
use crate::rings::{binomial, Rational, RingKind, UnitalRing};
use crate::shuffle::{
    binary_degree, binomial_ls, char_p_kill_check, pbw_monomials_of_degree, sh_pbw, theorem_a_check, CharPKill,
};
use crate::words::{lyndon_enumerate, Alphabet, LyndonWord};

/// Transcribed tables of `SH_{k,n-k}` in the PBW basis for `n = 5, 6, 7`.
pub const APPENDIX_GOLDEN: &str = include_str!("../golden/appendix_a.json");

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn record(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks", self.name, self.checks)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failures.len())?;
        }
        write!(f, ")")?;
        for msg in &self.failures {
            write!(f, "\n  - {msg}")?;
        }
        Ok(())
    }
}

/// Regenerates every table in the golden file and compares the JSON term lists exactly.
pub fn appendix() -> SuiteReport {
    let mut rep = SuiteReport::new("appendix");
    let golden: Value = match serde_json::from_str(APPENDIX_GOLDEN) {
        Ok(v) => v,
        Err(e) => {
            rep.failures.push(format!("golden file unreadable: {e}"));
            return rep;
        }
    };
    let engine = PbwEngine::new(Alphabet::binary());
    let Some(by_n) = golden.as_object() else {
        rep.failures.push("golden file is not an object".into());
        return rep;
    };
    for tables in by_n.values() {
        for (key, expected) in tables.as_object().into_iter().flatten() {
            let parsed: Option<(usize, usize)> = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
            let Some((k, j)) = parsed else {
                rep.failures.push(format!("bad key {key}"));
                continue;
            };
            let got = sh_pbw(&engine, &binary_degree(k, j))
                .map(|p| pbw_to_json(&p, RingKind::Rational)["terms"].clone());
            rep.record(got.map(|g| &g == expected), || format!("SH_{{{k},{j}}}"));
        }
    }
    rep
}

/// Closed-form assembly against rewriting, over two and three letters.
pub fn theorem_a(max_binary: usize, max_ternary: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("theorem-a");
    for (size, bound) in [(2, max_binary), (3, max_ternary)] {
        let engine = PbwEngine::new(Alphabet::new(size).expect("valid size"));
        match theorem_a_check(&engine, bound) {
            Ok(n) => rep.checks += n,
            Err(e) => {
                rep.checks += 1;
                rep.failures.push(format!("alphabet {size}: {e}"));
            }
        }
    }
    rep
}

/// Triangularity and expand/rewrite round trips for every monomial up to `max_degree`,
/// plus round trips of fixed integer combinations per degree.
pub fn pbw_roundtrip(max_degree: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("pbw-roundtrip");
    let alphabet = Alphabet::binary();
    let engine = PbwEngine::new(alphabet);
    for d in 0..=max_degree {
        let monomials = pbw_monomials_of_degree(alphabet, d);
        let mut combo = PbwPoly::zero(alphabet);
        for (i, m) in monomials.iter().enumerate() {
            rep.check(engine.is_triangular(m), || format!("{} is not triangular", m.render(alphabet)));
            combo.add_term(m.clone(), Rational::from_i64((i as i64 % 7) - 3));
        }
        let back = engine.rewrite(&engine.expand_poly(&combo));
        rep.record(back.map(|b| b == combo), || format!("degree {d} combination"));
    }
    rep
}

/// The worked commutators and the structural checks for every Lyndon pair `α ≺ β`
/// with `|α| + |β| ≤ max_total`.
pub fn commutators(max_total: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("commutators");
    let alphabet = Alphabet::binary();
    let engine = PbwEngine::new(alphabet);
    let lw = |s: &str| LyndonWord::parse(s, alphabet).expect("valid literal");
    let single = |s: &str, c: i64| PbwPoly::monomial(alphabet, PbwMonomial::single(lw(s)), Rational::from_i64(c));
    let examples = [
        ("112", "2", single("1122", 1)),
        ("1112", "2", single("11122", 1).try_add(&single("11212", -1)).expect("same alphabet")),
        ("1122", "2", single("12122", 1).try_add(&single("11222", 1)).expect("same alphabet")),
    ];
    for (a, b, expected) in examples {
        let got = engine.commutator_ls(&lw(a), &lw(b));
        rep.record(got.map(|g| g == expected), || format!("[E({a}), E({b})]"));
    }
    let words = lyndon_enumerate(alphabet, max_total.saturating_sub(1));
    for a in &words {
        for b in words.iter().filter(|b| a < *b && a.len() + b.len() <= max_total) {
            let got = engine.commutator_ls(a, b);
            rep.record(got.map(|_| true), || format!("[E({a}), E({b})]"));
        }
    }
    rep
}

/// Partial and dual Bell polynomials against filtered shuffle polynomials.
pub fn theorem_c(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("theorem-c");
    match theorem_c_check(&PbwEngine::new(Alphabet::binary()), max_n) {
        Ok(n) => rep.checks += n,
        Err(e) => {
            rep.checks += 1;
            rep.failures.push(e.to_string());
        }
    }
    rep
}

/// Both Bell binomial forms against `(x+y)^n`, and the classical projection.
pub fn bell_binomial(max_n: usize, max_classical: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("bell-binomial");
    let alphabet = Alphabet::binary();
    let sum = FreePoly::letter(alphabet, 1)
        .try_add(&FreePoly::letter(alphabet, 2))
        .expect("same alphabet");
    for n in 0..=max_n {
        let power: FreePoly<Rational> = sum.pow(n as u32);
        let (left, right) = binomial_via_bell(n);
        rep.check(left == power, || format!("left form, n={n}"));
        rep.check(right == power, || format!("right form, n={n}"));
    }
    let engine = PbwEngine::new(alphabet);
    for n in 0..=max_classical {
        let got = classical_bell_project(&engine, n)
            .and_then(|p| Ok(p == classical_bell_formula(n)?));
        rep.record(got, || format!("classical projection, n={n}"));
    }
    rep
}

fn theorem_b_id_factor(n: usize) -> Result<bool> {
    let (x, y) = xy();
    let row = sh_hat_row(n, &x, &y, &Operator::Identity, &FreePoly::one(x.alphabet()))?;
    let bell = BellTable::new(n, Roles::STANDARD);
    for (k, v) in row.iter().enumerate() {
        let expected = constant_coeffs(&bell.total(k).scale(&Rational::from_integer(binomial(n as u64, k as u64))));
        if *v != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The σ-binomial expansion for σ = id and the grading, and the σ = id factorization.
pub fn theorem_b(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("theorem-b");
    for n in 0..=max_n {
        rep.record(theorem_b_verify(n, &Operator::Identity), || format!("sigma=id, n={n}"));
        rep.record(theorem_b_verify(n, &Operator::Grading), || format!("sigma=grading, n={n}"));
        rep.record(theorem_b_id_factor(n), || format!("binom(n,k) B_k factorization, n={n}"));
    }
    rep
}

/// The q-binomial expansion by q-Bell polynomials and its `q = 1` specialization.
pub fn q_bell(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("q-bell");
    let bell = BellTable::new(max_n, Roles::STANDARD);
    for n in 0..=max_n {
        rep.record(binomial_q_verify(n), || format!("expansion, n={n}"));
        let got = qbell(n).map(|b| at_q_one(&b) == bell.total(n));
        rep.record(got, || format!("q=1, n={n}"));
    }
    rep
}

/// Recursion against closed form for the q-commutative Bell polynomials.
pub fn qcomm(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("qcomm-bell");
    for n in 0..=max_n {
        for k in 0..=n {
            rep.record(qcomm_bell(n, k).map(|_| true), || format!("({n},{k})"));
        }
    }
    rep
}

/// Rewriting against closed form, and the `q = 1` collapse to the Weyl form.
pub fn blumen(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("blumen");
    let mut bl = Blumen::new();
    for n in 0..=max_n {
        let p = bl.binomial(n);
        rep.record(blumen_closed_form(n).map(|c| c == p), || format!("closed form, n={n}"));
        rep.check(blumen_at_q_one(&p) == weyl_binomial(n), || format!("q=1, n={n}"));
    }
    rep.check(bl.y_derivative(2).is_empty(), || "second derivative of y is nonzero".into());
    rep
}

/// The Weyl quotient by projection, by its closed form and in Heisenberg-Weyl form.
pub fn weyl(max_d: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("weyl");
    let alphabet = Alphabet::binary();
    for d in 0..=max_d {
        let w = weyl_binomial(d);
        let projected = binomial_ls(alphabet, d).and_then(|p| weyl_from_pbw(&p));
        rep.record(projected.map(|p| p == w), || format!("projection, d={d}"));
        rep.check(heisenberg_binomial(d) == w, || format!("Heisenberg-Weyl form, d={d}"));
    }
    rep
}

fn kill_quotient_check(alphabet: Alphabet, kills: &str, survivors: &[&str], d: usize) -> Result<bool> {
    let ks = KillSet::parse(kills, alphabet)?;
    let allowed: Vec<LyndonWord> = survivors
        .iter()
        .map(|s| LyndonWord::parse(s, alphabet))
        .collect::<Result<_>>()?;
    let projected = ks.project(&binomial_ls(alphabet, d)?);
    for (m, c) in projected.terms() {
        if m.factors().iter().any(|(a, _)| !allowed.contains(a)) || *c != unit_c_multinomial(m) {
            return Ok(false);
        }
    }
    Ok(!projected.is_zero() || d == 0 || survivors.is_empty())
}

/// Generator quotients whose surviving basis elements all have unit coefficient.
pub fn kill_quotients(max_d: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("kill-quotients");
    let binary = Alphabet::binary();
    let ternary = Alphabet::new(3).expect("valid size");
    for d in 0..=max_d {
        rep.record(kill_quotient_check(binary, "12", &["2", "1"], d), || format!("commutative, d={d}"));
        rep.record(
            kill_quotient_check(binary, "1112,1122,1222,11212,12122", &["2", "122", "12", "112", "1"], d),
            || format!("five generators, d={d}"),
        );
        if d <= 5 {
            rep.record(
                kill_quotient_check(
                    ternary,
                    "112,113,122,123,132,133,223,233",
                    &["3", "23", "2", "13", "12", "1"],
                    d,
                ),
                || format!("three letters, d={d}"),
            );
        }
    }
    rep
}

/// Quotients of the shuffle polynomials in characteristic `p`.
pub fn char_p(primes: &[u64]) -> SuiteReport {
    let mut rep = SuiteReport::new("char-p");
    let engine = PbwEngine::new(Alphabet::binary());
    for &p in primes {
        for (kill, name) in [(CharPKill::RepeatedOnes, "repeated ones"), (CharPKill::RepeatedTwos, "repeated twos")] {
            rep.record(char_p_kill_check(&engine, p, kill).map(|_| true), || format!("p={p}, {name}"));
        }
    }
    rep
}

/// The shuffle / Faà di Bruno identity and its coefficient mass for `m + n ≤ max_total`.
pub fn faa(max_total: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("faa");
    for total in 0..=max_total {
        for m in 0..=total {
            let n = total - m;
            rep.check(faa_di_bruno_check(m, n), || format!("identity, (m,n)=({m},{n})"));
            rep.check(faa_mass_check(m, n), || format!("mass, (m,n)=({m},{n})"));
        }
    }
    rep
}

/// Cyclotomic divisibility of Gaussian binomials for `2 ≤ n ≤ max_n`.
pub fn cyclotomic(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("cyclotomic");
    for n in 2..=max_n {
        rep.check(qbinom_cyclotomic_vanish(n), || format!("n={n}"));
    }
    rep
}

/// The q-binomial theorem in the quantum plane.
pub fn quantum_plane(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("quantum-plane");
    for n in 0..=max_n {
        rep.check(q_binomial_theorem_check(n), || format!("n={n}"));
    }
    rep
}

/// Every suite with bounds derived from `max_degree`, sorted by name.
pub fn all(max_degree: usize) -> Vec<SuiteReport> {
    let d = max_degree;
    let jobs: Vec<Box<dyn Fn() -> SuiteReport + Send + Sync>> = vec![
        Box::new(appendix),
        Box::new(move || theorem_a(d, d.min(6))),
        Box::new(move || pbw_roundtrip(d.min(8))),
        Box::new(move || commutators(d)),
        Box::new(move || theorem_c(d)),
        Box::new(move || bell_binomial(d, d)),
        Box::new(move || theorem_b(d)),
        Box::new(move || q_bell(d)),
        Box::new(move || qcomm(d.min(8))),
        Box::new(move || blumen(d)),
        Box::new(move || weyl(d)),
        Box::new(move || kill_quotients(d.min(6))),
        Box::new(|| char_p(&[2, 3, 5, 7])),
        Box::new(move || faa(d)),
        Box::new(move || cyclotomic(d.max(2))),
        Box::new(move || quantum_plane(d)),
    ];
    let mut reports: Vec<SuiteReport> = jobs.par_iter().map(|job| job()).collect();
    reports.sort_by_key(|r| r.name);
    reports
}

/// Turns a report list into an error when any suite failed.
pub fn ensure_passed(reports: &[SuiteReport]) -> Result<()> {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::TheoremViolation(format!("failed suites: {}", failed.join(", "))))
    }
}
