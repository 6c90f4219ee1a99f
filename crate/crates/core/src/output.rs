//! Text, LaTeX and JSON forms of word-basis and PBW-basis polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::freepoly::FreePoly;
use crate::pbw::{PbwMonomial, PbwPoly};
use crate::rings::{parse_rational, PrimeFieldElem, QPoly, Rational, Ring, RingKind};
use crate::words::{Alphabet, LyndonWord, Word};

/// Coefficient rings that serialize as strings tagged by a [`RingKind`].
pub trait Coefficient: Ring + fmt::Display + Sized {
    fn ring_of(&self) -> RingKind;
    fn parse_coeff(s: &str, ring: RingKind) -> Result<Self>;
}

impl Coefficient for Rational {
    fn ring_of(&self) -> RingKind {
        RingKind::Rational
    }
    fn parse_coeff(s: &str, ring: RingKind) -> Result<Self> {
        match ring {
            RingKind::Rational => parse_rational(s),
            other => Err(Error::RingMismatch {
                left: "Q".into(),
                right: other.to_string(),
            }),
        }
    }
}

impl Coefficient for PrimeFieldElem {
    fn ring_of(&self) -> RingKind {
        RingKind::PrimeField(self.modulus())
    }
    fn parse_coeff(s: &str, ring: RingKind) -> Result<Self> {
        match ring {
            RingKind::PrimeField(p) => PrimeFieldElem::from_rational(&parse_rational(s)?, p),
            other => Err(Error::RingMismatch {
                left: "GF:p".into(),
                right: other.to_string(),
            }),
        }
    }
}

impl Coefficient for QPoly {
    fn ring_of(&self) -> RingKind {
        RingKind::QPoly
    }
    fn parse_coeff(s: &str, ring: RingKind) -> Result<Self> {
        match ring {
            RingKind::QPoly => s.parse(),
            other => Err(Error::RingMismatch {
                left: "Q[q]".into(),
                right: other.to_string(),
            }),
        }
    }
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct WordTerm {
    coeff: String,
    word: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct PbwTerm {
    coeff: String,
    factors: Vec<(String, u32)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Doc<T> {
    ring: String,
    basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alphabet: Option<usize>,
    terms: Vec<T>,
}

fn ring_tag<R: Coefficient>(terms: impl Iterator<Item = R>, fallback: RingKind) -> RingKind {
    terms.map(|c| c.ring_of()).next().unwrap_or(fallback)
}

/// JSON document for a word-basis polynomial; terms in increasing word order.
pub fn word_to_json<R: Coefficient + Clone>(p: &FreePoly<R>, ring: RingKind) -> Value {
    let alphabet = p.alphabet();
    let ring = ring_tag(p.terms().values().cloned(), ring);
    let doc = Doc {
        ring: ring.to_string(),
        basis: "word".into(),
        alphabet: Some(alphabet.size() as usize),
        terms: p
            .terms()
            .iter()
            .map(|(w, c)| WordTerm {
                coeff: c.to_string(),
                word: w.render(alphabet),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

/// JSON document for a PBW polynomial; terms in decreasing order.
pub fn pbw_to_json<R: Coefficient + Clone>(p: &PbwPoly<R>, ring: RingKind) -> Value {
    let alphabet = p.alphabet();
    let ring = ring_tag(p.terms().values().cloned(), ring);
    let doc = Doc {
        ring: ring.to_string(),
        basis: "pbw".into(),
        alphabet: Some(alphabet.size() as usize),
        terms: p
            .terms_desc()
            .map(|(m, c)| PbwTerm {
                coeff: c.to_string(),
                factors: m
                    .factors()
                    .iter()
                    .map(|(a, t)| (a.word().render(alphabet), *t))
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

fn parse_doc<T: for<'de> Deserialize<'de>>(v: &Value, basis: &str) -> Result<(RingKind, Doc<T>)> {
    let doc: Doc<T> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.basis != basis {
        return Err(Error::Parse(format!("expected basis {basis:?}, found {:?}", doc.basis)));
    }
    Ok((doc.ring.parse()?, doc))
}

fn max_letter(s: &str) -> usize {
    s.split(|c: char| !c.is_ascii_digit())
        .flat_map(|t| {
            if s.starts_with('[') {
                vec![t.parse::<usize>().unwrap_or(0)]
            } else {
                t.chars().map(|c| c.to_digit(10).unwrap_or(0) as usize).collect()
            }
        })
        .max()
        .unwrap_or(0)
}

fn resolve_alphabet(declared: Option<usize>, names: impl Iterator<Item = String>) -> Result<Alphabet> {
    match declared {
        Some(n) => Alphabet::new(n),
        None => Alphabet::new(names.map(|s| max_letter(&s)).max().unwrap_or(0).max(2)),
    }
}

/// Parses a word-basis JSON document, checking the ring tag against `R`.
pub fn word_from_json<R: Coefficient>(v: &Value) -> Result<FreePoly<R>> {
    let (ring, doc) = parse_doc::<WordTerm>(v, "word")?;
    let alphabet = resolve_alphabet(doc.alphabet, doc.terms.iter().map(|t| t.word.clone()))?;
    let mut out = FreePoly::zero(alphabet);
    for t in &doc.terms {
        out.add_term(Word::parse(&t.word, alphabet)?, R::parse_coeff(&t.coeff, ring)?);
    }
    Ok(out)
}

/// Parses a PBW-basis JSON document.
pub fn pbw_from_json<R: Coefficient>(v: &Value) -> Result<PbwPoly<R>> {
    let (ring, doc) = parse_doc::<PbwTerm>(v, "pbw")?;
    let alphabet = resolve_alphabet(
        doc.alphabet,
        doc.terms.iter().flat_map(|t| t.factors.iter().map(|f| f.0.clone())),
    )?;
    let mut out = PbwPoly::zero(alphabet);
    for t in &doc.terms {
        let factors = t
            .factors
            .iter()
            .map(|(a, e)| Ok((LyndonWord::parse(a, alphabet)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        out.add_term(PbwMonomial::new(factors)?, R::parse_coeff(&t.coeff, ring)?);
    }
    Ok(out)
}

/// Reads the ring tag of a JSON document.
pub fn json_ring(v: &Value) -> Result<RingKind> {
    v.get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing ring tag".into()))?
        .parse()
}

fn latex_join(terms: impl Iterator<Item = (String, String)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let (neg, c) = match c.strip_prefix('-') {
            Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest.to_string()),
            _ => (false, c),
        };
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let c = if c.contains(' ') { format!("({c})") } else { c };
        match (c.as_str(), body.is_empty()) {
            (_, true) => out.push_str(&c),
            ("1", false) => out.push_str(&body),
            _ => {
                out.push_str(&c);
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// LaTeX for a word-basis polynomial, letters written as `x_{i}` with repeated letters
/// collected into powers.
pub fn word_latex<R: Ring + fmt::Display>(p: &FreePoly<R>) -> String {
    latex_join(p.terms().iter().map(|(w, c)| {
        let mut body = String::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            body.push_str(&format!("x_{{{}}}", letters[i]));
            if j - i > 1 {
                body.push_str(&format!("^{{{}}}", j - i));
            }
            i = j;
        }
        (c.to_string(), body)
    }))
}

/// LaTeX for a PBW polynomial in decreasing order, e.g. `3E_{12}^{2} + E_{1122}`.
pub fn pbw_latex<R: Ring + fmt::Display>(p: &PbwPoly<R>) -> String {
    latex_join(p.terms_desc().map(|(m, c)| {
        let body = if m.is_unit() { String::new() } else { m.latex(p.alphabet()) };
        (c.to_string(), body)
    }))
}

/// Renders a word-basis polynomial in the chosen format.
pub fn render_word<R: Coefficient + Clone>(p: &FreePoly<R>, ring: RingKind, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Latex => word_latex(p),
        Format::Json => word_to_json(p, ring).to_string(),
    }
}

/// Renders a PBW polynomial in the chosen format.
pub fn render_pbw<R: Coefficient + Clone>(p: &PbwPoly<R>, ring: RingKind, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Latex => pbw_latex(p),
        Format::Json => pbw_to_json(p, ring).to_string(),
    }
}
