//! Command-line front end for the `ncbinom` engine.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncbinom::bell::{bell_dual, bell_partial, classical_bell_project};
use ncbinom::expr::{parse_expr, parse_q_expr};
use ncbinom::output::{json_ring, render_pbw, render_word, word_from_json, Format};
use ncbinom::qsigma::{qbell, qbell_partial, ore_binomial, word_basket, Operator, QFree};
use ncbinom::quotients::{
    blumen_closed_form, qcomm_bell, weyl_binomial, weyl_from_pbw, Blumen, BlumenPoly, KillSet,
};
use ncbinom::rings::{is_prime, PrimeFieldElem, QPoly, Rational, RingKind};
use ncbinom::shuffle::{binomial_by_rewriting, binomial_ls, reduce_mod_p, sh_pbw, sh_pbw_char_p};
use ncbinom::verify::{self, SuiteReport};
use ncbinom::words::{cfl_factorize, lyndon_enumerate, Word};
use ncbinom::{Alphabet, Error, FreePoly, LyndonWord, PbwEngine, PbwMonomial, PbwPoly, Result};

#[derive(Parser, Debug)]
#[command(name = "ncbinom", version, about = "Noncommutative binomial formulas in the Lyndon-Shirshov basis")]
struct Cli {
    /// Output format: text, latex or json.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Coefficient ring: Q, GF:p or Q[q].
    #[arg(long, global = true, default_value = "Q")]
    ring: String,
    /// Alphabet size.
    #[arg(long, global = true, default_value_t = 2)]
    alphabet: usize,
    /// Largest degree any command may expand.
    #[arg(long, global = true, default_value_t = 10)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lyndon words up to a length, in lexicographic order.
    Lyndon {
        #[arg(long)]
        max_len: usize,
    },
    /// Chen-Fox-Lyndon factorization of a word.
    Factorize { word: String },
    /// Shuffle type polynomial of a multidegree `i_m,...,i_1`.
    Sh {
        #[arg(long, value_delimiter = ',', required = true)]
        degree: Vec<usize>,
        /// PBW form (default).
        #[arg(long, conflicts_with = "word")]
        pbw: bool,
        /// Word-basis form.
        #[arg(long)]
        word: bool,
        /// Reduce modulo a prime.
        #[arg(long)]
        char: Option<u64>,
    },
    /// `(E_1 + ... + E_m)^d` from the closed coefficient formula.
    Binom {
        #[arg(long, default_value_t = 2)]
        letters: usize,
        #[arg(long)]
        power: usize,
        /// Also rewrite the expanded power and compare.
        #[arg(long)]
        check: bool,
    },
    /// PBW rewriting of a word-basis expression, or expansion back to words.
    Pbw(PbwArgs),
    /// Bell differential polynomials in PBW form.
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        project_classical: bool,
        /// Word-basis form instead of PBW.
        #[arg(long)]
        word: bool,
    },
    /// q-Bell differential polynomials over Q[q].
    Qbell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Binomial coefficients of `(x+y)^n` when `x a = sigma(a) x + delta(a)`.
    Ore {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma_spec: String,
        #[arg(long)]
        delta_spec: String,
        /// The element `y`, as an expression.
        #[arg(long, default_value = "w(1)")]
        y: String,
    },
    /// Quotient algebras.
    #[command(subcommand)]
    Quotient(QuotientCommand),
    /// Identity suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct PbwArgs {
    /// Expression such as `2*w(21) + [E(112), E(2)]`.
    #[arg(long, conflicts_with = "input")]
    expr: Option<String>,
    /// JSON document (word or pbw basis); `-` reads standard input.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum QuotientCommand {
    /// `(E_1 + E_2)^d` with `E_112 = E_122 = 0`.
    Weyl {
        #[arg(long)]
        d: usize,
    },
    /// `(x + y)^n` under `xy = q yx + h`, `xh = q^2 hx`, `hy = q^2 yh`.
    Blumen {
        #[arg(long)]
        n: usize,
    },
    /// q-commutative partial Bell polynomial.
    QcommBell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Projects an expression's PBW form by a kill set.
    Kill {
        #[arg(long)]
        set: String,
        #[arg(long)]
        expr: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    All,
    Appendix,
    TheoremA,
    TheoremB,
    TheoremC,
    Pbw,
    Commutators,
    BellBinomial,
    QBell,
    Qcomm,
    Blumen,
    Weyl,
    Kill,
    CharP,
    Faa,
    Cyclotomic,
    QuantumPlane,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SigmaChoice {
    Id,
    Grading,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Bound for the suite (defaults to --max-degree).
    #[arg(long, alias = "max", alias = "d")]
    n: Option<usize>,
    /// Restricts theorem-b to one endomorphism.
    #[arg(long, value_enum)]
    sigma: Option<SigmaChoice>,
}

enum Failure {
    Usage(String),
    Identity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) | Error::DivisionNotExact { .. } => Failure::Identity(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Ctx {
    format: Format,
    ring: RingKind,
    alphabet: Alphabet,
    max_degree: usize,
}

impl Ctx {
    fn cap(&self, requested: usize) -> Result<()> {
        if requested > self.max_degree {
            Err(Error::DegreeCap {
                requested,
                cap: self.max_degree,
            })
        } else {
            Ok(())
        }
    }

    fn require_ring(&self, allowed: &[RingKind]) -> Result<()> {
        if allowed.contains(&self.ring) || matches!(self.ring, RingKind::PrimeField(_)) && allowed.iter().any(|r| matches!(r, RingKind::PrimeField(_))) {
            Ok(())
        } else {
            Err(Error::UnsupportedRing(self.ring.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Identity(msg)) => {
            eprintln!("identity failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> std::result::Result<String, Failure> {
    let ctx = Ctx {
        format: cli.format.parse()?,
        ring: cli.ring.parse()?,
        alphabet: Alphabet::new(cli.alphabet)?,
        max_degree: cli.max_degree,
    };
    if let RingKind::PrimeField(p) = ctx.ring {
        if !is_prime(p) {
            return Err(Error::NotPrime(p).into());
        }
    }
    match cli.command {
        Command::Lyndon { max_len } => lyndon(&ctx, max_len),
        Command::Factorize { word } => factorize(&ctx, &word),
        Command::Sh { degree, word, char, .. } => sh(&ctx, &degree, word, char),
        Command::Binom { letters, power, check } => binom(&ctx, letters, power, check),
        Command::Pbw(args) => pbw(&ctx, &args),
        Command::Bell {
            n,
            k,
            dual,
            project_classical,
            word,
        } => bell(&ctx, n, k, dual, project_classical, word),
        Command::Qbell { n, k } => qbell_cmd(&ctx, n, k),
        Command::Ore {
            n,
            sigma_spec,
            delta_spec,
            y,
        } => ore(&ctx, n, &sigma_spec, &delta_spec, &y),
        Command::Quotient(q) => quotient(&ctx, q),
        Command::Verify(args) => verify_cmd(&ctx, &args),
    }
    .map_err(Failure::from)
    .and_then(|r| r)
}

type Outcome = std::result::Result<String, Failure>;

fn lyndon(ctx: &Ctx, max_len: usize) -> Result<Outcome> {
    ctx.cap(max_len)?;
    let words: Vec<String> = lyndon_enumerate(ctx.alphabet, max_len)
        .iter()
        .map(|w| w.word().render(ctx.alphabet))
        .collect();
    Ok(Ok(match ctx.format {
        Format::Json => json!(words).to_string(),
        Format::Latex => words.iter().map(|w| format!("E_{{{w}}}")).collect::<Vec<_>>().join(", "),
        Format::Text => words.join(" "),
    }))
}

fn factorize(ctx: &Ctx, word: &str) -> Result<Outcome> {
    let w = Word::parse(word, ctx.alphabet)?;
    let factors: Vec<String> = cfl_factorize(&w)?
        .iter()
        .map(|f| f.word().render(ctx.alphabet))
        .collect();
    Ok(Ok(match ctx.format {
        Format::Json => json!(factors).to_string(),
        Format::Latex => factors.iter().map(|f| format!("({f})")).collect(),
        Format::Text => factors.join(" "),
    }))
}

/// `i_m,...,i_1` to per-letter counts.
fn counts_from_degree(degree: &[usize]) -> Result<(Alphabet, Vec<usize>)> {
    if degree.len() < 2 {
        return Err(Error::InvalidArgument("--degree needs at least two entries".into()));
    }
    let mut counts = degree.to_vec();
    counts.reverse();
    Ok((Alphabet::new(counts.len())?, counts))
}

fn prime_of(ctx: &Ctx, char: Option<u64>) -> Result<Option<u64>> {
    match (char, ctx.ring) {
        (Some(p), _) if !is_prime(p) => Err(Error::NotPrime(p)),
        (Some(p), RingKind::PrimeField(q)) if p != q => Err(Error::RingMismatch {
            left: format!("GF:{p}"),
            right: format!("GF:{q}"),
        }),
        (Some(p), _) => Ok(Some(p)),
        (None, RingKind::PrimeField(p)) => Ok(Some(p)),
        (None, _) => Ok(None),
    }
}

fn emit_pbw_q(ctx: &Ctx, p: &PbwPoly<Rational>, prime: Option<u64>) -> Result<String> {
    match prime {
        Some(pr) => Ok(render_pbw(&reduce_mod_p(p, pr)?, RingKind::PrimeField(pr), ctx.format)),
        None => Ok(render_pbw(p, RingKind::Rational, ctx.format)),
    }
}

fn emit_word_q(ctx: &Ctx, p: &FreePoly<Rational>, prime: Option<u64>) -> Result<String> {
    match prime {
        Some(pr) => {
            let reduced = p.try_map_coeffs(|c| PrimeFieldElem::from_rational(c, pr))?;
            Ok(render_word(&reduced, RingKind::PrimeField(pr), ctx.format))
        }
        None => Ok(render_word(p, RingKind::Rational, ctx.format)),
    }
}

fn sh(ctx: &Ctx, degree: &[usize], word: bool, char: Option<u64>) -> Result<Outcome> {
    ctx.require_ring(&[RingKind::Rational, RingKind::PrimeField(0)])?;
    let (alphabet, counts) = counts_from_degree(degree)?;
    ctx.cap(counts.iter().sum())?;
    let prime = prime_of(ctx, char)?;
    let engine = PbwEngine::new(alphabet);
    if word {
        let w = ncbinom::freepoly::sh_word_multi(&counts, alphabet);
        return Ok(Ok(emit_word_q(ctx, &w, prime)?));
    }
    if let (Some(p), 2) = (prime, counts.len()) {
        let k = counts[1];
        if counts[0] + k == p as usize && (1..p as usize).contains(&k) {
            let reduced = sh_pbw_char_p(&engine, k, p)?;
            return Ok(Ok(render_pbw(&reduced, RingKind::PrimeField(p), ctx.format)));
        }
    }
    let result = sh_pbw(&engine, &counts)?;
    Ok(Ok(emit_pbw_q(ctx, &result, prime)?))
}

fn binom(ctx: &Ctx, letters: usize, power: usize, check: bool) -> Result<Outcome> {
    ctx.require_ring(&[RingKind::Rational, RingKind::PrimeField(0)])?;
    ctx.cap(power)?;
    let alphabet = Alphabet::new(letters)?;
    let closed = binomial_ls(alphabet, power)?;
    if check {
        let rewritten = binomial_by_rewriting(&PbwEngine::new(alphabet), power)?;
        if rewritten != closed {
            return Ok(Err(Failure::Identity("closed form differs from rewriting".into())));
        }
    }
    Ok(Ok(emit_pbw_q(ctx, &closed, prime_of(ctx, None)?)?))
}

fn read_input(path: &str) -> Result<Value> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn pbw(ctx: &Ctx, args: &PbwArgs) -> Result<Outcome> {
    ctx.require_ring(&[RingKind::Rational])?;
    let (poly, alphabet) = match (&args.expr, &args.input) {
        (Some(e), _) => {
            let p = parse_expr(e, ctx.alphabet)?;
            (p, ctx.alphabet)
        }
        (None, Some(path)) => {
            let doc = read_input(path)?;
            if json_ring(&doc)? != RingKind::Rational {
                return Err(Error::UnsupportedRing(json_ring(&doc)?.to_string()));
            }
            if doc.get("basis").and_then(Value::as_str) == Some("pbw") {
                let p: PbwPoly<Rational> = ncbinom::output::pbw_from_json(&doc)?;
                let engine = PbwEngine::new(p.alphabet());
                return Ok(Ok(render_word(&engine.expand_poly(&p), RingKind::Rational, ctx.format)));
            }
            let p: FreePoly<Rational> = word_from_json(&doc)?;
            let a = p.alphabet();
            (p, a)
        }
        (None, None) => return Err(Error::InvalidArgument("pbw needs --expr or --input".into())),
    };
    ctx.cap(poly.max_len())?;
    let engine = PbwEngine::new(alphabet);
    Ok(Ok(render_pbw(&engine.rewrite(&poly)?, RingKind::Rational, ctx.format)))
}

fn bell(ctx: &Ctx, n: usize, k: Option<usize>, dual: bool, classical: bool, word: bool) -> Result<Outcome> {
    ctx.require_ring(&[RingKind::Rational])?;
    ctx.cap(n)?;
    let engine = PbwEngine::new(Alphabet::binary());
    if classical {
        return Ok(Ok(render_pbw(&classical_bell_project(&engine, n)?, RingKind::Rational, ctx.format)));
    }
    let ks: Vec<usize> = match k {
        Some(k) if k > n => return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}"))),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let mut total = PbwPoly::zero(Alphabet::binary());
    for k in ks {
        let part = if dual { bell_dual(&engine, n, k)? } else { bell_partial(&engine, n, k)?.1 };
        total = total.try_add(&part)?;
    }
    if word {
        return Ok(Ok(render_word(&engine.expand_poly(&total), RingKind::Rational, ctx.format)));
    }
    Ok(Ok(render_pbw(&total, RingKind::Rational, ctx.format)))
}

fn qbell_cmd(ctx: &Ctx, n: usize, k: Option<usize>) -> Result<Outcome> {
    ctx.cap(n)?;
    let p = match k {
        Some(k) if k > n => return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}"))),
        Some(k) => qbell_partial(n, k)?,
        None => qbell(n)?,
    };
    Ok(Ok(render_word(&p, RingKind::QPoly, ctx.format)))
}

fn parse_poly_doc(v: &Value, alphabet: Alphabet) -> Result<QFree> {
    match v {
        Value::String(s) => parse_q_expr(s, alphabet),
        _ => {
            let p: QFree = match json_ring(v)? {
                RingKind::QPoly => word_from_json(v)?,
                RingKind::Rational => {
                    let r: FreePoly<Rational> = word_from_json(v)?;
                    r.map_coeffs(|c| QPoly::constant(c.clone()))
                }
                other => return Err(Error::UnsupportedRing(other.to_string())),
            };
            p.with_alphabet(alphabet)
        }
    }
}

fn spec_images(spec: &Value, alphabet: Alphabet) -> Result<Vec<QFree>> {
    spec.get("images")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("spec needs an \"images\" array".into()))?
        .iter()
        .map(|v| parse_poly_doc(v, alphabet))
        .collect()
}

fn spec_alphabet(spec: &Value, fallback: Alphabet) -> Result<Alphabet> {
    match spec.get("alphabet").and_then(Value::as_u64) {
        Some(n) => Alphabet::new(n as usize),
        None => Ok(fallback),
    }
}

fn sigma_from_spec(spec: &Value, alphabet: Alphabet) -> Result<Operator> {
    match spec.get("kind").and_then(Value::as_str).unwrap_or("endomorphism") {
        "identity" => Ok(Operator::Identity),
        "grading" => Ok(Operator::Grading),
        "endomorphism" => Ok(Operator::endomorphism(spec_images(spec, alphabet)?)),
        other => Err(Error::Parse(format!("unknown sigma kind {other:?}"))),
    }
}

fn delta_from_spec(spec: &Value, sigma: &Operator, alphabet: Alphabet) -> Result<Operator> {
    match spec.get("kind").and_then(Value::as_str).unwrap_or("derivation") {
        "ad-sigma" => {
            let element = spec
                .get("element")
                .ok_or_else(|| Error::Parse("ad-sigma spec needs \"element\"".into()))?;
            Ok(Operator::ad_sigma(parse_poly_doc(element, alphabet)?, sigma.clone()))
        }
        "derivation" => Ok(Operator::derivation(spec_images(spec, alphabet)?, sigma.clone())),
        "zero" => Ok(Operator::Sum(Vec::new())),
        other => Err(Error::Parse(format!("unknown delta kind {other:?}"))),
    }
}

fn ore(ctx: &Ctx, n: usize, sigma_path: &str, delta_path: &str, y: &str) -> Result<Outcome> {
    ctx.cap(n)?;
    let sigma_spec = read_input(sigma_path)?;
    let delta_spec = read_input(delta_path)?;
    let alphabet = spec_alphabet(&sigma_spec, ctx.alphabet)?;
    let sigma = sigma_from_spec(&sigma_spec, alphabet)?;
    let delta = delta_from_spec(&delta_spec, &sigma, alphabet)?;
    let y = parse_q_expr(y, alphabet)?;
    let basket = word_basket(alphabet, 3);
    let coeffs = ore_binomial(n, &sigma, &delta, &y, &basket)?;
    Ok(Ok(match ctx.format {
        Format::Json => {
            let arr: Vec<Value> = coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| json!({"x_power": j, "coeff": ncbinom::output::word_to_json(c, RingKind::QPoly)}))
                .collect();
            Value::Array(arr).to_string()
        }
        f => coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| format!("x^{j}: {}", render_word(c, RingKind::QPoly, f)))
            .collect::<Vec<_>>()
            .join("\n"),
    }))
}

fn weyl_pbw(d: usize) -> Result<PbwPoly<Rational>> {
    let b = Alphabet::binary();
    let gens = [LyndonWord::parse("2", b)?, LyndonWord::parse("12", b)?, LyndonWord::parse("1", b)?];
    let mut out = PbwPoly::zero(b);
    for ((t2, t12, t1), c) in weyl_binomial(d) {
        let factors: Vec<(LyndonWord, u32)> = gens
            .iter()
            .cloned()
            .zip([t2, t12, t1])
            .filter(|(_, t)| *t > 0)
            .map(|(g, t)| (g, t as u32))
            .collect();
        out.add_term(PbwMonomial::new(factors)?, c);
    }
    Ok(out)
}

fn coeff_text(c: &QPoly) -> String {
    let s = c.to_string();
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

fn blumen_render(p: &BlumenPoly, format: Format) -> String {
    match format {
        Format::Json => {
            let terms: Vec<Value> = p
                .iter()
                .rev()
                .map(|(m, c)| json!({"coeff": c.to_string(), "r": m.r, "s": m.s, "t": m.t}))
                .collect();
            json!({"ring": "Q[q]", "basis": "blumen", "terms": terms}).to_string()
        }
        Format::Latex => p
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut body = String::new();
                for (name, e) in [("y", m.r), ("h", m.s), ("x", m.t)] {
                    match e {
                        0 => {}
                        1 => body.push_str(name),
                        _ => body.push_str(&format!("{name}^{{{e}}}")),
                    }
                }
                let c = coeff_text(c);
                match (c.as_str(), body.is_empty()) {
                    (_, true) => c,
                    ("1", false) => body,
                    _ => format!("{c}{body}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + "),
        Format::Text => p
            .iter()
            .rev()
            .map(|(m, c)| format!("{}*{m}", coeff_text(c)))
            .collect::<Vec<_>>()
            .join(" + "),
    }
}

fn quotient(ctx: &Ctx, q: QuotientCommand) -> Result<Outcome> {
    match q {
        QuotientCommand::Weyl { d } => {
            ctx.cap(d)?;
            let formula = weyl_pbw(d)?;
            let projected = weyl_from_pbw(&binomial_ls(Alphabet::binary(), d)?)?;
            if projected != weyl_binomial(d) {
                return Ok(Err(Failure::Identity(format!("Weyl projection differs at d={d}"))));
            }
            Ok(Ok(render_pbw(&formula, RingKind::Rational, ctx.format)))
        }
        QuotientCommand::Blumen { n } => {
            ctx.cap(n)?;
            let p = Blumen::new().binomial(n);
            if p != blumen_closed_form(n)? {
                return Ok(Err(Failure::Identity(format!("Blumen closed form differs at n={n}"))));
            }
            Ok(Ok(blumen_render(&p, ctx.format)))
        }
        QuotientCommand::QcommBell { n, k } => {
            ctx.cap(n)?;
            if k > n {
                return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}")));
            }
            let map = qcomm_bell(n, k)?;
            Ok(Ok(match ctx.format {
                Format::Json => {
                    let terms: Vec<Value> = map
                        .iter()
                        .map(|(m, c)| json!({"coeff": c.to_string(), "exponents": m.exponents()}))
                        .collect();
                    json!({"ring": "Q[q]", "basis": "qcomm", "terms": terms}).to_string()
                }
                _ if map.is_empty() => "0".into(),
                Format::Latex => map
                    .iter()
                    .map(|(m, c)| format!("{}{}", coeff_text(c), m.to_string().replace('*', "")))
                    .collect::<Vec<_>>()
                    .join(" + "),
                Format::Text => map
                    .iter()
                    .map(|(m, c)| format!("{}*{m}", coeff_text(c)))
                    .collect::<Vec<_>>()
                    .join(" + "),
            }))
        }
        QuotientCommand::Kill { set, expr } => {
            ctx.require_ring(&[RingKind::Rational])?;
            let poly = parse_expr(&expr, ctx.alphabet)?;
            ctx.cap(poly.max_len())?;
            let ks = KillSet::parse(&set, ctx.alphabet)?;
            let engine = PbwEngine::new(ctx.alphabet);
            let projected = ks.project(&engine.rewrite(&poly)?);
            Ok(Ok(render_pbw(&projected, RingKind::Rational, ctx.format)))
        }
    }
}

fn render_reports(reports: &[SuiteReport], format: Format) -> String {
    match format {
        Format::Json => {
            let arr: Vec<Value> = reports
                .iter()
                .map(|r| json!({"suite": r.name, "passed": r.passed(), "checks": r.checks, "failures": r.failures}))
                .collect();
            Value::Array(arr).to_string()
        }
        _ => {
            let passed = reports.iter().filter(|r| r.passed()).count();
            let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            lines.push(format!("{passed}/{} suites passed", reports.len()));
            lines.join("\n")
        }
    }
}

fn verify_cmd(ctx: &Ctx, args: &VerifyArgs) -> Result<Outcome> {
    let d = args.n.unwrap_or(ctx.max_degree);
    let reports = match args.suite {
        Suite::All => verify::all(d),
        Suite::Appendix => vec![verify::appendix()],
        Suite::TheoremA => vec![verify::theorem_a(d, d.min(6))],
        Suite::TheoremB => match args.sigma {
            None => vec![verify::theorem_b(d)],
            Some(choice) => {
                let (sigma, name) = match choice {
                    SigmaChoice::Id => (Operator::Identity, "theorem-b (sigma=id)"),
                    SigmaChoice::Grading => (Operator::Grading, "theorem-b (sigma=grading)"),
                };
                let mut rep = SuiteReport {
                    name,
                    checks: 0,
                    failures: Vec::new(),
                };
                for n in 0..=d {
                    rep.checks += 1;
                    match ncbinom::qsigma::theorem_b_verify(n, &sigma) {
                        Ok(true) => {}
                        Ok(false) => rep.failures.push(format!("n={n}")),
                        Err(e) => rep.failures.push(format!("n={n}: {e}")),
                    }
                }
                vec![rep]
            }
        },
        Suite::TheoremC => vec![verify::theorem_c(d)],
        Suite::Pbw => vec![verify::pbw_roundtrip(d)],
        Suite::Commutators => vec![verify::commutators(d)],
        Suite::BellBinomial => vec![verify::bell_binomial(d, d)],
        Suite::QBell => vec![verify::q_bell(d)],
        Suite::Qcomm => vec![verify::qcomm(d)],
        Suite::Blumen => vec![verify::blumen(d)],
        Suite::Weyl => vec![verify::weyl(d)],
        Suite::Kill => vec![verify::kill_quotients(d)],
        Suite::CharP => vec![verify::char_p(&[2, 3, 5, 7])],
        Suite::Faa => vec![verify::faa(d)],
        Suite::Cyclotomic => vec![verify::cyclotomic(d)],
        Suite::QuantumPlane => vec![verify::quantum_plane(d)],
    };
    let text = render_reports(&reports, ctx.format);
    if reports.iter().all(SuiteReport::passed) {
        Ok(Ok(text))
    } else {
        println!("{text}");
        Ok(Err(Failure::Identity("one or more suites failed".into())))
    }
}
