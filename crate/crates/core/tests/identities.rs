use ncbinom::freepoly::FreePoly;
use ncbinom::identities::*;
use ncbinom::rings::{cyclotomic, q_binomial, QPoly, Rational};
use ncbinom::words::{all_words, Alphabet, Word};

/// Brute force: words of length m+n+1 starting with g with m letters h.
fn faa_brute(m: usize, n: usize) -> FreePoly<Rational> {
    let mut out = FreePoly::zero(Alphabet::binary());
    for w in all_words(Alphabet::binary(), m + n + 1) {
        if w.letters()[0] == G && w.count(H) == m {
            out.add_term(w, Rational::from_integer(1.into()));
        }
    }
    out
}

#[test]
fn faa_di_bruno_grid() {
    for total in 0..=10 {
        for m in 0..=total {
            let n = total - m;
            assert!(faa_di_bruno_check(m, n), "({m},{n})");
            assert!(faa_mass_check(m, n));
            if total <= 8 {
                assert_eq!(faa_right_side(m, n), faa_brute(m, n));
            }
        }
    }
}

#[test]
fn faa_small_cases() {
    let g = Word::letter(G);
    assert_eq!(faa_left_side(0, 2), FreePoly::word(Alphabet::binary(), g.repeat(3)));
    let one = faa_right_side(1, 1);
    assert!(one.coeff(&Word::new(vec![G, H, G])).is_some());
    assert!(one.coeff(&Word::new(vec![G, G, H])).is_some());
}

#[test]
fn cyclotomic_divisibility() {
    for n in 2..=12 {
        assert!(qbinom_cyclotomic_vanish(n), "n={n}");
        let phi = cyclotomic(n);
        for i in 1..n {
            let quotient = q_binomial(n, i).exact_div(&phi).unwrap();
            assert_eq!(&quotient * &phi, q_binomial(n, i));
        }
        assert!(q_binomial(n, 0).exact_div(&phi).is_err());
    }
}

#[test]
fn cyclotomic_root_evaluation() {
    // a primitive n-th root of unity is a root of every binom(n,i)_q, 0<i<n
    for n in 2..=12usize {
        for i in 1..n {
            let b = q_binomial(n, i);
            let (re, im) = (0..=b.degree().unwrap_or(0)).fold((0.0f64, 0.0f64), |(re, im), k| {
                let c: f64 = b.coeff(k).to_string().parse().unwrap();
                let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
                (re + c * ang.cos(), im + c * ang.sin())
            });
            assert!(re.abs() < 1e-6 && im.abs() < 1e-6, "n={n} i={i}");
        }
    }
}

#[test]
fn q_binomial_theorem_in_quantum_plane() {
    for n in 0..=8 {
        assert!(q_binomial_theorem_check(n));
        for i in 0..=n {
            assert!(quantum_plane_shuffle_check(n, i));
        }
    }
}

#[test]
fn quantum_plane_normal_form() {
    let w = Word::new(vec![1, 2, 1, 2]);
    let (c, key) = quantum_plane_normalize(&w, 2);
    assert_eq!(c, QPoly::q_pow(3));
    assert_eq!(key, (2, 2));
}
