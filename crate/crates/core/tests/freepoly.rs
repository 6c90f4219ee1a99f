use proptest::prelude::*;

use ncbinom::freepoly::{coefficient_mass, sh_word_basis, sh_word_basis_via_shuffle, shuffle_words};
use ncbinom::rings::{binomial, rat};
use ncbinom::{Alphabet, FreePoly, Rational, Word};

fn small_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=2, 0..=max_len).prop_map(Word::new)
}

fn small_poly() -> impl Strategy<Value = FreePoly<Rational>> {
    prop::collection::vec((small_word(4), -5i64..=5), 0..5).prop_map(|terms| {
        FreePoly::from_terms(Alphabet::binary(), terms.into_iter().map(|(w, c)| (w, rat(c))))
    })
}

proptest! {
    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn shuffle_laws(u in small_word(4), v in small_word(4), w in small_word(3)) {
        let b = Alphabet::binary();
        let (pu, pv, pw) = (FreePoly::<Rational>::word(b, u.clone()), FreePoly::word(b, v.clone()), FreePoly::word(b, w));
        prop_assert_eq!(pu.shuffle_product(&pv).unwrap(), pv.shuffle_product(&pu).unwrap());
        prop_assert_eq!(
            pu.shuffle_product(&pv).unwrap().shuffle_product(&pw).unwrap(),
            pu.shuffle_product(&pv.shuffle_product(&pw).unwrap()).unwrap()
        );
        let mass: u64 = shuffle_words(&u, &v).values().sum();
        prop_assert_eq!(num_bigint::BigInt::from(mass), binomial((u.len() + v.len()) as u64, u.len() as u64));
    }
}

#[test]
fn shuffle_polynomials_sum_to_power() {
    let b = Alphabet::binary();
    let sum = &FreePoly::<Rational>::letter(b, 1) + &FreePoly::letter(b, 2);
    for n in 0..=8 {
        let total = (0..=n).fold(FreePoly::zero(b), |acc, k| &acc + &sh_word_basis(k, n - k));
        assert_eq!(total, sum.pow(n as u32), "n={n}");
        for k in 0..=n {
            assert_eq!(sh_word_basis(k, n - k), sh_word_basis_via_shuffle(k, n - k));
            assert_eq!(
                coefficient_mass(&sh_word_basis(k, n - k)),
                Rational::from_integer(binomial(n as u64, k as u64))
            );
        }
    }
}

#[test]
fn commutator_exchange() {
    let b = Alphabet::binary();
    let (x, y) = (FreePoly::<Rational>::letter(b, 1), FreePoly::letter(b, 2));
    for i in 1..=5 {
        for j in 1..=5 {
            let left = x.commutator(&sh_word_basis(i, j - 1)).unwrap();
            let right = sh_word_basis(i - 1, j).commutator(&y).unwrap();
            assert_eq!(left, right, "i={i}, j={j}");
        }
    }
}

#[test]
fn shuffle_polynomials_split_at_any_position() {
    for i in 0..=7 {
        for j in 0..=7 - i {
            for k in 0..=i.min(j) {
                let split = (0..=k).fold(FreePoly::zero(Alphabet::binary()), |acc, t| {
                    &acc + &(&sh_word_basis(k - t, t) * &sh_word_basis(i - k + t, j - t))
                });
                assert_eq!(split, sh_word_basis(i, j), "i={i}, j={j}, k={k}");
            }
        }
    }
}
