use aw_core::algebra::{Label, Poly};
use aw_core::casimir::{action_matrix, elements, format_subset, gamma_basis, omega, subset, Subset};
use aw_core::morphisms::{apply, apply_word, generators, structural_image, MorphismTag, MorphismWord};
use aw_core::rewriter::{Engine, Outcome};
use aw_core::uq::{Matrix, Realization, RepSpec};
use num_rational::BigRational;
use proptest::prelude::*;

/// Where a word of transpositions sends each element, applied right to left.
fn permute(s: Subset, word: &[u8]) -> Subset {
    let mut e = elements(s);
    for &i in word.iter().rev() {
        for x in e.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
    subset(&e)
}

/// Compares the image of `ω_s` under `w` with `ω_t` in `aw(n)`.
fn sends_to(w: &MorphismWord, s: Subset, t: Subset, n: u8, engine: &mut Engine) -> Outcome {
    let (img, _) = apply_word(w, &omega(s, None).unwrap(), n).unwrap();
    engine.compare(&img, &omega(t, None).unwrap(), n)
}

#[test]
fn r0_prime_closed_form_matches_its_word() {
    let mut engine = Engine::new(0);
    for n in 3..=4u8 {
        let w = MorphismWord::r0prime_word(n);
        for l in generators(n) {
            let Some(closed) = structural_image(MorphismTag::R0Prime, &l, n) else { continue };
            let (via_word, _) = apply_word(&w, &Poly::letter(l.clone()), n).unwrap();
            let o = engine.compare(&closed, &via_word, n);
            assert!(o.is_proved(), "n={n} {l}: {o}");
        }
    }
}

#[test]
fn involutions_on_central_letters() {
    for n in 3..=5u8 {
        let centrals: Vec<Poly> =
            (1..=n).map(Label::single).chain([Label::interval(1, n)]).map(Poly::letter).collect();
        for i in 0..n {
            for t in [MorphismTag::R(i), MorphismTag::RBar(i)] {
                for c in &centrals {
                    let once = apply(t, c, n).unwrap();
                    assert_eq!(apply(t, &once, n).unwrap(), *c, "n={n} {t}");
                }
            }
        }
    }
}

#[test]
fn r_and_rbar_transpose_gamma() {
    let mut engine = Engine::new(0);
    let n = 4;
    for i in 1..n {
        for s in gamma_basis(n) {
            for t in [MorphismTag::R(i), MorphismTag::RBar(i)] {
                let o = sends_to(&MorphismWord::new(vec![t]), s, permute(s, &[i]), n, &mut engine);
                assert!(o.is_proved(), "{t} {}: {o}", format_subset(s));
            }
        }
    }
}

#[test]
fn r0_squares_to_identity_on_gamma() {
    let mut engine = Engine::new(0);
    for n in 3..=4u8 {
        let m = action_matrix(MorphismTag::R(0), n, &mut engine).unwrap();
        assert_eq!(m.mul(&m), Matrix::identity(gamma_basis(n).len()), "n={n}");
    }
}

#[test]
fn casimirs_are_up_invariant() {
    let mut engine = Engine::new(0);
    for n in 3..=4u8 {
        for s in gamma_basis(n) {
            let w = omega(s, None).unwrap();
            let o = engine.compare(&w.up(), &w, n);
            assert!(o.is_proved(), "n={n} {}: {o}", format_subset(s));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Braid words act on Casimirs through their permutation only.
    #[test]
    fn braid_words_act_by_permutation(word in prop::collection::vec(1u8..4, 1..5), k in 0usize..5) {
        let n = 4;
        let s = gamma_basis(n)[k];
        let w = MorphismWord::new(word.iter().map(|&i| MorphismTag::R(i)).collect());
        let (img, _) = apply_word(&w, &omega(s, None).unwrap(), n).unwrap();
        let mut re = Realization::at(RepSpec::halves(n as usize), BigRational::new(4.into(), 3.into())).unwrap();
        prop_assert_eq!(re.phi(&img).unwrap(), re.phi(&omega(permute(s, &word), None).unwrap()).unwrap());
    }
}
