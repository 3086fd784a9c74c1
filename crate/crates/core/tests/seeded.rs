use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcrystal::verify::{run_checks, CheckConfig, Which};
use qcrystal::*;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_2024)
}

fn random_tableau(rng: &mut impl Rng, max_m: usize, max_n: u32) -> (Tableau, u32) {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let lam = partitions_of(m, Some(n as usize))
        .choose(rng)
        .unwrap()
        .clone();
    let mut t = Tableau::highest_weight(&lam);
    if n > 1 {
        for _ in 0..rng.gen_range(0..60) {
            if let Some(u) = f_tableau(&t, rng.gen_range(1..n)) {
                t = u;
            }
        }
    }
    (t, n)
}

fn random_word(rng: &mut impl Rng, max_n: u32, max_len: usize) -> Word {
    let n = rng.gen_range(1..=max_n);
    let len = rng.gen_range(1..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(1..=n)).collect(), n).unwrap()
}

#[test]
fn raising_undoes_lowering_on_random_tableaux() {
    let mut rng = rng();
    for _ in 0..100 {
        let (t, n) = random_tableau(&mut rng, 9, 6);
        for i in 1..n {
            if let Some(u) = f_tableau(&t, i) {
                assert_eq!(e_tableau(&u, i).as_ref(), Some(&t));
            }
            if let Some(u) = e_tableau(&t, i) {
                assert_eq!(f_tableau(&u, i).as_ref(), Some(&t));
            }
        }
    }
}

#[test]
fn rsk_round_trips_on_random_words() {
    let mut rng = rng();
    for _ in 0..200 {
        let w = random_word(&mut rng, 4, 10);
        let back = rsk_inverse(&rsk(&w).unwrap()).unwrap();
        assert_eq!(back.letters(), w.letters());
    }
}

#[test]
fn rot_is_an_involution_on_random_words() {
    let mut rng = rng();
    for _ in 0..500 {
        let w = random_word(&mut rng, 6, 12);
        assert_eq!(rot_word(&rot_word(&w)), w);
    }
}

#[test]
fn rotated_complement_reads_as_rot() {
    let mut rng = rng();
    for _ in 0..100 {
        let (t, n) = random_tableau(&mut rng, 9, 6);
        let s = rotate180_complement(&t, n).unwrap();
        let w = t.reading_word().with_alphabet_bound(n).unwrap();
        assert_eq!(s.reading_letters(), rot_word(&w).letters());
    }
}

#[test]
fn rsk_and_rot_identities_on_random_words() {
    let mut rng = rng();
    for _ in 0..300 {
        let w = random_word(&mut rng, 4, 9);
        let n = w.alphabet_bound();
        let pair = rsk(&w).unwrap();
        assert_eq!(standard_descent_set(&pair.q), w.descent_set());
        for i in 1..n {
            if let Some(fw) = f_word(&w, i) {
                assert_eq!(Some(rsk(&fw).unwrap().p), f_tableau(&pair.p, i));
            }
        }
        let r = rot_word(&w);
        assert_eq!(
            word_descent_composition(&r).unwrap(),
            word_descent_composition(&w).unwrap().reverse()
        );
        let id = rsk_of_rot(&w).unwrap();
        assert!(id.holds(), "{w}: {:?}", id);
    }
}

#[test]
fn schurify_recovers_random_combinations() {
    let mut rng = rng();
    for _ in 0..50 {
        let m = rng.gen_range(1..=8);
        let shapes = partitions_of(m, None);
        let k = rng.gen_range(1..=shapes.len().min(6));
        let g = SchurExpansion::from_terms(
            shapes
                .choose_multiple(&mut rng, k)
                .map(|l| (l.clone(), rng.gen_range(1..=9u32)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(schurify(&schur_expansion_to_f(&g)).unwrap(), g);
    }
}

#[test]
fn theorem_suites_pass_up_to_size_seven() {
    let cfg = CheckConfig {
        max_size: 7,
        max_entry: 5,
        parallel: true,
    };
    let report = run_checks(&cfg, Which::Theorems);
    for s in &report.sections {
        assert!(s.passed(), "{}: {:?}", s.name, s.failures);
    }
}
