use cicy_core::invariants::{betti2, euler_number, hilbert_polynomial, hodge_numbers};
use cicy_core::transitions::{contract, find_contraction_sites, split, ContractionSite};
use cicy_core::web::random_cicy;
use cicy_core::{BigInt, BigRational, ConfigurationMatrix, Error, MultiDegree};
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shuffled(c: &ConfigurationMatrix, rng: &mut ChaCha8Rng) -> ConfigurationMatrix {
    let mut rows: Vec<usize> = (0..c.num_rows()).collect();
    let mut cols: Vec<usize> = (0..c.num_cols()).collect();
    rows.shuffle(rng);
    cols.shuffle(rng);
    c.permuted(&rows, &cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn invariants_ignore_permutations(seed in any::<u64>(), shuffle in any::<u64>()) {
        let c = random_cicy(seed, 6, 8, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(shuffle);
        let d = shuffled(&c, &mut rng);
        prop_assert_eq!(euler_number(&c).unwrap(), euler_number(&d).unwrap());
        prop_assert_eq!(betti2(&c), betti2(&d));
        prop_assert_eq!(c.canonical_key(), d.canonical_key());
        let ones = MultiDegree(vec![1; c.num_rows()]);
        prop_assert_eq!(hilbert_polynomial(&c, &ones).unwrap(), hilbert_polynomial(&d, &ones).unwrap());
    }

    #[test]
    fn calabi_yau_structure_sheaf_has_zero_euler_characteristic(seed in any::<u64>()) {
        let c = random_cicy(seed, 5, 7, 4);
        let ones = MultiDegree(vec![1; c.num_rows()]);
        let h = hilbert_polynomial(&c, &ones).unwrap();
        prop_assert!(h.value_at(0).is_zero());
        prop_assert_eq!(h.degree(), Some(3));
        // chi(O(l)) = -chi(O(-l)) by Serre duality in odd dimension
        for l in 1..4 {
            prop_assert_eq!(h.value_at(l), -h.value_at(-l));
        }
        let lead = &h.coefficients()[3];
        prop_assert!(*lead > BigRational::zero());
    }

    #[test]
    fn euler_numbers_are_nonpositive(seed in any::<u64>()) {
        let c = random_cicy(seed, 7, 9, 7);
        prop_assert!(euler_number(&c).unwrap() <= BigInt::zero(), "{}", c);
    }

    #[test]
    fn hodge_numbers_agree_with_euler(seed in any::<u64>()) {
        let c = random_cicy(seed, 6, 8, 5);
        match hodge_numbers(&c) {
            Ok(h) => prop_assert_eq!(BigInt::from(h.euler()), euler_number(&c).unwrap()),
            Err(Error::UnsupportedBaseCase { .. }) => {}
            Err(e) => prop_assert!(false, "{}: {}", e, c),
        }
    }

    #[test]
    fn contraction_undoes_split(seed in any::<u64>(), pick in any::<u64>()) {
        let c = random_cicy(seed, 6, 8, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(pick);
        let j = (pick as usize) % c.num_cols();
        let col = c.column(j);
        prop_assume!(col.total() >= 2);
        // split off one unit of the column along a P^1
        let i = *(0..c.num_rows()).filter(|&i| col.0[i] > 0).collect::<Vec<_>>().choose(&mut rng).unwrap();
        let mut rest = col.clone();
        rest.0[i] -= 1;
        let mut unit = MultiDegree::zero(c.num_rows());
        unit.0[i] = 1;
        let s = split(&c, j, 1, &[rest, unit]).unwrap();
        prop_assert!(s.is_cicy());
        let site = ContractionSite::new(&s, s.num_rows() - 1).unwrap();
        prop_assert_eq!(contract(&site), c);
    }

    #[test]
    fn contraction_lands_on_cicys(seed in any::<u64>()) {
        let c = random_cicy(seed, 7, 9, 7);
        for site in find_contraction_sites(&c) {
            let x = contract(&site);
            prop_assert!(x.is_cicy());
            prop_assert_eq!(x.num_cols(), c.num_cols() - site.n() as usize);
        }
    }
}

#[test]
fn canonical_key_survives_shuffles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..40 {
        let c = random_cicy(seed, 7, 9, 7);
        let key = c.canonical_key();
        for _ in 0..100 {
            let d = shuffled(&c, &mut rng);
            assert_eq!(d.canonical_key(), key, "{}", c);
        }
        assert!(c.canonical_form().canonical_key() == key);
    }
}

#[test]
fn distinct_configurations_get_distinct_keys() {
    let quintic = ConfigurationMatrix::from_rows(&[(4, &[5][..])]).unwrap();
    let split = ConfigurationMatrix::from_rows(&[(4, &[4, 1][..]), (1, &[1, 1][..])]).unwrap();
    let other = ConfigurationMatrix::from_rows(&[(4, &[3, 2][..]), (1, &[1, 1][..])]).unwrap();
    assert_ne!(quintic.canonical_key(), split.canonical_key());
    assert_ne!(split.canonical_key(), other.canonical_key());
}
