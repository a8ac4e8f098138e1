//! Randomized structural invariants, checked against the independent
//! oracles in `common`.

mod common;

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use flagspec::{
    Family, HarmonicOutcome, Int, KahlerClass, LieType, LineBundleClass, Nat, PiScalar, Rat,
    RootSystem, Weight, WeylWord,
};

fn system(family: Family, rank: usize) -> RootSystem {
    RootSystem::new(LieType::new(family, rank).unwrap())
}

#[test]
fn weyl_orbit_of_a_regular_weight_has_one_dominant_member() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for (family, rank, order) in [(Family::A, 2, 6), (Family::B, 2, 8), (Family::G, 2, 12)] {
        let rs = system(family, rank);
        let group = weyl_group_matrices(&rs);
        assert_eq!(group.len(), order, "group order for {family}{rank}");
        for _ in 0..20 {
            let coords: Vec<i64> = (0..rank).map(|_| rng.gen_range(1..=4)).collect();
            let lambda = Weight::from_ints(&coords);
            let orbit: Vec<Weight> = group.iter().map(|w| apply_matrix(w, &lambda)).collect();
            let distinct: std::collections::HashSet<&Weight> = orbit.iter().collect();
            assert_eq!(distinct.len(), order, "regular orbit has |W| elements");
            let dominant: Vec<&Weight> =
                orbit.iter().filter(|w| w.is_dominant()).collect();
            assert_eq!(dominant, vec![&lambda], "exactly one dominant member");
            for mu in &orbit {
                let descent = rs.to_dominant(mu).unwrap();
                assert_eq!(descent.result, lambda);
                assert_eq!(rs.apply_word(&descent.word, mu).unwrap(), lambda);
            }
        }
    }
}

#[test]
fn shifted_action_composes_like_word_concatenation() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for (family, rank) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
        let rs = system(family, rank);
        for _ in 0..50 {
            let coords: Vec<i64> = (0..rank).map(|_| rng.gen_range(-5..=5)).collect();
            let lambda = Weight::from_ints(&coords);
            let sample_word = |rng: &mut ChaCha8Rng| {
                let len = rng.gen_range(0..=5);
                WeylWord::new((0..len).map(|_| rng.gen_range(1..=rank)).collect())
            };
            let u = sample_word(&mut rng);
            let v = sample_word(&mut rng);
            let mut letters = u.letters().to_vec();
            letters.extend_from_slice(v.letters());
            let uv = WeylWord::new(letters);
            let composed = rs
                .shifted_action(&u, &rs.shifted_action(&v, &lambda).unwrap())
                .unwrap();
            assert_eq!(rs.shifted_action(&uv, &lambda).unwrap(), composed);
        }
    }
}

#[test]
fn dimension_is_invariant_under_diagram_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let a3 = system(Family::A, 3);
    for _ in 0..30 {
        let coords: Vec<i64> = (0..3).map(|_| rng.gen_range(0..=4)).collect();
        let reversed: Vec<i64> = coords.iter().rev().copied().collect();
        assert_eq!(
            a3.weyl_dimension(&Weight::from_ints(&coords)).unwrap(),
            a3.weyl_dimension(&Weight::from_ints(&reversed)).unwrap()
        );
    }
    // D4 is symmetric under swapping the two fork nodes 3 and 4.
    let d4 = system(Family::D, 4);
    for _ in 0..30 {
        let coords: Vec<i64> = (0..4).map(|_| rng.gen_range(0..=3)).collect();
        let swapped = vec![coords[0], coords[1], coords[3], coords[2]];
        assert_eq!(
            d4.weyl_dimension(&Weight::from_ints(&coords)).unwrap(),
            d4.weyl_dimension(&Weight::from_ints(&swapped)).unwrap()
        );
    }
}

#[test]
fn dimension_is_invariant_under_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for (family, rank) in [(Family::A, 3), (Family::D, 4)] {
        let rs = system(family, rank);
        for _ in 0..25 {
            let coords: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=3)).collect();
            let lambda = Weight::from_ints(&coords);
            let dual = plain_dominant(&rs, &-&lambda);
            assert_eq!(
                rs.weyl_dimension(&lambda).unwrap(),
                rs.weyl_dimension(&dual).unwrap()
            );
        }
    }
}

#[test]
fn freudenthal_oracle_agrees_on_random_dominant_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for (family, rank) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::G, 2)] {
        let rs = system(family, rank);
        for _ in 0..8 {
            let coords: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
            let lambda = Weight::from_ints(&coords);
            assert_eq!(
                freudenthal_dimension(&rs, &lambda),
                rs.weyl_dimension(&lambda).unwrap(),
                "dimension of {lambda} in {family}{rank}"
            );
        }
    }
}

#[test]
fn convolution_agrees_with_brute_force_on_random_configurations() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let types = [
        LieType::new(Family::A, 3).unwrap(),
        LieType::new(Family::B, 3).unwrap(),
        LieType::new(Family::C, 3).unwrap(),
        LieType::new(Family::D, 4).unwrap(),
    ];
    let mut accepted = 0;
    while accepted < 20 {
        let t = types[rng.gen_range(0..types.len())];
        let mask = rng.gen_range(1u32..(1 << t.rank()));
        let painted: Vec<usize> = (1..=t.rank()).filter(|&n| mask >> (n - 1) & 1 == 1).collect();
        let x = build_flag(t, &painted);
        if x.dim_c() > 10 {
            continue;
        }
        let l = LineBundleClass::new(
            x.spinc_parities()
                .iter()
                .map(|&p| Int::from(i64::from(p) + 2 * rng.gen_range(-2i64..=2)))
                .collect(),
        );
        let omega = KahlerClass::new(
            (0..painted.len())
                .map(|_| rat(rng.gen_range(1..=5)) / rat(rng.gen_range(1..=3)))
                .collect(),
            rng.gen_bool(0.5),
        );
        let spectrum = x.weitzenboeck_spectrum(&l, &omega).unwrap();
        let oracle = brute_force_weitzenboeck(&x, &l, &omega);
        assert_eq!(spectrum.entries().unwrap(), &oracle[..]);
        accepted += 1;
    }
}

#[test]
fn einstein_class_round_trips_random_curvature_targets() {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    for _ in 0..30 {
        let types = admissible_types_up_to(4);
        let t = types[rng.gen_range(0..types.len())];
        let mask = rng.gen_range(1u32..(1 << t.rank()));
        let painted: Vec<usize> = (1..=t.rank()).filter(|&n| mask >> (n - 1) & 1 == 1).collect();
        let x = build_flag(t, &painted);
        let value = rat(rng.gen_range(1..=40)) / rat(rng.gen_range(1..=6));
        let target = if rng.gen_bool(0.5) {
            PiScalar::rational(value)
        } else {
            PiScalar::pi_times(value)
        };
        let omega = x.ke_class(Some(&target)).unwrap();
        assert!(x.is_kahler(&omega));
        assert_eq!(x.scalar_curvature(&omega).unwrap(), target);
    }
}

#[test]
fn theta_spectrum_is_symmetric_under_negation() {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    for _ in 0..25 {
        let types = admissible_types_up_to(4);
        let t = types[rng.gen_range(0..types.len())];
        let mask = rng.gen_range(1u32..(1 << t.rank()));
        let painted: Vec<usize> = (1..=t.rank()).filter(|&n| mask >> (n - 1) & 1 == 1).collect();
        let x = build_flag(t, &painted);
        let pi_units = rng.gen_bool(0.5);
        let theta = KahlerClass::new(
            (0..painted.len())
                .map(|_| rat(rng.gen_range(-4..=4)) / rat(rng.gen_range(1..=3)))
                .collect(),
            pi_units,
        );
        let omega = KahlerClass::new(
            (0..painted.len())
                .map(|_| rat(rng.gen_range(1..=5)) / rat(rng.gen_range(1..=3)))
                .collect(),
            pi_units,
        );
        let spectrum = x.theta_spectrum(&theta, &omega).unwrap();
        let entries = spectrum.entries().unwrap();
        let table: BTreeMap<&Rat, &Nat> = entries
            .iter()
            .map(|(v, m)| (v.coefficient(), m))
            .collect();
        for (v, mult) in entries {
            let negated = -v.coefficient();
            assert_eq!(table.get(&negated), Some(&mult), "mirror of {v}");
        }
        let total: Nat = entries.iter().fold(Nat::zero(), |acc, (_, m)| acc + m);
        assert_eq!(&total, spectrum.total());
    }
}

#[test]
fn parity_flips_break_the_spinc_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    for _ in 0..25 {
        let types = admissible_types_up_to(4);
        let t = types[rng.gen_range(0..types.len())];
        let mask = rng.gen_range(1u32..(1 << t.rank()));
        let painted: Vec<usize> = (1..=t.rank()).filter(|&n| mask >> (n - 1) & 1 == 1).collect();
        let x = build_flag(t, &painted);
        let base: Vec<Int> = x
            .spinc_parities()
            .iter()
            .map(|&p| Int::from(i64::from(p) + 2 * rng.gen_range(-3i64..=3)))
            .collect();
        assert!(x.is_spinc(&LineBundleClass::new(base.clone())).unwrap());
        let flip = rng.gen_range(0..base.len());
        let mut broken = base.clone();
        broken[flip] += 1;
        assert!(!x.is_spinc(&LineBundleClass::new(broken)).unwrap());
        let mut short = base;
        short.pop();
        if !short.is_empty() {
            assert!(x.is_spinc(&LineBundleClass::new(short)).is_err());
        }
    }
}

#[test]
fn harmonic_index_sign_tracks_the_concentration_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let mut harmonic_seen = 0;
    for _ in 0..60 {
        let types = admissible_types_up_to(4);
        let t = types[rng.gen_range(0..types.len())];
        let mask = rng.gen_range(1u32..(1 << t.rank()));
        let painted: Vec<usize> = (1..=t.rank()).filter(|&n| mask >> (n - 1) & 1 == 1).collect();
        let x = build_flag(t, &painted);
        let l = LineBundleClass::new(
            x.spinc_parities()
                .iter()
                .map(|&p| Int::from(i64::from(p) + 2 * rng.gen_range(-4i64..=4)))
                .collect(),
        );
        let report = x.harmonic_spinors(&l).unwrap();
        assert!(report.spinc_ok);
        if let HarmonicOutcome::Harmonic {
            kernel_dimension,
            concentration_degree,
            index,
        } = report.outcome
        {
            let kernel = Int::from(kernel_dimension);
            let expected = if concentration_degree % 2 == 0 {
                kernel
            } else {
                -kernel
            };
            assert_eq!(index, expected);
            harmonic_seen += 1;
        }
    }
    assert!(harmonic_seen > 0, "sampling never produced harmonic spinors");
}
