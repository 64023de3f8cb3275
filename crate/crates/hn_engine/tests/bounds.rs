use hn_engine::{
    best_xiao_bound, check_log_concave_lemma, full_seq_s, multisets, seq_m_for_1a, seq_m_for_1b,
    seq_m_for_2, xiao_bound_1a, xiao_bound_1b, xiao_bound_2, xiao_bound_general, ExtraClassChoice,
    HNProfile, IntersectionModel,
};
use num::{BigInt, BigRational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn arb_extra() -> impl Strategy<Value = ExtraClassChoice> {
    prop_oneof![
        Just(ExtraClassChoice::ReuseLast),
        Just(ExtraClassChoice::PullbackL),
        Just(ExtraClassChoice::MEll),
    ]
}

prop_compose! {
    fn arb_profile(max_l: usize)
        (l in 1..=max_l)
        (jumps in prop::collection::vec(1u64..4u64, l),
         start_num in -20i64..=20i64,
         start_den in 1i64..=4i64,
         deltas in prop::collection::vec((1i64..=12i64, 1i64..=4i64), l - 1))
        -> HNProfile
    {
        let mut steps = Vec::with_capacity(jumps.len());
        let mut rank = 0u64;
        let mut slope = ratio(start_num, start_den);
        for (i, jump) in jumps.iter().enumerate() {
            rank += jump;
            if i > 0 {
                let (dn, dd) = deltas[i - 1];
                slope -= ratio(dn, dd);
            }
            steps.push((rank, slope.clone()));
        }
        HNProfile::new(steps).unwrap()
    }
}

fn arb_model(n: u32, classes: u32) -> impl Strategy<Value = IntersectionModel> {
    let keys = multisets(n, classes);
    let count = keys.len();
    prop::collection::vec((0i64..=18i64, 1i64..=3i64), count).prop_map(move |vals| {
        let entries = keys
            .iter()
            .cloned()
            .zip(vals.into_iter().map(|(a, b)| ratio(a, b)));
        IntersectionModel::new(n, classes, entries).unwrap()
    })
}

type Setup = (HNProfile, IntersectionModel, ExtraClassChoice);

fn arb_setup(max_l: usize, max_n: u32) -> impl Strategy<Value = Setup> {
    (arb_profile(max_l), 1u32..=max_n, arb_extra()).prop_flat_map(|(p, n, e)| {
        let classes = p.len() as u32 + 1;
        arb_model(n, classes).prop_map(move |m| (p.clone(), m, e))
    })
}

fn arb_subseq(l: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<bool>(), l as usize).prop_map(move |mask| {
        let mut s: Vec<u32> = (1..=l).filter(|&i| mask[i as usize - 1]).collect();
        if s.is_empty() {
            s.push(1);
        }
        s.push(l + 1);
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    /// The closed forms are the general sum at their defining schedules,
    /// exactly, for any table.
    #[test]
    fn closed_forms_are_schedule_specializations(
        (profile, model, extra) in arb_setup(4, 3),
        mask in prop::collection::vec(any::<bool>(), 4),
    ) {
        let l = profile.len() as u32;
        let n = model.n();

        let a = xiao_bound_1a(&profile, &model, extra).unwrap();
        let via_general = xiao_bound_general(
            &profile, &model, extra, &full_seq_s(l), &seq_m_for_1a(n, l)).unwrap();
        prop_assert_eq!(&a, &via_general);

        let b = xiao_bound_1b(&profile, &model, extra).unwrap();
        let via_general = xiao_bound_general(
            &profile, &model, extra, &full_seq_s(l), &seq_m_for_1b(n, l)).unwrap();
        prop_assert_eq!(&b, &via_general);

        // skipping no steps is the first bound again
        let two_full = xiao_bound_2(&profile, &model, extra, &full_seq_s(l)).unwrap();
        prop_assert_eq!(&two_full, &a);

        // a random subsequence
        let mut seq_s: Vec<u32> = (1..=l).filter(|&i| mask[i as usize - 1]).collect();
        if seq_s.is_empty() {
            seq_s.push(1);
        }
        seq_s.push(l + 1);
        let q = seq_s.len() as u32 - 1;
        let two = xiao_bound_2(&profile, &model, extra, &seq_s).unwrap();
        let via_general = xiao_bound_general(
            &profile, &model, extra, &seq_s, &seq_m_for_2(n, q)).unwrap();
        prop_assert_eq!(&two, &via_general);

        if n == 1 {
            prop_assert_eq!(&a, &b);
        }
    }

    #[test]
    fn best_dominates_the_closed_forms(
        (profile, model, extra) in arb_setup(3, 2),
    ) {
        let best = best_xiao_bound(&profile, &model, extra, 100_000).unwrap();
        prop_assert!(best.exhaustive);
        prop_assert!(best.value >= xiao_bound_1a(&profile, &model, extra).unwrap());
        prop_assert!(best.value >= xiao_bound_1b(&profile, &model, extra).unwrap());
        // the reported schedule reproduces the reported value
        let replay = xiao_bound_general(
            &profile, &model, extra, &best.seq_s, &best.seq_m).unwrap();
        prop_assert_eq!(replay, best.value);
    }

    #[test]
    fn best_dominates_every_subsequence_bound(
        (profile, model, extra) in arb_setup(3, 2),
        seq_s in arb_subseq(3),
    ) {
        let l = profile.len() as u32;
        let seq_s: Vec<u32> = seq_s
            .iter()
            .copied()
            .filter(|&i| i <= l)
            .chain(std::iter::once(l + 1))
            .collect();
        let seq_s = if seq_s.len() == 1 { vec![1, l + 1] } else { seq_s };
        let best = best_xiao_bound(&profile, &model, extra, 100_000).unwrap();
        prop_assert!(best.value >= xiao_bound_2(&profile, &model, extra, &seq_s).unwrap());
    }

    /// One step, one fiber dimension, nef: searching cannot beat the pair
    /// bound, and the subsequence choice is forced.
    #[test]
    fn single_step_nef_search_collapses(
        rank in 1u64..=6,
        num in 0i64..=12, den in 1i64..=4,
        extra in arb_extra(),
        vals in prop::collection::vec((0i64..=18i64, 1i64..=3i64), 2),
    ) {
        let profile = HNProfile::new(vec![(rank, ratio(num, den))]).unwrap();
        let model = IntersectionModel::new(
            1,
            2,
            vec![(vec![1], ratio(vals[0].0, vals[0].1)), (vec![2], ratio(vals[1].0, vals[1].1))],
        )
        .unwrap();
        let best = best_xiao_bound(&profile, &model, extra, 100_000).unwrap();
        prop_assert_eq!(best.value, xiao_bound_1a(&profile, &model, extra).unwrap());
        prop_assert_eq!(best.seq_s, vec![1, 2]);
    }

    #[test]
    fn degree_and_json_round_trips(profile in arb_profile(5)) {
        // degree recomputed one piece at a time
        let mut expected = ratio(0, 1);
        let mut prev = 0u64;
        for step in profile.steps() {
            expected += ratio((step.rank - prev) as i64, 1) * &step.slope;
            prev = step.rank;
        }
        prop_assert_eq!(profile.pushforward_degree(), expected);

        let text = serde_json::to_string(&profile).unwrap();
        let back: HNProfile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, profile);
    }

    #[test]
    fn model_json_round_trips((_, model, _) in arb_setup(3, 2)) {
        let text = serde_json::to_string(&model).unwrap();
        let back: IntersectionModel = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, model);
    }
}

/// Draws sequences satisfying the gap lemma's hypotheses: random rejection
/// sampling when it lands, arithmetic progressions with step >= 2 as filler.
/// Both conclusions must hold on every accepted draw.
#[test]
fn log_concave_hypotheses_force_the_gaps() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10fc0cae);
    let mut accepted = 0u32;
    let mut from_rejection = 0u32;
    while accepted < 10_000 {
        let len = rng.gen_range(3usize..=7);
        let d: Vec<BigInt> = if accepted % 2 == 0 {
            // free draw, kept only when the hypotheses happen to hold
            let mut d = Vec::with_capacity(len);
            let mut cur = rng.gen_range(2i64..=8);
            d.push(BigInt::from(cur));
            for _ in 1..len {
                cur += rng.gen_range(0i64..=8);
                d.push(BigInt::from(cur));
            }
            d
        } else {
            let a = rng.gen_range(2i64..=9);
            let c = rng.gen_range(2i64..=9);
            (0..len).map(|i| BigInt::from(a + c * i as i64)).collect()
        };

        let report = check_log_concave_lemma(&d).unwrap();
        if !report.hypothesis_ok {
            continue;
        }
        accepted += 1;
        if accepted % 2 == 1 {
            from_rejection += 1;
        }

        let n = d.len() - 1;
        for i in 1..=n {
            assert!(&d[i] - &d[i - 1] >= BigInt::from(2), "gap {} too small in {:?}", i, d);
        }
        assert!(
            d[n - 1] >= &d[0] + BigInt::from(2 * (n as i64 - 1)),
            "aggregate bound fails in {:?}",
            d
        );
        assert!(report.holds);
    }
    // the free draws must contribute, otherwise only progressions were tested
    assert!(from_rejection > 500);
}
