use crankmex::bijections::franklin;
use crankmex::partition::{
    crank_m, distinct_count, enumerate_partitions, mex_count, CrankTable, Parity, Partition,
    Statistic, A064428_PREFIX,
};
use proptest::prelude::*;

fn any_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..=10).prop_map(Partition::from_unsorted)
}

fn distinct_partition() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1u32..=15, 0..=6).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn parts_are_weakly_decreasing(p in any_partition()) {
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(p.parts().iter().all(|&x| x >= 1));
        prop_assert_eq!(p.weight(), p.parts().iter().map(|&x| u64::from(x)).sum::<u64>());
    }

    #[test]
    fn text_roundtrip(p in any_partition()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn conjugate_is_an_involution(p in any_partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn frobenius_roundtrip_and_weight(p in any_partition()) {
        let f = p.frobenius();
        prop_assert!(f.top().windows(2).all(|w| w[0] > w[1]));
        prop_assert!(f.bottom().windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(f.top().len(), f.bottom().len());
        let sum = |r: &[u32]| r.iter().map(|&x| u64::from(x)).sum::<u64>();
        prop_assert_eq!(f.len() as u64 + sum(f.top()) + sum(f.bottom()), p.weight());
        prop_assert_eq!(f.to_partition(), p);
    }

    #[test]
    fn durfee_rectangles_shrink_with_j(p in any_partition(), j in 0u32..6) {
        prop_assert!(p.durfee_rect(j + 1) <= p.durfee_rect(j));
    }

    #[test]
    fn mex_and_crank_bounds(p in any_partition()) {
        let w = p.weight() as i64;
        prop_assert!(i64::from(p.mex()) <= w + 1);
        if !p.is_empty() {
            prop_assert!(p.crank() >= -w && p.crank() <= w);
        }
    }

    #[test]
    fn franklin_is_an_involution(p in distinct_partition()) {
        let step = franklin(&p).unwrap();
        prop_assert_eq!(franklin(&step.output).unwrap().output, p.clone());
        prop_assert_eq!(step.output.weight(), p.weight());
        if step.output != p {
            prop_assert_ne!(step.output.len() % 2, p.len() % 2);
        }
    }
}

#[test]
fn exhaustive_roundtrips_to_weight_18() {
    for n in 0..=18 {
        for p in enumerate_partitions(n) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.frobenius().to_partition(), p);
            for j in 0..6 {
                assert!(p.durfee_rect(j + 1) <= p.durfee_rect(j));
            }
        }
    }
}

#[test]
fn crank_counts_sum_to_partition_numbers() {
    let table = CrankTable::new(30);
    for n in 0..=30u32 {
        let p = enumerate_partitions(n).len() as i64;
        assert_eq!(table.count(n, |_| true), p, "n = {n}");
        for m in -31..=31 {
            assert_eq!(table.m(m, n), table.m(-m, n), "m = {m}, n = {n}");
        }
    }
    assert_eq!((crank_m(-1, 1), crank_m(0, 1), crank_m(1, 1)), (1, -1, 1));
}

#[test]
fn nonnegative_crank_is_odd_mex() {
    let table = CrankTable::new(30);
    for n in 2..=30u32 {
        let m12 = mex_count(1, 2, n, None).unwrap() as i64;
        assert_eq!(table.count(n, |m| m >= 0), m12, "n = {n}");
        assert_eq!(m12 as u64, A064428_PREFIX[n as usize]);
    }
}

#[test]
fn definitional_splits() {
    use Parity::{Even, Odd};
    let m = |a, b, n, p| mex_count(a, b, n, p).unwrap();
    for n in 0..=30 {
        assert_eq!(m(1, 2, n, None), m(1, 4, n, None) + m(3, 4, n, None));
        assert_eq!(
            m(1, 2, n, None),
            m(1, 2, n, Some(Odd)) + m(1, 2, n, Some(Even))
        );
        assert_eq!(
            m(1, 4, n, None),
            m(1, 4, n, Some(Odd)) + m(1, 4, n, Some(Even))
        );
        assert_eq!(
            m(3, 4, n, None),
            m(3, 4, n, Some(Odd)) + m(3, 4, n, Some(Even))
        );
        assert_eq!(
            m(1, 2, n, Some(Odd)),
            m(1, 4, n, Some(Odd)) + m(3, 4, n, Some(Odd))
        );
        assert_eq!(
            m(1, 2, n, Some(Even)),
            m(1, 4, n, Some(Even)) + m(3, 4, n, Some(Even))
        );
        assert_eq!(
            distinct_count(n, None),
            distinct_count(n, Some(Odd)) + distinct_count(n, Some(Even))
        );
    }
}

#[test]
fn named_statistics_parse() {
    let s = Statistic::parse("m_3_4_e", None, None).unwrap();
    assert_eq!(s.to_string(), "m_3_4_e");
    assert_eq!(s.value(15), 24);
    assert!(Statistic::parse("m_1_3", None, None).is_err());
    assert!(Statistic::parse("m_5_4", None, None).is_err());
    assert!(Statistic::parse("bogus", None, None).is_err());
}
