use proptest::prelude::*;

use symgw::argeom::CurveClass;
use symgw::exactalg::poly::{Monomial, Poly};
use symgw::exactalg::{rat, split_off_t_sum, EqScalar, TSumSplit, TruncatedSeries, VarSet};
use symgw::hurwitz::{brute_force_hurwitz, gjv_hurwitz, HurwitzQuery};
use symgw::invariants::{two_point_corollary, two_point_disconnected, two_point_theorem, InvariantQuery};
use symgw::partitions::{CohLabel, Partition, WeightedPartition};

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..4)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(i, j, c)| (Monomial::new(i, j), rat(c, 1)))))
}

fn scalar() -> impl Strategy<Value = EqScalar> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| EqScalar::ratio(n, d).ok())
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max, 1..4).prop_filter_map("size bound", move |v| {
        (v.iter().sum::<u32>() <= max).then(|| Partition::new(v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_form_a_field(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), x in -6i64..7, y in -6i64..7) {
        let (x, y) = (rat(x, 1), rat(y, 1));
        if let (Some(va), Some(vb), Some(vab)) = (a.eval(&x, &y), b.eval(&x, &y), (&a * &b).eval(&x, &y)) {
            prop_assert_eq!(vab, va * vb);
        }
    }

    #[test]
    fn unit_series_invert(c0 in 1i64..5, tail in prop::collection::vec(-3i64..4, 0..5), order in 0u32..6) {
        let mut terms = vec![(0, EqScalar::from_int(c0))];
        terms.extend(tail.iter().enumerate().map(|(k, &c)| (k as u32 + 1, EqScalar::from_int(c))));
        let terms: Vec<_> = terms.into_iter().filter(|(k, _)| *k <= order).collect();
        let s = TruncatedSeries::in_t(order, terms).unwrap();
        let prod = s.mul(&s.invert().unwrap()).unwrap();
        prop_assert_eq!(prod, TruncatedSeries::one(VarSet::T, vec![order]));
    }

    #[test]
    fn t_sum_split_reassembles(p in poly(), k in 0u32..3) {
        prop_assume!(!p.is_zero());
        let q = &Poly::linear(1, 1).pow(k) * &p;
        match split_off_t_sum(&EqScalar::from_poly(q.clone())).unwrap() {
            TSumSplit::Finite { multiplicity, cofactor } => {
                prop_assert!(multiplicity >= k);
                prop_assert!(!cofactor.divisible_by_t_sum());
                prop_assert_eq!(&Poly::linear(1, 1).pow(multiplicity) * &cofactor, q);
            }
            TSumSplit::Infinite => prop_assert!(false, "nonzero input"),
        }
    }

    #[test]
    fn closed_form_matches_convolution(lambda in partition(5), g in 0u32..3) {
        let n = lambda.size();
        let q = HurwitzQuery::new(lambda.clone(), Partition::full_cycle(n), g as i64).unwrap();
        prop_assert_eq!(gjv_hurwitz(&lambda, g), brute_force_hurwitz(&q).unwrap());
    }

    #[test]
    fn theorem_scales_in_degree_and_swaps(
        p1 in partition(3), p2 in partition(3), a in 0u32..4, d in 1u32..4, r in 1u32..4, i in 1u32..4, span in 0u32..3,
        picks in prop::collection::vec(any::<bool>(), 6),
    ) {
        prop_assume!(p1.size() == p2.size() && i <= r);
        let j = (i + span).min(r);
        let label = |k: usize| CohLabel::E(if picks[k % picks.len()] { i } else { j });
        let weigh = |p: &Partition, off: usize| {
            WeightedPartition::new(p.parts().iter().enumerate().map(|(k, &x)| (x, label(k + off))).collect()).unwrap()
        };
        let (m1, m2) = (weigh(&p1, 0), weigh(&p2, 3));
        let n = p1.size();
        let q = InvariantQuery::new(n, r, m1.clone(), m2.clone(), a, CurveClass::chain(r, d as i64, i, j)).unwrap();
        let q1 = InvariantQuery::new(n, r, m1, m2, a, CurveClass::chain(r, 1, i, j)).unwrap();
        let v = two_point_theorem(&q).unwrap();
        let scale = if a >= 1 { rat((d as i64).pow(a - 1), 1) } else { rat(1, d as i64) };
        prop_assert_eq!(&v, &two_point_theorem(&q1).unwrap().scale(&scale));
        prop_assert_eq!(&v, &two_point_theorem(&q.swapped()).unwrap());
    }

    #[test]
    fn one_part_disconnected_is_connected(n in 1u32..5, a in 0u32..3, d in 1u32..3, k1 in 1u32..3, k2 in 1u32..3) {
        let w = |k: u32| WeightedPartition::new(vec![(n, CohLabel::E(k))]).unwrap();
        let beta = CurveClass::chain(2, d as i64, 1, 2);
        let q = InvariantQuery::new(n, 2, w(k1), w(k2), a, beta.clone()).unwrap();
        prop_assert_eq!(two_point_disconnected(&w(k1), &w(k2), a, &beta, 2).unwrap(), two_point_corollary(&q).unwrap());
    }
}
