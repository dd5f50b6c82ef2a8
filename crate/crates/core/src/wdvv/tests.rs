use super::synthetic::*;
use super::*;
use crate::invariants::two_point_disconnected_classes;

fn seeded(order: u32) -> ThreePtTable {
    seed_table(&synthetic_known().unwrap(), order).unwrap()
}

fn sectors(t: &Triple, b: &Sym3Basis) -> Vec<String> {
    let mut v: Vec<String> = t.iter().map(|&i| b.sector(i).to_string()).collect();
    v.sort();
    v
}

#[test]
fn basis_is_grouped_by_age() {
    let b = Sym3Basis::new();
    let ages: Vec<u32> = (0..10).map(|i| b.age(i)).collect();
    assert_eq!(ages, vec![0, 0, 0, 0, 1, 1, 1, 1, 2, 2]);
    assert_eq!(b.class(B2).to_string(), "2(E1),1(1)");
    assert_eq!(Sym3Basis::index("c1"), Some(C1));
}

#[test]
fn zero_stamping_matches_five_families() {
    let b = Sym3Basis::new();
    let families: Vec<Vec<&str>> = vec![
        vec!["(1,1,1)", "(1,1,1)", "(1,1,1)"],
        vec!["(1,1,1)", "(2,1)", "(2,1)"],
        vec!["(1,1,1)", "(3)", "(3)"],
        vec!["(2,1)", "(2,1)", "(3)"],
        vec!["(3)", "(3)", "(3)"],
    ];
    let t = seeded(2);
    assert_eq!(all_triples().len(), 220);
    let mut admissible = 0;
    for tr in all_triples() {
        let s = sectors(&tr, &b);
        let expected = families.iter().any(|f| {
            let mut f: Vec<String> = f.iter().map(|x| x.to_string()).collect();
            f.sort();
            f == s
        });
        assert_eq!(t.status(&tr) != EntryStatus::StructurallyZero, expected, "{}", triple_name(&tr));
        if expected {
            admissible += 1;
        }
    }
    assert_eq!(admissible, 96);
    assert_eq!(t.status(&triple(B1, C0, A2)), EntryStatus::StructurallyZero);
}

#[test]
fn fixture_is_polynomial_below_exact_order() {
    let t = synthetic_complete(EXACT_ORDER + 3).unwrap();
    for (_, _, v) in t.entries() {
        assert!(v.unwrap().terms().all(|(e, _)| e[0] < EXACT_ORDER));
    }
}

#[test]
fn synthetic_table_satisfies_every_relation() {
    let t = synthetic_complete(4).unwrap();
    let rep = verify_all_relations(&t).unwrap();
    assert!(rep.passed(), "{:?}", &rep.violations[..rep.violations.len().min(5)]);
    assert_eq!(rep.s_order, 4);
    assert!(rep.relations_checked > 715);
}

#[test]
fn perturbed_entry_breaks_associativity() {
    let mut t = synthetic_complete(4).unwrap();
    let tr = triple(A2, A2, A3);
    let v = t.value(&tr).unwrap().add(&TruncatedSeries::one(VarSet::S(1), vec![4])).unwrap();
    t.set(tr, v, EntryStatus::KnownInput).unwrap();
    assert!(!verify_all_relations(&t).unwrap().violations.is_empty());
}

#[test]
fn degree_zero_only_verification() {
    let t = synthetic_complete(4).unwrap().truncated(0).unwrap();
    let rep = verify_all_relations(&t).unwrap();
    assert_eq!(rep.s_order, 0);
    assert!(rep.passed());
}

#[test]
fn solve_reproduces_withheld_entries() {
    let t = seeded(4);
    assert_eq!(t.unknown().len(), 96 - t.entries().filter(|(tr, s, _)| *s == EntryStatus::KnownInput && is_step_one(tr)).count());
    let solved = solve_procedure(&t).unwrap();
    let full = synthetic_complete(4).unwrap();
    for tr in all_triples() {
        assert_eq!(solved.value(&tr), full.value(&tr), "{}", triple_name(&tr));
    }
    assert_eq!(solved.status(&triple(C1, C1, C1)), EntryStatus::Derived);
    assert!(verify_all_relations(&solved).unwrap().passed());
}

#[test]
fn solve_is_order_independent() {
    let t = seeded(3);
    let (a, ra) = solve_with_order(&t, SolveOrder::Canonical).unwrap();
    let (b, rb) = solve_with_order(&t, SolveOrder::Reversed).unwrap();
    for tr in all_triples() {
        assert_eq!(a.value(&tr), b.value(&tr));
    }
    let count = |r: &SolveReport| r.steps.iter().map(|s| s.solved.len()).sum::<usize>();
    assert_eq!(count(&ra), count(&rb));
    assert_eq!(count(&ra), 4 + 18 + 9 + 7);
}

#[test]
fn withheld_step_three_input_is_out_of_order() {
    let t = seed_table(&out_of_order_fixture().unwrap(), 2).unwrap();
    for order in [SolveOrder::Canonical, SolveOrder::Reversed] {
        match solve_with_order(&t, order) {
            Err(Error::OutOfOrder { step, entry }) => {
                assert_eq!(step, "3");
                assert_eq!(entry, "<a1,a2,a2>");
            }
            other => panic!("expected out-of-order, got {other:?}"),
        }
    }
}

#[test]
fn singular_pivot_is_reported() {
    let t = seed_table(&pivot_failure_fixture().unwrap(), 2).unwrap();
    match solve_procedure(&t) {
        Err(Error::PivotFailure { step, claim }) => {
            assert_eq!(step, "3");
            assert!(claim.starts_with("<a2^v,a1,a1>"), "{claim}");
        }
        other => panic!("expected pivot failure, got {other:?}"),
    }
}

#[test]
fn relations_swap_channels() {
    let ctx = seeded(1).context().clone();
    let r = wdvv_relation(&ctx, [A2, B1, C0, A3]);
    assert_eq!(r.swapped(), wdvv_relation(&ctx, [A2, C0, B1, A3]));
}

#[test]
fn step_three_relations_have_two_unknown_terms() {
    let t = seeded(2);
    for (i, j) in [(A2, A2), (A2, A3), (A3, A3)] {
        let r = wdvv_relation(t.context(), [i, j, A1, A1]);
        assert_eq!(r.unknown_bearing_terms(&t), 2);
    }
}

#[test]
fn pivot_classes_survive_rescaling() {
    let t = synthetic_complete(3).unwrap();
    let base = classify_pivots(&t).unwrap();
    let b = Sym3Basis::new();
    let factors: BTreeMap<Partition, EqScalar> = [
        (b.sector(A0), EqScalar::frac(-3, 7)),
        (b.sector(B0), EqScalar::from_int(5)),
        (b.sector(C0), EqScalar::linear(1, 2)),
    ]
    .into_iter()
    .collect();
    let scaled = t.with_context(t.context().rescaled(&factors).unwrap()).unwrap();
    assert_eq!(classify_pivots(&scaled).unwrap(), base);
    let classes: Vec<PivotClass> = base.iter().map(|(_, c)| *c).collect();
    use PivotClass::*;
    assert_eq!(classes, vec![Zero, Invertible, Invertible, Zero, Invertible, Invertible]);
}

#[test]
fn missing_degree_zero_is_listed() {
    let data = KnownData {
        positive_degree: PositiveDegree::Geometric,
        ..Default::default()
    };
    match seed_table(&data, 2) {
        Err(Error::MissingDegreeZeroInput(names)) => {
            assert_eq!(names.len(), 96 - 4 - 12 - 6 - 12 - 4);
            assert!(names.contains(&"<a1,a1,a2>".to_string()));
        }
        other => panic!("expected missing input, got {other:?}"),
    }
}

#[test]
fn geometric_tail_uses_divisor_rules() {
    let b = Sym3Basis::new();
    let entries = all_triples()
        .into_iter()
        .filter(is_step_one)
        .map(|t| EntryData {
            triple: t.map(|i| Sym3Basis::name(i).to_string()),
            series: Vec::new(),
        })
        .collect();
    let data = KnownData {
        entries,
        positive_degree: PositiveDegree::Geometric,
        ..Default::default()
    };
    let t = seed_table(&data, 3).unwrap();
    let x = OrbClass::basis(b.class(B3).clone());
    for d in 1..=3u32 {
        let beta = CurveClass::new(vec![d as i64]);
        let two = two_point_disconnected_classes(&x, &x, 0, &beta, 1).unwrap();
        let want = two.scale(&Rational::from_integer((-2 * d as i64).into()));
        assert_eq!(t.get(B3, B3, A1).unwrap().coefficient(&[d]).unwrap(), want);
        let shifted = two_point_disconnected_classes(&x, &x, 1, &beta, 1).unwrap();
        assert_eq!(t.get(B3, B3, B0).unwrap().coefficient(&[d]).unwrap(), shifted);
        assert!(t.get(B3, B3, A0).unwrap().is_zero());
    }
    assert!(!t.get(B3, B3, A1).unwrap().is_zero());
}

#[test]
fn known_json_round_trips_through_serde() {
    let data = synthetic_known().unwrap();
    assert_eq!(KnownData::from_json(&data.to_json()).unwrap(), data);
    assert!(data.to_json().contains("\"positive_degree\": \"input\""));
}
