use qbrauer::algebra::{parse_label, parse_word, AlgebraElement, QBrauer};
use qbrauer::canonical::{
    bar_matrix, jmath_symmetry_check, kl_mismatches, positivity_scan, structure_constant, verdict, CanonicalTable,
    Positivity, SecondaryOrder, Variant, ZSubstitution, DEFAULT_MAX_N,
};
use qbrauer::coeff::FieldElem;
use qbrauer::diagram::BrauerDiagram;

fn table(n: usize, v: Variant) -> (QBrauer, CanonicalTable) {
    let a = QBrauer::new(n).unwrap();
    let t = CanonicalTable::build(&a, v, DEFAULT_MAX_N).unwrap();
    (a, t)
}

fn d(label: &str, n: usize) -> BrauerDiagram {
    parse_label(label, n).unwrap().0
}

/// `sum q^e * word`, evaluated by multiplying generators.
fn combo(a: &QBrauer, terms: &[(i32, &str)]) -> AlgebraElement {
    let mut x = AlgebraElement::zero(a.n());
    for (e, w) in terms {
        let y = if w.is_empty() { a.one() } else { a.eval_word(&parse_word(w, a.n()).unwrap()) };
        x.add_scaled(&y, &FieldElem::q_pow(*e));
    }
    x
}

#[test]
fn rank_two() {
    let (a, t) = table(2, Variant::Canonical);
    assert_eq!(t.order.len(), 3);
    assert_eq!(t.element(&d("0", 2)), &a.one());
    assert_eq!(t.element(&d("e", 2)), &combo(&a, &[(0, "e")]));
    assert_eq!(t.element(&d("1", 2)), &combo(&a, &[(0, "H1"), (-1, "")]));
}

#[test]
fn rank_three_matches_the_published_list() {
    let (a, t) = table(3, Variant::Canonical);
    let expect: Vec<(&str, Vec<(i32, &str)>)> = vec![
        ("0", vec![(0, "")]),
        ("1", vec![(0, "H1"), (-1, "")]),
        ("2", vec![(0, "H2"), (-1, "")]),
        ("12", vec![(0, "H1 H2"), (-1, "H1"), (-1, "H2"), (-2, "")]),
        ("21", vec![(0, "H2 H1"), (-1, "H1"), (-1, "H2"), (-2, "")]),
        ("121", vec![(0, "H1 H2 H1"), (-1, "H1 H2"), (-1, "H2 H1"), (-2, "H1"), (-2, "H2"), (-3, "")]),
        ("e", vec![(0, "e")]),
        ("2e", vec![(0, "H2 e"), (-1, "e")]),
        ("e2", vec![(0, "e H2"), (-1, "e")]),
        ("2e2", vec![(0, "H2 e H2"), (-1, "H2 e"), (-1, "e H2"), (-2, "e")]),
        ("12e", vec![(0, "H1 H2 e"), (-1, "H2 e"), (-2, "e")]),
        ("e21", vec![(0, "e H2 H1"), (-1, "e H2"), (-2, "e")]),
        (
            "12e2",
            vec![(0, "H1 H2 e H2"), (-1, "H2 e H2"), (-1, "H1 H2 e"), (-2, "H2 e"), (-2, "e H2"), (-3, "e")],
        ),
        (
            "2e21",
            vec![(0, "H2 e H2 H1"), (-1, "H2 e H2"), (-1, "e H2 H1"), (-2, "H2 e"), (-2, "e H2"), (-3, "e")],
        ),
        (
            "12e21",
            vec![
                (0, "H1 H2 e H2 H1"),
                (-1, "H1 H2 e H2"),
                (-1, "H2 e H2 H1"),
                (-2, "H1 H2 e"),
                (-2, "H2 e H2"),
                (-2, "e H2 H1"),
                (-3, "H2 e"),
                (-3, "e H2"),
                (-4, "e"),
            ],
        ),
    ];
    assert_eq!(t.order.len(), expect.len());
    for (label, terms) in expect {
        assert_eq!(t.element(&d(label, 3)), &combo(&a, &terms), "C_{label}");
    }
}

#[test]
fn rank_three_structure_constants() {
    let (a, t) = table(3, Variant::Canonical);
    let q = FieldElem::q();
    let qd = FieldElem::qdiff();
    let one = FieldElem::one();

    let c = structure_constant(&a, &t, &d("1", 3), &d("2e", 3));
    assert_eq!(c.len(), 2);
    assert_eq!(c[&d("12e", 3)], one);
    assert_eq!(c[&d("e", 3)], one);

    let c = structure_constant(&a, &t, &d("2e", 3), &d("e2", 3));
    assert_eq!(c.len(), 1);
    assert_eq!(c[&d("2e2", 3)], FieldElem::delta());

    let c = structure_constant(&a, &t, &d("e", 3), &d("12e", 3));
    let num = &(&(&q * &q) * &FieldElem::z()) - &FieldElem::monomial(1, -2, -1);
    assert_eq!(c.len(), 1);
    assert_eq!(c[&d("e", 3)], num.checked_div(&qd).unwrap());
}

#[test]
fn bar_matrix_examples() {
    let a = QBrauer::new(4).unwrap();
    let m = bar_matrix(&a, DEFAULT_MAX_N).unwrap();
    for k in 0..=2 {
        let e = BrauerDiagram::e_k(4, k);
        assert_eq!(m[&e], AlgebraElement::basis(e));
    }
    let s1 = d("1", 4);
    let expect = AlgebraElement::basis(s1).sub(&a.one().scale(&FieldElem::qdiff()));
    assert_eq!(m[&s1], expect);
    assert!(bar_matrix(&QBrauer::new(6).unwrap(), DEFAULT_MAX_N).is_err());
}

#[test]
fn invariants_up_to_rank_four() {
    for n in 2..=4 {
        for v in [Variant::Canonical, Variant::Dual] {
            let (a, t) = table(n, v);
            assert!(t.classes_ok(), "n={n} {v:?}");
            for (dd, c) in &t.columns {
                assert_eq!(&a.bar(c), c, "n={n} {v:?} {dd}");
                assert!(c.terms().all(|(_, p)| p.is_z_free()));
            }
            assert!(jmath_symmetry_check(&t).failures.is_empty());
            let again = CanonicalTable::build_with_order(&a, v, DEFAULT_MAX_N, SecondaryOrder::ReverseLex).unwrap();
            assert_eq!(again.columns, t.columns);
        }
        assert!(kl_mismatches(&table(n, Variant::Canonical).1).is_empty(), "n={n}");
    }
}

#[test]
fn dual_rank_two() {
    let (a, t) = table(2, Variant::Dual);
    // bar(H_1 - q) = H_1 - (q - q^-1) - q^-1
    let expect = combo(&a, &[(0, "H1")]).sub(&a.one().scale(&FieldElem::q()));
    assert_eq!(t.element(&d("1", 2)), &expect);
    assert_eq!(t.element(&d("e", 2)), &combo(&a, &[(0, "e")]));
}

#[test]
fn jmath_pairs() {
    let (_, t) = table(3, Variant::Canonical);
    assert_eq!(t.element(&d("12e", 3)).jmath(), *t.element(&d("e21", 3)));
    assert_eq!(t.element(&d("2e2", 3)).jmath(), *t.element(&d("2e2", 3)));
}

#[test]
fn generic_positivity_decisions() {
    let q = FieldElem::q();
    let qd = FieldElem::qdiff();
    let num = &(&(&q * &q) * &FieldElem::z()) - &FieldElem::monomial(1, -2, -1);
    let g = ZSubstitution::Generic;
    assert_eq!(verdict(&num.checked_div(&qd).unwrap(), g), Positivity::Positive);
    assert_eq!(verdict(&FieldElem::delta(), g), Positivity::Positive);
    assert_eq!(verdict(&FieldElem::delta().pow(2).unwrap(), g), Positivity::Positive);
    assert_eq!(verdict(&FieldElem::monomial(-1, 1, 0), g), Positivity::Undetermined);
    assert_eq!(verdict(&FieldElem::monomial(-1, 1, 0), ZSubstitution::Power(2)), Positivity::NotPositive);
    assert_eq!(verdict(&FieldElem::delta(), ZSubstitution::Power(3)), Positivity::Positive);
}

#[test]
fn small_ranks_are_positive() {
    for n in 2..=3 {
        let (a, t) = table(n, Variant::Canonical);
        let g = positivity_scan(&a, &t, ZSubstitution::Generic);
        assert!(g.all_positive(), "n={n}: {:?}", g.exceptions.first());
        for m in 1..=4 {
            let r = positivity_scan(&a, &t, ZSubstitution::Power(m));
            assert!(r.all_positive(), "n={n} m={m}: {:?}", r.exceptions.first());
        }
    }
}
