//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use qbrauer::algebra::{brauer_oracle_check, parse_label, parse_word, AlgebraElement, QBrauer};
use qbrauer::canonical::{jmath_symmetry_check, kl_mismatches, structure_constant, CanonicalTable, Variant, DEFAULT_MAX_N};
use qbrauer::coeff::{FieldElem, Rational};
use qbrauer::diagram::{double_factorial_count, BrauerDiagram};
use qbrauer::duality::{
    aii_coproduct_check, centralizer_dims, commutation_check, relations_check, CheckResult, DualityType, ParamSet,
    DEFAULT_MAX_TENSOR_DIM,
};
use qbrauer::symgroup::{s_range, Perm};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn d(label: &str, n: usize) -> BrauerDiagram {
    parse_label(label, n).unwrap().0
}

fn combo(a: &QBrauer, terms: &[(i32, &str)]) -> AlgebraElement {
    let mut x = AlgebraElement::zero(a.n());
    for (e, w) in terms {
        let y = if w.is_empty() { a.one() } else { a.eval_word(&parse_word(w, a.n()).unwrap()) };
        x.add_scaled(&y, &FieldElem::q_pow(*e));
    }
    x
}

fn table(a: &QBrauer) -> CanonicalTable {
    CanonicalTable::build(a, Variant::Canonical, DEFAULT_MAX_N).unwrap()
}

fn rank() -> Outcome {
    let expect = [3u64, 15, 105, 945, 10395];
    for (n, e) in (2..=6).zip(expect) {
        let got = BrauerDiagram::enumerate(n, None).len() as u64;
        ensure(got == e && double_factorial_count(n) == e, || format!("n = {n}: {got} diagrams, expected {e}"))?;
    }
    Ok("3, 15, 105, 945, 10395".into())
}

fn canonical_golden() -> Outcome {
    let a = QBrauer::new(2).unwrap();
    let t = table(&a);
    ensure(t.order.len() == 3, || "rank two size".into())?;
    ensure(t.element(&d("0", 2)) == &a.one(), || "C_0 != 1".into())?;
    ensure(t.element(&d("e", 2)) == &combo(&a, &[(0, "e")]), || "C_e != e".into())?;
    ensure(t.element(&d("1", 2)) == &combo(&a, &[(0, "H1"), (-1, "")]), || "C_1 != H_1 + q^-1".into())?;

    let a = QBrauer::new(3).unwrap();
    let t = table(&a);
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
        ("12e2", vec![(0, "H1 H2 e H2"), (-1, "H2 e H2"), (-1, "H1 H2 e"), (-2, "H2 e"), (-2, "e H2"), (-3, "e")]),
        ("2e21", vec![(0, "H2 e H2 H1"), (-1, "H2 e H2"), (-1, "e H2 H1"), (-2, "H2 e"), (-2, "e H2"), (-3, "e")]),
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
    ensure(t.order.len() == 15, || format!("rank three has {} elements", t.order.len()))?;
    for (label, terms) in &expect {
        let got = t.element(&d(label, 3));
        ensure(got == &combo(&a, terms), || format!("C_{label} = {got}"))?;
    }
    Ok("n = 2: 3 elements, n = 3: 15 elements".into())
}

fn structure_constants() -> Outcome {
    let a = QBrauer::new(3).unwrap();
    let t = table(&a);
    let q = FieldElem::q();
    let qd = FieldElem::qdiff();
    let z = FieldElem::z();
    let zd = &z - &FieldElem::monomial(1, 0, -1);
    let cases = [
        ("1", "2e", vec![("12e", FieldElem::one()), ("e", FieldElem::one())]),
        ("2e", "e2", vec![("2e2", zd.checked_div(&qd).unwrap())]),
        ("e", "12e", vec![("e", (&(&(&q * &q) * &z) - &FieldElem::monomial(1, -2, -1)).checked_div(&qd).unwrap())]),
    ];
    for (l, r, want) in cases {
        let got = structure_constant(&a, &t, &d(l, 3), &d(r, 3));
        let want: std::collections::BTreeMap<_, _> = want.into_iter().map(|(k, c)| (d(k, 3), c)).collect();
        ensure(got == want, || format!("C_{l} C_{r} = {got:?}"))?;
    }
    Ok("3 products".into())
}

fn normalization() -> Outcome {
    let w = |parts: &[&[usize]]| {
        let v: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        Perm::from_word(7, &v)
    };
    let a = QBrauer::new(7).unwrap();
    let got = a.normalize_left(&w(&[&[6], &s_range(1, 5), &s_range(2, 4), &[2]]), 3).map_err(|e| e.to_string())?;
    let q = FieldElem::q();
    let c = FieldElem::qdiff();
    let expect = [
        (w(&[&[6], &s_range(1, 4), &s_range(1, 2)]), &(&q * &q) * &c),
        (w(&[&[6], &s_range(3, 4), &s_range(1, 2)]), &q * &(&c * &c)),
        (w(&[&[6], &s_range(3, 4), &[2]]), &q * &c),
        (w(&[&[6], &[4], &s_range(1, 2)]), &q * &c),
        (w(&[&[6], &[4], &[2]]), q.clone()),
    ];
    ensure(got.len() == 5, || format!("{} terms", got.len()))?;
    for (s, coeff) in expect {
        ensure(got.get(&s) == Some(&coeff), || format!("coefficient of {s}"))?;
    }
    Ok("5 terms".into())
}

fn bar_properties() -> Outcome {
    let mut total = 0;
    for n in 2..=4 {
        let a = QBrauer::new(n).unwrap();
        for dd in a.basis() {
            let x = AlgebraElement::basis(dd);
            ensure(a.bar(&a.bar(&x)) == x, || format!("bar^2 H_{dd} != H_{dd}"))?;
        }
        let t = table(&a);
        ensure(t.classes_ok(), || format!("n = {n}: coefficient outside q^-1 Z[q^-1]"))?;
        for (dd, c) in &t.columns {
            ensure(&a.bar(c) == c, || format!("n = {n}: C_{dd} not bar invariant"))?;
            ensure(c.terms().all(|(_, p)| p.is_z_free()), || format!("n = {n}: C_{dd} involves z"))?;
        }
        let j = jmath_symmetry_check(&t);
        ensure(j.failures.is_empty(), || format!("n = {n}: transpose symmetry fails for {:?}", j.failures))?;
        total += t.order.len();
    }
    Ok(format!("{total} canonical elements for n = 2..4"))
}

fn brauer_oracle() -> Outcome {
    let mut pairs = 0;
    for n in 1..=4 {
        let a = QBrauer::new(n).unwrap();
        for big_n in [1, 2, 3, 5] {
            let r = brauer_oracle_check(&a, big_n, None, 0);
            ensure(r.passed(), || format!("n = {n}, N = {big_n}: {:?}", r.mismatches.first()))?;
            pairs += r.pairs_checked;
        }
    }
    Ok(format!("{pairs} products"))
}

fn kl() -> Outcome {
    for n in 1..=4 {
        let a = QBrauer::new(n).unwrap();
        let bad = kl_mismatches(&table(&a));
        ensure(bad.is_empty(), || format!("n = {n}: {bad:?}"))?;
    }
    Ok("n = 1..4".into())
}

fn failures(rs: &[CheckResult]) -> Vec<&str> {
    rs.iter().filter(|r| !r.holds).map(|r| r.name.as_str()).collect()
}

fn duality(variant: DualityType, cases: &[(usize, usize)]) -> Outcome {
    let mut counts = (0, 0, 0);
    for &(m, n) in cases {
        let p = ParamSet::new(variant, m, n).map_err(|e| e.to_string())?;
        let rel = relations_check(&p).map_err(|e| e.to_string())?;
        ensure(failures(&rel).is_empty(), || format!("m = {m}, n = {n}: {:?}", failures(&rel)))?;
        let com = commutation_check(&p, false).map_err(|e| e.to_string())?;
        ensure(failures(&com).is_empty(), || format!("m = {m}, n = {n}: {:?}", failures(&com)))?;
        let cop = aii_coproduct_check(&p).map_err(|e| e.to_string())?;
        ensure(failures(&cop).is_empty(), || format!("m = {m}: {:?}", failures(&cop)))?;
        counts.0 += rel.len();
        counts.1 += com.len();
        counts.2 += cop.len();
    }
    let mut s = format!("{} relations, {} commutators", counts.0, counts.1);
    if variant == DualityType::AII {
        s.push_str(&format!(", {} coproduct comparisons", counts.2));
    }
    Ok(s)
}

fn centralizers() -> Outcome {
    let q = Rational::new(5.into(), 7.into());
    let dims = |v, m, n| {
        let p = ParamSet::new(v, m, n).unwrap();
        centralizer_dims(&p, q.clone(), 0, false, DEFAULT_MAX_TENSOR_DIM).map_err(|e| e.to_string())
    };
    let mut out = Vec::new();
    for (v, m, n) in [
        (DualityType::AI, 3, 2),
        (DualityType::AI, 3, 3),
        (DualityType::AI, 5, 2),
        (DualityType::AII, 1, 2),
        (DualityType::AII, 2, 2),
    ] {
        let r = dims(v, m, n)?;
        ensure(r.double_centralizer(), || format!("{v:?} m = {m}, n = {n}: {r:?}"))?;
        out.push(format!("{v:?}({m},{n}) {}={}", r.dim_qbrauer_image, r.dim_commutant_of_uq));
    }
    let r = dims(DualityType::AI, 2, 2)?;
    ensure(r.dim_commutant_of_uq > r.dim_qbrauer_image, || format!("AI m = 2, n = 2: {r:?}"))?;
    out.push(format!("AI(2,2) {}<{}", r.dim_qbrauer_image, r.dim_commutant_of_uq));
    Ok(out.join(", "))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "diagram counts", Duration::from_secs(10), rank),
        (2, "canonical basis golden", Duration::from_secs(30), canonical_golden),
        (3, "structure constants", Duration::from_secs(10), structure_constants),
        (4, "normalization vector", Duration::from_secs(5), normalization),
        (5, "bar and canonical properties", Duration::from_secs(600), bar_properties),
        (6, "Brauer oracle", Duration::from_secs(600), brauer_oracle),
        (7, "Kazhdan-Lusztig cross-check", Duration::from_secs(600), kl),
        (8, "duality AI", Duration::from_secs(900), || {
            duality(DualityType::AI, &[(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
        }),
        (9, "duality AII", Duration::from_secs(900), || {
            let s = duality(DualityType::AII, &[(1, 2), (1, 3), (2, 2)])?;
            let p = ParamSet::new(DualityType::AII, 3, 2).unwrap();
            let cop = aii_coproduct_check(&p).map_err(|e| e.to_string())?;
            ensure(failures(&cop).is_empty(), || format!("m = 3: {:?}", failures(&cop)))?;
            Ok(format!("{s}, plus {} at m = 3", cop.len()))
        }),
        (10, "double centralizer", Duration::from_secs(600), centralizers),
    ];
    let mut failed = 0;
    for (i, name, limit, f) in criteria {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        let res = match res {
            Ok(s) if t > limit => Err(format!("{s}; took {t:.1?}, limit {limit:?}")),
            r => r,
        };
        match res {
            Ok(s) => println!("criterion {i:>2} PASS  {name}: {s} ({t:.2?})"),
            Err(e) => {
                failed += 1;
                println!("criterion {i:>2} FAIL  {name}: {e} ({t:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
