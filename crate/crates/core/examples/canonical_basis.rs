//! The canonical basis of B_3(q, z), a few structure constants and the
//! positivity scan.
use qbrauer::algebra::{parse_label, QBrauer};
use qbrauer::canonical::{positivity_scan, structure_constant, CanonicalTable, Variant, ZSubstitution, DEFAULT_MAX_N};

fn main() {
    let a = QBrauer::new(3).unwrap();
    let t = CanonicalTable::build(&a, Variant::Canonical, DEFAULT_MAX_N).unwrap();
    print!("{}", t.render());

    let d = |s: &str| parse_label(s, 3).unwrap().0;
    for (l, r) in [("1", "2e"), ("2e", "e2"), ("e", "12e")] {
        let c = structure_constant(&a, &t, &d(l), &d(r));
        let terms: Vec<String> = c.iter().map(|(k, v)| format!("({v}) C_{}", qbrauer::algebra::diagram_label(k))).collect();
        println!("C_{l} C_{r} = {}", terms.join(" + "));
    }

    let dual = CanonicalTable::build(&a, Variant::Dual, DEFAULT_MAX_N).unwrap();
    println!("dual: C*_12e = {}", dual.element(&d("12e")));

    let r = positivity_scan(&a, &t, ZSubstitution::Generic);
    println!("{} of {} structure constants positive", r.positive, r.constants_checked);
}
