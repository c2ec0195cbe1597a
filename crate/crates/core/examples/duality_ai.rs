//! Type AI: the coideal subalgebra of U_q(sl_3) and B_n(q, q^3) acting on
//! the third tensor power of the natural representation.
use qbrauer::algebra::Letter;
use qbrauer::duality::{b_operator, commutation_check, qbrauer_action, relations_check, DualityType, ParamSet};

fn main() {
    let p = ParamSet::new(DualityType::AI, 3, 3).unwrap();
    let b1 = b_operator(&p, 1).unwrap();
    let e = qbrauer_action(&p, Letter::E).unwrap();
    println!("B_1 (v2 v1 v3) = {}", b1.column(&[2, 1, 3]));
    println!("(v2 v2 v1) e = {}", e.column(&[2, 2, 1]));

    let rel = relations_check(&p).unwrap();
    println!("{} of {} relations hold", rel.iter().filter(|r| r.holds).count(), rel.len());
    let com = commutation_check(&p, true).unwrap();
    for c in &com {
        println!("{} = 0: {}", c.name, c.holds);
    }
}
