//! Type AII: U^i(sp_4) and B_n(-q^-1, q^4), with a non-default parameter.
use std::collections::BTreeMap;

use qbrauer::algebra::Letter;
use qbrauer::coeff::parse;
use qbrauer::duality::{aii_coproduct_check, b_operator, commutation_check, qbrauer_action, DualityType, ParamSet};

fn main() {
    let params: BTreeMap<_, _> = [(2, parse("q^2 - 3").unwrap())].into_iter().collect();
    let p = ParamSet::with_parameters(DualityType::AII, 2, 2, params).unwrap();
    let b2 = b_operator(&p, 2).unwrap();
    for w in [[4u8, 3], [1, 2], [3, 4], [2, 1]] {
        println!("B_2 (v{} v{}) = {}", w[0], w[1], b2.column(&w));
    }
    let e = qbrauer_action(&p, Letter::E).unwrap();
    println!("(v3 v4) e = {}", e.column(&[3, 4]));
    for c in aii_coproduct_check(&p).unwrap() {
        println!("{}: {}", c.name, c.holds);
    }
    let ok = commutation_check(&p, false).unwrap().iter().all(|c| c.holds);
    println!("all commutators vanish: {ok}");
}
