//! Products in the standard basis of B_n(q, z), the defining relations and
//! the classical limit.
use qbrauer::algebra::{brauer_oracle_check, check_defining_relations, parse_word, QBrauer};

fn main() {
    let a = QBrauer::new(4).unwrap();
    let x = a.eval_word(&parse_word("H1*H2*e", 4).unwrap());
    let y = a.eval_word(&parse_word("e*H2^-1*H3", 4).unwrap());
    println!("x = {x}");
    println!("y = {y}");
    println!("x y = {}", a.multiply(&x, &y));
    println!("bar(x) = {}", a.bar(&x));
    println!("e_(2) = {}", a.e_k_element(2).unwrap());

    let rel = check_defining_relations(&a);
    println!("{} of {} defining relations hold", rel.iter().filter(|r| r.holds).count(), rel.len());
    let r = brauer_oracle_check(&a, 3, Some(200), 1);
    println!("z = q^3, q -> 1: {} products, {} mismatches", r.pairs_checked, r.mismatches.len());
}
