//! Brauer diagrams: enumeration, products, lengths and the reduced triple
//! `d = w1 e_(k) wd w2`.
use qbrauer::algebra::diagram_label;
use qbrauer::diagram::{parse_diagram, triple_decompose, BrauerDiagram};

fn main() {
    for n in 1..=6 {
        println!("n = {n}: {} diagrams", BrauerDiagram::enumerate(n, None).len());
    }
    let d = parse_diagram("{1-3, 2-1', 2'-3'}", 3).unwrap();
    let t = triple_decompose(&d);
    println!("{d}: length {}, rank {}, label {}", d.length(), d.rank(), diagram_label(&d));
    println!("  w1 = {}, wd = {}, w2 = {}, k = {}", t.omega1, t.omega_d, t.omega2, t.k);

    let e = BrauerDiagram::e_k(3, 1);
    let (p, loops) = e.concat(&e);
    println!("e * e = {p} with {loops} closed loop(s)");
    println!("flip of {d} is {}", d.flip());
}
