//! Arithmetic in Q(q, z): parsing, the bar map and the two specializations
//! used by the dualities.
use qbrauer::coeff::{parse, rat, FieldElem};

fn main() {
    let x = parse("(q^2*z - q^-2*z^-1)/(q - q^-1)").unwrap();
    println!("x = {x}");
    println!("bar(x) = {}", x.bar());
    println!("x at z = q^3: {}", x.at_z_power(3).unwrap());
    // type AII: q -> -q^-1, z -> q^(2m) with m = 2
    println!("x at (-q^-1, q^4): {}", x.substitute(-1, -1, 4).unwrap());
    println!("x at q = 1/2, z = q^3: {}", x.at_z_power(3).unwrap().eval_q(&rat(1, 2)).unwrap());

    let delta = FieldElem::delta();
    println!("delta = {delta}, class {:?}", delta.class());
    println!("delta * (q - q^-1) = {}", &delta * &FieldElem::qdiff());
}
