//! The Hecke algebra of S_n and its Kazhdan-Lusztig basis.
use qbrauer::symgroup::{kl_basis, kl_coefficient, HeckeElement, Perm};

fn main() {
    let n = 4;
    let h1 = HeckeElement::generator(n, 1);
    println!("H_1^2 = {}", h1.mul(&h1));

    let basis = kl_basis(n);
    let w0 = Perm::all(n).into_iter().max_by_key(Perm::length).unwrap();
    println!("C_w0 has {} terms", basis[&w0].terms().count());
    // the first singular Schubert variety in type A3
    let w = Perm::from_word(n, &[2, 1, 3, 2]);
    let y = Perm::identity(n);
    println!("p_(e, s2s1s3s2) = {}", kl_coefficient(&basis, &y, &w));
    for (w, c) in basis.iter().filter(|(w, _)| w.length() == 2) {
        println!("C_{w} = {c}");
    }
}
