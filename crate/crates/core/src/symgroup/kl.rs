//! Kazhdan-Lusztig basis of the Hecke algebra, computed with the classical
//! `C_s C_w` recursion and `mu` coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coeff::{FieldElem, Rational};

use super::hecke::HeckeElement;
use super::perm::Perm;

/// `C_s * x` with `C_s = H_s + q^-1`.
fn left_mul_cs(x: &HeckeElement, s: usize) -> HeckeElement {
    x.left_mul_generator(s).add(&x.scale(&FieldElem::q_pow(-1)))
}

fn mu(p: &FieldElem) -> Rational {
    match p.as_poly() {
        Some(poly) => poly.coeff(-1, 0),
        None => Rational::zero(),
    }
}

/// The basis `C_w = H_w + sum_{y<w} p_{y,w} H_y` with `p_{y,w}` in
/// `q^-1 Z[q^-1]`, for every `w` in `S_n`.
pub fn kl_basis(n: usize) -> BTreeMap<Perm, HeckeElement> {
    let mut perms = Perm::all(n);
    perms.sort_by_key(|w| (w.length(), *w));
    let mut basis: BTreeMap<Perm, HeckeElement> = BTreeMap::new();
    for w in perms {
        if w.is_identity() {
            basis.insert(w, HeckeElement::one(n));
            continue;
        }
        let s = (1..n).find(|&i| w.is_left_descent(i)).unwrap();
        let v = w.left_mul_simple(s);
        let cv = &basis[&v];
        let mut cw = left_mul_cs(cv, s);
        for (y, py) in cv.terms() {
            if *y == v || !y.is_left_descent(s) {
                continue;
            }
            let m = mu(py);
            if !m.is_zero() {
                cw = cw.sub(&basis[y].scale(&FieldElem::from_rational(m)));
            }
        }
        basis.insert(w, cw);
    }
    basis
}

/// `p_{y,w}` read off from a basis table.
pub fn kl_coefficient(basis: &BTreeMap<Perm, HeckeElement>, y: &Perm, w: &Perm) -> FieldElem {
    basis[w].coeff(y)
}
