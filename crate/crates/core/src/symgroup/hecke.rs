use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::FieldElem;

use super::perm::Perm;

/// Element of the Iwahori-Hecke algebra of `S_n` over `Q(q, z)`, in the
/// basis `H_w`, with `(H_i - q)(H_i + q^-1) = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, FieldElem>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    pub fn basis(w: Perm) -> Self {
        Self::term(w, FieldElem::one())
    }

    pub fn term(w: Perm, c: FieldElem) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(w, c);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(Perm::simple(n, i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, w: Perm, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(FieldElem::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Perm) -> FieldElem {
        self.terms.get(w).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &FieldElem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&FieldElem::from_int(-1)))
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let mut out = Self::zero(self.n);
        for (w, x) in &self.terms {
            out.add_term(*w, x * c);
        }
        out
    }

    /// `H_i * self`.
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let c = FieldElem::qdiff();
        let mut out = Self::zero(self.n);
        for (w, x) in &self.terms {
            let sw = w.left_mul_simple(i);
            out.add_term(sw, x.clone());
            if w.is_left_descent(i) {
                out.add_term(*w, x * &c);
            }
        }
        out
    }

    /// `H_i^-1 * self`, using `H_i^-1 = H_i - (q - q^-1)`.
    pub fn left_mul_generator_inv(&self, i: usize) -> Self {
        self.left_mul_generator(i).sub(&self.scale(&FieldElem::qdiff()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, x) in &self.terms {
            let mut acc = other.clone();
            for &i in w.reduced_word().iter().rev() {
                acc = acc.left_mul_generator(i);
            }
            out = out.add(&acc.scale(x));
        }
        out
    }

    /// The bar involution: `H_w -> H_{w^-1}^-1`, coefficients barred.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, x) in &self.terms {
            let mut acc = Self::one(self.n);
            for &i in w.reduced_word().iter().rev() {
                acc = acc.left_mul_generator_inv(i);
            }
            out = out.add(&acc.scale(&x.bar()));
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*H{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
