use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Sparse Laurent polynomial in `q` and `z` with rational coefficients.
///
/// Keys are `(q exponent, z exponent)`. Zero coefficients are never stored,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, qe: i32, ze: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, ze), c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), Rational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, key: (i32, i32), c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, qe: i32, ze: i32) -> Rational {
        self.terms.get(&(qe, ze)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lexicographically largest term, `q` exponent first.
    pub fn leading(&self) -> Option<(&(i32, i32), &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn min_exponents(&self) -> (i32, i32) {
        let mq = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let mz = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (mq, mz)
    }

    pub fn max_exponents(&self) -> (i32, i32) {
        let mq = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let mz = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        (mq, mz)
    }

    pub fn is_z_free(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn shift(&self, dq: i32, dz: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + dq, b + dz), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `q -> q^-1`, `z -> z^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((-a, -b), c.clone())).collect(),
        }
    }

    /// Substitute `q -> sign * q^qa`, `z -> q^zb`. The result has no `z`.
    pub fn substitute(&self, sign: i32, qa: i32, zb: i32) -> Self {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            let mut c = c.clone();
            if sign < 0 && a.rem_euclid(2) == 1 {
                c = -c;
            }
            out.add_term((qa * a + zb * b, 0), c);
        }
        out
    }

    /// Evaluate a `z`-free polynomial at a rational `q`. Returns `None` when
    /// `q = 0` and a negative power occurs, or when `z` is present.
    pub fn eval_q(&self, q: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            if b != 0 {
                return None;
            }
            if q.is_zero() && a < 0 {
                return None;
            }
            acc += c * pow_rat(q, a);
        }
        Some(acc)
    }

    /// Exact division, assuming `d` divides `self` in the Laurent ring.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (&lk, lc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let floor = self.min_exponents().0 - d.min_exponents().0;
        while let Some((&rk, rc)) = rem.leading() {
            let k = (rk.0 - lk.0, rk.1 - lk.1);
            if k.0 < floor {
                return None;
            }
            let c = rc / lc;
            let t = LaurentPoly::monomial(c.clone(), k.0, k.1);
            rem = &rem - &(&t * d);
            quot.add_term(k, c);
        }
        Some(quot)
    }

    pub fn neg_q_part(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().filter(|(k, _)| k.0 < 0).map(|(k, v)| (*k, v.clone())).collect() }
    }

    pub fn pos_q_part(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().filter(|(k, _)| k.0 > 0).map(|(k, v)| (*k, v.clone())).collect() }
    }
}

pub(crate) fn pow_rat(q: &Rational, e: i32) -> Rational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }
}

fn fmt_var(out: &mut String, var: char, e: i32) {
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push(var);
    if e != 1 {
        out.push('^');
        out.push_str(&e.to_string());
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing `q` then `z` degree, e.g. `q^2*z - q^-2*z^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut mono = String::new();
            fmt_var(&mut mono, 'q', a);
            fmt_var(&mut mono, 'z', b);
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&abs.to_string());
                s.push('*');
                s.push_str(&mono);
            }
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
