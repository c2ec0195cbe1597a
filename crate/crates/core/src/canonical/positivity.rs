//! Experimental positivity scan of structure constants.
//!
//! Two readings of "positive" are offered. With `z = q^m` a constant must be
//! a Laurent polynomial in `q` with non-negative integer coefficients.
//! Generically it must lie in `N[q^±1, z^±1][delta]`, `delta = (z - z^-1)/(q - q^-1)`;
//! membership is searched for, and a failed search is reported as
//! undetermined rather than negative.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{diagram_label, QBrauer};
use crate::coeff::{nonnegative, FieldElem, LaurentPoly, Rational};
use crate::diagram::BrauerDiagram;

use super::{structure_constants, CanonicalTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZSubstitution {
    Power(i32),
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Positivity {
    Positive,
    NotPositive,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityEntry {
    pub left: String,
    pub right: String,
    pub target: String,
    pub coeff: String,
    pub verdict: Positivity,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityReport {
    pub n: usize,
    pub substitution: ZSubstitution,
    pub constants_checked: usize,
    pub positive: usize,
    /// Every constant that is not shown positive.
    pub exceptions: Vec<PositivityEntry>,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.exceptions.is_empty()
    }
}

fn nonneg_integer_poly(p: &LaurentPoly) -> bool {
    p.has_integer_coeffs() && nonnegative(p)
}

/// `(q - q^-1)^j (z - z^-1)^i`.
fn qz_diff_power(j: usize, i: usize) -> LaurentPoly {
    let one = Rational::from_integer(1.into());
    let qd = LaurentPoly::from_terms([((1, 0), one.clone()), ((-1, 0), -one.clone())]);
    let zd = LaurentPoly::from_terms([((0, 1), one.clone()), ((0, -1), -one)]);
    let mut p = LaurentPoly::one();
    for _ in 0..j {
        p = &p * &qd;
    }
    for _ in 0..i {
        p = &p * &zd;
    }
    p
}

/// Largest monomial in the order (z exponent, q exponent).
fn top(p: &LaurentPoly) -> Option<((i32, i32), Rational)> {
    p.terms().max_by_key(|((qe, ze), _)| (*ze, *qe)).map(|(k, c)| (*k, c.clone()))
}

/// Whether `p = sum_j P_j (z - z^-1)^j (q - q^-1)^(m - j)` with every `P_j`
/// in `N[q^±1, z^±1]`. The top monomial of each summand has coefficient +1,
/// so the top monomial of `p` is positive and is attributed to one summand.
fn decompose(p: &LaurentPoly, m: usize, budget: &mut usize) -> bool {
    let Some(((qe, ze), c)) = top(p) else { return true };
    if c.is_negative() || !c.is_integer() {
        return false;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    for j in (0..=m).rev() {
        let shape = qz_diff_power(m - j, j);
        let ((sq, sz), _) = top(&shape).unwrap();
        let piece = shape.shift(qe - sq, ze - sz).scale(&c);
        if decompose(&(p - &piece), m, budget) {
            return true;
        }
    }
    false
}

fn generic_verdict(c: &FieldElem) -> Positivity {
    if c.is_zero() {
        return Positivity::Positive;
    }
    let den = c.denominator();
    let (dq, dz) = den.min_exponents();
    if dz != 0 || !den.is_z_free() {
        return Positivity::Undetermined;
    }
    // The denominator must be a monomial times a power of (q - q^-1).
    let mut m = 0;
    let mut rest = den.shift(-dq, 0);
    let qd = qz_diff_power(1, 0).shift(1, 0);
    while !rest.is_monomial() {
        match rest.exact_div(&qd) {
            Some(r) => {
                rest = r;
                m += 1;
            }
            None => return Positivity::Undetermined,
        }
    }
    let unit = rest.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero);
    if unit.is_negative() {
        return Positivity::Undetermined;
    }
    // c = num / (unit * q^(dq + rq + m) * (q - q^-1)^m)
    let (rq, _) = rest.min_exponents();
    let scaled = c.numerator().shift(-(dq + rq + m as i32), 0).scale(&(Rational::from_integer(1.into()) / unit));
    let mut budget = 4096;
    if decompose(&scaled, m, &mut budget) {
        Positivity::Positive
    } else {
        Positivity::Undetermined
    }
}

pub fn verdict(c: &FieldElem, sub: ZSubstitution) -> Positivity {
    match sub {
        ZSubstitution::Power(m) => match c.at_z_power(m) {
            Ok(v) => match v.as_poly() {
                Some(p) if nonneg_integer_poly(p) => Positivity::Positive,
                _ => Positivity::NotPositive,
            },
            Err(_) => Positivity::NotPositive,
        },
        ZSubstitution::Generic => generic_verdict(c),
    }
}

/// Verdicts for every structure constant of the table.
pub fn positivity_scan(alg: &QBrauer, table: &CanonicalTable, sub: ZSubstitution) -> PositivityReport {
    let consts = structure_constants(alg, table);
    scan_constants(table.n, &consts, sub)
}

pub(crate) fn scan_constants(
    n: usize,
    consts: &BTreeMap<(BrauerDiagram, BrauerDiagram), BTreeMap<BrauerDiagram, FieldElem>>,
    sub: ZSubstitution,
) -> PositivityReport {
    let mut checked = 0;
    let mut positive = 0;
    let mut exceptions = Vec::new();
    for ((a, b), row) in consts {
        for (d, c) in row {
            checked += 1;
            let v = verdict(c, sub);
            if v == Positivity::Positive {
                positive += 1;
            } else {
                exceptions.push(PositivityEntry {
                    left: diagram_label(a),
                    right: diagram_label(b),
                    target: diagram_label(d),
                    coeff: c.to_string(),
                    verdict: v,
                });
            }
        }
    }
    PositivityReport { n, substitution: sub, constants_checked: checked, positive, exceptions }
}
