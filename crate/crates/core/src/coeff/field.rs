use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::laurent::LaurentPoly;
use super::{CoeffError, Rational};

/// Element of the rational function field `Q(q, z)`.
///
/// Stored as a reduced fraction whose denominator has zero minimal exponents
/// and leading coefficient one, which makes the representation canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Coarse classification of a coefficient, used by the canonical basis checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientClass {
    Zero,
    /// Integer Laurent polynomial in `q^-1` with no constant term.
    QInvPoly,
    /// Integer Laurent polynomial in `q` with no constant term.
    QPoly,
    /// Integer Laurent polynomial in `q` alone.
    LaurentQ,
    /// Anything else that does not involve `z`.
    ZFree,
    General,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        FieldElem { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        FieldElem { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FieldElem { num: p, den: LaurentPoly::one() }
    }

    pub fn monomial(c: i64, qe: i32, ze: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(Rational::from_integer(c.into()), qe, ze))
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e, 0)
    }

    /// `q - q^-1`.
    pub fn qdiff() -> Self {
        Self::from_poly(LaurentPoly::from_terms([
            ((1, 0), Rational::one()),
            ((-1, 0), -Rational::one()),
        ]))
    }

    /// `(z - z^-1) / (q - q^-1)`.
    pub fn delta() -> Self {
        let num = LaurentPoly::from_terms([((0, 1), Rational::one()), ((0, -1), -Rational::one())]);
        Self::fraction(num, Self::qdiff().num).expect("nonzero denominator")
    }

    pub fn fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            let (&(a, b), c) = den.leading().unwrap();
            let inv = c.recip();
            return FieldElem { num: num.shift(-a, -b).scale(&inv), den: LaurentPoly::one() };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_monomial() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_unit(num, den)
    }

    fn normalize_unit(num: LaurentPoly, den: LaurentPoly) -> Self {
        let (mq, mz) = den.min_exponents();
        let lc = den.leading().unwrap().1.recip();
        FieldElem { num: num.shift(-mq, -mz).scale(&lc), den: den.shift(-mq, -mz).scale(&lc) }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_z_free(&self) -> bool {
        self.num.is_z_free() && self.den.is_z_free()
    }

    /// The Laurent polynomial, if the denominator is one.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        Self::fraction(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if rhs.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: i32) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The ring involution `q -> q^-1`, `z -> z^-1`.
    pub fn bar(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.bar());
        }
        Self::normalize_unit(self.num.bar(), self.den.bar())
    }

    /// Substitute `q -> sign * q^qa` and `z -> q^zb`.
    pub fn substitute(&self, sign: i32, qa: i32, zb: i32) -> Result<Self, CoeffError> {
        let den = self.den.substitute(sign, qa, zb);
        if den.is_zero() {
            return Err(CoeffError::Pole);
        }
        Ok(Self::reduce(self.num.substitute(sign, qa, zb), den))
    }

    /// Specialize `z = q^m`.
    pub fn at_z_power(&self, m: i32) -> Result<Self, CoeffError> {
        self.substitute(1, 1, m)
    }

    /// Evaluate a `z`-free element at a rational `q`.
    pub fn eval_q(&self, q: &Rational) -> Result<Rational, CoeffError> {
        if !self.is_z_free() {
            return Err(CoeffError::NotZFree);
        }
        let n = self.num.eval_q(q).ok_or(CoeffError::Pole)?;
        let d = self.den.eval_q(q).ok_or(CoeffError::Pole)?;
        if d.is_zero() {
            return Err(CoeffError::Pole);
        }
        Ok(n / d)
    }

    /// The classical limit: `z = q^m`, cancel, then `q -> 1`.
    pub fn classical_limit(&self, m: i32) -> Result<Rational, CoeffError> {
        self.at_z_power(m)?.eval_q(&Rational::one())
    }

    pub fn class(&self) -> CoefficientClass {
        if self.is_zero() {
            return CoefficientClass::Zero;
        }
        if !self.is_z_free() {
            return CoefficientClass::General;
        }
        if !self.den.is_one() || !self.num.has_integer_coeffs() {
            return CoefficientClass::ZFree;
        }
        let (lo, _) = self.num.min_exponents();
        let (hi, _) = self.num.max_exponents();
        if hi < 0 {
            CoefficientClass::QInvPoly
        } else if lo > 0 {
            CoefficientClass::QPoly
        } else {
            CoefficientClass::LaurentQ
        }
    }
}

impl Default for FieldElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return FieldElem::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return FieldElem::reduce(&self.num + &rhs.num, self.den.clone());
        }
        FieldElem::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        if self.is_zero() || rhs.is_zero() {
            return FieldElem::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return FieldElem::from_poly(&self.num * &rhs.num);
        }
        FieldElem::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FieldElem {
    type Err = CoeffError;
    fn from_str(s: &str) -> Result<Self, CoeffError> {
        super::parse::parse(s)
    }
}

impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Whether a Laurent polynomial has only non-negative coefficients.
pub fn nonnegative(p: &LaurentPoly) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}
