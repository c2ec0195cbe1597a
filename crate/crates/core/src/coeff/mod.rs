//! The coefficient field `Q(q, z)`.

mod field;
mod gcd;
mod laurent;
mod parse;

pub use field::{nonnegative, CoefficientClass, FieldElem};
pub use gcd::gcd;
pub use laurent::LaurentPoly;
pub use parse::{parse, parse_rational};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization hits a pole")]
    Pole,
    #[error("coefficient involves z")]
    NotZFree,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> FieldElem {
        parse(s).unwrap()
    }

    #[test]
    fn delta_renders() {
        assert_eq!(FieldElem::delta(), p("(z - z^-1)/(q - q^-1)"));
        let d = FieldElem::delta();
        assert_eq!(parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn delta_classical_limit() {
        let d = FieldElem::delta();
        assert_eq!(d.classical_limit(3).unwrap(), rat(3, 1));
        assert_eq!(d.classical_limit(-2).unwrap(), rat(-2, 1));
    }

    #[test]
    fn cancellation() {
        let x = p("(q^2 - 1)/(q - 1)");
        assert_eq!(x, p("q + 1"));
        assert!(x.is_polynomial());
        let y = p("(q^2*z - q^-2*z^-1)/(q - q^-1)");
        assert!(!y.is_polynomial());
        assert_eq!(y.bar().bar(), y);
    }

    #[test]
    fn render_examples() {
        assert_eq!(p("q^2*z - q^-2*z^-1").to_string(), "q^2*z - q^-2*z^-1");
        assert_eq!(p("-q^-1 + 1/2").to_string(), "1/2 - q^-1");
        assert_eq!(FieldElem::zero().to_string(), "0");
    }

    #[test]
    fn pole() {
        assert_eq!(p("1/(q - 1)").eval_q(&rat(1, 1)), Err(CoeffError::Pole));
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn classes() {
        assert_eq!(p("q^-1 + 2*q^-3").class(), CoefficientClass::QInvPoly);
        assert_eq!(p("q").class(), CoefficientClass::QPoly);
        assert_eq!(p("q + 1").class(), CoefficientClass::LaurentQ);
        assert_eq!(p("z").class(), CoefficientClass::General);
        assert_eq!(p("1/(q+1)").class(), CoefficientClass::ZFree);
    }
}
