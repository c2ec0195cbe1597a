use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::FieldElem;
use crate::diagram::BrauerDiagram;

use super::label::diagram_label;

/// Element of the q-Brauer algebra in the standard basis `H_d`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<BrauerDiagram, FieldElem>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn basis(d: BrauerDiagram) -> Self {
        Self::term(d, FieldElem::one())
    }

    pub fn term(d: BrauerDiagram, c: FieldElem) -> Self {
        let mut e = Self::zero(d.n());
        e.add_term(d, c);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::basis(BrauerDiagram::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: FieldElem) {
        assert_eq!(d.n(), self.n, "diagram on the wrong number of strands");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> FieldElem {
        self.terms.get(d).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &FieldElem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Self, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (d, x) in &other.terms {
            self.add_term(*d, if one { x.clone() } else { x * c });
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &FieldElem::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &FieldElem::from_int(-1));
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs<F: Fn(&FieldElem) -> FieldElem>(&self, f: F) -> Self {
        let mut out = Self::zero(self.n);
        for (d, c) in &self.terms {
            out.add_term(*d, f(c));
        }
        out
    }

    /// The anti-involution: `H_d -> H_{d flipped}`, coefficients unchanged.
    pub fn jmath(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (d, c) in &self.terms {
            out.add_term(d.flip(), c.clone());
        }
        out
    }

    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(BrauerDiagram::length).max()
    }

    /// Terms in the canonical total order: by length, then partner array.
    pub fn ordered_terms(&self) -> Vec<(BrauerDiagram, FieldElem)> {
        let mut v: Vec<_> = self.terms.iter().map(|(d, c)| (*d, c.clone())).collect();
        v.sort_by_key(|(d, _)| (d.length(), *d));
        v
    }

    /// Render with basis symbol `sym`, highest length first, e.g.
    /// `H_12e + q^-1*H_2e`.
    pub fn render(&self, sym: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.ordered_terms().into_iter().rev().enumerate() {
            let name = format!("{sym}_{}", diagram_label(&d));
            let mut cs = c.to_string();
            let neg = cs.starts_with('-') && !cs[1..].contains([' ', '/']);
            if neg {
                cs.remove(0);
            }
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            if cs == "1" {
                out.push_str(&name);
            } else if cs.contains([' ', '/']) {
                out.push_str(&format!("({cs})*{name}"));
            } else {
                out.push_str(&format!("{cs}*{name}"));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .ordered_terms()
            .into_iter()
            .map(|(d, c)| serde_json::json!({"diagram": d.to_string(), "coeff": c.to_string()}))
            .collect();
        serde_json::Value::Array(terms)
    }

    /// Inverse of [`AlgebraElement::to_json`].
    pub fn from_json(v: &serde_json::Value, n: usize) -> Result<Self, String> {
        let arr = v.as_array().ok_or("expected an array of terms")?;
        let mut x = AlgebraElement::zero(n);
        for t in arr {
            let field = |k: &str| t.get(k).and_then(|s| s.as_str()).ok_or(format!("term without '{k}'"));
            let d = crate::diagram::parse_diagram(field("diagram")?, n)?;
            let c = crate::coeff::parse(field("coeff")?).map_err(|e| e.to_string())?;
            x.add_term(d, c);
        }
        Ok(x)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("H"))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
