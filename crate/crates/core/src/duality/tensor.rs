use std::collections::BTreeMap;

use crate::coeff::{CoeffError, FieldElem, Rational};

/// A basis word `(a_1, ..., a_n)` of `V^{⊗n}`, letters 1-based.
pub type Word = Vec<u8>;

/// All words of length `n` over `1..=dim`, in lexicographic order.
pub fn all_words(dim: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=dim as u8).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorVector {
    terms: BTreeMap<Word, FieldElem>,
}

impl TensorVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: Word) -> Self {
        Self::term(w, FieldElem::one())
    }

    pub fn term(w: Word, c: FieldElem) -> Self {
        let mut v = Self::zero();
        v.add_term(w, c);
        v
    }

    pub fn add_term(&mut self, w: Word, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> FieldElem {
        self.terms.get(w).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::fmt::Display for TensorVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let v: Vec<String> = w.iter().map(|a| format!("v{a}")).collect();
                format!("({c})*{}", v.join("⊗"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A linear map on `V^{⊗n}`, stored by its non-zero columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    dim: usize,
    n: usize,
    cols: BTreeMap<Word, TensorVector>,
}

impl TensorOperator {
    pub fn zero(dim: usize, n: usize) -> Self {
        TensorOperator { dim, n, cols: BTreeMap::new() }
    }

    pub fn identity(dim: usize, n: usize) -> Self {
        Self::from_fn(dim, n, |w| TensorVector::basis(w.clone()))
    }

    pub fn from_fn<F: Fn(&Word) -> TensorVector>(dim: usize, n: usize, f: F) -> Self {
        let mut cols = BTreeMap::new();
        for w in all_words(dim, n) {
            let v = f(&w);
            if !v.is_zero() {
                cols.insert(w, v);
            }
        }
        TensorOperator { dim, n, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn column(&self, w: &[u8]) -> TensorVector {
        self.cols.get(w).cloned().unwrap_or_default()
    }

    pub fn columns(&self) -> impl Iterator<Item = (&Word, &TensorVector)> {
        self.cols.iter()
    }

    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        let mut out = TensorVector::zero();
        for (w, c) in v.terms() {
            if let Some(col) = self.cols.get(w) {
                out.add_scaled(col, c);
            }
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!((self.dim, self.n), (other.dim, other.n), "operators on different spaces");
        let mut cols = BTreeMap::new();
        for (w, v) in &other.cols {
            let x = self.apply(v);
            if !x.is_zero() {
                cols.insert(w.clone(), x);
            }
        }
        TensorOperator { dim: self.dim, n: self.n, cols }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &FieldElem) {
        assert_eq!((self.dim, self.n), (other.dim, other.n), "operators on different spaces");
        for (w, v) in &other.cols {
            let col = self.cols.entry(w.clone()).or_default();
            col.add_scaled(v, c);
            if col.is_zero() {
                self.cols.remove(w);
            }
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
        let mut out = Self::zero(self.dim, self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    /// `self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// `a ⊗ b` for two single-factor operators.
    pub fn kron(a: &Self, b: &Self) -> Self {
        assert!(a.n == 1 && b.n == 1 && a.dim == b.dim, "kron takes two single-factor operators");
        Self::from_fn(a.dim, 2, |w| {
            let x = a.column(&w[..1]);
            let y = b.column(&w[1..]);
            let mut out = TensorVector::zero();
            for (u, c) in x.terms() {
                for (v, d) in y.terms() {
                    out.add_term(vec![u[0], v[0]], c * d);
                }
            }
            out
        })
    }

    /// Dense matrix at a rational `q`, rows and columns in word order.
    pub fn to_matrix(&self, q: &Rational) -> Result<Vec<Vec<Rational>>, CoeffError> {
        let words = all_words(self.dim, self.n);
        let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let d = words.len();
        let mut m = vec![vec![Rational::from_integer(0.into()); d]; d];
        for (w, v) in &self.cols {
            let c = index[w];
            for (u, x) in v.terms() {
                m[index[u]][c] = x.eval_q(q)?;
            }
        }
        Ok(m)
    }
}
