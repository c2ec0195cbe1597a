//! Canonical and dual canonical bases by Lusztig's triangular recursion.

mod positivity;

use std::collections::BTreeMap;

use rayon::prelude::*;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{diagram_label, AlgebraElement, QBrauer};
use crate::coeff::{CoefficientClass, FieldElem, LaurentPoly};
use crate::diagram::BrauerDiagram;
use crate::symgroup::kl_basis;

pub use positivity::{positivity_scan, verdict, Positivity, PositivityEntry, PositivityReport, ZSubstitution};

/// Largest `n` built without an explicit override.
pub const DEFAULT_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Canonical,
    Dual,
}

/// Tie-break inside a length stratum. Only affects output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SecondaryOrder {
    Lex,
    ReverseLex,
}

#[derive(Debug, Error)]
pub enum CanonicalError {
    #[error("n = {n} exceeds the configured bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("bar(H_{d}) is not unitriangular: {detail}")]
    Triangularity { d: String, detail: String },
    #[error("coefficient {coeff} of C_{at} in bar(H_{d}) - H_{d} is not an antisymmetric z-free Laurent polynomial")]
    NotAntisymmetric { d: String, at: String, coeff: String },
    #[error("correction loop for C_{d} did not terminate after {steps} steps")]
    NoConvergence { d: String, steps: usize },
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

/// `C_d = sum_{d'} p_{d',d} H_{d'}` for every `d`.
#[derive(Clone, Debug)]
pub struct CanonicalTable {
    pub n: usize,
    pub variant: Variant,
    pub order: Vec<BrauerDiagram>,
    pub columns: BTreeMap<BrauerDiagram, AlgebraElement>,
}

fn check_bound(n: usize, bound: usize) -> Result<(), CanonicalError> {
    if n > bound {
        Err(CanonicalError::TooLarge { n, bound })
    } else {
        Ok(())
    }
}

fn ordered_basis(n: usize, order: SecondaryOrder) -> Vec<BrauerDiagram> {
    let mut v = BrauerDiagram::enumerate(n, None);
    match order {
        SecondaryOrder::Lex => v.sort_by_key(|d| (d.length(), *d)),
        SecondaryOrder::ReverseLex => v.sort_by_key(|d| (d.length(), std::cmp::Reverse(*d))),
    }
    v
}

fn check_triangular(d: &BrauerDiagram, x: &AlgebraElement) -> Result<(), CanonicalError> {
    let fail = |detail: String| CanonicalError::Triangularity { d: diagram_label(d), detail };
    if !x.coeff(d).is_one() {
        return Err(fail(format!("diagonal coefficient {}", x.coeff(d))));
    }
    let l = d.length();
    for (d2, _) in x.terms() {
        if d2 != d && d2.length() >= l {
            return Err(fail(format!("term H_{} of length {}", diagram_label(d2), d2.length())));
        }
    }
    Ok(())
}

/// `bar(H_d)` for every `d`, checked to be unitriangular.
pub fn bar_matrix(alg: &QBrauer, bound: usize) -> Result<BTreeMap<BrauerDiagram, AlgebraElement>, CanonicalError> {
    check_bound(alg.n(), bound)?;
    let basis = alg.basis();
    let cols: Vec<_> = basis.par_iter().map(|d| (*d, alg.bar_basis(d))).collect();
    for (d, x) in &cols {
        check_triangular(d, x)?;
    }
    Ok(cols.into_iter().collect())
}

/// The antisymmetric `rho` with `rho = -bar(rho)`, split into its `q^{<0}`
/// part (canonical) or `q^{>0}` part (dual).
fn split(rho: &FieldElem, variant: Variant) -> Option<LaurentPoly> {
    let p = rho.as_poly()?;
    if !p.is_z_free() || !p.coeff(0, 0).is_zero() || p.bar() != -p {
        return None;
    }
    Some(match variant {
        Variant::Canonical => p.neg_q_part(),
        Variant::Dual => p.pos_q_part(),
    })
}

fn build_column(
    alg: &QBrauer,
    d: &BrauerDiagram,
    built: &BTreeMap<BrauerDiagram, AlgebraElement>,
    variant: Variant,
) -> Result<AlgebraElement, CanonicalError> {
    let bar = alg.bar_basis(d);
    check_triangular(d, &bar)?;
    let mut rest = bar.sub(&AlgebraElement::basis(*d));
    let mut c = AlgebraElement::basis(*d);
    let cap = built.len() + 1;
    let mut steps = 0;
    // Peel the top term of bar(H_d) - H_d against the lower C basis.
    while let Some((top, coeff)) = rest.ordered_terms().pop() {
        steps += 1;
        if steps > cap {
            return Err(CanonicalError::NoConvergence { d: diagram_label(d), steps });
        }
        let lower = built.get(&top).ok_or_else(|| CanonicalError::Triangularity {
            d: diagram_label(d),
            detail: format!("H_{} has no canonical element yet", diagram_label(&top)),
        })?;
        rest.add_scaled(lower, &(-&coeff));
        let a = split(&coeff, variant).ok_or_else(|| CanonicalError::NotAntisymmetric {
            d: diagram_label(d),
            at: diagram_label(&top),
            coeff: coeff.to_string(),
        })?;
        c.add_scaled(lower, &FieldElem::from_poly(a));
    }
    Ok(c)
}

impl CanonicalTable {
    pub fn build(alg: &QBrauer, variant: Variant, bound: usize) -> Result<Self, CanonicalError> {
        Self::build_with_order(alg, variant, bound, SecondaryOrder::Lex)
    }

    pub fn build_with_order(
        alg: &QBrauer,
        variant: Variant,
        bound: usize,
        order: SecondaryOrder,
    ) -> Result<Self, CanonicalError> {
        let n = alg.n();
        check_bound(n, bound)?;
        let order = ordered_basis(n, order);
        let mut columns: BTreeMap<BrauerDiagram, AlgebraElement> = BTreeMap::new();
        let mut start = 0;
        while start < order.len() {
            let l = order[start].length();
            let end = order[start..].iter().position(|d| d.length() != l).map_or(order.len(), |p| start + p);
            let stratum: Vec<_> = order[start..end]
                .par_iter()
                .map(|d| build_column(alg, d, &columns, variant).map(|c| (*d, c)))
                .collect::<Result<_, _>>()?;
            columns.extend(stratum);
            start = end;
        }
        Ok(CanonicalTable { n, variant, order, columns })
    }

    pub fn element(&self, d: &BrauerDiagram) -> &AlgebraElement {
        &self.columns[d]
    }

    /// `p_{d',d}`.
    pub fn p(&self, d_prime: &BrauerDiagram, d: &BrauerDiagram) -> FieldElem {
        self.columns[d].coeff(d_prime)
    }

    /// Coordinates of `x` in this basis.
    pub fn express(&self, x: &AlgebraElement) -> BTreeMap<BrauerDiagram, FieldElem> {
        let mut rest = x.clone();
        let mut out = BTreeMap::new();
        while let Some((top, coeff)) = rest.ordered_terms().pop() {
            rest.add_scaled(&self.columns[&top], &(-&coeff));
            out.insert(top, coeff);
        }
        out
    }

    /// Every coefficient has the class the variant promises and is z-free.
    pub fn classes_ok(&self) -> bool {
        let want = match self.variant {
            Variant::Canonical => CoefficientClass::QInvPoly,
            Variant::Dual => CoefficientClass::QPoly,
        };
        self.columns.iter().all(|(d, c)| {
            c.terms().all(|(d2, p)| if d2 == d { p.is_one() } else { d2.length() < d.length() && p.class() == want })
        })
    }

    /// Ordered `{diagram, label, expansion}` records.
    pub fn to_json(&self) -> serde_json::Value {
        let cols: Vec<_> = self
            .order
            .iter()
            .map(|d| {
                serde_json::json!({
                    "diagram": d.to_string(),
                    "label": diagram_label(d),
                    "expansion": self.columns[d].to_json(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "variant": self.variant, "basis": cols })
    }

    /// One line per element, e.g. `C_12e = H_12e + q^-1*H_2e + q^-2*H_e`.
    pub fn render(&self) -> String {
        let sym = match self.variant {
            Variant::Canonical => "C",
            Variant::Dual => "C*",
        };
        self.order
            .iter()
            .map(|d| format!("{sym}_{} = {}\n", diagram_label(d), self.columns[d]))
            .collect()
    }
}

/// `C_{d1} C_{d2}` in the `C` basis for every pair.
pub type StructureConstants = BTreeMap<(BrauerDiagram, BrauerDiagram), BTreeMap<BrauerDiagram, FieldElem>>;

pub fn structure_constant(
    alg: &QBrauer,
    table: &CanonicalTable,
    d1: &BrauerDiagram,
    d2: &BrauerDiagram,
) -> BTreeMap<BrauerDiagram, FieldElem> {
    table.express(&alg.multiply(table.element(d1), table.element(d2)))
}

pub fn structure_constants(alg: &QBrauer, table: &CanonicalTable) -> StructureConstants {
    let pairs: Vec<_> = table.order.iter().flat_map(|a| table.order.iter().map(move |b| (*a, *b))).collect();
    pairs.par_iter().map(|(a, b)| ((*a, *b), structure_constant(alg, table, a, b))).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct JmathReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// `jmath(C_d) = C_{flip d}` for every `d`.
pub fn jmath_symmetry_check(table: &CanonicalTable) -> JmathReport {
    let failures = table
        .order
        .iter()
        .filter(|d| table.columns[d].jmath() != table.columns[&d.flip()])
        .map(diagram_label)
        .collect();
    JmathReport { checked: table.order.len(), failures }
}

/// Diagrams without arcs whose `C_d` differs from the Kazhdan-Lusztig
/// element. Empty for the dual variant, which has no KL counterpart here.
pub fn kl_mismatches(table: &CanonicalTable) -> Vec<String> {
    if table.variant == Variant::Dual {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (w, c) in &kl_basis(table.n) {
        let d = BrauerDiagram::from_perm(w);
        let mut expect = AlgebraElement::zero(table.n);
        for (v, p) in c.terms() {
            expect.add_term(BrauerDiagram::from_perm(v), p.clone());
        }
        if table.columns[&d] != expect {
            out.push(diagram_label(&d));
        }
    }
    out
}
