//! Comparison with the classical Brauer algebra at `z = q^N`, `q -> 1`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::{CoeffError, Rational};
use crate::diagram::BrauerDiagram;

use super::element::AlgebraElement;
use super::engine::QBrauer;

#[derive(Clone, Debug, Serialize)]
pub struct OracleMismatch {
    pub left: String,
    pub right: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: i32,
    pub pairs_checked: usize,
    pub mismatches: Vec<OracleMismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Classical limit of every coefficient.
pub fn classical_limit(x: &AlgebraElement, big_n: i32) -> Result<Vec<(BrauerDiagram, Rational)>, CoeffError> {
    let mut out = Vec::new();
    for (d, c) in x.terms() {
        let v = c.classical_limit(big_n)?;
        if v != Rational::from_integer(0.into()) {
            out.push((*d, v));
        }
    }
    out.sort_by_key(|(d, _)| *d);
    Ok(out)
}

fn check_pair(alg: &QBrauer, d1: &BrauerDiagram, d2: &BrauerDiagram, big_n: i32) -> Option<OracleMismatch> {
    let prod = alg.multiply(&AlgebraElement::basis(*d1), &AlgebraElement::basis(*d2));
    let (d, loops) = d1.concat(d2);
    let expect = vec![(d, Rational::from_integer(big_n.into()).pow(loops as i32))];
    let mismatch = |detail: String| OracleMismatch { left: d1.to_string(), right: d2.to_string(), detail };
    match classical_limit(&prod, big_n) {
        Ok(got) if got == expect => None,
        Ok(got) => Some(mismatch(format!(
            "limit {:?} but diagram product gives {:?}",
            got.iter().map(|(d, v)| format!("{v}*{d}")).collect::<Vec<_>>(),
            expect.iter().map(|(d, v)| format!("{v}*{d}")).collect::<Vec<_>>()
        ))),
        Err(e) => Some(mismatch(format!("specialization failed: {e}"))),
    }
}

/// Products of standard basis elements against the diagram product with
/// weight `N^loops`. Exhaustive when `samples` is `None`.
pub fn brauer_oracle_check(alg: &QBrauer, big_n: i32, samples: Option<usize>, seed: u64) -> OracleReport {
    use rayon::prelude::*;
    let basis = alg.basis();
    let mut pairs: Vec<(BrauerDiagram, BrauerDiagram)> =
        basis.iter().flat_map(|a| basis.iter().map(move |b| (*a, *b))).collect();
    if let Some(s) = samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(s);
    }
    let mismatches: Vec<OracleMismatch> =
        pairs.par_iter().filter_map(|(a, b)| check_pair(alg, a, b, big_n)).collect();
    OracleReport { n: alg.n(), big_n, pairs_checked: pairs.len(), mismatches }
}
