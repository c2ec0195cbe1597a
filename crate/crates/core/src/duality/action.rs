//! The right action of the specialized q-Brauer algebra on tensor space.
//!
//! Operators are maps `v -> v · x`, so `Φ(xy) = Φ(y) ∘ Φ(x)`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{basis_word, defining_relations, expand_letters, AlgebraElement, Letter, QBrauer};
use crate::coeff::FieldElem;
use crate::diagram::BrauerDiagram;

use super::params::{DualityError, DualityType, ParamSet};
use super::tensor::{all_words, TensorOperator, TensorVector, Word};

fn swapped(w: &Word, j: usize) -> Word {
    let mut u = w.clone();
    u.swap(j, j + 1);
    u
}

fn h_column(w: &Word, j: usize, inverse: bool) -> TensorVector {
    let (a, b) = (w[j], w[j + 1]);
    let c = FieldElem::qdiff();
    let mut out = TensorVector::zero();
    if a == b {
        out.add_term(w.clone(), FieldElem::q_pow(if inverse { -1 } else { 1 }));
        return out;
    }
    out.add_term(swapped(w, j), FieldElem::one());
    match (a < b, inverse) {
        (true, false) => out.add_term(w.clone(), c),
        (false, true) => out.add_term(w.clone(), -c),
        _ => {}
    }
    out
}

/// `v_{a1} ⊗ v_{a2} · e` on two factors.
fn e_pair(p: &ParamSet, a1: u8, a2: u8) -> Vec<((u8, u8), FieldElem)> {
    let m = p.m as i32;
    match p.variant {
        DualityType::AI => {
            if a1 != a2 {
                return Vec::new();
            }
            let ta = p.sign(a1 as usize);
            (1..=p.m)
                .map(|i| {
                    let c = &(&ta * &p.sign(i).inv().unwrap()) * &FieldElem::q_pow(m - 2 * i as i32 + 1);
                    ((i as u8, i as u8), c)
                })
                .collect()
        }
        DualityType::AII => {
            let (lo, hi) = (a1.min(a2), a1.max(a2));
            if lo % 2 == 0 || hi != lo + 1 {
                return Vec::new();
            }
            let i = (hi / 2) as usize;
            let pre = if a1 < a2 { FieldElem::one() } else { -FieldElem::q() };
            let ki = p.sign(i);
            let mut out = Vec::new();
            for j in 1..=p.m {
                let c = &(&(&pre * &ki) * &p.sign(j).inv().unwrap())
                    * &FieldElem::q_pow(2 * m + 1 - 3 * i as i32 - j as i32);
                let (x, y) = ((2 * j - 1) as u8, (2 * j) as u8);
                out.push(((x, y), c.clone()));
                out.push(((y, x), -&(&c * &FieldElem::q())));
            }
            out
        }
    }
}

/// `Φ(g)` for `g = H_j`, `H_j^-1` or `e`.
pub fn qbrauer_action(p: &ParamSet, g: Letter) -> Result<TensorOperator, DualityError> {
    let (dim, n) = (p.dim(), p.n);
    match g {
        Letter::H(j) | Letter::HInv(j) => {
            if j == 0 || j >= n {
                return Err(DualityError::BadIndex(j));
            }
            let inv = matches!(g, Letter::HInv(_));
            Ok(TensorOperator::from_fn(dim, n, |w| h_column(w, j - 1, inv)))
        }
        Letter::E => {
            if n < 2 {
                return Err(DualityError::BadIndex(1));
            }
            Ok(TensorOperator::from_fn(dim, n, |w| {
                let mut out = TensorVector::zero();
                for ((x, y), c) in e_pair(p, w[0], w[1]) {
                    let mut u = w.clone();
                    u[0] = x;
                    u[1] = y;
                    out.add_term(u, c);
                }
                out
            }))
        }
        Letter::Ek(k) => phi_word(p, &expand_letters(&[Letter::Ek(k)])),
    }
}

/// `Φ(l_1 l_2 ... l_r) = Φ(l_r) ∘ ... ∘ Φ(l_1)`.
pub fn phi_word(p: &ParamSet, word: &[Letter]) -> Result<TensorOperator, DualityError> {
    let mut acc = TensorOperator::identity(p.dim(), p.n);
    for l in expand_letters(word) {
        acc = qbrauer_action(p, l)?.compose(&acc);
    }
    Ok(acc)
}

/// `Φ(x)` after specializing the coefficients of `x`.
pub fn phi_element(p: &ParamSet, x: &AlgebraElement) -> Result<TensorOperator, DualityError> {
    let mut acc = TensorOperator::zero(p.dim(), p.n);
    for (d, c) in x.terms() {
        acc.add_scaled(&phi_word(p, &basis_word(d))?, &p.specialize(c)?);
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub holds: bool,
}

/// `(Q1)-(Q8)` as operator identities with the type's specialization.
pub fn relations_check(p: &ParamSet) -> Result<Vec<CheckResult>, DualityError> {
    let side = |terms: &[(FieldElem, Vec<Letter>)]| -> Result<TensorOperator, DualityError> {
        let mut acc = TensorOperator::zero(p.dim(), p.n);
        for (c, w) in terms {
            acc.add_scaled(&phi_word(p, w)?, &p.specialize(c)?);
        }
        Ok(acc)
    };
    defining_relations(p.n)
        .into_iter()
        .map(|id| Ok(CheckResult { holds: side(&id.lhs)? == side(&id.rhs)?, name: id.name }))
        .collect()
}

/// `Φ(xy) = Φ(y) ∘ Φ(x)` on random pairs of standard basis elements.
/// Returns the number of pairs checked and the failing pairs; pairs whose
/// product has a pole at the specialization are skipped.
pub fn representation_check(
    p: &ParamSet,
    samples: usize,
    seed: u64,
) -> Result<(usize, Vec<(BrauerDiagram, BrauerDiagram)>), DualityError> {
    let alg = QBrauer::new(p.n).map_err(|_| DualityError::BadN)?;
    let basis = alg.basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut failures = Vec::new();
    for _ in 0..samples {
        let d1 = *basis.choose(&mut rng).unwrap();
        let d2 = *basis.choose(&mut rng).unwrap();
        let prod = alg.multiply(&AlgebraElement::basis(d1), &AlgebraElement::basis(d2));
        let lhs = match phi_element(p, &prod) {
            Ok(x) => x,
            Err(DualityError::Coeff(_)) => continue,
            Err(e) => return Err(e),
        };
        let rhs = phi_word(p, &basis_word(&d2))?.compose(&phi_word(p, &basis_word(&d1))?);
        checked += 1;
        if lhs != rhs {
            failures.push((d1, d2));
        }
    }
    Ok((checked, failures))
}

/// Whether `Φ(e)` is a two-factor block tensored with the identity.
pub fn e_is_local(p: &ParamSet) -> Result<bool, DualityError> {
    let full = qbrauer_action(p, Letter::E)?;
    let mut two = p.clone();
    two.n = 2;
    let block = qbrauer_action(&two, Letter::E)?;
    for w in all_words(p.dim(), p.n) {
        let col = full.column(&w);
        let local = block.column(&w[..2]);
        let mut expect = TensorVector::zero();
        for (u, c) in local.terms() {
            let mut x = u.clone();
            x.extend_from_slice(&w[2..]);
            expect.add_term(x, c.clone());
        }
        if col != expect {
            return Ok(false);
        }
    }
    Ok(true)
}
