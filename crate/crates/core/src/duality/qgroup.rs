//! `U_q(sl)` generators on `V^{⊗n}` and the generators of the ıquantum groups.

use serde::Serialize;

use crate::coeff::FieldElem;

use super::params::{DualityError, DualityType, ParamSet};
use super::tensor::{TensorOperator, TensorVector, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

/// Eigenvalue exponent of `K_i` on `v_r`.
fn k_exp(i: usize, r: u8) -> i32 {
    let r = r as usize;
    if r == i {
        1
    } else if r == i + 1 {
        -1
    } else {
        0
    }
}

fn check_index(p: &ParamSet, i: usize) -> Result<(), DualityError> {
    if i == 0 || i >= p.dim() {
        Err(DualityError::BadIndex(i))
    } else {
        Ok(())
    }
}

/// The generator on `n` factors through the iterated coproduct: `E_i` at
/// position `j` with `K_i` on earlier positions, `F_i` with `K_i^-1` on
/// later ones, `K_i^±1` diagonal.
pub fn qgroup_generator_on(p: &ParamSet, g: Gen, n: usize) -> Result<TensorOperator, DualityError> {
    let (Gen::E(i) | Gen::F(i) | Gen::K(i) | Gen::KInv(i)) = g;
    check_index(p, i)?;
    let dim = p.dim();
    Ok(TensorOperator::from_fn(dim, n, |w: &Word| {
        let mut out = TensorVector::zero();
        match g {
            Gen::K(_) | Gen::KInv(_) => {
                let s: i32 = w.iter().map(|&a| k_exp(i, a)).sum();
                let s = if matches!(g, Gen::K(_)) { s } else { -s };
                out.add_term(w.clone(), FieldElem::q_pow(s));
            }
            Gen::E(_) => {
                let mut twist = 0;
                for j in 0..w.len() {
                    if w[j] as usize == i + 1 {
                        let mut u = w.clone();
                        u[j] = i as u8;
                        out.add_term(u, FieldElem::q_pow(twist));
                    }
                    twist += k_exp(i, w[j]);
                }
            }
            Gen::F(_) => {
                let mut twist = 0;
                for j in (0..w.len()).rev() {
                    if w[j] as usize == i {
                        let mut u = w.clone();
                        u[j] = i as u8 + 1;
                        out.add_term(u, FieldElem::q_pow(-twist));
                    }
                    twist += k_exp(i, w[j]);
                }
            }
        }
        out
    }))
}

pub fn qgroup_generator(p: &ParamSet, g: Gen) -> Result<TensorOperator, DualityError> {
    qgroup_generator_on(p, g, p.n)
}

fn product(p: &ParamSet, gens: &[Gen], n: usize) -> Result<TensorOperator, DualityError> {
    let mut acc = TensorOperator::identity(p.dim(), n);
    for g in gens {
        acc = acc.compose(&qgroup_generator_on(p, *g, n)?);
    }
    Ok(acc)
}

/// `T_{i-1} T_{i+1}(E_i)` expanded as a cubic in the `E`'s.
fn braided_e(p: &ParamSet, i: usize, n: usize) -> Result<TensorOperator, DualityError> {
    use Gen::E;
    let qi = FieldElem::q_pow(-1);
    let mut t = product(p, &[E(i + 1), E(i - 1), E(i)], n)?;
    t.add_scaled(&product(p, &[E(i - 1), E(i), E(i + 1)], n)?, &-&qi);
    t.add_scaled(&product(p, &[E(i + 1), E(i), E(i - 1)], n)?, &-&qi);
    t.add_scaled(&product(p, &[E(i), E(i - 1), E(i + 1)], n)?, &FieldElem::q_pow(-2));
    Ok(t)
}

/// `B_i` on `n` factors.
pub fn b_operator_on(p: &ParamSet, i: usize, n: usize) -> Result<TensorOperator, DualityError> {
    if !p.parameter_indices().contains(&i) {
        return Err(DualityError::BadIndex(i));
    }
    let f = qgroup_generator_on(p, Gen::F(i), n)?;
    let kinv = qgroup_generator_on(p, Gen::KInv(i), n)?;
    let e = match p.variant {
        DualityType::AI => qgroup_generator_on(p, Gen::E(i), n)?,
        DualityType::AII => braided_e(p, i, n)?,
    };
    Ok(f.add(&e.compose(&kinv).scale(p.varsigma(i))))
}

pub fn b_operator(p: &ParamSet, i: usize) -> Result<TensorOperator, DualityError> {
    b_operator_on(p, i, p.n)
}

/// The closed two-factor formula for `Δ(B_2l)` in type AII:
/// `B⊗K^-1 + 1⊗F + ς(q-q^-1) E_{2l+1}⊗E_{2l-1}E_{2l}
///  - ς(q^-1-q^-3) E_{2l-1}⊗E_{2l}E_{2l+1} - ς q^-1 K_{2l-1}K_{2l+1}⊗E_{2l-1}E_{2l}E_{2l+1}`.
pub fn aii_coproduct_b(p: &ParamSet, i: usize) -> Result<TensorOperator, DualityError> {
    if p.variant != DualityType::AII || !p.parameter_indices().contains(&i) {
        return Err(DualityError::BadIndex(i));
    }
    use Gen::{E, F, K, KInv};
    let one = |g: &[Gen]| product(p, g, 1);
    let s = p.varsigma(i);
    let mut out = TensorOperator::kron(&b_operator_on(p, i, 1)?, &one(&[KInv(i)])?);
    out.add_scaled(&TensorOperator::kron(&one(&[])?, &one(&[F(i)])?), &FieldElem::one());
    out.add_scaled(&TensorOperator::kron(&one(&[E(i + 1)])?, &one(&[E(i - 1), E(i)])?), &(s * &FieldElem::qdiff()));
    let c2 = &FieldElem::q_pow(-1) - &FieldElem::q_pow(-3);
    out.add_scaled(&TensorOperator::kron(&one(&[E(i - 1)])?, &one(&[E(i), E(i + 1)])?), &-&(s * &c2));
    out.add_scaled(
        &TensorOperator::kron(&one(&[K(i - 1), K(i + 1)])?, &one(&[E(i - 1), E(i), E(i + 1)])?),
        &-&(s * &FieldElem::q_pow(-1)),
    );
    Ok(out)
}

/// `ϱ`: `-1` on `v_1`, identity on the other basis vectors, extended
/// diagonally.
pub fn rho_operator(p: &ParamSet) -> TensorOperator {
    TensorOperator::from_fn(p.dim(), p.n, |w| {
        let ones = w.iter().filter(|&&a| a == 1).count();
        TensorVector::term(w.clone(), FieldElem::from_int(if ones % 2 == 0 { 1 } else { -1 }))
    })
}

/// A named generator of the ıquantum group.
#[derive(Clone, Debug)]
pub struct NamedOperator {
    pub name: String,
    pub op: TensorOperator,
}

/// AI: the `B_i` (and `ϱ` if asked). AII: the `B_i` for even `i` and
/// `E_j, F_j, K_j^±1` for odd `j`.
pub fn iquantum_generators(p: &ParamSet, with_rho: bool) -> Result<Vec<NamedOperator>, DualityError> {
    let mut out = Vec::new();
    for i in p.parameter_indices() {
        out.push(NamedOperator { name: format!("B_{i}"), op: b_operator(p, i)? });
    }
    if p.variant == DualityType::AII {
        for j in (1..p.dim()).step_by(2) {
            for (name, g) in [("E", Gen::E(j)), ("F", Gen::F(j)), ("K", Gen::K(j)), ("K^-1", Gen::KInv(j))] {
                out.push(NamedOperator { name: format!("{name}_{j}"), op: qgroup_generator(p, g)? });
            }
        }
    }
    if with_rho && p.variant == DualityType::AI {
        out.push(NamedOperator { name: "rho".into(), op: rho_operator(p) });
    }
    Ok(out)
}
