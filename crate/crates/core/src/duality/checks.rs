use crate::algebra::Letter;
use crate::coeff::{FieldElem, Rational};

use super::action::{qbrauer_action, CheckResult};
use super::params::{DualityError, DualityType, ParamSet};
use super::qgroup::{aii_coproduct_b, b_operator_on, iquantum_generators, qgroup_generator, Gen};
use super::tensor::TensorOperator;

/// `Φ(H_j)` for all `j` and `Φ(e)`, named.
pub fn qbrauer_generators(p: &ParamSet) -> Result<Vec<(String, TensorOperator)>, DualityError> {
    let mut out = Vec::new();
    for j in 1..p.n {
        out.push((format!("H_{j}"), qbrauer_action(p, Letter::H(j))?));
    }
    if p.n >= 2 {
        out.push(("e".to_string(), qbrauer_action(p, Letter::E)?));
    }
    Ok(out)
}

/// `[X, Φ(g)] = 0` for every ıquantum generator `X` and q-Brauer generator `g`.
pub fn commutation_check(p: &ParamSet, with_rho: bool) -> Result<Vec<CheckResult>, DualityError> {
    use rayon::prelude::*;
    let xs = iquantum_generators(p, with_rho)?;
    let gs = qbrauer_generators(p)?;
    let pairs: Vec<_> = xs.iter().flat_map(|x| gs.iter().map(move |g| (x, g))).collect();
    Ok(pairs
        .par_iter()
        .map(|(x, (gname, g))| CheckResult {
            name: format!("[{}, {}]", x.name, gname),
            holds: x.op.commutator(g).is_zero(),
        })
        .collect())
}

fn q_int(a: i32) -> FieldElem {
    (&FieldElem::q_pow(a) - &FieldElem::q_pow(-a)).checked_div(&FieldElem::qdiff()).unwrap()
}

/// The `U_q(sl_dim)` relations on the tensor space.
pub fn qgroup_relations_check(p: &ParamSet) -> Result<Vec<CheckResult>, DualityError> {
    let r = p.dim() - 1;
    let g = |x: Gen| qgroup_generator(p, x);
    let id = TensorOperator::identity(p.dim(), p.n);
    let mut out = Vec::new();
    let mut push = |name: String, holds: bool| out.push(CheckResult { name, holds });
    for i in 1..=r {
        let (e, f, k, ki) = (g(Gen::E(i))?, g(Gen::F(i))?, g(Gen::K(i))?, g(Gen::KInv(i))?);
        push(format!("K_{i} K_{i}^-1 = 1"), k.compose(&ki) == id);
        for j in 1..=r {
            let a = if i == j {
                2
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            };
            let (ej, fj, kj) = (g(Gen::E(j))?, g(Gen::F(j))?, g(Gen::K(j))?);
            push(format!("K_{i} K_{j} = K_{j} K_{i}"), k.commutator(&kj).is_zero());
            push(format!("K_{i} E_{j} K_{i}^-1"), k.compose(&ej).compose(&ki) == ej.scale(&FieldElem::q_pow(a)));
            push(format!("K_{i} F_{j} K_{i}^-1"), k.compose(&fj).compose(&ki) == fj.scale(&FieldElem::q_pow(-a)));
            let comm = e.commutator(&fj);
            let expect = if i == j {
                k.sub(&ki).scale(&FieldElem::qdiff().inv().unwrap())
            } else {
                TensorOperator::zero(p.dim(), p.n)
            };
            push(format!("[E_{i}, F_{j}]"), comm == expect);
            if i == j {
                continue;
            }
            let two = q_int(2);
            for (name, xi, xj) in [("E", &e, &ej), ("F", &f, &fj)] {
                let holds = if a == 0 {
                    xi.commutator(xj).is_zero()
                } else {
                    let mut s = xi.compose(xi).compose(xj);
                    s.add_scaled(&xi.compose(xj).compose(xi), &-&two);
                    s.add_scaled(&xj.compose(xi).compose(xi), &FieldElem::one());
                    s.is_zero()
                };
                push(format!("Serre {name}_{i} {name}_{j}"), holds);
            }
        }
    }
    Ok(out)
}

/// AII: `B_2l` from the cubic expansion equals the closed coproduct formula
/// on two factors.
pub fn aii_coproduct_check(p: &ParamSet) -> Result<Vec<CheckResult>, DualityError> {
    if p.variant != DualityType::AII {
        return Ok(Vec::new());
    }
    p.parameter_indices()
        .into_iter()
        .map(|i| {
            Ok(CheckResult {
                name: format!("Δ(B_{i}) on two factors"),
                holds: b_operator_on(p, i, 2)? == aii_coproduct_b(p, i)?,
            })
        })
        .collect()
}

/// At `q = 1` and all `varsigma = -1`, the single-factor `B_i` is
/// `E_{i+1,i} - E_{i,i+1}` (AI) or `E_{i+1,i} + E_{i-1,i+2}` (AII).
pub fn classical_limit_check(p: &ParamSet) -> Result<Vec<CheckResult>, DualityError> {
    let one = Rational::from_integer(1.into());
    let zero = Rational::from_integer(0.into());
    let d = p.dim();
    p.parameter_indices()
        .into_iter()
        .map(|i| {
            let m = b_operator_on(p, i, 1)?.to_matrix(&one)?;
            let mut expect = vec![vec![zero.clone(); d]; d];
            // matrix units E_{r,c} with 1-based indices
            let mut unit = |r: usize, c: usize, v: i64| expect[r - 1][c - 1] = Rational::from_integer(v.into());
            match p.variant {
                DualityType::AI => {
                    unit(i + 1, i, 1);
                    unit(i, i + 1, -1);
                }
                DualityType::AII => {
                    unit(i + 1, i, 1);
                    unit(i - 1, i + 2, 1);
                }
            }
            Ok(CheckResult { name: format!("B_{i} at q = 1"), holds: m == expect })
        })
        .collect()
}
