use std::collections::BTreeMap;

use qbrauer::algebra::Letter;
use qbrauer::coeff::{FieldElem, Rational};
use qbrauer::duality::*;

fn ai(m: usize, n: usize) -> ParamSet {
    ParamSet::new(DualityType::AI, m, n).unwrap()
}

fn aii(m: usize, n: usize) -> ParamSet {
    ParamSet::new(DualityType::AII, m, n).unwrap()
}

fn qp(e: i32) -> FieldElem {
    FieldElem::q_pow(e)
}

fn vec_of(terms: &[(&[u8], FieldElem)]) -> TensorVector {
    let mut v = TensorVector::zero();
    for (w, c) in terms {
        v.add_term(w.to_vec(), c.clone());
    }
    v
}

fn all_hold(rs: &[CheckResult]) {
    let bad: Vec<_> = rs.iter().filter(|r| !r.holds).map(|r| r.name.as_str()).collect();
    assert!(bad.is_empty(), "failed: {bad:?}");
}

/// Generic parameters: `varsigma_i = z^(i)` keeps them independent of `q`.
fn generic(variant: DualityType, m: usize, n: usize) -> ParamSet {
    let p = ParamSet::new(variant, m, n).unwrap();
    let over: BTreeMap<_, _> =
        p.parameter_indices().into_iter().enumerate().map(|(k, i)| (i, FieldElem::monomial(1, 0, k as i32 + 1))).collect();
    ParamSet::with_parameters(variant, m, n, over).unwrap()
}

#[test]
fn quantum_group_on_small_tensors() {
    let p = ai(2, 1);
    let e1 = qgroup_generator(&p, Gen::E(1)).unwrap();
    assert_eq!(e1.column(&[2]), TensorVector::basis(vec![1]));
    assert!(e1.column(&[1]).is_zero());
    let k = qgroup_generator(&ai(2, 2), Gen::K(1)).unwrap();
    assert_eq!(k.column(&[1, 1]), vec_of(&[(&[1, 1], qp(2))]));
    assert_eq!(k.column(&[1, 2]), TensorVector::basis(vec![1, 2]));
    for p in [ai(3, 2), ai(3, 3), aii(2, 2)] {
        all_hold(&qgroup_relations_check(&p).unwrap());
    }
}

#[test]
fn ai_e_action() {
    // v_a ⊗ v_a · e = tau_a sum_i tau_i^-1 q^(m-2i+1) v_i ⊗ v_i, and 0 off the diagonal
    let p = ai(2, 2);
    let e = qbrauer_action(&p, Letter::E).unwrap();
    assert!(e.column(&[1, 2]).is_zero());
    let col = e.column(&[1, 1]);
    // tau_1 = 1 and tau_2 = -varsigma_1 = 1
    assert_eq!(col, vec_of(&[(&[1, 1], qp(1)), (&[2, 2], qp(-1))]));
    assert_eq!(e.column(&[2, 2]), col);
    let g = generic(DualityType::AI, 2, 2);
    let s = g.varsigma(1).clone();
    let e = qbrauer_action(&g, Letter::E).unwrap();
    assert_eq!(e.column(&[2, 2]), vec_of(&[(&[1, 1], -&(&s * &qp(1))), (&[2, 2], qp(-1))]));
    assert!(e_is_local(&ai(3, 3)).unwrap());
}

#[test]
fn aii_e_action() {
    let p = aii(1, 2);
    let e = qbrauer_action(&p, Letter::E).unwrap();
    let expect = vec_of(&[(&[1, 2], qp(-1)), (&[2, 1], -FieldElem::one())]);
    assert_eq!(e.column(&[1, 2]), expect);
    // e H_1 = q e specializes to -q^-1 e
    let h = qbrauer_action(&p, Letter::H(1)).unwrap();
    assert_eq!(h.compose(&e), e.scale(&-qp(-1)));
    assert!(e.column(&[1, 1]).is_zero());
    assert!(e_is_local(&aii(2, 3)).unwrap());
}

#[test]
fn aii_b_examples() {
    let p = generic(DualityType::AII, 2, 2);
    let s = p.varsigma(2).clone();
    let b = b_operator(&p, 2).unwrap();
    assert_eq!(b.column(&[4, 3]), vec_of(&[(&[1, 3], -s.clone()), (&[3, 1], &s * &FieldElem::qdiff())]));
    assert_eq!(b.column(&[1, 2]), vec_of(&[(&[1, 3], FieldElem::one())]));
    assert_eq!(b.column(&[3, 4]), vec_of(&[(&[3, 1], -s.clone())]));
    assert_eq!(b.column(&[2, 1]), vec_of(&[(&[3, 1], FieldElem::one())]));
    all_hold(&aii_coproduct_check(&p).unwrap());
    all_hold(&aii_coproduct_check(&generic(DualityType::AII, 3, 2)).unwrap());
}

#[test]
fn defining_relations_hold_on_tensor_space() {
    for p in [ai(2, 3), ai(3, 3), aii(1, 3), aii(2, 3), ai(2, 4)] {
        all_hold(&relations_check(&p).unwrap());
    }
}

#[test]
fn relation_eight_at_rank_four() {
    let rs = relations_check(&ai(3, 4)).unwrap();
    let q8: Vec<_> = rs.iter().filter(|r| r.name.contains("Q8")).cloned().collect();
    assert!(!q8.is_empty());
    all_hold(&q8);
}

#[test]
fn multiplication_is_respected() {
    for p in [ai(2, 3), aii(1, 3), ai(3, 3)] {
        let (checked, failures) = representation_check(&p, 60, 7).unwrap();
        assert!(checked > 30, "{checked}");
        assert!(failures.is_empty(), "{failures:?}");
    }
}

#[test]
fn actions_commute() {
    for p in [ai(2, 2), ai(3, 3), aii(1, 3), aii(2, 2), aii(2, 3)] {
        all_hold(&commutation_check(&p, true).unwrap());
    }
    for p in [generic(DualityType::AI, 3, 3), generic(DualityType::AII, 2, 3)] {
        all_hold(&commutation_check(&p, false).unwrap());
    }
}

#[test]
fn classical_limits() {
    for p in [ai(2, 1), ai(4, 1), aii(2, 1), aii(3, 1)] {
        all_hold(&classical_limit_check(&p).unwrap());
    }
}

#[test]
fn centralizer_dimensions() {
    let q = Rational::new(5.into(), 7.into());
    let d = centralizer_dims(&ai(3, 2), q.clone(), 1, false, DEFAULT_MAX_TENSOR_DIM).unwrap();
    assert_eq!((d.dim_qbrauer_image, d.dim_commutant_of_uq), (3, 3));
    assert!(d.double_centralizer(), "{d:?}");
    let d = centralizer_dims(&ai(2, 2), q.clone(), 1, false, DEFAULT_MAX_TENSOR_DIM).unwrap();
    assert!(d.dim_commutant_of_uq > 3, "{d:?}");
    let d = centralizer_dims(&aii(1, 2), q.clone(), 1, false, DEFAULT_MAX_TENSOR_DIM).unwrap();
    assert!(d.double_centralizer(), "{d:?}");
    let d = centralizer_dims(&ai(3, 3), q.clone(), 1, false, DEFAULT_MAX_TENSOR_DIM).unwrap();
    assert!(d.double_centralizer(), "{d:?}");
    assert!(matches!(
        centralizer_dims(&ai(9, 4), q, 1, false, DEFAULT_MAX_TENSOR_DIM),
        Err(DualityError::TooLarge { .. })
    ));
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(ParamSet::new(DualityType::AI, 1, 2).is_err());
    assert!(ParamSet::new(DualityType::AII, 2, 0).is_err());
    let zero: BTreeMap<_, _> = [(1, FieldElem::zero())].into_iter().collect();
    assert!(matches!(
        ParamSet::with_parameters(DualityType::AI, 2, 2, zero),
        Err(DualityError::ZeroParameter(1))
    ));
    let odd: BTreeMap<_, _> = [(1, FieldElem::one())].into_iter().collect();
    assert!(ParamSet::with_parameters(DualityType::AII, 2, 2, odd).is_err());
    assert!(qbrauer_action(&ai(2, 2), Letter::H(2)).is_err());
}

#[test]
fn b_on_one_factor() {
    let p = generic(DualityType::AI, 3, 1);
    let b = b_operator(&p, 1).unwrap();
    assert_eq!(b.column(&[1]), TensorVector::basis(vec![2]));
    assert_eq!(b.column(&[2]), vec_of(&[(&[1], &qp(1) * p.varsigma(1))]));
    assert!(b.column(&[3]).is_zero());
    let p = generic(DualityType::AII, 2, 1);
    let b = b_operator(&p, 2).unwrap();
    assert_eq!(b.column(&[2]), TensorVector::basis(vec![3]));
    assert_eq!(b.column(&[4]), vec_of(&[(&[1], -&(&qp(-1) * p.varsigma(2)))]));
    assert!(b.column(&[1]).is_zero() && b.column(&[3]).is_zero());
}

#[test]
fn e_squared_at_rank_two() {
    let p = ai(2, 2);
    let e = qbrauer_action(&p, Letter::E).unwrap();
    let two = (&qp(2) - &qp(-2)).checked_div(&FieldElem::qdiff()).unwrap();
    assert_eq!(e.compose(&e), e.scale(&two));
}

#[test]
fn rho_removes_the_parity_condition() {
    let q = Rational::new(5.into(), 7.into());
    for (m, n) in [(2, 2), (4, 2)] {
        let without = centralizer_dims(&ai(m, n), q.clone(), 0, false, DEFAULT_MAX_TENSOR_DIM).unwrap();
        assert!(!without.double_centralizer(), "{without:?}");
        let with = centralizer_dims(&ai(m, n), q.clone(), 0, true, DEFAULT_MAX_TENSOR_DIM).unwrap();
        assert!(with.double_centralizer(), "{with:?}");
    }
}
