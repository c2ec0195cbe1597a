//! The defining relations and the standard identities, evaluated in the
//! normalized basis.

use serde::Serialize;

use crate::coeff::FieldElem;
use crate::diagram::BrauerDiagram;

use super::element::AlgebraElement;
use super::engine::{Letter, QBrauer};

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

/// `sum c_i lhs_i = sum d_j rhs_j`, each term a product of letters.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub lhs: Vec<(FieldElem, Vec<Letter>)>,
    pub rhs: Vec<(FieldElem, Vec<Letter>)>,
}

fn h(i: usize) -> Letter {
    Letter::H(i)
}

fn hi(i: usize) -> Letter {
    Letter::HInv(i)
}

fn ek(k: usize) -> Letter {
    if k == 1 {
        Letter::E
    } else {
        Letter::Ek(k)
    }
}

fn one() -> FieldElem {
    FieldElem::one()
}

fn delta_pow(j: usize) -> FieldElem {
    FieldElem::delta().pow(j as i32).unwrap()
}

fn eq(name: String, l: Vec<Letter>, c: FieldElem, r: Vec<Letter>) -> Identity {
    Identity { name, lhs: vec![(one(), l)], rhs: vec![(c, r)] }
}

/// `H_{l,r}^+` as letters.
fn hplus(l: usize, r: usize) -> Vec<Letter> {
    crate::symgroup::s_range(l, r).into_iter().map(h).collect()
}

fn hminus(l: usize, r: usize) -> Vec<Letter> {
    crate::symgroup::s_range(l, r).into_iter().map(hi).collect()
}

fn cat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// `(Q1)-(Q8)` for `n` strands.
pub fn defining_relations(n: usize) -> Vec<Identity> {
    let q = FieldElem::q();
    let c = FieldElem::qdiff();
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Identity {
            name: format!("(Q1) i={i}"),
            lhs: vec![(one(), vec![h(i), h(i)])],
            rhs: vec![(c.clone(), vec![h(i)]), (one(), vec![])],
        });
    }
    for i in 1..n.saturating_sub(1) {
        out.push(eq(format!("(Q2) i={i}"), vec![h(i), h(i + 1), h(i)], one(), vec![h(i + 1), h(i), h(i + 1)]));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(eq(format!("(Q3) i={i} j={j}"), vec![h(i), h(j)], one(), vec![h(j), h(i)]));
        }
    }
    if n < 2 {
        return out;
    }
    out.push(eq("(Q4)".into(), vec![Letter::E, Letter::E], FieldElem::delta(), vec![Letter::E]));
    out.push(eq("(Q5) left".into(), vec![h(1), Letter::E], q.clone(), vec![Letter::E]));
    out.push(eq("(Q5) right".into(), vec![Letter::E, h(1)], q.clone(), vec![Letter::E]));
    if n >= 3 {
        out.push(eq("(Q6)".into(), vec![Letter::E, h(2), Letter::E], FieldElem::z(), vec![Letter::E]));
    }
    for i in 3..n {
        out.push(eq(format!("(Q7) i={i}"), vec![h(i), Letter::E], one(), vec![Letter::E, h(i)]));
    }
    if n >= 4 {
        let mid = [h(2), h(3), hi(1), hi(2)];
        let e2 = cat(&[&[Letter::E], &mid, &[Letter::E]]);
        out.push(eq("(Q8) left".into(), cat(&[&mid, &e2]), one(), e2.clone()));
        out.push(eq("(Q8) right".into(), cat(&[&e2, &mid]), one(), e2.clone()));
    }
    out
}

fn lemma_identities(n: usize) -> Vec<Identity> {
    let q = FieldElem::q();
    let qinv = FieldElem::q_pow(-1);
    let z = FieldElem::z();
    let mut out = Vec::new();
    let kmax = n / 2;
    if n >= 4 {
        out.push(eq(
            "lemma (1a)".into(),
            vec![Letter::Ek(2)],
            one(),
            vec![Letter::E, hi(2), hi(1), h(3), h(2), Letter::E],
        ));
        out.push(eq(
            "lemma (1b)".into(),
            vec![Letter::Ek(2)],
            one(),
            vec![Letter::E, hi(2), hi(3), h(1), h(2), Letter::E],
        ));
    }
    for k in 1..=kmax {
        for j in 0..k {
            let g = 2 * j + 1;
            if g >= n {
                continue;
            }
            out.push(eq(format!("lemma (2) k={k} j={j} left"), vec![h(g), ek(k)], q.clone(), vec![ek(k)]));
            out.push(eq(format!("lemma (2) k={k} j={j} right"), vec![ek(k), h(g)], q.clone(), vec![ek(k)]));
            out.push(eq(format!("lemma (2) k={k} j={j} inverse"), vec![hi(g), ek(k)], qinv.clone(), vec![ek(k)]));
            out.push(eq(
                format!("lemma (2) k={k} j={j} inverse right"),
                vec![ek(k), hi(g)],
                qinv.clone(),
                vec![ek(k)],
            ));
        }
        for j in 1..k {
            let (a, b, c) = (2 * j - 1, 2 * j, 2 * j + 1);
            out.push(eq(format!("lemma (3) k={k} j={j}"), vec![ek(k), h(b), h(a)], one(), vec![ek(k), h(b), h(c)]));
            out.push(eq(
                format!("lemma (3) k={k} j={j} inverse"),
                vec![ek(k), hi(b), hi(a)],
                one(),
                vec![ek(k), hi(b), hi(c)],
            ));
            out.push(eq(format!("lemma (4) k={k} j={j}"), vec![h(a), h(b), ek(k)], one(), vec![h(c), h(b), ek(k)]));
            out.push(eq(
                format!("lemma (4) k={k} j={j} inverse"),
                vec![hi(a), hi(b), ek(k)],
                one(),
                vec![hi(c), hi(b), ek(k)],
            ));
        }
        if 2 * k + 2 <= n {
            for j in 1..k {
                let rhs = cat(&[&[ek(j)], &hplus(2 * j, 2 * k + 1), &hminus(2 * j - 1, 2 * k), &[ek(k)]]);
                out.push(Identity {
                    name: format!("lemma (5) j={j} k={k}"),
                    lhs: vec![(delta_pow(j - 1), vec![ek(k + 1)])],
                    rhs: vec![(one(), rhs)],
                });
            }
        }
        for j in 1..=k {
            out.push(eq(format!("lemma (6) j={j} k={k} left"), vec![ek(j), ek(k)], delta_pow(j), vec![ek(k)]));
            out.push(eq(format!("lemma (6) j={j} k={k} right"), vec![ek(k), ek(j)], delta_pow(j), vec![ek(k)]));
            if 2 * j >= n {
                continue;
            }
            let zc = &z * &delta_pow(j - 1);
            out.push(eq(format!("lemma (7) j={j} k={k} left"), vec![ek(j), h(2 * j), ek(k)], zc.clone(), vec![ek(k)]));
            out.push(eq(format!("lemma (7) j={j} k={k} right"), vec![ek(k), h(2 * j), ek(j)], zc, vec![ek(k)]));
        }
        for j in 2 * k + 1..n {
            out.push(eq(format!("lemma (8) i={k} j={j}"), vec![ek(k), h(j)], one(), vec![h(j), ek(k)]));
        }
    }
    // e_(l+1) = ((q - q^-1)/(z - z^-1))^(l-1) e_(l) H_2l H_2l+1 H_2l-1^-1 H_2l^-1 e_(l)
    for l in 1..kmax {
        let w = vec![ek(l), h(2 * l), h(2 * l + 1), hi(2 * l - 1), hi(2 * l), ek(l)];
        out.push(Identity {
            name: format!("e_(l+1) via e_(l), l={l}"),
            lhs: vec![(delta_pow(l - 1), vec![ek(l + 1)])],
            rhs: vec![(one(), w)],
        });
    }
    out
}

fn eval_side(alg: &QBrauer, side: &[(FieldElem, Vec<Letter>)]) -> AlgebraElement {
    let mut acc = AlgebraElement::zero(alg.n());
    for (c, w) in side {
        acc.add_scaled(&alg.eval_word(w), c);
    }
    acc
}

fn run(alg: &QBrauer, ids: Vec<Identity>) -> Vec<RelationCheck> {
    ids.into_iter()
        .map(|id| {
            let holds = eval_side(alg, &id.lhs) == eval_side(alg, &id.rhs);
            RelationCheck { name: id.name, holds }
        })
        .collect()
}

/// `(Q1)-(Q8)` as elements.
pub fn check_defining_relations(alg: &QBrauer) -> Vec<RelationCheck> {
    run(alg, defining_relations(alg.n()))
}

/// The eight lemma identities and the second formula for `e_(l+1)`.
pub fn check_lemma_identities(alg: &QBrauer) -> Vec<RelationCheck> {
    run(alg, lemma_identities(alg.n()))
}

/// `(Q1)-(Q8)` as left multiplication operators on every basis element,
/// which is stronger than checking them on the unit.
pub fn check_relations_on_basis(alg: &QBrauer) -> Vec<RelationCheck> {
    let basis: Vec<BrauerDiagram> = alg.basis();
    defining_relations(alg.n())
        .into_iter()
        .map(|id| {
            let act = |side: &[(FieldElem, Vec<Letter>)], x: &AlgebraElement| {
                let mut acc = AlgebraElement::zero(alg.n());
                for (c, w) in side {
                    let y = w.iter().rev().fold(x.clone(), |a, &l| alg.apply_letter_left(l, &a));
                    acc.add_scaled(&y, c);
                }
                acc
            };
            let holds = basis.iter().all(|d| {
                let x = AlgebraElement::basis(*d);
                act(&id.lhs, &x) == act(&id.rhs, &x)
            });
            RelationCheck { name: id.name, holds }
        })
        .collect()
}
