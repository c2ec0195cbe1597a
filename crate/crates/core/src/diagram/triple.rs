use crate::symgroup::{Perm, TTuple};

use super::BrauerDiagram;

/// The reduced triple of a diagram: `d = w1 e_(k) wd w2` with additive lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiagramTriple {
    pub omega1: Perm,
    pub omega_d: Perm,
    pub omega2: Perm,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaReduction {
    pub sigma: Perm,
    pub witness: TTuple,
}

/// The unique `sigma` in `B*_k` with `w e_(k) = sigma e_(k)`, found by
/// peeling `t_{n-1}, ..., t_{2k}` and then `t_{2k-2}, ..., t_2`.
pub fn sigma_reduce(w: &Perm, k: usize) -> SigmaReduction {
    let n = w.n();
    assert!(2 * k <= n);
    let mut d = BrauerDiagram::from_perm(w).concat(&BrauerDiagram::e_k(n, k)).0;
    let mut factors = Vec::new();
    let lo = if k == 0 { 2 } else { 2 * k + 1 };
    for j in (lo..=n).rev() {
        // top endpoint of the vertical edge at bottom vertex j'
        let r = d.partner(n + j - 1) + 1;
        debug_assert!(r <= j);
        if r == j {
            factors.push((j - 1, None));
        } else {
            factors.push((j - 1, Some(r)));
            for i in r..j {
                d = d.left_simple(i);
            }
        }
    }
    let mut j = 2 * k;
    while j >= 4 {
        // vertex j is joined to some vertex i <= j - 1
        let i = d.partner(j - 1) + 1;
        if i == j - 1 {
            factors.push((j - 2, None));
        } else {
            factors.push((j - 2, Some(i)));
            for g in i..j - 1 {
                d = d.left_simple(g);
            }
        }
        j -= 2;
    }
    debug_assert_eq!(d, BrauerDiagram::e_k(n, k));
    let witness = TTuple { n, factors };
    SigmaReduction { sigma: witness.product(), witness }
}

/// Element of `B*_{k,n}` whose product with `e_(k)` has the given top row.
fn omega_for_top(d: &BrauerDiagram) -> Perm {
    let st = d.top_state();
    let k = st.arcs.len();
    let mut arcs = st.arcs.clone();
    arcs.sort();
    let mut img = Vec::with_capacity(d.n());
    for &(a, b) in &arcs {
        img.push(a + 1);
        img.push(b + 1);
    }
    img.extend(st.free.iter().map(|f| f + 1));
    let w = Perm::from_one_line(&img).unwrap();
    sigma_reduce(&w, k).sigma
}

pub fn triple_decompose(d: &BrauerDiagram) -> DiagramTriple {
    let n = d.n();
    let k = d.rank();
    if k == 0 {
        let w = d.as_perm().unwrap();
        let id = Perm::identity(n);
        return DiagramTriple { omega1: id, omega_d: w, omega2: id, k };
    }
    let omega1 = omega_for_top(d);
    let omega2 = omega_for_top(&d.flip()).inverse();
    // Free top points in order and the ranks of their bottom partners.
    let top = d.top_state();
    let bottom_free = d.bottom_state().free;
    let mut img: Vec<usize> = (1..=n).collect();
    for (i, &g) in top.labels.iter().enumerate() {
        let pi = bottom_free.iter().position(|&x| x == g).unwrap();
        img[2 * k + pi] = 2 * k + i + 1;
    }
    let omega_d = Perm::from_one_line(&img).unwrap();
    DiagramTriple { omega1, omega_d, omega2, k }
}

/// Rebuild the diagram `w1 e_(k) wd w2`.
pub fn rho_compose(t: &DiagramTriple) -> BrauerDiagram {
    let n = t.omega1.n();
    BrauerDiagram::from_perm(&t.omega1)
        .concat(&BrauerDiagram::e_k(n, t.k))
        .0
        .concat(&BrauerDiagram::from_perm(&t.omega_d))
        .0
        .concat(&BrauerDiagram::from_perm(&t.omega2))
        .0
}
