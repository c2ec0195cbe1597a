use std::collections::{BTreeSet, HashMap};

use crate::diagram::BrauerDiagram;

use super::perm::{s_range, Perm};

/// A factorization `t_{n-1} ... t_{2k} t_{2k-2} ... t_2`. Each entry is
/// `(j, None)` for `t_j = 1` or `(j, Some(i))` for `t_j = s_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TTuple {
    pub n: usize,
    pub factors: Vec<(usize, Option<usize>)>,
}

impl TTuple {
    pub fn word(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|&(j, i)| i.map(|i| s_range(i, j)).unwrap_or_default())
            .collect()
    }

    pub fn product(&self) -> Perm {
        Perm::from_word(self.n, &self.word())
    }

    pub fn factor_lengths(&self) -> usize {
        self.factors.iter().map(|&(j, i)| i.map_or(0, |i| j + 1 - i)).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BSet {
    BstarK,
    BK,
    BstarKN,
    BKN,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BSetError {
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("{0} is not in the required set")]
    NotMember(Perm),
}

/// The `j` indices of a `B*_k` factorization, in product order.
fn t_indices(n: usize, k: usize) -> Vec<usize> {
    if k == 0 {
        return (1..n).rev().collect();
    }
    let mut v: Vec<usize> = (2 * k..n).rev().collect();
    v.extend((1..k).rev().map(|i| 2 * i));
    v
}

/// Every `TTuple` for `B*_k`, in lexicographic order of choices.
pub fn ttuples(n: usize, k: usize) -> Vec<TTuple> {
    let js = t_indices(n, k);
    let mut out = vec![TTuple { n, factors: Vec::new() }];
    for &j in &js {
        let mut next = Vec::with_capacity(out.len() * (j + 1));
        for t in &out {
            for choice in std::iter::once(None).chain((1..=j).map(Some)) {
                let mut f = t.factors.clone();
                f.push((j, choice));
                next.push(TTuple { n, factors: f });
            }
        }
        out = next;
    }
    out
}

/// Whether `w` lies in `B*_{k,n}`: `w e_(k)` has the bottom row of `e_(k)`,
/// no crossing vertical edges, and length `l(w)`.
pub fn in_bstar_kn(w: &Perm, k: usize) -> bool {
    let n = w.n();
    let d = BrauerDiagram::from_perm(w).concat(&BrauerDiagram::e_k(n, k)).0;
    let sorted = d.top_state().labels.windows(2).all(|p| p[0] < p[1]);
    let (bot, ek) = (d.bottom_state(), BrauerDiagram::e_k(n, k).bottom_state());
    bot.arcs == ek.arcs && sorted && d.length() == w.length()
}

pub fn enumerate_b_sets(n: usize, k: usize, which: BSet) -> Result<Vec<Perm>, BSetError> {
    if 2 * k > n {
        return Err(BSetError::KOutOfRange { n, k });
    }
    let bstar: BTreeSet<Perm> = ttuples(n, k).iter().map(TTuple::product).collect();
    let out: Vec<Perm> = match which {
        BSet::BstarK => bstar.into_iter().collect(),
        BSet::BK => bstar.iter().map(Perm::inverse).collect::<BTreeSet<_>>().into_iter().collect(),
        BSet::BstarKN => bstar.into_iter().filter(|w| in_bstar_kn(w, k)).collect(),
        BSet::BKN => bstar
            .into_iter()
            .filter(|w| in_bstar_kn(w, k))
            .map(|w| w.inverse())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    };
    Ok(out)
}

/// Whether `w` fixes `1..2k` pointwise, i.e. lies in `S_{2k+1,n}`.
pub fn in_tail_group(w: &Perm, k: usize) -> bool {
    (0..2 * k).all(|i| w.apply(i) == i)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Factor `sigma` in `B*_k` as `omega' pi'` (left) or `sigma` in `B_k` as
/// `tau' varpi'` (right), with additive lengths.
pub fn factorize_bk(sigma: &Perm, k: usize, side: Side) -> Result<(Perm, Perm), BSetError> {
    let n = sigma.n();
    if 2 * k > n {
        return Err(BSetError::KOutOfRange { n, k });
    }
    let members = enumerate_b_sets(n, k, BSet::BstarK)?;
    let target = match side {
        Side::Left => *sigma,
        Side::Right => sigma.inverse(),
    };
    if !members.contains(&target) {
        return Err(BSetError::NotMember(*sigma));
    }
    // The B*_{k,n} factor is determined by the top row of target * e_(k).
    let d = BrauerDiagram::from_perm(&target).concat(&BrauerDiagram::e_k(n, k)).0;
    let key = (d.top_state().arcs, d.top_state().free);
    let table: HashMap<_, Perm> = enumerate_b_sets(n, k, BSet::BstarKN)?
        .into_iter()
        .map(|w| {
            let e = BrauerDiagram::from_perm(&w).concat(&BrauerDiagram::e_k(n, k)).0;
            ((e.top_state().arcs, e.top_state().free), w)
        })
        .collect();
    let omega = table[&key];
    let pi = omega.inverse() * target;
    debug_assert!(in_tail_group(&pi, k));
    Ok(match side {
        Side::Left => (omega, pi),
        Side::Right => (pi.inverse(), omega.inverse()),
    })
}
