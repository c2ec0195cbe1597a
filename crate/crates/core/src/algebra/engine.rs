//! Multiplication in the standard basis.
//!
//! Left multiplication by `H_i` follows the length rule on diagrams. Left
//! multiplication by `e` is reduced along parabolic descents
//! `s_1, s_3, s_4, ..., s_{n-1}` of the top row (which commute with `e` up to
//! the scalar `q` for `s_1`) until the top row is minimal; the minimal
//! configurations are resolved by `(Q4)`, `(Q6)` and the defining word of
//! `e_(k+1)`. Right multiplication is obtained through the anti-involution.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::RwLock;

use crate::coeff::FieldElem;
use crate::diagram::{sigma_reduce, triple_decompose, BrauerDiagram};
use crate::symgroup::Perm;

use super::element::AlgebraElement;

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("n = {0} is outside the supported range 1..={1}")]
    BadN(usize, usize),
    #[error("k = {k} out of range for n = {n}")]
    BadK { n: usize, k: usize },
    #[error("element lives in B_{0}, expected B_{1}")]
    WrongN(usize, usize),
}

/// The algebra `B_n(q, z)` with memoized generator actions.
pub struct QBrauer {
    n: usize,
    c: FieldElem,
    delta: FieldElem,
    left_e_memo: RwLock<HashMap<BrauerDiagram, AlgebraElement>>,
    left_ek_memo: RwLock<HashMap<(usize, BrauerDiagram), AlgebraElement>>,
    fv_memo: RwLock<HashMap<usize, AlgebraElement>>,
}

thread_local! {
    static IN_PROGRESS: RefCell<HashSet<(usize, BrauerDiagram)>> = RefCell::new(HashSet::new());
}

/// A letter of a word in the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    H(usize),
    HInv(usize),
    E,
    /// The element `e_(k)`.
    Ek(usize),
}

impl QBrauer {
    pub fn new(n: usize) -> Result<Self, AlgebraError> {
        if n == 0 || n > crate::symgroup::MAX_N {
            return Err(AlgebraError::BadN(n, crate::symgroup::MAX_N));
        }
        Ok(QBrauer {
            n,
            c: FieldElem::qdiff(),
            delta: FieldElem::delta(),
            left_e_memo: RwLock::new(HashMap::new()),
            left_ek_memo: RwLock::new(HashMap::new()),
            fv_memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self.n)
    }

    pub fn basis(&self) -> Vec<BrauerDiagram> {
        let mut v = BrauerDiagram::enumerate(self.n, None);
        v.sort_by_key(|d| (d.length(), *d));
        v
    }

    /// `H_i H_d` for a single basis diagram.
    fn left_h_basis(&self, i: usize, d: &BrauerDiagram, c: &FieldElem, out: &mut AlgebraElement) {
        let d2 = d.left_simple(i);
        if d2 == *d {
            out.add_term(*d, c * &FieldElem::q());
            return;
        }
        let (l, l2) = (d.length(), d2.length());
        if l2 == l + 1 {
            out.add_term(d2, c.clone());
        } else {
            assert_eq!(l2 + 1, l, "length must change by one under s_{i}: {d} -> {d2}");
            out.add_term(d2, c.clone());
            out.add_term(*d, c * &self.c);
        }
    }

    fn right_h_basis(&self, i: usize, d: &BrauerDiagram, c: &FieldElem, out: &mut AlgebraElement) {
        let d2 = d.right_simple(i);
        if d2 == *d {
            out.add_term(*d, c * &FieldElem::q());
            return;
        }
        let (l, l2) = (d.length(), d2.length());
        if l2 == l + 1 {
            out.add_term(d2, c.clone());
        } else {
            assert_eq!(l2 + 1, l, "length must change by one under s_{i}: {d} -> {d2}");
            out.add_term(d2, c.clone());
            out.add_term(*d, c * &self.c);
        }
    }

    pub fn left_h(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        assert!((1..self.n).contains(&i), "generator H_{i} out of range for n = {}", self.n);
        let mut out = AlgebraElement::zero(self.n);
        for (d, c) in x.terms() {
            self.left_h_basis(i, d, c, &mut out);
        }
        out
    }

    pub fn right_h(&self, x: &AlgebraElement, i: usize) -> AlgebraElement {
        assert!((1..self.n).contains(&i), "generator H_{i} out of range for n = {}", self.n);
        let mut out = AlgebraElement::zero(self.n);
        for (d, c) in x.terms() {
            self.right_h_basis(i, d, c, &mut out);
        }
        out
    }

    /// `H_i^-1 x`, with `H_i^-1 = H_i - (q - q^-1)`.
    pub fn left_h_inv(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        let mut out = self.left_h(i, x);
        out.add_scaled(x, &(-&self.c));
        out
    }

    pub fn right_h_inv(&self, x: &AlgebraElement, i: usize) -> AlgebraElement {
        let mut out = self.right_h(x, i);
        out.add_scaled(x, &(-&self.c));
        out
    }

    /// `H_w x` for a word `w = s_i1 ... s_ir` (applied right to left).
    pub fn left_word(&self, word: &[usize], x: &AlgebraElement) -> AlgebraElement {
        word.iter().rev().fold(x.clone(), |acc, &i| self.left_h(i, &acc))
    }

    /// `x H_w`.
    pub fn right_word(&self, x: &AlgebraElement, word: &[usize]) -> AlgebraElement {
        word.iter().fold(x.clone(), |acc, &i| self.right_h(&acc, i))
    }

    pub fn left_e(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for (d, c) in x.terms() {
            out.add_scaled(&self.left_e_basis(d), c);
        }
        out
    }

    pub fn right_e(&self, x: &AlgebraElement) -> AlgebraElement {
        self.left_e(&x.jmath()).jmath()
    }

    /// `e H_d`, memoized.
    pub fn left_e_basis(&self, d: &BrauerDiagram) -> AlgebraElement {
        assert!(self.n >= 2, "e needs at least two strands");
        if let Some(v) = self.left_e_memo.read().unwrap().get(d) {
            return v.clone();
        }
        let key = (self as *const Self as usize, *d);
        if !IN_PROGRESS.with(|s| s.borrow_mut().insert(key)) {
            panic!("cyclic reduction of e * H_d at {d}");
        }
        let res = self.compute_left_e(d);
        IN_PROGRESS.with(|s| s.borrow_mut().remove(&key));
        self.left_e_memo.write().unwrap().insert(*d, res.clone());
        res
    }

    fn compute_left_e(&self, d: &BrauerDiagram) -> AlgebraElement {
        let n = self.n;
        let l = d.length();
        for s in std::iter::once(1).chain(3..n) {
            let d2 = d.left_simple(s);
            if d2 != *d && d2.length() < l {
                // H_d = H_s H_{d2}, and e H_s = q e (s = 1) or H_s e (s >= 3)
                let r = self.left_e_basis(&d2);
                return if s == 1 { r.scale(&FieldElem::q()) } else { self.left_h(s, &r) };
            }
        }
        self.left_e_minimal(d)
    }

    fn left_e_minimal(&self, d: &BrauerDiagram) -> AlgebraElement {
        let n = self.n;
        let k = d.rank();
        let ek_top = BrauerDiagram::e_k(n, k).top_state();
        let (p0, p1) = (d.partner(0), d.partner(1));
        if p0 == 1 {
            // top row of e_(k): e^2 = delta e
            debug_assert_eq!(d.top_state().arcs, ek_top.arcs);
            return AlgebraElement::term(*d, self.delta.clone());
        }
        if p0 < n && p1 < n {
            // top row is s_2 applied to that of e_(k): e H_2 e = z e
            let d0 = d.left_simple(2);
            assert_eq!(d0.top_state().arcs, ek_top.arcs, "unexpected minimal top row in {d}");
            return AlgebraElement::term(d0, FieldElem::z());
        }
        if p0 < n {
            // 1 on an arc, 2 free: top row is s_{2,2k} applied to that of e_(k),
            // and e H_{2,2k}^+ e_(k) = z H_{3,2k}^+ e_(k)
            let mut d0 = *d;
            for i in 2..=2 * k {
                d0 = d0.left_simple(i);
            }
            assert_eq!(d0.top_state().arcs, ek_top.arcs, "unexpected minimal top row in {d}");
            assert_eq!(d0.length() + 2 * k - 1, d.length());
            let word: Vec<usize> = (3..=2 * k).collect();
            return self.left_word(&word, &AlgebraElement::term(d0, FieldElem::z()));
        }
        assert!(p1 >= n, "top vertex 1 free and 2 on an arc is never minimal: {d}");
        // both free: top row is s_{2,2k+1} s_{1,2k} applied to that of e_(k)
        let mut d0 = *d;
        for i in 2..=2 * k + 1 {
            d0 = d0.left_simple(i);
        }
        for i in 1..=2 * k {
            d0 = d0.left_simple(i);
        }
        assert_eq!(d0.length() + 4 * k, d.length());
        let t = triple_decompose(&d0);
        assert!(t.omega1.is_identity() && t.k == k, "unexpected minimal top row in {d}");
        let fv = self.fv(k);
        let x = self.right_word(&fv, &t.omega_d.reduced_word());
        self.right_word(&x, &t.omega2.reduced_word())
    }

    /// `e H_{2,2k+1}^+ H_{1,2k}^+ e_(k)`, expanded through the telescoping
    /// sum from `e_(k+1) = e H_{2,2k+1}^+ H_{1,2k}^- e_(k)`.
    fn fv(&self, k: usize) -> AlgebraElement {
        if let Some(v) = self.fv_memo.read().unwrap().get(&k) {
            return v.clone();
        }
        let n = self.n;
        let mut out = AlgebraElement::basis(BrauerDiagram::e_k(n, k + 1));
        let ek = AlgebraElement::basis(BrauerDiagram::e_k(n, k));
        let up: Vec<usize> = (2..=2 * k + 1).collect();
        for m in 1..=2 * k {
            let mut x = ek.clone();
            for j in (m + 1..=2 * k).rev() {
                x = self.left_h_inv(j, &x);
            }
            let lower: Vec<usize> = (1..m).collect();
            x = self.left_word(&lower, &x);
            x = self.left_word(&up, &x);
            out.add_scaled(&self.left_e(&x), &self.c);
        }
        self.fv_memo.write().unwrap().insert(k, out.clone());
        out
    }

    /// `e_(k) H_d`, memoized, from `e_(k) = e H_{2,2k-1}^+ H_{1,2k-2}^- e_(k-1)`.
    fn left_ek_basis(&self, k: usize, d: &BrauerDiagram) -> AlgebraElement {
        if k == 0 {
            return AlgebraElement::basis(*d);
        }
        if k == 1 {
            return self.left_e_basis(d);
        }
        if let Some(v) = self.left_ek_memo.read().unwrap().get(&(k, *d)) {
            return v.clone();
        }
        let mut x = self.left_ek_basis(k - 1, d);
        for j in (1..=2 * k - 2).rev() {
            x = self.left_h_inv(j, &x);
        }
        let up: Vec<usize> = (2..=2 * k - 1).collect();
        x = self.left_word(&up, &x);
        let res = self.left_e(&x);
        self.left_ek_memo.write().unwrap().insert((k, *d), res.clone());
        res
    }

    pub fn left_ek(&self, k: usize, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for (d, c) in x.terms() {
            out.add_scaled(&self.left_ek_basis(k, d), c);
        }
        out
    }

    /// `H_d x`.
    pub fn left_basis(&self, d: &BrauerDiagram, x: &AlgebraElement) -> AlgebraElement {
        let t = triple_decompose(d);
        let y = self.left_word(&t.omega2.reduced_word(), x);
        let y = self.left_word(&t.omega_d.reduced_word(), &y);
        let y = self.left_ek(t.k, &y);
        self.left_word(&t.omega1.reduced_word(), &y)
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        assert_eq!(a.n(), self.n);
        assert_eq!(b.n(), self.n);
        let mut out = AlgebraElement::zero(self.n);
        for (d, c) in a.terms() {
            out.add_scaled(&self.left_basis(d, b), c);
        }
        out
    }

    pub fn apply_letter_left(&self, l: Letter, x: &AlgebraElement) -> AlgebraElement {
        match l {
            Letter::H(i) => self.left_h(i, x),
            Letter::HInv(i) => self.left_h_inv(i, x),
            Letter::E => self.left_e(x),
            Letter::Ek(k) => self.left_ek(k, x),
        }
    }

    /// Evaluate a product of letters.
    pub fn eval_word(&self, word: &[Letter]) -> AlgebraElement {
        word.iter().rev().fold(self.one(), |acc, &l| self.apply_letter_left(l, &acc))
    }

    /// `e_(k)` computed from its inductive definition.
    pub fn e_k_element(&self, k: usize) -> Result<AlgebraElement, AlgebraError> {
        if 2 * k > self.n {
            return Err(AlgebraError::BadK { n: self.n, k });
        }
        let mut x = self.one();
        for j in 1..=k {
            if j == 1 {
                x = self.left_e(&x);
                continue;
            }
            for i in (1..=2 * j - 2).rev() {
                x = self.left_h_inv(i, &x);
            }
            let up: Vec<usize> = (2..=2 * j - 1).collect();
            x = self.left_word(&up, &x);
            x = self.left_e(&x);
        }
        Ok(x)
    }

    /// `bar(H_d) = bar(H_w1) e_(k) bar(H_wd) bar(H_w2)`.
    pub fn bar_basis(&self, d: &BrauerDiagram) -> AlgebraElement {
        let t = triple_decompose(d);
        let mut x = AlgebraElement::basis(BrauerDiagram::e_k(self.n, t.k));
        for i in t.omega_d.reduced_word().into_iter().chain(t.omega2.reduced_word()) {
            x = self.right_h_inv(&x, i);
        }
        for i in t.omega1.reduced_word().into_iter().rev() {
            x = self.left_h_inv(i, &x);
        }
        x
    }

    pub fn bar(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for (d, c) in a.terms() {
            out.add_scaled(&self.bar_basis(d), &c.bar());
        }
        out
    }

    /// `H_w e_(k) = sum r_{s,w} H_s e_(k)` over `s` in `B*_k`.
    pub fn normalize_left(&self, w: &Perm, k: usize) -> Result<BTreeMap<Perm, FieldElem>, AlgebraError> {
        if 2 * k > self.n {
            return Err(AlgebraError::BadK { n: self.n, k });
        }
        let x = self.left_word(&w.reduced_word(), &AlgebraElement::basis(BrauerDiagram::e_k(self.n, k)));
        let mut out = BTreeMap::new();
        for (d, c) in x.terms() {
            out.insert(bstar_of(d, k), c.clone());
        }
        Ok(out)
    }

    /// `e_(k) H_y = sum s_{v,y} e_(k) H_v` over `v` in `B_k`.
    pub fn normalize_right(&self, y: &Perm, k: usize) -> Result<BTreeMap<Perm, FieldElem>, AlgebraError> {
        let left = self.normalize_left(&y.inverse(), k)?;
        Ok(left.into_iter().map(|(s, c)| (s.inverse(), c)).collect())
    }

    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.left_e_memo.read().unwrap().len(), self.left_ek_memo.read().unwrap().len())
    }
}

/// For a diagram `s e_(k)` (bottom row that of `e_(k)`), the element `s` of `B*_k`.
fn bstar_of(d: &BrauerDiagram, k: usize) -> Perm {
    let n = d.n();
    let st = d.top_state();
    let mut arcs = st.arcs.clone();
    arcs.sort();
    let mut img = vec![0usize; n];
    for (i, &(a, b)) in arcs.iter().enumerate() {
        img[2 * i] = a + 1;
        img[2 * i + 1] = b + 1;
    }
    for (&f, &lab) in st.free.iter().zip(&st.labels) {
        img[lab] = f + 1;
    }
    sigma_reduce(&Perm::from_one_line(&img).unwrap(), k).sigma
}
