//! Brauer diagrams: perfect matchings on `{1..n} ∪ {1'..n'}`.

mod text;
mod triple;

use std::fmt;

use crate::symgroup::{Perm, MAX_N};

pub use text::parse_diagram;
pub use triple::{rho_compose, sigma_reduce, triple_decompose, DiagramTriple, SigmaReduction};

/// A Brauer diagram on `2n` vertices. Top vertex `i` (1-based) has index
/// `i - 1`, bottom vertex `i'` has index `n + i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: u8,
    p: [u8; 2 * MAX_N],
}

/// Top (or bottom) row of a diagram: its horizontal arcs and, for each free
/// vertex in left-to-right order, the position of its partner on the other row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowState {
    pub arcs: Vec<(usize, usize)>,
    pub free: Vec<usize>,
    pub labels: Vec<usize>,
}

impl RowState {
    /// Length contribution of the row: arc pairs count 0/1/2 for
    /// disjoint/crossing/nested, a free point left of an arc counts 2 and
    /// inside it 1. Label inversions are added when `with_labels`.
    pub fn length(&self, with_labels: bool) -> usize {
        let mut l = 0;
        for (x, &(a, b)) in self.arcs.iter().enumerate() {
            for &(c, d) in &self.arcs[x + 1..] {
                let ((_, b), (c, d)) = if a < c { ((a, b), (c, d)) } else { ((c, d), (a, b)) };
                if c < b {
                    l += if d < b { 2 } else { 1 };
                }
            }
            for &f in &self.free {
                if f < a {
                    l += 2;
                } else if f < b {
                    l += 1;
                }
            }
        }
        if with_labels {
            for i in 0..self.labels.len() {
                for j in i + 1..self.labels.len() {
                    if self.labels[i] > self.labels[j] {
                        l += 1;
                    }
                }
            }
        }
        l
    }
}

impl BrauerDiagram {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Build from a partner array of length `2n`, validating it.
    pub fn from_partners(partner: &[usize]) -> Option<Self> {
        if !partner.len().is_multiple_of(2) || partner.len() > 2 * MAX_N || partner.is_empty() {
            return None;
        }
        let n = partner.len() / 2;
        let mut p = [0u8; 2 * MAX_N];
        for (v, &u) in partner.iter().enumerate() {
            if u >= 2 * n || u == v || partner[u] != v {
                return None;
            }
            p[v] = u as u8;
        }
        let d = BrauerDiagram { n: n as u8, p };
        let top_arcs = (0..n).filter(|&v| d.partner(v) < n).count();
        let bot_arcs = (n..2 * n).filter(|&v| d.partner(v) >= n).count();
        (top_arcs == bot_arcs).then_some(d)
    }

    pub fn partners(&self) -> &[u8] {
        &self.p[..2 * self.n()]
    }

    pub fn partner(&self, v: usize) -> usize {
        self.p[v] as usize
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(&Perm::identity(n))
    }

    /// The diagram of `w`: top vertex `w(i)` joined to bottom vertex `i'`.
    pub fn from_perm(w: &Perm) -> Self {
        let n = w.n();
        let mut p = [0u8; 2 * MAX_N];
        for i in 0..n {
            let t = w.apply(i);
            p[t] = (n + i) as u8;
            p[n + i] = t as u8;
        }
        BrauerDiagram { n: n as u8, p }
    }

    pub fn simple(n: usize, i: usize) -> Self {
        Self::from_perm(&Perm::simple(n, i))
    }

    /// `e_(k)`: arcs `{2i-1, 2i}` on both rows for `i <= k`, verticals elsewhere.
    pub fn e_k(n: usize, k: usize) -> Self {
        assert!(2 * k <= n && n <= MAX_N);
        let mut p = [0u8; 2 * MAX_N];
        for i in 0..k {
            let (a, b) = (2 * i, 2 * i + 1);
            p[a] = b as u8;
            p[b] = a as u8;
            p[n + a] = (n + b) as u8;
            p[n + b] = (n + a) as u8;
        }
        for i in 2 * k..n {
            p[i] = (n + i) as u8;
            p[n + i] = i as u8;
        }
        BrauerDiagram { n: n as u8, p }
    }

    /// Number of horizontal arcs on the top row.
    pub fn rank(&self) -> usize {
        (0..self.n()).filter(|&v| self.partner(v) < self.n()).count() / 2
    }

    /// Whether this is a permutation diagram, and if so which permutation.
    pub fn as_perm(&self) -> Option<Perm> {
        let n = self.n();
        if self.rank() != 0 {
            return None;
        }
        let v: Vec<usize> = (0..n).map(|i| self.partner(n + i) + 1).collect();
        Perm::from_one_line(&v)
    }

    /// Reflect top and bottom rows.
    pub fn flip(&self) -> Self {
        let n = self.n();
        let sw = |v: usize| if v < n { v + n } else { v - n };
        let mut p = [0u8; 2 * MAX_N];
        for v in 0..2 * n {
            p[sw(v)] = sw(self.partner(v)) as u8;
        }
        BrauerDiagram { n: self.n, p }
    }

    /// Stack `self` on top of `other`. Returns the product diagram and the
    /// number of closed loops removed.
    pub fn concat(&self, other: &Self) -> (Self, usize) {
        assert_eq!(self.n, other.n);
        let n = self.n();
        // ids: self's vertices keep their index (bottom row = middle row),
        // other's vertex v gets id n + v.
        let mut uf = UnionFind::new(3 * n);
        for v in 0..2 * n {
            uf.union(v, self.partner(v));
            uf.union(n + v, n + other.partner(v));
        }
        let outer = |id: usize| if id < n { id } else { id - n };
        let mut first: Vec<Option<usize>> = vec![None; 3 * n];
        let mut p = [0u8; 2 * MAX_N];
        let mut has_outer = vec![false; 3 * n];
        for id in (0..n).chain(2 * n..3 * n) {
            let r = uf.find(id);
            has_outer[r] = true;
            match first[r] {
                None => first[r] = Some(id),
                Some(o) => {
                    p[outer(o)] = outer(id) as u8;
                    p[outer(id)] = outer(o) as u8;
                }
            }
        }
        let mut loops = 0;
        let mut seen = vec![false; 3 * n];
        for id in n..2 * n {
            let r = uf.find(id);
            if !has_outer[r] && !seen[r] {
                seen[r] = true;
                loops += 1;
            }
        }
        (BrauerDiagram { n: self.n, p }, loops)
    }

    /// `s_i * self` (acting on the top row).
    pub fn left_simple(&self, i: usize) -> Self {
        let n = self.n();
        let (a, b) = (i - 1, i);
        let sw = |v: usize| if v == a { b } else if v == b { a } else { v };
        let mut p = [0u8; 2 * MAX_N];
        for v in 0..2 * n {
            p[sw(v)] = sw(self.partner(v)) as u8;
        }
        BrauerDiagram { n: self.n, p }
    }

    /// `self * s_i` (acting on the bottom row).
    pub fn right_simple(&self, i: usize) -> Self {
        let n = self.n();
        let (a, b) = (n + i - 1, n + i);
        let sw = |v: usize| if v == a { b } else if v == b { a } else { v };
        let mut p = [0u8; 2 * MAX_N];
        for v in 0..2 * n {
            p[sw(v)] = sw(self.partner(v)) as u8;
        }
        BrauerDiagram { n: self.n, p }
    }

    /// `w * self`.
    pub fn left_perm(&self, w: &Perm) -> Self {
        Self::from_perm(w).concat(self).0
    }

    /// `self * w`.
    pub fn right_perm(&self, w: &Perm) -> Self {
        self.concat(&Self::from_perm(w)).0
    }

    pub fn top_state(&self) -> RowState {
        let n = self.n();
        let mut arcs = Vec::new();
        let mut free = Vec::new();
        let mut labels = Vec::new();
        for v in 0..n {
            let u = self.partner(v);
            if u < n {
                if v < u {
                    arcs.push((v, u));
                }
            } else {
                free.push(v);
                labels.push(u - n);
            }
        }
        RowState { arcs, free, labels }
    }

    pub fn bottom_state(&self) -> RowState {
        self.flip().top_state()
    }

    /// The length function: minimal `l(w1) + l(w2)` over `self = w1 e_(k) w2`.
    pub fn length(&self) -> usize {
        self.top_state().length(true) + self.bottom_state().length(false)
    }

    /// All diagrams on `2n` vertices, or only those of rank `k`.
    pub fn enumerate(n: usize, k: Option<usize>) -> Vec<Self> {
        assert!((1..=MAX_N).contains(&n));
        let mut out = Vec::new();
        let mut p = [u8::MAX; 2 * MAX_N];
        fn rec(n: usize, p: &mut [u8; 2 * MAX_N], out: &mut Vec<BrauerDiagram>) {
            let Some(v) = (0..2 * n).find(|&v| p[v] == u8::MAX) else {
                out.push(BrauerDiagram { n: n as u8, p: *p });
                return;
            };
            for u in v + 1..2 * n {
                if p[u] == u8::MAX {
                    p[v] = u as u8;
                    p[u] = v as u8;
                    rec(n, p, out);
                    p[v] = u8::MAX;
                    p[u] = u8::MAX;
                }
            }
        }
        rec(n, &mut p, &mut out);
        for d in out.iter_mut() {
            for x in d.p[2 * n..].iter_mut() {
                *x = 0;
            }
        }
        match k {
            Some(k) => out.into_iter().filter(|d| d.rank() == k).collect(),
            None => out,
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of diagrams, `(2n-1)!!`.
pub fn double_factorial_count(n: usize) -> u64 {
    (1..=n as u64).map(|i| 2 * i - 1).product()
}
