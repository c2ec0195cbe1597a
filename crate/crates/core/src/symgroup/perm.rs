use std::fmt;

pub const MAX_N: usize = 12;

/// A permutation of `{1, ..., n}` stored in one-line notation (0-based).
///
/// Products compose as functions: `(a * b)(i) = a(b(i))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_N],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "n = {n} exceeds the supported maximum {MAX_N}");
        let mut img = [0u8; MAX_N];
        for (i, v) in img.iter_mut().enumerate().take(n) {
            *v = i as u8;
        }
        Perm { n: n as u8, img }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(v: &[usize]) -> Option<Self> {
        let n = v.len();
        if n > MAX_N {
            return None;
        }
        let mut seen = [false; MAX_N];
        let mut p = Perm::identity(n);
        for (i, &x) in v.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
            p.img[i] = (x - 1) as u8;
        }
        Some(p)
    }

    /// Simple transposition `s_i` swapping `i` and `i+1` (1-based `i`).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// Product of a word of simple transpositions, left to right.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Perm::identity(n), |acc, &i| acc * Perm::simple(n, i))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Image of `i` (0-based).
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        (0..self.n()).map(|i| self.apply(i) + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut p = *self;
        for i in 0..self.n() {
            p.img[self.apply(i)] = i as u8;
        }
        p
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|i| self.apply(i) == i)
    }

    pub fn length(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `l(s_i w) < l(w)`: the values `i` and `i+1` appear inverted.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.img[i - 1] > inv.img[i]
    }

    /// `l(w s_i) < l(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// `s_i * self`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let mut p = *self;
        for k in 0..self.n() {
            let v = p.img[k] as usize;
            if v == i - 1 {
                p.img[k] = i as u8;
            } else if v == i {
                p.img[k] = (i - 1) as u8;
            }
        }
        p
    }

    /// `self * s_i`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut p = *self;
        p.img.swap(i - 1, i);
        p
    }

    /// A reduced word `[i1, ..., ir]` with `self = s_i1 ... s_ir`, built by
    /// peeling off the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut rev = Vec::new();
        'outer: loop {
            for i in 1..self.n() {
                if w.is_right_descent(i) {
                    w = w.right_mul_simple(i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    /// All permutations of `n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm::from_one_line(&cur).unwrap());
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl std::ops::Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        assert_eq!(self.n, rhs.n);
        let mut p = self;
        for i in 0..self.n() {
            p.img[i] = self.img[rhs.apply(i)];
        }
        p
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `s_{i,j} = s_i s_{i+1} ... s_j` for `i <= j`, or `s_i s_{i-1} ... s_j` for
/// `i > j`. Returned as a word.
pub fn s_range(i: usize, j: usize) -> Vec<usize> {
    if i <= j {
        (i..=j).collect()
    } else {
        (j..=i).rev().collect()
    }
}
