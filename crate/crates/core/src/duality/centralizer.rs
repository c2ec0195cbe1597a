//! Dimensions of generated matrix algebras and their commutants, by exact
//! rational linear algebra at a sample value of `q`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::{CoeffError, Rational};

use super::checks::qbrauer_generators;
use super::params::{DualityError, ParamSet};
use super::qgroup::iquantum_generators;
use super::tensor::TensorOperator;

/// Default bound on the dimension of the tensor space.
pub const DEFAULT_MAX_TENSOR_DIM: usize = 4096;
const MAX_SAMPLES: usize = 8;

type SparseRow = BTreeMap<usize, Rational>;

/// Row-echelon form built one row at a time.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    /// Reduce `row` and keep it if it is independent.
    fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((&lead, lv)) = row.iter().next() else { return false };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let f = lv.clone();
                    for (k, v) in p {
                        let e = row.entry(*k).or_insert_with(Rational::zero);
                        *e -= &f * v;
                    }
                }
                None => {
                    let inv = lv.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Sparse square matrix by columns.
#[derive(Clone)]
struct Mat {
    d: usize,
    cols: Vec<SparseRow>,
}

impl Mat {
    fn from_dense(m: &[Vec<Rational>]) -> Self {
        let d = m.len();
        let cols = (0..d)
            .map(|c| (0..d).filter(|&r| !m[r][c].is_zero()).map(|r| (r, m[r][c].clone())).collect())
            .collect();
        Mat { d, cols }
    }

    fn identity(d: usize) -> Self {
        Mat { d, cols: (0..d).map(|c| [(c, Rational::one())].into_iter().collect()).collect() }
    }

    /// `self * other`.
    fn mul(&self, other: &Mat) -> Mat {
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                let mut out = SparseRow::new();
                for (k, v) in oc {
                    for (r, x) in &self.cols[*k] {
                        *out.entry(*r).or_insert_with(Rational::zero) += x * v;
                    }
                }
                out.retain(|_, v| !v.is_zero());
                out
            })
            .collect();
        Mat { d: self.d, cols }
    }

    fn flatten(&self) -> SparseRow {
        let mut out = SparseRow::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.insert(c * self.d + r, v.clone());
            }
        }
        out
    }

    fn entry(&self, r: usize, c: usize) -> Option<&Rational> {
        self.cols[c].get(&r)
    }
}

/// Dimension of the unital algebra generated by `gens`.
fn algebra_dim(gens: &[Mat], d: usize) -> usize {
    let mut ech = Echelon::default();
    let id = Mat::identity(d);
    ech.insert(id.flatten());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if ech.insert(y.flatten()) {
                frontier.push(y);
            }
        }
    }
    ech.rank()
}

/// Dimension of `{X : XG = GX for all G in gens}`.
fn commutant_dim(gens: &[Mat], d: usize) -> usize {
    let mut ech = Echelon::default();
    // unknown X[r][k] has index k * d + r
    for g in gens {
        // column indices of the nonzero entries in each row of g
        let rows: Vec<Vec<usize>> = (0..d).map(|r| (0..d).filter(|&c| g.entry(r, c).is_some()).collect()).collect();
        for (r, row) in rows.iter().enumerate() {
            for c in 0..d {
                let mut eq = SparseRow::new();
                // (XG)[r][c] = sum_k X[r][k] G[k][c]
                for (k, v) in &g.cols[c] {
                    *eq.entry(k * d + r).or_insert_with(Rational::zero) += v;
                }
                // (GX)[r][c] = sum_k G[r][k] X[k][c]
                for &k in row {
                    *eq.entry(c * d + k).or_insert_with(Rational::zero) -= g.entry(r, k).unwrap();
                }
                ech.insert(eq);
            }
        }
    }
    d * d - ech.rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerDims {
    pub q_sample: String,
    pub seed: u64,
    pub tensor_dim: usize,
    pub dim_qbrauer_image: usize,
    pub dim_uq_image: usize,
    pub dim_commutant_of_uq: usize,
    pub dim_commutant_of_qbrauer: usize,
}

impl CentralizerDims {
    pub fn double_centralizer(&self) -> bool {
        self.dim_qbrauer_image == self.dim_commutant_of_uq && self.dim_uq_image == self.dim_commutant_of_qbrauer
    }
}

fn matrices(ops: &[TensorOperator], q: &Rational) -> Result<Vec<Mat>, CoeffError> {
    ops.iter().map(|o| o.to_matrix(q).map(|m| Mat::from_dense(&m))).collect()
}

/// The four dimensions at `q = q_sample`, moving to seeded random samples
/// when an entry has a pole there.
pub fn centralizer_dims(
    p: &ParamSet,
    q_sample: Rational,
    seed: u64,
    with_rho: bool,
    bound: usize,
) -> Result<CentralizerDims, DualityError> {
    let size = p.dim().pow(p.n as u32);
    if size > bound {
        return Err(DualityError::TooLarge { size, bound });
    }
    let ug: Vec<TensorOperator> = iquantum_generators(p, with_rho)?.into_iter().map(|x| x.op).collect();
    let bg: Vec<TensorOperator> = qbrauer_generators(p)?.into_iter().map(|x| x.1).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut q = q_sample;
    for _ in 0..MAX_SAMPLES {
        if let (Ok(um), Ok(bm)) = (matrices(&ug, &q), matrices(&bg, &q)) {
            return Ok(CentralizerDims {
                q_sample: q.to_string(),
                seed,
                tensor_dim: size,
                dim_qbrauer_image: algebra_dim(&bm, size),
                dim_uq_image: algebra_dim(&um, size),
                dim_commutant_of_uq: commutant_dim(&um, size),
                dim_commutant_of_qbrauer: commutant_dim(&bm, size),
            });
        }
        let num: i64 = rng.gen_range(2..50);
        let den: i64 = rng.gen_range(num + 1..100);
        q = Rational::new(num.into(), den.into());
    }
    Err(DualityError::Singular)
}
