use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::coeff::{CoeffError, FieldElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DualityType {
    AI,
    AII,
}

#[derive(Debug, Error)]
pub enum DualityError {
    #[error("m = {m} is too small for type {variant:?}")]
    BadM { variant: DualityType, m: usize },
    #[error("n must be at least 1")]
    BadN,
    #[error("no parameter varsigma_{0} for this type")]
    BadParameter(usize),
    #[error("parameter varsigma_{0} must be non-zero")]
    ZeroParameter(usize),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
    #[error("tensor space of dimension {size} exceeds the bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("every sample of q hit a pole")]
    Singular,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Type, rank, number of tensor factors and the parameters `varsigma_i`.
#[derive(Clone, Debug)]
pub struct ParamSet {
    pub variant: DualityType,
    pub m: usize,
    pub n: usize,
    varsigma: BTreeMap<usize, FieldElem>,
}

impl ParamSet {
    /// All parameters set to -1.
    pub fn new(variant: DualityType, m: usize, n: usize) -> Result<Self, DualityError> {
        Self::with_parameters(variant, m, n, BTreeMap::new())
    }

    pub fn with_parameters(
        variant: DualityType,
        m: usize,
        n: usize,
        overrides: BTreeMap<usize, FieldElem>,
    ) -> Result<Self, DualityError> {
        let min_m = match variant {
            DualityType::AI => 2,
            DualityType::AII => 1,
        };
        if m < min_m {
            return Err(DualityError::BadM { variant, m });
        }
        if n == 0 {
            return Err(DualityError::BadN);
        }
        let mut p = ParamSet { variant, m, n, varsigma: BTreeMap::new() };
        for i in p.parameter_indices() {
            p.varsigma.insert(i, FieldElem::from_int(-1));
        }
        for (i, c) in overrides {
            if !p.varsigma.contains_key(&i) {
                return Err(DualityError::BadParameter(i));
            }
            if c.is_zero() {
                return Err(DualityError::ZeroParameter(i));
            }
            p.varsigma.insert(i, c);
        }
        Ok(p)
    }

    /// `1..m-1` for AI, `2, 4, ..., 2m-2` for AII.
    pub fn parameter_indices(&self) -> Vec<usize> {
        match self.variant {
            DualityType::AI => (1..self.m).collect(),
            DualityType::AII => (1..self.m).map(|l| 2 * l).collect(),
        }
    }

    /// Dimension of the natural representation.
    pub fn dim(&self) -> usize {
        match self.variant {
            DualityType::AI => self.m,
            DualityType::AII => 2 * self.m,
        }
    }

    pub fn varsigma(&self, i: usize) -> &FieldElem {
        &self.varsigma[&i]
    }

    /// `tau_i` (AI) or `kappa_i` (AII): the product of `-varsigma` over the
    /// first `i - 1` parameters.
    pub fn sign(&self, i: usize) -> FieldElem {
        let mut acc = FieldElem::one();
        for j in 1..i {
            let key = match self.variant {
                DualityType::AI => j,
                DualityType::AII => 2 * j,
            };
            acc = &acc * &(-&self.varsigma[&key]);
        }
        acc
    }

    /// The algebra parameters: `(q, q^m)` for AI, `(-q^-1, q^2m)` for AII.
    pub fn specialize(&self, c: &FieldElem) -> Result<FieldElem, CoeffError> {
        match self.variant {
            DualityType::AI => c.substitute(1, 1, self.m as i32),
            DualityType::AII => c.substitute(-1, -1, 2 * self.m as i32),
        }
    }

    pub fn parameters(&self) -> BTreeMap<usize, String> {
        self.varsigma.iter().map(|(i, c)| (*i, c.to_string())).collect()
    }
}
