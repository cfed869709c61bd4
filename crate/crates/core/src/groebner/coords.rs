use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::ring::{Coeff, Monomial, Polynomial};

/// An invertible linear change of coordinates `gamma . x_j = sum_i gamma_ij x_i`.
///
/// Column `j` of the matrix holds the image of `x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    matrix: Vec<Vec<Coeff>>,
}

impl CoordinateChange {
    pub fn new(matrix: Vec<Vec<Coeff>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::SingularMatrix);
        }
        if linalg::determinant(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(CoordinateChange { matrix })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Coeff::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Build from the images of the variables: `images[j]` is the coefficient
    /// vector of `gamma . x_j`.
    pub fn from_images(images: &[Vec<i64>]) -> Result<Self> {
        let n = images.len();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| images[j][i]).collect())
            .collect();
        Self::from_ints(&rows)
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                    .collect()
            })
            .collect();
        CoordinateChange { matrix }
    }

    /// Dense random matrix with integer entries in `[-bound, bound]`,
    /// redrawn until the determinant is nonzero.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Self {
        loop {
            let matrix: Vec<Vec<Coeff>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Coeff::from_integer(rng.gen_range(-bound..=bound).into()))
                        .collect()
                })
                .collect();
            if !linalg::determinant(&matrix).is_zero() {
                return CoordinateChange { matrix };
            }
        }
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Coeff>] {
        &self.matrix
    }

    pub fn inverse(&self) -> CoordinateChange {
        CoordinateChange {
            matrix: linalg::inverse(&self.matrix).expect("invertible by construction"),
        }
    }

    /// The linear form `gamma . x_j`.
    pub fn image_of_var(&self, j: usize, order: &crate::ring::MonomialOrder) -> Polynomial {
        let n = self.size();
        Polynomial::from_terms(
            n,
            order.clone(),
            (0..n).map(|i| (Monomial::var(n, i), self.matrix[i][j].clone())),
        )
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let images: Vec<Polynomial> = (0..self.size())
            .map(|j| self.image_of_var(j, p.order()))
            .collect();
        p.compose(&images)
    }
}
