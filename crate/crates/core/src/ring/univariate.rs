use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in one variable `d` with rational coefficients, lowest degree first.
/// Used for Hilbert polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_ints(&[c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, d: i64) -> BigRational {
        let x = BigRational::from_integer(d.into());
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `C(d + shift, k)` as a polynomial in `d`.
    pub fn binomial(shift: i64, k: u32) -> UniPoly {
        let mut acc = UniPoly::constant(1);
        for i in 0..k as i64 {
            let factor = UniPoly::new(vec![
                BigRational::new((shift - i).into(), (i + 1).into()),
                BigRational::new(BigInt::one(), (i + 1).into()),
            ]);
            acc = acc.mul(&factor);
        }
        acc
    }

    /// Interpolate through `(x_i, y_i)` (Lagrange, exact).
    pub fn interpolate(points: &[(i64, BigRational)]) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = UniPoly::constant(1);
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&UniPoly::from_ints(&[-xj, 1]));
                    denom *= BigRational::from_integer((xi - xj).into());
                }
            }
            let scale = yi / denom;
            acc = acc.add(&UniPoly::new(
                basis.coeffs.iter().map(|c| c * &scale).collect(),
            ));
        }
        acc
    }

    /// Parse expressions such as `4d`, `3d+1`, `4*d - 1`, `d^2/2 + 3/2 d + 1`.
    pub fn parse(s: &str) -> crate::Result<UniPoly> {
        let ring = super::Ring::new(&["d"])?;
        let p = crate::parse::parse_polynomial(&ring, s, &super::MonomialOrder::Lex)?;
        let mut coeffs = vec![BigRational::zero(); p.max_degree() as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.degree() as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let coeff = if a.is_one() && k > 0 {
                String::new()
            } else if a.is_integer() {
                a.to_integer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}d")?,
                _ => write!(f, "{coeff}d^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
