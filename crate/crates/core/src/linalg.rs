//! Exact linear algebra: fraction-free row reduction over the integers and
//! small rational matrix helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An integer row echelon form built one row at a time.
///
/// Rows are reduced against the stored pivots by cross-multiplication and then
/// divided by their content, so entries stay integral without fractions.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    ncols: usize,
    /// `(pivot column, row)`, row has zeros left of the pivot.
    rows: Vec<(usize, Vec<BigInt>)>,
    pivot_of_col: Vec<Option<usize>>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon {
            ncols,
            rows: Vec::new(),
            pivot_of_col: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Insert a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        if self.rows.len() == self.ncols {
            return false;
        }
        let mut col = 0;
        loop {
            while col < self.ncols && row[col].is_zero() {
                col += 1;
            }
            if col == self.ncols {
                return false;
            }
            match self.pivot_of_col[col] {
                Some(k) => {
                    let piv = &self.rows[k].1;
                    let (a, b) = (&piv[col], &row[col]);
                    let g = a.gcd(b);
                    let (fa, fb) = (a / &g, b / &g);
                    for j in col..self.ncols {
                        if piv[j].is_zero() {
                            if !row[j].is_zero() {
                                row[j] *= &fa;
                            }
                        } else {
                            row[j] = &row[j] * &fa - &piv[j] * &fb;
                        }
                    }
                    make_primitive(&mut row[col..]);
                }
                None => {
                    make_primitive(&mut row[col..]);
                    self.pivot_of_col[col] = Some(self.rows.len());
                    self.rows.push((col, row));
                    return true;
                }
            }
        }
    }
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

/// Rank of an integer matrix.
pub fn rank(rows: impl IntoIterator<Item = Vec<BigInt>>, ncols: usize) -> usize {
    let mut e = RowEchelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Clear denominators of a rational row.
pub fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in row {
        if !x.is_zero() {
            den = den.lcm(x.denom());
        }
    }
    row.iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                (x.numer() * (&den / x.denom())).clone()
            }
        })
        .collect()
}

/// Determinant by Bareiss elimination.
pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    // Scale rows to integers, remember the scale.
    let mut scale = BigRational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let mut den = BigInt::one();
        for x in row {
            den = den.lcm(x.denom());
        }
        scale *= BigRational::from_integer(den.clone());
        a.push(row.iter().map(|x| x.numer() * (&den / x.denom())).collect());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    BigRational::from_integer(sign * &a[n - 1][n - 1]) / scale
}

/// Inverse by Gauss-Jordan; `None` when singular.
pub fn inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        let inv = a[k][k].recip();
        for x in a[k].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..2 * n {
                    let v = &a[k][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Sign-normalized gcd of a list, zero for an all-zero list.
pub fn content(xs: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in xs {
        g = g.gcd(x);
    }
    g.abs()
}
