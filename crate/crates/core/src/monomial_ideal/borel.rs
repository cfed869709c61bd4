use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::ring::Monomial;

/// `a <= b` in the Borel order: `b` is reached from `a` by moves `x_j -> x_i`, `i < j`.
///
/// Equivalent to every prefix sum of exponents of `b` dominating that of `a`.
pub fn borel_leq(a: &Monomial, b: &Monomial) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch(a.nvars(), b.nvars()));
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    let (mut sa, mut sb) = (0u32, 0u32);
    for (x, y) in a.exps().iter().zip(b.exps()) {
        sa += *x as u32;
        sb += *y as u32;
        if sb < sa {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monomials one adjacent move `x_j -> x_{j-1}` above `m`.
pub fn upper_covers(m: &Monomial) -> Vec<Monomial> {
    (1..m.nvars())
        .filter(|&j| m.exp(j) > 0)
        .map(|j| m.div_var(j).unwrap().mul_var(j - 1))
        .collect()
}

/// Breadth-first search over single moves; a slow reference for [`borel_leq`].
pub fn borel_leq_by_moves(a: &Monomial, b: &Monomial) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::from([a.clone()]);
    seen.insert(a.clone());
    while let Some(m) = queue.pop_front() {
        if &m == b {
            return Ok(true);
        }
        for j in 1..m.nvars() {
            if m.exp(j) == 0 {
                continue;
            }
            let base = m.div_var(j).unwrap();
            for i in 0..j {
                let next = base.mul_var(i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}
