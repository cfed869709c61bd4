use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::{monomials_of_degree_lex, Monomial, Ring};

/// The lex-segment ideal with `dim L_d = h[d]` for `d < h.len()`, generated in
/// degrees `< h.len()`.
///
/// Each `L_d` is spanned by the `h[d]` lexicographically greatest monomials;
/// `h` is admissible exactly when `S_1 L_{d-1}` lands inside `L_d` every time.
pub fn lex_segment(ring: &Ring, h: &[u64]) -> Result<MonomialIdeal> {
    let n = ring.nvars();
    let mut gens: Vec<Monomial> = Vec::new();
    let mut prev: Vec<Monomial> = Vec::new();
    for (d, &want) in h.iter().enumerate() {
        let d = d as u32;
        let all = monomials_of_degree_lex(n, d);
        if want as usize > all.len() {
            return Err(Error::Inadmissible(format!(
                "h({d}) = {want} exceeds the {} monomials of degree {d}",
                all.len()
            )));
        }
        let index: HashMap<&Monomial, usize> =
            all.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut covered = vec![false; all.len()];
        for m in &prev {
            for i in 0..n {
                let k = index[&m.mul_var(i)];
                if k >= want as usize {
                    return Err(Error::Inadmissible(format!(
                        "degree {} part needs {} monomials but h({d}) = {want}",
                        d,
                        prev_span(&prev, n)
                    )));
                }
                covered[k] = true;
            }
        }
        for k in 0..want as usize {
            if !covered[k] {
                gens.push(all[k].clone());
            }
        }
        prev = all[..want as usize].to_vec();
    }
    Ok(MonomialIdeal::new(ring.clone(), gens))
}

fn prev_span(prev: &[Monomial], n: usize) -> usize {
    let mut seen = std::collections::HashSet::new();
    for m in prev {
        for i in 0..n {
            seen.insert(m.mul_var(i));
        }
    }
    seen.len()
}
