//! `dim Hom_S(I, S/I)_0`, the tangent space to the Hilbert scheme at `I`.
//!
//! A degree-0 homomorphism is fixed by the images `phi(g_i)` of a generating
//! set, written in the standard monomials of `(S/I)_{deg g_i}`. It is well
//! defined exactly when every syzygy `(a_i)` of the generators maps to zero,
//! `sum a_i phi(g_i) = 0` in `S/I`. The tangent dimension is the number of
//! unknown coefficients minus the rank of these linear conditions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::{
    schreyer_syzygies, taylor_syzygies, GradedIdeal, GroebnerBasis, SyzygySource,
};
use crate::linalg::{integer_row, RowEchelon};
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial};
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct TangentReport {
    pub dimension: usize,
    pub unknown_count: usize,
    pub constraint_rank: usize,
    pub syzygy_source: SyzygySource,
    pub generator_count: usize,
    pub syzygy_count: usize,
}

/// Tangent dimension with the default relations: Taylor for monomial
/// ideals, Schreyer on the reduced grevlex basis otherwise.
pub fn tangent_dimension(ideal: &GradedIdeal) -> TangentReport {
    let source = if ideal.as_monomial_ideal().is_some() {
        SyzygySource::Taylor
    } else {
        SyzygySource::Schreyer
    };
    tangent_dimension_with(ideal, source).expect("default source always applies")
}

pub fn monomial_tangent_dimension(ideal: &MonomialIdeal, source: SyzygySource) -> TangentReport {
    tangent_dimension_with(&ideal.to_graded_ideal(), source).expect("monomial input")
}

/// Tangent dimension using the requested kind of relations.
pub fn tangent_dimension_with(ideal: &GradedIdeal, source: SyzygySource) -> Result<TangentReport> {
    let ord = MonomialOrder::Grevlex;
    match ideal.as_monomial_ideal() {
        Some(m) => {
            let gens = m.generator_polynomials(&ord);
            let syz = match source {
                SyzygySource::Taylor => taylor_syzygies(&gens, &ord),
                SyzygySource::Schreyer => schreyer_syzygies(&gens, &ord),
            };
            let nf = MonomialNf { ideal: &m };
            Ok(solve(&gens, &syz.syzygies, &m, &nf, source))
        }
        None => {
            if source == SyzygySource::Taylor {
                return Err(Error::Unsupported(
                    "Taylor relations need a monomial ideal".into(),
                ));
            }
            let gb = ideal.groebner_basis(&ord);
            let gens: Vec<Polynomial> = gb.elements().to_vec();
            let syz = schreyer_syzygies(&gens, &ord);
            let init = gb.initial_ideal();
            let nf = BasisNf { gb: &gb };
            Ok(solve(&gens, &syz.syzygies, &init, &nf, source))
        }
    }
}

/// Normal forms of monomials modulo the ideal.
trait MonomialReducer {
    fn reduce(&self, m: &Monomial) -> Vec<(Monomial, Coeff)>;
}

struct MonomialNf<'a> {
    ideal: &'a MonomialIdeal,
}

impl MonomialReducer for MonomialNf<'_> {
    fn reduce(&self, m: &Monomial) -> Vec<(Monomial, Coeff)> {
        if self.ideal.contains(m) {
            Vec::new()
        } else {
            vec![(m.clone(), Coeff::from_integer(1.into()))]
        }
    }
}

struct BasisNf<'a> {
    gb: &'a GroebnerBasis,
}

impl MonomialReducer for BasisNf<'_> {
    fn reduce(&self, m: &Monomial) -> Vec<(Monomial, Coeff)> {
        let p = Polynomial::from_monomial(m.clone(), self.gb.order().clone());
        self.gb.normal_form_terms(&p)
    }
}

fn solve(
    gens: &[Polynomial],
    syzygies: &[Vec<Polynomial>],
    init: &MonomialIdeal,
    nf: &dyn MonomialReducer,
    source: SyzygySource,
) -> TangentReport {
    // unknowns: (generator, standard monomial of its degree)
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    let mut std_cache: HashMap<u32, (Vec<Monomial>, HashMap<Monomial, usize>)> = HashMap::new();
    let mut standard = |d: u32| -> (Vec<Monomial>, HashMap<Monomial, usize>) {
        std_cache
            .entry(d)
            .or_insert_with(|| {
                let ms = init.standard_monomials(d);
                let idx = ms
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(k, m)| (m, k))
                    .collect();
                (ms, idx)
            })
            .clone()
    };
    for (i, g) in gens.iter().enumerate() {
        let d = g.homogeneous_degree().unwrap();
        for b in standard(d).0 {
            unknowns.push((i, b));
        }
    }
    let ncols = unknowns.len();
    let mut by_gen: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
    for (col, (i, _)) in unknowns.iter().enumerate() {
        by_gen[*i].push(col);
    }

    let mut nf_cache: HashMap<Monomial, Vec<(Monomial, Coeff)>> = HashMap::new();
    let mut echelon = RowEchelon::new(ncols);
    'outer: for s in syzygies {
        let Some(e) = s
            .iter()
            .zip(gens)
            .find(|(a, _)| !a.is_zero())
            .map(|(a, g)| a.homogeneous_degree().unwrap() + g.homogeneous_degree().unwrap())
        else {
            continue;
        };
        let (std_e, idx_e) = standard(e);
        if std_e.is_empty() {
            continue;
        }
        // rows[r][col] = coefficient of std_e[r] in NF(a_i * b) for unknown col = (i, b)
        let mut rows: Vec<Vec<Coeff>> = vec![vec![Coeff::zero(); ncols]; std_e.len()];
        for (i, a) in s.iter().enumerate() {
            for (t, c) in a.terms() {
                for &col in &by_gen[i] {
                    let m = t.mul(&unknowns[col].1);
                    let red = nf_cache.entry(m.clone()).or_insert_with(|| nf.reduce(&m));
                    for (u, v) in red.iter() {
                        rows[idx_e[u]][col] += c * v;
                    }
                }
            }
        }
        for r in rows {
            if r.iter().all(|x| x.is_zero()) {
                continue;
            }
            echelon.insert(integer_row(&r));
            if echelon.rank() == ncols {
                break 'outer;
            }
        }
    }
    let rank = echelon.rank();
    TangentReport {
        dimension: ncols - rank,
        unknown_count: ncols,
        constraint_rank: rank,
        syzygy_source: source,
        generator_count: gens.len(),
        syzygy_count: syzygies.len(),
    }
}
