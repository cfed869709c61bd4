//! Independent reference computations used by the integration tests.
//!
//! Nothing here goes through Gröbner bases or syzygy modules except where
//! noted: dimensions come from plain linear algebra over Q and tangent
//! spaces of monomial ideals from the fine grading.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use lexseg::ring::Coeff;
use lexseg::{GradedIdeal, Monomial, MonomialIdeal, MonomialOrder, Polynomial, Ring};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ideal(ring: &Ring, text: &str) -> GradedIdeal {
    let gens = lexseg::parse::parse_generators(ring, text, &MonomialOrder::Grevlex)
        .expect("test ideal parses");
    GradedIdeal::new(ring.clone(), gens).expect("nonzero ideal")
}

pub fn mono(ring: &Ring, text: &str) -> MonomialIdeal {
    ideal(ring, text)
        .as_monomial_ideal()
        .expect("monomial ideal")
}

pub fn monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d as u16);
            out.push(Monomial::new(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// Incremental row echelon form over Q.
pub struct Echelon {
    rows: Vec<(usize, Vec<Coeff>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; keep it if something survives.
    pub fn insert(&mut self, mut v: Vec<Coeff>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = Coeff::one() / &v[p];
        for c in v.iter_mut() {
            *c *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (a, b) in row.iter_mut().zip(&v) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

pub fn rank(rows: Vec<Vec<Coeff>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// dim_Q I_d as the rank of the products `m * g` with `deg m + deg g = d`.
pub fn dim_ideal_in_degree(ideal: &GradedIdeal, d: u32) -> u64 {
    let n = ideal.nvars();
    let cols: BTreeMap<Vec<u16>, usize> = monomials(n, d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m.exps().to_vec(), i))
        .collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let e = g.homogeneous_degree().expect("homogeneous");
        if e > d {
            continue;
        }
        for m in monomials(n, d - e) {
            let mut row = vec![Coeff::zero(); cols.len()];
            for (u, c) in g.terms() {
                row[cols[u.mul(&m).exps()]] = c.clone();
            }
            rows.push(row);
        }
    }
    rank(rows) as u64
}

fn laurent_mul(m: &Monomial, a: &[i32]) -> Option<Monomial> {
    let mut e = Vec::with_capacity(a.len());
    for (x, y) in m.exps().iter().zip(a) {
        let v = *x as i32 + y;
        if v < 0 {
            return None;
        }
        e.push(v as u16);
    }
    Some(Monomial::new(&e))
}

/// dim Hom(I, S/I)_0 for a monomial ideal, summed over the fine grading.
///
/// In multidegree `a` a homomorphism sends each generator `m_i` to `c_i m_i x^a`
/// (zero unless that is a monomial outside `I`). For every pair the Taylor
/// relation asks `c_i = c_j` when `lcm x^a` survives, where a generator whose
/// image vanishes contributes 0. The answer in degree `a` is the number of
/// components of that graph with no vanishing member.
pub fn monomial_tangent_oracle(ideal: &MonomialIdeal) -> usize {
    let gens = ideal.generators();
    let n = ideal.nvars();
    let mut degrees: BTreeSet<Vec<i32>> = BTreeSet::new();
    for g in gens {
        for u in monomials(n, g.degree()) {
            if !ideal.contains(&u) {
                degrees.insert(
                    u.exps()
                        .iter()
                        .zip(g.exps())
                        .map(|(a, b)| *a as i32 - *b as i32)
                        .collect(),
                );
            }
        }
    }
    let mut total = 0;
    for a in degrees {
        let alive: Vec<bool> = gens
            .iter()
            .map(|g| laurent_mul(g, &a).is_some_and(|u| !ideal.contains(&u)))
            .collect();
        // union-find over generators plus a sink standing for "forced zero"
        let sink = gens.len();
        let mut parent: Vec<usize> = (0..=sink).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..gens.len() {
            if !alive[i] {
                let r = find(&mut parent, i);
                parent[r] = sink;
            }
        }
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !alive[i] && !alive[j] {
                    continue;
                }
                let l = gens[i].lcm(&gens[j]);
                if laurent_mul(&l, &a).is_some_and(|u| !ideal.contains(&u)) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        if rj == sink {
                            parent[ri] = sink;
                        } else {
                            parent[rj] = ri;
                        }
                    }
                }
            }
        }
        let sink_root = find(&mut parent, sink);
        let roots: HashSet<usize> = (0..gens.len())
            .filter(|&i| alive[i])
            .map(|i| find(&mut parent, i))
            .filter(|&r| r != sink_root)
            .collect();
        total += roots.len();
    }
    total
}

/// dim Hom(I, S/I)_0 by brute force: an assignment of images to the
/// generators is admissible iff every linear relation `sum q_i g_i = 0` of
/// degree at most `top` maps to zero in S/I. Relations are found as the
/// left kernel of the multiplication matrix in each degree. Normal forms
/// modulo I use the crate's Gröbner basis; `top` must bound the degrees of
/// a generating set of relations.
pub fn tangent_oracle(ideal: &GradedIdeal, top: u32) -> usize {
    let ord = MonomialOrder::Grevlex;
    let n = ideal.nvars();
    let gb = ideal.groebner_basis(&ord);
    let init = gb.initial_ideal();
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.with_order(&ord))
        .collect();
    let degs: Vec<u32> = gens
        .iter()
        .map(|g| g.homogeneous_degree().unwrap())
        .collect();

    // unknowns: (generator, standard monomial of the same degree)
    let mut unknown: BTreeMap<(usize, Vec<u16>), usize> = BTreeMap::new();
    for (i, &e) in degs.iter().enumerate() {
        for u in monomials(n, e) {
            if !init.contains(&u) {
                let k = unknown.len();
                unknown.insert((i, u.exps().to_vec()), k);
            }
        }
    }
    let nunk = unknown.len();
    let mut constraints = Echelon::new();
    let min_deg = *degs.iter().min().unwrap();
    for d in min_deg..=top {
        let cols: BTreeMap<Vec<u16>, usize> = monomials(n, d)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m.exps().to_vec(), i))
            .collect();
        let mut labels = Vec::new();
        let mut rows = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if degs[i] > d {
                continue;
            }
            for m in monomials(n, d - degs[i]) {
                let mut row = vec![Coeff::zero(); cols.len()];
                for (u, c) in g.terms() {
                    row[cols[u.mul(&m).exps()]] = c.clone();
                }
                rows.push(row);
                labels.push((i, m));
            }
        }
        for q in left_kernel(&rows) {
            // image of the relation: sum q_(i,m) m phi(g_i), reduced mod I;
            // the coefficient of each standard monomial is linear in the unknowns
            let mut image: BTreeMap<Vec<u16>, Vec<Coeff>> = BTreeMap::new();
            for (k, c) in q.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, m) = &labels[k];
                for ((gi, u), &idx) in unknown.range((*i, Vec::new())..) {
                    if gi != i {
                        break;
                    }
                    let p = Polynomial::term(Monomial::new(u).mul(m), c.clone(), ord.clone());
                    let r = gb.normal_form(&p).expect("same order");
                    for (w, a) in r.terms() {
                        let v = image
                            .entry(w.exps().to_vec())
                            .or_insert_with(|| vec![Coeff::zero(); nunk]);
                        v[idx] += a;
                    }
                }
            }
            for (_, v) in image {
                constraints.insert(v);
            }
        }
    }
    nunk - constraints.rank()
}

/// Basis of `{q : q^T M = 0}`.
fn left_kernel(rows: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    let r = rows.len();
    let mut aug: Vec<Vec<Coeff>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..r).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }));
            v
        })
        .collect();
    let width = rows.first().map_or(0, |x| x.len());
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(p) = (pivot_row..r).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, p);
        let inv = Coeff::one() / &aug[pivot_row][col];
        for c in aug[pivot_row].iter_mut() {
            *c *= &inv;
        }
        let pr = aug[pivot_row].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (a, b) in row.iter_mut().zip(&pr) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        pivot_row += 1;
    }
    aug[pivot_row..]
        .iter()
        .map(|row| row[width..].to_vec())
        .collect()
}

/// Whether `b` is reached from `a` by moves `x_j -> x_i` with `i < j`, by search.
pub fn borel_reachable(a: &Monomial, b: &Monomial) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(m) = queue.pop_front() {
        if &m == b {
            return true;
        }
        for j in 0..m.nvars() {
            if m.exp(j) == 0 {
                continue;
            }
            for i in 0..j {
                let up = m.div_var(j).unwrap().mul_var(i);
                if seen.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
    }
    false
}

/// The smallest strongly stable ideal containing `seeds`.
pub fn borel_closure(ring: &Ring, seeds: &[Monomial]) -> MonomialIdeal {
    let mut all: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut queue: VecDeque<Monomial> = seeds.iter().cloned().collect();
    while let Some(m) = queue.pop_front() {
        if !all.insert(m.exps().to_vec()) {
            continue;
        }
        for j in 0..m.nvars() {
            if m.exp(j) > 0 {
                for i in 0..j {
                    queue.push_back(m.div_var(j).unwrap().mul_var(i));
                }
            }
        }
    }
    MonomialIdeal::new(ring.clone(), all.iter().map(|e| Monomial::new(e)).collect())
}

/// Whether `u` lies in `I : m^infinity`: `u x_i^k` lies in `I` for every `i`
/// once `k` exceeds every exponent in the generators.
pub fn in_saturation(ideal: &MonomialIdeal, u: &Monomial) -> bool {
    let k = ideal
        .generators()
        .iter()
        .flat_map(|g| g.exps().iter().copied())
        .max()
        .unwrap_or(0);
    (0..u.nvars()).all(|i| ideal.contains(&u.with_exp(i, u.exp(i) + k)))
}

/// Random homogeneous ideals for property checks: monomial, binomial and
/// sparse ideals in up to four variables with generators of degree at most 6.
pub fn random_ideals(count: usize, seed: u64) -> Vec<GradedIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let nvars = rng.gen_range(2..=4);
        let ring = Ring::with_vars(nvars);
        let ngens = rng.gen_range(1..=4);
        let kind = out.len() % 3;
        let mut gens = Vec::new();
        for _ in 0..ngens {
            let d = if kind == 0 {
                rng.gen_range(1..=6)
            } else {
                rng.gen_range(1..=4)
            };
            let pool = monomials(nvars, d);
            let nterms = match kind {
                0 => 1,
                1 => 2,
                _ => rng.gen_range(1..=3),
            };
            let terms: Vec<(Monomial, Coeff)> = (0..nterms)
                .map(|_| {
                    let c = loop {
                        let c = rng.gen_range(-5i64..=5);
                        if c != 0 {
                            break c;
                        }
                    };
                    (
                        pool[rng.gen_range(0..pool.len())].clone(),
                        Coeff::from_integer(c.into()),
                    )
                })
                .collect();
            let p = Polynomial::from_terms(nvars, MonomialOrder::Grevlex, terms);
            if !p.is_zero() {
                gens.push(p);
            }
        }
        if gens.is_empty() {
            continue;
        }
        if let Ok(i) = GradedIdeal::new(ring, gens) {
            out.push(i);
        }
    }
    out
}
