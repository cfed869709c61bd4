//! Random members of the parameterized families of a case.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ScenarioCase;
use crate::error::{Error, Result};
use crate::groebner::{CoordinateChange, GradedIdeal};
use crate::hilbert::stabilization_bound;
use crate::ring::{Coeff, MonomialOrder, Polynomial, Ring};

/// Coefficients of random forms and coordinate changes lie in `[-9, 9]`.
pub const FAMILY_COEFF_BOUND: i64 = 9;
/// Draws before a sampler gives up on genericity.
pub const FAMILY_ATTEMPTS: usize = 25;

fn random_form<R: Rng>(rng: &mut R, ring: &Ring, degree: u32) -> Polynomial {
    let ord = MonomialOrder::Grevlex;
    let terms = ring.monomials_of_degree(degree, &ord).into_iter().map(|m| {
        (
            m,
            Coeff::from_integer(
                rng.gen_range(-FAMILY_COEFF_BOUND..=FAMILY_COEFF_BOUND)
                    .into(),
            ),
        )
    });
    Polynomial::from_terms(ring.nvars(), ord, terms)
}

/// A random member of family `family_id` whose Hilbert function is that of
/// the case. Deterministic in `seed`.
pub fn sample_family_member(
    case: &ScenarioCase,
    family_id: &str,
    seed: u64,
) -> Result<GradedIdeal> {
    let fam = case
        .family(family_id)
        .ok_or_else(|| Error::Family(format!("case `{}` has no family `{family_id}`", case.id)))?;
    let target = case.target()?;
    let ring = &case.ring;
    let n = ring.nvars();
    let ord = MonomialOrder::Grevlex;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..FAMILY_ATTEMPTS {
        let mut images: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::from_monomial(ring.var(i), ord.clone()))
            .collect();
        for (_, d) in &fam.forms {
            images.push(random_form(&mut rng, ring, *d));
        }
        let gamma = CoordinateChange::random(&mut rng, n, FAMILY_COEFF_BOUND);
        let gens: Vec<Polynomial> = fam
            .template
            .iter()
            .map(|t| gamma.apply(&t.compose(&images)))
            .collect();
        let ideal = match GradedIdeal::new(ring.clone(), gens) {
            Ok(i) => i,
            Err(Error::ZeroIdeal) => continue,
            Err(e) => return Err(Error::Family(format!("family `{family_id}`: {e}"))),
        };
        let init = ideal.initial_ideal(&ord);
        let top = stabilization_bound(&init).max(case.hilbert_prefix.len() as u32) + n as u32 + 1;
        if init.hilbert_prefix(top) == target.values(top) {
            return Ok(ideal);
        }
    }
    Err(Error::Family(format!(
        "family `{family_id}` of `{}`: no member with the right Hilbert function in {FAMILY_ATTEMPTS} draws",
        case.id
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::builtin_case;

    #[test]
    fn deterministic_in_seed() {
        let case = builtin_case("plane-h1").unwrap();
        let a = sample_family_member(&case, "component-1", 3).unwrap();
        let b = sample_family_member(&case, "component-1", 3).unwrap();
        assert_eq!(a.generators(), b.generators());
        let c = sample_family_member(&case, "component-1", 4).unwrap();
        assert_ne!(a.generators(), c.generators());
    }

    #[test]
    fn unknown_family() {
        let case = builtin_case("plane-h1").unwrap();
        assert!(matches!(
            sample_family_member(&case, "component-9", 1),
            Err(Error::Family(_))
        ));
    }

    #[test]
    fn twisted_cubics_from_minors() {
        let case = builtin_case("twisted-h1").unwrap();
        let j = sample_family_member(&case, "component-2", 11).unwrap();
        assert_eq!(j.generators().len(), 3);
        assert!(j
            .generators()
            .iter()
            .all(|g| g.homogeneous_degree() == Some(2)));
    }
}
