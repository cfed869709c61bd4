use num_traits::Signed;

use crate::error::{Error, Result};
use crate::ring::UniPoly;

/// Number of terms `s` in the Gotzmann representation
/// `p(d) = C(d+a_1, a_1) + C(d+a_2-1, a_2) + ... + C(d+a_s-(s-1), a_s)`
/// with `a_1 >= ... >= a_s >= 0`.
pub fn gotzmann_bound(p: &UniPoly) -> Result<u32> {
    let bad = |why: &str| Error::Inadmissible(format!("{p} is not a Hilbert polynomial: {why}"));
    let mut rest = p.clone();
    let mut s: u32 = 0;
    loop {
        let Some(e) = rest.degree() else {
            return Ok(s);
        };
        let lc = rest.leading_coeff().unwrap().clone();
        if !lc.is_positive() {
            return Err(bad("negative leading coefficient"));
        }
        if e == 0 {
            if !lc.is_integer() {
                return Err(bad("non-integral constant"));
            }
            let c: u32 = lc
                .to_integer()
                .try_into()
                .map_err(|_| bad("constant term too large"))?;
            return Ok(s + c);
        }
        rest = rest.sub(&UniPoly::binomial(e as i64 - s as i64, e as u32));
        s += 1;
        if s > 10_000 {
            return Err(bad("expansion does not terminate"));
        }
    }
}
