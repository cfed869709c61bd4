use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order with `x_0 > x_1 > ... > x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Compare `w . u` first and fall back to `tie_break` on ties.
    Weight(Arc<WeightOrder>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightOrder {
    pub weights: Vec<i64>,
    pub tie_break: MonomialOrder,
}

impl MonomialOrder {
    pub fn weight(weights: Vec<i64>, tie_break: MonomialOrder) -> Self {
        MonomialOrder::Weight(Arc::new(WeightOrder { weights, tie_break }))
    }

    /// Weight order refined by grevlex.
    pub fn weight_grevlex(weights: &[i64]) -> Self {
        Self::weight(weights.to_vec(), MonomialOrder::Grevlex)
    }

    /// Compare two monomials of the same ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Grevlex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    for (x, y) in a.exps().iter().zip(b.exps().iter()).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::Weight(w) => match a.weight(&w.weights).cmp(&b.weight(&w.weights)) {
                Ordering::Equal => w.tie_break.cmp(a, b),
                o => o,
            },
        }
    }

    /// Checked comparison: errors when the monomials come from different rings.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::ContextMismatch(a.nvars(), b.nvars()));
        }
        if let MonomialOrder::Weight(w) = self {
            if w.weights.len() != a.nvars() {
                return Err(Error::ContextMismatch(w.weights.len(), a.nvars()));
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Sort descending under this order.
    pub fn sort_desc(&self, ms: &mut [Monomial]) {
        ms.sort_by(|a, b| self.cmp(b, a));
    }

    /// Parse `lex`, `grevlex`, `weight:w0,w1,...` (grevlex tie break) or
    /// `weight:w0,...;lex`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" | "revlex" | "degrevlex" => Ok(MonomialOrder::Grevlex),
            _ => {
                let rest = s
                    .strip_prefix("weight:")
                    .ok_or_else(|| Error::UnknownOrder(s.to_string()))?;
                let (ws, tie) = match rest.split_once(';') {
                    Some((ws, tie)) => (ws, MonomialOrder::parse(tie)?),
                    None => (rest, MonomialOrder::Grevlex),
                };
                let weights = ws
                    .split(',')
                    .map(|w| w.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::UnknownOrder(s.to_string()))?;
                if weights.is_empty() {
                    return Err(Error::UnknownOrder(s.to_string()));
                }
                Ok(MonomialOrder::weight(weights, tie))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Weight(w) => {
                let ws: Vec<String> = w.weights.iter().map(|x| x.to_string()).collect();
                write!(f, "weight:{}", ws.join(","))?;
                if w.tie_break != MonomialOrder::Grevlex {
                    write!(f, ";{}", w.tie_break)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn grevlex_last_variable_decides() {
        // y^4 z against x t^4
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[0, 4, 1, 0]), &m(&[1, 0, 0, 4])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_first_variable_decides() {
        // x^2 y against x^2 t
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[2, 1, 0, 0]), &m(&[2, 0, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn weight_compares_dot_product_first() {
        let w = MonomialOrder::weight_grevlex(&[5, 1, 1, 1]);
        assert_eq!(
            w.cmp(&m(&[1, 0, 0, 4]), &m(&[0, 4, 1, 0])),
            Ordering::Greater
        );
        // ties fall through to grevlex
        let w = MonomialOrder::weight_grevlex(&[0, 0, 0, 0]);
        assert_eq!(
            w.cmp(&m(&[0, 4, 1, 0]), &m(&[1, 0, 0, 4])),
            Ordering::Greater
        );
    }

    #[test]
    fn mismatched_rings_error() {
        let r = MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[1, 0, 0]));
        assert_eq!(r, Err(Error::ContextMismatch(2, 3)));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["lex", "grevlex", "weight:5,1,1,1", "weight:1,0,2;lex"] {
            assert_eq!(MonomialOrder::parse(s).unwrap().to_string(), s);
        }
        assert!(MonomialOrder::parse("weight:").is_err());
        assert!(MonomialOrder::parse("elim").is_err());
    }
}
