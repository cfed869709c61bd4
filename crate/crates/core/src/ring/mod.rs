//! The graded polynomial ring `K[x_0, ..., x_n]` over the rationals.

mod monomial;
mod order;
mod poly;
mod univariate;

pub use monomial::{binomial, count_of_degree, monomials_of_degree_lex, Exponents, Monomial};
pub use order::{MonomialOrder, WeightOrder};
pub use poly::{Coeff, Polynomial};
pub use univariate::UniPoly;

use crate::error::{Error, Result};

/// Default cap on the total degree of parsed input.
pub const DEFAULT_DEGREE_CAP: u32 = 16;

/// Variable names of `S = K[x_0, ..., x_n]`; the order of the names fixes `x_0 > x_1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    degree_cap: u32,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "a ring needs at least one variable".into(),
            });
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || names[..i].contains(n) {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("bad variable name `{n}`"),
                });
            }
        }
        Ok(Ring {
            names,
            degree_cap: DEFAULT_DEGREE_CAP,
        })
    }

    /// `K[x, y, z, t]`, the ring used throughout for space curves.
    pub fn xyzt() -> Self {
        Self::new(&["x", "y", "z", "t"]).unwrap()
    }

    /// `nvars` variables named `x, y, z, t` when possible, `x0, x1, ...` otherwise.
    pub fn with_vars(nvars: usize) -> Self {
        const SHORT: [&str; 4] = ["x", "y", "z", "t"];
        if nvars <= 4 {
            Self::new(&SHORT[..nvars]).unwrap()
        } else {
            let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
            Self::new(&names).unwrap()
        }
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.nvars(), i)
    }

    /// All `C(n+d, n)` monomials of degree `d`, strictly descending under `ord`.
    pub fn monomials_of_degree(&self, d: u32, ord: &MonomialOrder) -> Vec<Monomial> {
        let mut ms = monomials_of_degree_lex(self.nvars(), d);
        if *ord != MonomialOrder::Lex {
            ord.sort_desc(&mut ms);
        }
        ms
    }

    /// `x^2*y*t^3` style rendering.
    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }

    /// Terms in the polynomial's own order, e.g. `x^2 - 2*x*t + 1/2*y^2`.
    pub fn fmt_polynomial(&self, p: &Polynomial) -> String {
        use num_traits::{One, Signed};
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let coeff = if a.is_integer() {
                a.to_integer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            };
            if m.is_one() {
                out.push_str(&coeff);
            } else {
                if !a.is_one() {
                    out.push_str(&coeff);
                    out.push('*');
                }
                out.push_str(&self.fmt_monomial(m));
            }
        }
        out
    }

    pub fn fmt_monomials(&self, ms: &[Monomial]) -> String {
        ms.iter()
            .map(|m| self.fmt_monomial(m))
            .collect::<Vec<_>>()
            .join(", ")
    }
}
