use std::cmp::Ordering;

use crate::error::{domain, Result};

use super::{Monomial, MonomialOrder};

/// A pure-difference binomial `lhs - rhs` with both sides of equal degree.
///
/// Coefficients are implicitly `+1` and `-1`. `lhs == rhs` is the zero binomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    lhs: Monomial,
    rhs: Monomial,
}

impl Binomial {
    pub fn new(lhs: Monomial, rhs: Monomial) -> Result<Self> {
        if lhs.degree() != rhs.degree() {
            return Err(domain(format!(
                "binomial sides have degrees {} and {}; toric binomials are homogeneous",
                lhs.degree(),
                rhs.degree()
            )));
        }
        Ok(Binomial { lhs, rhs })
    }

    pub(crate) fn new_unchecked(lhs: Monomial, rhs: Monomial) -> Self {
        debug_assert_eq!(lhs.degree(), rhs.degree());
        Binomial { lhs, rhs }
    }

    pub fn lhs(&self) -> &Monomial {
        &self.lhs
    }

    pub fn rhs(&self) -> &Monomial {
        &self.rhs
    }

    pub fn degree(&self) -> u32 {
        self.lhs.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn negated(&self) -> Binomial {
        Binomial { lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }

    /// Sign-normalized: `lhs` is the leading monomial under `ord`.
    pub fn normalized(mut self, ord: &MonomialOrder) -> Binomial {
        if ord.compare(&self.lhs, &self.rhs) == Ordering::Less {
            std::mem::swap(&mut self.lhs, &mut self.rhs);
        }
        self
    }

    pub fn is_normalized(&self, ord: &MonomialOrder) -> bool {
        ord.compare(&self.lhs, &self.rhs) != Ordering::Less
    }

    pub fn eq_up_to_sign(&self, other: &Binomial) -> bool {
        (self.lhs == other.lhs && self.rhs == other.rhs) || (self.lhs == other.rhs && self.rhs == other.lhs)
    }

    /// Sign-independent identity: the two sides in structural order.
    pub fn unsigned_key(&self) -> (Monomial, Monomial) {
        if self.lhs <= self.rhs {
            (self.lhs.clone(), self.rhs.clone())
        } else {
            (self.rhs.clone(), self.lhs.clone())
        }
    }

    pub fn scaled(&self, m: &Monomial) -> Binomial {
        Binomial { lhs: &self.lhs * m, rhs: &self.rhs * m }
    }

    /// `lhs - rhs` with `*`-separated variable names.
    pub fn format(&self, names: &[String]) -> String {
        format!("{} - {}", self.lhs.format(names), self.rhs.format(names))
    }

    /// Parses the `format` output back into a binomial.
    pub fn parse(text: &str, names: &[String]) -> Result<Binomial> {
        let (l, r) = text
            .split_once(" - ")
            .ok_or_else(|| domain(format!("binomial '{text}' is not of the form 'u - v'")))?;
        Binomial::new(parse_monomial(l, names)?, parse_monomial(r, names)?)
    }
}

pub fn parse_monomial(text: &str, names: &[String]) -> Result<Monomial> {
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial::one());
    }
    let mut pairs = Vec::new();
    for factor in text.split('*').map(str::trim) {
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<u32>().map_err(|_| domain(format!("bad exponent in '{factor}'")))?),
            None => (factor, 1),
        };
        let v = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| domain(format!("unknown variable '{name}'")))?;
        pairs.push((v, exp));
    }
    Ok(Monomial::from_exponents(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["a1", "a2", "b1", "b2"].map(String::from).to_vec()
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert!(Binomial::new(Monomial::from_vars(&[0]), Monomial::from_vars(&[1, 2])).is_err());
    }

    #[test]
    fn format_and_parse() {
        let f = Binomial::parse("a2*b1 - a1*b2", &names()).unwrap();
        assert_eq!(f.lhs(), &Monomial::from_vars(&[1, 2]));
        assert_eq!(f.format(&names()), "a2*b1 - a1*b2");
        let g = Binomial::parse("a1^2 - b1*b2", &names()).unwrap();
        assert_eq!(g.lhs().exponent(0), 2);
        assert!(Binomial::parse("a1 - q", &names()).is_err());
    }

    #[test]
    fn normalization_and_sign() {
        let ord = MonomialOrder::natural(4);
        let f = Binomial::parse("b1*b2 - a1*a2", &names()).unwrap();
        let n = f.clone().normalized(&ord);
        assert_eq!(n.lhs(), &Monomial::from_vars(&[0, 1]));
        assert!(n.eq_up_to_sign(&f));
        assert_eq!(n.unsigned_key(), f.unsigned_key());
        assert!(!f.is_zero());
        assert!(Binomial::parse("a1 - a1", &names()).unwrap().is_zero());
    }
}
