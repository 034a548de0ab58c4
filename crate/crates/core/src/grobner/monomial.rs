use std::fmt::Write as _;
use std::ops::Mul;

/// A monomial in the edge variables, stored as sorted `(variable, exponent)` pairs.
///
/// Stored exponents are always positive. The derived `Ord` is a structural
/// order for use as a map key; monomial orders live in [`super::MonomialOrder`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    terms: Vec<(usize, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: usize) -> Self {
        Monomial { terms: vec![(v, 1)], degree: 1 }
    }

    /// Builds a monomial from possibly repeated, unsorted `(variable, exponent)` pairs.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut terms: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        terms.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(terms.len());
        for (v, e) in terms {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial { terms: merged, degree }
    }

    /// The product of the listed variables, with repetition.
    pub fn from_vars(vars: &[usize]) -> Self {
        Self::from_exponents(vars.iter().map(|&v| (v, 1)))
    }

    /// Dense exponent vector over `num_vars` variables.
    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_exponents(exps.iter().enumerate().map(|(v, &e)| (v, e)))
    }

    pub fn to_dense(&self, num_vars: usize) -> Vec<u32> {
        let mut out = vec![0; num_vars];
        for &(v, e) in &self.terms {
            out[v] = e;
        }
        out
    }

    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.terms
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().map(|&(v, _)| v)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.last().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.iter().all(|&(_, e)| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut it = other.terms.iter();
        'outer: for &(v, e) in &self.terms {
            for &(w, f) in it.by_ref() {
                if w == v {
                    if f < e {
                        return false;
                    }
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(self.zip_with(other, |a, b| a - b))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let (v, a, b) = match (self.terms.get(i), other.terms.get(j)) {
                (None, None) => break,
                (Some(&(v, a)), None) => {
                    i += 1;
                    (v, a, 0)
                }
                (None, Some(&(w, b))) => {
                    j += 1;
                    (w, 0, b)
                }
                (Some(&(v, a)), Some(&(w, b))) => {
                    if v < w {
                        i += 1;
                        (v, a, 0)
                    } else if w < v {
                        j += 1;
                        (w, 0, b)
                    } else {
                        i += 1;
                        j += 1;
                        (v, a, b)
                    }
                }
            };
            let e = f(a, b);
            if e > 0 {
                terms.push((v, e));
            }
        }
        let degree = terms.iter().map(|&(_, e)| e).sum();
        Monomial { terms, degree }
    }

    /// Renders the monomial as `*`-separated variable names, `name^k` for powers.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for (k, &(v, e)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&names[v]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}
