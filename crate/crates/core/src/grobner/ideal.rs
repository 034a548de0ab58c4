use std::collections::BTreeMap;

use super::Monomial;

/// A monomial ideal held by its unique minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`: duplicates and generators divisible by another are
    /// dropped. Survivors keep their relative input order.
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if !all.contains(&g) {
                all.push(g);
            }
        }
        let keep: Vec<bool> = all
            .iter()
            .enumerate()
            .map(|(i, g)| !all.iter().enumerate().any(|(j, h)| i != j && h.divides(g)))
            .collect();
        let gens = all.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();
        MonomialIdeal { gens }
    }

    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The zero ideal has no generators.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Number of minimal generators in each degree.
    pub fn degree_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.gens {
            *out.entry(g.degree()).or_insert(0) += 1;
        }
        out
    }

    /// Whether the two ideals have the same minimal generators, in any order.
    pub fn same_as(&self, other: &MonomialIdeal) -> bool {
        let mut a = self.gens.clone();
        let mut b = other.gens.clone();
        a.sort();
        b.sort();
        a == b
    }

    pub fn num_vars_hint(&self) -> usize {
        self.gens.iter().filter_map(Monomial::max_var).max().map_or(0, |v| v + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimalization() {
        let x = Monomial::var(0);
        let xy = Monomial::from_vars(&[0, 1]);
        let z2 = Monomial::from_vars(&[2, 2]);
        let ideal = MonomialIdeal::new([xy.clone(), z2.clone(), x.clone(), z2.clone()]);
        assert_eq!(ideal.generators(), &[z2.clone(), x.clone()]);
        assert!(ideal.contains(&xy));
        assert!(!ideal.contains(&Monomial::var(2)));
        assert!(!ideal.is_squarefree());
        assert_eq!(ideal.degree_counts(), BTreeMap::from([(1, 1), (2, 1)]));
        assert!(ideal.same_as(&MonomialIdeal::new([x, z2])));
    }
}
