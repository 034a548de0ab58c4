use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::binomial;

use super::{OrderedGenerators, QuotientProfile};

/// Graded Betti numbers `beta_{i,j}` of an ideal; homological index 0 counts generators.
///
/// Only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut t = Self::new();
        for ((i, j), b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    /// Nonzero entries ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The values `k = j - i` with some nonzero `beta_{i,i+k}`.
    pub fn strands(&self) -> BTreeSet<usize> {
        self.entries().map(|(i, j, _)| j - i).collect()
    }

    /// `(i, beta_{i,i+k})` for the nonzero entries of strand `k`.
    pub fn strand(&self, k: usize) -> Vec<(usize, u64)> {
        self.entries().filter(|&(i, j, _)| j - i == k).map(|(i, _, b)| (i, b)).collect()
    }

    pub fn max_homological_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries().filter(|&(k, _, _)| k == i).map(|(_, _, b)| b).sum()
    }

    /// `sum_i (-1)^i beta_{i,j}` for each internal degree `j`.
    pub fn euler_by_degree(&self) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (i, j, b) in self.entries() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *out.entry(j).or_insert(0) += sign * b as i64;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    pub fn to_entries(&self) -> Vec<BettiEntry> {
        self.entries().map(|(i, j, beta)| BettiEntry { i, j, beta }).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_entries()).expect("entries serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<BettiEntry> = serde_json::from_str(text)
            .map_err(|e| Error::Parse { context: format!("line {} column {}", e.line(), e.column()), message: e.to_string() })?;
        Ok(Self::from_entries(entries.into_iter().map(|e| ((e.i, e.j), e.beta))))
    }

    /// Grid with columns `i` and rows `j - i`, dots for zeros.
    pub fn to_grid(&self) -> String {
        let Some(max_i) = self.max_homological_index() else {
            return "(zero ideal)\n".to_string();
        };
        let strands = self.strands();
        let cols: Vec<Vec<String>> = (0..=max_i)
            .map(|i| {
                let mut col = vec![i.to_string(), self.total(i).to_string()];
                col.extend(strands.iter().map(|&k| match self.get(i, i + k) {
                    0 => ".".to_string(),
                    b => b.to_string(),
                }));
                col
            })
            .collect();
        let mut labels = vec![String::new(), "total:".to_string()];
        labels.extend(strands.iter().map(|k| format!("{k}:")));
        let lw = labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (row, label) in labels.iter().enumerate() {
            let _ = write!(out, "{label:>lw$}");
            for col in &cols {
                let w = col.iter().map(String::len).max().unwrap_or(1);
                let _ = write!(out, " {:>w$}", col[row]);
            }
            out.push('\n');
        }
        out
    }
}

/// `beta_{i,i+j} = sum over generators of degree j of C(n_p, i)`.
pub fn betti_from_linear_quotients(gens: &OrderedGenerators, profile: &QuotientProfile) -> Result<BettiTable> {
    if let Some(position) = profile.first_nonlinear {
        return Err(Error::NotLinearQuotients { position });
    }
    if profile.n.len() != gens.len() {
        return Err(Error::Inconsistent(format!(
            "profile has {} entries for {} generators",
            profile.n.len(),
            gens.len()
        )));
    }
    let mut table = BettiTable::new();
    for (m, &n) in gens.generators().iter().zip(&profile.n) {
        let j = m.degree() as usize;
        for i in 0..=n {
            table.add(i, i + j, binomial(n as u64, i as u64));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::Monomial;
    use crate::quotients::quotient_profile;

    #[test]
    fn principal_ideal() {
        let gens = OrderedGenerators::new(vec![Monomial::from_vars(&[0, 1, 1, 2])]).unwrap();
        let t = betti_from_linear_quotients(&gens, &quotient_profile(&gens)).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), [(0, 4, 1)]);
    }

    #[test]
    fn rejects_non_linear_profile() {
        let gens = OrderedGenerators::new(vec![Monomial::from_vars(&[0, 1]), Monomial::from_vars(&[2, 3])]).unwrap();
        let err = betti_from_linear_quotients(&gens, &quotient_profile(&gens)).unwrap_err();
        assert_eq!(err, Error::NotLinearQuotients { position: 1 });
    }

    #[test]
    fn grid_layout() {
        let t = BettiTable::from_entries([((0, 2), 1), ((0, 3), 2), ((1, 4), 2)]);
        assert_eq!(t.to_grid(), "       0 1\ntotal: 3 2\n    2: 1 .\n    3: 2 2\n");
        assert_eq!(BettiTable::new().to_grid(), "(zero ideal)\n");
    }

    #[test]
    fn json_round_trip() {
        let t = BettiTable::from_entries([((0, 2), 10), ((1, 3), 20), ((0, 3), 5)]);
        let text = t.to_json();
        assert_eq!(text, r#"[{"i":0,"j":2,"beta":10},{"i":0,"j":3,"beta":5},{"i":1,"j":3,"beta":20}]"#);
        assert_eq!(BettiTable::from_json(&text).unwrap(), t);
    }

    #[test]
    fn strands_and_euler() {
        let t = BettiTable::from_entries([((0, 2), 1), ((0, 3), 2), ((1, 4), 2), ((1, 3), 1)]);
        assert_eq!(t.strands(), BTreeSet::from([2, 3]));
        assert_eq!(t.strand(2), [(0, 1), (1, 1)]);
        assert_eq!(t.euler_by_degree(), BTreeMap::from([(2, 1), (3, 1), (4, -2)]));
    }
}
