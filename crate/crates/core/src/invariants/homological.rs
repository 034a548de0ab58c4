use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::quotients::BettiTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegPdim {
    /// The table is empty: regularity and projective dimension are undefined.
    ZeroIdeal,
    Values { reg: usize, pdim: usize },
}

/// Regularity and projective dimension of the ideal, `max(j - i)` and `max(i)`.
pub fn reg_pdim(betti: &BettiTable) -> RegPdim {
    match (betti.strands().last(), betti.max_homological_index()) {
        (Some(&reg), Some(pdim)) => RegPdim::Values { reg, pdim },
        _ => RegPdim::ZeroIdeal,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalSummary {
    pub reg: usize,
    /// Projective dimension of the ideal; that of the quotient ring is one more.
    pub pdim: usize,
    pub krull_dim: usize,
}

impl HomologicalSummary {
    pub fn new(betti: &BettiTable, krull_dim: usize) -> Result<Self> {
        match reg_pdim(betti) {
            RegPdim::Values { reg, pdim } => Ok(HomologicalSummary { reg, pdim, krull_dim }),
            RegPdim::ZeroIdeal => Err(domain("regularity and projective dimension are undefined for the zero ideal")),
        }
    }

    pub fn pdim_quotient(&self) -> usize {
        self.pdim + 1
    }

    /// `depth R/I = num_vars - pdim(R/I)` equals the Krull dimension.
    pub fn is_cohen_macaulay_consistent(&self, num_vars: usize) -> bool {
        num_vars.checked_sub(self.pdim_quotient()) == Some(self.krull_dim)
    }
}

/// A Betti table of an initial ideal, certified as the table of the ideal itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedBetti {
    pub table: BettiTable,
    pub audit: Vec<String>,
}

/// Transfers `betti_in` from `in(I)` to `I`.
///
/// Entries of `I` never exceed those of `in(I)`, both quotients share a Hilbert
/// series, and the alternating sums along each internal degree therefore agree.
/// When all strands but one are known to match, the remaining strand is forced.
pub fn strand_transfer(betti_in: &BettiTable, matched: &BTreeSet<usize>, hs_equal: bool) -> Result<CertifiedBetti> {
    let strands = betti_in.strands();
    let unmatched: Vec<usize> = strands.difference(matched).copied().collect();
    if unmatched.len() >= 2 {
        return Err(Error::Inconsistent(format!(
            "strands {unmatched:?} are unmatched; at most one unmatched strand can be transferred"
        )));
    }
    if !hs_equal {
        return Err(Error::Inconsistent("Hilbert series of the ideal and its initial ideal are not certified equal".into()));
    }
    let mut audit = vec![
        "entrywise: beta(I) <= beta(in I)".to_string(),
        format!("matched strands: {:?}", matched.intersection(&strands).collect::<Vec<_>>()),
        "Hilbert series of R/I and R/in(I) agree".to_string(),
    ];
    match unmatched.first() {
        Some(k) => audit.push(format!("strand {k} forced by the alternating sums")),
        None => audit.push("no unmatched strand".to_string()),
    }
    Ok(CertifiedBetti { table: betti_in.clone(), audit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{betti_formula_grd, betti_formula_k2d};

    #[test]
    fn family_values() {
        for r in 3..6 {
            for d in 2..6 {
                assert_eq!(reg_pdim(&betti_formula_grd(r, d).unwrap()), RegPdim::Values { reg: r, pdim: d - 1 });
            }
        }
        for d in 2..6 {
            assert_eq!(reg_pdim(&betti_formula_k2d(d).unwrap()), RegPdim::Values { reg: 2, pdim: d - 2 });
        }
        assert_eq!(reg_pdim(&BettiTable::from_entries([((0, 2), 1)])), RegPdim::Values { reg: 2, pdim: 0 });
        assert_eq!(reg_pdim(&BettiTable::new()), RegPdim::ZeroIdeal);
    }

    #[test]
    fn transfer() {
        let t = betti_formula_grd(3, 5).unwrap();
        let cert = strand_transfer(&t, &BTreeSet::from([2]), true).unwrap();
        assert_eq!(cert.table, t);
        assert!(cert.audit.last().unwrap().contains("strand 3"));
        assert!(strand_transfer(&t, &BTreeSet::new(), true).is_err());
        assert!(strand_transfer(&t, &BTreeSet::from([2]), false).is_err());
        let all = strand_transfer(&t, &BTreeSet::from([2, 3]), true).unwrap();
        assert_eq!(all.table, t);
    }

    #[test]
    fn auslander_buchsbaum() {
        let s = HomologicalSummary::new(&betti_formula_grd(3, 5).unwrap(), 11).unwrap();
        assert_eq!(s.pdim_quotient(), 5);
        assert!(s.is_cohen_macaulay_consistent(16));
        assert!(HomologicalSummary::new(&BettiTable::new(), 3).is_err());
    }
}
