//! Betti numbers of a monomial ideal from its Taylor complex.
//!
//! The Taylor complex has a basis element for every nonempty subset of the
//! generators, in multidegree the lcm of the subset. After tensoring with the
//! residue field only the differential terms that keep the lcm survive, so the
//! complex splits into one finite complex of vector spaces per lcm label and
//! `beta_{i,alpha}` is the homology in homological index `i` of the piece for
//! `alpha` (subsets of size `i + 1`).

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grobner::{Monomial, MonomialIdeal};
use crate::linalg::{rank, SparseRow};

use super::BettiTable;

pub const DEFAULT_TAYLOR_CAP: usize = 18;

pub fn betti_taylor_oracle(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_taylor_oracle_with_cap(ideal, DEFAULT_TAYLOR_CAP)
}

pub fn betti_taylor_oracle_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<BettiTable> {
    let gens = ideal.generators();
    let m = gens.len();
    if m > cap {
        return Err(Error::Budget { what: "Taylor complex generators", limit: cap as u64 });
    }
    if m == 0 {
        return Ok(BettiTable::new());
    }
    let size = 1usize << m;
    let mut lcms: Vec<Monomial> = Vec::with_capacity(size);
    lcms.push(Monomial::one());
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let l = lcms[mask & (mask - 1)].lcm(&gens[low]);
        lcms.push(l);
    }
    let mut groups: HashMap<&Monomial, Vec<usize>> = HashMap::new();
    for (mask, l) in lcms.iter().enumerate().skip(1) {
        groups.entry(l).or_default().push(mask);
    }
    let groups: Vec<(&Monomial, Vec<usize>)> = groups.into_iter().collect();
    let pieces: Vec<Vec<(usize, usize, u64)>> =
        groups.par_iter().map(|(label, masks)| label_homology(label, masks, &lcms)).collect();
    let mut table = BettiTable::new();
    for (i, j, b) in pieces.into_iter().flatten() {
        table.add(i, j, b);
    }
    Ok(table)
}

/// `(i, deg label, beta)` for the subcomplex of subsets with lcm `label`.
fn label_homology(label: &Monomial, masks: &[usize], lcms: &[Monomial]) -> Vec<(usize, usize, u64)> {
    let top = masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] lists the subsets of size s; index gives the column position
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    let mut position: HashMap<usize, usize> = HashMap::with_capacity(masks.len());
    for &mask in masks {
        let s = mask.count_ones() as usize;
        position.insert(mask, by_size[s].len());
        by_size[s].push(mask);
    }
    // ranks[s] = rank of the differential from size s to size s - 1
    let mut ranks = vec![0usize; top + 2];
    for s in 2..=top {
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|&sigma| {
                let mut row = Vec::new();
                let mut below = 0;
                for k in 0..usize::BITS as usize {
                    let bit = 1usize << k;
                    if sigma & bit == 0 {
                        continue;
                    }
                    let tau = sigma ^ bit;
                    if &lcms[tau] == label {
                        let sign = if below % 2 == 0 { 1 } else { -1 };
                        row.push((position[&tau], sign));
                    }
                    below += 1;
                }
                row
            })
            .collect();
        ranks[s] = rank(&rows);
    }
    let j = label.degree() as usize;
    (1..=top)
        .filter_map(|s| {
            let h = by_size[s].len() - ranks[s] - ranks[s + 1];
            (h > 0).then_some((s - 1, j, h as u64))
        })
        .collect()
}
