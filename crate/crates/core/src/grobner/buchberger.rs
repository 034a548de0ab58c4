//! Buchberger's algorithm for ideals generated by pure-difference binomials.
//!
//! S-pairs and reduction steps of `u - v` binomials are again `u' - v'`
//! binomials, so every intermediate value is a [`Binomial`] and coefficients
//! never leave `{+1, -1}`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

use super::{Binomial, MonomialIdeal, MonomialOrder};

#[derive(Clone, Copy, Debug)]
pub struct BuchbergerConfig {
    /// Maximum number of critical pairs ever queued.
    pub max_pairs: u64,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { max_pairs: 1_000_000 }
    }
}

/// The S-binomial of `f` and `g`, or `None` when it vanishes.
pub fn s_binomial(f: &Binomial, g: &Binomial, ord: &MonomialOrder) -> Option<Binomial> {
    let f = f.clone().normalized(ord);
    let g = g.clone().normalized(ord);
    if f.is_zero() || g.is_zero() || f == g {
        return None;
    }
    let lcm = f.lhs().lcm(g.lhs());
    let from_f = &lcm.div(f.lhs()).expect("lcm is a multiple") * f.rhs();
    let from_g = &lcm.div(g.lhs()).expect("lcm is a multiple") * g.rhs();
    let s = Binomial::new_unchecked(from_g, from_f);
    (!s.is_zero()).then(|| s.normalized(ord))
}

/// Full division remainder of `f` by `basis`, or `None` for zero.
///
/// Each step divides by the first basis element, in list order, whose leading
/// term divides the current term. Neither monomial of the remainder is
/// divisible by a leading term of `basis`.
pub fn reduce(f: &Binomial, basis: &[Binomial], ord: &MonomialOrder) -> Option<Binomial> {
    let normalized: Vec<Binomial> =
        basis.iter().filter(|g| !g.is_zero()).map(|g| g.clone().normalized(ord)).collect();
    let refs: Vec<&Binomial> = normalized.iter().collect();
    reduce_with(f.clone().normalized(ord), &refs, ord)
}

/// `f` and every element of `basis` must be normalized and `basis` free of zeros.
fn reduce_with(mut f: Binomial, basis: &[&Binomial], ord: &MonomialOrder) -> Option<Binomial> {
    loop {
        if f.is_zero() {
            return None;
        }
        if let Some((g, w)) = find_divisor(f.lhs(), basis) {
            let lhs = &w * g.rhs();
            f = Binomial::new_unchecked(lhs, f.rhs().clone()).normalized(ord);
            continue;
        }
        if let Some((g, w)) = find_divisor(f.rhs(), basis) {
            // w * tail(g) < rhs < lhs, so the leading term is unchanged.
            let rhs = &w * g.rhs();
            f = Binomial::new_unchecked(f.lhs().clone(), rhs);
            continue;
        }
        return Some(f);
    }
}

fn find_divisor<'a>(m: &super::Monomial, basis: &[&'a Binomial]) -> Option<(&'a Binomial, super::Monomial)> {
    basis.iter().find_map(|g| m.div(g.lhs()).map(|w| (*g, w)))
}

/// The reduced Gröbner basis of the ideal generated by `generators`.
///
/// Output binomials are normalized (leading monomial on the left) and sorted
/// ascending by leading monomial.
pub fn buchberger(generators: &[Binomial], ord: &MonomialOrder, config: BuchbergerConfig) -> Result<Vec<Binomial>> {
    let mut engine = Engine::new(ord, config);
    for g in generators {
        let g = g.clone().normalized(ord);
        if !g.is_zero() && !engine.basis.contains(&g) {
            engine.push(g)?;
        }
    }
    while let Some((_, i, j)) = engine.pending.pop_first() {
        engine.pending_pairs.remove(&(i, j));
        if engine.skip_pair(i, j) {
            continue;
        }
        let Some(s) = s_binomial(&engine.basis[i], &engine.basis[j], ord) else {
            continue;
        };
        let view: Vec<&Binomial> = engine.view.iter().map(|&k| &engine.basis[k]).collect();
        if let Some(h) = reduce_with(s, &view, ord) {
            engine.push(h)?;
        }
    }
    Ok(engine.into_reduced())
}

struct Engine<'a> {
    ord: &'a MonomialOrder,
    config: BuchbergerConfig,
    basis: Vec<Binomial>,
    /// Basis indices sorted by leading monomial; reduction searches in this order.
    view: Vec<usize>,
    pending: BTreeSet<(u32, usize, usize)>,
    pending_pairs: HashSet<(usize, usize)>,
    pairs_created: u64,
}

impl<'a> Engine<'a> {
    fn new(ord: &'a MonomialOrder, config: BuchbergerConfig) -> Self {
        Engine {
            ord,
            config,
            basis: Vec::new(),
            view: Vec::new(),
            pending: BTreeSet::new(),
            pending_pairs: HashSet::new(),
            pairs_created: 0,
        }
    }

    fn push(&mut self, h: Binomial) -> Result<()> {
        debug_assert!(h.is_normalized(self.ord));
        let idx = self.basis.len();
        for i in 0..idx {
            self.pairs_created += 1;
            if self.pairs_created > self.config.max_pairs {
                return Err(Error::Budget { what: "Buchberger pair queue", limit: self.config.max_pairs });
            }
            let deg = self.basis[i].lhs().lcm(h.lhs()).degree();
            self.pending.insert((deg, i, idx));
            self.pending_pairs.insert((i, idx));
        }
        let pos = self
            .view
            .partition_point(|&k| self.ord.compare(self.basis[k].lhs(), h.lhs()) == Ordering::Less);
        self.view.insert(pos, idx);
        self.basis.push(h);
        Ok(())
    }

    /// Product criterion and the chain criterion.
    fn skip_pair(&self, i: usize, j: usize) -> bool {
        let (li, lj) = (self.basis[i].lhs(), self.basis[j].lhs());
        if li.is_coprime(lj) {
            return true;
        }
        let lcm = li.lcm(lj);
        let is_pending = |a: usize, b: usize| self.pending_pairs.contains(&(a.min(b), a.max(b)));
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.basis[k].lhs().divides(&lcm)
                && !is_pending(i, k)
                && !is_pending(j, k)
        })
    }

    fn into_reduced(self) -> Vec<Binomial> {
        let ord = self.ord;
        let basis = self.basis;
        let minimal: Vec<&Binomial> = basis
            .iter()
            .enumerate()
            .filter(|&(i, g)| {
                !basis.iter().enumerate().any(|(j, h)| {
                    j != i && h.lhs().divides(g.lhs()) && (h.lhs() != g.lhs() || j < i)
                })
            })
            .map(|(_, g)| g)
            .collect();
        let mut reduced: Vec<Binomial> = minimal
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let others: Vec<&Binomial> =
                    minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| *h).collect();
                reduce_with((*g).clone(), &others, ord).expect("a minimal basis element keeps its leading term")
            })
            .collect();
        reduced.sort_by(|a, b| ord.compare(a.lhs(), b.lhs()));
        reduced
    }
}

/// Checks the Buchberger criterion directly: every S-binomial reduces to zero.
pub fn is_groebner_basis(basis: &[Binomial], ord: &MonomialOrder) -> bool {
    (0..basis.len()).all(|i| {
        (i + 1..basis.len())
            .all(|j| s_binomial(&basis[i], &basis[j], ord).is_none_or(|s| reduce(&s, basis, ord).is_none()))
    })
}

/// Whether `basis` is the reduced Gröbner basis shape: normalized, leading terms
/// pairwise indivisible, and no trailing term divisible by any leading term.
pub fn is_reduced(basis: &[Binomial], ord: &MonomialOrder) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.is_normalized(ord)
            && !g.is_zero()
            && basis.iter().enumerate().all(|(j, h)| {
                !h.lhs().divides(g.rhs()) && (i == j || !h.lhs().divides(g.lhs()))
            })
    })
}

/// Minimal generators of the ideal of leading terms of `gb`.
pub fn initial_ideal(gb: &[Binomial], ord: &MonomialOrder) -> MonomialIdeal {
    MonomialIdeal::new(gb.iter().filter(|g| !g.is_zero()).map(|g| g.clone().normalized(ord).lhs().clone()))
}

/// Set equality of two binomial lists up to the global sign of each element.
pub fn same_binomials_up_to_sign(a: &[Binomial], b: &[Binomial]) -> bool {
    let ka: BTreeSet<_> = a.iter().map(Binomial::unsigned_key).collect();
    let kb: BTreeSet<_> = b.iter().map(Binomial::unsigned_key).collect();
    ka.len() == a.len() && kb.len() == b.len() && ka == kb
}
